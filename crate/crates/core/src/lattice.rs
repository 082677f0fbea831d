//! Integer model of the `SL_3` weight lattice.
//!
//! A weight `aϖ₁ + bϖ₂` is stored as its fundamental-weight coordinates
//! `(a, b)`. Its pairings with the three positive coroots are `a`, `b` and
//! `a + b`, so every wall test below is a congruence modulo `ℓ`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Sub};

use crate::error::{Error, Result};

/// Rejects `ℓ < 3`.
pub fn check_ell(ell: i64) -> Result<()> {
    if ell < 3 {
        Err(Error::InvalidEll(ell))
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        Weight { a, b }
    }

    /// Pairings with the positive coroots, in the order `A1, A2, A12`.
    pub fn pairings(self) -> [i64; 3] {
        [self.a, self.b, self.a + self.b]
    }

    pub fn pairing(self, family: WallFamily) -> i64 {
        match family {
            WallFamily::A1 => self.a,
            WallFamily::A2 => self.b,
            WallFamily::A12 => self.a + self.b,
        }
    }

    pub fn is_dominant(self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    pub fn is_strictly_dominant(self) -> bool {
        self.a > 0 && self.b > 0
    }

    pub fn step(self, d: Direction) -> Weight {
        self + d.vector()
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Add<Direction> for Weight {
    type Output = Weight;
    fn add(self, rhs: Direction) -> Weight {
        self.step(rhs)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// One of the three lattice edge vectors `ϖ₁`, `ϖ₂ − ϖ₁`, `−ϖ₂`.
///
/// Drawn with `ϖ₁` pointing right and `ϖ₂` at 60°, these point at 0°, 120°
/// and 240° respectively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    /// `(1, 0)`
    Right,
    /// `(-1, 1)`
    UpLeft,
    /// `(0, -1)`
    DownLeft,
}

impl Direction {
    pub const ALL: [Direction; 3] = [Direction::Right, Direction::UpLeft, Direction::DownLeft];

    pub fn vector(self) -> Weight {
        match self {
            Direction::Right => Weight::new(1, 0),
            Direction::UpLeft => Weight::new(-1, 1),
            Direction::DownLeft => Weight::new(0, -1),
        }
    }

    pub fn from_vector(v: Weight) -> Option<Direction> {
        Direction::ALL.into_iter().find(|d| d.vector() == v)
    }

    /// The wall family this direction runs along (pairing zero).
    pub fn parallel_family(self) -> WallFamily {
        match self {
            Direction::Right => WallFamily::A2,
            Direction::UpLeft => WallFamily::A12,
            Direction::DownLeft => WallFamily::A1,
        }
    }
}

/// The three families of reflecting hyperplanes, tagged by which coroot
/// pairing is held constant on them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WallFamily {
    /// `a ∈ ℓℤ`
    A1,
    /// `b ∈ ℓℤ`
    A2,
    /// `a + b ∈ ℓℤ`
    A12,
}

impl WallFamily {
    pub const ALL: [WallFamily; 3] = [WallFamily::A1, WallFamily::A2, WallFamily::A12];

    /// Positive root in fundamental-weight coordinates (Cartan matrix of `A₂`).
    pub fn root(self) -> Weight {
        match self {
            WallFamily::A1 => Weight::new(2, -1),
            WallFamily::A2 => Weight::new(-1, 2),
            WallFamily::A12 => Weight::new(1, 1),
        }
    }

    /// The unique direction running along walls of this family.
    pub fn along(self) -> Direction {
        match self {
            WallFamily::A1 => Direction::DownLeft,
            WallFamily::A2 => Direction::Right,
            WallFamily::A12 => Direction::UpLeft,
        }
    }
}

/// A single `ℓ`-hyperplane `⟨α∨, λ⟩ = level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wall {
    pub family: WallFamily,
    pub level: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointClass {
    Regular,
    /// On exactly one `ℓ`-wall. A point on two walls is on all three.
    Wall(WallFamily),
    Corner,
    AlmostCorner(WallFamily),
}

impl PointClass {
    pub fn is_regular(self) -> bool {
        matches!(self, PointClass::Regular)
    }

    /// Anything lying on at least one wall.
    pub fn is_wall_point(self) -> bool {
        !self.is_regular()
    }

    pub fn family(self) -> Option<WallFamily> {
        match self {
            PointClass::Wall(f) | PointClass::AlmostCorner(f) => Some(f),
            _ => None,
        }
    }
}

fn is_corner(mu: Weight, ell: i64) -> bool {
    mu.a.rem_euclid(ell) == 0 && mu.b.rem_euclid(ell) == 0
}

/// Classifies a weight relative to the `ℓ`-hyperplanes.
///
/// Corner detection is pure congruence. A wall point is an almost corner when
/// it is one lattice step `c → c + γ` away from some corner `c`.
pub fn classify(mu: Weight, ell: i64) -> PointClass {
    if is_corner(mu, ell) {
        return PointClass::Corner;
    }
    let family = WallFamily::ALL
        .into_iter()
        .find(|&f| mu.pairing(f).rem_euclid(ell) == 0);
    match family {
        None => PointClass::Regular,
        Some(f) => {
            if Direction::ALL
                .into_iter()
                .any(|d| is_corner(mu - d.vector(), ell))
            {
                PointClass::AlmostCorner(f)
            } else {
                PointClass::Wall(f)
            }
        }
    }
}

/// Reflects a direction in a wall: `d − ⟨α∨, d⟩α`.
pub fn reflect_direction(d: Direction, family: WallFamily) -> Result<Direction> {
    let v = d.vector();
    let p = v.pairing(family);
    if p == 0 {
        return Err(Error::ParallelDirection(d, family));
    }
    let r = family.root();
    let image = Weight::new(v.a - p * r.a, v.b - p * r.b);
    Ok(Direction::from_vector(image).expect("direction set is closed under reflection"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Up,
    Down,
}

/// An `ℓ`-alcove: the open triangle with `rℓ < a`, `sℓ < b` and
/// `(r+s)ℓ < a+b < (r+s+1)ℓ` (up) or `a < (r+1)ℓ`, `b < (s+1)ℓ`,
/// `(r+s+1)ℓ < a+b` (down).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EllAlcove {
    pub r: i64,
    pub s: i64,
    pub orientation: Orientation,
    pub ell: i64,
}

impl EllAlcove {
    pub fn new(r: i64, s: i64, orientation: Orientation, ell: i64) -> Self {
        EllAlcove {
            r,
            s,
            orientation,
            ell,
        }
    }

    /// The three bounding walls.
    pub fn walls(&self) -> [Wall; 3] {
        let (r, s, l) = (self.r, self.s, self.ell);
        match self.orientation {
            Orientation::Up => [
                Wall { family: WallFamily::A1, level: r * l },
                Wall { family: WallFamily::A2, level: s * l },
                Wall { family: WallFamily::A12, level: (r + s + 1) * l },
            ],
            Orientation::Down => [
                Wall { family: WallFamily::A1, level: (r + 1) * l },
                Wall { family: WallFamily::A2, level: (s + 1) * l },
                Wall { family: WallFamily::A12, level: (r + s + 1) * l },
            ],
        }
    }

    // Signed position of `mu` relative to a wall: positive means the inside.
    fn side(&self, wall: Wall, mu: Weight) -> i64 {
        let d = mu.pairing(wall.family) - wall.level;
        match (self.orientation, wall.family) {
            (Orientation::Up, WallFamily::A12) => -d,
            (Orientation::Up, _) => d,
            (Orientation::Down, WallFamily::A12) => d,
            (Orientation::Down, _) => -d,
        }
    }

    pub fn interior_contains(&self, mu: Weight) -> bool {
        self.walls().iter().all(|&w| self.side(w, mu) > 0)
    }

    pub fn closure_contains(&self, mu: Weight) -> bool {
        self.walls().iter().all(|&w| self.side(w, mu) >= 0)
    }

    /// Walls of this alcove through a closure point.
    pub fn walls_through(&self, mu: Weight) -> Vec<Wall> {
        self.walls()
            .into_iter()
            .filter(|&w| self.side(w, mu) == 0)
            .collect()
    }

    pub fn is_dominant(&self) -> bool {
        self.r >= 0 && self.s >= 0
    }

    /// Lattice points of the open alcove.
    pub fn interior_points(&self) -> Vec<Weight> {
        let l = self.ell;
        let mut out = Vec::new();
        for a in self.r * l..=(self.r + 1) * l {
            for b in self.s * l..=(self.s + 1) * l {
                let mu = Weight::new(a, b);
                if self.interior_contains(mu) {
                    out.push(mu);
                }
            }
        }
        out
    }
}

/// The dominant `ℓ`-alcoves whose closure contains a single-wall point.
pub fn adjacent_dominant_alcoves(mu: Weight, ell: i64) -> Result<Vec<EllAlcove>> {
    check_ell(ell)?;
    match classify(mu, ell) {
        PointClass::Wall(_) | PointClass::AlmostCorner(_) => {}
        _ => return Err(Error::NotSingleWall(mu)),
    }
    let (r0, s0) = (mu.a.div_euclid(ell), mu.b.div_euclid(ell));
    let mut out = Vec::new();
    for r in [r0 - 1, r0] {
        for s in [s0 - 1, s0] {
            for orientation in [Orientation::Up, Orientation::Down] {
                let alcove = EllAlcove::new(r, s, orientation, ell);
                if alcove.is_dominant() && alcove.closure_contains(mu) {
                    out.push(alcove);
                }
            }
        }
    }
    Ok(out)
}
