//! The affine Weyl group of type `Ã₂` in the alcove model.
//!
//! Unit alcoves are indexed by a box `B_μ = μ + (0,1)²` in fundamental-weight
//! coordinates and a half: the lower triangle (containing `μ` in its closure)
//! or the upper one. An element `x` is identified with the alcove `xA₀`,
//! where `A₀` is the lower half of `B_0`.
//!
//! Alcove vertices are coloured by `(2a + b) mod 3`; this colouring is
//! preserved by every affine reflection. The wall of `xA₀` of type `s_t` is
//! the one opposite the vertex of colour `t`, so right multiplication by `s_t`
//! reflects that vertex through the opposite wall.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    S0,
    S1,
    S2,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::S0, Generator::S1, Generator::S2];

    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn from_index(i: u8) -> Option<Generator> {
        Generator::ALL.get(i as usize).copied()
    }

    /// The corresponding affine reflection of the plane, in weight coordinates.
    pub fn reflect(self, p: Weight) -> Weight {
        match self {
            Generator::S0 => Weight::new(1 - p.b, 1 - p.a),
            Generator::S1 => Weight::new(p.a + p.b, -p.b),
            Generator::S2 => Weight::new(-p.a, p.a + p.b),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.index())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Half {
    Lower,
    Upper,
}

/// An element of `W_a`, stored as the alcove `xA₀`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineElement {
    pub cell: Weight,
    pub half: Half,
}

fn colour(v: Weight) -> u8 {
    (2 * v.a + v.b).rem_euclid(3) as u8
}

impl AffineElement {
    pub const IDENTITY: AffineElement = AffineElement {
        cell: Weight::ZERO,
        half: Half::Lower,
    };

    pub fn new(cell: Weight, half: Half) -> Self {
        AffineElement { cell, half }
    }

    pub fn vertices(&self) -> [Weight; 3] {
        let Weight { a, b } = self.cell;
        match self.half {
            Half::Lower => [Weight::new(a, b), Weight::new(a + 1, b), Weight::new(a, b + 1)],
            Half::Upper => [
                Weight::new(a + 1, b),
                Weight::new(a, b + 1),
                Weight::new(a + 1, b + 1),
            ],
        }
    }

    fn from_vertices(vs: [Weight; 3]) -> Self {
        let a = vs.iter().map(|v| v.a).min().unwrap();
        let b = vs.iter().map(|v| v.b).min().unwrap();
        let sum: i64 = vs.iter().map(|v| v.a + v.b).sum();
        let half = if sum == 3 * (a + b) + 2 {
            Half::Lower
        } else {
            Half::Upper
        };
        AffineElement::new(Weight::new(a, b), half)
    }

    /// `x·s`: the neighbouring alcove across the wall of type `s`.
    pub fn mul_gen(&self, s: Generator) -> Self {
        let mut vs = self.vertices();
        let i = vs
            .iter()
            .position(|v| colour(*v) == s.index())
            .expect("an alcove has one vertex of each colour");
        let (p, q) = (vs[(i + 1) % 3], vs[(i + 2) % 3]);
        vs[i] = p + q - vs[i];
        Self::from_vertices(vs)
    }

    /// `s·x`: the image of the alcove under the reflection `s`.
    pub fn left_mul_gen(&self, s: Generator) -> Self {
        Self::from_vertices(self.vertices().map(|v| s.reflect(v)))
    }

    pub fn from_word(word: &[Generator]) -> Self {
        word.iter().fold(Self::IDENTITY, |x, s| x.mul_gen(*s))
    }

    pub fn mul(&self, other: &AffineElement) -> Self {
        other
            .reduced_word()
            .into_iter()
            .fold(*self, |x, s| x.mul_gen(s))
    }

    pub fn inverse(&self) -> Self {
        let mut w = self.reduced_word();
        w.reverse();
        Self::from_word(&w)
    }

    /// Number of hyperplanes separating `xA₀` from `A₀`.
    pub fn length(&self) -> u32 {
        let Weight { a, b } = self.cell;
        let up = if self.half == Half::Upper { 1 } else { 0 };
        (a.abs() + b.abs() + (a + b + up).abs()) as u32
    }

    pub fn right_descents(&self) -> Vec<Generator> {
        let l = self.length();
        Generator::ALL
            .into_iter()
            .filter(|s| self.mul_gen(*s).length() < l)
            .collect()
    }

    pub fn has_right_descent(&self, s: Generator) -> bool {
        self.mul_gen(s).length() < self.length()
    }

    /// Reduced word, choosing the smallest descent at each step from the right.
    pub fn reduced_word(&self) -> Vec<Generator> {
        let mut out = Vec::with_capacity(self.length() as usize);
        let mut x = *self;
        while let Some(s) = x.right_descents().first().copied() {
            out.push(s);
            x = x.mul_gen(s);
        }
        out.reverse();
        out
    }

    /// Minimal in its coset `W_f x`, i.e. `xA₀` is dominant.
    pub fn is_minimal(&self) -> bool {
        self.cell.is_dominant()
    }

    /// The box weight `κ(x)` of a minimal coset representative.
    pub fn kappa(&self) -> Result<Weight> {
        if self.is_minimal() {
            Ok(self.cell)
        } else {
            Err(Error::NotMinimal(*self))
        }
    }

    /// Digits of the reduced word, `id` for the identity.
    pub fn word_string(&self) -> String {
        let w = self.reduced_word();
        if w.is_empty() {
            return String::from("id");
        }
        w.iter().map(|s| char::from(b'0' + s.index())).collect()
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word_string())
    }
}

/// Parses a word of `0`/`1`/`2` digits; `id`, `e` or the empty string give
/// the identity.
impl FromStr for AffineElement {
    type Err = char;
    fn from_str(s: &str) -> core::result::Result<Self, char> {
        let s = s.trim();
        if s.is_empty() || s == "id" || s == "e" {
            return Ok(Self::IDENTITY);
        }
        let mut word = Vec::new();
        for c in s.chars() {
            let g = c
                .to_digit(10)
                .and_then(|d| Generator::from_index(d as u8))
                .ok_or(c)?;
            word.push(g);
        }
        Ok(Self::from_word(&word))
    }
}

/// `x_i = s₀s₁s₂s₀…` (`i` letters): the alcoves along the `ϖ₁` edge of the
/// dominant cone.
pub fn x_edge(i: u32) -> AffineElement {
    (0..i).fold(AffineElement::IDENTITY, |x, t| {
        x.mul_gen(Generator::from_index((t % 3) as u8).unwrap())
    })
}

/// The two alcoves of `B_μ`.
pub fn box_elements(mu: Weight) -> [AffineElement; 2] {
    [
        AffineElement::new(mu, Half::Lower),
        AffineElement::new(mu, Half::Upper),
    ]
}

/// The element of `B_μ` having `s` as a right descent.
pub fn x_mu_s(mu: Weight, s: Generator) -> Result<AffineElement> {
    if !mu.is_strictly_dominant() {
        return Err(Error::NotStrictlyDominant(mu));
    }
    let [lo, up] = box_elements(mu);
    Ok(if lo.has_right_descent(s) { lo } else { up })
}

/// All minimal coset representatives of length at most `max_len`, by length.
pub fn minimal_elements(max_len: u32) -> Vec<AffineElement> {
    let mut out = Vec::new();
    let m = max_len as i64;
    for a in 0..=m {
        for b in 0..=(m - a) {
            for x in box_elements(Weight::new(a, b)) {
                if x.length() <= max_len {
                    out.push(x);
                }
            }
        }
    }
    out.sort_by_key(|x| (x.length(), *x));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::{BTreeMap, VecDeque};
    use alloc::string::ToString;
    use proptest::prelude::*;
    use Generator::*;

    // Word-length oracle: breadth-first search of the Cayley graph.
    fn bfs_lengths(max_len: u32) -> BTreeMap<AffineElement, u32> {
        let mut seen = BTreeMap::new();
        seen.insert(AffineElement::IDENTITY, 0);
        let mut queue = VecDeque::from([AffineElement::IDENTITY]);
        while let Some(x) = queue.pop_front() {
            let l = seen[&x];
            if l == max_len {
                continue;
            }
            for s in Generator::ALL {
                let y = x.mul_gen(s);
                if let alloc::collections::btree_map::Entry::Vacant(e) = seen.entry(y) {
                    e.insert(l + 1);
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    #[test]
    fn length_matches_word_length() {
        for (x, l) in bfs_lengths(8) {
            assert_eq!(x.length(), l, "{x:?}");
        }
    }

    #[test]
    fn coxeter_relations() {
        for x in bfs_lengths(4).into_keys() {
            for s in Generator::ALL {
                assert_eq!(x.mul_gen(s).mul_gen(s), x);
                assert_eq!(x.left_mul_gen(s).left_mul_gen(s), x);
                for t in Generator::ALL {
                    if s != t {
                        let sts = x.mul_gen(s).mul_gen(t).mul_gen(s);
                        let tst = x.mul_gen(t).mul_gen(s).mul_gen(t);
                        assert_eq!(sts, tst);
                    }
                }
            }
        }
    }

    #[test]
    fn left_and_right_commute() {
        for x in bfs_lengths(4).into_keys() {
            for s in Generator::ALL {
                for t in Generator::ALL {
                    assert_eq!(x.mul_gen(s).left_mul_gen(t), x.left_mul_gen(t).mul_gen(s));
                }
            }
        }
    }

    #[test]
    fn generators_act_like_words() {
        for s in Generator::ALL {
            assert_eq!(AffineElement::IDENTITY.mul_gen(s), AffineElement::IDENTITY.left_mul_gen(s));
        }
    }

    #[test]
    fn minimal_iff_no_finite_left_descent() {
        for x in bfs_lengths(10).into_keys() {
            let oracle = [S1, S2]
                .into_iter()
                .all(|s| x.left_mul_gen(s).length() > x.length());
            assert_eq!(x.is_minimal(), oracle, "{x:?}");
        }
    }

    #[test]
    fn descent_examples() {
        assert!(AffineElement::IDENTITY.right_descents().is_empty());
        let x = AffineElement::from_word(&[S0, S1]);
        assert_eq!(x.right_descents(), [S1]);
        assert_eq!(x.to_string(), "01");
        assert_eq!("01".parse::<AffineElement>(), Ok(x));
        assert_eq!("id".parse::<AffineElement>(), Ok(AffineElement::IDENTITY));
        assert_eq!("3".parse::<AffineElement>(), Err('3'));
    }

    #[test]
    fn edge_alcoves() {
        assert_eq!(x_edge(2), AffineElement::from_word(&[S0, S1]));
        assert_eq!(x_edge(4), AffineElement::from_word(&[S0, S1, S2, S0]));
        assert_eq!(x_edge(0).kappa(), Ok(Weight::ZERO));
        assert_eq!(x_edge(1).kappa(), Ok(Weight::ZERO));
        assert_eq!(x_edge(4).kappa(), Ok(Weight::new(2, 0)));
        for i in 0..=20 {
            assert_eq!(x_edge(2 * i).kappa(), Ok(Weight::new(i as i64, 0)));
            assert_eq!(x_edge(2 * i + 1).kappa(), Ok(Weight::new(i as i64, 0)));
        }
        for i in 1..=40 {
            let x = x_edge(i);
            assert_eq!(x.length(), i);
            assert_eq!(x.right_descents().len(), 1);
        }
    }

    #[test]
    fn kappa_rejects_non_minimal() {
        let x = AffineElement::from_word(&[S1]);
        assert_eq!(x.kappa(), Err(Error::NotMinimal(x)));
    }

    #[test]
    fn box_descents_partition() {
        for a in 1..=12 {
            for b in 1..=(12 - a) {
                let [lo, up] = box_elements(Weight::new(a, b));
                let mut all = lo.right_descents();
                all.extend(up.right_descents());
                all.sort();
                assert_eq!(all, Generator::ALL);
                for s in Generator::ALL {
                    let x = x_mu_s(Weight::new(a, b), s).unwrap();
                    assert!(x.has_right_descent(s));
                    assert_eq!(x.kappa(), Ok(Weight::new(a, b)));
                }
            }
        }
        assert_eq!(
            x_mu_s(Weight::new(0, 3), S0),
            Err(Error::NotStrictlyDominant(Weight::new(0, 3)))
        );
    }

    #[test]
    fn minimal_elements_are_dominant_alcoves() {
        let xs = minimal_elements(14);
        let oracle: Vec<_> = bfs_lengths(14)
            .into_iter()
            .filter(|(x, _)| x.is_minimal())
            .map(|(x, _)| x)
            .collect();
        assert_eq!(xs.len(), oracle.len());
        for x in &xs {
            assert!(oracle.contains(x));
        }
    }

    proptest! {
        #[test]
        fn reduced_word_round_trip(word in proptest::collection::vec(0u8..3, 0..16)) {
            let w: Vec<_> = word.iter().map(|i| Generator::from_index(*i).unwrap()).collect();
            let x = AffineElement::from_word(&w);
            let r = x.reduced_word();
            prop_assert_eq!(r.len() as u32, x.length());
            prop_assert_eq!(AffineElement::from_word(&r), x);
            prop_assert_eq!(x.mul(&x.inverse()), AffineElement::IDENTITY);
        }

        #[test]
        fn multiplication_is_associative(
            u in proptest::collection::vec(0u8..3, 0..6),
            v in proptest::collection::vec(0u8..3, 0..6),
            w in proptest::collection::vec(0u8..3, 0..6),
        ) {
            let el = |ws: &[u8]| AffineElement::from_word(
                &ws.iter().map(|i| Generator::from_index(*i).unwrap()).collect::<Vec<_>>());
            let (x, y, z) = (el(&u), el(&v), el(&w));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        }
    }
}
