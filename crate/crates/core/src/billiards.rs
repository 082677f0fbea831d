//! Construction of `Z̃`: the initial set `X`, dynamics on the walls, and
//! billiards in the alcoves adjacent to each wall seed.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{
    adjacent_dominant_alcoves, check_ell, classify, reflect_direction, Direction, EllAlcove,
    PointClass, Weight,
};
use crate::multiset::{Label, LabelledPoint, PointMultiset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stage {
    Wall,
    Alcove,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Seed {
    pub point: LabelledPoint,
    pub stage: Stage,
}

impl Seed {
    pub fn wall(point: LabelledPoint) -> Self {
        Seed {
            point,
            stage: Stage::Wall,
        }
    }
}

/// Outgoing edges of the wall graph at `mu`.
///
/// Edges run right along `b = mℓ`, down-left along `a = mℓ` and up-left along
/// `a + b = mℓ` for `m ≥ 1`, between dominant weights. The two chamber axes
/// carry no edges.
pub fn wall_edges(mu: Weight, ell: i64) -> Vec<(Weight, Direction)> {
    if !mu.is_dominant() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let Weight { a, b } = mu;
    if b % ell == 0 && b >= ell {
        out.push(Direction::Right);
    }
    if (a + b) % ell == 0 && a + b >= ell && a >= 1 {
        out.push(Direction::UpLeft);
    }
    if a % ell == 0 && a >= ell && b >= 1 {
        out.push(Direction::DownLeft);
    }
    out.into_iter().map(|d| (mu.step(d), d)).collect()
}

fn unique_edge(mu: Weight, ell: i64) -> Result<Direction> {
    match wall_edges(mu, ell).as_slice() {
        [(_, d)] => Ok(*d),
        edges => Err(Error::NoUniqueEdge {
            mu,
            edges: edges.len(),
        }),
    }
}

/// The set `X` of points `(kϖ₁, 2k)` with `2k ≤ max_n`, and the corner seeds
/// `(kℓϖ₁, 2kℓ)` for `k > 0`.
pub fn step1(ell: i64, max_n: u32) -> Result<(PointMultiset, Vec<Seed>)> {
    check_ell(ell)?;
    let mut x = PointMultiset::new();
    let mut seeds = Vec::new();
    for k in 0..=(max_n / 2) {
        let p = LabelledPoint::new(Weight::new(k as i64, 0), Label::new(2 * k, 0));
        x.add(p);
        if k > 0 && (k as i64) % ell == 0 {
            seeds.push(Seed::wall(p));
        }
    }
    Ok((x, seeds))
}

pub fn rest(p: LabelledPoint) -> LabelledPoint {
    LabelledPoint::new(p.mu, p.label.bump(3, 1))
}

pub fn small_step(p: LabelledPoint, edge: Direction) -> LabelledPoint {
    LabelledPoint::new(p.mu.step(edge), p.label.bump(2, 0))
}

/// Small step along the unique wall-graph edge at `p`.
pub fn small_step_on_wall(p: LabelledPoint, ell: i64) -> Result<LabelledPoint> {
    Ok(small_step(p, unique_edge(p.mu, ell)?))
}

pub fn giant_leap(p: LabelledPoint, ell: i64) -> Result<Vec<LabelledPoint>> {
    check_ell(ell)?;
    match classify(p.mu, ell) {
        PointClass::Wall(_) => {}
        PointClass::Regular => return Err(Error::NotSingleWall(p.mu)),
        _ => return Err(Error::NotLeapable(p.mu)),
    }
    let d = unique_edge(p.mu, ell)?;
    let mut corner = p.mu;
    let mut j = 0;
    loop {
        if j == ell - 2 {
            return Err(Error::NoCornerReached(p.mu));
        }
        if !wall_edges(corner, ell).iter().any(|&(_, e)| e == d) {
            return Err(Error::NoCornerReached(p.mu));
        }
        corner = corner.step(d);
        j += 1;
        if classify(corner, ell) == PointClass::Corner {
            break;
        }
    }
    let label = p.label.bump(2 * ell as u32 + 1, 1);
    let mut out = Vec::new();
    for (_, e) in wall_edges(corner, ell) {
        if e == d {
            continue;
        }
        let mut mu = corner;
        for _ in 0..(ell - 1 - j) {
            if !wall_edges(mu, ell).iter().any(|&(_, f)| f == e) {
                return Err(Error::NoUniqueEdge { mu, edges: 0 });
            }
            mu = mu.step(e);
        }
        out.push(LabelledPoint::new(mu, label));
    }
    Ok(out)
}

/// One application of the wall rules. Returns every produced point and the
/// subset of them that are new seeds.
pub fn expand_wall_seed(q: LabelledPoint, ell: i64) -> Result<(Vec<LabelledPoint>, Vec<LabelledPoint>)> {
    check_ell(ell)?;
    let class = classify(q.mu, ell);
    let mut points = Vec::new();
    match class {
        PointClass::Corner | PointClass::AlmostCorner(_) => {
            let steps = if class == PointClass::Corner { ell - 1 } else { ell - 2 };
            let mut cur = q;
            if class != PointClass::Corner {
                cur = rest(cur);
                points.push(cur);
            }
            for _ in 0..steps {
                cur = small_step_on_wall(cur, ell)?;
                points.push(cur);
            }
            cur = rest(cur);
            points.push(cur);
            Ok((points, vec![cur]))
        }
        _ => {
            let out = giant_leap(q, ell)?;
            Ok((out.clone(), out))
        }
    }
}

/// Result of running the wall rules to closure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WallDynamics {
    /// Every produced point with `n ≤ max_n`; the starting seeds are excluded.
    pub points: PointMultiset,
    /// Every seed that was expanded, starting seeds included.
    pub seeds: PointMultiset,
}

/// Breadth-first closure of the wall rules from the given seeds, smallest
/// label first. Identical seeds are merged and carry their multiplicity.
pub fn wall_stage(seeds: &PointMultiset, ell: i64, max_n: u32) -> Result<WallDynamics> {
    check_ell(ell)?;
    let mut queue: BTreeMap<LabelledPoint, u64> = seeds
        .iter()
        .filter(|(p, _)| p.label.n <= max_n)
        .map(|(p, m)| (*p, m))
        .collect();
    let mut out = WallDynamics::default();
    while let Some((q, mult)) = queue.pop_first() {
        out.seeds.insert(q, mult);
        let (points, next) = expand_wall_seed(q, ell)?;
        for p in points.into_iter().filter(|p| p.label.n <= max_n) {
            out.points.insert(p, mult);
        }
        for s in next.into_iter().filter(|p| p.label.n <= max_n) {
            *queue.entry(s).or_insert(0) += mult;
        }
    }
    Ok(out)
}

pub fn dynamics_on_walls(q: Seed, ell: i64, max_n: u32) -> Result<WallDynamics> {
    let start: PointMultiset = [q.point].into_iter().collect();
    wall_stage(&start, ell, max_n)
}

/// The unique direction leading from a wall point into the interior of `alcove`.
pub fn interior_direction(mu: Weight, alcove: &EllAlcove) -> Result<Direction> {
    let mut dirs = Direction::ALL
        .into_iter()
        .filter(|&d| alcove.interior_contains(mu.step(d)));
    match (dirs.next(), dirs.next()) {
        (Some(d), None) => Ok(d),
        _ => Err(Error::NoInteriorEdge(mu)),
    }
}

/// Billiard in `alcove` started at the wall point `q`. The returned list begins
/// with `q` itself and stops before the first label exceeding `max_n`.
pub fn billiard_trajectory(
    q: LabelledPoint,
    alcove: &EllAlcove,
    max_n: u32,
) -> Result<Vec<LabelledPoint>> {
    let ell = alcove.ell;
    check_ell(ell)?;
    match classify(q.mu, ell) {
        PointClass::Wall(_) | PointClass::AlmostCorner(_) => {}
        _ => return Err(Error::NotSingleWall(q.mu)),
    }
    if !alcove.closure_contains(q.mu) {
        return Err(Error::NoInteriorEdge(q.mu));
    }
    let mut dir = interior_direction(q.mu, alcove)?;
    let mut point = q.mu;
    let mut label = q.label;
    let mut sign = 1;
    let mut out = Vec::new();
    if label.n <= max_n {
        out.push(q);
    }
    loop {
        let next = point.step(dir);
        match classify(next, ell) {
            PointClass::Regular => {
                point = next;
                label = label.bump(2, 0);
            }
            PointClass::Wall(family) | PointClass::AlmostCorner(family) => {
                dir = reflect_direction(dir, family)?;
                label = label.bump(3, sign);
                sign = -sign;
            }
            PointClass::Corner => return Err(Error::CornerHit(next)),
        }
        if label.n > max_n {
            return Ok(out);
        }
        out.push(LabelledPoint::new(point, label));
    }
}

/// Billiard points spawned by one seed: empty for corners and almost corners,
/// otherwise both adjacent trajectories with `q` removed from each.
pub fn lambda_q(q: LabelledPoint, ell: i64, max_n: u32) -> Result<PointMultiset> {
    check_ell(ell)?;
    let mut out = PointMultiset::new();
    match classify(q.mu, ell) {
        PointClass::Wall(_) => {}
        PointClass::Regular => return Err(Error::NotSingleWall(q.mu)),
        _ => return Ok(out),
    }
    for alcove in adjacent_dominant_alcoves(q.mu, ell)? {
        let mut lambda: PointMultiset = billiard_trajectory(q, &alcove, max_n)?.into_iter().collect();
        lambda.remove(&q, 1);
        out.union_with(&lambda);
    }
    Ok(out)
}

/// The multiset `Z̃ = Z ∖ X`, complete for every label `n ≤ max_n`.
pub fn build_ztilde(ell: i64, max_n: u32) -> Result<PointMultiset> {
    let (x, seeds) = step1(ell, max_n)?;
    let start: PointMultiset = seeds.iter().map(|s| s.point).collect();
    let walls = wall_stage(&start, ell, max_n)?;
    let mut z = x.clone();
    z.union_with(&walls.points);
    for (q, mult) in walls.seeds.iter() {
        z.union_with(&lambda_q(*q, ell, max_n)?.scaled(mult));
    }
    Ok(z.difference(&x))
}
