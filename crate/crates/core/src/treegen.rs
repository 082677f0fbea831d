//! The arborescence `J∞` built from the components `I` and `J`, its labelled
//! map into the weight lattice, and the multiset `Z′` it produces.
//!
//! `J∞` is never materialized. Component kinds are a function of the
//! component's level (distance in components from the root), and the labelled
//! map is evaluated depth-first with pruning at non-strictly-dominant weights
//! and at labels above the truncation bound.

use alloc::vec;
use alloc::vec::Vec;

use crate::billiards::build_ztilde;
use crate::error::{Error, Result};
use crate::lattice::{check_ell, classify, reflect_direction, Direction, PointClass, Weight};
use crate::multiset::{Label, LabelledPoint, PointMultiset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    /// A directed path on `ℓ + 1` nodes.
    I,
    /// A source with two unbounded branches, each carrying an offshoot sink
    /// at the branch node `ℓ − 1` steps from the source.
    J,
}

/// A layered arborescence: every sink of layer `t` is glued to the source of
/// a fresh component of kind `kind_at(t + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedTree {
    prefix: Vec<ComponentKind>,
    cycle: Vec<ComponentKind>,
}

impl SeedTree {
    pub fn i() -> Self {
        SeedTree {
            prefix: vec![ComponentKind::I],
            cycle: Vec::new(),
        }
    }

    pub fn j() -> Self {
        SeedTree {
            prefix: vec![ComponentKind::J],
            cycle: Vec::new(),
        }
    }

    /// `A * B`: a fresh copy of `B` glued onto every sink of `A`.
    pub fn star(&self, other: &SeedTree) -> Result<SeedTree> {
        if !self.cycle.is_empty() || self.prefix.is_empty() {
            return Err(Error::NoSinks);
        }
        let mut prefix = self.prefix.clone();
        prefix.extend_from_slice(&other.prefix);
        Ok(SeedTree {
            prefix,
            cycle: other.cycle.clone(),
        })
    }

    /// `A^{*k}`, with `A^{*0}` the empty tree.
    pub fn power(&self, k: usize) -> Result<SeedTree> {
        if !self.cycle.is_empty() {
            return Err(Error::NoSinks);
        }
        let mut prefix = Vec::new();
        for _ in 0..k {
            prefix.extend_from_slice(&self.prefix);
        }
        Ok(SeedTree {
            prefix,
            cycle: Vec::new(),
        })
    }

    /// `A^{*∞}`.
    pub fn repeat(&self) -> Result<SeedTree> {
        if !self.cycle.is_empty() || self.prefix.is_empty() {
            return Err(Error::NoSinks);
        }
        Ok(SeedTree {
            prefix: Vec::new(),
            cycle: self.prefix.clone(),
        })
    }

    /// `(I * J^{*(ℓ−2)})^{*∞}`.
    pub fn j_infinity(ell: i64) -> Result<SeedTree> {
        check_ell(ell)?;
        SeedTree::i()
            .star(&SeedTree::j().power(ell as usize - 2)?)?
            .repeat()
    }

    pub fn kind_at(&self, level: usize) -> Option<ComponentKind> {
        if level < self.prefix.len() {
            Some(self.prefix[level])
        } else if self.cycle.is_empty() {
            None
        } else {
            Some(self.cycle[(level - self.prefix.len()) % self.cycle.len()])
        }
    }

    pub fn is_finite(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Explicit node list of a finite tree, with every `J` branch cut after
    /// `branch_len` nodes (at least `ℓ − 1`). Parents precede children.
    pub fn materialize(&self, ell: i64, branch_len: u32) -> Result<Vec<ExplicitNode>> {
        check_ell(ell)?;
        if !self.is_finite() {
            return Err(Error::NoSinks);
        }
        let l = ell as u32;
        let branch_len = branch_len.max(l - 1);
        let mut nodes = Vec::new();
        let mut next_component = 0u64;
        // (level, index of the node acting as this component's source)
        let mut pending: Vec<(usize, Option<usize>)> = vec![(0, None)];
        while let Some((level, src)) = pending.pop() {
            let Some(kind) = self.kind_at(level) else {
                continue;
            };
            let component = next_component;
            next_component += 1;
            let handle = |tag| NodeHandle {
                component,
                level: level as u32,
                kind,
                tag,
            };
            let source = match src {
                Some(i) => {
                    nodes[i] = ExplicitNode {
                        handle: handle(NodeTag::Source),
                        ..nodes[i]
                    };
                    i
                }
                None => {
                    nodes.push(ExplicitNode {
                        handle: handle(NodeTag::Source),
                        parent: None,
                    });
                    nodes.len() - 1
                }
            };
            match kind {
                ComponentKind::I => {
                    let mut prev = source;
                    for i in 1..l {
                        nodes.push(ExplicitNode {
                            handle: handle(NodeTag::Path(i)),
                            parent: Some(prev),
                        });
                        prev = nodes.len() - 1;
                    }
                    nodes.push(ExplicitNode {
                        handle: handle(NodeTag::Sink(None)),
                        parent: Some(prev),
                    });
                    pending.push((level + 1, Some(nodes.len() - 1)));
                }
                ComponentKind::J => {
                    for side in [Side::First, Side::Second] {
                        let mut prev = source;
                        for depth in 1..=branch_len {
                            nodes.push(ExplicitNode {
                                handle: handle(NodeTag::Branch { side, depth }),
                                parent: Some(prev),
                            });
                            prev = nodes.len() - 1;
                            if depth == l - 1 {
                                nodes.push(ExplicitNode {
                                    handle: handle(NodeTag::Sink(Some(side))),
                                    parent: Some(prev),
                                });
                                pending.push((level + 1, Some(nodes.len() - 1)));
                            }
                        }
                    }
                }
            }
        }
        Ok(nodes)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeTag {
    /// Source of the component; a glued sink of the previous layer.
    Source,
    /// Interior node of an `I` path, `1 ≤ i ≤ ℓ − 1`.
    Path(u32),
    Branch { side: Side, depth: u32 },
    /// A sink with nothing glued on (finite trees only). `None` for `I`.
    Sink(Option<Side>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NodeHandle {
    pub component: u64,
    pub level: u32,
    pub kind: ComponentKind,
    pub tag: NodeTag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeType {
    Wall,
    AlmostCorner,
    Interior,
}

impl NodeHandle {
    pub fn depth(&self, ell: i64) -> u32 {
        match self.tag {
            NodeTag::Source => 0,
            NodeTag::Path(i) => i,
            NodeTag::Branch { depth, .. } => depth,
            NodeTag::Sink(_) => ell as u32,
        }
    }

    pub fn node_type(&self) -> NodeType {
        match (self.kind, self.tag) {
            (ComponentKind::I, NodeTag::Source) => NodeType::AlmostCorner,
            (ComponentKind::I, _) | (ComponentKind::J, NodeTag::Source) => NodeType::Wall,
            _ => NodeType::Interior,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExplicitNode {
    pub handle: NodeHandle,
    pub parent: Option<usize>,
}

/// One evaluated node of the labelled map. `id` numbers nodes in visiting
/// order; `parent` refers to such an id.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ImageNode {
    pub id: u64,
    pub parent: Option<u64>,
    pub handle: NodeHandle,
    pub image: LabelledPoint,
    pub parent_image: Option<LabelledPoint>,
}

/// Checks the wall/almost-corner correspondence at one node. The first path
/// node of an `I` component repeats the almost corner at its source, so there
/// only the wall half is required.
fn check_node(handle: &NodeHandle, mu: Weight, ell: i64) -> Result<()> {
    let class = classify(mu, ell);
    let is_wall = class.is_wall_point();
    let is_almost = matches!(class, PointClass::AlmostCorner(_));
    let ok = match handle.node_type() {
        NodeType::AlmostCorner => is_almost,
        NodeType::Wall if handle.tag == NodeTag::Path(1) => is_wall,
        NodeType::Wall => is_wall && !is_almost,
        NodeType::Interior => !is_wall,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::WallPropertyViolation {
            mu,
            reason: match handle.node_type() {
                NodeType::AlmostCorner => "almost-corner node not mapped to an almost corner",
                NodeType::Wall => "wall node not mapped to a plain wall point",
                NodeType::Interior => "interior node mapped to a wall point",
            },
        })
    }
}

// The step `c → μ` from the unique corner adjacent to an almost corner.
fn corner_direction(mu: Weight, ell: i64) -> Option<Direction> {
    Direction::ALL
        .into_iter()
        .find(|d| classify(mu - d.vector(), ell) == PointClass::Corner)
}

// An emitted node: its id and image.
type Emitted = (u64, LabelledPoint);

struct Walker<'a, F: FnMut(&ImageNode)> {
    tree: &'a SeedTree,
    ell: i64,
    max_n: u32,
    prune: bool,
    next_component: u64,
    next_id: u64,
    visit: F,
}

impl<F: FnMut(&ImageNode)> Walker<'_, F> {
    // `None` when the node, and with it its subtree, is cut off.
    fn emit(
        &mut self,
        handle: NodeHandle,
        image: LabelledPoint,
        parent: Option<Emitted>,
    ) -> Result<Option<Emitted>> {
        if image.label.n > self.max_n {
            return Ok(None);
        }
        if self.prune && !image.mu.is_strictly_dominant() {
            return Ok(None);
        }
        check_node(&handle, image.mu, self.ell)?;
        let id = self.next_id;
        self.next_id += 1;
        (self.visit)(&ImageNode {
            id,
            parent: parent.map(|p| p.0),
            handle,
            image,
            parent_image: parent.map(|p| p.1),
        });
        Ok(Some((id, image)))
    }

    fn component(&mut self, level: u32, source: Emitted) -> Result<()> {
        let Some(kind) = self.tree.kind_at(level as usize) else {
            return Ok(());
        };
        let component = self.next_component;
        self.next_component += 1;
        let handle = |tag| NodeHandle {
            component,
            level,
            kind,
            tag,
        };
        let ell = self.ell;
        let src = source.1;
        match kind {
            ComponentKind::I => {
                let gamma = corner_direction(src.mu, ell).ok_or(Error::WallPropertyViolation {
                    mu: src.mu,
                    reason: "I component not sourced at an almost corner",
                })?;
                let first = LabelledPoint::new(src.mu, src.label.bump(3, 1));
                let Some(mut prev) = self.emit(handle(NodeTag::Path(1)), first, Some(source))? else {
                    return Ok(());
                };
                for i in 2..ell as u32 {
                    let cur = LabelledPoint::new(prev.1.mu.step(gamma), prev.1.label.bump(2, 0));
                    match self.emit(handle(NodeTag::Path(i)), cur, Some(prev))? {
                        Some(e) => prev = e,
                        None => return Ok(()),
                    }
                }
                let sink = LabelledPoint::new(prev.1.mu, prev.1.label.bump(3, 1));
                self.glue(level, component, kind, sink, prev, None)
            }
            ComponentKind::J => {
                let dirs: Vec<Direction> = Direction::ALL
                    .into_iter()
                    .filter(|d| classify(src.mu.step(*d), ell).is_regular())
                    .collect();
                if dirs.len() != 2 {
                    return Err(Error::WallPropertyViolation {
                        mu: src.mu,
                        reason: "J source does not have exactly two regular neighbours",
                    });
                }
                for (side, d0) in [Side::First, Side::Second].into_iter().zip(dirs) {
                    self.branch(level, component, side, source, d0)?;
                }
                Ok(())
            }
        }
    }

    fn glue(
        &mut self,
        level: u32,
        component: u64,
        kind: ComponentKind,
        sink: LabelledPoint,
        parent: Emitted,
        side: Option<Side>,
    ) -> Result<()> {
        let handle = match self.tree.kind_at(level as usize + 1) {
            Some(next) => NodeHandle {
                component: self.next_component,
                level: level + 1,
                kind: next,
                tag: NodeTag::Source,
            },
            None => NodeHandle {
                component,
                level,
                kind,
                tag: NodeTag::Sink(side),
            },
        };
        if let Some(e) = self.emit(handle, sink, Some(parent))? {
            if handle.tag == NodeTag::Source {
                self.component(level + 1, e)?;
            }
        }
        Ok(())
    }

    fn branch(
        &mut self,
        level: u32,
        component: u64,
        side: Side,
        source: Emitted,
        mut dir: Direction,
    ) -> Result<()> {
        let ell = self.ell;
        let mut mu = source.1.mu;
        let mut label = source.1.label;
        let mut sign = 1;
        let mut prev = source;
        for depth in 1.. {
            let next = mu.step(dir);
            match classify(next, ell) {
                PointClass::Regular => {
                    mu = next;
                    label = label.bump(2, 0);
                }
                PointClass::Wall(f) | PointClass::AlmostCorner(f) => {
                    dir = reflect_direction(dir, f)?;
                    label = label.bump(3, sign);
                    sign = -sign;
                }
                PointClass::Corner => return Err(Error::CornerHit(next)),
            }
            let handle = NodeHandle {
                component,
                level,
                kind: ComponentKind::J,
                tag: NodeTag::Branch { side, depth },
            };
            let Some(cur) = self.emit(handle, LabelledPoint::new(mu, label), Some(prev))? else {
                return Ok(());
            };
            if depth == ell as u32 - 1 {
                let off = LabelledPoint::new(mu.step(dir), label.bump(2, 0));
                if !classify(off.mu, ell).is_wall_point() {
                    return Err(Error::WallPropertyViolation {
                        mu: off.mu,
                        reason: "offshoot is not a wall point",
                    });
                }
                self.glue(level, component, ComponentKind::J, off, cur, Some(side))?;
            }
            prev = cur;
        }
        Ok(())
    }
}

/// Evaluates the labelled map on `tree` with root image `(λ, label)`, calling
/// `visit` on every retained node in depth-first order.
///
/// With `prune` set, nodes whose weight is not strictly dominant are dropped
/// along with everything below them. Nodes with label above `max_n` are always
/// dropped, which is what keeps the traversal finite.
pub fn walk_tree<F: FnMut(&ImageNode)>(
    tree: &SeedTree,
    lambda: Weight,
    label: Label,
    ell: i64,
    max_n: u32,
    prune: bool,
    visit: F,
) -> Result<()> {
    check_ell(ell)?;
    if !matches!(classify(lambda, ell), PointClass::AlmostCorner(_)) {
        return Err(Error::NotAlmostCorner(lambda));
    }
    let mut walker = Walker {
        tree,
        ell,
        max_n,
        prune,
        next_component: 0,
        next_id: 0,
        visit,
    };
    let root = NodeHandle {
        component: 0,
        level: 0,
        kind: tree.kind_at(0).ok_or(Error::NoSinks)?,
        tag: NodeTag::Source,
    };
    if let Some(e) = walker.emit(root, LabelledPoint::new(lambda, label), None)? {
        walker.component(0, e)?;
    }
    Ok(())
}

/// Weights of `Φ_λ` on `J∞`, unpruned, down to the given label depth
/// (labels start at 0 at the root).
pub fn phi(lambda: Weight, ell: i64, max_n: u32) -> Result<Vec<ImageNode>> {
    let tree = SeedTree::j_infinity(ell)?;
    let mut out = Vec::new();
    walk_tree(&tree, lambda, Label::new(0, 0), ell, max_n, false, |n| out.push(*n))?;
    Ok(out)
}

/// `Φ̃` on `J∞` for the seed `(λ, label)`, pruned and truncated at `max_n`.
pub fn phi_tilde(lambda: Weight, label: Label, ell: i64, max_n: u32) -> Result<Vec<ImageNode>> {
    let tree = SeedTree::j_infinity(ell)?;
    let mut out = Vec::new();
    walk_tree(&tree, lambda, label, ell, max_n, true, |n| out.push(*n))?;
    Ok(out)
}

/// Multiset of the pruned, truncated image of `Φ̃`, root included.
pub fn phi_tilde_multiset(lambda: Weight, label: Label, ell: i64, max_n: u32) -> Result<PointMultiset> {
    let tree = SeedTree::j_infinity(ell)?;
    let mut out = PointMultiset::new();
    walk_tree(&tree, lambda, label, ell, max_n, true, |n| out.add(n.image))?;
    Ok(out)
}

/// Removes every node whose weight is not strictly dominant, together with
/// everything below it. Parents must precede children.
pub fn prune(nodes: &[ImageNode]) -> Vec<ImageNode> {
    let mut dead = alloc::collections::BTreeSet::new();
    let mut kept = Vec::new();
    for n in nodes {
        let parent_dead = n.parent.is_some_and(|p| dead.contains(&p));
        if parent_dead || !n.image.mu.is_strictly_dominant() {
            dead.insert(n.id);
        } else {
            kept.push(*n);
        }
    }
    kept
}

/// Which formula to use for the root weights `λ_m`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LambdaVariant {
    /// `λ_m = (ℓ−1)m ϖ₁ + ϖ₂`; an almost corner only for `m = 1`.
    Printed,
    /// `λ_m = (mℓ − 1)ϖ₁ + ϖ₂`.
    #[default]
    Corrected,
}

impl LambdaVariant {
    pub fn lambda(self, m: i64, ell: i64) -> Weight {
        match self {
            LambdaVariant::Printed => Weight::new((ell - 1) * m, 1),
            LambdaVariant::Corrected => Weight::new(m * ell - 1, 1),
        }
    }
}

/// The seed `g_m = (λ_m, (2mℓ − 1)(v⁻¹))`.
pub fn g_m(m: i64, ell: i64, variant: LambdaVariant) -> LabelledPoint {
    LabelledPoint::new(
        variant.lambda(m, ell),
        Label::new((2 * m * ell - 1) as u32, -1),
    )
}

/// The seeds `g_m` with label at most `max_n`.
pub fn seeds_up_to(ell: i64, max_n: u32, variant: LambdaVariant) -> Vec<LabelledPoint> {
    (1..)
        .map(|m| g_m(m, ell, variant))
        .take_while(|g| g.label.n <= max_n)
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZPrime {
    /// Union of the images of all accepted seeds, seeds included.
    pub points: PointMultiset,
    pub accepted: Vec<LabelledPoint>,
    /// Seeds whose weight is not an almost corner and so have no image.
    pub rejected: Vec<LabelledPoint>,
}

pub fn build_zprime(ell: i64, max_n: u32, variant: LambdaVariant) -> Result<ZPrime> {
    check_ell(ell)?;
    let mut out = ZPrime::default();
    for g in seeds_up_to(ell, max_n, variant) {
        match phi_tilde_multiset(g.mu, g.label, ell, max_n) {
            Ok(img) => {
                out.points.union_with(&img);
                out.accepted.push(g);
            }
            Err(Error::NotAlmostCorner(_)) => out.rejected.push(g),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub point: LabelledPoint,
    /// Multiplicity in `Z̃` minus multiplicity in `Z′ ∖ {g_m}`.
    pub delta: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub ell: i64,
    pub max_n: u32,
    pub variant: LambdaVariant,
    pub ztilde_total: u64,
    pub zprime_total: u64,
    pub rejected_seeds: Vec<LabelledPoint>,
    pub discrepancies: Vec<Discrepancy>,
}

impl LemmaReport {
    pub fn is_equal(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Compares two multisets point by point.
pub fn compare(ztilde: &PointMultiset, zprime: &PointMultiset) -> Vec<Discrepancy> {
    let mut keys: Vec<LabelledPoint> = ztilde.iter().map(|(p, _)| *p).collect();
    keys.extend(zprime.iter().map(|(p, _)| *p));
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter_map(|p| {
            let delta = ztilde.multiplicity(&p) as i64 - zprime.multiplicity(&p) as i64;
            (delta != 0).then_some(Discrepancy { point: p, delta })
        })
        .collect()
}

/// Assembles the report from precomputed sides.
pub fn lemma_report(
    ell: i64,
    max_n: u32,
    variant: LambdaVariant,
    ztilde: &PointMultiset,
    zprime: &ZPrime,
) -> LemmaReport {
    let seeds: PointMultiset = zprime.accepted.iter().copied().collect();
    let reduced = zprime.points.difference(&seeds);
    LemmaReport {
        ell,
        max_n,
        variant,
        ztilde_total: ztilde.total(),
        zprime_total: reduced.total(),
        rejected_seeds: zprime.rejected.clone(),
        discrepancies: compare(ztilde, &reduced),
    }
}

/// Checks `Z̃ = Z′ ∖ {g_m}` exactly up to label `max_n`.
pub fn verify_lemma(ell: i64, max_n: u32, variant: LambdaVariant) -> Result<LemmaReport> {
    let ztilde = build_ztilde(ell, max_n)?;
    let zprime = build_zprime(ell, max_n, variant)?;
    Ok(lemma_report(ell, max_n, variant, &ztilde, &zprime))
}
