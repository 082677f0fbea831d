//! Alcove diagrams: symbols `i(f)` written into dominant alcoves.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use sl3_billiards_core::weyl::x_edge;
use sl3_billiards_core::zeta::zeta_terms;
use sl3_billiards_core::{AffineElement, Half, LaurentPoly, PointMultiset, Result};

/// `i(f)` with `f` free of negative powers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub i: u32,
    pub f: LaurentPoly,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.i, self.f)
    }
}

/// Which alcove of the box `B_μ` receives a point of `Z̃`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Placement {
    #[default]
    Lower,
    Upper,
}

impl Placement {
    fn half(self) -> Half {
        match self {
            Placement::Lower => Half::Lower,
            Placement::Upper => Half::Upper,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlcoveDiagram {
    // alcove -> index -> coefficient; zero coefficients never stored
    cells: BTreeMap<AffineElement, BTreeMap<u32, LaurentPoly>>,
}

impl AlcoveDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `f` to the coefficient of index `i` in `alcove`. Negative powers
    /// are discarded first.
    pub fn add(&mut self, alcove: AffineElement, i: u32, f: &LaurentPoly) {
        let f = f.truncate_nonneg();
        if f.is_zero() {
            return;
        }
        let slot = self.cells.entry(alcove).or_default();
        let entry = slot.entry(i).or_default();
        *entry += &f;
        if entry.is_zero() {
            slot.remove(&i);
            if slot.is_empty() {
                self.cells.remove(&alcove);
            }
        }
    }

    /// One symbol `n(m·v^k)` per point `(μ, n(v^k))` of multiplicity `m`,
    /// summed where several points share an alcove and label.
    pub fn from_ztilde(points: &PointMultiset, placement: Placement) -> Self {
        let mut d = Self::new();
        for (p, m) in points.iter() {
            let alcove = AffineElement::new(p.mu, placement.half());
            d.add(alcove, p.label.n, &LaurentPoly::monomial(m as i64, p.label.k));
        }
        d
    }

    /// The billiard terms of `ζ_i` for `1 ≤ i ≤ max_i`, i.e. everything except
    /// the leading `n̲_{x_i}`, with negative powers discarded.
    pub fn from_zeta(p: i64, max_i: u32, ztilde: &PointMultiset, complete_to: u32) -> Result<Self> {
        let mut d = Self::new();
        for i in 1..=max_i {
            let lead = x_edge(i);
            for t in zeta_terms(p, i, ztilde, complete_to)? {
                debug_assert_ne!(t.element, lead);
                d.add(t.element, i, &t.coeff);
            }
        }
        Ok(d)
    }

    pub fn alcoves(&self) -> impl Iterator<Item = (&AffineElement, Vec<Symbol>)> + '_ {
        self.cells.iter().map(|(x, m)| {
            let syms = m.iter().map(|(i, f)| Symbol { i: *i, f: f.clone() }).collect();
            (x, syms)
        })
    }

    pub fn symbols_at(&self, alcove: &AffineElement) -> Vec<Symbol> {
        self.cells
            .get(alcove)
            .map(|m| m.iter().map(|(i, f)| Symbol { i: *i, f: f.clone() }).collect())
            .unwrap_or_default()
    }

    /// Every `(alcove, symbol)` pair, ordered by alcove then index.
    pub fn entries(&self) -> Vec<(AffineElement, Symbol)> {
        self.alcoves()
            .flat_map(|(x, syms)| syms.into_iter().map(move |s| (*x, s)))
            .collect()
    }

    pub fn symbol_count(&self) -> usize {
        self.cells.values().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Keeps only symbols with index at most `max_i`.
    pub fn restrict(&self, max_i: u32) -> Self {
        let mut d = Self::new();
        for (x, s) in self.entries() {
            if s.i <= max_i {
                d.add(x, s.i, &s.f);
            }
        }
        d
    }

    /// Replaces each triple `{i(f), (i+2)(f)}` in one alcove of a box with
    /// `(i+1)(f)` in the other by `i(f)` in the alcove holding the pair.
    /// Everything else stays where it was and is listed as unmatched.
    pub fn collapse_triples(&self) -> Collapse {
        let mut used: BTreeSet<(AffineElement, u32)> = BTreeSet::new();
        let mut out = Self::new();
        let mut collapsed = 0;
        for (x, m) in &self.cells {
            let other = AffineElement::new(
                x.cell,
                match x.half {
                    Half::Lower => Half::Upper,
                    Half::Upper => Half::Lower,
                },
            );
            for (i, f) in m {
                if used.contains(&(*x, *i)) {
                    continue;
                }
                let pair = m.get(&(i + 2)) == Some(f) && !used.contains(&(*x, i + 2));
                let single = self.cells.get(&other).and_then(|o| o.get(&(i + 1))) == Some(f)
                    && !used.contains(&(other, i + 1));
                if pair && single {
                    used.insert((*x, *i));
                    used.insert((*x, i + 2));
                    used.insert((other, i + 1));
                    out.add(*x, *i, f);
                    collapsed += 1;
                }
            }
        }
        let mut unmatched = Vec::new();
        for (x, s) in self.entries() {
            if !used.contains(&(x, s.i)) {
                out.add(x, s.i, &s.f);
                unmatched.push((x, s));
            }
        }
        Collapse {
            diagram: out,
            collapsed,
            unmatched,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collapse {
    pub diagram: AlcoveDiagram,
    pub collapsed: usize,
    pub unmatched: Vec<(AffineElement, Symbol)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use sl3_billiards_core::billiards::build_ztilde;
    use sl3_billiards_core::Weight;

    fn lower(a: i64, b: i64) -> AffineElement {
        AffineElement::new(Weight::new(a, b), Half::Lower)
    }

    fn upper(a: i64, b: i64) -> AffineElement {
        AffineElement::new(Weight::new(a, b), Half::Upper)
    }

    #[test]
    fn displayed_replacement() {
        let f = LaurentPoly::v();
        let mut d = AlcoveDiagram::new();
        d.add(lower(2, 3), 7, &f);
        d.add(lower(2, 3), 9, &f);
        d.add(upper(2, 3), 8, &f);
        let c = d.collapse_triples();
        assert_eq!(c.collapsed, 1);
        assert!(c.unmatched.is_empty());
        assert_eq!(c.diagram.entries(), vec![(lower(2, 3), Symbol { i: 7, f })]);

        // the other orientation
        let mut d = AlcoveDiagram::new();
        d.add(upper(1, 1), 4, &LaurentPoly::one());
        d.add(upper(1, 1), 6, &LaurentPoly::one());
        d.add(lower(1, 1), 5, &LaurentPoly::one());
        let c = d.collapse_triples();
        assert_eq!(c.diagram.entries(), vec![(upper(1, 1), Symbol { i: 4, f: LaurentPoly::one() })]);
    }

    #[test]
    fn no_triples_is_unchanged() {
        let mut d = AlcoveDiagram::new();
        d.add(lower(2, 3), 7, &LaurentPoly::one());
        d.add(upper(2, 3), 8, &LaurentPoly::v());
        d.add(lower(2, 3), 9, &LaurentPoly::one());
        let c = d.collapse_triples();
        assert_eq!(c.collapsed, 0);
        assert_eq!(c.unmatched.len(), 3);
        assert_eq!(c.diagram, d);
    }

    #[test]
    fn five_symbols_up_to_21() {
        let z = build_ztilde(5, 21).unwrap();
        let d = AlcoveDiagram::from_ztilde(&z, Placement::Lower);
        let shown: Vec<String> = d.entries().iter().map(|(_, s)| s.to_string()).collect();
        let mut sorted = shown.clone();
        sorted.sort();
        assert_eq!(sorted, ["12(1)", "14(1)", "16(1)", "18(1)", "21(v)"]);
    }

    #[test]
    fn doubled_point_shows_coefficient_two() {
        let z = build_ztilde(5, 88).unwrap();
        let d = AlcoveDiagram::from_ztilde(&z, Placement::Lower);
        let s = d.symbols_at(&lower(3, 7));
        assert!(s.iter().any(|s| s.to_string() == "88(2v^8)"));
    }

    #[test]
    fn zeta_diagram_collapses_to_ztilde() {
        let z = build_ztilde(5, 60).unwrap();
        let d = AlcoveDiagram::from_zeta(5, 60, &z, 60).unwrap();
        let c = d.collapse_triples();
        assert_eq!(3 * c.collapsed + c.unmatched.len(), d.symbol_count());
        assert!(c.unmatched.iter().all(|(_, s)| s.i > 58));
        let expected = AlcoveDiagram::from_ztilde(&z.restrict(58), Placement::Lower);
        assert_eq!(c.diagram.restrict(58), expected);
    }
}
