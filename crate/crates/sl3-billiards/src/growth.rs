//! Multiplicity growth in `Z̃`.

use std::collections::BTreeMap;

use sl3_billiards_core::{LabelledPoint, PointMultiset};

/// Start of the doubling family at `ℓ = 5`.
pub const FAMILY_BASE: LabelledPoint = LabelledPoint::new(
    sl3_billiards_core::Weight::new(3, 7),
    sl3_billiards_core::Label::new(43, 3),
);
pub const FAMILY_STEP_N: u32 = 45;
pub const FAMILY_STEP_K: i32 = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub index: u32,
    pub point: LabelledPoint,
    pub mult: u64,
    /// `mult ≥ 2^index`
    pub doubled: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthReport {
    pub ell: i64,
    pub max_n: u32,
    /// label -> largest multiplicity among points with that label
    pub max_mult: BTreeMap<u32, u64>,
    /// Only filled in for `ℓ = 5`.
    pub family: Vec<FamilyMember>,
}

impl GrowthReport {
    pub fn overall_max(&self) -> u64 {
        self.max_mult.values().copied().max().unwrap_or(0)
    }

    /// True unless a family member falls short of `2^i`.
    pub fn family_holds(&self) -> bool {
        self.family.iter().all(|m| m.doubled)
    }

    /// `n,max_mult` lines followed by the family.
    pub fn to_text(&self) -> String {
        let mut s = format!("# ell={} maxLabel={} overall={}\nn,maxMult\n", self.ell, self.max_n, self.overall_max());
        for (n, m) in &self.max_mult {
            s += &format!("{n},{m}\n");
        }
        for m in &self.family {
            s += &format!(
                "# family {}: ({}, {}) {}(v^{}) mult {} {}\n",
                m.index,
                m.point.mu.a,
                m.point.mu.b,
                m.point.label.n,
                m.point.label.k,
                m.mult,
                if m.doubled { "ok" } else { "SHORT" }
            );
        }
        s
    }
}

pub fn growth_report(ztilde: &PointMultiset, ell: i64, max_n: u32) -> GrowthReport {
    let mut max_mult = BTreeMap::new();
    for (p, m) in ztilde.iter() {
        let e = max_mult.entry(p.label.n).or_insert(0);
        *e = (*e).max(m);
    }
    let mut family = Vec::new();
    if ell == 5 {
        let mut p = FAMILY_BASE;
        let mut i = 0;
        while p.label.n <= max_n {
            let mult = ztilde.multiplicity(&p);
            family.push(FamilyMember {
                index: i,
                point: p,
                mult,
                doubled: mult >= 1 << i,
            });
            p.label = p.label.bump(FAMILY_STEP_N, FAMILY_STEP_K);
            i += 1;
        }
    }
    GrowthReport {
        ell,
        max_n,
        max_mult,
        family,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sl3_billiards_core::billiards::build_ztilde;

    #[test]
    fn doubles_at_88() {
        let r = growth_report(&build_ztilde(5, 88).unwrap(), 5, 88);
        assert!(r.max_mult[&88] >= 2);
        assert_eq!(r.family.len(), 2);
        assert!(r.family_holds());
    }

    #[test]
    fn below_first_seed() {
        let r = growth_report(&build_ztilde(5, 9).unwrap(), 5, 9);
        assert!(r.overall_max() <= 1);
        assert!(r.family.is_empty());
    }
}
