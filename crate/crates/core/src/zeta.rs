//! The elements `ζ_i` assembled from `Z̃`.
//!
//! `ζ₀ = n̲_{x₀}` and, for `i ≥ 1`,
//! `ζ_i = n̲_{x_i} + Σ φ(v^k)·n̲_{x_μ^s}` over the points `(μ, n(v^k))` of `Z̃`
//! with `n ∈ {i, i−1, i−2}`, counted with multiplicity, where `s` is the
//! unique right descent of `x_i`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hecke::{phi_map, AntisphericalVector, Basis};
use crate::lattice::check_ell;
use crate::laurent::LaurentPoly;
use crate::multiset::{LabelledPoint, PointMultiset};
use crate::weyl::{x_edge, x_mu_s, AffineElement, Generator};

/// One billiard contribution to `ζ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaTerm {
    pub point: LabelledPoint,
    pub mult: u64,
    pub element: AffineElement,
    /// `mult·φ(v^k)`
    pub coeff: LaurentPoly,
}

/// The unique right descent of `x_i`, `i ≥ 1`.
pub fn edge_descent(i: u32) -> Result<Generator> {
    match x_edge(i).right_descents().as_slice() {
        [s] => Ok(*s),
        d => Err(Error::NonUniqueDescent {
            index: i,
            descents: d.len(),
        }),
    }
}

/// The billiard terms of `ζ_i`. `complete_to` is the label up to which
/// `ztilde` is known to be complete.
pub fn zeta_terms(p: i64, i: u32, ztilde: &PointMultiset, complete_to: u32) -> Result<Vec<ZetaTerm>> {
    check_ell(p)?;
    if complete_to < i {
        return Err(Error::TruncationTooSmall {
            needed: i,
            available: complete_to,
        });
    }
    if i == 0 {
        return Ok(Vec::new());
    }
    let s = edge_descent(i)?;
    let lo = i.saturating_sub(2);
    let mut out = Vec::new();
    for (pt, mult) in ztilde.iter() {
        if !(lo..=i).contains(&pt.label.n) {
            continue;
        }
        if pt.label.k < 0 {
            return Err(Error::NegativeExponent(pt.label.k));
        }
        let coeff = phi_map(&LaurentPoly::monomial(1, pt.label.k))?.scale(mult as i64);
        out.push(ZetaTerm {
            point: *pt,
            mult,
            element: x_mu_s(pt.mu, s)?,
            coeff,
        });
    }
    Ok(out)
}

/// `ζ_i` in the canonical basis.
pub fn zeta(p: i64, i: u32, ztilde: &PointMultiset, complete_to: u32) -> Result<AntisphericalVector> {
    let mut out = AntisphericalVector::basis_vector(x_edge(i), Basis::Canonical);
    for t in zeta_terms(p, i, ztilde, complete_to)? {
        out.add_term(t.element, &t.coeff);
    }
    Ok(out)
}
