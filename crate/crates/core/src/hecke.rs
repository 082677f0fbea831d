//! The anti-spherical right module of the affine Hecke algebra of type `Ã₂`
//! and its canonical basis.
//!
//! The standard basis `n_x` is indexed by minimal coset representatives. With
//! `b_s = H_s + v`, the right action is
//!
//! * `n_y·b_s = n_{ys} + v·n_y` if `ys > y` and `ys` is minimal,
//! * `n_y·b_s = n_{ys} + v⁻¹·n_y` if `ys < y`,
//! * `n_y·b_s = 0` if `ys` is not minimal.

use alloc::collections::BTreeMap;
use core::fmt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::weyl::{AffineElement, Generator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `n_x`
    Standard,
    /// `n̲_x`
    Canonical,
}

/// A finite combination of basis vectors with Laurent coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntisphericalVector {
    pub basis: Basis,
    coeffs: BTreeMap<AffineElement, LaurentPoly>,
}

impl AntisphericalVector {
    pub fn zero(basis: Basis) -> Self {
        AntisphericalVector {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_vector(x: AffineElement, basis: Basis) -> Self {
        let mut out = Self::zero(basis);
        out.add_term(x, &LaurentPoly::one());
        out
    }

    pub fn add_term(&mut self, x: AffineElement, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(x).or_default();
        *slot += p;
        if slot.is_zero() {
            self.coeffs.remove(&x);
        }
    }

    /// `self += p·other`
    pub fn add_scaled(&mut self, other: &AntisphericalVector, p: &LaurentPoly) {
        debug_assert_eq!(self.basis, other.basis);
        for (x, c) in other.iter() {
            self.add_term(*x, &(c * p));
        }
    }

    pub fn coeff(&self, x: &AffineElement) -> LaurentPoly {
        self.coeffs.get(x).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AffineElement, &LaurentPoly)> + '_ {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = AffineElement> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for AntisphericalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let sym = match self.basis {
            Basis::Standard => "n",
            Basis::Canonical => "N",
        };
        for (i, (x, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{sym}[{x}]")?;
        }
        Ok(())
    }
}

/// `vec·b_s` in the standard basis.
pub fn hecke_act(vec: &AntisphericalVector, s: Generator) -> AntisphericalVector {
    let mut out = AntisphericalVector::zero(Basis::Standard);
    for (y, c) in vec.iter() {
        let ys = y.mul_gen(s);
        if !ys.is_minimal() {
            continue;
        }
        out.add_term(ys, c);
        if ys.length() > y.length() {
            out.add_term(*y, &(c * &LaurentPoly::v()));
        } else {
            out.add_term(*y, &(c * &LaurentPoly::v_inv()));
        }
    }
    out
}

/// `vec·H_s` in the standard basis, with `H_s = b_s − v`.
pub fn h_act(vec: &AntisphericalVector, s: Generator) -> AntisphericalVector {
    let mut out = hecke_act(vec, s);
    out.add_scaled(vec, &LaurentPoly::monomial(-1, 1));
    out
}

/// The bar involution on the standard basis: semilinear, fixing `n_id`, and
/// `bar(n_{ys}) = bar(n_y)·H_s⁻¹` for `ys > y`, where `H_s⁻¹ = H_s + v − v⁻¹`.
pub fn bar(vec: &AntisphericalVector) -> AntisphericalVector {
    let mut memo: BTreeMap<AffineElement, AntisphericalVector> = BTreeMap::new();
    let mut out = AntisphericalVector::zero(Basis::Standard);
    for (x, c) in vec.iter() {
        let bx = bar_basis(*x, &mut memo);
        out.add_scaled(&bx, &c.bar());
    }
    out
}

fn bar_basis(
    x: AffineElement,
    memo: &mut BTreeMap<AffineElement, AntisphericalVector>,
) -> AntisphericalVector {
    if let Some(v) = memo.get(&x) {
        return v.clone();
    }
    let result = match x.right_descents().first() {
        None => AntisphericalVector::basis_vector(x, Basis::Standard),
        Some(&s) => {
            let below = bar_basis(x.mul_gen(s), memo);
            let mut out = h_act(&below, s);
            out.add_scaled(&below, &(&LaurentPoly::v() - &LaurentPoly::v_inv()));
            out
        }
    };
    memo.insert(x, result.clone());
    result
}

/// Which right descent the canonical-basis recursion peels off.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DescentChoice {
    #[default]
    Smallest,
    Largest,
}

/// Memoized canonical basis `n̲_x`, expressed in the standard basis.
#[derive(Clone, Debug, Default)]
pub struct CanonicalBasis {
    choice: DescentChoice,
    memo: BTreeMap<AffineElement, AntisphericalVector>,
}

impl CanonicalBasis {
    pub fn new(choice: DescentChoice) -> Self {
        CanonicalBasis {
            choice,
            memo: BTreeMap::new(),
        }
    }

    pub fn cached(&self) -> usize {
        self.memo.len()
    }

    /// `n̲_x = n_x + Σ_{y<x} m_{y,x}·n_y`, with every `m_{y,x} ∈ vℤ[v]`.
    pub fn get(&mut self, x: AffineElement) -> Result<AntisphericalVector> {
        if !x.is_minimal() {
            return Err(Error::NotMinimal(x));
        }
        if let Some(v) = self.memo.get(&x) {
            return Ok(v.clone());
        }
        let descents = x.right_descents();
        let s = match self.choice {
            DescentChoice::Smallest => descents.first(),
            DescentChoice::Largest => descents.last(),
        };
        let result = match s {
            None => AntisphericalVector::basis_vector(x, Basis::Standard),
            Some(&s) => {
                let mut c = hecke_act(&self.get(x.mul_gen(s))?, s);
                // Remove constant terms below the top, longest first.
                loop {
                    let next = c
                        .iter()
                        .filter(|(z, p)| **z != x && p.coeff(0) != 0)
                        .map(|(z, p)| (z.length(), *z, p.coeff(0)))
                        .max();
                    let Some((_, z, c0)) = next else { break };
                    let lower = self.get(z)?;
                    c.add_scaled(&lower, &LaurentPoly::from(-c0));
                }
                c
            }
        };
        self.memo.insert(x, result.clone());
        Ok(result)
    }

    /// Rewrites a canonical-basis vector in the standard basis.
    pub fn to_standard(&mut self, vec: &AntisphericalVector) -> Result<AntisphericalVector> {
        if vec.basis == Basis::Standard {
            return Ok(vec.clone());
        }
        let mut out = AntisphericalVector::zero(Basis::Standard);
        for (x, c) in vec.iter() {
            out.add_scaled(&self.get(*x)?, c);
        }
        Ok(out)
    }

    /// Rewrites a standard-basis vector in the canonical basis by peeling off
    /// the longest term repeatedly.
    pub fn to_canonical(&mut self, vec: &AntisphericalVector) -> Result<AntisphericalVector> {
        if vec.basis == Basis::Canonical {
            return Ok(vec.clone());
        }
        let mut rest = vec.clone();
        let mut out = AntisphericalVector::zero(Basis::Canonical);
        while let Some((_, x)) = rest.support().map(|x| (x.length(), x)).max() {
            let c = rest.coeff(&x);
            out.add_term(x, &c);
            let nx = self.get(x)?;
            rest.add_scaled(&nx, &(-&c));
        }
        Ok(out)
    }
}

/// `v⁰ ↦ 1`, `vⁱ ↦ vⁱ + v⁻ⁱ` for `i > 0`, extended linearly.
pub fn phi_map(p: &LaurentPoly) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for (e, c) in p.terms() {
        if e < 0 {
            return Err(Error::NegativeExponent(e));
        }
        out.add_term(c, e);
        if e > 0 {
            out.add_term(c, -e);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{minimal_elements, x_edge};
    use Generator::*;

    fn n(x: AffineElement) -> AntisphericalVector {
        AntisphericalVector::basis_vector(x, Basis::Standard)
    }

    #[test]
    fn action_examples() {
        let id = AffineElement::IDENTITY;
        let s0 = id.mul_gen(S0);
        let got = hecke_act(&n(id), S0);
        let mut want = n(s0);
        want.add_term(id, &LaurentPoly::v());
        assert_eq!(got, want);
        assert!(hecke_act(&n(id), S1).is_empty());
        assert!(hecke_act(&n(id), S2).is_empty());
    }

    #[test]
    fn quadratic_relation() {
        let quad = &LaurentPoly::v() + &LaurentPoly::v_inv();
        for x in minimal_elements(6) {
            for s in Generator::ALL {
                let once = hecke_act(&n(x), s);
                let twice = hecke_act(&once, s);
                let mut want = AntisphericalVector::zero(Basis::Standard);
                want.add_scaled(&once, &quad);
                assert_eq!(twice, want);
            }
        }
    }

    #[test]
    fn bar_is_an_involution_fixing_b_s() {
        for x in minimal_elements(6) {
            assert_eq!(bar(&bar(&n(x))), n(x));
            for s in Generator::ALL {
                let v = hecke_act(&n(x), s);
                // bar(n_x·b_s) = bar(n_x)·b_s
                assert_eq!(bar(&v), hecke_act(&bar(&n(x)), s));
            }
        }
    }

    #[test]
    fn small_canonical_elements() {
        let mut cb = CanonicalBasis::default();
        let id = AffineElement::IDENTITY;
        assert_eq!(cb.get(id).unwrap(), n(id));
        let s0 = id.mul_gen(S0);
        let mut want = n(s0);
        want.add_term(id, &LaurentPoly::v());
        assert_eq!(cb.get(s0).unwrap(), want);
        let bad = id.mul_gen(S1);
        assert_eq!(cb.get(bad), Err(Error::NotMinimal(bad)));
    }

    #[test]
    fn canonical_basis_properties() {
        let mut cb = CanonicalBasis::default();
        let mut other = CanonicalBasis::new(DescentChoice::Largest);
        for x in minimal_elements(10) {
            let c = cb.get(x).unwrap();
            assert_eq!(c.coeff(&x), LaurentPoly::one());
            for (y, p) in c.iter() {
                if *y != x {
                    assert!(y.length() < x.length());
                    assert!(p.degrees_within(1, i32::MAX), "{x} {y} {p}");
                }
            }
            assert_eq!(bar(&c), c);
            assert_eq!(other.get(x).unwrap(), c);
        }
    }

    #[test]
    fn basis_change_round_trip() {
        let mut cb = CanonicalBasis::default();
        let mut v = AntisphericalVector::zero(Basis::Standard);
        v.add_term(x_edge(5), &LaurentPoly::from_coeffs(-1, &[2, 0, 1]));
        v.add_term(x_edge(3), &LaurentPoly::v());
        let c = cb.to_canonical(&v).unwrap();
        assert_eq!(cb.to_standard(&c).unwrap(), v);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_map(&LaurentPoly::one()), Ok(LaurentPoly::one()));
        assert_eq!(
            phi_map(&LaurentPoly::monomial(1, 3)),
            Ok(&LaurentPoly::monomial(1, 3) + &LaurentPoly::monomial(1, -3))
        );
        assert_eq!(
            phi_map(&LaurentPoly::from_coeffs(0, &[2, 1])),
            Ok(LaurentPoly::from_coeffs(-1, &[1, 2, 1]))
        );
        assert_eq!(phi_map(&LaurentPoly::v_inv()), Err(Error::NegativeExponent(-1)));
    }
}
