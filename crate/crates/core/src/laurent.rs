//! Laurent polynomials in `v` with integer coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    // exponent -> nonzero coefficient
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c·v^e`
    pub fn monomial(c: i64, e: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, e);
        p
    }

    /// `v`
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `v⁻¹`
    pub fn v_inv() -> Self {
        Self::monomial(1, -1)
    }

    /// Builds `Σ coeffs[i]·v^(min_deg + i)`.
    pub fn from_coeffs(min_deg: i32, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(c, min_deg + i as i32);
        }
        p
    }

    pub fn add_term(&mut self, c: i64, e: i32) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn coeff(&self, e: i32) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, *c))
    }

    /// Dense coefficient list from the minimal degree, or `(0, [])` for zero.
    pub fn to_coeffs(&self) -> (i32, Vec<i64>) {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => (lo, (lo..=hi).map(|e| self.coeff(e)).collect()),
            _ => (0, Vec::new()),
        }
    }

    /// The involution `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, *c)).collect(),
        }
    }

    /// Drops all negative powers of `v`.
    pub fn truncate_nonneg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.range(0..).map(|(e, c)| (*e, *c)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for (e, x) in self.terms() {
            out.add_term(x * c, e);
        }
        out
    }

    /// Multiplies by `v^e`.
    pub fn shift(&self, e: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(d, c)| (d + e, *c)).collect(),
        }
    }

    /// True when every exponent lies in `lo..=hi`.
    pub fn degrees_within(&self, lo: i32, hi: i32) -> bool {
        self.terms.keys().all(|e| (lo..=hi).contains(e))
    }

    pub fn has_nonneg_coeffs(&self) -> bool {
        self.terms.values().all(|c| *c >= 0)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(c, e);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(-c, e);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Highest power first, e.g. `2v^8`, `v + 1`, `v^3 + v^-3`, `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let (e, c) = (*e, *c);
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        write!(f, "v")?;
                    } else {
                        write!(f, "v^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-4i32..4, proptest::collection::vec(-3i64..4, 0..6))
            .prop_map(|(lo, cs)| LaurentPoly::from_coeffs(lo, &cs))
    }

    #[test]
    fn display() {
        assert_eq!(LaurentPoly::one().to_string(), "1");
        assert_eq!(LaurentPoly::v().to_string(), "v");
        assert_eq!(LaurentPoly::monomial(2, 8).to_string(), "2v^8");
        let p = LaurentPoly::from_coeffs(-3, &[1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(p.to_string(), "v^3 + v^-3");
        assert_eq!(LaurentPoly::from_coeffs(0, &[2, -1]).to_string(), "-v + 2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn quadratic_identity() {
        // (v + v⁻¹)² = v² + 2 + v⁻²
        let s = &LaurentPoly::v() + &LaurentPoly::v_inv();
        assert_eq!(&s * &s, LaurentPoly::from_coeffs(-2, &[1, 0, 2, 0, 1]));
    }

    proptest! {
        #[test]
        fn bar_is_involution(p in arb_poly()) {
            prop_assert_eq!(p.bar().bar(), p);
        }

        #[test]
        fn bar_is_multiplicative(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!((&p * &q).bar(), &p.bar() * &q.bar());
        }

        #[test]
        fn coeffs_round_trip(p in arb_poly()) {
            let (lo, cs) = p.to_coeffs();
            prop_assert_eq!(LaurentPoly::from_coeffs(lo, &cs), p);
        }

        #[test]
        fn distributive(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        }
    }

    #[test]
    fn truncation() {
        let p = LaurentPoly::from_coeffs(-2, &[5, 1, 3, 4]);
        assert_eq!(p.truncate_nonneg(), LaurentPoly::from_coeffs(0, &[3, 4]));
    }
}
