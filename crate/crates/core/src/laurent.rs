//! Integer Laurent polynomials in a single variable.
//!
//! The scalar ring of the whole crate: coefficients are arbitrary precision,
//! exponents may be negative, and zero coefficients are never stored so that
//! equality is plain map equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentInt {
    coeffs: BTreeMap<i64, BigInt>,
}

/// Outcome of a truncated series division.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exactness {
    /// The remainder vanished within the requested order.
    Exact,
    /// The remainder was still non-zero when the order was reached.
    Nonterminating,
}

impl Exactness {
    pub fn is_exact(self) -> bool {
        self == Exactness::Exact
    }

    pub fn and(self, other: Exactness) -> Exactness {
        if self.is_exact() && other.is_exact() {
            Exactness::Exact
        } else {
            Exactness::Nonterminating
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Exactness::Exact => "exact",
            Exactness::Nonterminating => "nonterminating",
        }
    }
}

impl LaurentInt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// `c · L^exp`
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// `L^exp`
    pub fn power(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    /// Dense constructor: `coeffs[k]` is the coefficient of `L^(start + k)`.
    pub fn from_dense(start: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (start + k as i64, c)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|&e| e == 0)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_non_negative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Sum of all coefficients (evaluation at `L = 1`).
    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub(crate) fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Multiplies by `L^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `L ↦ L^k` for `k ≠ 0`.
    pub fn stretch(&self, k: i64) -> Self {
        assert!(k != 0, "stretch factor must be non-zero");
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient by long division starting from the lowest exponent.
    ///
    /// Fails with [`Error::NonExactDivision`] carrying the remainder at the
    /// point the division could not continue.
    pub fn exact_div(&self, divisor: &LaurentInt) -> Result<LaurentInt> {
        let (d_lo, d_lo_coeff) = match divisor.coeffs.iter().next() {
            Some((&e, c)) => (e, c.clone()),
            None => return Err(Error::InvalidDivisor("division by zero".into())),
        };
        let d_hi = divisor.max_exp().unwrap();
        let Some(n_hi) = self.max_exp() else {
            return Ok(Self::zero());
        };
        // Any exact quotient has its exponents in [n_lo - d_lo, n_hi - d_hi].
        let q_hi = n_hi - d_hi;
        let mut quotient = Self::zero();
        let mut rem = self.clone();
        while let Some((&r_lo, r_c)) = rem.coeffs.iter().next() {
            let e = r_lo - d_lo;
            let (c, r) = r_c.div_rem(&d_lo_coeff);
            if e > q_hi || !r.is_zero() {
                return Err(Error::NonExactDivision {
                    lambda: None,
                    remainder: rem,
                });
            }
            rem = &rem - &divisor.scale(&c).shift(e);
            quotient.add_term(e, c);
        }
        Ok(quotient)
    }

    /// Expands `self / divisor` as a series in ascending powers, keeping
    /// quotient terms with exponent `<= order`.
    ///
    /// The divisor's lowest coefficient must be a unit (±1).
    pub fn series_div(&self, divisor: &LaurentInt, order: i64) -> Result<(LaurentInt, Exactness)> {
        let (d_lo, d_unit) = match divisor.coeffs.iter().next() {
            Some((&e, c)) if c.abs().is_one() => (e, c.clone()),
            Some((_, c)) => {
                return Err(Error::InvalidDivisor(format!(
                    "lowest coefficient {c} is not a unit"
                )))
            }
            None => return Err(Error::InvalidDivisor("division by zero".into())),
        };
        let mut quotient = Self::zero();
        let mut rem = self.clone();
        while let Some((&r_lo, r_c)) = rem.coeffs.iter().next() {
            let e = r_lo - d_lo;
            if e > order {
                return Ok((quotient, Exactness::Nonterminating));
            }
            // d_unit is ±1, so it is its own inverse.
            let c = r_c * &d_unit;
            rem = &rem - &divisor.scale(&c).shift(e);
            quotient.add_term(e, c);
        }
        Ok((quotient, Exactness::Exact))
    }

    /// Renders with the given variable name; `sep` goes between a non-unit
    /// coefficient and the variable (`"·"` gives `2·L^2`, `""` gives `4t^3`).
    pub fn render(&self, var: &str, sep: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            if e == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push_str(sep);
            }
            out.push_str(&power_string(var, e));
        }
        out
    }
}

pub(crate) fn power_string(var: &str, e: i64) -> String {
    if e == 1 {
        var.to_string()
    } else {
        format!("{var}^{e}")
    }
}

impl fmt::Display for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("L", "·"))
    }
}

impl From<i64> for LaurentInt {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentInt> for &'a LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: &'a LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentInt> for &'a LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: &'a LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentInt> for &'a LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: &'a LaurentInt) -> LaurentInt {
        let mut out = LaurentInt::zero();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        LaurentInt {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl AddAssign<&LaurentInt> for LaurentInt {
    fn add_assign(&mut self, rhs: &LaurentInt) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentInt> for LaurentInt {
    fn sub_assign(&mut self, rhs: &LaurentInt) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, -c);
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<LaurentInt> for LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: LaurentInt) -> LaurentInt { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a LaurentInt> for LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: &'a LaurentInt) -> LaurentInt { (&self).$m(rhs) }
        }
        impl<'a> $tr<LaurentInt> for &'a LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: LaurentInt) -> LaurentInt { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(start: i64, c: &[i64]) -> LaurentInt {
        LaurentInt::from_dense(start, c)
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let x = p(0, &[1, 0, 2]) - p(0, &[1, 0, 2]);
        assert!(x.is_zero());
        assert_eq!(x, LaurentInt::zero());
        assert_eq!(p(0, &[0, 0, 3]).len(), 1);
    }

    #[test]
    fn negative_exponents() {
        let x = LaurentInt::power(-2) * LaurentInt::power(3);
        assert_eq!(x, LaurentInt::power(1));
        assert_eq!(LaurentInt::power(-2).to_string(), "L^-2");
    }

    #[test]
    fn exact_division_of_m_omega_scalar() {
        let n = p(0, &[1, 2, 3, 3, 2, 1]);
        let d = p(0, &[1, 1, 1]);
        assert_eq!(n.exact_div(&d).unwrap(), p(0, &[1, 1, 1, 1]));
    }

    #[test]
    fn non_exact_division_reports_remainder() {
        let err = p(0, &[1, 0, 1]).exact_div(&p(0, &[1, 1])).unwrap_err();
        assert_eq!(
            err,
            Error::NonExactDivision {
                lambda: None,
                remainder: LaurentInt::monomial(2, 2)
            }
        );
    }

    #[test]
    fn non_unit_leading_coefficient_in_exact_division() {
        assert_eq!(p(0, &[2, 2]).exact_div(&p(0, &[2])).unwrap(), p(0, &[1, 1]));
        assert!(p(0, &[3]).exact_div(&p(0, &[2])).is_err());
        assert!(p(0, &[1]).exact_div(&LaurentInt::zero()).is_err());
    }

    #[test]
    fn geometric_series_division() {
        let (q, flag) = p(0, &[1, 1]).series_div(&p(0, &[1, -1]), 4).unwrap();
        assert_eq!(q, p(0, &[1, 2, 2, 2, 2]));
        assert_eq!(flag, Exactness::Nonterminating);
    }

    #[test]
    fn terminating_series_division() {
        let (q, flag) = p(0, &[1, 0, 0, 0, -1]).series_div(&p(0, &[1, -1]), 10).unwrap();
        assert_eq!(q, p(0, &[1, 1, 1, 1]));
        assert_eq!(flag, Exactness::Exact);
    }

    #[test]
    fn series_division_rejects_non_unit() {
        assert!(matches!(
            p(0, &[1]).series_div(&p(0, &[2, 1]), 3),
            Err(Error::InvalidDivisor(_))
        ));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(0, &[1, 0, 2]).to_string(), "1 + 2·L^2");
        assert_eq!(p(0, &[1, 0, 1, 4, 1, 0, 1]).stretch(1).render("t", ""), "1 + t^2 + 4t^3 + t^4 + t^6");
        assert_eq!(p(1, &[-1, -2]).to_string(), "-L - 2·L^2");
        assert_eq!(LaurentInt::zero().to_string(), "0");
    }

    #[test]
    fn pow_matches_repeated_product() {
        let x = p(-1, &[1, 2, -1]);
        assert_eq!(x.pow(3), &(&x * &x) * &x);
        assert_eq!(x.pow(0), LaurentInt::one());
    }
}
