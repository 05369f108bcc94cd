//! Classes in the sub-ring of K₀ spanned by `λ_a = [Λ^a h¹C]` over Laurent
//! polynomials in the Lefschetz class `L`.
//!
//! A [`MotiveClass`] stores one [`LaurentInt`] per λ-index. Indices are kept in
//! the canonical range `0..=g`; anything above `g` is folded back with the
//! duality rewrite `λ_a = λ_{2g-a} · L^{a-g}`. The monomial `λ_a · L^b` has
//! weight `a + 2b` and rank `binomial(2g, a)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{power_string, Exactness, LaurentInt};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MotiveClass {
    genus: u32,
    lambda: BTreeMap<usize, LaurentInt>,
}

/// A weight-homogeneous piece of a class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightPart {
    pub weight: i64,
    pub class: MotiveClass,
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn check_genus(g: u32) -> Result<()> {
    if g < 1 {
        return Err(Error::InvalidInput(format!("genus must be >= 1, got {g}")));
    }
    Ok(())
}

/// Weight of the monomial `λ_a · L^b`.
pub fn monomial_weight(a: usize, b: i64) -> i64 {
    a as i64 + 2 * b
}

impl MotiveClass {
    /// # Panics
    /// If `g == 0`.
    pub fn zero(g: u32) -> Self {
        assert!(g >= 1, "genus must be >= 1");
        Self {
            genus: g,
            lambda: BTreeMap::new(),
        }
    }

    pub fn one(g: u32) -> Self {
        Self::tate(g, LaurentInt::one())
    }

    /// The pure Tate class `p(L) · λ_0`.
    pub fn tate(g: u32, p: LaurentInt) -> Self {
        let mut out = Self::zero(g);
        out.insert(0, p);
        out
    }

    /// `λ_a`, canonicalized.
    pub fn lambda(g: u32, a: usize) -> Result<Self> {
        Self::canonicalize([(a, LaurentInt::one())], g)
    }

    /// `c · λ_a · L^b`, canonicalized.
    pub fn monomial(g: u32, a: usize, b: i64, c: impl Into<BigInt>) -> Result<Self> {
        Self::canonicalize([(a, LaurentInt::monomial(b, c))], g)
    }

    /// Builds a canonical class from components indexed by `0..=2g`.
    pub fn canonicalize<I>(raw: I, g: u32) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, LaurentInt)>,
    {
        check_genus(g)?;
        let gg = g as usize;
        let mut out = Self::zero(g);
        for (a, p) in raw {
            if a > 2 * gg {
                return Err(Error::InvalidInput(format!(
                    "λ-index {a} outside 0..={} for genus {g}",
                    2 * gg
                )));
            }
            if a > gg {
                out.insert(2 * gg - a, p.shift(a as i64 - g as i64));
            } else {
                out.insert(a, p);
            }
        }
        Ok(out)
    }

    fn insert(&mut self, a: usize, p: LaurentInt) {
        debug_assert!(a <= self.genus as usize);
        if p.is_zero() {
            return;
        }
        let slot = self.lambda.entry(a).or_default();
        *slot += &p;
        if slot.is_zero() {
            self.lambda.remove(&a);
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.is_empty()
    }

    /// True when only the λ₀ component is present.
    pub fn is_pure_tate(&self) -> bool {
        self.lambda.keys().all(|&a| a == 0)
    }

    pub fn component(&self, a: usize) -> LaurentInt {
        self.lambda.get(&a).cloned().unwrap_or_default()
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &LaurentInt)> + '_ {
        self.lambda.iter().map(|(&a, p)| (a, p))
    }

    /// All monomials `(a, b, coeff)` in λ-index then exponent order.
    pub fn monomials(&self) -> impl Iterator<Item = (usize, i64, &BigInt)> + '_ {
        self.lambda
            .iter()
            .flat_map(|(&a, p)| p.terms().map(move |(b, c)| (a, b, c)))
    }

    fn same_genus(&self, other: &Self) -> Result<()> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_genus(other)?;
        let mut out = self.clone();
        for (&a, p) in &other.lambda {
            out.insert(a, p.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            genus: self.genus,
            lambda: self.lambda.iter().map(|(&a, p)| (a, -p)).collect(),
        }
    }

    pub fn scalar_mul(&self, p: &LaurentInt) -> Self {
        let mut out = Self::zero(self.genus);
        for (&a, q) in &self.lambda {
            out.insert(a, q * p);
        }
        out
    }

    /// Product of two classes, provided one of them is pure Tate.
    ///
    /// Products `λ_a · λ_b` with `a, b >= 1` would need plethysm and are
    /// rejected with [`Error::UnsupportedProduct`].
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_genus(other)?;
        if self.is_pure_tate() {
            Ok(other.scalar_mul(&self.component(0)))
        } else if other.is_pure_tate() {
            Ok(self.scalar_mul(&other.component(0)))
        } else {
            Err(Error::UnsupportedProduct)
        }
    }

    /// Tate twist `x(n)`, i.e. multiplication by `L^{-n}`.
    pub fn tate_twist(&self, n: i64) -> Self {
        let mut out = Self::zero(self.genus);
        for (&a, p) in &self.lambda {
            out.insert(a, p.shift(-n));
        }
        out
    }

    /// Dual class: `λ_a · L^b ↦ λ_a · L^{-a-b}`.
    pub fn dual(&self) -> Self {
        let mut out = Self::zero(self.genus);
        for (a, b, c) in self.monomials() {
            out.insert(a, LaurentInt::monomial(-(a as i64) - b, c.clone()));
        }
        out
    }

    pub fn weight_part(&self, m: i64) -> WeightPart {
        let mut class = Self::zero(self.genus);
        for (a, b, c) in self.monomials() {
            if monomial_weight(a, b) == m {
                class.insert(a, LaurentInt::monomial(b, c.clone()));
            }
        }
        WeightPart { weight: m, class }
    }

    pub fn weights(&self) -> BTreeSet<i64> {
        self.monomials().map(|(a, b, _)| monomial_weight(a, b)).collect()
    }

    pub fn weight_decomposition(&self) -> Vec<WeightPart> {
        self.weights().into_iter().map(|m| self.weight_part(m)).collect()
    }

    /// Keeps the weight components strictly below `m`.
    pub fn truncate_below(&self, m: i64) -> Self {
        let mut out = Self::zero(self.genus);
        for (a, b, c) in self.monomials() {
            if monomial_weight(a, b) < m {
                out.insert(a, LaurentInt::monomial(b, c.clone()));
            }
        }
        out
    }

    /// Componentwise exact division by a Tate polynomial.
    pub fn exact_divide(&self, p: &LaurentInt) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::InvalidDivisor("division by zero".into()));
        }
        let mut out = Self::zero(self.genus);
        for (&a, q) in &self.lambda {
            let quotient = q.exact_div(p).map_err(|e| match e {
                Error::NonExactDivision { remainder, .. } => Error::NonExactDivision {
                    lambda: Some(a),
                    remainder,
                },
                other => other,
            })?;
            out.insert(a, quotient);
        }
        Ok(out)
    }

    /// Componentwise division in the completed ring, truncated at `L^order`.
    /// The flag is exact only if every component terminates.
    pub fn series_divide(&self, p: &LaurentInt, order: i64) -> Result<(Self, Exactness)> {
        if p.is_zero() {
            return Err(Error::InvalidDivisor("division by zero".into()));
        }
        let mut out = Self::zero(self.genus);
        let mut flag = Exactness::Exact;
        for (&a, q) in &self.lambda {
            let (quotient, f) = q.series_div(p, order)?;
            flag = flag.and(f);
            out.insert(a, quotient);
        }
        // An empty class still needs the divisor validated.
        if self.lambda.is_empty() {
            LaurentInt::zero().series_div(p, order)?;
        }
        Ok((out, flag))
    }

    /// Virtual rank (Euler characteristic of the Betti realization at t = 1
    /// with all signs positive): `Σ coeff · binomial(2g, a)`.
    pub fn rank(&self) -> BigInt {
        let two_g = 2 * self.genus as u64;
        self.lambda
            .iter()
            .map(|(&a, p)| p.coefficient_sum() * binomial(two_g, a as u64))
            .sum()
    }

    /// Renders grouped by λ-index: `1 + 2·L^2 + λ1·(L + L^3)`.
    pub fn to_grouped_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (&a, p) in &self.lambda {
            if a == 0 {
                parts.push(p.to_string());
                continue;
            }
            if p.len() != 1 {
                parts.push(format!("λ{a}·({p})"));
                continue;
            }
            let (b, c) = p.terms().next().unwrap();
            let mut s = String::new();
            if c.is_negative() {
                s.push('-');
            }
            if !c.abs().is_one() {
                s.push_str(&c.abs().to_string());
                s.push('·');
            }
            s.push_str(&format!("λ{a}"));
            if b != 0 {
                s.push('·');
                s.push_str(&power_string("L", b));
            }
            parts.push(s);
        }
        let mut out = String::new();
        for (i, part) in parts.into_iter().enumerate() {
            if i == 0 {
                out.push_str(&part);
            } else if let Some(rest) = part.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&part);
            }
        }
        out
    }
}

/// Monomials ordered by weight, then λ-index: `1 + L + λ1·L + L^2 + L^3`.
impl fmt::Display for MotiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(usize, i64, &BigInt)> = self.monomials().collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        terms.sort_by_key(|&(a, b, _)| (monomial_weight(a, b), a));
        for (i, (a, b, c)) in terms.into_iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                factors.push(mag.to_string());
            }
            if a != 0 {
                factors.push(format!("λ{a}"));
            }
            if b != 0 {
                factors.push(power_string("L", b));
            }
            f.write_str(&factors.join("·"))?;
        }
        Ok(())
    }
}

/// Newton binomial `(L^{exp_a} + L^{exp_b})^{h¹C} = Σ_a λ_a · L^{exp_a(2g-a) + exp_b·a}`.
pub fn lambda_binomial(exp_a: i64, exp_b: i64, g: u32) -> Result<MotiveClass> {
    check_genus(g)?;
    let two_g = 2 * g as usize;
    MotiveClass::canonicalize(
        (0..=two_g).map(|a| {
            let e = exp_a * (two_g - a) as i64 + exp_b * a as i64;
            (a, LaurentInt::power(e))
        }),
        g,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(start: i64, c: &[i64]) -> LaurentInt {
        LaurentInt::from_dense(start, c)
    }

    fn class(g: u32, comps: &[(usize, LaurentInt)]) -> MotiveClass {
        MotiveClass::canonicalize(comps.iter().cloned(), g).unwrap()
    }

    #[test]
    fn canonicalize_folds_high_indices() {
        let g2 = class(2, &[(3, LaurentInt::one())]);
        assert_eq!(g2, class(2, &[(1, LaurentInt::power(1))]));
        assert_eq!(class(2, &[(4, LaurentInt::one())]), MotiveClass::tate(2, LaurentInt::power(2)));

        let raw = [0, 2, 4, 6].map(|a| (a, LaurentInt::one()));
        let got = MotiveClass::canonicalize(raw, 3).unwrap();
        let want = class(3, &[(0, p(0, &[1, 0, 0, 1])), (2, p(0, &[1, 1]))]);
        assert_eq!(got, want);
    }

    #[test]
    fn canonicalize_rejects_bad_input() {
        assert!(matches!(
            MotiveClass::canonicalize([(5, LaurentInt::one())], 2),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            MotiveClass::canonicalize([(0, LaurentInt::one())], 0),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn addition() {
        let one = MotiveClass::one(2);
        let l1 = MotiveClass::monomial(2, 1, 1, 1).unwrap();
        let sum = one.add(&l1).unwrap();
        assert_eq!(sum.component(0), LaurentInt::one());
        assert_eq!(sum.component(1), LaurentInt::power(1));
        assert_eq!(sum.add(&MotiveClass::zero(2)).unwrap(), sum);
        let l2 = MotiveClass::lambda(2, 2).unwrap();
        assert!(l2.add(&l2.neg()).unwrap().is_zero());
        assert_eq!(
            one.add(&MotiveClass::one(3)),
            Err(Error::GenusMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn scalar_multiplication() {
        let x = class(2, &[(0, LaurentInt::one()), (1, LaurentInt::one())]);
        let got = x.scalar_mul(&p(0, &[1, 1]));
        assert_eq!(got, class(2, &[(0, p(0, &[1, 1])), (1, p(0, &[1, 1]))]));
        assert!(x.scalar_mul(&LaurentInt::zero()).is_zero());
    }

    #[test]
    fn general_products_are_rejected() {
        let l1 = MotiveClass::lambda(2, 1).unwrap();
        assert_eq!(l1.mul(&l1), Err(Error::UnsupportedProduct));
        let t = MotiveClass::tate(2, p(0, &[1, 1]));
        assert_eq!(l1.mul(&t).unwrap(), l1.scalar_mul(&p(0, &[1, 1])));
    }

    #[test]
    fn twists() {
        let l1 = MotiveClass::lambda(2, 1).unwrap();
        assert_eq!(l1.tate_twist(-1), MotiveClass::monomial(2, 1, 1, 1).unwrap());
        let x = class(2, &[(0, p(-1, &[1, 2])), (2, p(0, &[3, 0, 1]))]);
        assert_eq!(x.tate_twist(3).tate_twist(-3), x);
    }

    #[test]
    fn duality() {
        assert_eq!(MotiveClass::one(2).dual(), MotiveClass::one(2));
        let x = MotiveClass::monomial(2, 1, 1, 1).unwrap();
        assert_eq!(x.dual(), MotiveClass::monomial(2, 1, -2, 1).unwrap());
        let y = class(2, &[(0, p(-1, &[1, 2])), (1, p(2, &[1, 5])), (2, p(0, &[3, 0, 1]))]);
        assert_eq!(y.dual().dual(), y);
        assert_eq!(y.dual().rank(), y.rank());
    }

    #[test]
    fn weight_parts() {
        let x = class(2, &[(0, p(0, &[1, 1, 1, 1])), (1, LaurentInt::power(1))]);
        assert_eq!(x.weight_part(3).class, MotiveClass::monomial(2, 1, 1, 1).unwrap());
        assert!(x.weight_part(5).class.is_zero());
        let y = MotiveClass::monomial(2, 2, 1, 1).unwrap();
        assert_eq!(y.weight_part(4).class, y);
        let total = x
            .weight_decomposition()
            .into_iter()
            .try_fold(MotiveClass::zero(2), |acc, w| acc.add(&w.class))
            .unwrap();
        assert_eq!(total, x);
    }

    #[test]
    fn truncation() {
        let x = class(2, &[(0, p(0, &[1, 1, 1])), (1, LaurentInt::power(1))]);
        assert_eq!(x.truncate_below(3), MotiveClass::tate(2, p(0, &[1, 1])));
        assert_eq!(x.truncate_below(1000), x);
        assert!(x.truncate_below(0).is_zero());
    }

    #[test]
    fn exact_division() {
        let x = MotiveClass::tate(2, p(0, &[1, 2, 3, 3, 2, 1]));
        assert_eq!(
            x.exact_divide(&p(0, &[1, 1, 1])).unwrap(),
            MotiveClass::tate(2, p(0, &[1, 1, 1, 1]))
        );
        let bad = class(2, &[(0, p(0, &[1, 1])), (2, p(0, &[1, 0, 1]))]);
        match bad.exact_divide(&p(0, &[1, 1])) {
            Err(Error::NonExactDivision { lambda, .. }) => assert_eq!(lambda, Some(2)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn series_division_nonterminating_component() {
        // λ2-component of the open stratum class at g = 2.
        let x = class(2, &[(2, -p(1, &[1, 1, 2, 1]))]);
        let (_, flag) = x.series_divide(&p(0, &[1, 1, 1, 1]), 40).unwrap();
        assert_eq!(flag, Exactness::Nonterminating);
    }

    #[test]
    fn newton_binomial() {
        let got = lambda_binomial(0, 1, 2).unwrap();
        let want = class(
            2,
            &[
                (0, LaurentInt::from_terms([(0, 1), (6, 1)])),
                (1, LaurentInt::from_terms([(1, 1), (4, 1)])),
                (2, LaurentInt::power(2)),
            ],
        );
        assert_eq!(got, want);
        assert_eq!(lambda_binomial(0, 0, 2).unwrap().rank(), BigInt::from(16));
        for g in 1..6 {
            assert_eq!(lambda_binomial(0, 0, g).unwrap().rank(), BigInt::from(1u64 << (2 * g)));
        }
    }

    #[test]
    fn rendering() {
        let x = class(2, &[(0, p(0, &[1, 1, 1, 1])), (1, LaurentInt::power(1))]);
        assert_eq!(x.to_string(), "1 + L + λ1·L + L^2 + L^3");
        let y = class(2, &[(0, p(0, &[1, 0, 2])), (1, LaurentInt::from_terms([(1, 1), (3, 1)]))]);
        assert_eq!(y.to_grouped_string(), "1 + 2·L^2 + λ1·(L + L^3)");
        assert_eq!(MotiveClass::zero(1).to_string(), "0");
        let z = class(2, &[(2, LaurentInt::monomial(1, -3))]);
        assert_eq!(z.to_string(), "-3·λ2·L");
    }
}
