//! Betti and Hodge realizations of classes, the classical closed forms they
//! are compared against, and Hodge levels.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lambda::{binomial, MotiveClass};
use crate::laurent::LaurentInt;

/// Integer Laurent polynomial in `x, y`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiLaurentInt {
    coeffs: BTreeMap<(i64, i64), BigInt>,
}

impl BiLaurentInt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(p: i64, q: i64, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(p, q, c.into());
        out
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for ((p, q), c) in terms {
            out.add_term(p, q, c.into());
        }
        out
    }

    fn add_term(&mut self, p: i64, q: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((p, q)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(p, q));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: i64, q: i64) -> BigInt {
        self.coeffs.get(&(p, q)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((i64, i64), &BigInt)> + '_ {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    /// Exchanges `x` and `y`.
    pub fn swap(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&(p, q), c)| ((q, p), c.clone())).collect(),
        }
    }

    /// Specializes `x = y = t`.
    pub fn diagonal(&self) -> LaurentInt {
        LaurentInt::from_terms(self.coeffs.iter().map(|(&(p, q), c)| (p + q, c.clone())))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact division by lexicographic long division from the top term.
    ///
    /// Any exact quotient has its exponents inside the box spanned by the
    /// differences of the operands' extreme exponents, so a quotient term
    /// leaving that box proves the division is not exact.
    pub fn exact_div(&self, divisor: &BiLaurentInt) -> Result<BiLaurentInt> {
        let Some((&d_top, d_top_c)) = divisor.coeffs.iter().next_back() else {
            return Err(Error::InvalidDivisor("division by zero".into()));
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (nx, ny) = self.exponent_box();
        let (dx, dy) = divisor.exponent_box();
        let x_range = (nx.0 - dx.0, nx.1 - dx.1);
        let y_range = (ny.0 - dy.0, ny.1 - dy.1);

        let mut quotient = Self::zero();
        let mut rem = self.clone();
        while let Some((&(rp, rq), rc)) = rem.coeffs.iter().next_back() {
            let (p, q) = (rp - d_top.0, rq - d_top.1);
            let (c, r) = rc.div_rem(d_top_c);
            let inside = (x_range.0..=x_range.1).contains(&p) && (y_range.0..=y_range.1).contains(&q);
            if !r.is_zero() || !inside {
                return Err(Error::NonExactDivision {
                    lambda: None,
                    remainder: rem.diagonal(),
                });
            }
            let step = Self::monomial(p, q, c.clone());
            rem = &rem - &(&step * divisor);
            quotient.add_term(p, q, c);
        }
        Ok(quotient)
    }

    fn exponent_box(&self) -> ((i64, i64), (i64, i64)) {
        let xs = self.coeffs.keys().map(|k| k.0);
        let ys = self.coeffs.keys().map(|k| k.1);
        (
            (xs.clone().min().unwrap(), xs.max().unwrap()),
            (ys.clone().min().unwrap(), ys.max().unwrap()),
        )
    }
}

impl fmt::Display for BiLaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&((p, q), _)| (p + q, std::cmp::Reverse(p)));
        for (i, ((p, q), c)) in terms.into_iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut s = String::new();
            if !mag.is_one() || (p == 0 && q == 0) {
                s.push_str(&mag.to_string());
            }
            for (var, e) in [("x", p), ("y", q)] {
                match e {
                    0 => {}
                    1 => s.push_str(var),
                    _ => s.push_str(&format!("{var}^{e}")),
                }
            }
            f.write_str(&s)?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a BiLaurentInt> for &'a BiLaurentInt {
    type Output = BiLaurentInt;
    fn add(self, rhs: &'a BiLaurentInt) -> BiLaurentInt {
        let mut out = self.clone();
        for (&(p, q), c) in &rhs.coeffs {
            out.add_term(p, q, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BiLaurentInt> for &'a BiLaurentInt {
    type Output = BiLaurentInt;
    fn sub(self, rhs: &'a BiLaurentInt) -> BiLaurentInt {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a BiLaurentInt> for &'a BiLaurentInt {
    type Output = BiLaurentInt;
    fn mul(self, rhs: &'a BiLaurentInt) -> BiLaurentInt {
        let mut out = BiLaurentInt::zero();
        for (&(pa, qa), ca) in &self.coeffs {
            for (&(pb, qb), cb) in &rhs.coeffs {
                out.add_term(pa + pb, qa + qb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &BiLaurentInt {
    type Output = BiLaurentInt;
    fn neg(self) -> BiLaurentInt {
        BiLaurentInt {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

/// Betti realization in `t`: `λ_a ↦ binomial(2g, a) t^a`, `L ↦ t²`.
pub fn betti(x: &MotiveClass) -> LaurentInt {
    let two_g = 2 * x.genus() as u64;
    LaurentInt::from_terms(
        x.monomials()
            .map(|(a, b, c)| (a as i64 + 2 * b, c * binomial(two_g, a as u64))),
    )
}

/// Hodge realization of `λ_a`: `Σ_{i+j=a} binomial(g,i) binomial(g,j) x^i y^j`.
pub fn hodge_of_lambda(g: u32, a: usize) -> BiLaurentInt {
    let g = g as u64;
    BiLaurentInt::from_terms((0..=a as u64).filter(|&i| i <= g && a as u64 - i <= g).map(|i| {
        let j = a as u64 - i;
        ((i as i64, j as i64), binomial(g, i) * binomial(g, j))
    }))
}

/// Hodge realization in `x, y`, with `L ↦ xy`.
pub fn hodge(x: &MotiveClass) -> BiLaurentInt {
    let g = x.genus();
    let mut out = BiLaurentInt::zero();
    for (a, p) in x.components() {
        let base = hodge_of_lambda(g, a);
        for (b, c) in p.terms() {
            for (&(i, j), h) in &base.coeffs {
                out.add_term(i + b, j + b, h * c);
            }
        }
    }
    out
}

fn check_genus(g: u32) -> Result<()> {
    if g < 2 {
        return Err(Error::InvalidInput(format!("closed forms need genus >= 2, got {g}")));
    }
    Ok(())
}

/// `((1+t³)^{2g} - t^{2g}(1+t)^{2g}) / ((1-t²)(1-t⁴))`.
pub fn hn_closed(g: u32) -> Result<LaurentInt> {
    check_genus(g)?;
    let two_g = 2 * g;
    let one_plus = |k: i64| LaurentInt::one() + LaurentInt::power(k);
    let one_minus = |k: i64| LaurentInt::one() - LaurentInt::power(k);
    let numerator = one_plus(3).pow(two_g) - LaurentInt::power(two_g as i64) * one_plus(1).pow(two_g);
    numerator
        .exact_div(&(one_minus(2) * one_minus(4)))
        .map_err(|e| Error::Integrity(format!("Poincaré closed form at g={g}: {e}")))
}

/// `((1+x²y)^g (1+xy²)^g - x^g y^g (1+x)^g (1+y)^g) / ((1-xy)(1-x²y²))`.
pub fn hodge_closed(g: u32) -> Result<BiLaurentInt> {
    check_genus(g)?;
    let one = BiLaurentInt::one();
    let m = |p: i64, q: i64| BiLaurentInt::monomial(p, q, 1);
    let a = &(&one + &m(2, 1)).pow(g) * &(&one + &m(1, 2)).pow(g);
    let b = &(&m(g as i64, g as i64) * &(&one + &m(1, 0)).pow(g)) * &(&one + &m(0, 1)).pow(g);
    let denominator = &(&one - &m(1, 1)) * &(&one - &m(2, 2));
    (&a - &b)
        .exact_div(&denominator)
        .map_err(|e| Error::Integrity(format!("Hodge closed form at g={g}: {e}")))
}

/// Largest `|p - q|` over the Hodge support of each weight component.
pub fn level_per_weight(x: &MotiveClass) -> BTreeMap<i64, u64> {
    x.weight_decomposition()
        .into_iter()
        .filter_map(|part| {
            let h = hodge(&part.class);
            h.terms()
                .map(|((p, q), _)| (p - q).unsigned_abs())
                .max()
                .map(|lvl| (part.weight, lvl))
        })
        .collect()
}

/// One row of a Hodge diamond.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeNumber {
    pub weight: i64,
    pub p: i64,
    pub q: i64,
    pub h: BigInt,
}

/// Hodge numbers grouped by weight, `p` descending within a weight.
pub fn hodge_diamond(x: &MotiveClass) -> Vec<HodgeNumber> {
    let mut rows: Vec<HodgeNumber> = hodge(x)
        .terms()
        .map(|((p, q), h)| HodgeNumber {
            weight: p + q,
            p,
            q,
            h: h.clone(),
        })
        .collect();
    rows.sort_by_key(|r| (r.weight, std::cmp::Reverse(r.p)));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moduli::{kummer, n0_odd};

    fn p(start: i64, c: &[i64]) -> LaurentInt {
        LaurentInt::from_dense(start, c)
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti(&MotiveClass::monomial(2, 1, 1, 1).unwrap()), LaurentInt::monomial(3, 4));
        assert_eq!(betti(&n0_odd(2).unwrap()), p(0, &[1, 0, 1, 4, 1, 0, 1]));
        assert_eq!(betti(&kummer(2).unwrap()), p(0, &[1, 0, 6, 0, 1]));
    }

    #[test]
    fn hodge_examples() {
        let l2 = MotiveClass::lambda(2, 2).unwrap();
        assert_eq!(
            hodge(&l2),
            BiLaurentInt::from_terms([((2, 0), 1), ((1, 1), 4), ((0, 2), 1)])
        );
        let l3 = MotiveClass::tate(2, LaurentInt::power(3));
        assert_eq!(hodge(&l3), BiLaurentInt::monomial(3, 3, 1));
        let w3 = n0_odd(2).unwrap().weight_part(3).class;
        assert_eq!(hodge(&w3), BiLaurentInt::from_terms([((2, 1), 2), ((1, 2), 2)]));
    }

    #[test]
    fn closed_forms_genus_two() {
        assert_eq!(hn_closed(2).unwrap(), p(0, &[1, 0, 1, 4, 1, 0, 1]));
        let h = hodge_closed(2).unwrap();
        assert_eq!(h.coeff(2, 1), 2.into());
        assert_eq!(h.coeff(0, 0), 1.into());
        assert_eq!(h.swap(), h);
        assert_eq!(h.diagonal(), hn_closed(2).unwrap());
        assert_eq!(h, hodge(&n0_odd(2).unwrap()));
    }

    #[test]
    fn hn_degree() {
        for g in 2..6 {
            assert_eq!(hn_closed(g).unwrap().max_exp(), Some(6 * g as i64 - 6));
        }
    }

    #[test]
    fn levels() {
        let lv = level_per_weight(&n0_odd(2).unwrap());
        assert_eq!(lv, BTreeMap::from([(0, 0), (2, 0), (3, 1), (4, 0), (6, 0)]));
        let x = MotiveClass::monomial(3, 1, 4, 1).unwrap();
        assert_eq!(level_per_weight(&x), BTreeMap::from([(9, 1)]));
        let t = MotiveClass::tate(3, p(0, &[1, 2, 3]));
        assert!(level_per_weight(&t).values().all(|&l| l == 0));
    }

    #[test]
    fn bivariate_division() {
        let a = BiLaurentInt::from_terms([((0, 0), 1), ((2, 1), 3), ((-1, 4), -2)]);
        let b = BiLaurentInt::from_terms([((1, 1), 1), ((0, 0), -1)]);
        assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        let bad = BiLaurentInt::from_terms([((0, 0), 1), ((1, 0), 1)]);
        assert!(bad.exact_div(&b).is_err());
    }
}
