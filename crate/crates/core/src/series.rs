//! Truncated power series in an auxiliary variable `T` with [`MotiveClass`]
//! coefficients, and the kernels built from them.

use crate::error::{Error, Result};
use crate::lambda::{lambda_binomial, MotiveClass};
use crate::laurent::LaurentInt;

/// Coefficients for `T^0..=T^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotiveSeries {
    genus: u32,
    coeffs: Vec<MotiveClass>,
}

/// Evaluation route for [`big_f`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FMode {
    /// Coefficient extraction from the truncated product of series.
    Series,
    /// Partial-fraction closed form over a common denominator.
    Closed,
}

/// Truncation order used when none is given: `2·(2g) + 2`.
pub fn default_order(g: u32) -> usize {
    4 * g as usize + 2
}

impl MotiveSeries {
    pub fn new(genus: u32, coeffs: Vec<MotiveClass>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("series needs at least one coefficient".into()));
        }
        if let Some(c) = coeffs.iter().find(|c| c.genus() != genus) {
            return Err(Error::GenusMismatch {
                left: genus,
                right: c.genus(),
            });
        }
        Ok(Self { genus, coeffs })
    }

    /// Series whose coefficients are the given Tate polynomials.
    pub fn from_tate(genus: u32, coeffs: Vec<LaurentInt>) -> Result<Self> {
        Self::new(
            genus,
            coeffs.into_iter().map(|p| MotiveClass::tate(genus, p)).collect(),
        )
    }

    pub fn one(genus: u32, order: usize) -> Self {
        let mut coeffs = vec![MotiveClass::zero(genus); order + 1];
        coeffs[0] = MotiveClass::one(genus);
        Self { genus, coeffs }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MotiveClass] {
        &self.coeffs
    }

    /// `Coef_{T^n}`.
    pub fn coef_at(&self, n: usize) -> Result<&MotiveClass> {
        self.coeffs.get(n).ok_or(Error::OutOfRange {
            index: n,
            order: self.order(),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = (order + 1).min(self.coeffs.len());
        Self {
            genus: self.genus,
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// Cauchy product, truncated to the smaller order.
    ///
    /// Each pair of coefficients that meet must include a pure Tate factor.
    pub fn series_mul(&self, other: &Self) -> Result<Self> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        let order = self.order().min(other.order());
        let mut coeffs = vec![MotiveClass::zero(self.genus); order + 1];
        for (i, f) in self.coeffs.iter().enumerate().take(order + 1) {
            if f.is_zero() {
                continue;
            }
            for (j, h) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if h.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&f.mul(h)?)?;
            }
        }
        Ok(Self {
            genus: self.genus,
            coeffs,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let order = self.order().min(other.order());
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .take(order + 1)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            genus: self.genus,
            coeffs,
        })
    }
}

/// `(1 - L^u T)^{-1} = Σ L^{nu} T^n`.
pub fn geometric(u: i64, g: u32, order: usize) -> MotiveSeries {
    MotiveSeries {
        genus: g,
        coeffs: (0..=order)
            .map(|n| MotiveClass::tate(g, LaurentInt::power(n as i64 * u)))
            .collect(),
    }
}

/// `(1 + T)^{h¹C} = Σ λ_a T^a`; zero past `T^{2g}`.
pub fn binomial_series(g: u32, order: usize) -> Result<MotiveSeries> {
    let two_g = 2 * g as usize;
    let coeffs = (0..=order)
        .map(|a| {
            if a <= two_g {
                MotiveClass::lambda(g, a)
            } else {
                Ok(MotiveClass::zero(g))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    MotiveSeries::new(g, coeffs)
}

/// `F(a, b, c) = Coef_{T^{2g}} (1+T)^{h¹C} / ((1-aT)(1-bT)(1-cT))` with
/// `a, b, c = L^{e1}, L^{e2}, L^{e3}`.
///
/// The closed route is
/// `Σ_cyc a² (a+1)^{h¹C} / ((a-b)(a-c))`, summed over the common denominator
/// `(a-b)(a-c)(b-c)` and divided exactly once at the end.
pub fn big_f(e1: i64, e2: i64, e3: i64, g: u32, mode: FMode) -> Result<MotiveClass> {
    if g < 1 {
        return Err(Error::InvalidInput(format!("genus must be >= 1, got {g}")));
    }
    match mode {
        FMode::Series => {
            let n = 2 * g as usize;
            let product = binomial_series(g, n)?
                .series_mul(&geometric(e1, g, n))?
                .series_mul(&geometric(e2, g, n))?
                .series_mul(&geometric(e3, g, n))?;
            product.coef_at(n).cloned()
        }
        FMode::Closed => {
            if e1 == e2 || e1 == e3 || e2 == e3 {
                return Err(Error::DegenerateDenominator([e1, e2, e3]));
            }
            let [a, b, c] = [e1, e2, e3].map(LaurentInt::power);
            let term = |e: i64, weight: LaurentInt| -> Result<MotiveClass> {
                Ok(lambda_binomial(e, 0, g)?
                    .scalar_mul(&LaurentInt::power(2 * e))
                    .scalar_mul(&weight))
            };
            let numerator = term(e1, &b - &c)?
                .sub(&term(e2, &a - &c)?)?
                .add(&term(e3, &a - &b)?)?;
            let denominator = &(&(&a - &b) * &(&a - &c)) * &(&b - &c);
            numerator
                .exact_divide(&denominator)
                .map_err(|e| Error::Integrity(format!("closed F division: {e}")))
        }
    }
}
