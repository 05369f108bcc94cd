//! Symmetric powers.
//!
//! Three routes to the same numbers:
//! - [`sym_power_curve`]: the class of `C^{(n)}` as
//!   `Coef_{T^n} (1+T)^{h¹C} / ((1-T)(1-LT))`;
//! - [`sym_power_ranks`]: the rank-level generating function for any graded
//!   object, odd degrees contributing exterior and even degrees symmetric
//!   factors;
//! - [`sym_power_bruteforce`]: a direct count of invariant monomials, used as
//!   the oracle for the other two.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lambda::{binomial, MotiveClass};
use crate::laurent::LaurentInt;
use crate::series::{binomial_series, geometric};

/// Default limit on the number of multisets the oracle will count.
pub const ENUMERATION_GUARD: u128 = 10_000_000;

/// Betti ranks of a graded object, by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedRanks {
    ranks: BTreeMap<i64, BigUint>,
}

impl GradedRanks {
    pub fn new<I, C>(ranks: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigUint>,
    {
        let mut out = Self::default();
        for (d, r) in ranks {
            let r = r.into();
            if !r.is_zero() {
                *out.ranks.entry(d).or_default() += r;
            }
        }
        out
    }

    /// Ranks of a genus-`g` curve: `{0: 1, 1: 2g, 2: 1}`.
    pub fn curve(g: u32) -> Self {
        Self::new([(0, 1u64), (1, 2 * g as u64), (2, 1)])
    }

    pub fn get(&self, degree: i64) -> BigUint {
        self.ranks.get(&degree).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigUint)> + '_ {
        self.ranks.iter().map(|(&d, r)| (d, r))
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn total(&self) -> BigUint {
        self.ranks.values().sum()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.ranks.keys().next_back().copied()
    }

    /// Poincaré polynomial `Σ b_i t^i`.
    pub fn to_laurent(&self) -> LaurentInt {
        LaurentInt::from_terms(self.ranks.iter().map(|(&d, r)| (d, BigInt::from(r.clone()))))
    }

    /// Fails if any coefficient is negative.
    pub fn from_laurent(p: &LaurentInt) -> Result<Self> {
        let mut out = Self::default();
        for (d, c) in p.terms() {
            let r = c.to_biguint().ok_or_else(|| {
                Error::InvalidInput(format!("negative rank {c} in degree {d}"))
            })?;
            out.ranks.insert(d, r);
        }
        Ok(out)
    }
}

fn is_odd(degree: i64) -> bool {
    degree.rem_euclid(2) == 1
}

/// Class of the n-th symmetric power of a genus-`g` curve.
pub fn sym_power_curve(g: u32, n: usize) -> Result<MotiveClass> {
    let kernel = binomial_series(g, n)?
        .series_mul(&geometric(0, g, n))?
        .series_mul(&geometric(1, g, n))?;
    kernel.coef_at(n).cloned()
}

/// `Coef_{T^n} Π_{i odd} (1 + t^i T)^{b_i} / Π_{i even} (1 - t^i T)^{b_i}`.
pub fn sym_power_ranks(b: &GradedRanks, n: usize) -> GradedRanks {
    // series[k] is the coefficient of T^k, a polynomial in t.
    let mut series = vec![LaurentInt::zero(); n + 1];
    series[0] = LaurentInt::one();
    for (deg, rank) in b.iter() {
        let rank = rank.to_u64().expect("rank fits in u64");
        let factor: Vec<LaurentInt> = (0..=n as u64)
            .map(|k| {
                let c = if is_odd(deg) {
                    binomial(rank, k)
                } else if rank == 0 {
                    BigInt::from(u8::from(k == 0))
                } else {
                    binomial(rank + k - 1, k)
                };
                LaurentInt::monomial(deg * k as i64, c)
            })
            .collect();
        let mut next = vec![LaurentInt::zero(); n + 1];
        for (i, s) in series.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            for (k, f) in factor.iter().enumerate().take(n + 1 - i) {
                if !f.is_zero() {
                    next[i + k] += &(s * f);
                }
            }
        }
        series = next;
    }
    GradedRanks::from_laurent(&series[n]).expect("generating function has non-negative coefficients")
}

/// Counts multisets of `n` basis vectors, odd-degree vectors used at most
/// once, grouped by total degree.
pub fn sym_power_bruteforce(b: &GradedRanks, n: usize) -> Result<GradedRanks> {
    sym_power_bruteforce_with_guard(b, n, ENUMERATION_GUARD)
}

pub fn sym_power_bruteforce_with_guard(b: &GradedRanks, n: usize, guard: u128) -> Result<GradedRanks> {
    let mut generators: Vec<i64> = Vec::new();
    for (deg, rank) in b.iter() {
        let rank = rank
            .to_usize()
            .ok_or_else(|| Error::InvalidInput(format!("rank in degree {deg} too large")))?;
        generators.extend(std::iter::repeat_n(deg, rank));
    }

    let count = count_multisets(&generators, n, guard);
    if count > guard {
        return Err(Error::EnumerationGuard { count, limit: guard });
    }

    let mut memo: HashMap<(usize, usize), BTreeMap<i64, u128>> = HashMap::new();
    let table = enumerate(&generators, 0, n, &mut memo);
    Ok(GradedRanks::new(
        table.into_iter().map(|(d, c)| (d, BigUint::from(c))),
    ))
}

/// Number of admissible multisets, saturating once past `cap`.
fn count_multisets(generators: &[i64], n: usize, cap: u128) -> u128 {
    // ways[k] = number of ways to pick k elements from the generators seen so far.
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for &deg in generators {
        let mut next = vec![0u128; n + 1];
        for (used, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let max_mult = if is_odd(deg) { 1 } else { n - used };
            for m in 0..=max_mult.min(n - used) {
                next[used + m] = next[used + m].saturating_add(w).min(cap + 1);
            }
        }
        ways = next;
    }
    ways[n]
}

/// Walks generator `idx..`, choosing a multiplicity for each, with
/// `remaining` elements still to place.
fn enumerate(
    generators: &[i64],
    idx: usize,
    remaining: usize,
    memo: &mut HashMap<(usize, usize), BTreeMap<i64, u128>>,
) -> BTreeMap<i64, u128> {
    if remaining == 0 {
        return BTreeMap::from([(0, 1)]);
    }
    if idx == generators.len() {
        return BTreeMap::new();
    }
    if let Some(hit) = memo.get(&(idx, remaining)) {
        return hit.clone();
    }
    let deg = generators[idx];
    let max_mult = if is_odd(deg) { 1 } else { remaining };
    let mut out: BTreeMap<i64, u128> = BTreeMap::new();
    for m in 0..=max_mult.min(remaining) {
        let tail = enumerate(generators, idx + 1, remaining - m, memo);
        for (d, c) in tail {
            *out.entry(d + deg * m as i64).or_default() += c;
        }
    }
    out.retain(|_, c| *c != 0);
    memo.insert((idx, remaining), out.clone());
    out
}
