//! Classes of the moduli spaces of pairs `M_i`, of stable rank-two bundles
//! with odd determinant `N₀(2,1)`, and the four-stage pure class of the
//! even-determinant space `N₀(2,0)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lambda::{lambda_binomial, MotiveClass};
use crate::laurent::{Exactness, LaurentInt};
use crate::macdonald::sym_power_curve;

/// `L^lo + … + L^hi`; zero when `hi < lo`.
pub fn range_sum(lo: i64, hi: i64) -> LaurentInt {
    LaurentInt::from_terms((lo..=hi).map(|e| (e, 1)))
}

fn check_genus(g: u32) -> Result<()> {
    if g < 2 {
        return Err(Error::InvalidInput(format!("moduli pipelines need genus >= 2, got {g}")));
    }
    Ok(())
}

/// Last index of the flip chain, `floor((d - 1) / 2)`.
pub fn omega(d: i64) -> i64 {
    (d - 1).div_euclid(2)
}

pub fn odd_degree(g: u32) -> i64 {
    4 * g as i64 - 3
}

pub fn even_degree(g: u32) -> i64 {
    4 * g as i64 - 2
}

/// Classes of the flip centers: `PW_i^+` is a `P^{d-2i+g-2}`-bundle and
/// `PW_i^-` a `P^{i-1}`-bundle over `C^{(i)}`.
pub fn pw_classes(g: u32, d: i64, i: i64) -> Result<(MotiveClass, MotiveClass)> {
    check_genus(g)?;
    if i < 0 {
        return Err(Error::InvalidInput(format!("flip index {i} must be >= 0")));
    }
    let base = sym_power_curve(g, i as usize)?;
    let plus = base.scalar_mul(&range_sum(0, d - 2 * i + g as i64 - 2));
    let minus = base.scalar_mul(&range_sum(0, i - 1));
    Ok((plus, minus))
}

/// `h M_i = Σ_{j=0}^{i} (h PW_j^+ - h PW_j^-)`, one flip per step.
///
/// Per step this is `h C^{(j)} · (L^j + … + L^{d+g-2-2j})` when that range
/// is non-empty; past the point where the two bundle ranks cross the
/// difference is negative rather than zero.
pub fn pair_moduli(g: u32, d: i64, i: i64) -> Result<MotiveClass> {
    check_genus(g)?;
    if d < 1 || i < 0 || i > omega(d) {
        return Err(Error::InvalidInput(format!(
            "flip index {i} outside 0..={} for degree {d}",
            omega(d).max(0)
        )));
    }
    (0..=i).try_fold(MotiveClass::zero(g), |acc, j| {
        let (plus, minus) = pw_classes(g, d, j)?;
        acc.add(&plus.sub(&minus)?)
    })
}

/// Odd-degree route through the flip chain: `M_ω` is a `P^{d-2g+1}`-bundle
/// over `N₀(2,d)` for odd `d > 4g - 4`.
pub fn n0_odd_chain(g: u32, d: i64) -> Result<MotiveClass> {
    check_genus(g)?;
    if d.rem_euclid(2) != 1 || d <= 4 * g as i64 - 4 {
        return Err(Error::InvalidInput(format!(
            "chain route needs odd degree > 4g-4, got {d}"
        )));
    }
    let fibre = range_sum(0, d - 2 * g as i64 + 1);
    pair_moduli(g, d, omega(d))?
        .exact_divide(&fibre)
        .map_err(|e| Error::Integrity(format!("N0 chain division at g={g}, d={d}: {e}")))
}

/// `((1 + L)^{h¹C} - L^g (1 + 1)^{h¹C}) / ((1 - L)(1 - L²))`.
pub fn n0_odd_closed(g: u32) -> Result<MotiveClass> {
    check_genus(g)?;
    let numerator = lambda_binomial(0, 1, g)?
        .sub(&lambda_binomial(0, 0, g)?.scalar_mul(&LaurentInt::power(g as i64)))?;
    let denominator = LaurentInt::from_dense(0, &[1, -1]) * LaurentInt::from_dense(0, &[1, 0, -1]);
    numerator
        .exact_divide(&denominator)
        .map_err(|e| Error::Integrity(format!("N0 closed form division at g={g}: {e}")))
}

/// Class of `N₀(2,1)`, computed by the flip chain at `d = 4g - 3` and checked
/// against the closed form.
pub fn n0_odd(g: u32) -> Result<MotiveClass> {
    let chain = n0_odd_chain(g, odd_degree(g))?;
    let closed = n0_odd_closed(g)?;
    if chain != closed {
        return Err(Error::Integrity(format!(
            "N0(2,1) routes disagree at g={g}: chain {chain} vs closed {closed}"
        )));
    }
    Ok(chain)
}

/// `Kum(C) = ⊕_{i=0}^{g} Λ^{2i} h¹C`.
pub fn kummer(g: u32) -> Result<MotiveClass> {
    MotiveClass::canonicalize(
        (0..=g as usize).map(|i| (2 * i, LaurentInt::one())),
        g,
    )
}

/// Preimage of the strictly semistable locus: a `P^{2g-2}`-bundle over
/// `C^{(2g-1)}`.
pub fn ss_preimage(g: u32) -> Result<MotiveClass> {
    check_genus(g)?;
    Ok(sym_power_curve(g, 2 * g as usize - 1)?.scalar_mul(&range_sum(0, 2 * g as i64 - 2)))
}

/// Even-degree top pair space `M_ω` at `d = 4g - 2`.
pub fn m_omega_even(g: u32) -> Result<MotiveClass> {
    check_genus(g)?;
    let d = even_degree(g);
    pair_moduli(g, d, omega(d))
}

/// `M_ω^s = M_ω - L^{g-1} · (M_ω - M_ω^s)`.
pub fn m_omega_s(g: u32) -> Result<MotiveClass> {
    let stratum = ss_preimage(g)?.scalar_mul(&LaurentInt::power(g as i64 - 1));
    m_omega_even(g)?.sub(&stratum)
}

/// `M_ω^s` divided by the `P^{2g-1}` fibre class in the completed ring.
pub fn n0_even_stable(g: u32, order: i64) -> Result<(MotiveClass, Exactness)> {
    m_omega_s(g)?.series_divide(&range_sum(0, 2 * g as i64 - 1), order)
}

/// Closed expression for `M_ω` at even degree, compared against the flip
/// chain in [`n0_even`].
pub fn m_omega_even_closed(g: u32, order: i64) -> Result<(MotiveClass, Exactness)> {
    check_genus(g)?;
    let gi = g as i64;
    let one_minus = |k: i64| LaurentInt::one() - LaurentInt::power(k);
    let one_plus = |k: i64| LaurentInt::one() + LaurentInt::power(k);
    let numerator = lambda_binomial(0, 1, g)?.scalar_mul(&one_minus(2 * gi)).sub(
        &lambda_binomial(0, 0, g)?
            .scalar_mul(&LaurentInt::power(gi + 1))
            .scalar_mul(&(one_plus(gi) * one_plus(gi - 2))),
    )?;
    let denominator = one_minus(1) * one_minus(1) * one_minus(2);
    numerator.series_divide(&denominator, order)
}

/// Closed expression for the stable part of `N₀(2,0)`.
pub fn n0_even_stable_closed(g: u32, order: i64) -> Result<(MotiveClass, Exactness)> {
    check_genus(g)?;
    let gi = g as i64;
    let one_minus = |k: i64| LaurentInt::one() - LaurentInt::power(k);
    let one_plus = |k: i64| LaurentInt::one() + LaurentInt::power(k);
    let bracket = LaurentInt::power(1) * one_plus(gi) * one_plus(gi - 2)
        + LaurentInt::power(-1) * one_minus(gi) * one_minus(2 * gi - 1) * one_minus(2);
    let numerator = lambda_binomial(0, 1, g)?.scalar_mul(&one_minus(2 * gi)).sub(
        &lambda_binomial(0, 0, g)?
            .scalar_mul(&LaurentInt::power(gi))
            .scalar_mul(&bracket),
    )?;
    let denominator = one_minus(1) * one_minus(2) * one_minus(2 * gi);
    numerator.series_divide(&denominator, order)
}

/// One weight at which two classes differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDiff {
    pub weight: i64,
    pub left: MotiveClass,
    pub right: MotiveClass,
}

/// Weights where `left` and `right` differ, ascending.
pub fn weight_diffs(left: &MotiveClass, right: &MotiveClass) -> Vec<WeightDiff> {
    let weights: BTreeSet<i64> = left.weights().union(&right.weights()).copied().collect();
    weights
        .into_iter()
        .filter_map(|m| {
            let l = left.weight_part(m).class;
            let r = right.weight_part(m).class;
            (l != r).then_some(WeightDiff {
                weight: m,
                left: l,
                right: r,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StageValue {
    Class(MotiveClass),
    Flag(Exactness),
    /// Per-weight comparison; an empty list means agreement.
    Diff(Vec<WeightDiff>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub name: String,
    pub value: StageValue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineReport {
    pub genus: u32,
    pub degree: i64,
    pub stages: Vec<Stage>,
}

impl PipelineReport {
    pub fn stage(&self, name: &str) -> Option<&StageValue> {
        self.stages.iter().find(|s| s.name == name).map(|s| &s.value)
    }

    pub fn class(&self, name: &str) -> Option<&MotiveClass> {
        match self.stage(name) {
            Some(StageValue::Class(c)) => Some(c),
            _ => None,
        }
    }

    fn push(&mut self, name: &str, value: StageValue) {
        self.stages.push(Stage {
            name: name.to_string(),
            value,
        });
    }
}

/// Stage-by-stage pure class of `N₀(2,0)` at `d = 4g - 2`.
///
/// Stages, in order: `m_omega`, `ss_preimage`, `m_omega_s`, `n0_stable`,
/// `step3_division`, `kummer_twisted`, `n0_even`, `n0_odd`,
/// `truncation_diff` (weights below `2g - 2`), and the two closed-form
/// comparators with their division flags. Comparator diffs are restricted
/// to weights `<= 2·order` where a truncated quotient is reliable.
pub fn n0_even(g: u32, order: i64) -> Result<PipelineReport> {
    check_genus(g)?;
    let gi = g as i64;
    let mut report = PipelineReport {
        genus: g,
        degree: even_degree(g),
        stages: Vec::new(),
    };

    let m_omega = m_omega_even(g)?;
    let preimage = ss_preimage(g)?;
    let open = m_omega_s(g)?;
    let (stable, flag) = n0_even_stable(g, order)?;
    let kummer_twisted = kummer(g)?.tate_twist(-(2 * gi - 3));
    let total = stable.add(&kummer_twisted)?;
    let odd = n0_odd(g)?;
    let cut = 2 * gi - 2;
    let truncation = weight_diffs(&total.truncate_below(cut), &odd.truncate_below(cut));

    let reliable = 2 * order + 1;
    let (m_closed, m_flag) = m_omega_even_closed(g, order)?;
    let m_cmp = weight_diffs(&m_closed.truncate_below(reliable), &m_omega.truncate_below(reliable));
    let (s_closed, s_flag) = n0_even_stable_closed(g, order)?;
    let s_cmp = weight_diffs(&s_closed.truncate_below(reliable), &stable.truncate_below(reliable));

    report.push("m_omega", StageValue::Class(m_omega));
    report.push("ss_preimage", StageValue::Class(preimage));
    report.push("m_omega_s", StageValue::Class(open));
    report.push("n0_stable", StageValue::Class(stable));
    report.push("step3_division", StageValue::Flag(flag));
    report.push("kummer_twisted", StageValue::Class(kummer_twisted));
    report.push("n0_even", StageValue::Class(total));
    report.push("n0_odd", StageValue::Class(odd));
    report.push("truncation_diff", StageValue::Diff(truncation));
    report.push("m_omega_closed_division", StageValue::Flag(m_flag));
    report.push("m_omega_closed_diff", StageValue::Diff(m_cmp));
    report.push("n0_stable_closed_division", StageValue::Flag(s_flag));
    report.push("n0_stable_closed_diff", StageValue::Diff(s_cmp));
    Ok(report)
}

/// Report for the odd-degree space at a chosen odd degree.
pub fn n0_odd_report(g: u32, d: i64) -> Result<PipelineReport> {
    check_genus(g)?;
    let mut report = PipelineReport {
        genus: g,
        degree: d,
        stages: Vec::new(),
    };
    let chain = n0_odd_chain(g, d)?;
    let closed = n0_odd_closed(g)?;
    let diff = weight_diffs(&chain, &closed);
    report.push("m_omega", StageValue::Class(pair_moduli(g, d, omega(d))?));
    report.push("n0_chain", StageValue::Class(chain));
    report.push("n0_closed", StageValue::Class(closed));
    report.push("route_diff", StageValue::Diff(diff));
    Ok(report)
}
