//! Verification harness behind `motive-forge verify`.
//!
//! Each suite runs its invariants over a genus range and records one
//! [`Check`] per invariant. Diagnostics record known gaps between the
//! step-by-step pipelines and closed expressions; they never fail a run.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::Result;
use crate::format::{class_from_json, class_to_json};
use crate::jacobians::{closed_multiplicities, decompose};
use crate::lambda::{binomial, lambda_binomial, MotiveClass};
use crate::laurent::{Exactness, LaurentInt};
use crate::macdonald::{sym_power_bruteforce, sym_power_curve, sym_power_ranks, GradedRanks};
use crate::moduli::{
    kummer, n0_even, n0_odd, n0_odd_chain, omega, pair_moduli, pw_classes, range_sum,
    ss_preimage, StageValue,
};
use crate::realizations::{betti, hn_closed, hodge, hodge_closed, level_per_weight};
use crate::series::{big_f, binomial_series, geometric, FMode, MotiveSeries};

pub const VERIFY_SCHEMA: &str = "verify-report/v1";
const SEED: u64 = 0x6d6f_7469_7665;
const RANDOM_CASES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Diagnostic,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Diagnostic => "diagnostic",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
    pub data: Value,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    /// False iff some pass/fail check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "status": c.status.as_str(),
                    "details": c.details,
                    "data": c.data,
                })
            })
            .collect();
        json!({ "schema": VERIFY_SCHEMA, "passed": self.passed(), "checks": checks })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:<10} {}: {}\n", c.status.as_str().to_uppercase(), c.name, c.details));
        }
        let fails = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), fails));
        out
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, details: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            details: details.into(),
            data: Value::Null,
        });
    }

    /// Records a computation that must not error; errors become failures.
    fn check_result(&mut self, name: impl Into<String>, res: Result<(bool, String)>) {
        match res {
            Ok((ok, details)) => self.check(name, ok, details),
            Err(e) => self.check(name, false, format!("error: {e}")),
        }
    }

    fn diagnostic(&mut self, name: impl Into<String>, details: impl Into<String>, data: Value) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Diagnostic,
            details: details.into(),
            data,
        });
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Lambda,
    Series,
    Macdonald,
    Moduli,
    Realizations,
    Jacobians,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "all" => Suite::All,
            "lambda" => Suite::Lambda,
            "series" => Suite::Series,
            "macdonald" => Suite::Macdonald,
            "moduli" => Suite::Moduli,
            "realizations" => Suite::Realizations,
            "jacobians" => Suite::Jacobians,
            other => return Err(format!("unknown suite {other:?}")),
        })
    }
}

/// Runs a suite over an inclusive genus range. Each check only uses the
/// genera inside its own domain (moduli checks start at genus 2).
pub fn run(suite: Suite, genera: RangeInclusive<u32>) -> VerifyReport {
    let mut report = VerifyReport::default();
    let lo = (*genera.start()).max(1);
    let hi = *genera.end();
    let all = suite == Suite::All;
    if all || suite == Suite::Lambda {
        lambda_suite(&mut report, lo..=hi);
    }
    if all || suite == Suite::Series {
        series_suite(&mut report, lo..=hi);
    }
    if all || suite == Suite::Macdonald {
        macdonald_suite(&mut report, lo..=hi);
    }
    if all || suite == Suite::Moduli {
        moduli_suite(&mut report, lo.max(2)..=hi);
    }
    if all || suite == Suite::Realizations {
        realizations_suite(&mut report, lo.max(2)..=hi);
    }
    if all || suite == Suite::Jacobians {
        jacobians_suite(&mut report, lo.max(2)..=hi);
    }
    report
}

fn random_poly(rng: &mut ChaCha8Rng, max_terms: usize) -> LaurentInt {
    let n = rng.gen_range(0..=max_terms);
    LaurentInt::from_terms((0..n).map(|_| (rng.gen_range(-4..=6i64), rng.gen_range(-5..=5i64))))
}

fn random_class(rng: &mut ChaCha8Rng, g: u32) -> MotiveClass {
    let mut raw = Vec::new();
    for a in 0..=2 * g as usize {
        if rng.gen_bool(0.5) {
            raw.push((a, random_poly(rng, 4)));
        }
    }
    MotiveClass::canonicalize(raw, g).expect("indices are in range")
}

fn lambda_suite(report: &mut VerifyReport, genera: RangeInclusive<u32>) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for g in genera {
        let mut module_ok = true;
        let mut dual_ok = true;
        let mut twist_ok = true;
        let mut div_ok = true;
        let mut homog_ok = true;
        let mut serial_ok = true;
        let mut series_ok = true;
        let mut canon_ok = true;
        for _ in 0..RANDOM_CASES {
            let x = random_class(&mut rng, g);
            let y = random_class(&mut rng, g);
            let a = random_poly(&mut rng, 3);
            let b = random_poly(&mut rng, 3);
            let xy = x.add(&y).unwrap();
            module_ok &= xy.scalar_mul(&a) == x.scalar_mul(&a).add(&y.scalar_mul(&a)).unwrap()
                && x.scalar_mul(&(&a * &b)) == x.scalar_mul(&b).scalar_mul(&a);
            dual_ok &= x.dual().dual() == x && xy.dual() == x.dual().add(&y.dual()).unwrap();
            let n = rng.gen_range(-5..=5);
            twist_ok &= x.tate_twist(n).tate_twist(-n) == x;
            if !a.is_zero() {
                div_ok &= x.scalar_mul(&a).exact_divide(&a).as_ref() == Ok(&x);
            }
            let k = rng.gen_range(-3..=3);
            let m = rng.gen_range(-6..=20);
            homog_ok &= x.scalar_mul(&LaurentInt::power(k)).weight_part(m).class
                == x.weight_part(m - 2 * k).class.scalar_mul(&LaurentInt::power(k));
            serial_ok &= class_from_json(&class_to_json(&x)).as_ref() == Ok(&x);
            let raw: Vec<_> = x.components().map(|(a, p)| (a, p.clone())).collect();
            canon_ok &= MotiveClass::canonicalize(raw, g).as_ref() == Ok(&x);
            let unit = LaurentInt::from_dense(0, &[1, rng.gen_range(-2..=2), rng.gen_range(-2..=2)]);
            if let Ok((q, Exactness::Exact)) = x.scalar_mul(&unit).series_divide(&unit, 64) {
                series_ok &= q == x;
            } else {
                series_ok = false;
            }
        }
        report.check(format!("lambda/module-laws g={g}"), module_ok, format!("{RANDOM_CASES} random cases"));
        report.check(format!("lambda/dual-involution g={g}"), dual_ok, "dual∘dual = id, additive");
        report.check(format!("lambda/twist-inverse g={g}"), twist_ok, "x(n)(-n) = x");
        report.check(format!("lambda/exact-division-round-trip g={g}"), div_ok, "(x·p)/p = x");
        report.check(format!("lambda/weight-homogeneity g={g}"), homog_ok, "W_m(x·L^k) = W_{m-2k}(x)·L^k");
        report.check(format!("lambda/serialization-round-trip g={g}"), serial_ok, "json → class → json");
        report.check(format!("lambda/canonicalize-idempotent g={g}"), canon_ok, "canonicalize(x) = x");
        report.check(format!("lambda/series-divide-exact g={g}"), series_ok, "exact flag agrees with exact division");

        let mut main_lemma = true;
        for ea in -2..=2 {
            for eb in -2..=2 {
                let lhs = lambda_binomial(ea, eb, g).unwrap();
                let rhs = lambda_binomial(eb + 1, ea, g).unwrap().tate_twist(g as i64);
                main_lemma &= lhs == rhs;
            }
        }
        report.check(format!("lambda/newton-binomial-symmetry g={g}"), main_lemma, "(A+B)^M = (B(-1)+A)^M(g)");
    }
}

fn series_suite(report: &mut VerifyReport, genera: RangeInclusive<u32>) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    for g in genera {
        let order = crate::series::default_order(g);
        let geo_ok = (-2..=2).all(|u| {
            let s = geometric(u, g, order);
            (0..=order).all(|n| s.coef_at(n).unwrap() == &MotiveClass::tate(g, LaurentInt::power(n as i64 * u)))
        });
        report.check(format!("series/geometric-coefficients g={g}"), geo_ok, "Coef_{T^n} = L^{nu}");

        let mut ring_ok = true;
        for _ in 0..50 {
            let mk = |rng: &mut ChaCha8Rng| {
                MotiveSeries::from_tate(g, (0..=6).map(|_| random_poly(rng, 3)).collect()).unwrap()
            };
            let (a, b, c) = (mk(&mut rng), mk(&mut rng), mk(&mut rng));
            ring_ok &= a.series_mul(&b).unwrap() == b.series_mul(&a).unwrap();
            ring_ok &= a.series_mul(&b).unwrap().series_mul(&c).unwrap()
                == a.series_mul(&b.series_mul(&c).unwrap()).unwrap();
        }
        report.check(format!("series/product-laws g={g}"), ring_ok, "commutative and associative on Tate series");

        let mut f_ok = true;
        let mut f_bad = Vec::new();
        for e1 in -2..=2 {
            for e2 in -2..=2 {
                for e3 in -2..=2 {
                    if e1 == e2 || e1 == e3 || e2 == e3 {
                        continue;
                    }
                    let same = big_f(e1, e2, e3, g, FMode::Series).ok() == big_f(e1, e2, e3, g, FMode::Closed).ok();
                    if !same {
                        f_bad.push(format!("({e1},{e2},{e3})"));
                    }
                    f_ok &= same;
                }
            }
        }
        report.check(format!("series/big-f-modes g={g}"), f_ok, format!("mismatches: {f_bad:?}"));

        let kernel_ok = (|| -> Result<bool> {
            let k = binomial_series(g, 8)?
                .series_mul(&geometric(0, g, 8))?
                .series_mul(&geometric(1, g, 8))?;
            for n in 0..=8 {
                if k.coef_at(n)? != &sym_power_curve(g, n)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })();
        report.check_result(
            format!("series/macdonald-kernel g={g}"),
            kernel_ok.map(|ok| (ok, "Coef_{T^n} kernel = C^(n) for n ≤ 8".to_string())),
        );
    }
}

fn macdonald_suite(report: &mut VerifyReport, genera: RangeInclusive<u32>) {
    for g in genera {
        let b = GradedRanks::curve(g);
        let mut bad = Vec::new();
        for n in 0..=6 {
            let motive = sym_power_curve(g, n).map(|c| betti(&c));
            let ranks = sym_power_ranks(&b, n).to_laurent();
            let brute = sym_power_bruteforce(&b, n).map(|r| r.to_laurent());
            if motive.as_ref() != Ok(&ranks) || brute.as_ref() != Ok(&ranks) {
                bad.push(n);
            }
        }
        report.check(
            format!("macdonald/triple-agreement g={g}"),
            bad.is_empty(),
            format!("n in 0..=6, disagreements at {bad:?}"),
        );

        let bound_ok = (0..=6).all(|n| {
            let r = sym_power_ranks(&b, n);
            r.max_degree() == Some(2 * n as i64)
        });
        report.check(format!("macdonald/top-degree g={g}"), bound_ok, "top degree of S^n = n·2");

        let stable = (|| -> Result<(bool, String)> {
            let lhs = sym_power_curve(g, 2 * g as usize - 1)?;
            let rhs = lambda_binomial(0, 0, g)?.scalar_mul(&range_sum(0, g as i64 - 1));
            Ok((lhs == rhs, "C^(2g-1) = P^{g-1}-bundle over Jac".into()))
        })();
        report.check_result(format!("macdonald/jacobian-bundle g={g}"), stable);
    }
}

fn moduli_suite(report: &mut VerifyReport, genera: RangeInclusive<u32>) {
    for g in genera {
        let odd = n0_odd(g);
        report.check_result(
            format!("moduli/n0-odd-two-routes g={g}"),
            odd.as_ref().map(|c| (true, c.to_string())).map_err(Clone::clone),
        );
        let Ok(odd) = odd else { continue };

        let dim = 3 * g as i64 - 3;
        let dual_ok = odd.dual().scalar_mul(&LaurentInt::power(dim)) == odd;
        report.check(format!("moduli/n0-odd-poincare-duality g={g}"), dual_ok, "class = L^{3g-3}·dual(class)");

        let indep = n0_odd_chain(g, 4 * g as i64 - 1).map(|c| (c == odd, "d = 4g-3 vs 4g-1".to_string()));
        report.check_result(format!("moduli/n0-odd-degree-independence g={g}"), indep);

        let mut flip_ok = true;
        let top_d = 9.max(4 * g as i64 - 1);
        for d in 1..=top_d {
            for i in 0..=omega(d) {
                let step = (|| -> Result<bool> {
                    let cur = pair_moduli(g, d, i)?;
                    let prev = if i == 0 { MotiveClass::zero(g) } else { pair_moduli(g, d, i - 1)? };
                    let (plus, minus) = pw_classes(g, d, i)?;
                    let delta = cur.sub(&prev)?;
                    let mut ok = delta == plus.sub(&minus)?;
                    if d + g as i64 - 1 - 3 * i >= 0 {
                        let direct = sym_power_curve(g, i as usize)?
                            .scalar_mul(&range_sum(i, d + g as i64 - 2 - 2 * i));
                        ok &= delta == direct;
                    }
                    Ok(ok)
                })();
                flip_ok &= step.unwrap_or(false);
            }
        }
        report.check(format!("moduli/flip-additivity g={g}"), flip_ok, format!("all d ≤ {top_d}, all i ≤ ω(d)"));

        let kum = kummer(g);
        let kum_ok = kum.as_ref().map(|k| {
            let two_g = 2 * g as usize;
            let plus: MotiveClass = lambda_binomial(0, 0, g).unwrap();
            let minus = MotiveClass::canonicalize(
                (0..=two_g).map(|a| (a, LaurentInt::constant(if a % 2 == 0 { 1 } else { -1 }))),
                g,
            )
            .unwrap();
            let sum = plus.add(&minus).unwrap();
            let halved = sum.exact_divide(&LaurentInt::constant(2)).unwrap();
            halved == *k && k.rank() == num_bigint::BigInt::from(1u64) << (2 * g - 1)
        });
        report.check(format!("moduli/kummer g={g}"), kum_ok == Ok(true), "rank 2^{2g-1}, even half of (1±1)^h");

        let ss = (|| -> Result<(bool, String)> {
            let direct = ss_preimage(g)?;
            let l = |k: i64| LaurentInt::one() - LaurentInt::power(k);
            let numer = lambda_binomial(0, 0, g)?.scalar_mul(&(l(2 * g as i64 - 1) * l(g as i64)));
            let closed = numer.exact_divide(&(l(1) * l(1)))?;
            Ok((direct == closed, "bundle class via exact divisions".into()))
        })();
        report.check_result(format!("moduli/ss-preimage-closed g={g}"), ss);

        match n0_even(g, 8 * g as i64) {
            Ok(r) => {
                let data = crate::format::report_to_json(&r);
                if let Some(StageValue::Flag(f)) = r.stage("step3_division") {
                    report.diagnostic(format!("moduli/step3-division g={g}"), f.as_str(), Value::Null);
                }
                for name in ["truncation_diff", "m_omega_closed_diff", "n0_stable_closed_diff"] {
                    if let Some(StageValue::Diff(d)) = r.stage(name) {
                        let details = if d.is_empty() {
                            "agree".to_string()
                        } else {
                            format!("{} weight(s) differ, first at {}", d.len(), d[0].weight)
                        };
                        let stage_json = data["stages"]
                            .as_array()
                            .and_then(|s| s.iter().find(|v| v["name"] == name))
                            .cloned()
                            .unwrap_or(Value::Null);
                        report.diagnostic(format!("moduli/{name} g={g}"), details, stage_json);
                    }
                }
            }
            Err(e) => report.check(format!("moduli/n0-even g={g}"), false, format!("error: {e}")),
        }
    }
}

fn realizations_suite(report: &mut VerifyReport, genera: RangeInclusive<u32>) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    for g in genera {
        let res = (|| -> Result<(bool, String)> {
            let x = n0_odd(g)?;
            Ok((betti(&x) == hn_closed(g)?, betti(&x).render("t", "")))
        })();
        report.check_result(format!("realizations/betti-vs-closed g={g}"), res);

        let res = (|| -> Result<(bool, String)> {
            let x = n0_odd(g)?;
            let h = hodge(&x);
            Ok((h == hodge_closed(g)? && h.swap() == h, "hodge(N0) = closed form, x↔y symmetric".into()))
        })();
        report.check_result(format!("realizations/hodge-vs-closed g={g}"), res);

        let diag_ok = (0..RANDOM_CASES).all(|_| {
            let x = random_class(&mut rng, g);
            let h = hodge(&x);
            h.diagonal() == betti(&x) && h.swap() == h
        });
        report.check(
            format!("realizations/hodge-specializes-to-betti g={g}"),
            diag_ok,
            format!("{RANDOM_CASES} random classes"),
        );

        let res = (|| -> Result<(bool, String)> {
            let x = n0_odd(g)?;
            let non_negative = x.components().all(|(_, p)| p.is_non_negative());
            let levels = level_per_weight(&x);
            let ok = non_negative && levels.iter().all(|(&m, &lvl)| lvl as i64 <= m.div_euclid(3));
            Ok((ok, format!("{levels:?}")))
        })();
        report.check_result(format!("realizations/level-bound g={g}"), res);
    }
}

fn jacobians_suite(report: &mut VerifyReport, genera: RangeInclusive<u32>) {
    for g in genera {
        for i in 1..=g {
            let res = (|| -> Result<(bool, String)> {
                let d = decompose(g, i)?;
                let closed = closed_multiplicities(i);
                let coeff = betti(&n0_odd(g)?).coeff(2 * i as i64 - 1);
                let expected: num_bigint::BigInt = d
                    .factors
                    .iter()
                    .map(|&(alpha, m)| binomial(2 * g as u64, 2 * alpha as u64 - 1) * m)
                    .sum();
                Ok((d.factors == closed && coeff == expected, format!("{:?}", d.factors)))
            })();
            report.check_result(format!("jacobians/decompose g={g} i={i}"), res);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn macdonald_suite_passes() {
        let r = run(Suite::Macdonald, 1..=3);
        assert!(r.passed(), "{}", r.to_text());
        assert!(!r.checks.is_empty());
    }

    #[test]
    fn diagnostics_do_not_fail() {
        let r = run(Suite::Moduli, 2..=2);
        assert!(r.checks.iter().any(|c| c.status == Status::Diagnostic));
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn deterministic() {
        let a = run(Suite::Lambda, 1..=2).to_json().to_string();
        let b = run(Suite::Lambda, 1..=2).to_json().to_string();
        assert_eq!(a, b);
    }
}
