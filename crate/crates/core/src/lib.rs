//! Exact arithmetic for Grothendieck classes of motives generated by the
//! weight-one motive `h¹C` of a curve and the Lefschetz class `L`.
//!
//! The building blocks are [`LaurentInt`] (Tate polynomials) and
//! [`MotiveClass`] (λ-linear combinations). On top of them sit truncated
//! series, symmetric powers, the moduli pipelines, and the Betti and Hodge
//! realizations. Each capability has a runnable program under `examples/`.

pub mod cli;
pub mod error;
pub mod format;
pub mod jacobians;
pub mod lambda;
pub mod laurent;
pub mod macdonald;
pub mod moduli;
pub mod realizations;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use jacobians::{closed_multiplicities, decompose, JacobianDecomposition};
pub use lambda::{lambda_binomial, MotiveClass, WeightPart};
pub use laurent::{Exactness, LaurentInt};
pub use macdonald::{sym_power_bruteforce, sym_power_curve, sym_power_ranks, GradedRanks};
pub use moduli::{
    kummer, m_omega_s, n0_even, n0_even_stable, n0_odd, pair_moduli, pw_classes, range_sum,
    ss_preimage, PipelineReport,
};
pub use realizations::{betti, hn_closed, hodge, hodge_closed, level_per_weight, BiLaurentInt};
pub use series::{big_f, binomial_series, geometric, FMode, MotiveSeries};
