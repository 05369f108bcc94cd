//! Isogeny types of intermediate jacobians read off the odd-weight parts of
//! the class of `N₀(2,1)`.

use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::moduli::n0_odd;

/// `J^i ~ Π_α (J^α Jac C)^{m_α}`, stored as `(α, m_α)` with α increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianDecomposition {
    pub index: u32,
    pub factors: Vec<(u32, u64)>,
}

/// Matches the weight `2i - 1` part of `N₀(2,1)` against
/// `Σ_α m_α · λ_{2α-1} · L^{i-α}`.
pub fn decompose(g: u32, i: u32) -> Result<JacobianDecomposition> {
    if g < 2 || i < 1 || i > g {
        return Err(Error::InvalidInput(format!(
            "jacobian index {i} outside 1..={g} (genus must be >= 2)"
        )));
    }
    let part = n0_odd(g)?.weight_part(2 * i as i64 - 1).class;
    let max_alpha = (i + 1) / 3;
    let mut factors = Vec::new();
    for (a, b, c) in part.monomials() {
        if a % 2 == 0 {
            return Err(Error::Decomposition(format!("unexpected even index λ{a} in odd weight")));
        }
        let alpha = (a as u32).div_ceil(2);
        if b != i as i64 - alpha as i64 {
            return Err(Error::Decomposition(format!("term λ{a}·L^{b} has the wrong twist")));
        }
        if alpha > max_alpha {
            return Err(Error::Decomposition(format!(
                "factor J^{alpha} exceeds the bound {max_alpha} at index {i}"
            )));
        }
        if !c.is_positive() {
            return Err(Error::Decomposition(format!("non-positive multiplicity {c} for λ{a}")));
        }
        let mult = c
            .to_u64()
            .ok_or_else(|| Error::Decomposition(format!("multiplicity {c} too large")))?;
        factors.push((alpha, mult));
    }
    Ok(JacobianDecomposition { index: i, factors })
}

/// `m_α = floor((i + 3 - 3α) / 2)` for `α = 1..=floor((i + 1) / 3)`.
pub fn closed_multiplicities(i: u32) -> Vec<(u32, u64)> {
    (1..=(i + 1) / 3)
        .map(|alpha| (alpha, ((i + 3 - 3 * alpha) / 2) as u64))
        .filter(|&(_, m)| m > 0)
        .collect()
}
