//! Weighted sums `S_a = sum a_i X_i` and their small-ball probabilities.

use crate::convolve::convolve_pmfs;
use crate::entropy::{majorization, renyi, Alpha};
use crate::error::{Error, Result};
use crate::mass::{Mass, Pmf};
use crate::rearrange::{classify_regularity, rearrange, Regularity, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    coefficients: Vec<i64>,
    factors: Vec<Pmf>,
}

impl LinearForm {
    pub fn new(coefficients: Vec<i64>, factors: Vec<Pmf>) -> Result<Self> {
        if coefficients.len() != factors.len() {
            return Err(Error::LengthMismatch(coefficients.len(), factors.len()));
        }
        let first = factors.first().ok_or(Error::EmptySequence)?;
        let domain = first.domain();
        if factors.iter().any(|f| f.domain() != domain) {
            return Err(Error::DomainMismatch);
        }
        if coefficients.iter().any(|&a| domain.reduce(a) == 0) {
            return Err(Error::ZeroCoefficient);
        }
        Ok(LinearForm { coefficients, factors })
    }

    /// The same law repeated `coefficients.len()` times.
    pub fn iid(coefficients: Vec<i64>, law: Pmf) -> Result<Self> {
        let factors = vec![law; coefficients.len()];
        LinearForm::new(coefficients, factors)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn factors(&self) -> &[Pmf] {
        &self.factors
    }
}

pub fn weighted_sum_distribution(form: &LinearForm) -> Result<Pmf> {
    let scaled = form
        .factors
        .iter()
        .zip(&form.coefficients)
        .map(|(f, &a)| f.scale_index(a))
        .collect::<Result<Vec<_>>>()?;
    convolve_pmfs(&scaled)
}

/// `max_x P(S_a = x)`, exactly.
pub fn small_ball(form: &LinearForm) -> Result<Mass> {
    let s = weighted_sum_distribution(form)?;
    Ok(s.max_value().cloned().expect("a pmf has nonempty support"))
}

#[derive(Clone, Debug, PartialEq)]
pub struct LoBound {
    /// `H_alpha(S_a)`.
    pub weighted: f64,
    /// `H_alpha(X_1 + ... + X_n)`.
    pub unweighted: f64,
    /// Whether `H_alpha(S_a) >= H_alpha(X_1 + ... + X_n)`.
    pub holds: bool,
    /// Whether the verdict comes from exact majorization rather than from
    /// comparing floating-point entropies.
    pub exact: bool,
}

fn in_rearranged_position(f: &Pmf) -> Result<bool> {
    Ok(&rearrange(f, Sign::Plus)? == f.as_fn() || &rearrange(f, Sign::Minus)? == f.as_fn())
}

/// Compares `H_alpha(S_a)` with `H_alpha(X_1 + ... + X_n)` for factors that
/// are regular and already equal to their own `+` or `-` rearrangement.
pub fn lo_entropy_bound(form: &LinearForm, alpha: &Alpha) -> Result<LoBound> {
    for (i, f) in form.factors.iter().enumerate() {
        if classify_regularity(f) == Regularity::Neither || !in_rearranged_position(f)? {
            return Err(Error::HypothesisViolated(i));
        }
    }
    let weighted_law = weighted_sum_distribution(form)?;
    let plain_law = convolve_pmfs(&form.factors)?;
    let weighted = renyi(&weighted_law, alpha);
    let unweighted = renyi(&plain_law, alpha);
    let (holds, exact) = if majorization(&weighted_law, &plain_law)?.is_majorized() {
        (true, true)
    } else {
        match alpha {
            Alpha::Infinity => (weighted_law.max_value() <= plain_law.max_value(), true),
            Alpha::Zero => (weighted_law.support_len() >= plain_law.support_len(), true),
            _ => (weighted >= unweighted - 1e-12, false),
        }
    };
    Ok(LoBound { weighted, unweighted, holds, exact })
}
