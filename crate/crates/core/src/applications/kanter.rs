//! Kanter's function `G(x) = e^{-x} (I_0(x) + I_1(x))` and the small-ball
//! bound it gives for sums of symmetric three-point variables.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::convolve::convolve_pmfs;
use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::mass::{make_pmf, Mass, Pmf};

/// `e^{-x} I_nu(x)` by the ascending series, with every term kept in log
/// form so that nothing overflows for large `x`.
fn scaled_bessel(nu: u32, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0 { 1.0 } else { 0.0 };
    }
    let half_ln = (x / 2.0).ln();
    let nu_f = nu as f64;
    let mut ln_term = nu_f * half_ln - x - (1..=nu).map(|j| (j as f64).ln()).sum::<f64>();
    let mut sum = 0.0;
    let mut k = 0.0;
    loop {
        let term = ln_term.exp();
        sum += term;
        let ratio = (x / 2.0).powi(2) / ((k + 1.0) * (k + 1.0 + nu_f));
        if ratio < 1.0 {
            let tail = term * ratio / (1.0 - ratio);
            if tail <= 1e-17 * sum {
                return sum;
            }
        }
        ln_term += 2.0 * half_ln - (k + 1.0).ln() - (k + 1.0 + nu_f).ln();
        k += 1.0;
    }
}

fn check_argument(x: f64) -> Result<()> {
    if x.is_nan() || x < 0.0 {
        Err(Error::NegativeArgument(x.to_string()))
    } else {
        Ok(())
    }
}

pub fn bessel_i0(x: f64) -> Result<f64> {
    check_argument(x)?;
    Ok(scaled_bessel(0, x) * x.exp())
}

pub fn bessel_i1(x: f64) -> Result<f64> {
    check_argument(x)?;
    Ok(scaled_bessel(1, x) * x.exp())
}

pub fn kanter_g(x: f64) -> Result<f64> {
    check_argument(x)?;
    Ok(scaled_bessel(0, x) + scaled_bessel(1, x))
}

#[derive(Clone, Debug, PartialEq)]
pub struct KanterReport {
    /// Exact `P(X_1 + ... + X_n in {0, 1})`.
    pub probability: Mass,
    /// `G(sum (1 - q_i))`.
    pub bound: f64,
    pub holds: bool,
}

/// Law with mass `q` at 0 and `(1 - q)/2` at each of `+1`, `-1`.
pub fn three_point_law(q: &Mass) -> Result<Pmf> {
    if q.is_negative() || q > &Mass::one() {
        return Err(Error::InvalidProbability(q.to_string()));
    }
    let side = (Mass::one() - q) / Mass::from_integer(2.into());
    make_pmf(Domain::INTEGERS, [(-1, side.clone()), (0, q.clone()), (1, side)])
}

pub fn kanter_small_ball_check(qs: &[Mass]) -> Result<KanterReport> {
    let laws = qs.iter().map(three_point_law).collect::<Result<Vec<_>>>()?;
    let sum = convolve_pmfs(&laws)?;
    let probability = sum.value(0) + sum.value(1);
    let x: Mass = qs.iter().fold(Mass::zero(), |acc, q| acc + (Mass::one() - q));
    let bound = kanter_g(x.to_f64().expect("finite rational"))?;
    let holds = probability.to_f64().expect("finite rational") <= bound + 1e-12;
    Ok(KanterReport { probability, bound, holds })
}

/// `G(1) = e^{-1} (I_0(1) + I_1(1))`, used by the examples below.
#[cfg(test)]
const G_ONE: f64 = 0.673_670_022_943_348_9;
