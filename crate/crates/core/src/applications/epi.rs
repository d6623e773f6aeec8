//! Entropy power `N = e^{2H}` for uniform laws on finite integer sets, and the
//! entropy gain on doubling.

use crate::convolve::convolve_pmfs;
use crate::domain::Domain;
use crate::entropy::entropy_power;
use crate::error::{Error, Result};
use crate::mass::Pmf;

#[derive(Clone, Debug, PartialEq)]
pub struct EpiReport {
    pub n_sum: f64,
    pub n_x: f64,
    pub n_y: f64,
    /// `n_sum + 1 - n_x - n_y`.
    pub slack: f64,
}

impl EpiReport {
    pub fn holds(&self) -> bool {
        self.slack >= -1e-9
    }
}

/// Entropy powers for `X` uniform on `a`, `Y` uniform on `b`, independent.
pub fn discrete_epi_check(a: &[i64], b: &[i64]) -> Result<EpiReport> {
    let x = Pmf::uniform(Domain::INTEGERS, a.iter().copied())?;
    let y = Pmf::uniform(Domain::INTEGERS, b.iter().copied())?;
    let sum = convolve_pmfs(&[x.clone(), y.clone()])?;
    let (n_sum, n_x, n_y) = (entropy_power(&sum), entropy_power(&x), entropy_power(&y));
    Ok(EpiReport { n_sum, n_x, n_y, slack: n_sum + 1.0 - n_x - n_y })
}

/// For `X, X'` uniform on an `n`-point set: the closed form of
/// `H(f+ * f-) - H(f) = (1 - 1/n) ln n - 2 sum_{i<n} (i/n^2) ln i`, and the
/// estimate `1/2 - ln n / n - 1/(2n^2)` it dominates.
pub fn doubling_gap(n: u64) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let nf = n as f64;
    let weighted: f64 = (2..n).map(|i| i as f64 * (i as f64).ln()).sum();
    let gap = (1.0 - 1.0 / nf) * nf.ln() - 2.0 * weighted / (nf * nf);
    let estimate = 0.5 - nf.ln() / nf - 1.0 / (2.0 * nf * nf);
    Ok((gap, estimate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::{renyi, Alpha};
    use crate::rearrange::{rearrange_pmf, Sign};
    use std::f64::consts::LN_2;

    #[test]
    fn epi_examples() {
        let r = discrete_epi_check(&[0, 1], &[0, 1]).unwrap();
        assert!((r.n_x - 4.0).abs() < 1e-12 && (r.n_y - 4.0).abs() < 1e-12);
        assert!((r.n_sum - 8.0).abs() < 1e-12);
        assert!((r.slack - 1.0).abs() < 1e-12);
        let r = discrete_epi_check(&[5], &[-3]).unwrap();
        assert_eq!((r.n_sum, r.n_x, r.n_y, r.slack), (1.0, 1.0, 1.0, 0.0));
        let r = discrete_epi_check(&[0, 1, 2], &[0, 3]).unwrap();
        assert!((r.n_sum - 36.0).abs() < 1e-9, "six distinct sums");
        assert!(r.slack >= 0.0 && r.holds());
        assert_eq!(discrete_epi_check(&[], &[0]), Err(Error::EmptySet));
    }

    #[test]
    fn gap_examples() {
        let (gap, est) = doubling_gap(2).unwrap();
        assert!((gap - 0.5 * LN_2).abs() < 1e-12);
        assert!((est - (0.5 - 0.5 * LN_2 - 0.125)).abs() < 1e-12);
        assert!(gap >= est);
        let (gap, est) = doubling_gap(10).unwrap();
        assert!((est - (0.5 - 10f64.ln() / 10.0 - 1.0 / 200.0)).abs() < 1e-15);
        assert!(gap >= est);
        let (gap, est) = doubling_gap(1_000_000).unwrap();
        assert!(gap >= est);
        assert!((gap - 0.5).abs() < 1e-3);
        assert_eq!(doubling_gap(1), Err(Error::TooSmall(1)));
    }

    #[test]
    fn gap_matches_direct_entropy() {
        for n in 2..=12i64 {
            let f = Pmf::uniform(Domain::INTEGERS, 0..n).unwrap();
            let pair = convolve_pmfs(&[
                rearrange_pmf(&f, Sign::Plus).unwrap(),
                rearrange_pmf(&f, Sign::Minus).unwrap(),
            ])
            .unwrap();
            let direct = renyi(&pair, &Alpha::One) - renyi(&f, &Alpha::One);
            let (gap, _) = doubling_gap(n as u64).unwrap();
            assert!((gap - direct).abs() < 1e-12, "n = {n}");
        }
    }
}
