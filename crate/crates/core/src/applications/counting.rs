//! Solutions of `a_1 x_1 + ... + a_n x_n = a_1 x_1' + ... + a_n x_n'` with
//! `x_i, x_i'` ranging over finite sets `A_i`.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::convolve::convolve_pmfs;
use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::extremal::assign_signs;
use crate::mass::{Mass, NonnegFn, Pmf};
use crate::rearrange::{classify_regularity, rearrange_pmf};

use super::littlewood_offord::{weighted_sum_distribution, LinearForm};

fn collision(f: &NonnegFn) -> Mass {
    f.iter().fold(Mass::zero(), |acc, (_, v)| acc + v * v)
}

fn count_from(probability: Mass, sizes: &[usize]) -> BigUint {
    let scale: BigInt = sizes.iter().map(|&s| BigInt::from(s) * BigInt::from(s)).product();
    let n = probability * Mass::from_integer(scale);
    assert!(n.is_integer(), "collision count must be an integer");
    n.to_integer().to_biguint().expect("counts are nonnegative")
}

/// Returns the number of solutions for the given coefficients and the count
/// for the maximizing configuration: all coefficients 1 and every `A_i`
/// replaced by its rearranged set, signs alternating over the even-sized sets.
pub fn count_solutions(
    domain: Domain,
    sets: &[Vec<i64>],
    coefficients: &[i64],
) -> Result<(BigUint, BigUint)> {
    if sets.len() != coefficients.len() {
        return Err(Error::LengthMismatch(sets.len(), coefficients.len()));
    }
    if sets.is_empty() {
        return Err(Error::EmptySequence);
    }
    let laws = sets
        .iter()
        .map(|a| Pmf::uniform(domain, a.iter().map(|&x| domain.reduce(x))))
        .collect::<Result<Vec<_>>>()?;
    let sizes: Vec<usize> = laws.iter().map(|f| f.support_len()).collect();

    let form = LinearForm::new(coefficients.to_vec(), laws.clone())?;
    let actual = collision(weighted_sum_distribution(&form)?.as_fn());

    let tags: Vec<_> = laws.iter().map(|f| classify_regularity(f)).collect();
    let signs = assign_signs(&tags)?;
    let rearranged =
        laws.iter().zip(signs.signs()).map(|(f, &s)| rearrange_pmf(f, s)).collect::<Result<Vec<_>>>()?;
    let best = collision(convolve_pmfs(&rearranged)?.as_fn());

    Ok((count_from(actual, &sizes), count_from(best, &sizes)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u32) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn examples() {
        let z = Domain::INTEGERS;
        assert_eq!(count_solutions(z, &[vec![0, 1]], &[1]).unwrap(), (n(2), n(2)));
        assert_eq!(count_solutions(z, &[vec![0, 1], vec![0, 1]], &[1, 1]).unwrap(), (n(6), n(6)));
        let d = Domain::cyclic(5).unwrap();
        assert_eq!(count_solutions(d, &[vec![0, 2]], &[2]).unwrap(), (n(2), n(2)));
    }

    #[test]
    fn spread_coefficients_lose_solutions() {
        let z = Domain::INTEGERS;
        let sets = vec![vec![0, 1], vec![0, 1]];
        // With a = (1, 2) every pair of sums is distinct: only the 4 diagonal solutions.
        assert_eq!(count_solutions(z, &sets, &[1, 2]).unwrap(), (n(4), n(6)));
        let sets = vec![vec![0, 3, 7], vec![1, 2]];
        let (a, b) = count_solutions(z, &sets, &[1, 1]).unwrap();
        assert!(a <= b);
    }

    #[test]
    fn errors() {
        let z = Domain::INTEGERS;
        assert_eq!(count_solutions(z, &[vec![]], &[1]), Err(Error::EmptySet));
        assert_eq!(count_solutions(z, &[vec![1]], &[0]), Err(Error::ZeroCoefficient));
    }
}
