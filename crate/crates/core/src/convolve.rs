//! Exact convolution `(f * g)(k) = sum_{i + j = k} f(i) g(j)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mass::{Mass, NonnegFn, Pmf};

/// Values rescaled to integers over their least common denominator.
fn integer_form(f: &NonnegFn) -> (BigInt, Vec<(i64, BigInt)>) {
    let lcd = f.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let numers = f.iter().map(|(i, v)| (i, v.numer() * (&lcd / v.denom()))).collect();
    (lcd, numers)
}

/// Schoolbook convolution over exact rationals. Each output value is reduced
/// once, after integer accumulation over the common denominator.
pub fn convolve(f: &NonnegFn, g: &NonnegFn) -> Result<NonnegFn> {
    f.ensure_same_domain(g)?;
    let domain = f.domain();
    let (df, nf) = integer_form(f);
    let (dg, ng) = integer_form(g);
    let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
    for (i, a) in &nf {
        for (j, b) in &ng {
            let k = domain.reduce_wide(*i as i128 + *j as i128);
            *acc.entry(k).or_insert_with(BigInt::zero) += a * b;
        }
    }
    let denom = df * dg;
    Ok(NonnegFn::from_parts(domain, acc.into_iter().map(|(k, n)| (k, Mass::new(n, denom.clone())))))
}

/// Left fold of [`convolve`].
pub fn convolve_many<F: AsRef<NonnegFn>>(fs: &[F]) -> Result<NonnegFn> {
    let (first, rest) = fs.split_first().ok_or(Error::EmptySequence)?;
    rest.iter().try_fold(first.as_ref().clone(), |acc, f| convolve(&acc, f.as_ref()))
}

pub fn convolve_pmfs(fs: &[Pmf]) -> Result<Pmf> {
    convolve_many(fs).map(Pmf::from_fn_unchecked)
}
