//! Cauchy-Davenport: `|A + B| >= min(|A| + |B| - 1, p)`, with equality for
//! the rearranged pair `A+ + B-`.

use std::collections::BTreeSet;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::mass::NonnegFn;
use crate::rearrange::{rearrange, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchyDavenportReport {
    pub sumset_size: usize,
    pub bound: usize,
    pub rearranged_size: usize,
    pub holds: bool,
}

fn sumset(domain: Domain, a: &BTreeSet<i64>, b: &BTreeSet<i64>) -> BTreeSet<i64> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| domain.reduce_wide(x as i128 + y as i128))).collect()
}

fn rearranged_set(domain: Domain, set: &BTreeSet<i64>, sign: Sign) -> Result<BTreeSet<i64>> {
    let indicator = NonnegFn::indicator(domain, set.iter().copied())?;
    Ok(rearrange(&indicator, sign)?.support().collect())
}

pub fn cauchy_davenport_check(a: &[i64], b: &[i64], domain: Domain) -> Result<CauchyDavenportReport> {
    let a: BTreeSet<i64> = a.iter().map(|&x| domain.reduce(x)).collect();
    let b: BTreeSet<i64> = b.iter().map(|&x| domain.reduce(x)).collect();
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let sumset_size = sumset(domain, &a, &b).len();
    let linear = a.len() + b.len() - 1;
    let bound = match domain.modulus() {
        Some(p) => linear.min(p as usize),
        None => linear,
    };
    let rearranged_size =
        sumset(domain, &rearranged_set(domain, &a, Sign::Plus)?, &rearranged_set(domain, &b, Sign::Minus)?)
            .len();
    Ok(CauchyDavenportReport { sumset_size, bound, rearranged_size, holds: sumset_size >= bound })
}
