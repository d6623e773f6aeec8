//! Instance generators shared by the property suites. Instances are derived
//! from a proptest-drawn seed so that failures replay deterministically.
#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use zpz_entropy::random::{random_mixed_pmf, random_regular_pmf, seeded, TestRng};
use zpz_entropy::{Domain, Pmf, Regularity};

pub const PRIMES: [i64; 5] = [3, 5, 7, 11, 13];

pub fn domain_strategy() -> impl Strategy<Value = Domain> {
    prop_oneof![
        4 => prop::sample::select(PRIMES.to_vec()).prop_map(|p| Domain::cyclic(p).unwrap()),
        1 => Just(Domain::INTEGERS),
    ]
}

pub fn cyclic_strategy() -> impl Strategy<Value = Domain> {
    prop::sample::select(PRIMES.to_vec()).prop_map(|p| Domain::cyclic(p).unwrap())
}

pub fn pmf_in(rng: &mut TestRng, d: Domain) -> Pmf {
    random_mixed_pmf(rng, d, 64, 6)
}

pub fn regular_in(rng: &mut TestRng, d: Domain) -> Pmf {
    let kind = if rng.gen_bool(0.5) { Regularity::Triangle } else { Regularity::Square };
    let cap = d.modulus().map_or(8, |p| p as usize);
    random_regular_pmf(rng, d, kind, cap, 64, 6)
}

/// A domain and a single random pmf on it.
pub fn pmf_strategy() -> impl Strategy<Value = Pmf> {
    (domain_strategy(), any::<u64>()).prop_map(|(d, seed)| pmf_in(&mut seeded(seed), d))
}

/// `n` random pmfs on a common domain, `n` drawn from `sizes`.
pub fn family_strategy(
    domains: impl Strategy<Value = Domain>,
    sizes: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Vec<Pmf>> {
    (domains, sizes, any::<u64>()).prop_map(|(d, n, seed)| {
        let mut rng = seeded(seed);
        (0..n).map(|_| pmf_in(&mut rng, d)).collect()
    })
}

/// Like [`family_strategy`] but every factor triangle- or square-regular.
pub fn regular_family_strategy(
    domains: impl Strategy<Value = Domain>,
    sizes: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Vec<Pmf>> {
    (domains, sizes, any::<u64>()).prop_map(|(d, n, seed)| {
        let mut rng = seeded(seed);
        (0..n).map(|_| regular_in(&mut rng, d)).collect()
    })
}

pub fn close(a: f64, b: f64) -> bool {
    a == b || (a - b).abs() <= 1e-12
}
