//! Seeded generators for random test instances.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::domain::Domain;
use crate::mass::{make_pmf, mass, Pmf};
use crate::rearrange::Regularity;

pub type TestRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Distinct random indices: anywhere in a cyclic domain, within
/// `[-spread, spread]` on the integers.
pub fn random_set<R: Rng>(rng: &mut R, domain: Domain, size: usize, spread: i64) -> Vec<i64> {
    let pool: Vec<i64> = match domain.indices() {
        Some(all) => all.collect(),
        None => (-spread..=spread).collect(),
    };
    assert!(size <= pool.len(), "set larger than the index pool");
    let mut picked: Vec<i64> = pool.choose_multiple(rng, size).copied().collect();
    picked.shuffle(rng);
    picked
}

/// `k` positive integers summing to `total`.
fn composition<R: Rng>(rng: &mut R, total: i64, k: usize) -> Vec<i64> {
    assert!(total >= k as i64 && k > 0);
    let mut cuts: BTreeSet<i64> = BTreeSet::new();
    while cuts.len() < k - 1 {
        cuts.insert(rng.gen_range(1..total));
    }
    let mut prev = 0;
    let mut parts: Vec<i64> = cuts
        .into_iter()
        .chain(std::iter::once(total))
        .map(|c| {
            let w = c - prev;
            prev = c;
            w
        })
        .collect();
    parts.shuffle(rng);
    parts
}

fn pmf_from_weights(domain: Domain, positions: &[i64], weights: &[i64]) -> Pmf {
    let total: i64 = weights.iter().sum();
    make_pmf(domain, positions.iter().zip(weights).map(|(&i, &w)| (i, mass(w, total))))
        .expect("generated weights form a pmf")
}

fn support_cap(domain: Domain, max_support: usize) -> usize {
    match domain.modulus() {
        Some(p) => max_support.min(p as usize),
        None => max_support,
    }
}

/// A random pmf with at most `max_support` atoms and common denominator at
/// most `max_denominator`.
pub fn random_pmf<R: Rng>(
    rng: &mut R,
    domain: Domain,
    max_support: usize,
    max_denominator: i64,
    spread: i64,
) -> Pmf {
    let cap = support_cap(domain, max_support).min(max_denominator as usize).max(1);
    let k = rng.gen_range(1..=cap);
    let positions = random_set(rng, domain, k, spread);
    let total = rng.gen_range(k as i64..=max_denominator.max(k as i64));
    let weights = composition(rng, total, k);
    pmf_from_weights(domain, &positions, &weights)
}

/// A random triangle- or square-regular pmf: values come as one lone maximum
/// plus equal pairs (triangle) or as equal pairs only (square).
pub fn random_regular_pmf<R: Rng>(
    rng: &mut R,
    domain: Domain,
    kind: Regularity,
    max_support: usize,
    max_denominator: i64,
    spread: i64,
) -> Pmf {
    let cap = support_cap(domain, max_support);
    let lone = usize::from(kind == Regularity::Triangle);
    assert!(kind != Regularity::Neither, "regular kind required");
    let max_pairs = ((cap - lone) / 2).min(((max_denominator as usize).saturating_sub(lone)) / 2);
    let pairs = if lone == 1 { rng.gen_range(0..=max_pairs) } else { rng.gen_range(1..=max_pairs.max(1)) };
    let pair_weights: Vec<i64> = (0..pairs).map(|_| rng.gen_range(1..=4)).collect();
    let mut weights: Vec<i64> = pair_weights.iter().flat_map(|&w| [w, w]).collect();
    if lone == 1 {
        let top = pair_weights.iter().copied().max().unwrap_or(1);
        weights.push(rng.gen_range(top..=top + 3));
    }
    while weights.iter().sum::<i64>() > max_denominator {
        for w in &mut weights {
            *w = (*w / 2).max(1);
        }
        if lone == 1 {
            let top = weights[..weights.len() - 1].iter().copied().max().unwrap_or(1);
            let last = weights.len() - 1;
            weights[last] = weights[last].max(top);
        }
    }
    let positions = random_set(rng, domain, weights.len(), spread);
    pmf_from_weights(domain, &positions, &weights)
}

/// Mixture used by the randomized suites: arbitrary pmfs interleaved with
/// regular ones, uniforms and point masses.
pub fn random_mixed_pmf<R: Rng>(rng: &mut R, domain: Domain, max_denominator: i64, spread: i64) -> Pmf {
    let max_support = match domain.modulus() {
        Some(p) => p as usize,
        None => 2 * spread as usize + 1,
    };
    match rng.gen_range(0..10) {
        0 => Pmf::point(domain, random_set(rng, domain, 1, spread)[0]).unwrap(),
        1 => {
            let k = rng.gen_range(1..=max_support.min(max_denominator as usize));
            Pmf::uniform(domain, random_set(rng, domain, k, spread)).unwrap()
        }
        2 | 3 => random_regular_pmf(rng, domain, Regularity::Triangle, max_support, max_denominator, spread),
        4 | 5 => random_regular_pmf(rng, domain, Regularity::Square, max_support, max_denominator, spread),
        _ => random_pmf(rng, domain, max_support, max_denominator, spread),
    }
}
