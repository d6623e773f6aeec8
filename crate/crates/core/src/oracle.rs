//! Brute-force certifiers. These search exhaustively or enumerate every
//! outcome, sharing as little code as possible with the fast paths they check.

use std::collections::HashMap;

use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::applications::littlewood_offord::LinearForm;
use crate::convolve::convolve_many;
use crate::domain::Domain;
use crate::entropy::{majorization, renyi, Alpha};
use crate::error::{Error, Result};
use crate::extremal::{extremal_distribution, extremal_distribution_fast};
use crate::mass::{make_pmf, Mass, Pmf};

/// Largest modulus accepted by [`min_entropy_over_permutations`].
pub const MAX_PERMUTATION_MODULUS: i64 = 7;

/// Largest outcome count accepted by [`brute_small_ball`].
pub const MAX_OUTCOMES: u128 = 1_000_000;

/// Two bijections of the centered index set; `first[k]` is the image of the
/// `k`-th index `k - (p-1)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationPair {
    pub first: Vec<i64>,
    pub second: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PermutationMinimum {
    pub entropy: f64,
    pub pair: PermutationPair,
    /// The minimizing distribution `T1 f * T2 g`.
    pub distribution: Pmf,
    /// Number of (value arrangement) pairs examined.
    pub searched: u64,
}

/// Rearranges `v` into the next lexicographic permutation; false at the end.
fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Distinct values of `f` on every index (zeros included), as class ids
/// sorted so that class 0 is the largest value.
fn value_classes(f: &Pmf, p: i64) -> (Vec<f64>, Vec<u32>) {
    let h = (p - 1) / 2;
    let mut values: Vec<Mass> = (-h..=h).map(|i| f.value(i)).collect();
    values.sort_by(|a, b| b.cmp(a));
    let mut distinct: Vec<Mass> = values.clone();
    distinct.dedup();
    let classes = values.iter().map(|v| distinct.iter().position(|d| d == v).unwrap() as u32).collect();
    let floats = distinct.iter().map(|d| d.to_f64().unwrap()).collect();
    (floats, classes)
}

fn arrangements(mut classes: Vec<u32>, pin_first: bool) -> Vec<Vec<u32>> {
    classes.sort_unstable();
    let mut out = Vec::new();
    loop {
        if !pin_first || classes[0] == 0 {
            out.push(classes.clone());
        }
        if !next_permutation(&mut classes) {
            return out;
        }
    }
}

fn float_renyi(s: &[f64], alpha: &Alpha) -> f64 {
    match alpha {
        Alpha::Zero => (s.iter().filter(|&&x| x > 0.0).count() as f64).ln(),
        Alpha::One => -s.iter().filter(|&&x| x > 0.0).map(|&x| x * x.ln()).sum::<f64>(),
        Alpha::Infinity => -s.iter().copied().fold(0.0, f64::max).ln(),
        Alpha::Finite(_) => {
            let a = alpha.to_f64();
            s.iter().filter(|&&x| x > 0.0).map(|&x| x.powf(a)).sum::<f64>().ln() / (1.0 - a)
        }
    }
}

/// Bijection sending the indices of `f` holding each value class onto the
/// positions where `arrangement` places that class, in index order.
fn bijection(f: &Pmf, p: i64, class_values: &[Mass], arrangement: &[u32]) -> Vec<i64> {
    let h = (p - 1) / 2;
    let mut targets: Vec<Vec<i64>> = vec![Vec::new(); class_values.len()];
    for (k, &c) in arrangement.iter().enumerate() {
        targets[c as usize].push(k as i64 - h);
    }
    let mut used = vec![0usize; class_values.len()];
    (-h..=h)
        .map(|i| {
            let c = class_values.iter().position(|v| *v == f.value(i)).unwrap();
            used[c] += 1;
            targets[c][used[c] - 1]
        })
        .collect()
}

fn distinct_values(f: &Pmf, p: i64) -> Vec<Mass> {
    let h = (p - 1) / 2;
    let mut values: Vec<Mass> = (-h..=h).map(|i| f.value(i)).collect();
    values.sort_by(|a, b| b.cmp(a));
    values.dedup();
    values
}

/// Minimum of `H_alpha(T1 f * T2 g)` over all bijections `T1`, `T2` of
/// `Z/pZ`, for `p <= 7`.
///
/// Only the placement of values matters, so the search runs over distinct
/// arrangements of each value multiset. Rotating `g` only translates the
/// sum, so `g`'s largest value is pinned to the first index. Candidates are
/// ranked in floating point; ties go to the lexicographically smallest pair
/// of arrangements. The reported entropy is recomputed exactly at the argmin.
pub fn min_entropy_over_permutations(f: &Pmf, g: &Pmf, alpha: &Alpha) -> Result<PermutationMinimum> {
    f.ensure_same_domain(g)?;
    let domain = f.domain();
    let p = match domain.modulus() {
        Some(p) if p <= MAX_PERMUTATION_MODULUS => p,
        Some(p) => return Err(Error::DomainTooLarge(format!("p = {p} exceeds {MAX_PERMUTATION_MODULUS}"))),
        None => return Err(Error::DomainTooLarge("the integers are infinite".into())),
    };
    let n = p as usize;
    let (fv, fc) = value_classes(f, p);
    let (gv, gc) = value_classes(g, p);
    let fa = arrangements(fc, false);
    let ga = arrangements(gc, true);
    let searched = (fa.len() * ga.len()) as u64;

    let best = fa
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            let x: Vec<f64> = a.iter().map(|&c| fv[c as usize]).collect();
            let mut local: Option<(f64, usize, usize)> = None;
            let mut s = vec![0.0; n];
            for (j, b) in ga.iter().enumerate() {
                s.iter_mut().for_each(|v| *v = 0.0);
                for (k, &xv) in x.iter().enumerate() {
                    if xv == 0.0 {
                        continue;
                    }
                    for (l, &c) in b.iter().enumerate() {
                        s[(k + l) % n] += xv * gv[c as usize];
                    }
                }
                let h = float_renyi(&s, alpha);
                if local.is_none_or(|(bh, _, _)| h < bh) {
                    local = Some((h, i, j));
                }
            }
            local.expect("at least one arrangement")
        })
        .reduce_with(|a, b| if b.0 < a.0 || (b.0 == a.0 && (b.1, b.2) < (a.1, a.2)) { b } else { a })
        .expect("at least one arrangement");

    let (_, i, j) = best;
    let first = bijection(f, p, &distinct_values(f, p), &fa[i]);
    let second = bijection(g, p, &distinct_values(g, p), &ga[j]);
    let moved = |h: &Pmf, map: &[i64]| {
        let half = (p - 1) / 2;
        make_pmf(domain, (-half..=half).map(|k| (map[(k + half) as usize], h.value(k))))
    };
    let distribution = Pmf::try_from_fn(convolve_many(&[moved(f, &first)?, moved(g, &second)?])?)?;
    let entropy = renyi(&distribution, alpha);
    Ok(PermutationMinimum { entropy, pair: PermutationPair { first, second }, distribution, searched })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtremalCheckReport {
    pub checked: usize,
    /// Instances where the enumerated and dynamic-programming forms differ.
    pub mismatches: Vec<usize>,
    /// Instances where the convolution is not majorized by the bound.
    pub unmajorized: Vec<usize>,
}

impl ExtremalCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.unmajorized.is_empty()
    }
}

/// Checks, per instance, that both extremal forms agree exactly and that the
/// bound majorizes the actual convolution.
pub fn brute_extremal_check(instances: &[Vec<Pmf>]) -> Result<ExtremalCheckReport> {
    let outcomes = instances
        .par_iter()
        .map(|fs| -> Result<(bool, bool)> {
            let slow = extremal_distribution(fs)?;
            let fast = extremal_distribution_fast(fs)?;
            let lhs = convolve_many(fs)?;
            Ok((slow == fast, majorization(&lhs, &slow)?.is_majorized()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = ExtremalCheckReport { checked: instances.len(), ..Default::default() };
    for (k, (same, majorized)) in outcomes.into_iter().enumerate() {
        if !same {
            report.mismatches.push(k);
        }
        if !majorized {
            report.unmajorized.push(k);
        }
    }
    Ok(report)
}

/// `max_x P(S_a = x)` by listing every outcome of `(X_1, ..., X_n)`.
pub fn brute_small_ball(form: &LinearForm) -> Result<Mass> {
    let supports: Vec<Vec<(i64, Mass)>> =
        form.factors().iter().map(|f| f.iter().map(|(i, v)| (i, v.clone())).collect()).collect();
    let outcomes: u128 = supports.iter().map(|s| s.len() as u128).product();
    if outcomes > MAX_OUTCOMES {
        return Err(Error::TooManyOutcomes(outcomes));
    }
    let domain: Domain = form.factors()[0].domain();
    let mut totals: HashMap<i64, Mass> = HashMap::new();
    let mut digits = vec![0usize; supports.len()];
    'outer: loop {
        let mut point: i128 = 0;
        let mut prob = Mass::one();
        for ((s, &d), &a) in supports.iter().zip(&digits).zip(form.coefficients()) {
            point += a as i128 * s[d].0 as i128;
            prob *= &s[d].1;
        }
        *totals.entry(domain.reduce_wide(point)).or_insert_with(Mass::zero) += prob;
        for (d, s) in digits.iter_mut().zip(&supports) {
            *d += 1;
            if *d < s.len() {
                continue 'outer;
            }
            *d = 0;
        }
        break;
    }
    Ok(totals.into_values().max().expect("at least one outcome"))
}

/// `e^{-x} (I_0(x) + I_1(x))` from `terms` terms of each series, summed in
/// exact rational arithmetic and rounded once at the end. Independent of the
/// floating-point evaluation in the applications module.
pub fn kanter_g_series_oracle(x: &Mass, terms: usize) -> f64 {
    let quarter = x * x / Mass::from_integer(4.into());
    let mut i0 = Mass::zero();
    let mut i1 = Mass::zero();
    let mut t0 = Mass::one();
    let mut t1 = x / Mass::from_integer(2.into());
    let mut exp_neg = Mass::zero();
    let mut e = Mass::one();
    for k in 0..terms {
        i0 += &t0;
        i1 += &t1;
        exp_neg += &e;
        let k1 = Mass::from_integer(((k + 1) as i64).into());
        let k2 = Mass::from_integer(((k + 2) as i64).into());
        t0 = t0 * &quarter / (&k1 * &k1);
        t1 = t1 * &quarter / (&k1 * &k2);
        e = -e * x / &k1;
    }
    (exp_neg * (i0 + i1)).to_f64().expect("finite")
}
