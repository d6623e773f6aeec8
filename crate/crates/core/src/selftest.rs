//! The ten acceptance criteria as runnable checks. Shared by the `selftest`
//! CLI subcommand and the `acceptance` test target; output depends only on
//! the seed (apart from timings).

use std::fmt;
use std::time::{Duration, Instant};

use num_integer::binomial;
use rand::Rng;
use rayon::prelude::*;

use crate::applications::{
    cauchy_davenport_check, discrete_epi_check, doubling_gap, kanter_g, kanter_small_ball_check, small_ball,
    LinearForm,
};
use crate::convolve::{convolve, convolve_many};
use crate::decompose::decompose;
use crate::domain::Domain;
use crate::entropy::{majorization, renyi, renyi_of, Alpha};
use crate::error::Result;
use crate::extremal::{extremal_distribution, extremal_distribution_fast, pair_bound};
use crate::mass::{mass, Mass, Pmf};
use crate::oracle::{brute_small_ball, kanter_g_series_oracle, min_entropy_over_permutations};
use crate::random::{random_mixed_pmf, random_pmf, random_regular_pmf, random_set, seeded, TestRng};
use crate::rearrange::{classify_regularity, rearrange, Regularity, Sign};

pub const DEFAULT_SEED: u64 = 20_190_513;

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "lower-bound majorization"),
    (2, "enumerated and fast extremal forms agree"),
    (3, "oracle attainment for regular partners"),
    (4, "Cauchy-Davenport on Z/7Z"),
    (5, "Littlewood-Offord / Erdos small ball"),
    (6, "Kanter bound"),
    (7, "discrete entropy power inequality"),
    (8, "doubling gap"),
    (9, "triangle/square decomposition"),
    (10, "entropy sanity"),
];

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {:>2} {:<42} {} ({:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

struct Outcome {
    passed: bool,
    detail: String,
    time_limit: Option<Duration>,
}

fn outcome(failures: usize, total: usize, what: &str) -> Outcome {
    Outcome {
        passed: failures == 0,
        detail: format!("{failures} failures in {total} {what}"),
        time_limit: None,
    }
}

fn limited(mut o: Outcome, secs: u64) -> Outcome {
    o.time_limit = Some(Duration::from_secs(secs));
    o
}

const PRIMES: [i64; 5] = [3, 5, 7, 11, 13];

fn random_prime(rng: &mut TestRng) -> Domain {
    Domain::cyclic(PRIMES[rng.gen_range(0..PRIMES.len())]).unwrap()
}

/// Runs one criterion; `id` must be in `1..=10`.
pub fn run_criterion(id: u8, seed: u64) -> Result<CriterionResult> {
    let name = CRITERIA.iter().find(|(k, _)| *k == id).map(|(_, n)| *n).expect("criterion id in 1..=10");
    let mut rng = seeded(seed.wrapping_add(id as u64));
    let start = Instant::now();
    let o = match id {
        1 => main_majorization(&mut rng)?,
        2 => fast_equality(&mut rng)?,
        3 => oracle_attainment(&mut rng)?,
        4 => cauchy_davenport()?,
        5 => littlewood_offord(&mut rng)?,
        6 => kanter(&mut rng)?,
        7 => epi(&mut rng)?,
        8 => gap()?,
        9 => decomposition(&mut rng)?,
        _ => entropy_sanity(&mut rng)?,
    };
    let elapsed = start.elapsed();
    let mut passed = o.passed;
    let mut detail = o.detail;
    if let Some(limit) = o.time_limit {
        if elapsed > limit {
            passed = false;
        }
        detail.push_str(&format!(", limit {}s", limit.as_secs()));
    }
    Ok(CriterionResult { id, name, passed, detail, elapsed })
}

pub fn run_all(seed: u64) -> Result<Vec<CriterionResult>> {
    CRITERIA.iter().map(|(id, _)| run_criterion(*id, seed)).collect()
}

fn main_majorization(rng: &mut TestRng) -> Result<Outcome> {
    let instances: Vec<Vec<Pmf>> = (0..1000)
        .map(|_| {
            let d = random_prime(rng);
            let n = rng.gen_range(2..=4);
            (0..n).map(|_| random_pmf(rng, d, d.modulus().unwrap() as usize, 64, 0)).collect()
        })
        .collect();
    let failures = instances
        .par_iter()
        .map(|fs| -> Result<bool> {
            let lhs = convolve_many(fs)?;
            Ok(!majorization(&lhs, extremal_distribution(fs)?.as_fn())?.is_majorized())
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|&bad| bad)
        .count();
    Ok(limited(outcome(failures, instances.len(), "instances"), 60))
}

fn fast_equality(rng: &mut TestRng) -> Result<Outcome> {
    let instances: Vec<Vec<Pmf>> = (0..200)
        .map(|k| {
            let d = random_prime(rng);
            let n = rng.gen_range(1..=6);
            match k % 4 {
                // Every factor the same law.
                0 => vec![random_pmf(rng, d, 5, 64, 0); n],
                1 => (0..n)
                    .map(|_| {
                        let kind = if rng.gen_bool(0.5) { Regularity::Triangle } else { Regularity::Square };
                        random_regular_pmf(rng, d, kind, 6, 64, 0)
                    })
                    .collect(),
                _ => (0..n).map(|_| random_mixed_pmf(rng, d, 64, 0)).collect(),
            }
        })
        .collect();
    let failures = instances
        .par_iter()
        .map(|fs| -> Result<bool> { Ok(extremal_distribution(fs)? != extremal_distribution_fast(fs)?) })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|&bad| bad)
        .count();
    Ok(outcome(failures, instances.len(), "instances"))
}

fn oracle_attainment(rng: &mut TestRng) -> Result<Outcome> {
    let d = Domain::cyclic(5).unwrap();
    let alphas = [Alpha::One, Alpha::finite(mass(2, 1))?, Alpha::Infinity];
    let mut failures = 0;
    let mut worst: f64 = 0.0;
    let mut searched = 0u64;
    for k in 0..50 {
        let f = random_pmf(rng, d, 5, 64, 0);
        let kind = if k % 2 == 0 { Regularity::Triangle } else { Regularity::Square };
        let g = random_regular_pmf(rng, d, kind, 5, 64, 0);
        let bound = pair_bound(&f, &g)?;
        if bound != extremal_distribution(&[f.clone(), g.clone()])? {
            failures += 1;
            continue;
        }
        for a in &alphas {
            let found = min_entropy_over_permutations(&f, &g, a)?;
            searched += found.searched;
            let err = (found.entropy - renyi(&bound, a)).abs();
            worst = worst.max(err);
            if err > 1e-12 {
                failures += 1;
            }
        }
    }
    let mut o = outcome(failures, 150, "(instance, alpha) pairs");
    o.detail.push_str(&format!(", max |error| {worst:.1e}, {searched} arrangement pairs searched"));
    Ok(limited(o, 300))
}

fn cauchy_davenport() -> Result<Outcome> {
    let d = Domain::cyclic(7).unwrap();
    let subset = |mask: u32| -> Vec<i64> { (0..7).filter(|b| mask >> b & 1 == 1).map(|b| b - 3).collect() };
    let failures = (1u32..128)
        .into_par_iter()
        .map(|ma| -> Result<usize> {
            let a = subset(ma);
            let mut bad = 0;
            for mb in 1u32..128 {
                let r = cauchy_davenport_check(&a, &subset(mb), d)?;
                if !r.holds || r.rearranged_size != r.bound {
                    bad += 1;
                }
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum();
    Ok(limited(outcome(failures, 127 * 127, "pairs"), 10))
}

fn littlewood_offord(rng: &mut TestRng) -> Result<Outcome> {
    let coin = Pmf::uniform(Domain::INTEGERS, [0, 1])?;
    let mut failures = 0;
    for _ in 0..500 {
        let n = rng.gen_range(2..=12usize);
        let coefficients: Vec<i64> = (0..n)
            .map(|_| {
                let a = rng.gen_range(1..=5);
                if rng.gen_bool(0.5) {
                    a
                } else {
                    -a
                }
            })
            .collect();
        let form = LinearForm::iid(coefficients, coin.clone())?;
        let q = small_ball(&form)?;
        let erdos = mass(binomial(n as i64, (n / 2) as i64), 1 << n);
        if q > erdos || q != brute_small_ball(&form)? {
            failures += 1;
        }
    }
    Ok(outcome(failures, 500, "coefficient vectors"))
}

fn kanter(rng: &mut TestRng) -> Result<Outcome> {
    let mut failures = Vec::new();
    if kanter_g(0.0)? != 1.0 {
        failures.push("G(0) != 1".to_string());
    }
    let g1 = kanter_g(1.0)?;
    let oracle = kanter_g_series_oracle(&mass(1, 1), 40);
    if (g1 - oracle).abs() > 1e-6 {
        failures.push(format!("G(1) = {g1}, oracle {oracle}"));
    }
    let grid_bad = (1..=500)
        .filter(|&k| {
            let x = 50.0 * k as f64 / 500.0;
            kanter_g(x).map_or(true, |g| g >= (2.0 / (std::f64::consts::PI * x)).sqrt())
        })
        .count();
    if grid_bad > 0 {
        failures.push(format!("{grid_bad} grid points above sqrt(2/(pi x))"));
    }
    let mut ball_bad = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=10);
        let qs: Vec<Mass> = (0..n)
            .map(|_| {
                let den = rng.gen_range(1..=64);
                mass(rng.gen_range(0..=den), den)
            })
            .collect();
        if !kanter_small_ball_check(&qs)?.holds {
            ball_bad += 1;
        }
    }
    if ball_bad > 0 {
        failures.push(format!("{ball_bad} small-ball instances above G"));
    }
    Ok(Outcome {
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("G(1) = {g1:.9}, 500 grid points, 500 instances")
        } else {
            failures.join("; ")
        },
        time_limit: None,
    })
}

fn epi(rng: &mut TestRng) -> Result<Outcome> {
    let mut failures = 0;
    let mut least = f64::INFINITY;
    for _ in 0..500 {
        let draw = |rng: &mut TestRng| {
            let size = rng.gen_range(1..=30usize);
            let spread = [size as i64, 40, 1000][rng.gen_range(0..3)];
            random_set(rng, Domain::INTEGERS, size, spread)
        };
        let a = draw(rng);
        let b = draw(rng);
        let r = discrete_epi_check(&a, &b)?;
        least = least.min(r.slack);
        if !r.holds() {
            failures += 1;
        }
    }
    let mut o = outcome(failures, 500, "pairs");
    o.detail.push_str(&format!(", min slack {least:.1e}"));
    Ok(o)
}

fn gap() -> Result<Outcome> {
    let failures = (2u64..=10_000)
        .into_par_iter()
        .map(|n| doubling_gap(n).map(|(g, e)| g < e - 1e-12))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|&bad| bad)
        .count();
    let (g2, _) = doubling_gap(2)?;
    let exact = (g2 - 0.5 * std::f64::consts::LN_2).abs() <= 1e-12;
    let mut o = outcome(failures + usize::from(!exact), 9_999, "values of n");
    o.detail.push_str(&format!(", gap(2) = {g2:.12}"));
    Ok(o)
}

fn decomposition(rng: &mut TestRng) -> Result<Outcome> {
    let mut failures = 0;
    for k in 0..1000 {
        let d = if k % 5 == 4 { Domain::INTEGERS } else { random_prime(rng) };
        let f = random_mixed_pmf(rng, d, 64, 8);
        let parts = decompose(&f);
        let rebuilt = parts.triangle.add(&parts.square)?;
        let triangle_ok = classify_regularity(&parts.triangle) == Regularity::Triangle;
        let square_ok = parts.square.is_zero() || classify_regularity(&parts.square) == Regularity::Square;
        let witness = parts.ordering.is_ordering_for(&f)
            && parts.ordering.is_ordering_for(&parts.triangle)
            && parts.ordering.is_ordering_for(&parts.square);
        let plus = rearrange(&f, Sign::Plus)?;
        let split = rearrange(&parts.triangle, Sign::Plus)?.add(&rearrange(&parts.square, Sign::Plus)?)?;
        if rebuilt != *f.as_fn() || !triangle_ok || !square_ok || !witness || plus != split {
            failures += 1;
        }
    }
    Ok(outcome(failures, 1000, "functions"))
}

fn entropy_sanity(rng: &mut TestRng) -> Result<Outcome> {
    let mut upper_bad = 0;
    for _ in 0..500 {
        let d = random_prime(rng);
        let p = d.modulus().unwrap();
        let f = random_mixed_pmf(rng, d, 64, 0);
        let g = random_mixed_pmf(rng, d, 64, 0);
        let sum = convolve(&f, &g)?;
        let h = renyi_of(&sum, &Alpha::One);
        let cap = (renyi(&f, &Alpha::One) + renyi(&g, &Alpha::One)).min((p as f64).ln());
        if h > cap + 1e-12 {
            upper_bad += 1;
        }
    }
    let grid = Alpha::standard_grid();
    let mut monotone_bad = 0;
    for k in 0..200 {
        let d = if k % 2 == 0 { random_prime(rng) } else { Domain::INTEGERS };
        let f = random_mixed_pmf(rng, d, 64, 10);
        let hs: Vec<f64> = grid.iter().map(|a| renyi(&f, a)).collect();
        if hs.windows(2).any(|w| w[1] > w[0] + 1e-12) {
            monotone_bad += 1;
        }
    }
    Ok(Outcome {
        passed: upper_bad == 0 && monotone_bad == 0,
        detail: format!(
            "{upper_bad} upper-bound failures in 500 pairs, {monotone_bad} monotonicity failures in 200 pmfs"
        ),
        time_limit: None,
    })
}
