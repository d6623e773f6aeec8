//! Renyi entropies (nats), entropy power, majorization and convex sums.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::mass::{Mass, NonnegFn, Pmf};
use crate::serial::parse_rational;

/// Order of a Renyi entropy.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Alpha {
    Zero,
    One,
    Infinity,
    /// Positive rational order other than one.
    Finite(Mass),
}

impl Alpha {
    pub fn finite(order: Mass) -> Result<Alpha> {
        if !order.is_positive() || order.is_one() {
            return Err(Error::InvalidAlpha(order.to_string()));
        }
        Ok(Alpha::Finite(order))
    }

    /// Accepts a rational or one of the limiting cases.
    pub fn from_rational(order: Mass) -> Result<Alpha> {
        if order.is_zero() {
            Ok(Alpha::Zero)
        } else if order.is_one() {
            Ok(Alpha::One)
        } else {
            Alpha::finite(order)
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Alpha::Zero => 0.0,
            Alpha::One => 1.0,
            Alpha::Infinity => f64::INFINITY,
            Alpha::Finite(a) => a.to_f64().unwrap_or(f64::NAN),
        }
    }

    /// The grid used by the monotonicity checks.
    pub fn standard_grid() -> Vec<Alpha> {
        let q = |n, d| Alpha::Finite(crate::mass::mass(n, d));
        vec![Alpha::Zero, q(1, 4), q(1, 2), Alpha::One, q(2, 1), q(4, 1), Alpha::Infinity]
    }
}

impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Alpha> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "+inf" | "∞" => Ok(Alpha::Infinity),
            other => {
                let r = parse_rational(other).map_err(|_| Error::InvalidAlpha(s.to_string()))?;
                if r.is_negative() {
                    return Err(Error::InvalidAlpha(s.to_string()));
                }
                Alpha::from_rational(r)
            }
        }
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alpha::Zero => f.write_str("0"),
            Alpha::One => f.write_str("1"),
            Alpha::Infinity => f.write_str("inf"),
            Alpha::Finite(a) if a.is_integer() => write!(f, "{}", a.numer()),
            Alpha::Finite(a) => write!(f, "{}/{}", a.numer(), a.denom()),
        }
    }
}

fn ln_biguint(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        n.to_f64().expect("fits in f64").ln()
    } else {
        let shift = bits - 64;
        (n >> shift).to_f64().expect("fits in f64").ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Natural log of a positive rational, accurate for arbitrarily large
/// numerators and denominators.
pub fn ln_rational(r: &Mass) -> f64 {
    assert!(r.is_positive(), "logarithm of a nonpositive rational");
    ln_biguint(r.numer().magnitude()) - ln_biguint(r.denom().magnitude())
}

/// Renyi entropy of a normalized function.
pub fn renyi(f: &Pmf, alpha: &Alpha) -> f64 {
    renyi_of(f, alpha)
}

/// Renyi entropy computed from the values of `f`, which the caller
/// guarantees sum to one.
pub(crate) fn renyi_of(f: &NonnegFn, alpha: &Alpha) -> f64 {
    match alpha {
        Alpha::Zero => (f.support_len() as f64).ln(),
        Alpha::Infinity => f.max_value().map_or(f64::INFINITY, |m| -ln_rational(m)),
        Alpha::One => f
            .iter()
            .map(|(_, v)| {
                let p = v.to_f64().unwrap();
                -p * ln_rational(v)
            })
            .sum(),
        Alpha::Finite(a) => {
            let a_f = a.to_f64().unwrap();
            let log_sum = match a.to_integer().to_u32() {
                Some(k) if a.is_integer() => {
                    let sum = f
                        .iter()
                        .fold(Mass::zero(), |acc, (_, v)| acc + num_traits::pow(v.clone(), k as usize));
                    ln_rational(&sum)
                }
                _ => f.iter().map(|(_, v)| (a_f * ln_rational(v)).exp()).sum::<f64>().ln(),
            };
            log_sum / (1.0 - a_f)
        }
    }
}

/// `N(X) = exp(2 H(X))`.
pub fn entropy_power(f: &Pmf) -> f64 {
    (2.0 * renyi(f, &Alpha::One)).exp()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MajorizationVerdict {
    /// All prefix sums dominated and totals equal.
    Majorized,
    /// All prefix sums dominated, totals differ.
    WeaklyMajorized,
    /// The first (1-based) prefix length at which domination fails.
    NotMajorized { failing_prefix: usize },
}

impl MajorizationVerdict {
    pub fn is_majorized(&self) -> bool {
        matches!(self, MajorizationVerdict::Majorized)
    }

    pub fn failing_prefix(&self) -> Option<usize> {
        match self {
            MajorizationVerdict::NotMajorized { failing_prefix } => Some(*failing_prefix),
            _ => None,
        }
    }
}

impl fmt::Display for MajorizationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MajorizationVerdict::Majorized => f.write_str("majorized"),
            MajorizationVerdict::WeaklyMajorized => f.write_str("weakly majorized"),
            MajorizationVerdict::NotMajorized { failing_prefix } => {
                write!(f, "not majorized (prefix {failing_prefix})")
            }
        }
    }
}

/// Checks `lower ≺ upper` by exact comparison of sorted prefix sums.
pub fn majorization(lower: &NonnegFn, upper: &NonnegFn) -> Result<MajorizationVerdict> {
    lower.ensure_same_domain(upper)?;
    let a = lower.values_desc();
    let b = upper.values_desc();
    let zero = Mass::zero();
    let (mut sa, mut sb) = (Mass::zero(), Mass::zero());
    for r in 0..a.len().max(b.len()) {
        sa += a.get(r).unwrap_or(&zero);
        sb += b.get(r).unwrap_or(&zero);
        if sa > sb {
            return Ok(MajorizationVerdict::NotMajorized { failing_prefix: r + 1 });
        }
    }
    Ok(if sa == sb { MajorizationVerdict::Majorized } else { MajorizationVerdict::WeaklyMajorized })
}

/// Convex functions with `phi(0) = 0` used to turn majorization into entropy
/// inequalities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ConvexPhi {
    /// `x^a` with `a > 1`.
    Power(f64),
    /// `-x^a` with `0 < a < 1`.
    NegPower(f64),
    XLogX,
}

impl ConvexPhi {
    pub fn eval(&self, x: f64) -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        match *self {
            ConvexPhi::Power(a) => x.powf(a),
            ConvexPhi::NegPower(a) => -x.powf(a),
            ConvexPhi::XLogX => x * x.ln(),
        }
    }
}

/// `sum_i phi(f(i))` over the support.
pub fn convex_sum(f: &NonnegFn, phi: ConvexPhi) -> f64 {
    f.iter().map(|(_, v)| phi.eval(v.to_f64().unwrap())).sum()
}
