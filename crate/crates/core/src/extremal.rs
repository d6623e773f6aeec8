//! The extremal lower-bound distribution for `f_1 * ... * f_n`.
//!
//! Each factor is split into its triangle and square parts. Every choice of
//! one part per factor gives a summand; triangle parts enter as `h*`, square
//! parts as `s+`/`s-` with signs chosen so that each summand is nonincreasing
//! along `0, +1, -1, ...`. The sum of the rearranged summands majorizes the
//! actual convolution, so it bounds every Renyi entropy from below.

use crate::convolve::{convolve, convolve_many};
use crate::decompose::decompose;
use crate::entropy::{majorization, renyi, Alpha, MajorizationVerdict};
use crate::error::{Error, Result};
use crate::mass::{NonnegFn, Pmf};
use crate::rearrange::{is_descending_along, rearrange, Regularity, Sign};

/// Largest factor count accepted by the `2^n` summand enumeration.
pub const MAX_ENUMERATED_FACTORS: usize = 16;

/// Which sign the first square-regular factor receives when alternating.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareOrder {
    /// `+, -, +, ...`: balance in `{0, +1}`, summands shaped along `I+`.
    PlusFirst,
    /// `-, +, -, ...`: balance in `{-1, 0}`, summands shaped along `I-`.
    MinusFirst,
}

impl SquareOrder {
    fn target(self) -> Sign {
        match self {
            SquareOrder::PlusFirst => Sign::Plus,
            SquareOrder::MinusFirst => Sign::Minus,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignAssignment {
    signs: Vec<Sign>,
}

impl SignAssignment {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignAssignment { signs }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// Sum of the per-factor balances: `+1` per `Plus`, `-1` per `Minus`.
    pub fn balance(&self) -> i32 {
        self.signs
            .iter()
            .map(|s| match s {
                Sign::Plus => 1,
                Sign::Minus => -1,
                Sign::Star => 0,
            })
            .sum()
    }

    /// Checks the assignment against the factor tags and the target shape.
    pub fn validate(&self, tags: &[Regularity], target: Sign) -> Result<()> {
        if self.signs.len() != tags.len() {
            return Err(Error::LengthMismatch(self.signs.len(), tags.len()));
        }
        for (i, (tag, sign)) in tags.iter().zip(&self.signs).enumerate() {
            match (tag, sign) {
                (Regularity::Triangle, Sign::Star) => {}
                (Regularity::Square, Sign::Plus | Sign::Minus) => {}
                (Regularity::Neither, _) => return Err(Error::IrregularFactor(i)),
                _ => return Err(Error::InvalidSigns(format!("factor {i}: {tag} with sign {sign}"))),
            }
        }
        let allowed = match target {
            Sign::Minus => -1..=0,
            _ => 0..=1,
        };
        if allowed.contains(&self.balance()) {
            Ok(())
        } else {
            Err(Error::InvalidSigns(format!("balance {} for target {target}", self.balance())))
        }
    }
}

/// Triangle factors get `Star`; square factors alternate starting with `Plus`.
pub fn assign_signs(tags: &[Regularity]) -> Result<SignAssignment> {
    assign_signs_ordered(tags, SquareOrder::PlusFirst)
}

pub fn assign_signs_ordered(tags: &[Regularity], order: SquareOrder) -> Result<SignAssignment> {
    let first = order.target();
    let mut squares = 0usize;
    let signs = tags
        .iter()
        .enumerate()
        .map(|(i, tag)| match tag {
            Regularity::Triangle => Ok(Sign::Star),
            Regularity::Square => {
                squares += 1;
                Ok(if squares % 2 == 1 { first } else { first.flipped() })
            }
            Regularity::Neither => Err(Error::IrregularFactor(i)),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SignAssignment { signs })
}

fn common_domain(fs: &[Pmf]) -> Result<()> {
    let first = fs.first().ok_or(Error::EmptySequence)?;
    if fs.iter().all(|f| f.domain() == first.domain()) {
        Ok(())
    } else {
        Err(Error::DomainMismatch)
    }
}

/// Reference path: enumerates all `2^n` summands with the `PlusFirst`
/// alternation.
pub fn extremal_distribution(fs: &[Pmf]) -> Result<Pmf> {
    extremal_distribution_ordered(fs, SquareOrder::PlusFirst)
}

/// As [`extremal_distribution`] with a chosen alternation; `MinusFirst`
/// yields the mirror image.
pub fn extremal_distribution_ordered(fs: &[Pmf], order: SquareOrder) -> Result<Pmf> {
    extremal_distribution_by(fs, order.target(), |tags| assign_signs_ordered(tags, order))
}

/// Enumerates the summands, asking `choose` for the signs of each one. The
/// assignment must keep the balance in `{0, +1}` for target `Plus` or in
/// `{-1, 0}` for target `Minus`; every summand is checked to be
/// nonincreasing along the target sequence.
pub fn extremal_distribution_by<F>(fs: &[Pmf], target: Sign, mut choose: F) -> Result<Pmf>
where
    F: FnMut(&[Regularity]) -> Result<SignAssignment>,
{
    common_domain(fs)?;
    if fs.len() > MAX_ENUMERATED_FACTORS {
        return Err(Error::TooManyFactors { n: fs.len(), max: MAX_ENUMERATED_FACTORS });
    }
    let parts: Vec<[(Regularity, NonnegFn); 2]> = fs
        .iter()
        .map(|f| {
            let d = decompose(f);
            [(Regularity::Triangle, d.triangle), (Regularity::Square, d.square)]
        })
        .collect();
    let domain = fs[0].domain();
    let mut total = NonnegFn::zero(domain);
    'summands: for mask in 0u32..(1 << fs.len()) {
        let mut chosen = Vec::with_capacity(fs.len());
        for (i, pair) in parts.iter().enumerate() {
            let (tag, part) = &pair[((mask >> i) & 1) as usize];
            if part.is_zero() {
                continue 'summands;
            }
            chosen.push((*tag, part));
        }
        let tags: Vec<Regularity> = chosen.iter().map(|(t, _)| *t).collect();
        let signs = choose(&tags)?;
        signs.validate(&tags, target)?;
        let rearranged = chosen
            .iter()
            .zip(signs.signs())
            .map(|((_, part), &sign)| rearrange(part, if sign == Sign::Star { Sign::Plus } else { sign }))
            .collect::<Result<Vec<_>>>()?;
        let summand = convolve_many(&rearranged)?;
        if !is_descending_along(&summand, target) {
            return Err(Error::InternalShapeViolation { summand: mask as usize });
        }
        total = total.add(&summand)?;
    }
    Pmf::try_from_fn(total)
}

/// Dynamic program over the number of square parts. All square parts enter
/// as `s+`; a summand with `m` square parts is then shifted so that it
/// coincides with the alternating `s1+ * s2- * ...` form, i.e. by `floor(m/2)`
/// with `g(i) = f(i + floor(m/2))`.
pub fn extremal_distribution_fast(fs: &[Pmf]) -> Result<Pmf> {
    common_domain(fs)?;
    let domain = fs[0].domain();
    let mut rows: Vec<NonnegFn> = vec![Pmf::point(domain, 0)?.into_fn()];
    for f in fs {
        let d = decompose(f);
        let tri = rearrange(&d.triangle, Sign::Plus)?;
        let sq = rearrange(&d.square, Sign::Plus)?;
        let mut next = vec![NonnegFn::zero(domain); rows.len() + 1];
        for (m, row) in rows.iter().enumerate() {
            if row.is_zero() {
                continue;
            }
            if !tri.is_zero() {
                next[m] = next[m].add(&convolve(row, &tri)?)?;
            }
            if !sq.is_zero() {
                next[m + 1] = next[m + 1].add(&convolve(row, &sq)?)?;
            }
        }
        rows = next;
    }
    let mut total = NonnegFn::zero(domain);
    for (m, row) in rows.iter().enumerate() {
        total = total.add(&row.shift((m / 2) as i64))?;
    }
    Pmf::try_from_fn(total)
}

/// Two-factor form `f+ * g_tri- + f- * g_sq+`.
pub fn pair_bound(f: &Pmf, g: &Pmf) -> Result<Pmf> {
    f.ensure_same_domain(g)?;
    let d = decompose(g);
    let a = convolve(&rearrange(f, Sign::Plus)?, &rearrange(&d.triangle, Sign::Minus)?)?;
    let b = convolve(&rearrange(f, Sign::Minus)?, &rearrange(&d.square, Sign::Plus)?)?;
    Pmf::try_from_fn(a.add(&b)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntropyPair {
    pub alpha: Alpha,
    pub lhs: f64,
    pub extremal: f64,
}

impl EntropyPair {
    pub fn gap(&self) -> f64 {
        if self.lhs == self.extremal {
            0.0
        } else {
            self.lhs - self.extremal
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub lhs: Pmf,
    pub extremal: Pmf,
    pub majorization: MajorizationVerdict,
    pub entropies: Vec<EntropyPair>,
}

/// Computes both sides of the lower bound. A failed majorization is reported
/// as [`Error::BoundViolated`].
pub fn verify_main_inequality(fs: &[Pmf], alphas: &[Alpha]) -> Result<BoundReport> {
    let extremal = extremal_distribution(fs)?;
    let lhs = Pmf::try_from_fn(convolve_many(fs)?)?;
    let verdict = majorization(&lhs, &extremal)?;
    if let Some(failing_prefix) = verdict.failing_prefix() {
        return Err(Error::BoundViolated { failing_prefix });
    }
    let entropies = alphas
        .iter()
        .map(|a| EntropyPair { alpha: a.clone(), lhs: renyi(&lhs, a), extremal: renyi(&extremal, a) })
        .collect();
    Ok(BoundReport { lhs, extremal, majorization: verdict, entropies })
}
