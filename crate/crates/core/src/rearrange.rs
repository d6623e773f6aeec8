//! Index orderings, the `f+`, `f-`, `f*` rearrangements and regularity.
//!
//! `f+` places the values of `f` in descending order along
//! `0, +1, -1, +2, -2, ...`; `f-` uses the mirrored sequence
//! `0, -1, +1, -2, +2, ...`. A function is triangle-regular when `f+ = f-` and
//! square-regular when `f+(z + 1) = f-(z)` for every `z`.

use std::collections::BTreeSet;
use std::fmt;

use crate::domain::{plus_position, plus_rank, Domain};
use crate::error::{Error, Result};
use crate::mass::{NonnegFn, Pmf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
    /// Either rearrangement of a triangle-regular function.
    Star,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Star => Sign::Star,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
            Sign::Star => "*",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regularity {
    Triangle,
    Square,
    Neither,
}

impl fmt::Display for Regularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regularity::Triangle => "triangle",
            Regularity::Square => "square",
            Regularity::Neither => "neither",
        })
    }
}

/// A value-descending index sequence. On cyclic domains it lists all `p`
/// indices; on the integers it lists the support only, the zero tail being
/// implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedIndexSet {
    domain: Domain,
    indices: Vec<i64>,
}

impl OrderedIndexSet {
    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn indices(&self) -> &[i64] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// True when `f` is nonincreasing along this sequence and every support
    /// point of `f` is listed.
    pub fn is_ordering_for(&self, f: &NonnegFn) -> bool {
        if f.domain() != self.domain {
            return false;
        }
        let listed: BTreeSet<i64> = self.indices.iter().copied().collect();
        if listed.len() != self.indices.len() || f.support().any(|i| !listed.contains(&i)) {
            return false;
        }
        self.indices.windows(2).all(|w| f.value(w[0]) >= f.value(w[1]))
    }
}

/// Value-descending ordering with ties broken by position along
/// `0, +1, -1, +2, -2, ...`.
pub fn canonical_ordering(f: &NonnegFn) -> OrderedIndexSet {
    let mut indices: Vec<i64> = match f.domain().indices() {
        Some(all) => all.collect(),
        None => f.support().collect(),
    };
    indices.sort_by(|&a, &b| f.value(b).cmp(&f.value(a)).then_with(|| plus_rank(a).cmp(&plus_rank(b))));
    OrderedIndexSet { domain: f.domain(), indices }
}

fn place_along(f: &NonnegFn, mirrored: bool) -> NonnegFn {
    let entries = f.values_desc().into_iter().enumerate().map(|(rank, v)| {
        let z = plus_position(rank as u64);
        (if mirrored { -z } else { z }, v)
    });
    NonnegFn::from_parts(f.domain(), entries)
}

pub fn rearrange(f: &NonnegFn, sign: Sign) -> Result<NonnegFn> {
    match sign {
        Sign::Plus => Ok(place_along(f, false)),
        Sign::Minus => Ok(place_along(f, true)),
        Sign::Star => {
            let plus = place_along(f, false);
            if plus == place_along(f, true) {
                Ok(plus)
            } else {
                Err(Error::StarOnIrregular)
            }
        }
    }
}

pub fn rearrange_pmf(f: &Pmf, sign: Sign) -> Result<Pmf> {
    rearrange(f, sign).map(Pmf::from_fn_unchecked)
}

pub fn classify_regularity(f: &NonnegFn) -> Regularity {
    let plus = place_along(f, false);
    let minus = place_along(f, true);
    if plus == minus {
        Regularity::Triangle
    } else if plus.shift(1) == minus {
        Regularity::Square
    } else {
        Regularity::Neither
    }
}

/// Whether `f` and `g` admit a common value-descending ordering: no pair of
/// indices is strictly preferred in opposite directions.
pub fn shape_equivalent(f: &NonnegFn, g: &NonnegFn) -> Result<bool> {
    f.ensure_same_domain(g)?;
    let indices: Vec<i64> = match f.domain().indices() {
        Some(all) => all.collect(),
        None => f.support().chain(g.support()).collect::<BTreeSet<_>>().into_iter().collect(),
    };
    let fv: Vec<_> = indices.iter().map(|&i| f.value(i)).collect();
    let gv: Vec<_> = indices.iter().map(|&i| g.value(i)).collect();
    for a in 0..indices.len() {
        for b in 0..indices.len() {
            if fv[a] > fv[b] && gv[b] > gv[a] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Balance contribution of a regular factor under a sign: `0` for
/// triangle-regular, `+1`/`-1` for square-regular under `+`/`-`.
pub fn bar_delta(f: &NonnegFn, sign: Sign) -> Result<i32> {
    match classify_regularity(f) {
        Regularity::Triangle => Ok(0),
        Regularity::Square => match sign {
            Sign::Plus => Ok(1),
            Sign::Minus => Ok(-1),
            Sign::Star => Err(Error::StarOnIrregular),
        },
        Regularity::Neither => Err(Error::IrregularInput),
    }
}

/// Whether `f` is nonincreasing along `0, +1, -1, ...` (`Plus`), along the
/// mirrored sequence (`Minus`), or along both (`Star`).
pub fn is_descending_along(f: &NonnegFn, sign: Sign) -> bool {
    let check = |mirrored| f.along_plus(mirrored).windows(2).all(|w| w[0] >= w[1]);
    match sign {
        Sign::Plus => check(false),
        Sign::Minus => check(true),
        Sign::Star => check(false) && check(true),
    }
}
