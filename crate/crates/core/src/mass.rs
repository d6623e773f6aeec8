//! Finitely supported nonnegative functions with exact rational values.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::ops::Deref;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::domain::{plus_position, Domain};
use crate::error::{Error, Result};

/// Exact mass value.
pub type Mass = BigRational;

pub fn mass(numer: i64, denom: i64) -> Mass {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A nonnegative function on a [`Domain`] with finite support. Zero values are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NonnegFn {
    domain: Domain,
    values: BTreeMap<i64, Mass>,
}

impl NonnegFn {
    pub fn new<I>(domain: Domain, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Mass)>,
    {
        let mut values = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for (index, value) in entries {
            domain.check(index)?;
            if !seen.insert(index) {
                return Err(Error::DuplicateIndex(index));
            }
            if value.is_negative() {
                return Err(Error::NegativeMass { index, value: value.to_string() });
            }
            if !value.is_zero() {
                values.insert(index, value);
            }
        }
        Ok(NonnegFn { domain, values })
    }

    pub fn zero(domain: Domain) -> Self {
        NonnegFn { domain, values: BTreeMap::new() }
    }

    /// Indicator function `1_A`.
    pub fn indicator<I: IntoIterator<Item = i64>>(domain: Domain, set: I) -> Result<Self> {
        NonnegFn::new(domain, set.into_iter().map(|i| (i, Mass::one())))
    }

    /// Builds from values already known to be valid; zeros are dropped and
    /// indices reduced into the domain.
    pub(crate) fn from_parts<I>(domain: Domain, entries: I) -> Self
    where
        I: IntoIterator<Item = (i64, Mass)>,
    {
        let mut values: BTreeMap<i64, Mass> = BTreeMap::new();
        for (index, value) in entries {
            debug_assert!(!value.is_negative());
            let index = domain.reduce(index);
            match values.entry(index) {
                Entry::Occupied(mut e) => *e.get_mut() += value,
                Entry::Vacant(e) => {
                    e.insert(value);
                }
            }
        }
        values.retain(|_, v| !v.is_zero());
        NonnegFn { domain, values }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn get(&self, index: i64) -> Option<&Mass> {
        self.values.get(&index)
    }

    /// Value at `index`, zero outside the support.
    pub fn value(&self, index: i64) -> Mass {
        self.values.get(&index).cloned().unwrap_or_else(Mass::zero)
    }

    /// Support entries in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Mass)> + '_ {
        self.values.iter().map(|(&i, v)| (i, v))
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.values.keys().copied()
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn total(&self) -> Mass {
        self.values.values().fold(Mass::zero(), |acc, v| acc + v)
    }

    pub fn max_value(&self) -> Option<&Mass> {
        self.values.values().max()
    }

    /// Support values sorted in descending order.
    pub fn values_desc(&self) -> Vec<Mass> {
        let mut v: Vec<Mass> = self.values.values().cloned().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Maximum `|index|` over the support, zero when empty.
    pub fn radius(&self) -> i64 {
        self.values.keys().map(|i| i.abs()).max().unwrap_or(0)
    }

    pub(crate) fn ensure_same_domain(&self, other: &NonnegFn) -> Result<()> {
        if self.domain == other.domain {
            Ok(())
        } else {
            Err(Error::DomainMismatch)
        }
    }

    /// The `c`-circular function `g(i) = f(i + c)`. On a cyclic domain `c`
    /// must lie in the centered range.
    pub fn translate(&self, c: i64) -> Result<Self> {
        self.domain.check(c)?;
        Ok(self.shift(c))
    }

    /// Like [`translate`](Self::translate) but accepts any integer shift,
    /// reducing it modulo `p`.
    pub fn shift(&self, c: i64) -> Self {
        let domain = self.domain;
        let values = self
            .values
            .iter()
            .map(|(&i, v)| (domain.reduce_wide(i as i128 - c as i128), v.clone()))
            .collect();
        NonnegFn { domain, values }
    }

    /// `g(i) = f(-i)`.
    pub fn reflect(&self) -> Self {
        let values = self.values.iter().map(|(&i, v)| (-i, v.clone())).collect();
        NonnegFn { domain: self.domain, values }
    }

    /// Push-forward under `x -> a x` (mod `p` on cyclic domains).
    pub fn scale_index(&self, a: i64) -> Result<Self> {
        let domain = self.domain;
        if domain.reduce(a) == 0 {
            return Err(Error::ZeroCoefficient);
        }
        let values = self
            .values
            .iter()
            .map(|(&i, v)| (domain.reduce_wide(i as i128 * a as i128), v.clone()))
            .collect::<BTreeMap<_, _>>();
        debug_assert_eq!(values.len(), self.values.len());
        Ok(NonnegFn { domain, values })
    }

    pub fn add(&self, other: &NonnegFn) -> Result<Self> {
        self.ensure_same_domain(other)?;
        let mut values = self.values.clone();
        for (&i, v) in &other.values {
            *values.entry(i).or_insert_with(Mass::zero) += v;
        }
        Ok(NonnegFn { domain: self.domain, values })
    }

    pub fn scale(&self, factor: &Mass) -> Self {
        assert!(!factor.is_negative(), "negative scale factor");
        if factor.is_zero() {
            return NonnegFn::zero(self.domain);
        }
        let values = self.values.iter().map(|(&i, v)| (i, v * factor)).collect();
        NonnegFn { domain: self.domain, values }
    }

    /// Values read along `0, +1, -1, +2, -2, ...` (or its mirror when
    /// `mirrored`), far enough to cover the support.
    pub(crate) fn along_plus(&self, mirrored: bool) -> Vec<Mass> {
        let len = match self.domain.modulus() {
            Some(p) => p as u64,
            None => 2 * self.radius() as u64 + 1,
        };
        (0..len)
            .map(|rank| {
                let z = plus_position(rank);
                self.value(if mirrored { -z } else { z })
            })
            .collect()
    }
}

impl AsRef<NonnegFn> for NonnegFn {
    fn as_ref(&self) -> &NonnegFn {
        self
    }
}

/// A [`NonnegFn`] whose values sum to exactly one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pmf(NonnegFn);

/// Validating constructor: indices distinct and in range, masses
/// nonnegative, exact total one.
pub fn make_pmf<I>(domain: Domain, entries: I) -> Result<Pmf>
where
    I: IntoIterator<Item = (i64, Mass)>,
{
    Pmf::try_from_fn(NonnegFn::new(domain, entries)?)
}

impl Pmf {
    pub fn try_from_fn(f: NonnegFn) -> Result<Self> {
        let total = f.total();
        if total.is_one() {
            Ok(Pmf(f))
        } else {
            Err(Error::NotNormalized(total.to_string()))
        }
    }

    pub(crate) fn from_fn_unchecked(f: NonnegFn) -> Self {
        debug_assert!(f.total().is_one());
        Pmf(f)
    }

    pub fn point(domain: Domain, index: i64) -> Result<Self> {
        make_pmf(domain, [(index, Mass::one())])
    }

    /// Uniform distribution on a finite nonempty set (duplicates ignored).
    pub fn uniform<I: IntoIterator<Item = i64>>(domain: Domain, set: I) -> Result<Self> {
        let set: BTreeSet<i64> = set.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        let w = mass(1, set.len() as i64);
        make_pmf(domain, set.into_iter().map(|i| (i, w.clone())))
    }

    pub fn as_fn(&self) -> &NonnegFn {
        &self.0
    }

    pub fn into_fn(self) -> NonnegFn {
        self.0
    }

    pub fn translate(&self, c: i64) -> Result<Self> {
        self.0.translate(c).map(Pmf)
    }

    pub fn shift(&self, c: i64) -> Self {
        Pmf(self.0.shift(c))
    }

    pub fn reflect(&self) -> Self {
        Pmf(self.0.reflect())
    }

    /// Distribution of `aX`.
    pub fn scale_index(&self, a: i64) -> Result<Self> {
        self.0.scale_index(a).map(Pmf)
    }
}

impl Deref for Pmf {
    type Target = NonnegFn;

    fn deref(&self) -> &NonnegFn {
        &self.0
    }
}

impl AsRef<NonnegFn> for Pmf {
    fn as_ref(&self) -> &NonnegFn {
        &self.0
    }
}

impl From<Pmf> for NonnegFn {
    fn from(p: Pmf) -> NonnegFn {
        p.0
    }
}

/// Finds `c` with `f(i + c) = g(i)` for all `i`. On cyclic domains the
/// smallest-magnitude `c` is returned, ties going to the positive shift.
pub fn circular_shift_between(f: &NonnegFn, g: &NonnegFn) -> Result<Option<i64>> {
    f.ensure_same_domain(g)?;
    if f.support_len() != g.support_len() || f.total() != g.total() {
        return Ok(None);
    }
    if f.is_zero() {
        return Ok(Some(0));
    }
    match f.domain().modulus() {
        Some(p) => Ok((0..p as u64).map(plus_position).find(|&c| &f.shift(c) == g)),
        None => {
            let c = f.support().next().unwrap() - g.support().next().unwrap();
            Ok((&f.shift(c) == g).then_some(c))
        }
    }
}
