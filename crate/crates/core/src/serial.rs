//! Canonical text form:
//! `{"domain":{"kind":"cyclic","p":17},"pmf":[[index,"num/den"],...]}`
//! with indices ascending and rationals in lowest terms.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::mass::{Mass, NonnegFn, Pmf};

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum DomainDoc {
    Cyclic { p: i64 },
    Integers,
}

#[derive(Debug, Serialize, Deserialize)]
struct FnDoc {
    domain: DomainDoc,
    pmf: Vec<(i64, Value)>,
}

pub fn format_rational(r: &Mass) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"`, a bare integer, or a finite decimal such as `"0.25"`.
pub fn parse_rational(s: &str) -> Result<Mass> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Mass::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = match int.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            digits => digits.parse().map_err(|_| bad())?,
        };
        let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let value = Mass::new(int_part * &scale + frac_part, scale);
        return Ok(if negative { -value } else { value });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Mass::new(n, BigInt::one()))
}

fn domain_doc(d: Domain) -> DomainDoc {
    match d.modulus() {
        Some(p) => DomainDoc::Cyclic { p },
        None => DomainDoc::Integers,
    }
}

pub fn domain_to_value(d: Domain) -> Value {
    serde_json::to_value(domain_doc(d)).expect("domain serializes")
}

pub fn fn_to_value(f: &NonnegFn) -> Value {
    let doc = FnDoc {
        domain: domain_doc(f.domain()),
        pmf: f.iter().map(|(i, v)| (i, Value::String(format_rational(v)))).collect(),
    };
    serde_json::to_value(doc).expect("function serializes")
}

/// Canonical single-line serialization.
pub fn to_canonical(f: &NonnegFn) -> String {
    fn_to_value(f).to_string()
}

fn parse_domain(doc: DomainDoc) -> Result<Domain> {
    match doc {
        DomainDoc::Cyclic { p } => Domain::cyclic(p),
        DomainDoc::Integers => Ok(Domain::INTEGERS),
    }
}

pub fn parse_domain_value(v: &Value) -> Result<Domain> {
    let doc: DomainDoc = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    parse_domain(doc)
}

pub fn fn_from_value(v: &Value) -> Result<NonnegFn> {
    let doc: FnDoc = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let domain = parse_domain(doc.domain)?;
    let entries = doc
        .pmf
        .into_iter()
        .map(|(i, v)| {
            let value = match &v {
                Value::String(s) => parse_rational(s)?,
                Value::Number(n) if n.is_i64() => Mass::from_integer(n.as_i64().unwrap().into()),
                other => return Err(Error::Parse(format!("mass must be a string, got {other}"))),
            };
            Ok((i, value))
        })
        .collect::<Result<Vec<_>>>()?;
    NonnegFn::new(domain, entries)
}

pub fn parse_fn(text: &str) -> Result<NonnegFn> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    fn_from_value(&v)
}

pub fn parse_pmf(text: &str) -> Result<Pmf> {
    Pmf::try_from_fn(parse_fn(text)?)
}
