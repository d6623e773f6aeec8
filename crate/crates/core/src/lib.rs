//! Exact rearrangement inequalities and Renyi-entropy lower bounds for sums
//! of independent random variables on prime cyclic groups `Z/pZ` and on `Z`.
//!
//! Masses are exact rationals; logarithms appear only when an entropy is
//! reported. The central object is [`extremal::extremal_distribution`], a
//! distribution that majorizes `f_1 * ... * f_n` and therefore has smaller
//! Renyi entropy of every order.

#![forbid(unsafe_code)]

pub mod applications;
pub mod convolve;
pub mod decompose;
pub mod domain;
pub mod entropy;
pub mod error;
pub mod extremal;
pub mod mass;
pub mod oracle;
pub mod random;
pub mod rearrange;
pub mod selftest;
pub mod serial;

pub use convolve::{convolve, convolve_many, convolve_pmfs};
pub use decompose::{decompose, layer_cake, Decomposition, Layer, LayerCake};
pub use domain::Domain;
pub use entropy::{convex_sum, entropy_power, majorization, renyi, Alpha, ConvexPhi, MajorizationVerdict};
pub use error::{Error, Result};
pub use extremal::{
    assign_signs, extremal_distribution, extremal_distribution_fast, verify_main_inequality, BoundReport,
    SignAssignment,
};
pub use mass::{circular_shift_between, make_pmf, mass, Mass, NonnegFn, Pmf};
pub use rearrange::{
    bar_delta, canonical_ordering, classify_regularity, rearrange, rearrange_pmf, shape_equivalent,
    OrderedIndexSet, Regularity, Sign,
};
