//! Procedures derived from the main lower bound: Littlewood-Offord small-ball
//! bounds, Kanter's bound, counting solutions of linear equations,
//! Cauchy-Davenport, and a discrete entropy power inequality.

pub mod counting;
pub mod epi;
pub mod kanter;
pub mod littlewood_offord;
pub mod sumset;

pub use counting::count_solutions;
pub use epi::{discrete_epi_check, doubling_gap, EpiReport};
pub use kanter::{bessel_i0, bessel_i1, kanter_g, kanter_small_ball_check, KanterReport};
pub use littlewood_offord::{lo_entropy_bound, small_ball, weighted_sum_distribution, LinearForm, LoBound};
pub use sumset::{cauchy_davenport_check, CauchyDavenportReport};
