//! Exact computations around Fano complete intersections and their
//! Landau-Ginzburg mirrors.
//!
//! * [`jacobian_ring`]: `h^{1,N-1}` from the bigraded Jacobian-type rings.
//! * [`lg_count`]: the component count `k_LG` of the central fiber of the
//!   compactified mirror, and the comparison `h_pr^{1,N-1} = k_LG`.
//! * [`resolution`]: the local counts `F(d, s)`, `G(d, s)` and a simulator of
//!   the blow-up procedure on the models `a^d = lambda x_1 .. x_s`.
//! * [`givental`]: the mirror Laurent polynomial, its constant term series and
//!   the hypergeometric I-series.
//!
//! All arithmetic is exact ([`ExactInt`]).

pub mod error;
pub mod exactmath;
pub mod givental;
pub mod jacobian_ring;
pub mod laurent;
pub mod lg_count;
pub mod resolution;

pub use error::{Error, Result};
pub use exactmath::{binomial, convolution_identity_sides, factorial, multinomial, ExactInt};
pub use givental::{
    build_fx, constant_term, i_series, phi_series, verify_period, PeriodReport, PowerSeries,
};
pub use jacobian_ring::{
    alt_dim_formula, count_monomials_oracle, delta_j, dim_r_1, dim_r_prime_1, fano_sweep, hodge_h1,
    hypersurface_corollary, poly_space_dim, CompleteIntersection, HodgeReport,
};
pub use laurent::LaurentPolynomial;
pub use lg_count::{
    enumerate_strata, k_lg, k_lg_closed, verify_main_theorem, KlgReport, StratumLabel,
    TheoremReport,
};
pub use resolution::{
    chart_children, f_closed, f_multi, f_multi_rec, f_rec, g_closed, g_rec, resolution_trace,
    ChartType, ResolutionTrace,
};
