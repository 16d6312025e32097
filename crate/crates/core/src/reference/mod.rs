//! Reference values that do not depend on the rapid series.

pub mod classical;
pub mod gamma;
pub mod oracle;
pub mod trig;

pub use classical::{
    zeta_even, zeta_even_coefficient, zeta_even_upper, zeta_negative_odd, zeta_nonpositive,
    ZetaEvenValue,
};
pub use gamma::{gamma_fn, gamma_real};
pub use oracle::{
    zeta_int, zeta_oracle, zeta_oracle_with, zeta_real, OracleOptions, NEAR_POLE_RADIUS,
};
pub use trig::{
    dirichlet_tail, log_sin_closed, power_partial_sum, sine_series_closed, trig_dirichlet,
    weighted_trig_series, Angle, TrigKind, TrigSum, TrigSumSpec,
};
