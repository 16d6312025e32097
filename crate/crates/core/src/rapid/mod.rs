//! Rapidly converging series for `zeta(2r+1)`.

mod bench;
mod coefficients;
mod eval;
mod family;
mod trace;

pub use bench::{bench_table, check_ordering, BenchRow};
pub use coefficients::{
    family_coefficients, recurrence_coefficients, Kernel, RecurrenceCoefficients,
};
pub use eval::{
    ck_recurrence, evaluate, ewell_zeta3, tail_bound, truncated_series, zeta3_family,
    zeta_odd_ladder, EvalReport, KnownValue,
};
pub use family::SeriesFamily;
pub use trace::{convergence_trace, ConvergenceTrace};
