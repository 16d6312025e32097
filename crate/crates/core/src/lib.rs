pub mod bernoulli;
pub mod error;
pub mod exec;
pub mod numeric;
pub mod rapid;
pub mod reference;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
