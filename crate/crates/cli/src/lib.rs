//! Command-line front end: a small expression language over the enveloping
//! algebra, evaluation under a chosen twist, and access to the verifier.

pub mod app;
pub mod error;
pub mod eval;
pub mod expr;
pub mod output;

pub use app::run;
pub use error::CliError;
pub use eval::{evaluate, Data, Value};
pub use expr::{parse, Expr};
