//! Exact arithmetic for generalized higher-order Daehee numbers and
//! polynomials, generalized Comtet numbers, and multiparameter poly-Cauchy
//! numbers, together with a registry that checks each published identity
//! against an independent moment-expansion oracle.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in the crate. Grid verification runs on rayon when
//! the `parallel` feature is enabled (the default) and sequentially otherwise.

pub mod claims;
pub mod classical;
pub mod comtet;
pub mod daehee;
pub mod error;
pub mod exec;
pub mod oracle;
pub mod params;
pub mod poly;
pub mod polycauchy;
pub mod rat;
pub mod series;
pub mod value;

pub use error::{Error, Result};
pub use params::{poly_from_factors, ParamVector};
pub use poly::Poly;
pub use rat::Rat;
pub use series::Series;
pub use value::{Form, Value, Variant};
