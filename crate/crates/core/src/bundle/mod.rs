//! JSON bundles: the embedded example data and the schemas accepted by
//! `check`. Rationals are strings such as `"-7/2"`.

mod build;
mod schema;

pub use build::{base_aut, biquad_elem, build_quaternion_bundle, invariant_vector, quat_elem, rel_elem, QuaternionData};
pub use schema::*;

use serde::de::DeserializeOwned;
use thiserror::Error;

pub const EXAMPLE8: &str = include_str!("../../data/example8.json");
pub const EXAMPLE9: &str = include_str!("../../data/example9.json");
pub const EXAMPLE16: &str = include_str!("../../data/example16.json");

#[derive(Debug, Error)]
pub enum BundleError {
    #[error("malformed bundle: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid rational {0:?}")]
    Rational(String),
    #[error("invalid bundle: {0}")]
    Invalid(String),
}

pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T, BundleError> {
    Ok(serde_json::from_str(text)?)
}
