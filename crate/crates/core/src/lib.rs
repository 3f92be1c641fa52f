pub mod bordism;
pub mod charclass;
pub mod cohomring;
pub mod error;
pub mod exact;
pub mod genus;
pub mod partition;
pub mod witness;

pub use error::{Error, Result};
