pub mod abgroups;
pub mod amenability;
pub mod circle;
pub mod cli;
pub mod error;
pub mod homology;
pub mod systems;
pub mod towers;

pub use error::{Error, Result};
