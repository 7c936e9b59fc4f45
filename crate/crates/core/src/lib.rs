pub mod cli;
pub mod error;
pub mod essential;
pub mod linalg;
pub mod rootsys;
pub mod repmod;
pub mod weyl;
pub mod widths;

pub use error::{Error, Result};
