pub mod error;
pub mod identities;
pub mod partitions;
pub mod polyring;
pub mod schur;
pub mod trails;

pub use error::{Error, Result};
