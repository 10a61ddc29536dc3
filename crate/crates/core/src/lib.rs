pub mod autoeq;
pub mod center;
pub mod chars;
pub mod cohom;
pub mod cyclo;
pub mod error;
pub mod fpn;
pub mod groups;
mod linalg;

pub use error::{Error, Result};
