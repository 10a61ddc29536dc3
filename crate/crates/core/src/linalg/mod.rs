//! Exact linear algebra helpers shared by the character, cohomology and
//! finite-field modules.

pub(crate) mod modp;
pub(crate) mod rational;
pub(crate) mod snf;
