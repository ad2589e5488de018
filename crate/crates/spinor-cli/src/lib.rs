//! IO, file formats, DOT emission, and the verification harness behind the
//! `spinor` binary.

pub mod dot;
pub mod json;
pub mod report;
