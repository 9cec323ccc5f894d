//! The graph DSL, JSON interchange and output renderers.

pub mod dsl;
pub mod emit;
pub mod json;
