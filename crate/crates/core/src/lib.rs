//! Exact computations with type C2 webs: the fundamental representations of
//! quantum sp4, the diagrammatic generators acting on them, and the light
//! ladder and double ladder bases of Hom spaces.

pub mod error;
pub mod ladders;
pub mod linalg;
pub mod ring;
pub mod report;
pub mod repr;
pub mod selftest;
pub mod weights;
pub mod webs;

pub use error::{Error, Result};
