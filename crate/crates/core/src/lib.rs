//! Character degree graphs of finite groups, their complements, and
//! module-action checks for small matrix groups.

pub mod cli;
pub mod graph;
pub mod modact;
pub mod numtheory;
pub mod psl2;

pub use graph::{DegreeSet, PrimeGraph, Verdict};
