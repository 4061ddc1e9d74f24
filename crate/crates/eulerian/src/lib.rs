//! Parallel enumeration, verification suites and the command-line front end
//! for `eulerian-core`.

pub mod checks;
pub mod cli;
pub mod parallel;
pub mod random;
pub mod report;
pub mod suites;
