//! The `odlab` command line: graph reductions, exact parameters, subspace
//! graphs, index codes, the full verification report, and witness checking.

pub mod certificate;
pub mod cli;
pub mod report;

pub use cli::run;
