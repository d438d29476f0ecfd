//! Independent brute-force reference implementations used to cross-check
//! the main pipeline. Every function here recomputes its answer from
//! first principles with a deliberately simple algorithm and shares no
//! code with the engines it checks.

mod betti;
mod disjoint;
mod report;
mod walker;

pub use betti::oracle_betti_f2;
pub use disjoint::oracle_disjoint;
pub use report::OracleReport;
pub use walker::oracle_loops;
