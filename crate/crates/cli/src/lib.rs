//! Library half of the `helix` command-line tool: the loop catalog with
//! its stable identifiers, and the verification sweep that cross-checks
//! the whole pipeline against independent oracles.

pub mod catalog;
pub mod sweep;

/// Simplex budget used when the `HELIX_CAPACITY` variable is unset.
pub const DEFAULT_CAPACITY: usize = 1_000_000;

/// Reads the simplex budget from the environment, if overridden.
pub fn capacity_from_env() -> Result<usize, String> {
    match std::env::var("HELIX_CAPACITY") {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map_err(|e| format!("invalid HELIX_CAPACITY value {s:?}: {e}")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_CAPACITY),
        Err(e) => Err(format!("cannot read HELIX_CAPACITY: {e}")),
    }
}
