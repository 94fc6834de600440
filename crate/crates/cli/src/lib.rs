//! Command line front end and corpus verifier for `holefree-core`.

pub mod cli;
pub mod io;
pub mod report;
pub mod verify;

/// Environment variable overriding the exact oracle's vertex cap.
pub const ORACLE_CAP_ENV: &str = "HOLEFREE_ORACLE_CAP";

/// The oracle cap from [`ORACLE_CAP_ENV`], falling back to the library default.
pub fn oracle_cap() -> usize {
    std::env::var(ORACLE_CAP_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(holefree_core::exact::DEFAULT_CAP)
}
