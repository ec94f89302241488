use std::path::PathBuf;

use igraphs::Convention;

use crate::output::OutputFormat;

pub const DEFAULT_SIEVE_LIMIT: u64 = 1_000_000;
pub const SIEVE_LIMIT_ENV: &str = "IGRAPHS_SIEVE_LIMIT";
pub const MAX_BRUTE_CAP: u64 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityMode {
    Tuples,
    Classes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifySuite {
    Brute,
    Sums,
    Dirichlet,
    Roots,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Census,
    Density(DensityMode),
    Verify(VerifySuite),
    Graph { n: u64, j: u64, k: u64 },
    Constants,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub max_n: u64,
    pub convention: Convention,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub sieve_limit: u64,
    pub brute_cap: u64,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.max_n < 3 {
            return Err(format!("--max-n must be at least 3 (got {})", self.max_n));
        }
        if self.max_n > self.sieve_limit {
            return Err(format!(
                "--max-n {} exceeds the sieve limit {}",
                self.max_n, self.sieve_limit
            ));
        }
        if self.brute_cap > MAX_BRUTE_CAP || self.brute_cap < 3 {
            return Err(format!(
                "--brute-cap must lie in 3..={MAX_BRUTE_CAP} (got {})",
                self.brute_cap
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> RunConfig {
        RunConfig {
            command: Command::Census,
            max_n: 100,
            convention: Convention::Strict,
            output_format: OutputFormat::Csv,
            output_path: None,
            sieve_limit: 1000,
            brute_cap: 16,
        }
    }

    #[test]
    fn invariants() {
        assert!(base().validate().is_ok());
        assert!(RunConfig { max_n: 1001, ..base() }.validate().is_err());
        assert!(RunConfig { max_n: 2, ..base() }.validate().is_err());
        assert!(RunConfig { brute_cap: 21, ..base() }.validate().is_err());
        assert!(RunConfig { brute_cap: 20, ..base() }.validate().is_ok());
    }
}
