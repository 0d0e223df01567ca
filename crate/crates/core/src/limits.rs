//! Configurable caps on exponential work.

use std::env;

use crate::vset::MAX_VERTICES;

pub const DEFAULT_VERTEX_CAP: usize = 63;
pub const DEFAULT_FACTORIAL_CAP: usize = 8;
pub const DEFAULT_STEP_CAP: u64 = 10_000_000;

pub const ENV_VERTEX_CAP: &str = "ALTERMATIC_N_CAP";
pub const ENV_FACTORIAL_CAP: &str = "ALTERMATIC_FACTORIAL_CAP";
pub const ENV_STEP_CAP: &str = "ALTERMATIC_STEP_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest accepted vertex count (never above 64).
    pub vertex_cap: usize,
    /// Largest `n` for which all `n!` orderings are enumerated.
    pub factorial_cap: usize,
    /// Maximum number of audit walk steps.
    pub step_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            vertex_cap: DEFAULT_VERTEX_CAP,
            factorial_cap: DEFAULT_FACTORIAL_CAP,
            step_cap: DEFAULT_STEP_CAP,
        }
    }
}

impl Limits {
    /// Defaults overridden by `ALTERMATIC_N_CAP`, `ALTERMATIC_FACTORIAL_CAP` and
    /// `ALTERMATIC_STEP_CAP` when set to parseable values.
    pub fn from_env() -> Self {
        fn read<T: std::str::FromStr>(key: &str) -> Option<T> {
            env::var(key).ok().and_then(|s| s.trim().parse().ok())
        }
        let d = Limits::default();
        Limits {
            vertex_cap: read(ENV_VERTEX_CAP)
                .unwrap_or(d.vertex_cap)
                .min(MAX_VERTICES),
            factorial_cap: read(ENV_FACTORIAL_CAP).unwrap_or(d.factorial_cap),
            step_cap: read(ENV_STEP_CAP).unwrap_or(d.step_cap),
        }
    }
}
