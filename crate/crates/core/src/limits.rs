//! Process-wide size limits.
//!
//! Defaults can be overridden programmatically or, for the CLI, through the
//! `PNIL_ENUM_CUTOFF`, `PNIL_LATTICE_CUTOFF` and `PNIL_DEGREE_CUTOFF`
//! environment variables (see [`load_from_env`]).

use std::sync::atomic::{AtomicU64, Ordering};

pub const DEFAULT_ENUMERATION_CUTOFF: u64 = 20_000;
pub const DEFAULT_LATTICE_CUTOFF: u64 = 20_000;
pub const DEFAULT_DEGREE_CUTOFF: u64 = 20_000;

static ENUMERATION: AtomicU64 = AtomicU64::new(DEFAULT_ENUMERATION_CUTOFF);
static LATTICE: AtomicU64 = AtomicU64::new(DEFAULT_LATTICE_CUTOFF);
static DEGREE: AtomicU64 = AtomicU64::new(DEFAULT_DEGREE_CUTOFF);

/// Largest group order for which the full element list is built.
pub fn enumeration_cutoff() -> u64 {
    ENUMERATION.load(Ordering::Relaxed)
}

/// Largest group order for exhaustive subgroup enumeration.
pub fn lattice_cutoff() -> u64 {
    LATTICE.load(Ordering::Relaxed)
}

/// Largest permutation degree for projective actions and coset actions.
pub fn degree_cutoff() -> u64 {
    DEGREE.load(Ordering::Relaxed)
}

pub fn set_enumeration_cutoff(n: u64) {
    ENUMERATION.store(n, Ordering::Relaxed);
}

pub fn set_lattice_cutoff(n: u64) {
    LATTICE.store(n, Ordering::Relaxed);
}

pub fn set_degree_cutoff(n: u64) {
    DEGREE.store(n.min(u16::MAX as u64 + 1), Ordering::Relaxed);
}

/// Reads the override variables; returns the names of any that failed to parse.
pub fn load_from_env() -> Vec<&'static str> {
    let mut bad = Vec::new();
    let vars = [
        ("PNIL_ENUM_CUTOFF", set_enumeration_cutoff as fn(u64)),
        ("PNIL_LATTICE_CUTOFF", set_lattice_cutoff),
        ("PNIL_DEGREE_CUTOFF", set_degree_cutoff),
    ];
    for (name, set) in vars {
        if let Ok(v) = std::env::var(name) {
            match v.trim().parse::<u64>() {
                Ok(n) if n > 0 => set(n),
                _ => bad.push(name),
            }
        }
    }
    bad
}
