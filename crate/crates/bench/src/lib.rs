//! Shared fixtures for the benchmark targets.

use sixjvol_core::experiments::{color_sequence, required_table_arg};
use sixjvol_core::rootval::SineTable;
use sixjvol_core::sixj::{AdmissibleSix, ThetaSix};

/// Canonical hyperbolic 6-tuple used across the benches.
pub fn bench_theta() -> ThetaSix {
    ThetaSix::classify([0.6; 6]).expect("in range")
}

/// Colors and a matching sine table at root order `n`.
pub fn bench_colors(n: u32) -> (AdmissibleSix, SineTable) {
    let b = color_sequence(&bench_theta(), n).expect("admissible");
    let need = required_table_arg(&b).max((2.6 * n as f64).ceil() as u32);
    (b, SineTable::new(n, need))
}
