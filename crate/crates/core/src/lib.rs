//! Quantum 6j-symbols at roots of unity and hyperbolic volumes.
//!
//! The crate evaluates `U_q(sl2)` 6j-symbols at `q_n = exp(2πi/n)` keeping
//! exact track of the Laurent order of the leading coefficient (poles and
//! zeros included), in natural-log magnitude domain so that values of size
//! `e^{n·Vol/2π}` never overflow. On the geometric side it computes volumes
//! of hyperbolic truncated tetrahedra by two independent routes — a
//! saddle-point formula built from the Lobachevsky function and the
//! Murakami–Yano dilogarithm formula — and glues them into volumes of
//! deformed fundamental-shadow-link complements. The `experiments` module
//! runs the finite-`n` convergence studies tying the two sides together.
//!
//! Modules:
//! * [`rootval`] — leading Laurent coefficients of quantum integers and
//!   factorials at `q_n`, with `O(1)` factorial queries via [`SineTable`].
//! * [`sixj`] — admissibility, classification of real 6-tuples, and
//!   6j-symbol evaluation (log-domain and a generic-`q` complex oracle).
//! * [`hypgeom`] — Lobachevsky function, dilogarithm, saddle-point solver,
//!   and the two volume formulas for truncated tetrahedra and D-blocks.
//! * [`shadow`] — abstract fundamental shadow links, their colored Jones
//!   leading coefficients, and deformed complement volumes.
//! * [`experiments`] — admissible color sequences and convergence tables.

pub mod error;
pub mod experiments;
pub mod half;
pub mod hypgeom;
pub mod rootval;
pub mod shadow;
pub mod sixj;

pub use error::{Error, Result};
pub use experiments::ConvergenceRow;
pub use half::Half;
pub use hypgeom::{SaddleData, TruncTetra};
pub use rootval::{LaurentLead, Sign, SineTable};
pub use shadow::{HolonomyParams, ShadowLink, Violation};
pub use sixj::{AdmissibleSix, ThetaClass, ThetaSix};
