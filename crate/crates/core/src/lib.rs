//! Exact hook-length and hook-content formulas over excited Young diagrams.
//!
//! The crate is organised bottom-up:
//!
//! * [`partition`]: partitions, skew shapes, hooks and contents;
//! * [`excited`]: elementary excitations and `EYD(λ/μ)`;
//! * [`qarith`]: exact polynomials, rational functions and series in `q`;
//! * [`formulas`]: `f^{λ/μ}`, `f_q`, `H(n; q)`, `H̄(n)` and principal specializations;
//! * [`oracles`]: brute-force tableau enumeration and Littlewood–Richardson coefficients;
//! * [`harness`]: per-shape checks and deterministic screening sweeps.

pub mod error;
pub mod excited;
pub mod formulas;
pub mod harness;
pub mod oracles;
pub mod partition;
pub mod qarith;

pub use error::{Error, Result};
pub use excited::{enumerate_eyd, Diagram};
pub use formulas::ExcitedShape;
pub use partition::{Cell, Partition, SkewShape};
pub use qarith::{QPoly, QRat, QSeries};
