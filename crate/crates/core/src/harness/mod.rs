//! Per-shape checks and deterministic, resumable screening sweeps.

mod checks;
mod record;
mod sweep;

pub use checks::{
    check_eq2, check_eq3, check_eq4, check_lr, pair_keys, run_check_theorem, run_pair, screen_conj1, screen_conj23,
    screen_fq_polynomiality,
};
pub use record::{parse_line, record_key, Check, RecordLine, ScreenRecord, Status};
pub use sweep::{load_existing, sweep, sweep_records, sweep_to_writer, SweepConfig, SweepSummary};
