//! Exact arithmetic in `Z[q]`, `Q(q)` and `Z[[q]]` truncated at a fixed order.

mod cyclotomic;
mod poly;
mod rat;
mod series;

pub use cyclotomic::CyclotomicTable;
pub use poly::{poly_arith, q_factorial, q_int, ArithOp, QPoly};
pub use rat::{eval_at, eval_limit_q1, rat_reduce, QRat};
pub use series::{series_from_rat, QSeries};

pub(crate) use rat::product;
