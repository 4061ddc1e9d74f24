//! Exact polynomials, rational-series expansion, lattice counts and
//! real-root counting.

pub mod fcount;
mod poly;
pub mod series;
pub mod sturm;

pub use fcount::{f_count, verify_fcount_transform};
pub use poly::Polynomial;
pub use series::{expand_rational, verify_series_identity, ClosedForm, SeriesCheck, SeriesMismatch};
pub use sturm::{is_real_rooted, square_free_part, sturm_distinct_real_roots};
