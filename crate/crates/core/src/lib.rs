//! Exact truncated Pascal's triangles.
//!
//! For a truncation parameter `t >= 1` the array `a_t(n, k)` obeys Pascal's
//! recurrence with every entry past column `min(floor((n - 1 + t) / 2), n)`
//! forced to zero. This crate builds the array five independent ways and
//! checks them against each other:
//!
//! * the recurrence ([`array::row`]) and the binomial difference
//!   `C(n, k) - C(n, k - t)` ([`array::entry`], [`array::closed_form`]);
//! * `t`-admissible lattice paths ([`lattice`]);
//! * `t`-admissible single-column tableaux and the path bijection
//!   ([`tableaux`]);
//! * coefficients of `D^{-N}(x[t-1])` for `D(y) = y' + y''` in the factorial
//!   basis ([`operator`]).
//!
//! [`parity`] counts odd entries with Lucas's theorem: every row has a
//! power-of-two number of odd entries exactly when `t` is a power of two.

pub mod array;
pub mod error;
pub mod format;
pub mod lattice;
pub mod operator;
pub mod parity;
pub mod tableaux;
pub mod verify;

pub use array::{binomial, closed_form, entry, row, truncation_boundary, BigEntry, RowVector, TriangleSpec};
pub use error::{Error, Result};
pub use lattice::{count_touching, enumerate_admissible, is_admissible, NEPath, Step};
pub use operator::{apply_d, apply_d_inverse, extract_d, inverse_power_expansion, FactorialBasisPoly};
pub use parity::{
    binom_mod_p, digits, is_odd_binomial, parity_bitmap, pascal_row_odd_count, odd_count_report,
    truncated_parity, truncated_row_odd_count, vandermonde_check, BaseDigits, OddCountMethod,
    ParityBitmap,
};
pub use tableaux::{enumerate_tableaux, is_admissible_tableau, phi, psi, ColumnarTableau};
pub use verify::{verify, VerificationReport};
