//! Automatic choice of the working digit count.
//!
//! A computation is repeated at `k` and `k + 1` digits until the two results
//! agree to `ε`; `k` is then accepted.

mod escalate;
mod fit;
mod scan;

pub use escalate::{escalate, EscalationConfig, Escalation, StepMode, EPSILON};
pub use fit::fit_line;
pub use scan::{
    auto_digits_matrix, auto_digits_scalar, auto_digits_value, digit_scan, digit_scan_with,
    CriterionKind, DigitScanReport, MatrixDigits, ScalarDigits, ScanRecord,
};
