//! Independent checks: quadrature of the integral definition, the mixed
//! discrepancy metric and an entry-by-entry reference matrix.

mod discrepancy;
mod gk;
mod quadrature;
mod reference;

pub use discrepancy::{discrepancy, discrepancy_slices};
pub use gk::{integrate_adaptive, GkResult};
pub use quadrature::{flap_quadrature, QuadratureSpec};
pub use reference::per_entry_reference;
