//! Closed-form fractional Laplacian of the Higgins and Christov families.

mod alpha;
mod closed;
mod family;
mod limits;

pub use alpha::Alpha;
pub use closed::{
    flap_family, flap_lambda, flap_lambda_expanded, flap_mu, flap_mu_expanded, flap_real_family,
    FractionalLaplacian,
};
pub use family::{eval_family, Family, FamilySpec};
pub use limits::{flap_limit_identity, higgins, higgins_d1, higgins_d2, LimitKind};

#[cfg(test)]
mod tests;
