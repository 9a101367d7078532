//! Numerical models of the Chern-Simons prequantum line bundle over the moduli
//! space of flat SU(2) connections on a closed oriented surface.
//!
//! The crate is organized bottom-up:
//!
//! - [`lie`]: SU(2)/su(2) arithmetic in a fixed quaternion basis.
//! - [`surface`]: surface-group presentations, the coned 4g-gon Δ-complex and
//!   the handle-collapsing map.
//! - [`repvar`]: flat representations (holonomies), sampling and the pullback
//!   along the collapse map.
//! - [`twisted`]: Ad-twisted simplicial cochains, H¹ and the cup-product
//!   symplectic pairing.
//! - [`prequantum`]: the genus-1 bundle: Chern-Simons quadrature, gauge
//!   cocycle, connection form and parallel transport.
//! - [`chern`]: three first-Chern-number algorithms and the covering division.
//! - [`quotient`]: the Weyl quotient of the torus and its covering degree.

pub mod chern;
pub mod error;
pub mod lie;
pub mod prequantum;
pub mod quotient;
pub mod repvar;
pub mod surface;
pub mod twisted;

pub use error::{Error, Result};
