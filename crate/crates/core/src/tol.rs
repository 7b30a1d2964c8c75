//! Pinned numerical tolerances.
//!
//! Every threshold used for validation in this crate lives here, fixed in
//! `f64` units. [`scaled`] widens a value by the machine-epsilon ratio when
//! the library is instantiated at a narrower scalar type; at `f64` the
//! pinned values are used verbatim.

use crate::scalar::Real;

/// Absolute gap allowed between consecutive arc endpoints of a closed chain.
pub const CHAIN_CLOSURE: f64 = 1e-12;

/// Tangent-direction jump (radians) below which an arc junction counts as smooth.
pub const CORNER_ANGLE: f64 = 1e-9;

/// Relative mismatch allowed between the end radii of a circular arc.
pub const RADIUS_MISMATCH: f64 = 1e-9;

/// Relative tolerance on the quadrature weight sum against the boundary length.
pub const WEIGHT_SUM_REL: f64 = 1e-12;

/// Distance from the sampled boundary polyline treated as "on the boundary".
pub const ON_BOUNDARY: f64 = 1e-10;

/// Arcs shorter than this are rejected as degenerate.
pub const DEGENERATE_ARC: f64 = 1e-12;

/// Orthogonalization norm below which basis construction reports a breakdown.
pub const BREAKDOWN: f64 = 1e-14;

/// `|p_n(zeta)|` below this counts as a symmetry-forced zero in decay studies.
pub const DECAY_ZERO: f64 = 1e-14;

/// Newton residual target for reference-map inversion.
pub const NEWTON: f64 = 1e-13;

/// Margin required of `|psi'|` on the unit circle for poly-image maps.
pub const UNIVALENCE_MARGIN: f64 = 1e-6;

/// Multiplicative slack in the pointwise Cauchy-Schwarz bound check.
pub const CS_SLACK: f64 = 1e-10;

/// Default cap on the total node count of generated quadrature rules.
pub const DEFAULT_MAX_NODES: usize = 500_000;

/// Converts a pinned tolerance to the working scalar type.
pub fn scaled<T: Real>(base: f64) -> T {
    T::from_f64(base * T::tolerance_scale()).expect("tolerance fits in scalar")
}
