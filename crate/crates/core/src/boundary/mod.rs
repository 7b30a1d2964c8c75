//! Piecewise-analytic Jordan boundaries: closed arc chains, corner
//! detection, point containment, and arclength quadrature rules.

mod arc;
mod quadrature;

pub use arc::{ArcDescriptor, ArcKind, ParamFn};
pub use quadrature::{quadrature, quadrature_with_cap, QuadratureRule};

use std::fmt;

use num_complex::Complex;

use crate::scalar::{lit, Real};
use crate::tol;

/// Errors from boundary construction and quadrature generation.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundaryError {
    /// The arc chain does not close: `gap` between arc `index` and its successor.
    NonClosedChain { index: usize, gap: f64 },
    /// Arc `index` has (numerically) zero length or a vanishing derivative.
    DegenerateArc { index: usize },
    /// The chain winds the wrong way; interior must lie on the left.
    WrongOrientation,
    /// Junction `index` forms a cusp (interior angle 0 or 2 pi).
    CuspAtCorner { index: usize },
    /// Circular arc `index` has inconsistent end radii.
    BadCircularArc { index: usize, mismatch: f64 },
    /// A generated rule would exceed the configured node cap.
    CapacityTooLarge { requested: usize, cap: usize },
    /// Caller-supplied argument outside the documented domain.
    InvalidArgument(&'static str),
    /// No arcs supplied.
    EmptyBoundary,
}

impl fmt::Display for BoundaryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonClosedChain { index, gap } => {
                write!(f, "build_boundary: chain gap {gap:.3e} after arc {index}")
            }
            Self::DegenerateArc { index } => {
                write!(f, "build_boundary: arc {index} is degenerate")
            }
            Self::WrongOrientation => {
                write!(f, "build_boundary: boundary is negatively oriented (interior must be on the left)")
            }
            Self::CuspAtCorner { index } => {
                write!(f, "build_boundary: cusp at junction {index}")
            }
            Self::BadCircularArc { index, mismatch } => {
                write!(f, "build_boundary: circular arc {index} end radii differ by {mismatch:.3e}")
            }
            Self::CapacityTooLarge { requested, cap } => {
                write!(f, "quadrature: requested {requested} nodes exceeds cap {cap}")
            }
            Self::InvalidArgument(msg) => write!(f, "boundary: {msg}"),
            Self::EmptyBoundary => write!(f, "build_boundary: no arcs supplied"),
        }
    }
}

impl std::error::Error for BoundaryError {}

/// Result of a point-in-domain query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Outside,
    /// Within the boundary-distance tolerance of the sampled polyline.
    OnBoundary,
}

/// A corner of the boundary.
#[derive(Debug, Clone, Copy)]
pub struct Corner<T: Real> {
    /// Corner location (the shared arc endpoint).
    pub location: Complex<T>,
    /// Junction index: the corner sits between arc `j` and arc `j + 1` (cyclic).
    pub junction: usize,
    /// Interior angle in units of pi, in `(0, 2)`.
    pub interior_angle: T,
    /// Exterior-angle parameter `lambda = 2 - interior_angle`.
    pub lambda: T,
}

/// Options for [`build_boundary_with`].
#[derive(Clone)]
pub struct BuildOptions<T: Real> {
    /// Reverse the chain automatically if it is negatively oriented.
    pub auto_reverse: bool,
    /// Overrides `(junction index, interior angle in units of pi)`; an
    /// override of exactly 1 marks the junction smooth.
    pub corner_overrides: Vec<(usize, T)>,
    /// Polyline sample count per arc used for containment and orientation.
    pub samples_per_arc: usize,
}

impl<T: Real> Default for BuildOptions<T> {
    fn default() -> Self {
        Self { auto_reverse: false, corner_overrides: Vec::new(), samples_per_arc: 512 }
    }
}

/// A closed, positively oriented, piecewise-analytic Jordan boundary.
///
/// Immutable after construction; all queries are pure.
#[derive(Clone)]
pub struct BoundaryCurve<T: Real> {
    arcs: Vec<ArcDescriptor<T>>,
    arc_lengths: Vec<T>,
    corners: Vec<Corner<T>>,
    length: T,
    polyline: Vec<Complex<T>>,
}

/// Builds a boundary from an ordered cyclic arc chain with default options.
pub fn build_boundary<T: Real>(
    arcs: Vec<ArcDescriptor<T>>,
) -> Result<BoundaryCurve<T>, BoundaryError> {
    build_boundary_with(arcs, &BuildOptions::default())
}

/// Builds a boundary with explicit options.
pub fn build_boundary_with<T: Real>(
    arcs: Vec<ArcDescriptor<T>>,
    opts: &BuildOptions<T>,
) -> Result<BoundaryCurve<T>, BoundaryError> {
    match assemble(&arcs, opts) {
        Err(BoundaryError::WrongOrientation) if opts.auto_reverse => {
            let reversed: Vec<_> = arcs.iter().rev().map(|a| a.reversed()).collect();
            assemble(&reversed, opts)
        }
        other => other,
    }
}

fn assemble<T: Real>(
    arcs: &[ArcDescriptor<T>],
    opts: &BuildOptions<T>,
) -> Result<BoundaryCurve<T>, BoundaryError> {
    if arcs.is_empty() {
        return Err(BoundaryError::EmptyBoundary);
    }
    let m = arcs.len();
    let closure = tol::scaled::<T>(tol::CHAIN_CLOSURE);
    let degenerate = tol::scaled::<T>(tol::DEGENERATE_ARC);

    let mut arc_lengths = Vec::with_capacity(m);
    for (i, a) in arcs.iter().enumerate() {
        a.validate(i)?;
        let len = a.length();
        if len <= degenerate {
            return Err(BoundaryError::DegenerateArc { index: i });
        }
        arc_lengths.push(len);
    }
    for i in 0..m {
        let gap = (arcs[i].to() - arcs[(i + 1) % m].from()).norm();
        if gap > closure {
            return Err(BoundaryError::NonClosedChain {
                index: i,
                gap: gap.to_f64().unwrap_or(f64::NAN),
            });
        }
    }

    let samples = opts.samples_per_arc.max(8);
    let mut polyline = Vec::with_capacity(m * samples);
    for a in arcs {
        for j in 0..samples {
            polyline.push(a.point(lit::<T>(j as f64 / samples as f64)));
        }
    }
    if signed_area(&polyline) <= T::zero() {
        return Err(BoundaryError::WrongOrientation);
    }

    if opts.corner_overrides.iter().any(|(idx, _)| *idx >= m) {
        return Err(BoundaryError::InvalidArgument("corner override junction index out of range"));
    }
    let angle_tol = tol::scaled::<T>(tol::CORNER_ANGLE);
    let mut corners = Vec::new();
    for j in 0..m {
        let u = arcs[j].unit_tangent(T::one());
        let v = arcs[(j + 1) % m].unit_tangent(T::zero());
        let turn = (v * u.conj()).arg();
        let override_theta = opts
            .corner_overrides
            .iter()
            .find(|(idx, _)| *idx == j)
            .map(|&(_, theta)| theta);
        let theta = match override_theta {
            Some(theta) => theta,
            None => T::one() - turn / T::PI(),
        };
        if theta <= T::zero() || theta >= lit::<T>(2.0) {
            return Err(BoundaryError::CuspAtCorner { index: j });
        }
        let is_corner = (theta - T::one()).abs() > angle_tol / T::PI();
        if is_corner {
            corners.push(Corner {
                location: arcs[j].to(),
                junction: j,
                interior_angle: theta,
                lambda: lit::<T>(2.0) - theta,
            });
        }
    }

    let length = arc_lengths.iter().fold(T::zero(), |a, &b| a + b);
    Ok(BoundaryCurve { arcs: arcs.to_vec(), arc_lengths, corners, length, polyline })
}

impl<T: Real> BoundaryCurve<T> {
    pub fn arcs(&self) -> &[ArcDescriptor<T>] {
        &self.arcs
    }

    pub fn arc_lengths(&self) -> &[T] {
        &self.arc_lengths
    }

    pub fn corners(&self) -> &[Corner<T>] {
        &self.corners
    }

    /// Total boundary length.
    pub fn length(&self) -> T {
        self.length
    }

    /// Dense boundary sample used for orientation, containment, and distance
    /// queries. Closed implicitly (the last point connects to the first).
    pub fn polyline(&self) -> &[Complex<T>] {
        &self.polyline
    }

    /// `count` points spread uniformly in arclength along the boundary.
    pub fn sample_points(&self, count: usize) -> Vec<Complex<T>> {
        let mut out = Vec::with_capacity(count);
        let mut starts = Vec::with_capacity(self.arcs.len());
        let mut acc = T::zero();
        for &len in &self.arc_lengths {
            starts.push(acc);
            acc = acc + len;
        }
        for k in 0..count {
            let s = self.length * lit::<T>(k as f64 / count as f64);
            let mut idx = self.arcs.len() - 1;
            for (i, &s0) in starts.iter().enumerate() {
                if s < s0 {
                    idx = i - 1;
                    break;
                }
                idx = i;
            }
            let t = ((s - starts[idx]) / self.arc_lengths[idx]).min(T::one());
            out.push(self.arcs[idx].point(t));
        }
        out
    }

    /// Distance from `z` to the sampled boundary polyline.
    pub fn distance_to_boundary(&self, z: Complex<T>) -> T {
        let n = self.polyline.len();
        let mut best = T::infinity();
        for i in 0..n {
            let d = dist_to_segment(z, self.polyline[i], self.polyline[(i + 1) % n]);
            if d < best {
                best = d;
            }
        }
        best
    }

    /// Domain diameter estimated from the boundary polyline.
    pub fn diameter(&self) -> T {
        let step = self.polyline.len().div_ceil(512).max(1);
        let pts: Vec<_> = self.polyline.iter().step_by(step).collect();
        let mut best = T::zero();
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                let d = (*pts[i] - *pts[j]).norm();
                if d > best {
                    best = d;
                }
            }
        }
        best
    }

    /// Winding number of the boundary polyline about `z`.
    pub fn winding_number(&self, z: Complex<T>) -> i32 {
        let n = self.polyline.len();
        let mut total = T::zero();
        for i in 0..n {
            let a = self.polyline[i] - z;
            let b = self.polyline[(i + 1) % n] - z;
            total = total + (b * a.conj()).arg();
        }
        let two_pi = T::PI() + T::PI();
        (total / two_pi).round().to_i32().unwrap_or(0)
    }

    /// Point-in-domain test against the sampled polyline.
    pub fn contains(&self, z: Complex<T>) -> Containment {
        if self.distance_to_boundary(z) <= tol::scaled::<T>(tol::ON_BOUNDARY) {
            return Containment::OnBoundary;
        }
        if self.winding_number(z) == 1 {
            Containment::Inside
        } else {
            Containment::Outside
        }
    }
}

/// Exterior-angle parameters `lambda_j` per corner and their minimum
/// (1 for a smooth boundary).
pub fn exterior_angles<T: Real>(boundary: &BoundaryCurve<T>) -> (Vec<T>, T) {
    let lambdas: Vec<T> = boundary.corners().iter().map(|c| c.lambda).collect();
    let min = lambdas.iter().copied().fold(T::infinity(), T::min);
    let min = if lambdas.is_empty() { T::one() } else { min };
    (lambdas, min)
}

fn signed_area<T: Real>(poly: &[Complex<T>]) -> T {
    let n = poly.len();
    let mut acc = T::zero();
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        acc = acc + (a.re * b.im - b.re * a.im);
    }
    acc / lit::<T>(2.0)
}

fn dist_to_segment<T: Real>(z: Complex<T>, a: Complex<T>, b: Complex<T>) -> T {
    let ab = b - a;
    let az = z - a;
    let len2 = ab.norm_sqr();
    if len2 == T::zero() {
        return az.norm();
    }
    let t = ((az * ab.conj()).re / len2).max(T::zero()).min(T::one());
    (az - ab * t).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use approx::assert_abs_diff_eq;

    type C = Complex<f64>;

    #[test]
    fn circle_has_circumference_and_no_corners() {
        let b = builtin::circle::<f64>();
        assert_abs_diff_eq!(b.length(), std::f64::consts::TAU, epsilon = 1e-13);
        assert!(b.corners().is_empty());
        let (lams, min) = exterior_angles(&b);
        assert!(lams.is_empty());
        assert_eq!(min, 1.0);
    }

    #[test]
    fn square_has_four_corners_with_lambda_three_halves() {
        let b = builtin::square::<f64>();
        assert_abs_diff_eq!(b.length(), 8.0, epsilon = 1e-13);
        assert_eq!(b.corners().len(), 4);
        for c in b.corners() {
            assert_abs_diff_eq!(c.interior_angle, 0.5, epsilon = 1e-12);
            assert_abs_diff_eq!(c.lambda, 1.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn lshape_min_lambda_is_one_half() {
        let b = builtin::lshape::<f64>();
        assert_eq!(b.corners().len(), 6);
        let (_, min) = exterior_angles(&b);
        assert_abs_diff_eq!(min, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn open_chain_is_rejected() {
        let arcs = vec![
            ArcDescriptor::segment(C::new(0.0, 0.0), C::new(1.0, 0.0)),
            ArcDescriptor::segment(C::new(1.0, 0.0), C::new(1.0, 1.0)),
        ];
        match build_boundary(arcs) {
            Err(BoundaryError::NonClosedChain { index: 1, .. }) => {}
            other => panic!("expected NonClosedChain, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_arc_is_rejected() {
        let p = C::new(0.0, 0.0);
        let arcs = vec![
            ArcDescriptor::segment(p, p),
            ArcDescriptor::segment(p, C::new(1.0, 0.0)),
            ArcDescriptor::segment(C::new(1.0, 0.0), p),
        ];
        assert!(matches!(
            build_boundary(arcs),
            Err(BoundaryError::DegenerateArc { index: 0 })
        ));
    }

    #[test]
    fn wrong_orientation_reported_and_auto_fixed_on_request() {
        let cw = vec![
            ArcDescriptor::segment(C::new(0.0, 0.0), C::new(0.0, 1.0)),
            ArcDescriptor::segment(C::new(0.0, 1.0), C::new(1.0, 1.0)),
            ArcDescriptor::segment(C::new(1.0, 1.0), C::new(1.0, 0.0)),
            ArcDescriptor::segment(C::new(1.0, 0.0), C::new(0.0, 0.0)),
        ];
        assert!(matches!(build_boundary(cw.clone()), Err(BoundaryError::WrongOrientation)));
        let opts = BuildOptions { auto_reverse: true, ..Default::default() };
        let b = build_boundary_with(cw, &opts).expect("auto-reversal");
        assert_abs_diff_eq!(b.length(), 4.0, epsilon = 1e-13);
        assert_eq!(b.contains(C::new(0.5, 0.5)), Containment::Inside);
    }

    #[test]
    fn corner_override_replaces_detected_angle() {
        let sq = builtin::square_arcs::<f64>();
        let opts = BuildOptions {
            corner_overrides: vec![(0, 0.25)],
            ..Default::default()
        };
        let b = build_boundary_with(sq, &opts).expect("square");
        let c0 = b.corners().iter().find(|c| c.junction == 0).unwrap();
        assert_abs_diff_eq!(c0.interior_angle, 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(c0.lambda, 1.75, epsilon = 1e-15);
    }

    #[test]
    fn containment_matches_examples() {
        let circle = builtin::circle::<f64>();
        assert_eq!(circle.contains(C::new(0.0, 0.0)), Containment::Inside);
        assert_eq!(circle.contains(C::new(2.0, 0.0)), Containment::Outside);
        let square = builtin::square::<f64>();
        assert_eq!(square.contains(C::new(1.0, 1.0)), Containment::OnBoundary);
        assert_eq!(square.contains(C::new(0.3, -0.9)), Containment::Inside);
        assert_eq!(square.contains(C::new(1.2, 0.0)), Containment::Outside);
    }

    #[test]
    fn winding_is_plus_one_inside() {
        let b = builtin::lshape::<f64>();
        assert_eq!(b.winding_number(C::new(0.5, 0.5)), 1);
        assert_eq!(b.winding_number(C::new(1.5, 1.5)), 0);
    }

    #[test]
    fn sample_points_lie_on_boundary() {
        let b = builtin::square::<f64>();
        for z in b.sample_points(64) {
            assert!(b.distance_to_boundary(z) < 1e-9);
        }
    }

    #[test]
    fn diameter_of_square_is_diagonal() {
        let b = builtin::square::<f64>();
        assert_abs_diff_eq!(b.diameter(), 8.0f64.sqrt(), epsilon = 1e-9);
    }
}
