//! Single boundary arcs: segments, circular arcs, and parametric arcs given
//! by evaluation callbacks.

use std::sync::Arc;

use num_complex::Complex;

use super::BoundaryError;
use crate::gauss;
use crate::scalar::{lit, Real};
use crate::tol;

/// Callback contract for parametric arcs: a map from `[0, 1]` into the plane.
pub type ParamFn<T> = Arc<dyn Fn(T) -> Complex<T> + Send + Sync>;

/// The geometric kind of an arc.
#[derive(Clone)]
pub enum ArcKind<T: Real> {
    /// Straight segment between the endpoints.
    Segment,
    /// Circular arc about `center`; `ccw` selects the traversal direction.
    /// Coinciding endpoints denote a full circle.
    Circular { center: Complex<T>, ccw: bool },
    /// Smooth map from `[0, 1]` with its derivative, both supplied by the caller.
    Parametric { map: ParamFn<T>, derivative: ParamFn<T> },
}

/// One analytic arc of a piecewise boundary, traversed from `from` to `to`.
#[derive(Clone)]
pub struct ArcDescriptor<T: Real> {
    pub(crate) kind: ArcKind<T>,
    pub(crate) from: Complex<T>,
    pub(crate) to: Complex<T>,
}

/// Derived geometry of a circular arc.
pub(crate) struct CircleGeom<T> {
    pub radius: T,
    pub theta0: T,
    /// Signed sweep angle; positive for counterclockwise traversal.
    pub sweep: T,
}

impl<T: Real> ArcDescriptor<T> {
    /// Straight segment from `from` to `to`.
    pub fn segment(from: Complex<T>, to: Complex<T>) -> Self {
        Self { kind: ArcKind::Segment, from, to }
    }

    /// Circular arc from `from` to `to` about `center`. Coinciding endpoints
    /// produce a full circle traversed in the requested direction.
    pub fn circular(from: Complex<T>, to: Complex<T>, center: Complex<T>, ccw: bool) -> Self {
        Self { kind: ArcKind::Circular { center, ccw }, from, to }
    }

    /// Parametric arc; endpoints are taken from the map at 0 and 1.
    pub fn parametric(map: ParamFn<T>, derivative: ParamFn<T>) -> Self {
        let from = map(T::zero());
        let to = map(T::one());
        Self { kind: ArcKind::Parametric { map, derivative }, from, to }
    }

    pub fn from(&self) -> Complex<T> {
        self.from
    }

    pub fn to(&self) -> Complex<T> {
        self.to
    }

    pub fn kind(&self) -> &ArcKind<T> {
        &self.kind
    }

    pub(crate) fn circle_geom(&self, index: usize) -> Result<CircleGeom<T>, BoundaryError> {
        let ArcKind::Circular { center, ccw } = &self.kind else {
            unreachable!("circle_geom on non-circular arc");
        };
        let ra = (self.from - center).norm();
        let rb = (self.to - center).norm();
        let radius = (ra + rb) / lit::<T>(2.0);
        let mismatch = (ra - rb).abs();
        if mismatch > tol::scaled::<T>(tol::RADIUS_MISMATCH) * (radius + T::one()) {
            return Err(BoundaryError::BadCircularArc {
                index,
                mismatch: mismatch.to_f64().unwrap_or(f64::NAN),
            });
        }
        let theta0 = (self.from - center).arg();
        let theta1 = (self.to - center).arg();
        let two_pi = T::PI() + T::PI();
        let full = (self.from - self.to).norm() <= tol::scaled::<T>(tol::CHAIN_CLOSURE);
        let raw = if *ccw { theta1 - theta0 } else { theta0 - theta1 };
        let mut mag = raw - two_pi * (raw / two_pi).floor();
        if full || mag <= T::zero() {
            mag = two_pi;
        }
        let sweep = if *ccw { mag } else { -mag };
        Ok(CircleGeom { radius, theta0, sweep })
    }

    /// Point at internal parameter `t` in `[0, 1]`. Segments and circular
    /// arcs use an arclength-proportional parameter; parametric arcs use the
    /// caller's parameter as supplied.
    pub fn point(&self, t: T) -> Complex<T> {
        match &self.kind {
            ArcKind::Segment => self.from + (self.to - self.from) * t,
            ArcKind::Circular { center, .. } => {
                let g = self.circle_geom(0).expect("validated circular arc");
                let theta = g.theta0 + g.sweep * t;
                center + Complex::from_polar(g.radius, theta)
            }
            ArcKind::Parametric { map, .. } => map(t),
        }
    }

    /// Derivative `dz/dt` with respect to the internal parameter.
    pub fn derivative(&self, t: T) -> Complex<T> {
        match &self.kind {
            ArcKind::Segment => self.to - self.from,
            ArcKind::Circular { .. } => {
                let g = self.circle_geom(0).expect("validated circular arc");
                let theta = g.theta0 + g.sweep * t;
                Complex::new(T::zero(), g.sweep) * Complex::from_polar(g.radius, theta)
            }
            ArcKind::Parametric { derivative, .. } => derivative(t),
        }
    }

    /// Unit tangent in the traversal direction at parameter `t`.
    pub fn unit_tangent(&self, t: T) -> Complex<T> {
        let d = self.derivative(t);
        d / d.norm()
    }

    /// Arc length. Parametric arcs are integrated with a panel-doubling
    /// composite Gauss-Legendre rule until the value settles.
    pub fn length(&self) -> T {
        match &self.kind {
            ArcKind::Segment => (self.to - self.from).norm(),
            ArcKind::Circular { .. } => {
                let g = self.circle_geom(0).expect("validated circular arc");
                g.radius * g.sweep.abs()
            }
            ArcKind::Parametric { derivative, .. } => {
                let (x, w) = gauss::nodes_and_weights::<T>(32);
                let speed = |t: T| derivative(t).norm();
                let mut panels = 8usize;
                let mut prev = composite(&x, &w, panels, &speed);
                loop {
                    panels *= 2;
                    let cur = composite(&x, &w, panels, &speed);
                    let settle = tol::scaled::<T>(1e-13) * cur.abs();
                    if (cur - prev).abs() <= settle || panels >= 4096 {
                        return cur;
                    }
                    prev = cur;
                }
            }
        }
    }

    /// The same arc traversed in the opposite direction.
    pub fn reversed(&self) -> Self {
        match &self.kind {
            ArcKind::Segment => Self::segment(self.to, self.from),
            ArcKind::Circular { center, ccw } => {
                Self::circular(self.to, self.from, *center, !ccw)
            }
            ArcKind::Parametric { map, derivative } => {
                let (m, d) = (map.clone(), derivative.clone());
                let rmap: ParamFn<T> = Arc::new(move |t| m(T::one() - t));
                let rder: ParamFn<T> = Arc::new(move |t| -d(T::one() - t));
                Self { kind: ArcKind::Parametric { map: rmap, derivative: rder }, from: self.to, to: self.from }
            }
        }
    }

    /// Checks the descriptor's own invariants (a nonvanishing derivative at
    /// sample parameters, consistent circular geometry).
    pub(crate) fn validate(&self, index: usize) -> Result<(), BoundaryError> {
        if let ArcKind::Circular { .. } = self.kind {
            self.circle_geom(index)?;
        }
        let floor = tol::scaled::<T>(tol::DEGENERATE_ARC);
        for i in 0..=32 {
            let t = lit::<T>(i as f64 / 32.0);
            if self.derivative(t).norm() <= floor {
                return Err(BoundaryError::DegenerateArc { index });
            }
        }
        Ok(())
    }
}

fn composite<T: Real>(x: &[T], w: &[T], panels: usize, f: &dyn Fn(T) -> T) -> T {
    let mut acc = T::zero();
    for p in 0..panels {
        let a = lit::<T>(p as f64 / panels as f64);
        let b = lit::<T>((p + 1) as f64 / panels as f64);
        let half = (b - a) / lit::<T>(2.0);
        let mid = (a + b) / lit::<T>(2.0);
        for (&xi, &wi) in x.iter().zip(w) {
            acc = acc + wi * half * f(mid + half * xi);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    type C = Complex<f64>;

    #[test]
    fn segment_geometry() {
        let a = ArcDescriptor::segment(C::new(0.0, 0.0), C::new(3.0, 4.0));
        assert_abs_diff_eq!(a.length(), 5.0, epsilon = 1e-15);
        let mid = a.point(0.5);
        assert_abs_diff_eq!(mid.re, 1.5, epsilon = 1e-15);
        assert_abs_diff_eq!(mid.im, 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(a.unit_tangent(0.3).norm(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn full_circle_from_coinciding_endpoints() {
        let p = C::new(1.0, 0.0);
        let a = ArcDescriptor::circular(p, p, C::new(0.0, 0.0), true);
        assert_abs_diff_eq!(a.length(), std::f64::consts::TAU, epsilon = 1e-14);
        let q = a.point(0.25);
        assert_abs_diff_eq!(q.re, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(q.im, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn clockwise_quarter_arc() {
        let a = ArcDescriptor::circular(C::new(0.0, 1.0), C::new(1.0, 0.0), C::new(0.0, 0.0), false);
        assert_abs_diff_eq!(a.length(), std::f64::consts::FRAC_PI_2, epsilon = 1e-14);
        // Tangent at the start of a clockwise arc from i points along +x.
        let t = a.unit_tangent(0.0);
        assert_abs_diff_eq!(t.re, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn radius_mismatch_is_rejected() {
        let a = ArcDescriptor::circular(C::new(1.0, 0.0), C::new(0.0, 1.5), C::new(0.0, 0.0), true);
        assert!(matches!(a.validate(7), Err(BoundaryError::BadCircularArc { index: 7, .. })));
    }

    #[test]
    fn parametric_length_matches_closed_form() {
        // Half unit circle given as a raw parameterization.
        let map: ParamFn<f64> = Arc::new(|t| Complex::from_polar(1.0, std::f64::consts::PI * t));
        let der: ParamFn<f64> = Arc::new(|t| {
            Complex::new(0.0, std::f64::consts::PI) * Complex::from_polar(1.0, std::f64::consts::PI * t)
        });
        let a = ArcDescriptor::parametric(map, der);
        assert_abs_diff_eq!(a.length(), std::f64::consts::PI, epsilon = 1e-12);
    }

    #[test]
    fn reversal_swaps_endpoints_and_direction() {
        let a = ArcDescriptor::circular(C::new(1.0, 0.0), C::new(0.0, 1.0), C::new(0.0, 0.0), true);
        let r = a.reversed();
        assert_eq!(r.from(), a.to());
        assert_eq!(r.to(), a.from());
        let fwd = a.unit_tangent(0.5);
        let bwd = r.unit_tangent(0.5);
        assert_abs_diff_eq!((fwd + bwd).norm(), 0.0, epsilon = 1e-12);
    }
}
