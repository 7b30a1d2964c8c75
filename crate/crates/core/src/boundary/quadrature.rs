//! Discrete arclength inner product: composite Gauss-Legendre rules on a
//! boundary, one rule panel at a time in each arc's internal parameter.

use num_complex::Complex;
use num_traits::Zero;

use super::{ArcKind, BoundaryCurve, BoundaryError};
use crate::gauss;
use crate::scalar::{lit, Real};
use crate::tol;

/// Discrete realization of the normalized arclength inner product
/// `(f, g) = (1/l) sum_i w_i f(t_i) conj(g(t_i))`.
///
/// A rule with `degree_capacity` n integrates products of two polynomials of
/// degree at most n exactly (up to roundoff) on segment and circular arcs;
/// parametric arcs converge spectrally with `panels_per_arc`.
#[derive(Clone)]
pub struct QuadratureRule<T: Real> {
    nodes: Vec<Complex<T>>,
    weights: Vec<T>,
    tangents: Vec<Complex<T>>,
    degree_capacity: usize,
    length: T,
}

impl<T: Real> QuadratureRule<T> {
    /// Assembles a rule from raw parts. Weights must be strictly positive.
    pub fn from_parts(
        nodes: Vec<Complex<T>>,
        weights: Vec<T>,
        tangents: Vec<Complex<T>>,
        degree_capacity: usize,
    ) -> Result<Self, BoundaryError> {
        if nodes.is_empty() || nodes.len() != weights.len() || nodes.len() != tangents.len() {
            return Err(BoundaryError::InvalidArgument("rule parts empty or of mismatched lengths"));
        }
        if weights.iter().any(|w| !(*w > T::zero())) {
            return Err(BoundaryError::InvalidArgument("rule weights must be strictly positive"));
        }
        let length = weights.iter().fold(T::zero(), |a, &b| a + b);
        Ok(Self { nodes, weights, tangents, degree_capacity, length })
    }

    pub fn nodes(&self) -> &[Complex<T>] {
        &self.nodes
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// Unit tangents `dt/|dt|` at the nodes.
    pub fn tangents(&self) -> &[Complex<T>] {
        &self.tangents
    }

    pub fn degree_capacity(&self) -> usize {
        self.degree_capacity
    }

    /// Normalization constant of the inner product (the weight sum).
    pub fn length(&self) -> T {
        self.length
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Discrete inner product of two node-value vectors.
    pub fn inner(&self, f: &[Complex<T>], g: &[Complex<T>]) -> Complex<T> {
        assert_eq!(f.len(), self.nodes.len(), "f sampled at the rule nodes");
        assert_eq!(g.len(), self.nodes.len(), "g sampled at the rule nodes");
        let mut acc = Complex::zero();
        for ((&w, &fv), &gv) in self.weights.iter().zip(f).zip(g) {
            acc = acc + (fv * gv.conj()).scale(w);
        }
        acc / self.length
    }

    /// Discrete norm of a node-value vector.
    pub fn norm(&self, f: &[Complex<T>]) -> T {
        self.inner(f, f).re.max(T::zero()).sqrt()
    }

    /// Arclength-weighted centroid of the nodes.
    pub fn centroid(&self) -> Complex<T> {
        let mut acc = Complex::zero();
        for (&w, &z) in self.weights.iter().zip(&self.nodes) {
            acc = acc + z.scale(w);
        }
        acc / self.length
    }
}

/// Builds a composite Gauss-Legendre rule with the default node cap.
pub fn quadrature<T: Real>(
    boundary: &BoundaryCurve<T>,
    degree_capacity: usize,
    panels_per_arc: usize,
) -> Result<QuadratureRule<T>, BoundaryError> {
    quadrature_with_cap(boundary, degree_capacity, panels_per_arc, tol::DEFAULT_MAX_NODES)
}

/// Builds a composite Gauss-Legendre rule, refusing to exceed `max_nodes`.
pub fn quadrature_with_cap<T: Real>(
    boundary: &BoundaryCurve<T>,
    degree_capacity: usize,
    panels_per_arc: usize,
    max_nodes: usize,
) -> Result<QuadratureRule<T>, BoundaryError> {
    if panels_per_arc == 0 {
        return Err(BoundaryError::InvalidArgument("panels_per_arc must be at least 1"));
    }

    let mut per_arc_nodes = Vec::with_capacity(boundary.arcs().len());
    let mut requested = 0usize;
    for arc in boundary.arcs() {
        let m = match arc.kind() {
            ArcKind::Segment | ArcKind::Parametric { .. } => degree_capacity + 2,
            ArcKind::Circular { .. } => {
                let geom = arc.circle_geom(0).expect("validated circular arc");
                let sweep = geom.sweep.abs().to_f64().unwrap_or(0.0);
                oscillation_nodes(degree_capacity, sweep, panels_per_arc)
            }
        };
        requested += m * panels_per_arc;
        per_arc_nodes.push(m);
    }
    if requested > max_nodes {
        return Err(BoundaryError::CapacityTooLarge { requested, cap: max_nodes });
    }

    let mut nodes = Vec::with_capacity(requested);
    let mut weights = Vec::with_capacity(requested);
    let mut tangents = Vec::with_capacity(requested);
    for (arc_idx, arc) in boundary.arcs().iter().enumerate() {
        let m = per_arc_nodes[arc_idx];
        let (gx, gw) = gauss::nodes_and_weights::<T>(m);
        let arc_start = weights.len();
        // Panel bounds in the internal parameter; the scale from parameter
        // to arclength is constant for segments and circular arcs.
        for p in 0..panels_per_arc {
            let a = lit::<T>(p as f64 / panels_per_arc as f64);
            let b = lit::<T>((p + 1) as f64 / panels_per_arc as f64);
            let half = (b - a) / lit::<T>(2.0);
            let mid = (a + b) / lit::<T>(2.0);
            for (&xi, &wi) in gx.iter().zip(&gw) {
                let t = mid + half * xi;
                let d = arc.derivative(t);
                let speed = d.norm();
                nodes.push(arc.point(t));
                weights.push(wi * half * speed);
                tangents.push(d / speed);
            }
        }
        if let ArcKind::Parametric { .. } = arc.kind() {
            // Rescale so the arc's weights sum to its converged length.
            let raw: T = weights[arc_start..].iter().fold(T::zero(), |a, &b| a + b);
            let scale = boundary.arc_lengths()[arc_idx] / raw;
            for w in &mut weights[arc_start..] {
                *w = *w * scale;
            }
        }
    }

    let rule = QuadratureRule::from_parts(nodes, weights, tangents, degree_capacity)?;
    let rel = ((rule.length() - boundary.length()) / boundary.length()).abs();
    if rel > tol::scaled::<T>(tol::WEIGHT_SUM_REL) {
        return Err(BoundaryError::InvalidArgument("quadrature weights do not sum to the boundary length"));
    }
    Ok(rule)
}

/// Node count resolving `e^(i k theta)` panel oscillations up to the
/// frequencies met in degree-`cap` polynomial products on a circular arc.
fn oscillation_nodes(cap: usize, sweep_abs: f64, panels: usize) -> usize {
    let nu = cap as f64 * sweep_abs / (2.0 * panels as f64);
    (cap + 2).max((0.7 * nu).ceil() as usize + 10)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use approx::assert_abs_diff_eq;

    type C = Complex<f64>;

    fn monomial_values(rule: &QuadratureRule<f64>, k: usize) -> Vec<C> {
        rule.nodes().iter().map(|z| z.powu(k as u32)).collect()
    }

    #[test]
    fn weight_sum_matches_length_and_weights_are_positive() {
        for (b, l) in [
            (builtin::circle::<f64>(), std::f64::consts::TAU),
            (builtin::square::<f64>(), 8.0),
            (builtin::lshape::<f64>(), 8.0),
        ] {
            let rule = quadrature(&b, 12, 3).expect("rule");
            assert!(rule.weights().iter().all(|&w| w > 0.0));
            let sum: f64 = rule.weights().iter().sum();
            assert_abs_diff_eq!(sum, l, epsilon = 1e-12 * l);
            for t in rule.tangents() {
                assert_abs_diff_eq!(t.norm(), 1.0, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn unit_inner_product_is_exactly_one() {
        let rule = quadrature(&builtin::lshape::<f64>(), 8, 2).expect("rule");
        let ones = vec![C::new(1.0, 0.0); rule.len()];
        let ip = rule.inner(&ones, &ones);
        assert_eq!(ip.re, 1.0);
        assert_eq!(ip.im, 0.0);
    }

    #[test]
    fn circle_monomials_are_orthonormal() {
        let cap = 8;
        let rule = quadrature(&builtin::circle::<f64>(), cap, 1).expect("rule");
        for j in 0..=cap {
            for k in 0..=cap {
                let ip = rule.inner(&monomial_values(&rule, j), &monomial_values(&rule, k));
                let expect = if j == k { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(ip.re, expect, epsilon = 1e-12);
                assert_abs_diff_eq!(ip.im, 0.0, epsilon = 1e-12);
            }
        }
        // <z^2, z^2> = 1 since |z| = 1 on the circle.
        let z2 = monomial_values(&rule, 2);
        assert_abs_diff_eq!(rule.inner(&z2, &z2).re, 1.0, epsilon = 1e-13);
    }

    #[test]
    fn square_first_moments_match_closed_forms() {
        let rule = quadrature(&builtin::square::<f64>(), 4, 2).expect("rule");
        let z = monomial_values(&rule, 1);
        let one = monomial_values(&rule, 0);
        // (1/8) integral of |z|^2 over the four sides: 4 * int_-1^1 (1 + y^2) dy / 8.
        assert_abs_diff_eq!(rule.inner(&z, &z).re, 4.0 / 3.0, epsilon = 1e-13);
        let zz1 = rule.inner(&z, &one);
        assert_abs_diff_eq!(zz1.norm(), 0.0, epsilon = 1e-13);
    }

    #[test]
    fn doubling_panels_leaves_moments_unchanged() {
        for b in [builtin::square::<f64>(), builtin::circle::<f64>(), builtin::lshape::<f64>()] {
            let cap = 8;
            let r1 = quadrature(&b, cap, 2).expect("rule");
            let r2 = quadrature(&b, cap, 4).expect("rule");
            for j in 0..=cap {
                for k in 0..=cap {
                    let a = r1.inner(&monomial_values(&r1, j), &monomial_values(&r1, k));
                    let c = r2.inner(&monomial_values(&r2, j), &monomial_values(&r2, k));
                    assert!((a - c).norm() < 1e-10, "moment ({j},{k}) moved by {}", (a - c).norm());
                }
            }
        }
    }

    #[test]
    fn node_cap_is_enforced() {
        let b = builtin::square::<f64>();
        match quadrature_with_cap(&b, 30, 4, 100) {
            Err(BoundaryError::CapacityTooLarge { requested, cap: 100 }) => {
                assert!(requested > 100)
            }
            other => panic!("expected CapacityTooLarge, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn centroid_of_square_is_origin() {
        let rule = quadrature(&builtin::square::<f64>(), 6, 2).expect("rule");
        assert_abs_diff_eq!(rule.centroid().norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn from_parts_rejects_bad_input() {
        assert!(QuadratureRule::<f64>::from_parts(vec![], vec![], vec![], 0).is_err());
        let z = C::new(0.0, 0.0);
        assert!(QuadratureRule::from_parts(vec![z], vec![-1.0], vec![z], 0).is_err());
    }
}
