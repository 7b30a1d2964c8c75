//! Gauss-Legendre nodes and weights on `[-1, 1]`.
//!
//! Roots of the Legendre polynomial are found by Newton iteration from the
//! Chebyshev-like initial guess; an `m`-point rule integrates polynomials of
//! degree `2m - 1` exactly.

use crate::scalar::{lit, Real};

/// Legendre polynomial `P_m` and its derivative at `x`.
fn legendre_with_derivative<T: Real>(m: usize, x: T) -> (T, T) {
    let mut p_prev = T::one();
    let mut p = x;
    if m == 0 {
        return (T::one(), T::zero());
    }
    for k in 2..=m {
        let kf = lit::<T>(k as f64);
        let a = (lit::<T>(2.0) * kf - T::one()) / kf;
        let b = (kf - T::one()) / kf;
        let next = a * x * p - b * p_prev;
        p_prev = p;
        p = next;
    }
    let mf = lit::<T>(m as f64);
    let d = mf * (x * p - p_prev) / (x * x - T::one());
    (p, d)
}

/// Nodes (ascending) and weights of the `m`-point Gauss-Legendre rule.
pub fn nodes_and_weights<T: Real>(m: usize) -> (Vec<T>, Vec<T>) {
    assert!(m >= 1, "rule needs at least one node");
    let mut xs = vec![T::zero(); m];
    let mut ws = vec![T::zero(); m];
    let mf = lit::<T>(m as f64);
    for i in 0..m.div_ceil(2) {
        let theta = T::PI() * (lit::<T>(i as f64) + lit::<T>(0.75)) / (mf + lit::<T>(0.5));
        let mut x = theta.cos();
        let mut d = T::one();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(m, x);
            d = dp;
            let dx = p / dp;
            x = x - dx;
            if dx.abs() <= T::epsilon() * (x.abs() + T::one()) {
                let (p2, dp2) = legendre_with_derivative(m, x);
                x = x - p2 / dp2;
                d = dp2;
                break;
            }
        }
        let w = lit::<T>(2.0) / ((T::one() - x * x) * d * d);
        xs[i] = -x;
        xs[m - 1 - i] = x;
        ws[i] = w;
        ws[m - 1 - i] = w;
    }
    if m % 2 == 1 {
        xs[m / 2] = T::zero();
    }
    (xs, ws)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn three_point_rule_matches_known_values() {
        let (x, w) = nodes_and_weights::<f64>(3);
        assert_abs_diff_eq!(x[0], -0.7745966692414834, epsilon = 1e-15);
        assert_abs_diff_eq!(x[1], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(x[2], 0.7745966692414834, epsilon = 1e-15);
        assert_abs_diff_eq!(w[0], 5.0 / 9.0, epsilon = 1e-15);
        assert_abs_diff_eq!(w[1], 8.0 / 9.0, epsilon = 1e-15);
    }

    #[test]
    fn weights_sum_to_two() {
        for m in [1, 2, 7, 33, 80, 156] {
            let (_, w) = nodes_and_weights::<f64>(m);
            let s: f64 = w.iter().sum();
            assert_abs_diff_eq!(s, 2.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn integrates_top_degree_monomial_exactly() {
        // m points are exact through degree 2m - 1; check x^(2m-2).
        for m in [2, 5, 12, 40] {
            let (x, w) = nodes_and_weights::<f64>(m);
            let p = 2 * m - 2;
            let got: f64 = x.iter().zip(&w).map(|(&xi, &wi)| wi * xi.powi(p as i32)).sum();
            let exact = 2.0 / (p as f64 + 1.0);
            assert_abs_diff_eq!(got, exact, epsilon = 1e-14);
        }
    }

    #[test]
    fn resolves_oscillatory_moments_with_margin() {
        // 28 points handle cos(25 t) on a half period to near machine precision.
        let (x, w) = nodes_and_weights::<f64>(28);
        let (a, b) = (0.0f64, std::f64::consts::PI);
        let half = (b - a) / 2.0;
        let mid = (a + b) / 2.0;
        let freq = 25.0;
        let got: f64 = x
            .iter()
            .zip(&w)
            .map(|(&xi, &wi)| wi * half * (freq * (mid + half * xi)).cos())
            .sum();
        let exact = ((freq * b).sin() - (freq * a).sin()) / freq;
        assert_abs_diff_eq!(got, exact, epsilon = 1e-13);
    }

    #[test]
    fn works_in_f32() {
        let (x, w) = nodes_and_weights::<f32>(5);
        let s: f32 = w.iter().sum();
        assert!((s - 2.0).abs() < 1e-5);
        assert!(x.windows(2).all(|p| p[0] < p[1]));
    }
}
