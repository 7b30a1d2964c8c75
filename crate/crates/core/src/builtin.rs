//! Fixed test geometries shared by the CLI, the tests, and downstream tools.

use std::sync::Arc;

use num_complex::Complex;

use crate::boundary::{build_boundary, ArcDescriptor, BoundaryCurve, ParamFn};
use crate::scalar::{lit, Real};

/// Unit circle as a single counterclockwise circular arc.
pub fn circle<T: Real>() -> BoundaryCurve<T> {
    let p = Complex::new(T::one(), T::zero());
    let arcs = vec![ArcDescriptor::circular(p, p, Complex::new(T::zero(), T::zero()), true)];
    build_boundary(arcs).expect("unit circle is a valid boundary")
}

/// Arcs of the square with vertices `1+i, -1+i, -1-i, 1-i`, counterclockwise.
pub fn square_arcs<T: Real>() -> Vec<ArcDescriptor<T>> {
    let one = T::one();
    let vertices = [
        Complex::new(one, -one),
        Complex::new(one, one),
        Complex::new(-one, one),
        Complex::new(-one, -one),
    ];
    segments_of(&vertices)
}

/// Square with vertices at `(+-1, +-1)`.
pub fn square<T: Real>() -> BoundaryCurve<T> {
    build_boundary(square_arcs()).expect("square is a valid boundary")
}

/// L-shaped hexagon with vertices `(0,0), (2,0), (2,1), (1,1), (1,2), (0,2)`;
/// the corner at `(1,1)` is reentrant.
pub fn lshape<T: Real>() -> BoundaryCurve<T> {
    let v = [(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)];
    let vertices: Vec<Complex<T>> =
        v.iter().map(|&(x, y)| Complex::new(lit::<T>(x), lit::<T>(y))).collect();
    build_boundary(segments_of(&vertices)).expect("lshape is a valid boundary")
}

/// Image of the unit circle under a polynomial `psi(w) = sum c_j w^j`,
/// as one parametric arc. The caller is responsible for `psi` being
/// univalent on the closed disk.
pub fn poly_image_domain<T: Real>(coeffs: &[Complex<T>]) -> BoundaryCurve<T> {
    let c_map = coeffs.to_vec();
    let c_der = coeffs.to_vec();
    let two_pi = T::PI() + T::PI();
    let map: ParamFn<T> = Arc::new(move |t: T| {
        let w = Complex::from_polar(T::one(), two_pi * t);
        horner(&c_map, w)
    });
    let derivative: ParamFn<T> = Arc::new(move |t: T| {
        let w = Complex::from_polar(T::one(), two_pi * t);
        let dpsi = horner_derivative(&c_der, w);
        dpsi * Complex::new(T::zero(), two_pi) * w
    });
    build_boundary(vec![ArcDescriptor::parametric(map, derivative)])
        .expect("univalent polynomial image is a valid boundary")
}

fn segments_of<T: Real>(vertices: &[Complex<T>]) -> Vec<ArcDescriptor<T>> {
    let n = vertices.len();
    (0..n)
        .map(|i| ArcDescriptor::segment(vertices[i], vertices[(i + 1) % n]))
        .collect()
}

pub(crate) fn horner<T: Real>(coeffs: &[Complex<T>], w: Complex<T>) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for &c in coeffs.iter().rev() {
        acc = acc * w + c;
    }
    acc
}

pub(crate) fn horner_derivative<T: Real>(coeffs: &[Complex<T>], w: Complex<T>) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for (j, &c) in coeffs.iter().enumerate().skip(1).rev() {
        acc = acc * w + c.scale(lit::<T>(j as f64));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn lshape_perimeter_is_eight() {
        assert_abs_diff_eq!(lshape::<f64>().length(), 8.0, epsilon = 1e-13);
    }

    #[test]
    fn poly_image_domain_has_expected_length() {
        // psi(w) = w gives the unit circle back.
        let b = poly_image_domain(&[Complex::new(0.0, 0.0), Complex::new(1.0, 0.0)]);
        assert_abs_diff_eq!(b.length(), std::f64::consts::TAU, epsilon = 1e-11);
        assert!(b.corners().is_empty());
    }

    #[test]
    fn horner_evaluates_polynomial_and_derivative() {
        // psi(w) = 1 + 2w + 3w^2
        let c = [
            Complex::new(1.0, 0.0),
            Complex::new(2.0, 0.0),
            Complex::new(3.0, 0.0),
        ];
        let w = Complex::new(0.5, -0.25);
        let p = horner(&c, w);
        let d = horner_derivative(&c, w);
        let expect_p = c[0] + c[1] * w + c[2] * w * w;
        let expect_d = c[1] + c[2] * w * 2.0;
        assert_abs_diff_eq!((p - expect_p).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!((d - expect_d).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn builtins_compile_at_f32() {
        let b = circle::<f32>();
        assert!((b.length() - std::f32::consts::TAU).abs() < 1e-4);
        assert!(square::<f32>().corners().len() == 4);
    }
}
