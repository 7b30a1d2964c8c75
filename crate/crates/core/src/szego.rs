//! Kernel partial sums at a base point, the induced polynomial map
//! approximants of odd degree, and their tail-norm error bound.
//!
//! For a base point `zeta` inside the domain the degree-`2n+1` approximant is
//!
//! ```text
//! J(z) = (2 pi / l) * int_zeta^z S_n(t)^2 dt / E_n,
//! S_n(t) = sum_{k<=n} conj(p_k(zeta)) p_k(t),   E_n = sum_{k<=n} |p_k(zeta)|^2,
//! ```
//!
//! normalized so that `J(zeta) = 0` and `J'(zeta) = (2 pi / l) E_n > 0`.
//! `J` is never expanded into monomial coefficients; the integrand is a
//! polynomial of degree `2n`, so an `n + 2`-point Gauss-Legendre rule on the
//! straight segment evaluates the integral exactly, and the value does not
//! depend on the path.

use std::fmt;
use std::io::{self, Write};

use num_complex::Complex;
use num_traits::Zero;

use crate::boundary::{BoundaryCurve, Containment};
use crate::gauss;
use crate::orthopoly::{OrthoError, OrthonormalBasis};
use crate::scalar::{lit, Real};

/// Errors from expansion construction and evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum SzegoError {
    /// Requested degree exceeds the basis degree.
    DegreeExceeded { requested: usize, max: usize },
    /// Tail range is empty (`n >= n_ref`).
    BadRange { n: usize, n_ref: usize },
    /// The base point is not strictly inside the domain.
    OutsideDomain { re: f64, im: f64 },
    /// Propagated basis error.
    Ortho(OrthoError),
}

impl fmt::Display for SzegoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DegreeExceeded { requested, max } => {
                write!(f, "szego: degree {requested} exceeds basis degree {max}")
            }
            Self::BadRange { n, n_ref } => {
                write!(f, "tail_norm: empty range (n = {n}, reference = {n_ref})")
            }
            Self::OutsideDomain { re, im } => {
                write!(f, "szego: base point ({re}, {im}) is not inside the domain")
            }
            Self::Ortho(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SzegoError {}

impl From<OrthoError> for SzegoError {
    fn from(e: OrthoError) -> Self {
        Self::Ortho(e)
    }
}

/// A basis together with a fixed interior base point: cached basis values at
/// the base point and the running energy sums `E_n`.
///
/// Immutable after construction; evaluation methods are pure.
#[derive(Clone)]
pub struct SzegoExpansion<T: Real> {
    basis: OrthonormalBasis<T>,
    zeta: Complex<T>,
    zeta_values: Vec<Complex<T>>,
    partial_energy: Vec<T>,
}

impl<T: Real> SzegoExpansion<T> {
    /// Builds the expansion after checking that `zeta` lies inside `boundary`.
    pub fn new(
        basis: OrthonormalBasis<T>,
        boundary: &BoundaryCurve<T>,
        zeta: Complex<T>,
    ) -> Result<Self, SzegoError> {
        if boundary.contains(zeta) != Containment::Inside {
            return Err(SzegoError::OutsideDomain {
                re: zeta.re.to_f64().unwrap_or(f64::NAN),
                im: zeta.im.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self::new_unchecked(basis, zeta))
    }

    /// Builds the expansion at the arclength centroid of the rule nodes.
    pub fn with_default_base(
        basis: OrthonormalBasis<T>,
        boundary: &BoundaryCurve<T>,
    ) -> Result<Self, SzegoError> {
        let zeta = basis.rule().centroid();
        Self::new(basis, boundary, zeta)
    }

    /// Builds the expansion without the containment check; the caller
    /// guarantees that `zeta` is interior.
    pub fn new_unchecked(basis: OrthonormalBasis<T>, zeta: Complex<T>) -> Self {
        let zeta_values = basis.eval(zeta, basis.max_degree()).expect("degree within basis");
        let mut partial_energy = Vec::with_capacity(zeta_values.len());
        let mut acc = T::zero();
        for v in &zeta_values {
            acc = acc + v.norm_sqr();
            partial_energy.push(acc);
        }
        Self { basis, zeta, zeta_values, partial_energy }
    }

    pub fn basis(&self) -> &OrthonormalBasis<T> {
        &self.basis
    }

    pub fn zeta(&self) -> Complex<T> {
        self.zeta
    }

    /// Cached values `p_k(zeta)`.
    pub fn zeta_values(&self) -> &[Complex<T>] {
        &self.zeta_values
    }

    pub fn max_degree(&self) -> usize {
        self.basis.max_degree()
    }

    /// Normalization constant of the inner product.
    pub fn length(&self) -> T {
        self.basis.rule().length()
    }

    fn check_degree(&self, n: usize) -> Result<(), SzegoError> {
        if n > self.max_degree() {
            Err(SzegoError::DegreeExceeded { requested: n, max: self.max_degree() })
        } else {
            Ok(())
        }
    }

    /// Running energy `E_n = sum_{k<=n} |p_k(zeta)|^2`; nondecreasing, `E_0 = 1`.
    pub fn energy(&self, n: usize) -> Result<T, SzegoError> {
        self.check_degree(n)?;
        Ok(self.partial_energy[n])
    }

    /// All energies `E_0, ..., E_max`.
    pub fn energies(&self) -> &[T] {
        &self.partial_energy
    }

    /// Kernel partial sum `S_n(z, zeta) = sum_{k<=n} conj(p_k(zeta)) p_k(z)`.
    pub fn kernel_partial_sum(&self, z: Complex<T>, n: usize) -> Result<Complex<T>, SzegoError> {
        self.check_degree(n)?;
        let vals = self.basis.eval(z, n)?;
        Ok(self.partial_sum_from_values(&vals, n))
    }

    fn partial_sum_from_values(&self, vals: &[Complex<T>], n: usize) -> Complex<T> {
        let mut acc = Complex::zero();
        for (v, zv) in vals.iter().take(n + 1).zip(&self.zeta_values) {
            acc = acc + zv.conj() * v;
        }
        acc
    }

    /// `S_n(t_i, zeta)` at every rule node.
    pub fn partial_sum_node_values(&self, n: usize) -> Result<Vec<Complex<T>>, SzegoError> {
        self.check_degree(n)?;
        let rows = self.basis.node_values();
        let m = self.basis.rule().len();
        let mut acc = vec![Complex::zero(); m];
        for (row, zv) in rows.iter().take(n + 1).zip(&self.zeta_values) {
            let c = zv.conj();
            for (a, &p) in acc.iter_mut().zip(row) {
                *a = *a + c * p;
            }
        }
        Ok(acc)
    }

    /// Derivative of the mapped variable at the base point,
    /// `(2 pi / l) E_n`; nondecreasing in `n`.
    pub fn phi_prime_at_base(&self, n: usize) -> Result<T, SzegoError> {
        Ok(self.two_pi_over_l() * self.energy(n)?)
    }

    /// Distance between the degree-`n` and degree-`n_ref` kernel partial
    /// sums in the discrete norm: `sqrt(sum_{k=n+1}^{n_ref} |p_k(zeta)|^2)`.
    pub fn tail_norm(&self, n: usize, n_ref: usize) -> Result<T, SzegoError> {
        if n >= n_ref {
            return Err(SzegoError::BadRange { n, n_ref });
        }
        self.check_degree(n_ref)?;
        Ok((self.partial_energy[n_ref] - self.partial_energy[n]).max(T::zero()).sqrt())
    }

    /// `8 pi` times the truncated tail norm: an upper bound for the sup-norm
    /// map error only in the limit of an exact (infinite) reference, so
    /// reports label it as reference-truncated.
    pub fn sup_error_bound(&self, n: usize, n_ref: usize) -> Result<T, SzegoError> {
        let eight_pi = lit::<T>(8.0) * T::PI();
        Ok(eight_pi * self.tail_norm(n, n_ref)?)
    }

    /// Builds the degree-`2n+1` map approximant.
    pub fn map_approximant(&self, n: usize) -> Result<MapApproximant<'_, T>, SzegoError> {
        self.check_degree(n)?;
        let (gl_nodes, gl_weights) = gauss::nodes_and_weights::<T>(n + 2);
        let normalizer = self.energy(n)? / self.two_pi_over_l();
        Ok(MapApproximant { expansion: self, n, normalizer, gl_nodes, gl_weights })
    }

    fn two_pi_over_l(&self) -> T {
        (T::PI() + T::PI()) / self.length()
    }

    /// Writes `(k, Re p_k(zeta), Im p_k(zeta), E_k)` rows as CSV.
    pub fn write_kernel_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "k,p_re,p_im,energy")?;
        for (k, (v, e)) in self.zeta_values.iter().zip(&self.partial_energy).enumerate() {
            writeln!(out, "{},{:.16e},{:.16e},{:.16e}", k, v.re, v.im, e)?;
        }
        Ok(())
    }
}

/// The degree-`2n+1` polynomial approximant of the canonical disk map,
/// evaluated through exact Gauss-Legendre integration of its derivative.
pub struct MapApproximant<'a, T: Real> {
    expansion: &'a SzegoExpansion<T>,
    n: usize,
    /// `(l / 2 pi) E_n`, the denominator of the defining integral.
    normalizer: T,
    gl_nodes: Vec<T>,
    gl_weights: Vec<T>,
}

impl<'a, T: Real> MapApproximant<'a, T> {
    pub fn expansion(&self) -> &'a SzegoExpansion<T> {
        self.expansion
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Polynomial degree, `2n + 1`.
    pub fn degree(&self) -> usize {
        2 * self.n + 1
    }

    pub fn base_point(&self) -> Complex<T> {
        self.expansion.zeta()
    }

    /// `(l / 2 pi) E_n`.
    pub fn normalizer(&self) -> T {
        self.normalizer
    }

    /// Map value at `z`; exactly zero at the base point.
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        if z == self.expansion.zeta() {
            return Complex::zero();
        }
        self.segment_integral(self.expansion.zeta(), z)
    }

    /// Derivative `Q_n(z)^2 = (2 pi / l) S_n(z)^2 / E_n`; at the base point
    /// this equals `phi_prime_at_base(n)` exactly.
    pub fn eval_derivative(&self, z: Complex<T>) -> Complex<T> {
        if z == self.expansion.zeta() {
            let e = self.expansion.partial_energy[self.n];
            return Complex::new(e / self.normalizer, T::zero());
        }
        let s = self
            .expansion
            .kernel_partial_sum(z, self.n)
            .expect("degree checked at construction");
        s * s / self.normalizer
    }

    /// Integral of the derivative along the polyline through `path`; the
    /// integrand is entire, so any path from the base point gives `eval`.
    pub fn integrate_along(&self, path: &[Complex<T>]) -> Complex<T> {
        let mut acc = Complex::zero();
        for pair in path.windows(2) {
            acc = acc + self.segment_integral(pair[0], pair[1]);
        }
        acc
    }

    fn segment_integral(&self, a: Complex<T>, b: Complex<T>) -> Complex<T> {
        let two = lit::<T>(2.0);
        let half = (b - a) / two;
        let mid = (a + b) / two;
        let mut acc = Complex::zero();
        for (&x, &w) in self.gl_nodes.iter().zip(&self.gl_weights) {
            let t = mid + half * x;
            let vals = self
                .expansion
                .basis()
                .eval(t, self.n)
                .expect("degree checked at construction");
            let s = self.expansion.partial_sum_from_values(&vals, self.n);
            acc = acc + (s * s).scale(w);
        }
        acc * half / self.normalizer
    }
}
