//! Orthonormal polynomials on a boundary with respect to the discrete
//! arclength inner product.
//!
//! Orthogonalization runs on node-value vectors (the Arnoldi process applied
//! to multiplication by the centered variable), never on monomial
//! coefficients: the monomial Gram matrix is exponentially ill-conditioned,
//! while node-space orthogonalization with a second re-orthogonalization
//! pass keeps the Gram residual near roundoff. The recurrence is built in
//! the variable `(z - c) / r`, with `c` the arclength centroid of the nodes
//! and `r` their radius of gyration, so conditioning does not depend on
//! where or how large the domain is.
//!
//! With `h = H[k+1][k] > 0` the stored columns satisfy
//! `((z - c)/r) p_k(z) = sum_j H[j][k] p_j(z)`, and the positive subdiagonal
//! makes every leading coefficient real and positive.

use std::fmt;
use std::io::{self, Write};

use num_complex::Complex;
use num_traits::Zero;

use crate::boundary::QuadratureRule;
use crate::scalar::Real;
use crate::tol;

/// Errors from basis construction and evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum OrthoError {
    /// Requested degree exceeds the rule's integration capacity.
    CapacityExceeded { requested: usize, capacity: usize },
    /// The rule has fewer than `2 (n + 1)` nodes.
    TooFewNodes { needed: usize, have: usize },
    /// Orthogonalization norm fell below the breakdown threshold.
    Breakdown { degree: usize, norm: f64 },
    /// Evaluation degree exceeds the basis degree.
    DegreeExceeded { requested: usize, max: usize },
}

impl fmt::Display for OrthoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::CapacityExceeded { requested, capacity } => write!(
                f,
                "orthonormalize: degree {requested} exceeds rule capacity {capacity}"
            ),
            Self::TooFewNodes { needed, have } => {
                write!(f, "orthonormalize: need at least {needed} nodes, rule has {have}")
            }
            Self::Breakdown { degree, norm } => write!(
                f,
                "orthonormalize: breakdown at degree {degree} (norm {norm:.3e}); boundary nodes nearly degenerate"
            ),
            Self::DegreeExceeded { requested, max } => {
                write!(f, "eval_basis: degree {requested} exceeds basis degree {max}")
            }
        }
    }
}

impl std::error::Error for OrthoError {}

/// Orthonormal polynomials `p_0, ..., p_n` for a quadrature rule, stored as
/// the upper-Hessenberg recurrence of the centered multiplication operator
/// together with their values at the rule nodes.
#[derive(Clone)]
pub struct OrthonormalBasis<T: Real> {
    rule: QuadratureRule<T>,
    max_degree: usize,
    center: Complex<T>,
    scale: T,
    /// Column `k` holds `H[0..=k+1][k]`.
    hessenberg: Vec<Vec<Complex<T>>>,
    /// Row `k` holds `p_k` at the rule nodes.
    node_values: Vec<Vec<Complex<T>>>,
}

/// Runs the orthonormalization up to degree `n`.
///
/// Deterministic for fixed inputs; two orthogonalization passes per step.
pub fn orthonormalize<T: Real>(
    rule: QuadratureRule<T>,
    n: usize,
) -> Result<OrthonormalBasis<T>, OrthoError> {
    if n > rule.degree_capacity() {
        return Err(OrthoError::CapacityExceeded { requested: n, capacity: rule.degree_capacity() });
    }
    let needed = 2 * (n + 1);
    if rule.len() < needed {
        return Err(OrthoError::TooFewNodes { needed, have: rule.len() });
    }

    let center = rule.centroid();
    let spread: Vec<Complex<T>> = rule.nodes().iter().map(|&z| z - center).collect();
    let scale = rule.norm(&spread);
    let breakdown = tol::scaled::<T>(tol::BREAKDOWN);
    if scale <= breakdown {
        return Err(OrthoError::Breakdown { degree: 0, norm: scale.to_f64().unwrap_or(0.0) });
    }
    let shifted: Vec<Complex<T>> = spread.iter().map(|&z| z / scale).collect();

    let m = rule.len();
    let mut node_values: Vec<Vec<Complex<T>>> = Vec::with_capacity(n + 1);
    node_values.push(vec![Complex::new(T::one(), T::zero()); m]);
    let mut hessenberg: Vec<Vec<Complex<T>>> = Vec::with_capacity(n);

    for k in 0..n {
        let mut work: Vec<Complex<T>> =
            node_values[k].iter().zip(&shifted).map(|(&p, &u)| u * p).collect();
        let mut column = vec![Complex::zero(); k + 2];
        for _pass in 0..2 {
            for (j, prev) in node_values.iter().enumerate() {
                let h = rule.inner(&work, prev);
                column[j] = column[j] + h;
                for (w, &p) in work.iter_mut().zip(prev) {
                    *w = *w - h * p;
                }
            }
        }
        let norm = rule.norm(&work);
        if norm <= breakdown {
            return Err(OrthoError::Breakdown {
                degree: k + 1,
                norm: norm.to_f64().unwrap_or(0.0),
            });
        }
        column[k + 1] = Complex::new(norm, T::zero());
        for w in &mut work {
            *w = w.unscale(norm);
        }
        hessenberg.push(column);
        node_values.push(work);
    }

    Ok(OrthonormalBasis { rule, max_degree: n, center, scale, hessenberg, node_values })
}

impl<T: Real> OrthonormalBasis<T> {
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn rule(&self) -> &QuadratureRule<T> {
        &self.rule
    }

    /// Centering point of the recurrence variable.
    pub fn center(&self) -> Complex<T> {
        self.center
    }

    /// Scaling radius of the recurrence variable.
    pub fn scale(&self) -> T {
        self.scale
    }

    /// Hessenberg recurrence columns; column `k` has `k + 2` entries.
    pub fn hessenberg(&self) -> &[Vec<Complex<T>>] {
        &self.hessenberg
    }

    /// `p_k` at the rule nodes, one row per degree.
    pub fn node_values(&self) -> &[Vec<Complex<T>>] {
        &self.node_values
    }

    /// Evaluates `(p_0(z), ..., p_m(z))` by forward substitution through the
    /// recurrence. Pure function of `(self, z)`.
    pub fn eval(&self, z: Complex<T>, m: usize) -> Result<Vec<Complex<T>>, OrthoError> {
        if m > self.max_degree {
            return Err(OrthoError::DegreeExceeded { requested: m, max: self.max_degree });
        }
        let u = (z - self.center) / self.scale;
        let mut vals = Vec::with_capacity(m + 1);
        vals.push(Complex::new(T::one(), T::zero()));
        for k in 0..m {
            let column = &self.hessenberg[k];
            let mut w = u * vals[k];
            for (j, &h) in column.iter().take(k + 1).enumerate() {
                w = w - h * vals[j];
            }
            vals.push(w / column[k + 1]);
        }
        Ok(vals)
    }

    /// Writes the recurrence as CSV rows `(k, i, Re H[i][k], Im H[i][k])`
    /// behind a header carrying `n`, the centering, and the node count.
    pub fn write_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(
            out,
            "# n={}, c=({:.16e},{:.16e}), r={:.16e}, nodes={}",
            self.max_degree,
            self.center.re,
            self.center.im,
            self.scale,
            self.rule.len()
        )?;
        writeln!(out, "k,i,h_re,h_im")?;
        for (k, column) in self.hessenberg.iter().enumerate() {
            for (i, h) in column.iter().enumerate() {
                writeln!(out, "{},{},{:.16e},{:.16e}", k, i, h.re, h.im)?;
            }
        }
        Ok(())
    }
}
