//! Small dense helpers for one- and two-qubit operators.
//!
//! Single-qubit operators use the ordered basis (|↓⟩, |↑⟩) with the
//! convention σz|↑⟩ = +|↑⟩, so σz = diag(−1, +1) in that ordering.

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type Mat2 = Matrix2<C64>;
pub type Mat4 = Matrix4<C64>;

/// Eigenvalues below this are rejected as non-PSD; those between it and
/// zero are clamped to zero.
pub const NEG_EIGEN_TOL: f64 = 1e-10;

pub const fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn identity2() -> Mat2 {
    Mat2::identity()
}

pub fn sigma_x() -> Mat2 {
    Mat2::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0))
}

pub fn sigma_y() -> Mat2 {
    // ⟨↓|σy|↑⟩ = i, ⟨↑|σy|↓⟩ = −i
    Mat2::new(c(0.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(0.0, 0.0))
}

pub fn sigma_z() -> Mat2 {
    Mat2::new(c(-1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0))
}

pub fn paulis() -> [Mat2; 3] {
    [sigma_x(), sigma_y(), sigma_z()]
}

pub fn kron(a: &Mat2, b: &Mat2) -> Mat4 {
    let mut out = Mat4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[(2 * i + k, 2 * j + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Partial trace over the second qubit.
pub fn trace_out_second(m: &Mat4) -> Mat2 {
    let mut out = Mat2::zeros();
    for i in 0..2 {
        for j in 0..2 {
            out[(i, j)] = m[(2 * i, 2 * j)] + m[(2 * i + 1, 2 * j + 1)];
        }
    }
    out
}

/// Partial trace over the first qubit.
pub fn trace_out_first(m: &Mat4) -> Mat2 {
    let mut out = Mat2::zeros();
    for k in 0..2 {
        for l in 0..2 {
            out[(k, l)] = m[(k, l)] + m[(2 + k, 2 + l)];
        }
    }
    out
}

/// Eigenvalues of a 2×2 Hermitian matrix, ascending.
pub fn eigvals_herm2(m: &Mat2) -> [f64; 2] {
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    let b = m[(0, 1)];
    let mean = 0.5 * (a + d);
    let half_gap = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    [mean - half_gap, mean + half_gap]
}

/// Eigenvalues of a 4×4 Hermitian matrix, ascending.
pub fn eigvals_herm4(m: &Mat4) -> [f64; 4] {
    let eig = m.symmetric_eigen();
    let mut vals = [0.0; 4];
    for (slot, v) in vals.iter_mut().zip(eig.eigenvalues.iter()) {
        *slot = *v;
    }
    vals.sort_by(f64::total_cmp);
    vals
}

/// Principal square root of a PSD 4×4 Hermitian matrix.
pub fn sqrt_psd4(m: &Mat4) -> Mat4 {
    let eig = m.symmetric_eigen();
    let mut out = Mat4::zeros();
    for k in 0..4 {
        let lam = eig.eigenvalues[k].max(0.0).sqrt();
        let v = eig.eigenvectors.column(k);
        out += v * v.adjoint() * c(lam, 0.0);
    }
    out
}

/// −Σ λ log₂ λ with 0·log 0 = 0. Eigenvalues in [−1e-10, 0) are clamped.
pub fn entropy_of_spectrum(vals: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &v in vals {
        if v < -NEG_EIGEN_TOL {
            return Err(Error::domain(format!(
                "negative eigenvalue {v:e} in entropy evaluation"
            )));
        }
        if v > 0.0 {
            s -= v * v.log2();
        }
    }
    Ok(s.max(0.0))
}

/// Binary entropy h(x) = −x log₂ x − (1−x) log₂(1−x).
pub fn binary_entropy(x: f64) -> f64 {
    let term = |p: f64| if p > 0.0 { -p * p.log2() } else { 0.0 };
    term(x) + term(1.0 - x)
}

/// Entropy in bits of an (unnormalized) 2×2 PSD block divided by its trace.
/// Rounding negatives are clamped silently; used inside the optimizer loop.
pub(crate) fn entropy_normalized2(m: &Mat2, trace: f64) -> f64 {
    let [lo, hi] = eigvals_herm2(m);
    let term = |v: f64| {
        let p = (v / trace).clamp(0.0, 1.0);
        if p > 0.0 {
            -p * p.log2()
        } else {
            0.0
        }
    };
    term(lo) + term(hi)
}

pub fn max_abs_diff4(a: &Mat4, b: &Mat4) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Trace distance ½‖a − b‖₁ for Hermitian 4×4 matrices.
pub fn trace_distance4(a: &Mat4, b: &Mat4) -> f64 {
    let diff = a - b;
    0.5 * eigvals_herm4(&diff).iter().map(|v| v.abs()).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        let [x, y, z] = paulis();
        let i = c(0.0, 1.0);
        // xy = i z holds regardless of the basis ordering.
        assert!(((x * y) - z * i).norm() < 1e-15);
        for p in [x, y, z] {
            assert!(((p * p) - identity2()).norm() < 1e-15);
        }
        // σz|↑⟩ = +|↑⟩ with |↑⟩ the second basis vector.
        assert_eq!(z[(1, 1)], c(1.0, 0.0));
    }

    #[test]
    fn partial_traces_of_product() {
        let a = Mat2::new(c(0.3, 0.0), c(0.1, 0.2), c(0.1, -0.2), c(0.7, 0.0));
        let b = Mat2::new(c(0.6, 0.0), c(0.0, 0.1), c(0.0, -0.1), c(0.4, 0.0));
        let ab = kron(&a, &b);
        assert!((trace_out_second(&ab) - a).norm() < 1e-15);
        assert!((trace_out_first(&ab) - b).norm() < 1e-15);
    }

    #[test]
    fn herm2_eigenvalues_match_nalgebra() {
        let m = Mat2::new(c(0.2, 0.0), c(0.3, -0.4), c(0.3, 0.4), c(-1.1, 0.0));
        let ours = eigvals_herm2(&m);
        let mut theirs: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
        theirs.sort_by(f64::total_cmp);
        assert!((ours[0] - theirs[0]).abs() < 1e-14);
        assert!((ours[1] - theirs[1]).abs() < 1e-14);
    }

    #[test]
    fn entropy_rejects_negative_spectrum() {
        assert!(entropy_of_spectrum(&[1.0 + 1e-3, -1e-3]).is_err());
        let s = entropy_of_spectrum(&[1.0, -5e-11]).unwrap();
        assert_eq!(s, 0.0);
        assert!((entropy_of_spectrum(&[0.25; 4]).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn binary_entropy_endpoints() {
        assert_eq!(binary_entropy(0.0), 0.0);
        assert_eq!(binary_entropy(1.0), 0.0);
        assert!((binary_entropy(0.5) - 1.0).abs() < 1e-15);
    }
}
