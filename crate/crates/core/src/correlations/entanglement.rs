use crate::linalg::{self, c, kron, sigma_y, Mat4};

use crate::states::{DensityMatrix2Q, XState};

/// Eigenvalues of ρ below this are treated as exact zeros.
const RANK_FLOOR: f64 = 1e-14;

/// Wootters concurrence.
///
/// With ρ = W W† (columns of W are eigenvectors scaled by √μ), the square
/// roots of the eigenvalues of ρ (σy⊗σy) ρ* (σy⊗σy) are the singular values
/// of the complex-symmetric matrix Wᵀ (σy⊗σy) W. Working with singular
/// values avoids taking square roots of rounding-level eigenvalues.
pub fn concurrence_general(rho: &DensityMatrix2Q) -> f64 {
    let yy = kron(&sigma_y(), &sigma_y());
    let eig = rho.matrix().symmetric_eigen();
    let mut w = Mat4::zeros();
    for k in 0..4 {
        let mu = eig.eigenvalues[k];
        if mu > RANK_FLOOR {
            w.set_column(k, &(eig.eigenvectors.column(k) * c(mu.sqrt(), 0.0)));
        }
    }
    let tau: Mat4 = w.transpose() * yy * w;
    let mut s: Vec<f64> = tau.singular_values().iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    (s[0] - s[1] - s[2] - s[3]).clamp(0.0, 1.0)
}

/// Closed form for X states: 2 max[0, |ρ14| − √(ρ22ρ33), |ρ23| − √(ρ11ρ44)].
pub fn concurrence_x(x: &XState) -> f64 {
    let branch_14 = x.c14.norm() - (x.p2.max(0.0) * x.p3.max(0.0)).sqrt();
    let branch_23 = x.c23.norm() - (x.p1.max(0.0) * x.p4.max(0.0)).sqrt();
    (2.0 * branch_14.max(branch_23).max(0.0)).min(1.0)
}

/// Entanglement of formation h((1 + √(1 − C²))/2) from a concurrence value.
pub fn eof_from_concurrence(conc: f64) -> f64 {
    let conc = conc.clamp(0.0, 1.0);
    linalg::binary_entropy(0.5 * (1.0 + (1.0 - conc * conc).max(0.0).sqrt()))
}

pub fn eof(rho: &DensityMatrix2Q) -> f64 {
    eof_from_concurrence(concurrence_general(rho))
}

pub fn eof_x(x: &XState) -> f64 {
    eof_from_concurrence(concurrence_x(x))
}
