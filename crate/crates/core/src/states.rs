//! Two-qubit states and the input families studied for transport.
//!
//! Basis ordering is |1⟩ = |↓↓⟩, |2⟩ = |↓↑⟩, |3⟩ = |↑↓⟩, |4⟩ = |↑↑⟩, where
//! the first factor is the chain-side spin (qubit A) and the second the
//! detached spin (qubit B).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, c, kron, Mat2, Mat4, C64, NEG_EIGEN_TOL};

const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
const POPULATION_TOL: f64 = 1e-12;

/// General two-qubit density matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DenseRepr", into = "DenseRepr")]
pub struct DensityMatrix2Q {
    entries: Mat4,
}

#[derive(Serialize, Deserialize)]
struct DenseRepr {
    entries: [[[f64; 2]; 4]; 4],
}

impl TryFrom<DenseRepr> for DensityMatrix2Q {
    type Error = Error;

    fn try_from(r: DenseRepr) -> Result<Self> {
        let m = Mat4::from_fn(|i, j| c(r.entries[i][j][0], r.entries[i][j][1]));
        DensityMatrix2Q::new(m)
    }
}

impl From<DensityMatrix2Q> for DenseRepr {
    fn from(d: DensityMatrix2Q) -> Self {
        let mut entries = [[[0.0; 2]; 4]; 4];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let z = d.entries[(i, j)];
                *cell = [z.re, z.im];
            }
        }
        DenseRepr { entries }
    }
}

impl DensityMatrix2Q {
    /// Validates hermiticity, unit trace and positivity.
    pub fn new(entries: Mat4) -> Result<Self> {
        let herm_dev = (entries - entries.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if herm_dev > HERMITIAN_TOL {
            return Err(Error::domain(format!("matrix not Hermitian (deviation {herm_dev:e})")));
        }
        let tr = entries.trace();
        if (tr - c(1.0, 0.0)).norm() > TRACE_TOL {
            return Err(Error::domain(format!("trace {tr} is not 1")));
        }
        let min_eig = linalg::eigvals_herm4(&entries)[0];
        if min_eig < -NEG_EIGEN_TOL {
            return Err(Error::domain(format!("matrix not positive (min eigenvalue {min_eig:e})")));
        }
        Ok(Self { entries })
    }

    /// Pure state |ψ⟩⟨ψ| from an amplitude vector, normalized here.
    pub fn from_pure(amps: [C64; 4]) -> Result<Self> {
        let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::domain("state vector has zero or non-finite norm"));
        }
        let m = Mat4::from_fn(|i, j| amps[i] * amps[j].conj() / (norm * norm));
        Self::new(m)
    }

    pub fn maximally_mixed() -> Self {
        Self { entries: Mat4::identity() * c(0.25, 0.0) }
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.entries
    }

    /// Reduced state of the chain-side qubit A.
    pub fn marginal_a(&self) -> QubitState {
        QubitState(linalg::trace_out_second(&self.entries))
    }

    /// Reduced state of the detached qubit B.
    pub fn marginal_b(&self) -> QubitState {
        QubitState(linalg::trace_out_first(&self.entries))
    }

    pub fn eigenvalues(&self) -> [f64; 4] {
        linalg::eigvals_herm4(&self.entries)
    }

    pub fn purity(&self) -> f64 {
        (self.entries * self.entries).trace().re
    }

    /// (U_a ⊗ U_b) ρ (U_a ⊗ U_b)†.
    pub fn conjugate_local(&self, ua: &Mat2, ub: &Mat2) -> Self {
        let u = kron(ua, ub);
        let m = u * self.entries * u.adjoint();
        // Unitary conjugation preserves the invariants; re-hermitize rounding.
        Self { entries: (m + m.adjoint()) * c(0.5, 0.0) }
    }

    /// Exchanges the roles of qubits A and B.
    pub fn swapped(&self) -> Self {
        let perm = [0usize, 2, 1, 3];
        Self { entries: Mat4::from_fn(|i, j| self.entries[(perm[i], perm[j])]) }
    }

    /// ⟨P_a ⊗ P_b⟩.
    pub fn expectation(&self, pa: &Mat2, pb: &Mat2) -> f64 {
        (self.entries * kron(pa, pb)).trace().re
    }
}

/// Single-qubit density matrix in the (|↓⟩, |↑⟩) basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState(pub Mat2);

impl QubitState {
    pub fn new(m: Mat2) -> Result<Self> {
        let herm_dev = (m - m.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if herm_dev > HERMITIAN_TOL {
            return Err(Error::domain("qubit matrix not Hermitian"));
        }
        if (m.trace() - c(1.0, 0.0)).norm() > TRACE_TOL {
            return Err(Error::domain("qubit trace is not 1"));
        }
        if linalg::eigvals_herm2(&m)[0] < -NEG_EIGEN_TOL {
            return Err(Error::domain("qubit matrix not positive"));
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn eigenvalues(&self) -> [f64; 2] {
        linalg::eigvals_herm2(&self.0)
    }

    pub fn up_population(&self) -> f64 {
        self.0[(1, 1)].re
    }

    /// ⟨↓|ρ|↑⟩.
    pub fn coherence(&self) -> C64 {
        self.0[(0, 1)]
    }
}

/// Two-qubit state with nonzero entries only on the diagonal and
/// anti-diagonal: populations p1..p4 and coherences ρ14, ρ23.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "XRepr", into = "XRepr")]
pub struct XState {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub p4: f64,
    pub c14: C64,
    pub c23: C64,
}

#[derive(Serialize, Deserialize)]
struct XRepr {
    p1: f64,
    p2: f64,
    p3: f64,
    p4: f64,
    #[serde(with = "crate::io::complex")]
    c14: C64,
    #[serde(with = "crate::io::complex")]
    c23: C64,
}

impl TryFrom<XRepr> for XState {
    type Error = Error;

    fn try_from(r: XRepr) -> Result<Self> {
        XState::new(r.p1, r.p2, r.p3, r.p4, r.c14, r.c23)
    }
}

impl From<XState> for XRepr {
    fn from(x: XState) -> Self {
        XRepr { p1: x.p1, p2: x.p2, p3: x.p3, p4: x.p4, c14: x.c14, c23: x.c23 }
    }
}

impl XState {
    pub fn new(p1: f64, p2: f64, p3: f64, p4: f64, c14: C64, c23: C64) -> Result<Self> {
        let x = Self { p1, p2, p3, p4, c14, c23 };
        x.validate()?;
        Ok(x)
    }

    pub fn validate(&self) -> Result<()> {
        let pops = [self.p1, self.p2, self.p3, self.p4];
        if pops.iter().chain([self.c14.re, self.c14.im, self.c23.re, self.c23.im].iter()).any(|v| !v.is_finite()) {
            return Err(Error::domain("non-finite X-state entry"));
        }
        if let Some(p) = pops.iter().find(|p| **p < -POPULATION_TOL) {
            return Err(Error::domain(format!("negative population {p}")));
        }
        let total: f64 = pops.iter().sum();
        if (total - 1.0).abs() > TRACE_TOL {
            return Err(Error::domain(format!("populations sum to {total}, not 1")));
        }
        if self.c14.norm_sqr() > self.p1 * self.p4 + POPULATION_TOL {
            return Err(Error::domain("|ρ14|² exceeds ρ11·ρ44"));
        }
        if self.c23.norm_sqr() > self.p2 * self.p3 + POPULATION_TOL {
            return Err(Error::domain("|ρ23|² exceeds ρ22·ρ33"));
        }
        Ok(())
    }

    /// Diagonal state with the given populations.
    pub fn diagonal(p1: f64, p2: f64, p3: f64, p4: f64) -> Result<Self> {
        Self::new(p1, p2, p3, p4, C64::default(), C64::default())
    }

    pub fn maximally_mixed() -> Self {
        Self { p1: 0.25, p2: 0.25, p3: 0.25, p4: 0.25, c14: C64::default(), c23: C64::default() }
    }

    pub fn populations(&self) -> [f64; 4] {
        [self.p1, self.p2, self.p3, self.p4]
    }

    /// Dense matrix with the X sparsity pattern.
    pub fn to_dense(&self) -> DensityMatrix2Q {
        let mut m = Mat4::zeros();
        m[(0, 0)] = c(self.p1, 0.0);
        m[(1, 1)] = c(self.p2, 0.0);
        m[(2, 2)] = c(self.p3, 0.0);
        m[(3, 3)] = c(self.p4, 0.0);
        m[(0, 3)] = self.c14;
        m[(3, 0)] = self.c14.conj();
        m[(1, 2)] = self.c23;
        m[(2, 1)] = self.c23.conj();
        DensityMatrix2Q { entries: m }
    }

    /// Reads an X state back from a dense matrix; entries outside the X
    /// pattern must vanish to 1e-12.
    pub fn from_dense(rho: &DensityMatrix2Q) -> Result<Self> {
        let m = rho.matrix();
        for i in 0..4 {
            for j in 0..4 {
                let on_pattern = i == j || i + j == 3;
                if !on_pattern && m[(i, j)].norm() > HERMITIAN_TOL {
                    return Err(Error::domain(format!("entry ({i},{j}) breaks the X pattern")));
                }
            }
        }
        Self::new(m[(0, 0)].re, m[(1, 1)].re, m[(2, 2)].re, m[(3, 3)].re, m[(0, 3)], m[(1, 2)])
    }

    /// Eigenvalues of the two 2×2 blocks, ascending.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let block = |a: f64, d: f64, z: C64| {
            let mean = 0.5 * (a + d);
            let half = (0.25 * (a - d) * (a - d) + z.norm_sqr()).sqrt();
            [mean - half, mean + half]
        };
        let [a, b] = block(self.p1, self.p4, self.c14);
        let [x, y] = block(self.p2, self.p3, self.c23);
        let mut vals = [a, b, x, y];
        vals.sort_by(f64::total_cmp);
        vals
    }

    /// Diagonal reduced state of qubit A: (p1 + p2, p3 + p4).
    pub fn marginal_a(&self) -> [f64; 2] {
        [self.p1 + self.p2, self.p3 + self.p4]
    }

    /// Diagonal reduced state of qubit B: (p1 + p3, p2 + p4).
    pub fn marginal_b(&self) -> [f64; 2] {
        [self.p1 + self.p3, self.p2 + self.p4]
    }

    pub fn max_abs_diff(&self, other: &XState) -> f64 {
        [
            (self.p1 - other.p1).abs(),
            (self.p2 - other.p2).abs(),
            (self.p3 - other.p3).abs(),
            (self.p4 - other.p4).abs(),
            (self.c14 - other.c14).norm(),
            (self.c23 - other.c23).norm(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// A complete rank-1 projective measurement on one qubit, along the Bloch
/// direction (sin θ cos φ, sin θ sin φ, cos θ).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementBasis {
    pub theta: f64,
    pub phi: f64,
}

impl MeasurementBasis {
    /// Any real angles are accepted and folded into θ ∈ [0, π], φ ∈ [0, 2π)
    /// along the same Bloch axis.
    pub fn new(theta: f64, phi: f64) -> Self {
        let [x, y, z] = bloch(theta, phi);
        let theta = z.clamp(-1.0, 1.0).acos();
        let mut phi = if x.hypot(y) < 1e-300 { 0.0 } else { y.atan2(x) };
        if phi < 0.0 {
            phi += 2.0 * PI;
        }
        if phi >= 2.0 * PI {
            phi = 0.0;
        }
        Self { theta, phi }
    }

    pub fn direction(&self) -> [f64; 3] {
        bloch(self.theta, self.phi)
    }

    /// The two projectors (1 ± n·σ)/2.
    pub fn projectors(&self) -> [Mat2; 2] {
        let n = self.direction();
        let [sx, sy, sz] = linalg::paulis();
        let ns = sx * c(n[0], 0.0) + sy * c(n[1], 0.0) + sz * c(n[2], 0.0);
        let id = linalg::identity2();
        [(id + ns) * c(0.5, 0.0), (id - ns) * c(0.5, 0.0)]
    }
}

pub(crate) fn bloch(theta: f64, phi: f64) -> [f64; 3] {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    [st * cp, st * sp, ct]
}

/// sin γ|↓↓⟩ + cos γ|↑↑⟩ with γ = ½ arcsin(c0), whose concurrence is c0.
pub fn pure_state(c0: f64) -> Result<XState> {
    if !(0.0..=1.0).contains(&c0) {
        return Err(Error::domain(format!("concurrence {c0} outside [0, 1]")));
    }
    let gamma = 0.5 * c0.asin();
    let (s, co) = gamma.sin_cos();
    XState::new(s * s, 0.0, 0.0, co * co, c(s * co, 0.0), C64::default())
}

/// ρ^P family: ρ11 = ρ44 = ρ14 = a/2, ρ22 = (1−a−g)/2, ρ33 = (1−a+g)/2.
pub fn mdms_p(a: f64, g: f64) -> Result<XState> {
    if !(a >= 0.0 && a + g <= 1.0) {
        return Err(Error::domain(format!("ρ^P needs a ≥ 0 and a + g ≤ 1, got a={a}, g={g}")));
    }
    let p1 = a / 2.0;
    let p2 = (1.0 - a - g) / 2.0;
    let p3 = (1.0 - a + g) / 2.0;
    XState::new(p1, p2, p3, a / 2.0, c(a / 2.0, 0.0), C64::default())
}

/// Werner family ρ^W, a ∈ [−1/3, 1].
pub fn mdms_werner(a: f64) -> Result<XState> {
    if !(-1.0 / 3.0 - 1e-15..=1.0).contains(&a) {
        return Err(Error::domain(format!("Werner parameter {a} outside [-1/3, 1]")));
    }
    let outer = (1.0 + a) / 4.0;
    let inner = (1.0 - a) / 4.0;
    XState::new(outer, inner, inner, outer, c(a / 2.0, 0.0), C64::default())
}

/// ρ^R family: ρ11 = ρ44 = (1−a)/2, ρ22 = a, ρ33 = 0, ρ14 = g/2.
pub fn mdms_r(a: f64, g: f64) -> Result<XState> {
    if !((0.0..=1.0 / 3.0).contains(&a) && a + g <= 1.0) {
        return Err(Error::domain(format!("ρ^R needs 0 ≤ a ≤ 1/3 and a + g ≤ 1, got a={a}, g={g}")));
    }
    let outer = (1.0 - a) / 2.0;
    XState::new(outer, a, 0.0, outer, c(g / 2.0, 0.0), C64::default())
}

/// Maximally-mixed-marginal state ¼(1 + Σ c_i σ_i⊗σ_i).
pub fn mmm_state(cx: f64, cy: f64, cz: f64) -> Result<XState> {
    let x = XState {
        p1: (1.0 + cz) / 4.0,
        p2: (1.0 - cz) / 4.0,
        p3: (1.0 - cz) / 4.0,
        p4: (1.0 + cz) / 4.0,
        c14: c((cx - cy) / 4.0, 0.0),
        c23: c((cx + cy) / 4.0, 0.0),
    };
    x.validate()
        .map_err(|_| Error::domain(format!("({cx}, {cy}, {cz}) lies outside the Bell tetrahedron")))?;
    Ok(x)
}

/// Builds a family member from `name:p1,p2,...`, with names `pure`,
/// `werner`, `mdms-p`, `mdms-r` and `mmm`.
pub fn family_state(text: &str) -> Result<XState> {
    let (name, args) = text.split_once(':').unwrap_or((text, ""));
    let values = args
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<f64>().map_err(|_| Error::domain(format!("'{s}' is not a number in '{text}'"))))
        .collect::<Result<Vec<f64>>>()?;
    let want = |n: usize| -> Result<()> {
        if values.len() == n {
            Ok(())
        } else {
            Err(Error::domain(format!("'{name}' takes {n} parameter(s), got {}", values.len())))
        }
    };
    match name.trim() {
        "pure" => want(1).and_then(|_| pure_state(values[0])),
        "werner" => want(1).and_then(|_| mdms_werner(values[0])),
        "mdms-p" => want(2).and_then(|_| mdms_p(values[0], values[1])),
        "mdms-r" => want(2).and_then(|_| mdms_r(values[0], values[1])),
        "mmm" => want(3).and_then(|_| mmm_state(values[0], values[1], values[2])),
        other => Err(Error::domain(format!("unknown state family '{other}' (pure, werner, mdms-p, mdms-r, mmm)"))),
    }
}

/// Anything with a spectrum whose von Neumann entropy can be taken.
pub trait Spectrum {
    fn spectrum(&self) -> Vec<f64>;
}

impl Spectrum for DensityMatrix2Q {
    fn spectrum(&self) -> Vec<f64> {
        self.eigenvalues().to_vec()
    }
}

impl Spectrum for XState {
    fn spectrum(&self) -> Vec<f64> {
        self.eigenvalues().to_vec()
    }
}

impl Spectrum for QubitState {
    fn spectrum(&self) -> Vec<f64> {
        self.eigenvalues().to_vec()
    }
}

/// −Tr ρ log₂ ρ in bits.
pub fn von_neumann_entropy<S: Spectrum + ?Sized>(rho: &S) -> Result<f64> {
    linalg::entropy_of_spectrum(&rho.spectrum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{sigma_x, sigma_y, sigma_z};

    #[test]
    fn maximally_mixed_dense() {
        let d = XState::maximally_mixed().to_dense();
        assert!((d.matrix() - Mat4::identity() * c(0.25, 0.0)).norm() < 1e-16);
        assert!((von_neumann_entropy(&d).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn bell_projector() {
        let x = XState::new(0.5, 0.0, 0.0, 0.5, c(0.5, 0.0), C64::default()).unwrap();
        let ev = x.to_dense().eigenvalues();
        assert!((ev[3] - 1.0).abs() < 1e-12);
        assert!(ev[..3].iter().all(|v| v.abs() < 1e-12));
        assert!(von_neumann_entropy(&x).unwrap().abs() < 1e-12);
    }

    #[test]
    fn dense_round_trip_is_exact() {
        let x = XState::new(0.1, 0.2, 0.3, 0.4, c(0.05, -0.1), c(0.1, 0.15)).unwrap();
        assert_eq!(XState::from_dense(&x.to_dense()).unwrap(), x);
    }

    #[test]
    fn x_pattern_enforced() {
        let mut m = *XState::maximally_mixed().to_dense().matrix();
        m[(0, 1)] = c(0.01, 0.0);
        m[(1, 0)] = c(0.01, 0.0);
        let d = DensityMatrix2Q::new(m).unwrap();
        assert!(XState::from_dense(&d).is_err());
    }

    #[test]
    fn invalid_x_states_rejected() {
        assert!(XState::new(0.5, 0.5, 0.1, -0.1, C64::default(), C64::default()).is_err());
        assert!(XState::new(0.3, 0.3, 0.3, 0.3, C64::default(), C64::default()).is_err());
        assert!(XState::new(0.25, 0.25, 0.25, 0.25, c(0.3, 0.0), C64::default()).is_err());
        assert!(XState::new(0.25, 0.25, 0.25, 0.25, C64::default(), c(0.0, 0.3)).is_err());
    }

    #[test]
    fn dense_validation() {
        let mut m = Mat4::identity() * c(0.25, 0.0);
        m[(0, 1)] = c(0.1, 0.0);
        assert!(DensityMatrix2Q::new(m).is_err());
        assert!(DensityMatrix2Q::new(Mat4::identity() * c(0.3, 0.0)).is_err());
        let neg = Mat4::from_diagonal(&nalgebra::Vector4::new(c(0.6, 0.0), c(0.5, 0.0), c(-0.1, 0.0), c(0.0, 0.0)));
        assert!(DensityMatrix2Q::new(neg).is_err());
    }

    #[test]
    fn pure_state_family() {
        let zero = pure_state(0.0).unwrap();
        assert!((zero.p4 - 1.0).abs() < 1e-15);
        let one = pure_state(1.0).unwrap();
        assert!((one.p1 - 0.5).abs() < 1e-15 && (one.p4 - 0.5).abs() < 1e-15);
        assert!((one.c14.re - 0.5).abs() < 1e-15);
        assert!(pure_state(-0.1).is_err());
        assert!(pure_state(1.1).is_err());
        for k in 0..=20 {
            let x = pure_state(k as f64 / 20.0).unwrap();
            assert!((x.to_dense().purity() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn werner_family() {
        let w = mdms_werner(1.0).unwrap();
        assert!((w.to_dense().purity() - 1.0).abs() < 1e-12);
        let mixed = mdms_werner(0.0).unwrap();
        assert_eq!(mixed, XState::maximally_mixed());
        assert!(mdms_werner(-0.34).is_err());
        assert!(mdms_werner(1.01).is_err());
        assert!(mdms_werner(-1.0 / 3.0).is_ok());
    }

    #[test]
    fn mdms_p_family() {
        let x = mdms_p(0.503, 0.0).unwrap();
        assert!((x.populations().iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert!((x.p4 - x.p1).abs() < 1e-15);
        assert!(mdms_p(0.0, 0.0).is_ok());
        assert!(mdms_p(-0.1, 0.0).is_err());
        assert!(mdms_p(0.6, 0.5).is_err());
        assert!(mdms_p(0.2, -0.9).is_err());
    }

    #[test]
    fn mdms_r_entropy() {
        let x = mdms_r(0.0150, 0.9747).unwrap();
        let s = von_neumann_entropy(&x).unwrap();
        assert!((s - 0.159).abs() < 2e-3, "entropy {s}");
        assert!(mdms_r(0.1625, 0.7649).is_ok());
        assert!(mdms_r(0.4, 0.1).is_err());
        assert!(mdms_r(0.2, 0.9).is_err());
    }

    #[test]
    fn mmm_matches_pauli_expansion() {
        let paulis = [sigma_x(), sigma_y(), sigma_z()];
        for &(cx, cy, cz) in &[(0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.53, 0.340, 0.035), (-0.2, 0.5, -0.3)] {
            let x = mmm_state(cx, cy, cz).unwrap();
            let mut expect = Mat4::identity();
            for (ci, p) in [cx, cy, cz].iter().zip(paulis.iter()) {
                expect += kron(p, p) * c(*ci, 0.0);
            }
            expect *= c(0.25, 0.0);
            assert!(linalg::max_abs_diff4(x.to_dense().matrix(), &expect) < 1e-14);
        }
        assert!(mmm_state(1.0, 1.0, 1.0).is_err());
        assert!(mmm_state(1.0, 0.5, 0.0).is_err());
    }

    #[test]
    fn evolved_werner_entropy_anchor() {
        let s2 = 2f64.sqrt();
        let x = XState::new(0.5, 0.25, 0.0, 0.25, c(1.0 / (2.0 * s2), 0.0), C64::default()).unwrap();
        assert!((von_neumann_entropy(&x).unwrap() - 0.811278).abs() < 1e-5);
        assert!((von_neumann_entropy(&x.to_dense()).unwrap() - 0.811278).abs() < 1e-5);
    }

    #[test]
    fn measurement_projectors_complete() {
        for &(t, p) in &[(0.0, 0.0), (PI / 2.0, 0.0), (1.1, 4.0), (PI, 1.0), (-0.4, 7.0)] {
            let b = MeasurementBasis::new(t, p);
            assert!((0.0..=PI).contains(&b.theta) && (0.0..2.0 * PI).contains(&b.phi));
            let [p0, p1] = b.projectors();
            let id = linalg::identity2();
            assert!((p0 + p1 - id).norm() < 1e-12);
            assert!((p0 * p0 - p0).norm() < 1e-12);
            assert!((p1 * p1 - p1).norm() < 1e-12);
            assert!((p0 * p1).norm() < 1e-12);
            assert!((p0.trace().re - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn json_uses_pairs_for_complex() {
        let x = XState::new(0.1, 0.2, 0.3, 0.4, c(0.05, -0.1), c(0.1, 0.15)).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert!(s.contains("\"c14\":[0.05,-0.1]"), "{s}");
        let back: XState = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        let bad = r#"{"p1":0.5,"p2":0.5,"p3":0.5,"p4":0.0,"c14":[0,0],"c23":[0,0]}"#;
        assert!(serde_json::from_str::<XState>(bad).is_err());

        let d = x.to_dense();
        let s = serde_json::to_string(&d).unwrap();
        let back: DensityMatrix2Q = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn family_specs() {
        assert_eq!(family_state("pure:1").unwrap(), pure_state(1.0).unwrap());
        assert_eq!(family_state("mmm:0.53,0.340,0.035").unwrap(), mmm_state(0.53, 0.34, 0.035).unwrap());
        assert_eq!(family_state("mdms-r:0.0150, 0.9747").unwrap(), mdms_r(0.015, 0.9747).unwrap());
        assert!(family_state("werner").is_err());
        assert!(family_state("werner:2").is_err());
        assert!(family_state("ghz:1").is_err());
        assert!(family_state("mdms-p:0.5,x").is_err());
    }
}
