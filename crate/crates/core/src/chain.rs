//! Single-excitation dynamics of the uniform XX chain.
//!
//! Restricted to states with one flipped spin, the chain Hamiltonian is an
//! N×N tridiagonal hopping matrix whose eigenvectors are standing waves
//! sin(kπj/(N+1)). That gives the transition amplitude
//!
//! ```text
//! f_r(t) = 2/(N+1) Σ_k sin(kπ/(N+1)) sin(kπr/(N+1)) exp(−2it(h + J cos(kπ/(N+1))))
//! ```
//!
//! from site 1 to site r. [`propagator_oracle`] recomputes the same matrix
//! elements by numerically diagonalizing the hopping matrix.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c, C64};

/// Largest chain accepted by the dense oracle.
pub const ORACLE_MAX_SITES: usize = 2000;

/// Parameters of a uniform XX chain in a uniform field.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChainSpec {
    n_sites: usize,
    coupling: f64,
    field: f64,
}

impl ChainSpec {
    pub fn new(n_sites: usize, coupling: f64, field: f64) -> Result<Self> {
        if n_sites < 2 {
            return Err(Error::domain(format!("chain needs at least 2 sites, got {n_sites}")));
        }
        if !(coupling.is_finite() && coupling > 0.0) {
            return Err(Error::domain(format!("coupling must be positive and finite, got {coupling}")));
        }
        if !field.is_finite() {
            return Err(Error::domain(format!("field must be finite, got {field}")));
        }
        Ok(Self { n_sites, coupling, field })
    }

    /// Chain with J = 1 and zero field.
    pub fn uniform(n_sites: usize) -> Result<Self> {
        Self::new(n_sites, 1.0, 0.0)
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn coupling(&self) -> f64 {
        self.coupling
    }

    pub fn field(&self) -> f64 {
        self.field
    }

    pub fn with_field(self, field: f64) -> Result<Self> {
        Self::new(self.n_sites, self.coupling, field)
    }

    fn check_site(&self, r: usize) -> Result<()> {
        if r == 0 || r > self.n_sites {
            return Err(Error::domain(format!("site {r} outside 1..={}", self.n_sites)));
        }
        Ok(())
    }
}

/// A single-excitation transition amplitude, |f| ≤ 1 up to rounding.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TransitionAmplitude(#[serde(with = "crate::io::complex")] pub C64);

impl TransitionAmplitude {
    pub fn value(self) -> C64 {
        self.0
    }

    pub fn norm(self) -> f64 {
        self.0.norm()
    }

    /// Amplitude with the modulus clamped to at most one.
    pub fn clamped(self) -> C64 {
        let n = self.0.norm();
        if n > 1.0 {
            self.0 / n
        } else {
            self.0
        }
    }
}

fn check_time(t: f64) -> Result<()> {
    if !t.is_finite() {
        return Err(Error::domain(format!("time must be finite, got {t}")));
    }
    Ok(())
}

/// Closed-form amplitude ⟨r|e^{−iHt}|1⟩.
pub fn transition_amplitude(spec: &ChainSpec, r: usize, t: f64) -> Result<TransitionAmplitude> {
    spec.check_site(r)?;
    check_time(t)?;
    Ok(TransitionAmplitude(amplitude_unchecked(spec, r, t)))
}

fn amplitude_unchecked(spec: &ChainSpec, r: usize, t: f64) -> C64 {
    let n1 = (spec.n_sites + 1) as f64;
    let mut acc = c(0.0, 0.0);
    for k in 1..=spec.n_sites {
        let q = k as f64 * PI / n1;
        let weight = q.sin() * (q * r as f64).sin();
        let phase = -2.0 * t * (spec.field + spec.coupling * q.cos());
        acc += C64::from_polar(weight, phase);
    }
    acc * (2.0 / n1)
}

/// Amplitudes to every site 1..=N at time `t`.
pub fn transition_amplitudes_all(spec: &ChainSpec, t: f64) -> Result<Vec<TransitionAmplitude>> {
    check_time(t)?;
    let n = spec.n_sites;
    let n1 = (n + 1) as f64;
    // Mode weights and phases are shared by every target site.
    let modes: Vec<(f64, C64)> = (1..=n)
        .map(|k| {
            let q = k as f64 * PI / n1;
            let phase = -2.0 * t * (spec.field + spec.coupling * q.cos());
            (q, C64::from_polar(q.sin(), phase))
        })
        .collect();
    Ok((1..=n)
        .map(|r| {
            let acc: C64 = modes.iter().map(|&(q, m)| m * (q * r as f64).sin()).sum();
            TransitionAmplitude(acc * (2.0 / n1))
        })
        .collect())
}

/// Single-excitation generator whose propagator the closed form reproduces:
/// on-site energy 2h and nearest-neighbour hopping J.
pub fn hopping_matrix(spec: &ChainSpec) -> DMatrix<f64> {
    let n = spec.n_sites;
    DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            2.0 * spec.field
        } else if i.abs_diff(j) == 1 {
            spec.coupling
        } else {
            0.0
        }
    })
}

/// Dense propagator e^{−iHt} from a numerical eigendecomposition of the
/// hopping matrix. Element (r−1, 0) is f_r(t).
pub fn propagator_oracle(spec: &ChainSpec, t: f64) -> Result<DMatrix<C64>> {
    check_time(t)?;
    if spec.n_sites > ORACLE_MAX_SITES {
        return Err(Error::Capacity {
            what: "n_sites",
            requested: spec.n_sites,
            limit: ORACLE_MAX_SITES,
        });
    }
    let n = spec.n_sites;
    let eig = SymmetricEigen::new(hopping_matrix(spec));
    let vecs = eig.eigenvectors.map(|v| c(v, 0.0));
    let phases = DMatrix::from_diagonal(&eig.eigenvalues.map(|lam| C64::from_polar(1.0, -lam * t)));
    let u = &vecs * phases * vecs.transpose();
    debug_assert_eq!(u.nrows(), n);
    Ok(u)
}

/// max |U†U − 1| over all elements.
pub fn unitarity_defect(u: &DMatrix<C64>) -> f64 {
    let n = u.nrows();
    let prod = u.adjoint() * u;
    let id = DMatrix::<C64>::identity(n, n);
    (prod - id).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Time of the first maximum of |f_r| in `[t_lo, t_hi]`, located by scanning
/// `samples` points and refining the best bracket by golden-section search.
pub fn locate_peak(spec: &ChainSpec, r: usize, t_lo: f64, t_hi: f64, samples: usize) -> Result<f64> {
    spec.check_site(r)?;
    check_time(t_lo)?;
    check_time(t_hi)?;
    if t_hi <= t_lo || samples < 3 {
        return Err(Error::domain("peak search needs t_hi > t_lo and at least 3 samples"));
    }
    let mag = |t: f64| amplitude_unchecked(spec, r, t).norm();
    let step = (t_hi - t_lo) / (samples - 1) as f64;
    let best = (0..samples)
        .map(|i| (i, mag(t_lo + step * i as f64)))
        .fold((0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc })
        .0;
    let mut a = t_lo + step * best.saturating_sub(1) as f64;
    let mut b = (t_lo + step * (best + 1) as f64).min(t_hi);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let (mut f1, mut f2) = (mag(x1), mag(x2));
    while b - a > 1e-12 * (1.0 + b.abs()) {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = mag(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = mag(x1);
        }
    }
    Ok(0.5 * (a + b))
}
