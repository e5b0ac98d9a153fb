//! The excitation-preserving channel carrying the (1,0) pair to the (r,0)
//! pair. It acts on the chain-side qubit only and is fixed entirely by the
//! complex transition amplitude f.

use crate::chain::{transition_amplitude, ChainSpec};
use crate::error::{Error, Result};
use crate::linalg::{c, Mat2, C64};
use crate::states::{QubitState, XState};

/// Amplitudes with |f| above 1 + this are rejected; smaller excesses are
/// rounding and get clamped.
pub const AMPLITUDE_SLACK: f64 = 1e-9;

fn checked_amplitude(f: C64) -> Result<C64> {
    let n = f.norm();
    if !n.is_finite() {
        return Err(Error::domain("non-finite transition amplitude"));
    }
    if n > 1.0 + AMPLITUDE_SLACK {
        return Err(Error::domain(format!("|f| = {n} exceeds 1")));
    }
    Ok(if n > 1.0 { f / n } else { f })
}

/// Maps the X state of pair (1,0) to that of pair (r,0) given f = f_r(t).
pub fn evolve_pair(input: &XState, f: C64) -> Result<XState> {
    let f = checked_amplitude(f)?;
    let keep = f.norm_sqr();
    let lost = 1.0 - keep;
    let out = XState {
        p1: input.p1 + lost * input.p3,
        p2: input.p2 + lost * input.p4,
        p3: keep * input.p3,
        p4: keep * input.p4,
        c14: f * input.c14,
        c23: f * input.c23,
    };
    out.validate()
        .map_err(|e| Error::consistency(format!("channel output left the state space: {e}")))?;
    Ok(out)
}

/// Single-spin version: population of |↑⟩ scaled by |f|², coherence ⟨↓|ρ|↑⟩
/// scaled by f, the remainder folded into |↓⟩.
pub fn evolve_single(p_up: f64, coherence: C64, f: C64) -> Result<QubitState> {
    let input = Mat2::new(c(1.0 - p_up, 0.0), coherence, coherence.conj(), c(p_up, 0.0));
    if !(0.0..=1.0).contains(&p_up) {
        return Err(Error::domain(format!("up population {p_up} outside [0, 1]")));
    }
    QubitState::new(input)?;
    let f = checked_amplitude(f)?;
    let keep = f.norm_sqr();
    let m = Mat2::new(
        c(1.0 - p_up * keep, 0.0),
        coherence * f,
        (coherence * f).conj(),
        c(p_up * keep, 0.0),
    );
    QubitState::new(m)
}

/// Evolves the pair through the chain to site `r` at time `t`. With r = 1
/// the chain acts as an environment on the first spin.
pub fn evolve_at_time(spec: &ChainSpec, input: &XState, r: usize, t: f64) -> Result<XState> {
    let f = transition_amplitude(spec, r, t)?;
    evolve_pair(input, f.clamped())
}

/// Removes the phase e^{iα} that a channel with arg f = α leaves on both
/// coherences. This is the local z-rotation a receiver applies on the chain
/// spin, so no correlation measure changes.
pub fn undo_local_phase(x: &XState, alpha: f64) -> XState {
    let back = C64::from_polar(1.0, -alpha);
    XState { c14: x.c14 * back, c23: x.c23 * back, ..*x }
}
