// Copyright 2026 The rsplab Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! An RSP protocol for the qubit states on one latitude of the Bloch sphere,
//!
//! ```text
//! phi(theta, eta) = (I + cos(theta) cos(eta) X + cos(theta) sin(eta) Y + sin(theta) Z) / 2,
//! ```
//!
//! with `theta` fixed and `eta` free. Alice measures her half of one ebit
//! with the `phi`-dependent trinary POVM
//!
//! ```text
//! M0 = (1 - p) phi^T,  M1 = (1 - p) (Z phi Z)^T,  M2 = I - M0 - M1 = 2p |1><1|,
//! p  = sin(theta) / (1 + sin(theta)).
//! ```
//!
//! Bob ends up with `phi`, `Z phi Z` or `|1><1|`; he undoes the `Z` on
//! outcome 1 and on outcome 2 the pair falls back to teleportation. Message
//! probabilities are `((1 - p)/2, (1 - p)/2, p)` for every `eta`, so Bob
//! learns nothing, yet with block compression the cost is `n (H(p) + p + 1)`
//! bits for `n` qubits, below teleportation's `2n` near the equator. The
//! ensemble spans only a 3-dimensional operator space.
//!
//! `M2` is fixed by completeness. Writing it as `p |1><1|` would leave the
//! POVM incomplete and make the fallback rate `p / 2`, which does not match
//! the cost formula.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{max_ent_projector, pauli, ComplexMatrix, SubsystemShape, Tolerance};
use crate::quantum::{bloch_state, fidelity, is_generic, measure_on_subsystem, Ensemble, Genericity, Povm};

/// Outcome labels, in order.
pub const LABELS: [&str; 3] = ["0", "1", "2"];

/// Ebits and cbits spent by the teleportation fallback.
pub const FALLBACK_EBITS: f64 = 1.0;
pub const FALLBACK_CBITS: f64 = 2.0;

const ANGLE_SLACK: f64 = 1e-12;

/// Binary entropy in bits, `0 log 0 = 0`.
///
/// # Panics
///
/// If `p` is outside `[0, 1]`.
pub fn binary_entropy(p: f64) -> f64 {
    assert!((0.0..=1.0).contains(&p), "probability {p} outside [0, 1]");
    let term = |x: f64| if x > 0.0 { -x * x.log2() } else { 0.0 };
    term(p) + term(1.0 - p)
}

/// Fallback probability `sin(theta) / (1 + sin(theta))`.
pub fn failure_probability(theta: f64) -> f64 {
    let s = theta.sin();
    s / (1.0 + s)
}

/// Inverse of [`failure_probability`] on `[0, 1/2]`.
pub fn theta_for_failure_probability(p: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&p) {
        return Err(Error::Parameter(format!(
            "fallback probability {p} outside [0, 1/2]"
        )));
    }
    Ok((p / (1.0 - p)).min(1.0).asin())
}

fn check_theta(theta: f64) -> Result<f64> {
    if !(-ANGLE_SLACK..=FRAC_PI_2 + ANGLE_SLACK).contains(&theta) {
        return Err(Error::Parameter(format!("latitude {theta} outside [0, pi/2]")));
    }
    Ok(theta.clamp(0.0, FRAC_PI_2))
}

/// Bob's step after each outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Correction {
    Identity,
    ConjugateZ,
    /// Alice and Bob teleport `phi` using a fresh ebit and two cbits.
    TeleportFallback,
}

/// The latitude protocol at a fixed `theta`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LatitudeProtocol {
    theta: f64,
    p: f64,
}

impl LatitudeProtocol {
    pub fn new(theta: f64) -> Result<Self> {
        let theta = check_theta(theta)?;
        Ok(LatitudeProtocol {
            theta,
            p: failure_probability(theta),
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Probability `p` of the teleportation fallback.
    pub fn failure_probability(&self) -> f64 {
        self.p
    }

    /// At the pole every `eta` gives `|0>`, so the ensemble is a single state.
    pub fn is_degenerate(&self) -> bool {
        (self.theta - FRAC_PI_2).abs() < ANGLE_SLACK
    }

    pub fn corrections(&self) -> [Correction; 3] {
        [
            Correction::Identity,
            Correction::ConjugateZ,
            Correction::TeleportFallback,
        ]
    }

    /// Alice's measurement for the state at azimuth `eta`.
    pub fn povm_for(&self, eta: f64) -> Result<Povm> {
        let phi = bloch_state(self.theta, eta).projector();
        let z = pauli::z();
        let m0 = phi.transpose().scale_real(1.0 - self.p);
        let m1 = (&(&z * &phi) * &z).transpose().scale_real(1.0 - self.p);
        let m2 = &(&ComplexMatrix::identity(2) - &m0) - &m1;
        Povm::new(
            SubsystemShape::single(2)?,
            LABELS.iter().map(|s| s.to_string()).collect(),
            vec![m0, m1, m2],
            Tolerance::ALGEBRAIC,
        )
    }

    /// Runs one round on one ebit for the state at azimuth `eta`.
    pub fn simulate(&self, eta: f64) -> Result<Vec<LatitudeOutcome>> {
        let target = bloch_state(self.theta, eta);
        let phi = target.projector();
        let povm = self.povm_for(eta)?;
        let shape = SubsystemShape::new(vec![2, 2])?;
        let z = pauli::z();
        let outcomes = measure_on_subsystem(&max_ent_projector(2), &shape, &povm, &[0])?;
        outcomes
            .into_iter()
            .zip(self.corrections())
            .map(|(o, correction)| {
                let corrected = o.conditional_state.as_ref().map(|raw| match correction {
                    Correction::Identity => raw.clone(),
                    Correction::ConjugateZ => &(&z * raw) * &z,
                    Correction::TeleportFallback => phi.clone(),
                });
                let fidelity = corrected.as_ref().map(|c| fidelity(&target, c)).transpose()?;
                let fallback = correction == Correction::TeleportFallback;
                Ok(LatitudeOutcome {
                    label: o.label,
                    probability: o.probability,
                    raw_state: o.conditional_state,
                    correction,
                    corrected_state: corrected,
                    fidelity,
                    extra_ebits: if fallback { FALLBACK_EBITS } else { 0.0 },
                    extra_cbits: if fallback { FALLBACK_CBITS } else { 0.0 },
                })
            })
            .collect()
    }

    pub fn cost(&self, n: u64) -> Result<LatitudeCost> {
        latitude_cost(self.theta, n)
    }
}

/// One outcome of [`LatitudeProtocol::simulate`].
#[derive(Clone, Debug)]
pub struct LatitudeOutcome {
    pub label: String,
    pub probability: f64,
    /// Bob's state before correction; `None` for null outcomes.
    pub raw_state: Option<ComplexMatrix>,
    pub correction: Correction,
    pub corrected_state: Option<ComplexMatrix>,
    /// Fidelity of the corrected state with the target.
    pub fidelity: Option<f64>,
    pub extra_ebits: f64,
    pub extra_cbits: f64,
}

pub fn latitude_povm(theta: f64, eta: f64) -> Result<Povm> {
    LatitudeProtocol::new(theta)?.povm_for(eta)
}

pub fn simulate_latitude(theta: f64, eta: f64) -> Result<Vec<LatitudeOutcome>> {
    LatitudeProtocol::new(theta)?.simulate(eta)
}

/// Expected classical cost of preparing `n` qubits, split into its parts.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatitudeCost {
    pub theta: f64,
    pub p: f64,
    pub n: u64,
    /// `n H(p)`: which rounds fell back.
    pub failure_location_bits: f64,
    /// `n (1 - p)`: the 0/1 outcome of each successful round.
    pub success_bits: f64,
    /// `2 n p`: teleportation on the fallback rounds.
    pub teleport_bits: f64,
    /// `n (H(p) + p + 1)`.
    pub total_bits: f64,
}

impl LatitudeCost {
    pub fn per_qubit(&self) -> f64 {
        self.total_bits / self.n as f64
    }
}

pub fn latitude_cost(theta: f64, n: u64) -> Result<LatitudeCost> {
    let theta = check_theta(theta)?;
    if n == 0 {
        return Err(Error::Parameter("need at least one qubit".into()));
    }
    let p = failure_probability(theta);
    let nf = n as f64;
    let h = binary_entropy(p);
    Ok(LatitudeCost {
        theta,
        p,
        n,
        failure_location_bits: nf * h,
        success_bits: nf * (1.0 - p),
        teleport_bits: nf * p * FALLBACK_CBITS,
        total_bits: nf * (h + p + 1.0),
    })
}

/// Root of `H(p) + p = 1` on `(0, 1/2)`, by bisection. Below it the
/// latitude protocol is cheaper than teleportation.
pub fn crossover_probability() -> f64 {
    let f = |p: f64| binary_entropy(p) + p - 1.0;
    let (mut lo, mut hi) = (0.0f64, 0.5f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-16 {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// `count` states evenly spaced in azimuth at latitude `theta`.
pub fn latitude_ensemble(theta: f64, count: usize) -> Result<Ensemble> {
    let theta = check_theta(theta)?;
    if count == 0 {
        return Err(Error::Parameter(
            "latitude ensemble needs at least one state".into(),
        ));
    }
    let states = (0..count)
        .map(|k| bloch_state(theta, 2.0 * PI * k as f64 / count as f64))
        .collect();
    let labels = (0..count).map(|k| format!("eta{k}")).collect();
    Ensemble::new(states, labels)
}

/// Operator-space rank of a sampled latitude: 3 below the pole, 1 at it.
pub fn latitude_genericity_demo(theta: f64, sample_count: usize) -> Result<Genericity> {
    if sample_count < 4 {
        return Err(Error::Parameter(format!(
            "need at least 4 samples, got {sample_count}"
        )));
    }
    Ok(is_generic(&latitude_ensemble(theta, sample_count)?))
}

/// One row of the cost table.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CostTableRow {
    pub theta: f64,
    pub p: f64,
    #[serde(rename = "H")]
    pub entropy: f64,
    pub cost_per_qubit: f64,
    pub beats_teleportation: bool,
}

pub fn cost_table(thetas: &[f64]) -> Result<Vec<CostTableRow>> {
    thetas
        .iter()
        .map(|&theta| {
            let c = latitude_cost(theta, 1)?;
            Ok(CostTableRow {
                theta: c.theta,
                p: c.p,
                entropy: binary_entropy(c.p),
                cost_per_qubit: c.per_qubit(),
                beats_teleportation: c.per_qubit() < 2.0,
            })
        })
        .collect()
}
