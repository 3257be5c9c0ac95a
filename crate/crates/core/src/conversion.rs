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

//! Conversion of a faithful, receiver-oblivious RSP protocol into one where
//! the sender only needs a single copy of the state.
//!
//! For every message `m` the sender's joint measurement on the input
//! (dimension `d`) and her half of `|Phi_{d'}>` has element
//!
//! ```text
//! M_m = d d' p_m Tr_3[ (I (x) U_m^T) (|Phi_d><Phi_d| (x) b_m^T) (I (x) U_m^*) ]
//! ```
//!
//! where `U_m^T` maps factors 2-3 from `d (x) dim(b_m)` onto `d' (x) k_m` and
//! the trace removes the `k_m` factor, leaving an operator on `d (x) d'`.
//! Transposes are in the computational basis. For qubit teleportation the
//! elements come out as the Bell projectors `(I (x) sigma_m^T)|Phi_2>`, i.e.
//! `x0z0 -> Phi+`, `x1z0 -> Psi+`, `x0z1 -> Phi-`, `x1z1 -> Psi-`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{
    dist, max_ent_projector, max_ent_state, partial_trace, tensor, ComplexMatrix, MatrixRecord,
    SubsystemShape, Tolerance,
};
use crate::quantum::{
    is_generic, measure_on_subsystem, Ensemble, Genericity, MeasurementOutcome, Povm, PureState,
};
use crate::rsp_model::{
    bob_conditional_state, classical_cost, validate_faithful, validate_nonfaithful, CostReport,
    FaithfulRspProtocol, MessageBranch, NonFaithfulRspProtocol,
};

/// Label of the extra element added for nonfaithful protocols.
pub const FAILURE_LABEL: &str = "fail";

/// The failure arm of a converted nonfaithful protocol.
///
/// The element is `scale * (I (x) rho_f^T)` with `scale = d' p_f`, the
/// constant for which the POVM is complete and the failure outcome occurs
/// with probability `p_f`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FailureElement {
    pub label: String,
    pub probability: f64,
    pub scale: f64,
}

/// The state-independent measurement of a converted protocol.
#[derive(Clone, Debug, PartialEq)]
pub struct ObliviousPovm {
    povm: Povm,
    source_protocol: String,
    failure: Option<FailureElement>,
}

impl ObliviousPovm {
    pub fn povm(&self) -> &Povm {
        &self.povm
    }

    /// Fingerprint of the protocol this was built from.
    pub fn source_protocol(&self) -> &str {
        &self.source_protocol
    }

    pub fn failure(&self) -> Option<&FailureElement> {
        self.failure.as_ref()
    }

    /// Input dimension `d`.
    pub fn d(&self) -> usize {
        self.povm.space_shape().dims()[0]
    }

    /// Shared-entanglement dimension `d'`.
    pub fn d_prime(&self) -> usize {
        self.povm.space_shape().dims()[1]
    }

    /// `max |sum_m M_m^T - I (x) I|`.
    pub fn transposed_completeness_residual(&self) -> f64 {
        let n = self.povm.space_shape().total_dim();
        let sum = self
            .povm
            .elements()
            .iter()
            .fold(ComplexMatrix::zeros(n, n), |acc, e| &acc + &e.transpose());
        dist(&sum, &ComplexMatrix::identity(n)).expect("matching shapes")
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        self.povm.min_eigenvalue()
    }

    /// Same measurement with two elements' operators exchanged. Used for
    /// negative controls.
    pub fn with_swapped(&self, a: &str, b: &str) -> Result<Self> {
        Ok(ObliviousPovm {
            povm: self.povm.with_swapped(a, b)?,
            source_protocol: self.source_protocol.clone(),
            failure: self.failure.clone(),
        })
    }

    pub fn to_record(&self) -> ObliviousPovmRecord {
        let rec = self.povm.to_record();
        ObliviousPovmRecord {
            space_shape: rec.space_shape,
            labels: rec.labels,
            elements: rec.elements,
            source_protocol: self.source_protocol.clone(),
            failure: self.failure.clone(),
        }
    }

    pub fn from_record(record: ObliviousPovmRecord, tol: Tolerance) -> Result<Self> {
        if record.space_shape.len() != 2 {
            return Err(Error::Shape("oblivious POVM acts on exactly two factors".into()));
        }
        let povm = Povm::from_record(
            crate::quantum::PovmRecord {
                space_shape: record.space_shape,
                labels: record.labels,
                elements: record.elements,
            },
            tol,
        )?;
        Ok(ObliviousPovm {
            povm,
            source_protocol: record.source_protocol,
            failure: record.failure,
        })
    }
}

/// JSON form of an [`ObliviousPovm`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ObliviousPovmRecord {
    pub space_shape: Vec<usize>,
    pub labels: Vec<String>,
    pub elements: Vec<MatrixRecord>,
    pub source_protocol: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<FailureElement>,
}

/// The measurement element for one branch. Performs no validation.
pub fn oblivious_element(protocol: &FaithfulRspProtocol, branch: &MessageBranch) -> ComplexMatrix {
    let (d, dp, k) = (protocol.d(), protocol.d_prime(), branch.anc_dim);
    let lift = tensor(&ComplexMatrix::identity(d), &branch.unitary.transpose());
    let source = tensor(&max_ent_projector(d), &branch.byproduct.transpose());
    let mapped = &(&lift * &source) * &lift.adjoint();
    let shape = SubsystemShape::new(vec![d, dp, k]).expect("positive dims");
    let reduced = partial_trace(&mapped, &shape, &[2]).expect("shape law holds");
    reduced.scale_real((d * dp) as f64 * branch.probability)
}

/// All branch elements, in branch order. Performs no validation.
pub fn oblivious_elements(protocol: &FaithfulRspProtocol) -> Vec<ComplexMatrix> {
    protocol
        .branches()
        .iter()
        .map(|b| oblivious_element(protocol, b))
        .collect()
}

fn povm_shape(protocol: &FaithfulRspProtocol) -> SubsystemShape {
    SubsystemShape::new(vec![protocol.d(), protocol.d_prime()]).expect("positive dims")
}

/// Builds the oblivious POVM of a protocol that passes
/// [`validate_faithful`] at `tol`.
pub fn build_oblivious_povm(protocol: &FaithfulRspProtocol, tol: Tolerance) -> Result<ObliviousPovm> {
    let report = validate_faithful(protocol, tol);
    if !report.passed {
        return Err(Error::Protocol(format!(
            "source protocol is invalid: {}",
            report.summary()
        )));
    }
    let labels = protocol.labels().into_iter().map(String::from).collect();
    let povm = Povm::new(povm_shape(protocol), labels, oblivious_elements(protocol), tol)?;
    Ok(ObliviousPovm {
        povm,
        source_protocol: protocol.fingerprint(),
        failure: None,
    })
}

/// Builds the oblivious POVM of a nonfaithful protocol: the branch elements
/// plus `d' p_f (I (x) rho_f^T)`. With `p_f = 0` no failure element is added
/// and the result equals [`build_oblivious_povm`] of the base protocol.
pub fn build_nonfaithful_povm(protocol: &NonFaithfulRspProtocol, tol: Tolerance) -> Result<ObliviousPovm> {
    let report = validate_nonfaithful(protocol, tol);
    if !report.passed {
        return Err(Error::Protocol(format!(
            "modified normalization violated: {}",
            report.summary()
        )));
    }
    let base = protocol.base();
    let mut labels: Vec<String> = base.labels().into_iter().map(String::from).collect();
    let mut elements = oblivious_elements(base);
    let pf = protocol.failure_probability();
    let failure = if pf > 0.0 {
        if labels.iter().any(|l| l == FAILURE_LABEL) {
            return Err(Error::Protocol(format!(
                "branch label `{FAILURE_LABEL}` is reserved for the failure outcome"
            )));
        }
        let scale = base.d_prime() as f64 * pf;
        let element = tensor(
            &ComplexMatrix::identity(base.d()),
            &protocol.failure_state().transpose(),
        )
        .scale_real(scale);
        labels.push(FAILURE_LABEL.to_string());
        elements.push(element);
        Some(FailureElement {
            label: FAILURE_LABEL.to_string(),
            probability: pf,
            scale,
        })
    } else {
        None
    };
    let povm = Povm::new(povm_shape(base), labels, elements, tol)?;
    let source_protocol = if failure.is_some() {
        protocol.fingerprint()
    } else {
        base.fingerprint()
    };
    Ok(ObliviousPovm {
        povm,
        source_protocol,
        failure,
    })
}

/// Runs the converted protocol on one copy of `phi`: the sender measures
/// `phi` together with her half of `|Phi_{d'}>`, and each outcome carries
/// the receiver's conditional state.
pub fn simulate_modified(op: &ObliviousPovm, phi: &PureState) -> Result<Vec<MeasurementOutcome>> {
    let (d, dp) = (op.d(), op.d_prime());
    if phi.dim() != d {
        return Err(Error::Shape(format!(
            "input state has dimension {}, measurement expects {d}",
            phi.dim()
        )));
    }
    let joint = tensor(&phi.projector(), &max_ent_projector(dp));
    let shape = SubsystemShape::new(vec![d, dp, dp])?;
    measure_on_subsystem(&joint, &shape, op.povm(), &[0, 1])
}

/// Requires the ensemble's projectors to span all operators.
pub fn require_generic(ensemble: &Ensemble) -> Result<Genericity> {
    let g = is_generic(ensemble);
    if g.generic {
        Ok(g)
    } else {
        Err(Error::NotGeneric {
            rank: g.rank,
            required: ensemble.dim() * ensemble.dim(),
        })
    }
}

/// Comparison of one (state, message) pair.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceEntry {
    pub state: String,
    pub message: String,
    pub expected_probability: f64,
    pub measured_probability: f64,
    pub probability_deviation: f64,
    /// `None` when the measured probability is too small to condition on.
    pub state_distance: Option<f64>,
}

/// Result of [`verify_equivalence`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub tolerance: f64,
    pub genericity: Genericity,
    pub entries: Vec<EquivalenceEntry>,
    pub max_probability_deviation: f64,
    pub max_state_distance: f64,
    pub diagnostics: Vec<String>,
    pub passed: bool,
}

impl EquivalenceReport {
    fn failed(tol: Tolerance, genericity: Genericity, diagnostics: Vec<String>) -> Self {
        EquivalenceReport {
            tolerance: tol.eps(),
            genericity,
            entries: Vec::new(),
            max_probability_deviation: f64::NAN,
            max_state_distance: f64::NAN,
            diagnostics,
            passed: false,
        }
    }
}

/// Converts `protocol` and checks, for every state of `ensemble` and every
/// message, that the converted protocol produces the message with
/// probability `p_m` and leaves Bob in `rho_{phi m}`.
pub fn verify_equivalence(
    protocol: &FaithfulRspProtocol,
    ensemble: &Ensemble,
    tol: Tolerance,
) -> EquivalenceReport {
    match build_oblivious_povm(protocol, tol.scaled(0.1)) {
        Ok(op) => verify_equivalence_with(&op, protocol, ensemble, tol),
        Err(e) => EquivalenceReport::failed(tol, is_generic(ensemble), vec![e.to_string()]),
    }
}

/// As [`verify_equivalence`] against an already-built measurement.
pub fn verify_equivalence_with(
    op: &ObliviousPovm,
    protocol: &FaithfulRspProtocol,
    ensemble: &Ensemble,
    tol: Tolerance,
) -> EquivalenceReport {
    let genericity = is_generic(ensemble);
    let mut diagnostics = Vec::new();
    if !genericity.generic {
        diagnostics.push(
            Error::NotGeneric {
                rank: genericity.rank,
                required: ensemble.dim() * ensemble.dim(),
            }
            .to_string(),
        );
    }
    if ensemble.dim() != protocol.d() || op.d() != protocol.d() || op.d_prime() != protocol.d_prime() {
        diagnostics.push(format!(
            "dimension mismatch: ensemble {}, measurement {}x{}, protocol {}x{}",
            ensemble.dim(),
            op.d(),
            op.d_prime(),
            protocol.d(),
            protocol.d_prime()
        ));
        return EquivalenceReport::failed(tol, genericity, diagnostics);
    }

    let mut entries = Vec::new();
    for (name, phi) in ensemble.iter() {
        let outcomes = match simulate_modified(op, phi) {
            Ok(o) => o,
            Err(e) => {
                diagnostics.push(format!("state `{name}`: {e}"));
                continue;
            }
        };
        let projector = phi.projector();
        for br in protocol.branches() {
            let Some(outcome) = outcomes.iter().find(|o| o.label == br.label) else {
                diagnostics.push(format!("measurement has no outcome `{}`", br.label));
                continue;
            };
            let state_distance = match &outcome.conditional_state {
                Some(state) => bob_conditional_state(protocol, &projector, &br.label)
                    .and_then(|expected| dist(state, &expected))
                    .ok(),
                None => None,
            };
            entries.push(EquivalenceEntry {
                state: name.to_string(),
                message: br.label.clone(),
                expected_probability: br.probability,
                measured_probability: outcome.probability,
                probability_deviation: (outcome.probability - br.probability).abs(),
                state_distance,
            });
        }
    }
    diagnostics.dedup();

    let max_probability_deviation = entries
        .iter()
        .map(|e| e.probability_deviation)
        .fold(0.0, f64::max);
    let max_state_distance = entries
        .iter()
        .filter_map(|e| e.state_distance)
        .fold(0.0, f64::max);
    let eps = tol.eps();
    if max_probability_deviation > eps {
        diagnostics.push(format!(
            "message probabilities deviate by {max_probability_deviation:.3e}"
        ));
    }
    if max_state_distance > eps {
        diagnostics.push(format!("receiver states deviate by {max_state_distance:.3e}"));
    }
    EquivalenceReport {
        tolerance: eps,
        genericity,
        entries,
        max_probability_deviation,
        max_state_distance,
        passed: diagnostics.is_empty(),
        diagnostics,
    }
}

/// Fidelity of the transmitted entanglement after one message.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MessageFidelity {
    pub message: String,
    pub probability: f64,
    pub fidelity: Option<f64>,
}

/// Result of [`entanglement_transmission`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntanglementReport {
    pub per_message: Vec<MessageFidelity>,
    /// Probability-weighted mean over messages.
    pub mean_fidelity: f64,
    pub min_fidelity: f64,
}

/// Feeds half of `|Phi_d>` through the converted protocol, lets Bob apply
/// `U_m` to his half of the shared pair plus `|0>`, discards `b_m`, and
/// measures the overlap of reference and output with `|Phi_d>`.
pub fn entanglement_transmission(
    op: &ObliviousPovm,
    protocol: &FaithfulRspProtocol,
) -> Result<EntanglementReport> {
    let (d, dp) = (protocol.d(), protocol.d_prime());
    if op.d() != d || op.d_prime() != dp {
        return Err(Error::Shape(
            "measurement does not match protocol dimensions".into(),
        ));
    }
    // reference, input, sender half, receiver half
    let joint = tensor(&max_ent_projector(d), &max_ent_projector(dp));
    let shape = SubsystemShape::new(vec![d, d, dp, dp])?;
    let outcomes = measure_on_subsystem(&joint, &shape, op.povm(), &[1, 2])?;
    let target = PureState::new(max_ent_state(d).as_slice().to_vec())?;

    let mut per_message = Vec::with_capacity(outcomes.len());
    for outcome in outcomes {
        let fidelity = match &outcome.conditional_state {
            None => None,
            Some(state) => match protocol.branch(&outcome.label) {
                Ok(br) => Some(recovered_fidelity(state, br, d, &target)?),
                // failure outcomes carry no recovery
                Err(_) => None,
            },
        };
        per_message.push(MessageFidelity {
            message: outcome.label,
            probability: outcome.probability,
            fidelity,
        });
    }
    let scored: Vec<(f64, f64)> = per_message
        .iter()
        .filter_map(|m| m.fidelity.map(|f| (m.probability, f)))
        .collect();
    let weight: f64 = scored.iter().map(|(p, _)| p).sum();
    let mean_fidelity = scored.iter().map(|(p, f)| p * f).sum::<f64>() / weight;
    let min_fidelity = scored.iter().map(|&(_, f)| f).fold(f64::INFINITY, f64::min);
    Ok(EntanglementReport {
        per_message,
        mean_fidelity,
        min_fidelity,
    })
}

fn recovered_fidelity(
    state: &ComplexMatrix,
    branch: &MessageBranch,
    d: usize,
    target: &PureState,
) -> Result<f64> {
    let k = branch.anc_dim;
    let with_ancilla = tensor(state, &ComplexMatrix::matrix_unit(k, 0, 0));
    let lift = tensor(&ComplexMatrix::identity(d), &branch.unitary);
    let out = &(&lift * &with_ancilla) * &lift.adjoint();
    let shape = SubsystemShape::new(vec![d, d, branch.byproduct_dim()])?;
    let reduced = partial_trace(&out, &shape, &[2])?;
    crate::quantum::fidelity(target, &reduced)
}

/// Converts a valid protocol and runs [`entanglement_transmission`].
pub fn entanglement_transmission_check(
    protocol: &FaithfulRspProtocol,
    tol: Tolerance,
) -> Result<EntanglementReport> {
    let op = build_oblivious_povm(protocol, tol)?;
    entanglement_transmission(&op, protocol)
}

/// Costs of the original and converted protocols side by side.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CostInvarianceReport {
    pub original: CostReport,
    /// From the measured message probabilities averaged over the ensemble.
    pub modified: CostReport,
    pub max_difference: f64,
    /// Largest spread of one message's measured probability across the
    /// ensemble.
    pub probability_spread: f64,
    pub identical: bool,
}

/// Compares the classical cost of `protocol` with that of its conversion
/// measured over a generic `ensemble`.
pub fn cost_invariance_report(
    protocol: &FaithfulRspProtocol,
    ensemble: &Ensemble,
    tol: Tolerance,
) -> Result<CostInvarianceReport> {
    require_generic(ensemble)?;
    let op = build_oblivious_povm(protocol, tol)?;
    let n = protocol.branches().len();
    let mut sums = vec![0.0; n];
    let mut lo = vec![f64::INFINITY; n];
    let mut hi = vec![f64::NEG_INFINITY; n];
    for phi in ensemble.states() {
        let outcomes = simulate_modified(&op, phi)?;
        for (k, br) in protocol.branches().iter().enumerate() {
            let p = outcomes
                .iter()
                .find(|o| o.label == br.label)
                .map(|o| o.probability)
                .ok_or_else(|| Error::UnknownLabel(br.label.clone()))?;
            sums[k] += p;
            lo[k] = lo[k].min(p);
            hi[k] = hi[k].max(p);
        }
    }
    let averaged: Vec<f64> = sums.iter().map(|s| s / ensemble.len() as f64).collect();
    let original = classical_cost(protocol);
    let modified = CostReport::from_probabilities(&averaged);
    let max_difference = original.max_difference(&modified);
    let probability_spread = lo.iter().zip(&hi).map(|(l, h)| h - l).fold(0.0, f64::max);
    Ok(CostInvarianceReport {
        original,
        modified,
        max_difference,
        probability_spread,
        identical: max_difference <= tol.eps() && original.message_count == modified.message_count,
    })
}
