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

//! Faithful RSP protocols in their receiver-side form: for each classical
//! message `m` the probability `p_m`, Bob's recovery unitary `U_m` and the
//! byproduct state `b_m` left next to the prepared state.
//!
//! Bob holds his half of `|Phi_{d'}>` and attaches a `k_m`-dimensional
//! ancilla in `|0>`. `U_m` maps that `d' * k_m` space onto
//! `d * dim(b_m)` and outputs `phi (x) b_m`. Running this backwards, the
//! state Bob held before recovery is
//!
//! ```text
//! rho_{phi m} = Tr_anc[ U_m^dagger (phi (x) b_m) U_m ]
//! ```
//!
//! which is linear in `phi`, so every check here is certified on the `d^2`
//! matrix units instead of sampled states.

use std::collections::HashSet;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::matcore::{
    dist, is_density, is_unitary, partial_trace, tensor, ComplexMatrix, MatrixRecord, SubsystemShape,
    Tolerance, C64, ONE, ZERO,
};
use crate::quantum::{random_unitary_with, NULL_PROBABILITY};

/// `exp(2 pi i k / d)`, exact at multiples of a quarter turn.
pub fn root_of_unity(k: usize, d: usize) -> C64 {
    let k = k % d;
    if (4 * k).is_multiple_of(d) {
        match 4 * k / d {
            0 => ONE,
            1 => C64::new(0.0, 1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, -1.0),
        }
    } else {
        C64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / d as f64)
    }
}

/// Cyclic shift `X|j> = |j+1 mod d>`.
pub fn shift(d: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(d, d, |i, j| if i == (j + 1) % d { ONE } else { ZERO })
}

/// Clock `Z|j> = w^j |j>`.
pub fn clock(d: usize) -> ComplexMatrix {
    let diag: Vec<C64> = (0..d).map(|j| root_of_unity(j, d)).collect();
    ComplexMatrix::diagonal(&diag)
}

/// Heisenberg-Weyl operator `X^a Z^b`.
pub fn weyl(d: usize, a: usize, b: usize) -> ComplexMatrix {
    // X^a Z^b |j> = w^{bj} |j + a>
    ComplexMatrix::from_fn(d, d, |i, j| {
        if i == (j + a) % d {
            root_of_unity(b * j, d)
        } else {
            ZERO
        }
    })
}

pub fn weyl_label(a: usize, b: usize) -> String {
    format!("x{a}z{b}")
}

/// Weyl index pairs in message order: `b` outer, `a` inner.
pub fn weyl_indices(d: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..d).flat_map(move |b| (0..d).map(move |a| (a, b)))
}

/// One classical message and Bob's response to it.
#[derive(Clone, Debug, PartialEq)]
pub struct MessageBranch {
    pub label: String,
    pub probability: f64,
    /// Recovery unitary, `(d * dim(b)) x (d' * anc_dim)`.
    pub unitary: ComplexMatrix,
    /// Byproduct density `b_m`.
    pub byproduct: ComplexMatrix,
    /// Dimension of the ancilla Bob attaches in `|0>`.
    pub anc_dim: usize,
}

impl MessageBranch {
    pub fn new(
        label: impl Into<String>,
        probability: f64,
        unitary: ComplexMatrix,
        byproduct: ComplexMatrix,
        anc_dim: usize,
    ) -> Self {
        MessageBranch {
            label: label.into(),
            probability,
            unitary,
            byproduct,
            anc_dim,
        }
    }

    pub fn byproduct_dim(&self) -> usize {
        self.byproduct.rows()
    }
}

/// The receiver-side description of a faithful protocol.
///
/// Construction checks structure only (shapes, labels). Numerical
/// conditions are checked by [`validate_faithful`].
#[derive(Clone, Debug, PartialEq)]
pub struct FaithfulRspProtocol {
    d: usize,
    d_prime: usize,
    branches: Vec<MessageBranch>,
}

impl FaithfulRspProtocol {
    pub fn new(d: usize, d_prime: usize, branches: Vec<MessageBranch>) -> Result<Self> {
        if d == 0 || d_prime == 0 {
            return Err(Error::Protocol("dimensions must be positive".into()));
        }
        if branches.is_empty() {
            return Err(Error::Protocol("protocol has no messages".into()));
        }
        let mut seen = HashSet::new();
        for br in &branches {
            if !seen.insert(br.label.as_str()) {
                return Err(Error::Protocol(format!("duplicate message label `{}`", br.label)));
            }
            check_branch_shape(br, d, d_prime)?;
        }
        Ok(FaithfulRspProtocol { d, d_prime, branches })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn d_prime(&self) -> usize {
        self.d_prime
    }

    pub fn branches(&self) -> &[MessageBranch] {
        &self.branches
    }

    pub fn labels(&self) -> Vec<&str> {
        self.branches.iter().map(|b| b.label.as_str()).collect()
    }

    pub fn branch(&self, label: &str) -> Result<&MessageBranch> {
        self.branches
            .iter()
            .find(|b| b.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Copy with one branch's recovery unitary replaced.
    pub fn with_branch_unitary(&self, label: &str, unitary: ComplexMatrix) -> Result<Self> {
        let mut branches = self.branches.clone();
        let br = branches
            .iter_mut()
            .find(|b| b.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        br.unitary = unitary;
        FaithfulRspProtocol::new(self.d, self.d_prime, branches)
    }

    /// Copy with the message probabilities replaced, in branch order.
    pub fn with_probabilities(&self, probabilities: &[f64]) -> Result<Self> {
        if probabilities.len() != self.branches.len() {
            return Err(Error::Protocol(format!(
                "{} probabilities for {} branches",
                probabilities.len(),
                self.branches.len()
            )));
        }
        let mut out = self.clone();
        for (b, &p) in out.branches.iter_mut().zip(probabilities) {
            b.probability = p;
        }
        Ok(out)
    }

    /// SHA-256 of the canonical JSON encoding.
    pub fn fingerprint(&self) -> String {
        let bytes = serde_json::to_vec(&ProtocolRecord::from_faithful(self)).expect("serializable");
        hex::encode(Sha256::digest(&bytes))
    }
}

fn check_branch_shape(br: &MessageBranch, d: usize, d_prime: usize) -> Result<()> {
    let l = &br.label;
    if br.anc_dim == 0 {
        return Err(Error::Protocol(format!("branch `{l}`: ancilla dimension is 0")));
    }
    if !br.byproduct.is_square() {
        return Err(Error::Protocol(format!("branch `{l}`: byproduct is not square")));
    }
    if !br.unitary.is_square() {
        return Err(Error::Protocol(format!(
            "branch `{l}`: recovery unitary is not square"
        )));
    }
    let input = d_prime * br.anc_dim;
    let output = d * br.byproduct_dim();
    if input != output {
        return Err(Error::Protocol(format!(
            "branch `{l}`: shape law violated, d' * anc_dim = {input} but d * dim(b) = {output}"
        )));
    }
    if br.unitary.rows() != input {
        return Err(Error::Protocol(format!(
            "branch `{l}`: recovery unitary is {}x{}, expected {input}x{input}",
            br.unitary.rows(),
            br.unitary.cols()
        )));
    }
    Ok(())
}

/// A protocol that fails with probability `p_f`, after which Bob is left
/// with `rho_f` whatever the input. Branch probabilities sum to `1 - p_f`.
#[derive(Clone, Debug, PartialEq)]
pub struct NonFaithfulRspProtocol {
    base: FaithfulRspProtocol,
    failure_probability: f64,
    failure_state: ComplexMatrix,
}

impl NonFaithfulRspProtocol {
    pub fn new(
        base: FaithfulRspProtocol,
        failure_probability: f64,
        failure_state: ComplexMatrix,
    ) -> Result<Self> {
        if !(0.0..1.0).contains(&failure_probability) {
            return Err(Error::Protocol(format!(
                "failure probability {failure_probability} outside [0, 1)"
            )));
        }
        let dp = base.d_prime();
        if failure_state.rows() != dp || failure_state.cols() != dp {
            return Err(Error::Protocol(format!(
                "failure state must be {dp}x{dp}, got {}x{}",
                failure_state.rows(),
                failure_state.cols()
            )));
        }
        Ok(NonFaithfulRspProtocol {
            base,
            failure_probability,
            failure_state,
        })
    }

    pub fn base(&self) -> &FaithfulRspProtocol {
        &self.base
    }

    pub fn failure_probability(&self) -> f64 {
        self.failure_probability
    }

    pub fn failure_state(&self) -> &ComplexMatrix {
        &self.failure_state
    }

    pub fn fingerprint(&self) -> String {
        let bytes = serde_json::to_vec(&ProtocolRecord::from_nonfaithful(self)).expect("serializable");
        hex::encode(Sha256::digest(&bytes))
    }
}

/// Applies the branch map `x -> Tr_anc[U^dagger (x (x) b) U]` to a `d x d`
/// operator.
pub fn branch_map(
    protocol: &FaithfulRspProtocol,
    branch: &MessageBranch,
    x: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    let d = protocol.d();
    if x.rows() != d || x.cols() != d {
        return Err(Error::Shape(format!(
            "input must be {d}x{d}, got {}x{}",
            x.rows(),
            x.cols()
        )));
    }
    let u = &branch.unitary;
    let conjugated = &(&u.adjoint() * &tensor(x, &branch.byproduct)) * u;
    let shape = SubsystemShape::new(vec![protocol.d_prime(), branch.anc_dim])?;
    partial_trace(&conjugated, &shape, &[1])
}

/// Bob's state `rho_{phi m}` before recovery, given message `label`.
pub fn bob_conditional_state(
    protocol: &FaithfulRspProtocol,
    phi: &ComplexMatrix,
    label: &str,
) -> Result<ComplexMatrix> {
    let branch = protocol.branch(label)?;
    branch_map(protocol, branch, phi)
}

/// `sum_m p_m rho_{x m}` for an arbitrary operator `x`.
pub fn averaged_map(protocol: &FaithfulRspProtocol, x: &ComplexMatrix) -> Result<ComplexMatrix> {
    let dp = protocol.d_prime();
    protocol
        .branches()
        .iter()
        .try_fold(ComplexMatrix::zeros(dp, dp), |acc, br| {
            Ok(&acc + &branch_map(protocol, br, x)?.scale_real(br.probability))
        })
}

/// Residual of the averaged map on one matrix unit `|row><col|`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitResidual {
    pub row: usize,
    pub col: usize,
    pub residual: f64,
}

/// Outcome of [`validate_faithful`] / [`validate_nonfaithful`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub tolerance: f64,
    /// Sum of branch probabilities, plus the failure probability if any.
    pub probability_sum: f64,
    /// `|| sum_m p_m rho_{E m} (+ p_f rho_f Tr E) - Tr(E) I/d' ||` per unit `E`.
    pub unit_residuals: Vec<UnitResidual>,
    pub max_residual: f64,
    /// Worst `|| U_m (rho_{E m} (x) |0><0|) U_m^dagger - E (x) b_m ||`.
    pub recovery_residual: f64,
    pub issues: Vec<String>,
    pub passed: bool,
}

impl ValidationReport {
    pub fn summary(&self) -> String {
        if self.passed {
            format!(
                "valid: randomizing-map residual {:.3e}, recovery residual {:.3e}",
                self.max_residual, self.recovery_residual
            )
        } else {
            self.issues.join("; ")
        }
    }
}

/// Checks branch invariants, normalization, the randomizing-map identity on
/// every matrix unit, and exact recovery on every matrix unit.
pub fn validate_faithful(protocol: &FaithfulRspProtocol, tol: Tolerance) -> ValidationReport {
    validate_with_failure(protocol, None, tol)
}

/// As [`validate_faithful`], with the failure arm added to the average.
pub fn validate_nonfaithful(protocol: &NonFaithfulRspProtocol, tol: Tolerance) -> ValidationReport {
    validate_with_failure(
        &protocol.base,
        Some((protocol.failure_probability, &protocol.failure_state)),
        tol,
    )
}

fn validate_with_failure(
    protocol: &FaithfulRspProtocol,
    failure: Option<(f64, &ComplexMatrix)>,
    tol: Tolerance,
) -> ValidationReport {
    let eps = tol.eps();
    let mut issues = Vec::new();
    let (d, dp) = (protocol.d(), protocol.d_prime());

    for br in protocol.branches() {
        let l = &br.label;
        if !(br.probability >= -eps) {
            issues.push(format!("branch `{l}`: negative probability {}", br.probability));
        }
        if !is_unitary(&br.unitary, tol).unwrap_or(false) {
            issues.push(format!("branch `{l}`: recovery operator is not unitary"));
        }
        if !is_density(&br.byproduct, tol).unwrap_or(false) {
            issues.push(format!("branch `{l}`: byproduct is not a density matrix"));
        }
    }
    if let Some((pf, rho_f)) = failure {
        if !(0.0..1.0).contains(&pf) {
            issues.push(format!("failure probability {pf} outside [0, 1)"));
        }
        if !is_density(rho_f, tol).unwrap_or(false) {
            issues.push("failure state is not a density matrix".into());
        }
    }

    let probability_sum: f64 =
        protocol.branches().iter().map(|b| b.probability).sum::<f64>() + failure.map_or(0.0, |(pf, _)| pf);
    if (probability_sum - 1.0).abs() > eps {
        issues.push(format!("probabilities sum to {probability_sum}, not 1"));
    }

    let maximally_mixed = ComplexMatrix::identity(dp).scale_real(1.0 / dp as f64);
    let mut unit_residuals = Vec::with_capacity(d * d);
    let mut recovery_residual = 0.0f64;
    for row in 0..d {
        for col in 0..d {
            let unit = ComplexMatrix::matrix_unit(d, row, col);
            let mut total = ComplexMatrix::zeros(dp, dp);
            for br in protocol.branches() {
                let rho = match branch_map(protocol, br, &unit) {
                    Ok(r) => r,
                    Err(e) => {
                        issues.push(format!("branch `{}`: {e}", br.label));
                        continue;
                    }
                };
                total = &total + &rho.scale_real(br.probability);
                recovery_residual = recovery_residual.max(recovery_error(br, &rho, &unit));
            }
            if let Some((pf, rho_f)) = failure {
                if row == col {
                    total = &total + &rho_f.scale_real(pf);
                }
            }
            let target = if row == col {
                maximally_mixed.clone()
            } else {
                ComplexMatrix::zeros(dp, dp)
            };
            let residual = dist(&total, &target).unwrap_or(f64::INFINITY);
            unit_residuals.push(UnitResidual { row, col, residual });
        }
    }
    let max_residual = unit_residuals.iter().map(|u| u.residual).fold(0.0, f64::max);
    if !(max_residual <= eps) {
        issues.push(format!(
            "randomizing-map residual {max_residual:.3e} exceeds tolerance {eps:e}"
        ));
    }
    if !(recovery_residual <= eps) {
        issues.push(format!(
            "recovery residual {recovery_residual:.3e} exceeds tolerance {eps:e}"
        ));
    }
    ValidationReport {
        tolerance: eps,
        probability_sum,
        unit_residuals,
        max_residual,
        recovery_residual,
        passed: issues.is_empty(),
        issues,
    }
}

fn recovery_error(br: &MessageBranch, rho: &ComplexMatrix, unit: &ComplexMatrix) -> f64 {
    let ancilla = ComplexMatrix::matrix_unit(br.anc_dim, 0, 0);
    let forward = &(&br.unitary * &tensor(rho, &ancilla)) * &br.unitary.adjoint();
    dist(&forward, &tensor(unit, &br.byproduct)).unwrap_or(f64::INFINITY)
}

/// Qudit teleportation: `d^2` equiprobable messages with Bob applying
/// `X^a Z^b`, no ancilla and a trivial byproduct.
pub fn make_teleportation(d: usize) -> Result<FaithfulRspProtocol> {
    if d < 2 {
        return Err(Error::Parameter(format!("teleportation needs d >= 2, got {d}")));
    }
    let p = 1.0 / (d * d) as f64;
    let branches = weyl_indices(d)
        .map(|(a, b)| MessageBranch::new(weyl_label(a, b), p, weyl(d, a, b), ComplexMatrix::identity(1), 1))
        .collect();
    FaithfulRspProtocol::new(d, d, branches)
}

/// A random valid protocol with `d' = d` and an `anc_dim`-dimensional
/// ancilla: `U_m = (X^a Z^b S) (x) V_m` with one Haar unitary `S` shared by
/// all branches and per-branch Haar `V_m`, and byproduct `V_m|0><0|V_m^dagger`.
pub fn random_valid_protocol(d: usize, anc_dim: usize, seed: u64) -> Result<FaithfulRspProtocol> {
    if d < 2 || anc_dim < 1 {
        return Err(Error::Parameter(format!(
            "random protocol needs d >= 2 and anc_dim >= 1, got d = {d}, anc_dim = {anc_dim}"
        )));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let shared = random_unitary_with(&mut rng, d);
    let p = 1.0 / (d * d) as f64;
    let ground = ComplexMatrix::matrix_unit(anc_dim, 0, 0);
    let branches = weyl_indices(d)
        .map(|(a, b)| {
            let v = random_unitary_with(&mut rng, anc_dim);
            let byproduct = &(&v * &ground) * &v.adjoint();
            let u = tensor(&(&weyl(d, a, b) * &shared), &v);
            MessageBranch::new(weyl_label(a, b), p, u, byproduct, anc_dim)
        })
        .collect();
    FaithfulRspProtocol::new(d, d, branches)
}

/// Classical communication cost of a message distribution.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CostReport {
    /// `log2` of the number of messages sent with nonzero probability.
    pub worst_case_bits: f64,
    /// Shannon entropy of the message distribution, in bits.
    pub entropy_bits: f64,
    pub message_count: usize,
}

impl CostReport {
    /// Messages with probability below [`NULL_PROBABILITY`] are not counted.
    pub fn from_probabilities(probabilities: &[f64]) -> Self {
        let live: Vec<f64> = probabilities
            .iter()
            .copied()
            .filter(|&p| p >= NULL_PROBABILITY)
            .collect();
        let entropy_bits = live.iter().map(|&p| -p * p.log2()).sum::<f64>().max(0.0);
        CostReport {
            worst_case_bits: (live.len().max(1) as f64).log2(),
            entropy_bits,
            message_count: live.len(),
        }
    }

    pub fn max_difference(&self, other: &CostReport) -> f64 {
        (self.worst_case_bits - other.worst_case_bits)
            .abs()
            .max((self.entropy_bits - other.entropy_bits).abs())
    }
}

/// Anything with a classical message distribution.
pub trait MessageDistribution {
    fn message_probabilities(&self) -> Vec<f64>;
}

impl MessageDistribution for FaithfulRspProtocol {
    fn message_probabilities(&self) -> Vec<f64> {
        self.branches.iter().map(|b| b.probability).collect()
    }
}

impl MessageDistribution for NonFaithfulRspProtocol {
    /// The failure flag counts as one more message.
    fn message_probabilities(&self) -> Vec<f64> {
        let mut p = self.base.message_probabilities();
        p.push(self.failure_probability);
        p
    }
}

pub fn classical_cost(protocol: &impl MessageDistribution) -> CostReport {
    CostReport::from_probabilities(&protocol.message_probabilities())
}

/// JSON form of one branch.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BranchRecord {
    pub label: String,
    pub p: f64,
    #[serde(rename = "U")]
    pub u: MatrixRecord,
    pub b: MatrixRecord,
    pub anc_dim: usize,
}

/// JSON form of a protocol; `p_f` and `rho_f` are present only for
/// nonfaithful protocols.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProtocolRecord {
    pub d: usize,
    pub d_prime: usize,
    pub branches: Vec<BranchRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_f: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho_f: Option<MatrixRecord>,
}

impl ProtocolRecord {
    pub fn from_faithful(p: &FaithfulRspProtocol) -> Self {
        ProtocolRecord {
            d: p.d,
            d_prime: p.d_prime,
            branches: p
                .branches
                .iter()
                .map(|b| BranchRecord {
                    label: b.label.clone(),
                    p: b.probability,
                    u: MatrixRecord::with_dims(&b.unitary, vec![p.d, b.byproduct_dim()]),
                    b: MatrixRecord::with_dims(&b.byproduct, vec![b.byproduct_dim()]),
                    anc_dim: b.anc_dim,
                })
                .collect(),
            p_f: None,
            rho_f: None,
        }
    }

    pub fn from_nonfaithful(p: &NonFaithfulRspProtocol) -> Self {
        let mut rec = ProtocolRecord::from_faithful(&p.base);
        rec.p_f = Some(p.failure_probability);
        rec.rho_f = Some(MatrixRecord::with_dims(&p.failure_state, vec![p.base.d_prime]));
        rec
    }

    pub fn into_protocol(self) -> Result<AnyProtocol> {
        let branches = self
            .branches
            .into_iter()
            .map(|b| {
                Ok(MessageBranch::new(
                    b.label,
                    b.p,
                    b.u.into_matrix()?,
                    b.b.into_matrix()?,
                    b.anc_dim,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let base = FaithfulRspProtocol::new(self.d, self.d_prime, branches)?;
        match (self.p_f, self.rho_f) {
            (None, None) => Ok(AnyProtocol::Faithful(base)),
            (Some(pf), Some(rho)) => Ok(AnyProtocol::NonFaithful(NonFaithfulRspProtocol::new(
                base,
                pf,
                rho.into_matrix()?,
            )?)),
            _ => Err(Error::Protocol("`p_f` and `rho_f` must appear together".into())),
        }
    }
}

/// A protocol loaded from JSON.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyProtocol {
    Faithful(FaithfulRspProtocol),
    NonFaithful(NonFaithfulRspProtocol),
}

impl AnyProtocol {
    pub fn to_record(&self) -> ProtocolRecord {
        match self {
            AnyProtocol::Faithful(p) => ProtocolRecord::from_faithful(p),
            AnyProtocol::NonFaithful(p) => ProtocolRecord::from_nonfaithful(p),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_record()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str::<ProtocolRecord>(text)?.into_protocol()
    }

    pub fn load(path: &Path) -> Result<Self> {
        AnyProtocol::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self, tol: Tolerance) -> ValidationReport {
        match self {
            AnyProtocol::Faithful(p) => validate_faithful(p, tol),
            AnyProtocol::NonFaithful(p) => validate_nonfaithful(p, tol),
        }
    }

    pub fn cost(&self) -> CostReport {
        match self {
            AnyProtocol::Faithful(p) => classical_cost(p),
            AnyProtocol::NonFaithful(p) => classical_cost(p),
        }
    }
}
