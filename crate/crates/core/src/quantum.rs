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

//! Pure states, POVMs, subsystem measurement, ensembles and seeded random
//! instances.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{
    dist, embed, hermitian_eigenvalues, is_density, is_psd, partial_trace, pauli, ComplexMatrix,
    MatrixRecord, SubsystemShape, Tolerance, C64, ONE, ZERO,
};

/// Outcomes whose probability falls below this carry no conditional state.
pub const NULL_PROBABILITY: f64 = 1e-12;

/// Singular-value threshold for the operator-space rank of an ensemble.
pub const GENERICITY_THRESHOLD: f64 = 1e-10;

const NORM_TOL: f64 = 1e-12;

/// A normalized state vector, phase-fixed so that its first nonzero amplitude
/// is real and positive.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    amplitudes: Vec<C64>,
}

impl PureState {
    /// Normalizes and phase-fixes `amplitudes`.
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::State("empty amplitude vector".into()));
        }
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::State("non-finite amplitude".into()));
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-300 {
            return Err(Error::State("zero vector".into()));
        }
        let lead = amplitudes
            .iter()
            .find(|z| z.norm() / norm > NORM_TOL)
            .copied()
            .unwrap_or(ONE);
        let phase = lead.conj() / lead.norm();
        let scale = phase / norm;
        Ok(PureState {
            amplitudes: amplitudes.into_iter().map(|z| z * scale).collect(),
        })
    }

    /// Accepts only vectors already normalized to within 1e-12.
    pub fn from_normalized(amplitudes: Vec<C64>) -> Result<Self> {
        let norm_sq = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>();
        if (norm_sq.sqrt() - 1.0).abs() > NORM_TOL {
            return Err(Error::State(format!("norm {} is not 1", norm_sq.sqrt())));
        }
        PureState::new(amplitudes)
    }

    /// Computational basis vector `|k>`.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::State(format!(
                "basis index {k} out of range for dimension {dim}"
            )));
        }
        let mut v = vec![ZERO; dim];
        v[k] = ONE;
        Ok(PureState { amplitudes: v })
    }

    /// Qubit state with the given Bloch vector (normalized internally).
    pub fn from_bloch(x: f64, y: f64, z: f64) -> Result<Self> {
        let r = (x * x + y * y + z * z).sqrt();
        if r < 1e-12 {
            return Err(Error::State("Bloch vector must be nonzero".into()));
        }
        let polar = (z / r).clamp(-1.0, 1.0).acos();
        let azimuth = y.atan2(x);
        Ok(qubit_from_angles(polar, azimuth))
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn as_column(&self) -> ComplexMatrix {
        ComplexMatrix::column(self.amplitudes.clone()).expect("nonempty state")
    }

    /// `|psi><psi|`.
    pub fn projector(&self) -> ComplexMatrix {
        projector(self)
    }
}

fn qubit_from_angles(polar: f64, azimuth: f64) -> PureState {
    let a = C64::new((polar / 2.0).cos(), 0.0);
    let b = C64::from_polar((polar / 2.0).sin(), azimuth);
    PureState::new(vec![a, b]).expect("unit qubit")
}

pub fn projector(psi: &PureState) -> ComplexMatrix {
    psi.as_column().outer_self().expect("column vector")
}

/// Latitude state `(I + cos t cos e X + cos t sin e Y + sin t Z) / 2`, with
/// `theta` the latitude and `eta` the azimuth, both in radians.
pub fn bloch_state(theta: f64, eta: f64) -> PureState {
    qubit_from_angles(std::f64::consts::FRAC_PI_2 - theta, eta)
}

/// `(<X>, <Y>, <Z>)` of a qubit operator.
pub fn bloch_vector(rho: &ComplexMatrix) -> Result<[f64; 3]> {
    if rho.rows() != 2 || rho.cols() != 2 {
        return Err(Error::Shape("Bloch vector needs a 2x2 matrix".into()));
    }
    let expect = |p: ComplexMatrix| (&p * rho).trace().re;
    Ok([expect(pauli::x()), expect(pauli::y()), expect(pauli::z())])
}

/// `<psi| rho |psi>`.
pub fn fidelity(psi: &PureState, rho: &ComplexMatrix) -> Result<f64> {
    rho.require_square()?;
    if rho.rows() != psi.dim() {
        return Err(Error::Shape(format!(
            "state of dimension {} against a {}x{} operator",
            psi.dim(),
            rho.rows(),
            rho.cols()
        )));
    }
    let v = psi.as_column();
    Ok((&(&v.adjoint() * rho) * &v)[(0, 0)].re)
}

/// A labeled POVM on a declared tensor factorization.
#[derive(Clone, Debug, PartialEq)]
pub struct Povm {
    space_shape: SubsystemShape,
    labels: Vec<String>,
    elements: Vec<ComplexMatrix>,
}

impl Povm {
    /// Checks shapes, label uniqueness, positivity and completeness at `tol`.
    pub fn new(
        space_shape: SubsystemShape,
        labels: Vec<String>,
        elements: Vec<ComplexMatrix>,
        tol: Tolerance,
    ) -> Result<Self> {
        let povm = Povm::unchecked(space_shape, labels, elements)?;
        if let Some(k) = povm.first_non_positive(tol)? {
            return Err(Error::Povm(format!(
                "element `{}` is not positive",
                povm.labels[k]
            )));
        }
        let residual = povm.completeness_residual();
        if residual > tol.eps() {
            return Err(Error::Povm(format!(
                "elements sum to identity only within {residual:.3e}"
            )));
        }
        Ok(povm)
    }

    /// Checks shapes and labels only.
    pub(crate) fn unchecked(
        space_shape: SubsystemShape,
        labels: Vec<String>,
        elements: Vec<ComplexMatrix>,
    ) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::Povm("no elements".into()));
        }
        if labels.len() != elements.len() {
            return Err(Error::Povm(format!(
                "{} labels for {} elements",
                labels.len(),
                elements.len()
            )));
        }
        for (k, l) in labels.iter().enumerate() {
            if labels[..k].contains(l) {
                return Err(Error::Povm(format!("duplicate label `{l}`")));
            }
        }
        let n = space_shape.total_dim();
        for (l, e) in labels.iter().zip(&elements) {
            if e.rows() != n || e.cols() != n {
                return Err(Error::Shape(format!(
                    "element `{l}` is {}x{}, space has dimension {n}",
                    e.rows(),
                    e.cols()
                )));
            }
        }
        Ok(Povm {
            space_shape,
            labels,
            elements,
        })
    }

    fn first_non_positive(&self, tol: Tolerance) -> Result<Option<usize>> {
        for (k, e) in self.elements.iter().enumerate() {
            if !is_psd(e, tol)? {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    pub fn space_shape(&self) -> &SubsystemShape {
        &self.space_shape
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> &[ComplexMatrix] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, label: &str) -> Option<&ComplexMatrix> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|k| &self.elements[k])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &ComplexMatrix)> {
        self.labels.iter().map(String::as_str).zip(&self.elements)
    }

    pub fn sum(&self) -> ComplexMatrix {
        let n = self.space_shape.total_dim();
        self.elements
            .iter()
            .fold(ComplexMatrix::zeros(n, n), |acc, e| &acc + e)
    }

    /// `max |sum_m M_m - I|`.
    pub fn completeness_residual(&self) -> f64 {
        let n = self.space_shape.total_dim();
        dist(&self.sum(), &ComplexMatrix::identity(n)).expect("matching shapes")
    }

    /// Smallest eigenvalue over all elements.
    pub fn min_eigenvalue(&self) -> Result<f64> {
        let mut worst = f64::INFINITY;
        for e in &self.elements {
            worst = worst.min(hermitian_eigenvalues(e)?[0]);
        }
        Ok(worst)
    }

    /// Same elements with the two labels' operators exchanged.
    pub fn with_swapped(&self, a: &str, b: &str) -> Result<Povm> {
        let ia = self.position(a)?;
        let ib = self.position(b)?;
        let mut out = self.clone();
        out.elements.swap(ia, ib);
        Ok(out)
    }

    fn position(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn to_record(&self) -> PovmRecord {
        PovmRecord {
            space_shape: self.space_shape.dims().to_vec(),
            labels: self.labels.clone(),
            elements: self
                .elements
                .iter()
                .map(|e| MatrixRecord::with_dims(e, self.space_shape.dims().to_vec()))
                .collect(),
        }
    }

    pub fn from_record(record: PovmRecord, tol: Tolerance) -> Result<Self> {
        let shape = SubsystemShape::new(record.space_shape)?;
        let elements = record
            .elements
            .into_iter()
            .map(MatrixRecord::into_matrix)
            .collect::<Result<Vec<_>>>()?;
        Povm::new(shape, record.labels, elements, tol)
    }
}

/// JSON form of a [`Povm`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PovmRecord {
    pub space_shape: Vec<usize>,
    pub labels: Vec<String>,
    pub elements: Vec<MatrixRecord>,
}

/// One outcome of a measurement on part of a joint system.
#[derive(Clone, Debug)]
pub struct MeasurementOutcome {
    pub label: String,
    pub probability: f64,
    /// Normalized post-measurement state of the unmeasured factors; `None`
    /// when the outcome probability is below [`NULL_PROBABILITY`].
    pub conditional_state: Option<ComplexMatrix>,
}

/// Measures `povm` on the `measured` factors of `joint`.
///
/// The outcome probability is `Tr[(M (x) I) rho]` and the conditional state
/// of the remaining factors is `Tr_measured[(M (x) I) rho] / p`. Measuring
/// every factor leaves the trivial 1x1 state.
pub fn measure_on_subsystem(
    joint: &ComplexMatrix,
    shape: &SubsystemShape,
    povm: &Povm,
    measured: &[usize],
) -> Result<Vec<MeasurementOutcome>> {
    if measured.is_empty() {
        return Err(Error::Subsystems("no measured factors".into()));
    }
    if joint.rows() != shape.total_dim() || !joint.is_square() {
        return Err(Error::Shape(format!(
            "joint state is {}x{}, shape {:?} needs {}",
            joint.rows(),
            joint.cols(),
            shape.dims(),
            shape.total_dim()
        )));
    }
    if measured.iter().any(|&f| f >= shape.num_factors()) {
        return Err(Error::Subsystems(format!(
            "measured factors {measured:?} out of range"
        )));
    }
    if shape.select(measured) != povm.space_shape().dims() {
        return Err(Error::Shape(format!(
            "POVM acts on {:?}, measured factors have dims {:?}",
            povm.space_shape().dims(),
            shape.select(measured)
        )));
    }
    if !is_density(joint, Tolerance::PROTOCOL)? {
        return Err(Error::State("joint input is not a density matrix".into()));
    }
    let everything = measured.len() == shape.num_factors();
    povm.iter()
        .map(|(label, element)| {
            let weighted = &embed(element, shape, measured)? * joint;
            let probability = weighted.trace().re;
            let conditional_state = if probability < NULL_PROBABILITY {
                None
            } else if everything {
                Some(ComplexMatrix::identity(1))
            } else {
                let reduced = partial_trace(&weighted, shape, measured)?;
                let herm = (&reduced + &reduced.adjoint()).scale_real(0.5 / probability);
                Some(herm)
            };
            Ok(MeasurementOutcome {
                label: label.to_string(),
                probability,
                conditional_state,
            })
        })
        .collect()
}

/// A finite labeled set of pure states of a common dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct Ensemble {
    dim: usize,
    states: Vec<PureState>,
    labels: Vec<String>,
}

impl Ensemble {
    pub fn new(states: Vec<PureState>, labels: Vec<String>) -> Result<Self> {
        let first = states
            .first()
            .ok_or_else(|| Error::State("ensemble needs at least one state".into()))?;
        let dim = first.dim();
        if let Some(k) = states.iter().position(|s| s.dim() != dim) {
            return Err(Error::State(format!(
                "state {k} has dimension {}, expected {dim}",
                states[k].dim()
            )));
        }
        if labels.len() != states.len() {
            return Err(Error::State(format!(
                "{} labels for {} states",
                labels.len(),
                states.len()
            )));
        }
        Ok(Ensemble { dim, states, labels })
    }

    /// Labels the states `s0`, `s1`, ...
    pub fn from_states(states: Vec<PureState>) -> Result<Self> {
        let labels = (0..states.len()).map(|k| format!("s{k}")).collect();
        Ensemble::new(states, labels)
    }

    /// The four qubit states with Bloch vectors on a regular tetrahedron.
    pub fn tetrahedron() -> Self {
        let s = 1.0 / 3f64.sqrt();
        let vertices = [(s, s, s), (s, -s, -s), (-s, s, -s), (-s, -s, s)];
        let states = vertices
            .iter()
            .map(|&(x, y, z)| PureState::from_bloch(x, y, z).expect("unit vector"))
            .collect();
        Ensemble::from_states(states).expect("nonempty")
    }

    /// `count` Haar-random pure states of dimension `dim`.
    pub fn random(dim: usize, count: usize, seed: u64) -> Result<Self> {
        if dim == 0 || count == 0 {
            return Err(Error::Parameter("random ensemble needs dim, count >= 1".into()));
        }
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let states = (0..count).map(|_| random_pure_with(&mut rng, dim)).collect();
        Ensemble::from_states(states)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn states(&self) -> &[PureState] {
        &self.states
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &PureState)> {
        self.labels.iter().map(String::as_str).zip(&self.states)
    }

    pub fn to_record(&self) -> EnsembleRecord {
        EnsembleRecord {
            space_shape: vec![self.dim],
            labels: self.labels.clone(),
            states: self
                .states
                .iter()
                .map(|s| MatrixRecord::with_dims(&s.as_column(), vec![self.dim]))
                .collect(),
        }
    }

    pub fn from_record(record: EnsembleRecord) -> Result<Self> {
        let states = record
            .states
            .into_iter()
            .map(|m| {
                let m = m.into_matrix()?;
                if m.cols() != 1 {
                    return Err(Error::Shape("ensemble states must be column vectors".into()));
                }
                PureState::from_normalized(m.as_slice().to_vec())
            })
            .collect::<Result<Vec<_>>>()?;
        let ensemble = Ensemble::new(states, record.labels)?;
        if record.space_shape.iter().product::<usize>() != ensemble.dim {
            return Err(Error::Shape("space_shape does not match state dimension".into()));
        }
        Ok(ensemble)
    }
}

/// JSON form of an [`Ensemble`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EnsembleRecord {
    pub space_shape: Vec<usize>,
    pub labels: Vec<String>,
    pub states: Vec<MatrixRecord>,
}

/// Operator-space rank of an ensemble and whether it spans all operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Genericity {
    pub generic: bool,
    pub rank: usize,
}

/// Rank of the span of the ensemble's projectors, from the Gram matrix
/// `G_jk = Tr(P_j P_k)` with the default singular-value threshold.
pub fn is_generic(e: &Ensemble) -> Genericity {
    is_generic_with_threshold(e, GENERICITY_THRESHOLD)
}

pub fn is_generic_with_threshold(e: &Ensemble, threshold: f64) -> Genericity {
    let n = e.len();
    let gram = DMatrix::<f64>::from_fn(n, n, |j, k| {
        let overlap: C64 = e.states[j]
            .amplitudes()
            .iter()
            .zip(e.states[k].amplitudes())
            .map(|(a, b)| a.conj() * b)
            .sum();
        overlap.norm_sqr()
    });
    let rank = gram.singular_values().iter().filter(|&&s| s > threshold).count();
    Genericity {
        generic: rank == e.dim * e.dim,
        rank,
    }
}

fn gaussian(rng: &mut impl Rng) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Complex Ginibre matrix with standard normal real and imaginary parts.
pub fn gaussian_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| gaussian(rng))
}

pub fn random_pure_with(rng: &mut impl Rng, d: usize) -> PureState {
    PureState::new((0..d).map(|_| gaussian(rng)).collect()).expect("nonzero Gaussian vector")
}

pub fn random_density_with(rng: &mut impl Rng, d: usize) -> ComplexMatrix {
    let g = gaussian_matrix(rng, d, d);
    let w = &g * &g.adjoint();
    let tr = w.trace().re;
    let rho = w.scale_real(1.0 / tr);
    (&rho + &rho.adjoint()).scale_real(0.5)
}

/// Haar unitary: QR of a Ginibre matrix with the phases of `diag(R)` moved
/// into `Q`.
pub fn random_unitary_with(rng: &mut impl Rng, d: usize) -> ComplexMatrix {
    let g = gaussian_matrix(rng, d, d).to_nalgebra();
    let qr = g.qr();
    let (q, r) = (qr.q(), qr.r());
    let mut q = ComplexMatrix::from_nalgebra(&q);
    for j in 0..d {
        let rjj = r[(j, j)];
        let phase = if rjj.norm() > 0.0 { rjj / rjj.norm() } else { ONE };
        for i in 0..d {
            q[(i, j)] *= phase;
        }
    }
    q
}

pub fn random_pure(d: usize, seed: u64) -> PureState {
    random_pure_with(&mut ChaCha20Rng::seed_from_u64(seed), d)
}

pub fn random_density(d: usize, seed: u64) -> ComplexMatrix {
    random_density_with(&mut ChaCha20Rng::seed_from_u64(seed), d)
}

pub fn random_unitary(d: usize, seed: u64) -> ComplexMatrix {
    random_unitary_with(&mut ChaCha20Rng::seed_from_u64(seed), d)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI};

    use super::*;
    use crate::matcore::{is_unitary, max_ent_projector, tensor};

    fn tol(e: f64) -> Tolerance {
        Tolerance::new(e).unwrap()
    }

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn computational_povm() -> Povm {
        Povm::new(
            SubsystemShape::single(2).unwrap(),
            vec!["0".into(), "1".into()],
            vec![
                ComplexMatrix::matrix_unit(2, 0, 0),
                ComplexMatrix::matrix_unit(2, 1, 1),
            ],
            Tolerance::ALGEBRAIC,
        )
        .unwrap()
    }

    fn bell_povm() -> Povm {
        let h = FRAC_1_SQRT_2;
        let vecs = [
            [h, 0.0, 0.0, h],
            [h, 0.0, 0.0, -h],
            [0.0, h, h, 0.0],
            [0.0, h, -h, 0.0],
        ];
        let elements = vecs
            .iter()
            .map(|v| ComplexMatrix::from_real(4, 1, v).unwrap().outer_self().unwrap())
            .collect();
        Povm::new(
            SubsystemShape::new(vec![2, 2]).unwrap(),
            ["phi+", "phi-", "psi+", "psi-"].map(String::from).to_vec(),
            elements,
            tol(1e-12),
        )
        .unwrap()
    }

    #[test]
    fn projector_examples() {
        let p = projector(&PureState::basis(2, 0).unwrap());
        assert_eq!(p, ComplexMatrix::diagonal(&[ONE, ZERO]));
        let plus = PureState::new(vec![ONE, ONE]).unwrap();
        let p = plus.projector();
        assert!(p.as_slice().iter().all(|z| (z - c(0.5, 0.0)).norm() < 1e-15));
        let psi = random_pure(4, 3);
        let p = psi.projector();
        assert!(dist(&(&p * &p), &p).unwrap() < 1e-12);
        assert!((p.trace() - ONE).norm() < 1e-12);
    }

    #[test]
    fn phase_is_canonical() {
        let a = PureState::new(vec![c(0.0, 0.6), c(0.8, 0.0)]).unwrap();
        let b = PureState::new(vec![c(-0.6, 0.0), c(0.0, 0.8)]).unwrap();
        assert!(a.amplitudes()[0].im.abs() < 1e-16 && a.amplitudes()[0].re > 0.0);
        assert!(dist(&a.as_column(), &b.as_column()).unwrap() < 1e-15);
        let leading_zero = PureState::new(vec![ZERO, c(0.0, 2.0)]).unwrap();
        assert_eq!(leading_zero.amplitudes()[1], ONE);
        assert!(PureState::from_normalized(vec![ONE, ONE]).is_err());
        assert!(PureState::new(vec![ZERO, ZERO]).is_err());
    }

    #[test]
    fn measure_maximally_mixed_factor() {
        let rho = tensor(&ComplexMatrix::identity(2).scale_real(0.5), &random_density(3, 1));
        let shape = SubsystemShape::new(vec![2, 3]).unwrap();
        let out = measure_on_subsystem(&rho, &shape, &computational_povm(), &[0]).unwrap();
        assert!((out[0].probability - 0.5).abs() < 1e-14);
        assert!((out[1].probability - 0.5).abs() < 1e-14);
    }

    #[test]
    fn measure_bell_state_in_bell_basis() {
        let shape = SubsystemShape::new(vec![2, 2]).unwrap();
        let out = measure_on_subsystem(&max_ent_projector(2), &shape, &bell_povm(), &[0, 1]).unwrap();
        assert!((out[0].probability - 1.0).abs() < 1e-14);
        assert_eq!(out[0].conditional_state.as_ref().unwrap().rows(), 1);
        assert!(out[1..].iter().all(|o| o.conditional_state.is_none()));
    }

    #[test]
    fn product_inputs_do_not_signal() {
        let rho_a = random_density(2, 11);
        let rho_b = random_density(3, 12);
        let shape = SubsystemShape::new(vec![2, 3]).unwrap();
        let out = measure_on_subsystem(&tensor(&rho_a, &rho_b), &shape, &computational_povm(), &[0]).unwrap();
        let total: f64 = out.iter().map(|o| o.probability).sum();
        assert!((total - 1.0).abs() < 1e-12);
        for o in &out {
            assert!(dist(o.conditional_state.as_ref().unwrap(), &rho_b).unwrap() < 1e-12);
        }
    }

    #[test]
    fn measurement_rejects_mismatches() {
        let shape = SubsystemShape::new(vec![2, 3]).unwrap();
        let rho = ComplexMatrix::identity(6).scale_real(1.0 / 6.0);
        assert!(matches!(
            measure_on_subsystem(&rho, &shape, &computational_povm(), &[1]),
            Err(Error::Shape(_))
        ));
        let not_density = ComplexMatrix::identity(6);
        assert!(matches!(
            measure_on_subsystem(&not_density, &shape, &computational_povm(), &[0]),
            Err(Error::State(_))
        ));
    }

    #[test]
    fn povm_validation() {
        let shape = SubsystemShape::single(2).unwrap();
        let half = ComplexMatrix::identity(2).scale_real(0.5);
        let incomplete = Povm::new(shape.clone(), vec!["a".into()], vec![half.clone()], tol(1e-9));
        assert!(matches!(incomplete, Err(Error::Povm(_))));
        let negative = Povm::new(
            shape.clone(),
            vec!["a".into(), "b".into()],
            vec![
                ComplexMatrix::diagonal(&[c(1.5, 0.0), ONE]),
                ComplexMatrix::diagonal(&[c(-0.5, 0.0), ZERO]),
            ],
            tol(1e-9),
        );
        assert!(matches!(negative, Err(Error::Povm(_))));
        let dup = Povm::new(
            shape,
            vec!["a".into(), "a".into()],
            vec![half.clone(), half],
            tol(1e-9),
        );
        assert!(dup.is_err());
    }

    #[test]
    fn povm_json_round_trip() {
        let p = bell_povm();
        let text = serde_json::to_string(&p.to_record()).unwrap();
        let back = Povm::from_record(serde_json::from_str(&text).unwrap(), tol(1e-12)).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn tetrahedron_is_generic() {
        assert_eq!(
            is_generic(&Ensemble::tetrahedron()),
            Genericity {
                generic: true,
                rank: 4
            }
        );
    }

    #[test]
    fn latitude_octet_spans_three_dimensions() {
        let states = (0..8)
            .map(|k| bloch_state(FRAC_PI_4, k as f64 * FRAC_PI_4))
            .collect();
        let e = Ensemble::from_states(states).unwrap();
        assert_eq!(
            is_generic(&e),
            Genericity {
                generic: false,
                rank: 3
            }
        );
    }

    #[test]
    fn single_state_rank_one() {
        let e = Ensemble::from_states(vec![random_pure(3, 0)]).unwrap();
        assert_eq!(
            is_generic(&e),
            Genericity {
                generic: false,
                rank: 1
            }
        );
    }

    #[test]
    fn duplicates_and_relabeling_keep_rank() {
        let e = Ensemble::tetrahedron();
        let mut states = e.states().to_vec();
        states.push(states[1].clone());
        states.reverse();
        let bigger = Ensemble::from_states(states).unwrap();
        assert_eq!(is_generic(&bigger), is_generic(&e));
    }

    #[test]
    fn random_qutrit_ensemble_is_generic() {
        let e = Ensemble::random(3, 9, 5).unwrap();
        assert_eq!(
            is_generic(&e),
            Genericity {
                generic: true,
                rank: 9
            }
        );
    }

    #[test]
    fn bloch_state_examples() {
        let pole = bloch_state(FRAC_PI_2, 1.234);
        assert!(dist(&pole.as_column(), &PureState::basis(2, 0).unwrap().as_column()).unwrap() < 1e-15);
        let plus = bloch_state(0.0, 0.0);
        let h = c(FRAC_1_SQRT_2, 0.0);
        assert!((plus.amplitudes()[0] - h).norm() < 1e-15);
        assert!((plus.amplitudes()[1] - h).norm() < 1e-15);
        let r = bloch_vector(&bloch_state(FRAC_PI_6, FRAC_PI_3).projector()).unwrap();
        let want = [3f64.sqrt() / 4.0, 0.75, 0.5];
        for (a, b) in r.iter().zip(want) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn bloch_state_matches_formula() {
        for (theta, eta) in [(0.3f64, 1.1f64), (1.2, 5.0), (0.0, 2.0)] {
            let (ct, st) = (f64::cos(theta), f64::sin(theta));
            let formula = &(&(&ComplexMatrix::identity(2) + &pauli::x().scale_real(ct * eta.cos()))
                + &pauli::y().scale_real(ct * eta.sin()))
                + &pauli::z().scale_real(st);
            let got = bloch_state(theta, eta).projector();
            assert!(dist(&got, &formula.scale_real(0.5)).unwrap() < 1e-12);
        }
    }

    #[test]
    fn z_conjugation_rotates_azimuth() {
        let z = pauli::z();
        for (theta, eta) in [(0.2, 0.7), (1.0, 3.9)] {
            let lhs = &(&z * &bloch_state(theta, eta).projector()) * &z;
            let rhs = bloch_state(theta, eta + PI).projector();
            assert!(dist(&lhs, &rhs).unwrap() < 1e-12);
        }
    }

    #[test]
    fn random_generators() {
        assert!(is_unitary(&random_unitary(3, 17), tol(1e-12)).unwrap());
        assert!(is_density(&random_density(4, 17), tol(1e-12)).unwrap());
        assert_eq!(random_unitary(3, 9), random_unitary(3, 9));
        assert_eq!(random_pure(5, 9), random_pure(5, 9));
        assert_ne!(random_pure(5, 9), random_pure(5, 10));
    }

    #[test]
    fn fidelity_examples() {
        let psi = random_pure(3, 4);
        assert!((fidelity(&psi, &psi.projector()).unwrap() - 1.0).abs() < 1e-12);
        let zero = PureState::basis(2, 0).unwrap();
        let mixed = ComplexMatrix::identity(2).scale_real(0.5);
        assert!((fidelity(&zero, &mixed).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(
            fidelity(&zero, &ComplexMatrix::matrix_unit(2, 1, 1)).unwrap(),
            0.0
        );
        assert!(fidelity(&zero, &ComplexMatrix::identity(3)).is_err());
    }
}
