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

//! Dense complex matrices with explicit tensor-factor bookkeeping.
//!
//! Composite indices are row-major with the leftmost factor most significant:
//! for factors of dimensions `[d0, d1, ..., dn]` the basis vector
//! `|i0 i1 ... in>` sits at `((i0 * d1 + i1) * d2 + i2) ...`. Every basis is
//! the 0-indexed computational basis, and transposes are taken in it.
//! Factor indices passed to [`partial_trace`], [`embed`] and friends are
//! 0-based positions into a [`SubsystemShape`].

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Hermiticity is judged relative to the largest entry, with this floor.
const HERMITIAN_RTOL: f64 = 1e-9;

/// A numerical tolerance. Always strictly positive.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Tolerance(f64);

impl Tolerance {
    /// Protocol-level checks (probabilities, conditional states).
    pub const PROTOCOL: Tolerance = Tolerance(1e-9);
    /// Purely algebraic identities.
    pub const ALGEBRAIC: Tolerance = Tolerance(1e-12);

    pub fn new(eps: f64) -> Result<Self> {
        if eps.is_finite() && eps > 0.0 {
            Ok(Tolerance(eps))
        } else {
            Err(Error::Tolerance(eps))
        }
    }

    pub fn eps(self) -> f64 {
        self.0
    }

    /// Scales the tolerance by a fixed positive ratio.
    pub fn scaled(self, ratio: f64) -> Self {
        assert!(ratio > 0.0 && ratio.is_finite(), "ratio must be positive");
        Tolerance(self.0 * ratio)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::PROTOCOL
    }
}

impl TryFrom<f64> for Tolerance {
    type Error = Error;

    fn try_from(eps: f64) -> Result<Self> {
        Tolerance::new(eps)
    }
}

impl From<Tolerance> for f64 {
    fn from(t: Tolerance) -> f64 {
        t.0
    }
}

impl fmt::Display for Tolerance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.0)
    }
}

/// Ordered tensor-factor dimensions of a composite space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct SubsystemShape {
    dims: Vec<usize>,
}

impl SubsystemShape {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Shape("subsystem shape needs at least one factor".into()));
        }
        if let Some(pos) = dims.iter().position(|&d| d == 0) {
            return Err(Error::Shape(format!("factor {pos} has dimension 0")));
        }
        Ok(SubsystemShape { dims })
    }

    /// A single factor covering the whole space.
    pub fn single(dim: usize) -> Result<Self> {
        SubsystemShape::new(vec![dim])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn num_factors(&self) -> usize {
        self.dims.len()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// Dimensions of the listed factors, in the order given.
    pub fn select(&self, factors: &[usize]) -> Vec<usize> {
        factors.iter().map(|&f| self.dims[f]).collect()
    }

    /// Factor indices not in `factors`, ascending.
    pub fn complement(&self, factors: &[usize]) -> Vec<usize> {
        (0..self.dims.len()).filter(|f| !factors.contains(f)).collect()
    }

    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.dims.len()];
        for k in (0..self.dims.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * self.dims[k + 1];
        }
        strides
    }

    /// Offsets into the composite index for every multi-index over `factors`
    /// (enumerated row-major in the order given).
    fn offsets(&self, factors: &[usize]) -> Vec<usize> {
        let strides = self.strides();
        let mut out = vec![0usize];
        for &f in factors {
            let mut next = Vec::with_capacity(out.len() * self.dims[f]);
            for &base in &out {
                for digit in 0..self.dims[f] {
                    next.push(base + digit * strides[f]);
                }
            }
            out = next;
        }
        out
    }

    fn check_factors(&self, factors: &[usize]) -> Result<()> {
        for (k, &f) in factors.iter().enumerate() {
            if f >= self.dims.len() {
                return Err(Error::Subsystems(format!(
                    "factor index {f} out of range for {} factors",
                    self.dims.len()
                )));
            }
            if factors[..k].contains(&f) {
                return Err(Error::Subsystems(format!("factor index {f} repeated")));
            }
        }
        Ok(())
    }

    fn check_square(&self, m: &ComplexMatrix) -> Result<()> {
        m.require_square()?;
        if m.rows() != self.total_dim() {
            return Err(Error::Shape(format!(
                "shape {:?} describes dimension {}, matrix is {}x{}",
                self.dims,
                self.total_dim(),
                m.rows(),
                m.cols()
            )));
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for SubsystemShape {
    type Error = Error;

    fn try_from(dims: Vec<usize>) -> Result<Self> {
        SubsystemShape::new(dims)
    }
}

impl From<SubsystemShape> for Vec<usize> {
    fn from(s: SubsystemShape) -> Vec<usize> {
        s.dims
    }
}

/// Dense complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!("empty matrix {rows}x{cols}")));
        }
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(k) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite {
                row: k / cols,
                col: k % cols,
            });
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    /// Builds from real entries, row-major.
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        ComplexMatrix::new(rows, cols, data.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ComplexMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix::from_fn(rows, cols, |_, _| ZERO)
    }

    pub fn identity(n: usize) -> Self {
        ComplexMatrix::from_fn(n, n, |i, j| if i == j { ONE } else { ZERO })
    }

    /// `|i><j|` on a `d`-dimensional space.
    pub fn matrix_unit(d: usize, i: usize, j: usize) -> Self {
        assert!(i < d && j < d, "matrix unit index out of range");
        ComplexMatrix::from_fn(d, d, |r, c| if r == i && c == j { ONE } else { ZERO })
    }

    pub fn diagonal(diag: &[C64]) -> Self {
        let n = diag.len();
        ComplexMatrix::from_fn(n, n, |i, j| if i == j { diag[i] } else { ZERO })
    }

    /// Column vector.
    pub fn column(entries: Vec<C64>) -> Result<Self> {
        let n = entries.len();
        ComplexMatrix::new(n, 1, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn require_same_shape(&self, other: &ComplexMatrix) -> Result<()> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )))
        }
    }

    pub fn try_mul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = vec![ZERO; self.rows * other.cols];
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            let out_row = &mut out[i * other.cols..(i + 1) * other.cols];
            for (k, &a) in row.iter().enumerate() {
                if a == ZERO {
                    continue;
                }
                let other_row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in out_row.iter_mut().zip(other_row) {
                    *o += a * b;
                }
            }
        }
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: other.cols,
            data: out,
        })
    }

    pub fn try_add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.require_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.require_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &ComplexMatrix, f: impl Fn(C64, C64) -> C64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn scale(&self, s: C64) -> ComplexMatrix {
        self.map(|z| z * s)
    }

    pub fn scale_real(&self, s: f64) -> ComplexMatrix {
        self.map(|z| z * s)
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn transpose(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conjugate(&self) -> ComplexMatrix {
        self.map(|z| z.conj())
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `v v^dagger` for a column vector.
    pub fn outer_self(&self) -> Result<ComplexMatrix> {
        if self.cols != 1 {
            return Err(Error::Shape(format!(
                "outer product needs a column vector, got {}x{}",
                self.rows, self.cols
            )));
        }
        let v = &self.data;
        Ok(ComplexMatrix::from_fn(self.rows, self.rows, |i, j| {
            v[i] * v[j].conj()
        }))
    }

    /// Largest deviation from Hermiticity.
    pub fn hermitian_deviation(&self) -> Result<f64> {
        self.require_square()?;
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        Ok(worst)
    }

    pub(crate) fn to_nalgebra(&self) -> DMatrix<C64> {
        DMatrix::from_row_slice(self.rows, self.cols, &self.data)
    }

    pub(crate) fn from_nalgebra(m: &DMatrix<C64>) -> ComplexMatrix {
        ComplexMatrix::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on incompatible shapes; use [`ComplexMatrix::try_mul`] otherwise.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_add(rhs).expect("matrix sum shape mismatch")
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_sub(rhs).expect("matrix difference shape mismatch")
    }
}

/// Kronecker product, `(i1, i2) -> i1 * dim(b) + i2`.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut data = vec![ZERO; rows * cols];
    for ia in 0..a.rows {
        for ja in 0..a.cols {
            let s = a[(ia, ja)];
            if s == ZERO {
                continue;
            }
            for ib in 0..b.rows {
                let r = ia * b.rows + ib;
                for jb in 0..b.cols {
                    data[r * cols + ja * b.cols + jb] = s * b[(ib, jb)];
                }
            }
        }
    }
    ComplexMatrix { rows, cols, data }
}

/// Kronecker product of a sequence, left to right.
pub fn tensor_all(factors: &[&ComplexMatrix]) -> ComplexMatrix {
    let (first, rest) = factors.split_first().expect("at least one factor");
    rest.iter().fold((*first).clone(), |acc, m| tensor(&acc, m))
}

pub fn transpose(m: &ComplexMatrix) -> ComplexMatrix {
    m.transpose()
}

pub fn conjugate(m: &ComplexMatrix) -> ComplexMatrix {
    m.conjugate()
}

pub fn adjoint(m: &ComplexMatrix) -> ComplexMatrix {
    m.adjoint()
}

/// Traces out the listed factors, keeping the rest in their original order.
///
/// `traced` must be a nonempty proper subset of the factor indices.
pub fn partial_trace(m: &ComplexMatrix, shape: &SubsystemShape, traced: &[usize]) -> Result<ComplexMatrix> {
    shape.check_square(m)?;
    shape.check_factors(traced)?;
    if traced.is_empty() {
        return Err(Error::Subsystems("nothing to trace".into()));
    }
    if traced.len() == shape.num_factors() {
        return Err(Error::Subsystems("cannot trace out every factor".into()));
    }
    let kept = shape.complement(traced);
    let kept_off = shape.offsets(&kept);
    let traced_off = shape.offsets(traced);
    let n = kept_off.len();
    let mut out = ComplexMatrix::zeros(n, n);
    for (r, &ro) in kept_off.iter().enumerate() {
        for (c, &co) in kept_off.iter().enumerate() {
            out[(r, c)] = traced_off.iter().map(|&t| m[(ro + t, co + t)]).sum();
        }
    }
    Ok(out)
}

/// Reorders tensor factors: factor `k` of the result is factor `order[k]` of `m`.
pub fn permute_factors(
    m: &ComplexMatrix,
    shape: &SubsystemShape,
    order: &[usize],
) -> Result<(ComplexMatrix, SubsystemShape)> {
    shape.check_square(m)?;
    shape.check_factors(order)?;
    if order.len() != shape.num_factors() {
        return Err(Error::Subsystems(format!(
            "permutation of length {} for {} factors",
            order.len(),
            shape.num_factors()
        )));
    }
    let map = shape.offsets(order);
    let n = map.len();
    let out = ComplexMatrix::from_fn(n, n, |r, c| m[(map[r], map[c])]);
    Ok((out, SubsystemShape::new(shape.select(order))?))
}

/// Extends an operator acting on `factors` (in the order listed) by the
/// identity on every other factor of `shape`.
pub fn embed(op: &ComplexMatrix, shape: &SubsystemShape, factors: &[usize]) -> Result<ComplexMatrix> {
    op.require_square()?;
    shape.check_factors(factors)?;
    let sub_dim: usize = shape.select(factors).iter().product();
    if op.rows() != sub_dim {
        return Err(Error::Shape(format!(
            "operator of dimension {} on factors of total dimension {sub_dim}",
            op.rows()
        )));
    }
    let rest = shape.complement(factors);
    let op_off = shape.offsets(factors);
    let rest_off = shape.offsets(&rest);
    let n = shape.total_dim();
    let mut out = ComplexMatrix::zeros(n, n);
    for &t in &rest_off {
        for (a, &ao) in op_off.iter().enumerate() {
            for (b, &bo) in op_off.iter().enumerate() {
                out[(ao + t, bo + t)] = op[(a, b)];
            }
        }
    }
    Ok(out)
}

/// `|Phi_d> = (1/sqrt d) sum_j |jj>` as a column vector of length `d^2`.
pub fn max_ent_state(d: usize) -> ComplexMatrix {
    assert!(d >= 1, "dimension must be positive");
    let amp = C64::new(1.0 / (d as f64).sqrt(), 0.0);
    let mut v = vec![ZERO; d * d];
    for j in 0..d {
        v[j * d + j] = amp;
    }
    ComplexMatrix {
        rows: d * d,
        cols: 1,
        data: v,
    }
}

/// `|Phi_d><Phi_d|`.
pub fn max_ent_projector(d: usize) -> ComplexMatrix {
    max_ent_state(d).outer_self().expect("column vector")
}

fn hermitian_input(m: &ComplexMatrix) -> Result<DMatrix<C64>> {
    let dev = m.hermitian_deviation()?;
    if dev > HERMITIAN_RTOL * m.max_abs().max(1.0) {
        return Err(Error::NotHermitian { deviation: dev });
    }
    let a = m.to_nalgebra();
    Ok((&a + a.adjoint()) * C64::new(0.5, 0.0))
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let a = hermitian_input(m)?;
    let mut values: Vec<f64> = a.symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Eigenvalues (ascending) and the matching orthonormal eigenvectors as columns.
pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let eig = hermitian_input(m)?.symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vecs = ComplexMatrix::from_fn(m.rows(), m.rows(), |i, j| eig.eigenvectors[(i, order[j])]);
    Ok((values, vecs))
}

/// Hermitian within `tol` and smallest eigenvalue at least `-tol`.
pub fn is_psd(m: &ComplexMatrix, tol: Tolerance) -> Result<bool> {
    m.require_square()?;
    if m.hermitian_deviation()? > tol.eps() {
        return Ok(false);
    }
    let values = hermitian_eigenvalues(m)?;
    Ok(values.first().is_none_or(|&v| v >= -tol.eps()))
}

/// `max |m^dagger m - I| <= tol`.
pub fn is_unitary(m: &ComplexMatrix, tol: Tolerance) -> Result<bool> {
    m.require_square()?;
    let gram = &m.adjoint() * m;
    Ok(dist(&gram, &ComplexMatrix::identity(m.rows()))? <= tol.eps())
}

/// Positive semidefinite with unit trace.
pub fn is_density(m: &ComplexMatrix, tol: Tolerance) -> Result<bool> {
    if !is_psd(m, tol)? {
        return Ok(false);
    }
    Ok((m.trace() - ONE).norm() <= tol.eps())
}

/// Maximum entrywise modulus of `a - b`.
pub fn dist(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    a.require_same_shape(b)?;
    Ok(a.data
        .iter()
        .zip(&b.data)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max))
}

/// Serialized matrix: nested `[re, im]` pairs, row-major, with the row-space
/// factorization in `dims`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub rows: usize,
    pub cols: usize,
    pub dims: Vec<usize>,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixRecord {
    pub fn with_dims(m: &ComplexMatrix, dims: Vec<usize>) -> Self {
        let entries = (0..m.rows)
            .map(|i| (0..m.cols).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
            .collect();
        MatrixRecord {
            rows: m.rows,
            cols: m.cols,
            dims,
            entries,
        }
    }

    pub fn into_matrix(self) -> Result<ComplexMatrix> {
        if self.dims.iter().product::<usize>() != self.rows {
            return Err(Error::Shape(format!(
                "dims {:?} do not factor {} rows",
                self.dims, self.rows
            )));
        }
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::Shape(format!(
                "entries do not form a {}x{} array",
                self.rows, self.cols
            )));
        }
        let data = self
            .entries
            .into_iter()
            .flatten()
            .map(|[re, im]| C64::new(re, im))
            .collect();
        ComplexMatrix::new(self.rows, self.cols, data)
    }
}

impl From<&ComplexMatrix> for MatrixRecord {
    fn from(m: &ComplexMatrix) -> Self {
        MatrixRecord::with_dims(m, vec![m.rows])
    }
}

impl Serialize for ComplexMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRecord::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        MatrixRecord::deserialize(d)?
            .into_matrix()
            .map_err(serde::de::Error::custom)
    }
}

/// Pauli matrices.
pub mod pauli {
    use super::{ComplexMatrix, C64, I, ONE, ZERO};

    pub fn x() -> ComplexMatrix {
        ComplexMatrix::new(2, 2, vec![ZERO, ONE, ONE, ZERO]).unwrap()
    }

    pub fn y() -> ComplexMatrix {
        ComplexMatrix::new(2, 2, vec![ZERO, -I, I, ZERO]).unwrap()
    }

    pub fn z() -> ComplexMatrix {
        ComplexMatrix::new(2, 2, vec![ONE, ZERO, ZERO, C64::new(-1.0, 0.0)]).unwrap()
    }
}
