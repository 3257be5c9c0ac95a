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

use thiserror::Error;

/// Errors raised by the matrix, state and protocol layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("invalid subsystem selection: {0}")]
    Subsystems(String),

    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("invalid tolerance {0}")]
    Tolerance(f64),

    #[error("invalid state: {0}")]
    State(String),

    #[error("invalid POVM: {0}")]
    Povm(String),

    #[error("invalid protocol: {0}")]
    Protocol(String),

    #[error("unknown message label `{0}`")]
    UnknownLabel(String),

    #[error("ensemble is not generic: operator-space rank {rank}, need {required}")]
    NotGeneric { rank: usize, required: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
