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

//! Simulation and numerical certification of remote state preparation (RSP)
//! protocols.
//!
//! A faithful RSP protocol that uses only forward classical communication,
//! one shared maximally entangled pair, and leaks nothing about the prepared
//! state to the receiver is described by its per-message data
//! `(p_m, U_m, b_m)`. From that data alone [`conversion`] builds a
//! state-independent joint measurement for the sender, and checks that the
//! converted protocol delivers the same messages and the same receiver states
//! as the original.
//!
//! Modules, bottom up:
//!
//! - [`matcore`]: dense complex matrices, tensor products, partial traces.
//! - [`quantum`]: pure states, POVMs, subsystem measurement, ensembles.
//! - [`rsp_model`]: protocol data, validation, teleportation, cost accounting.
//! - [`conversion`]: the oblivious POVM and its verification suites.
//! - [`latitude`]: the latitude-ensemble protocol and its compressed cost.
//! - [`cli`]: the `rsplab` command-line front end.

// Checks are written as `!(x <= eps)` so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod conversion;
pub mod error;
pub mod latitude;
pub mod matcore;
pub mod quantum;
pub mod rsp_model;

pub use error::{Error, Result};
