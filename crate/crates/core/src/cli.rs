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

//! The `rsplab` command-line front end.
//!
//! Subcommands write one JSON document (to `--out` or standard output) and a
//! short human summary. Exit codes: 0 when every check passes, 1 for usage,
//! I/O and parse errors, 2 when a mathematical check fails.
//!
//! `--tol` (or `RSPLAB_TOL`) sets one tolerance. Protocol validation and POVM
//! completeness run at a tenth of it; equivalence, cost and fidelity checks
//! run at the full value.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::conversion::{
    build_nonfaithful_povm, build_oblivious_povm, cost_invariance_report, entanglement_transmission,
    require_generic, simulate_modified, verify_equivalence_with, CostInvarianceReport, EntanglementReport,
    EquivalenceReport, ObliviousPovm, ObliviousPovmRecord, FAILURE_LABEL,
};
use crate::error::Error;
use crate::latitude::{
    cost_table, crossover_probability, latitude_ensemble, theta_for_failure_probability, CostTableRow,
    LatitudeProtocol,
};
use crate::matcore::Tolerance;
use crate::quantum::{is_generic, Ensemble, Genericity};
use crate::rsp_model::{
    make_teleportation, random_valid_protocol, AnyProtocol, CostReport, ValidationReport,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CHECK: i32 = 2;

/// Ratio of the validation and completeness tolerance to `--tol`.
pub const VALIDATION_RATIO: f64 = 0.1;

#[derive(Debug, Parser)]
#[command(name = "rsplab", version, about = "Remote state preparation protocol toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a protocol file.
    Gen(GenArgs),
    /// Build the oblivious POVM of a protocol file.
    Convert(ConvertArgs),
    /// Run the verification suites against a protocol.
    Verify(VerifyArgs),
    /// Tabulate the latitude protocol's cost.
    Latitude(LatitudeArgs),
    /// Report the classical cost of a protocol file.
    Cost(CostArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long, env = "RSPLAB_TOL", default_value_t = Tolerance::PROTOCOL.eps())]
    pub tol: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Leave the timestamp out of reports.
    #[arg(long)]
    pub no_timestamp: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Teleport,
    Random,
}

#[derive(Debug, Clone, Args)]
pub struct Dims {
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long)]
    pub d_prime: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub anc: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub kind: GenKind,
    #[command(flatten)]
    pub dims: Dims,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    pub protocol: PathBuf,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A protocol file, or one of `teleport`, `random`, `latitude`.
    pub target: String,
    /// `tetrahedron`, `random-N` or `latitude:THETA:COUNT`.
    #[arg(long)]
    pub ensemble: Option<EnsembleSpec>,
    /// Use this oblivious POVM instead of building one.
    #[arg(long)]
    pub povm: Option<PathBuf>,
    #[command(flatten)]
    pub dims: Dims,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct LatitudeArgs {
    /// Comma-separated latitudes in radians.
    #[arg(long, value_delimiter = ',', conflicts_with = "p_grid")]
    pub grid: Option<Vec<f64>>,
    /// Comma-separated fallback probabilities in `[0, 1/2]`.
    #[arg(long, value_delimiter = ',')]
    pub p_grid: Option<Vec<f64>>,
    #[arg(long, default_value_t = 1)]
    pub n: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CostArgs {
    pub protocol: PathBuf,
    #[command(flatten)]
    pub common: Common,
}

/// Which input states a verification runs over.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EnsembleSpec {
    Tetrahedron,
    Random(usize),
    Latitude { theta: f64, count: usize },
}

impl EnsembleSpec {
    /// Random ensembles are drawn in dimension `d`; the others are qubit
    /// ensembles.
    pub fn build(&self, d: usize, seed: u64) -> crate::Result<Ensemble> {
        match *self {
            EnsembleSpec::Tetrahedron => Ok(Ensemble::tetrahedron()),
            EnsembleSpec::Random(n) => Ensemble::random(d, n, seed),
            EnsembleSpec::Latitude { theta, count } => latitude_ensemble(theta, count),
        }
    }
}

impl fmt::Display for EnsembleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnsembleSpec::Tetrahedron => write!(f, "tetrahedron"),
            EnsembleSpec::Random(n) => write!(f, "random-{n}"),
            EnsembleSpec::Latitude { theta, count } => write!(f, "latitude:{theta}:{count}"),
        }
    }
}

impl FromStr for EnsembleSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "tetrahedron" {
            return Ok(EnsembleSpec::Tetrahedron);
        }
        if let Some(n) = s.strip_prefix("random-") {
            let n: usize = n.parse().map_err(|_| format!("bad state count in `{s}`"))?;
            if n == 0 {
                return Err("random ensemble needs at least one state".into());
            }
            return Ok(EnsembleSpec::Random(n));
        }
        if let Some(rest) = s.strip_prefix("latitude:") {
            let (theta, count) = rest
                .split_once(':')
                .ok_or_else(|| format!("expected latitude:THETA:COUNT, got `{s}`"))?;
            let theta: f64 = theta.parse().map_err(|_| format!("bad latitude in `{s}`"))?;
            let count: usize = count.parse().map_err(|_| format!("bad state count in `{s}`"))?;
            return Ok(EnsembleSpec::Latitude { theta, count });
        }
        Err(format!(
            "unknown ensemble `{s}`; expected tetrahedron, random-N or latitude:THETA:COUNT"
        ))
    }
}

/// Resolved settings for one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub tolerance: Tolerance,
    pub seed: u64,
    pub d: usize,
    pub d_prime: usize,
    pub anc: usize,
    pub ensemble: EnsembleSpec,
    pub output_path: Option<PathBuf>,
    pub timestamp: bool,
}

/// A failed command and its exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Check(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Check(_) => EXIT_CHECK,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Check(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    /// Writes `json` to `path`, or to standard output when there is none;
    /// `summary` goes to whichever stream is left.
    fn emit(&mut self, path: Option<&Path>, json: &str, summary: &str) -> Result<(), Failure> {
        match path {
            Some(p) => {
                std::fs::write(p, json)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display())))?;
                self.line(summary);
            }
            None => {
                let _ = self.out.write_all(json.as_bytes());
                self.diag(summary);
            }
        }
        Ok(())
    }

    fn line(&mut self, s: &str) {
        if !s.is_empty() {
            let _ = writeln!(self.out, "{s}");
        }
    }

    fn diag(&mut self, s: &str) {
        if !s.is_empty() {
            let _ = writeln!(self.err, "{s}");
        }
    }
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn timestamp(enabled: bool) -> Option<u64> {
    enabled.then(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0)
    })
}

fn tolerance(eps: f64) -> Result<Tolerance, Failure> {
    Tolerance::new(eps).map_err(|e| Failure::Usage(e.to_string()))
}

fn load_protocol(path: &Path) -> Result<AnyProtocol, Failure> {
    AnyProtocol::load(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let mut io = Io { out, err };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(&a, &mut io),
        Command::Convert(a) => cmd_convert(&a, &mut io),
        Command::Verify(a) => cmd_verify(&a, &mut io),
        Command::Latitude(a) => cmd_latitude(&a, &mut io),
        Command::Cost(a) => cmd_cost(&a, &mut io),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            io.diag(&format!("error: {}", f.message()));
            f.code()
        }
    }
}

fn generate(kind: GenKind, dims: &Dims) -> Result<AnyProtocol, Failure> {
    if let Some(dp) = dims.d_prime {
        if dp != dims.d {
            return Err(Failure::Usage(format!(
                "generated protocols have d' = d, got d = {}, d' = {dp}",
                dims.d
            )));
        }
    }
    let p = match kind {
        GenKind::Teleport => make_teleportation(dims.d)?,
        GenKind::Random => random_valid_protocol(dims.d, dims.anc, dims.seed)?,
    };
    Ok(AnyProtocol::Faithful(p))
}

fn cmd_gen(a: &GenArgs, io: &mut Io) -> Outcome {
    let protocol = generate(a.kind, &a.dims)?;
    let summary = format!(
        "{} protocol: d = {}, {} messages",
        match a.kind {
            GenKind::Teleport => "teleportation",
            GenKind::Random => "random",
        },
        a.dims.d,
        a.dims.d * a.dims.d
    );
    let mut json = protocol.to_json();
    json.push('\n');
    io.emit(a.out.as_deref(), &json, &summary)?;
    Ok(EXIT_PASS)
}

fn build_povm(protocol: &AnyProtocol, tol: Tolerance) -> crate::Result<ObliviousPovm> {
    match protocol {
        AnyProtocol::Faithful(p) => build_oblivious_povm(p, tol),
        AnyProtocol::NonFaithful(p) => build_nonfaithful_povm(p, tol),
    }
}

fn cmd_convert(a: &ConvertArgs, io: &mut Io) -> Outcome {
    let tol = tolerance(a.common.tol)?;
    let protocol = load_protocol(&a.protocol)?;
    let check_tol = tol.scaled(VALIDATION_RATIO);
    let report = protocol.validate(check_tol);
    if !report.passed {
        return Err(Failure::Check(format!(
            "{}: protocol failed validation: {}",
            a.protocol.display(),
            report.summary()
        )));
    }
    let op = build_povm(&protocol, check_tol).map_err(|e| Failure::Check(e.to_string()))?;
    let summary = format!(
        "{} elements; completeness residual {:.3e}; min eigenvalue {:.3e}",
        op.povm().len(),
        op.transposed_completeness_residual(),
        op.min_eigenvalue()?
    );
    io.emit(a.common.out.as_deref(), &to_json(&op.to_record()), &summary)?;
    Ok(EXIT_PASS)
}

fn cmd_cost(a: &CostArgs, io: &mut Io) -> Outcome {
    let protocol = load_protocol(&a.protocol)?;
    let cost = protocol.cost();
    let summary = format!(
        "{} messages: {:.6} bits worst case, {:.6} bits entropy",
        cost.message_count, cost.worst_case_bits, cost.entropy_bits
    );
    io.emit(a.common.out.as_deref(), &to_json(&cost), &summary)?;
    Ok(EXIT_PASS)
}

/// Latitude-protocol section of a verify report.
#[derive(Debug, Serialize)]
pub struct LatitudeCheck {
    pub theta: f64,
    pub p: f64,
    pub degenerate: bool,
    /// Largest deviation of an outcome probability from `((1-p)/2, (1-p)/2, p)`.
    pub max_probability_deviation: f64,
    pub min_fidelity: f64,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub command: &'static str,
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fingerprint: Option<String>,
    pub tolerance: f64,
    pub seed: u64,
    pub ensemble: String,
    pub genericity: Genericity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equivalence: Option<EquivalenceReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entanglement: Option<EntanglementReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub original_cost: Option<CostReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cost_invariance: Option<CostInvarianceReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub latitude: Option<LatitudeCheck>,
    pub diagnostics: Vec<String>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl VerifyReport {
    fn new(source: String, config: &RunConfig, genericity: Genericity) -> Self {
        VerifyReport {
            command: "verify",
            source,
            fingerprint: None,
            tolerance: config.tolerance.eps(),
            seed: config.seed,
            ensemble: config.ensemble.to_string(),
            genericity,
            validation: None,
            equivalence: None,
            entanglement: None,
            original_cost: None,
            cost_invariance: None,
            latitude: None,
            diagnostics: Vec::new(),
            passed: false,
            timestamp: timestamp(config.timestamp),
        }
    }
}

fn is_latitude_target(target: &str) -> bool {
    matches!(target, "latitude" | "latitude-protocol")
}

fn default_ensemble(target: &str, d: usize) -> EnsembleSpec {
    if is_latitude_target(target) {
        EnsembleSpec::Latitude {
            theta: 0.5,
            count: 16,
        }
    } else if d == 2 {
        EnsembleSpec::Tetrahedron
    } else {
        EnsembleSpec::Random((d * d).max(10))
    }
}

fn cmd_verify(a: &VerifyArgs, io: &mut Io) -> Outcome {
    let tol = tolerance(a.common.tol)?;
    let (source, protocol) = match a.target.as_str() {
        t if is_latitude_target(t) => (t.to_string(), None),
        "teleport" => (
            "teleport".to_string(),
            Some(generate(GenKind::Teleport, &a.dims)?),
        ),
        "random" => ("random".to_string(), Some(generate(GenKind::Random, &a.dims)?)),
        path => (path.to_string(), Some(load_protocol(Path::new(path))?)),
    };
    let d = match &protocol {
        Some(AnyProtocol::Faithful(p)) => p.d(),
        Some(AnyProtocol::NonFaithful(p)) => p.base().d(),
        None => 2,
    };
    let d_prime = match &protocol {
        Some(AnyProtocol::Faithful(p)) => p.d_prime(),
        Some(AnyProtocol::NonFaithful(p)) => p.base().d_prime(),
        None => 2,
    };
    let config = RunConfig {
        tolerance: tol,
        seed: a.dims.seed,
        d,
        d_prime,
        anc: a.dims.anc,
        ensemble: a.ensemble.unwrap_or_else(|| default_ensemble(&a.target, d)),
        output_path: a.common.out.clone(),
        timestamp: !a.common.no_timestamp,
    };
    let ensemble = config.ensemble.build(d, config.seed)?;
    if ensemble.dim() != d {
        return Err(Failure::Usage(format!(
            "ensemble `{}` has dimension {}, protocol has d = {d}",
            config.ensemble,
            ensemble.dim()
        )));
    }
    let mut report = VerifyReport::new(source, &config, is_generic(&ensemble));
    match protocol {
        Some(p) => verify_protocol(&p, &ensemble, a.povm.as_deref(), &config, &mut report)?,
        None => verify_latitude(&ensemble, &config, &mut report)?,
    }
    report.passed = report.diagnostics.is_empty();

    let summary = if report.passed {
        format!("verify {}: all checks passed", report.source)
    } else {
        format!("verify {}: FAILED", report.source)
    };
    for d in &report.diagnostics {
        io.diag(d);
    }
    io.emit(config.output_path.as_deref(), &to_json(&report), &summary)?;
    Ok(if report.passed { EXIT_PASS } else { EXIT_CHECK })
}

fn verify_protocol(
    protocol: &AnyProtocol,
    ensemble: &Ensemble,
    povm: Option<&Path>,
    config: &RunConfig,
    report: &mut VerifyReport,
) -> Result<(), Failure> {
    let tol = config.tolerance;
    let check_tol = tol.scaled(VALIDATION_RATIO);
    let (base, failure) = match protocol {
        AnyProtocol::Faithful(p) => {
            report.fingerprint = Some(p.fingerprint());
            (p, None)
        }
        AnyProtocol::NonFaithful(p) => {
            report.fingerprint = Some(p.fingerprint());
            (p.base(), Some(p.failure_probability()))
        }
    };
    report.original_cost = Some(protocol.cost());
    let validation = protocol.validate(check_tol);
    let valid = validation.passed;
    if !valid {
        report
            .diagnostics
            .push(format!("protocol failed validation: {}", validation.summary()));
    }
    report.validation = Some(validation);
    if !valid {
        return Ok(());
    }

    let op = match povm {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let record: ObliviousPovmRecord = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            ObliviousPovm::from_record(record, check_tol).map_err(|e| Failure::Check(e.to_string()))?
        }
        None => build_povm(protocol, check_tol).map_err(|e| Failure::Check(e.to_string()))?,
    };

    let equivalence = verify_equivalence_with(&op, base, ensemble, tol);
    report.diagnostics.extend(equivalence.diagnostics.iter().cloned());
    report.equivalence = Some(equivalence);

    if let Some(pf) = failure {
        for (name, phi) in ensemble.iter() {
            let measured = simulate_modified(&op, phi)?
                .into_iter()
                .find(|o| o.label == FAILURE_LABEL)
                .map_or(0.0, |o| o.probability);
            if (measured - pf).abs() > tol.eps() {
                report.diagnostics.push(format!(
                    "state `{name}`: failure probability {measured} differs from {pf}"
                ));
            }
        }
    }

    let entanglement = entanglement_transmission(&op, base)?;
    if !(entanglement.min_fidelity >= 1.0 - tol.eps()) {
        report.diagnostics.push(format!(
            "entanglement fidelity {:.6} below 1",
            entanglement.min_fidelity
        ));
    }
    report.entanglement = Some(entanglement);

    if failure.is_none() && report.genericity.generic {
        let cost = cost_invariance_report(base, ensemble, tol).map_err(|e| Failure::Check(e.to_string()))?;
        if !cost.identical {
            report.diagnostics.push(format!(
                "classical cost changed by {:.3e} bits",
                cost.max_difference
            ));
        }
        report.cost_invariance = Some(cost);
    }
    report.diagnostics.dedup();
    Ok(())
}

fn verify_latitude(
    ensemble: &Ensemble,
    config: &RunConfig,
    report: &mut VerifyReport,
) -> Result<(), Failure> {
    let EnsembleSpec::Latitude { theta, .. } = config.ensemble else {
        return Err(Failure::Usage(
            "the latitude protocol needs a latitude:THETA:COUNT ensemble".into(),
        ));
    };
    let protocol = LatitudeProtocol::new(theta)?;
    let p = protocol.failure_probability();
    let expected = [(1.0 - p) / 2.0, (1.0 - p) / 2.0, p];
    let mut max_probability_deviation = 0.0f64;
    let mut min_fidelity = f64::INFINITY;
    for (k, _) in ensemble.iter().enumerate() {
        let eta = 2.0 * std::f64::consts::PI * k as f64 / ensemble.len() as f64;
        for (o, want) in protocol.simulate(eta)?.iter().zip(expected) {
            max_probability_deviation = max_probability_deviation.max((o.probability - want).abs());
            if let Some(f) = o.fidelity {
                min_fidelity = min_fidelity.min(f);
            }
        }
    }
    let eps = config.tolerance.eps();
    if max_probability_deviation > eps {
        report.diagnostics.push(format!(
            "latitude outcome probabilities deviate by {max_probability_deviation:.3e}"
        ));
    }
    if !(min_fidelity >= 1.0 - eps) {
        report
            .diagnostics
            .push(format!("latitude fidelity {min_fidelity:.6} below 1"));
    }
    report.latitude = Some(LatitudeCheck {
        theta: protocol.theta(),
        p,
        degenerate: protocol.is_degenerate(),
        max_probability_deviation,
        min_fidelity,
    });
    if let Err(e) = require_generic(ensemble) {
        report
            .diagnostics
            .push(format!("conversion precondition failed: {e}"));
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct LatitudeRow {
    #[serde(flatten)]
    pub row: CostTableRow,
    pub total_bits: f64,
}

#[derive(Debug, Serialize)]
pub struct LatitudeReport {
    pub command: &'static str,
    pub n: u64,
    pub crossover_p: f64,
    pub crossover_theta: f64,
    pub rows: Vec<LatitudeRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

fn default_grid() -> Vec<f64> {
    let mut g: Vec<f64> = (0..16).map(|k| k as f64 / 10.0).collect();
    g.push(std::f64::consts::FRAC_PI_2);
    g
}

fn cmd_latitude(a: &LatitudeArgs, io: &mut Io) -> Outcome {
    if a.n == 0 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    let thetas = match (&a.grid, &a.p_grid) {
        (Some(g), _) => g.clone(),
        (None, Some(ps)) => ps
            .iter()
            .map(|&p| theta_for_failure_probability(p))
            .collect::<crate::Result<_>>()?,
        (None, None) => default_grid(),
    };
    if thetas.is_empty() {
        return Err(Failure::Usage("empty latitude grid".into()));
    }
    let rows = cost_table(&thetas)?;
    let crossover_p = crossover_probability();
    let report = LatitudeReport {
        command: "latitude",
        n: a.n,
        crossover_p,
        crossover_theta: theta_for_failure_probability(crossover_p)?,
        rows: rows
            .into_iter()
            .map(|row| LatitudeRow {
                total_bits: row.cost_per_qubit * a.n as f64,
                row,
            })
            .collect(),
        timestamp: timestamp(!a.common.no_timestamp),
    };

    let mut summary = String::from("theta       p         H(p)      bits/qubit\n");
    for r in &report.rows {
        summary.push_str(&format!(
            "{:<10.6}  {:<8.6}  {:<8.6}  {:<10.6}{}\n",
            r.row.theta,
            r.row.p,
            r.row.entropy,
            r.row.cost_per_qubit,
            if r.row.beats_teleportation { "  < 2" } else { "" }
        ));
    }
    summary.push_str(&format!(
        "cheaper than teleportation for p < {:.6} (theta < {:.6})",
        report.crossover_p, report.crossover_theta
    ));
    io.emit(a.common.out.as_deref(), &to_json(&report), &summary)?;
    Ok(EXIT_PASS)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("rsplab").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn ensemble_specs_parse() {
        assert_eq!("tetrahedron".parse(), Ok(EnsembleSpec::Tetrahedron));
        assert_eq!("random-12".parse(), Ok(EnsembleSpec::Random(12)));
        assert_eq!(
            "latitude:0.25:8".parse(),
            Ok(EnsembleSpec::Latitude {
                theta: 0.25,
                count: 8
            })
        );
        for bad in ["random-0", "random-x", "latitude:1", "cube"] {
            assert!(bad.parse::<EnsembleSpec>().is_err(), "{bad}");
        }
        let spec = EnsembleSpec::Latitude {
            theta: 0.5,
            count: 16,
        };
        assert_eq!(spec.to_string().parse(), Ok(spec));
    }

    #[test]
    fn gen_rejects_degenerate_dimension() {
        let (code, _, err) = run_args(&["gen", "teleport", "--d", "1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("d >= 2"));
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_PASS);
    }

    #[test]
    fn bad_tolerance_is_usage_error() {
        assert_eq!(run_args(&["verify", "teleport", "--tol", "-1"]).0, EXIT_USAGE);
    }

    #[test]
    fn default_ensembles() {
        assert_eq!(default_ensemble("teleport", 2), EnsembleSpec::Tetrahedron);
        assert_eq!(default_ensemble("random", 3), EnsembleSpec::Random(10));
        assert_eq!(default_ensemble("random", 4), EnsembleSpec::Random(16));
        assert!(matches!(
            default_ensemble("latitude", 2),
            EnsembleSpec::Latitude { .. }
        ));
    }
}
