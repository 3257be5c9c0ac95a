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

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_6, PI};
use std::process::{Command, ExitCode};

use rsplab::conversion::{
    build_nonfaithful_povm, build_oblivious_povm, cost_invariance_report, entanglement_transmission,
    require_generic, simulate_modified, verify_equivalence, ObliviousPovm,
};
use rsplab::latitude::{
    latitude_cost, latitude_ensemble, latitude_genericity_demo, simulate_latitude,
    theta_for_failure_probability,
};
use rsplab::matcore::{hermitian_eigenvalues, ComplexMatrix, Tolerance, C64};
use rsplab::quantum::{is_generic, Ensemble, Genericity};
use rsplab::rsp_model::{
    classical_cost, make_teleportation, random_valid_protocol, validate_faithful, AnyProtocol,
    FaithfulRspProtocol, MessageBranch, NonFaithfulRspProtocol,
};
use rsplab::Error;

const PROTOCOL_TOL: f64 = 1e-9;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn tol(eps: f64) -> Tolerance {
    Tolerance::new(eps).unwrap()
}

fn max_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
    let mut worst = 0.0f64;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            worst = worst.max((a[(i, j)] - b[(i, j)]).norm());
        }
    }
    worst
}

// Reference implementations written out with plain index loops.

fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (br, bc) = (b.rows(), b.cols());
    ComplexMatrix::from_fn(a.rows() * br, a.cols() * bc, |i, j| {
        a[(i / br, j / bc)] * b[(i % br, j % bc)]
    })
}

fn matmul(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(a.rows(), b.cols(), |i, j| {
        (0..a.cols()).map(|k| a[(i, k)] * b[(k, j)]).sum()
    })
}

fn dagger(a: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(a.cols(), a.rows(), |i, j| a[(j, i)].conj())
}

/// `Tr_anc[U^dagger (phi (x) b) U]` with the ancilla as the trailing factor.
fn receiver_state(branch: &MessageBranch, phi: &ComplexMatrix) -> ComplexMatrix {
    let m = matmul(
        &matmul(&dagger(&branch.unitary), &kron(phi, &branch.byproduct)),
        &branch.unitary,
    );
    let k = branch.anc_dim;
    let dp = m.rows() / k;
    ComplexMatrix::from_fn(dp, dp, |i, j| (0..k).map(|a| m[(i * k + a, j * k + a)]).sum())
}

fn bell(v: [f64; 4]) -> ComplexMatrix {
    let psi: Vec<C64> = v.iter().map(|&x| C64::new(x * FRAC_1_SQRT_2, 0.0)).collect();
    ComplexMatrix::from_fn(4, 4, |i, j| psi[i] * psi[j].conj())
}

fn criterion_1() -> Check {
    let op = build_oblivious_povm(&make_teleportation(2).unwrap(), tol(1e-10)).map_err(|e| e.to_string())?;
    let expected = [
        ("x0z0", bell([1.0, 0.0, 0.0, 1.0])),
        ("x1z0", bell([0.0, 1.0, 1.0, 0.0])),
        ("x0z1", bell([1.0, 0.0, 0.0, -1.0])),
        ("x1z1", bell([0.0, 1.0, -1.0, 0.0])),
    ];
    let mut worst = 0.0f64;
    for (label, want) in &expected {
        let got = op
            .povm()
            .element(label)
            .ok_or(format!("missing element {label}"))?;
        worst = worst.max(max_diff(got, want));
    }
    ensure(op.povm().len() == 4, "expected four elements")?;
    ensure(worst <= 1e-10, format!("max entry deviation {worst:.3e}"))?;
    Ok(format!("max entry deviation {worst:.3e}"))
}

struct Case {
    d: usize,
    anc: usize,
    seed: u64,
    protocol: FaithfulRspProtocol,
    ensemble: Ensemble,
    op: ObliviousPovm,
}

fn cases() -> Vec<Case> {
    let mut out = Vec::new();
    for d in [2, 3] {
        for anc in [1, 2, 3] {
            for seed in 0..5u64 {
                let protocol = random_valid_protocol(d, anc, seed).unwrap();
                let ensemble = Ensemble::random(d, 10, 1000 + seed).unwrap();
                let op = build_oblivious_povm(&protocol, tol(PROTOCOL_TOL * 0.1)).unwrap();
                out.push(Case {
                    d,
                    anc,
                    seed,
                    protocol,
                    ensemble,
                    op,
                });
            }
        }
    }
    out
}

fn criterion_2(cases: &[Case]) -> Check {
    let (mut dp, mut ds) = (0.0f64, 0.0f64);
    for c in cases {
        for phi in c.ensemble.states() {
            let outcomes = simulate_modified(&c.op, phi).map_err(|e| e.to_string())?;
            let projector = phi.projector();
            for br in c.protocol.branches() {
                let o = outcomes
                    .iter()
                    .find(|o| o.label == br.label)
                    .ok_or_else(|| format!("missing outcome {}", br.label))?;
                dp = dp.max((o.probability - br.probability).abs());
                let state = o.conditional_state.as_ref().ok_or("null conditional state")?;
                ds = ds.max(max_diff(state, &receiver_state(br, &projector)));
            }
        }
        let report = verify_equivalence(&c.protocol, &c.ensemble, tol(PROTOCOL_TOL));
        ensure(
            report.passed,
            format!(
                "d={} anc={} seed={}: {:?}",
                c.d, c.anc, c.seed, report.diagnostics
            ),
        )?;
    }
    ensure(
        dp <= 1e-9 && ds <= 1e-9,
        format!("probability dev {dp:.3e}, state dev {ds:.3e}"),
    )?;
    Ok(format!(
        "{} protocols; probability dev {dp:.3e}, state dev {ds:.3e}",
        cases.len()
    ))
}

fn criterion_3(cases: &[Case]) -> Check {
    let (mut completeness, mut min_eig) = (0.0f64, f64::INFINITY);
    for c in cases {
        let dim = c.d * c.d;
        let mut sum = ComplexMatrix::zeros(dim, dim);
        for m in c.op.povm().elements() {
            sum = &sum + &ComplexMatrix::from_fn(dim, dim, |i, j| m[(j, i)]);
            min_eig = min_eig.min(hermitian_eigenvalues(m).map_err(|e| e.to_string())?[0]);
        }
        completeness = completeness.max(max_diff(&sum, &ComplexMatrix::identity(dim)));
    }
    ensure(
        completeness <= 1e-10 && min_eig >= -1e-10,
        format!("completeness {completeness:.3e}, min eigenvalue {min_eig:.3e}"),
    )?;
    Ok(format!(
        "completeness {completeness:.3e}, min eigenvalue {min_eig:.3e}"
    ))
}

fn criterion_4(cases: &[Case]) -> Check {
    let mut worst = 0.0f64;
    for c in cases {
        let r = cost_invariance_report(&c.protocol, &c.ensemble, tol(1e-10)).map_err(|e| e.to_string())?;
        ensure(
            r.identical,
            format!("d={} anc={} seed={}: not identical", c.d, c.anc, c.seed),
        )?;
        worst = worst.max(r.max_difference);
    }
    let tele = classical_cost(&make_teleportation(2).unwrap());
    ensure(
        tele.worst_case_bits == 2.0 && tele.entropy_bits == 2.0 && tele.worst_case_bits == 2.0 * 2f64.log2(),
        format!("teleportation cost {tele:?}"),
    )?;
    ensure(worst <= 1e-10, format!("max cost difference {worst:.3e}"))?;
    Ok(format!(
        "max cost difference {worst:.3e}; teleportation 2.0 cbits"
    ))
}

fn criterion_5(cases: &[Case]) -> Check {
    let mut worst = f64::INFINITY;
    for c in cases {
        let r = entanglement_transmission(&c.op, &c.protocol).map_err(|e| e.to_string())?;
        worst = worst.min(r.min_fidelity);
    }
    ensure((worst - 1.0).abs() <= 1e-9, format!("min fidelity {worst:.12}"))?;
    Ok(format!("min fidelity {worst:.12}"))
}

fn criterion_6() -> Check {
    let tele = make_teleportation(2).unwrap();
    let scaled = tele
        .with_probabilities(&[0.7 / 4.0; 4])
        .map_err(|e| e.to_string())?;
    let mixed = ComplexMatrix::identity(2).scale_real(0.5);
    let nf = NonFaithfulRspProtocol::new(scaled, 0.3, mixed.clone()).map_err(|e| e.to_string())?;
    let op = build_nonfaithful_povm(&nf, tol(1e-10)).map_err(|e| e.to_string())?;
    let (mut dp, mut ds) = (0.0f64, 0.0f64);
    for phi in Ensemble::random(2, 10, 7).unwrap().states() {
        let o = simulate_modified(&op, phi)
            .map_err(|e| e.to_string())?
            .into_iter()
            .find(|o| o.label == "fail")
            .ok_or("no failure outcome")?;
        dp = dp.max((o.probability - 0.3).abs());
        ds = ds.max(max_diff(
            o.conditional_state.as_ref().ok_or("null failure state")?,
            &mixed,
        ));
    }
    let residual = op.transposed_completeness_residual();
    ensure(
        dp <= 1e-10 && ds <= 1e-10,
        format!("failure dev {dp:.3e}, state dev {ds:.3e}"),
    )?;
    ensure(residual <= 1e-10, format!("completeness {residual:.3e}"))?;

    let zero = NonFaithfulRspProtocol::new(tele.clone(), 0.0, mixed).map_err(|e| e.to_string())?;
    let reduced = build_nonfaithful_povm(&zero, tol(1e-10)).map_err(|e| e.to_string())?;
    let plain = build_oblivious_povm(&tele, tol(1e-10)).map_err(|e| e.to_string())?;
    ensure(
        reduced.povm().elements() == plain.povm().elements()
            && reduced.povm().labels() == plain.povm().labels(),
        "p_f = 0 does not reduce to the faithful POVM",
    )?;
    Ok(format!(
        "failure dev {dp:.3e}, state dev {ds:.3e}, completeness {residual:.3e}"
    ))
}

fn criterion_7() -> Check {
    let (mut dp, mut df, mut spread) = (0.0f64, 0.0f64, 0.0f64);
    for theta in [0.0, 0.2, FRAC_PI_6, 1.0] {
        let p = theta.sin() / (1.0 + theta.sin());
        let want = [(1.0 - p) / 2.0, (1.0 - p) / 2.0, p];
        let mut seen: Vec<Vec<f64>> = vec![Vec::new(); 3];
        for k in 0..16 {
            let eta = 2.0 * PI * k as f64 / 16.0;
            let out = simulate_latitude(theta, eta).map_err(|e| e.to_string())?;
            for (i, o) in out.iter().enumerate() {
                dp = dp.max((o.probability - want[i]).abs());
                seen[i].push(o.probability);
                if o.probability > 1e-12 {
                    df = df.max((o.fidelity.ok_or("missing fidelity")? - 1.0).abs());
                }
            }
        }
        for s in &seen {
            let (lo, hi) = s.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &x| {
                (l.min(x), h.max(x))
            });
            spread = spread.max(hi - lo);
        }
    }
    ensure(df <= 1e-10, format!("fidelity dev {df:.3e}"))?;
    ensure(
        dp <= 1e-12 && spread <= 1e-12,
        format!("probability dev {dp:.3e}, spread {spread:.3e}"),
    )?;
    Ok(format!(
        "fidelity dev {df:.3e}, probability dev {dp:.3e}, spread {spread:.3e}"
    ))
}

fn criterion_8() -> Check {
    let per_qubit = |theta: f64| {
        latitude_cost(theta, 1)
            .map(|c| c.per_qubit())
            .map_err(|e| e.to_string())
    };
    let c0 = per_qubit(0.0)?;
    let c02 = per_qubit(theta_for_failure_probability(0.2).map_err(|e| e.to_string())?)?;
    let c13 = per_qubit(theta_for_failure_probability(1.0 / 3.0).map_err(|e| e.to_string())?)?;
    // n(H(p) + p + 1) evaluated by hand: H(0.2) = 0.721928..., H(1/3) = 0.918295...
    let h = |p: f64| -p * p.log2() - (1.0 - p) * (1.0 - p).log2();
    ensure(c0 == 1.0, format!("theta = 0 costs {c0}"))?;
    ensure(
        (c02 - 1.92193).abs() <= 1e-5 && c02 < 2.0,
        format!("p = 0.2 costs {c02}"),
    )?;
    ensure(
        (c02 - (h(0.2) + 1.2)).abs() <= 1e-12,
        "p = 0.2 disagrees with direct evaluation",
    )?;
    ensure((c13 - 2.25163).abs() <= 1e-5, format!("p = 1/3 costs {c13}"))?;
    Ok(format!("{c0}, {c02:.6}, {c13:.6} bits/qubit"))
}

fn criterion_9() -> Check {
    let tetra = is_generic(&Ensemble::tetrahedron());
    ensure(
        tetra
            == Genericity {
                generic: true,
                rank: 4,
            },
        format!("tetrahedron {tetra:?}"),
    )?;
    for theta in [0.0, 0.2, FRAC_PI_6, 1.0, 1.5, 1.57] {
        let g = latitude_genericity_demo(theta, 16).map_err(|e| e.to_string())?;
        ensure(
            g == Genericity {
                generic: false,
                rank: 3,
            },
            format!("theta {theta}: {g:?}"),
        )?;
    }
    let ens = latitude_ensemble(0.4, 16).map_err(|e| e.to_string())?;
    match require_generic(&ens) {
        Err(Error::NotGeneric { rank: 3, required: 4 }) => {}
        other => return Err(format!("precondition accepted latitude ensemble: {other:?}")),
    }
    let report = verify_equivalence(&make_teleportation(2).unwrap(), &ens, tol(PROTOCOL_TOL));
    ensure(
        !report.passed && report.diagnostics.iter().any(|d| d.contains("not generic")),
        "verification ran on a nongeneric ensemble without a diagnostic",
    )?;
    Ok("tetrahedron rank 4; latitude rank 3; conversion rejects latitude".into())
}

fn rsplab(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rsplab"))
        .args(args)
        .env_remove("RSPLAB_TOL")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn criterion_10() -> Check {
    let tele = make_teleportation(2).unwrap();
    let wrong = tele
        .with_branch_unitary("x1z0", ComplexMatrix::identity(2))
        .unwrap();
    let random = random_valid_protocol(3, 2, 4).unwrap();
    let other = random_valid_protocol(3, 2, 99).unwrap();
    let random_wrong = random
        .with_branch_unitary("x1z1", other.branch("x1z1").unwrap().unitary.clone())
        .unwrap();
    let mut min_residual = f64::INFINITY;
    for p in [&wrong, &random_wrong] {
        let r = validate_faithful(p, tol(PROTOCOL_TOL));
        ensure(!r.passed, "corrupted protocol validated")?;
        min_residual = min_residual.min(r.max_residual);
    }
    ensure(
        min_residual > 1e-3,
        format!("corrupted residual only {min_residual:.3e}"),
    )?;

    let op = build_oblivious_povm(&tele, tol(1e-10)).unwrap();
    let swapped = op.with_swapped("x0z0", "x1z0").map_err(|e| e.to_string())?;
    let fid = entanglement_transmission(&swapped, &tele)
        .map_err(|e| e.to_string())?
        .min_fidelity;
    ensure(fid < 0.9, format!("swapped fidelity {fid}"))?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let bad = dir.path().join("corrupted.json");
    let povm = dir.path().join("swapped.json");
    std::fs::write(&bad, AnyProtocol::Faithful(wrong).to_json()).map_err(|e| e.to_string())?;
    std::fs::write(&povm, serde_json::to_string(&swapped.to_record()).unwrap()).map_err(|e| e.to_string())?;
    let (code_convert, err_convert) = rsplab(&["convert", bad.to_str().unwrap(), "--out", "/dev/null"]);
    ensure(
        code_convert == 2 && err_convert.contains("randomizing-map residual"),
        format!("convert exit {code_convert}: {err_convert}"),
    )?;
    let (code_verify, err_verify) = rsplab(&[
        "verify",
        "teleport",
        "--povm",
        povm.to_str().unwrap(),
        "--no-timestamp",
        "--out",
        "/dev/null",
    ]);
    ensure(
        code_verify == 2,
        format!("verify exit {code_verify}: {err_verify}"),
    )?;
    Ok(format!(
        "residual {min_residual:.3e}, swapped fidelity {fid:.3}, exits {code_convert}/{code_verify}"
    ))
}

fn main() -> ExitCode {
    let cases = cases();
    let results: Vec<(u32, &str, Check)> = vec![
        (1, "teleportation converts to Bell projectors", criterion_1()),
        (
            2,
            "converted protocols reproduce messages and states",
            criterion_2(&cases),
        ),
        (3, "converted measurements are POVMs", criterion_3(&cases)),
        (4, "classical cost is unchanged", criterion_4(&cases)),
        (5, "entanglement is transmitted intact", criterion_5(&cases)),
        (6, "nonfaithful extension", criterion_6()),
        (7, "latitude protocol is faithful and oblivious", criterion_7()),
        (8, "latitude protocol cost", criterion_8()),
        (9, "genericity", criterion_9()),
        (10, "negative controls", criterion_10()),
    ];
    let mut failed = 0;
    for (n, name, result) in &results {
        match result {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
