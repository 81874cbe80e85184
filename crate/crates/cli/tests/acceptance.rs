//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines are always printed; exits nonzero if any criterion fails.

use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};
use std::process::ExitCode;

use rindler_cli::check::{
    anticommutation_residual, bell_anchor_residual, legacy_spread, physical_spread,
    product_family_negativity, region_mode_residuals, route_disagreement, schmidt_anchor_residual,
    sweep_nondeterminism, thermal_vacuum_residual, vacuum_annihilation_residual,
    vacuum_norm_residual,
};
use rindler_core::StateFamily;

struct Criterion {
    id: u32,
    name: &'static str,
    /// (label, measured, passed)
    parts: Vec<(&'static str, f64, bool)>,
}

fn at_most(label: &'static str, x: f64, tol: f64) -> (&'static str, f64, bool) {
    (label, x, x.is_finite() && x <= tol)
}

fn criteria() -> Vec<Criterion> {
    let min_at_pi8 = region_mode_residuals(FRAC_PI_8)
        .unwrap()
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    let legacy = legacy_spread().unwrap();
    vec![
        Criterion {
            id: 1,
            name: "anticommutation relations",
            parts: vec![at_most("max residual", anticommutation_residual().unwrap(), 1e-12)],
        },
        Criterion {
            id: 2,
            name: "unruh vacuum",
            parts: vec![
                at_most("norm over 50 r", vacuum_norm_residual(50).unwrap(), 1e-12),
                at_most(
                    "C_U annihilation 8 q_R x 3 r",
                    vacuum_annihilation_residual(&[0.0, FRAC_PI_8, FRAC_PI_4]).unwrap(),
                    1e-12,
                ),
            ],
        },
        Criterion {
            id: 3,
            name: "limit identity",
            parts: vec![
                at_most(
                    "at pi/4",
                    region_mode_residuals(FRAC_PI_4)
                        .unwrap()
                        .into_iter()
                        .fold(0.0, f64::max),
                    1e-12,
                ),
                ("min at pi/8 (>= 0.1)", min_at_pi8, min_at_pi8 >= 0.1),
            ],
        },
        Criterion {
            id: 4,
            name: "thermal vacuum",
            parts: vec![at_most("entrywise vs I/4", thermal_vacuum_residual().unwrap(), 1e-12)],
        },
        Criterion {
            id: 5,
            name: "physical ordering convergence",
            parts: vec![at_most("max q_R spread at pi/4", physical_spread().unwrap(), 1e-10)],
        },
        Criterion {
            id: 6,
            name: "legacy ordering non-convergence",
            parts: vec![("q_R spread at pi/4 (> 0.01)", legacy, legacy > 0.01)],
        },
        Criterion {
            id: 7,
            name: "triple-route agreement",
            parts: vec![at_most(
                "max pairwise |dN| on default grid",
                route_disagreement(&[StateFamily::maximally_entangled()], 50).unwrap(),
                1e-10,
            )],
        },
        Criterion {
            id: 8,
            name: "analytic anchors",
            parts: vec![
                at_most("|N - 1/2|", bell_anchor_residual().unwrap(), 1e-12),
                at_most("|N - |PQ||", schmidt_anchor_residual().unwrap(), 1e-12),
                at_most("product families N", product_family_negativity().unwrap(), 1e-12),
            ],
        },
        Criterion {
            id: 9,
            name: "sweep determinism",
            parts: vec![at_most("differing runs", sweep_nondeterminism().unwrap(), 0.0)],
        },
    ]
}

fn main() -> ExitCode {
    // `cargo test -- --list` and filters pass through here; only run the suite proper.
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    let mut failed = 0;
    for c in criteria() {
        let ok = c.parts.iter().all(|p| p.2);
        let detail: Vec<String> = c
            .parts
            .iter()
            .map(|(label, x, _)| format!("{label} = {x:.3e}"))
            .collect();
        println!(
            "{} criterion {}: {} ({})",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            detail.join("; ")
        );
        failed += usize::from(!ok);
    }
    println!("acceptance: {} failed", failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
