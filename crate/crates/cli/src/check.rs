//! The invariant suite behind `rindler check`. Each entry measures one
//! residual and compares it with a fixed bound.

use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use rindler_core::entanglement::{
    candidate_orderings, infinite_acceleration_reduced_state, negativity, ordering_spread,
    reduced_state, subalgebra_reduced_state, subalgebra_reduction, DensityMatrix,
};
use rindler_core::fock::{
    apply_operator, operator_matrix, OperatorExpr, C_I, D_I, RINDLER_MODES,
};
use rindler_core::unruh::{
    build_state, default_qr_grid, r_grid, region_modes, unruh_annihilation, unruh_vacuum,
};
use rindler_core::{OperatorOrdering, StateFamily, UnruhParams};
use serde::Serialize;

use crate::config::SweepConfig;
use crate::sampling::{random_family, rng, unit_pair};
use crate::sweep::cmd_sweep;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Bound {
    AtMost(f64),
    Above(f64),
    AtLeast(f64),
}

impl Bound {
    pub fn holds(&self, x: f64) -> bool {
        match *self {
            Bound::AtMost(b) => x <= b,
            Bound::Above(b) => x > b,
            Bound::AtLeast(b) => x >= b,
        }
    }

    fn symbol(&self) -> String {
        match self {
            Bound::AtMost(b) => format!("<= {b:e}"),
            Bound::Above(b) => format!("> {b:e}"),
            Bound::AtLeast(b) => format!(">= {b:e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub measured: f64,
    pub bound: Bound,
    pub passed: bool,
}

impl CheckResult {
    pub fn new(name: &str, measured: f64, bound: Bound) -> Self {
        Self {
            name: name.into(),
            measured,
            bound,
            passed: measured.is_finite() && bound.holds(measured),
        }
    }

    pub fn line(&self) -> String {
        format!(
            "{} {:<44} measured {:<12.3e} bound {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.measured,
            self.bound.symbol()
        )
    }
}

const RANDOM_FAMILIES: usize = 20;
const FAMILY_SEED: u64 = 0x5eed;

fn default_family_and_random(n: usize) -> Vec<StateFamily> {
    let mut g = rng(FAMILY_SEED);
    std::iter::once(StateFamily::maximally_entangled())
        .chain((0..n).map(|_| random_family(&mut g)))
        .collect()
}

fn max_entry(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn fmax(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, f64::max)
}

fn neg(rho: &DensityMatrix) -> Result<f64> {
    Ok(negativity(rho, 1)?)
}

/// Largest entry of `{f_j, f†_k} − δ_jk·1`, `{f_j, f_k}` and `{f†_j, f†_k}`.
pub fn anticommutation_residual() -> Result<f64> {
    let n = RINDLER_MODES;
    let dim = 1 << n;
    let mats = |make: fn(usize) -> OperatorExpr| -> Result<Vec<DMatrix<Complex64>>> {
        (0..n).map(|m| Ok(operator_matrix(&make(m), n)?)).collect()
    };
    let ann = mats(OperatorExpr::annihilate)?;
    let cre = mats(OperatorExpr::create)?;
    let id = DMatrix::<Complex64>::identity(dim, dim);
    let mut worst = 0.0_f64;
    for j in 0..n {
        for k in 0..n {
            let delta = if j == k { id.clone() } else { DMatrix::zeros(dim, dim) };
            worst = worst.max(max_entry(&(&ann[j] * &cre[k] + &cre[k] * &ann[j] - delta)));
            worst = worst.max(max_entry(&(&ann[j] * &ann[k] + &ann[k] * &ann[j])));
            worst = worst.max(max_entry(&(&cre[j] * &cre[k] + &cre[k] * &cre[j])));
        }
    }
    Ok(worst)
}

/// `max |‖|0⟩_U‖ − 1|` over `r_points` values of `r`.
pub fn vacuum_norm_residual(r_points: usize) -> Result<f64> {
    let norms = r_grid(r_points)
        .into_iter()
        .map(|r| Ok((unruh_vacuum(r)?.norm() - 1.0).abs()))
        .collect::<Result<Vec<_>>>()?;
    Ok(fmax(norms))
}

/// `max ‖C_U |0⟩_U‖` over the given `r` values and the `q_R` grid.
pub fn vacuum_annihilation_residual(rs: &[f64]) -> Result<f64> {
    let mut worst = 0.0_f64;
    for &r in rs {
        let vac = unruh_vacuum(r)?;
        for q in default_qr_grid() {
            let p = UnruhParams::real(r, q)?;
            worst = worst.max(apply_operator(&unruh_annihilation(&p), &vac)?.norm());
        }
    }
    Ok(worst)
}

/// `‖(a†_I − a†_II)|0⟩_U‖` at `r` for every grid `q_R`.
pub fn region_mode_residuals(r: f64) -> Result<Vec<f64>> {
    let vac = unruh_vacuum(r)?;
    default_qr_grid()
        .into_iter()
        .map(|q| {
            let (a_i, a_ii) = region_modes(&UnruhParams::real(r, q)?);
            Ok(apply_operator(&(a_i - a_ii), &vac)?.norm())
        })
        .collect()
}

/// Entrywise distance of the region-I marginal of `|0⟩_U` at `r = π/4` from
/// `I/4`, worst of the qubit trace and the subalgebra reduction.
pub fn thermal_vacuum_residual() -> Result<f64> {
    let vac = unruh_vacuum(FRAC_PI_4)?;
    let quarter = DMatrix::<Complex64>::identity(4, 4).scale(0.25);
    let qubit = DensityMatrix::from_state(&vac).partial_trace(&[0, 3, 4])?;
    let sub = subalgebra_reduction(&vac, &[C_I, D_I])?;
    Ok(max_entry(&(qubit.matrix() - &quarter)).max(max_entry(&(sub.matrix() - &quarter))))
}

/// Largest physical-ordering negativity spread across the `q_R` grid at
/// `r = π/4` over the default family and 20 random ones.
pub fn physical_spread() -> Result<f64> {
    let spreads = default_family_and_random(RANDOM_FAMILIES)
        .par_iter()
        .map(|f| Ok(ordering_spread(f, &OperatorOrdering::physical(), &default_qr_grid())?.spread))
        .collect::<Result<Vec<_>>>()?;
    Ok(fmax(spreads))
}

/// Legacy-interleaved spread at `r = π/4` for the default family.
pub fn legacy_spread() -> Result<f64> {
    Ok(ordering_spread(
        &StateFamily::maximally_entangled(),
        &OperatorOrdering::legacy_interleaved(),
        &default_qr_grid(),
    )?
    .spread)
}

/// Largest pairwise negativity difference between the physical qubit trace,
/// the subalgebra reduction and (at `r = π/4`) the region-I operator route.
pub fn route_disagreement(families: &[StateFamily], r_points: usize) -> Result<f64> {
    let rs = r_grid(r_points);
    let per_family = families
        .par_iter()
        .map(|f| -> Result<f64> {
            let mut worst = 0.0_f64;
            for q in default_qr_grid() {
                for &r in &rs {
                    let p = UnruhParams::real(r, q)?;
                    let phys = neg(&reduced_state(f, &p, &OperatorOrdering::physical())?)?;
                    let sub = neg(&subalgebra_reduced_state(&build_state(f, &p)?)?)?;
                    worst = worst.max((phys - sub).abs());
                    if r == FRAC_PI_4 {
                        let lim = neg(&infinite_acceleration_reduced_state(f, &p)?)?;
                        worst = worst.max((lim - phys).abs()).max((lim - sub).abs());
                    }
                }
            }
            Ok(worst)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(fmax(per_family))
}

fn zero_acceleration_negativity(f: &StateFamily) -> Result<f64> {
    let p = UnruhParams::real(0.0, 1.0)?;
    neg(&reduced_state(f, &p, &OperatorOrdering::physical())?)
}

/// `|N − 1/2|` at `r = 0, q_R = 1` for the default family.
pub fn bell_anchor_residual() -> Result<f64> {
    Ok((zero_acceleration_negativity(&StateFamily::maximally_entangled())? - 0.5).abs())
}

/// `max |N − |PQ||` at `r = 0, q_R = 1` over 10 random `(P, Q)` with
/// `a1 = b2 = 1`.
pub fn schmidt_anchor_residual() -> Result<f64> {
    let mut g = rng(FAMILY_SEED + 1);
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let mut worst = 0.0_f64;
    for _ in 0..10 {
        let (p, q) = unit_pair(&mut g);
        let f = StateFamily::new(p, q, one, zero, zero, one)?;
        worst = worst.max((zero_acceleration_negativity(&f)? - (p * q).norm()).abs());
    }
    Ok(worst)
}

/// Largest negativity for `P ∈ {0, 1}` families over the default sweep grid,
/// both preset orderings.
pub fn product_family_negativity() -> Result<f64> {
    let mut g = rng(FAMILY_SEED + 2);
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let mut families = Vec::new();
    for (p, q) in [(one, zero), (zero, one)] {
        let (a1, a2) = unit_pair(&mut g);
        let (b1, b2) = unit_pair(&mut g);
        families.push(StateFamily::new(p, q, a1, a2, b1, b2)?);
    }
    let worst = families
        .par_iter()
        .map(|f| -> Result<f64> {
            let cfg = SweepConfig {
                family: *f,
                ..SweepConfig::default()
            };
            let recs = crate::sweep::run_sweep(&cfg, false)?;
            Ok(fmax(recs.iter().map(|r| r.negativity)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(fmax(worst))
}

/// 0 when two parallel runs and one sequential run of the default sweep
/// produce byte-identical CSV, 1 otherwise.
pub fn sweep_nondeterminism() -> Result<f64> {
    let cfg = SweepConfig::default();
    let a = cmd_sweep(&cfg, true)?;
    let b = cmd_sweep(&cfg, true)?;
    let c = cmd_sweep(&cfg, false)?;
    Ok(if a == b && b == c { 0.0 } else { 1.0 })
}

/// Largest violation of hermiticity, unit trace or positivity of reduced
/// states across 100 random draws and all Alice-first orderings.
pub fn reduced_state_validity() -> Result<f64> {
    let orderings = candidate_orderings(false);
    let mut g = rng(FAMILY_SEED + 3);
    let draws: Vec<(StateFamily, UnruhParams, usize)> = (0..100)
        .map(|i| {
            let f = random_family(&mut g);
            let (qr, ql) = unit_pair(&mut g);
            let r = rand::Rng::gen_range(&mut g, 0.0..=FRAC_PI_4);
            Ok((f, UnruhParams::new(r, qr, ql)?, i % orderings.len()))
        })
        .collect::<Result<_>>()?;
    let worst = draws
        .par_iter()
        .map(|(f, p, k)| -> Result<f64> {
            let rho = reduced_state(f, p, &orderings[*k])?;
            Ok(rho
                .hermiticity_residual()
                .max((rho.trace() - Complex64::new(1.0, 0.0)).norm())
                .max(-rho.min_eigenvalue()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(fmax(worst))
}

/// Largest negativity in the default sweep minus 1/2 (negative when every
/// value is inside range).
pub fn sweep_range_excess() -> Result<f64> {
    let recs = crate::sweep::run_sweep(&SweepConfig::default(), true)?;
    let lo = recs.iter().map(|r| r.negativity).fold(f64::INFINITY, f64::min);
    let hi = recs.iter().map(|r| r.negativity).fold(f64::NEG_INFINITY, f64::max);
    if lo < 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(hi - 0.5)
}

/// Every check, in a fixed order.
pub fn run_all() -> Result<Vec<CheckResult>> {
    let at_most = Bound::AtMost;
    let mut out = Vec::new();
    let mut push = |name: &str, measured: f64, bound| out.push(CheckResult::new(name, measured, bound));

    push("anticommutation relations", anticommutation_residual()?, at_most(1e-12));
    push("unruh vacuum unit norm (50 r)", vacuum_norm_residual(50)?, at_most(1e-12));
    push(
        "unruh vacuum annihilated (8 q_R x 3 r)",
        vacuum_annihilation_residual(&[0.0, FRAC_PI_8, FRAC_PI_4])?,
        at_most(1e-12),
    );
    push(
        "unruh vacuum annihilated (8 q_R x 50 r)",
        vacuum_annihilation_residual(&r_grid(50))?,
        at_most(1e-12),
    );
    push(
        "limit identity a_I|0_U> = a_II|0_U> at pi/4",
        fmax(region_mode_residuals(FRAC_PI_4)?),
        at_most(1e-12),
    );
    push(
        "region modes differ at pi/8",
        region_mode_residuals(FRAC_PI_8)?.into_iter().fold(f64::INFINITY, f64::min),
        Bound::AtLeast(0.1),
    );
    push("thermal vacuum on region I at pi/4", thermal_vacuum_residual()?, at_most(1e-12));
    push("physical ordering q_R spread at pi/4", physical_spread()?, at_most(1e-10));
    push("legacy-interleaved q_R spread at pi/4", legacy_spread()?, Bound::Above(0.01));
    push(
        "three routes agree (default family grid)",
        route_disagreement(&[StateFamily::maximally_entangled()], 50)?,
        at_most(1e-10),
    );
    push(
        "three routes agree (20 random families)",
        route_disagreement(&default_family_and_random(RANDOM_FAMILIES)[1..], 50)?,
        at_most(1e-10),
    );
    push("N = 1/2 at r=0, q_R=1", bell_anchor_residual()?, at_most(1e-12));
    push("N = |PQ| at r=0, q_R=1 (10 draws)", schmidt_anchor_residual()?, at_most(1e-12));
    push("N = 0 for product families", product_family_negativity()?, at_most(1e-12));
    push("sweep CSV byte-identical across runs", sweep_nondeterminism()?, at_most(0.0));
    push("reduced states hermitian, unit trace, PSD", reduced_state_validity()?, at_most(1e-12));
    push("sweep negativity <= 1/2 + 1e-9", sweep_range_excess()?, at_most(1e-9));
    Ok(out)
}

pub fn report_text(results: &[CheckResult]) -> String {
    let mut s: String = results.iter().map(|r| r.line() + "\n").collect();
    let failed = results.iter().filter(|r| !r.passed).count();
    s.push_str(&format!(
        "{} checks, {} passed, {} failed\n",
        results.len(),
        results.len() - failed,
        failed
    ));
    s
}

pub fn report_json(results: &[CheckResult]) -> String {
    let mut s = serde_json::to_string_pretty(results).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert!(Bound::AtMost(1.0).holds(1.0));
        assert!(!Bound::Above(1.0).holds(1.0));
        assert!(Bound::AtLeast(1.0).holds(1.0));
        assert!(!CheckResult::new("x", f64::NAN, Bound::AtMost(1.0)).passed);
    }

    #[test]
    fn cheap_checks_pass() {
        assert!(anticommutation_residual().unwrap() <= 1e-12);
        assert!(thermal_vacuum_residual().unwrap() <= 1e-12);
        assert!(bell_anchor_residual().unwrap() <= 1e-12);
        assert!(legacy_spread().unwrap() > 0.01);
    }
}
