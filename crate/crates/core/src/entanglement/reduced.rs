//! Reduced states of Alice plus region I, by three independent routes:
//!
//! * qubit partial trace after a fermion-qubit map ([`reduced_state`]);
//! * the ordering-free definition, the unique operator on the retained modes
//!   reproducing every retained-mode expectation value
//!   ([`subalgebra_reduced_state`]);
//! * at `r = π/4` only, `A_I (|0⟩⟨0|_A ⊗ I/4) A_I†`
//!   ([`infinite_acceleration_reduced_state`]).

use itertools::Itertools;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rayon::prelude::*;

use super::density::{negativity, DensityMatrix};
use super::ordering::{to_qubit_basis, OperatorOrdering};
use crate::error::{Error, Result};
use crate::fock::{
    expectation, operator_matrix, Factor, OperatorExpr, StateVector, ALICE, C_I, C_II, D_I, D_II,
    RINDLER_MODES,
};
use crate::unruh::{build_state, region_i_operator, StateFamily, UnruhParams};

/// Spread at or below which an ordering counts as convergent.
pub const CONVERGENCE_TOL: f64 = 1e-10;

/// Modes kept after tracing out region II, in representation order.
pub const RETAINED_MODES: [usize; 3] = [ALICE, C_I, D_I];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Partial trace of `|ψ⟩⟨ψ|` over qubit positions of a register.
pub fn qubit_partial_trace(psi: &StateVector, positions: &[usize]) -> Result<DensityMatrix> {
    DensityMatrix::from_state(psi).partial_trace(positions)
}

/// Alice plus region I after mapping to qubits with `ord` and tracing the
/// positions holding `c_II` and `d_II`. Dims `[2, 2, 2]`: Alice first, then
/// the two region-I modes in `ord` order.
pub fn reduced_state(
    f: &StateFamily,
    p: &UnruhParams,
    ord: &OperatorOrdering,
) -> Result<DensityMatrix> {
    let psi = build_state(f, p)?;
    reduced_state_of(&psi, ord)
}

/// As [`reduced_state`] for an arbitrary five-mode state.
pub fn reduced_state_of(psi: &StateVector, ord: &OperatorOrdering) -> Result<DensityMatrix> {
    if psi.n_modes() != RINDLER_MODES {
        return Err(Error::DimensionMismatch {
            expected: 1 << RINDLER_MODES,
            found: psi.dim(),
        });
    }
    let qubits = to_qubit_basis(psi, ord)?;
    let pos = |m| ord.position_of(m).expect("ordering covers every mode");
    let traced = [pos(C_II), pos(D_II)];
    let rho = qubit_partial_trace(&qubits, &traced)?;
    // Remaining positions keep register order; move Alice to the front.
    let kept: Vec<usize> = (0..RINDLER_MODES).filter(|k| !traced.contains(k)).collect();
    let alice = kept.iter().position(|&k| k == pos(ALICE)).expect("Alice is kept");
    let mut order = vec![alice];
    order.extend((0..kept.len()).filter(|&k| k != alice));
    rho.permute_subsystems(&order)
}

/// The 64 monomials `(f†)^α (f)^β` over the retained modes, with `α, β ∈ {0,1}³`
/// and creators ahead of annihilators in retained order.
fn retained_monomials(retained: &[usize]) -> Vec<Vec<Factor>> {
    let k = retained.len();
    (0..1usize << k)
        .cartesian_product(0..1usize << k)
        .map(|(alpha, beta)| {
            let bit = |mask: usize, i: usize| (mask >> (k - 1 - i)) & 1 == 1;
            let mut factors: Vec<Factor> = (0..k)
                .filter(|&i| bit(alpha, i))
                .map(|i| Factor::create(retained[i]))
                .collect();
            factors.extend(
                (0..k)
                    .filter(|&i| bit(beta, i))
                    .map(|i| Factor::annihilate(retained[i])),
            );
            factors
        })
        .collect()
}

/// Ordering-free reduced state of `psi` on `(A, c_I, d_I)`, dims `[2, 4]`.
///
/// Solves `Tr(ρ · rep(O)) = ⟨ψ|O|ψ⟩` for all 64 retained-mode monomials `O`,
/// where `rep` is the ladder representation on a three-mode Fock space.
pub fn subalgebra_reduced_state(psi: &StateVector) -> Result<DensityMatrix> {
    subalgebra_reduction(psi, &RETAINED_MODES)
}

/// [`subalgebra_reduced_state`] for any list of retained modes; the result
/// has one factor of 2 for the first mode and one for the rest.
pub fn subalgebra_reduction(psi: &StateVector, retained: &[usize]) -> Result<DensityMatrix> {
    let k = retained.len();
    if k == 0 {
        return Err(Error::InvalidParameter("no retained modes".into()));
    }
    let local = |m: usize| retained.iter().position(|&r| r == m).expect("retained mode");
    let d = 1 << k;
    let monomials = retained_monomials(retained);
    let mut system = DMatrix::from_element(d * d, d * d, ZERO);
    let mut rhs = DVector::from_element(d * d, ZERO);
    for (row, factors) in monomials.into_iter().enumerate() {
        let global = OperatorExpr::monomial(Complex64::new(1.0, 0.0), factors);
        rhs[row] = expectation(&global, psi)?;
        let rep = operator_matrix(&global.relabel(local), k)?;
        // Tr(ρ R) = Σ_{ij} ρ_ij R_ji
        for i in 0..d {
            for j in 0..d {
                system[(row, i * d + j)] = rep[(j, i)];
            }
        }
    }
    let solution = system
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::Internal("expectation-value system is singular".into()))?;
    let rho = DMatrix::from_fn(d, d, |i, j| solution[i * d + j]);
    DensityMatrix::new(rho, vec![2, d / 2])
}

/// `A_I (|0⟩⟨0|_A ⊗ I/4) A_I†` normalized to unit trace, dims `[2, 4]` on
/// `(A, c_I, d_I)`. Only defined at `r = π/4`.
pub fn infinite_acceleration_reduced_state(
    f: &StateFamily,
    p: &UnruhParams,
) -> Result<DensityMatrix> {
    let a_i = region_i_operator(f, p)?;
    let rep = operator_matrix(&a_i, RETAINED_MODES.len())?;
    // Alice is the most significant bit, so indices 0..4 have her mode empty.
    let vac = DMatrix::from_fn(8, 8, |i, j| {
        if i == j && i < 4 {
            Complex64::new(0.25, 0.0)
        } else {
            ZERO
        }
    });
    let rho = &rep * vac * rep.adjoint();
    let tr = rho.trace();
    if tr.norm() < 1e-300 {
        return Err(Error::Internal("region-I operator annihilates the vacuum".into()));
    }
    DensityMatrix::new(rho.unscale(tr.re), vec![2, 4])
}

/// Outcome of sweeping one ordering across the `q_R` grid at `r = π/4`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderingSpread {
    pub ordering: OperatorOrdering,
    pub negativities: Vec<f64>,
    pub spread: f64,
    pub convergent: bool,
}

/// Negativity of the Alice | region-I cut for one ordering.
pub fn ordering_negativity(
    f: &StateFamily,
    p: &UnruhParams,
    ord: &OperatorOrdering,
) -> Result<f64> {
    negativity(&reduced_state(f, p, ord)?, 1)
}

/// Max − min negativity across `qr_grid` at `r = π/4`.
pub fn ordering_spread(
    f: &StateFamily,
    ord: &OperatorOrdering,
    qr_grid: &[f64],
) -> Result<OrderingSpread> {
    let negativities = qr_grid
        .iter()
        .map(|&q| {
            let p = UnruhParams::real(std::f64::consts::FRAC_PI_4, q)?;
            ordering_negativity(f, &p, ord)
        })
        .collect::<Result<Vec<f64>>>()?;
    let max = negativities.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = negativities.iter().copied().fold(f64::INFINITY, f64::min);
    let spread = if negativities.is_empty() { 0.0 } else { max - min };
    Ok(OrderingSpread {
        ordering: ord.clone(),
        negativities,
        spread,
        convergent: spread <= CONVERGENCE_TOL,
    })
}

/// Orderings to classify: Alice fixed first with the 24 arrangements of the
/// Rindler modes, or all 120 permutations.
pub fn candidate_orderings(include_alice_moves: bool) -> Vec<OperatorOrdering> {
    let perms: Vec<Vec<usize>> = if include_alice_moves {
        (0..RINDLER_MODES).permutations(RINDLER_MODES).collect()
    } else {
        (1..RINDLER_MODES)
            .permutations(RINDLER_MODES - 1)
            .map(|rest| std::iter::once(ALICE).chain(rest).collect())
            .collect()
    };
    perms
        .into_iter()
        .map(|p| OperatorOrdering::new(p).expect("generated permutation"))
        .collect()
}

/// Spread of every candidate ordering, least spread first (ties keep
/// lexicographic permutation order). Evaluated in parallel; results do not
/// depend on scheduling.
pub fn classify_orderings(
    f: &StateFamily,
    qr_grid: &[f64],
    include_alice_moves: bool,
) -> Result<Vec<OrderingSpread>> {
    let mut out = candidate_orderings(include_alice_moves)
        .par_iter()
        .map(|ord| ordering_spread(f, ord, qr_grid))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.spread.total_cmp(&b.spread));
    Ok(out)
}
