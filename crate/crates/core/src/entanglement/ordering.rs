//! Fermion-to-qubit maps induced by an operator ordering.
//!
//! An ordering `(m_1, …, m_n)` defines the qubit ket `|b_1 … b_n⟩` as the
//! fermionic state `(f†_{m_1})^{b_1} ⋯ (f†_{m_n})^{b_n} |0⟩`. Once the kets
//! are fixed the register is treated as plain qubits, so tracing out qubit
//! positions ignores anticommutation signs between traced and kept modes.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{StateVector, ALICE, C_I, C_II, D_I, D_II, RINDLER_MODES};

pub const PHYSICAL: &str = "physical";
pub const LEGACY_INTERLEAVED: &str = "legacy-interleaved";

/// A permutation of mode indices, listed in qubit-position order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperatorOrdering {
    permutation: Vec<usize>,
    name: Option<String>,
}

impl OperatorOrdering {
    pub fn new(permutation: Vec<usize>) -> Result<Self> {
        let n = permutation.len();
        let mut seen = vec![false; n];
        for &m in &permutation {
            if m >= n || std::mem::replace(&mut seen[m], true) {
                return Err(Error::InvalidOrdering(format!(
                    "{permutation:?} is not a permutation of 0..{n}"
                )));
            }
        }
        let mut ord = Self {
            permutation,
            name: None,
        };
        ord.name = [Self::physical(), Self::legacy_interleaved()]
            .into_iter()
            .find(|p| p.permutation == ord.permutation)
            .and_then(|p| p.name);
        Ok(ord)
    }

    /// `(A, c_I, d_I, c_II, d_II)`: region-II modes contiguous and last.
    pub fn physical() -> Self {
        Self {
            permutation: vec![ALICE, C_I, D_I, C_II, D_II],
            name: Some(PHYSICAL.into()),
        }
    }

    /// `(A, c_I, d_II, d_I, c_II)`: particle-I, antiparticle-II,
    /// antiparticle-I, particle-II.
    pub fn legacy_interleaved() -> Self {
        Self {
            permutation: vec![ALICE, C_I, D_II, D_I, C_II],
            name: Some(LEGACY_INTERLEAVED.into()),
        }
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn len(&self) -> usize {
        self.permutation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutation.is_empty()
    }

    /// Qubit position holding `mode`.
    pub fn position_of(&self, mode: usize) -> Option<usize> {
        self.permutation.iter().position(|&m| m == mode)
    }

    /// Digits of the permutation, e.g. `"01423"`.
    pub fn digits(&self) -> String {
        self.permutation.iter().map(|m| m.to_string()).collect()
    }
}

impl fmt::Display for OperatorOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => f.write_str(n),
            None => f.write_str(&self.digits()),
        }
    }
}

/// Accepts a preset name or a string of distinct digits such as `"01423"`.
impl FromStr for OperatorOrdering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            PHYSICAL => return Ok(Self::physical()),
            LEGACY_INTERLEAVED => return Ok(Self::legacy_interleaved()),
            _ => {}
        }
        let perm: Option<Vec<usize>> = s
            .chars()
            .map(|ch| ch.to_digit(10).map(|d| d as usize))
            .collect();
        match perm {
            Some(p) if p.len() == RINDLER_MODES => Self::new(p),
            _ => Err(Error::InvalidOrdering(format!(
                "{s:?} is neither a preset ({PHYSICAL}, {LEGACY_INTERLEAVED}) nor a \
                 {RINDLER_MODES}-digit permutation"
            ))),
        }
    }
}

/// Sign relating the ordered ket to the canonical one:
/// `ordered = sign · canonical`, where `occupied_in_order` lists the occupied
/// modes by qubit position.
fn reorder_sign(occupied_in_order: &[usize]) -> f64 {
    let mut inversions = 0;
    for (i, a) in occupied_in_order.iter().enumerate() {
        inversions += occupied_in_order[i + 1..].iter().filter(|&&b| b < *a).count();
    }
    if inversions % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Re-expresses `psi` in the qubit basis defined by `ord`. Qubit position 0 is
/// the most significant bit of the register index.
pub fn to_qubit_basis(psi: &StateVector, ord: &OperatorOrdering) -> Result<StateVector> {
    let n = psi.n_modes();
    if ord.len() != n {
        return Err(Error::InvalidOrdering(format!(
            "ordering has {} modes, state has {n}",
            ord.len()
        )));
    }
    let mut out = vec![Complex64::new(0.0, 0.0); psi.dim()];
    let mut occupied = Vec::with_capacity(n);
    for (idx, &amp) in psi.amplitudes().iter().enumerate() {
        occupied.clear();
        let mut qubit_index = 0;
        for &mode in ord.permutation() {
            let bit = (idx >> (n - 1 - mode)) & 1;
            qubit_index = (qubit_index << 1) | bit;
            if bit == 1 {
                occupied.push(mode);
            }
        }
        out[qubit_index] = amp * reorder_sign(&occupied);
    }
    StateVector::from_amplitudes(out)
}
