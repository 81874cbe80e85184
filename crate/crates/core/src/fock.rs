//! Dense fermionic Fock space over a small, fixed set of modes.
//!
//! Conventions used throughout the crate:
//!
//! * **Canonical order.** Modes are numbered `0..n` by their position in a
//!   [`ModeTable`]. For the Rindler setting this is `(A, c_I, d_I, c_II, d_II)`.
//! * **Basis kets.** `|n_0 n_1 … n_{n-1}⟩ = (f†_0)^{n_0} (f†_1)^{n_1} ⋯ (f†_{n-1})^{n_{n-1}} |0⟩`.
//! * **Indexing.** Big-endian: mode 0 is the most significant bit, so
//!   `index = Σ_k n_k · 2^(n-1-k)`.
//! * **Signs.** `f†_k` and `f_k` pick up `(-1)^(Σ_{j<k} n_j)`, a Jordan-Wigner
//!   string over the modes that precede `k` in canonical order.
//! * **Monomials** are read as operator products: the rightmost factor acts
//!   first. `[c†_I, d†_I]` applied to the vacuum creates `d_I` first, then `c_I`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub const ALICE: usize = 0;
pub const C_I: usize = 1;
pub const D_I: usize = 2;
pub const C_II: usize = 3;
pub const D_II: usize = 4;

/// Number of modes in the Rindler setting.
pub const RINDLER_MODES: usize = 5;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Ordered, immutable set of mode labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeTable {
    labels: Vec<String>,
}

impl ModeTable {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() || labels.len() > 16 {
            return Err(Error::InvalidParameter(format!(
                "mode table needs between 1 and 16 modes, got {}",
                labels.len()
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidParameter(format!("duplicate mode label {l:?}")));
            }
        }
        Ok(Self { labels })
    }

    /// `(A, c_I, d_I, c_II, d_II)`.
    pub fn rindler() -> Self {
        Self {
            labels: ["A", "c_I", "d_I", "c_II", "d_II"].map(String::from).to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Hilbert space dimension, `2^n`.
    pub fn dim(&self) -> usize {
        1 << self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, mode: usize) -> Option<&str> {
        self.labels.get(mode).map(String::as_str)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// An occupation-number basis ket, stored as its big-endian index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisState {
    n_modes: usize,
    index: usize,
}

impl BasisState {
    pub fn from_index(n_modes: usize, index: usize) -> Result<Self> {
        if index >= 1 << n_modes {
            return Err(Error::DimensionMismatch {
                expected: 1 << n_modes,
                found: index,
            });
        }
        Ok(Self { n_modes, index })
    }

    pub fn from_occupations(occupations: &[u8]) -> Result<Self> {
        let mut index = 0;
        for &n in occupations {
            if n > 1 {
                return Err(Error::InvalidParameter(format!(
                    "fermionic occupation must be 0 or 1, got {n}"
                )));
            }
            index = (index << 1) | n as usize;
        }
        Ok(Self {
            n_modes: occupations.len(),
            index,
        })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn is_occupied(&self, mode: usize) -> bool {
        mode < self.n_modes && self.index & mode_bit(self.n_modes, mode) != 0
    }

    pub fn occupations(&self) -> Vec<u8> {
        (0..self.n_modes).map(|m| self.is_occupied(m) as u8).collect()
    }
}

impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for n in self.occupations() {
            write!(f, "{n}")?;
        }
        write!(f, "⟩")
    }
}

#[inline]
fn mode_bit(n_modes: usize, mode: usize) -> usize {
    1 << (n_modes - 1 - mode)
}

/// `(-1)^(number of occupied modes preceding `mode`)`.
#[inline]
fn jw_sign(n_modes: usize, mode: usize, index: usize) -> f64 {
    if (index >> (n_modes - mode)).count_ones().is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Complex amplitudes over the `2^n` occupation basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_modes: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn zeros(n_modes: usize) -> Self {
        Self {
            n_modes,
            amps: vec![ZERO; 1 << n_modes],
        }
    }

    pub fn vacuum(n_modes: usize) -> Self {
        Self::basis(BasisState { n_modes, index: 0 })
    }

    pub fn basis(ket: BasisState) -> Self {
        let mut s = Self::zeros(ket.n_modes);
        s.amps[ket.index] = ONE;
        s
    }

    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::DimensionMismatch {
                expected: len.next_power_of_two().max(2),
                found: len,
            });
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::InvalidParameter("non-finite amplitude".into()));
        }
        Ok(Self {
            n_modes: len.trailing_zeros() as usize,
            amps,
        })
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, ket: BasisState) -> Complex64 {
        self.amps[ket.index]
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// True when `|‖ψ‖ − 1| ≤ 1e-12`.
    pub fn is_normalized(&self) -> bool {
        (self.norm() - 1.0).abs() <= 1e-12
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::InvalidParameter("cannot normalize the zero vector".into()));
        }
        Ok(self.scale(Complex64::new(1.0 / n, 0.0)))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            n_modes: self.n_modes,
            amps: self.amps.iter().map(|a| a * c).collect(),
        }
    }

    /// Entrywise difference; both vectors must live on the same space.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_same_dim(self, other)?;
        Ok(Self {
            n_modes: self.n_modes,
            amps: self.amps.iter().zip(&other.amps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        check_same_dim(self, other)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Nonzero kets and their amplitudes, in index order.
    pub fn support(&self, tol: f64) -> Vec<(BasisState, Complex64)> {
        self.amps
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > tol)
            .map(|(index, &a)| {
                (
                    BasisState {
                        n_modes: self.n_modes,
                        index,
                    },
                    a,
                )
            })
            .collect()
    }

    fn add_assign_scaled(&mut self, other: &Self, c: Complex64) {
        for (a, b) in self.amps.iter_mut().zip(&other.amps) {
            *a += b * c;
        }
    }
}

fn check_same_dim(a: &StateVector, b: &StateVector) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ladder {
    Create,
    Annihilate,
}

impl Ladder {
    pub fn dagger(self) -> Self {
        match self {
            Ladder::Create => Ladder::Annihilate,
            Ladder::Annihilate => Ladder::Create,
        }
    }
}

/// One ladder operator in a monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub mode: usize,
    pub kind: Ladder,
}

impl Factor {
    pub fn create(mode: usize) -> Self {
        Self {
            mode,
            kind: Ladder::Create,
        }
    }

    pub fn annihilate(mode: usize) -> Self {
        Self {
            mode,
            kind: Ladder::Annihilate,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coeff: Complex64,
    /// Application order is right to left.
    pub factors: Vec<Factor>,
}

/// A complex-weighted sum of ladder-operator monomials.
///
/// Products are concatenations of factor lists, so `(a * b)` applies `b`
/// first. No normal ordering is performed; [`OperatorExpr::simplified`] only
/// merges syntactically identical monomials.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OperatorExpr {
    terms: Vec<Term>,
}

impl OperatorExpr {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn identity() -> Self {
        Self::scalar(ONE)
    }

    pub fn scalar(c: Complex64) -> Self {
        Self {
            terms: vec![Term {
                coeff: c,
                factors: Vec::new(),
            }],
        }
    }

    pub fn create(mode: usize) -> Self {
        Self::monomial(ONE, vec![Factor::create(mode)])
    }

    pub fn annihilate(mode: usize) -> Self {
        Self::monomial(ONE, vec![Factor::annihilate(mode)])
    }

    pub fn monomial(coeff: Complex64, factors: Vec<Factor>) -> Self {
        Self {
            terms: vec![Term { coeff, factors }],
        }
    }

    pub fn from_terms(terms: Vec<Term>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff * c,
                    factors: t.factors.clone(),
                })
                .collect(),
        }
    }

    /// Reverses every monomial, swaps create and annihilate, conjugates
    /// coefficients.
    pub fn adjoint(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.conj(),
                    factors: t
                        .factors
                        .iter()
                        .rev()
                        .map(|f| Factor {
                            mode: f.mode,
                            kind: f.kind.dagger(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    /// `{self, other}`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        self.clone() * other.clone() + other.clone() * self.clone()
    }

    /// Largest mode index referenced, if any.
    pub fn max_mode(&self) -> Option<usize> {
        self.terms
            .iter()
            .flat_map(|t| t.factors.iter().map(|f| f.mode))
            .max()
    }

    /// Sorted, deduplicated set of modes the expression touches.
    pub fn modes(&self) -> Vec<usize> {
        let mut m: Vec<usize> = self
            .terms
            .iter()
            .flat_map(|t| t.factors.iter().map(|f| f.mode))
            .collect();
        m.sort_unstable();
        m.dedup();
        m
    }

    /// Merges identical monomials (first-appearance order) and drops exact
    /// zero coefficients.
    pub fn simplified(&self) -> Self {
        let mut out: Vec<Term> = Vec::new();
        for t in &self.terms {
            match out.iter_mut().find(|o| o.factors == t.factors) {
                Some(o) => o.coeff += t.coeff,
                None => out.push(t.clone()),
            }
        }
        out.retain(|t| t.coeff != ZERO);
        Self { terms: out }
    }

    /// Monomial-wise coefficient comparison after merging.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let a = self.simplified();
        let b = other.simplified();
        let coeff_of = |e: &Self, factors: &[Factor]| {
            e.terms
                .iter()
                .find(|t| t.factors == factors)
                .map_or(ZERO, |t| t.coeff)
        };
        a.terms
            .iter()
            .chain(&b.terms)
            .all(|t| (coeff_of(&a, &t.factors) - coeff_of(&b, &t.factors)).norm() <= tol)
    }

    /// Re-labels modes through `map(old) -> new`.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff,
                    factors: t
                        .factors
                        .iter()
                        .map(|f| Factor {
                            mode: map(f.mode),
                            kind: f.kind,
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl Add for OperatorExpr {
    type Output = OperatorExpr;
    fn add(mut self, rhs: Self) -> Self {
        self.terms.extend(rhs.terms);
        self
    }
}

impl Sub for OperatorExpr {
    type Output = OperatorExpr;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for OperatorExpr {
    type Output = OperatorExpr;
    fn neg(self) -> Self {
        self.scale(-ONE)
    }
}

impl Mul for OperatorExpr {
    type Output = OperatorExpr;
    fn mul(self, rhs: Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for l in &self.terms {
            for r in &rhs.terms {
                let mut factors = l.factors.clone();
                factors.extend_from_slice(&r.factors);
                terms.push(Term {
                    coeff: l.coeff * r.coeff,
                    factors,
                });
            }
        }
        Self { terms }
    }
}

impl Mul<OperatorExpr> for Complex64 {
    type Output = OperatorExpr;
    fn mul(self, rhs: OperatorExpr) -> OperatorExpr {
        rhs.scale(self)
    }
}

impl Mul<OperatorExpr> for f64 {
    type Output = OperatorExpr;
    fn mul(self, rhs: OperatorExpr) -> OperatorExpr {
        rhs.scale(Complex64::new(self, 0.0))
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", t.coeff)?;
            if t.factors.is_empty() {
                write!(f, "·1")?;
            }
            for fac in &t.factors {
                match fac.kind {
                    Ladder::Create => write!(f, "·f†{}", fac.mode)?,
                    Ladder::Annihilate => write!(f, "·f{}", fac.mode)?,
                }
            }
        }
        Ok(())
    }
}

fn check_mode(mode: usize, n_modes: usize) -> Result<()> {
    if mode >= n_modes {
        return Err(Error::InvalidMode {
            index: mode,
            count: n_modes,
        });
    }
    Ok(())
}

fn apply_factor(factor: Factor, psi: &StateVector) -> StateVector {
    let n = psi.n_modes;
    let bit = mode_bit(n, factor.mode);
    let mut out = StateVector::zeros(n);
    for (idx, &a) in psi.amps.iter().enumerate() {
        if a == ZERO {
            continue;
        }
        let occupied = idx & bit != 0;
        let target = match (factor.kind, occupied) {
            (Ladder::Create, false) | (Ladder::Annihilate, true) => idx ^ bit,
            _ => continue,
        };
        out.amps[target] += a * jw_sign(n, factor.mode, idx);
    }
    out
}

/// `f†_mode |ψ⟩`.
pub fn apply_creation(mode: usize, psi: &StateVector) -> Result<StateVector> {
    check_mode(mode, psi.n_modes)?;
    Ok(apply_factor(Factor::create(mode), psi))
}

/// `f_mode |ψ⟩`.
pub fn apply_annihilation(mode: usize, psi: &StateVector) -> Result<StateVector> {
    check_mode(mode, psi.n_modes)?;
    Ok(apply_factor(Factor::annihilate(mode), psi))
}

/// Applies each term's factors right to left and sums the weighted results.
pub fn apply_operator(op: &OperatorExpr, psi: &StateVector) -> Result<StateVector> {
    if let Some(m) = op.max_mode() {
        check_mode(m, psi.n_modes)?;
    }
    let mut out = StateVector::zeros(psi.n_modes);
    for term in &op.terms {
        let mut v = psi.clone();
        for &f in term.factors.iter().rev() {
            v = apply_factor(f, &v);
        }
        out.add_assign_scaled(&v, term.coeff);
    }
    Ok(out)
}

/// Dense matrix of `op` on an `n_modes` Fock space; column `j` is `op|j⟩`.
pub fn operator_matrix(op: &OperatorExpr, n_modes: usize) -> Result<DMatrix<Complex64>> {
    if let Some(m) = op.max_mode() {
        check_mode(m, n_modes)?;
    }
    let dim = 1 << n_modes;
    let mut mat = DMatrix::from_element(dim, dim, ZERO);
    for j in 0..dim {
        let col = apply_operator(op, &StateVector::basis(BasisState { n_modes, index: j }))?;
        for (i, &a) in col.amps.iter().enumerate() {
            mat[(i, j)] = a;
        }
    }
    Ok(mat)
}

/// `⟨φ|ψ⟩`, conjugate-linear in `phi`.
pub fn inner_product(phi: &StateVector, psi: &StateVector) -> Result<Complex64> {
    check_same_dim(phi, psi)?;
    Ok(phi
        .amps
        .iter()
        .zip(&psi.amps)
        .map(|(a, b)| a.conj() * b)
        .sum())
}

/// `⟨ψ|O|ψ⟩`.
pub fn expectation(op: &OperatorExpr, psi: &StateVector) -> Result<Complex64> {
    inner_product(psi, &apply_operator(op, psi)?)
}
