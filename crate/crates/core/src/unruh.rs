//! Unruh modes, the Unruh vacuum over Rindler modes, and the Alice–Rob state
//! family for a Grassmann scalar field.
//!
//! A single Unruh mode mixes particle and antiparticle Rindler operators of
//! both wedges:
//!
//! ```text
//! C†_U = q_R (cos r c†_I − sin r d_II) + q_L (cos r c†_II − sin r d_I)
//! ```
//!
//! `r ∈ [0, π/4]`; `r = π/4` is the infinite-acceleration limit.
//!
//! Two normalizations differ from the usual printed forms. The Unruh vacuum is
//! built without an overall `1/2`: the trigonometric coefficients already give
//! unit norm, and a leading `1/2` would leave it at norm `1/2`. At `r = π/4`
//! the Unruh creation operator equals `(a†_I + a†_II)/√2`, keeping the
//! `cos r = sin r = 1/√2` factor. Neither choice affects entanglement, since
//! the region-I operator is only needed up to scale.

use std::f64::consts::{FRAC_PI_4, SQRT_2};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{
    apply_operator, OperatorExpr, StateVector, ALICE, C_I, C_II, D_I, D_II, RINDLER_MODES,
};

/// Tolerance for the unit-norm constraints on parameter pairs.
pub const PARAM_TOL: f64 = 1e-12;

/// How close `r` must be to π/4 to count as the infinite-acceleration limit.
pub const LIMIT_TOL: f64 = 1e-12;

/// Default `q_R` sample points.
pub fn default_qr_grid() -> Vec<f64> {
    vec![0.0, 0.3, 0.5, std::f64::consts::FRAC_1_SQRT_2, 0.8, 0.9, 0.95, 1.0]
}

/// `n` uniformly spaced values on `[0, π/4]`, both endpoints included and the
/// last one exactly `FRAC_PI_4`. A single point is the limit itself.
pub fn r_grid(n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![FRAC_PI_4],
        _ => (0..n)
            .map(|i| {
                if i == n - 1 {
                    FRAC_PI_4
                } else {
                    FRAC_PI_4 * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

pub fn is_infinite_acceleration(r: f64) -> bool {
    (r - FRAC_PI_4).abs() <= LIMIT_TOL
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn check_r(r: f64) -> Result<()> {
    if !(0.0..=FRAC_PI_4).contains(&r) {
        return Err(Error::InvalidParameter(format!(
            "acceleration parameter r = {r} outside [0, π/4]"
        )));
    }
    Ok(())
}

fn check_pair(name: &str, x: Complex64, y: Complex64) -> Result<()> {
    let n = x.norm_sqr() + y.norm_sqr();
    if !n.is_finite() || (n - 1.0).abs() > PARAM_TOL {
        return Err(Error::InvalidParameter(format!(
            "{name} must satisfy |·|² + |·|² = 1, got {n}"
        )));
    }
    Ok(())
}

/// `(r, q_R, q_L)` selecting one Unruh mode at one acceleration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnruhParams {
    r: f64,
    q_r: Complex64,
    q_l: Complex64,
}

impl UnruhParams {
    pub fn new(r: f64, q_r: Complex64, q_l: Complex64) -> Result<Self> {
        check_r(r)?;
        check_pair("(q_R, q_L)", q_r, q_l)?;
        Ok(Self { r, q_r, q_l })
    }

    /// Real `q_R ∈ [0, 1]` with `q_L = √(1 − q_R²)`.
    pub fn real(r: f64, q_r: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&q_r) {
            return Err(Error::InvalidParameter(format!("q_R = {q_r} outside [0, 1]")));
        }
        Self::new(r, c(q_r), c((1.0 - q_r * q_r).sqrt()))
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn q_r(&self) -> Complex64 {
        self.q_r
    }

    pub fn q_l(&self) -> Complex64 {
        self.q_l
    }

    pub fn with_r(&self, r: f64) -> Result<Self> {
        Self::new(r, self.q_r, self.q_l)
    }
}

/// Amplitudes of `P|0⟩_A[a1 + a2 C†_U]|0⟩_U + Q|1⟩_A[b1 + b2 C†_U]|0⟩_U`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateFamily {
    pub p: Complex64,
    pub q: Complex64,
    pub a1: Complex64,
    pub a2: Complex64,
    pub b1: Complex64,
    pub b2: Complex64,
}

impl StateFamily {
    pub fn new(
        p: Complex64,
        q: Complex64,
        a1: Complex64,
        a2: Complex64,
        b1: Complex64,
        b2: Complex64,
    ) -> Result<Self> {
        check_pair("(P, Q)", p, q)?;
        check_pair("(a1, a2)", a1, a2)?;
        check_pair("(b1, b2)", b1, b2)?;
        Ok(Self { p, q, a1, a2, b1, b2 })
    }

    /// `P = Q = 1/√2, a1 = b2 = 1, a2 = b1 = 0`: Alice maximally entangled
    /// with the occupation of the Unruh mode.
    pub fn maximally_entangled() -> Self {
        let h = c(std::f64::consts::FRAC_1_SQRT_2);
        Self {
            p: h,
            q: h,
            a1: c(1.0),
            a2: c(0.0),
            b1: c(0.0),
            b2: c(1.0),
        }
    }

    /// Alice in `|0⟩` and the field in the Unruh vacuum.
    pub fn vacuum() -> Self {
        Self {
            p: c(1.0),
            q: c(0.0),
            a1: c(1.0),
            a2: c(0.0),
            b1: c(1.0),
            b2: c(0.0),
        }
    }

    pub fn as_array(&self) -> [Complex64; 6] {
        [self.p, self.q, self.a1, self.a2, self.b1, self.b2]
    }
}

/// `C†_U` as a four-term expression over the Rindler modes.
pub fn unruh_creation(p: &UnruhParams) -> OperatorExpr {
    let (s, co) = p.r.sin_cos();
    OperatorExpr::create(C_I).scale(p.q_r * co)
        + OperatorExpr::annihilate(D_II).scale(-p.q_r * s)
        + OperatorExpr::create(C_II).scale(p.q_l * co)
        + OperatorExpr::annihilate(D_I).scale(-p.q_l * s)
}

/// `C_U`, the adjoint of [`unruh_creation`].
pub fn unruh_annihilation(p: &UnruhParams) -> OperatorExpr {
    unruh_creation(p).adjoint()
}

/// `(a†_I, a†_II) = (q_R c†_I − q_L d_I, q_L c†_II − q_R d_II)`.
pub fn region_modes(p: &UnruhParams) -> (OperatorExpr, OperatorExpr) {
    let a_i = OperatorExpr::create(C_I).scale(p.q_r) + OperatorExpr::annihilate(D_I).scale(-p.q_l);
    let a_ii =
        OperatorExpr::create(C_II).scale(p.q_l) + OperatorExpr::annihilate(D_II).scale(-p.q_r);
    (a_i, a_ii)
}

/// Operator that maps the Rindler vacuum to the Unruh vacuum.
pub fn unruh_vacuum_operator(r: f64) -> Result<OperatorExpr> {
    check_r(r)?;
    let (s, co) = r.sin_cos();
    let cr = OperatorExpr::create;
    Ok(OperatorExpr::scalar(c(co * co))
        + (cr(C_II) * cr(D_I)).scale(c(co * s))
        + (cr(D_II) * cr(C_I)).scale(c(-co * s))
        + (cr(D_II) * cr(C_II) * cr(C_I) * cr(D_I)).scale(c(s * s)))
}

/// The Unruh vacuum on the five-mode space, Alice's mode empty.
pub fn unruh_vacuum(r: f64) -> Result<StateVector> {
    let op = unruh_vacuum_operator(r)?;
    let v = apply_operator(&op, &StateVector::vacuum(RINDLER_MODES))?;
    let n = v.norm();
    if (n - 1.0).abs() > 1e-12 {
        return Err(Error::Internal(format!("Unruh vacuum norm {n} at r = {r}")));
    }
    Ok(v)
}

/// The Alice-side operator `P(a1 + a2 X) + Q a†_A (b1 + b2 X)` for a given
/// field excitation `X`.
fn alice_dressing(f: &StateFamily, excitation: OperatorExpr) -> OperatorExpr {
    let branch = |w1: Complex64, w2: Complex64| {
        OperatorExpr::scalar(w1) + excitation.clone().scale(w2)
    };
    branch(f.a1, f.a2).scale(f.p) + (OperatorExpr::create(ALICE) * branch(f.b1, f.b2)).scale(f.q)
}

/// `|Ψ⟩` on the five-mode space. The result is checked, not renormalized.
pub fn build_state(f: &StateFamily, p: &UnruhParams) -> Result<StateVector> {
    let vac = unruh_vacuum(p.r)?;
    let psi = apply_operator(&alice_dressing(f, unruh_creation(p)), &vac)?;
    let n = psi.norm();
    if (n - 1.0).abs() > 1e-9 {
        return Err(Error::Internal(format!("state norm {n} deviates from 1")));
    }
    Ok(psi)
}

/// `A_I` with `A_I |0⟩_A|0⟩_U = |Ψ⟩` at `r = π/4`.
///
/// Uses `C†_U |0⟩_U = √2 a†_I |0⟩_U`, which only holds in the limit. The
/// result touches Alice and region-I modes only.
pub fn region_i_operator(f: &StateFamily, p: &UnruhParams) -> Result<OperatorExpr> {
    if !is_infinite_acceleration(p.r) {
        return Err(Error::InvalidParameter(format!(
            "region-I operator requires r = π/4, got r = {}",
            p.r
        )));
    }
    let (a_i, _) = region_modes(p);
    Ok(alice_dressing(f, a_i.scale(c(SQRT_2))).simplified())
}
