#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rindler_core::fock::{Factor, Ladder, OperatorExpr, StateVector};
use rindler_core::{StateFamily, UnruhParams};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian_complex(rng: &mut impl Rng) -> Complex64 {
    // Box-Muller; fine for test draws.
    let u1: f64 = rng.gen_range(1e-12..1.0);
    let u2: f64 = rng.gen();
    let rad = (-2.0 * u1.ln()).sqrt();
    let th = std::f64::consts::TAU * u2;
    Complex64::new(rad * th.cos(), rad * th.sin())
}

pub fn unit_pair(rng: &mut impl Rng) -> (Complex64, Complex64) {
    let a = gaussian_complex(rng);
    let b = gaussian_complex(rng);
    let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
    (a / n, b / n)
}

pub fn random_family(rng: &mut impl Rng) -> StateFamily {
    let (p, q) = unit_pair(rng);
    let (a1, a2) = unit_pair(rng);
    let (b1, b2) = unit_pair(rng);
    StateFamily::new(p, q, a1, a2, b1, b2).unwrap()
}

pub fn random_params(rng: &mut impl Rng) -> UnruhParams {
    let (qr, ql) = unit_pair(rng);
    let r = rng.gen_range(0.0..=std::f64::consts::FRAC_PI_4);
    UnruhParams::new(r, qr, ql).unwrap()
}

pub fn random_state(rng: &mut impl Rng, n_modes: usize) -> StateVector {
    let amps = (0..1 << n_modes).map(|_| gaussian_complex(rng)).collect();
    StateVector::from_amplitudes(amps).unwrap()
}

pub fn random_expr(rng: &mut impl Rng, n_modes: usize) -> OperatorExpr {
    let n_terms = rng.gen_range(1..5);
    let terms = (0..n_terms)
        .map(|_| {
            let len = rng.gen_range(0..5);
            let factors = (0..len)
                .map(|_| Factor {
                    mode: rng.gen_range(0..n_modes),
                    kind: if rng.gen() { Ladder::Create } else { Ladder::Annihilate },
                })
                .collect();
            rindler_core::fock::Term {
                coeff: gaussian_complex(rng),
                factors,
            }
        })
        .collect();
    OperatorExpr::from_terms(terms)
}

/// Haar-ish random unitary from the QR factorization of a complex Gaussian matrix.
pub fn random_unitary(rng: &mut impl Rng, d: usize) -> DMatrix<Complex64> {
    let g = DMatrix::from_fn(d, d, |_, _| gaussian_complex(rng));
    let qr = g.qr();
    let (q, r) = (qr.q(), qr.r());
    let phases = DMatrix::from_fn(d, d, |i, j| {
        if i == j {
            let z = r[(i, i)];
            z / z.norm()
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    q * phases
}

pub fn kron(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    a.kronecker(b)
}
