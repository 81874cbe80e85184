//! Seeded random parameter draws for the check suite.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rindler_core::StateFamily;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian(rng: &mut impl Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// A uniformly random unit vector in C².
pub fn unit_pair(rng: &mut impl Rng) -> (Complex64, Complex64) {
    let v: [f64; 4] = std::array::from_fn(|_| gaussian(rng));
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    (Complex64::new(v[0] / n, v[1] / n), Complex64::new(v[2] / n, v[3] / n))
}

pub fn random_family(rng: &mut impl Rng) -> StateFamily {
    let (p, q) = unit_pair(rng);
    let (a1, a2) = unit_pair(rng);
    let (b1, b2) = unit_pair(rng);
    StateFamily::new(p, q, a1, a2, b1, b2).expect("unit pairs")
}
