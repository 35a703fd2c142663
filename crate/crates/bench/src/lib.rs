//! Inputs shared by the criterion benches in `benches/`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tangle::geometry::frac;
use tangle::Point;

/// Random rational chain with `len` points on a grid of step `1/den`.
/// Consecutive points are distinct.
pub fn random_chain(rng: &mut ChaCha8Rng, len: usize, den: i64) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(len);
    while out.len() < len {
        let p = Point::new(frac(rng.random_range(-100..=100), den), frac(rng.random_range(-100..=100), den));
        if out.last() != Some(&p) {
            out.push(p);
        }
    }
    out
}

/// `count` chain pairs from a fixed seed.
pub fn chain_pairs(seed: u64, count: usize, len: usize, den: i64) -> Vec<(Vec<Point>, Vec<Point>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (random_chain(&mut rng, len, den), random_chain(&mut rng, len, den))).collect()
}
