//! Seeded randomness for property-style tests. xorshift64* keeps runs
//! reproducible without pulling in an RNG dependency.

use crate::scalar::GaussianRational;
use crate::spinor::{IndexSet, Spinor, Vector2d};

pub struct Rng(pub u64);

impl Rng {
    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn small(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % ((hi - lo + 1) as u64)) as i64
    }

    pub fn usize_below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

pub fn rand_scalar(rng: &mut Rng) -> GaussianRational {
    GaussianRational::from_parts(rng.small(-3, 3), 1, rng.small(-2, 2), 1)
}

pub fn rand_vec(rng: &mut Rng, d: usize) -> Vector2d {
    let mut v = Vector2d::zero(d);
    for i in 0..d {
        v.ann[i] = rand_scalar(rng);
        v.cre[i] = rand_scalar(rng);
    }
    v
}

pub fn rand_spinor(rng: &mut Rng, d: usize) -> Spinor {
    let mut s = Spinor::zero(d);
    for _ in 0..3 {
        let mask = (rng.next() % (1 << d)) as u32;
        s.add_term(IndexSet(mask), rand_scalar(rng));
    }
    if s.is_zero() {
        s.add_term(IndexSet::empty(), GaussianRational::one());
    }
    s
}

/// Random even-chirality spinor (stays inside S^+).
pub fn rand_even_spinor(rng: &mut Rng, d: usize) -> Spinor {
    let mut s = Spinor::zero(d);
    for _ in 0..3 {
        let mut mask = (rng.next() % (1 << d)) as u32;
        if mask.count_ones() % 2 == 1 {
            mask ^= 1;
        }
        s.add_term(IndexSet(mask), rand_scalar(rng));
    }
    if s.is_zero() {
        s.add_term(IndexSet::empty(), GaussianRational::one());
    }
    s
}
