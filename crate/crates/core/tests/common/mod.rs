//! Deterministic randomness helpers shared by the integration suites.

use khazamula::graph::Digraph;
use num_bigint::BigInt;
use num_rational::BigRational;

pub struct XorShift64 {
    state: u64,
}

impl XorShift64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed | 1 }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x
    }

    /// Uniform in `[0, bound)`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

pub fn random_digraph(rng: &mut XorShift64, max_n: u32) -> Digraph {
    let n = 1 + rng.below(max_n as u64) as u32;
    let mut arcs = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j && rng.below(3) == 0 {
                arcs.push((i, j));
            }
        }
    }
    Digraph::new(n, arcs).expect("generated arcs are valid")
}

pub fn random_permutation(rng: &mut XorShift64, n: u32) -> Vec<u32> {
    let mut perm: Vec<u32> = (1..=n).collect();
    for i in (1..perm.len()).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        perm.swap(i, j);
    }
    perm
}

pub fn relabel(g: &Digraph, perm: &[u32]) -> Digraph {
    let arcs: Vec<(u32, u32)> = g
        .arcs()
        .iter()
        .map(|&(t, h)| (perm[(t - 1) as usize], perm[(h - 1) as usize]))
        .collect();
    Digraph::new(g.vertex_count(), arcs).expect("permutation preserves validity")
}

/// Small random rational with numerator in `[-9, 9]` and denominator in
/// `[1, 5]`.
pub fn random_rational(rng: &mut XorShift64) -> BigRational {
    let numer = rng.below(19) as i64 - 9;
    let denom = 1 + rng.below(5) as i64;
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}
