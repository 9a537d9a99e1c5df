//! Fibonacci numbers, Zeckendorf decomposition, and the ±Fibonacci
//! vertex weights built from them.
//!
//! Indexing is fixed as `f_0 = 0`, `f_1 = f_2 = 1`, and Zeckendorf
//! indices start at 2, so shifting every index down by one always lands
//! on a positive Fibonacci number.

use crate::graph::Digraph;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FibError {
    #[error("Zeckendorf decomposition requires a positive integer, got {0}")]
    NonPositive(u64),
}

/// `k`-th Fibonacci number as an arbitrary-precision integer.
pub fn fibonacci(k: u32) -> BigInt {
    let (mut a, mut b) = (BigInt::from(0u32), BigInt::from(1u32));
    for _ in 0..k {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// Fibonacci numbers up to index 93 fit in a `u64`.
fn fibonacci_u64(k: u32) -> u64 {
    debug_assert!(k <= 93);
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..k {
        let next = a + b;
        a = b;
        b = next;
    }
    a
}

/// Zeckendorf representation: strictly decreasing, non-consecutive
/// Fibonacci indices (each at least 2) whose values sum to the
/// represented integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeckendorfRep {
    indices: Vec<u32>,
}

impl ZeckendorfRep {
    /// Indices in decreasing order.
    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    /// Fibonacci values addressed by the indices, decreasing.
    pub fn values(&self) -> Vec<u64> {
        self.indices.iter().map(|&i| fibonacci_u64(i)).collect()
    }

    /// The represented integer.
    pub fn total(&self) -> u64 {
        self.values().iter().sum()
    }
}

/// Greedy Zeckendorf decomposition of `n >= 1`.
pub fn zeckendorf(n: u64) -> Result<ZeckendorfRep, FibError> {
    if n == 0 {
        return Err(FibError::NonPositive(n));
    }
    // Largest index with f_k <= n, starting from f_2 = 1. Index 93 is the
    // last whose value fits in a u64.
    let mut k = 2u32;
    while k < 93 && fibonacci_u64(k + 1) <= n {
        k += 1;
    }
    let mut indices = Vec::new();
    let mut rest = n;
    while rest > 0 {
        while fibonacci_u64(k) > rest {
            k -= 1;
        }
        indices.push(k);
        rest -= fibonacci_u64(k);
        // Greedy choice never needs the adjacent index.
        k = k.saturating_sub(2).max(2);
    }
    Ok(ZeckendorfRep { indices })
}

/// Sum of the Fibonacci numbers one index below each index of `rep`.
pub fn shift_down_sum(rep: &ZeckendorfRep) -> u64 {
    rep.indices.iter().map(|&i| fibonacci_u64(i - 1)).sum()
}

/// ±Fibonacci weight of a vertex of total degree `d`: `-f_d` when `d` is
/// odd, `+f_d` when even (`f_0 = 0`).
pub fn weight_for_degree(d: u32) -> BigInt {
    let f = fibonacci(d);
    if d % 2 == 1 {
        -f
    } else {
        f
    }
}

/// One ±Fibonacci weight per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<BigInt>,
}

impl WeightVector {
    pub fn new(weights: Vec<BigInt>) -> Self {
        Self { weights }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Weight of vertex `v` (1-based).
    pub fn weight(&self, v: crate::graph::Vertex) -> &BigInt {
        &self.weights[(v - 1) as usize]
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.weights
    }
}

/// Weights of every vertex of `g`, taken from total degrees.
pub fn weight_vector(g: &Digraph) -> WeightVector {
    let profile = g.degree_profile();
    WeightVector {
        weights: profile
            .triples()
            .iter()
            .map(|t| weight_for_degree(t.total()))
            .collect(),
    }
}
