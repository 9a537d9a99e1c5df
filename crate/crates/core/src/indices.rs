//! Zagreb-style indices on undirected views.
//!
//! The classical family works on vertex degrees: `M1 = Σ d(v)²`,
//! `M2 = Σ_edges d(u)d(v)`, `M3 = Σ_edges |d(u) - d(v)|` (Albertson
//! irregularity), `M4 = Σ_pairs |d(u) - d(v)|` (total irregularity).
//! The weighted family `Z1..Z4` replaces degrees with ±Fibonacci
//! weights; `Z1` sums squared weights over vertices.

use crate::fib::WeightVector;
use crate::graph::UndirectedView;
use crate::jaco::{self, JacoError};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("weight vector has {weights} entries for {vertices} vertices")]
    WeightCountMismatch { vertices: u32, weights: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZagrebIndices {
    pub m1: BigInt,
    pub m2: BigInt,
    pub m3: BigInt,
    pub m4: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FZagrebIndices {
    pub z1: BigInt,
    pub z2: BigInt,
    pub z3: BigInt,
    pub z4: BigInt,
}

fn four_sums(view: &UndirectedView, value: &[BigInt]) -> (BigInt, BigInt, BigInt, BigInt) {
    let square_sum: BigInt = value.iter().map(|w| w * w).sum();
    let mut edge_product = BigInt::zero();
    let mut edge_gap = BigInt::zero();
    for &(u, v) in view.edges() {
        let (wu, wv) = (&value[(u - 1) as usize], &value[(v - 1) as usize]);
        edge_product += wu * wv;
        edge_gap += (wu - wv).abs();
    }
    let mut pair_gap = BigInt::zero();
    for i in 0..value.len() {
        for j in i + 1..value.len() {
            pair_gap += (&value[i] - &value[j]).abs();
        }
    }
    (square_sum, edge_product, edge_gap, pair_gap)
}

/// Classical Zagreb/irregularity indices of an undirected view. All four
/// are zero on the singleton graph.
pub fn zagreb(view: &UndirectedView) -> ZagrebIndices {
    let degrees: Vec<BigInt> = view.degrees().into_iter().map(BigInt::from).collect();
    let (m1, m2, m3, m4) = four_sums(view, &degrees);
    ZagrebIndices { m1, m2, m3, m4 }
}

/// Weighted counterparts computed from one weight per vertex.
pub fn f_zagreb(
    view: &UndirectedView,
    weights: &WeightVector,
) -> Result<FZagrebIndices, IndexError> {
    if weights.len() != view.vertex_count() as usize {
        return Err(IndexError::WeightCountMismatch {
            vertices: view.vertex_count(),
            weights: weights.len(),
        });
    }
    let (z1, z2, z3, z4) = four_sums(view, weights.weights());
    Ok(FZagrebIndices { z1, z2, z3, z4 })
}

/// Edge-sum variant sometimes quoted as equal to `Z1`:
/// `Σ_edges (|w(u)| + |w(v)|)`. It equals the vertex form only when every
/// weight magnitude times its vertex degree averages out; `Z1` proper is
/// always the vertex form.
pub fn z1_edge_form(
    view: &UndirectedView,
    weights: &WeightVector,
) -> Result<BigInt, IndexError> {
    if weights.len() != view.vertex_count() as usize {
        return Err(IndexError::WeightCountMismatch {
            vertices: view.vertex_count(),
            weights: weights.len(),
        });
    }
    let mut total = BigInt::zero();
    for &(u, v) in view.edges() {
        total += weights.weight(u).abs() + weights.weight(v).abs();
    }
    Ok(total)
}

/// One row of the `J_n(1)` index table: `n`, in/out degree of vertex `n`
/// in the infinite root graph, and the weighted indices of `J_n(1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacoIndexRow {
    pub n: u32,
    pub in_degree: u32,
    pub out_degree_infinite: u32,
    pub indices: FZagrebIndices,
}

pub fn jaco_index_row(n: u32) -> Result<JacoIndexRow, JacoError> {
    let graph = jaco::build_jaco(n)?;
    let weights = jaco::weight_sequence(n)?;
    let indices = f_zagreb(&graph.underlying_simple_graph(), &weights)
        .expect("weight sequence length equals vertex count");
    let last = &jaco::degree_sequence(n)?[(n - 1) as usize];
    Ok(JacoIndexRow {
        n,
        in_degree: last.in_degree,
        out_degree_infinite: last.out_degree_infinite,
        indices,
    })
}
