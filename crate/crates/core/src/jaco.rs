//! Finite Jaco graphs `J_n(1)`.
//!
//! `J_n(1)` lives on vertices `1..=n`; vertex `i` sends arcs to the next
//! `d⁺(v_i)` vertices, where `d⁺(v_i)` is Bettina's theorem applied to
//! `i`: the shift-down sum of the Zeckendorf decomposition of `i`. In
//! the infinite root graph vertex `i` has total degree `i`; truncating
//! to `n` vertices removes only out-arcs, so the finite degree of `v_j`
//! is `j` while `j + d⁺(v_j) <= n` and `d⁻(v_j) + (n - j)` after that.

use crate::fib::{shift_down_sum, weight_for_degree, zeckendorf, WeightVector};
use crate::graph::{Digraph, Vertex};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JacoError {
    #[error("Jaco graphs need at least one vertex")]
    ZeroOrder,
}

/// One vertex of `J_n(1)`: in-degree, out-degree in the infinite root
/// graph, finite degree, and ±Fibonacci weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacoRow {
    pub index: u32,
    pub in_degree: u32,
    pub out_degree_infinite: u32,
    pub degree: u32,
    pub weight: BigInt,
}

/// Out-degree of vertex `i` in the infinite root graph (Bettina's
/// theorem).
pub fn infinite_out_degree(i: u32) -> Result<u32, JacoError> {
    if i < 1 {
        return Err(JacoError::ZeroOrder);
    }
    let rep = zeckendorf(i as u64).expect("positive index");
    Ok(shift_down_sum(&rep) as u32)
}

/// Degree sequence of `J_n(1)`, one row per vertex.
pub fn degree_sequence(n: u32) -> Result<Vec<JacoRow>, JacoError> {
    if n < 1 {
        return Err(JacoError::ZeroOrder);
    }
    (1..=n)
        .map(|j| {
            let out_inf = infinite_out_degree(j)?;
            let in_deg = j - out_inf;
            let degree = if j + out_inf <= n {
                j
            } else {
                in_deg + (n - j)
            };
            Ok(JacoRow {
                index: j,
                in_degree: in_deg,
                out_degree_infinite: out_inf,
                degree,
                weight: weight_for_degree(degree),
            })
        })
        .collect()
}

/// The digraph `J_n(1)`: vertex `i` arcs to `i+1 ..= min(n, i + d⁺(v_i))`.
pub fn build_jaco(n: u32) -> Result<Digraph, JacoError> {
    if n < 1 {
        return Err(JacoError::ZeroOrder);
    }
    let mut arcs = Vec::new();
    for i in 1..=n {
        let reach = (i + infinite_out_degree(i)?).min(n);
        for j in i + 1..=reach {
            arcs.push((i, j));
        }
    }
    Ok(Digraph::new(n, arcs).expect("arc rule yields a valid digraph"))
}

/// Vertices attaining the maximum degree of `J_n(1)`.
pub fn jaconian_vertices(n: u32) -> Result<Vec<Vertex>, JacoError> {
    let rows = degree_sequence(n)?;
    let max = rows.iter().map(|r| r.degree).max().expect("n >= 1");
    Ok(rows
        .iter()
        .filter(|r| r.degree == max)
        .map(|r| r.index)
        .collect())
}

/// ±Fibonacci weight sequence of `J_n(1)`.
pub fn weight_sequence(n: u32) -> Result<WeightVector, JacoError> {
    let rows = degree_sequence(n)?;
    Ok(WeightVector::new(
        rows.into_iter().map(|r| r.weight).collect(),
    ))
}
