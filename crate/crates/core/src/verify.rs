//! Claim catalog and adjudication suite.
//!
//! Every claim pairs a definitional computation (the index or
//! irregularity evaluated straight from its definition) with a claimed
//! closed form or reference table row. The suite evaluates both sides,
//! emits one record per instance, and tags each record with the verdict
//! it is expected to produce: claims known to disagree with definitional
//! computation are adjudicated as documented mismatches, never
//! suppressed and never patched over.
//!
//! Definitional values are double-checked through an independent route
//! before any comparison: linear totals against a direct antiderivative
//! evaluation, circular totals against adaptive quadrature, table rows
//! against a second derivation path.

use crate::fib::{weight_for_degree, weight_vector, WeightVector};
use crate::graph::{
    build_bipartite_lr, build_cycle, build_path, build_wheel, directed_join, Digraph,
};
use crate::indices::{jaco_index_row, FZagrebIndices};
use crate::irregularity::{
    head_degree, irr_k, irr_kc_report, quad_reference, CircReport, Convention, LinearParams,
};
use crate::jaco;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::f64::consts::PI;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{family}: parameter out of range ({detail})")]
    ParameterOutOfRange { family: &'static str, detail: String },
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
}

/// Identifiers of the verifiable claims, in catalog order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    Table1,
    Table2,
    Prop3_1,
    Prop3_2,
    Prop3_3,
    Prop3_4,
    Prop3_5,
    Prop3_6,
    Prop3_7,
    Prop3_8,
    Thm3_1,
    Ex1,
    Ex2,
}

impl ClaimId {
    pub const ALL: [ClaimId; 13] = [
        ClaimId::Table1,
        ClaimId::Table2,
        ClaimId::Prop3_1,
        ClaimId::Prop3_2,
        ClaimId::Prop3_3,
        ClaimId::Prop3_4,
        ClaimId::Prop3_5,
        ClaimId::Prop3_6,
        ClaimId::Prop3_7,
        ClaimId::Prop3_8,
        ClaimId::Thm3_1,
        ClaimId::Ex1,
        ClaimId::Ex2,
    ];

    pub fn parse(text: &str) -> Result<ClaimId, VerifyError> {
        match text.trim().to_ascii_lowercase().as_str() {
            "table1" => Ok(ClaimId::Table1),
            "table2" => Ok(ClaimId::Table2),
            "prop3.1" => Ok(ClaimId::Prop3_1),
            "prop3.2" => Ok(ClaimId::Prop3_2),
            "prop3.3" => Ok(ClaimId::Prop3_3),
            "prop3.4" => Ok(ClaimId::Prop3_4),
            "prop3.5" => Ok(ClaimId::Prop3_5),
            "prop3.6" => Ok(ClaimId::Prop3_6),
            "prop3.7" => Ok(ClaimId::Prop3_7),
            "prop3.8" => Ok(ClaimId::Prop3_8),
            "thm3.1" => Ok(ClaimId::Thm3_1),
            "ex1" => Ok(ClaimId::Ex1),
            "ex2" => Ok(ClaimId::Ex2),
            other => Err(VerifyError::UnknownClaim(other.to_string())),
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimId::Table1 => "Table1",
            ClaimId::Table2 => "Table2",
            ClaimId::Prop3_1 => "Prop3.1",
            ClaimId::Prop3_2 => "Prop3.2",
            ClaimId::Prop3_3 => "Prop3.3",
            ClaimId::Prop3_4 => "Prop3.4",
            ClaimId::Prop3_5 => "Prop3.5",
            ClaimId::Prop3_6 => "Prop3.6",
            ClaimId::Prop3_7 => "Prop3.7",
            ClaimId::Prop3_8 => "Prop3.8",
            ClaimId::Thm3_1 => "Thm3.1",
            ClaimId::Ex1 => "Ex1",
            ClaimId::Ex2 => "Ex2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::NotApplicable => "not-applicable",
        })
    }
}

/// `value` printed with `digits` significant digits, plain decimal.
pub fn format_significant(value: f64, digits: u32) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}

/// Value on one side of a comparison.
#[derive(Debug, Clone, PartialEq)]
pub enum RecordValue {
    Exact(BigRational),
    Approx(f64),
    Text(String),
}

impl fmt::Display for RecordValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecordValue::Exact(r) => write!(f, "{r}"),
            RecordValue::Approx(v) => f.write_str(&format_significant(*v, 12)),
            RecordValue::Text(s) => f.write_str(s),
        }
    }
}

/// One adjudicated claim instance.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub claim: ClaimId,
    pub instance: String,
    /// Convention used on the definitional side.
    pub convention: Convention,
    pub definitional: RecordValue,
    pub claimed: RecordValue,
    /// 0 for exact comparisons.
    pub tolerance: f64,
    pub verdict: Verdict,
    /// What the catalog says this instance should produce; documented
    /// mismatches expect `Mismatch`.
    pub expected: Verdict,
    pub note: Option<String>,
}

impl VerificationRecord {
    pub fn as_expected(&self) -> bool {
        self.verdict == self.expected
    }
}

/// True when every record produced the verdict the catalog documents.
pub fn all_expected(records: &[VerificationRecord]) -> bool {
    records.iter().all(VerificationRecord::as_expected)
}

// ---------------------------------------------------------------------
// Reference tables
// ---------------------------------------------------------------------

/// Reference degree/weight rows for `J_n(1)`, `n <= 12`, kept verbatim as
/// claimed: `(d⁻(v_n), d⁺(v_n), weight sequence)`.
pub const REFERENCE_TABLE1: [(u32, u32, &[i64]); 12] = [
    (0, 1, &[0]),
    (1, 1, &[-1, -1]),
    (1, 2, &[-1, 1, -1]),
    (1, 3, &[-1, 1, 1, -1]),
    (2, 3, &[-1, 1, -2, 1, 1]),
    (2, 4, &[-1, 1, -2, -2, -2, 1]),
    (3, 4, &[-1, 1, -2, 3, 3, -2, -2]),
    (3, 5, &[-1, 1, -2, 3, -5, 3, 3, -2]),
    (3, 6, &[-1, 1, -2, 3, -5, -5, -5, 3, -2]),
    (4, 6, &[-1, 1, -2, 3, -5, 8, 8, -5, 3, 3]),
    (4, 7, &[-1, 1, -2, 3, -5, 8, -13, 8, -5, -5, 3]),
    (4, 8, &[-1, 1, -2, 3, -5, 8, -13, -13, 8, 8, -5, 3]),
];

/// Reference index rows for `J_n(1)`, `n <= 12`, kept verbatim as
/// claimed: `(d⁻(v_n), d⁺(v_n), Z1, Z2, Z3, Z4)`. Four Z3/Z4 cells in
/// rows 10–12 disagree with definitional computation (which yields 247,
/// 223, 400 and 568); they are adjudicated as documented mismatches, see
/// [`TABLE2_DOCUMENTED_MISMATCH_ROWS`].
pub const REFERENCE_TABLE2: [(u32, u32, i64, i64, i64, i64); 12] = [
    (0, 1, 0, 0, 0, 0),
    (1, 1, 2, 1, 0, 0),
    (1, 2, 3, -2, 4, 4),
    (1, 3, 4, -1, 4, 8),
    (2, 3, 8, -6, 11, 16),
    (2, 4, 15, 5, 11, 25),
    (3, 4, 32, -26, 35, 56),
    (3, 5, 62, -19, 50, 98),
    (3, 6, 103, 0, 72, 138),
    (4, 6, 211, 38, 119, 251),
    (4, 7, 396, -238, 210, 402),
    (4, 8, 604, -158, 273, 566),
];

/// Index-table rows whose reference cells differ from definitional
/// computation.
pub const TABLE2_DOCUMENTED_MISMATCH_ROWS: [u32; 3] = [10, 11, 12];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    Table1,
    Table2,
}

/// One computed table row, cells already formatted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: u32,
    pub cells: Vec<String>,
}

/// One cell disagreement between a computed row and its reference row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDiff {
    pub n: u32,
    pub column: &'static str,
    pub computed: String,
    pub reference: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub table: TableId,
    pub columns: Vec<&'static str>,
    pub rows: Vec<TableRow>,
    /// Cell-by-cell differences against the reference rows (`n <= 12`).
    pub diffs: Vec<TableDiff>,
    /// How many leading rows were compared against the reference.
    pub compared: u32,
}

fn weights_cell(weights: &WeightVector) -> String {
    let parts: Vec<String> = weights.weights().iter().map(|w| w.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn reference_table1_cells(n: u32) -> Vec<String> {
    let (din, dout, ws) = REFERENCE_TABLE1[(n - 1) as usize];
    let ws = WeightVector::new(ws.iter().map(|&w| BigInt::from(w)).collect());
    vec![din.to_string(), dout.to_string(), weights_cell(&ws)]
}

fn reference_table2_cells(n: u32) -> Vec<String> {
    let (din, dout, z1, z2, z3, z4) = REFERENCE_TABLE2[(n - 1) as usize];
    [i64::from(din), i64::from(dout), z1, z2, z3, z4]
        .iter()
        .map(|v| v.to_string())
        .collect()
}

/// Computes table rows up to `max_n` and diffs the first `min(max_n, 12)`
/// of them against the reference rows.
pub fn reproduce_table(table: TableId, max_n: u32) -> TableReport {
    assert!(max_n >= 1, "tables start at n = 1");
    let columns: Vec<&'static str> = match table {
        TableId::Table1 => vec!["d_in", "d_out", "weights"],
        TableId::Table2 => vec!["d_in", "d_out", "z1", "z2", "z3", "z4"],
    };
    let mut rows = Vec::new();
    let mut diffs = Vec::new();
    let compared = max_n.min(12);
    for n in 1..=max_n {
        let cells = match table {
            TableId::Table1 => {
                let seq = jaco::degree_sequence(n).expect("n >= 1");
                let last = &seq[(n - 1) as usize];
                let weights = jaco::weight_sequence(n).expect("n >= 1");
                // Independent route: read the same data off the built graph.
                let g = jaco::build_jaco(n).expect("n >= 1");
                let triple = g.degree_profile().triple(n);
                assert_eq!(
                    (triple.in_deg, last.degree),
                    (last.in_degree, triple.total()),
                    "degree routes disagree at n={n}"
                );
                assert_eq!(weight_vector(&g), weights, "weight routes disagree at n={n}");
                vec![
                    last.in_degree.to_string(),
                    last.out_degree_infinite.to_string(),
                    weights_cell(&weights),
                ]
            }
            TableId::Table2 => {
                let row = jaco_index_row(n).expect("n >= 1");
                let check = naive_index_row(n);
                assert_eq!(row.indices, check, "index routes disagree at n={n}");
                vec![
                    row.in_degree.to_string(),
                    row.out_degree_infinite.to_string(),
                    row.indices.z1.to_string(),
                    row.indices.z2.to_string(),
                    row.indices.z3.to_string(),
                    row.indices.z4.to_string(),
                ]
            }
        };
        if n <= compared {
            let reference = match table {
                TableId::Table1 => reference_table1_cells(n),
                TableId::Table2 => reference_table2_cells(n),
            };
            for (i, column) in columns.iter().enumerate() {
                if cells[i] != reference[i] {
                    diffs.push(TableDiff {
                        n,
                        column,
                        computed: cells[i].clone(),
                        reference: reference[i].clone(),
                    });
                }
            }
        }
        rows.push(TableRow { n, cells });
    }
    TableReport { table, columns, rows, diffs, compared }
}

/// Second route for the index row: plain loops over the weight multiset
/// and edge list, no shared code with `f_zagreb`.
fn naive_index_row(n: u32) -> FZagrebIndices {
    let g = jaco::build_jaco(n).expect("n >= 1");
    let w: Vec<BigInt> = jaco::weight_sequence(n)
        .expect("n >= 1")
        .weights()
        .to_vec();
    let view = g.underlying_simple_graph();
    let mut z1 = BigInt::zero();
    for x in &w {
        z1 += x * x;
    }
    let mut z2 = BigInt::zero();
    let mut z3 = BigInt::zero();
    for &(u, v) in view.edges() {
        let (a, b) = (&w[(u - 1) as usize], &w[(v - 1) as usize]);
        z2 += a * b;
        z3 += (a - b).abs();
    }
    let mut z4 = BigInt::zero();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            z4 += (&w[i] - &w[j]).abs();
        }
    }
    FZagrebIndices { z1, z2, z3, z4 }
}

// ---------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------

/// Families covered by the linear-integrand closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearFamily {
    Path { n: u32 },
    Cycle { n: u32 },
    Wheel { rim: u32 },
    Bipartite { left: u32, right: u32 },
    StarLeftToRight { leaves: u32 },
    StarRightToLeft { leaves: u32 },
}

fn rational(value: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(value.into())
}

fn fib_rational(k: u32) -> BigRational {
    BigRational::from_integer(crate::fib::fibonacci(k))
}

/// Claimed closed form of the linear Khazamula irregularity for the
/// given family, evaluated literally (absolute value included).
pub fn closed_form_linear(
    family: LinearFamily,
    params: &LinearParams,
) -> Result<BigRational, VerifyError> {
    let (m, c) = (&params.slope, &params.intercept);
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let value = match family {
        LinearFamily::Path { n } => {
            if n < 2 {
                return Err(VerifyError::ParameterOutOfRange {
                    family: "path",
                    detail: format!("n={n} < 2"),
                });
            }
            // |3/2 (n-2) m + n c|
            (rational(3) * rational(n - 2) * &half * m + rational(n) * c).abs()
        }
        LinearFamily::Cycle { n } => {
            if n < 3 {
                return Err(VerifyError::ParameterOutOfRange {
                    family: "cycle",
                    detail: format!("n={n} < 3"),
                });
            }
            // n |3/2 m + c|
            rational(n) * (rational(3) * &half * m + c).abs()
        }
        LinearFamily::Wheel { rim } => {
            if rim < 3 {
                return Err(VerifyError::ParameterOutOfRange {
                    family: "wheel",
                    detail: format!("rim={rim} < 3"),
                });
            }
            let f = fib_rational(rim);
            let five_n = rational(5) * rational(rim);
            // |(5n - f² + 9)/2 m + (5n ∓ f + 3) c|, sign by rim parity
            let slope_part = (&five_n - &f * &f + rational(9)) * &half * m;
            let intercept_part = if rim % 2 == 0 {
                (&five_n - &f + rational(3)) * c
            } else {
                (&five_n + &f + rational(3)) * c
            };
            (slope_part + intercept_part).abs()
        }
        LinearFamily::Bipartite { left, right } => {
            if left < 1 || right < 1 {
                return Err(VerifyError::ParameterOutOfRange {
                    family: "bipartite",
                    detail: format!("sides ({left}, {right})"),
                });
            }
            let p = rational(left);
            let f = fib_rational(right);
            // |(p³ - p f²)/2 m + (p² ∓ p f) c|, sign by right-count parity
            let slope_part = (&p * &p * &p - &p * &f * &f) * &half * m;
            let intercept_part = if right % 2 == 0 {
                (&p * &p - &p * &f) * c
            } else {
                (&p * &p + &p * &f) * c
            };
            (slope_part + intercept_part).abs()
        }
        LinearFamily::StarLeftToRight { leaves } => {
            return closed_form_linear(LinearFamily::Bipartite { left: 1, right: leaves }, params)
        }
        LinearFamily::StarRightToLeft { leaves } => {
            return closed_form_linear(LinearFamily::Bipartite { left: leaves, right: 1 }, params)
        }
    };
    Ok(value)
}

/// Which sign the `f²π/4` term of the wheel closed form carries: as
/// stated, or flipped to the sign its derivation ends with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiTermSign {
    Statement,
    Flipped,
}

/// Families covered by the circular-integrand closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircularFamily {
    Path { n: u32 },
    Cycle { n: u32 },
    Wheel { rim: u32, sign: PiTermSign },
    Bipartite { left: u32, right: u32 },
}

/// Per-vertex constant of the degree-2 circular term:
/// `∫_1^2 sqrt(4 - x²) dx = 2π/3 - √3/2`.
fn lens_constant() -> f64 {
    2.0 * PI / 3.0 - 3.0f64.sqrt() / 2.0
}

/// Claimed closed form of the circular Khazamula irregularity.
pub fn closed_form_circular(family: CircularFamily) -> Result<f64, VerifyError> {
    match family {
        CircularFamily::Path { n } => {
            if n < 3 {
                return Err(VerifyError::ParameterOutOfRange {
                    family: "path",
                    detail: format!("n={n} < 3"),
                });
            }
            Ok((n - 2) as f64 * lens_constant())
        }
        CircularFamily::Cycle { n } => {
            if n < 3 {
                return Err(VerifyError::ParameterOutOfRange {
                    family: "cycle",
                    detail: format!("n={n} < 3"),
                });
            }
            Ok(n as f64 * lens_constant())
        }
        CircularFamily::Wheel { rim, sign } => {
            if rim < 3 {
                return Err(VerifyError::ParameterOutOfRange {
                    family: "wheel",
                    detail: format!("rim={rim} < 3"),
                });
            }
            if rim <= 4 {
                return Ok(4.0 * 5.0f64.sqrt() + 9.0 * PI + 18.0 * (2.0f64 / 3.0).asin());
            }
            let n = rim as f64;
            let f = crate::fib::fibonacci(rim)
                .to_f64()
                .expect("BigInt::to_f64 is total");
            let f2 = f * f;
            let base =
                1.5 * (n + 1.0) * (f2 - 9.0).sqrt() + (n + 1.0) * f2 / 2.0 * (3.0 / f).asin();
            let (stated_pi_sign, tail) = if rim % 2 == 0 {
                // A-case: the tail adds the arcsin part
                (-1.0, n * ((f2 - 4.0).sqrt() + f2 / 2.0 * (2.0 / f).asin()))
            } else {
                // B-case: the tail subtracts it
                (1.0, n * ((f2 - 4.0).sqrt() - f2 / 2.0 * (2.0 / f).asin()))
            };
            let pi_sign = match sign {
                PiTermSign::Statement => stated_pi_sign,
                PiTermSign::Flipped => -stated_pi_sign,
            };
            Ok((base + pi_sign * f2 * PI / 4.0 + tail).abs())
        }
        CircularFamily::Bipartite { left, right } => {
            if left < 1 || right < 1 {
                return Err(VerifyError::ParameterOutOfRange {
                    family: "bipartite",
                    detail: format!("sides ({left}, {right})"),
                });
            }
            let p = left as f64;
            let f = crate::fib::fibonacci(right)
                .to_f64()
                .expect("BigInt::to_f64 is total");
            let value = if p >= f {
                let a = f / 2.0 * (p * p - f * f).sqrt() + p * p / 2.0 * (f / p).asin();
                if right % 2 == 0 {
                    (p * p * PI / 4.0 - a).abs()
                } else {
                    (p * p * PI / 4.0 + a).abs()
                }
            } else {
                let b = p / 2.0 * (f * f - p * p).sqrt() + f * f / 2.0 * (p / f).asin();
                if right % 2 == 0 {
                    (b - f * f * PI / 4.0).abs()
                } else {
                    (b + f * f * PI / 4.0).abs()
                }
            };
            Ok(value)
        }
    }
}

/// Right-hand side of the directed-join identity, evaluated literally:
/// every `g`-vertex integrates from its weight in the join up to
/// `Δ(H) + n`; every `h`-vertex from `±f_{d_H(u)+1}` (sign by parity) up
/// to `d_H(u^h) + 1`, contributing zero when headless inside `h`; one
/// absolute value around the whole sum.
pub fn directed_join_rhs(g: &Digraph, h: &Digraph, params: &LinearParams) -> BigRational {
    let n = g.vertex_count();
    let join = directed_join(g, h);
    let join_weights = weight_vector(&join);
    let upper_g = BigInt::from(h.degree_profile().max_total() + n);
    let mut sum = BigRational::zero();
    for v in 1..=n {
        sum += crate::irregularity::linear_integral(join_weights.weight(v), &upper_g)
            .evaluate(params);
    }
    let h_profile = h.degree_profile();
    for u in 1..=h.vertex_count() {
        if let Some(head) = head_degree(h, u).expect("u is a label of h") {
            let lower = weight_for_degree(h_profile.triple(u).total() + 1);
            let upper = BigInt::from(head + 1);
            sum += crate::irregularity::linear_integral(&lower, &upper).evaluate(params);
        }
    }
    sum.abs()
}

// ---------------------------------------------------------------------
// Suite
// ---------------------------------------------------------------------

/// Claim selection and sweep cap for one suite run.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub claims: Vec<ClaimId>,
    /// Caps every n-like sweep dimension at `min(default, max_n)`.
    pub max_n: Option<u32>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { claims: ClaimId::ALL.to_vec(), max_n: None }
    }
}

impl SuiteOptions {
    fn cap(&self, default_hi: u32) -> u32 {
        match self.max_n {
            Some(m) => m.min(default_hi),
            None => default_hi,
        }
    }
}

const LINEAR_PARAM_SET: [(i64, i64); 3] = [(1, 0), (0, 1), (2, 3)];

fn params_label(params: &LinearParams) -> String {
    format!("slope={}, intercept={}", params.slope, params.intercept)
}

/// Definitional aggregate value of the linear irregularity, re-derived
/// through the direct antiderivative before being returned.
fn definitional_linear(g: &Digraph, params: &LinearParams) -> BigRational {
    let via_forms = irr_k(g, params, Convention::Aggregate);
    let primitive = |x: &BigRational| -> BigRational {
        &params.slope * x * x / rational(2) + &params.intercept * x
    };
    let profile = g.degree_profile();
    let weights = weight_vector(g);
    let mut direct = BigRational::zero();
    for v in g.vertices() {
        let head = g.out_neighbors(v).map(|u| profile.triple(u).total()).max();
        if let Some(h) = head {
            let lower = BigRational::from_integer(weights.weight(v).clone());
            let upper = rational(h);
            direct += primitive(&upper) - primitive(&lower);
        }
    }
    assert_eq!(via_forms, direct.abs(), "linear dual-path disagreement");
    via_forms
}

/// Definitional circular totals (aggregate, per-term), cross-checked
/// against adaptive quadrature term by term.
fn definitional_circular(g: &Digraph, radius_override: Option<f64>) -> (f64, f64) {
    let report = irr_kc_report(g, radius_override).expect("bounds fit the radius");
    let quad = CircReport {
        radius: report.radius,
        terms: report
            .terms
            .iter()
            .map(|t| {
                let value = match t.upper {
                    None => 0.0,
                    Some(upper) => quad_reference(t.lower, upper, report.radius)
                        .expect("bounds fit the radius"),
                };
                crate::irregularity::CircTerm { value, ..t.clone() }
            })
            .collect(),
    };
    for conv in [Convention::Aggregate, Convention::PerTerm] {
        let a = report.total(conv);
        let b = quad.total(conv);
        assert!(
            (a - b).abs() <= 1e-9,
            "circular dual-path disagreement: {a} vs {b}"
        );
    }
    (
        report.total(Convention::Aggregate),
        report.total(Convention::PerTerm),
    )
}

fn exact_record(
    claim: ClaimId,
    instance: String,
    definitional: BigRational,
    claimed: BigRational,
    expected: Verdict,
    note: Option<String>,
) -> VerificationRecord {
    let verdict = if definitional == claimed {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    VerificationRecord {
        claim,
        instance,
        convention: Convention::Aggregate,
        definitional: RecordValue::Exact(definitional),
        claimed: RecordValue::Exact(claimed),
        tolerance: 0.0,
        verdict,
        expected,
        note,
    }
}

fn approx_record(
    claim: ClaimId,
    instance: String,
    definitional: f64,
    claimed: f64,
    expected: Verdict,
    note: Option<String>,
) -> VerificationRecord {
    let tolerance = 1e-9;
    let verdict = if (definitional - claimed).abs() <= tolerance {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    VerificationRecord {
        claim,
        instance,
        convention: Convention::Aggregate,
        definitional: RecordValue::Approx(definitional),
        claimed: RecordValue::Approx(claimed),
        tolerance,
        verdict,
        expected,
        note,
    }
}

fn run_table_claim(claim: ClaimId, options: &SuiteOptions, out: &mut Vec<VerificationRecord>) {
    let table = match claim {
        ClaimId::Table1 => TableId::Table1,
        _ => TableId::Table2,
    };
    let max_n = options.cap(12);
    if max_n < 1 {
        return;
    }
    let report = reproduce_table(table, max_n);
    for row in &report.rows {
        let n = row.n;
        let computed = row.cells.join(", ");
        let reference = match table {
            TableId::Table1 => reference_table1_cells(n).join(", "),
            TableId::Table2 => reference_table2_cells(n).join(", "),
        };
        let diffs: Vec<&TableDiff> = report.diffs.iter().filter(|d| d.n == n).collect();
        let verdict = if diffs.is_empty() {
            Verdict::Match
        } else {
            Verdict::Mismatch
        };
        let expected = match table {
            TableId::Table1 => Verdict::Match,
            TableId::Table2 if TABLE2_DOCUMENTED_MISMATCH_ROWS.contains(&n) => Verdict::Mismatch,
            TableId::Table2 => Verdict::Match,
        };
        let note = (!diffs.is_empty()).then(|| {
            let cells: Vec<String> = diffs
                .iter()
                .map(|d| {
                    format!(
                        "{}: definitional {} vs claimed {}",
                        d.column, d.computed, d.reference
                    )
                })
                .collect();
            format!(
                "reference cells differ from definitional computation ({})",
                cells.join("; ")
            )
        });
        out.push(VerificationRecord {
            claim,
            instance: format!("n={n}"),
            convention: Convention::Aggregate,
            definitional: RecordValue::Text(computed),
            claimed: RecordValue::Text(reference),
            tolerance: 0.0,
            verdict,
            expected,
            note,
        });
    }
}

fn run_linear_sweep(claim: ClaimId, options: &SuiteOptions, out: &mut Vec<VerificationRecord>) {
    let (lo, default_hi): (u32, u32) = match claim {
        ClaimId::Prop3_1 => (2, 30),
        ClaimId::Prop3_2 => (3, 30),
        ClaimId::Prop3_3 => (3, 20),
        _ => unreachable!("not an n-sweep linear claim"),
    };
    let hi = options.cap(default_hi);
    for n in lo..=hi {
        for (m, c) in LINEAR_PARAM_SET {
            let params = LinearParams::from_integers(m, c);
            let (g, family, label) = match claim {
                ClaimId::Prop3_1 => (
                    build_path(n).expect("n >= 2"),
                    LinearFamily::Path { n },
                    format!("n={n}"),
                ),
                ClaimId::Prop3_2 => (
                    build_cycle(n).expect("n >= 3"),
                    LinearFamily::Cycle { n },
                    format!("n={n}"),
                ),
                _ => (
                    build_wheel(n).expect("n >= 3"),
                    LinearFamily::Wheel { rim: n },
                    format!("rim={n}"),
                ),
            };
            let definitional = definitional_linear(&g, &params);
            let claimed = closed_form_linear(family, &params).expect("in range");
            let per_term = irr_k(&g, &params, Convention::PerTerm);
            let note = (per_term != definitional).then(|| format!("per-term value {per_term}"));
            out.push(exact_record(
                claim,
                format!("{label}, {}", params_label(&params)),
                definitional,
                claimed,
                Verdict::Match,
                note,
            ));
        }
    }
}

fn run_bipartite_linear(options: &SuiteOptions, out: &mut Vec<VerificationRecord>) {
    let hi = options.cap(20);
    for left in 1..=hi {
        for right in 1..=hi {
            for (m, c) in LINEAR_PARAM_SET {
                let params = LinearParams::from_integers(m, c);
                let g = build_bipartite_lr(left, right).expect("sides >= 1");
                let definitional = definitional_linear(&g, &params);
                let claimed = closed_form_linear(LinearFamily::Bipartite { left, right }, &params)
                    .expect("in range");
                out.push(exact_record(
                    ClaimId::Prop3_4,
                    format!("left={left}, right={right}, {}", params_label(&params)),
                    definitional,
                    claimed,
                    Verdict::Match,
                    None,
                ));
            }
        }
    }
}

fn run_example1(out: &mut Vec<VerificationRecord>) {
    for slope in [1i64, 2] {
        let params = LinearParams::from_integers(slope, 0);
        for n in [1u32, 5] {
            for (orient, family, g) in [
                (
                    "left-to-right",
                    LinearFamily::StarLeftToRight { leaves: n },
                    build_bipartite_lr(1, n).expect("sides >= 1"),
                ),
                (
                    "right-to-left",
                    LinearFamily::StarRightToLeft { leaves: n },
                    build_bipartite_lr(n, 1).expect("sides >= 1"),
                ),
            ] {
                let definitional = definitional_linear(&g, &params);
                let claimed = closed_form_linear(family, &params).expect("in range");
                out.push(exact_record(
                    ClaimId::Ex1,
                    format!("{orient}, n={n}, {}", params_label(&params)),
                    definitional,
                    claimed,
                    Verdict::Match,
                    None,
                ));
            }
        }
    }
}

fn run_example2(options: &SuiteOptions, out: &mut Vec<VerificationRecord>) {
    let hi = options.cap(12);
    for n in 3..=hi {
        for slope in [1i64, 2, 3] {
            let params = LinearParams::from_integers(slope, 0);
            let cycle = build_cycle(n).expect("n >= 3");
            let k1 = Digraph::new(1, []).expect("valid");
            let join = directed_join(&cycle, &k1);
            let join_value = definitional_linear(&join, &params);
            let cycle_value = definitional_linear(&cycle, &params);
            let ratio = &join_value / &cycle_value;
            let claimed_ratio = BigRational::new(
                BigInt::from(n) * BigInt::from(n) - BigInt::from(4),
                BigInt::from(3),
            );
            out.push(exact_record(
                ClaimId::Ex2,
                format!("ratio, n={n}, {}", params_label(&params)),
                ratio,
                claimed_ratio,
                Verdict::Match,
                None,
            ));
            let rhs = directed_join_rhs(&cycle, &k1, &params);
            out.push(exact_record(
                ClaimId::Ex2,
                format!("join identity, n={n}, {}", params_label(&params)),
                join_value,
                rhs,
                Verdict::Match,
                None,
            ));
        }
    }
}

fn run_circular_sweep(claim: ClaimId, options: &SuiteOptions, out: &mut Vec<VerificationRecord>) {
    let hi = options.cap(30);
    for n in 3..=hi {
        let (g, family, expected, base_note) = match claim {
            ClaimId::Prop3_5 => (
                build_path(n).expect("n >= 3"),
                CircularFamily::Path { n },
                Verdict::Mismatch,
                Some(
                    "first term is the integral from -1 to 2; the closed form repeats the \
                     1-to-2 value instead"
                        .to_string(),
                ),
            ),
            _ => (
                build_cycle(n).expect("n >= 3"),
                CircularFamily::Cycle { n },
                Verdict::Match,
                None,
            ),
        };
        let (aggregate, per_term) = definitional_circular(&g, None);
        let claimed = closed_form_circular(family).expect("in range");
        let mut note = base_note;
        if (per_term - aggregate).abs() > 1e-12 {
            let extra = format!("per-term value {}", format_significant(per_term, 12));
            note = Some(match note {
                Some(existing) => format!("{existing}; {extra}"),
                None => extra,
            });
        }
        out.push(approx_record(
            claim,
            format!("n={n}"),
            aggregate,
            claimed,
            expected,
            note,
        ));
    }
}

fn run_wheel_circular(options: &SuiteOptions, out: &mut Vec<VerificationRecord>) {
    let hi = options.cap(12);
    for rim in 3..=hi {
        let g = build_wheel(rim).expect("rim >= 3");
        let (aggregate, per_term) = definitional_circular(&g, None);
        let per_term_note = ((per_term - aggregate).abs() > 1e-12)
            .then(|| format!("per-term value {}", format_significant(per_term, 12)));
        if rim <= 4 {
            let claimed =
                closed_form_circular(CircularFamily::Wheel { rim, sign: PiTermSign::Statement })
                    .expect("in range");
            out.push(approx_record(
                ClaimId::Prop3_7,
                format!("rim={rim}"),
                aggregate,
                claimed,
                Verdict::Match,
                per_term_note,
            ));
            continue;
        }
        // Both signs of the f²π/4 term are adjudicated for rim >= 5: the
        // stated even-rim form agrees with definitional computation, the
        // flipped sign never does, and for odd rims the stated form pairs
        // the wrong tail so neither sign agrees.
        for sign in [PiTermSign::Statement, PiTermSign::Flipped] {
            let claimed =
                closed_form_circular(CircularFamily::Wheel { rim, sign }).expect("in range");
            let expected = match (rim % 2 == 0, sign) {
                (true, PiTermSign::Statement) => Verdict::Match,
                _ => Verdict::Mismatch,
            };
            let sign_label = match sign {
                PiTermSign::Statement => "statement",
                PiTermSign::Flipped => "flipped",
            };
            out.push(approx_record(
                ClaimId::Prop3_7,
                format!("rim={rim}, pi-term={sign_label}"),
                aggregate,
                claimed,
                expected,
                per_term_note.clone(),
            ));
        }
    }
}

fn run_bipartite_circular(options: &SuiteOptions, out: &mut Vec<VerificationRecord>) {
    let hi = options.cap(6);
    for left in 1..=hi {
        for right in 1..=hi {
            let g = build_bipartite_lr(left, right).expect("sides >= 1");
            let fib_right = crate::fib::fibonacci(right)
                .to_f64()
                .expect("BigInt::to_f64 is total");
            // The closed form's radius: max of the left count and the
            // right-count Fibonacci number, ignoring left-side weights.
            let radius = (left as f64).max(fib_right);
            let (aggregate, _) = definitional_circular(&g, Some(radius));
            let claimed = closed_form_circular(CircularFamily::Bipartite { left, right })
                .expect("in range");
            let degenerate_zero = right % 2 == 0 && fib_right == left as f64;
            let (expected, note) = if left == 1 || degenerate_zero {
                (Verdict::Match, None)
            } else {
                (
                    Verdict::Mismatch,
                    Some(format!(
                        "closed form drops the factor equal to the left count {left}"
                    )),
                )
            };
            out.push(approx_record(
                ClaimId::Prop3_8,
                format!("left={left}, right={right}"),
                aggregate,
                claimed,
                expected,
                note,
            ));
        }
    }
}

fn join_operand(label: &str) -> Digraph {
    match label {
        "K1" => Digraph::new(1, []).expect("valid"),
        "P2" => build_path(2).expect("valid"),
        "P3" => build_path(3).expect("valid"),
        "C3" => build_cycle(3).expect("valid"),
        "C4" => build_cycle(4).expect("valid"),
        "C6" => build_cycle(6).expect("valid"),
        other => panic!("unknown join operand {other}"),
    }
}

fn run_join_theorem(out: &mut Vec<VerificationRecord>) {
    // The identity is exact whenever either operand is a single vertex
    // (its +1 degree increments are then correct); with two or more
    // vertices on the right the increments undercount by the left order
    // and the instances below all disagree.
    let instances: [(&str, &str, Verdict); 9] = [
        ("C4", "K1", Verdict::Match),
        ("C6", "K1", Verdict::Match),
        ("P3", "K1", Verdict::Match),
        ("K1", "K1", Verdict::Match),
        ("K1", "P2", Verdict::Match),
        ("P2", "P2", Verdict::Mismatch),
        ("P3", "P2", Verdict::Mismatch),
        ("C3", "P2", Verdict::Mismatch),
        ("C3", "C3", Verdict::Mismatch),
    ];
    for (g_label, h_label, expected) in instances {
        for (m, c) in [(1i64, 0i64), (2, 3)] {
            let params = LinearParams::from_integers(m, c);
            let g = join_operand(g_label);
            let h = join_operand(h_label);
            let join = directed_join(&g, &h);
            let definitional = definitional_linear(&join, &params);
            let rhs = directed_join_rhs(&g, &h, &params);
            let note = (expected == Verdict::Mismatch).then(|| {
                "degree increments in the identity assume a single joined vertex".to_string()
            });
            out.push(exact_record(
                ClaimId::Thm3_1,
                format!("g={g_label}, h={h_label}, {}", params_label(&params)),
                definitional,
                rhs,
                expected,
                note,
            ));
        }
    }
}

/// Runs the selected claims and returns records in deterministic catalog
/// and sweep order.
pub fn run_suite(options: &SuiteOptions) -> Vec<VerificationRecord> {
    let mut claims = options.claims.clone();
    claims.sort_unstable();
    claims.dedup();
    let mut records = Vec::new();
    for claim in claims {
        match claim {
            ClaimId::Table1 | ClaimId::Table2 => run_table_claim(claim, options, &mut records),
            ClaimId::Prop3_1 | ClaimId::Prop3_2 | ClaimId::Prop3_3 => {
                run_linear_sweep(claim, options, &mut records)
            }
            ClaimId::Prop3_4 => run_bipartite_linear(options, &mut records),
            ClaimId::Prop3_5 | ClaimId::Prop3_6 => run_circular_sweep(claim, options, &mut records),
            ClaimId::Prop3_7 => run_wheel_circular(options, &mut records),
            ClaimId::Prop3_8 => run_bipartite_circular(options, &mut records),
            ClaimId::Thm3_1 => run_join_theorem(&mut records),
            ClaimId::Ex1 => run_example1(&mut records),
            ClaimId::Ex2 => run_example2(options, &mut records),
        }
    }
    records
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn suite_for(claims: &[ClaimId], max_n: Option<u32>) -> Vec<VerificationRecord> {
        run_suite(&SuiteOptions { claims: claims.to_vec(), max_n })
    }

    #[test]
    fn claim_ids_parse_round_trip() {
        for claim in ClaimId::ALL {
            assert_eq!(ClaimId::parse(&claim.to_string()).unwrap(), claim);
        }
        assert_eq!(ClaimId::parse("PROP3.5").unwrap(), ClaimId::Prop3_5);
        assert!(matches!(
            ClaimId::parse("prop9.9"),
            Err(VerifyError::UnknownClaim(_))
        ));
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_significant(0.0, 12), "0");
        assert_eq!(format_significant(10.0, 3), "10.0");
        let three_lens = 3.0 * (2.0 * PI / 3.0 - 3.0f64.sqrt() / 2.0);
        assert_eq!(format_significant(three_lens, 12), "3.68510909583");
        let wheel3 = 4.0 * 5.0f64.sqrt() + 9.0 * PI + 18.0 * (2.0f64 / 3.0).asin();
        assert_eq!(format_significant(wheel3, 12), "50.3537036044");
    }

    #[test]
    fn closed_form_linear_examples() {
        let p = LinearParams::from_integers(2, 1);
        assert_eq!(
            closed_form_linear(LinearFamily::Path { n: 4 }, &p).unwrap(),
            rat(10, 1)
        );
        let p = LinearParams::from_integers(1, 0);
        assert_eq!(
            closed_form_linear(LinearFamily::Wheel { rim: 6 }, &p).unwrap(),
            rat(25, 2)
        );
        assert_eq!(
            closed_form_linear(LinearFamily::Bipartite { left: 3, right: 2 }, &p).unwrap(),
            rat(12, 1)
        );
        assert!(closed_form_linear(LinearFamily::Path { n: 1 }, &p).is_err());
    }

    #[test]
    fn closed_form_circular_examples() {
        let lens = 2.0 * PI / 3.0 - 3.0f64.sqrt() / 2.0;

        let v = closed_form_circular(CircularFamily::Cycle { n: 3 }).unwrap();
        assert!((v - 3.0 * lens).abs() < 1e-12);

        let v = closed_form_circular(CircularFamily::Wheel {
            rim: 3,
            sign: PiTermSign::Statement,
        })
        .unwrap();
        let want = 4.0 * 5.0f64.sqrt() + 9.0 * PI + 18.0 * (2.0f64 / 3.0).asin();
        assert!((v - want).abs() < 1e-12);

        let v = closed_form_circular(CircularFamily::Path { n: 3 }).unwrap();
        assert!((v - lens).abs() < 1e-12);

        assert!(closed_form_circular(CircularFamily::Path { n: 2 }).is_err());
    }

    #[test]
    fn join_rhs_examples() {
        let p = LinearParams::from_integers(1, 0);

        let c4 = build_cycle(4).unwrap();
        let k1 = Digraph::new(1, []).unwrap();
        assert_eq!(directed_join_rhs(&c4, &k1, &p), rat(24, 1));
        let join = directed_join(&c4, &k1);
        assert_eq!(irr_k(&join, &p, Convention::Aggregate), rat(24, 1));
        assert_eq!(irr_k(&join, &p, Convention::PerTerm), rat(24, 1));

        assert_eq!(directed_join_rhs(&k1, &k1, &p), rat(0, 1));

        let p2 = build_path(2).unwrap();
        assert_eq!(directed_join_rhs(&p2, &p2, &p), rat(13, 2));
        let join = directed_join(&p2, &p2);
        assert_eq!(irr_k(&join, &p, Convention::Aggregate), rat(15, 2));
    }

    #[test]
    fn table1_reproduces_exactly() {
        let report = reproduce_table(TableId::Table1, 12);
        assert_eq!(report.rows.len(), 12);
        assert!(report.diffs.is_empty(), "diffs: {:?}", report.diffs);
    }

    #[test]
    fn table2_reproduces_except_documented_cells() {
        let report = reproduce_table(TableId::Table2, 12);
        assert_eq!(report.rows.len(), 12);
        let diffs: Vec<(u32, &str, &str, &str)> = report
            .diffs
            .iter()
            .map(|d| (d.n, d.column, d.computed.as_str(), d.reference.as_str()))
            .collect();
        assert_eq!(
            diffs,
            vec![
                (10, "z4", "247", "251"),
                (11, "z3", "223", "210"),
                (11, "z4", "400", "402"),
                (12, "z4", "568", "566"),
            ]
        );

        let single = reproduce_table(TableId::Table2, 1);
        assert_eq!(single.rows[0].cells[2..], ["0", "0", "0", "0"]);
        assert!(single.diffs.is_empty());
    }

    #[test]
    fn suite_prop32_all_match() {
        let records = suite_for(&[ClaimId::Prop3_2], Some(20));
        assert_eq!(records.len(), 18 * 3);
        assert!(records.iter().all(|r| r.verdict == Verdict::Match));
        assert!(records.iter().all(|r| r.tolerance == 0.0));
        assert!(all_expected(&records));
    }

    #[test]
    fn suite_prop35_all_mismatch() {
        let records = suite_for(&[ClaimId::Prop3_5], Some(10));
        assert_eq!(records.len(), 8);
        for r in &records {
            assert_eq!(r.verdict, Verdict::Mismatch);
            assert_eq!(r.expected, Verdict::Mismatch);
            let (RecordValue::Approx(d), RecordValue::Approx(c)) = (&r.definitional, &r.claimed)
            else {
                panic!("expected approximate values");
            };
            // definitional exceeds the claimed value by 2π/3 + √3 per instance
            assert!((d - c - (2.0 * PI / 3.0 + 3.0f64.sqrt())).abs() < 1e-9);
        }
        assert!(all_expected(&records));
    }

    #[test]
    fn suite_prop38_flags_missing_factor() {
        let records = suite_for(&[ClaimId::Prop3_8], None);
        let r = records
            .iter()
            .find(|r| r.instance == "left=3, right=2")
            .unwrap();
        assert_eq!(r.verdict, Verdict::Mismatch);
        let (RecordValue::Approx(d), RecordValue::Approx(c)) = (&r.definitional, &r.claimed)
        else {
            panic!("expected approximate values");
        };
        assert!((d / c - 3.0).abs() < 1e-9, "factor three missing: {d} vs {c}");
        // degenerate zero-integral cell matches trivially
        let degenerate = records
            .iter()
            .find(|r| r.instance == "left=3, right=4")
            .unwrap();
        assert_eq!(degenerate.verdict, Verdict::Match);
        assert!(all_expected(&records));
    }

    #[test]
    fn suite_join_theorem_records_p2_case() {
        let records = suite_for(&[ClaimId::Thm3_1], None);
        let r = records
            .iter()
            .find(|r| r.instance == "g=P2, h=P2, slope=1, intercept=0")
            .unwrap();
        assert_eq!(r.verdict, Verdict::Mismatch);
        assert_eq!(r.definitional, RecordValue::Exact(rat(15, 2)));
        assert_eq!(r.claimed, RecordValue::Exact(rat(13, 2)));
        assert!(all_expected(&records));
    }

    #[test]
    fn suite_wheel_circular_signs() {
        let records = suite_for(&[ClaimId::Prop3_7], None);
        for rim in [6u32, 8, 10, 12] {
            let statement = records
                .iter()
                .find(|r| r.instance == format!("rim={rim}, pi-term=statement"))
                .unwrap();
            assert_eq!(statement.verdict, Verdict::Match, "even rim {rim} statement");
            let flipped = records
                .iter()
                .find(|r| r.instance == format!("rim={rim}, pi-term=flipped"))
                .unwrap();
            assert_eq!(flipped.verdict, Verdict::Mismatch, "even rim {rim} flipped");
        }
        for rim in [5u32, 7, 9, 11] {
            for sign in ["statement", "flipped"] {
                let r = records
                    .iter()
                    .find(|r| r.instance == format!("rim={rim}, pi-term={sign}"))
                    .unwrap();
                assert_eq!(r.verdict, Verdict::Mismatch, "odd rim {rim} {sign}");
            }
        }
        assert!(all_expected(&records));
    }

    #[test]
    fn full_default_suite_is_all_expected() {
        let records = run_suite(&SuiteOptions::default());
        assert!(
            records.len() > 1500,
            "unexpectedly few records: {}",
            records.len()
        );
        for r in &records {
            assert!(
                r.as_expected(),
                "unexpected verdict for {} [{}]: got {}, expected {} ({} vs {})",
                r.claim,
                r.instance,
                r.verdict,
                r.expected,
                r.definitional,
                r.claimed
            );
        }
    }
}
