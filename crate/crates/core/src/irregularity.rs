//! Khazamula irregularity measures on simple digraphs.
//!
//! Each vertex contributes the definite integral of the chosen integrand
//! from its ±Fibonacci weight up to its head degree, the maximum total
//! degree among its out-neighbors. Headless vertices (out-degree zero)
//! contribute zero. The linear family `f(x) = slope·x + intercept` is
//! evaluated in exact rational arithmetic; the circular family
//! `f(x) = sqrt(r² - x²)` in double precision, with the radius `r`
//! defaulting to the maximum of all in-covered vertex degrees and all
//! weight magnitudes.

use crate::fib::weight_vector;
use crate::graph::{DegreeProfile, Digraph, Vertex};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::ops::{Add, Neg};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IrregularityError {
    #[error("vertex {0} is not a label of the graph")]
    UnknownVertex(Vertex),
    #[error("an arcless graph has no default radius")]
    ArclessGraph,
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("integral bound {bound} lies outside [-{radius}, {radius}]")]
    BoundOutsideRadius { bound: f64, radius: f64 },
}

/// Where the absolute value is applied: to every vertex term, or once to
/// the aggregated sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    PerTerm,
    Aggregate,
}

impl std::fmt::Display for Convention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Convention::PerTerm => "per-term",
            Convention::Aggregate => "aggregate",
        })
    }
}

/// Coefficients of the linear integrand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearParams {
    pub slope: BigRational,
    pub intercept: BigRational,
}

impl LinearParams {
    pub fn new(slope: BigRational, intercept: BigRational) -> Self {
        Self { slope, intercept }
    }

    pub fn from_integers(slope: i64, intercept: i64) -> Self {
        Self {
            slope: BigRational::from_integer(BigInt::from(slope)),
            intercept: BigRational::from_integer(BigInt::from(intercept)),
        }
    }
}

/// Exact value of one definite integral of the linear integrand, kept
/// symbolic: the pair denotes `slope_coeff·slope + intercept_coeff·intercept`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub slope_coeff: BigRational,
    pub intercept_coeff: BigRational,
}

impl LinearForm {
    pub fn zero() -> Self {
        Self {
            slope_coeff: BigRational::zero(),
            intercept_coeff: BigRational::zero(),
        }
    }

    pub fn evaluate(&self, params: &LinearParams) -> BigRational {
        &self.slope_coeff * &params.slope + &self.intercept_coeff * &params.intercept
    }
}

impl Add for LinearForm {
    type Output = LinearForm;

    fn add(self, other: LinearForm) -> LinearForm {
        LinearForm {
            slope_coeff: self.slope_coeff + other.slope_coeff,
            intercept_coeff: self.intercept_coeff + other.intercept_coeff,
        }
    }
}

impl Neg for LinearForm {
    type Output = LinearForm;

    fn neg(self) -> LinearForm {
        LinearForm {
            slope_coeff: -self.slope_coeff,
            intercept_coeff: -self.intercept_coeff,
        }
    }
}

/// Integration bounds of one vertex term. `upper` is absent for headless
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermBound {
    pub vertex: Vertex,
    pub lower: BigInt,
    pub upper: Option<u32>,
}

fn head_degree_in(g: &Digraph, profile: &DegreeProfile, v: Vertex) -> Option<u32> {
    g.out_neighbors(v).map(|u| profile.triple(u).total()).max()
}

/// Maximum total degree among the out-neighbors of `v`, absent when `v`
/// is headless.
pub fn head_degree(g: &Digraph, v: Vertex) -> Result<Option<u32>, IrregularityError> {
    if v < 1 || v > g.vertex_count() {
        return Err(IrregularityError::UnknownVertex(v));
    }
    Ok(head_degree_in(g, &g.degree_profile(), v))
}

/// `∫_a^b (slope·x + intercept) dx` as a symbolic linear form: the slope
/// coefficient is `(b² - a²)/2` and the intercept coefficient `b - a`.
pub fn linear_integral(a: &BigInt, b: &BigInt) -> LinearForm {
    LinearForm {
        slope_coeff: BigRational::new(b * b - a * a, BigInt::from(2)),
        intercept_coeff: BigRational::from_integer(b - a),
    }
}

/// One bound/form pair per vertex, in vertex order. Headless vertices
/// carry the zero form.
pub fn irr_k_terms(g: &Digraph) -> Vec<(TermBound, LinearForm)> {
    let profile = g.degree_profile();
    let weights = weight_vector(g);
    g.vertices()
        .map(|v| {
            let lower = weights.weight(v).clone();
            match head_degree_in(g, &profile, v) {
                None => (
                    TermBound { vertex: v, lower, upper: None },
                    LinearForm::zero(),
                ),
                Some(h) => {
                    let form = linear_integral(&lower, &BigInt::from(h));
                    (
                        TermBound { vertex: v, lower, upper: Some(h) },
                        form,
                    )
                }
            }
        })
        .collect()
}

/// Khazamula irregularity with the linear integrand, exact.
pub fn irr_k(g: &Digraph, params: &LinearParams, convention: Convention) -> BigRational {
    let mut total = BigRational::zero();
    for (_, form) in irr_k_terms(g) {
        let value = form.evaluate(params);
        total += match convention {
            Convention::PerTerm => value.abs(),
            Convention::Aggregate => value,
        };
    }
    match convention {
        Convention::PerTerm => total,
        Convention::Aggregate => total.abs(),
    }
}

/// Default radius for the circular integrand: the maximum of the total
/// degrees of vertices with in-degree at least one and of all weight
/// magnitudes. Arcless graphs have no positive candidate and are
/// rejected.
pub fn radius(g: &Digraph) -> Result<BigInt, IrregularityError> {
    if g.arc_count() == 0 {
        return Err(IrregularityError::ArclessGraph);
    }
    let profile = g.degree_profile();
    let weights = weight_vector(g);
    let mut best = BigInt::zero();
    for v in g.vertices() {
        let t = profile.triple(v);
        if t.in_deg >= 1 {
            best = best.max(BigInt::from(t.total()));
        }
        best = best.max(weights.weight(v).abs());
    }
    Ok(best)
}

fn check_circ_bounds(a: f64, b: f64, r: f64) -> Result<(), IrregularityError> {
    if r.is_nan() || r <= 0.0 {
        return Err(IrregularityError::NonPositiveRadius(r));
    }
    for bound in [a, b] {
        if bound.is_nan() || bound.abs() > r {
            return Err(IrregularityError::BoundOutsideRadius { bound, radius: r });
        }
    }
    Ok(())
}

fn circle_antiderivative(x: f64, r: f64) -> f64 {
    let ratio = (x / r).clamp(-1.0, 1.0);
    0.5 * x * (r * r - x * x).max(0.0).sqrt() + 0.5 * r * r * ratio.asin()
}

/// `∫_a^b sqrt(r² - x²) dx` through the closed-form antiderivative
/// `x/2·sqrt(r² - x²) + r²/2·arcsin(x/r)` on the principal branch.
/// Signed: negative when `a > b`.
pub fn circ_integral(a: f64, b: f64, r: f64) -> Result<f64, IrregularityError> {
    check_circ_bounds(a, b, r)?;
    Ok(circle_antiderivative(b, r) - circle_antiderivative(a, r))
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    // The first few levels always split: the error estimate is unreliable
    // where the integrand's derivative blows up at |x| = r.
    if depth == 0 || (depth <= 54 && delta.abs() <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1)
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, fa, m, fm, b, fb, whole, tol, 60)
}

/// Independent numerical value of `∫_a^b sqrt(r² - x²) dx` by adaptive
/// Simpson quadrature, absolute tolerance 1e-10.
pub fn quad_reference(a: f64, b: f64, r: f64) -> Result<f64, IrregularityError> {
    check_circ_bounds(a, b, r)?;
    let f = move |x: f64| (r * r - x * x).max(0.0).sqrt();
    Ok(adaptive_simpson(&f, a, b, 1e-11))
}

/// One evaluated circular vertex term.
#[derive(Debug, Clone, PartialEq)]
pub struct CircTerm {
    pub vertex: Vertex,
    pub lower: f64,
    pub upper: Option<f64>,
    pub value: f64,
}

/// Radius and per-vertex terms of one c-irregularity evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct CircReport {
    pub radius: f64,
    pub terms: Vec<CircTerm>,
}

impl CircReport {
    pub fn total(&self, convention: Convention) -> f64 {
        match convention {
            Convention::PerTerm => self.terms.iter().map(|t| t.value.abs()).sum(),
            Convention::Aggregate => self.terms.iter().map(|t| t.value).sum::<f64>().abs(),
        }
    }
}

/// Evaluates every circular vertex term under the default radius or an
/// override. Only vertices with a head have their bounds checked against
/// the radius; headless terms are zero by definition.
pub fn irr_kc_report(
    g: &Digraph,
    radius_override: Option<f64>,
) -> Result<CircReport, IrregularityError> {
    let r = match radius_override {
        Some(r) if r > 0.0 => r,
        Some(r) => return Err(IrregularityError::NonPositiveRadius(r)),
        None => radius(g)?
            .to_f64()
            .expect("BigInt::to_f64 is total"),
    };
    let profile = g.degree_profile();
    let weights = weight_vector(g);
    let mut terms = Vec::with_capacity(g.vertex_count() as usize);
    for v in g.vertices() {
        let lower = weights
            .weight(v)
            .to_f64()
            .expect("BigInt::to_f64 is total");
        match head_degree_in(g, &profile, v) {
            None => terms.push(CircTerm { vertex: v, lower, upper: None, value: 0.0 }),
            Some(h) => {
                let upper = h as f64;
                let value = circ_integral(lower, upper, r)?;
                terms.push(CircTerm { vertex: v, lower, upper: Some(upper), value });
            }
        }
    }
    Ok(CircReport { radius: r, terms })
}

/// Khazamula c-irregularity with the circular integrand.
pub fn irr_kc(
    g: &Digraph,
    convention: Convention,
    radius_override: Option<f64>,
) -> Result<f64, IrregularityError> {
    Ok(irr_kc_report(g, radius_override)?.total(convention))
}
