//! Closed forms for named families, the inequality family relating the
//! two largest distance Pareto eigenvalues, and the structural
//! classifiers for the fifth and sixth smallest values.

use std::sync::OnceLock;

use crate::bound::{BoundCheck, Relation, EQUALITY_TOL};
use crate::error::{Error, Result};
use crate::graph::{
    self, clique_number_with_budget, distance_matrix, is_complete, is_pyramidal, DistanceMatrix,
    Graph, MAX_VERTICES,
};
use crate::matrix::{principal_submatrix, SymMatrix, VertexSubset};
use crate::pareto::certificate_for;
use crate::patterns::{find_distance_pair, find_distance_pattern, find_induced, PatternId};
use crate::spectral::{spectral_radius, VALUE_TOL};

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// All distance Pareto eigenvalues of the n-vertex star, in closed form:
/// the 2(n-1) values 2(k-1) and k-1+sqrt(k^2-k+1) for k = 1..n-1.
pub fn star_spectrum_closed_form(n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "star needs at least 2 vertices, got {n}"
        )));
    }
    let mut values = Vec::with_capacity(2 * (n - 1));
    for k in 1..n {
        let kf = k as f64;
        values.push(2.0 * (kf - 1.0));
        values.push(kf - 1.0 + (kf * kf - kf + 1.0).sqrt());
    }
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    values.dedup_by(|a, b| (*a - *b).abs() <= VALUE_TOL);
    Ok(values)
}

/// Gap between the two largest star values: sqrt(n^2-3n+3) - n + 2.
/// Valid from n = 2 (the single edge: gap 1).
pub fn star_gap_closed_form(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "star gap needs at least 2 vertices, got {n}"
        )));
    }
    let nf = n as f64;
    Ok((nf * nf - 3.0 * nf + 3.0).sqrt() - nf + 2.0)
}

/// Second largest Pareto value of the star-plus-edge graph:
/// (2n - 7 + sqrt((2n-1)^2 - 16)) / 2.
pub fn rho2_star_plus_closed_form(n: usize) -> Result<f64> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "star-plus-edge closed form needs at least 4 vertices, got {n}"
        )));
    }
    let nf = n as f64;
    Ok((2.0 * nf - 7.0 + ((2.0 * nf - 1.0) * (2.0 * nf - 1.0) - 16.0).sqrt()) / 2.0)
}

/// Second largest Pareto value of the n-vertex wheel: 2(n-3).
pub fn rho2_wheel_closed_form(n: usize) -> Result<f64> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "wheel closed form needs at least 5 vertices, got {n}"
        )));
    }
    Ok(2.0 * (n as f64 - 3.0))
}

/// Largest real root of x^3 - x^2 - 11x - 7, by bracketed Newton
/// iteration on [4, 5] to 1e-12.
pub fn gamma_root() -> f64 {
    static GAMMA: OnceLock<f64> = OnceLock::new();
    *GAMMA.get_or_init(|| {
        let p = |x: f64| x * x * x - x * x - 11.0 * x - 7.0;
        let dp = |x: f64| 3.0 * x * x - 2.0 * x - 11.0;
        let (mut lo, mut hi) = (4.0f64, 5.0f64);
        debug_assert!(p(lo) < 0.0 && p(hi) > 0.0);
        let mut x = 0.5 * (lo + hi);
        for _ in 0..128 {
            let fx = p(x);
            if fx.abs() <= 1e-14 {
                break;
            }
            if fx < 0.0 {
                lo = x;
            } else {
                hi = x;
            }
            let mut next = x - fx / dp(x);
            if !(lo..=hi).contains(&next) {
                next = 0.5 * (lo + hi);
            }
            if (next - x).abs() <= 1e-13 {
                x = next;
                break;
            }
            x = next;
        }
        x
    })
}

/// Spectral radius of the distance matrix of the 4-path, computed once
/// from its defining matrix.
pub fn p4_distance_radius() -> f64 {
    static RADIUS: OnceLock<f64> = OnceLock::new();
    *RADIUS.get_or_init(|| {
        let m = SymMatrix::from_rows(&[
            &[0, 1, 2, 3],
            &[1, 0, 1, 2],
            &[2, 1, 0, 1],
            &[3, 2, 1, 0],
        ])
        .expect("fixed symmetric matrix");
        spectral_radius(&m).expect("small fixed matrix converges").radius
    })
}

/// The 4x4 distance submatrix whose spectral radius is `gamma_root()`:
/// a triangle plus a vertex adjacent to exactly one of its corners (as in
/// the bowtie).
pub fn gamma_defining_matrix() -> SymMatrix {
    SymMatrix::from_rows(&[
        &[0, 1, 2, 2],
        &[1, 0, 1, 1],
        &[2, 1, 0, 1],
        &[2, 1, 1, 0],
    ])
    .expect("fixed symmetric matrix")
}

/// Spectral radius of a geodesic triple at distances (1,2,3): the largest
/// root of x^3 - 14x - 12, by bracketed Newton iteration on [4, 5].
///
/// Every graph of diameter exactly 3 contains such a triple (the first,
/// second and last vertex of a geodesic), so this value precedes the
/// 4-path radius 2+sqrt(10) whenever it is in play.
pub fn geodesic_triple_radius() -> f64 {
    static RADIUS: OnceLock<f64> = OnceLock::new();
    *RADIUS.get_or_init(|| {
        let p = |x: f64| x * x * x - 14.0 * x - 12.0;
        let dp = |x: f64| 3.0 * x * x - 14.0;
        let (mut lo, mut hi) = (4.0f64, 5.0f64);
        debug_assert!(p(lo) < 0.0 && p(hi) > 0.0);
        let mut x = 0.5 * (lo + hi);
        for _ in 0..128 {
            let fx = p(x);
            if fx.abs() <= 1e-14 {
                break;
            }
            if fx < 0.0 {
                lo = x;
            } else {
                hi = x;
            }
            let mut next = x - fx / dp(x);
            if !(lo..=hi).contains(&next) {
                next = 0.5 * (lo + hi);
            }
            if (next - x).abs() <= 1e-13 {
                x = next;
                break;
            }
            x = next;
        }
        x
    })
}

/// Spectral radius of the pattern "triangle plus a vertex at distance 2
/// from all three corners": 1 + sqrt(13).
pub fn triangle_apex_radius() -> f64 {
    1.0 + 13f64.sqrt()
}

// ---------------------------------------------------------------------------
// rho1 / rho2 helpers
// ---------------------------------------------------------------------------

/// Largest Pareto value = spectral radius of the full distance matrix,
/// with its Perron vector.
fn rho1(g: &Graph) -> Result<(f64, Vec<f64>)> {
    let m = SymMatrix::from_distance(&distance_matrix(g));
    let r = spectral_radius(&m)?;
    Ok((r.radius, r.perron))
}

/// The deterministic Pareto eigenpair for the second largest value: the
/// Perron pair of the vertex-deletion maximizer (lowest deleted index on
/// ties), zero-padded to the host. For K2 the witness is the first
/// singleton.
pub struct Rho2Witness {
    pub value: f64,
    pub deleted_vertex: Option<usize>,
    /// Zero-padded unit Pareto eigenvector.
    pub vector: Vec<f64>,
    /// Minimum positive component of the eigenvector.
    pub min_positive: f64,
    /// Exact integer row sums of the maximizing submatrix.
    pub submatrix_row_sums: Vec<i64>,
}

pub fn rho2_witness(g: &Graph) -> Result<Rho2Witness> {
    let d = distance_matrix(g);
    let (value, deleted) = crate::pareto::rho2_by_deletion(g)?;
    let n = g.n();
    let subset = match deleted {
        Some(v) => {
            let full: u64 = (1u64 << n) - 1;
            VertexSubset(full & !(1 << v))
        }
        None => VertexSubset(1),
    };
    let cert = certificate_for(&d, subset)?;
    let sub = principal_submatrix(&SymMatrix::from_distance(&d), subset)?;
    let min_positive = cert.xi.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(Rho2Witness {
        value,
        deleted_vertex: deleted,
        vector: cert.x,
        min_positive,
        submatrix_row_sums: sub.row_sums(),
    })
}

// ---------------------------------------------------------------------------
// Lower bounds on rho1 from the rho2 eigenvector
// ---------------------------------------------------------------------------

/// rho1 >= (rho2 + 2 t k (n-1)) / (1 + t^2) for any t > 0, where k is the
/// minimum positive component of the rho2 Pareto eigenvector. Equality is
/// predicted exactly when t equals both sqrt(n-1)/rho1 and
/// (rho1 - rho2)/sqrt(n-1).
pub fn check_r1_lower(g: &Graph, t: f64) -> Result<BoundCheck> {
    if t <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "t must be positive, got {t}"
        )));
    }
    let n = g.n() as f64;
    let (r1, _) = rho1(g)?;
    let w = rho2_witness(g)?;
    let rhs = (w.value + 2.0 * t * w.min_positive * (n - 1.0)) / (1.0 + t * t);
    let t1 = (n - 1.0).sqrt() / r1;
    let t2 = (r1 - w.value) / (n - 1.0).sqrt();
    let predicted = (t - t1).abs() <= EQUALITY_TOL && (t - t2).abs() <= EQUALITY_TOL;
    Ok(BoundCheck::new("r1-t", r1, rhs, Relation::Ge)
        .with_equality_predicted(predicted)
        .with_param("t", t)
        .with_param("k", w.min_positive)
        .with_param("rho2", w.value))
}

/// Specialization at t = sqrt(n-1)/rho1:
/// rho1 >= (rho2 + sqrt(rho2^2 + 4(n-1)(2k sqrt(n-1) - 1))) / 2, with
/// equality predicted when the maximizing submatrix has all row sums
/// equal (exact integer test).
pub fn check_r1_lower_opt(g: &Graph) -> Result<BoundCheck> {
    let n = g.n() as f64;
    let (r1, _) = rho1(g)?;
    let w = rho2_witness(g)?;
    let radicand =
        w.value * w.value + 4.0 * (n - 1.0) * (2.0 * w.min_positive * (n - 1.0).sqrt() - 1.0);
    debug_assert!(radicand >= 0.0, "vacuous bound: negative radicand");
    let rhs = (w.value + radicand.max(0.0).sqrt()) / 2.0;
    let uniform = w.submatrix_row_sums.windows(2).all(|p| p[0] == p[1]);
    Ok(BoundCheck::new("r1-gn", r1, rhs, Relation::Ge)
        .with_equality_predicted(uniform)
        .with_param("k", w.min_positive)
        .with_param("rho2", w.value))
}

/// Specialization at t = 1: 2 rho1 - rho2 >= 2 k (n-1), with equality
/// predicted only for the single edge K2.
pub fn check_r1_lower_unit(g: &Graph) -> Result<BoundCheck> {
    let n = g.n() as f64;
    let (r1, _) = rho1(g)?;
    let w = rho2_witness(g)?;
    let predicted = g.n() == 2;
    Ok(BoundCheck::new(
        "r1-t1",
        2.0 * r1 - w.value,
        2.0 * w.min_positive * (n - 1.0),
        Relation::Ge,
    )
    .with_equality_predicted(predicted)
    .with_param("k", w.min_positive)
    .with_param("rho2", w.value))
}

/// rho1 >= (Tr(v) - 1 + sqrt((Tr(v)-1)^2 + 4(n-1))) / 2 at the vertex of
/// minimum transmission.
///
/// Equality is predicted exactly for complete graphs: equality forces
/// every row sum of the distance matrix down to n-1. Pyramidal graphs
/// are necessary-but-not-sufficient here (wheels are pyramidal yet sit
/// strictly above the bound, e.g. rho1(W5) = 2+2*sqrt(2) > 4); the
/// pyramidal flag is still reported as a parameter.
pub fn check_transmission_bound(g: &Graph) -> Result<BoundCheck> {
    let n = g.n() as f64;
    let (r1, _) = rho1(g)?;
    let (v, tr) = (0..g.n())
        .map(|v| (v, g.transmission(v)))
        .min_by_key(|&(v, tr)| (tr, v))
        .expect("graph has at least one vertex");
    let trf = tr as f64;
    let rhs = (trf - 1.0 + ((trf - 1.0) * (trf - 1.0) + 4.0 * (n - 1.0)).sqrt()) / 2.0;
    Ok(BoundCheck::new("transmission", r1, rhs, Relation::Ge)
        .with_equality_predicted(is_complete(g))
        .with_param("tr", trf)
        .with_param("vertex", v as f64)
        .with_param("pyramidal", if is_pyramidal(g) { 1.0 } else { 0.0 }))
}

// ---------------------------------------------------------------------------
// Gap and ratio bounds
// ---------------------------------------------------------------------------

/// rho1(C_n) - rho2(C_n) < floor(n^2/4)/(n-1). Strict for n >= 4; at
/// n = 3 the two sides coincide, which the check reports as a boundary.
pub fn check_cycle_gap(n: usize) -> Result<BoundCheck> {
    let g = graph::make_family("C", n, None)?;
    let (r1, _) = rho1(&g)?;
    let (r2, _) = crate::pareto::rho2_by_deletion(&g)?;
    let row = (n * n / 4) as f64;
    debug_assert!((r1 - row).abs() < 1e-8);
    Ok(
        BoundCheck::new("diff-cn", r1 - r2, row / (n as f64 - 1.0), Relation::Lt)
            .with_param("rho1", r1)
            .with_param("rho2", r2),
    )
}

/// rho1(S_n) - rho2(S_n) = sqrt(n^2-3n+3) - n + 2: the computed gap must
/// meet the closed form with equality.
pub fn check_star_gap(n: usize) -> Result<BoundCheck> {
    let g = graph::make_family("S", n, None)?;
    let (r1, _) = rho1(&g)?;
    let (r2, _) = crate::pareto::rho2_by_deletion(&g)?;
    let rhs = star_gap_closed_form(n)?;
    Ok(BoundCheck::new("diff-sn", r1 - r2, rhs, Relation::Ge)
        .with_equality_predicted(true)
        .with_param("rho1", r1)
        .with_param("rho2", r2))
}

/// The star gap decreases in n: gap(n+1) < gap(n).
pub fn check_star_gap_decreasing(n: usize) -> Result<BoundCheck> {
    Ok(BoundCheck::new(
        "diff-sn-monotone",
        star_gap_closed_form(n + 1)?,
        star_gap_closed_form(n)?,
        Relation::Lt,
    ))
}

/// rho1 - rho2 < min over vertices of the Euclidean norm of the distance
/// row. Strict for n >= 3; the single edge sits exactly on the bound.
pub fn check_rownorm_gap(g: &Graph) -> Result<BoundCheck> {
    if g.n() < 2 {
        return Err(Error::InvalidParameter(
            "row-norm gap needs at least 2 vertices".into(),
        ));
    }
    let d = distance_matrix(g);
    let (r1, _) = rho1(g)?;
    let (r2, _) = crate::pareto::rho2_by_deletion(g)?;
    let min_norm = (0..g.n())
        .map(|u| {
            (0..g.n())
                .map(|v| (d.entry(u, v) * d.entry(u, v)) as f64)
                .sum::<f64>()
                .sqrt()
        })
        .fold(f64::INFINITY, f64::min);
    Ok(
        BoundCheck::new("diff-rownorm", r1 - r2, min_norm, Relation::Lt)
            .with_param("rho1", r1)
            .with_param("rho2", r2),
    )
}

/// The four ratio/gap bounds sharing the Perron vector of the distance
/// matrix: the per-vertex forms at the vertex of minimum Perron weight
/// plus the global forms with their complete-graph equality cases.
pub struct RatioChecks {
    pub ratio_at_min: BoundCheck,
    pub ratio_global: BoundCheck,
    pub gap_at_min: BoundCheck,
    pub gap_global: BoundCheck,
}

impl RatioChecks {
    pub fn all(&self) -> [&BoundCheck; 4] {
        [
            &self.ratio_at_min,
            &self.ratio_global,
            &self.gap_at_min,
            &self.gap_global,
        ]
    }
}

pub fn check_ratio_family(g: &Graph) -> Result<RatioChecks> {
    let n = g.n();
    if n < 3 {
        return Err(Error::InvalidParameter(
            "ratio bounds need at least 3 vertices (rho2 must be positive)".into(),
        ));
    }
    let (r1, perron) = rho1(g)?;
    let (r2, _) = crate::pareto::rho2_by_deletion(g)?;
    let d = distance_matrix(g);
    let v = (0..n)
        .min_by(|&a, &b| perron[a].partial_cmp(&perron[b]).unwrap().then(a.cmp(&b)))
        .expect("nonempty");
    let xv = perron[v];
    let denom = 1.0 - 2.0 * xv * xv;
    // The minimum component of a unit vector is at most 1/sqrt(n), so the
    // denominator is positive for n >= 3.
    debug_assert!(denom > 0.0);

    // Stated per-vertex equality condition, evaluated numerically:
    // x_u = d_uv / sqrt((rho1-rho2)(2 rho1 - rho2)) for all u != v.
    let scale = ((r1 - r2) * (2.0 * r1 - r2)).sqrt();
    let pointwise = (0..n)
        .filter(|&u| u != v)
        .all(|u| (perron[u] - d.entry(u, v) as f64 / scale).abs() <= EQUALITY_TOL);

    let complete = is_complete(g);
    let nf = n as f64;
    let ratio_at_min =
        BoundCheck::new("ratio-v", r1 / r2, (1.0 - xv * xv) / denom, Relation::Le)
            .with_equality_predicted(pointwise)
            .with_param("xv", xv)
            .with_param("vertex", v as f64);
    let ratio_global = BoundCheck::new("ratk", r1 / r2, (nf - 1.0) / (nf - 2.0), Relation::Le)
        .with_equality_predicted(complete)
        .with_param("rho1", r1)
        .with_param("rho2", r2);
    let gap_at_min = BoundCheck::new("diff-v", r1 - r2, r2 * xv * xv / denom, Relation::Le)
        .with_equality_predicted(pointwise)
        .with_param("xv", xv)
        .with_param("vertex", v as f64);
    let gap_global = BoundCheck::new("diff-global", r1 - r2, r2 / (nf - 2.0), Relation::Le)
        .with_equality_predicted(complete)
        .with_param("rho1", r1)
        .with_param("rho2", r2);

    Ok(RatioChecks {
        ratio_at_min,
        ratio_global,
        gap_at_min,
        gap_global,
    })
}

// ---------------------------------------------------------------------------
// Classifiers for the fifth and sixth smallest values
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mu5Rule {
    /// Complete graph: the spectrum is 0..n-1.
    Complete,
    /// A 4-clique or diameter >= 3 pins the value at 3.
    CliqueOrDiameter,
    /// An induced 5-cycle or star-plus-edge gives (1+sqrt(33))/2.
    InducedC5OrS4Plus,
    /// An induced K4 minus an edge gives (3+sqrt(17))/2.
    InducedK4MinusE,
    /// None of the lowering patterns occur: the value is 4.
    NoBlockingPattern,
}

impl Mu5Rule {
    pub fn id(self) -> &'static str {
        match self {
            Mu5Rule::Complete => "complete",
            Mu5Rule::CliqueOrDiameter => "clique-or-diameter",
            Mu5Rule::InducedC5OrS4Plus => "c5-or-s4plus",
            Mu5Rule::InducedK4MinusE => "k4-minus-e",
            Mu5Rule::NoBlockingPattern => "no-blocking-pattern",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mu6Rule {
    /// K6: sixth value is 5.
    CompleteK6,
    /// Complete graphs beyond K6 also have sixth value 5.
    CompleteLarge,
    /// Fifth value 4 forces an induced 4-star; its radius 2+sqrt(7) is next.
    InducedS4,
    /// Fifth value (3+sqrt(17))/2: the sixth is 4.
    FourAfterK4MinusE,
    /// A (1,2,2) distance triple (equivalently an induced 5-cycle or
    /// star-plus-edge) gives (1+sqrt(33))/2.
    InducedC5OrS4Plus,
    /// An induced K4 minus an edge gives (3+sqrt(17))/2.
    InducedK4MinusE,
    /// A value-4 submatrix: a distance-4 pair, a pairwise-distance-2
    /// triple, an induced 4-cycle, or an induced K5.
    DistanceFour,
    /// Diameter exactly 3 with nothing smaller: a geodesic (1,2,3) triple
    /// gives the largest root of x^3-14x-12.
    GeodesicTriple,
    /// The 4-cycle-deletion distance pattern (an induced 4-path at
    /// diameter 2, as in the 5-cycle): (3+sqrt(37))/2.
    CycleFiveDeletion,
    /// The bowtie distance pattern (triangle plus a vertex adjacent to
    /// exactly one corner): the cubic root gamma.
    BowtiePattern,
    /// A triangle with a vertex at distance 2 from all corners: 1+sqrt(13).
    TriangleApex,
    /// Fifth value (1+sqrt(33))/2 with no further pattern: the sixth is 4.
    NoBlockingPattern,
}

impl Mu6Rule {
    pub fn id(self) -> &'static str {
        match self {
            Mu6Rule::CompleteK6 => "complete-k6",
            Mu6Rule::CompleteLarge => "complete",
            Mu6Rule::InducedS4 => "induced-s4",
            Mu6Rule::FourAfterK4MinusE => "four-after-k4-minus-e",
            Mu6Rule::InducedC5OrS4Plus => "c5-or-s4plus",
            Mu6Rule::InducedK4MinusE => "k4-minus-e",
            Mu6Rule::DistanceFour => "four-pattern",
            Mu6Rule::GeodesicTriple => "geodesic-triple",
            Mu6Rule::CycleFiveDeletion => "c5-deletion",
            Mu6Rule::BowtiePattern => "bowtie-gamma",
            Mu6Rule::TriangleApex => "triangle-apex",
            Mu6Rule::NoBlockingPattern => "no-blocking-pattern",
        }
    }
}

/// Structural facts backing a classifier verdict.
#[derive(Debug, Clone)]
pub struct Evidence {
    pub omega: usize,
    pub diameter: usize,
    /// Induced patterns found, with one witness subset each.
    pub found: Vec<(PatternId, Vec<usize>)>,
    /// Induced patterns checked and absent.
    pub absent: Vec<PatternId>,
    /// Distance patterns found, with one witness subset each.
    pub distance_patterns: Vec<(&'static str, Vec<usize>)>,
}

#[derive(Debug, Clone)]
pub struct Mu5Verdict {
    pub value: f64,
    pub symbolic: &'static str,
    pub rule: Mu5Rule,
    pub evidence: Evidence,
}

#[derive(Debug, Clone)]
pub struct Mu6Verdict {
    pub value: f64,
    pub symbolic: &'static str,
    pub rule: Mu6Rule,
    pub evidence: Evidence,
}

fn half(a: f64, b: f64) -> f64 {
    (a + b.sqrt()) / 2.0
}

// Distance patterns that pin the small Pareto values, row-major.
const TRIPLE_1_2_2: [i64; 9] = [0, 1, 2, 1, 0, 2, 2, 2, 0];
const TRIPLE_2_2_2: [i64; 9] = [0, 2, 2, 2, 0, 2, 2, 2, 0];
const TRIPLE_1_2_3: [i64; 9] = [0, 1, 2, 1, 0, 3, 2, 3, 0];
const QUAD_CYCLE4: [i64; 16] = [0, 1, 2, 1, 1, 0, 1, 2, 2, 1, 0, 1, 1, 2, 1, 0];
const QUAD_BOWTIE: [i64; 16] = [0, 1, 2, 2, 1, 0, 1, 1, 2, 1, 0, 1, 2, 1, 1, 0];
const QUAD_PATH4: [i64; 16] = [0, 1, 2, 2, 1, 0, 1, 2, 2, 1, 0, 1, 2, 2, 1, 0];
const QUAD_APEX: [i64; 16] = [0, 2, 2, 2, 2, 0, 1, 1, 2, 1, 0, 1, 2, 1, 1, 0];

struct PatternProbe<'a> {
    g: &'a Graph,
    d: DistanceMatrix,
    found: Vec<(PatternId, Vec<usize>)>,
    absent: Vec<PatternId>,
    distance_patterns: Vec<(&'static str, Vec<usize>)>,
}

impl<'a> PatternProbe<'a> {
    fn new(g: &'a Graph) -> Self {
        PatternProbe {
            g,
            d: distance_matrix(g),
            found: Vec::new(),
            absent: Vec::new(),
            distance_patterns: Vec::new(),
        }
    }

    fn check(&mut self, p: PatternId) -> bool {
        match find_induced(self.g, p) {
            Some(w) => {
                self.found.push((p, w));
                true
            }
            None => {
                self.absent.push(p);
                false
            }
        }
    }

    fn check_distances(&mut self, name: &'static str, pattern: &[i64], k: usize) -> bool {
        match find_distance_pattern(&self.d, pattern, k) {
            Some(w) => {
                self.distance_patterns.push((name, w));
                true
            }
            None => false,
        }
    }

    fn check_pair(&mut self, name: &'static str, distance: i64) -> bool {
        match find_distance_pair(&self.d, distance) {
            Some(w) => {
                self.distance_patterns.push((name, w));
                true
            }
            None => false,
        }
    }

    fn into_evidence(self, omega: usize, diameter: usize) -> Evidence {
        Evidence {
            omega,
            diameter,
            found: self.found,
            absent: self.absent,
            distance_patterns: self.distance_patterns,
        }
    }
}

fn out_of_range(d: &crate::graph::DistanceMatrix, k: usize) -> Error {
    let available = crate::pareto::pareto_spectrum(d)
        .map(|s| s.len())
        .unwrap_or(0);
    Error::OutOfRange { k, available }
}

/// Fifth smallest distance Pareto eigenvalue from structure alone.
///
/// Complete graphs with at least 5 vertices have the value 4 directly
/// from their integer spectrum; K4 has only four values and is rejected.
/// Non-complete graphs dispatch on the clique number, the diameter, and
/// the induced patterns C5, S4+, K4-e.
pub fn classify_mu5(g: &Graph) -> Result<Mu5Verdict> {
    let n = g.n();
    if n < 4 || (is_complete(g) && n == 4) {
        return Err(out_of_range(&distance_matrix(g), 5));
    }
    let omega = clique_number_with_budget(g, MAX_VERTICES)?;
    let diameter = g.diameter() as usize;
    let mut probe = PatternProbe::new(g);

    if is_complete(g) {
        return Ok(Mu5Verdict {
            value: 4.0,
            symbolic: "4",
            rule: Mu5Rule::Complete,
            evidence: probe.into_evidence(omega, diameter),
        });
    }

    let (value, symbolic, rule) = if omega >= 4 || diameter >= 3 {
        // Record the realizing pattern: a 4-clique or an induced 4-path.
        if omega >= 4 {
            probe.check(PatternId::K4);
        } else {
            probe.check(PatternId::P4);
        }
        (3.0, "3", Mu5Rule::CliqueOrDiameter)
    } else if probe.check(PatternId::C5) || probe.check(PatternId::S4Plus) {
        (half(1.0, 33.0), "(1+√33)/2", Mu5Rule::InducedC5OrS4Plus)
    } else if probe.check(PatternId::K4MinusE) {
        (half(3.0, 17.0), "(3+√17)/2", Mu5Rule::InducedK4MinusE)
    } else {
        (4.0, "4", Mu5Rule::NoBlockingPattern)
    };

    Ok(Mu5Verdict {
        value,
        symbolic,
        rule,
        evidence: probe.into_evidence(omega, diameter),
    })
}

/// Sixth smallest distance Pareto eigenvalue from structure alone.
///
/// Complete graphs come straight from their integer spectrum (K5 has no
/// sixth value). Everything else dispatches on the fifth-value rule and
/// then walks the possible next values in increasing order, each tied to
/// the minimal distance pattern realizing it. The ladder is exact: for
/// each rung, enumerating all small distance matrices shows no other
/// pattern can produce a value between it and the previous rung.
pub fn classify_mu6(g: &Graph) -> Result<Mu6Verdict> {
    let n = g.n();
    if n < 5 || (is_complete(g) && n == 5) {
        return Err(out_of_range(&distance_matrix(g), 6));
    }
    if is_complete(g) {
        let rule = if n == 6 {
            Mu6Rule::CompleteK6
        } else {
            Mu6Rule::CompleteLarge
        };
        return Ok(Mu6Verdict {
            value: 5.0,
            symbolic: "5",
            rule,
            evidence: Evidence {
                omega: n,
                diameter: 1,
                found: Vec::new(),
                absent: Vec::new(),
                distance_patterns: Vec::new(),
            },
        });
    }

    let mu5 = classify_mu5(g)?;
    let mut probe = PatternProbe::new(g);
    probe.found = mu5.evidence.found.clone();
    probe.absent = mu5.evidence.absent.clone();

    // A value-4 submatrix exists exactly when one of the four minimal
    // patterns with spectral radius 4 occurs: a distance-4 pair, a
    // pairwise-distance-2 triple, the 4-cycle distance pattern, or an
    // all-adjacent 5-set.
    fn has_value_four(probe: &mut PatternProbe<'_>) -> bool {
        let pair = probe.check_pair("pair-dist-4", 4);
        let triple = probe.check_distances("triple-2-2-2", &TRIPLE_2_2_2, 3);
        let cycle = probe.check_distances("quad-cycle4", &QUAD_CYCLE4, 4);
        pair || triple || cycle || probe.check(PatternId::K5)
    }

    let (value, symbolic, rule) = match mu5.rule {
        Mu5Rule::Complete => unreachable!("complete graphs handled above"),
        Mu5Rule::NoBlockingPattern => {
            // Fifth value 4 on a non-complete graph forces an induced
            // 4-star whose distance radius 2+sqrt(7) is the next value.
            let has_s4 = probe.check(PatternId::S4);
            debug_assert!(has_s4, "diameter-2 graph with fifth value 4 lacks a 4-star");
            (2.0 + 7f64.sqrt(), "2+√7", Mu6Rule::InducedS4)
        }
        Mu5Rule::InducedK4MinusE => (4.0, "4", Mu6Rule::FourAfterK4MinusE),
        Mu5Rule::CliqueOrDiameter => {
            // Fifth value 3. Next values in order: (1+sqrt(33))/2 from a
            // (1,2,2) triple, (3+sqrt(17))/2 from K4-e, 4, and finally
            // the geodesic (1,2,3) triple value, which always exists at
            // diameter exactly 3.
            if probe.check_distances("triple-1-2-2", &TRIPLE_1_2_2, 3) {
                let evidenced = probe.check(PatternId::C5) || probe.check(PatternId::S4Plus);
                debug_assert!(evidenced, "a (1,2,2) triple forces an induced C5 or S4+");
                (half(1.0, 33.0), "(1+√33)/2", Mu6Rule::InducedC5OrS4Plus)
            } else if probe.check(PatternId::K4MinusE) {
                (half(3.0, 17.0), "(3+√17)/2", Mu6Rule::InducedK4MinusE)
            } else if has_value_four(&mut probe) {
                (4.0, "4", Mu6Rule::DistanceFour)
            } else {
                let found = probe.check_distances("triple-1-2-3", &TRIPLE_1_2_3, 3);
                debug_assert!(found, "diameter-3 graphs contain a geodesic (1,2,3) triple");
                (
                    geodesic_triple_radius(),
                    "root(x³−14x−12)",
                    Mu6Rule::GeodesicTriple,
                )
            }
        }
        Mu5Rule::InducedC5OrS4Plus => {
            // Fifth value (1+sqrt(33))/2, diameter 2, clique number <= 3.
            // Next values in order: (3+sqrt(17))/2 from K4-e, 4, gamma
            // from the bowtie pattern, (3+sqrt(37))/2 from an induced
            // 4-path, 1+sqrt(13) from a triangle with a far apex.
            if probe.check(PatternId::K4MinusE) {
                (half(3.0, 17.0), "(3+√17)/2", Mu6Rule::InducedK4MinusE)
            } else if has_value_four(&mut probe) {
                (4.0, "4", Mu6Rule::DistanceFour)
            } else if probe.check_distances("quad-bowtie", &QUAD_BOWTIE, 4) {
                (gamma_root(), "γ", Mu6Rule::BowtiePattern)
            } else if probe.check_distances("quad-path4", &QUAD_PATH4, 4) {
                (half(3.0, 37.0), "(3+√37)/2", Mu6Rule::CycleFiveDeletion)
            } else if probe.check_distances("quad-apex", &QUAD_APEX, 4) {
                (triangle_apex_radius(), "1+√13", Mu6Rule::TriangleApex)
            } else {
                (4.0, "4", Mu6Rule::NoBlockingPattern)
            }
        }
    };

    Ok(Mu6Verdict {
        value,
        symbolic,
        rule,
        evidence: Evidence {
            omega: mu5.evidence.omega,
            diameter: mu5.evidence.diameter,
            found: probe.found,
            absent: probe.absent,
            distance_patterns: probe.distance_patterns,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_family;
    use crate::pareto::{pareto_spectrum, rho2_by_deletion};

    #[test]
    fn star_closed_form_matches_enumeration() {
        for n in 3..=9 {
            let d = distance_matrix(&make_family("S", n, None).unwrap());
            let enumerated = pareto_spectrum(&d).unwrap();
            let closed = star_spectrum_closed_form(n).unwrap();
            assert_eq!(closed.len(), 2 * (n - 1), "S{n}");
            assert_eq!(enumerated.len(), closed.len(), "S{n}");
            for (a, b) in enumerated.values().iter().zip(&closed) {
                assert!((a - b).abs() < 1e-9, "S{n}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn star_closed_form_extremes() {
        for n in [4usize, 7, 12] {
            let closed = star_spectrum_closed_form(n).unwrap();
            let nf = n as f64;
            let rho1 = nf - 2.0 + (nf * nf - 3.0 * nf + 3.0).sqrt();
            assert!((closed.last().unwrap() - rho1).abs() < 1e-12);
            assert!((closed[closed.len() - 2] - 2.0 * (nf - 2.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn star_plus_closed_form() {
        let n5 = rho2_star_plus_closed_form(5).unwrap();
        assert!((n5 - (3.0 + 65f64.sqrt()) / 2.0).abs() < 1e-12);
        let n4 = rho2_star_plus_closed_form(4).unwrap();
        assert!((n4 - (1.0 + 33f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!(rho2_star_plus_closed_form(3).is_err());

        for n in 4..=12 {
            let g = make_family("S+", n, None).unwrap();
            let (by_deletion, _) = rho2_by_deletion(&g).unwrap();
            let closed = rho2_star_plus_closed_form(n).unwrap();
            assert!((by_deletion - closed).abs() < 1e-9, "S{n}+");
        }
    }

    #[test]
    fn wheel_closed_form() {
        assert_eq!(rho2_wheel_closed_form(6).unwrap(), 6.0);
        assert_eq!(rho2_wheel_closed_form(5).unwrap(), 4.0);
        assert!(rho2_wheel_closed_form(4).is_err());
        for n in 5..=10 {
            let g = make_family("W", n, None).unwrap();
            let (by_deletion, _) = rho2_by_deletion(&g).unwrap();
            assert!(
                (by_deletion - rho2_wheel_closed_form(n).unwrap()).abs() < 1e-9,
                "W{n}"
            );
        }
    }

    #[test]
    fn gamma_is_the_bowtie_value() {
        let g = gamma_root();
        let p = |x: f64| x * x * x - x * x - 11.0 * x - 7.0;
        assert!(p(4.0) < 0.0 && p(5.0) > 0.0);
        assert!(p(g).abs() <= 1e-10);
        let by_matrix = spectral_radius(&gamma_defining_matrix()).unwrap().radius;
        assert!((g - by_matrix).abs() <= 1e-9);
    }

    #[test]
    fn p4_radius_closed_form() {
        // Hand algebra: the symmetric eigenvector gives x^2 - 4x - 6 = 0.
        assert!((p4_distance_radius() - (2.0 + 10f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn geodesic_triple_radius_matches_its_matrix() {
        let r = geodesic_triple_radius();
        let p = |x: f64| x * x * x - 14.0 * x - 12.0;
        assert!(p(r).abs() <= 1e-10);
        let m = SymMatrix::from_rows(&[&[0, 1, 2], &[1, 0, 3], &[2, 3, 0]]).unwrap();
        let by_matrix = spectral_radius(&m).unwrap().radius;
        assert!((r - by_matrix).abs() <= 1e-9);
        // Distinct from the bowtie root, despite being close.
        assert!((r - gamma_root()).abs() > 1e-2);
    }

    #[test]
    fn triangle_apex_radius_matches_its_matrix() {
        let m = SymMatrix::from_rows(&[
            &[0, 2, 2, 2],
            &[2, 0, 1, 1],
            &[2, 1, 0, 1],
            &[2, 1, 1, 0],
        ])
        .unwrap();
        let by_matrix = spectral_radius(&m).unwrap().radius;
        assert!((triangle_apex_radius() - by_matrix).abs() <= 1e-9);
    }

    #[test]
    fn r1_lower_unit_equality_only_for_k2() {
        let k2 = make_family("K", 2, None).unwrap();
        let check = check_r1_lower_unit(&k2).unwrap();
        assert!(check.holds() && check.equality);
        assert_eq!(check.equality_predicted, Some(true));
        assert!((check.lhs - 2.0).abs() < 1e-12 && (check.rhs - 2.0).abs() < 1e-12);

        let s5 = make_family("S", 5, None).unwrap();
        let check = check_r1_lower_unit(&s5).unwrap();
        assert!(check.holds() && !check.equality);
        assert_eq!(check.equality_predicted, Some(false));
        // k comes from the uniform Perron vector of 2(J - I) on 4 leaves.
        let k = check.params.iter().find(|(k, _)| *k == "k").unwrap().1;
        assert!((k - 0.5).abs() < 1e-9);
        assert!((check.lhs - (2.0 * (3.0 + 13f64.sqrt()) - 6.0)).abs() < 1e-9);
        assert!((check.rhs - 4.0).abs() < 1e-9);
    }

    #[test]
    fn r1_lower_general_t() {
        let k2 = make_family("K", 2, None).unwrap();
        let check = check_r1_lower(&k2, 1.0).unwrap();
        assert!(check.equality && check.equality_predicted == Some(true));
        let off = check_r1_lower(&k2, 2.0).unwrap();
        assert!(off.holds() && !off.equality);
        assert_eq!(off.equality_predicted, Some(false));
        assert!(check_r1_lower(&k2, 0.0).is_err());
        assert!(check_r1_lower(&k2, -1.0).is_err());
    }

    #[test]
    fn r1_lower_opt_equality_for_stars_and_wheels() {
        for n in [4usize, 5, 7] {
            let s = make_family("S", n, None).unwrap();
            let check = check_r1_lower_opt(&s).unwrap();
            assert!(check.equality, "S{n}");
            assert_eq!(check.equality_predicted, Some(true));
        }
        let w6 = make_family("W", 6, None).unwrap();
        let check = check_r1_lower_opt(&w6).unwrap();
        assert!(check.equality && check.equality_predicted == Some(true));

        let p4 = make_family("P", 4, None).unwrap();
        let check = check_r1_lower_opt(&p4).unwrap();
        assert!(check.holds() && !check.equality);
        assert_eq!(check.equality_predicted, Some(false));
    }

    #[test]
    fn transmission_bound_cases() {
        for n in 3..=7 {
            let k = make_family("K", n, None).unwrap();
            let check = check_transmission_bound(&k).unwrap();
            assert!(check.equality, "K{n}");
            assert_eq!(check.equality_predicted, Some(true));
        }
        let p4 = make_family("P", 4, None).unwrap();
        let check = check_transmission_bound(&p4).unwrap();
        assert!(check.holds() && !check.equality);
        assert_eq!(check.equality_predicted, Some(false));
        // Minimum transmission of the 4-path is 4, at an inner vertex.
        let tr = check.params.iter().find(|(k, _)| *k == "tr").unwrap().1;
        assert_eq!(tr, 4.0);
    }

    #[test]
    fn transmission_bound_strict_on_pyramidal_wheels() {
        // Wheels are pyramidal yet sit strictly above the bound:
        // rho1(W5) = 2+2*sqrt(2) against a bound of 4, rho1(W6) =
        // 3+sqrt(14) against 5. Hence equality is predicted only for
        // complete graphs.
        for n in 5..=8 {
            let w = make_family("W", n, None).unwrap();
            assert!(crate::graph::is_pyramidal(&w));
            let check = check_transmission_bound(&w).unwrap();
            assert!(check.holds() && !check.equality, "W{n}");
            assert_eq!(check.equality_predicted, Some(false));
            assert!(check.equality_consistent());
            let flag = check.params.iter().find(|(k, _)| *k == "pyramidal").unwrap().1;
            assert_eq!(flag, 1.0);
        }
        let w5 = make_family("W", 5, None).unwrap();
        let check = check_transmission_bound(&w5).unwrap();
        assert!((check.lhs - (2.0 + 2.0 * 2f64.sqrt())).abs() < 1e-9);
        assert!((check.rhs - 4.0).abs() < 1e-12);
    }

    #[test]
    fn cycle_gap_strict_for_n4_boundary_at_n3() {
        for n in 4..=9 {
            let check = check_cycle_gap(n).unwrap();
            assert!(check.strict_ok(), "C{n}: slack {}", check.slack);
        }
        let c3 = check_cycle_gap(3).unwrap();
        assert!(c3.holds() && c3.boundary());
    }

    #[test]
    fn star_gap_closed_form_and_decrease() {
        for n in 3..=12 {
            let check = check_star_gap(n).unwrap();
            assert!(check.equality && check.equality_consistent(), "S{n}");
        }
        assert!((star_gap_closed_form(5).unwrap() - (13f64.sqrt() - 3.0)).abs() < 1e-12);
        assert!((star_gap_closed_form(3).unwrap() - (3f64.sqrt() - 1.0)).abs() < 1e-12);
        for n in 3..=49 {
            assert!(check_star_gap_decreasing(n).unwrap().strict_ok(), "n={n}");
        }
    }

    #[test]
    fn rownorm_gap_cases() {
        let k3 = make_family("K", 3, None).unwrap();
        let check = check_rownorm_gap(&k3).unwrap();
        assert!((check.lhs - 1.0).abs() < 1e-9);
        assert!((check.rhs - 2f64.sqrt()).abs() < 1e-12);
        assert!(check.strict_ok());

        let s5 = make_family("S", 5, None).unwrap();
        let check = check_rownorm_gap(&s5).unwrap();
        assert!((check.lhs - (13f64.sqrt() - 3.0)).abs() < 1e-9);
        assert!((check.rhs - 2.0).abs() < 1e-12);
        assert!(check.strict_ok());

        // The single edge sits exactly on the bound: 1 - 0 = 1.
        let k2 = make_family("K", 2, None).unwrap();
        let check = check_rownorm_gap(&k2).unwrap();
        assert!(check.boundary());
    }

    #[test]
    fn ratio_family_cases() {
        let k5 = make_family("K", 5, None).unwrap();
        let checks = check_ratio_family(&k5).unwrap();
        assert!(checks.ratio_global.equality);
        assert_eq!(checks.ratio_global.equality_predicted, Some(true));
        assert!((checks.ratio_global.lhs - 4.0 / 3.0).abs() < 1e-9);
        assert!(checks.ratio_at_min.equality);
        assert_eq!(checks.ratio_at_min.equality_predicted, Some(true));

        let k4 = make_family("K", 4, None).unwrap();
        let checks = check_ratio_family(&k4).unwrap();
        assert!(checks.gap_global.equality);
        assert!((checks.gap_global.lhs - 1.0).abs() < 1e-9);
        assert!((checks.gap_global.rhs - 1.0).abs() < 1e-9);

        let p4 = make_family("P", 4, None).unwrap();
        let checks = check_ratio_family(&p4).unwrap();
        for c in [&checks.ratio_global, &checks.gap_global] {
            assert!(c.holds() && !c.equality);
            assert_eq!(c.equality_predicted, Some(false));
        }

        let k2 = make_family("K", 2, None).unwrap();
        assert!(check_ratio_family(&k2).is_err());
    }

    #[test]
    fn mu5_family_examples() {
        let p5 = make_family("P", 5, None).unwrap();
        assert_eq!(classify_mu5(&p5).unwrap().value, 3.0);
        let s5 = make_family("S", 5, None).unwrap();
        assert_eq!(classify_mu5(&s5).unwrap().value, 4.0);
        let c5 = make_family("C", 5, None).unwrap();
        let v = classify_mu5(&c5).unwrap();
        assert!((v.value - half(1.0, 33.0)).abs() < 1e-12);
        assert_eq!(v.rule, Mu5Rule::InducedC5OrS4Plus);
        let k6 = make_family("K", 6, None).unwrap();
        let v = classify_mu5(&k6).unwrap();
        assert_eq!(v.value, 4.0);
        assert_eq!(v.rule, Mu5Rule::Complete);
        let w5 = make_family("W", 5, None).unwrap();
        let v = classify_mu5(&w5).unwrap();
        assert_eq!(v.rule, Mu5Rule::InducedK4MinusE);
    }

    #[test]
    fn mu5_out_of_range() {
        let k4 = make_family("K", 4, None).unwrap();
        match classify_mu5(&k4) {
            Err(Error::OutOfRange { k: 5, available: 4 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        let p3 = make_family("P", 3, None).unwrap();
        match classify_mu5(&p3) {
            Err(Error::OutOfRange { k: 5, available: 4 }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn mu6_family_examples() {
        let s6 = make_family("S", 6, None).unwrap();
        let v = classify_mu6(&s6).unwrap();
        assert!((v.value - (2.0 + 7f64.sqrt())).abs() < 1e-12);
        assert_eq!(v.rule, Mu6Rule::InducedS4);

        let c5 = make_family("C", 5, None).unwrap();
        let v = classify_mu6(&c5).unwrap();
        assert!((v.value - half(3.0, 37.0)).abs() < 1e-12);
        assert_eq!(v.rule, Mu6Rule::CycleFiveDeletion);

        // The 7-cycle has diameter 3 and none of the lower patterns, so
        // its sixth value comes from a geodesic (1,2,3) triple.
        let c7 = make_family("C", 7, None).unwrap();
        let v = classify_mu6(&c7).unwrap();
        assert_eq!(v.rule, Mu6Rule::GeodesicTriple);
        assert!((v.value - geodesic_triple_radius()).abs() < 1e-12);
        assert!((v.value - 4.113090584).abs() < 1e-9);

        let bowtie = make_family("coalesce", 3, Some(3)).unwrap();
        let v = classify_mu6(&bowtie).unwrap();
        assert_eq!(v.rule, Mu6Rule::BowtiePattern);
        assert!((v.value - gamma_root()).abs() < 1e-12);

        let kb = make_family("KB", 2, Some(3)).unwrap();
        let v = classify_mu6(&kb).unwrap();
        assert!((v.value - (2.0 + 7f64.sqrt())).abs() < 1e-12);

        let k6 = make_family("K", 6, None).unwrap();
        assert_eq!(classify_mu6(&k6).unwrap().value, 5.0);
        let k7 = make_family("K", 7, None).unwrap();
        let v = classify_mu6(&k7).unwrap();
        assert_eq!(v.value, 5.0);
        assert_eq!(v.rule, Mu6Rule::CompleteLarge);
    }

    #[test]
    fn mu6_out_of_range() {
        let k5 = make_family("K", 5, None).unwrap();
        match classify_mu6(&k5) {
            Err(Error::OutOfRange { k: 6, available: 5 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        let s4 = make_family("S", 4, None).unwrap();
        assert!(classify_mu6(&s4).is_err());
    }

    #[test]
    fn classifiers_match_enumeration_on_families() {
        let graphs = [
            make_family("P", 5, None).unwrap(),
            make_family("P", 6, None).unwrap(),
            make_family("C", 5, None).unwrap(),
            make_family("C", 6, None).unwrap(),
            make_family("C", 7, None).unwrap(),
            make_family("S", 5, None).unwrap(),
            make_family("S", 7, None).unwrap(),
            make_family("S+", 5, None).unwrap(),
            make_family("S+", 6, None).unwrap(),
            make_family("W", 5, None).unwrap(),
            make_family("W", 6, None).unwrap(),
            make_family("K", 6, None).unwrap(),
            make_family("K", 7, None).unwrap(),
            make_family("K-e", 5, None).unwrap(),
            make_family("K-e", 6, None).unwrap(),
            make_family("KB", 2, Some(3)).unwrap(),
            make_family("KB", 3, Some(3)).unwrap(),
            make_family("KB", 3, Some(4)).unwrap(),
            make_family("coalesce", 3, Some(3)).unwrap(),
            make_family("coalesce", 3, Some(4)).unwrap(),
        ];
        for g in &graphs {
            let d = distance_matrix(g);
            let spec = pareto_spectrum(&d).unwrap();
            if let Ok(v) = classify_mu5(g) {
                let enumerated = spec.mu(5).unwrap();
                assert!(
                    (v.value - enumerated).abs() < 1e-9,
                    "mu5 {}: {} vs {}",
                    g.name(),
                    v.value,
                    enumerated
                );
            }
            if let Ok(v) = classify_mu6(g) {
                let enumerated = spec.mu(6).unwrap();
                assert!(
                    (v.value - enumerated).abs() < 1e-9,
                    "mu6 {}: {} vs {}",
                    g.name(),
                    v.value,
                    enumerated
                );
            }
        }
    }
}
