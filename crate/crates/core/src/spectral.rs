//! Spectral radius with Perron vector by shifted power iteration, a full
//! Jacobi eigensolver used as a cross-check oracle, Rayleigh quotients,
//! the average-row-sum bound, and the dominance relation.

use crate::bound::{BoundCheck, Relation};
use crate::error::{Error, Result};
use crate::matrix::{principal_submatrix, SymMatrix, VertexSubset};

/// Relative residual target for power iteration: accept x when
/// ||Mx - rho x||_inf <= POWER_TOL * (rho + 1).
pub const POWER_TOL: f64 = 1e-13;

/// Iteration cap for power iteration.
pub const POWER_MAX_ITER: usize = 100_000;

/// Absolute tolerance for treating two Pareto values as the same.
pub const VALUE_TOL: f64 = 1e-9;

/// Largest eigenvalue of a symmetric matrix with its eigenvector.
#[derive(Debug, Clone)]
pub struct SpectralResult {
    /// Largest eigenvalue.
    pub radius: f64,
    /// Unit eigenvector; entrywise positive for irreducible nonnegative
    /// input (the Perron vector).
    pub perron: Vec<f64>,
    /// Max-norm of M x - radius x at the returned vector.
    pub residual: f64,
    pub iterations: usize,
}

/// Largest eigenvalue and eigenvector of a nonnegative symmetric matrix.
///
/// Iterates on M + nI: the shift makes the dominant eigenvalue positive
/// and the iteration matrix primitive for distance submatrices, so the
/// all-ones start vector converges to the Perron direction. The radius is
/// recovered by subtracting the shift and the residual is reported for
/// the unshifted matrix (the two residuals coincide).
pub fn spectral_radius(m: &SymMatrix) -> Result<SpectralResult> {
    let n = m.n();
    let shift = n as f64;
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut last_residual = f64::INFINITY;
    for it in 0..POWER_MAX_ITER {
        // y = (M + shift I) x
        m.mul_vec(&x, &mut y);
        for i in 0..n {
            y[i] += shift * x[i];
        }
        // Rayleigh estimate for the shifted matrix; x is unit norm.
        let shifted_rho: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let rho = shifted_rho - shift;
        let mut residual = 0.0f64;
        for i in 0..n {
            residual = residual.max((y[i] - shifted_rho * x[i]).abs());
        }
        last_residual = residual;
        if residual <= POWER_TOL * (rho.abs() + 1.0) {
            return Ok(SpectralResult {
                radius: rho,
                perron: x,
                residual,
                iterations: it,
            });
        }
        let norm: f64 = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            // Only possible for the zero matrix with zero shift; n >= 1
            // makes the shift positive, so this is unreachable in practice.
            return Err(Error::NoConvergence {
                iterations: it,
                residual,
            });
        }
        for i in 0..n {
            x[i] = y[i] / norm;
        }
    }
    Err(Error::NoConvergence {
        iterations: POWER_MAX_ITER,
        residual: last_residual,
    })
}

/// All eigenvalues in descending order, by cyclic Jacobi rotations.
///
/// Kept independent of the power-iteration path so the two can check
/// each other; intended for orders up to 64.
pub fn all_eigenvalues(m: &SymMatrix) -> Vec<f64> {
    let n = m.n();
    let mut a: Vec<f64> = (0..n * n).map(|k| m.fentry(k / n, k % n)).collect();
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off(&a) > 1e-12 && sweeps < 200 {
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
    eig
}

/// Quadratic form ratio x^T M x / x^T x.
pub fn rayleigh(m: &SymMatrix, x: &[f64]) -> Result<f64> {
    if x.len() != m.n() {
        return Err(Error::InvalidParameter("vector length mismatch".into()));
    }
    let norm2: f64 = x.iter().map(|v| v * v).sum();
    if norm2 == 0.0 {
        return Err(Error::InvalidParameter("zero vector".into()));
    }
    let mut y = vec![0.0; m.n()];
    m.mul_vec(x, &mut y);
    let quad: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
    Ok(quad / norm2)
}

/// rho(M) >= mean row sum, with equality exactly when all row sums agree.
///
/// The equality prediction compares integer row sums, so it is exact.
pub fn avg_row_sum_bound(m: &SymMatrix) -> Result<BoundCheck> {
    let rho = spectral_radius(m)?.radius;
    let sums = m.row_sums();
    let mean = sums.iter().sum::<i64>() as f64 / m.n() as f64;
    let all_equal = sums.windows(2).all(|w| w[0] == w[1]);
    Ok(BoundCheck::new("avg-row", rho, mean, Relation::Ge)
        .with_equality_predicted(all_equal))
}

/// Whether `a` dominates `b`: some simultaneous row/column permutation of
/// `a` is entrywise >= `b` with strictness somewhere (same order), or `b`
/// embeds as a principal block of `a` with a nonzero complement.
///
/// The permutation search is exhaustive for orders up to 8; above that
/// only the identity arrangement and order-preserving embeddings are
/// tried, which can miss dominations but never invents one.
pub fn dominates(a: &SymMatrix, b: &SymMatrix) -> bool {
    if !a.is_nonnegative() || !b.is_nonnegative() {
        return false;
    }
    if a.n() == b.n() {
        return dominates_same_order(a, b);
    }
    if a.n() > b.n() {
        return embeds_with_nonzero_complement(a, b);
    }
    false
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    // Heap's algorithm.
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = vec![items.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            out.push(items.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn ge_with_strict(a: &SymMatrix, perm: &[usize], b: &SymMatrix) -> bool {
    let n = b.n();
    let mut strict = false;
    for i in 0..n {
        for j in 0..n {
            let av = a.entry(perm[i], perm[j]);
            let bv = b.entry(i, j);
            if av < bv {
                return false;
            }
            if av > bv {
                strict = true;
            }
        }
    }
    strict
}

fn dominates_same_order(a: &SymMatrix, b: &SymMatrix) -> bool {
    let n = a.n();
    if n <= 8 {
        permutations(n).iter().any(|p| ge_with_strict(a, p, b))
    } else {
        let id: Vec<usize> = (0..n).collect();
        ge_with_strict(a, &id, b)
    }
}

fn embeds_with_nonzero_complement(a: &SymMatrix, b: &SymMatrix) -> bool {
    let n = a.n();
    let k = b.n();
    let exact = |sel: &[usize]| -> bool {
        for i in 0..k {
            for j in 0..k {
                if a.entry(sel[i], sel[j]) != b.entry(i, j) {
                    return false;
                }
            }
        }
        true
    };
    let complement_nonzero = |mask: u64| -> bool {
        for i in 0..n {
            for j in 0..n {
                if (mask >> i & 1 == 0 || mask >> j & 1 == 0) && a.entry(i, j) != 0 {
                    return true;
                }
            }
        }
        false
    };
    let perms = if n <= 8 { permutations(k) } else { vec![(0..k).collect()] };
    for mask in 1u64..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let idx = VertexSubset(mask).indices();
        let mut sel = vec![0usize; k];
        for p in &perms {
            for (slot, &src) in p.iter().enumerate() {
                sel[slot] = idx[src];
            }
            if exact(&sel) {
                if complement_nonzero(mask) {
                    return true;
                }
                // A zero complement cannot become nonzero under another
                // arrangement of the same subset.
                break;
            }
        }
    }
    false
}

/// Convenience: principal submatrix of a distance matrix as `SymMatrix`.
pub fn distance_submatrix(
    d: &crate::graph::DistanceMatrix,
    s: VertexSubset,
) -> Result<SymMatrix> {
    principal_submatrix(&SymMatrix::from_distance(d), s)
}
