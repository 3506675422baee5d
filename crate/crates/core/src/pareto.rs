//! Distance Pareto spectra by principal-submatrix enumeration, k-th value
//! extraction, complementarity certificates, and the second-largest value
//! via single-vertex deletion.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::matrix::{principal_submatrix, SymMatrix, VertexSubset};
use crate::spectral::{rayleigh, spectral_radius, VALUE_TOL};

/// Default cap on the host order for full subset enumeration (2^n - 1
/// principal submatrices).
pub const ENUMERATION_BUDGET: usize = 18;

/// Residual tolerance for certificate eigen-equations.
pub const CERT_TOL: f64 = 1e-10;

/// The distance Pareto eigenvalues of a graph: every spectral radius of a
/// principal submatrix of its distance matrix, deduplicated and sorted.
#[derive(Debug, Clone)]
pub struct ParetoSpectrum {
    values: Vec<f64>,
    witnesses: Vec<VertexSubset>,
    count_subsets: u64,
}

impl ParetoSpectrum {
    /// Ascending distinct Pareto eigenvalues.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// For each value, the first subset (by popcount, then bitmask)
    /// realizing it.
    pub fn witnesses(&self) -> &[VertexSubset] {
        &self.witnesses
    }

    pub fn count_subsets(&self) -> u64 {
        self.count_subsets
    }

    /// Number of distinct Pareto eigenvalues.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// k-th smallest distinct value, 1-based.
    pub fn mu(&self, k: usize) -> Result<f64> {
        if k == 0 || k > self.values.len() {
            return Err(Error::OutOfRange {
                k,
                available: self.values.len(),
            });
        }
        Ok(self.values[k - 1])
    }

    /// k-th largest distinct value, 1-based.
    pub fn rho(&self, k: usize) -> Result<f64> {
        if k == 0 || k > self.values.len() {
            return Err(Error::OutOfRange {
                k,
                available: self.values.len(),
            });
        }
        Ok(self.values[self.values.len() - k])
    }

    /// Sum of the k largest distinct values.
    pub fn top_sum(&self, k: usize) -> Result<f64> {
        if k == 0 || k > self.values.len() {
            return Err(Error::OutOfRange {
                k,
                available: self.values.len(),
            });
        }
        Ok(self.values[self.values.len() - k..].iter().sum())
    }
}

/// Every nonempty vertex subset in (popcount, bitmask) order.
fn enumeration_order(n: usize) -> Vec<u64> {
    let mut masks: Vec<u64> = (1..(1u64 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks
}

/// Full distance Pareto spectrum with the default enumeration budget.
pub fn pareto_spectrum(d: &DistanceMatrix) -> Result<ParetoSpectrum> {
    pareto_spectrum_with_budget(d, ENUMERATION_BUDGET)
}

/// Full distance Pareto spectrum; enumerates all 2^n - 1 nonempty
/// subsets. Deterministic regardless of worker count: subsets are ranked
/// by (popcount, bitmask) and ties keep the earliest witness.
pub fn pareto_spectrum_with_budget(d: &DistanceMatrix, budget: usize) -> Result<ParetoSpectrum> {
    let n = d.n();
    if n > budget {
        return Err(Error::BudgetExceeded {
            required: n,
            budget,
        });
    }
    let host = SymMatrix::from_distance(d);
    let masks = enumeration_order(n);
    let radii: Vec<f64> = masks
        .par_iter()
        .map(|&mask| {
            let sub = principal_submatrix(&host, VertexSubset(mask))
                .expect("enumerated masks are nonempty and in range");
            spectral_radius(&sub).map(|r| r.radius)
        })
        .collect::<Result<_>>()?;

    // Sort by value; enumeration rank breaks ties deterministically.
    let mut order: Vec<usize> = (0..masks.len()).collect();
    order.sort_by(|&a, &b| {
        radii[a]
            .partial_cmp(&radii[b])
            .unwrap()
            .then(a.cmp(&b))
    });

    let mut values = Vec::new();
    let mut witnesses = Vec::new();
    let mut group_start = f64::NEG_INFINITY;
    let mut group_best: Option<usize> = None;
    for &i in &order {
        if radii[i] - group_start > VALUE_TOL {
            if let Some(best) = group_best {
                values.push(radii[best]);
                witnesses.push(VertexSubset(masks[best]));
            }
            group_start = radii[i];
            group_best = Some(i);
        } else if let Some(best) = group_best {
            // Same value group: keep the earliest subset in enumeration order.
            if i < best {
                group_best = Some(i);
            }
        }
    }
    if let Some(best) = group_best {
        values.push(radii[best]);
        witnesses.push(VertexSubset(masks[best]));
    }

    Ok(ParetoSpectrum {
        values,
        witnesses,
        count_subsets: masks.len() as u64,
    })
}

/// k-th smallest distinct Pareto eigenvalue of the distance matrix.
pub fn mu(d: &DistanceMatrix, k: usize) -> Result<f64> {
    pareto_spectrum(d)?.mu(k)
}

/// k-th largest distinct Pareto eigenvalue of the distance matrix.
pub fn rho(d: &DistanceMatrix, k: usize) -> Result<f64> {
    pareto_spectrum(d)?.rho(k)
}

/// Number of distinct Pareto eigenvalues.
pub fn spectrum_size(d: &DistanceMatrix) -> Result<usize> {
    Ok(pareto_spectrum(d)?.len())
}

/// Second largest Pareto value via single-vertex deletion: the maximum
/// spectral radius over submatrices that drop one vertex of degree > 1.
/// Ties keep the lowest deleted-vertex index. For hosts with no such
/// vertex (only K2) falls back to full enumeration and reports no vertex.
pub fn rho2_by_deletion(g: &Graph) -> Result<(f64, Option<usize>)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "second largest Pareto value needs at least 2 vertices".into(),
        ));
    }
    let d = crate::graph::distance_matrix(g);
    let host = SymMatrix::from_distance(&d);
    let full: u64 = (1u64 << n) - 1;
    let mut best: Option<(f64, usize)> = None;
    for v in 0..n {
        if g.degree(v) <= 1 {
            continue;
        }
        let sub = principal_submatrix(&host, VertexSubset(full & !(1 << v)))?;
        let radius = spectral_radius(&sub)?.radius;
        let better = match best {
            None => true,
            Some((cur, _)) => radius > cur + VALUE_TOL,
        };
        if better {
            best = Some((radius, v));
        }
    }
    match best {
        Some((radius, v)) => Ok((radius, Some(v))),
        None => Ok((pareto_spectrum(&d)?.rho(2)?, None)),
    }
}

/// Checks the defining conditions of a Pareto eigenpair: D x >= lambda x
/// entrywise and lambda equal to the Rayleigh quotient of x, both within
/// `VALUE_TOL`. The vector must be nonzero and entrywise nonnegative.
pub fn verify_pareto(d: &DistanceMatrix, lambda: f64, x: &[f64]) -> Result<bool> {
    if x.len() != d.n() {
        return Err(Error::InvalidParameter("vector length mismatch".into()));
    }
    if x.iter().any(|&v| v < 0.0) {
        return Err(Error::InvalidParameter(
            "Pareto eigenvector must be entrywise nonnegative".into(),
        ));
    }
    if x.iter().all(|&v| v == 0.0) {
        return Err(Error::InvalidParameter("zero vector".into()));
    }
    let m = SymMatrix::from_distance(d);
    let mut y = vec![0.0; x.len()];
    m.mul_vec(x, &mut y);
    let componentwise = y
        .iter()
        .zip(x)
        .all(|(&yi, &xi)| yi >= lambda * xi - VALUE_TOL);
    let quotient = rayleigh(&m, x)?;
    Ok(componentwise && (quotient - lambda).abs() <= VALUE_TOL)
}

/// A certified Pareto eigenpair: the support set, the positive eigenvector
/// of the corresponding principal submatrix, and its zero-padded extension.
#[derive(Debug, Clone)]
pub struct ParetoCertificate {
    pub lambda: f64,
    pub support: VertexSubset,
    /// Positive eigenvector on the support, unit norm.
    pub xi: Vec<f64>,
    /// Zero-padded Pareto eigenvector on the full vertex set.
    pub x: Vec<f64>,
    /// Max-norm residual of the support eigen-equation.
    pub residual: f64,
}

/// Builds the certificate for a subset: lambda is the spectral radius of
/// the principal submatrix and xi its Perron vector (positive because
/// off-diagonal distances are at least 1; a singleton gives lambda = 0).
pub fn certificate_for(d: &DistanceMatrix, s: VertexSubset) -> Result<ParetoCertificate> {
    let host = SymMatrix::from_distance(d);
    let sub = principal_submatrix(&host, s)?;
    let spectral = spectral_radius(&sub)?;
    let idx = s.indices();
    let mut x = vec![0.0; d.n()];
    for (slot, &v) in idx.iter().enumerate() {
        x[v] = spectral.perron[slot];
    }

    debug_assert!(spectral.perron.iter().all(|&v| v > 0.0));
    // Complementarity for rows outside the support: sums of nonnegative
    // entries against a positive vector are automatically nonnegative.
    debug_assert!((0..d.n()).filter(|v| !s.contains(*v)).all(|i| {
        idx.iter()
            .enumerate()
            .map(|(slot, &j)| d.entry(i, j) as f64 * spectral.perron[slot])
            .sum::<f64>()
            >= 0.0
    }));

    Ok(ParetoCertificate {
        lambda: spectral.radius,
        support: s,
        xi: spectral.perron,
        x,
        residual: spectral.residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{distance_matrix, make_family};

    fn dist(name: &str, n: usize) -> DistanceMatrix {
        distance_matrix(&make_family(name, n, None).unwrap())
    }

    fn assert_close(values: &[f64], expected: &[f64]) {
        assert_eq!(values.len(), expected.len(), "{values:?} vs {expected:?}");
        for (v, e) in values.iter().zip(expected) {
            assert!((v - e).abs() < 1e-9, "{values:?} vs {expected:?}");
        }
    }

    #[test]
    fn complete_graph_spectrum_is_integer_range() {
        for n in 1..=8 {
            let spec = pareto_spectrum(&dist("K", n)).unwrap();
            let expected: Vec<f64> = (0..n).map(|k| k as f64).collect();
            assert_close(spec.values(), &expected);
            assert_eq!(spec.count_subsets(), (1u64 << n) - 1);
        }
    }

    #[test]
    fn star4_spectrum_matches_hand_enumeration() {
        // All 15 subsets of D(S4) give exactly these six values.
        let spec = pareto_spectrum(&dist("S", 4)).unwrap();
        let expected = [
            0.0,
            1.0,
            2.0,
            1.0 + 3f64.sqrt(),
            4.0,
            2.0 + 7f64.sqrt(),
        ];
        assert_close(spec.values(), &expected);
    }

    #[test]
    fn singleton_host() {
        let spec = pareto_spectrum(&dist("P", 1)).unwrap();
        assert_close(spec.values(), &[0.0]);
        assert_eq!(spec.count_subsets(), 1);
    }

    #[test]
    fn witnesses_realize_their_values() {
        let d = dist("S+", 5);
        let host = SymMatrix::from_distance(&d);
        let spec = pareto_spectrum(&d).unwrap();
        assert!((spec.values()[0]).abs() < 1e-12);
        assert_eq!(spec.witnesses()[0], VertexSubset(1));
        for (value, witness) in spec.values().iter().zip(spec.witnesses()) {
            let sub = principal_submatrix(&host, *witness).unwrap();
            let radius = spectral_radius(&sub).unwrap().radius;
            assert!((radius - value).abs() <= 1e-9);
        }
    }

    #[test]
    fn budget_enforced() {
        let d = dist("P", 6);
        assert!(matches!(
            pareto_spectrum_with_budget(&d, 5),
            Err(Error::BudgetExceeded { required: 6, budget: 5 })
        ));
    }

    #[test]
    fn mu_rho_indexing_and_range_errors() {
        let spec = pareto_spectrum(&dist("K", 4)).unwrap();
        assert_eq!(spec.mu(1).unwrap(), 0.0);
        assert_eq!(spec.rho(1).unwrap(), 3.0);
        assert_eq!(spec.rho(4).unwrap(), 0.0);
        match spec.mu(5) {
            Err(Error::OutOfRange { k: 5, available: 4 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(spec.mu(0).is_err());
    }

    #[test]
    fn mu4_is_one_plus_sqrt3_for_non_complete() {
        for (name, n) in [("P", 4), ("C", 5), ("S", 6), ("S+", 4), ("KB", 3)] {
            let g = if name == "KB" {
                make_family("KB", n, Some(2)).unwrap()
            } else {
                make_family(name, n, None).unwrap()
            };
            let d = distance_matrix(&g);
            let m4 = mu(&d, 4).unwrap();
            assert!((m4 - (1.0 + 3f64.sqrt())).abs() < 1e-9, "{}", g.name());
        }
    }

    #[test]
    fn rho2_deletion_examples() {
        let w6 = make_family("W", 6, None).unwrap();
        let (r, v) = rho2_by_deletion(&w6).unwrap();
        assert!((r - 6.0).abs() < 1e-9);
        assert_eq!(v, Some(0));

        let s5 = make_family("S", 5, None).unwrap();
        let (r, v) = rho2_by_deletion(&s5).unwrap();
        assert!((r - 6.0).abs() < 1e-9);
        assert_eq!(v, Some(0));

        let k2 = make_family("K", 2, None).unwrap();
        let (r, v) = rho2_by_deletion(&k2).unwrap();
        assert_eq!(r, 0.0);
        assert_eq!(v, None);
    }

    #[test]
    fn rho2_deletion_agrees_with_enumeration_on_families() {
        for (name, n) in [("P", 5), ("C", 6), ("S", 7), ("S+", 6), ("W", 6), ("K-e", 5)] {
            let g = make_family(name, n, None).unwrap();
            let d = distance_matrix(&g);
            let (by_deletion, _) = rho2_by_deletion(&g).unwrap();
            let by_enum = rho(&d, 2).unwrap();
            assert!((by_deletion - by_enum).abs() < 1e-9, "{}", g.name());
        }
    }

    #[test]
    fn verify_pareto_examples() {
        let k2 = dist("K", 2);
        let inv = 1.0 / 2f64.sqrt();
        assert!(verify_pareto(&k2, 1.0, &[inv, inv]).unwrap());

        let p3 = dist("P", 3);
        assert!(verify_pareto(&p3, 0.0, &[1.0, 0.0, 0.0]).unwrap());

        // The full Perron pair of P3 itself realizes rho1 = 1 + sqrt(3).
        let m = SymMatrix::from_distance(&p3);
        let perron = spectral_radius(&m).unwrap();
        assert!(verify_pareto(&p3, 1.0 + 3f64.sqrt(), &perron.perron).unwrap());
        // A wrong eigenvalue for the same vector fails.
        assert!(!verify_pareto(&p3, 2.0, &perron.perron).unwrap());

        assert!(verify_pareto(&p3, 0.0, &[-1.0, 0.0, 1.0]).is_err());
        assert!(verify_pareto(&p3, 0.0, &[0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn certificates_verify() {
        let d = dist("S", 4);
        // Leaves-only subset: 2(J - I) has constant row sums 4.
        let leaves = VertexSubset::from_indices(&[1, 2, 3]);
        let cert = certificate_for(&d, leaves).unwrap();
        assert!((cert.lambda - 4.0).abs() < 1e-9);
        let uniform = 1.0 / 3f64.sqrt();
        for &v in &cert.xi {
            assert!((v - uniform).abs() < 1e-9);
        }
        assert!(cert.residual <= CERT_TOL);
        assert!(verify_pareto(&d, cert.lambda, &cert.x).unwrap());

        let single = certificate_for(&d, VertexSubset(0b0100)).unwrap();
        assert_eq!(single.lambda, 0.0);
        assert_eq!(single.xi, vec![1.0]);
    }

    #[test]
    fn all_certificates_verify_on_small_hosts() {
        for (name, n) in [("P", 4), ("C", 5), ("S+", 5), ("K", 4)] {
            let d = dist(name, n);
            for mask in 1u64..(1 << n) {
                let cert = certificate_for(&d, VertexSubset(mask)).unwrap();
                assert!(
                    verify_pareto(&d, cert.lambda, &cert.x).unwrap(),
                    "{name}{n} mask {mask:b}"
                );
                assert!((rayleigh(&SymMatrix::from_distance(&d), &cert.x).unwrap()
                    - cert.lambda)
                    .abs()
                    <= CERT_TOL * 10.0);
            }
        }
    }

    #[test]
    fn subset_monotonicity_strict() {
        let d = dist("C", 6);
        let host = SymMatrix::from_distance(&d);
        let radius = |mask: u64| {
            spectral_radius(&principal_submatrix(&host, VertexSubset(mask)).unwrap())
                .unwrap()
                .radius
        };
        for small in 1u64..(1 << 6) {
            for big in (small + 1)..(1 << 6) {
                if small & big == small && small != big {
                    assert!(radius(small) < radius(big) - 1e-12);
                }
            }
        }
    }

    #[test]
    fn star_spectrum_sizes() {
        for n in 3..=9 {
            let d = dist("S", n);
            assert_eq!(spectrum_size(&d).unwrap(), 2 * (n - 1), "S{n}");
        }
    }
}
