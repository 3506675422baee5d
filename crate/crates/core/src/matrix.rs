//! Integer symmetric matrices with a parallel floating view, and vertex
//! subsets for principal-submatrix selection.

use crate::error::{Error, Result};
use crate::graph::DistanceMatrix;

/// Symmetric matrix with exact integer entries.
///
/// Entries are kept as integers (row sums and dominance tests are exact);
/// the floating copy is built once at construction for the eigensolvers.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    ints: Vec<i64>,
    floats: Vec<f64>,
}

impl SymMatrix {
    pub fn from_ints(n: usize, entries: Vec<i64>) -> Result<SymMatrix> {
        if entries.len() != n * n {
            return Err(Error::InvalidParameter(format!(
                "expected {}x{} entries, got {}",
                n,
                n,
                entries.len()
            )));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::InvalidParameter(format!(
                        "matrix not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        let floats = entries.iter().map(|&x| x as f64).collect();
        Ok(SymMatrix {
            n,
            ints: entries,
            floats,
        })
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<SymMatrix> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::InvalidParameter("ragged rows".into()));
            }
            entries.extend_from_slice(row);
        }
        SymMatrix::from_ints(n, entries)
    }

    pub fn from_distance(d: &DistanceMatrix) -> SymMatrix {
        SymMatrix::from_ints(d.n(), d.entries().to_vec()).expect("distance matrices are symmetric")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.ints[i * self.n + j]
    }

    pub fn fentry(&self, i: usize, j: usize) -> f64 {
        self.floats[i * self.n + j]
    }

    pub fn frow(&self, i: usize) -> &[f64] {
        &self.floats[i * self.n..(i + 1) * self.n]
    }

    pub fn ints(&self) -> &[i64] {
        &self.ints
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.ints[i * self.n..(i + 1) * self.n].iter().sum()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.n).map(|i| self.row_sum(i)).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.ints.iter().all(|&x| x >= 0)
    }

    /// y = M x on the floating view.
    pub fn mul_vec(&self, x: &[f64], y: &mut [f64]) {
        for i in 0..self.n {
            let row = self.frow(i);
            let mut acc = 0.0;
            for j in 0..self.n {
                acc += row[j] * x[j];
            }
            y[i] = acc;
        }
    }
}

/// Nonempty set of row/column indices, as a bitmask over 0..n-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSubset(pub u64);

impl VertexSubset {
    pub fn from_indices(indices: &[usize]) -> VertexSubset {
        let mut mask = 0u64;
        for &i in indices {
            mask |= 1 << i;
        }
        VertexSubset(mask)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 >> v & 1 != 0
    }

    pub fn indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut rest = self.0;
        while rest != 0 {
            out.push(rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
        out
    }
}

impl std::fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Order-preserving principal submatrix on the selected indices.
pub fn principal_submatrix(m: &SymMatrix, s: VertexSubset) -> Result<SymMatrix> {
    if s.is_empty() {
        return Err(Error::InvalidParameter("empty index subset".into()));
    }
    let idx = s.indices();
    if *idx.last().unwrap() >= m.n() {
        return Err(Error::InvalidParameter(format!(
            "subset {s} out of range for order {}",
            m.n()
        )));
    }
    let k = idx.len();
    let mut entries = Vec::with_capacity(k * k);
    for &i in &idx {
        for &j in &idx {
            entries.push(m.entry(i, j));
        }
    }
    SymMatrix::from_ints(k, entries)
}
