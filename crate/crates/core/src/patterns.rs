//! Induced-subgraph detection for a fixed set of small patterns, by
//! subset enumeration plus permutation matching, and the analogous
//! search for small distance-matrix patterns.

use crate::graph::{coalesce, make_family, DistanceMatrix, Graph};

/// The fixed patterns the classifiers ask about. All have at most 6
/// vertices, so permutation matching stays cheap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternId {
    K4,
    K4MinusE,
    P4,
    C4,
    S4,
    S4Plus,
    C5,
    K5,
    C6,
    P5,
    C3StarC3,
}

impl PatternId {
    pub const ALL: [PatternId; 11] = [
        PatternId::K4,
        PatternId::K4MinusE,
        PatternId::P4,
        PatternId::C4,
        PatternId::S4,
        PatternId::S4Plus,
        PatternId::C5,
        PatternId::K5,
        PatternId::C6,
        PatternId::P5,
        PatternId::C3StarC3,
    ];

    pub fn order(self) -> usize {
        match self {
            PatternId::K4 | PatternId::K4MinusE | PatternId::P4 | PatternId::C4
            | PatternId::S4 | PatternId::S4Plus => 4,
            PatternId::C5 | PatternId::K5 | PatternId::P5 | PatternId::C3StarC3 => 5,
            PatternId::C6 => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternId::K4 => "K4",
            PatternId::K4MinusE => "K4-e",
            PatternId::P4 => "P4",
            PatternId::C4 => "C4",
            PatternId::S4 => "S4",
            PatternId::S4Plus => "S4+",
            PatternId::C5 => "C5",
            PatternId::K5 => "K5",
            PatternId::C6 => "C6",
            PatternId::P5 => "P5",
            PatternId::C3StarC3 => "C3*C3",
        }
    }

    /// The pattern as a concrete graph with canonical numbering.
    pub fn graph(self) -> Graph {
        let g = match self {
            PatternId::K4 => make_family("K", 4, None),
            PatternId::K4MinusE => make_family("K-e", 4, None),
            PatternId::P4 => make_family("P", 4, None),
            PatternId::C4 => make_family("C", 4, None),
            PatternId::S4 => make_family("S", 4, None),
            PatternId::S4Plus => make_family("S+", 4, None),
            PatternId::C5 => make_family("C", 5, None),
            PatternId::K5 => make_family("K", 5, None),
            PatternId::C6 => make_family("C", 6, None),
            PatternId::P5 => make_family("P", 5, None),
            PatternId::C3StarC3 => {
                let c3 = make_family("C", 3, None).expect("triangle");
                coalesce(&c3, 0, &c3, 0).map(|g| g.with_label("C3*C3"))
            }
        };
        g.expect("fixed patterns are valid graphs")
    }
}

impl std::str::FromStr for PatternId {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PatternId::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| crate::error::Error::InvalidParameter(format!("unknown pattern {s}")))
    }
}

fn sorted_degrees(adj: &[u64]) -> Vec<u32> {
    let mut d: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    d.sort_unstable();
    d
}

/// Induced adjacency of `g` restricted to `subset`, relabeled 0..k-1.
fn induced_adj(g: &Graph, subset: &[usize]) -> Vec<u64> {
    let k = subset.len();
    let mut adj = vec![0u64; k];
    for a in 0..k {
        for b in (a + 1)..k {
            if g.has_edge(subset[a], subset[b]) {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
    }
    adj
}

fn isomorphic_small(a: &[u64], b: &[u64]) -> bool {
    let k = a.len();
    if sorted_degrees(a) != sorted_degrees(b) {
        return false;
    }
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let mut ok = true;
        'outer: for i in 0..k {
            for j in (i + 1)..k {
                if (a[i] >> j & 1) != (b[perm[i]] >> perm[j] & 1) {
                    ok = false;
                    break 'outer;
                }
            }
        }
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// First vertex subset (in lexicographic order) inducing the pattern,
/// or `None` when the pattern does not occur.
pub fn find_induced(g: &Graph, p: PatternId) -> Option<Vec<usize>> {
    let k = p.order();
    if k > g.n() {
        return None;
    }
    let pattern = p.graph();
    let pattern_adj: Vec<u64> = (0..k).map(|v| pattern.neighbors(v)).collect();

    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let adj = induced_adj(g, &subset);
        if isomorphic_small(&adj, &pattern_adj) {
            return Some(subset);
        }
        if !next_combination(&mut subset, g.n()) {
            return None;
        }
    }
}

/// True when some vertex subset of `g` induces the pattern.
pub fn has_induced(g: &Graph, p: PatternId) -> bool {
    find_induced(g, p).is_some()
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - (k - i) {
            c[i] += 1;
            for j in (i + 1)..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// First vertex subset (lexicographic) whose pairwise host distances
/// match the given k x k pattern up to a simultaneous permutation, or
/// `None`. The pattern is row-major with zero diagonal.
pub fn find_distance_pattern(d: &DistanceMatrix, pattern: &[i64], k: usize) -> Option<Vec<usize>> {
    debug_assert_eq!(pattern.len(), k * k);
    if k > d.n() || k == 0 {
        return None;
    }
    let mut pattern_rows: Vec<Vec<i64>> = (0..k)
        .map(|i| {
            let mut row: Vec<i64> = (0..k).filter(|&j| j != i).map(|j| pattern[i * k + j]).collect();
            row.sort_unstable();
            row
        })
        .collect();
    pattern_rows.sort();

    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        // Cheap screen: the multiset of sorted distance rows must agree.
        let mut rows: Vec<Vec<i64>> = subset
            .iter()
            .map(|&u| {
                let mut row: Vec<i64> = subset
                    .iter()
                    .filter(|&&v| v != u)
                    .map(|&v| d.entry(u, v))
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        rows.sort();
        if rows == pattern_rows && distance_match(d, &subset, pattern, k) {
            return Some(subset);
        }
        if !next_combination(&mut subset, d.n()) {
            return None;
        }
    }
}

fn distance_match(d: &DistanceMatrix, subset: &[usize], pattern: &[i64], k: usize) -> bool {
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let mut ok = true;
        'outer: for i in 0..k {
            for j in (i + 1)..k {
                if d.entry(subset[i], subset[j]) != pattern[perm[i] * k + perm[j]] {
                    ok = false;
                    break 'outer;
                }
            }
        }
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

/// First pair of vertices at the exact distance, or `None`.
pub fn find_distance_pair(d: &DistanceMatrix, distance: i64) -> Option<Vec<usize>> {
    for i in 0..d.n() {
        for j in (i + 1)..d.n() {
            if d.entry(i, j) == distance {
                return Some(vec![i, j]);
            }
        }
    }
    None
}
