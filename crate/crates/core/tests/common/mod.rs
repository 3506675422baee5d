//! Test-support corpus machinery: isomorphism-free graph generation by
//! vertex augmentation with minimum-permutation canonical forms, and
//! loading of the committed graph6 corpus files.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use distpareto::graph::{is_tree, Graph};
use distpareto::graph6::{emit_graph6, read_stream, Graph6Record};

/// Known counts of connected graphs per order (1-indexed by order).
pub const CONNECTED_COUNTS: [usize; 8] = [0, 1, 1, 2, 6, 21, 112, 853];

/// Known counts of trees per order.
pub const TREE_COUNTS: [usize; 9] = [0, 1, 1, 1, 2, 3, 6, 11, 23];

/// Known counts of all graphs (connected or not) per order.
pub const ALL_GRAPH_COUNTS: [usize; 8] = [0, 1, 2, 4, 11, 34, 156, 1044];

/// Pair index for i < j in column-major upper-triangle order.
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(items, k - 1, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(&mut items, n, &mut out);
    out
}

/// Pair-index relabeling tables for every permutation of n vertices.
struct PairMaps {
    n: usize,
    maps: Vec<Vec<u8>>,
}

impl PairMaps {
    fn build(n: usize) -> PairMaps {
        let pairs = n * (n - 1) / 2;
        let maps = permutations(n)
            .into_iter()
            .map(|perm| {
                let mut map = vec![0u8; pairs];
                for j in 1..n {
                    for i in 0..j {
                        let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                        map[pair_index(i, j)] = pair_index(a, b) as u8;
                    }
                }
                map
            })
            .collect();
        PairMaps { n, maps }
    }

    /// Minimum edge bitmask over all vertex relabelings.
    fn canonical(&self, mask: u64) -> u64 {
        let pairs = self.n * (self.n - 1) / 2;
        let mut best = u64::MAX;
        for map in &self.maps {
            let mut out = 0u64;
            for p in 0..pairs {
                if mask >> p & 1 != 0 {
                    out |= 1 << map[p];
                }
            }
            if out < best {
                best = out;
            }
        }
        best
    }
}

pub fn mask_to_graph(n: usize, mask: u64) -> Option<Graph> {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_index(i, j) & 1 != 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).ok()
}

pub fn graph_to_mask(g: &Graph) -> u64 {
    let mut mask = 0u64;
    for (i, j) in g.edges() {
        mask |= 1 << pair_index(i.min(j), i.max(j));
    }
    mask
}

/// Canonical edge bitmasks of every unlabeled graph of order n
/// (connected or not), by vertex augmentation from order n-1.
pub fn all_graph_masks(n: usize) -> Vec<u64> {
    assert!((1..=8).contains(&n));
    if n == 1 {
        return vec![0];
    }
    let parents = all_graph_masks(n - 1);
    let maps = PairMaps::build(n);
    let mut seen = BTreeSet::new();
    for parent in parents {
        for nb in 0u64..(1 << (n - 1)) {
            let mut child = parent;
            for i in 0..(n - 1) {
                if nb >> i & 1 != 0 {
                    child |= 1 << pair_index(i, n - 1);
                }
            }
            seen.insert(maps.canonical(child));
        }
    }
    seen.into_iter().collect()
}

/// Every connected graph of order n, one per isomorphism class.
pub fn generate_connected(n: usize) -> Vec<Graph> {
    all_graph_masks(n)
        .into_iter()
        .filter_map(|mask| mask_to_graph(n, mask))
        .collect()
}

/// Every tree of order n, one per isomorphism class, by leaf attachment.
pub fn generate_trees(n: usize) -> Vec<Graph> {
    assert!((1..=8).contains(&n));
    if n == 1 {
        return vec![mask_to_graph(1, 0).expect("single vertex")];
    }
    let parents = generate_trees(n - 1);
    let maps = PairMaps::build(n);
    let mut seen = BTreeSet::new();
    for parent in &parents {
        let parent_mask = graph_to_mask(parent);
        for attach in 0..(n - 1) {
            let child = parent_mask | 1 << pair_index(attach, n - 1);
            seen.insert(maps.canonical(child));
        }
    }
    seen.into_iter()
        .map(|mask| {
            let g = mask_to_graph(n, mask).expect("leaf attachment keeps connectivity");
            debug_assert!(is_tree(&g));
            g
        })
        .collect()
}

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

pub fn connected_corpus_path(n: usize) -> PathBuf {
    data_dir().join(format!("connected_n{n}.g6"))
}

pub fn trees_corpus_path(n: usize) -> PathBuf {
    data_dir().join(format!("trees_n{n}.g6"))
}

/// Reads one committed corpus file into parsed records.
pub fn load_records(path: &PathBuf) -> Vec<Graph6Record> {
    let text = std::fs::read_to_string(path)
        .unwrap_or_else(|e| panic!("missing corpus file {}: {e}", path.display()));
    read_stream(text.as_bytes()).expect("corpus files parse cleanly")
}

/// The committed connected corpus for one order.
pub fn load_connected(n: usize) -> Vec<Graph6Record> {
    load_records(&connected_corpus_path(n))
}

/// All committed connected graphs with order in the given range.
pub fn load_connected_range(lo: usize, hi: usize) -> Vec<Graph6Record> {
    let mut text = String::new();
    for n in lo..=hi {
        text.push_str(
            &std::fs::read_to_string(connected_corpus_path(n)).expect("corpus file present"),
        );
    }
    read_stream(text.as_bytes()).expect("corpus files parse cleanly")
}

pub fn graphs_to_lines(graphs: &[Graph]) -> String {
    graphs
        .iter()
        .map(|g| emit_graph6(g).expect("corpus orders fit graph6") + "\n")
        .collect()
}

/// Canonical key of an arbitrary graph (for isomorphism-distinctness
/// checks over the committed corpus).
pub fn canonical_key(g: &Graph) -> u64 {
    PairMaps::build(g.n()).canonical(graph_to_mask(g))
}
