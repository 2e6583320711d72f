//! Brute-force reference implementations, deliberately sharing no code with
//! the library beyond the graph and ideal containers.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use sqfr_core::{parse_graph6_str, Graph};

pub fn corpus(name: &str) -> Vec<(String, Graph)> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name);
    fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .lines()
        .filter(|l| !l.is_empty())
        .map(|l| (l.to_string(), parse_graph6_str(l).unwrap()))
        .collect()
}

/// Every graph on at most seven vertices, one per isomorphism class.
pub fn all_graphs_up_to_7() -> Vec<(String, Graph)> {
    corpus("all_n1_7.g6")
}

/// Rank of an integer matrix modulo `p` by plain Gaussian elimination.
pub fn rank_mod(mut rows: Vec<Vec<i64>>, p: i64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c].rem_euclid(p) != 0) else { continue };
        rows.swap(rank, pivot);
        let inv = inverse(rows[rank][c].rem_euclid(p), p);
        for r in 0..rows.len() {
            if r != rank {
                let f = rows[r][c].rem_euclid(p) * inv % p;
                if f != 0 {
                    let pivot_row = rows[rank].clone();
                    for (x, y) in rows[r].iter_mut().zip(pivot_row) {
                        *x = (*x - f * y).rem_euclid(p);
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

fn inverse(a: i64, p: i64) -> i64 {
    let (mut base, mut exp, mut acc) = (a, p - 2, 1i64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Reduced homology ranks of a complex given by its faces (bitmasks),
/// indexed from dimension -1.
pub fn reduced_homology(faces: &[u64], p: i64) -> Vec<usize> {
    if faces.is_empty() {
        return vec![0];
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap();
    // by_size[k] = faces with k vertices, i.e. dimension k - 1
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 2];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    let boundary_rank = |k: usize| -> usize {
        // map from faces with k vertices to faces with k - 1 vertices
        if k == 0 || k > top || by_size[k].is_empty() || by_size[k - 1].is_empty() {
            return 0;
        }
        let rows = by_size[k]
            .iter()
            .map(|&f| {
                by_size[k - 1]
                    .iter()
                    .map(|&g| {
                        if g & f != g {
                            return 0;
                        }
                        let dropped = (f & !g).trailing_zeros();
                        let below = (f & ((1u64 << dropped) - 1)).count_ones();
                        if below.is_multiple_of(2) {
                            1
                        } else {
                            -1
                        }
                    })
                    .collect()
            })
            .collect();
        rank_mod(rows, p)
    };
    (0..=top).map(|k| by_size[k].len() - boundary_rank(k) - boundary_rank(k + 1)).collect()
}

/// Is `m` (a support mask) in the ideal generated by `gens`?
pub fn member(gens: &[u64], m: u64) -> bool {
    gens.iter().any(|g| m & g == *g)
}

/// Graded Betti numbers `β_{i,j}` of the ideal over GF(p), from the upper
/// Koszul complexes `K^σ = { F ⊆ σ : x^{σ∖F} ∈ I }`.
pub fn betti(gens: &[u64], nvars: usize, p: i64) -> BTreeMap<(usize, usize), usize> {
    let mut table = BTreeMap::new();
    for sigma in 0u64..(1 << nvars) {
        if !member(gens, sigma) {
            continue;
        }
        let faces: Vec<u64> = subsets(sigma).filter(|&f| member(gens, sigma & !f)).collect();
        for (k, &h) in reduced_homology(&faces, p).iter().enumerate() {
            // index k is dimension k - 1, contributing to β_{k, |σ|}
            if h > 0 {
                *table.entry((k, sigma.count_ones() as usize)).or_insert(0) += h;
            }
        }
    }
    table
}

pub fn regularity(gens: &[u64], nvars: usize, p: i64) -> usize {
    betti(gens, nvars, p).keys().map(|&(i, j)| j - i).max().expect("nonzero ideal")
}

pub fn subsets(set: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == set { None } else { Some((cur.wrapping_sub(set)) & set) };
        Some(cur)
    })
}

pub fn minimalize(mut gens: Vec<u64>) -> Vec<u64> {
    gens.sort_by_key(|g| (g.count_ones(), *g));
    gens.dedup();
    let mut out: Vec<u64> = Vec::new();
    for g in gens {
        if !member(&out, g) {
            out.push(g);
        }
    }
    out
}

pub fn edge_masks(g: &Graph) -> Vec<u64> {
    g.edges().into_iter().map(|(u, v)| (1u64 << u) | (1 << v)).collect()
}

/// Minimal generators of `I(G)^[s]` from all `s`-subsets of pairwise
/// disjoint edges.
pub fn squarefree_power(g: &Graph, s: usize) -> Vec<u64> {
    fn go(edges: &[u64], s: usize, start: usize, used: u64, out: &mut Vec<u64>) {
        if s == 0 {
            out.push(used);
            return;
        }
        for k in start..edges.len() {
            if edges[k] & used == 0 {
                go(edges, s - 1, k + 1, used | edges[k], out);
            }
        }
    }
    let mut out = Vec::new();
    go(&edge_masks(g), s, 0, 0, &mut out);
    minimalize(out)
}

/// `(I : u)` for a squarefree ideal.
pub fn colon(gens: &[u64], u: u64) -> Vec<u64> {
    minimalize(gens.iter().map(|&g| g & !u).collect())
}

pub fn matching_number(g: &Graph) -> usize {
    (1..).take_while(|&s| !squarefree_power(g, s).is_empty()).last().unwrap_or(0)
}

pub fn supports(ideal: &sqfr_core::Ideal) -> Vec<u64> {
    let mut v: Vec<u64> = ideal.gens().iter().map(|m| m.support()).collect();
    v.sort_by_key(|g| (g.count_ones(), *g));
    v
}
