//! Simple graphs on at most 32 labeled vertices.
//!
//! Vertex subsets are `u32` bitmasks throughout, so neighbor sets, deletions
//! and the memo keys of the matching searches are single machine words.

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::GraphError;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 32;

/// Default vertex limit for the Hamiltonian-path dynamic program.
pub const DEFAULT_HAMILTONIAN_CAP: usize = 20;

/// A set of vertices, bit `v` standing for vertex `v`.
pub type VertexSet = u32;

/// Iterates the members of a vertex set in increasing order.
pub fn members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn bit(v: usize) -> VertexSet {
    1u32 << v
}

/// Vertices with index strictly greater than `v`.
#[inline]
pub(crate) fn above(v: usize) -> VertexSet {
    !(((1u64 << (v + 1)) - 1) as u32)
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Parses the `u-v,u-v,...` edge-list format. The vertex count is one
    /// more than the largest index mentioned.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let edges = parse_pairs(text)?;
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Self::from_edges(n, &edges)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in members(self.adj[u] & above(u)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v] == 0).fold(0, |acc, v| acc | bit(v))
    }

    /// `G \ U`: same labels, every edge meeting `removed` dropped.
    pub fn without_vertices(&self, removed: VertexSet) -> Graph {
        let adj = (0..self.n).map(|v| if removed & bit(v) != 0 { 0 } else { self.adj[v] & !removed }).collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced on `keep`, relabeled `0..|keep|` in increasing order.
    /// The second component maps new labels to old ones.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = members(keep & self.vertex_set()).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (new, &old) in labels.iter().enumerate() {
            index[old] = new;
        }
        let adj =
            labels.iter().map(|&old| members(self.adj[old] & keep).fold(0, |acc, w| acc | bit(index[w]))).collect();
        (Graph { n: labels.len(), adj }, labels)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen: VertexSet = 0;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen & bit(start) != 0 {
                continue;
            }
            let mut comp = bit(start);
            let mut frontier = bit(start);
            while frontier != 0 {
                let next = members(frontier).fold(0, |acc, v| acc | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Renders the edge list as `u-v,u-v,...`.
    pub fn edge_list_string(&self) -> String {
        format_pairs(&self.edges())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [{}])", self.n, self.edge_list_string())
    }
}

/// Parses `u-v,u-v,...` into unordered pairs normalized to `u < v`.
pub fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>, GraphError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            let item = item.trim();
            let (a, b) = item.split_once('-').ok_or_else(|| GraphError::EdgeListSyntax(item.to_string()))?;
            let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| GraphError::EdgeListSyntax(item.to_string()));
            let (u, v) = (parse(a)?, parse(b)?);
            Ok((u.min(v), u.max(v)))
        })
        .collect()
}

pub fn format_pairs(pairs: &[(usize, usize)]) -> String {
    pairs.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(",")
}

/// A set of pairwise disjoint edges, kept sorted with `u < v` in each pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Builds a matching of `g`, rejecting non-edges and overlapping pairs.
    pub fn new(g: &Graph, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen: VertexSet = 0;
        let mut out = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let (u, v) = (a.min(b), a.max(b));
            if !g.has_edge(u, v) {
                return Err(GraphError::NotAnEdge(u, v));
            }
            if seen & (bit(u) | bit(v)) != 0 {
                return Err(GraphError::NotAMatching);
            }
            seen |= bit(u) | bit(v);
            out.push((u, v));
        }
        out.sort_unstable();
        Ok(Self { edges: out })
    }

    pub(crate) fn from_sorted_unchecked(edges: Vec<(usize, usize)>) -> Self {
        Self { edges }
    }

    pub fn empty() -> Self {
        Self { edges: Vec::new() }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices covered by the matching.
    pub fn support(&self) -> VertexSet {
        self.edges.iter().fold(0, |acc, &(u, v)| acc | bit(u) | bit(v))
    }

    /// True when no edge of `g` outside the matching lies inside the union of
    /// two of its edges.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            for &(c, d) in &self.edges[k + 1..] {
                let other = bit(c) | bit(d);
                if (g.neighbors(a) | g.neighbors(b)) & other != 0 {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_pairs(&self.edges))
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[usize; 2]> = self.edges.iter().map(|&(u, v)| [u, v]).collect();
        pairs.serialize(serializer)
    }
}

/// Maximum matching by exhaustive branching over the lowest live vertex,
/// memoized on the set of still-available vertices.
pub fn matching_number(g: &Graph) -> (usize, Matching) {
    fn best(g: &Graph, avail: VertexSet, memo: &mut HashMap<VertexSet, usize>) -> usize {
        let live = members(avail).find(|&v| g.neighbors(v) & avail != 0);
        let Some(v) = live else { return 0 };
        if let Some(&hit) = memo.get(&avail) {
            return hit;
        }
        let rest = avail & !bit(v);
        let bound = members(avail).filter(|&w| g.neighbors(w) & avail != 0).count() / 2;
        let mut top = 0;
        for w in members(g.neighbors(v) & rest) {
            top = top.max(1 + best(g, rest & !bit(w), memo));
            if top == bound {
                break;
            }
        }
        if top < bound {
            top = top.max(best(g, rest, memo));
        }
        memo.insert(avail, top);
        top
    }

    let mut memo = HashMap::new();
    let size = best(g, g.vertex_set(), &mut memo);

    let mut witness = Vec::with_capacity(size);
    let mut avail = g.vertex_set();
    let mut remaining = size;
    while remaining > 0 {
        let v = members(avail)
            .find(|&v| g.neighbors(v) & avail != 0)
            .expect("positive matching value implies a live vertex");
        let rest = avail & !bit(v);
        let pick = members(g.neighbors(v) & rest).find(|&w| 1 + best(g, rest & !bit(w), &mut memo) == remaining);
        match pick {
            Some(w) => {
                witness.push((v.min(w), v.max(w)));
                avail = rest & !bit(w);
                remaining -= 1;
            }
            None => avail = rest,
        }
    }
    witness.sort_unstable();
    (size, Matching::from_sorted_unchecked(witness))
}

/// Maximum induced matching: choosing edge `vw` retires the closed
/// neighborhoods of both endpoints.
pub fn induced_matching_number(g: &Graph) -> (usize, Matching) {
    fn closed(g: &Graph, v: usize) -> VertexSet {
        g.neighbors(v) | bit(v)
    }

    fn best(g: &Graph, avail: VertexSet, memo: &mut HashMap<VertexSet, usize>) -> usize {
        let live = members(avail).find(|&v| g.neighbors(v) & avail != 0);
        let Some(v) = live else { return 0 };
        if let Some(&hit) = memo.get(&avail) {
            return hit;
        }
        let mut top = best(g, avail & !bit(v), memo);
        for w in members(g.neighbors(v) & avail) {
            top = top.max(1 + best(g, avail & !(closed(g, v) | closed(g, w)), memo));
        }
        memo.insert(avail, top);
        top
    }

    let mut memo = HashMap::new();
    let size = best(g, g.vertex_set(), &mut memo);

    let mut witness = Vec::with_capacity(size);
    let mut avail = g.vertex_set();
    let mut remaining = size;
    while remaining > 0 {
        let v = members(avail)
            .find(|&v| g.neighbors(v) & avail != 0)
            .expect("positive matching value implies a live vertex");
        let pick = members(g.neighbors(v) & avail)
            .find(|&w| 1 + best(g, avail & !(closed(g, v) | closed(g, w)), &mut memo) == remaining);
        match pick {
            Some(w) => {
                witness.push((v.min(w), v.max(w)));
                avail &= !(closed(g, v) | closed(g, w));
                remaining -= 1;
            }
            None => avail &= !bit(v),
        }
    }
    witness.sort_unstable();
    (size, Matching::from_sorted_unchecked(witness))
}

/// All matchings with exactly `s` edges, ordered lexicographically by their
/// sorted edge lists.
pub fn enumerate_matchings(g: &Graph, s: usize) -> Vec<Matching> {
    fn extend(
        edges: &[(usize, usize)],
        from: usize,
        used: VertexSet,
        s: usize,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Matching>,
    ) {
        if current.len() == s {
            out.push(Matching::from_sorted_unchecked(current.clone()));
            return;
        }
        let needed = s - current.len();
        for k in from..edges.len() {
            if edges.len() - k < needed {
                break;
            }
            let (u, v) = edges[k];
            let mask = bit(u) | bit(v);
            if used & mask == 0 {
                current.push((u, v));
                extend(edges, k + 1, used | mask, s, current, out);
                current.pop();
            }
        }
    }

    let edges = g.edges();
    let mut out = Vec::new();
    extend(&edges, 0, 0, s, &mut Vec::with_capacity(s), &mut out);
    out
}

/// Sides of a bipartite graph. Isolated vertices sit in `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl Bipartition {
    pub fn smaller_side(&self) -> usize {
        self.x.len().min(self.y.len())
    }
}

/// Two-colors each component from its smallest vertex (color 0 goes to `x`).
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let mut color = vec![u8::MAX; g.n()];
    for start in 0..g.n() {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in members(g.neighbors(v)) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    stack.push(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    let (x, y): (Vec<usize>, Vec<usize>) = (0..g.n()).partition(|&v| color[v] == 0);
    Some(Bipartition { x, y })
}

/// Maximal independent sets (Bron-Kerbosch with pivoting on the complement).
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    fn expand(
        comp: &[VertexSet],
        chosen: VertexSet,
        mut candidates: VertexSet,
        mut excluded: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if candidates == 0 && excluded == 0 {
            out.push(chosen);
            return;
        }
        let pivot = members(candidates | excluded)
            .max_by_key(|&u| (comp[u] & candidates).count_ones())
            .expect("nonempty candidate or excluded set");
        for v in members(candidates & !comp[pivot]) {
            expand(comp, chosen | bit(v), candidates & comp[v], excluded & comp[v], out);
            candidates &= !bit(v);
            excluded |= bit(v);
        }
    }

    let all = g.vertex_set();
    let comp: Vec<VertexSet> = (0..g.n()).map(|v| all & !g.neighbors(v) & !bit(v)).collect();
    let mut out = Vec::new();
    expand(&comp, 0, all, 0, &mut out);
    out.sort_unstable();
    out
}

/// Even order, no isolated vertices, and every minimal vertex cover (the
/// complement of a maximal independent set) has exactly `n/2` vertices.
pub fn is_very_well_covered(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 || !n.is_multiple_of(2) || g.isolated_vertices() != 0 {
        return false;
    }
    maximal_independent_sets(g).into_iter().all(|set| n - set.count_ones() as usize == n / 2)
}

pub fn has_hamiltonian_path(g: &Graph) -> Result<bool, GraphError> {
    has_hamiltonian_path_with_cap(g, DEFAULT_HAMILTONIAN_CAP)
}

/// Subset dynamic program: `ends[mask]` holds every endpoint of a path that
/// visits exactly `mask`.
pub fn has_hamiltonian_path_with_cap(g: &Graph, cap: usize) -> Result<bool, GraphError> {
    let n = g.n();
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if n > cap {
        return Err(GraphError::HamiltonianCap { n, cap });
    }
    let full = g.vertex_set() as usize;
    let mut ends = vec![0u32; full + 1];
    for v in 0..n {
        ends[1 << v] = bit(v);
    }
    for mask in 1..=full {
        let here = ends[mask];
        if here == 0 {
            continue;
        }
        for v in members(here) {
            for w in members(g.neighbors(v) & !(mask as u32)) {
                ends[mask | (1 << w)] |= bit(w);
            }
        }
    }
    Ok(ends[full] != 0)
}

/// Triangles `{x, y, z}` in which at least two vertices have degree exactly
/// two in `g`. Each is reported as `(x, y, z)` with `x < y` the two smallest
/// degree-two vertices and `z` the remaining vertex; the list is sorted.
pub fn pendant_triangles(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for b in members(g.neighbors(a)).filter(|&b| b > a) {
            for c in members(g.neighbors(a) & g.neighbors(b)).filter(|&c| c > b) {
                let low: Vec<usize> = [a, b, c].into_iter().filter(|&v| g.degree(v) == 2).collect();
                if low.len() >= 2 {
                    let (x, y) = (low[0], low[1]);
                    let z = [a, b, c].into_iter().find(|&v| v != x && v != y).unwrap();
                    out.push((x, y, z));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn two_k2() -> Graph {
        Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_bad_vertices() {
        let mut g = Graph::new(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(GraphError::Loop(1)));
        assert!(matches!(g.add_edge(0, 3), Err(GraphError::VertexOutOfRange { .. })));
        assert_eq!(Graph::new(33), Err(GraphError::TooManyVertices(33)));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::parse_edge_list("0-1, 2-1,3-4").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_list_string(), "0-1,1-2,3-4");
        assert!(Graph::parse_edge_list("0-").is_err());
        assert!(Graph::parse_edge_list("1-1").is_err());
    }

    #[test]
    fn matching_numbers() {
        let (size, m) = matching_number(&path(4));
        assert_eq!(size, 2);
        assert_eq!(m.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(matching_number(&cycle(3)).0, 1);
        assert_eq!(matching_number(&cycle(5)).0, 2);
        assert_eq!(matching_number(&Graph::new(0).unwrap()).0, 0);
    }

    #[test]
    fn induced_matching_numbers() {
        assert_eq!(induced_matching_number(&path(4)).0, 1);
        let (size, m) = induced_matching_number(&path(5));
        assert_eq!(size, 2);
        assert_eq!(m.edges(), &[(0, 1), (3, 4)]);
        assert_eq!(induced_matching_number(&two_k2()).0, 2);
    }

    #[test]
    fn matchings_enumerated_in_order() {
        assert_eq!(enumerate_matchings(&cycle(5), 2).len(), 5);
        let p4 = enumerate_matchings(&path(4), 2);
        assert_eq!(p4.len(), 1);
        assert_eq!(p4[0].edges(), &[(0, 1), (2, 3)]);
        assert_eq!(enumerate_matchings(&cycle(5), 0), vec![Matching::empty()]);
        assert!(enumerate_matchings(&cycle(3), 2).is_empty());
    }

    #[test]
    fn bipartitions() {
        let b = bipartition(&path(4)).unwrap();
        assert_eq!((b.x, b.y), (vec![0, 2], vec![1, 3]));
        assert!(bipartition(&cycle(3)).is_none());
        let b = bipartition(&two_k2()).unwrap();
        assert_eq!((b.x, b.y), (vec![0, 2], vec![1, 3]));
        let lone = Graph::new(2).unwrap();
        assert_eq!(bipartition(&lone).unwrap().x, vec![0, 1]);
    }

    #[test]
    fn very_well_covered() {
        assert!(is_very_well_covered(&path(2)));
        assert!(!is_very_well_covered(&cycle(3)));
        assert!(is_very_well_covered(&cycle(4)));
        assert!(!is_very_well_covered(&Graph::new(2).unwrap()));
    }

    #[test]
    fn hamiltonian_paths() {
        assert!(has_hamiltonian_path(&path(4)).unwrap());
        assert!(!has_hamiltonian_path(&star(3)).unwrap());
        assert!(has_hamiltonian_path(&cycle(5)).unwrap());
        assert!(has_hamiltonian_path(&Graph::new(1).unwrap()).unwrap());
        assert_eq!(has_hamiltonian_path_with_cap(&path(6), 5), Err(GraphError::HamiltonianCap { n: 6, cap: 5 }));
    }

    #[test]
    fn pendant_triangle_detection() {
        assert_eq!(pendant_triangles(&cycle(3)), vec![(0, 1, 2)]);
        assert!(pendant_triangles(&cycle(5)).is_empty());
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(pendant_triangles(&g), vec![(0, 1, 2)]);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(pendant_triangles(&k4).is_empty());
    }

    #[test]
    fn components_and_deletion() {
        let g = two_k2();
        assert_eq!(g.components(), vec![0b0011, 0b1100]);
        let h = g.without_vertices(0b0011);
        assert_eq!(h.edges(), vec![(2, 3)]);
        let (sub, labels) = g.induced_subgraph(0b1100);
        assert_eq!(labels, vec![2, 3]);
        assert_eq!(sub.edges(), vec![(0, 1)]);
    }
}
