//! Even-connections relative to a product of edges, and the colon graph whose
//! edge ideal is `(I(G)^[s+1] : e_1 ⋯ e_s)`.
//!
//! An even-connection from `u` to `v` is a walk `p_0 = u, …, p_{2r+1} = v`
//! (`r ≥ 1`) along edges of `G` whose pairs `{p_{2k+1}, p_{2k+2}}` are taken
//! from the prescribed edges, each edge used no more often than it occurs in
//! the product.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{EvenConnectionError, GraphError};
use crate::graph::{bit, matching_number, members, Graph, Matching};
use crate::ideal::{Ideal, Monomial};

/// Largest number of factors an even-connection query may carry.
pub const MAX_FACTORS: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessPath {
    /// `p_0, …, p_{2r+1}`.
    pub vertices: Vec<usize>,
    /// For each `k < r`, the index `i` with `{p_{2k+1}, p_{2k+2}} = e_i`.
    pub e_assignment: Vec<usize>,
}

impl WitnessPath {
    /// Number of prescribed edges the walk consumes.
    pub fn r(&self) -> usize {
        self.e_assignment.len()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct State {
    vertex: usize,
    used: u32,
    /// True after a `G`-edge step, i.e. at an odd position where the next step
    /// must follow one of the prescribed edges.
    odd: bool,
}

fn check_factors(g: &Graph, edges: &[(usize, usize)]) -> Result<Vec<(usize, usize)>, EvenConnectionError> {
    if edges.len() > MAX_FACTORS {
        return Err(EvenConnectionError::TooManyEdges(edges.len()));
    }
    edges
        .iter()
        .map(|&(a, b)| {
            let (u, v) = (a.min(b), a.max(b));
            if g.has_edge(u, v) {
                Ok((u, v))
            } else {
                Err(GraphError::NotAnEdge(u, v).into())
            }
        })
        .collect()
}

/// Breadth-first search from `u` over (vertex, consumed factors, parity)
/// states. For every vertex `v` reachable as an endpoint, returns the shortest
/// even-connection, ties going to the lexicographically smallest vertex
/// sequence. Among equal factors only the lowest unused index is ever taken,
/// which enforces the multiplicity bound.
fn search_from(g: &Graph, factors: &[(usize, usize)], u: usize) -> BTreeMap<usize, WitnessPath> {
    let start = State { vertex: u, used: 0, odd: false };
    let mut parent: HashMap<State, Option<(State, Option<usize>)>> = HashMap::new();
    parent.insert(start, None);
    let mut queue = VecDeque::from([start]);
    let mut found: BTreeMap<usize, State> = BTreeMap::new();

    while let Some(state) = queue.pop_front() {
        let mut moves: Vec<(usize, State, Option<usize>)> = Vec::new();
        if state.odd {
            for (i, &(a, b)) in factors.iter().enumerate() {
                if state.used & (1 << i) != 0 || (a != state.vertex && b != state.vertex) {
                    continue;
                }
                let duplicate_unused =
                    factors[..i].iter().enumerate().any(|(k, &f)| f == (a, b) && state.used & (1 << k) == 0);
                if duplicate_unused {
                    continue;
                }
                let next = if a == state.vertex { b } else { a };
                moves.push((next, State { vertex: next, used: state.used | 1 << i, odd: false }, Some(i)));
            }
            moves.sort_by_key(|m| m.0);
        } else {
            for w in members(g.neighbors(state.vertex)) {
                moves.push((w, State { vertex: w, used: state.used, odd: true }, None));
            }
        }
        for (_, next, factor) in moves {
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next, Some((state, factor)));
            if next.odd && next.used != 0 {
                found.entry(next.vertex).or_insert(next);
            }
            queue.push_back(next);
        }
    }

    found
        .into_iter()
        .map(|(v, end)| {
            let mut vertices = vec![end.vertex];
            let mut e_assignment = Vec::new();
            let mut cur = end;
            while let Some(Some((prev, factor))) = parent.get(&cur) {
                vertices.push(prev.vertex);
                if let Some(i) = factor {
                    e_assignment.push(*i);
                }
                cur = *prev;
            }
            vertices.reverse();
            e_assignment.reverse();
            (v, WitnessPath { vertices, e_assignment })
        })
        .collect()
}

/// Shortest even-connection between `u` and `v` with respect to the product
/// of `edges` (a multiset; `u == v` is allowed).
pub fn even_connection_witness(
    g: &Graph,
    edges: &[(usize, usize)],
    u: usize,
    v: usize,
) -> Result<Option<WitnessPath>, EvenConnectionError> {
    let factors = check_factors(g, edges)?;
    for w in [u, v] {
        if w >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: w, n: g.n() }.into());
        }
    }
    Ok(search_from(g, &factors, u).remove(&v))
}

/// The graph `H` on `V(G) \ supp(m)` with `I(H) = (I(G)^[s+1] : m)`, where `m`
/// is an `s`-matching. Vertex labels are those of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColonGraph {
    n: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    /// Even-connections for the edges of `H` that are not edges of `G`.
    pub witnesses: BTreeMap<(usize, usize), WitnessPath>,
}

impl ColonGraph {
    /// `H` as a graph on the original `n` labels, with `supp(m)` isolated.
    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n, &self.edges).expect("colon-graph edges lie in V(G)")
    }

    /// `H` relabeled onto `0..|V(H)|` in increasing label order.
    pub fn compact_graph(&self) -> Graph {
        let keep = self.vertices.iter().fold(0, |acc, &v| acc | bit(v));
        self.to_graph().induced_subgraph(keep).0
    }

    /// `I(H)` in the ambient ring of `G`.
    pub fn edge_ideal(&self) -> Ideal {
        let gens = self.edges.iter().map(|&(a, b)| Monomial::from_vars([a, b])).collect();
        Ideal::new(self.n, gens).expect("colon-graph edges lie in V(G)")
    }
}

impl Serialize for ColonGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(a, b)| [a, b]).collect();
        let witnesses: BTreeMap<String, &Vec<usize>> =
            self.witnesses.iter().map(|(&(a, b), w)| (format!("{a}-{b}"), &w.vertices)).collect();
        let mut st = serializer.serialize_struct("ColonGraph", 3)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("edges", &edges)?;
        st.serialize_field("witnesses", &witnesses)?;
        st.end()
    }
}

/// A matching of `g` whose edges multiply to `u`, if `u` is such a product.
pub fn matching_for(g: &Graph, u: Monomial) -> Option<Matching> {
    if u.span() > g.n() || !u.degree().is_multiple_of(2) {
        return None;
    }
    let keep = u.support() as u32;
    let (sub, labels) = g.induced_subgraph(keep);
    let (size, m) = matching_number(&sub);
    if 2 * size != u.degree() {
        return None;
    }
    let mut edges: Vec<(usize, usize)> = m.edges().iter().map(|&(a, b)| (labels[a], labels[b])).collect();
    edges.sort_unstable();
    Some(Matching::from_sorted_unchecked(edges))
}

/// Builds the colon graph for a matching `m` of size `1 ≤ s ≤ match(G) - 1`.
pub fn colon_graph(g: &Graph, m: &Matching) -> Result<ColonGraph, EvenConnectionError> {
    let m = Matching::new(g, m.edges())?;
    let s = m.len();
    let (nu, _) = matching_number(g);
    if s == 0 || s + 1 > nu {
        return Err(EvenConnectionError::PowerOutOfRange { s, max: nu.saturating_sub(1), matching_number: nu });
    }
    Ok(colon_graph_unchecked(g, &m))
}

/// Colon-graph construction without the range check on `s`. Pairs outside
/// `supp(m)` become adjacent when adjacent in `G` or even-connected.
pub(crate) fn colon_graph_unchecked(g: &Graph, m: &Matching) -> ColonGraph {
    let support = m.support();
    let vertices: Vec<usize> = (0..g.n()).filter(|&v| support & bit(v) == 0).collect();
    let mut edges = Vec::new();
    let mut witnesses = BTreeMap::new();
    for (k, &a) in vertices.iter().enumerate() {
        let mut reach = search_from(g, m.edges(), a);
        for &b in &vertices[k + 1..] {
            if g.has_edge(a, b) {
                edges.push((a, b));
            } else if let Some(w) = reach.remove(&b) {
                edges.push((a, b));
                witnesses.insert((a, b), w);
            }
        }
    }
    ColonGraph { n: g.n(), vertices, edges, witnesses }
}
