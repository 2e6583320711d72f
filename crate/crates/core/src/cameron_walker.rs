//! Structural recognition of Cameron-Walker graphs.
//!
//! A connected graph is Cameron-Walker when it is a star, a star triangle
//! (triangles glued at one common vertex), or a connected bipartite core
//! `X ∪ Y` in which every `X`-vertex carries at least one pendant edge and
//! `Y`-vertices may carry pendant triangles. The classifier works from that
//! structure alone; agreement with `match(G) = ind-match(G)` is checked by the
//! test suite rather than assumed here.

use serde::Serialize;

use crate::graph::{bit, members, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CwKind {
    NotCw,
    /// No edges at all; vacuously Cameron-Walker.
    Edgeless,
    Star,
    StarTriangle,
    BipartiteWithPendants,
    /// Two or more nontrivial components, each Cameron-Walker.
    DisconnectedCw,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentKind {
    Isolated,
    Star,
    StarTriangle,
    BipartiteWithPendants,
    NotCw,
}

/// The bipartite core of a connected Cameron-Walker graph with its decorations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteCore {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    /// `(support, leaf)` pairs.
    pub pendant_edges: Vec<(usize, usize)>,
    /// `(a, b, apex)` with `a`, `b` of degree two and `apex` in `y`.
    pub pendant_triangles: Vec<(usize, usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentClass {
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
    pub core: Option<BipartiteCore>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CwClassification {
    pub kind: CwKind,
    pub components: Vec<ComponentClass>,
}

impl CwClassification {
    pub fn is_cameron_walker(&self) -> bool {
        self.kind != CwKind::NotCw
    }

    /// The core when the graph has exactly one nontrivial component and it is
    /// of the bipartite-with-pendants type.
    pub fn bipartite_core(&self) -> Option<&BipartiteCore> {
        match self.kind {
            CwKind::BipartiteWithPendants => self
                .components
                .iter()
                .find(|c| c.kind == ComponentKind::BipartiteWithPendants)
                .and_then(|c| c.core.as_ref()),
            _ => None,
        }
    }
}

pub fn classify_cameron_walker(g: &Graph) -> CwClassification {
    let components: Vec<ComponentClass> = g.components().into_iter().map(|c| classify_component(g, c)).collect();
    let nontrivial: Vec<&ComponentClass> = components.iter().filter(|c| c.kind != ComponentKind::Isolated).collect();
    let kind = if nontrivial.iter().any(|c| c.kind == ComponentKind::NotCw) {
        CwKind::NotCw
    } else {
        match nontrivial.as_slice() {
            [] => CwKind::Edgeless,
            [only] => match only.kind {
                ComponentKind::Star => CwKind::Star,
                ComponentKind::StarTriangle => CwKind::StarTriangle,
                ComponentKind::BipartiteWithPendants => CwKind::BipartiteWithPendants,
                ComponentKind::Isolated | ComponentKind::NotCw => unreachable!(),
            },
            _ => CwKind::DisconnectedCw,
        }
    };
    CwClassification { kind, components }
}

fn classify_component(g: &Graph, comp: VertexSet) -> ComponentClass {
    let vertices: Vec<usize> = members(comp).collect();
    let (kind, core) = if vertices.len() == 1 {
        (ComponentKind::Isolated, None)
    } else if is_star(g, &vertices) {
        (ComponentKind::Star, None)
    } else if is_star_triangle(g, &vertices) {
        (ComponentKind::StarTriangle, None)
    } else if let Some(core) = bipartite_core(g, comp) {
        (ComponentKind::BipartiteWithPendants, Some(core))
    } else {
        (ComponentKind::NotCw, None)
    };
    ComponentClass { vertices, kind, core }
}

fn edges_within(g: &Graph, vertices: &[usize]) -> usize {
    vertices.iter().map(|&v| g.degree(v)).sum::<usize>() / 2
}

fn is_star(g: &Graph, vertices: &[usize]) -> bool {
    let k = vertices.len();
    edges_within(g, vertices) == k - 1 && vertices.iter().any(|&v| g.degree(v) == k - 1)
}

fn is_star_triangle(g: &Graph, vertices: &[usize]) -> bool {
    let k = vertices.len();
    if k < 3 || k.is_multiple_of(2) || edges_within(g, vertices) != 3 * (k - 1) / 2 {
        return false;
    }
    let Some(&center) = vertices.iter().find(|&&v| g.degree(v) == k - 1) else {
        return false;
    };
    vertices.iter().all(|&v| v == center || g.degree(v) == 2)
}

fn bipartite_core(g: &Graph, comp: VertexSet) -> Option<BipartiteCore> {
    // Pendant triangles: two adjacent degree-two vertices with a shared third
    // neighbor.
    let mut triangles = Vec::new();
    let mut triangle_pairs: VertexSet = 0;
    let mut apexes: VertexSet = 0;
    for a in members(comp).filter(|&a| g.degree(a) == 2) {
        for b in members(g.neighbors(a)).filter(|&b| b > a && g.degree(b) == 2) {
            let common = g.neighbors(a) & g.neighbors(b);
            if common != 0 {
                let apex = common.trailing_zeros() as usize;
                triangles.push((a, b, apex));
                triangle_pairs |= bit(a) | bit(b);
                apexes |= bit(apex);
            }
        }
    }

    let leaves: VertexSet = members(comp).filter(|&v| g.degree(v) == 1).fold(0, |acc, v| acc | bit(v));
    let supports: VertexSet = members(leaves).fold(0, |acc, v| acc | g.neighbors(v));
    let core = comp & !triangle_pairs & !leaves;

    if core == 0 || supports & !core != 0 || apexes & !core != 0 || apexes & supports != 0 {
        return None;
    }
    let y = core & !supports;
    if y == 0 {
        return None;
    }
    for v in members(core) {
        let side = if supports & bit(v) != 0 { supports } else { y };
        if g.neighbors(v) & core & side != 0 {
            return None;
        }
    }
    let (core_graph, _) = g.induced_subgraph(core);
    if !core_graph.is_connected() {
        return None;
    }

    let mut pendant_edges: Vec<(usize, usize)> =
        members(leaves).map(|leaf| (g.neighbors(leaf).trailing_zeros() as usize, leaf)).collect();
    pendant_edges.sort_unstable();
    Some(BipartiteCore {
        x: members(supports).collect(),
        y: members(y).collect(),
        pendant_edges,
        pendant_triangles: triangles,
    })
}
