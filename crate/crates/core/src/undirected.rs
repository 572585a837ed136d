//! Undirected graphs as symmetric digraphs.
//!
//! An edge `{v, w}` is stored as the arc pair `vw`, `wv`; a loop edge `{v}` as
//! the single arc `vv`. Homomorphism sets, quotients and connectivity are
//! computed on the symmetric digraph directly.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// An undirected edge with `0 <= .0 <= .1`; `.0 == .1` is a loop.
pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UndirectedGraph(Digraph);

impl UndirectedGraph {
    /// Builds the symmetric digraph of an edge list.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let g = Digraph::new(n, edges)?;
        Ok(UndirectedGraph(g.symmetric_closure()))
    }

    pub fn as_digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn into_digraph(self) -> Digraph {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    /// Edges as normalized pairs in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        self.0.arcs().into_iter().filter(|&(u, v)| u <= v).collect()
    }
}

/// Symmetric view of an arbitrary digraph: every arc gets its reverse.
pub fn symmetric_closure_view(g: &Digraph) -> UndirectedGraph {
    UndirectedGraph(g.symmetric_closure())
}

/// The undirected graph represented by a symmetric digraph.
pub fn underlying(g: &Digraph) -> Result<UndirectedGraph> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(UndirectedGraph(g.clone()))
}

#[derive(Serialize, Deserialize)]
struct EdgeListJson {
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// Parses `{"n": k, "edges": [[v, w], [u], ...]}`; one-element edges are loops.
pub fn from_edge_list_json(s: &str) -> Result<UndirectedGraph> {
    let raw: EdgeListJson = serde_json::from_str(s)?;
    let mut edges = Vec::with_capacity(raw.edges.len());
    for e in raw.edges {
        match e.as_slice() {
            [v] => edges.push((*v, *v)),
            [v, w] => edges.push((*v, *w)),
            _ => return Err(Error::Parse(format!("edge {e:?} must have one or two endpoints"))),
        }
    }
    UndirectedGraph::from_edges(raw.n, edges)
}
