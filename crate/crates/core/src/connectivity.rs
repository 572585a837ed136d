//! Connectivity inside vertex subsets, pre-image components of maps, and
//! order-theoretic convexity.
//!
//! Adjacency ignores arc direction and loops: `v` and `w` are adjacent iff
//! `v != w` and `vw` or `wv` is an arc.

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::hom::{is_homomorphism, HomMode, VertexMap};
use crate::vertex_set::VertexSet;

/// Partition of a subset `X` into the classes of "connected in `X`".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentMap {
    subset: VertexSet,
    /// Sorted by minimal element.
    blocks: Vec<VertexSet>,
}

impl ComponentMap {
    pub fn new(g: &Digraph, x: VertexSet) -> Result<Self> {
        g.check_subset(x)?;
        let mut blocks = Vec::new();
        let mut rest = x;
        while let Some(v) = rest.first() {
            let block = component_within(g, x, v);
            rest = rest.difference(block);
            blocks.push(block);
        }
        Ok(ComponentMap { subset: x, blocks })
    }

    pub fn subset(&self) -> VertexSet {
        self.subset
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block_of(&self, v: usize) -> Option<VertexSet> {
        self.blocks.iter().copied().find(|b| b.contains(v))
    }
}

/// BFS from `v` through `x`; caller guarantees `v` is in `x`.
fn component_within(g: &Digraph, x: VertexSet, v: usize) -> VertexSet {
    let mut seen = VertexSet::singleton(v);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let reach = frontier
            .iter()
            .fold(VertexSet::empty(), |acc, u| acc.union(g.neighbors(u)));
        frontier = reach.intersection(x).difference(seen);
        seen = seen.union(frontier);
    }
    seen
}

/// `gamma_X(v)`: the vertices of `x` joined to `v` by a line running in `x`.
pub fn gamma(g: &Digraph, x: VertexSet, v: usize) -> Result<VertexSet> {
    g.check_subset(x)?;
    if !x.contains(v) {
        return Err(Error::VertexNotInSubset { v });
    }
    Ok(component_within(g, x, v))
}

/// `Gamma_xi(v)`: the component of `v` inside the pre-image of `xi(v)`.
pub fn gamma_component(g: &Digraph, xi: &VertexMap, v: usize) -> Result<VertexSet> {
    xi.check_domain(g.n())?;
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    let fibre = xi.preimage(xi.get(v));
    Ok(component_within(g, fibre, v))
}

/// All pre-image components of `xi`, sorted by minimal element.
pub fn gamma_partition(g: &Digraph, xi: &VertexMap) -> Result<Vec<VertexSet>> {
    xi.check_domain(g.n())?;
    let mut blocks = Vec::new();
    let mut rest = g.vertices();
    while let Some(v) = rest.first() {
        let block = component_within(g, xi.preimage(xi.get(v)), v);
        rest = rest.difference(block);
        blocks.push(block);
    }
    Ok(blocks)
}

/// True iff every walk that starts and ends in `x` stays in `x`.
///
/// Equivalently, no vertex outside `x` is both reachable from `x` and able to
/// reach `x`.
pub fn is_convex(g: &Digraph, x: VertexSet) -> bool {
    let x = x.intersection(g.vertices());
    let outside = g.vertices().difference(x);
    let from_x = g.reachable_from(x).intersection(outside);
    let to_x = g.reaching(x).intersection(outside);
    from_x.is_disjoint(to_x)
}

/// Self-test: `Gamma_xi(v) ⊆ Gamma_{sigma∘xi}(v)` for every `v`, with equality
/// everywhere when `sigma` is strict on the image of `xi`.
pub fn gamma_monotone_check(
    g: &Digraph,
    h: &Digraph,
    h2: &Digraph,
    xi: &VertexMap,
    sigma: &VertexMap,
) -> Result<bool> {
    if !is_homomorphism(g, h, xi, HomMode::All)? || !is_homomorphism(h, h2, sigma, HomMode::All)? {
        return Err(Error::NotAHomomorphism);
    }
    let composed = sigma.after(xi);
    let image = xi.image_set();
    let strict_on_image = image.iter().all(|a| {
        image
            .iter()
            .all(|b| a == b || !h.has_arc(a, b) || sigma.get(a) != sigma.get(b))
    });
    for v in 0..g.n() {
        let inner = gamma_component(g, xi, v)?;
        let outer = gamma_component(g, &composed, v)?;
        if !inner.is_subset(outer) || (strict_on_image && inner != outer) {
            return Ok(false);
        }
    }
    Ok(true)
}
