//! Factorization of a homomorphism `xi: G → H` through the digraph of its
//! pre-image components: `xi = iota ∘ pi`, where `pi` sends a vertex to its
//! block and `iota` sends a block to the common image of its vertices.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::connectivity::gamma_partition;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::hom::{homs, is_homomorphism, HomIter, HomMode, VertexMap};
use crate::vertex_set::VertexSet;

/// Block labels of a partition of `0..n`: vertex `v` lies in block
/// `labels[v]`, and blocks are numbered in order of their minimal element.
pub type PartitionKey = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientDigraph {
    base: Digraph,
    target_n: usize,
    blocks: Vec<VertexSet>,
    block_of: Vec<usize>,
    iota: Vec<usize>,
    digraph: Digraph,
}

impl QuotientDigraph {
    pub fn base(&self) -> &Digraph {
        &self.base
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    /// The quotient digraph itself, blocks relabelled `0..k`.
    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    /// The canonical projection onto the blocks.
    pub fn pi(&self) -> VertexMap {
        VertexMap::new_unchecked(self.block_of.clone(), self.blocks.len())
    }

    /// Block-to-target map.
    pub fn iota(&self) -> VertexMap {
        VertexMap::new_unchecked(self.iota.clone(), self.target_n)
    }

    pub fn partition(&self) -> &PartitionKey {
        &self.block_of
    }

    /// Transitive hull of the quotient digraph.
    pub fn transitive(&self) -> Digraph {
        self.digraph.transitive_hull()
    }

    /// No walk in the quotient joins two blocks with the same `iota` image
    /// unless it is trivial. Decided exactly through the transitive hull.
    pub fn iota_walks_trivial(&self) -> bool {
        let hull = self.transitive();
        let k = self.blocks.len();
        (0..k).all(|a| {
            (0..k).filter(|&b| self.iota[a] == self.iota[b]).all(|b| {
                if a != b {
                    !hull.has_arc(a, b)
                } else {
                    !hull
                        .out_neighbors(a)
                        .iter()
                        .any(|c| hull.has_arc(c, a))
                }
            })
        })
    }

    /// No odd-length walk in the loop-removed quotient joins two blocks with
    /// the same `iota` image.
    pub fn iota_odd_walks_absent(&self) -> bool {
        let star = self.digraph.loops_removed();
        let k = self.blocks.len();
        (0..k).all(|a| {
            let odd = odd_reachable(&star, a);
            !odd.iter().any(|b| self.iota[a] == self.iota[b])
        })
    }
}

/// Vertices reachable from `start` by a walk of odd length.
fn odd_reachable(g: &Digraph, start: usize) -> VertexSet {
    let mut reach = [VertexSet::singleton(start), VertexSet::empty()];
    let mut frontier = reach;
    while !(frontier[0].is_empty() && frontier[1].is_empty()) {
        let mut next = [VertexSet::empty(), VertexSet::empty()];
        for parity in 0..2 {
            for v in frontier[parity] {
                next[1 - parity] = next[1 - parity].union(g.out_set(v));
            }
        }
        for parity in 0..2 {
            next[parity] = next[parity].difference(reach[parity]);
            reach[parity] = reach[parity].union(next[parity]);
        }
        frontier = next;
    }
    reach[1]
}

#[derive(Serialize)]
struct QuotientJson<'a> {
    digraph: &'a Digraph,
    blocks: &'a [VertexSet],
    iota: &'a [usize],
}

impl Serialize for QuotientDigraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuotientJson {
            digraph: &self.digraph,
            blocks: &self.blocks,
            iota: &self.iota,
        }
        .serialize(s)
    }
}

pub fn quotient_of(g: &Digraph, h: &Digraph, xi: &VertexMap) -> Result<QuotientDigraph> {
    if !is_homomorphism(g, h, xi, HomMode::All)? {
        return Err(Error::NotAHomomorphism);
    }
    Ok(build(g, h.n(), xi))
}

/// Caller guarantees `xi` is a homomorphism into a digraph on `target_n` vertices.
pub(crate) fn build(g: &Digraph, target_n: usize, xi: &VertexMap) -> QuotientDigraph {
    let blocks = gamma_partition(g, xi).expect("map domain matches digraph");
    let mut block_of = vec![0; g.n()];
    for (i, b) in blocks.iter().enumerate() {
        for v in *b {
            block_of[v] = i;
        }
    }
    let iota = blocks.iter().map(|b| xi.get(b.first().unwrap())).collect();
    let mut rows = vec![0u64; blocks.len()];
    for (u, v) in g.arcs() {
        rows[block_of[u]] |= 1 << block_of[v];
    }
    QuotientDigraph {
        base: g.clone(),
        target_n,
        blocks,
        block_of,
        iota,
        digraph: Digraph::from_out_rows(rows),
    }
}

/// Partition key of the pre-image components of `xi`.
pub fn partition_key(g: &Digraph, xi: &VertexMap) -> PartitionKey {
    let blocks = gamma_partition(g, xi).expect("map domain matches digraph");
    let mut key = vec![0; g.n()];
    for (i, b) in blocks.iter().enumerate() {
        for v in *b {
            key[v] = i;
        }
    }
    key
}

/// All homomorphisms `G → H'` whose quotient equals `q`, in lexicographic order.
/// Equal partitions imply equal quotient digraphs, so only partitions are compared.
pub fn theta_class(g: &Digraph, h2: &Digraph, q: &QuotientDigraph) -> Vec<VertexMap> {
    homs(g, h2, HomMode::All)
        .into_iter()
        .filter(|z| &partition_key(g, z) == q.partition())
        .collect()
}

/// Sizes of all non-empty classes `{zeta in H(G, H') : G(zeta) has partition p}`.
pub fn theta_class_sizes(g: &Digraph, h2: &Digraph) -> BTreeMap<PartitionKey, u64> {
    let mut sizes = BTreeMap::new();
    for z in HomIter::from_parts(g, h2, HomMode::All) {
        *sizes.entry(partition_key(g, &z)).or_insert(0) += 1;
    }
    sizes
}

/// Transitive hull of the quotient digraph.
pub fn transitive_quotient(q: &QuotientDigraph) -> Digraph {
    q.transitive()
}
