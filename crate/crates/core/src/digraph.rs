//! Finite digraphs on the vertex set `0..n`, with loops allowed.
//!
//! Arcs are stored twice, as one out-bitset and one in-bitset per vertex, so
//! arc membership and neighbourhood scans are single word operations.

use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Hard limit imposed by the one-word-per-row representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Digraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut g = Self::with_capacity(n)?;
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::ArcOutOfRange { u, v, n });
            }
            g.add_arc(u, v);
        }
        Ok(g)
    }

    /// `n` isolated vertices without loops.
    pub fn edgeless(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    /// The vertex-less digraph. Only used internally where sum formulas range
    /// over empty restrictions; public constructors never produce it.
    pub(crate) fn empty() -> Self {
        Digraph {
            n: 0,
            out: Vec::new(),
            inn: Vec::new(),
        }
    }

    fn with_capacity(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Digraph {
            n,
            out: vec![0; n],
            inn: vec![0; n],
        })
    }

    pub(crate) fn from_out_rows(rows: Vec<u64>) -> Self {
        let n = rows.len();
        let mut inn = vec![0u64; n];
        for (u, &row) in rows.iter().enumerate() {
            for v in VertexSet::from_bits(row) {
                inn[v] |= 1 << u;
            }
        }
        Digraph { n, out: rows, inn }
    }

    fn add_arc(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_arc(v, v)
    }

    /// Heads of arcs leaving `v` (includes `v` itself if it carries a loop).
    pub fn out_set(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.out[v])
    }

    /// Tails of arcs entering `v` (includes `v` itself if it carries a loop).
    pub fn in_set(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.inn[v])
    }

    /// Open neighbourhood: vertices other than `v` adjacent to `v` in either direction.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.out[v] | self.inn[v]).without(v)
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out_set(v).without(v)
    }

    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.in_set(v).without(v)
    }

    pub fn loops(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.has_loop(v)).collect()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.out_set(u).iter().map(move |v| (u, v)))
            .collect()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Number of proper (non-loop) arcs at `v`, in plus out.
    pub fn proper_degree(&self, v: usize) -> usize {
        self.out_neighbors(v).len() + self.in_neighbors(v).len()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|v| self.has_loop(v))
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.n).all(|v| !self.has_loop(v))
    }

    pub fn is_symmetric(&self) -> bool {
        self.out == self.inn
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|v| self.out_neighbors(v).is_disjoint(self.in_neighbors(v)))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.n).all(|u| {
            self.out_set(u)
                .iter()
                .all(|w| self.out_set(w).is_subset(self.out_set(u)))
        })
    }

    /// No closed walk of positive length, loops included.
    pub fn is_acyclic(&self) -> bool {
        let hull = self.transitive_hull();
        hull.loops().is_empty()
    }

    pub fn is_poset(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }

    pub fn loops_removed(&self) -> Digraph {
        let out = (0..self.n).map(|v| self.out[v] & !(1 << v)).collect();
        Digraph::from_out_rows(out)
    }

    pub fn reflexive_closure(&self) -> Digraph {
        let out = (0..self.n).map(|v| self.out[v] | 1 << v).collect();
        Digraph::from_out_rows(out)
    }

    /// Smallest transitive relation containing the arcs, computed by squaring
    /// the adjacency relation until it stops growing.
    pub fn transitive_hull(&self) -> Digraph {
        let mut rows = self.out.clone();
        loop {
            let squared: Vec<u64> = rows
                .iter()
                .map(|&row| {
                    VertexSet::from_bits(row)
                        .iter()
                        .fold(row, |acc, w| acc | rows[w])
                })
                .collect();
            if squared == rows {
                return Digraph::from_out_rows(rows);
            }
            rows = squared;
        }
    }

    /// Subgraph induced on `x`, relabelled by increasing original index.
    pub fn induced(&self, x: VertexSet) -> Result<Digraph> {
        if x.is_empty() {
            return Err(Error::EmptyInducedSet);
        }
        self.check_subset(x)?;
        Ok(self.induced_unchecked(x))
    }

    /// Like [`induced`](Self::induced) but yields the internal empty digraph for `x = {}`.
    pub(crate) fn induced_unchecked(&self, x: VertexSet) -> Digraph {
        let keep: Vec<usize> = x.iter().collect();
        let rows = keep
            .iter()
            .map(|&u| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_arc(u, v))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Digraph::from_out_rows(rows)
    }

    pub(crate) fn check_subset(&self, x: VertexSet) -> Result<()> {
        match x.last() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange { v, n: self.n }),
            _ => Ok(()),
        }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn direct_sum(&self, other: &Digraph) -> Result<Digraph> {
        let n = self.n + other.n;
        let mut g = Self::with_capacity(n)?;
        for (u, v) in self.arcs() {
            g.add_arc(u, v);
        }
        for (u, v) in other.arcs() {
            g.add_arc(self.n + u, self.n + v);
        }
        Ok(g)
    }

    /// Ordinal sum of posets: `other` is placed entirely above `self`.
    pub fn ordinal_sum(&self, other: &Digraph) -> Result<Digraph> {
        if !self.is_poset() || !other.is_poset() {
            return Err(Error::NotAPoset);
        }
        let mut g = self.direct_sum(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_arc(u, self.n + v);
            }
        }
        Ok(g)
    }

    /// Adds the reverse of every arc.
    pub fn symmetric_closure(&self) -> Digraph {
        let out = (0..self.n).map(|v| self.out[v] | self.inn[v]).collect();
        Digraph::from_out_rows(out)
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        debug_assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.arcs() {
            rows[perm[u]] |= 1 << perm[v];
        }
        Digraph::from_out_rows(rows)
    }

    /// Vertices reachable from `from` by walks of length at least one.
    pub fn reachable_from(&self, from: VertexSet) -> VertexSet {
        let mut seen = VertexSet::empty();
        let mut frontier: VertexSet = from
            .iter()
            .fold(VertexSet::empty(), |acc, v| acc.union(self.out_set(v)));
        while !frontier.is_subset(seen) {
            let fresh = frontier.difference(seen);
            seen = seen.union(fresh);
            frontier = fresh
                .iter()
                .fold(VertexSet::empty(), |acc, v| acc.union(self.out_set(v)));
        }
        seen
    }

    /// Vertices from which `to` is reachable by walks of length at least one.
    pub fn reaching(&self, to: VertexSet) -> VertexSet {
        self.reversed().reachable_from(to)
    }

    pub fn reversed(&self) -> Digraph {
        Digraph {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Covering relation of the loop-removed transitive hull.
    pub fn covering_arcs(&self) -> Vec<(usize, usize)> {
        let strict = self.transitive_hull().loops_removed();
        strict
            .arcs()
            .into_iter()
            .filter(|&(u, v)| {
                !strict
                    .out_set(u)
                    .iter()
                    .any(|w| w != v && strict.has_arc(w, v))
            })
            .collect()
    }

    /// Graphviz rendering. With `hasse` set and a poset input, only covering
    /// arcs are drawn (bottom to top); otherwise every arc, loops included.
    pub fn to_dot(&self, hasse: bool) -> String {
        let mut s = String::from("digraph G {\n");
        if hasse && self.is_poset() {
            s.push_str("  rankdir=BT;\n  edge [arrowhead=none];\n");
            for v in 0..self.n {
                let _ = writeln!(s, "  {v};");
            }
            for (u, v) in self.covering_arcs() {
                let _ = writeln!(s, "  {u} -> {v};");
            }
        } else {
            for v in 0..self.n {
                let _ = writeln!(s, "  {v};");
            }
            for (u, v) in self.arcs() {
                let _ = writeln!(s, "  {u} -> {v};");
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("digraph serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Digraph> {
        Ok(serde_json::from_str(s)?)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({};", self.n)?;
        let arcs = self.arcs();
        if arcs.is_empty() {
            write!(f, " -")?;
        }
        for (i, (u, v)) in arcs.iter().enumerate() {
            let sep = if i == 0 { " " } else { "," };
            write!(f, "{sep}{u}{v}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct DigraphJson {
    n: usize,
    arcs: Vec<[usize; 2]>,
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DigraphJson {
            n: self.n,
            arcs: self.arcs().into_iter().map(|(u, v)| [u, v]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DigraphJson::deserialize(d)?;
        Digraph::new(raw.n, raw.arcs.into_iter().map(|[u, v]| (u, v)))
            .map_err(serde::de::Error::custom)
    }
}
