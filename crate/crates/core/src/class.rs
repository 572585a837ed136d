use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    /// Every finite digraph.
    Digraphs,
    /// Digraphs whose loop-removed part is acyclic.
    Ta,
    Posets,
    /// Irreflexive, antisymmetric, transitive digraphs.
    StrictPosets,
    /// Symmetric digraphs.
    Undirected,
    /// Symmetric digraphs whose loop-removed part is bipartite.
    OddCycleFree,
}

impl ClassKind {
    pub const ALL: [ClassKind; 6] = [
        ClassKind::Digraphs,
        ClassKind::Ta,
        ClassKind::Posets,
        ClassKind::StrictPosets,
        ClassKind::Undirected,
        ClassKind::OddCycleFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassKind::Digraphs => "digraphs",
            ClassKind::Ta => "ta",
            ClassKind::Posets => "posets",
            ClassKind::StrictPosets => "strict-posets",
            ClassKind::Undirected => "undirected",
            ClassKind::OddCycleFree => "odd-cycle-free",
        }
    }

    pub fn contains(self, g: &Digraph) -> bool {
        match self {
            ClassKind::Digraphs => true,
            ClassKind::Ta => is_ta(g),
            ClassKind::Posets => g.is_poset(),
            ClassKind::StrictPosets => {
                g.is_irreflexive() && g.is_antisymmetric() && g.is_transitive()
            }
            ClassKind::Undirected => g.is_symmetric(),
            ClassKind::OddCycleFree => g.is_symmetric() && is_bipartite(&g.loops_removed()),
        }
    }

    /// Edge patterns for symmetric kinds are generated edge-wise.
    pub fn is_symmetric_kind(self) -> bool {
        matches!(self, ClassKind::Undirected | ClassKind::OddCycleFree)
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ClassKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown class kind `{s}`")))
    }
}

/// A class kind together with size bounds; denotes a finite set of
/// isomorphism types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassSpec {
    pub kind: ClassKind,
    pub max_vertices: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_arcs: Option<usize>,
}

impl ClassSpec {
    pub fn new(kind: ClassKind, max_vertices: usize) -> Self {
        ClassSpec {
            kind,
            max_vertices,
            max_arcs: None,
        }
    }

    pub fn with_max_arcs(mut self, max_arcs: usize) -> Self {
        self.max_arcs = Some(max_arcs);
        self
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <= {}", self.kind, self.max_vertices)?;
        if let Some(a) = self.max_arcs {
            write!(f, " (arcs <= {a})")?;
        }
        Ok(())
    }
}

/// Class predicate plus size bounds. Arc bounds count arcs of the digraph
/// representation, so an undirected edge between distinct vertices counts twice.
pub fn is_member(g: &Digraph, c: &ClassSpec) -> bool {
    g.n() <= c.max_vertices
        && c.max_arcs.map_or(true, |a| g.arc_count() <= a)
        && c.kind.contains(g)
}

pub fn is_ta(g: &Digraph) -> bool {
    g.loops_removed().is_acyclic()
}

/// Two-colourability of the underlying undirected graph (loops must be removed
/// by the caller; a loop is an odd cycle here).
pub fn is_bipartite(g: &Digraph) -> bool {
    let n = g.n();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let c = colour[v].unwrap();
            let adjacent = g.out_set(v).union(g.in_set(v));
            for w in adjacent {
                match colour[w] {
                    None => {
                        colour[w] = Some(!c);
                        stack.push(w);
                    }
                    Some(cw) if cw == c => return false,
                    _ => {}
                }
            }
        }
    }
    true
}
