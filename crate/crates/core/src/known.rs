//! Small named digraphs and rearrangement specs used throughout tests, the
//! CLI data files, and the acceptance harness.

use crate::digraph::Digraph;
use crate::rearrange::RearrangementSpec;
use crate::vertex_set::VertexSet;

/// One looped vertex.
pub fn a1() -> Digraph {
    chain(1)
}

/// The two-element chain `0 < 1` as a poset.
pub fn c2() -> Digraph {
    chain(2)
}

/// Reflexive antichain on two vertices.
pub fn a2r() -> Digraph {
    antichain(2)
}

/// The `k`-element chain `0 < 1 < .. < k-1`, reflexive.
pub fn chain(k: usize) -> Digraph {
    let arcs = (0..k).flat_map(|u| (u..k).map(move |v| (u, v)));
    Digraph::new(k, arcs).expect("chain size is positive")
}

/// `k` looped vertices and no other arcs.
pub fn antichain(k: usize) -> Digraph {
    Digraph::new(k, (0..k).map(|v| (v, v))).expect("antichain size is positive")
}

/// Five-element poset on `(m, x, y, w, z) = (0, 1, 2, 3, 4)` generated by
/// `m < x < w`, `y < w`, `y < z`.
pub fn pentagon_r() -> Digraph {
    Digraph::new(5, [(0, 1), (1, 3), (0, 3), (2, 3), (2, 4)])
        .expect("arcs are in range")
        .reflexive_closure()
        .transitive_hull()
}

/// Rearranging `x` onto `y` with `M = {m}` in [`pentagon_r`].
pub fn pentagon_spec() -> RearrangementSpec {
    RearrangementSpec {
        r: pentagon_r(),
        x: VertexSet::singleton(1),
        y: VertexSet::singleton(2),
        m: VertexSet::singleton(0),
        beta: vec![(1, 2)],
    }
}

/// Transitive hull of the rearranged pentagon: covers `m < y`, `y < w`,
/// `y < z`, `x < w`.
pub fn pentagon_t() -> Digraph {
    Digraph::new(5, [(0, 2), (2, 3), (2, 4), (1, 3)])
        .expect("arcs are in range")
        .reflexive_closure()
        .transitive_hull()
}

/// `R = D(3; 00,11,22,01)` with `X = {1}`, `M = {0}`, `Y = {2}`, `beta(1) = 2`.
pub fn three_vertex_spec() -> RearrangementSpec {
    RearrangementSpec {
        r: Digraph::new(3, [(0, 0), (1, 1), (2, 2), (0, 1)]).expect("arcs are in range"),
        x: VertexSet::singleton(1),
        y: VertexSet::singleton(2),
        m: VertexSet::singleton(0),
        beta: vec![(1, 2)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rearrange::{build_s, poset_rearrange, validate_spec};

    #[test]
    fn named_posets() {
        for g in [a1(), c2(), a2r(), chain(4), pentagon_r(), pentagon_t()] {
            assert!(g.is_poset(), "{g:?}");
        }
        assert_eq!(pentagon_r().covering_arcs(), vec![(0, 1), (1, 3), (2, 3), (2, 4)]);
    }

    #[test]
    fn pentagon_spec_builds_expected_s_and_t() {
        let spec = pentagon_spec();
        assert!(validate_spec(&spec, true).is_empty());
        let res = build_s(&spec).unwrap();
        assert_eq!(res.a_d, vec![(0, 2)]);
        assert!(res.a_u.is_empty());
        let mut expected_r = pentagon_r().arcs();
        expected_r.retain(|&a| a != (0, 1));
        assert_eq!(res.a_r, expected_r);
        let (_, t) = poset_rearrange(&spec).unwrap();
        assert_eq!(t, pentagon_t());
    }
}
