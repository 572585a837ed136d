//! Digraph operators, connectivity laws, and quotient invariants.

use std::collections::{BTreeMap, BTreeSet};

use gammahom::catalog::{generate, is_isomorphic};
use gammahom::class::{ClassKind, ClassSpec};
use gammahom::connectivity::{gamma, gamma_component, gamma_monotone_check, ComponentMap};
use gammahom::hom::{homs, HomMode};
use gammahom::quotient::{partition_key, quotient_of, theta_class};
use gammahom::{Digraph, VertexSet};
use proptest::prelude::*;

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        any::<u64>().prop_map(move |bits| {
            let arcs = (0..n * n).filter(|i| bits >> i & 1 == 1).map(|i| (i / n, i % n));
            Digraph::new(n, arcs).unwrap()
        })
    })
}

fn labelled(n: usize) -> impl Iterator<Item = Digraph> {
    (0u64..1 << (n * n)).map(move |bits| {
        let arcs = (0..n * n).filter(move |i| bits >> i & 1 == 1).map(move |i| (i / n, i % n));
        Digraph::new(n, arcs).unwrap()
    })
}

fn catalog(kind: ClassKind, n: usize) -> Vec<Digraph> {
    generate(&ClassSpec::new(kind, n)).unwrap()
}

proptest! {
    #[test]
    fn hull_is_idempotent_and_monotone(g in digraph(6)) {
        let hull = g.transitive_hull();
        prop_assert!(hull.is_transitive());
        prop_assert_eq!(hull.transitive_hull(), hull.clone());
        for (u, v) in g.arcs() {
            prop_assert!(hull.has_arc(u, v));
        }
        if g.is_reflexive() {
            prop_assert!(hull.is_reflexive());
        }
        if ClassKind::Ta.contains(&g) {
            prop_assert!(ClassKind::Ta.contains(&hull));
        }
    }

    #[test]
    fn loops_removed_is_idempotent(g in digraph(6)) {
        let star = g.loops_removed();
        prop_assert!(star.is_irreflexive());
        prop_assert_eq!(star.loops_removed(), star);
    }

    #[test]
    fn gamma_is_monotone_and_idempotent(g in digraph(5), x in any::<u64>(), extra in any::<u64>()) {
        let all = g.vertices();
        let x = VertexSet::from_bits(x).intersection(all);
        let bigger = x.union(VertexSet::from_bits(extra).intersection(all));
        for v in x {
            let small = gamma(&g, x, v).unwrap();
            prop_assert!(small.contains(v));
            prop_assert!(small.is_subset(gamma(&g, bigger, v).unwrap()));
            prop_assert_eq!(gamma(&g, small, v).unwrap(), small);
            for w in small {
                prop_assert!(gamma(&g, x, w).unwrap().contains(v));
            }
        }
    }

    #[test]
    fn induced_subgraphs_keep_arcs(g in digraph(6), x in 1u64..64) {
        let x = VertexSet::from_bits(x).intersection(g.vertices());
        prop_assume!(!x.is_empty());
        let sub = g.induced(x).unwrap();
        let idx: Vec<usize> = x.iter().collect();
        for (i, &u) in idx.iter().enumerate() {
            for (j, &v) in idx.iter().enumerate() {
                prop_assert_eq!(sub.has_arc(i, j), g.has_arc(u, v));
            }
        }
    }
}

#[test]
fn component_blocks_partition_every_subset() {
    for n in 1..=4 {
        for g in labelled(n).step_by(if n == 4 { 7 } else { 1 }) {
            for x in g.vertices().subsets() {
                let cm = ComponentMap::new(&g, x).unwrap();
                let mut seen = VertexSet::empty();
                for &b in cm.blocks() {
                    assert!(seen.is_disjoint(b));
                    seen = seen.union(b);
                    assert_eq!(gamma(&g, x, b.first().unwrap()).unwrap(), b);
                }
                assert_eq!(seen, x);
            }
        }
    }
}

#[test]
fn sums_are_associative_up_to_isomorphism() {
    let posets = catalog(ClassKind::Posets, 2);
    for a in &posets {
        for b in &posets {
            for c in &posets {
                let left = a.direct_sum(b).unwrap().direct_sum(c).unwrap();
                let right = a.direct_sum(&b.direct_sum(c).unwrap()).unwrap();
                assert!(is_isomorphic(&left, &right).unwrap());
                let left = a.ordinal_sum(b).unwrap().ordinal_sum(c).unwrap();
                let right = a.ordinal_sum(&b.ordinal_sum(c).unwrap()).unwrap();
                assert!(left.is_poset());
                assert!(is_isomorphic(&left, &right).unwrap());
            }
        }
    }
}

/// A strictly larger component must contain a proper arc of `G` whose
/// image under `xi` is a proper arc of `H`.
#[test]
fn strict_component_growth_needs_a_proper_image_arc() {
    let sources = catalog(ClassKind::Digraphs, 3);
    let targets = catalog(ClassKind::Digraphs, 2);
    for g in &sources {
        for h in &targets {
            let xis = homs(g, h, HomMode::All);
            for h2 in &targets {
                let zetas = homs(g, h2, HomMode::All);
                for xi in &xis {
                    for zeta in &zetas {
                        for v in 0..g.n() {
                            let a = gamma_component(g, xi, v).unwrap();
                            let b = gamma_component(g, zeta, v).unwrap();
                            if !a.is_subset(b) {
                                continue;
                            }
                            let witness = b.iter().any(|x| {
                                b.iter().any(|y| {
                                    x != y
                                        && g.has_arc(x, y)
                                        && xi.get(x) != xi.get(y)
                                        && h.has_arc(xi.get(x), xi.get(y))
                                })
                            });
                            assert_eq!(a != b, witness);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn monotone_check_holds_on_catalog_triples() {
    let cat = catalog(ClassKind::Digraphs, 2);
    let sources = catalog(ClassKind::Digraphs, 3);
    for g in &sources {
        for h in &cat {
            for h2 in &cat {
                let sigmas = homs(h, h2, HomMode::All);
                for xi in homs(g, h, HomMode::All) {
                    for sigma in &sigmas {
                        assert!(gamma_monotone_check(g, h, h2, &xi, sigma).unwrap());
                    }
                }
            }
        }
    }
}

/// Theta classes partition the homomorphisms, share the projection, and are
/// told apart by the block map alone.
#[test]
fn theta_classes_partition_and_separate_by_iota() {
    let cat = catalog(ClassKind::Digraphs, 3);
    let small = catalog(ClassKind::Digraphs, 2);
    for g in &cat {
        for h in &small {
            let all = homs(g, h, HomMode::All);
            let mut classes: BTreeMap<Vec<usize>, Vec<_>> = BTreeMap::new();
            for xi in &all {
                classes.entry(partition_key(g, xi)).or_default().push(xi.clone());
            }
            let total: usize = classes.values().map(Vec::len).sum();
            assert_eq!(total, all.len());
            for members in classes.values() {
                let q = quotient_of(g, h, &members[0]).unwrap();
                assert_eq!(&theta_class(g, h, &q), members);
                let mut iotas = BTreeSet::new();
                for z in members {
                    let qz = quotient_of(g, h, z).unwrap();
                    assert_eq!(qz.pi(), q.pi());
                    assert!(iotas.insert(qz.iota()));
                }
            }
        }
    }
}

/// Transitive quotients of poset maps are posets and see the same maps into
/// posets as the quotients themselves.
#[test]
fn transitive_quotients_of_posets() {
    let posets = catalog(ClassKind::Posets, 3);
    for g in &posets {
        for r in &posets {
            for xi in homs(g, r, HomMode::All) {
                let q = quotient_of(g, r, &xi).unwrap();
                let t = q.transitive();
                assert!(t.is_poset());
                for h in &posets {
                    for mode in [HomMode::All, HomMode::Strict] {
                        assert_eq!(homs(&t, h, mode), homs(q.digraph(), h, mode));
                    }
                }
            }
        }
    }
}

#[test]
fn strict_maps_have_singleton_quotients() {
    for g in catalog(ClassKind::Posets, 3) {
        for h in catalog(ClassKind::Posets, 3) {
            for xi in homs(&g, &h, HomMode::Strict) {
                let q = quotient_of(&g, &h, &xi).unwrap();
                assert!(q.blocks().iter().all(|b| b.len() == 1));
                assert!(is_isomorphic(q.digraph(), &g).unwrap());
                assert!(is_isomorphic(&q.transitive(), &g).unwrap());
            }
        }
    }
}
