//! Decision procedures for strong Γ-schemes on bounded classes, scheme
//! assembly from per-quotient tables, truncated Lovász vectors, and sum
//! compatibility checks.
//!
//! Every verdict is relative to the [`ClassSpec`] it was computed over.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{canonical_labeling, canonical_relabel, generate, is_isomorphic, CanonicalForm};
use crate::class::{ClassKind, ClassSpec};
use crate::connectivity::ComponentMap;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::hom::{count_homs, homs, is_homomorphism, Count, HomIter, HomMode, VertexMap};
use crate::quotient::{build, theta_class_sizes, PartitionKey};
use crate::vertex_set::VertexSet;

/// The family of inequalities a report checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DominanceKind {
    /// `#S(G,R) <= #S(G,S)` for every catalog `G`.
    StrictDominance,
    /// `#H(G,R) <= #H(G,S)` for every catalog `G`.
    HomDominance,
    /// `#Theta_{G,R}(xi) <= #Theta_{G,S}(xi)` for every catalog `G` and `xi`.
    GammaLeq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub g: Digraph,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi: Option<VertexMap>,
    pub lhs: Count,
    pub rhs: Count,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub g: Digraph,
    pub strict_r: Count,
    pub strict_s: Count,
    pub hom_r: Count,
    pub hom_s: Count,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominanceReport {
    pub r: Digraph,
    pub s: Digraph,
    pub class: ClassSpec,
    pub kind: DominanceKind,
    pub verdict: Verdict,
    /// Number of catalog digraphs examined.
    pub checked: usize,
    /// Earliest failure in canonical catalog order.
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<TableRow>>,
}

impl DominanceReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// Attaches the per-digraph count table over the report's class.
    pub fn with_table(mut self) -> Result<Self> {
        let catalog = generate(&self.class)?;
        let rows = catalog
            .par_iter()
            .map(|g| TableRow {
                g: g.clone(),
                strict_r: count_homs(g, &self.r, HomMode::Strict),
                strict_s: count_homs(g, &self.s, HomMode::Strict),
                hom_r: count_homs(g, &self.r, HomMode::All),
                hom_s: count_homs(g, &self.s, HomMode::All),
            })
            .collect();
        self.table = Some(rows);
        Ok(self)
    }
}

fn uses_transitive_quotients(kind: ClassKind) -> bool {
    matches!(kind, ClassKind::Posets | ClassKind::StrictPosets)
}

/// The quotient digraphs of all homomorphisms from catalog members into `r`,
/// one canonical representative per isomorphism type. Poset kinds use the
/// transitive hull of each quotient so the result stays in the kind.
pub fn quotient_closure(r: &Digraph, c: &ClassSpec) -> Result<Vec<Digraph>> {
    let catalog = generate(c)?;
    let transitive = uses_transitive_quotients(c.kind);
    let shapes: BTreeMap<CanonicalForm, Digraph> = catalog
        .par_iter()
        .flat_map_iter(|g| {
            HomIter::from_parts(g, r, HomMode::All).map(move |xi| {
                let q = build(g, r.n(), &xi);
                let shape = if transitive {
                    q.transitive()
                } else {
                    q.digraph().clone()
                };
                let (form, perm) = canonical_labeling(&shape).expect("quotients never exceed the catalog size");
                (form, shape.relabel(&perm))
            })
        })
        .collect();
    Ok(shapes.into_values().collect())
}

fn count_dominance(r: &Digraph, s: &Digraph, c: &ClassSpec, mode: HomMode) -> Result<DominanceReport> {
    let catalog = generate(c)?;
    let counts: Vec<(Count, Count)> = catalog
        .par_iter()
        .map(|g| (count_homs(g, r, mode), count_homs(g, s, mode)))
        .collect();
    let witness = catalog
        .iter()
        .zip(counts)
        .find(|(_, (a, b))| a > b)
        .map(|(g, (lhs, rhs))| Witness {
            g: g.clone(),
            xi: None,
            lhs,
            rhs,
        });
    let kind = match mode {
        HomMode::All => DominanceKind::HomDominance,
        _ => DominanceKind::StrictDominance,
    };
    Ok(report(r, s, c, kind, catalog.len(), witness))
}

fn report(
    r: &Digraph,
    s: &Digraph,
    c: &ClassSpec,
    kind: DominanceKind,
    checked: usize,
    witness: Option<Witness>,
) -> DominanceReport {
    DominanceReport {
        r: r.clone(),
        s: s.clone(),
        class: *c,
        kind,
        verdict: if witness.is_some() {
            Verdict::Fails
        } else {
            Verdict::Holds
        },
        checked,
        witness,
        table: None,
    }
}

pub fn check_strict_dominance(r: &Digraph, s: &Digraph, c: &ClassSpec) -> Result<DominanceReport> {
    count_dominance(r, s, c, HomMode::Strict)
}

pub fn check_hom_dominance(r: &Digraph, s: &Digraph, c: &ClassSpec) -> Result<DominanceReport> {
    count_dominance(r, s, c, HomMode::All)
}

/// Decides the Γ-scheme relation over `c` directly from Θ-class sizes: for
/// every catalog `G` the homomorphisms into `r` and into `s` are grouped by
/// their quotient partition and compared class by class.
///
/// Only kinds whose bounded classes are closed under (transitive) quotients
/// are accepted, so that the verdict is comparable with strict dominance.
pub fn check_gamma_leq(r: &Digraph, s: &Digraph, c: &ClassSpec) -> Result<DominanceReport> {
    match c.kind {
        ClassKind::Digraphs => {}
        ClassKind::Ta if r.loops_removed().is_acyclic() => {}
        ClassKind::Posets if r.is_poset() && s.is_poset() => {}
        ClassKind::StrictPosets
            if ClassKind::StrictPosets.contains(r) && ClassKind::StrictPosets.contains(s) => {}
        ClassKind::Ta => {
            return Err(Error::ClassNotQuotientClosed(
                "quotients of ta members are only guaranteed in ta when R is in ta".into(),
            ))
        }
        ClassKind::Posets | ClassKind::StrictPosets => {
            return Err(Error::ClassNotQuotientClosed(format!(
                "{} needs R and S in the same kind",
                c.kind
            )))
        }
        ClassKind::Undirected | ClassKind::OddCycleFree => {
            return Err(Error::ClassNotQuotientClosed(format!(
                "{} is not supported by the direct quotient route",
                c.kind
            )))
        }
    }
    if c.max_arcs.is_some() {
        return Err(Error::ClassNotQuotientClosed(
            "arc bounds are only supported for strict dominance".into(),
        ));
    }
    let catalog = generate(c)?;
    let failures: Vec<Option<Witness>> = catalog
        .par_iter()
        .map(|g| first_theta_failure(g, r, s))
        .collect();
    let witness = failures.into_iter().flatten().next();
    Ok(report(r, s, c, DominanceKind::GammaLeq, catalog.len(), witness))
}

/// Lexicographically first `xi` whose Θ-class into `r` outnumbers the class
/// with the same partition into `s`.
fn first_theta_failure(g: &Digraph, r: &Digraph, s: &Digraph) -> Option<Witness> {
    let into_r = theta_class_sizes(g, r);
    let into_s = theta_class_sizes(g, s);
    let failing: BTreeSet<&PartitionKey> = into_r
        .iter()
        .filter(|(key, &n)| n > into_s.get(*key).copied().unwrap_or(0))
        .map(|(key, _)| key)
        .collect();
    if failing.is_empty() {
        return None;
    }
    let xi = HomIter::from_parts(g, r, HomMode::All)
        .find(|xi| failing.contains(&crate::quotient::partition_key(g, xi)))
        .expect("a failing class is non-empty");
    let key = crate::quotient::partition_key(g, &xi);
    Some(Witness {
        g: g.clone(),
        xi: Some(xi),
        lhs: Count::from(into_r[&key]),
        rhs: Count::from(into_s.get(&key).copied().unwrap_or(0)),
    })
}

/// Injective tables `S(q, R) → S(q, S)` for every quotient shape `q`, each
/// pairing the i-th map of one lexicographic list with the i-th of the other.
#[derive(Clone, Debug)]
pub struct SchemeAssembly {
    r: Digraph,
    s: Digraph,
    class: ClassSpec,
    tables: BTreeMap<CanonicalForm, ShapeTable>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeTable {
    pub shape: Digraph,
    pub pairs: Vec<(VertexMap, VertexMap)>,
}

impl ShapeTable {
    fn build(shape: &Digraph, r: &Digraph, s: &Digraph) -> Result<Self> {
        let from = homs(shape, r, HomMode::Strict);
        let to = homs(shape, s, HomMode::Strict);
        if from.len() > to.len() {
            return Err(Error::DominanceFails {
                vertices: shape.n(),
                lhs: from.len().to_string(),
                rhs: to.len().to_string(),
            });
        }
        Ok(ShapeTable {
            shape: shape.clone(),
            pairs: from.into_iter().zip(to).collect(),
        })
    }

    fn lookup(&self, iota: &VertexMap) -> Option<&VertexMap> {
        self.pairs
            .binary_search_by(|(a, _)| a.cmp(iota))
            .ok()
            .map(|i| &self.pairs[i].1)
    }
}

impl SchemeAssembly {
    pub fn r(&self) -> &Digraph {
        &self.r
    }

    pub fn s(&self) -> &Digraph {
        &self.s
    }

    pub fn class(&self) -> &ClassSpec {
        &self.class
    }

    pub fn tables(&self) -> impl Iterator<Item = &ShapeTable> {
        self.tables.values()
    }

    /// `sigma_{G(xi)}(iota_xi) ∘ pi_xi`, evaluated through the canonical
    /// representative of the quotient digraph.
    pub fn apply(&self, g: &Digraph, xi: &VertexMap) -> Result<VertexMap> {
        if !is_homomorphism(g, &self.r, xi, HomMode::All)? {
            return Err(Error::NotAHomomorphism);
        }
        let q = build(g, self.r.n(), xi);
        let (form, perm) = canonical_labeling(q.digraph())?;
        let local;
        let table = match self.tables.get(&form) {
            Some(t) => t,
            None => {
                local = ShapeTable::build(&q.digraph().relabel(&perm), &self.r, &self.s)?;
                &local
            }
        };
        let k = q.blocks().len();
        let mut iota = vec![0; k];
        for b in 0..k {
            iota[perm[b]] = q.iota().get(b);
        }
        let iota = VertexMap::new_unchecked(iota, self.r.n());
        let sigma = table
            .lookup(&iota)
            .expect("iota of a quotient is a strict homomorphism");
        let image = (0..g.n()).map(|v| sigma.get(perm[q.block_of(v)])).collect();
        Ok(VertexMap::new_unchecked(image, self.s.n()))
    }
}

/// Builds the tables for every quotient shape arising over `c`.
pub fn assemble_scheme(r: &Digraph, s: &Digraph, c: &ClassSpec) -> Result<SchemeAssembly> {
    let catalog = generate(c)?;
    let shapes: BTreeMap<CanonicalForm, Digraph> = catalog
        .par_iter()
        .flat_map_iter(|g| {
            HomIter::from_parts(g, r, HomMode::All).map(move |xi| {
                let q = build(g, r.n(), &xi);
                let (form, perm) = canonical_labeling(q.digraph()).expect("quotients stay within the catalog size");
                (form, q.digraph().relabel(&perm))
            })
        })
        .collect();
    let tables: Vec<(CanonicalForm, Result<ShapeTable>)> = shapes
        .into_par_iter()
        .map(|(form, shape)| (form, ShapeTable::build(&shape, r, s)))
        .collect();
    let mut out = BTreeMap::new();
    for (form, table) in tables {
        out.insert(form, table?);
    }
    Ok(SchemeAssembly {
        r: r.clone(),
        s: s.clone(),
        class: *c,
        tables: out,
    })
}

/// `(#mode(G, h))` over the catalog of `c` in canonical order.
pub fn hom_vector(h: &Digraph, c: &ClassSpec, mode: HomMode) -> Result<Vec<Count>> {
    let catalog = generate(c)?;
    Ok(catalog.par_iter().map(|g| count_homs(g, h, mode)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub left: usize,
    pub right: usize,
    /// Index into the test catalog of the earliest distinguishing digraph.
    pub distinguished_by: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LovaszReport {
    pub objects: ClassSpec,
    pub tests: ClassSpec,
    pub mode: HomMode,
    pub object_count: usize,
    pub test_count: usize,
    pub pairs: Vec<PairReport>,
    pub all_distinguished: bool,
}

/// Compares truncated count vectors for every unordered pair of distinct
/// object representatives.
pub fn lovasz_distinguish(objects: &ClassSpec, tests: &ClassSpec, mode: HomMode) -> Result<LovaszReport> {
    let objs = generate(objects)?;
    let test_catalog = generate(tests)?;
    let vectors: Vec<Vec<Count>> = objs
        .par_iter()
        .map(|h| test_catalog.iter().map(|g| count_homs(g, h, mode)).collect())
        .collect();
    let mut pairs = Vec::new();
    for i in 0..objs.len() {
        for j in i + 1..objs.len() {
            // representatives are pairwise non-isomorphic by construction
            debug_assert!(!is_isomorphic(&objs[i], &objs[j]).unwrap_or(true));
            let distinguished_by = (0..test_catalog.len()).find(|&t| vectors[i][t] != vectors[j][t]);
            pairs.push(PairReport {
                left: i,
                right: j,
                distinguished_by,
            });
        }
    }
    let all_distinguished = pairs.iter().all(|p| p.distinguished_by.is_some());
    Ok(LovaszReport {
        objects: *objects,
        tests: *tests,
        mode,
        object_count: objs.len(),
        test_count: test_catalog.len(),
        pairs,
        all_distinguished,
    })
}

/// Like [`lovasz_distinguish`], raising the test bound one vertex at a time
/// until every pair is distinguished or the budget refuses a larger bound.
/// Returns every report produced, the last one being decisive.
pub fn lovasz_distinguish_escalating(
    objects: &ClassSpec,
    tests: &ClassSpec,
    mode: HomMode,
) -> Result<Vec<LovaszReport>> {
    let mut reports = vec![lovasz_distinguish(objects, tests, mode)?];
    let mut bound = *tests;
    while !reports.last().unwrap().all_distinguished {
        bound.max_vertices += 1;
        match lovasz_distinguish(objects, &bound, mode) {
            Ok(r) => reports.push(r),
            Err(Error::BoundTooLarge { .. }) => break,
            Err(e) => return Err(e),
        }
    }
    Ok(reports)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumReport {
    /// `"direct"` or `"ordinal"`.
    pub sum: &'static str,
    pub holds: bool,
    pub conclusion: DominanceReport,
}

/// Premises `r1 ≤ s1` and `r2 ≤ s2` (strict dominance over `c`) and the
/// conclusion for the direct sum (digraph kinds) or ordinal sum (poset kinds).
pub fn sum_compatibility_check(
    r1: &Digraph,
    s1: &Digraph,
    r2: &Digraph,
    s2: &Digraph,
    c: &ClassSpec,
) -> Result<SumReport> {
    for (i, (r, s)) in [(r1, s1), (r2, s2)].into_iter().enumerate() {
        let premise = check_strict_dominance(r, s, c)?;
        if !premise.holds() {
            return Err(Error::PremiseFails(format!(
                "pair {} is not dominated over {c}",
                i + 1
            )));
        }
    }
    let (sum, lhs, rhs) = match c.kind {
        ClassKind::Posets => ("ordinal", r1.ordinal_sum(r2)?, s1.ordinal_sum(s2)?),
        ClassKind::StrictPosets => ("ordinal", strict_ordinal_sum(r1, r2)?, strict_ordinal_sum(s1, s2)?),
        _ => ("direct", r1.direct_sum(r2)?, s1.direct_sum(s2)?),
    };
    let conclusion = check_strict_dominance(&lhs, &rhs, c)?;
    Ok(SumReport {
        sum,
        holds: conclusion.holds(),
        conclusion,
    })
}

fn strict_ordinal_sum(p: &Digraph, q: &Digraph) -> Result<Digraph> {
    if !ClassKind::StrictPosets.contains(p) || !ClassKind::StrictPosets.contains(q) {
        return Err(Error::NotAPoset);
    }
    Ok(p.reflexive_closure()
        .ordinal_sum(&q.reflexive_closure())?
        .loops_removed())
}

/// Count restricted to `x`; the empty restriction has exactly one map.
fn count_on(g: &Digraph, x: VertexSet, h: &Digraph, mode: HomMode) -> Count {
    count_homs(&g.induced_unchecked(x), h, mode)
}

/// `#mode(G, H1 + H2)` as the product over the components of `G` of
/// `#mode(C, H1) + #mode(C, H2)`.
pub fn component_product_count(g: &Digraph, h1: &Digraph, h2: &Digraph, mode: HomMode) -> Count {
    let components = ComponentMap::new(g, g.vertices()).expect("all vertices are in range");
    components
        .blocks()
        .iter()
        .map(|&c| count_on(g, c, h1, mode) + count_on(g, c, h2, mode))
        .fold(Count::from(1u64), |acc, x| acc * x)
}

/// Up-closed vertex sets of `p`: `u ∈ U` and `uw` an arc imply `w ∈ U`.
/// Includes the empty set and the full vertex set; increasing as bit masks.
pub fn upsets(p: &Digraph) -> Vec<VertexSet> {
    p.vertices()
        .subsets()
        .filter(|u| u.iter().all(|v| p.out_set(v).is_subset(*u)))
        .collect()
}

/// `#mode(P, Q1 ⊕ Q2)` as the sum over upsets `U` of
/// `#mode(P|(V∖U), Q1) · #mode(P|U, Q2)`.
pub fn upset_sum_count(p: &Digraph, q1: &Digraph, q2: &Digraph, mode: HomMode) -> Count {
    upsets(p)
        .into_iter()
        .map(|u| count_on(p, p.vertices().difference(u), q1, mode) * count_on(p, u, q2, mode))
        .sum()
}

/// Canonical representative of `g`, re-exported for report consumers.
pub fn representative(g: &Digraph) -> Result<Digraph> {
    canonical_relabel(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known::{a1, a2r, c2, chain, pentagon_r, pentagon_t};

    fn posets(n: usize) -> ClassSpec {
        ClassSpec::new(ClassKind::Posets, n)
    }

    #[test]
    fn reflexive_pairs_hold() {
        for kind in [DominanceKind::StrictDominance, DominanceKind::GammaLeq] {
            let rep = match kind {
                DominanceKind::GammaLeq => check_gamma_leq(&c2(), &c2(), &posets(3)),
                _ => check_strict_dominance(&c2(), &c2(), &posets(3)),
            }
            .unwrap();
            assert!(rep.holds());
            assert_eq!(rep.checked, 8);
        }
    }

    #[test]
    fn chain_vs_antichain_fails_at_chain() {
        let rep = check_strict_dominance(&c2(), &a2r(), &posets(2)).unwrap();
        assert_eq!(rep.verdict, Verdict::Fails);
        let w = rep.witness.unwrap();
        assert!(is_isomorphic(&w.g, &c2()).unwrap());
        assert_eq!((w.lhs, w.rhs), (Count::from(1u64), Count::from(0u64)));
        assert!(!check_gamma_leq(&c2(), &a2r(), &posets(2)).unwrap().holds());
    }

    #[test]
    fn gamma_leq_rejects_unsupported_kinds() {
        let c = ClassSpec::new(ClassKind::Undirected, 3);
        assert!(matches!(
            check_gamma_leq(&a1(), &a1(), &c),
            Err(Error::ClassNotQuotientClosed(_))
        ));
        let cyclic = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert!(matches!(
            check_gamma_leq(&cyclic, &cyclic, &ClassSpec::new(ClassKind::Ta, 3)),
            Err(Error::ClassNotQuotientClosed(_))
        ));
    }

    #[test]
    fn quotient_closure_of_chain() {
        let shapes = quotient_closure(&c2(), &posets(2)).unwrap();
        assert!(shapes.contains(&a1()));
        assert!(shapes.contains(&canonical_relabel(&c2()).unwrap()));
        assert!(shapes.iter().all(|q| q.n() <= 2 && q.is_poset()));
    }

    #[test]
    fn hom_vectors_differ_at_chain() {
        let c = posets(2);
        let v1 = hom_vector(&c2(), &c, HomMode::All).unwrap();
        let v2 = hom_vector(&a2r(), &c, HomMode::All).unwrap();
        let catalog = generate(&c).unwrap();
        assert_eq!(v1.len(), catalog.len());
        let at = catalog.iter().position(|g| *g == canonical_relabel(&c2()).unwrap()).unwrap();
        assert_eq!((v1[at].clone(), v2[at].clone()), (Count::from(3u64), Count::from(2u64)));
    }

    #[test]
    fn scheme_apply_is_injective_and_preserves_components() {
        let (r, s) = (pentagon_r(), pentagon_t());
        let c = ClassSpec::new(ClassKind::Posets, 3);
        let scheme = assemble_scheme(&r, &s, &c).unwrap();
        for g in generate(&c).unwrap() {
            let mut seen = BTreeSet::new();
            for xi in homs(&g, &r, HomMode::All) {
                let z = scheme.apply(&g, &xi).unwrap();
                assert!(is_homomorphism(&g, &s, &z, HomMode::All).unwrap());
                assert_eq!(
                    crate::connectivity::gamma_partition(&g, &z).unwrap(),
                    crate::connectivity::gamma_partition(&g, &xi).unwrap()
                );
                assert!(seen.insert(z));
            }
        }
        assert!(matches!(
            assemble_scheme(&c2(), &a2r(), &posets(2)),
            Err(Error::DominanceFails { .. })
        ));
    }

    #[test]
    fn sum_formulas_match_direct_counts() {
        let p = chain(3);
        for mode in [HomMode::All, HomMode::Strict] {
            assert_eq!(
                upset_sum_count(&p, &c2(), &a2r(), mode),
                count_homs(&p, &c2().ordinal_sum(&a2r()).unwrap(), mode)
            );
            let g = a2r().direct_sum(&c2()).unwrap();
            assert_eq!(
                component_product_count(&g, &c2(), &a1(), mode),
                count_homs(&g, &c2().direct_sum(&a1()).unwrap(), mode)
            );
        }
        assert_eq!(upsets(&c2()).len(), 3);
    }

    #[test]
    fn sum_check_needs_premises() {
        let c = posets(3);
        assert!(sum_compatibility_check(&c2(), &c2(), &a1(), &a1(), &c).unwrap().holds);
        assert!(matches!(
            sum_compatibility_check(&c2(), &a2r(), &a1(), &a1(), &c),
            Err(Error::PremiseFails(_))
        ));
    }

    #[test]
    fn lovasz_small() {
        let rep = lovasz_distinguish(&posets(2), &posets(2), HomMode::All).unwrap();
        assert_eq!(rep.object_count, 3);
        assert_eq!(rep.pairs.len(), 3);
        assert!(rep.all_distinguished);
    }
}
