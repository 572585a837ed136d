//! The rearrangement method: arcs between `M` and `X` in `R` are replaced by
//! their `beta`-translates between `M` and `Y`, giving a digraph `S` together
//! with an injective, component-preserving map from strict homomorphisms into
//! `R` to strict homomorphisms into `S`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::connectivity::is_convex;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::hom::{is_homomorphism, HomMode, VertexMap};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RearrangementSpec {
    #[serde(rename = "R")]
    pub r: Digraph,
    #[serde(rename = "X")]
    pub x: VertexSet,
    #[serde(rename = "Y")]
    pub y: VertexSet,
    #[serde(rename = "M")]
    pub m: VertexSet,
    /// Pairs `(x, beta(x))`.
    pub beta: Vec<(usize, usize)>,
}

impl RearrangementSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serialization is infallible")
    }
}

/// A violated hypothesis of the construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "kebab-case")]
pub enum Violation {
    VertexOutOfRange { v: usize },
    XMeetsM,
    YMeetsM,
    MAdjacentToY { y: usize },
    BetaOutsideX { v: usize },
    BetaNotAFunction { x: usize },
    BetaUndefined { x: usize },
    BetaOutsideY { x: usize, image: usize },
    BetaNotOnto { y: usize },
    BetaNotInjective { y: usize },
    BetaNotAHomomorphism { u: usize, v: usize },
    InNeighborhood { x: usize },
    OutNeighborhood { x: usize },
    Neighborhood { x: usize },
    XNotConvex,
    WalkFromMToY,
    WalkFromYToM,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange { v } => write!(f, "vertex {v} is not a vertex of R"),
            Violation::XMeetsM => f.write_str("X and M intersect"),
            Violation::YMeetsM => f.write_str("Y and M intersect"),
            Violation::MAdjacentToY { y } => write!(f, "M meets the neighborhood of {y} in Y"),
            Violation::BetaOutsideX { v } => write!(f, "beta is given at {v}, which is not in X"),
            Violation::BetaNotAFunction { x } => write!(f, "beta assigns several images to {x}"),
            Violation::BetaUndefined { x } => write!(f, "beta is undefined at {x}"),
            Violation::BetaOutsideY { x, image } => {
                write!(f, "beta maps {x} to {image}, which is not in Y")
            }
            Violation::BetaNotOnto { y } => write!(f, "beta does not reach {y}"),
            Violation::BetaNotInjective { y } => write!(f, "beta reaches {y} more than once"),
            Violation::BetaNotAHomomorphism { u, v } => {
                write!(f, "beta does not preserve the arc ({u}, {v}) of R|X")
            }
            Violation::InNeighborhood { x } => write!(
                f,
                "in-neighbors of {x} outside M are not in-neighbors of beta({x})"
            ),
            Violation::OutNeighborhood { x } => write!(
                f,
                "out-neighbors of {x} outside M are not out-neighbors of beta({x})"
            ),
            Violation::Neighborhood { x } => {
                write!(f, "neighbors of {x} outside M are not neighbors of beta({x})")
            }
            Violation::XNotConvex => f.write_str("X is not convex"),
            Violation::WalkFromMToY => f.write_str("some walk starts in M and ends in Y"),
            Violation::WalkFromYToM => f.write_str("some walk starts in Y and ends in M"),
        }
    }
}

/// Which family of hypotheses to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RearrangeMode {
    /// Set conditions, bijective homomorphism `beta`, directed neighborhood condition.
    Digraph,
    /// Additionally: `X` convex, no walk from `M` to `Y` or back.
    Poset,
    /// Symmetric `R` with the undirected neighborhood condition.
    Undirected,
}

/// Every violated hypothesis, in a fixed order. An empty list means valid.
pub fn validate_spec(spec: &RearrangementSpec, poset_mode: bool) -> Vec<Violation> {
    let mode = if poset_mode {
        RearrangeMode::Poset
    } else {
        RearrangeMode::Digraph
    };
    validate(spec, mode)
}

pub fn validate(spec: &RearrangementSpec, mode: RearrangeMode) -> Vec<Violation> {
    let r = &spec.r;
    let n = r.n();
    let mut out = Vec::new();
    let all = VertexSet::full(n);
    let mentioned = spec
        .x
        .union(spec.y)
        .union(spec.m)
        .union(spec.beta.iter().flat_map(|&(a, b)| [a, b]).filter(|&v| v < 64).collect());
    let mut stray: Vec<usize> = mentioned.difference(all).iter().collect();
    stray.extend(spec.beta.iter().flat_map(|&(a, b)| [a, b]).filter(|&v| v >= 64));
    stray.sort_unstable();
    stray.dedup();
    if !stray.is_empty() {
        // nothing else is meaningful on foreign vertices
        out.extend(stray.into_iter().map(|v| Violation::VertexOutOfRange { v }));
        return out;
    }
    if !spec.x.is_disjoint(spec.m) {
        out.push(Violation::XMeetsM);
    }
    if !spec.y.is_disjoint(spec.m) {
        out.push(Violation::YMeetsM);
    }
    for y in spec.y {
        if !r.neighbors(y).is_disjoint(spec.m) {
            out.push(Violation::MAdjacentToY { y });
        }
    }

    let mut image: Vec<Option<usize>> = vec![None; n];
    let mut beta_ok = true;
    for &(a, b) in &spec.beta {
        if !spec.x.contains(a) {
            out.push(Violation::BetaOutsideX { v: a });
            beta_ok = false;
            continue;
        }
        match image[a] {
            Some(prev) if prev != b => {
                out.push(Violation::BetaNotAFunction { x: a });
                beta_ok = false;
            }
            _ => image[a] = Some(b),
        }
    }
    for x in spec.x {
        match image[x] {
            None => {
                out.push(Violation::BetaUndefined { x });
                beta_ok = false;
            }
            Some(b) if !spec.y.contains(b) => {
                out.push(Violation::BetaOutsideY { x, image: b });
                beta_ok = false;
            }
            _ => {}
        }
    }
    let mut hits = vec![0usize; n];
    for x in spec.x {
        if let Some(b) = image[x] {
            hits[b] += 1;
        }
    }
    for y in spec.y {
        match hits[y] {
            0 => {
                out.push(Violation::BetaNotOnto { y });
                beta_ok = false;
            }
            1 => {}
            _ => {
                out.push(Violation::BetaNotInjective { y });
                beta_ok = false;
            }
        }
    }
    if beta_ok {
        for u in spec.x {
            for v in r.out_set(u).intersection(spec.x) {
                let (a, b) = (image[u].unwrap(), image[v].unwrap());
                if !r.has_arc(a, b) {
                    out.push(Violation::BetaNotAHomomorphism { u, v });
                }
            }
        }
        for x in spec.x {
            let bx = image[x].unwrap();
            if mode == RearrangeMode::Undirected {
                if !r.neighbors(x).difference(spec.m).is_subset(r.neighbors(bx)) {
                    out.push(Violation::Neighborhood { x });
                }
                continue;
            }
            if !r
                .in_neighbors(x)
                .difference(spec.m)
                .is_subset(r.in_neighbors(bx))
            {
                out.push(Violation::InNeighborhood { x });
            }
            if !r
                .out_neighbors(x)
                .difference(spec.m)
                .is_subset(r.out_neighbors(bx))
            {
                out.push(Violation::OutNeighborhood { x });
            }
        }
    }
    if mode == RearrangeMode::Poset {
        if !is_convex(r, spec.x) {
            out.push(Violation::XNotConvex);
        }
        if !r.reachable_from(spec.m).is_disjoint(spec.y) {
            out.push(Violation::WalkFromMToY);
        }
        if !r.reachable_from(spec.y).is_disjoint(spec.m) {
            out.push(Violation::WalkFromYToM);
        }
    }
    out
}

/// `S` together with the partition of its arcs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RearrangementResult {
    #[serde(rename = "S")]
    pub s: Digraph,
    #[serde(rename = "A_r")]
    pub a_r: Vec<(usize, usize)>,
    #[serde(rename = "A_d")]
    pub a_d: Vec<(usize, usize)>,
    #[serde(rename = "A_u")]
    pub a_u: Vec<(usize, usize)>,
    #[serde(rename = "T", skip_serializing_if = "Option::is_none")]
    pub t: Option<Digraph>,
}

/// Builds `S` after checking the hypotheses of `mode`.
pub fn build_s(spec: &RearrangementSpec) -> Result<RearrangementResult> {
    Ok(Rearrangement::new(spec.clone(), RearrangeMode::Digraph)?.result)
}

fn arc_partition(spec: &RearrangementSpec, beta: &[Option<usize>]) -> RearrangementResult {
    let r = &spec.r;
    let (x, m) = (spec.x, spec.m);
    let mut a_r = Vec::new();
    let mut a_d = Vec::new();
    let mut a_u = Vec::new();
    for (u, v) in r.arcs() {
        if m.contains(u) && x.contains(v) {
            a_d.push((u, beta[v].unwrap()));
        } else if x.contains(u) && m.contains(v) {
            a_u.push((beta[u].unwrap(), v));
        } else {
            a_r.push((u, v));
        }
    }
    a_d.sort_unstable();
    a_d.dedup();
    a_u.sort_unstable();
    a_u.dedup();
    let s = Digraph::new(r.n(), a_r.iter().chain(&a_d).chain(&a_u).copied())
        .expect("rearranged arcs stay on the vertex set of R");
    RearrangementResult {
        s,
        a_r,
        a_d,
        a_u,
        t: None,
    }
}

/// Which digraph a strict homomorphism is expected to land in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    R,
    S,
}

/// A validated spec with its result, ready to transport homomorphisms.
#[derive(Clone, Debug)]
pub struct Rearrangement {
    spec: RearrangementSpec,
    mode: RearrangeMode,
    beta: Vec<Option<usize>>,
    beta_inv: Vec<Option<usize>>,
    result: RearrangementResult,
}

impl Rearrangement {
    pub fn new(spec: RearrangementSpec, mode: RearrangeMode) -> Result<Self> {
        if mode == RearrangeMode::Undirected && !spec.r.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if mode == RearrangeMode::Poset && !spec.r.is_poset() {
            return Err(Error::NotAPoset);
        }
        let violations = validate(&spec, mode);
        if !violations.is_empty() {
            return Err(Error::InvalidSpec(violations));
        }
        let n = spec.r.n();
        let mut beta = vec![None; n];
        let mut beta_inv = vec![None; n];
        for &(a, b) in &spec.beta {
            beta[a] = Some(b);
            beta_inv[b] = Some(a);
        }
        let mut result = arc_partition(&spec, &beta);
        if mode == RearrangeMode::Poset {
            result.t = Some(result.s.transitive_hull());
        }
        Ok(Rearrangement {
            spec,
            mode,
            beta,
            beta_inv,
            result,
        })
    }

    pub fn spec(&self) -> &RearrangementSpec {
        &self.spec
    }

    pub fn mode(&self) -> RearrangeMode {
        self.mode
    }

    pub fn result(&self) -> &RearrangementResult {
        &self.result
    }

    pub fn r(&self) -> &Digraph {
        &self.spec.r
    }

    pub fn s(&self) -> &Digraph {
        &self.result.s
    }

    pub fn beta(&self, x: usize) -> Option<usize> {
        self.beta.get(x).copied().flatten()
    }

    fn check_strict(&self, g: &Digraph, f: &VertexMap, side: Side) -> Result<()> {
        let target = match side {
            Side::R => self.r(),
            Side::S => self.s(),
        };
        if is_homomorphism(g, target, f, HomMode::Strict)? {
            Ok(())
        } else {
            Err(Error::NotStrictHom)
        }
    }

    /// `U_xi` for `Side::R` (image in `X`), `U'_zeta` for `Side::S` (image in `Y`).
    pub fn exceptional_set(&self, g: &Digraph, f: &VertexMap, side: Side) -> Result<VertexSet> {
        self.check_strict(g, f, side)?;
        Ok(self.exceptional_unchecked(g, f, side))
    }

    fn exceptional_unchecked(&self, g: &Digraph, f: &VertexMap, side: Side) -> VertexSet {
        let home = match side {
            Side::R => self.spec.x,
            Side::S => self.spec.y,
        };
        g.vertices()
            .iter()
            .filter(|&v| {
                home.contains(f.get(v)) && g.neighbors(v).iter().any(|w| self.spec.m.contains(f.get(w)))
            })
            .collect()
    }

    /// `rho_G(xi)`: moves the vertices of `U_xi` along `beta`.
    pub fn rho(&self, g: &Digraph, xi: &VertexMap) -> Result<VertexMap> {
        self.check_strict(g, xi, Side::R)?;
        let u = self.exceptional_unchecked(g, xi, Side::R);
        let image = (0..g.n())
            .map(|v| {
                if u.contains(v) {
                    self.beta[xi.get(v)].unwrap()
                } else {
                    xi.get(v)
                }
            })
            .collect();
        Ok(VertexMap::new_unchecked(image, self.r().n()))
    }

    /// The inversion formula: moves the vertices of `U'_zeta` back along `beta^-1`.
    pub fn invert(&self, g: &Digraph, zeta: &VertexMap) -> Result<VertexMap> {
        self.check_strict(g, zeta, Side::S)?;
        let u = self.exceptional_unchecked(g, zeta, Side::S);
        let image = (0..g.n())
            .map(|v| {
                if u.contains(v) {
                    self.beta_inv[zeta.get(v)].unwrap()
                } else {
                    zeta.get(v)
                }
            })
            .collect();
        Ok(VertexMap::new_unchecked(image, self.r().n()))
    }
}

pub fn exceptional_set(
    g: &Digraph,
    f: &VertexMap,
    side: Side,
    rearrangement: &Rearrangement,
) -> Result<VertexSet> {
    rearrangement.exceptional_set(g, f, side)
}

pub fn rho_apply(g: &Digraph, xi: &VertexMap, rearrangement: &Rearrangement) -> Result<VertexMap> {
    rearrangement.rho(g, xi)
}

/// Poset specialization: returns `S` and its transitive hull `T`.
pub fn poset_rearrange(spec: &RearrangementSpec) -> Result<(Digraph, Digraph)> {
    let rr = Rearrangement::new(spec.clone(), RearrangeMode::Poset)?;
    let t = rr.result.t.clone().unwrap();
    debug_assert!(t.is_poset());
    Ok((rr.result.s, t))
}

/// Which part of the arc partition an arc of `S` belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArcPart {
    Retained,
    Down,
    Up,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalkReport {
    /// Positions `i >= 1` whose arc `z_{i-1} z_i` is not retained.
    pub k: Vec<usize>,
    pub parts: Vec<ArcPart>,
    /// `#K <= 2`, and when `#K = 2` the first moved arc is down and the second up.
    pub shape_ok: bool,
}

/// Classifies the arcs of a walk in `S`.
pub fn walk_k_analysis(result: &RearrangementResult, walk: &[usize]) -> Result<WalkReport> {
    let s = &result.s;
    if let Some(&v) = walk.iter().find(|&&v| v >= s.n()) {
        return Err(Error::VertexOutOfRange { v, n: s.n() });
    }
    let mut k = Vec::new();
    let mut parts = Vec::new();
    for i in 1..walk.len() {
        let arc = (walk[i - 1], walk[i]);
        if !s.has_arc(arc.0, arc.1) {
            return Err(Error::NotAWalk { index: i });
        }
        let part = if result.a_r.binary_search(&arc).is_ok() {
            ArcPart::Retained
        } else if result.a_d.binary_search(&arc).is_ok() {
            ArcPart::Down
        } else {
            ArcPart::Up
        };
        if part != ArcPart::Retained {
            k.push(i);
        }
        parts.push(part);
    }
    let moved: Vec<ArcPart> = k.iter().map(|&i| parts[i - 1]).collect();
    let shape_ok = match moved.as_slice() {
        [] | [_] => true,
        [ArcPart::Down, ArcPart::Up] => true,
        _ => false,
    };
    Ok(WalkReport { k, parts, shape_ok })
}

/// Undirected specialization on a symmetric `R`: every edge meeting both `M`
/// and `X` is replaced by its image under `beta` on the `X` end.
pub fn undirected_rearrange(spec: &RearrangementSpec) -> Result<Digraph> {
    let rr = Rearrangement::new(spec.clone(), RearrangeMode::Undirected)?;
    let r = &spec.r;
    let mut arcs = Vec::new();
    for (u, v) in r.arcs().into_iter().filter(|(u, v)| u <= v) {
        let meets_m = spec.m.contains(u) || spec.m.contains(v);
        let meets_x = spec.x.contains(u) || spec.x.contains(v);
        let (a, b) = if meets_m && meets_x {
            // X and M are disjoint, so this is a proper edge {m, x}
            let (m, x) = if spec.m.contains(u) { (u, v) } else { (v, u) };
            (m, rr.beta(x).unwrap())
        } else {
            (u, v)
        };
        arcs.push((a, b));
        arcs.push((b, a));
    }
    Digraph::new(r.n(), arcs)
}

/// All specs on `r` that satisfy the hypotheses of `mode`, with non-empty `X`
/// of size at most `max_x`, non-empty `M`, and every bijection `X → Y`.
pub fn sweep_specs(r: &Digraph, max_x: usize, mode: RearrangeMode) -> Vec<RearrangementSpec> {
    let all = r.vertices();
    let mut out = Vec::new();
    for x in all.subsets().filter(|x| !x.is_empty() && x.len() <= max_x) {
        for m in all.difference(x).subsets().filter(|m| !m.is_empty()) {
            for y in all.difference(m).subsets().filter(|y| y.len() == x.len()) {
                let xs: Vec<usize> = x.iter().collect();
                for perm in permutations(&y.iter().collect::<Vec<_>>()) {
                    let spec = RearrangementSpec {
                        r: r.clone(),
                        x,
                        y,
                        m,
                        beta: xs.iter().copied().zip(perm).collect(),
                    };
                    if validate(&spec, mode).is_empty() {
                        out.push(spec);
                    }
                }
            }
        }
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::homs;

    fn d(n: usize, arcs: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, arcs.iter().copied()).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn three_vertex() -> RearrangementSpec {
        RearrangementSpec {
            r: d(3, &[(0, 0), (1, 1), (2, 2), (0, 1)]),
            x: set(&[1]),
            y: set(&[2]),
            m: set(&[0]),
            beta: vec![(1, 2)],
        }
    }

    #[test]
    fn three_vertex_spec_moves_one_arc() {
        let spec = three_vertex();
        assert!(validate_spec(&spec, false).is_empty());
        assert!(validate_spec(&spec, true).is_empty());
        let res = build_s(&spec).unwrap();
        assert_eq!(res.s, d(3, &[(0, 0), (1, 1), (2, 2), (0, 2)]));
        assert_eq!(res.a_r, vec![(0, 0), (1, 1), (2, 2)]);
        assert_eq!(res.a_d, vec![(0, 2)]);
        assert!(res.a_u.is_empty());
    }

    #[test]
    fn violations_are_collected() {
        let mut spec = three_vertex();
        spec.y = set(&[0]);
        spec.beta = vec![(1, 0)];
        let v = validate_spec(&spec, false);
        assert!(v.contains(&Violation::YMeetsM));
        assert!(matches!(build_s(&spec), Err(Error::InvalidSpec(_))));

        let chain = d(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)]);
        let spec = RearrangementSpec {
            r: chain,
            x: set(&[0, 2]),
            y: set(&[0, 2]),
            m: set(&[1]),
            beta: vec![(0, 0), (2, 2)],
        };
        assert!(validate_spec(&spec, true).contains(&Violation::XNotConvex));
    }

    #[test]
    fn beta_must_be_a_bijection_onto_y() {
        let mut spec = three_vertex();
        spec.beta = vec![];
        assert_eq!(
            validate_spec(&spec, false),
            vec![Violation::BetaUndefined { x: 1 }, Violation::BetaNotOnto { y: 2 }]
        );
        let mut spec = three_vertex();
        spec.beta = vec![(1, 7)];
        assert_eq!(validate_spec(&spec, false), vec![Violation::VertexOutOfRange { v: 7 }]);
    }

    #[test]
    fn no_moved_arcs_keeps_r() {
        let spec = RearrangementSpec {
            r: d(3, &[(0, 0), (1, 1), (2, 2)]),
            x: set(&[1]),
            y: set(&[2]),
            m: set(&[0]),
            beta: vec![(1, 2)],
        };
        assert_eq!(build_s(&spec).unwrap().s, spec.r);
    }

    #[test]
    fn rho_round_trips_on_three_vertex_spec() {
        let rr = Rearrangement::new(three_vertex(), RearrangeMode::Digraph).unwrap();
        let g = d(2, &[(0, 1)]);
        for xi in homs(&g, rr.r(), HomMode::Strict) {
            let z = rr.rho(&g, &xi).unwrap();
            assert!(is_homomorphism(&g, rr.s(), &z, HomMode::Strict).unwrap());
            assert_eq!(rr.invert(&g, &z).unwrap(), xi);
            assert_eq!(
                rr.exceptional_set(&g, &xi, Side::R).unwrap(),
                rr.exceptional_set(&g, &z, Side::S).unwrap()
            );
        }
        let not_strict = VertexMap::new(vec![0, 0], 3).unwrap();
        assert_eq!(rr.rho(&g, &not_strict), Err(Error::NotStrictHom));
    }

    #[test]
    fn walk_analysis() {
        let res = build_s(&three_vertex()).unwrap();
        let report = walk_k_analysis(&res, &[0, 0, 2, 2]).unwrap();
        assert_eq!(report.k, vec![2]);
        assert_eq!(report.parts[1], ArcPart::Down);
        assert!(report.shape_ok);
        assert_eq!(walk_k_analysis(&res, &[0, 1]), Err(Error::NotAWalk { index: 1 }));
        assert!(walk_k_analysis(&res, &[1]).unwrap().k.is_empty());
    }

    #[test]
    fn undirected_path_edge_moves() {
        // path m - x with isolated y
        let r = d(3, &[(0, 1), (1, 0)]);
        let spec = RearrangementSpec {
            r,
            x: set(&[1]),
            y: set(&[2]),
            m: set(&[0]),
            beta: vec![(1, 2)],
        };
        let s = undirected_rearrange(&spec).unwrap();
        assert_eq!(s, d(3, &[(0, 2), (2, 0)]));
        assert_eq!(s, build_s(&spec).unwrap().s);
        let mut directed = spec.clone();
        directed.r = d(3, &[(0, 1)]);
        assert_eq!(undirected_rearrange(&directed), Err(Error::NotSymmetric));
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = three_vertex();
        let json = spec.to_json();
        assert_eq!(
            json,
            r#"{"R":{"n":3,"arcs":[[0,0],[0,1],[1,1],[2,2]]},"X":[1],"Y":[2],"M":[0],"beta":[[1,2]]}"#
        );
        assert_eq!(RearrangementSpec::from_json(&json).unwrap(), spec);
    }

    #[test]
    fn sweep_finds_three_vertex_spec() {
        let specs = sweep_specs(&three_vertex().r, 2, RearrangeMode::Poset);
        assert!(specs.contains(&three_vertex()));
        for s in &specs {
            assert!(validate_spec(s, true).is_empty());
        }
    }
}
