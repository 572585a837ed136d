//! Enumeration and counting of homomorphisms, strict homomorphisms, and
//! homomorphisms between the loop-removed digraphs.
//!
//! Two search routes exist on purpose. Lazy enumeration assigns vertices in
//! index order, which yields maps in lexicographic order without sorting.
//! Counting assigns vertices by descending proper degree and splits the top of
//! the search tree across rayon workers.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A total map from `0..domain` into `0..codomain`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexMap {
    image: Vec<usize>,
    codomain: usize,
}

impl VertexMap {
    pub fn new(image: Vec<usize>, codomain: usize) -> Result<Self> {
        if let Some((v, &t)) = image.iter().enumerate().find(|(_, &t)| t >= codomain) {
            return Err(Error::ImageOutOfRange {
                v,
                image: t,
                codomain,
            });
        }
        Ok(VertexMap { image, codomain })
    }

    pub(crate) fn new_unchecked(image: Vec<usize>, codomain: usize) -> Self {
        debug_assert!(image.iter().all(|&t| t < codomain));
        VertexMap { image, codomain }
    }

    pub fn identity(n: usize) -> Self {
        VertexMap {
            image: (0..n).collect(),
            codomain: n,
        }
    }

    pub fn constant(domain: usize, target: usize, codomain: usize) -> Result<Self> {
        Self::new(vec![target; domain], codomain)
    }

    pub fn get(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn domain_len(&self) -> usize {
        self.image.len()
    }

    pub fn codomain_len(&self) -> usize {
        self.codomain
    }

    pub fn preimage(&self, t: usize) -> VertexSet {
        self.image
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s == t)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn image_set(&self) -> VertexSet {
        self.image.iter().copied().collect()
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &VertexMap) -> VertexMap {
        VertexMap {
            image: inner.image.iter().map(|&t| self.image[t]).collect(),
            codomain: self.codomain,
        }
    }

    pub fn is_injective(&self) -> bool {
        self.image_set().len() == self.image.len()
    }

    pub(crate) fn check_domain(&self, n: usize) -> Result<()> {
        if self.image.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                got: self.image.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for VertexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.image)
    }
}

/// Serialized as the bare image array.
impl Serialize for VertexMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.image.serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HomMode {
    /// Arc-preserving maps.
    All,
    /// Homomorphisms sending proper arcs to proper arcs.
    Strict,
    /// Homomorphisms between the loop-removed digraphs.
    LoopsRemoved,
}

/// Exact homomorphism count.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Self {
        Count(BigUint::zero())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<u128> for Count {
    fn from(v: u128) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Self {
        Count(v)
    }
}

impl Add for Count {
    type Output = Count;

    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl std::ops::Mul for Count {
    type Output = Count;

    fn mul(self, rhs: Count) -> Count {
        Count(self.0 * rhs.0)
    }
}

impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), Add::add)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// JSON number when it fits in 64 bits, decimal string otherwise.
impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Count {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Count::from(v)),
            Raw::Str(s) => s
                .parse::<BigUint>()
                .map(Count)
                .map_err(serde::de::Error::custom),
        }
    }
}

/// Per-position constraint: arcs between the vertex placed at this position
/// and vertices placed earlier.
#[derive(Clone, Debug)]
struct Step {
    vertex: usize,
    needs_loop: bool,
    /// (earlier vertex w, arc v→w present, arc w→v present)
    links: Vec<(usize, bool, bool)>,
}

#[derive(Clone, Debug)]
struct Plan {
    steps: Vec<Step>,
}

impl Plan {
    fn new(g: &Digraph, order: &[usize], mode: HomMode) -> Self {
        let mut placed = VertexSet::empty();
        let steps = order
            .iter()
            .map(|&v| {
                let links = g
                    .neighbors(v)
                    .intersection(placed)
                    .iter()
                    .map(|w| (w, g.has_arc(v, w), g.has_arc(w, v)))
                    .collect();
                placed.insert(v);
                Step {
                    vertex: v,
                    needs_loop: mode != HomMode::LoopsRemoved && g.has_loop(v),
                    links,
                }
            })
            .collect();
        Plan { steps }
    }

    fn lexicographic(g: &Digraph, mode: HomMode) -> Self {
        let order: Vec<usize> = (0..g.n()).collect();
        Self::new(g, &order, mode)
    }

    /// Descending proper degree, ties by index.
    fn by_degree(g: &Digraph, mode: HomMode) -> Self {
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.proper_degree(v)), v));
        Self::new(g, &order, mode)
    }
}

struct Target<'a> {
    h: &'a Digraph,
    mode: HomMode,
    all: u64,
    loops: u64,
}

impl<'a> Target<'a> {
    fn new(h: &'a Digraph, mode: HomMode) -> Self {
        Target {
            h,
            mode,
            all: VertexSet::full(h.n()).bits(),
            loops: h.loops().bits(),
        }
    }

    fn candidates(&self, step: &Step, assign: &[usize]) -> u64 {
        let mut cand = self.all;
        if step.needs_loop {
            cand &= self.loops;
        }
        let proper_only = self.mode != HomMode::All;
        for &(w, v_to_w, w_to_v) in &step.links {
            let t = assign[w];
            if v_to_w {
                cand &= self.h.in_set(t).bits();
            }
            if w_to_v {
                cand &= self.h.out_set(t).bits();
            }
            if proper_only {
                cand &= !(1u64 << t);
            }
            if cand == 0 {
                break;
            }
        }
        cand
    }
}

fn count_sequential(plan: &Plan, target: &Target, pos: usize, assign: &mut [usize]) -> u128 {
    let step = &plan.steps[pos];
    let cand = target.candidates(step, assign);
    if pos + 1 == plan.steps.len() {
        return cand.count_ones() as u128;
    }
    let mut total = 0u128;
    for t in VertexSet::from_bits(cand) {
        assign[step.vertex] = t;
        total = total
            .checked_add(count_sequential(plan, target, pos + 1, assign))
            .expect("homomorphism count exceeds u128");
    }
    total
}

/// Depth of the search tree below which counting is sequential.
const PARALLEL_DEPTH: usize = 2;

fn count_parallel(plan: &Plan, target: &Target, pos: usize, assign: &[usize]) -> Count {
    let step = &plan.steps[pos];
    let cand = target.candidates(step, assign);
    if pos + 1 == plan.steps.len() {
        return Count::from(cand.count_ones() as u64);
    }
    let values: Vec<usize> = VertexSet::from_bits(cand).iter().collect();
    values
        .into_par_iter()
        .map(|t| {
            let mut local = assign.to_vec();
            local[step.vertex] = t;
            if pos + 1 < PARALLEL_DEPTH {
                count_parallel(plan, target, pos + 1, &local)
            } else {
                Count::from(count_sequential(plan, target, pos + 1, &mut local))
            }
        })
        .reduce(Count::zero, Add::add)
}

/// Number of maps `G → H` satisfying the mode's arc condition.
pub fn count_homs(g: &Digraph, h: &Digraph, mode: HomMode) -> Count {
    if g.n() == 0 {
        return Count::from(1u64);
    }
    let plan = Plan::by_degree(g, mode);
    let target = Target::new(h, mode);
    count_parallel(&plan, &target, 0, &vec![0; g.n()])
}

/// Sequential variant of [`count_homs`] for callers that already parallelize
/// at an outer level.
pub fn count_homs_seq(g: &Digraph, h: &Digraph, mode: HomMode) -> Count {
    if g.n() == 0 {
        return Count::from(1u64);
    }
    let plan = Plan::by_degree(g, mode);
    let target = Target::new(h, mode);
    Count::from(count_sequential(&plan, &target, 0, &mut vec![0; g.n()]))
}

/// Lazily enumerable homomorphism set with a cached count.
#[derive(Clone, Debug)]
pub struct HomSetHandle {
    g: Digraph,
    h: Digraph,
    mode: HomMode,
    count: OnceLock<Count>,
}

impl HomSetHandle {
    pub fn source(&self) -> &Digraph {
        &self.g
    }

    pub fn target(&self) -> &Digraph {
        &self.h
    }

    pub fn mode(&self) -> HomMode {
        self.mode
    }

    /// Maps in lexicographic order of `(f(0), .., f(n-1))`.
    pub fn iter(&self) -> HomIter<'_> {
        HomIter::from_parts(&self.g, &self.h, self.mode)
    }

    pub fn count(&self) -> &Count {
        self.count
            .get_or_init(|| count_homs(&self.g, &self.h, self.mode))
    }

    pub fn to_vec(&self) -> Vec<VertexMap> {
        self.iter().collect()
    }

    pub fn contains(&self, f: &VertexMap) -> bool {
        f.codomain_len() == self.h.n()
            && is_homomorphism(&self.g, &self.h, f, self.mode).unwrap_or(false)
    }
}

pub fn enumerate_homs(g: &Digraph, h: &Digraph, mode: HomMode) -> HomSetHandle {
    HomSetHandle {
        g: g.clone(),
        h: h.clone(),
        mode,
        count: OnceLock::new(),
    }
}

/// Materialized homomorphism list in lexicographic order.
pub fn homs(g: &Digraph, h: &Digraph, mode: HomMode) -> Vec<VertexMap> {
    HomIter::from_parts(g, h, mode).collect()
}

/// Depth-first lexicographic enumeration with an explicit stack of remaining
/// candidates per level.
pub struct HomIter<'a> {
    plan: Plan,
    target: Target<'a>,
    pending: Vec<u64>,
    assign: Vec<usize>,
    started: bool,
    codomain: usize,
}

impl<'a> HomIter<'a> {
    pub fn from_parts(g: &Digraph, h: &'a Digraph, mode: HomMode) -> Self {
        HomIter {
            plan: Plan::lexicographic(g, mode),
            target: Target::new(h, mode),
            pending: Vec::with_capacity(g.n()),
            assign: vec![0; g.n()],
            started: false,
            codomain: h.n(),
        }
    }
}

impl Iterator for HomIter<'_> {
    type Item = VertexMap;

    fn next(&mut self) -> Option<VertexMap> {
        let n = self.plan.steps.len();
        if !self.started {
            self.started = true;
            if n == 0 {
                return Some(VertexMap::new_unchecked(Vec::new(), self.codomain));
            }
            let first = self.target.candidates(&self.plan.steps[0], &self.assign);
            self.pending.push(first);
        }
        while let Some(&mask) = self.pending.last() {
            let level = self.pending.len() - 1;
            if mask == 0 {
                self.pending.pop();
                continue;
            }
            let t = mask.trailing_zeros() as usize;
            *self.pending.last_mut().unwrap() = mask & (mask - 1);
            self.assign[level] = t;
            if level + 1 == n {
                return Some(VertexMap::new_unchecked(self.assign.clone(), self.codomain));
            }
            let next = self
                .target
                .candidates(&self.plan.steps[level + 1], &self.assign);
            self.pending.push(next);
        }
        None
    }
}

/// Membership test consistent with [`enumerate_homs`].
pub fn is_homomorphism(g: &Digraph, h: &Digraph, f: &VertexMap, mode: HomMode) -> Result<bool> {
    f.check_domain(g.n())?;
    if let Some((v, &t)) = f.image.iter().enumerate().find(|(_, &t)| t >= h.n()) {
        return Err(Error::ImageOutOfRange {
            v,
            image: t,
            codomain: h.n(),
        });
    }
    Ok(g.arcs().into_iter().all(|(u, v)| {
        let (a, b) = (f.get(u), f.get(v));
        match mode {
            HomMode::All => h.has_arc(a, b),
            HomMode::Strict => h.has_arc(a, b) && (u == v) == (a == b),
            HomMode::LoopsRemoved => u == v || (a != b && h.has_arc(a, b)),
        }
    }))
}
