//! Canonical forms, isomorphism tests, and generation of one representative
//! per isomorphism class for bounded class specifications.
//!
//! The canonical form of a digraph on `n` vertices is the lexicographically
//! smallest row-major adjacency-matrix bit string over all `n!` relabellings,
//! packed into a `u64` with the first matrix entry as the most significant bit.
//! Representatives are the relabellings realizing that minimum, listed by
//! `(n, code)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::class::{is_member, ClassKind, ClassSpec};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by the permutation-exhaustive canonical form.
pub const CANONICAL_MAX_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    n: usize,
    code: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn code(&self) -> u64 {
        self.code
    }
}

/// Canonical form together with a relabelling `perm` (vertex `v` becomes
/// `perm[v]`) that turns `g` into the canonical representative.
pub fn canonical_labeling(g: &Digraph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > CANONICAL_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: CANONICAL_MAX_N,
        });
    }
    let rows: Vec<u64> = (0..n).map(|v| g.out_set(v).bits()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = (encode(&rows, &order), order.clone());
    // Heap's algorithm, iterative form
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(c[i], i);
            }
            let code = encode(&rows, &order);
            if code < best.0 {
                best = (code, order.clone());
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    let (code, order) = best;
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((CanonicalForm { n, code }, perm))
}

/// `order[i]` is the original vertex placed at position `i`.
fn encode(rows: &[u64], order: &[usize]) -> u64 {
    let mut code = 0u64;
    for &u in order {
        let row = rows[u];
        for &v in order {
            code = code << 1 | (row >> v & 1);
        }
    }
    code
}

pub fn canonical_form(g: &Digraph) -> Result<CanonicalForm> {
    Ok(canonical_labeling(g)?.0)
}

pub fn canonical_relabel(g: &Digraph) -> Result<Digraph> {
    let (_, perm) = canonical_labeling(g)?;
    Ok(g.relabel(&perm))
}

pub fn is_isomorphic(g: &Digraph, h: &Digraph) -> Result<bool> {
    if g.n() != h.n() || g.arc_count() != h.arc_count() {
        // still validate sizes so oversized inputs are reported consistently
        canonical_form(g)?;
        canonical_form(h)?;
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Per-kind vertex caps for catalog generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    caps: [usize; 6],
}

/// Environment variable overriding every default cap (still clamped to the hard caps).
pub const MAX_N_ENV: &str = "GAMMAHOM_MAX_N";

impl Budget {
    /// Digraphs 4, Ta 4, posets 5, strict posets 5, undirected 4, odd-cycle-free 4.
    pub fn defaults() -> Self {
        Budget {
            caps: [4, 4, 5, 5, 4, 4],
        }
    }

    /// Upper limits no configuration may exceed.
    pub fn hard_caps() -> Self {
        Budget {
            caps: [4, 4, 6, 6, 5, 5],
        }
    }

    /// Defaults, overridden by `GAMMAHOM_MAX_N` when set to a positive integer.
    pub fn from_env() -> Self {
        match std::env::var(MAX_N_ENV).ok().and_then(|s| s.trim().parse::<usize>().ok()) {
            Some(n) if n > 0 => Budget::uniform(n),
            _ => Budget::defaults(),
        }
    }

    /// Every kind capped at `n`, clamped to the hard caps.
    pub fn uniform(n: usize) -> Self {
        let hard = Budget::hard_caps();
        Budget {
            caps: hard.caps.map(|c| c.min(n)),
        }
    }

    pub fn cap(&self, kind: ClassKind) -> usize {
        self.caps[index(kind)]
    }

    pub fn check(&self, c: &ClassSpec) -> Result<()> {
        if c.max_vertices == 0 {
            return Err(Error::InvalidClassSpec("max_vertices must be positive".into()));
        }
        let cap = self.cap(c.kind);
        if c.max_vertices > cap {
            return Err(Error::BoundTooLarge {
                kind: c.kind,
                requested: c.max_vertices,
                cap,
            });
        }
        Ok(())
    }
}

fn index(kind: ClassKind) -> usize {
    ClassKind::ALL.iter().position(|&k| k == kind).unwrap()
}

/// Representatives of `c` under the environment budget.
pub fn generate(c: &ClassSpec) -> Result<Vec<Digraph>> {
    generate_with_budget(c, &Budget::from_env())
}

pub fn generate_with_budget(c: &ClassSpec, budget: &Budget) -> Result<Vec<Digraph>> {
    budget.check(c)?;
    let mut out = Vec::new();
    for n in 1..=c.max_vertices {
        out.extend(
            level(c.kind, n)
                .iter()
                .filter(|g| is_member(g, c))
                .cloned(),
        );
    }
    Ok(out)
}

type LevelCache = Mutex<HashMap<(ClassKind, usize), Arc<Vec<Digraph>>>>;

fn cache() -> &'static LevelCache {
    static CACHE: OnceLock<LevelCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Representatives of `kind` with exactly `n` vertices, in canonical order.
fn level(kind: ClassKind, n: usize) -> Arc<Vec<Digraph>> {
    if let Some(hit) = cache().lock().unwrap().get(&(kind, n)) {
        return Arc::clone(hit);
    }
    let built = Arc::new(build_level(kind, n));
    cache()
        .lock()
        .unwrap()
        .entry((kind, n))
        .or_insert(built)
        .clone()
}

/// All classes here are closed under induced subgraphs, so every member on
/// `n` vertices extends some representative on `n - 1` vertices.
fn build_level(kind: ClassKind, n: usize) -> Vec<Digraph> {
    let parents: Vec<Digraph> = if n == 1 {
        vec![Digraph::empty()]
    } else {
        level(kind, n - 1).as_ref().clone()
    };
    let old = n - 1;
    let pattern_bits = if kind.is_symmetric_kind() {
        1 + old
    } else {
        1 + 2 * old
    };
    let mut found: Vec<(CanonicalForm, Digraph)> = parents
        .par_iter()
        .flat_map_iter(|p| {
            (0u64..1 << pattern_bits).filter_map(move |pattern| {
                let g = extend(p, pattern, kind.is_symmetric_kind());
                if !kind.contains(&g) {
                    return None;
                }
                let (form, perm) = canonical_labeling(&g).expect("catalog sizes are within the canonical cap");
                Some((form, g.relabel(&perm)))
            })
        })
        .collect();
    found.sort_unstable_by_key(|(f, _)| *f);
    found.dedup_by_key(|(f, _)| *f);
    found.into_iter().map(|(_, g)| g).collect()
}

/// Adds vertex `old` to `p`. Bit 0 of `pattern` is the loop; then either one
/// bit per old vertex (symmetric edges) or out-bits followed by in-bits.
fn extend(p: &Digraph, pattern: u64, symmetric: bool) -> Digraph {
    let old = p.n();
    let mut rows: Vec<u64> = (0..old).map(|v| p.out_set(v).bits()).collect();
    let mut new_row = pattern & 1;
    new_row <<= old;
    let outs = pattern >> 1 & ((1u64 << old) - 1);
    let ins = if symmetric {
        outs
    } else {
        pattern >> (1 + old) & ((1u64 << old) - 1)
    };
    new_row |= outs;
    for (v, row) in rows.iter_mut().enumerate() {
        if ins >> v & 1 == 1 {
            *row |= 1 << old;
        }
    }
    rows.push(new_row);
    Digraph::from_out_rows(rows)
}

/// One compact JSON digraph per line.
pub fn export_jsonl(catalog: &[Digraph]) -> String {
    let mut s = String::new();
    for g in catalog {
        s.push_str(&g.to_json());
        s.push('\n');
    }
    s
}

/// Parses a catalog export, checking class membership, that every entry is
/// its own canonical representative, and strictly increasing canonical order.
pub fn import_jsonl(text: &str, c: &ClassSpec) -> Result<Vec<Digraph>> {
    let mut out = Vec::new();
    let mut prev: Option<CanonicalForm> = None;
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let line_no = i + 1;
        let fail = |reason: String| Error::CatalogImport {
            line: line_no,
            reason,
        };
        let g = Digraph::from_json(line).map_err(|e| fail(e.to_string()))?;
        if !is_member(&g, c) {
            return Err(fail(format!("not a member of {c}")));
        }
        let (form, perm) = canonical_labeling(&g).map_err(|e| fail(e.to_string()))?;
        if g.relabel(&perm) != g {
            return Err(fail("entry is not in canonical labelling".into()));
        }
        if prev.is_some_and(|p| p >= form) {
            return Err(fail("entries are not in strictly increasing canonical order".into()));
        }
        prev = Some(form);
        out.push(g);
    }
    Ok(out)
}
