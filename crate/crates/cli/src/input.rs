//! Loading digraphs, specs, and vertex maps from the command line.

use std::path::Path;

use gammahom::hom::VertexMap;
use gammahom::known;
use gammahom::rearrange::RearrangementSpec;
use gammahom::{Digraph, Error, Result};

/// A JSON file, or one of the built-in names `a1`, `c2`, `a2r`, `chain-K`,
/// `antichain-K`, `pentagon-r`, `pentagon-t`.
pub fn digraph(arg: &str) -> Result<Digraph> {
    if Path::new(arg).is_file() {
        return Digraph::from_json(&read(arg)?);
    }
    builtin(&arg.to_ascii_lowercase())
        .ok_or_else(|| Error::Parse(format!("`{arg}` is neither a readable file nor a known digraph name")))
}

fn builtin(name: &str) -> Option<Digraph> {
    let sized = |prefix: &str| -> Option<usize> {
        name.strip_prefix(prefix)?.parse().ok().filter(|&k| (1..=64).contains(&k))
    };
    Some(match name {
        "a1" => known::a1(),
        "c2" => known::c2(),
        "a2r" => known::a2r(),
        "pentagon-r" => known::pentagon_r(),
        "pentagon-t" => known::pentagon_t(),
        _ => {
            if let Some(k) = sized("chain-") {
                known::chain(k)
            } else {
                known::antichain(sized("antichain-")?)
            }
        }
    })
}

/// A spec file, or `pentagon` / `three-vertex`.
pub fn spec(arg: &str) -> Result<RearrangementSpec> {
    if Path::new(arg).is_file() {
        return RearrangementSpec::from_json(&read(arg)?);
    }
    match arg.to_ascii_lowercase().as_str() {
        "pentagon" => Ok(known::pentagon_spec()),
        "three-vertex" => Ok(known::three_vertex_spec()),
        _ => Err(Error::Parse(format!("`{arg}` is neither a readable file nor a known spec name"))),
    }
}

/// Comma-separated images, e.g. `0,0,1`.
pub fn vertex_map(arg: &str, codomain: usize) -> Result<VertexMap> {
    let image = arg
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad map entry `{t}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    VertexMap::new(image, codomain)
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
}
