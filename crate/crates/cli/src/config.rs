//! Parsing and validation of command-line values.

use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use constants::{HInf, HeightSpec, Omega};
use group_core::{builtin_group, conjugacy_classes, load_group, FiniteGroup, FrobeniusStructure};
use serde::Serialize;

/// A builtin name like `S3`, or a path to a JSON group description.
pub fn group(spec: &str) -> Result<FiniteGroup> {
    if spec.ends_with(".json") || Path::new(spec).is_file() {
        load_group(Path::new(spec)).with_context(|| format!("--group: cannot load {spec}"))
    } else {
        builtin_group(spec).with_context(|| format!("--group: {spec}"))
    }
}

fn ints<T: std::str::FromStr>(field: &str, s: &str) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .enumerate()
        .map(|(i, x)| x.trim().parse::<T>().map_err(|e| anyhow::anyhow!("{field}: entry {} ({x:?}): {e}", i + 1)))
        .collect()
}

pub fn list_u64(field: &str, s: &str) -> Result<Vec<u64>> {
    ints(field, s)
}

pub fn list_usize(field: &str, s: &str) -> Result<Vec<usize>> {
    ints(field, s)
}

/// `all` or class indices; returns sorted class ids.
pub fn classes(g: &FiniteGroup, s: &str) -> Result<Vec<usize>> {
    let ct = conjugacy_classes(g);
    let id = ct.class_of[g.identity()];
    if s == "all" {
        return Ok((0..ct.len()).filter(|&c| c != id).collect());
    }
    let mut v = list_usize("--classes", s)?;
    for &c in &v {
        ensure!(c < ct.len(), "--classes: class {c} out of range (G has {} classes)", ct.len());
        ensure!(c != id, "--classes: class {c} is the identity");
    }
    v.sort_unstable();
    v.dedup();
    ensure!(!v.is_empty(), "--classes: empty selection");
    Ok(v)
}

/// Per-class weights: `v1,v2,…` for classes 1.. in order, or `c:v,…` pairs.
/// Entry 0 of the result (the identity class) is 0.
pub fn weights(frob: &FrobeniusStructure, s: &str) -> Result<Vec<u64>> {
    let k = frob.classes.len();
    let mut f = vec![0u64; k];
    if s.contains(':') {
        let mut seen = vec![false; k];
        for (i, part) in s.split(',').enumerate() {
            let (c, v) = part.split_once(':').with_context(|| format!("--f: entry {} ({part:?}) is not class:value", i + 1))?;
            let c: usize = c.trim().parse().with_context(|| format!("--f: entry {}: bad class {c:?}", i + 1))?;
            let v: u64 = v.trim().parse().with_context(|| format!("--f: entry {}: bad value {v:?}", i + 1))?;
            ensure!((1..k).contains(&c), "--f: entry {}: class {c} out of range 1..{}", i + 1, k - 1);
            f[c] = v;
            seen[c] = true;
        }
        if let Some(c) = (1..k).find(|&c| !seen[c]) {
            bail!("--f: no value for class {c}");
        }
    } else {
        let v = list_u64("--f", s)?;
        ensure!(v.len() == k - 1, "--f: expected {} values (one per nontrivial class), got {}", k - 1, v.len());
        f[1..].copy_from_slice(&v);
    }
    Ok(f)
}

/// `a..b` (inclusive), `a..=b`, or a single value.
pub fn range(field: &str, s: &str) -> Result<Vec<u64>> {
    let parse = |x: &str| x.trim().parse::<u64>().with_context(|| format!("{field}: bad bound {x:?}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let a = parse(s)?;
            (a, a)
        }
    };
    ensure!(a <= b, "{field}: empty range {s}");
    Ok((a..=b).collect())
}

pub fn h_inf(s: &str) -> Result<HInf> {
    Ok(match s {
        "weight" => HInf::Weight,
        "zero" => HInf::Zero,
        _ => match s.strip_prefix("per:") {
            Some(v) => HInf::PerClass(list_u64("--h-inf", v)?),
            None => bail!("--h-inf: expected weight, zero or per:v0,v1,…; got {s:?}"),
        },
    })
}

/// `all`, `unramified`, `gamma:c1,c2` or `points:s/g;s/g`.
pub fn omega(s: &str) -> Result<Omega> {
    if s == "all" {
        return Ok(Omega::All);
    }
    if s == "unramified" {
        return Ok(Omega::Unramified);
    }
    if let Some(v) = s.strip_prefix("gamma:") {
        return Ok(Omega::GammaClasses(list_usize("--omega", v)?));
    }
    if let Some(v) = s.strip_prefix("points:") {
        let pts = v
            .split(';')
            .map(|p| {
                let (a, b) = p.split_once('/').with_context(|| format!("--omega: point {p:?} is not sigma/gamma"))?;
                Ok((a.trim().parse()?, b.trim().parse()?))
            })
            .collect::<Result<Vec<(usize, usize)>>>()?;
        return Ok(Omega::Points(pts));
    }
    bail!("--omega: expected all, unramified, gamma:… or points:…; got {s:?}")
}

pub fn height(g: &FiniteGroup, h: &str, o: &str) -> Result<HeightSpec> {
    let h_inf = h_inf(h)?;
    if let HInf::PerClass(v) = &h_inf {
        let k = conjugacy_classes(g).len();
        ensure!(v.len() == k, "--h-inf: per: needs {k} values, got {}", v.len());
    }
    let omega = omega(o)?;
    match &omega {
        Omega::Points(p) => {
            for &(a, b) in p {
                ensure!(a < g.order() && b < g.order(), "--omega: element out of range in {a}/{b}");
            }
        }
        Omega::GammaClasses(c) => {
            let k = conjugacy_classes(g).len();
            ensure!(c.iter().all(|&x| x < k), "--omega: class out of range");
        }
        _ => {}
    }
    Ok(HeightSpec { h_inf, omega })
}

/// Everything the run depended on, echoed into the report.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RunConfig {
    pub group: Option<String>,
    pub group_order: Option<usize>,
    pub q: Option<u64>,
    pub twist: Option<usize>,
    pub classes: Option<Vec<usize>>,
    pub f: Option<Vec<u64>>,
    pub height: Option<HeightSpec>,
    pub d: Option<Vec<u64>>,
    pub nbar: Option<Vec<usize>>,
    pub gamma: Option<usize>,
    pub cutoff: Option<u64>,
    pub budget: u128,
}
