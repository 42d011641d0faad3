use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{ElementSet, SetFunction};
use crate::{Error, Result};

/// Coverage function: element `v` covers the universe items `sets[v]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CoverageRepr", into = "CoverageRepr")]
pub struct CoverageOracle {
    sets: Vec<Vec<usize>>,
    universe: usize,
}

#[derive(Serialize, Deserialize)]
struct CoverageRepr {
    sets: Vec<Vec<usize>>,
}

impl CoverageOracle {
    pub fn new(sets: Vec<Vec<usize>>) -> Self {
        let sets: Vec<Vec<usize>> = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        let universe = sets.iter().filter_map(|s| s.last()).max().map_or(0, |m| m + 1);
        Self { sets, universe }
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// One past the largest universe item referenced.
    pub fn universe_size(&self) -> usize {
        self.universe
    }
}

impl TryFrom<CoverageRepr> for CoverageOracle {
    type Error = Error;

    fn try_from(r: CoverageRepr) -> Result<Self> {
        Ok(Self::new(r.sets))
    }
}

impl From<CoverageOracle> for CoverageRepr {
    fn from(o: CoverageOracle) -> Self {
        Self { sets: o.sets }
    }
}

impl SetFunction for CoverageOracle {
    fn ground_size(&self) -> usize {
        self.sets.len()
    }

    fn value(&self, set: &ElementSet) -> f64 {
        let mut covered = vec![false; self.universe];
        let mut count = 0usize;
        for v in set.iter() {
            for &item in &self.sets[v] {
                if !covered[item] {
                    covered[item] = true;
                    count += 1;
                }
            }
        }
        count as f64
    }
}

/// Weighted cut function of an undirected graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CutRepr", into = "CutRepr")]
pub struct CutOracle {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
}

#[derive(Serialize, Deserialize)]
struct CutRepr {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
}

impl CutOracle {
    /// Edge weights must be finite and non-negative; self-loops are rejected.
    pub fn new(n: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        for &(u, v, w) in &edges {
            if u >= n || v >= n {
                return Err(Error::Parameter(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Parameter(format!("self-loop at vertex {u}")));
            }
            if !w.is_finite() || w < 0.0 {
                return Err(Error::Parameter(format!("edge ({u},{v}) has weight {w}")));
            }
        }
        Ok(Self { n, edges })
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }
}

impl TryFrom<CutRepr> for CutOracle {
    type Error = Error;

    fn try_from(r: CutRepr) -> Result<Self> {
        Self::new(r.n, r.edges)
    }
}

impl From<CutOracle> for CutRepr {
    fn from(o: CutOracle) -> Self {
        Self {
            n: o.n,
            edges: o.edges,
        }
    }
}

impl SetFunction for CutOracle {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn value(&self, set: &ElementSet) -> f64 {
        let mut inside = vec![false; self.n];
        for v in set.iter() {
            inside[v] = true;
        }
        self.edges
            .iter()
            .filter(|&&(u, v, _)| inside[u] != inside[v])
            .fold(0.0, |acc, &(_, _, w)| acc + w)
    }
}

/// Additive function with non-negative per-element weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ModularRepr", into = "ModularRepr")]
pub struct ModularOracle {
    weights: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct ModularRepr {
    weights: Vec<f64>,
}

impl ModularOracle {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if let Some((i, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !w.is_finite() || **w < 0.0)
        {
            return Err(Error::Parameter(format!("element {i} has weight {w}")));
        }
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

impl TryFrom<ModularRepr> for ModularOracle {
    type Error = Error;

    fn try_from(r: ModularRepr) -> Result<Self> {
        Self::new(r.weights)
    }
}

impl From<ModularOracle> for ModularRepr {
    fn from(o: ModularOracle) -> Self {
        Self { weights: o.weights }
    }
}

impl SetFunction for ModularOracle {
    fn ground_size(&self) -> usize {
        self.weights.len()
    }

    fn value(&self, set: &ElementSet) -> f64 {
        set.iter().fold(0.0, |acc, v| acc + self.weights[v])
    }
}

/// Any of the shipped oracle kinds. The JSON form is tagged by `"type"`:
///
/// ```json
/// {"type":"coverage","sets":[[0,1],[1,2]]}
/// {"type":"cut","n":3,"edges":[[0,1,2.0],[1,2,1.0]]}
/// {"type":"modular","weights":[3,1,2]}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ValueOracle {
    Coverage(CoverageOracle),
    Cut(CutOracle),
    Modular(ModularOracle),
}

impl ValueOracle {
    pub fn coverage(sets: Vec<Vec<usize>>) -> Self {
        Self::Coverage(CoverageOracle::new(sets))
    }

    pub fn cut(n: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        CutOracle::new(n, edges).map(Self::Cut)
    }

    pub fn modular(weights: Vec<f64>) -> Result<Self> {
        ModularOracle::new(weights).map(Self::Modular)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Coverage(_) => "coverage",
            Self::Cut(_) => "cut",
            Self::Modular(_) => "modular",
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parameter(format!("instance: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("oracle serialization cannot fail")
    }

    /// Reads an instance file.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::Input {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        serde_json::from_str(&text).map_err(|e| Error::Input {
            path: path.to_path_buf(),
            message: e.to_string(),
        })
    }
}

impl SetFunction for ValueOracle {
    fn ground_size(&self) -> usize {
        match self {
            Self::Coverage(o) => o.ground_size(),
            Self::Cut(o) => o.ground_size(),
            Self::Modular(o) => o.ground_size(),
        }
    }

    fn value(&self, set: &ElementSet) -> f64 {
        match self {
            Self::Coverage(o) => o.value(set),
            Self::Cut(o) => o.value(set),
            Self::Modular(o) => o.value(set),
        }
    }
}

impl fmt::Display for ValueOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.kind(), self.ground_size())
    }
}

/// Set function given by a closure, for synthetic objectives.
pub struct FnSetFunction<F> {
    n: usize,
    f: F,
}

impl<F: Fn(&ElementSet) -> f64 + Sync> FnSetFunction<F> {
    pub fn new(n: usize, f: F) -> Self {
        Self { n, f }
    }
}

impl<F: Fn(&ElementSet) -> f64 + Sync> SetFunction for FnSetFunction<F> {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn value(&self, set: &ElementSet) -> f64 {
        (self.f)(set)
    }
}

/// `f(S) + offset`. Shifting preserves submodularity and makes `f(∅)` non-zero.
#[derive(Debug, Clone)]
pub struct Shifted<F> {
    pub inner: F,
    pub offset: f64,
}

impl<F: SetFunction> Shifted<F> {
    pub fn new(inner: F, offset: f64) -> Self {
        Self { inner, offset }
    }
}

impl<F: SetFunction> SetFunction for Shifted<F> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn value(&self, set: &ElementSet) -> f64 {
        self.inner.value(set) + self.offset
    }
}
