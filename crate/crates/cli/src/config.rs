use std::path::PathBuf;

use minorlink::connectivity::Lambda;
use minorlink::extremal::ComponentSpec;
use minorlink::minor::MAX_ROOTS;
use minorlink::VertexId;

use crate::HarnessError;

/// How many root subsets each sampled graph contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetPlan {
    Random(usize),
    All,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TheoremConfig {
    pub connectivity: usize,
    pub n_range: (usize, usize),
    pub graphs: usize,
    pub subsets: SubsetPlan,
    pub k: usize,
    pub seed: u64,
    /// Fixed graph6 inputs used instead of sampling.
    pub inputs: Vec<PathBuf>,
    /// Directory receiving falsifier artifacts.
    pub archive: Option<PathBuf>,
    pub max_attempts: usize,
    pub timing: bool,
}

impl Default for TheoremConfig {
    fn default() -> Self {
        TheoremConfig {
            connectivity: 10,
            n_range: (12, 16),
            graphs: 50,
            subsets: SubsetPlan::Random(3),
            k: 5,
            seed: 0,
            inputs: Vec::new(),
            archive: None,
            max_attempts: 100_000,
            timing: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub corpus: Option<PathBuf>,
    pub ks: Vec<usize>,
    /// Extra random instances checked after the corpus.
    pub random: usize,
    pub random_n: (usize, usize),
    pub random_k: usize,
    pub seed: u64,
    pub timing: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { corpus: None, ks: vec![3, 4], random: 0, random_n: (7, 9), random_k: 5, seed: 0, timing: true }
    }
}

/// One fully specified run of the harness.
#[derive(Clone, Debug, PartialEq)]
pub enum ExperimentConfig {
    Check { input: PathBuf, order: Vec<VertexId> },
    CycleLinked { input: PathBuf, roots: Vec<VertexId> },
    Massed { input: PathBuf, roots: Vec<VertexId>, lambda: Lambda },
    Solve { input: PathBuf, roots: Vec<VertexId>, explain: bool },
    GenExtremal { spec: Vec<ComponentSpec>, output: PathBuf },
    VerifyTheorem(TheoremConfig),
    OracleSweep(SweepConfig),
}

fn bad(msg: impl Into<String>) -> HarnessError {
    HarnessError::Config(msg.into())
}

fn check_k(k: usize) -> Result<(), HarnessError> {
    if !(2..=MAX_ROOTS).contains(&k) {
        return Err(bad(format!("k = {k} is outside 2..={MAX_ROOTS}")));
    }
    Ok(())
}

fn check_range((lo, hi): (usize, usize), what: &str) -> Result<(), HarnessError> {
    if lo == 0 || lo > hi {
        return Err(bad(format!("{what} range {lo}:{hi} is empty")));
    }
    Ok(())
}

impl ExperimentConfig {
    pub fn mode(&self) -> &'static str {
        match self {
            ExperimentConfig::Check { .. } => "check",
            ExperimentConfig::CycleLinked { .. } => "cycle-linked",
            ExperimentConfig::Massed { .. } => "massed",
            ExperimentConfig::Solve { .. } => "solve",
            ExperimentConfig::GenExtremal { .. } => "gen-extremal",
            ExperimentConfig::VerifyTheorem(_) => "verify-theorem",
            ExperimentConfig::OracleSweep(_) => "oracle-sweep",
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        match self {
            ExperimentConfig::Check { order: roots, .. }
            | ExperimentConfig::CycleLinked { roots, .. }
            | ExperimentConfig::Massed { roots, .. }
            | ExperimentConfig::Solve { roots, .. } => {
                if roots.is_empty() {
                    return Err(bad(format!("{} needs at least one root", self.mode())));
                }
            }
            ExperimentConfig::GenExtremal { .. } => {}
            ExperimentConfig::VerifyTheorem(c) => {
                if c.connectivity == 0 {
                    return Err(bad("connectivity threshold must be at least 1"));
                }
                check_k(c.k)?;
                if c.inputs.is_empty() {
                    check_range(c.n_range, "n")?;
                    if c.n_range.0 < c.k {
                        return Err(bad(format!("n must be at least k = {}", c.k)));
                    }
                }
                if c.subsets == SubsetPlan::Random(0) {
                    return Err(bad("at least one subset per graph is required"));
                }
            }
            ExperimentConfig::OracleSweep(c) => {
                if c.corpus.is_none() && c.random == 0 {
                    return Err(bad("oracle-sweep needs a corpus or random instances"));
                }
                for &k in &c.ks {
                    check_k(k)?;
                }
                if c.random > 0 {
                    check_k(c.random_k)?;
                    check_range(c.random_n, "random n")?;
                    if c.random_n.0 < c.random_k {
                        return Err(bad("random n must be at least the random k"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Parses `"lo:hi"` (or a single value).
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad number {t:?}: {e}"));
    match s.split_once(':') {
        Some((a, b)) => Ok((num(a)?, num(b)?)),
        None => num(s).map(|v| (v, v)),
    }
}

pub fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String>
where
    T::Err: std::fmt::Display,
{
    s.split(',').filter(|t| !t.trim().is_empty()).map(|t| t.trim().parse::<T>().map_err(|e| format!("{t:?}: {e}"))).collect()
}

/// `"1:3,2:3"` means a component attached at index 1 with 3 vertices and one
/// at index 2 with 3 vertices. A bare index gets a triangle; the empty string
/// is the empty spec.
pub fn parse_spec(s: &str) -> Result<Vec<ComponentSpec>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (i, size) = match t.split_once(':') {
                Some((i, size)) => (i, size.parse::<usize>().map_err(|e| format!("{t:?}: {e}"))?),
                None => (t, 3),
            };
            let attachment = i.parse::<usize>().map_err(|e| format!("{t:?}: {e}"))?;
            Ok(ComponentSpec { attachment, size })
        })
        .collect()
}
