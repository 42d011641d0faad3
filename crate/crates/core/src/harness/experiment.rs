use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{simulate, Execution};
use crate::algorithm::{brute_force_opt, offline_greedy};
use crate::oracles::{sample_random_instance, GeneratorParams, SetFunction, ValueOracle};
use crate::{rng_for, Error, Result};

pub const CSV_HEADER: [&str; 10] = [
    "instance_id",
    "n",
    "k",
    "trials",
    "mean_value",
    "stderr",
    "opt_value",
    "greedy_value",
    "ratio",
    "mean_oracle_calls",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    #[default]
    SubmodularSecretary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Baseline {
    BruteForceOpt,
    OfflineGreedy,
}

/// Where an instance comes from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceSource {
    /// Inline instance in the instance-file schema.
    Instance(ValueOracle),
    /// Path to an instance file; relative paths resolve against the config file.
    File(PathBuf),
    /// Random instance drawn from `rng_for(seed, 0)`.
    Generate {
        #[serde(flatten)]
        params: GeneratorParams,
        #[serde(default)]
        seed: u64,
    },
}

impl InstanceSource {
    pub fn materialize(&self) -> Result<ValueOracle> {
        match self {
            Self::Instance(o) => Ok(o.clone()),
            Self::File(path) => ValueOracle::load(path),
            Self::Generate { params, seed } => sample_random_instance(params, &mut rng_for(*seed, 0)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    /// Overrides the experiment-wide `k`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(flatten)]
    pub source: InstanceSource,
}

/// Experiment description, read from JSON:
///
/// ```json
/// {
///   "k": 2, "trials": 50000, "seed": 0,
///   "algorithm": "submodular-secretary",
///   "baselines": ["brute-force-opt", "offline-greedy"],
///   "instances": [
///     {"id": "m", "instance": {"type": "modular", "weights": [5]}, "k": 1},
///     {"file": "cut.json"},
///     {"generate": {"type": "coverage", "n": 12, "universe": 20, "p": 0.2, "seed": 1}}
///   ]
/// }
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub instances: Vec<InstanceEntry>,
    pub k: usize,
    pub trials: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub algorithm: Algorithm,
    #[serde(default)]
    pub baselines: Vec<Baseline>,
    #[serde(default = "default_parallel")]
    pub parallel: bool,
}

fn default_parallel() -> bool {
    true
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parameter(format!("config: {e}")))
    }

    /// Reads a config file, resolving relative instance paths against its directory.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let input_err = |message: String| Error::Input {
            path: path.to_path_buf(),
            message,
        };
        let text = fs::read_to_string(path).map_err(|e| input_err(e.to_string()))?;
        let mut config: Self = serde_json::from_str(&text).map_err(|e| input_err(e.to_string()))?;
        let dir = path.parent().unwrap_or(Path::new(""));
        for entry in &mut config.instances {
            if let InstanceSource::File(file) = &mut entry.source {
                if file.is_relative() {
                    *file = dir.join(&*file);
                }
            }
        }
        Ok(config)
    }

    fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Parameter("trials must be at least 1".into()));
        }
        if self.k == 0 || self.instances.iter().any(|e| e.k == Some(0)) {
            return Err(Error::Parameter("k must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub instance_id: String,
    pub n: usize,
    pub k: usize,
    pub trials: u64,
    pub mean_value: f64,
    pub stderr: f64,
    pub opt_value: Option<f64>,
    pub greedy_value: Option<f64>,
    /// `mean_value / opt_value`, present when the optimum was computed and is positive.
    pub ratio: Option<f64>,
    pub mean_oracle_calls: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct Report {
    pub rows: Vec<ReportRow>,
}

/// Runs every instance of the config; rows follow the input order.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Report> {
    config.validate()?;
    let execution = if config.parallel {
        Execution::Parallel
    } else {
        Execution::Serial
    };
    let mut rows = Vec::with_capacity(config.instances.len());
    for (i, entry) in config.instances.iter().enumerate() {
        let oracle = entry.source.materialize()?;
        let k = entry.k.unwrap_or(config.k);
        let opt_value = if config.baselines.contains(&Baseline::BruteForceOpt) {
            Some(brute_force_opt(&oracle, k)?.value)
        } else {
            None
        };
        let greedy_value = config
            .baselines
            .contains(&Baseline::OfflineGreedy)
            .then(|| offline_greedy(&oracle, k).value);
        let sim = simulate(&oracle, k, config.trials, config.seed, execution)?;
        let summary = sim.summary();
        rows.push(ReportRow {
            instance_id: entry.id.clone().unwrap_or_else(|| format!("instance-{i}")),
            n: oracle.ground_size(),
            k,
            trials: config.trials,
            mean_value: summary.mean,
            stderr: summary.stderr,
            opt_value,
            greedy_value,
            ratio: opt_value.filter(|&o| o > 0.0).map(|o| summary.mean / o),
            mean_oracle_calls: sim.mean_oracle_calls(),
        });
    }
    Ok(Report { rows })
}

/// Formats like C's `%g`: six significant digits, trailing zeros dropped,
/// scientific notation outside `[1e-4, 1e6)`.
pub fn format_sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let trim = |s: &str| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s.to_string()
        }
    };
    if !(-4..6).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim(mantissa), exp.abs())
    } else {
        trim(&format!("{:.*}", (5 - exp) as usize, x))
    }
}

impl Report {
    pub fn to_csv(&self) -> Vec<u8> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let opt = |v: Option<f64>| v.map(format_sig6).unwrap_or_default();
        w.write_record(CSV_HEADER).expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.instance_id.clone(),
                r.n.to_string(),
                r.k.to_string(),
                r.trials.to_string(),
                format_sig6(r.mean_value),
                format_sig6(r.stderr),
                opt(r.opt_value),
                opt(r.greedy_value),
                opt(r.ratio),
                format_sig6(r.mean_oracle_calls),
            ])
            .expect("in-memory write");
        }
        w.into_inner().expect("in-memory flush")
    }
}

pub fn write_csv(report: &Report, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, report.to_csv()).map_err(|e| Error::Write {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}
