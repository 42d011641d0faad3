use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{CoverageOracle, CutOracle, ModularOracle, ValueOracle};
use crate::{Error, Result};

/// Parameters for random instance generation. All generated values are
/// integers, so evaluations are exact in floating point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GeneratorParams {
    /// Element `v` covers each of `universe` items independently with probability `p`.
    Coverage { n: usize, universe: usize, p: f64 },
    /// Each vertex pair is joined with probability `edge_prob`; weights uniform in `1..=max_weight`.
    Cut {
        n: usize,
        edge_prob: f64,
        max_weight: u32,
    },
    /// Weights uniform in `0..=max_weight`.
    Modular { n: usize, max_weight: u32 },
}

impl GeneratorParams {
    pub fn n(&self) -> usize {
        match *self {
            Self::Coverage { n, .. } | Self::Cut { n, .. } | Self::Modular { n, .. } => n,
        }
    }

    fn validate(&self) -> Result<()> {
        let prob = |name: &str, p: f64| {
            if (0.0..=1.0).contains(&p) {
                Ok(())
            } else {
                Err(Error::Parameter(format!("{name} must lie in [0,1], got {p}")))
            }
        };
        match *self {
            Self::Coverage { universe, p, .. } => {
                if universe == 0 {
                    return Err(Error::Parameter("coverage universe must be non-empty".into()));
                }
                prob("p", p)
            }
            Self::Cut {
                edge_prob,
                max_weight,
                ..
            } => {
                if max_weight == 0 {
                    return Err(Error::Parameter("cut max_weight must be at least 1".into()));
                }
                prob("edge_prob", edge_prob)
            }
            Self::Modular { .. } => Ok(()),
        }
    }
}

/// Draws a random instance of the requested kind.
pub fn sample_random_instance<R: Rng + ?Sized>(params: &GeneratorParams, rng: &mut R) -> Result<ValueOracle> {
    params.validate()?;
    let oracle = match *params {
        GeneratorParams::Coverage { n, universe, p } => {
            let sets = (0..n)
                .map(|_| (0..universe).filter(|_| rng.gen::<f64>() < p).collect())
                .collect();
            ValueOracle::Coverage(CoverageOracle::new(sets))
        }
        GeneratorParams::Cut {
            n,
            edge_prob,
            max_weight,
        } => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen::<f64>() < edge_prob {
                        edges.push((u, v, f64::from(rng.gen_range(1..=max_weight))));
                    }
                }
            }
            ValueOracle::Cut(CutOracle::new(n, edges)?)
        }
        GeneratorParams::Modular { n, max_weight } => {
            let weights = (0..n).map(|_| f64::from(rng.gen_range(0..=max_weight))).collect();
            ValueOracle::Modular(ModularOracle::new(weights)?)
        }
    };
    Ok(oracle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{verify_nonnegative, verify_submodular, SetFunction};
    use crate::rng_for;

    #[test]
    fn coverage_shape() {
        let p = GeneratorParams::Coverage {
            n: 8,
            universe: 10,
            p: 0.3,
        };
        let o = sample_random_instance(&p, &mut rng_for(1, 0)).unwrap();
        assert_eq!(o.kind(), "coverage");
        assert_eq!(o.ground_size(), 8);
    }

    #[test]
    fn cut_weights_nonnegative() {
        let p = GeneratorParams::Cut {
            n: 6,
            edge_prob: 0.5,
            max_weight: 5,
        };
        let o = sample_random_instance(&p, &mut rng_for(2, 0)).unwrap();
        let ValueOracle::Cut(c) = &o else {
            panic!("expected cut")
        };
        assert!(c.edges().iter().all(|&(_, _, w)| (1.0..=5.0).contains(&w)));
        assert!(verify_nonnegative(&o).unwrap());
        assert!(verify_submodular(&o).unwrap());
    }

    #[test]
    fn seeded_calls_repeat() {
        let params = [
            GeneratorParams::Coverage {
                n: 5,
                universe: 7,
                p: 0.4,
            },
            GeneratorParams::Cut {
                n: 5,
                edge_prob: 0.7,
                max_weight: 3,
            },
            GeneratorParams::Modular { n: 5, max_weight: 9 },
        ];
        for p in &params {
            let a = sample_random_instance(p, &mut rng_for(11, 3)).unwrap();
            let b = sample_random_instance(p, &mut rng_for(11, 3)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rejects_bad_params() {
        let mut rng = rng_for(0, 0);
        for p in [
            GeneratorParams::Coverage {
                n: 3,
                universe: 0,
                p: 0.5,
            },
            GeneratorParams::Coverage {
                n: 3,
                universe: 4,
                p: 1.5,
            },
            GeneratorParams::Cut {
                n: 3,
                edge_prob: -0.1,
                max_weight: 2,
            },
            GeneratorParams::Cut {
                n: 3,
                edge_prob: 0.5,
                max_weight: 0,
            },
        ] {
            assert!(matches!(
                sample_random_instance(&p, &mut rng),
                Err(Error::Parameter(_))
            ));
        }
    }

    #[test]
    fn params_json() {
        let p: GeneratorParams =
            serde_json::from_str(r#"{"type":"cut","n":10,"edge_prob":0.4,"max_weight":5}"#).unwrap();
        assert_eq!(p.n(), 10);
    }
}
