use serde::Serialize;

/// Sum by recursive halving; the result depends only on the slice order.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    const LEAF: usize = 32;
    if values.len() <= LEAF {
        return values.iter().sum();
    }
    let (left, right) = values.split_at(values.len() / 2);
    pairwise_sum(left) + pairwise_sum(right)
}

/// Sample mean with its standard error `s/√n` (`s` the unbiased standard deviation).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Summary {
    pub count: usize,
    pub mean: f64,
    pub stderr: f64,
}

impl Summary {
    pub fn of(values: &[f64]) -> Self {
        let count = values.len();
        if count == 0 {
            return Self {
                count,
                mean: f64::NAN,
                stderr: f64::NAN,
            };
        }
        let mean = pairwise_sum(values) / count as f64;
        if count == 1 {
            return Self {
                count,
                mean,
                stderr: 0.0,
            };
        }
        let squares: Vec<f64> = values.iter().map(|v| (v - mean) * (v - mean)).collect();
        let variance = pairwise_sum(&squares) / (count - 1) as f64;
        Self {
            count,
            mean,
            stderr: (variance / count as f64).sqrt(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_matches_naive_on_integers() {
        let v: Vec<f64> = (0..1000).map(f64::from).collect();
        assert_eq!(pairwise_sum(&v), 499_500.0);
    }

    #[test]
    fn summary_known_values() {
        let s = Summary::of(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(s.mean, 2.5);
        // s² = 5/3, stderr = sqrt(5/12)
        assert!((s.stderr - (5.0f64 / 12.0).sqrt()).abs() < 1e-15);
        assert_eq!(Summary::of(&[7.0]).stderr, 0.0);
        assert!(Summary::of(&[]).mean.is_nan());
    }

    #[test]
    fn constant_sample_is_exact() {
        let s = Summary::of(&vec![3.0; 100_000]);
        assert_eq!(s.mean, 3.0);
        assert_eq!(s.stderr, 0.0);
    }
}
