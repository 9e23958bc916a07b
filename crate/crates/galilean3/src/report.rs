//! Verification reports: a sampled grid, per-point deviations and a
//! pass/fail verdict against a tolerance.

use std::collections::BTreeMap;

/// One grid point's deviation, plus named auxiliary values.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub s: f64,
    pub deviation: f64,
    pub extra: BTreeMap<String, f64>,
}

impl Sample {
    pub fn new(s: f64, deviation: f64) -> Self {
        Self {
            s,
            deviation,
            extra: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: f64) -> Self {
        self.extra.insert(key.to_string(), value);
        self
    }
}

/// Outcome of one verification run. `pass` holds exactly when
/// `max_abs_deviation <= tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub theorem_id: String,
    pub grid: Vec<f64>,
    pub samples: Vec<Sample>,
    pub max_abs_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub notes: String,
}

impl CheckReport {
    pub fn new(
        theorem_id: &str,
        grid: Vec<f64>,
        samples: Vec<Sample>,
        tolerance: f64,
        notes: String,
    ) -> Self {
        let max_abs_deviation = samples
            .iter()
            .map(|s| s.deviation.abs())
            .fold(0.0, f64::max);
        Self {
            theorem_id: theorem_id.to_string(),
            grid,
            samples,
            pass: max_abs_deviation <= tolerance,
            max_abs_deviation,
            tolerance,
            notes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_iff_max_within_tolerance() {
        let samples = vec![Sample::new(0.0, 1e-10), Sample::new(1.0, 3e-9)];
        let r = CheckReport::new("x", vec![0.0, 1.0], samples.clone(), 1e-9, String::new());
        assert!(!r.pass);
        assert_eq!(r.max_abs_deviation, 3e-9);
        let r = CheckReport::new("x", vec![0.0, 1.0], samples, 1e-8, String::new());
        assert!(r.pass);
    }
}
