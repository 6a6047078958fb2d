//! Report types produced by the Laurent pipeline, with JSON and CSV
//! emitters. Index tuples serialize as integer arrays, complex values as
//! `[re, im]` pairs, and certified bounds as decimal strings.

use num_complex::Complex64;
use serde_json::{json, Value};

use super::TorusSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionVerdict {
    Clean,
    Obstructed,
}

impl ObstructionVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            ObstructionVerdict::Clean => "clean",
            ObstructionVerdict::Obstructed => "obstructed",
        }
    }
}

/// Magnitudes of one negative index across all sampled tori (`None`
/// where a torus window does not cover the index).
#[derive(Debug, Clone)]
pub struct ObstructionEntry {
    pub alpha: Vec<i64>,
    pub abs_scaled: Vec<Option<f64>>,
}

/// Negative-index coefficient magnitudes across tori, with the verdict
/// against an effective tolerance relative to the largest coefficient.
#[derive(Debug, Clone)]
pub struct ObstructionReport {
    pub tolerance: f64,
    pub effective_tolerance: f64,
    pub max_abs: f64,
    pub max_negative_magnitude: f64,
    /// Worst index and the torus (by position) where it was observed.
    pub worst: Option<(Vec<i64>, usize)>,
    pub tori: Vec<TorusSpec>,
    pub entries: Vec<ObstructionEntry>,
    pub verdict: ObstructionVerdict,
}

impl ObstructionReport {
    pub fn is_clean(&self) -> bool {
        self.verdict == ObstructionVerdict::Clean
    }

    pub fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict.as_str(),
            "tolerance": format_bound(self.tolerance),
            "effective_tolerance": format_bound(self.effective_tolerance),
            "max_abs_scaled": self.max_abs,
            "max_negative_magnitude": self.max_negative_magnitude,
            "worst": self.worst.as_ref().map(|(alpha, torus)| json!({
                "alpha": alpha,
                "torus": torus,
            })),
            "tori": self.tori.iter().map(torus_json).collect::<Vec<_>>(),
            "entries": self.entries.iter().map(|e| json!({
                "alpha": e.alpha,
                "abs_scaled": e.abs_scaled,
            })).collect::<Vec<_>>(),
        })
    }

    /// Long-format table: one row per (negative index, torus).
    pub fn to_csv(&self) -> String {
        let n = self.tori.first().map_or(0, TorusSpec::dimension);
        let mut out = String::new();
        for j in 0..n {
            out.push_str(&format!("alpha_{j},"));
        }
        out.push_str("torus,abs_scaled\n");
        for entry in &self.entries {
            for (t, mag) in entry.abs_scaled.iter().enumerate() {
                let Some(mag) = mag else { continue };
                for a in &entry.alpha {
                    out.push_str(&format!("{a},"));
                }
                out.push_str(&format!("{t},{mag:e}\n"));
            }
        }
        out
    }
}

/// One torus of a derivative-growth scan.
#[derive(Debug, Clone)]
pub struct GrowthEntry {
    pub torus: TorusSpec,
    pub abs_coefficient: f64,
    /// `|c_alpha| beta! / w^gamma`: a certified lower bound (up to
    /// quadrature error) for the sup norm of the beta-derivative.
    pub statistic: f64,
}

/// Growth of the derivative-bound statistic across tori for one index.
#[derive(Debug, Clone)]
pub struct GrowthReport {
    pub alpha: Vec<i64>,
    pub beta: Vec<u32>,
    pub gamma: Vec<u32>,
    pub entries: Vec<GrowthEntry>,
}

impl GrowthReport {
    pub fn to_json(&self) -> Value {
        json!({
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "entries": self.entries.iter().map(|e| json!({
                "torus": torus_json(&e.torus),
                "abs_coefficient": e.abs_coefficient,
                "statistic": e.statistic,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        let n = self.alpha.len();
        let mut out = String::new();
        out.push_str("torus,");
        for j in 0..n {
            out.push_str(&format!("w_{j},"));
        }
        out.push_str("abs_coefficient,statistic\n");
        for (t, entry) in self.entries.iter().enumerate() {
            out.push_str(&format!("{t},"));
            for w in entry.torus.radii() {
                out.push_str(&format!("{w},"));
            }
            out.push_str(&format!("{:e},{:e}\n", entry.abs_coefficient, entry.statistic));
        }
        out
    }
}

/// Value of the truncated Taylor extension plus its certified tail bound
/// and the (heuristic, separately reported) aliasing estimate.
#[derive(Debug, Clone)]
pub struct ExtensionResult {
    pub value: Complex64,
    pub tail_bound: f64,
    pub aliasing_estimate: f64,
    pub degree: usize,
    pub torus: TorusSpec,
}

impl ExtensionResult {
    pub fn to_json(&self) -> Value {
        json!({
            "value": [self.value.re, self.value.im],
            "tail_bound": format_bound(self.tail_bound),
            "aliasing_estimate": format_bound(self.aliasing_estimate),
            "degree": self.degree,
            "torus": torus_json(&self.torus),
        })
    }
}

/// Agreement of one coefficient across tori.
#[derive(Debug, Clone)]
pub struct ConsistencyEntry {
    pub alpha: Vec<i64>,
    pub max_abs_coefficient: f64,
    pub max_relative_deviation: f64,
}

/// Cross-torus coefficient agreement on the common index window.
#[derive(Debug, Clone)]
pub struct ConsistencyReport {
    pub tolerance: f64,
    pub entries: Vec<ConsistencyEntry>,
    pub flagged: Vec<Vec<i64>>,
}

impl ConsistencyReport {
    pub fn max_relative_deviation_within(&self, total_degree: i64) -> f64 {
        self.entries
            .iter()
            .filter(|e| e.alpha.iter().map(|a| a.abs()).sum::<i64>() <= total_degree)
            .map(|e| e.max_relative_deviation)
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "tolerance": format_bound(self.tolerance),
            "flagged": self.flagged,
            "entries": self.entries.iter().map(|e| json!({
                "alpha": e.alpha,
                "max_abs_coefficient": e.max_abs_coefficient,
                "max_relative_deviation": e.max_relative_deviation,
            })).collect::<Vec<_>>(),
        })
    }
}

fn torus_json(spec: &TorusSpec) -> Value {
    json!({ "radii": spec.radii(), "grid": spec.grid() })
}

fn format_bound(v: f64) -> String {
    format!("{v:e}")
}
