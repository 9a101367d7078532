//! Verification reports and their JSON and CSV encodings.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;

/// A real or complex value; real values have `im = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quantity {
    pub re: f64,
    pub im: f64,
}

impl Quantity {
    pub fn real(x: f64) -> Self {
        Quantity { re: x, im: 0.0 }
    }

    pub fn complex(z: Complex64) -> Self {
        Quantity { re: z.re, im: z.im }
    }

    pub fn distance(&self, other: &Quantity) -> f64 {
        (self.re - other.re).hypot(self.im - other.im)
    }
}

impl From<f64> for Quantity {
    fn from(x: f64) -> Self {
        Quantity::real(x)
    }
}

impl From<Complex64> for Quantity {
    fn from(z: Complex64) -> Self {
        Quantity::complex(z)
    }
}

/// How `computed` is compared with `expected`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    /// `|computed − expected| ≤ tolerance`.
    Within,
    /// `computed.re ≥ expected.re`.
    AtLeast,
    /// `computed.re ≤ expected.re`.
    AtMost,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub expected: Quantity,
    /// `None` when the computation itself failed.
    pub computed: Option<Quantity>,
    pub tolerance: f64,
    pub comparison: Comparison,
    pub pass: bool,
    pub skipped: bool,
    /// Where the expected value comes from, e.g. `reference-value` or `independent-oracle`.
    pub basis: String,
    pub detail: Option<String>,
}

impl CheckRecord {
    pub fn within(
        name: &str,
        expected: impl Into<Quantity>,
        computed: impl Into<Quantity>,
        tolerance: f64,
        basis: &str,
    ) -> Self {
        let expected = expected.into();
        let computed = computed.into();
        let pass = computed.distance(&expected) <= tolerance;
        CheckRecord {
            name: name.into(),
            expected,
            computed: Some(computed),
            tolerance,
            comparison: Comparison::Within,
            pass,
            skipped: false,
            basis: basis.into(),
            detail: None,
        }
    }

    pub fn bound(name: &str, comparison: Comparison, bound: f64, computed: f64, basis: &str) -> Self {
        let pass = match comparison {
            Comparison::AtLeast => computed >= bound,
            Comparison::AtMost => computed <= bound,
            Comparison::Within => computed == bound,
        };
        CheckRecord {
            name: name.into(),
            expected: Quantity::real(bound),
            computed: Some(Quantity::real(computed)),
            tolerance: 0.0,
            comparison,
            pass,
            skipped: false,
            basis: basis.into(),
            detail: None,
        }
    }

    pub fn failed(name: &str, expected: impl Into<Quantity>, tolerance: f64, basis: &str, detail: String) -> Self {
        CheckRecord {
            name: name.into(),
            expected: expected.into(),
            computed: None,
            tolerance,
            comparison: Comparison::Within,
            pass: false,
            skipped: false,
            basis: basis.into(),
            detail: Some(detail),
        }
    }

    pub fn skipped(name: &str, detail: String) -> Self {
        CheckRecord {
            name: name.into(),
            expected: Quantity::real(0.0),
            computed: None,
            tolerance: 0.0,
            comparison: Comparison::Within,
            pass: true,
            skipped: true,
            basis: "none".into(),
            detail: Some(detail),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: bool,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub command: String,
    pub seed: Option<u64>,
    pub grid: usize,
    pub slab_grid: [usize; 3],
    pub genus: usize,
    pub samples: usize,
    pub orientation: i8,
    pub tolerance_override: Option<f64>,
    pub config_file: Option<String>,
    pub version: String,
}

impl Provenance {
    pub fn from_config(cfg: &RunConfig) -> Self {
        Provenance {
            command: cfg.subcommand.name().into(),
            seed: cfg.seed,
            grid: cfg.grid,
            slab_grid: [cfg.slab_grid.0, cfg.slab_grid.1, cfg.slab_grid.2],
            genus: cfg.genus,
            samples: cfg.samples,
            orientation: cfg.orientation,
            tolerance_override: cfg.tol,
            config_file: cfg.config_file.as_ref().map(|p| p.display().to_string()),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    pub provenance: Provenance,
    pub notes: Vec<String>,
    /// Degree of the line bundle, for `verify-genus1`.
    pub final_degree: Option<i64>,
}

impl VerificationReport {
    pub fn new(cfg: &RunConfig) -> Self {
        VerificationReport {
            checks: Vec::new(),
            summary: Summary {
                pass: true,
                passed: 0,
                failed: 0,
                skipped: 0,
            },
            provenance: Provenance::from_config(cfg),
            notes: Vec::new(),
            final_degree: None,
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
        self.refresh_summary();
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn refresh_summary(&mut self) {
        let skipped = self.checks.iter().filter(|c| c.skipped).count();
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        self.summary = Summary {
            pass: failed == 0,
            passed: self.checks.len() - failed - skipped,
            failed,
            skipped,
        };
    }

    pub fn passed(&self) -> bool {
        self.summary.pass
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per check.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "name,expected_re,expected_im,computed_re,computed_im,tolerance,comparison,pass,skipped,basis,detail\n",
        );
        for c in &self.checks {
            let (cre, cim) = c
                .computed
                .map(|q| (q.re.to_string(), q.im.to_string()))
                .unwrap_or_default();
            let comparison = match c.comparison {
                Comparison::Within => "within",
                Comparison::AtLeast => "at-least",
                Comparison::AtMost => "at-most",
            };
            out.push_str(&format!(
                "{},{:?},{:?},{},{},{:?},{},{},{},{},{}\n",
                csv_field(&c.name),
                c.expected.re,
                c.expected.im,
                cre,
                cim,
                c.tolerance,
                comparison,
                c.pass,
                c.skipped,
                csv_field(&c.basis),
                csv_field(c.detail.as_deref().unwrap_or("")),
            ));
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
