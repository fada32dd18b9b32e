use std::fmt;
use std::time::Duration;

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub detail: Option<String>,
}

impl CheckResult {
    /// Passes iff `residual <= tolerance`; NaN residuals fail.
    pub fn measured(name: &str, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            residual,
            tolerance,
            pass: residual <= tolerance,
            detail: None,
        }
    }

    pub fn failed(name: &str, tolerance: f64, detail: impl fmt::Display) -> Self {
        Self {
            name: name.to_string(),
            residual: f64::NAN,
            tolerance,
            pass: false,
            detail: Some(detail.to_string()),
        }
    }

    pub fn with_detail(mut self, detail: impl fmt::Display) -> Self {
        self.detail = Some(detail.to_string());
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunReport {
    pub checks: Vec<CheckResult>,
    pub elapsed: Duration,
}

impl RunReport {
    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<24} {:>12} {:>10}  status",
            "check", "residual", "tolerance"
        )?;
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            write!(
                f,
                "{:<24} {:>12.3e} {:>10.1e}  {status}",
                c.name, c.residual, c.tolerance
            )?;
            if let Some(d) = &c.detail {
                write!(f, "  ({d})")?;
            }
            writeln!(f)?;
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "overall: {verdict} ({} checks, {:.2} s)",
            self.checks.len(),
            self.elapsed.as_secs_f64()
        )
    }
}
