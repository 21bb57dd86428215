use std::fmt;

/// One named condition and whether it held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Itemized outcome of a verifier; passes iff every check passes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    checks: Vec<Check>,
}

impl VerifyReport {
    pub fn new() -> VerifyReport {
        VerifyReport::default()
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    /// Appends every check of `other` with `prefix` prepended to its name.
    pub fn absorb(&mut self, prefix: &str, other: VerifyReport) {
        for c in other.checks {
            self.checks.push(Check { name: format!("{prefix}{}", c.name), ..c });
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Names of failing checks, comma separated; empty when the report passes.
    pub fn failure_summary(&self) -> String {
        self.failures().map(|c| c.name.as_str()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed { "pass" } else { "fail" };
            if c.detail.is_empty() {
                writeln!(f, "CHECK {} {verdict}", c.name)?;
            } else {
                writeln!(f, "CHECK {} {verdict} {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}
