use std::fmt;

/// First violated rule of a checker, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: String,
    pub detail: String,
}

/// Outcome of a checker: how many conditions were evaluated and the first failure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: usize,
    pub failure: Option<Violation>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.failure.is_none()
    }

    pub fn failed(rule: &str, detail: impl Into<String>) -> Report {
        Report {
            checks: 1,
            failure: Some(Violation { rule: rule.to_string(), detail: detail.into() }),
        }
    }

    pub fn rule(&self) -> Option<&str> {
        self.failure.as_ref().map(|v| v.rule.as_str())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "pass ({} checks)", self.checks),
            Some(v) => write!(f, "fail [{}]: {}", v.rule, v.detail),
        }
    }
}

/// Accumulates conditions and keeps the first failure.
#[derive(Default)]
pub(crate) struct Checker {
    report: Report,
}

impl Checker {
    pub fn new() -> Self {
        Checker::default()
    }

    pub fn ok(&self) -> bool {
        self.report.failure.is_none()
    }

    pub fn require(&mut self, cond: bool, rule: &str, detail: impl FnOnce() -> String) -> bool {
        if self.report.failure.is_some() {
            return false;
        }
        self.report.checks += 1;
        if !cond {
            self.report.failure = Some(Violation { rule: rule.to_string(), detail: detail() });
        }
        cond
    }

    pub fn absorb(&mut self, other: Report) -> bool {
        if self.report.failure.is_some() {
            return false;
        }
        self.report.checks += other.checks;
        if other.failure.is_some() {
            self.report.failure = other.failure;
            return false;
        }
        true
    }

    pub fn finish(self) -> Report {
        self.report
    }
}
