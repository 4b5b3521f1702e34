use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub theorem: String,
    pub instances: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
    pub seconds: f64,
}

impl VerificationReport {
    pub fn new(theorem: &str) -> Self {
        VerificationReport { theorem: theorem.to_string(), instances: 0, passed: 0, failures: Vec::new(), seconds: 0.0 }
    }

    pub fn check(&mut self, instance: impl FnOnce() -> String, expected: impl ToString, got: impl ToString) {
        let (expected, got) = (expected.to_string(), got.to_string());
        self.instances += 1;
        if expected == got {
            self.passed += 1;
        } else {
            self.failures.push(Failure { instance: instance(), expected, got });
        }
    }

    /// Records an instance whose check is a predicate rather than an equality.
    pub fn check_that(&mut self, instance: impl FnOnce() -> String, ok: bool, expected: &str, got: impl FnOnce() -> String) {
        self.instances += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(Failure { instance: instance(), expected: expected.to_string(), got: got() });
        }
    }

    /// One human summary line, then `key=value` lines.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}: {}/{} passed, {} failures",
            self.theorem,
            self.passed,
            self.instances,
            self.failures.len()
        );
        let _ = writeln!(out, "theorem={}", self.theorem);
        let _ = writeln!(out, "instances={}", self.instances);
        let _ = writeln!(out, "passed={}", self.passed);
        let _ = writeln!(out, "failures={}", self.failures.len());
        let _ = writeln!(out, "wall_seconds={:.3}", self.seconds);
        for (i, f) in self.failures.iter().enumerate() {
            let _ = writeln!(out, "failure.{i}.instance={}", f.instance);
            let _ = writeln!(out, "failure.{i}.expected={}", f.expected);
            let _ = writeln!(out, "failure.{i}.got={}", f.got);
        }
        out
    }
}
