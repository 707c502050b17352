//! Verification reports: every check returns the full list of failing
//! basis tuples instead of a bare boolean.

use std::fmt;

use serde::Serialize;

/// One failing basis tuple (0-based indices) with a human-readable residual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub checked: usize,
    pub failures: Vec<Witness>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, tuple: Vec<usize>, detail: impl Into<String>) {
        self.failures.push(Witness {
            tuple,
            detail: detail.into(),
        });
    }

    pub fn first_failure(&self) -> Option<&Witness> {
        self.failures.first()
    }

    /// Concatenates `other` into `self` (counts and failures).
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    /// Merges several sub-checks under one name.
    pub fn combine(
        check: impl Into<String>,
        parts: impl IntoIterator<Item = VerificationReport>,
    ) -> Self {
        let mut out = VerificationReport::new(check);
        for p in parts {
            let name = p.check.clone();
            out.checked += p.checked;
            out.failures.extend(p.failures.into_iter().map(|w| Witness {
                tuple: w.tuple,
                detail: format!("[{name}] {}", w.detail),
            }));
        }
        out
    }

    pub fn summary(&self) -> String {
        match self.first_failure() {
            None => format!("PASS {} ({} tuples checked)", self.check, self.checked),
            Some(w) => format!(
                "FAIL {} ({} of {} tuples fail; first {}: {})",
                self.check,
                self.failures.len(),
                self.checked,
                fmt_tuple(&w.tuple),
                w.detail
            ),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())
    }
}

pub fn fmt_tuple(t: &[usize]) -> String {
    let parts: Vec<String> = t.iter().map(|i| i.to_string()).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_lines() {
        let mut r = VerificationReport::new("Leibniz");
        r.checked = 8;
        assert_eq!(r.summary(), "PASS Leibniz (8 tuples checked)");
        r.fail(vec![0, 0, 0], "residual (-1)");
        assert!(!r.passed());
        assert!(r.summary().starts_with("FAIL Leibniz (1 of 8"));
    }
}
