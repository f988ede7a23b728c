//! Machine-readable run reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub separators: Option<usize>,
    pub pmcs: Option<usize>,
    pub table_entries: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 of the input file bytes.
    pub input_digest: Option<String>,
    pub parameters: BTreeMap<String, String>,
    pub result_size: Option<usize>,
    pub witness: Option<Vec<String>>,
    /// Listed sets (separators, PMCs), when requested.
    pub sets: Vec<Vec<String>>,
    pub counts: Counts,
    /// Free-form result facts, e.g. both separator counts of a verification.
    pub facts: BTreeMap<String, String>,
    pub verification: Vec<Check>,
    pub elapsed_us: u64,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl RunReport {
    pub fn new(command: &str, input: Option<&[u8]>) -> Self {
        RunReport {
            command: command.to_string(),
            input_digest: input.map(digest),
            ..Default::default()
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn fact(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.facts.insert(key.to_string(), value.to_string());
        self
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> &mut Self {
        self.verification.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
        self
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.verification.iter().filter(|c| !c.passed).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    #[cfg(test)]
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(summary) = self.facts.get("summary") {
            let _ = writeln!(out, "{summary}");
        }
        if let Some(size) = self.result_size {
            let _ = writeln!(out, "size {size}");
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "witness: {}", w.join(" "));
        }
        let counts = [
            ("minimal separators", self.counts.separators),
            ("potential maximal cliques", self.counts.pmcs),
            ("table entries", self.counts.table_entries),
        ];
        for (name, value) in counts {
            if let Some(v) = value {
                let _ = writeln!(out, "{name}: {v}");
            }
        }
        for set in &self.sets {
            let _ = writeln!(out, "{{{}}}", set.join(", "));
        }
        for (k, v) in self.facts.iter().filter(|(k, _)| *k != "summary") {
            let _ = writeln!(out, "{k}: {v}");
        }
        for c in &self.verification {
            let verdict = if c.passed { "ok" } else { "FAILED" };
            if c.detail.is_empty() {
                let _ = writeln!(out, "check {}: {verdict}", c.name);
            } else {
                let _ = writeln!(out, "check {}: {verdict} ({})", c.name, c.detail);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = RunReport::new("solve mis", Some(b"a b\n"));
        r.param("t", 0).fact("summary", "x");
        r.result_size = Some(1);
        r.witness = Some(vec!["a".into()]);
        r.counts.separators = Some(0);
        r.check("independent", true, "");
        r.elapsed_us = 12;
        assert_eq!(RunReport::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn digest_is_sha256() {
        assert_eq!(
            digest(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
