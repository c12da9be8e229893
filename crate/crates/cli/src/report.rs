use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One structured document per invocation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    /// The invocation, minus the program name.
    pub command: String,
    pub parameters: Parameters,
    pub results: Vec<Item>,
    pub verdicts: Vec<Verdict>,
    /// Wall time in microseconds; only filled with `--timing`, so that
    /// identical inputs give identical documents by default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chern: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extra: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Item {
    Orbit {
        arf: u8,
        size: usize,
        members: Vec<String>,
    },
    Matrix {
        name: String,
        rows: Vec<Vec<String>>,
    },
    Value {
        name: String,
        value: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub verdict: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<usize>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Verdict {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Self {
            name: name.into(),
            verdict: if passed { Outcome::Pass } else { Outcome::Fail },
            genus: None,
            detail: String::new(),
            counterexample: None,
        }
    }
}

impl ReportDocument {
    pub fn new(command: String, parameters: Parameters) -> Self {
        Self {
            command,
            parameters,
            results: Vec::new(),
            verdicts: Vec::new(),
            timing_us: None,
        }
    }

    pub fn value(&mut self, name: &str, value: impl ToString) {
        self.results.push(Item::Value {
            name: name.to_string(),
            value: value.to_string(),
        });
    }

    pub fn matrix(&mut self, name: &str, rows: Vec<Vec<String>>) {
        self.results.push(Item::Matrix {
            name: name.to_string(),
            rows,
        });
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.verdict == Outcome::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "arfcover {}", self.command);
        let p = &self.parameters;
        let mut params = Vec::new();
        if let Some(g) = p.genus {
            params.push(format!("g={g}"));
        }
        if let Some(q) = p.chern {
            params.push(format!("q={q}"));
        }
        if let Some(s) = &p.section {
            params.push(format!("section={s}"));
        }
        params.extend(p.extra.iter().map(|(k, v)| format!("{k}={v}")));
        if !params.is_empty() {
            let _ = writeln!(out, "  {}", params.join(" "));
        }
        for item in &self.results {
            match item {
                Item::Orbit { arf, size, members } => {
                    let _ = writeln!(out, "orbit arf={arf} size={size}");
                    for chunk in members.chunks(8) {
                        let _ = writeln!(out, "    {}", chunk.join(" "));
                    }
                }
                Item::Matrix { name, rows } => {
                    let _ = writeln!(out, "{name}:");
                    let width = rows.iter().flatten().map(|e| e.chars().count()).max();
                    for row in rows {
                        let cells: Vec<String> = row
                            .iter()
                            .map(|e| format!("{e:>w$}", w = width.unwrap_or(1)))
                            .collect();
                        let _ = writeln!(out, "    [{}]", cells.join(" "));
                    }
                }
                Item::Value { name, value } => {
                    let _ = writeln!(out, "{name}: {value}");
                }
            }
        }
        for v in &self.verdicts {
            let tag = match v.verdict {
                Outcome::Pass => "pass",
                Outcome::Fail => "FAIL",
            };
            let genus = v.genus.map(|g| format!(" g={g}")).unwrap_or_default();
            let _ = write!(out, "[{tag}] {}{genus}", v.name);
            if !v.detail.is_empty() {
                let _ = write!(out, " ({})", v.detail);
            }
            let _ = writeln!(out);
            if let Some(c) = &v.counterexample {
                let _ = writeln!(out, "    counterexample: {c}");
            }
        }
        if let Some(t) = self.timing_us {
            let _ = writeln!(out, "time: {:.3} ms", t as f64 / 1000.0);
        }
        out
    }
}
