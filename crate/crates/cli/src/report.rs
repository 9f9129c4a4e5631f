use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub payload: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, payload: Value) -> Self {
        Check { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, payload }
    }

    pub fn error(name: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Check::new(name, false, serde_json::json!({ "error": err.to_string() }))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub realization: String,
    pub degmax: u32,
    pub cap: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn new(command: &str, realization: String, degmax: u32, cap: usize, seed: u64, checks: Vec<Check>) -> Self {
        let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
        Report { command: command.into(), realization, degmax, cap, seed, passed: checks.len() - failed, failed, checks }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} on {} (degmax {}, cap {}, seed {})\n",
            self.command, self.realization, self.degmax, self.cap, self.seed
        );
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{tag}  {}\n", c.name));
            write_value(&mut out, &c.payload, 1);
        }
        out.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        out
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Null => {}
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_value(out, x, depth + 1);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for item in items {
                            out.push_str(&format!("{pad}  -\n"));
                            write_value(out, item, depth + 2);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}
