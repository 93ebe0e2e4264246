use serde::Serialize;
use serde_json::{Map, Value};
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(format!("unknown report format {s:?}")),
        }
    }
}

/// Machine-readable result of one check. Keys serialize sorted, so two
/// runs over the same instance give identical bytes unless timing is set.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub check: String,
    pub instance_hash: String,
    pub parameters: Map<String, Value>,
    pub summary: Map<String, Value>,
    pub violations: Vec<Value>,
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(check: &str, instance_hash: &str) -> Self {
        Report {
            check: check.to_owned(),
            instance_hash: instance_hash.to_owned(),
            ..Report::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.to_owned(), to_value(value));
        self
    }

    pub fn stat(mut self, key: &str, value: impl Serialize) -> Self {
        self.summary.insert(key.to_owned(), to_value(value));
        self
    }

    pub fn violation(mut self, v: impl Serialize) -> Self {
        self.violations.push(to_value(v));
        self
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("check".into(), Value::from(self.check.clone()));
        m.insert(
            "instance_hash".into(),
            Value::from(self.instance_hash.clone()),
        );
        m.insert("parameters".into(), Value::Object(self.parameters.clone()));
        m.insert("summary".into(), Value::Object(self.summary.clone()));
        m.insert("violation_count".into(), Value::from(self.violations.len()));
        m.insert("violations".into(), Value::Array(self.violations.clone()));
        m.insert("passed".into(), Value::from(self.passed()));
        if let Some(t) = self.timing_ms {
            m.insert("timing_ms".into(), Value::from(t));
        }
        Value::Object(m)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("report serializes");
        s.push('\n');
        s
    }

    /// `section,key,value` rows; nested values are written as compact JSON.
    pub fn to_csv(&self) -> String {
        let mut rows: Vec<(&str, String, String)> = Vec::new();
        let mut row = |a: &'static str, b: &str, c: String| rows.push((a, b.to_owned(), c));
        row("section", "key", "value".into());
        row("report", "check", self.check.clone());
        row("report", "instance_hash", self.instance_hash.clone());
        row("report", "passed", self.passed().to_string());
        for (k, v) in &self.parameters {
            row("parameter", k, scalar(v));
        }
        for (k, v) in &self.summary {
            row("summary", k, scalar(v));
        }
        for (i, v) in self.violations.iter().enumerate() {
            row("violation", &i.to_string(), scalar(v));
        }
        if let Some(t) = self.timing_ms {
            row("report", "timing_ms", t.to_string());
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        for (a, b, c) in &rows {
            w.write_record([*a, b.as_str(), c.as_str()])
                .expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => self.to_json(),
            ReportFormat::Csv => self.to_csv(),
        }
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_keys_are_sorted() {
        let r = Report::new("demo", "abc")
            .param("zeta", 1)
            .param("alpha", "x")
            .violation(serde_json::json!({"b": 1, "a": 2}));
        let s = r.to_json();
        assert!(s.find("\"alpha\"").unwrap() < s.find("\"zeta\"").unwrap());
        assert!(s.find("\"check\"").unwrap() < s.find("\"violations\"").unwrap());
        assert!(!r.passed());
        assert_eq!(s, r.clone().to_json());
    }

    #[test]
    fn csv_rows() {
        let r = Report::new("demo", "abc").stat("count", 3);
        let s = r.to_csv();
        assert!(s.starts_with("section,key,value\n"));
        assert!(s.contains("summary,count,3\n"));
        assert!(s.contains("report,passed,true\n"));
    }
}
