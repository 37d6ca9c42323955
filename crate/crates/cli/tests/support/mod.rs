//! Helpers shared by the CLI tests.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use regex::Regex;
use serde_json::Value;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

pub fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_grobfan"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    {
        let mut pipe = child.stdin.take().expect("stdin piped");
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).expect("stdin written");
        }
    }
    child.wait_with_output().expect("binary finishes")
}

pub fn stdout(o: &Output) -> String {
    assert!(
        o.status.success(),
        "failed: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

/// Checks `v` against the subset of JSON Schema used by `schema/fan.json`:
/// `$ref` to local definitions, `anyOf`, `type`, `properties`, `required`,
/// `additionalProperties: false`, `items` and `pattern`.
pub struct Schema {
    root: Value,
}

impl Schema {
    pub fn load() -> Self {
        let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schema/fan.json");
        let text = std::fs::read_to_string(path).expect("schema file");
        Schema {
            root: serde_json::from_str(&text).expect("schema is JSON"),
        }
    }

    pub fn validate(&self, v: &Value) -> Result<(), String> {
        self.check(&self.root, v, "$")
    }

    fn resolve<'a>(&'a self, s: &'a Value) -> &'a Value {
        match s.get("$ref").and_then(Value::as_str) {
            Some(r) => {
                let name = r.strip_prefix("#/$defs/").expect("local reference");
                self.resolve(&self.root["$defs"][name])
            }
            None => s,
        }
    }

    fn check(&self, schema: &Value, v: &Value, at: &str) -> Result<(), String> {
        let s = self.resolve(schema);
        if let Some(options) = s.get("anyOf").and_then(Value::as_array) {
            if !options.iter().any(|o| self.check(o, v, at).is_ok()) {
                return Err(format!("{at}: no alternative matches"));
            }
        }
        if let Some(t) = s.get("type").and_then(Value::as_str) {
            let ok = match t {
                "object" => v.is_object(),
                "array" => v.is_array(),
                "string" => v.is_string(),
                "boolean" => v.is_boolean(),
                "null" => v.is_null(),
                other => panic!("unsupported type {other}"),
            };
            if !ok {
                return Err(format!("{at}: expected {t}"));
            }
        }
        if let (Some(p), Some(x)) = (s.get("pattern").and_then(Value::as_str), v.as_str()) {
            if !Regex::new(p).expect("valid pattern").is_match(x) {
                return Err(format!("{at}: `{x}` does not match {p}"));
            }
        }
        if let Some(obj) = v.as_object() {
            for key in s
                .get("required")
                .and_then(Value::as_array)
                .into_iter()
                .flatten()
            {
                let key = key.as_str().expect("string key");
                if !obj.contains_key(key) {
                    return Err(format!("{at}: missing {key}"));
                }
            }
            let props = s.get("properties").and_then(Value::as_object);
            for (key, value) in obj {
                match props.and_then(|p| p.get(key)) {
                    Some(sub) => self.check(sub, value, &format!("{at}.{key}"))?,
                    None if s.get("additionalProperties") == Some(&Value::Bool(false)) => {
                        return Err(format!("{at}: unexpected {key}"));
                    }
                    None => {}
                }
            }
        }
        if let (Some(items), Some(arr)) = (s.get("items"), v.as_array()) {
            for (i, x) in arr.iter().enumerate() {
                self.check(items, x, &format!("{at}[{i}]"))?;
            }
        }
        Ok(())
    }
}
