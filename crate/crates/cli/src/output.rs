//! Line-oriented key/value records, or one JSON object with `--json`.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Default)]
pub struct Record {
    fields: Vec<(String, Value)>,
}

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn put(&mut self, key: impl Into<String>, value: impl Serialize) -> &mut Self {
        let v = serde_json::to_value(value).expect("output values serialize");
        self.fields.push((key.into(), v));
        self
    }

    /// `key=value` per line; strings are written bare, everything else as
    /// compact JSON.
    pub fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        for (k, v) in &self.fields {
            match v {
                Value::String(s) => writeln!(out, "{k}={s}")?,
                other => writeln!(out, "{k}={other}")?,
            }
        }
        Ok(())
    }

    /// A single JSON object whose keys keep their insertion order.
    pub fn write_json(&self, out: &mut dyn Write) -> io::Result<()> {
        write!(out, "{{")?;
        for (i, (k, v)) in self.fields.iter().enumerate() {
            if i > 0 {
                write!(out, ",")?;
            }
            write!(out, "{}:{}", Value::String(k.clone()), v)?;
        }
        writeln!(out, "}}")
    }

    pub fn write(&self, json: bool, out: &mut dyn Write) -> io::Result<()> {
        if json {
            self.write_json(out)
        } else {
            self.write_text(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json() {
        let mut r = Record::new();
        r.put("type", "BC1").put("roots", 4).put("simple", vec![vec![1]]);
        let mut t = Vec::new();
        r.write_text(&mut t).unwrap();
        assert_eq!(String::from_utf8(t).unwrap(), "type=BC1\nroots=4\nsimple=[[1]]\n");
        let mut j = Vec::new();
        r.write_json(&mut j).unwrap();
        assert_eq!(String::from_utf8(j).unwrap(), "{\"type\":\"BC1\",\"roots\":4,\"simple\":[[1]]}\n");
    }
}
