//! Machine-readable run reports with a stable, versioned schema.
//!
//! The JSON writer is hand-rolled so the byte output is fully determined
//! by the report content: fixed field order, floats printed with 17
//! significant digits (exact f64 round-trip). Wall-clock time never enters
//! the default output — reruns with the same seed must be byte-identical —
//! and is included only when explicitly requested.

use std::fmt::Write as _;

/// One named check: a value compared against a tolerance.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// Pass iff `value` ≤ `tolerance`.
    pub fn le(name: impl Into<String>, value: f64, tolerance: f64) -> Check {
        Check { name: name.into(), value, tolerance, pass: value <= tolerance }
    }

    /// Pass iff `value` ≥ `tolerance`.
    pub fn ge(name: impl Into<String>, value: f64, tolerance: f64) -> Check {
        Check { name: name.into(), value, tolerance, pass: value >= tolerance }
    }

    /// Pass iff the boolean condition holds; value records 1/0.
    pub fn flag(name: impl Into<String>, ok: bool) -> Check {
        Check { name: name.into(), value: f64::from(u8::from(ok)), tolerance: 1.0, pass: ok }
    }

    /// Informational entry that always passes.
    pub fn info(name: impl Into<String>, value: f64) -> Check {
        Check { name: name.into(), value, tolerance: f64::INFINITY, pass: true }
    }
}

/// A complete run report; `pass` is the conjunction of all checks.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub command: String,
    pub params: Vec<(String, String)>,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    pub wall_ms: Option<u128>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> RunReport {
        RunReport {
            command: command.into(),
            params: Vec::new(),
            seed: None,
            checks: Vec::new(),
            wall_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Render JSON with the fixed schema. `with_timings` adds the wall
    /// clock field (off by default to keep reruns byte-identical).
    pub fn to_json(&self, with_timings: bool) -> String {
        let mut out = String::new();
        out.push_str("{\"schema\":1");
        let _ = write!(out, ",\"tool\":\"monogamy {}\"", env!("CARGO_PKG_VERSION"));
        let _ = write!(out, ",\"command\":{}", json_str(&self.command));
        out.push_str(",\"params\":{");
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}:{}", json_str(k), json_str(v));
        }
        out.push('}');
        if let Some(seed) = self.seed {
            let _ = write!(out, ",\"seed\":{seed}");
        }
        out.push_str(",\"checks\":[");
        for (i, c) in self.checks.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(
                out,
                "{{\"name\":{},\"value\":{},\"tolerance\":{},\"pass\":{}}}",
                json_str(&c.name),
                json_f64(c.value),
                json_f64(c.tolerance),
                c.pass
            );
        }
        out.push(']');
        let _ = write!(out, ",\"pass\":{}", self.pass());
        if with_timings {
            if let Some(ms) = self.wall_ms {
                let _ = write!(out, ",\"wall_ms\":{ms}");
            }
        }
        out.push('}');
        out.push('\n');
        out
    }
}

/// 17-significant-digit float, as a JSON-legal token.
pub fn json_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_infinite() && v > 0.0 {
        "\"inf\"".into()
    } else if v.is_infinite() {
        "\"-inf\"".into()
    } else {
        "\"nan\"".into()
    }
}

fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_json_is_deterministic_and_valid() {
        let mut r = RunReport::new("verify").param("suite", "lemma3").seed(7);
        r.push(Check::le("max_violation", 1e-12, 1e-9));
        r.push(Check::flag("saturation_found", true));
        let a = r.to_json(false);
        let b = r.to_json(false);
        assert_eq!(a, b);
        assert!(a.contains("\"pass\":true"));
        assert!(a.ends_with('\n'));
        // Timings are opt-in.
        r.wall_ms = Some(12);
        assert!(!r.to_json(false).contains("wall_ms"));
        assert!(r.to_json(true).contains("\"wall_ms\":12"));
    }

    #[test]
    fn float_format_round_trips() {
        for v in [0.8535533905932737, 1e-9, 2.0 / 3.0] {
            let s = json_f64(v);
            assert_eq!(s.parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn failing_check_fails_report() {
        let mut r = RunReport::new("verify");
        r.push(Check::le("x", 2.0, 1.0));
        assert!(!r.pass());
        assert!(r.to_json(false).contains("\"pass\":false"));
    }
}
