use std::fmt::Write as _;

use pairstab::{Margin, Rational, RationalPolynomial, Verdict};
use serde::Serialize;
use serde_json::{json, Map, Value};

/// Output of one subcommand.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Indented `key: value` rendering of the whole report.
    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        if !is_empty(&self.inputs) {
            out.push_str("inputs:\n");
            render(&self.inputs, 1, &mut out);
        }
        out.push_str("results:\n");
        render(&self.results, 1, &mut out);
        if !self.warnings.is_empty() {
            out.push_str("warnings:\n");
            for w in &self.warnings {
                let _ = writeln!(out, "  - {w}");
            }
        }
        out
    }
}

fn is_empty(v: &Value) -> bool {
    match v {
        Value::Null => true,
        Value::Object(m) => m.is_empty(),
        _ => false,
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(integral_wire(s).unwrap_or(s).to_string()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            Some(format!(
                "[{}]",
                items
                    .iter()
                    .map(|i| scalar(i).unwrap_or_default())
                    .collect::<Vec<_>>()
                    .join(", ")
            ))
        }
        _ => None,
    }
}

/// `"-3/1"` reads as `-3` in text output; other strings pass through.
fn integral_wire(s: &str) -> Option<&str> {
    let n = s.strip_suffix("/1")?;
    let digits = n.strip_prefix('-').unwrap_or(n);
    (!digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())).then_some(n)
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(item, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        render(item, depth + 1, out);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

/// Encodes values for the selected output: canonical wire form for JSON,
/// readable fractions and polynomials for text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Style {
    pub json: bool,
}

impl Style {
    pub fn rational(&self, q: &Rational) -> Value {
        if self.json {
            Value::String(q.to_wire())
        } else {
            Value::String(q.to_string())
        }
    }

    pub fn rationals<'a>(&self, qs: impl IntoIterator<Item = &'a Rational>) -> Value {
        Value::Array(qs.into_iter().map(|q| self.rational(q)).collect())
    }

    pub fn poly(&self, p: &RationalPolynomial) -> Value {
        if self.json {
            Value::Array(p.coefficients().iter().map(|c| self.rational(c)).collect())
        } else {
            Value::String(p.to_string())
        }
    }

    pub fn margin(&self, m: &Margin) -> Value {
        match m {
            Margin::Polynomial(p) => self.poly(p),
            Margin::Scalar(q) => self.rational(q),
        }
    }

    pub fn verdict(&self, v: &Verdict) -> Value {
        json!({
            "satisfied": v.satisfied,
            "strict": v.strict,
            "margin": self.margin(&v.margin),
        })
    }

    /// Open interval `(lo, hi)`; `hi = None` reads as `+∞`.
    pub fn interval(&self, lo: &Rational, hi: Option<&Rational>) -> Value {
        let mut m = Map::new();
        m.insert("lo".into(), self.rational(lo));
        m.insert(
            "hi".into(),
            hi.map_or(Value::String("inf".into()), |h| self.rational(h)),
        );
        Value::Object(m)
    }
}

/// Warning list that keeps each message once, in first-seen order.
#[derive(Clone, Debug, Default)]
pub struct Warnings(Vec<String>);

impl Warnings {
    pub fn push(&mut self, w: impl Into<String>) {
        let w = w.into();
        if !self.0.contains(&w) {
            self.0.push(w);
        }
    }

    pub fn into_vec(self) -> Vec<String> {
        self.0
    }
}

pub const NOTE_DISCRIMINANT: &str = "discriminant bound: the stated lower bound -δ₁/(4H²) and the bound -δ₁²/H² obtained from the Hodge-index argument disagree for δ₁ > 0; both are reported and neither is preferred";
pub const NOTE_INTERVAL: &str = "interval criterion: evaluated through its integer-free interval conditions for 0 < s < r; the closed-form minimum expression is not used";
pub const NOTE_RESTRICTION: &str = "restriction degree: the gap ε is taken as the fractional part of d/2 + δ₁/2; an integral value is treated as on-wall";
pub const NOTE_RANK2: &str = "rank-2 chambers read as (max{0, 2i+d}, 2i+d+2); coarse walls may contain values that are not genuine rank-2 walls";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_drops_unit_denominators_only_for_integers() {
        assert_eq!(scalar(&json!("-3/1")).unwrap(), "-3");
        assert_eq!(scalar(&json!("7/1")).unwrap(), "7");
        assert_eq!(scalar(&json!("3/2")).unwrap(), "3/2");
        assert_eq!(scalar(&json!("case 2/1")).unwrap(), "case 2/1");
        assert_eq!(scalar(&json!(["0/1", "1/2"])).unwrap(), "[0, 1/2]");
    }

    #[test]
    fn warnings_are_deduplicated() {
        let mut w = Warnings::default();
        w.push("a");
        w.push("b");
        w.push("a");
        assert_eq!(w.into_vec(), vec!["a", "b"]);
    }

    #[test]
    fn text_style_renders_polynomials() {
        let p = RationalPolynomial::new(vec![Rational::new(-3, 2), Rational::one()]);
        let text = Style { json: false }.poly(&p);
        let json = Style { json: true }.poly(&p);
        assert_eq!(json, json!(["-3/2", "1/1"]));
        assert!(text.as_str().unwrap().contains('z'));
    }

    #[test]
    fn text_rendering_nests() {
        let r = Report {
            command: "x".into(),
            inputs: json!({}),
            results: json!({"a": {"b": [1, 2]}, "c": [{"d": true}]}),
            warnings: vec!["w".into()],
        };
        let t = r.to_text();
        assert!(t.contains("  a:\n    b: [1, 2]\n"));
        assert!(t.contains("  - w"));
    }
}
