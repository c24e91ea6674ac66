use std::fmt::Write as _;

use fatlab_core::arith::{fmt_decimal, Rational};
use serde::Serialize;
use serde_json::Value;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Printed in the literature.
    Published,
    /// Recomputed here by an independent route.
    Derived,
    /// Follows from definitions.
    Trivial,
}

impl Source {
    fn label(self) -> &'static str {
        match self {
            Source::Published => "published",
            Source::Derived => "derived",
            Source::Trivial => "trivial",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub id: String,
    pub source: Source,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub claims: Vec<Claim>,
    pub data: Value,
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), claims: Vec::new(), data: Value::Null, text: Vec::new() }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn claim<T: ToString + PartialEq>(&mut self, id: &str, source: Source, expected: T, computed: T) {
        let pass = expected == computed;
        self.claim_with(id, source, expected.to_string(), computed.to_string(), pass);
    }

    pub fn claim_with(&mut self, id: &str, source: Source, expected: String, computed: String, pass: bool) {
        self.claims.push(Claim { id: id.into(), source, expected, computed, pass });
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for l in &self.text {
            let _ = writeln!(out, "{l}");
        }
        if !self.claims.is_empty() {
            if !self.text.is_empty() {
                out.push('\n');
            }
            let w = |f: fn(&Claim) -> usize, min: usize| self.claims.iter().map(f).max().unwrap_or(0).max(min);
            let wi = w(|c| c.id.len(), 5);
            let we = w(|c| c.expected.len(), 8);
            let wc = w(|c| c.computed.len(), 8);
            let _ = writeln!(out, "{:<wi$}  {:<9}  {:<we$}  {:<wc$}  result", "claim", "source", "expected", "computed");
            for c in &self.claims {
                let _ = writeln!(
                    out,
                    "{:<wi$}  {:<9}  {:<we$}  {:<wc$}  {}",
                    c.id,
                    c.source.label(),
                    c.expected,
                    c.computed,
                    if c.pass { "ok" } else { "FAIL" }
                );
            }
        }
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// `p/q = d.dddddd`
pub fn show(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("{r} = {}", fmt_decimal(r, 6))
    }
}

pub fn decimal(r: &Rational) -> String {
    fmt_decimal(r, 6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fatlab_core::arith::rat;

    #[test]
    fn rationals_show_both_forms() {
        assert_eq!(show(&rat(3221, 638)), "3221/638 = 5.048589");
        assert_eq!(show(&rat(5, 1)), "5");
    }

    #[test]
    fn failed_claim_fails_report() {
        let mut r = Report::new("x");
        r.claim("a", Source::Trivial, 1, 1);
        assert!(r.passed());
        r.claim("b", Source::Published, 2, 3);
        assert!(!r.passed());
        let t = r.render_text();
        assert!(t.lines().nth(1).unwrap().ends_with("ok"));
        assert!(t.lines().nth(2).unwrap().ends_with("FAIL"));
    }
}
