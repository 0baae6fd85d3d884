use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::classify::classify_ade;
use super::muconst::mu_const_linear_check;
use super::newton::{newton_diagram_2d, newton_number_2d};
use super::spectrum::{
    milnor_number_from_weights, modality_quasihomogeneous, monodromy_eigenvalue_angles,
    spectrum_quasihomogeneous,
};
use super::Germ;
use crate::poly::{parse_with_inferred_vars, Polynomial};
use crate::weyl::{exponents_and_coxeter_number, RootSystem};
use crate::Rational;

/// One germ line `<name> ; <polynomial>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub line: usize,
    pub name: String,
    pub poly: Polynomial,
    pub vars: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusLineError {
    pub line: usize,
    pub message: String,
}

/// Splits a corpus into entries. Blank lines and text after `#` are ignored;
/// malformed lines are reported with 1-based line numbers and skipped.
pub fn parse_corpus(text: &str) -> (Vec<CorpusEntry>, Vec<CorpusLineError>) {
    let mut entries = Vec::new();
    let mut errors = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((name, poly_text)) = content.split_once(';') else {
            errors.push(CorpusLineError {
                line,
                message: "expected `<name> ; <polynomial>`".into(),
            });
            continue;
        };
        let name = name.trim();
        if name.is_empty() {
            errors.push(CorpusLineError {
                line,
                message: "empty germ name".into(),
            });
            continue;
        }
        match parse_with_inferred_vars(poly_text.trim()) {
            Ok((poly, vars)) => entries.push(CorpusEntry {
                line,
                name: name.to_string(),
                poly,
                vars,
            }),
            Err(e) => errors.push(CorpusLineError {
                line,
                message: e.to_string(),
            }),
        }
    }
    (entries, errors)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GermReport {
    pub name: String,
    pub line: usize,
    pub polynomial: String,
    pub mu: Option<usize>,
    pub weights: Option<Vec<String>>,
    pub spectrum: Option<Vec<String>>,
    #[serde(rename = "type")]
    pub rstype: Option<String>,
    pub h: Option<u64>,
    pub exponents: Option<Vec<u64>>,
    pub checks: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl GermReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub germs: Vec<GermReport>,
    pub errors: Vec<CorpusLineError>,
    pub pass: bool,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}

fn check(checks: &mut Vec<CheckResult>, id: &str, pass: bool) {
    checks.push(CheckResult {
        id: id.to_string(),
        pass,
    });
}

/// Classification and cross-checks for one germ.
pub fn germ_report(entry: &CorpusEntry) -> GermReport {
    let mut report = GermReport {
        name: entry.name.clone(),
        line: entry.line,
        polynomial: entry.poly.to_string_with(&entry.vars),
        mu: None,
        weights: None,
        spectrum: None,
        rstype: None,
        h: None,
        exponents: None,
        checks: Vec::new(),
        error: None,
    };
    let germ = match Germ::with_names(entry.poly.clone(), entry.vars.clone()) {
        Ok(g) => g,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    let mu = germ.milnor_number();
    report.mu = Some(mu);
    let checks = &mut report.checks;
    if let Some(w) = germ.weights() {
        report.weights = Some(strings(w.values()));
        check(
            checks,
            "milnor-weights",
            milnor_number_from_weights(w) == Rational::from_integer(mu.into()),
        );
        if let Ok(s) = spectrum_quasihomogeneous(&germ) {
            report.spectrum = Some(strings(s.values()));
            check(checks, "spectrum-symmetry", s.is_symmetric());
            check(checks, "spectrum-size", s.len() == mu);
        }
    }
    if let Ok(d) = newton_diagram_2d(germ.poly()) {
        if let Ok(nu) = newton_number_2d(&d) {
            check(checks, "newton-number", nu == mu as i64);
        }
    }
    let samples: Vec<Rational> = ["1", "-1", "1/2"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    check(
        checks,
        "mu-const",
        mu_const_linear_check(&germ, &samples).pass(),
    );
    match classify_ade(&germ) {
        Ok(c) => {
            let data = exponents_and_coxeter_number(&RootSystem::build(c.rstype));
            let h = Rational::from_integer(data.coxeter_number.into());
            let mut scaled: Vec<Rational> = c.spectrum3.values().iter().map(|v| v * &h).collect();
            scaled.sort();
            let expected: Vec<Rational> = data
                .exponents
                .iter()
                .map(|&m| Rational::from_integer(m.into()))
                .collect();
            check(
                checks,
                "coxeter-bridge",
                scaled == expected && c.coxeter_number == data.coxeter_number,
            );
            let angles: Vec<Rational> = expected.iter().map(|m| m / &h).collect();
            check(
                checks,
                "monodromy-angles",
                monodromy_eigenvalue_angles(&c.spectrum3) == angles,
            );
            check(
                checks,
                "spectral-interval",
                c.spectrum.in_simple_interval() && c.spectrum3.in_simple_interval(),
            );
            check(
                checks,
                "modality-zero",
                modality_quasihomogeneous(&germ) == Ok(0),
            );
            report.rstype = Some(c.rstype.to_string());
            report.h = Some(c.coxeter_number);
            report.exponents = Some(c.exponents);
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    report
}

pub fn corpus_report(text: &str) -> CorpusReport {
    let (entries, errors) = parse_corpus(text);
    let germs: Vec<GermReport> = entries.iter().map(germ_report).collect();
    let pass = germs.iter().all(GermReport::pass);
    CorpusReport {
        germs,
        errors,
        pass,
    }
}

impl CorpusReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<10} {:<24} {:>4} {:<5} {:>4}  {:<28} checks",
            "name", "polynomial", "mu", "type", "h", "exponents"
        );
        for g in &self.germs {
            let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
            let exps = g.exponents.as_ref().map(|e| {
                e.iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            });
            let passed = g.checks.iter().filter(|c| c.pass).count();
            let _ = write!(
                out,
                "{:<10} {:<24} {:>4} {:<5} {:>4}  {:<28} {}/{}",
                g.name,
                g.polynomial,
                opt(g.mu.map(|m| m.to_string())),
                opt(g.rstype.clone()),
                opt(g.h.map(|h| h.to_string())),
                opt(exps),
                passed,
                g.checks.len()
            );
            for c in g.checks.iter().filter(|c| !c.pass) {
                let _ = write!(out, " FAIL:{}", c.id);
            }
            if let Some(e) = &g.error {
                let _ = write!(out, " ({e})");
            }
            out.push('\n');
        }
        for e in &self.errors {
            let _ = writeln!(out, "line {}: {}", e.line, e.message);
        }
        let _ = writeln!(
            out,
            "{} germs, {} line errors, {}",
            self.germs.len(),
            self.errors.len(),
            if self.pass {
                "all checks pass"
            } else {
                "CHECK FAILURES"
            }
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing_lines() {
        let text =
            "# header\nA2 ; x^3 + y^2\n\nbad line\nE6;x^3+y^4 # trailing\n ; x^2\nQ ; x^^2\n";
        let (entries, errors) = parse_corpus(text);
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[0].name, "A2");
        assert_eq!(entries[0].line, 2);
        assert_eq!(entries[1].name, "E6");
        assert_eq!(
            errors.iter().map(|e| e.line).collect::<Vec<_>>(),
            vec![4, 6, 7]
        );
    }

    #[test]
    fn report_for_small_corpus() {
        let r = corpus_report("A2 ; x^3 + y^2\nE7 ; x^3 + x*y^3\nJ10 ; x^3 + y^6\n");
        assert_eq!(r.germs.len(), 3);
        assert_eq!(r.germs[0].rstype.as_deref(), Some("A2"));
        assert_eq!(r.germs[1].exponents, Some(vec![1, 5, 7, 9, 11, 13, 17]));
        assert!(r.germs[2].rstype.is_none());
        assert!(r.germs[2]
            .error
            .as_deref()
            .unwrap()
            .starts_with("not simple"));
        assert!(r.pass);
        assert!(r.render_text().contains("all checks pass"));
    }

    #[test]
    fn empty_corpus() {
        let r = corpus_report("");
        assert!(r.germs.is_empty() && r.errors.is_empty() && r.pass);
    }

    #[test]
    fn json_round_trip() {
        let r = corpus_report("D5 ; x^2*y + y^4\nbad\n");
        let json = serde_json::to_string_pretty(&r).unwrap();
        let back: CorpusReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), json);
        assert!(json.contains("\"type\": \"D5\""));
    }
}
