//! Scan report rendering.

use std::fmt::Write as _;

use p2r_core::matcher::MatchReport;
use serde::Serialize;

pub const REPORT_FORMAT: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Serialize)]
struct Structured<'a> {
    #[serde(rename = "report-format")]
    report_format: u32,
    reports: &'a [MatchReport],
    diagnostics: &'a [String],
}

/// One line per match (`rule-id  file:line  function  bindings`), then a
/// timing line per rule.
pub fn render_text(reports: &[MatchReport], diagnostics: &[String]) -> String {
    let mut s = String::new();
    for d in diagnostics {
        let _ = writeln!(s, "# {d}");
    }
    for r in reports {
        for m in &r.matches {
            let bindings: Vec<String> =
                m.bindings.iter().map(|(a, v)| format!("{a}={}:{}", v.name, v.line)).collect();
            let _ = writeln!(s, "{}\t{}:{}\t{}\t{}", r.rule_id, m.file, m.line, m.function, bindings.join(","));
        }
    }
    for r in reports {
        let _ = writeln!(s, "# timing {} {:.3} ms, {} match(es)", r.rule_id, r.elapsed_ms, r.matches.len());
    }
    s
}

pub fn render_structured(reports: &[MatchReport], diagnostics: &[String]) -> String {
    let doc = Structured { report_format: REPORT_FORMAT, reports, diagnostics };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

pub fn render(format: Format, reports: &[MatchReport], diagnostics: &[String]) -> String {
    match format {
        Format::Text => render_text(reports, diagnostics),
        Format::Structured => render_structured(reports, diagnostics),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use p2r_core::matcher::{BoundVar, FunctionMatch};
    use p2r_core::Storage;

    fn report() -> MatchReport {
        let mut bindings = std::collections::BTreeMap::new();
        bindings.insert(
            "vw_3".to_string(),
            BoundVar { name: "w".into(), declared_type: "int".into(), storage: Storage::Local, line: 3 },
        );
        MatchReport {
            rule_id: "r".into(),
            provenance: "p".into(),
            matches: vec![FunctionMatch {
                function: "f".into(),
                file: "a.c".into(),
                line: 2,
                bindings,
                witnesses: Default::default(),
            }],
            elapsed_ms: 0.5,
        }
    }

    #[test]
    fn text_lists_location_function_and_bindings() {
        let t = render_text(&[report()], &[]);
        assert!(t.starts_with("r\ta.c:2\tf\tvw_3=w:3\n"), "{t}");
        assert!(t.contains("# timing r 0.500 ms, 1 match(es)"));
    }

    #[test]
    fn structured_is_versioned() {
        let v: serde_json::Value = serde_json::from_str(&render_structured(&[report()], &[])).unwrap();
        assert_eq!(v["report-format"], 1);
        assert_eq!(v["reports"][0]["matches"][0]["function"], "f");
    }
}
