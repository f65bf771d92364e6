//! Corpus evaluation: per-case verdicts of a rule repository and recall.

use std::fmt::Write as _;

use anyhow::Result;
use p2r_core::matcher::{evaluate_rule, AstDatabase};
use p2r_core::Rule;
use rayon::prelude::*;

use crate::manifest::{CaseSpec, CorpusManifest};
use crate::pipeline::database;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseVerdict {
    pub id: String,
    pub rules: Vec<String>,
    /// Every expected pre-patch function matched.
    pub pre_match: bool,
    /// No expected post-patch function matched.
    pub post_clean: bool,
    pub cognates_hit: usize,
    pub cognates_total: usize,
    /// Matches outside the expected functions, pre and post side.
    pub false_positives: usize,
    pub error: Option<String>,
}

impl CaseVerdict {
    pub fn recalled(&self) -> bool {
        !self.rules.is_empty() && self.pre_match
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalSummary {
    pub cases: Vec<CaseVerdict>,
}

impl EvalSummary {
    pub fn recalled(&self) -> usize {
        self.cases.iter().filter(|c| c.recalled()).count()
    }

    pub fn post_hits(&self) -> usize {
        self.cases.iter().filter(|c| !c.post_clean).count()
    }

    pub fn recall(&self) -> f64 {
        if self.cases.is_empty() {
            return 0.0;
        }
        self.recalled() as f64 / self.cases.len() as f64
    }

    /// Human-readable table and totals.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for c in &self.cases {
            let rules = if c.rules.is_empty() { "MISSING".to_string() } else { c.rules.join(",") };
            let _ = writeln!(
                s,
                "{:<28} {:<9} pre={:<5} post-clean={:<5} cognates={}/{} fp={}{}",
                c.id,
                if c.recalled() { "recalled" } else { "missed" },
                c.pre_match,
                c.post_clean,
                c.cognates_hit,
                c.cognates_total,
                c.false_positives,
                if c.rules.is_empty() { format!(" rules={rules}") } else { String::new() },
            );
            if let Some(e) = &c.error {
                let _ = writeln!(s, "  error: {e}");
            }
        }
        let cognates: usize = self.cases.iter().map(|c| c.cognates_hit).sum();
        let cognate_total: usize = self.cases.iter().map(|c| c.cognates_total).sum();
        let _ = writeln!(
            s,
            "recall {}/{} ({:.1}%), post-patch matches {}/{}, cognates {}/{}",
            self.recalled(),
            self.cases.len(),
            self.recall() * 100.0,
            self.post_hits(),
            self.cases.len(),
            cognates,
            cognate_total
        );
        s
    }

    /// Tab-separated table with a header row, one row per case.
    pub fn render_tsv(&self) -> String {
        let mut s = String::from("case\trules\trecalled\tpre_match\tpost_clean\tcognates_hit\tcognates_total\tfalse_positives\n");
        for c in &self.cases {
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                c.id,
                c.rules.len(),
                c.recalled() as u8,
                c.pre_match as u8,
                c.post_clean as u8,
                c.cognates_hit,
                c.cognates_total,
                c.false_positives
            );
        }
        s
    }
}

/// Rules in `rules` that belong to `case`: id equal to the case id, or
/// `<case>.<function>`.
pub fn rules_for<'r>(case: &CaseSpec, rules: &'r [Rule]) -> Vec<&'r Rule> {
    let prefix = format!("{}.", case.id);
    rules.iter().filter(|r| r.rule_id == case.id || r.rule_id.starts_with(&prefix)).collect()
}

fn matched(db: &AstDatabase, rules: &[&Rule]) -> Vec<String> {
    let mut names: Vec<String> =
        rules.iter().flat_map(|r| evaluate_rule(db, r).matches).map(|m| m.function).collect();
    names.sort();
    names.dedup();
    names
}

fn verdict(case: &CaseSpec, rules: &[&Rule]) -> Result<CaseVerdict> {
    let mut v = CaseVerdict {
        id: case.id.clone(),
        rules: rules.iter().map(|r| r.rule_id.clone()).collect(),
        pre_match: false,
        post_clean: true,
        cognates_hit: 0,
        cognates_total: case.expected.cognates.len(),
        false_positives: 0,
        error: None,
    };
    if rules.is_empty() {
        v.error = Some("no rule for this case".into());
        return Ok(v);
    }
    let wanted = if case.expected.pre_match.is_empty() { &case.targets } else { &case.expected.pre_match };
    let pre = matched(&database(&case.pre_root)?, rules);
    v.pre_match = if wanted.is_empty() { !pre.is_empty() } else { wanted.iter().all(|f| pre.contains(f)) };
    v.false_positives += pre.iter().filter(|f| !wanted.is_empty() && !wanted.contains(f)).count();
    let post = matched(&database(&case.post_root)?, rules);
    let guarded = &case.expected.post_nonmatch;
    v.post_clean = if guarded.is_empty() { post.is_empty() } else { !guarded.iter().any(|f| post.contains(f)) };
    v.false_positives += post.len();
    for g in &case.expected.cognates {
        if matched(&database(&g.root)?, rules).contains(&g.function) {
            v.cognates_hit += 1;
        }
    }
    Ok(v)
}

/// Evaluates `rules` against every case of `manifest`.
pub fn evaluate_corpus(manifest: &CorpusManifest, rules: &[Rule]) -> EvalSummary {
    let cases = manifest
        .cases
        .par_iter()
        .map(|c| {
            let mine = rules_for(c, rules);
            verdict(c, &mine).unwrap_or_else(|e| CaseVerdict {
                id: c.id.clone(),
                rules: mine.iter().map(|r| r.rule_id.clone()).collect(),
                pre_match: false,
                post_clean: false,
                cognates_hit: 0,
                cognates_total: c.expected.cognates.len(),
                false_positives: 0,
                error: Some(format!("{e:#}")),
            })
        })
        .collect();
    EvalSummary { cases }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(id: &str, rules: usize, pre: bool) -> CaseVerdict {
        CaseVerdict {
            id: id.into(),
            rules: (0..rules).map(|i| format!("{id}.{i}")).collect(),
            pre_match: pre,
            post_clean: true,
            cognates_hit: 0,
            cognates_total: 0,
            false_positives: 0,
            error: None,
        }
    }

    #[test]
    fn recall_counts_cases_with_a_matching_rule() {
        let s = EvalSummary { cases: vec![v("a", 1, true), v("b", 0, true), v("c", 1, false), v("d", 2, true)] };
        assert_eq!(s.recalled(), 2);
        assert!((s.recall() - 0.5).abs() < 1e-12);
        assert!(s.render_text().contains("recall 2/4 (50.0%)"));
        assert_eq!(s.render_tsv().lines().count(), 5);
    }

    #[test]
    fn empty_corpus_has_zero_recall() {
        assert_eq!(EvalSummary { cases: vec![] }.recall(), 0.0);
    }
}
