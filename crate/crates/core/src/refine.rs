//! Regression testing and refinement of rules against pre- and post-patch
//! databases.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcher::{evaluate_rule, AstDatabase};
use crate::rule::{Condition, Origin, Predicate, Rule};

pub const DEFAULT_BUDGET: usize = 16;

/// Databases a rule must match (with the function it must match there)
/// and databases it must not match anywhere.
#[derive(Clone)]
pub struct RegressionSet<'a> {
    pub must_match: Vec<(&'a AstDatabase, String)>,
    pub must_not_match: Vec<&'a AstDatabase>,
    pub budget: usize,
}

impl<'a> RegressionSet<'a> {
    pub fn new(pre: &'a AstDatabase, function: &str, post: &'a AstDatabase) -> Self {
        RegressionSet { must_match: vec![(pre, function.to_string())], must_not_match: vec![post], budget: DEFAULT_BUDGET }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct EntryVerdict {
    pub entry: String,
    pub expected_match: bool,
    /// Functions the rule matched in the entry's database.
    pub matched: Vec<String>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub tp: usize,
    pub fp: usize,
    pub verdicts: Vec<EntryVerdict>,
}

fn matched_names(db: &AstDatabase, rule: &Rule) -> Vec<String> {
    let mut names: Vec<String> = evaluate_rule(db, rule).matches.into_iter().map(|m| m.function).collect();
    names.sort();
    names.dedup();
    names
}

/// True and false positives of `rule` on `set`. Matches of non-target
/// functions in must-match databases count as false positives.
pub fn regression_check(rule: &Rule, set: &RegressionSet) -> CheckResult {
    let mut tp = 0;
    let mut fp = 0;
    let mut verdicts = Vec::new();
    let mut seen: Vec<*const AstDatabase> = Vec::new();
    for (db, function) in &set.must_match {
        let matched = matched_names(db, rule);
        let hit = matched.contains(function);
        tp += usize::from(hit);
        let key = *db as *const AstDatabase;
        if !seen.contains(&key) {
            seen.push(key);
            let targets: BTreeSet<&str> = set
                .must_match
                .iter()
                .filter(|(d, _)| std::ptr::eq(*d, *db))
                .map(|(_, f)| f.as_str())
                .collect();
            fp += matched.iter().filter(|m| !targets.contains(m.as_str())).count();
        }
        verdicts.push(EntryVerdict { entry: format!("must-match {function}"), expected_match: true, matched, ok: hit });
    }
    for (i, db) in set.must_not_match.iter().enumerate() {
        let matched = matched_names(db, rule);
        fp += matched.len();
        let ok = matched.is_empty();
        verdicts.push(EntryVerdict { entry: format!("must-not-match #{i}"), expected_match: false, matched, ok });
    }
    CheckResult { tp, fp, verdicts }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Action {
    Check,
    Promote,
    Revert,
    Remove,
    Merge,
    Keep,
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Action::Check => "check",
            Action::Promote => "promote",
            Action::Revert => "revert",
            Action::Remove => "remove",
            Action::Merge => "merge",
            Action::Keep => "keep",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefineStep {
    pub action: Action,
    pub target: String,
    pub origin: Option<Origin>,
    pub tp: usize,
    pub fp: usize,
}

#[derive(Debug, Clone)]
pub struct Refinement {
    pub rule: Rule,
    pub log: Vec<RefineStep>,
    /// Set when the budget or the candidates ran out with false positives left.
    pub residual_fp: bool,
    pub checks: usize,
    pub final_check: CheckResult,
}

impl Refinement {
    pub fn render_log(&self) -> String {
        let mut out = String::new();
        for s in &self.log {
            let origin = s.origin.map(|o| format!(" ({o})")).unwrap_or_default();
            out.push_str(&format!("{} {}{origin} tp={} fp={}\n", s.action, s.target, s.tp, s.fp));
        }
        if self.residual_fp {
            out.push_str("residual-fp\n");
        }
        out
    }
}

fn overlaps(a: &Predicate, b: &Predicate) -> bool {
    a.target_kind == b.target_kind
        && a.polarity == b.polarity
        && a.anchors() == b.anchors()
        && a.conditions.iter().any(|c| b.conditions.contains(c))
}

/// Rule without predicate `target`; references to it are redirected to
/// `into`, or dropped when there is none.
fn without(rule: &Rule, target: &str, into: Option<&str>) -> Rule {
    let mut r = rule.clone();
    r.predicates.retain(|p| p.target != target);
    for p in r.predicates.iter_mut() {
        let own = p.target.clone();
        p.conditions = std::mem::take(&mut p.conditions)
            .into_iter()
            .filter_map(|c| match c {
                Condition::OccursBefore(t) if t == target => match into {
                    Some(i) if i != own => Some(Condition::OccursBefore(i.to_string())),
                    _ => None,
                },
                other => Some(other),
            })
            .collect();
    }
    r.prune_anchors();
    r
}

/// Tightens `rule` until it has no false positives on `set` (promoting
/// recorded context candidates, reverting any that lose a true positive),
/// then folds redundant predicates together where that costs nothing.
pub fn refine_rule(rule: &Rule, set: &RegressionSet) -> Result<Refinement> {
    if set.must_match.is_empty() {
        return Err(Error::Refine("regression set has no must-match entry".into()));
    }
    let full = set.must_match.len();
    let mut checks = 1;
    let mut best = regression_check(rule, set);
    if best.tp < full {
        return Err(Error::Refine(format!(
            "rule {} matches {} of {full} target functions before refinement",
            rule.rule_id, best.tp
        )));
    }
    let mut log = vec![RefineStep { action: Action::Check, target: String::new(), origin: None, tp: best.tp, fp: best.fp }];
    let mut current = rule.clone();
    let mut queue = std::mem::take(&mut current.candidates);
    queue.sort_by_key(|c| c.origin.promotion_rank());
    let mut queue = queue.into_iter();
    let mut spent = 0;
    while best.fp > 0 && spent < set.budget {
        let Some(c) = queue.next() else { break };
        spent += 1;
        let mut trial = current.clone();
        trial.predicates.push(c.clone());
        let res = regression_check(&trial, set);
        checks += 1;
        let step = |action| RefineStep { action, target: c.target.clone(), origin: Some(c.origin), tp: res.tp, fp: res.fp };
        if res.tp < full {
            log.push(step(Action::Revert));
        } else {
            log.push(step(Action::Promote));
            current = trial;
            best = res;
        }
    }
    current.candidates = queue.collect();
    let residual_fp = best.fp > 0;

    let targets: Vec<String> = current.predicates.iter().map(|p| p.target.clone()).collect();
    for t in targets {
        let Some(p) = current.predicates.iter().find(|p| p.target == t).cloned() else { continue };
        let Some(q) = current.predicates.iter().find(|q| q.target != t && overlaps(&p, q)).cloned() else { continue };
        let subsumed = p.conditions.iter().all(|c| q.conditions.contains(c));
        let mut merged = current.clone();
        let action = if subsumed {
            Action::Remove
        } else {
            let anchors = merged.anchors.clone();
            if let Some(host) = merged.predicates.iter_mut().find(|x| x.target == q.target) {
                for c in &p.conditions {
                    if !host.conditions.contains(c) && *c != Condition::OccursBefore(q.target.clone()) {
                        host.conditions.push(c.clone());
                    }
                }
                host.sync_params(&anchors);
            }
            Action::Merge
        };
        let trial = without(&merged, &t, Some(&q.target));
        if trial.is_vacuous() {
            continue;
        }
        let res = regression_check(&trial, set);
        checks += 1;
        let accept = res.tp == full && res.fp <= best.fp;
        log.push(RefineStep {
            action: if accept { action } else { Action::Keep },
            target: t.clone(),
            origin: Some(p.origin),
            tp: res.tp,
            fp: res.fp,
        });
        if accept {
            current = trial;
            best = res;
        }
    }
    current.renumber();
    current.prune_anchors();
    Ok(Refinement { rule: current, log, residual_fp, checks, final_check: best })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfront::parse_unit;
    use crate::rule::Polarity;
    use crate::rulegen::{generate, GenerationConfig};
    use crate::treediff::diff_trees;

    fn db(text: &str) -> AstDatabase {
        AstDatabase::from_units(vec![parse_unit("t.c", text)])
    }

    fn function(text: &str) -> crate::ast::AstTree {
        crate::cfront::parse_function(text).unwrap()
    }

    const PRE: &str = "int f(int a) {\n  int w = a - 1;\n  return a / w;\n}\n";
    const POST: &str = "int f(int a) {\n  int w = a - 1;\n  if (w == 0)\n    return 0;\n  return a / w;\n}\n";
    const DECOY: &str = "int d(int a) {\n  int w = g(a);\n  return a / w;\n}\n";

    fn rule() -> Rule {
        let s = diff_trees(&function(PRE), &function(POST));
        generate(&s, "r", "p", &GenerationConfig::default()).unwrap().rule
    }

    #[test]
    fn clean_rule_is_a_fixed_point() {
        let (pre, post) = (db(PRE), db(POST));
        let set = RegressionSet::new(&pre, "f", &post);
        let r = rule();
        let out = refine_rule(&r, &set).unwrap();
        assert_eq!(out.rule, r);
        assert!(!out.residual_fp);
        assert_eq!(out.final_check.tp, 1);
        assert_eq!(out.final_check.fp, 0);
    }

    #[test]
    fn weakened_rule_regains_its_definition() {
        let mut weak = rule();
        let at = weak.predicates.iter().position(|p| p.origin == Origin::BackwardAssignment).expect("definition");
        let def = weak.predicates.remove(at);
        weak.candidates.insert(0, def);
        let pre = db(&format!("{PRE}{DECOY}"));
        let post = db(POST);
        let set = RegressionSet::new(&pre, "f", &post);
        let before = regression_check(&weak, &set);
        assert!(before.fp >= 1, "{before:?}");
        let out = refine_rule(&weak, &set).unwrap();
        assert_eq!((out.final_check.tp, out.final_check.fp), (1, 0));
        assert!(out.rule.predicates.iter().any(|p| p.origin == Origin::BackwardAssignment));
        assert!(out.log.iter().any(|s| s.action == Action::Promote));
        assert!(out.checks <= 1 + set.budget + weak.predicates.len() + 1);
    }

    #[test]
    fn hopeless_promotions_are_reverted_and_flagged() {
        let mut weak = rule();
        let at = weak.predicates.iter().position(|p| p.origin == Origin::BackwardAssignment).unwrap();
        let mut def = weak.predicates.remove(at);
        def.conditions.push(Condition::child("expr", Condition::OperatorIs("*".into())));
        weak.candidates = vec![def];
        let pre = db(&format!("{PRE}{DECOY}"));
        let post = db(POST);
        let set = RegressionSet::new(&pre, "f", &post);
        let out = refine_rule(&weak, &set).unwrap();
        assert!(out.residual_fp);
        assert_eq!(out.final_check.tp, 1);
        assert!(out.log.iter().any(|s| s.action == Action::Revert));
        assert!(out.render_log().ends_with("residual-fp\n"));
    }

    #[test]
    fn lost_target_is_an_error() {
        let r = rule();
        let (pre, post) = (db(POST), db(POST));
        let set = RegressionSet::new(&pre, "f", &post);
        assert!(matches!(refine_rule(&r, &set), Err(Error::Refine(_))));
    }

    #[test]
    fn duplicate_predicates_are_folded() {
        let mut r = rule();
        let extra = r.predicates.iter().find(|p| p.polarity == Polarity::MustExist).cloned().unwrap();
        let mut copy = extra.clone();
        copy.name = "func_9".into();
        copy.target = "target_9".into();
        r.predicates.push(copy);
        let (pre, post) = (db(PRE), db(POST));
        let set = RegressionSet::new(&pre, "f", &post);
        let out = refine_rule(&r, &set).unwrap();
        assert_eq!(out.rule.predicates.len(), r.predicates.len() - 1);
        assert!(out.log.iter().any(|s| s.action == Action::Remove));
        let again = refine_rule(&out.rule, &set).unwrap();
        assert_eq!(again.rule, out.rule);
    }

    #[test]
    fn check_counts_strays_in_the_target_database() {
        let r = rule();
        let pre = db(&format!("{PRE}{}", PRE.replace("int f(", "int f2(")));
        let post = db(POST);
        let set = RegressionSet::new(&pre, "f", &post);
        let res = regression_check(&r, &set);
        assert_eq!((res.tp, res.fp), (1, 1));
        assert_eq!(res.verdicts[0].matched, ["f", "f2"]);
    }
}
