//! Rule IR: variable anchors, predicates over differential nodes, and
//! validation and interchange of whole rules.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ast::{NodeKind, Storage};
use crate::error::{Error, Result};

pub const RULE_FORMAT_VERSION: u32 = 1;

/// A rule-scoped variable identity. Bound at match time by declared type
/// and storage; the id only keeps the original name and declaration line
/// for readability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct VarAnchor {
    pub anchor_id: String,
    pub declared_type: String,
    pub storage: Storage,
}

impl VarAnchor {
    pub fn make_id(name: &str, line: u32) -> String {
        format!("v{name}_{line}")
    }

    /// Variable name the id was made from.
    pub fn source_name(&self) -> &str {
        let s = self.anchor_id.strip_prefix('v').unwrap_or(&self.anchor_id);
        s.rsplit_once('_').map_or(s, |(name, _)| name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    NodeKindIs(NodeKind),
    /// Callee name is one of the set.
    CalleeNameIs(Vec<String>),
    FieldNameIs(String),
    OperatorIs(String),
    LiteralValueIs(String),
    ChildAtRole { role: String, cond: Box<Condition> },
    ArgumentAt { index: usize, cond: Box<Condition> },
    /// Access to, declaration of, or initializer of the anchored variable.
    TargetsAnchor(String),
    /// Kind membership; `Literal` also admits `StringLiteral`.
    InstanceOf(NodeKind),
    /// Starts before the witness of the named predicate target.
    OccursBefore(String),
    AnyOperand(Box<Condition>),
    Negated(Box<Condition>),
}

impl Condition {
    pub fn callee(name: &str) -> Self {
        Condition::CalleeNameIs(vec![name.to_string()])
    }

    pub fn child(role: &str, cond: Condition) -> Self {
        Condition::ChildAtRole { role: role.to_string(), cond: Box::new(cond) }
    }

    pub fn arg(index: usize, cond: Condition) -> Self {
        Condition::ArgumentAt { index, cond: Box::new(cond) }
    }

    pub fn any_operand(cond: Condition) -> Self {
        Condition::AnyOperand(Box::new(cond))
    }

    pub fn negated(cond: Condition) -> Self {
        Condition::Negated(Box::new(cond))
    }

    pub fn anchor(id: &str) -> Self {
        Condition::TargetsAnchor(id.to_string())
    }

    /// Innermost condition below path steps.
    pub fn leaf(&self) -> &Condition {
        match self {
            Condition::ChildAtRole { cond, .. } | Condition::ArgumentAt { cond, .. } | Condition::AnyOperand(cond) => {
                cond.leaf()
            }
            other => other,
        }
    }

    pub fn anchors(&self, out: &mut BTreeSet<String>) {
        match self {
            Condition::TargetsAnchor(a) => {
                out.insert(a.clone());
            }
            Condition::ChildAtRole { cond, .. }
            | Condition::ArgumentAt { cond, .. }
            | Condition::AnyOperand(cond)
            | Condition::Negated(cond) => cond.anchors(out),
            _ => {}
        }
    }

    pub fn targets(&self, out: &mut BTreeSet<String>) {
        match self {
            Condition::OccursBefore(t) => {
                out.insert(t.clone());
            }
            Condition::ChildAtRole { cond, .. }
            | Condition::ArgumentAt { cond, .. }
            | Condition::AnyOperand(cond)
            | Condition::Negated(cond) => cond.targets(out),
            _ => {}
        }
    }

    /// Applies `f` to every condition bottom-up.
    pub fn rewrite(self, f: &mut impl FnMut(Condition) -> Condition) -> Condition {
        let inner = match self {
            Condition::ChildAtRole { role, cond } => Condition::ChildAtRole { role, cond: Box::new(cond.rewrite(f)) },
            Condition::ArgumentAt { index, cond } => Condition::ArgumentAt { index, cond: Box::new(cond.rewrite(f)) },
            Condition::AnyOperand(cond) => Condition::AnyOperand(Box::new(cond.rewrite(f))),
            Condition::Negated(cond) => Condition::Negated(Box::new(cond.rewrite(f))),
            other => other,
        };
        f(inner)
    }

    fn has_nested_negation(&self, under: bool) -> bool {
        match self {
            Condition::Negated(c) => under || c.has_nested_negation(true),
            Condition::ChildAtRole { cond, .. } | Condition::ArgumentAt { cond, .. } | Condition::AnyOperand(cond) => {
                cond.has_nested_negation(under)
            }
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Polarity {
    MustExist,
    MustNotExist,
}

/// What produced a predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    Delete,
    Insert,
    Update,
    Move,
    BackwardAssignment,
    BackwardValidation,
    ControllingCondition,
    BodyStatement,
    Sibling,
    ArraySibling,
    OutermostExpression,
    ParentStatement,
    SiblingStatement,
    ForwardUse,
}

impl Origin {
    pub fn is_context(self) -> bool {
        !matches!(self, Origin::Delete | Origin::Insert | Origin::Update | Origin::Move)
    }

    /// Promotion rank of context candidates; lower goes first.
    pub fn promotion_rank(self) -> u8 {
        match self {
            Origin::BackwardAssignment | Origin::BackwardValidation => 0,
            Origin::ControllingCondition | Origin::BodyStatement => 1,
            Origin::Sibling | Origin::ArraySibling => 2,
            Origin::OutermostExpression => 3,
            Origin::ParentStatement | Origin::SiblingStatement => 4,
            Origin::ForwardUse => 5,
            _ => 6,
        }
    }
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
        f.write_str(&s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct Predicate {
    pub name: String,
    pub target: String,
    pub target_kind: NodeKind,
    pub params: Vec<String>,
    pub conditions: Vec<Condition>,
    pub polarity: Polarity,
    pub origin: Origin,
    /// The edit only restyles code (e.g. `!p` to `p == NULL`).
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub style_only: bool,
}

impl Predicate {
    pub fn anchors(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for c in &self.conditions {
            c.anchors(&mut out);
        }
        out
    }

    /// Other predicate targets referenced by ordering conditions.
    pub fn referenced_targets(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for c in &self.conditions {
            c.targets(&mut out);
        }
        out
    }

    /// Sets `params` to exactly the anchors the conditions use, in anchor order of `rule_anchors`.
    pub fn sync_params(&mut self, rule_anchors: &[VarAnchor]) {
        let used = self.anchors();
        self.params = rule_anchors.iter().filter(|a| used.contains(&a.anchor_id)).map(|a| a.anchor_id.clone()).collect();
        for u in used {
            if !self.params.contains(&u) {
                self.params.push(u);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", rename_all_fields = "kebab-case")]
pub enum AnchorConstraint {
    TypeName { anchor: String, type_name: String },
    /// Globals keep their identity across functions, so they bind by name.
    Name { anchor: String, name: String },
    Storage { anchor: String, storage: Storage },
}

impl AnchorConstraint {
    pub fn anchor(&self) -> &str {
        match self {
            AnchorConstraint::TypeName { anchor, .. }
            | AnchorConstraint::Name { anchor, .. }
            | AnchorConstraint::Storage { anchor, .. } => anchor,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct Rule {
    pub rule_id: String,
    pub provenance: String,
    pub anchors: Vec<VarAnchor>,
    pub predicates: Vec<Predicate>,
    pub anchor_constraints: Vec<AnchorConstraint>,
    /// Context predicates recorded for refinement but not yet part of the rule.
    #[serde(default)]
    pub candidates: Vec<Predicate>,
}

impl Rule {
    pub fn new(rule_id: &str, provenance: &str) -> Self {
        Rule {
            rule_id: rule_id.to_string(),
            provenance: provenance.to_string(),
            anchors: Vec::new(),
            predicates: Vec::new(),
            anchor_constraints: Vec::new(),
            candidates: Vec::new(),
        }
    }

    pub fn anchor(&self, id: &str) -> Option<&VarAnchor> {
        self.anchors.iter().find(|a| a.anchor_id == id)
    }

    pub fn predicate(&self, name: &str) -> Option<&Predicate> {
        self.predicates.iter().find(|p| p.name == name)
    }

    pub fn is_vacuous(&self) -> bool {
        !self.predicates.iter().any(|p| p.polarity == Polarity::MustExist)
    }

    /// Next free predicate index over predicates and candidates.
    pub fn next_index(&self) -> usize {
        self.predicates
            .iter()
            .chain(&self.candidates)
            .filter_map(|p| p.name.strip_prefix("func_").and_then(|n| n.parse::<usize>().ok()))
            .map(|n| n + 1)
            .max()
            .unwrap_or(0)
    }

    /// Adds type, storage and (for globals) name constraints for every
    /// anchor lacking them.
    pub fn constrain_anchors(&mut self) {
        for a in &self.anchors {
            let cs = &mut self.anchor_constraints;
            let has_type = cs
                .iter()
                .any(|c| matches!(c, AnchorConstraint::TypeName { anchor, .. } if *anchor == a.anchor_id));
            if !a.declared_type.is_empty() && !has_type {
                cs.push(AnchorConstraint::TypeName { anchor: a.anchor_id.clone(), type_name: a.declared_type.clone() });
            }
            let has_name = cs.iter().any(|c| matches!(c, AnchorConstraint::Name { anchor, .. } if *anchor == a.anchor_id));
            if a.storage == Storage::GlobalRef && !has_name {
                cs.push(AnchorConstraint::Name { anchor: a.anchor_id.clone(), name: a.source_name().to_string() });
            }
            let has_storage =
                cs.iter().any(|c| matches!(c, AnchorConstraint::Storage { anchor, .. } if *anchor == a.anchor_id));
            if !has_storage {
                cs.push(AnchorConstraint::Storage { anchor: a.anchor_id.clone(), storage: a.storage });
            }
        }
    }

    /// Renames predicates to func_0.. and targets to target_0.., in order,
    /// with candidates numbered after them. Returns old target to new.
    pub fn renumber(&mut self) -> BTreeMap<String, String> {
        let map: BTreeMap<String, String> = self
            .predicates
            .iter()
            .chain(&self.candidates)
            .enumerate()
            .map(|(i, p)| (p.target.clone(), format!("target_{i}")))
            .collect();
        let rename = |p: &mut Predicate| {
            let t = map[&p.target].clone();
            p.name = t.replacen("target_", "func_", 1);
            p.target = t;
            p.conditions = std::mem::take(&mut p.conditions)
                .into_iter()
                .map(|c| {
                    c.rewrite(&mut |c| match c {
                        Condition::OccursBefore(t) => Condition::OccursBefore(map.get(&t).cloned().unwrap_or(t)),
                        other => other,
                    })
                })
                .collect();
        };
        self.predicates.iter_mut().for_each(rename);
        self.candidates.iter_mut().for_each(rename);
        map
    }

    /// Drops anchors no predicate or candidate uses, with their constraints.
    pub fn prune_anchors(&mut self) {
        let mut used = BTreeSet::new();
        for p in self.predicates.iter().chain(&self.candidates) {
            used.extend(p.anchors());
        }
        self.anchors.retain(|a| used.contains(&a.anchor_id));
        self.anchor_constraints.retain(|c| used.contains(c.anchor()));
    }

    /// Serialized document headed by `"rule-format": 1`.
    pub fn to_document(&self) -> String {
        let doc = RuleDocument { rule_format: RULE_FORMAT_VERSION, rule: self.clone() };
        let mut s = serde_json::to_string_pretty(&doc).expect("rule serializes");
        s.push('\n');
        s
    }

    pub fn from_document(text: &str) -> Result<Rule> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line() as u32,
            col: e.column() as u32,
            message: e.to_string(),
        })?;
        match value.get("rule-format").and_then(|v| v.as_u64()) {
            Some(v) if v == RULE_FORMAT_VERSION as u64 => {}
            Some(v) => return Err(Error::Version(format!("unsupported rule-format {v}"))),
            None => return Err(Error::Version("missing rule-format header".into())),
        }
        let doc: RuleDocument =
            serde_json::from_value(value).map_err(|e| Error::InvalidRule(format!("malformed field: {e}")))?;
        Ok(doc.rule)
    }
}

#[derive(Serialize, Deserialize)]
struct RuleDocument {
    #[serde(rename = "rule-format")]
    rule_format: u32,
    #[serde(flatten)]
    rule: Rule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Severity {
    Warning,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleDiagnostic {
    pub severity: Severity,
    pub message: String,
}

impl fmt::Display for RuleDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.severity {
            Severity::Warning => "warning",
            Severity::Error => "error",
        };
        write!(f, "{s}: {}", self.message)
    }
}

/// Checks the structural invariants of a rule. Empty iff the rule is sound.
pub fn validate_rule(rule: &Rule) -> Vec<RuleDiagnostic> {
    let mut out = Vec::new();
    let mut err = |m: String| out.push(RuleDiagnostic { severity: Severity::Error, message: m });
    if rule.is_vacuous() {
        err("vacuous rule".into());
    }
    let mut anchor_ids = HashSet::new();
    for a in &rule.anchors {
        if !anchor_ids.insert(a.anchor_id.as_str()) {
            err(format!("duplicate anchor {}", a.anchor_id));
        }
    }
    let mut names = HashSet::new();
    let mut targets = HashSet::new();
    for p in rule.predicates.iter().chain(&rule.candidates) {
        if !names.insert(p.name.as_str()) {
            err(format!("duplicate predicate {}", p.name));
        }
        if !targets.insert(p.target.as_str()) {
            err(format!("duplicate target {}", p.target));
        }
    }
    let exist_targets: HashSet<&str> =
        rule.predicates.iter().filter(|p| p.polarity == Polarity::MustExist).map(|p| p.target.as_str()).collect();
    let all_targets: HashSet<&str> = rule.predicates.iter().map(|p| p.target.as_str()).collect();
    for p in rule.predicates.iter().chain(&rule.candidates) {
        let used = p.anchors();
        for a in &used {
            if !p.params.contains(a) {
                err(format!("{}: anchor {a} used but not a parameter", p.name));
            }
        }
        for a in &p.params {
            if !anchor_ids.contains(a.as_str()) {
                err(format!("{}: dangling anchor {a}", p.name));
            }
        }
        for t in p.referenced_targets() {
            if t == p.target {
                err(format!("{}: occurs-before refers to its own target", p.name));
            } else if !all_targets.contains(t.as_str()) {
                err(format!("{}: occurs-before names unknown target {t}", p.name));
            } else if !exist_targets.contains(t.as_str()) {
                err(format!("{}: occurs-before names {t}, which has no witness", p.name));
            }
        }
        if p.conditions.iter().any(|c| c.has_nested_negation(false)) {
            err(format!("{}: nested negation", p.name));
        }
    }
    for c in &rule.anchor_constraints {
        if !anchor_ids.contains(c.anchor()) {
            err(format!("constraint on unknown anchor {}", c.anchor()));
        }
    }
    let mut used = BTreeSet::new();
    for p in rule.predicates.iter().chain(&rule.candidates) {
        used.extend(p.anchors());
    }
    for a in &rule.anchors {
        if !used.contains(&a.anchor_id) {
            out.push(RuleDiagnostic { severity: Severity::Warning, message: format!("unused anchor {}", a.anchor_id) });
        }
    }
    out
}

pub fn has_errors(diags: &[RuleDiagnostic]) -> bool {
    diags.iter().any(|d| d.severity == Severity::Error)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal() -> Rule {
        let mut r = Rule::new("r0", "case");
        r.predicates.push(Predicate {
            name: "func_0".into(),
            target: "target_0".into(),
            target_kind: NodeKind::FunctionCall,
            params: vec![],
            conditions: vec![Condition::callee("free")],
            polarity: Polarity::MustExist,
            origin: Origin::Delete,
            style_only: false,
        });
        r
    }

    #[test]
    fn minimal_rule_round_trips() {
        let r = minimal();
        let doc = r.to_document();
        assert!(doc.contains("\"rule-format\": 1"));
        assert_eq!(Rule::from_document(&doc).unwrap(), r);
        assert!(validate_rule(&r).is_empty());
    }

    #[test]
    fn version_and_field_errors() {
        let doc = minimal().to_document().replace("\"rule-format\": 1", "\"rule-format\": 9");
        assert!(matches!(Rule::from_document(&doc), Err(Error::Version(_))));
        let doc = minimal().to_document().replace("\"must-exist\"", "\"maybe\"");
        assert!(matches!(Rule::from_document(&doc), Err(Error::InvalidRule(_))));
        assert!(matches!(Rule::from_document("{"), Err(Error::Parse { .. })));
    }

    #[test]
    fn unused_anchor_warns() {
        let mut r = minimal();
        r.anchors.push(VarAnchor { anchor_id: "vp_3".into(), declared_type: "int".into(), storage: Storage::Local });
        let d = validate_rule(&r);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].severity, Severity::Warning);
        assert!(d[0].message.contains("unused anchor"));
    }

    #[test]
    fn dangling_occurs_before_is_an_error() {
        let mut r = minimal();
        r.predicates[0].conditions.push(Condition::OccursBefore("target_7".into()));
        let d = validate_rule(&r);
        assert!(has_errors(&d));
        assert!(d[0].message.contains("unknown target"));
    }

    #[test]
    fn rule_without_must_exist_is_vacuous() {
        let mut r = minimal();
        r.predicates.clear();
        assert!(validate_rule(&r).iter().any(|d| d.message == "vacuous rule"));
    }

    #[test]
    fn next_index_counts_candidates() {
        let mut r = minimal();
        let mut c = r.predicates[0].clone();
        c.name = "func_4".into();
        c.target = "target_4".into();
        r.candidates.push(c);
        assert_eq!(r.next_index(), 5);
    }
}
