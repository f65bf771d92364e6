//! Rule evaluation over a database of parsed functions.
//!
//! Anchors bind to declared variables by type and storage. Evaluation is a
//! backtracking search: must-exist predicates are tried in dependency order
//! against candidate nodes in DFS order, then every must-not-exist predicate
//! is checked for the absence of a witness under any extension of the
//! binding.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use walkdir::WalkDir;

use crate::ast::{role, AstTree, NodeId, NodeKind, Storage};
use crate::cfront::{parse_unit, SourceUnit};
use crate::error::{Error, Result};
use crate::rule::{AnchorConstraint, Condition, Polarity, Predicate, Rule};

/// Reference to one function of the database.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FnRef {
    pub unit: usize,
    pub function: usize,
}

#[derive(Debug, Clone, Default)]
pub struct AstDatabase {
    pub units: Vec<SourceUnit>,
    /// Node postings per kind, ordered by function then DFS position.
    pub index: BTreeMap<NodeKind, Vec<(FnRef, NodeId)>>,
    /// Call-site postings per callee name.
    pub callee_index: BTreeMap<String, Vec<(FnRef, NodeId)>>,
    pub diagnostics: Vec<String>,
}

impl AstDatabase {
    pub fn from_units(units: Vec<SourceUnit>) -> Self {
        let mut db = AstDatabase { units, ..Default::default() };
        for (u, unit) in db.units.iter().enumerate() {
            for d in &unit.diagnostics {
                db.diagnostics.push(format!("{}:{d}", unit.path));
            }
            for (f, tree) in unit.functions.iter().enumerate() {
                let r = FnRef { unit: u, function: f };
                for id in tree.preorder() {
                    let n = tree.node(id);
                    db.index.entry(n.kind).or_default().push((r, id));
                    if n.kind == NodeKind::FunctionCall {
                        db.callee_index.entry(n.value_str().to_string()).or_default().push((r, id));
                    }
                }
            }
        }
        for list in db.index.values_mut().chain(db.callee_index.values_mut()) {
            list.sort();
        }
        db
    }

    /// Database holding a single tree, as if parsed from `path`.
    pub fn from_tree(path: &str, tree: AstTree) -> Self {
        let unit = SourceUnit { path: path.to_string(), text: String::new(), functions: vec![tree], diagnostics: vec![] };
        Self::from_units(vec![unit])
    }

    pub fn functions(&self) -> impl Iterator<Item = (FnRef, &AstTree)> {
        self.units.iter().enumerate().flat_map(|(u, unit)| {
            unit.functions.iter().enumerate().map(move |(f, t)| (FnRef { unit: u, function: f }, t))
        })
    }

    pub fn function_count(&self) -> usize {
        self.units.iter().map(|u| u.functions.len()).sum()
    }

    pub fn tree(&self, r: FnRef) -> &AstTree {
        &self.units[r.unit].functions[r.function]
    }

    pub fn find_function(&self, name: &str) -> Option<(FnRef, &AstTree)> {
        self.functions().find(|(_, t)| t.function_name == name)
    }

    fn postings(list: &[(FnRef, NodeId)], r: FnRef) -> &[(FnRef, NodeId)] {
        let lo = list.partition_point(|(f, _)| *f < r);
        let hi = list.partition_point(|(f, _)| *f <= r);
        &list[lo..hi]
    }

    /// Nodes of `kind` in function `r`, in DFS order.
    pub fn nodes_of_kind(&self, r: FnRef, kind: NodeKind) -> Vec<NodeId> {
        self.index.get(&kind).map(|l| Self::postings(l, r).iter().map(|(_, n)| *n).collect()).unwrap_or_default()
    }

    pub fn calls_to(&self, r: FnRef, name: &str) -> usize {
        self.callee_index.get(name).map_or(0, |l| Self::postings(l, r).len())
    }
}

fn is_source(p: &Path) -> bool {
    matches!(p.extension().and_then(|e| e.to_str()), Some("c" | "h" | "cc" | "cpp"))
}

/// Parses every C source under `paths` (files or directories).
pub fn build_db(paths: &[PathBuf]) -> Result<AstDatabase> {
    let mut files = Vec::new();
    for p in paths {
        if p.is_dir() {
            for e in WalkDir::new(p).sort_by_file_name() {
                let e = e.map_err(|e| Error::Config(e.to_string()))?;
                if e.file_type().is_file() && is_source(e.path()) {
                    files.push(e.into_path());
                }
            }
        } else if p.exists() {
            files.push(p.clone());
        } else {
            return Err(Error::io(p, std::io::Error::new(std::io::ErrorKind::NotFound, "no such file")));
        }
    }
    let units: Vec<SourceUnit> = files
        .par_iter()
        .map(|f| {
            let text = std::fs::read_to_string(f).map_err(|e| Error::io(f, e))?;
            Ok(parse_unit(&f.to_string_lossy(), &text))
        })
        .collect::<Result<_>>()?;
    let mut db = AstDatabase::from_units(units);
    if db.function_count() == 0 {
        db.diagnostics.push("warning: empty database, no parseable functions".into());
    }
    Ok(db)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct BoundVar {
    pub name: String,
    pub declared_type: String,
    pub storage: Storage,
    pub line: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct Witness {
    pub kind: NodeKind,
    pub node: u32,
    pub line: u32,
    pub col: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct FunctionMatch {
    pub function: String,
    pub file: String,
    pub line: u32,
    pub bindings: BTreeMap<String, BoundVar>,
    /// Witness per must-exist predicate, keyed by predicate name.
    pub witnesses: BTreeMap<String, Witness>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct MatchReport {
    pub rule_id: String,
    pub provenance: String,
    pub matches: Vec<FunctionMatch>,
    pub elapsed_ms: f64,
}

impl PartialEq for MatchReport {
    fn eq(&self, other: &Self) -> bool {
        self.rule_id == other.rule_id && self.provenance == other.provenance && self.matches == other.matches
    }
}

impl MatchReport {
    pub fn matched(&self, function: &str) -> bool {
        self.matches.iter().any(|m| m.function == function)
    }
}

/// Literal equality with `NULL` and `0` read as the same null constant.
fn same_literal(a: &str, b: &str) -> bool {
    let null = |s: &str| matches!(s, "0" | "NULL");
    a == b || (null(a) && null(b))
}

/// Spelling of a declared type without whitespace or `struct`/`union`/`enum` tags.
pub fn normalize_type(t: &str) -> String {
    t.replace('*', " * ")
        .split_whitespace()
        .filter(|w| !matches!(*w, "struct" | "union" | "enum"))
        .collect()
}

#[derive(Clone, Debug)]
struct Binding {
    vars: Vec<Option<usize>>,
    witnesses: Vec<Option<NodeId>>,
}

struct Compiled<'r> {
    rule: &'r Rule,
    anchor_ix: HashMap<&'r str, usize>,
    target_ix: HashMap<&'r str, usize>,
    types: Vec<Option<String>>,
    storages: Vec<Option<Storage>>,
    names: Vec<Option<&'r str>>,
    /// Must-exist predicate indices in evaluation order.
    order: Vec<usize>,
    negative: Vec<usize>,
    /// Anchors that some must-exist predicate references.
    required: Vec<bool>,
}

impl<'r> Compiled<'r> {
    fn new(rule: &'r Rule) -> Self {
        let anchor_ix: HashMap<&str, usize> =
            rule.anchors.iter().enumerate().map(|(i, v)| (v.anchor_id.as_str(), i)).collect();
        let mut types = vec![None; anchor_ix.len()];
        let mut storages = vec![None; anchor_ix.len()];
        let mut names = vec![None; anchor_ix.len()];
        for c in &rule.anchor_constraints {
            if let Some(&i) = anchor_ix.get(c.anchor()) {
                match c {
                    AnchorConstraint::TypeName { type_name, .. } => types[i] = Some(normalize_type(type_name)),
                    AnchorConstraint::Storage { storage, .. } => storages[i] = Some(*storage),
                    AnchorConstraint::Name { name, .. } => names[i] = Some(name.as_str()),
                }
            }
        }
        let target_ix = rule.predicates.iter().enumerate().map(|(i, p)| (p.target.as_str(), i)).collect();
        let positive: Vec<usize> =
            (0..rule.predicates.len()).filter(|i| rule.predicates[*i].polarity == Polarity::MustExist).collect();
        let negative =
            (0..rule.predicates.len()).filter(|i| rule.predicates[*i].polarity == Polarity::MustNotExist).collect();
        let mut order = Vec::new();
        let mut pending = positive;
        while !pending.is_empty() {
            let ready = pending.iter().position(|&i| {
                rule.predicates[i].referenced_targets().iter().all(|t| {
                    rule.predicates.iter().position(|p| &p.target == t).is_none_or(|j| order.contains(&j) || j == i)
                })
            });
            order.push(pending.remove(ready.unwrap_or(0)));
        }
        let mut required = vec![false; anchor_ix.len()];
        for &i in &order {
            for a in rule.predicates[i].anchors() {
                if let Some(&k) = anchor_ix.get(a.as_str()) {
                    required[k] = true;
                }
            }
        }
        // anchors no predicate references still need some compatible variable
        for v in &rule.anchors {
            let k = anchor_ix[v.anchor_id.as_str()];
            if !rule.predicates.iter().any(|p| p.anchors().contains(&v.anchor_id)) {
                required[k] = true;
            }
        }
        Compiled { rule, anchor_ix, target_ix, types, storages, names, order, negative, required }
    }
}

struct Eval<'a, 'r> {
    c: &'a Compiled<'r>,
    tree: &'a AstTree,
    kinds: HashMap<NodeKind, Vec<NodeId>>,
    var_types: Vec<String>,
}

fn strip_casts(tree: &AstTree, mut n: NodeId) -> NodeId {
    while tree.node(n).kind == NodeKind::CastExpr {
        match tree.node(n).children.last() {
            Some(c) => n = *c,
            None => break,
        }
    }
    n
}

impl Eval<'_, '_> {
    fn compatible(&self, anchor: usize, var: usize) -> bool {
        let v = self.tree.var(var);
        self.c.storages[anchor].is_none_or(|s| s == v.storage)
            && self.c.types[anchor].as_ref().is_none_or(|t| *t == self.var_types[var])
            && self.c.names[anchor].is_none_or(|n| n == v.name)
    }

    fn bind(&self, anchor: usize, var: usize, b: &Binding) -> Option<Binding> {
        match b.vars[anchor] {
            Some(v) => (v == var).then(|| b.clone()),
            None => {
                if !self.compatible(anchor, var) || b.vars.contains(&Some(var)) {
                    return None;
                }
                let mut nb = b.clone();
                nb.vars[anchor] = Some(var);
                Some(nb)
            }
        }
    }

    /// All extensions of `b` under which `cond` holds at `node`.
    fn sat(&self, cond: &Condition, node: NodeId, b: &Binding) -> Vec<Binding> {
        let n = self.tree.node(node);
        let keep = |ok: bool| if ok { vec![b.clone()] } else { vec![] };
        match cond {
            Condition::NodeKindIs(k) => keep(n.kind == *k),
            Condition::InstanceOf(k) => {
                keep(n.kind == *k || (*k == NodeKind::Literal && n.kind == NodeKind::StringLiteral))
            }
            Condition::CalleeNameIs(names) => {
                keep(n.kind == NodeKind::FunctionCall && names.iter().any(|x| x == n.value_str()))
            }
            Condition::FieldNameIs(f) => keep(
                matches!(n.kind, NodeKind::PointerFieldAccess | NodeKind::DotFieldAccess) && n.value_str() == f,
            ),
            Condition::OperatorIs(op) => keep(
                matches!(n.kind, NodeKind::BinaryExpr | NodeKind::UnaryExpr | NodeKind::AssignExpr)
                    && n.value_str() == op,
            ),
            Condition::LiteralValueIs(v) => keep(match n.kind {
                NodeKind::Literal => same_literal(n.value_str(), v),
                NodeKind::StringLiteral => n.value_str() == v,
                _ => false,
            }),
            Condition::TargetsAnchor(a) => {
                let Some(&ai) = self.c.anchor_ix.get(a.as_str()) else { return vec![] };
                let refers = match n.kind {
                    NodeKind::VariableAccess => n.role.as_deref() != Some(role::CALLEE),
                    NodeKind::LocalVariable | NodeKind::Parameter | NodeKind::Initializer => true,
                    _ => false,
                };
                match self.tree.var_ref(node).filter(|_| refers) {
                    Some(v) => self.bind(ai, v, b).into_iter().collect(),
                    None => vec![],
                }
            }
            Condition::OccursBefore(t) => {
                let w = self.c.target_ix.get(t.as_str()).and_then(|&i| b.witnesses[i]);
                keep(w.is_some_and(|w| n.loc.start() < self.tree.node(w).loc.start()))
            }
            Condition::ChildAtRole { role, cond } => {
                let kids: Vec<NodeId> = self.tree.children_with_role(node, role).collect();
                self.sat_children(cond, &kids, b)
            }
            Condition::ArgumentAt { index, cond } => {
                if n.kind != NodeKind::FunctionCall {
                    return vec![];
                }
                match self.tree.children_with_role(node, role::ARGUMENT).nth(*index) {
                    Some(arg) => self.sat_children(cond, &[arg], b),
                    None => vec![],
                }
            }
            Condition::AnyOperand(cond) => {
                let kids: Vec<NodeId> = n
                    .children
                    .iter()
                    .copied()
                    .filter(|c| {
                        matches!(self.tree.node(*c).role.as_deref(), Some(role::LHS | role::RHS | role::OPERAND))
                    })
                    .collect();
                self.sat_children(cond, &kids, b)
            }
            Condition::Negated(inner) => keep(self.sat(inner, node, b).is_empty()),
        }
    }

    /// Casts are transparent: a condition failing on a cast is retried on
    /// the expression underneath.
    fn sat_children(&self, cond: &Condition, kids: &[NodeId], b: &Binding) -> Vec<Binding> {
        let mut out = Vec::new();
        for &k in kids {
            let mut r = self.sat(cond, k, b);
            if r.is_empty() && self.tree.node(k).kind == NodeKind::CastExpr {
                r = self.sat(cond, strip_casts(self.tree, k), b);
            }
            out.extend(r);
        }
        out
    }

    fn sat_all(&self, p: &Predicate, node: NodeId, b: &Binding) -> Vec<Binding> {
        let mut cur = vec![b.clone()];
        for c in &p.conditions {
            let mut next = Vec::new();
            for x in &cur {
                next.extend(self.sat(c, node, x));
            }
            if next.is_empty() {
                return next;
            }
            cur = next;
        }
        cur
    }

    fn candidates(&self, p: &Predicate) -> &[NodeId] {
        self.kinds.get(&p.target_kind).map(Vec::as_slice).unwrap_or(&[])
    }

    fn negatives_hold(&self, b: &Binding) -> bool {
        self.c.negative.iter().all(|&i| {
            let p = &self.c.rule.predicates[i];
            self.candidates(p).iter().all(|&n| self.sat_all(p, n, b).is_empty())
        })
    }

    fn required_anchors_hold(&self, b: &Binding) -> bool {
        self.c.required.iter().enumerate().all(|(a, &req)| {
            !req || b.vars[a].is_some()
                || (0..self.tree.declared_vars.len()).any(|v| self.compatible(a, v) && !b.vars.contains(&Some(v)))
        })
    }

    fn search(&self, depth: usize, b: Binding, budget: &mut usize) -> Option<Binding> {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        let Some(&pi) = self.c.order.get(depth) else {
            return (self.required_anchors_hold(&b) && self.negatives_hold(&b)).then_some(b);
        };
        let p = &self.c.rule.predicates[pi];
        for &n in self.candidates(p) {
            for mut ext in self.sat_all(p, n, &b) {
                ext.witnesses[pi] = Some(n);
                if let Some(done) = self.search(depth + 1, ext, budget) {
                    return Some(done);
                }
            }
        }
        None
    }
}

/// Upper bound on search steps per function.
pub const SEARCH_BUDGET: usize = 200_000;

fn quick_reject(c: &Compiled, kinds: &HashMap<NodeKind, Vec<NodeId>>, tree: &AstTree) -> bool {
    c.order.iter().any(|&i| {
        let p = &c.rule.predicates[i];
        let Some(nodes) = kinds.get(&p.target_kind) else { return true };
        let callee = p.conditions.iter().find_map(|c| match c {
            Condition::CalleeNameIs(names) => Some(names),
            _ => None,
        });
        callee.is_some_and(|names| !nodes.iter().any(|n| names.iter().any(|x| x == tree.node(*n).value_str())))
    })
}

fn kind_map(tree: &AstTree) -> HashMap<NodeKind, Vec<NodeId>> {
    let mut kinds: HashMap<NodeKind, Vec<NodeId>> = HashMap::new();
    for id in tree.preorder() {
        kinds.entry(tree.node(id).kind).or_default().push(id);
    }
    kinds
}

fn evaluate_compiled(c: &Compiled, tree: &AstTree, file: &str) -> Option<FunctionMatch> {
    let kinds = kind_map(tree);
    if quick_reject(c, &kinds, tree) {
        return None;
    }
    let ev = Eval {
        c,
        tree,
        kinds,
        var_types: tree.declared_vars.iter().map(|v| normalize_type(&v.declared_type)).collect(),
    };
    let start = Binding { vars: vec![None; c.anchor_ix.len()], witnesses: vec![None; c.rule.predicates.len()] };
    let mut budget = SEARCH_BUDGET;
    let b = ev.search(0, start, &mut budget)?;
    let mut bindings = BTreeMap::new();
    for (id, &i) in &c.anchor_ix {
        if let Some(v) = b.vars[i] {
            let d = tree.var(v);
            bindings.insert(
                id.to_string(),
                BoundVar {
                    name: d.name.clone(),
                    declared_type: d.declared_type.clone(),
                    storage: d.storage,
                    line: d.loc.start_line,
                },
            );
        }
    }
    let mut witnesses = BTreeMap::new();
    for &i in &c.order {
        if let Some(n) = b.witnesses[i] {
            let node = tree.node(n);
            witnesses.insert(
                c.rule.predicates[i].name.clone(),
                Witness { kind: node.kind, node: n.0, line: node.loc.start_line, col: node.loc.start_col },
            );
        }
    }
    Some(FunctionMatch {
        function: tree.function_name.clone(),
        file: file.to_string(),
        line: tree.loc().start_line,
        bindings,
        witnesses,
    })
}

/// Evaluates `rule` on a single function.
pub fn evaluate_function(rule: &Rule, tree: &AstTree) -> Option<FunctionMatch> {
    let file = tree.loc().file.clone();
    evaluate_compiled(&Compiled::new(rule), tree, &file)
}

pub fn evaluate_rule(db: &AstDatabase, rule: &Rule) -> MatchReport {
    let t0 = Instant::now();
    let c = Compiled::new(rule);
    let matches = if rule.is_vacuous() {
        Vec::new()
    } else {
        db.functions().filter_map(|(r, t)| evaluate_compiled(&c, t, &db.units[r.unit].path)).collect()
    };
    MatchReport {
        rule_id: rule.rule_id.clone(),
        provenance: rule.provenance.clone(),
        matches,
        elapsed_ms: t0.elapsed().as_secs_f64() * 1e3,
    }
}

/// Evaluates every rule; reports come back ordered by rule id.
pub fn scan(db: &AstDatabase, rules: &[Rule]) -> Vec<MatchReport> {
    let mut reports: Vec<MatchReport> = rules.par_iter().map(|r| evaluate_rule(db, r)).collect();
    reports.sort_by(|a, b| (&a.rule_id, &a.provenance).cmp(&(&b.rule_id, &b.provenance)));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfront::parse_function;
    use crate::rule::{Origin, VarAnchor};

    fn pred(i: usize, kind: NodeKind, conds: Vec<Condition>, polarity: Polarity) -> Predicate {
        let mut p = Predicate {
            name: format!("func_{i}"),
            target: format!("target_{i}"),
            target_kind: kind,
            params: vec![],
            conditions: conds,
            polarity,
            origin: Origin::Delete,
            style_only: false,
        };
        p.params = p.anchors().into_iter().collect();
        p
    }

    fn guard_rule() -> Rule {
        let mut r = Rule::new("g", "t");
        r.anchors.push(VarAnchor { anchor_id: "vn_1".into(), declared_type: "int".into(), storage: Storage::Local });
        r.constrain_anchors();
        r.predicates.push(pred(
            0,
            NodeKind::IfStmt,
            vec![
                Condition::child("condition", Condition::OperatorIs("<=".into())),
                Condition::child("condition", Condition::child("lhs", Condition::anchor("vn_1"))),
                Condition::OccursBefore("target_1".into()),
            ],
            Polarity::MustNotExist,
        ));
        r.predicates.push(pred(
            1,
            NodeKind::BinaryExpr,
            vec![Condition::OperatorIs("/".into()), Condition::child("rhs", Condition::anchor("vn_1"))],
            Polarity::MustExist,
        ));
        r
    }

    #[test]
    fn guard_flips_verdict_and_binding_ignores_names() {
        let r = guard_rule();
        let bad = parse_function("int f(int a) { int w = a - 2; return a / w; }").unwrap();
        let good = parse_function("int f(int a) { int w = a - 2; if (w <= 0) return 0; return a / w; }").unwrap();
        let late = parse_function("int f(int a) { int w = a - 2; a = a / w; if (w <= 0) return 0; return a; }").unwrap();
        let m = evaluate_function(&r, &bad).expect("match");
        assert_eq!(m.bindings["vn_1"].name, "w");
        assert_eq!(m.witnesses["func_1"].kind, NodeKind::BinaryExpr);
        assert!(evaluate_function(&r, &good).is_none());
        assert!(evaluate_function(&r, &late).is_some(), "guard after the use does not protect it");
    }

    #[test]
    fn casts_are_transparent_and_types_filter() {
        let mut r = Rule::new("c", "t");
        r.anchors.push(VarAnchor { anchor_id: "vp_1".into(), declared_type: "char *".into(), storage: Storage::Parameter });
        r.constrain_anchors();
        r.predicates.push(pred(
            0,
            NodeKind::FunctionCall,
            vec![Condition::callee("dup"), Condition::arg(0, Condition::anchor("vp_1"))],
            Polarity::MustExist,
        ));
        let t = parse_function("int f(char *s) { return dup((void *)s); }").unwrap();
        assert!(evaluate_function(&r, &t).is_some());
        let t = parse_function("int f(long s) { return dup(s); }").unwrap();
        assert!(evaluate_function(&r, &t).is_none());
    }

    #[test]
    fn tags_and_null_spellings_do_not_matter() {
        assert_eq!(normalize_type("struct  Select *"), normalize_type("Select*"));
        assert_ne!(normalize_type("struct rdtgroup *"), normalize_type("struct resctrl_group *"));
        let mut r = Rule::new("n", "t");
        r.anchors.push(VarAnchor { anchor_id: "vp_1".into(), declared_type: "Select *".into(), storage: Storage::Parameter });
        r.constrain_anchors();
        r.predicates.push(pred(
            0,
            NodeKind::BinaryExpr,
            vec![
                Condition::OperatorIs("==".into()),
                Condition::child("lhs", Condition::anchor("vp_1")),
                Condition::child("rhs", Condition::LiteralValueIs("0".into())),
            ],
            Polarity::MustExist,
        ));
        let t = parse_function("int f(struct Select *p) { if (p == NULL) return 1; return 0; }").unwrap();
        assert!(evaluate_function(&r, &t).is_some());
        let t = parse_function("int f(struct Select *p) { if (p == 1) return 1; return 0; }").unwrap();
        assert!(evaluate_function(&r, &t).is_none());
    }

    #[test]
    fn anchors_bind_injectively() {
        let mut r = Rule::new("i", "t");
        for a in ["va_1", "vb_1"] {
            r.anchors.push(VarAnchor { anchor_id: a.into(), declared_type: "int".into(), storage: Storage::Parameter });
        }
        r.constrain_anchors();
        r.predicates.push(pred(
            0,
            NodeKind::BinaryExpr,
            vec![
                Condition::child("lhs", Condition::anchor("va_1")),
                Condition::child("rhs", Condition::anchor("vb_1")),
            ],
            Polarity::MustExist,
        ));
        assert!(evaluate_function(&r, &parse_function("int f(int x) { return x + x; }").unwrap()).is_none());
        assert!(evaluate_function(&r, &parse_function("int f(int x, int y) { return x + y; }").unwrap()).is_some());
    }

    #[test]
    fn negation_is_universal_over_optional_anchors() {
        let mut r = Rule::new("n", "t");
        r.anchors.push(VarAnchor { anchor_id: "vq_1".into(), declared_type: "int".into(), storage: Storage::Local });
        r.constrain_anchors();
        r.predicates.push(pred(0, NodeKind::ReturnStmt, vec![], Polarity::MustExist));
        r.predicates.push(pred(
            1,
            NodeKind::IfStmt,
            vec![Condition::child("condition", Condition::anchor("vq_1"))],
            Polarity::MustNotExist,
        ));
        let t = parse_function("int f(void) { int a; int b; if (b) a = 1; return a; }").unwrap();
        assert!(evaluate_function(&r, &t).is_none());
        let t = parse_function("int f(void) { int a; return a; }").unwrap();
        assert!(evaluate_function(&r, &t).is_some());
    }

    #[test]
    fn database_indexes_are_consistent() {
        let unit = parse_unit("x.c", "int f(int a) { return g(a) + g(1); }\nint h(void) { return g(2); }\n");
        let db = AstDatabase::from_units(vec![unit.clone()]);
        let again = AstDatabase::from_units(vec![unit]);
        assert_eq!(db.index, again.index);
        let (r, _) = db.find_function("f").unwrap();
        assert_eq!(db.calls_to(r, "g"), 2);
        assert_eq!(db.nodes_of_kind(r, NodeKind::FunctionCall).len(), 2);
        let (h, _) = db.find_function("h").unwrap();
        assert_eq!(db.calls_to(h, "g"), 1);
    }
}
