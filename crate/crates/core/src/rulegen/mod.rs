//! Edit script to rule: differential predicates, control- and data-flow
//! context, and generalization.

mod cfg;
mod dfg;
mod generalize;

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::ast::{role, AstTree, NodeId, NodeKind};
use crate::error::{Error, Result};
use crate::matcher::evaluate_function;
use crate::rule::{Condition, Origin, Polarity, Predicate, Rule, VarAnchor};
use crate::treediff::{EditKind, EditScript};

pub use cfg::enrich_cfg;
pub use dfg::enrich_dfg;
pub use generalize::{canonical_expr, generalize, generalize_rule, COMMUTATIVE};

/// Deepest path a description follows below its target.
pub const MAX_DEPTH: usize = 4;
/// Condition budget per described node.
pub const MAX_CONDITIONS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case", deny_unknown_fields)]
pub struct GenerationConfig {
    pub wrapper_substitutions: BTreeMap<String, String>,
    pub drop_noise: bool,
    pub operand_symmetry: bool,
    pub max_dfg_hops: usize,
}

impl Default for GenerationConfig {
    fn default() -> Self {
        GenerationConfig { wrapper_substitutions: BTreeMap::new(), drop_noise: true, operand_symmetry: true, max_dfg_hops: 3 }
    }
}

impl GenerationConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let c: GenerationConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).unwrap_or_default()
    }

    /// Rejects substitution cycles.
    pub fn validate(&self) -> Result<()> {
        for start in self.wrapper_substitutions.keys() {
            let mut seen = BTreeSet::new();
            let mut cur = start;
            while let Some(next) = self.wrapper_substitutions.get(cur) {
                if !seen.insert(cur) || next == start {
                    return Err(Error::Config(format!("wrapper substitution cycle through {start}")));
                }
                cur = next;
            }
        }
        Ok(())
    }

    /// `name` followed by every name it substitutes to.
    pub fn substitution_chain(&self, name: &str) -> Vec<String> {
        let mut out = vec![name.to_string()];
        let mut cur = name;
        while let Some(next) = self.wrapper_substitutions.get(cur) {
            if out.contains(next) {
                break;
            }
            out.push(next.clone());
            cur = next;
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Pre,
    Post,
}

/// Node a predicate was generated from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Source {
    pub side: Side,
    pub node: NodeId,
    /// Differential subtree roots the predicate covers.
    pub roots: Vec<NodeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OpOutcome {
    /// Predicate (by target) the op contributes to.
    Predicate(String),
    Dropped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpRecord {
    pub index: usize,
    pub op: EditKind,
    pub kind: NodeKind,
    pub outcome: OpOutcome,
}

/// A rule under construction, with the bookkeeping later stages need.
#[derive(Debug, Clone)]
pub struct Draft {
    pub rule: Rule,
    /// Generating node per predicate target.
    pub sources: BTreeMap<String, Source>,
    pub log: Vec<OpRecord>,
    pub notes: Vec<String>,
}

impl Draft {
    /// Removes predicates (or candidates) by target, with the
    /// occurs-before conditions that point at them.
    pub fn drop_targets(&mut self, targets: &BTreeSet<String>, reason: &str) {
        if targets.is_empty() {
            return;
        }
        self.rule.predicates.retain(|p| !targets.contains(&p.target));
        self.rule.candidates.retain(|p| !targets.contains(&p.target));
        for p in self.rule.predicates.iter_mut().chain(self.rule.candidates.iter_mut()) {
            p.conditions.retain(|c| !matches!(c, Condition::OccursBefore(t) if targets.contains(t)));
        }
        for r in &mut self.log {
            if matches!(&r.outcome, OpOutcome::Predicate(t) if targets.contains(t)) {
                r.outcome = OpOutcome::Dropped(reason.to_string());
            }
        }
        for t in targets {
            self.notes.push(format!("dropped {t}: {reason}"));
        }
        self.rule.prune_anchors();
    }

    /// Renumbers the rule, carrying sources and the log along.
    pub fn renumber(&mut self) {
        let map = self.rule.renumber();
        self.sources = std::mem::take(&mut self.sources)
            .into_iter()
            .filter_map(|(t, s)| map.get(&t).map(|n| (n.clone(), s)))
            .collect();
        for r in &mut self.log {
            if let OpOutcome::Predicate(t) = &r.outcome {
                if let Some(n) = map.get(t) {
                    r.outcome = OpOutcome::Predicate(n.clone());
                }
            }
        }
    }

    pub fn render_log(&self) -> String {
        let mut out = String::new();
        for r in &self.log {
            let what = match &r.outcome {
                OpOutcome::Predicate(t) => format!("-> {t}"),
                OpOutcome::Dropped(why) => format!("dropped ({why})"),
            };
            out.push_str(&format!("op {} {} {} {what}\n", r.index, r.op, r.kind.name()));
        }
        for n in &self.notes {
            out.push_str(n);
            out.push('\n');
        }
        out
    }
}

/// Read access to both sides of a script.
pub(crate) struct Sides<'a> {
    pub script: &'a EditScript,
}

impl<'a> Sides<'a> {
    pub fn tree(&self, side: Side) -> &'a AstTree {
        match side {
            Side::Pre => &self.script.pre,
            Side::Post => &self.script.post,
        }
    }

    pub fn to_pre(&self, side: Side, n: NodeId) -> Option<NodeId> {
        match side {
            Side::Pre => Some(n),
            Side::Post => self.script.matches.pre_of(n),
        }
    }

    pub fn partner(&self, side: Side, n: NodeId) -> Option<NodeId> {
        match side {
            Side::Pre => self.script.matches.post_of(n),
            Side::Post => self.script.matches.pre_of(n),
        }
    }

    /// Anchor id of declared variable `var` of the tree on `side`. Post-side
    /// variables are named after their pre-side declaration when one exists.
    pub fn anchor_of(&self, side: Side, var: usize) -> VarAnchor {
        let d = self.tree(side).var(var);
        let pre = &self.script.pre;
        let decl = match side {
            Side::Post => pre.var_index(&d.name, d.storage).map(|i| pre.var(i)).unwrap_or(d),
            Side::Pre => d,
        };
        VarAnchor {
            anchor_id: VarAnchor::make_id(&decl.name, decl.loc.start_line),
            declared_type: decl.declared_type.clone(),
            storage: decl.storage,
        }
    }
}

/// Nearest ancestor-or-self that is a statement.
pub(crate) fn stmt_of(tree: &AstTree, mut n: NodeId) -> NodeId {
    while !tree.node(n).kind.is_statement() {
        match tree.parent(n) {
            Some(p) => n = p,
            None => break,
        }
    }
    n
}

/// Top of the expression containing `n`, stopping below initializers.
pub(crate) fn outermost_expr(tree: &AstTree, mut n: NodeId) -> NodeId {
    while let Some(p) = tree.parent(n) {
        if !tree.node(p).kind.is_expression() {
            break;
        }
        n = p;
    }
    n
}

pub(crate) fn strip_casts(tree: &AstTree, mut n: NodeId) -> NodeId {
    while tree.node(n).kind == NodeKind::CastExpr {
        match tree.node(n).children.last() {
            Some(c) => n = *c,
            None => break,
        }
    }
    n
}

/// Condition on a node's own payload, for kinds whose payload is expressible.
pub(crate) fn value_condition(kind: NodeKind, value: &str) -> Option<Condition> {
    match kind {
        NodeKind::FunctionCall if value != "*" => Some(Condition::callee(value)),
        NodeKind::PointerFieldAccess | NodeKind::DotFieldAccess => Some(Condition::FieldNameIs(value.into())),
        NodeKind::BinaryExpr | NodeKind::UnaryExpr | NodeKind::AssignExpr => Some(Condition::OperatorIs(value.into())),
        NodeKind::Literal | NodeKind::StringLiteral => Some(Condition::LiteralValueIs(value.into())),
        _ => None,
    }
}

/// Wraps `cond` in the single step from `parent` to its child `child`.
pub(crate) fn step(tree: &AstTree, parent: NodeId, child: NodeId, cond: Condition) -> Condition {
    let p = tree.node(parent);
    let r = tree.node(child).role.clone().unwrap_or_default();
    if p.kind == NodeKind::FunctionCall && r == role::ARGUMENT {
        let index = tree.children_with_role(parent, role::ARGUMENT).position(|c| c == child).unwrap_or(0);
        Condition::arg(index, cond)
    } else {
        Condition::child(&r, cond)
    }
}

/// Wraps `cond` in the path from `ancestor` down to `node`.
pub(crate) fn path_to(tree: &AstTree, ancestor: NodeId, node: NodeId, mut cond: Condition) -> Condition {
    let mut n = node;
    while n != ancestor {
        let Some(p) = tree.parent(n) else { break };
        cond = step(tree, p, n, cond);
        n = p;
    }
    cond
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Every variable becomes an anchor.
    Differential,
    /// Only variables that already are anchors are referenced.
    Context,
}

/// Structural description of a node, as conditions relative to it.
pub(crate) struct Describer<'a, 's> {
    pub sides: &'s Sides<'a>,
    pub side: Side,
    pub mode: Mode,
    pub known: BTreeSet<String>,
    pub created: Vec<VarAnchor>,
    /// Nodes on the path to a focus node are described first.
    pub focus: HashSet<NodeId>,
}

impl<'a, 's> Describer<'a, 's> {
    pub fn new(sides: &'s Sides<'a>, side: Side, mode: Mode, known: BTreeSet<String>) -> Self {
        Describer { sides, side, mode, known, created: Vec::new(), focus: HashSet::new() }
    }

    fn tree(&self) -> &'a AstTree {
        self.sides.tree(self.side)
    }

    pub fn set_focus(&mut self, nodes: impl IntoIterator<Item = NodeId>) {
        let tree = self.tree();
        for n in nodes {
            let mut cur = Some(n);
            while let Some(c) = cur {
                if !self.focus.insert(c) {
                    break;
                }
                cur = tree.parent(c);
            }
        }
    }

    pub fn anchor(&mut self, n: NodeId) -> Option<String> {
        let v = self.tree().var_ref(n)?;
        let a = self.sides.anchor_of(self.side, v);
        let id = a.anchor_id.clone();
        if self.known.contains(&id) {
            return Some(id);
        }
        if self.mode == Mode::Differential {
            self.known.insert(id.clone());
            self.created.push(a);
            return Some(id);
        }
        None
    }

    fn own(&mut self, n: NodeId, as_arg: bool, top: bool) -> Vec<Condition> {
        let node = self.tree().node(n);
        match node.kind {
            NodeKind::Literal | NodeKind::StringLiteral if as_arg => vec![Condition::InstanceOf(node.kind)],
            NodeKind::VariableAccess | NodeKind::LocalVariable | NodeKind::Parameter => {
                if node.role.as_deref() == Some(role::CALLEE) {
                    return vec![];
                }
                self.anchor(n).map(Condition::TargetsAnchor).into_iter().collect()
            }
            NodeKind::Initializer if top => self.anchor(n).map(Condition::TargetsAnchor).into_iter().collect(),
            k => value_condition(k, node.value_str()).into_iter().collect(),
        }
    }

    fn below(&mut self, n: NodeId, depth: usize, out_len: usize) -> Vec<Condition> {
        let mut out = Vec::new();
        if depth > MAX_DEPTH {
            return out;
        }
        let tree = self.tree();
        let node = tree.node(n);
        let mut kids: Vec<NodeId> =
            node.children.iter().copied().filter(|c| tree.node(*c).role.as_deref() != Some(role::CALLEE)).collect();
        kids.sort_by_key(|c| !self.focus.contains(c));
        let is_call = node.kind == NodeKind::FunctionCall;
        for c in kids {
            if out_len + out.len() >= MAX_CONDITIONS {
                break;
            }
            let inner = strip_casts(tree, c);
            let kind = tree.node(inner).kind;
            let mut sub = self.own(inner, is_call, false);
            if !(is_call && matches!(kind, NodeKind::Literal | NodeKind::StringLiteral)) {
                let more = self.below(inner, depth + 1, out_len + out.len() + sub.len());
                sub.extend(more);
            }
            let omitted = self.mode == Mode::Context && kind == NodeKind::VariableAccess;
            if sub.is_empty() && !omitted {
                sub.push(Condition::NodeKindIs(kind));
            }
            for s in sub {
                out.push(step(tree, n, c, s));
            }
        }
        out
    }

    /// Conditions describing `n` as a predicate target.
    pub fn describe(&mut self, n: NodeId) -> Vec<Condition> {
        let mut out = self.own(n, false, true);
        let more = self.below(n, 1, out.len());
        out.extend(more);
        out.truncate(MAX_CONDITIONS);
        out
    }

    /// Conditions describing `root` as seen from its ancestor `target`.
    pub fn describe_from(&mut self, target: NodeId, root: NodeId) -> Vec<Condition> {
        let tree = self.tree();
        let parent = tree.parent(root).unwrap_or(target);
        let as_arg = tree.node(parent).kind == NodeKind::FunctionCall
            && tree.node(root).role.as_deref() == Some(role::ARGUMENT);
        let mut conds = self.own(root, as_arg, false);
        let more = self.below(root, 2, conds.len());
        conds.extend(more);
        if conds.is_empty() {
            conds.push(Condition::NodeKindIs(tree.node(root).kind));
        }
        conds.truncate(MAX_CONDITIONS);
        conds.into_iter().map(|c| path_to(tree, target, root, c)).collect()
    }
}

/// Outermost expression a statement evaluates, or the statement itself.
pub(crate) fn statement_focus(tree: &AstTree, s: NodeId) -> NodeId {
    let node = tree.node(s);
    let first = |r: &str| tree.children_with_role(s, r).next();
    match node.kind {
        NodeKind::ExprStmt => node.children.first().copied().unwrap_or(s),
        NodeKind::ReturnStmt => first(role::VALUE).unwrap_or(s),
        NodeKind::IfStmt | NodeKind::WhileStmt | NodeKind::SwitchStmt | NodeKind::ForStmt => {
            first(role::CONDITION).unwrap_or(s)
        }
        NodeKind::DeclStmt => node
            .children
            .iter()
            .find_map(|v| tree.children_with_role(*v, role::INIT).next())
            .map(|init| tree.node(init).children.first().copied().unwrap_or(init))
            .unwrap_or(s),
        _ => s,
    }
}

/// Anchor ids of every variable referenced under `n`.
pub(crate) fn anchors_under(sides: &Sides, side: Side, n: NodeId) -> BTreeSet<String> {
    let tree = sides.tree(side);
    let mut out = BTreeSet::new();
    let mut stack = vec![n];
    while let Some(x) = stack.pop() {
        let node = tree.node(x);
        let refers = match node.kind {
            NodeKind::VariableAccess => node.role.as_deref() != Some(role::CALLEE),
            NodeKind::LocalVariable => true,
            _ => false,
        };
        if refers {
            if let Some(v) = tree.var_ref(x) {
                out.insert(sides.anchor_of(side, v).anchor_id);
            }
        }
        stack.extend(node.children.iter().copied());
    }
    out
}

/// Adds a must-exist context predicate describing pre-patch node `node`,
/// either to the rule or to its candidate list. Returns the new target.
pub(crate) fn add_context(
    draft: &mut Draft,
    sides: &Sides,
    node: NodeId,
    origin: Origin,
    eager: bool,
) -> Option<String> {
    if draft.sources.values().any(|s| s.side == Side::Pre && s.node == node) {
        return None;
    }
    let known = draft.rule.anchors.iter().map(|a| a.anchor_id.clone()).collect();
    let mut d = Describer::new(sides, Side::Pre, Mode::Context, known);
    let conditions = d.describe(node);
    if conditions.is_empty() {
        return None;
    }
    let idx = draft.rule.next_index();
    let mut p = Predicate {
        name: format!("func_{idx}"),
        target: format!("target_{idx}"),
        target_kind: sides.script.pre.node(node).kind,
        params: vec![],
        conditions,
        polarity: Polarity::MustExist,
        origin,
        style_only: false,
    };
    p.sync_params(&draft.rule.anchors);
    let target = p.target.clone();
    draft.sources.insert(target.clone(), Source { side: Side::Pre, node, roots: vec![] });
    if eager {
        draft.rule.predicates.push(p);
    } else {
        draft.rule.candidates.push(p);
    }
    Some(target)
}

/// Differential predicates eligible for context: (target, source, polarity, anchors).
pub(crate) fn differential(draft: &Draft) -> Vec<(String, Source, Polarity, BTreeSet<String>)> {
    draft
        .rule
        .predicates
        .iter()
        .filter(|p| !p.origin.is_context() && !p.style_only)
        .filter_map(|p| draft.sources.get(&p.target).map(|s| (p.target.clone(), s.clone(), p.polarity, p.anchors())))
        .collect()
}

#[derive(Debug, Clone)]
struct Unit {
    side: Side,
    target: NodeId,
    ops: Vec<usize>,
    /// Differential nodes on the unit's side.
    nodes: Vec<NodeId>,
    /// Inserted subtree roots (post side only).
    roots: Vec<NodeId>,
    /// Updates of nodes under (or at) the target: (node, new value).
    updates: Vec<(NodeId, String)>,
    absorbs: bool,
}

fn add_unit(units: &mut Vec<Unit>, side: Side, target: NodeId, op: usize) -> usize {
    if let Some(i) = units.iter().position(|u| u.side == side && u.target == target) {
        units[i].ops.push(op);
        return i;
    }
    units.push(Unit { side, target, ops: vec![op], nodes: vec![], roots: vec![], updates: vec![], absorbs: false });
    units.len() - 1
}

/// Predicate target for a differential node: the node itself for
/// statements and nodes with children, else its parent.
fn lift(tree: &AstTree, n: NodeId, leaf_only: bool) -> NodeId {
    let node = tree.node(n);
    let lift = if leaf_only { node.children.is_empty() } else { !node.kind.is_statement() };
    match tree.parent(n) {
        Some(p) if lift => p,
        _ => n,
    }
}

fn inserted_root(script: &EditScript, mut n: NodeId) -> NodeId {
    while let Some(p) = script.post.parent(n) {
        if script.matches.pre_of(p).is_some() {
            break;
        }
        n = p;
    }
    n
}

fn deleted_root(script: &EditScript, mut n: NodeId) -> NodeId {
    while let Some(p) = script.pre.parent(n) {
        if script.matches.post_of(p).is_some() {
            break;
        }
        n = p;
    }
    n
}

fn build_units(script: &EditScript, log: &mut Vec<OpRecord>) -> Vec<Unit> {
    let mut units = Vec::new();
    let mut pending: Vec<(usize, Option<usize>, String)> = Vec::new();
    let (pre, post) = (&script.pre, &script.post);
    for (i, op) in script.ops.iter().enumerate() {
        match op.op {
            EditKind::Insert => {
                let Some(p) = op.post_node else { continue };
                let root = inserted_root(script, p);
                let target = lift(post, root, false);
                let u = add_unit(&mut units, Side::Post, target, i);
                if !units[u].roots.contains(&root) {
                    units[u].roots.push(root);
                }
                units[u].nodes.push(p);
            }
            EditKind::Delete => {
                let Some(d) = op.pre_node else { continue };
                let root = deleted_root(script, d);
                let u = add_unit(&mut units, Side::Pre, lift(pre, root, false), i);
                units[u].nodes.push(d);
                units[u].absorbs = true;
            }
            EditKind::MoveReparent | EditKind::MoveReorder => {
                let Some(m) = op.pre_node else { continue };
                let u = add_unit(&mut units, Side::Pre, lift(pre, m, false), i);
                units[u].nodes.push(m);
            }
            EditKind::Update => {
                let (Some(u), Some(v)) = (op.pre_node, op.post_node) else { continue };
                let node = pre.node(u);
                let new = op.new_value.clone().unwrap_or_default();
                if node.role.as_deref() == Some(role::CALLEE) {
                    if let Some(p) = pre.parent(u) {
                        let parent_updated = script.ops.iter().any(|o| {
                            o.op == EditKind::Update && o.pre_node == Some(p) && o.new_value.as_deref() == Some(&new)
                        });
                        if parent_updated {
                            pending.push((i, Some(p.index()), "callee of an updated call".into()));
                            continue;
                        }
                    }
                }
                let expressible = node.kind != NodeKind::VariableAccess && value_condition(node.kind, &new).is_some();
                let t = lift(pre, u, true);
                let ui = add_unit(&mut units, Side::Pre, t, i);
                units[ui].nodes.push(u);
                units[ui].absorbs = true;
                if expressible {
                    units[ui].updates.push((u, new));
                } else {
                    let pt = lift(post, v, true);
                    let pi = add_unit(&mut units, Side::Post, pt, i);
                    if !units[pi].roots.contains(&v) {
                        units[pi].roots.push(v);
                    }
                    units[pi].nodes.push(v);
                }
            }
        }
    }
    // callee updates ride along with their call's unit
    for (i, parent, _) in pending {
        if let Some(p) = parent {
            if let Some(u) = units.iter_mut().find(|u| u.side == Side::Pre && u.target.index() == p) {
                u.ops.push(i);
                continue;
            }
        }
        log.push(OpRecord {
            index: i,
            op: script.ops[i].op,
            kind: script.ops[i].kind,
            outcome: OpOutcome::Dropped("callee of an updated call".into()),
        });
    }
    // absorb pre-side units nested in an update/delete unit of the same statement
    let snapshot = units.clone();
    let mut absorbed = vec![None; units.len()];
    for (i, u) in snapshot.iter().enumerate() {
        if u.side != Side::Pre {
            continue;
        }
        let host = snapshot.iter().enumerate().find(|(j, t)| {
            *j != i
                && t.side == Side::Pre
                && t.absorbs
                && t.target != u.target
                && pre.is_ancestor(t.target, u.target)
                && stmt_of(pre, u.target) == stmt_of(pre, t.target)
        });
        if let Some((j, _)) = host {
            absorbed[i] = Some(j);
        }
    }
    for i in 0..units.len() {
        if let Some(mut j) = absorbed[i] {
            while let Some(k) = absorbed[j] {
                j = k;
            }
            let (ops, nodes) = (units[i].ops.clone(), units[i].nodes.clone());
            let ups = units[i].updates.clone();
            units[j].ops.extend(ops);
            units[j].nodes.extend(nodes);
            units[j].updates.extend(ups);
        }
    }
    let mut kept: Vec<Unit> = units.into_iter().enumerate().filter(|(i, _)| absorbed[*i].is_none()).map(|(_, u)| u).collect();
    for u in &mut kept {
        u.ops.sort_unstable();
        u.ops.dedup();
    }
    kept.sort_by_key(|u| u.ops[0]);
    kept
}

/// Counterpart of expression `top` on the other side: its partner, or the
/// child in the same slot of its parent's partner.
fn counterpart(sides: &Sides, side: Side, top: NodeId) -> Option<NodeId> {
    if let Some(o) = sides.partner(side, top) {
        return Some(o);
    }
    let tree = sides.tree(side);
    let p = tree.parent(top)?;
    let op = sides.partner(side, p)?;
    let r = tree.node(top).role.clone().unwrap_or_default();
    let slot = tree.children_with_role(p, &r).position(|c| c == top)?;
    let other = if side == Side::Pre { Side::Post } else { Side::Pre };
    let found = sides.tree(other).children_with_role(op, &r).nth(slot);
    found
}

/// Whether a unit only changes spelling: each expression it touches
/// canonicalizes to the same text as its counterpart on the other side.
fn style_only(sides: &Sides, u: &Unit) -> bool {
    let tree = sides.tree(u.side);
    let other_side = if u.side == Side::Pre { Side::Post } else { Side::Pre };
    let touched = if u.roots.is_empty() { &u.nodes } else { &u.roots };
    let mut tops = BTreeSet::new();
    for &n in touched {
        if !tree.node(n).kind.is_expression() {
            return false;
        }
        tops.insert(outermost_expr(tree, n));
    }
    !tops.is_empty()
        && tops.into_iter().all(|top| {
            counterpart(sides, u.side, top)
                .is_some_and(|o| canonical_expr(tree, top) == canonical_expr(sides.tree(other_side), o))
        })
}

/// Builds one predicate per differential unit: deletes, moves and updates
/// become must-exist predicates on the pre-patch node, inserts become
/// must-not-exist predicates on the post-patch pattern.
pub fn generate_raw_rule(script: &EditScript, rule_id: &str, provenance: &str) -> Result<Draft> {
    if script.is_empty() {
        return Err(Error::NoDifferentialNodes);
    }
    let sides = Sides { script };
    let mut log = Vec::new();
    let units = build_units(script, &mut log);
    let mut rule = Rule::new(rule_id, provenance);
    let mut sources = BTreeMap::new();
    let mut known = BTreeSet::new();
    for u in &units {
        let idx = rule.next_index();
        let tree = sides.tree(u.side);
        let mut d = Describer::new(&sides, u.side, Mode::Differential, std::mem::take(&mut known));
        d.set_focus(u.nodes.iter().copied());
        let (conditions, polarity, origin) = match u.side {
            Side::Pre => {
                let mut own = d.own(u.target, false, true);
                for (n, new) in &u.updates {
                    let Some(c) = value_condition(tree.node(*n).kind, new) else { continue };
                    own.push(Condition::negated(path_to(tree, u.target, *n, c)));
                }
                let more = d.below(u.target, 1, own.len());
                own.extend(more);
                own.truncate(MAX_CONDITIONS + u.updates.len());
                let ops: Vec<EditKind> = u.ops.iter().map(|i| script.ops[*i].op).collect();
                let origin = if ops.contains(&EditKind::Update) {
                    Origin::Update
                } else if ops.contains(&EditKind::Delete) {
                    Origin::Delete
                } else {
                    Origin::Move
                };
                (own, Polarity::MustExist, origin)
            }
            Side::Post => {
                let conds = if u.roots.contains(&u.target) {
                    d.describe(u.target)
                } else {
                    let mut c = d.own(u.target, false, true);
                    for r in &u.roots {
                        c.extend(d.describe_from(u.target, *r));
                    }
                    c
                };
                (conds, Polarity::MustNotExist, Origin::Insert)
            }
        };
        for a in d.created.drain(..) {
            if rule.anchor(&a.anchor_id).is_none() {
                rule.anchors.push(a);
            }
        }
        known = d.known;
        let mut p = Predicate {
            name: format!("func_{idx}"),
            target: format!("target_{idx}"),
            target_kind: tree.node(u.target).kind,
            params: vec![],
            conditions,
            polarity,
            origin,
            style_only: style_only(&sides, u),
        };
        p.sync_params(&rule.anchors);
        for &i in &u.ops {
            log.push(OpRecord {
                index: i,
                op: script.ops[i].op,
                kind: script.ops[i].kind,
                outcome: OpOutcome::Predicate(p.target.clone()),
            });
        }
        let roots = if u.roots.is_empty() { u.nodes.clone() } else { u.roots.clone() };
        sources.insert(p.target.clone(), Source { side: u.side, node: u.target, roots });
        rule.predicates.push(p);
    }
    log.sort_by_key(|r| r.index);
    rule.constrain_anchors();
    Ok(Draft { rule, sources, log, notes: Vec::new() })
}

/// Drops predicates that keep the rule from matching its own pre-patch
/// function: must-exist predicates first, then must-not-exist ones, each
/// kept only if the rule still matches with it.
pub fn fit_to_pre(draft: &mut Draft, pre: &AstTree) {
    let all = draft.rule.clone();
    let mut kept = all.clone();
    kept.predicates.clear();
    kept.candidates.clear();
    let mut dropped = BTreeSet::new();
    let order = all
        .predicates
        .iter()
        .filter(|p| p.polarity == Polarity::MustExist)
        .chain(all.predicates.iter().filter(|p| p.polarity == Polarity::MustNotExist));
    for p in order {
        let mut trial = kept.clone();
        let mut q = p.clone();
        q.conditions.retain(|c| !matches!(c, Condition::OccursBefore(t) if dropped.contains(t)));
        trial.predicates.push(q);
        let mut probe = trial.clone();
        probe.prune_anchors();
        if evaluate_function(&probe, pre).is_some() {
            kept = trial;
        } else {
            dropped.insert(p.target.clone());
        }
    }
    draft.drop_targets(&dropped, "does not hold on the pre-patch function");
    let order: Vec<String> = all.predicates.iter().map(|p| p.target.clone()).collect();
    draft.rule.predicates.sort_by_key(|p| order.iter().position(|t| *t == p.target));
}

/// Full generation: raw rule, context enrichment, generalization and the
/// pre-patch self-check, with predicates renumbered.
pub fn generate(script: &EditScript, rule_id: &str, provenance: &str, config: &GenerationConfig) -> Result<Draft> {
    config.validate()?;
    let mut draft = generate_raw_rule(script, rule_id, provenance)?;
    enrich_cfg(&mut draft, script);
    enrich_dfg(&mut draft, script, config);
    generalize(&mut draft, config)?;
    fit_to_pre(&mut draft, &script.pre);
    draft.renumber();
    if draft.rule.is_vacuous() {
        return Err(Error::VacuousRule);
    }
    Ok(draft)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfront::parse_function;
    use crate::treediff::diff_trees;

    fn script(pre: &str, post: &str) -> EditScript {
        diff_trees(&parse_function(pre).unwrap(), &parse_function(post).unwrap())
    }

    #[test]
    fn empty_script_is_an_error() {
        let s = script("int f(int a) { return a; }", "int f(int a) { return a; }");
        assert!(matches!(generate_raw_rule(&s, "r", "p"), Err(Error::NoDifferentialNodes)));
    }

    #[test]
    fn inserted_guard_is_one_must_not_exist_predicate() {
        let s = script(
            "int f(int a) { int w = a - 1; return a / w; }",
            "int f(int a) { int w = a - 1; if (w == 0) return 0; return a / w; }",
        );
        let d = generate_raw_rule(&s, "r", "p").unwrap();
        assert_eq!(d.rule.predicates.len(), 1);
        let p = &d.rule.predicates[0];
        assert_eq!((p.polarity, p.target_kind), (Polarity::MustNotExist, NodeKind::IfStmt));
        assert!(p.anchors().contains("vw_1"), "{:?}", p.anchors());
        assert!(d.log.iter().all(|r| r.outcome == OpOutcome::Predicate("target_0".into())));
    }

    #[test]
    fn update_carries_negated_new_value() {
        let s = script("int f(char *s) { return dup(s, 1); }", "int f(char *s) { return ndup(s, 1); }");
        let d = generate_raw_rule(&s, "r", "p").unwrap();
        let p = &d.rule.predicates[0];
        assert_eq!(p.conditions[0], Condition::callee("dup"));
        assert_eq!(p.conditions[1], Condition::negated(Condition::callee("ndup")));
        assert!(p.conditions.contains(&Condition::arg(1, Condition::InstanceOf(NodeKind::Literal))));
        assert!(d.log.iter().all(|r| matches!(r.outcome, OpOutcome::Predicate(_))), "{}", d.render_log());
    }

    #[test]
    fn style_rewrites_are_flagged() {
        let s = script("int f(char *p) { if (!p) return 1; return 0; }", "int f(char *p) { if (p == NULL) return 1; return 0; }");
        let d = generate_raw_rule(&s, "r", "p").unwrap();
        assert!(!d.rule.predicates.is_empty());
        assert!(d.rule.predicates.iter().all(|p| p.style_only), "{:?}", d.rule.predicates);
    }

    #[test]
    fn substitution_cycles_are_rejected() {
        let mut c = GenerationConfig::default();
        c.wrapper_substitutions.insert("a".into(), "b".into());
        c.wrapper_substitutions.insert("b".into(), "c".into());
        assert!(c.validate().is_ok());
        assert_eq!(c.substitution_chain("a"), ["a", "b", "c"]);
        c.wrapper_substitutions.insert("c".into(), "a".into());
        assert!(matches!(c.validate(), Err(Error::Config(_))));
    }

    #[test]
    fn config_round_trips_through_toml() {
        let mut c = GenerationConfig::default();
        c.wrapper_substitutions.insert("OPENSSL_strdup".into(), "strdup".into());
        assert_eq!(GenerationConfig::from_toml(&c.to_toml()).unwrap(), c);
        assert!(GenerationConfig::from_toml("bogus = 1").is_err());
    }
}
