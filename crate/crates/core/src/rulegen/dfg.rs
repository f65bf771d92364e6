//! Data-flow context: definitions, validations and later uses of the
//! variables a differential predicate touches.

use std::collections::BTreeSet;

use super::{add_context, differential, outermost_expr, Draft, GenerationConfig, Side, Sides};
use crate::ast::{role, AstTree, NodeId, NodeKind};
use crate::rule::Origin;
use crate::treediff::EditScript;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Access {
    Write,
    Read,
    /// Read inside the controlling condition of a branch or loop.
    Validation,
}

/// One access to a variable, with the node that stands for it as context.
#[derive(Debug, Clone, Copy)]
struct Site {
    access: Access,
    at: (u32, u32),
    /// Outermost expression (or the declaration) holding the access.
    top: NodeId,
    context: NodeId,
}

fn is_write(tree: &AstTree, n: NodeId) -> bool {
    let node = tree.node(n);
    let Some(p) = tree.parent(n) else { return false };
    let parent = tree.node(p);
    match parent.kind {
        NodeKind::AssignExpr => node.role.as_deref() == Some(role::LHS),
        NodeKind::UnaryExpr => matches!(parent.value_str(), "++" | "--" | "post++" | "post--"),
        _ => false,
    }
}

fn is_validation(tree: &AstTree, top: NodeId) -> bool {
    tree.node(top).role.as_deref() == Some(role::CONDITION)
        && tree.parent(top).is_some_and(|p| {
            matches!(tree.node(p).kind, NodeKind::IfStmt | NodeKind::WhileStmt | NodeKind::ForStmt | NodeKind::SwitchStmt)
        })
}

/// Largest expression around `n` below any `&&`/`||`: the check itself
/// rather than the whole condition it is part of.
fn check_focus(tree: &AstTree, n: NodeId) -> NodeId {
    let mut cur = n;
    while let Some(p) = tree.parent(cur) {
        let parent = tree.node(p);
        if !parent.kind.is_expression() || (parent.kind == NodeKind::BinaryExpr && matches!(parent.value_str(), "&&" | "||")) {
            break;
        }
        cur = p;
    }
    cur
}

/// Every access to variable `v` in `tree`, in source order.
fn sites(tree: &AstTree, v: usize) -> Vec<Site> {
    let mut out = Vec::new();
    for n in tree.preorder() {
        let node = tree.node(n);
        let site = match node.kind {
            NodeKind::VariableAccess if node.role.as_deref() != Some(role::CALLEE) && tree.var_ref(n) == Some(v) => {
                let top = outermost_expr(tree, n);
                let (access, context) = if is_write(tree, n) {
                    (Access::Write, top)
                } else if is_validation(tree, top) {
                    (Access::Validation, check_focus(tree, n))
                } else {
                    (Access::Read, top)
                };
                Site { access, at: node.loc.start(), top, context }
            }
            NodeKind::LocalVariable if tree.var_ref(n) == Some(v) => {
                let Some(init) = tree.children_with_role(n, role::INIT).next() else { continue };
                Site { access: Access::Write, at: node.loc.start(), top: init, context: init }
            }
            _ => continue,
        };
        out.push(site);
    }
    out.sort_by_key(|s| s.at);
    out
}

/// Adds, for each variable referenced by a differential predicate, the
/// nearest earlier assignment and any nearer validation as predicates,
/// and up to `max_dfg_hops` later uses as refinement candidates.
pub fn enrich_dfg(draft: &mut Draft, script: &EditScript, config: &GenerationConfig) {
    let sides = Sides { script };
    for (_, src, _, anchors) in differential(draft) {
        let tree = sides.tree(src.side);
        let tops: Vec<NodeId> = match src.side {
            Side::Post => src.roots.clone(),
            Side::Pre => vec![src.node],
        };
        let region: BTreeSet<NodeId> = tops.iter().flat_map(|r| tree.dfs_traverse(*r).unwrap_or_default()).collect();
        let Some(first) = region.iter().map(|n| tree.node(*n).loc.start()).min() else { continue };
        let last = region.iter().map(|n| tree.node(*n).loc.end()).max().unwrap_or(first);
        let vars: BTreeSet<usize> = (0..tree.declared_vars.len())
            .filter(|v| anchors.contains(&sides.anchor_of(src.side, *v).anchor_id))
            .collect();
        let mut found: Vec<(Origin, NodeId, bool)> = Vec::new();
        for v in vars {
            let all: Vec<Site> = sites(tree, v).into_iter().filter(|s| !region.contains(&s.top)).collect();
            let before: Vec<&Site> = all.iter().filter(|s| s.at < first).collect();
            let write = before.iter().rev().find(|s| s.access == Access::Write);
            let check = before.iter().rev().find(|s| s.access == Access::Validation);
            if let Some(w) = write {
                found.push((Origin::BackwardAssignment, w.context, true));
            }
            if let Some(c) = check {
                if write.is_none_or(|w| c.at > w.at) {
                    found.push((Origin::BackwardValidation, c.context, true));
                }
            }
            let mut seen = BTreeSet::new();
            for s in all.iter().filter(|s| s.at > last) {
                if seen.len() >= config.max_dfg_hops {
                    break;
                }
                if seen.insert(s.context) {
                    found.push((Origin::ForwardUse, s.context, false));
                }
            }
        }
        for (origin, n, eager) in found {
            if let Some(pre_n) = sides.to_pre(src.side, n) {
                add_context(draft, &sides, pre_n, origin, eager);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfront::parse_function;
    use crate::rulegen::generate_raw_rule;
    use crate::treediff::diff_trees;

    const PRE: &str = "int h(void) {\n  int x;\n  x = f();\n  if (x > 0)\n    g(x);\n  k(x);\n  return x;\n}";
    const POST: &str = "int h(void) {\n  int x;\n  x = f();\n  if (x > 1)\n    g(x);\n  k(x);\n  return x;\n}";

    /// Line of the last `x =` above `line`, and lines after it naming `x`.
    fn scan(text: &str, line: usize) -> (usize, Vec<usize>) {
        let lines: Vec<&str> = text.lines().collect();
        let def = (0..line - 1).rev().find(|i| lines[*i].contains("x = ")).unwrap() + 1;
        let uses = (line..lines.len()).filter(|i| lines[*i].contains("(x)") || lines[*i].contains(" x;")).map(|i| i + 1);
        (def, uses.collect())
    }

    fn line_of(d: &Draft, s: &EditScript, target: &str) -> usize {
        s.pre.node(d.sources[target].node).loc.start_line as usize
    }

    #[test]
    fn definitions_and_uses_follow_a_linear_scan() {
        let s = diff_trees(&parse_function(PRE).unwrap(), &parse_function(POST).unwrap());
        let mut d = generate_raw_rule(&s, "r", "p").unwrap();
        enrich_dfg(&mut d, &s, &GenerationConfig::default());
        let (def, uses) = scan(PRE, 4);
        let back = d.rule.predicates.iter().find(|p| p.origin == Origin::BackwardAssignment).expect("definition");
        assert_eq!(back.target_kind, NodeKind::AssignExpr);
        assert_eq!(line_of(&d, &s, &back.target), def);
        let fwd: Vec<usize> = d
            .rule
            .candidates
            .iter()
            .filter(|c| c.origin == Origin::ForwardUse)
            .map(|c| line_of(&d, &s, &c.target))
            .collect();
        assert_eq!(fwd, uses);
    }

    #[test]
    fn forward_uses_respect_the_hop_cap() {
        let s = diff_trees(&parse_function(PRE).unwrap(), &parse_function(POST).unwrap());
        let mut d = generate_raw_rule(&s, "r", "p").unwrap();
        let config = GenerationConfig { max_dfg_hops: 1, ..GenerationConfig::default() };
        enrich_dfg(&mut d, &s, &config);
        assert_eq!(d.rule.candidates.iter().filter(|c| c.origin == Origin::ForwardUse).count(), 1);
    }

    #[test]
    fn nearer_validation_is_kept_with_the_definition() {
        let pre = "int h(int *p) {\n  int n = p[0];\n  if (n < 0)\n    return 0;\n  return q(n, 1);\n}";
        let post = "int h(int *p) {\n  int n = p[0];\n  if (n < 0)\n    return 0;\n  return q(n, 2);\n}";
        let s = diff_trees(&parse_function(pre).unwrap(), &parse_function(post).unwrap());
        let mut d = generate_raw_rule(&s, "r", "p").unwrap();
        enrich_dfg(&mut d, &s, &GenerationConfig::default());
        let origins: Vec<Origin> = d.rule.predicates.iter().map(|p| p.origin).collect();
        assert!(origins.contains(&Origin::BackwardAssignment), "{origins:?}");
        assert!(origins.contains(&Origin::BackwardValidation), "{origins:?}");
        let init = d.rule.predicates.iter().find(|p| p.origin == Origin::BackwardAssignment).unwrap();
        assert_eq!(init.target_kind, NodeKind::Initializer);
    }

    #[test]
    fn validations_are_cut_at_logical_operators() {
        let pre = "int h(int *p, int k) {\n  if (p == 0 || k > 3)\n    return 0;\n  return q(p, 1);\n}";
        let post = "int h(int *p, int k) {\n  if (p == 0 || k > 3)\n    return 0;\n  return q(p, 2);\n}";
        let s = diff_trees(&parse_function(pre).unwrap(), &parse_function(post).unwrap());
        let mut d = generate_raw_rule(&s, "r", "p").unwrap();
        enrich_dfg(&mut d, &s, &GenerationConfig::default());
        let check = d.rule.predicates.iter().find(|p| p.origin == Origin::BackwardValidation).expect("validation");
        let n = s.pre.node(d.sources[&check.target].node);
        assert_eq!((n.kind, n.value_str()), (NodeKind::BinaryExpr, "=="));
    }
}
