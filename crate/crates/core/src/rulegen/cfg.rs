//! Control-flow context around differential nodes.

use std::collections::BTreeSet;

use super::{add_context, anchors_under, differential, outermost_expr, statement_focus, Draft, Side, Sides};
use crate::ast::{role, AstTree, NodeId, NodeKind};
use crate::rule::{Condition, Origin, Polarity};
use crate::treediff::EditScript;

fn is_control(k: NodeKind) -> bool {
    matches!(k, NodeKind::IfStmt | NodeKind::SwitchStmt | NodeKind::ForStmt | NodeKind::WhileStmt)
}

/// Statements directly governed by control statement `c`.
fn body_statements(tree: &AstTree, c: NodeId) -> Vec<NodeId> {
    let mut out = Vec::new();
    for r in [role::THEN, role::ELSE, role::BODY] {
        for b in tree.children_with_role(c, r) {
            if tree.node(b).kind == NodeKind::BlockStmt {
                out.extend(tree.node(b).children.iter().take(2));
            } else {
                out.push(b);
            }
        }
    }
    out
}

/// Body statements when `x` sits in a controlling condition, or the
/// controlling condition when `x` sits in a governed body.
fn control_context(tree: &AstTree, x: NodeId) -> Vec<(Origin, NodeId)> {
    let mut cur = x;
    while let Some(p) = tree.parent(cur) {
        let r = tree.node(cur).role.as_deref();
        if is_control(tree.node(p).kind) {
            if r == Some(role::CONDITION) {
                return body_statements(tree, p)
                    .into_iter()
                    .map(|s| (Origin::BodyStatement, statement_focus(tree, s)))
                    .collect();
            }
            if matches!(r, Some(role::THEN | role::ELSE | role::BODY)) {
                return tree.children_with_role(p, role::CONDITION).map(|c| (Origin::ControllingCondition, c)).collect();
            }
        }
        cur = p;
    }
    Vec::new()
}

/// Other operand of a binary operation or assignment, or the other half
/// of an array subscript.
fn sibling_operand(tree: &AstTree, x: NodeId) -> Option<(Origin, NodeId)> {
    let p = tree.parent(x)?;
    let parent = tree.node(p);
    let r = tree.node(x).role.as_deref()?;
    let other = match (parent.kind, r) {
        (NodeKind::BinaryExpr | NodeKind::AssignExpr, role::LHS) => (Origin::Sibling, role::RHS),
        (NodeKind::BinaryExpr | NodeKind::AssignExpr, role::RHS) => (Origin::Sibling, role::LHS),
        (NodeKind::ArraySubscript, role::BASE) => (Origin::ArraySibling, role::INDEX),
        (NodeKind::ArraySubscript, role::INDEX) => (Origin::ArraySibling, role::BASE),
        _ => return None,
    };
    tree.children_with_role(p, other.1).next().map(|n| (other.0, n))
}

fn subtree(tree: &AstTree, n: NodeId) -> Vec<NodeId> {
    tree.dfs_traverse(n).unwrap_or_default()
}

/// Adds context for each differential predicate: siblings of changed
/// operands, the outermost wrapping expression, governing conditions or
/// governed statements, and neighbouring statements sharing an anchor.
/// Sibling and sibling-statement context is added eagerly for
/// must-not-exist predicates, which need must-exist company; everything
/// else is recorded as a refinement candidate.
pub fn enrich_cfg(draft: &mut Draft, script: &EditScript) {
    let sides = Sides { script };
    for (target, src, polarity, anchors) in differential(draft) {
        let eager = polarity == Polarity::MustNotExist;
        let tree = sides.tree(src.side);
        let changed: BTreeSet<NodeId> = match src.side {
            Side::Post => src
                .roots
                .iter()
                .flat_map(|r| subtree(tree, *r))
                .filter(|n| script.matches.pre_of(*n).is_none())
                .collect(),
            Side::Pre => src.roots.iter().copied().collect(),
        };
        let mut found: Vec<(Origin, NodeId, bool)> = Vec::new();
        for &x in &changed {
            if let Some((o, s)) = sibling_operand(tree, x) {
                if !changed.contains(&s) && sides.to_pre(src.side, s).is_some() {
                    found.push((o, s, false));
                }
            }
        }
        for &r in &src.roots {
            found.extend(control_context(tree, r).into_iter().map(|(o, n)| (o, n, false)));
            if tree.node(r).kind.is_expression() {
                let top = outermost_expr(tree, r);
                if top != r {
                    found.push((Origin::OutermostExpression, top, false));
                }
            }
        }
        let stmt = if tree.node(src.node).kind.is_statement() {
            Some(src.node)
        } else {
            tree.parent(src.node).filter(|p| tree.node(*p).kind == NodeKind::DeclStmt)
        };
        let mut ordered_after = None;
        if let Some(s) = stmt {
            if let Some(block) = tree.parent(s).filter(|b| tree.node(*b).kind == NodeKind::BlockStmt) {
                let kids = &tree.node(block).children;
                let at = kids.iter().position(|k| *k == s).unwrap_or(0);
                let shares = |k: &NodeId| {
                    sides.to_pre(src.side, *k).is_some() && !anchors_under(&sides, src.side, *k).is_disjoint(&anchors)
                };
                if let Some(next) = kids[at + 1..].iter().find(|k| shares(k)) {
                    found.push((Origin::SiblingStatement, statement_focus(tree, *next), true));
                } else if let Some(prev) = kids[..at].iter().rev().find(|k| shares(k)) {
                    found.push((Origin::SiblingStatement, statement_focus(tree, *prev), false));
                }
                if let Some(ps) = tree.parent(block).filter(|p| tree.node(*p).kind.is_statement()) {
                    found.push((Origin::ParentStatement, statement_focus(tree, ps), false));
                }
            }
        }
        // a neighbouring statement only narrows a predicate that has no
        // must-exist company of its own
        let company = found.iter().any(|(o, ..)| matches!(o, Origin::Sibling | Origin::ArraySibling))
            || draft.rule.predicates.iter().any(|p| {
                p.polarity == Polarity::MustExist && !p.origin.is_context() && !p.anchors().is_disjoint(&anchors)
            });
        for (origin, n, after) in found {
            let Some(pre_n) = sides.to_pre(src.side, n) else { continue };
            let promote = eager
                && match origin {
                    Origin::Sibling | Origin::ArraySibling => true,
                    Origin::SiblingStatement => !company,
                    _ => false,
                };
            if let Some(t) = add_context(draft, &sides, pre_n, origin, promote) {
                if promote && after && ordered_after.is_none() {
                    ordered_after = Some(t);
                }
            }
        }
        if let Some(t) = ordered_after {
            if let Some(p) = draft.rule.predicates.iter_mut().find(|p| p.target == target) {
                p.conditions.push(Condition::OccursBefore(t));
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

    fn draft(pre: &str, post: &str) -> (Draft, EditScript) {
        let s = diff_trees(&parse_function(pre).unwrap(), &parse_function(post).unwrap());
        (generate_raw_rule(&s, "r", "p").unwrap(), s)
    }

    #[test]
    fn guard_gains_following_statement_and_ordering() {
        let (mut d, s) = draft(
            "int f(int a) { int w = a - 1; int h = w + g(); return a / h; }",
            "int f(int a) { int w = a - 1; if (w <= 0) return 0; int h = w + g(); return a / h; }",
        );
        enrich_cfg(&mut d, &s);
        let ctx = d.rule.predicates.iter().find(|p| p.origin == Origin::SiblingStatement).expect("context");
        assert_eq!(ctx.target_kind, NodeKind::BinaryExpr);
        assert!(ctx.conditions.contains(&Condition::child(role::RHS, Condition::callee("g"))));
        let guard = &d.rule.predicates[0];
        assert!(guard.conditions.contains(&Condition::OccursBefore(ctx.target.clone())));
    }

    #[test]
    fn condition_change_records_body_candidates() {
        let (mut d, s) = draft(
            "int f(int *p) { if (p[0] > 1) p[1] = 0; return 0; }",
            "int f(int *p) { if (p[0] > 1 && p[2] == 0) p[1] = 0; return 0; }",
        );
        enrich_cfg(&mut d, &s);
        assert!(d.rule.candidates.iter().any(|c| c.origin == Origin::BodyStatement), "{:?}", d.rule.candidates);
        assert!(d.rule.predicates.iter().any(|c| c.origin == Origin::Sibling));
    }

    #[test]
    fn no_structure_no_context() {
        let (mut d, s) = draft("int f(void) { return 1; }", "int f(void) { return 2; }");
        let before = d.rule.clone();
        enrich_cfg(&mut d, &s);
        assert_eq!(d.rule, before);
    }

    #[test]
    fn company_makes_the_neighbour_a_candidate() {
        let (mut d, s) = draft(
            "int f(int *p, int n) { if (p[0] > n) g(p); return h(p); }",
            "int f(int *p, int n) { if (p[0] > n && n > 0) g(p); return h(p); }",
        );
        enrich_cfg(&mut d, &s);
        assert!(d.rule.predicates.iter().any(|p| p.origin == Origin::Sibling));
        assert!(!d.rule.predicates.iter().any(|p| p.origin == Origin::SiblingStatement));
    }
}

