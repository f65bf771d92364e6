//! Generalization: operand order, wrapper names and style noise.

use std::collections::{BTreeMap, BTreeSet};

use super::{Draft, GenerationConfig};
use crate::ast::{role, AstTree, NodeId, NodeKind};
use crate::error::Result;
use crate::rule::{Condition, Predicate, Rule};

/// Binary operators whose operands may be swapped.
pub const COMMUTATIVE: &[&str] = &["+", "*", "==", "!=", "&", "|", "^", "&&", "||"];

/// Spelling-insensitive rendering of the expression at `n`: casts are
/// transparent, `NULL` reads as `0`, `!e` as `e == 0`, and operands of
/// commutative operators are ordered.
pub fn canonical_expr(tree: &AstTree, n: NodeId) -> String {
    let node = tree.node(n);
    let kids: Vec<String> = node.children.iter().map(|c| canonical_expr(tree, *c)).collect();
    match node.kind {
        NodeKind::CastExpr => kids.last().cloned().unwrap_or_default(),
        NodeKind::Literal if matches!(node.value_str(), "NULL" | "0") => "0".into(),
        NodeKind::UnaryExpr if node.value_str() == "!" => binary("==", kids[0].clone(), "0".into()),
        NodeKind::BinaryExpr if COMMUTATIVE.contains(&node.value_str()) && kids.len() == 2 => {
            binary(node.value_str(), kids[0].clone(), kids[1].clone())
        }
        _ => format!("{}<{}>({})", node.kind.name(), node.value_str(), kids.join(",")),
    }
}

fn binary(op: &str, a: String, b: String) -> String {
    let (x, y) = if a <= b { (a, b) } else { (b, a) };
    format!("BinaryExpr<{op}>({x},{y})")
}

/// Path of steps from a predicate target; `None` marks an argument step.
type Path = Vec<Option<String>>;

fn operators(c: &Condition, path: &mut Path, out: &mut BTreeMap<Path, String>) {
    match c {
        Condition::OperatorIs(op) => {
            out.insert(path.clone(), op.clone());
        }
        Condition::ChildAtRole { role, cond } => {
            path.push(Some(role.clone()));
            operators(cond, path, out);
            path.pop();
        }
        Condition::ArgumentAt { index, cond } => {
            path.push(Some(format!("#{index}")));
            operators(cond, path, out);
            path.pop();
        }
        Condition::AnyOperand(cond) => {
            path.push(None);
            operators(cond, path, out);
            path.pop();
        }
        _ => {}
    }
}

fn symmetric(c: Condition, path: &mut Path, ops: &BTreeMap<Path, String>) -> Condition {
    match c {
        Condition::ChildAtRole { role, cond } => {
            let swap = (role == role::LHS || role == role::RHS)
                && ops.get(path).is_some_and(|op| COMMUTATIVE.contains(&op.as_str()));
            path.push(Some(role.clone()));
            let inner = symmetric(*cond, path, ops);
            path.pop();
            if swap {
                Condition::any_operand(inner)
            } else {
                Condition::child(&role, inner)
            }
        }
        Condition::ArgumentAt { index, cond } => {
            path.push(Some(format!("#{index}")));
            let inner = symmetric(*cond, path, ops);
            path.pop();
            Condition::arg(index, inner)
        }
        Condition::AnyOperand(cond) => {
            path.push(None);
            let inner = symmetric(*cond, path, ops);
            path.pop();
            Condition::any_operand(inner)
        }
        other => other,
    }
}

fn dedupe(conds: Vec<Condition>) -> Vec<Condition> {
    let mut out: Vec<Condition> = Vec::with_capacity(conds.len());
    for c in conds {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn generalize_predicate(p: &mut Predicate, config: &GenerationConfig) {
    let mut conds = std::mem::take(&mut p.conditions);
    if config.operand_symmetry {
        let mut ops = BTreeMap::new();
        for c in &conds {
            operators(c, &mut Vec::new(), &mut ops);
        }
        conds = conds.into_iter().map(|c| symmetric(c, &mut Vec::new(), &ops)).collect();
    }
    if !config.wrapper_substitutions.is_empty() {
        conds = conds
            .into_iter()
            .map(|c| {
                c.rewrite(&mut |c| match c {
                    Condition::CalleeNameIs(names) => {
                        let mut all: Vec<String> = Vec::new();
                        for n in names.iter().flat_map(|n| config.substitution_chain(n)) {
                            if !all.contains(&n) {
                                all.push(n);
                            }
                        }
                        Condition::CalleeNameIs(all)
                    }
                    other => other,
                })
            })
            .collect();
    }
    p.conditions = dedupe(conds);
}

/// Generalizes every predicate and candidate of `rule`.
pub fn generalize_rule(mut rule: Rule, config: &GenerationConfig) -> Result<Rule> {
    config.validate()?;
    if config.drop_noise {
        rule.predicates.retain(|p| !p.style_only);
        rule.candidates.retain(|p| !p.style_only);
    }
    for p in rule.predicates.iter_mut().chain(rule.candidates.iter_mut()) {
        generalize_predicate(p, config);
    }
    rule.prune_anchors();
    Ok(rule)
}

/// Drops style-only predicates (logged) and generalizes the rest.
pub fn generalize(draft: &mut Draft, config: &GenerationConfig) -> Result<()> {
    if config.drop_noise {
        let noise: BTreeSet<String> =
            draft.rule.predicates.iter().filter(|p| p.style_only).map(|p| p.target.clone()).collect();
        draft.drop_targets(&noise, "style change");
    }
    draft.rule = generalize_rule(draft.rule.clone(), config)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfront::parse_function;
    use crate::matcher::evaluate_function;
    use crate::rule::Polarity;
    use crate::rulegen::generate_raw_rule;
    use crate::treediff::diff_trees;

    fn rule(pre: &str, post: &str) -> Rule {
        let s = diff_trees(&parse_function(pre).unwrap(), &parse_function(post).unwrap());
        generate_raw_rule(&s, "r", "p").unwrap().rule
    }

    #[test]
    fn canonical_form_ignores_spelling() {
        let a = parse_function("int f(char *p) { return !p; }").unwrap();
        let b = parse_function("int f(char *p) { return NULL == (char *)p; }").unwrap();
        let top = |t: &AstTree| t.preorder().into_iter().find(|n| t.node(*n).kind == NodeKind::ReturnStmt).unwrap();
        let e = |t: &AstTree| t.node(top(t)).children[0];
        assert_eq!(canonical_expr(&a, e(&a)), canonical_expr(&b, e(&b)));
        let c = parse_function("int f(char *p) { return p != 0; }").unwrap();
        assert_ne!(canonical_expr(&a, e(&a)), canonical_expr(&c, e(&c)));
    }

    #[test]
    fn flipped_comparison_still_matches() {
        let mut r = Rule::new("r", "p");
        r.predicates.push(Predicate {
            name: "func_0".into(),
            target: "target_0".into(),
            target_kind: NodeKind::BinaryExpr,
            params: vec![],
            conditions: vec![
                Condition::OperatorIs("==".into()),
                Condition::child(role::LHS, Condition::NodeKindIs(NodeKind::VariableAccess)),
                Condition::child(role::RHS, Condition::callee("g")),
            ],
            polarity: Polarity::MustExist,
            origin: crate::rule::Origin::Update,
            style_only: false,
        });
        let flipped = parse_function("int f(int a, int b) { if (g(b) == a) return 1; return 0; }").unwrap();
        assert!(evaluate_function(&r, &flipped).is_none());
        let g = generalize_rule(r, &GenerationConfig::default()).unwrap();
        assert!(evaluate_function(&g, &flipped).is_some());
        let off = GenerationConfig { operand_symmetry: false, ..GenerationConfig::default() };
        let mut lt = g.clone();
        lt.predicates[0].conditions[0] = Condition::OperatorIs("<".into());
        assert_eq!(generalize_rule(lt.clone(), &off).unwrap(), lt);
    }

    #[test]
    fn wrappers_extend_callee_sets() {
        let r = rule(
            "int f(char *s) { char *d = OPENSSL_strdup(s); return d != 0; }",
            "int f(char *s) { char *d = OPENSSL_strndup(s, 4); return d != 0; }",
        );
        let mut config = GenerationConfig::default();
        config.wrapper_substitutions.insert("OPENSSL_strdup".into(), "strdup".into());
        let g = generalize_rule(r, &config).unwrap();
        let p = g.predicates.iter().find(|p| p.polarity == Polarity::MustExist).unwrap();
        let wanted = Condition::CalleeNameIs(vec!["OPENSSL_strdup".into(), "strdup".into()]);
        assert!(p.conditions.iter().any(|c| c.leaf() == &wanted), "{g:?}");
    }

    #[test]
    fn generalization_only_widens_matches() {
        let r = rule(
            "int f(int a, int b) { int s = a + b; return s * 2; }",
            "int f(int a, int b) { int s = a + b; return s * 3; }",
        );
        let g = generalize_rule(r.clone(), &GenerationConfig::default()).unwrap();
        let bodies = [
            "int f(int a, int b) { int s = a + b; return s * 2; }",
            "int f(int a, int b) { int s = a + b; return 2 * s; }",
            "int f(int a, int b) { int s = a - b; return s * 3; }",
            "int f(int a, int b) { return a; }",
        ];
        for b in bodies {
            let t = parse_function(b).unwrap();
            if evaluate_function(&r, &t).is_some() {
                assert!(evaluate_function(&g, &t).is_some(), "{b}");
            }
        }
        assert!(evaluate_function(&g, &parse_function(bodies[1]).unwrap()).is_some());
    }
}
