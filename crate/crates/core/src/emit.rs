//! Query-language rendering of rules, in the style of CodeQL predicates.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::ast::{NodeKind, Storage};
use crate::error::{Error, Result};
use crate::rule::{AnchorConstraint, Condition, Polarity, Predicate, Rule};

/// Class name for a node kind, refined by operator spelling when known.
pub fn class_name(kind: NodeKind, op: Option<&str>) -> &'static str {
    use NodeKind::*;
    match (kind, op) {
        (BinaryExpr, Some(op)) => binary_class(op),
        (UnaryExpr, Some(op)) => unary_class(op),
        (AssignExpr, Some(op)) => assign_class(op),
        (BinaryExpr, None) => "BinaryOperation",
        (UnaryExpr, None) => "UnaryOperation",
        (AssignExpr, None) => "Assignment",
        (WhileStmt, Some("do")) => "DoStmt",
        (ArraySubscript, _) => "ArrayExpr",
        (CastExpr, _) => "Cast",
        (SizeofExpr, _) => "SizeofOperator",
        (LabelStmt, _) => "LabelStmt",
        (ExprStmt, _) => "ExprStmt",
        (DotFieldAccess, _) => "ValueFieldAccess",
        (k, _) => k.name(),
    }
}

fn binary_class(op: &str) -> &'static str {
    match op {
        "+" => "AddExpr",
        "-" => "SubExpr",
        "*" => "MulExpr",
        "/" => "DivExpr",
        "%" => "RemExpr",
        "==" => "EQExpr",
        "!=" => "NEExpr",
        "<" => "LTExpr",
        ">" => "GTExpr",
        "<=" => "LEExpr",
        ">=" => "GEExpr",
        "&&" => "LogicalAndExpr",
        "||" => "LogicalOrExpr",
        "&" => "BitwiseAndExpr",
        "|" => "BitwiseOrExpr",
        "^" => "BitwiseXorExpr",
        "<<" => "LShiftExpr",
        ">>" => "RShiftExpr",
        _ => "BinaryOperation",
    }
}

fn unary_class(op: &str) -> &'static str {
    match op {
        "!" => "NotExpr",
        "~" => "ComplementExpr",
        "-" => "UnaryMinusExpr",
        "+" => "UnaryPlusExpr",
        "&" => "AddressOfExpr",
        "*" => "PointerDereferenceExpr",
        "++" => "PrefixIncrExpr",
        "--" => "PrefixDecrExpr",
        "post++" => "PostfixIncrExpr",
        "post--" => "PostfixDecrExpr",
        _ => "UnaryOperation",
    }
}

fn assign_class(op: &str) -> &'static str {
    match op {
        "=" => "AssignExpr",
        "+=" => "AssignAddExpr",
        "-=" => "AssignSubExpr",
        "*=" => "AssignMulExpr",
        "/=" => "AssignDivExpr",
        "%=" => "AssignRemExpr",
        "&=" => "AssignAndExpr",
        "|=" => "AssignOrExpr",
        "^=" => "AssignXorExpr",
        "<<=" => "AssignLShiftExpr",
        ">>=" => "AssignRShiftExpr",
        _ => "Assignment",
    }
}

fn accessor(role: &str, parent: Option<NodeKind>) -> &'static str {
    use NodeKind::*;
    match (role, parent) {
        ("lhs", Some(AssignExpr)) => "getLValue()",
        ("rhs", Some(AssignExpr)) => "getRValue()",
        ("lhs", _) => "getLeftOperand()",
        ("rhs", _) => "getRightOperand()",
        ("operand", _) => "getOperand()",
        ("condition", _) => "getCondition()",
        ("then", _) => "getThen()",
        ("else", _) => "getElse()",
        ("body", Some(Function)) => "getBlock()",
        ("body", _) => "getStmt()",
        ("stmt", _) => "getAStmt()",
        ("qualifier", _) => "getQualifier()",
        ("base", _) => "getArrayBase()",
        ("index", _) => "getArrayOffset()",
        ("init", _) => "getInitialization()",
        ("update", _) => "getUpdate()",
        ("value", _) => "getExpr()",
        ("expr", _) => "getExpr()",
        ("argument", _) => "getAnArgument()",
        ("decl", _) => "getADeclaration()",
        ("param", _) => "getAParameter()",
        _ => "getAChild()",
    }
}

fn quote(s: &str) -> String {
    let inner = s.strip_prefix('"').and_then(|t| t.strip_suffix('"')).unwrap_or(s);
    format!("\"{}\"", inner.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Top-level operator of a predicate, used to pick the target class.
fn top_operator(p: &Predicate) -> Option<&str> {
    p.conditions.iter().find_map(|c| match c {
        Condition::OperatorIs(op) => Some(op.as_str()),
        _ => None,
    })
}

fn cast(x: &str, kind: Option<NodeKind>, want: NodeKind, class: &str) -> String {
    if kind == Some(want) {
        x.to_string()
    } else {
        format!("{x}.({class})")
    }
}

fn render(c: &Condition, x: &str, kind: Option<NodeKind>) -> String {
    match c {
        Condition::NodeKindIs(k) | Condition::InstanceOf(k) => format!("{x} instanceof {}", class_name(*k, None)),
        Condition::CalleeNameIs(names) => {
            let base = cast(x, kind, NodeKind::FunctionCall, "FunctionCall");
            let parts: Vec<String> =
                names.iter().map(|n| format!("{base}.getTarget().hasName({})", quote(n))).collect();
            if parts.len() == 1 {
                parts.into_iter().next().unwrap_or_default()
            } else {
                format!("({})", parts.join(" or "))
            }
        }
        Condition::FieldNameIs(n) => {
            let base = match kind {
                Some(NodeKind::PointerFieldAccess | NodeKind::DotFieldAccess) => x.to_string(),
                _ => format!("{x}.(FieldAccess)"),
            };
            format!("{base}.getTarget().getName()={}", quote(n))
        }
        Condition::OperatorIs(op) => {
            let class = match kind {
                Some(NodeKind::UnaryExpr) => unary_class(op),
                Some(NodeKind::AssignExpr) => assign_class(op),
                Some(NodeKind::BinaryExpr) => binary_class(op),
                _ if matches!(op.as_str(), "*" | "-" | "+" | "&") => {
                    return format!("{x}.(Operation).getOperator()={}", quote(op));
                }
                _ => match binary_class(op) {
                    "BinaryOperation" => match assign_class(op) {
                        "Assignment" => unary_class(op),
                        a => a,
                    },
                    b => b,
                },
            };
            format!("{x} instanceof {class}")
        }
        Condition::LiteralValueIs(v) => {
            let base = match kind {
                Some(NodeKind::Literal | NodeKind::StringLiteral) => x.to_string(),
                _ => format!("{x}.(Literal)"),
            };
            format!("{base}.getValue()={}", quote(v))
        }
        Condition::ChildAtRole { role, cond } => render(cond, &format!("{x}.{}", accessor(role, kind)), None),
        Condition::ArgumentAt { index, cond } => {
            let base = cast(x, kind, NodeKind::FunctionCall, "FunctionCall");
            render(cond, &format!("{base}.getArgument({index})"), None)
        }
        Condition::TargetsAnchor(a) => match kind {
            Some(NodeKind::Initializer) => format!("{a}.getInitializer()={x}"),
            Some(NodeKind::LocalVariable | NodeKind::Parameter) => format!("{x}={a}"),
            _ => format!("{}.getTarget()={a}", cast(x, kind, NodeKind::VariableAccess, "VariableAccess")),
        },
        Condition::OccursBefore(t) => format!("{x}.getLocation().isBefore({t}.getLocation())"),
        Condition::AnyOperand(cond) => render(cond, &format!("{x}.getAnOperand()"), None),
        Condition::Negated(cond) => format!("not {}", render(cond, x, kind)),
    }
}

fn anchor_class(storage: Storage) -> &'static str {
    match storage {
        Storage::Parameter => "Parameter",
        Storage::Local | Storage::GlobalRef => "Variable",
    }
}

fn constraint_text(c: &AnchorConstraint) -> String {
    match c {
        AnchorConstraint::TypeName { anchor, type_name } => {
            format!("{anchor}.getType().hasName({})", quote(&type_display(type_name)))
        }
        AnchorConstraint::Name { anchor, name } => format!("{anchor}.hasName({})", quote(name)),
        AnchorConstraint::Storage { anchor, storage: Storage::Local } => {
            format!("{anchor}.(LocalVariable).getFunction() = func")
        }
        AnchorConstraint::Storage { anchor, storage: Storage::Parameter } => {
            format!("{anchor}.getFunction() = func")
        }
        AnchorConstraint::Storage { anchor, storage: Storage::GlobalRef } => {
            format!("{anchor} instanceof GlobalVariable")
        }
    }
}

struct Emitter<'a> {
    rule: &'a Rule,
    /// Anchors bound by some must-exist predicate.
    bound: BTreeSet<String>,
}

impl Emitter<'_> {
    fn target_class(&self, p: &Predicate) -> &'static str {
        class_name(p.target_kind, top_operator(p))
    }

    fn target_decl(&self, name: &str) -> String {
        match self.rule.predicates.iter().find(|p| p.target == name) {
            Some(p) => format!("{} {name}", self.target_class(p)),
            None => format!("Element {name}"),
        }
    }

    fn anchor_decl(&self, id: &str) -> String {
        let class = self.rule.anchor(id).map(|a| anchor_class(a.storage)).unwrap_or("Variable");
        format!("{class} {id}")
    }

    /// Formal parameters and call arguments of a predicate.
    fn signature(&self, p: &Predicate) -> (Vec<String>, Vec<String>) {
        let mut formals = Vec::new();
        let mut args = Vec::new();
        for a in &p.params {
            if p.polarity == Polarity::MustExist || self.bound.contains(a) {
                formals.push(self.anchor_decl(a));
                args.push(a.clone());
            }
        }
        if p.polarity == Polarity::MustExist {
            formals.push(format!("{} {}", self.target_class(p), p.target));
            args.push(p.target.clone());
        }
        for t in p.referenced_targets() {
            formals.push(self.target_decl(&t));
            args.push(t);
        }
        (formals, args)
    }

    fn predicate(&self, p: &Predicate, out: &mut String) {
        let (formals, _) = self.signature(p);
        let _ = writeln!(out, "predicate {}({}) {{", p.name, formals.join(", "));
        let mut conds: Vec<String> =
            p.conditions.iter().map(|c| render(c, &p.target, Some(p.target_kind))).collect();
        match p.polarity {
            Polarity::MustExist => {
                let _ = writeln!(out, "    {}", conds.join("\n    and "));
            }
            Polarity::MustNotExist => {
                let mut locals = vec![format!("{} {}", self.target_class(p), p.target)];
                for a in &p.params {
                    if !self.bound.contains(a) {
                        locals.push(self.anchor_decl(a));
                        conds.extend(
                            self.rule.anchor_constraints.iter().filter(|c| c.anchor() == a).map(constraint_text),
                        );
                    }
                }
                let _ = writeln!(out, "  exists({} |", locals.join(", "));
                let _ = writeln!(out, "    {})", conds.join("\n    and "));
            }
        }
        out.push_str("}\n\n");
    }
}

/// Type spelling as the query engine names it: no `struct`/`union`/`enum` tag.
fn type_display(t: &str) -> String {
    let words: Vec<&str> = t.split_whitespace().filter(|w| !matches!(*w, "struct" | "union" | "enum")).collect();
    words.join(" ")
}

/// Renders `rule` as query text. Refuses rules without a must-exist predicate.
pub fn emit_text(rule: &Rule) -> Result<String> {
    if rule.is_vacuous() {
        return Err(Error::VacuousRule);
    }
    let bound: BTreeSet<String> = rule
        .predicates
        .iter()
        .filter(|p| p.polarity == Polarity::MustExist)
        .flat_map(|p| p.anchors())
        .collect();
    let e = Emitter { rule, bound };
    let mut out = String::from("import cpp\n\n");
    let mut preds: Vec<&Predicate> = rule.predicates.iter().collect();
    preds.sort_by_key(|p| p.name.clone());
    for p in &preds {
        e.predicate(p, &mut out);
    }
    let mut from = vec!["Function func".to_string()];
    for a in &rule.anchors {
        if e.bound.contains(&a.anchor_id) {
            from.push(e.anchor_decl(&a.anchor_id));
        }
    }
    for p in &preds {
        if p.polarity == Polarity::MustExist {
            from.push(format!("{} {}", e.target_class(p), p.target));
        }
    }
    let _ = writeln!(out, "from {}", from.join(", "));
    out.push_str("where\n");
    let mut clauses = Vec::new();
    let ordered = preds
        .iter()
        .filter(|p| p.polarity == Polarity::MustNotExist)
        .chain(preds.iter().filter(|p| p.polarity == Polarity::MustExist));
    for p in ordered {
        let (_, args) = e.signature(p);
        let call = format!("{}({})", p.name, args.join(", "));
        clauses.push(match p.polarity {
            Polarity::MustNotExist => format!("not {call}"),
            Polarity::MustExist => call,
        });
    }
    for c in &rule.anchor_constraints {
        if e.bound.contains(c.anchor()) {
            clauses.push(constraint_text(c));
        }
    }
    for p in &preds {
        let anchored = p.anchors().iter().any(|a| {
            rule.anchor(a).is_some_and(|v| v.storage != Storage::GlobalRef) && e.bound.contains(a)
        });
        if p.polarity == Polarity::MustExist && !anchored {
            clauses.push(format!("{}.getEnclosingFunction() = func", p.target));
        }
    }
    let _ = writeln!(out, "{}", clauses.join("\nand "));
    out.push_str("select func\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rule::{Origin, VarAnchor};

    fn pred(name: &str, kind: NodeKind, conds: Vec<Condition>, polarity: Polarity) -> Predicate {
        let n = name.trim_start_matches("func_");
        let mut p = Predicate {
            name: name.into(),
            target: format!("target_{n}"),
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

    #[test]
    fn vacuous_rule_is_refused() {
        let r = Rule::new("r", "p");
        assert!(matches!(emit_text(&r), Err(Error::VacuousRule)));
    }

    #[test]
    fn emission_is_deterministic_and_classed() {
        let mut r = Rule::new("r", "p");
        r.anchors.push(VarAnchor { anchor_id: "vx_3".into(), declared_type: "int".into(), storage: Storage::Local });
        r.constrain_anchors();
        r.predicates.push(pred(
            "func_0",
            NodeKind::BinaryExpr,
            vec![
                Condition::OperatorIs("+".into()),
                Condition::any_operand(Condition::anchor("vx_3")),
                Condition::any_operand(Condition::callee("g")),
            ],
            Polarity::MustExist,
        ));
        let a = emit_text(&r).unwrap();
        assert_eq!(a, emit_text(&r).unwrap());
        assert!(a.contains("predicate func_0(Variable vx_3, AddExpr target_0)"), "{a}");
        assert!(a.contains("target_0.getAnOperand().(VariableAccess).getTarget()=vx_3"), "{a}");
        assert!(a.contains("target_0.getAnOperand().(FunctionCall).getTarget().hasName(\"g\")"), "{a}");
        assert!(a.contains("vx_3.getType().hasName(\"int\")"));
        assert!(a.contains("vx_3.(LocalVariable).getFunction() = func"));
    }

    #[test]
    fn literal_quotes_are_not_doubled() {
        assert_eq!(quote("\"a\\b\""), "\"a\\\\b\"");
        assert_eq!(quote("0"), "\"0\"");
    }
}
