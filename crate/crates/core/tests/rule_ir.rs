mod common;

use common::{case, cases, rule};
use p2r_core::emit::emit_text;
use p2r_core::rule::{validate_rule, Severity};
use p2r_core::{AnchorConstraint, Condition, NodeKind, Origin, Polarity, Predicate, Rule, Storage, VarAnchor};

fn pred(name: &str, kind: NodeKind, params: &[&str], conditions: Vec<Condition>, polarity: Polarity, origin: Origin) -> Predicate {
    Predicate {
        name: name.into(),
        target: name.replace("func", "target"),
        target_kind: kind,
        params: params.iter().map(|p| p.to_string()).collect(),
        conditions,
        polarity,
        origin,
        style_only: false,
    }
}

fn anchored(id: &str, ty: &str, storage: Storage) -> (VarAnchor, Vec<AnchorConstraint>) {
    (
        VarAnchor { anchor_id: id.into(), declared_type: ty.into(), storage },
        vec![
            AnchorConstraint::TypeName { anchor: id.into(), type_name: ty.into() },
            AnchorConstraint::Storage { anchor: id.into(), storage },
        ],
    )
}

/// The skipcol rule: a missing `width1 <= 0` guard before `width1 +
/// curwin_col_off2()`, where width1 is initialized from the window width.
fn skipcol_rule() -> Rule {
    let w = "vwidth1_1935";
    let (anchor, constraints) = anchored(w, "int", Storage::Local);
    let mut r = Rule::new("vim-skipcol", "vim");
    r.anchors.push(anchor);
    r.anchor_constraints = constraints;
    r.predicates = vec![
        pred(
            "func_0",
            NodeKind::IfStmt,
            &[w],
            vec![
                Condition::child("condition", Condition::OperatorIs("<=".into())),
                Condition::child("condition", Condition::child("lhs", Condition::anchor(w))),
                Condition::child("condition", Condition::child("rhs", Condition::LiteralValueIs("0".into()))),
                Condition::child("then", Condition::NodeKindIs(NodeKind::ReturnStmt)),
                Condition::OccursBefore("target_1".into()),
            ],
            Polarity::MustNotExist,
            Origin::Insert,
        ),
        pred(
            "func_1",
            NodeKind::BinaryExpr,
            &[w],
            vec![
                Condition::OperatorIs("+".into()),
                Condition::any_operand(Condition::anchor(w)),
                Condition::any_operand(Condition::callee("curwin_col_off2")),
            ],
            Polarity::MustExist,
            Origin::SiblingStatement,
        ),
        pred(
            "func_2",
            NodeKind::Initializer,
            &[w],
            vec![
                Condition::anchor(w),
                Condition::child("expr", Condition::OperatorIs("-".into())),
                Condition::child("expr", Condition::child("lhs", Condition::FieldNameIs("w_width".into()))),
                Condition::child("expr", Condition::child("rhs", Condition::callee("curwin_col_off"))),
            ],
            Polarity::MustExist,
            Origin::BackwardAssignment,
        ),
    ];
    r
}

/// The strdup call of append_ia5 with the bounded variant excluded.
fn strdup_rule() -> Rule {
    let e = "vemail_525";
    let (anchor, constraints) = anchored(e, "const ASN1_IA5STRING *", Storage::Parameter);
    let mut r = Rule::new("openssl-strdup", "openssl");
    r.anchors.push(anchor);
    r.anchor_constraints = constraints;
    r.predicates = vec![pred(
        "func_0",
        NodeKind::FunctionCall,
        &[e],
        vec![
            Condition::callee("CRYPTO_strdup"),
            Condition::negated(Condition::callee("CRYPTO_strndup")),
            Condition::arg(0, Condition::FieldNameIs("data".into())),
            Condition::arg(0, Condition::child("qualifier", Condition::anchor(e))),
        ],
        Polarity::MustExist,
        Origin::Update,
    )];
    r
}

#[test]
fn hand_built_skipcol_rule_is_clean() {
    assert_eq!(validate_rule(&skipcol_rule()), vec![]);
}

#[test]
fn skipcol_emission_negates_the_guard_before_the_conjunction() {
    let text = emit_text(&skipcol_rule()).unwrap();
    let guard = text.find("not func_0(").expect("negated guard");
    let add = text.find("and func_1(").unwrap();
    let init = text.find("and func_2(").unwrap();
    assert!(guard < add && add < init, "{text}");
    assert!(text.contains("vwidth1_1935.getInitializer()=target_2"), "{text}");
    assert!(text.contains("isBefore(target_1.getLocation())"), "{text}");
}

#[test]
fn strdup_rule_round_trips_and_keeps_the_negation() {
    let r = strdup_rule();
    let back = Rule::from_document(&r.to_document()).unwrap();
    assert_eq!(back, r);
    assert!(back.predicates[0].conditions.contains(&Condition::negated(Condition::callee("CRYPTO_strndup"))));
    let text = emit_text(&r).unwrap();
    assert!(text.contains("target_0.getTarget().hasName(\"CRYPTO_strdup\")"), "{text}");
    assert!(text.contains("not target_0.getTarget().hasName(\"CRYPTO_strndup\")"), "{text}");
}

#[test]
fn every_generated_rule_round_trips_and_validates() {
    for c in cases() {
        let r = rule(&c);
        let doc = r.to_document();
        let back = Rule::from_document(&doc).unwrap();
        assert_eq!(back, r, "{}", c.id);
        assert_eq!(back.to_document(), doc);
        let errors: Vec<_> = validate_rule(&r).into_iter().filter(|d| d.severity == Severity::Error).collect();
        assert!(errors.is_empty(), "{}: {errors:?}", c.id);
        assert!(emit_text(&r).is_ok(), "{}", c.id);
    }
}

#[test]
fn generated_skipcol_rule_has_the_guard_addition_initializer_triple() {
    let r = rule(&case("vim-adjust-skipcol"));
    let kinds: Vec<(NodeKind, Polarity)> = r.predicates.iter().map(|p| (p.target_kind, p.polarity)).collect();
    assert!(kinds.contains(&(NodeKind::IfStmt, Polarity::MustNotExist)), "{kinds:?}");
    assert!(kinds.contains(&(NodeKind::BinaryExpr, Polarity::MustExist)), "{kinds:?}");
    assert!(kinds.contains(&(NodeKind::Initializer, Polarity::MustExist)), "{kinds:?}");
    assert_eq!(r.anchors.iter().map(|a| a.anchor_id.as_str()).collect::<Vec<_>>(), ["vwidth1_1935"]);
}
