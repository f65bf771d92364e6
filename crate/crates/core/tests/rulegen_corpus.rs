mod common;

use common::{case, draft};
use p2r_core::rulegen::OpOutcome;
use p2r_core::{Condition, NodeKind, Origin, Polarity, Predicate};

fn mentions(c: &Condition, want: &Condition) -> bool {
    if c == want {
        return true;
    }
    match c {
        Condition::ChildAtRole { cond, .. } | Condition::ArgumentAt { cond, .. } | Condition::AnyOperand(cond) => mentions(cond, want),
        _ => false,
    }
}

fn has(p: &Predicate, want: &Condition) -> bool {
    p.conditions.iter().any(|c| mentions(c, want))
}

#[test]
fn strdup_update_keeps_old_callee_and_rejects_the_new_one() {
    let d = draft(&case("openssl-append-ia5"));
    let p = d
        .rule
        .predicates
        .iter()
        .find(|p| p.conditions.iter().any(|c| matches!(c, Condition::CalleeNameIs(n) if n.contains(&"CRYPTO_strdup".to_string()))))
        .expect("strdup predicate");
    assert_eq!(p.polarity, Polarity::MustExist);
    assert!(p.conditions.contains(&Condition::negated(Condition::callee("CRYPTO_strndup"))), "{p:?}");
    assert!(p.conditions.contains(&Condition::arg(0, Condition::FieldNameIs("data".into()))), "{p:?}");
    assert!(p.conditions.contains(&Condition::arg(0, Condition::child("qualifier", Condition::anchor("vemail_525")))), "{p:?}");
}

#[test]
fn sanity_check_restyling_is_dropped() {
    let d = draft(&case("openssl-append-ia5"));
    let dropped = d.log.iter().filter(|r| matches!(&r.outcome, OpOutcome::Dropped(why) if why.contains("style"))).count();
    assert!(dropped > 0, "{}", d.render_log());
    let restyled = Condition::child("condition", Condition::any_operand(Condition::any_operand(Condition::FieldNameIs("data".into()))));
    assert!(!d.rule.predicates.iter().any(|p| p.conditions.contains(&restyled) && p.origin == Origin::Insert && p.target_kind == NodeKind::BinaryExpr));
}

#[test]
fn skipcol_guard_is_a_must_not_exist_predicate_on_width1() {
    let d = draft(&case("vim-adjust-skipcol"));
    let guard = d.rule.predicates.iter().find(|p| p.polarity == Polarity::MustNotExist).unwrap();
    assert_eq!(guard.target_kind, NodeKind::IfStmt);
    assert_eq!(guard.params, ["vwidth1_1935"]);
    assert!(has(guard, &Condition::NodeKindIs(NodeKind::ReturnStmt)));
}

#[test]
fn skipcol_addition_is_tied_to_the_initializer() {
    let d = draft(&case("vim-adjust-skipcol"));
    let all: Vec<&Predicate> = d.rule.predicates.iter().chain(&d.rule.candidates).collect();
    let add = all.iter().find(|p| p.target_kind == NodeKind::BinaryExpr && has(p, &Condition::callee("curwin_col_off2"))).unwrap();
    let init = all.iter().find(|p| p.target_kind == NodeKind::Initializer).unwrap();
    assert_eq!(init.origin, Origin::BackwardAssignment);
    assert!(has(init, &Condition::FieldNameIs("w_width".into())));
    assert!(has(init, &Condition::callee("curwin_col_off")));
    let guard = d.rule.predicates.iter().find(|p| p.polarity == Polarity::MustNotExist).unwrap();
    assert!(guard.conditions.contains(&Condition::OccursBefore(add.target.clone())));
}

#[test]
fn distinct_condition_records_the_flag_clearing_body() {
    let d = draft(&case("sqlite-select-distinct"));
    let body = d
        .rule
        .predicates
        .iter()
        .chain(&d.rule.candidates)
        .find(|p| p.origin == Origin::BodyStatement && has(p, &Condition::OperatorIs("&=".into())));
    let body = body.unwrap_or_else(|| panic!("{:#?}", d.rule.candidates));
    assert!(has(body, &Condition::FieldNameIs("selFlags".into())), "{body:?}");
}
