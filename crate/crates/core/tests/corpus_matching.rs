mod common;

use std::collections::BTreeSet;

use common::{case, cases, corpus_dir, db, draft, draft_with, rule, settings};
use p2r_core::matcher::{build_db, evaluate_rule, scan, AstDatabase};
use p2r_core::refine::{refine_rule, regression_check, RegressionSet};
use p2r_core::rulegen::generalize_rule;
use p2r_core::rulegen::GenerationConfig;
use p2r_core::{AnchorConstraint, NodeKind, Rule};

fn matched(d: &AstDatabase, r: &Rule) -> BTreeSet<String> {
    evaluate_rule(d, r).matches.into_iter().map(|m| m.function).collect()
}

#[test]
fn empty_directory_gives_an_empty_database() {
    let dir = tempfile::tempdir().unwrap();
    let d = build_db(&[dir.path().to_path_buf()]).unwrap();
    assert_eq!(d.function_count(), 0);
    assert!(scan(&d, &[]).is_empty());
}

#[test]
fn vim_directory_indexes_both_functions_deterministically() {
    let root = corpus_dir().join("vim-adjust-skipcol");
    let a = db(&root);
    assert!(a.find_function("adjust_skipcol").is_some());
    assert!(a.find_function("scroll_cursor_bot").is_some());
    let b = db(&root);
    let docs = |d: &AstDatabase| d.functions().map(|(_, t)| t.to_document()).collect::<Vec<_>>();
    assert_eq!(docs(&a), docs(&b));
}

#[test]
fn skipcol_rule_matches_pre_and_cognate_but_not_post() {
    let c = case("vim-adjust-skipcol");
    let r = rule(&c);
    assert!(matched(&db(&c.pre_root), &r).contains("adjust_skipcol"));
    assert!(!matched(&db(&c.post_root), &r).contains("adjust_skipcol"));
    let (root, f) = &c.cognates[0];
    assert_eq!(f, "scroll_cursor_bot");
    assert!(matched(&db(root), &r).contains("scroll_cursor_bot"));
}

#[test]
fn unsatisfiable_anchor_type_gives_an_empty_report() {
    let c = case("vim-adjust-skipcol");
    let mut r = rule(&c);
    for k in &mut r.anchor_constraints {
        if let AnchorConstraint::TypeName { type_name, .. } = k {
            *type_name = "struct no_such_type *".into();
        }
    }
    assert!(evaluate_rule(&db(&c.pre_root), &r).matches.is_empty());
}

#[test]
fn duplicate_rules_give_duplicate_reports() {
    let c = case("openssl-append-ia5");
    let r = rule(&c);
    let reports = scan(&db(&c.pre_root), &[r.clone(), r]);
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0].rule_id, reports[1].rule_id);
    assert_eq!(reports[0].matches, reports[1].matches);
}

#[test]
fn corpus_scan_reproduces_the_expected_matrix() {
    for c in cases() {
        let r = rule(&c);
        let pre = matched(&db(&c.pre_root), &r);
        let post = matched(&db(&c.post_root), &r);
        assert_eq!(pre, BTreeSet::from([c.target.clone()]), "{} pre", c.id);
        assert!(post.is_empty(), "{} post: {post:?}", c.id);
        for (root, f) in &c.cognates {
            assert!(matched(&db(root), &r).contains(f), "{} cognate {f}", c.id);
        }
    }
}

#[test]
fn raw_skipcol_rule_is_already_clean() {
    let c = case("vim-adjust-skipcol");
    let (pre, post) = (db(&c.pre_root), db(&c.post_root));
    let check = regression_check(&draft(&c).rule, &RegressionSet::new(&pre, &c.target, &post));
    assert_eq!((check.tp, check.fp), (1, 0));
}

fn weakened_skipcol() -> (Rule, AstDatabase, AstDatabase, AstDatabase) {
    let c = case("vim-adjust-skipcol");
    let mut r = rule(&c);
    let at = r.predicates.iter().position(|p| p.target_kind == NodeKind::Initializer).unwrap();
    let init = r.predicates.remove(at);
    r.candidates.insert(0, init);
    let decoy = db(&corpus_dir().join("vim-adjust-skipcol/decoy"));
    (r, db(&c.pre_root), db(&c.post_root), decoy)
}

#[test]
fn dropping_the_initializer_lets_the_decoy_match() {
    let (r, pre, post, decoy) = weakened_skipcol();
    let mut set = RegressionSet::new(&pre, "adjust_skipcol", &post);
    set.must_not_match.push(&decoy);
    let check = regression_check(&r, &set);
    assert_eq!(check.tp, 1);
    assert!(check.fp >= 1);
    assert!(matched(&decoy, &r).contains("wrapped_rows"));
}

#[test]
fn refinement_promotes_the_initializer_back() {
    let (r, pre, post, decoy) = weakened_skipcol();
    let mut set = RegressionSet::new(&pre, "adjust_skipcol", &post);
    set.must_not_match.push(&decoy);
    let out = refine_rule(&r, &set).unwrap();
    assert_eq!((out.final_check.tp, out.final_check.fp), (1, 0));
    assert!(!out.residual_fp);
    assert!(out.rule.predicates.iter().any(|p| p.target_kind == NodeKind::Initializer));
    assert!(matched(&decoy, &out.rule).is_empty());
}

#[test]
fn refinement_is_idempotent_on_every_case() {
    for c in cases() {
        let r = rule(&c);
        let (pre, post) = (db(&c.pre_root), db(&c.post_root));
        let again = refine_rule(&r, &RegressionSet::new(&pre, &c.target, &post)).unwrap();
        assert_eq!(again.rule, r, "{}", c.id);
    }
}

#[test]
fn generalization_never_loses_a_match() {
    let plain = GenerationConfig { drop_noise: false, operand_symmetry: false, ..GenerationConfig::default() };
    for c in cases() {
        let raw = draft_with(&c, &plain).rule;
        let general = generalize_rule(raw.clone(), &settings()).unwrap();
        let mut roots = vec![c.pre_root.clone(), c.post_root.clone()];
        roots.extend(c.cognates.iter().map(|(r, _)| r.clone()));
        for root in roots {
            let d = db(&root);
            let (before, after) = (matched(&d, &raw), matched(&d, &general));
            assert!(before.is_subset(&after), "{} {}: {before:?} vs {after:?}", c.id, root.display());
        }
    }
}
