mod common;

use common::{find_with, function};
use p2r_core::ast::NodeKind;
use p2r_core::treediff::{match_trees, match_unit, RECOVERY_LEVEL};

const PRE: &str = "openssl-append-ia5/pre/crypto/x509/v3_utl.c";
const POST: &str = "openssl-append-ia5/post/crypto/x509/v3_utl.c";

#[test]
fn duplicate_check_return_pairs_with_its_replica() {
    let pre = function(PRE, "append_ia5");
    let post = function(POST, "append_ia5");
    let m = match_trees(&pre, &post);

    let pre_if = find_with(&pre, NodeKind::IfStmt, "OPENSSL_sk_find").unwrap();
    let pre_ret = pre.children_with_role(pre_if, "then").next().unwrap();
    assert_eq!(pre.node(pre_ret).kind, NodeKind::ReturnStmt);

    let post_if = find_with(&post, NodeKind::IfStmt, "OPENSSL_sk_find").unwrap();
    let guard_if = find_with(&post, NodeKind::IfStmt, "memchr").unwrap();
    let partner = m.post_of(pre_ret).expect("return is paired");
    assert!(post.is_ancestor(post_if, partner), "paired outside the duplicate check");
    assert!(!post.is_ancestor(guard_if, partner));
    assert_eq!(m.level(pre_ret), Some(2));
}

#[test]
fn recorded_levels_are_the_first_applicable_stage() {
    let pre = function(PRE, "append_ia5");
    let post = function(POST, "append_ia5");
    let m = match_trees(&pre, &post);
    for (a, b, level) in m.pairs() {
        if m.is_seed(a) {
            let expected = if level == RECOVERY_LEVEL { None } else { Some(level) };
            assert_eq!(match_unit(&pre, &post, a, b), expected, "{a} -> {b}");
        }
    }
}
