mod common;

use std::time::{Duration, Instant};

use common::{cases, find_with, function, ingest};
use p2r_core::ast::NodeKind;
use p2r_core::synth::mutation_pair;
use p2r_core::treediff::{apply_editscript, diff_trees, EditKind, ParentRef};

const PRE: &str = "openssl-append-ia5/pre/crypto/x509/v3_utl.c";
const POST: &str = "openssl-append-ia5/post/crypto/x509/v3_utl.c";

#[test]
fn random_mutations_are_replayed_exactly() {
    let start = Instant::now();
    for seed in 0..1000 {
        let (pre, post) = mutation_pair(seed, 200);
        let script = diff_trees(&pre, &post);
        let applied = apply_editscript(&pre, &script.ops).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert!(applied.structurally_equal(&post), "seed {seed}\n{}", script.render());
    }
    assert!(start.elapsed() < Duration::from_secs(60), "took {:?}", start.elapsed());
}

#[test]
fn every_corpus_pair_is_replayed_exactly() {
    for c in cases() {
        for pair in ingest(&c).pairs {
            let script = diff_trees(&pair.pre, &pair.post);
            let applied = apply_editscript(&pair.pre, &script.ops).unwrap();
            assert!(applied.structurally_equal(&pair.post), "{} {}", c.id, pair.name());
            assert!(diff_trees(&pair.pre, &pair.pre).is_empty());
        }
    }
}

#[test]
fn duplicate_check_return_moves_under_a_new_block() {
    let pre = function(PRE, "append_ia5");
    let post = function(POST, "append_ia5");
    let script = diff_trees(&pre, &post);
    let dup_if = find_with(&pre, NodeKind::IfStmt, "OPENSSL_sk_find").unwrap();
    let block = script
        .ops
        .iter()
        .find(|o| o.op == EditKind::Insert && o.kind == NodeKind::BlockStmt && o.new_parent == Some(ParentRef::Pre(dup_if)))
        .expect("block wrapper inserted under the duplicate check");
    assert_eq!(block.role.as_deref(), Some("then"));
    let ret = pre.children_with_role(dup_if, "then").next().unwrap();
    let mv = script.ops.iter().find(|o| o.pre_node == Some(ret)).expect("return is moved");
    assert_eq!(mv.op, EditKind::MoveReparent);
    assert_eq!(mv.new_parent, Some(ParentRef::Inserted(block.post_node.unwrap())));

    let find = pre.preorder().into_iter().find(|n| pre.node(*n).value_str() == "OPENSSL_sk_find").unwrap();
    let arg_ops: Vec<_> = script
        .ops
        .iter()
        .filter(|o| match (o.pre_node, o.new_parent) {
            (Some(n), _) if pre.is_ancestor(find, n) => true,
            (_, Some(ParentRef::Pre(p))) => p == find || pre.is_ancestor(find, p),
            _ => false,
        })
        .collect();
    assert!(arg_ops.iter().any(|o| o.op == EditKind::Insert && o.kind == NodeKind::VariableAccess), "{arg_ops:?}");
    assert!(arg_ops.iter().any(|o| o.kind == NodeKind::CastExpr && o.op == EditKind::MoveReparent), "{arg_ops:?}");
}
