mod common;

use common::{corpus_dir, function};
use p2r_core::ast::{AstTree, FingerprintMode, NodeId};
use p2r_core::cfront::parse_unit;
use p2r_core::synth::random_tree;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn walk(t: &AstTree, id: NodeId, out: &mut Vec<NodeId>) {
    for c in &t.node(id).children {
        out.push(*c);
        walk(t, *c, out);
    }
}

/// Kind, value and arity, recursively; `with_values` off gives the shape relation.
fn same(a: &AstTree, x: NodeId, b: &AstTree, y: NodeId, with_values: bool) -> bool {
    let (n, m) = (a.node(x), b.node(y));
    n.kind == m.kind
        && (!with_values || n.value == m.value)
        && n.children.len() == m.children.len()
        && n.children.iter().zip(&m.children).all(|(c, d)| same(a, *c, b, *d, with_values))
}

#[test]
fn traversal_agrees_with_a_recursive_walk() {
    let mut rng = StdRng::seed_from_u64(1);
    for _ in 0..100 {
        let t = random_tree(&mut rng, 50);
        for id in t.preorder() {
            let mut expected = Vec::new();
            walk(&t, id, &mut expected);
            assert_eq!(t.dfs_traverse(id).unwrap(), expected);
        }
        let all = t.dfs_traverse(t.root).unwrap();
        assert_eq!(all.len(), t.len() - 1);
        for (pos, id) in all.iter().enumerate() {
            if let Some(p) = t.parent(*id).filter(|p| *p != t.root) {
                assert!(all[..pos].contains(&p), "{id} listed before its parent");
            }
        }
    }
}

#[test]
fn call_condition_lists_call_then_callee_then_arguments() {
    let t = function("openssl-append-ia5/pre/crypto/x509/v3_utl.c", "append_ia5");
    let call = t
        .preorder()
        .into_iter()
        .find(|id| t.node(*id).value_str() == "OPENSSL_sk_find")
        .unwrap();
    let order = t.dfs_traverse(call).unwrap();
    assert_eq!(t.node(order[0]).role.as_deref(), Some("callee"));
    let args: Vec<NodeId> = order.iter().copied().filter(|d| t.parent(*d) == Some(call) && t.node(*d).role.as_deref() == Some("argument")).collect();
    assert_eq!(args.len(), 2);
    assert!(order.iter().position(|d| *d == args[0]) < order.iter().position(|d| *d == args[1]));
    assert_eq!(t.node(args[0]).value_str(), "ossl_check_OPENSSL_STRING_sk_type");
    assert_eq!(t.node(args[1]).value_str(), "ossl_check_OPENSSL_STRING_type");
}

#[test]
fn fingerprints_agree_with_recursive_comparison_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(2);
    let mut equal_seen = 0;
    for _ in 0..200 {
        let a = random_tree(&mut rng, 40);
        let b = random_tree(&mut rng, 40);
        let (fa, fb) = (a.fingerprints(), b.fingerprints());
        for _ in 0..60 {
            let x = NodeId(rng.gen_range(0..a.len() as u32));
            let y = NodeId(rng.gen_range(0..b.len() as u32));
            let exact = same(&a, x, &b, y, true);
            assert_eq!(fa.exact[x.index()] == fb.exact[y.index()], exact);
            assert_eq!(fa.shape[x.index()] == fb.shape[y.index()], same(&a, x, &b, y, false));
            equal_seen += exact as usize;
        }
    }
    assert!(equal_seen > 100, "too few equal subtrees to exercise the check: {equal_seen}");
}

#[test]
fn equal_fixture_fingerprints_mean_equal_subtrees() {
    for entry in walkdir::WalkDir::new(corpus_dir()).into_iter().filter_map(|e| e.ok()) {
        if entry.path().extension().is_none_or(|e| e != "c") {
            continue;
        }
        let unit = parse_unit("x.c", &std::fs::read_to_string(entry.path()).unwrap());
        for t in &unit.functions {
            let fp = t.fingerprints();
            let mut by_fp: std::collections::HashMap<_, NodeId> = std::collections::HashMap::new();
            for id in t.preorder() {
                let first = *by_fp.entry(fp.exact[id.index()]).or_insert(id);
                assert!(same(t, first, t, id, true), "{}: {first} vs {id}", entry.path().display());
                assert_eq!(t.subtree_hash(id, FingerprintMode::Exact).unwrap(), fp.exact[id.index()]);
            }
        }
    }
}

#[test]
fn random_trees_round_trip_through_documents() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..1000 {
        let t = random_tree(&mut rng, 120);
        let doc = t.to_document();
        let back = AstTree::from_document(&doc).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_document(), doc);
    }
}

#[test]
fn fixture_document_keeps_the_function_name() {
    let t = function("openssl-append-ia5/pre/crypto/x509/v3_utl.c", "append_ia5");
    let back = AstTree::from_document(&t.to_document()).unwrap();
    assert_eq!(back.function_name, "append_ia5");
    assert_eq!(back, t);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn document_serialization_is_idempotent(seed in any::<u64>(), size in 2usize..200) {
        let t = random_tree(&mut StdRng::seed_from_u64(seed), size);
        let d = t.to_document();
        prop_assert_eq!(AstTree::from_document(&d).unwrap().to_document(), d);
    }
}
