mod common;

use std::collections::BTreeMap;

use common::{case, ingest, read};
use p2r_core::patch::{build_case, diff_texts, parse_unified_diff, split_patch, LineTag, SourcePair};
use p2r_core::treediff::diff_trees;

#[test]
fn openssl_diff_has_one_hunk_with_the_published_ranges() {
    let hunks = parse_unified_diff(&read("openssl-append-ia5/fix.diff")).unwrap();
    assert_eq!(hunks.len(), 1);
    assert_eq!(hunks[0].file, "crypto/x509/v3_utl.c");
    assert_eq!((hunks[0].old_range, hunks[0].new_range), ((529, 17), (529, 25)));
}

#[test]
fn sqlite_diff_adds_the_window_check() {
    let hunks = parse_unified_diff(&read("sqlite-select-distinct/fix.diff")).unwrap();
    let added: Vec<&str> = hunks
        .iter()
        .flat_map(|h| &h.lines)
        .filter(|l| l.tag == LineTag::Add)
        .map(|l| l.text.as_str())
        .collect();
    assert_eq!(added.len(), 1);
    assert!(added[0].contains("p->pWin==0"));
}

#[test]
fn openssl_case_pairs_append_ia5_only() {
    let pc = ingest(&case("openssl-append-ia5"));
    let names: Vec<(&str, &str)> = pc.pairs.iter().map(|p| (p.pre.function_name.as_str(), p.post.function_name.as_str())).collect();
    assert_eq!(names, [("append_ia5", "append_ia5")]);
    let split = split_patch(&pc);
    assert_eq!(split.len(), 1);
    assert_eq!(split[0].id, pc.id);
    assert_eq!(split[0].hunks, pc.hunks);
}

fn case_from(pre: &str, post: &str) -> p2r_core::patch::PatchCase {
    let hunks = diff_texts("t.c", pre, post).unwrap();
    let sources = vec![SourcePair { file: "t.c".into(), pre_text: pre.into(), post_text: post.into() }];
    build_case("t", "test", hunks, sources, &BTreeMap::new()).unwrap()
}

#[test]
fn comment_only_change_pairs_but_yields_no_edits() {
    let pre = "int f(int a)\n{\n    /* old note */\n    return a;\n}\n";
    let post = "int f(int a)\n{\n    /* new note */\n    return a;\n}\n";
    let pc = case_from(pre, post);
    assert_eq!(pc.pairs.len(), 1);
    assert_eq!(pc.pairs[0].name(), "f");
    assert!(diff_trees(&pc.pairs[0].pre, &pc.pairs[0].post).is_empty());
}

#[test]
fn changes_in_three_functions_split_into_three_cases() {
    let body = |n: &str, extra: &str| format!("int {n}(int a)\n{{\n{extra}    return a;\n}}\n\n");
    let pre: String = ["f", "g", "h"].iter().map(|n| body(n, "")).collect();
    let post: String = ["f", "g", "h"].iter().map(|n| body(n, "    if (a < 0)\n        return 0;\n")).collect();
    let pc = case_from(&pre, &post);
    let split = split_patch(&pc);
    let ids: Vec<&str> = split.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, ["t.f", "t.g", "t.h"]);
    assert!(split.iter().all(|c| c.pairs.len() == 1));
}

#[test]
fn repeated_guard_in_one_function_splits_per_occurrence() {
    let pre = "void f(struct s *p, struct s *q)\n{\n    use(p);\n    log_it();\n    log_it();\n    use(q);\n}\n";
    let post = "void f(struct s *p, struct s *q)\n{\n    if (p == NULL)\n        return;\n    use(p);\n    log_it();\n    log_it();\n    if (q == NULL)\n        return;\n    use(q);\n}\n";
    let pc = case_from(pre, post);
    assert_eq!(pc.pairs.len(), 1);
    let split = split_patch(&pc);
    assert_eq!(split.len(), 2, "{:?}", split.iter().map(|c| &c.id).collect::<Vec<_>>());
    for c in &split {
        let post = &c.pairs[0].post;
        let guards = post.preorder().into_iter().filter(|n| post.node(*n).kind == p2r_core::NodeKind::IfStmt).count();
        assert_eq!(guards, 1, "{}", c.id);
    }
}
