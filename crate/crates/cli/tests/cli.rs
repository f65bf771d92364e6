use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::OnceLock;

use tempfile::TempDir;

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn p2r(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p2r")).args(args).output().expect("p2r runs")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

/// Rule repository generated once from the bundled corpus.
fn repo() -> &'static Path {
    static REPO: OnceLock<TempDir> = OnceLock::new();
    REPO.get_or_init(|| {
        let dir = tempfile::tempdir().unwrap();
        let o = p2r(&["gen", "--case", s(&corpus().join("manifest.toml")), "--out", s(dir.path())]);
        assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
        dir
    })
    .path()
}

fn case_ids() -> Vec<String> {
    let m: toml::Table = std::fs::read_to_string(corpus().join("manifest.toml")).unwrap().parse().unwrap();
    m["case"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap().to_string()).collect()
}

fn copy_repo(to: &Path) {
    for e in std::fs::read_dir(repo()).unwrap() {
        let p = e.unwrap().path();
        std::fs::copy(&p, to.join(p.file_name().unwrap())).unwrap();
    }
}

#[test]
fn gen_writes_one_rule_per_case_and_an_index() {
    let rules: Vec<_> = std::fs::read_dir(repo())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "rule"))
        .collect();
    assert_eq!(rules.len(), case_ids().len());
    let index: toml::Table = std::fs::read_to_string(repo().join("index.toml")).unwrap().parse().unwrap();
    assert_eq!(index["index-format"].as_integer(), Some(1));
    assert_eq!(index["rule"].as_array().unwrap().len(), 12);
    for r in &rules {
        assert!(r.with_extension("ql").exists() && r.with_extension("log").exists());
    }
}

#[test]
fn empty_manifest_warns_and_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.toml");
    std::fs::write(&m, "[settings]\n").unwrap();
    let o = p2r(&["gen", "--case", s(&m), "--out", s(&dir.path().join("out"))]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("warning: manifest has no cases"), "{text}");
    assert!(text.contains("0 rule(s) from 0 case(s)"), "{text}");
}

#[test]
fn comment_only_case_is_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path();
    for side in ["pre", "post"] {
        std::fs::create_dir_all(root.join(side)).unwrap();
    }
    std::fs::write(root.join("pre/a.c"), "int f(int x)\n{\n  /* old */\n  return x;\n}\n").unwrap();
    std::fs::write(root.join("post/a.c"), "int f(int x)\n{\n  /* new */\n  return x;\n}\n").unwrap();
    std::fs::write(
        root.join("fix.diff"),
        "--- a/a.c\n+++ b/a.c\n@@ -1,5 +1,5 @@\n int f(int x)\n {\n-  /* old */\n+  /* new */\n   return x;\n }\n",
    )
    .unwrap();
    std::fs::write(
        root.join("m.toml"),
        "[[case]]\nid = \"c\"\nprovenance = \"t\"\ndiffs = [\"fix.diff\"]\npre-root = \"pre\"\npost-root = \"post\"\ntargets = [\"f\"]\n",
    )
    .unwrap();
    let o = p2r(&["gen", "--case", s(&root.join("m.toml")), "--out", s(&root.join("out"))]);
    let text = stdout(&o);
    assert!(text.contains("no differential nodes"), "{text}");
    assert!(text.contains("0 rule(s) from 1 case(s)"), "{text}");
}

#[test]
fn post_trees_are_clean_and_pre_trees_match_once_per_case() {
    let post: Vec<String> = case_ids().iter().map(|c| s(&corpus().join(c).join("post")).to_string()).collect();
    let mut args = vec!["scan", "--rules", s(repo()), "--db"];
    args.extend(post.iter().map(String::as_str));
    let o = p2r(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let pre: Vec<String> = case_ids().iter().map(|c| s(&corpus().join(c).join("pre")).to_string()).collect();
    let mut args = vec!["scan", "--rules", s(repo()), "--db"];
    args.extend(pre.iter().map(String::as_str));
    let o = p2r(&args);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let hits: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(hits.len(), 12, "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("# timing")).count(), 12);
}

#[test]
fn vim_rule_finds_the_cognate() {
    let o = p2r(&["scan", "--rules", s(repo()), "--db", s(&corpus().join("vim-adjust-skipcol/cognate"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("scroll_cursor_bot"), "{}", stdout(&o));
}

#[test]
fn structured_report_carries_its_format_version() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let o = p2r(&[
        "scan",
        "--rules",
        s(repo()),
        "--db",
        s(&corpus().join("openssl-append-ia5/pre")),
        "--format",
        "structured",
        "--report",
        s(&report),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(doc["report-format"], 1);
    let total: usize = doc["reports"].as_array().unwrap().iter().map(|r| r["matches"].as_array().unwrap().len()).sum();
    assert_eq!(total, 1);
}

#[test]
fn eval_recalls_every_case_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = corpus().join("manifest.toml");
    let run = |data: &Path| {
        let o = p2r(&["eval", "--case", s(&manifest), "--rules", s(repo()), "--data", s(data)]);
        (o.status.code(), stdout(&o), std::fs::read(data).unwrap())
    };
    let (code, text, data) = run(&dir.path().join("a.tsv"));
    assert_eq!(code, Some(0), "{text}");
    assert!(text.contains("recall 12/12 (100.0%), post-patch matches 0/12"), "{text}");
    let (code2, text2, data2) = run(&dir.path().join("b.tsv"));
    assert_eq!(code2, code);
    assert_eq!(text2, text);
    assert_eq!(data2, data);
}

#[test]
fn eval_reports_a_missing_rule() {
    let dir = tempfile::tempdir().unwrap();
    copy_repo(dir.path());
    let victim = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .find(|p| p.file_name().unwrap().to_string_lossy().contains("vim-adjust-skipcol") && p.extension().is_some_and(|x| x == "rule"))
        .unwrap();
    std::fs::remove_file(victim).unwrap();
    let o = p2r(&["eval", "--case", s(&corpus().join("manifest.toml")), "--rules", s(dir.path())]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("recall 11/12"), "{text}");
    assert!(text.lines().any(|l| l.starts_with("vim-adjust-skipcol") && l.contains("missed")), "{text}");
}

#[test]
fn broken_rule_fails_the_scan() {
    let dir = tempfile::tempdir().unwrap();
    copy_repo(dir.path());
    std::fs::write(dir.path().join("zz.rule"), "{ \"rule-format\": 1, ").unwrap();
    let o = p2r(&["scan", "--rules", s(dir.path()), "--db", s(&corpus().join("openssl-append-ia5/post"))]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("zz.rule"));

    let o = p2r(&["scan", "--rules", s(&dir.path().join("absent.rule")), "--db", s(&corpus())]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_diff_and_emit_run_on_the_openssl_case() {
    let pre = corpus().join("openssl-append-ia5/pre/crypto/x509/v3_utl.c");
    let post = corpus().join("openssl-append-ia5/post/crypto/x509/v3_utl.c");
    let o = p2r(&["parse", s(&pre), "--function", "append_ia5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("append_ia5\t"));

    let o = p2r(&["diff", s(&pre), s(&post), "--function", "append_ia5", "--levels"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("match\t")));
    assert!(text.contains("update"), "{text}");

    let rule = std::fs::read_dir(repo())
        .unwrap()
        .map(|e| e.unwrap().path())
        .find(|p| p.file_name().unwrap().to_string_lossy().contains("append-ia5") && p.extension().is_some_and(|x| x == "rule"))
        .unwrap();
    let o = p2r(&["emit", "--rule", s(&rule)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("strndup"), "{}", stdout(&o));
}

#[test]
fn refine_keeps_a_clean_rule_clean() {
    let dir = tempfile::tempdir().unwrap();
    let rule = std::fs::read_dir(repo())
        .unwrap()
        .map(|e| e.unwrap().path())
        .find(|p| p.file_name().unwrap().to_string_lossy().contains("vim-adjust-skipcol") && p.extension().is_some_and(|x| x == "rule"))
        .unwrap();
    let out = dir.path().join("r.rule");
    let o = p2r(&[
        "refine",
        "--rule",
        s(&rule),
        "--pre",
        s(&corpus().join("vim-adjust-skipcol/pre")),
        "--post",
        s(&corpus().join("vim-adjust-skipcol/post")),
        "--function",
        "adjust_skipcol",
        "--out",
        s(&out),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("tp=1 fp=0"), "{}", stdout(&o));
    assert_eq!(std::fs::read_to_string(out).unwrap(), std::fs::read_to_string(rule).unwrap());
}

#[test]
fn worker_count_does_not_change_results() {
    let db = corpus().join("sqlite-select-distinct");
    let run = |w: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_p2r"))
            .env("P2R_WORKERS", w)
            .args(["scan", "--rules", s(repo()), "--db", s(&db)])
            .output()
            .unwrap();
        let text = stdout(&o);
        let hits: Vec<String> = text.lines().filter(|l| !l.starts_with('#')).map(String::from).collect();
        (o.status.code(), hits)
    };
    let one = run("1");
    assert_eq!(one.0, Some(1));
    assert_eq!(run("4"), one);
}
