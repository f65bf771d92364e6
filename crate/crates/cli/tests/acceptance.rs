//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use p2r_cli::eval::evaluate_corpus;
use p2r_cli::manifest::CorpusManifest;
use p2r_cli::pipeline::{run_manifest, CaseResult};
use p2r_cli::report::render_text;
use p2r_core::ast::{AstTree, NodeId, NodeKind};
use p2r_core::cfront::parse_unit;
use p2r_core::matcher::{build_db, evaluate_rule, scan, AstDatabase};
use p2r_core::refine::{refine_rule, RegressionSet};
use p2r_core::rule::{Condition, Polarity};
use p2r_core::rulegen::{generate, GenerationConfig};
use p2r_core::synth::{alpha_rename, mutation_pair, synthetic_codebase, synthetic_patches, synthetic_rules};
use p2r_core::treediff::{apply_editscript, diff_trees, match_trees};
use p2r_core::Rule;

const MUTATION_PAIRS: u64 = 1000;
const MUTATION_MAX_NODES: usize = 200;
const EDITSCRIPT_LIMIT: Duration = Duration::from_secs(60);
const CORPUS_CASES: usize = 12;
const REPLICA_LEVEL: u8 = 2;
const SCAN_LINES: usize = 50_000;
const SCAN_RULES: usize = 100;
const SCAN_WORKERS: usize = 8;
const SCAN_LIMIT: Duration = Duration::from_secs(300);

const OPENSSL: &str = "openssl-append-ia5";
const OPENSSL_FILE: &str = "crypto/x509/v3_utl.c";
const VIM: &str = "vim-adjust-skipcol";

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn db(root: &Path) -> Result<AstDatabase, String> {
    build_db(&[root.to_path_buf()]).map_err(|e| e.to_string())
}

struct Ctx {
    manifest: CorpusManifest,
    results: Vec<CaseResult>,
}

impl Ctx {
    fn rule(&self, case: &str) -> Result<&Rule, String> {
        let r = self.results.iter().find(|r| r.id == case).ok_or(format!("no result for {case}"))?;
        r.rules.first().map(|g| &g.rule).ok_or(format!("no rule for {case}: {:?} {:?}", r.skipped, r.errors))
    }

    fn rules(&self) -> Vec<Rule> {
        self.results.iter().flat_map(|r| r.rules.iter().map(|g| g.rule.clone())).collect()
    }
}

fn editscript_soundness() -> Outcome {
    let start = Instant::now();
    let mut exact = 0;
    for seed in 0..MUTATION_PAIRS {
        let (pre, post) = mutation_pair(seed, MUTATION_MAX_NODES);
        let script = diff_trees(&pre, &post);
        if apply_editscript(&pre, &script.ops).is_ok_and(|t| t.structurally_equal(&post)) {
            exact += 1;
        }
    }
    let took = start.elapsed();
    check(exact == MUTATION_PAIRS, format!("{exact}/{MUTATION_PAIRS} replayed exactly"))?;
    check(took < EDITSCRIPT_LIMIT, format!("took {took:?}"))?;
    Ok(format!("{exact}/{MUTATION_PAIRS} pairs exact in {:.1} s", took.as_secs_f64()))
}

fn function(rel: &str, name: &str) -> Result<AstTree, String> {
    let path = corpus().join(rel);
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_unit(rel, &text).function(name).cloned().ok_or(format!("{name} missing in {rel}"))
}

fn if_calling(t: &AstTree, callee: &str) -> Option<NodeId> {
    t.preorder().into_iter().find(|id| {
        t.node(*id).kind == NodeKind::IfStmt && t.dfs_traverse(*id).unwrap().into_iter().any(|d| t.node(d).value_str() == callee)
    })
}

fn replica_matching() -> Outcome {
    let pre = function(&format!("{OPENSSL}/pre/{OPENSSL_FILE}"), "append_ia5")?;
    let post = function(&format!("{OPENSSL}/post/{OPENSSL_FILE}"), "append_ia5")?;
    let m = match_trees(&pre, &post);
    let dup = if_calling(&pre, "OPENSSL_sk_find").ok_or("no duplicate check in pre")?;
    let ret = pre.children_with_role(dup, "then").next().ok_or("duplicate check has no then-branch")?;
    check(pre.node(ret).kind == NodeKind::ReturnStmt, "then-branch is not a return")?;
    let post_dup = if_calling(&post, "OPENSSL_sk_find").ok_or("no duplicate check in post")?;
    let guard = if_calling(&post, "memchr").ok_or("no inserted guard in post")?;
    let partner = m.post_of(ret).ok_or("return left unpaired")?;
    check(!post.is_ancestor(guard, partner), "paired with the inserted guard's return")?;
    check(post.is_ancestor(post_dup, partner), "paired outside the duplicate check")?;
    let level = m.level(ret).unwrap_or(0);
    check(level == REPLICA_LEVEL, format!("level {level}, expected {REPLICA_LEVEL}"))?;
    Ok(format!("return pairs with its replica at level {level}"))
}

fn regression(ctx: &Ctx) -> Outcome {
    let (mut pre_hits, mut post_hits) = (0, 0);
    let mut misses = Vec::new();
    for case in &ctx.manifest.cases {
        let rule = ctx.rule(&case.id)?;
        let target = &case.targets[0];
        if evaluate_rule(&db(&case.pre_root)?, rule).matched(target) {
            pre_hits += 1;
        } else {
            misses.push(format!("{} pre", case.id));
        }
        if evaluate_rule(&db(&case.post_root)?, rule).matched(target) {
            post_hits += 1;
            misses.push(format!("{} post", case.id));
        }
    }
    let n = ctx.manifest.cases.len();
    check(n == CORPUS_CASES, format!("{n} cases"))?;
    check(pre_hits == n && post_hits == 0, format!("pre {pre_hits}/{n}, post {post_hits}/{n}: {misses:?}"))?;
    Ok(format!("pre {pre_hits}/{n} matched, post {post_hits}/{n} matched"))
}

fn mentions(c: &Condition, f: &dyn Fn(&Condition) -> bool) -> bool {
    let mut hit = false;
    c.clone().rewrite(&mut |c| {
        hit |= f(&c);
        c
    });
    hit
}

fn cognate(ctx: &Ctx) -> Outcome {
    let rule = ctx.rule(VIM)?;
    let report = evaluate_rule(&db(&corpus().join(VIM).join("cognate"))?, rule);
    check(report.matched("scroll_cursor_bot"), "scroll_cursor_bot not matched")?;
    let guard = rule.predicates.iter().any(|p| p.polarity == Polarity::MustNotExist && p.target_kind == NodeKind::IfStmt);
    let add = rule.predicates.iter().any(|p| {
        p.polarity == Polarity::MustExist
            && p.target_kind == NodeKind::BinaryExpr
            && p.conditions.iter().any(|c| mentions(c, &|c| matches!(c, Condition::OperatorIs(o) if o == "+")))
    });
    let init = rule.predicates.iter().any(|p| p.polarity == Polarity::MustExist && p.target_kind == NodeKind::Initializer);
    check(guard && add && init, format!("guard={guard} add={add} initializer={init}"))?;
    Ok("scroll_cursor_bot matched; guard, AddExpr and Initializer predicates present".into())
}

fn c_files(root: &Path, out: &mut Vec<PathBuf>) {
    if root.is_file() {
        out.push(root.to_path_buf());
        return;
    }
    let Ok(rd) = std::fs::read_dir(root) else { return };
    let mut entries: Vec<PathBuf> = rd.filter_map(|e| e.ok().map(|e| e.path())).collect();
    entries.sort();
    for p in entries {
        if p.is_dir() {
            c_files(&p, out);
        } else if p.extension().is_some_and(|x| x == "c" || x == "h") {
            out.push(p);
        }
    }
}

fn renamed_copy(root: &Path, to: &Path) -> Result<usize, String> {
    let mut files = Vec::new();
    c_files(root, &mut files);
    let mut changed = 0;
    for f in files {
        let rel = f.strip_prefix(root).unwrap_or(f.file_name().unwrap().as_ref());
        let rel = if rel.as_os_str().is_empty() { Path::new(f.file_name().unwrap()) } else { rel };
        let text = std::fs::read_to_string(&f).map_err(|e| e.to_string())?;
        let renamed = alpha_rename(&rel.to_string_lossy(), &text);
        changed += (renamed != text) as usize;
        let dest = to.join(rel);
        std::fs::create_dir_all(dest.parent().unwrap()).map_err(|e| e.to_string())?;
        std::fs::write(dest, renamed).map_err(|e| e.to_string())?;
    }
    Ok(changed)
}

/// Replaces the expanded allocation calls of the openssl fixture by the
/// project wrappers, optionally renaming `OPENSSL_strdup` further.
fn wrapper_variant(text: &str, strdup: &str) -> String {
    text.replace(
        "CRYPTO_strdup((char *)email->data, \"crypto/x509/v3_utl.c\", 545)",
        &format!("{strdup}((char *)email->data)"),
    )
    .replace(
        "CRYPTO_strndup((char *)email->data, email->length, \"crypto/x509/v3_utl.c\", 537)",
        "OPENSSL_strndup((char *)email->data, email->length)",
    )
}

fn robustness(ctx: &Ctx) -> Outcome {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut kept = 0;
    let mut lost = Vec::new();
    let mut renamed_files = 0;
    for (i, case) in ctx.manifest.cases.iter().enumerate() {
        let rule = ctx.rule(&case.id)?;
        let root = tmp.path().join(i.to_string());
        renamed_files += renamed_copy(&case.pre_root, &root)?;
        if evaluate_rule(&db(&root)?, rule).matched(&case.targets[0]) {
            kept += 1;
        } else {
            lost.push(case.id.clone());
        }
    }
    let n = ctx.manifest.cases.len();
    check(kept == n, format!("alpha-renamed pre matched {kept}/{n}, lost {lost:?}"))?;
    check(renamed_files >= n, format!("only {renamed_files} files changed by renaming"))?;

    let config = &ctx.manifest.settings;
    check(config.substitution_chain("OPENSSL_strdup").contains(&"strdup".to_string()), "corpus settings lack OPENSSL_strdup -> strdup")?;
    let pre_text = std::fs::read_to_string(corpus().join(OPENSSL).join("pre").join(OPENSSL_FILE)).map_err(|e| e.to_string())?;
    let post_text = std::fs::read_to_string(corpus().join(OPENSSL).join("post").join(OPENSSL_FILE)).map_err(|e| e.to_string())?;
    let pre = wrapper_variant(&pre_text, "OPENSSL_strdup");
    let post = wrapper_variant(&post_text, "OPENSSL_strdup");
    let plain = wrapper_variant(&pre_text, "strdup");
    check(pre != pre_text && post != post_text && plain != pre, "wrapper variants did not change the fixture")?;
    let unit = |t: &str| parse_unit(OPENSSL_FILE, t);
    let (pre_u, post_u, plain_u) = (unit(&pre), unit(&post), unit(&plain));
    let pre_fn = pre_u.function("append_ia5").ok_or("variant pre lost append_ia5")?;
    let post_fn = post_u.function("append_ia5").ok_or("variant post lost append_ia5")?;
    let draft = generate(&diff_trees(pre_fn, post_fn), OPENSSL, "openssl", config).map_err(|e| e.to_string())?;
    let pre_db = AstDatabase::from_units(vec![pre_u.clone()]);
    let post_db = AstDatabase::from_units(vec![post_u.clone()]);
    let rule = refine_rule(&draft.rule, &RegressionSet::new(&pre_db, "append_ia5", &post_db)).map_err(|e| e.to_string())?.rule;
    let hit = |u: &p2r_core::cfront::SourceUnit| evaluate_rule(&AstDatabase::from_units(vec![u.clone()]), &rule).matched("append_ia5");
    check(hit(&pre_u), "wrapper rule misses OPENSSL_strdup pre")?;
    check(!hit(&post_u), "wrapper rule matches the patched variant")?;
    check(hit(&plain_u), "wrapper rule misses the strdup spelling")?;
    check(
        evaluate_rule(&db(&corpus().join(OPENSSL).join("pre"))?, ctx.rule(OPENSSL)?).matched("append_ia5"),
        "corpus openssl rule no longer matches",
    )?;
    Ok(format!("alpha-renamed pre matched {kept}/{n}; OPENSSL_strdup and strdup spellings both matched"))
}

fn eval_determinism(ctx: &Ctx) -> Outcome {
    let rules = ctx.rules();
    let a = evaluate_corpus(&ctx.manifest, &rules);
    let b = evaluate_corpus(&ctx.manifest, &rules);
    check(a.render_text() == b.render_text() && a.render_tsv() == b.render_tsv(), "evaluation output differs between runs")?;
    let again = run_manifest(&ctx.manifest, &ctx.manifest.settings);
    let docs = |rs: &[CaseResult]| rs.iter().flat_map(|r| r.rules.iter().map(|g| g.rule.to_document())).collect::<Vec<_>>();
    check(docs(&again) == docs(&ctx.results), "generated rules differ between runs")?;
    check(a.recall() == 1.0, format!("recall {:.1}%", a.recall() * 100.0))?;
    Ok(format!("recall {}/{} (100.0%), identical bytes across runs", a.recalled(), a.cases.len()))
}

fn performance() -> Outcome {
    let files = synthetic_codebase(11, SCAN_LINES);
    let lines: usize = files.iter().map(|f| f.text.lines().count()).sum();
    let units = files.iter().map(|f| parse_unit(&f.name, &f.text)).collect();
    let database = AstDatabase::from_units(units);
    let rules = synthetic_rules(&synthetic_patches(23, SCAN_RULES), &GenerationConfig::default()).map_err(|e| e.to_string())?;
    check(lines >= SCAN_LINES, format!("{lines} lines generated"))?;
    check(rules.len() == SCAN_RULES, format!("{} rules generated", rules.len()))?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(SCAN_WORKERS).build().map_err(|e| e.to_string())?;
    let start = Instant::now();
    let reports = pool.install(|| scan(&database, &rules));
    let took = start.elapsed();
    check(took < SCAN_LIMIT, format!("scan took {took:?}"))?;
    check(reports.len() == rules.len(), "missing rule reports")?;
    check(reports.iter().all(|r| r.elapsed_ms.is_finite() && r.elapsed_ms >= 0.0), "per-rule timing missing")?;
    let timings = render_text(&reports, &[]).lines().filter(|l| l.starts_with("# timing")).count();
    check(timings == rules.len(), format!("{timings} timing lines"))?;
    let slowest = reports.iter().map(|r| r.elapsed_ms).fold(0.0, f64::max);
    Ok(format!(
        "{lines} lines, {} functions, {} rules, {SCAN_WORKERS} workers: {:.1} s (slowest rule {slowest:.1} ms)",
        database.function_count(),
        rules.len(),
        took.as_secs_f64()
    ))
}

fn main() {
    let manifest = CorpusManifest::load(&corpus().join("manifest.toml")).expect("corpus manifest loads");
    let results = run_manifest(&manifest, &manifest.settings);
    let ctx = Ctx { manifest, results };

    let criteria: Vec<Criterion> = vec![
        ("editscript-soundness", Box::new(editscript_soundness)),
        ("matching-quality", Box::new(replica_matching)),
        ("regression-invariant", Box::new(|| regression(&ctx))),
        ("cognate-detection", Box::new(|| cognate(&ctx))),
        ("robustness", Box::new(|| robustness(&ctx))),
        ("eval-recall-determinism", Box::new(|| eval_determinism(&ctx))),
        ("performance", Box::new(performance)),
    ];
    let mut failed = 0;
    for (name, f) in &criteria {
        match f() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
