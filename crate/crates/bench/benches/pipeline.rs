use std::hint::black_box;
use std::path::PathBuf;

use criterion::{criterion_group, criterion_main, Criterion, Throughput};
use p2r_core::cfront::parse_unit;
use p2r_core::matcher::{evaluate_function, scan, AstDatabase};
use p2r_core::refine::{refine_rule, RegressionSet};
use p2r_core::rulegen::{generate, GenerationConfig};
use p2r_core::synth::{synthetic_codebase, synthetic_patches, synthetic_rules};
use p2r_core::treediff::{derive_editscript, diff_trees, match_trees};

const FILE: &str = "crypto/x509/v3_utl.c";

fn fixture(side: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus/openssl-append-ia5").join(side).join(FILE);
    std::fs::read_to_string(p).unwrap()
}

fn openssl(c: &mut Criterion) {
    let (pre_text, post_text) = (fixture("pre"), fixture("post"));
    let pre_unit = parse_unit(FILE, &pre_text);
    let post_unit = parse_unit(FILE, &post_text);
    let pre = pre_unit.function("append_ia5").unwrap();
    let post = post_unit.function("append_ia5").unwrap();

    let mut g = c.benchmark_group("openssl");
    g.throughput(Throughput::Bytes(pre_text.len() as u64));
    g.bench_function("parse", |b| b.iter(|| parse_unit(FILE, black_box(&pre_text))));
    g.throughput(Throughput::Elements(pre.len() as u64));
    g.bench_function("match_trees", |b| b.iter(|| match_trees(black_box(pre), black_box(post))));
    let m = match_trees(pre, post);
    g.bench_function("derive_editscript", |b| b.iter(|| derive_editscript(pre, post, black_box(&m))));

    let config = GenerationConfig::default();
    let script = diff_trees(pre, post);
    g.bench_function("generate", |b| b.iter(|| generate(black_box(&script), "openssl", "openssl", &config).unwrap()));
    let draft = generate(&script, "openssl", "openssl", &config).unwrap();
    let pre_db = AstDatabase::from_units(vec![pre_unit.clone()]);
    let post_db = AstDatabase::from_units(vec![post_unit.clone()]);
    let set = RegressionSet::new(&pre_db, "append_ia5", &post_db);
    g.bench_function("refine", |b| b.iter(|| refine_rule(black_box(&draft.rule), &set).unwrap()));
    let rule = refine_rule(&draft.rule, &set).unwrap().rule;
    g.bench_function("evaluate_function", |b| b.iter(|| evaluate_function(black_box(&rule), pre)));
    g.finish();
}

fn synthetic_scan(c: &mut Criterion) {
    let files = synthetic_codebase(3, 5_000);
    let lines: usize = files.iter().map(|f| f.text.lines().count()).sum();
    let db = AstDatabase::from_units(files.iter().map(|f| parse_unit(&f.name, &f.text)).collect());
    let rules = synthetic_rules(&synthetic_patches(5, 10), &GenerationConfig::default()).unwrap();

    let mut g = c.benchmark_group("synthetic");
    g.sample_size(10);
    g.throughput(Throughput::Elements(lines as u64));
    g.bench_function("scan_5k_lines_10_rules", |b| b.iter(|| scan(black_box(&db), &rules)));
    g.finish();
}

criterion_group!(benches, openssl, synthetic_scan);
criterion_main!(benches);
