#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use p2r_core::ast::{AstTree, NodeId, NodeKind};
use p2r_core::cfront::parse_unit;
use p2r_core::matcher::{build_db, AstDatabase};
use p2r_core::patch::{ingest_case, PatchCase};
use p2r_core::refine::{refine_rule, RegressionSet};
use p2r_core::rulegen::{generate, Draft, GenerationConfig};
use p2r_core::treediff::diff_trees;
use p2r_core::Rule;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn read(rel: &str) -> String {
    let p = corpus_dir().join(rel);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

pub fn function(rel: &str, name: &str) -> AstTree {
    let unit = parse_unit(rel, &read(rel));
    unit.function(name).unwrap_or_else(|| panic!("{name} not in {rel}: {:?}", unit.diagnostics)).clone()
}

/// First node (pre-order) of `kind` whose subtree mentions `needle` as a value.
pub fn find_with(t: &AstTree, kind: NodeKind, needle: &str) -> Option<NodeId> {
    t.preorder().into_iter().find(|id| {
        t.node(*id).kind == kind
            && std::iter::once(*id)
                .chain(t.dfs_traverse(*id).unwrap())
                .any(|d| t.node(d).value_str() == needle)
    })
}

#[derive(Debug, Clone)]
pub struct Case {
    pub id: String,
    pub provenance: String,
    pub diffs: Vec<PathBuf>,
    pub pre_root: PathBuf,
    pub post_root: PathBuf,
    pub target: String,
    pub cognates: Vec<(PathBuf, String)>,
}

fn manifest() -> toml::Table {
    read("manifest.toml").parse().expect("manifest parses")
}

pub fn settings() -> GenerationConfig {
    let t = manifest();
    GenerationConfig::from_toml(&toml::to_string(&t["settings"]).unwrap()).unwrap()
}

pub fn cases() -> Vec<Case> {
    let base = corpus_dir();
    let path = |v: &toml::Value| base.join(v.as_str().unwrap());
    manifest()["case"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            let expected = &c["expected"];
            Case {
                id: c["id"].as_str().unwrap().into(),
                provenance: c["provenance"].as_str().unwrap().into(),
                diffs: c["diffs"].as_array().unwrap().iter().map(path).collect(),
                pre_root: path(&c["pre-root"]),
                post_root: path(&c["post-root"]),
                target: c["targets"][0].as_str().unwrap().into(),
                cognates: expected
                    .get("cognates")
                    .and_then(|g| g.as_array())
                    .map(|gs| gs.iter().map(|g| (path(&g["root"]), g["function"].as_str().unwrap().to_string())).collect())
                    .unwrap_or_default(),
            }
        })
        .collect()
}

pub fn case(id: &str) -> Case {
    cases().into_iter().find(|c| c.id == id).unwrap_or_else(|| panic!("no case {id}"))
}

pub fn db(root: &Path) -> AstDatabase {
    build_db(&[root.to_path_buf()]).unwrap()
}

pub fn ingest(c: &Case) -> PatchCase {
    let diffs: Vec<String> = c.diffs.iter().map(|d| std::fs::read_to_string(d).unwrap()).collect();
    let root = c.pre_root.clone();
    let load = move |f: &str| {
        std::fs::read_to_string(root.join(f)).map_err(|e| p2r_core::Error::io(root.join(f), e))
    };
    ingest_case(&c.id, &c.provenance, &diffs, &load, &BTreeMap::new()).unwrap()
}

/// Unrefined draft for the case's target function.
pub fn draft_with(c: &Case, config: &GenerationConfig) -> Draft {
    let pc = ingest(c);
    let pair = pc.pairs.iter().find(|p| p.name() == c.target).expect("target pair");
    let script = diff_trees(&pair.pre, &pair.post);
    generate(&script, &c.id, &c.provenance, config).unwrap()
}

pub fn draft(c: &Case) -> Draft {
    draft_with(c, &settings())
}

/// Generated and refined rule for the case, as the pipeline produces it.
pub fn rule(c: &Case) -> Rule {
    rule_with(c, &settings())
}

pub fn rule_with(c: &Case, config: &GenerationConfig) -> Rule {
    let d = draft_with(c, config);
    let pre = db(&c.pre_root);
    let post = db(&c.post_root);
    refine_rule(&d.rule, &RegressionSet::new(&pre, &c.target, &post)).unwrap().rule
}
