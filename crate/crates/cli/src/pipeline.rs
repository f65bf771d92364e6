//! Per-case generation: ingest, diff, generate and refine.

use std::path::Path;

use anyhow::{Context, Result};
use p2r_core::emit::emit_text;
use p2r_core::matcher::{build_db, AstDatabase};
use p2r_core::patch::{ingest_case, FunctionPair};
use p2r_core::refine::{refine_rule, RegressionSet};
use p2r_core::rulegen::{generate, GenerationConfig};
use p2r_core::treediff::diff_trees;
use p2r_core::Rule;
use rayon::prelude::*;

use crate::manifest::{CaseSpec, CorpusManifest};

#[derive(Debug, Clone)]
pub struct GeneratedRule {
    pub function: String,
    pub rule: Rule,
    pub emitted: String,
    pub log: String,
    pub residual_fp: bool,
}

#[derive(Debug, Clone, Default)]
pub struct CaseResult {
    pub id: String,
    pub rules: Vec<GeneratedRule>,
    /// Function pairs (or whole cases) skipped, with the reason.
    pub skipped: Vec<(String, String)>,
    pub errors: Vec<String>,
    pub notes: Vec<String>,
}

impl CaseResult {
    /// A rule was produced, or the case was skipped for a recorded reason.
    pub fn ok(&self) -> bool {
        self.errors.is_empty() && (!self.rules.is_empty() || !self.skipped.is_empty())
    }
}

/// Reads a file named in a diff from a snapshot root (a directory, or a
/// single file standing in for every path).
pub fn snapshot_file(root: &Path, file: &str) -> p2r_core::Result<String> {
    let path = if root.is_file() { root.to_path_buf() } else { root.join(file) };
    std::fs::read_to_string(&path).map_err(|e| p2r_core::Error::io(path, e))
}

pub fn database(root: &Path) -> Result<AstDatabase> {
    build_db(&[root.to_path_buf()]).with_context(|| format!("building database from {}", root.display()))
}

fn selected<'a>(case: &CaseSpec, pairs: &'a [FunctionPair]) -> Vec<&'a FunctionPair> {
    pairs.iter().filter(|p| case.targets.is_empty() || case.targets.iter().any(|t| t == p.name())).collect()
}

/// Runs the whole pipeline for one case. Failures are recorded, never raised.
pub fn run_case(case: &CaseSpec, config: &GenerationConfig, budget: usize) -> CaseResult {
    let mut out = CaseResult { id: case.id.clone(), ..CaseResult::default() };
    if let Err(e) = run_case_inner(case, config, budget, &mut out) {
        out.errors.push(format!("{e:#}"));
    }
    out
}

fn run_case_inner(case: &CaseSpec, config: &GenerationConfig, budget: usize, out: &mut CaseResult) -> Result<()> {
    let diffs: Vec<String> = case
        .diffs
        .iter()
        .map(|d| std::fs::read_to_string(d).with_context(|| format!("reading {}", d.display())))
        .collect::<Result<_>>()?;
    let load = |f: &str| snapshot_file(&case.pre_root, f);
    let ingested = ingest_case(&case.id, &case.provenance, &diffs, &load, &case.renames)?;
    out.notes.extend(ingested.diagnostics.iter().cloned());
    for u in &ingested.unmatched {
        out.notes.push(format!("changed function `{u}` has no peer on the other side"));
    }
    let pairs = selected(case, &ingested.pairs);
    if pairs.is_empty() {
        out.skipped.push((case.id.clone(), "no changed function pairs".into()));
        return Ok(());
    }
    let pre_db = database(&case.pre_root)?;
    let post_db = database(&case.post_root)?;
    let single = pairs.len() == 1;
    for pair in pairs {
        let name = pair.name().to_string();
        let rule_id = if single { case.id.clone() } else { format!("{}.{name}", case.id) };
        let script = diff_trees(&pair.pre, &pair.post);
        if script.is_empty() {
            out.skipped.push((name, "no differential nodes".into()));
            continue;
        }
        match generate_one(&script, &rule_id, &case.provenance, config, budget, &pre_db, &post_db, &name) {
            Ok(g) => out.rules.push(g),
            Err(e) => out.errors.push(format!("{name}: {e:#}")),
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn generate_one(
    script: &p2r_core::treediff::EditScript,
    rule_id: &str,
    provenance: &str,
    config: &GenerationConfig,
    budget: usize,
    pre_db: &AstDatabase,
    post_db: &AstDatabase,
    function: &str,
) -> Result<GeneratedRule> {
    let draft = generate(script, rule_id, provenance, config)?;
    let mut set = RegressionSet::new(pre_db, function, post_db);
    set.budget = budget;
    let refined = refine_rule(&draft.rule, &set)?;
    let emitted = emit_text(&refined.rule)?;
    let log = format!("# generation\n{}# refinement\n{}", draft.render_log(), refined.render_log());
    Ok(GeneratedRule { function: function.to_string(), rule: refined.rule, emitted, log, residual_fp: refined.residual_fp })
}

/// Runs every case of `manifest` in parallel; results keep manifest order.
pub fn run_manifest(manifest: &CorpusManifest, config: &GenerationConfig) -> Vec<CaseResult> {
    manifest.cases.par_iter().map(|c| run_case(c, config, manifest.refine.budget)).collect()
}
