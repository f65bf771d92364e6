//! Subcommands. Each returns its process exit code; output goes to `out`.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use p2r_core::cfront::parse_unit;
use p2r_core::emit::emit_text;
use p2r_core::matcher::{build_db, scan, AstDatabase};
use p2r_core::refine::{refine_rule, RegressionSet};
use p2r_core::rulegen::GenerationConfig;
use p2r_core::treediff::{derive_editscript, match_trees};
use p2r_core::AstTree;

use crate::eval::evaluate_corpus;
use crate::manifest::CorpusManifest;
use crate::pipeline::run_manifest;
use crate::repo::{self, IndexEntry, RepoIndex, SkipEntry, INDEX_FORMAT};
use crate::report::{self, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDINGS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "p2r", version, about = "Turn C security patches into matching rules and scan code with them")]
pub struct Cli {
    /// Worker threads for batch steps.
    #[arg(long, global = true, env = "P2R_WORKERS")]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a C file and list its functions.
    Parse(ParseArgs),
    /// Print the edit script between two versions of a function.
    Diff(DiffArgs),
    /// Generate and refine rules for every case of a corpus manifest.
    Gen(GenArgs),
    /// Refine one rule against pre- and post-patch code.
    Refine(RefineArgs),
    /// Scan code with a rule repository.
    Scan(ScanArgs),
    /// Evaluate a rule repository against a corpus manifest.
    Eval(EvalArgs),
    /// Print the query text of a rule.
    Emit(EmitArgs),
}

#[derive(Debug, Args)]
pub struct ParseArgs {
    pub file: PathBuf,
    /// Write the syntax tree interchange document here (a directory when
    /// the file holds several functions and none is selected).
    #[arg(long)]
    pub emit_ast: Option<PathBuf>,
    #[arg(long)]
    pub function: Option<String>,
}

#[derive(Debug, Args)]
pub struct DiffArgs {
    pub pre: PathBuf,
    pub post: PathBuf,
    /// Function to compare; optional when each file defines exactly one.
    #[arg(long)]
    pub function: Option<String>,
    /// Also print the node pairing with its match level.
    #[arg(long)]
    pub levels: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Corpus manifest.
    #[arg(long = "case")]
    pub manifest: PathBuf,
    /// Generation settings; replaces the manifest's `[settings]`.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct RefineArgs {
    #[arg(long)]
    pub rule: PathBuf,
    /// Pre-patch code the rule must match.
    #[arg(long)]
    pub pre: PathBuf,
    /// Post-patch code the rule must not match.
    #[arg(long)]
    pub post: PathBuf,
    #[arg(long)]
    pub extra_negative: Vec<PathBuf>,
    /// Function the rule must match in the pre-patch code.
    #[arg(long)]
    pub function: String,
    #[arg(long, default_value_t = p2r_core::refine::DEFAULT_BUDGET)]
    pub budget: usize,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub log: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Source files or directories.
    #[arg(long, required = true, num_args = 1..)]
    pub db: Vec<PathBuf>,
    /// Rule directory or single rule file.
    #[arg(long)]
    pub rules: PathBuf,
    /// Report file; standard output when absent.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long = "case")]
    pub manifest: PathBuf,
    #[arg(long)]
    pub rules: PathBuf,
    /// Tab-separated per-case table.
    #[arg(long)]
    pub data: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EmitArgs {
    #[arg(long)]
    pub rule: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Runs `cli`, printing errors to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Some(n) = cli.workers {
        // a pool already built by an earlier call is fine to reuse
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let result = match cli.command {
        Command::Parse(a) => cmd_parse(&a, out),
        Command::Diff(a) => cmd_diff(&a, out),
        Command::Gen(a) => cmd_gen(&a, out),
        Command::Refine(a) => cmd_refine(&a, out),
        Command::Scan(a) => cmd_scan(&a, out),
        Command::Eval(a) => cmd_eval(&a, out),
        Command::Emit(a) => cmd_emit(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_ERROR
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

pub fn cmd_parse(a: &ParseArgs, out: &mut dyn Write) -> Result<i32> {
    let unit = parse_unit(&a.file.to_string_lossy(), &read(&a.file)?);
    for d in &unit.diagnostics {
        writeln!(out, "{}: {d}", a.file.display())?;
    }
    let chosen: Vec<&AstTree> = match &a.function {
        Some(f) => vec![unit.function(f).with_context(|| format!("no function `{f}`"))?],
        None => unit.functions.iter().collect(),
    };
    for t in &chosen {
        let l = t.loc();
        writeln!(out, "{}\tlines {}-{}\t{} nodes\t{} vars", t.function_name, l.start_line, l.end_line, t.len(), t.declared_vars.len())?;
    }
    if let Some(dest) = &a.emit_ast {
        if chosen.len() == 1 {
            write_file(dest, &chosen[0].to_document())?;
        } else {
            std::fs::create_dir_all(dest).with_context(|| format!("creating {}", dest.display()))?;
            let mut seen = std::collections::BTreeMap::<&str, usize>::new();
            for t in &chosen {
                let n = seen.entry(&t.function_name).or_default();
                let name = if *n == 0 { format!("{}.ast", t.function_name) } else { format!("{}.{n}.ast", t.function_name) };
                *n += 1;
                write_file(&dest.join(name), &t.to_document())?;
            }
        }
    }
    Ok(if unit.has_errors() { EXIT_ERROR } else { EXIT_OK })
}

fn pick<'a>(path: &Path, trees: &'a [AstTree], name: Option<&str>) -> Result<&'a AstTree> {
    match name {
        Some(n) => trees.iter().find(|t| t.function_name == n).with_context(|| format!("{}: no function `{n}`", path.display())),
        None if trees.len() == 1 => Ok(&trees[0]),
        None => bail!("{}: {} functions, pass --function", path.display(), trees.len()),
    }
}

pub fn cmd_diff(a: &DiffArgs, out: &mut dyn Write) -> Result<i32> {
    let pre_unit = parse_unit(&a.pre.to_string_lossy(), &read(&a.pre)?);
    let post_unit = parse_unit(&a.post.to_string_lossy(), &read(&a.post)?);
    let pre = pick(&a.pre, &pre_unit.functions, a.function.as_deref())?;
    let post = pick(&a.post, &post_unit.functions, a.function.as_deref().or(Some(pre.function_name.as_str())))?;
    let matches = match_trees(pre, post);
    if a.levels {
        for (p, q, level) in matches.pairs() {
            let n = pre.node(p);
            writeln!(out, "match\t{}\t{:?}\tpre={}:{}\tpost={}:{}\tlevel={level}", n.kind.name(), n.value_str(), n.loc.start_line, n.loc.start_col, post.node(q).loc.start_line, post.node(q).loc.start_col)?;
        }
    }
    let script = derive_editscript(pre, post, &matches);
    out.write_all(script.render().as_bytes())?;
    Ok(EXIT_OK)
}

pub fn cmd_gen(a: &GenArgs, out: &mut dyn Write) -> Result<i32> {
    let mut manifest = CorpusManifest::load(&a.manifest)?;
    if let Some(c) = &a.config {
        manifest.settings = GenerationConfig::from_toml(&read(c)?).with_context(|| format!("in {}", c.display()))?;
    }
    std::fs::create_dir_all(&a.out).with_context(|| format!("creating {}", a.out.display()))?;
    if manifest.cases.is_empty() {
        writeln!(out, "warning: manifest has no cases")?;
    }
    let results = run_manifest(&manifest, &manifest.settings);
    let mut index = RepoIndex {
        index_format: INDEX_FORMAT,
        settings: manifest.settings.clone(),
        refine: manifest.refine,
        rules: Vec::new(),
        skipped: Vec::new(),
    };
    let mut all_ok = true;
    for r in &results {
        for n in &r.notes {
            writeln!(out, "{}: note: {n}", r.id)?;
        }
        for g in &r.rules {
            let file = repo::write_rule(&a.out, &g.rule, &g.emitted, &g.log)?;
            let flag = if g.residual_fp { " (residual-fp)" } else { "" };
            writeln!(out, "{}: {} -> {file}{flag}", r.id, g.function)?;
            index.rules.push(IndexEntry {
                rule_id: g.rule.rule_id.clone(),
                provenance: g.rule.provenance.clone(),
                case: r.id.clone(),
                function: g.function.clone(),
                file,
                residual_fp: g.residual_fp,
            });
        }
        for (what, why) in &r.skipped {
            writeln!(out, "{}: skipped {what}: {why}", r.id)?;
            index.skipped.push(SkipEntry { case: r.id.clone(), reason: format!("{what}: {why}") });
        }
        for e in &r.errors {
            writeln!(out, "{}: error: {e}", r.id)?;
        }
        all_ok &= r.ok();
    }
    repo::write_index(&a.out, &index)?;
    writeln!(out, "{} rule(s) from {} case(s)", index.rules.len(), results.len())?;
    Ok(if all_ok { EXIT_OK } else { EXIT_ERROR })
}

fn db(path: &Path) -> Result<AstDatabase> {
    build_db(&[path.to_path_buf()]).with_context(|| format!("building database from {}", path.display()))
}

pub fn cmd_refine(a: &RefineArgs, out: &mut dyn Write) -> Result<i32> {
    let rule = repo::load_rule(&a.rule)?;
    let pre = db(&a.pre)?;
    let post = db(&a.post)?;
    let extra: Vec<AstDatabase> = a.extra_negative.iter().map(|p| db(p)).collect::<Result<_>>()?;
    let mut set = RegressionSet::new(&pre, &a.function, &post);
    set.must_not_match.extend(extra.iter());
    set.budget = a.budget;
    let refined = refine_rule(&rule, &set)?;
    write_file(&a.out, &refined.rule.to_document())?;
    let log = refined.render_log();
    match &a.log {
        Some(p) => write_file(p, &log)?,
        None => out.write_all(log.as_bytes())?,
    }
    let check = &refined.final_check;
    writeln!(out, "tp={} fp={} checks={}", check.tp, check.fp, refined.checks)?;
    Ok(EXIT_OK)
}

pub fn cmd_scan(a: &ScanArgs, out: &mut dyn Write) -> Result<i32> {
    let loaded = repo::load_rules(&a.rules)?;
    if !loaded.errors.is_empty() {
        for e in &loaded.errors {
            writeln!(out, "error: {e}")?;
        }
        return Ok(EXIT_ERROR);
    }
    let database = build_db(&a.db)?;
    let rules: Vec<_> = loaded.rules.into_iter().map(|(_, r)| r).collect();
    let reports = scan(&database, &rules);
    let text = report::render(a.format, &reports, &database.diagnostics);
    match &a.report {
        Some(p) => write_file(p, &text)?,
        None => out.write_all(text.as_bytes())?,
    }
    let found = reports.iter().any(|r| !r.matches.is_empty());
    Ok(if found { EXIT_FINDINGS } else { EXIT_OK })
}

pub fn cmd_eval(a: &EvalArgs, out: &mut dyn Write) -> Result<i32> {
    let manifest = CorpusManifest::load(&a.manifest)?;
    let loaded = repo::load_rules(&a.rules)?;
    for e in &loaded.errors {
        writeln!(out, "warning: {e}")?;
    }
    let rules: Vec<_> = loaded.rules.into_iter().map(|(_, r)| r).collect();
    let summary = evaluate_corpus(&manifest, &rules);
    out.write_all(summary.render_text().as_bytes())?;
    if let Some(p) = &a.data {
        write_file(p, &summary.render_tsv())?;
    }
    let perfect = summary.recalled() == summary.cases.len() && summary.post_hits() == 0;
    Ok(if perfect { EXIT_OK } else { EXIT_FINDINGS })
}

pub fn cmd_emit(a: &EmitArgs, out: &mut dyn Write) -> Result<i32> {
    let text = emit_text(&repo::load_rule(&a.rule)?)?;
    match &a.out {
        Some(p) => write_file(p, &text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}
