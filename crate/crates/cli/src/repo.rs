//! Rule repository on disk: `<provenance>__<rule-id>.rule` documents with
//! emitted text and logs beside them, plus an `index.toml`.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use p2r_core::rule::{has_errors, validate_rule};
use p2r_core::rulegen::GenerationConfig;
use p2r_core::Rule;
use serde::{Deserialize, Serialize};

use crate::manifest::RefineSettings;

pub const INDEX_FILE: &str = "index.toml";
pub const INDEX_FORMAT: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct IndexEntry {
    pub rule_id: String,
    pub provenance: String,
    pub case: String,
    pub function: String,
    pub file: String,
    #[serde(default)]
    pub residual_fp: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct SkipEntry {
    pub case: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct RepoIndex {
    pub index_format: u32,
    pub settings: GenerationConfig,
    pub refine: RefineSettings,
    #[serde(default, rename = "rule")]
    pub rules: Vec<IndexEntry>,
    #[serde(default, rename = "skipped")]
    pub skipped: Vec<SkipEntry>,
}

fn sanitize(s: &str) -> String {
    s.chars().map(|c| if c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.') { c } else { '_' }).collect()
}

/// File stem for `rule`, without extension.
pub fn rule_stem(rule: &Rule) -> String {
    format!("{}__{}", sanitize(&rule.provenance), sanitize(&rule.rule_id))
}

/// Writes the rule document, its emitted text (`.ql`) and its log (`.log`).
/// Returns the rule document's file name.
pub fn write_rule(dir: &Path, rule: &Rule, emitted: &str, log: &str) -> Result<String> {
    let stem = rule_stem(rule);
    let name = format!("{stem}.rule");
    write(&dir.join(&name), &rule.to_document())?;
    write(&dir.join(format!("{stem}.ql")), emitted)?;
    write(&dir.join(format!("{stem}.log")), log)?;
    Ok(name)
}

pub fn write_index(dir: &Path, index: &RepoIndex) -> Result<()> {
    write(&dir.join(INDEX_FILE), &toml::to_string(index).context("serializing index")?)
}

pub fn read_index(dir: &Path) -> Result<RepoIndex> {
    let path = dir.join(INDEX_FILE);
    let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

#[derive(Debug, Default)]
pub struct LoadedRules {
    pub rules: Vec<(PathBuf, Rule)>,
    /// One line per rule file that failed to read, parse or validate.
    pub errors: Vec<String>,
}

/// Loads `*.rule` documents from a directory (sorted by file name) or a
/// single rule file. Invalid rules are reported, not returned.
pub fn load_rules(path: &Path) -> Result<LoadedRules> {
    let mut files = Vec::new();
    if path.is_dir() {
        for e in std::fs::read_dir(path).with_context(|| format!("reading {}", path.display()))? {
            let p = e?.path();
            if p.extension().is_some_and(|x| x == "rule") {
                files.push(p);
            }
        }
        files.sort();
    } else {
        files.push(path.to_path_buf());
    }
    let mut out = LoadedRules::default();
    for f in files {
        match load_rule(&f) {
            Ok(r) => out.rules.push((f, r)),
            Err(e) => out.errors.push(format!("{}: {e:#}", f.display())),
        }
    }
    Ok(out)
}

pub fn load_rule(path: &Path) -> Result<Rule> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let rule = Rule::from_document(&text)?;
    let diags = validate_rule(&rule);
    if has_errors(&diags) {
        let msgs: Vec<String> = diags.iter().map(|d| d.to_string()).collect();
        anyhow::bail!("invalid rule: {}", msgs.join("; "));
    }
    Ok(rule)
}

#[cfg(test)]
mod tests {
    use super::*;
    use p2r_core::rule::{Condition, Origin, Polarity, Predicate};
    use p2r_core::NodeKind;

    fn rule() -> Rule {
        let mut r = Rule::new("case-1", "demo/lib");
        r.predicates.push(Predicate {
            name: "func_0".into(),
            target: "target_0".into(),
            target_kind: NodeKind::FunctionCall,
            params: vec![],
            conditions: vec![Condition::callee("g")],
            polarity: Polarity::MustExist,
            origin: Origin::Delete,
            style_only: false,
        });
        r
    }

    #[test]
    fn files_are_named_by_provenance_and_id() {
        let dir = tempfile::tempdir().unwrap();
        let name = write_rule(dir.path(), &rule(), "import cpp\n", "").unwrap();
        assert_eq!(name, "demo_lib__case-1.rule");
        assert!(dir.path().join("demo_lib__case-1.ql").exists());
        let loaded = load_rules(dir.path()).unwrap();
        assert!(loaded.errors.is_empty());
        assert_eq!(loaded.rules[0].1, rule());
    }

    #[test]
    fn broken_rules_are_reported() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("x__y.rule"), "{").unwrap();
        let mut vacuous = rule();
        vacuous.predicates[0].polarity = Polarity::MustNotExist;
        write_rule(dir.path(), &vacuous, "", "").unwrap();
        let loaded = load_rules(dir.path()).unwrap();
        assert!(loaded.rules.is_empty());
        assert_eq!(loaded.errors.len(), 2, "{:?}", loaded.errors);
    }

    #[test]
    fn index_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let index = RepoIndex {
            index_format: INDEX_FORMAT,
            settings: GenerationConfig::default(),
            refine: RefineSettings::default(),
            rules: vec![IndexEntry {
                rule_id: "a".into(),
                provenance: "p".into(),
                case: "a".into(),
                function: "f".into(),
                file: "p__a.rule".into(),
                residual_fp: false,
            }],
            skipped: vec![SkipEntry { case: "b".into(), reason: "no differential nodes".into() }],
        };
        write_index(dir.path(), &index).unwrap();
        assert_eq!(read_index(dir.path()).unwrap(), index);
    }
}
