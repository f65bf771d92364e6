//! Corpus manifests: cases with their diffs, snapshots and expected verdicts.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use p2r_core::refine::DEFAULT_BUDGET;
use p2r_core::rulegen::GenerationConfig;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case", deny_unknown_fields)]
pub struct RefineSettings {
    pub budget: usize,
}

impl Default for RefineSettings {
    fn default() -> Self {
        RefineSettings { budget: DEFAULT_BUDGET }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct Cognate {
    /// File or directory holding the cognate code.
    pub root: PathBuf,
    pub function: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case", deny_unknown_fields)]
pub struct Expected {
    pub pre_match: Vec<String>,
    pub post_nonmatch: Vec<String>,
    pub cognates: Vec<Cognate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct CaseSpec {
    pub id: String,
    pub provenance: String,
    pub diffs: Vec<PathBuf>,
    pub pre_root: PathBuf,
    pub post_root: PathBuf,
    /// Functions to generate rules for; empty means every changed function.
    #[serde(default)]
    pub targets: Vec<String>,
    #[serde(default)]
    pub renames: BTreeMap<String, String>,
    #[serde(default)]
    pub expected: Expected,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case", deny_unknown_fields)]
pub struct CorpusManifest {
    pub settings: GenerationConfig,
    pub refine: RefineSettings,
    #[serde(rename = "case")]
    pub cases: Vec<CaseSpec>,
}

impl CorpusManifest {
    /// Parses `text`, resolving relative paths against `base`.
    pub fn parse(text: &str, base: &Path) -> Result<Self> {
        let mut m: CorpusManifest = toml::from_str(text).context("malformed manifest")?;
        m.settings.validate()?;
        let abs = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        for c in &mut m.cases {
            c.diffs.iter_mut().for_each(abs);
            abs(&mut c.pre_root);
            abs(&mut c.post_root);
            c.expected.cognates.iter_mut().for_each(|g| abs(&mut g.root));
        }
        m.check()?;
        Ok(m)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new("."));
        Self::parse(&text, base).with_context(|| format!("in manifest {}", path.display()))
    }

    fn check(&self) -> Result<()> {
        let mut ids = BTreeSet::new();
        for c in &self.cases {
            if !ids.insert(c.id.as_str()) {
                bail!("duplicate case id `{}`", c.id);
            }
            if c.diffs.is_empty() {
                bail!("case `{}` lists no diffs", c.id);
            }
            let paths = c.diffs.iter().chain([&c.pre_root, &c.post_root]).chain(c.expected.cognates.iter().map(|g| &g.root));
            for p in paths {
                if !p.exists() {
                    bail!("case `{}`: missing path {}", c.id, p.display());
                }
            }
        }
        Ok(())
    }

    pub fn case(&self, id: &str) -> Option<&CaseSpec> {
        self.cases.iter().find(|c| c.id == id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture() -> tempfile::TempDir {
        let dir = tempfile::tempdir().unwrap();
        std::fs::create_dir_all(dir.path().join("a/pre")).unwrap();
        std::fs::create_dir_all(dir.path().join("a/post")).unwrap();
        std::fs::write(dir.path().join("a/fix.diff"), "").unwrap();
        dir
    }

    const CASE: &str = r#"
[[case]]
id = "a"
provenance = "demo"
diffs = ["a/fix.diff"]
pre-root = "a/pre"
post-root = "a/post"
"#;

    #[test]
    fn relative_paths_resolve_against_the_manifest() {
        let dir = fixture();
        let m = CorpusManifest::parse(CASE, dir.path()).unwrap();
        assert_eq!(m.cases[0].pre_root, dir.path().join("a/pre"));
        assert_eq!(m.refine.budget, DEFAULT_BUDGET);
        assert!(m.settings.drop_noise);
    }

    #[test]
    fn duplicate_ids_and_missing_paths_are_rejected() {
        let dir = fixture();
        let twice = format!("{CASE}{CASE}");
        assert!(CorpusManifest::parse(&twice, dir.path()).unwrap_err().to_string().contains("duplicate"));
        let missing = CASE.replace("a/post", "a/gone");
        assert!(CorpusManifest::parse(&missing, dir.path()).unwrap_err().to_string().contains("missing path"));
    }

    #[test]
    fn substitution_cycles_are_config_errors() {
        let dir = fixture();
        let text = format!("[settings.wrapper-substitutions]\na = \"b\"\nb = \"a\"\n{CASE}");
        assert!(CorpusManifest::parse(&text, dir.path()).is_err());
    }
}
