//! Unified diffs, patch application, function-pair localization and patch splitting.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::ast::AstTree;
use crate::cfront::{lexer, parse_unit, Diagnostic, SourceUnit};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LineTag {
    Context,
    Add,
    Del,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HunkLine {
    pub tag: LineTag,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchHunk {
    pub file: String,
    pub old_range: (usize, usize),
    pub new_range: (usize, usize),
    pub lines: Vec<HunkLine>,
    /// Set by `\ No newline at end of file` markers.
    #[serde(default)]
    pub old_missing_newline: bool,
    #[serde(default)]
    pub new_missing_newline: bool,
}

fn strip_prefix_path(p: &str) -> String {
    let p = p.split('\t').next().unwrap_or(p).trim();
    let p = p.strip_prefix("a/").or_else(|| p.strip_prefix("b/")).unwrap_or(p);
    p.to_string()
}

fn parse_range(s: &str, line: usize) -> Result<(usize, usize)> {
    let bad = || Error::Diff { line, message: format!("malformed range `{s}`") };
    let mut it = s.splitn(2, ',');
    let start = it.next().ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?;
    let count = match it.next() {
        Some(c) => c.parse::<usize>().map_err(|_| bad())?,
        None => 1,
    };
    Ok((start, count))
}

/// Parses a unified diff covering one or more files.
pub fn parse_unified_diff(text: &str) -> Result<Vec<PatchHunk>> {
    let lines: Vec<&str> = text.lines().collect();
    let mut hunks: Vec<PatchHunk> = Vec::new();
    let mut old_file: Option<String> = None;
    let mut new_file: Option<String> = None;
    let mut i = 0;
    while i < lines.len() {
        let l = lines[i];
        if let Some(rest) = l.strip_prefix("--- ") {
            old_file = Some(strip_prefix_path(rest));
            i += 1;
            continue;
        }
        if let Some(rest) = l.strip_prefix("+++ ") {
            new_file = Some(strip_prefix_path(rest));
            i += 1;
            continue;
        }
        if let Some(rest) = l.strip_prefix("@@") {
            let lineno = i + 1;
            let bad = |m: &str| Error::Diff { line: lineno, message: m.to_string() };
            let inner = rest.split("@@").next().ok_or_else(|| bad("malformed hunk header"))?;
            let mut parts = inner.split_whitespace();
            let old = parts.next().and_then(|p| p.strip_prefix('-')).ok_or_else(|| bad("malformed hunk header"))?;
            let new = parts.next().and_then(|p| p.strip_prefix('+')).ok_or_else(|| bad("malformed hunk header"))?;
            if !l[2..].contains("@@") {
                return Err(bad("malformed hunk header"));
            }
            let old_range = parse_range(old, lineno)?;
            let new_range = parse_range(new, lineno)?;
            let file = match (&new_file, &old_file) {
                (Some(n), _) if n != "/dev/null" => n.clone(),
                (_, Some(o)) => o.clone(),
                _ => return Err(bad("hunk without file header")),
            };
            let mut hunk = PatchHunk {
                file,
                old_range,
                new_range,
                lines: Vec::new(),
                old_missing_newline: false,
                new_missing_newline: false,
            };
            let (mut old_left, mut new_left) = (old_range.1, new_range.1);
            i += 1;
            while i < lines.len() && (old_left > 0 || new_left > 0) {
                let l = lines[i];
                let (tag, body) = match l.chars().next() {
                    Some(' ') => (LineTag::Context, &l[1..]),
                    None => (LineTag::Context, ""),
                    Some('+') => (LineTag::Add, &l[1..]),
                    Some('-') => (LineTag::Del, &l[1..]),
                    Some('\\') => {
                        mark_no_newline(&mut hunk);
                        i += 1;
                        continue;
                    }
                    _ => return Err(Error::Diff { line: i + 1, message: "unexpected line inside hunk".into() }),
                };
                match tag {
                    LineTag::Context => {
                        old_left = old_left.checked_sub(1).ok_or_else(|| count_err(i))?;
                        new_left = new_left.checked_sub(1).ok_or_else(|| count_err(i))?;
                    }
                    LineTag::Del => old_left = old_left.checked_sub(1).ok_or_else(|| count_err(i))?,
                    LineTag::Add => new_left = new_left.checked_sub(1).ok_or_else(|| count_err(i))?,
                }
                hunk.lines.push(HunkLine { tag, text: body.to_string() });
                i += 1;
            }
            if old_left > 0 || new_left > 0 {
                return Err(Error::Diff { line: lineno, message: "hunk shorter than its header ranges".into() });
            }
            if i < lines.len() && lines[i].starts_with('\\') {
                mark_no_newline(&mut hunk);
                i += 1;
            }
            hunks.push(hunk);
            continue;
        }
        i += 1;
    }
    Ok(hunks)
}

fn count_err(i: usize) -> Error {
    Error::Diff { line: i + 1, message: "hunk longer than its header ranges".into() }
}

fn mark_no_newline(h: &mut PatchHunk) {
    match h.lines.last().map(|l| l.tag) {
        Some(LineTag::Del) => h.old_missing_newline = true,
        Some(LineTag::Add) => h.new_missing_newline = true,
        Some(LineTag::Context) => {
            h.old_missing_newline = true;
            h.new_missing_newline = true;
        }
        None => {}
    }
}

/// A maximal run of added/deleted lines inside a hunk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChangeBlock {
    pub file: String,
    /// First pre line replaced (or the line the additions are inserted before), 1-based.
    pub old_line: usize,
    pub new_line: usize,
    pub dels: Vec<String>,
    pub adds: Vec<String>,
}

impl ChangeBlock {
    pub fn old_lines(&self) -> std::ops::Range<usize> {
        self.old_line..self.old_line + self.dels.len()
    }

    pub fn new_lines(&self) -> std::ops::Range<usize> {
        self.new_line..self.new_line + self.adds.len()
    }
}

pub fn change_blocks(hunks: &[PatchHunk]) -> Vec<ChangeBlock> {
    let mut out = Vec::new();
    for h in hunks {
        let mut old = if h.old_range.1 == 0 { h.old_range.0 + 1 } else { h.old_range.0 };
        let mut new = if h.new_range.1 == 0 { h.new_range.0 + 1 } else { h.new_range.0 };
        let mut cur: Option<ChangeBlock> = None;
        for l in &h.lines {
            match l.tag {
                LineTag::Context => {
                    out.extend(cur.take());
                    old += 1;
                    new += 1;
                }
                LineTag::Del | LineTag::Add => {
                    let b = cur.get_or_insert_with(|| ChangeBlock {
                        file: h.file.clone(),
                        old_line: old,
                        new_line: new,
                        dels: Vec::new(),
                        adds: Vec::new(),
                    });
                    if l.tag == LineTag::Del {
                        b.dels.push(l.text.clone());
                        old += 1;
                    } else {
                        b.adds.push(l.text.clone());
                        new += 1;
                    }
                }
            }
        }
        out.extend(cur);
    }
    out
}

fn split_lines(text: &str) -> (Vec<String>, bool) {
    let trailing = text.ends_with('\n');
    let body = text.strip_suffix('\n').unwrap_or(text);
    let lines = if text.is_empty() { Vec::new() } else { body.split('\n').map(str::to_string).collect() };
    (lines, trailing || text.is_empty())
}

/// Applies the hunks of `file` to its pre-patch text, checking every context and deleted line.
pub fn apply_hunks(file: &str, pre_text: &str, hunks: &[PatchHunk]) -> Result<String> {
    let hunks: Vec<PatchHunk> = hunks.iter().filter(|h| h.file == file).cloned().collect();
    let (mut lines, mut trailing) = split_lines(pre_text);
    for h in &hunks {
        let mut old = if h.old_range.1 == 0 { h.old_range.0 + 1 } else { h.old_range.0 };
        for l in &h.lines {
            if l.tag == LineTag::Add {
                continue;
            }
            match lines.get(old - 1) {
                Some(actual) if actual.trim_end_matches('\r') == l.text.trim_end_matches('\r') => {}
                actual => {
                    return Err(Error::Apply {
                        file: file.to_string(),
                        line: old,
                        message: format!("expected `{}`, found `{}`", l.text, actual.map(String::as_str).unwrap_or("<eof>")),
                    })
                }
            }
            old += 1;
        }
        if h.new_missing_newline {
            trailing = false;
        } else if h.old_missing_newline {
            trailing = true;
        }
    }
    let mut blocks = change_blocks(&hunks);
    blocks.sort_by_key(|b| std::cmp::Reverse(b.old_line));
    for b in blocks {
        let at = b.old_line - 1;
        lines.splice(at..at + b.dels.len(), b.adds.iter().cloned());
    }
    let mut out = lines.join("\n");
    if trailing && !lines.is_empty() {
        out.push('\n');
    }
    Ok(out)
}

/// Applies only the selected change blocks to `pre_text`.
pub fn apply_blocks(pre_text: &str, blocks: &[&ChangeBlock]) -> String {
    let (mut lines, trailing) = split_lines(pre_text);
    let mut sorted: Vec<&&ChangeBlock> = blocks.iter().collect();
    sorted.sort_by_key(|b| std::cmp::Reverse(b.old_line));
    for b in sorted {
        let at = (b.old_line - 1).min(lines.len());
        let end = (at + b.dels.len()).min(lines.len());
        lines.splice(at..end, b.adds.iter().cloned());
    }
    let mut out = lines.join("\n");
    if trailing && !lines.is_empty() {
        out.push('\n');
    }
    out
}

/// Unified diff between two texts of the same file.
pub fn diff_texts(file: &str, pre: &str, post: &str) -> Result<Vec<PatchHunk>> {
    let d = similar::TextDiff::from_lines(pre, post);
    let text = d.unified_diff().context_radius(3).header(&format!("a/{file}"), &format!("b/{file}")).to_string();
    parse_unified_diff(&text)
}

#[derive(Debug, Clone)]
pub struct FunctionPair {
    pub file: String,
    pub pre: AstTree,
    pub post: AstTree,
    /// `old=new` when the pair was joined through a rename hint.
    pub rename: Option<String>,
}

impl FunctionPair {
    pub fn name(&self) -> &str {
        &self.pre.function_name
    }
}

#[derive(Debug, Clone)]
pub struct PairResult {
    pub pairs: Vec<FunctionPair>,
    /// Changed functions without a peer on the other side.
    pub unmatched: Vec<String>,
}

/// Changed functions joined by name (or rename hint); output ordered by pre start line.
pub fn locate_function_pairs(
    pre: &SourceUnit,
    post: &SourceUnit,
    hunks: &[PatchHunk],
    renames: &BTreeMap<String, String>,
) -> PairResult {
    let blocks: Vec<ChangeBlock> = change_blocks(hunks).into_iter().filter(|b| b.file == pre.path || same_file(&b.file, &pre.path)).collect();
    let touched_pre = |f: &AstTree| {
        let loc = f.loc();
        blocks.iter().any(|b| {
            let r = b.old_lines();
            if r.is_empty() {
                // pure insertion between lines old_line-1 and old_line
                loc.start_line as usize <= b.old_line.saturating_sub(1) && b.old_line <= loc.end_line as usize
            } else {
                r.clone().any(|l| loc.contains_line(l as u32))
            }
        })
    };
    let touched_post = |f: &AstTree| {
        let loc = f.loc();
        blocks.iter().any(|b| {
            let r = b.new_lines();
            if r.is_empty() {
                loc.start_line as usize <= b.new_line.saturating_sub(1) && b.new_line <= loc.end_line as usize
            } else {
                r.clone().any(|l| loc.contains_line(l as u32))
            }
        })
    };
    // (name, occurrence) keys disambiguate static redefinitions
    let keyed = |unit: &SourceUnit| -> Vec<((String, usize), usize)> {
        let mut seen: HashMap<String, usize> = HashMap::new();
        unit.functions
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let n = seen.entry(f.function_name.clone()).or_default();
                *n += 1;
                ((f.function_name.clone(), *n - 1), i)
            })
            .collect()
    };
    let pre_keys = keyed(pre);
    let post_keys: HashMap<(String, usize), usize> = keyed(post).into_iter().collect();
    let rename_of = |name: &str| renames.get(name).cloned();
    let mut used_post = vec![false; post.functions.len()];
    let mut pairs = Vec::new();
    let mut unmatched = Vec::new();
    for ((name, occ), pi) in &pre_keys {
        let pf = &pre.functions[*pi];
        let target = rename_of(name).unwrap_or_else(|| name.clone());
        let peer = post_keys.get(&(target.clone(), *occ)).copied();
        let changed = touched_pre(pf) || peer.is_some_and(|q| touched_post(&post.functions[q]));
        if !changed {
            continue;
        }
        match peer {
            Some(q) => {
                used_post[q] = true;
                pairs.push(FunctionPair {
                    file: pre.path.clone(),
                    pre: pf.clone(),
                    post: post.functions[q].clone(),
                    rename: (target != *name).then(|| format!("{name}={target}")),
                });
            }
            None => unmatched.push(name.clone()),
        }
    }
    for (q, f) in post.functions.iter().enumerate() {
        if !used_post[q] && touched_post(f) {
            unmatched.push(f.function_name.clone());
        }
    }
    pairs.sort_by_key(|p| p.pre.loc().start_line);
    PairResult { pairs, unmatched }
}

fn same_file(a: &str, b: &str) -> bool {
    a.ends_with(b) || b.ends_with(a)
}

#[derive(Debug, Clone)]
pub struct SourcePair {
    pub file: String,
    pub pre_text: String,
    pub post_text: String,
}

#[derive(Debug, Clone)]
pub struct PatchCase {
    pub id: String,
    pub provenance: String,
    pub hunks: Vec<PatchHunk>,
    pub pairs: Vec<FunctionPair>,
    pub sources: Vec<SourcePair>,
    pub unmatched: Vec<String>,
    pub diagnostics: Vec<String>,
}

/// Builds a case from an ordered list of diffs, applied one after another.
///
/// `load_pre` returns the pre-patch text for a file path named in the diffs.
pub fn ingest_case(
    id: &str,
    provenance: &str,
    diffs: &[String],
    load_pre: &dyn Fn(&str) -> Result<String>,
    renames: &BTreeMap<String, String>,
) -> Result<PatchCase> {
    let mut texts: BTreeMap<String, (String, String)> = BTreeMap::new();
    let mut all_hunks = Vec::new();
    for d in diffs {
        let hunks = parse_unified_diff(d)?;
        let mut files: Vec<String> = hunks.iter().map(|h| h.file.clone()).collect();
        files.dedup();
        for f in files {
            if !texts.contains_key(&f) {
                let pre = load_pre(&f)?;
                texts.insert(f.clone(), (pre.clone(), pre));
            }
            let entry = texts.get_mut(&f).expect("inserted");
            entry.1 = apply_hunks(&f, &entry.1, &hunks)?;
        }
        all_hunks.extend(hunks);
    }
    let hunks = if diffs.len() > 1 {
        let mut merged = Vec::new();
        for (f, (pre, post)) in &texts {
            merged.extend(diff_texts(f, pre, post)?);
        }
        merged
    } else {
        all_hunks
    };
    let sources: Vec<SourcePair> = texts
        .into_iter()
        .map(|(file, (pre_text, post_text))| SourcePair { file, pre_text, post_text })
        .collect();
    build_case(id, provenance, hunks, sources, renames)
}

/// Parses both sides of every source and localizes the changed function pairs.
pub fn build_case(
    id: &str,
    provenance: &str,
    hunks: Vec<PatchHunk>,
    sources: Vec<SourcePair>,
    renames: &BTreeMap<String, String>,
) -> Result<PatchCase> {
    let mut pairs = Vec::new();
    let mut unmatched = Vec::new();
    let mut diagnostics = Vec::new();
    for s in &sources {
        let pre = parse_unit(&s.file, &s.pre_text);
        let post = parse_unit(&s.file, &s.post_text);
        let report = |side: &str, ds: &[Diagnostic], out: &mut Vec<String>| {
            for d in ds {
                out.push(format!("{}({side}):{d}", s.file));
            }
        };
        report("pre", &pre.diagnostics, &mut diagnostics);
        report("post", &post.diagnostics, &mut diagnostics);
        let r = locate_function_pairs(&pre, &post, &hunks, renames);
        pairs.extend(r.pairs);
        unmatched.extend(r.unmatched);
    }
    Ok(PatchCase {
        id: id.to_string(),
        provenance: provenance.to_string(),
        hunks,
        pairs,
        sources,
        unmatched,
        diagnostics,
    })
}

/// Identifier-normalized spelling of a source line.
pub fn normalize_line(line: &str) -> String {
    match lexer::tokenize(line) {
        Ok(toks) => toks
            .iter()
            .map(|t| if t.kind == lexer::TokenKind::Ident { "ID" } else { t.text.as_str() })
            .collect::<Vec<_>>()
            .join(" "),
        Err(_) => line.split_whitespace().collect::<Vec<_>>().join(" "),
    }
}

fn block_signature(b: &ChangeBlock) -> (Vec<String>, Vec<String>) {
    let mut adds: Vec<String> = b.adds.iter().map(|l| normalize_line(l)).filter(|l| !l.is_empty()).collect();
    let mut dels: Vec<String> = b.dels.iter().map(|l| normalize_line(l)).filter(|l| !l.is_empty()).collect();
    adds.sort();
    dels.sort();
    (adds, dels)
}

/// One case per function pair; repeated identical fixes inside one function
/// are further split into one case per occurrence.
pub fn split_patch(case: &PatchCase) -> Vec<PatchCase> {
    if case.pairs.is_empty() {
        return vec![case.clone()];
    }
    let mut out = Vec::new();
    let multi = case.pairs.len() > 1;
    for (pi, pair) in case.pairs.iter().enumerate() {
        let base_id = if multi { format!("{}.{}", case.id, pair.name()) } else { case.id.clone() };
        let loc = pair.pre.loc().clone();
        let all_blocks = change_blocks(&case.hunks);
        let blocks: Vec<&ChangeBlock> = all_blocks
            .iter()
            .filter(|b| same_file(&b.file, &pair.file))
            .filter(|b| {
                let first = b.old_line as u32;
                loc.start_line <= first && first <= loc.end_line + 1
            })
            .collect();
        let single = |id: String| PatchCase {
            id,
            provenance: case.provenance.clone(),
            hunks: case.hunks.clone(),
            pairs: vec![case.pairs[pi].clone()],
            sources: case.sources.clone(),
            unmatched: Vec::new(),
            diagnostics: case.diagnostics.clone(),
        };
        let redundant = blocks.len() >= 2 && {
            let sig = block_signature(blocks[0]);
            !(sig.0.is_empty() && sig.1.is_empty()) && blocks.iter().all(|b| block_signature(b) == sig)
        };
        let Some(src) = case.sources.iter().find(|s| same_file(&s.file, &pair.file)) else {
            out.push(single(base_id));
            continue;
        };
        if !redundant {
            out.push(single(base_id));
            continue;
        }
        let mut parts = Vec::new();
        for (k, b) in blocks.iter().enumerate() {
            let post_text = apply_blocks(&src.pre_text, &[b]);
            let Ok(hunks) = diff_texts(&src.file, &src.pre_text, &post_text) else {
                parts.clear();
                break;
            };
            let sources = vec![SourcePair { file: src.file.clone(), pre_text: src.pre_text.clone(), post_text }];
            let Ok(sub) = build_case(&format!("{base_id}#{}", k + 1), &case.provenance, hunks, sources, &BTreeMap::new())
            else {
                parts.clear();
                break;
            };
            let Some(p) = sub.pairs.iter().find(|p| p.name() == pair.name()).cloned() else {
                parts.clear();
                break;
            };
            parts.push(PatchCase { pairs: vec![p], ..sub });
        }
        if parts.is_empty() {
            out.push(single(base_id));
        } else {
            out.extend(parts);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const DIFF: &str = "--- a/f.c\n+++ b/f.c\n@@ -1,4 +1,5 @@\n int f(int a)\n {\n+  if (a) return 0;\n   return a;\n }\n";

    #[test]
    fn parses_and_applies() {
        let h = parse_unified_diff(DIFF).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].file, "f.c");
        assert_eq!((h[0].old_range, h[0].new_range), ((1, 4), (1, 5)));
        let pre = "int f(int a)\n{\n  return a;\n}\n";
        let post = apply_hunks("f.c", pre, &h).unwrap();
        assert_eq!(post, "int f(int a)\n{\n  if (a) return 0;\n  return a;\n}\n");
    }

    #[test]
    fn empty_and_malformed() {
        assert!(parse_unified_diff("").unwrap().is_empty());
        let err = parse_unified_diff("--- a/x\n+++ b/x\n@@ -1,x +1 @@\n").unwrap_err();
        assert!(matches!(err, Error::Diff { line: 3, .. }));
    }

    #[test]
    fn no_newline_marker() {
        let d = "--- a/f\n+++ b/f\n@@ -1 +1 @@\n-a\n\\ No newline at end of file\n+b\n";
        let h = parse_unified_diff(d).unwrap();
        assert_eq!(apply_hunks("f", "a", &h).unwrap(), "b\n");
    }

    #[test]
    fn mismatched_context_is_an_apply_error() {
        let h = parse_unified_diff(DIFF).unwrap();
        let err = apply_hunks("f.c", "int g(void)\n{\n  return 1;\n}\n", &h).unwrap_err();
        assert!(matches!(err, Error::Apply { line: 1, .. }));
    }

    #[test]
    fn normalization_hides_identifiers() {
        assert_eq!(normalize_line("  if (p == NULL) return;"), "if ( ID == ID ) return ;");
        assert_eq!(normalize_line("if (q == NULL) return;"), normalize_line("if (p == NULL) return;"));
    }

    #[test]
    fn pairs_two_functions_in_pre_order() {
        let pre = "int a(int x)\n{\n  return x;\n}\nint b(int y)\n{\n  return y;\n}\n";
        let post = "int a(int x)\n{\n  return x + 1;\n}\nint b(int y)\n{\n  return y + 1;\n}\n";
        let hunks = diff_texts("t.c", pre, post).unwrap();
        let r = locate_function_pairs(&parse_unit("t.c", pre), &parse_unit("t.c", post), &hunks, &BTreeMap::new());
        let names: Vec<_> = r.pairs.iter().map(|p| p.name().to_string()).collect();
        assert_eq!(names, ["a", "b"]);
    }
}
