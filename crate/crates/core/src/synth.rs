//! Generated fixtures: random trees and mutations of them, alpha-renamed
//! sources, and a synthetic C code base with patches to derive rules from.

use std::collections::{BTreeMap, HashSet};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::ast::{role, AstTree, Loc, NodeKind, OwnedNode, Storage};
use crate::cfront::lexer::{tokenize, TokenKind};
use crate::cfront::parse_unit;
use crate::error::Result;
use crate::matcher::AstDatabase;
use crate::refine::{refine_rule, RegressionSet};
use crate::rulegen::{generate, GenerationConfig};
use crate::treediff::diff_trees;
use crate::Rule;

const NAMES: &[&str] = &["a", "b", "len", "buf", "n", "p", "q"];
const CALLEES: &[&str] = &["f", "g", "check", "copy"];
const OPERATORS: &[&str] = &["+", "-", "==", "<", "&&"];

fn is_leaf_kind(kind: NodeKind) -> bool {
    matches!(kind, NodeKind::VariableAccess | NodeKind::Literal)
}

fn child_role(kind: NodeKind) -> &'static str {
    if kind.is_statement() {
        role::STMT
    } else {
        role::OPERAND
    }
}

fn random_leaf(rng: &mut StdRng) -> OwnedNode {
    if rng.gen_bool(0.6) {
        OwnedNode::new(NodeKind::VariableAccess, Some(NAMES.choose(rng).unwrap().to_string()), Loc::default())
    } else {
        OwnedNode::new(NodeKind::Literal, Some(rng.gen_range(0..4).to_string()), Loc::default())
    }
}

fn random_inner(rng: &mut StdRng) -> OwnedNode {
    let (kind, value) = match rng.gen_range(0..6) {
        0 => (NodeKind::BlockStmt, None),
        1 => (NodeKind::IfStmt, None),
        2 => (NodeKind::ExprStmt, None),
        3 => (NodeKind::ReturnStmt, None),
        4 => (NodeKind::BinaryExpr, Some(OPERATORS.choose(rng).unwrap().to_string())),
        _ => (NodeKind::FunctionCall, Some(CALLEES.choose(rng).unwrap().to_string())),
    };
    OwnedNode::new(kind, value, Loc::default())
}

fn grow(rng: &mut StdRng, budget: &mut usize, depth: usize) -> OwnedNode {
    *budget = budget.saturating_sub(1);
    if *budget == 0 || depth > 6 || rng.gen_bool(0.3) {
        return random_leaf(rng);
    }
    let mut n = random_inner(rng);
    for _ in 0..rng.gen_range(0..4) {
        if *budget == 0 {
            break;
        }
        let c = grow(rng, budget, depth + 1);
        let r = child_role(c.kind);
        n.push(c, r);
    }
    n
}

/// Random tree of at most `max_nodes` nodes (at least 2) under a Function root.
pub fn random_tree(rng: &mut StdRng, max_nodes: usize) -> AstTree {
    let mut budget = rng.gen_range(1..max_nodes.max(2));
    let mut root = OwnedNode::new(NodeKind::Function, Some("f".into()), Loc::default());
    while budget > 0 {
        let c = grow(rng, &mut budget, 1);
        let r = child_role(c.kind);
        root.push(c, r);
    }
    AstTree::from_owned(root, "f".into(), Vec::new()).expect("generated tree is well formed")
}

struct Slot {
    kind: NodeKind,
    value: Option<String>,
    role: Option<String>,
    children: Vec<usize>,
    parent: Option<usize>,
}

struct Arena {
    slots: Vec<Slot>,
}

impl Arena {
    fn from_tree(t: &AstTree) -> Self {
        let slots = t
            .nodes
            .iter()
            .map(|n| Slot {
                kind: n.kind,
                value: n.value.clone(),
                role: n.role.clone(),
                children: n.children.iter().map(|c| c.index()).collect(),
                parent: t.parent(n.id).map(|p| p.index()),
            })
            .collect();
        Arena { slots }
    }

    fn live(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            out.push(i);
            stack.extend(self.slots[i].children.iter().rev());
        }
        out
    }

    fn within(&self, mut node: usize, ancestor: usize) -> bool {
        loop {
            if node == ancestor {
                return true;
            }
            match self.slots[node].parent {
                Some(p) => node = p,
                None => return false,
            }
        }
    }

    fn detach(&mut self, i: usize) {
        if let Some(p) = self.slots[i].parent.take() {
            self.slots[p].children.retain(|c| *c != i);
        }
    }

    fn attach(&mut self, i: usize, parent: usize, at: usize) {
        let at = at.min(self.slots[parent].children.len());
        self.slots[parent].children.insert(at, i);
        self.slots[i].parent = Some(parent);
    }

    fn add(&mut self, n: OwnedNode) -> usize {
        let i = self.slots.len();
        self.slots.push(Slot { kind: n.kind, value: n.value, role: n.role, children: Vec::new(), parent: None });
        for c in n.children {
            let j = self.add(c);
            self.slots[i].children.push(j);
            self.slots[j].parent = Some(i);
        }
        i
    }

    fn owned(&self, i: usize) -> OwnedNode {
        let s = &self.slots[i];
        OwnedNode {
            kind: s.kind,
            value: s.value.clone(),
            role: s.role.clone(),
            loc: Loc::default(),
            children: s.children.iter().map(|c| self.owned(*c)).collect(),
        }
    }
}

/// Applies `count` random renames, inserts, deletes and moves to `tree`,
/// keeping it at or under `max_nodes` nodes.
pub fn mutate(rng: &mut StdRng, tree: &AstTree, count: usize, max_nodes: usize) -> AstTree {
    let mut a = Arena::from_tree(tree);
    for _ in 0..count {
        let live = a.live();
        let inner: Vec<usize> = live.iter().copied().filter(|i| !is_leaf_kind(a.slots[*i].kind)).collect();
        let movable: Vec<usize> = live[1..].to_vec();
        match rng.gen_range(0..4) {
            0 => {
                let valued: Vec<usize> = live[1..].iter().copied().filter(|i| a.slots[*i].value.is_some()).collect();
                if let Some(&i) = valued.choose(rng) {
                    let pool = match a.slots[i].kind {
                        NodeKind::VariableAccess => NAMES,
                        NodeKind::FunctionCall => CALLEES,
                        NodeKind::BinaryExpr => OPERATORS,
                        _ => &["0", "1", "2", "3", "7"][..],
                    };
                    a.slots[i].value = Some(pool.choose(rng).unwrap().to_string());
                }
            }
            1 if live.len() < max_nodes => {
                let parent = *inner.choose(rng).unwrap();
                let mut n = if rng.gen_bool(0.7) || live.len() + 3 > max_nodes {
                    random_leaf(rng)
                } else {
                    let mut n = random_inner(rng);
                    let c = random_leaf(rng);
                    n.push(c, role::OPERAND);
                    n
                };
                n.role = Some(child_role(n.kind).into());
                let at = rng.gen_range(0..=a.slots[parent].children.len());
                let i = a.add(n);
                a.attach(i, parent, at);
            }
            2 if !movable.is_empty() => {
                let i = *movable.choose(rng).unwrap();
                a.detach(i);
            }
            3 if !movable.is_empty() => {
                let i = *movable.choose(rng).unwrap();
                let targets: Vec<usize> = inner.iter().copied().filter(|t| !a.within(*t, i)).collect();
                if let Some(&t) = targets.choose(rng) {
                    a.detach(i);
                    let at = rng.gen_range(0..=a.slots[t].children.len());
                    a.attach(i, t, at);
                }
            }
            _ => {}
        }
    }
    AstTree::from_owned(a.owned(0), tree.function_name.clone(), Vec::new()).expect("mutated tree is well formed")
}

/// A seeded (pre, post) pair: a random tree and 1 to 8 mutations of it.
pub fn mutation_pair(seed: u64, max_nodes: usize) -> (AstTree, AstTree) {
    let mut rng = StdRng::seed_from_u64(seed);
    let pre = random_tree(&mut rng, max_nodes);
    let n = rng.gen_range(1..=8);
    let post = mutate(&mut rng, &pre, n, max_nodes);
    (pre, post)
}

/// Renames every parameter and local variable of every function in `text`
/// to a fresh name. Field names, globals, callees and types are kept.
/// Text that does not tokenize is returned unchanged.
pub fn alpha_rename(path: &str, text: &str) -> String {
    let Ok(tokens) = tokenize(text) else {
        return text.to_string();
    };
    let taken: HashSet<&str> = tokens.iter().filter(|t| t.kind == TokenKind::Ident).map(|t| t.text.as_str()).collect();
    let unit = parse_unit(path, text);
    let mut counter = 0usize;
    let mut scopes: Vec<(u32, u32, BTreeMap<String, String>)> = Vec::new();
    for f in &unit.functions {
        let mut map = BTreeMap::new();
        for v in &f.declared_vars {
            if v.storage == Storage::GlobalRef || map.contains_key(&v.name) {
                continue;
            }
            let fresh = loop {
                counter += 1;
                let cand = format!("ren{counter}_v");
                if !taken.contains(cand.as_str()) {
                    break cand;
                }
            };
            map.insert(v.name.clone(), fresh);
        }
        scopes.push((f.loc().start_line, f.loc().end_line, map));
    }
    let mut out = String::with_capacity(text.len() + text.len() / 8);
    let mut last = 0;
    for (k, t) in tokens.iter().enumerate() {
        if t.kind != TokenKind::Ident || (k > 0 && (tokens[k - 1].is(".") || tokens[k - 1].is("->"))) {
            continue;
        }
        let Some((_, _, map)) = scopes.iter().find(|(s, e, _)| *s <= t.line && t.line <= *e) else {
            continue;
        };
        if let Some(fresh) = map.get(&t.text) {
            out.push_str(&text[last..t.start]);
            out.push_str(fresh);
            last = t.end;
        }
    }
    out.push_str(&text[last..]);
    out
}

/// Shared declarations at the top of every synthetic file.
pub const SYNTH_PRELUDE: &str = "struct buf {\n    char *data;\n    size_t len;\n    int count;\n};\n\n";

struct Vars {
    ints: Vec<&'static str>,
}

fn statement(rng: &mut StdRng, vars: &Vars, helper: &str) -> Vec<String> {
    let t = *vars.ints.choose(rng).unwrap();
    let c = rng.gen_range(1..64);
    match rng.gen_range(0..10) {
        0 => vec!["if (s == NULL)".into(), "    return -1;".into()],
        1 => vec![
            "for (i = 0; i < (int)n; i++) {".into(),
            format!("    {t} += p[i] * {c};"),
            "}".into(),
        ],
        2 => vec![format!("{t} = {helper}(b, n + {c});")],
        3 => vec![format!("b->count = {t};")],
        4 => vec![
            format!("if ({t} > {c}) {{"),
            format!("    {t} = {t} - {c};"),
            "} else {".into(),
            format!("    {t} = {t} + (int)n;"),
            "}".into(),
        ],
        5 => vec![format!("while ({t} > {c})"), format!("    {t}--;")],
        6 => vec!["memcpy(p, s, n);".into()],
        7 => vec![format!("p = malloc(n * sizeof(int) + {c});")],
        8 => vec![format!("{t} = p[n - 1] + b->count;")],
        _ => vec![
            "for (i = 0; i <= (int)b->len; i++)".into(),
            format!("    b->data[i] = (char){t};"),
        ],
    }
}

/// Source text of one synthetic function with `stmts` body statements.
pub fn random_function(rng: &mut StdRng, name: &str, stmts: usize) -> String {
    let vars = Vars { ints: vec!["total", "k"] };
    let helper = format!("helper_{}", rng.gen_range(0..16));
    let mut lines = vec![
        format!("static int {name}(struct buf *b, size_t n, const char *s)"),
        "{".into(),
        "    int i;".into(),
        "    int k = 0;".into(),
        format!("    int total = {};", rng.gen_range(0..8)),
        "    char *p = b->data;".into(),
    ];
    for _ in 0..stmts {
        lines.extend(statement(rng, &vars, &helper).into_iter().map(|l| format!("    {l}")));
    }
    lines.push("    return total + k;".into());
    lines.push("}".into());
    lines.join("\n") + "\n"
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthFile {
    pub name: String,
    pub text: String,
}

/// Synthetic code base of roughly `target_lines` lines split into files of
/// about 1000 lines each.
pub fn synthetic_codebase(seed: u64, target_lines: usize) -> Vec<SynthFile> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut files = Vec::new();
    let mut total = 0usize;
    let mut fn_index = 0usize;
    while total < target_lines {
        let mut text = String::from(SYNTH_PRELUDE);
        while text.lines().count() < 1000 && total + text.lines().count() < target_lines {
            let n = rng.gen_range(3..16);
            text.push_str(&random_function(&mut rng, &format!("synth_fn_{fn_index}"), n));
            text.push('\n');
            fn_index += 1;
        }
        total += text.lines().count();
        files.push(SynthFile { name: format!("synth_{:03}.c", files.len()), text });
    }
    files
}

/// A synthetic fix: one function before and after the patch.
#[derive(Debug, Clone)]
pub struct SynthPatch {
    pub id: String,
    pub function: String,
    pub pre: String,
    pub post: String,
}

const GUARDS: &[&str] = &[
    "if (n == 0)\n        return -1;",
    "if (p == NULL)\n        return -1;",
    "if (total > 4096)\n        return -1;",
    "if (b->len < n)\n        return -1;",
    "if (k < 0)\n        return -1;",
];

/// `count` seeded patches, each inserting a guard before a body statement
/// or tightening a `<=` loop bound.
pub fn synthetic_patches(seed: u64, count: usize) -> Vec<SynthPatch> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let function = format!("patched_fn_{}", out.len());
        let stmts = rng.gen_range(4..12);
        let pre = random_function(&mut rng, &function, stmts);
        let lines: Vec<&str> = pre.lines().collect();
        let post = if let Some(at) = lines.iter().position(|l| l.contains("<= (int)b->len")).filter(|_| rng.gen_bool(0.3)) {
            let mut v: Vec<String> = lines.iter().map(|l| l.to_string()).collect();
            v[at] = v[at].replace("<=", "<");
            v.join("\n") + "\n"
        } else {
            // first line of a top-level body statement
            let starts: Vec<usize> = (6..lines.len() - 2)
                .filter(|i| lines[*i].starts_with("    ") && !lines[*i].starts_with("     ") && !lines[*i].starts_with("    }"))
                .collect();
            let at = *starts.choose(&mut rng).unwrap();
            let guard = GUARDS.choose(&mut rng).unwrap();
            let mut v: Vec<String> = lines.iter().map(|l| l.to_string()).collect();
            v.insert(at, format!("    {guard}"));
            v.join("\n") + "\n"
        };
        out.push(SynthPatch { id: format!("synth-{}", out.len()), function, pre, post });
    }
    out
}

/// Generates and refines one rule per patch. Each patch's own pre and post
/// function form its regression set.
pub fn synthetic_rules(patches: &[SynthPatch], config: &GenerationConfig) -> Result<Vec<Rule>> {
    let mut rules = Vec::with_capacity(patches.len());
    for p in patches {
        let pre_text = format!("{SYNTH_PRELUDE}{}", p.pre);
        let post_text = format!("{SYNTH_PRELUDE}{}", p.post);
        let pre_unit = parse_unit("pre.c", &pre_text);
        let post_unit = parse_unit("post.c", &post_text);
        let (Some(pre), Some(post)) = (pre_unit.function(&p.function), post_unit.function(&p.function)) else {
            continue;
        };
        let script = diff_trees(pre, post);
        if script.is_empty() {
            continue;
        }
        let draft = generate(&script, &p.id, "synthetic", config)?;
        let pre_db = AstDatabase::from_units(vec![pre_unit.clone()]);
        let post_db = AstDatabase::from_units(vec![post_unit.clone()]);
        let set = RegressionSet::new(&pre_db, &p.function, &post_db);
        rules.push(refine_rule(&draft.rule, &set)?.rule);
    }
    Ok(rules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcher::evaluate_function;

    #[test]
    fn mutation_pairs_are_seeded_and_bounded() {
        let (a, b) = mutation_pair(7, 200);
        let (c, d) = mutation_pair(7, 200);
        assert!(a.structurally_equal(&c) && b.structurally_equal(&d));
        for seed in 0..50 {
            let (pre, post) = mutation_pair(seed, 200);
            assert!(pre.len() <= 200 && post.len() <= 200, "seed {seed}");
        }
    }

    #[test]
    fn alpha_rename_keeps_fields_globals_and_callees() {
        let src = "int g;\nint f(struct s *p, int n)\n{\n    int k = p->n + n;\n    return h(k, g);\n}\n";
        let out = alpha_rename("a.c", src);
        assert!(out.contains("p->n") || out.contains("->n "), "{out}");
        assert!(out.contains("h(") && out.contains(", g)"), "{out}");
        assert!(!out.contains(" k ") && !out.contains("(k,"), "{out}");
        let before = parse_unit("a.c", src);
        let after = parse_unit("a.c", &out);
        assert_eq!(before.functions[0].len(), after.functions[0].len());
    }

    #[test]
    fn synthetic_functions_parse() {
        let mut rng = StdRng::seed_from_u64(3);
        for i in 0..40 {
            let text = format!("{SYNTH_PRELUDE}{}", random_function(&mut rng, "s", 12));
            let unit = parse_unit("s.c", &text);
            assert!(!unit.has_errors(), "{i}: {:?}\n{text}", unit.diagnostics);
            assert_eq!(unit.functions.len(), 1);
        }
    }

    #[test]
    fn synthetic_rules_match_their_own_pre_function() {
        let patches = synthetic_patches(11, 6);
        let rules = synthetic_rules(&patches, &GenerationConfig::default()).unwrap();
        assert_eq!(rules.len(), 6);
        for (p, r) in patches.iter().zip(&rules) {
            let unit = parse_unit("pre.c", &format!("{SYNTH_PRELUDE}{}", p.pre));
            assert!(evaluate_function(r, unit.function(&p.function).unwrap()).is_some(), "{}", p.id);
        }
    }
}
