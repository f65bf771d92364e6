//! C frontend: preprocessed (or macro-free) C source to per-function trees.

pub mod lexer;
pub mod parser;
pub mod unparse;

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::ast::{AstTree, DeclaredVar, NodeKind, OwnedNode, Storage};
use crate::error::{Error, Result};
use lexer::{Token, TokenKind};
use parser::Parser;

pub use unparse::unparse;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Warning,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub line: u32,
    pub col: u32,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Warning => "warning",
            Severity::Error => "error",
        };
        write!(f, "{}:{}: {}: {}", self.line, self.col, sev, self.message)
    }
}

#[derive(Debug, Clone)]
pub struct SourceUnit {
    pub path: String,
    pub text: String,
    pub functions: Vec<AstTree>,
    pub diagnostics: Vec<Diagnostic>,
}

impl SourceUnit {
    pub fn function(&self, name: &str) -> Option<&AstTree> {
        self.functions.iter().find(|f| f.function_name == name)
    }

    pub fn has_errors(&self) -> bool {
        self.diagnostics.iter().any(|d| d.severity == Severity::Error)
    }
}

/// Parses every function definition in `text`. Never fails: lexical errors
/// and unparseable functions are reported through `diagnostics`.
pub fn parse_unit(path: &str, text: &str) -> SourceUnit {
    let mut unit = SourceUnit { path: path.to_string(), text: text.to_string(), functions: Vec::new(), diagnostics: Vec::new() };
    let toks = match lexer::tokenize(text) {
        Ok(t) => t,
        Err(Error::Parse { line, col, message }) => {
            unit.diagnostics.push(Diagnostic { severity: Severity::Error, line, col, message });
            return unit;
        }
        Err(e) => {
            unit.diagnostics.push(Diagnostic { severity: Severity::Error, line: 0, col: 0, message: e.to_string() });
            return unit;
        }
    };
    let mut typedefs = HashSet::new();
    for item in top_level_items(&toks) {
        match item {
            Item::Other { start, end } => {
                if toks[start].is("typedef") {
                    if let Some(name) = typedef_name(&toks[start..end]) {
                        typedefs.insert(name);
                    }
                }
            }
            Item::Function { start, end } => {
                let slice = &toks[start..end];
                let mut p = Parser::new(slice, path, &typedefs);
                match p.parse_function() {
                    Ok((root, name)) => {
                        for w in &p.warnings {
                            unit.diagnostics.push(Diagnostic {
                                severity: Severity::Warning,
                                line: w.line,
                                col: w.col,
                                message: format!("in `{name}`: {}", w.message),
                            });
                        }
                        let vars = with_global_refs(&root, std::mem::take(&mut p.vars));
                        match AstTree::from_owned(root, name.clone(), vars) {
                            Ok(tree) => unit.functions.push(tree),
                            Err(e) => unit.diagnostics.push(Diagnostic {
                                severity: Severity::Error,
                                line: slice[0].line,
                                col: slice[0].col,
                                message: format!("function `{name}` dropped: {e}"),
                            }),
                        }
                    }
                    Err(f) => unit.diagnostics.push(Diagnostic {
                        severity: Severity::Error,
                        line: f.line,
                        col: f.col,
                        message: format!("function dropped: {}", f.message),
                    }),
                }
            }
            Item::Unbalanced { start } => {
                unit.diagnostics.push(Diagnostic {
                    severity: Severity::Error,
                    line: toks[start].line,
                    col: toks[start].col,
                    message: "unbalanced brackets; rest of file skipped".into(),
                });
            }
        }
    }
    unit
}

/// Parses text holding exactly one function definition.
pub fn parse_function(text: &str) -> Result<AstTree> {
    let mut unit = parse_unit("<input>", text);
    if let Some(d) = unit.diagnostics.iter().find(|d| d.severity == Severity::Error && unit.functions.is_empty()) {
        if text.trim().is_empty() {
            return Err(Error::Arity(0));
        }
        return Err(Error::Parse { line: d.line, col: d.col, message: d.message.clone() });
    }
    match unit.functions.len() {
        1 => Ok(unit.functions.remove(0)),
        n => Err(Error::Arity(n)),
    }
}

enum Item {
    Function { start: usize, end: usize },
    Other { start: usize, end: usize },
    Unbalanced { start: usize },
}

/// Splits the token stream into top-level items.
fn top_level_items(toks: &[Token]) -> Vec<Item> {
    let mut items = Vec::new();
    let mut i = 0;
    while i < toks.len() {
        let start = i;
        let mut depth = 0i32;
        let mut found = None;
        while i < toks.len() {
            let t = &toks[i];
            if t.kind == TokenKind::Punct {
                match t.text.as_str() {
                    "(" | "[" => depth += 1,
                    ")" | "]" => depth -= 1,
                    ";" if depth == 0 => {
                        i += 1;
                        found = Some(Item::Other { start, end: i });
                        break;
                    }
                    "{" if depth == 0 => {
                        let Some(close) = matching_brace(toks, i) else {
                            found = Some(Item::Unbalanced { start });
                            i = toks.len();
                            break;
                        };
                        if is_function_header(&toks[start..i]) {
                            found = Some(Item::Function { start, end: close + 1 });
                            i = close + 1;
                            break;
                        }
                        // aggregate body or initializer: keep scanning to `;`
                        i = close + 1;
                        continue;
                    }
                    _ => {}
                }
            }
            i += 1;
        }
        match found {
            Some(item) => items.push(item),
            None => {
                if start < toks.len() {
                    items.push(Item::Other { start, end: toks.len() });
                }
                break;
            }
        }
    }
    items
}

fn matching_brace(toks: &[Token], open: usize) -> Option<usize> {
    let mut depth = 0i32;
    for (k, t) in toks.iter().enumerate().skip(open) {
        if t.kind != TokenKind::Punct {
            continue;
        }
        match t.text.as_str() {
            "{" => depth += 1,
            "}" => {
                depth -= 1;
                if depth == 0 {
                    return Some(k);
                }
            }
            _ => {}
        }
    }
    None
}

/// `... name ( params ) [__attribute__((...))]` immediately before a `{`.
fn is_function_header(header: &[Token]) -> bool {
    if header.is_empty() || header[0].is("typedef") || header.iter().any(|t| t.is("=")) {
        return false;
    }
    let mut end = header.len();
    // strip trailing attribute groups
    loop {
        if end == 0 || !header[end - 1].is(")") {
            return false;
        }
        let Some(open) = matching_open(header, end - 1) else { return false };
        if open >= 2 && header[open - 1].is("(") && open >= 2 && header[open - 2].is("__attribute__") {
            end = open - 2;
            continue;
        }
        if open >= 1 && header[open - 1].is("__attribute__") {
            end = open - 1;
            continue;
        }
        return open >= 1 && header[open - 1].kind == TokenKind::Ident;
    }
}

fn matching_open(toks: &[Token], close: usize) -> Option<usize> {
    let mut depth = 0i32;
    for k in (0..=close).rev() {
        let t = &toks[k];
        if t.is(")") {
            depth += 1;
        } else if t.is("(") {
            depth -= 1;
            if depth == 0 {
                return Some(k);
            }
        }
    }
    None
}

fn typedef_name(item: &[Token]) -> Option<String> {
    let mut depth = 0i32;
    let mut last = None;
    for (k, t) in item.iter().enumerate() {
        match t.text.as_str() {
            "{" | "(" | "[" if t.kind == TokenKind::Punct => {
                if t.is("(") && depth == 0 && item.get(k + 1).is_some_and(|n| n.is("*")) {
                    // function pointer typedef: name follows the stars
                    return item[k + 1..].iter().find(|n| n.kind == TokenKind::Ident).map(|n| n.text.clone());
                }
                depth += 1;
            }
            "}" | ")" | "]" if t.kind == TokenKind::Punct => depth -= 1,
            _ if depth == 0 && t.kind == TokenKind::Ident => last = Some(t.text.clone()),
            _ => {}
        }
    }
    last
}

/// Adds a global-ref entry for every name used as a variable without an
/// in-scope parameter or local declaration.
fn with_global_refs(root: &OwnedNode, mut vars: Vec<DeclaredVar>) -> Vec<DeclaredVar> {
    let mut uses = Vec::new();
    collect_uses(root, &mut uses);
    let mut added: HashMap<String, ()> = HashMap::new();
    for u in uses {
        let name = u.value.as_deref().unwrap_or("");
        let declared = vars.iter().any(|v| {
            v.name == name
                && (v.storage == Storage::Parameter
                    || (v.storage == Storage::Local && v.loc.start() <= u.loc.start())
                    || v.storage == Storage::GlobalRef)
        });
        if !declared && !added.contains_key(name) {
            added.insert(name.to_string(), ());
            vars.push(DeclaredVar {
                name: name.to_string(),
                declared_type: String::new(),
                loc: u.loc.clone(),
                storage: Storage::GlobalRef,
            });
        }
    }
    vars
}

fn collect_uses<'a>(n: &'a OwnedNode, out: &mut Vec<&'a OwnedNode>) {
    if n.kind == NodeKind::VariableAccess && n.role.as_deref() != Some(crate::ast::role::CALLEE) {
        out.push(n);
    }
    for c in &n.children {
        collect_uses(c, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::NodeId;

    fn kinds(t: &AstTree) -> Vec<NodeKind> {
        t.preorder().into_iter().map(|i| t.node(i).kind).collect()
    }

    #[test]
    fn minimal_function() {
        let t = parse_function("int f(void){return 1;}").unwrap();
        assert_eq!(t.function_name, "f");
        assert_eq!(kinds(&t), [NodeKind::Function, NodeKind::BlockStmt, NodeKind::ReturnStmt, NodeKind::Literal]);
        assert_eq!(t.node(NodeId(3)).value.as_deref(), Some("1"));
    }

    #[test]
    fn arity_errors() {
        assert!(matches!(parse_function("  /* nothing */ \n"), Err(Error::Arity(0))));
        assert!(matches!(parse_function("int a(void){return 0;} int b(void){return 1;}"), Err(Error::Arity(2))));
    }

    #[test]
    fn skips_non_function_items() {
        let src = "typedef unsigned long size_t;\nstruct s { int a; };\nstatic int g = 3;\nint h(int);\n\
                   static int f(size_t n) { size_t k = n; return (int)k; }\n";
        let u = parse_unit("a.c", src);
        assert_eq!(u.functions.len(), 1);
        let t = &u.functions[0];
        assert_eq!(t.declared_vars[0].storage, Storage::Parameter);
        assert_eq!(t.declared_vars[0].declared_type, "size_t");
        assert!(t.preorder().iter().any(|i| t.node(*i).kind == NodeKind::CastExpr));
    }

    #[test]
    fn precedence_and_fields() {
        let t = parse_function("int f(struct w *curwin) { int width1 = curwin->w_width - curwin_col_off() * 2; return width1; }")
            .unwrap();
        let bin = t
            .preorder()
            .into_iter()
            .find(|i| t.node(*i).kind == NodeKind::BinaryExpr)
            .unwrap();
        assert_eq!(t.node(bin).value.as_deref(), Some("-"));
        let kids: Vec<_> = t.node(bin).children.iter().map(|c| t.node(*c).kind).collect();
        assert_eq!(kids, [NodeKind::PointerFieldAccess, NodeKind::BinaryExpr]);
        let g = t.declared_vars.iter().find(|v| v.name == "width1").unwrap();
        assert_eq!(g.storage, Storage::Local);
    }

    #[test]
    fn undeclared_names_become_global_refs() {
        let t = parse_function("void f(void) { counter++; g(counter); }").unwrap();
        let v: Vec<_> = t.declared_vars.iter().map(|v| (v.name.as_str(), v.storage)).collect();
        assert_eq!(v, [("counter", Storage::GlobalRef)]);
    }

    #[test]
    fn bad_function_is_dropped_not_fatal() {
        let u = parse_unit("x.c", "int ok(void) { return 0; }\nint bad(void) { return ; ; ) }\n");
        assert_eq!(u.functions.len(), 1);
        assert!(u.has_errors());
        let u = parse_unit("y.c", "int a = 1;\n@");
        assert!(u.functions.is_empty());
        assert_eq!(u.diagnostics[0].line, 2);
    }

    #[test]
    fn empty_input_is_empty_unit() {
        let u = parse_unit("e.c", "");
        assert!(u.functions.is_empty() && u.diagnostics.is_empty());
    }

    #[test]
    fn statements() {
        let src = "int f(int n, char *p) {\n  int i;\n  for (i = 0; i < n; i++) { if (!p[i]) break; else continue; }\n\
                   while (n--) ;\n  do { n++; } while (n < 3);\n  switch (n) { case 1: return 2; default: break; }\n\
                   goto out;\nout:\n  return sizeof(int) + sizeof p;\n}\n";
        let t = parse_function(src).unwrap();
        let ks = kinds(&t);
        for k in [
            NodeKind::ForStmt,
            NodeKind::IfStmt,
            NodeKind::BreakStmt,
            NodeKind::ContinueStmt,
            NodeKind::WhileStmt,
            NodeKind::SwitchStmt,
            NodeKind::LabelStmt,
            NodeKind::GotoStmt,
            NodeKind::SizeofExpr,
            NodeKind::ArraySubscript,
        ] {
            assert!(ks.contains(&k), "{k:?} missing");
        }
    }

    #[test]
    fn child_locs_nest() {
        let src = "int f(int a) {\n  if (a > 0 && g(a, \"x\"))\n    return a ? 1 : 2;\n  return 0;\n}\n";
        let t = parse_function(src).unwrap();
        for id in t.preorder() {
            for c in &t.node(id).children {
                assert!(t.node(id).loc.contains(&t.node(*c).loc), "{id} !contains {c}");
            }
        }
    }
}
