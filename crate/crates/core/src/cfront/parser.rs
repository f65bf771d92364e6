//! Recursive-descent parser for the supported C subset.
//!
//! Binary operators use precedence climbing over this table (higher binds
//! tighter; all left-associative):
//!
//! | level | operators            |
//! |-------|----------------------|
//! | 10    | `*` `/` `%`          |
//! | 9     | `+` `-`              |
//! | 8     | `<<` `>>`            |
//! | 7     | `<` `>` `<=` `>=`    |
//! | 6     | `==` `!=`            |
//! | 5     | `&`                  |
//! | 4     | `^`                  |
//! | 3     | `\|`                 |
//! | 2     | `&&`                 |
//! | 1     | `\|\|`               |
//!
//! Below them sit `?:` and the right-associative assignments, then the
//! comma operator. Unary prefix operators, casts and `sizeof` bind tighter
//! than any binary operator; postfix `()`, `[]`, `.`, `->`, `++`, `--`
//! bind tightest.

use std::collections::HashSet;

use super::lexer::{Token, TokenKind};
use crate::ast::{role, DeclaredVar, Loc, NodeKind, OwnedNode, Storage};

pub const BINARY_PRECEDENCE: &[(&str, u8)] = &[
    ("*", 10),
    ("/", 10),
    ("%", 10),
    ("+", 9),
    ("-", 9),
    ("<<", 8),
    (">>", 8),
    ("<", 7),
    (">", 7),
    ("<=", 7),
    (">=", 7),
    ("==", 6),
    ("!=", 6),
    ("&", 5),
    ("^", 4),
    ("|", 3),
    ("&&", 2),
    ("||", 1),
];

const ASSIGN_OPS: &[&str] = &["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>="];

const TYPE_KEYWORDS: &[&str] = &[
    "int", "char", "short", "long", "signed", "unsigned", "float", "double", "void", "_Bool", "struct",
    "union", "enum",
];

const QUALIFIERS: &[&str] = &[
    "const", "volatile", "static", "extern", "register", "typedef", "inline", "auto", "restrict",
    "__inline", "__inline__", "__restrict", "__extension__",
];

const STORAGE_ONLY: &[&str] = &["static", "extern", "register", "typedef", "inline", "auto", "__inline", "__inline__", "__extension__"];

pub fn binary_precedence(op: &str) -> Option<u8> {
    BINARY_PRECEDENCE.iter().find(|(o, _)| *o == op).map(|(_, p)| *p)
}

#[derive(Debug, Clone)]
pub struct ParseFailure {
    pub line: u32,
    pub col: u32,
    pub message: String,
}

type PResult<T> = Result<T, ParseFailure>;

pub(crate) struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
    file: &'a str,
    typedefs: &'a HashSet<String>,
    pub vars: Vec<DeclaredVar>,
    pub warnings: Vec<ParseFailure>,
}

impl<'a> Parser<'a> {
    pub fn new(toks: &'a [Token], file: &'a str, typedefs: &'a HashSet<String>) -> Self {
        Parser { toks, pos: 0, file, typedefs, vars: Vec::new(), warnings: Vec::new() }
    }

    fn peek(&self) -> Option<&'a Token> {
        self.toks.get(self.pos)
    }

    fn peek_at(&self, off: usize) -> Option<&'a Token> {
        self.toks.get(self.pos + off)
    }

    fn at(&self, text: &str) -> bool {
        self.peek().is_some_and(|t| t.is(text))
    }

    fn at_off(&self, off: usize, text: &str) -> bool {
        self.peek_at(off).is_some_and(|t| t.is(text))
    }

    fn fail<T>(&self, message: impl Into<String>) -> PResult<T> {
        let (line, col) = match self.peek().or(self.toks.last()) {
            Some(t) => (t.line, t.col),
            None => (0, 0),
        };
        Err(ParseFailure { line, col, message: message.into() })
    }

    fn next(&mut self) -> PResult<&'a Token> {
        match self.toks.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t)
            }
            None => self.fail("unexpected end of input"),
        }
    }

    fn expect(&mut self, text: &str) -> PResult<&'a Token> {
        if self.at(text) {
            self.next()
        } else {
            let found = self.peek().map(|t| t.text.clone()).unwrap_or_else(|| "end of input".into());
            self.fail(format!("expected `{text}`, found `{found}`"))
        }
    }

    fn eat(&mut self, text: &str) -> bool {
        if self.at(text) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn loc_from(&self, start: usize) -> Loc {
        let a = &self.toks[start.min(self.toks.len() - 1)];
        let b = &self.toks[self.pos.saturating_sub(1).max(start).min(self.toks.len() - 1)];
        Loc { file: self.file.to_string(), start_line: a.line, start_col: a.col, end_line: b.end_line, end_col: b.end_col }
    }

    fn node(&self, kind: NodeKind, value: Option<String>, start: usize) -> OwnedNode {
        OwnedNode::new(kind, value, self.loc_from(start))
    }

    /// Skips `__attribute__((...))` groups.
    fn skip_attributes(&mut self) -> PResult<()> {
        while self.at("__attribute__") {
            self.pos += 1;
            if self.at("(") {
                self.skip_balanced()?;
            }
        }
        Ok(())
    }

    /// Skips a balanced bracket group starting at the current token.
    fn skip_balanced(&mut self) -> PResult<()> {
        let mut depth = 0i32;
        loop {
            let t = self.next()?;
            match t.text.as_str() {
                "(" | "[" | "{" if t.kind == TokenKind::Punct => depth += 1,
                ")" | "]" | "}" if t.kind == TokenKind::Punct => depth -= 1,
                _ => {}
            }
            if depth == 0 {
                return Ok(());
            }
        }
    }

    fn is_type_name(&self, t: &Token) -> bool {
        t.kind == TokenKind::Ident
            && (self.typedefs.contains(&t.text) || t.text.ends_with("_t") || t.text.ends_with("_T"))
    }

    fn starts_declaration(&self) -> bool {
        let Some(t) = self.peek() else { return false };
        if t.kind == TokenKind::Keyword {
            return TYPE_KEYWORDS.contains(&t.text.as_str())
                || QUALIFIERS.contains(&t.text.as_str())
                || t.text == "__attribute__";
        }
        if t.kind != TokenKind::Ident {
            return false;
        }
        let Some(n) = self.peek_at(1) else { return false };
        if n.kind == TokenKind::Ident {
            return true;
        }
        if n.is("*") {
            let mut k = 1;
            while self.at_off(k, "*") || self.at_off(k, "const") {
                k += 1;
            }
            if let Some(id) = self.peek_at(k) {
                if id.kind == TokenKind::Ident {
                    let after = self.peek_at(k + 1);
                    return after.is_none_or(|a| a.is(";") || a.is("=") || a.is(",") || a.is("[") || a.is(")"))
                        || self.is_type_name(t);
                }
            }
        }
        false
    }

    /// Declaration specifiers; returns the normalized base type.
    fn parse_specifiers(&mut self) -> PResult<String> {
        let mut parts: Vec<String> = Vec::new();
        let mut have_base = false;
        loop {
            self.skip_attributes()?;
            let Some(t) = self.peek() else { break };
            let text = t.text.as_str();
            if t.kind == TokenKind::Keyword && QUALIFIERS.contains(&text) {
                if !STORAGE_ONLY.contains(&text) && text != "restrict" && text != "__restrict" {
                    parts.push(text.to_string());
                }
                self.pos += 1;
            } else if t.kind == TokenKind::Keyword && matches!(text, "struct" | "union" | "enum") {
                self.pos += 1;
                let mut spelled = text.to_string();
                self.skip_attributes()?;
                if let Some(n) = self.peek() {
                    if n.kind == TokenKind::Ident {
                        spelled.push(' ');
                        spelled.push_str(&n.text);
                        self.pos += 1;
                    }
                }
                if self.at("{") {
                    self.skip_balanced()?;
                }
                parts.push(spelled);
                have_base = true;
            } else if (t.kind == TokenKind::Keyword && TYPE_KEYWORDS.contains(&text)) || (t.kind == TokenKind::Ident && !have_base) {
                parts.push(text.to_string());
                have_base = true;
                self.pos += 1;
            } else {
                break;
            }
        }
        if parts.is_empty() {
            return self.fail("expected declaration specifiers");
        }
        Ok(parts.join(" "))
    }

    /// Declarator after the specifiers: returns (name token index, type).
    fn parse_declarator(&mut self, base: &str) -> PResult<(Option<usize>, String)> {
        let mut stars = 0;
        loop {
            if self.eat("*") {
                stars += 1;
            } else if self.at("const") || self.at("volatile") || self.at("restrict") || self.at("__restrict") {
                self.pos += 1;
            } else if self.at("__attribute__") {
                self.skip_attributes()?;
            } else {
                break;
            }
        }
        let mut name = None;
        let mut fnptr = false;
        if self.at("(") && (self.at_off(1, "*") || self.at_off(1, "^")) {
            // function pointer or pointer-to-array declarator
            self.pos += 1;
            while self.eat("*") || self.eat("const") {}
            if let Some(t) = self.peek() {
                if t.kind == TokenKind::Ident {
                    name = Some(self.pos);
                    self.pos += 1;
                }
            }
            while self.at("[") {
                self.skip_balanced()?;
            }
            self.expect(")")?;
            fnptr = true;
        } else if let Some(t) = self.peek() {
            if t.kind == TokenKind::Ident {
                name = Some(self.pos);
                self.pos += 1;
            }
        }
        let mut arrays = 0;
        loop {
            if self.at("[") {
                self.skip_balanced()?;
                arrays += 1;
            } else if self.at("(") {
                self.skip_balanced()?;
                fnptr = true;
            } else {
                break;
            }
        }
        self.skip_attributes()?;
        let mut ty = base.to_string();
        if stars > 0 {
            ty.push(' ');
            ty.push_str(&"*".repeat(stars));
        }
        if fnptr {
            ty.push_str(" (*)()");
        }
        for _ in 0..arrays {
            ty.push_str(if ty.ends_with(']') { "[]" } else { " []" });
        }
        Ok((name, ty))
    }

    /// Parses a full function definition spanning all tokens.
    pub fn parse_function(&mut self) -> PResult<(OwnedNode, String)> {
        let start = self.pos;
        let base = self.parse_specifiers()?;
        let mut stars = 0;
        while self.eat("*") || self.eat("const") {
            stars += 1;
        }
        let _ = (base, stars);
        let name_tok = self.next()?;
        if name_tok.kind != TokenKind::Ident {
            return self.fail("expected function name");
        }
        let name = name_tok.text.clone();
        self.expect("(")?;
        let mut params = Vec::new();
        if self.at("void") && self.at_off(1, ")") {
            self.pos += 1;
        }
        while !self.at(")") {
            if self.eat("...") {
                continue;
            }
            let pstart = self.pos;
            let pbase = self.parse_specifiers()?;
            let (pname, pty) = self.parse_declarator(&pbase)?;
            let value = pname.map(|i| self.toks[i].text.clone()).unwrap_or_default();
            let node = self.node(NodeKind::Parameter, Some(value.clone()), pstart);
            if pname.is_some() {
                self.vars.push(DeclaredVar {
                    name: value,
                    declared_type: pty,
                    loc: node.loc.clone(),
                    storage: Storage::Parameter,
                });
            }
            params.push(node);
            if !self.eat(",") {
                break;
            }
        }
        self.expect(")")?;
        self.skip_attributes()?;
        if !self.at("{") {
            return self.fail("expected function body");
        }
        let body = self.parse_block()?;
        let mut f = self.node(NodeKind::Function, Some(name.clone()), start);
        for p in params {
            f.push(p, role::PARAM);
        }
        f.push(body, role::BODY);
        if self.pos != self.toks.len() {
            return self.fail("trailing tokens after function body");
        }
        Ok((f, name))
    }

    fn parse_block(&mut self) -> PResult<OwnedNode> {
        let start = self.pos;
        self.expect("{")?;
        let mut stmts = Vec::new();
        while !self.at("}") {
            if self.peek().is_none() {
                return self.fail("unterminated block");
            }
            let sstart = self.pos;
            let vars_before = self.vars.len();
            match self.parse_statement() {
                Ok(s) => stmts.push(s),
                Err(e) => {
                    self.pos = sstart;
                    self.vars.truncate(vars_before);
                    stmts.push(self.degrade_statement(e)?);
                }
            }
        }
        self.expect("}")?;
        let mut b = self.node(NodeKind::BlockStmt, None, start);
        for s in stmts {
            b.push(s, role::STMT);
        }
        Ok(b)
    }

    /// Unmodeled statement: consume through the next `;` at depth 0 and keep its spelling.
    fn degrade_statement(&mut self, cause: ParseFailure) -> PResult<OwnedNode> {
        let start = self.pos;
        let mut depth = 0i32;
        loop {
            let Some(t) = self.peek() else { return Err(cause) };
            if t.kind == TokenKind::Punct {
                match t.text.as_str() {
                    "(" | "[" | "{" => depth += 1,
                    ")" | "]" => depth -= 1,
                    "}" => {
                        if depth == 0 {
                            break;
                        }
                        depth -= 1;
                        if depth == 0 && !self.at_off(1, ";") && !self.at_off(1, ",") {
                            self.pos += 1;
                            break;
                        }
                    }
                    ";" if depth == 0 => {
                        self.pos += 1;
                        break;
                    }
                    _ => {}
                }
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(cause);
        }
        let spelling = self.toks[start..self.pos].iter().map(|t| t.text.as_str()).collect::<Vec<_>>().join(" ");
        self.warnings.push(ParseFailure {
            line: cause.line,
            col: cause.col,
            message: format!("unmodeled statement kept as text: {}", cause.message),
        });
        Ok(self.node(NodeKind::ExprStmt, Some(spelling), start))
    }

    fn parse_paren_expr(&mut self) -> PResult<OwnedNode> {
        self.expect("(")?;
        let e = self.parse_expr()?;
        self.expect(")")?;
        Ok(e)
    }

    fn parse_statement(&mut self) -> PResult<OwnedNode> {
        let start = self.pos;
        let Some(t) = self.peek() else { return self.fail("expected statement") };
        if t.kind == TokenKind::Punct {
            if t.is("{") {
                return self.parse_block();
            }
            if t.is(";") {
                self.pos += 1;
                return Ok(self.node(NodeKind::ExprStmt, None, start));
            }
        }
        if t.kind == TokenKind::Keyword {
            match t.text.as_str() {
                "if" => {
                    self.pos += 1;
                    let cond = self.parse_paren_expr()?;
                    let then = self.parse_statement()?;
                    let els = if self.eat("else") { Some(self.parse_statement()?) } else { None };
                    let mut n = self.node(NodeKind::IfStmt, None, start);
                    n.push(cond, role::CONDITION);
                    n.push(then, role::THEN);
                    if let Some(e) = els {
                        n.push(e, role::ELSE);
                    }
                    return Ok(n);
                }
                "switch" => {
                    self.pos += 1;
                    let cond = self.parse_paren_expr()?;
                    let body = self.parse_statement()?;
                    let mut n = self.node(NodeKind::SwitchStmt, None, start);
                    n.push(cond, role::CONDITION);
                    n.push(body, role::BODY);
                    return Ok(n);
                }
                "while" => {
                    self.pos += 1;
                    let cond = self.parse_paren_expr()?;
                    let body = self.parse_statement()?;
                    let mut n = self.node(NodeKind::WhileStmt, Some("while".into()), start);
                    n.push(cond, role::CONDITION);
                    n.push(body, role::BODY);
                    return Ok(n);
                }
                "do" => {
                    self.pos += 1;
                    let body = self.parse_statement()?;
                    self.expect("while")?;
                    let cond = self.parse_paren_expr()?;
                    self.expect(";")?;
                    let mut n = self.node(NodeKind::WhileStmt, Some("do".into()), start);
                    n.push(body, role::BODY);
                    n.push(cond, role::CONDITION);
                    return Ok(n);
                }
                "for" => {
                    self.pos += 1;
                    self.expect("(")?;
                    let mut n_children = Vec::new();
                    if !self.eat(";") {
                        if self.starts_declaration() {
                            n_children.push((self.parse_declaration()?, role::INIT));
                        } else {
                            n_children.push((self.parse_expr()?, role::INIT));
                            self.expect(";")?;
                        }
                    }
                    if !self.eat(";") {
                        n_children.push((self.parse_expr()?, role::CONDITION));
                        self.expect(";")?;
                    }
                    if !self.at(")") {
                        n_children.push((self.parse_expr()?, role::UPDATE));
                    }
                    self.expect(")")?;
                    let body = self.parse_statement()?;
                    let mut n = self.node(NodeKind::ForStmt, None, start);
                    for (c, r) in n_children {
                        n.push(c, r);
                    }
                    n.push(body, role::BODY);
                    return Ok(n);
                }
                "return" => {
                    self.pos += 1;
                    let value = if self.at(";") { None } else { Some(self.parse_expr()?) };
                    self.expect(";")?;
                    let mut n = self.node(NodeKind::ReturnStmt, None, start);
                    if let Some(v) = value {
                        n.push(v, role::VALUE);
                    }
                    return Ok(n);
                }
                "break" | "continue" => {
                    let kind = if t.text == "break" { NodeKind::BreakStmt } else { NodeKind::ContinueStmt };
                    self.pos += 1;
                    self.expect(";")?;
                    return Ok(self.node(kind, None, start));
                }
                "goto" => {
                    self.pos += 1;
                    let label = self.next()?.text.clone();
                    self.expect(";")?;
                    return Ok(self.node(NodeKind::GotoStmt, Some(label), start));
                }
                "case" => {
                    self.pos += 1;
                    let estart = self.pos;
                    let _ = self.parse_conditional()?;
                    let spelled =
                        self.toks[estart..self.pos].iter().map(|t| t.text.as_str()).collect::<Vec<_>>().join(" ");
                    self.expect(":")?;
                    return self.labeled(format!("case {spelled}"), start);
                }
                "default" => {
                    self.pos += 1;
                    self.expect(":")?;
                    return self.labeled("default".into(), start);
                }
                _ => {}
            }
        }
        if t.kind == TokenKind::Ident && self.at_off(1, ":") {
            let label = t.text.clone();
            self.pos += 2;
            return self.labeled(label, start);
        }
        if self.starts_declaration() {
            return self.parse_declaration();
        }
        let e = self.parse_expr()?;
        self.expect(";")?;
        let mut n = self.node(NodeKind::ExprStmt, None, start);
        n.push(e, role::EXPR);
        Ok(n)
    }

    fn labeled(&mut self, label: String, start: usize) -> PResult<OwnedNode> {
        let inner = if self.at("}") { None } else { Some(self.parse_statement()?) };
        let mut n = self.node(NodeKind::LabelStmt, Some(label), start);
        if let Some(s) = inner {
            n.push(s, role::STMT);
        }
        Ok(n)
    }

    /// `specifiers declarator [= init] {, declarator [= init]} ;`
    fn parse_declaration(&mut self) -> PResult<OwnedNode> {
        let start = self.pos;
        let base = self.parse_specifiers()?;
        let mut decls = Vec::new();
        if !self.at(";") {
            loop {
                let dstart = self.pos;
                let (name, ty) = self.parse_declarator(&base)?;
                let Some(name_idx) = name else { return self.fail("expected declarator name") };
                let var_name = self.toks[name_idx].text.clone();
                let var_at = self.vars.len();
                self.vars.push(DeclaredVar {
                    name: var_name.clone(),
                    declared_type: ty,
                    loc: Loc::default(),
                    storage: Storage::Local,
                });
                let init = if self.eat("=") { Some(self.parse_initializer()?) } else { None };
                let mut v = self.node(NodeKind::LocalVariable, Some(var_name), dstart);
                if let Some(i) = init {
                    v.push(i, role::INIT);
                }
                self.vars[var_at].loc = v.loc.clone();
                decls.push(v);
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect(";")?;
        let mut n = self.node(NodeKind::DeclStmt, None, start);
        for d in decls {
            n.push(d, role::DECL);
        }
        Ok(n)
    }

    fn parse_initializer(&mut self) -> PResult<OwnedNode> {
        let start = self.pos;
        let mut n;
        if self.at("{") {
            self.pos += 1;
            let mut items = Vec::new();
            while !self.at("}") {
                if self.at(".") || self.at("[") {
                    // designators: keep the value only
                    while !self.at("=") {
                        if self.at("[") {
                            self.skip_balanced()?;
                        } else {
                            self.next()?;
                        }
                    }
                    self.expect("=")?;
                }
                items.push(self.parse_initializer()?);
                if !self.eat(",") {
                    break;
                }
            }
            self.expect("}")?;
            n = self.node(NodeKind::Initializer, None, start);
            for i in items {
                n.push(i, role::EXPR);
            }
        } else {
            let e = self.parse_assign()?;
            n = self.node(NodeKind::Initializer, None, start);
            n.push(e, role::EXPR);
        }
        Ok(n)
    }

    pub fn parse_expr(&mut self) -> PResult<OwnedNode> {
        let start = self.pos;
        let first = self.parse_assign()?;
        if !self.at(",") {
            return Ok(first);
        }
        let mut items = vec![first];
        while self.eat(",") {
            items.push(self.parse_assign()?);
        }
        let mut n = self.node(NodeKind::CommaExpr, None, start);
        for i in items {
            n.push(i, role::OPERAND);
        }
        Ok(n)
    }

    fn parse_assign(&mut self) -> PResult<OwnedNode> {
        let start = self.pos;
        let lhs = self.parse_conditional()?;
        if let Some(t) = self.peek() {
            if t.kind == TokenKind::Punct && ASSIGN_OPS.contains(&t.text.as_str()) {
                let op = t.text.clone();
                self.pos += 1;
                let rhs = self.parse_assign()?;
                let mut n = self.node(NodeKind::AssignExpr, Some(op), start);
                n.push(lhs, role::LHS);
                n.push(rhs, role::RHS);
                return Ok(n);
            }
        }
        Ok(lhs)
    }

    fn parse_conditional(&mut self) -> PResult<OwnedNode> {
        let start = self.pos;
        let cond = self.parse_binary(1)?;
        if !self.eat("?") {
            return Ok(cond);
        }
        let then = self.parse_expr()?;
        self.expect(":")?;
        let els = self.parse_conditional()?;
        let mut n = self.node(NodeKind::ConditionalExpr, None, start);
        n.push(cond, role::CONDITION);
        n.push(then, role::THEN);
        n.push(els, role::ELSE);
        Ok(n)
    }

    fn parse_binary(&mut self, min_prec: u8) -> PResult<OwnedNode> {
        let start = self.pos;
        let mut lhs = self.parse_unary()?;
        while let Some(t) = self.peek() {
            if t.kind != TokenKind::Punct {
                break;
            }
            let Some(prec) = binary_precedence(&t.text) else { break };
            if prec < min_prec {
                break;
            }
            let op = t.text.clone();
            self.pos += 1;
            let rhs = self.parse_binary(prec + 1)?;
            let mut n = self.node(NodeKind::BinaryExpr, Some(op), start);
            n.push(lhs, role::LHS);
            n.push(rhs, role::RHS);
            lhs = n;
        }
        Ok(lhs)
    }

    /// True when the `(` at the current position opens a type name.
    fn at_type_in_parens(&self) -> bool {
        if !self.at("(") {
            return false;
        }
        let Some(t) = self.peek_at(1) else { return false };
        if t.kind == TokenKind::Keyword {
            return TYPE_KEYWORDS.contains(&t.text.as_str()) || matches!(t.text.as_str(), "const" | "volatile");
        }
        if t.kind != TokenKind::Ident {
            return false;
        }
        if self.is_type_name(t) {
            return true;
        }
        // `(name *)` / `(name **)`
        let mut k = 2;
        while self.at_off(k, "*") {
            k += 1;
        }
        if k > 2 && self.at_off(k, ")") {
            return true;
        }
        // `(name) operand`
        if self.at_off(2, ")") {
            if let Some(after) = self.peek_at(3) {
                return matches!(after.kind, TokenKind::Ident | TokenKind::Number | TokenKind::Str | TokenKind::Char);
            }
        }
        false
    }

    fn parse_type_name(&mut self) -> PResult<String> {
        let base = self.parse_specifiers()?;
        let (_, ty) = self.parse_declarator(&base)?;
        Ok(ty)
    }

    fn parse_unary(&mut self) -> PResult<OwnedNode> {
        let start = self.pos;
        let Some(t) = self.peek() else { return self.fail("expected expression") };
        if t.kind == TokenKind::Punct {
            let op = match t.text.as_str() {
                "!" | "~" | "-" | "+" | "*" | "&" | "++" | "--" => Some(t.text.clone()),
                _ => None,
            };
            if let Some(op) = op {
                self.pos += 1;
                let operand = self.parse_unary()?;
                let mut n = self.node(NodeKind::UnaryExpr, Some(op), start);
                n.push(operand, role::OPERAND);
                return Ok(n);
            }
            if self.at_type_in_parens() {
                self.pos += 1;
                let ty = self.parse_type_name()?;
                self.expect(")")?;
                if self.at("{") {
                    // compound literal
                    let init = self.parse_initializer()?;
                    let mut n = self.node(NodeKind::CastExpr, Some(ty), start);
                    n.push(init, role::OPERAND);
                    return self.parse_postfix_ops(n, start);
                }
                let operand = self.parse_unary()?;
                let mut n = self.node(NodeKind::CastExpr, Some(ty), start);
                n.push(operand, role::OPERAND);
                return Ok(n);
            }
        }
        if t.is("sizeof") {
            self.pos += 1;
            if self.at_type_in_parens() {
                self.pos += 1;
                let ty = self.parse_type_name()?;
                self.expect(")")?;
                return Ok(self.node(NodeKind::SizeofExpr, Some(ty), start));
            }
            let operand = self.parse_unary()?;
            let mut n = self.node(NodeKind::SizeofExpr, Some("expr".into()), start);
            n.push(operand, role::OPERAND);
            return Ok(n);
        }
        self.parse_postfix()
    }

    fn parse_postfix(&mut self) -> PResult<OwnedNode> {
        let start = self.pos;
        let primary = self.parse_primary()?;
        self.parse_postfix_ops(primary, start)
    }

    fn parse_postfix_ops(&mut self, mut e: OwnedNode, start: usize) -> PResult<OwnedNode> {
        loop {
            if self.at("(") {
                self.pos += 1;
                let mut args = Vec::new();
                while !self.at(")") {
                    args.push(self.parse_assign()?);
                    if !self.eat(",") {
                        break;
                    }
                }
                self.expect(")")?;
                let direct = e.kind == NodeKind::VariableAccess;
                let value = if direct { e.value.clone() } else { Some("*".into()) };
                let mut n = self.node(NodeKind::FunctionCall, value, start);
                n.push(e, role::CALLEE);
                for a in args {
                    n.push(a, role::ARGUMENT);
                }
                e = n;
            } else if self.at("[") {
                self.pos += 1;
                let idx = self.parse_expr()?;
                self.expect("]")?;
                let mut n = self.node(NodeKind::ArraySubscript, None, start);
                n.push(e, role::BASE);
                n.push(idx, role::INDEX);
                e = n;
            } else if self.at(".") || self.at("->") {
                let kind = if self.at(".") { NodeKind::DotFieldAccess } else { NodeKind::PointerFieldAccess };
                self.pos += 1;
                let field = self.next()?;
                if field.kind != TokenKind::Ident {
                    return self.fail("expected field name");
                }
                let mut n = self.node(kind, Some(field.text.clone()), start);
                n.push(e, role::QUALIFIER);
                e = n;
            } else if self.at("++") || self.at("--") {
                let op = format!("post{}", self.next()?.text);
                let mut n = self.node(NodeKind::UnaryExpr, Some(op), start);
                n.push(e, role::OPERAND);
                e = n;
            } else {
                return Ok(e);
            }
        }
    }

    fn parse_primary(&mut self) -> PResult<OwnedNode> {
        let start = self.pos;
        let t = self.next()?;
        match t.kind {
            TokenKind::Ident => {
                if matches!(t.text.as_str(), "NULL" | "true" | "false") {
                    Ok(self.node(NodeKind::Literal, Some(t.text.clone()), start))
                } else {
                    Ok(self.node(NodeKind::VariableAccess, Some(t.text.clone()), start))
                }
            }
            TokenKind::Number | TokenKind::Char => Ok(self.node(NodeKind::Literal, Some(t.text.clone()), start)),
            TokenKind::Str => {
                let mut spelled = t.text.clone();
                while let Some(n) = self.peek() {
                    if n.kind != TokenKind::Str {
                        break;
                    }
                    spelled.push(' ');
                    spelled.push_str(&n.text);
                    self.pos += 1;
                }
                Ok(self.node(NodeKind::StringLiteral, Some(spelled), start))
            }
            TokenKind::Punct if t.is("(") => {
                let e = self.parse_expr()?;
                self.expect(")")?;
                Ok(e)
            }
            _ => {
                self.pos -= 1;
                self.fail(format!("unexpected `{}` in expression", t.text))
            }
        }
    }
}
