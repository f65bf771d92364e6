//! Pretty-printer from trees back to C text. Expressions are fully
//! parenthesized, so re-parsing the output yields the same tree shape.

use std::fmt::Write;

use crate::ast::{role, AstTree, NodeId, NodeKind};

pub fn unparse(tree: &AstTree) -> String {
    let mut p = Printer { tree, out: String::new() };
    p.function();
    p.out
}

struct Printer<'a> {
    tree: &'a AstTree,
    out: String,
}

/// Splits a declared type into (base, declarator prefix, declarator suffix).
fn split_type(ty: &str) -> (String, String, String) {
    let mut base = ty.trim().to_string();
    let mut suffix = String::new();
    while let Some(b) = base.strip_suffix("[]") {
        suffix.push_str("[]");
        base = b.trim_end().to_string();
    }
    let mut prefix = String::new();
    if let Some(b) = base.strip_suffix("(*)()") {
        return (b.trim_end().to_string(), "(*".into(), format!("){suffix}()"));
    }
    while let Some(b) = base.strip_suffix('*') {
        prefix.push('*');
        base = b.trim_end().to_string();
    }
    if base.is_empty() {
        base = "int".into();
    }
    (base, prefix, suffix)
}

impl Printer<'_> {
    fn n(&self, id: NodeId) -> &crate::ast::AstNode {
        self.tree.node(id)
    }

    fn kids(&self, id: NodeId, r: &str) -> Vec<NodeId> {
        self.tree.children_with_role(id, r).collect()
    }

    fn var_type(&self, id: NodeId) -> String {
        self.tree.var_ref(id).map(|v| self.tree.var(v).declared_type.clone()).unwrap_or_else(|| "int".into())
    }

    fn function(&mut self) {
        let root = self.tree.root;
        let params: Vec<String> = self
            .kids(root, role::PARAM)
            .into_iter()
            .map(|p| {
                let (base, pre, suf) = split_type(&self.var_type(p));
                format!("{base} {pre}{}{suf}", self.n(p).value_str())
            })
            .collect();
        let params = if params.is_empty() { "void".to_string() } else { params.join(", ") };
        let name = self.n(root).value_str().to_string();
        let _ = writeln!(self.out, "int {name}({params})");
        if let Some(body) = self.kids(root, role::BODY).first().copied() {
            self.stmt(body, 0);
        }
    }

    fn indent(&mut self, depth: usize) {
        for _ in 0..depth {
            self.out.push_str("    ");
        }
    }

    fn stmt(&mut self, id: NodeId, depth: usize) {
        let node = self.n(id).clone();
        self.indent(depth);
        match node.kind {
            NodeKind::BlockStmt => {
                self.out.push_str("{\n");
                for c in &node.children {
                    self.stmt(*c, depth + 1);
                }
                self.indent(depth);
                self.out.push_str("}\n");
            }
            NodeKind::ExprStmt => {
                if let Some(v) = &node.value {
                    self.out.push_str(v);
                } else if let Some(c) = node.children.first() {
                    let e = self.expr(*c);
                    self.out.push_str(&e);
                    self.out.push(';');
                } else {
                    self.out.push(';');
                }
                self.out.push('\n');
            }
            NodeKind::DeclStmt => {
                let d = self.decl(id);
                self.out.push_str(&d);
                self.out.push('\n');
            }
            NodeKind::ReturnStmt => {
                match node.children.first() {
                    Some(c) => {
                        let e = self.expr(*c);
                        let _ = write!(self.out, "return {e};");
                    }
                    None => self.out.push_str("return;"),
                }
                self.out.push('\n');
            }
            NodeKind::BreakStmt => self.out.push_str("break;\n"),
            NodeKind::ContinueStmt => self.out.push_str("continue;\n"),
            NodeKind::GotoStmt => {
                let _ = writeln!(self.out, "goto {};", node.value_str());
            }
            NodeKind::LabelStmt => {
                let label = node.value_str();
                let _ = writeln!(self.out, "{label}:");
                if let Some(c) = node.children.first() {
                    self.stmt(*c, depth + 1);
                }
            }
            NodeKind::IfStmt => {
                let cond = self.expr(self.kids(id, role::CONDITION)[0]);
                let _ = writeln!(self.out, "if ({cond})");
                self.stmt(self.kids(id, role::THEN)[0], depth + 1);
                if let Some(e) = self.kids(id, role::ELSE).first().copied() {
                    self.indent(depth);
                    self.out.push_str("else\n");
                    self.stmt(e, depth + 1);
                }
            }
            NodeKind::SwitchStmt => {
                let cond = self.expr(self.kids(id, role::CONDITION)[0]);
                let _ = writeln!(self.out, "switch ({cond})");
                self.stmt(self.kids(id, role::BODY)[0], depth + 1);
            }
            NodeKind::WhileStmt => {
                let cond = self.expr(self.kids(id, role::CONDITION)[0]);
                let body = self.kids(id, role::BODY)[0];
                if node.value.as_deref() == Some("do") {
                    self.out.push_str("do\n");
                    self.stmt(body, depth + 1);
                    self.indent(depth);
                    let _ = writeln!(self.out, "while ({cond});");
                } else {
                    let _ = writeln!(self.out, "while ({cond})");
                    self.stmt(body, depth + 1);
                }
            }
            NodeKind::ForStmt => {
                let init = match self.kids(id, role::INIT).first().copied() {
                    Some(i) if self.n(i).kind == NodeKind::DeclStmt => self.decl(i),
                    Some(i) => format!("{};", self.expr(i)),
                    None => ";".into(),
                };
                let cond = self.kids(id, role::CONDITION).first().map(|c| self.expr(*c)).unwrap_or_default();
                let upd = self.kids(id, role::UPDATE).first().map(|c| self.expr(*c)).unwrap_or_default();
                let _ = writeln!(self.out, "for ({init} {cond}; {upd})");
                self.stmt(self.kids(id, role::BODY)[0], depth + 1);
            }
            _ => {
                // expression used in statement position
                let e = self.expr(id);
                let _ = writeln!(self.out, "{e};");
            }
        }
    }

    fn decl(&self, id: NodeId) -> String {
        let vars = self.n(id).children.clone();
        let mut base_ty = None;
        let mut parts = Vec::new();
        for v in vars {
            let (base, pre, suf) = split_type(&self.var_type(v));
            base_ty.get_or_insert(base);
            let mut s = format!("{pre}{}{suf}", self.n(v).value_str());
            if let Some(init) = self.n(v).children.first() {
                s.push_str(" = ");
                s.push_str(&self.init(*init));
            }
            parts.push(s);
        }
        format!("{} {};", base_ty.unwrap_or_else(|| "int".into()), parts.join(", "))
    }

    fn init(&self, id: NodeId) -> String {
        let node = self.n(id);
        let braced = node.children.is_empty() || node.children.iter().all(|c| self.n(*c).kind == NodeKind::Initializer);
        if braced {
            let items: Vec<String> = node.children.iter().map(|c| self.init(*c)).collect();
            format!("{{{}}}", items.join(", "))
        } else {
            self.expr(node.children[0])
        }
    }

    fn expr(&self, id: NodeId) -> String {
        let node = self.n(id);
        let v = node.value_str();
        let c = &node.children;
        match node.kind {
            NodeKind::VariableAccess | NodeKind::Literal | NodeKind::StringLiteral => v.to_string(),
            NodeKind::BinaryExpr | NodeKind::AssignExpr => {
                format!("({}) {v} ({})", self.expr(c[0]), self.expr(c[1]))
            }
            NodeKind::UnaryExpr => match v.strip_prefix("post") {
                Some(op) => format!("({}){op}", self.expr(c[0])),
                None => format!("{v}({})", self.expr(c[0])),
            },
            NodeKind::CastExpr => {
                let inner = &c[0];
                if self.n(*inner).kind == NodeKind::Initializer {
                    format!("({v}){}", self.init(*inner))
                } else {
                    format!("({v})({})", self.expr(*inner))
                }
            }
            NodeKind::SizeofExpr => match c.first() {
                Some(o) => format!("sizeof ({})", self.expr(*o)),
                None => format!("sizeof({v})"),
            },
            NodeKind::FunctionCall => {
                let args: Vec<String> =
                    self.tree.children_with_role(id, role::ARGUMENT).map(|a| self.expr(a)).collect();
                let callee = c[0];
                let head = if self.n(callee).kind == NodeKind::VariableAccess {
                    self.n(callee).value_str().to_string()
                } else {
                    format!("({})", self.expr(callee))
                };
                format!("{head}({})", args.join(", "))
            }
            NodeKind::PointerFieldAccess => format!("({})->{v}", self.expr(c[0])),
            NodeKind::DotFieldAccess => format!("({}).{v}", self.expr(c[0])),
            NodeKind::ArraySubscript => format!("({})[{}]", self.expr(c[0]), self.expr(c[1])),
            NodeKind::ConditionalExpr => {
                format!("({}) ? ({}) : ({})", self.expr(c[0]), self.expr(c[1]), self.expr(c[2]))
            }
            NodeKind::CommaExpr => {
                let items: Vec<String> = c.iter().map(|x| self.expr(*x)).collect();
                format!("({})", items.join(", "))
            }
            NodeKind::Initializer => self.init(id),
            _ => v.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfront::parse_function;

    #[test]
    fn round_trip_is_structural_identity() {
        let src = "int f(char *p, int n) {\n  int a[4] = {1, 2}, *q = &a[0];\n  if (!p || n <= 0) return -1;\n\
                   for (int i = 0; i < n; i++) { a[i % 4] += p[i] * 2 - 1; }\n  q->x = sizeof(int) + (char)n;\n\
                   do { n--; } while (n > 0 ? 1 : 0);\n  return g(p, n), a[1];\n}\n";
        let t = parse_function(src).unwrap();
        let again = parse_function(&unparse(&t)).unwrap();
        assert!(t.structurally_equal(&again), "{}", unparse(&t));
    }

    #[test]
    fn split_types() {
        assert_eq!(split_type("char *"), ("char".into(), "*".into(), "".into()));
        assert_eq!(split_type("int []"), ("int".into(), "".into(), "[]".into()));
        assert_eq!(split_type("int (*)()"), ("int".into(), "(*".into(), ")()".into()));
    }
}
