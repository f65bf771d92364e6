mod common;

use common::corpus_dir;
use p2r_core::ast::{AstTree, NodeId, NodeKind, Storage};
use p2r_core::cfront::parser::binary_precedence;
use p2r_core::cfront::unparse::unparse;
use p2r_core::cfront::{parse_function, parse_unit};
use p2r_core::synth::{random_function, SYNTH_PRELUDE};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn child(t: &AstTree, n: NodeId, role: &str) -> NodeId {
    t.children_with_role(n, role).next().unwrap_or_else(|| panic!("{n} has no {role} child"))
}

#[test]
fn cognate_snippet_declares_width1_with_its_initializer() {
    let src = "void f(void)\n{\n    int skip_lines = 0;\n    int width1 = curwin->w_width - curwin_col_off();\n\
               int width2 = width1 + curwin_col_off2();\n    if (curwin->w_skipcol > width1)\n\
               skip_lines += (curwin->w_skipcol - width1) / width2 + 1;\n    else if (curwin->w_skipcol > 0)\n\
               skip_lines = 1;\n}\n";
    let t = parse_function(src).unwrap();
    let var = t
        .preorder()
        .into_iter()
        .find(|n| t.node(*n).kind == NodeKind::LocalVariable && t.node(*n).value_str() == "width1")
        .unwrap();
    assert_eq!(t.node(t.parent(var).unwrap()).kind, NodeKind::DeclStmt);
    let init = child(&t, var, "init");
    assert_eq!(t.node(init).kind, NodeKind::Initializer);
    let minus = t.node(init).children[0];
    assert_eq!((t.node(minus).kind, t.node(minus).value_str()), (NodeKind::BinaryExpr, "-"));
    let (l, r) = (child(&t, minus, "lhs"), child(&t, minus, "rhs"));
    assert_eq!((t.node(l).kind, t.node(l).value_str()), (NodeKind::PointerFieldAccess, "w_width"));
    assert_eq!((t.node(r).kind, t.node(r).value_str()), (NodeKind::FunctionCall, "curwin_col_off"));
}

#[test]
fn distinct_check_condition_compares_a_call_with_zero() {
    let src = "int f(Select *p, ExprList *pEList)\n{\n    if ((p->selFlags & (SF_Distinct | SF_Aggregate)) == SF_Distinct\n\
               && sqlExprListCompare(sSort.pOrderBy, pEList, -1) == 0) {\n        p->selFlags &= ~SF_Distinct;\n    }\n    return 0;\n}\n";
    let t = parse_function(src).unwrap();
    let cond = child(&t, t.preorder().into_iter().find(|n| t.node(*n).kind == NodeKind::IfStmt).unwrap(), "condition");
    let eq = t.dfs_traverse(cond).unwrap().into_iter().find(|n| {
        let node = t.node(*n);
        node.kind == NodeKind::BinaryExpr
            && node.value_str() == "=="
            && t.node(node.children[0]).value_str() == "sqlExprListCompare"
    });
    assert!(eq.is_some());
}

/// Parameter names read from the header text: the last identifier of each
/// top-level comma-separated item between the name's parentheses.
fn header_params(text: &str, t: &AstTree) -> Vec<String> {
    let line_start: usize = text.split_inclusive('\n').take(t.loc().start_line as usize - 1).map(str::len).sum();
    let rest = &text[line_start..];
    let open = rest
        .match_indices(&t.function_name)
        .map(|(i, _)| i + t.function_name.len())
        .find(|i| rest[*i..].trim_start().starts_with('('))
        .unwrap();
    let open = open + rest[open..].find('(').unwrap() + 1;
    let (mut depth, mut end) = (1, open);
    for (i, ch) in rest[open..].char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 {
            end = open + i;
            break;
        }
    }
    let mut header = rest[open..end].to_string();
    while let Some(a) = header.find("/*") {
        let b = header[a..].find("*/").map_or(header.len(), |b| a + b + 2);
        header.replace_range(a..b, " ");
    }
    let mut items = Vec::new();
    let (mut depth, mut cur) = (0, String::new());
    for ch in header.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                items.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    items.push(cur);
    items
        .iter()
        .filter_map(|item| {
            let item = item.split('[').next().unwrap();
            let item = match item.find("(*") {
                Some(i) => &item[i + 2..],
                None => item,
            };
            let words: Vec<&str> = item
                .split(|c: char| !(c.is_alphanumeric() || c == '_'))
                .filter(|w| !w.is_empty())
                .collect();
            match words.as_slice() {
                [] | ["void"] => None,
                [.., last] if !item.contains("(*") => Some(last.to_string()),
                [first, ..] => Some(first.to_string()),
            }
        })
        .collect()
}

#[test]
fn every_fixture_parameter_is_declared_with_parameter_storage() {
    let mut checked = 0;
    for entry in walkdir::WalkDir::new(corpus_dir()).into_iter().filter_map(|e| e.ok()) {
        if entry.path().extension().is_none_or(|e| e != "c") {
            continue;
        }
        let text = std::fs::read_to_string(entry.path()).unwrap();
        let unit = parse_unit("x.c", &text);
        for t in &unit.functions {
            let declared: Vec<String> = t
                .declared_vars
                .iter()
                .filter(|v| v.storage == Storage::Parameter)
                .map(|v| v.name.clone())
                .collect();
            assert_eq!(declared, header_params(&text, t), "{} in {}", t.function_name, entry.path().display());
            checked += 1;
        }
    }
    assert!(checked > 20);
}

#[test]
fn synthetic_functions_survive_unparse() {
    let mut rng = StdRng::seed_from_u64(5);
    for i in 0..200 {
        let text = format!("{SYNTH_PRELUDE}{}", random_function(&mut rng, "g", 1 + i % 20));
        let unit = parse_unit("s.c", &text);
        let t = &unit.functions[0];
        let again = parse_function(&unparse(t)).unwrap();
        assert!(t.structurally_equal(&again), "{}", unparse(t));
    }
}

#[test]
fn corpus_functions_survive_unparse() {
    for entry in walkdir::WalkDir::new(corpus_dir()).into_iter().filter_map(|e| e.ok()) {
        if entry.path().extension().is_none_or(|e| e != "c") {
            continue;
        }
        let unit = parse_unit("x.c", &std::fs::read_to_string(entry.path()).unwrap());
        for t in &unit.functions {
            let printed = unparse(t);
            let again = parse_function(&printed).unwrap_or_else(|e| panic!("{e}\n{printed}"));
            assert!(t.structurally_equal(&again), "{}\n{printed}", t.function_name);
        }
    }
}

/// Binding power per the C grammar; every level is left associative.
const C_LEVELS: &[&[&str]] = &[
    &["||"],
    &["&&"],
    &["|"],
    &["^"],
    &["&"],
    &["==", "!="],
    &["<", ">", "<=", ">="],
    &["<<", ">>"],
    &["+", "-"],
    &["*", "/", "%"],
];

fn power(op: &str) -> usize {
    C_LEVELS.iter().position(|l| l.contains(&op)).unwrap() + 1
}

#[derive(Debug, Clone)]
enum Tok {
    Atom(String),
    Op(&'static str),
    Open,
    Close,
}

struct Pratt<'a> {
    toks: &'a [Tok],
    pos: usize,
}

impl Pratt<'_> {
    fn primary(&mut self) -> String {
        let t = self.toks[self.pos].clone();
        self.pos += 1;
        match t {
            Tok::Atom(a) => a,
            Tok::Open => {
                let e = self.expr(0);
                self.pos += 1;
                e
            }
            Tok::Op(o) => format!("({o}u {})", self.primary()),
            Tok::Close => unreachable!(),
        }
    }

    fn expr(&mut self, min: usize) -> String {
        let mut lhs = self.primary();
        while let Some(Tok::Op(op)) = self.toks.get(self.pos) {
            let p = power(op);
            if p <= min {
                break;
            }
            self.pos += 1;
            let rhs = self.expr(p);
            lhs = format!("({op} {lhs} {rhs})");
        }
        lhs
    }
}

fn sexpr(t: &AstTree, n: NodeId) -> String {
    let node = t.node(n);
    match node.kind {
        NodeKind::BinaryExpr => format!("({} {} {})", node.value_str(), sexpr(t, node.children[0]), sexpr(t, node.children[1])),
        NodeKind::UnaryExpr => format!("({}u {})", node.value_str(), sexpr(t, node.children[0])),
        _ => node.value_str().to_string(),
    }
}

fn render(toks: &[Tok]) -> String {
    toks.iter()
        .map(|t| match t {
            Tok::Atom(a) => a.clone(),
            Tok::Op(o) => o.to_string(),
            Tok::Open => "(".into(),
            Tok::Close => ")".into(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn operand() -> impl Strategy<Value = Vec<Tok>> {
    let atom = prop_oneof![
        "[a-e]".prop_map(|s| vec![Tok::Atom(s)]),
        "[a-e]".prop_map(|s| vec![Tok::Op("!"), Tok::Atom(s)]),
        "[a-e]".prop_map(|s| vec![Tok::Op("-"), Tok::Atom(s)]),
    ];
    atom.prop_recursive(3, 24, 6, |inner| {
        (inner.clone(), prop::collection::vec((binary_op(), inner), 1..4)).prop_map(|(first, rest)| {
            let mut v = vec![Tok::Open];
            v.extend(first);
            for (op, e) in rest {
                v.push(Tok::Op(op));
                v.extend(e);
            }
            v.push(Tok::Close);
            v
        })
    })
}

fn binary_op() -> impl Strategy<Value = &'static str> {
    let all: Vec<&'static str> = C_LEVELS.iter().flat_map(|l| l.iter().copied()).collect();
    prop::sample::select(all)
}

#[test]
fn published_table_orders_operators_like_c() {
    let all: Vec<&str> = C_LEVELS.iter().flat_map(|l| l.iter().copied()).collect();
    for a in &all {
        for b in &all {
            let (pa, pb) = (binary_precedence(a).unwrap(), binary_precedence(b).unwrap());
            assert_eq!(pa.cmp(&pb), power(a).cmp(&power(b)), "{a} vs {b}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn binary_expressions_parse_like_a_pratt_oracle(
        first in operand(),
        rest in prop::collection::vec((binary_op(), operand()), 0..8),
    ) {
        let mut toks = first;
        for (op, e) in rest {
            toks.push(Tok::Op(op));
            toks.extend(e);
        }
        let expected = Pratt { toks: &toks, pos: 0 }.expr(0);
        let src = format!("int f(int a, int b, int c, int d, int e)\n{{\n    return {};\n}}\n", render(&toks));
        let t = parse_function(&src).unwrap();
        let ret = t.preorder().into_iter().find(|n| t.node(*n).kind == NodeKind::ReturnStmt).unwrap();
        prop_assert_eq!(sexpr(&t, t.node(ret).children[0]), expected);
    }

    #[test]
    fn generated_expressions_survive_unparse(
        first in operand(),
        rest in prop::collection::vec((binary_op(), operand()), 0..6),
    ) {
        let mut toks = first;
        for (op, e) in rest {
            toks.push(Tok::Op(op));
            toks.extend(e);
        }
        let e = render(&toks);
        let src = format!(
            "int f(int a, int b, int c, int *d, struct s *e)\n{{\n    int k = {e};\n    if ({e})\n        a = b[c] + e->f;\n    else {{\n        d[{e}] = g(a, {e});\n    }}\n    while (k > 0)\n        k--;\n    return k ? (char)a : sizeof(int);\n}}\n",
            e = e.replace(['d', 'e'], "c")
        );
        let t = parse_function(&src).unwrap();
        let again = parse_function(&unparse(&t)).unwrap();
        prop_assert!(t.structurally_equal(&again), "{}", unparse(&t));
    }
}
