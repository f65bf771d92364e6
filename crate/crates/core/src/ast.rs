//! Normalized syntax tree of a single C function.
//!
//! Trees are immutable once built. Node ids are dense and equal to the
//! node's position in a pre-order depth-first walk, so `dfs` order and id
//! order coincide for every tree produced by [`AstTree::from_owned`].

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Version tag written into every interchange document.
pub const AST_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

macro_rules! node_kinds {
    ($($name:ident),* $(,)?) => {
        /// Closed node taxonomy (format version 1).
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum NodeKind {
            $($name),*
        }

        impl NodeKind {
            pub const ALL: &'static [NodeKind] = &[$(NodeKind::$name),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(NodeKind::$name => stringify!($name)),*
                }
            }

            pub fn from_name(s: &str) -> Option<NodeKind> {
                match s {
                    $(stringify!($name) => Some(NodeKind::$name),)*
                    _ => None,
                }
            }
        }
    };
}

node_kinds! {
    Function, Parameter, LocalVariable, BlockStmt, IfStmt, SwitchStmt, ForStmt,
    WhileStmt, ReturnStmt, ExprStmt, DeclStmt, Initializer, FunctionCall,
    VariableAccess, PointerFieldAccess, DotFieldAccess, ArraySubscript, AssignExpr,
    BinaryExpr, UnaryExpr, CastExpr, Literal, StringLiteral, SizeofExpr, CommaExpr,
    ConditionalExpr, LabelStmt, GotoStmt, BreakStmt, ContinueStmt,
}

impl NodeKind {
    /// Kinds whose nodes carry a string payload.
    pub fn carries_value(self) -> bool {
        use NodeKind::*;
        matches!(
            self,
            Function
                | Parameter
                | LocalVariable
                | FunctionCall
                | VariableAccess
                | PointerFieldAccess
                | DotFieldAccess
                | AssignExpr
                | BinaryExpr
                | UnaryExpr
                | CastExpr
                | Literal
                | StringLiteral
                | SizeofExpr
                | LabelStmt
                | GotoStmt
                | WhileStmt
        )
    }

    pub fn is_statement(self) -> bool {
        use NodeKind::*;
        matches!(
            self,
            BlockStmt
                | IfStmt
                | SwitchStmt
                | ForStmt
                | WhileStmt
                | ReturnStmt
                | ExprStmt
                | DeclStmt
                | LabelStmt
                | GotoStmt
                | BreakStmt
                | ContinueStmt
        )
    }

    pub fn is_expression(self) -> bool {
        use NodeKind::*;
        matches!(
            self,
            FunctionCall
                | VariableAccess
                | PointerFieldAccess
                | DotFieldAccess
                | ArraySubscript
                | AssignExpr
                | BinaryExpr
                | UnaryExpr
                | CastExpr
                | Literal
                | StringLiteral
                | SizeofExpr
                | CommaExpr
                | ConditionalExpr
        )
    }
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Edge labels from a parent to its children.
pub mod role {
    pub const PARAM: &str = "param";
    pub const BODY: &str = "body";
    pub const STMT: &str = "stmt";
    pub const DECL: &str = "decl";
    pub const INIT: &str = "init";
    pub const EXPR: &str = "expr";
    pub const CONDITION: &str = "condition";
    pub const THEN: &str = "then";
    pub const ELSE: &str = "else";
    pub const UPDATE: &str = "update";
    pub const VALUE: &str = "value";
    pub const CALLEE: &str = "callee";
    pub const ARGUMENT: &str = "argument";
    pub const LHS: &str = "lhs";
    pub const RHS: &str = "rhs";
    pub const OPERAND: &str = "operand";
    pub const QUALIFIER: &str = "qualifier";
    pub const BASE: &str = "base";
    pub const INDEX: &str = "index";
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct Loc {
    pub file: String,
    pub start_line: u32,
    pub start_col: u32,
    pub end_line: u32,
    pub end_col: u32,
}

impl Loc {
    pub fn start(&self) -> (u32, u32) {
        (self.start_line, self.start_col)
    }

    pub fn end(&self) -> (u32, u32) {
        (self.end_line, self.end_col)
    }

    pub fn contains(&self, other: &Loc) -> bool {
        self.start() <= other.start() && other.end() <= self.end()
    }

    pub fn contains_line(&self, line: u32) -> bool {
        self.start_line <= line && line <= self.end_line
    }

    /// Smallest range covering both.
    pub fn join(&self, other: &Loc) -> Loc {
        let (start_line, start_col) = self.start().min(other.start());
        let (end_line, end_col) = self.end().max(other.end());
        Loc { file: self.file.clone(), start_line, start_col, end_line, end_col }
    }
}

impl fmt::Display for Loc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.file, self.start_line, self.start_col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AstNode {
    pub id: NodeId,
    pub kind: NodeKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    pub children: Vec<NodeId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub role: Option<String>,
    pub loc: Loc,
}

impl AstNode {
    pub fn value_str(&self) -> &str {
        self.value.as_deref().unwrap_or("")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Storage {
    Parameter,
    Local,
    GlobalRef,
}

impl fmt::Display for Storage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Storage::Parameter => "parameter",
            Storage::Local => "local",
            Storage::GlobalRef => "global-ref",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct DeclaredVar {
    pub name: String,
    pub declared_type: String,
    pub loc: Loc,
    pub storage: Storage,
}

/// Owned, nested form used while building trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OwnedNode {
    pub kind: NodeKind,
    pub value: Option<String>,
    pub role: Option<String>,
    pub loc: Loc,
    pub children: Vec<OwnedNode>,
}

impl OwnedNode {
    pub fn new(kind: NodeKind, value: Option<String>, loc: Loc) -> Self {
        OwnedNode { kind, value, role: None, loc, children: Vec::new() }
    }

    pub fn with_role(mut self, role: &str) -> Self {
        self.role = Some(role.to_string());
        self
    }

    pub fn push(&mut self, child: OwnedNode, role: &str) {
        self.children.push(child.with_role(role));
    }

    pub fn count(&self) -> usize {
        1 + self.children.iter().map(OwnedNode::count).sum::<usize>()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FingerprintMode {
    /// Kind, value and child count, recursively.
    Exact,
    /// Kind and child count, recursively.
    Shape,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint(pub u128);

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:032x}", self.0)
    }
}

/// Per-node fingerprints of every subtree in a tree.
#[derive(Debug, Clone)]
pub struct Fingerprints {
    pub exact: Vec<Fingerprint>,
    pub shape: Vec<Fingerprint>,
}

fn digest_node(node: &AstNode, mode: FingerprintMode, children: &[Fingerprint]) -> Fingerprint {
    let mut h = Sha256::new();
    h.update([match mode {
        FingerprintMode::Exact => 0xE5u8,
        FingerprintMode::Shape => 0x5Au8,
    }]);
    h.update(node.kind.name().as_bytes());
    h.update([0u8]);
    if mode == FingerprintMode::Exact {
        match &node.value {
            Some(v) => {
                h.update([1u8]);
                h.update((v.len() as u64).to_le_bytes());
                h.update(v.as_bytes());
            }
            None => h.update([0u8]),
        }
    }
    h.update((children.len() as u64).to_le_bytes());
    for c in children {
        h.update(c.0.to_le_bytes());
    }
    let out = h.finalize();
    let mut bytes = [0u8; 16];
    bytes.copy_from_slice(&out[..16]);
    Fingerprint(u128::from_le_bytes(bytes))
}

/// Syntax tree of one function definition.
#[derive(Debug, Clone)]
pub struct AstTree {
    pub root: NodeId,
    pub nodes: Vec<AstNode>,
    pub function_name: String,
    pub declared_vars: Vec<DeclaredVar>,
    parents: Vec<Option<NodeId>>,
    var_refs: Vec<Option<usize>>,
}

impl PartialEq for AstTree {
    fn eq(&self, other: &Self) -> bool {
        self.root == other.root
            && self.nodes == other.nodes
            && self.function_name == other.function_name
            && self.declared_vars == other.declared_vars
    }
}

impl AstTree {
    /// Flattens an owned tree into pre-order ids and validates the result.
    pub fn from_owned(root: OwnedNode, function_name: String, declared_vars: Vec<DeclaredVar>) -> Result<Self> {
        let mut nodes = Vec::with_capacity(root.count());
        flatten(root, &mut nodes);
        Self::from_parts(NodeId(0), nodes, function_name, declared_vars)
    }

    /// Builds a tree from already-numbered nodes, checking structural invariants.
    pub fn from_parts(
        root: NodeId,
        nodes: Vec<AstNode>,
        function_name: String,
        declared_vars: Vec<DeclaredVar>,
    ) -> Result<Self> {
        let n = nodes.len();
        if root.index() >= n {
            return Err(Error::Invalid(format!("root {root} out of range")));
        }
        if nodes[root.index()].kind != NodeKind::Function {
            return Err(Error::Invalid("root node is not a Function".into()));
        }
        let mut parents = vec![None; n];
        for (i, node) in nodes.iter().enumerate() {
            if node.id.index() != i {
                return Err(Error::Invalid(format!("node at position {i} has id {}", node.id)));
            }
            for c in &node.children {
                if c.index() >= n {
                    return Err(Error::Invalid(format!("node {} has dangling child {c}", node.id)));
                }
                if *c == root || parents[c.index()].is_some() {
                    return Err(Error::Invalid(format!("node {c} has more than one parent")));
                }
                parents[c.index()] = Some(node.id);
            }
        }
        // every node must be reachable from the root; with single parents this rules out cycles
        let mut seen = vec![false; n];
        let mut stack = vec![root];
        let mut reached = 0usize;
        while let Some(id) = stack.pop() {
            if seen[id.index()] {
                return Err(Error::Invalid(format!("cycle through {id}")));
            }
            seen[id.index()] = true;
            reached += 1;
            stack.extend(nodes[id.index()].children.iter().copied());
        }
        if reached != n {
            return Err(Error::Invalid(format!("{} nodes unreachable from root", n - reached)));
        }
        let mut tree = AstTree { root, nodes, function_name, declared_vars, parents, var_refs: Vec::new() };
        tree.var_refs = tree.resolve_all();
        Ok(tree)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: NodeId) -> &AstNode {
        &self.nodes[id.index()]
    }

    pub fn get(&self, id: NodeId) -> Result<&AstNode> {
        self.nodes.get(id.index()).ok_or(Error::UnknownNode(id.0))
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        self.parents[id.index()]
    }

    pub fn loc(&self) -> &Loc {
        &self.node(self.root).loc
    }

    /// Pre-order descendants of `from`, excluding `from` itself.
    pub fn dfs_traverse(&self, from: NodeId) -> Result<Vec<NodeId>> {
        self.get(from)?;
        let mut out = Vec::new();
        let mut stack: Vec<NodeId> = self.node(from).children.iter().rev().copied().collect();
        while let Some(id) = stack.pop() {
            out.push(id);
            stack.extend(self.node(id).children.iter().rev().copied());
        }
        Ok(out)
    }

    /// Pre-order walk of the whole tree including the root.
    pub fn preorder(&self) -> Vec<NodeId> {
        let mut out = vec![self.root];
        out.extend(self.dfs_traverse(self.root).expect("root exists"));
        out
    }

    /// Number of descendants of `id`.
    pub fn descendant_count(&self, id: NodeId) -> usize {
        self.node(id).children.iter().map(|c| 1 + self.descendant_count(*c)).sum()
    }

    pub fn is_ancestor(&self, ancestor: NodeId, mut node: NodeId) -> bool {
        while let Some(p) = self.parent(node) {
            if p == ancestor {
                return true;
            }
            node = p;
        }
        false
    }

    /// Index of `id` among its parent's children.
    pub fn child_index(&self, id: NodeId) -> Option<usize> {
        let p = self.parent(id)?;
        self.node(p).children.iter().position(|c| *c == id)
    }

    pub fn children_with_role<'a>(&'a self, id: NodeId, role: &'a str) -> impl Iterator<Item = NodeId> + 'a {
        self.node(id)
            .children
            .iter()
            .copied()
            .filter(move |c| self.node(*c).role.as_deref() == Some(role))
    }

    pub fn subtree_hash(&self, id: NodeId, mode: FingerprintMode) -> Result<Fingerprint> {
        let node = self.get(id)?;
        let children: Vec<Fingerprint> = node
            .children
            .iter()
            .map(|c| self.subtree_hash(*c, mode))
            .collect::<Result<_>>()?;
        Ok(digest_node(node, mode, &children))
    }

    /// Fingerprints for every subtree, computed bottom-up in one pass.
    pub fn fingerprints(&self) -> Fingerprints {
        let n = self.nodes.len();
        let mut exact = vec![Fingerprint(0); n];
        let mut shape = vec![Fingerprint(0); n];
        for id in self.preorder().into_iter().rev() {
            let node = self.node(id);
            let ce: Vec<_> = node.children.iter().map(|c| exact[c.index()]).collect();
            let cs: Vec<_> = node.children.iter().map(|c| shape[c.index()]).collect();
            exact[id.index()] = digest_node(node, FingerprintMode::Exact, &ce);
            shape[id.index()] = digest_node(node, FingerprintMode::Shape, &cs);
        }
        Fingerprints { exact, shape }
    }

    /// Declared variable a node refers to: the accessed variable for a
    /// `VariableAccess`, the declared one for `Parameter`/`LocalVariable`,
    /// and the initialized one for an `Initializer`.
    pub fn var_ref(&self, id: NodeId) -> Option<usize> {
        self.var_refs.get(id.index()).copied().flatten()
    }

    pub fn var(&self, index: usize) -> &DeclaredVar {
        &self.declared_vars[index]
    }

    pub fn var_index(&self, name: &str, storage: Storage) -> Option<usize> {
        self.declared_vars.iter().position(|v| v.name == name && v.storage == storage)
    }

    fn resolve_all(&self) -> Vec<Option<usize>> {
        let mut by_name: HashMap<&str, Vec<usize>> = HashMap::new();
        for (i, v) in self.declared_vars.iter().enumerate() {
            by_name.entry(v.name.as_str()).or_default().push(i);
        }
        let mut out = vec![None; self.nodes.len()];
        for id in self.preorder() {
            let node = self.node(id);
            let resolved = match node.kind {
                NodeKind::VariableAccess if node.role.as_deref() != Some(role::CALLEE) => {
                    by_name.get(node.value_str()).and_then(|cands| self.pick_var(cands, &node.loc))
                }
                NodeKind::Parameter | NodeKind::LocalVariable => {
                    let storage =
                        if node.kind == NodeKind::Parameter { Storage::Parameter } else { Storage::Local };
                    by_name.get(node.value_str()).and_then(|cands| {
                        cands
                            .iter()
                            .copied()
                            .find(|i| self.declared_vars[*i].storage == storage && self.declared_vars[*i].loc == node.loc)
                            .or_else(|| cands.iter().copied().find(|i| self.declared_vars[*i].storage == storage))
                    })
                }
                NodeKind::Initializer => self.parent(id).and_then(|p| out[p.index()]),
                _ => None,
            };
            out[id.index()] = resolved;
        }
        out
    }

    /// Latest local declared at or before the use, else a parameter, else a global reference.
    fn pick_var(&self, cands: &[usize], at: &Loc) -> Option<usize> {
        let vars = &self.declared_vars;
        cands
            .iter()
            .copied()
            .filter(|i| vars[*i].storage == Storage::Local && vars[*i].loc.start() <= at.start())
            .max_by_key(|i| vars[*i].loc.start())
            .or_else(|| cands.iter().copied().find(|i| vars[*i].storage == Storage::Parameter))
            .or_else(|| cands.iter().copied().find(|i| vars[*i].storage == Storage::GlobalRef))
            .or_else(|| cands.iter().copied().find(|i| vars[*i].storage == Storage::Local))
    }

    /// Rebuilds the owned form of the subtree at `id`.
    pub fn to_owned_node(&self, id: NodeId) -> OwnedNode {
        let n = self.node(id);
        OwnedNode {
            kind: n.kind,
            value: n.value.clone(),
            role: n.role.clone(),
            loc: n.loc.clone(),
            children: n.children.iter().map(|c| self.to_owned_node(*c)).collect(),
        }
    }

    /// Structural equality of two subtrees: kinds, values, roles and child order; locations ignored.
    pub fn subtree_eq(&self, a: NodeId, other: &AstTree, b: NodeId) -> bool {
        let x = self.node(a);
        let y = other.node(b);
        x.kind == y.kind
            && x.value == y.value
            && x.role == y.role
            && x.children.len() == y.children.len()
            && x.children.iter().zip(&y.children).all(|(c, d)| self.subtree_eq(*c, other, *d))
    }

    pub fn structurally_equal(&self, other: &AstTree) -> bool {
        self.subtree_eq(self.root, other, other.root)
    }

    /// Interchange document for this tree.
    pub fn to_document(&self) -> String {
        let doc = TreeDocument {
            ast_format: AST_FORMAT_VERSION,
            function_name: self.function_name.clone(),
            root: self.root,
            nodes: self.nodes.clone(),
            declared_vars: self.declared_vars.clone(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("tree serializes");
        s.push('\n');
        s
    }

    pub fn from_document(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line() as u32,
            col: e.column() as u32,
            message: e.to_string(),
        })?;
        match value.get("ast-format").and_then(|v| v.as_u64()) {
            Some(v) if v == AST_FORMAT_VERSION as u64 => {}
            Some(v) => return Err(Error::Version(format!("unsupported ast-format {v}"))),
            None => return Err(Error::Version("missing ast-format header".into())),
        }
        if let Some(nodes) = value.get("nodes").and_then(|n| n.as_array()) {
            for n in nodes {
                if let Some(k) = n.get("kind").and_then(|k| k.as_str()) {
                    if NodeKind::from_name(k).is_none() {
                        return Err(Error::Version(format!("unknown node kind `{k}`")));
                    }
                }
            }
        }
        let doc: TreeDocument = serde_json::from_value(value)
            .map_err(|e| Error::Parse { line: 0, col: 0, message: e.to_string() })?;
        AstTree::from_parts(doc.root, doc.nodes, doc.function_name, doc.declared_vars)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
struct TreeDocument {
    ast_format: u32,
    function_name: String,
    root: NodeId,
    nodes: Vec<AstNode>,
    declared_vars: Vec<DeclaredVar>,
}

fn flatten(node: OwnedNode, out: &mut Vec<AstNode>) -> NodeId {
    let id = NodeId(out.len() as u32);
    out.push(AstNode {
        id,
        kind: node.kind,
        value: node.value,
        children: Vec::new(),
        role: node.role,
        loc: node.loc,
    });
    let children: Vec<NodeId> = node.children.into_iter().map(|c| flatten(c, out)).collect();
    out[id.index()].children = children;
    id
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(kind: NodeKind, value: &str) -> OwnedNode {
        OwnedNode::new(kind, Some(value.to_string()), Loc::default())
    }

    fn func(body: Vec<OwnedNode>) -> AstTree {
        let mut root = leaf(NodeKind::Function, "f");
        let mut block = OwnedNode::new(NodeKind::BlockStmt, None, Loc::default());
        for s in body {
            block.push(s, role::STMT);
        }
        root.push(block, role::BODY);
        AstTree::from_owned(root, "f".into(), vec![]).unwrap()
    }

    fn ret(lit: &str) -> OwnedNode {
        let mut r = OwnedNode::new(NodeKind::ReturnStmt, None, Loc::default());
        r.push(leaf(NodeKind::Literal, lit), role::VALUE);
        r
    }

    fn bin(op: &str, l: &str, r: &str) -> OwnedNode {
        let mut b = leaf(NodeKind::BinaryExpr, op);
        b.push(leaf(NodeKind::VariableAccess, l), role::LHS);
        b.push(leaf(NodeKind::VariableAccess, r), role::RHS);
        b
    }

    #[test]
    fn leaf_has_no_descendants() {
        let t = func(vec![ret("1")]);
        let lit = NodeId(t.len() as u32 - 1);
        assert!(t.dfs_traverse(lit).unwrap().is_empty());
        assert!(matches!(t.dfs_traverse(NodeId(99)), Err(Error::UnknownNode(99))));
    }

    #[test]
    fn return_statements_share_exact_fingerprint() {
        let t = func(vec![ret("1"), ret("1"), ret("0")]);
        let body = t.node(t.root).children[0];
        let s = &t.node(body).children;
        let fp = |i: usize| t.subtree_hash(s[i], FingerprintMode::Exact).unwrap();
        assert_eq!(fp(0), fp(1));
        assert_ne!(fp(0), fp(2));
    }

    #[test]
    fn shape_ignores_names() {
        let t = func(vec![bin("+", "a", "b"), bin("+", "c", "d")]);
        let body = t.node(t.root).children[0];
        let s = t.node(body).children.clone();
        let h = |i: usize, m| t.subtree_hash(s[i], m).unwrap();
        assert_eq!(h(0, FingerprintMode::Shape), h(1, FingerprintMode::Shape));
        assert_ne!(h(0, FingerprintMode::Exact), h(1, FingerprintMode::Exact));
        let all = t.fingerprints();
        assert_eq!(all.exact[s[0].index()], h(0, FingerprintMode::Exact));
    }

    #[test]
    fn rejects_shared_children_and_bad_root() {
        let t = func(vec![ret("1")]);
        let mut nodes = t.nodes.clone();
        nodes[1].children.push(NodeId(3));
        assert!(AstTree::from_parts(NodeId(0), nodes, "f".into(), vec![]).is_err());
        let r = AstTree::from_parts(NodeId(1), t.nodes.clone(), "f".into(), vec![]);
        assert!(r.is_err());
    }

    #[test]
    fn document_errors() {
        assert!(matches!(AstTree::from_document("{ nope"), Err(Error::Parse { .. })));
        let t = func(vec![ret("1")]);
        let doc = t.to_document().replace("\"ReturnStmt\"", "\"GotoLabelThing\"");
        assert!(matches!(AstTree::from_document(&doc), Err(Error::Version(_))));
        let doc = t.to_document().replace("\"ast-format\": 1", "\"ast-format\": 7");
        assert!(matches!(AstTree::from_document(&doc), Err(Error::Version(_))));
    }
}
