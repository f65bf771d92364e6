//! Multi-stage tree matching and edit-script derivation between two
//! versions of a function.
//!
//! Matching runs six stages. Stages 1 to 3 pair whole subtrees
//! positionally; stages 4 to 6 pair single nodes:
//!
//! 1. node `=`, parent `=`, all descendants `=`
//! 2. node `=`, all descendants `=`
//! 3. node `≃`, all descendants `≃`
//! 4. node `=`, parent `≃`
//! 5. node `=`
//! 6. node `≃`
//!
//! `=` compares kind, value and child count; `≃` compares kind and child
//! count. Parents are compared as whole subtrees. Subtree stages apply only
//! to nodes with at least one descendant. Among qualifying candidates the
//! one under the partner of the node's parent wins, then the one with the
//! most similar subtree, then the one whose enclosing control statement is
//! most similar; remaining ties go to the first candidate in pre-order.
//! A stage 6 candidate needs a consistent parent or a similar subtree.
//!
//! Blocks whose statement counts differ are never `≃`, so after stage 3
//! and again after stage 6 a recovery pass pairs unmatched children of
//! matched parents that share kind and role. Such pairs record the first
//! stage that applies to them, or [`RECOVERY_LEVEL`].

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ast::{AstTree, Fingerprints, Loc, NodeId, NodeKind, OwnedNode};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchSet {
    pre_to_post: Vec<Option<NodeId>>,
    post_to_pre: Vec<Option<NodeId>>,
    level: Vec<u8>,
    seed: Vec<bool>,
}

impl MatchSet {
    fn new(pre_len: usize, post_len: usize) -> Self {
        MatchSet {
            pre_to_post: vec![None; pre_len],
            post_to_pre: vec![None; post_len],
            level: vec![0; pre_len],
            seed: vec![false; pre_len],
        }
    }

    fn insert(&mut self, a: NodeId, b: NodeId, level: u8, seed: bool) {
        self.pre_to_post[a.index()] = Some(b);
        self.post_to_pre[b.index()] = Some(a);
        self.level[a.index()] = level;
        self.seed[a.index()] = seed;
    }

    pub fn post_of(&self, pre: NodeId) -> Option<NodeId> {
        self.pre_to_post.get(pre.index()).copied().flatten()
    }

    pub fn pre_of(&self, post: NodeId) -> Option<NodeId> {
        self.post_to_pre.get(post.index()).copied().flatten()
    }

    /// Stage that produced the pair containing `pre`.
    pub fn level(&self, pre: NodeId) -> Option<u8> {
        self.post_of(pre).map(|_| self.level[pre.index()])
    }

    /// True when the pair was chosen directly rather than inherited from an ancestor's subtree pairing.
    pub fn is_seed(&self, pre: NodeId) -> bool {
        self.post_of(pre).is_some() && self.seed[pre.index()]
    }

    /// (pre, post, level) triples ordered by pre id.
    pub fn pairs(&self) -> Vec<(NodeId, NodeId, u8)> {
        self.pre_to_post
            .iter()
            .enumerate()
            .filter_map(|(i, b)| b.map(|b| (NodeId(i as u32), b, self.level[i])))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.pre_to_post.iter().filter(|p| p.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

struct Ctx<'a> {
    pre: &'a AstTree,
    post: &'a AstTree,
    fa: Fingerprints,
    fb: Fingerprints,
}

impl Ctx<'_> {
    fn node_eq(&self, a: NodeId, b: NodeId) -> bool {
        let (x, y) = (self.pre.node(a), self.post.node(b));
        x.kind == y.kind && x.value == y.value && x.children.len() == y.children.len()
    }

    fn node_sim(&self, a: NodeId, b: NodeId) -> bool {
        let (x, y) = (self.pre.node(a), self.post.node(b));
        x.kind == y.kind && x.children.len() == y.children.len()
    }

    fn parent_rel(&self, a: NodeId, b: NodeId, exact: bool) -> bool {
        match (self.pre.parent(a), self.post.parent(b)) {
            (None, None) => true,
            (Some(p), Some(q)) => {
                if exact {
                    self.fa.exact[p.index()] == self.fb.exact[q.index()]
                } else {
                    self.fa.shape[p.index()] == self.fb.shape[q.index()]
                }
            }
            _ => false,
        }
    }

    fn match_unit(&self, a: NodeId, b: NodeId) -> Option<u8> {
        let eq = self.node_eq(a, b);
        let sim = self.node_sim(a, b);
        let inner = !self.pre.node(a).children.is_empty() && !self.post.node(b).children.is_empty();
        let des_eq = inner && self.fa.exact[a.index()] == self.fb.exact[b.index()];
        let des_sim = inner && self.fa.shape[a.index()] == self.fb.shape[b.index()];
        if eq && des_eq && self.parent_rel(a, b, true) {
            Some(1)
        } else if eq && des_eq {
            Some(2)
        } else if sim && des_sim {
            Some(3)
        } else if eq && self.parent_rel(a, b, false) {
            Some(4)
        } else if eq {
            Some(5)
        } else if sim {
            Some(6)
        } else {
            None
        }
    }
}

/// Stage of a pair under the six-level grading; `None` when not even `≃`.
pub fn match_unit(pre: &AstTree, post: &AstTree, a: NodeId, b: NodeId) -> Option<u8> {
    let ctx = Ctx { pre, post, fa: pre.fingerprints(), fb: post.fingerprints() };
    ctx.match_unit(a, b)
}

type Bag = HashMap<(NodeKind, Option<String>), usize>;

/// Nearest enclosing control statement, or the root.
fn context_anchor(t: &AstTree, id: NodeId) -> NodeId {
    let mut cur = id;
    while let Some(p) = t.parent(cur) {
        if matches!(
            t.node(p).kind,
            NodeKind::IfStmt | NodeKind::ForStmt | NodeKind::WhileStmt | NodeKind::SwitchStmt
        ) {
            return p;
        }
        cur = p;
    }
    t.root
}

fn bag_of(t: &AstTree, id: NodeId) -> Bag {
    let mut bag = Bag::new();
    *bag.entry((t.node(id).kind, t.node(id).value.clone())).or_default() += 1;
    for d in t.dfs_traverse(id).expect("node exists") {
        let n = t.node(d);
        *bag.entry((n.kind, n.value.clone())).or_default() += 1;
    }
    bag
}

fn dice(a: &Bag, b: &Bag) -> f64 {
    let total: usize = a.values().sum::<usize>() + b.values().sum::<usize>();
    if total == 0 {
        return 0.0;
    }
    let common: usize = a.iter().map(|(k, n)| (*n).min(b.get(k).copied().unwrap_or(0))).sum();
    2.0 * common as f64 / total as f64
}

struct BagCache<'a> {
    tree: &'a AstTree,
    bags: HashMap<NodeId, Bag>,
}

impl<'a> BagCache<'a> {
    fn new(tree: &'a AstTree) -> Self {
        BagCache { tree, bags: HashMap::new() }
    }

    fn subtree(&mut self, id: NodeId) -> &Bag {
        let tree = self.tree;
        self.bags.entry(id).or_insert_with(|| bag_of(tree, id))
    }

    fn context(&mut self, id: NodeId) -> &Bag {
        self.subtree(context_anchor(self.tree, id))
    }
}

struct Scorer<'a> {
    pre: BagCache<'a>,
    post: BagCache<'a>,
}

impl Scorer<'_> {
    /// Preference of `b` as partner for `a`: parent consistency, then
    /// subtree similarity, then similarity of the enclosing control statement.
    fn score(&mut self, m: &MatchSet, a: NodeId, b: NodeId) -> (bool, f64, f64) {
        let (pre, post) = (self.pre.tree, self.post.tree);
        let consistent = match (pre.parent(a), post.parent(b)) {
            (Some(p), Some(q)) => m.post_of(p) == Some(q),
            _ => false,
        };
        let own = dice(self.pre.subtree(a), self.post.subtree(b));
        let ctx = dice(self.pre.context(a), self.post.context(b));
        (consistent, own, ctx)
    }
}

fn better(score: (bool, f64, f64), best: Option<(bool, f64, f64)>) -> bool {
    match best {
        None => true,
        Some(b) => score.partial_cmp(&b) == Some(std::cmp::Ordering::Greater),
    }
}

#[derive(Hash, PartialEq, Eq)]
enum Key {
    Fp(u128),
    Node(NodeKind, Option<String>, usize),
    Shape(NodeKind, usize),
}

/// Level recorded for pairs made by the recovery pass when no stage applies.
pub const RECOVERY_LEVEL: u8 = 7;

const RECOVERY_MIN_SIMILARITY: f64 = 0.5;

/// Pairs nodes of `pre` and `post` in six stages, with a recovery pass
/// after stage 3 and after stage 6.
pub fn match_trees(pre: &AstTree, post: &AstTree) -> MatchSet {
    let ctx = Ctx { pre, post, fa: pre.fingerprints(), fb: post.fingerprints() };
    let mut m = MatchSet::new(pre.len(), post.len());
    let pre_order = pre.preorder();
    let post_order = post.preorder();
    let mut scorer = Scorer { pre: BagCache::new(pre), post: BagCache::new(post) };
    for stage in 1..=6u8 {
        let key_a = |id: NodeId| -> Key {
            let n = pre.node(id);
            match stage {
                1 | 2 => Key::Fp(ctx.fa.exact[id.index()].0),
                3 => Key::Fp(ctx.fa.shape[id.index()].0),
                4 | 5 => Key::Node(n.kind, n.value.clone(), n.children.len()),
                _ => Key::Shape(n.kind, n.children.len()),
            }
        };
        let key_b = |id: NodeId| -> Key {
            let n = post.node(id);
            match stage {
                1 | 2 => Key::Fp(ctx.fb.exact[id.index()].0),
                3 => Key::Fp(ctx.fb.shape[id.index()].0),
                4 | 5 => Key::Node(n.kind, n.value.clone(), n.children.len()),
                _ => Key::Shape(n.kind, n.children.len()),
            }
        };
        let mut buckets: HashMap<Key, Vec<NodeId>> = HashMap::new();
        for &b in &post_order {
            if m.pre_of(b).is_none() {
                buckets.entry(key_b(b)).or_default().push(b);
            }
        }
        for &a in &pre_order {
            if m.post_of(a).is_some() {
                continue;
            }
            if stage <= 3 && pre.node(a).children.is_empty() {
                continue;
            }
            let Some(cands) = buckets.get(&key_a(a)) else { continue };
            let mut best: Option<(NodeId, (bool, f64, f64))> = None;
            for &b in cands {
                if m.pre_of(b).is_some() || ctx.match_unit(a, b) != Some(stage) {
                    continue;
                }
                if stage <= 3 && !subtrees_pairable(pre, post, &m, a, b) {
                    continue;
                }
                let score = scorer.score(&m, a, b);
                if stage == 6 && !score.0 && score.1 < RECOVERY_MIN_SIMILARITY {
                    continue;
                }
                if better(score, best.map(|(_, s)| s)) {
                    best = Some((b, score));
                }
            }
            let Some((b, _)) = best else { continue };
            m.insert(a, b, stage, true);
            if stage <= 3 {
                let da = pre.dfs_traverse(a).expect("node exists");
                let db = post.dfs_traverse(b).expect("node exists");
                for (x, y) in da.into_iter().zip(db) {
                    if m.post_of(x).is_none() {
                        m.insert(x, y, stage, false);
                    }
                }
            }
        }
        if stage == 3 || stage == 6 {
            recover(&ctx, &mut scorer, &mut m, &pre_order);
        }
    }
    m
}

/// Pairs unmatched children of matched parents by kind and role. Roots of
/// the same kind count as children of a common virtual parent.
fn recover(ctx: &Ctx, scorer: &mut Scorer, m: &mut MatchSet, pre_order: &[NodeId]) {
    let (pre, post) = (ctx.pre, ctx.post);
    for &a in pre_order {
        if m.post_of(a).is_some() {
            continue;
        }
        let na = pre.node(a);
        let cands: Vec<NodeId> = match pre.parent(a) {
            None => vec![post.root],
            Some(p) => match m.post_of(p) {
                Some(q) => post.node(q).children.clone(),
                None => continue,
            },
        };
        let is_container = pre.parent(a).is_none() || na.kind == NodeKind::BlockStmt;
        let index_a = pre.child_index(a).unwrap_or(0) as f64;
        let mut best: Option<(NodeId, (bool, f64, f64))> = None;
        for b in cands {
            let nb = post.node(b);
            if m.pre_of(b).is_some() || nb.kind != na.kind || nb.role != na.role {
                continue;
            }
            let own = dice(scorer.pre.subtree(a), scorer.post.subtree(b));
            if !is_container && own < RECOVERY_MIN_SIMILARITY {
                continue;
            }
            let near = -(index_a - post.child_index(b).unwrap_or(0) as f64).abs();
            let score = (nb.value == na.value, own, near);
            if better(score, best.map(|(_, s)| s)) {
                best = Some((b, score));
            }
        }
        if let Some((b, _)) = best {
            let level = ctx.match_unit(a, b).unwrap_or(RECOVERY_LEVEL);
            m.insert(a, b, level, true);
        }
    }
}

/// Descendants on both sides must be unpaired, or already paired with each other positionally.
fn subtrees_pairable(
    pre: &AstTree,
    post: &AstTree,
    m: &MatchSet,
    a: NodeId,
    b: NodeId,
) -> bool {
    let da = pre.dfs_traverse(a).expect("node exists");
    let db = post.dfs_traverse(b).expect("node exists");
    da.len() == db.len()
        && da.iter().zip(&db).all(|(x, y)| match (m.post_of(*x), m.pre_of(*y)) {
            (None, None) => true,
            (Some(p), Some(q)) => p == *y && q == *x,
            _ => false,
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EditKind {
    Insert,
    Delete,
    Update,
    MoveReparent,
    MoveReorder,
}

impl fmt::Display for EditKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EditKind::Insert => "insert",
            EditKind::Delete => "delete",
            EditKind::Update => "update",
            EditKind::MoveReparent => "move-reparent",
            EditKind::MoveReorder => "move-reorder",
        })
    }
}

/// Placement target: an original node, or a node created by an earlier insert.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParentRef {
    Pre(NodeId),
    Inserted(NodeId),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EditOp {
    pub op: EditKind,
    pub pre_node: Option<NodeId>,
    pub post_node: Option<NodeId>,
    pub new_parent: Option<ParentRef>,
    pub new_index: Option<usize>,
    pub new_value: Option<String>,
    /// Kind of the node the op acts on.
    pub kind: NodeKind,
    /// Edge label at the new position (inserts and moves).
    pub role: Option<String>,
}

#[derive(Debug, Clone)]
pub struct EditScript {
    pub ops: Vec<EditOp>,
    pub pre: AstTree,
    pub post: AstTree,
    pub matches: MatchSet,
}

impl EditScript {
    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// One op per line: op, kind, value, pre and post locations.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for op in &self.ops {
            let pre = op.pre_node.map(|n| self.pre.node(n));
            let post = op.post_node.map(|n| self.post.node(n));
            let value = match op.op {
                EditKind::Update => format!(
                    "{:?} -> {:?}",
                    pre.map(|n| n.value_str()).unwrap_or(""),
                    op.new_value.as_deref().unwrap_or("")
                ),
                EditKind::Insert => format!("{:?}", post.map(|n| n.value_str()).unwrap_or("")),
                _ => format!("{:?}", pre.map(|n| n.value_str()).unwrap_or("")),
            };
            let loc = |l: Option<&Loc>| l.map(|l| format!("{}:{}", l.start_line, l.start_col)).unwrap_or_else(|| "-".into());
            let role = op.role.as_deref().map(|r| format!(" role={r}")).unwrap_or_default();
            let place = match (op.new_parent, op.new_index) {
                (Some(ParentRef::Pre(p)), Some(i)) => format!(" parent=pre{p}@{i}"),
                (Some(ParentRef::Inserted(p)), Some(i)) => format!(" parent=post{p}@{i}"),
                (None, Some(i)) => format!(" root@{i}"),
                _ => String::new(),
            };
            out.push_str(&format!(
                "{}\t{}\t{}\tpre={}\tpost={}{}{}\n",
                op.op,
                op.kind,
                value,
                loc(pre.map(|n| &n.loc)),
                loc(post.map(|n| &n.loc)),
                place,
                role
            ));
        }
        out
    }
}

/// Working copy used by derivation and application.
struct Work {
    nodes: Vec<WNode>,
    root: usize,
}

#[derive(Clone)]
struct WNode {
    kind: NodeKind,
    value: Option<String>,
    role: Option<String>,
    loc: Loc,
    children: Vec<usize>,
    parent: Option<usize>,
    alive: bool,
}

impl Work {
    fn from_tree(t: &AstTree) -> Self {
        let nodes = t
            .nodes
            .iter()
            .map(|n| WNode {
                kind: n.kind,
                value: n.value.clone(),
                role: n.role.clone(),
                loc: n.loc.clone(),
                children: n.children.iter().map(|c| c.index()).collect(),
                parent: t.parent(n.id).map(|p| p.index()),
                alive: true,
            })
            .collect();
        Work { nodes, root: t.root.index() }
    }

    fn detach(&mut self, w: usize) {
        if let Some(p) = self.nodes[w].parent.take() {
            self.nodes[p].children.retain(|c| *c != w);
        }
    }

    fn attach(&mut self, w: usize, parent: usize, index: usize) {
        let idx = index.min(self.nodes[parent].children.len());
        self.nodes[parent].children.insert(idx, w);
        self.nodes[w].parent = Some(parent);
    }

    fn is_ancestor(&self, anc: usize, mut node: usize) -> bool {
        while let Some(p) = self.nodes[node].parent {
            if p == anc {
                return true;
            }
            node = p;
        }
        false
    }

    fn to_owned(&self, w: usize) -> OwnedNode {
        let n = &self.nodes[w];
        OwnedNode {
            kind: n.kind,
            value: n.value.clone(),
            role: n.role.clone(),
            loc: n.loc.clone(),
            children: n.children.iter().map(|c| self.to_owned(*c)).collect(),
        }
    }
}

/// Derives insert/delete/update/move operations turning `pre` into `post`.
pub fn derive_editscript(pre: &AstTree, post: &AstTree, matches: &MatchSet) -> EditScript {
    let mut w = Work::from_tree(pre);
    let mut ops = Vec::new();
    // post id -> working index
    let mut partner: Vec<Option<usize>> = vec![None; post.len()];
    // working index -> placement ref
    let mut wref: HashMap<usize, ParentRef> = HashMap::new();
    for i in 0..pre.len() {
        wref.insert(i, ParentRef::Pre(NodeId(i as u32)));
    }
    for (a, b, _) in matches.pairs() {
        partner[b.index()] = Some(a.index());
    }
    let mut placed: HashSet<usize> = HashSet::new();
    for x in post.preorder() {
        let xn = post.node(x);
        let z = post.parent(x).and_then(|y| partner[y.index()]);
        match partner[x.index()] {
            None => {
                let id = w.nodes.len();
                w.nodes.push(WNode {
                    kind: xn.kind,
                    value: xn.value.clone(),
                    role: xn.role.clone(),
                    loc: xn.loc.clone(),
                    children: Vec::new(),
                    parent: None,
                    alive: true,
                });
                let index = match z {
                    Some(z) => {
                        let i = find_pos(&w, post, &partner, x, z);
                        w.attach(id, z, i);
                        Some(i)
                    }
                    None => {
                        w.root = id;
                        None
                    }
                };
                placed.insert(id);
                partner[x.index()] = Some(id);
                wref.insert(id, ParentRef::Inserted(x));
                ops.push(EditOp {
                    op: EditKind::Insert,
                    pre_node: None,
                    post_node: Some(x),
                    new_parent: z.map(|z| wref[&z]),
                    new_index: index.or(Some(0)),
                    new_value: xn.value.clone(),
                    kind: xn.kind,
                    role: xn.role.clone(),
                });
            }
            Some(v) => {
                let a = NodeId(v as u32);
                if w.nodes[v].value != xn.value {
                    w.nodes[v].value = xn.value.clone();
                    ops.push(EditOp {
                        op: EditKind::Update,
                        pre_node: Some(a),
                        post_node: Some(x),
                        new_parent: None,
                        new_index: None,
                        new_value: xn.value.clone(),
                        kind: xn.kind,
                        role: None,
                    });
                }
                placed.insert(v);
                let Some(z) = z else {
                    if w.root != v {
                        w.detach(v);
                        w.root = v;
                        ops.push(EditOp {
                            op: EditKind::MoveReparent,
                            pre_node: Some(a),
                            post_node: Some(x),
                            new_parent: None,
                            new_index: Some(0),
                            new_value: None,
                            kind: xn.kind,
                            role: xn.role.clone(),
                        });
                    }
                    continue;
                };
                let cur_parent = w.nodes[v].parent;
                let kind = if cur_parent != Some(z) {
                    Some(EditKind::MoveReparent)
                } else if !in_position(&w, post, &partner, &placed, x, v) || w.nodes[v].role != xn.role {
                    Some(EditKind::MoveReorder)
                } else {
                    None
                };
                if let Some(kind) = kind {
                    if w.root == v {
                        // the old root is re-attached below a new root
                        w.root = usize::MAX;
                    }
                    w.detach(v);
                    let i = find_pos(&w, post, &partner, x, z);
                    w.attach(v, z, i);
                    w.nodes[v].role = xn.role.clone();
                    ops.push(EditOp {
                        op: kind,
                        pre_node: Some(a),
                        post_node: Some(x),
                        new_parent: Some(wref[&z]),
                        new_index: Some(i),
                        new_value: None,
                        kind: xn.kind,
                        role: xn.role.clone(),
                    });
                }
            }
        }
    }
    // remaining unmatched original nodes, children before parents
    let mut order = Vec::new();
    fn post_order(t: &AstTree, id: NodeId, out: &mut Vec<NodeId>) {
        for c in &t.node(id).children {
            post_order(t, *c, out);
        }
        out.push(id);
    }
    post_order(pre, pre.root, &mut order);
    for a in order {
        if matches.post_of(a).is_none() {
            ops.push(EditOp {
                op: EditKind::Delete,
                pre_node: Some(a),
                post_node: None,
                new_parent: None,
                new_index: None,
                new_value: None,
                kind: pre.node(a).kind,
                role: None,
            });
        }
    }
    EditScript { ops, pre: pre.clone(), post: post.clone(), matches: matches.clone() }
}

/// Partner of the post sibling immediately left of `x`, if any.
fn left_partner(post: &AstTree, partner: &[Option<usize>], x: NodeId) -> Option<usize> {
    let y = post.parent(x)?;
    let i = post.child_index(x)?;
    if i == 0 {
        return None;
    }
    partner[post.node(y).children[i - 1].index()]
}

/// Slot in `z` right after the partner of the left sibling of `x`.
fn find_pos(w: &Work, post: &AstTree, partner: &[Option<usize>], x: NodeId, z: usize) -> usize {
    match left_partner(post, partner, x) {
        Some(l) => w.nodes[z].children.iter().position(|c| *c == l).map_or(0, |i| i + 1),
        None => 0,
    }
}

/// True when the nearest already placed sibling left of `v` is the partner of the left sibling of `x`.
fn in_position(
    w: &Work,
    post: &AstTree,
    partner: &[Option<usize>],
    placed: &HashSet<usize>,
    x: NodeId,
    v: usize,
) -> bool {
    let Some(p) = w.nodes[v].parent else { return false };
    let kids = &w.nodes[p].children;
    let at = kids.iter().position(|c| *c == v).expect("child of its parent");
    let nearest = kids[..at].iter().rev().copied().find(|c| placed.contains(c));
    nearest == left_partner(post, partner, x)
}

/// Matches and derives in one step.
pub fn diff_trees(pre: &AstTree, post: &AstTree) -> EditScript {
    let m = match_trees(pre, post);
    derive_editscript(pre, post, &m)
}

/// Applies `ops` to `pre` in order.
pub fn apply_editscript(pre: &AstTree, ops: &[EditOp]) -> Result<AstTree> {
    let mut w = Work::from_tree(pre);
    let mut inserted: HashMap<NodeId, usize> = HashMap::new();
    for (index, op) in ops.iter().enumerate() {
        let err = |message: String| Error::EditOp { index, message };
        let resolve_pre = |w: &Work, id: Option<NodeId>| -> Result<usize> {
            let id = id.ok_or_else(|| err("missing pre-node".into()))?;
            match w.nodes.get(id.index()) {
                Some(n) if id.index() < pre.len() && n.alive => Ok(id.index()),
                _ => Err(err(format!("pre-node {id} does not exist"))),
            }
        };
        let resolve_parent = |w: &Work, p: Option<ParentRef>| -> Result<Option<usize>> {
            match p {
                None => Ok(None),
                Some(ParentRef::Pre(id)) => match w.nodes.get(id.index()) {
                    Some(n) if id.index() < pre.len() && n.alive => Ok(Some(id.index())),
                    _ => Err(err(format!("parent {id} does not exist"))),
                },
                Some(ParentRef::Inserted(id)) => match inserted.get(&id) {
                    Some(i) if w.nodes[*i].alive => Ok(Some(*i)),
                    _ => Err(err(format!("inserted parent post{id} does not exist"))),
                },
            }
        };
        let check_index = |w: &Work, parent: usize, i: usize| -> Result<()> {
            if i > w.nodes[parent].children.len() {
                Err(err(format!("index {i} out of range")))
            } else {
                Ok(())
            }
        };
        match op.op {
            EditKind::Insert => {
                let parent = resolve_parent(&w, op.new_parent)?;
                let i = op.new_index.unwrap_or(0);
                let id = w.nodes.len();
                w.nodes.push(WNode {
                    kind: op.kind,
                    value: op.new_value.clone(),
                    role: op.role.clone(),
                    loc: Loc::default(),
                    children: Vec::new(),
                    parent: None,
                    alive: true,
                });
                match parent {
                    Some(p) => {
                        check_index(&w, p, i)?;
                        w.attach(id, p, i);
                    }
                    None => w.root = id,
                }
                if let Some(x) = op.post_node {
                    inserted.insert(x, id);
                }
            }
            EditKind::Delete => {
                let v = resolve_pre(&w, op.pre_node)?;
                w.detach(v);
                let mut stack = vec![v];
                while let Some(n) = stack.pop() {
                    w.nodes[n].alive = false;
                    stack.extend(w.nodes[n].children.clone());
                }
                if w.root == v {
                    w.root = usize::MAX;
                }
            }
            EditKind::Update => {
                let v = resolve_pre(&w, op.pre_node)?;
                w.nodes[v].value = op.new_value.clone();
            }
            EditKind::MoveReparent | EditKind::MoveReorder => {
                let v = resolve_pre(&w, op.pre_node)?;
                let parent = resolve_parent(&w, op.new_parent)?;
                let i = op.new_index.ok_or_else(|| err("move without index".into()))?;
                match parent {
                    Some(p) => {
                        if p == v || w.is_ancestor(v, p) {
                            return Err(err("move would create a cycle".into()));
                        }
                        if w.root == v {
                            w.root = usize::MAX;
                        }
                        w.detach(v);
                        check_index(&w, p, i)?;
                        w.attach(v, p, i);
                    }
                    None => {
                        w.detach(v);
                        w.root = v;
                    }
                }
                if op.role.is_some() || op.op == EditKind::MoveReparent {
                    w.nodes[v].role = op.role.clone();
                }
            }
        }
    }
    if w.root == usize::MAX || !w.nodes[w.root].alive {
        return Err(Error::EditOp { index: ops.len(), message: "result has no root".into() });
    }
    let mut root = w.to_owned(w.root);
    root.role = None;
    let name = root.value.clone().unwrap_or_else(|| pre.function_name.clone());
    AstTree::from_owned(root, name, pre.declared_vars.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfront::parse_function;

    fn first(t: &AstTree, kind: NodeKind, value: &str) -> NodeId {
        t.preorder()
            .into_iter()
            .find(|i| t.node(*i).kind == kind && t.node(*i).value_str() == value)
            .unwrap()
    }

    #[test]
    fn identical_trees_pair_at_level_one() {
        let t = parse_function("int f(int a) { if (a) return 1; return a + 2; }").unwrap();
        let m = match_trees(&t, &t);
        assert_eq!(m.len(), t.len());
        assert!(m.pairs().iter().all(|(a, b, l)| a == b && *l == 1));
        let s = derive_editscript(&t, &t, &m);
        assert!(s.ops.is_empty());
    }

    #[test]
    fn renamed_operand_becomes_update() {
        let pre = parse_function("int f(int a, int b, int c) { return a + b; }").unwrap();
        let post = parse_function("int f(int a, int b, int c) { return a + c; }").unwrap();
        let m = match_trees(&pre, &post);
        let a = first(&pre, NodeKind::VariableAccess, "a");
        assert_eq!(m.post_of(a), Some(first(&post, NodeKind::VariableAccess, "a")));
        let b = first(&pre, NodeKind::VariableAccess, "b");
        assert_eq!(m.post_of(b), Some(first(&post, NodeKind::VariableAccess, "c")));
        // `a + b` and `a + c` have the same shape, so the whole tree pairs at stage 3
        assert_eq!(m.level(b), Some(3));
        let s = derive_editscript(&pre, &post, &m);
        assert_eq!(s.ops.len(), 1);
        assert_eq!(s.ops[0].op, EditKind::Update);
        assert_eq!(s.ops[0].new_value.as_deref(), Some("c"));
    }

    #[test]
    fn leaf_under_reshaped_parent_pairs_at_level_six() {
        let pre = parse_function("int f(int b, int c) { return g(b); }").unwrap();
        let post = parse_function("int f(int b, int c) { return g(c, 1); }").unwrap();
        let m = match_trees(&pre, &post);
        let b = first(&pre, NodeKind::VariableAccess, "b");
        assert_eq!(m.post_of(b), Some(first(&post, NodeKind::VariableAccess, "c")));
        assert_eq!(m.level(b), Some(6));
        assert_eq!(m.level(first(&pre, NodeKind::VariableAccess, "g")), Some(5));
    }

    #[test]
    fn wrapped_statement_is_moved_under_new_block() {
        let pre = parse_function("int f(int a) { if (a) return 1; return 0; }").unwrap();
        let post = parse_function("int f(int a) { if (a) { g(a); return 1; } return 0; }").unwrap();
        let s = diff_trees(&pre, &post);
        let kinds: Vec<_> = s.ops.iter().map(|o| (o.op, o.kind)).collect();
        assert!(kinds.contains(&(EditKind::Insert, NodeKind::BlockStmt)));
        assert!(kinds.contains(&(EditKind::MoveReparent, NodeKind::ReturnStmt)));
        let out = apply_editscript(&pre, &s.ops).unwrap();
        assert!(out.structurally_equal(&post));
    }

    #[test]
    fn apply_reports_bad_op_index() {
        let pre = parse_function("int f(void) { return 1; }").unwrap();
        let op = EditOp {
            op: EditKind::Delete,
            pre_node: Some(NodeId(77)),
            post_node: None,
            new_parent: None,
            new_index: None,
            new_value: None,
            kind: NodeKind::Literal,
            role: None,
        };
        let err = apply_editscript(&pre, &[op.clone(), op]).unwrap_err();
        assert!(matches!(err, Error::EditOp { index: 0, .. }));
    }

    #[test]
    fn delete_removes_subtree() {
        let pre = parse_function("int f(int a) { if (a) return 1; return 0; }").unwrap();
        let ifs = first(&pre, NodeKind::IfStmt, "");
        let op = EditOp {
            op: EditKind::Delete,
            pre_node: Some(ifs),
            post_node: None,
            new_parent: None,
            new_index: None,
            new_value: None,
            kind: NodeKind::IfStmt,
            role: None,
        };
        let out = apply_editscript(&pre, &[op]).unwrap();
        assert_eq!(out.len(), pre.len() - 1 - pre.descendant_count(ifs));
    }

    #[test]
    fn root_replacement_round_trips() {
        let pre = parse_function("int f(int a) { return a; }").unwrap();
        let post = parse_function("int g(int a, int b) { return b; }").unwrap();
        let s = diff_trees(&pre, &post);
        let out = apply_editscript(&pre, &s.ops).unwrap();
        assert!(out.structurally_equal(&post));
    }
}
