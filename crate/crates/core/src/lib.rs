//! Patch-to-rule pipeline: C frontend, tree differencing, rule synthesis,
//! refinement and matching.

pub mod ast;
pub mod cfront;
pub mod emit;
pub mod error;
pub mod matcher;
pub mod patch;
pub mod refine;
pub mod rule;
pub mod rulegen;
pub mod synth;
pub mod treediff;

pub use ast::{AstNode, AstTree, DeclaredVar, Loc, NodeId, NodeKind, Storage};
pub use error::{Error, Result};
pub use rule::{AnchorConstraint, Condition, Origin, Polarity, Predicate, Rule, VarAnchor};
