//! Object syntax: formulas, structures, contexts and sequents, together with
//! parsing, printing, the formula interner and the bang-eliminating
//! translation used by the polynomial decision pipeline.

mod interner;
mod parse;
mod print;
mod translate;

pub use interner::Interner;
pub use parse::{parse_formula, parse_sequent, parse_structure, ParseError};
pub use print::{display_formula, display_sequent, display_structure, latex_formula, latex_structure};
pub use translate::{tau, tau_structure, untau};

use std::collections::BTreeSet;
use std::fmt;

/// A propositional formula over indexed variables, the unit, the exponential
/// and the three multiplicative connectives.
///
/// `RImpl(a, b)` is the implication consuming its argument on the left
/// (written `a \ b`); `LImpl(b, a)` consumes its argument on the right
/// (written `b / a`). There is no implicit associativity or commutativity:
/// equality is purely syntactic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(u32),
    Unit,
    Bang(Box<Formula>),
    Tensor(Box<Formula>, Box<Formula>),
    /// `arg \ result`: argument consumed on the left.
    RImpl(Box<Formula>, Box<Formula>),
    /// `result / arg`: argument consumed on the right.
    LImpl(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(i: u32) -> Formula {
        Formula::Var(i)
    }

    pub fn bang(f: Formula) -> Formula {
        Formula::Bang(Box::new(f))
    }

    pub fn tensor(l: Formula, r: Formula) -> Formula {
        Formula::Tensor(Box::new(l), Box::new(r))
    }

    /// `arg \ result`.
    pub fn rimpl(arg: Formula, result: Formula) -> Formula {
        Formula::RImpl(Box::new(arg), Box::new(result))
    }

    /// `result / arg`.
    pub fn limpl(result: Formula, arg: Formula) -> Formula {
        Formula::LImpl(Box::new(result), Box::new(arg))
    }

    /// Number of symbols: one per variable, unit, bang and binary connective.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Unit => 1,
            Formula::Bang(f) => 1 + f.size(),
            Formula::Tensor(l, r) | Formula::RImpl(l, r) | Formula::LImpl(l, r) => {
                1 + l.size() + r.size()
            }
        }
    }

    /// True when no `!` occurs anywhere in the formula (membership in the
    /// pure multiplicative fragment).
    pub fn is_bang_free(&self) -> bool {
        match self {
            Formula::Var(_) | Formula::Unit => true,
            Formula::Bang(_) => false,
            Formula::Tensor(l, r) | Formula::RImpl(l, r) | Formula::LImpl(l, r) => {
                l.is_bang_free() && r.is_bang_free()
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", display_formula(self, None))
    }
}

/// Reflexive-transitive subformula set of a single formula.
pub fn sbf(f: &Formula) -> BTreeSet<Formula> {
    let mut out = BTreeSet::new();
    collect_sbf(f, &mut out);
    out
}

/// Subformula set of a set of formulas: the union of member subformula sets.
pub fn sbf_set<'a, I: IntoIterator<Item = &'a Formula>>(fs: I) -> BTreeSet<Formula> {
    let mut out = BTreeSet::new();
    for f in fs {
        collect_sbf(f, &mut out);
    }
    out
}

fn collect_sbf(f: &Formula, out: &mut BTreeSet<Formula>) {
    if !out.insert(f.clone()) {
        return;
    }
    match f {
        Formula::Var(_) | Formula::Unit => {}
        Formula::Bang(g) => collect_sbf(g, out),
        Formula::Tensor(l, r) | Formula::RImpl(l, r) | Formula::LImpl(l, r) => {
            collect_sbf(l, out);
            collect_sbf(r, out);
        }
    }
}

/// A structure: a binary tree of formulas, possibly empty.
///
/// Normal form: a `Node` never has an `Empty` child. The [`Structure::node`]
/// constructor normalizes, so `(Γ, ∅) ≡ Γ` and `(∅, Γ) ≡ Γ` hold by
/// construction everywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Structure {
    Empty,
    Leaf(Formula),
    Node(Box<Structure>, Box<Structure>),
}

impl Structure {
    pub fn leaf(f: Formula) -> Structure {
        Structure::Leaf(f)
    }

    /// Normalizing pair constructor: empty children disappear.
    pub fn node(l: Structure, r: Structure) -> Structure {
        match (l, r) {
            (Structure::Empty, r) => r,
            (l, Structure::Empty) => l,
            (l, r) => Structure::Node(Box::new(l), Box::new(r)),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Structure::Empty)
    }

    /// True when every node child is nonempty.
    pub fn is_normal(&self) -> bool {
        match self {
            Structure::Empty | Structure::Leaf(_) => true,
            Structure::Node(l, r) => {
                !l.is_empty() && !r.is_empty() && l.is_normal() && r.is_normal()
            }
        }
    }

    /// Rebuild through the normalizing constructor.
    pub fn normalize(&self) -> Structure {
        match self {
            Structure::Empty => Structure::Empty,
            Structure::Leaf(f) => Structure::Leaf(f.clone()),
            Structure::Node(l, r) => Structure::node(l.normalize(), r.normalize()),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Structure::Empty => 0,
            Structure::Leaf(_) => 1,
            Structure::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Internal node count.
    pub fn node_count(&self) -> usize {
        match self {
            Structure::Empty | Structure::Leaf(_) => 0,
            Structure::Node(l, r) => 1 + l.node_count() + r.node_count(),
        }
    }

    /// Total formula symbols over all leaves.
    pub fn symbol_count(&self) -> usize {
        match self {
            Structure::Empty => 0,
            Structure::Leaf(f) => f.size(),
            Structure::Node(l, r) => l.symbol_count() + r.symbol_count(),
        }
    }

    /// Leaf formulas in left-to-right order (with multiplicity).
    pub fn leaves(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Formula>) {
        match self {
            Structure::Empty => {}
            Structure::Leaf(f) => out.push(f),
            Structure::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// True when every leaf formula is banged. Vacuously true for `Empty`.
    pub fn all_leaves_banged(&self) -> bool {
        self.leaves().iter().all(|f| matches!(f, Formula::Bang(_)))
    }

    /// Wrap every leaf formula in a bang, preserving the tree shape.
    pub fn bang_leaves(&self) -> Structure {
        match self {
            Structure::Empty => Structure::Empty,
            Structure::Leaf(f) => Structure::Leaf(Formula::bang(f.clone())),
            Structure::Node(l, r) => {
                Structure::Node(Box::new(l.bang_leaves()), Box::new(r.bang_leaves()))
            }
        }
    }

    /// Strip the top bang off every leaf. Returns `None` if some leaf is
    /// not banged.
    pub fn strip_leaf_bangs(&self) -> Option<Structure> {
        match self {
            Structure::Empty => Some(Structure::Empty),
            Structure::Leaf(Formula::Bang(f)) => Some(Structure::Leaf((**f).clone())),
            Structure::Leaf(_) => None,
            Structure::Node(l, r) => Some(Structure::Node(
                Box::new(l.strip_leaf_bangs()?),
                Box::new(r.strip_leaf_bangs()?),
            )),
        }
    }

    /// Addresses of all leaves, left to right.
    pub fn leaf_addresses(&self) -> Vec<Address> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.collect_leaf_addresses(&mut cur, &mut out);
        out
    }

    fn collect_leaf_addresses(&self, cur: &mut Vec<Side>, out: &mut Vec<Address>) {
        match self {
            Structure::Empty => {}
            Structure::Leaf(_) => out.push(Address(cur.clone())),
            Structure::Node(l, r) => {
                cur.push(Side::Left);
                l.collect_leaf_addresses(cur, out);
                cur.pop();
                cur.push(Side::Right);
                r.collect_leaf_addresses(cur, out);
                cur.pop();
            }
        }
    }

    /// Addresses of all subtrees (internal nodes and leaves), preorder.
    pub fn subtree_addresses(&self) -> Vec<Address> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.collect_subtree_addresses(&mut cur, &mut out);
        out
    }

    fn collect_subtree_addresses(&self, cur: &mut Vec<Side>, out: &mut Vec<Address>) {
        match self {
            Structure::Empty => {}
            Structure::Leaf(_) => out.push(Address(cur.clone())),
            Structure::Node(l, r) => {
                out.push(Address(cur.clone()));
                cur.push(Side::Left);
                l.collect_subtree_addresses(cur, out);
                cur.pop();
                cur.push(Side::Right);
                r.collect_subtree_addresses(cur, out);
                cur.pop();
            }
        }
    }

    /// Subtree at `addr`, if the address is valid.
    pub fn subtree(&self, addr: &Address) -> Option<&Structure> {
        let mut cur = self;
        for side in &addr.0 {
            match cur {
                Structure::Node(l, r) => {
                    cur = match side {
                        Side::Left => l,
                        Side::Right => r,
                    }
                }
                _ => return None,
            }
        }
        Some(cur)
    }

    /// Split into the context around `addr` and the subtree there.
    pub fn split_at(&self, addr: &Address) -> Option<(Context, Structure)> {
        let mut path = Vec::new();
        let mut cur = self;
        for side in &addr.0 {
            match cur {
                Structure::Node(l, r) => match side {
                    Side::Left => {
                        path.push((Side::Left, (**r).clone()));
                        cur = l;
                    }
                    Side::Right => {
                        path.push((Side::Right, (**l).clone()));
                        cur = r;
                    }
                },
                _ => return None,
            }
        }
        Some((Context { path }, cur.clone()))
    }

    /// Replace the subtree at `addr`, normalizing away empties.
    pub fn replace_at(&self, addr: &Address, replacement: Structure) -> Option<Structure> {
        let (ctx, _) = self.split_at(addr)?;
        Some(ctx.plug(replacement))
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", display_structure(self, None))
    }
}

/// Yield of a structure: the set of its leaf formulas.
pub fn yield_of(g: &Structure) -> BTreeSet<Formula> {
    g.leaves().into_iter().cloned().collect()
}

/// Which child of a node the hole (or a described position) sits in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A path from the root of a structure to one of its subtrees.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Address(pub Vec<Side>);

impl Address {
    pub fn root() -> Address {
        Address(Vec::new())
    }

    pub fn child(&self, side: Side) -> Address {
        let mut path = self.0.clone();
        path.push(side);
        Address(path)
    }

    pub fn join(&self, other: &Address) -> Address {
        let mut path = self.0.clone();
        path.extend(other.0.iter().copied());
        Address(path)
    }

    pub fn is_prefix_of(&self, other: &Address) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }

    /// Remaining path after stripping `prefix`; `None` if not a prefix.
    pub fn strip_prefix(&self, prefix: &Address) -> Option<Address> {
        if prefix.is_prefix_of(self) {
            Some(Address(self.0[prefix.0.len()..].to_vec()))
        } else {
            None
        }
    }

    /// Adjust this address after the subtree at `at` was replaced.
    ///
    /// Assumes `self` is not at or below `at`. When the replacement is
    /// nonempty no address moves. When it is empty, the parent node of `at`
    /// collapses and addresses through the removed node's sibling lose one
    /// step.
    pub fn adjust_after_replace(&self, at: &Address, replacement_empty: bool) -> Address {
        debug_assert!(!at.is_prefix_of(self), "address at or below edit point");
        if !replacement_empty || at.0.is_empty() {
            return self.clone();
        }
        let parent = &at.0[..at.0.len() - 1];
        let removed_side = at.0[at.0.len() - 1];
        if self.0.len() > parent.len()
            && self.0[..parent.len()] == *parent
            && self.0[parent.len()] == removed_side.opposite()
        {
            let mut path = parent.to_vec();
            path.extend_from_slice(&self.0[parent.len() + 1..]);
            Address(path)
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, ".");
        }
        for side in &self.0 {
            write!(
                f,
                "{}",
                match side {
                    Side::Left => 'l',
                    Side::Right => 'r',
                }
            )?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Address {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "." {
            return Ok(Address::root());
        }
        let mut path = Vec::new();
        for c in s.chars() {
            match c {
                'l' => path.push(Side::Left),
                'r' => path.push(Side::Right),
                other => return Err(format!("invalid address character '{other}'")),
            }
        }
        Ok(Address(path))
    }
}

/// A structure with exactly one hole: the bracket notation `Γ[·]` used by
/// every left rule. The path runs from the outermost node inwards, each step
/// recording which side the hole continues on and the sibling structure.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Context {
    pub path: Vec<(Side, Structure)>,
}

impl Context {
    pub fn hole() -> Context {
        Context { path: Vec::new() }
    }

    /// Fill the hole. Total: plugging `Empty` triggers node normalization.
    pub fn plug(&self, filler: Structure) -> Structure {
        let mut cur = filler;
        for (side, sibling) in self.path.iter().rev() {
            cur = match side {
                Side::Left => Structure::node(cur, sibling.clone()),
                Side::Right => Structure::node(sibling.clone(), cur),
            };
        }
        cur
    }

    /// The hole's address.
    pub fn address(&self) -> Address {
        Address(self.path.iter().map(|(s, _)| *s).collect())
    }
}

/// A structured sequent `Γ ⊢ C`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    pub antecedent: Structure,
    pub succedent: Formula,
}

impl Sequent {
    pub fn new(antecedent: Structure, succedent: Formula) -> Sequent {
        Sequent {
            antecedent,
            succedent,
        }
    }

    /// Total formula symbols plus internal antecedent nodes.
    pub fn size(&self) -> usize {
        self.antecedent.symbol_count() + self.antecedent.node_count() + self.succedent.size()
    }

    /// Total formula symbols only.
    pub fn symbol_count(&self) -> usize {
        self.antecedent.symbol_count() + self.succedent.size()
    }

    pub fn is_bang_free(&self) -> bool {
        self.succedent.is_bang_free()
            && self.antecedent.leaves().iter().all(|f| f.is_bang_free())
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", display_sequent(self, None))
    }
}

/// Bidirectional table between atom names and variable indices.
///
/// Named atoms are allocated the smallest index not already named and never
/// explicitly referenced as `pN`; explicit `pN` atoms reserve their index.
/// Printing prefers names where one is registered.
#[derive(Debug, Clone, Default)]
pub struct Symbols {
    by_name: std::collections::HashMap<String, u32>,
    by_index: std::collections::HashMap<u32, String>,
    reserved: std::collections::HashSet<u32>,
    next: u32,
}

impl Symbols {
    pub fn new() -> Symbols {
        Symbols::default()
    }

    /// Index for a named atom, allocating on first sight.
    pub fn intern_name(&mut self, name: &str) -> u32 {
        if let Some(&i) = self.by_name.get(name) {
            return i;
        }
        while self.by_index.contains_key(&self.next) || self.reserved.contains(&self.next) {
            self.next += 1;
        }
        let i = self.next;
        self.next += 1;
        self.by_name.insert(name.to_string(), i);
        self.by_index.insert(i, name.to_string());
        i
    }

    /// Record that an index was referenced explicitly as `pN`.
    pub fn reserve_index(&mut self, index: u32) {
        self.reserved.insert(index);
    }

    pub fn name_of(&self, index: u32) -> Option<&str> {
        self.by_index.get(&index).map(|s| s.as_str())
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.by_name.get(name).copied()
    }
}
