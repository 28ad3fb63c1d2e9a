//! Multi-sorted first-order terms, formulas, signatures and theories.
//!
//! Variables are `(index, sort)` pairs; surface names are a concern of the
//! parser and printer, not of this representation. The formula type keeps the
//! sugar connectives (`∧`, `→`, `↔`, `∃`, `⊤`) so theories can be transcribed
//! faithfully; [`normalize`](Formula::normalize) eliminates them down to the
//! core `{⊥, ¬, ∨, ∀, ≈, P}` fragment that the encoder understands.

use std::fmt;

mod ops;
mod typecheck;

pub use typecheck::{TypeError, TypeErrorKind};

/// What a sort stands for. Anything other than `Base` only appears in
/// signatures produced by the reflection builder.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SortKind {
    Base,
    /// Variables of the named base sort.
    VarOf(String),
    /// Terms of the named base sort.
    TermOf(String),
    /// Formulas.
    Form,
    /// Variable-binding environments.
    Env,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sort {
    pub name: String,
    pub kind: SortKind,
}

impl Sort {
    pub fn base(name: impl Into<String>) -> Self {
        Sort {
            name: name.into(),
            kind: SortKind::Base,
        }
    }

    pub fn is_base(&self) -> bool {
        self.kind == SortKind::Base
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// A typed function symbol. Constants are functions with an empty domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunSym {
    pub name: String,
    pub domain: Vec<Sort>,
    pub codomain: Sort,
}

impl FunSym {
    pub fn new(name: impl Into<String>, domain: Vec<Sort>, codomain: Sort) -> Self {
        FunSym {
            name: name.into(),
            domain,
            codomain,
        }
    }

    pub fn constant(name: impl Into<String>, sort: Sort) -> Self {
        FunSym::new(name, vec![], sort)
    }

    pub fn arity(&self) -> usize {
        self.domain.len()
    }

    /// Application, checked only for arity; full sort checking happens in
    /// [`Theory::typecheck`].
    pub fn app(&self, args: Vec<Term>) -> Term {
        debug_assert_eq!(self.arity(), args.len(), "arity mismatch on {}", self.name);
        Term::App(self.clone(), args)
    }
}

/// A typed predicate symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PredSym {
    pub name: String,
    pub domain: Vec<Sort>,
}

impl PredSym {
    pub fn new(name: impl Into<String>, domain: Vec<Sort>) -> Self {
        PredSym {
            name: name.into(),
            domain,
        }
    }

    pub fn arity(&self) -> usize {
        self.domain.len()
    }

    pub fn app(&self, args: Vec<Term>) -> Formula {
        debug_assert_eq!(self.arity(), args.len(), "arity mismatch on {}", self.name);
        Formula::Pred(self.clone(), args)
    }
}

/// An indexed, sorted variable. Two variables are the same object iff both
/// index and sort agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub index: usize,
    pub sort: Sort,
}

impl Var {
    pub fn new(index: usize, sort: Sort) -> Self {
        Var { index, sort }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(Var),
    App(FunSym, Vec<Term>),
}

impl Term {
    pub fn var(v: Var) -> Self {
        Term::Var(v)
    }

    /// The sort this term denotes.
    pub fn sort(&self) -> &Sort {
        match self {
            Term::Var(v) => &v.sort,
            Term::App(f, _) => &f.codomain,
        }
    }

    /// Nesting depth: variables and constants are depth 0, a non-nullary
    /// application is one deeper than its deepest argument.
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => {
                if args.is_empty() {
                    0
                } else {
                    1 + args.iter().map(Term::depth).max().unwrap()
                }
            }
        }
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::App(_, args) => args.iter().all(Term::is_ground),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    False,
    True,
    Pred(PredSym, Vec<Term>),
    /// Equality between two terms of the annotated sort.
    Eq(Sort, Term, Term),
    Not(Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Forall(Var, Box<Formula>),
    Exists(Var, Box<Formula>),
}

impl Formula {
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn forall(v: Var, f: Formula) -> Self {
        Formula::Forall(v, Box::new(f))
    }

    pub fn exists(v: Var, f: Formula) -> Self {
        Formula::Exists(v, Box::new(f))
    }

    pub fn eq(a: Term, b: Term) -> Self {
        let sort = a.sort().clone();
        Formula::Eq(sort, a, b)
    }

    /// Left-associated conjunction of a non-empty list; `True` when empty.
    pub fn conj(mut fs: Vec<Formula>) -> Self {
        if fs.is_empty() {
            return Formula::True;
        }
        let rest = fs.split_off(1);
        rest.into_iter().fold(fs.pop().unwrap(), Formula::and)
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Formula nesting depth. Atoms sit at the depth of their deepest
    /// argument term; each connective or quantifier adds one.
    pub fn depth(&self) -> usize {
        match self {
            Formula::False | Formula::True => 0,
            Formula::Pred(_, args) => args.iter().map(Term::depth).max().unwrap_or(0),
            Formula::Eq(_, a, b) => a.depth().max(b.depth()),
            Formula::Not(f) => 1 + f.depth(),
            Formula::Or(a, b) | Formula::And(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                1 + a.depth().max(b.depth())
            }
            Formula::Forall(_, f) | Formula::Exists(_, f) => 1 + f.depth(),
        }
    }

    /// True when the formula uses only the core connectives
    /// `{⊥, P, ≈, ¬, ∨, ∀}`.
    pub fn is_core(&self) -> bool {
        match self {
            Formula::False | Formula::Pred(..) | Formula::Eq(..) => true,
            Formula::Not(f) | Formula::Forall(_, f) => f.is_core(),
            Formula::Or(a, b) => a.is_core() && b.is_core(),
            Formula::True
            | Formula::And(..)
            | Formula::Implies(..)
            | Formula::Iff(..)
            | Formula::Exists(..) => false,
        }
    }
}

/// The vocabulary of a theory; declaration order is preserved and all
/// generated output iterates it deterministically.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Signature {
    pub sorts: Vec<Sort>,
    pub funs: Vec<FunSym>,
    pub preds: Vec<PredSym>,
}

impl Signature {
    pub fn sort(&self, name: &str) -> Option<&Sort> {
        self.sorts.iter().find(|s| s.name == name)
    }

    pub fn fun(&self, name: &str) -> Option<&FunSym> {
        self.funs.iter().find(|f| f.name == name)
    }

    pub fn pred(&self, name: &str) -> Option<&PredSym> {
        self.preds.iter().find(|p| p.name == name)
    }

    pub fn base_sorts(&self) -> impl Iterator<Item = &Sort> {
        self.sorts.iter().filter(|s| s.is_base())
    }

    /// All names already taken by a sort or symbol.
    pub fn has_name(&self, name: &str) -> bool {
        self.sort(name).is_some() || self.fun(name).is_some() || self.pred(name).is_some()
    }
}

/// An inductive datatype: a sort together with its constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductiveDatatype {
    pub sort: Sort,
    pub ctors: Vec<FunSym>,
}

impl InductiveDatatype {
    /// Positions of recursive constructor arguments, i.e. those of the
    /// datatype's own sort.
    pub fn recursive_positions(&self, ctor: &FunSym) -> Vec<usize> {
        ctor.domain
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == self.sort)
            .map(|(i, _)| i)
            .collect()
    }
}

/// A named theory: signature, inductive datatypes, and closed axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theory {
    pub name: String,
    pub signature: Signature,
    pub datatypes: Vec<InductiveDatatype>,
    pub axioms: Vec<Formula>,
    /// Set once a reflective extension has been built over this theory;
    /// guards against iterating the construction.
    pub reflected: bool,
}

impl Theory {
    pub fn new(name: impl Into<String>) -> Self {
        Theory {
            name: name.into(),
            signature: Signature::default(),
            datatypes: Vec::new(),
            axioms: Vec::new(),
            reflected: false,
        }
    }

    pub fn datatype(&self, sort_name: &str) -> Option<&InductiveDatatype> {
        self.datatypes.iter().find(|d| d.sort.name == sort_name)
    }
}

/// Builds the numeral `s^n(zero)` in a theory declaring `zero` and `s`.
pub fn numeral(n: u64, theory: &Theory) -> Result<Term, MissingSymbol> {
    let zero = theory
        .signature
        .fun("zero")
        .filter(|f| f.arity() == 0)
        .ok_or(MissingSymbol("zero"))?;
    let succ = theory
        .signature
        .fun("s")
        .filter(|f| f.arity() == 1)
        .ok_or(MissingSymbol("s"))?;
    let mut t = zero.app(vec![]);
    for _ in 0..n {
        t = succ.app(vec![t]);
    }
    Ok(t)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("theory does not declare the symbol `{0}` required for numerals")]
pub struct MissingSymbol(pub &'static str);

#[cfg(test)]
mod tests;
