//! Well-sortedness checking for theories.
//!
//! Every axiom must be closed, every symbol must be declared, and every
//! application must match its symbol's profile. Errors carry the axiom and a
//! path of child indices so the offending subterm can be pinpointed.

use std::fmt;

use super::{Formula, Signature, Sort, Term, Theory};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TypeErrorKind {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("`{symbol}` expects {expected} arguments, got {actual}")]
    ArityMismatch {
        symbol: String,
        expected: usize,
        actual: usize,
    },
    #[error("expected sort `{expected}`, found `{actual}`")]
    SortMismatch { expected: String, actual: String },
    #[error("axiom is open: free variable x{index}:{sort}")]
    OpenAxiom { index: usize, sort: String },
}

/// A sort error located inside a named axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeError {
    /// Which axiom (by position) the error occurred in, if any.
    pub axiom: Option<usize>,
    /// Child-index path from the axiom root down to the offending node.
    pub path: Vec<usize>,
    pub kind: TypeErrorKind,
}

impl fmt::Display for TypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.axiom {
            Some(i) => write!(f, "axiom {}: ", i)?,
            None => write!(f, "signature: ")?,
        }
        if !self.path.is_empty() {
            let path: Vec<String> = self.path.iter().map(|i| i.to_string()).collect();
            write!(f, "at /{}: ", path.join("/"))?;
        }
        write!(f, "{}", self.kind)
    }
}

impl std::error::Error for TypeError {}

struct Checker<'a> {
    sig: &'a Signature,
    axiom: Option<usize>,
    path: Vec<usize>,
    errors: Vec<TypeError>,
}

impl<'a> Checker<'a> {
    fn report(&mut self, kind: TypeErrorKind) {
        self.errors.push(TypeError {
            axiom: self.axiom,
            path: self.path.clone(),
            kind,
        });
    }

    fn check_sort_known(&mut self, sort: &Sort) {
        if self.sig.sort(&sort.name).is_none() {
            self.report(TypeErrorKind::UnknownSymbol(sort.name.clone()));
        }
    }

    fn check_term(&mut self, term: &Term, expected: &Sort) {
        let actual = term.sort();
        if actual != expected {
            self.report(TypeErrorKind::SortMismatch {
                expected: expected.name.clone(),
                actual: actual.name.clone(),
            });
        }
        self.check_term_shape(term);
    }

    fn check_term_shape(&mut self, term: &Term) {
        match term {
            Term::Var(v) => self.check_sort_known(&v.sort),
            Term::App(f, args) => {
                match self.sig.fun(&f.name) {
                    None => self.report(TypeErrorKind::UnknownSymbol(f.name.clone())),
                    Some(decl) if decl != f => {
                        // Same name, different profile: treat as unknown.
                        self.report(TypeErrorKind::UnknownSymbol(f.name.clone()));
                    }
                    Some(_) => {}
                }
                if f.arity() != args.len() {
                    self.report(TypeErrorKind::ArityMismatch {
                        symbol: f.name.clone(),
                        expected: f.arity(),
                        actual: args.len(),
                    });
                    return;
                }
                for (i, (arg, dom)) in args.iter().zip(&f.domain).enumerate() {
                    self.path.push(i);
                    self.check_term(arg, dom);
                    self.path.pop();
                }
            }
        }
    }

    fn check_formula(&mut self, formula: &Formula) {
        match formula {
            Formula::False | Formula::True => {}
            Formula::Pred(p, args) => {
                match self.sig.pred(&p.name) {
                    None => self.report(TypeErrorKind::UnknownSymbol(p.name.clone())),
                    Some(decl) if decl != p => {
                        self.report(TypeErrorKind::UnknownSymbol(p.name.clone()));
                    }
                    Some(_) => {}
                }
                if p.arity() != args.len() {
                    self.report(TypeErrorKind::ArityMismatch {
                        symbol: p.name.clone(),
                        expected: p.arity(),
                        actual: args.len(),
                    });
                    return;
                }
                for (i, (arg, dom)) in args.iter().zip(&p.domain).enumerate() {
                    self.path.push(i);
                    self.check_term(arg, dom);
                    self.path.pop();
                }
            }
            Formula::Eq(sort, a, b) => {
                self.check_sort_known(sort);
                self.path.push(0);
                self.check_term(a, sort);
                self.path.pop();
                self.path.push(1);
                self.check_term(b, sort);
                self.path.pop();
            }
            Formula::Not(f) => {
                self.path.push(0);
                self.check_formula(f);
                self.path.pop();
            }
            Formula::Or(a, b)
            | Formula::And(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                self.path.push(0);
                self.check_formula(a);
                self.path.pop();
                self.path.push(1);
                self.check_formula(b);
                self.path.pop();
            }
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                self.check_sort_known(&v.sort);
                self.path.push(0);
                self.check_formula(f);
                self.path.pop();
            }
        }
    }
}

impl Theory {
    /// Checks the whole theory: declared datatypes belong to the signature,
    /// every axiom is closed and well-sorted. Returns all errors found.
    pub fn typecheck(&self) -> Result<(), Vec<TypeError>> {
        let mut checker = Checker {
            sig: &self.signature,
            axiom: None,
            path: Vec::new(),
            errors: Vec::new(),
        };

        for dt in &self.datatypes {
            if self.signature.sort(&dt.sort.name).is_none() {
                checker.report(TypeErrorKind::UnknownSymbol(dt.sort.name.clone()));
            }
            for ctor in &dt.ctors {
                if self.signature.fun(&ctor.name).is_none() {
                    checker.report(TypeErrorKind::UnknownSymbol(ctor.name.clone()));
                } else if ctor.codomain != dt.sort {
                    checker.report(TypeErrorKind::SortMismatch {
                        expected: dt.sort.name.clone(),
                        actual: ctor.codomain.name.clone(),
                    });
                }
            }
        }

        for (i, axiom) in self.axioms.iter().enumerate() {
            checker.axiom = Some(i);
            checker.check_formula(axiom);
            if let Some(v) = axiom.free_vars().into_iter().next() {
                checker.report(TypeErrorKind::OpenAxiom {
                    index: v.index,
                    sort: v.sort.name.clone(),
                });
            }
        }

        if checker.errors.is_empty() {
            Ok(())
        } else {
            Err(checker.errors)
        }
    }

    /// Checks a single formula (not necessarily closed) against the
    /// signature.
    pub fn check_formula(&self, formula: &Formula) -> Result<(), Vec<TypeError>> {
        let mut checker = Checker {
            sig: &self.signature,
            axiom: None,
            path: Vec::new(),
            errors: Vec::new(),
        };
        checker.check_formula(formula);
        if checker.errors.is_empty() {
            Ok(())
        } else {
            Err(checker.errors)
        }
    }
}
