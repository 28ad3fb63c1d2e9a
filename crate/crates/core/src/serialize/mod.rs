//! Surface syntax and prover output formats.
//!
//! The theory format is line-oriented: `sort`, `data`, `fun`, `pred`,
//! `axiom`, `conjecture` declarations terminated by `.`, with `#` comments
//! and optional `theory "name".` / `problem "id".` metadata. Printing then
//! parsing a well-formed document reproduces the same AST.
//!
//! ```text
//! theory "N+Add".
//! sort nat.
//! data nat = zero | s(nat).
//! fun add: nat nat -> nat.
//! axiom forall y:nat. add(zero, y) = y.
//! axiom forall x:nat, y:nat. add(s(x), y) = s(add(x, y)).
//! ```
//!
//! Formulas use `=`, `!=`, `~`/`not`, `&`, `|`, `->`, `<->`, `forall`,
//! `exists`, `true`, `false`; `&` binds tighter than `|`, which binds
//! tighter than the right-associative `->`, which binds tighter than `<->`;
//! quantifier scope extends as far right as possible.
//!
//! Emitters for SMT-LIB 2 and TPTP TFF are deterministic byte-for-byte;
//! symbol names are sanitized injectively for each format's lexical rules.

mod parse;
mod print;
mod smtlib;
mod tptp;

pub use parse::{parse_formula, parse_theory, ParseError};
pub use print::{print_formula, print_term, print_theory};
pub use smtlib::{emit_smtlib, DatatypeMode};
pub use tptp::emit_tptp;

use crate::logic::{Formula, Theory};

/// A parsed or printable theory file: the theory, an optional conjecture,
/// and metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct TheoryDocument {
    pub theory: Theory,
    pub conjecture: Option<Formula>,
    /// Problem path id, e.g. `refl0/N+Leq+Add+Mul-ax0`.
    pub problem: Option<String>,
}

impl TheoryDocument {
    pub fn new(theory: Theory) -> Self {
        TheoryDocument {
            theory,
            conjecture: None,
            problem: None,
        }
    }

    pub fn with_conjecture(mut self, conjecture: Formula) -> Self {
        self.conjecture = Some(conjecture);
        self
    }

    pub fn with_problem(mut self, problem: impl Into<String>) -> Self {
        self.problem = Some(problem.into());
        self
    }
}

/// Injective renaming into the common lexical fragment of SMT-LIB and TPTP:
/// `_` doubles, `'` becomes `_p`, and anything not starting with a lowercase
/// letter gets an `s_` prefix.
pub fn sanitize(name: &str) -> String {
    let mut out = String::with_capacity(name.len());
    for c in name.chars() {
        match c {
            '_' => out.push_str("__"),
            '\'' => out.push_str("_p"),
            c => out.push(c),
        }
    }
    if !out.chars().next().is_some_and(|c| c.is_ascii_lowercase()) {
        out.insert_str(0, "s_");
    }
    out
}
