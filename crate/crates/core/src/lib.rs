//! Reflective extensions of multi-sorted first-order theories.
//!
//! Given a base theory, this crate constructs its reflective extension: new
//! sorts for the theory's own variables, terms and formulas, an environment
//! sort for variable bindings, axioms defining evaluation and satisfaction of
//! reflected syntax, and a structural encoding of formulas as ground terms.
//! On top of that it derives a single reflective induction axiom per
//! inductive datatype, replacing the infinite first-order induction scheme.
//!
//! The crate also ships an executable model layer for checking the
//! construction at small scale (finite and generator-backed interpretations,
//! a reflective model builder, and a partial evaluator for satisfaction
//! statements), the benchmark suites built from the catalog of small
//! arithmetic and list theories, writers for SMT-LIB 2 and TPTP TFF, and a
//! harness for running external provers on the generated problems.

pub mod benchgen;
pub mod induction;
pub mod logic;
pub mod reflection;
pub mod runner;
pub mod semantics;
pub mod serialize;

pub use logic::{Formula, FunSym, InductiveDatatype, PredSym, Signature, Sort, SortKind, Term, Theory, Var};
pub use reflection::ReflectionMap;
