//! Executable model theory.
//!
//! Interpretations carry finite carriers, the generator-backed carriers of
//! the standard arithmetic/list models, or syntactic carriers (for reflective
//! models). Evaluation is three-valued: quantifiers over finite carriers are
//! exact, quantifiers over infinite carriers are explored up to a budget and
//! report [`TruthValue::Unknown`] when undecided. A definite verdict is never
//! wrong.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::logic::{Formula, Signature, Sort, Term, Var};

mod enumerate;
mod models;
mod parteval;
mod reflective;

pub use enumerate::{
    enumerate_formulas, enumerate_formulas_with_free, formula_levels, lists_by_weight,
    term_levels, terms_up_to,
};
pub use models::{
    all_interpretations, modular_nat_model, sample_models, standard_model, StandardModelError,
};
pub use parteval::{partial_eval, PartialEvalError};
pub use reflective::{
    check_truth_predicate, reflected_statement, reflective_model, TruthPredicateError,
};

/// Verdict of bounded evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TruthValue {
    True,
    False,
    /// A quantifier over an infinite carrier exhausted its enumeration
    /// budget before the verdict was decided.
    Unknown,
}

impl TruthValue {
    pub fn from_bool(b: bool) -> Self {
        if b {
            TruthValue::True
        } else {
            TruthValue::False
        }
    }

    pub fn negate(self) -> Self {
        match self {
            TruthValue::True => TruthValue::False,
            TruthValue::False => TruthValue::True,
            TruthValue::Unknown => TruthValue::Unknown,
        }
    }

    pub fn and(self, other: Self) -> Self {
        match (self, other) {
            (TruthValue::False, _) | (_, TruthValue::False) => TruthValue::False,
            (TruthValue::True, TruthValue::True) => TruthValue::True,
            _ => TruthValue::Unknown,
        }
    }

    pub fn or(self, other: Self) -> Self {
        match (self, other) {
            (TruthValue::True, _) | (_, TruthValue::True) => TruthValue::True,
            (TruthValue::False, TruthValue::False) => TruthValue::False,
            _ => TruthValue::Unknown,
        }
    }

    pub fn is_definite(self) -> bool {
        self != TruthValue::Unknown
    }
}

/// An element of some carrier.
#[derive(Clone, Debug, PartialEq)]
pub enum Elem {
    /// Element of a finite carrier `{0, …, n-1}`.
    Fin(usize),
    /// Element of the standard natural-number carrier.
    Nat(u64),
    /// Element of the standard list carrier: a list of naturals.
    List(Vec<u64>),
    /// Element of a reflected-variable carrier.
    Var(Var),
    /// Element of a reflected-term carrier: an actual base term.
    Term(Term),
    /// Element of the reflected-formula carrier: an actual base formula.
    Form(Formula),
    /// Element of the environment carrier.
    Env(EnvValue),
}

/// A stack of variable bindings. `lookup` returns the innermost binding.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct EnvValue {
    frames: Vec<(Var, Elem)>,
}

impl EnvValue {
    pub fn empty() -> Self {
        EnvValue::default()
    }

    pub fn push(&self, var: Var, value: Elem) -> Self {
        let mut frames = self.frames.clone();
        frames.push((var, value));
        EnvValue { frames }
    }

    pub fn lookup(&self, var: &Var) -> Option<&Elem> {
        self.frames
            .iter()
            .rev()
            .find(|(v, _)| v == var)
            .map(|(_, e)| e)
    }

    pub fn frames(&self) -> &[(Var, Elem)] {
        &self.frames
    }
}

/// A carrier set.
#[derive(Clone, Debug)]
pub enum Domain {
    /// Exactly `n` elements `Fin(0)..Fin(n-1)`; quantification is exact.
    Finite(usize),
    /// The natural numbers; quantification is budget-bounded.
    Nat,
    /// Lists of naturals, enumerated by total weight (length plus element
    /// sum); budget-bounded.
    List,
    /// A syntactic carrier of a reflective model; quantification samples a
    /// budget-bounded prefix and can refute but never confirm.
    Syntax(SyntaxDomain),
}

#[derive(Clone, Debug)]
pub enum SyntaxDomain {
    /// Variables of the given base sort.
    Vars(Sort),
    /// Terms of the given base sort, over the given base signature.
    Terms(Sort, Arc<Signature>),
    /// Formulas over the given base signature.
    Forms(Arc<Signature>),
    /// Environment stacks (sampled shallowly).
    Envs,
}

impl Domain {
    /// Elements to try when evaluating a quantifier, together with whether
    /// the listing is exhaustive.
    fn elements(&self, budget: usize) -> (Vec<Elem>, bool) {
        match self {
            Domain::Finite(n) => ((0..*n).map(Elem::Fin).collect(), true),
            Domain::Nat => ((0..budget as u64).map(Elem::Nat).collect(), false),
            Domain::List => (
                enumerate::lists_by_weight(budget).into_iter().map(Elem::List).collect(),
                false,
            ),
            Domain::Syntax(syn) => (syn.sample(budget), false),
        }
    }
}

impl SyntaxDomain {
    fn sample(&self, budget: usize) -> Vec<Elem> {
        match self {
            SyntaxDomain::Vars(sort) => (0..budget)
                .map(|i| Elem::Var(Var::new(i, sort.clone())))
                .collect(),
            SyntaxDomain::Terms(sort, sig) => {
                let mut out = Vec::new();
                for level in term_levels(sig, sort, 2, 2) {
                    for t in level {
                        if out.len() == budget {
                            return out;
                        }
                        out.push(Elem::Term(t));
                    }
                }
                out
            }
            SyntaxDomain::Forms(sig) => {
                let free: std::collections::BTreeSet<Var> = sig
                    .base_sorts()
                    .flat_map(|s| (0..2).map(move |i| Var::new(i, s.clone())))
                    .collect();
                enumerate_formulas_with_free(sig, 1, 2, &free)
                    .take(budget)
                    .map(Elem::Form)
                    .collect()
            }
            SyntaxDomain::Envs => vec![Elem::Env(EnvValue::empty())],
        }
    }
}

pub type FunMeaning = Arc<dyn Fn(&[Elem]) -> Result<Elem, EvalError> + Send + Sync>;
pub type PredMeaning = Arc<dyn Fn(&[Elem]) -> Result<TruthValue, EvalError> + Send + Sync>;

/// A first-order interpretation: carriers per sort, meanings per symbol, and
/// a variable assignment for free variables.
#[derive(Clone)]
pub struct Interpretation {
    pub domains: BTreeMap<String, Domain>,
    pub funs: BTreeMap<String, FunMeaning>,
    pub preds: BTreeMap<String, PredMeaning>,
    pub assignment: BTreeMap<Var, Elem>,
}

impl Interpretation {
    pub fn new() -> Self {
        Interpretation {
            domains: BTreeMap::new(),
            funs: BTreeMap::new(),
            preds: BTreeMap::new(),
            assignment: BTreeMap::new(),
        }
    }

    pub fn with_assignment(mut self, var: Var, value: Elem) -> Self {
        self.assignment.insert(var, value);
        self
    }

    pub fn fun_table(&mut self, name: &str, f: impl Fn(&[Elem]) -> Result<Elem, EvalError> + Send + Sync + 'static) {
        self.funs.insert(name.to_string(), Arc::new(f));
    }

    pub fn pred_table(
        &mut self,
        name: &str,
        p: impl Fn(&[Elem]) -> Result<TruthValue, EvalError> + Send + Sync + 'static,
    ) {
        self.preds.insert(name.to_string(), Arc::new(p));
    }
}

impl Default for Interpretation {
    fn default() -> Self {
        Interpretation::new()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("variable x{}:{} has no assigned value", .0.index, .0.sort.name)]
    UnassignedVariable(Var),
    #[error("no meaning for symbol `{0}`")]
    NoMeaning(String),
    #[error("no carrier for sort `{0}`")]
    NoDomain(String),
    #[error("meaning of `{0}` applied to an element of the wrong carrier")]
    DomainMismatch(String),
}

/// Evaluates a term under the interpretation's assignment.
pub fn eval_term(interp: &Interpretation, term: &Term) -> Result<Elem, EvalError> {
    eval_term_scoped(interp, term, &[])
}

/// Evaluates a term with quantifier-scope bindings overlaid on the
/// assignment; innermost bindings take precedence.
pub fn eval_term_scoped(
    interp: &Interpretation,
    term: &Term,
    scope: &[(Var, Elem)],
) -> Result<Elem, EvalError> {
    match term {
        Term::Var(v) => scope
            .iter()
            .rev()
            .find(|(w, _)| w == v)
            .map(|(_, e)| e.clone())
            .or_else(|| interp.assignment.get(v).cloned())
            .ok_or_else(|| EvalError::UnassignedVariable(v.clone())),
        Term::App(f, args) => {
            let meaning = interp
                .funs
                .get(&f.name)
                .ok_or_else(|| EvalError::NoMeaning(f.name.clone()))?;
            let values = args
                .iter()
                .map(|a| eval_term_scoped(interp, a, scope))
                .collect::<Result<Vec<_>, _>>()?;
            meaning(&values)
        }
    }
}

/// Tarskian evaluation with a per-quantifier enumeration budget for infinite
/// carriers.
pub fn eval_formula(
    interp: &Interpretation,
    formula: &Formula,
    budget: usize,
) -> Result<TruthValue, EvalError> {
    let mut scope = Vec::new();
    eval_in_scope(interp, formula, budget, &mut scope)
}

/// Evaluation entry point with an initial quantifier scope; used by the
/// reflective model to overlay an environment.
pub fn eval_formula_with_scope(
    interp: &Interpretation,
    formula: &Formula,
    budget: usize,
    initial_scope: &[(Var, Elem)],
) -> Result<TruthValue, EvalError> {
    let mut scope = initial_scope.to_vec();
    eval_in_scope(interp, formula, budget, &mut scope)
}

fn eval_in_scope(
    interp: &Interpretation,
    formula: &Formula,
    budget: usize,
    scope: &mut Vec<(Var, Elem)>,
) -> Result<TruthValue, EvalError> {
    match formula {
        Formula::False => Ok(TruthValue::False),
        Formula::True => Ok(TruthValue::True),
        Formula::Pred(p, args) => {
            let meaning = interp
                .preds
                .get(&p.name)
                .ok_or_else(|| EvalError::NoMeaning(p.name.clone()))?;
            let values = args
                .iter()
                .map(|a| eval_term_scoped(interp, a, scope))
                .collect::<Result<Vec<_>, _>>()?;
            meaning(&values)
        }
        Formula::Eq(_, a, b) => {
            let left = eval_term_scoped(interp, a, scope)?;
            let right = eval_term_scoped(interp, b, scope)?;
            Ok(TruthValue::from_bool(left == right))
        }
        Formula::Not(f) => Ok(eval_in_scope(interp, f, budget, scope)?.negate()),
        Formula::Or(a, b) => {
            let left = eval_in_scope(interp, a, budget, scope)?;
            if left == TruthValue::True {
                return Ok(TruthValue::True);
            }
            Ok(left.or(eval_in_scope(interp, b, budget, scope)?))
        }
        Formula::And(a, b) => {
            let left = eval_in_scope(interp, a, budget, scope)?;
            if left == TruthValue::False {
                return Ok(TruthValue::False);
            }
            Ok(left.and(eval_in_scope(interp, b, budget, scope)?))
        }
        Formula::Implies(a, b) => {
            let left = eval_in_scope(interp, a, budget, scope)?;
            if left == TruthValue::False {
                return Ok(TruthValue::True);
            }
            Ok(left.negate().or(eval_in_scope(interp, b, budget, scope)?))
        }
        Formula::Iff(a, b) => {
            let left = eval_in_scope(interp, a, budget, scope)?;
            let right = eval_in_scope(interp, b, budget, scope)?;
            Ok(match (left, right) {
                (TruthValue::Unknown, _) | (_, TruthValue::Unknown) => TruthValue::Unknown,
                (l, r) => TruthValue::from_bool(l == r),
            })
        }
        Formula::Forall(v, body) => {
            let domain = interp
                .domains
                .get(&v.sort.name)
                .ok_or_else(|| EvalError::NoDomain(v.sort.name.clone()))?;
            let (elements, exhaustive) = domain.elements(budget);
            let mut saw_unknown = false;
            for elem in elements {
                scope.push((v.clone(), elem));
                let verdict = eval_in_scope(interp, body, budget, scope);
                scope.pop();
                match verdict? {
                    TruthValue::False => return Ok(TruthValue::False),
                    TruthValue::Unknown => saw_unknown = true,
                    TruthValue::True => {}
                }
            }
            if exhaustive && !saw_unknown {
                Ok(TruthValue::True)
            } else {
                Ok(TruthValue::Unknown)
            }
        }
        Formula::Exists(v, body) => {
            let domain = interp
                .domains
                .get(&v.sort.name)
                .ok_or_else(|| EvalError::NoDomain(v.sort.name.clone()))?;
            let (elements, exhaustive) = domain.elements(budget);
            let mut saw_unknown = false;
            for elem in elements {
                scope.push((v.clone(), elem));
                let verdict = eval_in_scope(interp, body, budget, scope);
                scope.pop();
                match verdict? {
                    TruthValue::True => return Ok(TruthValue::True),
                    TruthValue::Unknown => saw_unknown = true,
                    TruthValue::False => {}
                }
            }
            if exhaustive && !saw_unknown {
                Ok(TruthValue::False)
            } else {
                Ok(TruthValue::Unknown)
            }
        }
    }
}

#[cfg(test)]
mod tests;
