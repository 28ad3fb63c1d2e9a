//! Partial evaluation of reflective satisfaction and evaluation redexes.
//!
//! The satisfaction and evaluation axioms, oriented left to right, form a
//! terminating rewrite system on satisfaction statements over ground codes
//! and push-chains: every step strips one code constructor. This module
//! computes the normal form directly by structural recursion, which yields
//! the same result as innermost rewriting. Environment lookups that skip a
//! frame rely on syntactic distinctness of the ground variable codes, and a
//! lookup that reaches `empty` is reported as stuck rather than guessed,
//! since nothing constrains variable values in the empty environment.

use std::collections::BTreeSet;

use crate::logic::ops::smallest_fresh;
use crate::logic::{Formula, Sort, Term, Var};
use crate::reflection::{decode_var, ReflectionMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartialEvalError {
    /// A variable lookup reached the empty environment; the unresolved
    /// lookup is reported as-is.
    #[error("lookup stuck on the empty environment: {0:?}")]
    Stuck(Term),
    /// A reflective subterm outside the ground code / push-chain fragment.
    #[error("unsupported reflective subterm: {0:?}")]
    Unsupported(Term),
}

/// A symbolic environment: a stack of frames binding a ground variable code
/// to a base-term value.
#[derive(Clone, Debug, Default)]
struct SymEnv {
    frames: Vec<SymFrame>,
}

#[derive(Clone, Debug)]
struct SymFrame {
    sort: Sort,
    var: Var,
    value: Term,
}

impl SymEnv {
    fn push(&self, sort: Sort, var: Var, value: Term) -> SymEnv {
        let mut frames = self.frames.clone();
        frames.push(SymFrame { sort, var, value });
        SymEnv { frames }
    }

    /// Innermost binding of `var`; frames of other sorts and frames binding
    /// a provably different variable are skipped.
    fn lookup(&self, sort: &Sort, var: &Var) -> Option<&Term> {
        self.frames
            .iter()
            .rev()
            .find(|f| f.sort == *sort && f.var == *var)
            .map(|f| &f.value)
    }

    /// Variables of `sort` free in any bound value, for fresh-name choice.
    fn avoid_set(&self, sort: &Sort) -> BTreeSet<Var> {
        self.frames
            .iter()
            .flat_map(|f| f.value.free_vars())
            .filter(|v| v.sort == *sort)
            .collect()
    }
}

/// Rewrites all satisfaction and evaluation redexes in a formula over the
/// extended signature to base-signature formulas. Subterms not mentioning
/// the evaluation vocabulary pass through unchanged.
pub fn partial_eval(formula: &Formula, map: &ReflectionMap) -> Result<Formula, PartialEvalError> {
    pe_formula(formula, map)
}

fn pe_formula(formula: &Formula, map: &ReflectionMap) -> Result<Formula, PartialEvalError> {
    match formula {
        Formula::False | Formula::True => Ok(formula.clone()),
        Formula::Pred(p, args) if *p == map.models => {
            let env = parse_env(&args[0], map)?;
            unfold_models(&env, &args[1], map)
        }
        Formula::Pred(p, args) => {
            let args = args
                .iter()
                .map(|t| pe_term(t, map))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Formula::Pred(p.clone(), args))
        }
        Formula::Eq(s, a, b) => Ok(Formula::Eq(s.clone(), pe_term(a, map)?, pe_term(b, map)?)),
        Formula::Not(f) => Ok(Formula::not(pe_formula(f, map)?)),
        Formula::Or(a, b) => Ok(Formula::or(pe_formula(a, map)?, pe_formula(b, map)?)),
        Formula::And(a, b) => Ok(Formula::and(pe_formula(a, map)?, pe_formula(b, map)?)),
        Formula::Implies(a, b) => Ok(Formula::implies(pe_formula(a, map)?, pe_formula(b, map)?)),
        Formula::Iff(a, b) => Ok(Formula::iff(pe_formula(a, map)?, pe_formula(b, map)?)),
        Formula::Forall(v, f) => Ok(Formula::forall(v.clone(), pe_formula(f, map)?)),
        Formula::Exists(v, f) => Ok(Formula::exists(v.clone(), pe_formula(f, map)?)),
    }
}

fn pe_term(term: &Term, map: &ReflectionMap) -> Result<Term, PartialEvalError> {
    match term {
        Term::Var(_) => Ok(term.clone()),
        Term::App(f, args) => {
            if map.eval.values().any(|e| e == f) {
                let env = parse_env(&args[0], map)?;
                return unfold_eval(&env, &args[1], map);
            }
            if let Some((sort_name, _)) = map.evalv.iter().find(|(_, e)| *e == f) {
                let env = parse_env(&args[0], map)?;
                let sort = map.base.sort(sort_name).unwrap();
                let var = ground_var_code(&args[1], map)?;
                return lookup(&env, sort, &var, &args[1], map);
            }
            let args = args
                .iter()
                .map(|t| pe_term(t, map))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Term::App(f.clone(), args))
        }
    }
}

/// Parses a push-chain of sort `env` into a symbolic environment. Frame
/// variables must be ground codes; values are partially evaluated base
/// terms.
fn parse_env(term: &Term, map: &ReflectionMap) -> Result<SymEnv, PartialEvalError> {
    let Term::App(head, args) = term else {
        return Err(PartialEvalError::Unsupported(term.clone()));
    };
    if *head == map.empty {
        return Ok(SymEnv::default());
    }
    if let Some((sort_name, _)) = map.push.iter().find(|(_, p)| *p == head) {
        let prev = parse_env(&args[0], map)?;
        let sort = map.base.sort(sort_name).unwrap().clone();
        let var = ground_var_code(&args[1], map)?;
        let value = pe_term(&args[2], map)?;
        return Ok(prev.push(sort, var, value));
    }
    Err(PartialEvalError::Unsupported(term.clone()))
}

/// Decodes a ground `next^i(v0)` chain; anything else cannot be compared
/// syntactically and falls outside the supported fragment.
fn ground_var_code(term: &Term, map: &ReflectionMap) -> Result<Var, PartialEvalError> {
    decode_var(term, map).map_err(|_| PartialEvalError::Unsupported(term.clone()))
}

fn lookup(
    env: &SymEnv,
    sort: &Sort,
    var: &Var,
    var_code: &Term,
    map: &ReflectionMap,
) -> Result<Term, PartialEvalError> {
    match env.lookup(sort, var) {
        Some(value) => Ok(value.clone()),
        None => {
            let stuck = map.evalv[&sort.name].app(vec![map.empty.app(vec![]), var_code.clone()]);
            Err(PartialEvalError::Stuck(stuck))
        }
    }
}

/// Unfolds a satisfaction statement over a code, structurally.
fn unfold_models(
    env: &SymEnv,
    code: &Term,
    map: &ReflectionMap,
) -> Result<Formula, PartialEvalError> {
    let Term::App(head, args) = code else {
        return Err(PartialEvalError::Unsupported(code.clone()));
    };
    if *head == map.botdot {
        return Ok(Formula::False);
    }
    if *head == map.negdot {
        return Ok(Formula::not(unfold_models(env, &args[0], map)?));
    }
    if *head == map.ordot {
        return Ok(Formula::or(
            unfold_models(env, &args[0], map)?,
            unfold_models(env, &args[1], map)?,
        ));
    }
    if let Some((sort_name, _)) = map.foralldot.iter().find(|(_, fa)| *fa == head) {
        let sort = map.base.sort(sort_name).unwrap().clone();
        let var = ground_var_code(&args[0], map)?;
        // Fresh object variable, avoiding anything visible in bound values.
        let fresh = smallest_fresh(&sort, &env.avoid_set(&sort));
        let inner = env.push(sort.clone(), var, Term::Var(fresh.clone()));
        return Ok(Formula::forall(
            fresh,
            unfold_models(&inner, &args[1], map)?,
        ));
    }
    if let Some((sort_name, _)) = map.eqdot.iter().find(|(_, eq)| *eq == head) {
        let sort = map.base.sort(sort_name).unwrap().clone();
        return Ok(Formula::Eq(
            sort,
            unfold_eval(env, &args[0], map)?,
            unfold_eval(env, &args[1], map)?,
        ));
    }
    if let Some((base_name, _)) = map.dotted_preds.iter().find(|(_, pd)| *pd == head) {
        let p = map.base.pred(base_name).unwrap();
        let ts = args
            .iter()
            .map(|a| unfold_eval(env, a, map))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(p.app(ts));
    }
    Err(PartialEvalError::Unsupported(code.clone()))
}

/// Unfolds the evaluation of a term code: injections become lookups,
/// reflected applications map to their base functions.
fn unfold_eval(env: &SymEnv, code: &Term, map: &ReflectionMap) -> Result<Term, PartialEvalError> {
    let Term::App(head, args) = code else {
        return Err(PartialEvalError::Unsupported(code.clone()));
    };
    if let Some((sort_name, _)) = map.inj.iter().find(|(_, inj)| *inj == head) {
        let sort = map.base.sort(sort_name).unwrap();
        let var = ground_var_code(&args[0], map)?;
        return lookup(env, sort, &var, &args[0], map);
    }
    if let Some((base_name, _)) = map.dotted_funs.iter().find(|(_, fd)| *fd == head) {
        let f = map.base.fun(base_name).unwrap();
        let ts = args
            .iter()
            .map(|a| unfold_eval(env, a, map))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(f.app(ts));
    }
    Err(PartialEvalError::Unsupported(code.clone()))
}
