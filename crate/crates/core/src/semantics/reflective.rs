//! The reflective model over a base interpretation.
//!
//! Reflected-syntax sorts get carriers of actual syntax: reflected variables
//! are variables, reflected terms are base terms, reflected formulas are
//! base formulas, and environments are binding stacks. The reflected
//! constructors build syntax, the evaluation symbols evaluate syntax in the
//! base model under the environment overlay, and the satisfaction predicate
//! is base-model satisfaction itself.

use std::sync::Arc;

use crate::logic::{Formula, Term, Var};
use crate::reflection::{godel_encode, EncodeError, ReflectionMap};

use super::{
    eval_formula, eval_formula_with_scope, Domain, Elem, EnvValue, EvalError, Interpretation,
    SyntaxDomain,
};

fn want_var(e: &Elem, sym: &str) -> Result<Var, EvalError> {
    match e {
        Elem::Var(v) => Ok(v.clone()),
        _ => Err(EvalError::DomainMismatch(sym.to_string())),
    }
}

fn want_term(e: &Elem, sym: &str) -> Result<Term, EvalError> {
    match e {
        Elem::Term(t) => Ok(t.clone()),
        _ => Err(EvalError::DomainMismatch(sym.to_string())),
    }
}

fn want_form(e: &Elem, sym: &str) -> Result<Formula, EvalError> {
    match e {
        Elem::Form(f) => Ok(f.clone()),
        _ => Err(EvalError::DomainMismatch(sym.to_string())),
    }
}

fn want_env(e: &Elem, sym: &str) -> Result<EnvValue, EvalError> {
    match e {
        Elem::Env(env) => Ok(env.clone()),
        _ => Err(EvalError::DomainMismatch(sym.to_string())),
    }
}

/// Evaluates a base term in `base` with an environment stack overlaid on the
/// variable assignment.
fn eval_term_overlaid(
    base: &Interpretation,
    env: &EnvValue,
    term: &Term,
) -> Result<Elem, EvalError> {
    super::eval_term_scoped(base, term, env.frames())
}

/// Builds the reflective model of a base interpretation. Satisfaction
/// queries re-enter the evaluator with `meta_budget` as the quantifier
/// budget for the base formula being tested.
pub fn reflective_model(
    base: &Interpretation,
    map: &ReflectionMap,
    meta_budget: usize,
) -> Interpretation {
    let base = Arc::new(base.clone());
    let mut m = (*base).clone();
    let sig = Arc::new(map.base.clone());

    for sort in map.base.base_sorts() {
        m.domains.insert(
            map.var_sorts[&sort.name].name.clone(),
            Domain::Syntax(SyntaxDomain::Vars(sort.clone())),
        );
        m.domains.insert(
            map.term_sorts[&sort.name].name.clone(),
            Domain::Syntax(SyntaxDomain::Terms(sort.clone(), sig.clone())),
        );
    }
    m.domains.insert(
        map.form.name.clone(),
        Domain::Syntax(SyntaxDomain::Forms(sig.clone())),
    );
    m.domains
        .insert(map.env.name.clone(), Domain::Syntax(SyntaxDomain::Envs));

    // Syntax constructors.
    for (sort_name, v0) in &map.v0 {
        let sort = map.base.sort(sort_name).unwrap().clone();
        m.fun_table(&v0.name, move |_| Ok(Elem::Var(Var::new(0, sort.clone()))));
    }
    for (_, next) in &map.next {
        let name = next.name.clone();
        m.fun_table(&next.name, move |args| {
            let v = want_var(&args[0], &name)?;
            Ok(Elem::Var(Var::new(v.index + 1, v.sort)))
        });
    }
    for (_, inj) in &map.inj {
        let name = inj.name.clone();
        m.fun_table(&inj.name, move |args| {
            Ok(Elem::Term(Term::Var(want_var(&args[0], &name)?)))
        });
    }
    for (base_name, fdot) in &map.dotted_funs {
        let f = map.base.fun(base_name).unwrap().clone();
        let name = fdot.name.clone();
        m.fun_table(&fdot.name, move |args| {
            let ts = args
                .iter()
                .map(|a| want_term(a, &name))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Elem::Term(f.app(ts)))
        });
    }
    for (base_name, pdot) in &map.dotted_preds {
        let p = map.base.pred(base_name).unwrap().clone();
        let name = pdot.name.clone();
        m.fun_table(&pdot.name, move |args| {
            let ts = args
                .iter()
                .map(|a| want_term(a, &name))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Elem::Form(p.app(ts)))
        });
    }
    for (sort_name, eqdot) in &map.eqdot {
        let sort = map.base.sort(sort_name).unwrap().clone();
        let name = eqdot.name.clone();
        m.fun_table(&eqdot.name, move |args| {
            Ok(Elem::Form(Formula::Eq(
                sort.clone(),
                want_term(&args[0], &name)?,
                want_term(&args[1], &name)?,
            )))
        });
    }
    for (_, fa) in &map.foralldot {
        let name = fa.name.clone();
        m.fun_table(&fa.name, move |args| {
            Ok(Elem::Form(Formula::forall(
                want_var(&args[0], &name)?,
                want_form(&args[1], &name)?,
            )))
        });
    }
    m.fun_table(&map.botdot.name, |_| Ok(Elem::Form(Formula::False)));
    {
        let name = map.negdot.name.clone();
        m.fun_table(&map.negdot.name, move |args| {
            Ok(Elem::Form(Formula::not(want_form(&args[0], &name)?)))
        });
    }
    {
        let name = map.ordot.name.clone();
        m.fun_table(&map.ordot.name, move |args| {
            Ok(Elem::Form(Formula::or(
                want_form(&args[0], &name)?,
                want_form(&args[1], &name)?,
            )))
        });
    }

    // Environments and evaluation.
    m.fun_table(&map.empty.name, |_| Ok(Elem::Env(EnvValue::empty())));
    for (_, push) in &map.push {
        let name = push.name.clone();
        m.fun_table(&push.name, move |args| {
            let env = want_env(&args[0], &name)?;
            let var = want_var(&args[1], &name)?;
            Ok(Elem::Env(env.push(var, args[2].clone())))
        });
    }
    for (_, evalv) in &map.evalv {
        let name = evalv.name.clone();
        let base = base.clone();
        m.fun_table(&evalv.name, move |args| {
            let env = want_env(&args[0], &name)?;
            let var = want_var(&args[1], &name)?;
            match env.lookup(&var) {
                Some(value) => Ok(value.clone()),
                // An empty (or non-binding) environment defers to the base
                // model's own variable assignment.
                None => base
                    .assignment
                    .get(&var)
                    .cloned()
                    .ok_or(EvalError::UnassignedVariable(var)),
            }
        });
    }
    for (_, eval) in &map.eval {
        let name = eval.name.clone();
        let base = base.clone();
        m.fun_table(&eval.name, move |args| {
            let env = want_env(&args[0], &name)?;
            let term = want_term(&args[1], &name)?;
            eval_term_overlaid(&base, &env, &term)
        });
    }
    {
        let base = base.clone();
        let name = map.models.name.clone();
        m.pred_table(&map.models.name, move |args| {
            let env = want_env(&args[0], &name)?;
            let formula = want_form(&args[1], &name)?;
            eval_formula_with_scope(&base, &formula, meta_budget, env.frames())
        });
    }

    m
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TruthPredicateError {
    #[error("encoding failed: {0}")]
    Encode(#[from] EncodeError),
    #[error("evaluation failed: {0}")]
    Eval(#[from] EvalError),
    #[error("verdict undecided within budget on the {0} side")]
    Undecided(&'static str),
}

/// Compares direct satisfaction of a closed core formula against reflected
/// satisfaction of its encoding in the reflective model. Returns whether the
/// two verdicts agree.
pub fn check_truth_predicate(
    base: &Interpretation,
    map: &ReflectionMap,
    formula: &Formula,
    budget: usize,
) -> Result<bool, TruthPredicateError> {
    let reflective = reflective_model(base, map, budget);
    let code = godel_encode(formula, map)?;
    let reflected = map.models.app(vec![map.empty.app(vec![]), code]);

    let direct = eval_formula(base, formula, budget)?;
    if !direct.is_definite() {
        return Err(TruthPredicateError::Undecided("direct"));
    }
    let via_code = eval_formula(&reflective, &reflected, budget)?;
    if !via_code.is_definite() {
        return Err(TruthPredicateError::Undecided("reflected"));
    }
    Ok(direct == via_code)
}

/// Convenience wrapper: the reflected-satisfaction formula
/// `models(empty, ⌜φ⌝)` for a core formula.
pub fn reflected_statement(formula: &Formula, map: &ReflectionMap) -> Result<Formula, EncodeError> {
    let code = godel_encode(formula, map)?;
    Ok(map.models.app(vec![map.empty.app(vec![]), code]))
}
