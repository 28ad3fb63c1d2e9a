//! Structural induction: meta-level scheme instances, the reflective
//! induction axiom that replaces the infinite scheme with a single formula
//! quantifying over reflected formulas, and constructor disjointness and
//! injectivity axioms.

use std::collections::BTreeSet;

use crate::logic::ops::smallest_fresh;
use crate::logic::{Formula, FunSym, InductiveDatatype, Term, Theory, Var};
use crate::reflection::{reflective_extension, ReflectionError, ReflectionMap};

/// An induction goal: prove `body` for all values of `hole_var`.
#[derive(Clone, Debug)]
pub struct InductionTemplate {
    pub datatype: InductiveDatatype,
    pub hole_var: Var,
    pub body: Formula,
}

impl InductionTemplate {
    pub fn new(datatype: InductiveDatatype, hole_var: Var, body: Formula) -> Self {
        debug_assert_eq!(hole_var.sort, datatype.sort);
        InductionTemplate {
            datatype,
            hole_var,
            body,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("induction variable has sort `{hole}` but the datatype is `{datatype}`")]
pub struct InductionSortMismatch {
    pub hole: String,
    pub datatype: String,
}

/// One first-order instance of the structural induction scheme:
/// `(⋀_c case_c) → ∀x. φ[x]` where each constructor case assumes the body
/// for the recursive arguments. A case without hypotheses is emitted without
/// the vacuous `⊤ →` guard.
pub fn induction_scheme_instance(
    template: &InductionTemplate,
) -> Result<Formula, InductionSortMismatch> {
    if template.hole_var.sort != template.datatype.sort {
        return Err(InductionSortMismatch {
            hole: template.hole_var.sort.name.clone(),
            datatype: template.datatype.sort.name.clone(),
        });
    }
    let x = &template.hole_var;
    let body = &template.body;

    let mut cases = Vec::new();
    for ctor in &template.datatype.ctors {
        let args = fresh_ctor_args(ctor, body, x);
        let recursive = template.datatype.recursive_positions(ctor);

        let hypotheses: Vec<Formula> = recursive
            .iter()
            .map(|&i| subst_hole(body, x, &Term::Var(args[i].clone())))
            .collect();
        let conclusion = subst_hole(
            body,
            x,
            &ctor.app(args.iter().cloned().map(Term::Var).collect()),
        );
        let mut case = if hypotheses.is_empty() {
            conclusion
        } else {
            Formula::implies(Formula::conj(hypotheses), conclusion)
        };
        for arg in args.into_iter().rev() {
            case = Formula::forall(arg, case);
        }
        cases.push(case);
    }

    Ok(Formula::implies(
        Formula::conj(cases),
        Formula::forall(x.clone(), body.clone()),
    ))
}

/// Case argument variables, chosen to avoid the body's free variables and
/// the hole itself so the substitutions below cannot capture.
fn fresh_ctor_args(ctor: &FunSym, body: &Formula, hole: &Var) -> Vec<Var> {
    let mut avoid: BTreeSet<Var> = body.free_vars();
    avoid.insert(hole.clone());
    let mut args = Vec::new();
    for sort in &ctor.domain {
        let v = smallest_fresh(sort, &avoid);
        avoid.insert(v.clone());
        args.push(v);
    }
    args
}

fn subst_hole(body: &Formula, hole: &Var, term: &Term) -> Formula {
    body.substitute(hole, term)
        .expect("hole substitution is sort-correct by construction")
}

/// The reflective induction axiom for a datatype: one closed formula
/// quantifying over reflected formulas,
/// `∀φ:form. (⋀_c case_{φ,c}) → ∀x:τ. True[φ,x]`
/// with `True[φ,n] = (push_τ(empty, v0_τ, n) ⊨ φ)`.
pub fn reflective_induction_axiom(datatype: &InductiveDatatype, map: &ReflectionMap) -> Formula {
    let phi = Var::new(0, map.form.clone());
    let tau = &datatype.sort;

    let truth = |value: Term| -> Formula {
        let env = map.push[&tau.name].app(vec![
            map.empty.app(vec![]),
            map.v0[&tau.name].app(vec![]),
            value,
        ]);
        map.models.app(vec![env, Term::Var(phi.clone())])
    };

    let mut cases = Vec::new();
    for ctor in &datatype.ctors {
        let mut counters: std::collections::BTreeMap<String, usize> = Default::default();
        let args: Vec<Var> = ctor
            .domain
            .iter()
            .map(|sort| {
                let idx = counters.entry(sort.name.clone()).or_insert(0);
                let v = Var::new(*idx, sort.clone());
                *idx += 1;
                v
            })
            .collect();
        let recursive = datatype.recursive_positions(ctor);
        let hypotheses: Vec<Formula> = recursive
            .iter()
            .map(|&i| truth(Term::Var(args[i].clone())))
            .collect();
        let conclusion = truth(ctor.app(args.iter().cloned().map(Term::Var).collect()));
        let mut case = if hypotheses.is_empty() {
            conclusion
        } else {
            Formula::implies(Formula::conj(hypotheses), conclusion)
        };
        for arg in args.into_iter().rev() {
            case = Formula::forall(arg, case);
        }
        cases.push(case);
    }

    let x = Var::new(0, tau.clone());
    Formula::forall(
        phi.clone(),
        Formula::implies(
            Formula::conj(cases),
            Formula::forall(x.clone(), truth(Term::Var(x))),
        ),
    )
}

/// Constructor disjointness and injectivity. Disjointness for every unordered
/// pair of distinct constructors, injectivity for every constructor of
/// positive arity; no exhaustiveness axiom.
pub fn ctor_axioms(datatype: &InductiveDatatype) -> Vec<Formula> {
    let mut axioms = Vec::new();

    for (i, c) in datatype.ctors.iter().enumerate() {
        for d in &datatype.ctors[i + 1..] {
            let (c_args, counters) = indexed_args(c, Counters::default());
            let (d_args, _) = indexed_args(d, counters);
            let disj = Formula::not(Formula::eq(
                c.app(c_args.iter().cloned().map(Term::Var).collect()),
                d.app(d_args.iter().cloned().map(Term::Var).collect()),
            ));
            axioms.push(close_over(c_args.into_iter().chain(d_args), disj));
        }
    }

    for c in &datatype.ctors {
        if c.arity() == 0 {
            continue;
        }
        let (xs, counters) = indexed_args(c, Default::default());
        let (ys, _) = indexed_args(c, counters);
        let component_eqs: Vec<Formula> = xs
            .iter()
            .zip(&ys)
            .map(|(x, y)| Formula::eq(Term::Var(x.clone()), Term::Var(y.clone())))
            .collect();
        let inj = Formula::implies(
            Formula::eq(
                c.app(xs.iter().cloned().map(Term::Var).collect()),
                c.app(ys.iter().cloned().map(Term::Var).collect()),
            ),
            Formula::conj(component_eqs),
        );
        axioms.push(close_over(xs.into_iter().chain(ys), inj));
    }

    axioms
}

type Counters = std::collections::BTreeMap<String, usize>;

fn indexed_args(ctor: &FunSym, mut counters: Counters) -> (Vec<Var>, Counters) {
    let args = ctor
        .domain
        .iter()
        .map(|sort| {
            let idx = counters.entry(sort.name.clone()).or_insert(0);
            let v = Var::new(*idx, sort.clone());
            *idx += 1;
            v
        })
        .collect();
    (args, counters)
}

fn close_over(vars: impl DoubleEndedIterator<Item = Var>, body: Formula) -> Formula {
    vars.rev().fold(body, |f, v| Formula::forall(v, f))
}

/// The reflective inductive extension: the reflective extension plus, for
/// every datatype, its reflective induction axiom and constructor axioms.
pub fn reflective_inductive_extension(
    theory: &Theory,
) -> Result<(Theory, ReflectionMap), ReflectionError> {
    let (mut extended, map) = reflective_extension(theory)?;
    for datatype in &theory.datatypes {
        extended.axioms.push(reflective_induction_axiom(datatype, &map));
        extended.axioms.extend(ctor_axioms(datatype));
    }
    extended.name = format!("refl_ind({})", theory.name);
    Ok((extended, map))
}
