//! Pure operations on terms and formulas: free variables, capture-avoiding
//! substitution, desugaring to the core connectives, and alpha-equivalence.

use std::collections::{BTreeSet, HashMap};

use super::{Formula, Sort, Term, Var};

impl Term {
    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::App(_, args) => {
                for a in args {
                    a.collect_vars(out);
                }
            }
        }
    }

    /// Replaces every occurrence of `x` by `t`. Terms have no binders, so no
    /// capture can happen here.
    pub fn substitute(&self, x: &Var, t: &Term) -> Term {
        match self {
            Term::Var(v) if v == x => t.clone(),
            Term::Var(_) => self.clone(),
            Term::App(f, args) => Term::App(
                f.clone(),
                args.iter().map(|a| a.substitute(x, t)).collect(),
            ),
        }
    }
}

/// Substituting a term whose sort does not match the variable's.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot substitute a term of sort `{term_sort}` for a variable of sort `{var_sort}`")]
pub struct SortMismatch {
    pub var_sort: String,
    pub term_sort: String,
}

impl Formula {
    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<Var>, out: &mut BTreeSet<Var>) {
        match self {
            Formula::False | Formula::True => {}
            Formula::Pred(_, args) => {
                let mut vars = BTreeSet::new();
                for a in args {
                    a.collect_vars(&mut vars);
                }
                out.extend(vars.into_iter().filter(|v| !bound.contains(v)));
            }
            Formula::Eq(_, a, b) => {
                let mut vars = BTreeSet::new();
                a.collect_vars(&mut vars);
                b.collect_vars(&mut vars);
                out.extend(vars.into_iter().filter(|v| !bound.contains(v)));
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::Or(a, b)
            | Formula::And(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                bound.push(v.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Capture-avoiding substitution of `t` for free occurrences of `x`.
    /// Binders that would capture a free variable of `t` are renamed to the
    /// smallest fresh index of their sort.
    pub fn substitute(&self, x: &Var, t: &Term) -> Result<Formula, SortMismatch> {
        if x.sort != *t.sort() {
            return Err(SortMismatch {
                var_sort: x.sort.name.clone(),
                term_sort: t.sort().name.clone(),
            });
        }
        Ok(self.subst_unchecked(x, t))
    }

    fn subst_unchecked(&self, x: &Var, t: &Term) -> Formula {
        match self {
            Formula::False | Formula::True => self.clone(),
            Formula::Pred(p, args) => Formula::Pred(
                p.clone(),
                args.iter().map(|a| a.substitute(x, t)).collect(),
            ),
            Formula::Eq(s, a, b) => {
                Formula::Eq(s.clone(), a.substitute(x, t), b.substitute(x, t))
            }
            Formula::Not(f) => Formula::not(f.subst_unchecked(x, t)),
            Formula::Or(a, b) => Formula::or(a.subst_unchecked(x, t), b.subst_unchecked(x, t)),
            Formula::And(a, b) => Formula::and(a.subst_unchecked(x, t), b.subst_unchecked(x, t)),
            Formula::Implies(a, b) => {
                Formula::implies(a.subst_unchecked(x, t), b.subst_unchecked(x, t))
            }
            Formula::Iff(a, b) => Formula::iff(a.subst_unchecked(x, t), b.subst_unchecked(x, t)),
            Formula::Forall(v, f) => {
                let (v, f) = subst_under_binder(v, f, x, t);
                Formula::forall(v, f)
            }
            Formula::Exists(v, f) => {
                let (v, f) = subst_under_binder(v, f, x, t);
                Formula::exists(v, f)
            }
        }
    }
}

fn subst_under_binder(v: &Var, body: &Formula, x: &Var, t: &Term) -> (Var, Formula) {
    if v == x {
        // The binder shadows the substituted variable.
        return (v.clone(), body.clone());
    }
    if !body.free_vars().contains(x) {
        return (v.clone(), body.clone());
    }
    let t_free = t.free_vars();
    if t_free.contains(v) {
        // Rename the binder before substituting.
        let mut avoid: BTreeSet<Var> = body.free_vars();
        avoid.extend(t_free);
        avoid.insert(x.clone());
        let fresh = smallest_fresh(&v.sort, &avoid);
        let renamed = body.subst_unchecked(v, &Term::Var(fresh.clone()));
        (fresh, renamed.subst_unchecked(x, t))
    } else {
        (v.clone(), body.subst_unchecked(x, t))
    }
}

/// The variable of `sort` with the smallest index not in `avoid`.
pub fn smallest_fresh(sort: &Sort, avoid: &BTreeSet<Var>) -> Var {
    let mut index = 0;
    while avoid.contains(&Var::new(index, sort.clone())) {
        index += 1;
    }
    Var::new(index, sort.clone())
}

impl Formula {
    /// Rewrites to the core connective set `{⊥, P, ≈, ¬, ∨, ∀}`:
    /// `φ∧ψ ↦ ¬(¬φ∨¬ψ)`, `φ→ψ ↦ ¬φ∨ψ`, `φ↔ψ ↦ (φ→ψ)∧(ψ→φ)` then recurse,
    /// `∃x.φ ↦ ¬∀x.¬φ`, `⊤ ↦ ¬⊥`. Idempotent.
    pub fn normalize(&self) -> Formula {
        match self {
            Formula::False | Formula::Pred(..) | Formula::Eq(..) => self.clone(),
            Formula::True => Formula::not(Formula::False),
            Formula::Not(f) => Formula::not(f.normalize()),
            Formula::Or(a, b) => Formula::or(a.normalize(), b.normalize()),
            Formula::And(a, b) => Formula::not(Formula::or(
                Formula::not(a.normalize()),
                Formula::not(b.normalize()),
            )),
            Formula::Implies(a, b) => Formula::or(Formula::not(a.normalize()), b.normalize()),
            Formula::Iff(a, b) => Formula::and(
                Formula::implies(a.as_ref().clone(), b.as_ref().clone()),
                Formula::implies(b.as_ref().clone(), a.as_ref().clone()),
            )
            .normalize(),
            Formula::Forall(v, f) => Formula::forall(v.clone(), f.normalize()),
            Formula::Exists(v, f) => {
                Formula::not(Formula::forall(v.clone(), Formula::not(f.normalize())))
            }
        }
    }

    /// Universally closes the formula over its free variables, binding in
    /// ascending `(sort, index)` order.
    pub fn universal_closure(&self) -> Formula {
        let mut out = self.clone();
        for v in self.free_vars().into_iter().rev() {
            out = Formula::forall(v, out);
        }
        out
    }

    /// Alpha-equivalence: equality up to consistent renaming of bound
    /// variables.
    pub fn alpha_eq(&self, other: &Formula) -> bool {
        alpha_eq_rec(self, other, &mut HashMap::new(), &mut HashMap::new(), &mut 0)
    }
}

/// Bound variables are tracked by mapping each side's binder to a shared
/// serial number; free variables must match exactly.
fn alpha_eq_rec(
    a: &Formula,
    b: &Formula,
    left: &mut HashMap<Var, usize>,
    right: &mut HashMap<Var, usize>,
    counter: &mut usize,
) -> bool {
    match (a, b) {
        (Formula::False, Formula::False) | (Formula::True, Formula::True) => true,
        (Formula::Pred(p, xs), Formula::Pred(q, ys)) => {
            p == q
                && xs.len() == ys.len()
                && xs
                    .iter()
                    .zip(ys)
                    .all(|(x, y)| alpha_eq_term(x, y, left, right))
        }
        (Formula::Eq(s, x1, x2), Formula::Eq(t, y1, y2)) => {
            s == t && alpha_eq_term(x1, y1, left, right) && alpha_eq_term(x2, y2, left, right)
        }
        (Formula::Not(x), Formula::Not(y)) => alpha_eq_rec(x, y, left, right, counter),
        (Formula::Or(x1, x2), Formula::Or(y1, y2))
        | (Formula::And(x1, x2), Formula::And(y1, y2))
        | (Formula::Implies(x1, x2), Formula::Implies(y1, y2))
        | (Formula::Iff(x1, x2), Formula::Iff(y1, y2)) => {
            alpha_eq_rec(x1, y1, left, right, counter)
                && alpha_eq_rec(x2, y2, left, right, counter)
        }
        (Formula::Forall(v, x), Formula::Forall(w, y))
        | (Formula::Exists(v, x), Formula::Exists(w, y)) => {
            if v.sort != w.sort {
                return false;
            }
            let serial = *counter;
            *counter += 1;
            let prev_l = left.insert(v.clone(), serial);
            let prev_r = right.insert(w.clone(), serial);
            let result = alpha_eq_rec(x, y, left, right, counter);
            restore(left, v, prev_l);
            restore(right, w, prev_r);
            result
        }
        _ => false,
    }
}

fn restore(map: &mut HashMap<Var, usize>, key: &Var, prev: Option<usize>) {
    match prev {
        Some(old) => {
            map.insert(key.clone(), old);
        }
        None => {
            map.remove(key);
        }
    }
}

fn alpha_eq_term(
    a: &Term,
    b: &Term,
    left: &HashMap<Var, usize>,
    right: &HashMap<Var, usize>,
) -> bool {
    match (a, b) {
        (Term::Var(v), Term::Var(w)) => match (left.get(v), right.get(w)) {
            (Some(i), Some(j)) => i == j,
            (None, None) => v == w,
            _ => false,
        },
        (Term::App(f, xs), Term::App(g, ys)) => {
            f == g
                && xs.len() == ys.len()
                && xs
                    .iter()
                    .zip(ys)
                    .all(|(x, y)| alpha_eq_term(x, y, left, right))
        }
        _ => false,
    }
}
