//! The reflective extension of a theory.
//!
//! [`reflect_signature`] adds, for every base sort, sorts of reflected
//! variables and terms plus a global sort of reflected formulas and a sort of
//! variable-binding environments, together with the symbols that build and
//! evaluate reflected syntax. [`reflect_axioms`] generates the axioms tying
//! reflected satisfaction and evaluation to their object-level counterparts,
//! and [`godel_encode`]/[`decode_formula`] translate between object formulas
//! and their ground representations of sort `form`.
//!
//! Generated names live in a reserved namespace: per-sort families are
//! `<family>_<sort>` (`v0_nat`, `push_nat`, ...), reflected counterparts of
//! base symbols carry a `'r` suffix (`add'r`), and the globals are `botdot`,
//! `ordot`, `negdot`, `empty` and `models`. A base theory that already uses
//! one of these names is rejected rather than silently renamed.

use std::collections::BTreeMap;

use crate::logic::{Formula, FunSym, PredSym, Signature, Sort, SortKind, Term, Theory, Var};

/// The bijection between a base signature and its reflected counterpart.
#[derive(Clone, Debug)]
pub struct ReflectionMap {
    pub base: Signature,
    pub form: Sort,
    pub env: Sort,
    /// Base sort name → sort of its reflected variables.
    pub var_sorts: BTreeMap<String, Sort>,
    /// Base sort name → sort of its reflected terms.
    pub term_sorts: BTreeMap<String, Sort>,
    /// Per-sort symbol families, keyed by base sort name.
    pub v0: BTreeMap<String, FunSym>,
    pub next: BTreeMap<String, FunSym>,
    pub inj: BTreeMap<String, FunSym>,
    pub eqdot: BTreeMap<String, FunSym>,
    pub foralldot: BTreeMap<String, FunSym>,
    pub push: BTreeMap<String, FunSym>,
    pub evalv: BTreeMap<String, FunSym>,
    pub eval: BTreeMap<String, FunSym>,
    /// Base function name → its reflected constructor.
    pub dotted_funs: BTreeMap<String, FunSym>,
    /// Base predicate name → its reflected constructor (codomain `form`).
    pub dotted_preds: BTreeMap<String, FunSym>,
    pub botdot: FunSym,
    pub ordot: FunSym,
    pub negdot: FunSym,
    pub empty: FunSym,
    /// The satisfaction predicate over `env × form`.
    pub models: PredSym,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReflectionError {
    #[error("base symbol `{0}` collides with a reserved generated name")]
    NameCollision(String),
    #[error("theory `{0}` is already a reflective extension")]
    AlreadyReflected(String),
}

/// Suffix marking the reflected counterpart of a base symbol.
const DOT_SUFFIX: &str = "'r";

fn dotted(name: &str) -> String {
    format!("{name}{DOT_SUFFIX}")
}

fn family(prefix: &str, sort: &Sort) -> String {
    format!("{prefix}_{}", sort.name)
}

impl ReflectionMap {
    pub fn var_sort(&self, base: &Sort) -> &Sort {
        &self.var_sorts[&base.name]
    }

    pub fn term_sort(&self, base: &Sort) -> &Sort {
        &self.term_sorts[&base.name]
    }

    /// The code of the variable `x_i^σ` as a bare `var_σ` term:
    /// `next_σ^i(v0_σ)`.
    pub fn var_code(&self, var: &Var) -> Term {
        let v0 = &self.v0[&var.sort.name];
        let next = &self.next[&var.sort.name];
        let mut t = v0.app(vec![]);
        for _ in 0..var.index {
            t = next.app(vec![t]);
        }
        t
    }

    /// Looks a reflected function constructor back up by symbol. Returns the
    /// base function it encodes.
    fn un_dot_fun(&self, sym: &FunSym) -> Option<&FunSym> {
        let base_name = sym.name.strip_suffix(DOT_SUFFIX)?;
        let base = self.base.fun(base_name)?;
        (self.dotted_funs.get(base_name) == Some(sym)).then_some(base)
    }

    fn un_dot_pred(&self, sym: &FunSym) -> Option<&PredSym> {
        let base_name = sym.name.strip_suffix(DOT_SUFFIX)?;
        let base = self.base.pred(base_name)?;
        (self.dotted_preds.get(base_name) == Some(sym)).then_some(base)
    }
}

/// Builds the reflective extension of the theory's signature along with the
/// symbol map. The input theory must typecheck.
pub fn reflect_signature(theory: &Theory) -> Result<(ReflectionMap, Signature), ReflectionError> {
    if theory.reflected {
        return Err(ReflectionError::AlreadyReflected(theory.name.clone()));
    }
    let base = &theory.signature;
    if base.sorts.iter().any(|s| !s.is_base()) {
        return Err(ReflectionError::AlreadyReflected(theory.name.clone()));
    }

    let mut taken: Vec<String> = Vec::new();
    let mut claim = |name: String| -> Result<String, ReflectionError> {
        if base.has_name(&name) || taken.contains(&name) {
            return Err(ReflectionError::NameCollision(name));
        }
        taken.push(name.clone());
        Ok(name)
    };

    let form = Sort {
        name: claim("form".into())?,
        kind: SortKind::Form,
    };
    let env = Sort {
        name: claim("env".into())?,
        kind: SortKind::Env,
    };

    let mut var_sorts = BTreeMap::new();
    let mut term_sorts = BTreeMap::new();
    for sort in base.base_sorts() {
        var_sorts.insert(
            sort.name.clone(),
            Sort {
                name: claim(family("var", sort))?,
                kind: SortKind::VarOf(sort.name.clone()),
            },
        );
        term_sorts.insert(
            sort.name.clone(),
            Sort {
                name: claim(family("term", sort))?,
                kind: SortKind::TermOf(sort.name.clone()),
            },
        );
    }

    let mut v0 = BTreeMap::new();
    let mut next = BTreeMap::new();
    let mut inj = BTreeMap::new();
    let mut eqdot = BTreeMap::new();
    let mut foralldot = BTreeMap::new();
    let mut push = BTreeMap::new();
    let mut evalv = BTreeMap::new();
    let mut eval = BTreeMap::new();
    for sort in base.base_sorts() {
        let vs = var_sorts[&sort.name].clone();
        let ts = term_sorts[&sort.name].clone();
        v0.insert(
            sort.name.clone(),
            FunSym::new(claim(family("v0", sort))?, vec![], vs.clone()),
        );
        next.insert(
            sort.name.clone(),
            FunSym::new(claim(family("next", sort))?, vec![vs.clone()], vs.clone()),
        );
        inj.insert(
            sort.name.clone(),
            FunSym::new(claim(family("inj", sort))?, vec![vs.clone()], ts.clone()),
        );
        eqdot.insert(
            sort.name.clone(),
            FunSym::new(
                claim(family("eqdot", sort))?,
                vec![ts.clone(), ts.clone()],
                form.clone(),
            ),
        );
        foralldot.insert(
            sort.name.clone(),
            FunSym::new(
                claim(family("foralldot", sort))?,
                vec![vs.clone(), form.clone()],
                form.clone(),
            ),
        );
        push.insert(
            sort.name.clone(),
            FunSym::new(
                claim(family("push", sort))?,
                vec![env.clone(), vs.clone(), sort.clone()],
                env.clone(),
            ),
        );
        evalv.insert(
            sort.name.clone(),
            FunSym::new(
                claim(family("evalv", sort))?,
                vec![env.clone(), vs.clone()],
                sort.clone(),
            ),
        );
        eval.insert(
            sort.name.clone(),
            FunSym::new(
                claim(family("eval", sort))?,
                vec![env.clone(), ts.clone()],
                sort.clone(),
            ),
        );
    }

    let mut dotted_funs = BTreeMap::new();
    for f in &base.funs {
        let domain = f.domain.iter().map(|s| term_sorts[&s.name].clone()).collect();
        dotted_funs.insert(
            f.name.clone(),
            FunSym::new(claim(dotted(&f.name))?, domain, term_sorts[&f.codomain.name].clone()),
        );
    }
    let mut dotted_preds = BTreeMap::new();
    for p in &base.preds {
        let domain = p.domain.iter().map(|s| term_sorts[&s.name].clone()).collect();
        dotted_preds.insert(
            p.name.clone(),
            FunSym::new(claim(dotted(&p.name))?, domain, form.clone()),
        );
    }

    let botdot = FunSym::new(claim("botdot".into())?, vec![], form.clone());
    let ordot = FunSym::new(
        claim("ordot".into())?,
        vec![form.clone(), form.clone()],
        form.clone(),
    );
    let negdot = FunSym::new(claim("negdot".into())?, vec![form.clone()], form.clone());
    let empty = FunSym::new(claim("empty".into())?, vec![], env.clone());
    let models = PredSym::new(claim("models".into())?, vec![env.clone(), form.clone()]);

    let map = ReflectionMap {
        base: base.clone(),
        form,
        env,
        var_sorts,
        term_sorts,
        v0,
        next,
        inj,
        eqdot,
        foralldot,
        push,
        evalv,
        eval,
        dotted_funs,
        dotted_preds,
        botdot,
        ordot,
        negdot,
        empty,
        models,
    };

    let mut sig = Signature {
        sorts: base.sorts.clone(),
        funs: base.funs.clone(),
        preds: base.preds.clone(),
    };
    for sort in base.base_sorts() {
        sig.sorts.push(map.var_sorts[&sort.name].clone());
        sig.sorts.push(map.term_sorts[&sort.name].clone());
    }
    sig.sorts.push(map.form.clone());
    sig.sorts.push(map.env.clone());
    for sort in base.base_sorts() {
        for fam in [
            &map.v0, &map.next, &map.inj, &map.eqdot, &map.foralldot, &map.push, &map.evalv,
            &map.eval,
        ] {
            sig.funs.push(fam[&sort.name].clone());
        }
    }
    for f in &base.funs {
        sig.funs.push(map.dotted_funs[&f.name].clone());
    }
    for p in &base.preds {
        sig.funs.push(map.dotted_preds[&p.name].clone());
    }
    sig.funs.push(map.botdot.clone());
    sig.funs.push(map.ordot.clone());
    sig.funs.push(map.negdot.clone());
    sig.funs.push(map.empty.clone());
    sig.preds.push(map.models.clone());

    Ok((map, sig))
}

/// Folds `∀v₁...∀vₙ. body` with the binders in the given order.
fn closed(vars: Vec<Var>, body: Formula) -> Formula {
    vars.into_iter().rev().fold(body, |f, v| Formula::forall(v, f))
}

/// Generates the axioms of the reflective extension, universally closed, in a
/// fixed order: variable lookup, term evaluation, then satisfaction.
///
/// The value of a variable in the `empty` environment is deliberately left
/// unconstrained: no axiom mentions `empty`.
pub fn reflect_axioms(theory: &Theory, map: &ReflectionMap) -> Vec<Formula> {
    let base = &theory.signature;
    let env_var = Var::new(0, map.env.clone());
    let e = Term::Var(env_var.clone());
    let mut axioms = Vec::new();

    let sorts: Vec<&Sort> = base.base_sorts().collect();

    // Variable lookup in an environment.
    for sort in &sorts {
        let vs = map.var_sort(sort);
        let v = Var::new(0, vs.clone());
        let v2 = Var::new(1, vs.clone());
        let x = Var::new(0, (*sort).clone());
        let push = &map.push[&sort.name];
        let evalv = &map.evalv[&sort.name];

        // evalv(push(e, v, x), v) ≈ x
        axioms.push(closed(
            vec![env_var.clone(), v.clone(), x.clone()],
            Formula::eq(
                evalv.app(vec![
                    push.app(vec![e.clone(), Term::Var(v.clone()), Term::Var(x.clone())]),
                    Term::Var(v.clone()),
                ]),
                Term::Var(x.clone()),
            ),
        ));
        // v ≉ v' → evalv(push(e, v', x), v) ≈ evalv(e, v)
        axioms.push(closed(
            vec![env_var.clone(), v.clone(), v2.clone(), x.clone()],
            Formula::implies(
                Formula::not(Formula::eq(Term::Var(v.clone()), Term::Var(v2.clone()))),
                Formula::eq(
                    evalv.app(vec![
                        push.app(vec![e.clone(), Term::Var(v2.clone()), Term::Var(x.clone())]),
                        Term::Var(v.clone()),
                    ]),
                    evalv.app(vec![e.clone(), Term::Var(v.clone())]),
                ),
            ),
        ));
    }
    // Pushes of a different sort never affect a lookup.
    for sigma in &sorts {
        for tau in &sorts {
            if sigma == tau {
                continue;
            }
            let v = Var::new(0, map.var_sort(sigma).clone());
            let w = Var::new(0, map.var_sort(tau).clone());
            let x = Var::new(0, (*tau).clone());
            let evalv = &map.evalv[&sigma.name];
            let push_tau = &map.push[&tau.name];
            axioms.push(closed(
                vec![env_var.clone(), w.clone(), x.clone(), v.clone()],
                Formula::eq(
                    evalv.app(vec![
                        push_tau.app(vec![e.clone(), Term::Var(w.clone()), Term::Var(x.clone())]),
                        Term::Var(v.clone()),
                    ]),
                    evalv.app(vec![e.clone(), Term::Var(v.clone())]),
                ),
            ));
        }
    }

    // Term evaluation: variables defer to the lookup function...
    for sort in &sorts {
        let v = Var::new(0, map.var_sort(sort).clone());
        let eval = &map.eval[&sort.name];
        let evalv = &map.evalv[&sort.name];
        let inj = &map.inj[&sort.name];
        axioms.push(closed(
            vec![env_var.clone(), v.clone()],
            Formula::eq(
                eval.app(vec![e.clone(), inj.app(vec![Term::Var(v.clone())])]),
                evalv.app(vec![e.clone(), Term::Var(v.clone())]),
            ),
        ));
    }
    // ...and reflected function applications map to the base functions.
    for f in &base.funs {
        let fdot = &map.dotted_funs[&f.name];
        let (args, arg_vars) = reflected_arg_vars(map, &f.domain);
        let evaluated: Vec<Term> = f
            .domain
            .iter()
            .zip(&args)
            .map(|(s, t)| map.eval[&s.name].app(vec![e.clone(), t.clone()]))
            .collect();
        let mut binders = vec![env_var.clone()];
        binders.extend(arg_vars);
        axioms.push(closed(
            binders,
            Formula::eq(
                map.eval[&f.codomain.name].app(vec![e.clone(), fdot.app(args.clone())]),
                f.app(evaluated),
            ),
        ));
    }

    // Satisfaction of atoms.
    for sort in &sorts {
        let ts = map.term_sort(sort);
        let x = Var::new(0, ts.clone());
        let y = Var::new(1, ts.clone());
        let eval = &map.eval[&sort.name];
        axioms.push(closed(
            vec![env_var.clone(), x.clone(), y.clone()],
            Formula::iff(
                map.models.app(vec![
                    e.clone(),
                    map.eqdot[&sort.name].app(vec![Term::Var(x.clone()), Term::Var(y.clone())]),
                ]),
                Formula::eq(
                    eval.app(vec![e.clone(), Term::Var(x.clone())]),
                    eval.app(vec![e.clone(), Term::Var(y.clone())]),
                ),
            ),
        ));
    }
    for p in &base.preds {
        let pdot = &map.dotted_preds[&p.name];
        let (args, arg_vars) = reflected_arg_vars(map, &p.domain);
        let evaluated: Vec<Term> = p
            .domain
            .iter()
            .zip(&args)
            .map(|(s, t)| map.eval[&s.name].app(vec![e.clone(), t.clone()]))
            .collect();
        let mut binders = vec![env_var.clone()];
        binders.extend(arg_vars);
        axioms.push(closed(
            binders,
            Formula::iff(
                map.models.app(vec![e.clone(), pdot.app(args.clone())]),
                p.app(evaluated),
            ),
        ));
    }

    // Satisfaction of the connectives.
    let phi = Var::new(0, map.form.clone());
    let psi = Var::new(1, map.form.clone());
    axioms.push(closed(
        vec![env_var.clone()],
        Formula::iff(
            map.models.app(vec![e.clone(), map.botdot.app(vec![])]),
            Formula::False,
        ),
    ));
    axioms.push(closed(
        vec![env_var.clone(), phi.clone()],
        Formula::iff(
            map.models
                .app(vec![e.clone(), map.negdot.app(vec![Term::Var(phi.clone())])]),
            Formula::not(map.models.app(vec![e.clone(), Term::Var(phi.clone())])),
        ),
    ));
    axioms.push(closed(
        vec![env_var.clone(), phi.clone(), psi.clone()],
        Formula::iff(
            map.models.app(vec![
                e.clone(),
                map.ordot
                    .app(vec![Term::Var(phi.clone()), Term::Var(psi.clone())]),
            ]),
            Formula::or(
                map.models.app(vec![e.clone(), Term::Var(phi.clone())]),
                map.models.app(vec![e.clone(), Term::Var(psi.clone())]),
            ),
        ),
    ));
    for sort in &sorts {
        let v = Var::new(0, map.var_sort(sort).clone());
        let x = Var::new(0, (*sort).clone());
        let push = &map.push[&sort.name];
        axioms.push(closed(
            vec![env_var.clone(), v.clone(), phi.clone()],
            Formula::iff(
                map.models.app(vec![
                    e.clone(),
                    map.foralldot[&sort.name]
                        .app(vec![Term::Var(v.clone()), Term::Var(phi.clone())]),
                ]),
                Formula::forall(
                    x.clone(),
                    map.models.app(vec![
                        push.app(vec![e.clone(), Term::Var(v.clone()), Term::Var(x.clone())]),
                        Term::Var(phi.clone()),
                    ]),
                ),
            ),
        ));
    }

    axioms
}

/// Fresh variables of the reflected term sorts for a symbol's argument list,
/// with indices counted per sort.
fn reflected_arg_vars(map: &ReflectionMap, domain: &[Sort]) -> (Vec<Term>, Vec<Var>) {
    let mut counters: BTreeMap<String, usize> = BTreeMap::new();
    let mut args = Vec::new();
    let mut vars = Vec::new();
    for sort in domain {
        let ts = map.term_sort(sort);
        let idx = counters.entry(ts.name.clone()).or_insert(0);
        let v = Var::new(*idx, ts.clone());
        *idx += 1;
        args.push(Term::Var(v.clone()));
        vars.push(v);
    }
    (args, vars)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EncodeError {
    #[error("formula is not in core form (found a sugar connective)")]
    NotCore,
    #[error("symbol `{0}` is not part of the base signature")]
    UnknownSymbol(String),
}

/// Structural encoding of a core formula as a ground term of sort `form`.
pub fn godel_encode(formula: &Formula, map: &ReflectionMap) -> Result<Term, EncodeError> {
    match formula {
        Formula::False => Ok(map.botdot.app(vec![])),
        Formula::Not(f) => Ok(map.negdot.app(vec![godel_encode(f, map)?])),
        Formula::Or(a, b) => Ok(map
            .ordot
            .app(vec![godel_encode(a, map)?, godel_encode(b, map)?])),
        Formula::Forall(v, f) => {
            let fa = map
                .foralldot
                .get(&v.sort.name)
                .ok_or_else(|| EncodeError::UnknownSymbol(v.sort.name.clone()))?;
            Ok(fa.app(vec![map.var_code(v), godel_encode(f, map)?]))
        }
        Formula::Eq(sort, a, b) => {
            let eq = map
                .eqdot
                .get(&sort.name)
                .ok_or_else(|| EncodeError::UnknownSymbol(sort.name.clone()))?;
            Ok(eq.app(vec![encode_term(a, map)?, encode_term(b, map)?]))
        }
        Formula::Pred(p, args) => {
            let pdot = map
                .dotted_preds
                .get(&p.name)
                .ok_or_else(|| EncodeError::UnknownSymbol(p.name.clone()))?;
            let coded = args
                .iter()
                .map(|t| encode_term(t, map))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(pdot.app(coded))
        }
        Formula::True
        | Formula::And(..)
        | Formula::Implies(..)
        | Formula::Iff(..)
        | Formula::Exists(..) => Err(EncodeError::NotCore),
    }
}

/// Encoding of a base term as a ground term of sort `term_σ`.
pub fn encode_term(term: &Term, map: &ReflectionMap) -> Result<Term, EncodeError> {
    match term {
        Term::Var(v) => {
            let inj = map
                .inj
                .get(&v.sort.name)
                .ok_or_else(|| EncodeError::UnknownSymbol(v.sort.name.clone()))?;
            Ok(inj.app(vec![map.var_code(v)]))
        }
        Term::App(f, args) => {
            let fdot = map
                .dotted_funs
                .get(&f.name)
                .filter(|_| map.base.fun(&f.name) == Some(f))
                .ok_or_else(|| EncodeError::UnknownSymbol(f.name.clone()))?;
            let coded = args
                .iter()
                .map(|t| encode_term(t, map))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(fdot.app(coded))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("term is not a code: `{0:?}` is not built from encoding constructors")]
pub struct NotInImage(pub Term);

/// A decoded reflective object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decoded {
    Formula(Formula),
    Term(Term),
    Var(Var),
}

/// Inverse of the encoding, defined on ground terms built only from the
/// image constructors. Dispatches on the sort of the input.
pub fn godel_decode(term: &Term, map: &ReflectionMap) -> Result<Decoded, NotInImage> {
    match &term.sort().kind {
        SortKind::Form => decode_formula(term, map).map(Decoded::Formula),
        SortKind::TermOf(_) => decode_term(term, map).map(Decoded::Term),
        SortKind::VarOf(_) => decode_var(term, map).map(Decoded::Var),
        _ => Err(NotInImage(term.clone())),
    }
}

pub fn decode_formula(term: &Term, map: &ReflectionMap) -> Result<Formula, NotInImage> {
    let Term::App(head, args) = term else {
        return Err(NotInImage(term.clone()));
    };
    if *head == map.botdot {
        return Ok(Formula::False);
    }
    if *head == map.negdot {
        return Ok(Formula::not(decode_formula(&args[0], map)?));
    }
    if *head == map.ordot {
        return Ok(Formula::or(
            decode_formula(&args[0], map)?,
            decode_formula(&args[1], map)?,
        ));
    }
    for (sort_name, fa) in &map.foralldot {
        if head == fa {
            let v = decode_var(&args[0], map)?;
            debug_assert_eq!(v.sort.name, *sort_name);
            return Ok(Formula::forall(v, decode_formula(&args[1], map)?));
        }
    }
    for (sort_name, eq) in &map.eqdot {
        if head == eq {
            let sort = map
                .base
                .sort(sort_name)
                .ok_or_else(|| NotInImage(term.clone()))?;
            return Ok(Formula::Eq(
                sort.clone(),
                decode_term(&args[0], map)?,
                decode_term(&args[1], map)?,
            ));
        }
    }
    if let Some(p) = map.un_dot_pred(head) {
        let decoded = args
            .iter()
            .map(|a| decode_term(a, map))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(p.app(decoded));
    }
    Err(NotInImage(term.clone()))
}

pub fn decode_term(term: &Term, map: &ReflectionMap) -> Result<Term, NotInImage> {
    let Term::App(head, args) = term else {
        return Err(NotInImage(term.clone()));
    };
    if map.inj.values().any(|inj| head == inj) {
        return Ok(Term::Var(decode_var(&args[0], map)?));
    }
    if let Some(f) = map.un_dot_fun(head) {
        let decoded = args
            .iter()
            .map(|a| decode_term(a, map))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(f.app(decoded));
    }
    Err(NotInImage(term.clone()))
}

/// Decodes a `next^i(v0)` chain back to the variable `x_i`.
pub fn decode_var(term: &Term, map: &ReflectionMap) -> Result<Var, NotInImage> {
    let mut index = 0;
    let mut cur = term;
    loop {
        let Term::App(head, args) = cur else {
            return Err(NotInImage(term.clone()));
        };
        if let Some((sort_name, _)) = map.v0.iter().find(|(_, v0)| head == *v0) {
            let sort = map
                .base
                .sort(sort_name)
                .ok_or_else(|| NotInImage(term.clone()))?;
            return Ok(Var::new(index, sort.clone()));
        }
        if map.next.values().any(|n| head == n) {
            index += 1;
            cur = &args[0];
        } else {
            return Err(NotInImage(term.clone()));
        }
    }
}

/// The reflective extension: the base theory plus the generated axioms over
/// the extended signature. Returns the theory together with the symbol map.
pub fn reflective_extension(theory: &Theory) -> Result<(Theory, ReflectionMap), ReflectionError> {
    let (map, sig) = reflect_signature(theory)?;
    let mut axioms = theory.axioms.clone();
    axioms.extend(reflect_axioms(theory, &map));
    let extended = Theory {
        name: format!("refl({})", theory.name),
        signature: sig,
        datatypes: theory.datatypes.clone(),
        axioms,
        reflected: true,
    };
    Ok((extended, map))
}
