//! The built-in theory catalog and the generated benchmark suites.
//!
//! Theories are composed from named fragments (`N`, `Leq`, `Add`, `Mul`,
//! `L`, `Pref`, `App`, `E`, `Id`, `Eq`, `Rev`, `Rev'`) joined with `+`.
//! Fragments pull in what they depend on (`Add` needs `N` for `zero`/`s`),
//! and the canonical theory name lists the closure in catalog order.
//!
//! Three suites are generated:
//! * reflected axioms: for each axiom α of the combination, prove
//!   `models(empty, ⌜α⌝)` in the reflective extension;
//! * reflected consequences: twenty fixed conjectures, encoded the same way;
//! * induction problems: twenty-three conjectures needing induction, posed
//!   both directly over the base theory and over the reflective inductive
//!   extension.

use crate::induction::reflective_inductive_extension;
use crate::logic::{
    numeral, Formula, FunSym, InductiveDatatype, PredSym, Sort, Term, Theory, Var,
};
use crate::reflection::{godel_encode, reflective_extension};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theory `{0}`")]
pub struct UnknownTheory(pub String);

/// How a problem's theory and conjecture relate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Base theory, conjecture as stated.
    Direct,
    /// Reflective extension, conjecture is a satisfaction statement.
    Reflective,
    /// Reflective inductive extension, conjecture in the base language.
    ReflectiveInductive,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Direct => "native",
            Mode::Reflective => "reflective",
            Mode::ReflectiveInductive => "reflective-inductive",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpectedRole {
    AxiomReflection,
    Consequence,
    Inductive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Refl0,
    Refl1,
    Ind,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Refl0 => "refl0",
            Suite::Refl1 => "refl1",
            Suite::Ind => "ind",
        }
    }
}

/// One benchmark problem.
#[derive(Clone, Debug)]
pub struct ProblemInstance {
    pub id: String,
    pub suite: Suite,
    pub theory: Theory,
    pub conjecture: Formula,
    pub mode: Mode,
    pub role: ExpectedRole,
}

const FRAGMENT_ORDER: [&str; 12] = [
    "N", "Leq", "Add", "Mul", "L", "Pref", "App", "E", "Id", "Eq", "Rev", "Rev'",
];

fn fragment_deps(name: &str) -> &'static [&'static str] {
    match name {
        "N" | "E" => &[],
        "Leq" | "Add" | "L" | "Id" | "Eq" => &["N"],
        "Mul" => &["Add"],
        "Pref" | "App" | "Rev'" => &["L"],
        "Rev" => &["App"],
        _ => &[],
    }
}

/// Builds a catalog theory or combination, e.g. `"N+Add"` or `"E"`.
/// Dependencies are included automatically and the resulting name is
/// canonical.
pub fn builtin_theory(name: &str) -> Result<Theory, UnknownTheory> {
    let mut requested: Vec<&str> = Vec::new();
    for part in name.split('+') {
        let part = part.trim();
        if !FRAGMENT_ORDER.contains(&part) {
            return Err(UnknownTheory(part.to_string()));
        }
        requested.push(part);
    }
    // Dependency closure.
    let mut selected: Vec<&str> = Vec::new();
    fn add<'a>(name: &'a str, selected: &mut Vec<&'a str>) {
        for dep in fragment_deps(name) {
            add(dep, selected);
        }
        if !selected.contains(&name) {
            selected.push(name);
        }
    }
    for part in requested {
        add(part, &mut selected);
    }
    selected.sort_by_key(|n| FRAGMENT_ORDER.iter().position(|f| f == n).unwrap());

    let mut theory = Theory::new(selected.join("+"));
    for fragment in selected {
        apply_fragment(fragment, &mut theory);
    }
    Ok(theory)
}

fn sort_nat() -> Sort {
    Sort::base("nat")
}

fn sort_lst() -> Sort {
    Sort::base("lst")
}

fn sort_alpha() -> Sort {
    Sort::base("alpha")
}

fn apply_fragment(name: &str, theory: &mut Theory) {
    let sig = &mut theory.signature;
    match name {
        "N" => {
            let nat = sort_nat();
            let zero = FunSym::constant("zero", nat.clone());
            let s = FunSym::new("s", vec![nat.clone()], nat.clone());
            sig.sorts.push(nat.clone());
            sig.funs.push(zero.clone());
            sig.funs.push(s.clone());
            theory.datatypes.push(InductiveDatatype {
                sort: nat,
                ctors: vec![zero, s],
            });
        }
        "Leq" => {
            let nat = sort_nat();
            let leq = PredSym::new("leq", vec![nat.clone(), nat.clone()]);
            sig.preds.push(leq.clone());
            let s = sig.fun("s").unwrap().clone();
            let x = Var::new(0, nat.clone());
            let y = Var::new(1, nat.clone());
            theory.axioms.push(Formula::forall(
                x.clone(),
                leq.app(vec![Term::Var(x.clone()), Term::Var(x.clone())]),
            ));
            theory.axioms.push(Formula::forall(
                x.clone(),
                Formula::forall(
                    y.clone(),
                    Formula::implies(
                        leq.app(vec![Term::Var(x.clone()), Term::Var(y.clone())]),
                        leq.app(vec![Term::Var(x.clone()), s.app(vec![Term::Var(y.clone())])]),
                    ),
                ),
            ));
        }
        "Add" => {
            let nat = sort_nat();
            let add = FunSym::new("add", vec![nat.clone(), nat.clone()], nat.clone());
            sig.funs.push(add.clone());
            let zero = sig.fun("zero").unwrap().clone();
            let s = sig.fun("s").unwrap().clone();
            let x = Var::new(0, nat.clone());
            let y = Var::new(1, nat.clone());
            theory.axioms.push(Formula::forall(
                y.clone(),
                Formula::eq(
                    add.app(vec![zero.app(vec![]), Term::Var(y.clone())]),
                    Term::Var(y.clone()),
                ),
            ));
            theory.axioms.push(Formula::forall(
                x.clone(),
                Formula::forall(
                    y.clone(),
                    Formula::eq(
                        add.app(vec![s.app(vec![Term::Var(x.clone())]), Term::Var(y.clone())]),
                        s.app(vec![add.app(vec![Term::Var(x.clone()), Term::Var(y.clone())])]),
                    ),
                ),
            ));
        }
        "Mul" => {
            let nat = sort_nat();
            let mul = FunSym::new("mul", vec![nat.clone(), nat.clone()], nat.clone());
            sig.funs.push(mul.clone());
            let zero = sig.fun("zero").unwrap().clone();
            let s = sig.fun("s").unwrap().clone();
            let add = sig.fun("add").unwrap().clone();
            let x = Var::new(0, nat.clone());
            let y = Var::new(1, nat.clone());
            theory.axioms.push(Formula::forall(
                y.clone(),
                Formula::eq(
                    mul.app(vec![zero.app(vec![]), Term::Var(y.clone())]),
                    zero.app(vec![]),
                ),
            ));
            theory.axioms.push(Formula::forall(
                x.clone(),
                Formula::forall(
                    y.clone(),
                    Formula::eq(
                        mul.app(vec![s.app(vec![Term::Var(x.clone())]), Term::Var(y.clone())]),
                        add.app(vec![
                            Term::Var(y.clone()),
                            mul.app(vec![Term::Var(x.clone()), Term::Var(y.clone())]),
                        ]),
                    ),
                ),
            ));
        }
        "L" => {
            let nat = sort_nat();
            let lst = sort_lst();
            let nil = FunSym::constant("nil", lst.clone());
            let cons = FunSym::new("cons", vec![nat, lst.clone()], lst.clone());
            sig.sorts.push(lst.clone());
            sig.funs.push(nil.clone());
            sig.funs.push(cons.clone());
            theory.datatypes.push(InductiveDatatype {
                sort: lst,
                ctors: vec![nil, cons],
            });
        }
        "Pref" => {
            let nat = sort_nat();
            let lst = sort_lst();
            let pref = PredSym::new("pref", vec![lst.clone(), lst.clone()]);
            sig.preds.push(pref.clone());
            let nil = sig.fun("nil").unwrap().clone();
            let cons = sig.fun("cons").unwrap().clone();
            let a = Var::new(0, nat.clone());
            let b = Var::new(1, nat.clone());
            let x = Var::new(0, lst.clone());
            let y = Var::new(1, lst.clone());
            theory.axioms.push(Formula::forall(
                x.clone(),
                pref.app(vec![nil.app(vec![]), Term::Var(x.clone())]),
            ));
            theory.axioms.push(Formula::forall(
                a.clone(),
                Formula::forall(
                    x.clone(),
                    Formula::not(pref.app(vec![
                        cons.app(vec![Term::Var(a.clone()), Term::Var(x.clone())]),
                        nil.app(vec![]),
                    ])),
                ),
            ));
            theory.axioms.push(Formula::forall(
                a.clone(),
                Formula::forall(
                    b.clone(),
                    Formula::forall(
                        x.clone(),
                        Formula::forall(
                            y.clone(),
                            Formula::iff(
                                pref.app(vec![
                                    cons.app(vec![Term::Var(a.clone()), Term::Var(x.clone())]),
                                    cons.app(vec![Term::Var(b.clone()), Term::Var(y.clone())]),
                                ]),
                                Formula::and(
                                    Formula::eq(Term::Var(a.clone()), Term::Var(b.clone())),
                                    pref.app(vec![Term::Var(x.clone()), Term::Var(y.clone())]),
                                ),
                            ),
                        ),
                    ),
                ),
            ));
        }
        "App" => {
            let nat = sort_nat();
            let lst = sort_lst();
            let append = FunSym::new("append", vec![lst.clone(), lst.clone()], lst.clone());
            sig.funs.push(append.clone());
            let cons = sig.fun("cons").unwrap().clone();
            let nil = sig.fun("nil").unwrap().clone();
            let a = Var::new(0, nat.clone());
            let l = Var::new(0, lst.clone());
            let r = Var::new(1, lst.clone());
            theory.axioms.push(Formula::forall(
                r.clone(),
                Formula::eq(
                    append.app(vec![nil.app(vec![]), Term::Var(r.clone())]),
                    Term::Var(r.clone()),
                ),
            ));
            theory.axioms.push(Formula::forall(
                a.clone(),
                Formula::forall(
                    l.clone(),
                    Formula::forall(
                        r.clone(),
                        Formula::eq(
                            append.app(vec![
                                cons.app(vec![Term::Var(a.clone()), Term::Var(l.clone())]),
                                Term::Var(r.clone()),
                            ]),
                            cons.app(vec![
                                Term::Var(a.clone()),
                                append.app(vec![Term::Var(l.clone()), Term::Var(r.clone())]),
                            ]),
                        ),
                    ),
                ),
            ));
        }
        "E" => {
            let alpha = sort_alpha();
            sig.sorts.push(alpha.clone());
            for c in ["a", "b", "c"] {
                sig.funs.push(FunSym::constant(c, alpha.clone()));
            }
            for p in ["p", "q", "r"] {
                sig.preds.push(PredSym::new(p, vec![alpha.clone()]));
            }
        }
        "Id" => {
            let nat = sort_nat();
            let id = FunSym::new("id", vec![nat.clone()], nat.clone());
            sig.funs.push(id.clone());
            let x = Var::new(0, nat);
            theory.axioms.push(Formula::forall(
                x.clone(),
                Formula::eq(id.app(vec![Term::Var(x.clone())]), Term::Var(x)),
            ));
        }
        "Eq" => {
            let nat = sort_nat();
            let equal = PredSym::new("equal", vec![nat.clone(), nat.clone(), nat.clone()]);
            sig.preds.push(equal.clone());
            let zero = sig.fun("zero").unwrap().clone();
            let s = sig.fun("s").unwrap().clone();
            let x = Var::new(0, nat.clone());
            let y = Var::new(1, nat.clone());
            let z = Var::new(2, nat.clone());
            let zv = |v: &Var| Term::Var(v.clone());
            let sv = |v: &Var| s.app(vec![Term::Var(v.clone())]);
            let z0 = || zero.app(vec![]);
            // equal(zero, zero, zero) ↔ ⊤
            theory.axioms.push(Formula::iff(
                equal.app(vec![z0(), z0(), z0()]),
                Formula::True,
            ));
            // ∀y,z. equal(zero, s(y), z) ↔ ⊥
            theory.axioms.push(Formula::forall(
                y.clone(),
                Formula::forall(
                    z.clone(),
                    Formula::iff(equal.app(vec![z0(), sv(&y), zv(&z)]), Formula::False),
                ),
            ));
            // ∀y,z. equal(zero, y, s(z)) ↔ ⊥
            theory.axioms.push(Formula::forall(
                y.clone(),
                Formula::forall(
                    z.clone(),
                    Formula::iff(equal.app(vec![z0(), zv(&y), sv(&z)]), Formula::False),
                ),
            ));
            // ∀x,z. equal(s(x), zero, z) ↔ ⊥
            theory.axioms.push(Formula::forall(
                x.clone(),
                Formula::forall(
                    z.clone(),
                    Formula::iff(equal.app(vec![sv(&x), z0(), zv(&z)]), Formula::False),
                ),
            ));
            // ∀x,y. equal(s(x), y, zero) ↔ ⊥
            theory.axioms.push(Formula::forall(
                x.clone(),
                Formula::forall(
                    y.clone(),
                    Formula::iff(equal.app(vec![sv(&x), zv(&y), z0()]), Formula::False),
                ),
            ));
            // ∀x,y,z. equal(s(x), s(y), s(z)) ↔ equal(x, y, z)
            theory.axioms.push(Formula::forall(
                x.clone(),
                Formula::forall(
                    y.clone(),
                    Formula::forall(
                        z.clone(),
                        Formula::iff(
                            equal.app(vec![sv(&x), sv(&y), sv(&z)]),
                            equal.app(vec![zv(&x), zv(&y), zv(&z)]),
                        ),
                    ),
                ),
            ));
        }
        "Rev" => {
            let nat = sort_nat();
            let lst = sort_lst();
            let rev = FunSym::new("rev", vec![lst.clone()], lst.clone());
            sig.funs.push(rev.clone());
            let nil = sig.fun("nil").unwrap().clone();
            let cons = sig.fun("cons").unwrap().clone();
            let append = sig.fun("append").unwrap().clone();
            let x = Var::new(0, nat);
            let xs = Var::new(0, lst);
            theory
                .axioms
                .push(Formula::eq(rev.app(vec![nil.app(vec![])]), nil.app(vec![])));
            theory.axioms.push(Formula::forall(
                x.clone(),
                Formula::forall(
                    xs.clone(),
                    Formula::eq(
                        rev.app(vec![cons.app(vec![Term::Var(x.clone()), Term::Var(xs.clone())])]),
                        append.app(vec![
                            rev.app(vec![Term::Var(xs.clone())]),
                            cons.app(vec![Term::Var(x.clone()), nil.app(vec![])]),
                        ]),
                    ),
                ),
            ));
        }
        "Rev'" => {
            let nat = sort_nat();
            let lst = sort_lst();
            let revp = FunSym::new("rev'", vec![lst.clone()], lst.clone());
            let rev_acc = FunSym::new("revAcc", vec![lst.clone(), lst.clone()], lst.clone());
            sig.funs.push(revp.clone());
            sig.funs.push(rev_acc.clone());
            let nil = sig.fun("nil").unwrap().clone();
            let cons = sig.fun("cons").unwrap().clone();
            let x = Var::new(0, lst.clone());
            let acc = Var::new(0, lst.clone());
            let xn = Var::new(0, nat);
            let xs = Var::new(1, lst.clone());
            theory.axioms.push(Formula::forall(
                x.clone(),
                Formula::eq(
                    revp.app(vec![Term::Var(x.clone())]),
                    rev_acc.app(vec![Term::Var(x.clone()), nil.app(vec![])]),
                ),
            ));
            theory.axioms.push(Formula::forall(
                acc.clone(),
                Formula::eq(
                    rev_acc.app(vec![nil.app(vec![]), Term::Var(acc.clone())]),
                    Term::Var(acc.clone()),
                ),
            ));
            // ∀acc,x,xs. revAcc(cons(x,xs), acc) ≈ revAcc(xs, cons(x,acc))
            theory.axioms.push(Formula::forall(
                acc.clone(),
                Formula::forall(
                    xn.clone(),
                    Formula::forall(
                        xs.clone(),
                        Formula::eq(
                            rev_acc.app(vec![
                                cons.app(vec![Term::Var(xn.clone()), Term::Var(xs.clone())]),
                                Term::Var(acc.clone()),
                            ]),
                            rev_acc.app(vec![
                                Term::Var(xs.clone()),
                                cons.app(vec![Term::Var(xn.clone()), Term::Var(acc.clone())]),
                            ]),
                        ),
                    ),
                ),
            ));
        }
        other => unreachable!("unknown fragment {other}"),
    }
}

/// Wraps a base conjecture as the reflected statement
/// `models(empty, ⌜normalize(φ)⌝)` over the reflective extension of `base`.
fn reflect_problem(base: &Theory, conjecture: &Formula) -> (Theory, Formula) {
    let (extended, map) = reflective_extension(base).expect("catalog theories reflect cleanly");
    let code = godel_encode(&conjecture.normalize(), &map).expect("normalized conjecture encodes");
    let statement = map.models.app(vec![map.empty.app(vec![]), code]);
    (extended, statement)
}

/// The reflected-axiom suite: one problem per axiom of the two standard
/// combinations, 11 problems total.
pub fn gen_refl0() -> Vec<ProblemInstance> {
    let mut out = Vec::new();
    for combo in ["N+Leq+Add+Mul", "N+L+Pref+App"] {
        let base = builtin_theory(combo).unwrap();
        for (i, axiom) in base.axioms.iter().enumerate() {
            let (theory, conjecture) = reflect_problem(&base, axiom);
            out.push(ProblemInstance {
                id: format!("{combo}-ax{i}"),
                suite: Suite::Refl0,
                theory,
                conjecture,
                mode: Mode::Reflective,
                role: ExpectedRole::AxiomReflection,
            });
        }
    }
    out
}

struct NamedConjecture {
    id: &'static str,
    combo: &'static str,
    build: fn(&Theory) -> Formula,
}

fn v(i: usize, sort: Sort) -> Term {
    Term::Var(Var::new(i, sort))
}

fn num(theory: &Theory, n: u64) -> Term {
    numeral(n, theory).expect("theory has numerals")
}

fn list_term(theory: &Theory, items: &[u64]) -> Term {
    let nil = theory.signature.fun("nil").unwrap().clone();
    let cons = theory.signature.fun("cons").unwrap().clone();
    let mut t = nil.app(vec![]);
    for &x in items.iter().rev() {
        t = cons.app(vec![num(theory, x), t]);
    }
    t
}

fn refl1_rows() -> Vec<NamedConjecture> {
    vec![
        NamedConjecture {
            id: "eqRefl",
            combo: "E",
            build: |_| {
                let x = Var::new(0, sort_alpha());
                Formula::forall(x.clone(), Formula::eq(Term::Var(x.clone()), Term::Var(x)))
            },
        },
        NamedConjecture {
            id: "eqTrans",
            combo: "E",
            build: |_| {
                let (x, y, z) = (
                    Var::new(0, sort_alpha()),
                    Var::new(1, sort_alpha()),
                    Var::new(2, sort_alpha()),
                );
                Formula::forall(
                    x.clone(),
                    Formula::forall(
                        y.clone(),
                        Formula::forall(
                            z.clone(),
                            Formula::implies(
                                Formula::and(
                                    Formula::eq(Term::Var(x.clone()), Term::Var(y.clone())),
                                    Formula::eq(Term::Var(y.clone()), Term::Var(z.clone())),
                                ),
                                Formula::eq(Term::Var(x.clone()), Term::Var(z.clone())),
                            ),
                        ),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "excludedMiddle-0",
            combo: "E",
            build: |t| {
                let p = t.signature.pred("p").unwrap().clone();
                let a = t.signature.fun("a").unwrap().app(vec![]);
                Formula::or(p.app(vec![a.clone()]), Formula::not(p.app(vec![a])))
            },
        },
        NamedConjecture {
            id: "excludedMiddle-1",
            combo: "E",
            build: |t| {
                let p = t.signature.pred("p").unwrap().clone();
                let x = Var::new(0, sort_alpha());
                Formula::forall(
                    x.clone(),
                    Formula::or(
                        p.app(vec![Term::Var(x.clone())]),
                        Formula::not(p.app(vec![Term::Var(x)])),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "universalInstance",
            combo: "E",
            build: |t| {
                let p = t.signature.pred("p").unwrap().clone();
                let a = t.signature.fun("a").unwrap().app(vec![]);
                let x = Var::new(0, sort_alpha());
                Formula::implies(
                    Formula::forall(x.clone(), p.app(vec![Term::Var(x)])),
                    p.app(vec![a]),
                )
            },
        },
        NamedConjecture {
            id: "contraposition-0",
            combo: "E",
            build: |t| {
                let p = t.signature.pred("p").unwrap().clone();
                let q = t.signature.pred("q").unwrap().clone();
                let a = t.signature.fun("a").unwrap().app(vec![]);
                let b = t.signature.fun("b").unwrap().app(vec![]);
                Formula::iff(
                    Formula::implies(p.app(vec![a.clone()]), q.app(vec![b.clone()])),
                    Formula::implies(
                        Formula::not(q.app(vec![b])),
                        Formula::not(p.app(vec![a])),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "contraposition-1",
            combo: "E",
            build: |t| {
                let p = t.signature.pred("p").unwrap().clone();
                let q = t.signature.pred("q").unwrap().clone();
                let x = Var::new(0, sort_alpha());
                let y = Var::new(1, sort_alpha());
                Formula::forall(
                    x.clone(),
                    Formula::forall(
                        y.clone(),
                        Formula::iff(
                            Formula::implies(
                                p.app(vec![Term::Var(x.clone())]),
                                q.app(vec![Term::Var(y.clone())]),
                            ),
                            Formula::implies(
                                Formula::not(q.app(vec![Term::Var(y)])),
                                Formula::not(p.app(vec![Term::Var(x)])),
                            ),
                        ),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "currying-0",
            combo: "E",
            build: |t| {
                let p = t.signature.pred("p").unwrap().clone();
                let q = t.signature.pred("q").unwrap().clone();
                let r = t.signature.pred("r").unwrap().clone();
                let a = t.signature.fun("a").unwrap().app(vec![]);
                let b = t.signature.fun("b").unwrap().app(vec![]);
                let c = t.signature.fun("c").unwrap().app(vec![]);
                Formula::iff(
                    Formula::implies(
                        Formula::and(p.app(vec![a.clone()]), q.app(vec![b.clone()])),
                        r.app(vec![c.clone()]),
                    ),
                    Formula::implies(
                        p.app(vec![a]),
                        Formula::implies(q.app(vec![b]), r.app(vec![c])),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "currying-1",
            combo: "E",
            build: |t| {
                let p = t.signature.pred("p").unwrap().clone();
                let q = t.signature.pred("q").unwrap().clone();
                let r = t.signature.pred("r").unwrap().clone();
                let x = Var::new(0, sort_alpha());
                let y = Var::new(1, sort_alpha());
                let z = Var::new(2, sort_alpha());
                Formula::forall(
                    x.clone(),
                    Formula::forall(
                        y.clone(),
                        Formula::forall(
                            z.clone(),
                            Formula::iff(
                                Formula::implies(
                                    Formula::and(
                                        p.app(vec![Term::Var(x.clone())]),
                                        q.app(vec![Term::Var(y.clone())]),
                                    ),
                                    r.app(vec![Term::Var(z.clone())]),
                                ),
                                Formula::implies(
                                    p.app(vec![Term::Var(x)]),
                                    Formula::implies(
                                        q.app(vec![Term::Var(y)]),
                                        r.app(vec![Term::Var(z)]),
                                    ),
                                ),
                            ),
                        ),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "addGround-0",
            combo: "N+Add",
            build: |t| {
                let add = t.signature.fun("add").unwrap().clone();
                Formula::eq(add.app(vec![num(t, 1), num(t, 2)]), num(t, 3))
            },
        },
        NamedConjecture {
            id: "addGround-1",
            combo: "N+Add",
            build: |t| {
                let add = t.signature.fun("add").unwrap().clone();
                Formula::eq(add.app(vec![num(t, 8), num(t, 5)]), num(t, 13))
            },
        },
        NamedConjecture {
            id: "addExists",
            combo: "N+Add",
            build: |t| {
                let add = t.signature.fun("add").unwrap().clone();
                let x = Var::new(0, sort_nat());
                Formula::exists(
                    x.clone(),
                    Formula::eq(add.app(vec![num(t, 8), Term::Var(x)]), num(t, 13)),
                )
            },
        },
        NamedConjecture {
            id: "existsZeroAdd",
            combo: "N+Add",
            build: |t| {
                let add = t.signature.fun("add").unwrap().clone();
                let z = Var::new(0, sort_nat());
                let x = Var::new(1, sort_nat());
                Formula::exists(
                    z.clone(),
                    Formula::forall(
                        x.clone(),
                        Formula::eq(
                            add.app(vec![Term::Var(z), Term::Var(x.clone())]),
                            Term::Var(x),
                        ),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "mulGround",
            combo: "N+Add+Mul",
            build: |t| {
                let mul = t.signature.fun("mul").unwrap().clone();
                Formula::eq(mul.app(vec![num(t, 3), num(t, 4)]), num(t, 12))
            },
        },
        NamedConjecture {
            id: "mulExists",
            combo: "N+Add+Mul",
            build: |t| {
                let mul = t.signature.fun("mul").unwrap().clone();
                let x = Var::new(0, sort_nat());
                Formula::exists(
                    x.clone(),
                    Formula::eq(mul.app(vec![num(t, 3), Term::Var(x)]), num(t, 12)),
                )
            },
        },
        NamedConjecture {
            id: "existsZeroMul",
            combo: "N+Add+Mul",
            build: |t| {
                let mul = t.signature.fun("mul").unwrap().clone();
                let z = Var::new(0, sort_nat());
                let x = Var::new(1, sort_nat());
                Formula::exists(
                    z.clone(),
                    Formula::forall(
                        x.clone(),
                        Formula::eq(
                            mul.app(vec![Term::Var(z), Term::Var(x.clone())]),
                            Term::Var(x),
                        ),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "appendGround-0",
            combo: "N+L+App",
            build: |t| {
                let append = t.signature.fun("append").unwrap().clone();
                Formula::eq(
                    append.app(vec![list_term(t, &[]), list_term(t, &[7])]),
                    list_term(t, &[7]),
                )
            },
        },
        NamedConjecture {
            id: "appendGround-1",
            combo: "N+L+App",
            build: |t| {
                let append = t.signature.fun("append").unwrap().clone();
                Formula::eq(
                    append.app(vec![list_term(t, &[3]), list_term(t, &[7])]),
                    list_term(t, &[3, 7]),
                )
            },
        },
        NamedConjecture {
            id: "appendExists",
            combo: "N+L+App",
            build: |t| {
                let append = t.signature.fun("append").unwrap().clone();
                let x = Var::new(0, sort_lst());
                Formula::exists(
                    x.clone(),
                    Formula::eq(
                        append.app(vec![list_term(t, &[3]), Term::Var(x)]),
                        list_term(t, &[3, 7]),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "existsNil",
            combo: "N+L+App",
            build: |t| {
                let append = t.signature.fun("append").unwrap().clone();
                let n = Var::new(0, sort_lst());
                Formula::exists(
                    n.clone(),
                    Formula::eq(
                        append.app(vec![Term::Var(n), list_term(t, &[7])]),
                        list_term(t, &[7]),
                    ),
                )
            },
        },
    ]
}

/// The reflected-consequence suite: 20 fixed conjectures.
pub fn gen_refl1() -> Vec<ProblemInstance> {
    refl1_rows()
        .into_iter()
        .map(|row| {
            let base = builtin_theory(row.combo).unwrap();
            let conjecture = (row.build)(&base);
            let (theory, statement) = reflect_problem(&base, &conjecture);
            ProblemInstance {
                id: row.id.to_string(),
                suite: Suite::Refl1,
                theory,
                conjecture: statement,
                mode: Mode::Reflective,
                role: ExpectedRole::Consequence,
            }
        })
        .collect()
}

/// The base (unreflected) conjecture of a reflected-consequence row, for
/// evaluating the ground ones in the standard model.
pub fn refl1_base_conjecture(id: &str) -> Option<(Theory, Formula)> {
    refl1_rows().into_iter().find(|r| r.id == id).map(|row| {
        let base = builtin_theory(row.combo).unwrap();
        let conjecture = (row.build)(&base);
        (base, conjecture)
    })
}

fn ind_rows() -> Vec<NamedConjecture> {
    fn nv(i: usize) -> Term {
        v(i, sort_nat())
    }
    fn lv(i: usize) -> Term {
        v(i, sort_lst())
    }
    fn nvar(i: usize) -> Var {
        Var::new(i, sort_nat())
    }
    fn lvar(i: usize) -> Var {
        Var::new(i, sort_lst())
    }
    fn close_nat(n: usize, body: Formula) -> Formula {
        (0..n).rev().fold(body, |f, i| Formula::forall(nvar(i), f))
    }
    fn close_lst(n: usize, body: Formula) -> Formula {
        (0..n).rev().fold(body, |f, i| Formula::forall(lvar(i), f))
    }
    fn fun(t: &Theory, name: &str) -> FunSym {
        t.signature.fun(name).unwrap().clone()
    }
    fn pred(t: &Theory, name: &str) -> PredSym {
        t.signature.pred(name).unwrap().clone()
    }

    vec![
        NamedConjecture {
            id: "addCommut",
            combo: "N+Add",
            build: |t| {
                let add = fun(t, "add");
                close_nat(
                    2,
                    Formula::eq(add.app(vec![nv(0), nv(1)]), add.app(vec![nv(1), nv(0)])),
                )
            },
        },
        NamedConjecture {
            id: "mulCommut",
            combo: "N+Add+Mul",
            build: |t| {
                let mul = fun(t, "mul");
                close_nat(
                    2,
                    Formula::eq(mul.app(vec![nv(0), nv(1)]), mul.app(vec![nv(1), nv(0)])),
                )
            },
        },
        NamedConjecture {
            id: "addAssoc",
            combo: "N+Add",
            build: |t| {
                let add = fun(t, "add");
                close_nat(
                    3,
                    Formula::eq(
                        add.app(vec![nv(0), add.app(vec![nv(1), nv(2)])]),
                        add.app(vec![add.app(vec![nv(0), nv(1)]), nv(2)]),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "mulAssoc",
            combo: "N+Add+Mul",
            build: |t| {
                let mul = fun(t, "mul");
                close_nat(
                    3,
                    Formula::eq(
                        mul.app(vec![nv(0), mul.app(vec![nv(1), nv(2)])]),
                        mul.app(vec![mul.app(vec![nv(0), nv(1)]), nv(2)]),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "addNeutral",
            combo: "N+Add",
            build: |t| {
                let add = fun(t, "add");
                let zero = fun(t, "zero");
                close_nat(
                    1,
                    Formula::eq(add.app(vec![nv(0), zero.app(vec![])]), nv(0)),
                )
            },
        },
        NamedConjecture {
            id: "addNeutral-0",
            combo: "N+Add+Mul",
            build: |t| {
                let mul = fun(t, "mul");
                close_nat(1, Formula::eq(mul.app(vec![nv(0), num(t, 1)]), nv(0)))
            },
        },
        NamedConjecture {
            id: "addNeutral-1",
            combo: "N+Add+Mul",
            build: |t| {
                let mul = fun(t, "mul");
                close_nat(1, Formula::eq(mul.app(vec![num(t, 1), nv(0)]), nv(0)))
            },
        },
        NamedConjecture {
            id: "mulZero",
            combo: "N+Add+Mul",
            build: |t| {
                let mul = fun(t, "mul");
                let zero = fun(t, "zero");
                close_nat(
                    1,
                    Formula::eq(mul.app(vec![nv(0), zero.app(vec![])]), zero.app(vec![])),
                )
            },
        },
        NamedConjecture {
            id: "distr-0",
            combo: "N+Add+Mul",
            build: |t| {
                let mul = fun(t, "mul");
                let add = fun(t, "add");
                close_nat(
                    3,
                    Formula::eq(
                        mul.app(vec![nv(0), add.app(vec![nv(1), nv(2)])]),
                        add.app(vec![mul.app(vec![nv(0), nv(1)]), mul.app(vec![nv(0), nv(2)])]),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "distr-1",
            combo: "N+Add+Mul",
            build: |t| {
                let mul = fun(t, "mul");
                let add = fun(t, "add");
                close_nat(
                    3,
                    Formula::eq(
                        mul.app(vec![add.app(vec![nv(1), nv(2)]), nv(0)]),
                        add.app(vec![mul.app(vec![nv(1), nv(0)]), mul.app(vec![nv(2), nv(0)])]),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "leqTrans",
            combo: "N+Leq",
            build: |t| {
                let leq = pred(t, "leq");
                close_nat(
                    3,
                    Formula::implies(
                        Formula::and(leq.app(vec![nv(0), nv(1)]), leq.app(vec![nv(1), nv(2)])),
                        leq.app(vec![nv(0), nv(2)]),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "zeroMin",
            combo: "N+Leq",
            build: |t| {
                let leq = pred(t, "leq");
                let zero = fun(t, "zero");
                close_nat(1, leq.app(vec![zero.app(vec![]), nv(0)]))
            },
        },
        NamedConjecture {
            id: "addMonoton-0",
            combo: "N+Leq+Add",
            build: |t| {
                let leq = pred(t, "leq");
                let add = fun(t, "add");
                close_nat(2, leq.app(vec![nv(0), add.app(vec![nv(0), nv(1)])]))
            },
        },
        NamedConjecture {
            id: "addMonoton-1",
            combo: "N+Leq+Add",
            build: |t| {
                let leq = pred(t, "leq");
                let add = fun(t, "add");
                close_nat(1, leq.app(vec![nv(0), add.app(vec![nv(0), nv(0)])]))
            },
        },
        NamedConjecture {
            id: "addCommutId",
            combo: "N+Add+Id",
            build: |t| {
                let add = fun(t, "add");
                let id = fun(t, "id");
                close_nat(
                    2,
                    Formula::eq(
                        add.app(vec![id.app(vec![nv(0)]), nv(1)]),
                        add.app(vec![nv(1), nv(0)]),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "appendAssoc",
            combo: "N+L+App",
            build: |t| {
                let append = fun(t, "append");
                close_lst(
                    3,
                    Formula::eq(
                        append.app(vec![lv(0), append.app(vec![lv(1), lv(2)])]),
                        append.app(vec![append.app(vec![lv(0), lv(1)]), lv(2)]),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "appendMonoton",
            combo: "N+L+Pref+App",
            build: |t| {
                let append = fun(t, "append");
                let pref = pred(t, "pref");
                close_lst(2, pref.app(vec![lv(0), append.app(vec![lv(0), lv(1)])]))
            },
        },
        NamedConjecture {
            id: "allEqRefl",
            combo: "N+Eq",
            build: |t| {
                let equal = pred(t, "equal");
                close_nat(1, equal.app(vec![nv(0), nv(0), nv(0)]))
            },
        },
        NamedConjecture {
            id: "allEqDefsEquality",
            combo: "N+Eq",
            build: |t| {
                let equal = pred(t, "equal");
                close_nat(
                    3,
                    Formula::iff(
                        equal.app(vec![nv(0), nv(1), nv(2)]),
                        Formula::and(
                            Formula::eq(nv(0), nv(1)),
                            Formula::eq(nv(1), nv(2)),
                        ),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "revSelfInvers",
            combo: "N+L+App+Rev",
            build: |t| {
                let rev = fun(t, "rev");
                close_lst(1, Formula::eq(rev.app(vec![rev.app(vec![lv(0)])]), lv(0)))
            },
        },
        NamedConjecture {
            id: "revAppend-0",
            combo: "N+L+App+Rev",
            build: |t| {
                let rev = fun(t, "rev");
                let append = fun(t, "append");
                close_lst(
                    1,
                    Formula::eq(
                        append.app(vec![lv(0), append.app(vec![rev.app(vec![lv(0)]), lv(0)])]),
                        append.app(vec![append.app(vec![lv(0), rev.app(vec![lv(0)])]), lv(0)]),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "revAppend-1",
            combo: "N+L+App+Rev",
            build: |t| {
                let rev = fun(t, "rev");
                let append = fun(t, "append");
                close_lst(
                    1,
                    Formula::eq(
                        rev.app(vec![append.app(vec![lv(0), append.app(vec![lv(0), lv(0)])])]),
                        rev.app(vec![append.app(vec![append.app(vec![lv(0), lv(0)]), lv(0)])]),
                    ),
                )
            },
        },
        NamedConjecture {
            id: "revsEqual",
            combo: "N+L+App+Rev+Rev'",
            build: |t| {
                let rev = fun(t, "rev");
                let revp = fun(t, "rev'");
                close_lst(
                    1,
                    Formula::eq(rev.app(vec![lv(0)]), revp.app(vec![lv(0)])),
                )
            },
        },
    ]
}

/// Which way an induction problem is posed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndMode {
    /// Base theory with datatype declarations; for solvers with native
    /// induction.
    Native,
    /// Reflective inductive extension; conjecture stays in the base
    /// language.
    Reflective,
}

/// The induction suite, 23 problems, in the requested posing. Conjectures
/// bind their intended induction variable first, so it is `x₀` of its sort.
pub fn gen_ind(mode: IndMode) -> Vec<ProblemInstance> {
    ind_rows()
        .into_iter()
        .map(|row| {
            let base = builtin_theory(row.combo).unwrap();
            let conjecture = (row.build)(&base);
            let (theory, mode_tag) = match mode {
                IndMode::Native => (base, Mode::Direct),
                IndMode::Reflective => {
                    let (extended, _) =
                        reflective_inductive_extension(&base).expect("catalog theories reflect");
                    (extended, Mode::ReflectiveInductive)
                }
            };
            ProblemInstance {
                id: row.id.to_string(),
                suite: Suite::Ind,
                theory,
                conjecture,
                mode: mode_tag,
                role: ExpectedRole::Inductive,
            }
        })
        .collect()
}

/// One table lists this problem under a misspelled id; both spellings
/// resolve to the canonical one.
pub fn resolve_id_alias(id: &str) -> &str {
    if id == "allEqDfsEquality" {
        "allEqDefsEquality"
    } else {
        id
    }
}

#[cfg(test)]
mod tests;
