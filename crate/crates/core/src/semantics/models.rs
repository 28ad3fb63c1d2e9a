//! Ready-made interpretations: the standard generator-backed model of the
//! arithmetic/list catalog, exhaustive enumeration of all finite
//! interpretations of a small signature, and modular-arithmetic finite
//! models of the numeric fragments.

use std::sync::Arc;

use crate::logic::{FunSym, PredSym, Signature, Theory};

use super::{Domain, Elem, EvalError, Interpretation, TruthValue};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StandardModelError {
    #[error("no standard meaning for symbol `{0}`")]
    UnknownSymbol(String),
    #[error("no standard carrier for sort `{0}`")]
    UnknownSort(String),
}

fn nat(e: &Elem, sym: &str) -> Result<u64, EvalError> {
    match e {
        Elem::Nat(n) => Ok(*n),
        _ => Err(EvalError::DomainMismatch(sym.to_string())),
    }
}

fn list(e: &Elem, sym: &str) -> Result<Vec<u64>, EvalError> {
    match e {
        Elem::List(l) => Ok(l.clone()),
        _ => Err(EvalError::DomainMismatch(sym.to_string())),
    }
}

/// The standard model of the catalog theories: `nat` is the naturals, `lst`
/// is lists of naturals, and every catalog symbol gets its intended meaning.
pub fn standard_model(theory: &Theory) -> Result<Interpretation, StandardModelError> {
    let mut interp = Interpretation::new();
    for sort in theory.signature.base_sorts() {
        let domain = match sort.name.as_str() {
            "nat" => Domain::Nat,
            "lst" => Domain::List,
            other => return Err(StandardModelError::UnknownSort(other.to_string())),
        };
        interp.domains.insert(sort.name.clone(), domain);
    }

    for f in &theory.signature.funs {
        let meaning = standard_fun(f).ok_or_else(|| {
            StandardModelError::UnknownSymbol(f.name.clone())
        })?;
        interp.funs.insert(f.name.clone(), meaning);
    }
    for p in &theory.signature.preds {
        let meaning = standard_pred(p).ok_or_else(|| {
            StandardModelError::UnknownSymbol(p.name.clone())
        })?;
        interp.preds.insert(p.name.clone(), meaning);
    }
    Ok(interp)
}

fn standard_fun(f: &FunSym) -> Option<super::FunMeaning> {
    let meaning: super::FunMeaning = match f.name.as_str() {
        "zero" => Arc::new(|_: &[Elem]| Ok(Elem::Nat(0))),
        "s" => Arc::new(|args: &[Elem]| Ok(Elem::Nat(nat(&args[0], "s")? + 1))),
        "add" => Arc::new(|args: &[Elem]| {
            Ok(Elem::Nat(nat(&args[0], "add")? + nat(&args[1], "add")?))
        }),
        "mul" => Arc::new(|args: &[Elem]| {
            Ok(Elem::Nat(nat(&args[0], "mul")? * nat(&args[1], "mul")?))
        }),
        "id" => Arc::new(|args: &[Elem]| Ok(Elem::Nat(nat(&args[0], "id")?))),
        "nil" => Arc::new(|_: &[Elem]| Ok(Elem::List(vec![]))),
        "cons" => Arc::new(|args: &[Elem]| {
            let mut l = vec![nat(&args[0], "cons")?];
            l.extend(list(&args[1], "cons")?);
            Ok(Elem::List(l))
        }),
        "append" => Arc::new(|args: &[Elem]| {
            let mut l = list(&args[0], "append")?;
            l.extend(list(&args[1], "append")?);
            Ok(Elem::List(l))
        }),
        "rev" => Arc::new(|args: &[Elem]| {
            let mut l = list(&args[0], "rev")?;
            l.reverse();
            Ok(Elem::List(l))
        }),
        "revAcc" => Arc::new(|args: &[Elem]| {
            let mut l = list(&args[0], "revAcc")?;
            l.reverse();
            l.extend(list(&args[1], "revAcc")?);
            Ok(Elem::List(l))
        }),
        "rev'" => Arc::new(|args: &[Elem]| {
            let mut l = list(&args[0], "rev'")?;
            l.reverse();
            Ok(Elem::List(l))
        }),
        _ => return None,
    };
    Some(meaning)
}

fn standard_pred(p: &PredSym) -> Option<super::PredMeaning> {
    let meaning: super::PredMeaning = match p.name.as_str() {
        "leq" => Arc::new(|args: &[Elem]| {
            Ok(TruthValue::from_bool(
                nat(&args[0], "leq")? <= nat(&args[1], "leq")?,
            ))
        }),
        "pref" => Arc::new(|args: &[Elem]| {
            let a = list(&args[0], "pref")?;
            let b = list(&args[1], "pref")?;
            Ok(TruthValue::from_bool(b.starts_with(&a)))
        }),
        "equal" => Arc::new(|args: &[Elem]| {
            let (x, y, z) = (
                nat(&args[0], "equal")?,
                nat(&args[1], "equal")?,
                nat(&args[2], "equal")?,
            );
            Ok(TruthValue::from_bool(x == y && y == z))
        }),
        _ => return None,
    };
    Some(meaning)
}

/// All interpretations of a signature on finite carriers of the given size.
/// Every function gets every possible table and every predicate every
/// possible relation, in a fixed order. Only feasible for tiny signatures.
pub fn all_interpretations(sig: &Signature, size: usize) -> Vec<Interpretation> {
    let mut models = vec![base_model(sig, size)];
    for f in &sig.funs {
        let inputs = size.pow(f.arity() as u32);
        let tables = size.pow(inputs as u32);
        models = models
            .into_iter()
            .flat_map(|m| {
                (0..tables).map(move |t| {
                    let mut m = m.clone();
                    let table = decode_table(t, inputs, size);
                    let name = f.name.clone();
                    let arity = f.arity();
                    m.fun_table(&f.name, move |args: &[Elem]| {
                        Ok(Elem::Fin(table[table_index(args, size, arity, &name)?]))
                    });
                    m
                })
            })
            .collect();
    }
    for p in &sig.preds {
        let inputs = size.pow(p.arity() as u32);
        let relations = 1usize << inputs;
        models = models
            .into_iter()
            .flat_map(|m| {
                (0..relations).map(move |r| {
                    let mut m = m.clone();
                    let name = p.name.clone();
                    let arity = p.arity();
                    m.pred_table(&p.name, move |args: &[Elem]| {
                        let idx = table_index(args, size, arity, &name)?;
                        Ok(TruthValue::from_bool(r >> idx & 1 == 1))
                    });
                    m
                })
            })
            .collect();
    }
    models
}

fn base_model(sig: &Signature, size: usize) -> Interpretation {
    let mut m = Interpretation::new();
    for sort in sig.base_sorts() {
        m.domains.insert(sort.name.clone(), Domain::Finite(size));
    }
    m
}

fn decode_table(mut code: usize, inputs: usize, size: usize) -> Vec<usize> {
    let mut table = Vec::with_capacity(inputs);
    for _ in 0..inputs {
        table.push(code % size);
        code /= size;
    }
    table
}

fn table_index(args: &[Elem], size: usize, arity: usize, sym: &str) -> Result<usize, EvalError> {
    debug_assert_eq!(args.len(), arity);
    let mut idx = 0;
    for a in args {
        let Elem::Fin(v) = a else {
            return Err(EvalError::DomainMismatch(sym.to_string()));
        };
        idx = idx * size + v;
    }
    Ok(idx)
}

/// A finite model of the numeric catalog fragments on `Z/k`: successor is
/// `+1 mod k`, addition and multiplication are modular, `leq` is the full
/// relation (which satisfies both ordering axioms), `id` the identity. The
/// list sort collapses to a point, which satisfies the append and reverse
/// equations. The `equal` and `pref` fragments have no finite models of this
/// shape and are rejected.
pub fn modular_nat_model(theory: &Theory, k: usize) -> Result<Interpretation, StandardModelError> {
    assert!(k > 0);
    let mut interp = Interpretation::new();
    for sort in theory.signature.base_sorts() {
        let size = match sort.name.as_str() {
            "nat" => k,
            "lst" => 1,
            other => return Err(StandardModelError::UnknownSort(other.to_string())),
        };
        interp.domains.insert(sort.name.clone(), Domain::Finite(size));
    }

    for f in &theory.signature.funs {
        let name = f.name.clone();
        let meaning: super::FunMeaning = match f.name.as_str() {
            "zero" => Arc::new(|_: &[Elem]| Ok(Elem::Fin(0))),
            "s" => Arc::new(move |args: &[Elem]| Ok(Elem::Fin((fin(&args[0], "s")? + 1) % k))),
            "add" => Arc::new(move |args: &[Elem]| {
                Ok(Elem::Fin((fin(&args[0], "add")? + fin(&args[1], "add")?) % k))
            }),
            "mul" => Arc::new(move |args: &[Elem]| {
                Ok(Elem::Fin((fin(&args[0], "mul")? * fin(&args[1], "mul")?) % k))
            }),
            "id" => Arc::new(move |args: &[Elem]| Ok(Elem::Fin(fin(&args[0], "id")?))),
            "nil" | "cons" | "append" | "rev" | "revAcc" | "rev'" => {
                Arc::new(|_: &[Elem]| Ok(Elem::Fin(0)))
            }
            _ => return Err(StandardModelError::UnknownSymbol(name)),
        };
        interp.funs.insert(f.name.clone(), meaning);
    }
    for p in &theory.signature.preds {
        let meaning: super::PredMeaning = match p.name.as_str() {
            "leq" => Arc::new(|_: &[Elem]| Ok(TruthValue::True)),
            other => return Err(StandardModelError::UnknownSymbol(other.to_string())),
        };
        interp.preds.insert(p.name.clone(), meaning);
    }
    Ok(interp)
}

fn fin(e: &Elem, sym: &str) -> Result<usize, EvalError> {
    match e {
        Elem::Fin(n) => Ok(*n),
        _ => Err(EvalError::DomainMismatch(sym.to_string())),
    }
}

/// Deterministic decimation: every `stride`-th model of `all`, capped at
/// `count`.
pub fn sample_models(all: Vec<Interpretation>, count: usize) -> Vec<Interpretation> {
    if all.len() <= count || count == 0 {
        return all;
    }
    let stride = all.len() / count;
    all.into_iter().step_by(stride.max(1)).take(count).collect()
}
