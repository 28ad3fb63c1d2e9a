//! Deterministic enumeration of terms and core formulas.
//!
//! Formulas stream in a fixed order: by depth, then by constructor (atoms,
//! `¬`, `∨`, `∀`), then lexicographically on children in stream order. The
//! stream is duplicate-free and, consumed to exhaustion for a given depth,
//! covers every closed core formula up to that depth with variable indices
//! below the budget. Level sizes grow doubly exponentially with depth, so
//! deep levels are only ever consumed as a prefix.

use std::collections::{BTreeSet, VecDeque};

use crate::logic::{Formula, Signature, Sort, Term, Var};

/// Terms of `sort`, grouped by exact depth `0..=max_depth`. Variables with
/// indices below `var_budget` and constants sit at depth 0.
pub fn term_levels(
    sig: &Signature,
    sort: &Sort,
    max_depth: usize,
    var_budget: usize,
) -> Vec<Vec<Term>> {
    let mut levels: Vec<Vec<Term>> = Vec::new();
    for depth in 0..=max_depth {
        let mut level = Vec::new();
        if depth == 0 {
            for i in 0..var_budget {
                level.push(Term::Var(Var::new(i, sort.clone())));
            }
            for f in &sig.funs {
                if f.codomain == *sort && f.arity() == 0 {
                    level.push(f.app(vec![]));
                }
            }
        } else {
            for f in &sig.funs {
                if f.codomain != *sort || f.arity() == 0 {
                    continue;
                }
                let arg_levels: Vec<Vec<Vec<Term>>> = f
                    .domain
                    .iter()
                    .map(|s| term_levels(sig, s, depth - 1, var_budget))
                    .collect();
                tuples_of_max_depth(&arg_levels, depth - 1, &mut |tuple| {
                    level.push(f.app(tuple));
                });
            }
        }
        levels.push(level);
    }
    levels
}

/// Walks all argument tuples whose deepest member has exactly depth
/// `target`, in lexicographic order over the flattened per-argument streams.
fn tuples_of_max_depth(
    arg_levels: &[Vec<Vec<Term>>],
    target: usize,
    emit: &mut impl FnMut(Vec<Term>),
) {
    fn rec(
        arg_levels: &[Vec<Vec<Term>>],
        target: usize,
        pos: usize,
        acc: &mut Vec<Term>,
        deepest: usize,
        emit: &mut impl FnMut(Vec<Term>),
    ) {
        if pos == arg_levels.len() {
            if deepest == target {
                emit(acc.clone());
            }
            return;
        }
        for (depth, level) in arg_levels[pos].iter().enumerate() {
            for term in level {
                acc.push(term.clone());
                rec(arg_levels, target, pos + 1, acc, deepest.max(depth), emit);
                acc.pop();
            }
        }
    }
    rec(arg_levels, target, 0, &mut Vec::new(), 0, emit);
}

/// All terms of `sort` up to `max_depth`, flattened in stream order.
pub fn terms_up_to(sig: &Signature, sort: &Sort, max_depth: usize, var_budget: usize) -> Vec<Term> {
    term_levels(sig, sort, max_depth, var_budget)
        .into_iter()
        .flatten()
        .collect()
}

/// Lists of naturals ordered by weight (length plus element sum), then
/// lexicographically; the first `count` of them.
pub fn lists_by_weight(count: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut weight = 0u64;
    while out.len() < count && weight <= 64 {
        emit_lists_of_weight(weight, &mut Vec::new(), &mut out, count);
        weight += 1;
    }
    out
}

fn emit_lists_of_weight(weight: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>, count: usize) {
    if out.len() == count {
        return;
    }
    if weight == 0 {
        out.push(prefix.clone());
        return;
    }
    // Appending an element costs 1 plus its value.
    for head in 0..weight {
        prefix.push(head);
        emit_lists_of_weight(weight - 1 - head, prefix, out, count);
        prefix.pop();
        if out.len() == count {
            return;
        }
    }
}

/// A formula with its free variables packed into a bitmask over
/// `(sort position, index)` pairs.
#[derive(Clone)]
struct Entry {
    formula: Formula,
    free_mask: u64,
}

#[derive(Clone, Copy, PartialEq)]
enum Phase {
    Atoms,
    Not(usize),
    Or(usize, usize),
    Forall(usize, usize, usize),
    LevelDone,
}

/// Iterator over core formulas; see the module docs for ordering. Completed
/// levels are kept for building deeper ones; the level under construction is
/// retained only while deeper levels can still be requested.
pub struct FormulaStream {
    sig: Signature,
    max_depth: usize,
    var_budget: usize,
    allowed_mask: u64,
    sorts: Vec<Sort>,
    levels: Vec<Vec<Entry>>,
    current_level: Vec<Entry>,
    retain_current: bool,
    /// Prefix sums of completed level lengths, for flat child indexing.
    cumulative: Vec<usize>,
    pending: VecDeque<Entry>,
    current_depth: usize,
    phase: Phase,
    exhausted: bool,
    retain_all: bool,
}

fn var_bit(sorts: &[Sort], var_budget: usize, v: &Var) -> u64 {
    let sort_pos = sorts.iter().position(|s| s == &v.sort).expect("known sort");
    1u64 << (sort_pos * var_budget + v.index)
}

impl FormulaStream {
    fn new(
        sig: &Signature,
        max_depth: usize,
        var_budget: usize,
        allowed: &BTreeSet<Var>,
        retain_all: bool,
    ) -> Self {
        let sorts: Vec<Sort> = sig.sorts.clone();
        assert!(
            sorts.len() * var_budget <= 64,
            "free-variable bitmask overflow"
        );
        let allowed_mask = allowed
            .iter()
            .map(|v| var_bit(&sorts, var_budget, v))
            .fold(0, |a, b| a | b);
        FormulaStream {
            sig: sig.clone(),
            max_depth,
            var_budget,
            allowed_mask,
            sorts,
            levels: Vec::new(),
            current_level: Vec::new(),
            retain_current: retain_all || max_depth > 0,
            cumulative: vec![0],
            pending: VecDeque::new(),
            current_depth: 0,
            phase: Phase::Atoms,
            exhausted: false,
            retain_all,
        }
    }

    fn entry(&self, formula: Formula) -> Entry {
        let mask = formula
            .free_vars()
            .iter()
            .map(|v| var_bit(&self.sorts, self.var_budget, v))
            .fold(0, |a, b| a | b);
        Entry {
            formula,
            free_mask: mask,
        }
    }

    /// Atoms whose deepest argument term has exactly `depth`: `⊥` at depth
    /// 0, predicate applications, and equations.
    fn queue_atoms(&mut self, depth: usize) {
        let mut out = Vec::new();
        if depth == 0 {
            out.push(self.entry(Formula::False));
        }
        for p in self.sig.preds.clone() {
            if p.arity() == 0 {
                if depth == 0 {
                    out.push(self.entry(p.app(vec![])));
                }
                continue;
            }
            let arg_levels: Vec<Vec<Vec<Term>>> = p
                .domain
                .iter()
                .map(|s| term_levels(&self.sig, s, depth, self.var_budget))
                .collect();
            let mut atoms = Vec::new();
            tuples_of_max_depth(&arg_levels, depth, &mut |tuple| {
                atoms.push(p.app(tuple));
            });
            out.extend(atoms.into_iter().map(|a| self.entry(a)));
        }
        for sort in self.sig.sorts.clone() {
            let levels = term_levels(&self.sig, &sort, depth, self.var_budget);
            for (da, a) in levels.iter().enumerate() {
                for (db, b) in levels.iter().enumerate() {
                    if da.max(db) != depth {
                        continue;
                    }
                    for ta in a {
                        for tb in b {
                            out.push(self.entry(Formula::Eq(
                                sort.clone(),
                                ta.clone(),
                                tb.clone(),
                            )));
                        }
                    }
                }
            }
        }
        self.pending.extend(out);
    }

    /// Maps a flat child index over completed levels to `(level, offset)`.
    fn flat(&self, i: usize) -> Option<(usize, usize)> {
        let total = *self.cumulative.last().unwrap();
        if i >= total {
            return None;
        }
        let level = self.cumulative.partition_point(|&c| c <= i) - 1;
        Some((level, i - self.cumulative[level]))
    }

    fn produce(&mut self) -> Option<Entry> {
        loop {
            if self.exhausted {
                return None;
            }
            match self.phase {
                Phase::Atoms => {
                    self.queue_atoms(self.current_depth);
                    self.phase = if self.current_depth == 0 {
                        Phase::LevelDone
                    } else {
                        Phase::Not(0)
                    };
                    if let Some(e) = self.pending.pop_front() {
                        return Some(e);
                    }
                }
                Phase::Not(i) => {
                    let prev = &self.levels[self.current_depth - 1];
                    if i < prev.len() {
                        let child = &prev[i];
                        let e = Entry {
                            formula: Formula::not(child.formula.clone()),
                            free_mask: child.free_mask,
                        };
                        self.phase = Phase::Not(i + 1);
                        return Some(e);
                    }
                    self.phase = Phase::Or(0, 0);
                }
                Phase::Or(i, j) => {
                    let Some((li, oi)) = self.flat(i) else {
                        self.phase = Phase::Forall(0, 0, 0);
                        continue;
                    };
                    let Some((lj, oj)) = self.flat(j) else {
                        self.phase = Phase::Or(i + 1, 0);
                        continue;
                    };
                    self.phase = Phase::Or(i, j + 1);
                    if li.max(lj) == self.current_depth - 1 {
                        let a = &self.levels[li][oi];
                        let b = &self.levels[lj][oj];
                        return Some(Entry {
                            formula: Formula::or(a.formula.clone(), b.formula.clone()),
                            free_mask: a.free_mask | b.free_mask,
                        });
                    }
                }
                Phase::Forall(s, v, i) => {
                    if s >= self.sorts.len() {
                        self.phase = Phase::LevelDone;
                        continue;
                    }
                    if v >= self.var_budget {
                        self.phase = Phase::Forall(s + 1, 0, 0);
                        continue;
                    }
                    let prev = &self.levels[self.current_depth - 1];
                    if i >= prev.len() {
                        self.phase = Phase::Forall(s, v + 1, 0);
                        continue;
                    }
                    let var = Var::new(v, self.sorts[s].clone());
                    let bit = var_bit(&self.sorts, self.var_budget, &var);
                    let body = &prev[i];
                    self.phase = Phase::Forall(s, v, i + 1);
                    return Some(Entry {
                        formula: Formula::forall(var, body.formula.clone()),
                        free_mask: body.free_mask & !bit,
                    });
                }
                Phase::LevelDone => {
                    if self.current_depth == self.max_depth {
                        self.exhausted = true;
                        return None;
                    }
                    let finished = std::mem::take(&mut self.current_level);
                    let total = self.cumulative.last().unwrap() + finished.len();
                    self.levels.push(finished);
                    self.cumulative.push(total);
                    self.current_depth += 1;
                    self.retain_current = self.retain_all || self.current_depth < self.max_depth;
                    self.phase = Phase::Atoms;
                }
            }
        }
    }

    fn into_levels(mut self) -> Vec<Vec<Entry>> {
        while self.next().is_some() {}
        if !self.current_level.is_empty() || self.levels.len() == self.current_depth {
            let last = std::mem::take(&mut self.current_level);
            self.levels.push(last);
        }
        self.levels
    }
}

impl Iterator for FormulaStream {
    type Item = Formula;

    fn next(&mut self) -> Option<Formula> {
        loop {
            let entry = if let Some(e) = self.pending.pop_front() {
                e
            } else {
                self.produce()?
            };
            let emit = entry.free_mask & !self.allowed_mask == 0;
            let formula = if self.retain_current {
                let f = if emit { Some(entry.formula.clone()) } else { None };
                self.current_level.push(entry);
                f
            } else {
                emit.then_some(entry.formula)
            };
            if let Some(f) = formula {
                return Some(f);
            }
        }
    }
}

/// Streams all closed core formulas over `sig` up to the given depth.
pub fn enumerate_formulas(
    sig: &Signature,
    depth: usize,
    var_budget: usize,
) -> impl Iterator<Item = Formula> {
    FormulaStream::new(sig, depth, var_budget, &BTreeSet::new(), false)
}

/// Streams all core formulas whose free variables are contained in
/// `allowed`.
pub fn enumerate_formulas_with_free(
    sig: &Signature,
    depth: usize,
    var_budget: usize,
    allowed: &BTreeSet<Var>,
) -> impl Iterator<Item = Formula> {
    FormulaStream::new(sig, depth, var_budget, allowed, false)
}

/// All formulas per exact-depth level, open ones included. Only usable for
/// shallow depths; intended for oracles and instance sweeps.
pub fn formula_levels(sig: &Signature, depth: usize, var_budget: usize) -> Vec<Vec<Formula>> {
    let free: BTreeSet<Var> = sig
        .sorts
        .iter()
        .flat_map(|s| (0..var_budget).map(move |i| Var::new(i, s.clone())))
        .collect();
    let stream = FormulaStream::new(sig, depth, var_budget, &free, true);
    stream
        .into_levels()
        .into_iter()
        .map(|level| level.into_iter().map(|e| e.formula).collect())
        .collect()
}
