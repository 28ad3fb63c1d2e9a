//! Parser for the theory surface format.

use std::collections::HashMap;
use std::fmt;

use crate::logic::{
    Formula, FunSym, InductiveDatatype, PredSym, Sort, SortKind, Term, Theory, TypeError, Var,
};

use super::TheoryDocument;

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    fn new(pos: Pos, message: impl Into<String>) -> Self {
        ParseError {
            line: pos.line,
            col: pos.col,
            message: message.into(),
        }
    }

    /// Wraps the typechecker's verdict on a freshly parsed document.
    fn from_type_errors(errors: Vec<TypeError>) -> Self {
        ParseError {
            line: 0,
            col: 0,
            message: errors
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join("; "),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
struct Pos {
    line: usize,
    col: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Str(String),
    Dot,
    Comma,
    Colon,
    LParen,
    RParen,
    Eq,
    Neq,
    Pipe,
    Amp,
    Arrow,
    Iff,
    Tilde,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Str(s) => write!(f, "\"{s}\""),
            Tok::Dot => write!(f, "`.`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Eq => write!(f, "`=`"),
            Tok::Neq => write!(f, "`!=`"),
            Tok::Pipe => write!(f, "`|`"),
            Tok::Amp => write!(f, "`&`"),
            Tok::Arrow => write!(f, "`->`"),
            Tok::Iff => write!(f, "`<->`"),
            Tok::Tilde => write!(f, "`~`"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let mut line = 1;
    let mut col = 1;

    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else if c.is_some() {
                col += 1;
            }
            c
        }};
    }

    loop {
        let pos = Pos { line, col };
        let Some(&c) = chars.peek() else { break };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump!();
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump!();
                }
            }
            '.' => {
                bump!();
                out.push((Tok::Dot, pos));
            }
            ',' => {
                bump!();
                out.push((Tok::Comma, pos));
            }
            ':' => {
                bump!();
                out.push((Tok::Colon, pos));
            }
            '(' => {
                bump!();
                out.push((Tok::LParen, pos));
            }
            ')' => {
                bump!();
                out.push((Tok::RParen, pos));
            }
            '=' => {
                bump!();
                out.push((Tok::Eq, pos));
            }
            '|' => {
                bump!();
                out.push((Tok::Pipe, pos));
            }
            '&' => {
                bump!();
                out.push((Tok::Amp, pos));
            }
            '~' => {
                bump!();
                out.push((Tok::Tilde, pos));
            }
            '!' => {
                bump!();
                if chars.peek() == Some(&'=') {
                    bump!();
                    out.push((Tok::Neq, pos));
                } else {
                    return Err(ParseError::new(pos, "expected `!=`"));
                }
            }
            '-' => {
                bump!();
                if chars.peek() == Some(&'>') {
                    bump!();
                    out.push((Tok::Arrow, pos));
                } else {
                    return Err(ParseError::new(pos, "expected `->`"));
                }
            }
            '<' => {
                bump!();
                if chars.peek() == Some(&'-') {
                    bump!();
                    if chars.peek() == Some(&'>') {
                        bump!();
                        out.push((Tok::Iff, pos));
                    } else {
                        return Err(ParseError::new(pos, "expected `<->`"));
                    }
                } else {
                    return Err(ParseError::new(pos, "expected `<->`"));
                }
            }
            '"' => {
                bump!();
                let mut s = String::new();
                loop {
                    match bump!() {
                        Some('"') => break,
                        Some(c) => s.push(c),
                        None => return Err(ParseError::new(pos, "unterminated string")),
                    }
                }
                out.push((Tok::Str(s), pos));
            }
            c if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                        s.push(c);
                        bump!();
                    } else {
                        break;
                    }
                }
                out.push((Tok::Ident(s), pos));
            }
            other => {
                return Err(ParseError::new(pos, format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    theory: Theory,
    conjecture: Option<Formula>,
    problem: Option<String>,
    text_end: Pos,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks
            .get(self.at)
            .map(|(_, p)| *p)
            .unwrap_or(self.text_end)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(t) if t == tok => Ok(()),
            Some(t) => Err(ParseError::new(pos, format!("expected {tok}, found {t}"))),
            None => Err(ParseError::new(pos, format!("expected {tok}, found end of input"))),
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Ident(s)) => Ok(s),
            Some(t) => Err(ParseError::new(pos, format!("expected identifier, found {t}"))),
            None => Err(ParseError::new(pos, "expected identifier, found end of input")),
        }
    }

    fn string(&mut self) -> Result<String, ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Str(s)) => Ok(s),
            Some(t) => Err(ParseError::new(pos, format!("expected string, found {t}"))),
            None => Err(ParseError::new(pos, "expected string, found end of input")),
        }
    }

    fn sort_by_name(&self, name: &str, pos: Pos) -> Result<Sort, ParseError> {
        self.theory
            .signature
            .sort(name)
            .cloned()
            .ok_or_else(|| ParseError::new(pos, format!("unknown sort `{name}`")))
    }

    fn parse_document(&mut self) -> Result<(), ParseError> {
        while let Some(tok) = self.peek() {
            let pos = self.pos();
            let Tok::Ident(keyword) = tok.clone() else {
                return Err(ParseError::new(pos, format!("expected a declaration, found {tok}")));
            };
            self.next();
            match keyword.as_str() {
                "theory" => {
                    self.theory.name = self.string()?;
                    self.expect(Tok::Dot)?;
                }
                "problem" => {
                    self.problem = Some(self.string()?);
                    self.expect(Tok::Dot)?;
                }
                "sort" => self.parse_sort_decl()?,
                "data" => self.parse_data_decl()?,
                "fun" => self.parse_fun_decl()?,
                "pred" => self.parse_pred_decl()?,
                "axiom" => {
                    let f = self.parse_formula_toplevel()?;
                    self.expect(Tok::Dot)?;
                    self.theory.axioms.push(f);
                }
                "conjecture" => {
                    let f = self.parse_formula_toplevel()?;
                    self.expect(Tok::Dot)?;
                    if self.conjecture.is_some() {
                        return Err(ParseError::new(pos, "duplicate conjecture"));
                    }
                    self.conjecture = Some(f);
                }
                other => {
                    return Err(ParseError::new(
                        pos,
                        format!("unknown declaration keyword `{other}`"),
                    ));
                }
            }
        }
        Ok(())
    }

    fn parse_sort_decl(&mut self) -> Result<(), ParseError> {
        let pos = self.pos();
        let name = self.ident()?;
        let kind = if self.peek() == Some(&Tok::Colon) {
            self.next();
            let kpos = self.pos();
            let kind_name = self.ident()?;
            match kind_name.as_str() {
                "form" => SortKind::Form,
                "env" => SortKind::Env,
                "var" | "term" => {
                    self.expect(Tok::LParen)?;
                    let bpos = self.pos();
                    let base = self.ident()?;
                    self.expect(Tok::RParen)?;
                    self.sort_by_name(&base, bpos)?;
                    if kind_name == "var" {
                        SortKind::VarOf(base)
                    } else {
                        SortKind::TermOf(base)
                    }
                }
                other => {
                    return Err(ParseError::new(kpos, format!("unknown sort kind `{other}`")));
                }
            }
        } else {
            SortKind::Base
        };
        self.expect(Tok::Dot)?;
        if self.theory.signature.sort(&name).is_some() {
            return Err(ParseError::new(pos, format!("duplicate sort `{name}`")));
        }
        if kind != SortKind::Base {
            self.theory.reflected = true;
        }
        self.theory.signature.sorts.push(Sort { name, kind });
        Ok(())
    }

    fn parse_data_decl(&mut self) -> Result<(), ParseError> {
        let pos = self.pos();
        let sort_name = self.ident()?;
        let sort = self.sort_by_name(&sort_name, pos)?;
        self.expect(Tok::Eq)?;
        let mut ctors = Vec::new();
        loop {
            let cpos = self.pos();
            let cname = self.ident()?;
            let mut domain = Vec::new();
            if self.peek() == Some(&Tok::LParen) {
                self.next();
                loop {
                    let spos = self.pos();
                    let sname = self.ident()?;
                    domain.push(self.sort_by_name(&sname, spos)?);
                    match self.next() {
                        Some(Tok::Comma) => continue,
                        Some(Tok::RParen) => break,
                        _ => return Err(ParseError::new(spos, "expected `,` or `)`")),
                    }
                }
            }
            if self.theory.signature.has_name(&cname) {
                return Err(ParseError::new(cpos, format!("duplicate symbol `{cname}`")));
            }
            let ctor = FunSym::new(cname, domain, sort.clone());
            self.theory.signature.funs.push(ctor.clone());
            ctors.push(ctor);
            match self.peek() {
                Some(Tok::Pipe) => {
                    self.next();
                }
                _ => break,
            }
        }
        self.expect(Tok::Dot)?;
        self.theory.datatypes.push(InductiveDatatype { sort, ctors });
        Ok(())
    }

    fn parse_fun_decl(&mut self) -> Result<(), ParseError> {
        let pos = self.pos();
        let name = self.ident()?;
        self.expect(Tok::Colon)?;
        let mut sorts = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::Ident(_)) => {
                    let spos = self.pos();
                    let sname = self.ident()?;
                    sorts.push((self.sort_by_name(&sname, spos)?, spos));
                }
                Some(Tok::Arrow) | Some(Tok::Dot) => break,
                _ => return Err(ParseError::new(self.pos(), "expected a sort name")),
            }
        }
        let (domain, codomain) = match self.next() {
            Some(Tok::Arrow) => {
                let cpos = self.pos();
                let cname = self.ident()?;
                let codomain = self.sort_by_name(&cname, cpos)?;
                self.expect(Tok::Dot)?;
                (sorts.into_iter().map(|(s, _)| s).collect(), codomain)
            }
            Some(Tok::Dot) => {
                if sorts.len() != 1 {
                    return Err(ParseError::new(
                        pos,
                        "constant declaration needs exactly one sort",
                    ));
                }
                (Vec::new(), sorts.pop().unwrap().0)
            }
            _ => return Err(ParseError::new(self.pos(), "expected `->` or `.`")),
        };
        if self.theory.signature.has_name(&name) {
            return Err(ParseError::new(pos, format!("duplicate symbol `{name}`")));
        }
        self.theory.signature.funs.push(FunSym::new(name, domain, codomain));
        Ok(())
    }

    fn parse_pred_decl(&mut self) -> Result<(), ParseError> {
        let pos = self.pos();
        let name = self.ident()?;
        let mut domain = Vec::new();
        if self.peek() == Some(&Tok::Colon) {
            self.next();
            while let Some(Tok::Ident(_)) = self.peek() {
                let spos = self.pos();
                let sname = self.ident()?;
                domain.push(self.sort_by_name(&sname, spos)?);
            }
        }
        self.expect(Tok::Dot)?;
        if self.theory.signature.has_name(&name) {
            return Err(ParseError::new(pos, format!("duplicate symbol `{name}`")));
        }
        self.theory.signature.preds.push(PredSym::new(name, domain));
        Ok(())
    }

    fn parse_formula_toplevel(&mut self) -> Result<Formula, ParseError> {
        let mut scope = VarScope::default();
        self.parse_formula_prec(&mut scope)
    }

    fn parse_formula_prec(&mut self, scope: &mut VarScope) -> Result<Formula, ParseError> {
        self.parse_iff(scope)
    }

    fn parse_iff(&mut self, scope: &mut VarScope) -> Result<Formula, ParseError> {
        let left = self.parse_implies(scope)?;
        if self.peek() == Some(&Tok::Iff) {
            self.next();
            let right = self.parse_iff(scope)?;
            Ok(Formula::iff(left, right))
        } else {
            Ok(left)
        }
    }

    fn parse_implies(&mut self, scope: &mut VarScope) -> Result<Formula, ParseError> {
        let left = self.parse_or(scope)?;
        if self.peek() == Some(&Tok::Arrow) {
            self.next();
            let right = self.parse_implies(scope)?;
            Ok(Formula::implies(left, right))
        } else {
            Ok(left)
        }
    }

    fn parse_or(&mut self, scope: &mut VarScope) -> Result<Formula, ParseError> {
        let mut left = self.parse_and(scope)?;
        while self.peek() == Some(&Tok::Pipe) {
            self.next();
            let right = self.parse_and(scope)?;
            left = Formula::or(left, right);
        }
        Ok(left)
    }

    fn parse_and(&mut self, scope: &mut VarScope) -> Result<Formula, ParseError> {
        let mut left = self.parse_unary(scope)?;
        while self.peek() == Some(&Tok::Amp) {
            self.next();
            let right = self.parse_unary(scope)?;
            left = Formula::and(left, right);
        }
        Ok(left)
    }

    fn parse_unary(&mut self, scope: &mut VarScope) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Tilde) => {
                self.next();
                Ok(Formula::not(self.parse_unary(scope)?))
            }
            Some(Tok::Ident(s)) if s == "not" => {
                self.next();
                Ok(Formula::not(self.parse_unary(scope)?))
            }
            Some(Tok::Ident(s)) if s == "forall" || s == "exists" => {
                let universal = s == "forall";
                self.next();
                self.parse_quantifier(universal, scope)
            }
            _ => self.parse_atom(scope),
        }
    }

    fn parse_quantifier(
        &mut self,
        universal: bool,
        scope: &mut VarScope,
    ) -> Result<Formula, ParseError> {
        let mut binders = Vec::new();
        loop {
            let name = self.ident()?;
            self.expect(Tok::Colon)?;
            let spos = self.pos();
            let sname = self.ident()?;
            let sort = self.sort_by_name(&sname, spos)?;
            binders.push((name, sort));
            match self.peek() {
                Some(Tok::Comma) => {
                    self.next();
                }
                _ => break,
            }
        }
        self.expect(Tok::Dot)?;
        let vars: Vec<Var> = binders
            .iter()
            .map(|(name, sort)| scope.bind(name.clone(), sort.clone()))
            .collect();
        let body = self.parse_formula_prec(scope)?;
        for (name, _) in binders.iter().rev() {
            scope.unbind(name);
        }
        Ok(vars.into_iter().rev().fold(body, |f, v| {
            if universal {
                Formula::forall(v, f)
            } else {
                Formula::exists(v, f)
            }
        }))
    }

    fn parse_atom(&mut self, scope: &mut VarScope) -> Result<Formula, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.next();
                let f = self.parse_formula_prec(scope)?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Some(Tok::Ident(s)) if s == "true" => {
                self.next();
                Ok(Formula::True)
            }
            Some(Tok::Ident(s)) if s == "false" => {
                self.next();
                Ok(Formula::False)
            }
            Some(Tok::Ident(_)) => {
                let app = self.parse_application(scope)?;
                match self.peek() {
                    Some(Tok::Eq) => {
                        self.next();
                        let left = self.as_term(app, pos)?;
                        let rpos = self.pos();
                        let rapp = self.parse_application(scope)?;
                        let right = self.as_term(rapp, rpos)?;
                        if left.sort() != right.sort() {
                            return Err(ParseError::new(
                                pos,
                                format!(
                                    "equation between sorts `{}` and `{}`",
                                    left.sort().name,
                                    right.sort().name
                                ),
                            ));
                        }
                        Ok(Formula::eq(left, right))
                    }
                    Some(Tok::Neq) => {
                        self.next();
                        let left = self.as_term(app, pos)?;
                        let rpos = self.pos();
                        let rapp = self.parse_application(scope)?;
                        let right = self.as_term(rapp, rpos)?;
                        if left.sort() != right.sort() {
                            return Err(ParseError::new(
                                pos,
                                format!(
                                    "disequation between sorts `{}` and `{}`",
                                    left.sort().name,
                                    right.sort().name
                                ),
                            ));
                        }
                        Ok(Formula::not(Formula::eq(left, right)))
                    }
                    _ => self.as_pred(app, pos),
                }
            }
            Some(t) => Err(ParseError::new(pos, format!("expected a formula, found {t}"))),
            None => Err(ParseError::new(pos, "expected a formula, found end of input")),
        }
    }

    /// An identifier with optional argument list, not yet resolved to a
    /// function or predicate.
    fn parse_application(&mut self, scope: &mut VarScope) -> Result<App, ParseError> {
        let name = self.ident()?;
        let mut args = Vec::new();
        let mut applied = false;
        if self.peek() == Some(&Tok::LParen) {
            applied = true;
            self.next();
            if self.peek() == Some(&Tok::RParen) {
                self.next();
            } else {
                loop {
                    let apos = self.pos();
                    let arg = self.parse_application(scope)?;
                    args.push(self.as_term(arg, apos)?);
                    match self.next() {
                        Some(Tok::Comma) => continue,
                        Some(Tok::RParen) => break,
                        _ => return Err(ParseError::new(apos, "expected `,` or `)`")),
                    }
                }
            }
        }
        let scope_hit = if applied { None } else { scope.resolve_name(&name) };
        Ok(App {
            name,
            args,
            applied,
            scope_hit,
        })
    }

    fn as_term(&self, app: App, pos: Pos) -> Result<Term, ParseError> {
        if !app.applied {
            if let Some(v) = app.scope_hit {
                return Ok(Term::Var(v));
            }
        }
        match self.theory.signature.fun(&app.name) {
            Some(f) => {
                if f.arity() != app.args.len() {
                    return Err(ParseError::new(
                        pos,
                        format!("`{}` expects {} arguments, got {}", app.name, f.arity(), app.args.len()),
                    ));
                }
                for (arg, dom) in app.args.iter().zip(&f.domain) {
                    if arg.sort() != dom {
                        return Err(ParseError::new(
                            pos,
                            format!(
                                "argument of `{}` has sort `{}`, expected `{}`",
                                app.name,
                                arg.sort().name,
                                dom.name
                            ),
                        ));
                    }
                }
                Ok(f.app(app.args))
            }
            None => Err(ParseError::new(
                pos,
                format!("unknown symbol `{}`", app.name),
            )),
        }
    }

    fn as_pred(&self, app: App, pos: Pos) -> Result<Formula, ParseError> {
        match self.theory.signature.pred(&app.name) {
            Some(p) => {
                if p.arity() != app.args.len() {
                    return Err(ParseError::new(
                        pos,
                        format!("`{}` expects {} arguments, got {}", app.name, p.arity(), app.args.len()),
                    ));
                }
                for (arg, dom) in app.args.iter().zip(&p.domain) {
                    if arg.sort() != dom {
                        return Err(ParseError::new(
                            pos,
                            format!(
                                "argument of `{}` has sort `{}`, expected `{}`",
                                app.name,
                                arg.sort().name,
                                dom.name
                            ),
                        ));
                    }
                }
                Ok(p.app(app.args))
            }
            None => Err(ParseError::new(
                pos,
                format!("`{}` is not a predicate", app.name),
            )),
        }
    }
}

struct App {
    name: String,
    args: Vec<Term>,
    applied: bool,
    scope_hit: Option<Var>,
}

/// Variable binding state for one formula: indices are assigned per sort in
/// order of first binding occurrence, and a repeated binder with the same
/// name and sort reuses its variable, so printing and reparsing is stable.
#[derive(Default)]
struct VarScope {
    counters: HashMap<String, usize>,
    assigned: HashMap<(String, String), Var>,
    live: HashMap<String, Vec<Var>>,
}

impl VarScope {
    fn bind(&mut self, name: String, sort: Sort) -> Var {
        let key = (name.clone(), sort.name.clone());
        let var = self
            .assigned
            .entry(key)
            .or_insert_with(|| {
                let counter = self.counters.entry(sort.name.clone()).or_insert(0);
                let v = Var::new(*counter, sort.clone());
                *counter += 1;
                v
            })
            .clone();
        self.live.entry(name).or_default().push(var.clone());
        var
    }

    fn unbind(&mut self, name: &str) {
        if let Some(stack) = self.live.get_mut(name) {
            stack.pop();
        }
    }

    fn resolve_name(&self, name: &str) -> Option<Var> {
        self.live.get(name).and_then(|s| s.last()).cloned()
    }
}

/// Parses a theory document and typechecks it.
pub fn parse_theory(text: &str) -> Result<TheoryDocument, ParseError> {
    let toks = lex(text)?;
    let lines = text.lines().count().max(1);
    let mut parser = Parser {
        toks,
        at: 0,
        theory: Theory::new(""),
        conjecture: None,
        problem: None,
        text_end: Pos { line: lines, col: 1 },
    };
    parser.parse_document()?;
    parser
        .theory
        .typecheck()
        .map_err(ParseError::from_type_errors)?;
    if let Some(conj) = &parser.conjecture {
        parser
            .theory
            .check_formula(conj)
            .map_err(ParseError::from_type_errors)?;
        if let Some(v) = conj.free_vars().into_iter().next() {
            return Err(ParseError {
                line: 0,
                col: 0,
                message: format!(
                    "conjecture is open: free variable x{}:{}",
                    v.index, v.sort.name
                ),
            });
        }
    }
    Ok(TheoryDocument {
        theory: parser.theory,
        conjecture: parser.conjecture,
        problem: parser.problem,
    })
}

/// Parses a single formula over an existing theory's signature.
pub fn parse_formula(text: &str, theory: &Theory) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let lines = text.lines().count().max(1);
    let mut parser = Parser {
        toks,
        at: 0,
        theory: theory.clone(),
        conjecture: None,
        problem: None,
        text_end: Pos { line: lines, col: 1 },
    };
    let mut scope = VarScope::default();
    let formula = parser.parse_formula_prec(&mut scope)?;
    if let Some(tok) = parser.peek() {
        return Err(ParseError::new(
            parser.pos(),
            format!("unexpected trailing {tok}"),
        ));
    }
    theory
        .check_formula(&formula)
        .map_err(ParseError::from_type_errors)?;
    Ok(formula)
}
