//! The problem-file language.
//!
//! One statement per line, `#` starts a comment:
//!
//! ```text
//! field Q                                  # or: field F 32003
//! base R = poly(s, t)
//! algebra A = R[u, v] / (u*v - s)
//! localize A at s
//! module M over A : gens 2 ; rel (t, -s)
//! task flat M d=2 expect=NotFlat
//! ```
//!
//! Names are declared before use. Polynomials are checked against the
//! variables in scope and stored in canonical printed form, so printing a
//! parsed file and parsing it again gives the same file.

use std::fmt;

use flatlab_core::expr::parse_tuple;
use flatlab_core::{Poly, Rational};
use flatlab_modules::algebra::fresh_name;
use num_integer::Integer;

use crate::error::CliError;

/// Primes accepted by `field F p`.
pub const SUPPORTED_PRIMES: [u64; 5] = [2, 3, 5, 7, 32003];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldDecl {
    Rational,
    Prime(u64),
}

impl fmt::Display for FieldDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDecl::Rational => f.write_str("Q"),
            FieldDecl::Prime(p) => write!(f, "F {}", p),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Flat,
    NotFlat,
}

impl Expect {
    pub fn is_flat(self) -> bool {
        self == Expect::Flat
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuditKind {
    Rigidity,
    TorsionTor,
    Descent,
    Duality,
    Additivity,
    Koszul,
    KoszulFinite,
    Dim2,
}

impl AuditKind {
    const ALL: [(AuditKind, &'static str, usize); 8] = [
        (AuditKind::Rigidity, "rigidity", 2),
        (AuditKind::TorsionTor, "torsion-tor", 2),
        (AuditKind::Descent, "descent", 1),
        (AuditKind::Duality, "duality", 1),
        (AuditKind::Additivity, "additivity", 2),
        (AuditKind::Koszul, "koszul", 1),
        (AuditKind::KoszulFinite, "koszul-finite", 1),
        (AuditKind::Dim2, "dim2", 1),
    ];

    pub fn name(self) -> &'static str {
        Self::ALL.iter().find(|(k, _, _)| *k == self).unwrap().1
    }

    /// Number of module arguments.
    pub fn arity(self) -> usize {
        Self::ALL.iter().find(|(k, _, _)| *k == self).unwrap().2
    }

    fn from_name(s: &str) -> Option<Self> {
        Self::ALL
            .iter()
            .find(|(_, n, _)| *n == s)
            .map(|(k, _, _)| *k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    Smith,
    Fitting,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    Flat {
        module: String,
        d: Option<usize>,
        expect: Option<Expect>,
    },
    Dim2 {
        module: String,
        expect: Option<Expect>,
    },
    Tor {
        left: String,
        right: String,
    },
    Torsion {
        module: String,
    },
    Depth {
        module: String,
    },
    Ass {
        module: String,
        d: Option<usize>,
    },
    Audit {
        kind: AuditKind,
        modules: Vec<String>,
        d: Option<usize>,
    },
    Oracle {
        kind: OracleKind,
        module: String,
        rank: Option<usize>,
        expect: Option<Expect>,
    },
    Bench {
        module: String,
        dmax: usize,
    },
}

/// Default exponent of the descent audit.
pub const DESCENT_DEFAULT: usize = 3;
pub const BENCH_DEFAULT: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Field(FieldDecl),
    Base {
        name: String,
        vars: Vec<String>,
    },
    Algebra {
        name: String,
        base: String,
        extra: Vec<String>,
        relations: Vec<String>,
    },
    Localize {
        algebra: String,
        element: String,
    },
    Module {
        name: String,
        ring: String,
        gens: usize,
        rels: Vec<Vec<String>>,
    },
    Task(Task),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProblemFile {
    pub statements: Vec<Statement>,
}

impl ProblemFile {
    pub fn field(&self) -> FieldDecl {
        self.statements
            .iter()
            .find_map(|s| match s {
                Statement::Field(f) => Some(*f),
                _ => None,
            })
            .unwrap_or(FieldDecl::Rational)
    }

    pub fn tasks(&self) -> impl Iterator<Item = &Task> {
        self.statements.iter().filter_map(|s| match s {
            Statement::Task(t) => Some(t),
            _ => None,
        })
    }

    /// Module names in declaration order.
    pub fn module_names(&self) -> Vec<&str> {
        self.statements
            .iter()
            .filter_map(|s| match s {
                Statement::Module { name, .. } => Some(name.as_str()),
                _ => None,
            })
            .collect()
    }
}

fn list(items: &[String]) -> String {
    items.join(", ")
}

fn opt(f: &mut fmt::Formatter<'_>, key: &str, v: Option<impl fmt::Display>) -> fmt::Result {
    match v {
        Some(v) => write!(f, " {}={}", key, v),
        None => Ok(()),
    }
}

impl fmt::Display for Expect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expect::Flat => "Flat",
            Expect::NotFlat => "NotFlat",
        })
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Task::Flat { module, d, expect } => {
                write!(f, "flat {}", module)?;
                opt(f, "d", *d)?;
                opt(f, "expect", *expect)
            }
            Task::Dim2 { module, expect } => {
                write!(f, "dim2 {}", module)?;
                opt(f, "expect", *expect)
            }
            Task::Tor { left, right } => write!(f, "tor {} {}", left, right),
            Task::Torsion { module } => write!(f, "torsion {}", module),
            Task::Depth { module } => write!(f, "depth {}", module),
            Task::Ass { module, d } => {
                write!(f, "ass {}", module)?;
                opt(f, "d", *d)
            }
            Task::Audit { kind, modules, d } => {
                write!(f, "audit {} {}", kind.name(), modules.join(" "))?;
                opt(f, "d", *d)
            }
            Task::Oracle {
                kind,
                module,
                rank,
                expect,
            } => {
                let k = match kind {
                    OracleKind::Smith => "smith",
                    OracleKind::Fitting => "fitting",
                };
                write!(f, "oracle {} {}", k, module)?;
                opt(f, "r", *rank)?;
                opt(f, "expect", *expect)
            }
            Task::Bench { module, dmax } => write!(f, "bench {} dmax={}", module, dmax),
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Field(k) => write!(f, "field {}", k),
            Statement::Base { name, vars } => write!(f, "base {} = poly({})", name, list(vars)),
            Statement::Algebra {
                name,
                base,
                extra,
                relations,
            } => {
                write!(f, "algebra {} = {}", name, base)?;
                if !extra.is_empty() {
                    write!(f, "[{}]", list(extra))?;
                }
                if !relations.is_empty() {
                    write!(f, " / ({})", list(relations))?;
                }
                Ok(())
            }
            Statement::Localize { algebra, element } => {
                write!(f, "localize {} at {}", algebra, element)
            }
            Statement::Module {
                name,
                ring,
                gens,
                rels,
            } => {
                write!(f, "module {} over {} : gens {}", name, ring, gens)?;
                for r in rels {
                    write!(f, " ; rel ({})", list(r))?;
                }
                Ok(())
            }
            Statement::Task(t) => write!(f, "task {}", t),
        }
    }
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{}", s)?;
        }
        Ok(())
    }
}

/// Cursor over one source line, with 1-based columns in error messages.
struct Line<'a> {
    no: usize,
    text: &'a str,
    pos: usize,
}

type PResult<T> = Result<T, CliError>;

impl<'a> Line<'a> {
    fn col_of(&self, pos: usize) -> usize {
        self.text[..pos].chars().count() + 1
    }

    fn err_at<T>(&self, pos: usize, msg: impl Into<String>) -> PResult<T> {
        Err(CliError::Syntax {
            line: self.no,
            col: self.col_of(pos),
            msg: msg.into(),
        })
    }

    fn err<T>(&mut self, msg: impl Into<String>) -> PResult<T> {
        self.ws();
        self.err_at(self.pos, msg)
    }

    fn ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn at_end(&mut self) -> bool {
        self.ws();
        self.pos == self.text.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c))
        }
    }

    /// Maximal run of characters accepted by `ok`.
    fn word_with(&mut self, ok: impl Fn(char) -> bool) -> (usize, &'a str) {
        self.ws();
        let start = self.pos;
        let len: usize = self.text[start..]
            .chars()
            .take_while(|&c| ok(c))
            .map(char::len_utf8)
            .sum();
        self.pos += len;
        (start, &self.text[start..start + len])
    }

    fn ident(&mut self, what: &str) -> PResult<(usize, String)> {
        let (start, w) = self.word_with(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'');
        if w.is_empty() || !w.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') {
            return self.err_at(start, format!("expected {}", what));
        }
        Ok((start, w.to_string()))
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        let (start, w) = self.word_with(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-');
        if w != kw {
            return self.err_at(start, format!("expected '{}'", kw));
        }
        Ok(())
    }

    fn number(&mut self) -> PResult<usize> {
        let (start, w) = self.word_with(|c| c.is_ascii_digit());
        w.parse()
            .or_else(|_| self.err_at(start, "expected a non-negative integer"))
    }

    /// Balanced `( ... )` group: its start offset and text.
    fn group(&mut self) -> PResult<(usize, &'a str)> {
        self.ws();
        let start = self.pos;
        if !self.text[start..].starts_with('(') {
            return self.err_at(start, "expected '('");
        }
        let mut depth = 0usize;
        for (i, c) in self.text[start..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        self.pos = start + i + 1;
                        return Ok((start, &self.text[start..self.pos]));
                    }
                }
                _ => {}
            }
        }
        self.err_at(start, "unbalanced '('")
    }

    fn finish(&mut self) -> PResult<()> {
        if self.at_end() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }

    fn names_list(&mut self, close: char) -> PResult<Vec<String>> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.ident("a variable name")?.1);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }
}

#[derive(Clone, Debug)]
enum Symbol {
    Base,
    Algebra { vars: Vec<String>, used: bool },
    Module,
}

struct Scope {
    field: Option<FieldDecl>,
    base: Option<(String, Vec<String>)>,
    symbols: Vec<(String, Symbol)>,
}

impl Scope {
    fn get(&self, name: &str) -> Option<&Symbol> {
        self.symbols.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    fn get_mut(&mut self, name: &str) -> Option<&mut Symbol> {
        self.symbols
            .iter_mut()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
    }

    fn prime(&self) -> Option<u64> {
        match self.field {
            Some(FieldDecl::Prime(p)) => Some(p),
            _ => None,
        }
    }
}

/// Parses a polynomial tuple and returns canonical texts, checking that
/// denominators survive in the declared prime field.
fn canonical_tuple(
    line: &Line,
    start: usize,
    group: &str,
    names: &[String],
    prime: Option<u64>,
) -> PResult<Vec<String>> {
    let polys: Vec<Poly<Rational>> = parse_tuple(group, names).map_err(|e| match e {
        flatlab_core::Error::Parse { col, msg } => CliError::Syntax {
            line: line.no,
            col: line.col_of(start) + col - 1,
            msg,
        },
        other => CliError::Core(other),
    })?;
    if let Some(p) = prime {
        let bad = polys
            .iter()
            .flat_map(|q| q.terms())
            .find(|(_, c)| c.denom().is_multiple_of(&p.into()));
        if let Some((_, c)) = bad {
            return line.err_at(start, format!("coefficient {} is undefined in F {}", c, p));
        }
    }
    Ok(polys.iter().map(|q| q.display(names).to_string()).collect())
}

/// Parses a problem file.
pub fn parse(text: &str) -> Result<ProblemFile, CliError> {
    let mut scope = Scope {
        field: None,
        base: None,
        symbols: Vec::new(),
    };
    let mut statements = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim_end();
        let mut line = Line {
            no: i + 1,
            text: body,
            pos: 0,
        };
        if line.at_end() {
            continue;
        }
        let (kw_pos, kw) = line.ident("a statement keyword")?;
        let st = match kw.as_str() {
            "field" => parse_field(&mut line, &mut scope)?,
            "base" => parse_base(&mut line, &mut scope)?,
            "algebra" => parse_algebra(&mut line, &mut scope)?,
            "localize" => parse_localize(&mut line, &mut scope)?,
            "module" => parse_module(&mut line, &mut scope)?,
            "task" => Statement::Task(parse_task(&mut line, &scope)?),
            other => return line.err_at(kw_pos, format!("unknown statement '{}'", other)),
        };
        line.finish()?;
        statements.push(st);
    }
    Ok(ProblemFile { statements })
}

fn parse_field(line: &mut Line, scope: &mut Scope) -> PResult<Statement> {
    if scope.field.is_some() || scope.base.is_some() {
        return line.err_at(0, "field must be declared once, before the base ring");
    }
    let (pos, k) = line.ident("Q or F")?;
    let decl = match k.as_str() {
        "Q" => FieldDecl::Rational,
        "F" => {
            line.ws();
            let at = line.pos;
            let p = line.number()? as u64;
            if !SUPPORTED_PRIMES.contains(&p) {
                let list: Vec<String> = SUPPORTED_PRIMES.iter().map(|p| p.to_string()).collect();
                return line.err_at(
                    at,
                    format!("unsupported prime {} (supported: {})", p, list.join(", ")),
                );
            }
            FieldDecl::Prime(p)
        }
        _ => return line.err_at(pos, "expected Q or F"),
    };
    scope.field = Some(decl);
    Ok(Statement::Field(decl))
}

fn declare(line: &Line, scope: &mut Scope, pos: usize, name: &str, sym: Symbol) -> PResult<()> {
    if scope.get(name).is_some() {
        return line.err_at(pos, format!("duplicate name '{}'", name));
    }
    scope.symbols.push((name.to_string(), sym));
    Ok(())
}

fn check_distinct(line: &Line, pos: usize, vars: &[String]) -> PResult<()> {
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return line.err_at(pos, format!("duplicate variable '{}'", v));
        }
    }
    Ok(())
}

fn parse_base(line: &mut Line, scope: &mut Scope) -> PResult<Statement> {
    let (pos, name) = line.ident("a ring name")?;
    if scope.base.is_some() {
        return line.err_at(pos, "only one base ring may be declared");
    }
    line.expect('=')?;
    line.keyword("poly")?;
    line.expect('(')?;
    line.ws();
    let vpos = line.pos;
    let vars = line.names_list(')')?;
    if vars.is_empty() {
        return line.err_at(vpos, "the base ring needs at least one variable");
    }
    check_distinct(line, vpos, &vars)?;
    declare(line, scope, pos, &name, Symbol::Base)?;
    scope.base = Some((name.clone(), vars.clone()));
    Ok(Statement::Base { name, vars })
}

fn parse_algebra(line: &mut Line, scope: &mut Scope) -> PResult<Statement> {
    let (pos, name) = line.ident("an algebra name")?;
    line.expect('=')?;
    let (bpos, base) = line.ident("the base ring name")?;
    let Some((base_name, base_vars)) = scope.base.clone() else {
        return line.err_at(bpos, "no base ring declared");
    };
    if base != base_name {
        return line.err_at(
            bpos,
            format!("algebras are defined over the base ring '{}'", base_name),
        );
    }
    line.ws();
    let epos = line.pos;
    let extra = if line.eat('[') {
        line.names_list(']')?
    } else {
        Vec::new()
    };
    let mut vars = base_vars;
    vars.extend(extra.iter().cloned());
    check_distinct(line, epos, &vars)?;
    let relations = if line.eat('/') {
        let (gpos, group) = line.group()?;
        canonical_tuple(line, gpos, group, &vars, scope.prime())?
    } else {
        Vec::new()
    };
    declare(
        line,
        scope,
        pos,
        &name,
        Symbol::Algebra { vars, used: false },
    )?;
    Ok(Statement::Algebra {
        name,
        base,
        extra,
        relations,
    })
}

fn parse_localize(line: &mut Line, scope: &mut Scope) -> PResult<Statement> {
    let (pos, algebra) = line.ident("an algebra name")?;
    let prime = scope.prime();
    line.keyword("at")?;
    line.ws();
    let epos = line.pos;
    let text = line.text[epos..].trim_end();
    let group = format!("({})", text);
    let vars = match scope.get(&algebra) {
        Some(Symbol::Algebra { vars, used: false }) => vars.clone(),
        Some(Symbol::Algebra { used: true, .. }) => {
            return line.err_at(
                pos,
                format!(
                    "algebra '{}' already carries modules; localize it before use",
                    algebra
                ),
            )
        }
        Some(Symbol::Base) => {
            return line.err_at(
                pos,
                "the base ring cannot be localized; localize an algebra copy of it",
            )
        }
        _ => return line.err_at(pos, format!("unknown algebra '{}'", algebra)),
    };
    // columns inside the synthetic group are shifted by the opening paren
    let element = canonical_tuple(line, epos.saturating_sub(1), &group, &vars, prime)?;
    if element.len() != 1 {
        return line.err_at(epos, "expected a single polynomial");
    }
    if element[0] == "0" {
        return line.err_at(epos, "cannot localize at zero");
    }
    line.pos = line.text.len();
    if let Some(Symbol::Algebra { vars, .. }) = scope.get_mut(&algebra) {
        let z = fresh_name("z", vars);
        vars.push(z);
    }
    Ok(Statement::Localize {
        algebra,
        element: element[0].clone(),
    })
}

fn parse_module(line: &mut Line, scope: &mut Scope) -> PResult<Statement> {
    let (pos, name) = line.ident("a module name")?;
    line.keyword("over")?;
    let (rpos, ring) = line.ident("a ring name")?;
    let vars = match scope.get_mut(&ring) {
        Some(Symbol::Algebra { vars, used }) => {
            *used = true;
            vars.clone()
        }
        Some(Symbol::Base) => scope.base.as_ref().unwrap().1.clone(),
        _ => return line.err_at(rpos, format!("unknown ring '{}'", ring)),
    };
    line.expect(':')?;
    line.keyword("gens")?;
    let gens = line.number()?;
    let mut rels = Vec::new();
    while line.eat(';') {
        line.keyword("rel")?;
        let (gpos, group) = line.group()?;
        let col = canonical_tuple(line, gpos, group, &vars, scope.prime())?;
        if col.len() != gens {
            return line.err_at(
                gpos,
                format!(
                    "arity error: relation has {} entries, module has {} generators",
                    col.len(),
                    gens
                ),
            );
        }
        rels.push(col);
    }
    declare(line, scope, pos, &name, Symbol::Module)?;
    Ok(Statement::Module {
        name,
        ring,
        gens,
        rels,
    })
}

fn module_ref(line: &mut Line, scope: &Scope) -> PResult<String> {
    let (pos, name) = line.ident("a module name")?;
    match scope.get(&name) {
        Some(Symbol::Module) => Ok(name),
        _ => line.err_at(pos, format!("unknown module '{}'", name)),
    }
}

#[derive(Default)]
struct Options {
    d: Option<usize>,
    dmax: Option<usize>,
    r: Option<usize>,
    expect: Option<Expect>,
}

fn parse_options(line: &mut Line, allowed: &[&str]) -> PResult<Options> {
    let mut o = Options::default();
    let mut seen: Vec<String> = Vec::new();
    while !line.at_end() {
        let (pos, key) = line.ident("an option")?;
        if !allowed.contains(&key.as_str()) {
            return line.err_at(pos, format!("unknown option '{}'", key));
        }
        if seen.contains(&key) {
            return line.err_at(pos, format!("option '{}' given twice", key));
        }
        seen.push(key.clone());
        line.expect('=')?;
        match key.as_str() {
            "expect" => {
                let (vpos, v) = line.ident("Flat or NotFlat")?;
                o.expect = Some(match v.as_str() {
                    "Flat" => Expect::Flat,
                    "NotFlat" => Expect::NotFlat,
                    _ => return line.err_at(vpos, "expected Flat or NotFlat"),
                });
            }
            "d" => o.d = Some(line.number()?),
            "dmax" => o.dmax = Some(line.number()?),
            "r" => o.r = Some(line.number()?),
            _ => unreachable!(),
        }
    }
    Ok(o)
}

fn parse_task(line: &mut Line, scope: &Scope) -> PResult<Task> {
    let (pos, kind) = line.ident("a task name")?;
    Ok(match kind.as_str() {
        "flat" => {
            let module = module_ref(line, scope)?;
            let o = parse_options(line, &["d", "expect"])?;
            Task::Flat {
                module,
                d: o.d,
                expect: o.expect,
            }
        }
        "dim2" => {
            let module = module_ref(line, scope)?;
            let o = parse_options(line, &["expect"])?;
            Task::Dim2 {
                module,
                expect: o.expect,
            }
        }
        "tor" => Task::Tor {
            left: module_ref(line, scope)?,
            right: module_ref(line, scope)?,
        },
        "torsion" => Task::Torsion {
            module: module_ref(line, scope)?,
        },
        "depth" => Task::Depth {
            module: module_ref(line, scope)?,
        },
        "ass" => {
            let module = module_ref(line, scope)?;
            Task::Ass {
                module,
                d: parse_options(line, &["d"])?.d,
            }
        }
        "audit" => {
            let (apos, name) = line.word_with(|c| c.is_ascii_alphanumeric() || c == '-');
            let Some(kind) = AuditKind::from_name(name) else {
                return line.err_at(apos, format!("unknown audit '{}'", name));
            };
            let modules = (0..kind.arity())
                .map(|_| module_ref(line, scope))
                .collect::<PResult<Vec<_>>>()?;
            let allowed: &[&str] = if kind == AuditKind::Descent {
                &["d"]
            } else {
                &[]
            };
            Task::Audit {
                kind,
                modules,
                d: parse_options(line, allowed)?.d,
            }
        }
        "oracle" => {
            let (opos, name) = line.ident("smith or fitting")?;
            let kind = match name.as_str() {
                "smith" => OracleKind::Smith,
                "fitting" => OracleKind::Fitting,
                _ => return line.err_at(opos, "expected smith or fitting"),
            };
            let module = module_ref(line, scope)?;
            let allowed: &[&str] = if kind == OracleKind::Fitting {
                &["r", "expect"]
            } else {
                &["expect"]
            };
            let o = parse_options(line, allowed)?;
            Task::Oracle {
                kind,
                module,
                rank: o.r,
                expect: o.expect,
            }
        }
        "bench" => {
            let module = module_ref(line, scope)?;
            Task::Bench {
                module,
                dmax: parse_options(line, &["dmax"])?
                    .dmax
                    .unwrap_or(BENCH_DEFAULT),
            }
        }
        other => return line.err_at(pos, format!("unknown task '{}'", other)),
    })
}
