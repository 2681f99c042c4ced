//! Monomials and term orders.
//!
//! Term orders are stored as integer weight matrices (plus an optional
//! position row for free modules), so comparing two terms is a lexicographic
//! comparison of precomputed keys and multiplying a term by a monomial is a
//! key addition.

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 12]>;

/// Sort key of a term under a [`TermOrder`]; larger keys are larger terms.
pub type Key = SmallVec<[i32; 16]>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Exponents);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Re-index into a ring with `nvars` variables: variable `i` goes to `map[i]`.
    pub fn embed(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut out = Self::one(nvars);
        for (i, &e) in self.0.iter().enumerate() {
            out.0[map[i]] += e;
        }
        out
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub(crate) fn set_exponent(&mut self, i: usize, e: u16) {
        self.0[i] = e;
    }

    /// Display with the given variable names; `"1"` for the unit monomial.
    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, names }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.names[i])?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Order on the monomials of one block of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum BaseOrder {
    Lex,
    #[default]
    GrevLex,
}

impl BaseOrder {
    pub fn name(self) -> &'static str {
        match self {
            BaseOrder::Lex => "lex",
            BaseOrder::GrevLex => "grevlex",
        }
    }

    pub fn other(self) -> BaseOrder {
        match self {
            BaseOrder::Lex => BaseOrder::GrevLex,
            BaseOrder::GrevLex => BaseOrder::Lex,
        }
    }
}

impl std::str::FromStr for BaseOrder {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lex" => Ok(BaseOrder::Lex),
            "grevlex" => Ok(BaseOrder::GrevLex),
            other => Err(format!("unknown monomial order '{}'", other)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Row {
    Weights(Vec<i32>),
    Position,
}

/// A term order on a free module `A^r` over a polynomial ring in `nvars`
/// variables. Rank-one modules (ideals) use the same type; the position row
/// is then irrelevant.
///
/// Lower positions are larger: `e_0 > e_1 > ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    nvars: usize,
    rows: Vec<Row>,
}

fn block_rows(nvars: usize, vars: &[usize], base: BaseOrder) -> Vec<Row> {
    let unit = |v: usize, w: i32| {
        let mut r = vec![0; nvars];
        r[v] = w;
        Row::Weights(r)
    };
    match base {
        BaseOrder::Lex => vars.iter().map(|&v| unit(v, 1)).collect(),
        BaseOrder::GrevLex => {
            let mut rows = Vec::with_capacity(vars.len());
            let mut total = vec![0; nvars];
            for &v in vars {
                total[v] = 1;
            }
            rows.push(Row::Weights(total));
            for &v in vars.iter().skip(1).rev() {
                rows.push(unit(v, -1));
            }
            rows
        }
    }
}

impl TermOrder {
    /// Block order: blocks are compared in the listed order; the position row
    /// is inserted after the first `position_after` blocks. Every variable
    /// must appear in exactly one block.
    pub fn blocks(nvars: usize, blocks: &[(Vec<usize>, BaseOrder)], position_after: usize) -> Self {
        let mut seen = vec![false; nvars];
        let mut rows = Vec::new();
        for (k, (vars, base)) in blocks.iter().enumerate() {
            if k == position_after {
                rows.push(Row::Position);
            }
            for &v in vars {
                assert!(!seen[v], "variable {} appears in two blocks", v);
                seen[v] = true;
            }
            if !vars.is_empty() {
                rows.extend(block_rows(nvars, vars, *base));
            }
        }
        if position_after >= blocks.len() {
            rows.push(Row::Position);
        }
        assert!(
            seen.iter().all(|&s| s),
            "block order does not cover every variable"
        );
        TermOrder { nvars, rows }
    }

    /// Position over term.
    pub fn pot(nvars: usize, base: BaseOrder) -> Self {
        Self::blocks(nvars, &[((0..nvars).collect(), base)], 0)
    }

    /// Term over position.
    pub fn top(nvars: usize, base: BaseOrder) -> Self {
        Self::blocks(nvars, &[((0..nvars).collect(), base)], 1)
    }

    /// Eliminates the variables in `head`: any term involving them is larger
    /// than every term free of them, regardless of position.
    pub fn eliminating(nvars: usize, head: &[usize], base: BaseOrder) -> Self {
        let rest: Vec<usize> = (0..nvars).filter(|v| !head.contains(v)).collect();
        Self::blocks(nvars, &[(head.to_vec(), base), (rest, base)], 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn key(&self, m: &Monomial, pos: usize) -> Key {
        self.rows
            .iter()
            .map(|r| match r {
                Row::Weights(w) => w
                    .iter()
                    .zip(m.exponents())
                    .map(|(a, &e)| a * e as i32)
                    .sum(),
                Row::Position => -(pos as i32),
            })
            .collect()
    }

    /// Key increment produced by multiplying a term by `m`.
    pub fn shift(&self, m: &Monomial) -> Key {
        self.rows
            .iter()
            .map(|r| match r {
                Row::Weights(w) => w
                    .iter()
                    .zip(m.exponents())
                    .map(|(a, &e)| a * e as i32)
                    .sum(),
                Row::Position => 0,
            })
            .collect()
    }
}

pub(crate) fn add_keys(a: &Key, b: &Key) -> Key {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_and_lex_disagree_where_expected() {
        // same degree; grevlex penalises the last variable, lex rewards the first
        let g = TermOrder::pot(3, BaseOrder::GrevLex);
        assert!(g.key(&m(&[0, 3, 0]), 0) > g.key(&m(&[1, 0, 2]), 0));
        let l = TermOrder::pot(3, BaseOrder::Lex);
        assert!(l.key(&m(&[1, 0, 2]), 0) > l.key(&m(&[0, 3, 0]), 0));
    }

    #[test]
    fn position_over_term() {
        let o = TermOrder::pot(2, BaseOrder::GrevLex);
        assert!(o.key(&m(&[0, 0]), 0) > o.key(&m(&[5, 5]), 1));
        let t = TermOrder::top(2, BaseOrder::GrevLex);
        assert!(t.key(&m(&[5, 5]), 1) > t.key(&m(&[0, 0]), 0));
    }

    #[test]
    fn elimination_puts_head_first() {
        let o = TermOrder::eliminating(3, &[2], BaseOrder::GrevLex);
        assert!(o.key(&m(&[0, 0, 1]), 3) > o.key(&m(&[9, 9, 0]), 0));
    }

    #[test]
    fn shift_is_additive() {
        let o = TermOrder::blocks(
            3,
            &[(vec![2], BaseOrder::Lex), (vec![0, 1], BaseOrder::GrevLex)],
            1,
        );
        let a = m(&[1, 2, 0]);
        let b = m(&[0, 1, 3]);
        assert_eq!(o.key(&a.mul(&b), 4), add_keys(&o.key(&a, 4), &o.shift(&b)));
    }
}
