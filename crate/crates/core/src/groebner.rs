//! Buchberger's algorithm for submodules of free modules `K[x]^r`.
//!
//! Ideals are the rank-one case. Pairs are managed with the Gebauer–Möller
//! update (chain criterion, plus the coprime criterion for rank one) and
//! selected by the normal strategy with an optional sugar refinement; ties
//! are broken by pair index so every run is reproducible.
//!
//! Intermediate elements are fully reduced fraction-free and kept primitive,
//! and the tails of active elements are re-reduced as new leads appear; the
//! final basis is reduced and monic, hence unique for the chosen order.

use crate::context::Ctx;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::free::FreeElem;
use crate::monomial::{add_keys, Key, Monomial, TermOrder};
use crate::poly::Poly;

#[derive(Clone, Debug)]
pub(crate) struct Term<F: Field> {
    pub mono: Monomial,
    pub pos: usize,
    pub key: Key,
    pub coeff: F,
}

/// A free-module element in the term order of one computation.
#[derive(Clone, Debug)]
pub(crate) struct SVec<F: Field> {
    pub terms: Vec<Term<F>>,
    pub sugar: u32,
}

impl<F: Field> SVec<F> {
    pub fn from_elem(e: &FreeElem<F>, order: &TermOrder) -> Self {
        let mut terms = Vec::with_capacity(e.term_count());
        let mut sugar = 0;
        for (pos, p) in e.entries().iter().enumerate() {
            for (m, c) in p.terms() {
                sugar = sugar.max(m.degree());
                terms.push(Term {
                    key: order.key(m, pos),
                    mono: m.clone(),
                    pos,
                    coeff: c.clone(),
                });
            }
        }
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        SVec { terms, sugar }
    }

    pub fn to_elem(&self, rank: usize, nvars: usize) -> FreeElem<F> {
        let mut buckets: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.pos].push((t.mono.clone(), t.coeff.clone()));
        }
        FreeElem(
            buckets
                .into_iter()
                .map(|b| Poly::from_terms(nvars, b))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term<F> {
        &self.terms[0]
    }

    fn scale_in_place(&mut self, c: &F) {
        for t in &mut self.terms {
            t.coeff = F::mul_by(c, &t.coeff);
        }
    }

    fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let coeffs: Vec<&F> = self.terms.iter().map(|t| &t.coeff).collect();
        let s = F::primitive_scale(&coeffs);
        if !s.is_one() {
            self.scale_in_place(&s);
        }
    }

    fn make_monic(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let s = self.terms[0].coeff.inv();
        if !s.is_one() {
            self.scale_in_place(&s);
        }
    }
}

/// `a * m1 * f - b * m2 * g`, where `shift*` are the key increments of `m*`.
#[allow(clippy::too_many_arguments)]
fn lin_comb<F: Field>(
    a: &F,
    m1: &Monomial,
    shift1: &Key,
    f: &[Term<F>],
    b: &F,
    m2: &Monomial,
    shift2: &Key,
    g: &[Term<F>],
) -> Vec<Term<F>> {
    let one1 = m1.is_one();
    let one2 = m2.is_one();
    let lift = |t: &Term<F>, m: &Monomial, s: &Key, unit: bool, c: F| -> Term<F> {
        if unit {
            Term {
                mono: t.mono.clone(),
                pos: t.pos,
                key: t.key.clone(),
                coeff: c,
            }
        } else {
            Term {
                mono: t.mono.mul(m),
                pos: t.pos,
                key: add_keys(&t.key, s),
                coeff: c,
            }
        }
    };
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut k1: Option<Key> = None;
    let mut k2: Option<Key> = None;
    while i < f.len() || j < g.len() {
        if i < f.len() && k1.is_none() {
            k1 = Some(if one1 {
                f[i].key.clone()
            } else {
                add_keys(&f[i].key, shift1)
            });
        }
        if j < g.len() && k2.is_none() {
            k2 = Some(if one2 {
                g[j].key.clone()
            } else {
                add_keys(&g[j].key, shift2)
            });
        }
        let ord = match (&k1, &k2) {
            (Some(x), Some(y)) => x.cmp(y),
            (Some(_), None) => std::cmp::Ordering::Greater,
            (None, Some(_)) => std::cmp::Ordering::Less,
            (None, None) => unreachable!(),
        };
        match ord {
            std::cmp::Ordering::Greater => {
                out.push(lift(&f[i], m1, shift1, one1, F::mul_by(a, &f[i].coeff)));
                i += 1;
                k1 = None;
            }
            std::cmp::Ordering::Less => {
                out.push(lift(&g[j], m2, shift2, one2, -F::mul_by(b, &g[j].coeff)));
                j += 1;
                k2 = None;
            }
            std::cmp::Ordering::Equal => {
                let c = F::mul_sub(a, &f[i].coeff, b, &g[j].coeff);
                if !c.is_zero() {
                    out.push(lift(&f[i], m1, shift1, one1, c));
                }
                i += 1;
                j += 1;
                k1 = None;
                k2 = None;
            }
        }
    }
    out
}

fn find_reducer<'a, F: Field>(t: &Term<F>, reducers: &[&'a SVec<F>]) -> Option<&'a SVec<F>> {
    reducers.iter().copied().find(|g| {
        let l = g.lead();
        l.pos == t.pos && l.mono.divides(&t.mono)
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Reduction {
    /// Stop once the leading term is irreducible.
    Top,
    /// Reduce every term.
    Full,
}

/// Division by `reducers` (lowest index first). With `exact` the result is
/// the true remainder; otherwise it is a nonzero scalar multiple of it.
pub(crate) fn reduce<F: Field>(
    f: SVec<F>,
    reducers: &[&SVec<F>],
    order: &TermOrder,
    mode: Reduction,
    exact: bool,
) -> SVec<F> {
    let mut sugar = f.sugar;
    let mut done: Vec<Term<F>> = Vec::new();
    let mut cur = f.terms;
    let mut start = 0;
    let unit = Monomial::one(order.nvars());
    let zero_shift = order.shift(&unit);
    while start < cur.len() {
        let t = &cur[start];
        match find_reducer(t, reducers) {
            Some(g) => {
                let l = g.lead();
                let m = l.mono.quotient_of(&t.mono).expect("reducer divides");
                let (a, b) = if exact {
                    (F::one(), t.coeff.clone() / l.coeff.clone())
                } else {
                    F::cancel_factors(&t.coeff, &l.coeff)
                };
                let shift = order.shift(&m);
                sugar = sugar.max(g.sugar + m.degree());
                cur = lin_comb(
                    &a,
                    &unit,
                    &zero_shift,
                    &cur[start..],
                    &b,
                    &m,
                    &shift,
                    &g.terms,
                );
                start = 0;
                if !a.is_one() {
                    for d in &mut done {
                        d.coeff = F::mul_by(&a, &d.coeff);
                    }
                    remove_content(&mut done, &mut cur);
                }
            }
            None => {
                if mode == Reduction::Top {
                    break;
                }
                done.push(cur[start].clone());
                start += 1;
            }
        }
    }
    done.extend(cur.drain(start..));
    SVec { terms: done, sugar }
}

/// Divides the partial remainder and the unreduced rest by their common
/// content, which keeps fraction-free reduction from growing coefficients.
fn remove_content<F: Field>(done: &mut [Term<F>], cur: &mut [Term<F>]) {
    if done.is_empty() && cur.is_empty() {
        return;
    }
    let coeffs: Vec<&F> = done.iter().chain(cur.iter()).map(|t| &t.coeff).collect();
    let mut s = F::primitive_scale(&coeffs);
    if s.is_negative() {
        s = -s;
    }
    if !s.is_one() {
        for t in done.iter_mut().chain(cur.iter_mut()) {
            t.coeff = F::mul_by(&s, &t.coeff);
        }
    }
}

/// Division with quotient tracking: returns `(q, r)` with
/// `f = sum_k q[k] * basis[k] + r`, `r` fully reduced.
pub(crate) fn divide<F: Field>(
    f: &SVec<F>,
    basis: &[SVec<F>],
    order: &TermOrder,
    nvars: usize,
) -> (Vec<Poly<F>>, SVec<F>) {
    let mut quot: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); basis.len()];
    let mut rem: Vec<Term<F>> = Vec::new();
    let mut cur = f.terms.clone();
    let unit = Monomial::one(nvars);
    let zero_shift = order.shift(&unit);
    let one = F::one();
    while let Some(t) = cur.first() {
        let found = basis.iter().position(|g| {
            let l = g.lead();
            l.pos == t.pos && l.mono.divides(&t.mono)
        });
        match found {
            Some(k) => {
                let l = basis[k].lead();
                let m = l.mono.quotient_of(&t.mono).unwrap();
                let b = t.coeff.clone() / l.coeff.clone();
                let shift = order.shift(&m);
                quot[k].push((m.clone(), b.clone()));
                cur = lin_comb(
                    &one,
                    &unit,
                    &zero_shift,
                    &cur,
                    &b,
                    &m,
                    &shift,
                    &basis[k].terms,
                );
            }
            None => rem.push(cur.remove(0)),
        }
    }
    let q = quot
        .into_iter()
        .map(|t| Poly::from_terms(nvars, t))
        .collect();
    (
        q,
        SVec {
            terms: rem,
            sugar: f.sugar,
        },
    )
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: usize,
    /// Sugar degree, or zero under the plain normal strategy.
    weight: u32,
    key: Key,
}

fn make_pair<F: Field>(
    basis: &[SVec<F>],
    i: usize,
    j: usize,
    sugar: bool,
    order: &TermOrder,
) -> Pair {
    let (a, b) = (basis[i].lead(), basis[j].lead());
    let lcm = a.mono.lcm(&b.mono);
    let weight = if sugar {
        let da = lcm.degree() - a.mono.degree();
        let db = lcm.degree() - b.mono.degree();
        (basis[i].sugar + da).max(basis[j].sugar + db)
    } else {
        0
    };
    let key = order.key(&lcm, a.pos);
    Pair {
        i: i.min(j),
        j: i.max(j),
        lcm,
        pos: a.pos,
        weight,
        key,
    }
}

fn pair_divides(a: &Pair, b: &Pair) -> bool {
    a.pos == b.pos && a.lcm.divides(&b.lcm)
}

/// Gebauer–Möller installation of the new element `h`.
fn update<F: Field>(
    basis: &[SVec<F>],
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    h: usize,
    rank_one: bool,
    sugar: bool,
    order: &TermOrder,
) {
    let lh = basis[h].lead().clone();
    let coprime = |p: &Pair| {
        let other = if p.i == h { p.j } else { p.i };
        rank_one && basis[other].lead().mono.is_coprime(&lh.mono)
    };
    let mut c: Vec<Pair> = active
        .iter()
        .filter(|&&g| basis[g].lead().pos == lh.pos)
        .map(|&g| make_pair(basis, g, h, sugar, order))
        .collect();
    let mut d: Vec<Pair> = Vec::new();
    while !c.is_empty() {
        let p = c.remove(0);
        if coprime(&p)
            || (!c.iter().any(|q| pair_divides(q, &p)) && !d.iter().any(|q| pair_divides(q, &p)))
        {
            d.push(p);
        }
    }
    let e: Vec<Pair> = d.into_iter().filter(|p| !coprime(p)).collect();
    pairs.retain(|p| {
        if p.pos != lh.pos || !lh.mono.divides(&p.lcm) {
            return true;
        }
        let l1 = basis[p.i].lead().mono.lcm(&lh.mono);
        let l2 = basis[p.j].lead().mono.lcm(&lh.mono);
        l1 == p.lcm || l2 == p.lcm
    });
    pairs.extend(e);
    active.retain(|&g| {
        let lg = basis[g].lead();
        !(lg.pos == lh.pos && lh.mono.divides(&lg.mono))
    });
    active.push(h);
}

fn s_vector<F: Field>(f: &SVec<F>, g: &SVec<F>, lcm: &Monomial, order: &TermOrder) -> SVec<F> {
    let (lf, lg) = (f.lead(), g.lead());
    let mf = lf.mono.quotient_of(lcm).unwrap();
    let mg = lg.mono.quotient_of(lcm).unwrap();
    let (a, b) = F::cancel_factors(&lf.coeff, &lg.coeff);
    let terms = lin_comb(
        &a,
        &mf,
        &order.shift(&mf),
        &f.terms[1..],
        &b,
        &mg,
        &order.shift(&mg),
        &g.terms[1..],
    );
    let sugar = (f.sugar + mf.degree()).max(g.sugar + mg.degree());
    SVec { terms, sugar }
}

/// Reduces the tails of the other active elements once `h` can divide one
/// of their terms. Leading terms are untouched, so pending pairs stay valid.
fn tail_reduce<F: Field>(basis: &mut [SVec<F>], active: &[usize], h: usize, order: &TermOrder) {
    let lh = basis[h].lead().clone();
    for &g in active {
        if g == h
            || !basis[g].terms[1..]
                .iter()
                .any(|t| t.pos == lh.pos && lh.mono.divides(&t.mono))
        {
            continue;
        }
        let reducers: Vec<&SVec<F>> = active
            .iter()
            .filter(|&&k| k != g)
            .map(|&k| &basis[k])
            .collect();
        let mut r = reduce(basis[g].clone(), &reducers, order, Reduction::Full, false);
        r.make_primitive();
        basis[g] = r;
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
pub(crate) fn buchberger<F: Field>(
    ctx: &Ctx,
    gens: Vec<SVec<F>>,
    order: &TermOrder,
    rank: usize,
) -> Result<Vec<SVec<F>>> {
    let rank_one = rank == 1;
    let mut basis: Vec<SVec<F>> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut max_terms = 0usize;
    let mut processed: u64 = 0;

    let mut install =
        |basis: &mut Vec<SVec<F>>, active: &mut Vec<usize>, pairs: &mut Vec<Pair>, v: SVec<F>| {
            let reducers: Vec<&SVec<F>> = active.iter().map(|&k| &basis[k]).collect();
            let mut r = reduce(v, &reducers, order, Reduction::Full, false);
            if r.is_zero() {
                return;
            }
            r.make_primitive();
            max_terms = max_terms.max(r.terms.len());
            basis.push(r);
            let h = basis.len() - 1;
            update(basis, active, pairs, h, rank_one, ctx.sugar, order);
            tail_reduce(basis, active, h, order);
        };

    for g in gens {
        if !g.is_zero() {
            install(&mut basis, &mut active, &mut pairs, g);
        }
    }

    while !pairs.is_empty() {
        let idx = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                (p.weight, &p.key, p.i, p.j).cmp(&(q.weight, &q.key, q.i, q.j))
            })
            .unwrap();
        let pair = pairs.swap_remove(idx);
        processed += 1;
        if let Some(limit) = ctx.pair_limit {
            if processed > limit as u64 {
                ctx.record(processed, max_terms);
                return Err(Error::ResourceLimit { limit });
            }
        }
        let s = s_vector(&basis[pair.i], &basis[pair.j], &pair.lcm, order);
        if !s.is_zero() {
            install(&mut basis, &mut active, &mut pairs, s);
        }
    }
    ctx.record(processed, max_terms);

    let mut reduced: Vec<SVec<F>> = active.iter().map(|&k| basis[k].clone()).collect();
    for r in &mut reduced {
        r.make_monic();
    }
    let mut out = Vec::with_capacity(reduced.len());
    for k in 0..reduced.len() {
        let others: Vec<&SVec<F>> = reduced
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, v)| v)
            .collect();
        out.push(reduce(
            reduced[k].clone(),
            &others,
            order,
            Reduction::Full,
            true,
        ));
    }
    out.sort_by(|a, b| a.lead().key.cmp(&b.lead().key));
    Ok(out)
}

/// A reduced Gröbner basis of a submodule of `K[x]^rank`, together with the
/// order it was computed for.
#[derive(Clone, Debug)]
pub struct Basis<F: Field> {
    nvars: usize,
    rank: usize,
    order: TermOrder,
    pub(crate) elems: Vec<SVec<F>>,
}

impl<F: Field> Basis<F> {
    pub fn compute(
        ctx: &Ctx,
        gens: &[FreeElem<F>],
        rank: usize,
        nvars: usize,
        order: TermOrder,
    ) -> Result<Self> {
        assert_eq!(
            order.nvars(),
            nvars,
            "term order built for a different ring"
        );
        for g in gens {
            if g.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: g.rank(),
                });
            }
            if let Some(p) = g.entries().iter().find(|p| p.nvars() != nvars) {
                return Err(Error::RingMismatch(format!(
                    "expected {} variables, found {}",
                    nvars,
                    p.nvars()
                )));
            }
        }
        let svecs = gens.iter().map(|g| SVec::from_elem(g, &order)).collect();
        let elems = buchberger(ctx, svecs, &order, rank)?;
        Ok(Basis {
            nvars,
            rank,
            order,
            elems,
        })
    }

    /// Gröbner basis of an ideal.
    pub fn of_ideal(ctx: &Ctx, gens: &[Poly<F>], nvars: usize, order: TermOrder) -> Result<Self> {
        let elems: Vec<FreeElem<F>> = gens.iter().map(|p| FreeElem(vec![p.clone()])).collect();
        Self::compute(ctx, &elems, 1, nvars, order)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> Vec<FreeElem<F>> {
        self.elems
            .iter()
            .map(|e| e.to_elem(self.rank, self.nvars))
            .collect()
    }

    /// Rank-one convenience: basis elements as polynomials.
    pub fn polys(&self) -> Vec<Poly<F>> {
        self.elements()
            .into_iter()
            .map(|mut e| e.0.swap_remove(0))
            .collect()
    }

    /// Leading term of each element: `(monomial, position)`.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.elems
            .iter()
            .map(|e| (e.lead().mono.clone(), e.lead().pos))
            .collect()
    }

    /// Exact normal form.
    pub fn reduce(&self, v: &FreeElem<F>) -> FreeElem<F> {
        let refs: Vec<&SVec<F>> = self.elems.iter().collect();
        let r = reduce(
            SVec::from_elem(v, &self.order),
            &refs,
            &self.order,
            Reduction::Full,
            true,
        );
        r.to_elem(self.rank, self.nvars)
    }

    pub fn reduce_poly(&self, p: &Poly<F>) -> Poly<F> {
        self.reduce(&FreeElem(vec![p.clone()])).0.swap_remove(0)
    }

    pub fn contains(&self, v: &FreeElem<F>) -> bool {
        let refs: Vec<&SVec<F>> = self.elems.iter().collect();
        reduce(
            SVec::from_elem(v, &self.order),
            &refs,
            &self.order,
            Reduction::Top,
            false,
        )
        .is_zero()
    }

    pub fn contains_poly(&self, p: &Poly<F>) -> bool {
        self.contains(&FreeElem(vec![p.clone()]))
    }

    /// True when the submodule is the whole free module.
    pub fn is_everything(&self) -> bool {
        (0..self.rank).all(|i| {
            self.elems
                .iter()
                .any(|e| e.lead().pos == i && e.lead().mono.is_one())
        })
    }

    /// Quotient tracking division: `v = sum q[k] * elements()[k] + r`.
    pub fn divide(&self, v: &FreeElem<F>) -> (Vec<Poly<F>>, FreeElem<F>) {
        let (q, r) = divide(
            &SVec::from_elem(v, &self.order),
            &self.elems,
            &self.order,
            self.nvars,
        );
        (q, r.to_elem(self.rank, self.nvars))
    }
}

/// Normal form of `f` with respect to an arbitrary generator list, reducing
/// against the lowest-index applicable generator first.
pub fn normal_form<F: Field>(
    f: &FreeElem<F>,
    gens: &[FreeElem<F>],
    order: &TermOrder,
) -> Result<FreeElem<F>> {
    let nvars = order.nvars();
    for g in gens {
        if g.rank() != f.rank() {
            return Err(Error::RankMismatch {
                expected: f.rank(),
                found: g.rank(),
            });
        }
    }
    if let Some(p) = f
        .entries()
        .iter()
        .chain(gens.iter().flat_map(|g| g.entries()))
        .find(|p| p.nvars() != nvars)
    {
        return Err(Error::RingMismatch(format!(
            "expected {} variables, found {}",
            nvars,
            p.nvars()
        )));
    }
    let svecs: Vec<SVec<F>> = gens
        .iter()
        .map(|g| SVec::from_elem(g, order))
        .filter(|g| !g.is_zero())
        .collect();
    let refs: Vec<&SVec<F>> = svecs.iter().collect();
    let r = reduce(
        SVec::from_elem(f, order),
        &refs,
        order,
        Reduction::Full,
        true,
    );
    Ok(r.to_elem(f.rank(), nvars))
}

/// Polynomial version of [`normal_form`].
pub fn normal_form_poly<F: Field>(
    f: &Poly<F>,
    gens: &[Poly<F>],
    order: &TermOrder,
) -> Result<Poly<F>> {
    let g: Vec<FreeElem<F>> = gens.iter().map(|p| FreeElem(vec![p.clone()])).collect();
    Ok(normal_form(&FreeElem(vec![f.clone()]), &g, order)?
        .0
        .swap_remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;
    use crate::field::{Fp, Rational};
    use crate::monomial::BaseOrder;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn polys(src: &[&str], n: &[String]) -> Vec<Poly<Rational>> {
        src.iter().map(|s| parse_poly(s, n).unwrap()).collect()
    }

    fn gb(src: &[&str], n: &[String], base: BaseOrder) -> Vec<String> {
        let ctx = Ctx::new(base);
        let b =
            Basis::of_ideal(&ctx, &polys(src, n), n.len(), TermOrder::pot(n.len(), base)).unwrap();
        let mut out: Vec<String> = b.polys().iter().map(|p| p.display(n).to_string()).collect();
        out.sort();
        out
    }

    #[test]
    fn normal_form_examples() {
        let n = names(&["x"]);
        let o = TermOrder::pot(1, BaseOrder::Lex);
        let f = &polys(&["x^2"], &n)[0];
        let r = normal_form_poly(f, &polys(&["x^2 - 1"], &n), &o).unwrap();
        assert_eq!(r.display(&n).to_string(), "1");
        let z = normal_form_poly(&Poly::zero(1), &polys(&["x^2 - 1"], &n), &o).unwrap();
        assert!(z.is_zero());
        let r = normal_form_poly(&polys(&["x^3 - 1"], &n)[0], &polys(&["x - 1"], &n), &o).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn buchberger_examples() {
        let n = names(&["x"]);
        assert_eq!(
            gb(&["x^2 - 1", "x^3 - 1"], &n, BaseOrder::Lex),
            vec!["x - 1"]
        );
        let n2 = names(&["x", "y"]);
        assert_eq!(gb(&["x", "y"], &n2, BaseOrder::GrevLex), vec!["x", "y"]);
        assert_eq!(gb(&["1", "x*y + 3"], &n2, BaseOrder::GrevLex), vec!["1"]);
    }

    #[test]
    fn textbook_ideal() {
        // Cox–Little–O'Shea: (x^3 - 2xy, x^2 y - 2y^2 + x) under grlex-like order
        let n = names(&["x", "y"]);
        let g = gb(
            &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"],
            &n,
            BaseOrder::GrevLex,
        );
        assert_eq!(g, vec!["x*y", "x^2", "y^2 - 1/2*x"]);
    }

    #[test]
    fn modules_need_the_chain_criterion_only() {
        // lead terms x*e0 and y*e0 are coprime but the S-vector is y*e1
        let n = names(&["x", "y"]);
        let ctx = Ctx::default();
        let f = FreeElem(polys(&["x", "1"], &n));
        let g = FreeElem(polys(&["y", "0"], &n));
        let b = Basis::compute(&ctx, &[f, g], 2, 2, TermOrder::pot(2, BaseOrder::GrevLex)).unwrap();
        assert_eq!(b.len(), 3);
        assert!(b.contains(&FreeElem(polys(&["0", "y"], &n))));
    }

    #[test]
    fn pair_limit_aborts() {
        let n = names(&["x", "y", "z"]);
        let ctx = Ctx::default().with_pair_limit(Some(1));
        let gens = polys(&["x^2 + y*z", "y^2 + x*z", "z^2 + x*y"], &n);
        let r = Basis::of_ideal(&ctx, &gens, 3, TermOrder::pot(3, BaseOrder::GrevLex));
        assert_eq!(r.unwrap_err(), Error::ResourceLimit { limit: 1 });
    }

    #[test]
    fn prime_field_basis() {
        let n = names(&["x", "y"]);
        let ctx = Ctx::default();
        let gens: Vec<Poly<Fp<5>>> = ["x^2 + 4", "x*y - 1"]
            .iter()
            .map(|s| parse_poly(s, &n).unwrap())
            .collect();
        let b = Basis::of_ideal(&ctx, &gens, 2, TermOrder::pot(2, BaseOrder::Lex)).unwrap();
        // x^2 = 1, x y = 1  =>  y = x, so the basis is {x - y, y^2 - 1}
        let mut got: Vec<String> = b
            .polys()
            .iter()
            .map(|p| p.display(&n).to_string())
            .collect();
        got.sort();
        assert_eq!(got, vec!["x - y", "y^2 - 1"]);
    }
}
