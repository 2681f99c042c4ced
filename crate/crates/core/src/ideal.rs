//! Ideals and submodules of free modules over a polynomial ring, with the
//! standard constructions built on Gröbner bases.

use crate::context::Ctx;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::free::FreeElem;
use crate::groebner::Basis;
use crate::monomial::TermOrder;
use crate::poly::Poly;
use crate::syzygy::kernel_of_map;

/// Submodule of `P^rank` given by generators, `P` a polynomial ring in
/// `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule<F: Field> {
    nvars: usize,
    rank: usize,
    gens: Vec<FreeElem<F>>,
}

impl<F: Field> Submodule<F> {
    pub fn new(nvars: usize, rank: usize, gens: Vec<FreeElem<F>>) -> Result<Self> {
        for g in &gens {
            if g.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: g.rank(),
                });
            }
            if g.entries().iter().any(|p| p.nvars() != nvars) {
                return Err(Error::RingMismatch(format!(
                    "generator not in a ring of {} variables",
                    nvars
                )));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Submodule { nvars, rank, gens })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &[FreeElem<F>] {
        &self.gens
    }

    pub fn basis(&self, ctx: &Ctx) -> Result<Basis<F>> {
        Basis::compute(
            ctx,
            &self.gens,
            self.rank,
            self.nvars,
            TermOrder::pot(self.nvars, ctx.order),
        )
    }

    pub fn contains(&self, ctx: &Ctx, v: &FreeElem<F>) -> Result<bool> {
        Ok(self.basis(ctx)?.contains(v))
    }

    pub fn is_subset_of(&self, ctx: &Ctx, other: &Submodule<F>) -> Result<bool> {
        let b = other.basis(ctx)?;
        Ok(self.gens.iter().all(|g| b.contains(g)))
    }

    pub fn equals(&self, ctx: &Ctx, other: &Submodule<F>) -> Result<bool> {
        Ok(self.is_subset_of(ctx, other)? && other.is_subset_of(ctx, self)?)
    }

    pub fn is_everything(&self, ctx: &Ctx) -> Result<bool> {
        Ok(self.basis(ctx)?.is_everything())
    }

    pub fn sum(&self, other: &Submodule<F>) -> Submodule<F> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Submodule {
            nvars: self.nvars,
            rank: self.rank,
            gens,
        }
    }

    /// `{ v : j v in self for all j in ideal }`, one generator at a time:
    /// `self : j` is `(self ∩ j P^rank) / j`.
    pub fn quotient(&self, ctx: &Ctx, ideal: &Ideal<F>) -> Result<Submodule<F>> {
        let (n, g) = (self.nvars, self.rank);
        let mut acc: Option<Submodule<F>> = None;
        for j in ideal.gens().iter().filter(|j| !j.is_zero()) {
            let multiples: Vec<FreeElem<F>> = (0..g)
                .map(|i| FreeElem::unit(g, n, i).mul_poly(j))
                .collect();
            let principal = Basis::of_ideal(
                ctx,
                std::slice::from_ref(j),
                n,
                TermOrder::pot(n, ctx.order),
            )?;
            // j is a scalar multiple of the single monic basis element
            let unit = principal.polys().remove(0);
            let c = unit.terms()[0].1.clone() / j.terms()[0].1.clone();
            let divided = self
                .meet(ctx, &multiples)?
                .into_iter()
                .map(|v| {
                    FreeElem(
                        v.entries()
                            .iter()
                            .map(|p| {
                                principal
                                    .divide(&FreeElem(vec![p.clone()]))
                                    .0
                                    .remove(0)
                                    .scale(&c)
                            })
                            .collect(),
                    )
                })
                .collect();
            let part = Submodule::new(n, g, divided)?;
            acc = Some(match acc {
                None => part,
                Some(prev) => Submodule::new(n, g, prev.meet(ctx, &part.gens)?)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Submodule::free(n, g)))
    }

    /// Generators of `self ∩ span(other)`, from `t self + (1 - t) other` with
    /// the auxiliary variable `t` eliminated.
    fn meet(&self, ctx: &Ctx, other: &[FreeElem<F>]) -> Result<Vec<FreeElem<F>>> {
        let n = self.nvars;
        let up: Vec<usize> = (0..n).collect();
        let t = Poly::var(n + 1, n);
        let one_minus_t = &Poly::one(n + 1) - &t;
        let mut gens: Vec<FreeElem<F>> = self
            .gens
            .iter()
            .map(|v| v.embed(&up, n + 1).mul_poly(&t))
            .collect();
        gens.extend(
            other
                .iter()
                .map(|v| v.embed(&up, n + 1).mul_poly(&one_minus_t)),
        );
        self.eliminate_last(ctx, &gens)
    }

    /// Basis elements free of the last of `nvars + 1` variables, computed in
    /// an order that eliminates it.
    fn eliminate_last(&self, ctx: &Ctx, gens: &[FreeElem<F>]) -> Result<Vec<FreeElem<F>>> {
        let n = self.nvars;
        let order = TermOrder::eliminating(n + 1, &[n], ctx.order);
        let basis = Basis::compute(ctx, gens, self.rank, n + 1, order)?;
        let down: Vec<usize> = (0..=n).map(|i| if i < n { i } else { 0 }).collect();
        let base_vars: Vec<usize> = (0..n).collect();
        Ok(basis
            .elements()
            .into_iter()
            .filter(|e| e.entries().iter().all(|p| p.only_involves(&base_vars)))
            .map(|e| e.embed(&down, n))
            .collect())
    }

    /// `{ v : f^m v in self for some m }`, via an auxiliary variable `z` and
    /// the relation `z f = 1`, eliminated afterwards.
    pub fn saturation(&self, ctx: &Ctx, f: &Poly<F>) -> Result<Submodule<F>> {
        let n = self.nvars;
        if f.is_zero() {
            return Ok(Submodule::free(n, self.rank));
        }
        let up: Vec<usize> = (0..n).collect();
        let z = Poly::var(n + 1, n);
        let zf_minus_1 = &(&z * &f.embed(&up, n + 1)) - &Poly::one(n + 1);
        let mut gens: Vec<FreeElem<F>> = self.gens.iter().map(|g| g.embed(&up, n + 1)).collect();
        for j in 0..self.rank {
            gens.push(FreeElem::unit(self.rank, n + 1, j).mul_poly(&zf_minus_1));
        }
        let kept = self.eliminate_last(ctx, &gens)?;
        Submodule::new(n, self.rank, kept)
    }

    pub fn intersect(&self, ctx: &Ctx, other: &Submodule<F>) -> Result<Submodule<F>> {
        let coeffs = kernel_of_map(ctx, self.nvars, self.rank, &self.gens, &other.gens)?;
        let gens = coeffs
            .iter()
            .map(|c| {
                let mut acc = FreeElem::zero(self.rank, self.nvars);
                for (g, a) in self.gens.iter().zip(&c.0) {
                    if !a.is_zero() {
                        acc = acc.add(&g.mul_poly(a));
                    }
                }
                acc
            })
            .collect();
        Submodule::new(self.nvars, self.rank, gens)
    }

    /// Annihilator of `P^rank / self`.
    pub fn annihilator(&self, ctx: &Ctx) -> Result<Ideal<F>> {
        let g = self.rank;
        if g == 0 {
            return Ok(Ideal::unit(self.nvars));
        }
        // a -> (a e_1, ..., a e_g) in (P^g / self)^g
        let big = g * g;
        let mut c = FreeElem::zero(big, self.nvars);
        for i in 0..g {
            c.0[i * g + i] = Poly::one(self.nvars);
        }
        let rels: Vec<FreeElem<F>> = (0..g)
            .flat_map(|b| {
                self.gens
                    .iter()
                    .map(move |n| n.shifted(b * g, big, self.nvars))
            })
            .collect();
        let k = kernel_of_map(ctx, self.nvars, big, &[c], &rels)?;
        Ok(Ideal::new(
            self.nvars,
            k.into_iter().map(|mut v| v.0.swap_remove(0)).collect(),
        ))
    }

    pub fn free(nvars: usize, rank: usize) -> Submodule<F> {
        Submodule {
            nvars,
            rank,
            gens: (0..rank).map(|i| FreeElem::unit(rank, nvars, i)).collect(),
        }
    }
}

/// Ideal of a polynomial ring in `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal<F: Field> {
    nvars: usize,
    gens: Vec<Poly<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(nvars: usize, gens: Vec<Poly<F>>) -> Self {
        assert!(
            gens.iter().all(|p| p.nvars() == nvars),
            "ideal generators in different rings"
        );
        Ideal {
            nvars,
            gens: gens.into_iter().filter(|p| !p.is_zero()).collect(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        Ideal {
            nvars,
            gens: vec![Poly::one(nvars)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Poly<F>] {
        &self.gens
    }

    pub fn as_submodule(&self) -> Submodule<F> {
        Submodule {
            nvars: self.nvars,
            rank: 1,
            gens: self
                .gens
                .iter()
                .map(|p| FreeElem(vec![p.clone()]))
                .collect(),
        }
    }

    fn from_submodule(m: Submodule<F>) -> Self {
        Ideal {
            nvars: m.nvars,
            gens: m.gens.into_iter().map(|mut v| v.0.swap_remove(0)).collect(),
        }
    }

    pub fn basis(&self, ctx: &Ctx) -> Result<Basis<F>> {
        Basis::of_ideal(
            ctx,
            &self.gens,
            self.nvars,
            TermOrder::pot(self.nvars, ctx.order),
        )
    }

    pub fn contains(&self, ctx: &Ctx, p: &Poly<F>) -> Result<bool> {
        Ok(self.basis(ctx)?.contains_poly(p))
    }

    pub fn is_unit(&self, ctx: &Ctx) -> Result<bool> {
        Ok(self.basis(ctx)?.is_everything())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn equals(&self, ctx: &Ctx, other: &Ideal<F>) -> Result<bool> {
        self.as_submodule().equals(ctx, &other.as_submodule())
    }

    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal {
            nvars: self.nvars,
            gens,
        }
    }

    pub fn product(&self, other: &Ideal<F>) -> Ideal<F> {
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a * b))
            .collect();
        Ideal::new(self.nvars, gens)
    }

    /// `self ∩ P[vars not in elim]`, still written in all variables.
    pub fn eliminate(&self, ctx: &Ctx, elim: &[usize]) -> Result<Ideal<F>> {
        let rest: Vec<usize> = (0..self.nvars).filter(|v| !elim.contains(v)).collect();
        let order = TermOrder::blocks(
            self.nvars,
            &[(elim.to_vec(), ctx.order), (rest.clone(), ctx.order)],
            0,
        );
        let b = Basis::of_ideal(ctx, &self.gens, self.nvars, order)?;
        Ok(Ideal::new(
            self.nvars,
            b.polys()
                .into_iter()
                .filter(|p| p.only_involves(&rest))
                .collect(),
        ))
    }

    pub fn quotient(&self, ctx: &Ctx, other: &Ideal<F>) -> Result<Ideal<F>> {
        Ok(Ideal::from_submodule(
            self.as_submodule().quotient(ctx, other)?,
        ))
    }

    pub fn saturation(&self, ctx: &Ctx, f: &Poly<F>) -> Result<Ideal<F>> {
        Ok(Ideal::from_submodule(
            self.as_submodule().saturation(ctx, f)?,
        ))
    }

    pub fn intersect(&self, ctx: &Ctx, other: &Ideal<F>) -> Result<Ideal<F>> {
        Ok(Ideal::from_submodule(
            self.as_submodule().intersect(ctx, &other.as_submodule())?,
        ))
    }
}
