//! Finitely presented modules `M = coker(A^p -> A^g)`.

use std::fmt;
use std::sync::Arc;

use flatlab_core::{
    Basis, Ctx, Error, Field, FreeElem, Ideal, Matrix, Poly, Result, Submodule, TermOrder,
};

use crate::algebra::AffineAlgebra;

#[derive(Clone, Debug)]
pub struct PresentedModule<F: Field> {
    algebra: Arc<AffineAlgebra<F>>,
    gens: usize,
    rels: Vec<FreeElem<F>>,
}

pub(crate) fn same_algebra<F: Field>(a: &Arc<AffineAlgebra<F>>, b: &Arc<AffineAlgebra<F>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<F: Field> PresentedModule<F> {
    /// Relation entries are reduced modulo the algebra's ideal; zero and
    /// repeated relations are dropped.
    pub fn new(
        algebra: Arc<AffineAlgebra<F>>,
        gens: usize,
        rels: Vec<FreeElem<F>>,
    ) -> Result<Self> {
        let n = algebra.nvars();
        let mut kept: Vec<FreeElem<F>> = Vec::with_capacity(rels.len());
        for r in rels {
            if r.rank() != gens {
                return Err(Error::RankMismatch {
                    expected: gens,
                    found: r.rank(),
                });
            }
            if r.entries().iter().any(|p| p.nvars() != n) {
                return Err(Error::RingMismatch(
                    "relation entry outside the module's algebra".into(),
                ));
            }
            let r = algebra.reduce_elem(&r);
            if !r.is_zero() && !kept.contains(&r) {
                kept.push(r);
            }
        }
        Ok(PresentedModule {
            algebra,
            gens,
            rels: kept,
        })
    }

    pub fn free(algebra: Arc<AffineAlgebra<F>>, gens: usize) -> Self {
        PresentedModule {
            algebra,
            gens,
            rels: Vec::new(),
        }
    }

    /// `A / (fs)`.
    pub fn cyclic(algebra: Arc<AffineAlgebra<F>>, ideal: &[Poly<F>]) -> Result<Self> {
        let rels = ideal.iter().map(|p| FreeElem(vec![p.clone()])).collect();
        Self::new(algebra, 1, rels)
    }

    pub fn algebra(&self) -> &Arc<AffineAlgebra<F>> {
        &self.algebra
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn rels(&self) -> &[FreeElem<F>] {
        &self.rels
    }

    pub fn nvars(&self) -> usize {
        self.algebra.nvars()
    }

    pub fn relation_matrix(&self) -> Matrix<F> {
        Matrix::new(self.gens, self.rels.clone())
    }

    /// Relations lifted to the ambient polynomial ring: the module's own
    /// relations followed by `f e_j` for every `f` in the algebra's ideal.
    pub fn lifted_relations(&self) -> Vec<FreeElem<F>> {
        let n = self.nvars();
        let mut out = self.rels.clone();
        for j in 0..self.gens {
            for f in self.algebra.relations() {
                out.push(FreeElem::unit(self.gens, n, j).mul_poly(f));
            }
        }
        out
    }

    pub fn relation_submodule(&self) -> Submodule<F> {
        Submodule::new(self.nvars(), self.gens, self.lifted_relations())
            .expect("relations have the module's rank")
    }

    /// Module Gröbner basis of the lifted relations (position over term).
    pub fn basis(&self, ctx: &Ctx) -> Result<Basis<F>> {
        Basis::compute(
            ctx,
            &self.lifted_relations(),
            self.gens,
            self.nvars(),
            TermOrder::pot(self.nvars(), ctx.order),
        )
    }

    pub fn is_zero(&self, ctx: &Ctx) -> Result<bool> {
        if self.gens == 0 {
            return Ok(true);
        }
        Ok(self.basis(ctx)?.is_everything())
    }

    /// Whether the class of `v in A^g` vanishes in `M`.
    pub fn is_zero_element(&self, ctx: &Ctx, v: &FreeElem<F>) -> Result<bool> {
        if v.rank() != self.gens {
            return Err(Error::RankMismatch {
                expected: self.gens,
                found: v.rank(),
            });
        }
        Ok(self.basis(ctx)?.contains(v))
    }

    /// `Ann(M)`, as an ideal of the ambient ring containing the algebra's ideal.
    pub fn annihilator(&self, ctx: &Ctx) -> Result<Ideal<F>> {
        self.relation_submodule().annihilator(ctx)
    }

    /// `Supp M ∩ Supp N ≠ ∅`, for modules over one algebra.
    pub fn supports_intersect(&self, ctx: &Ctx, other: &Self) -> Result<bool> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::RingMismatch(
                "supports compared over different algebras".into(),
            ));
        }
        let sum = self.annihilator(ctx)?.sum(&other.annihilator(ctx)?);
        Ok(!sum.is_unit(ctx)?)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::RingMismatch(
                "direct sum over different algebras".into(),
            ));
        }
        let g = self.gens + other.gens;
        let n = self.nvars();
        let rels = self
            .rels
            .iter()
            .map(|r| r.shifted(0, g, n))
            .chain(other.rels.iter().map(|r| r.shifted(self.gens, g, n)))
            .collect();
        Self::new(self.algebra.clone(), g, rels)
    }

    /// Same relations over another algebra, through a variable map.
    pub fn base_change(&self, algebra: Arc<AffineAlgebra<F>>, map: &[usize]) -> Result<Self> {
        let n = algebra.nvars();
        let rels = self.rels.iter().map(|r| r.embed(map, n)).collect();
        Self::new(algebra, self.gens, rels)
    }

    /// Submodule of `M` generated by the classes of `elems`, presented on
    /// those generators.
    pub fn submodule_generated_by(&self, ctx: &Ctx, elems: &[FreeElem<F>]) -> Result<Self> {
        let rels = flatlab_core::kernel_of_map(
            ctx,
            self.nvars(),
            self.gens,
            elems,
            &self.lifted_relations(),
        )?;
        Self::new(self.algebra.clone(), elems.len(), rels)
    }

    /// Drops generators that some relation expresses through the others
    /// (a relation with a nonzero constant entry), repeating until none is left.
    pub fn prune(&self) -> Self {
        let mut gens = self.gens;
        let mut rels = self.rels.clone();
        while let Some((ri, gi)) = rels.iter().enumerate().find_map(|(ri, r)| {
            r.entries()
                .iter()
                .position(|p| p.is_nonzero_constant())
                .map(|gi| (ri, gi))
        }) {
            let pivot = rels.remove(ri);
            let c = pivot.entries()[gi].as_constant().unwrap();
            rels = rels
                .into_iter()
                .map(|r| {
                    let a = &r.entries()[gi];
                    let r = if a.is_zero() {
                        r.clone()
                    } else {
                        r.sub(&pivot.mul_poly(&a.scale(&c.inv())))
                    };
                    let mut entries = r.0;
                    entries.remove(gi);
                    self.algebra.reduce_elem(&FreeElem(entries))
                })
                .filter(|r| !r.is_zero())
                .collect();
            gens -= 1;
        }
        let mut out = PresentedModule {
            algebra: self.algebra.clone(),
            gens,
            rels: Vec::new(),
        };
        for r in rels {
            if !out.rels.contains(&r) {
                out.rels.push(r);
            }
        }
        out
    }

    /// Canonical text form: `gens g ; rel (...) ; rel (...)`.
    pub fn to_text(&self) -> String {
        let mut s = format!("gens {}", self.gens);
        for r in &self.rels {
            s.push_str(" ; rel ");
            s.push_str(&self.algebra.show_elem(r));
        }
        s
    }
}

impl<F: Field> fmt::Display for PresentedModule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BaseTower;
    use flatlab_core::Rational;

    fn base(vars: &[&str]) -> Arc<AffineAlgebra<Rational>> {
        Arc::new(AffineAlgebra::base(
            BaseTower::new::<Rational>(vars.iter().map(|s| s.to_string()).collect()).unwrap(),
        ))
    }

    fn col(a: &AffineAlgebra<Rational>, src: &[&str]) -> FreeElem<Rational> {
        FreeElem(src.iter().map(|s| a.parse(s).unwrap()).collect())
    }

    #[test]
    fn zero_tests() {
        let ctx = Ctx::default();
        let r = base(&["s", "t"]);
        let id = PresentedModule::new(
            r.clone(),
            2,
            vec![col(&r, &["1", "0"]), col(&r, &["0", "1"])],
        )
        .unwrap();
        assert!(id.is_zero(&ctx).unwrap());
        assert!(!PresentedModule::free(r.clone(), 1).is_zero(&ctx).unwrap());
        let a = Arc::new(r.localize(&ctx, &r.parse("s").unwrap()).unwrap());
        let m = PresentedModule::cyclic(a.clone(), &[a.parse("s").unwrap()]).unwrap();
        assert!(m.is_zero(&ctx).unwrap());
    }

    #[test]
    fn annihilators_and_supports() {
        let ctx = Ctx::default();
        let r = base(&["s"]);
        let m = PresentedModule::cyclic(r.clone(), &[r.parse("s").unwrap()]).unwrap();
        let n = PresentedModule::cyclic(r.clone(), &[r.parse("s - 1").unwrap()]).unwrap();
        let ann = m.annihilator(&ctx).unwrap();
        assert!(ann
            .equals(&ctx, &Ideal::new(1, vec![r.parse("s").unwrap()]))
            .unwrap());
        assert!(!m.supports_intersect(&ctx, &n).unwrap());
        assert!(m.supports_intersect(&ctx, &m).unwrap());
    }

    #[test]
    fn prune_examples() {
        let r = base(&["t"]);
        let one = PresentedModule::new(r.clone(), 1, vec![col(&r, &["1"])])
            .unwrap()
            .prune();
        assert_eq!(one.gens(), 0);
        let m = PresentedModule::new(
            r.clone(),
            2,
            vec![col(&r, &["1", "0"]), col(&r, &["0", "t"])],
        )
        .unwrap();
        let p = m.prune();
        assert_eq!(p.to_text(), "gens 1 ; rel (t)");
        assert_eq!(p.prune().to_text(), p.to_text());
        let m = PresentedModule::new(
            r.clone(),
            2,
            vec![col(&r, &["t", "-1"]), col(&r, &["t^2", "0"])],
        )
        .unwrap();
        assert_eq!(m.prune().to_text(), "gens 1 ; rel (t^2)");
    }

    #[test]
    fn direct_sums_and_text() {
        let r = base(&["s", "t"]);
        let a = PresentedModule::cyclic(r.clone(), &[r.parse("s").unwrap()]).unwrap();
        let b = PresentedModule::free(r.clone(), 1);
        let sum = a.direct_sum(&b).unwrap();
        assert_eq!(sum.to_text(), "gens 2 ; rel (s, 0)");
    }
}
