//! Torsion over the base ring: `T_R(M) = ker(M -> M ⊗_R K(x))`.
//!
//! A Gröbner basis of the lifted relations in a block order that compares
//! positions, then the extra variables, then the base variables is also a
//! Gröbner basis over the fraction field `K(x)`. The product `h` of its base
//! leading coefficients therefore satisfies `N K(x)[y] ∩ K[x,y]^g = N : h^∞`,
//! so the torsion submodule is one saturation away.

use flatlab_core::{Basis, Ctx, Field, FreeElem, Monomial, Poly, Result, TermOrder};

use crate::module::PresentedModule;

#[derive(Clone, Debug)]
pub struct TorsionDecomposition<F: Field> {
    /// Generators of `T_R(M)` inside `A^g`, none of them zero in `M`.
    pub torsion: Vec<FreeElem<F>>,
    /// `M / T_R(M)`, on the same generators.
    pub quotient: PresentedModule<F>,
    /// Nonzero base polynomial with `h^k T_R(M) = 0` for some `k`.
    pub h: Poly<F>,
}

impl<F: Field> TorsionDecomposition<F> {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

/// Leading coefficient over `K[x]` of a Gröbner element: the terms of the
/// leading entry sharing the leading monomial's extra-variable part, with
/// that part removed.
fn base_leading_coefficient<F: Field>(
    e: &FreeElem<F>,
    lead: &Monomial,
    pos: usize,
    base_dim: usize,
) -> Poly<F> {
    let n = lead.nvars();
    let y_part = &lead.exponents()[base_dim..];
    let terms = e.entries()[pos]
        .terms()
        .iter()
        .filter(|(m, _)| &m.exponents()[base_dim..] == y_part)
        .map(|(m, c)| {
            let mut ex = m.exponents().to_vec();
            for v in ex.iter_mut().skip(base_dim) {
                *v = 0;
            }
            (Monomial::from_exponents(&ex), c.clone())
        })
        .collect();
    let p = Poly::from_terms(n, terms);
    let lc = p.terms()[0].1.clone();
    p.scale(&lc.inv())
}

impl<F: Field> PresentedModule<F> {
    /// Block order: position, then extra variables, then base variables.
    fn fraction_field_order(&self, ctx: &Ctx) -> TermOrder {
        let alg = self.algebra();
        TermOrder::blocks(
            self.nvars(),
            &[(alg.extra_vars(), ctx.order), (alg.base_vars(), ctx.order)],
            0,
        )
    }

    /// Distinct non-constant base leading coefficients of the fraction-field basis.
    pub fn torsion_denominators(&self, ctx: &Ctx) -> Result<Vec<Poly<F>>> {
        let n = self.nvars();
        let gb = Basis::compute(
            ctx,
            &self.lifted_relations(),
            self.gens(),
            n,
            self.fraction_field_order(ctx),
        )?;
        let m = self.algebra().base_dim();
        let mut out: Vec<Poly<F>> = Vec::new();
        for (e, (lead, pos)) in gb.elements().iter().zip(gb.leading_terms()) {
            let lc = base_leading_coefficient(e, &lead, pos, m);
            if !lc.is_nonzero_constant() && !out.contains(&lc) {
                out.push(lc);
            }
        }
        Ok(out)
    }

    pub fn torsion(&self, ctx: &Ctx) -> Result<TorsionDecomposition<F>> {
        let n = self.nvars();
        let denominators = self.torsion_denominators(ctx)?;
        let h = denominators.iter().fold(Poly::one(n), |acc, p| &acc * p);
        if denominators.is_empty() {
            return Ok(TorsionDecomposition {
                torsion: Vec::new(),
                quotient: self.clone(),
                h,
            });
        }
        let sat = self.relation_submodule().saturation(ctx, &h)?;
        let basis = self.basis(ctx)?;
        let torsion: Vec<FreeElem<F>> = sat
            .gens()
            .iter()
            .map(|v| self.algebra().reduce_elem(&basis.reduce(v)))
            .filter(|v| !v.is_zero())
            .collect();
        let mut rels = self.rels().to_vec();
        rels.extend(torsion.iter().cloned());
        let quotient = PresentedModule::new(self.algebra().clone(), self.gens(), rels)?;
        Ok(TorsionDecomposition {
            torsion,
            quotient,
            h,
        })
    }

    pub fn is_torsion_free(&self, ctx: &Ctx) -> Result<bool> {
        Ok(self.torsion(ctx)?.is_torsion_free())
    }

    pub fn torsion_quotient(&self, ctx: &Ctx) -> Result<PresentedModule<F>> {
        Ok(self.torsion(ctx)?.quotient)
    }

    /// `T_R(M)` as a module in its own right, presented on the torsion generators.
    pub fn torsion_module(
        &self,
        ctx: &Ctx,
        dec: &TorsionDecomposition<F>,
    ) -> Result<PresentedModule<F>> {
        self.submodule_generated_by(ctx, &dec.torsion)
    }

    /// A torsion element together with a nonzero base polynomial killing it.
    /// Small annihilators are tried first: base variables, then the
    /// individual leading coefficients, then powers of `h`.
    pub fn torsion_witness(
        &self,
        ctx: &Ctx,
        dec: &TorsionDecomposition<F>,
    ) -> Result<Option<(FreeElem<F>, Poly<F>)>> {
        let Some(t) = dec.torsion.iter().min_by_key(|t| t.term_count()).cloned() else {
            return Ok(None);
        };
        let basis = self.basis(ctx)?;
        let n = self.nvars();
        let mut candidates: Vec<Poly<F>> = self
            .algebra()
            .base_vars()
            .into_iter()
            .map(|i| Poly::var(n, i))
            .collect();
        candidates.extend(self.torsion_denominators(ctx)?);
        for u in &candidates {
            if basis.contains(&t.mul_poly(u)) {
                return Ok(Some((t, u.clone())));
            }
        }
        let mut u = dec.h.clone();
        loop {
            if basis.contains(&t.mul_poly(&u)) {
                return Ok(Some((t, u)));
            }
            u = &u * &dec.h;
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{AffineAlgebra, BaseTower};
    use crate::tensor::tensor_power;
    use flatlab_core::Rational;

    fn base(vars: &[&str]) -> Arc<AffineAlgebra<Rational>> {
        Arc::new(AffineAlgebra::base(
            BaseTower::new::<Rational>(vars.iter().map(|s| s.to_string()).collect()).unwrap(),
        ))
    }

    #[test]
    fn free_and_cyclic_torsion() {
        let ctx = Ctx::default();
        let r = base(&["t"]);
        assert!(PresentedModule::free(r.clone(), 2)
            .is_torsion_free(&ctx)
            .unwrap());
        let m = PresentedModule::cyclic(r.clone(), &[r.parse("t").unwrap()]).unwrap();
        let dec = m.torsion(&ctx).unwrap();
        assert_eq!(dec.torsion.len(), 1);
        assert!(dec.quotient.is_zero(&ctx).unwrap());
        let (_, u) = m.torsion_witness(&ctx, &dec).unwrap().unwrap();
        assert_eq!(r.show(&u), "t");
    }

    #[test]
    fn free_summand_survives_the_quotient() {
        let ctx = Ctx::default();
        let r = base(&["t"]);
        let m = PresentedModule::cyclic(r.clone(), &[r.parse("t").unwrap()]).unwrap();
        let sum = m.direct_sum(&PresentedModule::free(r.clone(), 1)).unwrap();
        let q = sum.torsion_quotient(&ctx).unwrap().prune();
        assert_eq!(q.to_text(), "gens 1");
    }

    #[test]
    fn ideal_module_square_has_antisymmetric_torsion() {
        let ctx = Ctx::default();
        let r = base(&["s", "t"]);
        let rel = FreeElem(vec![r.parse("t").unwrap(), r.parse("-s").unwrap()]);
        let m = PresentedModule::new(r.clone(), 2, vec![rel]).unwrap();
        assert!(m.is_torsion_free(&ctx).unwrap());
        let t2 = tensor_power(&ctx, &m, 2).unwrap();
        let dec = t2.torsion(&ctx).unwrap();
        assert!(!dec.is_torsion_free());
        let w = FreeElem(vec![
            Poly::zero(2),
            Poly::one(2),
            -&Poly::one(2),
            Poly::zero(2),
        ]);
        assert!(!t2.is_zero_element(&ctx, &w).unwrap());
        assert!(t2
            .is_zero_element(&ctx, &w.mul_poly(&r.parse("s").unwrap()))
            .unwrap());
        assert!(t2
            .is_zero_element(&ctx, &w.mul_poly(&r.parse("t").unwrap()))
            .unwrap());
        let (t, u) = t2.torsion_witness(&ctx, &dec).unwrap().unwrap();
        assert!(!t2.is_zero_element(&ctx, &t).unwrap());
        assert!(t2.is_zero_element(&ctx, &t.mul_poly(&u)).unwrap());
        assert!(dec.quotient.is_torsion_free(&ctx).unwrap());
    }

    #[test]
    fn square_root_algebra_is_torsion_free() {
        let ctx = Ctx::default();
        let tower = BaseTower::new::<Rational>(vec!["s".into(), "t".into()]).unwrap();
        let u2 = flatlab_core::expr::parse_poly::<Rational>(
            "u^2 - s",
            &["s".into(), "t".into(), "u".into()],
        )
        .unwrap();
        let a = Arc::new(AffineAlgebra::new(&ctx, tower, vec!["u".into()], vec![u2]).unwrap());
        let m = PresentedModule::free(a.clone(), 1);
        assert!(m.is_torsion_free(&ctx).unwrap());
        assert!(tensor_power(&ctx, &m, 2)
            .unwrap()
            .is_torsion_free(&ctx)
            .unwrap());
        // R[u]/(ut - s) is torsion-free, its square is not
        let ut = a.parse("u*t - s").unwrap();
        let tower = a.tower().clone();
        let b = Arc::new(AffineAlgebra::new(&ctx, tower, vec!["u".into()], vec![ut]).unwrap());
        let m = PresentedModule::free(b, 1);
        assert!(m.is_torsion_free(&ctx).unwrap());
        assert!(!tensor_power(&ctx, &m, 2)
            .unwrap()
            .is_torsion_free(&ctx)
            .unwrap());
    }
}
