//! Syzygies and kernels of maps between presented modules.

use crate::context::Ctx;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::free::FreeElem;
use crate::groebner::{Basis, SVec};
use crate::monomial::TermOrder;
use crate::poly::Poly;

/// Generators of the syzygy module of a Gröbner basis, by Schreyer's
/// construction: every S-vector's standard representation yields one
/// syzygy, and together they generate all of them.
///
/// The result lives in `A^{basis.len()}`, indexed like `basis.elements()`.
pub fn syzygies<F: Field>(basis: &Basis<F>) -> Result<Vec<FreeElem<F>>> {
    let n = basis.len();
    let nvars = basis.nvars();
    let order = basis.order();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let (li, lj) = (basis.elems[i].lead(), basis.elems[j].lead());
            if li.pos != lj.pos {
                continue;
            }
            let lcm = li.mono.lcm(&lj.mono);
            let mi = li.mono.quotient_of(&lcm).unwrap();
            let mj = lj.mono.quotient_of(&lcm).unwrap();
            let ci = li.coeff.clone();
            let cj = lj.coeff.clone();
            // S = (mi / ci) g_i - (mj / cj) g_j
            let fi = Poly::monomial(mi, ci.inv());
            let fj = Poly::monomial(mj, cj.inv());
            let gi = basis.elems[i].to_elem(basis.rank(), nvars);
            let gj = basis.elems[j].to_elem(basis.rank(), nvars);
            let s = gi.mul_poly(&fi).sub(&gj.mul_poly(&fj));
            let (q, r) =
                crate::groebner::divide(&SVec::from_elem(&s, order), &basis.elems, order, nvars);
            if !r.is_zero() {
                return Err(Error::NotGroebner);
            }
            let mut syz = FreeElem::zero(n, nvars);
            for (k, qk) in q.into_iter().enumerate() {
                syz.0[k] = -&qk;
            }
            syz.0[i] = &syz.0[i] + &fi;
            syz.0[j] = &syz.0[j] - &fj;
            if !syz.is_zero() {
                out.push(syz);
            }
        }
    }
    Ok(out)
}

/// Generators of `{ v in A^q : cols * v in span(target_rels) }`, where
/// `cols` are `q` vectors of rank `p` and `target_rels` are rank-`p`
/// relations of the target.
///
/// Computed from one Gröbner basis of the tagged vectors `(col_j, e_j)` and
/// `(rel, 0)` in position-over-term order with the target coordinates first;
/// basis elements whose leading position is a tag coordinate have no target
/// part and generate the kernel.
pub fn kernel_of_map<F: Field>(
    ctx: &Ctx,
    nvars: usize,
    target_rank: usize,
    cols: &[FreeElem<F>],
    target_rels: &[FreeElem<F>],
) -> Result<Vec<FreeElem<F>>> {
    let p = target_rank;
    let q = cols.len();
    for v in cols.iter().chain(target_rels) {
        if v.rank() != p {
            return Err(Error::RankMismatch {
                expected: p,
                found: v.rank(),
            });
        }
    }
    if q == 0 {
        return Ok(Vec::new());
    }
    let mut gens = Vec::with_capacity(q + target_rels.len());
    for (j, c) in cols.iter().enumerate() {
        let mut v = c.shifted(0, p + q, nvars);
        v.0[p + j] = Poly::one(nvars);
        gens.push(v);
    }
    for r in target_rels {
        if !r.is_zero() {
            gens.push(r.shifted(0, p + q, nvars));
        }
    }
    let basis = Basis::compute(ctx, &gens, p + q, nvars, TermOrder::pot(nvars, ctx.order))?;
    Ok(basis
        .elements()
        .into_iter()
        .zip(basis.leading_terms())
        .filter(|(_, (_, pos))| *pos >= p)
        .map(|(e, _)| FreeElem(e.0[p..].to_vec()))
        .collect())
}
