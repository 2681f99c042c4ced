//! Tensor products of presented modules and tensor powers over the base.

use std::sync::Arc;

use flatlab_core::{Ctx, Error, Field, FreeElem, Result};

use crate::module::PresentedModule;

/// Presentation of `M ⊗ N` once both are moved into a common algebra.
/// Generator `e_i ⊗ f_k` has index `i * g_N + k`; the `φ_M ⊗ 1` block comes
/// first, then `1 ⊗ φ_N`.
fn tensor_presentation<F: Field>(
    m: &PresentedModule<F>,
    n: &PresentedModule<F>,
    map_m: &[usize],
    map_n: &[usize],
    nvars: usize,
) -> (usize, Vec<FreeElem<F>>) {
    let (gm, gn) = (m.gens(), n.gens());
    let g = gm * gn;
    let mut rels = Vec::with_capacity(m.rels().len() * gn + gm * n.rels().len());
    for r in m.rels() {
        let r = r.embed(map_m, nvars);
        for k in 0..gn {
            let mut v = FreeElem::zero(g, nvars);
            for (i, p) in r.entries().iter().enumerate() {
                v.0[i * gn + k] = p.clone();
            }
            rels.push(v);
        }
    }
    for i in 0..gm {
        for r in n.rels() {
            let r = r.embed(map_n, nvars);
            let mut v = FreeElem::zero(g, nvars);
            for (k, p) in r.entries().iter().enumerate() {
                v.0[i * gn + k] = p.clone();
            }
            rels.push(v);
        }
    }
    (g, rels)
}

/// `M ⊗_R N` over `A ⊗_R B`.
pub fn tensor_over_base<F: Field>(
    ctx: &Ctx,
    m: &PresentedModule<F>,
    n: &PresentedModule<F>,
) -> Result<PresentedModule<F>> {
    let (alg, map_m, map_n) = m.algebra().tensor_over_base(ctx, n.algebra())?;
    let (g, rels) = tensor_presentation(m, n, &map_m, &map_n, alg.nvars());
    PresentedModule::new(Arc::new(alg), g, rels)
}

/// `M ⊗_K N` over `A ⊗_K B`, whose base is the doubled ring `R ⊗_K R`.
pub fn tensor_over_field<F: Field>(
    ctx: &Ctx,
    m: &PresentedModule<F>,
    n: &PresentedModule<F>,
) -> Result<PresentedModule<F>> {
    let (alg, map_m, map_n) = m.algebra().tensor_over_field(ctx, n.algebra())?;
    let (g, rels) = tensor_presentation(m, n, &map_m, &map_n, alg.nvars());
    PresentedModule::new(Arc::new(alg), g, rels)
}

/// Copy of `M` whose non-base variables carry the suffix `_k`.
fn tagged_copy<F: Field>(m: &PresentedModule<F>, k: usize) -> Result<PresentedModule<F>> {
    let alg = m.algebra().rename_extras(|_, y| format!("{}_{}", y, k))?;
    let map: Vec<usize> = (0..alg.nvars()).collect();
    m.base_change(Arc::new(alg), &map)
}

/// `T^d M = M ⊗_R ... ⊗_R M` (`d` factors). For `d ≥ 2` the `k`-th factor's
/// extra variables are renamed `y_k`; `d = 1` returns `M` unchanged.
pub fn tensor_power<F: Field>(
    ctx: &Ctx,
    m: &PresentedModule<F>,
    d: usize,
) -> Result<PresentedModule<F>> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "tensor power exponent must be positive".into(),
        ));
    }
    if d == 1 {
        return Ok(m.clone());
    }
    let mut acc = tagged_copy(m, 1)?;
    for k in 2..=d {
        acc = tensor_over_base(ctx, &acc, &tagged_copy(m, k)?)?;
    }
    Ok(acc)
}
