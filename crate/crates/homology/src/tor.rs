//! `Tor^R_j(M, N)` by two independent routes.

use std::fmt;

use flatlab_core::{
    kernel_of_map, Basis, Ctx, Error, Field, FreeElem, Matrix, Poly, Result, TermOrder,
};
use flatlab_modules::{tensor_over_field, PresentedModule};

use crate::complex::{complex_homology, HomologyResult, KoszulComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorMethod {
    /// Koszul homology of `M ⊗_K N` on the diagonal `x - x'`.
    Diagonal,
    /// Free resolution of `M` over `R`, tensored with `N`.
    Resolution,
}

impl fmt::Display for TorMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TorMethod::Diagonal => "diagonal",
            TorMethod::Resolution => "resolution",
        })
    }
}

#[derive(Clone, Debug)]
pub struct TorResult<F: Field> {
    pub j: usize,
    pub module: PresentedModule<F>,
    pub is_zero: bool,
    pub method: TorMethod,
}

impl<F: Field> TorResult<F> {
    fn from_homology(h: HomologyResult<F>, method: TorMethod) -> Self {
        TorResult {
            j: h.degree,
            module: h.module,
            is_zero: h.is_zero,
            method,
        }
    }
}

fn check_towers<F: Field>(m: &PresentedModule<F>, n: &PresentedModule<F>) -> Result<()> {
    if m.algebra().tower() != n.algebra().tower() {
        return Err(Error::RingMismatch(
            "Tor of modules over different base rings".into(),
        ));
    }
    Ok(())
}

/// `Tor_j = H_j(x - x'; M ⊗_K N)` over `A ⊗_K B`. The diagonal sequence is
/// regular in `R ⊗_K R` and generates the kernel of multiplication, so the
/// formula holds globally.
pub fn tor_diagonal<F: Field>(
    ctx: &Ctx,
    m: &PresentedModule<F>,
    n: &PresentedModule<F>,
    j: usize,
) -> Result<TorResult<F>> {
    Ok(tor_diagonal_all(ctx, m, n, Some(j))?.pop().unwrap())
}

/// `Tor_j` for every `j` in `0..=dim R` (or just `only`), sharing one complex.
pub fn tor_diagonal_all<F: Field>(
    ctx: &Ctx,
    m: &PresentedModule<F>,
    n: &PresentedModule<F>,
    only: Option<usize>,
) -> Result<Vec<TorResult<F>>> {
    check_towers(m, n)?;
    let dim = m.algebra().base_dim();
    let p = tensor_over_field(ctx, m, n)?;
    let nv = p.nvars();
    let seq: Vec<Poly<F>> = (0..dim)
        .map(|i| &Poly::var(nv, i) - &Poly::var(nv, dim + i))
        .collect();
    let kc = KoszulComplex::new(seq, p)?;
    let degrees: Vec<usize> = match only {
        Some(j) => vec![j],
        None => (0..=dim).collect(),
    };
    degrees
        .into_iter()
        .map(|j| {
            Ok(TorResult::from_homology(
                kc.homology(ctx, j)?,
                TorMethod::Diagonal,
            ))
        })
        .collect()
}

/// Drops generators lying in the span of the others, scanning from the end.
pub fn minimalize<F: Field>(
    ctx: &Ctx,
    gens: Vec<FreeElem<F>>,
    rank: usize,
    nvars: usize,
) -> Result<Vec<FreeElem<F>>> {
    let mut kept = gens;
    let mut i = kept.len();
    while i > 0 {
        i -= 1;
        let others: Vec<FreeElem<F>> = kept
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, v)| v.clone())
            .collect();
        let b = Basis::compute(ctx, &others, rank, nvars, TermOrder::pot(nvars, ctx.order))?;
        if b.contains(&kept[i]) {
            kept.remove(i);
        }
    }
    Ok(kept)
}

/// Differentials `φ_1, ..., φ_len` of a free resolution of `coker(rels)`
/// over the polynomial ring, by iterated kernels.
pub fn free_resolution<F: Field>(
    ctx: &Ctx,
    m: &PresentedModule<F>,
    len: usize,
) -> Result<Vec<Matrix<F>>> {
    if !m.algebra().is_base() {
        return Err(Error::Precondition(
            "resolution route needs a module presented over the base ring".into(),
        ));
    }
    let nv = m.nvars();
    let mut out = Vec::with_capacity(len);
    let mut rows = m.gens();
    let mut cols = minimalize(ctx, m.rels().to_vec(), rows, nv)?;
    for k in 0..len {
        let phi = Matrix::new(rows, cols);
        let next = if k + 1 < len && phi.ncols() > 0 {
            let ker = kernel_of_map(ctx, nv, phi.rows, &phi.cols, &[])?;
            minimalize(ctx, ker, phi.ncols(), nv)?
        } else {
            Vec::new()
        };
        rows = phi.ncols();
        out.push(phi);
        cols = next;
    }
    Ok(out)
}

/// `Tor_j = H_j(F_• ⊗_R N)` for a free resolution `F_•` of `M` over `R`.
pub fn tor_resolution<F: Field>(
    ctx: &Ctx,
    m: &PresentedModule<F>,
    n: &PresentedModule<F>,
    j: usize,
) -> Result<TorResult<F>> {
    Ok(tor_resolution_all(ctx, m, n, Some(j))?.pop().unwrap())
}

pub fn tor_resolution_all<F: Field>(
    ctx: &Ctx,
    m: &PresentedModule<F>,
    n: &PresentedModule<F>,
    only: Option<usize>,
) -> Result<Vec<TorResult<F>>> {
    check_towers(m, n)?;
    if !m.algebra().is_base() {
        return Err(Error::Precondition(
            "resolution route needs a module presented over the base ring".into(),
        ));
    }
    let dim = m.algebra().base_dim();
    let top = only.unwrap_or(dim);
    let degrees: Vec<usize> = match only {
        Some(j) => vec![j],
        None => (0..=dim).collect(),
    };
    if top > dim {
        // resolutions over R have length at most dim R
        return Ok(degrees.into_iter().map(|j| zero_tor(n, j)).collect());
    }
    let map: Vec<usize> = (0..dim).collect();
    let nb = n.nvars();
    let phis: Vec<Matrix<F>> = free_resolution(ctx, m, top + 1)?
        .into_iter()
        .map(|phi| {
            Matrix::new(
                phi.rows,
                phi.cols.iter().map(|c| c.embed(&map, nb)).collect(),
            )
        })
        .collect();
    let rank = |k: usize| {
        if k == 0 {
            m.gens()
        } else {
            phis[k - 1].ncols()
        }
    };
    degrees
        .into_iter()
        .map(|j| {
            let outgoing = if j == 0 { None } else { Some(&phis[j - 1]) };
            let h = complex_homology(ctx, n, j, rank(j), phis.get(j), outgoing)?;
            Ok(TorResult::from_homology(h, TorMethod::Resolution))
        })
        .collect()
}

fn zero_tor<F: Field>(n: &PresentedModule<F>, j: usize) -> TorResult<F> {
    TorResult {
        j,
        module: PresentedModule::free(n.algebra().clone(), 0),
        is_zero: true,
        method: TorMethod::Resolution,
    }
}
