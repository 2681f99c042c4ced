//! Homology of complexes of free modules with coefficients in a presented
//! module, and Koszul complexes.

use std::collections::HashMap;

use flatlab_core::{
    kernel_of_map, Basis, Ctx, Error, Field, FreeElem, Matrix, Poly, Result, TermOrder,
};
use flatlab_modules::PresentedModule;

#[derive(Clone, Debug)]
pub struct HomologyResult<F: Field> {
    pub degree: usize,
    /// Pruned subquotient presentation.
    pub module: PresentedModule<F>,
    pub is_zero: bool,
}

impl<F: Field> HomologyResult<F> {
    pub(crate) fn zero(degree: usize, like: &PresentedModule<F>) -> Self {
        HomologyResult {
            degree,
            module: PresentedModule::free(like.algebra().clone(), 0),
            is_zero: true,
        }
    }
}

/// `rels` copied into each of `blocks` consecutive blocks of width `g`.
fn blocked<F: Field>(
    rels: &[FreeElem<F>],
    blocks: usize,
    g: usize,
    nvars: usize,
) -> Vec<FreeElem<F>> {
    (0..blocks)
        .flat_map(|b| {
            rels.iter()
                .map(move |r| r.shifted(b * g, blocks * g, nvars))
        })
        .collect()
}

/// Homology at a term `F^rank` of a complex of free modules tensored with
/// `module`: `ker(outgoing ⊗ M) / im(incoming ⊗ M)`. Missing maps are zero.
pub fn complex_homology<F: Field>(
    ctx: &Ctx,
    module: &PresentedModule<F>,
    degree: usize,
    rank: usize,
    incoming: Option<&Matrix<F>>,
    outgoing: Option<&Matrix<F>>,
) -> Result<HomologyResult<F>> {
    let g = module.gens();
    let n = module.nvars();
    if rank == 0 || g == 0 {
        return Ok(HomologyResult::zero(degree, module));
    }
    if let Some(d) = incoming.filter(|d| d.rows != rank) {
        return Err(Error::RankMismatch {
            expected: rank,
            found: d.rows,
        });
    }
    if let Some(d) = outgoing.filter(|d| d.ncols() != rank) {
        return Err(Error::RankMismatch {
            expected: rank,
            found: d.ncols(),
        });
    }
    let rels = module.lifted_relations();
    let width = rank * g;
    let cycles: Vec<FreeElem<F>> = match outgoing {
        Some(d) if d.rows > 0 => {
            let d = d.kron_identity(g, n);
            kernel_of_map(ctx, n, d.rows, &d.cols, &blocked(&rels, d.rows / g, g, n))?
        }
        _ => (0..width).map(|i| FreeElem::unit(width, n, i)).collect(),
    };
    let mut boundaries = blocked(&rels, rank, g, n);
    if let Some(d) = incoming {
        boundaries.extend(d.kron_identity(g, n).cols);
    }
    let bb = Basis::compute(ctx, &boundaries, width, n, TermOrder::pot(n, ctx.order))?;
    let classes: Vec<FreeElem<F>> = cycles
        .into_iter()
        .map(|z| bb.reduce(&z))
        .map(|z| module.algebra().reduce_elem(&z))
        .filter(|z| !z.is_zero())
        .collect();
    if classes.is_empty() {
        return Ok(HomologyResult::zero(degree, module));
    }
    let pres = kernel_of_map(ctx, n, width, &classes, &boundaries)?;
    let module = PresentedModule::new(module.algebra().clone(), classes.len(), pres)?.prune();
    Ok(HomologyResult {
        degree,
        module,
        is_zero: false,
    })
}

/// Increasing `k`-subsets of `0..e`, in lexicographic order.
fn subsets(e: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, e: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..e {
            cur.push(v);
            go(v + 1, e, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, e, k, &mut Vec::new(), &mut out);
    out
}

/// The Koszul complex `K(x) ⊗ M` on a sequence `x` of elements of `M`'s algebra.
#[derive(Clone, Debug)]
pub struct KoszulComplex<F: Field> {
    seq: Vec<Poly<F>>,
    module: PresentedModule<F>,
    /// `diffs[i - 1]` is `d_i : K_i -> K_{i-1}`.
    diffs: Vec<Matrix<F>>,
}

impl<F: Field> KoszulComplex<F> {
    pub fn new(seq: Vec<Poly<F>>, module: PresentedModule<F>) -> Result<Self> {
        let n = module.nvars();
        if seq.iter().any(|p| p.nvars() != n) {
            return Err(Error::RingMismatch(
                "Koszul sequence outside the module's algebra".into(),
            ));
        }
        let e = seq.len();
        let mut diffs = Vec::with_capacity(e);
        for i in 1..=e {
            let rows = subsets(e, i - 1);
            let index: HashMap<&[usize], usize> = rows
                .iter()
                .enumerate()
                .map(|(k, s)| (s.as_slice(), k))
                .collect();
            let cols = subsets(e, i)
                .into_iter()
                .map(|s| {
                    let mut v = FreeElem::zero(rows.len(), n);
                    for (k, &x) in s.iter().enumerate() {
                        let mut face = s.clone();
                        face.remove(k);
                        let p = if k % 2 == 0 { seq[x].clone() } else { -&seq[x] };
                        v.0[index[face.as_slice()]] = p;
                    }
                    v
                })
                .collect();
            diffs.push(Matrix::new(rows.len(), cols));
        }
        for w in diffs.windows(2) {
            if !w[0].compose(&w[1], n).is_zero() {
                return Err(Error::InvalidArgument(
                    "Koszul differentials do not compose to zero".into(),
                ));
            }
        }
        Ok(KoszulComplex { seq, module, diffs })
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn module(&self) -> &PresentedModule<F> {
        &self.module
    }

    /// `d_i` for `1 <= i <= len`.
    pub fn differential(&self, i: usize) -> Option<&Matrix<F>> {
        if i == 0 {
            return None;
        }
        self.diffs.get(i - 1)
    }

    /// Rank of `K_i`, the binomial coefficient `C(len, i)`.
    pub fn rank(&self, i: usize) -> usize {
        let e = self.len();
        if i > e {
            return 0;
        }
        (0..i).fold(1usize, |acc, k| acc * (e - k) / (k + 1))
    }

    /// `H_i(x; M)`; zero outside `0..=len`.
    pub fn homology(&self, ctx: &Ctx, i: usize) -> Result<HomologyResult<F>> {
        if i > self.len() {
            return Ok(HomologyResult::zero(i, &self.module));
        }
        complex_homology(
            ctx,
            &self.module,
            i,
            self.rank(i),
            self.differential(i + 1),
            self.differential(i),
        )
    }
}

pub fn koszul_homology<F: Field>(
    ctx: &Ctx,
    seq: &[Poly<F>],
    m: &PresentedModule<F>,
    i: usize,
) -> Result<HomologyResult<F>> {
    KoszulComplex::new(seq.to_vec(), m.clone())?.homology(ctx, i)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use flatlab_core::Rational;
    use flatlab_modules::{AffineAlgebra, BaseTower};

    fn base(vars: &[&str]) -> Arc<AffineAlgebra<Rational>> {
        Arc::new(AffineAlgebra::base(
            BaseTower::new::<Rational>(vars.iter().map(|s| s.to_string()).collect()).unwrap(),
        ))
    }

    #[test]
    fn single_variable() {
        let ctx = Ctx::default();
        let r = base(&["t"]);
        let t = r.parse("t").unwrap();
        let free = PresentedModule::free(r.clone(), 1);
        let h0 = koszul_homology(&ctx, std::slice::from_ref(&t), &free, 0).unwrap();
        assert_eq!(h0.module.to_text(), "gens 1 ; rel (t)");
        assert!(
            koszul_homology(&ctx, std::slice::from_ref(&t), &free, 1)
                .unwrap()
                .is_zero
        );
        let k = PresentedModule::cyclic(r.clone(), std::slice::from_ref(&t)).unwrap();
        let h1 = koszul_homology(&ctx, std::slice::from_ref(&t), &k, 1).unwrap();
        assert_eq!(h1.module.to_text(), "gens 1 ; rel (t)");
        assert!(koszul_homology(&ctx, &[t], &k, 2).unwrap().is_zero);
    }

    #[test]
    fn top_homology_of_the_residue_field() {
        let ctx = Ctx::default();
        let r = base(&["s", "t"]);
        let seq = vec![r.parse("s").unwrap(), r.parse("t").unwrap()];
        let k = PresentedModule::cyclic(r.clone(), &seq).unwrap();
        let kc = KoszulComplex::new(seq, k).unwrap();
        assert_eq!(kc.rank(1), 2);
        let h2 = kc.homology(&ctx, 2).unwrap();
        assert_eq!(h2.module.to_text(), "gens 1 ; rel (t) ; rel (s)");
        let h1 = kc.homology(&ctx, 1).unwrap();
        assert_eq!(h1.module.gens(), 2);
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(2, 0), vec![Vec::<usize>::new()]);
    }
}
