//! Depth at the irrelevant ideal and codepth over the base, both read off
//! Koszul homology.

use std::fmt;

use flatlab_core::{Ctx, Field, Poly, Result};
use flatlab_modules::PresentedModule;

use crate::complex::KoszulComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Depth {
    Finite(usize),
    /// All Koszul homology vanishes (the zero module).
    Infinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Codepth {
    Finite(usize),
    NegInfinite,
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Finite(d) => write!(f, "{}", d),
            Depth::Infinite => f.write_str("+inf"),
        }
    }
}

impl fmt::Display for Codepth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Codepth::Finite(d) => write!(f, "{}", d),
            Codepth::NegInfinite => f.write_str("-inf"),
        }
    }
}

/// Largest `i` with `H_i(seq; M) != 0`, scanning downward.
fn top_nonvanishing<F: Field>(
    ctx: &Ctx,
    seq: Vec<Poly<F>>,
    m: &PresentedModule<F>,
) -> Result<Option<usize>> {
    let kc = KoszulComplex::new(seq, m.clone())?;
    for i in (0..=kc.len()).rev() {
        if !kc.homology(ctx, i)?.is_zero {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// `e - sup{ i : H_i(v_1..v_e; M) != 0 }` with `v` every ambient variable.
pub fn depth_at_irrelevant<F: Field>(ctx: &Ctx, m: &PresentedModule<F>) -> Result<Depth> {
    let n = m.nvars();
    let seq = (0..n).map(|i| Poly::var(n, i)).collect();
    Ok(match top_nonvanishing(ctx, seq, m)? {
        Some(i) => Depth::Finite(n - i),
        None => Depth::Infinite,
    })
}

/// `sup{ i : H_i(x_1..x_m; M) != 0 }` with `x` the base variables, which is
/// `sup{ i : Tor_i^R(K, M) != 0 }` at the origin of `R`.
pub fn codepth<F: Field>(ctx: &Ctx, m: &PresentedModule<F>) -> Result<Codepth> {
    let n = m.nvars();
    let seq = m
        .algebra()
        .base_vars()
        .into_iter()
        .map(|i| Poly::var(n, i))
        .collect();
    Ok(match top_nonvanishing(ctx, seq, m)? {
        Some(i) => Codepth::Finite(i),
        None => Codepth::NegInfinite,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use flatlab_core::{FreeElem, Rational};
    use flatlab_modules::{AffineAlgebra, BaseTower};

    fn base() -> Arc<AffineAlgebra<Rational>> {
        Arc::new(AffineAlgebra::base(
            BaseTower::new::<Rational>(vec!["s".into(), "t".into()]).unwrap(),
        ))
    }

    #[test]
    fn depths() {
        let ctx = Ctx::default();
        let r = base();
        let p = |s: &str| r.parse(s).unwrap();
        assert_eq!(
            depth_at_irrelevant(&ctx, &PresentedModule::free(r.clone(), 1)).unwrap(),
            Depth::Finite(2)
        );
        let k = PresentedModule::cyclic(r.clone(), &[p("s"), p("t")]).unwrap();
        assert_eq!(depth_at_irrelevant(&ctx, &k).unwrap(), Depth::Finite(0));
        let h = PresentedModule::cyclic(r.clone(), &[p("s")]).unwrap();
        assert_eq!(depth_at_irrelevant(&ctx, &h).unwrap(), Depth::Finite(1));
        let zero = PresentedModule::cyclic(r.clone(), &[p("1")]).unwrap();
        assert_eq!(depth_at_irrelevant(&ctx, &zero).unwrap(), Depth::Infinite);
        assert_eq!(codepth(&ctx, &zero).unwrap(), Codepth::NegInfinite);
    }

    #[test]
    fn codepths() {
        let ctx = Ctx::default();
        let r = base();
        let p = |s: &str| r.parse(s).unwrap();
        let k = PresentedModule::cyclic(r.clone(), &[p("s"), p("t")]).unwrap();
        assert_eq!(codepth(&ctx, &k).unwrap(), Codepth::Finite(2));
        assert_eq!(
            codepth(&ctx, &PresentedModule::free(r.clone(), 2)).unwrap(),
            Codepth::Finite(0)
        );
        let ideal =
            PresentedModule::new(r.clone(), 2, vec![FreeElem(vec![p("t"), p("-s")])]).unwrap();
        assert_eq!(codepth(&ctx, &ideal).unwrap(), Codepth::Finite(1));
        assert_eq!(depth_at_irrelevant(&ctx, &ideal).unwrap(), Depth::Finite(1));
    }
}
