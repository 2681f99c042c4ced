use std::sync::Arc;

use flatlab_core::{Ctx, Field, FreeElem, Monomial, Poly, Rational};
use flatlab_homology::{koszul_homology, tor_diagonal_all, tor_resolution_all};
use flatlab_modules::{AffineAlgebra, BaseTower, PresentedModule};
use proptest::prelude::*;

type Alg = Arc<AffineAlgebra<Rational>>;

fn base() -> Alg {
    Arc::new(AffineAlgebra::base(
        BaseTower::new::<Rational>(vec!["s".into(), "t".into()]).unwrap(),
    ))
}

fn poly_strategy() -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(((0u16..2, 0u16..2), -2i64..=2), 0..3).prop_map(|terms| {
        let terms = terms
            .into_iter()
            .map(|((a, b), k)| (Monomial::from_exponents(&[a, b]), Rational::from_i64(k)))
            .collect();
        Poly::from_terms(2, terms)
    })
}

fn module_strategy() -> impl Strategy<Value = (usize, Vec<Vec<Poly<Rational>>>)> {
    (1usize..=2).prop_flat_map(|g| {
        (
            Just(g),
            prop::collection::vec(prop::collection::vec(poly_strategy(), g), 0..=2),
        )
    })
}

fn build(r: &Alg, (g, rels): &(usize, Vec<Vec<Poly<Rational>>>)) -> PresentedModule<Rational> {
    PresentedModule::new(
        r.clone(),
        *g,
        rels.iter().map(|c| FreeElem(c.clone())).collect(),
    )
    .unwrap()
}

fn zeros(v: &[flatlab_homology::TorResult<Rational>]) -> Vec<bool> {
    v.iter().map(|t| t.is_zero).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn diagonal_and_resolution_agree(a in module_strategy(), b in module_strategy()) {
        let ctx = Ctx::default();
        let r = base();
        let (m, n) = (build(&r, &a), build(&r, &b));
        let diag = tor_diagonal_all(&ctx, &m, &n, None).unwrap();
        let res = tor_resolution_all(&ctx, &m, &n, None).unwrap();
        prop_assert_eq!(zeros(&diag), zeros(&res));
    }

    #[test]
    fn tor_is_symmetric(a in module_strategy(), b in module_strategy()) {
        let ctx = Ctx::default();
        let r = base();
        let (m, n) = (build(&r, &a), build(&r, &b));
        prop_assert_eq!(zeros(&tor_diagonal_all(&ctx, &m, &n, None).unwrap()), zeros(&tor_diagonal_all(&ctx, &n, &m, None).unwrap()));
    }

    #[test]
    fn tor_vanishing_propagates_upward(a in module_strategy(), b in module_strategy()) {
        let ctx = Ctx::default();
        let r = base();
        let z = zeros(&tor_resolution_all(&ctx, &build(&r, &a), &build(&r, &b), None).unwrap());
        if let Some(i) = z.iter().position(|&z| z) {
            prop_assert!(z[i..].iter().all(|&z| z), "{:?}", z);
        }
    }

    #[test]
    fn koszul_vanishing_propagates_upward(a in module_strategy(), x in poly_strategy(), y in poly_strategy()) {
        let ctx = Ctx::default();
        let r = base();
        let m = build(&r, &a);
        let seq = [x, y];
        let z: Vec<bool> = (0..=2).map(|i| koszul_homology(&ctx, &seq, &m, i).unwrap().is_zero).collect();
        if let Some(i) = z.iter().position(|&z| z) {
            prop_assert!(z[i..].iter().all(|&z| z), "{:?}", z);
        }
    }
}
