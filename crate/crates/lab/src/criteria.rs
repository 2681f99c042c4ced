//! The tensor-power criterion and its dimension-two variant.

use flatlab_core::{Ctx, Error, Field, Result};
use flatlab_modules::{tensor_power, PresentedModule};

use crate::certificate::{base_info, FlatnessCertificate, Meter, Method, Verdict, Witness};

/// Tests `T^d M` for torsion over the base. Torsion-free means flat once
/// `d >= dim R`; conversely flat modules have flat, hence torsion-free,
/// tensor powers, so a torsion element proves non-flatness for any `d`.
fn power_test<F: Field>(
    ctx: &Ctx,
    m: &PresentedModule<F>,
    d: usize,
    method: Method,
) -> Result<FlatnessCertificate> {
    let meter = Meter::start(ctx);
    let power = tensor_power(ctx, m, d)?;
    let dec = power.torsion(ctx)?;
    let alg = power.algebra();
    let (verdict, witness) = match power.torsion_witness(ctx, &dec)? {
        None => (
            Verdict::Flat,
            Witness {
                h: Some(alg.show(&dec.h)),
                ..Witness::default()
            },
        ),
        Some((elem, u)) => (
            Verdict::NotFlat,
            Witness {
                element: Some(alg.show_elem(&elem)),
                annihilator: Some(alg.show(&u)),
                h: Some(alg.show(&dec.h)),
                detail: None,
            },
        ),
    };
    Ok(FlatnessCertificate {
        verdict,
        method,
        d,
        base: base_info(m),
        witness,
        stats: meter.finish(ctx),
        module: m.to_text(),
    })
}

/// Decides flatness of `M` over `R` from torsion in `T^d M`, `d` defaulting
/// to `max(dim R, 1)`. Values of `d` below `dim R` are rejected: the
/// criterion says nothing there.
pub fn main_criterion<F: Field>(
    ctx: &Ctx,
    m: &PresentedModule<F>,
    d: Option<usize>,
) -> Result<FlatnessCertificate> {
    let dim = m.algebra().base_dim();
    let d = d.unwrap_or(dim.max(1));
    if d == 0 {
        return Err(Error::InvalidArgument(
            "tensor power exponent must be positive".into(),
        ));
    }
    if d < dim {
        return Err(Error::Precondition(format!(
            "d = {} is below dim R = {}",
            d, dim
        )));
    }
    power_test(ctx, m, d, Method::MainCriterion)
}

/// Over a base of dimension at most two, `M` is flat iff `M ⊗_R M` is
/// torsion-free. Works for any noetherian witness algebra.
pub fn dim2_criterion<F: Field>(ctx: &Ctx, m: &PresentedModule<F>) -> Result<FlatnessCertificate> {
    let dim = m.algebra().base_dim();
    if dim > 2 {
        return Err(Error::Precondition(format!("dim R = {} exceeds 2", dim)));
    }
    power_test(ctx, m, 2, Method::Dim2)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use flatlab_core::{FreeElem, Rational};
    use flatlab_modules::{AffineAlgebra, BaseTower};

    fn base(vars: &[&str]) -> Arc<AffineAlgebra<Rational>> {
        Arc::new(AffineAlgebra::base(
            BaseTower::new::<Rational>(vars.iter().map(|s| s.to_string()).collect()).unwrap(),
        ))
    }

    #[test]
    fn free_is_flat_and_cyclic_torsion_is_not() {
        let ctx = Ctx::default();
        let r = base(&["s", "t"]);
        let c = main_criterion(&ctx, &PresentedModule::free(r.clone(), 2), None).unwrap();
        assert_eq!((c.verdict, c.d), (Verdict::Flat, 2));
        let r1 = base(&["t"]);
        let m = PresentedModule::cyclic(r1.clone(), &[r1.parse("t").unwrap()]).unwrap();
        let c = main_criterion(&ctx, &m, Some(1)).unwrap();
        assert_eq!(c.verdict, Verdict::NotFlat);
        assert_eq!(c.witness.element.as_deref(), Some("(1)"));
        assert_eq!(c.witness.annihilator.as_deref(), Some("t"));
        assert!(c.recheck(&ctx, &m).unwrap());
        assert_eq!(dim2_criterion(&ctx, &m).unwrap().verdict, Verdict::NotFlat);
    }

    #[test]
    fn ideal_module_is_caught_in_the_square() {
        let ctx = Ctx::default();
        let r = base(&["s", "t"]);
        let m = PresentedModule::new(
            r.clone(),
            2,
            vec![FreeElem(vec![
                r.parse("t").unwrap(),
                r.parse("-s").unwrap(),
            ])],
        )
        .unwrap();
        let c = main_criterion(&ctx, &m, Some(2)).unwrap();
        assert_eq!(c.verdict, Verdict::NotFlat);
        assert_eq!(c.witness.annihilator.as_deref(), Some("s"));
        assert!(c.recheck(&ctx, &m).unwrap());
        assert!(matches!(
            main_criterion(&ctx, &m, Some(1)),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            main_criterion(&ctx, &m, Some(0)),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn json_key_order_is_stable() {
        let ctx = Ctx::default();
        let r = base(&["t"]);
        let mut c = main_criterion(&ctx, &PresentedModule::free(r, 1), None).unwrap();
        c.stats.wall_ms = 0;
        let json = serde_json::to_string(&c).unwrap();
        let keys = [
            "\"verdict\"",
            "\"method\"",
            "\"d\"",
            "\"base\"",
            "\"witness\"",
            "\"stats\"",
            "\"module\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "{}", json);
        assert!(json.contains("\"method\":\"main-criterion\""));
        let back: FlatnessCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }
}
