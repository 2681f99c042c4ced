//! Audit suites: each runs one structural statement on a concrete instance,
//! recording which hypotheses held and whether the conclusions followed.

use serde::Serialize;

use flatlab_core::{Ctx, Field, Poly, Result};
use flatlab_homology::{
    codepth, depth_at_irrelevant, tor_diagonal_all, tor_resolution_all, Codepth, Depth,
    KoszulComplex, TorResult,
};
use flatlab_modules::{tensor_over_base, tensor_power, PresentedModule};

use crate::criteria::{dim2_criterion, main_criterion};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
}

impl Check {
    fn new(name: impl Into<String>, holds: bool) -> Self {
        Check {
            name: name.into(),
            holds,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub tag: String,
    pub instance: String,
    pub applicable: bool,
    pub hypotheses: Vec<Check>,
    pub conclusions: Vec<Check>,
    pub pass: bool,
}

impl AuditReport {
    fn new(tag: &str, instance: String, hypotheses: Vec<Check>, conclusions: Vec<Check>) -> Self {
        let applicable = hypotheses.iter().all(|c| c.holds);
        let pass = !applicable || conclusions.iter().all(|c| c.holds);
        AuditReport {
            tag: tag.to_string(),
            instance,
            applicable,
            hypotheses,
            conclusions,
            pass,
        }
    }

    pub fn with_instance(mut self, instance: impl Into<String>) -> Self {
        self.instance = instance.into();
        self
    }
}

fn pair_label<F: Field>(m: &PresentedModule<F>, n: &PresentedModule<F>) -> String {
    format!("[{}] x [{}]", m.to_text(), n.to_text())
}

/// For a vanishing pattern `v_0, v_1, ...`, one check per vanishing index `i`
/// stating that every later entry also vanishes.
fn rigidity_checks(what: &str, zero: &[bool]) -> (Vec<Check>, Vec<Check>) {
    let first = zero.iter().position(|&z| z);
    let hyp = vec![Check::new(
        format!("some {} vanishes", what),
        first.is_some(),
    )];
    let concl = zero
        .iter()
        .enumerate()
        .filter(|(_, &z)| z)
        .map(|(i, _)| {
            Check::new(
                format!("{}_j = 0 for j >= {}", what, i),
                zero[i..].iter().all(|&z| z),
            )
        })
        .collect();
    (hyp, concl)
}

fn zeros<F: Field>(tors: &[TorResult<F>]) -> Vec<bool> {
    tors.iter().map(|t| t.is_zero).collect()
}

/// Vanishing of one `Tor_i(M, N)` forces vanishing above `i`.
pub fn rigidity_audit<F: Field>(
    ctx: &Ctx,
    m: &PresentedModule<F>,
    n: &PresentedModule<F>,
) -> Result<AuditReport> {
    let z = zeros(&tor_diagonal_all(ctx, m, n, None)?);
    let (hyp, concl) = rigidity_checks("Tor", &z);
    Ok(AuditReport::new(
        "tor-rigidity",
        pair_label(m, n),
        hyp,
        concl,
    ))
}

/// Same pattern for Koszul homology `H_i(seq; M)`.
pub fn koszul_rigidity_audit<F: Field>(
    ctx: &Ctx,
    seq: &[Poly<F>],
    m: &PresentedModule<F>,
) -> Result<AuditReport> {
    let kc = KoszulComplex::new(seq.to_vec(), m.clone())?;
    let z: Vec<bool> = (0..=kc.len())
        .map(|i| Ok(kc.homology(ctx, i)?.is_zero))
        .collect::<Result<_>>()?;
    let (hyp, concl) = rigidity_checks("H", &z);
    Ok(AuditReport::new("koszul-rigidity", m.to_text(), hyp, concl))
}

/// When `M ⊗_R N` is torsion-free: higher `Tor(M, N)` vanish, torsion of
/// either factor is `Tor`-orthogonal to the other factor, and dividing out
/// torsion does not change the tensor product.
pub fn torsion_tor_audit<F: Field>(
    ctx: &Ctx,
    m: &PresentedModule<F>,
    n: &PresentedModule<F>,
) -> Result<AuditReport> {
    let label = pair_label(m, n);
    let product = tensor_over_base(ctx, m, n)?;
    let hyp = vec![Check::new(
        "M (x) N torsion-free",
        product.is_torsion_free(ctx)?,
    )];
    if !hyp[0].holds {
        return Ok(AuditReport::new("torsion-tor", label, hyp, Vec::new()));
    }
    let mut concl = Vec::new();
    let tor = tor_diagonal_all(ctx, m, n, None)?;
    for t in tor.iter().skip(1) {
        concl.push(Check::new(format!("Tor_{}(M, N) = 0", t.j), t.is_zero));
    }
    let (dm, dn) = (m.torsion(ctx)?, n.torsion(ctx)?);
    let (tm, tn) = (m.torsion_module(ctx, &dm)?, n.torsion_module(ctx, &dn)?);
    for t in tor_diagonal_all(ctx, m, &tn, None)? {
        concl.push(Check::new(format!("Tor_{}(M, T(N)) = 0", t.j), t.is_zero));
    }
    for t in tor_diagonal_all(ctx, &tm, n, None)? {
        concl.push(Check::new(format!("Tor_{}(T(M), N) = 0", t.j), t.is_zero));
    }
    let rel = product.relation_submodule();
    let variants = [
        (
            "M (x) N -> M/T(M) (x) N",
            tensor_over_base(ctx, &dm.quotient, n)?,
        ),
        (
            "M (x) N -> M (x) N/T(N)",
            tensor_over_base(ctx, m, &dn.quotient)?,
        ),
        (
            "M (x) N -> M/T(M) (x) N/T(N)",
            tensor_over_base(ctx, &dm.quotient, &dn.quotient)?,
        ),
    ];
    for (name, v) in variants {
        // same generators, larger relations: the map is onto, and injective
        // exactly when the relation submodules agree
        concl.push(Check::new(
            format!("{} bijective", name),
            rel.equals(ctx, &v.relation_submodule())?,
        ));
    }
    Ok(AuditReport::new("torsion-tor", label, hyp, concl))
}

/// Torsion-freeness of `T^d M` descends to `T^n M` for `n < d`.
pub fn power_descent_audit<F: Field>(
    ctx: &Ctx,
    m: &PresentedModule<F>,
    d: usize,
) -> Result<AuditReport> {
    let top = tensor_power(ctx, m, d)?.is_torsion_free(ctx)?;
    let hyp = vec![Check::new(format!("T^{} M torsion-free", d), top)];
    let mut concl = Vec::new();
    if top {
        for k in 1..d {
            concl.push(Check::new(
                format!("T^{} M torsion-free", k),
                tensor_power(ctx, m, k)?.is_torsion_free(ctx)?,
            ));
        }
    }
    Ok(AuditReport::new("power-descent", m.to_text(), hyp, concl))
}

/// `sup{ i : Tor_i(K, M) != 0 }` at the origin, computed from a free
/// resolution of the residue field rather than from Koszul homology of `M`.
pub fn codepth_via_resolution<F: Field>(ctx: &Ctx, m: &PresentedModule<F>) -> Result<Codepth> {
    let alg = m.algebra();
    let base = std::sync::Arc::new(flatlab_modules::AffineAlgebra::base(alg.tower().clone()));
    let dim = alg.base_dim();
    let residue = PresentedModule::cyclic(
        base.clone(),
        &(0..dim).map(|i| base.var(i)).collect::<Vec<_>>(),
    )?;
    let z = zeros(&tor_resolution_all(ctx, &residue, m, None)?);
    Ok(match z.iter().rposition(|&z| !z) {
        Some(i) => Codepth::Finite(i),
        None => Codepth::NegInfinite,
    })
}

/// `cd M = dim R - depth M` for modules presented over `R`. Both sides are
/// read at the origin; Koszul homology on the variables is supported there,
/// so no localization is needed.
pub fn codepth_duality_audit<F: Field>(ctx: &Ctx, m: &PresentedModule<F>) -> Result<AuditReport> {
    let hyp = vec![Check::new(
        "presented over the base ring",
        m.algebra().is_base(),
    )];
    let mut concl = Vec::new();
    if hyp[0].holds {
        let dim = m.algebra().base_dim();
        let cd = codepth_via_resolution(ctx, m)?;
        let depth = depth_at_irrelevant(ctx, m)?;
        let dual = match (cd, depth) {
            (Codepth::Finite(c), Depth::Finite(d)) => c + d == dim,
            (Codepth::NegInfinite, Depth::Infinite) => true,
            _ => false,
        };
        concl.push(Check::new(
            format!("cd = {} and depth = {} sum to {}", cd, depth, dim),
            dual,
        ));
        concl.push(Check::new("Koszul codepth agrees", codepth(ctx, m)? == cd));
    }
    Ok(AuditReport::new("codepth-duality", m.to_text(), hyp, concl))
}

fn add_codepth(a: Codepth, b: Codepth) -> Codepth {
    match (a, b) {
        (Codepth::Finite(x), Codepth::Finite(y)) => Codepth::Finite(x + y),
        _ => Codepth::NegInfinite,
    }
}

/// For `Tor`-independent `M` and `N`, `cd(M ⊗ N) = cd M + cd N`.
pub fn codepth_additivity_audit<F: Field>(
    ctx: &Ctx,
    m: &PresentedModule<F>,
    n: &PresentedModule<F>,
) -> Result<AuditReport> {
    let tor = tor_diagonal_all(ctx, m, n, None)?;
    let hyp: Vec<Check> = tor
        .iter()
        .skip(1)
        .map(|t| Check::new(format!("Tor_{}(M, N) = 0", t.j), t.is_zero))
        .collect();
    let mut concl = Vec::new();
    if hyp.iter().all(|c| c.holds) {
        let (a, b) = (codepth(ctx, m)?, codepth(ctx, n)?);
        let ab = codepth(ctx, &tensor_over_base(ctx, m, n)?)?;
        concl.push(Check::new(
            format!("cd(M (x) N) = {} equals {} + {}", ab, a, b),
            ab == add_codepth(a, b),
        ));
    }
    Ok(AuditReport::new(
        "codepth-additivity",
        pair_label(m, n),
        hyp,
        concl,
    ))
}

fn has_constant_term<F: Field>(p: &Poly<F>) -> bool {
    p.terms().iter().any(|(mono, _)| mono.is_one())
}

/// If `H_1(seq; L)` is nonzero of finite length at the irrelevant ideal, then
/// `H_0(seq; L)` has depth zero there.
pub fn koszul_finite_length_audit<F: Field>(
    ctx: &Ctx,
    seq: &[Poly<F>],
    l: &PresentedModule<F>,
) -> Result<AuditReport> {
    let kc = KoszulComplex::new(seq.to_vec(), l.clone())?;
    let h1 = kc.homology(ctx, 1)?;
    let mut hyp = vec![
        Check::new(
            "sequence lies in the irrelevant ideal",
            !seq.iter().any(has_constant_term),
        ),
        Check::new("H_1 nonzero", !h1.is_zero),
    ];
    let finite = if h1.is_zero {
        true
    } else {
        let ann = h1.module.annihilator(ctx)?;
        let n = l.nvars();
        let mut all = true;
        for v in 0..n {
            if !ann.saturation(ctx, &Poly::var(n, v))?.is_unit(ctx)? {
                all = false;
                break;
            }
        }
        all
    };
    hyp.push(Check::new("H_1 of finite length", finite));
    let mut concl = Vec::new();
    if hyp.iter().all(|c| c.holds) {
        let depth = depth_at_irrelevant(ctx, &kc.homology(ctx, 0)?.module)?;
        concl.push(Check::new(
            format!("depth H_0 = {} is 0", depth),
            depth == Depth::Finite(0),
        ));
    }
    Ok(AuditReport::new(
        "koszul-rigidity-finite-length",
        l.to_text(),
        hyp,
        concl,
    ))
}

/// Over a base of dimension at most two, the square test and the main
/// criterion must return the same verdict.
pub fn dim2_audit<F: Field>(ctx: &Ctx, m: &PresentedModule<F>) -> Result<AuditReport> {
    let dim = m.algebra().base_dim();
    let hyp = vec![Check::new("dim R <= 2", dim <= 2)];
    let mut concl = Vec::new();
    if dim <= 2 {
        let a = dim2_criterion(ctx, m)?;
        let b = main_criterion(ctx, m, None)?;
        concl.push(Check::new(
            format!(
                "square test {:?} equals main criterion {:?}",
                a.verdict, b.verdict
            ),
            a.verdict == b.verdict,
        ));
    }
    Ok(AuditReport::new("dim2", m.to_text(), hyp, concl))
}

/// Over the polynomial domain `R` the only associated prime is zero, so
/// "associated points of `T^d M` lie over `Ass R`" reads as torsion-freeness
/// of `T^d M`. The report states that reduction and the verdict.
pub fn ass_points_report<F: Field>(ctx: &Ctx, m: &PresentedModule<F>, d: usize) -> Result<String> {
    let c = main_criterion(ctx, m, Some(d))?;
    let head = format!(
        "Ass R = {{(0)}}, so Ass(T^{} M) lies over Ass R iff T^{} M is torsion-free",
        d, d
    );
    Ok(match (&c.witness.element, &c.witness.annihilator) {
        (Some(e), Some(u)) => format!(
            "{}: condition fails, torsion witness {} killed by {}",
            head, e, u
        ),
        _ => format!("{}: condition holds", head),
    })
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

    fn cyclic(r: &Arc<AffineAlgebra<Rational>>, gens: &[&str]) -> PresentedModule<Rational> {
        PresentedModule::cyclic(
            r.clone(),
            &gens.iter().map(|g| r.parse(g).unwrap()).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    fn ideal_module(r: &Arc<AffineAlgebra<Rational>>) -> PresentedModule<Rational> {
        PresentedModule::new(
            r.clone(),
            2,
            vec![FreeElem(vec![
                r.parse("t").unwrap(),
                r.parse("-s").unwrap(),
            ])],
        )
        .unwrap()
    }

    fn sqrt_s() -> Arc<AffineAlgebra<Rational>> {
        let ctx = Ctx::default();
        let tower = BaseTower::new::<Rational>(vec!["s".into()]).unwrap();
        let u = Poly::var(2, 1);
        let rel = &(&u * &u) - &Poly::var(2, 0);
        Arc::new(AffineAlgebra::new(&ctx, tower, vec!["u".into()], vec![rel]).unwrap())
    }

    #[test]
    fn rigidity_examples() {
        let ctx = Ctx::default();
        let r = base(&["s", "t"]);
        let f = PresentedModule::free(r.clone(), 1);
        let rep = rigidity_audit(&ctx, &f, &f).unwrap();
        assert!(rep.applicable && rep.pass);
        assert_eq!(rep.conclusions[0].name, "Tor_j = 0 for j >= 1");
        let rep = rigidity_audit(&ctx, &cyclic(&r, &["s"]), &cyclic(&r, &["t"])).unwrap();
        assert!(rep.pass && rep.conclusions.len() == 2);
        let rep = rigidity_audit(&ctx, &cyclic(&r, &["s"]), &cyclic(&r, &["s"])).unwrap();
        assert!(rep.pass && rep.conclusions.len() == 1);
    }

    #[test]
    fn rigidity_pattern_detects_a_gap() {
        let (_, concl) = rigidity_checks("Tor", &[false, true, false]);
        assert!(!concl[0].holds);
    }

    #[test]
    fn torsion_tor_examples() {
        let ctx = Ctx::default();
        let r = base(&["s", "t"]);
        let f = PresentedModule::free(r.clone(), 2);
        let rep = torsion_tor_audit(&ctx, &f, &f).unwrap();
        assert!(rep.applicable && rep.pass);
        // torsion M with a product that vanishes
        let rep =
            torsion_tor_audit(&ctx, &cyclic(&r, &["s"]), &cyclic(&r, &["s - 1", "t"])).unwrap();
        assert!(rep.applicable && rep.pass, "{:?}", rep);
        let i = ideal_module(&r);
        let rep = torsion_tor_audit(&ctx, &i, &i).unwrap();
        assert!(!rep.applicable && rep.pass && rep.conclusions.is_empty());
    }

    #[test]
    fn power_descent_examples() {
        let ctx = Ctx::default();
        let r = base(&["s", "t"]);
        let rep = power_descent_audit(&ctx, &PresentedModule::free(r.clone(), 2), 3).unwrap();
        assert!(rep.applicable && rep.pass && rep.conclusions.len() == 2);
        let rep = power_descent_audit(&ctx, &cyclic(&r, &["s"]), 2).unwrap();
        assert!(!rep.applicable);
        let rep = power_descent_audit(&ctx, &PresentedModule::free(sqrt_s(), 1), 2).unwrap();
        assert!(rep.applicable && rep.pass);
    }

    #[test]
    fn codepth_audits() {
        let ctx = Ctx::default();
        let r = base(&["s", "t"]);
        for m in [
            PresentedModule::free(r.clone(), 1),
            cyclic(&r, &["s", "t"]),
            cyclic(&r, &["s"]),
            ideal_module(&r),
            cyclic(&r, &["1"]),
        ] {
            let rep = codepth_duality_audit(&ctx, &m).unwrap();
            assert!(rep.applicable && rep.pass, "{:?}", rep);
        }
        let rep = codepth_additivity_audit(&ctx, &cyclic(&r, &["s"]), &cyclic(&r, &["t"])).unwrap();
        assert!(rep.applicable && rep.pass);
        assert_eq!(rep.conclusions[0].name, "cd(M (x) N) = 2 equals 1 + 1");
        let rep = codepth_additivity_audit(&ctx, &cyclic(&r, &["s"]), &cyclic(&r, &["s"])).unwrap();
        assert!(!rep.applicable);
    }

    #[test]
    fn koszul_audits() {
        let ctx = Ctx::default();
        let r = base(&["s", "t"]);
        let seq = vec![r.parse("s").unwrap(), r.parse("t").unwrap()];
        let rep = koszul_rigidity_audit(&ctx, &seq, &ideal_module(&r)).unwrap();
        assert!(rep.pass);
        // H_1(s, t; R/(s, t)) is the two-dimensional residue space
        let rep = koszul_finite_length_audit(&ctx, &seq, &cyclic(&r, &["s", "t"])).unwrap();
        assert!(rep.applicable && rep.pass, "{:?}", rep);
        let rep =
            koszul_finite_length_audit(&ctx, &seq, &PresentedModule::free(r.clone(), 1)).unwrap();
        assert!(!rep.applicable);
        // H_1(s; R/(s)) = R/(s) has infinite length
        let rep = koszul_finite_length_audit(&ctx, &seq[..1], &cyclic(&r, &["s"])).unwrap();
        assert_eq!(
            rep.hypotheses.iter().map(|c| c.holds).collect::<Vec<_>>(),
            vec![true, true, false]
        );
    }

    #[test]
    fn ass_points_examples() {
        let ctx = Ctx::default();
        let r = base(&["t"]);
        assert!(
            ass_points_report(&ctx, &PresentedModule::free(r.clone(), 1), 1)
                .unwrap()
                .ends_with("condition holds")
        );
        let text = ass_points_report(&ctx, &cyclic(&r, &["t"]), 1).unwrap();
        assert!(
            text.ends_with("condition fails, torsion witness (1) killed by t"),
            "{}",
            text
        );
        let r2 = base(&["s", "t"]);
        assert!(ass_points_report(&ctx, &ideal_module(&r2), 2)
            .unwrap()
            .contains("condition fails"));
        assert!(dim2_audit(&ctx, &ideal_module(&r2)).unwrap().pass);
    }
}
