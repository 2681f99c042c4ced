//! The ring tower `K ⊂ R ⊂ A`: a polynomial base ring and affine algebras
//! over it, stored as an ambient polynomial ring modulo an ideal.

use flatlab_core::expr::{parse_poly, parse_tuple};
use flatlab_core::{BaseOrder, Basis, Ctx, Error, Field, FreeElem, Poly, Result, TermOrder};

/// The polynomial base ring `R = K[x_1..x_m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseTower {
    field: String,
    vars: Vec<String>,
}

impl BaseTower {
    pub fn new<F: Field>(vars: Vec<String>) -> Result<Self> {
        check_distinct(&vars)?;
        Ok(BaseTower {
            field: F::descriptor(),
            vars,
        })
    }

    pub fn field(&self) -> &str {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }
}

fn check_distinct(names: &[String]) -> Result<()> {
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(Error::InvalidArgument(format!(
                "duplicate variable '{}'",
                n
            )));
        }
    }
    Ok(())
}

/// First of `stem, stem1, stem2, ...` not in `taken`.
pub fn fresh_name(stem: &str, taken: &[String]) -> String {
    if !taken.iter().any(|t| t == stem) {
        return stem.to_string();
    }
    (1..)
        .map(|k| format!("{}{}", stem, k))
        .find(|c| !taken.contains(c))
        .unwrap()
}

/// Append primes to `name` until it is not in `taken`.
pub(crate) fn primed(name: &str, taken: &[String]) -> String {
    let mut out = name.to_string();
    while taken.contains(&out) {
        out.push('\'');
    }
    out
}

/// `A = K[x, y] / I` where `x` are the base variables. The ambient ring
/// lists the base variables first, so the structure map `R -> A` is the
/// inclusion of the first `dim R` variables.
#[derive(Clone, Debug)]
pub struct AffineAlgebra<F: Field> {
    tower: BaseTower,
    names: Vec<String>,
    relations: Vec<Poly<F>>,
    gb: Basis<F>,
}

impl<F: Field> PartialEq for AffineAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.tower == other.tower && self.names == other.names && self.relations == other.relations
    }
}

impl<F: Field> Eq for AffineAlgebra<F> {}

impl<F: Field> AffineAlgebra<F> {
    /// The base ring itself.
    pub fn base(tower: BaseTower) -> Self {
        let names = tower.vars.clone();
        let n = names.len();
        let gb = Basis::of_ideal(
            &Ctx::default(),
            &[],
            n,
            TermOrder::pot(n, BaseOrder::GrevLex),
        )
        .unwrap();
        AffineAlgebra {
            tower,
            names,
            relations: Vec::new(),
            gb,
        }
    }

    /// `R[extra] / (relations)`; relations are polynomials over all
    /// variables, base variables first.
    pub fn new(
        ctx: &Ctx,
        tower: BaseTower,
        extra: Vec<String>,
        relations: Vec<Poly<F>>,
    ) -> Result<Self> {
        let mut names = tower.vars.clone();
        names.extend(extra);
        check_distinct(&names)?;
        let n = names.len();
        if let Some(p) = relations.iter().find(|p| p.nvars() != n) {
            return Err(Error::RingMismatch(format!(
                "relation in {} variables, algebra has {}",
                p.nvars(),
                n
            )));
        }
        let gb = Basis::of_ideal(ctx, &relations, n, TermOrder::pot(n, BaseOrder::GrevLex))?;
        let relations = gb.polys();
        Ok(AffineAlgebra {
            tower,
            names,
            relations,
            gb,
        })
    }

    pub fn tower(&self) -> &BaseTower {
        &self.tower
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn base_dim(&self) -> usize {
        self.tower.dim()
    }

    pub fn base_vars(&self) -> Vec<usize> {
        (0..self.base_dim()).collect()
    }

    pub fn extra_vars(&self) -> Vec<usize> {
        (self.base_dim()..self.nvars()).collect()
    }

    /// Reduced Gröbner basis (graded reverse lexicographic) of the defining ideal.
    pub fn relations(&self) -> &[Poly<F>] {
        &self.relations
    }

    /// True when the algebra is `R` itself.
    pub fn is_base(&self) -> bool {
        self.nvars() == self.base_dim() && self.relations.is_empty()
    }

    pub fn is_zero_ring(&self) -> bool {
        self.gb.is_everything()
    }

    /// Normal form modulo the defining ideal.
    pub fn reduce(&self, p: &Poly<F>) -> Poly<F> {
        if self.relations.is_empty() {
            return p.clone();
        }
        self.gb.reduce_poly(p)
    }

    pub fn reduce_elem(&self, v: &FreeElem<F>) -> FreeElem<F> {
        FreeElem(v.entries().iter().map(|p| self.reduce(p)).collect())
    }

    pub fn parse(&self, text: &str) -> Result<Poly<F>> {
        parse_poly(text, &self.names)
    }

    /// Parse a tuple `(p_1, ..., p_g)` as an element of `A^g`.
    pub fn parse_elem(&self, text: &str) -> Result<FreeElem<F>> {
        Ok(FreeElem(parse_tuple(text, &self.names)?))
    }

    pub fn var(&self, i: usize) -> Poly<F> {
        Poly::var(self.nvars(), i)
    }

    /// Adjoin an inverse of `u`: a fresh variable `z` with `z u = 1`.
    pub fn localize(&self, ctx: &Ctx, u: &Poly<F>) -> Result<Self> {
        if self.reduce(u).is_zero() {
            return Err(Error::InvalidArgument("cannot localize at zero".into()));
        }
        let n = self.nvars();
        let up: Vec<usize> = (0..n).collect();
        let z = fresh_name("z", &self.names);
        let mut rels: Vec<Poly<F>> = self.relations.iter().map(|p| p.embed(&up, n + 1)).collect();
        rels.push(&(&Poly::var(n + 1, n) * &u.embed(&up, n + 1)) - &Poly::one(n + 1));
        let mut extra = self.names[self.base_dim()..].to_vec();
        extra.push(z);
        AffineAlgebra::new(ctx, self.tower.clone(), extra, rels)
    }

    /// Same algebra with the non-base variables renamed.
    pub fn rename_extras(&self, rename: impl Fn(usize, &str) -> String) -> Result<Self> {
        let m = self.base_dim();
        let mut names = self.names[..m].to_vec();
        names.extend(
            self.names[m..]
                .iter()
                .enumerate()
                .map(|(k, s)| rename(k, s)),
        );
        check_distinct(&names)?;
        Ok(AffineAlgebra {
            names,
            ..self.clone()
        })
    }

    /// `A ⊗_R B`: shared base variables, then the extra variables of `A`,
    /// then those of `B` (primed where they clash). Returns the algebra and
    /// the variable maps from `A` and `B` into it.
    pub fn tensor_over_base(
        &self,
        ctx: &Ctx,
        other: &Self,
    ) -> Result<(Self, Vec<usize>, Vec<usize>)> {
        if self.tower != other.tower {
            return Err(Error::RingMismatch(
                "algebras over different base rings".into(),
            ));
        }
        let m = self.base_dim();
        let (na, nb) = (self.nvars(), other.nvars());
        let mut names = self.names.clone();
        for y in &other.names[m..] {
            let fresh = primed(y, &names);
            names.push(fresh);
        }
        let n = names.len();
        let map_a: Vec<usize> = (0..na).collect();
        let map_b: Vec<usize> = (0..nb)
            .map(|i| if i < m { i } else { na + i - m })
            .collect();
        let rels = self
            .relations
            .iter()
            .map(|p| p.embed(&map_a, n))
            .chain(other.relations.iter().map(|p| p.embed(&map_b, n)))
            .collect();
        let alg = AffineAlgebra::new(ctx, self.tower.clone(), names[m..].to_vec(), rels)?;
        Ok((alg, map_a, map_b))
    }

    /// `A ⊗_K B` over the doubled base `R ⊗_K R`. Variables: base of `A`,
    /// base of `B` (primed), extras of `A`, extras of `B` (primed).
    pub fn tensor_over_field(
        &self,
        ctx: &Ctx,
        other: &Self,
    ) -> Result<(Self, Vec<usize>, Vec<usize>)> {
        if self.tower.field != other.tower.field {
            return Err(Error::RingMismatch("algebras over different fields".into()));
        }
        let (ma, mb) = (self.base_dim(), other.base_dim());
        let (na, nb) = (self.nvars(), other.nvars());
        let mut names = self.names[..ma].to_vec();
        for x in &other.names[..mb] {
            let fresh = primed(x, &self.names);
            let fresh = primed(&fresh, &names);
            names.push(fresh);
        }
        names.extend(self.names[ma..].iter().cloned());
        for y in &other.names[mb..] {
            let fresh = primed(y, &names);
            names.push(fresh);
        }
        let n = names.len();
        let map_a: Vec<usize> = (0..na).map(|i| if i < ma { i } else { mb + i }).collect();
        let map_b: Vec<usize> = (0..nb)
            .map(|i| if i < mb { ma + i } else { na + i })
            .collect();
        let tower = BaseTower {
            field: self.tower.field.clone(),
            vars: names[..ma + mb].to_vec(),
        };
        let rels = self
            .relations
            .iter()
            .map(|p| p.embed(&map_a, n))
            .chain(other.relations.iter().map(|p| p.embed(&map_b, n)))
            .collect();
        let alg = AffineAlgebra::new(ctx, tower, names[ma + mb..].to_vec(), rels)?;
        Ok((alg, map_a, map_b))
    }

    /// Display helper for polynomials of this algebra.
    pub fn show(&self, p: &Poly<F>) -> String {
        p.display(&self.names).to_string()
    }

    pub fn show_elem(&self, v: &FreeElem<F>) -> String {
        v.display(&self.names).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use flatlab_core::Rational;

    fn tower() -> BaseTower {
        BaseTower::new::<Rational>(vec!["s".into(), "t".into()]).unwrap()
    }

    #[test]
    fn localization_makes_the_element_a_unit() {
        let ctx = Ctx::default();
        let r = AffineAlgebra::<Rational>::base(tower());
        let s = r.parse("s").unwrap();
        let a = r.localize(&ctx, &s).unwrap();
        assert_eq!(a.names(), &["s", "t", "z"]);
        let b = a.localize(&ctx, &a.parse("s").unwrap()).unwrap();
        assert_eq!(b.names(), &["s", "t", "z", "z1"]);
        assert!(r.localize(&ctx, &Poly::zero(2)).is_err());
    }

    #[test]
    fn tensor_names() {
        let ctx = Ctx::default();
        let r = AffineAlgebra::<Rational>::base(tower());
        let a = AffineAlgebra::new(
            &ctx,
            tower(),
            vec!["u".into()],
            vec![r.parse("s").unwrap().embed(&[0, 1], 3)],
        )
        .unwrap();
        let (c, _, mb) = a.tensor_over_base(&ctx, &a).unwrap();
        assert_eq!(c.names(), &["s", "t", "u", "u'"]);
        assert_eq!(mb, vec![0, 1, 3]);
        let (q, ma, mb) = a.tensor_over_field(&ctx, &a).unwrap();
        assert_eq!(q.names(), &["s", "t", "s'", "t'", "u", "u'"]);
        assert_eq!(q.base_dim(), 4);
        assert_eq!(ma, vec![0, 1, 4]);
        assert_eq!(mb, vec![2, 3, 5]);
    }
}
