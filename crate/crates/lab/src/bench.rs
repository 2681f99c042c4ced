//! Growth of the tensor-power construction.

use std::time::Instant;

use serde::Serialize;

use flatlab_core::{Ctx, Error, Field, Result};
use flatlab_modules::{tensor_power, PresentedModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub d: usize,
    pub generators: usize,
    pub relations: usize,
    /// S-pairs spent on the torsion test of `T^d M`.
    pub gb_pairs: u64,
    pub wall_ms: u64,
}

pub const BENCH_HEADER: &str = "d,generators,relations,gb_pairs,wall_ms";

impl BenchRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.d, self.generators, self.relations, self.gb_pairs, self.wall_ms
        )
    }
}

/// One row per `d` in `1..=dmax`: size of `T^d M` and the cost of testing it.
pub fn bench<F: Field>(ctx: &Ctx, m: &PresentedModule<F>, dmax: usize) -> Result<Vec<BenchRow>> {
    if dmax == 0 {
        return Err(Error::InvalidArgument("dmax must be positive".into()));
    }
    (1..=dmax)
        .map(|d| {
            let start = Instant::now();
            let before = ctx.stats().gb_pairs;
            let p = tensor_power(ctx, m, d)?;
            p.is_torsion_free(ctx)?;
            Ok(BenchRow {
                d,
                generators: p.gens(),
                relations: p.rels().len(),
                gb_pairs: ctx.stats().gb_pairs - before,
                wall_ms: start.elapsed().as_millis() as u64,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use flatlab_core::{FreeElem, Rational};
    use flatlab_modules::{AffineAlgebra, BaseTower};

    #[test]
    fn relation_counts() {
        let ctx = Ctx::default();
        let r: Arc<AffineAlgebra<Rational>> = Arc::new(AffineAlgebra::base(
            BaseTower::new::<Rational>(vec!["s".into(), "t".into()]).unwrap(),
        ));
        let free = bench(&ctx, &PresentedModule::free(r.clone(), 1), 3).unwrap();
        assert!(free
            .iter()
            .all(|row| row.relations == 0 && row.generators == 1));
        let m = PresentedModule::new(
            r.clone(),
            2,
            vec![FreeElem(vec![
                r.parse("t").unwrap(),
                r.parse("-s").unwrap(),
            ])],
        )
        .unwrap();
        let rows = bench(&ctx, &m, 3).unwrap();
        let shape: Vec<(usize, usize)> = rows
            .iter()
            .map(|row| (row.generators, row.relations))
            .collect();
        assert_eq!(shape, vec![(2, 1), (4, 4), (8, 12)]);
        assert_eq!(
            rows[0].csv().split(',').count(),
            BENCH_HEADER.split(',').count()
        );
    }
}
