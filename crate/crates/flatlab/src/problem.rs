//! Turning a parsed file into algebras and modules over a concrete field.

use std::sync::Arc;

use flatlab_core::expr::parse_poly;
use flatlab_core::{Ctx, Field, FreeElem, Result};
use flatlab_modules::{AffineAlgebra, BaseTower, PresentedModule};

use crate::dsl::{ProblemFile, Statement};

pub struct Problem<F: Field> {
    rings: Vec<(String, Arc<AffineAlgebra<F>>)>,
    modules: Vec<(String, PresentedModule<F>)>,
}

impl<F: Field> Problem<F> {
    pub fn build(ctx: &Ctx, file: &ProblemFile) -> Result<Self> {
        let mut rings: Vec<(String, Arc<AffineAlgebra<F>>)> = Vec::new();
        let mut modules = Vec::new();
        let ring = |rings: &[(String, Arc<AffineAlgebra<F>>)], name: &str| {
            rings
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, a)| a.clone())
                .expect("names are resolved by the parser")
        };
        for st in &file.statements {
            match st {
                Statement::Field(_) | Statement::Task(_) => {}
                Statement::Base { name, vars } => {
                    let r = Arc::new(AffineAlgebra::base(BaseTower::new::<F>(vars.clone())?));
                    rings.push((name.clone(), r));
                }
                Statement::Algebra {
                    name,
                    base: b,
                    extra,
                    relations,
                } => {
                    let r = ring(&rings, b);
                    let mut names = r.names().to_vec();
                    names.extend(extra.iter().cloned());
                    let rels = relations
                        .iter()
                        .map(|p| parse_poly(p, &names))
                        .collect::<Result<Vec<_>>>()?;
                    let a = AffineAlgebra::new(ctx, r.tower().clone(), extra.clone(), rels)?;
                    rings.push((name.clone(), Arc::new(a)));
                }
                Statement::Localize { algebra, element } => {
                    let a = ring(&rings, algebra);
                    let local = a.localize(ctx, &a.parse(element)?)?;
                    let slot = rings.iter_mut().find(|(n, _)| n == algebra).unwrap();
                    slot.1 = Arc::new(local);
                }
                Statement::Module {
                    name,
                    ring: r,
                    gens,
                    rels,
                } => {
                    let a = ring(&rings, r);
                    let cols = rels
                        .iter()
                        .map(|c| {
                            Ok(FreeElem(
                                c.iter().map(|p| a.parse(p)).collect::<Result<Vec<_>>>()?,
                            ))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    modules.push((name.clone(), PresentedModule::new(a, *gens, cols)?));
                }
            }
        }
        Ok(Problem { rings, modules })
    }

    pub fn module(&self, name: &str) -> &PresentedModule<F> {
        &self
            .modules
            .iter()
            .find(|(n, _)| n == name)
            .expect("names are resolved by the parser")
            .1
    }

    pub fn modules(&self) -> &[(String, PresentedModule<F>)] {
        &self.modules
    }

    pub fn ring(&self, name: &str) -> Option<&Arc<AffineAlgebra<F>>> {
        self.rings.iter().find(|(n, _)| n == name).map(|(_, a)| a)
    }
}
