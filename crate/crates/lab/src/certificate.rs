//! Flatness certificates and their re-validation.

use std::fmt;

use serde::{Deserialize, Serialize};

use flatlab_core::{Ctx, Error, Field, GbStats, Result};
use flatlab_modules::{tensor_power, PresentedModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Flat,
    NotFlat,
    #[serde(rename = "OracleOnly-Flat")]
    OracleFlat,
    #[serde(rename = "OracleOnly-NotFlat")]
    OracleNotFlat,
}

impl Verdict {
    /// The flatness claim, whichever procedure made it.
    pub fn is_flat(self) -> bool {
        matches!(self, Verdict::Flat | Verdict::OracleFlat)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    MainCriterion,
    Dim2,
    Smith,
    Fitting,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Flat => "Flat",
            Verdict::NotFlat => "NotFlat",
            Verdict::OracleFlat => "OracleOnly-Flat",
            Verdict::OracleNotFlat => "OracleOnly-NotFlat",
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::MainCriterion => "main-criterion",
            Method::Dim2 => "dim2",
            Method::Smith => "smith",
            Method::Fitting => "fitting",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseInfo {
    pub field: String,
    pub vars: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Torsion element of the tested power, in that power's variables.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    /// Nonzero base polynomial killing `element`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub annihilator: Option<String>,
    /// Saturation certificate for a vanishing torsion report.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    /// Oracle evidence: invariant factors or the Fitting rank.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub gb_pairs: u64,
    pub max_poly_terms: usize,
    pub wall_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatnessCertificate {
    pub verdict: Verdict,
    pub method: Method,
    pub d: usize,
    pub base: BaseInfo,
    pub witness: Witness,
    pub stats: Stats,
    /// Canonical text of the tested module.
    pub module: String,
}

/// Measures one pipeline run: wall time and the Gröbner counters it added.
pub(crate) struct Meter {
    start: std::time::Instant,
    before: GbStats,
}

impl Meter {
    pub fn start(ctx: &Ctx) -> Self {
        Meter {
            start: std::time::Instant::now(),
            before: ctx.stats(),
        }
    }

    pub fn finish(&self, ctx: &Ctx) -> Stats {
        let after = ctx.stats();
        Stats {
            gb_pairs: after.gb_pairs - self.before.gb_pairs,
            max_poly_terms: after.max_poly_terms,
            wall_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

pub(crate) fn base_info<F: Field>(m: &PresentedModule<F>) -> BaseInfo {
    let tower = m.algebra().tower();
    BaseInfo {
        field: tower.field().to_string(),
        vars: tower.vars().to_vec(),
    }
}

impl FlatnessCertificate {
    /// Re-checks a torsion witness on `T^d M` with two normal forms: the
    /// element is nonzero and the annihilator kills it. Certificates without
    /// a witness are rejected.
    pub fn recheck<F: Field>(&self, ctx: &Ctx, m: &PresentedModule<F>) -> Result<bool> {
        let (Some(elem), Some(ann)) = (&self.witness.element, &self.witness.annihilator) else {
            return Err(Error::InvalidArgument(
                "certificate carries no torsion witness".into(),
            ));
        };
        if m.to_text() != self.module {
            return Err(Error::InvalidArgument(
                "certificate was issued for a different module".into(),
            ));
        }
        let power = tensor_power(ctx, m, self.d)?;
        let alg = power.algebra();
        let v = alg.parse_elem(elem)?;
        let u = alg.parse(ann)?;
        if v.rank() != power.gens() {
            return Err(Error::RankMismatch {
                expected: power.gens(),
                found: v.rank(),
            });
        }
        if u.is_zero() || !u.only_involves(&alg.base_vars()) {
            return Ok(false);
        }
        let basis = power.basis(ctx)?;
        let nonzero = !basis.reduce(&v).is_zero();
        let killed = basis.reduce(&v.mul_poly(&u)).is_zero();
        Ok(nonzero && killed)
    }
}
