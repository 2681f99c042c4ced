//! Flatness decisions with checkable certificates, two independent oracles,
//! and audit suites for the supporting structural statements.

pub mod audits;
pub mod bench;
pub mod certificate;
pub mod criteria;
pub mod oracles;

pub use audits::{
    ass_points_report, codepth_additivity_audit, codepth_duality_audit, codepth_via_resolution,
    dim2_audit, koszul_finite_length_audit, koszul_rigidity_audit, power_descent_audit,
    rigidity_audit, torsion_tor_audit, AuditReport, Check,
};
pub use bench::{bench, BenchRow, BENCH_HEADER};
pub use certificate::{BaseInfo, FlatnessCertificate, Method, Stats, Verdict, Witness};
pub use criteria::{dim2_criterion, main_criterion};
pub use oracles::{
    fitting_oracle, generic_rank, smith_diagonal, smith_oracle, FittingReport, SmithReport, UniPoly,
};
