//! Executing problem files: `run`, `bench` and `check-cert`.

use serde_json::{json, Value};

use flatlab_core::{BaseOrder, Ctx, Field, Fp, Poly, Rational};
use flatlab_homology::{codepth, depth_at_irrelevant, tor_diagonal_all, tor_resolution_all};
use flatlab_lab::{
    ass_points_report, bench, codepth_additivity_audit, codepth_duality_audit, dim2_audit,
    dim2_criterion, fitting_oracle, koszul_finite_length_audit, koszul_rigidity_audit,
    main_criterion, power_descent_audit, rigidity_audit, smith_oracle, torsion_tor_audit,
    AuditReport, FlatnessCertificate, BENCH_HEADER,
};
use flatlab_modules::PresentedModule;

use crate::dsl::{
    self, AuditKind, Expect, FieldDecl, OracleKind, ProblemFile, Task, DESCENT_DEFAULT,
};
use crate::error::CliError;
use crate::problem::Problem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub json: bool,
    pub order: BaseOrder,
    pub all_audits: bool,
    /// Report wall-clock times; off by default so output bytes are reproducible.
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            json: false,
            order: BaseOrder::GrevLex,
            all_audits: false,
            timing: false,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOutput {
    /// One record per task (text or JSON).
    pub lines: Vec<String>,
    /// Failed expectations and audits, for stderr.
    pub diagnostics: Vec<String>,
    pub ok: bool,
}

/// Calls `$body` with `$f` bound to the coefficient type of `$field`.
macro_rules! with_field {
    ($field:expr, $f:ident => $body:expr) => {
        match $field {
            FieldDecl::Rational => {
                type $f = Rational;
                $body
            }
            FieldDecl::Prime(2) => {
                type $f = Fp<2>;
                $body
            }
            FieldDecl::Prime(3) => {
                type $f = Fp<3>;
                $body
            }
            FieldDecl::Prime(5) => {
                type $f = Fp<5>;
                $body
            }
            FieldDecl::Prime(7) => {
                type $f = Fp<7>;
                $body
            }
            FieldDecl::Prime(32003) => {
                type $f = Fp<32003>;
                $body
            }
            FieldDecl::Prime(p) => Err(CliError::Io(format!("unsupported prime {}", p))),
        }
    };
}

pub fn run_text(text: &str, opts: &RunOptions) -> Result<RunOutput, CliError> {
    run_file(&dsl::parse(text)?, opts)
}

pub fn run_file(file: &ProblemFile, opts: &RunOptions) -> Result<RunOutput, CliError> {
    with_field!(file.field(), F => run_typed::<F>(file, opts))
}

/// Audits run by `--all-audits`: single-module audits for each module, pair
/// audits for each unordered pair including a module with itself.
pub fn all_audit_tasks(file: &ProblemFile) -> Vec<Task> {
    let names = file.module_names();
    let mut out = Vec::new();
    for m in &names {
        for kind in [
            AuditKind::Koszul,
            AuditKind::KoszulFinite,
            AuditKind::Duality,
            AuditKind::Dim2,
        ] {
            out.push(Task::Audit {
                kind,
                modules: vec![m.to_string()],
                d: None,
            });
        }
        out.push(Task::Audit {
            kind: AuditKind::Descent,
            modules: vec![m.to_string()],
            d: Some(DESCENT_DEFAULT),
        });
    }
    for (i, m) in names.iter().enumerate() {
        for n in &names[i..] {
            for kind in [
                AuditKind::Rigidity,
                AuditKind::TorsionTor,
                AuditKind::Additivity,
            ] {
                out.push(Task::Audit {
                    kind,
                    modules: vec![m.to_string(), n.to_string()],
                    d: None,
                });
            }
        }
    }
    out
}

fn run_typed<F: Field>(file: &ProblemFile, opts: &RunOptions) -> Result<RunOutput, CliError> {
    let ctx = Ctx::from_env(opts.order);
    let problem = Problem::<F>::build(&ctx, file)?;
    let mut tasks: Vec<Task> = file.tasks().cloned().collect();
    if opts.all_audits {
        tasks.extend(all_audit_tasks(file));
    }
    let mut out = RunOutput {
        ok: true,
        ..RunOutput::default()
    };
    for task in &tasks {
        ctx.reset_stats();
        let rec = match execute(&ctx, &problem, task, opts) {
            Ok(rec) => rec,
            Err(e) => Record {
                text: format!("{}: error ({}): {}", task, e.kind(), e),
                json: json!({ "task": task.to_string(), "error": e.to_json() }),
                problem: Some(format!("{}: {}", task, e)),
            },
        };
        if let Some(p) = rec.problem {
            out.ok = false;
            out.diagnostics.push(p);
        }
        out.lines.push(if opts.json {
            rec.json.to_string()
        } else {
            rec.text
        });
    }
    Ok(out)
}

struct Record {
    text: String,
    json: Value,
    /// Set when the task ran but its result counts as a failure.
    problem: Option<String>,
}

fn certificate_record(
    task: &Task,
    mut c: FlatnessCertificate,
    expect: Option<Expect>,
    opts: &RunOptions,
) -> Record {
    if !opts.timing {
        c.stats.wall_ms = 0;
    }
    let mut text = format!("{}: {} by {}", task, c.verdict, c.method);
    if c.d > 0 {
        text.push_str(&format!(" at d={}", c.d));
    }
    let w = &c.witness;
    if let (Some(e), Some(u)) = (&w.element, &w.annihilator) {
        text.push_str(&format!("; witness {} killed by {}", e, u));
    } else if let Some(h) = &w.h {
        text.push_str(&format!("; torsion-free, h = {}", h));
    }
    if let Some(d) = &w.detail {
        text.push_str(&format!("; {}", d));
    }
    let problem = match expect {
        Some(e) if e.is_flat() != c.verdict.is_flat() => {
            Some(format!("{}: expected {}, got {}", task, e, c.verdict))
        }
        _ => None,
    };
    Record {
        text,
        json: serde_json::to_value(&c).expect("certificates serialize"),
        problem,
    }
}

fn audit_record(task: &Task, r: AuditReport) -> Record {
    let status = if !r.applicable {
        "not applicable".to_string()
    } else if r.pass {
        "pass".to_string()
    } else {
        let failed: Vec<&str> = r
            .conclusions
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.name.as_str())
            .collect();
        format!("FAIL ({})", failed.join("; "))
    };
    let problem = (!r.pass).then(|| format!("{}: {}", task, status));
    let text = format!("{}: {} [{}]", task, status, r.tag);
    Record {
        text,
        json: json!({ "task": task.to_string(), "audit": r }),
        problem,
    }
}

fn base_sequence<F: Field>(m: &PresentedModule<F>) -> Vec<Poly<F>> {
    let n = m.nvars();
    m.algebra()
        .base_vars()
        .into_iter()
        .map(|i| Poly::var(n, i))
        .collect()
}

fn execute<F: Field>(
    ctx: &Ctx,
    p: &Problem<F>,
    task: &Task,
    opts: &RunOptions,
) -> Result<Record, CliError> {
    let name = task.to_string();
    Ok(match task {
        Task::Flat { module, d, expect } => certificate_record(
            task,
            main_criterion(ctx, p.module(module), *d)?,
            *expect,
            opts,
        ),
        Task::Dim2 { module, expect } => {
            certificate_record(task, dim2_criterion(ctx, p.module(module))?, *expect, opts)
        }
        Task::Oracle {
            kind: OracleKind::Smith,
            module,
            expect,
            ..
        } => certificate_record(
            task,
            smith_oracle(ctx, p.module(module))?.certificate,
            *expect,
            opts,
        ),
        Task::Oracle {
            kind: OracleKind::Fitting,
            module,
            rank,
            expect,
        } => certificate_record(
            task,
            fitting_oracle(ctx, p.module(module), *rank)?.certificate,
            *expect,
            opts,
        ),
        Task::Tor { left, right } => {
            let (m, n) = (p.module(left), p.module(right));
            let diag = tor_diagonal_all(ctx, m, n, None)?;
            let cross = if m.algebra().is_base() {
                Some(tor_resolution_all(ctx, m, n, None)?)
            } else {
                None
            };
            let agree = cross
                .as_ref()
                .map(|r| r.iter().zip(&diag).all(|(a, b)| a.is_zero == b.is_zero));
            let parts: Vec<String> = diag
                .iter()
                .map(|t| {
                    if t.is_zero {
                        format!("Tor_{} = 0", t.j)
                    } else {
                        format!("Tor_{} = [{}]", t.j, t.module.to_text())
                    }
                })
                .collect();
            let mut text = format!("{}: {}", name, parts.join(", "));
            match agree {
                Some(true) => text.push_str(" (resolution agrees)"),
                Some(false) => text.push_str(" (resolution DISAGREES)"),
                None => {}
            }
            let rows: Vec<Value> = diag
                .iter()
                .map(|t| json!({ "j": t.j, "zero": t.is_zero, "module": t.module.to_text() }))
                .collect();
            Record {
                text,
                json: json!({ "task": name, "method": "diagonal", "tor": rows, "resolution_agrees": agree }),
                problem: (agree == Some(false)).then(|| format!("{}: Tor methods disagree", name)),
            }
        }
        Task::Torsion { module } => {
            let m = p.module(module);
            let dec = m.torsion(ctx)?;
            let alg = m.algebra();
            let gens: Vec<String> = dec.torsion.iter().map(|v| alg.show_elem(v)).collect();
            let text = if dec.is_torsion_free() {
                format!("{}: torsion-free", name)
            } else {
                format!(
                    "{}: torsion generated by {}; h = {}",
                    name,
                    gens.join(", "),
                    alg.show(&dec.h)
                )
            };
            let json = json!({
                "task": name,
                "torsion_free": dec.is_torsion_free(),
                "generators": gens,
                "h": alg.show(&dec.h),
                "quotient": dec.quotient.to_text(),
            });
            Record {
                text,
                json,
                problem: None,
            }
        }
        Task::Depth { module } => {
            let m = p.module(module);
            let (depth, cd) = (depth_at_irrelevant(ctx, m)?, codepth(ctx, m)?);
            Record {
                text: format!("{}: depth {}, codepth {}", name, depth, cd),
                json: json!({ "task": name, "depth": depth.to_string(), "codepth": cd.to_string() }),
                problem: None,
            }
        }
        Task::Ass { module, d } => {
            let m = p.module(module);
            let d = d.unwrap_or(m.algebra().base_dim().max(1));
            let report = ass_points_report(ctx, m, d)?;
            Record {
                text: format!("{}: {}", name, report),
                json: json!({ "task": name, "report": report }),
                problem: None,
            }
        }
        Task::Bench { module, dmax } => {
            let rows = bench(ctx, p.module(module), *dmax)?;
            let rows: Vec<_> = rows
                .into_iter()
                .map(|mut r| {
                    if !opts.timing {
                        r.wall_ms = 0;
                    }
                    r
                })
                .collect();
            let mut text = format!("{}:\n{}", name, BENCH_HEADER);
            for r in &rows {
                text.push('\n');
                text.push_str(&r.csv());
            }
            Record {
                text,
                json: json!({ "task": name, "rows": rows }),
                problem: None,
            }
        }
        Task::Audit { kind, modules, d } => {
            let m = p.module(&modules[0]);
            let second = || p.module(&modules[1]);
            let report = match kind {
                AuditKind::Rigidity => rigidity_audit(ctx, m, second())?,
                AuditKind::TorsionTor => torsion_tor_audit(ctx, m, second())?,
                AuditKind::Additivity => codepth_additivity_audit(ctx, m, second())?,
                AuditKind::Descent => power_descent_audit(ctx, m, d.unwrap_or(DESCENT_DEFAULT))?,
                AuditKind::Duality => codepth_duality_audit(ctx, m)?,
                AuditKind::Koszul => koszul_rigidity_audit(ctx, &base_sequence(m), m)?,
                AuditKind::KoszulFinite => koszul_finite_length_audit(ctx, &base_sequence(m), m)?,
                AuditKind::Dim2 => dim2_audit(ctx, m)?,
            };
            audit_record(task, report.with_instance(modules.join(" ")))
        }
    })
}

/// CSV tables for the file's bench tasks, or for every module with
/// `dmax = 3` when the file has none.
pub fn bench_text(text: &str, order: BaseOrder) -> Result<Vec<String>, CliError> {
    let file = dsl::parse(text)?;
    with_field!(file.field(), F => bench_typed::<F>(&file, order))
}

fn bench_typed<F: Field>(file: &ProblemFile, order: BaseOrder) -> Result<Vec<String>, CliError> {
    let ctx = Ctx::from_env(order);
    let problem = Problem::<F>::build(&ctx, file)?;
    let mut jobs: Vec<(String, usize)> = file
        .tasks()
        .filter_map(|t| match t {
            Task::Bench { module, dmax } => Some((module.clone(), *dmax)),
            _ => None,
        })
        .collect();
    if jobs.is_empty() {
        jobs = file
            .module_names()
            .into_iter()
            .map(|m| (m.to_string(), dsl::BENCH_DEFAULT))
            .collect();
    }
    let mut out = Vec::new();
    for (m, dmax) in jobs {
        out.push(format!("# module {}", m));
        out.push(BENCH_HEADER.to_string());
        for row in bench(&ctx, problem.module(&m), dmax)? {
            out.push(row.csv());
        }
    }
    Ok(out)
}

/// Re-validates the torsion witness of a certificate against the module of
/// `file_text` it was issued for.
pub fn check_certificate(
    cert_text: &str,
    file_text: &str,
    order: BaseOrder,
) -> Result<bool, CliError> {
    let cert: FlatnessCertificate = serde_json::from_str(cert_text.trim())
        .map_err(|e| CliError::Certificate(format!("unreadable certificate: {}", e)))?;
    let file = dsl::parse(file_text)?;
    with_field!(file.field(), F => check_typed::<F>(&cert, &file, order))
}

fn check_typed<F: Field>(
    cert: &FlatnessCertificate,
    file: &ProblemFile,
    order: BaseOrder,
) -> Result<bool, CliError> {
    if cert.base.field != F::descriptor() {
        return Err(CliError::Certificate(format!(
            "certificate is over {}, file over {}",
            cert.base.field,
            F::descriptor()
        )));
    }
    let ctx = Ctx::from_env(order);
    let problem = Problem::<F>::build(&ctx, file)?;
    let module = problem
        .modules()
        .iter()
        .map(|(_, m)| m)
        .find(|m| {
            m.to_text() == cert.module && m.algebra().tower().vars() == cert.base.vars.as_slice()
        })
        .ok_or_else(|| {
            CliError::Certificate("no module of the file matches the certificate".into())
        })?;
    Ok(cert.recheck(&ctx, module)?)
}
