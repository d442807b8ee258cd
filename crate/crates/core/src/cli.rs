//! Command-line front end. `run` does all the work and returns the exit code
//! together with the text to print, so it can be driven from tests.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::arith::FieldElement;
use crate::coxeter::{parse_coxeter_spec, CoxeterSystem};
use crate::geom::{self, RepMatrix};
use crate::linalg::{Matrix, Vector};
use crate::tits::{self, FormError};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Parser)]
#[command(name = "coxeter", version, about = "Exact Tits-form analysis of Coxeter systems")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Longest word length to enumerate.
    #[arg(long = "max-length", global = true, default_value_t = 8)]
    pub max_len: usize,
    /// Upper bound on the number of distinct elements enumerated.
    #[arg(long, global = true, default_value_t = geom::DEFAULT_CAP)]
    pub cap: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of random chamber points to test.
    #[arg(long = "samples", global = true, default_value_t = 32)]
    pub sample_count: usize,
    /// Digits after the decimal point in rendered values.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
    pub precision: u32,
    /// Integer base-change matrix for `repr`; its columns are the new basis.
    #[arg(long, global = true)]
    pub basis: Option<PathBuf>,
    /// Worker threads for enumeration; 0 uses the default pool.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Tits form, signature, classification and irreducibility.
    Classify { input: PathBuf },
    /// Generator matrices of the geometric representation.
    Repr { input: PathBuf },
    /// Group elements by word length.
    Enumerate { input: PathBuf },
    /// Chamber point, sampled chamber points and the hyperbolic-lattice checks.
    Chamber { input: PathBuf },
    /// Reproduce the worked right-angled example and the triangle lemma.
    VerifyPaper,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: String) -> Self {
        Self { code: EXIT_USAGE, stdout: String::new(), stderr: msg }
    }
}

fn element_json(e: &FieldElement, precision: u32) -> Value {
    json!({
        "level": e.field().level(),
        "coeffs": e.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "decimal": e.to_decimal(precision as usize),
    })
}

fn matrix_json(m: &Matrix, precision: u32) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|e| element_json(e, precision)).collect()))
            .collect(),
    )
}

fn vector_json(v: &Vector, precision: u32) -> Value {
    Value::Array(v.coords().iter().map(|e| element_json(e, precision)).collect())
}

fn to_json_line(v: &Value) -> String {
    serde_json::to_string(v).expect("json values serialize")
}

fn read_system(path: &PathBuf) -> Result<CoxeterSystem, RunOutcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| RunOutcome::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_coxeter_spec(&text).map_err(|e| RunOutcome::usage(format!("{}: {e}", path.display())))
}

/// Whitespace-separated integer rows; `#` starts a comment.
pub fn parse_basis(text: &str) -> Result<Vec<Vec<i64>>, String> {
    let mut rows = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let row = body
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|_| format!("line {}: expected an integer, found {t:?}", n + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows.len()) {
        return Err("base-change matrix must be square and non-empty".into());
    }
    Ok(rows)
}

pub fn run(config: &RunConfig) -> RunOutcome {
    let result = match &config.command {
        Command::Classify { input } => read_system(input).map(|s| classify(config, &s)),
        Command::Repr { input } => read_system(input).and_then(|s| repr(config, &s)),
        Command::Enumerate { input } => read_system(input).map(|s| enumerate(config, &s)),
        Command::Chamber { input } => read_system(input).map(|s| chamber(config, &s)),
        Command::VerifyPaper => Ok(verify_paper(config)),
    };
    result.unwrap_or_else(|e| e)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                RunOutcome::ok(rendered)
            } else {
                RunOutcome::usage(rendered)
            }
        }
    }
}

fn classify(config: &RunConfig, sys: &CoxeterSystem) -> RunOutcome {
    let form = tits::build_tits_form(sys);
    let sig = tits::signature(&form);
    let class = tits::Classification::from_signature(sig);
    let irreducible = sys.is_irreducible();
    if config.json {
        let v = json!({
            "system": sys,
            "irreducible": irreducible,
            "field_level": sys.field_level(),
            "tits_form": matrix_json(form.matrix(), config.precision),
            "signature": sig,
            "classification": class,
        });
        return RunOutcome::ok(to_json_line(&v) + "\n");
    }
    let mut out = String::new();
    let field = match sys.field_level() {
        1 | 2 => "Q".to_string(),
        l => format!("Q(2cos(pi/{l}))"),
    };
    let _ = writeln!(out, "rank {}, field {field}", sys.rank());
    let _ = writeln!(out, "irreducible: {irreducible}");
    let _ = writeln!(out, "Tits form:\n{form}");
    let _ = writeln!(out, "signature (p, q, z): {sig}");
    let _ = writeln!(out, "classification: {class}");
    RunOutcome::ok(out)
}

fn repr(config: &RunConfig, sys: &CoxeterSystem) -> Result<RunOutcome, RunOutcome> {
    let form = tits::build_tits_form(sys);
    let gens = geom::generators(sys);
    let relations = geom::verify_relations(sys, 64);

    let basis = match &config.basis {
        None => None,
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| RunOutcome::usage(format!("cannot read {}: {e}", path.display())))?;
            let rows = parse_basis(&text).map_err(|e| RunOutcome::usage(format!("{}: {e}", path.display())))?;
            let p = Matrix::from_i64(form.field(), &rows);
            let new_form = geom::change_basis_form(&form, &p).map_err(|e| RunOutcome::usage(e.to_string()))?;
            let new_gens = gens
                .iter()
                .map(|g| geom::change_basis_rep(&RepMatrix::new(g.clone()), &p).map(|r| r.matrix))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| RunOutcome::usage(e.to_string()))?;
            Some((p, new_form, new_gens))
        }
    };

    let code = if relations.pass { EXIT_OK } else { EXIT_CHECK_FAILED };
    let stdout = if config.json {
        let mut v = json!({
            "system": sys,
            "field_level": sys.field_level(),
            "tits_form": matrix_json(form.matrix(), config.precision),
            "generators": gens.iter().map(|g| matrix_json(g, config.precision)).collect::<Vec<_>>(),
            "relations": relations,
        });
        if let Some((p, new_form, new_gens)) = &basis {
            v["basis"] = json!({
                "matrix": matrix_json(p, config.precision),
                "tits_form": matrix_json(new_form.matrix(), config.precision),
                "generators": new_gens.iter().map(|g| matrix_json(g, config.precision)).collect::<Vec<_>>(),
            });
        }
        to_json_line(&v) + "\n"
    } else {
        let mut out = String::new();
        for (i, g) in gens.iter().enumerate() {
            let _ = writeln!(out, "sigma_{}:\n{g}", i + 1);
        }
        let _ = writeln!(out, "relations: {}", if relations.pass { "hold" } else { "FAIL" });
        if let Some((p, new_form, new_gens)) = &basis {
            let _ = writeln!(out, "\nnew basis (columns):\n{p}");
            let _ = writeln!(out, "Tits form in the new basis:\n{new_form}");
            for (i, g) in new_gens.iter().enumerate() {
                let _ = writeln!(out, "sigma_{} in the new basis:\n{g}", i + 1);
            }
        }
        out
    };
    Ok(RunOutcome { code, stdout, stderr: String::new() })
}

fn enumerate(config: &RunConfig, sys: &CoxeterSystem) -> RunOutcome {
    let table = if config.workers > 0 {
        geom::enumerate_elements_with_workers(sys, config.max_len, config.cap, config.workers)
    } else {
        geom::enumerate_elements(sys, config.max_len, config.cap)
    };
    let growth = table.growth();
    let mut out = String::new();
    if config.json {
        for r in &table.records {
            let word: Vec<usize> = r.word.iter().map(|g| g + 1).collect();
            let line = json!({"len": r.length(), "word": word, "matrix": matrix_json(&r.matrix, config.precision)});
            out.push_str(&to_json_line(&line));
            out.push('\n');
        }
        let summary = json!({
            "system": sys,
            "elements_by_length": growth,
            "total": table.len(),
            "max_length": table.max_len,
            "cap_reached": table.cap_reached,
            "closed": table.closed,
        });
        out.push_str(&to_json_line(&summary));
        out.push('\n');
    } else {
        let _ = writeln!(out, "{} elements up to length {}", table.len(), table.max_len);
        for (k, n) in growth.iter().enumerate() {
            let _ = writeln!(out, "  length {k:>3}: {n}");
        }
        if table.closed {
            let _ = writeln!(out, "enumeration closed: the group is finite of order {}", table.len());
        }
        if table.cap_reached {
            let _ = writeln!(out, "stopped at the cap of {} elements", config.cap);
        }
    }
    RunOutcome::ok(out)
}

fn chamber(config: &RunConfig, sys: &CoxeterSystem) -> RunOutcome {
    let form = tits::build_tits_form(sys);
    let v0 = match tits::canonical_chamber_point(&form) {
        Ok(v) => v,
        Err(e) => {
            let msg = format!("chamber analysis needs a non-degenerate form: {e}");
            let stdout = if config.json {
                to_json_line(&json!({"system": sys, "chamber": {"error": msg}})) + "\n"
            } else {
                String::new()
            };
            return RunOutcome { code: EXIT_CHECK_FAILED, stdout, stderr: msg };
        }
    };
    let norm = form.eval(&v0, &v0);
    let in_chamber = tits::chamber_contains(&form, &v0);
    let samples = tits::sample_chamber_points(&form, config.seed, config.sample_count).expect("form is invertible");
    let all_inside = samples.iter().all(|v| tits::chamber_contains(&form, v));
    let negatives = samples.iter().filter(|v| form.eval(v, v).sign() == crate::Sign::Negative).count();
    let theorem3 = tits::theorem3_check(sys, config.sample_count, config.seed);

    let (theorem3_json, theorem3_ok, theorem3_text) = match &theorem3 {
        Ok(r) => (
            json!({
                "status": if r.pass { "pass" } else { "fail" },
                "signature": r.signature,
                "expected_signature": r.expected_signature,
                "route": r.route,
                "canonical_norm": element_json(&r.canonical.norm, config.precision),
                "samples_negative": r.samples_ok,
                "note": r.note,
            }),
            r.pass,
            format!("{} (signature {}, expected {})", if r.pass { "pass" } else { "FAIL" }, r.signature, r.expected_signature),
        ),
        Err(FormError::PreconditionUnmet(why)) => {
            (json!({"status": "precondition_unmet", "reason": why}), true, format!("not applicable: {why}"))
        }
        Err(e) => (json!({"status": "error", "reason": e.to_string()}), false, e.to_string()),
    };
    let pass = in_chamber && all_inside && theorem3_ok;

    let stdout = if config.json {
        let v = json!({
            "system": sys,
            "field_level": sys.field_level(),
            "chamber": {
                "canonical_point": vector_json(&v0, config.precision),
                "canonical_norm": element_json(&norm, config.precision),
                "canonical_in_chamber": in_chamber,
                "seed": config.seed,
                "samples": samples.len(),
                "samples_in_chamber": all_inside,
                "samples_negative_norm": negatives,
                "theorem3": theorem3_json,
            },
        });
        to_json_line(&v) + "\n"
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "canonical chamber point v0 = {v0}");
        let _ = writeln!(out, "B(v0, v0) = {norm} ~ {}", norm.to_decimal(config.precision as usize));
        let _ = writeln!(out, "v0 in chamber: {in_chamber}");
        let _ = writeln!(
            out,
            "{} samples (seed {}): all in chamber: {all_inside}, B(v,v) < 0 for {negatives}",
            samples.len(),
            config.seed
        );
        let _ = writeln!(out, "hyperbolic-lattice consequences: {theorem3_text}");
        out
    };
    RunOutcome { code: if pass { EXIT_OK } else { EXIT_CHECK_FAILED }, stdout, stderr: String::new() }
}

fn verify_paper(config: &RunConfig) -> RunOutcome {
    let report = verify::verify_section4_all();
    let code = if report.overall { EXIT_OK } else { EXIT_CHECK_FAILED };
    let stdout = if config.json {
        to_json_line(&json!({"checks": report.checks, "overall": report.overall, "notes": report.notes})) + "\n"
    } else {
        let mut out = String::new();
        for c in &report.checks {
            let _ = writeln!(out, "[{}] {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
            if !c.pass {
                let _ = writeln!(out, "       expected {}\n       computed {}", c.expected, c.computed);
            }
        }
        for n in &report.notes {
            let _ = writeln!(out, "note: {n}");
        }
        let _ = writeln!(out, "{}/{} checks passed", report.passed(), report.checks.len());
        out
    };
    RunOutcome { code, stdout, stderr: String::new() }
}
