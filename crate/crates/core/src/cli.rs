//! Command-line front end. Exit codes: 0 success, 1 failed verification,
//! 2 usage or precondition error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::irreps::{
    self, casimir_eigenvalue, evaluate_numeric, full_report, gram_from_definition, orthonormal_numeric, Family,
    Params, Representation,
};
use crate::scalars::{parse_scalar, FieldSpec, Scalar};
use crate::verma::{classify_weight, HighestWeight};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "sl2q", version, about = "Exact irreps of sl(2)_q: build, verify, classify")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a representation and write it as JSON.
    Build {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long = "N")]
        big_n: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<i8>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        /// Output file; JSON goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check relations, scalarity, weights and (if restricted) the css identity.
    Verify { path: PathBuf },
    /// Classify a highest weight and list its singular levels.
    Classify {
        /// `generic` or `rootN`.
        #[arg(long)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value_t = 10)]
        bound: u32,
        /// Require the restricted-algebra condition on (mu, c).
        #[arg(long)]
        restricted: bool,
    },
    /// Shapovalov form diagonal of a representation file.
    Gram { path: PathBuf },
    /// Eigenvalue of the Casimir C₂ on a representation file.
    Casimir { path: PathBuf },
    /// Numeric matrices at real q (roots of unity use e^{iπ/N}).
    Eval {
        path: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<f64>,
        #[arg(long)]
        orthonormal: bool,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_USAGE, message: message.to_string() }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Build { family, n, big_n, eps, mu, c, out: path } => cmd_build(&family, n, big_n, eps, mu, c, path, out),
        Command::Verify { path } => cmd_verify(&path, out),
        Command::Classify { field, mu, c, bound, restricted } => cmd_classify(&field, &mu, &c, bound, restricted, out),
        Command::Gram { path } => cmd_gram(&path, out),
        Command::Casimir { path } => cmd_casimir(&path, out),
        Command::Eval { path, q, orthonormal } => cmd_eval(&path, q, orthonormal, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| usage(format!("write failed: {e}")))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn parse_field(text: &str) -> Result<FieldSpec, Failure> {
    if text == "generic" {
        return Ok(FieldSpec::Generic);
    }
    let n = text
        .strip_prefix("root")
        .and_then(|n| n.parse::<u32>().ok())
        .ok_or_else(|| usage(format!("--field must be 'generic' or 'rootN', got {text:?}")))?;
    FieldSpec::root_of_unity(n).map_err(usage)
}

fn scalar_flag(name: &str, text: &str, field: FieldSpec) -> Result<Scalar, Failure> {
    parse_scalar(text, field).map_err(|e| usage(format!("--{name}: {e}")))
}

#[allow(clippy::too_many_arguments)]
fn cmd_build(
    family: &str,
    n: Option<u32>,
    big_n: Option<u32>,
    eps: Option<i8>,
    mu: Option<String>,
    c: Option<String>,
    path: Option<PathBuf>,
    out: &mut dyn Write,
) -> Outcome {
    let family: Family = family.parse().map_err(usage)?;
    if let Some(e) = eps {
        if e != 1 && e != -1 {
            return Err(usage(format!("--eps must be 1 or -1, got {e}")));
        }
    }
    let field = match big_n {
        Some(n) => FieldSpec::root_of_unity(n).map_err(usage)?,
        None => FieldSpec::Generic,
    };
    let params = Params {
        n,
        big_n,
        eps,
        mu: mu.map(|m| scalar_flag("mu", &m, field)).transpose()?,
        c: c.map(|c| scalar_flag("c", &c, field)).transpose()?,
    };
    let rep = irreps::build(family, &params, field).map_err(usage)?;
    let text = pretty(&rep.to_json());
    match path {
        Some(p) => {
            fs::write(&p, format!("{text}\n")).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))?;
            emit(out, &format!("family {} dim {} -> {}", rep.family, rep.dim(), p.display()))?;
        }
        None => emit(out, &text)?,
    }
    Ok(EXIT_OK)
}

fn load(path: &Path) -> Result<Representation, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| usage(format!("{}: invalid JSON: {e}", path.display())))?;
    Representation::from_json(&v).map_err(usage)
}

fn cmd_verify(path: &Path, out: &mut dyn Write) -> Outcome {
    let rep = load(path)?;
    let report = full_report(&rep);
    emit(out, &format!("family {} dim {} field {}", rep.family, rep.dim(), rep.field))?;
    for check in &report.checks {
        emit(out, &check.to_string())?;
    }
    let ok = report.all_passed();
    emit(out, if ok { "result: pass" } else { "result: FAIL" })?;
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_classify(field: &str, mu: &str, c: &str, bound: u32, restricted: bool, out: &mut dyn Write) -> Outcome {
    let field = parse_field(field)?;
    let hw = HighestWeight::new(scalar_flag("mu", mu, field)?, scalar_flag("c", c, field)?, restricted).map_err(usage)?;
    let report = classify_weight(&hw, bound).map_err(usage)?;
    emit(out, &pretty(&report.to_json()))?;
    Ok(EXIT_OK)
}

fn cmd_gram(path: &Path, out: &mut dyn Write) -> Outcome {
    let rep = load(path)?;
    let n = rep.dim() as u32;
    let gram = match rep.family {
        Family::LnC | Family::LnCN => irreps::gram_L_n_c(n, &rep.c_value()).map_err(usage)?,
        Family::TLnEps | Family::TLnEpsN => irreps::gram_TL_n_eps(n, rep.params.eps.unwrap_or(1), rep.field).map_err(usage)?,
        _ => {
            let hw = HighestWeight::new(rep.matrices.x0.get(0, 0).clone(), rep.c_value(), false).map_err(usage)?;
            gram_from_definition(n, &hw)
        }
    };
    emit(out, &pretty(&gram.to_json()))?;
    Ok(EXIT_OK)
}

fn cmd_casimir(path: &Path, out: &mut dyn Write) -> Outcome {
    let rep = load(path)?;
    let value = casimir_eigenvalue(&rep).map_err(|e| Failure { code: EXIT_FAIL, message: e.to_string() })?;
    emit(out, &pretty(&json!({ "C2": value.to_json(), "text": value.to_string() })))?;
    Ok(EXIT_OK)
}

fn cmd_eval(path: &Path, q: Option<f64>, orthonormal: bool, out: &mut dyn Write) -> Outcome {
    let rep = load(path)?;
    let q = match (q, rep.field) {
        (Some(q), _) => q,
        (None, FieldSpec::RootOfUnity(_)) => 0.0,
        (None, FieldSpec::Generic) => return Err(usage("--q is required for generic-q representations")),
    };
    let numeric = if orthonormal {
        if !matches!(rep.family, Family::LnC | Family::TLnEps) {
            return Err(usage(format!("--orthonormal supports LnC and TLnEps, not {}", rep.family)));
        }
        orthonormal_numeric(&rep, q).map_err(usage)?
    } else {
        evaluate_numeric(&rep, q).map_err(usage)?
    };
    let mut v = numeric.to_json();
    let (a, b) = numeric.classical_residuals();
    v["classical_residuals"] = json!([irreps::float_json(a), irreps::float_json(b)]);
    emit(out, &pretty(&v))?;
    Ok(EXIT_OK)
}
