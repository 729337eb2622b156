//! The `hompbw` command line.
//!
//! Exit status 0 means success, 1 means an algebra failed its axioms or a check failed,
//! 2 means the input could not be read or parsed.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra_file::AlgebraFile;
use crate::error::Error;
use crate::hom_lie::{check_axioms, AxiomReport, HomLieAlgebra};
use crate::oracle::{direct_sum_line, full_verification, negative_control_on, OracleReport};
use crate::session::Session;
use crate::tensor::TensorElement;

#[derive(Parser, Debug)]
#[command(name = "hompbw", version, about = "Enveloping algebras and PBW normal forms of involutive Hom-Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Algebra description (JSON)
    file: PathBuf,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Product {
    /// The twisted product of the free Hom-associative algebra
    Hom,
    /// Plain concatenation of tensors
    Tensor,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Hom-Lie axioms
    Check {
        #[command(flatten)]
        common: Common,
    },
    /// Print the adapted basis X, the sign mu and the permutation sigma
    Adapt {
        #[command(flatten)]
        common: Common,
    },
    /// Normal form of an element in the enveloping algebra
    Nf {
        #[command(flatten)]
        common: Common,
        /// Element such as "h*f*e - 2*e"
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Product of two elements, reduced to normal form
    Mul {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        #[arg(long, value_enum, default_value = "hom")]
        product: Product,
    },
    /// Run the brute-force verification suite
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip the axiom gate and expect the checks to fail
        #[arg(long)]
        negative_control: bool,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Axioms(_) | Error::NotInvolution | Error::NotAutomorphism => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Runs the command line on `args` (including the program name) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return if code == 0 { 0 } else { 2 };
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

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Check { common } => cmd_check(&common, out),
        Command::Adapt { common } => cmd_adapt(&common, out),
        Command::Nf { common, expr } => cmd_nf(&common, &expr, out),
        Command::Mul { common, left, right, product } => cmd_mul(&common, &left, &right, product, out),
        Command::Verify { common, max_degree, samples, seed, negative_control } => {
            cmd_verify(&common, max_degree, samples, seed, negative_control, out)
        }
    }
}

fn cmd_check(c: &Common, out: &mut dyn Write) -> CmdResult {
    let file = AlgebraFile::read(&c.file)?;
    let (bracket, beta) = file.raw()?;
    let report = check_axioms(&bracket, &beta)?;
    if c.json {
        writeln!(out, "{}", json!({ "pass": report.all_pass(), "checks": report.checks }))?;
    } else {
        write_axioms(&report, &file.basis_names, out)?;
    }
    Ok(if report.all_pass() { 0 } else { 1 })
}

fn write_axioms(report: &AxiomReport, names: &[String], out: &mut dyn Write) -> std::io::Result<()> {
    for c in &report.checks {
        match (&c.witness, c.pass) {
            (_, true) => writeln!(out, "{}: pass", c.axiom)?,
            (Some(w), false) => {
                let named: Vec<&str> = w.iter().map(|&i| names[i].as_str()).collect();
                writeln!(out, "{}: FAIL  witness ({})", c.axiom, named.join(", "))?
            }
            (None, false) => writeln!(out, "{}: FAIL", c.axiom)?,
        }
    }
    Ok(())
}

fn cmd_adapt(c: &Common, out: &mut dyn Write) -> CmdResult {
    let s = Session::load(&c.file, false)?;
    let ab = s.ctx.adapted();
    let vectors: Vec<String> = ab
        .vectors()
        .iter()
        .map(|v| {
            let t = TensorElement::from_terms(v.iter().enumerate().map(|(i, x)| (crate::tensor::Word::letter(i), x.clone())));
            t.render(&s.file.basis_names)
        })
        .collect();
    if c.json {
        let (p, m) = ab.eigenspace_dims();
        let value = json!({
            "x": vectors,
            "mu": ab.mu().as_i8(),
            "sigma": ab.sigma(),
            "plus_dim": p,
            "minus_dim": m,
            "coordinates": ab.summary().vectors,
        });
        writeln!(out, "{value}")?;
    } else {
        let (p, m) = ab.eigenspace_dims();
        writeln!(out, "eigenspaces: dim g+ = {p}, dim g- = {m}")?;
        writeln!(out, "mu = {}", ab.mu().as_i8())?;
        for (i, v) in vectors.iter().enumerate() {
            writeln!(out, "X{i} = {v}")?;
        }
        let sigma: Vec<String> = ab.sigma().iter().map(ToString::to_string).collect();
        writeln!(out, "sigma = [{}]", sigma.join(", "))?;
    }
    Ok(0)
}

fn print_element(s: &Session, c: &Common, input: &str, result: &TensorElement, out: &mut dyn Write) -> CmdResult {
    if c.json {
        let value = json!({
            "input": input,
            "normal_form": s.render(result),
            "names": s.names(),
            "original_coordinates": s.render_original(result)?,
        });
        writeln!(out, "{value}")?;
    } else {
        writeln!(out, "{}", s.render(result))?;
    }
    Ok(0)
}

fn cmd_nf(c: &Common, expr: &str, out: &mut dyn Write) -> CmdResult {
    let s = Session::load(&c.file, false)?;
    let nf = s.normal_form(expr)?;
    print_element(&s, c, expr, &nf, out)
}

fn cmd_mul(c: &Common, left: &str, right: &str, product: Product, out: &mut dyn Write) -> CmdResult {
    let s = Session::load(&c.file, false)?;
    let nf = s.multiply(left, right, product == Product::Hom)?;
    print_element(&s, c, &format!("({left}) . ({right})"), &nf, out)
}

fn report_line(r: &OracleReport) -> String {
    let status = if r.pass { "PASS" } else { "FAIL" };
    let detail = match r.check.as_str() {
        "direct-sum" => direct_sum_line(r),
        "phi-conjugation" | "parameter-consistency" => {
            let top = r.parameters.get("max_degree").and_then(|v| v.as_u64()).unwrap_or(0);
            let ranks: Vec<String> =
                r.ranks.iter().filter(|(k, _)| k.ends_with(&format!("_deg{top}"))).map(|(k, v)| format!("rank {k}={v}")).collect();
            let counts = r.counts.iter().map(|(k, v)| format!("{k}={v}"));
            counts.chain(ranks).collect::<Vec<_>>().join(" ")
        }
        _ => r.counts.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" "),
    };
    format!("{:<22} {status}  {detail}", r.check)
}

fn cmd_verify(c: &Common, max_degree: usize, samples: usize, seed: u64, negative: bool, out: &mut dyn Write) -> CmdResult {
    if max_degree < 2 {
        return Err(Failure { code: 2, message: "--max-degree must be at least 2".into() });
    }
    let s = Session::load(&c.file, negative)?;
    let g: &HomLieAlgebra = s.ctx.algebra();
    let axioms = g.check_axioms();
    let mut reports = Vec::new();
    if negative {
        let (_, parts) = negative_control_on(&s.file.build_unchecked()?, max_degree.min(3))?;
        reports.extend(parts);
    }
    reports.extend(full_verification(&s.ctx, max_degree, samples, seed)?);
    let pass = reports.iter().all(|r| r.pass);
    if c.json {
        let value = json!({
            "pass": pass,
            "negative_control": negative,
            "axioms": { "pass": axioms.all_pass(), "checks": axioms.checks },
            "adapted": s.ctx.adapted().summary(),
            "reports": reports,
        });
        writeln!(out, "{value}")?;
    } else {
        if negative {
            write_axioms(&axioms, &s.file.basis_names, out)?;
        }
        for r in &reports {
            writeln!(out, "{}", report_line(r))?;
        }
        if let Some(w) = reports.iter().find(|r| !r.pass).and_then(|r| r.witnesses.first()) {
            writeln!(out, "first failure: {w}")?;
        }
        writeln!(out, "{}", if pass { "all checks passed" } else { "verification failed" })?;
    }
    Ok(if pass { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture(name: &str) -> String {
        format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
    }

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("hompbw").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn nf_on_sl2() {
        let (code, out, _) = run_str(&["nf", &fixture("sl2.json"), "f*e"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "e⊗f - h");
        let (_, out, _) = run_str(&["nf", &fixture("sl2.json"), "h*f*e"]);
        assert_eq!(out.trim(), "e⊗h⊗f + 2*e⊗f - h⊗h");
        let (_, out, _) = run_str(&["nf", &fixture("sl2.json"), "e*f - f*e - h"]);
        assert_eq!(out.trim(), "0");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["check", &fixture("sl2.json")]).0, 0);
        assert_eq!(run_str(&["check", &fixture("corrupted_sl2.json")]).0, 1);
        assert_eq!(run_str(&["check", &fixture("malformed.json")]).0, 2);
        assert_eq!(run_str(&["nf", &fixture("sl2.json"), "q*e"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn x_names_round_trip() {
        let (code, out, _) = run_str(&["nf", &fixture("twisted_sl2.json"), "f*e*h"]);
        assert_eq!(code, 0);
        let printed = out.trim().to_string();
        let (_, again, _) = run_str(&["nf", &fixture("twisted_sl2.json"), &printed]);
        assert_eq!(again.trim(), printed);
    }
}
