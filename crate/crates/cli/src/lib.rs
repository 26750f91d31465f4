//! Command-line front end for `grassmann-gl`.
//!
//! [`run`] parses the arguments, performs one job and reports an exit code:
//! 0 on success, 1 for a domain or I/O error, 2 for malformed input and 3
//! when `verify` finds a counterexample.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use grassmann_gl::partitions::Partition;
use grassmann_gl::schubert_ops::{
    act_elementary, act_matrix, action_first_form, action_second_form, gamma, gamma_star,
    GammaVariant, GlMatrix,
};
use grassmann_gl::symfunc::{parse_element, project, project_series, straighten};
use grassmann_gl::verify::{self, SuiteReport, VerifyConfig, SUITES};
use grassmann_gl::{Error, HSequence, LaurentWindow, RingElement, SchurExpansion};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

/// How many counterexamples a failing `verify` lists.
const SHOWN_FAILURES: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "grassmann-gl", version, about = "gl_n action on Grassmannian cohomology")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply an elementary matrix E_ij to an element of B_r or B_{r,n}.
    Act(ActArgs),
    /// Expand the generating function E(z,w) on a Schur element.
    Series(SeriesArgs),
    /// Apply the vertex operator Γ_r(z) or its dual Γ*_r(w).
    Gamma(GammaArgs),
    /// Apply a sparse integer matrix read from a JSON file.
    MatrixAct(MatrixArgs),
    /// Write a polynomial in h's and e's in the Schur basis.
    Straighten(ElementArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct ElementArgs {
    /// Number of e-generators.
    #[arg(long)]
    pub r: usize,
    /// Box bound; work in B_{r,n} instead of B_r.
    #[arg(long)]
    pub n: Option<usize>,
    /// A single Schur basis element, e.g. `2,1`.
    #[arg(long, conflicts_with = "expr")]
    pub schur: Option<String>,
    /// A polynomial such as `h1*h3 - h4` or `e1^2 - 2*e2`.
    #[arg(long)]
    pub expr: Option<String>,
}

#[derive(Args, Debug)]
pub struct ActArgs {
    #[command(flatten)]
    pub element: ElementArgs,
    #[arg(long)]
    pub i: usize,
    #[arg(long)]
    pub j: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesForm {
    First,
    Second,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub element: ElementArgs,
    #[arg(long, value_enum, default_value_t = SeriesForm::First)]
    pub form: SeriesForm,
    /// Largest certified power of z (default n-1, or 6 without n).
    #[arg(long)]
    pub z_max: Option<i64>,
    /// Most negative certified power of w for the second form (default -z_max).
    #[arg(long, allow_hyphen_values = true)]
    pub w_min: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Barred,
    Unbarred,
}

#[derive(Args, Debug)]
pub struct GammaArgs {
    #[command(flatten)]
    pub element: ElementArgs,
    /// Largest certified power of z.
    #[arg(long, default_value_t = 6)]
    pub z_max: i64,
    #[arg(long, value_enum, default_value_t = VariantArg::Barred)]
    pub variant: VariantArg,
    /// Apply Γ*_r(w) instead.
    #[arg(long)]
    pub star: bool,
}

#[derive(Args, Debug)]
pub struct MatrixArgs {
    #[command(flatten)]
    pub element: ElementArgs,
    /// JSON file `{"n": .., "entries": [{"i": .., "j": .., "a": ".."}]}`; `-` reads stdin.
    #[arg(long)]
    pub matrix: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = VerifyConfig::default().max_r)]
    pub max_r: usize,
    #[arg(long, default_value_t = VerifyConfig::default().max_n)]
    pub max_n: usize,
    #[arg(long, default_value_t = VerifyConfig::default().max_deg)]
    pub max_deg: usize,
    #[arg(long, default_value_t = VerifyConfig::default().max_index)]
    pub max_index: usize,
    #[arg(long, default_value_t = VerifyConfig::default().seed)]
    pub seed: u64,
    #[arg(long, default_value_t = VerifyConfig::default().lie_samples)]
    pub lie_samples: usize,
    /// Run only the named suites (repeatable).
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
    pub suite: Vec<String>,
}

/// An element of `B_r` or `B_{r,n}` in every form the CLI prints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementOutput {
    pub schur: SchurExpansion,
    /// Box representative in `h_1..h_{n-r}`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_form: Option<RingElement>,
    pub e_form: RingElement,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteOutput {
    pub name: String,
    pub checks: usize,
    pub failed: usize,
    pub counterexamples: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub passed: bool,
    pub suites: Vec<SuiteOutput>,
}

enum Failure {
    Domain(String),
    Parse(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Parse(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(format!("i/o error: {e}"))
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs one command line. `args` includes the program name.
pub fn run<I, T>(args: I, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(&cli, input, out) {
        Ok(code) => code,
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_DOMAIN
        }
        Err(Failure::Parse(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_PARSE
        }
    }
}

fn dispatch(cli: &Cli, input: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Act(a) => {
            let (x, h) = element(&a.element)?;
            let y = act_elementary(a.i, a.j, &x, &h)?;
            emit_element(f, &y, &h, out)
        }
        Command::Straighten(a) => {
            let (x, h) = element(a)?;
            emit_element(f, &x, &h, out)
        }
        Command::MatrixAct(a) => {
            let text = if a.matrix == "-" {
                let mut s = String::new();
                input.read_to_string(&mut s)?;
                s
            } else {
                std::fs::read_to_string(&a.matrix)
                    .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", a.matrix)))?
            };
            let m: GlMatrix = serde_json::from_str(&text)
                .map_err(|e| Failure::Parse(format!("matrix file: {e}")))?;
            let (x, h) = element(&a.element)?;
            let y = act_matrix(&m, &x, &h)?;
            emit_element(f, &y, &h, out)
        }
        Command::Series(a) => {
            let (x, h) = element(&a.element)?;
            let n = a.element.n;
            let z_max = a.z_max.unwrap_or(match n {
                Some(n) => n as i64 - 1,
                None => 6,
            });
            let w_min = a.w_min.unwrap_or(-z_max);
            let mut total = LaurentWindow::polynomial(x.rank(), []);
            for (lambda, c) in x.terms() {
                let s = match a.form {
                    SeriesForm::First => action_first_form(lambda, &h, z_max)?,
                    SeriesForm::Second => action_second_form(lambda, &h, z_max, w_min)?,
                };
                total = total.add(&s.scale(&RingElement::constant(x.rank(), c.clone())));
            }
            if x.is_empty() {
                total = total.truncate(Some(z_max), None)?;
            }
            if let Some(n) = n {
                total = project_series(&total, n, &h)?;
            }
            emit_series(f, &total, out)
        }
        Command::Gamma(a) => {
            let (x, _) = element(&a.element)?;
            let r = x.rank();
            let s = if a.star {
                if r == 0 {
                    return Err(Failure::Domain("Γ* needs r >= 1".into()));
                }
                gamma_star(&x, &HSequence::new(r - 1))?
            } else {
                let variant = match a.variant {
                    VariantArg::Barred => GammaVariant::Barred,
                    VariantArg::Unbarred => GammaVariant::Unbarred,
                };
                gamma(&x, &HSequence::new(r + 1), a.z_max, variant)?
            };
            emit_series(f, &s, out)
        }
        Command::Verify(a) => run_verify(f, a, out),
    }
}

/// Reads the element named by `--schur` or `--expr`, projected to the box
/// when `--n` is given.
fn element(a: &ElementArgs) -> std::result::Result<(SchurExpansion, HSequence), Failure> {
    let h = HSequence::new(a.r);
    if let Some(n) = a.n {
        if n < a.r {
            return Err(Failure::Domain(format!("n = {n} is smaller than r = {}", a.r)));
        }
    }
    let x = match (&a.schur, &a.expr) {
        (Some(s), None) => {
            let lambda: Partition = s.parse()?;
            SchurExpansion::basis(a.r, a.n, lambda)?
        }
        (None, Some(e)) => {
            let s = straighten(&parse_element(e, &h)?, &h)?;
            match a.n {
                Some(n) => project(&s, n)?,
                None => s,
            }
        }
        _ => return Err(Failure::Parse("give exactly one of --schur or --expr".into())),
    };
    Ok((x, h))
}

fn element_output(x: &SchurExpansion, h: &HSequence) -> std::result::Result<ElementOutput, Failure> {
    Ok(match x.bound() {
        Some(_) => ElementOutput {
            schur: x.clone(),
            h_form: Some(x.box_h_form()?),
            e_form: x.box_e_form(h)?,
        },
        None => ElementOutput {
            schur: x.clone(),
            h_form: None,
            e_form: x.to_ring(h)?,
        },
    })
}

fn emit_element(f: Format, x: &SchurExpansion, h: &HSequence, out: &mut dyn Write) -> Outcome {
    let o = element_output(x, h)?;
    match f {
        Format::Text => {
            if let Some(hf) = &o.h_form {
                writeln!(out, "h-form: {}", hf.display_with("h"))?;
            }
            writeln!(out, "e-form: {}", o.e_form)?;
            writeln!(out, "schur:  {}", o.schur)?;
        }
        Format::Json => writeln!(out, "{}", to_json(&o)?)?,
        Format::Latex => {
            let mut parts = vec![o.schur.to_latex()];
            if let Some(hf) = &o.h_form {
                parts.push(hf.to_latex("h"));
            }
            parts.push(o.e_form.to_latex("e"));
            writeln!(out, "{}", parts.join(" = "))?;
        }
    }
    Ok(EXIT_OK)
}

fn emit_series(f: Format, s: &LaurentWindow, out: &mut dyn Write) -> Outcome {
    match f {
        Format::Text => {
            writeln!(out, "window: {}", s.window())?;
            writeln!(out, "{s}")?;
        }
        Format::Json => writeln!(out, "{}", to_json(s)?)?,
        Format::Latex => writeln!(out, "{}", s.to_latex("e"))?,
    }
    Ok(EXIT_OK)
}

fn to_json<T: Serialize>(v: &T) -> std::result::Result<String, Failure> {
    serde_json::to_string_pretty(v).map_err(|e| Failure::Domain(format!("json: {e}")))
}

fn run_verify(f: Format, a: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let cfg = VerifyConfig {
        max_r: a.max_r,
        max_n: a.max_n,
        max_deg: a.max_deg,
        max_index: a.max_index,
        seed: a.seed,
        lie_samples: a.lie_samples,
    };
    let reports = if a.suite.is_empty() {
        verify::run_all(&cfg)
    } else {
        a.suite
            .iter()
            .filter_map(|s| verify::run_suite(s, &cfg))
            .collect()
    };
    report(f, &reports, out)
}

/// Prints the suite summary and returns 0, or 3 if any check failed.
fn report(f: Format, reports: &[SuiteReport], out: &mut dyn Write) -> Outcome {
    let suites: Vec<SuiteOutput> = reports
        .iter()
        .map(|r| SuiteOutput {
            name: r.name.clone(),
            checks: r.checks,
            failed: r.failures.len(),
            counterexamples: r.failures.iter().take(SHOWN_FAILURES).cloned().collect(),
        })
        .collect();
    let passed = suites.iter().all(|s| s.failed == 0);
    let counterexamples: Vec<(&str, &str)> = suites
        .iter()
        .flat_map(|s| s.counterexamples.iter().map(move |c| (s.name.as_str(), c.as_str())))
        .take(SHOWN_FAILURES)
        .collect();
    match f {
        Format::Json => {
            let o = VerifyOutput { passed, suites: suites.clone() };
            writeln!(out, "{}", to_json(&o)?)?;
        }
        Format::Text | Format::Latex => {
            writeln!(out, "{:<20} {:>8} {:>8}  status", "suite", "checks", "failed")?;
            for s in &suites {
                let status = if s.failed == 0 { "ok" } else { "FAIL" };
                writeln!(out, "{:<20} {:>8} {:>8}  {status}", s.name, s.checks, s.failed)?;
            }
            let checks: usize = suites.iter().map(|s| s.checks).sum();
            let failed: usize = suites.iter().map(|s| s.failed).sum();
            writeln!(out, "{:<20} {:>8} {:>8}", "total", checks, failed)?;
            if !passed {
                writeln!(out, "counterexamples:")?;
                for (name, c) in &counterexamples {
                    writeln!(out, "  [{name}] {c}")?;
                }
            }
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_VERIFY })
}
