//! Argument handling and report rendering for the `adesing` binary.
//!
//! [`run`] does all the work and returns the exit code with the text to print,
//! so the command line can be exercised in-process.

use std::fmt::Write as _;

use adesing::braid::{
    hurwitz_orbit, verify_deligne_transitivity, verify_monodromy_trace, verify_trace_criterion,
    Factorization, TraceMode, VerificationReport,
};
use adesing::poly::{Monomial, Polynomial};
use adesing::singularity::{
    classify_ade, corpus_report, modality_quasihomogeneous, monodromy_eigenvalue_angles,
    monodromy_order, mu_const_linear_check, newton_diagram_2d, newton_number_2d,
    signature_from_spectrum, spectrum_length, spectrum_quasihomogeneous, suspend_spectrum,
    three_variable_spectrum, weighted_basis, Germ, SingularityError,
};
use adesing::weyl::{
    coxeter_element, definiteness, element_order, exponents_and_coxeter_number, trace,
    weyl_group_order, RootSystem, RootSystemType,
};
use adesing::Rational;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

pub const EXIT_OK: u8 = 0;
pub const EXIT_COMPUTATION: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

/// The corpus of normal forms shipped with the tool.
pub const BUNDLED_CORPUS: &str = include_str!("../../../corpus/normal_forms.txt");

#[derive(Parser, Debug)]
#[command(
    name = "adesing",
    version,
    about = "Invariants of simple singularities and ADE Weyl groups"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Node budget for searches and enumerations.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct PolyArgs {
    /// Polynomial, e.g. "x^3 + x*y^3".
    polynomial: String,
    /// Comma-separated variable order; inferred alphabetically when omitted.
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// A-D-E type, Coxeter number and exponents of a simple germ.
    Classify(PolyArgs),
    /// Spectrum, its length and the monodromy eigenvalue angles.
    Spectrum(PolyArgs),
    /// Milnor number (dimension of the local algebra).
    Milnor(PolyArgs),
    /// Modality of a quasihomogeneous germ.
    Modality(PolyArgs),
    /// Signature counts read off from the spectrum.
    Signature {
        #[command(flatten)]
        poly: PolyArgs,
        /// Add this many squares of fresh variables first.
        #[arg(long, default_value_t = 0)]
        suspend: usize,
    },
    /// Newton diagram and Newton number of a plane curve germ.
    Newton(PolyArgs),
    /// Root system, exponents and Coxeter element of a type such as E8.
    WeylInfo { rstype: String },
    /// Hurwitz orbit of the simple-root factorization of the Coxeter element.
    HurwitzOrbit { rstype: String },
    /// Run a verification check.
    Verify {
        check: Check,
        /// Root system type, or a polynomial for mu-const.
        target: String,
        /// Sample size for the sampled trace check.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Classify and cross-check every germ of a corpus file.
    Corpus {
        /// Corpus file; the bundled normal forms when omitted.
        path: Option<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Check {
    Deligne,
    Trace,
    Monodromy,
    MuConst,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct ClassifyOut {
    pub polynomial: String,
    #[serde(rename = "type")]
    pub rstype: String,
    pub mu: usize,
    pub h: u64,
    pub exponents: Vec<u64>,
    pub weights: Vec<String>,
    pub spectrum: Vec<String>,
    pub spectrum3: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct SpectrumOut {
    pub polynomial: String,
    pub nvars: usize,
    pub spectrum: Vec<String>,
    pub length: String,
    pub simple: bool,
    pub spectrum3: Vec<String>,
    pub angles: Vec<String>,
    pub monodromy_order: String,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct MilnorOut {
    pub polynomial: String,
    pub mu: usize,
    pub basis: Vec<String>,
    pub global_dimension: usize,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct ModalityOut {
    pub polynomial: String,
    pub modality: usize,
    pub diagonal: Vec<String>,
    pub upper: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct SignatureOut {
    pub polynomial: String,
    pub nvars: usize,
    pub spectrum: Vec<String>,
    pub plus: usize,
    pub zero: usize,
    pub minus: usize,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct NewtonOut {
    pub polynomial: String,
    pub vertices: Vec<[u32; 2]>,
    pub convenient: bool,
    pub newton_number: Option<i64>,
    pub mu: usize,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct WeylInfoOut {
    #[serde(rename = "type")]
    pub rstype: String,
    pub rank: usize,
    pub roots: usize,
    pub positive_roots: usize,
    pub cartan: Vec<Vec<i64>>,
    pub exponents: Vec<u64>,
    pub h: u64,
    pub group_order: u64,
    pub coxeter_element: Vec<Vec<i64>>,
    pub coxeter_order: u64,
    pub coxeter_trace: i64,
    pub negated_cartan: String,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct HurwitzOut {
    #[serde(rename = "type")]
    pub rstype: String,
    pub size: usize,
    pub orbit: Vec<Vec<Vec<i64>>>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct MuConstSampleOut {
    pub t: String,
    pub diagram_preserved: Option<bool>,
    pub dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct MuConstOut {
    #[serde(rename = "check-id")]
    pub check_id: String,
    pub polynomial: String,
    pub class: String,
    pub vacuous: bool,
    pub dimension: usize,
    pub samples: Vec<MuConstSampleOut>,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct ErrorOut {
    pub error: String,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn monomial_text(m: &Monomial, names: &[String]) -> String {
    Polynomial::monomial(m.clone(), Rational::from_integer(1.into())).to_string_with(names)
}

fn germ(args: &PolyArgs) -> Result<Germ, SingularityError> {
    match &args.vars {
        Some(vars) => {
            let v: Vec<&str> = vars.iter().map(|s| s.trim()).collect();
            Germ::parse_in(&args.polynomial, &v)
        }
        None => Germ::parse(&args.polynomial),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Successful output: either text or JSON, with the exit code to use.
struct Report {
    code: u8,
    text: String,
    json: String,
}

impl Report {
    fn ok<T: Serialize>(value: &T, text: String) -> Self {
        Self {
            code: EXIT_OK,
            text,
            json: json(value),
        }
    }

    fn checked<T: Serialize>(value: &T, text: String, pass: bool) -> Self {
        Self {
            code: if pass { EXIT_OK } else { EXIT_MISMATCH },
            text,
            json: json(value),
        }
    }
}

fn verification(r: &VerificationReport) -> Report {
    let mut text = r.render_text();
    text.push('\n');
    Report::checked(r, text, r.pass)
}

fn rstype(s: &str) -> Result<RootSystem, String> {
    let t: RootSystemType = s
        .parse()
        .map_err(|e: adesing::weyl::WeylError| e.to_string())?;
    Ok(RootSystem::build(t))
}

fn execute(cli: &Cli) -> Result<Report, String> {
    let err = |e: SingularityError| e.to_string();
    match &cli.command {
        Command::Classify(a) => {
            let g = germ(a).map_err(err)?;
            let c = classify_ade(&g).map_err(err)?;
            let out = ClassifyOut {
                polynomial: g.display(),
                rstype: c.rstype.to_string(),
                mu: c.mu,
                h: c.coxeter_number,
                exponents: c.exponents.clone(),
                weights: strings(c.weights.values()),
                spectrum: strings(c.spectrum.values()),
                spectrum3: strings(c.spectrum3.values()),
            };
            let text = format!(
                "polynomial: {}\ntype: {}\nmu: {}\nh: {}\nexponents: {}\nweights: {}\nspectrum: {}\n",
                out.polynomial,
                out.rstype,
                out.mu,
                out.h,
                join(&out.exponents),
                out.weights.join(" "),
                out.spectrum.join(" ")
            );
            Ok(Report::ok(&out, text))
        }
        Command::Spectrum(a) => {
            let g = germ(a).map_err(err)?;
            let s = spectrum_quasihomogeneous(&g).map_err(err)?;
            let length = spectrum_length(&s).map_err(err)?;
            let s3 = three_variable_spectrum(&s);
            let out = SpectrumOut {
                polynomial: g.display(),
                nvars: s.nvars(),
                spectrum: strings(s.values()),
                simple: length < Rational::from_integer(1.into()),
                length: length.to_string(),
                spectrum3: strings(s3.values()),
                angles: strings(&monodromy_eigenvalue_angles(&s)),
                monodromy_order: monodromy_order(&s).to_string(),
            };
            let text = format!(
                "polynomial: {}\nspectrum: {}\nlength: {}\nsimple: {}\nspectrum (3 variables): {}\nmonodromy angles: {}\nmonodromy order: {}\n",
                out.polynomial,
                out.spectrum.join(" "),
                out.length,
                out.simple,
                out.spectrum3.join(" "),
                out.angles.join(" "),
                out.monodromy_order
            );
            Ok(Report::ok(&out, text))
        }
        Command::Milnor(a) => {
            let g = germ(a).map_err(err)?;
            let alg = g.local_algebra();
            let out = MilnorOut {
                polynomial: g.display(),
                mu: g.milnor_number(),
                basis: alg
                    .basis
                    .monomials()
                    .iter()
                    .map(|m| monomial_text(m, g.names()))
                    .collect(),
                global_dimension: alg.global_dimension,
            };
            let text = format!(
                "polynomial: {}\nmu: {}\nbasis: {}\n",
                out.polynomial,
                out.mu,
                out.basis.join(" ")
            );
            Ok(Report::ok(&out, text))
        }
        Command::Modality(a) => {
            let g = germ(a).map_err(err)?;
            let modality = modality_quasihomogeneous(&g).map_err(err)?;
            let one = Rational::from_integer(1.into());
            let basis = weighted_basis(&g).map_err(err)?;
            let pick = |keep: &dyn Fn(&Rational) -> bool| -> Vec<String> {
                basis
                    .iter()
                    .filter(|(_, d)| keep(d))
                    .map(|(m, _)| monomial_text(m, g.names()))
                    .collect()
            };
            let out = ModalityOut {
                polynomial: g.display(),
                modality,
                diagonal: pick(&|d| *d == one),
                upper: pick(&|d| *d > one),
            };
            let text = format!(
                "polynomial: {}\nmodality: {}\ndiagonal: {}\nupper: {}\n",
                out.polynomial,
                out.modality,
                out.diagonal.join(" "),
                out.upper.join(" ")
            );
            Ok(Report::ok(&out, text))
        }
        Command::Signature { poly, suspend } => {
            let g = germ(poly).map_err(err)?;
            let s = suspend_spectrum(&spectrum_quasihomogeneous(&g).map_err(err)?, *suspend);
            let sig = signature_from_spectrum(&s);
            let out = SignatureOut {
                polynomial: g.display(),
                nvars: s.nvars(),
                spectrum: strings(s.values()),
                plus: sig.plus,
                zero: sig.zero,
                minus: sig.minus,
            };
            let mut text = format!(
                "polynomial: {}\nvariables: {}\nspectrum: {}\nsignature (plus, zero, minus): ({}, {}, {})\n",
                out.polynomial,
                out.nvars,
                out.spectrum.join(" "),
                out.plus,
                out.zero,
                out.minus
            );
            if out.zero > 0 {
                text.push_str("integer spectral values: the intersection form is degenerate\n");
            }
            Ok(Report::ok(&out, text))
        }
        Command::Newton(a) => {
            let g = germ(a).map_err(err)?;
            let d = newton_diagram_2d(g.poly()).map_err(err)?;
            let nn = newton_number_2d(&d).ok();
            let out = NewtonOut {
                polynomial: g.display(),
                vertices: d.vertices.iter().map(|&(x, y)| [x, y]).collect(),
                convenient: d.convenient,
                newton_number: nn,
                mu: g.milnor_number(),
            };
            let text = format!(
                "polynomial: {}\ndiagram: {}\nnewton number: {}\nmu: {}\n",
                out.polynomial,
                d,
                nn.map_or("-".to_string(), |v| v.to_string()),
                out.mu
            );
            Ok(Report::ok(&out, text))
        }
        Command::WeylInfo { rstype: t } => {
            let rs = rstype(t)?;
            let data = exponents_and_coxeter_number(&rs);
            let c = coxeter_element(&rs);
            let def = definiteness(&rs.cartan().neg().to_rational()).map_err(|e| e.to_string())?;
            let out = WeylInfoOut {
                rstype: rs.rstype().to_string(),
                rank: rs.rank(),
                roots: rs.roots().len(),
                positive_roots: rs.positive_roots().len(),
                cartan: rs.cartan().rows(),
                exponents: data.exponents.clone(),
                h: data.coxeter_number,
                group_order: weyl_group_order(&rs),
                coxeter_element: c.matrix().rows(),
                coxeter_order: element_order(&c, cli.budget as u64).map_err(|e| e.to_string())?,
                coxeter_trace: trace(&c),
                negated_cartan: def.to_string(),
            };
            let text = format!(
                "type: {}\nrank: {}\nroots: {} ({} positive)\nexponents: {}\nh: {}\n|W|: {}\ncoxeter element order: {}\ncoxeter element trace: {}\n-cartan: {}\ncartan:\n{}\ncoxeter element:\n{}\n",
                out.rstype,
                out.rank,
                out.roots,
                out.positive_roots,
                join(&out.exponents),
                out.h,
                out.group_order,
                out.coxeter_order,
                out.coxeter_trace,
                out.negated_cartan,
                rs.cartan(),
                c.matrix()
            );
            Ok(Report::ok(&out, text))
        }
        Command::HurwitzOrbit { rstype: t } => {
            let rs = rstype(t)?;
            let orbit = hurwitz_orbit(&Factorization::simple(&rs), &rs, cli.budget)
                .map_err(|e| e.to_string())?;
            let out = HurwitzOut {
                rstype: rs.rstype().to_string(),
                size: orbit.len(),
                orbit: orbit.iter().map(|f| f.roots().to_vec()).collect(),
            };
            let mut text = format!("type: {}\norbit size: {}\n", out.rstype, out.size);
            for f in &orbit {
                let _ = writeln!(text, "{f}");
            }
            Ok(Report::ok(&out, text))
        }
        Command::Verify {
            check,
            target,
            samples,
        } => match check {
            Check::Deligne => {
                let rs = rstype(target)?;
                let r = verify_deligne_transitivity(&rs, cli.budget).map_err(|e| e.to_string())?;
                Ok(verification(&r))
            }
            Check::Trace => {
                let rs = rstype(target)?;
                let mode = if rs.rank() <= 3 {
                    TraceMode::Exhaustive
                } else {
                    TraceMode::Sample {
                        count: *samples,
                        seed: cli.seed,
                    }
                };
                let r = verify_trace_criterion(&rs, mode, cli.budget).map_err(|e| e.to_string())?;
                Ok(verification(&r))
            }
            Check::Monodromy => Ok(verification(&verify_monodromy_trace(&rstype(target)?))),
            Check::MuConst => {
                let g = germ(&PolyArgs {
                    polynomial: target.clone(),
                    vars: None,
                })
                .map_err(err)?;
                let ts: Vec<Rational> = ["1", "-1", "1/2"]
                    .iter()
                    .map(|s| s.parse().expect("literal"))
                    .collect();
                let r = mu_const_linear_check(&g, &ts);
                let out = MuConstOut {
                    check_id: "mu-const".into(),
                    polynomial: g.display(),
                    class: r.class.to_string_with(g.names()),
                    vacuous: r.vacuous,
                    dimension: r.dimension,
                    samples: r
                        .samples
                        .iter()
                        .map(|s| MuConstSampleOut {
                            t: s.t.to_string(),
                            diagram_preserved: s.diagram_preserved,
                            dimension: s.dimension,
                            error: s.error.clone(),
                            pass: s.pass,
                        })
                        .collect(),
                    pass: r.pass(),
                };
                let mut text = format!(
                    "mu-const {}: {}\nclass: {}\nmu: {}\n",
                    out.polynomial,
                    if out.pass { "pass" } else { "FAIL" },
                    out.class,
                    out.dimension
                );
                for s in &out.samples {
                    let _ = writeln!(
                        text,
                        "t={} diagram-preserved={} mu={} {}",
                        s.t,
                        s.diagram_preserved.map_or("-".into(), |b| b.to_string()),
                        s.dimension.map_or("-".into(), |d| d.to_string()),
                        if s.pass { "pass" } else { "FAIL" }
                    );
                }
                Ok(Report::checked(&out, text, out.pass))
            }
        },
        Command::Corpus { path } => {
            let text = match path {
                Some(p) => std::fs::read_to_string(p).map_err(|e| format!("{p}: {e}"))?,
                None => BUNDLED_CORPUS.to_string(),
            };
            let r = corpus_report(&text);
            Ok(Report::checked(&r, r.render_text(), r.pass))
        }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<S: AsRef<str>>(argv: &[S]) -> Outcome {
    let args: Vec<&str> = argv.iter().map(|s| s.as_ref()).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    match execute(&cli) {
        Ok(r) => Outcome {
            code: r.code,
            stdout: if cli.json { r.json } else { r.text },
            stderr: String::new(),
        },
        Err(msg) => Outcome {
            code: EXIT_COMPUTATION,
            stdout: if cli.json {
                json(&ErrorOut { error: msg.clone() })
            } else {
                String::new()
            },
            stderr: format!("error: {msg}\n"),
        },
    }
}
