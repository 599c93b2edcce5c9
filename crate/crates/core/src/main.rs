//! Command-line surface: analyze a curve, run the verification table,
//! or evaluate the named bounds and local-invariant tables.
//!
//! Exit codes: 0 success / all items pass, 1 usage error, 2 invalid
//! curve (non-reduced or otherwise rejected), 3 verification failure.

use clap::{Args, Parser, Subcommand};

use defect::families::{self, FamilyInstance};
use defect::forms::parse_form;
use defect::report::{
    self, parse_census, parse_singularity_type, render_json, verdict_text, ReportInput,
};
use defect::scalar;
use defect::singularities::{
    bound_cuspidal, bound_nodal, bound_nonfree, bound_triple, delta_local, dpw_tau_max, genus,
    lct, tau_local, SingularityCensus, SingularityError,
};
use defect::verify::{self, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "defect",
    version,
    about = "Defect, freeness and singularity bounds for reduced plane curves over Q"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Analyze a curve given as a polynomial or as a named family
    Analyze(AnalyzeArgs),
    /// Run the built-in verification table of expected invariants
    #[command(name = "verify-paper")]
    VerifyPaper(VerifyArgs),
    /// Evaluate a named bound (A, B, C, D) or table (dpw, lct, genus)
    Bounds(BoundsArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Homogeneous polynomial in x, y, z with rational coefficients,
    /// e.g. "x^2+y^2+z^2" (omit when using --family)
    #[arg(value_name = "POLY", allow_hyphen_values = true)]
    poly: Option<String>,
    /// Named family: fermat, braid, dual-fermat-sextic, ivinskis,
    /// persson, lines, concurrent-lines, nodal
    #[arg(long, value_name = "NAME")]
    family: Option<String>,
    /// Degree parameter (fermat, nodal)
    #[arg(long)]
    d: Option<usize>,
    /// Cover order (ivinskis: degree 6k)
    #[arg(long)]
    k: Option<usize>,
    /// Even parameter (persson: degree 2m)
    #[arg(long)]
    m: Option<usize>,
    /// Number of lines (lines)
    #[arg(long)]
    n: Option<usize>,
    /// Seed for randomized constructions (lines, concurrent-lines, nodal)
    #[arg(long)]
    seed: Option<u64>,
    /// Emit canonical JSON instead of text
    #[arg(long)]
    json: bool,
    /// Refuse curves above this degree
    #[arg(long, default_value_t = 14, value_name = "INT")]
    max_degree: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run only items matching ITEM (id substring; a bare letter or a
    /// trailing capital letter selects a tag)
    #[arg(long, value_name = "ITEM")]
    only: Option<String>,
    /// Skip items that need curves above this degree
    #[arg(long, default_value_t = 14, value_name = "INT")]
    max_degree: usize,
    /// Emit canonical JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BoundsArgs {
    /// One of: A, B, C, D, dpw, lct, genus
    #[arg(value_name = "KIND")]
    kind: String,
    /// Degree (A, D, dpw, genus)
    #[arg(long)]
    d: Option<usize>,
    /// Minimal relation degree (dpw)
    #[arg(long)]
    r: Option<usize>,
    /// Family parameter (B, C)
    #[arg(long)]
    k: Option<usize>,
    /// Singularity type: node, cusp, triple, A<n>, D<n>, E<n>, mult<r> (lct)
    #[arg(long = "type", value_name = "TYPE")]
    sing_type: Option<String>,
    /// Singularity census TYPE:COUNT,TYPE:COUNT,... (D, genus)
    #[arg(long, value_name = "SPEC")]
    census: Option<String>,
    /// Emit canonical JSON instead of text
    #[arg(long)]
    json: bool,
}

enum CliError {
    /// Bad arguments or refused request — exit 1.
    Usage(String),
    /// Structurally invalid curve — exit 2.
    Invalid(String),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

fn normalize(s: &str) -> String {
    s.chars()
        .filter(|c| c.is_ascii_alphanumeric())
        .collect::<String>()
        .to_ascii_lowercase()
}

/// The degree a family request will produce, for the cap check before
/// any construction work happens.
fn predicted_degree(norm: &str, a: &AnalyzeArgs) -> Option<usize> {
    match norm {
        "fermat" | "nodal" | "rationalnodal" => a.d,
        "braid" | "dualfermatsextic" | "dualsextic" | "dualfermat" => Some(6),
        "ivinskis" => a.k.map(|k| 6 * k),
        "persson" => a.m.map(|m| 2 * m),
        "lines" | "genericlines" => a.n,
        "concurrentlines" => Some(3),
        _ => None,
    }
}

fn build_family(a: &AnalyzeArgs, name: &str) -> Result<FamilyInstance, CliError> {
    let norm = normalize(name);
    let forbid = |flag: Option<()>, what: &str| -> Result<(), CliError> {
        match flag {
            Some(_) => usage(format!("family {name} does not take --{what}")),
            None => Ok(()),
        }
    };
    let need = |v: Option<usize>, what: &str| -> Result<usize, CliError> {
        v.ok_or(CliError::Usage(format!("family {name} requires --{what}")))
    };
    let no_seed = |a: &AnalyzeArgs| forbid(a.seed.map(|_| ()), "seed");
    let fam = |r: Result<FamilyInstance, families::FamilyError>| -> Result<FamilyInstance, CliError> {
        r.map_err(|e| CliError::Usage(e.to_string()))
    };
    match norm.as_str() {
        "fermat" => {
            forbid(a.k.map(|_| ()), "k")?;
            forbid(a.m.map(|_| ()), "m")?;
            forbid(a.n.map(|_| ()), "n")?;
            no_seed(a)?;
            fam(families::fermat(need(a.d, "d")?))
        }
        "braid" => {
            forbid(a.d.map(|_| ()), "d")?;
            forbid(a.k.map(|_| ()), "k")?;
            forbid(a.m.map(|_| ()), "m")?;
            forbid(a.n.map(|_| ()), "n")?;
            no_seed(a)?;
            Ok(families::braid_arrangement())
        }
        "dualfermatsextic" | "dualsextic" | "dualfermat" => {
            forbid(a.d.map(|_| ()), "d")?;
            forbid(a.k.map(|_| ()), "k")?;
            forbid(a.m.map(|_| ()), "m")?;
            forbid(a.n.map(|_| ()), "n")?;
            no_seed(a)?;
            Ok(families::dual_fermat_sextic())
        }
        "ivinskis" => {
            forbid(a.d.map(|_| ()), "d")?;
            forbid(a.m.map(|_| ()), "m")?;
            forbid(a.n.map(|_| ()), "n")?;
            no_seed(a)?;
            fam(families::ivinskis(need(a.k, "k")?))
        }
        "persson" => {
            forbid(a.d.map(|_| ()), "d")?;
            forbid(a.k.map(|_| ()), "k")?;
            forbid(a.n.map(|_| ()), "n")?;
            no_seed(a)?;
            fam(families::persson(need(a.m, "m")?))
        }
        "lines" | "genericlines" => {
            forbid(a.d.map(|_| ()), "d")?;
            forbid(a.k.map(|_| ()), "k")?;
            forbid(a.m.map(|_| ()), "m")?;
            fam(families::generic_lines(
                need(a.n, "n")?,
                a.seed.unwrap_or(0),
            ))
        }
        "concurrentlines" => {
            forbid(a.d.map(|_| ()), "d")?;
            forbid(a.k.map(|_| ()), "k")?;
            forbid(a.m.map(|_| ()), "m")?;
            forbid(a.n.map(|_| ()), "n")?;
            fam(families::concurrent_lines(a.seed.unwrap_or(0)))
        }
        "nodal" | "rationalnodal" => {
            forbid(a.k.map(|_| ()), "k")?;
            forbid(a.m.map(|_| ()), "m")?;
            forbid(a.n.map(|_| ()), "n")?;
            fam(families::rational_nodal(
                need(a.d, "d")?,
                a.seed.unwrap_or(0),
            ))
        }
        _ => usage(format!(
            "unknown family {name}; known: fermat, braid, dual-fermat-sextic, ivinskis, \
             persson, lines, concurrent-lines, nodal"
        )),
    }
}

fn run_analyze(a: &AnalyzeArgs) -> Result<String, CliError> {
    let (form, census, input) = match (&a.poly, &a.family) {
        (Some(_), Some(_)) => {
            return usage("give either a polynomial or --family, not both");
        }
        (None, None) => {
            return usage("nothing to analyze: give a polynomial or --family NAME");
        }
        (Some(text), None) => {
            if a.d.is_some() || a.k.is_some() || a.m.is_some() || a.n.is_some() || a.seed.is_some()
            {
                return usage("family parameters (--d/--k/--m/--n/--seed) need --family");
            }
            let f = parse_form(text).map_err(|e| CliError::Usage(format!("parse error: {e}")))?;
            (
                f,
                None,
                ReportInput {
                    source: text.clone(),
                    seed: None,
                },
            )
        }
        (None, Some(name)) => {
            let norm = normalize(name);
            if let Some(deg) = predicted_degree(&norm, a) {
                if deg > a.max_degree {
                    return usage(format!(
                        "requested degree {deg} exceeds cap {}; raise --max-degree",
                        a.max_degree
                    ));
                }
            }
            let inst = build_family(a, name)?;
            let input = ReportInput {
                source: inst.name.clone(),
                seed: inst.seed,
            };
            (inst.form, Some(inst.census), input)
        }
    };
    if form.degree() > a.max_degree {
        return usage(format!(
            "degree {} exceeds cap {}; raise --max-degree",
            form.degree(),
            a.max_degree
        ));
    }
    let source = input.source.clone();
    let rep = report::build_report(input, &form, census.as_ref())
        .map_err(|e| CliError::Invalid(format!("{e} (input: {source})")))?;
    Ok(if a.json {
        format!("{}\n", render_json(&report::report_to_json(&rep)))
    } else {
        report::report_to_text(&rep)
    })
}

fn run_verify(v: &VerifyArgs) -> (String, i32) {
    let opts = VerifyOptions {
        only: v.only.clone(),
        max_degree: v.max_degree,
    };
    let outcomes = verify::run_verification(&opts);
    let text = if v.json {
        format!("{}\n", render_json(&verify::outcomes_to_json(&outcomes)))
    } else {
        verify::outcomes_to_text(&outcomes)
    };
    let code = if verify::all_passed(&outcomes) { 0 } else { 3 };
    (text, code)
}

fn need_param(v: Option<usize>, what: &str, kind: &str) -> Result<usize, CliError> {
    v.ok_or(CliError::Usage(format!("bounds {kind} requires --{what}")))
}

fn census_if_given(b: &BoundsArgs) -> Result<Option<defect::singularities::SingularityCensus>, CliError> {
    match b.census.as_deref() {
        None => Ok(None),
        Some(spec) => Ok(Some(parse_census(spec).map_err(CliError::Usage)?)),
    }
}

fn run_bounds(b: &BoundsArgs) -> Result<String, CliError> {
    let kind = b.kind.trim();
    let render_verdict = |v: defect::singularities::Verdict, json: bool| -> String {
        if json {
            format!("{}\n", render_json(&report::verdict_to_json(&v)))
        } else {
            format!("{}\n", verdict_text(&v))
        }
    };
    match normalize(kind).as_str() {
        "a" => {
            let d = need_param(b.d, "d", "A")?;
            // with a census the hypotheses are checked; without one the
            // bound is reported unconditionally
            let v = match census_if_given(b)? {
                Some(c) => report::verdict_nodal(d, &c),
                None => bound_nodal(d),
            };
            Ok(render_verdict(v, b.json))
        }
        "b" => {
            let k = need_param(b.k, "k", "B")?;
            let v = match census_if_given(b)? {
                Some(c) => report::verdict_triple(3 * k, &c),
                None => bound_triple(k),
            };
            Ok(render_verdict(v, b.json))
        }
        "c" => {
            let k = need_param(b.k, "k", "C")?;
            let v = match census_if_given(b)? {
                Some(c) => report::verdict_cuspidal(6 * k, &c),
                None => bound_cuspidal(k),
            };
            Ok(render_verdict(v, b.json))
        }
        "d" => {
            let d = need_param(b.d, "d", "D")?;
            let spec = b
                .census
                .as_deref()
                .ok_or(CliError::Usage("bounds D requires --census".into()))?;
            let census = parse_census(spec).map_err(CliError::Usage)?;
            Ok(render_verdict(bound_nonfree(d, &census), b.json))
        }
        "dpw" => {
            let d = need_param(b.d, "d", "dpw")?;
            let r = need_param(b.r, "r", "dpw")?;
            if d == 0 || r > d - 1 {
                return usage(format!("dpw requires 0 <= r <= d-1, got d={d}, r={r}"));
            }
            let t = dpw_tau_max(d, r);
            Ok(if b.json {
                format!(
                    "{}\n",
                    render_json(&report::string_object(vec![
                        ("d", d.to_string()),
                        ("r", r.to_string()),
                        ("tau_max", t.to_string()),
                    ]))
                )
            } else {
                format!("{t}\n")
            })
        }
        "lct" => {
            let t = b
                .sing_type
                .as_deref()
                .ok_or(CliError::Usage("bounds lct requires --type".into()))?;
            let ty = parse_singularity_type(t).map_err(CliError::Usage)?;
            let value = lct(ty);
            Ok(if b.json {
                let delta = delta_local(ty)
                    .map(|d| d.to_string())
                    .unwrap_or_else(|_| "unavailable".into());
                format!(
                    "{}\n",
                    render_json(&report::string_object(vec![
                        ("type", ty.label()),
                        ("lct", scalar::render(&value)),
                        ("tau", tau_local(ty).to_string()),
                        ("delta", delta),
                    ]))
                )
            } else {
                format!("{}\n", scalar::render(&value))
            })
        }
        "genus" => {
            let d = need_param(b.d, "d", "genus")?;
            let census = match b.census.as_deref() {
                Some(spec) => parse_census(spec).map_err(CliError::Usage)?,
                None => SingularityCensus::empty(),
            };
            match genus(d, &census) {
                Ok(g) => Ok(if b.json {
                    format!(
                        "{}\n",
                        render_json(&report::string_object(vec![
                            ("d", d.to_string()),
                            ("census", report::census_text(&census)),
                            ("genus", g.to_string()),
                            ("attainable", "true".into()),
                        ]))
                    )
                } else {
                    format!("{g}\n")
                }),
                Err(SingularityError::NegativeGenus(g)) => Ok(if b.json {
                    format!(
                        "{}\n",
                        render_json(&report::string_object(vec![
                            ("d", d.to_string()),
                            ("census", report::census_text(&census)),
                            ("genus", g.to_string()),
                            ("attainable", "false".into()),
                        ]))
                    )
                } else {
                    format!("not attainable on an irreducible curve (genus would be {g})\n")
                }),
                Err(e) => usage(e.to_string()),
            }
        }
        _ => usage(format!(
            "unknown bound kind {kind}; known: A, B, C, D, dpw, lct, genus"
        )),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    std::process::exit(0);
                }
                _ => {
                    eprint!("{e}");
                    std::process::exit(1);
                }
            }
        }
    };
    let (output, code) = match &cli.cmd {
        Cmd::Analyze(a) => match run_analyze(a) {
            Ok(text) => (text, 0),
            Err(CliError::Usage(m)) => {
                eprintln!("error: {m}");
                std::process::exit(1);
            }
            Err(CliError::Invalid(m)) => {
                eprintln!("error: {m}");
                std::process::exit(2);
            }
        },
        Cmd::VerifyPaper(v) => run_verify(v),
        Cmd::Bounds(b) => match run_bounds(b) {
            Ok(text) => (text, 0),
            Err(CliError::Usage(m)) => {
                eprintln!("error: {m}");
                std::process::exit(1);
            }
            Err(CliError::Invalid(m)) => {
                eprintln!("error: {m}");
                std::process::exit(2);
            }
        },
    };
    print!("{output}");
    std::process::exit(code);
}
