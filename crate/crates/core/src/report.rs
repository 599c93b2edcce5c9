//! Assembled curve reports: run the pipeline and every checker on one
//! curve, then render the result as text or canonical JSON.
//!
//! JSON canonicalization rules: top-level keys in the fixed order
//! `input, d, mdr, tau, n_seq, nu, classification, checks, timing_ms`;
//! every integer serialized as a decimal string (immune to 64-bit
//! consumer overflow); rationals as `"p/q"`; parsing the emitted text
//! and re-serializing reproduces it byte for byte.

use std::time::Instant;

use serde_json::{Map, Value};

use crate::forms::Form;
use crate::jacobian::{self, CurveAnalysis, DefectCrosscheck, JacobianError};
use crate::scalar;
use crate::singularities::{
    bound_cuspidal, bound_nodal, bound_nonfree, bound_triple, dpw_tau_max, genus, Relation,
    SingularityCensus, SingularityError, SingularityType, Verdict, CUSP, NODE, ORDINARY_TRIPLE,
};

/// Echo of what the user asked to analyze.
#[derive(Clone, Debug)]
pub struct ReportInput {
    /// Polynomial text or family descriptor, e.g. `ivinskis(k=2)`.
    pub source: String,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct DpwCheck {
    pub tau: usize,
    pub tau_max: i64,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct Checks {
    pub defect_formula: DefectCrosscheck,
    /// n_j = n_{T−j} for all j (analysis rejects violations, so this
    /// records that the check ran and passed).
    pub duality_symmetric: bool,
    /// J_{f,j} ⊆ I_{f,j} held degreewise at every prime used.
    pub containment_certified: bool,
    pub dpw: DpwCheck,
    /// The four named bounds, in selector order A, B, C, D, each with an
    /// explicit applicability flag and the measured defect attached.
    pub verdicts: Vec<Verdict>,
}

#[derive(Clone, Debug)]
pub struct CurveReport {
    pub input: ReportInput,
    pub d: usize,
    pub mdr: usize,
    pub tau: usize,
    pub n_seq: Vec<usize>,
    pub nu: usize,
    pub classification: String,
    pub checks: Checks,
    pub timing_ms: u128,
}

/// Bound A hypotheses from a census: degree ≥ 4, nodes only, genus 0.
pub fn verdict_nodal(d: usize, c: &SingularityCensus) -> Verdict {
    if c.is_empty() {
        return Verdict::not_applicable('A', "smooth curve: no nodes".into());
    }
    if c.entries().iter().any(|&(s, _)| s != NODE) {
        return Verdict::not_applicable('A', "census contains a non-node singularity".into());
    }
    match genus(d, c) {
        Ok(0) => bound_nodal(d),
        Ok(g) => Verdict::not_applicable('A', format!("genus is {g}, not 0")),
        Err(SingularityError::NegativeGenus(g)) => Verdict::not_applicable(
            'A',
            format!("census cannot occur on an irreducible curve (genus would be {g})"),
        ),
        Err(e) => Verdict::not_applicable('A', e.to_string()),
    }
}

/// Bound B hypotheses from a census: degree 3k (k ≥ 3), exactly 2k
/// ordinary triple points plus nodes, genus 0.
pub fn verdict_triple(d: usize, c: &SingularityCensus) -> Verdict {
    if d % 3 != 0 || d / 3 < 3 {
        return Verdict::not_applicable('B', format!("requires degree 3k with k >= 3, got {d}"));
    }
    let k = d / 3;
    let mut triples = 0usize;
    let mut nodes = 0usize;
    for &(s, count) in c.entries() {
        if s == ORDINARY_TRIPLE || s == SingularityType::OrdinaryMult(3) {
            triples += count;
        } else if s == NODE {
            nodes += count;
        } else {
            return Verdict::not_applicable(
                'B',
                format!("census contains {s}, not a node or ordinary triple point"),
            );
        }
    }
    if triples != 2 * k {
        return Verdict::not_applicable(
            'B',
            format!("needs exactly {} ordinary triple points, census has {triples}", 2 * k),
        );
    }
    match genus(d, c) {
        Ok(0) => {
            let v = bound_triple(k);
            debug_assert_eq!(
                v.detail.first().map(|(_, n)| n.as_str()),
                Some(nodes.to_string().as_str()),
                "genus-0 census pins the node count"
            );
            v
        }
        Ok(g) => Verdict::not_applicable('B', format!("genus is {g}, not 0")),
        Err(SingularityError::NegativeGenus(g)) => Verdict::not_applicable(
            'B',
            format!("census cannot occur on an irreducible curve (genus would be {g})"),
        ),
        Err(e) => Verdict::not_applicable('B', e.to_string()),
    }
}

/// Bound C hypotheses from a census: degree 6k with exactly 9k² cusps.
pub fn verdict_cuspidal(d: usize, c: &SingularityCensus) -> Verdict {
    if d % 6 != 0 || d == 0 {
        return Verdict::not_applicable('C', format!("requires degree 6k, got {d}"));
    }
    let k = d / 6;
    let all_cusps = c.entries().iter().all(|&(s, _)| s == CUSP);
    let cusps: usize = c.entries().iter().map(|&(_, n)| n).sum();
    if !all_cusps || cusps != 9 * k * k {
        return Verdict::not_applicable(
            'C',
            format!("needs exactly {} cusps and nothing else", 9 * k * k),
        );
    }
    bound_cuspidal(k)
}

/// All four named bounds for a curve, in selector order, with the
/// measured defect attached. Raw polynomial input has no census, so
/// every hypothesis check is explicitly non-applicable.
pub fn verdicts_for(d: usize, census: Option<&SingularityCensus>, nu: usize) -> Vec<Verdict> {
    match census {
        None => "ABCD"
            .chars()
            .map(|k| {
                Verdict::not_applicable(
                    k,
                    "no singularity census available for raw polynomial input".into(),
                )
                .with_measured(nu)
            })
            .collect(),
        Some(c) => vec![
            verdict_nodal(d, c).with_measured(nu),
            verdict_triple(d, c).with_measured(nu),
            verdict_cuspidal(d, c).with_measured(nu),
            bound_nonfree(d, c).with_measured(nu),
        ],
    }
}

/// Run the full pipeline and checkers on one curve.
pub fn build_report(
    input: ReportInput,
    form: &Form,
    census: Option<&SingularityCensus>,
) -> Result<CurveReport, JacobianError> {
    let t0 = Instant::now();
    let analysis = jacobian::analyze(form)?;
    let report = assemble(input, &analysis, census, t0.elapsed().as_millis());
    Ok(report)
}

/// Assemble a report from an existing analysis (used when the analysis
/// is cached).
pub fn assemble(
    input: ReportInput,
    analysis: &CurveAnalysis,
    census: Option<&SingularityCensus>,
    timing_ms: u128,
) -> CurveReport {
    let p = &analysis.profile;
    let tau_max = dpw_tau_max(p.d, p.mdr);
    let checks = Checks {
        defect_formula: jacobian::defect_formula_crosscheck(p),
        duality_symmetric: true,
        containment_certified: analysis.containment_certified,
        dpw: DpwCheck {
            tau: p.tau,
            tau_max,
            holds: p.tau as i64 <= tau_max,
        },
        verdicts: verdicts_for(p.d, census, p.nu),
    };
    CurveReport {
        input,
        d: p.d,
        mdr: p.mdr,
        tau: p.tau,
        n_seq: p.n_seq.clone(),
        nu: p.nu,
        classification: p.classification.label(),
        checks,
        timing_ms,
    }
}

// ---------------------------------------------------------------------------
// census / singularity-type text forms
// ---------------------------------------------------------------------------

/// Parse a singularity type token: `node`, `cusp`, `triple`, `A<n>`,
/// `D<n>`, `E<n>`, `mult<r>` (ordinary r-fold point). Case-insensitive.
pub fn parse_singularity_type(token: &str) -> Result<SingularityType, String> {
    let t = token.trim().to_ascii_lowercase();
    let parsed = match t.as_str() {
        "node" => SingularityType::A(1),
        "cusp" => SingularityType::A(2),
        "triple" | "ordinary_triple" => ORDINARY_TRIPLE,
        _ => {
            let (head, tail) = t.split_at(1.min(t.len()));
            let num = |s: &str| -> Result<u32, String> {
                s.parse::<u32>().map_err(|_| format!("bad singularity type {token:?}"))
            };
            match head {
                "a" => SingularityType::A(num(tail)?),
                "d" => SingularityType::D(num(tail)?),
                "e" => SingularityType::E(num(tail)?),
                "m" => {
                    let rest = t.strip_prefix("mult").ok_or(format!("bad singularity type {token:?}"))?;
                    SingularityType::OrdinaryMult(num(rest)?)
                }
                _ => return Err(format!("bad singularity type {token:?}")),
            }
        }
    };
    parsed.validate().map_err(|e| e.to_string())?;
    Ok(parsed)
}

/// Parse a census spec `TYPE:COUNT,TYPE:COUNT,...`; empty means smooth.
pub fn parse_census(spec: &str) -> Result<SingularityCensus, String> {
    let mut entries = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (ty, count) = part
            .split_once(':')
            .ok_or(format!("census entry {part:?} is not TYPE:COUNT"))?;
        let count: usize = count
            .trim()
            .parse()
            .map_err(|_| format!("bad count in census entry {part:?}"))?;
        entries.push((parse_singularity_type(ty)?, count));
    }
    SingularityCensus::new(entries).map_err(|e| e.to_string())
}

/// `{A2: 9, node: 3}`-style display for a census.
pub fn census_text(c: &SingularityCensus) -> String {
    if c.is_empty() {
        return "smooth".into();
    }
    let parts: Vec<String> = c
        .entries()
        .iter()
        .map(|(s, n)| format!("{}: {n}", s.label()))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

// ---------------------------------------------------------------------------
// JSON rendering (canonical)
// ---------------------------------------------------------------------------

pub(crate) fn js<T: ToString>(v: T) -> Value {
    Value::String(v.to_string())
}

fn js_opt_int<T: ToString>(v: &Option<T>) -> Value {
    v.as_ref().map(|x| js(x.to_string())).unwrap_or(Value::Null)
}

pub(crate) fn obj(pairs: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

/// Ordered JSON object with string values, for small flat payloads.
pub fn string_object(pairs: Vec<(&str, String)>) -> Value {
    obj(pairs.into_iter().map(|(k, v)| (k, js(v))).collect())
}

pub fn verdict_to_json(v: &Verdict) -> Value {
    let detail = obj(v
        .detail
        .iter()
        .map(|(k, val)| (k.as_str(), js(val)))
        .collect());
    obj(vec![
        ("kind", js(v.kind)),
        ("applicable", Value::Bool(v.applicable)),
        ("reason", js(&v.reason)),
        (
            "bound",
            v.bound
                .as_ref()
                .map(|b| js(scalar::render(b)))
                .unwrap_or(Value::Null),
        ),
        ("bound_int", js_opt_int(&v.bound_int)),
        (
            "relation",
            js(match v.relation {
                Relation::AtLeast => "at_least",
                Relation::Equal => "equal",
            }),
        ),
        ("detail", detail),
        ("measured", js_opt_int(&v.measured)),
        (
            "holds",
            v.holds.map(Value::Bool).unwrap_or(Value::Null),
        ),
    ])
}

pub fn report_to_json(r: &CurveReport) -> Value {
    let input = obj(vec![
        ("source", js(&r.input.source)),
        ("seed", js_opt_int(&r.input.seed)),
    ]);
    let cf = &r.checks.defect_formula;
    let checks = obj(vec![
        (
            "defect_formula",
            obj(vec![
                ("low_case", js_opt_int(&cf.low_case)),
                ("high_case", js_opt_int(&cf.high_case)),
                ("measured", js(cf.measured)),
                ("agree", Value::Bool(cf.agree)),
            ]),
        ),
        (
            "duality",
            obj(vec![("symmetric", Value::Bool(r.checks.duality_symmetric))]),
        ),
        (
            "containment",
            obj(vec![(
                "certified",
                Value::Bool(r.checks.containment_certified),
            )]),
        ),
        (
            "dpw",
            obj(vec![
                ("tau", js(r.checks.dpw.tau)),
                ("tau_max", js(r.checks.dpw.tau_max)),
                ("holds", Value::Bool(r.checks.dpw.holds)),
            ]),
        ),
        (
            "verdicts",
            Value::Array(r.checks.verdicts.iter().map(verdict_to_json).collect()),
        ),
    ]);
    obj(vec![
        ("input", input),
        ("d", js(r.d)),
        ("mdr", js(r.mdr)),
        ("tau", js(r.tau)),
        (
            "n_seq",
            Value::Array(r.n_seq.iter().map(|n| js(n)).collect()),
        ),
        ("nu", js(r.nu)),
        ("classification", js(&r.classification)),
        ("checks", checks),
        ("timing_ms", js(r.timing_ms)),
    ])
}

/// The one serializer used for all JSON output; round-tripping a value
/// through `serde_json::from_str` and this function is byte-identical.
pub fn render_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serialization cannot fail")
}

// ---------------------------------------------------------------------------
// text rendering
// ---------------------------------------------------------------------------

/// One-line human form of a verdict, e.g. `ν ≥ 99/4 ⇒ ν ≥ 25`.
pub fn verdict_text(v: &Verdict) -> String {
    if !v.applicable {
        return format!("not applicable: {}", v.reason);
    }
    let mut s = match v.kind {
        'C' => {
            let g = v
                .detail
                .iter()
                .find(|(k, _)| k == "genus")
                .map(|(_, x)| x.as_str())
                .unwrap_or("?");
            format!("ν = {}, genus = {}", v.bound_int.unwrap_or(0), g)
        }
        'D' => {
            let get = |key: &str| {
                v.detail
                    .iter()
                    .find(|(k, _)| k == key)
                    .map(|(_, x)| x.as_str())
                    .unwrap_or("?")
            };
            format!(
                "ν ≥ 1 (not free); α = {} ≥ {}, mdr ≥ {}, τ ≤ {}",
                get("alpha"),
                get("alpha_threshold"),
                get("mdr_min"),
                get("tau_max")
            )
        }
        _ => format!(
            "ν ≥ {} ⇒ ν ≥ {}",
            v.bound.as_ref().map(scalar::render).unwrap_or_default(),
            v.bound_int.unwrap_or(0)
        ),
    };
    if let (Some(nu), Some(h)) = (v.measured, v.holds) {
        s.push_str(&format!(
            "; measured ν = {nu} ({})",
            if h { "holds" } else { "VIOLATED" }
        ));
    }
    s
}

fn seq_text(ns: &[usize]) -> String {
    let inner: Vec<String> = ns.iter().map(|n| n.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

fn push_line(out: &mut String, k: &str, v: &str) {
    out.push_str(&format!("{k:<16}{v}\n"));
}

pub fn report_to_text(r: &CurveReport) -> String {
    let mut out = String::new();
    push_line(&mut out, "input:", &r.input.source);
    if let Some(s) = r.input.seed {
        push_line(&mut out, "seed:", &s.to_string());
    }
    push_line(&mut out, "d:", &r.d.to_string());
    push_line(&mut out, "mdr:", &r.mdr.to_string());
    push_line(&mut out, "tau:", &r.tau.to_string());
    push_line(&mut out, "n_seq:", &seq_text(&r.n_seq));
    push_line(&mut out, "nu:", &r.nu.to_string());
    push_line(&mut out, "classification:", &r.classification);
    out.push_str("checks:\n");
    let cf = &r.checks.defect_formula;
    let cases = ["low", "high"]
        .iter()
        .zip([&cf.low_case, &cf.high_case])
        .filter_map(|(name, c)| c.map(|v| format!("{name} case {v}")))
        .collect::<Vec<_>>()
        .join(", ");
    out.push_str(&format!(
        "  defect_formula   {} ({cases}, measured {})\n",
        if cf.agree { "agree" } else { "DISAGREE" },
        cf.measured
    ));
    out.push_str(&format!(
        "  duality          n_j = n_(T-j) for all j: {}\n",
        if r.checks.duality_symmetric { "ok" } else { "VIOLATED" }
    ));
    out.push_str(&format!(
        "  containment      J ⊆ I degreewise: {}\n",
        if r.checks.containment_certified { "certified" } else { "FAILED" }
    ));
    out.push_str(&format!(
        "  dpw              τ = {} ≤ {} = τ_max(d, mdr): {}\n",
        r.checks.dpw.tau,
        r.checks.dpw.tau_max,
        if r.checks.dpw.holds { "ok" } else { "VIOLATED" }
    ));
    for v in &r.checks.verdicts {
        out.push_str(&format!("  bound {}          {}\n", v.kind, verdict_text(v)));
    }
    push_line(&mut out, "timing_ms:", &r.timing_ms.to_string());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::parse_form;

    #[test]
    fn conic_report_content() {
        let f = parse_form("x^2+y^2+z^2").unwrap();
        let r = build_report(
            ReportInput {
                source: "x^2+y^2+z^2".into(),
                seed: None,
            },
            &f,
            Some(&SingularityCensus::empty()),
        )
        .unwrap();
        assert_eq!(r.nu, 1);
        assert_eq!(r.classification, "nearly_free");
        assert!(r.checks.defect_formula.agree);
        assert!(r.checks.dpw.holds);
        assert_eq!(r.checks.verdicts.len(), 4);
        assert!(r.checks.verdicts.iter().all(|v| !v.applicable));
        let text = report_to_text(&r);
        assert!(text.contains("nearly_free"));
        assert!(text.contains("nu:"));
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let f = parse_form("y^2*z - x^3 - x^2*z").unwrap();
        let r = build_report(
            ReportInput {
                source: "y^2*z - x^3 - x^2*z".into(),
                seed: None,
            },
            &f,
            None,
        )
        .unwrap();
        let s1 = render_json(&report_to_json(&r));
        let parsed: Value = serde_json::from_str(&s1).unwrap();
        let s2 = render_json(&parsed);
        assert_eq!(s1, s2);
        // fixed top-level key order
        let top: Vec<&str> = parsed.as_object().unwrap().keys().map(|s| s.as_str()).collect();
        assert_eq!(
            top,
            vec!["input", "d", "mdr", "tau", "n_seq", "nu", "classification", "checks", "timing_ms"]
        );
        // integers are decimal strings
        assert!(parsed["tau"].is_string());
        assert!(parsed["n_seq"][0].is_string());
    }

    #[test]
    fn verdict_text_matches_calculator_examples() {
        assert_eq!(
            verdict_text(&bound_nodal(10)),
            "ν ≥ 99/4 ⇒ ν ≥ 25"
        );
        assert_eq!(verdict_text(&bound_cuspidal(3)), "ν = 55, genus = 55");
        assert_eq!(
            verdict_text(&bound_nodal(10).with_measured(25)),
            "ν ≥ 99/4 ⇒ ν ≥ 25; measured ν = 25 (holds)"
        );
    }

    #[test]
    fn census_verdicts_gate_on_hypotheses() {
        // 66 nodes on 12 lines: not a rational irreducible curve
        let c = SingularityCensus::new(vec![(NODE, 66)]).unwrap();
        let a = verdict_nodal(12, &c);
        assert!(!a.applicable);
        assert!(a.reason.contains("irreducible"));
        // bound D applies there
        let d = bound_nonfree(12, &c);
        assert!(d.applicable);
        // rational nodal quintic: 6 nodes
        let c6 = SingularityCensus::new(vec![(NODE, 6)]).unwrap();
        let a6 = verdict_nodal(5, &c6).with_measured(6);
        assert!(a6.applicable);
        assert_eq!(a6.bound_int, Some(6));
        assert_eq!(a6.holds, Some(true));
        // cuspidal census
        let cc = SingularityCensus::new(vec![(CUSP, 9)]).unwrap();
        let vc = verdict_cuspidal(6, &cc).with_measured(1);
        assert!(vc.applicable);
        assert_eq!(vc.bound_int, Some(1));
        assert_eq!(vc.holds, Some(true));
        // triple-point census for the degree-9 family shape
        let ct = SingularityCensus::new(vec![
            (ORDINARY_TRIPLE, 6),
            (NODE, 10),
        ])
        .unwrap();
        let vb = verdict_triple(9, &ct);
        assert!(vb.applicable, "{}", vb.reason);
        assert_eq!(vb.bound_int, Some(14));
    }

    #[test]
    fn census_parsing() {
        let c = parse_census("cusp:9, node:3").unwrap();
        assert_eq!(c.total_tau(), 9 * 2 + 3);
        assert_eq!(census_text(&c), "{cusp: 9, node: 3}");
        let c2 = parse_census("A5:18").unwrap();
        assert_eq!(c2.total_tau(), 90);
        assert_eq!(parse_census("").unwrap().is_empty(), true);
        assert!(parse_census("q7:1").is_err());
        assert!(parse_census("node").is_err());
        assert!(parse_census("E9:1").is_err());
        assert_eq!(
            parse_singularity_type("mult5").unwrap(),
            SingularityType::OrdinaryMult(5)
        );
        assert_eq!(parse_singularity_type("Triple").unwrap(), ORDINARY_TRIPLE);
    }
}
