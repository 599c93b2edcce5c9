//! Tabulated attributes of simple curve singularities (log canonical
//! threshold, local Tjurina number, delta invariant), census arithmetic
//! (Arnold exponent, genus), the minimal-relation-degree lower bound, the
//! du Plessis–Wall Tjurina bound, and the four named defect bounds exposed
//! by the CLI (`A`..`D`).
//!
//! The A/D/E thresholds come from the quasi-homogeneous weights of the
//! normal forms (lct = w_x + w_y): A(n): x² + y^{n+1} gives 1/2 + 1/(n+1);
//! D(n): x(y² + x^{n−2}) gives n/(2(n−1)); E6: x³+y⁴ → 7/12; E7: x(x²+y³)
//! → 5/9; E8: x³+y⁵ → 8/15. Ordinary points of multiplicity r have
//! threshold 2/r, matching A(1) at r=2 and D(4) at r=3.

use num_bigint::BigInt;
use num_traits::One;

use crate::scalar::{self, Scalar};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SingularityError {
    #[error("invalid singularity parameter: {0}")]
    InvalidParameter(String),
    #[error("delta invariant is only tabulated for nodes, cusps and ordinary multiple points; got {0}")]
    DeltaUnavailable(String),
    #[error("census inconsistent: genus would be negative ({0})")]
    NegativeGenus(i64),
}

/// A simple plane curve singularity type. `A(1)` is a node, `A(2)` a cusp,
/// `D(4)` an ordinary triple point, and `OrdinaryMult(r)` an ordinary point
/// of multiplicity r (r distinct tangent directions).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SingularityType {
    A(u32),
    D(u32),
    E(u32),
    OrdinaryMult(u32),
}

pub const NODE: SingularityType = SingularityType::A(1);
pub const CUSP: SingularityType = SingularityType::A(2);
pub const ORDINARY_TRIPLE: SingularityType = SingularityType::D(4);

impl SingularityType {
    /// Validates the parameter ranges: A(n ≥ 1), D(n ≥ 4), E(6|7|8),
    /// OrdinaryMult(r ≥ 2).
    pub fn validate(&self) -> Result<(), SingularityError> {
        let bad = |s: String| Err(SingularityError::InvalidParameter(s));
        match *self {
            SingularityType::A(n) if n < 1 => bad(format!("A({n}) requires n >= 1")),
            SingularityType::D(n) if n < 4 => bad(format!("D({n}) requires n >= 4")),
            SingularityType::E(n) if !(6..=8).contains(&n) => {
                bad(format!("E({n}) requires n in 6..=8"))
            }
            SingularityType::OrdinaryMult(r) if r < 2 => {
                bad(format!("OrdinaryMult({r}) requires r >= 2"))
            }
            _ => Ok(()),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            SingularityType::A(1) => "node".into(),
            SingularityType::A(2) => "cusp".into(),
            SingularityType::A(n) => format!("A{n}"),
            SingularityType::D(4) => "ordinary_triple".into(),
            SingularityType::D(n) => format!("D{n}"),
            SingularityType::E(n) => format!("E{n}"),
            SingularityType::OrdinaryMult(r) => format!("ordinary_mult({r})"),
        }
    }
}

impl std::fmt::Display for SingularityType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label())
    }
}

/// Log canonical threshold; always in (0, 1].
pub fn lct(s: SingularityType) -> Scalar {
    s.validate().expect("invalid singularity type");
    let q = |n: i64, d: i64| scalar::ratio(n, d);
    match s {
        SingularityType::A(n) => q(1, 2) + q(1, n as i64 + 1),
        SingularityType::D(n) => q(n as i64, 2 * (n as i64 - 1)),
        SingularityType::E(6) => q(7, 12),
        SingularityType::E(7) => q(5, 9),
        SingularityType::E(8) => q(8, 15),
        SingularityType::E(_) => unreachable!("validated"),
        SingularityType::OrdinaryMult(r) => q(2, r as i64),
    }
}

/// Local Tjurina number. A/D/E singularities are quasi-homogeneous, so
/// τ = μ = n; an ordinary r-fold point has τ = (r−1)².
pub fn tau_local(s: SingularityType) -> usize {
    s.validate().expect("invalid singularity type");
    match s {
        SingularityType::A(n) | SingularityType::D(n) | SingularityType::E(n) => n as usize,
        SingularityType::OrdinaryMult(r) => ((r - 1) * (r - 1)) as usize,
    }
}

/// Delta invariant, tabulated only for the types the genus bookkeeping
/// needs: nodes, cusps, and ordinary r-fold points (δ = r(r−1)/2).
pub fn delta_local(s: SingularityType) -> Result<usize, SingularityError> {
    s.validate().expect("invalid singularity type");
    match s {
        SingularityType::A(1) | SingularityType::A(2) => Ok(1),
        SingularityType::D(4) => Ok(3),
        SingularityType::OrdinaryMult(r) => Ok((r * (r - 1) / 2) as usize),
        other => Err(SingularityError::DeltaUnavailable(other.label())),
    }
}

/// A multiset of singularity types with positive counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityCensus {
    entries: Vec<(SingularityType, usize)>,
}

impl SingularityCensus {
    pub fn new(entries: Vec<(SingularityType, usize)>) -> Result<SingularityCensus, SingularityError> {
        for (s, count) in &entries {
            s.validate()?;
            if *count == 0 {
                return Err(SingularityError::InvalidParameter(format!(
                    "census count for {s} must be positive"
                )));
            }
        }
        Ok(SingularityCensus { entries })
    }

    pub fn empty() -> SingularityCensus {
        SingularityCensus { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[(SingularityType, usize)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Σ count · τ_local.
    pub fn total_tau(&self) -> usize {
        self.entries.iter().map(|&(s, c)| c * tau_local(s)).sum()
    }

    /// Σ count · δ_local; fails if any entry has no tabulated δ.
    pub fn total_delta(&self) -> Result<usize, SingularityError> {
        let mut acc = 0;
        for &(s, c) in &self.entries {
            acc += c * delta_local(s)?;
        }
        Ok(acc)
    }
}

/// The Arnold exponent: the minimum log canonical threshold over the
/// census. `None` for an empty census (a smooth curve: the minimum over
/// nothing is +∞ and the relation-degree bound does not apply).
pub fn arnold_exponent(c: &SingularityCensus) -> Option<Scalar> {
    c.entries.iter().map(|&(s, _)| lct(s)).min()
}

/// The raw relation-degree bound α·d − 2 as an exact rational.
pub fn mdr_bound_raw(alpha: &Scalar, d: usize) -> Scalar {
    alpha * Scalar::from_integer(BigInt::from(d)) - Scalar::from_integer(BigInt::from(2))
}

/// ⌈α·d − 2⌉: the sharp integer form of the relation-degree bound for
/// curves all of whose singularities are quasi-homogeneous.
pub fn mdr_lower_bound(alpha: &Scalar, d: usize) -> i64 {
    let c = scalar::ceil_int(&mdr_bound_raw(alpha, d));
    i64::try_from(&c).expect("bound fits in i64")
}

fn binom2(n: i64) -> i64 {
    if n >= 2 {
        n * (n - 1) / 2
    } else {
        0
    }
}

/// The du Plessis–Wall upper bound for the total Tjurina number of a
/// degree-d curve with minimal relation degree r:
/// (d−1)(d−r−1) + r² − C(2r−d+2, 2), the binomial term dropping out when
/// its argument is below 2. Requires 0 ≤ r ≤ d−1.
pub fn dpw_tau_max(d: usize, r: usize) -> i64 {
    assert!(d >= 1 && r <= d - 1, "dpw_tau_max requires 0 <= r <= d-1");
    let (d, r) = (d as i64, r as i64);
    (d - 1) * (d - r - 1) + r * r - binom2(2 * r - d + 2)
}

/// Genus of a degree-d curve whose singularities are exactly the census:
/// (d−1)(d−2)/2 − Σ count·δ. A negative value means the census cannot
/// occur on an irreducible curve of this degree.
pub fn genus(d: usize, c: &SingularityCensus) -> Result<i64, SingularityError> {
    let d = d as i64;
    let g = (d - 1) * (d - 2) / 2 - c.total_delta()? as i64;
    if g < 0 {
        return Err(SingularityError::NegativeGenus(g));
    }
    Ok(g)
}

/// How a verdict's bound relates to the measured defect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    AtLeast,
    Equal,
}

/// Outcome of one of the named defect bounds. When the hypotheses fail
/// the verdict is explicitly non-applicable — never a silent pass or fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    /// Selector under which the CLI exposes this bound (A, B, C or D).
    pub kind: char,
    pub applicable: bool,
    /// Why the hypotheses fail, or a summary of the applicable bound.
    pub reason: String,
    /// Exact rational bound (A, B), exact value (C), or 1 (D).
    pub bound: Option<Scalar>,
    /// Integer threshold implied for the integer-valued defect.
    pub bound_int: Option<i64>,
    pub relation: Relation,
    /// Ordered extra facts for rendering (chain values, genus, ...).
    pub detail: Vec<(String, String)>,
    pub measured: Option<usize>,
    /// Comparison outcome when a measurement is attached.
    pub holds: Option<bool>,
}

impl Verdict {
    pub fn not_applicable(kind: char, reason: String) -> Verdict {
        Verdict {
            kind,
            applicable: false,
            reason,
            bound: None,
            bound_int: None,
            relation: Relation::AtLeast,
            detail: Vec::new(),
            measured: None,
            holds: None,
        }
    }

    /// Attach a measured defect and record whether the bound holds.
    pub fn with_measured(mut self, nu: usize) -> Verdict {
        self.measured = Some(nu);
        if self.applicable {
            if let Some(b) = self.bound_int {
                self.holds = Some(match self.relation {
                    Relation::AtLeast => nu as i64 >= b,
                    Relation::Equal => nu as i64 == b,
                });
            }
        }
        self
    }
}

/// Bound A — rational curves of degree d ≥ 4 with only nodes:
/// ν ≥ (d²−1)/4.
pub fn bound_nodal(d: usize) -> Verdict {
    if d < 4 {
        return Verdict::not_applicable('A', format!("requires degree >= 4, got {d}"));
    }
    let dd = d as i64;
    let bound = scalar::ratio(dd * dd - 1, 4);
    let bound_int = i64::try_from(&scalar::ceil_int(&bound)).expect("fits");
    Verdict {
        kind: 'A',
        applicable: true,
        reason: format!("rational nodal curve of degree {d}"),
        bound: Some(bound),
        bound_int: Some(bound_int),
        relation: Relation::AtLeast,
        detail: Vec::new(),
        measured: None,
        holds: None,
    }
}

/// Bound B — genus-zero curves of degree 3k (k ≥ 3) with 2k ordinary
/// triple points and nodes: ν ≥ (9k+1)(k−1)/4.
pub fn bound_triple(k: usize) -> Verdict {
    if k < 3 {
        return Verdict::not_applicable('B', format!("requires k >= 3, got {k}"));
    }
    let kk = k as i64;
    let bound = scalar::ratio((9 * kk + 1) * (kk - 1), 4);
    let bound_int = i64::try_from(&scalar::ceil_int(&bound)).expect("fits");
    let nodes = (9 * kk * kk - 21 * kk + 2) / 2;
    Verdict {
        kind: 'B',
        applicable: true,
        reason: format!(
            "genus-zero curve of degree {} with {} ordinary triple points and {} nodes",
            3 * k,
            2 * k,
            nodes
        ),
        bound: Some(bound),
        bound_int: Some(bound_int),
        relation: Relation::AtLeast,
        detail: vec![("nodes".into(), nodes.to_string())],
        measured: None,
        holds: None,
    }
}

/// Bound C — the cuspidal family of degree 6k with 9k² ordinary cusps:
/// ν = 9k²−9k+1, which is exactly the genus of the curve.
pub fn bound_cuspidal(k: usize) -> Verdict {
    if k < 1 {
        return Verdict::not_applicable('C', "requires k >= 1".into());
    }
    let kk = k as i64;
    let value = 9 * kk * kk - 9 * kk + 1;
    let census = SingularityCensus::new(vec![(CUSP, 9 * k * k)]).expect("valid census");
    let g = genus(6 * k, &census).expect("nonnegative by the closed formula");
    assert_eq!(g, value, "defect value and genus must coincide");
    Verdict {
        kind: 'C',
        applicable: true,
        reason: format!("cuspidal curve of degree {} with {} cusps", 6 * k, 9 * k * k),
        bound: Some(Scalar::from_integer(BigInt::from(value))),
        bound_int: Some(value),
        relation: Relation::Equal,
        detail: vec![("genus".into(), g.to_string())],
        measured: None,
        holds: None,
    }
}

fn is_ade(s: SingularityType) -> bool {
    match s {
        SingularityType::A(_) | SingularityType::D(_) | SingularityType::E(_) => true,
        SingularityType::OrdinaryMult(r) => r <= 3, // r=2 is A(1), r=3 is D(4)
    }
}

/// Bound D — non-freeness of even-degree curves with simple singularities:
/// if d = 2m ≥ 4, every singularity is of type A/D/E and the Arnold
/// exponent satisfies α ≥ 1/2 + 1/m, then mdr ≥ m, hence
/// τ ≤ τ_max(2m, m) = 3m²−3m, hence ν ≥ 1: the curve is not free.
pub fn bound_nonfree(d: usize, census: &SingularityCensus) -> Verdict {
    if d < 4 || d % 2 != 0 {
        return Verdict::not_applicable('D', format!("requires even degree >= 4, got {d}"));
    }
    let m = d / 2;
    if census.is_empty() {
        return Verdict::not_applicable('D', "smooth curve: no singularities to bound".into());
    }
    if let Some(&(s, _)) = census.entries().iter().find(|&&(s, _)| !is_ade(s)) {
        return Verdict::not_applicable('D', format!("census contains non-simple type {s}"));
    }
    let alpha = arnold_exponent(census).expect("census non-empty");
    let threshold = scalar::ratio(1, 2) + scalar::ratio(1, m as i64);
    if alpha < threshold {
        return Verdict::not_applicable(
            'D',
            format!(
                "Arnold exponent {} is below 1/2 + 1/{} = {}",
                scalar::render(&alpha),
                m,
                scalar::render(&threshold)
            ),
        );
    }
    let mdr_min = mdr_lower_bound(&alpha, d);
    debug_assert!(mdr_min >= m as i64);
    let tau_cap = dpw_tau_max(d, m);
    debug_assert_eq!(tau_cap, 3 * (m as i64) * (m as i64) - 3 * (m as i64));
    Verdict {
        kind: 'D',
        applicable: true,
        reason: format!("even degree {d} with simple singularities and large Arnold exponent"),
        bound: Some(Scalar::one()),
        bound_int: Some(1),
        relation: Relation::AtLeast,
        detail: vec![
            ("alpha".into(), scalar::render(&alpha)),
            ("alpha_threshold".into(), scalar::render(&threshold)),
            ("mdr_min".into(), mdr_min.to_string()),
            ("tau_max".into(), tau_cap.to_string()),
        ],
        measured: None,
        holds: None,
    }
}

/// Max coefficient of ((1 − t^{d−1})/(1 − t))³, the defect of the smooth
/// degree-d curve, computed by direct polynomial multiplication.
pub fn smooth_defect(d: usize) -> usize {
    assert!(d >= 1);
    if d == 1 {
        return 0;
    }
    // (1 + t + ... + t^{d-2})³
    let block = vec![1u64; d - 1];
    let mut acc = vec![1u64];
    for _ in 0..3 {
        let mut next = vec![0u64; acc.len() + block.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in block.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc.into_iter().max().unwrap_or(0) as usize
}

/// Render a possibly-infinite Arnold exponent.
pub fn render_alpha(alpha: &Option<Scalar>) -> String {
    match alpha {
        Some(a) => scalar::render(a),
        None => "inf".into(),
    }
}

/// ⌈3(d−1)²/4⌉ computed exactly via (3(d−1)² + 3) div 4.
pub fn ceil_three_quarters_square(d: usize) -> i64 {
    let k = (d as i64) - 1;
    (3 * k * k + 3).div_euclid(4)
}
