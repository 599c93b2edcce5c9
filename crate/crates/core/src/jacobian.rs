//! The invariant chain of a reduced plane curve.
//!
//! For a homogeneous f of degree d, this module computes the graded pieces
//! of the Jacobian ideal J_f = ⟨f_x, f_y, f_z⟩, the dimensions of the
//! degree-r relation spaces AR(f)_r and the minimal relation degree mdr(f),
//! the Milnor-algebra dimensions and the total Tjurina number τ, the
//! saturation I_f of J_f with respect to ⟨x,y,z⟩, the graded dimensions
//! n_j = dim(I_f/J_f)_j, and the defect ν = max_j n_j with its free /
//! nearly-free classification.
//!
//! Reducedness is certified by Hilbert-function stabilization: for reduced
//! curves, dim(S/J_f)_j is constant (equal to τ) from degree T+1 on, where
//! T = 3(d−2). Saturation proceeds by descending colon steps
//! I_j = {g : xg, yg, zg ∈ I_{j+1}} starting from I_{T+1} = J_{T+1}; the
//! recursion works with the *equations* (left annihilators) of each piece,
//! so a colon step is a kernel of a small stacked matrix rather than a
//! large preimage elimination.
//!
//! Two independent strategies back every dimension. [`analyze`] runs the
//! whole graded profile over GF(p) for successive primes of the fixed
//! descending 31-bit ladder until two consecutive primes produce identical
//! profiles; a modular rank can only undercount, so agreement plus the
//! structural self-checks (n-sequence symmetry, J ⊆ I containment, τ
//! stabilization) pins the rational answer. [`saturate`] and
//! [`jacobian_piece`] recompute exact rational bases with certified
//! integer kernels and cross-check their dimensions against the profile.

use num_bigint::BigInt;

use crate::forms::{monomial_count, monomial_index, Form, MonomialBasis};
use crate::linalg::int_mat::IntMat;
use crate::linalg::modular::{self, certify_kernel, ModMat};
use crate::linalg::ExactMatrix;

/// Attempt cap for the consecutive-agreement prime loop; disagreement this
/// deep means the input is adversarial beyond the design envelope.
const MAX_PRIME_ATTEMPTS: usize = 8;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum JacobianError {
    #[error("degree-0 input does not define a curve")]
    DegreeZero,
    #[error("the zero polynomial does not define a curve")]
    ZeroPolynomial,
    #[error(
        "non-reduced or non-isolated singularities: the Milnor algebra dimension does not \
         stabilize ({dim_a} in degree {degree_a} vs {dim_b} in degree {degree_b})"
    )]
    NonReduced {
        degree_a: usize,
        dim_a: usize,
        degree_b: usize,
        dim_b: usize,
    },
    #[error(
        "internal self-check failed: Jacobian-module dimensions are not symmetric \
         (n_{j} = {left} but n_{mirror} = {right})"
    )]
    SymmetryViolation {
        j: usize,
        mirror: usize,
        left: usize,
        right: usize,
    },
    #[error(
        "modular profiles kept disagreeing after {attempts} primes; \
         input is outside the design envelope"
    )]
    Unstable { attempts: usize },
}

/// A linear subspace of one graded piece S_j, given by a column basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace {
    degree: usize,
    basis: ExactMatrix,
}

impl GradedSubspace {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Dimension of the ambient graded piece S_j.
    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    /// Columns are coefficient vectors in the monomial basis of S_j.
    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Free,
    NearlyFree,
    Defect(usize),
}

impl Classification {
    pub fn from_nu(nu: usize) -> Classification {
        match nu {
            0 => Classification::Free,
            1 => Classification::NearlyFree,
            v => Classification::Defect(v),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Classification::Free => "free".into(),
            Classification::NearlyFree => "nearly_free".into(),
            Classification::Defect(v) => format!("defect({v})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianProfile {
    pub d: usize,
    pub mdr: usize,
    pub tau: usize,
    /// n_j for j = 0 ..= 3(d−2); empty when d < 2.
    pub n_seq: Vec<usize>,
    pub nu: usize,
    pub classification: Classification,
}

/// Everything [`analyze`] produces: the profile plus the graded dimension
/// data and the certification trail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveAnalysis {
    pub profile: JacobianProfile,
    /// dim J_{f,j} for j = 0 ..= 3(d−2)+1 (empty when d < 2).
    pub jacobian_dims: Vec<usize>,
    /// dim I_{f,j} for j = 0 ..= 3(d−2)+1 (empty when d < 2).
    pub saturation_dims: Vec<usize>,
    /// Whether J_{f,j} ⊆ I_{f,j} held in every degree at every prime used.
    pub containment_certified: bool,
    /// The primes whose profiles agreed.
    pub primes: Vec<u64>,
}

struct PartialsInt {
    coeffs: [Vec<BigInt>; 3],
    degree: usize, // d − 1
}

fn prep(f: &Form) -> Result<(usize, PartialsInt), JacobianError> {
    let d = f.degree();
    if d == 0 {
        return Err(JacobianError::DegreeZero);
    }
    if f.is_zero() {
        return Err(JacobianError::ZeroPolynomial);
    }
    let fint = Form::from_coeffs(
        d,
        f.primitive_integer_coeffs()
            .into_iter()
            .map(crate::scalar::Scalar::from_integer)
            .collect(),
    );
    let (fx, fy, fz) = fint.partials().expect("degree checked above");
    let take = |g: Form| -> Vec<BigInt> { g.coeffs().iter().map(|c| c.numer().clone()).collect() };
    Ok((
        d,
        PartialsInt {
            coeffs: [take(fx), take(fy), take(fz)],
            degree: d - 1,
        },
    ))
}

// ---------------------------------------------------------------------------
// exact-integer path (bases)
// ---------------------------------------------------------------------------

/// Multiplication map S_src → S_{src+deg g}, v ↦ g·v, as an integer matrix.
fn mult_matrix(g: &[BigInt], gdeg: usize, src_deg: usize) -> IntMat {
    use num_traits::Zero;
    let src = MonomialBasis::new(src_deg);
    let gb = MonomialBasis::new(gdeg);
    let tgt = src_deg + gdeg;
    let mut m = IntMat::zeros(monomial_count(tgt), src.len());
    for (gi, gc) in g.iter().enumerate() {
        if gc.is_zero() {
            continue;
        }
        let (p, q, _) = gb.entries()[gi];
        for (ci, &(a, b, _)) in src.entries().iter().enumerate() {
            m.set(monomial_index(tgt, a + p, b + q), ci, gc.clone());
        }
    }
    m
}

/// The degree-j piece of the Jacobian map S_{j−d+1}³ → S_j, columns
/// [a·f_x | b·f_y | c·f_z]; `None` when j < d−1.
fn jac_matrix(partials: &PartialsInt, d: usize, j: usize) -> Option<IntMat> {
    if j + 1 < d {
        return None;
    }
    let src = j + 1 - d;
    let blocks: Vec<IntMat> = partials
        .coeffs
        .iter()
        .map(|p| mult_matrix(p, partials.degree, src))
        .collect();
    Some(IntMat::hstack(&[&blocks[0], &blocks[1], &blocks[2]]))
}

/// Left annihilator (row space of equations) of the span of `cols` inside
/// the `ambient`-dimensional graded piece.
fn annihilator_of(cols: &[Vec<BigInt>], ambient: usize) -> IntMat {
    let bt = IntMat::from_rows(cols, ambient);
    IntMat::from_rows(&certify_kernel(&bt).kernel, ambient)
}

// ---------------------------------------------------------------------------
// modular path (dimensions)
// ---------------------------------------------------------------------------

/// Multiplication map mod p, same layout as [`mult_matrix`].
fn mult_matrix_mod(g: &[u64], gdeg: usize, src_deg: usize, p: u64) -> ModMat {
    let src = MonomialBasis::new(src_deg);
    let gb = MonomialBasis::new(gdeg);
    let tgt = src_deg + gdeg;
    let mut m = ModMat::zeros(p, monomial_count(tgt), src.len());
    for (gi, &gc) in g.iter().enumerate() {
        if gc == 0 {
            continue;
        }
        let (a0, b0, _) = gb.entries()[gi];
        for (ci, &(a, b, _)) in src.entries().iter().enumerate() {
            m.set(monomial_index(tgt, a + a0, b + b0), ci, gc);
        }
    }
    m
}

fn jac_matrix_mod(pc: &[Vec<u64>; 3], pdeg: usize, d: usize, j: usize, p: u64) -> Option<ModMat> {
    if j + 1 < d {
        return None;
    }
    let src = j + 1 - d;
    let blocks: Vec<ModMat> = pc
        .iter()
        .map(|g| mult_matrix_mod(g, pdeg, src, p))
        .collect();
    let w = monomial_count(src);
    let mut m = ModMat::zeros(p, monomial_count(j), 3 * w);
    for (bi, b) in blocks.iter().enumerate() {
        for i in 0..b.rows() {
            for c in 0..w {
                let v = b.get(i, c);
                if v != 0 {
                    m.set(i, bi * w + c, v);
                }
            }
        }
    }
    Some(m)
}

/// Column-index maps that realize multiplication by x, y, z on equation
/// matrices: entry i of each map is the degree-(j+1) position of the
/// i-th degree-j monomial shifted by that variable.
fn shift_maps(j: usize) -> [Vec<usize>; 3] {
    let basis = MonomialBasis::new(j);
    let gather = |dx: usize, dy: usize| -> Vec<usize> {
        basis
            .entries()
            .iter()
            .map(|&(a, b, _)| monomial_index(j + 1, a + dx, b + dy))
            .collect()
    };
    [gather(1, 0), gather(0, 1), gather(0, 0)]
}

#[derive(PartialEq, Eq)]
struct ModProfile {
    /// dim J_{f,j} for j = 0..=T+2.
    jdims: Vec<usize>,
    /// dim I_{f,j} for j = 0..=T+1.
    idims: Vec<usize>,
}

/// One full graded profile over GF(p), plus the degreewise J ⊆ I check.
fn profile_mod(d: usize, partials: &PartialsInt, p: u64) -> (ModProfile, bool) {
    let t = 3 * (d - 2);
    let pc: [Vec<u64>; 3] = [
        modular::reduce_vec(&partials.coeffs[0], p),
        modular::reduce_vec(&partials.coeffs[1], p),
        modular::reduce_vec(&partials.coeffs[2], p),
    ];
    let pdeg = partials.degree;
    let mut jdims = vec![0usize; t + 3];
    let mut idims = vec![0usize; t + 2];
    let mut containment = true;

    jdims[t + 2] = jac_matrix_mod(&pc, pdeg, d, t + 2, p)
        .map(|m| m.rref().rank)
        .unwrap_or(0);

    // base of the recursion: I_{T+1} = J_{T+1}, whose equations are the
    // kernel of the transposed Jacobian map
    let base = jac_matrix_mod(&pc, pdeg, d, t + 1, p).expect("T+1 >= d-1");
    let rr = base.transpose().rref();
    jdims[t + 1] = rr.rank;
    idims[t + 1] = rr.rank;
    let mut ann = rr.kernel_rows();

    for j in (0..=t).rev() {
        let nj = monomial_count(j);
        let stacked = if ann.rows() == 0 {
            ModMat::zeros(p, 0, nj)
        } else {
            let maps = shift_maps(j);
            let gx = ann.gather_cols(&maps[0]);
            let gy = ann.gather_cols(&maps[1]);
            let gz = ann.gather_cols(&maps[2]);
            ModMat::vstack(&[&gx, &gy, &gz])
        };
        let rr = stacked.rref();
        idims[j] = nj - rr.rank;
        let eq = rr.row_basis();
        if let Some(jm) = jac_matrix_mod(&pc, pdeg, d, j, p) {
            if eq.rows() > 0 && !eq.matmul(&jm).is_zero() {
                containment = false;
            }
            jdims[j] = jm.rref().rank;
        }
        ann = eq;
    }
    (ModProfile { jdims, idims }, containment)
}

/// Run a per-prime computation down the ladder until two consecutive
/// primes agree, returning the agreed value, the conjunction of the two
/// per-prime check flags, and the two primes.
fn agree<T: PartialEq>(
    mut compute: impl FnMut(u64) -> (T, bool),
) -> Result<(T, bool, Vec<u64>), JacobianError> {
    let mut primes = modular::cert_primes();
    let mut prev: Option<(u64, T, bool)> = None;
    for _ in 0..MAX_PRIME_ATTEMPTS {
        let p = primes.next().expect("31-bit prime ladder is long enough");
        let (value, ok) = compute(p);
        match prev {
            Some((q, pv, pok)) if pv == value => return Ok((value, ok && pok, vec![q, p])),
            _ => prev = Some((p, value, ok)),
        }
    }
    Err(JacobianError::Unstable {
        attempts: MAX_PRIME_ATTEMPTS,
    })
}

/// dim J_{f,j} at each requested degree, by two-prime agreement.
fn jac_ranks_at(
    d: usize,
    partials: &PartialsInt,
    degrees: &[usize],
) -> Result<Vec<usize>, JacobianError> {
    let pdeg = partials.degree;
    let (ranks, _, _) = agree(|p| {
        let pc: [Vec<u64>; 3] = [
            modular::reduce_vec(&partials.coeffs[0], p),
            modular::reduce_vec(&partials.coeffs[1], p),
            modular::reduce_vec(&partials.coeffs[2], p),
        ];
        let ranks: Vec<usize> = degrees
            .iter()
            .map(|&j| {
                jac_matrix_mod(&pc, pdeg, d, j, p)
                    .map(|m| m.rref().rank)
                    .unwrap_or(0)
            })
            .collect();
        (ranks, true)
    })?;
    Ok(ranks)
}

// ---------------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------------

/// Basis of J_{f,j} (pivot columns of the Jacobian map, exact and
/// certified). Zero subspace for j < d−1.
pub fn jacobian_piece(f: &Form, j: usize) -> Result<GradedSubspace, JacobianError> {
    let (d, partials) = prep(f)?;
    let cols = match jac_matrix(&partials, d, j) {
        None => Vec::new(),
        Some(m) => {
            let ck = certify_kernel(&m);
            ck.pivot_cols.iter().map(|&c| m.col_vec(c)).collect()
        }
    };
    Ok(GradedSubspace {
        degree: j,
        basis: ExactMatrix::from_int_columns(monomial_count(j), &cols),
    })
}

/// dim AR(f)_r: relations (a,b,c) of degree r with a·f_x + b·f_y + c·f_z = 0.
pub fn ar_dim(f: &Form, r: usize) -> Result<usize, JacobianError> {
    let (d, partials) = prep(f)?;
    let rank = jac_ranks_at(d, &partials, &[r + d - 1])?[0];
    Ok(3 * monomial_count(r) - rank)
}

/// Minimal degree of a relation among the partial derivatives; at most d−1
/// because the Koszul relations live there.
pub fn mdr(f: &Form) -> Result<usize, JacobianError> {
    let (d, partials) = prep(f)?;
    let degrees: Vec<usize> = (0..d).map(|r| r + d - 1).collect();
    let ranks = jac_ranks_at(d, &partials, &degrees)?;
    Ok((0..d)
        .find(|&r| 3 * monomial_count(r) > ranks[r])
        .expect("a Koszul relation exists in degree d-1"))
}

/// dim (S/J_f)_j.
pub fn milnor_dim(f: &Form, j: usize) -> Result<usize, JacobianError> {
    let (d, partials) = prep(f)?;
    let rank = jac_ranks_at(d, &partials, &[j])?[0];
    Ok(monomial_count(j) - rank)
}

/// Total Tjurina number, with the stabilization certificate at degrees
/// T+1 and T+2, T = 3(d−2). Fails on non-reduced input.
pub fn tau(f: &Form) -> Result<usize, JacobianError> {
    tau_with_margin(f, 0)
}

/// Like [`tau`], checking `margin` extra consecutive degrees beyond T+2.
pub fn tau_with_margin(f: &Form, margin: usize) -> Result<usize, JacobianError> {
    let (d, partials) = prep(f)?;
    if d == 1 {
        return Ok(0);
    }
    let t = 3 * (d - 2);
    let degrees: Vec<usize> = (0..=1 + margin).map(|e| t + 1 + e).collect();
    let ranks = jac_ranks_at(d, &partials, &degrees)?;
    let base = monomial_count(t + 1) - ranks[0];
    for (e, &rk) in ranks.iter().enumerate().skip(1) {
        let j = t + 1 + e;
        let next = monomial_count(j) - rk;
        if next != base {
            return Err(JacobianError::NonReduced {
                degree_a: t + 1,
                dim_a: base,
                degree_b: j,
                dim_b: next,
            });
        }
    }
    Ok(base)
}

fn trivial_line_analysis() -> CurveAnalysis {
    CurveAnalysis {
        profile: JacobianProfile {
            d: 1,
            mdr: 0,
            tau: 0,
            n_seq: Vec::new(),
            nu: 0,
            classification: Classification::Free,
        },
        jacobian_dims: Vec::new(),
        saturation_dims: Vec::new(),
        containment_certified: true,
        primes: Vec::new(),
    }
}

/// Full pipeline: τ certificate, mdr scan, saturation descent, Jacobian
/// module dimensions, defect and classification.
pub fn analyze(f: &Form) -> Result<CurveAnalysis, JacobianError> {
    let (d, partials) = prep(f)?;
    if d == 1 {
        return Ok(trivial_line_analysis());
    }
    let t = 3 * (d - 2);
    let (prof, containment, primes) = agree(|p| profile_mod(d, &partials, p))?;
    let ModProfile { jdims, idims } = prof;

    let m1 = monomial_count(t + 1) - jdims[t + 1];
    let m2 = monomial_count(t + 2) - jdims[t + 2];
    if m1 != m2 {
        return Err(JacobianError::NonReduced {
            degree_a: t + 1,
            dim_a: m1,
            degree_b: t + 2,
            dim_b: m2,
        });
    }
    let tau = m1;
    let mdr = (0..d)
        .find(|&r| 3 * monomial_count(r) > jdims[r + d - 1])
        .expect("a Koszul relation exists in degree d-1");

    let mut n_seq = Vec::with_capacity(t + 1);
    for j in 0..=t {
        assert!(
            idims[j] >= jdims[j],
            "saturation lost the Jacobian piece in degree {j} ({} < {})",
            idims[j],
            jdims[j]
        );
        n_seq.push(idims[j] - jdims[j]);
    }
    for j in 0..=t {
        if n_seq[j] != n_seq[t - j] {
            return Err(JacobianError::SymmetryViolation {
                j,
                mirror: t - j,
                left: n_seq[j],
                right: n_seq[t - j],
            });
        }
    }
    let nu = n_seq.iter().copied().max().unwrap_or(0);
    Ok(CurveAnalysis {
        profile: JacobianProfile {
            d,
            mdr,
            tau,
            n_seq,
            nu,
            classification: Classification::from_nu(nu),
        },
        jacobian_dims: jdims[..=t + 1].to_vec(),
        saturation_dims: idims,
        containment_certified: containment,
        primes,
    })
}

/// Saturation pieces I_{f,j} for j = 0 ..= 3(d−2)+1, as exact rational
/// bases computed by the certified integer-kernel recursion. Dimensions
/// are cross-checked against the modular profile of [`analyze`]; this is
/// the expensive exact strategy, intended for moderate coefficient sizes.
pub fn saturate(f: &Form) -> Result<Vec<GradedSubspace>, JacobianError> {
    let analysis = analyze(f)?;
    let (d, partials) = prep(f)?;
    if d == 1 {
        return Ok(Vec::new());
    }
    let t = 3 * (d - 2);
    let mut bases: Vec<Vec<Vec<BigInt>>> = vec![Vec::new(); t + 2];
    let base = jac_matrix(&partials, d, t + 1).expect("T+1 >= d-1");
    let ck = certify_kernel(&base);
    bases[t + 1] = ck.pivot_cols.iter().map(|&c| base.col_vec(c)).collect();
    let mut ann = annihilator_of(&bases[t + 1], monomial_count(t + 1));
    for j in (0..=t).rev() {
        let nj = monomial_count(j);
        let stacked = if ann.rows() == 0 {
            IntMat::zeros(0, nj)
        } else {
            let maps = shift_maps(j);
            let gx = ann.gather_cols(&maps[0]);
            let gy = ann.gather_cols(&maps[1]);
            let gz = ann.gather_cols(&maps[2]);
            IntMat::vstack(&[&gx, &gy, &gz])
        };
        let ck = certify_kernel(&stacked);
        ann = annihilator_of(&ck.kernel, nj);
        bases[j] = ck.kernel;
    }
    for (j, b) in bases.iter().enumerate() {
        assert_eq!(
            b.len(),
            analysis.saturation_dims[j],
            "exact and modular saturation dimensions disagree in degree {j}"
        );
    }
    Ok(bases
        .into_iter()
        .enumerate()
        .map(|(j, cols)| GradedSubspace {
            degree: j,
            basis: ExactMatrix::from_int_columns(monomial_count(j), &cols),
        })
        .collect())
}

/// The sequence n_j = dim (I_f/J_f)_j for j = 0 ..= 3(d−2).
pub fn jacobian_module_dims(f: &Form) -> Result<Vec<usize>, JacobianError> {
    Ok(analyze(f)?.profile.n_seq)
}

/// The assembled profile (d, mdr, τ, n-sequence, ν, classification).
pub fn profile(f: &Form) -> Result<JacobianProfile, JacobianError> {
    Ok(analyze(f)?.profile)
}

/// Outcome of checking the measured defect against the two-case closed
/// formula in d, r = mdr and τ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectCrosscheck {
    /// (d−1)² − r(d−1−r) − τ, when r < (d−1)/2.
    pub low_case: Option<i64>,
    /// ⌈3(d−1)²/4⌉ − τ, when r ≥ (d−2)/2.
    pub high_case: Option<i64>,
    pub measured: usize,
    pub agree: bool,
}

/// Evaluates every applicable case of the defect formula and compares with
/// the measured ν. Every integer r falls in at least one case.
pub fn defect_formula_crosscheck(p: &JacobianProfile) -> DefectCrosscheck {
    let d = p.d as i64;
    let r = p.mdr as i64;
    let tau = p.tau as i64;
    let low_case = if 2 * r < d - 1 {
        Some((d - 1) * (d - 1) - r * (d - 1 - r) - tau)
    } else {
        None
    };
    let high_case = if 2 * r >= d - 2 {
        Some((3 * (d - 1) * (d - 1) + 3).div_euclid(4) - tau)
    } else {
        None
    };
    let agree = low_case
        .iter()
        .chain(high_case.iter())
        .all(|&v| v == p.nu as i64);
    DefectCrosscheck {
        low_case,
        high_case,
        measured: p.nu,
        agree,
    }
}
