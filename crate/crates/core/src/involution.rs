//! The involutions on `Rep(Q, γ)` and `S_γ` as explicit matrices, and the
//! dimension counts derived from them.
//!
//! With the form `⟨x, y⟩ = Σ_v x_vᵀ γ_v y_{φ(v)}` the adjoint of an arrow map
//! gives, for `m ∈ Rep`,
//!
//! ```text
//! (m*)_{φ(a)} = σ_a ε_{h(a)} γ_{t(a)}⁻¹ m_aᵀ γ_{h(a)}
//! ```
//!
//! and for `s ∈ S_γ`, `(s*)_{φ(v)} = γ_v⁻¹ s_vᵀ γ_v`. Both are involutions
//! whenever `γ_v = ε_v γ_{φ(v)}ᵀ`. `DRep` is the `+1` eigenspace of the first
//! and the Lie algebra of `DGL` is the `-1` eigenspace of the second.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{dim_iss, DimensionVector};
use crate::setting::{Sign, SupermixedQuiver, SupermixedSetting, VertexKind};
use crate::{Rational, RationalMatrix, Scalar};

/// Offsets of each arrow's coordinate block in the flattened `Rep` space.
/// Block `a` stores `m_a` row-major, shape `γ̄_{h(a)} × γ̄_{t(a)}`.
pub fn rep_offsets(smq: &SupermixedQuiver, gamma_bar: &DimensionVector) -> Vec<usize> {
    let mut offs = Vec::with_capacity(smq.arrow_count() + 1);
    let mut acc = 0;
    for a in 0..smq.arrow_count() {
        offs.push(acc);
        acc += gamma_bar[smq.head(a)] as usize * gamma_bar[smq.tail(a)] as usize;
    }
    offs.push(acc);
    offs
}

/// Offsets of each vertex block in the flattened `S_γ` space.
pub fn s_offsets(gamma_bar: &DimensionVector) -> Vec<usize> {
    let mut offs = Vec::with_capacity(gamma_bar.len() + 1);
    let mut acc = 0;
    for &d in gamma_bar.iter() {
        offs.push(acc);
        acc += (d as usize) * (d as usize);
    }
    offs.push(acc);
    offs
}

fn sign_scalar(s: Sign) -> Rational {
    Rational::from_i64(s.value())
}

/// The matrix of `X ↦ c · A Xᵀ B` from `Mat_{p×q}` to `Mat_{q'×p'}`, with
/// `A: q'×q`, `B: p×p'`, in row-major coordinates.
fn transpose_sandwich(c: &Rational, a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let (rows_out, q) = a.shape();
    let (p, cols_out) = b.shape();
    let mut m = RationalMatrix::zeros(rows_out * cols_out, p * q);
    // (A Xᵀ B)_{rs} = Σ_{i,j} A_{r j} X_{i j} B_{i s}
    for r in 0..rows_out {
        for s in 0..cols_out {
            for i in 0..p {
                if b[(i, s)].is_zero() {
                    continue;
                }
                for j in 0..q {
                    if a[(r, j)].is_zero() {
                        continue;
                    }
                    m[(r * cols_out + s, i * q + j)] = c.clone() * a[(r, j)].clone() * b[(i, s)].clone();
                }
            }
        }
    }
    m
}

/// Block of the `Rep` involution sending arrow `a`'s coordinates to those of `φ(a)`.
pub fn rep_involution_block(
    smq: &SupermixedQuiver,
    gammas: &[RationalMatrix],
    a: usize,
) -> Result<RationalMatrix> {
    let (h, t) = (smq.head(a), smq.tail(a));
    let inv_t = gammas[t]
        .inverse()
        .ok_or_else(|| Error::Internal(format!("form at vertex {t} is singular")))?;
    let c = sign_scalar(smq.sigma(a) * smq.eps(h));
    Ok(transpose_sandwich(&c, &inv_t, &gammas[h]))
}

/// Full matrix of the involution on `Rep(Q, γ)` for explicit forms.
pub fn rep_involution_matrix(
    smq: &SupermixedQuiver,
    gamma_bar: &DimensionVector,
    gammas: &[RationalMatrix],
) -> Result<RationalMatrix> {
    let offs = rep_offsets(smq, gamma_bar);
    let n = offs[smq.arrow_count()];
    let mut m = RationalMatrix::zeros(n, n);
    for a in 0..smq.arrow_count() {
        let block = rep_involution_block(smq, gammas, a)?;
        m.set_block(offs[smq.phi_a(a)], offs[a], &block);
    }
    Ok(m)
}

/// Block of the `S_γ` involution sending vertex `v`'s coordinates to `φ(v)`'s.
pub fn s_involution_block(gammas: &[RationalMatrix], v: usize) -> Result<RationalMatrix> {
    let inv = gammas[v]
        .inverse()
        .ok_or_else(|| Error::Internal(format!("form at vertex {v} is singular")))?;
    Ok(transpose_sandwich(&Rational::one(), &inv, &gammas[v]))
}

/// Full matrix of the involution on `S_γ`.
pub fn s_involution_matrix(
    smq: &SupermixedQuiver,
    gamma_bar: &DimensionVector,
    gammas: &[RationalMatrix],
) -> Result<RationalMatrix> {
    let offs = s_offsets(gamma_bar);
    let n = offs[gamma_bar.len()];
    let mut m = RationalMatrix::zeros(n, n);
    for v in 0..smq.vertex_count() {
        let block = s_involution_block(gammas, v)?;
        m.set_block(offs[smq.phi_v(v)], offs[v], &block);
    }
    Ok(m)
}

fn to_i64(x: &Rational) -> Result<i64> {
    if !x.is_integer() {
        return Err(Error::Internal(format!("non-integral trace {x}")));
    }
    i64::try_from(x.to_integer()).map_err(|_| Error::Internal("trace overflow".into()))
}

/// Trace of the `Rep` involution: only self-dual arrows have diagonal blocks.
pub fn rep_involution_trace(s: &SupermixedSetting) -> Result<i64> {
    let gammas = s.gammas();
    let mut tr = Rational::zero();
    for a in 0..s.arrow_count() {
        if s.smq().is_self_dual(a) {
            tr = tr + rep_involution_block(s.smq(), &gammas, a)?.trace();
        }
    }
    to_i64(&tr)
}

/// Trace of the `S_γ` involution: only fixed vertices have diagonal blocks.
pub fn s_involution_trace(s: &SupermixedSetting) -> Result<i64> {
    let gammas = s.gammas();
    let mut tr = Rational::zero();
    for v in 0..s.vertex_count() {
        if s.smq().is_fixed_vertex(v) {
            tr = tr + s_involution_block(&gammas, v)?.trace();
        }
    }
    to_i64(&tr)
}

pub fn rep_dim(s: &SupermixedSetting) -> i64 {
    s.quiver()
        .arrows()
        .iter()
        .map(|a| i64::from(s.dim(a.head)) * i64::from(s.dim(a.tail)))
        .sum()
}

pub fn s_dim(s: &SupermixedSetting) -> i64 {
    s.gamma_bar().iter().map(|&d| i64::from(d) * i64::from(d)).sum()
}

/// Dimension of `DRep`, the fixed space of the `Rep` involution.
pub fn drep_dim(s: &SupermixedSetting) -> Result<i64> {
    half(rep_dim(s) + rep_involution_trace(s)?)
}

/// Dimension of `DGL`, the `-1` eigenspace of the `S_γ` involution.
pub fn dgl_dim(s: &SupermixedSetting) -> Result<i64> {
    half(s_dim(s) - s_involution_trace(s)?)
}

fn half(x: i64) -> Result<i64> {
    if x % 2 != 0 {
        return Err(Error::Internal(format!("odd eigenspace count {x}")));
    }
    Ok(x / 2)
}

/// `dim Diss = dim DRep - dim DGL`, defined when orthogonal simples of full
/// dimension exist (their stabilizer is finite).
pub fn diss_dim(s: &SupermixedSetting) -> Result<i64> {
    let report = crate::simples::has_orthogonal_simples(s)?;
    if !report.answer {
        return Err(Error::UndefinedDimension(
            "no orthogonal ε-simples of this dimension".into(),
        ));
    }
    Ok(drep_dim(s)? - dgl_dim(s)?)
}

/// Classical group attached to one φ-orbit of vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupFactor {
    O(u32),
    Sp(u32),
    GL(u32),
}

impl GroupFactor {
    pub fn dim(self) -> i64 {
        match self {
            GroupFactor::O(n) => i64::from(n) * (i64::from(n) - 1) / 2,
            GroupFactor::Sp(n) => i64::from(n) * (i64::from(n) + 1) / 2,
            GroupFactor::GL(n) => i64::from(n) * i64::from(n),
        }
    }
}

/// One factor per φ-orbit of vertices, in increasing order of orbit representative.
pub fn dgl_group_shape(s: &SupermixedSetting) -> Vec<GroupFactor> {
    s.smq()
        .vertex_orbits()
        .into_iter()
        .map(|v| match s.smq().vertex_kind(v) {
            VertexKind::Orthogonal => GroupFactor::O(s.dim(v)),
            VertexKind::Symplectic => GroupFactor::Sp(s.dim(v)),
            VertexKind::General => GroupFactor::GL(s.dim(v)),
        })
        .collect()
}

/// Closed-form counts next to the values read off the explicit involutions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub rep: i64,
    pub drep: i64,
    pub dgl: i64,
    /// `½(Σ α_{h}α_{t} + Σ_{a=φa} σ_a α_{h(a)})`.
    pub drep_closed: i64,
    /// `½(Σ α_v² - Σ_{v=φv} ε_v α_v)`.
    pub dgl_closed: i64,
    /// `drep - dgl`; equals `dim Diss` when orthogonal simples exist.
    pub diss_candidate: i64,
    /// `½(Σαα - Σα² + Σσα - Σεα)`, the variant with the opposite vertex sign.
    /// Reported for comparison only; it disagrees with `diss_candidate`
    /// whenever fixed vertices are present.
    pub diss_opposite_vertex_sign: Option<i64>,
    /// `dim iss(Q, γ̄)` when ordinary simples exist.
    pub iss: Option<i64>,
}

/// Both the explicit and closed-form dimension counts of a setting.
pub fn dimension_report(s: &SupermixedSetting) -> Result<DimensionReport> {
    let smq = s.smq();
    let rep = rep_dim(s);
    let drep = drep_dim(s)?;
    let dgl = dgl_dim(s)?;
    let arrow_term: i64 = (0..s.arrow_count())
        .filter(|&a| smq.is_self_dual(a))
        .map(|a| smq.sigma(a).value() * i64::from(s.dim(smq.head(a))))
        .sum();
    let vertex_term: i64 = (0..s.vertex_count())
        .filter(|&v| smq.is_fixed_vertex(v))
        .map(|v| smq.eps(v).value() * i64::from(s.dim(v)))
        .sum();
    let drep_closed = half(rep + arrow_term)?;
    let dgl_closed = half(s_dim(s) - vertex_term)?;
    let opposite = rep - s_dim(s) + arrow_term - vertex_term;
    let iss = dim_iss(s.quiver(), s.gamma_bar()).ok();
    Ok(DimensionReport {
        rep,
        drep,
        dgl,
        drep_closed,
        dgl_closed,
        diss_candidate: drep - dgl,
        diss_opposite_vertex_sign: (opposite % 2 == 0).then_some(opposite / 2),
        iss,
    })
}
