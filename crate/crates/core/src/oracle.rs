//! Exact linear-algebra checks on explicit representations.
//!
//! Nothing here depends on the combinatorial algorithms: the oracle samples
//! points of `DRep` and decides their type from generated-algebra,
//! centralizer and trace-form computations over the rationals.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involution::{rep_involution_matrix, rep_offsets, s_involution_matrix, s_offsets};
use crate::linalg::{intersection_dim, SpanBasis};
use crate::local::FactorKind;
use crate::quiver::{DimensionVector, Path, Quiver};
use crate::setting::{half_splits, Sign, SupermixedQuiver, SupermixedSetting};
use crate::{Rational, RationalMatrix, Scalar};

/// Explicit point of `Rep(Q, γ̄)` together with the forms `γ_v` it is read against.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    setting: SupermixedSetting,
    gammas: Vec<RationalMatrix>,
    matrices: Vec<RationalMatrix>,
}

impl Representation {
    /// Representation against the strict forms of `setting`.
    pub fn new(setting: SupermixedSetting, matrices: Vec<RationalMatrix>) -> Result<Self> {
        let gammas = setting.gammas();
        Self::with_forms(setting, gammas, matrices)
    }

    /// Representation against explicit forms, which must satisfy
    /// `γ_v = ε_v γ_{φ(v)}ᵀ`.
    pub fn with_forms(
        setting: SupermixedSetting,
        gammas: Vec<RationalMatrix>,
        matrices: Vec<RationalMatrix>,
    ) -> Result<Self> {
        let mut raw = setting.to_raw();
        raw.gamma = Some(gammas.clone());
        let v = crate::setting::validate(&raw);
        if !v.is_empty() {
            return Err(Error::Invalid(v));
        }
        if matrices.len() != setting.arrow_count() {
            return Err(Error::LengthMismatch {
                expected: setting.arrow_count(),
                got: matrices.len(),
            });
        }
        for (a, m) in matrices.iter().enumerate() {
            let want = (
                setting.dim(setting.smq().head(a)) as usize,
                setting.dim(setting.smq().tail(a)) as usize,
            );
            if m.shape() != want {
                return Err(Error::Internal(format!(
                    "matrix of arrow {a} has shape {:?}, expected {want:?}",
                    m.shape()
                )));
            }
        }
        Ok(Self {
            setting,
            gammas,
            matrices,
        })
    }

    pub fn zero(setting: SupermixedSetting) -> Self {
        let matrices = (0..setting.arrow_count())
            .map(|a| {
                RationalMatrix::zeros(
                    setting.dim(setting.smq().head(a)) as usize,
                    setting.dim(setting.smq().tail(a)) as usize,
                )
            })
            .collect();
        let gammas = setting.gammas();
        Self {
            setting,
            gammas,
            matrices,
        }
    }

    pub fn setting(&self) -> &SupermixedSetting {
        &self.setting
    }

    pub fn gammas(&self) -> &[RationalMatrix] {
        &self.gammas
    }

    pub fn matrices(&self) -> &[RationalMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, a: usize) -> &RationalMatrix {
        &self.matrices[a]
    }

    fn coordinates(&self) -> Vec<Rational> {
        self.matrices
            .iter()
            .flat_map(|m| m.as_slice().iter().cloned())
            .collect()
    }

    /// Whether the point is fixed by the involution on `Rep`.
    pub fn is_in_drep(&self) -> bool {
        let smq = self.setting.smq();
        let Ok(m) = rep_involution_matrix(smq, self.setting.gamma_bar(), &self.gammas) else {
            return false;
        };
        let x = self.coordinates();
        m.apply(&x) == x
    }

    /// Total dimension `Σ γ̄_v`.
    pub fn total_dim(&self) -> usize {
        self.setting.gamma_bar().total() as usize
    }

    fn vertex_offsets(&self) -> Vec<usize> {
        let mut offs = Vec::new();
        let mut acc = 0;
        for &d in self.setting.gamma_bar().iter() {
            offs.push(acc);
            acc += d as usize;
        }
        offs.push(acc);
        offs
    }

    /// Arrow `a` as an endomorphism of `⊕_v ℚ^{γ̄_v}`.
    fn flat_arrow(&self, a: usize, offs: &[usize]) -> RationalMatrix {
        let n = self.total_dim();
        let mut m = RationalMatrix::zeros(n, n);
        let smq = self.setting.smq();
        m.set_block(offs[smq.head(a)], offs[smq.tail(a)], &self.matrices[a]);
        m
    }

    fn flat_projector(&self, v: usize, offs: &[usize]) -> RationalMatrix {
        let n = self.total_dim();
        let mut m = RationalMatrix::zeros(n, n);
        for i in offs[v]..offs[v + 1] {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Product `W_{a_1} ⋯ W_{a_k}` along a path.
    pub fn path_matrix(&self, p: &Path) -> Result<RationalMatrix> {
        let q = self.setting.quiver();
        match p {
            Path::Trivial(v) => {
                q.check_vertex(*v)?;
                Ok(RationalMatrix::identity(self.setting.dim(*v) as usize))
            }
            Path::Arrows(arrows) => {
                let p = Path::from_arrows(q, arrows.clone())?;
                let mut acc = self.matrices[p.arrows()[0]].clone();
                for &a in &p.arrows()[1..] {
                    acc = &acc * &self.matrices[a];
                }
                Ok(acc)
            }
        }
    }
}

/// Verdict of [`classify_eps_simple`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    Orthogonal,
    Symplectic,
    General,
    NotEpsSimple,
}

impl Classification {
    pub fn factor_kind(self) -> Option<FactorKind> {
        match self {
            Classification::Orthogonal => Some(FactorKind::Orthogonal),
            Classification::Symplectic => Some(FactorKind::Symplectic),
            Classification::General => Some(FactorKind::General),
            Classification::NotEpsSimple => None,
        }
    }
}

/// Spanning set of the algebra generated by the vertex projectors and arrow
/// matrices, closed under left multiplication by the generators.
pub fn generated_algebra(r: &Representation) -> Vec<RationalMatrix> {
    let offs = r.vertex_offsets();
    let n = r.total_dim();
    let mut gens: Vec<RationalMatrix> = (0..r.setting.vertex_count())
        .filter(|&v| r.setting.dim(v) > 0)
        .map(|v| r.flat_projector(v, &offs))
        .collect();
    gens.extend(
        (0..r.setting.arrow_count())
            .map(|a| r.flat_arrow(a, &offs))
            .filter(|m| !m.is_zero()),
    );
    let mut span = SpanBasis::new(n * n);
    let mut elements = Vec::new();
    let mut queue = Vec::new();
    for g in &gens {
        if span.insert(g.as_slice()) {
            elements.push(g.clone());
            queue.push(g.clone());
        }
    }
    while let Some(w) = queue.pop() {
        for g in &gens {
            let x = g * &w;
            if span.insert(x.as_slice()) {
                elements.push(x.clone());
                queue.push(x);
            }
        }
        if span.dim() == n * n {
            break;
        }
    }
    elements
}

pub fn generated_algebra_dim(r: &Representation) -> usize {
    let n = r.total_dim();
    let els = generated_algebra(r);
    let flat: Vec<Vec<Rational>> = els.iter().map(|m| m.as_slice().to_vec()).collect();
    crate::linalg::span_dim(n * n, &flat)
}

/// Basis of the commutant `{s ∈ S_γ : s W_a = W_a s}` in `S_γ` coordinates.
pub fn centralizer_basis(r: &Representation) -> Vec<Vec<Rational>> {
    let gb = r.setting.gamma_bar();
    let smq = r.setting.smq();
    let offs = s_offsets(gb);
    let unknowns = offs[gb.len()];
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for a in 0..smq.arrow_count() {
        let (h, t) = (smq.head(a), smq.tail(a));
        let (dh, dt) = (gb[h] as usize, gb[t] as usize);
        let w = &r.matrices[a];
        for i in 0..dh {
            for j in 0..dt {
                // (s_h W)_{ij} - (W s_t)_{ij}
                let mut row = vec![Rational::zero(); unknowns];
                for k in 0..dh {
                    let c = &w[(k, j)];
                    if !c.is_zero() {
                        let idx = offs[h] + i * dh + k;
                        row[idx] = row[idx].clone() + c.clone();
                    }
                }
                for k in 0..dt {
                    let c = &w[(i, k)];
                    if !c.is_zero() {
                        let idx = offs[t] + k * dt + j;
                        row[idx] = row[idx].clone() - c.clone();
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return (0..unknowns)
            .map(|i| {
                let mut e = vec![Rational::zero(); unknowns];
                e[i] = Rational::one();
                e
            })
            .collect();
    }
    RationalMatrix::from_rows(rows).kernel()
}

pub fn centralizer_dim(r: &Representation) -> usize {
    centralizer_basis(r).len()
}

/// Rank of the trace form `(x, y) ↦ tr(xy)` on the generated algebra and the
/// algebra's dimension. Equal values mean the representation is semisimple.
fn trace_form_rank(algebra: &[RationalMatrix]) -> (usize, usize) {
    let n = algebra.first().map_or(0, |m| m.rows());
    let mut basis = SpanBasis::new(n * n);
    let mut independent = Vec::new();
    for m in algebra {
        if basis.insert(m.as_slice()) {
            independent.push(m.clone());
        }
    }
    let k = independent.len();
    let mut gram = RationalMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t = trace_of_product(&independent[i], &independent[j]);
            gram[(i, j)] = t.clone();
            gram[(j, i)] = t;
        }
    }
    (gram.rank(), k)
}

fn trace_of_product(a: &RationalMatrix, b: &RationalMatrix) -> Rational {
    let n = a.rows();
    let mut acc = Rational::zero();
    for i in 0..n {
        for k in 0..n {
            let x = &a[(i, k)];
            if x.is_zero() {
                continue;
            }
            let y = &b[(k, i)];
            if !y.is_zero() {
                acc = acc + x.clone() * y.clone();
            }
        }
    }
    acc
}

fn block_diagonal_from_s(r: &Representation, s: &[Rational]) -> Vec<Rational> {
    let gb = r.setting.gamma_bar();
    let soffs = s_offsets(gb);
    let voffs = r.vertex_offsets();
    let n = r.total_dim();
    let mut m = vec![Rational::zero(); n * n];
    for v in 0..gb.len() {
        let d = gb[v] as usize;
        for i in 0..d {
            for j in 0..d {
                m[(voffs[v] + i) * n + voffs[v] + j] = s[soffs[v] + i * d + j].clone();
            }
        }
    }
    m
}

/// Type of a point of `DRep` as an ε-mixed module.
///
/// Orthogonal when the point is simple. Otherwise the point must be
/// semisimple (nondegenerate trace form on its generated algebra) with
/// centralizer `Mat_2` and one-dimensional centre (symplectic, when the form
/// adjoint on the centralizer fixes only scalars) or centralizer `ℚ × ℚ`
/// with the adjoint swapping the two factors (general).
pub fn classify_eps_simple(r: &Representation) -> Classification {
    let n = r.total_dim();
    if n == 0 {
        return Classification::NotEpsSimple;
    }
    let algebra = generated_algebra(r);
    let (rank, dim_a) = trace_form_rank(&algebra);
    if dim_a == n * n {
        return Classification::Orthogonal;
    }
    if rank < dim_a {
        return Classification::NotEpsSimple;
    }
    let cent = centralizer_basis(r);
    let c = cent.len();
    if c != 2 && c != 4 {
        return Classification::NotEpsSimple;
    }
    let cent_flat: Vec<Vec<Rational>> = cent.iter().map(|s| block_diagonal_from_s(r, s)).collect();
    let alg_flat: Vec<Vec<Rational>> = algebra.iter().map(|m| m.as_slice().to_vec()).collect();
    let centre = intersection_dim(n * n, &alg_flat, &cent_flat);
    let smq = r.setting.smq();
    let Ok(inv) = s_involution_matrix(smq, r.setting.gamma_bar(), &r.gammas) else {
        return Classification::NotEpsSimple;
    };
    let fixed = (&inv - &RationalMatrix::identity(inv.rows())).kernel();
    let fixed_in_c = intersection_dim(inv.rows(), &cent, &fixed);
    match (c, centre, fixed_in_c) {
        (4, 1, 1) => Classification::Symplectic,
        (2, 2, 1) => Classification::General,
        _ => Classification::NotEpsSimple,
    }
}

/// `tr W_c` for a cycle `c`.
pub fn trace_invariant(r: &Representation, c: &Path) -> Result<Rational> {
    let q = r.setting.quiver();
    if let Path::Arrows(a) = c {
        Path::from_arrows(q, a.clone())?;
    }
    if !c.is_cycle(q) {
        return Err(Error::NotACycle);
    }
    Ok(r.path_matrix(c)?.trace())
}

/// Closed walks of length `1..=max_len`, shortest first, at most `budget` of them.
pub fn closed_walks(q: &Quiver, max_len: usize, budget: usize) -> Vec<Path> {
    let mut out = Vec::new();
    // Frontier of composable sequences a_1 … a_k keyed by their tail.
    let mut frontier: Vec<Vec<usize>> = (0..q.arrow_count()).map(|a| vec![a]).collect();
    for _ in 1..=max_len {
        for p in &frontier {
            if q.head(p[0]) == q.tail(*p.last().expect("nonempty")) {
                out.push(Path::Arrows(p.clone()));
                if out.len() >= budget {
                    return out;
                }
            }
        }
        let mut next = Vec::new();
        for p in &frontier {
            let t = q.tail(*p.last().expect("nonempty"));
            for b in q.arrows_into(t) {
                let mut np = p.clone();
                np.push(b);
                next.push(np);
            }
            if next.len() > 4 * budget {
                break;
            }
        }
        frontier = next;
    }
    out
}

/// Associated graded module of the radical filtration `W ⊃ JW ⊃ J²W ⊃ …`,
/// where `J` is the kernel of the trace form on the generated algebra.
///
/// The result is semisimple with the same composition factors, hence the
/// same trace invariants. Forms are reset to the strict ones; the result is
/// not claimed to lie in `DRep`.
pub fn semisimplification(r: &Representation) -> Representation {
    let n = r.total_dim();
    if n == 0 {
        return r.clone();
    }
    let algebra = generated_algebra(r);
    let mut span = SpanBasis::new(n * n);
    let mut basis = Vec::new();
    for m in &algebra {
        if span.insert(m.as_slice()) {
            basis.push(m.clone());
        }
    }
    let k = basis.len();
    let mut gram = RationalMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            gram[(i, j)] = trace_of_product(&basis[i], &basis[j]);
        }
    }
    let radical: Vec<RationalMatrix> = gram
        .kernel()
        .into_iter()
        .map(|coef| {
            let mut acc = RationalMatrix::zeros(n, n);
            for (c, b) in coef.iter().zip(&basis) {
                if !c.is_zero() {
                    acc = &acc + &b.scale(c);
                }
            }
            acc
        })
        .collect();

    // Layers J^i V, each spanned by vectors (columns) of the total space.
    let mut layers: Vec<Vec<Vec<Rational>>> = Vec::new();
    let mut current: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            e
        })
        .collect();
    loop {
        layers.push(current.clone());
        if current.is_empty() {
            break;
        }
        let mut next = SpanBasis::new(n);
        let mut next_vecs = Vec::new();
        for j in &radical {
            for v in &current {
                let x = j.apply(v);
                if next.insert(&x) {
                    next_vecs.push(x);
                }
            }
        }
        current = next_vecs;
    }

    // New basis: per layer, a complement of the next layer, split by vertex.
    let voffs = r.vertex_offsets();
    let nv = r.setting.vertex_count();
    let mut new_basis: Vec<Vec<Vec<Rational>>> = vec![Vec::new(); nv];
    let mut layer_of: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for (li, pair) in layers.windows(2).enumerate() {
        for v in 0..nv {
            let restrict = |vecs: &[Vec<Rational>]| -> Vec<Vec<Rational>> {
                vecs.iter()
                    .map(|x| {
                        let mut y = vec![Rational::zero(); n];
                        for i in voffs[v]..voffs[v + 1] {
                            y[i] = x[i].clone();
                        }
                        y
                    })
                    .collect()
            };
            let mut span = SpanBasis::new(n);
            for x in restrict(&pair[1]) {
                span.insert(&x);
            }
            for x in restrict(&pair[0]) {
                if span.insert(&x) {
                    new_basis[v].push(x);
                    layer_of[v].push(li);
                }
            }
        }
    }

    // Coordinates in the new basis, per vertex.
    let coords = |v: usize, x: &[Rational]| -> Vec<Rational> {
        let d = new_basis[v].len();
        let mut m = RationalMatrix::zeros(n, d);
        for (c, b) in new_basis[v].iter().enumerate() {
            for i in 0..n {
                m[(i, c)] = b[i].clone();
            }
        }
        let mut aug = RationalMatrix::zeros(n, d + 1);
        aug.set_block(0, 0, &m);
        for i in 0..n {
            aug[(i, d)] = x[i].clone();
        }
        let (rr, pivots) = aug.rref();
        let mut out = vec![Rational::zero(); d];
        for (row, &p) in pivots.iter().enumerate() {
            if p < d {
                out[p] = rr[(row, d)].clone();
            }
        }
        out
    };

    let smq = r.setting.smq();
    let mut matrices = Vec::new();
    for a in 0..smq.arrow_count() {
        let (h, t) = (smq.head(a), smq.tail(a));
        let flat = r.flat_arrow(a, &voffs);
        let (dh, dt) = (new_basis[h].len(), new_basis[t].len());
        let mut m = RationalMatrix::zeros(dh, dt);
        for (j, b) in new_basis[t].iter().enumerate() {
            let image = coords(h, &flat.apply(b));
            for (i, c) in image.into_iter().enumerate() {
                // Keep only the component in the same layer.
                if layer_of[h][i] == layer_of[t][j] {
                    m[(i, j)] = c;
                }
            }
        }
        matrices.push(m);
    }
    Representation::new(r.setting.clone(), matrices).expect("shapes are preserved")
}

/// Strategy used to produce a sample in [`verify_existence`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Strategy {
    /// Generic point of `DRep` for the strict forms.
    Generic,
    /// `X ⊗ id_2` with `X` generic for the sign-flipped setting on `γ̄/2`.
    Tensor,
    /// Block-diagonal point `S ⊕ S*` with `dim S = α`, hyperbolic forms.
    Hyperbolic(DimensionVector),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verification {
    ConfirmedYes {
        witness: Box<Representation>,
        sample: usize,
        strategy: Strategy,
    },
    /// Not a proof of absence: only that no sample produced the requested kind.
    NoWitnessFound { samples: usize },
}

impl Verification {
    pub fn confirmed(&self) -> bool {
        matches!(self, Verification::ConfirmedYes { .. })
    }
}

/// Sampling space: forms, and a basis of the fixed space intersected with
/// the linear constraints of a strategy.
struct SampleSpace {
    setting: SupermixedSetting,
    gammas: Vec<RationalMatrix>,
    basis: Vec<Vec<Rational>>,
    /// Post-processing `X ↦ X ⊗ id_2` for the tensor strategy.
    tensor: bool,
    /// Setting the basis coordinates live in, when different from `setting`.
    coord_setting: Option<(SupermixedQuiver, DimensionVector)>,
}

fn fixed_space_basis(
    smq: &SupermixedQuiver,
    gamma_bar: &DimensionVector,
    gammas: &[RationalMatrix],
    constraints: &[Vec<Rational>],
) -> Result<Vec<Vec<Rational>>> {
    let m = rep_involution_matrix(smq, gamma_bar, gammas)?;
    let n = m.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut x = m[(i, j)].clone();
                    if i == j {
                        x = x - Rational::one();
                    }
                    x
                })
                .collect()
        })
        .collect();
    rows.extend(constraints.iter().cloned());
    Ok(RationalMatrix::from_rows(rows).kernel())
}

fn generic_space(s: &SupermixedSetting) -> Result<SampleSpace> {
    let gammas = s.gammas();
    let basis = fixed_space_basis(s.smq(), s.gamma_bar(), &gammas, &[])?;
    Ok(SampleSpace {
        setting: s.clone(),
        gammas,
        basis,
        tensor: false,
        coord_setting: None,
    })
}

/// Forms for the sign-flipped quiver: `ε⁻ = -ε` everywhere, so a general pair
/// gets `(id, -id)` and fixed vertices `id` or `Λ`.
fn tensor_space(s: &SupermixedSetting) -> Result<Option<SampleSpace>> {
    let smq = s.smq();
    if s.gamma_bar().iter().any(|&d| d % 2 == 1) {
        return Ok(None);
    }
    let beta = DimensionVector(s.gamma_bar().iter().map(|&d| d / 2).collect());
    let neg = SupermixedQuiver::new(
        smq.quiver().clone(),
        smq.phi_v_map().to_vec(),
        smq.phi_a_map().to_vec(),
        smq.eps_map().iter().map(|&e| -e).collect(),
        smq.sigma_map().iter().map(|&x| -x).collect(),
    )?;
    let mut gminus = Vec::new();
    for v in 0..s.vertex_count() {
        let d = beta[v] as usize;
        let g = if smq.is_fixed_vertex(v) {
            if neg.eps(v) == Sign::Minus {
                if d % 2 == 1 {
                    return Ok(None);
                }
                RationalMatrix::symplectic(d)
            } else {
                RationalMatrix::identity(d)
            }
        } else if smq.phi_v(v) > v {
            RationalMatrix::identity(d)
        } else {
            // Dual of the representative: ε⁻ = -1 on the pair.
            -&RationalMatrix::identity(d)
        };
        gminus.push(g);
    }
    let basis = fixed_space_basis(&neg, &beta, &gminus, &[])?;
    let l2 = RationalMatrix::symplectic(2);
    let gammas = gminus.iter().map(|g| g.kron(&l2)).collect();
    Ok(Some(SampleSpace {
        setting: s.clone(),
        gammas,
        basis,
        tensor: true,
        coord_setting: Some((neg, beta)),
    }))
}

fn hyperbolic_space(s: &SupermixedSetting, alpha: &DimensionVector) -> Result<SampleSpace> {
    let smq = s.smq();
    let mut gammas = Vec::new();
    // W_v = S_v ⊕ S*_v with dims p = α_v, q = α_{φ(v)}; S_v pairs with
    // S*_{φ(v)} and S*_v with S_{φ(v)}: γ_v = [[0, id_p], [ε id_q, 0]].
    for v in 0..s.vertex_count() {
        let (p, q) = (alpha[v] as usize, alpha[smq.phi_v(v)] as usize);
        let mut g = RationalMatrix::zeros(p + q, p + q);
        for i in 0..p {
            g[(i, q + i)] = Rational::one();
        }
        let e = Rational::from_i64(smq.eps(v).value());
        for i in 0..q {
            g[(p + i, i)] = e.clone();
        }
        gammas.push(g);
    }
    let offs = rep_offsets(smq, s.gamma_bar());
    let total = offs[s.arrow_count()];
    let mut constraints = Vec::new();
    for a in 0..s.arrow_count() {
        let (h, t) = (smq.head(a), smq.tail(a));
        let (dh, dt) = (s.dim(h) as usize, s.dim(t) as usize);
        for i in 0..dh {
            for j in 0..dt {
                if (i < alpha[h] as usize) != (j < alpha[t] as usize) {
                    let mut row = vec![Rational::zero(); total];
                    row[offs[a] + i * dt + j] = Rational::one();
                    constraints.push(row);
                }
            }
        }
    }
    let basis = fixed_space_basis(smq, s.gamma_bar(), &gammas, &constraints)?;
    Ok(SampleSpace {
        setting: s.clone(),
        gammas,
        basis,
        tensor: false,
        coord_setting: None,
    })
}

fn draw(space: &SampleSpace, rng: &mut ChaCha8Rng) -> Result<Representation> {
    let (smq, gb) = match &space.coord_setting {
        Some((q, b)) => (q, b),
        None => (space.setting.smq(), space.setting.gamma_bar()),
    };
    let offs = rep_offsets(smq, gb);
    let total = offs[smq.arrow_count()];
    let mut x = vec![Rational::zero(); total];
    for b in &space.basis {
        let c = Rational::from_i64(rng.gen_range(-3..=3));
        if c.is_zero() {
            continue;
        }
        for (xi, bi) in x.iter_mut().zip(b) {
            if !bi.is_zero() {
                *xi = xi.clone() + c.clone() * bi.clone();
            }
        }
    }
    let id2 = RationalMatrix::identity(2);
    let matrices = (0..smq.arrow_count())
        .map(|a| {
            let (dh, dt) = (gb[smq.head(a)] as usize, gb[smq.tail(a)] as usize);
            let m = RationalMatrix::from_vec(dh, dt, x[offs[a]..offs[a + 1]].to_vec());
            if space.tensor {
                m.kron(&id2)
            } else {
                m
            }
        })
        .collect();
    Representation::with_forms(space.setting.clone(), space.gammas.clone(), matrices)
}

/// Deterministic point of `DRep` for the strict forms.
pub fn sample_drep(s: &SupermixedSetting, seed: u64) -> Result<Representation> {
    let space = generic_space(s)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    draw(&space, &mut rng)
}

/// Randomized search for an ε-simple of the requested kind.
///
/// Samples cycle through the strategies suited to `kind`; every sample is
/// classified exactly. A negative outcome is evidence, not proof.
pub fn verify_existence(
    s: &SupermixedSetting,
    kind: FactorKind,
    samples: usize,
    seed: u64,
) -> Result<Verification> {
    let mut spaces: Vec<(Strategy, SampleSpace)> = vec![(Strategy::Generic, generic_space(s)?)];
    match kind {
        FactorKind::Orthogonal => {}
        FactorKind::Symplectic => {
            if let Some(t) = tensor_space(s)? {
                spaces.push((Strategy::Tensor, t));
            }
        }
        FactorKind::General => {
            for alpha in half_splits(s.smq(), s.gamma_bar()) {
                let sp = hyperbolic_space(s, &alpha)?;
                spaces.push((Strategy::Hyperbolic(alpha), sp));
            }
        }
    }
    let mut rngs: HashMap<usize, ChaCha8Rng> = HashMap::new();
    for i in 0..samples {
        let idx = i % spaces.len();
        let rng = rngs
            .entry(idx)
            .or_insert_with(|| ChaCha8Rng::seed_from_u64(seed.wrapping_add(idx as u64)));
        let (strategy, space) = &spaces[idx];
        let r = draw(space, rng)?;
        debug_assert!(r.is_in_drep());
        if classify_eps_simple(&r).factor_kind() == Some(kind) {
            return Ok(Verification::ConfirmedYes {
                witness: Box::new(r),
                sample: i,
                strategy: strategy.clone(),
            });
        }
    }
    Ok(Verification::NoWitnessFound { samples })
}
