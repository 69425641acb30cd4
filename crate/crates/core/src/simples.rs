//! Existence of simples: the recursive ordinary check, orthogonal ε-simples
//! by reduction to basic settings, and the symplectic and general criteria
//! derived from it.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involution::{diss_dim, rep_involution_block};
use crate::local::{
    complete_decomposition, local_mixed_setting, FactorKind, SemisimpleDecomposition,
    SimpleFactor,
};
use crate::oracle::{centralizer_dim, Representation};
use crate::quiver::{
    dim_iss, has_simples_lbp, is_strongly_connected, local_quiver, support, DimensionVector, Path,
    Quiver,
};
use crate::setting::{
    dual_dimension_vector, half_splits, normalize_to_strict, plus_transform, Sign, SupermixedQuiver,
    SupermixedSetting,
};
use crate::RationalMatrix;

/// Reduction step of the recursive algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    S0,
    S1,
    S2,
    S3,
    O0,
    O1,
    O2,
    O3A,
    O3B,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub step: Step,
    /// Recursion depth at which the step ran.
    pub depth: usize,
    /// Termination measure of the setting the step acted on.
    pub measure: (u64, u64),
    /// The setting before the step.
    pub setting: String,
    /// What the step did: deletions, witness cycle, β, decomposition, result.
    pub detail: String,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:indent$}{} [measure {:?}] {}: {}",
            "",
            self.step,
            self.measure,
            self.setting,
            self.detail,
            indent = 2 * self.depth
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplesReport {
    pub answer: bool,
    pub trace: Vec<TraceEntry>,
}

/// `(Σ max(γ̄_v - 1, 0), Σ γ̄_v)`, compared lexicographically.
fn measure(dims: &[u32]) -> (u64, u64) {
    (
        dims.iter().map(|&d| u64::from(d.saturating_sub(1))).sum(),
        dims.iter().map(|&d| u64::from(d)).sum(),
    )
}

fn quiver_summary(q: &Quiver, alpha: &DimensionVector) -> String {
    format!("{} vertices, {} arrows, α = {alpha}", q.vertex_count(), q.arrow_count())
}

// ---------------------------------------------------------------------------
// Ordinary simples
// ---------------------------------------------------------------------------

/// Recursive existence check for simples in `Rep(Q, α)`.
pub fn has_simples_recursive(q: &Quiver, alpha: &DimensionVector) -> Result<SimplesReport> {
    let mut trace = Vec::new();
    let answer = ordinary(q, alpha, 0, None, &mut trace)?;
    Ok(SimplesReport { answer, trace })
}

fn ordinary(
    q: &Quiver,
    alpha: &DimensionVector,
    depth: usize,
    bound: Option<(u64, u64)>,
    trace: &mut Vec<TraceEntry>,
) -> Result<bool> {
    let (q, alpha, _) = support(q, alpha)?;
    let m = measure(&alpha);
    if let Some(b) = bound {
        if m >= b {
            return Err(Error::Internal(format!(
                "ordinary recursion did not decrease its measure: {m:?} ≥ {b:?}"
            )));
        }
    }
    let mut push = |step, detail: String| {
        trace.push(TraceEntry {
            step,
            depth,
            measure: m,
            setting: quiver_summary(&q, &alpha),
            detail,
        })
    };
    push(Step::S0, "restricted to the support".into());
    if q.vertex_count() == 0 {
        push(Step::S0, "empty support: no simples".into());
        return Ok(false);
    }
    if q.vertex_count() == 1 && q.arrow_count() == 0 {
        let ok = alpha[0] == 1;
        push(Step::S1, format!("single vertex without arrows: {ok}"));
        return Ok(ok);
    }
    let connected = is_strongly_connected(&q, None)?;
    if alpha.iter().all(|&x| x == 1) {
        push(Step::S2, format!("α = 1, strongly connected: {connected}"));
        return Ok(connected);
    }
    if !connected {
        push(Step::S3, "not strongly connected: no simples".into());
        return Ok(false);
    }
    let n = q.vertex_count();
    let mut factors = vec![(DimensionVector::constant(n, 1), 1)];
    for v in 0..n {
        if alpha[v] > 1 {
            factors.push((DimensionVector::unit(n, v), alpha[v] - 1));
        }
    }
    let (lq, ldims) = local_quiver(&q, &factors)?;
    push(
        Step::S3,
        format!(
            "completed the α = 1 simple with {} standard simples; local setting {}",
            factors.len() - 1,
            quiver_summary(&lq, &ldims)
        ),
    );
    ordinary(&lq, &ldims, depth + 1, Some(m), trace)
}

// ---------------------------------------------------------------------------
// Basic settings and the path lemma
// ---------------------------------------------------------------------------

/// Whether the vertices with `keep[v]` carry a cycle (loops included).
fn has_cycle_within(q: &Quiver, keep: &[bool]) -> bool {
    // Kahn's algorithm on the induced subquiver.
    let n = q.vertex_count();
    let mut indeg = vec![0usize; n];
    for a in q.arrows() {
        if keep[a.tail] && keep[a.head] {
            indeg[a.head] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| keep[v] && indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = queue.pop_front() {
        removed += 1;
        for a in q.arrows_from(v) {
            let h = q.head(a);
            if keep[h] {
                indeg[h] -= 1;
                if indeg[h] == 0 {
                    queue.push_back(h);
                }
            }
        }
    }
    removed < keep.iter().filter(|&&k| k).count()
}

/// Basic settings: dimensions in `{1, 2}`, dimension 2 at symplectic
/// vertices and at endpoints of antisymmetric arrows, no cycle through
/// dimension-2 vertices only, and simples in `Rep(Q, γ̄)`.
pub fn is_basic(s: &SupermixedSetting) -> Result<bool> {
    let smq = s.smq();
    let gb = s.gamma_bar();
    if gb.iter().any(|&d| !(1..=2).contains(&d)) {
        return Ok(false);
    }
    for v in 0..s.vertex_count() {
        if smq.is_symplectic(v) && gb[v] != 2 {
            return Ok(false);
        }
    }
    for a in 0..s.arrow_count() {
        if smq.is_antisymmetric(a) && (gb[smq.head(a)] != 2 || gb[smq.tail(a)] != 2) {
            return Ok(false);
        }
    }
    let two: Vec<bool> = gb.iter().map(|&d| d == 2).collect();
    if has_cycle_within(s.quiver(), &two) {
        return Ok(false);
    }
    has_simples_lbp(s.quiver(), gb)
}

fn reachability(q: &Quiver) -> Vec<Vec<bool>> {
    let n = q.vertex_count();
    let mut reach = vec![vec![false; n]; n];
    for (start, row) in reach.iter_mut().enumerate() {
        row[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for a in q.arrows_from(v) {
                let h = q.head(a);
                if !row[h] {
                    row[h] = true;
                    queue.push_back(h);
                }
            }
        }
    }
    reach
}

/// Whether some path `p: v → w` satisfies `p* ≠ -p`.
///
/// Only paths from `v` to `φ(v)` can be antisymmetric. Those are explored
/// from both ends at once: the state after pairing `a_i` with `a_{k+1-i}` is
/// the front vertex `x` (the back vertex is then `φ(x)`) and the sign
/// accumulated so far. A path is antisymmetric exactly when every pair is
/// `(a, φ(a))`, a middle arrow (odd length) is self-dual, and the total sign
/// is `-1`; any other pairing yields a witness as soon as the remaining
/// middle segment can be filled in.
pub fn exists_non_antisymmetric_path(s: &SupermixedSetting, v: usize, w: usize) -> Result<bool> {
    exists_non_antisymmetric_path_smq(s.smq(), v, w)
}

pub(crate) fn exists_non_antisymmetric_path_smq(
    smq: &SupermixedQuiver,
    v: usize,
    w: usize,
) -> Result<bool> {
    let q = smq.quiver();
    q.check_vertex(v)?;
    q.check_vertex(w)?;
    let reach = reachability(q);
    if w != smq.phi_v(v) {
        return Ok(reach[v][w]);
    }
    let n = q.vertex_count();
    let sign_of = |a: usize| smq.sigma(a) * smq.eps(smq.head(a));
    let idx = |x: usize, s: Sign| 2 * x + usize::from(!s.is_plus());
    let mut seen = vec![false; 2 * n];
    let mut queue = VecDeque::from([(w, Sign::Plus)]);
    seen[idx(w, Sign::Plus)] = true;
    while let Some((x, s)) = queue.pop_front() {
        let y = smq.phi_v(x);
        if x == y && s.is_plus() {
            return Ok(true);
        }
        let into_x: Vec<usize> = q.arrows_into(x).collect();
        for &c in &into_x {
            if q.tail(c) == y && (smq.phi_a(c) != c || (s * sign_of(c)).is_plus()) {
                return Ok(true);
            }
        }
        for &a in &into_x {
            for b in q.arrows_from(y) {
                if b != smq.phi_a(a) && reach[q.head(b)][q.tail(a)] {
                    return Ok(true);
                }
            }
            let next = (q.tail(a), s * sign_of(a) * sign_of(smq.phi_a(a)));
            if !seen[idx(next.0, next.1)] {
                seen[idx(next.0, next.1)] = true;
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

// ---------------------------------------------------------------------------
// Cycle splitting
// ---------------------------------------------------------------------------

/// Shortest primitive cycle inside the allowed vertices, rotated to start
/// at its least arrow id and lexicographically least among those.
fn shortest_cycle(q: &Quiver, allowed: &[bool]) -> Option<Vec<usize>> {
    let n = q.vertex_count();
    let usable = |a: usize| allowed[q.tail(a)] && allowed[q.head(a)];
    // dist[u][v]: fewest arrows on a walk from u to v inside the allowed set.
    let mut dist = vec![vec![usize::MAX; n]; n];
    for u in (0..n).filter(|&u| allowed[u]) {
        dist[u][u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for a in q.arrows_from(x).filter(|&a| usable(a)) {
                let h = q.head(a);
                if dist[u][h] == usize::MAX {
                    dist[u][h] = dist[u][x] + 1;
                    queue.push_back(h);
                }
            }
        }
    }
    let len = (0..q.arrow_count())
        .filter(|&a| usable(a))
        .filter_map(|a| {
            let d = dist[q.head(a)][q.tail(a)];
            (d != usize::MAX).then_some(d + 1)
        })
        .min()?;
    for first in (0..q.arrow_count()).filter(|&a| usable(a)) {
        let mut seq = vec![first];
        if extend_cycle(q, &usable, &dist, len, &mut seq) {
            return Some(seq);
        }
    }
    None
}

fn extend_cycle(
    q: &Quiver,
    usable: &dyn Fn(usize) -> bool,
    dist: &[Vec<usize>],
    len: usize,
    seq: &mut Vec<usize>,
) -> bool {
    let start = q.head(seq[0]);
    let x = q.tail(*seq.last().expect("nonempty"));
    if seq.len() == len {
        return x == start;
    }
    let remaining = len - seq.len();
    if dist[start][x] > remaining {
        return false;
    }
    let first = seq[0];
    let mut candidates: Vec<usize> = q
        .arrows_into(x)
        .filter(|&b| b > first && usable(b))
        .collect();
    candidates.sort_unstable();
    for b in candidates {
        seq.push(b);
        if extend_cycle(q, usable, dist, len, seq) {
            return true;
        }
        seq.pop();
    }
    false
}

/// The ε-simple on `c ∪ c*` for a primitive cycle `c`, and an explicit witness.
///
/// The witness lives on the whole quiver with dimension 1 or 2 on the
/// vertices of `c ∪ c*` and 0 elsewhere.
pub fn cykel_split(s: &SupermixedSetting, c: &Path) -> Result<(SimpleFactor, Representation)> {
    let smq = s.smq();
    let q = s.quiver();
    if let Path::Arrows(a) = c {
        Path::from_arrows(q, a.clone())?;
    }
    if !c.is_primitive_cycle(q) {
        return Err(Error::NotPrimitive);
    }
    let n = s.vertex_count();
    let mut on_c = vec![false; n];
    for v in c.vertices(q) {
        on_c[v] = true;
    }
    let mut in_union = vec![false; s.arrow_count()];
    for &a in c.arrows() {
        in_union[a] = true;
        in_union[smq.phi_a(a)] = true;
    }
    let union_vertices: Vec<bool> = (0..n).map(|v| on_c[v] || on_c[smq.phi_v(v)]).collect();
    let disjoint = (0..n).all(|v| !(on_c[v] && on_c[smq.phi_v(v)]));
    let special = (0..n).any(|v| union_vertices[v] && smq.is_symplectic(v))
        || (0..s.arrow_count()).any(|a| in_union[a] && smq.is_antisymmetric(a));

    let (kind, alpha, dim) = if disjoint {
        let alpha = DimensionVector(on_c.iter().map(|&b| u32::from(b)).collect());
        let dims = DimensionVector(union_vertices.iter().map(|&b| u32::from(b)).collect());
        (Some(FactorKind::General), alpha, dims)
    } else if !special {
        let alpha = DimensionVector(union_vertices.iter().map(|&b| u32::from(b)).collect());
        (Some(FactorKind::Orthogonal), alpha.clone(), alpha)
    } else {
        let alpha = DimensionVector(union_vertices.iter().map(|&b| u32::from(b)).collect());
        (None, alpha.clone(), alpha.scaled(2))
    };

    let ws = SupermixedSetting::new(smq.clone(), dim.clone())?;
    let gammas = ws.gammas();
    let mut matrices: Vec<Option<RationalMatrix>> = vec![None; s.arrow_count()];
    let size = |v: usize| dim[v] as usize;
    // Representatives: arrows of c first, so c carries identities.
    let mut order: Vec<usize> = c.arrows().to_vec();
    order.extend((0..s.arrow_count()).filter(|&a| in_union[a]));
    for a in order {
        if matrices[a].is_some() {
            continue;
        }
        let d = size(smq.head(a));
        let block = rep_involution_block(smq, &gammas, a)?;
        if smq.is_self_dual(a) {
            // Identity or Λ, whichever the involution fixes.
            let id = RationalMatrix::identity(d);
            let pick = if block.apply(id.as_slice()) == id.as_slice() {
                id
            } else {
                let l = RationalMatrix::symplectic(d);
                if block.apply(l.as_slice()) != l.as_slice() {
                    return Err(Error::Internal(format!(
                        "neither id nor Λ is fixed on self-dual arrow {a}"
                    )));
                }
                l
            };
            matrices[a] = Some(pick);
        } else {
            let id = RationalMatrix::identity(d);
            let image = block.apply(id.as_slice());
            let b = smq.phi_a(a);
            matrices[b] = Some(RationalMatrix::from_vec(
                size(smq.head(b)),
                size(smq.tail(b)),
                image,
            ));
            matrices[a] = Some(id);
        }
    }
    let matrices = matrices
        .into_iter()
        .enumerate()
        .map(|(a, m)| {
            m.unwrap_or_else(|| RationalMatrix::zeros(size(smq.head(a)), size(smq.tail(a))))
        })
        .collect();
    let witness = Representation::new(ws, matrices)?;
    if !witness.is_in_drep() {
        return Err(Error::Internal("cycle witness is not fixed by the involution".into()));
    }
    let kind = match kind {
        Some(k) => k,
        None => match centralizer_dim(&witness) {
            2 => FactorKind::General,
            4 => FactorKind::Symplectic,
            d => {
                return Err(Error::Internal(format!(
                    "cycle witness has centralizer of dimension {d}"
                )))
            }
        },
    };
    Ok((SimpleFactor::new(kind, alpha, 1), witness))
}

// ---------------------------------------------------------------------------
// Orthogonal ε-simples
// ---------------------------------------------------------------------------

/// Self-dual arrows whose `DRep` block is zero, and self-dual loops whose
/// block consists of the scalar matrices only.
fn o0_deletions(s: &SupermixedSetting) -> Result<Vec<bool>> {
    let smq = s.smq();
    let gammas = s.gammas();
    let mut drop = vec![false; s.arrow_count()];
    for (a, slot) in drop.iter_mut().enumerate() {
        if !smq.is_self_dual(a) {
            continue;
        }
        let block = rep_involution_block(smq, &gammas, a)?;
        let size = block.rows();
        let fixed = size - (&block - &RationalMatrix::identity(size)).rank();
        if fixed == 0 {
            *slot = true;
        } else if smq.head(a) == smq.tail(a) && fixed == 1 {
            let id = RationalMatrix::identity(s.dim(smq.head(a)) as usize);
            *slot = block.apply(id.as_slice()) == id.as_slice();
        }
    }
    Ok(drop)
}

/// Orthogonal ε-simples of dimension `γ̄` in `DRep(Q, γ)`.
pub fn has_orthogonal_simples(s: &SupermixedSetting) -> Result<SimplesReport> {
    let mut trace = Vec::new();
    let answer = orthogonal(s, 0, None, &mut trace)?;
    Ok(SimplesReport { answer, trace })
}

fn orthogonal(
    s: &SupermixedSetting,
    depth: usize,
    bound: Option<(u64, u64)>,
    trace: &mut Vec<TraceEntry>,
) -> Result<bool> {
    let mut s = s.clone();
    if !s.is_sincere() {
        let before = s.summary();
        s = s.support().0;
        trace.push(TraceEntry {
            step: Step::S0,
            depth,
            measure: measure(&s.gamma_bar().0),
            setting: before,
            detail: format!("restricted to the support: {}", s.summary()),
        });
    }
    let m = measure(&s.gamma_bar().0);
    if let Some(b) = bound {
        if m >= b {
            return Err(Error::Internal(format!(
                "orthogonal recursion did not decrease its measure: {m:?} ≥ {b:?}"
            )));
        }
    }
    let entry = |step, setting: &SupermixedSetting, detail: String| TraceEntry {
        step,
        depth,
        measure: m,
        setting: setting.summary(),
        detail,
    };
    if s.vertex_count() == 0 {
        trace.push(entry(Step::S0, &s, "empty support: no simples".into()));
        return Ok(false);
    }

    let drop = o0_deletions(&s)?;
    let dropped: Vec<usize> = (0..drop.len()).filter(|&a| drop[a]).collect();
    if !dropped.is_empty() {
        let after = s.without_arrows(&drop);
        trace.push(entry(
            Step::O0,
            &s,
            format!("deleted arrows {dropped:?} with zero or scalar blocks"),
        ));
        s = after;
    }

    if !has_simples_lbp(s.quiver(), s.gamma_bar())? {
        trace.push(entry(Step::O1, &s, "Rep(Q, γ̄) has no simples".into()));
        return Ok(false);
    }
    let smq = s.smq();
    for v in 0..s.vertex_count() {
        let w = smq.phi_v(v);
        if w != v && s.dim(v) == 1 && !exists_non_antisymmetric_path(&s, v, w)? {
            trace.push(entry(
                Step::O1,
                &s,
                format!("every path {v} → {w} is antisymmetric"),
            ));
            return Ok(false);
        }
    }

    if is_basic(&s)? {
        trace.push(entry(Step::O2, &s, "basic setting: orthogonal simples exist".into()));
        return Ok(true);
    }

    let big: Vec<bool> = s.gamma_bar().iter().map(|&d| d >= 2).collect();
    if let Some(cycle) = shortest_cycle(s.quiver(), &big) {
        let c = Path::from_arrows(s.quiver(), cycle)?;
        let (factor, _) = cykel_split(&s, &c)?;
        let partial = SemisimpleDecomposition::new(vec![factor.clone()]);
        let full = complete_decomposition(&s, &partial)?;
        let local = local_mixed_setting(&s, &full)?;
        trace.push(entry(
            Step::O3A,
            &s,
            format!(
                "split {} factor α = {} along cycle {c}; local setting {}",
                factor.kind,
                factor.alpha,
                local.summary()
            ),
        ));
        return orthogonal(&local, depth + 1, Some(m), trace);
    }

    let beta = choose_beta(&s)?;
    let factor = SimpleFactor::new(FactorKind::Orthogonal, beta.clone(), 1);
    let full = complete_decomposition(&s, &SemisimpleDecomposition::new(vec![factor]))?;
    let local = local_mixed_setting(&s, &full)?;
    trace.push(entry(
        Step::O3B,
        &s,
        format!("basic subsetting β = {beta}; local setting {}", local.summary()),
    ));
    orthogonal(&local, depth + 1, Some(m), trace)
}

/// Whether `(Q, β)` carries an orthogonal ε-simple by the basic-setting lemma,
/// after restricting to the support and removing forced-zero or scalar arrows.
fn beta_admissible(s: &SupermixedSetting, beta: &DimensionVector) -> Result<bool> {
    let Ok(sb) = s.with_gamma_bar(beta.clone()) else {
        return Ok(false);
    };
    let (sb, _) = sb.support();
    if sb.vertex_count() == 0 {
        return Ok(false);
    }
    let sb = sb.without_arrows(&o0_deletions(&sb)?);
    if !is_basic(&sb)? {
        return Ok(false);
    }
    for v in 0..sb.vertex_count() {
        let w = sb.smq().phi_v(v);
        if sb.dim(v) == 1 && !exists_non_antisymmetric_path(&sb, v, w)? {
            return Ok(false);
        }
    }
    SimpleFactor::new(FactorKind::Orthogonal, beta.clone(), 1)
        .check(s.smq())
        .map_or(Ok(false), |()| Ok(true))
}

/// `β` for the basic-subsetting step: the canonical candidate (2 where
/// basicness forces it, 1 elsewhere) if admissible, otherwise the largest
/// admissible φ-symmetric `β ≤ min(γ̄, 2)` with `β ≠ γ̄`, least in
/// lexicographic order among those of maximal total.
fn choose_beta(s: &SupermixedSetting) -> Result<DimensionVector> {
    let smq = s.smq();
    let n = s.vertex_count();
    let mut canonical = vec![1u32; n];
    for v in 0..n {
        if smq.is_symplectic(v) {
            canonical[v] = 2;
        }
    }
    for a in 0..s.arrow_count() {
        if smq.is_antisymmetric(a) {
            canonical[smq.head(a)] = 2;
            canonical[smq.tail(a)] = 2;
        }
    }
    for v in 0..n {
        let m = canonical[v].max(canonical[smq.phi_v(v)]);
        canonical[v] = m;
    }
    let canonical = DimensionVector(canonical);
    if canonical.le(s.gamma_bar())
        && &canonical != s.gamma_bar()
        && beta_admissible(s, &canonical)?
    {
        return Ok(canonical);
    }
    let orbits = smq.vertex_orbits();
    let mut candidates: Vec<DimensionVector> = vec![DimensionVector::zeros(n)];
    for &v in &orbits {
        let top = s.dim(v).min(2);
        let mut next = Vec::new();
        for c in &candidates {
            for x in 0..=top {
                let mut c = c.clone();
                c.0[v] = x;
                c.0[smq.phi_v(v)] = x;
                next.push(c);
            }
        }
        candidates = next;
    }
    candidates.retain(|b| !b.is_zero() && b != s.gamma_bar());
    candidates.sort_by(|a, b| b.total().cmp(&a.total()).then_with(|| a.0.cmp(&b.0)));
    for b in candidates {
        if beta_admissible(s, &b)? {
            return Ok(b);
        }
    }
    Err(Error::BetaSelection(format!(
        "no admissible basic subsetting below {} in {}",
        s.gamma_bar(),
        s.summary()
    )))
}

// ---------------------------------------------------------------------------
// Symplectic and general ε-simples
// ---------------------------------------------------------------------------

/// `γ̄ / 2` if every entry is even.
fn halved(gamma_bar: &DimensionVector) -> Option<DimensionVector> {
    gamma_bar
        .iter()
        .all(|&d| d % 2 == 0)
        .then(|| DimensionVector(gamma_bar.iter().map(|&d| d / 2).collect()))
}

/// Strict setting with the signs flipped and dimension vector `β`, or `None`
/// when `β` violates the parity of the flipped setting.
fn minus_with(s: &SupermixedSetting, beta: &DimensionVector) -> Result<Option<SupermixedSetting>> {
    let mut raw = s.to_raw();
    raw.gamma_bar = beta.clone();
    match normalize_to_strict(&raw.negated_signs()) {
        Ok(x) => Ok(Some(x)),
        Err(Error::Invalid(v)) if v.iter().all(|x| x.rule == "parity") => Ok(None),
        Err(e) => Err(e),
    }
}

/// All vertices orthogonal, `σ_a ↦ σ_a ε_{t(a)}`, with dimension vector `β`.
fn plus_with(s: &SupermixedSetting, beta: &DimensionVector) -> Result<SupermixedSetting> {
    plus_transform(s).with_gamma_bar(beta.clone())
}

/// Symplectic ε-simples: `γ̄ = 2β` and orthogonal simples of dimension `β`
/// for the sign-flipped setting.
pub fn has_symplectic_simples_report(s: &SupermixedSetting) -> Result<SimplesReport> {
    let Some(beta) = halved(s.gamma_bar()) else {
        return Ok(SimplesReport {
            answer: false,
            trace: Vec::new(),
        });
    };
    match minus_with(s, &beta)? {
        Some(m) => has_orthogonal_simples(&m),
        None => Ok(SimplesReport {
            answer: false,
            trace: Vec::new(),
        }),
    }
}

pub fn has_symplectic_simples(s: &SupermixedSetting) -> Result<bool> {
    Ok(has_symplectic_simples_report(s)?.answer)
}

/// Some `α ≠ α*` with `α + α* = γ̄` admits simples.
fn general_unbalanced(s: &SupermixedSetting) -> Result<bool> {
    let smq = s.smq();
    for alpha in half_splits(smq, s.gamma_bar()) {
        let dual = dual_dimension_vector(smq, &alpha)?;
        if alpha != dual && has_simples_lbp(s.quiver(), &alpha)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every simple of the setting is isomorphic to an orthogonal ε-simple.
fn all_orthogonal_if_any(s: &SupermixedSetting) -> Result<bool> {
    Ok(has_orthogonal_simples(s)?.answer && all_simples_orthogonal(s)?)
}

/// `s` with dimension vector `β`, or `None` when `β` breaks parity.
fn same_signs_with(s: &SupermixedSetting, beta: &DimensionVector) -> Result<Option<SupermixedSetting>> {
    match s.with_gamma_bar(beta.clone()) {
        Ok(x) => Ok(Some(x)),
        Err(Error::Invalid(v)) if v.iter().all(|x| x.rule == "parity") => Ok(None),
        Err(e) => Err(e),
    }
}

/// General ε-simples `S ⊕ S*` with `S ≇ S*`.
///
/// Either `α ≠ α*` for some `α + α* = γ̄` with simples, or `γ̄ = 2β` and a
/// generic simple `S` of dimension `β` is not self-dual. A self-dual simple
/// carries a form of type `ε` or `−ε`, so it is an orthogonal simple of
/// `ℚ` or of `ℚ⁻` at `β`; generic simples avoid both loci unless one of
/// them is all of `iss(Q, β)`.
pub fn has_general_simples(s: &SupermixedSetting) -> Result<bool> {
    if general_unbalanced(s)? {
        return Ok(true);
    }
    let Some(beta) = halved(s.gamma_bar()) else {
        return Ok(false);
    };
    if !has_simples_lbp(s.quiver(), &beta)? {
        return Ok(false);
    }
    for self_dual in [same_signs_with(s, &beta)?, minus_with(s, &beta)?].into_iter().flatten() {
        if all_orthogonal_if_any(&self_dual)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The balanced branch read literally: simples of dimension `β` that are
/// not all isomorphic to orthogonal ε⁺-simples of `ℚ⁺`. This misses
/// self-dual simples with a form of the opposite type, and `ℚ⁺` loses the
/// sign of cycles through arrow pairs joining vertices with different `ε`;
/// kept for comparison with [`has_general_simples`].
pub fn has_general_simples_literal(s: &SupermixedSetting) -> Result<bool> {
    if general_unbalanced(s)? {
        return Ok(true);
    }
    let Some(beta) = halved(s.gamma_bar()) else {
        return Ok(false);
    };
    if !has_simples_lbp(s.quiver(), &beta)? {
        return Ok(false);
    }
    Ok(!all_orthogonal_if_any(&plus_with(s, &beta)?)?)
}

/// Whether generic simples of dimension `γ̄` all carry an orthogonal form:
/// `dim iss(Q, γ̄) = dim Diss(ℚ, γ)`.
pub fn all_simples_orthogonal(s: &SupermixedSetting) -> Result<bool> {
    let iss = dim_iss(s.quiver(), s.gamma_bar())?;
    let diss = diss_dim(s)?;
    Ok(iss == diss)
}

/// Closed-form answer for one vertex with `k` symmetric and `l`
/// antisymmetric loops, as stated in the literature.
pub fn one_vertex_classification(eps: Sign, n: u32, k: u32, l: u32) -> Result<bool> {
    if n == 0 {
        return Err(Error::Parity("dimension must be positive".into()));
    }
    Ok(match eps {
        Sign::Plus => match n {
            1 => true,
            2 => k + l >= 2 && k >= 1,
            _ => k + l >= 2,
        },
        Sign::Minus => {
            if n % 2 == 1 {
                return Err(Error::Parity(format!(
                    "symplectic vertex of odd dimension {n}"
                )));
            }
            match n {
                2 => k >= 2,
                4 | 6 => k + l >= 2 && (k >= 1 || l >= 3),
                _ => k + l >= 2,
            }
        }
    })
}

/// Number of symmetric loops at the dimension-2 symplectic vertex reached
/// after splitting `n/2` symplectic factors off one symplectic vertex of
/// dimension `n` carrying `l ≥ 2` antisymmetric and no symmetric loops.
pub fn terminal_symmetric_loops(n: u32, l: u32) -> i64 {
    let m = i64::from(n / 2);
    let l = i64::from(l);
    ((l - 1) * m * m - (l + 1) * m + 2) / 2
}
