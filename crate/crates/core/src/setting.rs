//! Supermixed quivers and settings.

use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{Arrow, DimensionVector, Path, Quiver};
use crate::RationalMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(x: i64) -> Option<Self> {
        match x {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexKind {
    Orthogonal,
    Symplectic,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArrowKind {
    Symmetric,
    Antisymmetric,
    General,
}

/// What a [`Violation`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subject {
    Vertex(usize),
    Arrow(usize),
    Setting,
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Vertex(v) => write!(f, "vertex {v}"),
            Subject::Arrow(a) => write!(f, "arrow {a}"),
            Subject::Setting => write!(f, "setting"),
        }
    }
}

/// One failed well-formedness rule. `rule` is a short stable identifier such
/// as `M1`, `parity` or `strictness`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub rule: &'static str,
    pub subject: Subject,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.rule, self.subject, self.message)
    }
}

fn violation(rule: &'static str, subject: Subject, message: impl Into<String>) -> Violation {
    Violation {
        rule,
        subject,
        message: message.into(),
    }
}

/// Setting data without the strictness requirement, optionally with explicit
/// forms `γ_v`. All fields are public; nothing is checked until [`validate`].
#[derive(Debug, Clone, PartialEq)]
pub struct RawSetting {
    pub quiver: Quiver,
    pub phi_v: Vec<usize>,
    pub phi_a: Vec<usize>,
    pub eps: Vec<Sign>,
    pub sigma: Vec<Sign>,
    pub gamma_bar: DimensionVector,
    pub gamma: Option<Vec<RationalMatrix>>,
}

/// A quiver with vertex and arrow involutions and sign maps satisfying M1 to M3.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupermixedQuiver {
    base: Quiver,
    phi_v: Vec<usize>,
    phi_a: Vec<usize>,
    eps: Vec<Sign>,
    sigma: Vec<Sign>,
}

impl SupermixedQuiver {
    pub fn new(
        base: Quiver,
        phi_v: Vec<usize>,
        phi_a: Vec<usize>,
        eps: Vec<Sign>,
        sigma: Vec<Sign>,
    ) -> Result<Self> {
        let mut out = Vec::new();
        structure_violations(&base, &phi_v, &phi_a, &eps, &sigma, &mut out);
        if !out.is_empty() {
            return Err(Error::Invalid(out));
        }
        Ok(Self {
            base,
            phi_v,
            phi_a,
            eps,
            sigma,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.base
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.base.arrow_count()
    }

    pub fn head(&self, a: usize) -> usize {
        self.base.head(a)
    }

    pub fn tail(&self, a: usize) -> usize {
        self.base.tail(a)
    }

    pub fn phi_v(&self, v: usize) -> usize {
        self.phi_v[v]
    }

    pub fn phi_a(&self, a: usize) -> usize {
        self.phi_a[a]
    }

    pub fn eps(&self, v: usize) -> Sign {
        self.eps[v]
    }

    pub fn sigma(&self, a: usize) -> Sign {
        self.sigma[a]
    }

    pub fn phi_v_map(&self) -> &[usize] {
        &self.phi_v
    }

    pub fn phi_a_map(&self) -> &[usize] {
        &self.phi_a
    }

    pub fn eps_map(&self) -> &[Sign] {
        &self.eps
    }

    pub fn sigma_map(&self) -> &[Sign] {
        &self.sigma
    }

    pub fn is_fixed_vertex(&self, v: usize) -> bool {
        self.phi_v[v] == v
    }

    pub fn is_self_dual(&self, a: usize) -> bool {
        self.phi_a[a] == a
    }

    pub fn vertex_kind(&self, v: usize) -> VertexKind {
        match (self.is_fixed_vertex(v), self.eps[v]) {
            (false, _) => VertexKind::General,
            (true, Sign::Plus) => VertexKind::Orthogonal,
            (true, Sign::Minus) => VertexKind::Symplectic,
        }
    }

    pub fn arrow_kind(&self, a: usize) -> ArrowKind {
        match (self.is_self_dual(a), self.sigma[a]) {
            (false, _) => ArrowKind::General,
            (true, Sign::Plus) => ArrowKind::Symmetric,
            (true, Sign::Minus) => ArrowKind::Antisymmetric,
        }
    }

    pub fn is_symplectic(&self, v: usize) -> bool {
        self.vertex_kind(v) == VertexKind::Symplectic
    }

    pub fn is_antisymmetric(&self, a: usize) -> bool {
        self.arrow_kind(a) == ArrowKind::Antisymmetric
    }

    /// Strict-form sign maps: `+1` off the fixed points.
    pub fn is_strict(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.is_fixed_vertex(v) || self.eps[v].is_plus())
            && (0..self.arrow_count()).all(|a| self.is_self_dual(a) || self.sigma[a].is_plus())
    }

    /// Representatives of the φ-orbits on vertices (the smaller id of each pair).
    pub fn vertex_orbits(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.phi_v[v] >= v)
            .collect()
    }

    /// Representatives of the φ-orbits on arrows (the smaller id of each pair).
    pub fn arrow_orbits(&self) -> Vec<usize> {
        (0..self.arrow_count())
            .filter(|&a| self.phi_a[a] >= a)
            .collect()
    }

    fn strictified(mut self) -> Self {
        for v in 0..self.vertex_count() {
            if !self.is_fixed_vertex(v) {
                self.eps[v] = Sign::Plus;
            }
        }
        for a in 0..self.arrow_count() {
            if !self.is_self_dual(a) {
                self.sigma[a] = Sign::Plus;
            }
        }
        self
    }

    /// Sub-supermixed quiver on a φ-stable vertex subset (in the given order),
    /// keeping the arrows whose endpoints survive and are not in `drop_arrows`.
    ///
    /// Returns the quiver and the old→new vertex and arrow maps.
    pub(crate) fn restrict(
        &self,
        keep: &[usize],
        drop_arrows: &[bool],
    ) -> (SupermixedQuiver, Vec<Option<usize>>, Vec<Option<usize>>) {
        let mut vmap = vec![None; self.vertex_count()];
        for (new, &old) in keep.iter().enumerate() {
            vmap[old] = Some(new);
        }
        let mut amap = vec![None; self.arrow_count()];
        let mut arrows = Vec::new();
        let mut kept = Vec::new();
        for a in 0..self.arrow_count() {
            if drop_arrows.get(a).copied().unwrap_or(false) {
                continue;
            }
            if let (Some(t), Some(h)) = (vmap[self.tail(a)], vmap[self.head(a)]) {
                amap[a] = Some(arrows.len());
                arrows.push(Arrow::new(t, h));
                kept.push(a);
            }
        }
        let phi_v = keep
            .iter()
            .map(|&v| vmap[self.phi_v[v]].expect("vertex subset must be φ-stable"))
            .collect();
        let phi_a = kept
            .iter()
            .map(|&a| amap[self.phi_a[a]].expect("arrow subset must be φ-stable"))
            .collect();
        let smq = SupermixedQuiver {
            base: Quiver::new(keep.len(), arrows).expect("induced quiver is valid"),
            phi_v,
            phi_a,
            eps: keep.iter().map(|&v| self.eps[v]).collect(),
            sigma: kept.iter().map(|&a| self.sigma[a]).collect(),
        };
        (smq, vmap, amap)
    }
}

fn structure_violations(
    q: &Quiver,
    phi_v: &[usize],
    phi_a: &[usize],
    eps: &[Sign],
    sigma: &[Sign],
    out: &mut Vec<Violation>,
) {
    let n = q.vertex_count();
    let m = q.arrow_count();
    for (what, len, want) in [
        ("vertex involution", phi_v.len(), n),
        ("vertex signs", eps.len(), n),
        ("arrow involution", phi_a.len(), m),
        ("arrow signs", sigma.len(), m),
    ] {
        if len != want {
            out.push(violation(
                "shape",
                Subject::Setting,
                format!("{what} has length {len}, expected {want}"),
            ));
        }
    }
    if !out.is_empty() {
        return;
    }
    for v in 0..n {
        if phi_v[v] >= n || phi_v[phi_v[v]] != v {
            out.push(violation(
                "involution",
                Subject::Vertex(v),
                "vertex map is not an involution",
            ));
        }
    }
    for a in 0..m {
        if phi_a[a] >= m || phi_a[phi_a[a]] != a {
            out.push(violation(
                "involution",
                Subject::Arrow(a),
                "arrow map is not an involution",
            ));
        }
    }
    if !out.is_empty() {
        return;
    }
    for a in 0..m {
        let b = phi_a[a];
        if q.head(b) != phi_v[q.tail(a)] || q.tail(b) != phi_v[q.head(a)] {
            out.push(violation(
                "M1",
                Subject::Arrow(a),
                format!("dual arrow {b} does not run from φ(head) to φ(tail)"),
            ));
        }
        if q.head(a) == q.head(b) && a != b {
            out.push(violation(
                "M2",
                Subject::Arrow(a),
                format!("shares its head with its dual {b} but is not self-dual"),
            ));
        }
        if sigma[a] != sigma[b] {
            out.push(violation(
                "M3",
                Subject::Arrow(a),
                format!("σ differs from the sign of its dual {b}"),
            ));
        }
    }
    for v in 0..n {
        if eps[v] != eps[phi_v[v]] {
            out.push(violation(
                "M3",
                Subject::Vertex(v),
                format!("ε differs from the sign of its dual {}", phi_v[v]),
            ));
        }
    }
}

/// All well-formedness problems of a raw setting (empty iff valid).
pub fn validate(raw: &RawSetting) -> Vec<Violation> {
    let mut out = Vec::new();
    structure_violations(
        &raw.quiver,
        &raw.phi_v,
        &raw.phi_a,
        &raw.eps,
        &raw.sigma,
        &mut out,
    );
    let n = raw.quiver.vertex_count();
    if raw.gamma_bar.len() != n {
        out.push(violation(
            "shape",
            Subject::Setting,
            format!(
                "dimension vector has length {}, expected {n}",
                raw.gamma_bar.len()
            ),
        ));
        return out;
    }
    if out.iter().any(|v| v.rule == "shape" || v.rule == "involution") {
        return out;
    }
    dimension_violations(&raw.phi_v, &raw.eps, &raw.gamma_bar, &mut out);
    if let Some(gamma) = &raw.gamma {
        gamma_violations(raw, gamma, &mut out);
    }
    out
}

fn dimension_violations(
    phi_v: &[usize],
    eps: &[Sign],
    gamma_bar: &DimensionVector,
    out: &mut Vec<Violation>,
) {
    for v in 0..phi_v.len() {
        if gamma_bar[v] != gamma_bar[phi_v[v]] {
            out.push(violation(
                "dimension-symmetry",
                Subject::Vertex(v),
                format!(
                    "dimension {} differs from its dual's {}",
                    gamma_bar[v], gamma_bar[phi_v[v]]
                ),
            ));
        }
        if phi_v[v] == v && eps[v] == Sign::Minus && gamma_bar[v] % 2 == 1 {
            out.push(violation(
                "parity",
                Subject::Vertex(v),
                format!("symplectic vertex has odd dimension {}", gamma_bar[v]),
            ));
        }
    }
}

fn gamma_violations(raw: &RawSetting, gamma: &[RationalMatrix], out: &mut Vec<Violation>) {
    let n = raw.quiver.vertex_count();
    if gamma.len() != n {
        out.push(violation(
            "shape",
            Subject::Setting,
            format!("{} form matrices given, expected {n}", gamma.len()),
        ));
        return;
    }
    for v in 0..n {
        let d = raw.gamma_bar[v] as usize;
        if gamma[v].shape() != (d, d) {
            out.push(violation(
                "gamma",
                Subject::Vertex(v),
                format!("form matrix is not {d}×{d}"),
            ));
            continue;
        }
        if gamma[v].inverse().is_none() {
            out.push(violation("gamma", Subject::Vertex(v), "form matrix is singular"));
        }
    }
    if out.iter().any(|x| x.rule == "gamma") {
        return;
    }
    for v in 0..n {
        let w = raw.phi_v[v];
        if gamma[w].shape() != gamma[v].shape() {
            continue;
        }
        let mut expected = gamma[w].transpose();
        if raw.eps[v] == Sign::Minus {
            expected = -&expected;
        }
        if gamma[v] != expected {
            out.push(violation(
                "gamma",
                Subject::Vertex(v),
                "form matrix is not ε times the transpose of its dual's",
            ));
        }
    }
}

/// A valid strict setting: the canonical representative of its isomorphism
/// class. Forms are implicit (`id` or `Λ`), see [`SupermixedSetting::gamma`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupermixedSetting {
    smq: SupermixedQuiver,
    gamma_bar: DimensionVector,
}

impl SupermixedSetting {
    pub fn new(smq: SupermixedQuiver, gamma_bar: DimensionVector) -> Result<Self> {
        gamma_bar.check_len(smq.vertex_count())?;
        let mut out = Vec::new();
        dimension_violations(&smq.phi_v, &smq.eps, &gamma_bar, &mut out);
        for v in 0..smq.vertex_count() {
            if !smq.is_fixed_vertex(v) && smq.eps[v] == Sign::Minus {
                out.push(violation(
                    "strictness",
                    Subject::Vertex(v),
                    "general vertex must have ε = +1",
                ));
            }
        }
        for a in 0..smq.arrow_count() {
            if !smq.is_self_dual(a) && smq.sigma[a] == Sign::Minus {
                out.push(violation(
                    "strictness",
                    Subject::Arrow(a),
                    "general arrow must have σ = +1",
                ));
            }
        }
        if !out.is_empty() {
            return Err(Error::Invalid(out));
        }
        Ok(Self { smq, gamma_bar })
    }

    pub fn smq(&self) -> &SupermixedQuiver {
        &self.smq
    }

    pub fn quiver(&self) -> &Quiver {
        &self.smq.base
    }

    pub fn gamma_bar(&self) -> &DimensionVector {
        &self.gamma_bar
    }

    pub fn dim(&self, v: usize) -> u32 {
        self.gamma_bar[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.smq.vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.smq.arrow_count()
    }

    /// Strict form at `v`: `Λ` at symplectic vertices, identity elsewhere.
    pub fn gamma(&self, v: usize) -> RationalMatrix {
        let d = self.gamma_bar[v] as usize;
        if self.smq.is_symplectic(v) {
            RationalMatrix::symplectic(d)
        } else {
            RationalMatrix::identity(d)
        }
    }

    pub fn gammas(&self) -> Vec<RationalMatrix> {
        (0..self.vertex_count()).map(|v| self.gamma(v)).collect()
    }

    /// The same quiver with another dimension vector.
    pub fn with_gamma_bar(&self, gamma_bar: DimensionVector) -> Result<Self> {
        Self::new(self.smq.clone(), gamma_bar)
    }

    pub fn to_raw(&self) -> RawSetting {
        RawSetting {
            quiver: self.smq.base.clone(),
            phi_v: self.smq.phi_v.clone(),
            phi_a: self.smq.phi_a.clone(),
            eps: self.smq.eps.clone(),
            sigma: self.smq.sigma.clone(),
            gamma_bar: self.gamma_bar.clone(),
            gamma: None,
        }
    }

    /// Restriction to the vertices of positive dimension, with the old→new vertex map.
    pub fn support(&self) -> (SupermixedSetting, Vec<Option<usize>>) {
        let keep: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| self.gamma_bar[v] > 0)
            .collect();
        let (smq, vmap, _) = self.smq.restrict(&keep, &[]);
        let gb = DimensionVector(keep.iter().map(|&v| self.gamma_bar[v]).collect());
        (
            SupermixedSetting {
                smq,
                gamma_bar: gb,
            },
            vmap,
        )
    }

    /// Remove a φ-stable set of arrows.
    pub fn without_arrows(&self, drop: &[bool]) -> SupermixedSetting {
        let keep: Vec<usize> = (0..self.vertex_count()).collect();
        let (smq, _, _) = self.smq.restrict(&keep, drop);
        SupermixedSetting {
            smq,
            gamma_bar: self.gamma_bar.clone(),
        }
    }

    pub fn is_sincere(&self) -> bool {
        self.gamma_bar.is_sincere()
    }

    /// Short human-readable summary.
    pub fn summary(&self) -> String {
        let verts: Vec<String> = (0..self.vertex_count())
            .map(|v| {
                let k = match self.smq.vertex_kind(v) {
                    VertexKind::Orthogonal => "O",
                    VertexKind::Symplectic => "Sp",
                    VertexKind::General => "G",
                };
                format!("{k}{}", self.gamma_bar[v])
            })
            .collect();
        let mut sym = 0;
        let mut anti = 0;
        let mut gen = 0;
        for a in 0..self.arrow_count() {
            match self.smq.arrow_kind(a) {
                ArrowKind::Symmetric => sym += 1,
                ArrowKind::Antisymmetric => anti += 1,
                ArrowKind::General => gen += 1,
            }
        }
        format!(
            "vertices [{}], arrows {} (symmetric {sym}, antisymmetric {anti}, general {gen})",
            verts.join(" "),
            self.arrow_count()
        )
    }
}

/// Strict representative of a valid raw setting.
pub fn normalize_to_strict(raw: &RawSetting) -> Result<SupermixedSetting> {
    let v = validate(raw);
    if !v.is_empty() {
        return Err(Error::Invalid(v));
    }
    let smq = SupermixedQuiver {
        base: raw.quiver.clone(),
        phi_v: raw.phi_v.clone(),
        phi_a: raw.phi_a.clone(),
        eps: raw.eps.clone(),
        sigma: raw.sigma.clone(),
    }
    .strictified();
    SupermixedSetting::new(smq, raw.gamma_bar.clone())
}

impl RawSetting {
    /// Sign flip `ε ↦ -ε`, `σ ↦ -σ` everywhere, without strictifying or
    /// checking parity.
    pub fn negated_signs(&self) -> RawSetting {
        let mut out = self.clone();
        out.eps.iter_mut().for_each(|e| *e = -*e);
        out.sigma.iter_mut().for_each(|s| *s = -*s);
        out.gamma = None;
        out
    }

    /// `ε ↦ 1`, `σ_a ↦ σ_a ε_{t(a)}` on self-dual arrows at fixed vertices,
    /// without strictifying. Signs at general vertices are a choice of
    /// forms that strictification undoes, so they do not enter.
    pub fn plus_signs(&self) -> RawSetting {
        let mut out = self.clone();
        for (a, s) in out.sigma.iter_mut().enumerate() {
            let t = self.quiver.tail(a);
            if self.phi_a[a] == a && self.phi_v[t] == t {
                *s = *s * self.eps[self.quiver.tail(a)];
            }
        }
        out.eps.iter_mut().for_each(|e| *e = Sign::Plus);
        out.gamma = None;
        out
    }
}

/// `(α*)_v = α_{φ(v)}`.
pub fn dual_dimension_vector(
    smq: &SupermixedQuiver,
    alpha: &DimensionVector,
) -> Result<DimensionVector> {
    alpha.check_len(smq.vertex_count())?;
    Ok(DimensionVector(
        (0..smq.vertex_count()).map(|v| alpha[smq.phi_v(v)]).collect(),
    ))
}

/// The `Q⁻` transform: fixed signs flipped, then strictified.
pub fn minus_transform(s: &SupermixedSetting) -> Result<SupermixedSetting> {
    let mut smq = s.smq.clone();
    smq.eps.iter_mut().for_each(|e| *e = -*e);
    smq.sigma.iter_mut().for_each(|x| *x = -*x);
    let smq = smq.strictified();
    SupermixedSetting::new(smq, s.gamma_bar.clone()).map_err(|e| match e {
        Error::Invalid(v) if v.iter().all(|x| x.rule == "parity") => Error::Parity(
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; "),
        ),
        other => other,
    })
}

/// The `Q⁺` transform: all vertices orthogonal, `σ⁺_a = σ_a ε_{t(a)}`.
pub fn plus_transform(s: &SupermixedSetting) -> SupermixedSetting {
    let mut smq = s.smq.clone();
    for a in 0..smq.arrow_count() {
        smq.sigma[a] = smq.sigma[a] * s.smq.eps[smq.tail(a)];
    }
    smq.eps.iter_mut().for_each(|e| *e = Sign::Plus);
    let smq = smq.strictified();
    SupermixedSetting::new(smq, s.gamma_bar.clone()).expect("plus transform keeps validity")
}

/// Image under the path-algebra anti-automorphism `a ↦ σ_a ε_{h(a)} φ(a)`.
pub fn path_dual(s: &SupermixedSetting, p: &Path) -> Result<(Path, Sign)> {
    path_dual_smq(&s.smq, p)
}

pub fn path_dual_smq(smq: &SupermixedQuiver, p: &Path) -> Result<(Path, Sign)> {
    match p {
        Path::Trivial(v) => {
            smq.base.check_vertex(*v)?;
            Ok((Path::Trivial(smq.phi_v(*v)), Sign::Plus))
        }
        Path::Arrows(arrows) => {
            let valid = Path::from_arrows(&smq.base, arrows.clone())?;
            let mut sign = Sign::Plus;
            for &a in valid.arrows() {
                sign = sign * smq.sigma(a) * smq.eps(smq.head(a));
            }
            let dual = arrows.iter().rev().map(|&a| smq.phi_a(a)).collect();
            Ok((Path::Arrows(dual), sign))
        }
    }
}

/// Dimension vectors `α` with `α + α* = γ̄`, in lexicographic order.
pub fn half_splits(smq: &SupermixedQuiver, gamma_bar: &DimensionVector) -> Vec<DimensionVector> {
    let n = smq.vertex_count();
    let mut out = vec![vec![0u32; n]];
    for v in smq.vertex_orbits() {
        let d = gamma_bar[v];
        let w = smq.phi_v(v);
        let mut next = Vec::new();
        for partial in &out {
            if v == w {
                if d % 2 == 0 {
                    let mut p = partial.clone();
                    p[v] = d / 2;
                    next.push(p);
                }
            } else {
                for x in 0..=d {
                    let mut p = partial.clone();
                    p[v] = x;
                    p[w] = d - x;
                    next.push(p);
                }
            }
        }
        out = next;
    }
    let mut out: Vec<DimensionVector> = out.into_iter().map(DimensionVector).collect();
    out.sort();
    out
}

/// Incremental constructor for strict settings.
#[derive(Debug, Clone, Default)]
pub struct SettingBuilder {
    phi_v: Vec<usize>,
    eps: Vec<Sign>,
    dims: Vec<u32>,
    arrows: Vec<Arrow>,
    phi_a: Vec<usize>,
    sigma: Vec<Sign>,
}

impl SettingBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn push_vertex(&mut self, dual: usize, eps: Sign, dim: u32) -> usize {
        self.phi_v.push(dual);
        self.eps.push(eps);
        self.dims.push(dim);
        self.phi_v.len() - 1
    }

    pub fn orthogonal(&mut self, dim: u32) -> usize {
        let v = self.phi_v.len();
        self.push_vertex(v, Sign::Plus, dim)
    }

    pub fn symplectic(&mut self, dim: u32) -> usize {
        let v = self.phi_v.len();
        self.push_vertex(v, Sign::Minus, dim)
    }

    /// Fixed vertex with the given sign.
    pub fn fixed(&mut self, eps: Sign, dim: u32) -> usize {
        let v = self.phi_v.len();
        self.push_vertex(v, eps, dim)
    }

    /// Two general vertices dual to each other, both of dimension `dim`.
    pub fn general_pair(&mut self, dim: u32) -> (usize, usize) {
        let v = self.phi_v.len();
        self.push_vertex(v + 1, Sign::Plus, dim);
        self.push_vertex(v, Sign::Plus, dim);
        (v, v + 1)
    }

    /// Self-dual arrow `tail → head`; requires `head = φ(tail)`.
    pub fn self_dual_arrow(&mut self, tail: usize, head: usize, sigma: Sign) -> usize {
        let a = self.arrows.len();
        self.arrows.push(Arrow::new(tail, head));
        self.phi_a.push(a);
        self.sigma.push(sigma);
        a
    }

    /// Arrow `tail → head` together with its dual `φ(head) → φ(tail)`.
    /// Returns `(a, φ(a))`.
    pub fn arrow_pair(&mut self, tail: usize, head: usize) -> (usize, usize) {
        let a = self.arrows.len();
        self.arrows.push(Arrow::new(tail, head));
        self.arrows
            .push(Arrow::new(self.phi_v[head], self.phi_v[tail]));
        self.phi_a.extend([a + 1, a]);
        self.sigma.extend([Sign::Plus, Sign::Plus]);
        (a, a + 1)
    }

    pub fn build(&self) -> Result<SupermixedSetting> {
        let q = Quiver::new(self.phi_v.len(), self.arrows.clone())?;
        let smq = SupermixedQuiver::new(
            q,
            self.phi_v.clone(),
            self.phi_a.clone(),
            self.eps.clone(),
            self.sigma.clone(),
        )?;
        SupermixedSetting::new(smq, DimensionVector(self.dims.clone()))
    }
}

/// One fixed vertex of dimension `n` with `k` symmetric and `l` antisymmetric loops.
pub fn one_vertex_setting(eps: Sign, n: u32, k: usize, l: usize) -> Result<SupermixedSetting> {
    let mut b = SettingBuilder::new();
    let v = b.fixed(eps, n);
    for _ in 0..k {
        b.self_dual_arrow(v, v, Sign::Plus);
    }
    for _ in 0..l {
        b.self_dual_arrow(v, v, Sign::Minus);
    }
    b.build()
}
