//! Semisimple decompositions and the local mixed quiver setting at a
//! semisimple point.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{
    euler_cross, has_simples_lbp, local_quiver, neg_euler, Arrow, DimensionVector, Quiver,
};
use crate::setting::{
    dual_dimension_vector, Sign, SupermixedQuiver, SupermixedSetting, VertexKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FactorKind {
    Orthogonal,
    Symplectic,
    General,
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactorKind::Orthogonal => "orthogonal",
            FactorKind::Symplectic => "symplectic",
            FactorKind::General => "general",
        })
    }
}

/// An ε-simple summand `S^e` (orthogonal), `(S ⊕ S*)^e` with `S ≅ S*`
/// (symplectic) or with `S ≇ S*` (general). `alpha` is the dimension vector of `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleFactor {
    pub kind: FactorKind,
    pub alpha: DimensionVector,
    pub mult: u32,
}

impl SimpleFactor {
    pub fn new(kind: FactorKind, alpha: DimensionVector, mult: u32) -> Self {
        Self { kind, alpha, mult }
    }

    /// Contribution to the ambient dimension vector.
    pub fn total(&self, smq: &SupermixedQuiver) -> Result<DimensionVector> {
        Ok(match self.kind {
            FactorKind::Orthogonal => self.alpha.scaled(self.mult),
            FactorKind::Symplectic => self.alpha.scaled(2 * self.mult),
            FactorKind::General => self
                .alpha
                .add(&dual_dimension_vector(smq, &self.alpha)?)
                .scaled(self.mult),
        })
    }

    /// Shape checks that do not depend on the ambient dimension.
    pub fn check(&self, smq: &SupermixedQuiver) -> Result<()> {
        self.alpha.check_len(smq.vertex_count())?;
        if self.mult == 0 {
            return Err(Error::InvalidDecomposition(
                "factor multiplicity must be positive".into(),
            ));
        }
        if self.kind != FactorKind::General && dual_dimension_vector(smq, &self.alpha)? != self.alpha
        {
            return Err(Error::InvalidDecomposition(format!(
                "{} factor {} is not φ-symmetric",
                self.kind, self.alpha
            )));
        }
        // A nondegenerate ε-form on S forces even dimension where it is
        // alternating: at symplectic vertices for orthogonal factors, at
        // orthogonal vertices for symplectic ones.
        let forbidden = match self.kind {
            FactorKind::Orthogonal => Some(VertexKind::Symplectic),
            FactorKind::Symplectic => Some(VertexKind::Orthogonal),
            FactorKind::General => None,
        };
        if let Some(bad) = forbidden {
            for v in 0..smq.vertex_count() {
                if smq.vertex_kind(v) == bad && self.alpha[v] % 2 == 1 {
                    return Err(Error::Parity(format!(
                        "{} factor {} has odd dimension at vertex {v}",
                        self.kind, self.alpha
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SemisimpleDecomposition {
    pub factors: Vec<SimpleFactor>,
}

impl SemisimpleDecomposition {
    pub fn new(factors: Vec<SimpleFactor>) -> Self {
        Self { factors }
    }

    pub fn total(&self, smq: &SupermixedQuiver) -> Result<DimensionVector> {
        let mut acc = DimensionVector::zeros(smq.vertex_count());
        for f in &self.factors {
            acc = acc.add(&f.total(smq)?);
        }
        Ok(acc)
    }

    /// The same point viewed as an ordinary semisimple representation:
    /// `(dimension vector, multiplicity)` per isomorphism class.
    pub fn plain_factors(&self, smq: &SupermixedQuiver) -> Result<Vec<(DimensionVector, u32)>> {
        let mut out = Vec::new();
        for f in &self.factors {
            match f.kind {
                FactorKind::Orthogonal => out.push((f.alpha.clone(), f.mult)),
                FactorKind::Symplectic => out.push((f.alpha.clone(), 2 * f.mult)),
                FactorKind::General => {
                    out.push((f.alpha.clone(), f.mult));
                    out.push((dual_dimension_vector(smq, &f.alpha)?, f.mult));
                }
            }
        }
        Ok(out)
    }
}

/// Pad a partial decomposition with standard simples `T_v` up to `γ̄`.
pub fn complete_decomposition(
    s: &SupermixedSetting,
    partial: &SemisimpleDecomposition,
) -> Result<SemisimpleDecomposition> {
    let smq = s.smq();
    let n = s.vertex_count();
    for f in &partial.factors {
        f.check(smq)?;
    }
    let total = partial.total(smq)?;
    if !total.le(s.gamma_bar()) {
        return Err(Error::Completion(format!(
            "partial total {total} exceeds {}",
            s.gamma_bar()
        )));
    }
    let deficit: Vec<u32> = (0..n).map(|v| s.dim(v) - total[v]).collect();
    let mut out = partial.clone();
    for v in smq.vertex_orbits() {
        let d = deficit[v];
        let w = smq.phi_v(v);
        if deficit[w] != d {
            return Err(Error::Completion(format!(
                "deficit {d} at vertex {v} differs from {} at its dual {w}",
                deficit[w]
            )));
        }
        if d == 0 {
            continue;
        }
        let (kind, mult) = match smq.vertex_kind(v) {
            VertexKind::Orthogonal => (FactorKind::Orthogonal, d),
            VertexKind::Symplectic => {
                if d % 2 == 1 {
                    return Err(Error::Completion(format!(
                        "odd deficit {d} at symplectic vertex {v}"
                    )));
                }
                (FactorKind::Symplectic, d / 2)
            }
            VertexKind::General => (FactorKind::General, d),
        };
        out.factors
            .push(SimpleFactor::new(kind, DimensionVector::unit(n, v), mult));
    }
    Ok(out)
}

/// Merge factors that necessarily describe the same isomorphism class.
///
/// When `(Q, α)` has a single simple up to isomorphism (`dim iss = 0`, e.g. a
/// standard simple at a vertex without loops), two factors of the same kind
/// with dimension vector `α` (or `α*` for general factors) are one class with
/// the summed multiplicity.
pub fn coalesce(s: &SupermixedSetting, d: &SemisimpleDecomposition) -> Result<SemisimpleDecomposition> {
    let smq = s.smq();
    let mut out: Vec<SimpleFactor> = Vec::new();
    for f in &d.factors {
        let rigid = neg_euler(s.quiver(), &f.alpha) + 1 == 0;
        let dual = dual_dimension_vector(smq, &f.alpha)?;
        let same = out.iter_mut().find(|g| {
            rigid
                && g.kind == f.kind
                && (g.alpha == f.alpha || (f.kind == FactorKind::General && g.alpha == dual))
        });
        match same {
            Some(g) => g.mult += f.mult,
            None => out.push(f.clone()),
        }
    }
    Ok(SemisimpleDecomposition::new(out))
}

/// One local vertex: which factor it comes from and its dimension vector `α^X`.
#[derive(Debug, Clone)]
struct LocalVertex {
    alpha: DimensionVector,
    dual: usize,
    eps: Sign,
    dim: u32,
}

fn local_vertices(
    smq: &SupermixedQuiver,
    d: &SemisimpleDecomposition,
) -> Result<Vec<LocalVertex>> {
    let mut out = Vec::new();
    for f in &d.factors {
        let i = out.len();
        match f.kind {
            FactorKind::Orthogonal => out.push(LocalVertex {
                alpha: f.alpha.clone(),
                dual: i,
                eps: Sign::Plus,
                dim: f.mult,
            }),
            FactorKind::Symplectic => out.push(LocalVertex {
                alpha: f.alpha.clone(),
                dual: i,
                eps: Sign::Minus,
                dim: 2 * f.mult,
            }),
            FactorKind::General => {
                out.push(LocalVertex {
                    alpha: f.alpha.clone(),
                    dual: i + 1,
                    eps: Sign::Plus,
                    dim: f.mult,
                });
                out.push(LocalVertex {
                    alpha: dual_dimension_vector(smq, &f.alpha)?,
                    dual: i,
                    eps: Sign::Plus,
                    dim: f.mult,
                });
            }
        }
    }
    Ok(out)
}

fn check_complete(s: &SupermixedSetting, d: &SemisimpleDecomposition) -> Result<()> {
    let smq = s.smq();
    for f in &d.factors {
        f.check(smq)?;
        if !has_simples_lbp(s.quiver(), &f.alpha)? {
            return Err(Error::InvalidDecomposition(format!(
                "{} factor {} admits no simple representations",
                f.kind, f.alpha
            )));
        }
    }
    let total = d.total(smq)?;
    if &total != s.gamma_bar() {
        return Err(Error::InvalidDecomposition(format!(
            "decomposition total {total} differs from {}",
            s.gamma_bar()
        )));
    }
    Ok(())
}

/// Counts of symmetric and antisymmetric arrows from `Y` to `X = Y*`.
fn self_dual_split(
    s: &SupermixedSetting,
    x: &LocalVertex,
    same_vertex: bool,
    total: i64,
) -> Result<(usize, usize)> {
    let smq = s.smq();
    let arrow_term: i64 = (0..s.arrow_count())
        .filter(|&a| smq.is_self_dual(a))
        .map(|a| smq.sigma(a).value() * i64::from(x.alpha[smq.head(a)]))
        .sum();
    let vertex_term: i64 = (0..s.vertex_count())
        .filter(|&v| smq.is_fixed_vertex(v))
        .map(|v| smq.eps(v).value() * i64::from(x.alpha[v]))
        .sum();
    let delta_term = if same_vertex { x.eps.value() } else { 0 };
    let t = arrow_term + vertex_term - delta_term;
    let (sym2, anti2) = (total + t, total - t);
    if sym2 % 2 != 0 || sym2 < 0 || anti2 < 0 {
        return Err(Error::Internal(format!(
            "symmetric/antisymmetric split of {total} arrows with trace term {t} is not integral"
        )));
    }
    Ok(((sym2 / 2) as usize, (anti2 / 2) as usize))
}

/// Local mixed quiver setting of a complete decomposition.
///
/// The decomposition is passed through [`coalesce`] first. Local vertices follow factor order; a general factor contributes `S`
/// then `S*`. Arrows are emitted by (head, tail) in that order; self-dual
/// arrows symmetric first, general arrows next to their duals.
pub fn local_mixed_setting(
    s: &SupermixedSetting,
    d: &SemisimpleDecomposition,
) -> Result<SupermixedSetting> {
    check_complete(s, d)?;
    let d = coalesce(s, d)?;
    let verts = local_vertices(s.smq(), &d)?;
    let k = verts.len();
    let q = s.quiver();
    let count = |x: usize, y: usize| -> Result<i64> {
        let c = euler_cross(q, &verts[x].alpha, &verts[y].alpha) + i64::from(x == y);
        if c < 0 {
            return Err(Error::InvalidDecomposition(format!(
                "negative arrow count {c} from local vertex {y} to {x}"
            )));
        }
        Ok(c)
    };
    let mut arrows = Vec::new();
    let mut phi_a = Vec::new();
    let mut sigma = Vec::new();
    for x in 0..k {
        for y in 0..k {
            let a_xy = count(x, y)?;
            if x == verts[y].dual {
                let (sym, anti) = self_dual_split(s, &verts[x], x == y, a_xy)?;
                for (n, sign) in [(sym, Sign::Plus), (anti, Sign::Minus)] {
                    for _ in 0..n {
                        phi_a.push(arrows.len());
                        arrows.push(Arrow::new(y, x));
                        sigma.push(sign);
                    }
                }
                continue;
            }
            let (dx, dy) = (verts[y].dual, verts[x].dual);
            if (x, y) > (dx, dy) {
                continue;
            }
            if count(dx, dy)? != a_xy {
                return Err(Error::Internal(format!(
                    "arrow counts {y}→{x} and {dy}→{dx} differ"
                )));
            }
            for _ in 0..a_xy {
                let i = arrows.len();
                arrows.push(Arrow::new(y, x));
                arrows.push(Arrow::new(dy, dx));
                phi_a.extend([i + 1, i]);
                sigma.extend([Sign::Plus, Sign::Plus]);
            }
        }
    }
    let smq = SupermixedQuiver::new(
        Quiver::new(k, arrows)?,
        verts.iter().map(|v| v.dual).collect(),
        phi_a,
        verts.iter().map(|v| v.eps).collect(),
        sigma,
    )?;
    SupermixedSetting::new(smq, DimensionVector(verts.iter().map(|v| v.dim).collect()))
}

/// The ordinary local quiver of the same point, forgetting the involution.
pub fn underlying_local_quiver(
    s: &SupermixedSetting,
    d: &SemisimpleDecomposition,
) -> Result<(Quiver, DimensionVector)> {
    check_complete(s, d)?;
    local_quiver(s.quiver(), &coalesce(s, d)?.plain_factors(s.smq())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setting::SettingBuilder;
    use crate::ArrowKind;

    fn dv(x: &[u32]) -> DimensionVector {
        DimensionVector(x.to_vec())
    }

    fn kinds_between(s: &SupermixedSetting, tail: usize, head: usize) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for a in 0..s.arrow_count() {
            if s.smq().tail(a) == tail && s.smq().head(a) == head {
                match s.smq().arrow_kind(a) {
                    ArrowKind::Symmetric => c.0 += 1,
                    ArrowKind::Antisymmetric => c.1 += 1,
                    ArrowKind::General => c.2 += 1,
                }
            }
        }
        c
    }

    /// General pair of dimension 2 with two antisymmetric arrows each way.
    fn first_example() -> SupermixedSetting {
        let mut b = SettingBuilder::new();
        let (v, w) = b.general_pair(2);
        for _ in 0..2 {
            b.self_dual_arrow(v, w, Sign::Minus);
            b.self_dual_arrow(w, v, Sign::Minus);
        }
        b.build().unwrap()
    }

    /// Orthogonal and symplectic vertices of dimension 2 joined by two dual arrow pairs.
    fn second_example() -> SupermixedSetting {
        let mut b = SettingBuilder::new();
        let o = b.orthogonal(2);
        let sp = b.symplectic(2);
        b.arrow_pair(o, sp);
        b.arrow_pair(o, sp);
        b.build().unwrap()
    }

    #[test]
    fn completion_examples() {
        let mut b = SettingBuilder::new();
        b.orthogonal(3);
        let s = b.build().unwrap();
        let empty = SemisimpleDecomposition::default();
        let full = SemisimpleDecomposition::new(vec![SimpleFactor::new(
            FactorKind::Orthogonal,
            dv(&[3]),
            1,
        )]);
        assert_eq!(complete_decomposition(&s, &full).unwrap(), full);
        let one = SemisimpleDecomposition::new(vec![SimpleFactor::new(
            FactorKind::Orthogonal,
            dv(&[1]),
            1,
        )]);
        let completed = complete_decomposition(&s, &one).unwrap();
        assert_eq!(
            completed.factors,
            vec![
                SimpleFactor::new(FactorKind::Orthogonal, dv(&[1]), 1),
                SimpleFactor::new(FactorKind::Orthogonal, dv(&[1]), 2)
            ]
        );
        assert_eq!(
            complete_decomposition(&s, &empty).unwrap().factors,
            vec![SimpleFactor::new(FactorKind::Orthogonal, dv(&[1]), 3)]
        );
        // Without loops both factors are the same class.
        assert_eq!(
            coalesce(&s, &completed).unwrap().factors,
            vec![SimpleFactor::new(FactorKind::Orthogonal, dv(&[1]), 3)]
        );
        let l = local_mixed_setting(&s, &completed).unwrap();
        assert_eq!((l.vertex_count(), l.arrow_count(), l.dim(0)), (1, 0, 3));

        let mut b = SettingBuilder::new();
        let o = b.orthogonal(3);
        b.self_dual_arrow(o, o, Sign::Plus);
        let s = b.build().unwrap();
        assert_eq!(coalesce(&s, &completed).unwrap(), completed);
    }

    #[test]
    fn completion_of_general_pair() {
        let mut b = SettingBuilder::new();
        let (v, _) = b.general_pair(2);
        b.arrow_pair(v, v);
        let s = b.build().unwrap();
        let p = SemisimpleDecomposition::new(vec![SimpleFactor::new(
            FactorKind::General,
            dv(&[1, 0]),
            1,
        )]);
        let c = complete_decomposition(&s, &p).unwrap();
        assert_eq!(
            c.factors[1],
            SimpleFactor::new(FactorKind::General, dv(&[1, 0]), 1)
        );
        assert_eq!(c.total(s.smq()).unwrap(), dv(&[2, 2]));
    }

    #[test]
    fn completion_errors() {
        let mut b = SettingBuilder::new();
        b.symplectic(2);
        let s = b.build().unwrap();
        let p = SemisimpleDecomposition::new(vec![SimpleFactor::new(
            FactorKind::Orthogonal,
            dv(&[1]),
            1,
        )]);
        assert!(matches!(complete_decomposition(&s, &p), Err(Error::Parity(_))));

        let mut b = SettingBuilder::new();
        b.general_pair(2);
        let s = b.build().unwrap();
        let p = SemisimpleDecomposition::new(vec![SimpleFactor::new(
            FactorKind::General,
            dv(&[1, 0]),
            2,
        )]);
        assert!(complete_decomposition(&s, &p).is_ok());
        let p = SemisimpleDecomposition::new(vec![SimpleFactor::new(
            FactorKind::General,
            dv(&[2, 0]),
            1,
        )]);
        assert!(complete_decomposition(&s, &p).is_ok());
        let p = SemisimpleDecomposition::new(vec![SimpleFactor::new(
            FactorKind::General,
            dv(&[3, 0]),
            1,
        )]);
        assert!(matches!(complete_decomposition(&s, &p), Err(Error::Completion(_))));
    }

    #[test]
    fn first_example_local_setting() {
        let s = first_example();
        let d = SemisimpleDecomposition::new(vec![SimpleFactor::new(
            FactorKind::Symplectic,
            dv(&[1, 1]),
            1,
        )]);
        let l = local_mixed_setting(&s, &d).unwrap();
        assert_eq!(l.vertex_count(), 1);
        assert!(l.smq().is_symplectic(0));
        assert_eq!(l.gamma_bar(), &dv(&[2]));
        assert_eq!(kinds_between(&l, 0, 0), (0, 3, 0));
        let (uq, ud) = underlying_local_quiver(&s, &d).unwrap();
        assert_eq!((uq.loop_count(0), ud), (3, dv(&[2])));
    }

    #[test]
    fn second_example_local_setting() {
        let s = second_example();
        let d = SemisimpleDecomposition::new(vec![SimpleFactor::new(
            FactorKind::General,
            dv(&[1, 1]),
            1,
        )]);
        let l = local_mixed_setting(&s, &d).unwrap();
        assert_eq!(l.vertex_count(), 2);
        assert_eq!(l.gamma_bar(), &dv(&[1, 1]));
        assert_eq!(l.smq().phi_v(0), 1);
        assert_eq!(kinds_between(&l, 0, 0), (0, 0, 3));
        assert_eq!(kinds_between(&l, 1, 1), (0, 0, 3));
        assert_eq!(kinds_between(&l, 0, 1), (1, 1, 0));
        assert_eq!(kinds_between(&l, 1, 0), (1, 1, 0));
        assert!(l.smq().is_strict());
    }

    #[test]
    fn trivial_orthogonal_point() {
        let mut b = SettingBuilder::new();
        b.orthogonal(1);
        let s = b.build().unwrap();
        let d = SemisimpleDecomposition::new(vec![SimpleFactor::new(
            FactorKind::Orthogonal,
            dv(&[1]),
            1,
        )]);
        let l = local_mixed_setting(&s, &d).unwrap();
        assert_eq!((l.vertex_count(), l.arrow_count()), (1, 0));
    }

    #[test]
    fn incomplete_decomposition_rejected() {
        let s = second_example();
        let d = SemisimpleDecomposition::new(vec![SimpleFactor::new(
            FactorKind::General,
            dv(&[1, 0]),
            1,
        )]);
        assert!(matches!(
            local_mixed_setting(&s, &d),
            Err(Error::InvalidDecomposition(_))
        ));
    }
}
