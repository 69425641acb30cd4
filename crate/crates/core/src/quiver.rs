//! Plain quivers, dimension vectors and the ordinary simple-existence theory.
//!
//! Paths follow the composition convention `p = a_1 a_2 … a_k` with
//! `t(a_i) = h(a_{i+1})`: the last arrow is traversed first, so the path runs
//! from `t(a_k)` to `h(a_1)`.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Deref, Index};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrow {
    pub tail: usize,
    pub head: usize,
}

impl Arrow {
    pub fn new(tail: usize, head: usize) -> Self {
        Self { tail, head }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

/// Directed multigraph on vertices `0..vertex_count`; arrow ids are list positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self> {
        for a in &arrows {
            for v in [a.tail, a.head] {
                if v >= vertex_count {
                    return Err(Error::InvalidVertex(v));
                }
            }
        }
        Ok(Self {
            vertex_count,
            arrows,
        })
    }

    /// Build from `(tail, head)` pairs.
    pub fn from_pairs(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(
            vertex_count,
            pairs.iter().map(|&(t, h)| Arrow::new(t, h)).collect(),
        )
    }

    /// One vertex with `loops` loops.
    pub fn bouquet(loops: usize) -> Self {
        Self {
            vertex_count: 1,
            arrows: vec![Arrow::new(0, 0); loops],
        }
    }

    /// The oriented cycle `0 → 1 → … → n-1 → 0`.
    pub fn cycle(n: usize) -> Self {
        Self {
            vertex_count: n,
            arrows: (0..n).map(|i| Arrow::new(i, (i + 1) % n)).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> Arrow {
        self.arrows[a]
    }

    pub fn head(&self, a: usize) -> usize {
        self.arrows[a].head
    }

    pub fn tail(&self, a: usize) -> usize {
        self.arrows[a].tail
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    pub fn check_arrow(&self, a: usize) -> Result<()> {
        if a < self.arrows.len() {
            Ok(())
        } else {
            Err(Error::InvalidArrow(a))
        }
    }

    /// Arrow ids with tail `v`.
    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.tail == v)
            .map(|(i, _)| i)
    }

    /// Arrow ids with head `v`.
    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.head == v)
            .map(|(i, _)| i)
    }

    pub fn loop_count(&self, v: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.tail == v && a.head == v)
            .count()
    }

    /// Induced subquiver on `keep` (in the given order) and the old→new vertex map.
    ///
    /// Also returns the old→new arrow map for surviving arrows.
    pub fn induced(&self, keep: &[usize]) -> (Quiver, Vec<Option<usize>>, Vec<Option<usize>>) {
        let mut vmap = vec![None; self.vertex_count];
        for (new, &old) in keep.iter().enumerate() {
            vmap[old] = Some(new);
        }
        let mut amap = vec![None; self.arrows.len()];
        let mut arrows = Vec::new();
        for (i, a) in self.arrows.iter().enumerate() {
            if let (Some(t), Some(h)) = (vmap[a.tail], vmap[a.head]) {
                amap[i] = Some(arrows.len());
                arrows.push(Arrow::new(t, h));
            }
        }
        let q = Quiver {
            vertex_count: keep.len(),
            arrows,
        };
        (q, vmap, amap)
    }

    fn reachable_from(&self, start: usize, allowed: &[bool], forward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for a in &self.arrows {
                let (from, to) = if forward {
                    (a.tail, a.head)
                } else {
                    (a.head, a.tail)
                };
                if from == v && allowed[to] && !seen[to] {
                    seen[to] = true;
                    queue.push_back(to);
                }
            }
        }
        seen
    }
}

/// Nonnegative integer per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimensionVector(pub Vec<u32>);

impl DimensionVector {
    pub fn new(dims: Vec<u32>) -> Self {
        Self(dims)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn constant(n: usize, value: u32) -> Self {
        Self(vec![value; n])
    }

    /// Standard basis vector `e_v`.
    pub fn unit(n: usize, v: usize) -> Self {
        let mut d = vec![0; n];
        d[v] = 1;
        Self(d)
    }

    pub fn indicator(n: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut d = vec![0; n];
        for v in vertices {
            d[v] = 1;
        }
        Self(d)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_sincere(&self) -> bool {
        self.0.iter().all(|&x| x > 0)
    }

    pub fn max(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn scaled(&self, k: u32) -> Self {
        Self(self.0.iter().map(|&x| x * k).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Self) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: n,
                got: self.len(),
            })
        }
    }
}

impl Deref for DimensionVector {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl Index<usize> for DimensionVector {
    type Output = u32;

    fn index(&self, v: usize) -> &u32 {
        &self.0[v]
    }
}

impl From<Vec<u32>> for DimensionVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A path in a quiver: either the trivial path at a vertex or a composable
/// arrow sequence `a_1 … a_k` with `t(a_i) = h(a_{i+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Path {
    Trivial(usize),
    Arrows(Vec<usize>),
}

impl Path {
    /// Validated constructor for a nonempty arrow sequence.
    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        if arrows.is_empty() {
            return Err(Error::LengthMismatch {
                expected: 1,
                got: 0,
            });
        }
        for &a in &arrows {
            q.check_arrow(a)?;
        }
        for w in arrows.windows(2) {
            if q.tail(w[0]) != q.head(w[1]) {
                return Err(Error::NotComposable(w[0], w[1]));
            }
        }
        Ok(Path::Arrows(arrows))
    }

    pub fn arrows(&self) -> &[usize] {
        match self {
            Path::Trivial(_) => &[],
            Path::Arrows(a) => a,
        }
    }

    pub fn len(&self) -> usize {
        self.arrows().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn head(&self, q: &Quiver) -> usize {
        match self {
            Path::Trivial(v) => *v,
            Path::Arrows(a) => q.head(a[0]),
        }
    }

    pub fn tail(&self, q: &Quiver) -> usize {
        match self {
            Path::Trivial(v) => *v,
            Path::Arrows(a) => q.tail(*a.last().expect("nonempty")),
        }
    }

    pub fn is_cycle(&self, q: &Quiver) -> bool {
        self.head(q) == self.tail(q)
    }

    /// A cycle whose arrows have pairwise distinct heads.
    pub fn is_primitive_cycle(&self, q: &Quiver) -> bool {
        if self.is_empty() || !self.is_cycle(q) {
            return false;
        }
        let mut heads: Vec<usize> = self.arrows().iter().map(|&a| q.head(a)).collect();
        heads.sort_unstable();
        heads.windows(2).all(|w| w[0] != w[1])
    }

    /// Vertices visited, in path order (heads of the arrows).
    pub fn vertices(&self, q: &Quiver) -> Vec<usize> {
        match self {
            Path::Trivial(v) => vec![*v],
            Path::Arrows(a) => {
                let mut vs: Vec<usize> = a.iter().map(|&x| q.head(x)).collect();
                vs.push(q.tail(*a.last().expect("nonempty")));
                vs
            }
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Path::Trivial(v) => write!(f, "e{v}"),
            Path::Arrows(a) => {
                let parts: Vec<String> = a.iter().map(|x| format!("a{x}")).collect();
                write!(f, "{}", parts.join("·"))
            }
        }
    }
}

/// Whether every ordered pair of vertices (of the subset, if given) is joined
/// by a directed path staying inside the subset.
pub fn is_strongly_connected(q: &Quiver, restricted_to: Option<&[usize]>) -> Result<bool> {
    let mut allowed = vec![restricted_to.is_none(); q.vertex_count()];
    if let Some(sub) = restricted_to {
        for &v in sub {
            q.check_vertex(v)?;
            allowed[v] = true;
        }
    }
    let Some(start) = allowed.iter().position(|&x| x) else {
        return Ok(true);
    };
    let fwd = q.reachable_from(start, &allowed, true);
    let bwd = q.reachable_from(start, &allowed, false);
    Ok((0..q.vertex_count()).all(|v| !allowed[v] || (fwd[v] && bwd[v])))
}

/// Induced subsetting on the vertices of positive dimension.
///
/// The map sends each old vertex id to its new id, or `None` if removed.
pub fn support(
    q: &Quiver,
    alpha: &DimensionVector,
) -> Result<(Quiver, DimensionVector, Vec<Option<usize>>)> {
    alpha.check_len(q.vertex_count())?;
    let keep: Vec<usize> = (0..q.vertex_count()).filter(|&v| alpha[v] > 0).collect();
    let (sub, vmap, _) = q.induced(&keep);
    let dims = DimensionVector(keep.iter().map(|&v| alpha[v]).collect());
    Ok((sub, dims, vmap))
}

/// Exceptional shapes: a lone vertex, a vertex with one loop, or a single
/// primitive cycle through all vertices with no further arrows.
fn is_exceptional_form(q: &Quiver) -> bool {
    let n = q.vertex_count();
    match n {
        0 => false,
        1 => q.arrow_count() <= 1,
        _ => {
            if q.arrow_count() != n {
                return false;
            }
            let mut indeg = vec![0usize; n];
            let mut outdeg = vec![0usize; n];
            for a in q.arrows() {
                if a.is_loop() {
                    return false;
                }
                indeg[a.head] += 1;
                outdeg[a.tail] += 1;
            }
            indeg.iter().chain(&outdeg).all(|&d| d == 1)
                && is_strongly_connected(q, None).unwrap_or(false)
        }
    }
}

/// Le Bruyn–Procesi criterion for the existence of simple representations.
pub fn has_simples_lbp(q: &Quiver, alpha: &DimensionVector) -> Result<bool> {
    let (sq, sa, _) = support(q, alpha)?;
    if sq.vertex_count() == 0 {
        return Ok(false);
    }
    if is_exceptional_form(&sq) {
        return Ok(sa.iter().all(|&x| x == 1));
    }
    if !is_strongly_connected(&sq, None)? {
        return Ok(false);
    }
    let n = sq.vertex_count();
    let mut incoming = vec![0u64; n];
    let mut outgoing = vec![0u64; n];
    for a in sq.arrows() {
        incoming[a.head] += u64::from(sa[a.tail]);
        outgoing[a.tail] += u64::from(sa[a.head]);
    }
    Ok((0..n).all(|v| u64::from(sa[v]) <= incoming[v] && u64::from(sa[v]) <= outgoing[v]))
}

/// `Σ_a α_{h(a)} α_{t(a)} - Σ_v α_v²`, i.e. minus the Euler form of `α` with itself.
pub fn neg_euler(q: &Quiver, alpha: &DimensionVector) -> i64 {
    euler_cross(q, alpha, alpha)
}

/// `Σ_a x_{h(a)} y_{t(a)} - Σ_v x_v y_v`.
pub(crate) fn euler_cross(q: &Quiver, x: &[u32], y: &[u32]) -> i64 {
    let arrows: i64 = q
        .arrows()
        .iter()
        .map(|a| i64::from(x[a.head]) * i64::from(y[a.tail]))
        .sum();
    let verts: i64 = x
        .iter()
        .zip(y)
        .map(|(&a, &b)| i64::from(a) * i64::from(b))
        .sum();
    arrows - verts
}

/// Dimension of the quotient `iss(Q, α)` at a point with simple generic stabilizer.
pub fn dim_iss(q: &Quiver, alpha: &DimensionVector) -> Result<i64> {
    if !has_simples_lbp(q, alpha)? {
        return Err(Error::UndefinedDimension(format!(
            "no simple representations of dimension {alpha}"
        )));
    }
    Ok(neg_euler(q, alpha) + 1)
}

/// Ordinary local quiver setting of a semisimple point `⊕ S_i^{e_i}` with
/// `dim S_i = α^i`. Arrows are emitted grouped by (head, tail) in factor order.
pub fn local_quiver(
    q: &Quiver,
    factors: &[(DimensionVector, u32)],
) -> Result<(Quiver, DimensionVector)> {
    for (alpha, mult) in factors {
        alpha.check_len(q.vertex_count())?;
        if *mult == 0 {
            return Err(Error::InvalidDecomposition(
                "factor multiplicity must be positive".into(),
            ));
        }
        if !has_simples_lbp(q, alpha)? {
            return Err(Error::InvalidDecomposition(format!(
                "factor {alpha} admits no simple representations"
            )));
        }
    }
    let k = factors.len();
    let mut arrows = Vec::new();
    for x in 0..k {
        for y in 0..k {
            let count = euler_cross(q, &factors[x].0, &factors[y].0) + i64::from(x == y);
            if count < 0 {
                return Err(Error::InvalidDecomposition(format!(
                    "negative arrow count {count} from factor {y} to factor {x}"
                )));
            }
            arrows.extend(std::iter::repeat(Arrow::new(y, x)).take(count as usize));
        }
    }
    let dims = DimensionVector(factors.iter().map(|(_, e)| *e).collect());
    Ok((Quiver::new(k, arrows)?, dims))
}

/// All primitive cycles, each rotated to start at its least arrow id, sorted.
pub fn enumerate_cycles(q: &Quiver) -> Vec<Path> {
    let n = q.vertex_count();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    // Arrows collected in traversal order (tail to head); reversed at the end.
    let mut walk = Vec::new();
    for start in 0..n {
        on_path[start] = true;
        cycles_from(q, start, start, &mut on_path, &mut walk, &mut out);
        on_path[start] = false;
    }
    out.sort();
    out
}

fn cycles_from(
    q: &Quiver,
    start: usize,
    at: usize,
    on_path: &mut [bool],
    walk: &mut Vec<usize>,
    out: &mut Vec<Path>,
) {
    for a in q.arrows_from(at).collect::<Vec<_>>() {
        let h = q.head(a);
        if h == start {
            walk.push(a);
            let mut path: Vec<usize> = walk.iter().rev().copied().collect();
            let pos = path
                .iter()
                .enumerate()
                .min_by_key(|(_, &x)| x)
                .map(|(i, _)| i)
                .unwrap_or(0);
            path.rotate_left(pos);
            out.push(Path::Arrows(path));
            walk.pop();
        } else if h > start && !on_path[h] {
            on_path[h] = true;
            walk.push(a);
            cycles_from(q, start, h, on_path, walk, out);
            walk.pop();
            on_path[h] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(x: &[u32]) -> DimensionVector {
        DimensionVector(x.to_vec())
    }

    #[test]
    fn strong_connectivity_examples() {
        let two_cycle = Quiver::from_pairs(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(is_strongly_connected(&two_cycle, None).unwrap());
        let one_way = Quiver::from_pairs(2, &[(0, 1)]).unwrap();
        assert!(!is_strongly_connected(&one_way, None).unwrap());
        assert!(is_strongly_connected(&Quiver::cycle(4), None).unwrap());
        assert!(is_strongly_connected(&one_way, Some(&[1])).unwrap());
        assert_eq!(
            is_strongly_connected(&one_way, Some(&[5])),
            Err(Error::InvalidVertex(5))
        );
    }

    #[test]
    fn support_examples() {
        let q = Quiver::cycle(3);
        let (s, a, map) = support(&q, &dv(&[1, 1, 1])).unwrap();
        assert_eq!(s, q);
        assert_eq!(a, dv(&[1, 1, 1]));
        assert_eq!(map, vec![Some(0), Some(1), Some(2)]);

        let (s, a, map) = support(&q, &dv(&[1, 0, 2])).unwrap();
        // Only the arrow 2 -> 0 has both endpoints in the support.
        assert_eq!(s.vertex_count(), 2);
        assert_eq!(s.arrows(), &[Arrow::new(1, 0)]);
        assert_eq!(a, dv(&[1, 2]));
        assert_eq!(map, vec![Some(0), None, Some(1)]);

        let q = Quiver::from_pairs(2, &[(1, 1), (0, 0)]).unwrap();
        let (s, _, _) = support(&q, &dv(&[3, 0])).unwrap();
        assert_eq!(s, Quiver::bouquet(1));
    }

    #[test]
    fn lbp_examples() {
        assert!(has_simples_lbp(&Quiver::cycle(3), &dv(&[1, 1, 1])).unwrap());
        assert!(!has_simples_lbp(&Quiver::cycle(3), &dv(&[1, 2, 1])).unwrap());
        assert!(!has_simples_lbp(&Quiver::bouquet(0), &dv(&[2])).unwrap());
        assert!(has_simples_lbp(&Quiver::bouquet(0), &dv(&[1])).unwrap());
        assert!(!has_simples_lbp(&Quiver::bouquet(1), &dv(&[2])).unwrap());
        assert!(has_simples_lbp(&Quiver::bouquet(2), &dv(&[3])).unwrap());
        let two_cycle = Quiver::from_pairs(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(!has_simples_lbp(&two_cycle, &dv(&[2, 1])).unwrap());
        assert!(!has_simples_lbp(&two_cycle, &dv(&[0, 0])).unwrap());
        let doubled = Quiver::from_pairs(2, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert!(has_simples_lbp(&doubled, &dv(&[1, 1])).unwrap());
        assert!(!has_simples_lbp(&doubled, &dv(&[1, 2])).unwrap());
        assert!(!has_simples_lbp(&doubled, &dv(&[2, 1])).unwrap());
        let triple = Quiver::from_pairs(2, &[(0, 1), (0, 1), (1, 0), (1, 0)]).unwrap();
        assert!(has_simples_lbp(&triple, &dv(&[1, 2])).unwrap());
    }

    #[test]
    fn dim_iss_examples() {
        assert_eq!(dim_iss(&Quiver::bouquet(2), &dv(&[2])).unwrap(), 5);
        assert_eq!(dim_iss(&Quiver::bouquet(2), &dv(&[1])).unwrap(), 2);
        assert_eq!(dim_iss(&Quiver::cycle(5), &dv(&[1; 5])).unwrap(), 1);
        assert!(matches!(
            dim_iss(&Quiver::bouquet(1), &dv(&[2])),
            Err(Error::UndefinedDimension(_))
        ));
    }

    #[test]
    fn local_quiver_examples() {
        let q = Quiver::bouquet(2);
        let (l, d) = local_quiver(&q, &[(dv(&[1]), 1), (dv(&[1]), 1)]).unwrap();
        assert_eq!(d, dv(&[1, 1]));
        assert_eq!(l.loop_count(0), 2);
        assert_eq!(l.loop_count(1), 2);
        assert_eq!(l.arrows().iter().filter(|a| a.tail == 0 && a.head == 1).count(), 1);
        assert_eq!(l.arrows().iter().filter(|a| a.tail == 1 && a.head == 0).count(), 1);

        let (l, d) = local_quiver(&q, &[(dv(&[2]), 1)]).unwrap();
        assert_eq!(d, dv(&[1]));
        assert_eq!(l.loop_count(0), 5);

        let (l, d) = local_quiver(&Quiver::bouquet(0), &[(dv(&[1]), 2)]).unwrap();
        assert_eq!((l.vertex_count(), l.arrow_count()), (1, 0));
        assert_eq!(d, dv(&[2]));

        assert!(matches!(
            local_quiver(&Quiver::bouquet(1), &[(dv(&[2]), 1)]),
            Err(Error::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn cycle_enumeration() {
        let cs = enumerate_cycles(&Quiver::bouquet(1));
        assert_eq!(cs, vec![Path::Arrows(vec![0])]);

        let q = Quiver::from_pairs(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(enumerate_cycles(&q), vec![Path::Arrows(vec![0, 1])]);

        let q = Quiver::from_pairs(2, &[(0, 1), (0, 1), (1, 0), (1, 0)]).unwrap();
        let cs = enumerate_cycles(&q);
        assert_eq!(cs.len(), 4);
        for c in &cs {
            assert!(c.is_primitive_cycle(&q));
            assert!(Path::from_arrows(&q, c.arrows().to_vec()).is_ok());
        }

        let q = Quiver::cycle(3);
        let cs = enumerate_cycles(&q);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].arrows()[0], 0);
        assert!(Path::from_arrows(&q, cs[0].arrows().to_vec()).is_ok());
    }

    #[test]
    fn path_endpoints_follow_composition_convention() {
        // a0: 0 -> 1, a1: 1 -> 2; the composable product is a1·a0.
        let q = Quiver::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        let p = Path::from_arrows(&q, vec![1, 0]).unwrap();
        assert_eq!((p.tail(&q), p.head(&q)), (0, 2));
        assert_eq!(
            Path::from_arrows(&q, vec![0, 1]),
            Err(Error::NotComposable(0, 1))
        );
    }
}
