#![allow(dead_code)]

use proptest::prelude::*;
use supermixed::{Path, Quiver, SettingBuilder, Sign, SupermixedSetting};

/// Vertex orbit of a generated setting.
#[derive(Debug, Clone, Copy)]
pub enum Orbit {
    Orthogonal(u32),
    Symplectic(u32),
    Pair(u32),
}

/// Arrow request: indices are taken modulo the vertex count. A request with
/// `head = φ(tail)` becomes a self-dual arrow with sign `minus`, anything
/// else an arrow pair.
pub type ArrowSpec = (usize, usize, bool);

pub fn build(orbits: &[Orbit], arrows: &[ArrowSpec]) -> SupermixedSetting {
    let mut b = SettingBuilder::new();
    let mut phi = Vec::new();
    for o in orbits {
        match *o {
            Orbit::Orthogonal(d) => phi.push(b.orthogonal(d)),
            Orbit::Symplectic(d) => phi.push(b.symplectic(d)),
            Orbit::Pair(d) => {
                let (v, w) = b.general_pair(d);
                phi.extend([w, v]);
            }
        }
    }
    let n = phi.len();
    for &(t, h, minus) in arrows {
        let (t, h) = (t % n, h % n);
        if h == phi[t] {
            b.self_dual_arrow(t, h, if minus { Sign::Minus } else { Sign::Plus });
        } else {
            b.arrow_pair(t, h);
        }
    }
    b.build().expect("generated settings are valid")
}

pub fn orbit(max_dim: u32) -> impl Strategy<Value = Orbit> {
    prop_oneof![
        (1..=max_dim).prop_map(Orbit::Orthogonal),
        (1..=max_dim.div_ceil(2)).prop_map(|d| Orbit::Symplectic(2 * d)),
        (1..=max_dim).prop_map(Orbit::Pair),
    ]
}

/// Strict settings with at most `max_orbits` vertex orbits and
/// `max_arrows` arrow requests.
pub fn setting(max_orbits: usize, max_arrows: usize, max_dim: u32) -> impl Strategy<Value = SupermixedSetting> {
    (
        prop::collection::vec(orbit(max_dim), 1..=max_orbits),
        prop::collection::vec((0..8usize, 0..8usize, any::<bool>()), 0..=max_arrows),
    )
        .prop_map(|(o, a)| build(&o, &a))
}

/// Every path of length `1..=max_len` (arrow sequences with
/// `t(a_i) = h(a_{i+1})`), or `None` when more than `cap` exist.
pub fn all_paths(q: &Quiver, max_len: usize, cap: usize) -> Option<Vec<Path>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..q.arrow_count()).map(|a| vec![a]).collect();
    for _ in 0..max_len {
        if out.len() + frontier.len() > cap {
            return None;
        }
        out.extend(frontier.iter().cloned().map(Path::Arrows));
        let mut next = Vec::new();
        for p in &frontier {
            let t = q.tail(*p.last().expect("nonempty"));
            for b in q.arrows_into(t) {
                let mut np = p.clone();
                np.push(b);
                next.push(np);
            }
        }
        frontier = next;
    }
    Some(out)
}
