mod common;

use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use supermixed::involution::{rep_involution_block, s_involution_matrix, s_offsets};
use supermixed::oracle::{
    centralizer_dim, classify_eps_simple, closed_walks, generated_algebra_dim, sample_drep,
    semisimplification, trace_invariant,
};
use supermixed::quiver::enumerate_cycles;
use supermixed::setting::one_vertex_setting;
use supermixed::simples::cykel_split;
use supermixed::{
    Classification, Rational, RationalMatrix, Representation, Sign, SettingBuilder,
    SupermixedSetting,
};

use common::setting;

/// A rational point of the dualizing group: the Cayley transform
/// `(1 + X)(1 - X)⁻¹` of an element `X` of its Lie algebra.
fn dgl_element(s: &SupermixedSetting, seed: u64) -> Option<Vec<RationalMatrix>> {
    let inv = s_involution_matrix(s.smq(), s.gamma_bar(), &s.gammas()).ok()?;
    let lie = (&inv + &RationalMatrix::identity(inv.rows())).kernel();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = vec![Rational::zero(); inv.rows()];
    for b in &lie {
        let c = Rational::new(rng.gen_range(-2i64..=2).into(), 3.into());
        for (xi, bi) in x.iter_mut().zip(b) {
            *xi += c.clone() * bi;
        }
    }
    let offs = s_offsets(s.gamma_bar());
    let mut out = Vec::new();
    for v in 0..s.vertex_count() {
        let d = s.dim(v) as usize;
        let xv = RationalMatrix::from_vec(d, d, x[offs[v]..offs[v + 1]].to_vec());
        let id = RationalMatrix::identity(d);
        out.push(&(&id + &xv) * &(&id - &xv).inverse()?);
    }
    Some(out)
}

fn act(r: &Representation, g: &[RationalMatrix]) -> Representation {
    let s = r.setting().clone();
    let smq = s.smq();
    let matrices = (0..s.arrow_count())
        .map(|a| {
            let gt = g[smq.tail(a)].inverse().expect("group element");
            &(&g[smq.head(a)] * r.matrix(a)) * &gt
        })
        .collect();
    Representation::new(s, matrices).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn traces_are_dgl_invariant(s in setting(2, 3, 2), seed in 0u64..1000) {
        let r = sample_drep(&s, seed).unwrap();
        prop_assert!(r.is_in_drep());
        let Some(g) = dgl_element(&s, seed + 1) else { return Ok(()) };
        let moved = act(&r, &g);
        prop_assert!(moved.is_in_drep());
        for c in closed_walks(s.quiver(), 4, 40) {
            prop_assert_eq!(trace_invariant(&r, &c).unwrap(), trace_invariant(&moved, &c).unwrap());
        }
    }

    #[test]
    fn semisimplification_keeps_traces(s in setting(2, 3, 2), seed in 0u64..1000) {
        let r = sample_drep(&s, seed).unwrap();
        let ss = semisimplification(&r);
        for c in closed_walks(s.quiver(), 4, 40) {
            prop_assert_eq!(trace_invariant(&r, &c).unwrap(), trace_invariant(&ss, &c).unwrap());
        }
    }

    #[test]
    fn full_algebra_has_scalar_centralizer(s in setting(2, 3, 2), seed in 0u64..1000) {
        let r = sample_drep(&s, seed).unwrap();
        let n = r.total_dim();
        if generated_algebra_dim(&r) == n * n {
            prop_assert_eq!(centralizer_dim(&r), 1);
            prop_assert_eq!(classify_eps_simple(&r), Classification::Orthogonal);
        }
    }

    #[test]
    fn cykel_witness_has_factor_kind(s in setting(3, 4, 2)) {
        for c in enumerate_cycles(s.quiver()).into_iter().take(4) {
            let (factor, witness) = cykel_split(&s, &c).unwrap();
            prop_assert!(witness.is_in_drep());
            prop_assert_eq!(classify_eps_simple(&witness).factor_kind(), Some(factor.kind));
        }
    }
}

/// Self-dual loops whose fixed block is the scalars.
fn scalar_loops(s: &SupermixedSetting) -> Vec<bool> {
    let smq = s.smq();
    let gammas = s.gammas();
    (0..s.arrow_count())
        .map(|a| {
            if !smq.is_self_dual(a) || smq.head(a) != smq.tail(a) {
                return false;
            }
            let block = rep_involution_block(smq, &gammas, a).unwrap();
            let fixed = (&block - &RationalMatrix::identity(block.rows())).kernel();
            let d = s.dim(smq.head(a)) as usize;
            let id: Vec<Rational> = RationalMatrix::identity(d).into_vec();
            fixed.len() == 1 && {
                let f = &fixed[0];
                let k = f.iter().zip(&id).find(|(_, i)| !i.is_zero()).map(|(x, _)| x.clone()).unwrap();
                f.iter().zip(&id).all(|(x, i)| *x == k.clone() * i)
            }
        })
        .collect()
}

#[test]
fn scalar_loop_deletion_keeps_oracle_verdict() {
    let mut cases = vec![
        one_vertex_setting(Sign::Minus, 2, 2, 1).unwrap(),
        one_vertex_setting(Sign::Minus, 2, 1, 2).unwrap(),
        one_vertex_setting(Sign::Minus, 2, 3, 1).unwrap(),
        one_vertex_setting(Sign::Plus, 1, 2, 1).unwrap(),
    ];
    let mut b = SettingBuilder::new();
    let sp = b.symplectic(2);
    let o = b.orthogonal(1);
    b.self_dual_arrow(sp, sp, Sign::Minus);
    b.self_dual_arrow(sp, sp, Sign::Plus);
    b.arrow_pair(o, sp);
    b.arrow_pair(sp, o);
    cases.push(b.build().unwrap());
    for s in cases {
        let drop = scalar_loops(&s);
        assert!(drop.iter().any(|&d| d), "{}", s.summary());
        let reduced = s.without_arrows(&drop);
        for seed in 0..4 {
            let full = classify_eps_simple(&sample_drep(&s, seed).unwrap());
            let cut = classify_eps_simple(&sample_drep(&reduced, seed).unwrap());
            assert_eq!(full, cut, "{} seed {seed}", s.summary());
        }
    }
}

#[test]
fn cayley_elements_lie_in_the_group() {
    let s = one_vertex_setting(Sign::Minus, 4, 0, 0).unwrap();
    let g = dgl_element(&s, 5).unwrap();
    let lambda = s.gamma(0);
    // gᵀ Λ g = Λ
    assert_eq!(&(&g[0].transpose() * &lambda) * &g[0], lambda);
    assert_ne!(g[0], RationalMatrix::identity(4));
    let one = Rational::one();
    assert!(g[0].as_slice().iter().any(|x| *x != one && !x.is_zero()));
}
