//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! The process exits non-zero when a criterion fails outside the documented
//! deviations listed in `KNOWN_DEVIATIONS`.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use supermixed::involution::{dgl_dim, diss_dim, drep_dim};
use supermixed::local::{
    complete_decomposition, local_mixed_setting, underlying_local_quiver, FactorKind,
};
use supermixed::oracle::{generated_algebra_dim, sample_drep, verify_existence, Verification};
use supermixed::quiver::{dim_iss, enumerate_cycles, has_simples_lbp};
use supermixed::setting::{normalize_to_strict, one_vertex_setting, path_dual, validate};
use supermixed::simples::{
    all_simples_orthogonal, cykel_split, has_general_simples, has_orthogonal_simples,
    has_simples_recursive, has_symplectic_simples, one_vertex_classification,
};
use supermixed::{
    ArrowKind, DimensionVector, Quiver, SemisimpleDecomposition, SettingBuilder, Sign,
    SimpleFactor, SupermixedSetting,
};

use common::{all_paths, build, ArrowSpec, Orbit};

/// One-vertex cases `(ε, n, k, l)` where the closed form and the recursion
/// disagree and the oracle sides with the recursion.
const KNOWN_DEVIATIONS: &[(Sign, u32, u32, u32)] = &[(Sign::Minus, 4, 0, 3)];

const EXAMPLE_BUDGET: Duration = Duration::from_secs(1);
const ONE_VERTEX_BUDGET: Duration = Duration::from_secs(60);
const ORACLE_BUDGET: Duration = Duration::from_secs(300);
const ORACLE_SAMPLES: usize = 100;
const ORACLE_SEED: u64 = 17;
const RANDOM_ORDINARY: usize = 1000;
const ORDINARY_SEED: u64 = 4;
const PROPERTY_SEED: u64 = 7;
const PROPERTY_CASES: usize = 150;

struct Outcome {
    pass: bool,
    detail: String,
    /// Failure covered by `KNOWN_DEVIATIONS`.
    documented: bool,
}

impl Outcome {
    fn new(pass: bool, detail: String) -> Self {
        Self { pass, detail, documented: false }
    }
}

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

fn first_example() -> SupermixedSetting {
    let mut b = SettingBuilder::new();
    let (v, w) = b.general_pair(2);
    for _ in 0..2 {
        b.self_dual_arrow(v, w, Sign::Minus);
        b.self_dual_arrow(w, v, Sign::Minus);
    }
    b.build().unwrap()
}

fn second_example() -> SupermixedSetting {
    let mut b = SettingBuilder::new();
    let o = b.orthogonal(2);
    let sp = b.symplectic(2);
    b.arrow_pair(o, sp);
    b.arrow_pair(o, sp);
    b.build().unwrap()
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let s = first_example();
    let d = SemisimpleDecomposition::new(vec![SimpleFactor::new(FactorKind::Symplectic, dv(&[1, 1]), 1)]);
    let l = local_mixed_setting(&s, &d).unwrap();
    let got = (l.vertex_count(), l.smq().is_symplectic(0), l.dim(0), l.arrow_count(), kinds_between(&l, 0, 0));
    let elapsed = t.elapsed();
    let pass = got == (1, true, 2, 3, (0, 3, 0)) && elapsed < EXAMPLE_BUDGET;
    Outcome::new(pass, format!("{} ({elapsed:?})", l.summary()))
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let s = second_example();
    let d = SemisimpleDecomposition::new(vec![SimpleFactor::new(FactorKind::General, dv(&[1, 1]), 1)]);
    let l = local_mixed_setting(&s, &d).unwrap();
    let smq = l.smq();
    let pair = l.vertex_count() == 2 && smq.phi_v(0) == 1 && l.gamma_bar() == &dv(&[1, 1]);
    let loops = kinds_between(&l, 0, 0) == (0, 0, 3) && kinds_between(&l, 1, 1) == (0, 0, 3);
    let cross = kinds_between(&l, 0, 1) == (1, 1, 0) && kinds_between(&l, 1, 0) == (1, 1, 0);
    let elapsed = t.elapsed();
    let pass = pair && loops && cross && l.arrow_count() == 10 && elapsed < EXAMPLE_BUDGET;
    Outcome::new(pass, format!("{} ({elapsed:?})", l.summary()))
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let mut cases = 0;
    let mut mismatches = Vec::new();
    for eps in [Sign::Plus, Sign::Minus] {
        for n in 1..=8u32 {
            if eps == Sign::Minus && n % 2 == 1 {
                continue;
            }
            for k in 0..=4u32 {
                for l in 0..=4u32 {
                    cases += 1;
                    let s = one_vertex_setting(eps, n, k as usize, l as usize).unwrap();
                    let got = has_orthogonal_simples(&s).unwrap().answer;
                    let want = one_vertex_classification(eps, n, k, l).unwrap();
                    if got != want {
                        mismatches.push((eps, n, k, l, got, want));
                    }
                }
            }
        }
    }
    let elapsed = t.elapsed();
    let mut detail = format!("{} of {cases} agree ({elapsed:?})", cases - mismatches.len());
    let mut documented = elapsed < ONE_VERTEX_BUDGET;
    for &(eps, n, k, l, got, want) in &mismatches {
        // Oracle view: orthogonal simples exist iff a generic point
        // generates the full matrix algebra.
        let s = one_vertex_setting(eps, n, k as usize, l as usize).unwrap();
        let algebra: BTreeSet<usize> = (0..5)
            .map(|seed| generated_algebra_dim(&sample_drep(&s, seed).unwrap()))
            .collect();
        let oracle = algebra.contains(&((n * n) as usize));
        detail += &format!(
            "; ({eps}, n={n}, k={k}, l={l}): algorithm {got}, closed form {want}, oracle algebra dims {algebra:?} of {}",
            n * n
        );
        documented &= KNOWN_DEVIATIONS.contains(&(eps, n, k, l)) && oracle == got;
    }
    Outcome { pass: mismatches.is_empty() && elapsed < ONE_VERTEX_BUDGET, detail, documented }
}

/// Smallest relabelling of `(arrow counts, α)` under vertex permutations.
fn canonical(n: usize, counts: &[usize], alpha: &[u32]) -> (Vec<usize>, Vec<u32>) {
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for i in (0..n).filter(|i| !p.contains(i)) {
                next.push([p.as_slice(), &[i]].concat());
            }
        }
        perms = next;
    }
    perms
        .iter()
        .map(|p| {
            let c = (0..n * n).map(|x| counts[p[x / n] * n + p[x % n]]).collect();
            let a = (0..n).map(|i| alpha[p[i]]).collect();
            (c, a)
        })
        .min()
        .expect("at least one permutation")
}

fn quiver_from_counts(n: usize, counts: &[usize]) -> Quiver {
    let mut pairs = Vec::new();
    for (x, &c) in counts.iter().enumerate() {
        pairs.extend(std::iter::repeat((x / n, x % n)).take(c));
    }
    Quiver::from_pairs(n, &pairs).unwrap()
}

fn criterion_4() -> Outcome {
    let t = Instant::now();
    let mut exhaustive = 0;
    let mut mismatches = 0;
    for n in 1..=3usize {
        let mut seen = BTreeSet::new();
        for code in 0..3usize.pow((n * n) as u32) {
            let counts: Vec<usize> = (0..n * n).map(|i| (code / 3usize.pow(i as u32)) % 3).collect();
            for acode in 0..4usize.pow(n as u32) {
                let alpha: Vec<u32> = (0..n).map(|i| ((acode / 4usize.pow(i as u32)) % 4) as u32).collect();
                let key = canonical(n, &counts, &alpha);
                if !seen.insert(key.clone()) {
                    continue;
                }
                exhaustive += 1;
                let q = quiver_from_counts(n, &key.0);
                let alpha = DimensionVector(key.1);
                if has_simples_recursive(&q, &alpha).unwrap().answer != has_simples_lbp(&q, &alpha).unwrap() {
                    mismatches += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ORDINARY_SEED);
    for _ in 0..RANDOM_ORDINARY {
        let counts: Vec<usize> = (0..16).map(|_| rng.gen_range(0..=2)).collect();
        let alpha = DimensionVector((0..4).map(|_| rng.gen_range(0..=3)).collect());
        let q = quiver_from_counts(4, &counts);
        if has_simples_recursive(&q, &alpha).unwrap().answer != has_simples_lbp(&q, &alpha).unwrap() {
            mismatches += 1;
        }
    }
    Outcome::new(
        mismatches == 0,
        format!(
            "{exhaustive} instances up to relabelling on <= 3 vertices, {RANDOM_ORDINARY} random on 4 (seed {ORDINARY_SEED}), {mismatches} mismatches ({:?})",
            t.elapsed()
        ),
    )
}

fn triangular(n: i64) -> i64 {
    n * (n + 1) / 2
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for eps in [Sign::Plus, Sign::Minus] {
        for n in 1..=4i64 {
            if eps == Sign::Minus && n % 2 == 1 {
                continue;
            }
            for k in 0..=3i64 {
                for l in 0..=3i64 {
                    let s = one_vertex_setting(eps, n as u32, k as usize, l as usize).unwrap();
                    // A symmetric loop is a symmetric matrix against the form
                    // (γ m symmetric); an antisymmetric one is skew.
                    let drep = k * triangular(n) + l * triangular(n - 1);
                    let dgl = if eps == Sign::Plus { triangular(n - 1) } else { triangular(n) };
                    checked += 1;
                    let got = (drep_dim(&s).unwrap(), dgl_dim(&s).unwrap());
                    if got != (drep, dgl) {
                        bad.push(format!("({eps}, {n}, {k}, {l}): {got:?} vs {:?}", (drep, dgl)));
                    }
                }
            }
        }
    }
    for n in 1..=4u32 {
        for pairs in 0..=2 {
            let mut b = SettingBuilder::new();
            let (v, _) = b.general_pair(n);
            for _ in 0..pairs {
                b.arrow_pair(v, v);
            }
            let s = b.build().unwrap();
            let n = i64::from(n);
            checked += 1;
            let got = (drep_dim(&s).unwrap(), dgl_dim(&s).unwrap());
            if got != (pairs * n * n, n * n) {
                bad.push(format!("general pair {n}, {pairs} loop pairs: {got:?}"));
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("{checked} settings, mismatches: {bad:?}"))
}

fn oracle_suite() -> Vec<(String, SupermixedSetting)> {
    let mut out = Vec::new();
    for (e, n, k, l) in [
        (Sign::Plus, 1, 1, 0),
        (Sign::Plus, 2, 2, 0),
        (Sign::Plus, 2, 1, 1),
        (Sign::Plus, 2, 0, 2),
        (Sign::Plus, 3, 0, 2),
        (Sign::Plus, 3, 1, 1),
        (Sign::Plus, 3, 2, 0),
        (Sign::Plus, 4, 0, 2),
        (Sign::Minus, 2, 2, 0),
        (Sign::Minus, 2, 1, 1),
        (Sign::Minus, 2, 0, 2),
        (Sign::Minus, 2, 3, 0),
        (Sign::Minus, 4, 1, 1),
        (Sign::Minus, 4, 0, 2),
        (Sign::Minus, 4, 2, 0),
        (Sign::Minus, 6, 1, 1),
    ] {
        let name = format!("one vertex ({e}, n={n}, k={k}, l={l})");
        out.push((name, one_vertex_setting(e, n, k, l).unwrap()));
    }
    out.push(("general pair 2, four antisymmetric arrows".into(), first_example()));
    out.push(("O(2) and Sp(2), two arrow pairs".into(), second_example()));
    let o = Orbit::Orthogonal;
    let sp = Orbit::Symplectic;
    let pair = Orbit::Pair;
    let named: [(&str, Vec<Orbit>, Vec<ArrowSpec>); 11] = [
        ("general pair 1, loop pair", vec![pair(1)], vec![(0, 0, false)]),
        ("two O(1), arrow pair", vec![o(1), o(1)], vec![(0, 1, false)]),
        ("two O(2), two arrow pairs", vec![o(2), o(2)], vec![(0, 1, false), (1, 0, false)]),
        ("general pair 1, symmetric both ways", vec![pair(1)], vec![(0, 1, false), (1, 0, false)]),
        ("general pair 1, antisymmetric both ways", vec![pair(1)], vec![(0, 1, true), (1, 0, true)]),
        ("general pair 2, symmetric both ways", vec![pair(2)], vec![(0, 1, false), (1, 0, false)]),
        ("O(2) with loop, arrow pair to Sp(2)", vec![o(2), sp(2)], vec![(0, 0, false), (0, 1, false)]),
        ("O(1), arrow pair to Sp(2)", vec![o(1), sp(2)], vec![(0, 1, false)]),
        ("O(1) into a general pair 1", vec![o(1), pair(1)], vec![(0, 1, false), (2, 1, false)]),
        (
            "O(2) and general pair 1, both directions",
            vec![o(2), pair(1)],
            vec![(0, 1, false), (1, 0, false), (2, 1, true)],
        ),
        ("O(3) and O(1), loop and arrow pairs", vec![o(3), o(1)], vec![(0, 0, false), (0, 1, false), (1, 0, false)]),
    ];
    for (name, orbits, arrows) in named {
        out.push((name.to_string(), build(&orbits, &arrows)));
    }
    out
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let suite = oracle_suite();
    let mut problems = Vec::new();
    let mut yes = 0;
    let mut no = 0;
    for (name, s) in &suite {
        assert!(s.gamma_bar().total() <= 6, "{name}");
        let answers = [
            (FactorKind::Orthogonal, has_orthogonal_simples(s).unwrap().answer),
            (FactorKind::Symplectic, has_symplectic_simples(s).unwrap()),
            (FactorKind::General, has_general_simples(s).unwrap()),
        ];
        for (kind, answer) in answers {
            let found = matches!(
                verify_existence(s, kind, ORACLE_SAMPLES, ORACLE_SEED).unwrap(),
                Verification::ConfirmedYes { .. }
            );
            if answer {
                yes += 1;
            } else {
                no += 1;
            }
            // A witness refutes a "no" for every kind; the criterion also
            // asks for one behind every "yes".
            if answer != found {
                problems.push(format!("{name}: {kind} algorithm {answer}, witness {found}"));
            }
        }
    }
    let elapsed = t.elapsed();
    Outcome::new(
        problems.is_empty() && suite.len() >= 20 && elapsed < ORACLE_BUDGET,
        format!(
            "{} settings, {yes} yes / {no} no answers, {ORACLE_SAMPLES} samples, seed {ORACLE_SEED} ({elapsed:?}); problems: {problems:?}",
            suite.len()
        ),
    )
}

fn random_setting(rng: &mut ChaCha8Rng) -> SupermixedSetting {
    let orbits: Vec<Orbit> = (0..rng.gen_range(1..=3))
        .map(|_| match rng.gen_range(0..3) {
            0 => Orbit::Orthogonal(rng.gen_range(1..=2)),
            1 => Orbit::Symplectic(2),
            _ => Orbit::Pair(rng.gen_range(1..=2)),
        })
        .collect();
    let arrows: Vec<ArrowSpec> = (0..rng.gen_range(0..=4))
        .map(|_| (rng.gen_range(0..8), rng.gen_range(0..8), rng.gen()))
        .collect();
    build(&orbits, &arrows)
}

fn arrow_counts(q: &Quiver) -> Vec<Vec<usize>> {
    let n = q.vertex_count();
    let mut m = vec![vec![0; n]; n];
    for a in q.arrows() {
        m[a.head][a.tail] += 1;
    }
    m
}

fn criterion_7() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
    let mut failures: Vec<String> = Vec::new();
    let (mut paths, mut locals, mut diss_pairs) = (0, 0, 0);
    for case in 0..PROPERTY_CASES {
        let s = random_setting(&mut rng);
        let q = s.quiver();
        if normalize_to_strict(&s.to_raw()).ok().as_ref() != Some(&s) {
            failures.push(format!("case {case}: normalize not idempotent"));
        }
        for p in all_paths(q, 3, 500).unwrap_or_default() {
            paths += 1;
            let (d1, e1) = path_dual(&s, &p).unwrap();
            let (d2, e2) = path_dual(&s, &d1).unwrap();
            if d2 != p || e1 * e2 != s.smq().eps(p.head(q)) * s.smq().eps(p.tail(q)) {
                failures.push(format!("case {case}: dual sign law on {p}"));
            }
        }
        let ambient = diss_dim(&s).ok();
        let mut decompositions = vec![SemisimpleDecomposition::new(vec![])];
        for c in enumerate_cycles(q).into_iter().take(4) {
            if let Ok((f, _)) = cykel_split(&s, &c) {
                decompositions.push(SemisimpleDecomposition::new(vec![f]));
            }
        }
        for partial in decompositions {
            let Ok(d) = complete_decomposition(&s, &partial) else { continue };
            locals += 1;
            let l = local_mixed_setting(&s, &d).unwrap();
            if !validate(&l.to_raw()).is_empty() || !l.smq().is_strict() {
                failures.push(format!("case {case}: local setting invalid or not strict"));
            }
            let (plain, _) = underlying_local_quiver(&s, &d).unwrap();
            if arrow_counts(l.quiver()) != arrow_counts(&plain) {
                failures.push(format!("case {case}: symmetric + antisymmetric != A_XY"));
            }
            if let (Some(a), Ok(x)) = (ambient, diss_dim(&l)) {
                diss_pairs += 1;
                if x > a {
                    failures.push(format!("case {case}: local diss {x} > ambient {a}"));
                }
            }
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!(
            "{PROPERTY_CASES} settings (seed {PROPERTY_SEED}), {paths} paths, {locals} local settings, {diss_pairs} diss comparisons ({:?}); failures: {failures:?}",
            t.elapsed()
        ),
    )
}

fn criterion_8() -> Outcome {
    let a = one_vertex_setting(Sign::Plus, 2, 2, 0).unwrap();
    let b = one_vertex_setting(Sign::Plus, 2, 1, 1).unwrap();
    let (ia, da) = (dim_iss(a.quiver(), a.gamma_bar()).unwrap(), diss_dim(&a).unwrap());
    let (ib, db) = (dim_iss(b.quiver(), b.gamma_bar()).unwrap(), diss_dim(&b).unwrap());
    let ra = all_simples_orthogonal(&a).unwrap();
    let rb = all_simples_orthogonal(&b).unwrap();
    Outcome::new(
        ra && !rb && (ia, da) == (5, 5) && (ib, db) == (5, 3),
        format!("two symmetric loops: {ra} ({ia} = {da}); one of each: {rb} ({ib} vs {db})"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("first example local setting", criterion_1),
        ("second example local setting", criterion_2),
        ("one-vertex classification", criterion_3),
        ("ordinary recursion equals LBP", criterion_4),
        ("trace-method dimensions", criterion_5),
        ("oracle confirmation", criterion_6),
        ("property suites", criterion_7),
        ("all simples orthogonal", criterion_8),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        let note = if !o.pass && o.documented { " [documented deviation]" } else { "" };
        println!("criterion {}: {status} {name}{note}: {}", i + 1, o.detail);
        if !o.pass && !o.documented {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
