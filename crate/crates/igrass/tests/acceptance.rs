//! Acceptance suite, criteria 2-8 (criterion 1 drives the CLI binary and
//! lives in the CLI crate's acceptance target).
//!
//! Each criterion is one test that prints a `ACCEPTANCE <k> ...: PASS`
//! line on success; thresholds and tolerances are pinned in code, all
//! comparisons exact.

use std::time::Instant;

use num_bigint::BigUint;

use igrass::classify::{
    anticanonical, build, count_fano_formula, count_fano_oracle, fano_status_by_cone,
    fano_status_by_criterion, restrict_last_index, TypedVariety,
};
use igrass::faces::{bpf_saturated, semiample_cone, verify_smooth, SmoothnessStatus};
use igrass::grading::{Cone2, GradingData, Weight};
use igrass::hilbert::{graded_dim, graded_dim_oracle_with_bound, positivity_certificate};

fn w(x: i64, y: i64) -> Weight {
    Weight::new(x, y)
}

fn weakly_increasing(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn rec(out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>, len: usize, lo: i64, hi: i64) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=hi {
            cur.push(v);
            rec(out, cur, len, v, hi);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 && hi < lo {
        return out;
    }
    rec(&mut out, &mut Vec::new(), len, lo, hi);
    out
}

/// The six-type grid of the acceptance criteria: n <= 8, m <= 3, all
/// parameters <= 3, within payload invariants.
fn six_type_grid() -> Vec<TypedVariety> {
    const N_MAX: u32 = 8;
    const M_MAX: u32 = 3;
    const P_MAX: i64 = 3;
    let mut grid = Vec::new();
    let occurs = |vals: Vec<i64>, a: i64| -> bool {
        let lo = vals.iter().min().copied().unwrap_or(i64::MAX);
        let hi = vals.iter().max().copied().unwrap_or(i64::MIN);
        lo == 0 && hi == a
    };
    for n in 4..=N_MAX {
        for m in 0..=M_MAX {
            for a in 0..=P_MAX {
                for k in 4..=n {
                    for alpha in weakly_increasing((n - k + 1) as usize, 0, a) {
                        for beta in weakly_increasing(m as usize, 0, a) {
                            let vals: Vec<i64> =
                                alpha.iter().chain(beta.iter()).copied().collect();
                            if !occurs(vals, a) {
                                continue;
                            }
                            grid.push(TypedVariety::Type1 {
                                n,
                                m,
                                k,
                                a,
                                alpha: alpha.clone(),
                                beta,
                            });
                        }
                    }
                }
                for alpha in 0..=a {
                    for beta in weakly_increasing(m as usize, 0, a) {
                        let vals: Vec<i64> = beta.iter().copied().chain([alpha]).collect();
                        if !occurs(vals, a) {
                            continue;
                        }
                        grid.push(TypedVariety::Type2 {
                            n,
                            m,
                            a,
                            alpha,
                            beta,
                        });
                    }
                }
            }
            for k in 4..n {
                grid.push(TypedVariety::Type3 { n, m, k });
            }
            if m >= 1 {
                grid.push(TypedVariety::Type4 { n, m });
            }
            if m >= 2 {
                for b1 in 0..=P_MAX {
                    for b2 in 0..=b1 {
                        for alpha in weakly_increasing((n - 3) as usize, b1, P_MAX) {
                            grid.push(TypedVariety::Type5 { n, m, b1, b2, alpha });
                        }
                    }
                }
                for beta_tail in weakly_increasing((m - 1) as usize, 0, P_MAX) {
                    let mut beta = vec![0];
                    beta.extend(beta_tail);
                    grid.push(TypedVariety::Type6 { n, m, beta });
                }
            }
        }
    }
    for v in &grid {
        v.validate().unwrap_or_else(|e| panic!("grid datum invalid: {v:?}: {e}"));
    }
    grid
}

/// Twenty perturbed homogeneous gradings with their ample classes: scaled
/// copies of classified matrices (non-unimodular relevant pairs) and
/// gradings with free weights split across the chamber.
fn curated_not_smooth() -> Vec<(GradingData, Weight, &'static str)> {
    let scale = |g: &GradingData, sx: i64, sy: i64| -> GradingData {
        GradingData::new(
            g.n(),
            g.t_weights()
                .iter()
                .map(|w| Weight::new(w.x * sx, w.y * sy))
                .collect(),
            g.s_weights()
                .iter()
                .map(|w| Weight::new(w.x * sx, w.y * sy))
                .collect(),
        )
        .unwrap()
    };
    let full = |n, k, alpha: &[i64]| {
        build(&TypedVariety::full(n, k, alpha.to_vec()).unwrap())
            .unwrap()
            .0
    };
    // homogeneous gradings from index potentials: w_ij = v_i + v_j + c
    let potential = |v: &[i64], c: Weight, second: &[i64]| -> GradingData {
        let n = v.len() as u32;
        let mut t = Vec::new();
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                t.push(Weight::new(v[i] + v[j] + c.x, second[i] + second[j] + c.y));
            }
        }
        GradingData::new(n, t, vec![]).unwrap()
    };
    let split_frees = |n: u32, s: Vec<Weight>| -> GradingData {
        let len = (n as usize) * (n as usize - 1) / 2;
        GradingData::new(n, vec![w(1, 0); len], s).unwrap()
    };
    let mut out: Vec<(GradingData, Weight, &'static str)> = Vec::new();
    // 1-8: y- and x-scaled table rows; every relevant pair has |det| = 2 or 3
    for (i, g) in [
        scale(&full(4, 4, &[0]), 1, 2),
        scale(&full(4, 4, &[0]), 2, 1),
        scale(&full(5, 5, &[0]), 1, 2),
        scale(&full(5, 5, &[0]), 3, 1),
        scale(&full(5, 4, &[0, 0]), 1, 2),
        scale(&full(6, 6, &[0]), 1, 3),
        scale(&full(6, 5, &[0, 0]), 1, 2),
        scale(&full(7, 7, &[0]), 2, 1),
    ]
    .into_iter()
    .enumerate()
    {
        let _ = i;
        out.push((g, w(1, 1), "non-unimodular pair"));
    }
    // 9-11: doubled second coordinate on one ray via potentials
    out.push((
        potential(&[0, 0, 0, 0, 0], w(1, 0), &[0, 0, 0, 0, 2]),
        w(1, 1),
        "non-unimodular pair",
    ));
    out.push((
        potential(&[0, 0, 0, 0, 0, 0], w(1, 0), &[0, 0, 0, 0, 0, 2]),
        w(1, 1),
        "non-unimodular pair",
    ));
    out.push((
        potential(&[0, 0, 0, 0, 0], w(1, 0), &[0, 0, 0, 2, 2]),
        w(1, 1),
        "non-unimodular pair",
    ));
    // 12-14: scaled Type 3 / Type 6 data
    {
        let (g, u) = build(&TypedVariety::Type3 { n: 5, m: 1, k: 4 }).unwrap();
        out.push((scale(&g, 1, 2), Weight::new(u.x, u.y * 2), "non-unimodular pair"));
        let (g, _) = build(&TypedVariety::Type6 {
            n: 4,
            m: 2,
            beta: vec![0, 0],
        })
        .unwrap();
        out.push((scale(&g, 1, 2), w(1, 1), "non-unimodular pair"));
        let (g, _) = build(&TypedVariety::Type6 {
            n: 5,
            m: 3,
            beta: vec![0, 0, 0],
        })
        .unwrap();
        out.push((scale(&g, 1, 3), w(1, 1), "non-unimodular pair"));
    }
    // 15-20: free weights split across the chamber
    out.push((split_frees(4, vec![w(3, 1), w(0, 1), w(0, 1)]), w(1, 1), "split frees"));
    out.push((split_frees(4, vec![w(2, 1), w(2, 1), w(0, 1), w(0, 1)]), w(1, 1), "split frees"));
    out.push((split_frees(5, vec![w(3, 1), w(0, 1), w(0, 1)]), w(1, 1), "split frees"));
    out.push((split_frees(5, vec![w(1, 1), w(1, 1), w(0, 1), w(0, 1)]), w(3, 4), "split frees"));
    out.push((split_frees(6, vec![w(2, 1), w(0, 1), w(0, 1)]), w(1, 1), "split frees"));
    out.push((split_frees(6, vec![w(4, 1), w(4, 1), w(1, 1), w(1, 1)]), w(2, 1), "split frees"));
    assert_eq!(out.len(), 20);
    out
}

#[test]
fn criterion_2_counting() {
    let start = Instant::now();
    let expected: [u32; 5] = [1, 2, 2, 4, 4];
    for (n, e) in (4u32..=8).zip(expected) {
        assert_eq!(
            count_fano_formula(n).unwrap(),
            BigUint::from(e),
            "count_fano_formula({n})"
        );
    }
    for n in 4u32..=30 {
        let f = count_fano_formula(n).unwrap();
        let o = count_fano_oracle(n).unwrap();
        assert_eq!(f, o, "formula vs oracle at n = {n}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "counting took {elapsed:?} (budget 30s)");
    println!("ACCEPTANCE 2 counting (n = 4..30, formula = oracle, {elapsed:?}): PASS");
}

#[test]
fn criterion_3_smoothness() {
    let start = Instant::now();
    let grid = six_type_grid();
    assert!(grid.len() > 1000, "grid unexpectedly small: {}", grid.len());
    for v in &grid {
        let (g, u) = build(v).unwrap();
        let verdict = verify_smooth(&g, u);
        assert!(
            verdict.is_smooth(),
            "grid instance not recognized smooth: {v:?} -> {verdict}"
        );
    }
    for (idx, (g, u, label)) in curated_not_smooth().into_iter().enumerate() {
        let verdict = verify_smooth(&g, u);
        assert_eq!(
            verdict.status,
            SmoothnessStatus::NotSmooth,
            "curated case {idx} ({label}) gave {verdict}"
        );
        assert!(
            verdict.witness.is_some(),
            "curated case {idx} ({label}) lacks a witness"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "smoothness suite took {elapsed:?} (budget 2min)");
    println!(
        "ACCEPTANCE 3 smoothness ({} grid instances smooth, 20 perturbed witnessed, {elapsed:?}): PASS",
        grid.len()
    );
}

#[test]
fn criterion_4_fano_consistency() {
    let grid = six_type_grid();
    for v in &grid {
        let (g, u) = build(v).unwrap();
        let by_criterion = fano_status_by_criterion(v).unwrap();
        let by_cone = fano_status_by_cone(&g, u).unwrap();
        assert_eq!(
            by_criterion, by_cone,
            "criterion/cone disagree on {v:?}"
        );
    }
    println!(
        "ACCEPTANCE 4 fano consistency (criterion = cone on {} instances): PASS",
        grid.len()
    );
}

#[test]
fn criterion_5_hilbert_oracle() {
    let start = Instant::now();
    let full = |n, k, alpha: &[i64]| {
        build(&TypedVariety::full(n, k, alpha.to_vec()).unwrap())
            .unwrap()
            .0
    };
    let mut checked = 0usize;
    for g in [full(5, 5, &[0]), full(5, 4, &[0, 0])] {
        let lambda = positivity_certificate(&g).unwrap();
        for x in -8i64..=14 {
            for y in -8i64..=14 {
                let t = w(x, y);
                let level = lambda.dot(t);
                if !(0..=6).contains(&level) {
                    continue;
                }
                let dp = graded_dim(&g, t).unwrap();
                let oracle = graded_dim_oracle_with_bound(&g, t, 6).unwrap();
                assert_eq!(dp, oracle, "dp vs oracle at target {t}");
                checked += 1;
            }
        }
    }
    // 50 deterministic pseudo-random homogeneous pointed gradings on n = 4, 5
    let mut rng_state = 0x243F6A8885A308D3u64;
    let mut next = move || {
        rng_state ^= rng_state << 13;
        rng_state ^= rng_state >> 7;
        rng_state ^= rng_state << 17;
        rng_state
    };
    let mut produced = 0;
    while produced < 50 {
        let n = 4 + (next() % 2) as u32;
        let mut vx = Vec::new();
        let mut vy = Vec::new();
        for _ in 0..n {
            vx.push((next() % 3) as i64);
            vy.push((next() % 2) as i64);
        }
        let cx = (next() % 2) as i64;
        let mut t = Vec::new();
        for i in 0..n as usize {
            for j in (i + 1)..n as usize {
                t.push(w(vx[i] + vx[j] + cx, vy[i] + vy[j] + 1));
            }
        }
        let m = (next() % 3) as usize;
        let mut s = Vec::new();
        for _ in 0..m {
            s.push(w((next() % 3) as i64, 1 + (next() % 2) as i64));
        }
        let g = GradingData::new(n, t, s).unwrap();
        if !igrass::grading::is_pointed(&g) {
            continue;
        }
        assert!(igrass::grading::is_homogeneous(&g));
        let lambda = positivity_certificate(&g).unwrap();
        produced += 1;
        let mut targets = 0;
        for x in -4i64..=8 {
            for y in -4i64..=8 {
                let t = w(x, y);
                let level = lambda.dot(t);
                if !(0..=4).contains(&level) || targets >= 12 {
                    continue;
                }
                let dp = graded_dim(&g, t).unwrap();
                let oracle = graded_dim_oracle_with_bound(&g, t, 4).unwrap();
                assert_eq!(dp, oracle, "dp vs oracle at {t} on random grading {g:?}");
                targets += 1;
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "hilbert oracle took {elapsed:?} (budget 2min)");
    println!("ACCEPTANCE 5 hilbert oracle equivalence ({checked} targets, {elapsed:?}): PASS");
}

#[test]
fn criterion_6_anticanonical() {
    let grid = six_type_grid();
    for v in &grid {
        let (g, _) = build(v).unwrap();
        let mk = anticanonical(&g)
            .unwrap_or_else(|e| panic!("anticanonical not integral on {v:?}: {e}"));
        assert_eq!(
            mk,
            v.anticanonical_closed_form(),
            "closed form disagrees on {v:?}"
        );
    }
    // the n = 4 flag variety: -K = (2,2), semiample cone = positive quadrant
    let flag = TypedVariety::full(4, 4, vec![0]).unwrap();
    let (g, u) = build(&flag).unwrap();
    assert_eq!(anticanonical(&g).unwrap(), w(2, 2));
    assert_eq!(
        semiample_cone(&g, u).unwrap(),
        Cone2::Salient(w(1, 0), w(0, 1))
    );
    println!(
        "ACCEPTANCE 6 anticanonical integrality and closed forms ({} instances): PASS",
        grid.len()
    );
}

#[test]
fn criterion_7_fujita_bpf() {
    let grid = six_type_grid();
    for v in &grid {
        let (g, u) = build(v).unwrap();
        assert!(
            bpf_saturated(&g, u).unwrap(),
            "bpf monoid not saturated on {v:?}"
        );
    }
    println!(
        "ACCEPTANCE 7 fujita/bpf saturation ({} instances): PASS",
        grid.len()
    );
}

#[test]
fn criterion_8_restriction() {
    let full = |n, k, alpha: &[i64]| build(&TypedVariety::full(n, k, alpha.to_vec()).unwrap()).unwrap();
    let row1 = full(5, 5, &[0]).0;
    let flag = full(4, 4, &[0]).0;
    // both n = 6 table rows restrict to row 1 of the n = 5 table
    let (g3, u3) = full(6, 6, &[0]);
    assert_eq!(restrict_last_index(&g3, u3).unwrap(), row1);
    let (g4, u4) = full(6, 5, &[0, 0]);
    assert_eq!(restrict_last_index(&g4, u4).unwrap(), row1);
    // row 1 restricts to the unique smooth full matrix for n = 4
    let (g1, u1) = full(5, 5, &[0]);
    assert_eq!(restrict_last_index(&g1, u1).unwrap(), flag);
    // spot checks one level up: the n = 7 rows land on the n = 6 rows
    let row3 = full(6, 6, &[0]).0;
    let row4 = full(6, 5, &[0, 0]).0;
    let (g5, u5) = full(7, 7, &[0]);
    assert_eq!(restrict_last_index(&g5, u5).unwrap(), row3);
    let (g6, u6) = full(7, 6, &[0, 0]);
    assert_eq!(restrict_last_index(&g6, u6).unwrap(), row3);
    let (g8, u8) = full(7, 5, &[0, 0, 0]);
    assert_eq!(restrict_last_index(&g8, u8).unwrap(), row4);
    // n = 4 cannot be restricted
    let (gf, uf) = full(4, 4, &[0]);
    assert!(restrict_last_index(&gf, uf).is_err());
    println!("ACCEPTANCE 8 restriction lemma: PASS");
}
