//! Acceptance suite.
//!
//! One test per criterion; each prints a single `AC-n PASS/FAIL` line
//! (visible with `cargo test --test acceptance -- --nocapture`) and fails
//! the build on any violation. All comparisons are exact equalities of
//! canonical polynomial forms; the stated wall-clock budgets are asserted.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;

use dentedhex::lgv::{
    determinant, determinant_fraction_free, gf_matrix, nlp_bruteforce, nlp_families, nlp_gf,
    ratio_identity_check, EndpointConfig,
};
use dentedhex::paths::{
    enumerate_paths, gf_closed, gf_diag, gf_recurrence, shift_factor, shift_factor_pochhammer,
    GridPoint,
};
use dentedhex::poly::LaurentPoly;
use dentedhex::tilings::Region;

fn report(id: &str, what: &str, cases: usize, failures: &[String], started: Instant) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "{id} {verdict}: {what} ({cases} cases, {:.2}s)",
        started.elapsed().as_secs_f64()
    );
    for f in failures.iter().take(5) {
        println!("  counterexample: {f}");
    }
    assert!(failures.is_empty(), "{id} failed with {} cases", failures.len());
}

/// Deterministic generator for the seeded random configurations.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// All strictly increasing `size`-tuples drawn from `0..=max`.
fn increasing_tuples(max: i64, size: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(next: i64, max: i64, size: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in next..=max {
            cur.push(v);
            rec(v + 1, max, size, cur, out);
            cur.pop();
        }
    }
    rec(0, max, size, &mut cur, &mut out);
    out
}

/// Every config with `n <= max_n` drawn from `{0..=max_col}`, optionally
/// restricted to `a_i <= c_i`.
fn enumerate_configs(max_n: usize, max_col: i64, dominated_only: bool) -> Vec<EndpointConfig> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let tuples = increasing_tuples(max_col, n);
        for starts in &tuples {
            for ends in &tuples {
                if dominated_only && starts.iter().zip(ends).any(|(a, c)| a > c) {
                    continue;
                }
                out.push(EndpointConfig::new(starts.clone(), ends.clone()).unwrap());
            }
        }
    }
    out
}

/// The 20 seeded random configs used by AC-5 and AC-11: n in {4, 5},
/// columns at most 10, a_i <= c_i, k in {0..4}.
fn random_large_configs() -> Vec<(EndpointConfig, u32)> {
    let mut rng = SplitMix(0x5EED_2026);
    let mut out = Vec::new();
    for i in 0..20 {
        let n = if i % 2 == 0 { 4 } else { 5 };
        let mut ends: Vec<i64> = Vec::new();
        while ends.len() < n {
            let c = rng.below(11) as i64;
            if !ends.contains(&c) {
                ends.push(c);
            }
        }
        ends.sort_unstable();
        let mut starts = Vec::with_capacity(n);
        let mut prev = -1i64;
        for &c in &ends {
            let lo = prev + 1;
            let a = lo + rng.below((c - lo + 1) as u64) as i64;
            starts.push(a);
            prev = a;
        }
        let k = rng.below(5) as u32;
        out.push((EndpointConfig::new(starts, ends).unwrap(), k));
    }
    out
}

/// All dented half hexagons with `1 <= x <= 3`, `0 <= h <= 4`.
fn small_regions() -> Vec<Region> {
    let mut out = Vec::new();
    for x in 1..=3u32 {
        for h in 0..=4u32 {
            let rows: Vec<u32> = (1..=h).collect();
            for lmask in 0u32..(1 << h) {
                let left: Vec<u32> = rows
                    .iter()
                    .filter(|&&r| lmask & (1 << (r - 1)) != 0)
                    .copied()
                    .collect();
                let need = h as usize - left.len();
                for rmask in 0u32..(1 << h) {
                    if (rmask.count_ones() as usize) != need {
                        continue;
                    }
                    let right: Vec<u32> = rows
                        .iter()
                        .filter(|&&r| rmask & (1 << (r - 1)) != 0)
                        .copied()
                        .collect();
                    out.push(Region::new(x, h, left.clone(), right).unwrap());
                }
            }
        }
    }
    out
}

#[test]
fn ac1_closed_form_equals_recursion() {
    let t = Instant::now();
    let mut cases: Vec<(i64, i64, i64, i64)> = Vec::new();
    for a in 0..=8 {
        for c in a..=8 {
            for d in 0..=8 {
                for b in d..=8 {
                    cases.push((a, b, c, d));
                }
            }
        }
    }
    let n = cases.len();
    let failures: Vec<String> = cases
        .into_par_iter()
        .filter_map(|(a, b, c, d)| {
            (gf_closed(a, b, c, d).unwrap() != gf_recurrence(a, b, c, d))
                .then(|| format!("gf({a},{b},{c},{d})"))
        })
        .collect();
    report(
        "AC-1",
        "gf_closed == gf_recurrence on 0<=a<=c<=8, 0<=d<=b<=8",
        n,
        &failures,
        t,
    );
    assert!(t.elapsed().as_secs_f64() < 60.0, "AC-1 exceeded 60s");
}

#[test]
fn ac2_closed_form_equals_path_enumeration() {
    let t = Instant::now();
    // Width and height are bounded by the criterion; the absolute offsets
    // a, d are capped at 6 to keep the case list finite.
    let mut cases: Vec<(i64, i64, i64, i64)> = Vec::new();
    for a in 0..=6 {
        for w in 0..=6 {
            for d in 0..=6 {
                for ht in 0..=6 {
                    cases.push((a, d + ht, a + w, d));
                }
            }
        }
    }
    let n = cases.len();
    let failures: Vec<String> = cases
        .into_par_iter()
        .filter_map(|(a, b, c, d)| {
            let sum = enumerate_paths(a, b, c, d)
                .unwrap()
                .into_iter()
                .fold(LaurentPoly::zero(), |acc, (_, w)| &acc + &w);
            (sum != gf_closed(a, b, c, d).unwrap()).then(|| format!("gf({a},{b},{c},{d})"))
        })
        .collect();
    report(
        "AC-2",
        "gf_closed == sum of enumerated path weights (width, height <= 6)",
        n,
        &failures,
        t,
    );
    assert!(t.elapsed().as_secs_f64() < 60.0, "AC-2 exceeded 60s");
}

#[test]
fn ac3_diagonal_specialization() {
    let t = Instant::now();
    let mut failures = Vec::new();
    let mut n = 0;
    for a in 0..=10 {
        for c in a..=10 {
            n += 1;
            if gf_diag(a, c).unwrap() != gf_closed(a, a, c, 0).unwrap() {
                failures.push(format!("gf_diag({a},{c})"));
            }
        }
    }
    report(
        "AC-3",
        "gf_diag(a,c) == gf_closed(a,a,c,0) on 0<=a<=c<=10",
        n,
        &failures,
        t,
    );
}

#[test]
fn ac4_shift_factor_identity() {
    let t = Instant::now();
    let mut cases = Vec::new();
    for a in 0..=8i64 {
        for c in a..=8 {
            for k in 0..=5u32 {
                cases.push((a, c, k));
            }
        }
    }
    let n = cases.len();
    let failures: Vec<String> = cases
        .into_par_iter()
        .filter_map(|(a, c, k)| {
            let lhs_gf = gf_diag(a + k as i64, c + k as i64).unwrap();
            let rhs_gf = gf_diag(a, c).unwrap();
            let plain = shift_factor(a, c, k);
            let poch = shift_factor_pochhammer(a, c, k);
            let plain_ok = &lhs_gf * &plain.denom == &rhs_gf * &plain.numer;
            let poch_ok = &lhs_gf * &poch.denom() == &rhs_gf * &poch.numer();
            let cross_ok = &plain.numer * &poch.denom() == &poch.numer() * &plain.denom;
            (!(plain_ok && poch_ok && cross_ok)).then(|| {
                format!("(a={a}, c={c}, k={k}) plain={plain_ok} poch={poch_ok} cross={cross_ok}")
            })
        })
        .collect();
    report(
        "AC-4",
        "width-shift identity, plain and Pochhammer forms, 0<=a<=c<=8, k<=5",
        n,
        &failures,
        t,
    );
}

fn check_ratio(cfg: &EndpointConfig, k: u32) -> Option<String> {
    match ratio_identity_check(cfg, k) {
        Ok(r) if r.holds => None,
        Ok(_) => Some(format!(
            "ratio identity fails for starts={:?} ends={:?} k={k}",
            cfg.starts(),
            cfg.ends()
        )),
        Err(e) => Some(format!(
            "error for starts={:?} ends={:?} k={k}: {e}",
            cfg.starts(),
            cfg.ends()
        )),
    }
}

#[test]
fn ac5_determinant_ratio_identity() {
    let t = Instant::now();
    let configs = enumerate_configs(3, 6, true);
    let enumerated: Vec<(EndpointConfig, u32)> = configs
        .iter()
        .flat_map(|cfg| (0..=4u32).map(move |k| (cfg.clone(), k)))
        .collect();
    let n_enum = enumerated.len();
    let mut failures: Vec<String> = enumerated
        .into_par_iter()
        .filter_map(|(cfg, k)| check_ratio(&cfg, k))
        .collect();

    let randoms = random_large_configs();
    let n_rand = randoms.len();
    failures.par_extend(
        randoms
            .into_par_iter()
            .filter_map(|(cfg, k)| check_ratio(&cfg, k)),
    );
    report(
        "AC-5",
        "det ratio identity: all n<=3 configs from {0..6} x k<=4, plus 20 seeded n in {4,5}",
        n_enum + n_rand,
        &failures,
        t,
    );
    assert!(t.elapsed().as_secs_f64() < 300.0, "AC-5 exceeded 5 minutes");
}

#[test]
fn ac6_lgv_equivalence() {
    let t = Instant::now();
    let configs = enumerate_configs(3, 5, false);
    let n = configs.len();
    let failures: Vec<String> = configs
        .into_par_iter()
        .filter_map(|cfg| {
            (nlp_gf(&cfg).unwrap() != nlp_bruteforce(&cfg).unwrap()).then(|| {
                format!("starts={:?} ends={:?}", cfg.starts(), cfg.ends())
            })
        })
        .collect();
    report(
        "AC-6",
        "nlp_gf == nlp_bruteforce for every config with n<=3, c<=5",
        n,
        &failures,
        t,
    );
}

#[test]
fn ac7_master_equality() {
    let t = Instant::now();
    let regions = small_regions();
    let n = regions.len();
    let failures: Vec<String> = regions
        .into_par_iter()
        .filter_map(|r| {
            let tilings_gf = r.gf_tilings().unwrap();
            let paths_gf = nlp_gf(&r.endpoints()).unwrap();
            (tilings_gf != paths_gf).then(|| format!("{r}"))
        })
        .collect();
    report(
        "AC-7",
        "gf_tilings == nlp_gf(endpoints) for all regions x<=3, h<=4",
        n,
        &failures,
        t,
    );
    assert!(t.elapsed().as_secs_f64() < 180.0, "AC-7 exceeded 3 minutes");
}

#[test]
fn ac8_bijection_checks() {
    let t = Instant::now();
    let regions = small_regions();
    let n = regions.len();
    let failures: Vec<String> = regions
        .into_par_iter()
        .filter_map(|r| {
            let cfg = r.endpoints();
            let tilings = r.enumerate_tilings().unwrap();
            let families = nlp_families(&cfg).unwrap();
            if tilings.len() != families.len() {
                return Some(format!(
                    "{r}: {} tilings vs {} families",
                    tilings.len(),
                    families.len()
                ));
            }
            let mut seen = HashSet::new();
            for tiling in &tilings {
                let paths = match r.tiling_to_paths(tiling) {
                    Ok(p) => p,
                    Err(e) => return Some(format!("{r}: {e}")),
                };
                // endpoints and order
                if paths.len() != cfg.n() {
                    return Some(format!("{r}: family size mismatch"));
                }
                for (i, p) in paths.iter().enumerate() {
                    let a = cfg.starts()[i];
                    let c = cfg.ends()[i];
                    if p.start != GridPoint::new(a, a) || p.end() != GridPoint::new(c, 0) {
                        return Some(format!("{r}: endpoint mismatch at index {i}"));
                    }
                }
                // vertex-disjointness
                let mut occupied = HashSet::new();
                for p in &paths {
                    for pt in p.points() {
                        if !occupied.insert(pt) {
                            return Some(format!("{r}: family is not vertex-disjoint"));
                        }
                    }
                }
                // weight preservation, lozenge by lozenge
                let mut path_labels: Vec<i64> =
                    paths.iter().flat_map(|p| p.right_step_labels()).collect();
                path_labels.sort_unstable();
                let mut tile_labels: Vec<i64> = tiling
                    .vertical_lozenges()
                    .map(|l| r.lozenge_label(l))
                    .collect();
                tile_labels.sort_unstable();
                if path_labels != tile_labels {
                    return Some(format!("{r}: label multiset mismatch"));
                }
                let path_weight = paths
                    .iter()
                    .fold(LaurentPoly::one(), |acc, p| &acc * &p.weight());
                if path_weight != r.tiling_weight(tiling) {
                    return Some(format!("{r}: weight not preserved"));
                }
                // injectivity
                if !seen.insert(paths) {
                    return Some(format!("{r}: two tilings map to the same family"));
                }
            }
            None
        })
        .collect();
    report(
        "AC-8",
        "bijection image: disjoint, endpoint-correct, weight-preserving, count-matching",
        n,
        &failures,
        t,
    );
}

#[test]
fn ac9_figure_scale_region() {
    let t = Instant::now();
    let r: Region = "x=5 h=7 L=1,2,4,6 R=3,5,7".parse().unwrap();
    let cfg = r.endpoints();
    assert_eq!(cfg.starts(), &[7, 9, 11]);
    assert_eq!(cfg.ends(), &[7, 9, 11]);

    let gf_start = Instant::now();
    let gf = nlp_gf(&cfg).unwrap();
    let gf_secs = gf_start.elapsed().as_secs_f64();

    let mut failures = Vec::new();
    if gf.is_zero() {
        failures.push("figure-scale generating function is zero".to_string());
    }
    if gf_secs >= 5.0 {
        failures.push(format!("nlp_gf took {gf_secs:.2}s (budget 5s)"));
    }
    for k in [1u32, 2] {
        let check = ratio_identity_check(&cfg, k).unwrap();
        if !check.holds {
            failures.push(format!("ratio identity fails at k={k}"));
        }
    }
    let labels = r.admissible_vertical_labels();
    if labels.is_empty() || !labels.iter().all(|l| (-10..=10).contains(l)) {
        failures.push(format!("vertical labels outside [-10, 10]: {labels:?}"));
    }
    report(
        "AC-9",
        "figure-scale run: x=5 h=7, nlp_gf < 5s, ratio holds for k=1,2, labels in [-10,10]",
        3 + labels.len(),
        &failures,
        t,
    );
}

#[test]
fn ac10_structural_invariants() {
    let t = Instant::now();
    let mut failures = Vec::new();
    let mut n = 0;
    for a in 0..=10i64 {
        for c in a..=10 {
            n += 1;
            let gf = gf_diag(a, c).unwrap();
            let want = (c - a) as u32;
            if !gf.terms().all(|(m, _)| m.xy_degree() == want) {
                failures.push(format!("gf_diag({a},{c}) is not homogeneous of degree {want}"));
            }
            if gf.swap_xy_invert_q() != gf {
                failures.push(format!("gf_diag({a},{c}) not involution-invariant"));
            }
        }
    }
    report(
        "AC-10",
        "homogeneity (eX+eY = c-a) and X<->Y, q<->q^-1 invariance of gf_diag, 0<=a<=c<=10",
        n,
        &failures,
        t,
    );
}

#[test]
fn ac11_determinant_kernel_agreement() {
    let t = Instant::now();
    let mut matrices: Vec<(EndpointConfig, u32)> = enumerate_configs(3, 6, true)
        .into_iter()
        .flat_map(|cfg| (0..=4u32).map(move |k| (cfg.clone(), k)))
        .collect();
    for (cfg, k) in random_large_configs() {
        matrices.push((cfg.clone(), 0));
        matrices.push((cfg, k));
    }
    let n = matrices.len();
    let failures: Vec<String> = matrices
        .into_par_iter()
        .filter_map(|(cfg, k)| {
            let m = gf_matrix(&cfg, k).unwrap();
            let cof = determinant(&m);
            match determinant_fraction_free(&m) {
                Ok(ff) if ff == cof => None,
                Ok(_) => Some(format!(
                    "kernel mismatch for starts={:?} ends={:?} k={k}",
                    cfg.starts(),
                    cfg.ends()
                )),
                Err(e) => Some(format!(
                    "fraction-free kernel error for starts={:?} ends={:?} k={k}: {e}",
                    cfg.starts(),
                    cfg.ends()
                )),
            }
        })
        .collect();
    report(
        "AC-11",
        "cofactor and fraction-free determinants agree on all AC-5 matrices",
        n,
        &failures,
        t,
    );
}
