//! Randomized verification suites behind `dentedhex verify`.
//!
//! Every suite draws its cases from a ChaCha generator seeded from the
//! `--seed` flag, so identical flags produce byte-identical output. Case
//! sizes grow with `--max`; failures print the first counterexample found.

use clap::ValueEnum;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dentedhex::lgv::{
    determinant, determinant_fraction_free, gf_matrix, nlp_bruteforce, nlp_gf,
    ratio_identity_check, EndpointConfig, PolyMatrix,
};
use dentedhex::paths::{
    enumerate_paths, gf_closed, gf_diag, gf_recurrence, shift_factor, shift_factor_pochhammer,
};
use dentedhex::poly::{LaurentPoly, Monomial};
use dentedhex::rational::Rational;
use dentedhex::tilings::Region;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Ring,
    Paths,
    Ratio,
    Lgv,
    Tilings,
    All,
}

type CheckFn = fn(&mut ChaCha8Rng, u32) -> Result<usize, String>;

struct SuiteDef {
    id: u64,
    name: &'static str,
    kind: Suite,
    checks: &'static [(&'static str, CheckFn)],
}

const SUITES: &[SuiteDef] = &[
    SuiteDef {
        id: 1,
        name: "ring",
        kind: Suite::Ring,
        checks: &[
            ("ring_axioms", check_ring_axioms),
            ("exact_div_roundtrip", check_exact_div_roundtrip),
            ("evaluate_homomorphism", check_evaluate_homomorphism),
            ("parse_format_roundtrip", check_parse_format_roundtrip),
        ],
    },
    SuiteDef {
        id: 2,
        name: "paths",
        kind: Suite::Paths,
        checks: &[
            ("closed_equals_recurrence", check_closed_equals_recurrence),
            ("closed_equals_enumeration", check_closed_equals_enumeration),
            ("diagonal_specialization", check_diagonal_specialization),
            ("homogeneity_and_involution", check_homogeneity_involution),
            ("shift_factor_contract", check_shift_contract),
        ],
    },
    SuiteDef {
        id: 3,
        name: "ratio",
        kind: Suite::Ratio,
        checks: &[
            ("enumerated_ratio_identity", check_ratio_enumerated),
            ("random_large_ratio_identity", check_ratio_random),
        ],
    },
    SuiteDef {
        id: 4,
        name: "lgv",
        kind: Suite::Lgv,
        checks: &[
            ("determinant_kernel_agreement", check_kernel_agreement),
            ("lgv_equivalence", check_lgv_equivalence),
            ("row_multilinearity", check_multilinearity),
            ("impossible_pairing_is_zero", check_impossible_zero),
        ],
    },
    SuiteDef {
        id: 5,
        name: "tilings",
        kind: Suite::Tilings,
        checks: &[
            ("master_equality_and_bijection", check_master_equality),
            ("vertical_lozenge_count", check_vertical_count),
        ],
    },
];

/// Runs the selected suites; returns true when everything passed.
pub fn run(suite: Suite, max: u32, seed: u64) -> bool {
    let max = max.max(1);
    let mut all_ok = true;
    for def in SUITES {
        if suite != Suite::All && suite != def.kind {
            continue;
        }
        let mut passed = 0;
        let mut cases = 0;
        for (i, (name, f)) in def.checks.iter().enumerate() {
            let mut rng =
                ChaCha8Rng::seed_from_u64(seed ^ (def.id << 48) ^ ((i as u64) << 32));
            match f(&mut rng, max) {
                Ok(n) => {
                    println!("[{}] {:<32} {:>6} cases ok", def.name, name, n);
                    passed += 1;
                    cases += n;
                }
                Err(msg) => {
                    println!("[{}] {:<32} FAILED", def.name, name);
                    println!("    counterexample: {msg}");
                }
            }
        }
        println!(
            "suite {}: {}/{} checks passed ({} cases)",
            def.name,
            passed,
            def.checks.len(),
            cases
        );
        if passed != def.checks.len() {
            all_ok = false;
        }
    }
    if all_ok {
        println!("verify: all checks passed");
    } else {
        println!("verify: FAILED");
    }
    all_ok
}

fn rand_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::ratio(rng.gen_range(-30i128..=30), rng.gen_range(1i128..=6))
}

fn rand_monomial(rng: &mut ChaCha8Rng) -> Monomial {
    Monomial::new(
        rng.gen_range(0..=3),
        rng.gen_range(0..=3),
        rng.gen_range(-5..=5),
    )
}

fn rand_poly(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let terms = rng.gen_range(0..=5);
    LaurentPoly::from_terms((0..terms).map(|_| (rand_monomial(rng), rand_rational(rng))))
}

fn rand_nonzero_poly(rng: &mut ChaCha8Rng) -> LaurentPoly {
    loop {
        let f = rand_poly(rng);
        if !f.is_zero() {
            return f;
        }
    }
}

/// All strictly increasing `size`-tuples from `0..=max_col`.
fn increasing_tuples(max_col: i64, size: usize) -> Vec<Vec<i64>> {
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
    let mut out = Vec::new();
    rec(0, max_col, size, &mut Vec::with_capacity(size), &mut out);
    out
}

fn all_configs(max_n: usize, max_col: i64, dominated_only: bool) -> Vec<EndpointConfig> {
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

fn all_regions(max_x: u32, max_h: u32) -> Vec<Region> {
    let mut out = Vec::new();
    for x in 1..=max_x {
        for h in 0..=max_h {
            let rows: Vec<u32> = (1..=h).collect();
            for lmask in 0u32..(1 << h) {
                let left: Vec<u32> = rows
                    .iter()
                    .filter(|&&r| lmask & (1 << (r - 1)) != 0)
                    .copied()
                    .collect();
                let need = h as usize - left.len();
                for rmask in 0u32..(1 << h) {
                    if rmask.count_ones() as usize != need {
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

fn check_ring_axioms(rng: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let rounds = 25 * max as usize;
    for _ in 0..rounds {
        let f = rand_poly(rng);
        let g = rand_poly(rng);
        let h = rand_poly(rng);
        if &(&f + &g) + &h != &f + &(&g + &h) {
            return Err(format!("addition associativity: f={f}, g={g}, h={h}"));
        }
        if &f + &g != &g + &f {
            return Err(format!("addition commutativity: f={f}, g={g}"));
        }
        if &f * &g != &g * &f {
            return Err(format!("multiplication commutativity: f={f}, g={g}"));
        }
        if &(&f * &g) * &h != &f * &(&g * &h) {
            return Err(format!("multiplication associativity: f={f}, g={g}, h={h}"));
        }
        if &f * &(&g + &h) != &(&f * &g) + &(&f * &h) {
            return Err(format!("distributivity: f={f}, g={g}, h={h}"));
        }
    }
    Ok(rounds)
}

fn check_exact_div_roundtrip(rng: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let rounds = 25 * max as usize;
    for _ in 0..rounds {
        let f = rand_poly(rng);
        let g = rand_nonzero_poly(rng);
        let quotient = (&f * &g)
            .exact_div(&g)
            .map_err(|e| format!("exact_div error for f={f}, g={g}: {e}"))?;
        if quotient != f {
            return Err(format!("(f*g)/g != f for f={f}, g={g}"));
        }
    }
    Ok(rounds)
}

fn check_evaluate_homomorphism(rng: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let rounds = 25 * max as usize;
    for _ in 0..rounds {
        let f = rand_poly(rng);
        let g = rand_poly(rng);
        let q0 = loop {
            let q = rand_rational(rng);
            if !q.is_zero() {
                break q;
            }
        };
        let x0 = rand_rational(rng);
        let y0 = rand_rational(rng);
        let ef = f.evaluate(&q0, &x0, &y0).unwrap();
        let eg = g.evaluate(&q0, &x0, &y0).unwrap();
        if (&f + &g).evaluate(&q0, &x0, &y0).unwrap() != &ef + &eg {
            return Err(format!("eval(f+g) != eval(f)+eval(g) at q={q0}, X={x0}, Y={y0}"));
        }
        if (&f * &g).evaluate(&q0, &x0, &y0).unwrap() != &ef * &eg {
            return Err(format!("eval(f*g) != eval(f)*eval(g) at q={q0}, X={x0}, Y={y0}"));
        }
    }
    Ok(rounds)
}

fn check_parse_format_roundtrip(rng: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let rounds = 25 * max as usize;
    for _ in 0..rounds {
        let f = rand_poly(rng);
        let text = f.to_string();
        let back: LaurentPoly = text
            .parse()
            .map_err(|e| format!("cannot re-parse {text:?}: {e}"))?;
        if back != f {
            return Err(format!("parse(format(f)) != f for f={f}"));
        }
    }
    Ok(rounds)
}

fn check_closed_equals_recurrence(_: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let bound = max.min(8) as i64;
    let mut cases = 0;
    for a in 0..=bound {
        for c in a..=bound {
            for d in 0..=bound {
                for b in d..=bound {
                    cases += 1;
                    if gf_closed(a, b, c, d).unwrap() != gf_recurrence(a, b, c, d) {
                        return Err(format!("gf({a},{b},{c},{d})"));
                    }
                }
            }
        }
    }
    Ok(cases)
}

fn check_closed_equals_enumeration(_: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let extent = max.min(5) as i64;
    let mut cases = 0;
    for a in 0..=2 {
        for w in 0..=extent {
            for d in 0..=2 {
                for ht in 0..=extent {
                    cases += 1;
                    let (b, c) = (d + ht, a + w);
                    let sum = enumerate_paths(a, b, c, d)
                        .unwrap()
                        .into_iter()
                        .fold(LaurentPoly::zero(), |acc, (_, wt)| &acc + &wt);
                    if sum != gf_closed(a, b, c, d).unwrap() {
                        return Err(format!("gf({a},{b},{c},{d})"));
                    }
                }
            }
        }
    }
    Ok(cases)
}

fn check_diagonal_specialization(_: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let bound = (max as i64 + 2).min(10);
    let mut cases = 0;
    for a in 0..=bound {
        for c in a..=bound {
            cases += 1;
            if gf_diag(a, c).unwrap() != gf_closed(a, a, c, 0).unwrap() {
                return Err(format!("gf_diag({a},{c})"));
            }
        }
    }
    Ok(cases)
}

fn check_homogeneity_involution(_: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let bound = (max as i64 + 2).min(10);
    let mut cases = 0;
    for a in 0..=bound {
        for c in a..=bound {
            cases += 1;
            let gf = gf_diag(a, c).unwrap();
            let want = (c - a) as u32;
            if !gf.terms().all(|(m, _)| m.xy_degree() == want) {
                return Err(format!("gf_diag({a},{c}) not homogeneous of degree {want}"));
            }
            if gf.swap_xy_invert_q() != gf {
                return Err(format!("gf_diag({a},{c}) not involution-invariant"));
            }
        }
    }
    Ok(cases)
}

fn check_shift_contract(_: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let bound = max.min(8) as i64;
    let kmax = max.min(5);
    let mut cases = 0;
    for a in 0..=bound {
        for c in a..=bound {
            for k in 0..=kmax {
                cases += 1;
                let shifted = gf_diag(a + k as i64, c + k as i64).unwrap();
                let base = gf_diag(a, c).unwrap();
                let plain = shift_factor(a, c, k);
                let poch = shift_factor_pochhammer(a, c, k);
                if &shifted * &plain.denom != &base * &plain.numer {
                    return Err(format!("plain shift contract at (a={a}, c={c}, k={k})"));
                }
                if &plain.numer * &poch.denom() != &poch.numer() * &plain.denom {
                    return Err(format!("pochhammer form differs at (a={a}, c={c}, k={k})"));
                }
            }
        }
    }
    Ok(cases)
}

fn check_ratio_enumerated(_: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let col = max.min(6) as i64;
    let kmax = max.min(4);
    let mut cases = 0;
    for cfg in all_configs(3, col, true) {
        for k in 0..=kmax {
            cases += 1;
            let check = ratio_identity_check(&cfg, k).map_err(|e| e.to_string())?;
            if !check.holds {
                return Err(format!(
                    "starts={:?} ends={:?} k={k}",
                    cfg.starts(),
                    cfg.ends()
                ));
            }
        }
    }
    Ok(cases)
}

fn check_ratio_random(rng: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let col = (max as i64 + 4).min(10);
    let rounds = 5;
    for _ in 0..rounds {
        let n = rng.gen_range(4..=5usize);
        let mut ends: Vec<i64> = Vec::new();
        while ends.len() < n {
            let c = rng.gen_range(0..=col);
            if !ends.contains(&c) {
                ends.push(c);
            }
        }
        ends.sort_unstable();
        let mut starts = Vec::with_capacity(n);
        let mut prev = -1i64;
        for &c in &ends {
            let a = rng.gen_range(prev + 1..=c);
            starts.push(a);
            prev = a;
        }
        let k = rng.gen_range(0..=4u32);
        let cfg = EndpointConfig::new(starts, ends).unwrap();
        let check = ratio_identity_check(&cfg, k).map_err(|e| e.to_string())?;
        if !check.holds {
            return Err(format!(
                "starts={:?} ends={:?} k={k}",
                cfg.starts(),
                cfg.ends()
            ));
        }
    }
    Ok(rounds)
}

fn check_kernel_agreement(rng: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let rounds = 5 * max as usize;
    for _ in 0..rounds {
        let n = rng.gen_range(0..=3usize);
        let rows: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|_| (0..n).map(|_| rand_poly(rng)).collect())
            .collect();
        let m = PolyMatrix::from_rows(rows);
        let cof = determinant(&m);
        let ff = determinant_fraction_free(&m).map_err(|e| e.to_string())?;
        if cof != ff {
            return Err(format!("kernel mismatch on a random {n}x{n} matrix"));
        }
    }
    Ok(rounds)
}

fn check_lgv_equivalence(_: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let col = max.min(5) as i64;
    let mut cases = 0;
    for cfg in all_configs(3, col, false) {
        cases += 1;
        if nlp_gf(&cfg).unwrap() != nlp_bruteforce(&cfg).unwrap() {
            return Err(format!("starts={:?} ends={:?}", cfg.starts(), cfg.ends()));
        }
    }
    Ok(cases)
}

fn check_multilinearity(rng: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let rounds = 5 * max as usize;
    let configs = all_configs(3, 5, true);
    for _ in 0..rounds {
        let cfg = &configs[rng.gen_range(0..configs.len())];
        if cfg.n() == 0 {
            continue;
        }
        let m = gf_matrix(cfg, rng.gen_range(0..=2)).unwrap();
        let f = rand_nonzero_poly(rng);
        let row = rng.gen_range(0..cfg.n());
        let mut rows = m.rows().to_vec();
        rows[row] = rows[row].iter().map(|e| e * &f).collect();
        let scaled = PolyMatrix::from_rows(rows);
        if determinant(&scaled) != &determinant(&m) * &f {
            return Err(format!(
                "row scaling by {f} on starts={:?} ends={:?}",
                cfg.starts(),
                cfg.ends()
            ));
        }
    }
    Ok(rounds)
}

fn check_impossible_zero(_: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let col = max.min(5) as i64;
    let mut cases = 0;
    for cfg in all_configs(3, col, false) {
        if cfg.is_dominated() {
            continue;
        }
        cases += 1;
        if !nlp_gf(&cfg).unwrap().is_zero() || !nlp_bruteforce(&cfg).unwrap().is_zero() {
            return Err(format!("starts={:?} ends={:?}", cfg.starts(), cfg.ends()));
        }
    }
    Ok(cases)
}

fn check_master_equality(_: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let regions = all_regions(max.min(3), max.min(4));
    let mut cases = 0;
    for r in &regions {
        cases += 1;
        let cfg = r.endpoints();
        if r.gf_tilings().unwrap() != nlp_gf(&cfg).unwrap() {
            return Err(format!("master equality fails for {r}"));
        }
        for t in r.enumerate_tilings().unwrap() {
            let paths = r
                .tiling_to_paths(&t)
                .map_err(|e| format!("{r}: {e}"))?;
            let weight = paths
                .iter()
                .fold(LaurentPoly::one(), |acc, p| &acc * &p.weight());
            if weight != r.tiling_weight(&t) {
                return Err(format!("weight not preserved for a tiling of {r}"));
            }
        }
    }
    Ok(cases)
}

fn check_vertical_count(_: &mut ChaCha8Rng, max: u32) -> Result<usize, String> {
    let regions = all_regions(max.min(3), max.min(4));
    let mut cases = 0;
    for r in &regions {
        let cfg = r.endpoints();
        let want: i64 = cfg
            .starts()
            .iter()
            .zip(cfg.ends())
            .map(|(a, c)| c - a)
            .sum();
        for t in r.enumerate_tilings().unwrap() {
            cases += 1;
            if t.vertical_lozenges().count() as i64 != want {
                return Err(format!("vertical count != sum(c-a) for a tiling of {r}"));
            }
        }
    }
    Ok(cases)
}
