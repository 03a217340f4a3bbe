//! Determinants of path generating functions and nonintersecting families.
//!
//! For starts on the diagonal and ends on the axis, the generating function
//! of all vertex-disjoint path families equals the determinant of the matrix
//! of single-path generating functions. A brute-force family enumerator
//! provides the independent oracle for that equality, and
//! [`ratio_identity_check`] verifies the factored width-shift identity for
//! the determinants, cross-multiplied so that no polynomial division is ever
//! performed.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::paths::{
    enumerate_paths, gf_diag, shift_factor, shift_factor_pochhammer, GridPoint, LatticePath,
    PochhammerShiftFactor,
};
use crate::poly::LaurentPoly;

/// Start columns `a_1 < ... < a_n` (diagonal points `(a_i, a_i)`) and end
/// columns `c_1 < ... < c_n` (axis points `(c_j, 0)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointConfig {
    starts: Vec<i64>,
    ends: Vec<i64>,
}

fn strictly_increasing(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

impl EndpointConfig {
    pub fn new(starts: Vec<i64>, ends: Vec<i64>) -> Result<Self> {
        if starts.len() != ends.len() {
            return Err(Error::InvalidConfig(format!(
                "{} starts but {} ends",
                starts.len(),
                ends.len()
            )));
        }
        if !strictly_increasing(&starts) || !strictly_increasing(&ends) {
            return Err(Error::InvalidConfig(
                "sequences must be strictly increasing".into(),
            ));
        }
        if starts.iter().chain(ends.iter()).any(|&v| v < 0) {
            return Err(Error::InvalidConfig("columns must be nonnegative".into()));
        }
        Ok(EndpointConfig { starts, ends })
    }

    pub fn empty() -> Self {
        EndpointConfig {
            starts: Vec::new(),
            ends: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.starts.len()
    }

    pub fn starts(&self) -> &[i64] {
        &self.starts
    }

    pub fn ends(&self) -> &[i64] {
        &self.ends
    }

    /// True when `a_i <= c_i` for every index.
    pub fn is_dominated(&self) -> bool {
        self.starts.iter().zip(&self.ends).all(|(a, c)| a <= c)
    }
}

/// A square matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    rows: Vec<Vec<LaurentPoly>>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        PolyMatrix { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }
}

/// `M[i][j] = gf_diag(a_i + k, c_j + k)`.
pub fn gf_matrix(cfg: &EndpointConfig, k: u32) -> Result<PolyMatrix> {
    let n = cfg.n();
    let mut rows = Vec::with_capacity(n);
    for &a in cfg.starts() {
        let mut row = Vec::with_capacity(n);
        for &c in cfg.ends() {
            row.push(gf_diag(a + k as i64, c + k as i64)?);
        }
        rows.push(row);
    }
    Ok(PolyMatrix { n, rows })
}

/// Exact determinant by cofactor expansion over column subsets with
/// memoization; division-free. The empty determinant is 1.
pub fn determinant(m: &PolyMatrix) -> LaurentPoly {
    let n = m.n();
    if n == 0 {
        return LaurentPoly::one();
    }
    debug_assert!(n <= 24, "subset memoization needs 2^n tables");
    let full = (1usize << n) - 1;
    let mut dp = vec![LaurentPoly::zero(); 1 << n];
    dp[0] = LaurentPoly::one();
    for mask in 1..=full {
        let row = mask.count_ones() as usize - 1;
        let mut acc = LaurentPoly::zero();
        let mut pos = 0usize;
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let entry = m.entry(row, j);
            if !entry.is_zero() {
                let sub = &dp[mask & !(1 << j)];
                if !sub.is_zero() {
                    let term = entry * sub;
                    if (row + pos).is_multiple_of(2) {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
            }
            pos += 1;
        }
        dp[mask] = acc;
    }
    dp[full].clone()
}

/// Exact determinant by fraction-free (Bareiss) elimination; every division
/// performed is exact inside the polynomial ring. Cross-check kernel for
/// [`determinant`].
pub fn determinant_fraction_free(m: &PolyMatrix) -> Result<LaurentPoly> {
    let n = m.n();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut a = m.rows.clone();
    let mut negated = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&l| !a[l][k].is_zero()) {
                Some(l) => {
                    a.swap(k, l);
                    negated = !negated;
                }
                None => return Ok(LaurentPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .exact_div(&prev)
                    .map_err(|_| Error::InternalNonDivisible)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negated { -det } else { det })
}

/// Generating function of all nonintersecting path families for `cfg`:
/// the determinant of [`gf_matrix`] at shift 0.
pub fn nlp_gf(cfg: &EndpointConfig) -> Result<LaurentPoly> {
    Ok(determinant(&gf_matrix(cfg, 0)?))
}

/// Bound on `n` for the brute-force family enumeration.
pub const MAX_BRUTEFORCE_PATHS: usize = 4;
/// Bound on `max(c)` for the brute-force family enumeration.
pub const MAX_BRUTEFORCE_COLUMN: i64 = 8;

/// All vertex-disjoint families `(P_1, ..., P_n)` with `P_i` running from
/// `(a_i, a_i)` to `(c_i, 0)`.
pub fn nlp_families(cfg: &EndpointConfig) -> Result<Vec<Vec<LatticePath>>> {
    let n = cfg.n();
    if n > MAX_BRUTEFORCE_PATHS {
        return Err(Error::TooLarge {
            what: "endpoint pairs",
            actual: n,
            limit: MAX_BRUTEFORCE_PATHS,
        });
    }
    if let Some(&cmax) = cfg.ends().iter().max() {
        if cmax > MAX_BRUTEFORCE_COLUMN {
            return Err(Error::TooLarge {
                what: "end column",
                actual: cmax as usize,
                limit: MAX_BRUTEFORCE_COLUMN as usize,
            });
        }
    }
    let mut candidates = Vec::with_capacity(n);
    for i in 0..n {
        let (a, c) = (cfg.starts()[i], cfg.ends()[i]);
        let paths: Vec<LatticePath> = enumerate_paths(a, a, c, 0)?
            .into_iter()
            .map(|(p, _)| p)
            .collect();
        candidates.push(paths);
    }

    fn extend(
        i: usize,
        candidates: &[Vec<LatticePath>],
        occupied: &mut HashSet<GridPoint>,
        chosen: &mut Vec<LatticePath>,
        out: &mut Vec<Vec<LatticePath>>,
    ) {
        if i == candidates.len() {
            out.push(chosen.clone());
            return;
        }
        for p in &candidates[i] {
            let pts = p.points();
            if pts.iter().any(|pt| occupied.contains(pt)) {
                continue;
            }
            for pt in &pts {
                occupied.insert(*pt);
            }
            chosen.push(p.clone());
            extend(i + 1, candidates, occupied, chosen, out);
            chosen.pop();
            for pt in &pts {
                occupied.remove(pt);
            }
        }
    }

    let mut out = Vec::new();
    extend(
        0,
        &candidates,
        &mut HashSet::new(),
        &mut Vec::new(),
        &mut out,
    );
    Ok(out)
}

/// Sum of the family weights over [`nlp_families`]; the oracle for [`nlp_gf`].
pub fn nlp_bruteforce(cfg: &EndpointConfig) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero();
    for family in nlp_families(cfg)? {
        let w = family
            .iter()
            .fold(LaurentPoly::one(), |acc, p| &acc * &p.weight());
        acc += &w;
    }
    Ok(acc)
}

/// Outcome of the factored determinant-ratio identity.
#[derive(Clone, Debug)]
pub struct RatioCheck {
    /// Whether `det(M_k) * prod denom_l = det(M_0) * prod numer_l` exactly.
    pub holds: bool,
    /// The per-index shift factors in q-Pochhammer form.
    pub factors: Vec<PochhammerShiftFactor>,
}

/// Verifies the cross-multiplied width-shift identity for the determinants
/// of `cfg` and `cfg` shifted by `k`. Requires `a_i <= c_i` for all `i`.
pub fn ratio_identity_check(cfg: &EndpointConfig, k: u32) -> Result<RatioCheck> {
    if !cfg.is_dominated() {
        return Err(Error::InvalidConfig(
            "requires a_i <= c_i for every index".into(),
        ));
    }
    let det0 = determinant(&gf_matrix(cfg, 0)?);
    let detk = determinant(&gf_matrix(cfg, k)?);
    let mut numer = LaurentPoly::one();
    let mut denom = LaurentPoly::one();
    let mut factors = Vec::with_capacity(cfg.n());
    for (&a, &c) in cfg.starts().iter().zip(cfg.ends()) {
        let sf = shift_factor(a, c, k);
        numer = &numer * &sf.numer;
        denom = &denom * &sf.denom;
        factors.push(shift_factor_pochhammer(a, c, k));
    }
    let holds = &detk * &denom == &det0 * &numer;
    Ok(RatioCheck { holds, factors })
}
