//! Lattice paths with Right and Down steps and their weighted generating
//! functions.
//!
//! A Right step leaving `(a, b)` carries the label `a - 2b` and the weight
//! `w_{a-2b}`; Down steps have weight 1. The generating function of all
//! paths between two points has a closed product form, satisfies a two-term
//! recursion, and specializes on diagonal-to-axis endpoints to the form used
//! by the determinant machinery. Increasing both endpoints by `(k, k)` and
//! `(k, 0)` multiplies the diagonal generating function by an explicit
//! `q`-factor, available in plain and q-Pochhammer form.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Monomial};
use crate::qseries::{step_weight, QPochhammer};
use crate::rational::Rational;

/// A point of the path lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    pub col: i64,
    pub row: i64,
}

impl GridPoint {
    pub fn new(col: i64, row: i64) -> Self {
        GridPoint { col, row }
    }
}

/// Label of the Right step leaving `p`: `col - 2 * row`.
pub fn step_label(p: GridPoint) -> i64 {
    p.col - 2 * p.row
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    /// `(a, b) -> (a + 1, b)`, weight `w_{a-2b}`.
    Right,
    /// `(a, b) -> (a, b - 1)`, weight 1.
    Down,
}

/// A monotone lattice path determined by its start and its step sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub start: GridPoint,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: GridPoint, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    pub fn end(&self) -> GridPoint {
        let mut p = self.start;
        for s in &self.steps {
            match s {
                Step::Right => p.col += 1,
                Step::Down => p.row -= 1,
            }
        }
        p
    }

    /// All visited points, start and end included.
    pub fn points(&self) -> Vec<GridPoint> {
        let mut p = self.start;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            match s {
                Step::Right => p.col += 1,
                Step::Down => p.row -= 1,
            }
            out.push(p);
        }
        out
    }

    /// Labels of the Right steps, in path order.
    pub fn right_step_labels(&self) -> Vec<i64> {
        let mut p = self.start;
        let mut out = Vec::new();
        for s in &self.steps {
            match s {
                Step::Right => {
                    out.push(step_label(p));
                    p.col += 1;
                }
                Step::Down => p.row -= 1,
            }
        }
        out
    }

    /// Product of the step weights over the Right steps.
    pub fn weight(&self) -> LaurentPoly {
        self.right_step_labels()
            .into_iter()
            .fold(LaurentPoly::one(), |acc, l| &acc * &step_weight(l))
    }
}

fn one_minus_q(e: i64) -> LaurentPoly {
    LaurentPoly::from_terms([
        (Monomial::one(), Rational::one()),
        (Monomial::new(0, 0, e), Rational::from(-1i64)),
    ])
}

/// Closed product form of the generating function of all paths from
/// `(a, b)` to `(c, d)`; zero when `a > c` or `b < d`.
pub fn gf_closed(a: i64, b: i64, c: i64, d: i64) -> Result<LaurentPoly> {
    if a > c || b < d {
        return Ok(LaurentPoly::zero());
    }
    let width = c - a;
    let mut xy = LaurentPoly::one();
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for j in 1..=width {
        let factor = LaurentPoly::from_terms([
            (Monomial::new(1, 0, j - 1 - 2 * b + a), Rational::one()),
            (Monomial::new(0, 1, -j + 1 + 2 * d - a), Rational::one()),
        ]);
        xy = &xy * &factor;
        num = &num * &one_minus_q(2 * (b - d) + 2 * j);
        den = &den * &one_minus_q(2 * j);
    }
    let quot = num.exact_div(&den).map_err(|_| Error::InternalNonDivisible)?;
    let scale = Rational::from(2i64).pow(-width);
    Ok((&xy * &quot).scale(&scale))
}

/// The same generating function computed by dynamic programming over the
/// defining recursion; no division is involved.
pub fn gf_recurrence(a: i64, b: i64, c: i64, d: i64) -> LaurentPoly {
    if a > c || b < d {
        return LaurentPoly::zero();
    }
    let width = (c - a) as usize;
    let height = (b - d) as usize;
    // table[ai][bi] = gf(a + ai, d + bi, c, d)
    let mut table = vec![vec![LaurentPoly::zero(); height + 1]; width + 1];
    for ai in (0..=width).rev() {
        let col = a + ai as i64;
        for bi in 0..=height {
            let row = d + bi as i64;
            table[ai][bi] = if col == c {
                LaurentPoly::one()
            } else {
                let right = &step_weight(col - 2 * row) * &table[ai + 1][bi];
                if bi == 0 {
                    right
                } else {
                    &right + &table[ai][bi - 1]
                }
            };
        }
    }
    table[0][height].clone()
}

/// Generating function of paths from `(a, a)` to `(c, 0)`; zero when `c < a`.
pub fn gf_diag(a: i64, c: i64) -> Result<LaurentPoly> {
    if c < a {
        return Ok(LaurentPoly::zero());
    }
    let width = c - a;
    let mut xy = LaurentPoly::one();
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for j in 1..=width {
        let factor = LaurentPoly::from_terms([
            (Monomial::new(1, 0, j - 1), Rational::one()),
            (Monomial::new(0, 1, 1 - j), Rational::one()),
        ]);
        xy = &xy * &factor;
        num = &num * &one_minus_q(2 * a + 2 * j);
        den = &den * &one_minus_q(2 * j);
    }
    let quot = num.exact_div(&den).map_err(|_| Error::InternalNonDivisible)?;
    let scale = Rational::from(2i64).pow(a - c);
    Ok((&xy * &quot).scale(&scale).shift_q((a - c) * a))
}

/// Largest admissible `(c - a) + (b - d)` for [`enumerate_paths`].
pub const MAX_PATH_STEPS: i64 = 26;

/// All monotone paths from `(a, b)` to `(c, d)` with their weights; empty
/// when no path exists.
pub fn enumerate_paths(
    a: i64,
    b: i64,
    c: i64,
    d: i64,
) -> Result<Vec<(LatticePath, LaurentPoly)>> {
    if a > c || b < d {
        return Ok(Vec::new());
    }
    let total = (c - a) + (b - d);
    if total > MAX_PATH_STEPS {
        return Err(Error::TooLarge {
            what: "path steps",
            actual: total as usize,
            limit: MAX_PATH_STEPS as usize,
        });
    }
    let start = GridPoint::new(a, b);
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(total as usize);
    fn walk(
        p: GridPoint,
        c: i64,
        d: i64,
        start: GridPoint,
        steps: &mut Vec<Step>,
        weight: &LaurentPoly,
        out: &mut Vec<(LatticePath, LaurentPoly)>,
    ) {
        if p.col == c && p.row == d {
            out.push((LatticePath::new(start, steps.clone()), weight.clone()));
            return;
        }
        if p.col < c {
            steps.push(Step::Right);
            let w = weight * &step_weight(step_label(p));
            walk(GridPoint::new(p.col + 1, p.row), c, d, start, steps, &w, out);
            steps.pop();
        }
        if p.row > d {
            steps.push(Step::Down);
            walk(GridPoint::new(p.col, p.row - 1), c, d, start, steps, weight, out);
            steps.pop();
        }
    }
    walk(start, c, d, start, &mut steps, &LaurentPoly::one(), &mut out);
    Ok(out)
}

/// The width-shift factor as a pair of polynomials in `q`:
/// `gf_diag(a+k, c+k) * denom = gf_diag(a, c) * numer` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftFactor {
    pub numer: LaurentPoly,
    pub denom: LaurentPoly,
}

/// Plain product form of the shift factor for `0 <= a <= c` and `k >= 0`.
pub fn shift_factor(a: i64, c: i64, k: u32) -> ShiftFactor {
    debug_assert!(0 <= a && a <= c);
    let width = c - a;
    let mut numer = LaurentPoly::one();
    let mut denom = LaurentPoly::one();
    for j in 1..=width {
        numer = &numer * &one_minus_q(2 * a + 2 * k as i64 + 2 * j);
        denom = &denom * &one_minus_q(2 * a + 2 * j);
    }
    ShiftFactor {
        numer,
        denom: denom.shift_q(k as i64 * width),
    }
}

/// The shift factor rewritten as four q-Pochhammer symbols and a `q`-power,
/// kept in symbolic form. Cross-multiplied it agrees exactly with
/// [`shift_factor`]: `numer * denom' = numer' * denom`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochhammerShiftFactor {
    pub a: i64,
    pub c: i64,
    pub k: u32,
    /// Exponent of the `q`-power in the numerator: `k * a`.
    pub numer_q_power: i64,
    /// Exponent of the `q`-power in the denominator: `k * c`.
    pub denom_q_power: i64,
    /// `(q^{2k}; q^2)_{c+1}` and `(q^2; q^2)_a`.
    pub numer_factors: [QPochhammer; 2],
    /// `(q^2; q^2)_c` and `(q^{2k}; q^2)_{a+1}`.
    pub denom_factors: [QPochhammer; 2],
}

/// Builds the Pochhammer form of the shift factor for `0 <= a <= c`, `k >= 0`.
pub fn shift_factor_pochhammer(a: i64, c: i64, k: u32) -> PochhammerShiftFactor {
    assert!(0 <= a && a <= c, "requires 0 <= a <= c");
    let q2 = Monomial::new(0, 0, 2);
    let q2k = Monomial::new(0, 0, 2 * k as i64);
    PochhammerShiftFactor {
        a,
        c,
        k,
        numer_q_power: k as i64 * a,
        denom_q_power: k as i64 * c,
        numer_factors: [
            QPochhammer::new(q2k, q2, (c + 1) as u32),
            QPochhammer::new(q2, q2, a as u32),
        ],
        denom_factors: [
            QPochhammer::new(q2, q2, c as u32),
            QPochhammer::new(q2k, q2, (a + 1) as u32),
        ],
    }
}

impl PochhammerShiftFactor {
    /// Expanded numerator `q^{ka} * (q^{2k}; q^2)_{c+1} * (q^2; q^2)_a`.
    pub fn numer(&self) -> LaurentPoly {
        let prod = &self.numer_factors[0].expand() * &self.numer_factors[1].expand();
        prod.shift_q(self.numer_q_power)
    }

    /// Expanded denominator `q^{kc} * (q^2; q^2)_c * (q^{2k}; q^2)_{a+1}`.
    pub fn denom(&self) -> LaurentPoly {
        let prod = &self.denom_factors[0].expand() * &self.denom_factors[1].expand();
        prod.shift_q(self.denom_q_power)
    }
}

impl fmt::Display for PochhammerShiftFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn side(
            f: &mut fmt::Formatter<'_>,
            power: i64,
            factors: &[QPochhammer; 2],
        ) -> fmt::Result {
            let mut lead = true;
            if power != 0 {
                write!(f, "q^{}", power)?;
                lead = false;
            }
            for sym in factors {
                if !lead {
                    write!(f, " * ")?;
                }
                lead = false;
                write!(f, "{}", sym)?;
            }
            if lead {
                write!(f, "1")?;
            }
            Ok(())
        }
        write!(f, "[")?;
        side(f, self.numer_q_power, &self.numer_factors)?;
        write!(f, "] / [")?;
        side(f, self.denom_q_power, &self.denom_factors)?;
        write!(f, "]")
    }
}
