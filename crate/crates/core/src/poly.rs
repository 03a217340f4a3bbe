//! Sparse trivariate Laurent polynomials.
//!
//! A [`LaurentPoly`] is a finite map from monomials `q^eq * X^eX * Y^eY` to
//! nonzero rational coefficients. `eq` may be any integer, while `eX` and
//! `eY` are nonnegative: every object in this crate is polynomial in `X`, `Y`
//! and Laurent only in `q`. Polynomials are always held in canonical form
//! (terms sorted by the canonical monomial order, no zero coefficients), so
//! structural equality is ring equality.
//!
//! The canonical monomial order is lexicographic on `(eX, eY, eq)`. It is a
//! translation-invariant total order, which makes leading terms multiplicative
//! and exact division well defined.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::rational::Rational;

const XY_BITS: u32 = 12;
const Q_BITS: u32 = 40;
const Y_SHIFT: u32 = Q_BITS;
const X_SHIFT: u32 = Q_BITS + XY_BITS;
const XY_MASK: u64 = (1 << XY_BITS) - 1;
const Q_MASK: u64 = (1 << Q_BITS) - 1;
const Q_OFFSET: i64 = 1 << 39;

/// Largest representable exponent of `X` or `Y`.
pub const MAX_XY_EXPONENT: u32 = (1 << XY_BITS) - 1;
/// Largest representable absolute exponent of `q`.
pub const MAX_Q_EXPONENT: i64 = 1 << 38;

/// A monomial `q^eq * X^eX * Y^eY` with `eX, eY >= 0`.
///
/// Packed into a single word so that the derived `Ord` is exactly the
/// canonical lexicographic order on `(eX, eY, eq)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(u64);

impl Monomial {
    /// Builds `X^x * Y^y * q^q`. Panics when an exponent is out of range.
    pub fn new(x: u32, y: u32, q: i64) -> Self {
        assert!(
            x <= MAX_XY_EXPONENT && y <= MAX_XY_EXPONENT,
            "X/Y exponent out of range: ({}, {})",
            x,
            y
        );
        assert!(q.abs() <= MAX_Q_EXPONENT, "q exponent out of range: {}", q);
        Monomial(((x as u64) << X_SHIFT) | ((y as u64) << Y_SHIFT) | ((q + Q_OFFSET) as u64))
    }

    pub fn one() -> Self {
        Self::new(0, 0, 0)
    }

    pub fn x_exp(&self) -> u32 {
        ((self.0 >> X_SHIFT) & XY_MASK) as u32
    }

    pub fn y_exp(&self) -> u32 {
        ((self.0 >> Y_SHIFT) & XY_MASK) as u32
    }

    pub fn q_exp(&self) -> i64 {
        (self.0 & Q_MASK) as i64 - Q_OFFSET
    }

    /// Total degree in `X` and `Y`.
    pub fn xy_degree(&self) -> u32 {
        self.x_exp() + self.y_exp()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial::new(
            self.x_exp() + rhs.x_exp(),
            self.y_exp() + rhs.y_exp(),
            self.q_exp() + rhs.q_exp(),
        )
    }

    /// `self / rhs` when the quotient stays inside the ring (`eX, eY >= 0`).
    pub fn try_div(&self, rhs: &Monomial) -> Option<Monomial> {
        let x = self.x_exp().checked_sub(rhs.x_exp())?;
        let y = self.y_exp().checked_sub(rhs.y_exp())?;
        Some(Monomial::new(x, y, self.q_exp() - rhs.q_exp()))
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial::new(
            self.x_exp() * n,
            self.y_exp() * n,
            self.q_exp() * n as i64,
        )
    }

    /// The image under `X <-> Y`, `q -> q^-1`.
    pub fn swap_xy_invert_q(&self) -> Monomial {
        Monomial::new(self.y_exp(), self.x_exp(), -self.q_exp())
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "X^{}*Y^{}*q^{}", self.x_exp(), self.y_exp(), self.q_exp())
    }
}

/// A sparse Laurent polynomial in `q`, `X`, `Y` over the rationals.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    /// Strictly ascending in the canonical monomial order, no zero coefficients.
    terms: Vec<(Monomial, Rational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::scalar(Rational::from(n))
    }

    /// The single-term polynomial `c * m`; zero if `c` is zero.
    pub fn term(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    /// The variable `X`.
    pub fn x() -> Self {
        Self::monomial(Monomial::new(1, 0, 0))
    }

    /// The variable `Y`.
    pub fn y() -> Self {
        Self::monomial(Monomial::new(0, 1, 0))
    }

    /// The power `q^k` (any integer `k`).
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(Monomial::new(0, 0, k))
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs,
    /// combining duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in iter {
            if c.is_zero() {
                continue;
            }
            match map.entry(m) {
                Entry::Occupied(mut e) => {
                    let v = e.get() + &c;
                    if v.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = v;
                    }
                }
                Entry::Vacant(e) => {
                    e.insert(c);
                }
            }
        }
        LaurentPoly {
            terms: map.into_iter().collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    /// The coefficient of `m` (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(tm, _)| tm.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Largest term in the canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last().map(|(m, c)| (m, c))
    }

    /// Smallest `q`-exponent over all terms; `0` for the zero polynomial.
    pub fn min_q_exp(&self) -> i64 {
        self.terms.iter().map(|(m, _)| m.q_exp()).min().unwrap_or(0)
    }

    /// Largest total `X`,`Y` degree over all terms; `None` for zero.
    pub fn max_xy_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.xy_degree()).max()
    }

    fn merge_add(a: Vec<(Monomial, Rational)>, b: Vec<(Monomial, Rational)>) -> Vec<(Monomial, Rational)> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut ia = a.into_iter().peekable();
        let mut ib = b.into_iter().peekable();
        loop {
            match (ia.peek(), ib.peek()) {
                (Some((ma, _)), Some((mb, _))) => {
                    if ma < mb {
                        out.push(ia.next().unwrap());
                    } else if mb < ma {
                        out.push(ib.next().unwrap());
                    } else {
                        let (m, ca) = ia.next().unwrap();
                        let (_, cb) = ib.next().unwrap();
                        let c = &ca + &cb;
                        if !c.is_zero() {
                            out.push((m, c));
                        }
                    }
                }
                (Some(_), None) => {
                    out.extend(ia);
                    break;
                }
                (None, _) => {
                    out.extend(ib);
                    break;
                }
            }
        }
        out
    }

    /// `self * (c * m)` in one pass; term order is preserved under the shift.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.mul_term(&Monomial::one(), c)
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        self.mul_term(&Monomial::new(0, 0, k), &Rational::one())
    }

    /// The image under the involution `X <-> Y`, `q -> q^-1`.
    pub fn swap_xy_invert_q(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.swap_xy_invert_q(), c.clone())),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut sq = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        result
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Both operands are shifted by a `q`-power so all `q`-exponents become
    /// nonnegative; leading-term elimination under the canonical order then
    /// terminates, and any step whose quotient monomial falls outside the
    /// ring proves non-divisibility.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let f_shift = self.min_q_exp();
        let g_shift = divisor.min_q_exp();
        let f = self.shift_q(-f_shift);
        let g = divisor.shift_q(-g_shift);
        let (g_lead_m, g_lead_c) = {
            let (m, c) = g.leading_term().unwrap();
            (*m, c.clone())
        };
        let g_tail: Vec<(Monomial, Rational)> = g.terms[..g.terms.len() - 1].to_vec();

        let mut rem: BTreeMap<Monomial, Rational> = f.terms.into_iter().collect();
        let mut quotient: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((rm, rc)) = rem.pop_last() {
            let tm = match rm.try_div(&g_lead_m) {
                Some(t) if t.q_exp() >= 0 => t,
                _ => return Err(Error::NotDivisible),
            };
            let tc = &rc / &g_lead_c;
            for (gm, gc) in &g_tail {
                let key = gm.mul(&tm);
                let delta = -&(&tc * gc);
                match rem.entry(key) {
                    Entry::Occupied(mut e) => {
                        let v = e.get() + &delta;
                        if v.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = v;
                        }
                    }
                    Entry::Vacant(e) => {
                        e.insert(delta);
                    }
                }
            }
            quotient.push((tm, tc));
        }
        quotient.reverse();
        debug_assert!(quotient.windows(2).all(|w| w[0].0 < w[1].0));
        Ok(LaurentPoly { terms: quotient }.shift_q(f_shift - g_shift))
    }

    /// Exact value at a rational point. `q0 = 0` is only legal when no term
    /// carries a negative `q`-exponent.
    pub fn evaluate(&self, q0: &Rational, x0: &Rational, y0: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let qe = m.q_exp();
            if q0.is_zero() && qe < 0 {
                return Err(Error::EvalAtZero);
            }
            let q_part = if qe == 0 {
                Rational::one()
            } else if q0.is_zero() {
                // positive exponent of zero
                continue;
            } else {
                q0.pow(qe)
            };
            let x_part = if m.x_exp() == 0 {
                Rational::one()
            } else if x0.is_zero() {
                continue;
            } else {
                x0.pow(m.x_exp() as i64)
            };
            let y_part = if m.y_exp() == 0 {
                Rational::one()
            } else if y0.is_zero() {
                continue;
            } else {
                y0.pow(m.y_exp() as i64)
            };
            acc += &(&(&q_part * &x_part) * &(&y_part * c));
        }
        Ok(acc)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        LaurentPoly {
            terms: LaurentPoly::merge_add(self.terms.clone(), rhs.terms.clone()),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        LaurentPoly {
            terms: LaurentPoly::merge_add(self.terms.clone(), (-rhs).terms),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(m, c);
        }
        // One shifted copy of `large` per term of `small`, folded together by
        // size-balanced merging. Shifting preserves sortedness, so every merge
        // is a linear pass.
        let mut stack: Vec<Vec<(Monomial, Rational)>> = Vec::new();
        for (m, c) in &small.terms {
            let shifted: Vec<(Monomial, Rational)> = large
                .terms
                .iter()
                .map(|(lm, lc)| (lm.mul(m), lc * c))
                .collect();
            stack.push(shifted);
            while stack.len() >= 2 && stack[stack.len() - 2].len() <= stack[stack.len() - 1].len()
            {
                let b = stack.pop().unwrap();
                let a = stack.pop().unwrap();
                stack.push(LaurentPoly::merge_add(a, b));
            }
        }
        let mut acc = stack.pop().unwrap_or_default();
        while let Some(next) = stack.pop() {
            acc = LaurentPoly::merge_add(next, acc);
        }
        LaurentPoly { terms: acc }
    }
}

macro_rules! forward_poly_binop {
    ($Op:ident, $op:ident, $OpAssign:ident, $op_assign:ident) => {
        impl $Op for LaurentPoly {
            type Output = LaurentPoly;
            fn $op(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$op(&rhs)
            }
        }
        impl $Op<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $op(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$op(rhs)
            }
        }
        impl $OpAssign<&LaurentPoly> for LaurentPoly {
            fn $op_assign(&mut self, rhs: &LaurentPoly) {
                *self = (&*self).$op(rhs);
            }
        }
    };
}

forward_poly_binop!(Add, add, AddAssign, add_assign);
forward_poly_binop!(Sub, sub, SubAssign, sub_assign);
forward_poly_binop!(Mul, mul, MulAssign, mul_assign);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::step_weight;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn monomial_order_is_lex_on_x_y_q() {
        let x = Monomial::new(1, 0, 0);
        let y = Monomial::new(0, 1, 0);
        let q = Monomial::new(0, 0, 1);
        let qinv = Monomial::new(0, 0, -1);
        assert!(y < x);
        assert!(q < y);
        assert!(qinv < q);
        assert!(Monomial::new(0, 0, -100) < Monomial::new(0, 0, 0));
        assert!(Monomial::new(1, 3, -5) < Monomial::new(2, 0, -9));
    }

    #[test]
    fn add_disjoint_and_cancelling() {
        let x = LaurentPoly::x();
        let y = LaurentPoly::y();
        assert_eq!(&x + &y, poly("X + Y"));
        let sum = &(&x + &y) + &(-&x);
        assert_eq!(sum, y);
    }

    #[test]
    fn doubled_weights_sum() {
        // 2*w_1 + 2*w_{-1} = (q + q^-1) * (X + Y)
        let two = Rational::from(2i64);
        let lhs = &step_weight(1).scale(&two) + &step_weight(-1).scale(&two);
        let rhs = &(&LaurentPoly::q_pow(1) + &LaurentPoly::q_pow(-1)) * &poly("X + Y");
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&poly("X + Y") * &poly("X - Y"), poly("X^2 - Y^2"));
        let f = poly("1/3*X*q^-2 + 7*Y^3");
        assert_eq!(&LaurentPoly::one() * &f, f);
        assert_eq!(&poly("1 - q^2") * &poly("1 + q^2"), poly("1 - q^4"));
    }

    #[test]
    fn exact_div_examples() {
        let q = |s: &str| poly(s);
        assert_eq!(
            q("1 - q^4").exact_div(&q("1 - q^2")).unwrap(),
            q("1 + q^2")
        );
        assert_eq!(
            q("X^2 - Y^2").exact_div(&q("X + Y")).unwrap(),
            q("X - Y")
        );
        assert_eq!(
            q("X + Y").exact_div(&q("1 - q^2")),
            Err(Error::NotDivisible)
        );
        assert_eq!(
            q("X + Y").exact_div(&LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
        // Laurent shift: (q^-1 - q) / (1 - q^2) = q^-1
        assert_eq!(
            q("q^-1 - q").exact_div(&q("1 - q^2")).unwrap(),
            q("q^-1")
        );
        assert_eq!(q("1").exact_div(&q("1 - q")), Err(Error::NotDivisible));
    }

    #[test]
    fn evaluate_examples() {
        let one = Rational::one();
        let f = poly("X + Y");
        assert_eq!(
            f.evaluate(&one, &one, &one).unwrap(),
            Rational::from(2i64)
        );
        let g = poly("q^-1");
        assert_eq!(
            g.evaluate(&Rational::ratio(1, 2), &one, &one).unwrap(),
            Rational::from(2i64)
        );
        let w0 = step_weight(0);
        assert_eq!(w0.evaluate(&one, &one, &one).unwrap(), Rational::one());
        assert_eq!(
            g.evaluate(&Rational::zero(), &one, &one),
            Err(Error::EvalAtZero)
        );
        // q^2 at q = 0 vanishes instead of erroring
        assert_eq!(
            poly("1 + q^2").evaluate(&Rational::zero(), &one, &one).unwrap(),
            Rational::one()
        );
    }

    #[test]
    fn involution_swaps_x_y_and_inverts_q() {
        let f = poly("1/2*X*q + 1/2*Y*q^-1");
        assert_eq!(f.swap_xy_invert_q(), f);
        let g = poly("X*q^2");
        assert_eq!(g.swap_xy_invert_q(), poly("Y*q^-2"));
    }

    #[test]
    fn pow_binomial() {
        let f = poly("1 + X");
        assert_eq!(f.pow(3), poly("1 + 3*X + 3*X^2 + X^3"));
        assert_eq!(f.pow(0), LaurentPoly::one());
    }
}
