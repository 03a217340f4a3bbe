//! Exact arbitrary-precision rational numbers.
//!
//! [`Rational`] is the coefficient field for every polynomial in this crate.
//! Values are kept in canonical form at all times: numerator and denominator
//! coprime, denominator positive, zero stored as `0/1`. Small values live in
//! a pair of `i128` machine words; anything that does not fit spills into a
//! heap-allocated [`BigRational`], so arithmetic is exact at every size.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    /// Reduced fraction, denominator > 0. Never `i128::MIN` in either slot.
    Small(i128, i128),
    /// Canonical only for values outside the small range.
    Big(Box<BigRational>),
}

/// An exact rational number in canonical form.
#[derive(Clone, PartialEq, Eq)]
pub struct Rational(Repr);

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// gcd of absolute values; both inputs must be > i128::MIN.
fn gcd_i128(a: i128, b: i128) -> i128 {
    gcd_u128(a.unsigned_abs(), b.unsigned_abs()) as i128
}

impl Rational {
    fn from_small(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == i128::MIN || den == i128::MIN {
            return Self::from_big(BigRational::new(BigInt::from(num), BigInt::from(den)));
        }
        if num == 0 {
            return Rational(Repr::Small(0, 1));
        }
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd_i128(num, den);
        Rational(Repr::Small(num / g, den / g))
    }

    fn from_big(value: BigRational) -> Self {
        // BigRational::new already reduces and fixes the sign.
        if let (Some(n), Some(d)) = (value.numer().to_i128(), value.denom().to_i128()) {
            if n != i128::MIN && d != i128::MIN {
                return Rational(Repr::Small(n, d));
            }
        }
        Rational(Repr::Big(Box::new(value)))
    }

    /// Wraps an already reduced, positive-denominator pair, routing the one
    /// unrepresentable value (`i128::MIN`, whose negation overflows) to the
    /// big representation.
    fn small_reduced(n: i128, d: i128) -> Self {
        if n == i128::MIN || d == i128::MIN {
            Self::from_big(BigRational::new(BigInt::from(n), BigInt::from(d)))
        } else {
            Rational(Repr::Small(n, d))
        }
    }

    /// Builds `numer/denom` in canonical form. Panics if `denom` is zero.
    pub fn new(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "Rational::new: zero denominator");
        Self::from_big(BigRational::new(numer, denom))
    }

    /// Builds `n/d` from machine integers. Panics if `d` is zero.
    pub fn ratio(n: i128, d: i128) -> Self {
        assert!(d != 0, "Rational::ratio: zero denominator");
        Self::from_small(n, d)
    }

    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.numer().is_negative(),
        }
    }

    /// True when the value is 1 or -1.
    pub fn is_unit_magnitude(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1) | Repr::Small(-1, 1))
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => (**r).clone(),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "Rational::recip of zero");
        match &self.0 {
            Repr::Small(n, d) => Self::from_small(*d, *n),
            Repr::Big(r) => Self::from_big(r.recip()),
        }
    }

    /// Integer power. Raising zero to a negative power panics.
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Rational::one();
        }
        let base = if exp < 0 { self.recip() } else { self.clone() };
        let mut result = Rational::one();
        let mut sq = base;
        let mut e = exp.unsigned_abs();
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

    fn add_impl(&self, rhs: &Rational, subtract: bool) -> Rational {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            let (a, b, d) = (*a, *b, *d);
            let c = if subtract { -*c } else { *c };
            let g = gcd_i128(b, d);
            let small = if g == 1 {
                // gcd(b, d) = 1 makes a*d + c*b already coprime to b*d.
                match (
                    a.checked_mul(d),
                    c.checked_mul(b),
                    b.checked_mul(d),
                ) {
                    (Some(ad), Some(cb), Some(bd)) => {
                        ad.checked_add(cb).map(|n| Self::small_reduced(n, bd))
                    }
                    _ => None,
                }
            } else {
                match (a.checked_mul(d / g), c.checked_mul(b / g)) {
                    (Some(adg), Some(cbg)) => adg.checked_add(cbg).and_then(|t| {
                        let g2 = gcd_i128(t, g);
                        (b / g).checked_mul(d / g2).map(|den| {
                            if t == 0 {
                                Rational(Repr::Small(0, 1))
                            } else {
                                Self::small_reduced(t / g2, den)
                            }
                        })
                    }),
                    _ => None,
                }
            };
            if let Some(r) = small {
                return r;
            }
        }
        let rb = rhs.to_big();
        let rb = if subtract { -rb } else { rb };
        Self::from_big(self.to_big() + rb)
    }

    fn mul_impl(&self, rhs: &Rational) -> Rational {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            if *a == 0 || *c == 0 {
                return Rational::zero();
            }
            // Cross-reduce first so the product is already in lowest terms.
            let g1 = gcd_i128(*a, *d);
            let g2 = gcd_i128(*c, *b);
            if let (Some(n), Some(den)) =
                ((a / g1).checked_mul(c / g2), (b / g2).checked_mul(d / g1))
            {
                return Self::small_reduced(n, den);
            }
        }
        Self::from_big(self.to_big() * rhs.to_big())
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational(Repr::Small(v as i128, 1))
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Self {
        Rational(Repr::Small(v as i128, 1))
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Self::from_big(BigRational::from_integer(v))
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-n, *d)),
            Repr::Big(r) => Rational::from_big(-(**r).clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: Self) -> Rational {
        self.add_impl(rhs, false)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: Self) -> Rational {
        self.add_impl(rhs, true)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: Self) -> Rational {
        self.mul_impl(rhs)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: Self) -> Rational {
        assert!(!rhs.is_zero(), "Rational division by zero");
        self.mul_impl(&rhs.recip())
    }
}

macro_rules! forward_owned_binop {
    ($Op:ident, $op:ident, $OpAssign:ident, $op_assign:ident) => {
        impl $Op for Rational {
            type Output = Rational;
            fn $op(self, rhs: Rational) -> Rational {
                (&self).$op(&rhs)
            }
        }
        impl $Op<&Rational> for Rational {
            type Output = Rational;
            fn $op(self, rhs: &Rational) -> Rational {
                (&self).$op(rhs)
            }
        }
        impl $OpAssign<&Rational> for Rational {
            fn $op_assign(&mut self, rhs: &Rational) {
                *self = (&*self).$op(rhs);
            }
        }
    };
}

forward_owned_binop!(Add, add, AddAssign, add_assign);
forward_owned_binop!(Sub, sub, SubAssign, sub_assign);
forward_owned_binop!(Mul, mul, MulAssign, mul_assign);

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{}", n),
            Repr::Small(n, d) => write!(f, "{}/{}", n, d),
            Repr::Big(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
