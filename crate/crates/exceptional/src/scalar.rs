//! Exact arithmetic in ℚ and ℚ(i).
//!
//! `Rational` keeps small values as a pair of machine words and promotes to
//! arbitrary precision only when an intermediate result does not fit. The
//! representation is canonical (lowest terms, positive denominator, small
//! whenever possible), so structural equality is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?} as an exact scalar")]
    Parse(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn fits(v: i128) -> bool {
    v >= -(i64::MAX as i128) && v <= i64::MAX as i128
}

impl Rational {
    pub const ZERO: Rational = Rational::Small(0, 1);
    pub const ONE: Rational = Rational::Small(1, 1);

    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Rational::from_i128(num as i128, den as i128)
    }

    pub fn int(n: i64) -> Rational {
        Rational::new(n, 1)
    }

    fn from_i128(num: i128, den: i128) -> Rational {
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        Rational::reduced_i128(n, d)
    }

    fn reduced_i128(n: i128, d: i128) -> Rational {
        if fits(n) && fits(d) {
            Rational::Small(n as i64, d as i64)
        } else {
            Rational::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))
        }
    }

    pub fn from_big(r: BigRational) -> Rational {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Rational::Small(n, d),
            _ => Rational::Big(Box::new(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small(n, _) => BigInt::from(*n),
            Rational::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small(_, d) => BigInt::from(*d),
            Rational::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(_, d) => *d == 1,
            Rational::Big(b) => b.is_integer(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Rational::Small(n, _) => n.signum() as i32,
            Rational::Big(b) => {
                if b.is_negative() {
                    -1
                } else if b.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Rational::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    pub fn recip(&self) -> Result<Rational, ScalarError> {
        match self {
            Rational::Small(0, _) => Err(ScalarError::DivisionByZero),
            Rational::Small(n, d) => Ok(if *n < 0 {
                Rational::Small(-d, -n)
            } else {
                Rational::Small(*d, *n)
            }),
            Rational::Big(b) => Ok(Rational::from_big(b.recip())),
        }
    }

    pub fn abs(&self) -> Rational {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    fn big_op(&self, other: &Rational, op: impl Fn(BigRational, BigRational) -> BigRational) -> Rational {
        Rational::from_big(op(self.to_big(), other.to_big()))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::int(n)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, other: &Rational) -> Rational {
        match (self, other) {
            (Rational::Small(0, _), _) => other.clone(),
            (_, Rational::Small(0, _)) => self.clone(),
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                let g = b.gcd(d);
                let (b1, d1) = ((b / g) as i128, (d / g) as i128);
                let t = *a as i128 * d1 + *c as i128 * b1;
                let g2 = t.gcd(&(g as i128));
                Rational::reduced_i128(t / g2, b1 * (*d as i128 / g2))
            }
            _ => self.big_op(other, |x, y| x + y),
        }
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, other: &Rational) -> Rational {
        self + &(-other)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, other: &Rational) -> Rational {
        match (self, other) {
            (Rational::Small(0, _), _) | (_, Rational::Small(0, _)) => Rational::ZERO,
            (Rational::Small(1, 1), _) => other.clone(),
            (_, Rational::Small(1, 1)) => self.clone(),
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                let g1 = a.gcd(d);
                let g2 = c.gcd(b);
                let n = (a / g1) as i128 * (c / g2) as i128;
                let m = (b / g2) as i128 * (d / g1) as i128;
                Rational::reduced_i128(n, m)
            }
            _ => self.big_op(other, |x, y| x * y),
        }
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, other: &Rational) -> Rational {
        self * &other.recip().expect("rational division by zero")
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self {
            Rational::Small(n, d) => Rational::Small(-n, *d),
            Rational::Big(b) => Rational::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

macro_rules! owned_ops {
    ($t:ty, $($tr:ident $f:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $f(self, other: $t) -> $t { (&self).$f(&other) }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $f(self, other: &'a $t) -> $t { (&self).$f(other) }
        }
        impl<'a> $tr<$t> for &'a $t {
            type Output = $t;
            fn $f(self, other: $t) -> $t { self.$f(&other) }
        }
    )*};
}

owned_ops!(Rational, Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, other: &Rational) {
        *self = &*self + other;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, other: &Rational) {
        *self = &*self - other;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, other: &Rational) {
        *self = &*self * other;
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Rational::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl FromStr for Rational {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ScalarError::Parse(s.to_string());
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational::from_big(BigRational::new(n, d)))
    }
}

/// An element re + i·im of ℚ(i).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Complex {
    pub re: Rational,
    pub im: Rational,
}

impl Complex {
    pub const ZERO: Complex = Complex { re: Rational::ZERO, im: Rational::ZERO };
    pub const ONE: Complex = Complex { re: Rational::ONE, im: Rational::ZERO };
    pub const I: Complex = Complex { re: Rational::ZERO, im: Rational::ONE };

    pub fn new(re: Rational, im: Rational) -> Complex {
        Complex { re, im }
    }

    pub fn real(re: Rational) -> Complex {
        Complex { re, im: Rational::ZERO }
    }

    pub fn int(n: i64) -> Complex {
        Complex::real(Rational::int(n))
    }

    pub fn frac(n: i64, d: i64) -> Complex {
        Complex::real(Rational::new(n, d))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugation τ.
    pub fn tau(&self) -> Complex {
        Complex { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sq(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn scale(&self, r: &Rational) -> Complex {
        Complex { re: &self.re * r, im: &self.im * r }
    }

    pub fn times_i(&self) -> Complex {
        Complex { re: -&self.im, im: self.re.clone() }
    }

    pub fn inv(&self) -> Result<Complex, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(Complex::real(self.re.recip()?));
        }
        let n = self.norm_sq().recip()?;
        Ok(self.tau().scale(&n))
    }

    pub fn checked_div(&self, other: &Complex) -> Result<Complex, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: u32) -> Complex {
        (0..k).fold(Complex::ONE, |acc, _| &acc * self)
    }
}

impl From<Rational> for Complex {
    fn from(r: Rational) -> Self {
        Complex::real(r)
    }
}

impl From<i64> for Complex {
    fn from(n: i64) -> Self {
        Complex::int(n)
    }
}

impl<'a> Add<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn add(self, o: &Complex) -> Complex {
        Complex { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn sub(self, o: &Complex) -> Complex {
        Complex { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn mul(self, o: &Complex) -> Complex {
        if self.im.is_zero() {
            return o.scale(&self.re);
        }
        if o.im.is_zero() {
            return self.scale(&o.re);
        }
        if self.re.is_zero() && o.re.is_zero() {
            return Complex::real(-(&self.im * &o.im));
        }
        Complex {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }
}

impl<'a> Div<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn div(self, o: &Complex) -> Complex {
        self.checked_div(o).expect("complex division by zero")
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex { re: -&self.re, im: -&self.im }
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        -&self
    }
}

owned_ops!(Complex, Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Complex> for Complex {
    fn add_assign(&mut self, o: &Complex) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&Complex> for Complex {
    fn sub_assign(&mut self, o: &Complex) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&Complex> for Complex {
    fn mul_assign(&mut self, o: &Complex) {
        *self = &*self * o;
    }
}

impl std::iter::Sum for Complex {
    fn sum<I: Iterator<Item = Complex>>(iter: I) -> Complex {
        iter.fold(Complex::ZERO, |acc, x| &acc + &x)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |r: &Rational| -> String {
            if r.is_one() {
                "i".to_string()
            } else {
                format!("{r} i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) if self.im == -Rational::ONE => write!(f, "-i"),
            (true, false) => write!(f, "{}", imag(&self.im)),
            (false, false) if self.im.signum() < 0 => write!(f, "{} - {}", self.re, imag(&-&self.im)),
            (false, false) => write!(f, "{} + {}", self.re, imag(&self.im)),
        }
    }
}

impl FromStr for Complex {
    type Err = ScalarError;

    /// Accepts the rendering grammar: `a/b`, `c/d i`, `i`, `-i`,
    /// `a/b + c/d i`, `a/b - c/d i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ScalarError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        let imag = |part: &str| -> Result<Rational, ScalarError> {
            let body = part.strip_suffix('i').ok_or_else(err)?;
            match body {
                "" | "+" => Ok(Rational::ONE),
                "-" => Ok(-Rational::ONE),
                b => b.parse().map_err(|_| err()),
            }
        };
        if !t.ends_with('i') {
            return Ok(Complex::real(t.parse().map_err(|_| err())?));
        }
        let split = t
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(k, _)| k)
            .last();
        match split {
            Some(k) => {
                let re: Rational = t[..k].parse().map_err(|_| err())?;
                Ok(Complex::new(re, imag(&t[k..])?))
            }
            None => Ok(Complex::new(Rational::ZERO, imag(&t)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn c(a: (i64, i64), b: (i64, i64)) -> Complex {
        Complex::new(q(a.0, a.1), q(b.0, b.1))
    }

    #[test]
    fn norm_of_one_plus_i() {
        let z = c((1, 1), (1, 1));
        assert_eq!(&z * &z.tau(), Complex::int(2));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(c((3, 2), (1, 4)).tau(), c((3, 2), (-1, 4)));
        assert_eq!(Complex::I.tau(), -Complex::I);
        assert_eq!(Complex::int(5).tau(), Complex::int(5));
        assert_eq!(c((2, 1), (3, 1)).tau().tau(), c((2, 1), (3, 1)));
    }

    #[test]
    fn i_to_the_fourth() {
        assert_eq!(Complex::I.pow(4), Complex::ONE);
        assert_eq!(Complex::I.pow(2), -Complex::ONE);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Complex::ONE.checked_div(&Complex::ZERO), Err(ScalarError::DivisionByZero));
        assert_eq!(Rational::ZERO.recip(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn promotion_to_big_and_back() {
        let big = Rational::int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Rational::Big(_)));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back, Rational::Small(..)));
        let tiny = Rational::new(1, i64::MAX);
        let s = &tiny + &Rational::new(1, i64::MAX - 1);
        assert_eq!(s.to_big(), tiny.to_big() + Rational::new(1, i64::MAX - 1).to_big());
    }

    #[test]
    fn rendering_examples() {
        assert_eq!(c((3, 2), (1, 4)).to_string(), "3/2 + 1/4 i");
        assert_eq!(c((3, 2), (-1, 4)).to_string(), "3/2 - 1/4 i");
        assert_eq!(Complex::I.to_string(), "i");
        assert_eq!((-Complex::I).to_string(), "-i");
        assert_eq!(c((0, 1), (-5, 3)).to_string(), "-5/3 i");
        assert_eq!(Complex::frac(-7, 2).to_string(), "-7/2");
        assert_eq!(Complex::ZERO.to_string(), "0");
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..30).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn wide_rational() -> impl Strategy<Value = Rational> {
        (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Rational::new(n.max(-i64::MAX), d))
    }

    fn complex() -> impl Strategy<Value = Complex> {
        (small_rational(), small_rational()).prop_map(|(a, b)| Complex::new(a, b))
    }

    proptest! {
        #[test]
        fn rational_ops_agree_with_bigrational(a in wide_rational(), b in wide_rational()) {
            prop_assert_eq!((&a + &b).to_big(), a.to_big() + b.to_big());
            prop_assert_eq!((&a - &b).to_big(), a.to_big() - b.to_big());
            prop_assert_eq!((&a * &b).to_big(), a.to_big() * b.to_big());
            prop_assert_eq!(a.cmp(&b), a.to_big().cmp(&b.to_big()));
            prop_assert_eq!(Rational::from_big(a.to_big()), a);
        }

        #[test]
        fn tau_is_a_field_involution(z in complex(), w in complex()) {
            prop_assert_eq!((&z * &w).tau(), &z.tau() * &w.tau());
            prop_assert_eq!((&z + &w).tau(), &z.tau() + &w.tau());
            prop_assert_eq!(z.tau().tau(), z.clone());
        }

        #[test]
        fn inverses(z in complex()) {
            prop_assume!(!z.is_zero());
            prop_assert_eq!(&z * &z.inv().unwrap(), Complex::ONE);
        }

        #[test]
        fn field_axioms(a in complex(), b in complex(), c in complex()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn render_parse_roundtrip(z in complex()) {
            let s = z.to_string();
            prop_assert_eq!(s.parse::<Complex>().unwrap(), z);
        }
    }
}
