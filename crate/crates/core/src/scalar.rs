//! Scalars: exact elements of the quadratic field ℚ(√3) and plain `f64`.
//!
//! Every constant appearing in the structure of the nearly Kähler
//! SL(2,ℝ)×SL(2,ℝ) (the metric ⅔/⅓ weights, the `1/√3` of `J`, the
//! `2/(3√3)` of `G`, the curvature weights) lies in ℚ(√3). Running the same
//! generic code over [`QSqrt3`] turns table checks into identities with zero
//! residual; running it over `f64` gives the numeric pipeline.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_integer::Roots;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

/// Rational numbers used for exact arithmetic.
pub type Rational = Ratio<i128>;

/// Field operations shared by the exact and floating-point modes.
pub trait Scalar:
    Copy
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn sqrt3() -> Self;
    fn to_f64(&self) -> f64;
    fn is_zero(&self) -> bool;

    /// True when the value is exactly representable (exact mode).
    fn is_exact() -> bool;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    /// Magnitude as a float, used for residual reporting.
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn sqrt3() -> Self {
        3f64.sqrt()
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn is_exact() -> bool {
        false
    }
}

/// Exact element `rational + irrational·√3` of ℚ(√3).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct QSqrt3 {
    pub rational: Rational,
    pub irrational: Rational,
}

impl QSqrt3 {
    pub const fn new(rational: Rational, irrational: Rational) -> Self {
        Self {
            rational,
            irrational,
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::new(q, Rational::zero())
    }

    pub fn ratio(num: i128, den: i128) -> Self {
        Self::from_rational(Rational::new(num, den))
    }

    /// `(num/den)·√3`.
    pub fn sqrt3_times(num: i128, den: i128) -> Self {
        Self::new(Rational::zero(), Rational::new(num, den))
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.rational, -self.irrational)
    }

    /// Field norm `a² − 3b²`; zero only for zero since √3 is irrational.
    pub fn norm(&self) -> Rational {
        self.rational * self.rational - Rational::from_integer(3) * self.irrational * self.irrational
    }

    pub fn checked_inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(Self::new(c.rational / n, c.irrational / n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.checked_inv().map(|inv| *self * inv)
    }

    /// Exact sign of the real number `a + b√3`.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.rational);
        let sb = sign(&self.irrational);
        if sa == 0 || sb == 0 || sa == sb {
            return if sa != 0 { sa } else { sb };
        }
        // Opposite signs: compare a² against 3b².
        let a2 = self.rational * self.rational;
        let b2 = Rational::from_integer(3) * self.irrational * self.irrational;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.irrational.is_zero()
    }

    /// Exact conversion of a finite float (every finite `f64` is a dyadic
    /// rational). Returns `None` if it does not fit the `i128` backing.
    pub fn from_f64_exact(x: f64) -> Option<Self> {
        rational_from_f64(x).map(Self::from_rational)
    }

    /// Square root inside ℚ(√3), if one exists. Returns the root with
    /// non-negative real value.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.signum() < 0 {
            return None;
        }
        if self.is_zero() {
            return Some(*self);
        }
        let a = self.rational;
        let b = self.irrational;
        let mut candidates = Vec::new();
        if b.is_zero() {
            if let Some(x) = rational_sqrt(&a) {
                candidates.push(Self::from_rational(x));
            }
            if let Some(y) = rational_sqrt(&(a / Rational::from_integer(3))) {
                candidates.push(Self::new(Rational::zero(), y));
            }
        } else {
            // x² + 3y² = a, 2xy = b  =>  4x⁴ − 4a x² + 3b² = 0.
            let disc = a * a - Rational::from_integer(3) * b * b;
            if let Some(root) = rational_sqrt(&disc) {
                let two = Rational::from_integer(2);
                for x2 in [(a + root) / two, (a - root) / two] {
                    if let Some(x) = rational_sqrt(&x2) {
                        if !x.is_zero() {
                            let y = b / (two * x);
                            candidates.push(Self::new(x, y));
                        }
                    }
                }
            }
        }
        candidates
            .into_iter()
            .find(|c| *c * *c == *self)
            .map(|c| if c.signum() < 0 { -c } else { c })
    }
}

fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = *q.numer();
    let d = *q.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    (rn * rn == n && rd * rd == d).then(|| Rational::new(rn, rd))
}

fn rational_from_f64(x: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    if x == 0.0 {
        return Some(Rational::zero());
    }
    let bits = x.to_bits();
    let negative = bits >> 63 == 1;
    let exp_bits = ((bits >> 52) & 0x7ff) as i32;
    let frac = bits & ((1u64 << 52) - 1);
    let (mantissa, exp) = if exp_bits == 0 {
        (frac as i128, -1074)
    } else {
        ((frac | (1u64 << 52)) as i128, exp_bits - 1075)
    };
    let signed = if negative { -mantissa } else { mantissa };
    if exp >= 0 {
        if exp > 70 {
            return None;
        }
        Some(Rational::from_integer(signed.checked_mul(1i128 << exp)?))
    } else {
        let shift = -exp;
        // Strip common powers of two before building the denominator.
        let tz = (mantissa.trailing_zeros() as i32).min(shift);
        let shift = shift - tz;
        if shift > 125 {
            return None;
        }
        Some(Rational::new(signed >> tz, 1i128 << shift))
    }
}

impl Scalar for QSqrt3 {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }
    fn one() -> Self {
        Self::ratio(1, 1)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Self::ratio(num as i128, den as i128)
    }
    fn sqrt3() -> Self {
        Self::sqrt3_times(1, 1)
    }
    fn to_f64(&self) -> f64 {
        let a = self.rational.to_f64().unwrap_or(f64::NAN);
        let b = self.irrational.to_f64().unwrap_or(f64::NAN);
        a + b * 3f64.sqrt()
    }
    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.irrational.is_zero()
    }
    fn is_exact() -> bool {
        true
    }
}

impl Add for QSqrt3 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.rational + rhs.rational, self.irrational + rhs.irrational)
    }
}

impl Sub for QSqrt3 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.rational - rhs.rational, self.irrational - rhs.irrational)
    }
}

impl Mul for QSqrt3 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let three = Rational::from_integer(3);
        Self::new(
            self.rational * rhs.rational + three * self.irrational * rhs.irrational,
            self.rational * rhs.irrational + self.irrational * rhs.rational,
        )
    }
}

impl Div for QSqrt3 {
    type Output = Self;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by zero in Q(sqrt 3)")
    }
}

impl Neg for QSqrt3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.rational, -self.irrational)
    }
}

impl AddAssign for QSqrt3 {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for QSqrt3 {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for QSqrt3 {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl From<Rational> for QSqrt3 {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

fn fmt_sqrt3_coeff(q: &Rational) -> String {
    let n = *q.numer();
    let d = *q.denom();
    let head = match n {
        1 => "√3".to_string(),
        -1 => "-√3".to_string(),
        _ => format!("{n}√3"),
    };
    if d == 1 {
        head
    } else {
        format!("{head}/{d}")
    }
}

impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.irrational.is_zero()) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) => write!(f, "{}", fmt_sqrt3_coeff(&self.irrational)),
            (false, false) => {
                let b = fmt_sqrt3_coeff(&self.irrational.abs());
                let op = if self.irrational.is_negative() { '-' } else { '+' };
                write!(f, "{} {op} {b}", self.rational)
            }
        }
    }
}

impl fmt::Debug for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSqrt3({self})")
    }
}
