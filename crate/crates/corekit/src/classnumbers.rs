//! Hurwitz class numbers by reduced-form enumeration, and the closed-form
//! and class-number counts of self-conjugate 2-, 3-, and 7-core
//! partitions. All arithmetic is exact; nothing here touches floats.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;

/// An exact rational, always reduced to lowest terms with a positive
/// denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactRational {
    numerator: i64,
    denominator: i64,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl ExactRational {
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "zero denominator");
        let sign = if denominator < 0 { -1 } else { 1 };
        let g = gcd(numerator, denominator).max(1);
        ExactRational {
            numerator: sign * numerator / g,
            denominator: sign * denominator / g,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        ExactRational {
            numerator: n,
            denominator: 1,
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn is_integer(&self) -> bool {
        self.denominator == 1
    }

    pub fn is_negative(&self) -> bool {
        self.numerator < 0
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_integer().then_some(self.numerator)
    }
}

impl Add for ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: Self) -> Self {
        ExactRational::new(
            self.numerator * rhs.denominator + rhs.numerator * self.denominator,
            self.denominator * rhs.denominator,
        )
    }
}

impl Sub for ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: Self) -> Self {
        ExactRational::new(
            self.numerator * rhs.numerator,
            self.denominator * rhs.denominator,
        )
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> Self {
        ExactRational {
            numerator: -self.numerator,
            denominator: self.denominator,
        }
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// An integral binary quadratic form a x^2 + b xy + c y^2, positive
/// definite with discriminant b^2 - 4ac < 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadraticForm {
    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// |b| <= a <= c, with b >= 0 when |b| = a or a = c.
    pub fn is_reduced(&self) -> bool {
        self.a > 0
            && self.discriminant() < 0
            && self.b.abs() <= self.a
            && self.a <= self.c
            && (self.b >= 0 || (self.b.abs() < self.a && self.a < self.c))
    }
}

/// All reduced positive-definite forms of discriminant -D, one per
/// SL2(Z)-class. Empty unless D = 0 or 3 (mod 4).
pub fn reduced_forms(d: u64) -> Vec<QuadraticForm> {
    let d = d as i64;
    let mut forms = Vec::new();
    if d <= 0 || !matches!(d % 4, 0 | 3) {
        return forms;
    }
    let mut b = d % 2;
    while 3 * b * b <= d {
        let ac4 = b * b + d;
        debug_assert_eq!(ac4 % 4, 0);
        let ac = ac4 / 4;
        let mut a = b.max(1);
        while a * a <= ac {
            if ac % a == 0 {
                let c = ac / a;
                forms.push(QuadraticForm { a, b, c });
                if 0 < b && b < a && a < c {
                    forms.push(QuadraticForm { a, b: -b, c });
                }
            }
            a += 1;
        }
        b += 2;
    }
    forms
}

/// Hurwitz class number H(arg) for a negative rational argument: zero at
/// non-integer rationals, otherwise the reduced-form count of discriminant
/// arg with the x^2 + y^2 class weighted 1/2 and the x^2 + xy + y^2 class
/// weighted 1/3.
pub fn hurwitz(arg: ExactRational) -> Result<ExactRational, Error> {
    if !arg.is_negative() {
        return Err(Error::NonNegativeArgument);
    }
    let Some(neg_d) = arg.as_integer() else {
        return Ok(ExactRational::zero());
    };
    let d = (-neg_d) as u64;
    let mut total = ExactRational::zero();
    for form in reduced_forms(d) {
        let weight = if form.a == form.b && form.b == form.c {
            ExactRational::new(1, 3)
        } else if form.b == 0 && form.a == form.c {
            ExactRational::new(1, 2)
        } else {
            ExactRational::from_integer(1)
        };
        total = total + weight;
    }
    Ok(total)
}

fn hurwitz_int(neg_d: i64) -> Result<ExactRational, Error> {
    hurwitz(ExactRational::from_integer(neg_d))
}

/// sc2(n): 1 iff n is a triangular number k(k+1)/2.
pub fn sc2_count(n: u64) -> u64 {
    let mut k = 1u64;
    while k * (k + 1) / 2 < n {
        k += 1;
    }
    u64::from(k * (k + 1) / 2 == n)
}

/// sc3(n): 1 iff n = r(3r - 2) or n = r(3r + 2) for some r >= 1.
pub fn sc3_count(n: u64) -> u64 {
    let mut r = 1u64;
    while r * (3 * r - 2) <= n {
        if r * (3 * r - 2) == n || r * (3 * r + 2) == n {
            return 1;
        }
        r += 1;
    }
    0
}

/// sc7(n) for odd n with n != 5 (mod 7), by the three-branch class-number
/// formula: H(-28n-56)/4 for n = 1 (mod 4), H(-7n-14)/2 for n = 3 (mod 8),
/// and 0 for n = 7 (mod 8).
pub fn sc7_ono_raji(n: u64) -> Result<u64, Error> {
    if n == 0 || n % 2 == 0 || n % 7 == 5 {
        return Err(Error::PreconditionViolated);
    }
    let n = n as i64;
    let value = if n % 4 == 1 {
        hurwitz_int(-28 * n - 56)? * ExactRational::new(1, 4)
    } else if n % 8 == 3 {
        hurwitz_int(-7 * n - 14)? * ExactRational::new(1, 2)
    } else {
        // n = 7 (mod 8)
        ExactRational::zero()
    };
    rational_to_count(value)
}

/// sc7(n) for any n >= 1, by the four-term Hurwitz combination
/// (H(-28n-56) - H((-4n-8)/7) - 2H(-7n-14) + 2H((-n-2)/7)) / 4.
pub fn sc7_bkm(n: u64) -> Result<u64, Error> {
    if n == 0 {
        return Err(Error::PreconditionViolated);
    }
    let n = n as i64;
    let two = ExactRational::from_integer(2);
    let sum = hurwitz_int(-28 * n - 56)?
        - hurwitz(ExactRational::new(-4 * n - 8, 7))?
        - two * hurwitz_int(-7 * n - 14)?
        + two * hurwitz(ExactRational::new(-n - 2, 7))?;
    rational_to_count(sum * ExactRational::new(1, 4))
}

fn rational_to_count(value: ExactRational) -> Result<u64, Error> {
    match value.as_integer() {
        Some(v) if v >= 0 => Ok(v as u64),
        _ => Err(Error::NonIntegralResult),
    }
}
