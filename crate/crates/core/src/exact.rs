//! Exact rational and Gaussian-rational arithmetic, plus rank computation
//! over the Gaussian rationals.
//!
//! Residues, point sums and matrix entries all live here. Nothing in this
//! crate touches floating point: membership tests like "is this a positive
//! integer" have to be exact to mean anything.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

/// An exact rational number, always in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Largest integer not exceeding `self`.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// The representative of `self` modulo Z lying in `[0, 1)`.
    pub fn fractional_part(&self) -> Self {
        let fl = Rational::from_bigint(self.floor());
        self - &fl
    }

    /// The integer value, if `self` is integral and fits in an `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }
}

/// Free-function form of [`Rational::fractional_part`].
pub fn fractional_part(r: &Rational) -> Rational {
    r.fractional_part()
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || ParseError::Rational(s.to_string());
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(n, d)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        // Accept both "p/q" strings and bare JSON integers.
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Int(n) => Ok(Rational::from_integer(n)),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $trait<&'b $ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: &'b $ty) -> $ty {
                let f: fn(&$ty, &$ty) -> $ty = $body;
                f(self, rhs)
            }
        }
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $trait<&'b $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'b $ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<$ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Rational, Add, add, |a, b| Rational(&a.0 + &b.0));
forward_binop!(Rational, Sub, sub, |a, b| Rational(&a.0 - &b.0));
forward_binop!(Rational, Mul, mul, |a, b| Rational(&a.0 * &b.0));
forward_binop!(Rational, Div, div, |a, b| {
    assert!(!b.is_zero(), "division by zero");
    Rational(&a.0 / &b.0)
});

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// A Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct QComplex {
    pub re: Rational,
    #[serde(default)]
    pub im: Rational,
}

impl QComplex {
    pub fn new(re: Rational, im: Rational) -> Self {
        QComplex { re, im }
    }

    pub fn real(re: Rational) -> Self {
        QComplex {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::real(Rational::new(numer, denom))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::real(Rational::from_integer(n))
    }

    pub fn zero() -> Self {
        QComplex::default()
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn i() -> Self {
        QComplex {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// True iff `self` lies in Z (imaginary part zero, real part integral).
    pub fn is_integer(&self) -> bool {
        self.im.is_zero() && self.re.is_integer()
    }

    /// True iff `self` is a positive integer 1, 2, 3, ...
    pub fn is_positive_integer(&self) -> bool {
        self.is_integer() && self.re.is_positive()
    }

    pub fn conj(&self) -> Self {
        QComplex {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "reciprocal of zero");
        QComplex {
            re: &self.re / &n,
            im: -(&self.im / &n),
        }
    }
}

/// Free-function form of [`QComplex::is_positive_integer`].
pub fn is_positive_integer(z: &QComplex) -> bool {
    z.is_positive_integer()
}

impl fmt::Display for QComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for QComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for QComplex {
    fn from(re: Rational) -> Self {
        QComplex::real(re)
    }
}

impl From<i64> for QComplex {
    fn from(n: i64) -> Self {
        QComplex::from_integer(n)
    }
}

forward_binop!(QComplex, Add, add, |a, b| QComplex {
    re: &a.re + &b.re,
    im: &a.im + &b.im,
});
forward_binop!(QComplex, Sub, sub, |a, b| QComplex {
    re: &a.re - &b.re,
    im: &a.im - &b.im,
});
forward_binop!(QComplex, Mul, mul, |a, b| QComplex {
    re: &a.re * &b.re - &a.im * &b.im,
    im: &a.re * &b.im + &a.im * &b.re,
});
forward_binop!(QComplex, Div, div, |a, b| a * &b.recip());

impl Neg for QComplex {
    type Output = QComplex;
    fn neg(self) -> QComplex {
        QComplex {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &QComplex {
    type Output = QComplex;
    fn neg(self) -> QComplex {
        QComplex {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl AddAssign<&QComplex> for QComplex {
    fn add_assign(&mut self, rhs: &QComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&QComplex> for QComplex {
    fn sub_assign(&mut self, rhs: &QComplex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Sum for QComplex {
    fn sum<I: Iterator<Item = QComplex>>(iter: I) -> Self {
        iter.fold(QComplex::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a QComplex> for QComplex {
    fn sum<I: Iterator<Item = &'a QComplex>>(iter: I) -> Self {
        iter.fold(QComplex::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

/// Dense matrix over the Gaussian rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<QComplex>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![QComplex::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, QComplex::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<QComplex>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &QComplex {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: QComplex) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[QComplex] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(QComplex::is_zero)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[QComplex]) -> Vec<QComplex> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Exact rank, by fraction-free (Bareiss) elimination.
    ///
    /// Each update replaces a row by `(pivot·row − lead·pivot_row) / prev_pivot`,
    /// a nonzero multiple of ordinary Gaussian elimination, so the row space
    /// dimension is unchanged. Over a field the division is exact anyway.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<QComplex>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut prev = QComplex::one();
        let mut rank = 0;
        let mut col = 0;
        while rank < self.rows && col < self.cols {
            let Some(pivot_row) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                col += 1;
                continue;
            };
            a.swap(rank, pivot_row);
            let pivot = a[rank][col].clone();
            let (top, rest) = a.split_at_mut(rank + 1);
            let prow = &top[rank];
            for row in rest.iter_mut() {
                let lead = row[col].clone();
                for c in col + 1..self.cols {
                    let v = (&pivot * &row[c] - &lead * &prow[c]) / &prev;
                    row[c] = v;
                }
                row[col] = QComplex::zero();
            }
            prev = pivot;
            rank += 1;
            col += 1;
        }
        rank
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }
}

/// Free-function form of [`ExactMatrix::rank`].
pub fn rank(m: &ExactMatrix) -> usize {
    m.rank()
}

impl PartialOrd for QComplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on (re, im); only used for canonical ordering, not arithmetic.
impl Ord for QComplex {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.re, &self.im).cmp(&(&other.re, &other.im))
    }
}
