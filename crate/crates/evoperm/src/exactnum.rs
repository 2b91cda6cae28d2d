//! Exact rational arithmetic and exact linear algebra.
//!
//! Everything here is exact: determinants and ranks are computed with
//! fraction-free (Bareiss) elimination over big integers, so sign and
//! zero tests are decisions, not approximations. Square roots of
//! nonnegative rationals are kept symbolically as `c·sqrt(r)` with a
//! square-free radicand.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest exponent magnitude accepted in decimal input like `1.5e12`.
/// Beyond this the exact expansion would be absurdly large.
const MAX_DECIMAL_EXPONENT: i64 = 4096;

/// Trial-division bound for square-free normalization. Below
/// `TRIAL_BOUND^3` the decomposition is guaranteed complete; beyond it a
/// perfect-square cofactor is still extracted and the rest is kept as-is.
const TRIAL_BOUND: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("expected {expected} columns, got {got}")]
    WrongColumnCount { expected: usize, got: usize },
    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRow { row: usize, got: usize, expected: usize },
    #[error("stated rank {stated} but matrix has rank {actual}")]
    RankMismatch { stated: usize, actual: usize },
    #[error("square root of negative rational {0}")]
    NegativeRadicand(Rational),
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("decimal exponent out of range in {0:?} (|exp| <= {MAX_DECIMAL_EXPONENT})")]
    ExponentOutOfRange(String),
}

/// An exact rational number, always in lowest terms with positive
/// denominator. Serialized as `"p/q"` (or `"p"` when the denominator
/// is 1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
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

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.denom().is_one()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Best-effort conversion; exact values far outside f64 range clamp
    /// to infinities.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            if self.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

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

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p`, `p/q` and finite decimals (`-1.25`, `3.5e-2`), all
    /// converted exactly.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        if let Some((num, den)) = s.split_once('/') {
            let num: BigInt = num
                .trim()
                .parse()
                .map_err(|_| ParseRationalError::Malformed(s.to_string()))?;
            let den: BigInt = den
                .trim()
                .parse()
                .map_err(|_| ParseRationalError::Malformed(s.to_string()))?;
            if den.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            return Ok(Rational(BigRational::new(num, den)));
        }
        if s.contains(['.', 'e', 'E']) {
            return parse_decimal(s);
        }
        let n: BigInt = s
            .parse()
            .map_err(|_| ParseRationalError::Malformed(s.to_string()))?;
        Ok(Rational(BigRational::from_integer(n)))
    }
}

fn parse_decimal(s: &str) -> Result<Rational, ParseRationalError> {
    let malformed = || ParseRationalError::Malformed(s.to_string());
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i64 = e.parse().map_err(|_| malformed())?;
            (m, exp)
        }
        None => (s, 0),
    };
    if exp.abs() > MAX_DECIMAL_EXPONENT {
        return Err(ParseRationalError::ExponentOutOfRange(s.to_string()));
    }
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(malformed());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(malformed());
    }
    if frac_part.len() as i64 > MAX_DECIMAL_EXPONENT {
        return Err(ParseRationalError::ExponentOutOfRange(s.to_string()));
    }
    let mut numer: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part.parse().map_err(|_| malformed())?
    };
    let ten = BigInt::from(10);
    for c in frac_part.chars() {
        numer = &numer * &ten + BigInt::from(c.to_digit(10).unwrap());
    }
    let scale = exp - frac_part.len() as i64;
    let mut value = BigRational::from_integer(numer * BigInt::from(sign));
    if scale > 0 {
        value *= BigRational::from_integer(ten.pow(scale as u32));
    } else if scale < 0 {
        value /= BigRational::from_integer(ten.pow((-scale) as u32));
    }
    Ok(Rational(value))
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `coefficient · sqrt(radicand)` with the radicand normalized to a
/// square-free nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SqrtRational {
    pub coefficient: Rational,
    pub radicand: Rational,
}

impl SqrtRational {
    pub fn one() -> Self {
        SqrtRational {
            coefficient: Rational::one(),
            radicand: Rational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    /// The represented value squared, exact.
    pub fn square(&self) -> Rational {
        &(&self.coefficient * &self.coefficient) * &self.radicand
    }

    pub fn to_f64(&self) -> f64 {
        self.coefficient.to_f64() * self.radicand.to_f64().sqrt()
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_integer() && self.radicand == Rational::one() {
            write!(f, "{}", self.coefficient)
        } else {
            write!(f, "{}·sqrt({})", self.coefficient, self.radicand)
        }
    }
}

impl FromStr for SqrtRational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_radicand = |r: &str| -> Result<Rational, ParseRationalError> {
            let inner = r
                .strip_prefix("sqrt(")
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| ParseRationalError::Malformed(s.to_string()))?;
            inner.parse()
        };
        if let Some((coeff, rad)) = s.split_once('·') {
            Ok(SqrtRational {
                coefficient: coeff.parse()?,
                radicand: parse_radicand(rad)?,
            })
        } else if s.starts_with("sqrt(") {
            Ok(SqrtRational {
                coefficient: Rational::one(),
                radicand: parse_radicand(s)?,
            })
        } else {
            Ok(SqrtRational {
                coefficient: s.parse()?,
                radicand: Rational::one(),
            })
        }
    }
}

impl Serialize for SqrtRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SqrtRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `sqrt(v)` as `c·sqrt(f)` with `f` a square-free integer.
pub fn sqrt_normalize(v: &Rational) -> Result<SqrtRational, ExactError> {
    if v.is_negative() {
        return Err(ExactError::NegativeRadicand(v.clone()));
    }
    if v.is_zero() {
        return Ok(SqrtRational {
            coefficient: Rational::zero(),
            radicand: Rational::one(),
        });
    }
    // sqrt(p/q) = sqrt(p*q)/q
    let p = v.numer().magnitude().clone();
    let q = v.denom().magnitude().clone();
    let (root, free) = square_free_decompose(&p * &q);
    let coefficient = Rational::from_big(
        BigInt::from_biguint(Sign::Plus, root),
        v.denom().clone(),
    )
    .expect("denominator nonzero");
    Ok(SqrtRational {
        coefficient,
        radicand: Rational(BigRational::from_integer(BigInt::from_biguint(
            Sign::Plus,
            free,
        ))),
    })
}

/// m = root^2 * free with free square-free (guaranteed while the
/// remaining cofactor stays below TRIAL_BOUND^3; see constant note).
fn square_free_decompose(m: BigUint) -> (BigUint, BigUint) {
    use num_traits::ToPrimitive;

    let mut rem = m;
    let mut root = BigUint::one();
    let mut free = BigUint::one();
    let cbrt_bound =
        |v: &BigUint| -> u64 { v.cbrt().to_u64().unwrap_or(TRIAL_BOUND).min(TRIAL_BOUND) };
    let mut bound = cbrt_bound(&rem);
    let mut d: u64 = 2;
    while d <= bound {
        if (&rem % d).is_zero() {
            let big_d = BigUint::from(d);
            let mut mult = 0u32;
            while (&rem % d).is_zero() {
                rem /= &big_d;
                mult += 1;
            }
            for _ in 0..mult / 2 {
                root *= &big_d;
            }
            if mult % 2 == 1 {
                free *= &big_d;
            }
            bound = cbrt_bound(&rem);
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    // rem now has no prime factor <= min(TRIAL_BOUND, cbrt(rem)), so it
    // is 1, prime, a prime square, or a product of two distinct primes.
    if !rem.is_one() {
        let s = rem.sqrt();
        if &s * &s == rem {
            root *= s;
        } else {
            free *= rem;
        }
    }
    (root, free)
}

/// Dense matrix of exact rationals, row-major, 0-indexed storage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Rational>>", into = "Vec<Vec<Rational>>")]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(ExactError::RaggedRow {
                    row: i,
                    got: r.len(),
                    expected: ncols,
                });
            }
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        let mut m = Self::zero(row_idx.len(), col_idx.len());
        for (i, &r) in row_idx.iter().enumerate() {
            for (j, &c) in col_idx.iter().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<Rational, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let (mut m, scale) = self.to_integer_rows();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev; // exact by Bareiss identity
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det_int = m[n - 1][n - 1].clone() * BigInt::from(sign);
        Rational::from_big(det_int, BigInt::one()).map(|d| d / scale)
    }

    /// Exact rank over the rationals (fraction-free elimination with
    /// full pivoting).
    #[allow(clippy::needless_range_loop)]
    pub fn rank(&self) -> usize {
        let (mut m, _) = self.to_integer_rows();
        let rows = self.rows;
        let cols = self.cols;
        let mut rank = 0;
        let mut prev = BigInt::one();
        let mut col_order: Vec<usize> = (0..cols).collect();
        while rank < rows && rank < cols {
            // full pivot search in the remaining submatrix
            let mut pivot = None;
            'search: for i in rank..rows {
                for jj in rank..cols {
                    if !m[i][col_order[jj]].is_zero() {
                        pivot = Some((i, jj));
                        break 'search;
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            m.swap(rank, pi);
            col_order.swap(rank, pj);
            let pc = col_order[rank];
            for i in rank + 1..rows {
                for jj in rank + 1..cols {
                    let c = col_order[jj];
                    let num = &m[i][c] * &m[rank][pc] - &m[i][pc] * &m[rank][c];
                    m[i][c] = num / &prev;
                }
                m[i][pc] = BigInt::zero();
            }
            prev = m[rank][pc].clone();
            rank += 1;
        }
        rank
    }

    /// Clears denominators row by row; returns the integer rows and the
    /// rational `scale` such that `det(self) = det(int rows) / scale`.
    fn to_integer_rows(&self) -> (Vec<Vec<BigInt>>, Rational) {
        let mut scale = Rational::one();
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut lcm = BigInt::one();
            for c in 0..self.cols {
                lcm = lcm.lcm(self.get(r, c).denom());
            }
            scale = scale * Rational::from_big(lcm.clone(), BigInt::one()).unwrap();
            let row = (0..self.cols)
                .map(|c| {
                    let v = self.get(r, c);
                    v.numer() * (&lcm / v.denom())
                })
                .collect();
            out.push(row);
        }
        (out, scale)
    }
}

impl TryFrom<Vec<Vec<Rational>>> for RationalMatrix {
    type Error = ExactError;
    fn try_from(rows: Vec<Vec<Rational>>) -> Result<Self, Self::Error> {
        RationalMatrix::from_rows(rows)
    }
}

impl From<RationalMatrix> for Vec<Vec<Rational>> {
    fn from(m: RationalMatrix) -> Self {
        m.row_vecs()
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Result of rewriting a rank-`r` homogeneous system: the squares of the
/// dependent unknowns expressed as `u_dep[i] = -sum_j coefficients[i][j] * u_free[j]`.
///
/// Row and column indices refer to the original matrix (0-indexed). The
/// pivot rows/columns are the lexicographically first independent sets.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedSystem {
    pub pivot_rows: Vec<usize>,
    pub dependent_cols: Vec<usize>,
    pub free_cols: Vec<usize>,
    /// r x (n-r) matrix D.
    pub coefficients: RationalMatrix,
    /// det of the pivot minor (rows = pivot_rows, cols = dependent_cols).
    pub pivot_det: Rational,
}

impl ReducedSystem {
    /// det of the pivot minor with dependent column `i` replaced by free
    /// column `j`, via the Cramer identity `det(M_ij) = d_ij * det(M_r)`.
    pub fn minor_det(&self, i: usize, j: usize) -> Rational {
        self.coefficients.get(i, j) * &self.pivot_det
    }
}

/// Rewrites the homogeneous system `s * u = 0` (rows are equations) as
/// exact expressions of the dependent squared variables in terms of the
/// free ones. `stated_rank` must equal the actual rank.
pub fn reduced_coefficients(
    s: &RationalMatrix,
    stated_rank: usize,
) -> Result<ReducedSystem, ExactError> {
    let actual = s.rank();
    if actual != stated_rank {
        return Err(ExactError::RankMismatch {
            stated: stated_rank,
            actual,
        });
    }
    let r = stated_rank;
    let pivot_rows = greedy_independent_rows(s, r);
    let all_cols: Vec<usize> = (0..s.cols()).collect();
    let row_block = s.submatrix(&pivot_rows, &all_cols);
    let dependent_cols = greedy_independent_cols(&row_block, r);
    let free_cols: Vec<usize> = (0..s.cols())
        .filter(|c| !dependent_cols.contains(c))
        .collect();
    let pivot = s.submatrix(&pivot_rows, &dependent_cols);
    let pivot_det = pivot.det()?;
    debug_assert!(!pivot_det.is_zero());
    let rhs = s.submatrix(&pivot_rows, &free_cols);
    let coefficients = solve_multi(&pivot, &rhs);
    Ok(ReducedSystem {
        pivot_rows,
        dependent_cols,
        free_cols,
        coefficients,
        pivot_det,
    })
}

/// Lexicographically first maximal independent row set (size `r`).
fn greedy_independent_rows(s: &RationalMatrix, r: usize) -> Vec<usize> {
    let mut chosen = Vec::with_capacity(r);
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    for row in 0..s.rows() {
        if chosen.len() == r {
            break;
        }
        let mut v = s.row(row).to_vec();
        reduce_against(&mut v, &echelon);
        if v.iter().any(|x| !x.is_zero()) {
            normalize_leading(&mut v);
            echelon.push(v);
            echelon.sort_by_key(|w| w.iter().position(|x| !x.is_zero()).unwrap());
            chosen.push(row);
        }
    }
    chosen
}

/// Lexicographically first column set of size `r` with nonsingular
/// pivot minor, for a matrix whose rows are already independent.
fn greedy_independent_cols(block: &RationalMatrix, r: usize) -> Vec<usize> {
    let t = block.transpose();
    greedy_independent_rows(&t, r)
}

fn reduce_against(v: &mut [Rational], echelon: &[Vec<Rational>]) {
    for e in echelon {
        let lead = e.iter().position(|x| !x.is_zero()).unwrap();
        if !v[lead].is_zero() {
            let factor = &v[lead] / &e[lead];
            for (vi, ei) in v.iter_mut().zip(e.iter()) {
                *vi = &*vi - &(&factor * ei);
            }
        }
    }
}

fn normalize_leading(v: &mut [Rational]) {
    let lead = v.iter().position(|x| !x.is_zero()).unwrap();
    let inv = v[lead].recip().unwrap();
    for x in v.iter_mut() {
        *x = &*x * &inv;
    }
}

/// Solves `pivot * X = rhs` column by column with exact Gaussian
/// elimination; `pivot` must be nonsingular.
#[allow(clippy::needless_range_loop)]
fn solve_multi(pivot: &RationalMatrix, rhs: &RationalMatrix) -> RationalMatrix {
    let n = pivot.rows();
    let k = rhs.cols();
    // augmented [pivot | rhs]
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = pivot.row(i).to_vec();
            row.extend_from_slice(rhs.row(i));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .find(|&i| !aug[i][col].is_zero())
            .expect("nonsingular pivot minor");
        aug.swap(col, p);
        let inv = aug[col][col].recip().unwrap();
        for x in aug[col].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != col && !aug[i][col].is_zero() {
                let f = aug[i][col].clone();
                for j in 0..n + k {
                    let delta = &f * &aug[col][j];
                    aug[i][j] = &aug[i][j] - &delta;
                }
            }
        }
    }
    let mut out = RationalMatrix::zero(n, k);
    for i in 0..n {
        for j in 0..k {
            out.set(i, j, aug[i][n + j].clone());
        }
    }
    out
}
