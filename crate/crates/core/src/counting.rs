//! Counting sequences attached to positive braids.
//!
//! * `b_k`: positive 3-braids of length `k`, `F_{k+3} - 1`.
//! * `b⁺_k`: 3-braids of length `k` with no `Δ_3` factor, coefficients of
//!   `(1 + t + t²) / (1 - t - t²)`.
//! * `d_{n,i}`: divisors of `Δ_n` of length `i`, coefficients of
//!   `(1 + t)(1 + t + t²) … (1 + t + … + t^{n-1})`.
//! * `s_{n,i}`: simple braids of length `i`.
//! * `c_{n,i}`: conjugacy classes of simple braids of length `i`.
//!
//! Everything here is exact integer arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest `k` with `F_k` representable in `u128`.
pub const MAX_FIB_INDEX: usize = 186;

/// Dense polynomial with arbitrary-precision integer coefficients;
/// `coefficients()[d]` multiplies `t^d`. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `1 + t + … + t^d`.
    pub fn geometric(d: usize) -> Self {
        Self::new(vec![BigInt::one(); d + 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// First `terms` coefficients of the power series `self / den`.
    /// The constant term of `den` must be `±1`.
    pub fn series_div(&self, den: &IntegerPolynomial, terms: usize) -> Result<Vec<BigInt>> {
        let lead = den.coeff(0);
        if lead.abs() != BigInt::one() {
            return Err(Error::Invalid(
                "series division needs a unit constant term".into(),
            ));
        }
        let mut out: Vec<BigInt> = Vec::with_capacity(terms);
        for k in 0..terms {
            let mut acc = self.coeff(k);
            for j in 1..=k.min(den.coeffs.len().saturating_sub(1)) {
                acc -= &den.coeffs[j] * &out[k - j];
            }
            out.push(acc * &lead);
        }
        Ok(out)
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(out)
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let mag = c.abs();
            match d {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}")?,
            }
            match d {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        Ok(())
    }
}

/// `F_k` with `F_0 = 0`, `F_1 = 1`.
///
/// Panics above [`MAX_FIB_INDEX`].
pub fn fib(k: usize) -> u128 {
    assert!(k <= MAX_FIB_INDEX, "F_{k} does not fit in u128");
    if k == 0 {
        return 0;
    }
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 1..k {
        (a, b) = (b, a + b);
    }
    b
}

/// `b_k = F_{k+3} - 1`.
pub fn count_positive_3(k: usize) -> u128 {
    fib(k + 3) - 1
}

/// Coefficients of `1 / ((1 - t)(1 - t - t²))`.
pub fn positive_3_series(terms: usize) -> Vec<BigInt> {
    let den = &IntegerPolynomial::from_i64(&[1, -1]) * &IntegerPolynomial::from_i64(&[1, -1, -1]);
    IntegerPolynomial::one()
        .series_div(&den, terms)
        .expect("unit constant term")
}

/// Coefficients of `(1 + t + t²) / (1 - t - t²)`.
pub fn delta_free_3_series(terms: usize) -> Vec<BigInt> {
    IntegerPolynomial::from_i64(&[1, 1, 1])
        .series_div(&IntegerPolynomial::from_i64(&[1, -1, -1]), terms)
        .expect("unit constant term")
}

/// `b⁺_k`, read off the generating function.
pub fn count_delta_free_3(k: usize) -> u128 {
    delta_free_3_series(k + 1)[k]
        .to_u128()
        .expect("nonnegative coefficient")
}

/// Literal closed form `2 F_{k-1}` as printed (defined for `k ≥ 1`).
pub fn delta_free_3_printed(k: usize) -> Option<u128> {
    k.checked_sub(1).map(|j| 2 * fib(j))
}

/// Closed form consistent with the series: `2 F_{k+1}` for `k ≥ 1`.
pub fn delta_free_3_closed(k: usize) -> u128 {
    if k == 0 {
        1
    } else {
        2 * fib(k + 1)
    }
}

/// `(1 + t)(1 + t + t²) … (1 + t + … + t^{n-1})`.
pub fn divisor_poly(n: usize) -> Result<IntegerPolynomial> {
    if n < 2 {
        return Err(Error::TooFewStrands { min: 2, got: n });
    }
    Ok((1..n).fold(IntegerPolynomial::one(), |acc, d| {
        &acc * &IntegerPolynomial::geometric(d)
    }))
}

/// Rows `d_{n,·}` for `n = 0..=n_max` from `d_{n+1,i} = d_{n,i} + … + d_{n,i-n}`
/// seeded with `d_{1,0} = 1`. Row `n ≥ 1` has `n(n-1)/2 + 1` entries; row 0 is empty.
pub fn d_table(n_max: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = vec![Vec::new()];
    if n_max == 0 {
        return rows;
    }
    rows.push(vec![BigUint::one()]);
    for n in 1..n_max {
        let prev = &rows[n];
        let width = n * (n + 1) / 2 + 1;
        let row: Vec<BigUint> = (0..width)
            .map(|i| (i.saturating_sub(n)..=i).filter_map(|j| prev.get(j)).sum())
            .collect();
        rows.push(row);
    }
    rows
}

/// Simple-braid counts `s_{n,i}` for `n = 0..=n_max` via
/// `s_{n,i} = s_{n-1,i} + s_{n-1,i-1} + s_{n-2,i-2} + … + s_{n-i,0}`,
/// seeded with `s_{1,0} = 1`. Row `n` has `n` entries; row 0 is empty.
pub fn s_table(n_max: usize) -> Vec<Vec<u128>> {
    let mut rows: Vec<Vec<u128>> = vec![Vec::new()];
    let get = |rows: &Vec<Vec<u128>>, r: usize, i: usize| -> u128 {
        rows.get(r).and_then(|row| row.get(i)).copied().unwrap_or(0)
    };
    for n in 1..=n_max {
        if n == 1 {
            rows.push(vec![1]);
            continue;
        }
        let row: Vec<u128> = (0..n)
            .map(|i| {
                let diagonal: u128 = (1..=i.min(n - 1)).map(|m| get(&rows, n - m, i - m)).sum();
                get(&rows, n - 1, i) + diagonal
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// The same triangle from `s_{n,i} = 2 s_{n-1,i-1} + s_{n-1,i} - s_{n-2,i-1}`,
/// which holds for `n ≥ 3`; rows 1 and 2 are seeded.
pub fn s_table_short_recurrence(n_max: usize) -> Vec<Vec<u128>> {
    let mut rows: Vec<Vec<i128>> = vec![Vec::new(), vec![1], vec![1, 1]];
    let get = |rows: &Vec<Vec<i128>>, r: usize, i: Option<usize>| -> i128 {
        i.and_then(|i| rows.get(r).and_then(|row| row.get(i)))
            .copied()
            .unwrap_or(0)
    };
    for n in 3..=n_max {
        let row: Vec<i128> = (0..n)
            .map(|i| {
                2 * get(&rows, n - 1, i.checked_sub(1)) + get(&rows, n - 1, Some(i))
                    - get(&rows, n - 2, i.checked_sub(1))
            })
            .collect();
        rows.push(row);
    }
    rows.truncate(n_max + 1);
    rows.into_iter()
        .map(|row| row.into_iter().map(|v| v as u128).collect())
        .collect()
}

/// Closed forms for columns of the `s` triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SClosedForm {
    /// `(n-1)(n+2)/2`, as printed for `s_{n,2}`.
    Degree2Printed,
    /// `(n-2)(n+1)/2`, the form the recurrence actually produces.
    Degree2,
    /// `(n-3)(n+4)(n-1)/6`.
    Degree3,
    /// `(n-4)(n+1)(n² + 5n - 18)/24`.
    Degree4,
    /// `s_{n,n-1} = 2^{n-2}`.
    LastCoefficient,
}

impl SClosedForm {
    pub const ALL: [SClosedForm; 5] = [
        SClosedForm::Degree2Printed,
        SClosedForm::Degree2,
        SClosedForm::Degree3,
        SClosedForm::Degree4,
        SClosedForm::LastCoefficient,
    ];

    /// The column index `i` this form predicts at strand count `n`.
    pub fn column(self, n: usize) -> usize {
        match self {
            SClosedForm::Degree2Printed | SClosedForm::Degree2 => 2,
            SClosedForm::Degree3 => 3,
            SClosedForm::Degree4 => 4,
            SClosedForm::LastCoefficient => n.saturating_sub(1),
        }
    }

    /// Smallest `n` the form is claimed for.
    pub fn min_strands(self) -> usize {
        match self {
            SClosedForm::LastCoefficient => 2,
            other => other.column(0) + 1,
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            SClosedForm::Degree2Printed => "(n-1)(n+2)/2",
            SClosedForm::Degree2 => "(n-2)(n+1)/2",
            SClosedForm::Degree3 => "(n-3)(n+4)(n-1)/6",
            SClosedForm::Degree4 => "(n-4)(n+1)(n^2+5n-18)/24",
            SClosedForm::LastCoefficient => "2^(n-2)",
        }
    }

    pub fn evaluate(self, n: usize) -> Result<i128> {
        if n < self.min_strands() {
            return Err(Error::OutOfRange {
                what: "closed form",
                detail: format!(
                    "{} needs n >= {}, got {n}",
                    self.formula(),
                    self.min_strands()
                ),
            });
        }
        let m = n as i128;
        let (num, den) = match self {
            SClosedForm::Degree2Printed => ((m - 1) * (m + 2), 2),
            SClosedForm::Degree2 => ((m - 2) * (m + 1), 2),
            SClosedForm::Degree3 => ((m - 3) * (m + 4) * (m - 1), 6),
            SClosedForm::Degree4 => ((m - 4) * (m + 1) * (m * m + 5 * m - 18), 24),
            SClosedForm::LastCoefficient => return Ok(1i128 << (n - 2)),
        };
        if num % den != 0 {
            return Err(Error::Invalid(format!(
                "{} is not integral at n = {n}",
                self.formula()
            )));
        }
        Ok(num / den)
    }
}

/// Finite-difference profile of `n ↦ s_{n,i}` over a range of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceProfile {
    pub column: usize,
    pub values: Vec<i128>,
    /// `i`-th differences.
    pub leading: Vec<i128>,
    /// `(i+1)`-th differences.
    pub beyond: Vec<i128>,
}

impl DifferenceProfile {
    /// Degree `i` with leading coefficient `1/i!`: the `i`-th differences are
    /// all 1 and the next ones vanish.
    pub fn is_monic_degree(&self) -> bool {
        !self.beyond.is_empty()
            && self.leading.iter().all(|&d| d == 1)
            && self.beyond.iter().all(|&d| d == 0)
    }
}

fn differences(values: &[i128], order: usize) -> Vec<i128> {
    let mut cur = values.to_vec();
    for _ in 0..order {
        cur = cur.windows(2).map(|w| w[1] - w[0]).collect();
    }
    cur
}

/// Finite differences of column `i` of the `s` triangle for `n` in `n_range`.
pub fn s_polynomiality(
    i: usize,
    n_range: std::ops::RangeInclusive<usize>,
) -> Result<DifferenceProfile> {
    let (lo, hi) = (*n_range.start(), *n_range.end());
    if lo == 0 || hi < lo + i + 1 {
        return Err(Error::OutOfRange {
            what: "difference range",
            detail: format!("need at least {} points starting at n >= 1", i + 2),
        });
    }
    let table = s_table(hi);
    let values: Vec<i128> = (lo..=hi)
        .map(|n| table[n].get(i).copied().unwrap_or(0) as i128)
        .collect();
    Ok(DifferenceProfile {
        column: i,
        leading: differences(&values, i),
        beyond: differences(&values, i + 1),
        values,
    })
}

/// Default range used for the polynomiality check of column `i`.
pub fn stable_range(i: usize) -> std::ops::RangeInclusive<usize> {
    let lo = (2 * i).max(1);
    lo..=lo + i + 4
}

/// Memoised `P(m, k)`, partitions of `m` into exactly `k` parts.
#[derive(Clone, Debug)]
pub struct PartitionTable {
    table: Vec<Vec<u128>>,
}

impl PartitionTable {
    pub fn new(m_max: usize) -> Self {
        let mut table = vec![vec![0u128; m_max + 1]; m_max + 1];
        table[0][0] = 1;
        for m in 1..=m_max {
            for k in 1..=m {
                table[m][k] = table[m - 1][k - 1] + table[m - k][k];
            }
        }
        Self { table }
    }

    pub fn m_max(&self) -> usize {
        self.table.len() - 1
    }

    pub fn get(&self, m: usize, k: usize) -> u128 {
        if k > m {
            return 0;
        }
        self.table[m][k]
    }
}

/// `P(m, k)` via `P(m, k) = P(m-1, k-1) + P(m-k, k)`.
pub fn partitions(m: usize, k: usize) -> u128 {
    PartitionTable::new(m).get(m, k)
}

/// `c_{n,i} = P(i + min(i, n-i), min(i, n-i))` for `i = 0..n`.
pub fn c_table(n: usize) -> Vec<u128> {
    let p = PartitionTable::new(n + n / 2);
    (0..n)
        .map(|i| {
            let m = i.min(n - i);
            p.get(i + m, m)
        })
        .collect()
}

/// `c_{n,i}` as partitions of `i` into at most `n - i` parts,
/// `P(i,1) + … + P(i, min(i, n-i))`, with `c_{n,0} = 1`.
pub fn c_table_by_parts(n: usize) -> Vec<u128> {
    let p = PartitionTable::new(n);
    (0..n)
        .map(|i| {
            if i == 0 {
                1
            } else {
                (1..=i.min(n - i)).map(|k| p.get(i, k)).sum()
            }
        })
        .collect()
}

pub fn is_symmetric<T: PartialEq>(row: &[T]) -> bool {
    row.iter().eq(row.iter().rev())
}

/// Weakly rising then weakly falling.
pub fn is_unimodal<T: Ord>(row: &[T]) -> bool {
    let mut falling = false;
    for w in row.windows(2) {
        match w[0].cmp(&w[1]) {
            Ordering::Less if falling => return false,
            Ordering::Greater => falling = true,
            _ => {}
        }
    }
    true
}

/// All tables up to a strand bound, built once and read thereafter.
#[derive(Clone, Debug)]
pub struct CountTables {
    n_max: usize,
    fib: Vec<u128>,
    partitions: PartitionTable,
    d: Vec<Vec<BigUint>>,
    s: Vec<Vec<u128>>,
    c: Vec<Vec<u128>>,
}

impl CountTables {
    pub fn new(n_max: usize) -> Self {
        let fib_len = (2 * n_max + 4).min(MAX_FIB_INDEX + 1);
        Self {
            n_max,
            fib: (0..fib_len).map(fib).collect(),
            partitions: PartitionTable::new(2 * n_max),
            d: d_table(n_max),
            s: s_table(n_max),
            c: std::iter::once(Vec::new())
                .chain((1..=n_max).map(c_table))
                .collect(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn fib(&self, k: usize) -> u128 {
        self.fib.get(k).copied().unwrap_or_else(|| fib(k))
    }

    pub fn partitions(&self, m: usize, k: usize) -> u128 {
        if m <= self.partitions.m_max() {
            self.partitions.get(m, k)
        } else {
            partitions(m, k)
        }
    }

    pub fn d_row(&self, n: usize) -> Option<&[BigUint]> {
        self.d.get(n).filter(|_| n >= 1).map(Vec::as_slice)
    }

    pub fn s_row(&self, n: usize) -> Option<&[u128]> {
        self.s.get(n).filter(|_| n >= 1).map(Vec::as_slice)
    }

    pub fn c_row(&self, n: usize) -> Option<&[u128]> {
        self.c.get(n).filter(|_| n >= 1).map(Vec::as_slice)
    }
}
