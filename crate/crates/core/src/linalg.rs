//! Exact integer and prime-field linear algebra.
//!
//! Everything here works over arbitrary-precision integers ([`BigInt`]) or
//! over a prime field `F_p` with `p < 2^32`, so that products of two reduced
//! residues fit in a `u64`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default prime used by every rank-based oracle.
pub const DEFAULT_PRIME: u64 = 32003;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from `i64` rows. All rows must have equal length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Shape("ragged rows".into()));
            }
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Self::new(rows.len(), cols, entries)
    }

    pub fn diagonal(rows: usize, cols: usize, d: &[BigInt]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, x) in d.iter().enumerate().take(rows.min(cols)) {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Entries as `i64` rows, for serialization; `None` on overflow.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// True when every entry strictly above the diagonal is zero.
    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| ((i + 1)..self.cols).all(|j| self[(i, j)].is_zero()))
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(swap) = ((k + 1)..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                m.swap_rows(k, swap);
                sign = -sign;
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * &m[(n - 1, n - 1)])
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients from the
    /// constant term upward (Faddeev-LeVerrier; all divisions are exact).
    pub fn characteristic_polynomial(&self) -> Result<Vec<BigInt>> {
        if !self.is_square() {
            return Err(Error::Shape(
                "characteristic polynomial of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = IntMatrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self.mul(&m)?;
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            let am = self.mul(&next)?;
            let trace: BigInt = (0..n).map(|i| am[(i, i)].clone()).sum();
            coeffs[n - k] = -trace / BigInt::from(k);
            m = next;
        }
        Ok(coeffs)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * q;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * q;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `u * a * v = diag(d)` with `d[i] | d[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub d: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.d.iter().filter(|x| !x.is_zero()).count()
    }

    /// Invariant factors different from 1 (and from 0).
    pub fn nonunit_factors(&self) -> Vec<BigInt> {
        self.d
            .iter()
            .filter(|x| !x.is_zero() && !x.is_one())
            .cloned()
            .collect()
    }
}

/// Smith normal form with unimodular transforms.
///
/// Pivots are chosen as the entry of smallest absolute value in the active
/// submatrix; the diagonal that comes out does not depend on that choice.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows, a.cols);
    let mut m = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let steps = rows.min(cols);

    for k in 0..steps {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&m, k) else {
                // active block is zero: nothing left to do
                let d = (0..steps).map(|i| m[(i, i)].clone()).collect();
                return SmithDecomposition { d, u, v };
            };
            m.swap_rows(k, pi);
            u.swap_rows(k, pi);
            m.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let pivot = m[(k, k)].clone();
            let mut clean = true;
            for i in (k + 1)..rows {
                if m[(i, k)].is_zero() {
                    continue;
                }
                let q = -m[(i, k)].div_floor(&pivot);
                m.add_row_multiple(i, k, &q);
                u.add_row_multiple(i, k, &q);
                clean &= m[(i, k)].is_zero();
            }
            for j in (k + 1)..cols {
                if m[(k, j)].is_zero() {
                    continue;
                }
                let q = -m[(k, j)].div_floor(&pivot);
                m.add_col_multiple(j, k, &q);
                v.add_col_multiple(j, k, &q);
                clean &= m[(k, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // divisibility: fold an offending row into row k and go again
            let offending = ((k + 1)..rows)
                .find(|&i| ((k + 1)..cols).any(|j| !m[(i, j)].is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    let one = BigInt::one();
                    m.add_row_multiple(k, i, &one);
                    u.add_row_multiple(k, i, &one);
                }
                None => break,
            }
        }
        if m[(k, k)].is_negative() {
            m.negate_row(k);
            u.negate_row(k);
        }
    }

    let d = (0..steps).map(|i| m[(i, i)].clone()).collect();
    SmithDecomposition { d, u, v }
}

fn smallest_nonzero(m: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..m.rows {
        for j in k..m.cols {
            let x = &m[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < m[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Result of [`solve_integer_linear`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSolution {
    /// Some `x` with `a x = b`, when one exists over the integers.
    pub particular: Option<Vec<BigInt>>,
    /// Z-basis of `{x : a x = 0}`.
    pub kernel: Vec<Vec<BigInt>>,
}

/// Solves `a x = b` over the integers through the Smith form of `a`.
pub fn solve_integer_linear(a: &IntMatrix, b: &[BigInt]) -> Result<IntegerSolution> {
    if b.len() != a.rows {
        return Err(Error::Shape(format!(
            "right-hand side has length {} but matrix has {} rows",
            b.len(),
            a.rows
        )));
    }
    let snf = smith_normal_form(a);
    // a = u^-1 D v^-1, so a x = b  <=>  D y = u b with x = v y
    let ub = snf.u.mul_vec(b)?;
    let mut y = vec![BigInt::zero(); a.cols];
    let mut solvable = true;
    for (i, c) in ub.iter().enumerate() {
        let di = snf.d.get(i).filter(|d| !d.is_zero());
        match di {
            Some(di) => {
                if c.is_multiple_of(di) {
                    y[i] = c / di;
                } else {
                    solvable = false;
                }
            }
            None => solvable &= c.is_zero(),
        }
    }
    let rank = snf.rank();
    let kernel = (rank..a.cols)
        .map(|j| (0..a.cols).map(|i| snf.v[(i, j)].clone()).collect())
        .collect();
    let particular = if solvable {
        Some(snf.v.mul_vec(&y)?)
    } else {
        None
    };
    Ok(IntegerSolution { particular, kernel })
}

/// The prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::InvalidPrime(p));
        }
        if !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_big(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.p))
            .to_u64()
            .expect("residue fits")
    }

    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    /// Image of a rational number; fails when `p` divides the denominator.
    pub fn reduce_rational(&self, x: &num_rational::BigRational) -> Result<u64> {
        let den = self.reduce_big(x.denom());
        if den == 0 {
            return Err(Error::InvalidPrime(self.p));
        }
        Ok(self.mul(self.reduce_big(x.numer()), self.inv(den)))
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self { p: DEFAULT_PRIME }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of `a` reduced modulo `f`.
pub fn rank_mod_p(a: &IntMatrix, f: PrimeField) -> usize {
    let entries = a.entries.iter().map(|x| f.reduce_big(x)).collect();
    FpMatrix::from_entries(a.rows, a.cols, entries, f).rank()
}

/// Dense matrix over a prime field, used by the dimension oracles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
    field: PrimeField,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize, field: PrimeField) -> Self {
        Self {
            rows,
            cols,
            entries: vec![0; rows * cols],
            field,
        }
    }

    /// `entries` must already be reduced and have length `rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<u64>, field: PrimeField) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self {
            rows,
            cols,
            entries,
            field,
        }
    }

    /// Stacks row vectors (each of length `cols`).
    pub fn from_row_vecs(cols: usize, rows: &[Vec<u64>], field: PrimeField) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            entries.extend_from_slice(r);
        }
        Self::from_entries(rows.len(), cols, entries, field)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        self.entries[i * self.cols + j] = x % self.field.p;
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: u64) {
        let k = i * self.cols + j;
        self.entries[k] = self.field.add(self.entries[k], x % self.field.p);
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.entries.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            for j in c..self.cols {
                let k = r * self.cols + j;
                self.entries[k] = f.mul(self.entries[k], inv);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let sub = f.mul(factor, self.entries[r * self.cols + j]);
                    let k = i * self.cols + j;
                    self.entries[k] = f.sub(self.entries[k], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right null space `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![0; self.cols];
            x[free] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                x[c] = f.neg(m.get(r, free));
            }
            basis.push(x);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_snf(a: &IntMatrix) -> SmithDecomposition {
        let s = smith_normal_form(a);
        let lhs = s.u.mul(a).unwrap().mul(&s.v).unwrap();
        assert_eq!(lhs, IntMatrix::diagonal(a.rows(), a.cols(), &s.d));
        for w in s.d.windows(2) {
            if !w[1].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]), "{:?}", s.d);
            } else {
                // zeros only at the tail
                assert!(w[1].is_zero());
            }
        }
        assert!(s.d.iter().all(|x| !x.is_negative()));
        assert_eq!(s.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(s.v.determinant().unwrap().abs(), BigInt::one());
        s
    }

    #[test]
    fn snf_identity() {
        let s = check_snf(&IntMatrix::identity(2));
        assert_eq!(s.d, big(&[1, 1]));
        assert_eq!(s.u, IntMatrix::identity(2));
        assert_eq!(s.v, IntMatrix::identity(2));
    }

    #[test]
    fn snf_single_row() {
        let s = check_snf(&IntMatrix::from_rows(&[[2, -3]]).unwrap());
        assert_eq!(s.d, big(&[1]));
    }

    #[test]
    fn snf_diag_2_3() {
        let s = check_snf(&IntMatrix::from_rows(&[[2, 0], [0, 3]]).unwrap());
        assert_eq!(s.d, big(&[1, 6]));
    }

    #[test]
    fn snf_empty_and_zero() {
        let s = smith_normal_form(&IntMatrix::zeros(0, 3));
        assert!(s.d.is_empty());
        let s = check_snf(&IntMatrix::zeros(2, 3));
        assert_eq!(s.d, big(&[0, 0]));
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn snf_relation_chain() {
        let a = IntMatrix::from_rows(&[[2, -2, 0], [0, 2, -2]]).unwrap();
        let s = check_snf(&a);
        assert_eq!(s.d, big(&[2, 2]));
    }

    #[test]
    fn rank_mod_p_examples() {
        let f = PrimeField::default();
        assert_eq!(rank_mod_p(&IntMatrix::identity(3), f), 3);
        assert_eq!(
            rank_mod_p(&IntMatrix::from_rows(&[[1, 2], [2, 4]]).unwrap(), f),
            1
        );
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(
            rank_mod_p(&IntMatrix::from_rows(&[[2, -3]]).unwrap(), f2),
            1
        );
        assert_eq!(rank_mod_p(&IntMatrix::from_rows(&[[2, 4]]).unwrap(), f2), 0);
    }

    #[test]
    fn solve_examples() {
        let sol = solve_integer_linear(&IntMatrix::identity(2), &big(&[5, 7])).unwrap();
        assert_eq!(sol.particular, Some(big(&[5, 7])));
        assert!(sol.kernel.is_empty());

        let a = IntMatrix::from_rows(&[[2, -3]]).unwrap();
        let sol = solve_integer_linear(&a, &big(&[0])).unwrap();
        assert_eq!(sol.particular, Some(big(&[0, 0])));
        assert_eq!(sol.kernel.len(), 1);
        let k = &sol.kernel[0];
        // the kernel of [2, -3] is generated by +-(3, 2)
        assert!(*k == big(&[3, 2]) || *k == big(&[-3, -2]), "{k:?}");

        let sol = solve_integer_linear(&IntMatrix::from_rows(&[[2]]).unwrap(), &big(&[1])).unwrap();
        assert_eq!(sol.particular, None);
    }

    #[test]
    fn solve_rejects_bad_rhs() {
        let a = IntMatrix::identity(2);
        assert!(solve_integer_linear(&a, &big(&[1])).is_err());
    }

    #[test]
    fn prime_field_validation() {
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(32004).is_err());
        assert!(PrimeField::new(1).is_err());
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(f.inv(3), 3), 1);
        assert_eq!(f.reduce(-1), 6);
    }

    #[test]
    fn determinant_and_charpoly() {
        let a = IntMatrix::from_rows(&[[2, 1], [1, 1]]).unwrap();
        assert_eq!(a.determinant().unwrap(), BigInt::from(1));
        // x^2 - 3x + 1
        assert_eq!(a.characteristic_polynomial().unwrap(), big(&[1, -3, 1]));
        let b = IntMatrix::from_rows(&[[0, 1, 2], [3, 4, 5], [6, 7, 8]]).unwrap();
        assert_eq!(b.determinant().unwrap(), BigInt::zero());
        let c = IntMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(c.determinant().unwrap(), BigInt::from(-1));
    }

    #[test]
    fn nullspace_mod_p() {
        let f = PrimeField::default();
        let m = FpMatrix::from_entries(1, 2, vec![2, f.reduce(-3)], f);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        let x = &ns[0];
        assert_eq!(f.sub(f.mul(2, x[0]), f.mul(3, x[1])), 0);
    }
}
