//! The group rings `Z₂[Z₂] = Z₂[t]/(1 − t²)` and `Z[Z₂] = Z[t]/(1 − t²)`.
//!
//! Since the only relation is `t² = 1`, an element is just a pair `a + b·t`.
//! Matrices over `Z₂[Z₂]` are stored as two GF(2) matrices `P + t·Q`, which
//! turns products into four GF(2) products.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// `a + b·t` with `a, b ∈ GF(2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GroupRingElement2 {
    pub a: bool,
    pub b: bool,
}

impl GroupRingElement2 {
    pub const ZERO: Self = Self { a: false, b: false };
    pub const ONE: Self = Self { a: true, b: false };
    pub const T: Self = Self { a: false, b: true };
    pub const ONE_PLUS_T: Self = Self { a: true, b: true };

    pub const ALL: [Self; 4] = [Self::ZERO, Self::ONE, Self::T, Self::ONE_PLUS_T];

    pub fn new(a: bool, b: bool) -> Self {
        Self { a, b }
    }

    /// `t ↦ 1`.
    pub fn augment(self) -> bool {
        self.a ^ self.b
    }

    pub fn is_zero(self) -> bool {
        !self.a && !self.b
    }

    /// Units are exactly the elements with augmentation 1: `1` and `t`.
    pub fn inverse(self) -> Option<Self> {
        self.augment().then_some(self)
    }

    pub fn render(self) -> &'static str {
        match (self.a, self.b) {
            (false, false) => "0",
            (true, false) => "1",
            (false, true) => "t",
            (true, true) => "1+t",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|e| e.render() == s)
    }
}

impl From<bool> for GroupRingElement2 {
    fn from(a: bool) -> Self {
        Self { a, b: false }
    }
}

impl Add for GroupRingElement2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            a: self.a ^ rhs.a,
            b: self.b ^ rhs.b,
        }
    }
}

impl Mul for GroupRingElement2 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + bt)(c + dt) = (ac + bd) + (ad + bc)t
        Self {
            a: (self.a & rhs.a) ^ (self.b & rhs.b),
            b: (self.a & rhs.b) ^ (self.b & rhs.a),
        }
    }
}

impl fmt::Debug for GroupRingElement2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.render())
    }
}

impl fmt::Display for GroupRingElement2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.render())
    }
}

/// `a + b·t` with integer coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GroupRingElementZ {
    pub a: i64,
    pub b: i64,
}

impl GroupRingElementZ {
    pub const ZERO: Self = Self { a: 0, b: 0 };
    pub const ONE: Self = Self { a: 1, b: 0 };
    pub const T: Self = Self { a: 0, b: 1 };

    pub fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// `t^k` for an integer exponent (`t⁻¹ = t`).
    pub fn t_pow(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Self::ONE
        } else {
            Self::T
        }
    }

    pub fn scale(self, k: i64) -> Self {
        Self {
            a: self.a * k,
            b: self.b * k,
        }
    }

    /// `t ↦ 1`.
    pub fn augment(self) -> i64 {
        self.a + self.b
    }

    pub fn mod2(self) -> GroupRingElement2 {
        GroupRingElement2 {
            a: self.a.rem_euclid(2) == 1,
            b: self.b.rem_euclid(2) == 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl Add for GroupRingElementZ {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl Sub for GroupRingElementZ {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Neg for GroupRingElementZ {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for GroupRingElementZ {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self {
            a: self.a * rhs.a + self.b * rhs.b,
            b: self.a * rhs.b + self.b * rhs.a,
        }
    }
}

impl fmt::Display for GroupRingElementZ {
    /// Canonical form: zero terms dropped, unit coefficient on `t` elided,
    /// e.g. `0`, `1-t`, `-t`, `2+2t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t_term = |b: i64| match b {
            1 => "t".to_string(),
            -1 => "-t".to_string(),
            _ => format!("{b}t"),
        };
        match (self.a, self.b) {
            (0, 0) => f.write_str("0"),
            (a, 0) => write!(f, "{a}"),
            (0, b) => f.write_str(&t_term(b)),
            (a, b) if b > 0 => write!(f, "{a}+{}", t_term(b)),
            (a, b) => write!(f, "{a}{}", t_term(b)),
        }
    }
}

impl fmt::Debug for GroupRingElementZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Matrix over `Z₂[Z₂]`, stored as `constant + t·linear`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingMatrix2 {
    constant: BitMatrix,
    linear: BitMatrix,
}

impl GroupRingMatrix2 {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            constant: BitMatrix::zeros(rows, cols),
            linear: BitMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_constant(BitMatrix::identity(n))
    }

    /// Lifts a GF(2) matrix to `Z₂[Z₂]` (entries in `{0, 1}`).
    pub fn from_constant(m: BitMatrix) -> Self {
        let linear = BitMatrix::zeros(m.rows(), m.cols());
        Self {
            constant: m,
            linear,
        }
    }

    pub fn from_parts(constant: BitMatrix, linear: BitMatrix) -> Result<Self> {
        if constant.rows() != linear.rows() || constant.cols() != linear.cols() {
            return Err(Error::DimensionMismatch(
                "group-ring matrix parts differ in shape".into(),
            ));
        }
        Ok(Self { constant, linear })
    }

    pub fn from_entries(rows: &[Vec<GroupRingElement2>]) -> Self {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &e) in row.iter().enumerate() {
                m.set(i + 1, j + 1, e);
            }
        }
        m
    }

    pub fn diagonal(entries: &[GroupRingElement2]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (k, &e) in entries.iter().enumerate() {
            m.set(k + 1, k + 1, e);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.constant.rows()
    }

    pub fn cols(&self) -> usize {
        self.constant.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> GroupRingElement2 {
        GroupRingElement2 {
            a: self.constant.get(i, j),
            b: self.linear.get(i, j),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, e: GroupRingElement2) {
        self.constant.set(i, j, e.a);
        self.linear.set(i, j, e.b);
    }

    pub fn constant_part(&self) -> &BitMatrix {
        &self.constant
    }

    pub fn linear_part(&self) -> &BitMatrix {
        &self.linear
    }

    /// Multiplies every entry by the scalar `s`.
    pub fn scale(&self, s: GroupRingElement2) -> Self {
        let mut out = Self::zeros(self.rows(), self.cols());
        for i in 1..=self.rows() {
            for j in 1..=self.cols() {
                out.set(i, j, s * self.get(i, j));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            constant: self.constant.add(&other.constant)?,
            linear: self.linear.add(&other.linear)?,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        // (P + tQ)(P' + tQ') = (PP' + QQ') + t(PQ' + QP')
        let pp = self.constant.mul(&other.constant)?;
        let qq = self.linear.mul(&other.linear)?;
        let pq = self.constant.mul(&other.linear)?;
        let qp = self.linear.mul(&other.constant)?;
        Ok(Self {
            constant: pp.add(&qq)?,
            linear: pq.add(&qp)?,
        })
    }

    /// Entrywise augmentation `t ↦ 1`.
    pub fn augment(&self) -> BitMatrix {
        self.constant
            .add(&self.linear)
            .expect("parts share a shape")
    }

    /// A square matrix is invertible over `Z₂[Z₂]` exactly when its
    /// augmentation is invertible over GF(2).
    pub fn is_invertible(&self) -> Result<bool> {
        if self.rows() != self.cols() {
            return Err(Error::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        Ok(self.augment().rank() == self.rows())
    }

    /// Writing `M = M₀ + (1+t)K` with `M₀` the augmentation, `(M₀⁻¹M)² = I`
    /// because `(1+t)² = 0`, so `M⁻¹ = M₀⁻¹ M M₀⁻¹`.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows() != self.cols() {
            return Err(Error::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        let base_inv = match self.augment().inverse() {
            Ok(m) => Self::from_constant(m),
            Err(Error::Singular) => return Err(Error::NotInvertible),
            Err(e) => return Err(e),
        };
        let inv = base_inv.mul(self)?.mul(&base_inv)?;
        let id = Self::identity(self.rows());
        if inv.mul(self)? != id || self.mul(&inv)? != id {
            return Err(Error::Internal(
                "group-ring inverse failed to multiply back to the identity".into(),
            ));
        }
        Ok(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.constant.is_identity() && self.linear.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.is_zero()
    }

    /// Entries rendered canonically, row by row.
    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (1..=self.rows())
            .map(|i| {
                (1..=self.cols())
                    .map(|j| self.get(i, j).render().to_string())
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for GroupRingMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .render_rows()
            .into_iter()
            .map(|r| format!("[{}]", r.join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Dense matrix over `Z[Z₂]`. Only the operations the Fox-calculus layer
/// needs: entry access, products, and reduction mod 2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingMatrixZ {
    rows: usize,
    cols: usize,
    entries: Vec<GroupRingElementZ>,
}

impl GroupRingMatrixZ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![GroupRingElementZ::ZERO; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> GroupRingElementZ {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, e: GroupRingElementZ) {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        self.entries[(i - 1) * self.cols + (j - 1)] = e;
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 1..=self.rows {
            for j in 1..=other.cols {
                let mut acc = GroupRingElementZ::ZERO;
                for k in 1..=self.cols {
                    acc = acc + self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mod2(&self) -> GroupRingMatrix2 {
        let mut out = GroupRingMatrix2::zeros(self.rows, self.cols);
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                out.set(i, j, self.get(i, j).mod2());
            }
        }
        out
    }

    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (1..=self.rows)
            .map(|i| {
                (1..=self.cols)
                    .map(|j| self.get(i, j).to_string())
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for GroupRingMatrixZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .render_rows()
            .into_iter()
            .map(|r| format!("[{}]", r.join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
