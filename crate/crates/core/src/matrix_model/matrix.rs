//! Small square matrices over a prime field.

use std::fmt;

use super::field::PrimeField;

pub const MAX_N: usize = 3;

/// An `n×n` matrix, `n ≤ 3`, entries stored row-major.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    n: u8,
    e: [u8; MAX_N * MAX_N],
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl Mat {
    pub fn zero(n: usize) -> Self {
        assert!((1..=MAX_N).contains(&n));
        Mat {
            n: n as u8,
            e: [0; MAX_N * MAX_N],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag(&vec![1; n])
    }

    pub fn diag(d: &[u8]) -> Self {
        let mut m = Self::zero(d.len());
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let mut m = Self::zero(rows.len());
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), rows.len());
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// `I + c·E_ij`.
    pub fn elementary(n: usize, i: usize, j: usize, c: u8) -> Self {
        let mut m = Self::identity(n);
        m.set(i, j, c);
        m
    }

    /// Permutation matrix with `M e_j = e_{perm[j]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let mut m = Self::zero(perm.len());
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, 1);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.e[i * MAX_N + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u8) {
        self.e[i * MAX_N + j] = x;
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = u8> + '_ {
        let n = self.n();
        (0..n).flat_map(move |i| (0..n).map(move |j| self.get(i, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries().all(|x| x == 0)
    }

    pub fn mul(&self, other: &Mat, f: PrimeField) -> Mat {
        let n = self.n();
        let mut m = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for k in 0..n {
                    acc = f.add(acc, f.mul(self.get(i, k), other.get(k, j)));
                }
                m.set(i, j, acc);
            }
        }
        m
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n();
        let mut m = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.set(j, i, self.get(i, j));
            }
        }
        m
    }

    pub fn scale(&self, c: u8, f: PrimeField) -> Mat {
        let mut m = *self;
        for x in m.e.iter_mut() {
            *x = f.mul(*x, c);
        }
        m
    }

    pub fn det(&self, f: PrimeField) -> u8 {
        match self.n() {
            1 => self.get(0, 0),
            n => (0..n).fold(0, |acc, j| {
                f.add(acc, f.mul(self.get(0, j), self.cofactor_entry(0, j, f)))
            }),
        }
    }

    fn minor(&self, i: usize, j: usize) -> Mat {
        let n = self.n();
        let mut m = Mat::zero(n - 1);
        for (a, r) in (0..n).filter(|&r| r != i).enumerate() {
            for (b, c) in (0..n).filter(|&c| c != j).enumerate() {
                m.set(a, b, self.get(r, c));
            }
        }
        m
    }

    fn cofactor_entry(&self, i: usize, j: usize, f: PrimeField) -> u8 {
        let d = self.minor(i, j).det(f);
        if (i + j).is_multiple_of(2) {
            d
        } else {
            f.neg(d)
        }
    }

    /// Cofactor matrix `C` with `M·Cᵀ = det(M)·I`; multiplicative in `M`.
    pub fn cofactor(&self, f: PrimeField) -> Mat {
        let n = self.n();
        if n == 1 {
            return Mat::identity(1);
        }
        let mut m = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.cofactor_entry(i, j, f));
            }
        }
        m
    }

    pub fn inverse(&self, f: PrimeField) -> Option<Mat> {
        let d = self.det(f);
        if d == 0 {
            return None;
        }
        Some(self.cofactor(f).transpose().scale(f.inv(d), f))
    }

    /// Scalar multiple of the identity, returning the scalar.
    pub fn scalar_value(&self) -> Option<u8> {
        let n = self.n();
        let d = self.get(0, 0);
        (0..n)
            .all(|i| (0..n).all(|j| self.get(i, j) == if i == j { d } else { 0 }))
            .then_some(d)
    }

    /// Scales so the first nonzero entry in row-major order is 1.
    pub fn normalized(&self, f: PrimeField) -> Option<Mat> {
        let lead = self.entries().find(|&x| x != 0)?;
        Some(self.scale(f.inv(lead), f))
    }

    /// Base-`p` integer encoding of the entries.
    pub fn code(&self, f: PrimeField) -> u32 {
        self.entries()
            .fold(0, |acc, x| acc * f.order() as u32 + x as u32)
    }

    pub fn from_code(n: usize, mut code: u32, f: PrimeField) -> Mat {
        let p = f.order() as u32;
        let mut m = Mat::zero(n);
        for k in (0..n * n).rev() {
            m.set(k / n, k % n, (code % p) as u8);
            code /= p;
        }
        m
    }
}
