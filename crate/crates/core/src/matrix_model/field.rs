//! Arithmetic in a prime field `F_p`.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u8,
    generator: u8,
}

impl PrimeField {
    pub fn new(p: u8) -> Result<Self> {
        if !matches!(p, 2 | 3 | 5) {
            return Err(Error::MatrixModel(format!(
                "q = {p} unsupported; use a prime in {{2, 3, 5}}"
            )));
        }
        let generator = (1..p)
            .find(|&g| {
                let mut x = 1u32;
                (1..p - 1).all(|_| {
                    x = x * g as u32 % p as u32;
                    x != 1
                })
            })
            .expect("prime fields have primitive roots");
        Ok(PrimeField { p, generator })
    }

    pub fn order(self) -> u8 {
        self.p
    }

    /// A generator of the multiplicative group.
    pub fn primitive_root(self) -> u8 {
        self.generator
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.p as u16 - b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    pub fn inv(self, a: u8) -> u8 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        (1..self.p).find(|&x| self.mul(a, x) == 1).unwrap()
    }

    pub fn neg(self, a: u8) -> u8 {
        self.sub(0, a)
    }
}
