//! Cartan matrices: validation and the named finite types.
//!
//! Entries follow the convention `a[i][j] = ⟨α_i^∨, α_j⟩`, so the simple
//! reflection `s_i` sends `α_j` to `α_j - a[i][j]·α_i`. Named types use
//! Bourbaki numbering.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CartanMatrix(Vec<Vec<i32>>);

impl CartanMatrix {
    /// Validates `rows` as a Cartan matrix of finite type.
    pub fn new(rows: Vec<Vec<i32>>) -> Result<Self> {
        validate(&rows)?;
        Ok(CartanMatrix(rows))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.0[i][j]
    }

    pub fn rows(&self) -> &[Vec<i32>] {
        &self.0
    }

    /// Parses a type name such as `A3`, `G2`, `E6` or a product `A1xB2`.
    /// `A0` is the empty (rank 0) system.
    pub fn from_type(name: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for part in name.split(['x', 'X', '×']) {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::UnknownType(name.to_string()));
            }
            blocks.push(simple_type(part).ok_or_else(|| Error::UnknownType(name.to_string()))?);
        }
        let rank: usize = blocks.iter().map(Vec::len).sum();
        let mut rows = vec![vec![0; rank]; rank];
        let mut offset = 0;
        for b in &blocks {
            for (i, row) in b.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    rows[offset + i][offset + j] = x;
                }
            }
            offset += b.len();
        }
        CartanMatrix::new(rows)
    }
}

impl fmt::Debug for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

fn simple_type(name: &str) -> Option<Vec<Vec<i32>>> {
    let mut chars = name.chars();
    let letter = chars.next()?.to_ascii_uppercase();
    let n: usize = chars.as_str().parse().ok()?;
    let chain = |n: usize| {
        let mut m = vec![vec![0; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        m
    };
    match (letter, n) {
        ('A', n) => Some(chain(n)),
        ('B', n) if n >= 2 => {
            let mut m = chain(n);
            m[n - 1][n - 2] = -2;
            Some(m)
        }
        ('C', n) if n >= 2 => {
            let mut m = chain(n);
            m[n - 2][n - 1] = -2;
            Some(m)
        }
        ('D', n) if n >= 3 => {
            let mut m = chain(n);
            m[n - 2][n - 1] = 0;
            m[n - 1][n - 2] = 0;
            m[n - 3][n - 1] = -1;
            m[n - 1][n - 3] = -1;
            Some(m)
        }
        ('E', n) if (6..=8).contains(&n) => {
            // 1-3-4-5-…-n with 2 attached to 4
            let mut m = vec![vec![0; n]; n];
            let mut edges = vec![(0, 2), (1, 3), (2, 3)];
            for i in 3..n - 1 {
                edges.push((i, i + 1));
            }
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 2;
            }
            for (a, b) in edges {
                m[a][b] = -1;
                m[b][a] = -1;
            }
            Some(m)
        }
        ('F', 4) => {
            let mut m = chain(4);
            m[2][1] = -2;
            Some(m)
        }
        ('G', 2) => Some(vec![vec![2, -3], vec![-1, 2]]),
        _ => None,
    }
}

fn validate(rows: &[Vec<i32>]) -> Result<()> {
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidCartan(format!(
                "row {} has length {}, expected {n}",
                i + 1,
                row.len()
            )));
        }
        if row[i] != 2 {
            return Err(Error::InvalidCartan(format!(
                "diagonal entry ({0},{0}) is {1}, expected 2",
                i + 1,
                row[i]
            )));
        }
    }
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if rows[i][j] > 0 {
                return Err(Error::InvalidCartan(format!(
                    "off-diagonal entry ({},{}) is positive",
                    i + 1,
                    j + 1
                )));
            }
            if (rows[i][j] == 0) != (rows[j][i] == 0) {
                return Err(Error::InvalidCartan(format!(
                    "entries ({0},{1}) and ({1},{0}) are not both zero or both nonzero",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let d = symmetrizer(rows)?;
    // D·A is symmetric; finite type iff it is positive definite.
    let sym: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| d[i] * rows[i][j] as i128).collect())
        .collect();
    for k in 1..=n {
        if leading_minor(&sym, k) <= 0 {
            return Err(Error::InvalidCartan(format!(
                "not of finite type: symmetrization fails positive definiteness \
                 (leading principal minor of order {k} is not positive)"
            )));
        }
    }
    Ok(())
}

/// Positive integers `d_i` with `d_i·a_ij = d_j·a_ji`.
fn symmetrizer(rows: &[Vec<i32>]) -> Result<Vec<i128>> {
    let n = rows.len();
    // rational d_i = num/den, propagated along the Dynkin graph
    let mut d: Vec<Option<(i128, i128)>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some((1, 1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let (ni, di) = d[i].unwrap();
            for j in 0..n {
                if i == j || rows[i][j] == 0 {
                    continue;
                }
                // d_j = d_i·a_ij / a_ji
                let num = ni * rows[i][j] as i128;
                let den = di * rows[j][i] as i128;
                let g = gcd(num.abs(), den.abs());
                let (num, den) = (num / g * den.signum(), den.abs() / g);
                match d[j] {
                    None => {
                        d[j] = Some((num, den));
                        stack.push(j);
                    }
                    Some((nj, dj)) => {
                        if nj * den != num * dj {
                            return Err(Error::InvalidCartan(
                                "matrix is not symmetrizable".to_string(),
                            ));
                        }
                    }
                }
            }
        }
    }
    let l = d.iter().fold(1i128, |acc, x| {
        let den = x.unwrap().1;
        acc / gcd(acc, den) * den
    });
    Ok(d.into_iter()
        .map(|x| {
            let (num, den) = x.unwrap();
            num * (l / den)
        })
        .collect())
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

/// Fraction-free (Bareiss) determinant of the leading `k×k` block.
fn leading_minor(m: &[Vec<i128>], k: usize) -> i128 {
    let mut a: Vec<Vec<i128>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for p in 0..k {
        if a[p][p] == 0 {
            match (p + 1..k).find(|&r| a[r][p] != 0) {
                Some(r) => {
                    a.swap(p, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
            }
        }
        prev = a[p][p];
    }
    if k == 0 {
        1
    } else {
        sign * a[k - 1][k - 1]
    }
}
