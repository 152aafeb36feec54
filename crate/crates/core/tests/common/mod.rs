//! Independent reference computations shared by the integration tests.
//!
//! Group elements are integer matrices acting on simple-root coordinates,
//! built straight from the Cartan matrix, so nothing here goes through the
//! library's enumeration tables.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use orbits_core::{CartanMatrix, WeylElement, WeylGroup};

pub type IntMat = Vec<i64>;

pub struct MatrixGroup {
    pub rank: usize,
    pub gens: Vec<IntMat>,
}

impl MatrixGroup {
    pub fn new(cartan: &CartanMatrix) -> Self {
        let n = cartan.rank();
        // s_i(β) = β − (Σ_j a_ij β_j) α_i, as a matrix on column vectors
        let gens = (0..n)
            .map(|i| {
                let mut m = identity(n);
                for j in 0..n {
                    m[i * n + j] -= cartan.entry(i, j) as i64;
                }
                m
            })
            .collect();
        MatrixGroup { rank: n, gens }
    }

    pub fn word_matrix(&self, word: &[u8]) -> IntMat {
        word.iter().fold(identity(self.rank), |acc, &i| {
            mat_mul(&acc, &self.gens[i as usize], self.rank)
        })
    }

    pub fn element_matrix(&self, g: &WeylGroup, w: WeylElement) -> IntMat {
        self.word_matrix(g.word(w))
    }

    /// Order of the subgroup generated by the listed generators.
    pub fn subgroup_order(&self, subset: &[usize]) -> usize {
        let id = identity(self.rank);
        let mut seen: HashSet<IntMat> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(m) = queue.pop_front() {
            for &i in subset {
                let x = mat_mul(&m, &self.gens[i], self.rank);
                if seen.insert(x.clone()) {
                    queue.push_back(x);
                }
            }
        }
        seen.len()
    }

    /// Products of all subwords of `word`.
    pub fn subword_products(&self, word: &[u8]) -> HashSet<IntMat> {
        let mut out = HashSet::new();
        for mask in 0u32..(1 << word.len()) {
            let sub: Vec<u8> = word
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &i)| i)
                .collect();
            out.insert(self.word_matrix(&sub));
        }
        out
    }

    /// Number of positive roots sent negative, found by acting on the
    /// reflection-closure of the simple roots.
    pub fn inversion_count(&self, m: &IntMat, positive_roots: &[Vec<i64>]) -> usize {
        positive_roots
            .iter()
            .filter(|r| {
                let img = mat_vec(m, r, self.rank);
                img.iter().all(|&x| x <= 0)
            })
            .count()
    }

    /// Positive roots generated by reflecting simple roots.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        while let Some(v) = queue.pop_front() {
            if !seen.insert(v.clone()) {
                continue;
            }
            for g in &self.gens {
                let w = mat_vec(g, &v, n);
                if w.iter().all(|&x| x >= 0) && !seen.contains(&w) {
                    queue.push_back(w);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        out
    }
}

pub fn identity(n: usize) -> IntMat {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

pub fn mat_mul(a: &IntMat, b: &IntMat, n: usize) -> IntMat {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    c[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    c
}

pub fn mat_vec(a: &IntMat, v: &[i64], n: usize) -> Vec<i64> {
    (0..n)
        .map(|i| (0..n).map(|j| a[i * n + j] * v[j]).sum())
        .collect()
}

/// Bruhat order by the subword property on the canonical reduced word of
/// `w`, evaluated with matrices.
pub fn subword_leq(mg: &MatrixGroup, g: &WeylGroup, u: WeylElement, w: WeylElement) -> bool {
    mg.subword_products(g.word(w))
        .contains(&mg.element_matrix(g, u))
}

/// `Σ_J |W|² / |W_J|` with orders from matrix closures.
pub fn label_count_formula(mg: &MatrixGroup) -> usize {
    let n = mg.rank;
    let all: Vec<usize> = (0..n).collect();
    let w = mg.subgroup_order(&all);
    (0u32..(1 << n))
        .map(|bits| {
            let sub: Vec<usize> = (0..n).filter(|&i| bits & (1 << i) != 0).collect();
            w * w / mg.subgroup_order(&sub)
        })
        .sum()
}
