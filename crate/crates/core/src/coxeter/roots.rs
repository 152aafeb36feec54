//! Root systems generated from a Cartan matrix.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::coxeter::cartan::CartanMatrix;
use crate::error::{Error, Result};
use crate::subset::SimpleSet;

/// Coordinates of a root in the basis of simple roots.
pub type Root = Vec<i32>;

/// A finite root system, possibly non-reduced.
///
/// `positive_roots` lists the reduced positive roots first (sorted by height,
/// then lexicographically) followed by any doubled roots `2α`. The reduced
/// block is exactly the set of non-divisible positive roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanMatrix,
    positive_roots: Vec<Root>,
    reduced_count: usize,
    nondivisible: Vec<usize>,
    doubled: BTreeMap<usize, usize>,
    index: HashMap<Root, usize>,
    // reflect[i][k] = index of s_i(β_k) for reduced β_k ≠ α_i; k itself for β_k = α_i
    reflect: Vec<Vec<usize>>,
}

impl RootSystem {
    /// Builds the positive roots by closing the simple roots under the
    /// simple reflections. `nonreduced_marks` lists simple indices whose
    /// W-orbit receives doubled roots (type BC support).
    pub fn new(cartan: CartanMatrix, nonreduced_marks: &[usize]) -> Result<Self> {
        let rank = cartan.rank();
        let simple: Vec<Root> = (0..rank).map(|i| unit(rank, i)).collect();
        let mut seen: BTreeSet<(i32, Root)> = BTreeSet::new();
        let mut stack = simple.clone();
        let mut found: HashMap<Root, ()> = HashMap::new();
        while let Some(beta) = stack.pop() {
            if found.contains_key(&beta) {
                continue;
            }
            found.insert(beta.clone(), ());
            seen.insert((beta.iter().sum(), beta.clone()));
            for i in 0..rank {
                let img = reflect_root(&cartan, i, &beta);
                if img.iter().all(|&c| c >= 0)
                    && img.iter().any(|&c| c > 0)
                    && !found.contains_key(&img)
                {
                    stack.push(img);
                }
            }
        }
        let mut positive_roots: Vec<Root> = seen.into_iter().map(|(_, r)| r).collect();
        let reduced_count = positive_roots.len();
        let index: HashMap<Root, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();

        let reflect: Vec<Vec<usize>> = (0..rank)
            .map(|i| {
                (0..reduced_count)
                    .map(|k| {
                        let img = reflect_root(&cartan, i, &positive_roots[k]);
                        if img.iter().any(|&c| c < 0) {
                            k
                        } else {
                            index[&img]
                        }
                    })
                    .collect()
            })
            .collect();

        let mut rs = RootSystem {
            cartan,
            positive_roots: Vec::new(),
            reduced_count,
            nondivisible: (0..reduced_count).collect(),
            doubled: BTreeMap::new(),
            index,
            reflect,
        };

        let orbit = rs.root_orbits();
        let mut doubled = BTreeMap::new();
        for &m in nonreduced_marks {
            if m >= rank {
                return Err(Error::IndexOutOfRange { index: m + 1, rank });
            }
            let alpha = rs.index[&unit(rank, m)];
            for (k, beta) in positive_roots.iter().enumerate() {
                if rs.pairing(beta, m) % 2 != 0 {
                    return Err(Error::InvalidCartan(format!(
                        "simple root {} cannot be doubled: ⟨β, α^∨⟩ is odd for β = {:?}",
                        m + 1,
                        beta
                    )));
                }
                if orbit[k] == orbit[alpha] {
                    doubled.insert(k, ());
                }
            }
        }
        let doubles: Vec<usize> = doubled.into_keys().collect();
        for k in doubles {
            let twice: Root = positive_roots[k].iter().map(|c| 2 * c).collect();
            rs.doubled.insert(k, positive_roots.len());
            rs.index.insert(twice.clone(), positive_roots.len());
            positive_roots.push(twice);
        }
        rs.positive_roots = positive_roots;
        rs.nondivisible = (0..rs.positive_roots.len())
            .filter(|&k| {
                let r = &rs.positive_roots[k];
                !(r.iter().all(|c| c % 2 == 0)
                    && rs
                        .index
                        .contains_key(&r.iter().map(|c| c / 2).collect::<Root>()))
            })
            .collect();
        Ok(rs)
    }

    pub fn from_type(name: &str) -> Result<Self> {
        RootSystem::new(CartanMatrix::from_type(name)?, &[])
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// All positive roots, reduced block first, then doubles.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Number of positive roots of the underlying reduced system, `N = |Φ⁺_nd|`.
    pub fn reduced_count(&self) -> usize {
        self.reduced_count
    }

    /// Indices of `{α ∈ Φ⁺ | α/2 ∉ Φ}`.
    pub fn nondivisible_positive(&self) -> &[usize] {
        &self.nondivisible
    }

    /// Non-divisible root index ↦ index of its double.
    pub fn doubled(&self) -> &BTreeMap<usize, usize> {
        &self.doubled
    }

    pub fn is_reduced(&self) -> bool {
        self.doubled.is_empty()
    }

    pub fn root_index(&self, root: &[i32]) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        self.index[&unit(self.rank(), i)]
    }

    /// `⟨β, α_i^∨⟩`.
    pub fn pairing(&self, beta: &[i32], i: usize) -> i32 {
        beta.iter()
            .enumerate()
            .map(|(j, &b)| b * self.cartan.entry(i, j))
            .sum()
    }

    /// `s_i(β) = β - ⟨β, α_i^∨⟩·α_i`.
    pub fn reflect(&self, i: usize, beta: &[i32]) -> Root {
        reflect_root(&self.cartan, i, beta)
    }

    /// Reduced positive root index of `s_i(β_k)`, or `k` when `β_k = α_i`.
    pub(crate) fn reflect_positive(&self, i: usize, k: usize) -> usize {
        self.reflect[i][k]
    }

    /// W-orbit id for each reduced positive root (ids are the smallest
    /// member index of the orbit).
    pub fn root_orbits(&self) -> Vec<usize> {
        let n = self.reduced_count;
        let mut orbit = vec![usize::MAX; n];
        for start in 0..n {
            if orbit[start] != usize::MAX {
                continue;
            }
            orbit[start] = start;
            let mut stack = vec![start];
            while let Some(k) = stack.pop() {
                for i in 0..self.rank() {
                    let j = self.reflect[i][k];
                    if orbit[j] == usize::MAX {
                        orbit[j] = start;
                        stack.push(j);
                    }
                }
            }
        }
        orbit
    }

    /// Simple roots in the support of a reduced positive root.
    pub fn support(&self, k: usize) -> SimpleSet {
        SimpleSet::from_indices(
            self.positive_roots[k]
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, _)| i),
        )
    }

    /// `2ρ`, the sum of the reduced positive roots.
    pub(crate) fn two_rho(&self) -> Root {
        let mut v = vec![0; self.rank()];
        for r in &self.positive_roots[..self.reduced_count] {
            for (a, b) in v.iter_mut().zip(r) {
                *a += b;
            }
        }
        v
    }
}

fn unit(rank: usize, i: usize) -> Root {
    let mut v = vec![0; rank];
    v[i] = 1;
    v
}

fn reflect_root(cartan: &CartanMatrix, i: usize, beta: &[i32]) -> Root {
    let p: i32 = beta
        .iter()
        .enumerate()
        .map(|(j, &b)| b * cartan.entry(i, j))
        .sum();
    let mut out = beta.to_vec();
    out[i] -= p;
    out
}
