//! Brute-force model of the wonderful compactification of `PGL_n` over
//! `F_q` for `n ∈ {2, 3}` and `q ∈ {2, 3, 5}`.
//!
//! Points are stored projectively with the first nonzero entry equal to 1.
//! For `n = 2` the compactification is `P(M_2)`. For `n = 3` it is the space
//! of complete collineations: pairs `([A], [C])` in `P(M_3) × P(M_3)` with
//! `A·Cᵀ = Cᵀ·A = λ·I`, where `C` plays the role of the cofactor matrix of
//! `A` (so `([A], [Cof A])` for invertible `A`).
//!
//! The Borel pair acts by `(p, q)·A = p·A·q⁻¹` with `p` upper and `q` lower
//! triangular, and on the second factor through cofactors.

mod field;
mod matrix;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use serde::Serialize;

pub use field::PrimeField;
pub use matrix::Mat;

use crate::coxeter::{WeylElement, WeylGroup};
use crate::error::{Error, Result};
use crate::orbit::{OrbitLabel, OrbitModel};
use crate::subset::SimpleSet;

/// Largest `q^{n²}` enumerated.
pub const POINT_BUDGET: u64 = 2_000_000;

/// A point of the compactification: `[A]`, plus `[C]` when `n = 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub a: Mat,
    pub c: Option<Mat>,
}

/// Invertible upper and lower triangular matrices modulo scalars.
#[derive(Clone, Debug)]
pub struct BorelPair {
    pub upper: Vec<Mat>,
    pub lower: Vec<Mat>,
}

impl BorelPair {
    pub fn new(n: usize, f: PrimeField) -> Self {
        let triangular = |upper: bool| -> Vec<Mat> {
            let q = f.order() as u32;
            (0..q.pow((n * n) as u32))
                .map(|code| Mat::from_code(n, code, f))
                .filter(|m| {
                    (0..n).all(|i| {
                        (0..n).all(|j| {
                            let zero_side = if upper { i > j } else { i < j };
                            !zero_side || m.get(i, j) == 0
                        })
                    })
                })
                .filter(|m| m.get(0, 0) == 1 && m.det(f) != 0)
                .collect()
        };
        BorelPair {
            upper: triangular(true),
            lower: triangular(false),
        }
    }
}

/// Assignment of every orbit label to the orbit of its representative.
#[derive(Clone, Debug)]
pub struct LabelMatching {
    pub orbits: Vec<Vec<Point>>,
    /// `(label, orbit index)` in label order.
    pub assignment: Vec<(OrbitLabel, usize)>,
}

/// One Bruhat cell of the group compared against its predicted size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellCheck {
    pub label: OrbitLabel,
    pub expected: u64,
    pub actual: u64,
}

#[derive(Clone, Debug)]
pub struct CellReport {
    pub orbit_count: usize,
    pub weyl_order: usize,
    pub cells: Vec<CellCheck>,
}

impl CellReport {
    pub fn ok(&self) -> bool {
        self.orbit_count == self.weyl_order
            && self.cells.len() == self.weyl_order
            && self.cells.iter().all(|c| c.expected == c.actual)
    }
}

#[derive(Serialize)]
struct DumpEntry {
    label: String,
    size: usize,
    representative: DumpPoint,
}

#[derive(Serialize)]
#[serde(untagged)]
enum DumpPoint {
    Single(Vec<Vec<u8>>),
    Pair { a: Vec<Vec<u8>>, c: Vec<Vec<u8>> },
}

pub struct MatrixModel {
    n: usize,
    field: PrimeField,
    model: OrbitModel,
}

impl MatrixModel {
    pub fn new(n: usize, q: u8) -> Result<Self> {
        if !matches!(n, 2 | 3) {
            return Err(Error::MatrixModel(format!(
                "n = {n} unsupported; use 2 or 3"
            )));
        }
        let field = PrimeField::new(q)?;
        if (q as u64).pow((n * n) as u32) > POINT_BUDGET {
            return Err(Error::MatrixModel("point budget exceeded".into()));
        }
        let model = OrbitModel::new(Arc::new(WeylGroup::from_type(&format!("A{}", n - 1))?));
        Ok(MatrixModel { n, field, model })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u8 {
        self.field.order()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn orbit_model(&self) -> &OrbitModel {
        &self.model
    }

    /// `(q^{n²} − 1)/(q − 1)`.
    pub fn projective_space_size(&self) -> u64 {
        let q = self.q() as u64;
        (q.pow((self.n * self.n) as u32) - 1) / (q - 1)
    }

    /// All points of `P(M_n)`, i.e. nonzero matrices up to scalars.
    pub fn enumerate_points(&self) -> Vec<Mat> {
        let f = self.field;
        let total = (f.order() as u32).pow((self.n * self.n) as u32);
        (1..total)
            .map(|code| Mat::from_code(self.n, code, f))
            .filter(|m| m.normalized(f).as_ref() == Some(m))
            .collect()
    }

    /// All points of the compactification, sorted.
    pub fn compactification_points(&self) -> Vec<Point> {
        let points = self.enumerate_points();
        if self.n == 2 {
            return points.into_iter().map(|a| Point { a, c: None }).collect();
        }
        let mut out = Vec::new();
        for a in points {
            for c in self.cofactor_partners(&a) {
                out.push(Point { a, c: Some(c) });
            }
        }
        out.sort();
        out
    }

    /// Normalized `C ≠ 0` with `A·Cᵀ = Cᵀ·A = λ·I` for some `λ`.
    fn cofactor_partners(&self, a: &Mat) -> Vec<Mat> {
        let f = self.field;
        let n = self.n;
        let vars = n * n + 1;
        let lambda = n * n;
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                // (A·Cᵀ)_ij = Σ_k A_ik C_jk
                let mut r = vec![0u8; vars];
                for k in 0..n {
                    r[j * n + k] = f.add(r[j * n + k], a.get(i, k));
                }
                if i == j {
                    r[lambda] = f.neg(1);
                }
                rows.push(r);
                // (Cᵀ·A)_ij = Σ_k C_ki A_kj
                let mut r = vec![0u8; vars];
                for k in 0..n {
                    r[k * n + i] = f.add(r[k * n + i], a.get(k, j));
                }
                if i == j {
                    r[lambda] = f.neg(1);
                }
                rows.push(r);
            }
        }
        let basis = nullspace(rows, vars, f);
        let d = basis.len();
        let q = f.order() as u32;
        let mut found = BTreeSet::new();
        for code in 1..q.pow(d as u32) {
            let mut x = vec![0u8; vars];
            let mut c = code;
            for b in &basis {
                let coef = (c % q) as u8;
                c /= q;
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi = f.add(*xi, f.mul(coef, *bi));
                }
            }
            let mut m = Mat::zero(n);
            for (k, &v) in x[..n * n].iter().enumerate() {
                m.set(k / n, k % n, v);
            }
            if let Some(m) = m.normalized(f) {
                found.insert(m);
            }
        }
        found.into_iter().collect()
    }

    fn act(&self, x: &Point, p: &Mat, q_inv: &Mat) -> Point {
        let f = self.field;
        let a = p
            .mul(&x.a, f)
            .mul(q_inv, f)
            .normalized(f)
            .expect("invertible action");
        let c = x.c.map(|c| {
            p.cofactor(f)
                .mul(&c, f)
                .mul(&q_inv.cofactor(f), f)
                .normalized(f)
                .expect("invertible action")
        });
        Point { a, c }
    }

    /// `(p, q⁻¹)` pairs: transvections and torus elements of each Borel.
    fn generators(&self) -> Vec<(Mat, Mat)> {
        let f = self.field;
        let n = self.n;
        let id = Mat::identity(n);
        let g = f.primitive_root();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i < j {
                    out.push((Mat::elementary(n, i, j, 1), id));
                } else if i > j {
                    let q = Mat::elementary(n, i, j, 1);
                    out.push((id, q.inverse(f).unwrap()));
                }
            }
        }
        if g != 1 {
            for i in 0..n {
                let mut d = vec![1u8; n];
                d[i] = g;
                let t = Mat::diag(&d);
                out.push((t, id));
                out.push((id, t.inverse(f).unwrap()));
            }
        }
        out
    }

    fn partition<T, F>(&self, points: &[T], step: F) -> Vec<Vec<T>>
    where
        T: Copy + Ord + std::hash::Hash,
        F: Fn(&T, &Mat, &Mat) -> T,
    {
        let gens = self.generators();
        let mut seen: HashMap<T, ()> = HashMap::with_capacity(points.len());
        let mut orbits = Vec::new();
        for &x in points {
            if seen.contains_key(&x) {
                continue;
            }
            seen.insert(x, ());
            let mut orbit = vec![x];
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                for (p, qi) in &gens {
                    let z = step(&y, p, qi);
                    if seen.insert(z, ()).is_none() {
                        orbit.push(z);
                        queue.push_back(z);
                    }
                }
            }
            orbit.sort();
            orbits.push(orbit);
        }
        orbits
    }

    /// Orbits of the Borel pair on the compactification, each sorted, listed
    /// by smallest member.
    pub fn orbit_partition(&self) -> Vec<Vec<Point>> {
        let pts = self.compactification_points();
        let mut orbits = self.partition(&pts, |x, p, qi| self.act(x, p, qi));
        orbits.sort();
        orbits
    }

    /// Orbits of the same action on `P(M_n)` itself.
    pub fn projective_space_orbits(&self) -> Vec<Vec<Mat>> {
        let f = self.field;
        let pts = self.enumerate_points();
        let mut orbits = self.partition(&pts, |m, p, qi| {
            p.mul(m, f).mul(qi, f).normalized(f).unwrap()
        });
        orbits.sort();
        orbits
    }

    pub fn borel_pair(&self) -> BorelPair {
        BorelPair::new(self.n, self.field)
    }

    /// Permutation matrix of a Weyl group element, `s_i` swapping `i, i+1`.
    pub fn permutation_matrix(&self, w: WeylElement) -> Mat {
        let g = self.model.group();
        let mut perm: Vec<usize> = (0..self.n).collect();
        for &i in g.word(w).iter().rev() {
            for x in perm.iter_mut() {
                if *x == i as usize {
                    *x = i as usize + 1;
                } else if *x == i as usize + 1 {
                    *x = i as usize;
                }
            }
        }
        Mat::permutation(&perm)
    }

    /// Exponents of the dominant cocharacter degenerating the identity to
    /// `b_I`: `a_k = #{j ≥ k : j ∉ I}` over simple indices.
    fn cocharacter(&self, i: SimpleSet) -> Vec<u32> {
        (0..self.n)
            .map(|k| (k..self.n - 1).filter(|&j| !i.contains(j)).count() as u32)
            .collect()
    }

    /// `b_I = lim_{t→0} λ(t)·1`, each factor keeping its lowest-order
    /// diagonal entries. `I = Δ` gives the identity.
    pub fn base_point(&self, i: SimpleSet) -> Point {
        let a = self.cocharacter(i);
        let keep_min = |exps: &[u32]| {
            let lo = *exps.iter().min().unwrap();
            Mat::diag(&exps.iter().map(|&x| u8::from(x == lo)).collect::<Vec<_>>())
        };
        let first = keep_min(&a);
        let second = (self.n == 3).then(|| {
            let sum: u32 = a.iter().sum();
            keep_min(&a.iter().map(|x| sum - x).collect::<Vec<_>>())
        });
        Point {
            a: first,
            c: second,
        }
    }

    /// `(σρ, τ)·b_I` with permutation matrices.
    pub fn representative(&self, o: &OrbitLabel) -> Point {
        let g = self.model.group();
        self.translate(&self.base_point(o.i), g.mul(o.sigma, o.rho), o.tau)
    }

    /// `(x, y)·b = x·b·y⁻¹` for Weyl group elements.
    pub fn translate(&self, b: &Point, x: WeylElement, y: WeylElement) -> Point {
        let f = self.field;
        let px = self.permutation_matrix(x);
        let py_inv = self.permutation_matrix(y).inverse(f).unwrap();
        self.act(b, &px, &py_inv)
    }

    /// Maps each label to the orbit containing its representative and checks
    /// this is a bijection.
    pub fn label_matching(&self) -> Result<LabelMatching> {
        let orbits = self.orbit_partition();
        let mut where_is: HashMap<Point, usize> = HashMap::new();
        for (k, orbit) in orbits.iter().enumerate() {
            for &x in orbit {
                where_is.insert(x, k);
            }
        }
        let labels = self.model.enumerate_orbits(None);
        let mut owner: Vec<Option<OrbitLabel>> = vec![None; orbits.len()];
        let mut assignment = Vec::with_capacity(labels.len());
        for o in labels {
            let rep = self.representative(&o);
            let k = *where_is.get(&rep).ok_or_else(|| {
                Error::MatrixModel(format!(
                    "representative of {} is not a point of the compactification",
                    self.model.format_label(&o)
                ))
            })?;
            if let Some(prev) = owner[k] {
                return Err(Error::MatrixModel(format!(
                    "labels {} and {} land in the same orbit",
                    self.model.format_label(&prev),
                    self.model.format_label(&o)
                )));
            }
            owner[k] = Some(o);
            assignment.push((o, k));
        }
        if let Some(k) = owner.iter().position(Option::is_none) {
            return Err(Error::MatrixModel(format!(
                "orbit {} of size {} has no label ({} labels, {} orbits)",
                k,
                orbits[k].len(),
                assignment.len(),
                orbits.len()
            )));
        }
        Ok(LabelMatching { orbits, assignment })
    }

    /// Orbits on invertible points are the cells `(Δ, e, e, ρ)`, of sizes
    /// `q^{2N − l(ρ)}(q−1)^{n−1}`.
    pub fn verify_group_cells(&self) -> CellReport {
        let f = self.field;
        let pts: Vec<Point> = self
            .compactification_points()
            .into_iter()
            .filter(|x| x.a.det(f) != 0)
            .collect();
        let orbits = self.partition(&pts, |x, p, qi| self.act(x, p, qi));
        let mut where_is: HashMap<Point, usize> = HashMap::new();
        for (k, orbit) in orbits.iter().enumerate() {
            for &x in orbit {
                where_is.insert(x, k);
            }
        }
        let full = self.model.full();
        let q = self.q() as i64;
        let cells = self
            .model
            .enumerate_orbits(Some(full))
            .into_iter()
            .map(|o| {
                let expected = self.model.point_count_poly(&o).unwrap().eval(q) as u64;
                let actual = where_is
                    .get(&self.representative(&o))
                    .map_or(0, |&k| orbits[k].len() as u64);
                CellCheck {
                    label: o,
                    expected,
                    actual,
                }
            })
            .collect();
        CellReport {
            orbit_count: orbits.len(),
            weyl_order: self.model.group().order(),
            cells,
        }
    }

    /// JSON list of `{label, size, representative}`.
    pub fn dump_json(&self, matching: &LabelMatching) -> String {
        let to_point = |x: &Point| match x.c {
            None => DumpPoint::Single(x.a.rows()),
            Some(c) => DumpPoint::Pair {
                a: x.a.rows(),
                c: c.rows(),
            },
        };
        let entries: Vec<DumpEntry> = matching
            .assignment
            .iter()
            .map(|(o, k)| DumpEntry {
                label: self.model.format_label(o),
                size: matching.orbits[*k].len(),
                representative: to_point(&self.representative(o)),
            })
            .collect();
        serde_json::to_string_pretty(&entries).expect("dump serializes")
    }
}

/// Basis of `{x : R·x = 0}` over `F_p`.
fn nullspace(mut rows: Vec<Vec<u8>>, vars: usize, f: PrimeField) -> Vec<Vec<u8>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..vars {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][col] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = f.inv(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && row[col] != 0 {
                let factor = row[col];
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(factor, p));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..vars).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = vec![0u8; vars];
            x[fc] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = f.neg(rows[row][fc]);
            }
            x
        })
        .collect()
}
