use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::label::OrbitLabel;
use super::model::OrbitModel;

/// A finite poset on orbit labels, stored as a bit matrix.
#[derive(Clone, Debug)]
pub struct ClosurePoset {
    labels: Vec<OrbitLabel>,
    names: Vec<String>,
    grades: Vec<i64>,
    index: HashMap<OrbitLabel, usize>,
    words: usize,
    // row i holds {j : labels[i] ≤ labels[j]}
    up: Vec<u64>,
    hasse: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct JsonPoset<'a> {
    labels: &'a [String],
    hasse: Vec<[usize; 2]>,
}

impl ClosurePoset {
    /// Builds the poset from a relation given pointwise; `leq(i, j)` means
    /// `labels[i] ≤ labels[j]`.
    pub fn from_relation<F>(model: &OrbitModel, labels: Vec<OrbitLabel>, leq: F) -> Self
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        let n = labels.len();
        let words = n.div_ceil(64);
        let mut up = vec![0u64; n * words];
        up.par_chunks_mut(words.max(1))
            .take(n)
            .enumerate()
            .for_each(|(i, row)| {
                for j in 0..n {
                    if leq(i, j) {
                        row[j / 64] |= 1 << (j % 64);
                    }
                }
            });
        Self::from_bits(model, labels, words, up)
    }

    fn from_bits(model: &OrbitModel, labels: Vec<OrbitLabel>, words: usize, up: Vec<u64>) -> Self {
        let names = labels.iter().map(|o| model.format_label(o)).collect();
        let grades = labels.iter().map(|o| model.grade(o)).collect();
        let index = labels.iter().enumerate().map(|(k, &o)| (o, k)).collect();
        let mut p = ClosurePoset {
            labels,
            names,
            grades,
            index,
            words,
            up,
            hasse: Vec::new(),
        };
        p.hasse = p.covers();
        p
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[OrbitLabel] {
        &self.labels
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, o: &OrbitLabel) -> Option<usize> {
        self.index.get(o).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i * self.words + j / 64] & (1 << (j % 64)) != 0
    }

    /// Covering pairs `(i, j)` with `labels[i] ⋖ labels[j]`.
    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    /// All pairs `(i, j)` with `i ≤ j`, including `i = j`.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (0..n).filter(move |&j| self.leq(i, j)).map(move |j| (i, j)))
            .collect()
    }

    /// A copy with the single pair `(i, j)` removed from the relation.
    pub fn without_pair(&self, model: &OrbitModel, i: usize, j: usize) -> Self {
        let mut up = self.up.clone();
        up[i * self.words + j / 64] &= !(1 << (j % 64));
        Self::from_bits(model, self.labels.clone(), self.words, up)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.len()).all(|i| self.leq(i, i))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (i + 1..n).all(|j| !(self.leq(i, j) && self.leq(j, i))))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.len();
        let w = self.words;
        (0..n).into_par_iter().all(|i| {
            let row = &self.up[i * w..(i + 1) * w];
            (0..n).filter(|&j| self.leq(i, j)).all(|j| {
                let other = &self.up[j * w..(j + 1) * w];
                other.iter().zip(row).all(|(o, r)| o & !r == 0)
            })
        })
    }

    fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let w = self.words;
        // down[j] = {i : i < j}
        let mut down = vec![0u64; n * w];
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq(i, j) {
                    down[j * w + i / 64] |= 1 << (i % 64);
                }
            }
        }
        let per_target: Vec<Vec<(usize, usize)>> = (0..n)
            .into_par_iter()
            .map(|j| {
                let mine = &down[j * w..(j + 1) * w];
                let mut shadow = vec![0u64; w];
                for k in 0..n {
                    if mine[k / 64] & (1 << (k % 64)) != 0 {
                        for (s, d) in shadow.iter_mut().zip(&down[k * w..(k + 1) * w]) {
                            *s |= d;
                        }
                    }
                }
                (0..n)
                    .filter(|&i| mine[i / 64] & !shadow[i / 64] & (1 << (i % 64)) != 0)
                    .map(|i| (i, j))
                    .collect()
            })
            .collect();
        let mut out: Vec<(usize, usize)> = per_target.into_iter().flatten().collect();
        out.sort_unstable();
        out
    }

    /// Graphviz rendering; nodes carry the serialized label and their grade
    /// as `rank`, edges point from the smaller orbit to the larger.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph closure {\n  rankdir=BT;\n  node [shape=box];\n");
        for (k, name) in self.names.iter().enumerate() {
            let _ = writeln!(s, "  n{k} [label=\"{name}\", rank={}];", self.grades[k]);
        }
        let mut by_grade: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (k, &g) in self.grades.iter().enumerate() {
            by_grade.entry(g).or_default().push(k);
        }
        for nodes in by_grade.values() {
            let list: Vec<String> = nodes.iter().map(|k| format!("n{k}")).collect();
            let _ = writeln!(s, "  {{ rank=same; {}; }}", list.join("; "));
        }
        for &(i, j) in &self.hasse {
            let _ = writeln!(s, "  n{i} -> n{j};");
        }
        s.push_str("}\n");
        s
    }

    /// `{"labels": [...], "hasse": [[i, j], ...]}`.
    pub fn to_json(&self) -> String {
        let doc = JsonPoset {
            labels: &self.names,
            hasse: self.hasse.iter().map(|&(i, j)| [i, j]).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("poset serializes")
    }

    /// One row per stratum: `stratum,count,min_dimension,max_dimension`.
    pub fn to_csv(&self) -> String {
        let mut rows: BTreeMap<_, (usize, i64, i64)> = BTreeMap::new();
        for (o, &g) in self.labels.iter().zip(&self.grades) {
            let e = rows.entry(o.i).or_insert((0, i64::MAX, i64::MIN));
            e.0 += 1;
            e.1 = e.1.min(g);
            e.2 = e.2.max(g);
        }
        let mut s = String::from("stratum,count,min_dimension,max_dimension\n");
        for (i, (count, lo, hi)) in rows {
            let _ = writeln!(s, "\"{i}\",{count},{lo},{hi}");
        }
        s
    }
}
