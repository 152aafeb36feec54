//! Closure order rebuilt from rank-one moves and boundary degenerations,
//! without the closed-form criterion.
//!
//! Within a stratum `J`, the closure of `O₂` is swept out by applying
//! rank-one parabolics, along the letters of a reduced expression for
//! `(σ₂ρ₂w₀, τ₂w_{0,J}w₀)`, to the closed orbit of the stratum. Every
//! subsequence of those letters names an orbit in the closure. Across
//! strata, the components of `closure(O) ∩ X_I` for maximal `I ⊊ O.I`
//! are added, and the transitive closure is taken.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use crate::coxeter::WeylElement;
use crate::error::{Error, Result};
use crate::orbit::{ClosurePoset, OrbitLabel, OrbitModel, Side};
use crate::subset::SimpleSet;

/// Which reduced expression to read moves from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExpressionChoice {
    /// Canonical (ShortLex-minimal) words, left factor first.
    #[default]
    ShortLex,
    /// Lexicographically largest reduced words, right factor first.
    Alternate,
}

/// A sequence of rank-one moves and its endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveTrace {
    pub start: OrbitLabel,
    pub moves: Vec<(Side, usize)>,
    pub end: OrbitLabel,
}

impl MoveTrace {
    /// Applies the moves to `start` and checks the result equals `end`.
    pub fn replay(&self, model: &OrbitModel) -> bool {
        let got = self
            .moves
            .iter()
            .fold(self.start, |o, &(side, a)| model.rank1_act(&o, side, a));
        got == self.end
    }
}

/// Pairs present in exactly one of two posets over the same labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PosetDiff {
    /// `(a, b)` with `a ≤ b` only in the first poset.
    pub only_first: Vec<(OrbitLabel, OrbitLabel)>,
    /// `(a, b)` with `a ≤ b` only in the second poset.
    pub only_second: Vec<(OrbitLabel, OrbitLabel)>,
}

impl PosetDiff {
    pub fn is_empty(&self) -> bool {
        self.only_first.is_empty() && self.only_second.is_empty()
    }

    pub fn len(&self) -> usize {
        self.only_first.len() + self.only_second.len()
    }
}

/// `canonicalize(J, w₀, w₀·w_{0,J})`, the closed orbit of stratum `J`.
pub fn minimal_orbit(model: &OrbitModel, j: SimpleSet) -> OrbitLabel {
    let g = model.group();
    let w0 = g.longest();
    model.canonicalize(j, w0, g.mul(w0, g.longest_element(j)))
}

fn lex_max_word(model: &OrbitModel, w: WeylElement) -> Vec<u8> {
    let g = model.group();
    let mut w = w;
    let mut out = Vec::with_capacity(g.length(w));
    while !w.is_identity() {
        let d = g.left_descents(w).bits();
        let i = 31 - d.leading_zeros() as usize;
        out.push(i as u8);
        w = g.left_mul_generator(i, w);
    }
    out
}

fn move_letters(
    model: &OrbitModel,
    o2: &OrbitLabel,
    choice: ExpressionChoice,
) -> Vec<(Side, usize)> {
    let g = model.group();
    let w0 = g.longest();
    let x = g.mul(g.mul(o2.sigma, o2.rho), w0);
    let y = g.mul(g.mul(o2.tau, g.longest_element(o2.i)), w0);
    let tag = |side: Side, word: &[u8]| -> Vec<(Side, usize)> {
        word.iter().map(|&a| (side, a as usize)).collect()
    };
    match choice {
        ExpressionChoice::ShortLex => {
            let mut v = tag(Side::Left, g.word(x));
            v.extend(tag(Side::Right, g.word(y)));
            v
        }
        ExpressionChoice::Alternate => {
            let mut v = tag(Side::Right, &lex_max_word(model, y));
            v.extend(tag(Side::Left, &lex_max_word(model, x)));
            v
        }
    }
}

/// Every orbit reachable from the closed orbit of `O₂`'s stratum by a
/// subsequence of the moves, each with one trace realizing it.
pub fn subword_traces(
    model: &OrbitModel,
    o2: &OrbitLabel,
    choice: ExpressionChoice,
) -> BTreeMap<OrbitLabel, MoveTrace> {
    let start = minimal_orbit(model, o2.i);
    let letters = move_letters(model, o2, choice);
    let mut reached: BTreeMap<OrbitLabel, Vec<(Side, usize)>> = BTreeMap::from([(start, vec![])]);
    for &(side, a) in letters.iter().rev() {
        let new: Vec<(OrbitLabel, Vec<(Side, usize)>)> = reached
            .iter()
            .map(|(o, moves)| {
                let mut m = moves.clone();
                m.push((side, a));
                (model.rank1_act(o, side, a), m)
            })
            .collect();
        for (o, m) in new {
            reached.entry(o).or_insert(m);
        }
    }
    reached
        .into_iter()
        .map(|(end, moves)| (end, MoveTrace { start, moves, end }))
        .collect()
}

/// The orbits of `O₂`'s stratum lying in the closure of `O₂`.
pub fn subword_closure_same_stratum(
    model: &OrbitModel,
    o2: &OrbitLabel,
    choice: ExpressionChoice,
) -> BTreeSet<OrbitLabel> {
    subword_traces(model, o2, choice).into_keys().collect()
}

/// The closure poset generated by subword closures and maximal
/// degenerations, transitively closed.
pub fn oracle_poset(model: &OrbitModel) -> ClosurePoset {
    oracle_poset_with(model, ExpressionChoice::ShortLex)
}

pub fn oracle_poset_with(model: &OrbitModel, choice: ExpressionChoice) -> ClosurePoset {
    let labels = model.enumerate_orbits(None);
    let n = labels.len();
    let index: HashMap<OrbitLabel, usize> =
        labels.iter().enumerate().map(|(k, &o)| (o, k)).collect();
    // below[j] = generating set of labels under labels[j]
    let below: Vec<Vec<usize>> = labels
        .par_iter()
        .map(|o| {
            let mut v: Vec<usize> = subword_closure_same_stratum(model, o, choice)
                .iter()
                .map(|l| index[l])
                .collect();
            for a in o.i.iter() {
                let i = o.i.remove(a);
                v.extend(model.intersection_components(o, i).iter().map(|l| index[l]));
            }
            v
        })
        .collect();
    let words = n.div_ceil(64).max(1);
    let mut up = vec![0u64; n * words];
    for (j, list) in below.iter().enumerate() {
        for &i in list {
            up[i * words + j / 64] |= 1 << (j % 64);
        }
        up[j * words + j / 64] |= 1 << (j % 64);
    }
    // Warshall on bit rows
    for k in 0..n {
        let row_k: Vec<u64> = up[k * words..(k + 1) * words].to_vec();
        up.par_chunks_mut(words).for_each(|row| {
            if row[k / 64] & (1 << (k % 64)) != 0 {
                for (r, x) in row.iter_mut().zip(&row_k) {
                    *r |= x;
                }
            }
        });
    }
    ClosurePoset::from_relation(model, labels, |i, j| {
        up[i * words + j / 64] & (1 << (j % 64)) != 0
    })
}

/// Ordered pairs related in exactly one of the two posets.
pub fn compare_posets(p1: &ClosurePoset, p2: &ClosurePoset) -> Result<PosetDiff> {
    if p1.len() != p2.len() || p1.labels().iter().any(|o| p2.index_of(o).is_none()) {
        return Err(Error::LabelUniverseMismatch);
    }
    let map: Vec<usize> = p1
        .labels()
        .iter()
        .map(|o| p2.index_of(o).expect("checked above"))
        .collect();
    let n = p1.len();
    let mut diff = PosetDiff::default();
    for i in 0..n {
        for j in 0..n {
            let a = p1.leq(i, j);
            let b = p2.leq(map[i], map[j]);
            let pair = (p1.labels()[i], p1.labels()[j]);
            match (a, b) {
                (true, false) => diff.only_first.push(pair),
                (false, true) => diff.only_second.push(pair),
                _ => {}
            }
        }
    }
    Ok(diff)
}
