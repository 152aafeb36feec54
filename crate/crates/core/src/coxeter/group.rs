//! An enumerated finite Weyl group.
//!
//! Every element is stored once, in ShortLex order of its canonical word
//! (the lexicographically smallest reduced word). Elements are cheap
//! `Copy` handles into the group's tables.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::OnceLock;

use crate::coxeter::roots::{Root, RootSystem};
use crate::coxeter::weights::WeightFunction;
use crate::error::{Error, Result};
use crate::subset::SimpleSet;

static NEXT_GROUP_ID: AtomicU32 = AtomicU32::new(1);

/// Default limit on `|W|`.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupConfig {
    pub cap: usize,
}

impl Default for GroupConfig {
    fn default() -> Self {
        GroupConfig { cap: DEFAULT_CAP }
    }
}

/// Handle to an element of a [`WeylGroup`].
///
/// Ordering and equality follow the ShortLex order of canonical words.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    group: u32,
    index: u32,
}

impl WeylElement {
    /// Position in ShortLex order.
    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn is_identity(self) -> bool {
        self.index == 0
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w#{}", self.index)
    }
}

/// Outcome of multiplying `σ ∈ W^J` on the left by `s_α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trichotomy {
    /// `s_ασ ∈ W^J` and `l(s_ασ) = l(σ) - 1`.
    DescentInWJ,
    /// `s_ασ ∈ W^J` and `l(s_ασ) = l(σ) + 1`.
    AscentInWJ,
    /// `s_ασ = σ·s_β` with `β ∈ J`.
    Exchange(usize),
}

struct Parabolic {
    members: Vec<WeylElement>,
    min_reps: Vec<WeylElement>,
    longest: WeylElement,
}

pub struct WeylGroup {
    id: u32,
    roots: RootSystem,
    rank: usize,
    len: Vec<u16>,
    words: Vec<Vec<u8>>,
    lmul: Vec<u32>,
    rmul: Vec<u32>,
    inv: Vec<u32>,
    ldesc: Vec<u32>,
    rdesc: Vec<u32>,
    support: Vec<u32>,
    // L(w) = {α > 0 : w⁻¹α < 0} over reduced positive roots
    left_inversions: Vec<u128>,
    parabolics: Vec<OnceLock<Parabolic>>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("cartan", self.roots.cartan())
            .field("order", &self.order())
            .finish()
    }
}

impl WeylGroup {
    pub fn new(roots: RootSystem, config: GroupConfig) -> Result<Self> {
        let rank = roots.rank();
        if rank > 24 {
            return Err(Error::CapExceeded { cap: config.cap });
        }
        if roots.reduced_count() > 128 {
            return Err(Error::CapExceeded { cap: config.cap });
        }

        // Breadth-first enumeration of the orbit of 2ρ; BFS depth is length.
        let start = roots.two_rho();
        let mut vecs: Vec<Root> = vec![start.clone()];
        let mut lookup: HashMap<Root, u32> = HashMap::from([(start, 0)]);
        let mut bfs_len: Vec<u16> = vec![0];
        let mut bfs_lmul: Vec<u32> = Vec::new();
        let mut head = 0;
        while head < vecs.len() {
            let v = vecs[head].clone();
            for i in 0..rank {
                let img = roots.reflect(i, &v);
                let next = match lookup.get(&img) {
                    Some(&k) => k,
                    None => {
                        if vecs.len() >= config.cap {
                            return Err(Error::CapExceeded { cap: config.cap });
                        }
                        let k = vecs.len() as u32;
                        lookup.insert(img.clone(), k);
                        vecs.push(img);
                        bfs_len.push(bfs_len[head] + 1);
                        k
                    }
                };
                bfs_lmul.push(next);
            }
            head += 1;
        }
        let n = vecs.len();

        // s_i is a left descent of w iff ⟨w(2ρ), α_i^∨⟩ < 0.
        let bfs_ldesc: Vec<u32> = vecs
            .iter()
            .map(|v| {
                (0..rank)
                    .filter(|&i| roots.pairing(v, i) < 0)
                    .fold(0, |acc, i| acc | (1 << i))
            })
            .collect();
        drop(lookup);
        drop(vecs);

        // canonical words: smallest left descent first
        let mut bfs_words: Vec<Vec<u8>> = vec![Vec::new(); n];
        for w in 1..n {
            let i = bfs_ldesc[w].trailing_zeros() as usize;
            let rest = bfs_lmul[w * rank + i] as usize;
            let mut word = Vec::with_capacity(bfs_len[w] as usize);
            word.push(i as u8);
            word.extend_from_slice(&bfs_words[rest]);
            bfs_words[w] = word;
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            bfs_len[a]
                .cmp(&bfs_len[b])
                .then_with(|| bfs_words[a].cmp(&bfs_words[b]))
        });
        let mut new_of = vec![0u32; n];
        for (new, &old) in order.iter().enumerate() {
            new_of[old] = new as u32;
        }

        let len: Vec<u16> = order.iter().map(|&o| bfs_len[o]).collect();
        let ldesc: Vec<u32> = order.iter().map(|&o| bfs_ldesc[o]).collect();
        let mut lmul = vec![0u32; n * rank];
        for (new, &old) in order.iter().enumerate() {
            for i in 0..rank {
                lmul[new * rank + i] = new_of[bfs_lmul[old * rank + i] as usize];
            }
        }
        let words: Vec<Vec<u8>> = order
            .iter()
            .map(|&o| std::mem::take(&mut bfs_words[o]))
            .collect();

        let apply_word = |word: &[u8], mut x: u32| -> u32 {
            for &i in word.iter().rev() {
                x = lmul[x as usize * rank + i as usize];
            }
            x
        };
        let inv: Vec<u32> = (0..n)
            .map(|w| {
                let rev: Vec<u8> = words[w].iter().rev().copied().collect();
                apply_word(&rev, 0)
            })
            .collect();
        let mut rmul = vec![0u32; n * rank];
        let mut rdesc = vec![0u32; n];
        for w in 0..n {
            for i in 0..rank {
                let x = inv[lmul[inv[w] as usize * rank + i] as usize];
                rmul[w * rank + i] = x;
                if len[x as usize] < len[w] {
                    rdesc[w] |= 1 << i;
                }
            }
        }
        let support: Vec<u32> = words
            .iter()
            .map(|word| word.iter().fold(0, |acc, &i| acc | (1 << i)))
            .collect();

        // L(s_i w) = {α_i} ∪ s_i L(w) when s_i w > w
        let mut left_inversions = vec![0u128; n];
        for w in 1..n {
            let i = words[w][0] as usize;
            let rest = lmul[w * rank + i] as usize;
            let alpha = roots.simple_root_index(i);
            let mut mask = 1u128 << alpha;
            let mut bits = left_inversions[rest];
            while bits != 0 {
                let k = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                mask |= 1u128 << roots.reflect_positive(i, k);
            }
            left_inversions[w] = mask;
        }

        let parabolics = (0..(1usize << rank)).map(|_| OnceLock::new()).collect();
        Ok(WeylGroup {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            roots,
            rank,
            len,
            words,
            lmul,
            rmul,
            inv,
            ldesc,
            rdesc,
            support,
            left_inversions,
            parabolics,
        })
    }

    pub fn from_type(name: &str) -> Result<Self> {
        WeylGroup::new(RootSystem::from_type(name)?, GroupConfig::default())
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.len.len()
    }

    fn handle(&self, index: u32) -> WeylElement {
        WeylElement {
            group: self.id,
            index,
        }
    }

    pub fn owns(&self, w: WeylElement) -> bool {
        w.group == self.id
    }

    fn check(&self, w: WeylElement) -> Result<()> {
        if self.owns(w) {
            Ok(())
        } else {
            Err(Error::MixedParents)
        }
    }

    #[inline]
    fn own(&self, w: WeylElement) -> usize {
        assert_eq!(w.group, self.id, "element from a different Weyl group");
        w.index as usize
    }

    pub fn identity(&self) -> WeylElement {
        self.handle(0)
    }

    pub fn generator(&self, i: usize) -> WeylElement {
        assert!(i < self.rank);
        self.handle(self.lmul[i])
    }

    /// Every element exactly once, in ShortLex order.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = WeylElement> + '_ {
        (0..self.order() as u32).map(|i| self.handle(i))
    }

    pub fn element(&self, index: usize) -> WeylElement {
        assert!(index < self.order());
        self.handle(index as u32)
    }

    pub fn length(&self, w: WeylElement) -> usize {
        self.len[self.own(w)] as usize
    }

    /// Canonical (ShortLex-minimal) reduced word, 0-based generator indices.
    pub fn word(&self, w: WeylElement) -> &[u8] {
        &self.words[self.own(w)]
    }

    /// Dot-separated 1-based word, `e` for the identity.
    pub fn word_string(&self, w: WeylElement) -> String {
        let word = self.word(w);
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// Evaluates a (not necessarily reduced) word of 0-based indices.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut x = 0u32;
        for &i in word.iter().rev() {
            if i >= self.rank {
                return Err(Error::IndexOutOfRange {
                    index: i + 1,
                    rank: self.rank,
                });
            }
            x = self.lmul[x as usize * self.rank + i];
        }
        Ok(self.handle(x))
    }

    /// Parses `1.2.1` (1-based) or `e`.
    pub fn parse_word(&self, s: &str) -> Result<WeylElement> {
        let s = s.trim();
        if s == "e" || s.is_empty() {
            return Ok(self.identity());
        }
        let word =
            s.split('.')
                .map(|p| {
                    let i: usize = p.trim().parse().map_err(|_| {
                        Error::LabelParse(format!("bad generator `{p}` in word `{s}`"))
                    })?;
                    if i == 0 {
                        return Err(Error::IndexOutOfRange {
                            index: 0,
                            rank: self.rank,
                        });
                    }
                    Ok(i - 1)
                })
                .collect::<Result<Vec<_>>>()?;
        self.from_word(&word)
    }

    pub fn inverse(&self, w: WeylElement) -> WeylElement {
        self.handle(self.inv[self.own(w)])
    }

    /// `s_i·w`.
    pub fn left_mul_generator(&self, i: usize, w: WeylElement) -> WeylElement {
        self.handle(self.lmul[self.own(w) * self.rank + i])
    }

    /// `w·s_i`.
    pub fn right_mul_generator(&self, w: WeylElement, i: usize) -> WeylElement {
        self.handle(self.rmul[self.own(w) * self.rank + i])
    }

    /// Product `u·v`; panics if either element belongs to another group.
    pub fn mul(&self, u: WeylElement, v: WeylElement) -> WeylElement {
        let mut x = self.own(v);
        for &i in self.words[self.own(u)].iter().rev() {
            x = self.lmul[x * self.rank + i as usize] as usize;
        }
        self.handle(x as u32)
    }

    pub fn multiply(&self, u: WeylElement, v: WeylElement) -> Result<WeylElement> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.mul(u, v))
    }

    pub fn is_left_descent(&self, w: WeylElement, i: usize) -> bool {
        self.ldesc[self.own(w)] & (1 << i) != 0
    }

    pub fn is_right_descent(&self, w: WeylElement, i: usize) -> bool {
        self.rdesc[self.own(w)] & (1 << i) != 0
    }

    pub fn left_descents(&self, w: WeylElement) -> SimpleSet {
        SimpleSet::from_bits(self.ldesc[self.own(w)])
    }

    pub fn right_descents(&self, w: WeylElement) -> SimpleSet {
        SimpleSet::from_bits(self.rdesc[self.own(w)])
    }

    /// Generators occurring in any (equivalently every) reduced word.
    pub fn support(&self, w: WeylElement) -> SimpleSet {
        SimpleSet::from_bits(self.support[self.own(w)])
    }

    /// Bruhat order `u ≤ w`; panics on mixed parents.
    ///
    /// Uses the descent recursion: for a left descent `s` of `w`,
    /// `u ≤ w` iff `su ≤ sw` when `s` is also a descent of `u`, and
    /// `u ≤ sw` otherwise.
    pub fn leq(&self, u: WeylElement, w: WeylElement) -> bool {
        let mut u = self.own(u);
        let mut w = self.own(w);
        loop {
            if u == w {
                return true;
            }
            let (lu, lw) = (self.len[u], self.len[w]);
            if lu >= lw {
                return false;
            }
            if lu == 0 {
                return true;
            }
            let i = self.ldesc[w].trailing_zeros() as usize;
            w = self.lmul[w * self.rank + i] as usize;
            if self.ldesc[u] & (1 << i) != 0 {
                u = self.lmul[u * self.rank + i] as usize;
            }
        }
    }

    pub fn bruhat_leq(&self, u: WeylElement, w: WeylElement) -> Result<bool> {
        self.check(u)?;
        self.check(w)?;
        Ok(self.leq(u, w))
    }

    /// Image of a root (simple-root coordinates) under `w`.
    pub fn act_on_root(&self, w: WeylElement, beta: &[i32]) -> Root {
        let mut v = beta.to_vec();
        for &i in self.word(w).iter().rev() {
            v = self.roots.reflect(i as usize, &v);
        }
        v
    }

    /// Right inversions `{β > 0 : w(β) < 0}` as reduced positive root indices.
    pub fn inversions(&self, w: WeylElement) -> Vec<usize> {
        mask_indices(self.left_inversions[self.inv[self.own(w)] as usize])
    }

    /// Left inversions `{α > 0 : w⁻¹(α) < 0} = Φ⁺ ∩ w(Φ⁻)`.
    pub fn left_inversions(&self, w: WeylElement) -> Vec<usize> {
        mask_indices(self.left_inversions[self.own(w)])
    }

    pub(crate) fn left_inversion_mask(&self, w: WeylElement) -> u128 {
        self.left_inversions[self.own(w)]
    }

    /// `d(w) = Σ c(α)` over non-divisible `α ∈ Φ⁺ ∩ w(Φ⁻)`.
    pub fn weighted_length(&self, w: WeylElement, c: &WeightFunction) -> u64 {
        let mut bits = self.left_inversion_mask(w);
        let mut total = 0u64;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            total += c.weight(k) as u64;
        }
        total
    }

    fn parabolic(&self, j: SimpleSet) -> &Parabolic {
        let bits = j.bits() as usize;
        assert!(
            bits < self.parabolics.len(),
            "subset {j} outside rank {}",
            self.rank
        );
        self.parabolics[bits].get_or_init(|| {
            let members: Vec<WeylElement> = self
                .elements()
                .filter(|&w| self.support(w).is_subset(j))
                .collect();
            let min_reps: Vec<WeylElement> = self
                .elements()
                .filter(|&w| self.right_descents(w).bits() & j.bits() == 0)
                .collect();
            let longest = *members
                .iter()
                .max_by_key(|&&w| self.length(w))
                .expect("W_J contains the identity");
            Parabolic {
                members,
                min_reps,
                longest,
            }
        })
    }

    /// Elements of the parabolic subgroup `W_J`, ShortLex order.
    pub fn parabolic_subgroup(&self, j: SimpleSet) -> &[WeylElement] {
        &self.parabolic(j).members
    }

    /// `W^J = {w : w(J) ⊂ Φ⁺}`, ShortLex order.
    pub fn min_coset_reps(&self, j: SimpleSet) -> &[WeylElement] {
        &self.parabolic(j).min_reps
    }

    /// `w_{0,J}`, the longest element of `W_J`.
    pub fn longest_element(&self, j: SimpleSet) -> WeylElement {
        self.parabolic(j).longest
    }

    pub fn longest(&self) -> WeylElement {
        self.longest_element(SimpleSet::full(self.rank))
    }

    pub fn in_parabolic(&self, w: WeylElement, j: SimpleSet) -> bool {
        self.support(w).is_subset(j)
    }

    /// Membership in `W^J` by the defining test `w(α_j) > 0` for all `j ∈ J`.
    pub fn sends_subset_positive(&self, w: WeylElement, j: SimpleSet) -> bool {
        j.iter().all(|i| {
            let mut alpha = vec![0; self.rank];
            alpha[i] = 1;
            self.act_on_root(w, &alpha).iter().all(|&c| c >= 0)
        })
    }

    /// Membership in `W^J` via right descents.
    pub fn is_min_coset_rep(&self, w: WeylElement, j: SimpleSet) -> bool {
        self.right_descents(w).bits() & j.bits() == 0
    }

    /// `w = w^J·w_J` with `w^J ∈ W^J`, `w_J ∈ W_J`, lengths adding.
    pub fn coset_decompose(&self, w: WeylElement, j: SimpleSet) -> (WeylElement, WeylElement) {
        let mut min = w;
        let mut par = self.identity();
        loop {
            let d = self.right_descents(min).bits() & j.bits();
            if d == 0 {
                return (min, par);
            }
            let i = d.trailing_zeros() as usize;
            min = self.right_mul_generator(min, i);
            par = self.left_mul_generator(i, par);
        }
    }

    /// Classifies `s_α·σ` for `σ ∈ W^J`.
    pub fn parabolic_trichotomy(
        &self,
        sigma: WeylElement,
        j: SimpleSet,
        alpha: usize,
    ) -> Result<Trichotomy> {
        self.check(sigma)?;
        if alpha >= self.rank {
            return Err(Error::IndexOutOfRange {
                index: alpha + 1,
                rank: self.rank,
            });
        }
        if !self.is_min_coset_rep(sigma, j) {
            return Err(Error::NotMinimalRepresentative(self.word_string(sigma)));
        }
        let t = self.left_mul_generator(alpha, sigma);
        if self.length(t) < self.length(sigma) {
            return Ok(Trichotomy::DescentInWJ);
        }
        if self.is_min_coset_rep(t, j) {
            return Ok(Trichotomy::AscentInWJ);
        }
        // σ⁻¹·s_α·σ is a simple reflection s_β with β ∈ J
        let conj = self.mul(self.inverse(sigma), t);
        let word = self.word(conj);
        assert!(
            word.len() == 1 && j.contains(word[0] as usize),
            "parabolic exchange failed for σ = {}",
            self.word_string(sigma)
        );
        Ok(Trichotomy::Exchange(word[0] as usize))
    }
}

fn mask_indices(mut bits: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(bits.count_ones() as usize);
    while bits != 0 {
        out.push(bits.trailing_zeros() as usize);
        bits &= bits - 1;
    }
    out
}
