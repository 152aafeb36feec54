use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;

use super::label::{split_label, OrbitLabel, Side};
use super::poly::Poly;
use super::poset::ClosurePoset;
use crate::coxeter::{Trichotomy, WeightFunction, WeylElement, WeylGroup};
use crate::error::{Error, Result};
use crate::subset::SimpleSet;

/// Orbit calculus for one group and one weight function.
#[derive(Clone, Debug)]
pub struct OrbitModel {
    group: Arc<WeylGroup>,
    weights: WeightFunction,
}

/// Witness `(u, v)` for a closure relation: `u ∈ W_{I₁}`, `v ∈ W_{I₂} ∩ W^{I₁}`.
pub type ClosureWitness = (WeylElement, WeylElement);

impl OrbitModel {
    /// Unit ("split") weights.
    pub fn new(group: Arc<WeylGroup>) -> Self {
        let weights = WeightFunction::unit(group.root_system());
        OrbitModel { group, weights }
    }

    pub fn with_weights(group: Arc<WeylGroup>, weights: WeightFunction) -> Result<Self> {
        if weights.values().len() != group.root_system().reduced_count() {
            return Err(Error::InvalidWeights(
                "weight function belongs to a different root system".into(),
            ));
        }
        Ok(OrbitModel { group, weights })
    }

    pub fn from_type(name: &str) -> Result<Self> {
        Ok(OrbitModel::new(Arc::new(WeylGroup::from_type(name)?)))
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn weights(&self) -> &WeightFunction {
        &self.weights
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    /// `Δ`, the dense stratum.
    pub fn full(&self) -> SimpleSet {
        SimpleSet::full(self.rank())
    }

    fn check_subset(&self, i: SimpleSet) -> Result<()> {
        match i.iter().find(|&k| k >= self.rank()) {
            Some(k) => Err(Error::IndexOutOfRange {
                index: k + 1,
                rank: self.rank(),
            }),
            None => Ok(()),
        }
    }

    /// Labels of stratum `J`, or of every stratum when `j` is `None`.
    pub fn enumerate_orbits(&self, j: Option<SimpleSet>) -> Vec<OrbitLabel> {
        let strata = match j {
            Some(j) => vec![j],
            None => SimpleSet::all(self.rank()),
        };
        let g = &self.group;
        let mut out = Vec::new();
        for i in strata {
            let reps = g.min_coset_reps(i);
            let par = g.parabolic_subgroup(i);
            for &sigma in reps {
                for &tau in reps {
                    for &rho in par {
                        out.push(OrbitLabel { i, sigma, tau, rho });
                    }
                }
            }
        }
        out
    }

    /// `|W|² / |W_J|`.
    pub fn stratum_size(&self, j: SimpleSet) -> usize {
        let w = self.group.order();
        w * w / self.group.parabolic_subgroup(j).len()
    }

    /// The label of the orbit `(x, y)·b_I`.
    pub fn canonicalize(&self, i: SimpleSet, x: WeylElement, y: WeylElement) -> OrbitLabel {
        let g = &self.group;
        let (tau, y_par) = g.coset_decompose(y, i);
        let v = g.inverse(y_par);
        let (sigma, rho) = g.coset_decompose(g.mul(x, v), i);
        OrbitLabel { i, sigma, tau, rho }
    }

    /// Checks `σ, τ ∈ W^I` (by `w(I) ⊂ Φ⁺`) and `ρ ∈ W_I`.
    pub fn validate(&self, o: &OrbitLabel) -> Result<()> {
        let g = &self.group;
        self.check_subset(o.i)?;
        for w in [o.sigma, o.tau, o.rho] {
            if !g.owns(w) {
                return Err(Error::MixedParents);
            }
        }
        if !g.sends_subset_positive(o.sigma, o.i) {
            return Err(Error::InvalidLabel(format!(
                "sigma = {} is not a minimal coset representative for I = {}",
                g.word_string(o.sigma),
                o.i
            )));
        }
        if !g.sends_subset_positive(o.tau, o.i) {
            return Err(Error::InvalidLabel(format!(
                "tau = {} is not a minimal coset representative for I = {}",
                g.word_string(o.tau),
                o.i
            )));
        }
        if !g.in_parabolic(o.rho, o.i) {
            return Err(Error::InvalidLabel(format!(
                "rho = {} does not lie in W_I for I = {}",
                g.word_string(o.rho),
                o.i
            )));
        }
        Ok(())
    }

    pub fn label(
        &self,
        i: SimpleSet,
        sigma: WeylElement,
        tau: WeylElement,
        rho: WeylElement,
    ) -> Result<OrbitLabel> {
        let o = OrbitLabel { i, sigma, tau, rho };
        self.validate(&o)?;
        Ok(o)
    }

    /// `I=[2];sigma=1.2;tau=e;rho=2`.
    pub fn format_label(&self, o: &OrbitLabel) -> String {
        let g = &self.group;
        format!(
            "I={};sigma={};tau={};rho={}",
            o.i,
            g.word_string(o.sigma),
            g.word_string(o.tau),
            g.word_string(o.rho)
        )
    }

    /// Parses a label; any reduced or unreduced word is accepted, but the
    /// result must already be canonical, otherwise the canonical form is
    /// reported in the error.
    pub fn parse_label(&self, s: &str) -> Result<OrbitLabel> {
        let raw = split_label(s)?;
        let i = match raw.i.trim() {
            "Δ" | "D" | "full" => self.full(),
            other => SimpleSet::parse(other, self.rank())?,
        };
        self.check_subset(i)?;
        let g = &self.group;
        let sigma = g.parse_word(raw.sigma)?;
        let tau = g.parse_word(raw.tau)?;
        let rho = g.parse_word(raw.rho)?;
        let given = OrbitLabel { i, sigma, tau, rho };
        let words_canonical = [(raw.sigma, sigma), (raw.tau, tau), (raw.rho, rho)]
            .iter()
            .all(|&(text, w)| normalize_word(text) == g.word_string(w));
        if self.validate(&given).is_ok() && words_canonical {
            return Ok(given);
        }
        let canonical = self.canonicalize(i, g.mul(sigma, rho), tau);
        Err(Error::NonCanonicalLabel {
            given: s.trim().to_string(),
            canonical: self.format_label(&canonical),
        })
    }

    /// `X_I ⊂ closure(X_J)` iff `I ⊆ J`.
    pub fn stratum_leq(&self, i: SimpleSet, j: SimpleSet) -> bool {
        i.is_subset(j)
    }

    /// `(I, e, e, e)`, the open orbit of stratum `I`.
    pub fn open_orbit(&self, i: SimpleSet) -> OrbitLabel {
        let e = self.group.identity();
        OrbitLabel {
            i,
            sigma: e,
            tau: e,
            rho: e,
        }
    }

    /// `d(σ) + d(τ) + d(ρ)`: codimension inside the stratum closure.
    pub fn codim(&self, o: &OrbitLabel) -> u64 {
        let g = &self.group;
        let c = &self.weights;
        g.weighted_length(o.sigma, c) + g.weighted_length(o.tau, c) + g.weighted_length(o.rho, c)
    }

    fn require_split(&self) -> Result<()> {
        if !self.weights.is_unit() {
            return Err(Error::NotSplit("weights are not all 1".into()));
        }
        if !self.group.root_system().is_reduced() {
            return Err(Error::NotSplit("root system is not reduced".into()));
        }
        Ok(())
    }

    /// `2N − l(σρ) − l(τ) + |I|` in the split model.
    pub fn split_dimension(&self, o: &OrbitLabel) -> Result<usize> {
        self.require_split()?;
        Ok(self.split_dimension_unchecked(o))
    }

    fn split_dimension_unchecked(&self, o: &OrbitLabel) -> usize {
        let g = &self.group;
        let n = g.root_system().reduced_count();
        2 * n - g.length(g.mul(o.sigma, o.rho)) - g.length(o.tau) + o.i.len()
    }

    /// `q^{2N − l(σρ) − l(τ)}·(q−1)^{|I|}`, the number of `F_q`-points in the
    /// split model.
    pub fn point_count_poly(&self, o: &OrbitLabel) -> Result<Poly> {
        self.require_split()?;
        let g = &self.group;
        let n = g.root_system().reduced_count();
        let k = 2 * n - g.length(g.mul(o.sigma, o.rho)) - g.length(o.tau);
        Ok(Poly::monomial(k) * Poly::q_minus_one_pow(o.i.len()))
    }

    fn check_alpha(&self, alpha: usize) {
        assert!(alpha < self.rank(), "simple index {alpha} out of range");
    }

    /// Stable means the rank-one parabolic does not enlarge the orbit:
    /// `l(s_α·σρ) > l(σρ)` on the left, `l(s_α·τρ⁻¹) > l(τρ⁻¹)` on the right.
    pub fn is_stable(&self, o: &OrbitLabel, side: Side, alpha: usize) -> bool {
        self.check_alpha(alpha);
        let g = &self.group;
        let x = match side {
            Side::Left => g.mul(o.sigma, o.rho),
            Side::Right => g.mul(o.tau, g.inverse(o.rho)),
        };
        !g.is_left_descent(x, alpha)
    }

    /// The dense orbit in `P_α·closure(O)` (left) or `closure(O)·P⁻_α` (right).
    pub fn rank1_act(&self, o: &OrbitLabel, side: Side, alpha: usize) -> OrbitLabel {
        self.check_alpha(alpha);
        let g = &self.group;
        let (outer, i) = match side {
            Side::Left => (o.sigma, o.i),
            Side::Right => (o.tau, o.i),
        };
        let case = g
            .parabolic_trichotomy(outer, i, alpha)
            .expect("label components are minimal coset representatives");
        match (side, case) {
            (Side::Left, Trichotomy::DescentInWJ) => OrbitLabel {
                sigma: g.left_mul_generator(alpha, o.sigma),
                ..*o
            },
            (Side::Right, Trichotomy::DescentInWJ) => OrbitLabel {
                tau: g.left_mul_generator(alpha, o.tau),
                ..*o
            },
            (Side::Left, Trichotomy::Exchange(beta)) if g.is_left_descent(o.rho, beta) => {
                OrbitLabel {
                    rho: g.left_mul_generator(beta, o.rho),
                    ..*o
                }
            }
            (Side::Right, Trichotomy::Exchange(beta)) if g.is_right_descent(o.rho, beta) => {
                OrbitLabel {
                    rho: g.right_mul_generator(o.rho, beta),
                    ..*o
                }
            }
            _ => *o,
        }
    }

    /// For a stable `O`, the unique `O₀ ≠ O` with `rank1_act(O₀) = O`.
    pub fn unique_predecessor(
        &self,
        o: &OrbitLabel,
        side: Side,
        alpha: usize,
    ) -> Result<OrbitLabel> {
        let g = &self.group;
        if alpha >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: alpha + 1,
                rank: self.rank(),
            });
        }
        let side_name = match side {
            Side::Left => "LEFT",
            Side::Right => "RIGHT",
        };
        let outer = match side {
            Side::Left => o.sigma,
            Side::Right => o.tau,
        };
        let case = g.parabolic_trichotomy(outer, o.i, alpha)?;
        let unstable = |case: String| Error::Unstable {
            side: side_name,
            alpha: alpha + 1,
            case,
        };
        match (side, case) {
            (_, Trichotomy::DescentInWJ) => Err(unstable(match side {
                Side::Left => "l(s_α σ) < l(σ)".into(),
                Side::Right => "l(s_α τ) < l(τ)".into(),
            })),
            (Side::Left, Trichotomy::AscentInWJ) => Ok(OrbitLabel {
                sigma: g.left_mul_generator(alpha, o.sigma),
                ..*o
            }),
            (Side::Right, Trichotomy::AscentInWJ) => Ok(OrbitLabel {
                tau: g.left_mul_generator(alpha, o.tau),
                ..*o
            }),
            (Side::Left, Trichotomy::Exchange(beta)) => {
                if g.is_left_descent(o.rho, beta) {
                    Err(unstable(format!(
                        "s_α σ = σ s_{} with l(s_{} ρ) < l(ρ)",
                        beta + 1,
                        beta + 1
                    )))
                } else {
                    Ok(OrbitLabel {
                        rho: g.left_mul_generator(beta, o.rho),
                        ..*o
                    })
                }
            }
            (Side::Right, Trichotomy::Exchange(beta)) => {
                if g.is_right_descent(o.rho, beta) {
                    Err(unstable(format!(
                        "s_α τ = τ s_{} with l(ρ s_{}) < l(ρ)",
                        beta + 1,
                        beta + 1
                    )))
                } else {
                    Ok(OrbitLabel {
                        rho: g.right_mul_generator(o.rho, beta),
                        ..*o
                    })
                }
            }
        }
    }

    /// Same-stratum closure order: `O₁ ⊂ closure(O₂)` iff some `u ∈ W_J` has
    /// `σ₁ρ₁u ≥ σ₂ρ₂` and `τ₁ ≥ τ₂u⁻¹`.
    pub fn closure_leq_same_stratum(&self, o1: &OrbitLabel, o2: &OrbitLabel) -> Result<bool> {
        if o1.i != o2.i {
            return Err(Error::StrataDiffer(o1.i.to_string(), o2.i.to_string()));
        }
        self.check_owned(o1)?;
        self.check_owned(o2)?;
        let g = &self.group;
        let x1 = g.mul(o1.sigma, o1.rho);
        let x2 = g.mul(o2.sigma, o2.rho);
        Ok(g.parabolic_subgroup(o1.i)
            .iter()
            .any(|&u| g.leq(x2, g.mul(x1, u)) && g.leq(g.mul(o2.tau, g.inverse(u)), o1.tau)))
    }

    fn check_owned(&self, o: &OrbitLabel) -> Result<()> {
        let g = &self.group;
        if [o.sigma, o.tau, o.rho].iter().all(|&w| g.owns(w)) {
            Ok(())
        } else {
            Err(Error::MixedParents)
        }
    }

    /// `O₁ ⊂ closure(O₂)`.
    pub fn closure_leq(&self, o1: &OrbitLabel, o2: &OrbitLabel) -> Result<bool> {
        Ok(self.closure_witness(o1, o2)?.is_some())
    }

    /// A witness `(u, v)` for `O₁ ⊂ closure(O₂)`: `I₁ ⊆ I₂`,
    /// `v ∈ W_{I₂} ∩ W^{I₁}` with `l(ρ₂) = l(ρ₂v) + l(v)`, `u ∈ W_{I₁}`,
    /// `σ₁ρ₁u ≥ σ₂ρ₂v` and `τ₁ ≥ τ₂vu⁻¹`.
    pub fn closure_witness(
        &self,
        o1: &OrbitLabel,
        o2: &OrbitLabel,
    ) -> Result<Option<ClosureWitness>> {
        self.check_owned(o1)?;
        self.check_owned(o2)?;
        Ok(self.witness_unchecked(o1, o2))
    }

    pub(crate) fn witness_unchecked(
        &self,
        o1: &OrbitLabel,
        o2: &OrbitLabel,
    ) -> Option<ClosureWitness> {
        if !o1.i.is_subset(o2.i) {
            return None;
        }
        let g = &self.group;
        let x1 = g.mul(o1.sigma, o1.rho);
        let l_rho2 = g.length(o2.rho);
        let inner = g.parabolic_subgroup(o1.i);
        for &v in g.parabolic_subgroup(o2.i) {
            if !g.is_min_coset_rep(v, o1.i) {
                continue;
            }
            let rho2v = g.mul(o2.rho, v);
            if l_rho2 != g.length(rho2v) + g.length(v) {
                continue;
            }
            let x2v = g.mul(o2.sigma, rho2v);
            let t2v = g.mul(o2.tau, v);
            for &u in inner {
                if g.leq(x2v, g.mul(x1, u)) && g.leq(g.mul(t2v, g.inverse(u)), o1.tau) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Irreducible components of `closure(O) ∩ X_I`, as labels of their dense
    /// orbits. Empty unless `I ⊆ O.I`.
    pub fn intersection_components(&self, o: &OrbitLabel, i: SimpleSet) -> Vec<OrbitLabel> {
        if !i.is_subset(o.i) {
            return Vec::new();
        }
        let g = &self.group;
        let x = g.mul(o.sigma, o.rho);
        let lx = g.length(x);
        let mut out = BTreeSet::new();
        for &v in g.parabolic_subgroup(o.i) {
            if !g.is_min_coset_rep(v, i) {
                continue;
            }
            let xv = g.mul(x, v);
            if lx == g.length(xv) + g.length(v) {
                out.insert(self.canonicalize(i, xv, g.mul(o.tau, v)));
            }
        }
        out.into_iter().collect()
    }

    /// All labels with the closure order and its Hasse diagram.
    pub fn closure_poset(&self) -> ClosurePoset {
        let labels = self.enumerate_orbits(None);
        let rows: Vec<Vec<bool>> = labels
            .par_iter()
            .map(|a| {
                labels
                    .iter()
                    .map(|b| self.witness_unchecked(a, b).is_some())
                    .collect()
            })
            .collect();
        ClosurePoset::from_relation(self, labels, |i, j| rows[i][j])
    }

    /// Grading used for exports: the split dimension when defined, else the
    /// stratum size minus the codimension.
    pub(crate) fn grade(&self, o: &OrbitLabel) -> i64 {
        if self.require_split().is_ok() {
            self.split_dimension_unchecked(o) as i64
        } else {
            let g = &self.group;
            let top = 2 * g.weighted_length(g.longest(), &self.weights) as i64;
            top - self.codim(o) as i64 + o.i.len() as i64
        }
    }
}

fn normalize_word(text: &str) -> String {
    let t = text.trim();
    if t.is_empty() {
        "e".into()
    } else {
        t.split('.').map(str::trim).collect::<Vec<_>>().join(".")
    }
}
