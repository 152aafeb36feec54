//! Verification suites behind `orbits verify`.

use std::collections::HashMap;

use orbits_core::coxeter::CartanMatrix;
use orbits_core::matrix_model::MatrixModel;
use orbits_core::oracle::{compare_posets, oracle_poset};
use orbits_core::{OrbitModel, Side, SimpleSet};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::Suite;

const MAX_REPORTED: usize = 50;

pub struct SuiteReport {
    pub name: &'static str,
    pub pass: bool,
    pub skipped: bool,
    pub checked: usize,
    pub diff: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            pass: true,
            skipped: false,
            checked: 0,
            diff: Vec::new(),
        }
    }

    fn fail(&mut self, msg: String) {
        self.pass = false;
        if self.diff.len() < MAX_REPORTED {
            self.diff.push(msg);
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.name,
            "pass": self.pass,
            "skipped": self.skipped,
            "checked": self.checked,
            "diff": self.diff,
        })
    }
}

pub fn run(
    m: &OrbitModel,
    suite: Suite,
    seed: u64,
    samples: usize,
    fault: bool,
) -> Vec<SuiteReport> {
    let wanted = |s: Suite| suite == Suite::All || suite == s;
    let mut out = Vec::new();
    if wanted(Suite::Poset) {
        out.push(poset(m, fault));
    }
    if wanted(Suite::Axioms) {
        out.push(axioms(m));
    }
    if wanted(Suite::Rank1) {
        out.push(rank1(m));
    }
    if wanted(Suite::Random) {
        out.push(random(m, seed, samples));
    }
    if wanted(Suite::Matrix) {
        out.push(matrix(m));
    }
    out
}

fn poset(m: &OrbitModel, fault: bool) -> SuiteReport {
    let mut r = SuiteReport::new("poset");
    let mut closed = m.closure_poset();
    if fault {
        if let Some(&(i, j)) = closed.hasse().first() {
            closed = closed.without_pair(m, i, j);
        }
    }
    let oracle = oracle_poset(m);
    r.checked = closed.len() * closed.len();
    match compare_posets(&closed, &oracle) {
        Ok(diff) => {
            for (a, b) in &diff.only_first {
                r.fail(format!(
                    "closed form only: {} <= {}",
                    m.format_label(a),
                    m.format_label(b)
                ));
            }
            for (a, b) in &diff.only_second {
                r.fail(format!(
                    "oracle only: {} <= {}",
                    m.format_label(a),
                    m.format_label(b)
                ));
            }
        }
        Err(e) => r.fail(e.to_string()),
    }
    r
}

fn axioms(m: &OrbitModel) -> SuiteReport {
    let mut r = SuiteReport::new("axioms");
    let p = m.closure_poset();
    r.checked = p.len();
    if !p.is_reflexive() {
        r.fail("closure order is not reflexive".into());
    }
    if !p.is_antisymmetric() {
        r.fail("closure order is not antisymmetric".into());
    }
    if !p.is_transitive() {
        r.fail("closure order is not transitive".into());
    }
    r
}

fn rank1(m: &OrbitModel) -> SuiteReport {
    let mut r = SuiteReport::new("rank1");
    let labels = m.enumerate_orbits(None);
    for side in Side::BOTH {
        for a in 0..m.rank() {
            let mut images = HashMap::new();
            for o in &labels {
                r.checked += 1;
                let name = m.format_label(o);
                let img = m.rank1_act(o, side, a);
                let stable = m.is_stable(o, side, a);
                if stable != (img == *o) {
                    r.fail(format!(
                        "{side} {}: stability disagrees with fixed point at {name}",
                        a + 1
                    ));
                }
                if stable {
                    match m.unique_predecessor(o, side, a) {
                        Ok(p) if m.rank1_act(&p, side, a) == *o && p != *o => {}
                        _ => r.fail(format!("{side} {}: no valid predecessor for {name}", a + 1)),
                    }
                } else if let Some(prev) = images.insert(img, *o) {
                    r.fail(format!(
                        "{side} {}: {} and {name} have the same image",
                        a + 1,
                        m.format_label(&prev)
                    ));
                } else if m.unique_predecessor(&img, side, a).ok() != Some(*o) {
                    r.fail(format!(
                        "{side} {}: predecessor does not undo the move from {name}",
                        a + 1
                    ));
                }
            }
        }
    }
    r
}

fn random(m: &OrbitModel, seed: u64, samples: usize) -> SuiteReport {
    let mut r = SuiteReport::new("random");
    let g = m.group();
    let mut rng = StdRng::seed_from_u64(seed);
    let strata = SimpleSet::all(m.rank());
    for _ in 0..samples {
        let x = g.element(rng.gen_range(0..g.order()));
        let y = g.element(rng.gen_range(0..g.order()));
        let i = strata[rng.gen_range(0..strata.len())];
        let par = g.parabolic_subgroup(i);
        let v = par[rng.gen_range(0..par.len())];
        let o = m.canonicalize(i, x, y);
        if m.canonicalize(i, g.mul(x, v), g.mul(y, v)) != o || m.validate(&o).is_err() {
            r.fail(format!(
                "canonicalize({i}, {}, {}) not invariant under {}",
                g.word_string(x),
                g.word_string(y),
                g.word_string(v)
            ));
        }
        let word = g.word(y);
        if word.len() <= 12 {
            let letters: Vec<usize> = word.iter().map(|&c| c as usize).collect();
            let by_subword = (0u32..1 << letters.len()).any(|mask| {
                let sub: Vec<usize> = letters
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1 << k) != 0)
                    .map(|(_, &c)| c)
                    .collect();
                g.from_word(&sub).unwrap() == x
            });
            if by_subword != g.leq(x, y) {
                r.fail(format!(
                    "Bruhat order disagrees with subwords for {} <= {}",
                    g.word_string(x),
                    g.word_string(y)
                ));
            }
        }
        r.checked += 1;
    }
    r
}

fn matrix(m: &OrbitModel) -> SuiteReport {
    let mut r = SuiteReport::new("matrix");
    let cartan = m.group().root_system().cartan();
    let n = (2..=3).find(|&n| {
        CartanMatrix::from_type(&format!("A{}", n - 1))
            .ok()
            .as_ref()
            == Some(cartan)
    });
    let Some(n) = n.filter(|_| m.weights().is_unit() && m.group().root_system().is_reduced())
    else {
        r.skipped = true;
        return r;
    };
    let qs: &[u8] = if n == 2 { &[2, 3, 5] } else { &[2] };
    for &q in qs {
        let mm = MatrixModel::new(n, q).expect("supported parameters");
        match mm.label_matching() {
            Ok(mt) => {
                for (o, k) in &mt.assignment {
                    r.checked += 1;
                    let want = mm.orbit_model().point_count_poly(o).unwrap().eval(q as i64);
                    let got = mt.orbits[*k].len() as i64;
                    if want != got {
                        r.fail(format!(
                            "q={q}: {} has {got} points, expected {want}",
                            mm.orbit_model().format_label(o)
                        ));
                    }
                }
            }
            Err(e) => r.fail(format!("q={q}: {e}")),
        }
        if !mm.verify_group_cells().ok() {
            r.fail(format!("q={q}: group cells disagree with predicted sizes"));
        }
    }
    r
}
