//! Orbit labels `(I, σ, τ, ρ)`.

use std::fmt;
use std::str::FromStr;

use crate::coxeter::WeylElement;
use crate::error::Error;
use crate::subset::SimpleSet;

/// Names the `P×P⁻`-orbit `(σρ, τ)·b_I` with `σ, τ ∈ W^I` and `ρ ∈ W_I`.
///
/// Ordered by stratum (cardinality, then lexicographic), then ShortLex on
/// `σ`, `τ`, `ρ`. Use [`OrbitModel::format_label`](super::OrbitModel::format_label)
/// to render it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitLabel {
    pub i: SimpleSet,
    pub sigma: WeylElement,
    pub tau: WeylElement,
    pub rho: WeylElement,
}

/// Which parabolic factor a rank-one move uses: `P_α` on the left or
/// `P⁻_α` on the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Left, Side::Right];
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "LEFT",
            Side::Right => "RIGHT",
        })
    }
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "left" | "l" => Ok(Side::Left),
            "right" | "r" => Ok(Side::Right),
            _ => Err(Error::LabelParse(format!("unknown side `{s}`"))),
        }
    }
}

/// Raw textual pieces of a label before group lookup.
#[derive(Debug, PartialEq, Eq)]
pub(crate) struct RawLabel<'a> {
    pub i: &'a str,
    pub sigma: &'a str,
    pub tau: &'a str,
    pub rho: &'a str,
}

/// Accepts `I=[2];sigma=1.2;tau=e;rho=2` (any key order, `rho` optional)
/// and the tuple form `([2];1.2;e;2)` / `(∅;e;s)`.
pub(crate) fn split_label(s: &str) -> Result<RawLabel<'_>, Error> {
    let s = s.trim();
    let bad = || Error::LabelParse(format!("cannot parse label `{s}`"));
    if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        let parts: Vec<&str> = inner.split(';').map(str::trim).collect();
        return match parts.as_slice() {
            [i, sigma, tau] => Ok(RawLabel {
                i,
                sigma,
                tau,
                rho: "e",
            }),
            [i, sigma, tau, rho] => Ok(RawLabel { i, sigma, tau, rho }),
            _ => Err(bad()),
        };
    }
    let (mut i, mut sigma, mut tau, mut rho) = (None, None, None, None);
    for part in s.split(';') {
        let (key, value) = part.split_once('=').ok_or_else(bad)?;
        let slot = match key.trim() {
            "I" => &mut i,
            "sigma" => &mut sigma,
            "tau" => &mut tau,
            "rho" => &mut rho,
            _ => return Err(bad()),
        };
        if slot.replace(value.trim()).is_some() {
            return Err(bad());
        }
    }
    Ok(RawLabel {
        i: i.ok_or_else(bad)?,
        sigma: sigma.ok_or_else(bad)?,
        tau: tau.ok_or_else(bad)?,
        rho: rho.unwrap_or("e"),
    })
}
