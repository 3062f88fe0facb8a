//! Constructive colorers and a dispatch table over them.

pub mod bipartite;
pub mod fan;
pub mod formula;
pub mod maxdeg5;
pub mod petersen;
pub mod smalldiff;

use std::fmt;
use std::str::FromStr;

pub use bipartite::{bipartite_bound_coloring, bipartite_certified_bound};
pub use fan::{class1_coloring, fan_coloring, vizing_coloring};
pub use formula::{color_m, color_s};
pub use maxdeg5::{maxdeg5_coloring, palette_class_counts};
pub use petersen::{petersen_factorize, FactorDecomposition};
pub use smalldiff::{smalldiff_coloring, two_color_paths_and_cycles};

use crate::cyclic::EdgeColoring;
use crate::error::{Error, Result};
use crate::families::{gen_m, gen_s};
use crate::graph::{is_bipartite, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Auto,
    SFormula,
    MFormula,
    Bipartite,
    Maxdeg5,
    Smalldiff,
    Vizing,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Auto,
        Method::SFormula,
        Method::MFormula,
        Method::Bipartite,
        Method::Maxdeg5,
        Method::Smalldiff,
        Method::Vizing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::SFormula => "s-formula",
            Method::MFormula => "m-formula",
            Method::Bipartite => "bipartite",
            Method::Maxdeg5 => "maxdeg5",
            Method::Smalldiff => "smalldiff",
            Method::Vizing => "vizing",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown method {s:?}")))
    }
}

/// A coloring together with the colorer that produced it and the deficiency
/// that colorer guarantees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colored {
    pub method: Method,
    pub coloring: EdgeColoring,
    pub certified_bound: u64,
}

fn count_labels(g: &Graph, prefix: char) -> usize {
    g.labels()
        .map(|ls| {
            ls.iter()
                .filter(|l| l.starts_with(prefix) && l.len() > 1 && l[1..].bytes().all(|b| b.is_ascii_digit()))
                .count()
        })
        .unwrap_or(0)
}

fn role_counts(g: &Graph) -> Option<(usize, usize, usize)> {
    let (a, b, c) = (count_labels(g, 'x'), count_labels(g, 'y'), count_labels(g, 'z'));
    (a > 0 && b > 0 && c > 0).then_some((a, b, c))
}

/// `(a, b, c)` when `g` is exactly `gen_s(a, b, c)` including role labels.
pub fn recognize_s(g: &Graph) -> Option<(usize, usize, usize)> {
    let (a, b, c) = role_counts(g)?;
    (gen_s(a, b, c).ok()? == *g).then_some((a, b, c))
}

/// `(a, b, c)` when `g` is exactly `gen_m(a, b, c)` including role labels.
pub fn recognize_m(g: &Graph) -> Option<(usize, usize, usize)> {
    let (a, b, c) = role_counts(g)?;
    (gen_m(a, b, c).ok()? == *g).then_some((a, b, c))
}

/// Per-vertex bound `max(0, t − d − 1)` summed; holds for every proper
/// `t`-coloring.
pub fn generic_bound(g: &Graph, t: u32) -> u64 {
    g.degrees()
        .iter()
        .filter(|&&d| d > 0)
        .map(|&d| (t as u64).saturating_sub(d as u64 + 1))
        .sum()
}

fn applicable(g: &Graph, method: Method) -> bool {
    let spread = g.max_degree() - g.min_degree();
    match method {
        Method::Auto | Method::Vizing => true,
        Method::SFormula => recognize_s(g).is_some(),
        Method::MFormula => recognize_m(g).is_some(),
        Method::Bipartite => is_bipartite(g),
        Method::Smalldiff => spread <= 2,
        Method::Maxdeg5 => g.max_degree() <= 5,
    }
}

/// Runs `method` on `g`. `Auto` tries, in order, the formula colorers for a
/// recognised family, bipartite, smalldiff, maxdeg5 and Vizing.
pub fn apply(g: &Graph, method: Method) -> Result<Colored> {
    if method == Method::Auto {
        let order = [
            Method::SFormula,
            Method::MFormula,
            Method::Bipartite,
            Method::Smalldiff,
            Method::Maxdeg5,
            Method::Vizing,
        ];
        let chosen = order.into_iter().find(|&m| applicable(g, m)).expect("vizing always applies");
        return apply(g, chosen);
    }
    if !applicable(g, method) {
        return Err(Error::Precondition(format!("method {method} does not apply to this graph")));
    }
    let n = g.vertex_count() as u64;
    let (coloring, certified_bound) = match method {
        Method::SFormula => {
            let (a, b, c) = recognize_s(g).expect("checked");
            (color_s(a, b, c)?, 0)
        }
        Method::MFormula => {
            let (a, b, c) = recognize_m(g).expect("checked");
            (color_m(a, b, c)?, 0)
        }
        Method::Bipartite => (bipartite_bound_coloring(g)?, bipartite_certified_bound(g)),
        Method::Smalldiff => (smalldiff_coloring(g)?, n),
        Method::Maxdeg5 => (maxdeg5_coloring(g)?, n),
        Method::Vizing => {
            let c = vizing_coloring(g)?;
            let bound = generic_bound(g, c.t());
            (c, bound)
        }
        Method::Auto => unreachable!(),
    };
    Ok(Colored { method, coloring, certified_bound })
}
