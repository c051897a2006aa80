//! Ordered-quadruple configuration sums and the local weight function `f`.
//!
//! Every sum ranges over all of `V^4`, repeated vertices included, with the
//! non-edge indicator equal to one on the diagonal. Written with `s`, `c`,
//! `n` for the indicators of `S`, `C` and non-edges:
//!
//! ```text
//! P4  = Σ s(uv) s(vw) s(wx) (n(xu) + c(xu))
//! C4  = Σ s(uv) s(vw) s(wx) s(xu)
//! K13 = Σ s(uv) s(uw) s(ux)
//! D   = Σ (n(uv) + c(uv)) s(uw) s(ux) n(vw) n(vx)
//! R   = Σ s(uv) s(uw) n(wx) c(vx)
//! ```
//!
//! [`config_counts_naive`] evaluates these literally and is the reference;
//! [`config_counts`] uses degree and neighbourhood-intersection identities and
//! must agree with it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{int, ratio, Rational};
use crate::trigraph::Trigraph;
use crate::{bits, Vertex};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ConfigCounts {
    pub p4: u64,
    pub c4: u64,
    pub k13: u64,
    pub d: u64,
    pub r: u64,
}

pub fn config_counts_naive(t: &Trigraph) -> ConfigCounts {
    let n = t.n();
    let (s, c, nn) = (|a, b| t.sv(a, b), |a, b| t.cv(a, b), |a, b| t.nv(a, b));
    let mut k = [0i64; 5];
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                for x in 0..n {
                    let walk = s(u, v) * s(v, w) * s(w, x);
                    k[0] += walk * (nn(x, u) + c(x, u));
                    k[1] += walk * s(x, u);
                    k[2] += s(u, v) * s(u, w) * s(u, x);
                    k[3] += (nn(u, v) + c(u, v)) * s(u, w) * s(u, x) * nn(v, w) * nn(v, x);
                    k[4] += s(u, v) * s(u, w) * nn(w, x) * c(v, x);
                }
            }
        }
    }
    let [p4, c4, k13, d, r] = k.map(|x| u64::try_from(x).expect("configuration sums are non-negative"));
    ConfigCounts { p4, c4, k13, d, r }
}

pub fn config_counts(t: &Trigraph) -> ConfigCounts {
    let n = t.n();
    let deg: Vec<u64> = (0..n).map(|u| t.s_degree(u) as u64).collect();
    let pop = |m: u64| m.count_ones() as u64;

    let k13 = deg.iter().map(|d| d * d * d).sum();
    // Ordered 3-walks u-v-w-x counted through their middle S-edge.
    let walks3: u64 = t.ordered_s_pairs().iter().map(|&(v, w)| deg[v] * deg[w]).sum();
    let mut c4 = 0u64;
    let mut d = 0u64;
    let mut r = 0u64;
    for u in 0..n {
        for w in 0..n {
            let common = pop(t.s_row(u) & t.s_row(w));
            c4 += common * common;
        }
        for v in 0..n {
            if !t.is_s_edge(u, v) {
                let k = pop(t.s_row(u) & t.nonedge_row(v));
                d += k * k;
            }
        }
        for v in bits(t.s_row(u)) {
            for w in bits(t.s_row(u)) {
                r += pop(t.nonedge_row(w) & t.c_row(v));
            }
        }
    }
    ConfigCounts {
        p4: walks3 - c4,
        c4,
        k13,
        d,
        r,
    }
}

/// Slacks of `P4 + C4 <= K13` and `P4 <= D`. Kept signed so a negative value,
/// which would be a counterexample, is reported as is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CauchySchwarzSlack {
    pub cs_s_slack: i64,
    pub cs_n_slack: i64,
}

impl CauchySchwarzSlack {
    pub fn holds(&self) -> bool {
        self.cs_s_slack >= 0 && self.cs_n_slack >= 0
    }
}

pub fn check_cauchy_schwarz(t: &Trigraph) -> CauchySchwarzSlack {
    let k = config_counts(t);
    CauchySchwarzSlack {
        cs_s_slack: k.k13 as i64 - k.p4 as i64 - k.c4 as i64,
        cs_n_slack: k.d as i64 - k.p4 as i64,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BigSumCheck {
    #[serde(serialize_with = "crate::rational::serde_ratio")]
    pub lhs: Rational,
    #[serde(serialize_with = "crate::rational::serde_ratio")]
    pub rhs: Rational,
    pub equal: bool,
}

/// Evaluates the two quadruple sums
///
/// ```text
///   Σ s(uv) c(wx) (s(uw)+s(vw)) (1-s(ux)-s(vx))
/// + ½ Σ s(uv) (1-s(uw)-s(vw)) (1-s(ux)-s(vx))
/// ```
///
/// literally and compares them with `|V|²|S| - 3P4 - C4 - K13 - 2D - 2R`.
pub fn check_bigsum_identity(t: &Trigraph) -> BigSumCheck {
    let n = t.n();
    let s = |a, b| t.sv(a, b);
    let mut twice_lhs = 0i64;
    for u in 0..n {
        for v in 0..n {
            if s(u, v) == 0 {
                continue;
            }
            for w in 0..n {
                let near_w = s(u, w) + s(v, w);
                for x in 0..n {
                    let far_x = 1 - s(u, x) - s(v, x);
                    twice_lhs += 2 * t.cv(w, x) * near_w * far_x + (1 - near_w) * far_x;
                }
            }
        }
    }
    let k = config_counts(t);
    let rhs =
        (n * n * t.s_count()) as i64 - 3 * k.p4 as i64 - k.c4 as i64 - k.k13 as i64 - 2 * k.d as i64 - 2 * k.r as i64;
    let lhs = ratio(twice_lhs, 2);
    let rhs = int(rhs);
    BigSumCheck {
        equal: lhs == rhs,
        lhs,
        rhs,
    }
}

/// `2 f(u,v,w,x)`, always an integer.
#[inline]
pub(crate) fn f_doubled(t: &Trigraph, u: Vertex, v: Vertex, w: Vertex, x: Vertex) -> i64 {
    let s = |a, b| t.sv(a, b);
    if s(u, v) == 0 {
        return 0;
    }
    let near_w = s(u, w) + s(v, w);
    let far_x = 1 - s(u, x) - s(v, x);
    2 * (3 * s(w, x) + t.cv(w, x)) * near_w * far_x + (1 - near_w) * far_x + 4 * s(w, x) * s(u, w) * s(v, x)
}

fn check4(t: &Trigraph, vs: [Vertex; 4]) -> Result<()> {
    vs.iter().try_for_each(|&v| t.check_vertex(v))
}

/// The local weight
/// `f(u,v,w,x) = s(uv)[(3s(wx)+c(wx))(s(uw)+s(vw))(1-s(ux)-s(vx))
///               + ½(1-s(uw)-s(vw))(1-s(ux)-s(vx)) + 2s(wx)s(uw)s(vx)]`.
pub fn f_value(t: &Trigraph, u: Vertex, v: Vertex, w: Vertex, x: Vertex) -> Result<Rational> {
    check4(t, [u, v, w, x])?;
    Ok(ratio(f_doubled(t, u, v, w, x), 2))
}

pub(crate) fn pair_sum_doubled(t: &Trigraph, u: Vertex, v: Vertex) -> i64 {
    let n = t.n();
    (0..n)
        .flat_map(|w| (0..n).map(move |x| (w, x)))
        .map(|(w, x)| f_doubled(t, u, v, w, x))
        .sum()
}

/// `g(u,v) = Σ_{(w,x) ∈ V²} f(u,v,w,x)` for an ordered `S`-pair.
pub fn f_pair_sum(t: &Trigraph, u: Vertex, v: Vertex) -> Result<Rational> {
    t.check_vertex(u)?;
    t.check_vertex(v)?;
    if !t.is_s_edge(u, v) {
        return Err(Error::NotAnSEdge(u, v));
    }
    Ok(ratio(pair_sum_doubled(t, u, v), 2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FWeights {
    pub f_total: Rational,
    pub per_pair: BTreeMap<(Vertex, Vertex), Rational>,
}

pub fn f_weights(t: &Trigraph) -> FWeights {
    let per_pair: BTreeMap<_, _> = t
        .ordered_s_pairs()
        .into_iter()
        .map(|(u, v)| ((u, v), ratio(pair_sum_doubled(t, u, v), 2)))
        .collect();
    let f_total = per_pair.values().sum();
    FWeights { f_total, per_pair }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FTotal {
    #[serde(serialize_with = "crate::rational::serde_ratio")]
    pub f: Rational,
    /// `|V|² |S|`
    pub bound: u64,
    pub ok: bool,
}

pub fn f_total(t: &Trigraph) -> FTotal {
    let twice: i64 = t
        .ordered_s_pairs()
        .into_iter()
        .map(|(u, v)| pair_sum_doubled(t, u, v))
        .sum();
    let f = ratio(twice, 2);
    let bound = (t.n() * t.n() * t.s_count()) as u64;
    FTotal {
        ok: f <= Rational::from_integer(BigInt::from(bound)),
        f,
        bound,
    }
}
