//! Classification of the conic reduction along a transverse ray `ν` as a
//! weighted projective variety.
//!
//! The integer weight `n_ν(a,j) = -ν2 (k_a - j + l_a) + ν1 (l_a + j)` splits
//! the coordinates into a positive side `P` and a negative side `N`. With
//! `a = |n|` on `P` and `b = |n|` on `N`, the reduction is the Segre-type
//! quotient `P(a, -b)`; when one side is a single coordinate of weight `w`
//! it collapses to the weighted projective space `P(w + long side)`.

mod betti;
mod segre;

pub use betti::{betti_conic_reduction, betti_product_p1, betti_wps, BettiTable};
pub use segre::{degree_matrix, product_matrix, segre_generators, SegreMinor};

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbit_geometry::{RayDir, Wedge};
use crate::rep_model::{IndexPair, RepDescriptor};

pub fn n_weight(rep: &RepDescriptor, nu: &RayDir, idx: IndexPair) -> i64 {
    let s = rep.summand(idx.a);
    let j = idx.j as i64;
    -nu.y() * (s.k as i64 - j + s.l) + nu.x() * (s.l + j)
}

/// Coordinates split by the sign of `n_ν`, each side in `(a, j)` order.
///
/// `n_ν` only sees the line through `ν`, so when the moment map never
/// vanishes the direction is checked separately: the image lies on the side
/// where `x + y` has the sign of the traces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub positive: Vec<IndexPair>,
    pub negative: Vec<IndexPair>,
}

pub fn partition(rep: &RepDescriptor, nu: &RayDir) -> Result<Partition> {
    if rep.moment_never_zero() {
        let trace_sign = rep.summands()[0].trace_weight().signum();
        if (nu.x() + nu.y()).signum() != trace_sign {
            return Err(Error::OutsideImage);
        }
    }
    let mut positive = Vec::new();
    let mut negative = Vec::new();
    let mut zeros = Vec::new();
    for idx in rep.index_set() {
        match n_weight(rep, nu, idx).signum() {
            1 => positive.push(idx),
            -1 => negative.push(idx),
            _ => zeros.push(idx),
        }
    }
    if !zeros.is_empty() {
        return Err(Error::CriticalRay(zeros));
    }
    if positive.is_empty() || negative.is_empty() {
        return Err(Error::EmptySide);
    }
    Ok(Partition { positive, negative })
}

/// `a_ν = |n_ν|` on `P` and `b_ν = |n_ν|` on `N`, with their source coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightVectorPair {
    pub a: Vec<i64>,
    pub a_source: Vec<IndexPair>,
    pub b: Vec<i64>,
    pub b_source: Vec<IndexPair>,
}

pub fn weight_vectors(rep: &RepDescriptor, nu: &RayDir) -> Result<WeightVectorPair> {
    let part = partition(rep, nu)?;
    let abs = |side: &[IndexPair]| -> Vec<i64> {
        side.iter()
            .map(|&idx| n_weight(rep, nu, idx).abs())
            .collect()
    };
    Ok(WeightVectorPair {
        a: abs(&part.positive),
        b: abs(&part.negative),
        a_source: part.positive,
        b_source: part.negative,
    })
}

/// A weighted projective space, with the weights reduced by their gcd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Wps {
    pub weights: Vec<i64>,
    pub raw_weights: Vec<i64>,
}

impl Wps {
    pub fn new(raw_weights: Vec<i64>) -> Self {
        let g = raw_weights.iter().fold(0i64, |g, w| g.gcd(w)).max(1);
        Wps {
            weights: raw_weights.iter().map(|w| w / g).collect(),
            raw_weights,
        }
    }

    pub fn complex_dim(&self) -> usize {
        self.weights.len() - 1
    }
}

/// The Segre-type quotient `P(a, -b)` inside `P(c)`, `c_ij = a_i + b_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegreQuotient {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub c: Vec<Vec<i64>>,
    pub d: Vec<Vec<i64>>,
    pub generators: usize,
    pub complex_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VarietyDescriptor {
    Wps(Wps),
    Segre(SegreQuotient),
}

impl VarietyDescriptor {
    pub fn complex_dim(&self) -> usize {
        match self {
            VarietyDescriptor::Wps(w) => w.complex_dim(),
            VarietyDescriptor::Segre(s) => s.complex_dim,
        }
    }

    pub fn betti(&self) -> BettiTable {
        betti_wps(self.complex_dim())
    }
}

pub fn classify(rep: &RepDescriptor, nu: &RayDir) -> Result<VarietyDescriptor> {
    let w = weight_vectors(rep, nu)?;
    let (short, long) = if w.a.len() <= w.b.len() {
        (&w.a, &w.b)
    } else {
        (&w.b, &w.a)
    };
    if short.len() == 1 {
        let raw = long.iter().map(|x| x + short[0]).collect();
        return Ok(VarietyDescriptor::Wps(Wps::new(raw)));
    }
    let (p, q) = (w.a.len(), w.b.len());
    Ok(VarietyDescriptor::Segre(SegreQuotient {
        c: degree_matrix(&w.a, &w.b),
        d: product_matrix(&w.a, &w.b),
        generators: segre_generators(p, q)?.len(),
        complex_dim: p + q - 2,
        a: w.a,
        b: w.b,
    }))
}

/// Weights `l_a + j` of the residual circle action for a uniform representation.
pub fn quotient_weights_uniform(rep: &RepDescriptor) -> Result<BTreeMap<IndexPair, i64>> {
    if !rep.is_uniform() {
        return Err(Error::NotUniform);
    }
    Ok(rep
        .index_set()
        .into_iter()
        .map(|idx| (idx, rep.summand(idx.a).l + idx.j as i64))
        .collect())
}

/// Whether every probe inside `wedge` yields the same partition.
pub fn wedge_partition_constant(
    rep: &RepDescriptor,
    wedge: &Wedge,
    probes: &[RayDir],
) -> Result<bool> {
    if !rep.is_uniform() {
        return Err(Error::NotUniform);
    }
    if probes.iter().any(|p| !wedge.contains_strictly(p)) {
        return Err(Error::ProbeOutsideWedge);
    }
    let mut parts = probes.iter().map(|p| partition(rep, p));
    let Some(first) = parts.next().transpose()? else {
        return Ok(true);
    };
    for p in parts {
        if p? != first {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_isotopy_range(k: u32, nu: &RayDir) -> Result<()> {
    let lower = (k as i64 - 1) * nu.y();
    if k < 2 || !(nu.x() > lower && lower > 0) {
        return Err(Error::OutOfRange(format!(
            "need k >= 2 and nu1 > (k-1) nu2 > 0, got k={k}, nu={nu}"
        )));
    }
    Ok(())
}

/// `a_ν(k)_j = ν1 j - ν2 (k - j)` for `j = 1..=k`.
pub fn mu_k_weights(k: u32, nu: &RayDir) -> Result<Vec<i64>> {
    check_isotopy_range(k, nu)?;
    let k = k as i64;
    Ok((1..=k).map(|j| nu.x() * j - nu.y() * (k - j)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsotopyEndpoints {
    pub ambient: Wps,
    pub divisor: Wps,
    /// The divisor identification holds only for `ν1/ν2` large enough, with
    /// no effective threshold.
    pub divisor_asymptotic: bool,
}

/// Reduction of `Sym^k` along `ν` with `ν1 > (k-1) ν2 > 0`: `P(1,…,k)`,
/// containing the divisor `P(2,…,k)` for `ν1 ≫ ν2`.
pub fn isotopy_endpoints(k: u32, nu: &RayDir) -> Result<IsotopyEndpoints> {
    check_isotopy_range(k, nu)?;
    let rep = RepDescriptor::validate(&[(0, k as i64)])?;
    let ambient = match classify(&rep, nu)? {
        VarietyDescriptor::Wps(w) => w,
        VarietyDescriptor::Segre(_) => {
            unreachable!("a single negative coordinate gives a plain WPS")
        }
    };
    debug_assert_eq!(ambient.weights, (1..=k as i64).collect::<Vec<_>>());
    Ok(IsotopyEndpoints {
        ambient,
        divisor: Wps::new((2..=k as i64).collect()),
        divisor_asymptotic: true,
    })
}
