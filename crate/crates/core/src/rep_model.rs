//! Representation descriptors `W = ⊕_a det^{l_a} ⊗ Sym^{k_a}(C²)` and the
//! structural predicates on them.
//!
//! Summands keep their input order; every index map downstream (coordinate
//! blocks, `IndexPair` enumeration, weight vectors) follows that order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One isotypical summand `det^l ⊗ Sym^k(C²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Summand {
    pub l: i64,
    pub k: u32,
}

impl Summand {
    pub fn new(l: i64, k: u32) -> Self {
        Summand { l, k }
    }

    /// `k + 2l`, the trace of the summand's moment map.
    pub fn trace_weight(&self) -> i64 {
        self.k as i64 + 2 * self.l
    }

    pub fn dim(&self) -> usize {
        self.k as usize + 1
    }
}

/// Coordinate label `(a, j)`: summand `a` (1-based) and weight index
/// `j ∈ 0..=k_a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexPair {
    pub a: usize,
    pub j: usize,
}

impl IndexPair {
    pub fn new(a: usize, j: usize) -> Self {
        IndexPair { a, j }
    }
}

impl std::fmt::Display for IndexPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.a, self.j)
    }
}

/// A validated, nonempty sequence of summands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RepDescriptor {
    summands: Vec<Summand>,
}

#[derive(Deserialize)]
struct RawSummand {
    l: i64,
    k: i64,
}

#[derive(Deserialize)]
struct RawDescriptor {
    summands: Vec<RawSummand>,
}

impl RepDescriptor {
    /// Build from raw `(l, k)` pairs, rejecting empty input and negative `k`.
    pub fn validate(raw: &[(i64, i64)]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyDescriptor);
        }
        let summands = raw
            .iter()
            .enumerate()
            .map(|(i, &(l, k))| {
                u32::try_from(k)
                    .map(|k| Summand { l, k })
                    .map_err(|_| Error::NegativeSymmetricDegree(i + 1))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RepDescriptor { summands })
    }

    /// Parse the canonical JSON form `{"summands":[{"l":..,"k":..},..]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawDescriptor =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        let pairs: Vec<_> = raw.summands.iter().map(|s| (s.l, s.k)).collect();
        Self::validate(&pairs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serializes")
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    /// Summand `a`, 1-based.
    pub fn summand(&self, a: usize) -> Summand {
        self.summands[a - 1]
    }

    pub fn r(&self) -> usize {
        self.summands.len()
    }

    pub fn dim(&self) -> usize {
        self.summands.iter().map(Summand::dim).sum()
    }

    /// Offset of block `a` (1-based) in the flat coordinate vector.
    pub fn block_offset(&self, a: usize) -> usize {
        self.summands[..a - 1].iter().map(Summand::dim).sum()
    }

    /// Flat coordinate position of `idx`.
    pub fn flat_index(&self, idx: IndexPair) -> usize {
        self.block_offset(idx.a) + idx.j
    }

    /// Generic: every `(l, 1)` summand occurs at least twice.
    pub fn is_generic(&self) -> bool {
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        for s in self.summands.iter().filter(|s| s.k == 1) {
            *counts.entry(s.l).or_default() += 1;
        }
        counts.values().all(|&c| c >= 2)
    }

    /// Generic with `k_a + 2 l_a` constant across summands.
    pub fn is_uniform(&self) -> bool {
        let first = self.summands[0].trace_weight();
        self.is_generic() && self.summands.iter().all(|s| s.trace_weight() == first)
    }

    /// All `k_a + 2 l_a` strictly of one sign, so zero is not a moment value.
    pub fn moment_never_zero(&self) -> bool {
        let w = self.summands.iter().map(Summand::trace_weight);
        w.clone().all(|t| t > 0) || w.into_iter().all(|t| t < 0)
    }

    pub fn index_set(&self) -> Vec<IndexPair> {
        self.summands
            .iter()
            .enumerate()
            .flat_map(|(i, s)| (0..=s.k as usize).map(move |j| IndexPair::new(i + 1, j)))
            .collect()
    }
}
