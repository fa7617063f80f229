//! Rational Betti tables of the reduced spaces.

use serde::Serialize;

/// Betti numbers `b_0, b_1, …` (finite support).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BettiTable(pub Vec<u64>);

impl BettiTable {
    pub fn get(&self, q: usize) -> u64 {
        self.0.get(q).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `H^q(conic reduction) ≅ H^{q-2}(base) ⊕ H^q(base)`.
pub fn betti_conic_reduction(base: &BettiTable) -> BettiTable {
    let n = base.len() + 2;
    BettiTable(
        (0..n)
            .map(|q| base.get(q) + if q >= 2 { base.get(q - 2) } else { 0 })
            .collect(),
    )
}

/// Künneth product with `P¹`: convolution with `[1, 0, 1]`.
pub fn betti_product_p1(base: &BettiTable) -> BettiTable {
    const P1: [u64; 3] = [1, 0, 1];
    let mut out = vec![0u64; base.len() + P1.len() - 1];
    for (i, b) in base.0.iter().enumerate() {
        for (j, p) in P1.iter().enumerate() {
            out[i + j] += b * p;
        }
    }
    BettiTable(out)
}

/// Betti numbers of a weighted projective space of complex dimension `d`.
pub fn betti_wps(complex_dim: usize) -> BettiTable {
    BettiTable(
        (0..=2 * complex_dim)
            .map(|q| u64::from(q % 2 == 0))
            .collect(),
    )
}
