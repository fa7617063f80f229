//! 2×2-minor generators `T_ij T_ab - T_ib T_aj` of the Segre-type ideal.

use serde::Serialize;

use crate::error::{Error, Result};

/// The minor on rows `i < a` and columns `j < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SegreMinor {
    pub i: usize,
    pub j: usize,
    pub a: usize,
    pub b: usize,
}

impl SegreMinor {
    /// `deg_c` of the two monomials `T_ij T_ab` and `T_ib T_aj`.
    pub fn degrees(&self, c: &[Vec<i64>]) -> (i64, i64) {
        (
            c[self.i][self.j] + c[self.a][self.b],
            c[self.i][self.b] + c[self.a][self.j],
        )
    }
}

/// All minors of a `p × q` matrix of variables, `C(p,2)·C(q,2)` of them.
pub fn segre_generators(p: usize, q: usize) -> Result<Vec<SegreMinor>> {
    if p < 2 || q < 2 {
        return Err(Error::TooSmall);
    }
    let mut out = Vec::with_capacity(p * (p - 1) / 2 * q * (q - 1) / 2);
    for i in 0..p {
        for a in i + 1..p {
            for j in 0..q {
                for b in j + 1..q {
                    out.push(SegreMinor { i, j, a, b });
                }
            }
        }
    }
    Ok(out)
}

/// `c_ij = a_i + b_j`.
pub fn degree_matrix(a: &[i64], b: &[i64]) -> Vec<Vec<i64>> {
    a.iter()
        .map(|ai| b.iter().map(|bj| ai + bj).collect())
        .collect()
}

/// `d_ij = a_i · b_j`.
pub fn product_matrix(a: &[i64], b: &[i64]) -> Vec<Vec<i64>> {
    a.iter()
        .map(|ai| b.iter().map(|bj| ai * bj).collect())
        .collect()
}
