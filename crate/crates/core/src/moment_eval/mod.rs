//! Floating-point evaluation of the moment maps `Φ` (full u(2)-valued) and
//! `Ψ` (its diagonal part), the off-diagonal component `Υ`, and the
//! associated small-matrix formulas.
//!
//! Every value is reported as the Hermitian matrix `H = -iΦ`.

mod antidiag;
mod hermitian;
mod lie;

pub use antidiag::{
    b_matrix, conjugate_diag, eta_moment_scalar, exp_antidiag, exp_antidiag_series,
};
pub use hermitian::Hermitian2;
pub use lie::{act, equivariance_residual, expm, lie_action_matrix, LieElement};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rep_model::{IndexPair, RepDescriptor};

/// A nonzero vector of `W`, stored flat in summand order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProjVector {
    #[serde(serialize_with = "ser_coords")]
    coords: Vec<Complex64>,
    #[serde(skip)]
    block_lens: Vec<usize>,
}

fn ser_coords<S: serde::Serializer>(c: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(c.len()))?;
    for z in c {
        seq.serialize_element(&[z.re, z.im])?;
    }
    seq.end()
}

impl ProjVector {
    pub fn from_flat(rep: &RepDescriptor, coords: &[Complex64]) -> Result<Self> {
        if coords.len() != rep.dim() {
            return Err(Error::LengthMismatch {
                expected: rep.dim(),
                got: coords.len(),
            });
        }
        let v = Self::from_flat_unchecked(rep, coords);
        if v.norm_sqr() == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(v)
    }

    pub(crate) fn from_flat_unchecked(rep: &RepDescriptor, coords: &[Complex64]) -> Self {
        ProjVector {
            coords: coords.to_vec(),
            block_lens: rep.summands().iter().map(|s| s.dim()).collect(),
        }
    }

    /// Build from per-summand blocks.
    pub fn from_blocks(rep: &RepDescriptor, blocks: &[Vec<Complex64>]) -> Result<Self> {
        if blocks.len() != rep.r() {
            return Err(Error::LengthMismatch {
                expected: rep.r(),
                got: blocks.len(),
            });
        }
        for (s, b) in rep.summands().iter().zip(blocks) {
            if b.len() != s.dim() {
                return Err(Error::BadLength {
                    k: s.k as usize,
                    got: b.len(),
                });
            }
        }
        Self::from_flat(rep, &blocks.concat())
    }

    /// Unit basis vector `e_{a,j}`.
    pub fn basis(rep: &RepDescriptor, idx: IndexPair) -> Self {
        let mut coords = vec![Complex64::new(0.0, 0.0); rep.dim()];
        coords[rep.flat_index(idx)] = Complex64::new(1.0, 0.0);
        Self::from_flat_unchecked(rep, &coords)
    }

    pub fn flat(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn blocks(&self) -> impl Iterator<Item = &[Complex64]> {
        let mut rest = self.coords.as_slice();
        self.block_lens.iter().map(move |&n| {
            let (head, tail) = rest.split_at(n);
            rest = tail;
            head
        })
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coords.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm_sqr().sqrt();
        ProjVector {
            coords: self.coords.iter().map(|z| z / n).collect(),
            block_lens: self.block_lens.clone(),
        }
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        ProjVector {
            coords: self.coords.iter().map(|z| z * c).collect(),
            block_lens: self.block_lens.clone(),
        }
    }
}

fn norm_sqr(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

/// `F1_j = sqrt(k-j+1) z_{j-1}`, `F2_j = sqrt(j) z_j` for `j = 1..=k`.
pub fn f_pair(k: usize, zb: &[Complex64]) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    if k == 0 || zb.len() != k + 1 {
        return Err(Error::BadLength { k, got: zb.len() });
    }
    let f1 = (1..=k)
        .map(|j| zb[j - 1] * ((k - j + 1) as f64).sqrt())
        .collect();
    let f2 = (1..=k).map(|j| zb[j] * (j as f64).sqrt()).collect();
    Ok((f1, f2))
}

/// Unnormalized `‖Zb‖²·(H_k + l·I)` for one block.
fn block_numerator(k: usize, l: i64, zb: &[Complex64]) -> Result<Hermitian2> {
    let n2 = norm_sqr(zb);
    let shift = Hermitian2::scalar(l as f64 * n2);
    if k == 0 {
        return Ok(shift);
    }
    let (f1, f2) = f_pair(k, zb)?;
    let off: Complex64 = f2.iter().zip(&f1).map(|(b, a)| b * a.conj()).sum();
    Ok(Hermitian2::new(norm_sqr(&f1), norm_sqr(&f2), off).add(&shift))
}

/// Moment value of the single summand `det^l ⊗ Sym^k` at `[Zb]`.
pub fn phi_block(k: usize, l: i64, zb: &[Complex64]) -> Result<Hermitian2> {
    if zb.len() != k + 1 {
        return Err(Error::BadLength { k, got: zb.len() });
    }
    let n2 = norm_sqr(zb);
    if n2 == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(block_numerator(k, l, zb)?.scale(1.0 / n2))
}

/// Moment value on `P(W)`: the `‖Z_a‖²/‖Z‖²`-weighted combination of block values.
pub fn phi_rep(rep: &RepDescriptor, z: &ProjVector) -> Result<Hermitian2> {
    let total = z.norm_sqr();
    if total == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mut acc = Hermitian2::scalar(0.0);
    for (s, zb) in rep.summands().iter().zip(z.blocks()) {
        acc = acc.add(&block_numerator(s.k as usize, s.l, zb)?);
    }
    Ok(acc.scale(1.0 / total))
}

/// Torus moment map: the diagonal of `phi_rep`.
pub fn psi_rep(rep: &RepDescriptor, z: &ProjVector) -> Result<(f64, f64)> {
    Ok(phi_rep(rep, z)?.diagonal())
}

/// Off-diagonal component `Υ = Φ12 / i`.
pub fn upsilon(rep: &RepDescriptor, z: &ProjVector) -> Result<Complex64> {
    Ok(phi_rep(rep, z)?.h12)
}

/// `Σ a_j d_j |z_j|² / Σ d_j |z_j|²`.
pub fn weighted_moment(a: &[f64], d: &[f64], z: &[Complex64]) -> Result<f64> {
    if d.len() != a.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            got: d.len(),
        });
    }
    if z.len() != a.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            got: z.len(),
        });
    }
    let (num, den) = a
        .iter()
        .zip(d)
        .zip(z)
        .fold((0.0, 0.0), |(n, m), ((ai, di), zi)| {
            let w = di * zi.norm_sqr();
            (n + ai * w, m + w)
        });
    if den == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(num / den)
}
