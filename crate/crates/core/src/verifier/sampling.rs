//! Samplers for the unit sphere of `W`, for the level set `M^T_ν`, and for
//! weighted spheres; plus the deterministic RNG stream layout.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::dh_classifier::{n_weight, partition};
use crate::error::{Error, Result};
use crate::moment_eval::ProjVector;
use crate::orbit_geometry::RayDir;
use crate::rep_model::RepDescriptor;

/// Attempts before `sample_mtnu` gives up on a degenerate draw.
pub const MAX_RESAMPLES: usize = 64;

/// Minimum squared mass on each side of the partition for a draw to be kept.
const MIN_SIDE_MASS: f64 = 1e-8;

/// Generator for sample `index` of property `stream`.
///
/// Every (stream, index) pair gets its own ChaCha8 position: the key comes
/// from `seed`, the stream id selects the ChaCha stream, and the sample index
/// jumps the word position by `index · 2³²`. A sample never draws anywhere
/// near 2³² words, so sample streams cannot overlap, and the draws for one
/// sample do not depend on which samples ran before it.
pub fn sample_rng(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.set_word_pos(u128::from(index) << 32);
    rng
}

fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Uniform point of the unit sphere in `C^dim`.
pub fn sample_unit<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..dim).map(|_| complex_normal(rng)).collect();
        let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if n > 0.0 {
            return v.into_iter().map(|z| z / n).collect();
        }
    }
}

pub fn sample_unit_vector<R: Rng + ?Sized>(rep: &RepDescriptor, rng: &mut R) -> ProjVector {
    ProjVector::from_flat(rep, &sample_unit(rep.dim(), rng)).expect("unit sample is nonzero")
}

/// Point of `{Σ n_ν(a,j) |z_{a,j}|² = 0}` on the unit sphere.
pub fn sample_mtnu<R: Rng + ?Sized>(
    rep: &RepDescriptor,
    nu: &RayDir,
    rng: &mut R,
) -> Result<ProjVector> {
    sample_mtnu_from(rep, nu, MAX_RESAMPLES, || sample_unit(rep.dim(), rng))
}

/// `sample_mtnu` with the raw draw supplied by the caller.
pub(crate) fn sample_mtnu_from<F>(
    rep: &RepDescriptor,
    nu: &RayDir,
    max_tries: usize,
    mut draw: F,
) -> Result<ProjVector>
where
    F: FnMut() -> Vec<Complex64>,
{
    let part = partition(rep, nu)?;
    let weights: Vec<i64> = rep
        .index_set()
        .iter()
        .map(|&idx| n_weight(rep, nu, idx))
        .collect();
    let pos: Vec<usize> = part.positive.iter().map(|&i| rep.flat_index(i)).collect();
    let neg: Vec<usize> = part.negative.iter().map(|&i| rep.flat_index(i)).collect();
    for _ in 0..max_tries {
        let mut z = draw();
        let mass = |ix: &[usize], z: &[Complex64]| ix.iter().map(|&i| z[i].norm_sqr()).sum::<f64>();
        let weighted = |ix: &[usize], z: &[Complex64]| {
            ix.iter()
                .map(|&i| weights[i].abs() as f64 * z[i].norm_sqr())
                .sum::<f64>()
        };
        if mass(&pos, &z) < MIN_SIDE_MASS || mass(&neg, &z) < MIN_SIDE_MASS {
            continue;
        }
        let scale = (weighted(&neg, &z) / weighted(&pos, &z)).sqrt();
        for &i in &pos {
            z[i] *= scale;
        }
        return Ok(ProjVector::from_flat(rep, &z)?.normalized());
    }
    Err(Error::MaxResamplesExceeded(max_tries))
}

/// `|Σ n_ν(a,j) |z_{a,j}|²| / ‖Z‖²`.
pub fn mtnu_residual(rep: &RepDescriptor, nu: &RayDir, z: &ProjVector) -> f64 {
    let s: f64 = rep
        .index_set()
        .iter()
        .map(|&idx| n_weight(rep, nu, idx) as f64 * z.flat()[rep.flat_index(idx)].norm_sqr())
        .sum();
    s.abs() / z.norm_sqr()
}

/// Point of the ellipsoid `Σ w_j |v_j|² = 1`.
pub fn sample_weighted_sphere<R: Rng + ?Sized>(weights: &[f64], rng: &mut R) -> Vec<Complex64> {
    let v = sample_unit(weights.len(), rng);
    let q: f64 = weights.iter().zip(&v).map(|(w, z)| w * z.norm_sqr()).sum();
    let s = q.sqrt();
    v.into_iter().map(|z| z / s).collect()
}
