//! The Lie algebra u(2), its action on `W` through the tridiagonal raising /
//! lowering generators, and exponentials of those generators.

use nalgebra::{DMatrix, DVector, Matrix2};
use num_complex::Complex64;

use super::{phi_rep, Hermitian2, ProjVector};
use crate::error::{Error, Result};
use crate::rep_model::RepDescriptor;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A skew-Hermitian 2×2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LieElement(Matrix2<Complex64>);

impl LieElement {
    pub const SKEW_TOL: f64 = 1e-12;

    pub fn new(m: Matrix2<Complex64>) -> Result<Self> {
        let defect = (m + m.adjoint())
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        if defect > Self::SKEW_TOL {
            return Err(Error::Malformed(format!(
                "matrix is not skew-Hermitian (defect {defect:e})"
            )));
        }
        Ok(LieElement(m))
    }

    /// `i·H` for a Hermitian `H`; skew-Hermitian by construction.
    pub fn from_hermitian(h: &Hermitian2) -> Self {
        LieElement(h.to_matrix() * I)
    }

    /// `ρ = diag(i, 0)`.
    pub fn rho() -> Self {
        LieElement(Matrix2::new(I, ZERO, ZERO, ZERO))
    }

    /// `γ = diag(0, i)`.
    pub fn gamma() -> Self {
        LieElement(Matrix2::new(ZERO, ZERO, ZERO, I))
    }

    /// `η = [[0, 1], [-1, 0]]`.
    pub fn eta() -> Self {
        LieElement(Matrix2::new(ZERO, ONE, -ONE, ZERO))
    }

    /// `ξ = [[0, i], [i, 0]]`.
    pub fn xi() -> Self {
        LieElement(Matrix2::new(ZERO, I, I, ZERO))
    }

    /// The basis `(η, ξ, ρ, γ)` of u(2).
    pub fn basis() -> [LieElement; 4] {
        [Self::eta(), Self::xi(), Self::rho(), Self::gamma()]
    }

    pub fn matrix(&self) -> &Matrix2<Complex64> {
        &self.0
    }

    pub fn trace(&self) -> Complex64 {
        self.0[(0, 0)] + self.0[(1, 1)]
    }

    pub fn add(&self, other: &Self) -> Self {
        LieElement(self.0 + other.0)
    }

    pub fn scale(&self, s: f64) -> Self {
        LieElement(self.0 * Complex64::new(s, 0.0))
    }

    /// `[α, H]`, Hermitian whenever `α` is skew-Hermitian.
    pub fn bracket(&self, h: &Hermitian2) -> Hermitian2 {
        let hm = h.to_matrix();
        Hermitian2::from_matrix(&(self.0 * hm - hm * self.0))
    }
}

/// Block-diagonal generator of the infinitesimal action of `α` on `W`.
///
/// On block `(k, l)`, column `j` holds
/// `-(l·tr α + (k-j) α11 + j α22)` on the diagonal,
/// `-sqrt(j (k-j+1)) α21` in row `j-1` and
/// `-sqrt((k-j)(j+1)) α12` in row `j+1`.
pub fn lie_action_matrix(rep: &RepDescriptor, alpha: &LieElement) -> DMatrix<Complex64> {
    let m = alpha.matrix();
    let (a11, a12, a21, a22) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    let tr = alpha.trace();
    let dim = rep.dim();
    let mut out = DMatrix::zeros(dim, dim);
    let mut offset = 0;
    for s in rep.summands() {
        let k = s.k as usize;
        let kf = k as f64;
        let l = s.l as f64;
        for j in 0..=k {
            let jf = j as f64;
            out[(offset + j, offset + j)] = -(tr * l + a11 * (kf - jf) + a22 * jf);
            if j >= 1 {
                out[(offset + j - 1, offset + j)] = -a21 * (jf * (kf - jf + 1.0)).sqrt();
            }
            if j < k {
                out[(offset + j + 1, offset + j)] = -a12 * ((kf - jf) * (jf + 1.0)).sqrt();
            }
        }
        offset += k + 1;
    }
    out
}

/// Matrix exponential (nalgebra's Padé approximant with scaling and squaring).
pub fn expm(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    a.exp()
}

/// `exp(t·A(α)) Z`, the group element `exp(tα)` acting on `Z`.
pub fn act(rep: &RepDescriptor, alpha: &LieElement, t: f64, z: &ProjVector) -> ProjVector {
    let gen = lie_action_matrix(rep, alpha) * Complex64::new(t, 0.0);
    let moved = expm(&gen) * DVector::from_column_slice(z.flat());
    ProjVector::from_flat_unchecked(rep, moved.as_slice())
}

/// Central-difference defect of `d/dt H(exp(tα)Z) = [α, H(Z)]`, in Frobenius norm.
pub fn equivariance_residual(
    rep: &RepDescriptor,
    z: &ProjVector,
    alpha: &LieElement,
    h: f64,
) -> Result<f64> {
    if h.is_nan() || h <= 0.0 {
        return Err(Error::OutOfRange(format!(
            "finite-difference step {h} must be > 0"
        )));
    }
    let forward = phi_rep(rep, &act(rep, alpha, h, z))?;
    let backward = phi_rep(rep, &act(rep, alpha, -h, z))?;
    let fd = forward.sub(&backward).scale(0.5 / h);
    let exact = alpha.bracket(&phi_rep(rep, z)?);
    Ok(fd.sub(&exact).frobenius())
}
