//! Exponentials of the off-diagonal elements `B_z = i [[0, z], [z̄, 0]]` and
//! the conjugates `e^{B_z} D_ν e^{-B_z}`.

use nalgebra::Matrix2;
use num_complex::Complex64;

use super::Hermitian2;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `B_z = i [[0, z], [z̄, 0]]`.
pub fn b_matrix(z: Complex64) -> Matrix2<Complex64> {
    Matrix2::new(
        Complex64::new(0.0, 0.0),
        I * z,
        I * z.conj(),
        Complex64::new(0.0, 0.0),
    )
}

/// `sin(w)/w`, with a short series near zero.
fn sinc(w: f64) -> f64 {
    if w.abs() < 1e-4 {
        let w2 = w * w;
        1.0 - w2 / 6.0 + w2 * w2 / 120.0
    } else {
        w.sin() / w
    }
}

/// Closed form `cos|z| I + B_{sin|z| z/|z|}`.
pub fn exp_antidiag(z: Complex64) -> Matrix2<Complex64> {
    let r = z.norm();
    let c = Complex64::new(r.cos(), 0.0);
    let s = sinc(r);
    Matrix2::new(c, I * z * s, I * z.conj() * s, c)
}

/// Truncated exponential series `Σ_{m≤n} B_z^m / m!`.
pub fn exp_antidiag_series(z: Complex64, n: usize) -> Matrix2<Complex64> {
    let b = b_matrix(z);
    let mut term = Matrix2::identity();
    let mut sum = term;
    for m in 1..=n {
        term = term * b / Complex64::new(m as f64, 0.0);
        sum += term;
    }
    sum
}

/// `e^{B_z} diag(ν1, ν2) e^{-B_z}`.
pub fn conjugate_diag(z: Complex64, nu: (f64, f64)) -> Hermitian2 {
    let g = exp_antidiag(z);
    let g_inv = exp_antidiag(-z);
    let d = Hermitian2::diag(nu.0, nu.1).to_matrix();
    Hermitian2::from_matrix(&(g * d * g_inv))
}

/// `(ν1² - ν2²) λ sin(|z|)²`, the scalar moment of the `ν⊥`-circle along the
/// `e^{B_z}` orbit of a point with invariant `λ`.
pub fn eta_moment_scalar(nu: (f64, f64), lambda: f64, z: Complex64) -> f64 {
    (nu.0 * nu.0 - nu.1 * nu.1) * lambda * z.norm().sin().powi(2)
}
