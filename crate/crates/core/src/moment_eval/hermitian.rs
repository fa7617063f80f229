use nalgebra::Matrix2;
use num_complex::Complex64;
use serde::Serialize;

/// A 2×2 Hermitian matrix `H`; the moment value is `Φ = iH`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Hermitian2 {
    pub h11: f64,
    pub h22: f64,
    #[serde(serialize_with = "ser_complex")]
    pub h12: Complex64,
}

fn ser_complex<S: serde::Serializer>(c: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&c.re)?;
    t.serialize_element(&c.im)?;
    t.end()
}

impl Hermitian2 {
    pub fn new(h11: f64, h22: f64, h12: Complex64) -> Self {
        Hermitian2 { h11, h22, h12 }
    }

    pub fn diag(h11: f64, h22: f64) -> Self {
        Hermitian2::new(h11, h22, Complex64::new(0.0, 0.0))
    }

    pub fn scalar(x: f64) -> Self {
        Hermitian2::diag(x, x)
    }

    /// Hermitian part of an arbitrary 2×2 matrix.
    pub fn from_matrix(m: &Matrix2<Complex64>) -> Self {
        Hermitian2 {
            h11: m[(0, 0)].re,
            h22: m[(1, 1)].re,
            h12: (m[(0, 1)] + m[(1, 0)].conj()) * 0.5,
        }
    }

    pub fn to_matrix(&self) -> Matrix2<Complex64> {
        Matrix2::new(
            Complex64::new(self.h11, 0.0),
            self.h12,
            self.h12.conj(),
            Complex64::new(self.h22, 0.0),
        )
    }

    pub fn h21(&self) -> Complex64 {
        self.h12.conj()
    }

    pub fn trace(&self) -> f64 {
        self.h11 + self.h22
    }

    pub fn det(&self) -> f64 {
        self.h11 * self.h22 - self.h12.norm_sqr()
    }

    pub fn diagonal(&self) -> (f64, f64) {
        (self.h11, self.h22)
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let mean = 0.5 * self.trace();
        let half_gap = (0.25 * (self.h11 - self.h22).powi(2) + self.h12.norm_sqr()).sqrt();
        (mean - half_gap, mean + half_gap)
    }

    pub fn scale(&self, s: f64) -> Self {
        Hermitian2::new(self.h11 * s, self.h22 * s, self.h12 * s)
    }

    pub fn add(&self, other: &Self) -> Self {
        Hermitian2::new(
            self.h11 + other.h11,
            self.h22 + other.h22,
            self.h12 + other.h12,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn frobenius(&self) -> f64 {
        (self.h11 * self.h11 + self.h22 * self.h22 + 2.0 * self.h12.norm_sqr()).sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let d = self.sub(other);
        d.h11.abs().max(d.h22.abs()).max(d.h12.norm())
    }
}
