use nalgebra::{DMatrix, DVector};

use crate::moment_eval::{lie_action_matrix, LieElement, ProjVector};
use crate::rep_model::RepDescriptor;

/// Realified fundamental vector fields of `η, ξ, ρ, γ` at `Z`, in that order.
pub fn fundamental_fields(rep: &RepDescriptor, z: &ProjVector) -> [Vec<f64>; 4] {
    let zv = DVector::from_column_slice(z.flat());
    LieElement::basis().map(|beta| field(rep, &beta, &zv))
}

/// Realified field of one Lie algebra element.
pub fn field_of(rep: &RepDescriptor, beta: &LieElement, z: &ProjVector) -> Vec<f64> {
    field(rep, beta, &DVector::from_column_slice(z.flat()))
}

fn field(rep: &RepDescriptor, beta: &LieElement, z: &DVector<num_complex::Complex64>) -> Vec<f64> {
    (lie_action_matrix(rep, beta) * z)
        .iter()
        .flat_map(|c| [c.re, c.im])
        .collect()
}

/// Number of singular values above `rel_tol` times the largest one.
pub fn numeric_rank(vectors: &[Vec<f64>], rel_tol: f64) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let m = DMatrix::from_fn(first.len(), vectors.len(), |r, c| vectors[c][r]);
    let sv = m.singular_values();
    let top = sv.iter().cloned().fold(0.0, f64::max);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * top).count()
}
