//! The three worked example tensors (order 4) and the two diagonal scalings of the second one.

use crate::tensor::{Matrix, Tensor};

fn build(dim: usize, entries: &[([usize; 4], f64)]) -> Tensor {
    Tensor::new(4, dim, entries.iter().map(|(t, v)| (t.to_vec(), *v))).expect("fixture is well formed")
}

/// Order 4, dimension 3; semipositive.
///
/// `M u^3 = (u1^2 u2 + u2 u3^2 + u2^2 u3, u1^2 u2 + 2 u2^2 u3, -2 u1 u3^2 - 4 u2^2 u3)`.
pub fn example1() -> Tensor {
    build(
        3,
        &[
            ([1, 2, 1, 1], 1.0),
            ([1, 2, 3, 3], 2.0),
            ([1, 3, 2, 3], -1.0),
            ([1, 2, 2, 3], -3.0),
            ([1, 2, 3, 2], 4.0),
            ([2, 2, 1, 1], 1.0),
            ([2, 2, 2, 3], -3.0),
            ([2, 3, 2, 2], 5.0),
            ([3, 2, 3, 2], -1.0),
            ([3, 3, 2, 2], -3.0),
            ([3, 3, 1, 3], -2.0),
        ],
    )
}

/// Order 4, dimension 2; not semipositive (`u = (1, 1)` gives `(-3, -1)`).
///
/// `M u^3 = (u1^3 - 3 u1^2 u2 - u2^3, -3 u1^2 u2 + 2 u2^3)`.
pub fn example2() -> Tensor {
    build(
        2,
        &[
            ([1, 1, 1, 1], 1.0),
            ([1, 1, 2, 1], -1.0),
            ([1, 1, 1, 2], -3.0),
            ([1, 2, 2, 2], -1.0),
            ([1, 2, 1, 1], 1.0),
            ([2, 1, 2, 1], -3.0),
            ([2, 2, 2, 2], 2.0),
        ],
    )
}

/// Order 4, dimension 3; semipositive but not row diagonal.
///
/// `M u^3 = (2 u1 u2^2 + 2 u1^2 u3, -3 u1^2 u2 - u2^2 u3, 3 u1 u3^2)`.
pub fn example3() -> Tensor {
    build(
        3,
        &[
            ([1, 1, 2, 2], 2.0),
            ([1, 1, 3, 1], 2.0),
            ([2, 2, 1, 1], 1.0),
            ([2, 1, 1, 2], -4.0),
            ([2, 3, 2, 2], -1.0),
            ([3, 2, 3, 2], -1.0),
            ([3, 3, 2, 2], 1.0),
            ([3, 3, 1, 3], 3.0),
        ],
    )
}

/// `diag(0, 3)`.
pub fn d1() -> Matrix {
    Matrix::diag(&[0.0, 3.0])
}

/// `diag(2, 0)`.
pub fn d2() -> Matrix {
    Matrix::diag(&[2.0, 0.0])
}

/// Printed polynomial of [`example1`], evaluated directly.
pub fn example1_poly(u: &[f64]) -> Vec<f64> {
    let (a, b, c) = (u[0], u[1], u[2]);
    vec![
        a * a * b + b * c * c + b * b * c,
        a * a * b + 2.0 * b * b * c,
        -2.0 * a * c * c - 4.0 * b * b * c,
    ]
}

/// Printed polynomial of [`example2`].
pub fn example2_poly(u: &[f64]) -> Vec<f64> {
    let (a, b) = (u[0], u[1]);
    vec![a * a * a - 3.0 * a * a * b - b * b * b, -3.0 * a * a * b + 2.0 * b * b * b]
}

/// Printed polynomial of [`example3`].
pub fn example3_poly(u: &[f64]) -> Vec<f64> {
    let (a, b, c) = (u[0], u[1], u[2]);
    vec![
        2.0 * a * b * b + 2.0 * a * a * c,
        -3.0 * a * a * b - b * b * c,
        3.0 * a * c * c,
    ]
}
