//! Helpers on plain `[f64]` vectors.
//!
//! Vectors are ordinary slices; the comparison predicates are exact on the stored values.

use crate::error::{Error, Result};

use super::sum::CompensatedSum;

/// Componentwise power `u^[p]`.
///
/// Integer exponents are applied to any finite component; fractional exponents require every
/// component to be nonnegative.
pub fn vec_power(u: &[f64], p: f64) -> Result<Vec<f64>> {
    let integral = p.fract() == 0.0 && p.abs() <= i32::MAX as f64;
    if !integral {
        if let Some((index, &value)) = u.iter().enumerate().find(|(_, &x)| x < 0.0) {
            return Err(Error::FractionalPowerOfNegative {
                index: index + 1,
                value,
                power: p,
            });
        }
    }
    Ok(u
        .iter()
        .map(|&x| if integral { x.powi(p as i32) } else { x.powf(p) })
        .collect())
}

pub fn is_nonnegative(u: &[f64]) -> bool {
    u.iter().all(|&x| x >= 0.0)
}

pub fn is_positive(u: &[f64]) -> bool {
    u.iter().all(|&x| x > 0.0)
}

pub fn is_nonzero(u: &[f64]) -> bool {
    u.iter().any(|&x| x != 0.0)
}

pub fn dot(u: &[f64], v: &[f64]) -> f64 {
    let mut acc = CompensatedSum::default();
    for (a, b) in u.iter().zip(v) {
        acc.add(a * b);
    }
    acc.value()
}

pub fn max_abs(u: &[f64]) -> f64 {
    u.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// All-ones vector `e`.
pub fn ones(n: usize) -> Vec<f64> {
    vec![1.0; n]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_root_of_squares() {
        let r = vec_power(&[4.0, 9.0], 0.5).unwrap();
        assert!((r[0] - 2.0).abs() < 1e-15 && (r[1] - 3.0).abs() < 1e-15);
    }

    #[test]
    fn integer_powers() {
        assert_eq!(vec_power(&[2.0, 3.0], 3.0).unwrap(), vec![8.0, 27.0]);
        assert_eq!(vec_power(&[1.0, 0.0, 2.0], 1.0).unwrap(), vec![1.0, 0.0, 2.0]);
        assert_eq!(vec_power(&[-2.0], 3.0).unwrap(), vec![-8.0]);
    }

    #[test]
    fn fractional_power_of_negative_is_rejected() {
        let err = vec_power(&[1.0, -1.0], 1.0 / 3.0).unwrap_err();
        assert!(matches!(err, Error::FractionalPowerOfNegative { index: 2, .. }));
    }

    #[test]
    fn predicates() {
        assert!(is_nonnegative(&[0.0, 1.0]));
        assert!(!is_positive(&[0.0, 1.0]));
        assert!(!is_nonzero(&[0.0, -0.0]));
        assert_eq!(max_abs(&[1.0, -3.0]), 3.0);
    }
}
