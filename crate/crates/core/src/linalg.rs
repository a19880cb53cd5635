//! Dense Gaussian elimination over `f64` or exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Field used by the elimination and the simplex tableau.
pub trait Scalar:
    Clone
    + PartialOrd
    + Signed
    + std::fmt::Debug
    + for<'a> std::ops::AddAssign<&'a Self>
    + for<'a> std::ops::SubAssign<&'a Self>
{
    /// Pivot test: `self` is zero relative to `scale`.
    fn negligible(&self, scale: &Self) -> bool;
}

impl Scalar for f64 {
    fn negligible(&self, scale: &Self) -> bool {
        self.abs() <= 1e-12 * scale.max(1e-300)
    }
}

impl Scalar for BigRational {
    fn negligible(&self, _scale: &Self) -> bool {
        self.is_zero()
    }
}

/// Exact rational copy of a finite float.
pub fn to_rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite input")
}

pub fn to_f64(x: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

/// Solves `a x = b` with partial pivoting; `None` when `a` is singular.
pub fn solve<F: Scalar>(mut a: Vec<Vec<F>>, mut b: Vec<F>) -> Option<Vec<F>> {
    let n = b.len();
    debug_assert!(a.len() == n && a.iter().all(|r| r.len() == n));
    let scale = a
        .iter()
        .flatten()
        .map(|x| x.abs())
        .fold(F::zero(), |m, x| if x > m { x } else { m });
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| {
            a[i][col]
                .abs()
                .partial_cmp(&a[j][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[piv][col].negligible(&scale) {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let f = a[row][col].clone() / a[col][col].clone();
            let (upper, lower) = a.split_at_mut(row);
            for (x, p) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                let d = f.clone() * p.clone();
                *x -= &d;
            }
            let d = f * b[col].clone();
            b[row] -= &d;
        }
    }
    let mut x = vec![F::zero(); n];
    for row in (0..n).rev() {
        let mut s = b[row].clone();
        for k in row + 1..n {
            let d = a[row][k].clone() * x[k].clone();
            s -= &d;
        }
        x[row] = s / a[row][row].clone();
    }
    Some(x)
}

/// Smallest positive integer multiple of a nonnegative rational vector, divided by the gcd.
pub fn primitive_integer_vector(x: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = x.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
    let ints: Vec<BigInt> = x.iter().map(|v| (v * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}
