//! Sparse coordinate tensors and their multilinear algebra.
//!
//! A [`Tensor`] of order `r` and dimension `n` stores its nonzero entries keyed by index tuple.
//! Tuples are 1-based at the public boundary ([`Tensor::new`], [`Tensor::get`],
//! [`Tensor::entries`], [`Tensor::row_subtensor`]) and 0-based inside.
//!
//! Contractions visit entries in lexicographic tuple order and use compensated summation, so
//! results are reproducible bit for bit.

mod index_set;
mod matrix;
mod sum;
pub mod vector;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

pub use index_set::IndexSet;
pub use matrix::Matrix;
pub(crate) use sum::CompensatedSum;
pub use vector::vec_power;

use crate::error::{Error, Result};

/// Largest `n^r` for which [`Tensor::dense_entries`] is allowed.
pub const DENSE_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    order: usize,
    dim: usize,
    entries: BTreeMap<Vec<usize>, f64>,
}

impl Tensor {
    /// Builds an order-`order`, dimension-`dim` tensor from 1-based `(tuple, value)` pairs.
    ///
    /// Zero values are accepted and not stored. Out-of-range indices, wrong arity, duplicate
    /// tuples and non-finite values are rejected.
    pub fn new<I>(order: usize, dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, f64)>,
    {
        if order < 2 {
            return Err(Error::InvalidShape(format!("order must be >= 2, got {order}")));
        }
        Self::build(order, dim, entries)
    }

    fn build<I>(order: usize, dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, f64)>,
    {
        if dim < 1 {
            return Err(Error::InvalidShape("dimension must be >= 1".into()));
        }
        let mut map = BTreeMap::new();
        let mut seen = std::collections::BTreeSet::new();
        for (tuple, value) in entries {
            if tuple.len() != order {
                return Err(Error::BadArity {
                    found: tuple.len(),
                    tuple,
                    order,
                });
            }
            if let Some(&index) = tuple.iter().find(|&&i| i == 0 || i > dim) {
                return Err(Error::IndexOutOfRange { tuple, index, dim });
            }
            if !value.is_finite() {
                return Err(Error::NonFinite { tuple, value });
            }
            let key: Vec<usize> = tuple.iter().map(|i| i - 1).collect();
            if !seen.insert(key.clone()) {
                return Err(Error::DuplicateTuple { tuple });
            }
            if value != 0.0 {
                map.insert(key, value);
            }
        }
        Ok(Self {
            order,
            dim,
            entries: map,
        })
    }

    fn from_raw(order: usize, dim: usize, entries: BTreeMap<Vec<usize>, f64>) -> Self {
        Self {
            order,
            dim,
            entries: entries.into_iter().filter(|(_, v)| *v != 0.0).collect(),
        }
    }

    /// Zero tensor `O`.
    pub fn zeros(order: usize, dim: usize) -> Result<Self> {
        Self::new(order, dim, std::iter::empty())
    }

    /// Identity tensor: ones on the main diagonal.
    pub fn identity(order: usize, dim: usize) -> Result<Self> {
        Self::diagonal(order, &vec![1.0; dim])
    }

    /// Diagonal tensor with `d[i]` at `(i, ..., i)`.
    pub fn diagonal(order: usize, d: &[f64]) -> Result<Self> {
        Self::new(
            order,
            d.len(),
            d.iter().enumerate().map(|(i, &x)| (vec![i + 1; order], x)),
        )
    }

    /// A matrix as an order-2 tensor.
    pub fn from_matrix(a: &Matrix) -> Self {
        let n = a.dim();
        let mut map = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                map.insert(vec![i, j], a.get(i, j));
            }
        }
        Self::from_raw(2, n, map)
    }

    /// A vector as an order-1 tensor (right operand of the general product).
    pub fn from_vector(u: &[f64]) -> Self {
        let map = u.iter().enumerate().map(|(i, &x)| (vec![i], x)).collect();
        Self::from_raw(1, u.len(), map)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of stored (nonzero) entries.
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Entry at a 1-based tuple; absent tuples are zero.
    pub fn get(&self, tuple: &[usize]) -> f64 {
        if tuple.contains(&0) {
            return 0.0;
        }
        let key: Vec<usize> = tuple.iter().map(|i| i - 1).collect();
        self.entries.get(&key).copied().unwrap_or(0.0)
    }

    /// Nonzero entries with 1-based tuples, in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, f64)> + '_ {
        self.entries
            .iter()
            .map(|(k, &v)| (k.iter().map(|i| i + 1).collect(), v))
    }

    /// Every tuple (1-based) with its value, zeros included. Only for `n^r <= DENSE_LIMIT`.
    pub fn dense_entries(&self) -> Result<impl Iterator<Item = (Vec<usize>, f64)> + '_> {
        let total = (self.dim as u128).checked_pow(self.order as u32);
        match total {
            Some(t) if t <= DENSE_LIMIT as u128 => {}
            _ => {
                return Err(Error::SizeGuard(format!(
                    "dense view of {}^{} entries exceeds {DENSE_LIMIT}",
                    self.dim, self.order
                )))
            }
        }
        let (n, r) = (self.dim, self.order);
        let total = n.pow(r as u32);
        Ok((0..total).map(move |mut code| {
            let mut tuple = vec![0; r];
            for slot in tuple.iter_mut().rev() {
                *slot = code % n + 1;
                code /= n;
            }
            let v = self.get(&tuple);
            (tuple, v)
        }))
    }

    fn check_vec(&self, u: &[f64]) -> Result<()> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: u.len(),
            });
        }
        Ok(())
    }

    /// `M u^(r-1)`: the vector with components `sum m_{i i2..ir} u_{i2}..u_{ir}`.
    pub fn contract(&self, u: &[f64]) -> Result<Vec<f64>> {
        self.check_vec(u)?;
        let mut acc = vec![CompensatedSum::default(); self.dim];
        for (k, &v) in &self.entries {
            let term = k[1..].iter().fold(v, |p, &j| p * u[j]);
            acc[k[0]].add(term);
        }
        Ok(acc.iter().map(CompensatedSum::value).collect())
    }

    /// `u^T M u^(r-1)`.
    pub fn scalar_form(&self, u: &[f64]) -> Result<f64> {
        let v = self.contract(u)?;
        Ok(vector::dot(u, &v))
    }

    /// `true` iff `max_i |(M u^(r-1))_i| <= tol`.
    pub fn is_null_vector(&self, u: &[f64], tol: f64) -> Result<bool> {
        Ok(vector::max_abs(&self.contract(u)?) <= tol)
    }

    /// Principal subtensor on `j`, re-indexed by position in `j`.
    pub fn principal_subtensor(&self, j: &IndexSet) -> Result<Tensor> {
        if j.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        if let Some(&bad) = j.members().iter().find(|&&i| i >= self.dim) {
            return Err(Error::IndexOutOfRange {
                tuple: j.to_one_based(),
                index: bad + 1,
                dim: self.dim,
            });
        }
        let mut pos = vec![usize::MAX; self.dim];
        for (p, &i) in j.members().iter().enumerate() {
            pos[i] = p;
        }
        let map = self
            .entries
            .iter()
            .filter(|(k, _)| k.iter().all(|&i| pos[i] != usize::MAX))
            .map(|(k, &v)| (k.iter().map(|&i| pos[i]).collect(), v))
            .collect();
        Ok(Self::from_raw(self.order, j.len(), map))
    }

    /// Row subtensor `R_i(M)` (1-based `i`): the order `r-1` slice with the first index fixed.
    pub fn row_subtensor(&self, i: usize) -> Result<Tensor> {
        if i == 0 || i > self.dim {
            return Err(Error::IndexOutOfRange {
                tuple: vec![i],
                index: i,
                dim: self.dim,
            });
        }
        let map = self
            .entries
            .iter()
            .filter(|(k, _)| k[0] == i - 1)
            .map(|(k, &v)| (k[1..].to_vec(), v))
            .collect();
        Ok(Self::from_raw(self.order - 1, self.dim, map))
    }

    /// Every nonzero entry has all indices equal.
    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|k| k.iter().all(|&i| i == k[0]))
    }

    /// Every row subtensor is diagonal: nonzero entries satisfy `i2 = ... = ir`.
    pub fn is_row_diagonal(&self) -> bool {
        self.entries
            .keys()
            .all(|k| k.len() < 3 || k[2..].iter().all(|&i| i == k[1]))
    }

    /// `N >= O` entrywise.
    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|&v| v >= 0.0)
    }

    /// Majorization matrix with entries `m_{i j ... j}`.
    pub fn majorization(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim);
        for (k, &v) in &self.entries {
            if k.len() >= 2 && k[2..].iter().all(|&i| i == k[1]) {
                m.set(k[0], k[1], v);
            }
        }
        m
    }

    /// The order-2 tensor as a matrix.
    pub fn to_matrix(&self) -> Option<Matrix> {
        if self.order != 2 {
            return None;
        }
        let mut m = Matrix::zeros(self.dim);
        for (k, &v) in &self.entries {
            m.set(k[0], k[1], v);
        }
        Some(m)
    }

    /// General product `A B` of an order-`p` tensor with an order-`k` tensor:
    ///
    /// `c_{j b1 .. b(p-1)} = sum a_{j j2 .. jp} b_{j2 b1} .. b_{jp b(p-1)}`, each `b_t` a block of
    /// `k - 1` indices. The result has order `(p-1)(k-1) + 1`; with `k = 1` it is the contraction.
    pub fn shao_product(&self, b: &Tensor) -> Result<Tensor> {
        if self.dim != b.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: b.dim,
            });
        }
        if self.order < 2 {
            return Err(Error::InvalidShape("left factor must have order >= 2".into()));
        }
        let out_order = (self.order - 1) * (b.order - 1) + 1;
        let mut rows: Vec<Vec<(&[usize], f64)>> = vec![Vec::new(); b.dim];
        for (k, &v) in &b.entries {
            rows[k[0]].push((&k[1..], v));
        }
        let mut acc: BTreeMap<Vec<usize>, CompensatedSum> = BTreeMap::new();
        for (a_key, &a_val) in &self.entries {
            let factors: Vec<&Vec<(&[usize], f64)>> = a_key[1..].iter().map(|&j| &rows[j]).collect();
            if factors.iter().any(|f| f.is_empty()) {
                continue;
            }
            // one B entry per factor
            let mut pick = vec![0usize; factors.len()];
            'odometer: loop {
                let mut key = Vec::with_capacity(out_order);
                key.push(a_key[0]);
                let mut val = a_val;
                for (f, &p) in factors.iter().zip(&pick) {
                    let (rest, bv) = f[p];
                    key.extend_from_slice(rest);
                    val *= bv;
                }
                acc.entry(key).or_default().add(val);
                let mut t = pick.len();
                loop {
                    if t == 0 {
                        break 'odometer;
                    }
                    t -= 1;
                    pick[t] += 1;
                    if pick[t] < factors[t].len() {
                        break;
                    }
                    pick[t] = 0;
                }
            }
        }
        let map = acc.into_iter().map(|(k, s)| (k, s.value())).collect();
        Ok(Self::from_raw(out_order, self.dim, map))
    }

    /// `A M` for a matrix `A` (row scaling for diagonal `A`).
    pub fn left_mul(&self, a: &Matrix) -> Result<Tensor> {
        Tensor::from_matrix(a).shao_product(self)
    }

    /// `M A` for a matrix `A`.
    pub fn right_mul(&self, a: &Matrix) -> Result<Tensor> {
        self.shao_product(&Tensor::from_matrix(a))
    }

    /// `P M P^T` for a permutation matrix `P`.
    ///
    /// With `pi(l)` the row holding the one in column `l` of `P`,
    /// `(P M P^T u^(r-1))_{pi(l)} = (M (P^T u)^(r-1))_l` and `u_{pi(l)} = (P^T u)_l`.
    pub fn permute_conjugate(&self, p: &Matrix) -> Result<Tensor> {
        if !p.is_permutation() {
            return Err(Error::NotPermutation);
        }
        self.left_mul(p)?.right_mul(&p.transpose())
    }

    fn check_same_shape(&self, other: &Tensor) -> Result<()> {
        if self.order != other.order || self.dim != other.dim {
            return Err(Error::ShapeMismatch(self.order, self.dim, other.order, other.dim));
        }
        Ok(())
    }

    /// Entrywise sum; exact zeros are dropped.
    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        self.check_same_shape(other)?;
        let mut map = self.entries.clone();
        for (k, &v) in &other.entries {
            match map.entry(k.clone()) {
                Entry::Occupied(mut e) => {
                    *e.get_mut() += v;
                }
                Entry::Vacant(e) => {
                    e.insert(v);
                }
            }
        }
        Ok(Self::from_raw(self.order, self.dim, map))
    }

    pub fn scale(&self, alpha: f64) -> Tensor {
        let map = self.entries.iter().map(|(k, &v)| (k.clone(), alpha * v)).collect();
        Self::from_raw(self.order, self.dim, map)
    }

    pub(crate) fn packed(&self) -> Packed {
        Packed::new(self)
    }
}

/// Flat copy of a tensor's entries for the hot loops of the checkers and Newton.
#[derive(Debug, Clone)]
pub(crate) struct Packed {
    pub(crate) dim: usize,
    pub(crate) order: usize,
    rows: Vec<usize>,
    rest: Vec<usize>,
    vals: Vec<f64>,
}

impl Packed {
    fn new(t: &Tensor) -> Self {
        let mut rows = Vec::with_capacity(t.nnz());
        let mut rest = Vec::with_capacity(t.nnz() * (t.order - 1));
        let mut vals = Vec::with_capacity(t.nnz());
        for (k, &v) in &t.entries {
            rows.push(k[0]);
            rest.extend_from_slice(&k[1..]);
            vals.push(v);
        }
        Self {
            dim: t.dim,
            order: t.order,
            rows,
            rest,
            vals,
        }
    }

    /// Same value and summation order as [`Tensor::contract`].
    pub(crate) fn contract_into(&self, u: &[f64], out: &mut [f64]) {
        let w = self.order - 1;
        let mut acc = [CompensatedSum::default(); 16];
        let mut big;
        let acc: &mut [CompensatedSum] = if self.dim <= 16 {
            &mut acc[..self.dim]
        } else {
            big = vec![CompensatedSum::default(); self.dim];
            &mut big
        };
        for (e, (&row, &v)) in self.rows.iter().zip(&self.vals).enumerate() {
            let term = self.rest[e * w..(e + 1) * w].iter().fold(v, |p, &j| p * u[j]);
            acc[row].add(term);
        }
        for (o, a) in out.iter_mut().zip(acc.iter()) {
            *o = a.value();
        }
    }

    pub(crate) fn contract(&self, u: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        self.contract_into(u, &mut out);
        out
    }

    /// Jacobian of `u -> M u^(r-1)`, row-major `dim x dim`.
    pub(crate) fn jacobian(&self, u: &[f64]) -> Vec<Vec<f64>> {
        let w = self.order - 1;
        let mut jac = vec![vec![0.0; self.dim]; self.dim];
        let mut prefix = vec![1.0; w + 1];
        for (e, (&row, &v)) in self.rows.iter().zip(&self.vals).enumerate() {
            let idx = &self.rest[e * w..(e + 1) * w];
            for t in 0..w {
                prefix[t + 1] = prefix[t] * u[idx[t]];
            }
            let mut suffix = 1.0;
            for t in (0..w).rev() {
                jac[row][idx[t]] += v * prefix[t] * suffix;
                suffix *= u[idx[t]];
            }
        }
        jac
    }
}
