//! Dense two-phase tableau simplex with Bland's rule.
//!
//! Instantiated with `BigRational` it is exact, which is how the matrix class checkers use it.

use crate::linalg::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
}

/// Optimum `t*` of `min t s.t. (A x)_l <= t, x >= 0, sum x = 1` and its optimizer.
#[derive(Debug, Clone, PartialEq)]
pub struct LpResult<F> {
    pub status: LpStatus,
    pub value: F,
    pub x: Vec<F>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome<F> {
    Optimal { value: F, y: Vec<F> },
    Infeasible,
    Unbounded,
}

struct Tableau<F> {
    rows: Vec<Vec<F>>,
    rhs: Vec<F>,
    obj: Vec<F>,
    obj_rhs: F,
    basis: Vec<usize>,
}

impl<F: Scalar> Tableau<F> {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x = x.clone() / p.clone();
        }
        self.rhs[r] = self.rhs[r].clone() / p;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (x, pv) in self.rows[i].iter_mut().zip(&prow) {
                let d = f.clone() * pv.clone();
                *x -= &d;
            }
            let d = f * prhs.clone();
            self.rhs[i] -= &d;
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (x, pv) in self.obj.iter_mut().zip(&prow) {
                let d = f.clone() * pv.clone();
                *x -= &d;
            }
            let d = f * prhs;
            self.obj_rhs -= &d;
        }
        self.basis[r] = c;
    }

    /// Runs Bland's rule over columns `< allowed`. `false` means unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        let one = F::one();
        loop {
            let entering = (0..allowed).find(|&j| self.obj[j].is_negative() && !self.obj[j].negligible(&one));
            let Some(c) = entering else {
                return true;
            };
            let mut best: Option<(usize, F)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() || a.negligible(&one) {
                    continue;
                }
                let ratio = self.rhs[i].clone() / a.clone();
                best = match best {
                    None => Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < br || (ratio == br && self.basis[i] < self.basis[bi]) {
                            Some((i, ratio))
                        } else {
                            Some((bi, br))
                        }
                    }
                };
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

/// `min c^T y s.t. A y = b, y >= 0`.
pub fn simplex<F: Scalar>(c: &[F], a: &[Vec<F>], b: &[F]) -> Outcome<F> {
    let m = a.len();
    let nv = c.len();
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut r: Vec<F> = row
            .iter()
            .map(|x| if flip { -x.clone() } else { x.clone() })
            .collect();
        r.extend((0..m).map(|k| if k == i { F::one() } else { F::zero() }));
        rows.push(r);
        rhs.push(if flip { -bi.clone() } else { bi.clone() });
    }
    // phase I: minimize the sum of artificials
    let mut obj = vec![F::zero(); nv + m];
    let mut obj_rhs = F::zero();
    for (r, bi) in rows.iter().zip(&rhs) {
        for j in 0..nv {
            obj[j] -= &r[j];
        }
        obj_rhs -= bi;
    }
    let mut t = Tableau {
        rows,
        rhs,
        obj,
        obj_rhs,
        basis: (nv..nv + m).collect(),
    };
    t.optimize(nv + m);
    let one = F::one();
    if t.obj_rhs.is_negative() && !t.obj_rhs.negligible(&one) {
        return Outcome::Infeasible;
    }
    // drive artificials out of the basis, dropping redundant rows
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= nv {
            match (0..nv).find(|&j| !t.rows[i][j].negligible(&one)) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.rhs.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    // phase II
    t.obj = vec![F::zero(); nv + m];
    t.obj[..nv].clone_from_slice(c);
    t.obj_rhs = F::zero();
    for i in 0..t.rows.len() {
        let cb = c[t.basis[i]].clone();
        if cb.is_zero() {
            continue;
        }
        for j in 0..nv + m {
            let d = cb.clone() * t.rows[i][j].clone();
            t.obj[j] -= &d;
        }
        let d = cb * t.rhs[i].clone();
        t.obj_rhs -= &d;
    }
    if !t.optimize(nv) {
        return Outcome::Unbounded;
    }
    let mut y = vec![F::zero(); nv];
    for (i, &bv) in t.basis.iter().enumerate() {
        y[bv] = t.rhs[i].clone();
    }
    Outcome::Optimal {
        value: -t.obj_rhs,
        y,
    }
}

/// `min t s.t. (A x)_l <= t for every l, x >= 0, sum x = 1` for a square `A`.
pub fn min_max_over_simplex<F: Scalar>(a: &[Vec<F>]) -> LpResult<F> {
    let k = a.len();
    // variables: x (k), t+, t-, slacks (k)
    let nv = 2 * k + 2;
    let mut rows = Vec::with_capacity(k + 1);
    for (l, arow) in a.iter().enumerate() {
        let mut r = vec![F::zero(); nv];
        r[..k].clone_from_slice(arow);
        r[k] = -F::one();
        r[k + 1] = F::one();
        r[k + 2 + l] = F::one();
        rows.push(r);
    }
    let mut sum_row = vec![F::zero(); nv];
    for x in sum_row.iter_mut().take(k) {
        *x = F::one();
    }
    rows.push(sum_row);
    let mut b = vec![F::zero(); k + 1];
    b[k] = F::one();
    let mut c = vec![F::zero(); nv];
    c[k] = F::one();
    c[k + 1] = -F::one();
    match simplex(&c, &rows, &b) {
        Outcome::Optimal { value, y } => LpResult {
            status: LpStatus::Optimal,
            value,
            x: y[..k].to_vec(),
        },
        // t is bounded below by the smallest entry of A, and the simplex is nonempty
        Outcome::Infeasible | Outcome::Unbounded => LpResult {
            status: LpStatus::Infeasible,
            value: F::zero(),
            x: vec![F::zero(); k],
        },
    }
}
