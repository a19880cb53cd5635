//! Small-instance solvers for the tensor complementarity problem
//! `u >= 0, w = M u^(r-1) + q >= 0, u^T w = 0` and its linear special case.
//!
//! Both solvers enumerate supports `J`: outside `J` the solution vanishes, on `J` the slack does.
//! The linear solver is exact. The tensor solver runs multi-start damped Newton per support and
//! returns the set of solutions it found, which need not be every solution.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{solve, to_f64, to_rational};
use crate::par;
use crate::tensor::{vector, IndexSet, Matrix, Packed, Tensor};

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub newton_starts: usize,
    pub newton_iters: usize,
    /// Initial step length of the halving line search, in `(0, 1]`.
    pub damping: f64,
    pub tol_residual: f64,
    pub dedupe_radius: f64,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            newton_starts: 25,
            newton_iters: 100,
            damping: 1.0,
            tol_residual: 1e-10,
            dedupe_radius: 1e-8,
            seed: 0,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.newton_starts == 0 || self.newton_iters == 0 {
            return Err(Error::InvalidShape("newton_starts and newton_iters must be positive".into()));
        }
        if !(self.damping > 0.0 && self.damping <= 1.0) {
            return Err(Error::InvalidShape("damping must lie in (0, 1]".into()));
        }
        if !(self.tol_residual > 0.0 && self.dedupe_radius > 0.0) {
            return Err(Error::InvalidShape("tolerances must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TcpSolution {
    pub u: Vec<f64>,
    pub w: Vec<f64>,
    /// Indices with `u_i > tol`; empty for `u = 0`.
    pub support: IndexSet,
    /// Largest of `|u_i w_i|` and the negative parts of `u` and `w`.
    pub residual: f64,
}

impl TcpSolution {
    fn new(u: Vec<f64>, w: Vec<f64>, tol: f64) -> Self {
        let support = IndexSet::from_zero_based((0..u.len()).filter(|&i| u[i] > tol).collect());
        let residual = u
            .iter()
            .zip(&w)
            .map(|(&a, &b)| (a * b).abs().max(-a).max(-b))
            .fold(0.0, f64::max);
        Self { u, w, support, residual }
    }
}

/// Counters collected over all supports and starts.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SolveDiagnostics {
    pub supports: usize,
    pub starts: usize,
    pub converged: usize,
    pub singular_jacobians: usize,
    pub line_search_failures: usize,
    /// Converged points that failed the complementarity checks.
    pub rejected: usize,
    /// Supports where every start hit a singular Jacobian.
    pub singular_supports: usize,
}

impl SolveDiagnostics {
    fn merge(&mut self, o: &SolveDiagnostics) {
        self.supports += o.supports;
        self.starts += o.starts;
        self.converged += o.converged;
        self.singular_jacobians += o.singular_jacobians;
        self.line_search_failures += o.line_search_failures;
        self.rejected += o.rejected;
        self.singular_supports += o.singular_supports;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub solutions: Vec<TcpSolution>,
    pub diagnostics: SolveDiagnostics,
}

const MAX_WORK: u128 = 1_000_000;

/// Rejects instances whose enumeration would exceed `2^n * newton_starts > 10^6`.
pub fn check_size(n: usize, cfg: &SolverConfig) -> Result<()> {
    let work = if n >= 64 { u128::MAX } else { (1u128 << n).saturating_mul(cfg.newton_starts as u128) };
    if work > MAX_WORK {
        return Err(Error::SizeGuard(format!(
            "2^{n} supports x {} starts exceeds {MAX_WORK}",
            cfg.newton_starts
        )));
    }
    Ok(())
}

fn check_dims(m: &Tensor, q: &[f64]) -> Result<()> {
    if q.len() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: q.len(),
        });
    }
    Ok(())
}

fn slack(m: &Tensor, q: &[f64], u: &[f64]) -> Result<Vec<f64>> {
    let mut w = m.contract(u)?;
    w.iter_mut().zip(q).for_each(|(wi, qi)| *wi += qi);
    Ok(w)
}

/// Max-norm of `min(u, M u^(r-1) + q)`.
pub fn natural_residual(m: &Tensor, q: &[f64], u: &[f64]) -> Result<f64> {
    check_dims(m, q)?;
    let w = slack(m, q, u)?;
    Ok(u.iter().zip(&w).map(|(a, b)| a.min(*b).abs()).fold(0.0, f64::max))
}

/// `u >= -tol`, `w >= -tol` and `|u^T w| <= tol` with `w` recomputed.
pub fn verify_solution(m: &Tensor, q: &[f64], u: &[f64], tol: f64) -> Result<bool> {
    check_dims(m, q)?;
    let w = slack(m, q, u)?;
    Ok(u.iter().all(|&x| x >= -tol) && w.iter().all(|&x| x >= -tol) && vector::dot(u, &w).abs() <= tol)
}

/// Newton on `f(x) = (M^J x^(r-1)) + q_J = 0` over `x > 0`, or, when `q_J = 0`, Gauss-Newton on
/// the same system augmented with `sum x = 1` so that nontrivial rays are isolated.
struct SupportSystem {
    packed: Packed,
    q: Vec<f64>,
    homogeneous: bool,
}

enum NewtonEnd {
    Converged(Vec<f64>),
    Singular,
    LineSearch,
    Exhausted,
}

const CLAMP: f64 = 1e-12;
const STEP_TOL: f64 = 1e-6;
const MAX_HALVINGS: usize = 30;

impl SupportSystem {
    fn residual(&self, x: &[f64]) -> Vec<f64> {
        let mut f = self.packed.contract(x);
        f.iter_mut().zip(&self.q).for_each(|(fi, qi)| *fi += qi);
        if self.homogeneous {
            f.push(x.iter().sum::<f64>() - 1.0);
        }
        f
    }

    fn merit(f: &[f64]) -> f64 {
        f.iter().map(|x| x * x).sum()
    }

    fn direction(&self, x: &[f64], f: &[f64]) -> Option<Vec<f64>> {
        let jac = self.packed.jacobian(x);
        let k = x.len();
        if !self.homogeneous {
            return solve(jac, f.iter().map(|v| -v).collect());
        }
        // regularized normal equations of the augmented system
        let mut rows = jac;
        rows.push(vec![1.0; k]);
        let mut jtj = vec![vec![0.0; k]; k];
        let mut jtf = vec![0.0; k];
        for (row, fi) in rows.iter().zip(f) {
            for a in 0..k {
                jtf[a] -= row[a] * fi;
                for b in 0..k {
                    jtj[a][b] += row[a] * row[b];
                }
            }
        }
        let trace: f64 = (0..k).map(|a| jtj[a][a]).sum();
        let mu = 1e-10 * trace.max(1.0);
        for (a, row) in jtj.iter_mut().enumerate() {
            row[a] += mu;
        }
        solve(jtj, jtf)
    }

    fn newton(&self, start: Vec<f64>, cfg: &SolverConfig) -> NewtonEnd {
        let mut x = start;
        let mut f = self.residual(&x);
        for _ in 0..cfg.newton_iters {
            let Some(d) = self.direction(&x, &f) else {
                return NewtonEnd::Singular;
            };
            let fnorm = vector::max_abs(&f);
            let scale = vector::max_abs(&x);
            if fnorm <= cfg.tol_residual && vector::max_abs(&d) <= STEP_TOL * scale {
                let polished: Vec<f64> = x.iter().zip(&d).map(|(a, b)| (a + b).max(CLAMP)).collect();
                let fp = self.residual(&polished);
                return NewtonEnd::Converged(if Self::merit(&fp) <= Self::merit(&f) { polished } else { x });
            }
            let m0 = Self::merit(&f);
            let mut alpha = cfg.damping;
            let mut accepted = None;
            for _ in 0..MAX_HALVINGS {
                let trial: Vec<f64> = x.iter().zip(&d).map(|(a, b)| (a + alpha * b).max(CLAMP)).collect();
                let ft = self.residual(&trial);
                if Self::merit(&ft) < m0 {
                    accepted = Some((trial, ft));
                    break;
                }
                alpha *= 0.5;
            }
            match accepted {
                Some((xn, fnew)) => {
                    x = xn;
                    f = fnew;
                }
                None => {
                    return if fnorm <= cfg.tol_residual {
                        NewtonEnd::Converged(x)
                    } else {
                        NewtonEnd::LineSearch
                    };
                }
            }
        }
        NewtonEnd::Exhausted
    }
}

fn starts(k: usize, count: usize, scale: f64, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let mut per = 1usize;
    while (per + 1).checked_pow(k as u32).is_some_and(|c| c <= count) {
        per += 1;
    }
    let mut out = Vec::with_capacity(count);
    let total = per.pow(k as u32);
    for mut code in 0..total {
        let mut x = Vec::with_capacity(k);
        for _ in 0..k {
            x.push(scale * ((code % per) + 1) as f64 / per as f64);
            code /= per;
        }
        out.push(x);
    }
    while out.len() < count {
        out.push((0..k).map(|_| scale * rng.gen_range(CLAMP..=1.0)).collect());
    }
    out
}

fn accept(m: &Tensor, q: &[f64], u: Vec<f64>, cfg: &SolverConfig) -> Option<TcpSolution> {
    let tol = cfg.tol_residual;
    let w = slack(m, q, &u).ok()?;
    let ok = u.iter().zip(&w).all(|(&a, &b)| a >= 0.0 && b >= -tol && (a * b).abs() <= tol)
        && u.iter().zip(&w).map(|(a, b)| a.min(*b).abs()).fold(0.0, f64::max) <= tol;
    ok.then(|| TcpSolution::new(u, w, tol))
}

fn solve_support(
    m: &Tensor,
    q: &[f64],
    j: &IndexSet,
    support_no: usize,
    cfg: &SolverConfig,
) -> (Vec<TcpSolution>, SolveDiagnostics) {
    let n = m.dim();
    let mut diag = SolveDiagnostics {
        supports: 1,
        ..Default::default()
    };
    let sub = m.principal_subtensor(j).expect("valid index set");
    let qj = j.restrict(q);
    let homogeneous = qj.iter().all(|&x| x == 0.0);
    let sys = SupportSystem {
        packed: sub.packed(),
        q: qj.clone(),
        homogeneous,
    };
    let k = j.len();
    let p = (m.order() - 1) as f64;
    let scale = if homogeneous {
        1.0 / k as f64
    } else {
        vector::max_abs(q).max(1.0).powf(1.0 / p)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (support_no as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut found = Vec::new();
    for x0 in starts(k, cfg.newton_starts, scale, &mut rng) {
        diag.starts += 1;
        let x = match sys.newton(x0, cfg) {
            NewtonEnd::Converged(x) => x,
            NewtonEnd::Singular => {
                diag.singular_jacobians += 1;
                continue;
            }
            NewtonEnd::LineSearch => {
                diag.line_search_failures += 1;
                continue;
            }
            NewtonEnd::Exhausted => continue,
        };
        diag.converged += 1;
        let x = polish(m, q, j, x, cfg);
        match accept(m, q, j.lift(&x, n), cfg) {
            Some(s) => found.push(s),
            None => diag.rejected += 1,
        }
    }
    if diag.singular_jacobians == diag.starts {
        diag.singular_supports = 1;
    }
    (found, diag)
}

/// Components that collapsed towards zero belong to a smaller support: re-solve there, and
/// failing that zero the ones below tolerance.
fn polish(m: &Tensor, q: &[f64], j: &IndexSet, x: Vec<f64>, cfg: &SolverConfig) -> Vec<f64> {
    let scale = vector::max_abs(&x);
    if x.iter().all(|&v| v > STEP_TOL * scale) {
        return x;
    }
    let keep: Vec<usize> = (0..x.len()).filter(|&i| x[i] > STEP_TOL * scale).collect();
    let zeroed = || x.iter().map(|&v| if v <= cfg.tol_residual { 0.0 } else { v }).collect();
    if keep.is_empty() {
        return zeroed();
    }
    let inner = IndexSet::from_zero_based(keep.clone());
    let reduced = IndexSet::from_zero_based(keep.iter().map(|&i| j.members()[i]).collect());
    let qr = reduced.restrict(q);
    let sys = SupportSystem {
        packed: m.principal_subtensor(&reduced).expect("valid index set").packed(),
        homogeneous: qr.iter().all(|&v| v == 0.0),
        q: qr,
    };
    match sys.newton(inner.restrict(&x), cfg) {
        NewtonEnd::Converged(y) => inner.lift(&y, x.len()),
        _ => zeroed(),
    }
}

fn dedupe_sorted(mut sols: Vec<TcpSolution>, radius: f64) -> Vec<TcpSolution> {
    sols.sort_by(|a, b| {
        a.support
            .len()
            .cmp(&b.support.len())
            .then_with(|| a.support.cmp(&b.support))
            .then_with(|| {
                a.u.iter()
                    .zip(&b.u)
                    .map(|(x, y)| x.total_cmp(y))
                    .find(|o| o.is_ne())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
    });
    let mut out: Vec<TcpSolution> = Vec::with_capacity(sols.len());
    for s in sols {
        let dup = out.iter().any(|t| {
            let d = s.u.iter().zip(&t.u).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            d <= radius * vector::max_abs(&s.u).max(1.0)
        });
        if !dup {
            out.push(s);
        }
    }
    out
}

/// Found solutions of `TCP(q, M)` with per-support diagnostics.
///
/// For supports with `q_J = 0` the solutions form rays; one representative with `sum u_J = 1` is
/// reported.
pub fn solve_tcp_with_diagnostics(m: &Tensor, q: &[f64], cfg: &SolverConfig) -> Result<SolveReport> {
    check_dims(m, q)?;
    cfg.validate()?;
    let n = m.dim();
    check_size(n, cfg)?;
    let tol = cfg.tol_residual;
    let mut solutions = Vec::new();
    if q.iter().all(|&x| x >= -tol) {
        solutions.push(TcpSolution::new(vec![0.0; n], q.to_vec(), tol));
    }
    let subsets = IndexSet::nonempty_subsets(n);
    let indexed: Vec<(usize, &IndexSet)> = subsets.iter().enumerate().collect();
    let mut diagnostics = SolveDiagnostics::default();
    for (found, d) in par::map(&indexed, |&(no, j)| solve_support(m, q, j, no, cfg)) {
        solutions.extend(found);
        diagnostics.merge(&d);
    }
    Ok(SolveReport {
        solutions: dedupe_sorted(solutions, cfg.dedupe_radius),
        diagnostics,
    })
}

/// Found solutions of `TCP(q, M)`, sorted by support and then by `u`.
pub fn solve_tcp(m: &Tensor, q: &[f64], cfg: &SolverConfig) -> Result<Vec<TcpSolution>> {
    Ok(solve_tcp_with_diagnostics(m, q, cfg)?.solutions)
}

pub const LCP_MAX_DIM: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct LcpReport {
    pub solutions: Vec<TcpSolution>,
    /// Supports skipped because `A_JJ` is singular.
    pub singular_supports: Vec<IndexSet>,
}

/// Exact support enumeration for `LCP(q, A)`: every `J` (including the empty one) with a
/// nonsingular `A_JJ`, `z_J = -A_JJ^{-1} q_J >= 0` and `A z + q >= 0`, in rational arithmetic.
pub fn solve_lcp_with_diagnostics(a: &Matrix, q: &[f64]) -> Result<LcpReport> {
    let n = a.dim();
    if q.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: q.len() });
    }
    if n > LCP_MAX_DIM {
        return Err(Error::SizeGuard(format!("LCP dimension {n} exceeds {LCP_MAX_DIM}")));
    }
    let aq: Vec<Vec<BigRational>> = a.rows().iter().map(|r| r.iter().map(|&x| to_rational(x)).collect()).collect();
    let qq: Vec<BigRational> = q.iter().map(|&x| to_rational(x)).collect();
    let mut supports = vec![IndexSet::default()];
    supports.extend(IndexSet::nonempty_subsets(n));
    let results = par::map(&supports, |j| {
        let idx = j.members();
        let mut z = vec![BigRational::zero(); n];
        if !idx.is_empty() {
            let sub: Vec<Vec<BigRational>> = idx.iter().map(|&r| idx.iter().map(|&c| aq[r][c].clone()).collect()).collect();
            let rhs: Vec<BigRational> = idx.iter().map(|&r| -qq[r].clone()).collect();
            let Some(x) = solve(sub, rhs) else {
                return Err(j.clone());
            };
            for (&i, xi) in idx.iter().zip(x) {
                z[i] = xi;
            }
        }
        if z.iter().any(|x| x.is_negative()) {
            return Ok(None);
        }
        let w: Vec<BigRational> = (0..n)
            .map(|r| {
                let mut s = qq[r].clone();
                for (c, zc) in z.iter().enumerate() {
                    if !zc.is_zero() {
                        s += &aq[r][c] * zc;
                    }
                }
                s
            })
            .collect();
        if w.iter().any(|x| x.is_negative()) {
            return Ok(None);
        }
        Ok(Some((z, w)))
    });
    let mut exact: Vec<(Vec<BigRational>, Vec<BigRational>)> = Vec::new();
    let mut singular_supports = Vec::new();
    for r in results {
        match r {
            Ok(Some(sol)) => {
                if !exact.iter().any(|(z, _)| *z == sol.0) {
                    exact.push(sol);
                }
            }
            Ok(None) => {}
            Err(j) => singular_supports.push(j),
        }
    }
    let sols = exact
        .into_iter()
        .map(|(z, w)| {
            TcpSolution::new(z.iter().map(to_f64).collect(), w.iter().map(to_f64).collect(), 0.0)
        })
        .collect();
    Ok(LcpReport {
        solutions: dedupe_sorted(sols, 0.0),
        singular_supports,
    })
}

pub fn solve_lcp(a: &Matrix, q: &[f64]) -> Result<Vec<TcpSolution>> {
    Ok(solve_lcp_with_diagnostics(a, q)?.solutions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn natural_residual_examples() {
        let id = Tensor::identity(4, 2).unwrap();
        assert_eq!(natural_residual(&id, &[1.0, 1.0], &[0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(natural_residual(&id, &[-1.0, 2.0], &[1.0, 0.0]).unwrap(), 0.0);
        let z = Tensor::zeros(4, 2).unwrap();
        assert!(natural_residual(&z, &[-1.0, 0.0], &[0.5, 0.0]).unwrap() >= 0.5);
        assert!(natural_residual(&z, &[-1.0, 0.0], &[0.0, 0.0]).unwrap() >= 1.0);
    }

    #[test]
    fn verify_examples() {
        let id = Tensor::identity(4, 2).unwrap();
        assert!(verify_solution(&id, &[-1.0, 2.0], &[1.0, 0.0], 1e-12).unwrap());
        assert!(!verify_solution(&id, &[-1.0, 2.0], &[0.0, 0.0], 1e-12).unwrap());
        assert!(verify_solution(&id, &[1.0], &[0.0], 1e-12).is_err());
    }

    #[test]
    fn identity_closed_form() {
        let id = Tensor::identity(4, 2).unwrap();
        let sols = solve_tcp(&id, &[-1.0, 2.0], &cfg()).unwrap();
        assert_eq!(sols.len(), 1);
        assert!((sols[0].u[0] - 1.0).abs() < 1e-12 && sols[0].u[1] == 0.0);
        assert!((sols[0].w[1] - 2.0).abs() < 1e-12);
        assert_eq!(sols[0].support.to_one_based(), vec![1]);

        let sols = solve_tcp(&id, &[-8.0, -27.0], &cfg()).unwrap();
        assert_eq!(sols.len(), 1);
        assert!((sols[0].u[0] - 2.0).abs() < 1e-9 && (sols[0].u[1] - 3.0).abs() < 1e-9);
    }

    #[test]
    fn semipositive_example_has_only_zero() {
        let sols = solve_tcp(&fixtures::example1(), &[1.0, 1.0, 1.0], &cfg()).unwrap();
        assert_eq!(sols.len(), 1);
        assert!(sols[0].support.is_empty());
        assert_eq!(sols[0].u, vec![0.0; 3]);
    }

    #[test]
    fn infeasible_instance() {
        let z = Tensor::zeros(4, 2).unwrap();
        assert!(solve_tcp(&z, &[-1.0, 1.0], &cfg()).unwrap().is_empty());
    }

    #[test]
    fn homogeneous_rays() {
        let z = Tensor::zeros(4, 2).unwrap();
        let sols = solve_tcp(&z, &[0.0, 0.0], &cfg()).unwrap();
        assert!(sols.iter().any(|s| s.support.len() == 1));
        for s in &sols {
            assert!(verify_solution(&z, &[0.0, 0.0], &s.u, 1e-10).unwrap());
        }
        let id = Tensor::identity(4, 3).unwrap();
        let sols = solve_tcp(&id, &[0.0; 3], &cfg()).unwrap();
        assert_eq!(sols.len(), 1);
        assert!(sols[0].support.is_empty());
    }

    #[test]
    fn returned_solutions_verify() {
        let m = fixtures::example2();
        for q in [[-1.0, -1.0], [1.0, -2.0], [0.5, 0.5], [-3.0, 2.0]] {
            let rep = solve_tcp_with_diagnostics(&m, &q, &cfg()).unwrap();
            for s in &rep.solutions {
                assert!(verify_solution(&m, &q, &s.u, 1e-10).unwrap(), "{q:?} {s:?}");
                assert!(s.residual <= 1e-10);
            }
            assert_eq!(rep.diagnostics.supports, 3);
        }
    }

    #[test]
    fn lcp_examples() {
        let a = Matrix::from_rows(&[vec![1.0, -1.0], vec![0.0, 2.0]]).unwrap();
        let sols = solve_lcp(&a, &[-1.0, -1.0]).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].u, vec![1.5, 0.5]);
        assert_eq!(sols[0].w, vec![0.0, 0.0]);

        let sols = solve_lcp(&a, &[1.0, 1.0]).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].u, vec![0.0, 0.0]);
        assert_eq!(sols[0].w, vec![1.0, 1.0]);

        let sols = solve_lcp(&Matrix::identity(3), &[0.0, 2.0, 1.0]).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].u, vec![0.0; 3]);
    }

    #[test]
    fn lcp_reports_singular_supports() {
        let rep = solve_lcp_with_diagnostics(&Matrix::zeros(2), &[1.0, 1.0]).unwrap();
        assert_eq!(rep.singular_supports.len(), 3);
        assert_eq!(rep.solutions.len(), 1);
    }

    #[test]
    fn order_two_matches_lcp() {
        let a = Matrix::from_rows(&[vec![2.0, -1.0], vec![-3.0, 1.0]]).unwrap();
        let t = Tensor::from_matrix(&a);
        for q in [[-1.0, 0.5], [1.0, -2.0], [-0.5, -0.25]] {
            let lcp = solve_lcp(&a, &q).unwrap();
            let tcp = solve_tcp(&t, &q, &cfg()).unwrap();
            assert_eq!(lcp.len(), tcp.len(), "{q:?}");
            for (x, y) in lcp.iter().zip(&tcp) {
                assert!(x.u.iter().zip(&y.u).all(|(a, b)| (a - b).abs() <= 1e-8));
            }
        }
    }

    #[test]
    fn size_guard() {
        let c = SolverConfig {
            newton_starts: 1000,
            ..cfg()
        };
        assert!(check_size(9, &c).is_ok());
        assert!(matches!(check_size(10, &c), Err(Error::SizeGuard(_))));
        assert!(solve_lcp(&Matrix::identity(21), &[1.0; 21]).is_err());
    }

    #[test]
    fn starts_fill_grid_then_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let s = starts(2, 25, 2.0, &mut rng);
        assert_eq!(s.len(), 25);
        assert!(s.iter().all(|x| x.iter().all(|&v| v > 0.0 && v <= 2.0)));
        assert_eq!(s[0], vec![0.4, 0.4]);
        let s = starts(3, 25, 1.0, &mut rng);
        assert_eq!(s.len(), 25);
    }
}
