//! Randomized property suites for the characterization theorems.
//!
//! Trial `k` of a suite run with seed `s` draws everything from `ChaCha8Rng::seed_from_u64(s + k)`,
//! so a failing trial is replayed by `verify --suite NAME --trials 1 --seed s+k`. Each failure
//! carries a dump in the text format of [`crate::io`] with that command in its header.
//!
//! Class checkers are resolution-bounded, so the suites assert transformation laws at the level of
//! witnesses (a witness of one tensor, mapped through the transformation, must validate for the
//! other) together with verdict agreement of the checker on both sides.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::{self, CheckConfig, ClassVerdict};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::io::{self, Block};
use crate::par;
use crate::tensor::{vector, IndexSet, Matrix, Tensor};

pub const SUITES: [&str; 10] = ["T1", "T2", "T2-fixed", "T3", "T4", "T5", "T6", "T7", "T8", "T9"];

/// Shift values sampled by T6.
pub const DELTAS: [f64; 3] = [1.0, 0.1, 0.01];

/// Random tensor family: integer entries in `[-range, range]`, each tuple nonzero with
/// probability `density`.
#[derive(Debug, Clone, PartialEq)]
pub struct GenConfig {
    pub order: usize,
    pub dim: usize,
    pub density: f64,
    pub range: i32,
    pub seed: u64,
}

impl Default for GenConfig {
    fn default() -> Self {
        Self {
            order: 4,
            dim: 2,
            density: 0.4,
            range: 3,
            seed: 0,
        }
    }
}

impl GenConfig {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

fn nonzero_int(rng: &mut ChaCha8Rng, range: i32) -> f64 {
    let v = rng.gen_range(1..=range);
    f64::from(if rng.gen_bool(0.5) { v } else { -v })
}

pub fn random_tensor(order: usize, dim: usize, density: f64, range: i32, rng: &mut ChaCha8Rng) -> Tensor {
    let mut entries = Vec::new();
    let mut t = vec![1usize; order];
    'tuples: loop {
        if rng.gen_bool(density) {
            entries.push((t.clone(), nonzero_int(rng, range)));
        }
        for pos in (0..order).rev() {
            if t[pos] < dim {
                t[pos] += 1;
                continue 'tuples;
            }
            t[pos] = 1;
        }
        break;
    }
    Tensor::new(order, dim, entries).expect("generated tuples are valid")
}

fn random_matrix(dim: usize, density: f64, range: i32, rng: &mut ChaCha8Rng) -> Matrix {
    let mut a = Matrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            if rng.gen_bool(density) {
                a.set(i, j, nonzero_int(rng, range));
            }
        }
    }
    a
}

fn random_diag(dim: usize, lo: i32, hi: i32, rng: &mut ChaCha8Rng) -> Matrix {
    Matrix::diag(&(0..dim).map(|_| f64::from(rng.gen_range(lo..=hi))).collect::<Vec<_>>())
}

fn random_permutation(dim: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut perm: Vec<usize> = (0..dim).collect();
    perm.shuffle(rng);
    Matrix::permutation(&perm).expect("shuffled indices form a permutation")
}

pub fn gen_tensor(cfg: &GenConfig) -> Tensor {
    random_tensor(cfg.order, cfg.dim, cfg.density, cfg.range, &mut cfg.rng())
}

/// Row-diagonal tensor `A I` together with `A`.
pub fn gen_row_diagonal(cfg: &GenConfig) -> (Tensor, Matrix) {
    row_diagonal(cfg.order, cfg.dim, cfg.density, cfg.range, &mut cfg.rng())
}

fn row_diagonal(order: usize, dim: usize, density: f64, range: i32, rng: &mut ChaCha8Rng) -> (Tensor, Matrix) {
    let a = random_matrix(dim, density, range, rng);
    let identity = Tensor::identity(order, dim).expect("order >= 2");
    (identity.left_mul(&a).expect("dimensions match"), a)
}

/// Diagonal matrix with entries drawn from `{1, 2, 3}`.
pub fn gen_pos_diag(cfg: &GenConfig) -> Matrix {
    random_diag(cfg.dim, 1, 3, &mut cfg.rng())
}

pub fn gen_permutation(cfg: &GenConfig) -> Matrix {
    random_permutation(cfg.dim, &mut cfg.rng())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub trials: usize,
    pub seed: u64,
    pub density: f64,
    pub check: CheckConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            trials: 200,
            seed: 0,
            density: 0.4,
            check: CheckConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub trial: usize,
    /// Seed that replays this trial alone.
    pub seed: u64,
    pub reason: String,
    /// Self-contained dump in the text format.
    pub dump: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
    pub counterexamples: Vec<Counterexample>,
    pub seed: u64,
    pub wall_time: Duration,
    /// Counters summed over trials and maxima taken over trials.
    pub metrics: BTreeMap<String, f64>,
}

impl SuiteReport {
    /// `key: value` lines; everything except the wall time is deterministic.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite: {}", self.name);
        let _ = writeln!(s, "seed: {}", self.seed);
        let _ = writeln!(s, "trials: {}", self.trials);
        let _ = writeln!(s, "failures: {}", self.failures);
        for (k, v) in &self.metrics {
            let _ = writeln!(s, "metric.{k}: {}", io::format_number(*v));
        }
        for c in &self.counterexamples {
            let _ = writeln!(s, "counterexample: trial {} seed {}: {}", c.trial, c.seed, c.reason);
        }
        s
    }
}

#[derive(Default)]
struct Trial {
    counts: BTreeMap<&'static str, f64>,
    maxima: BTreeMap<&'static str, f64>,
    failure: Option<(String, Vec<(String, Block)>)>,
}

impl Trial {
    fn count(&mut self, key: &'static str) {
        *self.counts.entry(key).or_default() += 1.0;
    }

    fn max(&mut self, key: &'static str, v: f64) {
        let e = self.maxima.entry(key).or_insert(f64::NEG_INFINITY);
        *e = e.max(v);
    }

    /// Records the first failure only.
    fn fail(&mut self, reason: impl Into<String>, blocks: Vec<(&str, Block)>) {
        if self.failure.is_none() {
            let blocks = blocks.into_iter().map(|(k, b)| (k.to_string(), b)).collect();
            self.failure = Some((reason.into(), blocks));
        }
    }
}

fn tblock(t: &Tensor) -> Block {
    Block::Tensor(t.clone())
}

fn vblock(u: &[f64]) -> Block {
    Block::Vector(u.to_vec())
}

fn mblock(a: &Matrix) -> Block {
    Block::Matrix(a.clone())
}

/// Order in `{2, 4}` and dimension in `{2, 3}`.
fn draw_shape(rng: &mut ChaCha8Rng) -> (usize, usize) {
    let r = if rng.gen_bool(0.5) { 2 } else { 4 };
    (r, rng.gen_range(2..=3))
}

/// Exact-sign validation for transported witnesses: the source witness already cleared
/// `tol_neg`, so the image only needs the sign pattern.
fn transported(m: &Tensor, u: &[f64], strict: bool, cfg: &CheckConfig) -> bool {
    classes::violates_semipositivity(m, u, strict, cfg.tol_pos, 0.0).unwrap_or(false)
}

fn check(m: &Tensor, strict: bool, cfg: &CheckConfig) -> ClassVerdict {
    if strict {
        classes::check_strictly_semipositive(m, cfg)
    } else {
        classes::check_semipositive(m, cfg)
    }
}

fn label(strict: bool) -> &'static str {
    if strict {
        "strict"
    } else {
        "plain"
    }
}

fn diagonal_scaling(rng: &mut ChaCha8Rng, cfg: &SuiteConfig, t: &mut Trial) {
    let (r, n) = draw_shape(rng);
    let m = random_tensor(r, n, cfg.density, 3, rng);
    let d = random_diag(n, 1, 3, rng);
    let dm = m.left_mul(&d).expect("dimensions match");
    let u: Vec<f64> = (0..n).map(|_| f64::from(rng.gen_range(-2..=2))).collect();
    let (v, dv) = (m.contract(&u).unwrap(), dm.contract(&u).unwrap());
    let dd = d.diagonal();
    if (0..n).any(|l| dv[l] != dd[l] * v[l]) {
        t.fail("sign law (D M u^(r-1))_l = d_l (M u^(r-1))_l broken", vec![("M", tblock(&m)), ("D", mblock(&d)), ("u", vblock(&u))]);
    }
    for strict in [false, true] {
        let (a, b) = (check(&m, strict, &cfg.check), check(&dm, strict, &cfg.check));
        for (src, dst, w, name) in [(&m, &dm, &a, "M -> DM"), (&dm, &m, &b, "DM -> M")] {
            if let Some(u) = &w.witness {
                t.count("witnesses");
                if !transported(dst, u, strict, &cfg.check) {
                    t.fail(
                        format!("{} witness does not transport {name}", label(strict)),
                        vec![("M", tblock(src)), ("D", mblock(&d)), ("witness", vblock(u))],
                    );
                }
            }
        }
        if a.is_member() != b.is_member() {
            t.fail(
                format!("{} verdicts differ for M and DM", label(strict)),
                vec![("M", tblock(&m)), ("D", mblock(&d))],
            );
        }
    }
}

fn nonneg_diagonal(rng: &mut ChaCha8Rng, cfg: &SuiteConfig, t: &mut Trial) {
    let (r, n) = draw_shape(rng);
    let m = random_tensor(r, n, cfg.density, 3, rng);
    let d = random_diag(n, 0, 3, rng);
    let dm = m.left_mul(&d).expect("dimensions match");
    let (a, b) = (check(&m, false, &cfg.check), check(&dm, false, &cfg.check));
    if let Some(u) = &b.witness {
        t.count("witnesses");
        if !transported(&m, u, false, &cfg.check) {
            t.fail("DM witness is not a witness for M", vec![("M", tblock(&m)), ("D", mblock(&d)), ("witness", vblock(u))]);
        }
    }
    if a.is_member() {
        t.count("members");
        if !b.is_member() {
            t.fail("M member but DM rejected", vec![("M", tblock(&m)), ("D", mblock(&d))]);
        }
    }
}

fn nonneg_diagonal_fixed(t: &mut Trial, cfg: &SuiteConfig) {
    let m = fixtures::example2();
    if check(&m, false, &cfg.check).is_member() {
        t.fail("fixed tensor should be rejected", vec![("M", tblock(&m))]);
    }
    for d in [fixtures::d1(), fixtures::d2()] {
        let dm = m.left_mul(&d).expect("dimensions match");
        if !check(&dm, false, &cfg.check).is_member() {
            t.fail("D M should be a member", vec![("M", tblock(&m)), ("D", mblock(&d))]);
        }
        t.count("members");
    }
}

fn permutation(rng: &mut ChaCha8Rng, cfg: &SuiteConfig, t: &mut Trial) {
    let (r, n) = draw_shape(rng);
    let m = random_tensor(r, n, cfg.density, 3, rng);
    let p = random_permutation(n, rng);
    let pm = m.permute_conjugate(&p).expect("valid permutation");
    let pt = p.transpose();
    for strict in [false, true] {
        let (a, b) = (check(&m, strict, &cfg.check), check(&pm, strict, &cfg.check));
        if let Some(u) = &a.witness {
            t.count("witnesses");
            let image = p.mul_vec(u).unwrap();
            if !transported(&pm, &image, strict, &cfg.check) {
                t.fail(
                    format!("{} witness u does not transport to P u", label(strict)),
                    vec![("M", tblock(&m)), ("P", mblock(&p)), ("witness", vblock(u))],
                );
            }
        }
        if let Some(u) = &b.witness {
            t.count("witnesses");
            let image = pt.mul_vec(u).unwrap();
            if !transported(&m, &image, strict, &cfg.check) {
                t.fail(
                    format!("{} witness u of P M P^T does not transport to P^T u", label(strict)),
                    vec![("M", tblock(&m)), ("P", mblock(&p)), ("witness", vblock(u))],
                );
            }
        }
        if a.is_member() != b.is_member() {
            t.fail(
                format!("{} verdicts differ for M and P M P^T", label(strict)),
                vec![("M", tblock(&m)), ("P", mblock(&p))],
            );
        }
    }
}

fn monotone_sum(rng: &mut ChaCha8Rng, cfg: &SuiteConfig, t: &mut Trial) {
    let (r, n) = draw_shape(rng);
    let m = random_tensor(r, n, cfg.density, 3, rng);
    let nn = random_tensor(r, n, cfg.density, 3, rng);
    let nn = Tensor::new(r, n, nn.entries().map(|(k, v)| (k, v.abs()))).expect("valid tuples");
    let sum = m.add(&nn).expect("same shape");
    for strict in [false, true] {
        let grid_m = classes::grid_violation(&m, strict, &cfg.check);
        if let Some(u) = classes::grid_violation(&sum, strict, &cfg.check) {
            t.count("grid_witnesses");
            if !transported(&m, &u, strict, &cfg.check) {
                t.fail(
                    format!("{} grid point violating M + N does not violate M", label(strict)),
                    vec![("M", tblock(&m)), ("N", tblock(&nn)), ("witness", vblock(&u))],
                );
            }
            if grid_m.is_none() {
                t.fail(
                    format!("{} grid passes M but not M + N", label(strict)),
                    vec![("M", tblock(&m)), ("N", tblock(&nn))],
                );
            }
        }
    }
}

fn null_diagonal(rng: &mut ChaCha8Rng, cfg: &SuiteConfig, t: &mut Trial) {
    let (r, n) = draw_shape(rng);
    let m = random_tensor(r, n, cfg.density, 3, rng);
    let u: Vec<f64> = (0..n).map(|_| rng.gen_range(0.25..2.0)).collect();
    let d = classes::build_null_diagonal(&m, &u).expect("u > 0");
    let combined = m.add(&d).expect("same shape");
    let res = vector::max_abs(&combined.contract(&u).unwrap());
    t.max("max_residual", res);
    if res > 1e-10 {
        t.fail(format!("null-diagonal residual {res:e}"), vec![("M", tblock(&m)), ("u", vblock(&u))]);
    }
    // a positive diagonal makes u a witness against M
    let dd: Vec<f64> = (0..n).map(|i| d.get(&vec![i + 1; r])).collect();
    if dd.iter().all(|&x| x > 0.0) {
        t.count("positive_diagonals");
        if !transported(&m, &u, false, &cfg.check) {
            t.fail("positive null diagonal but u is not a witness", vec![("M", tblock(&m)), ("u", vblock(&u))]);
        }
        if check(&m, false, &cfg.check).is_member() {
            t.fail("positive null diagonal exists but M accepted", vec![("M", tblock(&m)), ("u", vblock(&u))]);
        }
    }
}

fn delta_shift(rng: &mut ChaCha8Rng, cfg: &SuiteConfig, t: &mut Trial) {
    let (r, n) = draw_shape(rng);
    let m = random_tensor(r, n, cfg.density, 3, rng);
    let rep = classes::check_delta_shift(&m, &DELTAS, &cfg.check).expect("positive shifts");
    if rep.base.is_member() {
        t.count("members");
    }
    if !rep.consistent {
        let (d, v) = rep.shifted.iter().find(|(_, v)| !v.is_member()).expect("inconsistent");
        let u = v.witness.clone().unwrap_or_default();
        t.fail(
            format!("M accepted but M + {d} I rejected as strictly semipositive"),
            vec![("M", tblock(&m)), ("witness", vblock(&u))],
        );
    }
    if rep.smallest_shift_rejected == Some(true) {
        t.count("smallest_shift_rejected");
    }
}

/// `u` satisfies the construction's precondition: `0 != u >= 0` and `(M u^(r-1))_i <= 0` where
/// `u_i > 0`.
fn g_pair(m: &Tensor, u: &[f64]) -> bool {
    let v = m.contract(u).unwrap();
    vector::is_nonnegative(u) && vector::is_nonzero(u) && u.iter().zip(&v).all(|(&a, &b)| a == 0.0 || b <= 0.0)
}

fn g_matrix(rng: &mut ChaCha8Rng, cfg: &SuiteConfig, t: &mut Trial) {
    let n = rng.gen_range(2..=3);
    let m = random_tensor(4, n, cfg.density, 3, rng);
    let mut candidates: Vec<Vec<f64>> = Vec::new();
    if let Some(u) = check(&m, true, &cfg.check).witness {
        candidates.push(u);
    }
    for _ in 0..4 {
        candidates.push((0..n).map(|_| f64::from(rng.gen_range(0..=2))).collect());
    }
    for u in candidates {
        if !g_pair(&m, &u) {
            t.count("skipped");
            continue;
        }
        t.count("pairs");
        let g = match classes::build_g_matrix(&m, &u) {
            Ok(g) => g,
            Err(e) => {
                t.fail(format!("construction rejected a valid pair: {e}"), vec![("M", tblock(&m)), ("u", vblock(&u))]);
                continue;
            }
        };
        if g.diagonal().iter().any(|&x| !(0.0..=1.0).contains(&x)) {
            t.fail("G has entries outside [0, 1]", vec![("M", tblock(&m)), ("u", vblock(&u)), ("G", mblock(&g))]);
        }
        let combined = classes::g_combination(&m, &g).expect("same shape");
        let res = vector::max_abs(&combined.contract(&u).unwrap());
        t.max("max_residual", res);
        if res > 1e-10 {
            t.fail(format!("G-combination residual {res:e}"), vec![("M", tblock(&m)), ("u", vblock(&u)), ("G", mblock(&g))]);
        }
    }
}

fn majorization_bridge(rng: &mut ChaCha8Rng, cfg: &SuiteConfig, t: &mut Trial) {
    let (r, n) = draw_shape(rng);
    let (m, a) = row_diagonal(r, n, 0.6, 3, rng);
    let p = 1.0 / (r - 1) as f64;
    for strict in [false, true] {
        let exact = if strict {
            classes::check_strictly_semimonotone(&a)
        } else {
            classes::check_semimonotone(&a)
        };
        let tensor = check(&m, strict, &cfg.check);
        if let Some(z) = &exact.witness {
            t.count("matrix_witnesses");
            let u = vector::vec_power(z, p).expect("z >= 0");
            let ok = classes::violates_semipositivity(&m, &u, strict, cfg.check.tol_pos, cfg.check.tol_neg).unwrap();
            if !ok {
                t.fail(
                    format!("{} matrix witness z does not transport to z^(1/(r-1))", label(strict)),
                    vec![("M", tblock(&m)), ("A", mblock(&a)), ("z", vblock(z))],
                );
            }
        }
        if exact.is_member() != tensor.is_member() {
            t.fail(
                format!("{} verdicts differ: matrix {:?}, tensor {:?}", label(strict), exact.status, tensor.status),
                vec![("M", tblock(&m)), ("A", mblock(&a))],
            );
        }
    }
}

fn inheritance(rng: &mut ChaCha8Rng, cfg: &SuiteConfig, t: &mut Trial) {
    let (r, n) = draw_shape(rng);
    let m = random_tensor(r, n, cfg.density, 3, rng);
    let subsets = IndexSet::nonempty_subsets(n);
    let j = subsets[rng.gen_range(0..subsets.len())].clone();
    let sub = m.principal_subtensor(&j).expect("valid index set");
    for strict in [false, true] {
        let whole = check(&m, strict, &cfg.check);
        let part = check(&sub, strict, &cfg.check);
        if let Some(w) = &part.witness {
            t.count("witnesses");
            let lifted = j.lift(w, n);
            if !transported(&m, &lifted, strict, &cfg.check) {
                t.fail(
                    format!("{} witness of principal subtensor {j} does not lift", label(strict)),
                    vec![("M", tblock(&m)), ("witness", vblock(w))],
                );
            }
            if whole.is_member() {
                t.fail(
                    format!("{} M accepted but principal subtensor {j} rejected", label(strict)),
                    vec![("M", tblock(&m))],
                );
            }
        }
    }
}

/// Runs one suite. `T2-fixed` is a single deterministic check and ignores `trials`.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    type Body = fn(&mut ChaCha8Rng, &SuiteConfig, &mut Trial);
    let body: Option<Body> = match name {
        "T1" => Some(diagonal_scaling),
        "T2" => Some(nonneg_diagonal),
        "T2-fixed" => None,
        "T3" => Some(permutation),
        "T4" => Some(monotone_sum),
        "T5" => Some(null_diagonal),
        "T6" => Some(delta_shift),
        "T7" => Some(g_matrix),
        "T8" => Some(majorization_bridge),
        "T9" => Some(inheritance),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    cfg.check.validate()?;
    let start = Instant::now();
    let trials = if body.is_some() { cfg.trials } else { 1 };
    let results: Vec<Trial> = par::map_range(trials, |k| {
        let mut t = Trial::default();
        match body {
            Some(f) => f(&mut ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(k as u64)), cfg, &mut t),
            None => nonneg_diagonal_fixed(&mut t, cfg),
        }
        t
    });
    let mut metrics: BTreeMap<String, f64> = BTreeMap::new();
    let mut counterexamples = Vec::new();
    for (k, t) in results.into_iter().enumerate() {
        for (key, v) in t.counts {
            *metrics.entry(key.to_string()).or_default() += v;
        }
        for (key, v) in t.maxima {
            let e = metrics.entry(key.to_string()).or_insert(f64::NEG_INFINITY);
            *e = e.max(v);
        }
        if let Some((reason, blocks)) = t.failure {
            let seed = cfg.seed.wrapping_add(k as u64);
            let mut dump = format!(
                "# suite {name}, trial {k}: {reason}\n# reproduce: tensorcp verify --suite {name} --trials 1 --seed {seed}\n"
            );
            for (key, b) in &blocks {
                let _ = writeln!(dump, "# {key}");
                dump.push_str(&io::write_block(b));
            }
            counterexamples.push(Counterexample { trial: k, seed, reason, dump });
        }
    }
    Ok(SuiteReport {
        name: name.to_string(),
        trials,
        failures: counterexamples.len(),
        counterexamples,
        seed: cfg.seed,
        wall_time: start.elapsed(),
        metrics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let cfg = GenConfig::default();
        assert_eq!(gen_tensor(&cfg), gen_tensor(&cfg));
        let t = gen_tensor(&GenConfig { dim: 3, ..cfg.clone() });
        assert!(t.entries().all(|(_, v)| v.fract() == 0.0 && v.abs() <= 3.0 && v != 0.0));
    }

    #[test]
    fn row_diagonal_generator() {
        let (m, a) = gen_row_diagonal(&GenConfig::default());
        assert!(m.is_row_diagonal());
        assert_eq!(m.majorization(), a);
    }

    #[test]
    fn diagonal_and_permutation_generators() {
        let cfg = GenConfig { dim: 3, ..GenConfig::default() };
        let d = gen_pos_diag(&cfg);
        assert!(d.is_diagonal() && d.diagonal().iter().all(|&x| x > 0.0 && x <= 3.0));
        assert!(gen_permutation(&cfg).is_permutation());
    }

    #[test]
    fn unknown_suite() {
        assert_eq!(
            run_suite("T10", &SuiteConfig::default()),
            Err(Error::UnknownSuite("T10".into()))
        );
    }

    #[test]
    fn fixed_counterexample_suite() {
        let rep = run_suite("T2-fixed", &SuiteConfig::default()).unwrap();
        assert_eq!(rep.trials, 1);
        assert_eq!(rep.failures, 0);
        assert_eq!(rep.metrics["members"], 2.0);
    }

    #[test]
    fn suites_are_deterministic() {
        let cfg = SuiteConfig { trials: 5, seed: 7, ..Default::default() };
        let a = run_suite("T5", &cfg).unwrap();
        let b = run_suite("T5", &cfg).unwrap();
        assert_eq!(a.to_text(), b.to_text());
        assert_eq!(a.failures, 0);
    }
}
