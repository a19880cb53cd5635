//! Membership checkers for structured tensor and matrix classes, and the constructive witnesses
//! behind the characterization theorems.
//!
//! Semipositivity of a tensor is not decidable exactly by these methods: the tensor checkers
//! search the standard simplex (homogeneity of `u -> M u^(r-1)` makes `sum u = 1` a
//! normalization) and report [`Status::MemberUpToResolution`] when nothing is found. A
//! [`Status::NonMember`] verdict always carries a witness that was re-validated by a fresh
//! contraction. The matrix checkers solve one exact rational LP per index set and return
//! [`Status::MemberExact`].
//!
//! The search is organized by index set: `M` fails to be semipositive iff for some nonempty `J`
//! the principal subtensor `M^J` maps some `u_J > 0` to a vector `< 0`. Each `J` (a "face" of the
//! simplex) is searched independently: first its 0/1 barycenter, then an interior grid, then a
//! projected descent on `max_{l in J} (M u^(r-1))_l` from the best grid points.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{primitive_integer_vector, to_f64, to_rational};
use crate::lp::{min_max_over_simplex, LpStatus};
use crate::par;
use crate::tcp::{self, SolverConfig};
use crate::tensor::{vector, IndexSet, Matrix, Packed, Tensor};

/// Search settings of the tensor checkers.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckConfig {
    /// Simplex mesh density per coordinate; the recorded resolution is its reciprocal.
    pub grid_resolution: usize,
    /// Descent steps per refined seed.
    pub refine_iters: usize,
    /// A component counts as positive when it exceeds this.
    pub tol_pos: f64,
    /// A contraction value counts as negative when it is below `-tol_neg`.
    pub tol_neg: f64,
    pub seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            grid_resolution: 32,
            refine_iters: 200,
            tol_pos: 1e-9,
            tol_neg: 1e-9,
            seed: 0,
        }
    }
}

impl CheckConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_resolution < 2 {
            return Err(Error::InvalidShape("grid_resolution must be >= 2".into()));
        }
        if !(self.tol_pos > 0.0 && self.tol_neg > 0.0) {
            return Err(Error::InvalidShape("tolerances must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    MemberExact,
    MemberUpToResolution,
    NonMember,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::MemberExact => "MemberExact",
            Status::MemberUpToResolution => "MemberUpToResolution",
            Status::NonMember => "NonMember",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassVerdict {
    pub status: Status,
    pub witness: Option<Vec<f64>>,
    /// Contraction `M u^(r-1)` (or `A z`) at the witness.
    pub certificate_values: Option<Vec<f64>>,
    pub resolution: Option<f64>,
}

impl ClassVerdict {
    fn member_exact() -> Self {
        Self {
            status: Status::MemberExact,
            witness: None,
            certificate_values: None,
            resolution: None,
        }
    }

    fn member_up_to(resolution: Option<f64>) -> Self {
        Self {
            status: Status::MemberUpToResolution,
            witness: None,
            certificate_values: None,
            resolution,
        }
    }

    fn non_member(witness: Vec<f64>, certificate: Vec<f64>) -> Self {
        Self {
            status: Status::NonMember,
            witness: Some(witness),
            certificate_values: Some(certificate),
            resolution: None,
        }
    }

    pub fn is_member(&self) -> bool {
        self.status != Status::NonMember
    }
}

/// Which sign condition a witness must violate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Semipositive { strict: bool },
    P { strict: bool },
}

/// `u` is a witness against (strict) semipositivity of `m`: `u >= 0`, some `u_l > tol_pos`, and
/// every such `l` has `(M u^(r-1))_l < -tol_neg` (strict: `<= tol_neg`).
pub fn violates_semipositivity(
    m: &Tensor,
    u: &[f64],
    strict: bool,
    tol_pos: f64,
    tol_neg: f64,
) -> Result<bool> {
    let v = m.contract(u)?;
    Ok(semipositive_violation(u, &v, strict, tol_pos, tol_neg))
}

fn semipositive_violation(u: &[f64], v: &[f64], strict: bool, tol_pos: f64, tol_neg: f64) -> bool {
    if !vector::is_nonnegative(u) {
        return false;
    }
    let mut active = false;
    for (&ul, &vl) in u.iter().zip(v) {
        if ul > tol_pos {
            active = true;
            let bad = if strict { vl <= tol_neg } else { vl < -tol_neg };
            if !bad {
                return false;
            }
        }
    }
    active
}

/// `u` is a witness against the P0 (strict: P) property: some `|u_i| > tol_pos`, and every such
/// `i` has `u_i (M u^(r-1))_i < -tol_neg` (strict: `<= tol_neg`).
pub fn violates_p(m: &Tensor, u: &[f64], strict: bool, tol_pos: f64, tol_neg: f64) -> Result<bool> {
    let v = m.contract(u)?;
    Ok(p_violation(u, &v, strict, tol_pos, tol_neg))
}

fn p_violation(u: &[f64], v: &[f64], strict: bool, tol_pos: f64, tol_neg: f64) -> bool {
    let mut active = false;
    for (&ul, &vl) in u.iter().zip(v) {
        if ul.abs() > tol_pos {
            active = true;
            let prod = ul * vl;
            let bad = if strict { prod <= tol_neg } else { prod < -tol_neg };
            if !bad {
                return false;
            }
        }
    }
    active
}

impl Family {
    fn violated(&self, u: &[f64], v: &[f64], cfg: &CheckConfig) -> bool {
        match *self {
            Family::Semipositive { strict } => semipositive_violation(u, v, strict, cfg.tol_pos, cfg.tol_neg),
            Family::P { strict } => p_violation(u, v, strict, cfg.tol_pos, cfg.tol_neg),
        }
    }

    /// Objective values at or below this are worth a full predicate check.
    fn screen(&self, cfg: &CheckConfig) -> f64 {
        match *self {
            Family::Semipositive { strict: false } => -cfg.tol_neg,
            Family::P { strict: false } => 0.0,
            Family::Semipositive { strict: true } | Family::P { strict: true } => cfg.tol_neg,
        }
    }
}

/// A face of the search: index set `J` with a sign per member.
#[derive(Debug, Clone)]
struct Face {
    idx: Vec<usize>,
    signs: Vec<f64>,
}

impl Face {
    fn lift(&self, x: &[f64], n: usize) -> Vec<f64> {
        let mut u = vec![0.0; n];
        for ((&i, &s), &xi) in self.idx.iter().zip(&self.signs).zip(x) {
            u[i] = s * xi;
        }
        u
    }
}

fn semipositive_faces(n: usize) -> Vec<Face> {
    IndexSet::nonempty_subsets(n)
        .into_iter()
        .map(|j| Face {
            signs: vec![1.0; j.len()],
            idx: j.members().to_vec(),
        })
        .collect()
}

/// Every index set with every sign pattern; for even order `u` and `-u` are equivalent, so the
/// first member's sign is fixed to `+`.
fn signed_faces(n: usize, order: usize) -> Vec<Face> {
    let mut faces = Vec::new();
    for j in IndexSet::nonempty_subsets(n) {
        let k = j.len();
        let patterns: Vec<u64> = if order.is_multiple_of(2) {
            (0..1u64 << (k - 1)).map(|p| p << 1).collect()
        } else {
            (0..1u64 << k).collect()
        };
        for p in patterns {
            faces.push(Face {
                idx: j.members().to_vec(),
                signs: (0..k).map(|b| if p >> b & 1 == 1 { -1.0 } else { 1.0 }).collect(),
            });
        }
    }
    faces
}

/// Cap on interior grid points per face; larger faces get a coarser mesh.
const MAX_FACE_POINTS: u128 = 200_000;
const RANDOM_SEEDS: usize = 2;
const GRID_SEEDS: usize = 2;
const RANDOM_DIRECTIONS: usize = 4;

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn face_resolution(g: usize, k: usize) -> usize {
    let mut g = g.max(k);
    while g > k && binomial((g - 1) as u128, (k - 1) as u128) > MAX_FACE_POINTS {
        g -= 1;
    }
    g
}

/// Interior points of the `k`-simplex with denominators `g`: compositions of `g` into `k`
/// positive parts, in lexicographic order.
fn for_each_interior_point(k: usize, g: usize, mut f: impl FnMut(&[f64])) {
    fn rec(parts: &mut Vec<usize>, left: usize, k: usize, g: usize, x: &mut [f64], f: &mut dyn FnMut(&[f64])) {
        let slots = k - parts.len();
        if slots == 1 {
            parts.push(left);
            for (xi, &p) in x.iter_mut().zip(parts.iter()) {
                *xi = p as f64 / g as f64;
            }
            f(x);
            parts.pop();
            return;
        }
        for p in 1..=left - (slots - 1) {
            parts.push(p);
            rec(parts, left - p, k, g, x, f);
            parts.pop();
        }
    }
    if k == 0 || g < k {
        return;
    }
    let mut x = vec![0.0; k];
    rec(&mut Vec::with_capacity(k), g, k, g, &mut x, &mut f);
}

struct FaceEval<'a> {
    packed: &'a Packed,
    face: &'a Face,
    n: usize,
    u: Vec<f64>,
    v: Vec<f64>,
}

impl<'a> FaceEval<'a> {
    fn new(packed: &'a Packed, face: &'a Face) -> Self {
        let n = packed.dim;
        Self {
            packed,
            face,
            n,
            u: vec![0.0; n],
            v: vec![0.0; n],
        }
    }

    /// `max_{l in J} s_l (M u^(r-1))_l` at `u = lift(s * x)`.
    fn objective(&mut self, x: &[f64]) -> f64 {
        self.u.iter_mut().for_each(|x| *x = 0.0);
        for ((&i, &s), &xi) in self.face.idx.iter().zip(&self.face.signs).zip(x) {
            self.u[i] = s * xi;
        }
        self.packed.contract_into(&self.u, &mut self.v);
        self.face
            .idx
            .iter()
            .zip(&self.face.signs)
            .map(|(&l, &s)| s * self.v[l])
            .fold(f64::NEG_INFINITY, f64::max)
    }

    fn lifted(&self, x: &[f64]) -> Vec<f64> {
        self.face.lift(x, self.n)
    }
}

/// Projected descent on the face simplex: pairwise mass transfers plus seeded random tangent
/// directions, halving the step when nothing improves.
fn refine(eval: &mut FaceEval, start: &[f64], h0: f64, iters: usize, rng: &mut ChaCha8Rng) -> (Vec<f64>, f64) {
    let k = start.len();
    let mut x = start.to_vec();
    let mut fx = eval.objective(&x);
    if k == 1 {
        return (x, fx);
    }
    let mut h = h0;
    let mut cand = vec![0.0; k];
    for _ in 0..iters {
        if h < 1e-13 {
            break;
        }
        let mut best: Option<(Vec<f64>, f64)> = None;
        let consider = |cand: &[f64], eval: &mut FaceEval, best: &mut Option<(Vec<f64>, f64)>| {
            let f = eval.objective(cand);
            if f < best.as_ref().map_or(fx, |b| b.1) {
                *best = Some((cand.to_vec(), f));
            }
        };
        for a in 0..k {
            for b in 0..k {
                if a == b || x[a] <= 0.0 {
                    continue;
                }
                let step = h.min(x[a]);
                cand.copy_from_slice(&x);
                cand[a] -= step;
                cand[b] += step;
                consider(&cand, eval, &mut best);
            }
        }
        for _ in 0..RANDOM_DIRECTIONS {
            let mut d: Vec<f64> = (0..k).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let mean = d.iter().sum::<f64>() / k as f64;
            d.iter_mut().for_each(|di| *di -= mean);
            let norm = vector::max_abs(&d);
            if norm == 0.0 {
                continue;
            }
            // largest feasible step along d, capped at h
            let mut t = h / norm;
            for (xi, di) in x.iter().zip(&d) {
                if *di < 0.0 {
                    t = t.min(xi / -di);
                }
            }
            if t <= 0.0 {
                continue;
            }
            for ((c, xi), di) in cand.iter_mut().zip(&x).zip(&d) {
                *c = (xi + t * di).max(0.0);
            }
            let s: f64 = cand.iter().sum();
            cand.iter_mut().for_each(|c| *c /= s);
            consider(&cand, eval, &mut best);
        }
        match best {
            Some((bx, bf)) => {
                x = bx;
                fx = bf;
            }
            None => h *= 0.5,
        }
    }
    (x, fx)
}

fn face_rng(seed: u64, face: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (face as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn random_simplex_point(k: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let mut x: Vec<f64> = (0..k).map(|_| -rng.gen_range(1e-12f64..1.0).ln()).collect();
    let s: f64 = x.iter().sum();
    x.iter_mut().for_each(|xi| *xi /= s);
    x
}

/// Returns the validated witness `(u, M u^(r-1))` scaled to unit max-norm when possible.
fn finalize(packed: &Packed, family: Family, u: Vec<f64>, cfg: &CheckConfig) -> Option<(Vec<f64>, Vec<f64>)> {
    let scale = vector::max_abs(&u);
    if scale > 0.0 {
        let scaled: Vec<f64> = u.iter().map(|x| x / scale).collect();
        let v = packed.contract(&scaled);
        if family.violated(&scaled, &v, cfg) {
            return Some((scaled, v));
        }
    }
    let v = packed.contract(&u);
    family.violated(&u, &v, cfg).then_some((u, v))
}

fn search_face(
    packed: &Packed,
    family: Family,
    face: &Face,
    face_no: usize,
    cfg: &CheckConfig,
) -> Option<(Vec<f64>, Vec<f64>)> {
    let k = face.idx.len();
    let g = face_resolution(cfg.grid_resolution, k);
    let screen = family.screen(cfg);
    let mut eval = FaceEval::new(packed, face);
    let mut best: Vec<(f64, Vec<f64>)> = Vec::with_capacity(GRID_SEEDS + 1);
    let mut hit: Option<Vec<f64>> = None;
    for_each_interior_point(k, g, |x| {
        if hit.is_some() {
            return;
        }
        let f = eval.objective(x);
        if f <= screen {
            let u = eval.lifted(x);
            let v = packed.contract(&u);
            if family.violated(&u, &v, cfg) {
                hit = Some(u);
                return;
            }
        }
        if best.len() < GRID_SEEDS || f < best[best.len() - 1].0 {
            best.push((f, x.to_vec()));
            best.sort_by(|a, b| a.0.total_cmp(&b.0));
            best.truncate(GRID_SEEDS);
        }
    });
    if let Some(u) = hit {
        if let Some(w) = finalize(packed, family, u, cfg) {
            return Some(w);
        }
    }
    let mut rng = face_rng(cfg.seed, face_no);
    let mut starts: Vec<Vec<f64>> = best.into_iter().map(|(_, x)| x).collect();
    for _ in 0..RANDOM_SEEDS {
        starts.push(random_simplex_point(k, &mut rng));
    }
    for start in starts {
        let (x, f) = refine(&mut eval, &start, 1.0 / g as f64, cfg.refine_iters, &mut rng);
        if f <= screen {
            if let Some(w) = finalize(packed, family, eval.lifted(&x), cfg) {
                return Some(w);
            }
        }
    }
    None
}

/// Runs the full search for `family` over `faces`; the first face (in order) with a validated
/// witness wins.
fn search(m: &Tensor, family: Family, faces: &[Face], cfg: &CheckConfig) -> Option<(Vec<f64>, Vec<f64>)> {
    let packed = m.packed();
    let n = m.dim();
    for face in faces {
        let u = face.lift(&vec![1.0; face.idx.len()], n);
        let v = packed.contract(&u);
        if family.violated(&u, &v, cfg) {
            return Some((u, v));
        }
    }
    let indexed: Vec<(usize, &Face)> = faces.iter().enumerate().collect();
    par::map(&indexed, |&(no, face)| search_face(&packed, family, face, no, cfg))
        .into_iter()
        .flatten()
        .next()
}

fn coarsest_resolution(cfg: &CheckConfig, n: usize) -> f64 {
    let g = (1..=n).map(|k| face_resolution(cfg.grid_resolution, k)).min().unwrap_or(cfg.grid_resolution);
    1.0 / g as f64
}

fn check_semipositive_family(m: &Tensor, strict: bool, cfg: &CheckConfig) -> ClassVerdict {
    let n = m.dim();
    if n == 1 {
        let d = m.get(&vec![1; m.order()]);
        let bad = if strict { d <= 0.0 } else { d < 0.0 };
        return if bad {
            ClassVerdict::non_member(vec![1.0], vec![d])
        } else {
            ClassVerdict::member_exact()
        };
    }
    let family = Family::Semipositive { strict };
    match search(m, family, &semipositive_faces(n), cfg) {
        Some((u, v)) => ClassVerdict::non_member(u, v),
        None => ClassVerdict::member_up_to(Some(coarsest_resolution(cfg, n))),
    }
}

/// Semipositive: every `0 != u >= 0` has an `l` with `u_l > 0` and `(M u^(r-1))_l >= 0`.
pub fn check_semipositive(m: &Tensor, cfg: &CheckConfig) -> ClassVerdict {
    check_semipositive_family(m, false, cfg)
}

/// Strictly semipositive: as [`check_semipositive`] with `(M u^(r-1))_l > 0`.
pub fn check_strictly_semipositive(m: &Tensor, cfg: &CheckConfig) -> ClassVerdict {
    check_semipositive_family(m, true, cfg)
}

/// Grid points alone (no barycenters, no refinement): the first interior grid point of any face
/// that violates (strict) semipositivity. Uses the same meshes as the checkers.
pub fn grid_violation(m: &Tensor, strict: bool, cfg: &CheckConfig) -> Option<Vec<f64>> {
    let packed = m.packed();
    let family = Family::Semipositive { strict };
    let faces = semipositive_faces(m.dim());
    par::map(&faces, |face| {
        let k = face.idx.len();
        let eval = FaceEval::new(&packed, face);
        let mut hit = None;
        for_each_interior_point(k, face_resolution(cfg.grid_resolution, k), |x| {
            if hit.is_none() {
                let u = eval.lifted(x);
                let v = packed.contract(&u);
                if family.violated(&u, &v, cfg) {
                    hit = Some(u);
                }
            }
        });
        hit
    })
    .into_iter()
    .flatten()
    .next()
}

fn check_p_family(m: &Tensor, strict: bool, cfg: &CheckConfig) -> ClassVerdict {
    let family = Family::P { strict };
    match search(m, family, &signed_faces(m.dim(), m.order()), cfg) {
        Some((u, v)) => ClassVerdict::non_member(u, v),
        None => ClassVerdict::member_up_to(Some(coarsest_resolution(cfg, m.dim()))),
    }
}

/// P0: every `u != 0` has an `i` with `u_i != 0` and `u_i (M u^(r-1))_i >= 0`.
pub fn check_p0(m: &Tensor, cfg: &CheckConfig) -> ClassVerdict {
    check_p_family(m, false, cfg)
}

/// P: as [`check_p0`] with `> 0`.
pub fn check_p(m: &Tensor, cfg: &CheckConfig) -> ClassVerdict {
    check_p_family(m, true, cfg)
}

/// Exact check of `z`: `0 != z >= 0` and `(A z)_l < 0` (strict: `<= 0`) wherever `z_l > 0`.
pub fn violates_semimonotonicity_exact(a: &Matrix, z: &[f64], strict: bool) -> bool {
    let n = a.dim();
    if z.len() != n || !vector::is_nonnegative(z) || !vector::is_nonzero(z) {
        return false;
    }
    let zq: Vec<BigRational> = z.iter().map(|&x| to_rational(x)).collect();
    (0..n).filter(|&l| z[l] > 0.0).all(|l| {
        let mut s = BigRational::zero();
        for (j, zj) in zq.iter().enumerate() {
            s += to_rational(a.get(l, j)) * zj;
        }
        if strict {
            !s.is_positive()
        } else {
            s.is_negative()
        }
    })
}

fn check_semimonotone_family(a: &Matrix, strict: bool) -> ClassVerdict {
    let n = a.dim();
    let subsets = IndexSet::nonempty_subsets(n);
    let found = par::map(&subsets, |j| {
        let sub: Vec<Vec<BigRational>> = a
            .principal_submatrix(j.members())
            .iter()
            .map(|r| r.iter().map(|&x| to_rational(x)).collect())
            .collect();
        let lp = min_max_over_simplex(&sub);
        if lp.status != LpStatus::Optimal {
            return None;
        }
        let bad = if strict { !lp.value.is_positive() } else { lp.value.is_negative() };
        if !bad {
            return None;
        }
        let ints = primitive_integer_vector(&lp.x);
        let xj: Vec<f64> = ints.iter().map(|v| to_f64(&BigRational::from_integer(v.clone()))).collect();
        Some(j.lift(&xj, n))
    });
    match found.into_iter().flatten().next() {
        Some(z) => {
            let az = a.mul_vec(&z).expect("dimensions match");
            ClassVerdict::non_member(z, az)
        }
        None => ClassVerdict::member_exact(),
    }
}

/// Semimonotone: every `0 != z >= 0` has a `k` with `z_k > 0` and `(A z)_k >= 0`. Exact.
///
/// For each nonempty `J` solves `min t s.t. (A_JJ x)_l <= t, x >= 0, sum x = 1` over the
/// rationals; a negative optimum yields a witness, returned as a primitive integer vector.
pub fn check_semimonotone(a: &Matrix) -> ClassVerdict {
    check_semimonotone_family(a, false)
}

/// Strictly semimonotone: as [`check_semimonotone`] with `(A z)_k > 0`; witnesses need `t* <= 0`.
pub fn check_strictly_semimonotone(a: &Matrix) -> ClassVerdict {
    check_semimonotone_family(a, true)
}

/// Diagonal tensor `D` with `d_{i..i} = -(M u^(r-1))_i / u_i^(r-1)`, so that `u` is a null vector
/// of `M + D`. Requires `u > 0`.
pub fn build_null_diagonal(m: &Tensor, u: &[f64]) -> Result<Tensor> {
    if let Some((i, &x)) = u.iter().enumerate().find(|(_, &x)| x.is_nan() || x <= 0.0) {
        return Err(Error::NotPositive { index: i + 1, value: x });
    }
    let v = m.contract(u)?;
    let p = (m.order() - 1) as i32;
    let d: Vec<f64> = v.iter().zip(u).map(|(&vi, &ui)| -vi / ui.powi(p)).collect();
    Tensor::diagonal(m.order(), &d)
}

/// Diagonal `G` in `[0, I]` making `u` a null vector of `G I + (I - G) M`.
///
/// With `v = M u^(r-1)`: `g_ii = 0` if `v_i = 0`; `-v_i / (u_i^(r-1) - v_i)` if `u_i > 0, v_i < 0`;
/// `1` if `u_i = 0, v_i != 0`. Inputs with some `u_i > 0, v_i > 0` are rejected.
pub fn build_g_matrix(m: &Tensor, u: &[f64]) -> Result<Matrix> {
    if u.len() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: u.len(),
        });
    }
    if !vector::is_nonnegative(u) || !vector::is_nonzero(u) {
        return Err(Error::NotNonnegativeNonzero);
    }
    let v = m.contract(u)?;
    let p = (m.order() - 1) as i32;
    let mut g = Vec::with_capacity(u.len());
    for (i, (&ui, &vi)) in u.iter().zip(&v).enumerate() {
        let gi = if ui > 0.0 {
            if vi > 0.0 {
                return Err(Error::GPrecondition { index: i + 1, u: ui, v: vi });
            }
            if vi == 0.0 {
                0.0
            } else {
                -vi / (ui.powi(p) - vi)
            }
        } else if vi == 0.0 {
            0.0
        } else {
            1.0
        };
        g.push(gi);
    }
    Ok(Matrix::diag(&g))
}

/// `G I + (I - G) M` for a diagonal `G`.
pub fn g_combination(m: &Tensor, g: &Matrix) -> Result<Tensor> {
    let n = m.dim();
    let identity = Tensor::identity(m.order(), n)?;
    let rest = Matrix::identity(n).sub(g)?;
    identity.left_mul(g)?.add(&m.left_mul(&rest)?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeltaShiftReport {
    /// Verdict of the plain checker on `M`.
    pub base: ClassVerdict,
    /// `(delta, strict verdict on M + delta I)` in input order.
    pub shifted: Vec<(f64, ClassVerdict)>,
    /// `base` member implies every shifted verdict is member.
    pub consistent: bool,
    /// When `base` is not a member: whether the smallest shift is also rejected. Reported only.
    pub smallest_shift_rejected: Option<bool>,
}

/// Strict checks of `M + delta I` for each `delta`, compared against the plain check of `M`.
pub fn check_delta_shift(m: &Tensor, deltas: &[f64], cfg: &CheckConfig) -> Result<DeltaShiftReport> {
    if let Some(&d) = deltas.iter().find(|&&d| d.is_nan() || d <= 0.0) {
        return Err(Error::NonPositiveShift(d));
    }
    let identity = Tensor::identity(m.order(), m.dim())?;
    let base = check_semipositive(m, cfg);
    let mut shifted = Vec::with_capacity(deltas.len());
    for &d in deltas {
        let t = m.add(&identity.scale(d))?;
        shifted.push((d, check_strictly_semipositive(&t, cfg)));
    }
    let consistent = !base.is_member() || shifted.iter().all(|(_, v)| v.is_member());
    let smallest_shift_rejected = if base.is_member() {
        None
    } else {
        shifted
            .iter()
            .min_by(|a, b| a.0.total_cmp(&b.0))
            .map(|(_, v)| !v.is_member())
    };
    Ok(DeltaShiftReport {
        base,
        shifted,
        consistent,
        smallest_shift_rejected,
    })
}

fn nonzero_solution(solutions: &[tcp::TcpSolution]) -> Option<&tcp::TcpSolution> {
    solutions.iter().find(|s| !s.support.is_empty())
}

/// R0: `TCP(0, M)` has only the zero solution. Found-set semantics (see [`tcp::solve_tcp`]).
pub fn check_r0(m: &Tensor, solver: &SolverConfig) -> Result<ClassVerdict> {
    let sols = tcp::solve_tcp(m, &vec![0.0; m.dim()], solver)?;
    Ok(match nonzero_solution(&sols) {
        Some(s) => ClassVerdict::non_member(s.u.clone(), s.w.clone()),
        None => ClassVerdict::member_up_to(None),
    })
}

/// R: R0 and `TCP(e, M)` has only the zero solution.
pub fn check_r(m: &Tensor, solver: &SolverConfig) -> Result<ClassVerdict> {
    let r0 = check_r0(m, solver)?;
    if !r0.is_member() {
        return Ok(r0);
    }
    let sols = tcp::solve_tcp(m, &vector::ones(m.dim()), solver)?;
    Ok(match nonzero_solution(&sols) {
        Some(s) => ClassVerdict::non_member(s.u.clone(), s.w.clone()),
        None => ClassVerdict::member_up_to(None),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct QFalsifierReport {
    pub samples: usize,
    /// Sampled `q` for which no solution was found: evidence against the Q property.
    pub failures: Vec<Vec<f64>>,
}

/// Tries to refute the Q property by sampling `q`: every sign pattern of `+-1` first, then uniform
/// draws from `[-3, 3]^n` up to `q_samples` in total. Never concludes membership.
pub fn q_falsifier(m: &Tensor, q_samples: usize, solver: &SolverConfig) -> Result<QFalsifierReport> {
    let n = m.dim();
    tcp::check_size(n, solver)?;
    let mut qs: Vec<Vec<f64>> = (0..1u64 << n)
        .map(|p| (0..n).map(|i| if p >> i & 1 == 1 { -1.0 } else { 1.0 }).collect())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(solver.seed);
    while qs.len() < q_samples {
        qs.push((0..n).map(|_| rng.gen_range(-3.0..3.0)).collect());
    }
    let found = par::map(&qs, |q| tcp::solve_tcp(m, q, solver).map(|s| s.is_empty()));
    let mut failures = Vec::new();
    for (q, empty) in qs.iter().zip(found) {
        if empty? {
            failures.push(q.clone());
        }
    }
    Ok(QFalsifierReport {
        samples: qs.len(),
        failures,
    })
}
