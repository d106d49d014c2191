//! Cyclic Jacobi eigensolver for dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `A_pq` with a diagonal
//! unitary, then applies the classical real symmetric Jacobi rotation. The
//! matrix is kept in full (both triangles) and eigenvectors are accumulated
//! as rows of `V^T` so that every update touches contiguous memory.

use num_complex::Complex64 as C64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;
/// Sweeps stop once the off-diagonal Frobenius norm falls below this
/// fraction of the full Frobenius norm.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;

/// Eigendecomposition `A = V diag(values) V†` with ascending eigenvalues.
#[derive(Clone, Debug)]
pub struct HermEig {
    values: Vec<f64>,
    /// Eigenvectors stored as rows: `vectors_t[k]` is the k-th eigenvector.
    vectors_t: Vec<Vec<C64>>,
}

impl HermEig {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn vector(&self, k: usize) -> &[C64] {
        &self.vectors_t[k]
    }

    /// Eigenvectors as the columns of a unitary matrix.
    pub fn vectors(&self) -> ComplexMatrix {
        let n = self.dim();
        ComplexMatrix::from_fn(n, n, |i, k| self.vectors_t[k][i])
    }

    /// V f(Λ) V† for a complex spectral function.
    pub fn spectral_map(&self, f: impl Fn(f64) -> C64) -> ComplexMatrix {
        let n = self.dim();
        let weights: Vec<C64> = self.values.iter().map(|&l| f(l)).collect();
        let mut out = ComplexMatrix::zeros(n, n);
        for (k, w) in weights.iter().enumerate() {
            let v = &self.vectors_t[k];
            for i in 0..n {
                let a = v[i] * w;
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * v[j].conj();
                }
            }
        }
        out
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.spectral_map(|l| C64::new(l, 0.0))
    }

    /// e^{-iAt}|v⟩ without forming the propagator.
    pub fn propagate(&self, t: f64, v: &[C64]) -> Result<Vec<C64>> {
        let n = self.dim();
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.len() });
        }
        let mut out = vec![C64::new(0.0, 0.0); n];
        for (k, &l) in self.values.iter().enumerate() {
            let vk = &self.vectors_t[k];
            let overlap: C64 = vk.iter().zip(v).map(|(a, b)| a.conj() * b).sum();
            let coef = overlap * C64::from_polar(1.0, -l * t);
            for (o, a) in out.iter_mut().zip(vk) {
                *o += coef * a;
            }
        }
        Ok(out)
    }

    /// Same eigenvectors with eigenvalues multiplied by `s > 0`.
    pub(crate) fn scaled(&self, s: f64) -> Self {
        debug_assert!(s > 0.0);
        Self { values: self.values.iter().map(|l| l * s).collect(), vectors_t: self.vectors_t.clone() }
    }

    /// Spectral spread λ_max − λ_min.
    pub fn spread(&self) -> f64 {
        match (self.values.first(), self.values.last()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0.0,
        }
    }
}

/// Hermitian eigendecomposition by cyclic Jacobi rotations.
///
/// Sweeps use the round-robin ordering: each round rotates `n/2` disjoint
/// index pairs, so the left and right updates become row-contiguous passes.
pub fn herm_eig(a: &ComplexMatrix) -> Result<HermEig> {
    a.ensure_hermitian()?;
    let n = a.dim();
    // Work on the exactly Hermitian part so round-off asymmetry cannot accumulate.
    let mut m: Vec<Vec<C64>> = (0..n).map(|i| (0..n).map(|j| hermitian_entry(a, i, j)).collect()).collect();
    let mut vt: Vec<Vec<C64>> = (0..n)
        .map(|k| {
            let mut row = vec![C64::new(0.0, 0.0); n];
            row[k] = C64::new(1.0, 0.0);
            row
        })
        .collect();

    let total: f64 = m.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let threshold = OFF_DIAGONAL_TOL * total;
    let schedule = round_robin(n);

    let mut off = off_norm(&m);
    let mut sweeps = 0;
    while off > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        for round in &schedule {
            let rotations: Vec<Rotation> = round.iter().filter_map(|&(p, q)| Rotation::new(&m, p, q)).collect();
            apply_round(&mut m, &mut vt, &rotations);
        }
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            m[i][i].im = 0.0;
            for j in (i + 1)..n {
                let avg = (m[i][j] + m[j][i].conj()) * 0.5;
                m[i][j] = avg;
                m[j][i] = avg.conj();
            }
        }
        sweeps += 1;
        off = off_norm(&m);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i][i].re.total_cmp(&m[j][j].re).then(i.cmp(&j)));
    let values = order.iter().map(|&i| m[i][i].re).collect();
    let vectors_t = order.into_iter().map(|i| std::mem::take(&mut vt[i])).collect();
    Ok(HermEig { values, vectors_t })
}

fn hermitian_entry(a: &ComplexMatrix, i: usize, j: usize) -> C64 {
    if i == j {
        C64::new(a[(i, i)].re, 0.0)
    } else {
        (a[(i, j)] + a[(j, i)].conj()) * 0.5
    }
}

fn off_norm(m: &[Vec<C64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in m.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            if i != j {
                s += z.norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Tournament pairing of `0..n`: every pair appears exactly once per sweep.
fn round_robin(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n < 2 {
        return Vec::new();
    }
    let players = n + n % 2;
    let mut ring: Vec<usize> = (0..players).collect();
    let mut rounds = Vec::with_capacity(players - 1);
    for _ in 0..players - 1 {
        let round = (0..players / 2)
            .map(|i| (ring[i], ring[players - 1 - i]))
            .filter(|&(p, q)| p < n && q < n)
            .map(|(p, q)| (p.min(q), p.max(q)))
            .collect();
        rounds.push(round);
        ring[1..].rotate_right(1);
    }
    rounds
}

/// G = diag(1, conj(phase)) * [[c, s], [-s, c]] acting on the (p, q) plane.
struct Rotation {
    p: usize,
    q: usize,
    c: f64,
    s: f64,
    phase: C64,
    diag: (f64, f64),
}

impl Rotation {
    fn new(m: &[Vec<C64>], p: usize, q: usize) -> Option<Self> {
        let apq = m[p][q];
        let b = apq.norm();
        if b < f64::MIN_POSITIVE {
            return None;
        }
        let app = m[p][p].re;
        let aqq = m[q][q].re;
        // Pivots below the floating-point resolution of the diagonal are dropped.
        if app.abs() + 1e3 * b == app.abs() && aqq.abs() + 1e3 * b == aqq.abs() {
            return Some(Self { p, q, c: 1.0, s: 0.0, phase: C64::new(1.0, 0.0), diag: (app, aqq) });
        }
        let theta = (aqq - app) / (2.0 * b);
        let t = if theta == 0.0 { 1.0 } else { theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt()) };
        let c = 1.0 / (1.0 + t * t).sqrt();
        Some(Self { p, q, c, s: t * c, phase: apq / b, diag: (app - t * b, aqq + t * b) })
    }

    /// (x_p, x_q) <- (c x_p - s w x_q, s x_p + c w x_q)
    #[inline]
    fn mix(&self, xp: &mut C64, xq: &mut C64, w: C64) {
        let a = *xp;
        let b = *xq * w;
        *xp = a * self.c - b * self.s;
        *xq = a * self.s + b * self.c;
    }
}

fn apply_round(m: &mut [Vec<C64>], vt: &mut [Vec<C64>], rotations: &[Rotation]) {
    // Rows of G† A, then columns of (G† A) G; disjoint pairs commute.
    for r in rotations {
        let (row_p, row_q) = pair_mut(m, r.p, r.q);
        for (xp, xq) in row_p.iter_mut().zip(row_q.iter_mut()) {
            r.mix(xp, xq, r.phase);
        }
        let (vp, vq) = pair_mut(vt, r.p, r.q);
        let w = r.phase.conj();
        for (xp, xq) in vp.iter_mut().zip(vq.iter_mut()) {
            r.mix(xp, xq, w);
        }
    }
    let weights: Vec<C64> = rotations.iter().map(|r| r.phase.conj()).collect();
    for row in m.iter_mut() {
        for (r, &w) in rotations.iter().zip(&weights) {
            let (lo, hi) = row.split_at_mut(r.q);
            r.mix(&mut lo[r.p], &mut hi[0], w);
        }
    }
    for r in rotations {
        m[r.p][r.p] = C64::new(r.diag.0, 0.0);
        m[r.q][r.q] = C64::new(r.diag.1, 0.0);
        m[r.p][r.q] = C64::new(0.0, 0.0);
        m[r.q][r.p] = C64::new(0.0, 0.0);
    }
}

fn pair_mut<T>(rows: &mut [T], p: usize, q: usize) -> (&mut T, &mut T) {
    debug_assert!(p < q);
    let (lo, hi) = rows.split_at_mut(q);
    (&mut lo[p], &mut hi[0])
}

/// e^{-iHt} via the eigendecomposition of `h`.
pub fn unitary_from(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let eig = herm_eig(h)?;
    Ok(eig.spectral_map(|l| C64::from_polar(1.0, -l * t)))
}
