//! Graph matrices and their dominant eigenpairs.
//!
//! Dense symmetric storage; cyclic Jacobi gives full spectra up to
//! [`JACOBI_MAX_DIM`], shifted power iteration covers larger orders where
//! only the dominant pair is needed. Both paths enforce the same residual
//! contract: `||Mx - lambda x||_2 <= tol`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Absolute residual-norm tolerance used when none is supplied.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Full diagonalization beyond this order is out of scope; the dominant
/// pair switches to power iteration.
pub const JACOBI_MAX_DIM: usize = 64;
const POWER_ITERATION_CAP: usize = 100_000;
// fixed stream so results are identical across runs
const POWER_SEED: u64 = 0x51ec7;

/// Dense symmetric matrix; `set` writes both mirror entries.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.dim + j] = v;
        self.data[j * self.dim + i] = v;
    }

    pub fn mul_vec(&self, x: &[f64], out: &mut [f64]) {
        for (i, o) in out.iter_mut().enumerate().take(self.dim) {
            let row = &self.data[i * self.dim..(i + 1) * self.dim];
            *o = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }

    /// Gershgorin lower bound on the smallest eigenvalue.
    fn gershgorin_min(&self) -> f64 {
        (0..self.dim)
            .map(|i| {
                let off: f64 = (0..self.dim)
                    .filter(|&j| j != i)
                    .map(|j| self.get(i, j).abs())
                    .sum();
                self.get(i, i) - off
            })
            .fold(f64::INFINITY, f64::min)
    }
}

/// Dominant eigenpair with its verified residual norm.
#[derive(Clone, Debug, Serialize)]
pub struct EigenResult {
    pub value: f64,
    pub vector: Vec<f64>,
    pub residual: f64,
}

pub fn adjacency(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.n());
    for (u, v) in g.edges() {
        m.set(u, v, 1.0);
    }
    m
}

/// D - A.
pub fn laplacian(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.n());
    for v in 0..g.n() {
        m.set(v, v, g.degree(v) as f64);
    }
    for (u, v) in g.edges() {
        m.set(u, v, -1.0);
    }
    m
}

/// D + A.
pub fn signless_laplacian(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.n());
    for v in 0..g.n() {
        m.set(v, v, g.degree(v) as f64);
    }
    for (u, v) in g.edges() {
        m.set(u, v, 1.0);
    }
    m
}

/// Largest eigenvalue and unit eigenvector, residual-verified.
pub fn dominant_eigenpair(m: &SymMatrix, tol: f64) -> Result<EigenResult> {
    if m.dim() == 0 {
        return Err(Error::Precondition("matrix dimension must be >= 1".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    if m.dim() <= JACOBI_MAX_DIM {
        let (values, vectors) = jacobi(m)?;
        let (idx, &value) = values
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .expect("nonempty spectrum");
        let vector = vectors[idx].clone();
        let residual = residual_norm(m, value, &vector);
        if residual <= tol {
            Ok(EigenResult {
                value,
                vector,
                residual,
            })
        } else {
            Err(Error::Convergence {
                iterations: 0,
                residual,
                best: Box::new(EigenResult {
                    value,
                    vector,
                    residual,
                }),
            })
        }
    } else {
        power_iteration(m, tol)
    }
}

/// Full spectrum, ascending. Capped at [`JACOBI_MAX_DIM`].
pub fn symmetric_spectrum(m: &SymMatrix) -> Result<Vec<f64>> {
    if m.dim() > JACOBI_MAX_DIM {
        return Err(Error::Capacity(format!(
            "full spectrum limited to dim <= {JACOBI_MAX_DIM}, got {}",
            m.dim()
        )));
    }
    let (mut values, _) = jacobi(m)?;
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Signless Laplacian spectral radius.
pub fn q_index(g: &Graph) -> Result<f64> {
    if g.n() == 0 {
        return Err(Error::Precondition("graph must be nonempty".into()));
    }
    Ok(dominant_eigenpair(&signless_laplacian(g), DEFAULT_TOL)?.value)
}

/// Laplacian spectral radius.
pub fn mu_index(g: &Graph) -> Result<f64> {
    if g.n() == 0 {
        return Err(Error::Precondition("graph must be nonempty".into()));
    }
    Ok(dominant_eigenpair(&laplacian(g), DEFAULT_TOL)?.value)
}

/// Strictly positive unit eigenvector of Q for a connected graph, sign
/// normalized so the largest-magnitude entry is positive.
pub fn perron_vector(g: &Graph) -> Result<EigenResult> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "perron vector requires a connected graph".into(),
        ));
    }
    let mut res = dominant_eigenpair(&signless_laplacian(g), DEFAULT_TOL)?;
    let max_abs = res
        .vector
        .iter()
        .copied()
        .max_by(|a, b| a.abs().total_cmp(&b.abs()))
        .expect("nonempty vector");
    if max_abs < 0.0 {
        for x in &mut res.vector {
            *x = -*x;
        }
    }
    if g.n() > 1 && res.vector.iter().any(|&x| x <= 0.0) {
        return Err(Error::Numerical(
            "nonpositive entry in the dominant eigenvector of a connected graph".into(),
        ));
    }
    Ok(res)
}

/// Move the edges {v,t} for t in `targets` onto u. Targets must be
/// neighbors of v, not of u, and distinct from both endpoints.
pub fn edge_shift(g: &Graph, u: usize, v: usize, targets: &[usize]) -> Result<Graph> {
    if u >= g.n() || v >= g.n() || u == v {
        return Err(Error::Precondition(format!(
            "shift endpoints must be distinct in-range vertices, got u={u}, v={v}"
        )));
    }
    if targets.is_empty() {
        return Err(Error::Precondition("target set must be nonempty".into()));
    }
    let mut seen = std::collections::HashSet::new();
    for &t in targets {
        if !seen.insert(t) {
            return Err(Error::InvalidShift {
                target: t,
                reason: "listed twice".into(),
            });
        }
        if t == u {
            return Err(Error::InvalidShift {
                target: t,
                reason: "equals u".into(),
            });
        }
        if t == v {
            return Err(Error::InvalidShift {
                target: t,
                reason: "equals v".into(),
            });
        }
        if !g.has_edge(v, t) {
            return Err(Error::InvalidShift {
                target: t,
                reason: "not a neighbor of v".into(),
            });
        }
        if g.has_edge(u, t) {
            return Err(Error::InvalidShift {
                target: t,
                reason: "already a neighbor of u".into(),
            });
        }
    }
    let mut out = g.clone();
    for &t in targets {
        out.remove_edge(v, t);
        out.add_edge(u, t).expect("validated as a non-edge");
    }
    Ok(out)
}

/// Divisor matrix of an equitable partition: entry (i,j) counts the
/// neighbors a class-i vertex has in class j, plus the common degree on
/// the diagonal. Not symmetric in general.
#[derive(Clone, Debug)]
pub struct QuotientMatrix {
    entries: Vec<Vec<f64>>,
    class_sizes: Vec<usize>,
}

impl QuotientMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.entries
    }

    /// Dominant eigenvalue via the similar symmetric matrix
    /// S^{1/2} B S^{-1/2} with S = diag(class sizes).
    pub fn dominant_value(&self, tol: f64) -> Result<f64> {
        let r = self.dim();
        let mut sym = SymMatrix::zeros(r);
        for i in 0..r {
            for j in i..r {
                let scale = (self.class_sizes[i] as f64 / self.class_sizes[j] as f64).sqrt();
                sym.set(i, j, self.entries[i][j] * scale);
            }
        }
        Ok(dominant_eigenpair(&sym, tol)?.value)
    }

    /// Characteristic polynomial coefficients (ascending) via Faddeev-
    /// LeVerrier; exact for the integer matrices produced here as long as
    /// intermediates stay within f64's integer range.
    pub fn char_poly(&self) -> Vec<f64> {
        let r = self.dim();
        let b = &self.entries;
        // c[r] = 1; M_0 = 0
        let mut coeffs = vec![0.0; r + 1];
        coeffs[r] = 1.0;
        let mut m_prev = vec![vec![0.0; r]; r];
        let mut c_prev = 1.0;
        for step in 1..=r {
            // M_k = B * M_{k-1} + c_{k-1} I
            let mut m_k = vec![vec![0.0; r]; r];
            for i in 0..r {
                for j in 0..r {
                    let mut acc = 0.0;
                    for l in 0..r {
                        acc += b[i][l] * m_prev[l][j];
                    }
                    m_k[i][j] = acc;
                }
                m_k[i][i] += c_prev;
            }
            // c_k = -tr(B * M_k) / k
            let mut tr = 0.0;
            for i in 0..r {
                for l in 0..r {
                    tr += b[i][l] * m_k[l][i];
                }
            }
            let c_k = -tr / step as f64;
            coeffs[r - step] = c_k;
            m_prev = m_k;
            c_prev = c_k;
        }
        coeffs
    }
}

/// Build the divisor matrix, validating equitability: classes partition
/// the vertex set, and every vertex in a class has the same degree and
/// the same neighbor count into every class.
pub fn quotient_matrix(g: &Graph, partition: &[Vec<usize>]) -> Result<QuotientMatrix> {
    let n = g.n();
    let r = partition.len();
    let mut class_of = vec![usize::MAX; n];
    for (ci, class) in partition.iter().enumerate() {
        if class.is_empty() {
            return Err(Error::InvalidParameter(format!("class {ci} is empty")));
        }
        for &v in class {
            if v >= n {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} out of range in class {ci}"
                )));
            }
            if class_of[v] != usize::MAX {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} appears in two classes"
                )));
            }
            class_of[v] = ci;
        }
    }
    if class_of.contains(&usize::MAX) {
        return Err(Error::InvalidParameter(
            "partition does not cover all vertices".into(),
        ));
    }

    let profile = |v: usize| -> Vec<usize> {
        let mut counts = vec![0usize; r];
        for &w in g.neighbors(v) {
            counts[class_of[w]] += 1;
        }
        counts
    };

    let mut entries = vec![vec![0.0; r]; r];
    for (ci, class) in partition.iter().enumerate() {
        let first = class[0];
        let base = profile(first);
        for &v in &class[1..] {
            let p = profile(v);
            if p != base {
                return Err(Error::NotEquitable {
                    u: first,
                    v,
                    class: ci,
                    detail: format!("neighbor profiles {base:?} vs {p:?}"),
                });
            }
        }
        let degree = g.degree(first) as f64;
        for j in 0..r {
            entries[ci][j] = base[j] as f64;
        }
        entries[ci][ci] += degree;
    }
    Ok(QuotientMatrix {
        entries,
        class_sizes: partition.iter().map(Vec::len).collect(),
    })
}

/// Orbit partition of the extremal k-cyclic family: hub, matched
/// vertices, pendants (pendant class omitted when n = 2k+1).
pub fn extremal_partition(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut classes = vec![vec![0], (1..=2 * k).collect::<Vec<_>>()];
    if n > 2 * k + 1 {
        classes.push((2 * k + 1..n).collect());
    }
    classes
}

fn residual_norm(m: &SymMatrix, value: f64, vector: &[f64]) -> f64 {
    let mut y = vec![0.0; m.dim()];
    m.mul_vec(vector, &mut y);
    y.iter()
        .zip(vector)
        .map(|(yi, xi)| (yi - value * xi).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Cyclic Jacobi (rows sweep). Returns (eigenvalues, eigenvectors) with
/// vectors stored per eigenvalue; see Numerical Recipes 11.1.
fn jacobi(m: &SymMatrix) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let n = m.dim();
    let mut a = m.clone();
    let mut v = SymMatrix::zeros(n); // used as a general square here
    for i in 0..n {
        v.data[i * n + i] = 1.0;
    }
    let scale: f64 = a.data.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let threshold = 1e-13 * scale;
    const MAX_SWEEPS: usize = 100;

    for _sweep in 0..MAX_SWEEPS {
        let off: f64 = {
            let mut s = 0.0;
            for p in 0..n {
                for q in p + 1..n {
                    s += a.data[p * n + q].abs();
                }
            }
            s
        };
        if off <= threshold {
            let values: Vec<f64> = (0..n).map(|i| a.data[i * n + i]).collect();
            let vectors: Vec<Vec<f64>> = (0..n)
                .map(|col| (0..n).map(|row| v.data[row * n + col]).collect())
                .collect();
            return Ok((values, vectors));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.data[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a.data[p * n + p];
                let aqq = a.data[q * n + q];
                let theta = 0.5 * (aqq - app) / apq;
                let t = if theta.abs() > 1e12 {
                    0.5 / theta
                } else {
                    let s = theta.signum();
                    s / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a.data[p * n + p] = app - t * apq;
                a.data[q * n + q] = aqq + t * apq;
                a.data[p * n + q] = 0.0;
                a.data[q * n + p] = 0.0;
                for j in 0..n {
                    if j != p && j != q {
                        let ajp = a.data[j * n + p];
                        let ajq = a.data[j * n + q];
                        let njp = ajp - s * (ajq + tau * ajp);
                        let njq = ajq + s * (ajp - tau * ajq);
                        a.data[j * n + p] = njp;
                        a.data[p * n + j] = njp;
                        a.data[j * n + q] = njq;
                        a.data[q * n + j] = njq;
                    }
                }
                for j in 0..n {
                    let vjp = v.data[j * n + p];
                    let vjq = v.data[j * n + q];
                    v.data[j * n + p] = vjp - s * (vjq + tau * vjp);
                    v.data[j * n + q] = vjq + s * (vjp - tau * vjq);
                }
            }
        }
    }
    Err(Error::Numerical(
        "jacobi sweeps did not reduce the off-diagonal mass".into(),
    ))
}

/// Power iteration on M + cI where the Gershgorin shift c makes the
/// matrix positive semidefinite, so the dominant-magnitude eigenvalue is
/// the largest one. Deterministic seeded start.
fn power_iteration(m: &SymMatrix, tol: f64) -> Result<EigenResult> {
    let n = m.dim();
    let lo = m.gershgorin_min();
    let shift = if lo < 0.0 { -lo } else { 0.0 };

    let mut rng = ChaCha8Rng::seed_from_u64(POWER_SEED);
    let mut x: Vec<f64> = (0..n).map(|_| rng.gen_range(0.1..1.0)).collect();
    normalize(&mut x);
    let mut y = vec![0.0; n];
    let mut best_res = f64::INFINITY;
    let mut best: Option<EigenResult> = None;

    for _ in 0..POWER_ITERATION_CAP {
        m.mul_vec(&x, &mut y);
        if shift != 0.0 {
            for (yi, xi) in y.iter_mut().zip(&x) {
                *yi += shift * xi;
            }
        }
        // Rayleigh quotient of the shifted matrix; x is unit
        let lambda_shifted: f64 = y.iter().zip(&x).map(|(a, b)| a * b).sum();
        let res: f64 = y
            .iter()
            .zip(&x)
            .map(|(yi, xi)| (yi - lambda_shifted * xi).powi(2))
            .sum::<f64>()
            .sqrt();
        if res < best_res {
            best_res = res;
            best = Some(EigenResult {
                value: lambda_shifted - shift,
                vector: x.clone(),
                residual: res,
            });
        }
        if res <= tol {
            return Ok(EigenResult {
                value: lambda_shifted - shift,
                vector: x.clone(),
                residual: res,
            });
        }
        let norm: f64 = y.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm == 0.0 {
            // x is an exact null vector of the shifted matrix
            return Ok(EigenResult {
                value: -shift,
                vector: x,
                residual: 0.0,
            });
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    Err(Error::Convergence {
        iterations: POWER_ITERATION_CAP,
        residual: best_res,
        best: Box::new(best.expect("at least one iterate")),
    })
}

fn normalize(x: &mut [f64]) {
    let norm: f64 = x.iter().map(|a| a * a).sum::<f64>().sqrt();
    for xi in x {
        *xi /= norm;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, extremal_kcyclic, path, star};

    const EPS: f64 = 1e-9;

    #[test]
    fn matrix_builders() {
        let k2 = complete(2).unwrap();
        let q = signless_laplacian(&k2);
        assert_eq!(
            (q.get(0, 0), q.get(0, 1), q.get(1, 0), q.get(1, 1)),
            (1.0, 1.0, 1.0, 1.0)
        );
        let l = laplacian(&k2);
        assert_eq!(
            (l.get(0, 0), l.get(0, 1), l.get(1, 0), l.get(1, 1)),
            (1.0, -1.0, -1.0, 1.0)
        );
        let c3 = cycle(3).unwrap();
        let q3 = signless_laplacian(&c3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(q3.get(i, j), if i == j { 2.0 } else { 1.0 });
            }
        }
    }

    #[test]
    fn known_indices() {
        // q(S_n) = n; q(C_n) = 4; q(K_n) = 2(n-1)
        assert!((q_index(&star(4).unwrap()).unwrap() - 4.0).abs() < EPS);
        assert!((q_index(&cycle(5).unwrap()).unwrap() - 4.0).abs() < EPS);
        assert!((q_index(&complete(4).unwrap()).unwrap() - 6.0).abs() < EPS);
        // P_3 = S_3 is bipartite: mu = q = 3
        assert!((q_index(&path(3).unwrap()).unwrap() - 3.0).abs() < EPS);
        assert!((mu_index(&path(3).unwrap()).unwrap() - 3.0).abs() < EPS);
        assert!((mu_index(&cycle(6).unwrap()).unwrap() - 4.0).abs() < EPS);
        assert!((q_index(&cycle(6).unwrap()).unwrap() - 4.0).abs() < EPS);
        // q(P_4) = 2 + sqrt(2)
        assert!((q_index(&path(4).unwrap()).unwrap() - (2.0 + 2f64.sqrt())).abs() < EPS);
    }

    #[test]
    fn extremal_value_matches_cubic_root() {
        // derived from the 5x5 diagonalization: largest root of
        // x^3 - 8x^2 + 15x - 4
        let g = extremal_kcyclic(5, 1).unwrap();
        assert!((q_index(&g).unwrap() - 5.32340427608648).abs() < 1e-10);
    }

    #[test]
    fn perron_structure() {
        let s4 = star(4).unwrap();
        let p = perron_vector(&s4).unwrap();
        assert!(p.vector[0] > p.vector[1]);
        for leaf in 2..4 {
            assert!((p.vector[leaf] - p.vector[1]).abs() < 1e-9);
        }

        let c5 = cycle(5).unwrap();
        let p = perron_vector(&c5).unwrap();
        let expect = 1.0 / 5f64.sqrt();
        for x in &p.vector {
            assert!((x - expect).abs() < 1e-9);
        }

        // end-to-end symmetry, inner above outer (4x4 diagonalization)
        let p4 = path(4).unwrap();
        let p = perron_vector(&p4).unwrap();
        assert!((p.vector[0] - p.vector[3]).abs() < 1e-9);
        assert!((p.vector[1] - p.vector[2]).abs() < 1e-9);
        assert!(p.vector[1] > p.vector[0]);
        assert!((p.vector[0] - 0.270598050073).abs() < 1e-9);
        assert!((p.vector[1] - 0.653281482438).abs() < 1e-9);

        let disconnected = complete(2).unwrap().union(&complete(2).unwrap());
        assert!(perron_vector(&disconnected).is_err());
    }

    #[test]
    fn edge_shift_path_to_star() {
        // path 0-1-2-3: move 2's neighbor 3 onto 1 -> star at 1
        let p4 = path(4).unwrap();
        let shifted = edge_shift(&p4, 1, 2, &[3]).unwrap();
        assert_eq!(shifted.degree_sequence(), vec![3, 1, 1, 1]);
        let q0 = q_index(&p4).unwrap();
        let q1 = q_index(&shifted).unwrap();
        assert!((q0 - 3.41421356237309).abs() < 1e-9);
        assert!((q1 - 4.0).abs() < 1e-9);
        assert!((q1 - q0 - 0.58578643762691).abs() < 1e-9);
    }

    #[test]
    fn edge_shift_between_bicyclic_variants() {
        use crate::canon::canonical_form;
        use crate::graph::{bicyclic_delta_n2, Variant};
        // moving the detached vertex from the triangle vertex back onto
        // the pendant neighbor turns variant B into variant A
        let b = bicyclic_delta_n2(8, Variant::B).unwrap();
        let a = bicyclic_delta_n2(8, Variant::A).unwrap();
        let shifted = edge_shift(&b, 5, 1, &[7]).unwrap();
        assert_eq!(
            canonical_form(&shifted).unwrap(),
            canonical_form(&a).unwrap()
        );
    }

    #[test]
    fn edge_shift_preconditions() {
        let p4 = path(4).unwrap();
        // target already adjacent to u
        assert!(matches!(
            edge_shift(&p4, 2, 1, &[0, 2]),
            Err(Error::InvalidShift { .. })
        ));
        // target not adjacent to v
        assert!(matches!(
            edge_shift(&p4, 0, 1, &[3]),
            Err(Error::InvalidShift { .. })
        ));
        // empty target set
        assert!(edge_shift(&p4, 0, 2, &[]).is_err());
        // u = v
        assert!(edge_shift(&p4, 1, 1, &[0]).is_err());
    }

    #[test]
    fn quotient_of_extremal_family() {
        let g = extremal_kcyclic(5, 1).unwrap();
        let part = extremal_partition(5, 1);
        let qm = quotient_matrix(&g, &part).unwrap();
        let expect = [[4.0, 2.0, 2.0], [1.0, 3.0, 0.0], [1.0, 0.0, 1.0]];
        for (i, row) in expect.iter().enumerate() {
            for (j, &want) in row.iter().enumerate() {
                assert_eq!(qm.get(i, j), want);
            }
        }
        // characteristic polynomial x^3 - 8x^2 + 15x - 4
        let cp = qm.char_poly();
        assert_eq!(cp, vec![-4.0, 15.0, -8.0, 1.0]);
        // dominant value agrees with the full matrix
        let qv = qm.dominant_value(DEFAULT_TOL).unwrap();
        assert!((qv - q_index(&g).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn quotient_regular_single_class() {
        let c4 = cycle(4).unwrap();
        let qm = quotient_matrix(&c4, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(qm.get(0, 0), 4.0);
        assert!((qm.dominant_value(DEFAULT_TOL).unwrap() - 4.0).abs() < 1e-10);
    }

    #[test]
    fn quotient_rejects_inequitable() {
        let p4 = path(4).unwrap();
        let err = quotient_matrix(&p4, &[vec![0, 1], vec![2, 3]]);
        assert!(matches!(err, Err(Error::NotEquitable { .. })));
        // bad partitions
        assert!(quotient_matrix(&p4, &[vec![0, 1, 2]]).is_err());
        assert!(quotient_matrix(&p4, &[vec![0, 0, 1, 2, 3]]).is_err());
    }

    #[test]
    fn power_iteration_large_graph() {
        // above the Jacobi cutoff; hub family has a strong spectral gap
        let g = extremal_kcyclic(200, 2).unwrap();
        let q = signless_laplacian(&g);
        let r = dominant_eigenpair(&q, DEFAULT_TOL).unwrap();
        assert!(r.residual <= DEFAULT_TOL);
        assert!(r.value > 200.0);
    }

    #[test]
    fn psd_smallest_eigenvalues() {
        for g in [path(6).unwrap(), cycle(7).unwrap(), extremal_kcyclic(9, 2).unwrap()] {
            let sq = symmetric_spectrum(&signless_laplacian(&g)).unwrap();
            assert!(sq[0] >= -1e-10);
            let sl = symmetric_spectrum(&laplacian(&g)).unwrap();
            assert!(sl[0] >= -1e-10);
            assert!(sl[0].abs() < 1e-10); // L always annihilates the ones vector
        }
    }
}
