//! Closed-form bounds and the polynomial families whose largest roots
//! give the extremal spectral indices: a cubic per (n, k) and two
//! quintics for the runner-up unicyclic graphs.
//!
//! Coefficients are integers and all arithmetic on them is exact; floats
//! enter only at root isolation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{mu_index, q_index};

/// Integer-coefficient univariate polynomial, ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<i64>,
}

impl Polynomial {
    /// Coefficients ascending; trailing zeros trimmed. The zero
    /// polynomial is rejected.
    pub fn new(mut coeffs: Vec<i64>) -> Result<Self> {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter(
                "zero polynomial has no defined degree".into(),
            ));
        }
        Ok(Polynomial { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x + c as f64)
    }

    pub fn derivative(&self) -> Option<Polynomial> {
        if self.degree() == 0 {
            return None;
        }
        let coeffs: Vec<i64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * i as i64)
            .collect();
        Some(Polynomial { coeffs })
    }

    /// Exact difference.
    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs: Vec<i64> = (0..len)
            .map(|i| {
                self.coeffs.get(i).copied().unwrap_or(0) - other.coeffs.get(i).copied().unwrap_or(0)
            })
            .collect();
        Polynomial::new(coeffs)
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 && self.degree() > 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a == 1 => write!(f, "x")?,
                1 => write!(f, "{a}x")?,
                _ if a == 1 => write!(f, "x^{i}")?,
                _ => write!(f, "{a}x^{i}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// x^3 - (n+3)x^2 + 3nx - 4k: its largest root is the q-index of the
/// extremal k-cyclic graph of order n.
pub fn poly_fk(n: usize, k: usize) -> Result<Polynomial> {
    if k < 1 || n < 2 * k + 1 {
        return Err(Error::InvalidParameter(format!(
            "cubic family needs k >= 1 and n >= 2k+1, got n={n}, k={k}"
        )));
    }
    let (n, k) = (n as i64, k as i64);
    Polynomial::new(vec![-4 * k, 3 * n, -(n + 3), 1])
}

/// Quintic whose largest root is the q-index of the rank-2 unicyclic
/// graph (detached vertex on a triangle vertex).
pub fn poly_f2(n: usize) -> Result<Polynomial> {
    if n < 6 {
        return Err(Error::InvalidParameter(format!(
            "quintic family needs n >= 6, got {n}"
        )));
    }
    let n = n as i64;
    Polynomial::new(vec![-4, 3 * n + 8, -(9 * n - 1), 6 * n + 3, -(n + 5), 1])
}

/// Quintic whose largest root is the q-index of the rank-3 unicyclic
/// graph (detached vertex on a pendant neighbor of the hub).
pub fn poly_f3(n: usize) -> Result<Polynomial> {
    if n < 6 {
        return Err(Error::InvalidParameter(format!(
            "quintic family needs n >= 6, got {n}"
        )));
    }
    let n = n as i64;
    Polynomial::new(vec![-4, 3 * n + 12, -(10 * n - 2), 6 * n + 4, -(n + 5), 1])
}

/// Largest real root in (lo, hi]: sign-scan from hi downward in 1024
/// steps, bisect the first bracket, then two Newton polish steps.
pub fn largest_real_root(p: &Polynomial, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if lo.is_nan() || hi.is_nan() || tol.is_nan() || lo >= hi || tol <= 0.0 {
        return Err(Error::Precondition(format!(
            "need lo < hi and tol > 0, got lo={lo}, hi={hi}, tol={tol}"
        )));
    }
    let steps = 1024;
    let step = (hi - lo) / steps as f64;
    let mut x_hi = hi;
    let mut f_hi = p.eval(hi);
    if f_hi == 0.0 {
        return Ok(hi);
    }
    for i in 1..=steps {
        let x = if i == steps { lo } else { hi - i as f64 * step };
        let fx = p.eval(x);
        if fx == 0.0 {
            // landed on a root; it is the largest in (lo, x_hi]
            return Ok(polish(p, x, tol));
        }
        if fx.signum() != f_hi.signum() {
            let root = bisect(p, x, x_hi, tol);
            return Ok(polish(p, root, tol));
        }
        x_hi = x;
        f_hi = fx;
    }
    Err(Error::NoRoot { lo, hi })
}

fn bisect(p: &Polynomial, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut f_lo = p.eval(lo);
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = p.eval(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn polish(p: &Polynomial, mut x: f64, tol: f64) -> f64 {
    if let Some(d) = p.derivative() {
        for _ in 0..2 {
            let fx = p.eval(x);
            let dx = d.eval(x);
            if dx.abs() > f64::EPSILON {
                let next = x - fx / dx;
                if (next - x).abs() <= tol.max(1e-15) * 16.0 {
                    x = next;
                }
            }
        }
    }
    x
}

/// Degree-based upper bound for the q-index: max over vertices of
/// d(u) + (1/d(u)) * sum of neighbor degrees. For connected graphs the
/// bound is attained exactly by regular and semiregular bipartite graphs.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub bound_name: String,
    pub value: f64,
    pub achieving_vertex: Option<usize>,
    pub equality_class: EqualityClass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EqualityClass {
    Regular,
    SemiregularBipartite,
    Star,
    DominatingVertex,
    None,
}

impl std::fmt::Display for EqualityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            EqualityClass::Regular => "regular",
            EqualityClass::SemiregularBipartite => "semiregular-bipartite",
            EqualityClass::Star => "star",
            EqualityClass::DominatingVertex => "dominating-vertex",
            EqualityClass::None => "none",
        };
        write!(f, "{s}")
    }
}

pub fn merris_bound(g: &Graph) -> Result<BoundReport> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    if g.min_degree() == 0 {
        return Err(Error::InvalidParameter(
            "bound undefined with isolated vertices".into(),
        ));
    }
    let mut best = f64::NEG_INFINITY;
    let mut best_vertex = 0;
    for u in 0..g.n() {
        let d = g.degree(u) as f64;
        let s: usize = g.neighbors(u).iter().map(|&v| g.degree(v)).sum();
        let val = d + s as f64 / d;
        if val > best {
            best = val;
            best_vertex = u;
        }
    }
    Ok(BoundReport {
        bound_name: "degree-mean".into(),
        value: best,
        achieving_vertex: Some(best_vertex),
        equality_class: structural_equality_class(g),
    })
}

/// Structural classification backing the bound's equality condition:
/// all degrees equal, or bipartite with constant degree on each side.
/// Exact for connected graphs.
fn structural_equality_class(g: &Graph) -> EqualityClass {
    let degs: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    if degs.windows(2).all(|w| w[0] == w[1]) {
        return EqualityClass::Regular;
    }
    if let Some(color) = g.bipartition() {
        let side = |c: u8| degs.iter().zip(&color).filter(move |(_, &cc)| cc == c);
        let const_side = |c: u8| {
            let mut it = side(c).map(|(&d, _)| d);
            match it.next() {
                None => true,
                Some(first) => it.all(|d| d == first),
            }
        };
        if const_side(0) && const_side(1) {
            return EqualityClass::SemiregularBipartite;
        }
    }
    EqualityClass::None
}

/// Both lower bounds q >= Delta+1 and mu >= Delta+1 with their equality
/// classifications: q attains the bound exactly on stars, mu exactly when
/// some vertex dominates (Delta = n-1).
#[derive(Clone, Debug, Serialize)]
pub struct DeltaPlusOneReport {
    pub q: f64,
    pub mu: f64,
    pub delta: usize,
    pub q_lower_ok: bool,
    pub mu_lower_ok: bool,
    pub q_equality: bool,
    pub mu_equality: bool,
    pub is_star: bool,
    pub has_dominating_vertex: bool,
}

/// Numerical-equality margin for the Delta+1 classifications.
pub const EQUALITY_EPS: f64 = 1e-9;

pub fn delta_plus_one_check(g: &Graph) -> Result<DeltaPlusOneReport> {
    if !g.is_connected() || g.m() == 0 {
        return Err(Error::Precondition(
            "bound check needs a connected graph with at least one edge".into(),
        ));
    }
    let q = q_index(g)?;
    let mu = mu_index(g)?;
    let delta = g.max_degree();
    let target = (delta + 1) as f64;
    let is_star = g.max_degree() == g.n() - 1 && g.m() == g.n() - 1;
    Ok(DeltaPlusOneReport {
        q,
        mu,
        delta,
        q_lower_ok: q >= target - EQUALITY_EPS,
        mu_lower_ok: mu >= target - EQUALITY_EPS,
        q_equality: (q - target).abs() <= EQUALITY_EPS,
        mu_equality: (mu - target).abs() <= EQUALITY_EPS,
        is_star,
        has_dominating_vertex: delta == g.n() - 1,
    })
}

/// Maximum q-index over all C4-free k-cyclic graphs of order n: the
/// largest root of the (n, k) cubic, bracketed in (n, 2(n-1)].
pub fn kcyclic_q_bound(n: usize, k: usize) -> Result<f64> {
    if k < 1 || n < 2 * k + 2 {
        return Err(Error::InvalidParameter(format!(
            "bound defined for k >= 1 and n >= 2k+2, got n={n}, k={k}"
        )));
    }
    let p = poly_fk(n, k)?;
    largest_real_root(&p, n as f64, 2.0 * (n as f64 - 1.0), 1e-12)
}
