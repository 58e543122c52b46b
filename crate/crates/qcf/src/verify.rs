//! Claim-level verification: exhaustive reproduction of the extremal
//! ordering results over enumerated classes, identification of the
//! runner-up graphs against their polynomials, and randomized property
//! checks for the edge-shift monotonicity lemma.
//!
//! Every report carries enough witness data (graph6 strings, canonical
//! keys, index values, margins) to recompute its verdict independently.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{
    delta_plus_one_check, kcyclic_q_bound, largest_real_root, merris_bound, poly_f2, poly_f3,
    poly_fk, EqualityClass,
};
use crate::canon::canonical_form;
use crate::enumerate::{
    enumerate, enumerate_all_connected, rank_by_index, EnumResult, EnumSpec, IndexKind,
    DEFAULT_ENUM_CEILING,
};
use crate::error::{Error, Result};
use crate::g6;
use crate::graph::{bicyclic_delta_n2, extremal_kcyclic, unicyclic_delta_n2, Graph, Variant};
use crate::spectral::{mu_index, perron_vector, q_index, quotient_matrix, edge_shift};
use crate::spectral;

/// Margin separating the indices of distinct graphs; results closer than
/// this flag the report instead of passing or failing it.
pub const STRICT_MARGIN: f64 = 1e-8;
/// Agreement tolerance between an eigenvalue and a polynomial root.
pub const ROOT_MATCH: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Flagged,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
            Status::Flagged => write!(f, "flagged"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: Value,
    pub status: Status,
    pub witnesses: Value,
    pub seconds: f64,
}

impl VerificationReport {
    fn new(claim: &str, params: Value) -> Self {
        VerificationReport {
            claim: claim.into(),
            params,
            status: Status::Pass,
            witnesses: Value::Null,
            seconds: 0.0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }
}

fn downgrade(status: &mut Status, to: Status) {
    // fail dominates flagged dominates pass
    *status = match (*status, to) {
        (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
        (Status::Flagged, _) | (_, Status::Flagged) => Status::Flagged,
        _ => Status::Pass,
    };
}

fn graph_witness(g: &Graph) -> Result<Value> {
    Ok(json!({
        "g6": g6::encode(g)?,
        "canonical": canonical_form(g)?.to_hex(),
        "n": g.n(),
        "m": g.m(),
        "max_degree": g.max_degree(),
    }))
}

/// Maximizer claim for C4-free k-cyclic graphs: the enumerated class has
/// a unique q-maximizer isomorphic to the hub construction, its index
/// matches the cubic's largest root, and the runner-up trails strictly.
pub fn verify_thm31(n: usize, k: usize, ceiling: usize) -> Result<VerificationReport> {
    let start = std::time::Instant::now();
    if !(1..=3).contains(&k) {
        return Err(Error::Precondition(format!("k must be 1..=3, got {k}")));
    }
    if n < 2 * k + 2 {
        return Err(Error::Precondition(format!(
            "need n >= 2k+2 = {}, got n = {n}",
            2 * k + 2
        )));
    }
    let mut report = VerificationReport::new("thm3.1", json!({"n": n, "k": k}));

    let class = enumerate(&EnumSpec::new(n, k)?.c4_free(true).ceiling(ceiling))?;
    let ranking = rank_by_index(&class, IndexKind::Q, class.count().max(1))?;
    if !ranking.failures.is_empty() {
        return Err(Error::Numerical(format!(
            "{} eigensolver failures during ranking",
            ranking.failures.len()
        )));
    }
    if ranking.entries.is_empty() {
        report.status = Status::Fail;
        report.witnesses = json!({"error": "class is empty"});
        report.seconds = start.elapsed().as_secs_f64();
        return Ok(report);
    }

    let expected = extremal_kcyclic(n, k)?;
    let expected_key = canonical_form(&expected)?;
    let construction_q = q_index(&expected)?;
    let bound_root = kcyclic_q_bound(n, k)?;

    let (top_graph, top_key, top_q) = &ranking.entries[0];
    let maximizer_ok = *top_key == expected_key;
    let root_ok = (top_q - bound_root).abs() < ROOT_MATCH
        && (construction_q - bound_root).abs() < ROOT_MATCH;
    let margin = ranking.entries.get(1).map(|(_, _, q2)| top_q - q2);

    if !maximizer_ok || !root_ok {
        report.status = Status::Fail;
    } else if let Some(m) = margin {
        if m <= STRICT_MARGIN {
            report.status = Status::Flagged;
        }
    }
    report.witnesses = json!({
        "class_size": class.count(),
        "maximizer": graph_witness(top_graph)?,
        "expected": graph_witness(&expected)?,
        "maximizer_is_expected": maximizer_ok,
        "max_q": top_q,
        "construction_q": construction_q,
        "cubic_root": bound_root,
        "runner_up_q": ranking.entries.get(1).map(|e| e.2),
        "runner_up_margin": margin,
    });
    report.seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Shared machinery for the two top-3 ordering claims.
struct Top3Outcome {
    status: Status,
    witnesses: Value,
}

fn check_top3(
    class: &EnumResult,
    expected_top: &Graph,
    delta_target: usize,
    which: IndexKind,
    expected_roots: Option<(f64, f64)>,
) -> Result<Top3Outcome> {
    let n = expected_top.n();
    let ranking = rank_by_index(class, which, class.count().max(1))?;
    if !ranking.failures.is_empty() {
        return Err(Error::Numerical(format!(
            "{} eigensolver failures during ranking",
            ranking.failures.len()
        )));
    }
    if ranking.entries.len() < 4 {
        return Ok(Top3Outcome {
            status: Status::Fail,
            witnesses: json!({"error": "class too small for a top-3 claim",
                              "class_size": ranking.entries.len()}),
        });
    }
    let mut status = Status::Pass;

    // (a) rank 1 is the hub construction
    let expected_key = canonical_form(expected_top)?;
    let rank1_ok = ranking.entries[0].1 == expected_key;
    if !rank1_ok {
        downgrade(&mut status, Status::Fail);
    }

    // (b) the max-degree-(n-2) subclass has exactly two members matching
    // ranks 2-3; any other count flags the report rather than deciding
    let delta_class: Vec<&crate::canon::CanonicalForm> = class
        .iter()
        .filter(|(g, _)| g.max_degree() == delta_target)
        .map(|(_, k)| k)
        .collect();
    let delta_count_ok = delta_class.len() == 2;
    let ranks23: Vec<&crate::canon::CanonicalForm> =
        vec![&ranking.entries[1].1, &ranking.entries[2].1];
    let ranks23_are_delta_class = delta_count_ok
        && delta_class.iter().all(|k| ranks23.contains(k));
    if !delta_count_ok {
        downgrade(&mut status, Status::Flagged);
    } else if !ranks23_are_delta_class {
        downgrade(&mut status, Status::Fail);
    }

    // (c) strict ordering with margin down to rank 4
    let q: Vec<f64> = ranking.entries.iter().take(4).map(|e| e.2).collect();
    let margins = [q[0] - q[1], q[1] - q[2], q[2] - q[3]];
    if margins.iter().any(|&m| m <= 0.0) {
        downgrade(&mut status, Status::Fail);
    } else if margins.iter().any(|&m| m <= STRICT_MARGIN) {
        downgrade(&mut status, Status::Flagged);
    }

    // (d) quintic agreement, q-index only
    let mut roots_value = Value::Null;
    if let Some((r2, r3)) = expected_roots {
        let ok2 = (q[1] - r2).abs() < ROOT_MATCH;
        let ok3 = (q[2] - r3).abs() < ROOT_MATCH;
        if !ok2 || !ok3 {
            downgrade(&mut status, Status::Fail);
        }
        roots_value = json!({"rank2_root": r2, "rank3_root": r3,
                             "rank2_matches": ok2, "rank3_matches": ok3});
    }

    let top: Result<Vec<Value>> = ranking
        .entries
        .iter()
        .take(4)
        .map(|(g, _, v)| {
            let mut w = graph_witness(g)?;
            w["index"] = json!(v);
            Ok(w)
        })
        .collect();
    Ok(Top3Outcome {
        status,
        witnesses: json!({
            "index": which.name(),
            "class_size": class.count(),
            "rank1_is_expected": rank1_ok,
            "delta_n2_class_size": delta_class.len(),
            "ranks23_are_delta_class": ranks23_are_delta_class,
            "margins": margins,
            "quintic": roots_value,
            "top": top?,
            "delta_target": delta_target,
            "order": n,
        }),
    })
}

/// Secondary interpretation: the same ordering over the unfiltered
/// class. Reported, never asserted.
fn unfiltered_interpretation(
    n: usize,
    k: usize,
    ceiling: usize,
    expected_keys: &[crate::canon::CanonicalForm],
) -> Result<Value> {
    let class = enumerate(&EnumSpec::new(n, k)?.ceiling(ceiling))?;
    let ranking = rank_by_index(&class, IndexKind::Q, 4)?;
    let got: Vec<&crate::canon::CanonicalForm> = ranking.entries.iter().map(|e| &e.1).collect();
    let holds = got.len() >= expected_keys.len()
        && expected_keys.iter().zip(&got).all(|(a, b)| &a == b);
    let top: Result<Vec<Value>> = ranking
        .entries
        .iter()
        .map(|(g, _, v)| Ok(json!({"g6": g6::encode(g)?, "index": v})))
        .collect();
    Ok(json!({
        "class_size": class.count(),
        "same_top3_and_order": holds,
        "top": top?,
    }))
}

/// Top-3 ordering among C4-free unicyclic graphs, with the quintic root
/// identities for ranks 2 and 3.
pub fn verify_thm32(n: usize, ceiling: usize) -> Result<VerificationReport> {
    let start = std::time::Instant::now();
    if n < 6 {
        return Err(Error::Precondition(format!("need n >= 6, got {n}")));
    }
    let mut report = VerificationReport::new("thm3.2", json!({"n": n}));
    let class = enumerate(&EnumSpec::new(n, 1)?.c4_free(true).ceiling(ceiling))?;
    let r2 = largest_real_root(&poly_f2(n)?, (n - 1) as f64, 2.0 * (n as f64 - 1.0), 1e-12)?;
    let r3 = largest_real_root(&poly_f3(n)?, (n - 1) as f64, 2.0 * (n as f64 - 1.0), 1e-12)?;
    let outcome = check_top3(
        &class,
        &extremal_kcyclic(n, 1)?,
        n - 2,
        IndexKind::Q,
        Some((r2, r3)),
    )?;
    report.status = outcome.status;
    report.witnesses = outcome.witnesses;

    // the claim read over all unicyclic graphs, reported alongside
    let top3_keys: Vec<crate::canon::CanonicalForm> = {
        let ranking = rank_by_index(&class, IndexKind::Q, 3)?;
        ranking.entries.into_iter().map(|e| e.1).collect()
    };
    report.witnesses["all_unicyclic"] = unfiltered_interpretation(n, 1, ceiling, &top3_keys)?;
    report.seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Top-3 ordering among C4-free bicyclic graphs, including the edge-shift
/// identity between ranks 3 and 2.
///
/// The claim is stated for n >= 8. Order 7 is accepted as a probe: it
/// runs the same checks but reports at worst `flagged`, since the claim
/// makes no promise there.
pub fn verify_thm33(n: usize, ceiling: usize) -> Result<VerificationReport> {
    let start = std::time::Instant::now();
    if n < 7 {
        return Err(Error::Precondition(format!("need n >= 7, got {n}")));
    }
    let mut report = VerificationReport::new("thm3.3", json!({"n": n}));
    let class = enumerate(&EnumSpec::new(n, 2)?.c4_free(true).ceiling(ceiling))?;
    let outcome = check_top3(&class, &extremal_kcyclic(n, 2)?, n - 2, IndexKind::Q, None)?;
    report.status = outcome.status;
    report.witnesses = outcome.witnesses;

    // (e) a single valid shift maps the rank-3 graph onto rank 2
    let ranking = rank_by_index(&class, IndexKind::Q, 3)?;
    if ranking.entries.len() == 3 {
        let rank2_key = &ranking.entries[1].1;
        let rank3 = &ranking.entries[2].0;
        match find_raising_shift(rank3, rank2_key)? {
            Some(w) => {
                report.witnesses["shift_rank3_to_rank2"] = json!(w);
            }
            None => {
                downgrade(&mut report.status, Status::Fail);
                report.witnesses["shift_rank3_to_rank2"] = json!("no valid shift found");
            }
        }
    }
    let top3_keys: Vec<crate::canon::CanonicalForm> =
        ranking.entries.into_iter().map(|e| e.1).collect();
    report.witnesses["all_bicyclic"] = unfiltered_interpretation(n, 2, ceiling, &top3_keys)?;
    if n == 7 {
        report.witnesses["below_stated_range"] = json!(true);
        if report.status == Status::Fail {
            report.status = Status::Flagged;
        }
    }
    report.seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ShiftWitness {
    pub u: usize,
    pub v: usize,
    pub target: usize,
    pub perron_u: f64,
    pub perron_v: f64,
}

/// Search for a single-target shift on `g`, valid under the edge-shift
/// preconditions and the Perron ordering x_u >= x_v, whose result is
/// isomorphic to `wanted`.
fn find_raising_shift(
    g: &Graph,
    wanted: &crate::canon::CanonicalForm,
) -> Result<Option<ShiftWitness>> {
    let perron = perron_vector(g)?;
    for v in 0..g.n() {
        for u in 0..g.n() {
            if u == v || perron.vector[u] < perron.vector[v] {
                continue;
            }
            for &t in g.neighbors(v) {
                if t == u || g.has_edge(u, t) {
                    continue;
                }
                let shifted = edge_shift(g, u, v, &[t])?;
                if !shifted.is_connected() {
                    continue;
                }
                if canonical_form(&shifted)? == *wanted {
                    return Ok(Some(ShiftWitness {
                        u,
                        v,
                        target: t,
                        perron_u: perron.vector[u],
                        perron_v: perron.vector[v],
                    }));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct UnicyclicAssignment {
    pub g2: Variant,
    pub g3: Variant,
    pub q_a: f64,
    pub q_b: f64,
    pub root_f2: f64,
    pub root_f3: f64,
}

/// Assign the two max-degree-(n-2) unicyclic variants to their quintics
/// by eigenvalue match; errors unless the assignment is a bijection.
pub fn identify_g2_g3(n: usize) -> Result<UnicyclicAssignment> {
    if n < 6 {
        return Err(Error::Precondition(format!("need n >= 6, got {n}")));
    }
    let q_a = q_index(&unicyclic_delta_n2(n, Variant::A)?)?;
    let q_b = q_index(&unicyclic_delta_n2(n, Variant::B)?)?;
    let lo = (n - 1) as f64;
    let hi = 2.0 * (n as f64 - 1.0);
    let root_f2 = largest_real_root(&poly_f2(n)?, lo, hi, 1e-12)?;
    let root_f3 = largest_real_root(&poly_f3(n)?, lo, hi, 1e-12)?;

    let matches = |val: f64, root: f64| (val - root).abs() < ROOT_MATCH;
    let assignment = match (
        matches(q_a, root_f2),
        matches(q_b, root_f2),
        matches(q_a, root_f3),
        matches(q_b, root_f3),
    ) {
        (true, false, false, true) => (Variant::A, Variant::B),
        (false, true, true, false) => (Variant::B, Variant::A),
        _ => {
            return Err(Error::Identification(format!(
                "no unambiguous variant assignment at n={n}: \
                 q_A={q_a:.12}, q_B={q_b:.12}, root_f2={root_f2:.12}, root_f3={root_f3:.12}"
            )))
        }
    };
    Ok(UnicyclicAssignment {
        g2: assignment.0,
        g3: assignment.1,
        q_a,
        q_b,
        root_f2,
        root_f3,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BicyclicAssignment {
    pub g5: Variant,
    pub g6: Variant,
    pub q_g5: f64,
    pub q_g6: f64,
    pub shift: ShiftWitness,
}

/// Order the two max-degree-(n-2) bicyclic variants by q-index and
/// exhibit the raising shift from the smaller onto the larger.
pub fn identify_g5_g6(n: usize) -> Result<BicyclicAssignment> {
    if n < 8 {
        return Err(Error::Precondition(format!("need n >= 8, got {n}")));
    }
    let ga = bicyclic_delta_n2(n, Variant::A)?;
    let gb = bicyclic_delta_n2(n, Variant::B)?;
    let q_a = q_index(&ga)?;
    let q_b = q_index(&gb)?;
    if (q_a - q_b).abs() <= 1e-10 {
        return Err(Error::Identification(format!(
            "variant indices coincide at n={n}: q_A={q_a:.14}, q_B={q_b:.14}"
        )));
    }
    let (g5v, g6v, q5, q6, smaller) = if q_a > q_b {
        (Variant::A, Variant::B, q_a, q_b, &gb)
    } else {
        (Variant::B, Variant::A, q_b, q_a, &ga)
    };
    let larger_key = canonical_form(if q_a > q_b { &ga } else { &gb })?;
    let shift = find_raising_shift(smaller, &larger_key)?.ok_or_else(|| {
        Error::Identification(format!(
            "no raising shift maps the smaller variant onto the larger at n={n}"
        ))
    })?;
    Ok(BicyclicAssignment {
        g5: g5v,
        g6: g6v,
        q_g5: q5,
        q_g6: q6,
        shift,
    })
}

/// Randomized monotonicity suite for the edge shift: on seeded random
/// connected graphs, any valid shift toward the heavier Perron endpoint
/// strictly increases q.
pub fn verify_lemma21_random(
    trials: usize,
    n_lo: usize,
    n_hi: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let start = std::time::Instant::now();
    if trials < 1 {
        return Err(Error::Precondition("need at least one trial".into()));
    }
    if n_lo < 3 || n_hi < n_lo {
        return Err(Error::Precondition(format!(
            "need 3 <= n_lo <= n_hi, got [{n_lo}, {n_hi}]"
        )));
    }
    let mut report = VerificationReport::new(
        "lem2.1",
        json!({"trials": trials, "n_range": [n_lo, n_hi], "seed": seed}),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut performed = 0usize;
    let mut skipped = 0usize;
    let mut min_increase = f64::INFINITY;
    let mut violations: Vec<Value> = Vec::new();

    for _ in 0..trials {
        let n = rng.gen_range(n_lo..=n_hi);
        let g = match random_connected(&mut rng, n, 0.4) {
            Some(g) => g,
            None => {
                skipped += 1;
                continue;
            }
        };
        let perron = perron_vector(&g)?;
        let mut done = false;
        'attempts: for _ in 0..20 {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a == b {
                continue;
            }
            let (u, v) = if perron.vector[a] >= perron.vector[b] {
                (a, b)
            } else {
                (b, a)
            };
            let pool: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&t| t != u && !g.has_edge(u, t))
                .collect();
            if pool.is_empty() {
                continue;
            }
            for _ in 0..5 {
                let size = rng.gen_range(1..=pool.len());
                let mut shuffled = pool.clone();
                shuffled.shuffle(&mut rng);
                let targets = &shuffled[..size];
                let shifted = edge_shift(&g, u, v, targets)?;
                if !shifted.is_connected() {
                    continue;
                }
                let q0 = q_index(&g)?;
                let q1 = q_index(&shifted)?;
                performed += 1;
                let inc = q1 - q0;
                if inc < min_increase {
                    min_increase = inc;
                }
                if inc <= 1e-10 {
                    violations.push(json!({
                        "graph": g6::encode(&g)?,
                        "u": u, "v": v, "targets": targets,
                        "q_before": q0, "q_after": q1,
                    }));
                }
                done = true;
                break 'attempts;
            }
        }
        if !done {
            skipped += 1;
        }
    }

    if !violations.is_empty() {
        report.status = Status::Fail;
    }
    report.witnesses = json!({
        "performed": performed,
        "skipped": skipped,
        "min_increase": if performed > 0 { json!(min_increase) } else { Value::Null },
        "violations": violations,
    });
    report.seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Option<Graph> {
    for _ in 0..200 {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).expect("fresh edge");
                }
            }
        }
        if g.is_connected() {
            return Some(g);
        }
    }
    None
}

/// Corpus scan over every connected graph up to `n_max` vertices: the
/// degree-mean upper bound with its equality classes, both Delta+1 lower
/// bounds with theirs, and the C4-free neighbor-degree-sum inequality.
/// Returns one report per claim: lem2.2, lem2.3, proof3.1-edgecount.
pub fn verify_bounds_corpus(n_max: usize, ceiling: usize) -> Result<Vec<VerificationReport>> {
    let start = std::time::Instant::now();
    if n_max > 8 {
        return Err(Error::Precondition(format!(
            "corpus scan is for n_max <= 8, got {n_max}"
        )));
    }
    let mut corpus: Vec<Graph> = Vec::new();
    for n in 2..=n_max {
        corpus.extend(enumerate_all_connected(n, ceiling)?);
    }

    struct Row {
        q: f64,
        bound: f64,
        class: EqualityClass,
        dp: crate::bounds::DeltaPlusOneReport,
        c4_free: bool,
        edgesum_ok: bool,
        edgesum_slack: Option<i64>,
        g6: String,
    }
    let rows: Result<Vec<Row>> = corpus
        .par_iter()
        .map(|g| {
            let mb = merris_bound(g)?;
            let dp = delta_plus_one_check(g)?;
            let c4 = g.is_c4_free();
            let mut ok = true;
            let mut slack: Option<i64> = None;
            if c4 {
                for w in 0..g.n() {
                    if g.degree(w) < 2 {
                        continue;
                    }
                    let s: usize = g.neighbors(w).iter().map(|&i| g.degree(i)).sum();
                    let cap = g.degree(w) + g.n() - 1;
                    let sl = cap as i64 - s as i64;
                    if sl < 0 {
                        ok = false;
                    }
                    slack = Some(slack.map_or(sl, |old| old.min(sl)));
                }
            }
            Ok(Row {
                q: dp.q,
                bound: mb.value,
                class: mb.equality_class,
                dp,
                c4_free: c4,
                edgesum_ok: ok,
                edgesum_slack: slack,
                g6: g6::encode(g)?,
            })
        })
        .collect();
    let rows = rows?;

    const EPS: f64 = 1e-9;
    let mut lem22 = VerificationReport::new("lem2.2", json!({"n_max": n_max}));
    let mut lem23 = VerificationReport::new("lem2.3", json!({"n_max": n_max}));
    let mut edgesum = VerificationReport::new("proof3.1-edgecount", json!({"n_max": n_max}));

    let mut violations22 = Vec::new();
    let mut equality22 = 0usize;
    for r in &rows {
        let holds = r.q <= r.bound + EPS;
        let numeric_eq = (r.q - r.bound).abs() <= EPS;
        let structural_eq = r.class != EqualityClass::None;
        if numeric_eq {
            equality22 += 1;
        }
        if !holds || numeric_eq != structural_eq {
            violations22.push(json!({
                "g6": r.g6, "q": r.q, "bound": r.bound,
                "class": format!("{}", r.class),
            }));
        }
    }
    lem22.status = if violations22.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    lem22.witnesses = json!({
        "corpus_size": rows.len(),
        "equality_instances": equality22,
        "violations": violations22,
    });

    let mut violations23 = Vec::new();
    for r in &rows {
        let q_eq_ok = r.dp.q_equality == r.dp.is_star;
        let mu_eq_ok = r.dp.mu_equality == r.dp.has_dominating_vertex;
        if !r.dp.q_lower_ok || !r.dp.mu_lower_ok || !q_eq_ok || !mu_eq_ok {
            violations23.push(json!({
                "g6": r.g6, "q": r.dp.q, "mu": r.dp.mu, "delta": r.dp.delta,
                "is_star": r.dp.is_star,
                "has_dominating_vertex": r.dp.has_dominating_vertex,
            }));
        }
    }
    lem23.status = if violations23.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    lem23.witnesses = json!({
        "corpus_size": rows.len(),
        "violations": violations23,
    });

    let mut violations_e = Vec::new();
    let mut tight: Option<Value> = None;
    let mut c4_count = 0usize;
    for r in &rows {
        if !r.c4_free {
            continue;
        }
        c4_count += 1;
        if !r.edgesum_ok {
            violations_e.push(json!({"g6": r.g6}));
        }
        if r.edgesum_slack == Some(0) && tight.is_none() {
            tight = Some(json!({"g6": r.g6}));
        }
    }
    edgesum.status = if violations_e.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    edgesum.witnesses = json!({
        "c4_free_corpus_size": c4_count,
        "violations": violations_e,
        "tight_witness": tight,
    });

    let elapsed = start.elapsed().as_secs_f64();
    lem22.seconds = elapsed;
    lem23.seconds = elapsed;
    edgesum.seconds = elapsed;
    Ok(vec![lem22, lem23, edgesum])
}

/// Three-way agreement between construction eigenvalues, equitable
/// quotients and the polynomial families, plus the quintic
/// identification sweep.
pub fn verify_lemma24(orders: &[usize], identify_to: usize) -> Result<VerificationReport> {
    let start = std::time::Instant::now();
    let mut report = VerificationReport::new(
        "lem2.4",
        json!({"orders": orders, "identify_to": identify_to}),
    );
    let mut checks = Vec::new();
    let mut ok = true;

    for &n in orders {
        let mut ks = vec![1usize, 2];
        if n >= 4 {
            ks.push((n - 2) / 2);
        }
        ks.dedup();
        for k in ks {
            if n < 2 * k + 2 {
                continue;
            }
            let g = extremal_kcyclic(n, k)?;
            let q = q_index(&g)?;
            let root = kcyclic_q_bound(n, k)?;
            let quotient = quotient_matrix(&g, &spectral::extremal_partition(n, k))?;
            let quotient_value = quotient.dominant_value(spectral::DEFAULT_TOL)?;
            let cubic = poly_fk(n, k)?;
            let char_poly_matches = quotient
                .char_poly()
                .iter()
                .zip(cubic.coeffs())
                .all(|(a, &b)| (a - b as f64).abs() < 1e-6);
            let agree = (q - root).abs() < ROOT_MATCH
                && (quotient_value - root).abs() < ROOT_MATCH
                && char_poly_matches;
            if !agree {
                ok = false;
            }
            checks.push(json!({
                "n": n, "k": k, "q": q, "root": root,
                "quotient_value": quotient_value,
                "char_poly_matches_cubic": char_poly_matches,
                "agree": agree,
            }));
        }
    }

    let mut assignments = Vec::new();
    let mut stable = true;
    let mut first: Option<(Variant, Variant)> = None;
    for n in 6..=identify_to {
        match identify_g2_g3(n) {
            Ok(a) => {
                if let Some((g2, g3)) = first {
                    if a.g2 != g2 || a.g3 != g3 {
                        stable = false;
                    }
                } else {
                    first = Some((a.g2, a.g3));
                }
                // the rank-2 quintic root must dominate the rank-3 one
                if a.root_f2 <= a.root_f3 {
                    ok = false;
                }
                assignments.push(json!({"n": n, "g2": a.g2, "g3": a.g3,
                                        "root_f2": a.root_f2, "root_f3": a.root_f3}));
            }
            Err(e) => {
                ok = false;
                assignments.push(json!({"n": n, "error": e.to_string()}));
            }
        }
    }
    if !stable {
        ok = false;
    }

    report.status = if ok { Status::Pass } else { Status::Fail };
    report.witnesses = json!({
        "construction_checks": checks,
        "variant_assignments": assignments,
        "assignment_stable": stable,
    });
    report.seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// The Laplacian-index versions of the three ordering claims, plus the
/// mu <= q comparison corpus: bipartite equality, strict gap otherwise,
/// exact agreement on trees.
pub fn verify_remark34(n_max: usize, ceiling: usize) -> Result<VerificationReport> {
    let start = std::time::Instant::now();
    if n_max < 6 {
        return Err(Error::Precondition(format!("need n_max >= 6, got {n_max}")));
    }
    let mut report = VerificationReport::new("rem3.4", json!({"n_max": n_max}));
    let mut ok = true;
    let mut flagged = false;

    // mu-variant of the maximizer claim: identity, margin, and the exact
    // value n attained because the hub dominates
    let mut mu31 = Vec::new();
    for k in 1..=3usize {
        for n in (2 * k + 2)..=n_max.min(DEFAULT_ENUM_CEILING.max(ceiling)) {
            if n > ceiling {
                continue;
            }
            let class = enumerate(&EnumSpec::new(n, k)?.c4_free(true).ceiling(ceiling))?;
            if class.count() == 0 {
                continue;
            }
            let ranking = rank_by_index(&class, IndexKind::Mu, class.count())?;
            let expected_key = canonical_form(&extremal_kcyclic(n, k)?)?;
            let identity = ranking.entries[0].1 == expected_key;
            let value_is_n = (ranking.entries[0].2 - n as f64).abs() < 1e-8;
            let margin = ranking.entries.get(1).map(|e| ranking.entries[0].2 - e.2);
            if !identity || !value_is_n {
                ok = false;
            }
            if let Some(m) = margin {
                if m <= STRICT_MARGIN {
                    flagged = true;
                }
            }
            mu31.push(json!({"n": n, "k": k, "maximizer_is_expected": identity,
                             "mu_max": ranking.entries[0].2, "margin": margin}));
        }
    }

    // mu-variants of the two ordering claims: same classes, same order
    let mut mu_orderings = Vec::new();
    for (k, n_start) in [(1usize, 6usize), (2, 8)] {
        for n in n_start..=n_max {
            if n > ceiling {
                continue;
            }
            let class = enumerate(&EnumSpec::new(n, k)?.c4_free(true).ceiling(ceiling))?;
            let outcome = check_top3(&class, &extremal_kcyclic(n, k)?, n - 2, IndexKind::Mu, None)?;
            match outcome.status {
                Status::Fail => ok = false,
                Status::Flagged => flagged = true,
                Status::Pass => {}
            }
            // the mu and q orderings must pick the same top-3 classes
            let mu_rank = rank_by_index(&class, IndexKind::Mu, 3)?;
            let q_rank = rank_by_index(&class, IndexKind::Q, 3)?;
            let same_classes = mu_rank
                .entries
                .iter()
                .zip(&q_rank.entries)
                .all(|(a, b)| a.1 == b.1);
            if !same_classes {
                ok = false;
            }
            mu_orderings.push(json!({"n": n, "k": k,
                                     "status": format!("{}", outcome.status),
                                     "same_top3_as_q": same_classes}));
        }
    }

    // comparison corpus
    let mut comparison = json!({});
    {
        const EPS: f64 = 1e-9;
        let mut violations = Vec::new();
        let mut checked = 0usize;
        for n in 2..=n_max.min(7) {
            for g in enumerate_all_connected(n, ceiling)? {
                let q = q_index(&g)?;
                let mu = mu_index(&g)?;
                checked += 1;
                let bip = g.is_bipartite();
                let le_ok = mu <= q + EPS;
                let eq_ok = if bip {
                    (mu - q).abs() <= EPS
                } else {
                    mu < q - 1e-6
                };
                if !le_ok || !eq_ok {
                    violations.push(json!({"g6": g6::encode(&g)?, "q": q, "mu": mu,
                                           "bipartite": bip}));
                }
            }
        }
        // trees up to order 9 are bipartite: indices agree exactly
        let mut tree_checked = 0usize;
        for n in 2..=9usize {
            let spec = EnumSpec::new(n.max(3), 0)?.ceiling(ceiling.max(9));
            let trees: Vec<Graph> = if n < 3 {
                vec![Graph::from_edges(2, &[(0, 1)]).unwrap()]
            } else {
                enumerate(&spec)?.graphs().to_vec()
            };
            for t in trees {
                let q = q_index(&t)?;
                let mu = mu_index(&t)?;
                tree_checked += 1;
                if (mu - q).abs() > EPS {
                    violations.push(json!({"g6": g6::encode(&t)?, "q": q, "mu": mu,
                                           "tree": true}));
                }
            }
        }
        if !violations.is_empty() {
            ok = false;
        }
        comparison = json!({"connected_checked": checked,
                            "trees_checked": tree_checked,
                            "violations": violations});
    }

    report.status = if !ok {
        Status::Fail
    } else if flagged {
        Status::Flagged
    } else {
        Status::Pass
    };
    report.witnesses = json!({
        "mu_maximizer": mu31,
        "mu_orderings": mu_orderings,
        "mu_vs_q": comparison,
    });
    report.seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Positivity of the cubic difference between the two quintics on the
/// interval that the ordering argument uses.
pub fn verify_f_positivity(n_lo: usize, n_hi: usize, samples: usize) -> Result<VerificationReport> {
    let start = std::time::Instant::now();
    let mut report = VerificationReport::new(
        "proof3.2-F",
        json!({"n_range": [n_lo, n_hi], "samples": samples}),
    );
    let mut violations = Vec::new();
    for n in n_lo..=n_hi {
        let f2 = poly_f2(n)?;
        let f3 = poly_f3(n)?;
        let diff = f3.sub(&f2)?;
        // sample (n-1, 2n], endpoint included
        let lo = (n - 1) as f64;
        let hi = 2.0 * n as f64;
        for i in 1..=samples {
            let x = lo + (hi - lo) * i as f64 / samples as f64;
            let val = diff.eval(x);
            if val <= 0.0 {
                violations.push(json!({"n": n, "x": x, "value": val}));
            }
        }
    }
    if !violations.is_empty() {
        report.status = Status::Fail;
    }
    report.witnesses = json!({
        "checked": (n_hi - n_lo + 1) * samples,
        "violations": violations,
    });
    report.seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// One CSV row per graph: canonical key, graph6, order, size, max degree,
/// both indices, the degree-mean bound. Rows sorted by canonical key.
pub fn corpus_csv(graphs: &[Graph]) -> Result<String> {
    let mut rows: Vec<(String, String)> = graphs
        .iter()
        .map(|g| {
            let key = canonical_form(g)?.to_hex();
            let row = format!(
                "{},{},{},{},{},{:.12},{:.12},{:.12}",
                key,
                g6::encode(g)?,
                g.n(),
                g.m(),
                g.max_degree(),
                q_index(g)?,
                mu_index(g)?,
                merris_bound(g)?.value,
            );
            Ok((key, row))
        })
        .collect::<Result<_>>()?;
    rows.sort();
    let mut out = String::from("canonical,g6,n,m,max_degree,q,mu,degree_mean_bound\n");
    for (_, row) in rows {
        out.push_str(&row);
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CEIL: usize = 10;

    #[test]
    fn thm31_small_orders() {
        let r = verify_thm31(6, 1, CEIL).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!((r.witnesses["max_q"].as_f64().unwrap() - 6.20147233821924).abs() < 1e-8);

        let r = verify_thm31(8, 2, CEIL).unwrap();
        assert_eq!(r.status, Status::Pass);

        // n = 5, k = 1 is admissible (2k+2 = 4 <= 5)
        let r = verify_thm31(5, 1, CEIL).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.witnesses["class_size"], 4);

        assert!(verify_thm31(3, 1, CEIL).is_err());
        assert!(verify_thm31(10, 4, CEIL).is_err());
    }

    #[test]
    fn thm32_n6() {
        let r = verify_thm32(6, CEIL).unwrap();
        assert_eq!(r.status, Status::Pass, "witnesses: {}", r.witnesses);
        assert_eq!(r.witnesses["class_size"], 9);
        assert_eq!(r.witnesses["delta_n2_class_size"], 2);
        // rank-2 value is the largest root of the first quintic
        let top = r.witnesses["top"].as_array().unwrap();
        assert!((top[1]["index"].as_f64().unwrap() - 5.534418480423).abs() < 1e-8);
        assert!((top[2]["index"].as_f64().unwrap() - 5.383930712141).abs() < 1e-8);
        // the unfiltered reading holds at this order too
        assert_eq!(r.witnesses["all_unicyclic"]["same_top3_and_order"], true);
        assert_eq!(r.witnesses["all_unicyclic"]["class_size"], 13);
    }

    #[test]
    fn thm33_probe_below_range() {
        // order 7 runs as a probe: reported, never a hard failure
        let r = verify_thm33(7, CEIL).unwrap();
        assert_eq!(r.witnesses["below_stated_range"], true);
        assert_ne!(r.status, Status::Fail);
        // observed: the ordering in fact holds one order early
        assert_eq!(r.status, Status::Pass);
        assert!(verify_thm33(6, CEIL).is_err());
    }

    #[test]
    fn thm33_n8() {
        let r = verify_thm33(8, CEIL).unwrap();
        assert_eq!(r.status, Status::Pass, "witnesses: {}", r.witnesses);
        assert_eq!(r.witnesses["class_size"], 66);
        let top = r.witnesses["top"].as_array().unwrap();
        assert!((top[0]["index"].as_f64().unwrap() - 8.188308530625).abs() < 1e-8);
        assert!((top[1]["index"].as_f64().unwrap() - 7.321935856388).abs() < 1e-8);
        assert!((top[2]["index"].as_f64().unwrap() - 7.287095022164).abs() < 1e-8);
        assert!(r.witnesses["shift_rank3_to_rank2"].is_object());
    }

    #[test]
    fn identification() {
        for n in [6, 7, 8, 9] {
            let a = identify_g2_g3(n).unwrap();
            // the triangle-attached variant carries the larger index
            assert_eq!(a.g2, Variant::B, "n={n}");
            assert_eq!(a.g3, Variant::A, "n={n}");
            assert!(a.root_f2 > a.root_f3);
        }
        for n in [8, 9] {
            let a = identify_g5_g6(n).unwrap();
            assert_eq!(a.g5, Variant::B, "n={n}");
            assert_eq!(a.g6, Variant::A, "n={n}");
            assert!(a.q_g5 > a.q_g6 + STRICT_MARGIN);
            assert!(a.shift.perron_u >= a.shift.perron_v);
        }
    }

    #[test]
    fn lemma21_examples() {
        // the path-to-star shift from the 4-vertex path
        let p4 = crate::graph::path(4).unwrap();
        let perron = perron_vector(&p4).unwrap();
        assert!((perron.vector[1] - perron.vector[2]).abs() < 1e-9);
        let shifted = edge_shift(&p4, 1, 2, &[3]).unwrap();
        let inc = q_index(&shifted).unwrap() - q_index(&p4).unwrap();
        assert!((inc - 0.5857864376269).abs() < 1e-9);

        // star center-leaf pair admits no target
        let s5 = crate::graph::star(5).unwrap();
        let pool: Vec<usize> = s5
            .neighbors(1)
            .iter()
            .copied()
            .filter(|&t| t != 0 && !s5.has_edge(0, t))
            .collect();
        assert!(pool.is_empty());

        let r = verify_lemma21_random(50, 5, 8, 42).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.witnesses["performed"].as_u64().unwrap() > 0);
    }

    #[test]
    fn bounds_corpus_small() {
        let reports = verify_bounds_corpus(6, CEIL).unwrap();
        assert_eq!(reports.len(), 3);
        for r in &reports {
            assert_eq!(r.status, Status::Pass, "{}: {}", r.claim, r.witnesses);
        }
        // equality instances exist (regular graphs are in the corpus)
        assert!(reports[0].witnesses["equality_instances"].as_u64().unwrap() > 0);
        // the edge-sum inequality is attained somewhere
        assert!(reports[2].witnesses["tight_witness"].is_object());
    }

    #[test]
    fn lemma24_agreement() {
        let r = verify_lemma24(&[6, 10, 20], 8).unwrap();
        assert_eq!(r.status, Status::Pass, "witnesses: {}", r.witnesses);
        assert_eq!(r.witnesses["assignment_stable"], true);
    }

    #[test]
    fn f_positivity() {
        let r = verify_f_positivity(6, 20, 200).unwrap();
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn remark34_small() {
        let r = verify_remark34(6, 8).unwrap();
        assert_eq!(r.status, Status::Pass, "witnesses: {}", r.witnesses);
    }

    #[test]
    fn csv_export() {
        let gs = vec![
            crate::graph::path(4).unwrap(),
            crate::graph::star(5).unwrap(),
        ];
        let csv = corpus_csv(&gs).unwrap();
        assert!(csv.starts_with("canonical,g6,"));
        assert_eq!(csv.lines().count(), 3);
    }
}
