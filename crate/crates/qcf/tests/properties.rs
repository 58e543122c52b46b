//! Property tests for the structural and numerical invariants.

use proptest::prelude::*;

use qcf::canon::canonical_form;
use qcf::enumerate::{enumerate, EnumSpec};
use qcf::g6;
use qcf::graph::Graph;
use qcf::spectral::{
    dominant_eigenpair, edge_shift, laplacian, mu_index, perron_vector, q_index,
    signless_laplacian, symmetric_spectrum, SymMatrix,
};

/// Random graph on up to 8 vertices from an edge mask.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::bits::u64::between(0, pairs).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask >> idx & 1 == 1 {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn canonical_form_is_relabeling_invariant(g in arb_graph(8), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        // cheap deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (s >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn graph6_roundtrip(g in arb_graph(8)) {
        let enc = g6::encode(&g).unwrap();
        prop_assert_eq!(g6::decode(&enc).unwrap(), g);
    }

    #[test]
    fn residual_contract_on_random_symmetric(dim in 1usize..12, cells in proptest::collection::vec(-1.0f64..1.0, 144)) {
        let mut m = SymMatrix::zeros(dim);
        let mut it = cells.into_iter();
        for i in 0..dim {
            for j in i..dim {
                m.set(i, j, it.next().unwrap());
            }
        }
        let r = dominant_eigenpair(&m, 1e-10).unwrap();
        prop_assert!(r.residual <= 1e-10);
        // the reported value must dominate the whole spectrum
        let spectrum = symmetric_spectrum(&m).unwrap();
        prop_assert!(r.value >= spectrum[spectrum.len() - 1] - 1e-9);
    }

    #[test]
    fn laplacian_indices_are_psd_and_ordered(g in arb_graph(8)) {
        let sq = symmetric_spectrum(&signless_laplacian(&g)).unwrap();
        let sl = symmetric_spectrum(&laplacian(&g)).unwrap();
        prop_assert!(sq[0] >= -1e-10);
        prop_assert!(sl[0] >= -1e-10);
        if g.n() > 0 {
            let q = q_index(&g).unwrap();
            let mu = mu_index(&g).unwrap();
            prop_assert!(mu <= q + 1e-10);
            if g.is_bipartite() {
                prop_assert!((mu - q).abs() <= 1e-9);
            }
        }
    }

    /// Any valid shift toward the heavier Perron endpoint strictly
    /// raises q, provided the result stays connected.
    #[test]
    fn shift_monotonicity(g in arb_graph(8), pick in any::<(u64, u64, u64)>()) {
        if !g.is_connected() || g.n() < 3 {
            return Ok(());
        }
        let n = g.n();
        let perron = perron_vector(&g).unwrap();
        let a = (pick.0 % n as u64) as usize;
        let b = (pick.1 % n as u64) as usize;
        if a == b {
            return Ok(());
        }
        let (u, v) = if perron.vector[a] >= perron.vector[b] { (a, b) } else { (b, a) };
        let pool: Vec<usize> = g.neighbors(v).iter().copied()
            .filter(|&t| t != u && !g.has_edge(u, t))
            .collect();
        if pool.is_empty() {
            return Ok(());
        }
        let t = pool[(pick.2 % pool.len() as u64) as usize];
        let shifted = edge_shift(&g, u, v, &[t]).unwrap();
        if !shifted.is_connected() {
            return Ok(());
        }
        let before = q_index(&g).unwrap();
        let after = q_index(&shifted).unwrap();
        prop_assert!(after > before + 1e-10,
            "shift (u={}, v={}, t={}) did not raise q: {} -> {}", u, v, t, before, after);
    }

    #[test]
    fn enumeration_members_satisfy_spec(n in 4usize..8, k in 0usize..3, c4 in any::<bool>()) {
        let spec = EnumSpec::new(n, k).unwrap().c4_free(c4);
        let result = enumerate(&spec).unwrap();
        for g in result.graphs() {
            prop_assert!(g.is_k_cyclic(k));
            if c4 {
                prop_assert!(g.is_c4_free());
            }
        }
        // keys strictly increasing: sorted and duplicate-free
        let keys = result.keys();
        for w in keys.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
    }
}
