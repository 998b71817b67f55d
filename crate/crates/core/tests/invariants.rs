//! Cross-module invariants: spectral properties against combinatorial
//! oracles, deployment reconstruction identities, objective feasibility.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use relaydeploy::deploy::{
    enumerate_candidates, mst_backbone, rn_chain, update_laplacian, SeedLayout,
};
use relaydeploy::graph::BackboneGraph;
use relaydeploy::grid::{GridSpec, GridVertex};
use relaydeploy::laplacian::build_laplacian;
use relaydeploy::objective::{evaluate, evaluate_rebuilt, repair, DecisionVector, ObjectiveContext};
use relaydeploy::spectral::{spectral_summary, symmetric_eigenvalues, wiener_spectral};
use relaydeploy::Float;

const TOL: f64 = 1e-8;

fn random_graph(rng: &mut StdRng, n: usize, edge_prob: f64) -> BackboneGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen::<f64>() < edge_prob {
                edges.push((i, j));
            }
        }
    }
    BackboneGraph::new(n, &edges).unwrap()
}

fn random_tree(rng: &mut StdRng, n: usize) -> BackboneGraph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    BackboneGraph::new(n, &edges).unwrap()
}

#[test]
fn fiedler_sign_matches_reachability_on_200_random_graphs() {
    let mut rng = StdRng::seed_from_u64(7);
    for trial in 0..200 {
        let n = rng.gen_range(2..=30);
        let p = rng.gen_range(0.05..0.5);
        let g = random_graph(&mut rng, n, p);
        let s = spectral_summary(&build_laplacian::<f64>(&g), TOL).unwrap();
        assert_eq!(
            s.is_connected(),
            g.is_connected(),
            "trial {trial}: fiedler {} vs reachability",
            s.fiedler()
        );
    }
}

#[test]
fn laplacian_spectra_are_positive_semidefinite() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.gen_range(2..=25);
        let g = random_graph(&mut rng, n, 0.3);
        let eig = symmetric_eigenvalues(&build_laplacian::<f64>(&g)).unwrap();
        assert!(eig.iter().all(|&l| l >= -TOL), "negative eigenvalue in {eig:?}");
    }
}

#[test]
fn spectral_wiener_equals_bfs_wiener_on_100_random_trees() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..100 {
        let n = rng.gen_range(3..=50);
        let tree = random_tree(&mut rng, n);
        let s = spectral_summary(&build_laplacian::<f64>(&tree), TOL).unwrap();
        let spectral = wiener_spectral(&s).unwrap();
        let bfs: f64 = tree.wiener_bfs().unwrap();
        let rel = (spectral - bfs).abs() / bfs;
        assert!(rel < 1e-9, "n={n}: spectral {spectral} vs bfs {bfs} (rel {rel:.2e})");
    }
}

#[test]
fn adding_an_edge_never_hurts_connectivity_or_wiener() {
    let mut rng = StdRng::seed_from_u64(17);
    let mut checked = 0;
    while checked < 60 {
        let n = rng.gen_range(3..=20);
        let g = random_graph(&mut rng, n, 0.4);
        if !g.is_connected() {
            continue;
        }
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !g.has_edge(i, j))
            .collect();
        let Some(&(u, v)) = missing.first() else { continue };
        let g2 = g.with_edge(u, v).unwrap();

        let s1 = spectral_summary(&build_laplacian::<f64>(&g), TOL).unwrap();
        let s2 = spectral_summary(&build_laplacian::<f64>(&g2), TOL).unwrap();
        assert!(
            s2.fiedler() >= s1.fiedler() - 1e-10,
            "edge ({u},{v}) decreased the fiedler value"
        );
        let w1 = wiener_spectral(&s1).unwrap();
        let w2 = wiener_spectral(&s2).unwrap();
        assert!(w2 <= w1 + 1e-10, "edge ({u},{v}) increased the spectral wiener index");
        checked += 1;
    }
}

fn desk_grid() -> GridSpec<f64> {
    GridSpec::new((6, 6, 3), 100.0, 100.0).unwrap()
}

fn random_layout(rng: &mut StdRng, grid: &GridSpec<f64>, chs: usize) -> SeedLayout {
    let (nx, ny, nz) = grid.dims();
    let mut vertices = std::collections::BTreeSet::new();
    while vertices.len() < chs + 1 {
        vertices.insert(GridVertex::new(
            rng.gen_range(0..nx as i64),
            rng.gen_range(0..ny as i64),
            rng.gen_range(0..nz as i64),
        ));
    }
    let mut it = vertices.into_iter();
    let bs = it.next().unwrap();
    SeedLayout::new(bs, it.collect()).unwrap()
}

#[test]
fn first_phase_backbone_is_connected_for_50_random_layouts() {
    let mut rng = StdRng::seed_from_u64(19);
    let grid = desk_grid();
    for trial in 0..50 {
        let ch_count = rng.gen_range(1..=8);
        let layout = random_layout(&mut rng, &grid, ch_count);
        let backbone = mst_backbone(&layout, &grid).unwrap();
        assert!(backbone.graph().is_connected(), "trial {trial}");
        let s = spectral_summary(&build_laplacian::<f64>(backbone.graph()), TOL);
        if let Ok(s) = s {
            assert!(s.is_connected(), "trial {trial}: spectral check disagrees");
        }
    }
}

#[test]
fn relay_chain_length_matches_grid_bfs_oracle() {
    // Oracle: hop distance on the unit-range lattice graph is the
    // Manhattan distance, so a minimal chain has that many interior
    // vertices minus one.
    let mut rng = StdRng::seed_from_u64(23);
    let grid = desk_grid();
    let (nx, ny, nz) = grid.dims();
    for _ in 0..100 {
        let u = GridVertex::new(
            rng.gen_range(0..nx as i64),
            rng.gen_range(0..ny as i64),
            rng.gen_range(0..nz as i64),
        );
        let v = GridVertex::new(
            rng.gen_range(0..nx as i64),
            rng.gen_range(0..ny as i64),
            rng.gen_range(0..nz as i64),
        );
        if u == v {
            continue;
        }
        let chain = rn_chain(u, v, &grid);
        assert_eq!(chain.len() as u64, u.manhattan(v) - 1);
    }
}

fn fixture_context(n_sprn: usize) -> ObjectiveContext<f64> {
    let grid = GridSpec::new((5, 5, 3), 100.0, 100.0).unwrap();
    let layout = SeedLayout::new(
        GridVertex::new(2, 2, 0),
        vec![
            GridVertex::new(0, 0, 0),
            GridVertex::new(4, 0, 0),
            GridVertex::new(0, 4, 0),
            GridVertex::new(4, 4, 0),
            GridVertex::new(2, 0, 0),
        ],
    )
    .unwrap();
    ObjectiveContext::from_layout(&layout, &grid, 20, n_sprn, 1.0, 0.5, 0.1).unwrap()
}

#[test]
fn incremental_update_equals_full_rebuild_on_100_random_selections() {
    let mut rng = StdRng::seed_from_u64(29);
    let ctx = fixture_context(4);
    let n_c = ctx.n_c();
    for _ in 0..100 {
        let mut bits = vec![false; n_c];
        let mut placed = 0;
        while placed < ctx.n_sprn {
            let i = rng.gen_range(0..n_c);
            if !bits[i] {
                bits[i] = true;
                placed += 1;
            }
        }
        let alpha = DecisionVector::from_bits(bits);
        let incremental =
            update_laplacian(&ctx.l_initial, &alpha, &ctx.candidates, &ctx.backbone, &ctx.grid)
                .unwrap();
        let selected = ctx.candidates.selected(&alpha);
        let rebuilt =
            build_laplacian::<f64>(ctx.backbone.with_sprns(&selected, &ctx.grid).graph());
        assert_eq!(incremental.dim(), rebuilt.dim());
        for i in 0..incremental.dim() {
            for j in 0..incremental.dim() {
                assert_eq!(
                    incremental.get(i, j),
                    rebuilt.get(i, j),
                    "entry ({i}, {j}) differs from rebuild"
                );
            }
        }
    }
}

#[test]
fn removing_a_relay_edge_never_raises_the_fiedler_value() {
    // Edge-only comparison on a fixed augmented vertex set: dropping one
    // link contributed by a second-phase relay cannot increase algebraic
    // connectivity.
    let mut rng = StdRng::seed_from_u64(31);
    let ctx = fixture_context(3);
    let n_c = ctx.n_c();
    let mut checked = 0;
    while checked < 20 {
        let mut bits = vec![false; n_c];
        let mut placed = 0;
        while placed < ctx.n_sprn {
            let i = rng.gen_range(0..n_c);
            if !bits[i] {
                bits[i] = true;
                placed += 1;
            }
        }
        let alpha = DecisionVector::from_bits(bits);
        let selected = ctx.candidates.selected(&alpha);
        let augmented = ctx.backbone.with_sprns(&selected, &ctx.grid).graph().clone();
        let base = ctx.backbone.device_count();
        let relay_edges: Vec<(usize, usize)> = augmented
            .edges()
            .filter(|&(u, v)| u >= base || v >= base)
            .collect();
        let Some(&(u, v)) = relay_edges.last() else { continue };
        let full = spectral_summary(&build_laplacian::<f64>(&augmented), TOL).unwrap();
        let remaining: Vec<(usize, usize)> =
            augmented.edges().filter(|&e| e != (u, v)).collect();
        let reduced = BackboneGraph::new(augmented.node_count(), &remaining).unwrap();
        let reduced_summary =
            spectral_summary(&build_laplacian::<f64>(&reduced), TOL).unwrap();
        assert!(
            reduced_summary.fiedler() <= full.fiedler() + 1e-10,
            "removing relay edge ({u},{v}) raised the fiedler value"
        );
        checked += 1;
    }
}

#[test]
fn evaluate_agrees_with_rebuild_oracle_for_random_selections() {
    let mut rng = StdRng::seed_from_u64(37);
    let ctx = fixture_context(3);
    for _ in 0..40 {
        let raw: Vec<f64> = (0..ctx.n_c()).map(|_| rng.gen()).collect();
        let alpha = repair(&raw, ctx.n_sprn);
        let fast = evaluate(&alpha, &ctx).unwrap();
        let slow = evaluate_rebuilt(&alpha, &ctx).unwrap();
        assert_eq!(fast, slow);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn repair_always_meets_the_budget(
        raw in prop::collection::vec(0.0f64..1.0, 1..60),
        budget_frac in 0.0f64..1.0,
    ) {
        let budget = ((raw.len() as f64) * budget_frac) as usize;
        let alpha = repair(&raw, budget);
        prop_assert_eq!(alpha.ones(), budget);
        prop_assert_eq!(alpha.len(), raw.len());
    }

    #[test]
    fn laplacian_structure_holds_for_random_graphs(
        n in 2usize..20,
        seed in 0u64..1000,
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.4);
        let l = build_laplacian::<f64>(&g);
        prop_assert!(l.is_symmetric());
        for (i, s) in l.row_sums().into_iter().enumerate() {
            prop_assert_eq!(s, 0.0);
            prop_assert_eq!(l.get(i, i), g.degree(i) as f64);
        }
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let e = l.get(i, j);
                    prop_assert!(e == 0.0 || e == -1.0);
                }
            }
        }
    }

    #[test]
    fn edge_list_serialization_round_trips(
        n in 1usize..15,
        seed in 0u64..1000,
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.3);
        let back = BackboneGraph::from_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(g, back);
    }
}

#[test]
fn f32_pipeline_agrees_with_f64_on_small_fixture() {
    let grid32 = GridSpec::new((4, 3, 2), 100.0f32, 100.0).unwrap();
    let grid64 = GridSpec::new((4, 3, 2), 100.0f64, 100.0).unwrap();
    let layout = SeedLayout::new(
        GridVertex::new(0, 0, 0),
        vec![GridVertex::new(3, 0, 0), GridVertex::new(0, 2, 0)],
    )
    .unwrap();
    let b32 = mst_backbone(&layout, &grid32).unwrap();
    let b64 = mst_backbone(&layout, &grid64).unwrap();
    assert_eq!(b32.devices(), b64.devices());

    let c32 = enumerate_candidates(&b32, &grid32, 6).unwrap();
    let c64 = enumerate_candidates(&b64, &grid64, 6).unwrap();
    assert_eq!(c32, c64);

    let s32 = spectral_summary(&build_laplacian::<f32>(b32.graph()), f32::DEFAULT_EIG_TOL).unwrap();
    let s64 = spectral_summary(&build_laplacian::<f64>(b64.graph()), f64::DEFAULT_EIG_TOL).unwrap();
    assert!((s32.fiedler() as f64 - s64.fiedler()).abs() < 1e-4);
}
