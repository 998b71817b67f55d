// Geometry scan: which desk-scale lattice separates the optimizers while
// holding the connectivity band?
use relaydeploy::experiment::{run_plan, ExperimentPlan, GeometryConfig};
use relaydeploy::grid::GridVertex;
use relaydeploy::optim::{AbcParams, OptimizerKind};
use relaydeploy::stats::welch_t_test;

fn seeds_4x4() -> (GridVertex, Vec<GridVertex>) {
    (
        GridVertex::new(1, 1, 0),
        vec![
            GridVertex::new(0, 0, 0),
            GridVertex::new(2, 0, 0),
            GridVertex::new(0, 2, 0),
            GridVertex::new(2, 2, 0),
            GridVertex::new(3, 1, 0),
            GridVertex::new(1, 3, 0),
            GridVertex::new(3, 3, 0),
            GridVertex::new(0, 3, 0),
            GridVertex::new(3, 0, 0),
        ],
    )
}

fn run(label: &str, dims: (usize, usize, usize), n_c: usize, limit: usize) {
    let (bs, chs) = seeds_4x4();
    let plan = ExperimentPlan {
        geometry: GeometryConfig {
            dims,
            spacing_m: 100.0,
            comm_range_m: 100.0,
            bs,
            chs,
            n_c,
        },
        abc: AbcParams { limit, onlooker_fraction: 1.0 },
        ..ExperimentPlan::default()
    };
    let started = std::time::Instant::now();
    let outcome = match run_plan(&plan) {
        Ok(o) => o,
        Err(e) => {
            println!("{label}: failed: {e}");
            return;
        }
    };
    print!(
        "{label}: viol={}/{} {:.0}s |",
        outcome.band_violations,
        outcome.rows.len(),
        started.elapsed().as_secs_f64()
    );
    for &size in &plan.network_sizes {
        let sample = |k: OptimizerKind| -> Vec<f64> {
            outcome
                .rows
                .iter()
                .filter(|r| r.network_size == size && r.optimizer == k)
                .map(|r| r.t_r)
                .collect()
        };
        let m = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
        let (de, abc, gsa) = (
            sample(OptimizerKind::De),
            sample(OptimizerKind::Abc),
            sample(OptimizerKind::Gsa),
        );
        let p = welch_t_test(&de, &gsa).unwrap().p_value;
        let ord = if m(&de) > m(&abc) && m(&abc) > m(&gsa) { "OK " } else { "BAD" };
        print!(
            " N={size} {ord} DE={:.3e} ABC={:.3e} GSA={:.3e} p={:.1e} |",
            m(&de),
            m(&abc),
            m(&gsa),
            p
        );
    }
    println!();
}

fn main() {
    run("A (5,5,4) n_c=50 lim=n_c", (5, 5, 4), 50, 0);
    run("B (4,4,5) n_c=45 lim=n_c", (4, 4, 5), 45, 0);
    run("C (5,5,3) n_c=45 lim=n_c", (5, 5, 3), 45, 0);
    run("D (5,5,4) n_c=50 lim=200", (5, 5, 4), 50, 200);
    run("E (4,4,3) n_c=30 lim=200", (4, 4, 3), 30, 200);
}
