// Probe GSA convergence under unit-box-scaled gravitational constants.
use relaydeploy::optim::{optimize_fn, CenteredSphere, GsaParams, OptimizerConfig, OptimizerKind};

fn main() {
    let sphere = CenteredSphere { dim: 10 };
    for (g0, alpha) in [(0.5, 7.0), (1.0, 7.0), (2.0, 7.0), (5.0, 7.0), (1.0, 20.0), (5.0, 20.0), (20.0, 20.0), (100.0, 20.0)] {
        let mut best = Vec::new();
        for seed in [1u64, 2, 3, 4, 5] {
            let mut cfg: OptimizerConfig<f64> = OptimizerConfig::new(50, 200, seed);
            cfg.gsa = GsaParams { alpha_g: alpha, lambda_g: 6.0, epsilon_g: 1e-5, g0, kbest: 4 };
            let t = optimize_fn(&sphere, &cfg, OptimizerKind::Gsa).unwrap();
            best.push(t.best_value);
        }
        println!(
            "g0={g0:>6} a={alpha:>4}: {}",
            best.iter().map(|v| format!("{v:.2e}")).collect::<Vec<_>>().join("  ")
        );
    }
}
