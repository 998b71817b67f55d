// Scratch calibration binary (not shipped): explores desk-scale geometry
// candidates against the acceptance requirements.

use relaydeploy::deploy::{enumerate_candidates, mst_backbone};
use relaydeploy::experiment::{run_plan, summarize, ExperimentPlan};
use relaydeploy::optim::{optimize_fn, CenteredSphere, OptimizerConfig, OptimizerKind};
use relaydeploy::stats::welch_t_test;

fn describe_plan(label: &str, plan: &ExperimentPlan) {
    let grid = plan.grid().unwrap();
    let layout = plan.layout().unwrap();
    let backbone = mst_backbone(&layout, &grid).unwrap();
    let candidates = enumerate_candidates(&backbone, &grid, plan.geometry.n_c).unwrap();
    println!(
        "=== {label}: occupied={} fprn={} n_c={} ===",
        backbone.device_count(),
        backbone.fprn_count(),
        candidates.len()
    );

    let started = std::time::Instant::now();
    let outcome = run_plan(plan).unwrap();
    println!(
        "cells={} errors={} band_violations={} elapsed={:.1}s",
        outcome.rows.len(),
        outcome.errors.len(),
        outcome.band_violations,
        started.elapsed().as_secs_f64()
    );
    for e in &outcome.errors {
        println!("  error {} N={} rep={}: {}", e.optimizer.as_str(), e.network_size, e.repetition, e.message);
    }

    for &size in &plan.network_sizes {
        for kind in [OptimizerKind::Abc, OptimizerKind::De, OptimizerKind::Gsa] {
            let l2: Vec<f64> = outcome
                .rows
                .iter()
                .filter(|r| r.network_size == size && r.optimizer == kind)
                .map(|r| r.lambda2)
                .collect();
            let tr: Vec<f64> = outcome
                .rows
                .iter()
                .filter(|r| r.network_size == size && r.optimizer == kind)
                .map(|r| r.t_r)
                .collect();
            let mu: Vec<f64> = outcome
                .rows
                .iter()
                .filter(|r| r.network_size == size && r.optimizer == kind)
                .map(|r| r.mu)
                .collect();
            if l2.is_empty() {
                continue;
            }
            let l2min = l2.iter().cloned().fold(f64::INFINITY, f64::min);
            let l2max = l2.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let trmean = tr.iter().sum::<f64>() / tr.len() as f64;
            let mumean = mu.iter().sum::<f64>() / mu.len() as f64;
            println!(
                "  N={size} {:>3}: l2 in [{l2min:.4}, {l2max:.4}]  mean_mu={mumean:.4} mean_t_r={trmean:.2}",
                kind.as_str()
            );
        }
        // ordering + significance at this size
        let sample = |k: OptimizerKind| -> Vec<f64> {
            outcome
                .rows
                .iter()
                .filter(|r| r.network_size == size && r.optimizer == k)
                .map(|r| r.t_r)
                .collect()
        };
        let (de, abc, gsa) = (
            sample(OptimizerKind::De),
            sample(OptimizerKind::Abc),
            sample(OptimizerKind::Gsa),
        );
        if !de.is_empty() && !gsa.is_empty() {
            let p = welch_t_test(&de, &gsa).unwrap().p_value;
            let m = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
            println!(
                "  N={size} ordering: DE={:.2} ABC={:.2} GSA={:.2}  p(DE vs GSA)={:.2e}",
                m(&de),
                m(&abc),
                m(&gsa),
                p
            );
        }
    }
    let _ = summarize(&outcome.rows, OptimizerKind::De).unwrap();
}

fn sphere_check() {
    println!("=== sphere benchmark (10-d, pop 50, 200 gens) ===");
    for kind in [OptimizerKind::De, OptimizerKind::Gsa, OptimizerKind::Abc] {
        for seed in [1u64, 2, 3] {
            let sphere = CenteredSphere { dim: 10 };
            let cfg: OptimizerConfig<f64> = OptimizerConfig::new(50, 200, seed);
            let t = optimize_fn(&sphere, &cfg, kind).unwrap();
            println!("  {:>3} seed {seed}: best = {:.3e}", kind.as_str(), t.best_value);
        }
    }
}

fn main() {
    sphere_check();

    let plan = ExperimentPlan::default();
    describe_plan("default (4,4,3) n_c=30", &plan);
}
