//! Experiment orchestration: the size/optimizer/repetition matrix, seeded
//! per-cell runs, metric extraction and summary statistics.

use std::time::Instant;

use rayon::prelude::*;

use crate::deploy::{enumerate_candidates, mst_backbone, Role, SeedLayout};
use crate::energy::{
    node_energy_per_round, relay_multipliers, total_lifetime, EnergyParams, LifetimeReport,
};
use crate::error::{Error, Result};
use crate::float::Float;
use crate::grid::{GridSpec, GridVertex};
use crate::laplacian::build_laplacian;
use crate::objective::ObjectiveContext;
use crate::optim::{optimize_with_band, AbcParams, DeParams, GsaParams, OptimizerConfig, OptimizerKind};
use crate::reference::Metric;
use crate::spectral::{average_distance, spectral_summary, wiener_spectral};
use crate::stats::{mean, sample_std, welch_t_test};

/// Lattice geometry and seed positions shared by every cell of a plan.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometryConfig {
    pub dims: (usize, usize, usize),
    pub spacing_m: f64,
    pub comm_range_m: f64,
    pub bs: GridVertex,
    pub chs: Vec<GridVertex>,
    /// Candidate vertices enumerated for second-phase relays.
    pub n_c: usize,
}

/// Full experiment description. The default is the desk-scale plan; the
/// full-scale protocol is the same plan with more sizes, generations and
/// population.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentPlan {
    pub network_sizes: Vec<usize>,
    pub repetitions: usize,
    /// Packets per round; the first entry is the level used for the rows,
    /// the rest feed load sweeps.
    pub traffic_levels: Vec<f64>,
    pub optimizer_kinds: Vec<OptimizerKind>,
    pub base_seed: u64,
    /// Uniform reduction of population and generations, in (0, 1].
    pub scale_factor: f64,
    pub generations: usize,
    /// Population is `pop_per_node * network_size`, scaled.
    pub pop_per_node: usize,
    /// When set, per-cell wall times are zeroed in the rows so emitted CSV
    /// bytes are reproducible; timings stay available in the outcome.
    pub deterministic_output: bool,
    pub geometry: GeometryConfig,
    pub energy: EnergyParams<f64>,
    pub penalty_beta: f64,
    pub lambda2_fprn: f64,
    pub delta_mu: f64,
    /// Soft acceptance band for the final connectivity.
    pub lambda2_band: (f64, f64),
    pub de: DeParams<f64>,
    pub gsa: GsaParams<f64>,
    pub abc: AbcParams,
}

impl Default for ExperimentPlan {
    fn default() -> Self {
        Self {
            network_sizes: vec![20, 30],
            repetitions: 8,
            traffic_levels: vec![30.0, 100.0, 300.0, 600.0],
            optimizer_kinds: vec![OptimizerKind::Abc, OptimizerKind::De, OptimizerKind::Gsa],
            base_seed: 42,
            scale_factor: 1.0,
            generations: 50,
            pop_per_node: 10,
            deterministic_output: true,
            geometry: default_geometry(),
            energy: EnergyParams::default(),
            penalty_beta: 1.0,
            lambda2_fprn: 0.5,
            delta_mu: 0.1,
            lambda2_band: (0.5, 0.6),
            de: DeParams::default(),
            gsa: GsaParams::default(),
            abc: AbcParams::default(),
        }
    }
}

/// Desk-scale lattice: a 4x4 footprint three layers deep keeps optimal
/// deployments compact enough that their algebraic connectivity lands in
/// the acceptance band, while leaving enough free vertices for a
/// non-trivial search space.
pub fn default_geometry() -> GeometryConfig {
    GeometryConfig {
        dims: (4, 4, 3),
        spacing_m: 100.0,
        comm_range_m: 100.0,
        bs: GridVertex::new(1, 1, 0),
        chs: vec![
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
        n_c: 30,
    }
}

impl ExperimentPlan {
    /// Paper-scale protocol: all five sizes, 200 generations, denser
    /// populations. Orders of magnitude slower than the desk plan.
    pub fn full_scale(mut self) -> Self {
        self.network_sizes = vec![20, 30, 40, 50, 60];
        self.generations = 200;
        self.pop_per_node = 20;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.repetitions < 2 {
            return Err(Error::Config("statistics need at least 2 repetitions".into()));
        }
        let seeds = 1 + self.geometry.chs.len();
        if let Some(&bad) = self.network_sizes.iter().find(|&&s| s <= seeds) {
            return Err(Error::Config(format!(
                "network size {bad} leaves no room for relays over {seeds} seed devices"
            )));
        }
        if self.network_sizes.is_empty() || self.optimizer_kinds.is_empty() {
            return Err(Error::Config("plan needs at least one size and optimizer".into()));
        }
        if self.traffic_levels.is_empty() {
            return Err(Error::Config("plan needs at least one traffic level".into()));
        }
        if !(0.0 < self.scale_factor && self.scale_factor <= 1.0) {
            return Err(Error::Config("scale factor must lie in (0, 1]".into()));
        }
        self.energy.validate()?;
        Ok(())
    }

    pub fn grid(&self) -> Result<GridSpec<f64>> {
        GridSpec::new(self.geometry.dims, self.geometry.spacing_m, self.geometry.comm_range_m)
    }

    pub fn layout(&self) -> Result<SeedLayout> {
        SeedLayout::new(self.geometry.bs, self.geometry.chs.clone())
    }

    /// Base traffic level used for the result rows.
    pub fn base_traffic(&self) -> f64 {
        self.traffic_levels[0]
    }

    fn optimizer_config(&self, size: usize, seed: u64) -> OptimizerConfig<f64> {
        let pop = ((self.pop_per_node * size) as f64 * self.scale_factor).round() as usize;
        let gens = ((self.generations as f64) * self.scale_factor).round() as usize;
        OptimizerConfig {
            population_size: pop.max(4),
            max_generations: gens.max(1),
            seed,
            de: self.de,
            gsa: self.gsa,
            abc: self.abc,
        }
    }
}

/// FNV-1a over the cell coordinates, folded into the base seed so cells
/// are independent yet reproducible.
pub fn derive_seed(base_seed: u64, size: usize, kind: OptimizerKind, rep: usize) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut h = OFFSET;
    let mut eat = |bytes: &[u8]| {
        for &b in bytes {
            h ^= b as u64;
            h = h.wrapping_mul(PRIME);
        }
    };
    eat(&(size as u64).to_le_bytes());
    eat(kind.as_str().as_bytes());
    eat(&(rep as u64).to_le_bytes());
    base_seed ^ h
}

/// One completed cell of the experiment matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub optimizer: OptimizerKind,
    pub network_size: usize,
    pub repetition: usize,
    pub seed: u64,
    pub wiener: f64,
    pub mu: f64,
    pub e_p: f64,
    pub t_r: f64,
    pub lambda2: f64,
    pub wall_time_ms: u64,
}

/// Per-generation best fitness of one cell.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRow {
    pub optimizer: OptimizerKind,
    pub network_size: usize,
    pub repetition: usize,
    pub best_fitness: Vec<f64>,
}

/// A cell that could not run; the plan continues without it.
#[derive(Debug, Clone)]
pub struct CellError {
    pub optimizer: OptimizerKind,
    pub network_size: usize,
    pub repetition: usize,
    pub message: String,
}

/// Everything a plan run produces.
#[derive(Debug, Clone)]
pub struct PlanOutcome {
    pub rows: Vec<ResultRow>,
    pub traces: Vec<TraceRow>,
    pub errors: Vec<CellError>,
    /// Rows whose final connectivity fell outside the soft band.
    pub band_violations: usize,
    /// Measured wall time per cell (size, optimizer, rep, millis), kept
    /// out of the deterministic rows.
    pub timings_ms: Vec<(usize, OptimizerKind, usize, u64)>,
}

struct SizeContext {
    ctx: ObjectiveContext<f64>,
    initial_report: LifetimeReport<f64>,
}

fn lifetime_report_for(
    backbone: &crate::deploy::Backbone,
    n_sprn_budgeted: usize,
    energy: &EnergyParams<f64>,
    delta_mu: f64,
    spacing_m: f64,
    tol_eig: f64,
) -> Result<LifetimeReport<f64>> {
    let graph = backbone.graph();
    let n = graph.node_count();
    let summary = spectral_summary(&build_laplacian::<f64>(graph), tol_eig)?;
    let wiener = wiener_spectral(&summary)?;
    let mu_w = average_distance(wiener, n, delta_mu)?;
    // Hop-unit average distance bridged to metres for the radio model.
    let mu_m = mu_w * spacing_m;
    let chs: Vec<usize> = backbone.ch_indices().collect();
    let k = relay_multipliers(graph, backbone.bs_index(), &chs)?;
    let rn_e_p: Vec<f64> = backbone
        .devices()
        .iter()
        .enumerate()
        .filter(|(_, d)| matches!(d.role, Role::Fprn | Role::Sprn))
        .map(|(i, _)| node_energy_per_round(energy, k[i] as f64, mu_m))
        .collect();
    let b1 = (chs.len() + backbone.fprn_count()) as f64 * energy.e_init;
    let b2 = n_sprn_budgeted as f64 * energy.e_init;
    let i_rounds = if rn_e_p.is_empty() {
        0.0
    } else {
        crate::energy::initial_rounds(b1, &rn_e_p)?
    };
    let t_rounds = if rn_e_p.is_empty() {
        0.0
    } else {
        total_lifetime(b1, b2, &rn_e_p)?
    };
    Ok(LifetimeReport { i_rounds, t_rounds, per_node_e_p: rn_e_p, b1, b2 })
}

/// Run the whole experiment matrix. Cells execute in parallel; rows come
/// back sorted by size, optimizer and repetition, so output is independent
/// of scheduling.
pub fn run_plan(plan: &ExperimentPlan) -> Result<PlanOutcome> {
    plan.validate()?;
    let grid = plan.grid()?;
    let layout = plan.layout()?;
    let backbone = mst_backbone(&layout, &grid)?;
    let candidates = enumerate_candidates(&backbone, &grid, plan.geometry.n_c)?;
    let occupied = backbone.device_count();
    let base_energy = plan.energy.with_traffic(plan.base_traffic());

    // One shared objective context per feasible network size.
    let mut size_contexts: Vec<(usize, Result<SizeContext>)> = Vec::new();
    for &size in &plan.network_sizes {
        let built = (|| {
            if size <= occupied {
                return Err(Error::Config(format!(
                    "network size {size} not reachable: first phase already placed {occupied} devices"
                )));
            }
            let n_sprn = size - occupied;
            if n_sprn > candidates.len() {
                return Err(Error::Config(format!(
                    "network size {size} needs {n_sprn} relays but only {} candidates exist",
                    candidates.len()
                )));
            }
            let ctx = ObjectiveContext {
                l_initial: build_laplacian(backbone.graph()),
                candidates: candidates.clone(),
                backbone: backbone.clone(),
                grid: grid.clone(),
                penalty_beta: plan.penalty_beta,
                lambda2_fprn: plan.lambda2_fprn,
                delta_mu: plan.delta_mu,
                n_sprn,
                tol_eig: f64::DEFAULT_EIG_TOL,
            };
            let initial_report =
                lifetime_report_for(&backbone, n_sprn, &base_energy, plan.delta_mu, plan.geometry.spacing_m, ctx.tol_eig)?;
            Ok(SizeContext { ctx, initial_report })
        })();
        size_contexts.push((size, built));
    }

    let cells: Vec<(usize, OptimizerKind, usize)> = plan
        .network_sizes
        .iter()
        .flat_map(|&size| {
            plan.optimizer_kinds
                .iter()
                .flat_map(move |&kind| (0..plan.repetitions).map(move |rep| (size, kind, rep)))
        })
        .collect();

    let results: Vec<std::result::Result<(ResultRow, TraceRow, u64), CellError>> = cells
        .par_iter()
        .map(|&(size, kind, rep)| {
            let cell_err = |message: String| CellError {
                optimizer: kind,
                network_size: size,
                repetition: rep,
                message,
            };
            let sc = match size_contexts.iter().find(|(s, _)| *s == size) {
                Some((_, Ok(sc))) => sc,
                Some((_, Err(e))) => return Err(cell_err(e.to_string())),
                None => return Err(cell_err("size context missing".into())),
            };

            let seed = derive_seed(plan.base_seed, size, kind, rep);
            let cfg = plan.optimizer_config(size, seed);
            let started = Instant::now();
            let trace = optimize_with_band(&sc.ctx, &cfg, kind, Some(plan.lambda2_band))
                .map_err(|e| cell_err(e.to_string()))?;
            let wall_ms = started.elapsed().as_millis() as u64;

            let selected = sc.ctx.candidates.selected(&trace.final_alpha);
            let deployed = sc.ctx.backbone.with_sprns(&selected, &sc.ctx.grid);
            let report =
                lifetime_report_for(&deployed, 0, &base_energy, plan.delta_mu, plan.geometry.spacing_m, sc.ctx.tol_eig)
                    .map_err(|e| cell_err(format!("final deployment metrics: {e}")))?;
            let summary =
                spectral_summary(&build_laplacian::<f64>(deployed.graph()), sc.ctx.tol_eig)
                    .map_err(|e| cell_err(e.to_string()))?;
            let wiener = wiener_spectral(&summary).map_err(|e| cell_err(e.to_string()))?;
            let mu = average_distance(wiener, deployed.graph().node_count(), plan.delta_mu)
                .map_err(|e| cell_err(e.to_string()))?;

            // The deployed report counts second-phase relays as consumers;
            // budgets come from the configured phase split.
            let b1 = sc.initial_report.b1;
            let b2 = sc.ctx.n_sprn as f64 * base_energy.e_init;
            let t_r = total_lifetime(b1, b2, &report.per_node_e_p)
                .map_err(|e| cell_err(e.to_string()))?;
            let e_p = mean(&report.per_node_e_p);

            let row = ResultRow {
                optimizer: kind,
                network_size: size,
                repetition: rep,
                seed,
                wiener,
                mu,
                e_p,
                t_r,
                lambda2: summary.fiedler(),
                wall_time_ms: if plan.deterministic_output { 0 } else { wall_ms },
            };
            let trace_row = TraceRow {
                optimizer: kind,
                network_size: size,
                repetition: rep,
                best_fitness: trace
                    .best_fitness_per_generation
                    .iter()
                    .map(|v| v.to_f64_lossy())
                    .collect(),
            };
            Ok((row, trace_row, wall_ms))
        })
        .collect();

    let mut rows = Vec::new();
    let mut traces = Vec::new();
    let mut errors = Vec::new();
    let mut timings = Vec::new();
    for r in results {
        match r {
            Ok((row, trace, wall)) => {
                timings.push((row.network_size, row.optimizer, row.repetition, wall));
                rows.push(row);
                traces.push(trace);
            }
            Err(e) => errors.push(e),
        }
    }
    rows.sort_by_key(|r| (r.network_size, r.optimizer.as_str(), r.repetition));
    traces.sort_by_key(|t| (t.network_size, t.optimizer.as_str(), t.repetition));
    errors.sort_by_key(|e| (e.network_size, e.optimizer.as_str(), e.repetition));
    timings.sort_by_key(|&(s, o, r, _)| (s, o.as_str(), r));

    let (lo, hi) = plan.lambda2_band;
    let band_violations = rows
        .iter()
        .filter(|r| r.lambda2 < lo || r.lambda2 > hi)
        .count();

    Ok(PlanOutcome { rows, traces, errors, band_violations, timings_ms: timings })
}

/// Extract one metric column from a row.
pub fn metric_of(row: &ResultRow, metric: Metric) -> f64 {
    match metric {
        Metric::Wiener => row.wiener,
        Metric::Mu => row.mu,
        Metric::EnergyPerRound => row.e_p,
        Metric::Lifetime => row.t_r,
        Metric::Lambda2 => row.lambda2,
    }
}

/// One summary cell: mean, sample deviation and the two-sided Welch
/// p-value against the reference optimizer at the same size (absent on the
/// reference's own rows).
#[derive(Debug, Clone)]
pub struct SummaryRow {
    pub optimizer: OptimizerKind,
    pub network_size: usize,
    pub metric: Metric,
    pub mean: f64,
    pub std: f64,
    pub p_value: Option<f64>,
}

/// Condense rows into per-(size, optimizer, metric) summary cells.
pub fn summarize(rows: &[ResultRow], reference: OptimizerKind) -> Result<Vec<SummaryRow>> {
    let mut sizes: Vec<usize> = rows.iter().map(|r| r.network_size).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let mut kinds: Vec<OptimizerKind> = Vec::new();
    for r in rows {
        if !kinds.contains(&r.optimizer) {
            kinds.push(r.optimizer);
        }
    }
    kinds.sort_by_key(|k| k.as_str());

    let mut out = Vec::new();
    for &size in &sizes {
        let ref_rows: Vec<&ResultRow> = rows
            .iter()
            .filter(|r| r.network_size == size && r.optimizer == reference)
            .collect();
        if ref_rows.is_empty() {
            return Err(Error::MissingData(format!(
                "no {} reference sample at network size {size}",
                reference.as_str()
            )));
        }
        for &kind in &kinds {
            let cell: Vec<&ResultRow> = rows
                .iter()
                .filter(|r| r.network_size == size && r.optimizer == kind)
                .collect();
            if cell.is_empty() {
                continue;
            }
            if cell.len() < 2 {
                return Err(Error::Domain(format!(
                    "{} at size {size} has fewer than 2 repetitions",
                    kind.as_str()
                )));
            }
            for metric in Metric::ALL {
                let sample: Vec<f64> = cell.iter().map(|r| metric_of(r, metric)).collect();
                let p_value = if kind == reference {
                    None
                } else {
                    let reference_sample: Vec<f64> =
                        ref_rows.iter().map(|r| metric_of(r, metric)).collect();
                    Some(welch_t_test(&sample, &reference_sample)?.p_value)
                };
                out.push(SummaryRow {
                    optimizer: kind,
                    network_size: size,
                    metric,
                    mean: mean(&sample),
                    std: sample_std(&sample),
                    p_value,
                });
            }
        }
    }
    Ok(out)
}

/// Recompute a row's lifetime at a different traffic level. Per-round
/// energy is affine in the packet rate, so the total consumption at any
/// level follows from the row's mean consumption at the base level.
pub fn lifetime_at_level(row: &ResultRow, plan: &ExperimentPlan, level: f64) -> Result<f64> {
    let base = plan.base_traffic();
    let seeds = 1 + plan.geometry.chs.len();
    if row.network_size <= seeds {
        return Err(Error::Domain("row has no relay consumers".into()));
    }
    let n_rn = (row.network_size - seeds) as f64;
    let energy = &plan.energy;
    let agg = energy.a_rate * energy.j_agg;
    let total_base = row.e_p * n_rn;
    let rate_coefficient = (total_base - n_rn * agg) / base;
    if rate_coefficient <= 0.0 {
        return Err(Error::Domain("non-positive traffic coefficient".into()));
    }
    let budget = (row.network_size as f64 - 1.0) * energy.e_init;
    Ok(budget / (rate_coefficient * level + n_rn * agg))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_plan() -> ExperimentPlan {
        ExperimentPlan {
            network_sizes: vec![20],
            repetitions: 2,
            optimizer_kinds: vec![OptimizerKind::De],
            generations: 3,
            pop_per_node: 1,
            ..ExperimentPlan::default()
        }
    }

    #[test]
    fn derive_seed_is_stable_and_disperses() {
        let a = derive_seed(42, 20, OptimizerKind::De, 0);
        let b = derive_seed(42, 20, OptimizerKind::De, 0);
        assert_eq!(a, b);
        assert_ne!(a, derive_seed(42, 20, OptimizerKind::De, 1));
        assert_ne!(a, derive_seed(42, 20, OptimizerKind::Gsa, 0));
        assert_ne!(a, derive_seed(42, 30, OptimizerKind::De, 0));
        assert_ne!(a, derive_seed(43, 20, OptimizerKind::De, 0));
    }

    #[test]
    fn default_plan_validates() {
        ExperimentPlan::default().validate().unwrap();
    }

    #[test]
    fn undersized_network_is_rejected() {
        let plan = ExperimentPlan {
            network_sizes: vec![10],
            ..ExperimentPlan::default()
        };
        assert!(plan.validate().is_err());
    }

    #[test]
    fn tiny_plan_produces_expected_rows_with_distinct_seeds() {
        let outcome = run_plan(&tiny_plan()).unwrap();
        assert_eq!(outcome.rows.len(), 2);
        assert!(outcome.errors.is_empty());
        assert_ne!(outcome.rows[0].seed, outcome.rows[1].seed);
    }

    #[test]
    fn rerun_is_deterministic() {
        let plan = ExperimentPlan {
            optimizer_kinds: vec![OptimizerKind::Abc, OptimizerKind::De],
            ..tiny_plan()
        };
        let a = run_plan(&plan).unwrap();
        let b = run_plan(&plan).unwrap();
        assert_eq!(a.rows, b.rows);
        assert_eq!(a.traces, b.traces);
    }

    #[test]
    fn infeasible_size_becomes_cell_errors_and_run_continues() {
        let plan = ExperimentPlan {
            // 200 relays cannot fit on the desk-scale candidate set.
            network_sizes: vec![200, 20],
            ..tiny_plan()
        };
        let outcome = run_plan(&plan).unwrap();
        assert_eq!(outcome.errors.len(), 2);
        assert_eq!(outcome.rows.len(), 2);
    }

    #[test]
    fn summarize_requires_reference_sample() {
        let plan = ExperimentPlan {
            optimizer_kinds: vec![OptimizerKind::Abc],
            ..tiny_plan()
        };
        let outcome = run_plan(&plan).unwrap();
        assert!(matches!(
            summarize(&outcome.rows, OptimizerKind::De),
            Err(Error::MissingData(_))
        ));
        let ok = summarize(&outcome.rows, OptimizerKind::Abc).unwrap();
        assert_eq!(ok.len(), Metric::ALL.len());
        assert!(ok.iter().all(|s| s.p_value.is_none()));
    }

    #[test]
    fn lifetime_at_base_level_matches_row() {
        let plan = tiny_plan();
        let outcome = run_plan(&plan).unwrap();
        for row in &outcome.rows {
            let recomputed = lifetime_at_level(row, &plan, plan.base_traffic()).unwrap();
            assert!(
                (recomputed - row.t_r).abs() / row.t_r < 1e-9,
                "row t_r {} vs recomputed {}",
                row.t_r,
                recomputed
            );
        }
    }

    #[test]
    fn lifetime_decreases_with_load() {
        let plan = tiny_plan();
        let outcome = run_plan(&plan).unwrap();
        for row in &outcome.rows {
            let mut prev = f64::INFINITY;
            for &level in &plan.traffic_levels {
                let t = lifetime_at_level(row, &plan, level).unwrap();
                assert!(t < prev, "lifetime must strictly decrease with load");
                prev = t;
            }
        }
    }
}
