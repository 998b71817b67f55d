//! Text emission and parsing: result rows CSV, trace CSV, summary CSV,
//! plot series and the experiment plan file.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::experiment::{
    lifetime_at_level, metric_of, ExperimentPlan, ResultRow, SummaryRow, TraceRow,
};
use crate::grid::GridVertex;
use crate::optim::OptimizerKind;
use crate::reference::Metric;
use crate::stats::mean;

pub const ROWS_HEADER: &str =
    "optimizer,network_size,repetition,seed,wiener,mu,e_p,t_r,lambda2,wall_time_ms";

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Split one CSV record, honoring quoted fields and doubled quotes.
fn split_record(line: &str) -> Result<Vec<String>> {
    let mut fields = Vec::new();
    let mut cur = String::new();
    let mut chars = line.chars().peekable();
    let mut quoted = false;
    while let Some(c) = chars.next() {
        if quoted {
            match c {
                '"' if chars.peek() == Some(&'"') => {
                    chars.next();
                    cur.push('"');
                }
                '"' => quoted = false,
                other => cur.push(other),
            }
        } else {
            match c {
                '"' if cur.is_empty() => quoted = true,
                ',' => fields.push(std::mem::take(&mut cur)),
                other => cur.push(other),
            }
        }
    }
    if quoted {
        return Err(Error::Parse(format!("unterminated quote in `{line}`")));
    }
    fields.push(cur);
    Ok(fields)
}

/// Serialize result rows with the fixed column order, LF line endings.
pub fn emit_rows_csv(rows: &[ResultRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{ROWS_HEADER}");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            csv_field(r.optimizer.as_str()),
            r.network_size,
            r.repetition,
            r.seed,
            r.wiener,
            r.mu,
            r.e_p,
            r.t_r,
            r.lambda2,
            r.wall_time_ms
        );
    }
    out
}

pub fn parse_rows_csv(text: &str) -> Result<Vec<ResultRow>> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty rows file".into()))?;
    if header != ROWS_HEADER {
        return Err(Error::Parse(format!("unexpected header `{header}`")));
    }
    let mut rows = Vec::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let f = split_record(line)?;
        if f.len() != 10 {
            return Err(Error::Parse(format!("expected 10 fields, got {}", f.len())));
        }
        let num = |i: usize| -> Result<f64> {
            f[i].parse()
                .map_err(|e| Error::Parse(format!("bad number `{}`: {e}", f[i])))
        };
        let int = |i: usize| -> Result<u64> {
            f[i].parse()
                .map_err(|e| Error::Parse(format!("bad integer `{}`: {e}", f[i])))
        };
        rows.push(ResultRow {
            optimizer: OptimizerKind::parse(&f[0])?,
            network_size: int(1)? as usize,
            repetition: int(2)? as usize,
            seed: int(3)?,
            wiener: num(4)?,
            mu: num(5)?,
            e_p: num(6)?,
            t_r: num(7)?,
            lambda2: num(8)?,
            wall_time_ms: int(9)?,
        });
    }
    Ok(rows)
}

pub const TRACES_HEADER: &str = "optimizer,network_size,repetition,generation,best_fitness";

/// One line per (cell, generation) so the file stays a flat CSV.
pub fn emit_traces_csv(traces: &[TraceRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{TRACES_HEADER}");
    for t in traces {
        for (g, v) in t.best_fitness.iter().enumerate() {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                t.optimizer.as_str(),
                t.network_size,
                t.repetition,
                g,
                v
            );
        }
    }
    out
}

pub fn parse_traces_csv(text: &str) -> Result<Vec<TraceRow>> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty traces file".into()))?;
    if header != TRACES_HEADER {
        return Err(Error::Parse(format!("unexpected header `{header}`")));
    }
    let mut traces: Vec<TraceRow> = Vec::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let f = split_record(line)?;
        if f.len() != 5 {
            return Err(Error::Parse(format!("expected 5 fields, got {}", f.len())));
        }
        let optimizer = OptimizerKind::parse(&f[0])?;
        let network_size: usize = f[1]
            .parse()
            .map_err(|e| Error::Parse(format!("bad size: {e}")))?;
        let repetition: usize = f[2]
            .parse()
            .map_err(|e| Error::Parse(format!("bad repetition: {e}")))?;
        let generation: usize = f[3]
            .parse()
            .map_err(|e| Error::Parse(format!("bad generation: {e}")))?;
        let value: f64 = f[4]
            .parse()
            .map_err(|e| Error::Parse(format!("bad fitness: {e}")))?;
        let found = traces.iter_mut().find(|t| {
            t.optimizer == optimizer
                && t.network_size == network_size
                && t.repetition == repetition
        });
        match found {
            Some(t) => {
                if t.best_fitness.len() != generation {
                    return Err(Error::Parse(format!(
                        "generation {generation} out of order for {} N={network_size} rep {repetition}",
                        optimizer.as_str()
                    )));
                }
                t.best_fitness.push(value);
            }
            None => {
                if generation != 0 {
                    return Err(Error::Parse("trace does not start at generation 0".into()));
                }
                traces.push(TraceRow {
                    optimizer,
                    network_size,
                    repetition,
                    best_fitness: vec![value],
                });
            }
        }
    }
    Ok(traces)
}

pub const SUMMARY_HEADER: &str = "optimizer,network_size,metric,mean,std,p_value";

/// One line per summary cell, `-` in the p-value column for the reference
/// optimizer, mirroring the published table layout.
pub fn emit_summary_csv(summaries: &[SummaryRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{SUMMARY_HEADER}");
    for s in summaries {
        let p = match s.p_value {
            Some(p) => p.to_string(),
            None => "-".to_string(),
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            s.optimizer.as_str(),
            s.network_size,
            s.metric.as_str(),
            s.mean,
            s.std,
            p
        );
    }
    out
}

/// Which plot series to derive from a row set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotKind {
    LifetimeVsSize,
    ConnectivityVsSize,
    Convergence,
    LifetimeVsLoad,
}

impl PlotKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lifetime_vs_size" => Ok(PlotKind::LifetimeVsSize),
            "connectivity_vs_size" => Ok(PlotKind::ConnectivityVsSize),
            "convergence" => Ok(PlotKind::Convergence),
            "lifetime_vs_load" => Ok(PlotKind::LifetimeVsLoad),
            other => Err(Error::Parse(format!("unknown plot kind `{other}`"))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PlotKind::LifetimeVsSize => "lifetime_vs_size",
            PlotKind::ConnectivityVsSize => "connectivity_vs_size",
            PlotKind::Convergence => "convergence",
            PlotKind::LifetimeVsLoad => "lifetime_vs_load",
        }
    }
}

fn kinds_in(rows: &[ResultRow]) -> Vec<OptimizerKind> {
    let mut kinds: Vec<OptimizerKind> = Vec::new();
    for r in rows {
        if !kinds.contains(&r.optimizer) {
            kinds.push(r.optimizer);
        }
    }
    kinds.sort_by_key(|k| k.as_str());
    kinds
}

fn sizes_in(rows: &[ResultRow]) -> Vec<usize> {
    let mut sizes: Vec<usize> = rows.iter().map(|r| r.network_size).collect();
    sizes.sort_unstable();
    sizes.dedup();
    sizes
}

fn metric_vs_size_series(rows: &[ResultRow], metric: Metric) -> Result<String> {
    if rows.is_empty() {
        return Err(Error::MissingData("no rows to plot".into()));
    }
    let mut out = String::new();
    for kind in kinds_in(rows) {
        let _ = writeln!(out, "# series optimizer={}", kind.as_str());
        for size in sizes_in(rows) {
            let sample: Vec<f64> = rows
                .iter()
                .filter(|r| r.optimizer == kind && r.network_size == size)
                .map(|r| metric_of(r, metric))
                .collect();
            if sample.is_empty() {
                continue;
            }
            let _ = writeln!(out, "{} {}", size, mean(&sample));
        }
    }
    Ok(out)
}

/// Averaged plot series in plain text: comment-introduced blocks, one
/// `x y` pair per line.
pub fn emit_plot_data(
    rows: &[ResultRow],
    traces: Option<&[TraceRow]>,
    plan: &ExperimentPlan,
    kind: PlotKind,
) -> Result<String> {
    match kind {
        PlotKind::LifetimeVsSize => metric_vs_size_series(rows, Metric::Lifetime),
        PlotKind::ConnectivityVsSize => metric_vs_size_series(rows, Metric::Lambda2),
        PlotKind::Convergence => {
            let traces = traces.ok_or_else(|| {
                Error::MissingData(
                    "convergence plot needs per-generation traces (traces.csv)".into(),
                )
            })?;
            if traces.is_empty() {
                return Err(Error::MissingData("trace file holds no series".into()));
            }
            let mut out = String::new();
            let mut kinds: Vec<OptimizerKind> = Vec::new();
            for t in traces {
                if !kinds.contains(&t.optimizer) {
                    kinds.push(t.optimizer);
                }
            }
            kinds.sort_by_key(|k| k.as_str());
            let mut sizes: Vec<usize> = traces.iter().map(|t| t.network_size).collect();
            sizes.sort_unstable();
            sizes.dedup();
            for &size in &sizes {
                for &kind in &kinds {
                    let cell: Vec<&TraceRow> = traces
                        .iter()
                        .filter(|t| t.optimizer == kind && t.network_size == size)
                        .collect();
                    if cell.is_empty() {
                        continue;
                    }
                    let generations = cell.iter().map(|t| t.best_fitness.len()).min().unwrap();
                    let _ = writeln!(
                        out,
                        "# series optimizer={} network_size={}",
                        kind.as_str(),
                        size
                    );
                    for g in 0..generations {
                        let avg: f64 = cell.iter().map(|t| t.best_fitness[g]).sum::<f64>()
                            / cell.len() as f64;
                        let _ = writeln!(out, "{g} {avg}");
                    }
                }
            }
            Ok(out)
        }
        PlotKind::LifetimeVsLoad => {
            if rows.is_empty() {
                return Err(Error::MissingData("no rows to plot".into()));
            }
            if plan.traffic_levels.len() < 2 {
                return Err(Error::MissingData(
                    "lifetime_vs_load needs at least two traffic levels in the plan".into(),
                ));
            }
            let mut out = String::new();
            for size in sizes_in(rows) {
                for kind in kinds_in(rows) {
                    let cell: Vec<&ResultRow> = rows
                        .iter()
                        .filter(|r| r.optimizer == kind && r.network_size == size)
                        .collect();
                    if cell.is_empty() {
                        continue;
                    }
                    let _ = writeln!(
                        out,
                        "# series optimizer={} network_size={}",
                        kind.as_str(),
                        size
                    );
                    for &level in &plan.traffic_levels {
                        let lifetimes: Vec<f64> = cell
                            .iter()
                            .map(|r| lifetime_at_level(r, plan, level))
                            .collect::<Result<_>>()?;
                        let _ = writeln!(out, "{} {}", level, mean(&lifetimes));
                    }
                }
            }
            Ok(out)
        }
    }
}

/// Serialize a plan to the key-value text format read by [`parse_plan`].
pub fn emit_plan(plan: &ExperimentPlan) -> String {
    let mut out = String::new();
    let join = |v: &[usize]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let joinf = |v: &[f64]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let _ = writeln!(out, "# experiment plan");
    let _ = writeln!(out, "network_sizes = {}", join(&plan.network_sizes));
    let _ = writeln!(out, "repetitions = {}", plan.repetitions);
    let _ = writeln!(out, "traffic_levels = {}", joinf(&plan.traffic_levels));
    let kinds: Vec<&str> = plan.optimizer_kinds.iter().map(|k| k.as_str()).collect();
    let _ = writeln!(out, "optimizers = {}", kinds.join(" "));
    let _ = writeln!(out, "base_seed = {}", plan.base_seed);
    let _ = writeln!(out, "scale_factor = {}", plan.scale_factor);
    let _ = writeln!(out, "generations = {}", plan.generations);
    let _ = writeln!(out, "pop_per_node = {}", plan.pop_per_node);
    let _ = writeln!(out, "deterministic_output = {}", plan.deterministic_output);
    let g = &plan.geometry;
    let _ = writeln!(out, "grid = {} {} {}", g.dims.0, g.dims.1, g.dims.2);
    let _ = writeln!(out, "spacing_m = {}", g.spacing_m);
    let _ = writeln!(out, "comm_range_m = {}", g.comm_range_m);
    let _ = writeln!(out, "bs = {} {} {}", g.bs.x, g.bs.y, g.bs.z);
    for c in &g.chs {
        let _ = writeln!(out, "ch = {} {} {}", c.x, c.y, c.z);
    }
    let _ = writeln!(out, "n_c = {}", g.n_c);
    let _ = writeln!(out, "penalty_beta = {}", plan.penalty_beta);
    let _ = writeln!(out, "lambda2_fprn = {}", plan.lambda2_fprn);
    let _ = writeln!(out, "delta_mu = {}", plan.delta_mu);
    let _ = writeln!(
        out,
        "lambda2_band = {} {}",
        plan.lambda2_band.0, plan.lambda2_band.1
    );
    let e = &plan.energy;
    let _ = writeln!(out, "beta = {}", e.beta);
    let _ = writeln!(out, "eps1 = {}", e.eps1);
    let _ = writeln!(out, "eps2 = {}", e.eps2);
    let _ = writeln!(out, "gamma = {}", e.gamma);
    let _ = writeln!(out, "packet_bits = {}", e.packet_bits);
    let _ = writeln!(out, "j_agg = {}", e.j_agg);
    let _ = writeln!(out, "e_init = {}", e.e_init);
    let _ = writeln!(out, "t_rate = {}", e.t_rate);
    let _ = writeln!(out, "r_rate = {}", e.r_rate);
    let _ = writeln!(out, "a_rate = {}", e.a_rate);
    let _ = writeln!(out, "mp = {}", plan.de.mp);
    let _ = writeln!(out, "cp = {}", plan.de.cp);
    let _ = writeln!(out, "f = {}", plan.de.f);
    let _ = writeln!(out, "alpha_g = {}", plan.gsa.alpha_g);
    let _ = writeln!(out, "lambda_g = {}", plan.gsa.lambda_g);
    let _ = writeln!(out, "epsilon_g = {}", plan.gsa.epsilon_g);
    let _ = writeln!(out, "g0 = {}", plan.gsa.g0);
    let _ = writeln!(out, "kbest = {}", plan.gsa.kbest);
    let _ = writeln!(out, "limit = {}", plan.abc.limit);
    let _ = writeln!(out, "onlooker_fraction = {}", plan.abc.onlooker_fraction);
    out
}

/// Parse a plan file: `key = value` lines with `#` comments; unknown keys
/// are rejected, omitted keys keep their defaults.
pub fn parse_plan(text: &str) -> Result<ExperimentPlan> {
    let mut plan = ExperimentPlan::default();
    let mut chs: Vec<GridVertex> = Vec::new();
    let mut saw_ch = false;

    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected `key = value`, got `{line}`")))?;
        let key = key.trim();
        let value = value.trim();

        let as_f64 = || -> Result<f64> {
            value
                .parse()
                .map_err(|e| Error::Parse(format!("bad number for {key}: {e}")))
        };
        let as_usize = || -> Result<usize> {
            value
                .parse()
                .map_err(|e| Error::Parse(format!("bad integer for {key}: {e}")))
        };
        let as_usize_list = || -> Result<Vec<usize>> {
            value
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|e| Error::Parse(format!("bad integer for {key}: {e}")))
                })
                .collect()
        };
        let as_f64_list = || -> Result<Vec<f64>> {
            value
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|e| Error::Parse(format!("bad number for {key}: {e}")))
                })
                .collect()
        };
        let as_vertex = || -> Result<GridVertex> {
            let parts = as_usize_list()?;
            if parts.len() != 3 {
                return Err(Error::Parse(format!("{key} needs three integers")));
            }
            Ok(GridVertex::new(parts[0] as i64, parts[1] as i64, parts[2] as i64))
        };

        match key {
            "network_sizes" => plan.network_sizes = as_usize_list()?,
            "repetitions" => plan.repetitions = as_usize()?,
            "traffic_levels" => plan.traffic_levels = as_f64_list()?,
            "optimizers" => {
                plan.optimizer_kinds = value
                    .split_whitespace()
                    .map(OptimizerKind::parse)
                    .collect::<Result<_>>()?
            }
            "base_seed" => {
                plan.base_seed = value
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad integer for base_seed: {e}")))?
            }
            "scale_factor" => plan.scale_factor = as_f64()?,
            "generations" => plan.generations = as_usize()?,
            "pop_per_node" => plan.pop_per_node = as_usize()?,
            "deterministic_output" => {
                plan.deterministic_output = match value {
                    "true" => true,
                    "false" => false,
                    other => {
                        return Err(Error::Parse(format!(
                            "deterministic_output must be true or false, got `{other}`"
                        )))
                    }
                }
            }
            "grid" => {
                let parts = as_usize_list()?;
                if parts.len() != 3 {
                    return Err(Error::Parse("grid needs three integers".into()));
                }
                plan.geometry.dims = (parts[0], parts[1], parts[2]);
            }
            "spacing_m" => plan.geometry.spacing_m = as_f64()?,
            "comm_range_m" => plan.geometry.comm_range_m = as_f64()?,
            "bs" => plan.geometry.bs = as_vertex()?,
            "ch" => {
                saw_ch = true;
                chs.push(as_vertex()?);
            }
            "n_c" => plan.geometry.n_c = as_usize()?,
            "penalty_beta" => plan.penalty_beta = as_f64()?,
            "lambda2_fprn" => plan.lambda2_fprn = as_f64()?,
            "delta_mu" => plan.delta_mu = as_f64()?,
            "lambda2_band" => {
                let parts = as_f64_list()?;
                if parts.len() != 2 {
                    return Err(Error::Parse("lambda2_band needs two numbers".into()));
                }
                plan.lambda2_band = (parts[0], parts[1]);
            }
            "beta" => plan.energy.beta = as_f64()?,
            "eps1" => plan.energy.eps1 = as_f64()?,
            "eps2" => plan.energy.eps2 = as_f64()?,
            "gamma" => plan.energy.gamma = as_f64()?,
            "packet_bits" => plan.energy.packet_bits = as_f64()?,
            "j_agg" => plan.energy.j_agg = as_f64()?,
            "e_init" => plan.energy.e_init = as_f64()?,
            "t_rate" => plan.energy.t_rate = as_f64()?,
            "r_rate" => plan.energy.r_rate = as_f64()?,
            "a_rate" => plan.energy.a_rate = as_f64()?,
            "mp" => plan.de.mp = as_f64()?,
            "cp" => plan.de.cp = as_f64()?,
            "f" => plan.de.f = as_f64()?,
            "alpha_g" => plan.gsa.alpha_g = as_f64()?,
            "lambda_g" => plan.gsa.lambda_g = as_f64()?,
            "epsilon_g" => plan.gsa.epsilon_g = as_f64()?,
            "g0" => plan.gsa.g0 = as_f64()?,
            "kbest" => plan.gsa.kbest = as_usize()?,
            "limit" => plan.abc.limit = as_usize()?,
            "onlooker_fraction" => plan.abc.onlooker_fraction = as_f64()?,
            other => return Err(Error::Parse(format!("unknown plan key `{other}`"))),
        }
    }
    if saw_ch {
        plan.geometry.chs = chs;
    }
    plan.validate()?;
    Ok(plan)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_rows() -> Vec<ResultRow> {
        vec![
            ResultRow {
                optimizer: OptimizerKind::De,
                network_size: 20,
                repetition: 0,
                seed: 123,
                wiener: 20.5,
                mu: 1.2345,
                e_p: 0.01,
                t_r: 900.0,
                lambda2: 0.55,
                wall_time_ms: 0,
            },
            ResultRow {
                optimizer: OptimizerKind::Abc,
                network_size: 20,
                repetition: 1,
                seed: 456,
                wiener: 21.25,
                mu: 1.5,
                e_p: 0.011,
                t_r: 850.5,
                lambda2: 0.58,
                wall_time_ms: 0,
            },
        ]
    }

    #[test]
    fn rows_round_trip_exactly() {
        let rows = sample_rows();
        let text = emit_rows_csv(&rows);
        assert!(text.starts_with(ROWS_HEADER));
        assert!(!text.contains('\r'));
        let back = parse_rows_csv(&text).unwrap();
        assert_eq!(rows, back);
    }

    #[test]
    fn empty_rows_emit_header_only() {
        let text = emit_rows_csv(&[]);
        assert_eq!(text, format!("{ROWS_HEADER}\n"));
        assert!(parse_rows_csv(&text).unwrap().is_empty());
    }

    #[test]
    fn quoted_fields_parse() {
        let fields = split_record("a,\"b,c\",\"d\"\"e\"").unwrap();
        assert_eq!(fields, vec!["a", "b,c", "d\"e"]);
    }

    #[test]
    fn traces_round_trip() {
        let traces = vec![TraceRow {
            optimizer: OptimizerKind::Gsa,
            network_size: 20,
            repetition: 0,
            best_fitness: vec![3.0, 2.5, 2.5],
        }];
        let text = emit_traces_csv(&traces);
        let back = parse_traces_csv(&text).unwrap();
        assert_eq!(traces, back);
    }

    #[test]
    fn plan_round_trip() {
        let plan = ExperimentPlan::default();
        let text = emit_plan(&plan);
        let back = parse_plan(&text).unwrap();
        assert_eq!(plan, back);
    }

    #[test]
    fn unknown_plan_key_is_rejected() {
        assert!(parse_plan("bogus_key = 3\n").is_err());
    }

    #[test]
    fn lifetime_vs_size_series_groups_by_optimizer() {
        let text = emit_plot_data(
            &sample_rows(),
            None,
            &ExperimentPlan::default(),
            PlotKind::LifetimeVsSize,
        )
        .unwrap();
        assert!(text.contains("# series optimizer=ABC"));
        assert!(text.contains("# series optimizer=DE"));
        assert!(text.contains("20 900"));
    }

    #[test]
    fn convergence_without_traces_names_the_gap() {
        let err = emit_plot_data(
            &sample_rows(),
            None,
            &ExperimentPlan::default(),
            PlotKind::Convergence,
        )
        .unwrap_err();
        assert!(err.to_string().contains("traces"));
    }

    #[test]
    fn single_repetition_convergence_equals_raw_trace() {
        let traces = vec![TraceRow {
            optimizer: OptimizerKind::De,
            network_size: 20,
            repetition: 0,
            best_fitness: vec![4.0, 3.0, 2.0],
        }];
        let text = emit_plot_data(
            &sample_rows(),
            Some(&traces),
            &ExperimentPlan::default(),
            PlotKind::Convergence,
        )
        .unwrap();
        assert!(text.contains("0 4\n1 3\n2 2\n"));
    }
}
