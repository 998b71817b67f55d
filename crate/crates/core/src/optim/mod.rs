//! Population metaheuristics behind one seeded, deterministic interface:
//! differential evolution, gravitational search and the artificial bee
//! colony baseline. Positions live in the unit box `[0,1]^dim`; the
//! placement objective maps them to relay selections by top-k repair.

mod abc;
mod de;
mod gsa;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::float::Float;
use crate::objective::{evaluate, repair, DecisionVector, ObjectiveContext};

pub use abc::AbcParams;
pub use de::DeParams;
pub use gsa::GsaParams;

/// Which metaheuristic drives a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OptimizerKind {
    De,
    Gsa,
    Abc,
}

impl OptimizerKind {
    pub const ALL: [OptimizerKind; 3] = [OptimizerKind::De, OptimizerKind::Gsa, OptimizerKind::Abc];

    pub fn as_str(self) -> &'static str {
        match self {
            OptimizerKind::De => "DE",
            OptimizerKind::Gsa => "GSA",
            OptimizerKind::Abc => "ABC",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "DE" => Ok(OptimizerKind::De),
            "GSA" => Ok(OptimizerKind::Gsa),
            "ABC" => Ok(OptimizerKind::Abc),
            other => Err(Error::Parse(format!("unknown optimizer `{other}`"))),
        }
    }
}

/// Shared run settings plus one parameter block per optimizer family.
#[derive(Debug, Clone)]
pub struct OptimizerConfig<T: Float> {
    pub population_size: usize,
    pub max_generations: usize,
    pub seed: u64,
    pub de: DeParams<T>,
    pub gsa: GsaParams<T>,
    pub abc: AbcParams,
}

impl<T: Float> OptimizerConfig<T> {
    pub fn new(population_size: usize, max_generations: usize, seed: u64) -> Self {
        Self {
            population_size,
            max_generations,
            seed,
            de: DeParams::default(),
            gsa: GsaParams::default(),
            abc: AbcParams::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.population_size < 4 {
            return Err(Error::Config(
                "population must have at least 4 individuals".into(),
            ));
        }
        self.de.validate()?;
        self.gsa.validate()?;
        self.abc.validate()
    }
}

/// Minimization target over the unit box.
pub trait ObjectiveFn<T: Float>: Sync {
    fn dim(&self) -> usize;
    fn eval(&self, position: &[T]) -> T;
}

/// Shifted sphere benchmark, minimum 0 at the box center.
pub struct CenteredSphere {
    pub dim: usize,
}

impl<T: Float> ObjectiveFn<T> for CenteredSphere {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, position: &[T]) -> T {
        let half = T::from_f64_lit(0.5);
        position.iter().map(|&x| (x - half) * (x - half)).sum()
    }
}

/// Relay-placement objective: repair the continuous position to a feasible
/// selection, then score it. Evaluation failures (which cannot occur for
/// well-formed contexts) score as infeasible.
///
/// When a connectivity band is set, the best-scoring solution whose
/// Fiedler value lies inside the band is tracked on the side: a solution
/// is only accepted as a deployment if its connectivity stays in bounds,
/// while the raw penalized fitness keeps guiding the search.
pub struct PlacementObjective<'a, T: Float> {
    ctx: &'a ObjectiveContext<T>,
    band: Option<(T, T)>,
    best_in_band: std::sync::Mutex<Option<(T, Vec<T>)>>,
}

impl<'a, T: Float> PlacementObjective<'a, T> {
    pub fn new(ctx: &'a ObjectiveContext<T>) -> Self {
        Self { ctx, band: None, best_in_band: std::sync::Mutex::new(None) }
    }

    pub fn with_band(ctx: &'a ObjectiveContext<T>, lo: T, hi: T) -> Self {
        Self { ctx, band: Some((lo, hi)), best_in_band: std::sync::Mutex::new(None) }
    }

    fn take_best_in_band(&self) -> Option<(T, Vec<T>)> {
        self.best_in_band.lock().expect("band tracker poisoned").take()
    }
}

impl<T: Float> ObjectiveFn<T> for PlacementObjective<'_, T> {
    fn dim(&self) -> usize {
        self.ctx.n_c()
    }

    fn eval(&self, position: &[T]) -> T {
        let alpha = repair(position, self.ctx.n_sprn);
        match evaluate(&alpha, self.ctx) {
            Ok(fit) => {
                if let Some((lo, hi)) = self.band {
                    if fit.feasible && fit.lambda2_new >= lo && fit.lambda2_new <= hi {
                        let mut best =
                            self.best_in_band.lock().expect("band tracker poisoned");
                        if best.as_ref().map_or(true, |(v, _)| fit.value < *v) {
                            *best = Some((fit.value, position.to_vec()));
                        }
                    }
                }
                fit.value
            }
            Err(_) => T::infinity(),
        }
    }
}

/// Outcome of a raw function optimization.
#[derive(Debug, Clone)]
pub struct FnTrace<T: Float> {
    /// Best-so-far value after initialization and after each generation;
    /// non-increasing by the elitism contract.
    pub best_per_generation: Vec<T>,
    pub best_position: Vec<T>,
    pub best_value: T,
    pub evaluations: usize,
}

/// Outcome of a placement optimization run.
#[derive(Debug, Clone)]
pub struct RunTrace<T: Float> {
    pub best_fitness_per_generation: Vec<T>,
    pub final_alpha: DecisionVector,
    pub evaluations: usize,
    /// With a connectivity band: whether any evaluated solution fell inside
    /// it (the final selection is the best such solution; otherwise the
    /// run falls back to the best overall and this is false). `None` when
    /// no band was requested.
    pub accepted_in_band: Option<bool>,
}

impl<T: Float> RunTrace<T> {
    pub fn best_value(&self) -> T {
        *self
            .best_fitness_per_generation
            .last()
            .expect("trace has at least the initial generation")
    }
}

pub(crate) fn draw_unit<T: Float>(rng: &mut ChaCha8Rng) -> T {
    T::from_f64_lit(rng.gen::<f64>())
}

pub(crate) fn clamp_unit<T: Float>(x: T) -> T {
    x.max(T::zero()).min(T::one())
}

pub(crate) fn argmin<T: Float>(values: &[T]) -> usize {
    let mut best = 0;
    for i in 1..values.len() {
        if values[i] < values[best] {
            best = i;
        }
    }
    best
}

struct CountingObjective<'a, T: Float, O: ObjectiveFn<T>> {
    inner: &'a O,
    count: std::cell::Cell<usize>,
    _marker: std::marker::PhantomData<T>,
}

impl<T: Float, O: ObjectiveFn<T>> CountingObjective<'_, T, O> {
    fn eval(&self, position: &[T]) -> T {
        self.count.set(self.count.get() + 1);
        self.inner.eval(position)
    }
}

/// Run one seeded optimization: uniform initialization in the unit box,
/// `max_generations` update steps, best-so-far tracking. Deterministic for
/// a fixed seed.
pub fn optimize_fn<T: Float, O: ObjectiveFn<T>>(
    obj: &O,
    cfg: &OptimizerConfig<T>,
    kind: OptimizerKind,
) -> Result<FnTrace<T>> {
    cfg.validate()?;
    let dim = obj.dim();
    if dim == 0 {
        return Err(Error::Config("objective has zero dimensions".into()));
    }
    let n = cfg.population_size;
    let counting = CountingObjective {
        inner: obj,
        count: std::cell::Cell::new(0),
        _marker: std::marker::PhantomData,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut positions: Vec<Vec<T>> =
        (0..n).map(|_| (0..dim).map(|_| draw_unit(&mut rng)).collect()).collect();
    let mut values: Vec<T> = positions.iter().map(|p| counting.eval(p)).collect();

    let mut best_idx = argmin(&values);
    let mut best_value = values[best_idx];
    let mut best_position = positions[best_idx].clone();
    let mut trace = Vec::with_capacity(cfg.max_generations + 1);
    trace.push(best_value);

    let mut velocities = vec![vec![T::zero(); dim]; n];
    let mut stagnation = vec![0usize; n];

    for t in 0..cfg.max_generations {
        match kind {
            OptimizerKind::De => de::generation(
                &mut positions,
                &mut values,
                &cfg.de,
                &mut rng,
                |p| counting.eval(p),
            ),
            OptimizerKind::Gsa => gsa::generation(
                &mut positions,
                &mut velocities,
                &mut values,
                &cfg.gsa,
                t,
                cfg.max_generations,
                &mut rng,
                |p| counting.eval(p),
            ),
            OptimizerKind::Abc => abc::generation(
                &mut positions,
                &mut values,
                &mut stagnation,
                &cfg.abc,
                &mut rng,
                |p| counting.eval(p),
            ),
        }
        best_idx = argmin(&values);
        if values[best_idx] < best_value {
            best_value = values[best_idx];
            best_position = positions[best_idx].clone();
        }
        trace.push(best_value);
    }

    Ok(FnTrace {
        best_per_generation: trace,
        best_position,
        best_value,
        evaluations: counting.count.get(),
    })
}

/// Optimize relay placement and repair the best position into the final
/// selection vector.
pub fn optimize<T: Float>(
    ctx: &ObjectiveContext<T>,
    cfg: &OptimizerConfig<T>,
    kind: OptimizerKind,
) -> Result<RunTrace<T>> {
    optimize_with_band(ctx, cfg, kind, None)
}

/// Like [`optimize`], but the final selection is the best solution whose
/// Fiedler value stayed inside the acceptance band, when one was seen.
pub fn optimize_with_band<T: Float>(
    ctx: &ObjectiveContext<T>,
    cfg: &OptimizerConfig<T>,
    kind: OptimizerKind,
    band: Option<(T, T)>,
) -> Result<RunTrace<T>> {
    let obj = match band {
        Some((lo, hi)) => PlacementObjective::with_band(ctx, lo, hi),
        None => PlacementObjective::new(ctx),
    };
    let t = optimize_fn(&obj, cfg, kind)?;
    let (final_position, accepted_in_band) = match (band, obj.take_best_in_band()) {
        (Some(_), Some((_, position))) => (position, Some(true)),
        (Some(_), None) => (t.best_position, Some(false)),
        (None, _) => (t.best_position, None),
    };
    Ok(RunTrace {
        best_fitness_per_generation: t.best_per_generation,
        final_alpha: repair(&final_position, ctx.n_sprn),
        evaluations: t.evaluations,
        accepted_in_band,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(pop: usize, gens: usize, seed: u64) -> OptimizerConfig<f64> {
        OptimizerConfig::new(pop, gens, seed)
    }

    #[test]
    fn zero_generations_returns_initial_best() {
        let sphere = CenteredSphere { dim: 4 };
        let t = optimize_fn(&sphere, &cfg(10, 0, 7), OptimizerKind::De).unwrap();
        assert_eq!(t.best_per_generation.len(), 1);
        assert_eq!(t.evaluations, 10);
    }

    #[test]
    fn same_seed_gives_identical_traces() {
        let sphere = CenteredSphere { dim: 6 };
        for kind in OptimizerKind::ALL {
            let a = optimize_fn(&sphere, &cfg(12, 30, 42), kind).unwrap();
            let b = optimize_fn(&sphere, &cfg(12, 30, 42), kind).unwrap();
            assert_eq!(a.best_per_generation, b.best_per_generation, "{kind:?}");
            assert_eq!(a.best_position, b.best_position, "{kind:?}");
            assert_eq!(a.evaluations, b.evaluations, "{kind:?}");
        }
    }

    #[test]
    fn traces_are_monotone_non_increasing() {
        let sphere = CenteredSphere { dim: 8 };
        for kind in OptimizerKind::ALL {
            let t = optimize_fn(&sphere, &cfg(15, 60, 3), kind).unwrap();
            for w in t.best_per_generation.windows(2) {
                assert!(w[1] <= w[0], "{kind:?} trace increased");
            }
        }
    }

    #[test]
    fn all_optimizers_respect_unit_bounds() {
        struct Recorder;
        impl ObjectiveFn<f64> for Recorder {
            fn dim(&self) -> usize {
                5
            }
            fn eval(&self, position: &[f64]) -> f64 {
                for &x in position {
                    assert!((0.0..=1.0).contains(&x), "position {x} out of bounds");
                }
                position.iter().map(|x| x * x).sum()
            }
        }
        for kind in OptimizerKind::ALL {
            optimize_fn(&Recorder, &cfg(10, 40, 11), kind).unwrap();
        }
    }

    #[test]
    fn de_improves_sphere_quickly() {
        let sphere = CenteredSphere { dim: 10 };
        let t = optimize_fn(&sphere, &cfg(50, 200, 1), OptimizerKind::De).unwrap();
        assert!(t.best_value < 1e-3, "DE reached only {}", t.best_value);
    }

    #[test]
    fn population_below_four_is_rejected() {
        let sphere = CenteredSphere { dim: 3 };
        assert!(optimize_fn(&sphere, &cfg(3, 5, 1), OptimizerKind::De).is_err());
    }
}
