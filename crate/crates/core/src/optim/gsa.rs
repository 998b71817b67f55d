//! Gravitational search: fitness-normalized masses, forces from the K
//! heaviest agents with per-pair random weights, exponentially decaying
//! gravitational constant.

use rand_chacha::ChaCha8Rng;

use super::{clamp_unit, draw_unit};
use crate::error::{Error, Result};
use crate::float::Float;

/// Decay rate, recorded division speed, distance regularizer, initial
/// gravitational constant and elite set size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GsaParams<T: Float> {
    pub alpha_g: T,
    /// Division speed. Recorded configuration only: it maps to no update
    /// rule in this formulation and is never read by the algorithm.
    pub lambda_g: T,
    pub epsilon_g: T,
    pub g0: T,
    pub kbest: usize,
}

impl<T: Float> Default for GsaParams<T> {
    fn default() -> Self {
        Self {
            alpha_g: T::from_f64_lit(7.0),
            lambda_g: T::from_f64_lit(6.0),
            epsilon_g: T::from_f64_lit(1e-5),
            g0: T::from_f64_lit(1000.0),
            kbest: 4,
        }
    }
}

impl<T: Float> GsaParams<T> {
    pub fn validate(&self) -> Result<()> {
        if self.g0 <= T::zero() {
            return Err(Error::Config("initial gravitational constant must be positive".into()));
        }
        if self.epsilon_g < T::zero() {
            return Err(Error::Config("distance regularizer must be non-negative".into()));
        }
        if self.kbest == 0 {
            return Err(Error::Config("kbest must be at least 1".into()));
        }
        Ok(())
    }
}

/// Gravitational constant at generation `t` of `t_max`.
pub(crate) fn gravitational_constant<T: Float>(params: &GsaParams<T>, t: usize, t_max: usize) -> T {
    let ratio = if t_max == 0 {
        T::zero()
    } else {
        T::from_usize(t).expect("generation fits scalar")
            / T::from_usize(t_max).expect("generation fits scalar")
    };
    params.g0 * (-params.alpha_g * ratio).exp()
}

/// Normalized masses from fitness: the best agent gets mass share 1 before
/// normalization, the worst 0. Infeasible (infinite) fitness gets zero
/// mass; a degenerate all-equal generation gets uniform masses.
fn masses<T: Float>(values: &[T]) -> Vec<T> {
    let n = values.len();
    let finite: Vec<T> = values.iter().copied().filter(|v| v.is_finite()).collect();
    if finite.is_empty() {
        return vec![T::one() / T::from_usize(n).expect("count fits scalar"); n];
    }
    let best = finite.iter().copied().fold(T::infinity(), T::min);
    let worst = finite.iter().copied().fold(T::neg_infinity(), T::max);
    if worst == best {
        return vec![T::one() / T::from_usize(n).expect("count fits scalar"); n];
    }
    let raw: Vec<T> = values
        .iter()
        .map(|&v| if v.is_finite() { (worst - v) / (worst - best) } else { T::zero() })
        .collect();
    let total: T = raw.iter().copied().sum();
    if total <= T::zero() {
        return vec![T::one() / T::from_usize(n).expect("count fits scalar"); n];
    }
    raw.into_iter().map(|m| m / total).collect()
}

/// One generation: accelerations from the K heaviest agents, velocity
/// update with per-dimension random inertia, position step, re-evaluation.
#[allow(clippy::too_many_arguments)]
pub(crate) fn generation<T: Float>(
    positions: &mut [Vec<T>],
    velocities: &mut [Vec<T>],
    values: &mut [T],
    params: &GsaParams<T>,
    t: usize,
    t_max: usize,
    rng: &mut ChaCha8Rng,
    mut eval: impl FnMut(&[T]) -> T,
) {
    let n = positions.len();
    let dim = positions[0].len();
    let g = gravitational_constant(params, t, t_max);
    let m = masses(values);

    // The K agents with the best fitness exert force.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        values[a]
            .partial_cmp(&values[b])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });
    let kbest = &order[..params.kbest.min(n)];

    let mut accelerations = vec![vec![T::zero(); dim]; n];
    for i in 0..n {
        for &j in kbest {
            if j == i {
                continue;
            }
            let dist2: T = positions[i]
                .iter()
                .zip(&positions[j])
                .map(|(&a, &b)| (a - b) * (a - b))
                .sum();
            let dist = dist2.sqrt();
            let weight = draw_unit::<T>(rng);
            // Mass of the attracted agent cancels between force and
            // acceleration, leaving the attractor's mass.
            let scale = weight * g * m[j] / (dist + params.epsilon_g);
            for d in 0..dim {
                accelerations[i][d] += scale * (positions[j][d] - positions[i][d]);
            }
        }
    }

    for i in 0..n {
        for d in 0..dim {
            velocities[i][d] = draw_unit::<T>(rng) * velocities[i][d] + accelerations[i][d];
            positions[i][d] = clamp_unit(positions[i][d] + velocities[i][d]);
        }
        values[i] = eval(&positions[i]);
    }
}
