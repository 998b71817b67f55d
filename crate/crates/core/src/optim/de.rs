//! Differential evolution: best/1 mutation gated by a mutation
//! probability, binomial per-dimension crossover, greedy selection.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{clamp_unit, draw_unit};
use crate::error::{Error, Result};
use crate::float::Float;

/// Mutation probability, crossover probability and difference weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeParams<T: Float> {
    pub mp: T,
    pub cp: T,
    pub f: T,
}

impl<T: Float> Default for DeParams<T> {
    fn default() -> Self {
        Self {
            mp: T::from_f64_lit(0.9),
            cp: T::from_f64_lit(0.9),
            f: T::from_f64_lit(0.5),
        }
    }
}

impl<T: Float> DeParams<T> {
    pub fn validate(&self) -> Result<()> {
        let unit = T::zero()..=T::one();
        if !unit.contains(&self.mp) || !unit.contains(&self.cp) {
            return Err(Error::Config("MP and CP must lie in [0, 1]".into()));
        }
        if self.f <= T::zero() {
            return Err(Error::Config("difference weight F must be positive".into()));
        }
        Ok(())
    }
}

/// The best/1 mutant: `x_i + F (x_best - x_i) + F (x_r1 - x_r2)`.
pub(crate) fn mutant<T: Float>(x_i: &[T], x_best: &[T], x_r1: &[T], x_r2: &[T], f: T) -> Vec<T> {
    x_i.iter()
        .zip(x_best)
        .zip(x_r1.iter().zip(x_r2))
        .map(|((&xi, &xb), (&r1, &r2))| xi + f * (xb - xi) + f * (r1 - r2))
        .collect()
}

/// One synchronous generation: donors come from the entering population.
/// Each individual mutates with probability MP; the trial vector takes
/// mutant components with probability CP per dimension (one dimension is
/// always taken) and replaces its parent when not worse.
pub(crate) fn generation<T: Float>(
    positions: &mut [Vec<T>],
    values: &mut [T],
    params: &DeParams<T>,
    rng: &mut ChaCha8Rng,
    mut eval: impl FnMut(&[T]) -> T,
) {
    let n = positions.len();
    let dim = positions[0].len();
    let snapshot: Vec<Vec<T>> = positions.to_vec();
    let best = super::argmin(values);
    let x_best = snapshot[best].clone();

    for i in 0..n {
        if draw_unit::<T>(rng) >= params.mp {
            continue;
        }
        let r1 = loop {
            let r = rng.gen_range(0..n);
            if r != i {
                break r;
            }
        };
        let r2 = loop {
            let r = rng.gen_range(0..n);
            if r != i && r != r1 {
                break r;
            }
        };
        let v = mutant(&snapshot[i], &x_best, &snapshot[r1], &snapshot[r2], params.f);

        let j_rand = rng.gen_range(0..dim);
        let mut trial = snapshot[i].clone();
        for d in 0..dim {
            if d == j_rand || draw_unit::<T>(rng) < params.cp {
                trial[d] = clamp_unit(v[d]);
            }
        }

        let value = eval(&trial);
        if value <= values[i] {
            positions[i] = trial;
            values[i] = value;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mutant_is_fixed_point_when_donors_coincide() {
        let x = vec![0.3, 0.7];
        let v = mutant(&x, &x, &[0.5, 0.5], &[0.5, 0.5], 0.5);
        assert_eq!(v, x);
    }

    #[test]
    fn zero_weight_ignores_donors() {
        let x = vec![0.2, 0.9];
        let v = mutant(&x, &[0.9, 0.1], &[0.4, 0.4], &[0.6, 0.6], 0.0);
        assert_eq!(v, x);
    }

    #[test]
    fn mutant_matches_hand_computed_arithmetic() {
        // Two dimensions, F = 0.5, three distinct donors.
        let x_i = [0.2, 0.4];
        let x_b = [0.8, 0.6];
        let x_1 = [0.1, 0.9];
        let x_2 = [0.5, 0.3];
        let v = mutant(&x_i, &x_b, &x_1, &x_2, 0.5f64);
        // 0.2 + 0.5*(0.8-0.2) + 0.5*(0.1-0.5) = 0.2 + 0.3 - 0.2 = 0.3
        // 0.4 + 0.5*(0.6-0.4) + 0.5*(0.9-0.3) = 0.4 + 0.1 + 0.3 = 0.8
        assert!((v[0] - 0.3).abs() < 1e-15);
        assert!((v[1] - 0.8).abs() < 1e-15);
    }
}
