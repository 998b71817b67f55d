//! Summary statistics and the Welch two-sample t-test used to compare
//! optimizer lifetime samples.

use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::error::{Error, Result};
use crate::float::Float;

pub fn mean<T: Float>(sample: &[T]) -> T {
    let n = T::from_usize(sample.len()).expect("count fits scalar");
    sample.iter().copied().sum::<T>() / n
}

/// Sample standard deviation (n - 1 denominator).
pub fn sample_std<T: Float>(sample: &[T]) -> T {
    let n = sample.len();
    assert!(n >= 2, "sample standard deviation needs at least two values");
    let m = mean(sample);
    let ss: T = sample.iter().map(|&x| (x - m) * (x - m)).sum();
    (ss / T::from_usize(n - 1).expect("count fits scalar")).sqrt()
}

/// Welch two-sample t-test result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WelchTest {
    pub t_statistic: f64,
    pub degrees_of_freedom: f64,
    /// Two-sided p-value.
    pub p_value: f64,
}

/// Unequal-variance t-test of the null hypothesis that two independent
/// samples share a mean. Degenerate zero-variance pairs resolve to p = 1
/// for equal means and p = 0 otherwise.
pub fn welch_t_test<T: Float>(a: &[T], b: &[T]) -> Result<WelchTest> {
    if a.len() < 2 || b.len() < 2 {
        return Err(Error::Domain("welch test needs at least two values per sample".into()));
    }
    let (ma, mb) = (mean(a).to_f64_lossy(), mean(b).to_f64_lossy());
    let (sa, sb) = (sample_std(a).to_f64_lossy(), sample_std(b).to_f64_lossy());
    let (na, nb) = (a.len() as f64, b.len() as f64);

    let va = sa * sa / na;
    let vb = sb * sb / nb;
    let denom = (va + vb).sqrt();
    if denom == 0.0 {
        let equal = ma == mb;
        return Ok(WelchTest {
            t_statistic: if equal { 0.0 } else { f64::INFINITY },
            degrees_of_freedom: na + nb - 2.0,
            p_value: if equal { 1.0 } else { 0.0 },
        });
    }

    let t = (ma - mb) / denom;
    let df = (va + vb).powi(2) / (va.powi(2) / (na - 1.0) + vb.powi(2) / (nb - 1.0));
    let dist = StudentsT::new(0.0, 1.0, df)
        .map_err(|e| Error::Domain(format!("t distribution: {e}")))?;
    let p = 2.0 * (1.0 - dist.cdf(t.abs()));
    Ok(WelchTest {
        t_statistic: t,
        degrees_of_freedom: df,
        p_value: p.clamp(0.0, 1.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mean_and_std_match_reference_sample() {
        // Published lifetime sample whose summary cell is 4.2074 +/- 0.6504.
        let sample = [
            4.5307, 4.1338, 2.8554, 4.4947, 5.0730, 4.1346, 3.9138, 4.5233f64,
        ];
        assert!((mean(&sample) - 4.2074).abs() < 1e-4);
        assert!((sample_std(&sample) - 0.6504).abs() < 1e-4);
    }

    #[test]
    fn identical_samples_are_not_significant() {
        let a = [1.0, 2.0, 3.0, 4.0f64];
        let t = welch_t_test(&a, &a).unwrap();
        assert!(t.p_value >= 0.99, "p = {}", t.p_value);
    }

    #[test]
    fn widely_separated_samples_are_significant() {
        let a = [1.0, 1.1, 0.9, 1.05, 0.95f64];
        let shift = 10.0 * sample_std(&a);
        let b: Vec<f64> = a.iter().map(|x| x + shift).collect();
        let t = welch_t_test(&a, &b).unwrap();
        assert!(t.p_value < 1e-4, "p = {}", t.p_value);
    }

    #[test]
    fn zero_variance_pairs_resolve_deterministically() {
        let a = [2.0, 2.0, 2.0f64];
        let b = [3.0, 3.0, 3.0f64];
        assert_eq!(welch_t_test(&a, &a).unwrap().p_value, 1.0);
        assert_eq!(welch_t_test(&a, &b).unwrap().p_value, 0.0);
    }

    #[test]
    fn welch_matches_textbook_example() {
        // Classic unequal-variance pair; reference values computed with an
        // independent statistics package.
        let a = [27.5, 21.0, 19.0, 23.6, 17.0, 17.9, 16.9, 20.1, 21.9, 22.6, 23.1, 19.6f64];
        let b = [27.1, 22.0, 20.8, 23.4, 23.4, 23.5, 25.8, 22.0, 24.8, 20.2, 21.9, 22.1f64];
        let t = welch_t_test(&a, &b).unwrap();
        assert!((t.t_statistic - (-2.089580)).abs() < 1e-4, "t = {}", t.t_statistic);
        assert!((t.degrees_of_freedom - 18.9378).abs() < 1e-3, "df = {}", t.degrees_of_freedom);
        assert!((t.p_value - 0.050388).abs() < 1e-4, "p = {}", t.p_value);
    }
}
