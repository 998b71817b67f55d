//! Transceiver energy accounting, lifetime-in-rounds formulas and the
//! probabilistic connection model.

use crate::error::{Error, Result};
use crate::float::Float;
use crate::graph::BackboneGraph;
use crate::objective::DecisionVector;

/// Transceiver and traffic constants.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyParams<T: Float> {
    /// Reception energy per bit (J/bit).
    pub beta: T,
    /// Transmit electronics energy per bit (J/bit).
    pub eps1: T,
    /// Transmit amplifier energy per bit per metre^gamma.
    pub eps2: T,
    /// Path-loss exponent.
    pub gamma: T,
    /// Packet length in bits.
    pub packet_bits: T,
    /// Energy per packet aggregation (J).
    pub j_agg: T,
    /// Initial node energy (J).
    pub e_init: T,
    /// Transmitted packets per round.
    pub t_rate: T,
    /// Received packets per round.
    pub r_rate: T,
    /// Aggregated packets per round.
    pub a_rate: T,
}

impl<T: Float> Default for EnergyParams<T> {
    /// Standard simulation constants: 512-bit packets, 50 nJ/bit
    /// transceiver electronics, 10 pJ/bit/m^gamma amplifier, path-loss
    /// exponent 4.8, 5 uJ aggregation, 15.4 J batteries, 100 packets per
    /// round transmitted and received, 10 aggregated.
    fn default() -> Self {
        Self {
            beta: T::from_f64_lit(50e-9),
            eps1: T::from_f64_lit(50e-9),
            eps2: T::from_f64_lit(10e-12),
            gamma: T::from_f64_lit(4.8),
            packet_bits: T::from_f64_lit(512.0),
            j_agg: T::from_f64_lit(50e-7),
            e_init: T::from_f64_lit(15.4),
            t_rate: T::from_f64_lit(100.0),
            r_rate: T::from_f64_lit(100.0),
            a_rate: T::from_f64_lit(10.0),
        }
    }
}

impl<T: Float> EnergyParams<T> {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            self.beta,
            self.eps1,
            self.eps2,
            self.gamma,
            self.packet_bits,
            self.j_agg,
            self.e_init,
            self.t_rate,
            self.r_rate,
            self.a_rate,
        ];
        if fields.iter().any(|&v| v < T::zero() || !v.is_finite()) {
            return Err(Error::Domain("energy parameters must be non-negative".into()));
        }
        if self.gamma < T::from_f64_lit(2.0) {
            return Err(Error::Domain("path-loss exponent must be at least 2".into()));
        }
        Ok(())
    }

    /// Same constants with the transmit/receive packet rates replaced by a
    /// given traffic level (packets per round).
    pub fn with_traffic(&self, packets_per_round: T) -> Self {
        Self {
            t_rate: packets_per_round,
            r_rate: packets_per_round,
            ..self.clone()
        }
    }
}

/// Per-relay traffic description used by load sweeps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrafficProfile<T: Float> {
    /// Relay multiplier: packets received and forwarded on behalf of other
    /// relays, at least 1 for any relay on a path to the base station.
    pub k_per_node: T,
    /// Load level for sweeps (packets per round).
    pub packets_per_round: T,
}

/// Energy drawn by one packet reception.
pub fn j_rx<T: Float>(p: &EnergyParams<T>) -> T {
    p.packet_bits * p.beta
}

/// Energy drawn by one packet transmission over distance `d` metres.
pub fn j_tx<T: Float>(p: &EnergyParams<T>, d: T) -> T {
    p.packet_bits * (p.eps1 + p.eps2 * d.powf(p.gamma))
}

/// One-round residual energy; negative values flag depletion.
pub fn remaining_energy<T: Float>(p: &EnergyParams<T>, d: T) -> T {
    p.e_init - p.t_rate * j_tx(p, d) - p.r_rate * j_rx(p) - p.a_rate * p.j_agg
}

/// Per-round energy consumption of a relay with traffic multiplier `k`,
/// transmitting over the average internode distance `mu_w`.
pub fn node_energy_per_round<T: Float>(p: &EnergyParams<T>, k: T, mu_w: T) -> T {
    k * p.t_rate * p.packet_bits * (p.eps1 + p.eps2 * mu_w.powf(p.gamma))
        + k * p.r_rate * p.packet_bits * p.beta
        + p.a_rate * p.j_agg
}

/// Rounds the first-phase relays stay operational on budget `b1`.
pub fn initial_rounds<T: Float>(b1: T, fprn_e_p: &[T]) -> Result<T> {
    let total: T = fprn_e_p.iter().copied().sum();
    if total <= T::zero() {
        return Err(Error::Domain("total per-round consumption must be positive".into()));
    }
    Ok(b1 / total)
}

/// Rounds until the combined first/second-phase budget is exhausted.
pub fn total_lifetime<T: Float>(b1: T, b2: T, all_e_p: &[T]) -> Result<T> {
    initial_rounds(b1 + b2, all_e_p)
}

/// Additive lifetime form: initial rounds plus a fixed gain per placed
/// second-phase relay.
pub fn lifetime_additive<T: Float>(
    i_rounds: T,
    alpha: &DecisionVector,
    e_r: T,
) -> Result<T> {
    if e_r < T::zero() {
        return Err(Error::Domain("per-relay round gain must be non-negative".into()));
    }
    let placed = T::from_usize(alpha.ones()).expect("count fits scalar");
    Ok(i_rounds + placed * e_r)
}

/// Likelihood that two nodes separated by `d` metres can communicate:
/// `varpi * exp(-mu_att * d^gamma)`.
pub fn connection_probability<T: Float>(d: T, varpi: T, mu_att: T, gamma: T) -> Result<T> {
    if varpi < T::zero() || varpi > T::one() {
        return Err(Error::Domain("varpi must lie in [0, 1]".into()));
    }
    if mu_att < T::zero() {
        return Err(Error::Domain("attenuation must be non-negative".into()));
    }
    Ok(varpi * (-mu_att * d.powf(gamma)).exp())
}

/// Relay traffic multipliers: node `r` relays for every cluster head whose
/// shortest route to the base station can pass through `r`, so nodes closer
/// to the sink carry more load. `k[r] = 1 + |{c : d(c,r) + d(r,bs) = d(c,bs)}|`.
pub fn relay_multipliers(
    graph: &BackboneGraph,
    bs: usize,
    chs: &[usize],
) -> Result<Vec<u64>> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let from_bs = graph.bfs_distances(bs);
    let n = graph.node_count();
    let mut k = vec![1u64; n];
    for &c in chs {
        let from_ch = graph.bfs_distances(c);
        let direct = from_ch[bs].expect("connected graph");
        for r in 0..n {
            if r == c || r == bs {
                continue;
            }
            let via = from_ch[r].expect("connected graph") + from_bs[r].expect("connected graph");
            if via == direct {
                k[r] += 1;
            }
        }
    }
    Ok(k)
}

/// Per-phase energy budgets and the two lifetime figures for one deployment.
#[derive(Debug, Clone, PartialEq)]
pub struct LifetimeReport<T: Float> {
    pub i_rounds: T,
    pub t_rounds: T,
    pub per_node_e_p: Vec<T>,
    pub b1: T,
    pub b2: T,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> EnergyParams<f64> {
        EnergyParams::default()
    }

    #[test]
    fn default_params_validate() {
        assert!(p().validate().is_ok());
    }

    #[test]
    fn j_rx_reference_value() {
        assert!((j_rx(&p()) - 2.56e-5).abs() < 1e-18);
        let mut z = p();
        z.packet_bits = 0.0;
        assert_eq!(j_rx(&z), 0.0);
        let mut z = p();
        z.beta = 0.0;
        assert_eq!(j_rx(&z), 0.0);
    }

    #[test]
    fn j_tx_reference_values() {
        // d = 0 collapses to the electronics term.
        assert!((j_tx(&p(), 0.0) - 2.56e-5).abs() < 1e-18);
        // Independently computed: 512 * (50e-9 + 10e-12 * 10^4.8).
        assert!((j_tx(&p(), 10.0) - 3.4865016037e-4).abs() < 1e-12);
    }

    #[test]
    fn j_tx_is_monotone_and_convex_in_distance() {
        let params = p();
        let mut prev = j_tx(&params, 0.0);
        let mut prev_delta = 0.0;
        for i in 1..=100 {
            let d = i as f64 * 0.5;
            let cur = j_tx(&params, d);
            assert!(cur >= prev, "monotone at d={d}");
            let delta = cur - prev;
            assert!(delta + 1e-18 >= prev_delta, "convex at d={d}");
            prev = cur;
            prev_delta = delta;
        }
    }

    #[test]
    fn remaining_energy_reference_values() {
        let mut zero_rate = p();
        zero_rate.t_rate = 0.0;
        zero_rate.r_rate = 0.0;
        zero_rate.a_rate = 0.0;
        assert_eq!(remaining_energy(&zero_rate, 10.0), 15.4);

        assert!((remaining_energy(&p(), 10.0) - 15.3625249840).abs() < 1e-9);

        let mut drained = p();
        drained.e_init = 0.0;
        assert!(remaining_energy(&drained, 10.0) < 0.0);
    }

    #[test]
    fn node_energy_reference_values() {
        let params = p();
        // k = 0 leaves only the aggregation term.
        assert!((node_energy_per_round(&params, 0.0, 5.0) - 10.0 * 50e-7).abs() < 1e-18);
        // k = 1, mu = 0: electronics plus reception plus aggregation.
        let expect = 100.0 * 512.0 * 50e-9 + 100.0 * 512.0 * 50e-9 + 10.0 * 50e-7;
        assert!((node_energy_per_round(&params, 1.0, 0.0) - expect).abs() < 1e-15);
        // Independently computed at k = 1, mu = 10 m.
        assert!((node_energy_per_round(&params, 1.0, 10.0) - 3.7475016037e-2).abs() < 1e-10);
    }

    #[test]
    fn rounds_formulas() {
        assert_eq!(initial_rounds(0.0, &[2.0]).unwrap(), 0.0);
        assert_eq!(initial_rounds(10.0, &[2.0]).unwrap(), 5.0);
        assert!(initial_rounds(10.0, &[0.0]).is_err());

        // No second-phase relays: both formulas coincide.
        let e_p = [0.5, 0.25];
        let i_r = initial_rounds(3.0, &e_p).unwrap();
        let t_r = total_lifetime(3.0, 0.0, &e_p).unwrap();
        assert_eq!(i_r, t_r);

        // Doubling every per-round consumption halves the lifetime.
        let doubled: Vec<f64> = e_p.iter().map(|x| x * 2.0).collect();
        assert_eq!(total_lifetime(3.0, 0.0, &doubled).unwrap(), t_r / 2.0);
    }

    #[test]
    fn budget_scaling_is_exact() {
        let e_p = [0.3, 0.7, 1.1];
        let base = total_lifetime(2.0, 1.0, &e_p).unwrap();
        let scaled = total_lifetime(2.0 * 8.0, 1.0 * 8.0, &e_p).unwrap();
        assert_eq!(scaled, base * 8.0);
    }

    #[test]
    fn additive_form_consistency() {
        let alpha = DecisionVector::from_bits(vec![true, false, true, true, false]);
        assert_eq!(
            lifetime_additive(7.0, &DecisionVector::zeros(5), 2.0).unwrap(),
            7.0
        );
        assert_eq!(lifetime_additive(7.0, &alpha, 2.0).unwrap(), 13.0);

        // Defining the per-relay gain from the two lifetime figures makes
        // the additive and ratio forms agree by construction.
        let i_r = 10.0;
        let t_r = 19.0;
        let e_r = (t_r - i_r) / alpha.ones() as f64;
        let recon = lifetime_additive(i_r, &alpha, e_r).unwrap();
        assert!((recon - t_r).abs() / t_r < 1e-12);
    }

    #[test]
    fn connection_probability_reference_values() {
        assert_eq!(connection_probability(0.0, 0.7, 0.3, 2.0).unwrap(), 0.7);
        assert_eq!(connection_probability(123.0, 0.7, 0.0, 2.0).unwrap(), 0.7);
        let v = connection_probability(10.0, 1.0, 0.01, 2.0).unwrap();
        assert!((v - (-1.0f64).exp()).abs() < 1e-12);
        assert!(connection_probability(1.0, 1.5, 0.1, 2.0).is_err());
    }

    #[test]
    fn connection_probability_is_bounded_and_non_increasing() {
        let mut prev = f64::INFINITY;
        for i in 0..50 {
            let d = i as f64 * 3.0;
            let v = connection_probability(d, 0.9, 0.002, 3.0).unwrap();
            assert!(v >= 0.0 && v <= 0.9);
            assert!(v <= prev);
            prev = v;
        }
    }

    #[test]
    fn relay_multipliers_favor_nodes_near_the_sink() {
        // Path: ch(0) - r1(1) - r2(2) - bs(3). Both relays sit on the only
        // route, so each relays for the single cluster head.
        let g = BackboneGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let k = relay_multipliers(&g, 3, &[0]).unwrap();
        assert_eq!(k[1], 2);
        assert_eq!(k[2], 2);

        // A star: no node lies strictly between a leaf and the hub.
        let star = BackboneGraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let k = relay_multipliers(&star, 0, &[1, 2]).unwrap();
        assert_eq!(k[3], 1);
    }
}
