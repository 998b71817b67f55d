//! Penalized placement objective: average internode distance of the
//! augmented backbone plus a soft connectivity penalty, over binary
//! selection vectors with a fixed relay budget.

use std::cmp::Ordering;

use crate::deploy::{enumerate_candidates, mst_backbone, update_laplacian, Backbone, CandidateSet, SeedLayout};
use crate::error::{Error, Result};
use crate::float::Float;
use crate::grid::GridSpec;
use crate::laplacian::{build_laplacian, LaplacianMatrix};
use crate::spectral::{average_distance, spectral_summary, wiener_spectral};

/// Binary selection over candidate vertices: bit `i` set means a
/// second-phase relay is placed on candidate `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionVector {
    bits: Vec<bool>,
}

impl DecisionVector {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn zeros(len: usize) -> Self {
        Self { bits: vec![false; len] }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Indices of set bits, ascending.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
    }
}

/// Everything a fitness evaluation needs, shared read-only across a
/// population.
#[derive(Debug, Clone)]
pub struct ObjectiveContext<T: Float> {
    pub l_initial: LaplacianMatrix<T>,
    pub candidates: CandidateSet,
    pub backbone: Backbone,
    pub grid: GridSpec<T>,
    /// Weight of the soft connectivity penalty.
    pub penalty_beta: T,
    /// Connectivity level the augmented backbone must not fall below.
    pub lambda2_fprn: T,
    /// Constant distance deviation added to the average internode distance.
    pub delta_mu: T,
    /// Exact number of second-phase relays to place.
    pub n_sprn: usize,
    pub tol_eig: T,
}

impl<T: Float> ObjectiveContext<T> {
    /// Assemble a context from a seed layout: run the first deployment
    /// phase, enumerate candidates and build the initial Laplacian.
    pub fn from_layout(
        layout: &SeedLayout,
        grid: &GridSpec<T>,
        n_c: usize,
        n_sprn: usize,
        penalty_beta: T,
        lambda2_fprn: T,
        delta_mu: T,
    ) -> Result<Self> {
        if penalty_beta < T::zero() {
            return Err(Error::Domain("penalty weight must be non-negative".into()));
        }
        if lambda2_fprn <= T::zero() || lambda2_fprn > T::one() {
            return Err(Error::Domain("connectivity target must lie in (0, 1]".into()));
        }
        let backbone = mst_backbone(layout, grid)?;
        let candidates = enumerate_candidates(&backbone, grid, n_c)?;
        if n_sprn > n_c {
            return Err(Error::Config(format!(
                "cannot place {n_sprn} relays on {n_c} candidate vertices"
            )));
        }
        let l_initial = build_laplacian(backbone.graph());
        Ok(Self {
            l_initial,
            candidates,
            backbone,
            grid: grid.clone(),
            penalty_beta,
            lambda2_fprn,
            delta_mu,
            n_sprn,
            tol_eig: T::DEFAULT_EIG_TOL,
        })
    }

    pub fn n_c(&self) -> usize {
        self.candidates.len()
    }
}

/// One fitness evaluation: composite value plus its components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fitness<T: Float> {
    /// `mu_w + penalty`, or infinity for a disconnected deployment.
    pub value: T,
    pub mu_w: T,
    pub lambda2_new: T,
    pub penalty: T,
    pub feasible: bool,
}

impl<T: Float> Fitness<T> {
    fn infeasible(lambda2_new: T) -> Self {
        Self {
            value: T::infinity(),
            mu_w: T::infinity(),
            lambda2_new,
            penalty: T::zero(),
            feasible: false,
        }
    }
}

fn fitness_from_laplacian<T: Float>(
    l: &LaplacianMatrix<T>,
    ctx: &ObjectiveContext<T>,
) -> Result<Fitness<T>> {
    let summary = spectral_summary(l, ctx.tol_eig)?;
    let lambda2_new = summary.fiedler();
    if !summary.is_connected() {
        // Death penalty: the spectral Wiener index is undefined at zero
        // connectivity, so no finite surrogate is faithful.
        return Ok(Fitness::infeasible(lambda2_new));
    }
    let wiener = wiener_spectral(&summary)?;
    let mu_w = average_distance(wiener, l.dim(), ctx.delta_mu)?;
    let shortfall = ctx.lambda2_fprn - lambda2_new;
    let penalty = ctx.penalty_beta * shortfall.max(T::zero());
    Ok(Fitness {
        value: mu_w + penalty,
        mu_w,
        lambda2_new,
        penalty,
        feasible: true,
    })
}

/// Evaluate a selection vector through the incremental Laplacian update.
pub fn evaluate<T: Float>(alpha: &DecisionVector, ctx: &ObjectiveContext<T>) -> Result<Fitness<T>> {
    if alpha.ones() != ctx.n_sprn {
        return Err(Error::Domain(format!(
            "selection has {} relays, budget is {} (repair must run first)",
            alpha.ones(),
            ctx.n_sprn
        )));
    }
    let l = update_laplacian(&ctx.l_initial, alpha, &ctx.candidates, &ctx.backbone, &ctx.grid)?;
    fitness_from_laplacian(&l, ctx)
}

/// Evaluate by rebuilding the augmented backbone and its Laplacian from
/// scratch. Same objective, independent of the incremental-update path;
/// used by the exhaustive oracle and cross-checked in tests.
pub fn evaluate_rebuilt<T: Float>(
    alpha: &DecisionVector,
    ctx: &ObjectiveContext<T>,
) -> Result<Fitness<T>> {
    if alpha.ones() != ctx.n_sprn {
        return Err(Error::Domain(format!(
            "selection has {} relays, budget is {}",
            alpha.ones(),
            ctx.n_sprn
        )));
    }
    let selected = ctx.candidates.selected(alpha);
    let augmented = ctx.backbone.with_sprns(&selected, &ctx.grid);
    let l = build_laplacian(augmented.graph());
    fitness_from_laplacian(&l, ctx)
}

/// Map a raw continuous position to a feasible selection: set the bits of
/// the `n_sprn` largest components, breaking ties by lowest index.
pub fn repair<T: Float>(raw: &[T], n_sprn: usize) -> DecisionVector {
    assert!(n_sprn <= raw.len(), "budget exceeds vector length");
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by(|&a, &b| {
        raw[b]
            .partial_cmp(&raw[a])
            .unwrap_or(Ordering::Equal)
            .then(a.cmp(&b))
    });
    let mut bits = vec![false; raw.len()];
    for &i in order.iter().take(n_sprn) {
        bits[i] = true;
    }
    DecisionVector::from_bits(bits)
}

const ENUMERATION_BUDGET: u64 = 1_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u128 = 1;
    for i in 0..k {
        out = out.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    out
}

/// Advance `combo` to the next k-subset of `0..n` in lexicographic order.
/// Returns false when the last subset has been consumed.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in (i + 1)..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Global optimum by full enumeration of all feasible selections. Refuses
/// search spaces above one million combinations.
pub fn exhaustive_best<T: Float>(
    ctx: &ObjectiveContext<T>,
) -> Result<(DecisionVector, Fitness<T>)> {
    let n_c = ctx.n_c();
    let k = ctx.n_sprn;
    if binomial(n_c, k) > ENUMERATION_BUDGET as u128 {
        return Err(Error::EnumerationBudget { n_c, k, budget: ENUMERATION_BUDGET });
    }

    let mut best: Option<(DecisionVector, Fitness<T>)> = None;
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        let mut bits = vec![false; n_c];
        for &i in &combo {
            bits[i] = true;
        }
        let alpha = DecisionVector::from_bits(bits);
        let fit = evaluate_rebuilt(&alpha, ctx)?;
        if best.as_ref().map_or(true, |(_, b)| fit.value < b.value) {
            best = Some((alpha, fit));
        }
        if !next_combination(&mut combo, n_c) {
            break;
        }
    }
    best.ok_or_else(|| Error::Domain("empty search space".into()))
}
