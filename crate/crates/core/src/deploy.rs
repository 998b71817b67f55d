//! Two-phase deployment machinery: seeded base station / cluster-head
//! layouts, the greedy first-phase relay chain construction, candidate
//! enumeration for second-phase relays, and the incremental Laplacian
//! update for a selection vector.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::float::Float;
use crate::graph::BackboneGraph;
use crate::grid::{GridSpec, GridVertex};
use crate::laplacian::LaplacianMatrix;
use crate::objective::DecisionVector;

/// Backbone device role.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Base station (sink).
    Bs,
    /// Cluster head.
    Ch,
    /// First-phase relay node (placed by the chain-growing phase).
    Fprn,
    /// Second-phase relay node (placed by the optimizer).
    Sprn,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Bs => "BS",
            Role::Ch => "CH",
            Role::Fprn => "FPRN",
            Role::Sprn => "SPRN",
        }
    }
}

/// A placed backbone device.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Device {
    pub vertex: GridVertex,
    pub role: Role,
}

/// Fixed positions of the base station and cluster heads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedLayout {
    bs: GridVertex,
    chs: Vec<GridVertex>,
}

impl SeedLayout {
    pub fn new(bs: GridVertex, chs: Vec<GridVertex>) -> Result<Self> {
        if chs.is_empty() {
            return Err(Error::Domain("layout needs at least one cluster head".into()));
        }
        let mut seen = BTreeSet::new();
        seen.insert(bs);
        for &c in &chs {
            if !seen.insert(c) {
                return Err(Error::Domain(format!(
                    "duplicate seed vertex ({}, {}, {})",
                    c.x, c.y, c.z
                )));
            }
        }
        Ok(Self { bs, chs })
    }

    pub fn bs(&self) -> GridVertex {
        self.bs
    }

    pub fn chs(&self) -> &[GridVertex] {
        &self.chs
    }

    fn validate_against<T: Float>(&self, grid: &GridSpec<T>) -> Result<()> {
        for &v in std::iter::once(&self.bs).chain(self.chs.iter()) {
            if !grid.contains(v) {
                return Err(Error::Domain(format!(
                    "seed vertex ({}, {}, {}) outside grid",
                    v.x, v.y, v.z
                )));
            }
        }
        Ok(())
    }
}

/// Connected backbone after the first deployment phase: base station,
/// cluster heads and first-phase relays, plus the induced radio graph.
/// Node indices follow device order (BS first, then CHs, then FPRNs).
#[derive(Debug, Clone)]
pub struct Backbone {
    devices: Vec<Device>,
    graph: BackboneGraph,
}

impl Backbone {
    pub fn devices(&self) -> &[Device] {
        &self.devices
    }

    pub fn graph(&self) -> &BackboneGraph {
        &self.graph
    }

    pub fn device_count(&self) -> usize {
        self.devices.len()
    }

    pub fn bs_index(&self) -> usize {
        0
    }

    pub fn ch_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.devices
            .iter()
            .enumerate()
            .filter(|(_, d)| d.role == Role::Ch)
            .map(|(i, _)| i)
    }

    pub fn fprn_count(&self) -> usize {
        self.devices.iter().filter(|d| d.role == Role::Fprn).count()
    }

    pub fn occupied(&self) -> BTreeSet<GridVertex> {
        self.devices.iter().map(|d| d.vertex).collect()
    }

    /// New backbone with second-phase relays appended at the given grid
    /// vertices; the radio graph is rebuilt from scratch over all devices.
    pub fn with_sprns<T: Float>(&self, sprns: &[GridVertex], grid: &GridSpec<T>) -> Backbone {
        let mut devices = self.devices.clone();
        devices.extend(sprns.iter().map(|&vertex| Device { vertex, role: Role::Sprn }));
        let graph = induced_graph(&devices, grid);
        Backbone { devices, graph }
    }

    /// Dump in the device-list text format: one `role x y z` line per device.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for d in &self.devices {
            let _ = writeln!(
                out,
                "{} {} {} {}",
                d.role.as_str(),
                d.vertex.x,
                d.vertex.y,
                d.vertex.z
            );
        }
        out
    }
}

/// Radio graph over a device list: two devices are linked iff their
/// physical distance is within the uniform communication range.
fn induced_graph<T: Float>(devices: &[Device], grid: &GridSpec<T>) -> BackboneGraph {
    let n = devices.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if grid.in_range(devices[i].vertex, devices[j].vertex) {
                edges.push((i, j));
            }
        }
    }
    let coords = devices.iter().map(|d| d.vertex).collect();
    BackboneGraph::with_coords(n, &edges, coords).expect("induced graph is structurally valid")
}

/// Interior vertices of a monotone axis-aligned shortest grid path from `u`
/// to `v` (x leg first, then y, then z). When the communication range equals
/// the grid spacing this is the minimum relay chain: length is the Manhattan
/// distance minus one.
pub fn rn_chain<T: Float>(u: GridVertex, v: GridVertex, _grid: &GridSpec<T>) -> Vec<GridVertex> {
    let mut chain = Vec::new();
    let mut cur = u;
    let mut step = |cur: &mut GridVertex, axis: fn(&mut GridVertex) -> &mut i64, target: i64| {
        while *axis(cur) != target {
            *axis(cur) += (target - *axis(cur)).signum();
            chain.push(*cur);
        }
    };
    step(&mut cur, |p| &mut p.x, v.x);
    step(&mut cur, |p| &mut p.y, v.y);
    step(&mut cur, |p| &mut p.z, v.z);
    // The walk ends on `v` itself; only interior vertices form the chain.
    if chain.last() == Some(&v) {
        chain.pop();
    }
    chain
}

/// First-phase deployment: connect the seed devices with the fewest relay
/// nodes by greedily attaching, at each step, the isolated seed whose relay
/// chain to the current component is cheapest.
pub fn mst_backbone<T: Float>(layout: &SeedLayout, grid: &GridSpec<T>) -> Result<Backbone> {
    layout.validate_against(grid)?;

    let seeds: Vec<GridVertex> = std::iter::once(layout.bs)
        .chain(layout.chs.iter().copied())
        .collect();

    // Component vertex set; starts from the closest seed pair.
    let mut component: BTreeSet<GridVertex> = BTreeSet::new();
    let mut fprns: Vec<GridVertex> = Vec::new();
    let mut remaining: Vec<GridVertex> = Vec::new();

    if seeds.len() == 1 {
        component.insert(seeds[0]);
    } else {
        let mut best: Option<(u64, GridVertex, GridVertex)> = None;
        for i in 0..seeds.len() {
            for j in (i + 1)..seeds.len() {
                let (a, b) = (seeds[i].min(seeds[j]), seeds[i].max(seeds[j]));
                let key = (a.dist2(b), a, b);
                if best.map_or(true, |(d, x, y)| key < (d, x, y)) {
                    best = Some(key);
                }
            }
        }
        let (_, a, b) = best.expect("at least one seed pair");
        component.insert(a);
        component.insert(b);
        for rn in rn_chain(a, b, grid) {
            if component.insert(rn) {
                fprns.push(rn);
            }
        }
        remaining = seeds.iter().copied().filter(|s| *s != a && *s != b).collect();
    }

    while !remaining.is_empty() {
        // For every isolated seed, the cheapest chain goes to its closest
        // component vertex (Euclidean, lexicographic tie-break); pick the
        // seed with the smallest chain.
        let mut best: Option<(usize, GridVertex, usize)> = None; // (cost, seed, idx)
        for (idx, &s) in remaining.iter().enumerate() {
            let target = component
                .iter()
                .copied()
                .min_by_key(|&c| (s.dist2(c), c))
                .expect("component is non-empty");
            let cost = rn_chain(s, target, grid).len();
            if best.map_or(true, |(c, v, _)| (cost, s) < (c, v)) {
                best = Some((cost, s, idx));
            }
        }
        let (_, seed, idx) = best.expect("remaining is non-empty");
        let target = component
            .iter()
            .copied()
            .min_by_key(|&c| (seed.dist2(c), c))
            .expect("component is non-empty");
        for rn in rn_chain(seed, target, grid) {
            if component.insert(rn) {
                fprns.push(rn);
            }
        }
        component.insert(seed);
        remaining.remove(idx);
    }

    let mut devices = vec![Device { vertex: layout.bs, role: Role::Bs }];
    devices.extend(layout.chs.iter().map(|&vertex| Device { vertex, role: Role::Ch }));
    devices.extend(
        fprns
            .iter()
            .filter(|v| !seeds.contains(v))
            .map(|&vertex| Device { vertex, role: Role::Fprn }),
    );

    let graph = induced_graph(&devices, grid);
    if !graph.is_connected() {
        return Err(Error::Config(
            "first-phase deployment produced a disconnected backbone".into(),
        ));
    }
    Ok(Backbone { devices, graph })
}

/// Unoccupied grid vertices eligible to host a second-phase relay.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    vertices: Vec<GridVertex>,
}

impl CandidateSet {
    pub fn vertices(&self) -> &[GridVertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices picked out by a selection vector, in candidate order.
    pub fn selected(&self, alpha: &DecisionVector) -> Vec<GridVertex> {
        alpha.indices().map(|i| self.vertices[i]).collect()
    }
}

/// The `n_c` free grid vertices nearest to the backbone (squared Euclidean
/// distance to the closest occupied vertex, lexicographic tie-break).
pub fn enumerate_candidates<T: Float>(
    backbone: &Backbone,
    grid: &GridSpec<T>,
    n_c: usize,
) -> Result<CandidateSet> {
    let occupied = backbone.occupied();
    let mut free: Vec<(u64, GridVertex)> = grid
        .vertices()
        .filter(|v| !occupied.contains(v))
        .map(|v| {
            let d2 = occupied
                .iter()
                .map(|o| v.dist2(*o))
                .min()
                .expect("backbone has at least one device");
            (d2, v)
        })
        .collect();
    if free.len() < n_c {
        return Err(Error::Config(format!(
            "need {} candidate vertices but only {} grid vertices are free",
            n_c,
            free.len()
        )));
    }
    free.sort();
    Ok(CandidateSet {
        vertices: free.into_iter().take(n_c).map(|(_, v)| v).collect(),
    })
}

/// Incremental Laplacian update for a selection vector: embed the initial
/// matrix, then add one incidence outer product per link contributed by a
/// selected candidate (to backbone devices and to other selected
/// candidates within range). Equals a from-scratch rebuild exactly.
pub fn update_laplacian<T: Float>(
    l_initial: &LaplacianMatrix<T>,
    alpha: &DecisionVector,
    candidates: &CandidateSet,
    backbone: &Backbone,
    grid: &GridSpec<T>,
) -> Result<LaplacianMatrix<T>> {
    if alpha.len() != candidates.len() {
        return Err(Error::Domain(format!(
            "selection vector length {} != candidate count {}",
            alpha.len(),
            candidates.len()
        )));
    }
    let n = backbone.device_count();
    if l_initial.dim() != n {
        return Err(Error::Domain(format!(
            "initial Laplacian dimension {} != backbone device count {}",
            l_initial.dim(),
            n
        )));
    }
    let selected = candidates.selected(alpha);
    let mut l = l_initial.embedded(selected.len());
    for (j, &s) in selected.iter().enumerate() {
        for (i, d) in backbone.devices().iter().enumerate() {
            if grid.in_range(s, d.vertex) {
                l.add_edge(n + j, i);
            }
        }
        for (j2, &s2) in selected.iter().enumerate().take(j) {
            if grid.in_range(s, s2) {
                l.add_edge(n + j, n + j2);
            }
        }
    }
    Ok(l)
}

/// Parse a layout file: `key = value` lines with `#` comments. Keys:
/// `grid = nx ny nz`, `spacing_m = <v>`, `comm_range_m = <v>`,
/// `bs = x y z`, and one `ch = x y z` line per cluster head.
pub fn parse_layout<T: Float>(text: &str) -> Result<(SeedLayout, GridSpec<T>)> {
    let mut dims: Option<(usize, usize, usize)> = None;
    let mut spacing: Option<T> = None;
    let mut range: Option<T> = None;
    let mut bs: Option<GridVertex> = None;
    let mut chs: Vec<GridVertex> = Vec::new();

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
        match key {
            "grid" => {
                let parts = parse_triple(value)?;
                dims = Some((parts[0] as usize, parts[1] as usize, parts[2] as usize));
            }
            "spacing_m" => spacing = Some(parse_scalar(value)?),
            "comm_range_m" => range = Some(parse_scalar(value)?),
            "bs" => {
                let p = parse_triple(value)?;
                bs = Some(GridVertex::new(p[0], p[1], p[2]));
            }
            "ch" => {
                let p = parse_triple(value)?;
                chs.push(GridVertex::new(p[0], p[1], p[2]));
            }
            other => return Err(Error::Parse(format!("unknown layout key `{other}`"))),
        }
    }

    let dims = dims.ok_or_else(|| Error::Parse("layout missing `grid`".into()))?;
    let spacing = spacing.ok_or_else(|| Error::Parse("layout missing `spacing_m`".into()))?;
    let range = range.ok_or_else(|| Error::Parse("layout missing `comm_range_m`".into()))?;
    let bs = bs.ok_or_else(|| Error::Parse("layout missing `bs`".into()))?;
    let grid = GridSpec::new(dims, spacing, range)?;
    let layout = SeedLayout::new(bs, chs)?;
    layout.validate_against(&grid)?;
    Ok((layout, grid))
}

fn parse_triple(value: &str) -> Result<[i64; 3]> {
    let parts: Vec<i64> = value
        .split_whitespace()
        .map(|t| t.parse().map_err(|e| Error::Parse(format!("bad integer `{t}`: {e}"))))
        .collect::<Result<_>>()?;
    if parts.len() != 3 {
        return Err(Error::Parse(format!("expected three integers, got `{value}`")));
    }
    Ok([parts[0], parts[1], parts[2]])
}

fn parse_scalar<T: Float>(value: &str) -> Result<T> {
    let v: f64 = value
        .parse()
        .map_err(|e| Error::Parse(format!("bad number `{value}`: {e}")))?;
    Ok(T::from_f64_lit(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_grid(dims: (usize, usize, usize)) -> GridSpec<f64> {
        GridSpec::new(dims, 100.0, 100.0).unwrap()
    }

    #[test]
    fn chain_between_adjacent_vertices_is_empty() {
        let grid = unit_grid((4, 4, 4));
        let chain = rn_chain(GridVertex::new(0, 0, 0), GridVertex::new(1, 0, 0), &grid);
        assert!(chain.is_empty());
    }

    #[test]
    fn chain_two_steps_has_one_interior_vertex() {
        let grid = unit_grid((4, 4, 4));
        let chain = rn_chain(GridVertex::new(0, 0, 0), GridVertex::new(2, 0, 0), &grid);
        assert_eq!(chain, vec![GridVertex::new(1, 0, 0)]);
    }

    #[test]
    fn chain_to_diagonal_corner_has_two_interior_vertices() {
        let grid = unit_grid((4, 4, 4));
        let u = GridVertex::new(0, 0, 0);
        let v = GridVertex::new(1, 1, 1);
        let chain = rn_chain(u, v, &grid);
        assert_eq!(chain.len() as u64, u.manhattan(v) - 1);
        // Every hop along u -> chain -> v is a unit grid step.
        let mut prev = u;
        for &c in chain.iter().chain(std::iter::once(&v)) {
            assert_eq!(prev.manhattan(c), 1);
            prev = c;
        }
    }

    #[test]
    fn adjacent_bs_and_ch_need_no_relays() {
        let grid = unit_grid((4, 4, 4));
        let layout =
            SeedLayout::new(GridVertex::new(0, 0, 0), vec![GridVertex::new(1, 0, 0)]).unwrap();
        let backbone = mst_backbone(&layout, &grid).unwrap();
        assert_eq!(backbone.fprn_count(), 0);
        assert_eq!(backbone.graph().edge_count(), 1);
    }

    #[test]
    fn collinear_pair_gets_interior_relays() {
        let grid = unit_grid((8, 4, 4));
        let layout =
            SeedLayout::new(GridVertex::new(0, 0, 0), vec![GridVertex::new(3, 0, 0)]).unwrap();
        let backbone = mst_backbone(&layout, &grid).unwrap();
        assert_eq!(backbone.fprn_count(), 2);
        assert!(backbone.graph().is_connected());
        let fprns: Vec<GridVertex> = backbone
            .devices()
            .iter()
            .filter(|d| d.role == Role::Fprn)
            .map(|d| d.vertex)
            .collect();
        assert_eq!(fprns, vec![GridVertex::new(1, 0, 0), GridVertex::new(2, 0, 0)]);
    }

    #[test]
    fn greedy_matches_exhaustive_attachment_orders_on_collinear_seeds() {
        // BS at 0, cluster heads at x = 3, 5, 9: attaching each seed to its
        // nearest component vertex is optimal on a line, so the greedy FPRN
        // count must equal the interior-vertex total of the best order.
        let grid = unit_grid((10, 2, 2));
        let bs = GridVertex::new(0, 0, 0);
        let chs = vec![
            GridVertex::new(3, 0, 0),
            GridVertex::new(5, 0, 0),
            GridVertex::new(9, 0, 0),
        ];
        let layout = SeedLayout::new(bs, chs.clone()).unwrap();
        let backbone = mst_backbone(&layout, &grid).unwrap();

        // Exhaustive: all ways to connect the four seeds pairwise into a
        // spanning structure on the line collapse to chains between
        // consecutive x positions: (3-0-1) + (5-3-1) + (9-5-1) = 6.
        assert_eq!(backbone.fprn_count(), 6);
        assert!(backbone.graph().is_connected());
    }

    #[test]
    fn layout_vertex_outside_grid_is_rejected() {
        let grid = unit_grid((2, 2, 2));
        let layout =
            SeedLayout::new(GridVertex::new(0, 0, 0), vec![GridVertex::new(5, 0, 0)]).unwrap();
        assert!(mst_backbone(&layout, &grid).is_err());
    }

    #[test]
    fn candidates_are_near_backbone_and_deterministic() {
        let grid = unit_grid((6, 6, 3));
        let layout = SeedLayout::new(
            GridVertex::new(2, 2, 1),
            vec![GridVertex::new(0, 0, 0), GridVertex::new(4, 4, 2)],
        )
        .unwrap();
        let backbone = mst_backbone(&layout, &grid).unwrap();
        let a = enumerate_candidates(&backbone, &grid, 20).unwrap();
        let b = enumerate_candidates(&backbone, &grid, 20).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 20);
        let occupied = backbone.occupied();
        assert!(a.vertices().iter().all(|v| !occupied.contains(v)));
    }

    #[test]
    fn too_few_free_vertices_is_a_config_error() {
        let grid = unit_grid((2, 2, 1));
        let layout = SeedLayout::new(
            GridVertex::new(0, 0, 0),
            vec![GridVertex::new(1, 0, 0), GridVertex::new(0, 1, 0)],
        )
        .unwrap();
        let backbone = mst_backbone(&layout, &grid).unwrap();
        // Only one free vertex remains on this grid.
        assert!(enumerate_candidates(&backbone, &grid, 2).is_err());
    }

    #[test]
    fn layout_file_round_trip() {
        let text = "\
# desk layout
grid = 4 4 3
spacing_m = 100
comm_range_m = 100
bs = 1 1 0
ch = 0 0 0
ch = 3 3 2
";
        let (layout, grid) = parse_layout::<f64>(text).unwrap();
        assert_eq!(grid.dims(), (4, 4, 3));
        assert_eq!(layout.bs(), GridVertex::new(1, 1, 0));
        assert_eq!(layout.chs().len(), 2);
    }
}
