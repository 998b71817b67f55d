//! 3-D deployment grid: integer lattice vertices with a physical spacing and
//! a uniform communication range.

use crate::error::{Error, Result};
use crate::float::Float;

/// A vertex of the deployment lattice, in grid units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridVertex {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl GridVertex {
    pub const ORIGIN: GridVertex = GridVertex { x: 0, y: 0, z: 0 };

    pub fn new(x: i64, y: i64, z: i64) -> Self {
        Self { x, y, z }
    }

    /// L1 distance in grid steps.
    pub fn manhattan(self, other: Self) -> u64 {
        self.x.abs_diff(other.x) + self.y.abs_diff(other.y) + self.z.abs_diff(other.z)
    }

    /// Squared Euclidean distance in grid units.
    pub fn dist2(self, other: Self) -> u64 {
        let dx = self.x.abs_diff(other.x);
        let dy = self.y.abs_diff(other.y);
        let dz = self.z.abs_diff(other.z);
        dx * dx + dy * dy + dz * dz
    }
}

/// Lattice dimensions plus the physical edge length and radio range.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec<T: Float> {
    dims: (usize, usize, usize),
    spacing_m: T,
    comm_range_m: T,
}

impl<T: Float> GridSpec<T> {
    pub fn new(dims: (usize, usize, usize), spacing_m: T, comm_range_m: T) -> Result<Self> {
        if dims.0 == 0 || dims.1 == 0 || dims.2 == 0 {
            return Err(Error::Domain("grid dimensions must be positive".into()));
        }
        if spacing_m <= T::zero() || comm_range_m <= T::zero() {
            return Err(Error::Domain("spacing and range must be positive".into()));
        }
        if spacing_m > comm_range_m {
            // Adjacent lattice vertices must be able to communicate, or
            // relay chains can never connect.
            return Err(Error::Domain(
                "grid spacing exceeds communication range".into(),
            ));
        }
        Ok(Self { dims, spacing_m, comm_range_m })
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn spacing_m(&self) -> T {
        self.spacing_m
    }

    pub fn comm_range_m(&self) -> T {
        self.comm_range_m
    }

    pub fn vertex_count(&self) -> usize {
        self.dims.0 * self.dims.1 * self.dims.2
    }

    pub fn contains(&self, v: GridVertex) -> bool {
        v.x >= 0
            && v.y >= 0
            && v.z >= 0
            && (v.x as usize) < self.dims.0
            && (v.y as usize) < self.dims.1
            && (v.z as usize) < self.dims.2
    }

    /// All lattice vertices in lexicographic (x, y, z) order.
    pub fn vertices(&self) -> impl Iterator<Item = GridVertex> + '_ {
        let (nx, ny, nz) = self.dims;
        (0..nx).flat_map(move |x| {
            (0..ny).flat_map(move |y| {
                (0..nz).map(move |z| GridVertex::new(x as i64, y as i64, z as i64))
            })
        })
    }

    /// Physical Euclidean distance between two lattice vertices.
    pub fn euclidean_m(&self, u: GridVertex, v: GridVertex) -> T {
        let d2 = T::from_u64(u.dist2(v)).expect("distance fits scalar");
        self.spacing_m * d2.sqrt()
    }

    /// Link rule: two devices communicate iff within the uniform range.
    pub fn in_range(&self, u: GridVertex, v: GridVertex) -> bool {
        self.euclidean_m(u, v) <= self.comm_range_m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spacing_must_not_exceed_range() {
        assert!(GridSpec::new((4, 4, 2), 100.0f64, 99.0).is_err());
        assert!(GridSpec::new((4, 4, 2), 100.0f64, 100.0).is_ok());
    }

    #[test]
    fn unit_range_links_axis_neighbors_only() {
        let g = GridSpec::new((4, 4, 4), 100.0f64, 100.0).unwrap();
        let o = GridVertex::new(1, 1, 1);
        assert!(g.in_range(o, GridVertex::new(2, 1, 1)));
        assert!(!g.in_range(o, GridVertex::new(2, 2, 1)));
        assert!(!g.in_range(o, GridVertex::new(3, 1, 1)));
    }

    #[test]
    fn vertices_are_lexicographic_and_complete() {
        let g = GridSpec::new((2, 2, 2), 1.0f64, 1.0).unwrap();
        let vs: Vec<_> = g.vertices().collect();
        assert_eq!(vs.len(), 8);
        let mut sorted = vs.clone();
        sorted.sort();
        assert_eq!(vs, sorted);
    }
}
