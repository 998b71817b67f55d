//! Graph Laplacian: dense symmetric matrix with integer-valued entries,
//! `L(i,i) = degree(i)` and `L(i,j) = -1` iff nodes i and j are linked.

use crate::float::Float;
use crate::graph::BackboneGraph;

/// Dense symmetric Laplacian, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianMatrix<T: Float> {
    n: usize,
    data: Vec<T>,
}

impl<T: Float> LaplacianMatrix<T> {
    /// The zero matrix of dimension `n` (an edgeless graph).
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![T::zero(); n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    #[inline]
    fn add_at(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] += v;
    }

    /// Add the rank-one contribution of one link: `+1` on both diagonals,
    /// `-1` symmetric off-diagonal. This is the incidence-column outer
    /// product of the edge `(u, v)`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "invalid edge ({u}, {v})");
        let one = T::one();
        self.add_at(u, u, one);
        self.add_at(v, v, one);
        self.add_at(u, v, -one);
        self.add_at(v, u, -one);
    }

    /// Same matrix embedded in a larger dimension; new rows/columns are zero
    /// until edges are added for the new nodes.
    pub fn embedded(&self, extra: usize) -> Self {
        let m = self.n + extra;
        let mut out = Self::zeros(m);
        for i in 0..self.n {
            for j in 0..self.n {
                out.data[i * m + j] = self.get(i, j);
            }
        }
        out
    }

    /// Row sums; exactly zero for any true Laplacian because entries are
    /// small integers represented exactly.
    pub fn row_sums(&self) -> Vec<T> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).sum())
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn raw(&self) -> &[T] {
        &self.data
    }
}

/// Assemble the Laplacian of a backbone graph: diagonal holds node degrees,
/// each link contributes symmetric `-1` entries.
pub fn build_laplacian<T: Float>(graph: &BackboneGraph) -> LaplacianMatrix<T> {
    let mut l = LaplacianMatrix::zeros(graph.node_count());
    for (u, v) in graph.edges() {
        l.add_edge(u, v);
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ten_node_backbone;

    /// The published ten-node reference matrix, row by row.
    const L10: [[i32; 10]; 10] = [
        [3, -1, 0, 0, 0, -1, -1, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0, 0, 0, 0, 0],
        [0, -1, 3, -1, 0, 0, 0, -1, 0, 0],
        [0, 0, -1, 2, -1, 0, 0, 0, 0, 0],
        [0, 0, 0, -1, 3, 0, 0, -1, 0, -1],
        [-1, 0, 0, 0, 0, 2, -1, 0, 0, 0],
        [-1, 0, 0, 0, 0, -1, 2, 0, 0, 0],
        [0, 0, -1, 0, -1, 0, 0, 3, -1, 0],
        [0, 0, 0, 0, 0, 0, 0, -1, 2, -1],
        [0, 0, 0, 0, -1, 0, 0, 0, -1, 2],
    ];

    #[test]
    fn ten_node_matrix_matches_reference_exactly() {
        let l: LaplacianMatrix<f64> = build_laplacian(&ten_node_backbone());
        for i in 0..10 {
            for j in 0..10 {
                assert_eq!(l.get(i, j), L10[i][j] as f64, "entry ({i}, {j})");
            }
        }
    }

    #[test]
    fn isolated_node_gives_zero_matrix() {
        let g = BackboneGraph::new(1, &[]).unwrap();
        let l: LaplacianMatrix<f64> = build_laplacian(&g);
        assert_eq!(l.dim(), 1);
        assert_eq!(l.get(0, 0), 0.0);
    }

    #[test]
    fn triangle_laplacian() {
        let g = BackboneGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let l: LaplacianMatrix<f64> = build_laplacian(&g);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 2.0 } else { -1.0 };
                assert_eq!(l.get(i, j), want);
            }
        }
    }

    #[test]
    fn rows_sum_to_zero_and_diagonal_is_degree() {
        let g = ten_node_backbone();
        let l: LaplacianMatrix<f64> = build_laplacian(&g);
        assert!(l.is_symmetric());
        for (i, s) in l.row_sums().into_iter().enumerate() {
            assert_eq!(s, 0.0, "row {i}");
            assert_eq!(l.get(i, i), g.degree(i) as f64);
        }
    }

    #[test]
    fn embedded_grows_with_zero_border() {
        let g = BackboneGraph::new(2, &[(0, 1)]).unwrap();
        let l: LaplacianMatrix<f64> = build_laplacian(&g);
        let e = l.embedded(1);
        assert_eq!(e.dim(), 3);
        assert_eq!(e.get(0, 0), 1.0);
        assert_eq!(e.get(2, 2), 0.0);
        assert_eq!(e.get(0, 2), 0.0);
    }
}
