use num_traits::{One, Zero};

use super::rational::Q;

/// Row echelon data of an exact elimination.
struct Echelon {
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

/// Reduced row echelon form of the first `cols` columns (extra columns ride along).
fn eliminate(mut rows: Vec<Vec<Q>>, cols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = &*x - &factor * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Echelon { rows, pivots }
}

pub fn rank(m: &[Vec<Q>], cols: usize) -> usize {
    eliminate(m.to_vec(), cols).pivots.len()
}

/// Outcome of solving `M z = rhs` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    /// A solution with free variables set to zero, when one exists.
    pub particular: Option<Vec<Q>>,
    pub rank: usize,
    /// Rank of `[M | rhs]`; it exceeds `rank` exactly when there is no solution.
    pub augmented_rank: usize,
    /// Dimension of the solution space when nonempty.
    pub nullity: usize,
}

pub fn solve(m: &[Vec<Q>], rhs: &[Q], cols: usize) -> LinearSolution {
    assert_eq!(m.len(), rhs.len(), "one right-hand side per equation");
    let rows: Vec<Vec<Q>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let e = eliminate(rows, cols + 1);
    let rank = e.pivots.iter().filter(|&&c| c < cols).count();
    let augmented_rank = e.pivots.len();
    let particular = (rank == augmented_rank).then(|| {
        let mut z = vec![Q::zero(); cols];
        for (r, &c) in e.pivots.iter().enumerate() {
            z[c] = e.rows[r][cols].clone();
        }
        z
    });
    LinearSolution { particular, rank, augmented_rank, nullity: cols - rank }
}

/// A basis of the kernel of the first `cols` columns.
pub fn nullspace(m: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let e = eliminate(m.to_vec(), cols);
    let free: Vec<usize> = (0..cols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut z = vec![Q::zero(); cols];
            z[f] = Q::one();
            for (r, &c) in e.pivots.iter().enumerate() {
                z[c] = -e.rows[r][f].clone();
            }
            z
        })
        .collect()
}

/// Inverse of a square matrix, if it is invertible.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let rows: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let e = eliminate(rows, n);
    (e.pivots.len() == n).then(|| e.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}
