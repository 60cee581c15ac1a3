use std::collections::HashMap;

use super::simplex::{coface_word, reduce_word, SimplexRef};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub label: String,
    pub faces: Vec<SimplexRef>,
}

/// Nondegenerate cells per dimension with faces in normal form.
///
/// Cells are stored up to `trunc_dim`. When `complete` is set there are no
/// nondegenerate simplices above `trunc_dim`; otherwise the object is a
/// truncation of an infinite-dimensional simplicial set.
#[derive(Clone, Debug)]
pub struct FiniteSimplicialSet {
    trunc_dim: usize,
    complete: bool,
    cells: Vec<Vec<Cell>>,
    words: Vec<Vec<Vec<usize>>>,
    word_index: Option<HashMap<Vec<usize>, (usize, usize)>>,
}

impl PartialEq for FiniteSimplicialSet {
    fn eq(&self, other: &Self) -> bool {
        self.trunc_dim == other.trunc_dim && self.complete == other.complete && self.cells == other.cells
    }
}

impl Eq for FiniteSimplicialSet {}

/// Flat address of a nondegenerate cell.
pub type CellId = (usize, usize);

impl FiniteSimplicialSet {
    /// Checks structural well-formedness; simplicial identities are checked by [`Self::validate`].
    pub fn new(trunc_dim: usize, complete: bool, mut cells: Vec<Vec<Cell>>) -> Result<Self> {
        if cells.len() > trunc_dim + 1 {
            return Err(Error::Malformed(format!(
                "cells stored in dimension {} above trunc_dim {}",
                cells.len() - 1,
                trunc_dim
            )));
        }
        cells.resize_with(trunc_dim + 1, Vec::new);
        for (n, level) in cells.iter().enumerate() {
            for (c, cell) in level.iter().enumerate() {
                let expected = if n == 0 { 0 } else { n + 1 };
                if cell.faces.len() != expected {
                    return Err(Error::Malformed(format!("cell ({n},{c}) has {} faces", cell.faces.len())));
                }
                for r in &cell.faces {
                    if r.dim + 1 != n {
                        return Err(Error::Malformed(format!("face of ({n},{c}) has wrong dimension")));
                    }
                    if r.degens.windows(2).any(|p| p[0] <= p[1]) || r.degens.iter().any(|&j| j >= r.dim) {
                        return Err(Error::Malformed(format!("face of ({n},{c}) not in normal form")));
                    }
                    if r.degens.len() > r.dim || r.base >= cells[r.base_dim()].len() {
                        return Err(Error::Malformed(format!("face of ({n},{c}) references a missing cell")));
                    }
                }
            }
        }
        let mut s = FiniteSimplicialSet { trunc_dim, complete, cells, words: Vec::new(), word_index: None };
        s.index_words();
        Ok(s)
    }

    fn index_words(&mut self) {
        let mut words: Vec<Vec<Vec<usize>>> = Vec::with_capacity(self.cells.len());
        for n in 0..self.cells.len() {
            let mut level = Vec::with_capacity(self.cells[n].len());
            for c in 0..self.cells[n].len() {
                if n == 0 {
                    level.push(vec![c]);
                } else {
                    // vertices of the last face followed by the last vertex of face 0
                    let last = &self.cells[n][c].faces[n];
                    let first = &self.cells[n][c].faces[0];
                    let mut w = expand_word(&words, last);
                    let tail = expand_word(&words, first);
                    w.push(*tail.last().unwrap());
                    level.push(w);
                }
            }
            words.push(level);
        }
        let mut index = HashMap::new();
        let mut unique = true;
        'outer: for (n, level) in words.iter().enumerate() {
            for (c, w) in level.iter().enumerate() {
                if index.insert(w.clone(), (n, c)).is_some() || w.windows(2).any(|p| p[0] == p[1]) {
                    unique = false;
                    break 'outer;
                }
            }
        }
        self.words = words;
        self.word_index = if unique { Some(index) } else { None };
    }

    pub fn empty() -> Self {
        FiniteSimplicialSet::new(0, true, vec![Vec::new()]).unwrap()
    }

    pub fn trunc_dim(&self) -> usize {
        self.trunc_dim
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Highest dimension holding a cell, or `None` for the empty set.
    pub fn top_dim(&self) -> Option<usize> {
        (0..self.cells.len()).rev().find(|&n| !self.cells[n].is_empty())
    }

    pub fn cells(&self, n: usize) -> &[Cell] {
        self.cells.get(n).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn cell(&self, n: usize, c: usize) -> &Cell {
        &self.cells[n][c]
    }

    pub fn num_cells(&self, n: usize) -> usize {
        self.cells(n).len()
    }

    /// Nondegenerate cell counts in dimensions `0..=trunc_dim`.
    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(|v| v.len()).collect()
    }

    pub fn total_cells(&self) -> usize {
        self.cells.iter().map(|v| v.len()).sum()
    }

    /// All cells in dimension-major order.
    pub fn cell_ids(&self) -> Vec<CellId> {
        let mut v = Vec::with_capacity(self.total_cells());
        for (n, level) in self.cells.iter().enumerate() {
            for c in 0..level.len() {
                v.push((n, c));
            }
        }
        v
    }

    /// Number of all `k`-simplices, degenerate ones included.
    pub fn count_all_simplices(&self, k: usize) -> u128 {
        (0..=k.min(self.trunc_dim)).map(|p| self.num_cells(p) as u128 * binomial(k as u64, p as u64)).sum()
    }

    /// Vertex word (vertex ids) of a nondegenerate cell.
    pub fn word(&self, n: usize, c: usize) -> &[usize] {
        &self.words[n][c]
    }

    pub fn simplex_word(&self, r: &SimplexRef) -> Vec<usize> {
        expand_word(&self.words, r)
    }

    /// True when every nondegenerate simplex is determined by its vertex word.
    pub fn is_vertex_determined(&self) -> bool {
        self.word_index.is_some()
    }

    /// Simplex with the given vertex word, degenerate or not.
    pub fn lookup_word(&self, w: &[usize]) -> Option<SimplexRef> {
        let index = self.word_index.as_ref()?;
        let (degens, reduced) = reduce_word(w);
        let &(n, c) = index.get(&reduced)?;
        debug_assert_eq!(n + 1, reduced.len());
        Some(SimplexRef { dim: w.len() - 1, degens, base: c })
    }

    pub fn lookup_cell(&self, w: &[usize]) -> Option<CellId> {
        self.word_index.as_ref()?.get(w).copied()
    }

    pub fn cell_by_label(&self, n: usize, label: &str) -> Option<usize> {
        self.cells(n).iter().position(|c| c.label == label)
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.cells[0][v].label
    }

    /// Face `d_i` of a possibly degenerate simplex.
    pub fn face(&self, r: &SimplexRef, i: usize) -> SimplexRef {
        assert!(r.dim >= 1 && i <= r.dim, "face index out of range");
        let sigma = r.surjection();
        let v = sigma[i];
        let mut rho = sigma;
        rho.remove(i);
        if rho.contains(&v) {
            return SimplexRef::from_surjection(&rho, r.base);
        }
        for x in rho.iter_mut() {
            if *x > v {
                *x -= 1;
            }
        }
        let f = &self.cells[r.base_dim()][r.base].faces[v];
        let tau = f.surjection();
        let comp: Vec<usize> = rho.iter().map(|&t| tau[t]).collect();
        SimplexRef::from_surjection(&comp, f.base)
    }

    /// `theta^* r` for a monotone word `theta: [k] -> [r.dim]`.
    pub fn apply_operator(&self, r: &SimplexRef, theta: &[usize]) -> SimplexRef {
        let mut image: Vec<usize> = theta.to_vec();
        image.dedup();
        let mut cur = r.clone();
        for v in (0..=r.dim).rev() {
            if image.binary_search(&v).is_err() {
                cur = self.face(&cur, v);
            }
        }
        let tau = cur.surjection();
        let comp: Vec<usize> = theta.iter().map(|t| tau[image.binary_search(t).unwrap()]).collect();
        SimplexRef::from_surjection(&comp, cur.base)
    }

    /// Checks all simplicial identities `d_i d_j = d_{j-1} d_i` for `i < j`.
    pub fn validate(&self) -> Result<()> {
        for n in 2..self.cells.len() {
            for c in 0..self.cells[n].len() {
                let x = SimplexRef::nondeg(n, c);
                for j in 1..=n {
                    let dj = self.face(&x, j);
                    for i in 0..j {
                        let di = self.face(&x, i);
                        if self.face(&dj, i) != self.face(&di, j - 1) {
                            return Err(Error::FaceMismatch(format!(
                                "cell ({n},{c}) '{}': d{i} d{j} != d{} d{i}",
                                self.cells[n][c].label,
                                j - 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Faces of a nondegenerate cell computed from its word, as a consistency aid.
    pub fn face_by_word(&self, n: usize, c: usize, i: usize) -> Option<SimplexRef> {
        let w = self.word(n, c);
        let cw = coface_word(n, i);
        let fw: Vec<usize> = cw.iter().map(|&t| w[t]).collect();
        self.lookup_word(&fw)
    }

    pub(crate) fn from_parts(trunc_dim: usize, complete: bool, cells: Vec<Vec<Cell>>) -> Self {
        FiniteSimplicialSet::new(trunc_dim, complete, cells).expect("internal construction is well formed")
    }

    pub(crate) fn set_labels_from_vertices(&mut self) {
        let vlabels: Vec<String> = self.cells[0].iter().map(|c| c.label.clone()).collect();
        for n in 1..self.cells.len() {
            for c in 0..self.cells[n].len() {
                let label: String = self.words[n][c].iter().map(|&v| vlabels[v].as_str()).collect();
                self.cells[n][c].label = label;
            }
        }
    }

    /// The `j`-skeleton as a standalone set (complete).
    pub fn skeleton_set(&self, j: usize) -> Self {
        let top = j.min(self.trunc_dim);
        let cells = self.cells[..=top].to_vec();
        FiniteSimplicialSet::from_parts(top, self.complete || j <= self.trunc_dim, cells)
    }

    /// Word label helper for display: vertex labels joined.
    pub fn describe(&self, r: &SimplexRef) -> String {
        self.simplex_word(r).iter().map(|&v| self.vertex_label(v)).collect()
    }
}

fn expand_word(words: &[Vec<Vec<usize>>], r: &SimplexRef) -> Vec<usize> {
    let base = &words[r.base_dim()][r.base];
    r.surjection().iter().map(|&t| base[t]).collect()
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
