use std::collections::HashMap;
use std::hash::Hash;

use super::simplex::SimplexRef;
use super::sset::{Cell, FiniteSimplicialSet};

/// A combinatorial description of nondegenerate cells by keys.
pub(crate) trait CellModel {
    type Key: Clone + Eq + Hash + Ord;

    /// Nondegenerate cells of dimension `n`, in canonical order.
    fn cells(&self, n: usize) -> Vec<Self::Key>;

    /// Face `d_i` of a cell of dimension `n` as degeneracies plus a key.
    fn face(&self, key: &Self::Key, n: usize, i: usize) -> (Vec<usize>, Self::Key);

    fn vertex_label(&self, key: &Self::Key) -> String;
}

pub(crate) struct Built<K> {
    pub set: FiniteSimplicialSet,
    pub keys: Vec<Vec<K>>,
}

pub(crate) fn build<M: CellModel>(model: &M, trunc: usize, complete: bool) -> Built<M::Key> {
    let mut keys: Vec<Vec<M::Key>> = Vec::with_capacity(trunc + 1);
    let mut index: Vec<HashMap<M::Key, usize>> = Vec::with_capacity(trunc + 1);
    let mut cells: Vec<Vec<Cell>> = Vec::with_capacity(trunc + 1);
    for n in 0..=trunc {
        let ks = model.cells(n);
        let mut level = Vec::with_capacity(ks.len());
        for k in &ks {
            let faces = if n == 0 {
                Vec::new()
            } else {
                (0..=n)
                    .map(|i| {
                        let (degens, fk) = model.face(k, n, i);
                        let bd = n - 1 - degens.len();
                        let base = *index[bd].get(&fk).expect("face of a cell is a cell");
                        SimplexRef { dim: n - 1, degens, base }
                    })
                    .collect()
            };
            let label = if n == 0 { model.vertex_label(k) } else { String::new() };
            level.push(Cell { label, faces });
        }
        index.push(ks.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect());
        keys.push(ks);
        cells.push(level);
    }
    let mut set = FiniteSimplicialSet::from_parts(trunc, complete, cells);
    set.set_labels_from_vertices();
    Built { set, keys }
}

/// Nerve-of-a-preorder subcomplexes: cells are adjacent-distinct vertex words
/// `v_0 <= v_1 <= ...` accepted by a face-closed predicate.
pub(crate) struct WordModel<'a> {
    pub labels: Vec<String>,
    pub le: &'a dyn Fn(usize, usize) -> bool,
    pub accept: &'a dyn Fn(&[usize]) -> bool,
}

impl CellModel for WordModel<'_> {
    type Key = Vec<usize>;

    fn cells(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut w = Vec::with_capacity(n + 1);
        self.extend(&mut w, n + 1, &mut out);
        out
    }

    fn face(&self, key: &Vec<usize>, _n: usize, i: usize) -> (Vec<usize>, Vec<usize>) {
        let mut w = key.clone();
        w.remove(i);
        super::simplex::reduce_word(&w)
    }

    fn vertex_label(&self, key: &Vec<usize>) -> String {
        self.labels[key[0]].clone()
    }
}

impl WordModel<'_> {
    fn extend(&self, w: &mut Vec<usize>, len: usize, out: &mut Vec<Vec<usize>>) {
        if w.len() == len {
            if (self.accept)(w) {
                out.push(w.clone());
            }
            return;
        }
        for v in 0..self.labels.len() {
            if let Some(&last) = w.last() {
                if last == v || !(self.le)(last, v) {
                    continue;
                }
            }
            w.push(v);
            self.extend(w, len, out);
            w.pop();
        }
    }
}
