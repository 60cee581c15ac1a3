use std::collections::HashSet;

use super::cert::{ExpansionCertificate, ExpansionStep};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::simplicial::{FiniteSimplicialSet, Inclusion, Mask, SimplexRef};

struct Search<'a> {
    t: &'a FiniteSimplicialSet,
    inner: bool,
    m: usize,
    goal_dim: usize,
    budget: &'a Budget,
    failed: HashSet<(Mask, usize)>,
    path: Vec<ExpansionStep>,
    nodes: usize,
}

impl Search<'_> {
    fn done(&self, present: &Mask) -> bool {
        (0..=self.goal_dim).all(|d| (0..self.t.num_cells(d)).all(|c| present.contains(d, c)))
    }

    /// A missing cell that no admissible step can reach any more.
    fn stranded(&self, present: &Mask, last_n: usize) -> bool {
        let floor = last_n.max(self.m).max(1);
        (0..=self.goal_dim).any(|d| d + 1 < floor && (0..self.t.num_cells(d)).any(|c| !present.contains(d, c)))
    }

    fn candidates(&self, present: &Mask, last_n: usize) -> Vec<ExpansionStep> {
        let mut out = Vec::new();
        let lo = last_n.max(self.m).max(1);
        for n in lo..=self.t.trunc_dim() {
            for c in 0..self.t.num_cells(n) {
                if present.contains(n, c) {
                    continue;
                }
                let x = SimplexRef::nondeg(n, c);
                let faces: Vec<SimplexRef> = (0..=n).map(|j| self.t.face(&x, j)).collect();
                let missing: Vec<usize> = (0..=n).filter(|&j| !present.contains_ref(&faces[j])).collect();
                let [i] = missing.as_slice() else { continue };
                let i = *i;
                if faces[i].is_degenerate() || self.inner && (i == 0 || i == n) {
                    continue;
                }
                let attaching = (0..=n).filter(|&j| j != i).map(|j| faces[j].clone()).collect();
                out.push(ExpansionStep { n, i, attaching, new_cell: c });
            }
        }
        out
    }

    fn go(&mut self, present: &mut Mask, last_n: usize) -> Result<bool> {
        self.nodes += 1;
        if self.budget.expired() {
            let trace: Vec<String> =
                self.path.iter().map(|s| format!("{}/{}", self.t.cell(s.n, s.new_cell).label, s.i)).collect();
            return Err(Error::Timeout {
                elapsed_ms: self.budget.elapsed_ms(),
                trace: format!("{} nodes, partial steps [{}]", self.nodes, trace.join(", ")),
            });
        }
        if self.done(present) {
            return Ok(true);
        }
        if self.stranded(present, last_n) || self.failed.contains(&(present.clone(), last_n)) {
            return Ok(false);
        }
        for step in self.candidates(present, last_n) {
            let y = self.t.face(&SimplexRef::nondeg(step.n, step.new_cell), step.i).base;
            present.insert(step.n - 1, y);
            present.insert(step.n, step.new_cell);
            let n = step.n;
            self.path.push(step);
            if self.go(present, n)? {
                return Ok(true);
            }
            let step = self.path.pop().unwrap();
            present.remove(step.n, step.new_cell);
            present.remove(step.n - 1, y);
        }
        self.failed.insert((present.clone(), last_n));
        Ok(false)
    }
}

/// Exhaustive depth-first search for an (inner) `m`-expansion certificate.
///
/// Returns `Ok(None)` when no filtration exists and a timeout error with the
/// deepest partial trace when the budget runs out.
pub fn search_expansion(
    base: &Inclusion,
    inner: bool,
    m: usize,
    budget: &Budget,
) -> Result<Option<ExpansionCertificate>> {
    if m == 0 {
        return Err(Error::InvalidArgument("the grade of an expansion is positive".into()));
    }
    let t = &base.ambient;
    let goal_dim = if t.is_complete() { t.trunc_dim() } else { t.trunc_dim().saturating_sub(1) };
    let mut s = Search { t, inner, m, goal_dim, budget, failed: HashSet::new(), path: Vec::new(), nodes: 0 };
    let mut present = base.mask();
    if s.go(&mut present, 0)? {
        Ok(Some(ExpansionCertificate { base: base.clone(), m, inner, steps: s.path, complete_to_dim: goal_dim }))
    } else {
        Ok(None)
    }
}
