use crate::error::{Error, Result};
use crate::simplicial::{CellId, FiniteSimplicialSet, Inclusion, Mask, SimplexRef};

/// One pushout along a horn `Λ^n_i -> Δ^n`.
///
/// `attaching` lists the ambient images of the faces `d_j`, `j != i`, and
/// `new_cell` is the ambient id of the attached `n`-simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionStep {
    pub n: usize,
    pub i: usize,
    pub attaching: Vec<SimplexRef>,
    pub new_cell: usize,
}

/// A filtration of `base.ambient` starting at `base.sub`, one horn at a time.
///
/// Cells of the ambient up to `complete_to_dim` must all be reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionCertificate {
    pub base: Inclusion,
    pub m: usize,
    pub inner: bool,
    pub steps: Vec<ExpansionStep>,
    pub complete_to_dim: usize,
}

impl ExpansionCertificate {
    pub fn ambient(&self) -> &FiniteSimplicialSet {
        &self.base.ambient
    }

    /// Smallest attached dimension (the declared grade if there are no steps).
    pub fn grade(&self) -> usize {
        self.steps.iter().map(|s| s.n).min().unwrap_or(self.m)
    }

    pub fn max_dim(&self) -> usize {
        self.steps.iter().map(|s| s.n).max().unwrap_or(0)
    }

    /// Ambient id of the free face `d_i x` of a step.
    pub fn free_face(&self, step: &ExpansionStep) -> SimplexRef {
        self.ambient().face(&SimplexRef::nondeg(step.n, step.new_cell), step.i)
    }

    /// Attached cells in order: the free face, then the simplex, per step.
    pub fn attached_cells(&self) -> Vec<CellId> {
        let mut out = Vec::with_capacity(2 * self.steps.len());
        for s in &self.steps {
            out.push((s.n - 1, self.free_face(s).base));
            out.push((s.n, s.new_cell));
        }
        out
    }

    /// Vertex words of the attached top cells, step by step.
    pub fn step_words(&self) -> Vec<Vec<usize>> {
        self.steps.iter().map(|s| self.ambient().word(s.n, s.new_cell).to_vec()).collect()
    }

    /// Reorder steps by dimension, keeping relative order within a dimension.
    ///
    /// The attaching faces of an `n`-step have dimension `n - 1` and are never
    /// produced by a step of larger dimension, so validity is preserved.
    pub fn monotonized(mut self) -> Self {
        self.steps.sort_by_key(|s| s.n);
        self
    }

    /// The certificate for `S -> T` from certificates for `S -> U` and `U -> T`.
    pub fn then(&self, next: &ExpansionCertificate) -> Result<ExpansionCertificate> {
        if self.base.ambient != next.base.sub {
            return Err(Error::InvalidArgument("the first certificate must end where the second begins".into()));
        }
        let emb = &next.base.embedding;
        let t = next.ambient();
        let mut steps: Vec<ExpansionStep> = self
            .steps
            .iter()
            .map(|s| {
                let new_cell = emb[s.n][s.new_cell];
                let x = SimplexRef::nondeg(s.n, new_cell);
                let attaching = (0..=s.n).filter(|&j| j != s.i).map(|j| t.face(&x, j)).collect();
                ExpansionStep { n: s.n, i: s.i, attaching, new_cell }
            })
            .collect();
        steps.extend(next.steps.iter().cloned());
        let base = Inclusion {
            sub: self.base.sub.clone(),
            ambient: t.clone(),
            embedding: self
                .base
                .embedding
                .iter()
                .enumerate()
                .map(|(d, v)| v.iter().map(|&c| emb[d][c]).collect())
                .collect(),
        };
        let cert = ExpansionCertificate {
            base,
            m: self.m.min(next.m),
            inner: self.inner && next.inner,
            steps,
            complete_to_dim: next.complete_to_dim,
        };
        Ok(cert.monotonized())
    }
}

/// Incremental construction of a certificate over a fixed ambient.
pub(crate) struct CertBuilder<'a> {
    t: &'a FiniteSimplicialSet,
    present: Mask,
    steps: Vec<ExpansionStep>,
    prefer_inner: bool,
}

impl<'a> CertBuilder<'a> {
    pub fn new(t: &'a FiniteSimplicialSet, base: &Mask, prefer_inner: bool) -> Self {
        CertBuilder { t, present: base.clone(), steps: Vec::new(), prefer_inner }
    }

    /// Face indices whose nondegenerate face is not yet present.
    fn missing_faces(&self, n: usize, c: usize) -> Vec<usize> {
        let x = SimplexRef::nondeg(n, c);
        (0..=n)
            .filter(|&j| {
                let f = self.t.face(&x, j);
                !f.is_degenerate() && !self.present.contains(n - 1, f.base)
            })
            .collect()
    }

    pub fn attach(&mut self, n: usize, c: usize, i: usize) -> Result<()> {
        let step = self.steps.len();
        let bad = |reason: String| Error::InvalidStep { step, reason };
        if n == 0 || i > n {
            return Err(bad(format!("no horn Λ^{n}_{i}")));
        }
        if self.present.contains(n, c) {
            return Err(bad(format!("cell {} already present", self.t.cell(n, c).label)));
        }
        let x = SimplexRef::nondeg(n, c);
        let y = self.t.face(&x, i);
        if y.is_degenerate() || self.present.contains(n - 1, y.base) {
            return Err(bad(format!("face {i} of {} is not a new cell", self.t.cell(n, c).label)));
        }
        let mut attaching = Vec::with_capacity(n);
        for j in (0..=n).filter(|&j| j != i) {
            let f = self.t.face(&x, j);
            if !self.present.contains_ref(&f) || f.base_dim() == n - 1 && f.base == y.base {
                return Err(bad(format!("face {j} of {} is not available", self.t.cell(n, c).label)));
            }
            attaching.push(f);
        }
        self.present.insert(n - 1, y.base);
        self.present.insert(n, c);
        self.steps.push(ExpansionStep { n, i, attaching, new_cell: c });
        Ok(())
    }

    /// Attach along the unique horn whose missing face is absent.
    pub fn attach_horn(&mut self, n: usize, c: usize) -> Result<()> {
        let missing = self.missing_faces(n, c);
        match missing.as_slice() {
            [i] => self.attach(n, c, *i),
            _ => Err(Error::InvalidStep {
                step: self.steps.len(),
                reason: format!("{} has {} missing faces", self.t.cell(n, c).label, missing.len()),
            }),
        }
    }

    /// Attach a cell together with its missing faces, recursively: missing
    /// faces go in increasing index order and the last one stays free.
    pub fn attach_proper(&mut self, n: usize, c: usize) -> Result<()> {
        if self.present.contains(n, c) {
            return Ok(());
        }
        let x = SimplexRef::nondeg(n, c);
        let missing = self.missing_faces(n, c);
        let t = self.t;
        let base_of = |j: usize| t.face(&x, j).base;
        let unique: Vec<usize> =
            missing.iter().copied().filter(|&j| missing.iter().filter(|&&k| base_of(k) == base_of(j)).count() == 1).collect();
        let inner: Vec<usize> = unique.iter().copied().filter(|&j| j > 0 && j < n).collect();
        let free = if self.prefer_inner && !inner.is_empty() { inner.last() } else { unique.last() };
        let Some(&free) = free else {
            return Err(Error::InvalidStep {
                step: self.steps.len(),
                reason: format!("{} has no free face", t.cell(n, c).label),
            });
        };
        for &j in &missing {
            if j != free {
                self.attach_proper(n - 1, base_of(j))?;
            }
        }
        self.attach(n, c, free)
    }

    pub fn finish(self, base: Inclusion, m: usize, inner: bool, complete_to_dim: usize) -> ExpansionCertificate {
        ExpansionCertificate { base, m, inner, steps: self.steps, complete_to_dim }
    }
}
