use std::collections::HashMap;

use super::object::Tso;
use crate::error::{Error, Result};

/// A morphism of simplicial objects, stored on the common levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub source: Tso,
    pub target: Tso,
    levels: Vec<Vec<usize>>,
}

fn coskeletal_max(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    Some(a?.max(b?))
}

impl Morphism {
    pub fn new(source: Tso, target: Tso, levels: Vec<Vec<usize>>) -> Result<Self> {
        let d = source.depth().min(target.depth());
        if levels.len() != d + 1 {
            return Err(Error::Malformed(format!("a morphism needs levels 0..={d}")));
        }
        for n in 0..=d {
            if levels[n].len() != source.size(n) || levels[n].iter().any(|&y| y >= target.size(n)) {
                return Err(Error::Malformed(format!("bad morphism table at level {n}")));
            }
        }
        let f = Morphism { source, target, levels };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        for n in 0..=self.depth() {
            for x in 0..s.size(n) {
                let y = self.levels[n][x];
                if n > 0 && (0..=n).any(|i| self.levels[n - 1][s.face(n, i, x)] != t.face(n, i, y)) {
                    return Err(Error::Invariant(format!("morphism does not commute with a face at level {n}")));
                }
                if n < self.depth() && (0..=n).any(|j| self.levels[n + 1][s.degen(n, j, x)] != t.degen(n, j, y)) {
                    return Err(Error::Invariant(format!(
                        "morphism does not commute with a degeneracy at level {n}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.levels[n][x]
    }

    pub fn level(&self, n: usize) -> &[usize] {
        &self.levels[n]
    }

    pub fn identity(x: &Tso) -> Self {
        let levels = (0..=x.depth()).map(|n| (0..x.size(n)).collect()).collect();
        Morphism { source: x.clone(), target: x.clone(), levels }
    }

    pub fn to_terminal(x: &Tso) -> Self {
        let levels = (0..=x.depth()).map(|n| vec![0; x.size(n)]).collect();
        Morphism { source: x.clone(), target: Tso::terminal(x.depth()), levels }
    }

    /// The point `Δ^0 -> x` at vertex `v`.
    pub fn from_point(x: &Tso, v: usize) -> Result<Self> {
        if v >= x.size(0) {
            return Err(Error::InvalidArgument(format!("vertex {v} out of range")));
        }
        let mut levels = vec![vec![v]];
        for n in 0..x.depth() {
            levels.push(vec![x.degen(n, 0, levels[n][0])]);
        }
        Morphism::new(Tso::terminal(x.depth()), x.clone(), levels)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Morphism) -> Result<Self> {
        if self.target.sizes()[..] != next.source.sizes()[..] {
            return Err(Error::InvalidArgument("morphisms are not composable".into()));
        }
        let d = self.depth().min(next.depth());
        let levels = (0..=d).map(|n| self.levels[n].iter().map(|&y| next.levels[n][y]).collect()).collect();
        Morphism::new(self.source.truncated(d), next.target.truncated(d), levels)
    }

    /// The same morphism with both ends stored up to level `d`. New levels
    /// are determined by faces, which needs the target coskeletal there.
    pub fn extended(&self, d: usize) -> Result<Self> {
        if d <= self.depth() && self.source.depth() == self.depth() && self.target.depth() == self.depth() {
            return Ok(self.clone());
        }
        let d = d.max(self.depth());
        let source = self.source.extended(d)?.truncated(d);
        let target = self.target.extended(d)?.truncated(d);
        let mut levels = self.levels.clone();
        for n in levels.len()..=d {
            let mut level = Vec::with_capacity(source.size(n));
            for x in 0..source.size(n) {
                let tuple: Vec<usize> = source.face_tuple(n, x).iter().map(|&y| levels[n - 1][y]).collect();
                match target.fiber(n, &tuple) {
                    [y] => level.push(*y),
                    _ => {
                        return Err(Error::InsufficientTruncation { needed: n, available: self.depth() });
                    }
                }
            }
            levels.push(level);
        }
        Morphism::new(source, target, levels)
    }

    pub fn truncated(&self, d: usize) -> Morphism {
        let d = d.min(self.depth());
        Morphism::new(
            self.source.truncated(d),
            self.target.truncated(d),
            (0..=d).map(|n| self.level(n).to_vec()).collect(),
        )
        .expect("truncation of a valid morphism")
    }

    pub fn is_injective_at(&self, n: usize) -> bool {
        let mut seen = vec![false; self.target.size(n)];
        self.levels[n].iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective_at(&self, n: usize) -> bool {
        let mut seen = vec![false; self.target.size(n)];
        for &y in &self.levels[n] {
            seen[y] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_iso(&self) -> bool {
        (0..=self.depth()).all(|n| self.is_injective_at(n) && self.is_surjective_at(n))
    }

    /// Levelwise image, as a subobject of the target.
    pub fn image(&self) -> Result<Morphism> {
        let keep: Vec<Vec<bool>> = (0..=self.depth())
            .map(|n| {
                let mut k = vec![false; self.target.size(n)];
                for &y in &self.levels[n] {
                    k[y] = true;
                }
                k
            })
            .collect();
        sub_object(&self.target.truncated(self.depth()), &keep, None)
    }
}

/// The subobject on the kept elements with its inclusion.
pub fn sub_object(x: &Tso, keep: &[Vec<bool>], coskeletal_from: Option<usize>) -> Result<Morphism> {
    let d = keep.len().checked_sub(1).ok_or_else(|| Error::InvalidArgument("no levels kept".into()))?;
    let x = x.truncated(d);
    let ids: Vec<Vec<usize>> = (0..=d).map(|n| (0..x.size(n)).filter(|&e| keep[n][e]).collect()).collect();
    let pos: Vec<HashMap<usize, usize>> =
        ids.iter().map(|v| v.iter().enumerate().map(|(k, &e)| (e, k)).collect()).collect();
    let closed = |n: usize, e: usize| {
        pos[n].get(&e).copied().ok_or_else(|| Error::InvalidArgument(format!("kept elements are not closed at level {n}")))
    };
    let labels = (0..=d).map(|n| ids[n].iter().map(|&e| x.label(n, e).to_string()).collect()).collect();
    let mut faces = vec![Vec::new()];
    for n in 1..=d {
        let mut fs = Vec::new();
        for i in 0..=n {
            fs.push(ids[n].iter().map(|&e| closed(n - 1, x.face(n, i, e))).collect::<Result<Vec<_>>>()?);
        }
        faces.push(fs);
    }
    let mut degens = Vec::new();
    for n in 0..d {
        let mut ss = Vec::new();
        for j in 0..=n {
            ss.push(ids[n].iter().map(|&e| closed(n + 1, x.degen(n, j, e))).collect::<Result<Vec<_>>>()?);
        }
        degens.push(ss);
    }
    let sub = Tso::new(labels, faces, degens, coskeletal_from)?;
    Morphism::new(sub, x, ids)
}

/// The pullback `X ×_Z Y` of `f: X -> Z` and `g: Y -> Z` with its projections.
pub fn pullback(f: &Morphism, g: &Morphism) -> Result<(Tso, Morphism, Morphism)> {
    if f.target.sizes()[..=f.depth().min(g.depth())] != g.target.sizes()[..=f.depth().min(g.depth())] {
        return Err(Error::InvalidArgument("pullback needs a common target".into()));
    }
    let d = f.depth().min(g.depth());
    let (x, y) = (&f.source, &g.source);
    let pairs: Vec<Vec<(usize, usize)>> = (0..=d)
        .map(|n| {
            let mut v = Vec::new();
            for a in 0..x.size(n) {
                for b in 0..y.size(n) {
                    if f.apply(n, a) == g.apply(n, b) {
                        v.push((a, b));
                    }
                }
            }
            v
        })
        .collect();
    let pos: Vec<HashMap<(usize, usize), usize>> =
        pairs.iter().map(|v| v.iter().enumerate().map(|(k, &p)| (p, k)).collect()).collect();
    let labels =
        (0..=d).map(|n| pairs[n].iter().map(|&(a, b)| format!("({},{})", x.label(n, a), y.label(n, b))).collect()).collect();
    let faces = (0..=d)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|i| pairs[n].iter().map(|&(a, b)| pos[n - 1][&(x.face(n, i, a), y.face(n, i, b))]).collect())
                .collect()
        })
        .collect();
    let degens = (0..d)
        .map(|n| {
            (0..=n)
                .map(|j| pairs[n].iter().map(|&(a, b)| pos[n + 1][&(x.degen(n, j, a), y.degen(n, j, b))]).collect())
                .collect()
        })
        .collect();
    let c = coskeletal_max(coskeletal_max(x.coskeletal_from(), y.coskeletal_from()), f.target.coskeletal_from());
    let p = Tso::new(labels, faces, degens, c)?;
    let p1 = Morphism::new(p.clone(), x.truncated(d), pairs.iter().map(|v| v.iter().map(|q| q.0).collect()).collect())?;
    let p2 = Morphism::new(p.clone(), y.truncated(d), pairs.iter().map(|v| v.iter().map(|q| q.1).collect()).collect())?;
    Ok((p, p1, p2))
}
