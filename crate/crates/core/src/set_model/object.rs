use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::simplicial::{degens_of_word, FiniteSimplicialSet, SimplexRef};

/// A simplicial object in finite sets, stored up to level `depth`.
///
/// With `coskeletal_from = Some(c)`, levels above `c` are the matching sets
/// `Map(∂Δ^n, X)` and can be generated on demand by [`Self::extended`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSimplicialObject {
    labels: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<usize>>>,
    degens: Vec<Vec<Vec<usize>>>,
    coskeletal_from: Option<usize>,
    index: Vec<HashMap<Vec<usize>, Vec<usize>>>,
}

pub type Tso = TruncatedSimplicialObject;

impl TruncatedSimplicialObject {
    /// `faces[n][i][x]` for `1 <= n`, `degens[n][j][x]` for `n < depth`.
    pub fn new(
        labels: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<usize>>>,
        degens: Vec<Vec<Vec<usize>>>,
        coskeletal_from: Option<usize>,
    ) -> Result<Self> {
        let x = Self::from_parts(labels, faces, degens, coskeletal_from)?;
        x.validate()?;
        Ok(x)
    }

    fn from_parts(
        labels: Vec<Vec<String>>,
        mut faces: Vec<Vec<Vec<usize>>>,
        mut degens: Vec<Vec<Vec<usize>>>,
        coskeletal_from: Option<usize>,
    ) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Malformed("a simplicial object needs level 0".into()));
        }
        let depth = labels.len() - 1;
        if faces.is_empty() {
            faces.push(Vec::new());
        }
        degens.truncate(depth);
        if faces.len() != depth + 1 || degens.len() != depth {
            return Err(Error::Malformed("face and degeneracy tables do not match the depth".into()));
        }
        for n in 0..=depth {
            let size = labels[n].len();
            if n > 0 {
                if faces[n].len() != n + 1 {
                    return Err(Error::Malformed(format!("level {n} needs {} face maps", n + 1)));
                }
                for f in &faces[n] {
                    if f.len() != size || f.iter().any(|&y| y >= labels[n - 1].len()) {
                        return Err(Error::Malformed(format!("bad face table at level {n}")));
                    }
                }
            }
            if n < depth {
                if degens[n].len() != n + 1 {
                    return Err(Error::Malformed(format!("level {n} needs {} degeneracies", n + 1)));
                }
                for s in &degens[n] {
                    if s.len() != size || s.iter().any(|&y| y >= labels[n + 1].len()) {
                        return Err(Error::Malformed(format!("bad degeneracy table at level {n}")));
                    }
                }
            }
        }
        let index = (0..=depth)
            .map(|n| {
                let mut h: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
                if n > 0 {
                    for x in 0..labels[n].len() {
                        let key: Vec<usize> = (0..=n).map(|i| faces[n][i][x]).collect();
                        h.entry(key).or_default().push(x);
                    }
                }
                h
            })
            .collect();
        Ok(TruncatedSimplicialObject { labels, faces, degens, coskeletal_from, index })
    }

    /// Checks every simplicial identity on the stored levels.
    pub fn validate(&self) -> Result<()> {
        let d = self.depth();
        let fail = |what: String| Err(Error::Invariant(what));
        for n in 2..=d {
            for x in 0..self.size(n) {
                for j in 1..=n {
                    for i in 0..j {
                        if self.face(n - 1, i, self.face(n, j, x)) != self.face(n - 1, j - 1, self.face(n, i, x)) {
                            return fail(format!("d{i} d{j} at level {n}, element {x}"));
                        }
                    }
                }
            }
        }
        for n in 0..d {
            for x in 0..self.size(n) {
                for j in 0..=n {
                    let y = self.degen(n, j, x);
                    for i in 0..=n + 1 {
                        let lhs = self.face(n + 1, i, y);
                        let ok = if i == j || i == j + 1 {
                            lhs == x
                        } else if i < j {
                            lhs == self.degen(n - 1, j - 1, self.face(n, i, x))
                        } else {
                            lhs == self.degen(n - 1, j, self.face(n, i - 1, x))
                        };
                        if !ok {
                            return fail(format!("d{i} s{j} at level {n}, element {x}"));
                        }
                    }
                    if n + 1 < d {
                        for i in 0..=j {
                            if self.degen(n + 1, i, y) != self.degen(n + 1, j + 1, self.degen(n, i, x)) {
                                return fail(format!("s{i} s{j} at level {n}, element {x}"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn depth(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn coskeletal_from(&self) -> Option<usize> {
        self.coskeletal_from
    }

    pub fn with_coskeletal_from(mut self, c: Option<usize>) -> Self {
        self.coskeletal_from = c;
        self
    }

    pub fn size(&self, n: usize) -> usize {
        self.labels[n].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn label(&self, n: usize, x: usize) -> &str {
        &self.labels[n][x]
    }

    pub fn labels(&self, n: usize) -> &[String] {
        &self.labels[n]
    }

    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i][x]
    }

    pub fn degen(&self, n: usize, j: usize, x: usize) -> usize {
        self.degens[n][j][x]
    }

    pub fn face_tuple(&self, n: usize, x: usize) -> Vec<usize> {
        (0..=n).map(|i| self.faces[n][i][x]).collect()
    }

    /// Elements of level `n >= 1` with the given faces.
    pub fn fiber(&self, n: usize, faces: &[usize]) -> &[usize] {
        self.index[n].get(faces).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Apply a strictly decreasing degeneracy word to an element of level `n`.
    pub fn degenerate_by(&self, n: usize, degens: &[usize], x: usize) -> usize {
        let mut cur = x;
        let mut d = n;
        for &j in degens.iter().rev() {
            cur = self.degen(d, j, cur);
            d += 1;
        }
        cur
    }

    /// The element represented by a possibly degenerate simplex of an
    /// assignment on a simplicial set.
    pub fn eval(&self, values: &[Vec<usize>], r: &SimplexRef) -> usize {
        self.degenerate_by(r.base_dim(), &r.degens, values[r.base_dim()][r.base])
    }

    /// `θ^* y` for `y` in level `m` and a monotone word `θ` in `0..=m`.
    pub fn apply_operator(&self, m: usize, y: usize, theta: &[usize]) -> usize {
        let mut image = theta.to_vec();
        image.dedup();
        let mut cur = y;
        let mut dim = m;
        for v in (0..=m).rev() {
            if image.binary_search(&v).is_err() {
                cur = self.face(dim, v, cur);
                dim -= 1;
            }
        }
        let surj: Vec<usize> = theta.iter().map(|t| image.binary_search(t).unwrap()).collect();
        self.degenerate_by(dim, &degens_of_word(&surj), cur)
    }

    /// The same object stored only up to level `d`.
    pub fn truncated(&self, d: usize) -> Self {
        let d = d.min(self.depth());
        Self::from_parts(
            self.labels[..=d].to_vec(),
            self.faces[..=d].to_vec(),
            self.degens[..d].to_vec(),
            self.coskeletal_from,
        )
        .expect("truncation of a valid object")
    }

    /// Levels up to `d`, adding matching sets `Map(∂Δ^n, X)` above the
    /// stored depth. Needs `coskeletal_from` at most the stored depth.
    pub fn extended(&self, d: usize) -> Result<Self> {
        if d <= self.depth() {
            return Ok(self.clone());
        }
        match self.coskeletal_from {
            Some(c) if c <= self.depth() => {}
            _ => {
                return Err(Error::InsufficientTruncation { needed: d, available: self.depth() });
            }
        }
        let mut labels = self.labels.clone();
        let mut faces = self.faces.clone();
        let mut degens = self.degens.clone();
        let mut cur = self.clone();
        while labels.len() <= d {
            let n = labels.len();
            let tuples = matching_tuples(&cur, n - 1);
            let lookup: HashMap<&Vec<usize>, usize> = tuples.iter().enumerate().map(|(k, t)| (t, k)).collect();
            let level_faces: Vec<Vec<usize>> = (0..=n).map(|i| tuples.iter().map(|t| t[i]).collect()).collect();
            let level_degens: Vec<Vec<usize>> = (0..n)
                .map(|j| {
                    (0..cur.size(n - 1))
                        .map(|x| {
                            let t: Vec<usize> = (0..=n)
                                .map(|i| {
                                    if i == j || i == j + 1 {
                                        x
                                    } else if i < j {
                                        cur.degen(n - 2, j - 1, cur.face(n - 1, i, x))
                                    } else {
                                        cur.degen(n - 2, j, cur.face(n - 1, i - 1, x))
                                    }
                                })
                                .collect();
                            lookup[&t]
                        })
                        .collect()
                })
                .collect();
            labels.push(
                tuples
                    .iter()
                    .map(|t| {
                        let parts: Vec<&str> = t.iter().map(|&y| cur.label(n - 1, y)).collect();
                        format!("<{}>", parts.join(","))
                    })
                    .collect(),
            );
            faces.push(level_faces);
            degens.push(level_degens);
            cur = Self::from_parts(labels.clone(), faces.clone(), degens.clone(), self.coskeletal_from)?;
        }
        Ok(cur)
    }

    /// Constant object on one element per level.
    pub fn terminal(depth: usize) -> Self {
        let labels = (0..=depth).map(|_| vec!["*".to_string()]).collect();
        let faces = (0..=depth).map(|n| if n == 0 { Vec::new() } else { vec![vec![0]; n + 1] }).collect();
        let degens = (0..depth).map(|n| vec![vec![0]; n + 1]).collect();
        Self::from_parts(labels, faces, degens, Some(0)).expect("terminal object")
    }

    /// All simplices of a simplicial set up to level `depth`.
    pub fn from_sset(t: &FiniteSimplicialSet, depth: usize, coskeletal_from: Option<usize>) -> Result<Self> {
        if !t.is_complete() && t.trunc_dim() < depth {
            return Err(Error::InsufficientTruncation { needed: depth, available: t.trunc_dim() });
        }
        let mut elems: Vec<Vec<SimplexRef>> = Vec::with_capacity(depth + 1);
        let mut pos: Vec<HashMap<SimplexRef, usize>> = Vec::with_capacity(depth + 1);
        for n in 0..=depth {
            let mut level = Vec::new();
            for p in 0..=n.min(t.trunc_dim()) {
                for degens in decreasing_words(n, n - p) {
                    for c in 0..t.num_cells(p) {
                        level.push(SimplexRef { dim: n, degens: degens.clone(), base: c });
                    }
                }
            }
            level.sort_by(|a, b| (t.simplex_word(a), a).cmp(&(t.simplex_word(b), b)));
            pos.push(level.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect());
            elems.push(level);
        }
        let labels = elems.iter().map(|lv| lv.iter().map(|r| t.describe(r)).collect()).collect();
        let faces = (0..=depth)
            .map(|n| {
                if n == 0 {
                    return Vec::new();
                }
                (0..=n).map(|i| elems[n].iter().map(|r| pos[n - 1][&t.face(r, i)]).collect()).collect()
            })
            .collect();
        let degens = (0..depth)
            .map(|n| (0..=n).map(|j| elems[n].iter().map(|r| pos[n + 1][&r.degeneracy(j)]).collect()).collect())
            .collect();
        Self::from_parts(labels, faces, degens, coskeletal_from)
    }
}

/// Strictly decreasing words of length `len` in `0..n`.
fn decreasing_words(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(hi: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for j in (0..hi).rev() {
            cur.push(j);
            go(j, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, len, &mut Vec::new(), &mut out);
    out
}

/// Compatible tuples `(y_0, ..., y_{n+1})` in level `n` with
/// `d_i y_j = d_{j-1} y_i` for `i < j`, in lexicographic order.
fn matching_tuples(x: &Tso, n: usize) -> Vec<Vec<usize>> {
    fn go(x: &Tso, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let j = cur.len();
        if j == n + 2 {
            out.push(cur.clone());
            return;
        }
        for y in 0..x.size(n) {
            let ok = n == 0 || (0..j).all(|i| x.face(n, i, y) == x.face(n, j - 1, cur[i]));
            if ok {
                cur.push(y);
                go(x, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(x, n, &mut Vec::new(), &mut out);
    out
}
