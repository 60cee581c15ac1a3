use std::collections::HashMap;

use super::morphism::Morphism;
use super::object::Tso;
use crate::error::{Error, Result};

/// A finite category given by its composition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    /// `(source, target, label)` per morphism.
    arrows: Vec<(usize, usize, String)>,
    identities: Vec<usize>,
    /// `compose[g][f] = g ∘ f` when `target(f) = source(g)`.
    compose: Vec<Vec<Option<usize>>>,
}

impl FiniteCategory {
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<(usize, usize, String)>,
        identities: Vec<usize>,
        compose: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let c = FiniteCategory { objects, arrows, identities, compose };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        let m = self.arrows.len();
        let bad = |s: String| Err(Error::Malformed(s));
        if self.identities.len() != self.objects.len() || self.compose.len() != m {
            return bad("identity or composition table has the wrong size".into());
        }
        for (x, &e) in self.identities.iter().enumerate() {
            if e >= m || self.arrows[e].0 != x || self.arrows[e].1 != x {
                return bad(format!("identity of object {x} is not an endomorphism of it"));
            }
        }
        for g in 0..m {
            if self.compose[g].len() != m {
                return bad("composition table is not square".into());
            }
            for f in 0..m {
                let composable = self.arrows[f].1 == self.arrows[g].0;
                match self.compose[g][f] {
                    Some(h) if composable => {
                        if h >= m || self.arrows[h].0 != self.arrows[f].0 || self.arrows[h].1 != self.arrows[g].1 {
                            return bad(format!("composite of {g} and {f} has the wrong ends"));
                        }
                    }
                    None if !composable => {}
                    _ => return bad(format!("composition of {g} after {f} is misdeclared")),
                }
            }
        }
        for f in 0..m {
            let (s, t, _) = self.arrows[f];
            if self.comp(self.identities[t], f) != f || self.comp(f, self.identities[s]) != f {
                return bad(format!("identity law fails at morphism {f}"));
            }
        }
        for f in 0..m {
            for g in (0..m).filter(|&g| self.arrows[g].0 == self.arrows[f].1) {
                for h in (0..m).filter(|&h| self.arrows[h].0 == self.arrows[g].1) {
                    if self.comp(h, self.comp(g, f)) != self.comp(self.comp(h, g), f) {
                        return bad(format!("associativity fails at ({h},{g},{f})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn source(&self, f: usize) -> usize {
        self.arrows[f].0
    }

    pub fn target(&self, f: usize) -> usize {
        self.arrows[f].1
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    /// `g ∘ f`; panics when the pair is not composable.
    pub fn comp(&self, g: usize, f: usize) -> usize {
        self.compose[g][f].expect("composable pair")
    }

    pub fn is_iso(&self, f: usize) -> bool {
        let (s, t, _) = self.arrows[f];
        (0..self.arrows.len()).any(|g| {
            self.arrows[g].0 == t
                && self.arrows[g].1 == s
                && self.comp(g, f) == self.identities[s]
                && self.comp(f, g) == self.identities[t]
        })
    }

    /// Builds a category from objects, arrows, identities and a partial
    /// composition function.
    pub fn from_fn(
        objects: Vec<String>,
        arrows: Vec<(usize, usize, String)>,
        identities: Vec<usize>,
        comp: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let m = arrows.len();
        let compose = (0..m)
            .map(|g| (0..m).map(|f| (arrows[f].1 == arrows[g].0).then(|| comp(g, f))).collect())
            .collect();
        Self::new(objects, arrows, identities, compose)
    }

    /// A one-object category from a multiplication table `table[a][b] = a·b`
    /// (with `a·b` meaning `a ∘ b`) and its unit.
    pub fn monoid(labels: &[&str], table: &[Vec<usize>], unit: usize) -> Result<Self> {
        let arrows = labels.iter().map(|l| (0, 0, l.to_string())).collect();
        if table.len() != labels.len() || table.iter().any(|r| r.len() != labels.len() || r.iter().any(|&x| x >= labels.len())) {
            return Err(Error::Malformed("monoid table has the wrong shape".into()));
        }
        Self::from_fn(vec!["*".into()], arrows, vec![unit], |g, f| table[g][f])
    }

    /// The cyclic group of order `n`.
    pub fn cyclic_group(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("group order must be positive".into()));
        }
        let labels: Vec<String> = (0..n).map(|a| a.to_string()).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::monoid(&refs, &table, 0)
    }

    /// The two-element monoid `{1, e}` with `e·e = e`.
    pub fn idempotent_monoid() -> Self {
        Self::monoid(&["1", "e"], &[vec![0, 1], vec![1, 1]], 0).expect("idempotent monoid")
    }

    /// The poset on `0..n` generated by the relations `a <= b` in `le`.
    pub fn poset(n: usize, le: &[(usize, usize)]) -> Result<Self> {
        let mut rel = vec![vec![false; n]; n];
        for a in 0..n {
            rel[a][a] = true;
        }
        for &(a, b) in le {
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(format!("relation ({a},{b}) out of range")));
            }
            rel[a][b] = true;
        }
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if rel[a][k] && rel[k][b] {
                        rel[a][b] = true;
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && rel[a][b] && rel[b][a] {
                    return Err(Error::InvalidArgument("relations contain a cycle".into()));
                }
            }
        }
        let mut arrows = Vec::new();
        let mut id_of: HashMap<(usize, usize), usize> = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                if rel[a][b] {
                    id_of.insert((a, b), arrows.len());
                    arrows.push((a, b, format!("{a}<={b}")));
                }
            }
        }
        let objects = (0..n).map(|a| a.to_string()).collect();
        let identities = (0..n).map(|a| id_of[&(a, a)]).collect();
        let ends: Vec<(usize, usize)> = arrows.iter().map(|&(s, t, _)| (s, t)).collect();
        Self::from_fn(objects, arrows, identities, |g, f| id_of[&(ends[f].0, ends[g].1)])
    }

    /// The linear order `0 < 1 < ... < n`.
    pub fn linear_order(n: usize) -> Self {
        let rel: Vec<(usize, usize)> = (0..n).map(|a| (a, a + 1)).collect();
        Self::poset(n + 1, &rel).expect("linear order")
    }

    /// `n` objects with exactly one morphism between any two.
    pub fn indiscrete(n: usize) -> Self {
        let mut arrows = Vec::new();
        for a in 0..n {
            for b in 0..n {
                arrows.push((a, b, format!("{a}->{b}")));
            }
        }
        let objects = (0..n).map(|a| a.to_string()).collect();
        let identities = (0..n).map(|a| a * n + a).collect();
        Self::from_fn(objects, arrows, identities, |g, f| (f / n) * n + g % n).expect("indiscrete groupoid")
    }

    /// `n` objects and identities only.
    pub fn discrete(n: usize) -> Self {
        let arrows = (0..n).map(|a| (a, a, format!("id{a}"))).collect();
        let objects = (0..n).map(|a| a.to_string()).collect();
        Self::from_fn(objects, arrows, (0..n).collect(), |g, _| g).expect("discrete category")
    }

    pub fn product(a: &FiniteCategory, b: &FiniteCategory) -> Self {
        let nb = b.num_objects();
        let mb = b.num_arrows();
        let objects = a
            .objects
            .iter()
            .flat_map(|x| b.objects.iter().map(move |y| format!("({x},{y})")))
            .collect();
        let arrows = a
            .arrows
            .iter()
            .flat_map(|(s, t, l)| {
                b.arrows.iter().map(move |(s2, t2, l2)| (s * nb + s2, t * nb + t2, format!("({l},{l2})")))
            })
            .collect();
        let identities = (0..a.num_objects())
            .flat_map(|x| (0..nb).map(move |y| (x, y)))
            .map(|(x, y)| a.identities[x] * mb + b.identities[y])
            .collect();
        Self::from_fn(objects, arrows, identities, |g, f| {
            a.comp(g / mb, f / mb) * mb + b.comp(g % mb, f % mb)
        })
        .expect("product of categories")
    }

    /// Checks that object and arrow maps form a functor into `target`.
    pub fn check_functor(&self, target: &FiniteCategory, objects: &[usize], arrows: &[usize]) -> Result<()> {
        let bad = |s: &str| Err(Error::InvalidArgument(format!("not a functor: {s}")));
        if objects.len() != self.num_objects() || arrows.len() != self.num_arrows() {
            return bad("maps have the wrong length");
        }
        if objects.iter().any(|&x| x >= target.num_objects()) || arrows.iter().any(|&f| f >= target.num_arrows()) {
            return bad("image out of range");
        }
        for f in 0..self.num_arrows() {
            if target.source(arrows[f]) != objects[self.source(f)] || target.target(arrows[f]) != objects[self.target(f)] {
                return bad("ends are not preserved");
            }
        }
        for x in 0..self.num_objects() {
            if arrows[self.identity(x)] != target.identity(objects[x]) {
                return bad("identities are not preserved");
            }
        }
        for f in 0..self.num_arrows() {
            for g in (0..self.num_arrows()).filter(|&g| self.source(g) == self.target(f)) {
                if arrows[self.comp(g, f)] != target.comp(arrows[g], arrows[f]) {
                    return bad("composition is not preserved");
                }
            }
        }
        Ok(())
    }

    /// The morphism of nerves induced by a functor.
    pub fn nerve_map(&self, target: &FiniteCategory, objects: &[usize], arrows: &[usize], depth: usize) -> Result<Morphism> {
        self.check_functor(target, objects, arrows)?;
        let index: HashMap<Vec<usize>, usize> =
            (1..=depth).flat_map(|n| target.chains(n).into_iter().enumerate().map(|(k, c)| (c, k))).collect();
        let mut levels = vec![objects.to_vec()];
        for n in 1..=depth {
            levels.push(self.chains(n).iter().map(|c| index[&c.iter().map(|&f| arrows[f]).collect::<Vec<_>>()]).collect());
        }
        Morphism::new(self.nerve(depth), target.nerve(depth), levels)
    }

    /// Composable chains of length `n`, in lexicographic order of arrow ids.
    pub fn chains(&self, n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return Vec::new();
        }
        let mut out: Vec<Vec<usize>> = (0..self.num_arrows()).map(|f| vec![f]).collect();
        for _ in 1..n {
            let mut next = Vec::new();
            for c in &out {
                let t = self.target(*c.last().unwrap());
                for g in 0..self.num_arrows() {
                    if self.source(g) == t {
                        let mut d = c.clone();
                        d.push(g);
                        next.push(d);
                    }
                }
            }
            out = next;
        }
        out
    }

    /// The nerve up to level `depth`; it is 2-coskeletal.
    pub fn nerve(&self, depth: usize) -> Tso {
        let mut levels: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
        for n in 1..=depth {
            levels.push(self.chains(n));
        }
        let index: Vec<HashMap<&Vec<usize>, usize>> =
            levels.iter().map(|l| l.iter().enumerate().map(|(k, c)| (c, k)).collect()).collect();
        let labels: Vec<Vec<String>> = (0..=depth)
            .map(|n| {
                if n == 0 {
                    self.objects.clone()
                } else {
                    levels[n]
                        .iter()
                        .map(|c| c.iter().map(|&f| self.arrows[f].2.as_str()).collect::<Vec<_>>().join("|"))
                        .collect()
                }
            })
            .collect();
        let face = |n: usize, i: usize, c: &Vec<usize>| -> usize {
            if n == 1 {
                return if i == 0 { self.target(c[0]) } else { self.source(c[0]) };
            }
            let mut d = c.clone();
            if i == 0 {
                d.remove(0);
            } else if i == n {
                d.pop();
            } else {
                let h = self.comp(c[i], c[i - 1]);
                d.splice(i - 1..=i, [h]);
            }
            index[n - 1][&d]
        };
        let faces: Vec<Vec<Vec<usize>>> = (0..=depth)
            .map(|n| {
                if n == 0 {
                    Vec::new()
                } else {
                    (0..=n).map(|i| levels[n].iter().map(|c| face(n, i, c)).collect()).collect()
                }
            })
            .collect();
        let degens: Vec<Vec<Vec<usize>>> = (0..depth)
            .map(|n| {
                (0..=n)
                    .map(|j| {
                        if n == 0 {
                            return (0..self.num_objects()).map(|x| index[1][&vec![self.identity(x)]]).collect();
                        }
                        levels[n]
                            .iter()
                            .map(|c| {
                                let x = if j == 0 { self.source(c[0]) } else { self.target(c[j - 1]) };
                                let mut d = c.clone();
                                d.insert(j, self.identity(x));
                                index[n + 1][&d]
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Tso::new(labels, faces, degens, Some(2)).expect("nerves satisfy the simplicial identities")
    }
}
