use std::collections::HashMap;

use super::morphism::Morphism;
use super::object::Tso;
use crate::error::{Error, Result};
use crate::simplicial::{FiniteSimplicialSet, Inclusion, Mask, SimplexRef, SimplicialMap};

/// Value of a map on every nondegenerate cell, `values[dim][cell]`.
/// Cells outside a subcomplex carry [`ABSENT`].
pub type Assignment = Vec<Vec<usize>>;

pub const ABSENT: usize = usize::MAX;

/// Highest cell dimension a map out of `t` has to be specified on, after
/// checking that `x` determines maps out of a truncated `t`.
pub fn required_dim(t: &FiniteSimplicialSet, x: &Tso) -> Result<usize> {
    if t.is_complete() {
        return Ok(t.top_dim().unwrap_or(0));
    }
    match x.coskeletal_from() {
        Some(c) if c <= t.trunc_dim() => Ok(t.trunc_dim()),
        _ => Err(Error::InsufficientTruncation {
            needed: x.coskeletal_from().map_or(usize::MAX, |c| c.max(t.trunc_dim() + 1)),
            available: t.trunc_dim(),
        }),
    }
}

/// Cells in an order where every cell follows its faces.
fn schedule(t: &FiniteSimplicialSet, upto: usize) -> Vec<(usize, usize)> {
    fn visit(t: &FiniteSimplicialSet, n: usize, c: usize, seen: &mut [Vec<bool>], out: &mut Vec<(usize, usize)>) {
        if seen[n][c] {
            return;
        }
        seen[n][c] = true;
        if n > 0 {
            for f in &t.cell(n, c).faces {
                visit(t, f.base_dim(), f.base, seen, out);
            }
        }
        out.push((n, c));
    }
    let mut seen: Vec<Vec<bool>> = (0..=upto).map(|n| vec![false; t.num_cells(n)]).collect();
    let mut out = Vec::new();
    for n in (0..=upto).rev() {
        for c in 0..t.num_cells(n) {
            visit(t, n, c, &mut seen, &mut out);
        }
    }
    out
}

fn empty_assignment(t: &FiniteSimplicialSet) -> Assignment {
    (0..=t.trunc_dim()).map(|n| vec![ABSENT; t.num_cells(n)]).collect()
}

/// Faces of cell `(n, c)` evaluated under a partial assignment.
fn face_values(t: &FiniteSimplicialSet, x: &Tso, a: &Assignment, n: usize, c: usize) -> Vec<usize> {
    t.cell(n, c).faces.iter().map(|f| x.eval(a, f)).collect()
}

/// All simplicial maps `t -> x`, in lexicographic order of assignment
/// tables. `x` must already be stored up to [`required_dim`].
fn maps_prepared(t: &FiniteSimplicialSet, x: &Tso, upto: usize, fixed: Option<&Assignment>) -> Vec<Assignment> {
    let order = schedule(t, upto);
    let mut out = Vec::new();
    let mut a = empty_assignment(t);
    fn go(
        t: &FiniteSimplicialSet,
        x: &Tso,
        order: &[(usize, usize)],
        k: usize,
        a: &mut Assignment,
        fixed: Option<&Assignment>,
        out: &mut Vec<Assignment>,
    ) {
        let Some(&(n, c)) = order.get(k) else {
            out.push(a.clone());
            return;
        };
        let pinned = fixed.map(|f| f[n][c]).filter(|&v| v != ABSENT);
        if n == 0 {
            let all: Vec<usize> = match pinned {
                Some(v) => vec![v],
                None => (0..x.size(0)).collect(),
            };
            for v in all {
                a[0][c] = v;
                go(t, x, order, k + 1, a, fixed, out);
            }
        } else {
            let fv = face_values(t, x, a, n, c);
            let fiber = x.fiber(n, &fv);
            for &v in fiber {
                if pinned.is_some_and(|p| p != v) {
                    continue;
                }
                a[n][c] = v;
                go(t, x, order, k + 1, a, fixed, out);
            }
        }
        a[n][c] = ABSENT;
    }
    go(t, x, &order, 0, &mut a, fixed, &mut out);
    out.sort();
    out
}

/// `Map(t, x)`, the set of simplicial maps, sorted lexicographically.
pub fn enumerate_maps(t: &FiniteSimplicialSet, x: &Tso) -> Result<Vec<Assignment>> {
    let upto = required_dim(t, x)?;
    let x = x.extended(upto)?;
    Ok(maps_prepared(t, &x, upto, None))
}

/// Maps `t -> x` that agree with `fixed` wherever `fixed` is not [`ABSENT`].
pub fn enumerate_extensions(t: &FiniteSimplicialSet, x: &Tso, fixed: &Assignment) -> Result<Vec<Assignment>> {
    let upto = required_dim(t, x)?;
    let x = x.extended(upto)?;
    Ok(maps_prepared(t, &x, upto, Some(fixed)))
}

/// Maps out of a subcomplex, as assignments on the ambient cells.
pub fn maps_on(sub: &Inclusion, x: &Tso) -> Result<Vec<Assignment>> {
    let local = enumerate_maps(&sub.sub, x)?;
    Ok(local.into_iter().map(|a| lift(sub, &a)).collect())
}

fn lift(sub: &Inclusion, a: &Assignment) -> Assignment {
    let mut out: Assignment = (0..=sub.ambient.trunc_dim()).map(|n| vec![ABSENT; sub.ambient.num_cells(n)]).collect();
    for (n, cells) in sub.embedding.iter().enumerate() {
        for (k, &c) in cells.iter().enumerate() {
            out[n][c] = a[n][k];
        }
    }
    out
}

/// Forget the values outside a set of cells.
pub fn restrict(a: &Assignment, mask: &Mask) -> Assignment {
    a.iter()
        .enumerate()
        .map(|(n, v)| v.iter().enumerate().map(|(c, &x)| if mask.contains(n, c) { x } else { ABSENT }).collect())
        .collect()
}

/// `f ∘ a`.
pub fn push_forward(f: &Morphism, a: &Assignment) -> Assignment {
    a.iter()
        .enumerate()
        .map(|(n, v)| v.iter().map(|&x| if x == ABSENT { ABSENT } else { f.apply(n, x) }).collect())
        .collect()
}

/// `a ∘ g` for a simplicial map `g` into the domain of `a`; `x` must be
/// stored up to the source dimension.
pub fn pull_back(g: &SimplicialMap, x: &Tso, a: &Assignment) -> Assignment {
    g.assignment.iter().map(|v| v.iter().map(|r: &SimplexRef| x.eval(a, r)).collect()).collect()
}

/// The relative mapping space `Map(S ↪ T, f) = Map(S, X) ×_{Map(S, Y)} Map(T, Y)`
/// for subcomplexes `S ⊆ T` of a common ambient set, as pairs of ambient
/// assignments.
pub fn relative_maps(s: &Inclusion, t: &Inclusion, f: &Morphism) -> Result<Vec<(Assignment, Assignment)>> {
    if !s.mask().is_subset(&t.mask()) {
        return Err(Error::InvalidArgument("relative mapping space needs S inside T".into()));
    }
    let on_s = maps_on(s, &f.source)?;
    let on_t = maps_on(t, &f.target)?;
    let d = on_s.iter().map(|a| a.len()).max().unwrap_or(0);
    let f = f.extended(d.saturating_sub(1))?;
    let mut by_image: HashMap<Assignment, Vec<&Assignment>> = HashMap::new();
    for a in &on_s {
        by_image.entry(push_forward(&f, a)).or_default().push(a);
    }
    let s_mask = s.mask();
    let mut out = Vec::new();
    for b in &on_t {
        if let Some(list) = by_image.get(&restrict(b, &s_mask)) {
            for a in list {
                out.push(((*a).clone(), b.clone()));
            }
        }
    }
    out.sort();
    Ok(out)
}
