use std::collections::HashMap;

use serde::Serialize;

use super::mapspace::{relative_maps, restrict, Assignment};
use super::morphism::Morphism;
use super::object::Tso;
use super::path::brown_factorization;
use crate::error::{Error, Result};
use crate::simplicial::{
    boundary, horn, join_with_keys, standard_simplex, thick_simplex, FiniteSimplicialSet, Inclusion, JoinKey, Mask,
};

/// One comparison map between relative mapping spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseVerdict {
    pub case: String,
    pub n: usize,
    pub i: Option<usize>,
    pub source_size: usize,
    pub target_size: usize,
    pub surjective: bool,
    pub injective: bool,
    pub require_bijective: bool,
    pub holds: bool,
}

/// Verdicts of a condition at every level up to the verification depth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: String,
    pub depth: usize,
    pub cases: Vec<CaseVerdict>,
    pub holds: bool,
}

impl ConditionReport {
    fn new(condition: &str, depth: usize, cases: Vec<CaseVerdict>) -> Self {
        let holds = cases.iter().all(|c| c.holds);
        ConditionReport { condition: condition.into(), depth, cases, holds }
    }

    pub fn first_failure(&self) -> Option<&CaseVerdict> {
        self.cases.iter().find(|c| !c.holds)
    }
}

/// A pair of subcomplexes `S ⊆ T` of one ambient set.
pub struct Pair {
    pub s: Inclusion,
    pub t: Inclusion,
}

impl Pair {
    pub fn new(ambient: &FiniteSimplicialSet, s: &Mask, t: &Mask) -> Result<Self> {
        Ok(Pair { s: Inclusion::from_mask(ambient, s)?, t: Inclusion::from_mask(ambient, t)? })
    }

    /// `(T, T)`, whose relative mapping space is `Map(T, X)`.
    pub fn full(ambient: &FiniteSimplicialSet) -> Self {
        Pair { s: Inclusion::identity(ambient), t: Inclusion::identity(ambient) }
    }
}

/// Compares `Map(S₁ ↪ T₁, f) -> Map(S₂ ↪ T₂, f)` given by restriction, for
/// `S₂ ⊆ S₁` and `T₂ ⊆ T₁`.
pub fn compare(
    f: &Morphism,
    from: &Pair,
    to: &Pair,
    case: String,
    n: usize,
    i: Option<usize>,
    require_bijective: bool,
) -> Result<CaseVerdict> {
    let (s2, t2) = (to.s.mask(), to.t.mask());
    if !s2.is_subset(&from.s.mask()) || !t2.is_subset(&from.t.mask()) {
        return Err(Error::InvalidArgument(format!("{case}: the target pair is not contained in the source pair")));
    }
    let source = relative_maps(&from.s, &from.t, f)?;
    let target = relative_maps(&to.s, &to.t, f)?;
    let index: HashMap<&(Assignment, Assignment), usize> = target.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut hit = vec![0usize; target.len()];
    for (a, b) in &source {
        let image = (restrict(a, &s2), restrict(b, &t2));
        let k = index
            .get(&image)
            .ok_or_else(|| Error::Invariant(format!("{case}: restriction leaves the target space")))?;
        hit[*k] += 1;
    }
    let surjective = hit.iter().all(|&h| h > 0);
    let injective = hit.iter().all(|&h| h <= 1);
    Ok(CaseVerdict {
        case,
        n,
        i,
        source_size: source.len(),
        target_size: target.len(),
        surjective,
        injective,
        require_bijective,
        holds: surjective && (!require_bijective || injective),
    })
}

/// Truncation used for thick simplices, above the coskeletal level of every object.
fn thick_trunc(objects: &[&Tso]) -> Result<usize> {
    let mut c = 0;
    for x in objects {
        c = c.max(x.coskeletal_from().ok_or(Error::InsufficientTruncation { needed: usize::MAX, available: x.depth() })?);
    }
    Ok(c + 1)
}

fn horn_case(f: &Morphism, n: usize, i: usize, bij: bool) -> Result<CaseVerdict> {
    let h = horn(n, i)?;
    let to = Pair { s: h, t: Inclusion::identity(&standard_simplex(n)) };
    compare(f, &Pair::full(&standard_simplex(n)), &to, format!("horn {n},{i}"), n, Some(i), bij)
}

fn boundary_case(f: &Morphism, n: usize) -> Result<CaseVerdict> {
    let to = Pair { s: boundary(n), t: Inclusion::identity(&standard_simplex(n)) };
    compare(f, &Pair::full(&standard_simplex(n)), &to, format!("boundary {n}"), n, None, false)
}

/// `Map(𝚫¹, X) -> Map(Δ⁰ ↪ 𝚫¹, f)` for the vertex `v`.
fn thick_edge_case(f: &Morphism, v: usize) -> Result<CaseVerdict> {
    let t = thick_simplex(1, thick_trunc(&[&f.source, &f.target])?);
    let vertex = Mask::from_fn(&t, |d, c| d == 0 && c == v);
    let to = Pair::new(&t, &vertex, &Mask::full(&t))?;
    compare(f, &Pair::full(&t), &to, format!("thick edge at vertex {v}"), 1, Some(v), false)
}

pub fn check_fibration(f: &Morphism, depth: usize) -> Result<ConditionReport> {
    let mut cases = Vec::new();
    for n in 1..=depth {
        for i in 0..=n {
            cases.push(horn_case(f, n, i, false)?);
        }
    }
    Ok(ConditionReport::new("fibration", depth, cases))
}

pub fn check_hypercover(f: &Morphism, depth: usize) -> Result<ConditionReport> {
    let cases = (0..=depth).map(|n| boundary_case(f, n)).collect::<Result<Vec<_>>>()?;
    Ok(ConditionReport::new("hypercover", depth, cases))
}

/// Horn fillers exist for `n > 0` and are unique for `n > k`.
pub fn check_k_groupoid(x: &Tso, k: usize, depth: usize) -> Result<ConditionReport> {
    let f = Morphism::to_terminal(x);
    let mut cases = Vec::new();
    for n in 1..=depth.max(k + 1) {
        for i in 0..=n {
            cases.push(horn_case(&f, n, i, n > k)?);
        }
    }
    Ok(ConditionReport::new(&format!("{k}-groupoid"), depth, cases))
}

/// Inner horn fillers for `n > 1`, unique for `n > k`, and thick edges
/// surject onto vertices.
pub fn check_k_category(x: &Tso, k: usize, depth: usize) -> Result<ConditionReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("k-categories need k >= 1".into()));
    }
    let f = Morphism::to_terminal(x);
    let mut cases = Vec::new();
    for n in 2..=depth.max(k + 1) {
        for i in 1..n {
            cases.push(horn_case(&f, n, i, n > k)?);
        }
    }
    for v in 0..2 {
        cases.push(thick_edge_case(&f, v)?);
    }
    Ok(ConditionReport::new(&format!("{k}-category"), depth, cases))
}

pub fn check_quasi_fibration(f: &Morphism, depth: usize) -> Result<ConditionReport> {
    let mut cases = Vec::new();
    for n in 2..=depth {
        for i in 1..n {
            cases.push(horn_case(f, n, i, false)?);
        }
    }
    for v in 0..2 {
        cases.push(thick_edge_case(f, v)?);
    }
    Ok(ConditionReport::new("quasi-fibration", depth, cases))
}

/// Weak equivalence of groupoids via `Map(Δⁿ ↪ Δⁿ⁺¹, f) -> Map(∂Δⁿ ↪ Λⁿ⁺¹ₙ₊₁, f)`,
/// with `Δⁿ` the face opposite the last vertex.
pub fn check_we_direct(f: &Morphism, depth: usize) -> Result<ConditionReport> {
    let mut cases = Vec::new();
    for n in 0..depth {
        let t = standard_simplex(n + 1);
        let face = Mask::from_fn(&t, |d, c| !t.word(d, c).contains(&(n + 1)));
        let face_boundary = Mask::from_fn(&t, |d, c| !t.word(d, c).contains(&(n + 1)) && d < n);
        let from = Pair::new(&t, &face, &Mask::full(&t))?;
        let to = Pair { s: Inclusion::from_mask(&t, &face_boundary)?, t: horn(n + 1, n + 1)? };
        cases.push(compare(f, &from, &to, format!("direct {n}"), n, None, false)?);
    }
    Ok(ConditionReport::new("weak equivalence (direct)", depth, cases))
}

/// Weak equivalence of groupoids: `q(f): P(f) -> Y` is a hypercover.
pub fn check_we_path(f: &Morphism, depth: usize) -> Result<ConditionReport> {
    let b = brown_factorization(f, depth)?;
    let mut r = check_hypercover(&b.q, depth)?;
    r.condition = "weak equivalence (path space)".into();
    Ok(r)
}

/// Weak equivalence of categories: `X₀ ×_{Y₀} Map(𝚫¹, Y) -> Y₀` and
/// `Map(Δⁿ ↪ 𝚫¹⋆Δⁿ⁻¹, f) -> Map(∂Δⁿ ↪ 𝚫¹⋆∂Δⁿ⁻¹ ∪ 𝚲¹₀⋆Δⁿ⁻¹, f)`
/// for `n >= 1`, where `Δⁿ = 𝚲¹₀⋆Δⁿ⁻¹` and `𝚲¹₀` is the vertex 0.
pub fn check_we_cat(f: &Morphism, depth: usize) -> Result<ConditionReport> {
    let trunc = thick_trunc(&[&f.source, &f.target])?;
    let e = thick_simplex(1, trunc);
    let v0 = Mask::from_fn(&e, |d, c| d == 0 && c == 0);
    let v1 = Mask::from_fn(&e, |d, c| d == 0 && c == 1);
    let from = Pair::new(&e, &v0, &Mask::full(&e))?;
    let to = Pair::new(&e, &Mask::empty(&e), &v1)?;
    let mut cases = vec![compare(f, &from, &to, "thick edge end".into(), 0, None, false)?];
    for n in 1..depth {
        let base = standard_simplex(n - 1);
        let j = join_with_keys(&e, &base);
        let all_base = Mask::full(&base);
        let base_boundary = boundary(n - 1).mask();
        let cone = j.sub_join(&v0, &all_base);
        let mut cone_boundary = cone.clone();
        for (d, cells) in j.keys.iter().enumerate() {
            for (c, key) in cells.iter().enumerate() {
                if matches!(key, JoinKey::Both { x: (0, 0), y } if *y == (n - 1, 0)) {
                    cone_boundary.remove(d, c);
                }
            }
        }
        let t2 = j.sub_join(&Mask::full(&e), &base_boundary).union(&cone);
        let from = Pair::new(&j.set, &cone, &Mask::full(&j.set))?;
        let to = Pair::new(&j.set, &cone_boundary, &t2)?;
        cases.push(compare(f, &from, &to, format!("join {n}"), n, None, false)?);
    }
    Ok(ConditionReport::new("weak equivalence (categorical)", depth, cases))
}
