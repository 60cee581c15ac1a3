use std::collections::BTreeMap;

use crate::dga::linalg::solve;
use crate::dga::rational::{one, sign, zero, Q};
use crate::dga::{DGAlgebra, Element};
use crate::error::{Error, Result};

/// A simplex of the Maurer–Cartan nerve: components `μ_I ∈ A^{1-k}` for
/// increasing tuples `I = (i₀ < … < i_k)` in `[n]`. Zero components are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NervePoint {
    n: usize,
    comps: BTreeMap<Vec<usize>, Element>,
}

fn strictly_increasing(t: &[usize]) -> bool {
    t.windows(2).all(|w| w[0] < w[1])
}

impl NervePoint {
    pub fn new(n: usize, comps: impl IntoIterator<Item = (Vec<usize>, Element)>) -> Result<Self> {
        let mut p = NervePoint { n, comps: BTreeMap::new() };
        for (t, x) in comps {
            if t.is_empty() || !strictly_increasing(&t) || t.iter().any(|&v| v > n) {
                return Err(Error::InvalidArgument(format!("{t:?} is not an increasing tuple in [{n}]")));
            }
            p.set(t, x);
        }
        Ok(p)
    }

    /// The zero point of `N_n A` (all `f_{ij} = 1`), a point when `0` is Maurer–Cartan.
    pub fn zero(n: usize) -> Self {
        NervePoint { n, comps: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn component(&self, t: &[usize]) -> Element {
        self.comps.get(t).cloned().unwrap_or_default()
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Element)> {
        self.comps.iter()
    }

    pub fn set(&mut self, t: Vec<usize>, x: Element) {
        if x.is_zero() {
            self.comps.remove(&t);
        } else {
            self.comps.insert(t, x);
        }
    }

    /// `f_{ij} = 1 + μ_{ij}`.
    pub fn f(&self, a: &DGAlgebra, i: usize, j: usize) -> Element {
        &a.one() + &self.component(&[i, j])
    }
}

/// Increasing tuples in `[n]` of length `1..=max_len`, shortest first.
pub fn tuples(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut level: Vec<Vec<usize>> = (0..=n).map(|v| vec![v]).collect();
    for _ in 0..max_len.min(n + 1) {
        out.extend(level.iter().cloned());
        level = level
            .iter()
            .flat_map(|t| (t[t.len() - 1] + 1..=n).map(move |v| [t.clone(), vec![v]].concat()))
            .collect();
    }
    out
}

/// Longest tuple whose component or residual can be nonzero: residuals
/// live in `A^{2-k}`, so `k <= 2 - lo`.
fn max_tuple_len(a: &DGAlgebra) -> usize {
    (3 - a.lo()).max(1) as usize
}

/// `(-1)^k (dμ + μ²)_I = dμ_I + Σ (-1)^{k-l} μ_{I∖i_l} + Σ (-1)^{kl} μ_{i₀…i_l} μ_{i_l…i_k}`.
pub fn residual(a: &DGAlgebra, p: &NervePoint, t: &[usize]) -> Element {
    let k = t.len() - 1;
    let mut r = a.d(&p.component(t));
    if k > 0 {
        for l in 0..=k {
            let mut face = t.to_vec();
            face.remove(l);
            r = &r + &p.component(&face).scaled(&sign((k - l) as i64));
        }
    }
    for l in 0..=k {
        let prod = a.mul(&p.component(&t[..=l]), &p.component(&t[l..]));
        r = &r + &prod.scaled(&sign((k * l) as i64));
    }
    r
}

/// Outcome of checking the Maurer–Cartan equations of a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NerveCheck {
    pub is_point: bool,
    /// Nonzero residuals in tuple order.
    pub residuals: Vec<(Vec<usize>, Element)>,
}

impl NerveCheck {
    pub fn first_failure(&self) -> Option<&[usize]> {
        self.residuals.first().map(|(t, _)| t.as_slice())
    }
}

fn check_degrees(a: &DGAlgebra, p: &NervePoint) -> Result<()> {
    for (t, x) in p.components() {
        a.check_element(x)?;
        let want = 1 - (t.len() as i32 - 1);
        if let Some(found) = x.parts().map(|(d, _)| d).find(|&d| d != want) {
            return Err(Error::DegreeMismatch { expected: want, found });
        }
    }
    Ok(())
}

/// Checks every Maurer–Cartan equation of a simplex of `N_n A`.
pub fn nerve_check(a: &DGAlgebra, p: &NervePoint) -> Result<NerveCheck> {
    check_degrees(a, p)?;
    let residuals: Vec<(Vec<usize>, Element)> = tuples(p.n, max_tuple_len(a))
        .into_iter()
        .map(|t| {
            let r = residual(a, p, &t);
            (t, r)
        })
        .filter(|(_, r)| !r.is_zero())
        .collect();
    Ok(NerveCheck { is_point: residuals.is_empty(), residuals })
}

/// `θ^* μ` for a monotone vertex map `θ: [m] -> [n]`: `(θ^*μ)_J = μ_{θ(J)}` when
/// `θ` is injective on `J`, and zero otherwise.
pub fn operator_action(theta: &[usize], p: &NervePoint) -> Result<NervePoint> {
    if theta.is_empty() || theta.windows(2).any(|w| w[0] > w[1]) || theta.iter().any(|&v| v > p.n) {
        return Err(Error::InvalidArgument(format!("{theta:?} is not a monotone map into [{}]", p.n)));
    }
    let m = theta.len() - 1;
    let mut out = NervePoint::zero(m);
    let max_len = p.comps.keys().map(Vec::len).max().unwrap_or(0);
    for t in tuples(m, max_len) {
        let image: Vec<usize> = t.iter().map(|&j| theta[j]).collect();
        if strictly_increasing(&image) {
            out.set(t, p.component(&image));
        }
    }
    Ok(out)
}

/// The face `d_i` of a point.
pub fn face(p: &NervePoint, i: usize) -> Result<NervePoint> {
    let theta: Vec<usize> = (0..p.n).map(|v| if v < i { v } else { v + 1 }).collect();
    operator_action(&theta, p)
}

/// The degeneracy `s_j` of a point.
pub fn degeneracy(p: &NervePoint, j: usize) -> Result<NervePoint> {
    let theta: Vec<usize> = (0..=p.n + 1).map(|v| if v <= j { v } else { v - 1 }).collect();
    operator_action(&theta, p)
}

fn horn_tuples(n: usize, i: usize) -> (Vec<usize>, Vec<usize>) {
    let full: Vec<usize> = (0..=n).collect();
    let mut missing = full.clone();
    missing.remove(i);
    (full, missing)
}

/// Checks the horn data of `Λⁿᵢ`: an inner horn, no components on the two
/// missing tuples, and all Maurer–Cartan equations of the horn hold.
fn check_horn(a: &DGAlgebra, n: usize, i: usize, horn: &NervePoint) -> Result<()> {
    if n < 2 || i == 0 || i >= n {
        return Err(Error::InvalidArgument(format!("Λ^{n}_{i} is not an inner horn")));
    }
    if horn.n != n {
        return Err(Error::InvalidArgument(format!("horn data has dimension {}, expected {n}", horn.n)));
    }
    check_degrees(a, horn)?;
    let (full, missing) = horn_tuples(n, i);
    if !horn.component(&full).is_zero() || !horn.component(&missing).is_zero() {
        return Err(Error::InvalidArgument("horn data assigns the missing simplices".into()));
    }
    for t in tuples(n, max_tuple_len(a)) {
        if t == full || t == missing {
            continue;
        }
        if !residual(a, horn, &t).is_zero() {
            return Err(Error::NotAPoint(format!("horn residual at {t:?} is nonzero")));
        }
    }
    Ok(())
}

/// Fills an inner horn: `μ_{0…n} = x` and `μ_{0…î…n}` solved from the
/// Maurer–Cartan equation of `0…n`, in which it occurs linearly with
/// coefficient `(-1)^{n-i}`.
pub fn inner_horn_fill(a: &DGAlgebra, n: usize, i: usize, horn: &NervePoint, x: &Element) -> Result<NervePoint> {
    check_horn(a, n, i, horn)?;
    a.check_element(x)?;
    let want = 1 - n as i32;
    if let Some(found) = x.parts().map(|(d, _)| d).find(|&d| d != want) {
        return Err(Error::DegreeMismatch { expected: want, found });
    }
    let (full, missing) = horn_tuples(n, i);
    let mut p = horn.clone();
    p.set(full.clone(), x.clone());
    let rest = residual(a, &p, &full);
    p.set(missing, rest.scaled(&-sign((n - i) as i64)));
    let check = nerve_check(a, &p)?;
    if !check.is_point {
        return Err(Error::Invariant(format!("filled horn fails at {:?}", check.first_failure())));
    }
    Ok(p)
}

/// The affine space of fillers of an inner horn, computed by solving the
/// Maurer–Cartan equations of the two missing tuples as a linear system in
/// their coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FillerSpace {
    pub exists: bool,
    /// Dimension of the space of fillers.
    pub dimension: usize,
    /// `dim A^{1-n}`, the dimension predicted by the horn-filling isomorphism.
    pub expected_dimension: usize,
}

pub fn filler_space(a: &DGAlgebra, n: usize, i: usize, horn: &NervePoint) -> Result<FillerSpace> {
    check_horn(a, n, i, horn)?;
    let (full, missing) = horn_tuples(n, i);
    let (d_full, d_missing) = (1 - n as i32, 2 - n as i32);
    let (n_full, n_missing) = (a.dim(d_full), a.dim(d_missing));
    let cols = n_full + n_missing;
    let at = |z: &[Q]| {
        let mut p = horn.clone();
        p.set(full.clone(), Element::homogeneous(d_full, z[..n_full].to_vec()));
        p.set(missing.clone(), Element::homogeneous(d_missing, z[n_full..].to_vec()));
        let mut v = residual(a, &p, &full).coords(2 - n as i32, a.dim(2 - n as i32));
        v.extend(residual(a, &p, &missing).coords(3 - n as i32, a.dim(3 - n as i32)));
        v
    };
    let base = at(&vec![zero(); cols]);
    let columns: Vec<Vec<Q>> = (0..cols)
        .map(|c| {
            let mut z = vec![zero(); cols];
            z[c] = one();
            at(&z).iter().zip(&base).map(|(x, b)| x - b).collect()
        })
        .collect();
    let rows: Vec<Vec<Q>> = (0..base.len()).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let rhs: Vec<Q> = base.iter().map(|b| -b).collect();
    let s = solve(&rows, &rhs, cols);
    Ok(FillerSpace { exists: s.particular.is_some(), dimension: s.nullity, expected_dimension: n_full })
}
