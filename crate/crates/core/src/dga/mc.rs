use serde::Serialize;

use super::algebra::{DGAlgebra, Element};
use super::linalg::solve;
use super::rational::{sign, Q};
use crate::error::{Error, Result};

fn expect_degree(x: &Element, degree: i32) -> Result<()> {
    match x.parts().map(|(d, _)| d).find(|&d| d != degree) {
        Some(found) => Err(Error::DegreeMismatch { expected: degree, found }),
        None => Ok(()),
    }
}

/// The curvature `Φ(μ) = dμ + μ²` of a degree-one element.
pub fn mc_residual(a: &DGAlgebra, mu: &Element) -> Result<Element> {
    a.check_element(mu)?;
    expect_degree(mu, 1)?;
    Ok(&a.d(mu) + &a.mul(mu, mu))
}

pub fn is_mc(a: &DGAlgebra, mu: &Element) -> Result<bool> {
    Ok(mc_residual(a, mu)?.is_zero())
}

/// The operator `d_{μ,ν} a = da + μa - (-1)^i aν` on `A^i`.
#[derive(Clone, Debug)]
pub struct TwistedDifferential {
    pub mu: Element,
    pub nu: Element,
}

impl TwistedDifferential {
    pub fn apply(&self, a: &DGAlgebra, x: &Element) -> Element {
        let mut out = &a.d(x) + &a.mul(&self.mu, x);
        for (i, _) in x.parts() {
            out = &out - &a.mul(&x.component(i), &self.nu).scaled(&sign(i as i64));
        }
        out
    }
}

/// `d_{μ,ν}` for Maurer–Cartan elements `μ` and `ν`.
pub fn twisted_diff(a: &DGAlgebra, mu: &Element, nu: &Element) -> Result<TwistedDifferential> {
    for (name, x) in [("μ", mu), ("ν", nu)] {
        if !is_mc(a, x)? {
            return Err(Error::NotAPoint(format!("{name} is not a Maurer–Cartan element")));
        }
    }
    Ok(TwistedDifferential { mu: mu.clone(), nu: nu.clone() })
}

/// Witnesses `g ∈ A⁰`, `h, k ∈ A⁻¹` of quasi-invertibility of `f = 1 + μ₀₁`,
/// or a rank certificate that none exist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum QuasiInverse {
    Witness {
        #[serde(skip)]
        g: Element,
        #[serde(skip)]
        h: Element,
        #[serde(skip)]
        k: Element,
    },
    Infeasible { rank: usize, augmented_rank: usize },
}

impl QuasiInverse {
    pub fn is_witness(&self) -> bool {
        matches!(self, QuasiInverse::Witness { .. })
    }
}

/// Checks that `(μ₀, μ₁, μ₀₁)` is a point of `N₁A`: `μ₀, μ₁` Maurer–Cartan
/// and `d_{01} f = df + μ₀f - fμ₁ = 0`.
pub fn check_edge(a: &DGAlgebra, mu0: &Element, mu1: &Element, mu01: &Element) -> Result<()> {
    a.check_element(mu01)?;
    expect_degree(mu01, 0)?;
    for (name, x) in [("μ0", mu0), ("μ1", mu1)] {
        if !is_mc(a, x)? {
            return Err(Error::NotAPoint(format!("{name} is not a Maurer–Cartan element")));
        }
    }
    let f = &a.one() + mu01;
    let r = &(&a.d(&f) + &a.mul(mu0, &f)) - &a.mul(&f, mu1);
    if !r.is_zero() {
        return Err(Error::NotAPoint(format!("d01 f = {} is nonzero", a.format(&r))));
    }
    Ok(())
}

/// `dh + [μ₀,h] - fg` and `dk + [μ₁,k] - gf`.
fn qi_lhs(a: &DGAlgebra, mu0: &Element, mu1: &Element, f: &Element, g: &Element, h: &Element, k: &Element) -> (Element, Element) {
    let e1 = &(&a.d(h) + &a.commutator(mu0, h)) - &a.mul(f, g);
    let e2 = &(&a.d(k) + &a.commutator(mu1, k)) - &a.mul(g, f);
    (e1, e2)
}

/// Solves `dh + [μ₀,h] = fg - 1`, `dk + [μ₁,k] = gf - 1` exactly.
pub fn quasi_invertible_solve(a: &DGAlgebra, mu0: &Element, mu1: &Element, mu01: &Element) -> Result<QuasiInverse> {
    check_edge(a, mu0, mu1, mu01)?;
    let f = &a.one() + mu01;
    let (n0, n1) = (a.dim(0), a.dim(-1));
    let cols = n0 + 2 * n1;
    let unknowns = |z: &[Q]| {
        (
            Element::homogeneous(0, z[..n0].to_vec()),
            Element::homogeneous(-1, z[n0..n0 + n1].to_vec()),
            Element::homogeneous(-1, z[n0 + n1..].to_vec()),
        )
    };
    let mut columns = Vec::with_capacity(cols);
    for c in 0..cols {
        let mut z = vec![Q::from_integer(0.into()); cols];
        z[c] = Q::from_integer(1.into());
        let (g, h, k) = unknowns(&z);
        let (e1, e2) = qi_lhs(a, mu0, mu1, &f, &g, &h, &k);
        let mut col = e1.coords(0, n0);
        col.extend(e2.coords(0, n0));
        columns.push(col);
    }
    let rows: Vec<Vec<Q>> = (0..2 * n0).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let minus_one = a.one().scaled(&-Q::from_integer(1.into())).coords(0, n0);
    let rhs: Vec<Q> = minus_one.iter().chain(&minus_one).cloned().collect();
    let s = solve(&rows, &rhs, cols);
    match s.particular {
        Some(z) => {
            let (g, h, k) = unknowns(&z);
            let (e1, e2) = qi_lhs(a, mu0, mu1, &f, &g, &h, &k);
            let minus = -&a.one();
            if e1 != minus || e2 != minus {
                return Err(Error::Invariant("solver returned a non-solution".into()));
            }
            Ok(QuasiInverse::Witness { g, h, k })
        }
        None => Ok(QuasiInverse::Infeasible { rank: s.rank, augmented_rank: s.augmented_rank }),
    }
}

/// Checks the two defining identities of quasi-invertibility.
pub fn check_quasi_inverse(a: &DGAlgebra, mu0: &Element, mu1: &Element, mu01: &Element, g: &Element, h: &Element, k: &Element) -> bool {
    let f = &a.one() + mu01;
    let (e1, e2) = qi_lhs(a, mu0, mu1, &f, g, h, k);
    let minus = -&a.one();
    e1 == minus && e2 == minus
}
