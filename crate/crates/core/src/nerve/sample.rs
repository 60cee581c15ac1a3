use rand::Rng;

use super::lift::EdgeWithQuasiInverse;
use super::point::{inner_horn_fill, NervePoint};
use crate::dga::linalg::nullspace;
use crate::dga::rational::{frac, int, Q};
use crate::dga::{is_mc, quasi_invertible_solve, DGAlgebra, Element, QuasiInverse};
use crate::error::Result;

/// A small rational: an integer in `-3..=3`, halved or thirded now and then.
pub fn random_rational(rng: &mut impl Rng) -> Q {
    let p = rng.gen_range(-3..=3);
    match rng.gen_range(0..4) {
        0 => frac(p, 2),
        1 => frac(p, 3),
        _ => int(p),
    }
}

pub fn random_element(a: &DGAlgebra, degree: i32, rng: &mut impl Rng) -> Element {
    Element::homogeneous(degree, (0..a.dim(degree)).map(|_| random_rational(rng)).collect())
}

/// A random Maurer–Cartan element, falling back to zero.
pub fn random_mc(a: &DGAlgebra, rng: &mut impl Rng) -> Element {
    for _ in 0..8 {
        let mu = random_element(a, 1, rng);
        if is_mc(a, &mu).unwrap_or(false) {
            return mu;
        }
    }
    Element::zero()
}

/// A random `f ∈ A⁰` with `df + μ₀f - fμ₁ = 0`.
pub fn random_edge_value(a: &DGAlgebra, mu0: &Element, mu1: &Element, rng: &mut impl Rng) -> Element {
    let n = a.dim(0);
    let columns: Vec<Vec<Q>> = (0..n)
        .map(|c| {
            let f = a.basis_element(0, c);
            let r = &(&a.d(&f) + &a.mul(mu0, &f)) - &a.mul(&f, mu1);
            r.coords(1, a.dim(1))
        })
        .collect();
    let rows: Vec<Vec<Q>> = (0..a.dim(1)).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let kernel = nullspace(&rows, n);
    kernel.iter().fold(Element::zero(), |acc, z| &acc + &Element::homogeneous(0, z.clone()).scaled(&random_rational(rng)))
}

/// A point of `N_n A` with all components of length at least 3 zero:
/// constant vertices `μ` and `f_{ij} = f_{i,i+1} ⋯ f_{j-1,j}`.
pub fn random_strict_point(a: &DGAlgebra, n: usize, rng: &mut impl Rng) -> Result<NervePoint> {
    let mu = random_mc(a, rng);
    let steps: Vec<Element> = (0..n).map(|_| random_edge_value(a, &mu, &mu, rng)).collect();
    let mut comps = Vec::new();
    for i in 0..=n {
        comps.push((vec![i], mu.clone()));
        let mut f = a.one();
        for j in i + 1..=n {
            f = a.mul(&f, &steps[j - 1]);
            comps.push((vec![i, j], &f - &a.one()));
        }
    }
    NervePoint::new(n, comps)
}

/// A strict point whose top horn `Λⁿ₁` is refilled with a random `x ∈ A^{1-n}`.
pub fn random_point(a: &DGAlgebra, n: usize, rng: &mut impl Rng) -> Result<NervePoint> {
    let mut p = random_strict_point(a, n, rng)?;
    if n < 2 {
        return Ok(p);
    }
    let full: Vec<usize> = (0..=n).collect();
    let missing: Vec<usize> = full.iter().copied().filter(|&v| v != 1).collect();
    p.set(full, Element::zero());
    p.set(missing, Element::zero());
    inner_horn_fill(a, n, 1, &p, &random_element(a, 1 - n as i32, rng))
}

/// A random edge of `N₁A` that is quasi-invertible, with witnesses.
pub fn random_quasi_invertible_edge(a: &DGAlgebra, rng: &mut impl Rng, attempts: usize) -> Result<Option<EdgeWithQuasiInverse>> {
    for _ in 0..attempts {
        let mu0 = random_mc(a, rng);
        let mu1 = random_mc(a, rng);
        let f = random_edge_value(a, &mu0, &mu1, rng);
        let mu01 = &f - &a.one();
        if let QuasiInverse::Witness { g, h, k } = quasi_invertible_solve(a, &mu0, &mu1, &mu01)? {
            return Ok(Some(EdgeWithQuasiInverse { mu0, mu1, mu01, g, h, k }));
        }
    }
    Ok(None)
}
