use num_bigint::BigInt;
use serde::Serialize;

use super::matrix::{Matrix2U, UAlgebra};
use crate::dga::rational::{int, Q};
use crate::dga::linalg::solve;
use crate::dga::{check_edge, check_quasi_inverse, DGAlgebra, Element};
use crate::error::{Error, Result};

/// A point `(μ₀, μ₁, μ₀₁)` of `N₁A` with witnesses `(g, h, k)` of quasi-invertibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeWithQuasiInverse {
    pub mu0: Element,
    pub mu1: Element,
    pub mu01: Element,
    pub g: Element,
    pub h: Element,
    pub k: Element,
}

impl EdgeWithQuasiInverse {
    pub fn validate(&self, a: &DGAlgebra) -> Result<()> {
        check_edge(a, &self.mu0, &self.mu1, &self.mu01)?;
        for (name, x, deg) in [("g", &self.g, 0), ("h", &self.h, -1), ("k", &self.k, -1)] {
            a.check_element(x)?;
            if !x.is_homogeneous_of(deg) {
                return Err(Error::InvalidArgument(format!("witness {name} must have degree {deg}")));
            }
        }
        if !check_quasi_inverse(a, &self.mu0, &self.mu1, &self.mu01, &self.g, &self.h, &self.k) {
            return Err(Error::InvalidArgument("invalid quasi-inverse witnesses".into()));
        }
        Ok(())
    }
}

/// Catalan numbers `C_0 … C_{n-1}` from `C_{m+1} = Σ C_i C_{m-i}`.
pub fn catalan(n: usize) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = Vec::with_capacity(n);
    for m in 0..n {
        if m == 0 {
            c.push(BigInt::from(1));
        } else {
            let next = (0..m).map(|i| &c[i] * &c[m - 1 - i]).sum();
            c.push(next);
        }
    }
    c
}

/// The lift of a quasi-invertible edge to the thick nerve.
#[derive(Clone, Debug)]
pub struct CatalanLift {
    pub alpha: Matrix2U,
    pub beta: Matrix2U,
    pub source: BetaSource,
    /// `a = α + u Σ (-u)^n C_n β^{2n+1}`.
    pub a: Matrix2U,
    /// Number of nonzero terms in the series.
    pub terms: usize,
}

/// How the homotopy `β` with `dβ + [α, β] = 1` was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BetaSource {
    /// The closed formula in the witnesses, with `h, k` negated so that
    /// `dh + [μ₀,h] = 1 - fg`.
    Formula,
    /// The closed formula fails for these witnesses (it needs `g` closed and
    /// `fk = hf` up to homotopy); `β` is solved for as a linear system.
    Solved,
}

/// `β` from the witnesses: `[[h, h(fk-hf)], [g, -k + g(fk-hf)]]`.
fn beta_formula(a: &DGAlgebra, f: &Element, g: &Element, h: &Element, k: &Element) -> Result<Matrix2U> {
    let fk_hf = &a.mul(f, k) - &a.mul(h, f);
    Matrix2U::new(-1, [[vec![h.clone()], vec![a.mul(h, &fk_hf)]], [vec![g.clone()], vec![&a.mul(g, &fk_hf) - k]]])
}

/// Solves `dβ + [α, β] = 1` for a `β ∈ 𝕌A^{-1}` with constant entries.
fn beta_solved(u: &UAlgebra, alpha: &Matrix2U) -> Option<Matrix2U> {
    let a = u.a;
    let slots: Vec<(usize, usize, i32)> =
        (0..2).flat_map(|i| (0..2).map(move |j| (i, j, -1 + i as i32 - j as i32))).collect();
    let unit = |i: usize, j: usize, deg: i32, b: usize| {
        let mut entries: [[Vec<Element>; 2]; 2] = Default::default();
        entries[i][j] = vec![a.basis_element(deg, b)];
        Matrix2U::new(-1, entries).expect("slot degree")
    };
    let coords = |m: &Matrix2U| -> Vec<Q> {
        slots
            .iter()
            .flat_map(|&(i, j, _)| {
                let deg = m.slot_degree(i, j, 0);
                m.coeff(i, j, 0).coords(deg, a.dim(deg))
            })
            .collect()
    };
    let basis: Vec<Matrix2U> =
        slots.iter().flat_map(|&(i, j, deg)| (0..a.dim(deg)).map(move |b| unit(i, j, deg, b))).collect();
    let columns: Vec<Vec<Q>> =
        basis.iter().map(|x| coords(&u.d(x).add(&u.commutator(alpha, x)).expect("degree 0"))).collect();
    let rhs = coords(&u.identity());
    let rows: Vec<Vec<Q>> = (0..rhs.len()).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let z = solve(&rows, &rhs, basis.len()).particular?;
    Some(basis.iter().zip(&z).fold(Matrix2U::zero(-1), |acc, (x, c)| acc.add(&x.scaled(c)).expect("degree -1")))
}

/// `α + u Σ (-u)^n C_n β^{2n+1}` for `dα + α² = 0` and `dβ + [α, β] = 1`,
/// with the number of nonzero terms. It solves `da + a² = u·1`.
pub fn catalan_series(u: &UAlgebra, alpha: &Matrix2U, beta: &Matrix2U) -> Result<(Matrix2U, usize)> {
    let beta2 = u.mul(beta, beta);
    let coefficients = catalan(((1 - u.a.lo()).max(1) as usize) + 1);
    let mut power = beta.clone();
    let mut series = alpha.clone();
    let mut terms = 0;
    for (n, c) in coefficients.iter().enumerate() {
        if power.is_zero() {
            break;
        }
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        let mut term = power.scaled(&(sign * Q::from_integer(c.clone())));
        for _ in 0..=n {
            term = term.times_u();
        }
        series = series.add(&term)?;
        terms += 1;
        power = u.mul(&power, &beta2);
    }
    if !power.is_zero() {
        return Err(Error::Invariant("the Catalan series did not terminate".into()));
    }
    if !u.thick_edge_check(&series) {
        return Err(Error::Invariant("the lift does not satisfy da + a² = u·1".into()));
    }
    Ok((series, terms))
}

pub fn catalan_lift(a: &DGAlgebra, edge: &EdgeWithQuasiInverse) -> Result<CatalanLift> {
    edge.validate(a)?;
    let u = UAlgebra::new(a);
    let f = &a.one() + &edge.mu01;
    let alpha = Matrix2U::new(1, [[vec![edge.mu0.clone()], vec![f.clone()]], [vec![], vec![-&edge.mu1]]])?;
    let is_homotopy = |beta: &Matrix2U| u.d(beta).add(&u.commutator(&alpha, beta)).map(|x| x == u.identity()).unwrap_or(false);
    let formula = beta_formula(a, &f, &edge.g, &-&edge.h, &-&edge.k)?;
    let (beta, source) = if is_homotopy(&formula) {
        (formula, BetaSource::Formula)
    } else {
        let solved = beta_solved(&u, &alpha).ok_or_else(|| Error::Invariant("dβ + [α, β] = 1 has no solution".into()))?;
        (solved, BetaSource::Solved)
    };
    if !is_homotopy(&beta) {
        return Err(Error::Invariant("dβ + [α, β] is not 1".into()));
    }
    let (series, terms) = catalan_series(&u, &alpha, &beta)?;
    Ok(CatalanLift { alpha, beta, source, a: series, terms })
}

/// One identity checked over a set of cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub cases: usize,
    pub holds: bool,
    pub failure: Option<String>,
}

/// Identities around a point `a` of the thick nerve, checked pointwise on
/// bases of `𝕍A^t` for `t` in a window of degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessReport {
    pub checks: Vec<IdentityCheck>,
    pub holds: bool,
}

impl SmoothnessReport {
    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| !c.holds)
    }
}

struct Checker {
    checks: Vec<IdentityCheck>,
}

impl Checker {
    fn record(&mut self, name: &str, results: impl IntoIterator<Item = (bool, String)>) {
        let mut cases = 0;
        let mut failure = None;
        for (ok, what) in results {
            cases += 1;
            if !ok && failure.is_none() {
                failure = Some(what);
            }
        }
        self.checks.push(IdentityCheck { name: name.into(), cases, holds: failure.is_none(), failure });
    }
}

/// The homotopy `b(1 - π) - b² d_a (1 - π)` and its projection for a
/// projection `π` (`q` or `Q`).
struct Homotopy<'u, 'a> {
    u: &'u UAlgebra<'a>,
    a: &'u Matrix2U,
    b: &'u Matrix2U,
    b2: Matrix2U,
    pi: fn(&Matrix2U) -> Matrix2U,
}

impl Homotopy<'_, '_> {
    fn complement(&self, x: &Matrix2U) -> Matrix2U {
        x.sub(&(self.pi)(x)).expect("same degree")
    }

    fn h(&self, x: &Matrix2U) -> Matrix2U {
        let y = self.complement(x);
        let first = self.u.mul(self.b, &y);
        let second = self.u.mul(&self.b2, &self.u.twisted_d(self.a, &y));
        first.sub(&second).expect("same degree")
    }

    /// `b d_a (b (1 - π) x)`.
    fn h_composite(&self, x: &Matrix2U) -> Matrix2U {
        let y = self.u.mul(self.b, &self.complement(x));
        self.u.mul(self.b, &self.u.twisted_d(self.a, &y))
    }

    fn p(&self, x: &Matrix2U) -> Matrix2U {
        let dh = self.u.twisted_d(self.a, &self.h(x));
        let hd = self.h(&self.u.twisted_d(self.a, x));
        dh.add(&hd).expect("same degree")
    }

    /// `1 - π + b[d_a, π]`.
    fn p_closed(&self, x: &Matrix2U) -> Matrix2U {
        let comm = self
            .u
            .twisted_d(self.a, &(self.pi)(x))
            .sub(&(self.pi)(&self.u.twisted_d(self.a, x)))
            .expect("same degree");
        self.complement(x).add(&self.u.mul(self.b, &comm)).expect("same degree")
    }
}

fn same(x: &Matrix2U, y: &Matrix2U) -> bool {
    x.sub(y).map(|z| z.is_zero()).unwrap_or(false)
}

/// Checks at a point `a` of the thick nerve: `d_a b = 1` for `b = ∂a/∂u`,
/// and for `π ∈ {q, Q}` the homotopy `h = b(1-π) - b² d_a(1-π)` satisfies
/// `h d_a h = h`, `h² = 0`, `d_a h + h d_a = 1 - π + b[d_a, π]`, maps `𝕍A`
/// into itself, and the image of the projection is closed under products
/// with basis elements (sampled ideal property).
pub fn smoothness_identities(alg: &DGAlgebra, a: &Matrix2U, degrees: std::ops::RangeInclusive<i32>) -> SmoothnessReport {
    let u = UAlgebra::new(alg);
    let b = a.d_du();
    let mut ck = Checker { checks: Vec::new() };
    let dab = u.twisted_d(a, &b);
    ck.record("d_a b = 1", [(dab == u.identity(), "d_a b differs from 1".to_string())]);
    let basis: Vec<(i32, usize, Matrix2U)> =
        degrees.clone().flat_map(|t| u.va_basis(t).into_iter().enumerate().map(move |(k, x)| (t, k, x))).collect();
    let small: Vec<&Matrix2U> = basis.iter().filter(|(t, _, _)| (-1..=1).contains(t)).map(|(_, _, x)| x).collect();
    let q_proj: fn(&Matrix2U) -> Matrix2U = Matrix2U::project_q;
    let u_proj: fn(&Matrix2U) -> Matrix2U = Matrix2U::project_u0;
    for (tag, pi) in [("q", q_proj), ("Q", u_proj)] {
        let hom = Homotopy { u: &u, a, b: &b, b2: u.mul(&b, &b), pi };
        let at = |t: i32, k: usize| format!("basis element {k} of degree {t}");
        let hs: Vec<Matrix2U> = basis.iter().map(|(_, _, x)| hom.h(x)).collect();
        ck.record(
            &format!("h_{tag} = b d_a b (1-{tag})"),
            basis.iter().zip(&hs).map(|((t, k, x), h)| (same(h, &hom.h_composite(x)), at(*t, *k))),
        );
        ck.record(
            &format!("h_{tag} preserves VA"),
            basis.iter().zip(&hs).map(|((t, k, _), h)| (h.in_va(), at(*t, *k))),
        );
        ck.record(
            &format!("h_{tag} d_a h_{tag} = h_{tag}"),
            basis.iter().zip(&hs).map(|((t, k, _), h)| (same(&hom.h(&u.twisted_d(a, h)), h), at(*t, *k))),
        );
        ck.record(
            &format!("h_{tag}^2 = 0"),
            basis.iter().zip(&hs).map(|((t, k, _), h)| (hom.h(h).is_zero(), at(*t, *k))),
        );
        let ps: Vec<Matrix2U> = basis.iter().map(|(_, _, x)| hom.p(x)).collect();
        ck.record(
            &format!("d_a h_{tag} + h_{tag} d_a = 1 - {tag} + b[d_a, {tag}]"),
            basis.iter().zip(&ps).map(|((t, k, x), p)| (same(p, &hom.p_closed(x)), at(*t, *k))),
        );
        ck.record(
            &format!("p_{tag} is a projection"),
            basis.iter().zip(&ps).map(|((t, k, _), p)| (same(&hom.p(p), p), at(*t, *k))),
        );
        let mut ideal = Vec::new();
        for ((t, k, _), p) in basis.iter().zip(&ps) {
            for y in &small {
                for z in [u.mul(p, y), u.mul(y, p)] {
                    ideal.push((same(&hom.p(&z), &z), at(*t, *k)));
                }
            }
        }
        ck.record(&format!("image of p_{tag} is closed under sampled products"), ideal);
    }
    let holds = ck.checks.iter().all(|c| c.holds);
    SmoothnessReport { checks: ck.checks, holds }
}
