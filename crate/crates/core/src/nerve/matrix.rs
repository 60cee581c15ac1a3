use crate::dga::rational::{int, sign, Q};
use crate::dga::{CochainAlgebra, DGAlgebra, Element};
use crate::error::{Error, Result};

/// A homogeneous element of `𝕌A`: a 2×2 matrix whose `(i, j)` entry is a
/// polynomial in `u` (of degree 2) with the coefficient of `u^m` in
/// `A^{degree + i - j - 2m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix2U {
    degree: i32,
    /// `entries[i][j][m]` is the coefficient of `u^m`; trailing zeros are trimmed.
    entries: [[Vec<Element>; 2]; 2],
}

fn trim(mut p: Vec<Element>) -> Vec<Element> {
    while p.last().is_some_and(Element::is_zero) {
        p.pop();
    }
    p
}

impl Matrix2U {
    pub fn zero(degree: i32) -> Self {
        Matrix2U { degree, entries: Default::default() }
    }

    /// Builds a matrix, checking that every coefficient has the degree its slot requires.
    pub fn new(degree: i32, entries: [[Vec<Element>; 2]; 2]) -> Result<Self> {
        let mut m = Matrix2U { degree, entries };
        for i in 0..2 {
            for j in 0..2 {
                m.entries[i][j] = trim(std::mem::take(&mut m.entries[i][j]));
                for (k, c) in m.entries[i][j].iter().enumerate() {
                    let want = m.slot_degree(i, j, k);
                    if let Some(found) = c.parts().map(|(d, _)| d).find(|&d| d != want) {
                        return Err(Error::DegreeMismatch { expected: want, found });
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    /// Degree in `A` of the coefficient of `u^m` in entry `(i, j)`.
    pub fn slot_degree(&self, i: usize, j: usize, m: usize) -> i32 {
        self.degree + i as i32 - j as i32 - 2 * m as i32
    }

    pub fn entry(&self, i: usize, j: usize) -> &[Element] {
        &self.entries[i][j]
    }

    pub fn coeff(&self, i: usize, j: usize, m: usize) -> Element {
        self.entries[i][j].get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Vec::is_empty)
    }

    /// Membership in `𝕍A`: the constant term of the `(1, 0)` entry vanishes.
    pub fn in_va(&self) -> bool {
        self.coeff(1, 0, 0).is_zero()
    }

    fn map(&self, degree: i32, f: impl Fn(usize, usize, usize, &Element) -> Element) -> Matrix2U {
        let mut out = Matrix2U::zero(degree);
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = trim(self.entries[i][j].iter().enumerate().map(|(m, c)| f(i, j, m, c)).collect());
            }
        }
        out
    }

    pub fn scaled(&self, c: &Q) -> Matrix2U {
        self.map(self.degree, |_, _, _, x| x.scaled(c))
    }

    pub fn add(&self, other: &Matrix2U) -> Result<Matrix2U> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        let mut out = Matrix2U::zero(self.degree);
        for i in 0..2 {
            for j in 0..2 {
                let n = self.entries[i][j].len().max(other.entries[i][j].len());
                out.entries[i][j] = trim((0..n).map(|m| &self.coeff(i, j, m) + &other.coeff(i, j, m)).collect());
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix2U) -> Result<Matrix2U> {
        self.add(&other.scaled(&int(-1)))
    }

    /// Multiplication by `u`.
    pub fn times_u(&self) -> Matrix2U {
        let mut out = self.clone();
        out.degree += 2;
        for e in out.entries.iter_mut().flatten() {
            if !e.is_empty() {
                e.insert(0, Element::zero());
            }
        }
        out
    }

    /// Derivative with respect to `u`.
    pub fn d_du(&self) -> Matrix2U {
        let mut out = Matrix2U::zero(self.degree - 2);
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] =
                    trim(self.entries[i][j].iter().enumerate().skip(1).map(|(m, c)| c.scaled(&int(m as i64))).collect());
            }
        }
        out
    }

    /// `q`: the constant term of the `(0, 0)` entry, alone.
    pub fn project_q(&self) -> Matrix2U {
        let mut out = Matrix2U::zero(self.degree);
        out.entries[0][0] = trim(vec![self.coeff(0, 0, 0)]);
        out
    }

    /// `Q`: evaluation at `u = 0`.
    pub fn project_u0(&self) -> Matrix2U {
        self.map(self.degree, |_, _, m, c| if m == 0 { c.clone() } else { Element::zero() })
    }
}

/// Operations of `𝕌A` over a coefficient algebra.
pub struct UAlgebra<'a> {
    pub a: &'a DGAlgebra,
}

impl<'a> UAlgebra<'a> {
    pub fn new(a: &'a DGAlgebra) -> Self {
        UAlgebra { a }
    }

    /// `c · 1`.
    pub fn scalar(&self, c: &Q) -> Matrix2U {
        let mut m = Matrix2U::zero(0);
        let x = self.a.scalar(c);
        m.entries[0][0] = trim(vec![x.clone()]);
        m.entries[1][1] = trim(vec![x]);
        m
    }

    pub fn identity(&self) -> Matrix2U {
        self.scalar(&int(1))
    }

    /// `u · 1`.
    pub fn u(&self) -> Matrix2U {
        self.identity().times_u()
    }

    /// `a₀ = [[0, 1], [u, 0]]`.
    pub fn a0(&self) -> Matrix2U {
        let mut m = Matrix2U::zero(1);
        m.entries[0][1] = vec![self.a.one()];
        m.entries[1][0] = vec![Element::zero(), self.a.one()];
        m
    }

    pub fn mul(&self, x: &Matrix2U, y: &Matrix2U) -> Matrix2U {
        let mut out = Matrix2U::zero(x.degree + y.degree);
        for i in 0..2 {
            for j in 0..2 {
                let mut poly: Vec<Element> = Vec::new();
                for k in 0..2 {
                    for (m1, c1) in x.entries[i][k].iter().enumerate() {
                        for (m2, c2) in y.entries[k][j].iter().enumerate() {
                            let p = self.a.mul(c1, c2);
                            if p.is_zero() {
                                continue;
                            }
                            if poly.len() <= m1 + m2 {
                                poly.resize(m1 + m2 + 1, Element::zero());
                            }
                            poly[m1 + m2] = &poly[m1 + m2] + &p;
                        }
                    }
                }
                out.entries[i][j] = trim(poly);
            }
        }
        out
    }

    /// `(dx)_{ij} = (-1)^i d(x_{ij})`.
    pub fn d(&self, x: &Matrix2U) -> Matrix2U {
        x.map(x.degree + 1, |i, _, _, c| self.a.d(c).scaled(&sign(i as i64)))
    }

    /// Graded commutator `[x, y] = xy - (-1)^{|x||y|} yx`.
    pub fn commutator(&self, x: &Matrix2U, y: &Matrix2U) -> Matrix2U {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x).scaled(&sign(x.degree as i64 * y.degree as i64));
        xy.sub(&yx).expect("equal degrees")
    }

    /// `d_a x = dx + [a, x]`.
    pub fn twisted_d(&self, a: &Matrix2U, x: &Matrix2U) -> Matrix2U {
        self.d(x).add(&self.commutator(a, x)).expect("equal degrees")
    }

    /// A basis of `𝕍A^t`: one matrix per slot `(i, j, m)` and basis element of its coefficient space.
    pub fn va_basis(&self, t: i32) -> Vec<Matrix2U> {
        let mut out = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                let mut m = 0;
                loop {
                    let s = t + i as i32 - j as i32 - 2 * m as i32;
                    if s < self.a.lo() {
                        break;
                    }
                    if !(i == 1 && j == 0 && m == 0) {
                        for b in 0..self.a.dim(s) {
                            let mut x = Matrix2U::zero(t);
                            let mut poly = vec![Element::zero(); m + 1];
                            poly[m] = self.a.basis_element(s, b);
                            x.entries[i][j] = poly;
                            out.push(x);
                        }
                    }
                    m += 1;
                }
            }
        }
        out
    }

    /// Membership in the thick nerve: `da + a² = u·1` and `a - a₀ ∈ 𝕍A¹`.
    pub fn thick_edge_check(&self, a: &Matrix2U) -> bool {
        if a.degree != 1 {
            return false;
        }
        let curvature = self.d(a).add(&self.mul(a, a)).expect("degree 2");
        curvature == self.u() && a.sub(&self.a0()).expect("degree 1").in_va()
    }
}

/// Vertex words of `𝚫¹` read by the four entries of `ψ`, for the power `u^m`.
fn psi_word(i: usize, j: usize, m: usize) -> Option<Vec<usize>> {
    let alternate = |start: usize, len: usize| (0..len).map(|k| (start + k) % 2).collect::<Vec<_>>();
    match (i, j) {
        (0, 0) => Some(alternate(0, 2 * m + 1)),
        (0, 1) => Some(alternate(0, 2 * m + 2)),
        (1, 0) => (m > 0).then(|| alternate(1, 2 * m)),
        _ => Some(alternate(1, 2 * m + 1)),
    }
}

/// Sign relating a component of `x ∈ C^•(𝚫¹) ⊗ A` of total degree `t` to the
/// entry of `ψ(x)` it fills: the second column carries `(-1)` to the
/// coefficient degree.
fn psi_sign(t: i32, j: usize, word_len: usize) -> Q {
    if j == 1 {
        sign((t - word_len as i32 + 1) as i64)
    } else {
        int(1)
    }
}

fn check_thick_interval(c: &CochainAlgebra, t: i32) -> Result<()> {
    if c.shape.top() >= 1 && c.shape.cell_of_word(&[1, 0]).is_none() {
        return Err(Error::InvalidArgument("ψ needs cochains on the thick interval".into()));
    }
    let needed = (t - c.coeff.lo()).max(0) as usize;
    if c.shape.top() < needed {
        return Err(Error::InsufficientTruncation { needed, available: c.shape.top() });
    }
    Ok(())
}

/// `ψ: C^•(𝚫¹) ⊗ A -> 𝕍A` on an element of total degree `t`.
pub fn psi(c: &CochainAlgebra, x: &Element, t: i32) -> Result<Matrix2U> {
    check_thick_interval(c, t)?;
    if !x.is_homogeneous_of(t) {
        return Err(Error::DegreeMismatch { expected: t, found: x.parts().map(|(d, _)| d).find(|&d| d != t).unwrap_or(t) });
    }
    let mut m = Matrix2U::zero(t);
    for i in 0..2 {
        for j in 0..2 {
            let mut poly = Vec::new();
            for k in 0.. {
                let Some(w) = psi_word(i, j, k) else {
                    poly.push(Element::zero());
                    continue;
                };
                if w.len() - 1 > c.shape.top() {
                    break;
                }
                poly.push(c.component_by_word(x, &w).scaled(&psi_sign(t, j, w.len())));
            }
            m.entries[i][j] = trim(poly);
        }
    }
    Ok(m)
}

/// The inverse of `ψ` on `𝕍A`.
pub fn psi_inverse(c: &CochainAlgebra, m: &Matrix2U) -> Result<Element> {
    let t = m.degree;
    check_thick_interval(c, t)?;
    if !m.in_va() {
        return Err(Error::InvalidArgument("ψ⁻¹ is defined on 𝕍A only".into()));
    }
    let mut words: Vec<(Vec<usize>, Element)> = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for (k, coef) in m.entries[i][j].iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                let w = psi_word(i, j, k).expect("𝕍A has no constant (1,0) term");
                if w.len() - 1 > c.shape.top() {
                    return Err(Error::InsufficientTruncation { needed: w.len() - 1, available: c.shape.top() });
                }
                words.push((w.clone(), coef.scaled(&psi_sign(t, j, w.len()))));
            }
        }
    }
    Ok(c.from_words(words.iter().map(|(w, e)| (w.as_slice(), e))))
}

/// `ψ(δx) = dψ(x) + [a₀, ψ(x)]`.
pub fn delta_check(c: &CochainAlgebra, x: &Element, t: i32) -> Result<bool> {
    let u = UAlgebra::new(&c.coeff);
    let lhs = psi(c, &c.algebra.d(x), t + 1)?;
    let px = psi(c, x, t)?;
    let rhs = u.d(&px).add(&u.commutator(&u.a0(), &px))?;
    Ok(lhs == rhs)
}
