use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{int, sign, Q};
use crate::error::{Error, Result};

/// Sparse coordinate vector `(basis index, coefficient)`.
pub type SparseVec = Vec<(usize, Q)>;

/// An element of a graded vector space: one coordinate vector per degree.
/// Zero components are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    parts: BTreeMap<i32, Vec<Q>>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn homogeneous(degree: i32, coords: Vec<Q>) -> Self {
        let mut e = Element::zero();
        if coords.iter().any(|c| !c.is_zero()) {
            e.parts.insert(degree, coords);
        }
        e
    }

    pub fn part(&self, degree: i32) -> Option<&[Q]> {
        self.parts.get(&degree).map(Vec::as_slice)
    }

    /// Coordinates in `degree`, padded with zeros to `dim`.
    pub fn coords(&self, degree: i32, dim: usize) -> Vec<Q> {
        let mut v = self.parts.get(&degree).cloned().unwrap_or_default();
        v.resize(dim, Q::zero());
        v
    }

    pub fn parts(&self) -> impl Iterator<Item = (i32, &[Q])> {
        self.parts.iter().map(|(&d, v)| (d, v.as_slice()))
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// The degree of a nonzero homogeneous element.
    pub fn degree(&self) -> Option<i32> {
        match self.parts.len() {
            1 => self.parts.keys().next().copied(),
            _ => None,
        }
    }

    /// True when the element is zero or concentrated in `degree`.
    pub fn is_homogeneous_of(&self, degree: i32) -> bool {
        self.parts.keys().all(|&d| d == degree)
    }

    /// The component in `degree` alone.
    pub fn component(&self, degree: i32) -> Element {
        self.parts.get(&degree).map(|v| Element::homogeneous(degree, v.clone())).unwrap_or_default()
    }

    fn combine(&self, other: &Element, f: impl Fn(&Q, &Q) -> Q) -> Element {
        let mut out = Element::zero();
        let degrees: std::collections::BTreeSet<i32> = self.parts.keys().chain(other.parts.keys()).copied().collect();
        let z = Q::zero();
        for d in degrees {
            let (a, b) = (self.parts.get(&d), other.parts.get(&d));
            let n = a.map_or(0, Vec::len).max(b.map_or(0, Vec::len));
            let v: Vec<Q> = (0..n)
                .map(|k| f(a.and_then(|a| a.get(k)).unwrap_or(&z), b.and_then(|b| b.get(k)).unwrap_or(&z)))
                .collect();
            out.add_part(d, v);
        }
        out
    }

    fn add_part(&mut self, degree: i32, coords: Vec<Q>) {
        if coords.iter().any(|c| !c.is_zero()) {
            self.parts.insert(degree, coords);
        }
    }

    pub fn scaled(&self, c: &Q) -> Element {
        let mut out = Element::zero();
        if c.is_zero() {
            return out;
        }
        for (&d, v) in &self.parts {
            out.add_part(d, v.iter().map(|x| x * c).collect());
        }
        out
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scaled(&-Q::one())
    }
}

impl Mul<&Element> for &Q {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scaled(self)
    }
}

/// A finite-dimensional differential graded algebra over the rationals,
/// given by structure constants on a basis in degrees `lo..=hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGAlgebra {
    name: String,
    lo: i32,
    basis: Vec<Vec<String>>,
    /// `diff[i - lo][row][col]`: matrix of `d: A^i -> A^{i+1}`.
    diff: Vec<Vec<Vec<Q>>>,
    /// `prod[(i, j)][p][q]`: product of basis elements `p ∈ A^i`, `q ∈ A^j`.
    prod: BTreeMap<(i32, i32), Vec<Vec<SparseVec>>>,
    unit: Vec<Q>,
}

impl DGAlgebra {
    /// Builds an algebra and checks every invariant.
    pub fn new(
        name: impl Into<String>,
        lo: i32,
        basis: Vec<Vec<String>>,
        diff: Vec<Vec<Vec<Q>>>,
        prod: BTreeMap<(i32, i32), Vec<Vec<SparseVec>>>,
        unit: Vec<Q>,
    ) -> Result<Self> {
        let a = Self::from_tables(name, lo, basis, diff, prod, unit)?;
        a.validate()?;
        Ok(a)
    }

    /// Builds an algebra checking only table shapes.
    pub(crate) fn from_tables(
        name: impl Into<String>,
        lo: i32,
        basis: Vec<Vec<String>>,
        diff: Vec<Vec<Vec<Q>>>,
        prod: BTreeMap<(i32, i32), Vec<Vec<SparseVec>>>,
        unit: Vec<Q>,
    ) -> Result<Self> {
        let a = DGAlgebra { name: name.into(), lo, basis, diff, prod, unit };
        a.check_shapes()?;
        Ok(a)
    }

    fn check_shapes(&self) -> Result<()> {
        let bad = |s: String| Err(Error::Malformed(s));
        if self.basis.is_empty() || self.lo > 0 || self.hi() < 0 {
            return bad("the degree range must contain 0".into());
        }
        if self.diff.len() != self.basis.len() {
            return bad("one differential matrix per degree is required".into());
        }
        for i in self.lo..=self.hi() {
            let m = &self.diff[(i - self.lo) as usize];
            if m.len() != self.dim(i + 1) || m.iter().any(|r| r.len() != self.dim(i)) {
                return bad(format!("differential in degree {i} has the wrong shape"));
            }
        }
        for (&(i, j), t) in &self.prod {
            if !self.in_range(i) || !self.in_range(j) || !self.in_range(i + j) {
                return bad(format!("product table ({i},{j}) is out of the degree range"));
            }
            if t.len() != self.dim(i) || t.iter().any(|r| r.len() != self.dim(j)) {
                return bad(format!("product table ({i},{j}) has the wrong shape"));
            }
            if t.iter().flatten().flatten().any(|(k, _)| *k >= self.dim(i + j)) {
                return bad(format!("product table ({i},{j}) refers to a missing basis element"));
            }
        }
        if self.unit.len() != self.dim(0) {
            return bad("unit has the wrong length".into());
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.basis.len() as i32 - 1
    }

    fn in_range(&self, i: i32) -> bool {
        i >= self.lo && i <= self.hi()
    }

    pub fn dim(&self, i: i32) -> usize {
        if self.in_range(i) {
            self.basis[(i - self.lo) as usize].len()
        } else {
            0
        }
    }

    pub fn labels(&self, i: i32) -> &[String] {
        if self.in_range(i) {
            &self.basis[(i - self.lo) as usize]
        } else {
            &[]
        }
    }

    pub fn diff_matrix(&self, i: i32) -> &[Vec<Q>] {
        if self.in_range(i) {
            &self.diff[(i - self.lo) as usize]
        } else {
            &[]
        }
    }

    pub fn product_tables(&self) -> &BTreeMap<(i32, i32), Vec<Vec<SparseVec>>> {
        &self.prod
    }

    /// The least `k` with `A^i = 0` for all `i <= -k`.
    pub fn vanishing_order(&self) -> i32 {
        let lowest = (self.lo..=self.hi()).find(|&i| self.dim(i) > 0).unwrap_or(0);
        1 - lowest.min(0)
    }

    pub fn basis_element(&self, i: i32, k: usize) -> Element {
        let mut v = vec![Q::zero(); self.dim(i)];
        v[k] = Q::one();
        Element::homogeneous(i, v)
    }

    /// Every basis element as `(degree, index, element)`.
    pub fn basis_elements(&self) -> Vec<(i32, usize, Element)> {
        (self.lo..=self.hi()).flat_map(|i| (0..self.dim(i)).map(move |k| (i, k, self.basis_element(i, k)))).collect()
    }

    pub fn one(&self) -> Element {
        Element::homogeneous(0, self.unit.clone())
    }

    /// `c · 1`.
    pub fn scalar(&self, c: &Q) -> Element {
        self.one().scaled(c)
    }

    /// Checks that coordinates match the basis sizes.
    pub fn check_element(&self, x: &Element) -> Result<()> {
        for (i, v) in x.parts() {
            if v.len() != self.dim(i) {
                return Err(Error::InvalidArgument(format!(
                    "element has {} coordinates in degree {i}, expected {}",
                    v.len(),
                    self.dim(i)
                )));
            }
        }
        Ok(())
    }

    pub fn d(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (i, v) in x.parts() {
            if !self.in_range(i + 1) {
                continue;
            }
            let m = self.diff_matrix(i);
            let w: Vec<Q> = m
                .iter()
                .map(|row| row.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum())
                .collect();
            out = &out + &Element::homogeneous(i + 1, w);
        }
        out
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut acc: BTreeMap<i32, Vec<Q>> = BTreeMap::new();
        for (i, u) in x.parts() {
            for (j, v) in y.parts() {
                let Some(t) = self.prod.get(&(i, j)) else { continue };
                let out = acc.entry(i + j).or_insert_with(|| vec![Q::zero(); self.dim(i + j)]);
                for (p, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                    for (q, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                        let ab = a * b;
                        for (r, c) in &t[p][q] {
                            out[*r] += &ab * c;
                        }
                    }
                }
            }
        }
        let mut e = Element::zero();
        for (d, v) in acc {
            e.add_part(d, v);
        }
        e
    }

    /// Graded commutator `[x, y] = xy - (-1)^{ij} yx`, extended bilinearly.
    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (i, _) in x.parts() {
            for (j, _) in y.parts() {
                let (xi, yj) = (x.component(i), y.component(j));
                let term = &self.mul(&xi, &yj) - &self.mul(&yj, &xi).scaled(&sign(i as i64 * j as i64));
                out = &out + &term;
            }
        }
        out
    }

    /// Human-readable linear combination of basis labels.
    pub fn format(&self, x: &Element) -> String {
        let mut terms = Vec::new();
        for (i, v) in x.parts() {
            for (k, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let label = self.labels(i).get(k).map(String::as_str).unwrap_or("?");
                terms.push(if c.is_one() { label.to_string() } else { format!("({c})·{label}") });
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    fn describe(&self, i: i32, k: usize) -> String {
        format!("{} (degree {i})", self.labels(i)[k])
    }

    /// Checks `d∘d = 0`, the graded Leibniz rule, associativity and the unit
    /// on basis elements, reporting the first failing basis tuple.
    pub fn validate(&self) -> Result<()> {
        let basis = self.basis_elements();
        let fail = |s: String| Err(Error::Invariant(format!("{}: {s}", self.name)));
        for (i, k, x) in &basis {
            if !self.d(&self.d(x)).is_zero() {
                return fail(format!("d∘d is nonzero on {}", self.describe(*i, *k)));
            }
        }
        if !self.d(&self.one()).is_zero() {
            return fail("the unit is not closed".into());
        }
        for (i, k, x) in &basis {
            if self.mul(&self.one(), x) != *x || self.mul(x, &self.one()) != *x {
                return fail(format!("the unit law fails at {}", self.describe(*i, *k)));
            }
        }
        let products: BTreeMap<(usize, usize), Element> = (0..basis.len())
            .flat_map(|p| (0..basis.len()).map(move |q| (p, q)))
            .map(|(p, q)| ((p, q), self.mul(&basis[p].2, &basis[q].2)))
            .collect();
        for (p, (i, k, x)) in basis.iter().enumerate() {
            for (q, (j, l, y)) in basis.iter().enumerate() {
                let lhs = self.d(&products[&(p, q)]);
                let rhs = &self.mul(&self.d(x), y) + &self.mul(x, &self.d(y)).scaled(&sign(*i as i64));
                if lhs != rhs {
                    return fail(format!(
                        "the Leibniz rule fails at ({}, {})",
                        self.describe(*i, *k),
                        self.describe(*j, *l)
                    ));
                }
            }
        }
        for (p, (i, k, x)) in basis.iter().enumerate() {
            for (q, (j, l, _)) in basis.iter().enumerate() {
                let xy = &products[&(p, q)];
                for (r, (m, n, z)) in basis.iter().enumerate() {
                    let yz = &products[&(q, r)];
                    if xy.is_zero() && yz.is_zero() {
                        continue;
                    }
                    if self.mul(xy, z) != self.mul(x, yz) {
                        return fail(format!(
                            "associativity fails at ({}, {}, {})",
                            self.describe(*i, *k),
                            self.describe(*j, *l),
                            self.describe(*m, *n)
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The rationals in degree 0.
pub fn ground_field() -> DGAlgebra {
    let mut prod = BTreeMap::new();
    prod.insert((0, 0), vec![vec![vec![(0, Q::one())]]]);
    DGAlgebra::from_tables("Q", 0, vec![vec!["1".into()]], vec![vec![]], prod, vec![Q::one()]).expect("ground field")
}

/// `M_n(ℚ)` in degree 0 with basis `E{r}{c}` at index `r·n + c`.
pub fn matrix_algebra(n: usize) -> DGAlgebra {
    let labels = (0..n * n).map(|k| format!("E{}{}", k / n, k % n)).collect();
    let table = (0..n * n)
        .map(|p| (0..n * n).map(|q| if p % n == q / n { vec![(p / n * n + q % n, Q::one())] } else { Vec::new() }).collect())
        .collect();
    let mut prod = BTreeMap::new();
    prod.insert((0, 0), table);
    let unit = (0..n * n).map(|k| if k / n == k % n { Q::one() } else { Q::zero() }).collect();
    DGAlgebra::from_tables(format!("M{n}(Q)"), 0, vec![labels], vec![vec![]], prod, unit).expect("matrix algebra")
}

/// `ℚ⟨ε⟩` with `ε` in degree 1, `dε = 0` and `ε² = 0`.
pub fn dual_numbers() -> DGAlgebra {
    let mut prod = BTreeMap::new();
    prod.insert((0, 0), vec![vec![vec![(0, Q::one())]]]);
    prod.insert((0, 1), vec![vec![vec![(0, Q::one())]]]);
    prod.insert((1, 0), vec![vec![vec![(0, Q::one())]]]);
    DGAlgebra::from_tables(
        "Q<e>",
        0,
        vec![vec!["1".into()], vec!["e".into()]],
        vec![vec![vec![Q::zero()]], vec![]],
        prod,
        vec![Q::one()],
    )
    .expect("dual numbers")
}

/// A finite cochain complex `V` of rational vector spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    /// Degree of the first space.
    pub lo: i32,
    pub dims: Vec<usize>,
    /// `diff[p]` maps `V^{lo+p}` to `V^{lo+p+1}`, as a `dims[p+1] × dims[p]` matrix.
    pub diff: Vec<Vec<Vec<Q>>>,
}

impl Complex {
    /// The two-term complex `ℚ --c--> ℚ` in degrees 0 and 1.
    pub fn two_term(c: i64) -> Self {
        Complex { lo: 0, dims: vec![1, 1], diff: vec![vec![vec![int(c)]]] }
    }

    fn dim(&self, p: i32) -> usize {
        usize::try_from(p - self.lo).ok().and_then(|k| self.dims.get(k).copied()).unwrap_or(0)
    }

    fn entry(&self, p: i32, row: usize, col: usize) -> Q {
        usize::try_from(p - self.lo)
            .ok()
            .and_then(|k| self.diff.get(k))
            .and_then(|m| m.get(row))
            .and_then(|r| r.get(col))
            .cloned()
            .unwrap_or_else(Q::zero)
    }
}

/// The endomorphism algebra `End(V)`, with `(dφ) = d_V φ - (-1)^i φ d_V`
/// and composition as product. Basis elements `E[p+i.r, p.c]` send the
/// basis vector `c` of `V^p` to the basis vector `r` of `V^{p+i}`.
pub fn endomorphism_algebra(v: &Complex) -> Result<DGAlgebra> {
    let len = v.dims.len() as i32;
    if len == 0 || v.diff.len() + 1 < v.dims.len() {
        return Err(Error::InvalidArgument("a complex needs its spaces and differentials".into()));
    }
    for p in v.lo..v.lo + len - 1 {
        for r in 0..v.dim(p + 2) {
            for c in 0..v.dim(p) {
                let s: Q = (0..v.dim(p + 1)).map(|t| v.entry(p + 1, r, t) * v.entry(p, t, c)).sum();
                if !s.is_zero() {
                    return Err(Error::InvalidArgument("the complex does not square to zero".into()));
                }
            }
        }
    }
    let lo = -(len - 1);
    let hi = len - 1;
    let vhi = v.lo + len - 1;
    let mut keys: Vec<Vec<(i32, usize, usize)>> = Vec::new();
    for i in lo..=hi {
        let mut k = Vec::new();
        for p in v.lo..=vhi {
            for r in 0..v.dim(p + i) {
                for c in 0..v.dim(p) {
                    k.push((p, r, c));
                }
            }
        }
        keys.push(k);
    }
    let index = |i: i32, key: (i32, usize, usize)| keys[(i - lo) as usize].iter().position(|&k| k == key);
    let basis = (lo..=hi)
        .map(|i| keys[(i - lo) as usize].iter().map(|&(p, r, c)| format!("E[{}.{r},{p}.{c}]", p + i)).collect())
        .collect();
    let mut diff = Vec::new();
    for i in lo..=hi {
        let rows = if i < hi { keys[(i + 1 - lo) as usize].len() } else { 0 };
        let cols = keys[(i - lo) as usize].len();
        let mut m = vec![vec![Q::zero(); cols]; rows];
        if i < hi {
            for (col, &(p, r, c)) in keys[(i - lo) as usize].iter().enumerate() {
                for s in 0..v.dim(p + i + 1) {
                    let e = v.entry(p + i, s, r);
                    if !e.is_zero() {
                        m[index(i + 1, (p, s, c)).expect("basis key")][col] += e;
                    }
                }
                for t in 0..v.dim(p - 1) {
                    let e = v.entry(p - 1, c, t);
                    if !e.is_zero() {
                        m[index(i + 1, (p - 1, r, t)).expect("basis key")][col] -= sign(i as i64) * e;
                    }
                }
            }
        }
        diff.push(m);
    }
    let mut prod = BTreeMap::new();
    for i in lo..=hi {
        for j in lo..=hi {
            if i + j < lo || i + j > hi {
                continue;
            }
            let table = keys[(i - lo) as usize]
                .iter()
                .map(|&(p, r, c)| {
                    keys[(j - lo) as usize]
                        .iter()
                        .map(|&(p2, r2, c2)| {
                            if p == p2 + j && c == r2 {
                                vec![(index(i + j, (p2, r, c2)).expect("basis key"), Q::one())]
                            } else {
                                Vec::new()
                            }
                        })
                        .collect()
                })
                .collect();
            prod.insert((i, j), table);
        }
    }
    let unit = keys[(-lo) as usize].iter().map(|&(_, r, c)| if r == c { Q::one() } else { Q::zero() }).collect();
    DGAlgebra::new("End(V)", lo, basis, diff, prod, unit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dga::rational::frac;

    #[test]
    fn builtin_algebras_satisfy_the_invariants() {
        ground_field().validate().unwrap();
        matrix_algebra(2).validate().unwrap();
        dual_numbers().validate().unwrap();
        for c in [0, 1, 3] {
            let a = endomorphism_algebra(&Complex::two_term(c)).unwrap();
            assert_eq!((a.lo(), a.hi()), (-1, 1));
            assert_eq!((a.dim(-1), a.dim(0), a.dim(1)), (1, 2, 1));
            assert_eq!(a.vanishing_order(), 2);
        }
        assert_eq!(matrix_algebra(2).vanishing_order(), 1);
    }

    #[test]
    fn element_arithmetic_drops_zero_parts() {
        let x = Element::homogeneous(1, vec![frac(1, 2), int(0)]);
        assert!((&x - &x).is_zero());
        assert_eq!((&x + &x).part(1).unwrap()[0], int(1));
        assert_eq!(x.degree(), Some(1));
        assert!(Element::zero().is_homogeneous_of(7));
    }

    #[test]
    fn broken_tables_are_rejected_with_the_failing_tuple() {
        let mut prod = BTreeMap::new();
        // p·p = 1 but 1 is not a unit for p.
        prod.insert((0, 0), vec![vec![vec![(0, Q::one())], vec![]], vec![vec![], vec![(0, Q::one())]]]);
        let err = DGAlgebra::new(
            "broken",
            0,
            vec![vec!["1".into(), "p".into()]],
            vec![vec![]],
            prod,
            vec![Q::one(), Q::zero()],
        )
        .unwrap_err();
        assert!(matches!(err, Error::Invariant(ref s) if s.contains("unit law fails at p")), "{err}");
    }

    #[test]
    fn matrix_units_multiply() {
        let a = matrix_algebra(2);
        let e01 = a.basis_element(0, 1);
        let e10 = a.basis_element(0, 2);
        assert_eq!(a.mul(&e01, &e10), a.basis_element(0, 0));
        assert!(a.mul(&e01, &e01).is_zero());
        assert_eq!(a.format(&a.one()), "E00 + E11");
    }
}
