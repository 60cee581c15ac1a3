use super::cert::{CertBuilder, ExpansionCertificate};
use crate::error::{Error, Result};
use crate::simplicial::{
    boundary, horn, increasing_mask, letter_mask, product_with_pairs, shuffle_grade, spine, standard_simplex,
    thick_simplex, thickify_with_keys, union_of_faces, FiniteSimplicialSet, Inclusion, Mask, Prism, ProductSet,
    SimplexRef,
};

/// Which factor of a product carries the horn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `Δ^m × S ∪ Λ^m_i × T -> Δ^m × T`
    Left,
    /// `S × Δ^n ∪ T × Λ^n_j -> T × Δ^n`
    Right,
}

fn complete_dim(t: &FiniteSimplicialSet) -> usize {
    if t.is_complete() {
        t.trunc_dim()
    } else {
        t.trunc_dim().saturating_sub(1)
    }
}

/// A union of `0 < |faces| <= n` faces of `Δ^n`, filled face by face.
pub fn cert_union_of_faces(n: usize, faces: &[usize]) -> Result<ExpansionCertificate> {
    let mut faces = faces.to_vec();
    faces.sort_unstable();
    faces.dedup();
    if faces.is_empty() || faces.len() > n {
        return Err(Error::InvalidArgument(format!("need between 1 and {n} faces, got {}", faces.len())));
    }
    let base = union_of_faces(n, &faces)?;
    let t = base.ambient.clone();
    let mut b = CertBuilder::new(&t, &base.mask(), false);
    b.attach_proper(n, 0)?;
    Ok(b.finish(base, faces.len(), false, n).monotonized())
}

/// The single horn `Λ^n_i -> Δ^n`.
pub fn cert_horn(n: usize, i: usize) -> Result<ExpansionCertificate> {
    let base = horn(n, i)?;
    let t = base.ambient.clone();
    let mut b = CertBuilder::new(&t, &base.mask(), false);
    b.attach(n, 0, i)?;
    Ok(b.finish(base, n, i > 0 && i < n, n))
}

/// Order of the top cells of a prism: by grade `b(π, i)`, ties by cell id.
fn prism_order(prism: &Prism, i: usize, tilde: bool) -> Vec<usize> {
    let mut shuffles = if tilde { prism.dual_shuffles() } else { prism.shuffles() };
    shuffles.sort_by_key(|(_, a)| shuffle_grade(a, i));
    shuffles.into_iter().map(|(c, _)| c).collect()
}

/// Steps of the shuffle filtration as `(dim, cell, horn index)` in the prism.
fn prism_steps(prism: &Prism, i: usize, tilde: bool, inner: bool) -> Result<(Mask, Vec<(usize, usize, usize)>)> {
    let base = if tilde { prism.tilde_horn_mask(i)? } else { prism.horn_mask(i)? };
    let t = prism.set();
    let mut b = CertBuilder::new(t, &base, inner);
    let top = prism.m + prism.n;
    for c in prism_order(prism, i, tilde) {
        b.attach_proper(top, c)?;
    }
    let cert = b.finish(Inclusion::identity(t), 1, inner, 0);
    Ok((base, cert.steps.iter().map(|s| (s.n, s.new_cell, s.i)).collect()))
}

fn prism_cert(m: usize, n: usize, i: usize, tilde: bool, inner: bool) -> Result<ExpansionCertificate> {
    let prism = Prism::new(m, n);
    let (mask, steps) = prism_steps(&prism, i, tilde, inner)?;
    let base = Inclusion::from_mask(prism.set(), &mask)?;
    let t = prism.set().clone();
    let mut b = CertBuilder::new(&t, &mask, inner);
    for (d, c, j) in steps {
        b.attach(d, c, j)?;
    }
    let grade = if tilde { n } else { m };
    Ok(b.finish(base, grade, inner, m + n).monotonized())
}

/// `Λ^{m,n}_i -> Δ^m × Δ^n`, attaching shuffles in increasing `b(π, i)`.
pub fn cert_prism_horn(m: usize, n: usize, i: usize) -> Result<ExpansionCertificate> {
    if m == 0 || i > m {
        return Err(Error::InvalidArgument(format!("need 0 <= i <= m and m > 0, got m = {m}, i = {i}")));
    }
    prism_cert(m, n, i, false, false)
}

/// `Λ̃^{m,n}_j -> Δ^m × Δ^n`, attaching shuffles in increasing dual grade.
pub fn cert_prism_horn_tilde(m: usize, n: usize, j: usize) -> Result<ExpansionCertificate> {
    if n == 0 || j > n {
        return Err(Error::InvalidArgument(format!("need 0 <= j <= n and n > 0, got n = {n}, j = {j}")));
    }
    prism_cert(m, n, j, true, false)
}

/// `Δ^m × S ∪ Λ^m_i × T -> Δ^m × T` (or the mirror image), attaching the
/// prism over each cell of `T \ S` in increasing dimension. With `inner`,
/// the horn index must be inner and every step is inner.
pub fn cert_product_with_pair(
    inc: &Inclusion,
    m: usize,
    i: usize,
    side: Side,
    inner: bool,
) -> Result<ExpansionCertificate> {
    if m == 0 || i > m {
        return Err(Error::InvalidArgument(format!("need 0 <= i <= m and m > 0, got m = {m}, i = {i}")));
    }
    if inner && (i == 0 || i == m) {
        return Err(Error::InvalidArgument(format!("horn index {i} is not inner for m = {m}")));
    }
    let t = &inc.ambient;
    let simplex = standard_simplex(m);
    let h = horn(m, i)?.mask();
    let s_mask = inc.mask();
    let (prod, base_mask): (ProductSet, Mask) = match side {
        Side::Left => {
            let p = product_with_pairs(&simplex, t);
            let a = p.sub_product(&Mask::full(&simplex), &s_mask);
            let b = p.sub_product(&h, &Mask::full(t));
            let mask = a.union(&b);
            (p, mask)
        }
        Side::Right => {
            let p = product_with_pairs(t, &simplex);
            let a = p.sub_product(&s_mask, &Mask::full(&simplex));
            let b = p.sub_product(&Mask::full(t), &h);
            let mask = a.union(&b);
            (p, mask)
        }
    };
    let amb = prod.set.clone();
    let mut b = CertBuilder::new(&amb, &base_mask, inner);
    for l in 0..=t.trunc_dim() {
        if (0..t.num_cells(l)).all(|c| s_mask.contains(l, c)) {
            continue;
        }
        let prism = match side {
            Side::Left => Prism::new(m, l),
            Side::Right => Prism::new(l, m),
        };
        let (_, steps) = prism_steps(&prism, i, side == Side::Right, inner)?;
        for tau in (0..t.num_cells(l)).filter(|&c| !s_mask.contains(l, c)) {
            for &(d, c, j) in &steps {
                if d > amb.trunc_dim() {
                    continue;
                }
                let (a, bb) = prism.product.pair(d, c);
                let (x, y) = match side {
                    Side::Left => (a.clone(), SimplexRef { dim: d, degens: bb.degens.clone(), base: tau }),
                    Side::Right => (SimplexRef { dim: d, degens: a.degens.clone(), base: tau }, bb.clone()),
                };
                let r = prod.lookup_pair(&x, &y).ok_or_else(|| Error::Invariant("prism cell missing".into()))?;
                if r.is_degenerate() {
                    return Err(Error::Invariant("prism interior cell maps to a degenerate simplex".into()));
                }
                b.attach(d, r.base, j)?;
            }
        }
    }
    let base = Inclusion::from_mask(&amb, &base_mask)?;
    let cd = complete_dim(&amb);
    Ok(b.finish(base, m, inner, cd).monotonized())
}

fn letters(w: &[usize], n: usize) -> Vec<bool> {
    let mut p = vec![false; n + 1];
    w.iter().for_each(|&v| p[v] = true);
    p
}

/// Words of `𝚫^n` outside `𝚲^n_i ∪ Δ^n`.
fn outside_thick_horn(w: &[usize], n: usize, i: usize) -> bool {
    let p = letters(w, n);
    let in_horn = (0..=n).any(|j| j != i && !p[j]);
    let increasing = w.windows(2).all(|x| x[0] < x[1]);
    !in_horn && !increasing
}

/// Membership of a nondegenerate word `w` (length `k + 1`) in `Q_{k,m}`
/// for the inclusion `𝚲^n_i ∪ Δ^n -> 𝚫^n`.
pub fn lambda_q(w: &[usize], n: usize, i: usize, m: usize) -> bool {
    let k = w.len() - 1;
    if i + m >= k || !outside_thick_horn(w, n, i) {
        return false;
    }
    let b = (i..i + m).all(|j| j >= 1 && w[j - 1] == w[j + 1]);
    let c = w[i + m] == i;
    let d = i + m >= 1 && w[i + m - 1] != w[i + m + 1];
    b && c && d
}

/// The sets `Q_{k,m}` in attachment order: increasing `k`, decreasing `m`,
/// words in lexicographic order.
pub fn lambda_batches(n: usize, i: usize, trunc: usize) -> Vec<((usize, usize), Vec<Vec<usize>>)> {
    let t = thick_simplex(n, trunc);
    let mut out = Vec::new();
    for k in 1..=t.trunc_dim() {
        for m in (0..k.saturating_sub(i)).rev() {
            let words: Vec<Vec<usize>> = (0..t.num_cells(k))
                .map(|c| t.word(k, c).to_vec())
                .filter(|w| lambda_q(w, n, i, m))
                .collect();
            if !words.is_empty() {
                out.push(((k, m), words));
            }
        }
    }
    out
}

/// `𝚲^n_i ∪ Δ^n -> 𝚫^n` for `0 < i < n`, truncated.
pub fn cert_thick_inner_horn(n: usize, i: usize, trunc: usize) -> Result<ExpansionCertificate> {
    if i == 0 || i >= n {
        return Err(Error::InvalidArgument(format!("horn index {i} is not inner for n = {n}")));
    }
    let t = thick_simplex(n, trunc);
    let mask = letter_mask(&t, n, |p| (0..=n).any(|j| j != i && !p[j])).union(&increasing_mask(&t));
    let mut b = CertBuilder::new(&t, &mask, true);
    for ((k, m), words) in lambda_batches(n, i, trunc) {
        for w in words {
            let (_, c) = t.lookup_cell(&w).expect("word of the thick simplex");
            b.attach(k, c, i + m)?;
        }
    }
    let base = Inclusion::from_mask(&t, &mask)?;
    Ok(b.finish(base, n, true, complete_dim(&t)))
}

/// Steps `(dim, word, horn index)` of `𝚲^n_i -> 𝚫^n` for `n > 1`: the
/// standard simplex along `Λ^n_1`, then the lambda filtration, carried to
/// index `i` by the letter transposition `(1 i)`.
fn thick_horn_steps(n: usize, i: usize, trunc: usize) -> Vec<(usize, Vec<usize>, usize)> {
    if n > trunc {
        return Vec::new();
    }
    let swap = |v: usize| if v == 1 { i } else if v == i { 1 } else { v };
    let mut steps = vec![(n, (0..=n).collect::<Vec<usize>>(), 1)];
    for ((k, m), words) in lambda_batches(n, 1, trunc) {
        steps.extend(words.into_iter().map(|w| (k, w, 1 + m)));
    }
    steps.into_iter().map(|(k, w, j)| (k, w.into_iter().map(swap).collect(), j)).collect()
}

/// `𝚲^n_i -> 𝚫^n` for `n > 1`, an inner `n`-expansion.
pub fn cert_thick_horn(n: usize, i: usize, trunc: usize) -> Result<ExpansionCertificate> {
    if n < 2 || i > n {
        return Err(Error::InvalidArgument(format!("need n > 1 and 0 <= i <= n, got n = {n}, i = {i}")));
    }
    let t = thick_simplex(n, trunc);
    let mask = letter_mask(&t, n, |p| (0..=n).any(|j| j != i && !p[j]));
    let mut b = CertBuilder::new(&t, &mask, true);
    for (k, w, j) in thick_horn_steps(n, i, trunc) {
        let (_, c) = t.lookup_cell(&w).expect("word of the thick simplex");
        b.attach(k, c, j)?;
    }
    let base = Inclusion::from_mask(&t, &mask)?;
    Ok(b.finish(base, n, true, complete_dim(&t)))
}

/// `S ×_Δ 𝚫 ∪ T -> T ×_Δ 𝚫` from an inner expansion `S -> T`: each step is
/// replaced by the lambda filtration of its simplex.
pub fn cert_thickify_inner(cert: &ExpansionCertificate, trunc: usize) -> Result<ExpansionCertificate> {
    if !cert.inner {
        return Err(Error::InvalidArgument("the input certificate must be inner".into()));
    }
    thickify_cert(cert, trunc, true)
}

/// `S ×_Δ 𝚫 -> T ×_Δ 𝚫` from an `m`-expansion `S -> T` with `m > 1`; the
/// result is an inner `m`-expansion.
pub fn cert_thickify_expansion(cert: &ExpansionCertificate, trunc: usize) -> Result<ExpansionCertificate> {
    if cert.m < 2 {
        return Err(Error::InvalidArgument("the input grade must exceed 1".into()));
    }
    thickify_cert(cert, trunc, false)
}

fn thickify_cert(cert: &ExpansionCertificate, trunc: usize, keep_flat: bool) -> Result<ExpansionCertificate> {
    let t = cert.ambient();
    if !t.is_complete() {
        return Err(Error::InvalidArgument("the input ambient must be finite".into()));
    }
    let ts = thickify_with_keys(t, trunc);
    let amb = ts.set.clone();
    let s_mask = ts.thick_of(&cert.base.mask());
    let mask = if keep_flat { s_mask.union(&ts.flat_copy(&Mask::full(t))) } else { s_mask };
    let mut b = CertBuilder::new(&amb, &mask, true);
    for s in &cert.steps {
        let steps: Vec<(usize, Vec<usize>, usize)> = if keep_flat {
            lambda_batches(s.n, s.i, trunc)
                .into_iter()
                .flat_map(|((k, m), ws)| ws.into_iter().map(move |w| (k, w, s.i + m)))
                .collect()
        } else {
            thick_horn_steps(s.n, s.i, trunc)
        };
        for (k, w, j) in steps {
            if k > amb.trunc_dim() {
                continue;
            }
            let r = ts
                .image(t, (s.n, s.new_cell), &w)
                .ok_or_else(|| Error::Invariant("thick image missing".into()))?;
            if r.is_degenerate() {
                return Err(Error::Invariant("thick image is degenerate".into()));
            }
            b.attach(k, r.base, j)?;
        }
    }
    let base = Inclusion::from_mask(&amb, &mask)?;
    let cd = complete_dim(&amb);
    Ok(b.finish(base, cert.m, true, cd).monotonized())
}

/// Block decomposition of a cylinder cell `Δ^n × 𝚫^1`: the `𝚫^1` letters
/// grouped by the `Δ^n` coordinate. `None` when some block is empty.
fn cylinder_blocks(first: &[usize], second: &[usize], n: usize) -> Option<Vec<Vec<usize>>> {
    let mut blocks = vec![Vec::new(); n + 1];
    for (&a, &b) in first.iter().zip(second) {
        blocks[a].push(b);
    }
    blocks.iter().all(|b| !b.is_empty()).then_some(blocks)
}

fn alternating(len: usize, start: usize) -> Vec<usize> {
    (0..len).map(|t| (start + t) % 2).collect()
}

/// The attachment key `(k, ℓ, m)` of a cylinder cell, if it has one.
fn cylinder_key(blocks: &[Vec<usize>], n: usize) -> Option<(usize, usize, usize)> {
    let k = blocks.iter().map(Vec::len).sum::<usize>() - 1;
    let t = blocks.iter().position(|b| b.as_slice() != [0])?;
    let b = &blocks[t];
    let m = b.len() - 1;
    if m == 0 {
        return None;
    }
    if t == 0 {
        // mirror cell ending in 0
        (*b == alternating(m + 1, m % 2)).then_some((k, n, m))
    } else {
        (*b == alternating(m + 1, 0)).then_some((k, n - t, m))
    }
}

/// `∂Δ^n × 𝚫^1 ∪ Δ^n × (0) -> Δ^n × 𝚫^1`, truncated; inner for `n > 0`.
pub fn cert_cylinder(n: usize, trunc: usize) -> Result<ExpansionCertificate> {
    let simplex = standard_simplex(n);
    let thick = thick_simplex(1, trunc);
    let prod = product_with_pairs(&simplex, &thick);
    let amb = prod.set.clone();
    let bd = boundary(n).mask();
    let mut vertex0 = Mask::empty(&thick);
    vertex0.insert(0, 0);
    let mask = prod.sub_product(&bd, &Mask::full(&thick)).union(&prod.sub_product(&Mask::full(&simplex), &vertex0));
    let mut keyed: Vec<((usize, usize, usize), usize, usize)> = Vec::new();
    for d in 1..=amb.trunc_dim() {
        for c in 0..amb.num_cells(d) {
            if mask.contains(d, c) {
                continue;
            }
            let (a, b) = prod.pair(d, c);
            let first = simplex.simplex_word(a);
            let second = thick.simplex_word(b);
            let key = if n == 0 {
                (second[0] == 0 && second.len() >= 2).then_some((d, 0, d))
            } else {
                cylinder_blocks(&first, &second, n).and_then(|bl| cylinder_key(&bl, n))
            };
            if let Some(key) = key {
                keyed.push((key, d, c));
            }
        }
    }
    keyed.sort();
    let mut b = CertBuilder::new(&amb, &mask, n > 0);
    for (_, d, c) in keyed {
        b.attach_horn(d, c)?;
    }
    let base = Inclusion::from_mask(&amb, &mask)?;
    let cd = complete_dim(&amb);
    Ok(b.finish(base, 1, n > 0, cd))
}

/// Membership in `Q_{k,m}` for `∂𝚫^n ∪ Δ^n -> 𝚫^n`: all letters occur, the
/// word is not increasing, it starts `0, 1, ..., m`, and the rest has minimum `m`.
pub fn mu_q(w: &[usize], n: usize, m: usize) -> bool {
    if m >= n || w.len() < m + 2 {
        return false;
    }
    let p = letters(w, n);
    if p.iter().any(|&b| !b) || w.windows(2).all(|x| x[0] < x[1]) {
        return false;
    }
    (0..=m).all(|j| w[j] == j) && w[m + 1..].iter().min() == Some(&m)
}

/// `∂𝚫^n ∪ Δ^n -> 𝚫^n`, truncated: `Q_{k,m}` in increasing `k`, decreasing
/// `m`, each along the face `d_m`.
pub fn cert_thick_boundary(n: usize, trunc: usize) -> Result<ExpansionCertificate> {
    if n == 0 {
        return Err(Error::InvalidArgument("need n > 0".into()));
    }
    let t = thick_simplex(n, trunc);
    let mask = letter_mask(&t, n, |p| p.iter().any(|&b| !b)).union(&increasing_mask(&t));
    let mut b = CertBuilder::new(&t, &mask, false);
    for k in 1..=t.trunc_dim() {
        for m in (0..n).rev() {
            for c in 0..t.num_cells(k) {
                if mu_q(t.word(k, c), n, m) {
                    b.attach(k, c, m)?;
                }
            }
        }
    }
    let base = Inclusion::from_mask(&t, &mask)?;
    Ok(b.finish(base, 1, false, complete_dim(&t)))
}

/// The spine `T^n_n -> Δ^n`: simplices with `i_1 = i_0 + 1` in increasing
/// dimension, then decreasing vertex sum, each along `d_1`.
pub fn cert_spine(n: usize) -> Result<ExpansionCertificate> {
    let base = spine(n);
    let t = base.ambient.clone();
    let mut order: Vec<(usize, std::cmp::Reverse<usize>, usize)> = Vec::new();
    for k in 2..=n {
        for c in 0..t.num_cells(k) {
            let w = t.word(k, c);
            if w[1] == w[0] + 1 {
                order.push((k, std::cmp::Reverse(w.iter().sum()), c));
            }
        }
    }
    order.sort();
    let mut b = CertBuilder::new(&t, &base.mask(), true);
    for (k, _, c) in order {
        b.attach(k, c, 1)?;
    }
    Ok(b.finish(base, 1, true, n))
}

/// `(T^n_n ×_Δ 𝚫) ∪ Δ^n -> 𝚫^n`, truncated.
pub fn cert_spine_thick(n: usize, trunc: usize) -> Result<ExpansionCertificate> {
    cert_thickify_inner(&cert_spine(n)?, trunc)
}
