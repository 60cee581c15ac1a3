use super::mapspace::{enumerate_maps, Assignment};
use super::morphism::{sub_object, Morphism};
use super::object::Tso;
use super::path::{codegeneracy_vertices, coface_vertices, Cotensor};
use crate::error::{Error, Result};
use crate::simplicial::{thick_simplex, FiniteSimplicialSet};

/// `x` marked `(k+1)`-coskeletal unless it declares a level, and a
/// truncation for thick simplices above that level.
fn assume_coskeletal(x: &Tso, k: usize) -> (Tso, usize) {
    let c = x.coskeletal_from().unwrap_or(k + 1);
    (x.clone().with_coskeletal_from(Some(c)), c.max(k + 1) + 1)
}

/// `𝔾(X)_n = Map(𝚫ⁿ, X)`, computed on the `(k+2)`-truncated thick simplices;
/// it is `(k+1)`-coskeletal.
pub fn gg_cotensor(x: &Tso, k: usize, depth: usize) -> Result<Cotensor> {
    let (x, trunc) = assume_coskeletal(x, k);
    let shapes = (0..=depth).map(|n| thick_simplex(n, trunc)).collect();
    Cotensor::build(&x, shapes, coface_vertices, codegeneracy_vertices, Some(trunc - 1))
}

pub fn gg_core(x: &Tso, k: usize, depth: usize) -> Result<Tso> {
    Ok(gg_cotensor(x, k, depth)?.object)
}

/// The natural map `𝔾(X) -> X` restricting to `Δⁿ ⊂ 𝚫ⁿ`.
pub fn gg_counit(x: &Tso, k: usize, depth: usize) -> Result<Morphism> {
    let gg = gg_cotensor(x, k, depth)?;
    let x = x.extended(depth)?.truncated(depth);
    let levels = (0..=depth)
        .map(|n| {
            let word: Vec<usize> = (0..=n).collect();
            gg.elements[n].iter().map(|a: &Assignment| eval_word(&gg.shapes[n], &x, a, &word)).collect()
        })
        .collect::<Result<Vec<Vec<usize>>>>()?;
    Morphism::new(gg.object, x, levels)
}

/// Value of an assignment on the simplex with vertex word `w`; above the
/// truncation of the shape it is the unique filler of its faces.
fn eval_word(shape: &FiniteSimplicialSet, x: &Tso, a: &Assignment, w: &[usize]) -> Result<usize> {
    if let Some(r) = shape.lookup_word(w) {
        return Ok(x.eval(a, &r));
    }
    let d = w.len() - 1;
    let faces = (0..=d)
        .map(|i| {
            let mut f = w.to_vec();
            f.remove(i);
            eval_word(shape, x, a, &f)
        })
        .collect::<Result<Vec<usize>>>()?;
    match x.fiber(d, &faces) {
        [y] => Ok(*y),
        _ => Err(Error::InsufficientTruncation { needed: d, available: shape.trunc_dim() }),
    }
}

/// How the core `G(X) ⊆ X` is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoreMethod {
    /// Image of `𝔾(X) -> X`.
    Image,
    /// Simplices whose spine edges are quasi-invertible.
    Spine,
    /// Simplices all of whose edges are quasi-invertible.
    AllEdges,
}

/// The Joyal core `G(X)` with its inclusion into `X`.
pub fn g_core(x: &Tso, k: usize, depth: usize, method: CoreMethod) -> Result<Morphism> {
    let counit = gg_counit(x, k, depth)?;
    let x = &counit.target;
    if method == CoreMethod::Image {
        let image = counit.image()?;
        let levels = (0..=depth).map(|n| image.level(n).to_vec()).collect();
        return Morphism::new(image.source.with_coskeletal_from(x.coskeletal_from()), image.target, levels);
    }
    let mut invertible = vec![false; x.size(1)];
    for &e in counit.level(1) {
        invertible[e] = true;
    }
    let keep: Vec<Vec<bool>> = (0..=depth)
        .map(|n| {
            let edges: Vec<(usize, usize)> = match method {
                CoreMethod::Spine => (0..n).map(|a| (a, a + 1)).collect(),
                _ => (0..n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect(),
            };
            (0..x.size(n)).map(|e| edges.iter().all(|&(a, b)| invertible[x.apply_operator(n, e, &[a, b])])).collect()
        })
        .collect();
    sub_object(x, &keep, x.coskeletal_from())
}

/// Quasi-invertible edges: the image of `Map(𝚫¹, X) -> X₁`.
pub fn quasi_invertible_edges(x: &Tso, k: usize) -> Result<Vec<usize>> {
    let (x, trunc) = assume_coskeletal(x, k);
    let t = thick_simplex(1, trunc);
    let edge = t.lookup_word(&[0, 1]).expect("edge of the thick simplex");
    let mut out: Vec<usize> = enumerate_maps(&t, &x)?.iter().map(|a| x.eval(a, &edge)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}
