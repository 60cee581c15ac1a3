use std::collections::HashMap;

use super::mapspace::{enumerate_maps, pull_back, required_dim, Assignment};
use super::morphism::{pullback, Morphism};
use super::object::Tso;
use crate::error::{Error, Result};
use crate::simplicial::{
    product_with_pairs, standard_simplex, thick_simplex, FiniteSimplicialSet, ProductSet,
    SimplicialMap,
};

/// A simplicial object `m ↦ Map(B_m, Y)` for a cosimplicial family of
/// vertex-determined shapes `B_m`, with its elements as assignment tables.
#[derive(Clone, Debug)]
pub struct Cotensor {
    pub object: Tso,
    pub shapes: Vec<FiniteSimplicialSet>,
    pub elements: Vec<Vec<Assignment>>,
    lookup: Vec<HashMap<Assignment, usize>>,
}

impl Cotensor {
    /// Builds the levels `0..=depth`. `coface(m, i)` sends vertices of
    /// `B_{m-1}` to `B_m`, `codegeneracy(m, j)` sends vertices of `B_{m+1}`
    /// to `B_m`.
    pub fn build(
        y: &Tso,
        shapes: Vec<FiniteSimplicialSet>,
        coface: impl Fn(usize, usize) -> Vec<usize>,
        codegeneracy: impl Fn(usize, usize) -> Vec<usize>,
        coskeletal_from: Option<usize>,
    ) -> Result<Self> {
        let depth = shapes.len().checked_sub(1).ok_or_else(|| Error::InvalidArgument("no shapes".into()))?;
        let mut top = 0;
        for b in &shapes {
            top = top.max(required_dim(b, y)?);
        }
        let y = y.extended(top)?;
        let mut elements = Vec::with_capacity(depth + 1);
        for b in &shapes {
            elements.push(enumerate_maps(b, &y)?);
        }
        let lookup: Vec<HashMap<Assignment, usize>> =
            elements.iter().map(|l: &Vec<Assignment>| l.iter().cloned().enumerate().map(|(k, a)| (a, k)).collect()).collect();
        let pulled = |g: &SimplicialMap, lvl: usize, a: &Assignment| -> Result<usize> {
            let b = pull_back(g, &y, a);
            lookup[lvl].get(&b).copied().ok_or_else(|| Error::Invariant("structure map leaves the mapping space".into()))
        };
        let mut faces = vec![Vec::new()];
        for m in 1..=depth {
            let mut fs = Vec::new();
            for i in 0..=m {
                let g = SimplicialMap::from_vertex_map(&shapes[m - 1], &shapes[m], &coface(m, i))?;
                fs.push(elements[m].iter().map(|a| pulled(&g, m - 1, a)).collect::<Result<Vec<_>>>()?);
            }
            faces.push(fs);
        }
        let mut degens = Vec::new();
        for m in 0..depth {
            let mut ss = Vec::new();
            for j in 0..=m {
                let g = SimplicialMap::from_vertex_map(&shapes[m + 1], &shapes[m], &codegeneracy(m, j))?;
                ss.push(elements[m].iter().map(|a| pulled(&g, m + 1, a)).collect::<Result<Vec<_>>>()?);
            }
            degens.push(ss);
        }
        let labels = elements.iter().enumerate().map(|(m, l)| (0..l.len()).map(|k| format!("{m}:{k}")).collect()).collect();
        let object = Tso::new(labels, faces, degens, coskeletal_from)?;
        Ok(Cotensor { object, shapes, elements, lookup })
    }

    pub fn index_of(&self, m: usize, a: &Assignment) -> Option<usize> {
        self.lookup[m].get(a).copied()
    }
}

/// Vertex map of the coface `δ_i: [m-1] -> [m]`.
pub fn coface_vertices(m: usize, i: usize) -> Vec<usize> {
    (0..m).map(|v| if v < i { v } else { v + 1 }).collect()
}

/// Vertex map of the codegeneracy `σ_j: [m+1] -> [m]`.
pub fn codegeneracy_vertices(m: usize, j: usize) -> Vec<usize> {
    (0..=m + 1).map(|v| if v <= j { v } else { v - 1 }).collect()
}

/// The cotensor `m ↦ Map(Δ^m × K, Y)` together with the product shapes.
pub struct ProductCotensor {
    pub cotensor: Cotensor,
    pub products: Vec<ProductSet>,
    vertex: Vec<HashMap<(usize, usize), usize>>,
}

impl ProductCotensor {
    pub fn new(y: &Tso, k: &FiniteSimplicialSet, depth: usize) -> Result<Self> {
        let products: Vec<ProductSet> = (0..=depth).map(|m| product_with_pairs(&standard_simplex(m), k)).collect();
        let vertex: Vec<HashMap<(usize, usize), usize>> = products
            .iter()
            .map(|p| p.pairs[0].iter().enumerate().map(|(v, (a, b))| ((a.base, b.base), v)).collect())
            .collect();
        let along = |src: usize, dst: usize, vm: &[usize]| -> Vec<usize> {
            products[src].pairs[0].iter().map(|(a, b)| vertex[dst][&(vm[a.base], b.base)]).collect()
        };
        let cotensor = Cotensor::build(
            y,
            products.iter().map(|p| p.set.clone()).collect(),
            |m, i| along(m - 1, m, &coface_vertices(m, i)),
            |m, j| along(m + 1, m, &codegeneracy_vertices(m, j)),
            y.coskeletal_from(),
        )?;
        Ok(ProductCotensor { cotensor, products, vertex })
    }

    pub fn object(&self) -> &Tso {
        &self.cotensor.object
    }

    /// Evaluation at the vertex `e` of `K`: restriction to `Δ^m × {e}`.
    pub fn evaluation(&self, y: &Tso, e: usize) -> Result<Morphism> {
        let x = self.object();
        let levels = (0..=x.depth())
            .map(|m| {
                let word: Vec<usize> = (0..=m).map(|a| self.vertex[m][&(a, e)]).collect();
                let r = self.products[m]
                    .set
                    .lookup_word(&word)
                    .ok_or_else(|| Error::Invariant("missing diagonal simplex".into()))?;
                Ok(self.cotensor.elements[m].iter().map(|a| y.eval(a, &r)).collect())
            })
            .collect::<Result<Vec<Vec<usize>>>>()?;
        Morphism::new(x.clone(), y.extended(x.depth())?.truncated(x.depth()), levels)
    }

    /// The constant element over `y_elem ∈ Y_m`: `y_elem ∘ pr₁`.
    pub fn constant(&self, y: &Tso, m: usize, y_elem: usize) -> Result<usize> {
        let shape = &self.products[m];
        let simplex = standard_simplex(m);
        let a: Assignment = shape
            .pairs
            .iter()
            .map(|cells| {
                cells.iter().map(|(r, _)| y.apply_operator(m, y_elem, &simplex.simplex_word(r))).collect()
            })
            .collect();
        self.cotensor.index_of(m, &a).ok_or_else(|| Error::Invariant("constant path is not a map".into()))
    }
}

/// `(P_n X)_m = Map(Δ^m × Δ^n, X)`.
pub fn path_space(x: &Tso, n: usize, depth: usize) -> Result<Tso> {
    Ok(ProductCotensor::new(x, &standard_simplex(n), depth)?.cotensor.object)
}

/// `(𝒫_n X)_m = Map(Δ^m × 𝚫^n, X)`; the thick simplex is truncated just
/// above the coskeletal level of `x`.
pub fn thick_power(x: &Tso, n: usize, depth: usize) -> Result<Tso> {
    let c = x.coskeletal_from().ok_or(Error::InsufficientTruncation { needed: usize::MAX, available: x.depth() })?;
    Ok(ProductCotensor::new(x, &thick_simplex(n, c + 1), depth)?.cotensor.object)
}

/// The factorization `f = q(f) ∘ s(f)` through `P(f) = X ×_Y P₁Y`.
pub struct BrownFactorization {
    pub pf: Tso,
    pub s: Morphism,
    pub q: Morphism,
    pub p: Morphism,
}

pub fn brown_factorization(f: &Morphism, depth: usize) -> Result<BrownFactorization> {
    let f = f.extended(depth)?.truncated(depth);
    let y = &f.target;
    let paths = ProductCotensor::new(y, &standard_simplex(1), depth)?;
    let ev0 = paths.evaluation(y, 0)?;
    let ev1 = paths.evaluation(y, 1)?;
    let (pf, p, to_path) = pullback(&f, &ev0)?;
    let q = to_path.then(&ev1)?;
    let pos: Vec<HashMap<(usize, usize), usize>> = (0..=depth)
        .map(|m| (0..pf.size(m)).map(|e| ((p.apply(m, e), to_path.apply(m, e)), e)).collect())
        .collect();
    let x = &f.source;
    let y_ext = y.extended(depth + 1)?;
    let levels = (0..=depth)
        .map(|m| {
            (0..x.size(m))
                .map(|e| {
                    let c = paths.constant(&y_ext, m, f.apply(m, e))?;
                    pos[m].get(&(e, c)).copied().ok_or_else(|| Error::Invariant("section leaves P(f)".into()))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let s = Morphism::new(x.clone(), pf.clone(), levels)?;
    Ok(BrownFactorization { pf, s, q, p })
}
