//! Named objects, maps and algebras usable in place of input files.

use simploid::dga::{endomorphism_algebra, ground_field, matrix_algebra, Complex, DGAlgebra};
use simploid::set_model::{FiniteCategory, Morphism, Tso};
use simploid::{Error, Result};

pub const OBJECTS: &str = "point, z<n>, idempotent, poset, indiscrete<n>, discrete<n>";
pub const MAPS: &str = "id:<obj>, vertex:<obj>, terminal:<obj>, quotient:z<n>-z<m>, projection:z<n>xz<m>";
pub const ALGEBRAS: &str = "q, m2, end-zero, end-identity";

fn suffix(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok().filter(|&n| n > 0)
}

fn category(name: &str) -> Result<FiniteCategory> {
    if let Some(n) = suffix(name, "z") {
        return FiniteCategory::cyclic_group(n);
    }
    if let Some(n) = suffix(name, "indiscrete") {
        return Ok(FiniteCategory::indiscrete(n));
    }
    if let Some(n) = suffix(name, "discrete") {
        return Ok(FiniteCategory::discrete(n));
    }
    match name {
        "point" => Ok(FiniteCategory::discrete(1)),
        "idempotent" => Ok(FiniteCategory::idempotent_monoid()),
        "poset" => Ok(FiniteCategory::linear_order(1)),
        _ => Err(Error::InvalidArgument(format!("unknown object '{name}'; known: {OBJECTS}"))),
    }
}

/// The nerve of a named category, 2-coskeletal, stored to `depth`.
pub fn object(name: &str, depth: usize) -> Result<Tso> {
    Ok(category(name)?.nerve(depth))
}

/// `(n, m)` from `z<n>-z<m>` or `z<n>xz<m>`.
fn pair(spec: &str, sep: char) -> Option<(usize, usize)> {
    let (a, b) = spec.split_once(sep)?;
    Some((suffix(a, "z")?, suffix(b, "z")?))
}

pub fn map(spec: &str, depth: usize) -> Result<Morphism> {
    let unknown = || Error::InvalidArgument(format!("unknown map '{spec}'; known: {MAPS}"));
    let (kind, arg) = spec.split_once(':').ok_or_else(unknown)?;
    match kind {
        "id" => Ok(Morphism::identity(&object(arg, depth)?)),
        "terminal" => Ok(Morphism::to_terminal(&object(arg, depth)?)),
        "vertex" => Morphism::from_point(&object(arg, depth)?, 0),
        "quotient" => {
            let (n, m) = pair(arg, '-').ok_or_else(unknown)?;
            if n % m != 0 {
                return Err(Error::InvalidArgument(format!("ℤ/{m} is not a quotient of ℤ/{n}")));
            }
            let (zn, zm) = (FiniteCategory::cyclic_group(n)?, FiniteCategory::cyclic_group(m)?);
            let arrows: Vec<usize> = (0..n).map(|a| a % m).collect();
            zn.nerve_map(&zm, &[0], &arrows, depth)
        }
        "projection" => {
            let (n, m) = pair(arg, 'x').ok_or_else(unknown)?;
            let (zn, zm) = (FiniteCategory::cyclic_group(n)?, FiniteCategory::cyclic_group(m)?);
            let product = FiniteCategory::product(&zn, &zm);
            let arrows: Vec<usize> = (0..product.num_arrows()).map(|a| a / m).collect();
            product.nerve_map(&zn, &[0], &arrows, depth)
        }
        _ => Err(unknown()),
    }
}

pub fn algebra(name: &str) -> Result<DGAlgebra> {
    match name {
        "q" => Ok(ground_field()),
        "m2" => Ok(matrix_algebra(2)),
        "end-zero" => endomorphism_algebra(&Complex::two_term(0)),
        "end-identity" => endomorphism_algebra(&Complex::two_term(1)),
        _ => Err(Error::InvalidArgument(format!("unknown algebra '{name}'; known: {ALGEBRAS}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_objects_and_maps_resolve() {
        assert_eq!(object("z2", 2).unwrap().sizes(), vec![1, 2, 4]);
        assert_eq!(object("poset", 1).unwrap().sizes(), vec![2, 3]);
        assert!(object("z0", 2).is_err() && object("torus", 2).is_err());
        let q = map("quotient:z4-z2", 2).unwrap();
        assert_eq!(q.level(1), &[0, 1, 0, 1]);
        assert!(map("quotient:z4-z3", 2).is_err());
        let p = map("projection:z2xz2", 2).unwrap();
        assert!((0..=2).all(|n| p.is_surjective_at(n)));
        assert!(map("vertex:poset", 2).is_ok() && map("nope", 2).is_err());
        assert_eq!(algebra("m2").unwrap().dim(0), 4);
        assert_eq!(algebra("end-identity").unwrap().lo(), -1);
    }
}
