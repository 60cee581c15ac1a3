use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::algebra::{DGAlgebra, Element, SparseVec};
use super::rational::{from_text, to_text, Q};
use crate::error::{Error, Result};

pub const DGA_FORMAT: &str = "dga.v1";

#[derive(Serialize, Deserialize)]
struct DgaFile {
    format: String,
    #[serde(default)]
    name: String,
    /// Degree to basis labels.
    degrees: BTreeMap<String, Vec<String>>,
    /// Degree `i` to the matrix of `d: A^i -> A^{i+1}` (rows index `A^{i+1}`).
    #[serde(default)]
    diff: BTreeMap<String, Vec<Vec<String>>>,
    /// `"i,j"` to nonzero structure constants `[p, q, r, c]`: `e_p e_q` has coefficient `c` on `e_r`.
    #[serde(default)]
    prod: BTreeMap<String, Vec<(usize, usize, usize, String)>>,
    unit: Vec<String>,
}

fn parse_int(s: &str) -> Result<i32> {
    s.trim().parse().map_err(|_| Error::Malformed(format!("not a degree: '{s}'")))
}

fn texts(v: &[Q]) -> Vec<String> {
    v.iter().map(to_text).collect()
}

fn parse_all(v: &[String]) -> Result<Vec<Q>> {
    v.iter().map(|s| from_text(s)).collect()
}

pub fn dga_to_string(a: &DGAlgebra) -> String {
    let degrees = (a.lo()..=a.hi()).map(|i| (i.to_string(), a.labels(i).to_vec())).collect();
    let diff = (a.lo()..a.hi())
        .filter(|&i| a.diff_matrix(i).iter().flatten().any(|x| !x.is_zero()))
        .map(|i| (i.to_string(), a.diff_matrix(i).iter().map(|r| texts(r)).collect()))
        .collect();
    let prod = a
        .product_tables()
        .iter()
        .map(|(&(i, j), t)| {
            let mut entries = Vec::new();
            for (p, row) in t.iter().enumerate() {
                for (q, v) in row.iter().enumerate() {
                    for (r, c) in v {
                        entries.push((p, q, *r, to_text(c)));
                    }
                }
            }
            (format!("{i},{j}"), entries)
        })
        .filter(|(_, e)| !e.is_empty())
        .collect();
    let file = DgaFile {
        format: DGA_FORMAT.into(),
        name: a.name().into(),
        degrees,
        diff,
        prod,
        unit: texts(&a.one().coords(0, a.dim(0))),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

/// Parses and validates an algebra; invariant violations name the failing basis tuple.
pub fn dga_from_str(text: &str) -> Result<DGAlgebra> {
    let file: DgaFile = serde_json::from_str(text)?;
    if file.format != DGA_FORMAT {
        return Err(Error::Malformed(format!("expected format {DGA_FORMAT}, found '{}'", file.format)));
    }
    let mut degrees = BTreeMap::new();
    for (k, v) in file.degrees {
        degrees.insert(parse_int(&k)?, v);
    }
    let (lo, hi) = match (degrees.keys().next(), degrees.keys().last()) {
        (Some(&lo), Some(&hi)) => (lo.min(0), hi.max(0)),
        _ => return Err(Error::Malformed("no degrees given".into())),
    };
    let basis: Vec<Vec<String>> = (lo..=hi).map(|i| degrees.get(&i).cloned().unwrap_or_default()).collect();
    let dim = |i: i32| if i < lo || i > hi { 0 } else { basis[(i - lo) as usize].len() };
    let mut diff: Vec<Vec<Vec<Q>>> = (lo..=hi).map(|i| vec![vec![Q::zero(); dim(i)]; dim(i + 1)]).collect();
    for (k, m) in file.diff {
        let i = parse_int(&k)?;
        if i < lo || i > hi {
            return Err(Error::Malformed(format!("differential given in missing degree {i}")));
        }
        diff[(i - lo) as usize] = m.iter().map(|r| parse_all(r)).collect::<Result<_>>()?;
    }
    let mut prod: BTreeMap<(i32, i32), Vec<Vec<SparseVec>>> = BTreeMap::new();
    for (k, entries) in file.prod {
        let (i, j) = k.split_once(',').ok_or_else(|| Error::Malformed(format!("bad product key '{k}'")))?;
        let (i, j) = (parse_int(i)?, parse_int(j)?);
        let mut t = vec![vec![Vec::new(); dim(j)]; dim(i)];
        for (p, q, r, c) in entries {
            let slot: &mut SparseVec = t
                .get_mut(p)
                .and_then(|row: &mut Vec<SparseVec>| row.get_mut(q))
                .ok_or_else(|| Error::Malformed(format!("product entry ({p},{q}) out of range in '{k}'")))?;
            slot.push((r, from_text(&c)?));
        }
        prod.insert((i, j), t);
    }
    DGAlgebra::new(file.name, lo, basis, diff, prod, parse_all(&file.unit)?)
}

/// `{degree: [coordinates]}` with rationals as `p/q`.
pub fn element_to_json(x: &Element) -> serde_json::Value {
    let map: BTreeMap<String, Vec<String>> = x.parts().map(|(d, v)| (d.to_string(), texts(v))).collect();
    serde_json::to_value(map).expect("serializable")
}

pub fn element_from_json(a: &DGAlgebra, v: &serde_json::Value) -> Result<Element> {
    let map: BTreeMap<String, Vec<String>> = serde_json::from_value(v.clone())?;
    let mut x = Element::zero();
    for (k, coords) in map {
        x = &x + &Element::homogeneous(parse_int(&k)?, parse_all(&coords)?);
    }
    a.check_element(&x)?;
    Ok(x)
}
