use serde::{Deserialize, Serialize};

use super::maps::SimplicialMap;
use super::simplex::SimplexRef;
use super::sset::{Cell, FiniteSimplicialSet};
use crate::error::{Error, Result};

pub const SSET_FORMAT: &str = "sset.v1";
pub const SMAP_FORMAT: &str = "smap.v1";

#[derive(Serialize, Deserialize)]
struct CellJson {
    id: usize,
    label: String,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct RefJson {
    pub degens: Vec<usize>,
    pub base: usize,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct SsetJson {
    format: String,
    trunc_dim: usize,
    complete: bool,
    cells: Vec<Vec<CellJson>>,
    faces: Vec<Vec<Vec<RefJson>>>,
}

#[derive(Serialize, Deserialize)]
struct SmapJson {
    format: String,
    source: SsetJson,
    target: SsetJson,
    assignment: Vec<Vec<RefJson>>,
}

pub(crate) fn ref_to_json(r: &SimplexRef) -> RefJson {
    RefJson { degens: r.degens.clone(), base: r.base }
}

pub(crate) fn ref_from_json(r: &RefJson, dim: usize) -> SimplexRef {
    SimplexRef { dim, degens: r.degens.clone(), base: r.base }
}

pub(crate) fn sset_to_json(s: &FiniteSimplicialSet) -> SsetJson {
    let cells = (0..=s.trunc_dim())
        .map(|n| s.cells(n).iter().enumerate().map(|(id, c)| CellJson { id, label: c.label.clone() }).collect())
        .collect();
    let faces = (0..=s.trunc_dim())
        .map(|n| s.cells(n).iter().map(|c| c.faces.iter().map(ref_to_json).collect()).collect())
        .collect();
    SsetJson { format: SSET_FORMAT.into(), trunc_dim: s.trunc_dim(), complete: s.is_complete(), cells, faces }
}

pub(crate) fn sset_from_json(j: SsetJson) -> Result<FiniteSimplicialSet> {
    if j.format != SSET_FORMAT {
        return Err(Error::Malformed(format!("expected format {SSET_FORMAT}, found {}", j.format)));
    }
    if j.cells.len() != j.faces.len() {
        return Err(Error::Malformed("cells and faces disagree in length".into()));
    }
    let mut cells = Vec::with_capacity(j.cells.len());
    for (n, (cs, fs)) in j.cells.into_iter().zip(j.faces).enumerate() {
        if cs.len() != fs.len() {
            return Err(Error::Malformed(format!("dimension {n}: cells and faces disagree")));
        }
        let mut level = Vec::with_capacity(cs.len());
        for (k, (c, f)) in cs.into_iter().zip(fs).enumerate() {
            if c.id != k {
                return Err(Error::Malformed(format!("dimension {n}: ids must be 0..count in order")));
            }
            let dim = n.saturating_sub(1);
            level.push(Cell { label: c.label, faces: f.iter().map(|r| ref_from_json(r, dim)).collect() });
        }
        cells.push(level);
    }
    let s = FiniteSimplicialSet::new(j.trunc_dim, j.complete, cells)?;
    s.validate()?;
    Ok(s)
}

pub fn sset_to_string(s: &FiniteSimplicialSet) -> String {
    serde_json::to_string_pretty(&sset_to_json(s)).expect("serializable")
}

pub fn sset_from_str(text: &str) -> Result<FiniteSimplicialSet> {
    sset_from_json(serde_json::from_str(text)?)
}

pub fn smap_to_string(m: &SimplicialMap) -> String {
    let j = SmapJson {
        format: SMAP_FORMAT.into(),
        source: sset_to_json(&m.source),
        target: sset_to_json(&m.target),
        assignment: m.assignment.iter().map(|lv| lv.iter().map(ref_to_json).collect()).collect(),
    };
    serde_json::to_string_pretty(&j).expect("serializable")
}

pub fn smap_from_str(text: &str) -> Result<SimplicialMap> {
    let j: SmapJson = serde_json::from_str(text)?;
    if j.format != SMAP_FORMAT {
        return Err(Error::Malformed(format!("expected format {SMAP_FORMAT}, found {}", j.format)));
    }
    let source = sset_from_json(j.source)?;
    let target = sset_from_json(j.target)?;
    let assignment = j
        .assignment
        .iter()
        .enumerate()
        .map(|(n, lv)| lv.iter().map(|r| ref_from_json(r, n)).collect())
        .collect();
    SimplicialMap::new(source, target, assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::construct::{standard_simplex, thick_simplex};

    #[test]
    fn round_trip_is_bit_exact() {
        for s in [standard_simplex(3), thick_simplex(2, 3)] {
            let text = sset_to_string(&s);
            let back = sset_from_str(&text).unwrap();
            assert_eq!(back, s);
            assert_eq!(sset_to_string(&back), text);
        }
    }

    #[test]
    fn map_round_trip() {
        let m = SimplicialMap::from_vertex_map(&standard_simplex(1), &standard_simplex(2), &[0, 2]).unwrap();
        let text = smap_to_string(&m);
        let back = smap_from_str(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(smap_to_string(&back), text);
    }

    #[test]
    fn rejects_bad_faces() {
        let text = sset_to_string(&standard_simplex(1)).replace("\"base\": 1", "\"base\": 5");
        assert!(sset_from_str(&text).is_err());
    }
}
