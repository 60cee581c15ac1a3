use serde::{Deserialize, Serialize};

use super::morphism::Morphism;
use super::object::Tso;
use crate::error::{Error, Result};

pub const SOBJ_FORMAT: &str = "sobj.v1";

#[derive(Serialize, Deserialize)]
struct LevelJson {
    labels: Vec<String>,
    #[serde(default)]
    faces: Vec<Vec<usize>>,
    #[serde(default)]
    degeneracies: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct SobjJson {
    format: String,
    depth: usize,
    coskeletal_from: Option<usize>,
    levels: Vec<LevelJson>,
}

pub fn sobj_to_string(x: &Tso) -> String {
    let d = x.depth();
    let levels = (0..=d)
        .map(|n| LevelJson {
            labels: x.labels(n).to_vec(),
            faces: if n == 0 { Vec::new() } else { (0..=n).map(|i| (0..x.size(n)).map(|e| x.face(n, i, e)).collect()).collect() },
            degeneracies: if n == d {
                Vec::new()
            } else {
                (0..=n).map(|j| (0..x.size(n)).map(|e| x.degen(n, j, e)).collect()).collect()
            },
        })
        .collect();
    let j = SobjJson { format: SOBJ_FORMAT.into(), depth: d, coskeletal_from: x.coskeletal_from(), levels };
    serde_json::to_string_pretty(&j).expect("serializable")
}

/// Parses and validates a simplicial object.
pub fn sobj_from_str(text: &str) -> Result<Tso> {
    let j: SobjJson = serde_json::from_str(text)?;
    if j.format != SOBJ_FORMAT {
        return Err(Error::Malformed(format!("expected format {SOBJ_FORMAT}, found {}", j.format)));
    }
    if j.levels.len() != j.depth + 1 {
        return Err(Error::Malformed("levels must run from 0 to depth".into()));
    }
    let mut labels = Vec::new();
    let mut faces = Vec::new();
    let mut degens = Vec::new();
    for (n, l) in j.levels.into_iter().enumerate() {
        labels.push(l.labels);
        faces.push(l.faces);
        if n < j.depth {
            degens.push(l.degeneracies);
        }
    }
    Tso::new(labels, faces, degens, j.coskeletal_from)
}

pub const OMAP_FORMAT: &str = "omap.v1";

#[derive(Serialize, Deserialize)]
struct MorphismJson {
    format: String,
    source: serde_json::Value,
    target: serde_json::Value,
    levels: Vec<Vec<usize>>,
}

/// A morphism with both ends embedded as `sobj.v1` objects.
pub fn morphism_to_string(f: &Morphism) -> String {
    let embed = |x: &Tso| serde_json::from_str::<serde_json::Value>(&sobj_to_string(x)).expect("valid json");
    let j = MorphismJson {
        format: OMAP_FORMAT.into(),
        source: embed(&f.source),
        target: embed(&f.target),
        levels: (0..=f.depth()).map(|n| f.level(n).to_vec()).collect(),
    };
    serde_json::to_string_pretty(&j).expect("serializable")
}

/// Parses a morphism and checks that it commutes with faces and degeneracies.
pub fn morphism_from_str(text: &str) -> Result<Morphism> {
    let j: MorphismJson = serde_json::from_str(text)?;
    if j.format != OMAP_FORMAT {
        return Err(Error::Malformed(format!("expected format {OMAP_FORMAT}, found {}", j.format)));
    }
    let source = sobj_from_str(&j.source.to_string())?;
    let target = sobj_from_str(&j.target.to_string())?;
    Morphism::new(source, target, j.levels)
}
