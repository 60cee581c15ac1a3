use serde::{Deserialize, Serialize};

use super::point::NervePoint;
use crate::dga::json::element_from_json;
use crate::dga::{DGAlgebra, Element};
use crate::error::{Error, Result};

pub const NERVE_FORMAT: &str = "nerve.v1";

#[derive(Serialize, Deserialize)]
struct Component {
    tuple: Vec<usize>,
    degree: i32,
    coords: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct NerveFile {
    format: String,
    n: usize,
    components: Vec<Component>,
}

pub fn nerve_to_value(p: &NervePoint) -> serde_json::Value {
    let components = p
        .components()
        .flat_map(|(t, x)| {
            x.parts().map(|(d, v)| Component { tuple: t.clone(), degree: d, coords: v.iter().map(|c| c.to_string()).collect() }).collect::<Vec<_>>()
        })
        .collect();
    serde_json::to_value(NerveFile { format: NERVE_FORMAT.into(), n: p.dim(), components }).expect("serializable")
}

pub fn nerve_to_string(p: &NervePoint) -> String {
    serde_json::to_string_pretty(&nerve_to_value(p)).expect("serializable")
}

pub fn nerve_from_value(a: &DGAlgebra, v: &serde_json::Value) -> Result<NervePoint> {
    let file: NerveFile = serde_json::from_value(v.clone())?;
    if file.format != NERVE_FORMAT {
        return Err(Error::Malformed(format!("expected format {NERVE_FORMAT}, found '{}'", file.format)));
    }
    let mut comps: Vec<(Vec<usize>, Element)> = Vec::new();
    for c in file.components {
        let x = element_from_json(a, &serde_json::json!({ c.degree.to_string(): c.coords }))?;
        match comps.iter_mut().find(|(t, _)| *t == c.tuple) {
            Some((_, y)) => *y = &*y + &x,
            None => comps.push((c.tuple, x)),
        }
    }
    NervePoint::new(file.n, comps)
}

pub fn nerve_from_str(a: &DGAlgebra, text: &str) -> Result<NervePoint> {
    nerve_from_value(a, &serde_json::from_str(text)?)
}

