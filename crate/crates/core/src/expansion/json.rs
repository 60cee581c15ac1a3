use serde::{Deserialize, Serialize};

use super::cert::{ExpansionCertificate, ExpansionStep};
use crate::error::{Error, Result};
use crate::simplicial::json::{ref_from_json, ref_to_json, sset_from_json, sset_to_json, RefJson, SsetJson};
use crate::simplicial::{Inclusion, Mask};

pub const CERT_FORMAT: &str = "cert.v1";

#[derive(Serialize, Deserialize)]
struct BaseJson {
    ambient: SsetJson,
    sub_complete: bool,
    cells: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct StepJson {
    n: usize,
    i: usize,
    attaching: Vec<RefJson>,
    new_cell: usize,
}

#[derive(Serialize, Deserialize)]
struct CertJson {
    format: String,
    base: BaseJson,
    m: usize,
    inner: bool,
    complete_to_dim: usize,
    steps: Vec<StepJson>,
}

pub fn cert_to_string(c: &ExpansionCertificate) -> String {
    let j = CertJson {
        format: CERT_FORMAT.into(),
        base: BaseJson {
            ambient: sset_to_json(&c.base.ambient),
            sub_complete: c.base.sub.is_complete(),
            cells: c.base.embedding.clone(),
        },
        m: c.m,
        inner: c.inner,
        complete_to_dim: c.complete_to_dim,
        steps: c
            .steps
            .iter()
            .map(|s| StepJson {
                n: s.n,
                i: s.i,
                attaching: s.attaching.iter().map(ref_to_json).collect(),
                new_cell: s.new_cell,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&j).expect("serializable")
}

/// Parses a certificate; it still has to be checked with `verify_certificate`.
pub fn cert_from_str(text: &str) -> Result<ExpansionCertificate> {
    let j: CertJson = serde_json::from_str(text)?;
    if j.format != CERT_FORMAT {
        return Err(Error::Malformed(format!("expected format {CERT_FORMAT}, found {}", j.format)));
    }
    let ambient = sset_from_json(j.base.ambient)?;
    if j.base.cells.len() != ambient.trunc_dim() + 1 {
        return Err(Error::Malformed("base cells must list every dimension".into()));
    }
    let mut mask = Mask::empty(&ambient);
    for (d, cs) in j.base.cells.iter().enumerate() {
        for &c in cs {
            if c >= ambient.num_cells(d) {
                return Err(Error::Malformed(format!("base cell ({d},{c}) out of range")));
            }
            mask.insert(d, c);
        }
    }
    let base = Inclusion::from_mask_with(&ambient, &mask, j.base.sub_complete)?;
    if base.embedding != j.base.cells {
        return Err(Error::Malformed("base cells must be sorted and distinct".into()));
    }
    let steps = j
        .steps
        .iter()
        .map(|s| ExpansionStep {
            n: s.n,
            i: s.i,
            attaching: s.attaching.iter().map(|r| ref_from_json(r, s.n.saturating_sub(1))).collect(),
            new_cell: s.new_cell,
        })
        .collect();
    Ok(ExpansionCertificate { base, m: j.m, inner: j.inner, steps, complete_to_dim: j.complete_to_dim })
}
