use serde::Serialize;

use super::cert::ExpansionCertificate;
use crate::error::{Error, Result};
use crate::simplicial::{pushout_attach, SimplexRef};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub attached_count: usize,
    pub max_dim: usize,
    pub grade: usize,
    pub inner: bool,
    pub complete_to_dim: usize,
}

/// Replays every step by a genuine pushout, tracking the comparison map from
/// the replayed complex to the ambient.
pub fn verify_certificate(cert: &ExpansionCertificate) -> Result<VerifyReport> {
    let t = cert.ambient();
    cert.base.validate()?;
    if cert.m == 0 {
        return Err(Error::InvalidArgument("the grade of an expansion is positive".into()));
    }
    if cert.complete_to_dim > t.trunc_dim() {
        return Err(Error::InvalidArgument(format!(
            "completeness stamp {} exceeds the ambient truncation {}",
            cert.complete_to_dim,
            t.trunc_dim()
        )));
    }
    let mut cur = cert.base.sub.clone();
    let mut to_t: Vec<Vec<usize>> = cert.base.embedding.clone();
    let mut from_t: Vec<Vec<Option<usize>>> = (0..=t.trunc_dim())
        .map(|d| {
            let mut v = vec![None; t.num_cells(d)];
            for (c, &a) in cert.base.embedding[d].iter().enumerate() {
                v[a] = Some(c);
            }
            v
        })
        .collect();
    let mut last_n = 0;
    for (k, s) in cert.steps.iter().enumerate() {
        let bad = |reason: String| Error::InvalidStep { step: k, reason };
        let n = s.n;
        if n == 0 {
            return Err(bad("vertices are not attached along horns".into()));
        }
        if n < cert.m {
            return Err(bad(format!("dimension {n} is below the grade {}", cert.m)));
        }
        if n < last_n {
            return Err(bad(format!("dimension {n} follows dimension {last_n}")));
        }
        last_n = n;
        if s.i > n || cert.inner && (s.i == 0 || s.i == n) {
            return Err(bad(format!("horn index {} is not allowed in dimension {n}", s.i)));
        }
        if n > t.trunc_dim() || s.new_cell >= t.num_cells(n) {
            return Err(bad(format!("no cell ({n},{}) in the ambient", s.new_cell)));
        }
        if from_t[n][s.new_cell].is_some() {
            return Err(bad(format!("cell {} already present", t.cell(n, s.new_cell).label)));
        }
        let x = SimplexRef::nondeg(n, s.new_cell);
        let y = t.face(&x, s.i);
        if y.is_degenerate() {
            return Err(bad("free face is degenerate".into()));
        }
        if from_t[n - 1][y.base].is_some() {
            return Err(bad(format!("face already present: {}", t.cell(n - 1, y.base).label)));
        }
        if s.attaching.len() != n {
            return Err(bad(format!("expected {n} attaching faces, found {}", s.attaching.len())));
        }
        let mut faces = Vec::with_capacity(n);
        for (j, f) in (0..=n).filter(|&j| j != s.i).zip(&s.attaching) {
            if *f != t.face(&x, j) {
                return Err(bad(format!("attaching face {j} disagrees with the ambient")));
            }
            let Some(b) = from_t[f.base_dim()][f.base] else {
                return Err(bad(format!("attaching face {j} is not in the current complex")));
            };
            faces.push(SimplexRef { dim: f.dim, degens: f.degens.clone(), base: b });
        }
        let out = pushout_attach(&cur, n, Some(s.i), &faces).map_err(|e| bad(e.to_string()))?;
        let free = out.new_face.expect("horn attachment adds a face");
        to_t[n - 1].push(y.base);
        from_t[n - 1][y.base] = Some(free);
        to_t[n].push(s.new_cell);
        from_t[n][s.new_cell] = Some(out.new_cell);
        if n >= 2 {
            for (j, f) in out.set.cell(n - 1, free).faces.iter().enumerate() {
                let mapped = SimplexRef { dim: f.dim, degens: f.degens.clone(), base: to_t[f.base_dim()][f.base] };
                if mapped != t.face(&y, j) {
                    return Err(bad(format!("replayed free face disagrees with the ambient at face {j}")));
                }
            }
        }
        cur = out.set;
    }
    for d in 0..=cert.complete_to_dim {
        let missing = from_t[d].iter().filter(|c| c.is_none()).count();
        if missing > 0 {
            return Err(Error::Coverage(format!("{missing} cells of dimension {d} never attached")));
        }
    }
    Ok(VerifyReport {
        valid: true,
        attached_count: cert.steps.len(),
        max_dim: cert.max_dim(),
        grade: cert.grade(),
        inner: cert.inner,
        complete_to_dim: cert.complete_to_dim,
    })
}
