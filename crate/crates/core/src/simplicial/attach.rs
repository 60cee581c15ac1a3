use super::simplex::SimplexRef;
use super::sset::{Cell, FiniteSimplicialSet};
use crate::error::{Error, Result};

/// Result of gluing one simplex: the new top cell and, for a horn, its free face.
#[derive(Clone, Debug)]
pub struct Attached {
    pub set: FiniteSimplicialSet,
    pub new_cell: usize,
    pub new_face: Option<usize>,
}

/// Glue `Δ^n` along `Λ^n_i` (when `missing = Some(i)`) or along `∂Δ^n`.
///
/// `faces` lists the images of the faces `d_j` for `j != missing`, in order.
pub fn pushout_attach(t: &FiniteSimplicialSet, n: usize, missing: Option<usize>, faces: &[SimplexRef]) -> Result<Attached> {
    if n == 0 {
        if missing.is_some() || !faces.is_empty() {
            return Err(Error::InvalidArgument("a vertex has no horns".into()));
        }
        return Ok(push_cells(t, 0, None, Vec::new()));
    }
    let expected = if missing.is_some() { n } else { n + 1 };
    if faces.len() != expected {
        return Err(Error::InvalidArgument(format!("expected {expected} face images, got {}", faces.len())));
    }
    if let Some(i) = missing {
        if i > n {
            return Err(Error::InvalidArgument(format!("horn index {i} out of range")));
        }
    }
    let mut full: Vec<Option<SimplexRef>> = Vec::with_capacity(n + 1);
    let mut it = faces.iter();
    for j in 0..=n {
        if Some(j) == missing {
            full.push(None);
        } else {
            let f = it.next().unwrap();
            if f.dim + 1 != n || f.base_dim() > t.trunc_dim() || f.base >= t.num_cells(f.base_dim()) {
                return Err(Error::InvalidArgument(format!("face image {j} is not a simplex of the right dimension")));
            }
            full.push(Some(f.clone()));
        }
    }
    if n >= 2 {
        for k in 1..=n {
            for j in 0..k {
                if let (Some(a), Some(b)) = (&full[j], &full[k]) {
                    if t.face(b, j) != t.face(a, k - 1) {
                        return Err(Error::FaceMismatch(format!("d{j} d{k} != d{} d{j} on the attaching map", k - 1)));
                    }
                }
            }
        }
    }
    let free_faces = missing.map(|i| {
        if n == 1 {
            Vec::new()
        } else {
            (0..n)
                .map(|j| {
                    if j < i {
                        t.face(full[j].as_ref().unwrap(), i - 1)
                    } else {
                        t.face(full[j + 1].as_ref().unwrap(), i)
                    }
                })
                .collect()
        }
    });
    let mut out = match free_faces {
        Some(ff) => push_cells(t, n - 1, None, ff),
        None => Attached { set: t.clone(), new_cell: usize::MAX, new_face: None },
    };
    let new_face = if missing.is_some() { Some(out.new_cell) } else { None };
    let top_faces: Vec<SimplexRef> = full
        .into_iter()
        .map(|f| f.unwrap_or_else(|| SimplexRef::nondeg(n - 1, new_face.unwrap())))
        .collect();
    out = push_cells(&out.set, n, None, top_faces);
    out.new_face = new_face;
    Ok(out)
}

fn push_cells(t: &FiniteSimplicialSet, n: usize, label: Option<String>, faces: Vec<SimplexRef>) -> Attached {
    let trunc = t.trunc_dim().max(n);
    let mut cells: Vec<Vec<Cell>> = (0..=trunc).map(|d| t.cells(d).to_vec()).collect();
    let id = cells[n].len();
    let label = label.unwrap_or_else(|| format!("x{n}_{id}"));
    cells[n].push(Cell { label, faces });
    let set = FiniteSimplicialSet::new(trunc, t.is_complete(), cells).expect("attached set is well formed");
    Attached { set, new_cell: id, new_face: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::construct::horn;

    #[test]
    fn fill_inner_horn() {
        let h = horn(2, 1).unwrap().sub;
        let faces = vec![SimplexRef::nondeg(1, 1), SimplexRef::nondeg(1, 0)];
        let a = pushout_attach(&h, 2, Some(1), &faces).unwrap();
        assert_eq!(a.set.counts(), vec![3, 3, 1]);
        a.set.validate().unwrap();
    }

    #[test]
    fn reject_incompatible_boundary() {
        let h = horn(2, 1).unwrap().sub;
        // both faces are the edge 01: d0 of the first and d1 of the second disagree
        let faces = vec![SimplexRef::nondeg(1, 0), SimplexRef::nondeg(1, 0)];
        assert!(pushout_attach(&h, 2, Some(1), &faces).is_err());
    }

    #[test]
    fn degenerate_faces_make_a_sphere() {
        let p = crate::simplicial::construct::standard_simplex(0);
        let v = SimplexRef::nondeg(0, 0);
        let edge = pushout_attach(&p, 1, None, &[v.clone(), v.clone()]).unwrap();
        assert_eq!(edge.set.counts(), vec![1, 1]);
        let collapsed = v.degeneracy(0);
        let s2 = pushout_attach(&p, 2, None, &[collapsed.clone(), collapsed.clone(), collapsed]).unwrap();
        s2.set.validate().unwrap();
        assert!(!s2.set.is_vertex_determined());
    }
}
