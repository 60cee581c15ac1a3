use super::build::{build, WordModel};
use super::subcomplex::{Inclusion, Mask};
use super::sset::FiniteSimplicialSet;
use crate::error::{Error, Result};

fn digit_labels(n: usize) -> Vec<String> {
    (0..=n).map(|v| v.to_string()).collect()
}

/// The standard simplex: strictly increasing words in `0..=n`.
pub fn standard_simplex(n: usize) -> FiniteSimplicialSet {
    let le = |a: usize, b: usize| a < b;
    let accept = |_: &[usize]| true;
    let model = WordModel { labels: digit_labels(n), le: &le, accept: &accept };
    build(&model, n, true).set
}

/// The thick simplex: all adjacent-distinct words in `0..=n`, truncated.
pub fn thick_simplex(n: usize, trunc: usize) -> FiniteSimplicialSet {
    let le = |_: usize, _: usize| true;
    let accept = |_: &[usize]| true;
    let model = WordModel { labels: digit_labels(n), le: &le, accept: &accept };
    let trunc = if n == 0 { 0 } else { trunc };
    build(&model, trunc, n == 0).set
}

/// Cells of a simplex-like set (`standard_simplex` or `thick_simplex`) whose
/// letter set satisfies a predicate.
pub fn letter_mask(t: &FiniteSimplicialSet, n: usize, pred: impl Fn(&[bool]) -> bool) -> Mask {
    Mask::from_fn(t, |d, c| {
        let mut present = vec![false; n + 1];
        for &v in t.word(d, c) {
            present[v] = true;
        }
        pred(&present)
    })
}

fn horn_pred(present: &[bool], i: usize) -> bool {
    present.iter().enumerate().any(|(j, &p)| j != i && !p)
}

fn check_horn(n: usize, i: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("horns need n >= 1".into()));
    }
    if i > n {
        return Err(Error::InvalidArgument(format!("horn index {i} out of range for n = {n}")));
    }
    Ok(())
}

/// The boundary of the standard simplex.
pub fn boundary(n: usize) -> Inclusion {
    let t = standard_simplex(n);
    let m = letter_mask(&t, n, |p| p.iter().any(|&b| !b));
    Inclusion::from_mask(&t, &m).unwrap()
}

/// The horn: union of all faces `d_j` with `j != i`.
pub fn horn(n: usize, i: usize) -> Result<Inclusion> {
    check_horn(n, i)?;
    let t = standard_simplex(n);
    let m = letter_mask(&t, n, |p| horn_pred(p, i));
    Inclusion::from_mask(&t, &m)
}

/// Union of the faces `d_j`, `j` in `faces`, of the standard simplex.
pub fn union_of_faces(n: usize, faces: &[usize]) -> Result<Inclusion> {
    if faces.iter().any(|&j| j > n) {
        return Err(Error::InvalidArgument("face index out of range".into()));
    }
    let t = standard_simplex(n);
    let m = letter_mask(&t, n, |p| faces.iter().any(|&j| !p[j]));
    Inclusion::from_mask(&t, &m)
}

/// The spine `T^n_i`: the edges `(j-1, j)` for `1 <= j <= i`, with their vertices.
pub fn spine_partial(n: usize, i: usize) -> Inclusion {
    let t = standard_simplex(n);
    let m = Mask::from_fn(&t, |d, c| {
        let w = t.word(d, c);
        match d {
            0 => true,
            1 => w[1] == w[0] + 1 && w[1] <= i,
            _ => false,
        }
    });
    Inclusion::from_mask(&t, &m).unwrap()
}

pub fn spine(n: usize) -> Inclusion {
    spine_partial(n, n)
}

/// The thick horn: words whose letters miss some `j != i`.
pub fn thick_horn(n: usize, i: usize, trunc: usize) -> Result<Inclusion> {
    check_horn(n, i)?;
    let t = thick_simplex(n, trunc);
    let m = letter_mask(&t, n, |p| horn_pred(p, i));
    Inclusion::from_mask(&t, &m)
}

/// The thick boundary: words missing at least one letter.
pub fn thick_boundary(n: usize, trunc: usize) -> Inclusion {
    let t = thick_simplex(n, trunc);
    let m = letter_mask(&t, n, |p| p.iter().any(|&b| !b));
    Inclusion::from_mask(&t, &m).unwrap()
}

/// Strictly increasing words inside the thick simplex (the copy of the standard simplex).
pub fn increasing_mask(t: &FiniteSimplicialSet) -> Mask {
    Mask::from_fn(t, |d, c| t.word(d, c).windows(2).all(|p| p[0] < p[1]))
}

/// Mask of a subcomplex given by vertex words of the standard simplex,
/// transported into the thick simplex by letter sets.
pub fn thick_of_simplicial_subset(thick: &FiniteSimplicialSet, flat: &Inclusion) -> Mask {
    let flat_words: std::collections::HashSet<Vec<usize>> = flat
        .embedding
        .iter()
        .enumerate()
        .flat_map(|(d, v)| v.iter().map(move |&c| (d, c)))
        .map(|(d, c)| flat.ambient.word(d, c).to_vec())
        .collect();
    Mask::from_fn(thick, |d, c| {
        let mut letters = thick.word(d, c).to_vec();
        letters.sort_unstable();
        letters.dedup();
        flat_words.contains(&letters)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_and_triangle() {
        let p = standard_simplex(0);
        assert_eq!(p.counts(), vec![1]);
        assert!(p.is_complete());
        let t = standard_simplex(2);
        assert_eq!(t.counts(), vec![3, 3, 1]);
        t.validate().unwrap();
        assert_eq!(t.cell(2, 0).label, "012");
    }

    #[test]
    fn edges_of_tetrahedron() {
        let t = standard_simplex(3);
        assert_eq!(t.num_cells(1), 6);
        assert_eq!(t.num_cells(2), 4);
    }

    #[test]
    fn horns_and_boundaries() {
        let h = horn(2, 1).unwrap();
        assert_eq!(h.sub.counts(), vec![3, 2, 0]);
        let labels: Vec<_> = h.sub.cells(1).iter().map(|c| c.label.clone()).collect();
        assert_eq!(labels, vec!["01", "12"]);
        assert_eq!(boundary(2).sub.counts(), vec![3, 3, 0]);
        let h11 = horn(1, 1).unwrap();
        assert_eq!(h11.sub.counts(), vec![1, 0]);
        assert!(horn(2, 3).is_err());
        assert!(horn(0, 0).is_err());
    }

    #[test]
    fn thick_counts() {
        let t = thick_simplex(1, 6);
        for k in 0..=6 {
            assert_eq!(t.num_cells(k), 2);
        }
        let t2 = thick_simplex(2, 3);
        assert_eq!(t2.num_cells(1), 6);
        t2.validate().unwrap();
        let w = [2usize, 1, 0];
        assert!(t2.lookup_cell(&w).is_some());
    }

    #[test]
    fn spine_edges() {
        let s = spine(3);
        assert_eq!(s.sub.counts(), vec![4, 3, 0, 0]);
    }
}
