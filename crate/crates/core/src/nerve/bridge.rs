use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::point::{degeneracy, face, filler_space, inner_horn_fill, nerve_check, NervePoint};
use crate::dga::{DGAlgebra, Element};
use crate::error::{Error, Result};
use crate::set_model::{maps_on, Tso, ABSENT};
use crate::simplicial::horn;

/// Sampled rational points of the nerve, closed under faces and
/// degeneracies up to `depth`, as a truncated simplicial object.
#[derive(Clone, Debug)]
pub struct NerveSample {
    pub object: Tso,
    pub points: Vec<Vec<NervePoint>>,
}

pub fn nerve_as_simplicial_object(a: &DGAlgebra, sample: &[NervePoint], depth: usize) -> Result<NerveSample> {
    let mut levels: Vec<BTreeSet<NervePoint>> = vec![BTreeSet::new(); depth + 1];
    for p in sample {
        if p.dim() > depth {
            return Err(Error::InvalidArgument(format!("sampled point of dimension {} exceeds depth {depth}", p.dim())));
        }
        let c = nerve_check(a, p)?;
        if !c.is_point {
            return Err(Error::NotAPoint(format!("sampled point fails at {:?}", c.first_failure())));
        }
        levels[p.dim()].insert(p.clone());
    }
    loop {
        let mut added = false;
        for n in (1..=depth).rev() {
            let faces: Vec<NervePoint> =
                levels[n].iter().flat_map(|p| (0..=n).map(move |i| face(p, i))).collect::<Result<_>>()?;
            for f in faces {
                added |= levels[n - 1].insert(f);
            }
        }
        for n in 0..depth {
            let degens: Vec<NervePoint> =
                levels[n].iter().flat_map(|p| (0..=n).map(move |j| degeneracy(p, j))).collect::<Result<_>>()?;
            for s in degens {
                added |= levels[n + 1].insert(s);
            }
        }
        if !added {
            break;
        }
    }
    let points: Vec<Vec<NervePoint>> = levels.into_iter().map(|l| l.into_iter().collect()).collect();
    let index: Vec<HashMap<&NervePoint, usize>> =
        points.iter().map(|l| l.iter().enumerate().map(|(k, p)| (p, k)).collect()).collect();
    let labels = points.iter().enumerate().map(|(n, l)| (0..l.len()).map(|k| format!("p{n}.{k}")).collect()).collect();
    let mut faces = vec![Vec::new()];
    for n in 1..=depth {
        let mut fs = Vec::new();
        for i in 0..=n {
            fs.push(points[n].iter().map(|p| Ok(index[n - 1][&face(p, i)?])).collect::<Result<Vec<_>>>()?);
        }
        faces.push(fs);
    }
    let mut degens = Vec::new();
    for n in 0..depth {
        let mut ss = Vec::new();
        for j in 0..=n {
            ss.push(points[n].iter().map(|p| Ok(index[n + 1][&degeneracy(p, j)?])).collect::<Result<Vec<_>>>()?);
        }
        degens.push(ss);
    }
    let object = Tso::new(labels, faces, degens, None)?;
    Ok(NerveSample { object, points })
}

/// Inner horns of a sampled nerve and how they fill.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HornFillReport {
    pub n: usize,
    pub i: usize,
    pub horns: usize,
    /// Horns filled by the explicit filler at `x = 0`.
    pub filled: usize,
    /// Horns whose filler space is a single point.
    pub unique: usize,
    /// Horns whose filler space has dimension `dim A^{1-n}`.
    pub expected_dimension: usize,
    pub holds: bool,
}

/// Enumerates every horn `Λⁿᵢ -> X` of the sampled object, reassembles its
/// Maurer–Cartan data and fills it.
pub fn sampled_horn_fills(a: &DGAlgebra, sample: &NerveSample, n: usize, i: usize) -> Result<HornFillReport> {
    let inc = horn(n, i)?;
    let maps = maps_on(&inc, &sample.object)?;
    let simplex = &inc.ambient;
    let (mut filled, mut unique, mut expected) = (0, 0, 0);
    for m in &maps {
        let mut data = NervePoint::zero(n);
        for (d, cells) in m.iter().enumerate() {
            for (c, &x) in cells.iter().enumerate() {
                if x == ABSENT {
                    continue;
                }
                let word = simplex.word(d, c).to_vec();
                let top: Vec<usize> = (0..=d).collect();
                data.set(word, sample.points[d][x].component(&top));
            }
        }
        let zero = Element::zero();
        if inner_horn_fill(a, n, i, &data, &zero).is_ok() {
            filled += 1;
        }
        let space = filler_space(a, n, i, &data)?;
        if space.exists && space.dimension == 0 {
            unique += 1;
        }
        if space.exists && space.dimension == space.expected_dimension {
            expected += 1;
        }
    }
    let horns = maps.len();
    Ok(HornFillReport { n, i, horns, filled, unique, expected_dimension: expected, holds: filled == horns && expected == horns })
}
