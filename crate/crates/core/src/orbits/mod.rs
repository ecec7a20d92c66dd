//! Orbits of G(F_q) on 𝔤 and 𝔤*, limits along cocharacters, bounded
//! Hilbert–Mumford searches, and invariant fingerprints.
//!
//! Elements of a space of dimension n are indexed by their coordinates read
//! as a base-q number, coordinate 0 least significant.
//!
//! Scaling convention: λ(t) scales the root vector e_γ by t^⟨γ,λ⟩, and the
//! functional dual to e_γ by t^−⟨γ,λ⟩. A limit as t → 0 exists when every
//! nonzero component has weight ≥ 0, and is the weight-0 part.

mod fingerprint;

pub use fingerprint::Fingerprinter;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{FiniteField, Matrix};
use crate::groupalg::{MatrixGroup, PointSet, Space};
use crate::rootdata::RootDatum;

/// Default bound on |space(F_q)| for orbit tables.
pub const DEFAULT_MAX_ELEMENTS: usize = 1 << 22;
pub const DEFAULT_HEIGHT_BOUND: i64 = 3;

pub fn element_index<F: FiniteField>(coords: &[F]) -> usize {
    coords.iter().rev().fold(0, |k, c| k * F::ORDER + c.index())
}

pub fn element_coords<F: FiniteField>(mut index: usize, dim: usize) -> Vec<F> {
    (0..dim)
        .map(|_| {
            let c = F::from_index(index % F::ORDER);
            index /= F::ORDER;
            c
        })
        .collect()
}

/// q^dim, if at most `max`.
pub fn space_size<F: FiniteField>(dim: usize, max: usize) -> Result<usize> {
    (F::ORDER as u128)
        .checked_pow(dim as u32)
        .filter(|&t| t <= max as u128)
        .map(|t| t as usize)
        .ok_or_else(|| Error::BoundExceeded { what: format!("F_{}^{dim}", F::ORDER), bound: max })
}

/// Orbit partition of 𝔤(F_q) or 𝔤*(F_q).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTable {
    pub group: String,
    pub q: usize,
    pub space: Space,
    pub dim: usize,
    /// Orbit id of each element index; ids follow the order of the least
    /// element of each orbit.
    pub orbit_of: Vec<u32>,
    /// Least element index of each orbit.
    pub representatives: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl OrbitTable {
    pub fn num_elements(&self) -> usize {
        self.orbit_of.len()
    }
    pub fn num_orbits(&self) -> usize {
        self.representatives.len()
    }
    pub fn orbit_id(&self, index: usize) -> usize {
        self.orbit_of[index] as usize
    }
    pub fn members(&self, id: usize) -> Vec<usize> {
        (0..self.orbit_of.len()).filter(|&i| self.orbit_of[i] as usize == id).collect()
    }
}

fn find(parent: &mut [u32], mut i: u32) -> u32 {
    while parent[i as usize] != i {
        parent[i as usize] = parent[parent[i as usize] as usize];
        i = parent[i as usize];
    }
    i
}

/// Union-find over the action of the standard generators, which generate
/// G(F_q).
#[allow(clippy::needless_range_loop)]
pub fn orbit_classes<F: FiniteField>(g: &MatrixGroup<F>, space: Space, max_elements: usize) -> Result<OrbitTable> {
    let dim = g.lie_dim();
    let total = space_size::<F>(dim, max_elements)?;
    let mats: Vec<Matrix<F>> = g.generators().iter().map(|s| g.action_matrix(space, s)).collect();
    let mut parent: Vec<u32> = (0..total as u32).collect();
    for i in 0..total {
        let x = element_coords::<F>(i, dim);
        for m in &mats {
            let j = element_index(&m.apply(&x));
            let (a, b) = (find(&mut parent, i as u32), find(&mut parent, j as u32));
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
    }
    let mut id_of_root = vec![u32::MAX; total];
    let mut orbit_of = vec![0u32; total];
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    for i in 0..total {
        let r = find(&mut parent, i as u32) as usize;
        if id_of_root[r] == u32::MAX {
            id_of_root[r] = representatives.len() as u32;
            representatives.push(i);
            sizes.push(0);
        }
        orbit_of[i] = id_of_root[r];
        sizes[id_of_root[r] as usize] += 1;
    }
    Ok(OrbitTable { group: g.name(), q: F::ORDER, space, dim, orbit_of, representatives, sizes })
}

/// A cocharacter λ ∈ X_*(T) in lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cocharacter {
    pub coords: Vec<i64>,
}

impl Cocharacter {
    pub fn pairing(&self, d: &RootDatum, root: usize) -> i64 {
        RootDatum::pair(d.root(root), &self.coords)
    }

    /// max |⟨α, λ⟩| over the roots.
    pub fn height(&self, d: &RootDatum) -> i64 {
        (0..d.num_roots()).map(|k| self.pairing(d, k).abs()).max().unwrap_or(0)
    }

    /// λ(t) as a group element.
    pub fn eval<F: FiniteField>(&self, g: &MatrixGroup<F>, t: F) -> Matrix<F> {
        g.torus_element(&self.coords, t)
    }
}

/// All nonzero cocharacters of height at most `bound`, ordered by height
/// and then lexicographically. The datum must be semisimple.
pub fn cocharacters_up_to(d: &RootDatum, bound: i64) -> Vec<Cocharacter> {
    let r = d.rank();
    // λ is determined by its pairings with the simple roots; bound each
    // coordinate through the inverse of the simple-root matrix
    let m: Vec<Vec<f64>> = d.simple_roots().map(|i| d.root(i).iter().map(|&c| c as f64).collect()).collect();
    let inv = invert(&m);
    let box_bound: Vec<i64> = (0..r).map(|k| (bound as f64 * inv[k].iter().map(|x| x.abs()).sum::<f64>()).ceil() as i64 + 1).collect();
    let mut out = Vec::new();
    let mut c = box_bound.iter().map(|b| -b).collect::<Vec<i64>>();
    loop {
        let lam = Cocharacter { coords: c.clone() };
        if c.iter().any(|&x| x != 0) && lam.height(d) <= bound {
            out.push(lam);
        }
        let mut k = 0;
        while k < r && c[k] == box_bound[k] {
            c[k] = -box_bound[k];
            k += 1;
        }
        if k == r {
            break;
        }
        c[k] += 1;
    }
    out.sort_by_key(|l| (l.height(d), l.coords.clone()));
    out
}

fn invert(m: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs())).unwrap();
        a.swap(c, p);
        let v = a[c][c];
        for x in a[c].iter_mut() {
            *x /= v;
        }
        for i in 0..n {
            if i != c {
                let f = a[i][c];
                let pivot = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// λ-weight of each coordinate of `space`.
pub fn coordinate_weights<F: FiniteField>(g: &MatrixGroup<F>, space: Space, lambda: &Cocharacter) -> Vec<i64> {
    let d = g.datum();
    let sign = match space {
        Space::Lie => 1,
        Space::Dual => -1,
    };
    (0..g.lie_dim()).map(|i| g.basis_weight(i).map_or(0, |k| sign * lambda.pairing(d, k))).collect()
}

/// lim_{t→0} λ(t)·x, or `None` if some component has negative weight.
pub fn cochar_limit<F: FiniteField>(g: &MatrixGroup<F>, space: Space, lambda: &Cocharacter, x: &[F]) -> Option<Vec<F>> {
    let w = coordinate_weights(g, space, lambda);
    if x.iter().zip(&w).any(|(c, &k)| !c.is_zero() && k < 0) {
        return None;
    }
    Some(x.iter().zip(&w).map(|(&c, &k)| if k == 0 { c } else { F::zero() }).collect())
}

/// g λ g⁻¹ together with a limit outside the orbit of x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonclosednessCertificate<F: FiniteField> {
    pub point_index: usize,
    pub conjugator: Matrix<F>,
    pub cocharacter: Cocharacter,
    /// lim λ(t)·(g⁻¹·x), which lies in the closure of the orbit of x.
    pub limit: Vec<F>,
}

/// Precomputed frames g⁻¹ for every point, the cocharacters up to a height
/// bound and the orbit table, for bounded searches of destabilizing
/// one-parameter subgroups.
#[derive(Clone, Debug)]
pub struct LimitSearch<'g, F: FiniteField> {
    group: &'g MatrixGroup<F>,
    space: Space,
    points: PointSet<F>,
    frames: Vec<Matrix<F>>,
    cochars: Vec<Cocharacter>,
    weights: Vec<Vec<i64>>,
    table: OrbitTable,
}

impl<'g, F: FiniteField> LimitSearch<'g, F> {
    pub fn new(group: &'g MatrixGroup<F>, space: Space, height_bound: i64, max_points: usize, max_elements: usize) -> Result<Self> {
        let points = group.enumerate_points(max_points)?;
        let frames = points.iter().map(|p| group.action_matrix(space, &group.inverse(&p))).collect();
        let cochars = cocharacters_up_to(group.datum(), height_bound);
        let weights = cochars.iter().map(|l| coordinate_weights(group, space, l)).collect();
        let table = orbit_classes(group, space, max_elements)?;
        Ok(LimitSearch { group, space, points, frames, cochars, weights, table })
    }

    pub fn table(&self) -> &OrbitTable {
        &self.table
    }
    pub fn cocharacters(&self) -> &[Cocharacter] {
        &self.cochars
    }

    /// First (g, λ) in scan order (points, then cocharacters) whose limit
    /// leaves the orbit and satisfies `accept`.
    pub fn certificate_where(&self, x: &[F], accept: impl Fn(&[F]) -> bool) -> Option<NonclosednessCertificate<F>> {
        let orbit = self.table.orbit_id(element_index(x));
        for (i, frame) in self.frames.iter().enumerate() {
            let y = frame.apply(x);
            for (l, w) in self.cochars.iter().zip(&self.weights) {
                if y.iter().zip(w).any(|(c, &k)| !c.is_zero() && k < 0) {
                    continue;
                }
                let lim: Vec<F> = y.iter().zip(w).map(|(&c, &k)| if k == 0 { c } else { F::zero() }).collect();
                if self.table.orbit_id(element_index(&lim)) != orbit && accept(&lim) {
                    return Some(NonclosednessCertificate {
                        point_index: i,
                        conjugator: self.points.get(i),
                        cocharacter: l.clone(),
                        limit: lim,
                    });
                }
            }
        }
        None
    }

    pub fn certificate(&self, x: &[F]) -> Option<NonclosednessCertificate<F>> {
        self.certificate_where(x, |_| true)
    }

    /// Re-checks a certificate: the limit is recomputed from the stored
    /// frame, and must lie outside the orbit.
    pub fn verify(&self, x: &[F], c: &NonclosednessCertificate<F>) -> bool {
        let y = self.group.action_matrix(self.space, &self.group.inverse(&c.conjugator)).apply(x);
        cochar_limit(self.group, self.space, &c.cocharacter, &y).as_deref() == Some(&c.limit[..])
            && self.table.orbit_id(element_index(&c.limit)) != self.table.orbit_id(element_index(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupalg::GroupKind;
    use crate::{F2, F3};
    use num_traits::Zero;

    #[test]
    fn indices_round_trip() {
        for i in 0..81 {
            assert_eq!(element_index(&element_coords::<F3>(i, 4)), i);
        }
    }

    #[test]
    fn cocharacters_of_c2() {
        let g = MatrixGroup::<F2>::build(GroupKind::Sp(2)).unwrap();
        let d = g.datum();
        let ls = cocharacters_up_to(d, 3);
        // oracle: a wide box
        let mut brute = 0;
        for a in -10i64..=10 {
            for b in -10i64..=10 {
                let l = Cocharacter { coords: vec![a, b] };
                if (a, b) != (0, 0) && l.height(d) <= 3 {
                    brute += 1;
                }
            }
        }
        assert_eq!(ls.len(), brute);
        assert!(ls.iter().all(|l| l.height(d) <= 3));
        assert_eq!(ls[0].height(d), 2);
    }

    #[test]
    fn limits() {
        let g = MatrixGroup::<F2>::build(GroupKind::Sp(2)).unwrap();
        let l = Cocharacter { coords: vec![1, 1] };
        let mut torus = vec![F2::zero(); 10];
        torus[0] = F2::from_index(1);
        assert_eq!(cochar_limit(&g, Space::Dual, &l, &torus), Some(torus.clone()));
        let d = g.datum();
        let a = d.index_of(&[1, -1]).unwrap();
        let mut mixed = vec![F2::zero(); 10];
        mixed[g.root_basis_index(a)] = F2::from_index(1);
        mixed[g.root_basis_index(d.negative(a))] = F2::from_index(1);
        let l2 = Cocharacter { coords: vec![1, 0] };
        assert_eq!(cochar_limit(&g, Space::Dual, &l2, &mixed), None);
        assert_eq!(cochar_limit(&g, Space::Lie, &l2, &mixed), None);
    }
}
