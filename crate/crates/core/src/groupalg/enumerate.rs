use std::collections::{HashMap, HashSet, VecDeque};

use super::dual::DualElement;
use super::group::MatrixGroup;
use crate::error::{Error, Result};
use crate::exactalg::{FiniteField, Matrix};

/// Default cap on |G(F_q)| for exhaustive enumeration.
pub const DEFAULT_MAX_POINTS: usize = 10_000_000;

/// All points of G(F_q), packed into integer keys, in BFS order from the
/// identity over the standard generators.
#[derive(Clone, Debug)]
pub struct PointSet<F: FiniteField> {
    size: usize,
    keys: Vec<u128>,
    index: HashMap<u128, usize>,
    _field: std::marker::PhantomData<F>,
}

fn bits_per_entry(q: usize) -> u32 {
    usize::BITS - (q - 1).leading_zeros()
}

/// Packs a matrix into a u128, or `None` if it does not fit.
pub fn pack<F: FiniteField>(m: &Matrix<F>) -> Option<u128> {
    let b = bits_per_entry(F::ORDER);
    if m.data().len() as u32 * b > 128 {
        return None;
    }
    Some(m.data().iter().rev().fold(0u128, |k, x| (k << b) | x.index() as u128))
}

pub fn unpack<F: FiniteField>(n: usize, key: u128) -> Matrix<F> {
    let b = bits_per_entry(F::ORDER);
    let mask = (1u128 << b) - 1;
    Matrix::from_vec(n, n, (0..n * n).map(|i| F::from_index(((key >> (b * i as u32)) & mask) as usize)).collect())
}

impl<F: FiniteField> PointSet<F> {
    pub fn len(&self) -> usize {
        self.keys.len()
    }
    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }
    pub fn get(&self, i: usize) -> Matrix<F> {
        unpack(self.size, self.keys[i])
    }
    pub fn position(&self, g: &Matrix<F>) -> Option<usize> {
        pack(g).and_then(|k| self.index.get(&k).copied())
    }
    pub fn contains(&self, g: &Matrix<F>) -> bool {
        self.position(g).is_some()
    }
    pub fn iter(&self) -> impl Iterator<Item = Matrix<F>> + '_ {
        self.keys.iter().map(|&k| unpack(self.size, k))
    }
    /// The points with index in `range`, for partitioned sweeps.
    pub fn slice(&self, range: std::ops::Range<usize>) -> impl Iterator<Item = Matrix<F>> + '_ {
        self.keys[range].iter().map(|&k| unpack(self.size, k))
    }
}

impl<F: FiniteField> MatrixGroup<F> {
    /// Closure of the identity under right multiplication by the generators.
    pub fn enumerate_points(&self, max_points: usize) -> Result<PointSet<F>> {
        let id = self.identity();
        let Some(id_key) = pack(&id) else {
            return Err(Error::Unsupported(format!("{}: matrices too large to pack", self.name())));
        };
        let expected = self.expected_order();
        if expected > max_points as u128 {
            return Err(Error::BoundExceeded { what: format!("|{}|", self.name()), bound: max_points });
        }
        let gens = self.generators();
        let mut keys = vec![id_key];
        let mut index = HashMap::from([(id_key, 0usize)]);
        let mut head = 0;
        while head < keys.len() {
            let g = unpack::<F>(self.size(), keys[head]);
            head += 1;
            for s in &gens {
                let h = self.mul(&g, s);
                let k = pack(&h).expect("same size as identity");
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(k) {
                    if keys.len() >= max_points {
                        return Err(Error::BoundExceeded { what: format!("|{}|", self.name()), bound: max_points });
                    }
                    e.insert(keys.len());
                    keys.push(k);
                }
            }
        }
        Ok(PointSet { size: self.size(), keys, index, _field: Default::default() })
    }

    /// C_G(x)(F_q) by exhaustion.
    pub fn centralizer_points_dual(&self, points: &PointSet<F>, x: &DualElement<F>) -> Vec<usize> {
        (0..points.len()).filter(|&i| self.act_dual(&points.get(i), x) == *x).collect()
    }

    /// C_G(X)(F_q) for a Lie element, by exhaustion.
    pub fn centralizer_points_lie(&self, points: &PointSet<F>, x: &Matrix<F>) -> Vec<usize> {
        (0..points.len())
            .filter(|&i| {
                let g = points.get(i);
                let gx = &g * x;
                let xg = x * &g;
                if self.is_pgl() {
                    self.lie_coords(&(&gx - &xg)).is_some_and(|c| c.iter().all(|v| v.is_zero()))
                        && self.lie_coords(&(&(&gx * &g.inverse().unwrap()) - x)).is_some_and(|c| c.iter().all(|v| v.is_zero()))
                } else {
                    gx == xg
                }
            })
            .collect()
    }

    /// G(F_q)-orbit of x under Ad*, by closure under the generators.
    pub fn dual_orbit(&self, x: &DualElement<F>) -> Vec<DualElement<F>> {
        let mats: Vec<Matrix<F>> = self.generators().iter().map(|g| self.coadjoint_matrix(g)).collect();
        let mut seen = HashSet::from([x.clone()]);
        let mut out = vec![x.clone()];
        let mut queue = VecDeque::from([x.clone()]);
        while let Some(y) = queue.pop_front() {
            for m in &mats {
                let z = DualElement { values: m.apply(&y.values) };
                if seen.insert(z.clone()) {
                    out.push(z.clone());
                    queue.push_back(z);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupalg::GroupKind;
    use crate::{F2, F3};
    use num_traits::Zero;

    /// Oracle: every N×N matrix over F_q that passes the membership test.
    fn brute_force<F: FiniteField>(g: &MatrixGroup<F>) -> HashSet<u128> {
        let n = g.size();
        let total = (F::ORDER as u128).pow((n * n) as u32);
        (0..total)
            .filter_map(|mut k| {
                let m = Matrix::from_fn(n, n, |_, _| {
                    let e = F::from_index((k % F::ORDER as u128) as usize);
                    k /= F::ORDER as u128;
                    e
                });
                g.contains(&m).then(|| pack(&m).unwrap())
            })
            .collect()
    }

    fn check_against_oracle<F: FiniteField>(kind: GroupKind, order: usize) {
        let g = MatrixGroup::<F>::build(kind).unwrap();
        let pts = g.enumerate_points(DEFAULT_MAX_POINTS).unwrap();
        assert_eq!(pts.len(), order);
        assert_eq!(pts.len() as u128, g.expected_order());
        let oracle = brute_force(&g);
        assert_eq!(oracle, pts.keys.iter().copied().collect::<HashSet<_>>(), "{}", g.name());
        assert!(pts.get(0).is_identity());
    }

    #[test]
    fn small_groups_match_brute_force() {
        check_against_oracle::<F2>(GroupKind::Sp(2), 720);
        check_against_oracle::<F2>(GroupKind::SL(2), 6);
        check_against_oracle::<F3>(GroupKind::SL(2), 24);
        check_against_oracle::<F2>(GroupKind::SO(3), 6);
        check_against_oracle::<F2>(GroupKind::SO(4), 36);
        check_against_oracle::<F3>(GroupKind::SO(3), 24);
    }

    #[test]
    fn pgl_counts() {
        let g = MatrixGroup::<F2>::build(GroupKind::PGL(2)).unwrap();
        assert_eq!(g.enumerate_points(100).unwrap().len(), 6);
        let g = MatrixGroup::<F3>::build(GroupKind::PGL(2)).unwrap();
        let pts = g.enumerate_points(100).unwrap();
        assert_eq!(pts.len(), 24);
        // oracle: GL₂(F₃) has 48 elements, two per class
        let mut classes = HashSet::new();
        for k in 0..81usize {
            let m = Matrix::from_fn(2, 2, |i, j| F3::from_index((k / 3usize.pow((2 * i + j) as u32)) % 3));
            if !m.det().is_zero() {
                classes.insert(pack(&g.normalize(m)).unwrap());
            }
        }
        assert_eq!(classes.len(), 24);
    }

    #[test]
    fn so5_over_f2_is_sp4_sized() {
        let g = MatrixGroup::<F2>::build(GroupKind::SO(5)).unwrap();
        let pts = g.enumerate_points(DEFAULT_MAX_POINTS).unwrap();
        assert_eq!(pts.len(), 720);
        assert!(pts.iter().all(|m| g.contains(&m)));
    }

    #[test]
    fn larger_groups_close_to_their_orders() {
        let g = MatrixGroup::<crate::F4>::build(GroupKind::Sp(2)).unwrap();
        assert_eq!(g.enumerate_points(DEFAULT_MAX_POINTS).unwrap().len(), 979_200);
        let g = MatrixGroup::<F3>::build(GroupKind::SO(5)).unwrap();
        assert_eq!(g.enumerate_points(DEFAULT_MAX_POINTS).unwrap().len(), 51_840);
    }

    #[test]
    fn bound_is_enforced() {
        let g = MatrixGroup::<F2>::build(GroupKind::Sp(2)).unwrap();
        assert!(matches!(g.enumerate_points(100), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn orbit_stabilizer() {
        let g = MatrixGroup::<F2>::build(GroupKind::Sp(2)).unwrap();
        let pts = g.enumerate_points(DEFAULT_MAX_POINTS).unwrap();
        let x = g.dual_from_representative(&Matrix::unit(4, 0, 2)).unwrap();
        let orbit = g.dual_orbit(&x);
        let stab = g.centralizer_points_dual(&pts, &x);
        assert_eq!(orbit.len() * stab.len(), 720);
        let zero = DualElement::zero(g.lie_dim());
        assert_eq!(g.centralizer_points_dual(&pts, &zero).len(), 720);
    }
}
