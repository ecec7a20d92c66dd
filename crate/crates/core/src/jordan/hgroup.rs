use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::certificate::{DualSweep, SsPart};
use crate::exactalg::{FiniteField, Matrix, Subspace};
use crate::groupalg::{pack, MatrixGroup};
use crate::rootdata::RootSet;

/// H = C_G(Z)° for Z the centre of C_G(x_s)°, computed from the root
/// lattice, together with a point-level proxy built from F_q-points.
#[derive(Clone, Debug)]
pub struct HGroup<F: FiniteField> {
    /// Φ_c = {γ : x_s(h_γ) = 0}, the roots of C_G(x_s)°.
    pub centralizer_roots: RootSet,
    /// Φ ∩ ℤΦ_c, the roots of H.
    pub h_roots: RootSet,
    /// 𝔥 in Lie coordinates, transported by the conjugator.
    pub lie: Subspace<F>,
    /// Packed H(F_q) points generated by T'(F_q) and U_γ(F_q), γ ∈ Φ(H).
    pub points: Vec<u128>,
    /// Packed points of the centre of ⟨T'(F_q), U_γ(F_q) : γ ∈ Φ_c⟩.
    pub proxy_centre: Vec<u128>,
    /// Packed points of C_{G(F_q)}(proxy centre).
    pub proxy_points: Vec<u128>,
    /// Whether the point-level proxy reproduces H(F_q).
    pub proxy_agrees: bool,
}

/// Integer row reduction to a triangular lattice basis.
fn lattice_basis(gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i64>> = gens.iter().filter(|v| v.iter().any(|&x| x != 0)).cloned().collect();
    let n = gens.first().map_or(0, |v| v.len());
    let mut basis = Vec::new();
    for col in 0..n {
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
            let pivot = rows[p].clone();
            for &i in &nz {
                if i != p {
                    let q = rows[i][col] / pivot[col];
                    for (x, y) in rows[i].iter_mut().zip(&pivot) {
                        *x -= q * y;
                    }
                }
            }
        }
        if let Some(i) = (0..rows.len()).find(|&i| rows[i][col] != 0) {
            basis.push(rows.remove(i));
        }
        rows.retain(|v| v.iter().any(|&x| x != 0));
    }
    basis
}

/// Membership of v in the ℤ-span of `gens`.
pub fn lattice_contains(gens: &[Vec<i64>], v: &[i64]) -> bool {
    let basis = lattice_basis(gens);
    let mut rest = v.to_vec();
    for b in &basis {
        let col = b.iter().position(|&x| x != 0).unwrap();
        if rest[col] % b[col] != 0 {
            return false;
        }
        let q = rest[col] / b[col];
        for (x, y) in rest.iter_mut().zip(b) {
            *x -= q * y;
        }
    }
    rest.iter().all(|&x| x == 0)
}

fn closure<F: FiniteField>(g: &MatrixGroup<F>, gens: &[Matrix<F>]) -> Vec<Matrix<F>> {
    let id = g.identity();
    let mut seen = HashSet::from([pack(&id).expect("packable")]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = g.mul(&x, s);
            if seen.insert(pack(&y).expect("packable")) {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out
}

impl<F: FiniteField> DualSweep<'_, F> {
    /// Subgroup generated by the conjugated torus and root groups for `roots`.
    fn root_subgroup(&self, roots: RootSet, conj: &Matrix<F>) -> Vec<Matrix<F>> {
        let g = self.group();
        let ci = conj.inverse().expect("invertible");
        let c = |m: Matrix<F>| g.normalize(&(conj * &m) * &ci);
        let mut gens = Vec::new();
        for k in 0..g.datum().num_roots() {
            if roots >> k & 1 == 1 {
                for b in F::prime_basis() {
                    gens.push(c(g.root_element(k, b).expect("root")));
                }
            }
        }
        if F::ORDER > 2 {
            for k in 0..g.rank() {
                let mut y = vec![0; g.rank()];
                y[k] = 1;
                gens.push(c(g.torus_element(&y, F::primitive_element())));
            }
        }
        closure(g, &gens)
    }

    pub fn h_group(&self, ss: &SsPart<F>) -> HGroup<F> {
        let g = self.group();
        let d = g.datum();
        let centralizer_roots = self.vanishing_coroots(&ss.standard);
        let c_list: Vec<Vec<i64>> = (0..d.num_roots()).filter(|&k| centralizer_roots >> k & 1 == 1).map(|k| d.root(k).to_vec()).collect();
        let h_roots = (0..d.num_roots()).fold(0 as RootSet, |m, k| if lattice_contains(&c_list, d.root(k)) { m | 1 << k } else { m });
        let h_list: Vec<usize> = (0..d.num_roots()).filter(|&k| h_roots >> k & 1 == 1).collect();
        let lie = g.t_stable_subspace(&h_list).image(&g.ad_matrix(&ss.conjugator));

        let mut points: Vec<u128> = self.root_subgroup(h_roots, &ss.conjugator).iter().map(|m| pack(m).unwrap()).collect();
        points.sort_unstable();
        let c_pts = self.root_subgroup(centralizer_roots, &ss.conjugator);
        let mut proxy_centre: Vec<u128> =
            c_pts.iter().filter(|z| c_pts.iter().all(|y| g.mul(z, y) == g.mul(y, z))).map(|m| pack(m).unwrap()).collect();
        proxy_centre.sort_unstable();
        let centre_mats: Vec<Matrix<F>> =
            c_pts.iter().filter(|m| proxy_centre.binary_search(&pack(*m).unwrap()).is_ok()).cloned().collect();
        let mut proxy_points: Vec<u128> =
            self.points().iter().filter(|x| centre_mats.iter().all(|z| g.mul(x, z) == g.mul(z, x))).map(|m| pack(&m).unwrap()).collect();
        proxy_points.sort_unstable();
        let proxy_agrees = proxy_points == points;
        HGroup { centralizer_roots, h_roots, lie, points, proxy_centre, proxy_points, proxy_agrees }
    }
}

/// Result of the injectivity hypothesis: for every full-rank subgroup H ⊇ T
/// with root system Ψ, restriction (𝔥*)^H → Lie(Z(H))* is injective.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub subsystems_checked: usize,
    /// Root systems Ψ for which injectivity fails.
    pub failures: Vec<RootSet>,
}

impl HypothesisReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Lie-level form of the hypothesis: with A = {λ ∈ 𝔱* : λ(h_γ) = 0, γ ∈ Ψ}
/// (the H-invariant functionals) and Lie(Z(H)) = ∩ ker dγ, injectivity
/// means A ∩ span{dγ : γ ∈ Ψ} = 0.
pub fn cm_kw_hypothesis<F: FiniteField>(g: &MatrixGroup<F>) -> HypothesisReport {
    let d = g.datum();
    let r = g.rank();
    let pairs: Vec<usize> = (0..d.num_positive()).collect();
    assert!(pairs.len() <= 16, "too many subsystems to enumerate");
    let mut failures = Vec::new();
    let mut checked = 0;
    for mask in 0u32..(1 << pairs.len()) {
        let psi: RootSet = pairs.iter().filter(|&&i| mask >> i & 1 == 1).fold(0, |m, &i| m | 1 << i | 1 << d.negative(i));
        if !g.is_root_subgroup_system(psi) {
            continue;
        }
        checked += 1;
        let list: Vec<usize> = (0..d.num_roots()).filter(|&k| psi >> k & 1 == 1).collect();
        let cond: Vec<Vec<F>> = list.iter().map(|&k| d.coroot(k).iter().map(|&c| F::from_i64(c)).collect()).collect();
        let a = if cond.is_empty() { Subspace::full(r) } else { Subspace::span(r, &Matrix::from_rows(cond).kernel()) };
        let dr: Vec<Vec<F>> = list.iter().map(|&k| d.root(k).iter().map(|&c| F::from_i64(c)).collect()).collect();
        let span = Subspace::span(r, &dr);
        if a.intersect(&span).dim() > 0 {
            failures.push(psi);
        }
    }
    HypothesisReport { subsystems_checked: checked, failures }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_membership() {
        let gens = vec![vec![1, -1], vec![1, 1]];
        assert!(lattice_contains(&gens, &[2, 0]));
        assert!(!lattice_contains(&gens, &[1, 0]));
        assert!(lattice_contains(&gens, &[0, 2]));
        assert!(lattice_contains(&[vec![2, 0], vec![0, 2]], &[2, -2]));
        assert!(!lattice_contains(&[vec![2, 0], vec![0, 2]], &[1, 1]));
        assert!(lattice_contains(&[], &[0, 0]));
        assert!(!lattice_contains(&[vec![3, 6]], &[1, 2]));
    }
}
