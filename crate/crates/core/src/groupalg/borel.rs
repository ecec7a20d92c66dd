use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::group::MatrixGroup;
use crate::exactalg::{FiniteField, Matrix, Subspace};
use crate::rootdata::RootSet;

/// 𝔟 = 𝔱 ⊕ 𝔲 for a positive system, as subspaces in Lie coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorelData<F: FiniteField> {
    pub positive: RootSet,
    pub torus: Subspace<F>,
    pub nilradical: Subspace<F>,
    pub borel: Subspace<F>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorelSummary {
    pub dim_borel: usize,
    pub dim_nilradical: usize,
}

impl<F: FiniteField> MatrixGroup<F> {
    /// Standard positive system as a mask.
    pub fn standard_positive(&self) -> RootSet {
        (0..self.datum().num_positive()).fold(0, |m, i| m | (1u128 << i))
    }

    pub fn borel(&self, positive: RootSet) -> BorelData<F> {
        let roots: Vec<usize> = (0..self.datum().num_roots()).filter(|&g| positive >> g & 1 == 1).collect();
        let torus = self.torus_subspace();
        let borel = self.t_stable_subspace(&roots);
        let d = self.lie_dim();
        let nil: Vec<Vec<F>> = roots
            .iter()
            .map(|&g| {
                let mut e = vec![F::zero(); d];
                e[self.root_basis_index(g)] = F::one();
                e
            })
            .collect();
        BorelData { positive, torus, nilradical: Subspace::span(d, &nil), borel }
    }

    /// All G(F_q)-conjugates of 𝔟, closed under the generators' Ad.
    pub fn borel_conjugates(&self, b: &BorelData<F>) -> Vec<Subspace<F>> {
        let mats: Vec<Matrix<F>> = self.generators().iter().map(|g| self.ad_matrix(g)).collect();
        let mut seen = HashSet::from([b.borel.clone()]);
        let mut out = vec![b.borel.clone()];
        let mut queue = VecDeque::from([b.borel.clone()]);
        while let Some(s) = queue.pop_front() {
            for m in &mats {
                let t = s.image(m);
                if seen.insert(t.clone()) {
                    out.push(t.clone());
                    queue.push_back(t);
                }
            }
        }
        out
    }
}
