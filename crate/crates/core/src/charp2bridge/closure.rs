use crate::exactalg::{FiniteField, Matrix, Subspace};
use crate::groupalg::{MatrixGroup, Space};
use crate::rootdata::vanishing_sets;

fn unit<F: FiniteField>(n: usize, i: usize) -> Vec<F> {
    (0..n).map(|k| if k == i { F::one() } else { F::zero() }).collect()
}

/// The span of the closure of the semisimple locus, from the root datum:
/// on 𝔤, the torus plus the root spaces with dα ≠ 0 in 𝔱*; on 𝔤*, the
/// T-fixed part plus the weight spaces whose coroot h_α ≠ 0 in 𝔱.
pub fn semisimple_closure_subspace<F: FiniteField>(g: &MatrixGroup<F>, side: Space) -> Subspace<F> {
    let d = g.datum();
    let v = vanishing_sets(d, F::CHAR);
    let excluded = match side {
        Space::Lie => v.root_zero,
        Space::Dual => v.coroot_zero,
    };
    let n = g.lie_dim();
    let mut basis: Vec<Vec<F>> = (0..g.rank()).map(|i| unit(n, i)).collect();
    basis.extend((0..d.num_roots()).filter(|k| !excluded.contains(k)).map(|k| unit(n, g.root_basis_index(k))));
    Subspace::span(n, &basis)
}

/// Independent oracle: the smallest G(F_q)-stable subspace containing 𝔱
/// (resp. (𝔤*)^T), i.e. the span of all conjugates of its F_q-points,
/// computed by closing under the standard generators.
pub fn semisimple_closure_oracle<F: FiniteField>(g: &MatrixGroup<F>, side: Space) -> Subspace<F> {
    let n = g.lie_dim();
    let mats: Vec<Matrix<F>> = g.generators().iter().map(|s| g.action_matrix(side, s)).collect();
    let mut span = Subspace::span(n, &(0..g.rank()).map(|i| unit(n, i)).collect::<Vec<_>>());
    loop {
        let mut next = span.clone();
        for m in &mats {
            next = next.sum(&span.image(m));
        }
        if next.dim() == span.dim() {
            return span;
        }
        span = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupalg::GroupKind;
    use crate::{F2, F3, F4};

    #[test]
    fn formula_against_oracle() {
        let sp4 = MatrixGroup::<F4>::build(GroupKind::Sp(2)).unwrap();
        let s = semisimple_closure_subspace(&sp4, Space::Lie);
        assert_eq!(s.dim(), 6);
        assert_eq!(s, semisimple_closure_oracle(&sp4, Space::Lie));

        let sp4_3 = MatrixGroup::<F3>::build(GroupKind::Sp(2)).unwrap();
        assert_eq!(semisimple_closure_subspace(&sp4_3, Space::Lie).dim(), 10);
        assert_eq!(semisimple_closure_oracle(&sp4_3, Space::Lie).dim(), 10);

        let so5 = MatrixGroup::<F4>::build(GroupKind::SO(5)).unwrap();
        let v = semisimple_closure_subspace(&so5, Space::Dual);
        assert_eq!(v.dim(), 6);
        assert_eq!(v, semisimple_closure_oracle(&so5, Space::Dual));
    }

    #[test]
    fn small_field_oracle_is_contained() {
        let sp4 = MatrixGroup::<F2>::build(GroupKind::Sp(2)).unwrap();
        let s = semisimple_closure_subspace(&sp4, Space::Lie);
        assert!(s.contains_subspace(&semisimple_closure_oracle(&sp4, Space::Lie)));
    }
}
