use crate::error::{Error, Result};
use crate::exactalg::{FiniteField, Matrix};
use crate::groupalg::MatrixGroup;

/// Additive Jordan decomposition of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieJordan<F: FiniteField> {
    pub semisimple: Matrix<F>,
    pub nilpotent: Matrix<F>,
}

/// X = S + N with S a polynomial in X whose minimal polynomial is
/// squarefree, N nilpotent and [S, N] = 0.
///
/// Newton iteration S ← S − g(S)·g'(S)⁻¹ on the radical g of the
/// characteristic polynomial; g is separable because F is perfect.
pub fn jordan_matrix<F: FiniteField>(x: &Matrix<F>) -> LieJordan<F> {
    let g = x.charpoly().squarefree_part();
    let dg = g.derivative();
    let mut s = x.clone();
    loop {
        let gs = s.eval_poly(&g);
        if gs.is_zero() {
            break;
        }
        let d = s.eval_poly(&dg).inverse().expect("g' is invertible at X modulo nilpotents");
        s = &s - &(&gs * &d);
    }
    let nilpotent = x - &s;
    LieJordan { semisimple: s, nilpotent }
}

/// Jordan decomposition of an element of 𝔤, with both parts checked to lie in 𝔤.
pub fn jordan_g<F: FiniteField>(g: &MatrixGroup<F>, x: &Matrix<F>) -> Result<LieJordan<F>> {
    if !g.in_lie_algebra(x) {
        return Err(Error::InvalidInput(format!("matrix is not in the Lie algebra of {}", g.name())));
    }
    let j = jordan_matrix(x);
    assert!(g.in_lie_algebra(&j.semisimple) && g.in_lie_algebra(&j.nilpotent), "Jordan parts left 𝔤");
    Ok(j)
}

/// Is the matrix nilpotent?
pub fn is_nilpotent_matrix<F: FiniteField>(x: &Matrix<F>) -> bool {
    x.pow(x.rows() as u64).is_zero()
}

/// Is the minimal polynomial squarefree (equivalently, g(X) = 0 for the
/// radical g of the characteristic polynomial)?
pub fn is_semisimple_matrix<F: FiniteField>(x: &Matrix<F>) -> bool {
    x.eval_poly(&x.charpoly().squarefree_part()).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupalg::GroupKind;
    use crate::{F2, F3, F4};
    use num_traits::One;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    /// Oracle: X_s = X^{q^L} with L a multiple of every eigenvalue degree
    /// and q^L ≥ N, since X_n^{q^L} = 0 and Frobenius fixes X_s.
    fn frobenius_oracle<F: FiniteField>(x: &Matrix<F>) -> Matrix<F> {
        let n = x.rows();
        let lcm = (1..=n as u64).fold(1u64, |a, b| a / gcd(a, b) * b);
        let mut l = lcm;
        while (F::ORDER as f64).powf(l as f64) < n as f64 {
            l += lcm;
        }
        let mut s = x.clone();
        for _ in 0..l {
            s = s.pow(F::ORDER as u64);
        }
        s
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    fn check<F: FiniteField>(kind: GroupKind, seed: u64) {
        let g = MatrixGroup::<F>::build(kind).unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..500 {
            let c: Vec<F> = (0..g.lie_dim()).map(|_| F::from_index(rng.gen_range(0..F::ORDER))).collect();
            let x = g.lie_from_coords(&c);
            let j = jordan_g(&g, &x).unwrap();
            assert_eq!(j.semisimple, frobenius_oracle(&x));
            assert!(is_nilpotent_matrix(&j.nilpotent));
            assert!(is_semisimple_matrix(&j.semisimple));
            assert!(j.semisimple.commutator(&j.nilpotent).is_zero());
            assert_eq!(&j.semisimple + &j.nilpotent, x);
        }
    }

    #[test]
    fn agrees_with_frobenius_oracle() {
        check::<F2>(GroupKind::Sp(2), 1);
        check::<F3>(GroupKind::Sp(2), 2);
        check::<F4>(GroupKind::Sp(2), 3);
        check::<F2>(GroupKind::SO(5), 4);
        check::<F2>(GroupKind::SL(3), 5);
        check::<F2>(GroupKind::SL(2), 6);
    }

    #[test]
    fn torus_and_root_vectors() {
        let g = MatrixGroup::<F2>::build(GroupKind::Sp(2)).unwrap();
        for h in g.torus_basis() {
            let j = jordan_g(&g, h).unwrap();
            assert_eq!(&j.semisimple, h);
            assert!(j.nilpotent.is_zero());
        }
        for k in 0..g.datum().num_roots() {
            let e = g.root_vector(k);
            let j = jordan_g(&g, e).unwrap();
            assert!(j.semisimple.is_zero());
            assert_eq!(&j.nilpotent, e);
        }
        // a mixed element: diag part plus a commuting root vector, and one
        // that does not commute
        let a = g.datum().index_of(&[1, -1]).unwrap();
        let x = &g.torus_basis()[0] + g.root_vector(a);
        let j = jordan_g(&g, &x).unwrap();
        assert_eq!(j.semisimple, frobenius_oracle(&x));
        assert!(jordan_g(&g, &Matrix::identity(4).scale(F2::one())).is_ok());
        assert!(jordan_g(&g, &Matrix::unit(4, 0, 1)).is_err());
    }
}
