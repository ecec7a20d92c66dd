use std::collections::BTreeMap;

use super::group::MatrixGroup;
use crate::error::{Error, Result};
use crate::exactalg::{FiniteField, Matrix, Subspace};

/// An element of 𝔤*, stored by its values on the Lie basis.
///
/// Matrices R with X ↦ Tr(RX) are representatives; two represent the same
/// functional iff they differ by an element of 𝔤^⊥. The canonical
/// representative is Σ x_i D_i over the trace-dual basis, which lies in a
/// weight-graded complement of 𝔤^⊥.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualElement<F> {
    pub values: Vec<F>,
}

impl<F: FiniteField> DualElement<F> {
    pub fn zero(dim: usize) -> Self {
        DualElement { values: vec![F::zero(); dim] }
    }
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
    pub fn add(&self, other: &Self) -> Self {
        DualElement { values: self.values.iter().zip(&other.values).map(|(&a, &b)| a + b).collect() }
    }
    pub fn sub(&self, other: &Self) -> Self {
        DualElement { values: self.values.iter().zip(&other.values).map(|(&a, &b)| a - b).collect() }
    }
    pub fn scale(&self, c: F) -> Self {
        DualElement { values: self.values.iter().map(|&a| c * a).collect() }
    }
    /// x(X) for X given in Lie coordinates.
    pub fn eval(&self, coords: &[F]) -> F {
        self.values.iter().zip(coords).fold(F::zero(), |s, (&a, &b)| s + a * b)
    }
    /// Index into `FiniteField::elements()` order, for compact hashing.
    pub fn key(&self) -> u128 {
        self.values.iter().rev().fold(0u128, |k, v| k * F::ORDER as u128 + v.index() as u128)
    }
}

/// Weight of a component in X*(T) coordinates.
pub type Weight = Vec<i64>;

impl<F: FiniteField> MatrixGroup<F> {
    pub fn dual_from_values(&self, values: Vec<F>) -> Result<DualElement<F>> {
        if values.len() != self.lie_dim() {
            return Err(Error::InvalidInput(format!("expected {} values, got {}", self.lie_dim(), values.len())));
        }
        Ok(DualElement { values })
    }

    /// The functional X ↦ Tr(RX).
    pub fn dual_from_representative(&self, r: &Matrix<F>) -> Result<DualElement<F>> {
        if r.rows() != self.size() || r.cols() != self.size() {
            return Err(Error::InvalidInput(format!("representative must be {0}×{0}", self.size())));
        }
        if self.is_pgl() && !r.trace().is_zero() {
            return Err(Error::InvalidInput("a functional on 𝔭𝔤𝔩 must vanish on scalars (Tr R = 0)".into()));
        }
        Ok(DualElement { values: self.lie_basis().iter().map(|b| r.frobenius_dot(&b.transpose())).collect() })
    }

    /// Canonical representative Σ x_i D_i.
    pub fn representative(&self, x: &DualElement<F>) -> Matrix<F> {
        let n = self.size();
        let mut m = Matrix::zeros(n, n);
        for (d, &v) in self.dual_basis().iter().zip(&x.values) {
            if !v.is_zero() {
                m = &m + &d.scale(v);
            }
        }
        m
    }

    /// The matrix of Ad*(g) on value vectors, i.e. Ad(g⁻¹)ᵀ.
    pub fn coadjoint_matrix(&self, g: &Matrix<F>) -> Matrix<F> {
        self.ad_matrix(&g.inverse().expect("invertible")).transpose()
    }

    /// Ad*(g)x, matching gRg⁻¹ on representatives.
    pub fn act_dual(&self, g: &Matrix<F>, x: &DualElement<F>) -> DualElement<F> {
        DualElement { values: self.coadjoint_matrix(g).apply(&x.values) }
    }

    /// ad*(Y)x: Z ↦ −x([Y, Z]).
    pub fn coadjoint_lie(&self, y: &[F], x: &DualElement<F>) -> DualElement<F> {
        let d = self.lie_dim();
        let values = (0..d)
            .map(|z| {
                let mut e = vec![F::zero(); d];
                e[z] = num_traits::One::one();
                -x.eval(&self.bracket(y, &e))
            })
            .collect();
        DualElement { values }
    }

    /// x(h_γ) where h_γ = dγ^∨(1).
    pub fn eval_coroot(&self, x: &DualElement<F>, g: usize) -> F {
        let c = self.datum().coroot(g);
        (0..self.rank()).fold(F::zero(), |s, k| s + F::from_i64(c[k]) * x.values[k])
    }

    /// x(e_γ).
    pub fn eval_root_vector(&self, x: &DualElement<F>, g: usize) -> F {
        x.values[self.root_basis_index(g)]
    }

    /// The zero-weight (torus) part of x.
    pub fn dual_torus_part(&self, x: &DualElement<F>) -> DualElement<F> {
        let mut v = x.values.clone();
        for e in v.iter_mut().skip(self.rank()) {
            *e = F::zero();
        }
        DualElement { values: v }
    }

    /// Roots γ with x(e_γ) ≠ 0.
    pub fn dual_support(&self, x: &DualElement<F>) -> Vec<usize> {
        (0..self.datum().num_roots()).filter(|&g| !self.eval_root_vector(x, g).is_zero()).collect()
    }

    /// Weight decomposition of a functional. A functional supported on 𝔤_γ
    /// has weight −γ; the torus part has weight 0.
    pub fn weight_decompose_dual(&self, x: &DualElement<F>) -> BTreeMap<Weight, DualElement<F>> {
        let mut out = BTreeMap::new();
        let t = self.dual_torus_part(x);
        if !t.is_zero() {
            out.insert(vec![0; self.rank()], t);
        }
        for g in self.dual_support(x) {
            let mut c = DualElement::zero(self.lie_dim());
            let i = self.root_basis_index(g);
            c.values[i] = x.values[i];
            let w = self.datum().root(self.datum().negative(g)).to_vec();
            out.insert(w, c);
        }
        out
    }

    /// Weight decomposition of a Lie element, by components in 𝔱 and 𝔤_γ.
    pub fn weight_decompose_lie(&self, x: &Matrix<F>) -> Result<BTreeMap<Weight, Matrix<F>>> {
        let c = self.lie_coords(x).ok_or_else(|| Error::InvalidInput("matrix is not in 𝔤".into()))?;
        let mut out = BTreeMap::new();
        let r = self.rank();
        if c[..r].iter().any(|v| !v.is_zero()) {
            let mut t = c.clone();
            for e in t.iter_mut().skip(r) {
                *e = F::zero();
            }
            out.insert(vec![0; r], self.lie_from_coords(&t));
        }
        for g in 0..self.datum().num_roots() {
            let v = c[self.root_basis_index(g)];
            if !v.is_zero() {
                out.insert(self.datum().root(g).to_vec(), self.root_vector(g).scale(v));
            }
        }
        Ok(out)
    }

    /// C_𝔤(x) = {Y : ad*(Y)x = 0}, in Lie coordinates.
    pub fn centralizer_lie_dual(&self, x: &DualElement<F>) -> Subspace<F> {
        let d = self.lie_dim();
        // column y of the map Y ↦ ad*(Y)x
        let cols: Vec<Vec<F>> = (0..d)
            .map(|y| {
                let mut e = vec![F::zero(); d];
                e[y] = num_traits::One::one();
                self.coadjoint_lie(&e, x).values
            })
            .collect();
        let m = Matrix::from_rows(cols).transpose();
        Subspace::span(d, &m.kernel())
    }

    /// C_𝔤(X) = {Y : [Y, X] = 0}, in Lie coordinates.
    pub fn centralizer_lie(&self, x: &[F]) -> Subspace<F> {
        let d = self.lie_dim();
        let cols: Vec<Vec<F>> = (0..d)
            .map(|y| {
                let mut e = vec![F::zero(); d];
                e[y] = num_traits::One::one();
                self.bracket(&e, x)
            })
            .collect();
        let m = Matrix::from_rows(cols).transpose();
        Subspace::span(d, &m.kernel())
    }

    /// 𝔱 in Lie coordinates.
    pub fn torus_subspace(&self) -> Subspace<F> {
        let d = self.lie_dim();
        let vs: Vec<Vec<F>> = (0..self.rank())
            .map(|k| {
                let mut e = vec![F::zero(); d];
                e[k] = num_traits::One::one();
                e
            })
            .collect();
        Subspace::span(d, &vs)
    }

    /// Span of 𝔱 and the root spaces 𝔤_γ for γ in `roots`.
    pub fn t_stable_subspace(&self, roots: &[usize]) -> Subspace<F> {
        let d = self.lie_dim();
        let mut vs = self.torus_subspace().basis().to_vec();
        for &g in roots {
            let mut e = vec![F::zero(); d];
            e[self.root_basis_index(g)] = num_traits::One::one();
            vs.push(e);
        }
        Subspace::span(d, &vs)
    }

    /// Roots γ with 𝔤_γ ⊂ h.
    pub fn roots_in(&self, h: &Subspace<F>) -> Vec<usize> {
        let d = self.lie_dim();
        (0..self.datum().num_roots())
            .filter(|&g| {
                let mut e = vec![F::zero(); d];
                e[self.root_basis_index(g)] = num_traits::One::one();
                h.contains(&e)
            })
            .collect()
    }

    /// The unique T-stable complement of 𝔥 ⊇ 𝔱: the root spaces not in 𝔥.
    pub fn t_stable_complement(&self, h: &Subspace<F>) -> Result<Subspace<F>> {
        if !h.contains_subspace(&self.torus_subspace()) {
            return Err(Error::InvalidInput("subalgebra does not contain 𝔱".into()));
        }
        let inside = self.roots_in(h);
        if self.rank() + inside.len() != h.dim() {
            return Err(Error::InvalidInput("subspace is not T-stable".into()));
        }
        let d = self.lie_dim();
        let outside: Vec<Vec<F>> = (0..self.datum().num_roots())
            .filter(|g| !inside.contains(g))
            .map(|g| {
                let mut e = vec![F::zero(); d];
                e[self.root_basis_index(g)] = num_traits::One::one();
                e
            })
            .collect();
        let c = Subspace::span(d, &outside);
        debug_assert_eq!(c.sum(h).dim(), d);
        Ok(c)
    }

    /// Is the subspace (in Lie coordinates) closed under the bracket?
    pub fn is_subalgebra(&self, h: &Subspace<F>) -> bool {
        h.basis().iter().all(|a| h.basis().iter().all(|b| h.contains(&self.bracket(a, b))))
    }
}
