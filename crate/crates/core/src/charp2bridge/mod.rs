//! The characteristic-2 isogeny f: SO_{2n+1} → Sp_{2n} and the structures
//! it carries: the submodule 𝔰𝔬_{2n} ⊂ 𝔰𝔭_{2n}, the image V of df*, the
//! half-trace form B′, the a-invariants, and the span of the semisimple
//! locus in 𝔤 and 𝔤* for any group.
//!
//! Both groups use the anti-diagonal forms of [`MatrixGroup`]; the polar
//! form of the (2n+1)-dimensional quadratic space has the middle basis
//! vector as its radical, so f deletes the middle row and column.

mod closure;

pub use closure::{semisimple_closure_oracle, semisimple_closure_subspace};

use crate::error::{Error, Result};
use crate::exactalg::{FiniteField, Matrix, Poly, Subspace, TwoAdicLift};
use crate::groupalg::{DualElement, GroupKind, MatrixGroup};

/// 𝔰𝔬_{2n} inside 𝔰𝔭_{2n}: the torus and the short-root spaces, with the
/// integral pattern (torus cocharacters and integral short-root vectors)
/// used for ℤ/4 lifts.
#[derive(Clone, Debug)]
pub struct SoPattern<F: FiniteField> {
    /// Indices into the Sp Lie basis.
    pub indices: Vec<usize>,
    pub integral: Vec<Matrix<i64>>,
    /// Tr(P_i P_j)/2 over ℤ.
    pub half_gram: Matrix<i64>,
    /// The same subspace in Sp Lie coordinates.
    pub subspace: Subspace<F>,
}

impl<F: FiniteField> SoPattern<F> {
    pub fn new(sp: &MatrixGroup<F>) -> Result<Self> {
        if !matches!(sp.kind(), GroupKind::Sp(_)) {
            return Err(Error::InvalidInput(format!("{} is not symplectic", sp.name())));
        }
        let d = sp.datum();
        let r = sp.rank();
        let cochar = sp.cocharacter_matrix();
        let size = sp.size();
        let mut indices: Vec<usize> = (0..r).collect();
        let mut integral: Vec<Matrix<i64>> = (0..r).map(|k| Matrix::diag(&(0..size).map(|a| cochar[(a, k)]).collect::<Vec<_>>())).collect();
        for g in 0..d.num_roots() {
            if !d.is_long(g) {
                indices.push(sp.root_basis_index(g));
                integral.push(sp.integral_root_vector(g).clone());
            }
        }
        let m = integral.len();
        let mut half_gram = Matrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                let t = (&integral[i] * &integral[j]).trace();
                assert!(t % 2 == 0, "pattern trace is odd");
                half_gram[(i, j)] = t / 2;
            }
        }
        let unit = |i: usize| (0..sp.lie_dim()).map(|k| if k == i { F::one() } else { F::zero() }).collect::<Vec<F>>();
        let subspace = Subspace::span(sp.lie_dim(), &indices.iter().map(|&i| unit(i)).collect::<Vec<_>>());
        Ok(SoPattern { indices, integral, half_gram, subspace })
    }

    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    /// B′ Gram matrix over F, from the integral half-traces.
    pub fn gram(&self) -> Matrix<F> {
        self.half_gram.map(F::from_i64)
    }

    /// Coordinates on the pattern basis of an element of 𝔰𝔬_{2n} given in Sp
    /// Lie coordinates.
    pub fn coords(&self, sp_coords: &[F]) -> Option<Vec<F>> {
        let inside = (0..sp_coords.len()).all(|k| self.indices.contains(&k) || sp_coords[k].is_zero());
        inside.then(|| self.indices.iter().map(|&i| sp_coords[i]).collect())
    }

    pub fn sp_coords(&self, c: &[F], lie_dim: usize) -> Vec<F> {
        let mut out = vec![F::zero(); lie_dim];
        for (&i, &x) in self.indices.iter().zip(c) {
            out[i] = x;
        }
        out
    }

    /// Restriction of x ∈ 𝔰𝔭* to 𝔰𝔬_{2n}, as values on the pattern basis.
    pub fn restrict(&self, x: &DualElement<F>) -> Vec<F> {
        self.indices.iter().map(|&i| x.values[i]).collect()
    }

    /// The X ∈ 𝔰𝔬_{2n} with B′(X, ·) = y, for y given on the pattern basis.
    pub fn dualize(&self, y: &[F]) -> Option<Vec<F>> {
        self.gram().transpose().solve(y)
    }
}

/// a₀, …, aₙ with (Σ aᵢλ^i)² the characteristic polynomial of X.
pub fn a_invariants<F: FiniteField>(x: &Matrix<F>) -> Result<Vec<F>> {
    let n = x.rows() / 2;
    let root: Poly<F> = x.charpoly().sqrt_char2()?;
    Ok((0..=n).map(|i| root.coeffs().get(i).copied().unwrap_or_else(F::zero)).collect())
}

/// SO_{2n+1}, Sp_{2n} and the maps between them, over F_q with q even.
#[derive(Clone, Debug)]
pub struct IsogenyBridge<F: FiniteField> {
    n: usize,
    so: MatrixGroup<F>,
    sp: MatrixGroup<F>,
    pattern: SoPattern<F>,
    /// df as a matrix from SO Lie coordinates to Sp Lie coordinates.
    df: Matrix<F>,
    /// V = im df*, in SO dual value coordinates.
    v: Subspace<F>,
}

impl<F: FiniteField> IsogenyBridge<F> {
    pub fn build(n: usize) -> Result<Self> {
        if F::CHAR != 2 {
            return Err(Error::InvalidInput(format!(
                "the isogeny SO_{} → Sp_{} needs characteristic 2, not {}",
                2 * n + 1,
                2 * n,
                F::CHAR
            )));
        }
        let so = MatrixGroup::<F>::build(GroupKind::SO(2 * n + 1))?;
        let sp = MatrixGroup::<F>::build(GroupKind::Sp(n))?;
        let pattern = SoPattern::new(&sp)?;
        let cols: Vec<Vec<F>> = so.lie_basis().iter().map(|b| sp.lie_coords(&delete_middle(b)).expect("df lands in 𝔰𝔭")).collect();
        let df = Matrix::from_rows(cols).transpose();
        let pullbacks: Vec<Vec<F>> = (0..sp.lie_dim())
            .map(|i| {
                let mut e = vec![F::zero(); sp.lie_dim()];
                e[i] = F::one();
                df.transpose().apply(&e)
            })
            .collect();
        let v = Subspace::span(so.lie_dim(), &pullbacks);
        Ok(IsogenyBridge { n, so, sp, pattern, df, v })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn so(&self) -> &MatrixGroup<F> {
        &self.so
    }
    pub fn sp(&self) -> &MatrixGroup<F> {
        &self.sp
    }
    pub fn pattern(&self) -> &SoPattern<F> {
        &self.pattern
    }
    pub fn df(&self) -> &Matrix<F> {
        &self.df
    }
    pub fn v(&self) -> &Subspace<F> {
        &self.v
    }

    /// The middle basis vector, spanning the radical of the polar form.
    pub fn radical(&self) -> Vec<F> {
        (0..2 * self.n + 1).map(|i| if i == self.n { F::one() } else { F::zero() }).collect()
    }

    /// f on points.
    pub fn point_map(&self, g: &Matrix<F>) -> Matrix<F> {
        delete_middle(g)
    }

    /// df on matrices.
    pub fn df_matrix(&self, x: &Matrix<F>) -> Matrix<F> {
        delete_middle(x)
    }

    /// 𝔰𝔬(V′) ⊂ 𝔰𝔬_{2n+1} for the standard complement V′ of the radical.
    pub fn include_so_even(&self, x: &Matrix<F>) -> Matrix<F> {
        insert_middle(x)
    }

    /// df*: 𝔰𝔭* → 𝔰𝔬_{2n+1}*, x ↦ x∘df.
    pub fn df_dual(&self, x: &DualElement<F>) -> DualElement<F> {
        DualElement { values: self.df.transpose().apply(&x.values) }
    }

    /// Canonical lift 𝔰𝔬_{2n}* → 𝔰𝔬_{2n+1}*, for y given on the pattern basis.
    pub fn canonical_lift(&self, y: &[F]) -> DualElement<F> {
        let x = DualElement { values: self.pattern.sp_coords(y, self.sp.lie_dim()) };
        self.df_dual(&x)
    }

    /// Restriction 𝔰𝔬_{2n+1}* → 𝔰𝔬(V′)* on the pattern basis.
    pub fn restrict_to_so_even(&self, x: &DualElement<F>) -> Vec<F> {
        self.pattern
            .integral
            .iter()
            .map(|p| {
                let m = self.include_so_even(&p.map(F::from_i64));
                x.eval(&self.so.lie_coords(&m).expect("𝔰𝔬(V′) ⊂ 𝔰𝔬_{2n+1}"))
            })
            .collect()
    }

    /// b̄(Xv, v) = 0 for all v, tested on the diagonal of XᵀJ̄ (the quadratic
    /// form v ↦ b̄(Xv, v) is given by a symmetric matrix since X ∈ 𝔰𝔭).
    pub fn in_so_even(&self, x: &Matrix<F>) -> bool {
        self.sp.in_lie_algebra(x) && {
            let m = &x.transpose() * self.sp.form();
            (0..m.rows()).all(|i| m[(i, i)].is_zero())
        }
    }
}

impl<F: TwoAdicLift> IsogenyBridge<F> {
    /// B′(X, Y) = ½Tr(X̃Ỹ) mod 2, with coordinate-wise lifts X̃ = Σ lift(cᵢ)Pᵢ.
    pub fn bprime(&self, x: &[F], y: &[F]) -> Result<F> {
        let zero = vec![F::zero(); x.len()];
        self.bprime_lifted(x, y, &zero, &zero)
    }

    /// B′ with the lifts perturbed by 2·lift(noise).
    pub fn bprime_lifted(&self, x: &[F], y: &[F], noise_x: &[F], noise_y: &[F]) -> Result<F> {
        let lx = self.lift(x, noise_x);
        let ly = self.lift(y, noise_y);
        let t = (&lx * &ly).trace();
        F::half(t).map_err(|_| Error::NotDivisible(format!("Tr of lifted product is odd: {t:?}")))
    }

    fn lift(&self, c: &[F], noise: &[F]) -> Matrix<F::Lift> {
        let two = <F::Lift as crate::Ring>::from_i64(2);
        let size = self.sp.size();
        self.pattern.integral.iter().zip(c.iter().zip(noise)).fold(Matrix::zeros(size, size), |acc, (p, (&ci, &ni))| {
            let coeff = ci.lift() + two * ni.lift();
            &acc + &p.map(<F::Lift as crate::Ring>::from_i64).scale(coeff)
        })
    }
}

fn delete_middle<F: FiniteField>(x: &Matrix<F>) -> Matrix<F> {
    let n = x.rows();
    let mid = n / 2;
    let keep: Vec<usize> = (0..n).filter(|&i| i != mid).collect();
    Matrix::from_fn(n - 1, n - 1, |i, j| x[(keep[i], keep[j])])
}

fn insert_middle<F: FiniteField>(x: &Matrix<F>) -> Matrix<F> {
    let n = x.rows() + 1;
    let mid = n / 2;
    let src = |i: usize| {
        if i < mid {
            Some(i)
        } else if i == mid {
            None
        } else {
            Some(i - 1)
        }
    };
    Matrix::from_fn(n, n, |i, j| match (src(i), src(j)) {
        (Some(a), Some(b)) => x[(a, b)],
        _ => F::zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Ring, F2, F3, F4};
    use num_traits::{One, Zero};
    use rand::{rngs::StdRng, Rng, SeedableRng};

    #[test]
    fn dimensions() {
        let b = IsogenyBridge::<F2>::build(2).unwrap();
        assert_eq!(b.pattern().dim(), 6);
        assert_eq!(b.sp().lie_dim(), 10);
        assert_eq!(b.v().dim(), 6);
        assert_eq!(b.df().rank(), 6);
        assert!(IsogenyBridge::<F3>::build(2).is_err());
        let b4 = IsogenyBridge::<F4>::build(2).unwrap();
        assert_eq!(b4.v().dim(), 6);
    }

    #[test]
    fn so_even_is_the_quadratic_condition() {
        // oracle: b̄(Xv, v) = 0 for every v ∈ F_2⁴, over all of 𝔰𝔭₄(F₂)
        let b = IsogenyBridge::<F2>::build(2).unwrap();
        let sp = b.sp();
        let vs: Vec<Vec<F2>> = (0..16).map(|k| (0..4).map(|i| F2::from_index(k >> i & 1)).collect()).collect();
        let mut count = 0;
        for k in 0..1usize << 10 {
            let c: Vec<F2> = (0..10).map(|i| F2::from_index(k >> i & 1)).collect();
            let x = sp.lie_from_coords(&c);
            let quad = vs.iter().all(|v| {
                let xv = x.apply(v);
                sp.form().apply(v).iter().zip(&xv).fold(F2::zero(), |s, (&a, &b)| s + a * b).is_zero()
            });
            assert_eq!(quad, b.in_so_even(&x));
            assert_eq!(quad, b.pattern().subspace.contains(&c));
            count += usize::from(quad);
        }
        assert_eq!(count, 64);
    }

    #[test]
    fn point_map_is_a_homomorphism_into_sp() {
        let b = IsogenyBridge::<F2>::build(2).unwrap();
        let gens = b.so().generators();
        for x in &gens {
            assert!(b.sp().contains(&b.point_map(x)));
            for y in &gens {
                assert_eq!(b.point_map(&b.so().mul(x, y)), b.sp().mul(&b.point_map(x), &b.point_map(y)));
            }
        }
    }

    #[test]
    fn root_elements_under_f() {
        let b = IsogenyBridge::<F4>::build(2).unwrap();
        let (so, sp) = (b.so(), b.sp());
        for t in F4::elements() {
            for g in 0..so.datum().num_roots() {
                let w = so.datum().root(g);
                let image = b.point_map(&so.root_element(g, t).unwrap());
                if so.datum().is_long(g) {
                    // long roots of SO go to short roots of Sp, t ↦ ±t
                    let h = sp.datum().index_of(w).unwrap();
                    assert!(!sp.datum().is_long(h));
                    assert_eq!(image, sp.root_element(h, t).unwrap());
                } else {
                    // short roots ε_i go to long roots 2ε_i, t ↦ t²
                    let doubled: Vec<i64> = w.iter().map(|c| 2 * c).collect();
                    let h = sp.datum().index_of(&doubled).unwrap();
                    assert_eq!(image, sp.root_element(h, t * t).unwrap());
                }
            }
        }
    }

    #[test]
    fn v_is_torus_plus_long_roots() {
        let b = IsogenyBridge::<F2>::build(2).unwrap();
        let so = b.so();
        let d = so.datum();
        let mut expected: Vec<Vec<F2>> = Vec::new();
        let unit = |i: usize| (0..so.lie_dim()).map(|k| F2::from_index(usize::from(k == i))).collect::<Vec<_>>();
        expected.extend((0..so.rank()).map(unit));
        expected.extend((0..d.num_roots()).filter(|&g| d.is_long(g)).map(|g| unit(so.root_basis_index(g))));
        assert_eq!(b.v(), &Subspace::span(so.lie_dim(), &expected));
    }

    #[test]
    fn lift_and_restrict() {
        let b = IsogenyBridge::<F2>::build(2).unwrap();
        for i in 0..6 {
            let mut y = vec![F2::zero(); 6];
            y[i] = F2::one();
            let lifted = b.canonical_lift(&y);
            assert!(b.v().contains(&lifted.values));
            assert_eq!(b.restrict_to_so_even(&lifted), y);
        }
        assert!(b.canonical_lift(&[F2::zero(); 6]).is_zero());
        // 𝔰𝔭* → 𝔰𝔬₅* → 𝔰𝔬₄* is the restriction to 𝔰𝔬₄ ⊂ 𝔰𝔭₄
        for k in 0..1usize << 10 {
            let x = DualElement { values: (0..10).map(|i| F2::from_index(k >> i & 1)).collect() };
            assert_eq!(b.restrict_to_so_even(&b.df_dual(&x)), b.pattern().restrict(&x));
        }
    }

    #[test]
    fn another_complement_gives_the_same_image() {
        // V′₂ = u·V′ for a short-root element u ∉ Stab(V′); df(𝔰𝔬(V′₂)) = 𝔰𝔬₄
        let b = IsogenyBridge::<F2>::build(2).unwrap();
        let so = b.so();
        let g = (0..so.datum().num_roots()).find(|&g| !so.datum().is_long(g)).unwrap();
        let u = so.root_element(g, F2::one()).unwrap();
        let included: Vec<Matrix<F2>> = b.pattern().integral.iter().map(|p| b.include_so_even(&p.map(F2::from_i64))).collect();
        let moved: Vec<Matrix<F2>> = included.iter().map(|y| so.act_lie(&u, y)).collect();
        assert_ne!(Subspace::span(so.lie_dim(), &coords(so, &moved)), Subspace::span(so.lie_dim(), &coords(so, &included)));
        let images: Vec<Vec<F2>> = moved.iter().map(|y| b.sp().lie_coords(&b.df_matrix(y)).unwrap()).collect();
        assert_eq!(Subspace::span(10, &images), b.pattern().subspace);
    }

    fn coords(g: &MatrixGroup<F2>, ms: &[Matrix<F2>]) -> Vec<Vec<F2>> {
        ms.iter().map(|m| g.lie_coords(m).unwrap()).collect()
    }

    #[test]
    fn bprime_basics() {
        let b = IsogenyBridge::<F2>::build(2).unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        let rand6 = |rng: &mut StdRng| (0..6).map(|_| F2::from_index(rng.gen_range(0..2))).collect::<Vec<_>>();
        for _ in 0..100 {
            let (x, y) = (rand6(&mut rng), rand6(&mut rng));
            let v = b.bprime(&x, &y).unwrap();
            assert_eq!(v, b.bprime(&y, &x).unwrap());
            let (nx, ny) = (rand6(&mut rng), rand6(&mut rng));
            assert_eq!(v, b.bprime_lifted(&x, &y, &nx, &ny).unwrap());
            assert_eq!(v, b.pattern().gram().apply(&y).iter().zip(&x).fold(F2::zero(), |s, (&a, &c)| s + a * c));
        }
        assert_eq!(b.pattern().gram().rank(), 6);
        // h_{2ε₁} = ε₁^∨ is the first torus pattern vector
        let mut h = vec![F2::zero(); 6];
        h[0] = F2::one();
        assert_eq!(b.bprime(&h, &h).unwrap(), F2::one());
    }

    #[test]
    fn a_invariants_on_the_torus() {
        let b = IsogenyBridge::<F4>::build(2).unwrap();
        for c1 in F4::elements() {
            for c2 in F4::elements() {
                let mut c = vec![F4::zero(); 6];
                c[0] = c1;
                c[1] = c2;
                let x = b.sp().lie_from_coords(&b.pattern().sp_coords(&c, 10));
                assert_eq!(a_invariants(&x).unwrap(), vec![c1 * c2, c1 + c2, F4::one()]);
            }
        }
        assert_eq!(a_invariants(&Matrix::<F2>::zeros(4, 4)).unwrap(), vec![F2::zero(), F2::zero(), F2::one()]);
    }
}
