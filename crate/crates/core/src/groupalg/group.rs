use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Coordinatizer, FiniteField, Matrix};
use crate::rootdata::{Family, Isogeny, RootDatum};

/// A classical group by family and size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    /// Sp_{2n}; the payload is n.
    Sp(usize),
    /// SO_m; the payload is m.
    SO(usize),
    SL(usize),
    PGL(usize),
}

impl GroupKind {
    /// Parses names like `sp4`, `so5`, `sl2`, `pgl2`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::InvalidInput(format!("group {s:?}")))?;
        let (name, num) = s.split_at(split);
        let k: usize = num.parse().map_err(|_| Error::InvalidInput(format!("group {s:?}")))?;
        let kind = match name {
            "sp" if k.is_multiple_of(2) && k >= 2 => GroupKind::Sp(k / 2),
            "so" if k >= 3 => GroupKind::SO(k),
            "sl" if k >= 2 => GroupKind::SL(k),
            "pgl" if k >= 2 => GroupKind::PGL(k),
            _ => return Err(Error::InvalidInput(format!("unsupported group {s:?}"))),
        };
        Ok(kind)
    }

    pub fn ambient(self) -> usize {
        match self {
            GroupKind::Sp(n) => 2 * n,
            GroupKind::SO(m) | GroupKind::SL(m) | GroupKind::PGL(m) => m,
        }
    }

    pub fn datum(self) -> Result<RootDatum> {
        match self {
            GroupKind::Sp(n) => RootDatum::build(Family::C, n, Isogeny::Matrix),
            GroupKind::SO(m) if m % 2 == 1 => RootDatum::build(Family::B, m / 2, Isogeny::Matrix),
            GroupKind::SO(m) => RootDatum::build(Family::D, m / 2, Isogeny::Matrix),
            GroupKind::SL(n) => RootDatum::build(Family::A, n - 1, Isogeny::SimplyConnected),
            GroupKind::PGL(n) => RootDatum::build(Family::A, n - 1, Isogeny::Adjoint),
        }
    }

    /// |G(F_q)| by the classical formulas.
    pub fn order_over(self, q: u128) -> u128 {
        let prod = |range: std::ops::RangeInclusive<u32>, f: &dyn Fn(u32) -> u128| range.map(f).product::<u128>();
        match self {
            GroupKind::Sp(n) => q.pow((n * n) as u32) * prod(1..=n as u32, &|i| q.pow(2 * i) - 1),
            GroupKind::SO(m) if m % 2 == 1 => {
                let n = (m / 2) as u32;
                q.pow(n * n) * prod(1..=n, &|i| q.pow(2 * i) - 1)
            }
            GroupKind::SO(m) => {
                let n = (m / 2) as u32;
                q.pow(n * (n - 1)) * (q.pow(n) - 1) * prod(1..=n - 1, &|i| q.pow(2 * i) - 1)
            }
            GroupKind::SL(n) | GroupKind::PGL(n) => {
                let n = n as u32;
                q.pow(n * (n - 1) / 2) * prod(2..=n, &|i| q.pow(i) - 1)
            }
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Sp(n) => write!(f, "sp{}", 2 * n),
            GroupKind::SO(m) => write!(f, "so{m}"),
            GroupKind::SL(n) => write!(f, "sl{n}"),
            GroupKind::PGL(n) => write!(f, "pgl{n}"),
        }
    }
}

/// A split classical group over a finite field, with its standard diagonal
/// torus, integral root vectors, Lie algebra basis and trace-dual basis.
///
/// The Lie algebra basis is weight-graded: first the r torus elements
/// dλ_k(1) for the lattice basis λ_k of X_*(T), then one root vector per
/// root in datum order. For PGL_n the basis consists of coset
/// representatives modulo scalars.
#[derive(Clone, Debug)]
pub struct MatrixGroup<F: FiniteField> {
    kind: GroupKind,
    size: usize,
    datum: RootDatum,
    cochar: Matrix<i64>,
    root_vectors: Vec<Matrix<i64>>,
    root_squares: Vec<Matrix<i64>>,
    form: Matrix<F>,
    basis: Vec<Matrix<F>>,
    coords: Coordinatizer<F>,
    dual_basis: Vec<Matrix<F>>,
    structure: Vec<Vec<Vec<F>>>,
    perp: Vec<Matrix<F>>,
}

fn unit_i64(n: usize, i: usize, j: usize) -> Matrix<i64> {
    Matrix::unit(n, i, j)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl<F: FiniteField> MatrixGroup<F> {
    pub fn build(kind: GroupKind) -> Result<Self> {
        let size = kind.ambient();
        if !matches!(F::CHAR, 2 | 3 | 5) {
            return Err(Error::Unsupported(format!("{kind} in characteristic {}", F::CHAR)));
        }
        let datum = kind.datum()?;
        let r = datum.rank();
        let mirror = |a: usize| size - 1 - a;

        let cochar = match kind {
            GroupKind::Sp(_) | GroupKind::SO(_) => Matrix::from_fn(size, r, |a, i| {
                if a == i && mirror(a) != a {
                    1
                } else if mirror(a) == i && mirror(a) != a {
                    -1
                } else {
                    0
                }
            }),
            GroupKind::SL(_) => Matrix::from_fn(size, r, |a, i| {
                if a == i {
                    1
                } else if a == i + 1 {
                    -1
                } else {
                    0
                }
            }),
            GroupKind::PGL(_) => Matrix::from_fn(size, r, |a, i| i64::from(a <= i)),
        };

        // integral bilinear form for the Lie condition over ℤ
        let form_z: Option<Matrix<i64>> = match kind {
            GroupKind::Sp(n) => Some(Matrix::from_fn(size, size, |a, c| {
                if c == mirror(a) {
                    if a < n {
                        1
                    } else {
                        -1
                    }
                } else {
                    0
                }
            })),
            GroupKind::SO(_) => Some(Matrix::from_fn(size, size, |a, c| {
                if c == mirror(a) {
                    if a == c {
                        2
                    } else {
                        1
                    }
                } else {
                    0
                }
            })),
            _ => None,
        };
        let lie_condition_z = |x: &Matrix<i64>| -> Vec<i64> {
            match &form_z {
                Some(b) => (&(&x.transpose() * b) + &(b * x)).data().to_vec(),
                None => vec![x.trace()],
            }
        };

        let mut root_vectors = Vec::with_capacity(datum.num_roots());
        let mut root_squares = Vec::with_capacity(datum.num_roots());
        for g in 0..datum.num_roots() {
            let w = datum.root(g);
            let mut pairs = Vec::new();
            for a in 0..size {
                for b in 0..size {
                    if a != b && (0..r).all(|k| cochar[(a, k)] - cochar[(b, k)] == w[k]) {
                        pairs.push((a, b));
                    }
                }
            }
            let a_mat = match pairs.as_slice() {
                [(a, b)] => unit_i64(size, *a, *b),
                [(a1, b1), (a2, b2)] => {
                    let v1 = lie_condition_z(&unit_i64(size, *a1, *b1));
                    let v2 = lie_condition_z(&unit_i64(size, *a2, *b2));
                    let k = (0..v1.len()).find(|&k| v1[k] != 0 || v2[k] != 0).expect("nontrivial condition");
                    let (mut x, mut y) = (v2[k], -v1[k]);
                    let g = gcd(x, y);
                    x /= g;
                    y /= g;
                    if x < 0 {
                        x = -x;
                        y = -y;
                    }
                    &unit_i64(size, *a1, *b1).scale(x) + &unit_i64(size, *a2, *b2).scale(y)
                }
                _ => unreachable!("root space of unexpected shape"),
            };
            debug_assert!(form_z.is_none() || lie_condition_z(&a_mat).iter().all(|&v| v == 0));
            let sq = &a_mat * &a_mat;
            assert!(sq.data().iter().all(|v| v % 2 == 0), "A² not divisible by 2");
            assert!((&sq * &a_mat).is_zero(), "root vector not square-zero up to order 3");
            root_squares.push(sq.map(|v| v / 2));
            root_vectors.push(a_mat);
        }

        let form = match &form_z {
            Some(b) => b.map(F::from_i64),
            None => Matrix::identity(size),
        };

        let to_f = |m: &Matrix<i64>| m.map(F::from_i64);
        let mut basis: Vec<Matrix<F>> =
            (0..r).map(|k| Matrix::diag(&(0..size).map(|a| F::from_i64(cochar[(a, k)])).collect::<Vec<_>>())).collect();
        basis.extend(root_vectors.iter().map(to_f));

        let mut flat: Vec<Vec<F>> = basis.iter().map(|b| b.data().to_vec()).collect();
        if matches!(kind, GroupKind::PGL(_)) {
            flat.push(Matrix::<F>::identity(size).data().to_vec());
        }
        let coords = Coordinatizer::new(size * size, &flat)
            .ok_or_else(|| Error::Unsupported(format!("{kind} over F_{}: Lie basis is dependent", F::ORDER)))?;

        // trace-dual basis: transposed lead entries for root vectors, a
        // solved diagonal for the torus part
        let mut dual_basis = Vec::with_capacity(basis.len());
        let mut torus_rows: Vec<Vec<F>> = (0..r).map(|k| (0..size).map(|a| F::from_i64(cochar[(a, k)])).collect()).collect();
        if matches!(kind, GroupKind::PGL(_)) {
            torus_rows.push(vec![F::one(); size]);
        }
        let tm = Matrix::from_rows(torus_rows);
        for k in 0..r {
            let mut rhs = vec![F::zero(); tm.rows()];
            rhs[k] = F::one();
            let d = tm.solve(&rhs).ok_or_else(|| Error::Unsupported(format!("{kind}: torus pairing is degenerate mod {}", F::CHAR)))?;
            dual_basis.push(Matrix::diag(&d));
        }
        for b in &basis[r..] {
            let pos = b.data().iter().position(|x| !x.is_zero()).expect("root vector nonzero mod p");
            let (a, c) = (pos / size, pos % size);
            let v = b[(a, c)].inv().expect("nonzero");
            let mut d = Matrix::zeros(size, size);
            d[(c, a)] = v;
            dual_basis.push(d);
        }

        let mut g = MatrixGroup {
            kind,
            size,
            datum,
            cochar,
            root_vectors,
            root_squares,
            form,
            basis,
            coords,
            dual_basis,
            structure: vec![],
            perp: vec![],
        };
        for i in 0..g.basis.len() {
            for j in 0..g.basis.len() {
                let t = (&g.dual_basis[i] * &g.basis[j]).trace();
                let want = if i == j { F::one() } else { F::zero() };
                if t != want {
                    return Err(Error::Unsupported(format!("{kind}: trace-dual basis failed mod {}", F::CHAR)));
                }
            }
        }
        g.structure = (0..g.basis.len())
            .map(|i| {
                (0..g.basis.len()).map(|j| g.lie_coords(&g.basis[i].commutator(&g.basis[j])).expect("𝔤 is closed under bracket")).collect()
            })
            .collect();
        if !matches!(kind, GroupKind::PGL(_)) {
            let pairing = Matrix::from_rows(g.basis.iter().map(|b| b.transpose().data().to_vec()).collect());
            g.perp = pairing.kernel().into_iter().map(|v| Matrix::from_vec(size, size, v)).collect();
        }
        Ok(g)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }
    pub fn name(&self) -> String {
        format!("{}(F_{})", self.kind, F::ORDER)
    }
    /// Size N of the matrices.
    pub fn size(&self) -> usize {
        self.size
    }
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }
    pub fn rank(&self) -> usize {
        self.datum.rank()
    }
    /// Exponent matrix of the torus: λ(t) = diag(t^{(Mλ)_a}).
    pub fn cocharacter_matrix(&self) -> &Matrix<i64> {
        &self.cochar
    }
    /// Integral root vector A_γ, so u_γ(t) = I + tA_γ + t²A_γ²/2.
    pub fn integral_root_vector(&self, g: usize) -> &Matrix<i64> {
        &self.root_vectors[g]
    }
    /// A_γ²/2 over ℤ.
    pub fn integral_root_square(&self, g: usize) -> &Matrix<i64> {
        &self.root_squares[g]
    }

    /// Does T together with the root groups U_γ, γ ∈ `roots`, generate a
    /// subgroup whose Lie algebra is 𝔱 ⊕ Σ 𝔤_γ? Checked by stability of that
    /// subspace under Ad(u_γ(t)) as a polynomial in t, coefficient by
    /// coefficient over ℤ and then mod p.
    pub fn is_root_subgroup_system(&self, roots: crate::rootdata::RootSet) -> bool {
        let list: Vec<usize> = (0..self.datum.num_roots()).filter(|&g| roots >> g & 1 == 1).collect();
        if list.iter().any(|&g| roots >> self.datum.negative(g) & 1 == 0) {
            return false;
        }
        let h = self.t_stable_subspace(&list);
        let r = self.rank();
        let mut basis_z: Vec<Matrix<i64>> =
            (0..r).map(|k| Matrix::diag(&(0..self.size).map(|a| self.cochar[(a, k)]).collect::<Vec<_>>())).collect();
        basis_z.extend(list.iter().map(|&g| self.root_vectors[g].clone()));
        list.iter().all(|&g| {
            let a = &self.root_vectors[g];
            let c = &self.root_squares[g];
            basis_z.iter().all(|e| {
                // (I + tA + t²C) E (I − tA + t²C)
                let coeffs = [a * e - e * a, &(&(c * e) - &(&(a * e) * a)) + &(e * c), &(&(a * e) * c) - &(&(c * e) * a), &(c * e) * c];
                coeffs.iter().all(|m| {
                    let mf = m.map(F::from_i64);
                    self.lie_coords(&mf).is_some_and(|v| h.contains(&v))
                })
            })
        })
    }

    /// Gram matrix of the defining bilinear form (polar form for SO, with
    /// 2 in the middle for odd size); identity for SL and PGL.
    pub fn form(&self) -> &Matrix<F> {
        &self.form
    }
    pub fn is_pgl(&self) -> bool {
        matches!(self.kind, GroupKind::PGL(_))
    }
    pub fn expected_order(&self) -> u128 {
        self.kind.order_over(F::ORDER as u128)
    }

    /// Quadratic form of SO: Σ_{a < m/2} x_a x_{m-1-a}, plus x_mid² for odd m.
    pub fn quadratic_form(&self, v: &[F]) -> F {
        let m = self.size;
        let mut s = F::zero();
        for a in 0..m / 2 {
            s += v[a] * v[m - 1 - a];
        }
        if m % 2 == 1 {
            s += v[m / 2] * v[m / 2];
        }
        s
    }

    /// Canonical form of a group element (PGL: first nonzero entry is 1).
    pub fn normalize(&self, g: Matrix<F>) -> Matrix<F> {
        if !self.is_pgl() {
            return g;
        }
        let lead = *g.data().iter().find(|x| !x.is_zero()).expect("invertible matrix");
        g.scale(lead.inv().expect("nonzero"))
    }

    pub fn identity(&self) -> Matrix<F> {
        Matrix::identity(self.size)
    }

    pub fn mul(&self, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        self.normalize(a * b)
    }

    pub fn inverse(&self, g: &Matrix<F>) -> Matrix<F> {
        self.normalize(g.inverse().expect("group elements are invertible"))
    }

    /// u_γ(t).
    pub fn root_element(&self, g: usize, t: F) -> Result<Matrix<F>> {
        if g >= self.datum.num_roots() {
            return Err(Error::InvalidInput(format!("{g} is not a root index of {}", self.name())));
        }
        let a = self.root_vectors[g].map(F::from_i64);
        let c = self.root_squares[g].map(F::from_i64);
        Ok(self.normalize(&(&self.identity() + &a.scale(t)) + &c.scale(t * t)))
    }

    /// λ(t) for a cocharacter λ given in lattice coordinates.
    pub fn torus_element(&self, lambda: &[i64], t: F) -> Matrix<F> {
        let ti = t.inv().expect("torus elements need t ≠ 0");
        let exps = self.cochar.apply(lambda);
        let d: Vec<F> = exps.iter().map(|&e| if e >= 0 { t.pow(e as u64) } else { ti.pow((-e) as u64) }).collect();
        self.normalize(Matrix::diag(&d))
    }

    /// Generators of G(F_q): u_{±α_i}(b) for simple α_i and an F_p-basis b
    /// of F_q, and λ_k(ζ) for a primitive ζ.
    pub fn generators(&self) -> Vec<Matrix<F>> {
        let mut gens = Vec::new();
        for i in self.datum.simple_roots() {
            for root in [i, self.datum.negative(i)] {
                for b in F::prime_basis() {
                    gens.push(self.root_element(root, b).expect("simple root"));
                }
            }
        }
        if F::ORDER > 2 {
            let z = F::primitive_element();
            for k in 0..self.rank() {
                let mut y = vec![0; self.rank()];
                y[k] = 1;
                gens.push(self.torus_element(&y, z));
            }
        }
        gens
    }

    /// Exact membership test for G(F_q).
    pub fn contains(&self, g: &Matrix<F>) -> bool {
        if g.rows() != self.size || g.cols() != self.size || g.det().is_zero() {
            return false;
        }
        match self.kind {
            GroupKind::Sp(_) => &(&g.transpose() * &self.form) * g == self.form,
            GroupKind::SO(m) => {
                let polar = &(&g.transpose() * &self.form) * g == self.form;
                let quad = (0..m).all(|i| {
                    let col = g.col(i);
                    let mut e = vec![F::zero(); m];
                    e[i] = F::one();
                    self.quadratic_form(&col) == self.quadratic_form(&e)
                });
                let det_ok = if F::CHAR == 2 { m % 2 == 1 || (g - &self.identity()).rank().is_multiple_of(2) } else { g.det().is_one() };
                polar && quad && det_ok
            }
            GroupKind::SL(_) => g.det().is_one(),
            GroupKind::PGL(_) => *g == self.normalize(g.clone()),
        }
    }

    // ---- Lie algebra ----

    pub fn lie_dim(&self) -> usize {
        self.basis.len()
    }
    pub fn lie_basis(&self) -> &[Matrix<F>] {
        &self.basis
    }
    pub fn torus_basis(&self) -> &[Matrix<F>] {
        &self.basis[..self.rank()]
    }
    /// Index in the Lie basis of the root vector for root `g`.
    pub fn root_basis_index(&self, g: usize) -> usize {
        self.rank() + g
    }
    /// Root vector e_γ ∈ 𝔤 (the reduction of A_γ).
    pub fn root_vector(&self, g: usize) -> &Matrix<F> {
        &self.basis[self.rank() + g]
    }
    /// Trace-dual matrices D_i with Tr(D_i b_j) = δ_ij.
    pub fn dual_basis(&self) -> &[Matrix<F>] {
        &self.dual_basis
    }
    /// Basis of 𝔤^⊥ = {Y : Tr(YX) = 0 for all X ∈ 𝔤}; empty for PGL, whose
    /// dual is realized as the trace-zero matrices with no ambiguity.
    pub fn perp_basis(&self) -> &[Matrix<F>] {
        &self.perp
    }
    /// Dimension of the scalars quotiented out (1 for PGL, else 0).
    pub fn center_quotient_dim(&self) -> usize {
        usize::from(self.is_pgl())
    }

    /// Membership of a matrix in 𝔤 (for PGL every matrix represents a class).
    pub fn in_lie_algebra(&self, x: &Matrix<F>) -> bool {
        match self.kind {
            GroupKind::Sp(_) => (&(&x.transpose() * &self.form) + &(&self.form * x)).is_zero(),
            GroupKind::SO(_) => {
                let m = &x.transpose() * &self.form;
                (&m + &m.transpose()).is_zero() && (0..self.size).all(|i| m[(i, i)].is_zero()) && x.trace().is_zero()
            }
            GroupKind::SL(_) => x.trace().is_zero(),
            GroupKind::PGL(_) => true,
        }
    }

    /// Coordinates in the Lie basis (modulo scalars for PGL).
    pub fn lie_coords(&self, x: &Matrix<F>) -> Option<Vec<F>> {
        let mut c = self.coords.coords(x.data())?;
        if self.is_pgl() {
            c.pop();
        }
        Some(c)
    }

    pub fn lie_from_coords(&self, c: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.size, self.size);
        for (b, &x) in self.basis.iter().zip(c) {
            if !x.is_zero() {
                m = &m + &b.scale(x);
            }
        }
        m
    }

    /// Coordinates of [b_i, b_j].
    pub fn bracket_coords(&self, i: usize, j: usize) -> &[F] {
        &self.structure[i][j]
    }

    #[allow(clippy::needless_range_loop)]
    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        let d = self.lie_dim();
        let mut out = vec![F::zero(); d];
        for i in 0..d {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if y[j].is_zero() {
                    continue;
                }
                let c = x[i] * y[j];
                for (o, &s) in out.iter_mut().zip(&self.structure[i][j]) {
                    *o += c * s;
                }
            }
        }
        out
    }

    /// Ad(g) as a matrix on Lie coordinates (columns are images of basis vectors).
    pub fn ad_matrix(&self, g: &Matrix<F>) -> Matrix<F> {
        let gi = g.inverse().expect("invertible");
        let cols: Vec<Vec<F>> = self.basis.iter().map(|b| self.lie_coords(&(&(g * b) * &gi)).expect("𝔤 is Ad-stable")).collect();
        Matrix::from_rows(cols).transpose()
    }

    /// Ad(g)X = gXg⁻¹ on matrices.
    pub fn act_lie(&self, g: &Matrix<F>, x: &Matrix<F>) -> Matrix<F> {
        &(g * x) * &g.inverse().expect("invertible")
    }

    /// Weight of root-basis vector i (None for the torus part) in X*.
    pub fn basis_weight(&self, i: usize) -> Option<usize> {
        i.checked_sub(self.rank())
    }
}
