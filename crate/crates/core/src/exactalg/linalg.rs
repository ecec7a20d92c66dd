use super::matrix::Matrix;
use super::scalar::Field;

/// Result of Gauss–Jordan elimination: `transform · input = rref`.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    pub rref: Matrix<F>,
    pub pivots: Vec<usize>,
    pub transform: Matrix<F>,
}

impl<F: Field> Matrix<F> {
    /// Reduced row echelon form. In each column the pivot is the first row
    /// at or below the current one with a nonzero entry, so the output is
    /// deterministic and independent of any ordering on F.
    pub fn echelon(&self) -> Echelon<F> {
        let (m, n) = (self.rows(), self.cols());
        let mut a = self.clone();
        let mut t = Matrix::identity(m);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            swap_rows(&mut a, r, p);
            swap_rows(&mut t, r, p);
            let inv = a[(r, c)].inv().expect("pivot is nonzero");
            scale_row(&mut a, r, inv);
            scale_row(&mut t, r, inv);
            for i in 0..m {
                if i != r {
                    let f = a[(i, c)];
                    if !f.is_zero() {
                        axpy_row(&mut a, i, r, -f);
                        axpy_row(&mut t, i, r, -f);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { rref: a, pivots, transform: t }
    }

    pub fn rref(&self) -> Matrix<F> {
        self.echelon().rref
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of {v : A v = 0}, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let e = self.echelon();
        let n = self.cols();
        let free: Vec<usize> = (0..n).filter(|c| !e.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); n];
                v[f] = F::one();
                for (row, &pc) in e.pivots.iter().enumerate() {
                    v[pc] = -e.rref[(row, f)];
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert!(self.is_square());
        let e = self.echelon();
        (e.pivots.len() == self.rows()).then_some(e.transform)
    }

    pub fn det(&self) -> F {
        assert!(self.is_square());
        let n = self.rows();
        let mut a = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                swap_rows(&mut a, c, p);
                det = -det;
            }
            let piv = a[(c, c)];
            det *= piv;
            let inv = piv.inv().expect("pivot is nonzero");
            for i in c + 1..n {
                let f = a[(i, c)] * inv;
                if !f.is_zero() {
                    axpy_row(&mut a, i, c, -f);
                }
            }
        }
        det
    }

    /// Some x with A x = b, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows());
        let e = self.echelon();
        let tb = e.transform.apply(b);
        if tb[e.pivots.len()..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols()];
        for (row, &pc) in e.pivots.iter().enumerate() {
            x[pc] = tb[row];
        }
        Some(x)
    }
}

fn swap_rows<F: Field>(a: &mut Matrix<F>, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..a.cols() {
        let t = a[(i, c)];
        a[(i, c)] = a[(j, c)];
        a[(j, c)] = t;
    }
}

fn scale_row<F: Field>(a: &mut Matrix<F>, i: usize, s: F) {
    for c in 0..a.cols() {
        a[(i, c)] *= s;
    }
}

/// row_i += s · row_j
fn axpy_row<F: Field>(a: &mut Matrix<F>, i: usize, j: usize, s: F) {
    for c in 0..a.cols() {
        let v = a[(j, c)];
        a[(i, c)] += s * v;
    }
}

/// A linear subspace of F^n, stored by its canonical (reduced echelon) basis,
/// so two subspaces are equal iff their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        if vectors.is_empty() {
            return Subspace { ambient, basis: vec![] };
        }
        let m = Matrix::from_rows(vectors.to_vec());
        assert_eq!(m.cols(), ambient);
        let e = m.echelon();
        let basis = (0..e.pivots.len()).map(|i| e.rref.row(i).to_vec()).collect();
        Subspace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: vec![] }
    }

    pub fn full(ambient: usize) -> Self {
        let id: Matrix<F> = Matrix::identity(ambient);
        Subspace { ambient, basis: id.to_rows() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        Subspace::span(self.ambient, &vs).dim() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &vs)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        // Σ a_i u_i − Σ b_j w_j = 0
        let cols: Vec<Vec<F>> = self.basis.iter().cloned().chain(other.basis.iter().map(|w| w.iter().map(|&x| -x).collect())).collect();
        let m = Matrix::from_rows(cols).transpose();
        let vecs: Vec<Vec<F>> = m
            .kernel()
            .into_iter()
            .map(|c| {
                let mut v = vec![F::zero(); self.ambient];
                for (i, u) in self.basis.iter().enumerate() {
                    for (s, &x) in v.iter_mut().zip(u) {
                        *s += c[i] * x;
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, &vecs)
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, m: &Matrix<F>) -> Self {
        let vs: Vec<Vec<F>> = self.basis.iter().map(|v| m.apply(v)).collect();
        Subspace::span(m.rows(), &vs)
    }
}

/// Expresses vectors in a fixed linearly independent family.
#[derive(Clone, Debug)]
pub struct Coordinatizer<F: Field> {
    k: usize,
    transform: Matrix<F>,
}

impl<F: Field> Coordinatizer<F> {
    /// `None` if the family is linearly dependent.
    pub fn new(ambient: usize, basis: &[Vec<F>]) -> Option<Self> {
        let k = basis.len();
        if k == 0 {
            return Some(Coordinatizer { k, transform: Matrix::identity(ambient) });
        }
        let a = Matrix::from_rows(basis.to_vec()).transpose();
        assert_eq!(a.rows(), ambient);
        let e = a.echelon();
        (e.pivots.len() == k).then_some(Coordinatizer { k, transform: e.transform })
    }

    /// Coefficients c with v = Σ c_i b_i, or `None` if v is outside the span.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        let tv = self.transform.apply(v);
        if tv[self.k..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(tv[..self.k].to_vec())
    }
}
