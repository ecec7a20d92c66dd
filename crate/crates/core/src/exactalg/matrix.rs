use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use super::poly::Poly;
use super::scalar::Ring;

/// Dense row-major matrix over a ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Ring> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    /// The column vector with the given entries.
    pub fn column(v: &[S]) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn diag(v: &[S]) -> Self {
        let n = v.len();
        Self::from_fn(n, n, |i, j| if i == j { v[i] } else { S::zero() })
    }

    /// Matrix unit E_{ij} (0-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = S::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn data(&self) -> &[S] {
        &self.data
    }
    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn col(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }
    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn trace(&self) -> S {
        assert!(self.is_square());
        (0..self.rows).fold(S::zero(), |acc, i| acc + self[(i, i)])
    }

    pub fn scale(&self, c: S) -> Self {
        self.map(|x| c * x)
    }

    pub fn map<T: Ring>(&self, f: impl Fn(S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| f(x)).collect() }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// [A, B] = AB − BA.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(v).fold(S::zero(), |acc, (&a, &b)| acc + a * b)).collect()
    }

    /// Submatrix keeping the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])])
    }

    /// Delete one row and one column.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let rs: Vec<usize> = (0..self.rows).filter(|&i| i != r).collect();
        let cs: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        self.select(&rs, &cs)
    }

    /// Entrywise dot product Σ a_ij b_ij.
    pub fn frobenius_dot(&self, other: &Self) -> S {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data.iter().zip(&other.data).fold(S::zero(), |acc, (&a, &b)| acc + a * b)
    }

    /// Characteristic polynomial det(t·I − A) by Berkowitz's division-free
    /// recurrence, so it is valid over any commutative ring.
    pub fn charpoly(&self) -> Poly<S> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Poly::one();
        }
        // coefficients, highest degree first
        let mut vect = vec![S::one(), -self[(0, 0)]];
        for r in 1..n {
            let lead = self.select(&(0..r).collect::<Vec<_>>(), &(0..r).collect::<Vec<_>>());
            let row: Vec<S> = (0..r).map(|j| self[(r, j)]).collect();
            let mut col: Vec<S> = (0..r).map(|i| self[(i, r)]).collect();
            let mut q = Vec::with_capacity(r + 2);
            q.push(S::one());
            q.push(-self[(r, r)]);
            for _ in 0..r {
                let rc = row.iter().zip(&col).fold(S::zero(), |acc, (&a, &b)| acc + a * b);
                q.push(-rc);
                col = lead.apply(&col);
            }
            let mut next = vec![S::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, &v) in vect.iter().enumerate() {
                    if i >= j {
                        *slot += q[i - j] * v;
                    }
                }
            }
            vect = next;
        }
        vect.reverse();
        Poly::new(vect)
    }

    /// Evaluate a polynomial at this matrix by Horner's rule.
    pub fn eval_poly(&self, p: &Poly<S>) -> Self {
        let n = self.rows;
        let mut acc = Self::zeros(n, n);
        for &c in p.coeffs().iter().rev() {
            acc = &(&acc * self) + &Self::identity(n).scale(c);
        }
        acc
    }
}

impl<S: Ring> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<S: Ring> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Ring> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, o: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    out.data[i * o.cols + j] += a * o.data[k * o.cols + j];
                }
            }
        }
        out
    }
}

impl<S: Ring> Mul for Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, o: Matrix<S>) -> Matrix<S> {
        &self * &o
    }
}

impl<S: Ring> Add for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, o: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(&a, &b)| a + b).collect() }
    }
}

impl<S: Ring> Add for Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, o: Matrix<S>) -> Matrix<S> {
        &self + &o
    }
}

impl<S: Ring> Sub for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, o: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(&a, &b)| a - b).collect() }
    }
}

impl<S: Ring> Sub for Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, o: Matrix<S>) -> Matrix<S> {
        &self - &o
    }
}

impl<S: Ring> Neg for &Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        self.map(|x| -x)
    }
}

impl<S: Ring> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x:?}")).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F2, F4, Z4};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn int_matrix(n: usize) -> impl Strategy<Value = Matrix<i64>> {
        proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| Matrix::from_vec(n, n, v))
    }

    /// Determinant by Leibniz expansion, an independent oracle for small n.
    fn leibniz_det(a: &Matrix<i64>) -> i64 {
        let n = a.rows();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = 0i64;
        fn rec(k: usize, perm: &mut Vec<usize>, a: &Matrix<i64>, total: &mut i64) {
            let n = perm.len();
            if k == n {
                let mut inv = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if perm[i] > perm[j] {
                            inv += 1;
                        }
                    }
                }
                let sign = if inv % 2 == 0 { 1 } else { -1 };
                *total += sign * (0..n).map(|i| a[(i, perm[i])]).product::<i64>();
                return;
            }
            for i in k..n {
                perm.swap(k, i);
                rec(k + 1, perm, a, total);
                perm.swap(k, i);
            }
        }
        rec(0, &mut perm, a, &mut total);
        total
    }

    #[test]
    fn charpoly_of_2x2() {
        let a = Matrix::from_rows(vec![vec![1i64, 2], vec![3, 4]]);
        assert_eq!(a.charpoly().coeffs(), &[-2, -5, 1]);
    }

    #[test]
    fn charpoly_over_z4_matches_known_trace() {
        let a = Matrix::from_rows(vec![vec![Z4::one(), Z4::from_i64(2)], vec![Z4::zero(), Z4::from_i64(3)]]);
        let cp = a.charpoly();
        assert_eq!(cp.coeffs()[1], -a.trace());
        assert_eq!(cp.coeffs()[0], Z4::from_i64(3));
    }

    proptest! {
        #[test]
        fn charpoly_constant_is_signed_det(a in int_matrix(4)) {
            let cp = a.charpoly();
            prop_assert_eq!(cp.coeffs()[0], leibniz_det(&a));
            prop_assert_eq!(cp.coeffs()[3], -a.trace());
            prop_assert_eq!(cp.degree(), Some(4));
        }

        #[test]
        fn cayley_hamilton(a in int_matrix(4)) {
            prop_assert!(a.eval_poly(&a.charpoly()).is_zero());
        }

        #[test]
        fn product_is_associative(a in int_matrix(3), b in int_matrix(3), c in int_matrix(3)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
        }

        #[test]
        fn cayley_hamilton_over_f4(v in proptest::collection::vec(0usize..4, 9)) {
            use crate::FiniteField;
            let a = Matrix::from_vec(3, 3, v.into_iter().map(F4::from_index).collect());
            prop_assert!(a.eval_poly(&a.charpoly()).is_zero());
        }
    }

    #[test]
    fn pow_of_unipotent() {
        let mut a = Matrix::<F2>::identity(3);
        a[(0, 1)] = F2::one();
        assert!(a.pow(2).is_identity());
    }
}
