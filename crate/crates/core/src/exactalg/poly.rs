use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{Field, FiniteField, Ring};
use crate::error::{Error, Result};

/// Univariate polynomial, coefficients lowest degree first, with no
/// trailing zeros (the zero polynomial has an empty coefficient list).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<S: Ring> {
    c: Vec<S>,
}

impl<S: Ring> Poly<S> {
    pub fn new(mut c: Vec<S>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }
    pub fn zero() -> Self {
        Poly { c: vec![] }
    }
    pub fn one() -> Self {
        Poly { c: vec![S::one()] }
    }
    pub fn x() -> Self {
        Poly { c: vec![S::zero(), S::one()] }
    }
    pub fn constant(a: S) -> Self {
        Self::new(vec![a])
    }
    pub fn monomial(a: S, d: usize) -> Self {
        let mut c = vec![S::zero(); d + 1];
        c[d] = a;
        Self::new(c)
    }
    pub fn coeffs(&self) -> &[S] {
        &self.c
    }
    /// Coefficient of t^k, zero past the degree.
    pub fn coeff(&self, k: usize) -> S {
        self.c.get(k).copied().unwrap_or_else(S::zero)
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }
    pub fn leading(&self) -> S {
        self.c.last().copied().unwrap_or_else(S::zero)
    }
    pub fn scale(&self, a: S) -> Self {
        Self::new(self.c.iter().map(|&x| a * x).collect())
    }
    pub fn eval(&self, x: S) -> S {
        self.c.iter().rev().fold(S::zero(), |acc, &a| acc * x + a)
    }
    pub fn derivative(&self) -> Self {
        Self::new(self.c.iter().enumerate().skip(1).map(|(i, &a)| S::from_i64(i as i64) * a).collect())
    }
    pub fn map<T: Ring>(&self, f: impl Fn(S) -> T) -> Poly<T> {
        Poly::new(self.c.iter().map(|&x| f(x)).collect())
    }
}

impl<F: Field> Poly<F> {
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.leading().inv().expect("nonzero leading coefficient"))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let li = d.leading().inv().expect("nonzero leading coefficient");
        let mut r = self.c.clone();
        let n = r.len();
        if n <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = r[k + dd] * li;
            q[k] = c;
            if !c.is_zero() {
                for (j, &dj) in d.c.iter().enumerate() {
                    r[k + j] -= c * dj;
                }
            }
        }
        (Self::new(q), Self::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.divrem(self).1.is_zero()
    }
}

impl<F: FiniteField> Poly<F> {
    /// Radical: the monic product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return Self::one();
        }
        let f = self.monic();
        let df = f.derivative();
        if df.is_zero() {
            // f(t) = h(t^p) = (h^{1/p}(t))^p
            let p = F::CHAR as usize;
            let root = |a: F| a.pow((F::ORDER / p) as u64);
            let h: Vec<F> = f.c.iter().step_by(p).map(|&a| root(a)).collect();
            return Self::new(h).squarefree_part();
        }
        let g = f.gcd(&df);
        let w = f.divrem(&g).0.monic();
        let rg = g.squarefree_part();
        let common = w.gcd(&rg);
        (&w * &rg).divrem(&common).0.monic()
    }

    /// The unique square root of a polynomial in characteristic 2; fails if
    /// an odd-degree coefficient is nonzero.
    pub fn sqrt_char2(&self) -> Result<Self> {
        if F::CHAR != 2 {
            return Err(Error::InvalidInput("polynomial square roots need characteristic 2".into()));
        }
        if self.c.iter().skip(1).step_by(2).any(|a| !a.is_zero()) {
            return Err(Error::NotAPerfectSquare(format!("{self}")));
        }
        Ok(Self::new(self.c.iter().step_by(2).map(|&a| a.sqrt_char2()).collect()))
    }
}

impl<S: Ring> Add for &Poly<S> {
    type Output = Poly<S>;
    fn add(self, o: &Poly<S>) -> Poly<S> {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}
impl<S: Ring> Sub for &Poly<S> {
    type Output = Poly<S>;
    fn sub(self, o: &Poly<S>) -> Poly<S> {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}
impl<S: Ring> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        self.map(|x| -x)
    }
}
impl<S: Ring> Mul for &Poly<S> {
    type Output = Poly<S>;
    fn mul(self, o: &Poly<S>) -> Poly<S> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![S::zero(); self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl<S: Ring> fmt::Display for Poly<S> {
    /// Highest degree first, in the variable `t`, e.g. `t^2 + (1)t + (1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let coeff = if a.is_one() && k > 0 { String::new() } else { format!("({a:?})") };
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            terms.push(format!("{coeff}{var}"));
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl<S: Ring> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F16, F2, F3, F4};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn poly<F: FiniteField>(v: &[usize]) -> Poly<F> {
        Poly::new(v.iter().map(|&i| F::from_index(i)).collect())
    }

    #[test]
    fn radical_in_characteristic_two() {
        // (t+1)^4 t^2 has radical t(t+1)
        let a = poly::<F2>(&[1, 1]);
        let t = Poly::<F2>::x();
        let f = &(&(&(&a * &a) * &(&a * &a)) * &t) * &t;
        assert_eq!(f.squarefree_part(), &a * &t);
    }

    #[test]
    fn square_roots_over_f4() {
        let a = poly::<F4>(&[2, 3, 1]);
        assert_eq!((&a * &a).sqrt_char2().unwrap(), a);
        assert!(poly::<F4>(&[0, 1]).sqrt_char2().is_err());
    }

    proptest! {
        #[test]
        fn division_identity(a in proptest::collection::vec(0usize..3, 0..7), b in proptest::collection::vec(0usize..3, 1..5)) {
            let a = poly::<F3>(&a);
            let b = poly::<F3>(&b);
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }

        #[test]
        fn radical_divides_and_is_squarefree(v in proptest::collection::vec(0usize..16, 1..5), e in 1usize..4) {
            let base = poly::<F16>(&v);
            prop_assume!(base.degree().unwrap_or(0) > 0);
            let mut f = Poly::one();
            for _ in 0..e {
                f = &f * &base;
            }
            let r = f.squarefree_part();
            prop_assert!(r.divides(&f));
            prop_assert!(r.divides(&base.monic().squarefree_part()) && base.monic().squarefree_part().divides(&r));
            prop_assert_eq!(r.gcd(&r.derivative()), Poly::one());
        }
    }

    #[test]
    fn gcd_is_monic() {
        let a = poly::<F3>(&[2, 0, 2]);
        let b = poly::<F3>(&[1, 1]);
        let g = a.gcd(&b);
        assert!(g.leading().is_one());
        assert!(!g.is_zero());
        assert!(Poly::<F3>::zero().is_zero());
        let _ = F3::zero();
    }
}
