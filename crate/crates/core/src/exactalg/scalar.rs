use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

/// A commutative ring with identity whose elements are small `Copy` values.
///
/// Everything in the crate that only needs ring operations (matrix products,
/// traces, characteristic polynomials) is written against this trait, so the
/// same code runs over `i64`, over finite fields, and over the ℤ/4 lifts.
pub trait Ring:
    Copy
    + Eq
    + Hash
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    /// Image of an integer under the canonical map ℤ → R.
    fn from_i64(n: i64) -> Self;

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(self) -> Option<Self>;
}

/// A finite field F_{p^m} with a fixed polynomial basis over F_p.
pub trait FiniteField: Field + Ord {
    const CHAR: u32;
    const DEGREE: u32;
    const ORDER: usize;

    /// Element with the given index, where the index is the base-p number
    /// whose digits are the coordinates in the polynomial basis.
    fn from_index(i: usize) -> Self;
    fn index(self) -> usize;

    /// Coordinates over F_p, lowest degree first (length `DEGREE`).
    fn digits(self) -> Vec<u32> {
        let p = Self::CHAR as usize;
        let mut v = self.index();
        (0..Self::DEGREE)
            .map(|_| {
                let d = (v % p) as u32;
                v /= p;
                d
            })
            .collect()
    }

    fn from_digits(digits: &[u32]) -> Option<Self> {
        if digits.len() != Self::DEGREE as usize || digits.iter().any(|&d| d >= Self::CHAR) {
            return None;
        }
        let p = Self::CHAR as usize;
        let idx = digits.iter().rev().fold(0usize, |acc, &d| acc * p + d as usize);
        Some(Self::from_index(idx))
    }

    fn elements() -> Vec<Self> {
        (0..Self::ORDER).map(Self::from_index).collect()
    }

    /// An additive basis over F_p (the monomials of the polynomial basis).
    fn prime_basis() -> Vec<Self> {
        let p = Self::CHAR as usize;
        (0..Self::DEGREE).map(|k| Self::from_index(p.pow(k))).collect()
    }

    /// A generator of the multiplicative group.
    fn primitive_element() -> Self {
        let n = (Self::ORDER - 1) as u64;
        Self::elements()
            .into_iter()
            .filter(|x| !x.is_zero())
            .find(|&x| (1..n).all(|k| !n.is_multiple_of(k) || !x.pow(k).is_one()))
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn frobenius(self) -> Self {
        self.pow(Self::CHAR as u64)
    }

    /// The unique square root in characteristic 2, x ↦ x^{2^{m-1}}.
    fn sqrt_char2(self) -> Self {
        assert_eq!(Self::CHAR, 2, "square roots are only canonical in characteristic 2");
        self.pow(1u64 << (Self::DEGREE - 1))
    }
}

impl Ring for i64 {
    fn from_i64(n: i64) -> Self {
        n
    }
}
