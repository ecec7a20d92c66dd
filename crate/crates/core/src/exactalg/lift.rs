use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::gf::Gf;
use super::scalar::{FiniteField, Ring};
use crate::error::{Error, Result};

/// The Galois ring GR(4, m) = (ℤ/4)[x] / (f̃), where f̃ is the coefficient-wise
/// 0/1 lift of the modulus used for F_{2^m}. Reduction mod 2 recovers F_{2^m}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaloisRing4<const M: u32>([u8; 4]);

const fn lifted_modulus(m: u32) -> [u8; 5] {
    match m {
        1 => [0, 1, 0, 0, 0],
        2 => [1, 1, 1, 0, 0],
        4 => [1, 1, 0, 0, 1],
        _ => panic!("unsupported Galois ring degree"),
    }
}

impl<const M: u32> GaloisRing4<M> {
    const MODULUS: [u8; 5] = lifted_modulus(M);

    pub fn from_coeffs(c: &[u8]) -> Self {
        assert_eq!(c.len(), M as usize);
        let mut a = [0u8; 4];
        for (i, &x) in c.iter().enumerate() {
            a[i] = x % 4;
        }
        GaloisRing4(a)
    }

    pub fn coeffs(self) -> Vec<u8> {
        self.0[..M as usize].to_vec()
    }

    /// True iff every coefficient is even, i.e. the element lies in 2·GR(4,m).
    pub fn is_even(self) -> bool {
        self.0.iter().all(|c| c % 2 == 0)
    }
}

impl<const M: u32> fmt::Debug for GaloisRing4<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl<const M: u32> Add for GaloisRing4<M> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut r = [0u8; 4];
        for (i, slot) in r.iter_mut().enumerate() {
            *slot = (self.0[i] + o.0[i]) % 4;
        }
        GaloisRing4(r)
    }
}
impl<const M: u32> Neg for GaloisRing4<M> {
    type Output = Self;
    fn neg(self) -> Self {
        let mut r = [0u8; 4];
        for (i, slot) in r.iter_mut().enumerate() {
            *slot = (4 - self.0[i]) % 4;
        }
        GaloisRing4(r)
    }
}
impl<const M: u32> Sub for GaloisRing4<M> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}
impl<const M: u32> Mul for GaloisRing4<M> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let m = M as usize;
        let mut prod = [0u32; 8];
        for i in 0..m {
            for j in 0..m {
                prod[i + j] = (prod[i + j] + self.0[i] as u32 * o.0[j] as u32) % 4;
            }
        }
        for deg in (m..2 * m).rev() {
            let c = prod[deg];
            if c != 0 {
                for j in 0..=m {
                    let idx = deg - m + j;
                    prod[idx] = (prod[idx] + 16 - c * Self::MODULUS[j] as u32) % 4;
                }
            }
        }
        let mut r = [0u8; 4];
        for i in 0..m {
            r[i] = prod[i] as u8;
        }
        GaloisRing4(r)
    }
}
impl<const M: u32> AddAssign for GaloisRing4<M> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}
impl<const M: u32> SubAssign for GaloisRing4<M> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}
impl<const M: u32> MulAssign for GaloisRing4<M> {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}
impl<const M: u32> Zero for GaloisRing4<M> {
    fn zero() -> Self {
        GaloisRing4([0; 4])
    }
    fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }
}
impl<const M: u32> One for GaloisRing4<M> {
    fn one() -> Self {
        GaloisRing4([1, 0, 0, 0])
    }
}
impl<const M: u32> Ring for GaloisRing4<M> {
    fn from_i64(n: i64) -> Self {
        GaloisRing4([n.rem_euclid(4) as u8, 0, 0, 0])
    }
}

/// Passage between F_{2^m} and its ℤ/4 lift.
pub trait TwoAdicLift: FiniteField {
    type Lift: Ring;
    /// Teichmüller-free set-theoretic lift: each F_2 coordinate becomes 0 or 1.
    fn lift(self) -> Self::Lift;
    /// Reduction mod 2, a ring homomorphism.
    fn reduce(x: Self::Lift) -> Self;
    /// For x ∈ 2·GR(4,m), the unique y ∈ F_{2^m} with x = 2·lift(y).
    fn half(x: Self::Lift) -> Result<Self>;
}

impl<const M: u32> TwoAdicLift for Gf<2, M> {
    type Lift = GaloisRing4<M>;

    fn lift(self) -> GaloisRing4<M> {
        let d: Vec<u8> = self.digits().into_iter().map(|x| x as u8).collect();
        GaloisRing4::from_coeffs(&d)
    }

    fn reduce(x: GaloisRing4<M>) -> Self {
        let d: Vec<u32> = x.coeffs().into_iter().map(|c| (c % 2) as u32).collect();
        Self::from_digits(&d).expect("reduced digits are binary")
    }

    fn half(x: GaloisRing4<M>) -> Result<Self> {
        if !x.is_even() {
            return Err(Error::NotDivisible(format!("{x:?} is not divisible by 2 in GR(4,{M})")));
        }
        let d: Vec<u32> = x.coeffs().into_iter().map(|c| (c / 2) as u32).collect();
        Ok(Self::from_digits(&d).expect("halved digits are binary"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F16, F2, F4, Z4};
    use proptest::prelude::*;

    #[test]
    fn z4_is_integers_mod_4() {
        let two = Z4::from_i64(2);
        assert_eq!(two * two, Z4::zero());
        assert_eq!(Z4::from_i64(3) * Z4::from_i64(3), Z4::one());
        assert_eq!(F2::half(two).unwrap(), F2::one());
        assert!(F2::half(Z4::one()).is_err());
    }

    fn reduce_is_hom<F: TwoAdicLift>() {
        for a in F::elements() {
            for b in F::elements() {
                assert_eq!(F::reduce(a.lift() * b.lift()), a * b);
                assert_eq!(F::reduce(a.lift() + b.lift()), a + b);
            }
        }
    }

    #[test]
    fn reduction_is_a_ring_map() {
        reduce_is_hom::<F2>();
        reduce_is_hom::<F4>();
        reduce_is_hom::<F16>();
    }

    proptest! {
        #[test]
        fn lift_ring_is_associative(a in 0u8..4, b in 0u8..4, c in 0u8..4, d in 0u8..4, e in 0u8..4, f in 0u8..4) {
            let x = GaloisRing4::<2>::from_coeffs(&[a, b]);
            let y = GaloisRing4::<2>::from_coeffs(&[c, d]);
            let z = GaloisRing4::<2>::from_coeffs(&[e, f]);
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * (y + z), x * y + x * z);
        }

        #[test]
        fn half_inverts_doubling(i in 0usize..16) {
            let a = F16::from_index(i);
            let two = GaloisRing4::<4>::from_i64(2);
            prop_assert_eq!(F16::half(two * a.lift()).unwrap(), a);
        }
    }
}
