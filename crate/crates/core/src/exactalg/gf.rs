use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::scalar::{Field, FiniteField, Ring};

const MAX: usize = 32;

pub(crate) struct Tables {
    add: [[u8; MAX]; MAX],
    mul: [[u8; MAX]; MAX],
    neg: [u8; MAX],
    inv: [u8; MAX],
}

/// Coefficients (lowest degree first) of the defining modulus of F_{p^m}.
/// The constant-term-first list has length m + 1 and is monic.
const fn modulus(p: u32, m: u32) -> [u8; 5] {
    match (p, m) {
        (2, 1) | (3, 1) | (5, 1) | (7, 1) => [0, 1, 0, 0, 0],
        (2, 2) => [1, 1, 1, 0, 0],
        (2, 4) => [1, 1, 0, 0, 1],
        (3, 2) => [1, 0, 1, 0, 0],
        (5, 2) => [3, 0, 1, 0, 0],
        _ => panic!("unsupported finite field"),
    }
}

const fn digits(mut v: usize, p: usize, m: usize) -> [u8; 4] {
    let mut d = [0u8; 4];
    let mut i = 0;
    while i < m {
        d[i] = (v % p) as u8;
        v /= p;
        i += 1;
    }
    d
}

const fn undigits(d: &[u8; 4], p: usize, m: usize) -> u8 {
    let mut v = 0usize;
    let mut i = m;
    while i > 0 {
        i -= 1;
        v = v * p + d[i] as usize;
    }
    v as u8
}

const fn build(p: u32, m: u32) -> Tables {
    let md = modulus(p, m);
    let pu = p as usize;
    let mu = m as usize;
    let mut q = 1usize;
    let mut k = 0;
    while k < mu {
        q *= pu;
        k += 1;
    }
    assert!(q <= MAX);
    let mut t = Tables { add: [[0; MAX]; MAX], mul: [[0; MAX]; MAX], neg: [0; MAX], inv: [0; MAX] };
    let mut a = 0;
    while a < q {
        let da = digits(a, pu, mu);
        let mut nd = [0u8; 4];
        let mut i = 0;
        while i < mu {
            nd[i] = ((pu - da[i] as usize) % pu) as u8;
            i += 1;
        }
        t.neg[a] = undigits(&nd, pu, mu);
        let mut b = 0;
        while b < q {
            let db = digits(b, pu, mu);
            let mut s = [0u8; 4];
            let mut i = 0;
            while i < mu {
                s[i] = ((da[i] as usize + db[i] as usize) % pu) as u8;
                i += 1;
            }
            t.add[a][b] = undigits(&s, pu, mu);
            // schoolbook product, then reduce from the top degree down
            let mut prod = [0usize; 8];
            let mut i = 0;
            while i < mu {
                let mut j = 0;
                while j < mu {
                    prod[i + j] = (prod[i + j] + da[i] as usize * db[j] as usize) % pu;
                    j += 1;
                }
                i += 1;
            }
            let mut deg = 2 * mu;
            while deg > mu {
                deg -= 1;
                let c = prod[deg];
                if c != 0 {
                    let mut j = 0;
                    while j <= mu {
                        let idx = deg - mu + j;
                        prod[idx] = (prod[idx] + pu * pu - c * md[j] as usize) % pu;
                        j += 1;
                    }
                }
            }
            let mut r = [0u8; 4];
            let mut i = 0;
            while i < mu {
                r[i] = prod[i] as u8;
                i += 1;
            }
            t.mul[a][b] = undigits(&r, pu, mu);
            b += 1;
        }
        a += 1;
    }
    let mut a = 1;
    while a < q {
        let mut b = 1;
        while b < q {
            if t.mul[a][b] == 1 {
                t.inv[a] = b as u8;
            }
            b += 1;
        }
        assert!(t.inv[a] != 0, "modulus is not irreducible");
        a += 1;
    }
    t
}

/// An element of F_{p^m}, stored as its index (base-p digits of the
/// coordinates in the polynomial basis). Arithmetic is table lookup.
#[derive(Clone, Copy)]
pub struct Gf<const P: u32, const M: u32>(u8);

impl<const P: u32, const M: u32> Gf<P, M> {
    const TABLES: Tables = build(P, M);

    fn tables() -> &'static Tables {
        &Self::TABLES
    }

    pub const fn raw(self) -> u8 {
        self.0
    }

    /// Canonical image of an integer.
    pub fn from_int(n: i64) -> Self {
        let r = n.rem_euclid(P as i64) as u8;
        Gf(r)
    }

    /// Whether the element lies in the prime field.
    pub fn is_prime_field(self) -> bool {
        (self.0 as u32) < P
    }
}

impl<const P: u32, const M: u32> PartialEq for Gf<P, M> {
    fn eq(&self, o: &Self) -> bool {
        self.0 == o.0
    }
}
impl<const P: u32, const M: u32> Eq for Gf<P, M> {}
impl<const P: u32, const M: u32> Hash for Gf<P, M> {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.0.hash(h)
    }
}
impl<const P: u32, const M: u32> PartialOrd for Gf<P, M> {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl<const P: u32, const M: u32> Ord for Gf<P, M> {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.cmp(&o.0)
    }
}

impl<const P: u32, const M: u32> fmt::Debug for Gf<P, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const P: u32, const M: u32> fmt::Display for Gf<P, M> {
    /// Prime-field elements print as integers, others as comma-joined
    /// coordinates, lowest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if M == 1 {
            write!(f, "{}", self.0)
        } else {
            let d = self.digits();
            let s: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl<const P: u32, const M: u32> Add for Gf<P, M> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Gf(Self::tables().add[self.0 as usize][o.0 as usize])
    }
}
impl<const P: u32, const M: u32> Sub for Gf<P, M> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}
impl<const P: u32, const M: u32> Neg for Gf<P, M> {
    type Output = Self;
    fn neg(self) -> Self {
        Gf(Self::tables().neg[self.0 as usize])
    }
}
impl<const P: u32, const M: u32> Mul for Gf<P, M> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Gf(Self::tables().mul[self.0 as usize][o.0 as usize])
    }
}
impl<const P: u32, const M: u32> Div for Gf<P, M> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero in a finite field")
    }
}
impl<const P: u32, const M: u32> AddAssign for Gf<P, M> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}
impl<const P: u32, const M: u32> SubAssign for Gf<P, M> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}
impl<const P: u32, const M: u32> MulAssign for Gf<P, M> {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl<const P: u32, const M: u32> Zero for Gf<P, M> {
    fn zero() -> Self {
        Gf(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}
impl<const P: u32, const M: u32> One for Gf<P, M> {
    fn one() -> Self {
        Gf(1)
    }
}

impl<const P: u32, const M: u32> Ring for Gf<P, M> {
    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<const P: u32, const M: u32> Field for Gf<P, M> {
    fn inv(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(Gf(Self::tables().inv[self.0 as usize]))
        }
    }
}

impl<const P: u32, const M: u32> FiniteField for Gf<P, M> {
    const CHAR: u32 = P;
    const DEGREE: u32 = M;
    const ORDER: usize = (P as usize).pow(M);

    fn from_index(i: usize) -> Self {
        assert!(i < Self::ORDER, "index {i} out of range for a field of order {}", Self::ORDER);
        Gf(i as u8)
    }
    fn index(self) -> usize {
        self.0 as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F16, F2, F25, F3, F4, F5, F9};

    fn field_axioms<F: FiniteField>() {
        let els = F::elements();
        assert_eq!(els.len(), F::ORDER);
        for &a in &els {
            assert_eq!(a + F::zero(), a);
            assert_eq!(a * F::one(), a);
            assert_eq!(a + (-a), F::zero());
            if !a.is_zero() {
                assert_eq!(a * a.inv().unwrap(), F::one());
            }
            assert_eq!(Ring::pow(a, F::ORDER as u64), a);
            for &b in &els {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                for &c in &els {
                    assert_eq!(a * (b + c), a * b + a * c);
                    assert_eq!((a * b) * c, a * (b * c));
                }
            }
        }
    }

    #[test]
    fn axioms_hold() {
        field_axioms::<F2>();
        field_axioms::<F3>();
        field_axioms::<F4>();
        field_axioms::<F5>();
        field_axioms::<F16>();
        field_axioms::<F9>();
        field_axioms::<F25>();
    }

    #[test]
    fn primitive_elements_generate() {
        let g = F16::primitive_element();
        let mut seen = std::collections::HashSet::new();
        let mut x = F16::one();
        for _ in 0..15 {
            seen.insert(x);
            x *= g;
        }
        assert_eq!(seen.len(), 15);
    }

    #[test]
    fn char2_sqrt_inverts_squaring() {
        for a in F16::elements() {
            assert_eq!((a * a).sqrt_char2(), a);
        }
        for a in F4::elements() {
            assert_eq!(a.sqrt_char2() * a.sqrt_char2(), a);
        }
    }

    #[test]
    fn digits_roundtrip() {
        for a in F16::elements() {
            assert_eq!(F16::from_digits(&a.digits()), Some(a));
        }
        assert_eq!(F4::from_digits(&[2, 0]), None);
    }

    #[test]
    fn subfield_embedding() {
        // F4 sits inside F16 as the fixed points of x ↦ x^4
        let fixed = F16::elements().into_iter().filter(|&a| Ring::pow(a, 4) == a).count();
        assert_eq!(fixed, 4);
    }
}
