use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::datum::{Family, RootDatum};
use super::{ModPVector, Side};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootImage {
    pub root: usize,
    /// h_α = α^∨ ⊗ 1 in 𝔱.
    pub h: ModPVector,
    /// dα = α ⊗ 1 in 𝔱*.
    pub d: ModPVector,
}

pub fn mod_p_images(d: &RootDatum, p: u32) -> Vec<RootImage> {
    (0..d.num_roots())
        .map(|i| RootImage { root: i, h: ModPVector::reduce(d.coroot(i), p, Side::T), d: ModPVector::reduce(d.root(i), p, Side::TDual) })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingSets {
    /// Roots with h_α = 0 in 𝔱.
    pub coroot_zero: Vec<usize>,
    /// Roots with dα = 0 in 𝔱*.
    pub root_zero: Vec<usize>,
}

pub fn vanishing_sets(d: &RootDatum, p: u32) -> VanishingSets {
    let imgs = mod_p_images(d, p);
    VanishingSets {
        coroot_zero: imgs.iter().filter(|x| x.h.is_zero()).map(|x| x.root).collect(),
        root_zero: imgs.iter().filter(|x| x.d.is_zero()).map(|x| x.root).collect(),
    }
}

/// Rank of integer vectors reduced mod a prime p.
#[allow(clippy::needless_range_loop)]
pub fn rank_mod_p(rows: &[Vec<i64>], p: u32) -> usize {
    let p = p as i64;
    let mut a: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, |r| r.len());
    let inv = |x: i64| -> i64 {
        // Fermat inverse
        let (mut b, mut e, mut acc) = (x, p - 2, 1i64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    };
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let iv = inv(a[r][c]);
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let f = a[i][c] * iv % p;
                for k in 0..cols {
                    a[i][k] = (a[i][k] - f * a[r][k]).rem_euclid(p);
                }
            }
        }
        r += 1;
    }
    r
}

/// Whether `v` lies in the F_p-span of `span` (all vectors reduced mod p).
pub fn in_span_mod_p(span: &[Vec<i64>], v: &[i64], p: u32) -> bool {
    let mut all = span.to_vec();
    all.push(v.to_vec());
    rank_mod_p(&all, p) == rank_mod_p(span, p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rank2Type {
    A1xA1,
    A2,
    B2,
    G2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank2Subsystem {
    pub roots: Vec<usize>,
    pub closed: bool,
    pub kind: Rank2Type,
}

/// Φ ∩ (ℤα + ℤβ).
pub fn rank2_subsystem(d: &RootDatum, a: usize, b: usize) -> Result<Rank2Subsystem> {
    let (va, vb) = (d.root(a), d.root(b));
    let n = d.rank();
    let minor = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, va[i] * vb[j] - va[j] * vb[i]))
        .find(|&(_, _, det)| det != 0);
    let Some((i, j, det)) = minor else {
        return Err(Error::InvalidInput("proportional roots".into()));
    };
    let roots: Vec<usize> = (0..d.num_roots())
        .filter(|&g| {
            let vg = d.root(g);
            // Cramer on the chosen 2×2 minor
            let xn = vg[i] * vb[j] - vg[j] * vb[i];
            let yn = va[i] * vg[j] - va[j] * vg[i];
            if xn % det != 0 || yn % det != 0 {
                return false;
            }
            let (x, y) = (xn / det, yn / det);
            (0..n).all(|k| x * va[k] + y * vb[k] == vg[k])
        })
        .collect();
    let set: BTreeSet<usize> = roots.iter().copied().collect();
    let closed = roots.iter().all(|&g| roots.iter().all(|&h| d.sum_index(g, h).is_none_or(|s| set.contains(&s))));
    let kind = match roots.len() {
        4 => Rank2Type::A1xA1,
        6 => Rank2Type::A2,
        8 => Rank2Type::B2,
        12 => Rank2Type::G2,
        k => unreachable!("rank-2 subsystem with {k} roots"),
    };
    Ok(Rank2Subsystem { roots, closed, kind })
}

/// Ordered pairs (α, β) with α + β a root and h_{α+β} outside the
/// F_p-span of h_α and h_β.
pub fn counterexample_pairs(d: &RootDatum, p: u32) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..d.num_roots() {
        for b in 0..d.num_roots() {
            let Some(s) = d.sum_index(a, b) else { continue };
            let span = [d.coroot(a).to_vec(), d.coroot(b).to_vec()];
            if !in_span_mod_p(&span, d.coroot(s), p) {
                out.push((a, b));
            }
        }
    }
    out
}

/// 3α₂^∨ = α̃^∨ − 2α₁^∨ − 2α₃^∨ − α₄^∨ in X_*(T), with the simple roots read
/// in label order and α̃ the highest root.
pub fn f4_coroot_identity_check(d: &RootDatum) -> Result<bool> {
    if d.family() != Family::F {
        return Err(Error::InvalidInput("not F₄".into()));
    }
    let c = |i: usize| d.coroot(i);
    let top = d.coroot(d.highest_root());
    let lhs: Vec<i64> = c(1).iter().map(|x| 3 * x).collect();
    let rhs: Vec<i64> = (0..4).map(|k| top[k] - 2 * c(0)[k] - 2 * c(2)[k] - c(3)[k]).collect();
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{shipped_datums, Isogeny};

    fn sp4() -> RootDatum {
        RootDatum::build(Family::C, 2, Isogeny::Matrix).unwrap()
    }

    #[test]
    fn zero_map_kernel_and_distinct_lines() {
        assert_eq!(rank_mod_p(&[vec![0, 0], vec![0, 0]], 2), 0);
        assert!(!in_span_mod_p(&[vec![1, 1]], &[1, 0], 2));
    }

    #[test]
    fn c2_pairing_kernel_mod_2() {
        let d = sp4();
        let pairing: Vec<Vec<i64>> = (0..2).map(|i| (0..2).map(|j| RootDatum::pair(d.root(i), d.coroot(j))).collect()).collect();
        // oracle: count lattice vectors mod 2 killed by the pairing matrix
        let killed = (0..4)
            .filter(|m| {
                let v = [m & 1, m >> 1];
                (0..2).all(|j| (pairing[0][j] * v[0] + pairing[1][j] * v[1]) % 2 == 0)
            })
            .count();
        assert_eq!(1usize << (2 - rank_mod_p(&pairing, 2)), killed);
    }

    #[test]
    fn sp4_images_mod_2() {
        let d = sp4();
        let imgs = mod_p_images(&d, 2);
        let idx = |v: &[i64]| d.index_of(v).unwrap();
        let (a, b, ab) = (idx(&[1, -1]), idx(&[1, 1]), idx(&[2, 0]));
        assert_eq!(imgs[a].h.coords, vec![1, 1]);
        assert_eq!(imgs[b].h.coords, vec![1, 1]);
        assert_eq!(imgs[ab].h.coords, vec![1, 0]);
        assert!(imgs[ab].d.is_zero());
        // oracle: pair every lattice vector mod 2 against the stored coroots
        for im in &imgs {
            for x in 0..4i64 {
                let v = [x & 1, x >> 1];
                let direct = RootDatum::pair(&v, d.coroot(im.root)).rem_euclid(2);
                let via = (v[0] * im.h.coords[0] as i64 + v[1] * im.h.coords[1] as i64) % 2;
                assert_eq!(direct, via);
            }
        }
    }

    #[test]
    fn a1_isogenies_mod_2() {
        let sl2 = RootDatum::build(Family::A, 1, Isogeny::SimplyConnected).unwrap();
        let pgl2 = RootDatum::build(Family::A, 1, Isogeny::Adjoint).unwrap();
        let vs = vanishing_sets(&sl2, 2);
        assert!(vs.coroot_zero.is_empty());
        assert_eq!(vs.root_zero.len(), 2);
        let vp = vanishing_sets(&pgl2, 2);
        assert_eq!(vp.coroot_zero.len(), 2);
        assert!(vp.root_zero.is_empty());
    }

    #[test]
    fn so5_and_sp4_vanishing() {
        let so5 = RootDatum::build(Family::B, 2, Isogeny::Matrix).unwrap();
        let vs = vanishing_sets(&so5, 2);
        let short: Vec<usize> = (0..8).filter(|&i| !so5.is_long(i)).collect();
        assert_eq!(vs.coroot_zero, short);
        let d = sp4();
        let long: Vec<usize> = (0..8).filter(|&i| d.is_long(i)).collect();
        assert_eq!(vanishing_sets(&d, 2).root_zero, long);
        for dd in shipped_datums() {
            let v = vanishing_sets(&dd, 7);
            assert!(v.coroot_zero.is_empty() && v.root_zero.is_empty());
        }
    }

    #[test]
    fn rank2_examples() {
        let d = sp4();
        let idx = |v: &[i64]| d.index_of(v).unwrap();
        let s = rank2_subsystem(&d, idx(&[1, -1]), idx(&[1, 1])).unwrap();
        assert_eq!(s.roots.len(), 8);
        assert_eq!(s.kind, Rank2Type::B2);
        assert!(s.closed);
        assert!(rank2_subsystem(&d, 0, d.negative(0)).is_err());
        // oracle: bounded integer combinations
        let (va, vb) = (d.root(idx(&[1, -1])).to_vec(), d.root(idx(&[1, 1])).to_vec());
        let mut oracle = BTreeSet::new();
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                let v = [x * va[0] + y * vb[0], x * va[1] + y * vb[1]];
                if let Some(i) = d.index_of(&v) {
                    oracle.insert(i);
                }
            }
        }
        assert_eq!(oracle, s.roots.iter().copied().collect());

        let a3 = RootDatum::build(Family::A, 3, Isogeny::SimplyConnected).unwrap();
        let t = rank2_subsystem(&a3, 0, 1).unwrap();
        assert_eq!((t.roots.len(), t.kind), (6, Rank2Type::A2));

        let g2 = RootDatum::build(Family::G, 2, Isogeny::Matrix).unwrap();
        let short: Vec<usize> = (0..12).filter(|&i| !g2.is_long(i)).collect();
        let (a, b) = short
            .iter()
            .flat_map(|&a| short.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| g2.sum_index(a, b).is_some_and(|s| g2.is_long(s)))
            .unwrap();
        let sub = rank2_subsystem(&g2, a, b).unwrap();
        assert_eq!(sub.kind, Rank2Type::G2);
        let amb = g2.index_of(&g2.root(a).iter().zip(g2.root(b)).map(|(x, y)| x - y).collect::<Vec<_>>()).unwrap();
        assert!(!g2.is_long(amb) && sub.roots.contains(&amb));
    }

    #[test]
    fn counterexample_pair_locations() {
        let d = sp4();
        let pairs = counterexample_pairs(&d, 2);
        assert!(pairs.contains(&(d.index_of(&[1, -1]).unwrap(), d.index_of(&[1, 1]).unwrap())));
        let g2 = RootDatum::build(Family::G, 2, Isogeny::Matrix).unwrap();
        assert!(!counterexample_pairs(&g2, 3).is_empty());
        for n in 1..=3 {
            let a = RootDatum::build(Family::A, n, Isogeny::SimplyConnected).unwrap();
            for p in [2, 3, 5] {
                assert!(counterexample_pairs(&a, p).is_empty());
            }
        }
    }

    #[test]
    fn f4_identity() {
        let f4 = RootDatum::build(Family::F, 4, Isogeny::Matrix).unwrap();
        assert_eq!(f4_coroot_identity_check(&f4), Ok(true));
        assert_eq!(f4_coroot_identity_check(&f4.with_swapped_simple(2, 3)), Ok(false));
        assert!(f4_coroot_identity_check(&sp4()).is_err());
    }

    #[test]
    fn classification_over_shipped_data() {
        for d in shipped_datums() {
            for p in [2, 3, 5, 7] {
                let pairs = counterexample_pairs(&d, p);
                if !pairs.is_empty() {
                    assert!(p == 2 || p == 3, "{} at p={p}", d.label());
                }
                for &(a, b) in &pairs {
                    let kind = rank2_subsystem(&d, a, b).unwrap().kind;
                    assert!(matches!(kind, Rank2Type::B2 | Rank2Type::G2), "{} {kind:?}", d.label());
                }
                if !vanishing_sets(&d, p).coroot_zero.is_empty() {
                    assert!(d.is_type_b(), "{} at p={p}", d.label());
                    assert!(p == 2 && d.is_adjoint(), "{} at p={p}", d.label());
                }
            }
        }
    }
}
