use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
    F,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G => "G",
            Family::F => "F",
        };
        write!(f, "{s}")
    }
}

/// Which lattice X*(T) is.
///
/// `Matrix` is the convention of the classical matrix groups: ε-coordinates
/// for SO_{2n+1}, Sp_{2n}, SO_{2n}; for type A it means SL_{n+1}, and for the
/// exceptional types (no matrix model here) it falls back to simply connected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Isogeny {
    SimplyConnected,
    Adjoint,
    Matrix,
}

/// A reduced, semisimple root datum with explicit lattices.
///
/// Characters and cocharacters are integer vectors in dual bases, so the
/// pairing ⟨x, y⟩ is the plain dot product. Roots are ordered: positive roots
/// by height (simple roots first, in label order), then the negatives in the
/// same order, so root `i` and root `i + npos` are negatives of each other.
#[derive(Clone, Debug)]
pub struct RootDatum {
    family: Family,
    n: usize,
    isogeny: Isogeny,
    gram: Matrix<i64>,
    simple_coords: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    npos: usize,
    lookup: HashMap<Vec<i64>, usize>,
}

fn eps(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// ε-coordinates of the simple roots of B_n, C_n, D_n (Bourbaki).
fn classical_simple(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut s: Vec<Vec<i64>> = (0..n - 1).map(|i| sub(&eps(n, i), &eps(n, i + 1))).collect();
    let last = match family {
        Family::B => eps(n, n - 1),
        Family::C => eps(n, n - 1).iter().map(|x| 2 * x).collect(),
        Family::D => {
            let mut v = eps(n, n - 1);
            v[n - 2] = 1;
            v
        }
        _ => unreachable!(),
    };
    s.push(last);
    s
}

fn tabulated_gram(family: Family, n: usize) -> Matrix<i64> {
    match family {
        Family::A => Matrix::from_fn(n, n, |i, j| match i.abs_diff(j) {
            0 => 2,
            1 => -1,
            _ => 0,
        }),
        Family::G => Matrix::from_rows(vec![vec![2, -3], vec![-3, 6]]),
        Family::F => Matrix::from_rows(vec![vec![4, -2, 0, 0], vec![-2, 4, -2, 0], vec![0, -2, 2, -1], vec![0, 0, -1, 2]]),
        _ => unreachable!(),
    }
}

impl RootDatum {
    pub fn build(family: Family, n: usize, isogeny: Isogeny) -> Result<Self> {
        let ok = match family {
            Family::A | Family::B | Family::C => n >= 1,
            Family::D => n >= 2,
            Family::G => n == 2,
            Family::F => n == 4,
        };
        if !ok {
            return Err(Error::Unsupported(format!("root datum of type {family}{n}")));
        }
        let eps_simple = matches!(family, Family::B | Family::C | Family::D).then(|| classical_simple(family, n));
        let gram = match &eps_simple {
            Some(s) => Matrix::from_fn(n, n, |i, j| dot(&s[i], &s[j])),
            None => tabulated_gram(family, n),
        };
        Ok(Self::from_gram(family, n, isogeny, gram, eps_simple))
    }

    fn from_gram(family: Family, n: usize, isogeny: Isogeny, gram: Matrix<i64>, eps_simple: Option<Vec<Vec<i64>>>) -> Self {
        // ⟨α_i, α_j^∨⟩ = 2(α_i, α_j)/(α_j, α_j)
        let cartan = Matrix::from_fn(n, n, |i, j| 2 * gram[(i, j)] / gram[(j, j)]);
        let len2 = |c: &[i64]| dot(c, &gram.apply(c));

        let mut found: Vec<Vec<i64>> = (0..n).map(|i| eps(n, i)).collect();
        let mut seen: std::collections::HashSet<Vec<i64>> = found.iter().cloned().collect();
        let mut k = 0;
        while k < found.len() {
            let c = found[k].clone();
            for j in 0..n {
                let pair: i64 = (0..n).map(|i| c[i] * cartan[(i, j)]).sum();
                let mut r = c.clone();
                r[j] -= pair;
                if seen.insert(r.clone()) {
                    found.push(r);
                }
            }
            k += 1;
        }
        let mut pos: Vec<Vec<i64>> = found.into_iter().filter(|c| c.iter().all(|&x| x >= 0)).collect();
        pos.sort_by(|a, b| {
            let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let npos = pos.len();
        let mut simple_coords = pos.clone();
        simple_coords.extend(pos.iter().map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()));

        // coroot in simple-coroot coordinates: c_i (α_i, α_i) / (α, α)
        let coroot_simple: Vec<Vec<i64>> = simple_coords
            .iter()
            .map(|c| {
                let l = len2(c);
                (0..n).map(|i| c[i] * gram[(i, i)] / l).collect()
            })
            .collect();

        let use_eps = isogeny == Isogeny::Matrix && eps_simple.is_some();
        let isogeny_coords = if isogeny == Isogeny::Matrix && !use_eps { Isogeny::SimplyConnected } else { isogeny };
        let (roots, coroots): (Vec<Vec<i64>>, Vec<Vec<i64>>) = simple_coords
            .iter()
            .zip(&coroot_simple)
            .map(|(c, cv)| match isogeny_coords {
                Isogeny::Adjoint => {
                    let l = len2(c);
                    let gc = gram.apply(c);
                    (c.clone(), gc.iter().map(|x| 2 * x / l).collect())
                }
                Isogeny::SimplyConnected => {
                    let gc = gram.apply(c);
                    ((0..n).map(|k| 2 * gc[k] / gram[(k, k)]).collect(), cv.clone())
                }
                Isogeny::Matrix => {
                    let s = eps_simple.as_ref().expect("ε-coordinates");
                    let e: Vec<i64> = (0..n).map(|k| (0..n).map(|i| c[i] * s[i][k]).sum()).collect();
                    let l = dot(&e, &e);
                    let ev = e.iter().map(|x| 2 * x / l).collect();
                    (e, ev)
                }
            })
            .unzip();
        let lookup = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        RootDatum { family, n, isogeny, gram, simple_coords, roots, coroots, npos, lookup }
    }

    /// The same datum with simple roots `i` and `j` relabelled.
    pub fn with_swapped_simple(&self, i: usize, j: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.n).collect();
        perm.swap(i, j);
        let gram = Matrix::from_fn(self.n, self.n, |a, b| self.gram[(perm[a], perm[b])]);
        let eps_simple = matches!(self.family, Family::B | Family::C | Family::D).then(|| {
            let s = classical_simple(self.family, self.n);
            perm.iter().map(|&k| s[k].clone()).collect()
        });
        Self::from_gram(self.family, self.n, self.isogeny, gram, eps_simple)
    }

    pub fn family(&self) -> Family {
        self.family
    }
    /// Rank of the lattices (also the semisimple rank).
    pub fn rank(&self) -> usize {
        self.n
    }
    pub fn isogeny(&self) -> Isogeny {
        self.isogeny
    }
    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.n)
    }
    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }
    pub fn num_positive(&self) -> usize {
        self.npos
    }
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }
    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }
    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }
    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }
    /// Coefficients of root `i` in the simple roots.
    pub fn simple_coords(&self, i: usize) -> &[i64] {
        &self.simple_coords[i]
    }
    pub fn simple_roots(&self) -> std::ops::Range<usize> {
        0..self.n
    }
    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.lookup.get(v).copied()
    }
    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }
    pub fn negative(&self, i: usize) -> usize {
        (i + self.npos) % self.roots.len()
    }
    pub fn height(&self, i: usize) -> i64 {
        self.simple_coords[i].iter().sum()
    }
    pub fn length2(&self, i: usize) -> i64 {
        let c = &self.simple_coords[i];
        dot(c, &self.gram.apply(c))
    }
    pub fn is_long(&self, i: usize) -> bool {
        let max = (0..self.roots.len()).map(|k| self.length2(k)).max().unwrap_or(0);
        self.length2(i) == max
    }
    /// Type B_n up to the exceptional isomorphisms A₁ = B₁ and C₂ = B₂.
    pub fn is_type_b(&self) -> bool {
        matches!((self.family, self.n), (Family::B, _) | (Family::A, 1) | (Family::C, 2))
    }

    /// True iff all roots have the same length.
    pub fn is_simply_laced(&self) -> bool {
        (0..self.roots.len()).all(|k| self.length2(k) == self.length2(0))
    }
    /// Index of α + β if it is a root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
        self.index_of(&s)
    }
    /// The highest root: the unique root of maximal height.
    pub fn highest_root(&self) -> usize {
        (0..self.npos).max_by_key(|&i| self.height(i)).expect("nonempty root system")
    }
    pub fn pair(x: &[i64], y: &[i64]) -> i64 {
        dot(x, y)
    }
    pub fn cartan_matrix(&self) -> Matrix<i64> {
        Matrix::from_fn(self.n, self.n, |i, j| dot(&self.roots[i], &self.coroots[j]))
    }
    /// Pairing matrix ⟨α_i, α_j^∨⟩ over all roots.
    pub fn pairing_matrix(&self) -> Matrix<i64> {
        let m = self.roots.len();
        Matrix::from_fn(m, m, |i, j| dot(&self.roots[i], &self.coroots[j]))
    }

    fn simple_lattice_det(vs: &[Vec<i64>]) -> i64 {
        let m = Matrix::from_rows(vs.to_vec());
        let c0 = m.charpoly().coeff(0);
        if m.rows().is_multiple_of(2) {
            c0
        } else {
            -c0
        }
    }

    /// X* is spanned by the roots, decided from the lattice itself.
    pub fn is_adjoint(&self) -> bool {
        Self::simple_lattice_det(&self.roots[..self.n]).abs() == 1
    }
    /// X_* is spanned by the coroots.
    pub fn is_simply_connected(&self) -> bool {
        Self::simple_lattice_det(&self.coroots[..self.n]).abs() == 1
    }

    /// Reflection s_α(x) = x − ⟨x, α^∨⟩α on X*.
    pub fn reflect_character(&self, a: usize, x: &[i64]) -> Vec<i64> {
        let k = dot(x, &self.coroots[a]);
        x.iter().zip(&self.roots[a]).map(|(xi, ai)| xi - k * ai).collect()
    }
    /// Reflection s_α(y) = y − ⟨α, y⟩α^∨ on X_*.
    pub fn reflect_cocharacter(&self, a: usize, y: &[i64]) -> Vec<i64> {
        let k = dot(&self.roots[a], y);
        y.iter().zip(&self.coroots[a]).map(|(yi, ci)| yi - k * ci).collect()
    }
}

/// Classical root count for a family and rank.
pub fn expected_root_count(family: Family, n: usize) -> usize {
    match family {
        Family::A => n * (n + 1),
        Family::B | Family::C => 2 * n * n,
        Family::D => 2 * n * (n - 1),
        Family::G => 12,
        Family::F => 48,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn shipped() -> Vec<RootDatum> {
        crate::rootdata::shipped_datums()
    }

    #[test]
    fn root_counts() {
        for d in shipped() {
            assert_eq!(d.num_roots(), expected_root_count(d.family(), d.rank()), "{}", d.label());
            assert_eq!(d.num_roots(), d.coroots().len());
        }
    }

    #[test]
    fn pairing_is_two_and_reflections_close() {
        for d in shipped() {
            for i in 0..d.num_roots() {
                assert_eq!(RootDatum::pair(d.root(i), d.coroot(i)), 2);
                for j in 0..d.num_roots() {
                    let r = d.reflect_character(i, d.root(j));
                    assert!(d.index_of(&r).is_some(), "{} not reflection closed", d.label());
                    let c = d.reflect_cocharacter(i, d.coroot(j));
                    assert!(d.coroots().contains(&c));
                }
                assert_eq!(d.negative(d.negative(i)), i);
                let neg: Vec<i64> = d.root(i).iter().map(|x| -x).collect();
                assert_eq!(d.index_of(&neg), Some(d.negative(i)));
            }
        }
    }

    #[test]
    fn long_roots_have_short_coroots() {
        for d in shipped() {
            if d.is_simply_laced() {
                continue;
            }
            // coroot lengths are inversely proportional to root lengths
            for i in 0..d.num_roots() {
                for j in 0..d.num_roots() {
                    if d.length2(i) > d.length2(j) {
                        let ci = d.coroot(i);
                        let cj = d.coroot(j);
                        // compare via the W-invariant form on X_* given by Σ ⟨α, y⟩²
                        let q = |y: &[i64]| -> i64 { d.roots().iter().map(|a| dot(a, y).pow(2)).sum() };
                        assert!(q(ci) < q(cj));
                    }
                }
            }
        }
    }

    #[test]
    fn f4_alpha2_is_long() {
        let d = RootDatum::build(Family::F, 4, Isogeny::SimplyConnected).unwrap();
        assert!(d.is_long(1));
        assert!(d.is_long(0));
        assert!(!d.is_long(2));
        assert_eq!(d.simple_coords(d.highest_root()), &[2, 3, 4, 2]);
    }

    #[test]
    fn isogeny_detection() {
        let sp = RootDatum::build(Family::C, 2, Isogeny::Matrix).unwrap();
        assert!(sp.is_simply_connected() && !sp.is_adjoint());
        let so5 = RootDatum::build(Family::B, 2, Isogeny::Matrix).unwrap();
        assert!(so5.is_adjoint() && !so5.is_simply_connected());
        let so6 = RootDatum::build(Family::D, 3, Isogeny::Matrix).unwrap();
        assert!(!so6.is_adjoint() && !so6.is_simply_connected());
        let g2 = RootDatum::build(Family::G, 2, Isogeny::Matrix).unwrap();
        assert!(g2.is_adjoint() && g2.is_simply_connected());
        assert!(RootDatum::build(Family::G, 3, Isogeny::Adjoint).is_err());
        assert!(RootDatum::build(Family::D, 1, Isogeny::Adjoint).is_err());
    }

    #[test]
    fn sp4_root_order() {
        let d = RootDatum::build(Family::C, 2, Isogeny::Matrix).unwrap();
        assert_eq!(d.root(0), &[1, -1]);
        assert_eq!(d.root(1), &[0, 2]);
        assert_eq!(d.root(2), &[1, 1]);
        assert_eq!(d.root(3), &[2, 0]);
        assert_eq!(d.coroot(3), &[1, 0]);
    }
}
