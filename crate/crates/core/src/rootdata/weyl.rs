use std::collections::{BTreeSet, HashSet, VecDeque};

use super::datum::RootDatum;
use super::ModPVector;
use crate::exactalg::Matrix;

/// Bitmask over root indices (supports up to 128 roots).
pub type RootSet = u128;

/// One element of W, with its length-lex minimal reduced word.
#[derive(Clone, Debug)]
pub struct WeylElement {
    pub word: Vec<usize>,
    /// Action on X*(T), on column vectors.
    pub on_characters: Matrix<i64>,
    /// Action on X_*(T).
    pub on_cocharacters: Matrix<i64>,
    /// Root permutation: `perm[i]` is the index of w(α_i).
    pub perm: Vec<usize>,
}

impl WeylElement {
    /// The positive system wΦ⁺ as a bitmask.
    pub fn positive_system(&self, d: &RootDatum) -> RootSet {
        (0..d.num_positive()).fold(0, |m, i| m | (1u128 << self.perm[i]))
    }
}

/// The Weyl group, listed in length-lex order of reduced words.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
}

fn simple_reflection_matrices(d: &RootDatum, i: usize) -> (Matrix<i64>, Matrix<i64>) {
    let n = d.rank();
    let a = d.root(i);
    let c = d.coroot(i);
    let on_x = Matrix::from_fn(n, n, |r, s| if r == s { 1 } else { 0 } - a[r] * c[s]);
    let on_y = Matrix::from_fn(n, n, |r, s| if r == s { 1 } else { 0 } - c[r] * a[s]);
    (on_x, on_y)
}

impl WeylGroup {
    pub fn new(d: &RootDatum) -> Self {
        let n = d.rank();
        let gens: Vec<(Matrix<i64>, Matrix<i64>)> = (0..n).map(|i| simple_reflection_matrices(d, i)).collect();
        let id = Matrix::identity(n);
        let mut seen: HashSet<Matrix<i64>> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([(Vec::new(), id.clone(), id)]);
        let mut elements = Vec::new();
        while let Some((word, mx, my)) = queue.pop_front() {
            for (i, (sx, sy)) in gens.iter().enumerate() {
                let nx = &mx * sx;
                if seen.insert(nx.clone()) {
                    let mut w = word.clone();
                    w.push(i);
                    queue.push_back((w, nx, &my * sy));
                }
            }
            let perm = (0..d.num_roots()).map(|k| d.index_of(&mx.apply(d.root(k))).expect("W permutes the roots")).collect();
            elements.push(WeylElement { word, on_characters: mx, on_cocharacters: my, perm });
        }
        WeylGroup { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// All positive systems wΦ⁺, in the same order as the elements.
    pub fn positive_systems(&self, d: &RootDatum) -> Vec<RootSet> {
        self.elements.iter().map(|w| w.positive_system(d)).collect()
    }

    /// W-orbit of a lattice vector on X* (`on_characters`) or X_*.
    pub fn orbit_lattice(&self, v: &[i64], on_characters: bool) -> BTreeSet<Vec<i64>> {
        self.elements.iter().map(|w| if on_characters { w.on_characters.apply(v) } else { w.on_cocharacters.apply(v) }).collect()
    }

    /// W-orbit of a vector mod p, acting on the side the vector is tagged with.
    pub fn orbit_mod_p(&self, v: &ModPVector) -> BTreeSet<ModPVector> {
        let lifted: Vec<i64> = v.coords.iter().map(|&x| x as i64).collect();
        let on_x = v.side == super::Side::TDual;
        self.orbit_lattice(&lifted, on_x).into_iter().map(|w| ModPVector::reduce(&w, v.p, v.side)).collect()
    }
}

/// Classical order of W.
pub fn expected_weyl_order(family: super::Family, n: usize) -> usize {
    use super::Family::*;
    let fact = |k: usize| (1..=k).product::<usize>();
    match family {
        A => fact(n + 1),
        B | C => (1usize << n) * fact(n),
        D => (1usize << (n - 1)) * fact(n),
        G => 12,
        F => 1152,
    }
}
