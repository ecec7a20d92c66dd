use std::collections::{HashMap, VecDeque};

use super::certificate::{audit_certificate, Audit, DualSweep, JordanCertificate};
use crate::exactalg::{FiniteField, Matrix};
use crate::groupalg::{DualElement, MatrixGroup};
use crate::rootdata::WeylGroup;

/// The field embedding F ↪ E as a table indexed by `F::index`, if F is a
/// subfield of E.
pub fn field_embedding<F: FiniteField, E: FiniteField>() -> Option<Vec<E>> {
    if F::CHAR != E::CHAR || E::DEGREE % F::DEGREE != 0 {
        return None;
    }
    let step = (E::ORDER - 1) / (F::ORDER - 1);
    let a = F::primitive_element();
    let base = E::primitive_element();
    // b ranges over elements of order q − 1; one of them has the minimal
    // polynomial of a, and then a^k ↦ b^k is additive
    for j in 1..F::ORDER {
        let b = pow(base, step * j);
        let mut table = vec![E::zero(); F::ORDER];
        let (mut x, mut y) = (F::one(), E::one());
        for _ in 0..F::ORDER - 1 {
            table[x.index()] = y;
            x *= a;
            y *= b;
        }
        let els = F::elements();
        let additive = els.iter().all(|&u| els.iter().all(|&v| table[(u + v).index()] == table[u.index()] + table[v.index()]));
        if additive {
            return Some(table);
        }
    }
    None
}

fn pow<E: FiniteField>(x: E, mut n: usize) -> E {
    let (mut acc, mut b) = (E::one(), x);
    while n > 0 {
        if n & 1 == 1 {
            acc *= b;
        }
        b = b * b;
        n >>= 1;
    }
    acc
}

pub fn embed_matrix<F: FiniteField, E: FiniteField>(table: &[E], m: &Matrix<F>) -> Matrix<E> {
    m.map(|c| table[c.index()])
}

pub fn embed_dual<F: FiniteField, E: FiniteField>(table: &[E], x: &DualElement<F>) -> DualElement<E> {
    DualElement { values: x.values.iter().map(|c| table[c.index()]).collect() }
}

/// Certificate search over a field too large for point enumeration.
///
/// A certificate with w = 1 is g = u·n_w·v where u·n_w runs over Bruhat
/// representatives of G/B (one per Borel) and v over U. The Borel step
/// keeps only frames z = Ad*((u n_w)⁻¹)x vanishing on 𝔲; the torus values
/// of z are then fixed, and v is chosen to clear the root components the
/// torus values forbid.
#[derive(Clone, Debug)]
pub struct BruhatSearch<'g, E: FiniteField> {
    group: &'g MatrixGroup<E>,
    weyl: WeylGroup,
    /// n_w for each Weyl element, in the Weyl group's order.
    reps: Vec<Matrix<E>>,
    /// Ad*(n_w⁻¹).
    reps_coadjoint: Vec<Matrix<E>>,
    /// For positive root γ and t = E::from_index(i): Ad*(u_γ(−t)).
    unipotent_coadjoint: Vec<Vec<Matrix<E>>>,
}

impl<'g, E: FiniteField> BruhatSearch<'g, E> {
    pub fn new(group: &'g MatrixGroup<E>) -> Self {
        let d = group.datum();
        let weyl = WeylGroup::new(d);
        let simple: Vec<Matrix<E>> = d
            .simple_roots()
            .into_iter()
            .map(|i| {
                let a = group.root_element(i, E::one()).expect("root");
                let b = group.root_element(d.negative(i), -E::one()).expect("root");
                group.mul(&group.mul(&a, &b), &a)
            })
            .collect();
        let reps: Vec<Matrix<E>> =
            weyl.elements().iter().map(|w| w.word.iter().fold(group.identity(), |m, &i| group.mul(&m, &simple[i]))).collect();
        let reps_coadjoint = reps.iter().map(|n| group.coadjoint_matrix(&group.inverse(n))).collect();
        let unipotent_coadjoint = (0..d.num_positive())
            .map(|g| {
                (0..E::ORDER).map(|i| E::from_index(i)).map(|t| group.coadjoint_matrix(&group.root_element(g, -t).expect("root"))).collect()
            })
            .collect();
        BruhatSearch { group, weyl, reps, reps_coadjoint, unipotent_coadjoint }
    }

    /// n_w maps 𝔤_γ to 𝔤_{wγ}.
    pub fn weyl_representative(&self, w: usize) -> &Matrix<E> {
        &self.reps[w]
    }

    fn unipotent(&self, roots: &[usize], ts: &[usize]) -> Matrix<E> {
        roots
            .iter()
            .zip(ts)
            .fold(self.group.identity(), |m, (&g, &t)| self.group.mul(&m, &self.group.root_element(g, E::from_index(t)).expect("root")))
    }

    /// Depth-first walk over ∏ U_γ(E) for γ in `roots`, applying
    /// Ad*(u⁻¹) incrementally; `leaf` returns true to stop.
    fn walk(&self, roots: &[usize], x: &[E], ts: &mut Vec<usize>, leaf: &mut dyn FnMut(&[usize], &[E]) -> bool) -> bool {
        if ts.len() == roots.len() {
            return leaf(ts, x);
        }
        let g = roots[ts.len()];
        for t in 0..E::ORDER {
            let y = self.unipotent_coadjoint[g][t].apply(x);
            ts.push(t);
            let stop = self.walk(roots, &y, ts, leaf);
            ts.pop();
            if stop {
                return true;
            }
        }
        false
    }

    /// The first certificate found, with w = 1 relative to the conjugated
    /// frame.
    pub fn certificate(&self, x: &DualElement<E>) -> Option<JordanCertificate<E>> {
        let g = self.group;
        let d = g.datum();
        let npos = d.num_positive();
        let positive: Vec<usize> = (0..npos).collect();
        for (wi, w) in self.weyl.elements().iter().enumerate() {
            // positive roots γ with w⁻¹γ negative
            let inversions: Vec<usize> = (0..npos).filter(|&gm| w.perm.iter().position(|&k| k == gm).unwrap() >= npos).collect();
            let mut found: Option<(Vec<usize>, Vec<usize>)> = None;
            let mut outer = |us: &[usize], state: &[E]| {
                let z = DualElement { values: self.reps_coadjoint[wi].apply(state) };
                if (0..npos).any(|gm| !g.eval_root_vector(&z, gm).is_zero()) {
                    return false;
                }
                let forbidden: Vec<usize> = (0..npos).filter(|&gm| !g.eval_coroot(&z, gm).is_zero()).map(|gm| d.negative(gm)).collect();
                let inner = |_: &[usize], y: &[E]| {
                    let y = DualElement { values: y.to_vec() };
                    forbidden.iter().all(|&k| g.eval_root_vector(&y, k).is_zero())
                };
                let mut vs = Vec::new();
                let mut hit = None;
                let mut wrapped = |ts: &[usize], y: &[E]| {
                    let ok = inner(ts, y);
                    if ok {
                        hit = Some(ts.to_vec());
                    }
                    ok
                };
                self.walk(&positive, &z.values, &mut vs, &mut wrapped);
                if let Some(v) = hit {
                    found = Some((us.to_vec(), v));
                    true
                } else {
                    false
                }
            };
            self.walk(&inversions, &x.values, &mut Vec::new(), &mut outer);
            if let Some((us, vs)) = found {
                let h = g.mul(&self.unipotent(&inversions, &us), &self.reps[wi]);
                let conj = g.mul(&h, &self.unipotent(&positive, &vs));
                let y = g.act_dual(&g.inverse(&conj), x);
                let semisimple = g.act_dual(&conj, &g.dual_torus_part(&y));
                let nilpotent = x.sub(&semisimple);
                return Some(JordanCertificate {
                    conjugator_index: None,
                    conjugator: conj,
                    weyl_index: 0,
                    weyl_word: Vec::new(),
                    positive: g.standard_positive(),
                    semisimple,
                    nilpotent,
                });
            }
        }
        None
    }
}

/// Outcome for one element of 𝔤*(F_q) in a full sweep.
#[derive(Clone, Debug)]
pub enum SweepOutcome<F: FiniteField, E: FiniteField> {
    /// F_q-rational certificate from the point scan.
    Rational(JordanCertificate<F>, Audit),
    /// Certificate over the extension field E.
    Extension(JordanCertificate<E>, Audit),
    /// Neither search produced a certificate.
    Missing,
}

impl<F: FiniteField, E: FiniteField> SweepOutcome<F, E> {
    pub fn audited(&self) -> bool {
        match self {
            SweepOutcome::Rational(_, a) | SweepOutcome::Extension(_, a) => a.passed(),
            SweepOutcome::Missing => false,
        }
    }
}

/// Runs `jordan_dual` on every element of `xs`. Failures are retried over E
/// (which must contain F), once per G(F_q)-orbit; the certificate found for
/// the orbit's first element is transported along the orbit and re-audited.
pub fn sweep_with_retry<F: FiniteField, E: FiniteField>(
    sweep: &DualSweep<'_, F>,
    big: &MatrixGroup<E>,
    xs: &[DualElement<F>],
) -> Vec<SweepOutcome<F, E>> {
    let g = sweep.group();
    let table = field_embedding::<F, E>().expect("E contains F");
    let search = BruhatSearch::new(big);
    let gens = g.generators();
    let mut transported: HashMap<DualElement<F>, Option<JordanCertificate<E>>> = HashMap::new();
    xs.iter()
        .map(|x| {
            if let Ok(c) = sweep.jordan_dual(x) {
                let a = sweep.audit(x, &c);
                return SweepOutcome::Rational(c, a);
            }
            if !transported.contains_key(x) {
                let base = search.certificate(&embed_dual(&table, x));
                let mut queue = VecDeque::from([g.identity()]);
                transported.insert(x.clone(), base.clone());
                while let Some(h) = queue.pop_front() {
                    for s in &gens {
                        let h2 = g.mul(s, &h);
                        let z = g.act_dual(&h2, x);
                        if transported.contains_key(&z) {
                            continue;
                        }
                        let c = base.as_ref().map(|c| {
                            let he = embed_matrix(&table, &h2);
                            let semisimple = big.act_dual(&he, &c.semisimple);
                            let nilpotent = embed_dual(&table, &z).sub(&semisimple);
                            JordanCertificate { conjugator: big.mul(&he, &c.conjugator), semisimple, nilpotent, ..c.clone() }
                        });
                        transported.insert(z, c);
                        queue.push_back(h2);
                    }
                }
            }
            match &transported[x] {
                Some(c) => {
                    let a = audit_certificate(big, &embed_dual(&table, x), c);
                    SweepOutcome::Extension(c.clone(), a)
                }
                None => SweepOutcome::Missing,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupalg::GroupKind;
    use crate::{F16, F2, F4};
    use num_traits::Zero;

    #[test]
    fn embeddings_are_ring_maps() {
        let t = field_embedding::<F4, F16>().unwrap();
        for a in F4::elements() {
            for b in F4::elements() {
                assert_eq!(t[(a * b).index()], t[a.index()] * t[b.index()]);
                assert_eq!(t[(a + b).index()], t[a.index()] + t[b.index()]);
            }
        }
        assert_eq!(field_embedding::<F2, F16>().unwrap(), vec![F16::from_index(0), F16::from_index(1)]);
        assert!(field_embedding::<F16, F4>().is_none());
    }

    #[test]
    fn weyl_representatives_permute_root_spaces() {
        let g = MatrixGroup::<F16>::build(GroupKind::Sp(2)).unwrap();
        let s = BruhatSearch::new(&g);
        let d = g.datum();
        for (wi, w) in WeylGroup::new(d).elements().iter().enumerate() {
            let n = s.weyl_representative(wi);
            for k in 0..d.num_roots() {
                let moved = g.act_lie(n, g.root_vector(k));
                let c = g.lie_coords(&moved).unwrap();
                let target = g.root_basis_index(w.perm[k]);
                assert!(c.iter().enumerate().all(|(i, v)| (i == target) != v.is_zero()));
            }
        }
    }
}
