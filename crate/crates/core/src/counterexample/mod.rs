//! Non-unique Jordan decompositions in 𝔤* from a pair of roots α, β with
//! α + β ∈ Φ and h_{α+β} outside the span of h_α and h_β.
//!
//! X*_s is the torus functional with X*_s(h_α) = X*_s(h_β) = 0 and
//! X*_s(h_{α+β}) = 1, X*_n is the functional dual to e_{−β}, and
//! X* = X*_s + X*_n. Then U_α fixes X*_s, U_{α+β} fixes X*_n, and
//! u_α u_{α+β} fixes X* while moving X*_s.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{FiniteField, Matrix};
use crate::groupalg::{pack, DualElement, GroupKind, MatrixGroup, DEFAULT_MAX_POINTS};
use crate::jordan::{audit_certificate, Audit, JordanCertificate};
use crate::rootdata::{counterexample_pairs, rank2_subsystem, rank_mod_p, Family, Isogeny, Rank2Type, RootDatum};

/// The classical matrix group whose root datum is `d`, if there is one.
pub fn matrix_model(d: &RootDatum) -> Option<GroupKind> {
    let n = d.rank();
    let kind = match (d.family(), d.isogeny()) {
        (Family::A, Isogeny::Adjoint) => GroupKind::PGL(n + 1),
        (Family::A, _) => GroupKind::SL(n + 1),
        (Family::B, Isogeny::Matrix) => GroupKind::SO(2 * n + 1),
        (Family::C, Isogeny::Matrix) => GroupKind::Sp(n),
        (Family::D, Isogeny::Matrix) => GroupKind::SO(2 * n),
        _ => return None,
    };
    Some(kind)
}

/// The root-datum half of the construction: the qualifying pair and the
/// mod-p rank computation behind it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeCertificate {
    pub datum: String,
    pub p: u32,
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    pub sum: Vec<i64>,
    pub coroot_alpha: Vec<i64>,
    pub coroot_beta: Vec<i64>,
    pub coroot_sum: Vec<i64>,
    /// Rank of {h_α, h_β} over F_p.
    pub rank_pair: usize,
    /// Rank of {h_α, h_β, h_{α+β}} over F_p; one more than `rank_pair`.
    pub rank_with_sum: usize,
    /// Type of Φ ∩ (ℤα + ℤβ).
    pub subsystem: Rank2Type,
    /// −2α − β is not a root.
    pub minus_two_alpha_minus_beta_not_root: bool,
}

pub fn lattice_certificate(d: &RootDatum, p: u32, alpha: usize, beta: usize) -> Result<LatticeCertificate> {
    if !counterexample_pairs(d, p).contains(&(alpha, beta)) {
        return Err(Error::InvalidInput(format!("({alpha}, {beta}) does not qualify in {} at p = {p}", d.label())));
    }
    let sum = d.sum_index(alpha, beta).expect("qualifying pairs sum to a root");
    let pair = [d.coroot(alpha).to_vec(), d.coroot(beta).to_vec()];
    let mut with_sum = pair.to_vec();
    with_sum.push(d.coroot(sum).to_vec());
    let twice: Vec<i64> = d.root(alpha).iter().zip(d.root(beta)).map(|(a, b)| -2 * a - b).collect();
    Ok(LatticeCertificate {
        datum: d.label(),
        p,
        alpha: d.root(alpha).to_vec(),
        beta: d.root(beta).to_vec(),
        sum: d.root(sum).to_vec(),
        coroot_alpha: d.coroot(alpha).to_vec(),
        coroot_beta: d.coroot(beta).to_vec(),
        coroot_sum: d.coroot(sum).to_vec(),
        rank_pair: rank_mod_p(&pair, p),
        rank_with_sum: rank_mod_p(&with_sum, p),
        subsystem: rank2_subsystem(d, alpha, beta)?.kind,
        minus_two_alpha_minus_beta_not_root: d.index_of(&twice).is_none(),
    })
}

/// One point of U_{α+β} → U_α: f(u_{α+β}(t)) = u_α(s).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FEntry<F> {
    pub t: F,
    pub s: F,
}

#[derive(Clone, Debug)]
pub struct CounterexampleBundle<F: FiniteField> {
    pub group: MatrixGroup<F>,
    pub alpha: usize,
    pub beta: usize,
    pub sum: usize,
    pub x_s: DualElement<F>,
    pub x_n: DualElement<F>,
    pub x: DualElement<F>,
    /// u_α(1).
    pub u_alpha: Matrix<F>,
    /// u_{α+β}(1).
    pub u_sum: Matrix<F>,
    /// The map U_{α+β} → U_α, one entry per t ∈ F_q.
    pub f: Vec<FEntry<F>>,
}

/// Either a bundle, or only the lattice data when the datum has no matrix
/// model here.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug)]
pub enum Construction<F: FiniteField> {
    Matrix(Box<CounterexampleBundle<F>>),
    LatticeOnly { certificate: LatticeCertificate, reason: Error },
}

/// Builds the bundle over the matrix model of `d`, or returns the lattice
/// certificate with a `NoMatrixModel` reason.
pub fn construct<F: FiniteField>(d: &RootDatum, alpha: usize, beta: usize) -> Result<Construction<F>> {
    let certificate = lattice_certificate(d, F::CHAR, alpha, beta)?;
    match matrix_model(d) {
        Some(kind) => {
            let g = MatrixGroup::<F>::build(kind)?;
            if g.datum().label() != d.label() || g.datum().roots() != d.roots() {
                return Err(Error::NoMatrixModel(format!("{kind:?} does not realize {}", d.label())));
            }
            Ok(Construction::Matrix(Box::new(build_counterexample(g, alpha, beta)?)))
        }
        None => Ok(Construction::LatticeOnly {
            reason: Error::NoMatrixModel(format!("{} has no matrix model; lattice certificate only", d.label())),
            certificate,
        }),
    }
}

pub fn build_counterexample<F: FiniteField>(g: MatrixGroup<F>, alpha: usize, beta: usize) -> Result<CounterexampleBundle<F>> {
    let d = g.datum();
    let cert = lattice_certificate(d, F::CHAR, alpha, beta)?;
    if !cert.minus_two_alpha_minus_beta_not_root {
        return Err(Error::InvalidInput("−2α − β is a root".into()));
    }
    let sum = d.sum_index(alpha, beta).expect("qualifying pairs sum to a root");
    let r = g.rank();
    let coroot = |k: usize| d.coroot(k).iter().map(|&c| F::from_i64(c)).collect::<Vec<F>>();
    let system = Matrix::from_rows(vec![coroot(alpha), coroot(beta), coroot(sum)]);
    let torus = system
        .solve(&[F::zero(), F::zero(), F::one()])
        .ok_or_else(|| Error::InvalidInput("h_{α+β} lies in the span of h_α, h_β".into()))?;
    let mut values = vec![F::zero(); g.lie_dim()];
    values[..r].copy_from_slice(&torus);
    let x_s = DualElement { values };
    let mut x_n = DualElement::zero(g.lie_dim());
    x_n.values[g.root_basis_index(d.negative(beta))] = F::one();
    let x = x_s.add(&x_n);

    let mut f = Vec::with_capacity(F::ORDER);
    for t in F::elements() {
        let ut = g.root_element(sum, t)?;
        let target = g.act_dual(&ut, &x_s).sub(&x_s);
        let s = F::elements().into_iter().find(|&s| {
            let us = g.root_element(alpha, s).expect("root");
            x_n.sub(&g.act_dual(&us, &x_n)) == target
        });
        let s = s.ok_or_else(|| Error::InvalidInput(format!("no u_α matches u_{{α+β}}({t:?})")))?;
        f.push(FEntry { t, s });
    }
    let u_alpha = g.root_element(alpha, F::one())?;
    let u_sum = g.root_element(sum, F::one())?;
    Ok(CounterexampleBundle { group: g, alpha, beta, sum, x_s, x_n, x, u_alpha, u_sum, f })
}

impl<F: FiniteField> CounterexampleBundle<F> {
    /// The same data with X*_n = 0, so X* = X*_s.
    pub fn with_zero_nilpotent(&self) -> Self {
        let x_n = DualElement::zero(self.group.lie_dim());
        CounterexampleBundle { x: self.x_s.clone(), x_n, ..self.clone() }
    }

    /// X*_n = 0 and both unipotents replaced by the identity.
    pub fn trivial(&self) -> Self {
        let id = self.group.identity();
        CounterexampleBundle { u_alpha: id.clone(), u_sum: id, ..self.with_zero_nilpotent() }
    }

    /// f(u_{α+β}(t)).
    pub fn f_image(&self, t: F) -> Option<F> {
        self.f.iter().find(|e| e.t == t).map(|e| e.s)
    }

    /// (X*_s, X*_n) with the standard torus and Borel.
    pub fn first_certificate(&self) -> JordanCertificate<F> {
        self.transported(self.group.identity())
    }

    /// The first decomposition moved by u_α u_{α+β}, which fixes X*.
    pub fn second_certificate(&self) -> JordanCertificate<F> {
        self.transported(self.group.mul(&self.u_alpha, &self.u_sum))
    }

    fn transported(&self, conjugator: Matrix<F>) -> JordanCertificate<F> {
        let semisimple = self.group.act_dual(&conjugator, &self.x_s);
        JordanCertificate {
            conjugator_index: None,
            conjugator,
            weyl_index: 0,
            weyl_word: Vec::new(),
            positive: self.group.standard_positive(),
            nilpotent: self.x.sub(&semisimple),
            semisimple,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub u_alpha_fixes_semisimple: bool,
    pub u_sum_fixes_nilpotent: bool,
    pub u_sum_moves_semisimple: bool,
    pub u_alpha_moves_nilpotent: bool,
    pub product_fixes_x: bool,
    pub both_decompositions_audited: bool,
    pub unipotents_commute_with_order_p: bool,
    /// X* has two different semisimple parts, each with an audited
    /// certificate.
    pub distinct_semisimple_parts: bool,
    pub first_audit: Audit,
    pub second_audit: Audit,
}

impl Verdicts {
    /// The seven identities, in order.
    pub fn identities(&self) -> [(&'static str, bool); 7] {
        [
            ("u_alpha fixes X_s", self.u_alpha_fixes_semisimple),
            ("u_alpha_plus_beta fixes X_n", self.u_sum_fixes_nilpotent),
            ("u_alpha_plus_beta moves X_s", self.u_sum_moves_semisimple),
            ("u_alpha moves X_n", self.u_alpha_moves_nilpotent),
            ("u_alpha u_alpha_plus_beta fixes X", self.product_fixes_x),
            ("both decompositions pass the audit", self.both_decompositions_audited),
            ("u_alpha, u_alpha_plus_beta commute and have order p", self.unipotents_commute_with_order_p),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.identities().iter().all(|&(_, v)| v) && self.distinct_semisimple_parts
    }
}

pub fn verify_counterexample<F: FiniteField>(b: &CounterexampleBundle<F>) -> Verdicts {
    let g = &b.group;
    let (ua, us) = (&b.u_alpha, &b.u_sum);
    let product = g.mul(ua, us);
    let p = F::CHAR as u64;
    let first = b.first_certificate();
    let second = b.second_certificate();
    let first_audit = audit_certificate(g, &b.x, &first);
    let second_audit = audit_certificate(g, &b.x, &second);
    let audited = first_audit.passed() && second_audit.passed();
    Verdicts {
        u_alpha_fixes_semisimple: g.act_dual(ua, &b.x_s) == b.x_s,
        u_sum_fixes_nilpotent: g.act_dual(us, &b.x_n) == b.x_n,
        u_sum_moves_semisimple: g.act_dual(us, &b.x_s) != b.x_s,
        u_alpha_moves_nilpotent: g.act_dual(ua, &b.x_n) != b.x_n,
        product_fixes_x: g.act_dual(&product, &b.x) == b.x,
        both_decompositions_audited: audited,
        unipotents_commute_with_order_p: product == g.mul(us, ua) && ua.pow(p).is_identity() && us.pow(p).is_identity(),
        distinct_semisimple_parts: audited && first.semisimple != second.semisimple,
        first_audit,
        second_audit,
    }
}

/// Whether some vector in the span of `basis` (Lie matrices) has a nonzero
/// 𝔤_γ-component.
pub fn projects_onto_root<F: FiniteField>(g: &MatrixGroup<F>, basis: &[Matrix<F>], gamma: usize) -> bool {
    let i = g.root_basis_index(gamma);
    basis.iter().any(|m| g.lie_coords(m).is_some_and(|c| !c[i].is_zero()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoGoReport {
    /// u_{α+β} C u_{α+β}⁻¹ ≠ u_α⁻¹ C u_α as sets of F_q-points, with
    /// C = C_G(X*_s)(F_q).
    pub conjugates_differ: bool,
    pub centralizer_size: usize,
    /// Lie(u_{α+β} T u_{α+β}⁻¹) has a nonzero projection onto 𝔤_{α+β}.
    /// False whenever d(α+β) = 0 on 𝔱, e.g. for a long root at p = 2,
    /// since then Ad(u_{α+β}) fixes 𝔱.
    pub projection_nonzero: bool,
    /// Some t ∈ T(F_q) has u_{α+β} t u_{α+β}⁻¹ ∉ C_G(X*_s). Needs
    /// (α+β)(t) ≠ 1, so never holds over F_2.
    pub torus_conjugate_leaves_centralizer: bool,
}

impl NoGoReport {
    /// The obstruction itself: the two conjugates of C_G(X*_s) differ.
    pub fn holds(&self) -> bool {
        self.conjugates_differ
    }
}

/// The obstruction to a functorial p-th power on semisimple elements of 𝔤*.
pub fn no_go_restricted_dual<F: FiniteField>(b: &CounterexampleBundle<F>) -> Result<NoGoReport> {
    let g = &b.group;
    let points = g.enumerate_points(DEFAULT_MAX_POINTS)?;
    let c = g.centralizer_points_dual(&points, &b.x_s);
    let conjugate_set = |l: &Matrix<F>, r: &Matrix<F>| -> BTreeSet<u128> {
        c.iter().map(|&i| pack(&g.mul(&g.mul(l, &points.get(i)), r)).expect("packable")).collect()
    };
    let left = conjugate_set(&b.u_sum, &g.inverse(&b.u_sum));
    let right = conjugate_set(&g.inverse(&b.u_alpha), &b.u_alpha);
    Ok(NoGoReport {
        conjugates_differ: left != right,
        centralizer_size: c.len(),
        projection_nonzero: torus_conjugate_projects(g, &b.u_sum, b.sum),
        torus_conjugate_leaves_centralizer: torus_conjugate_leaves(g, &b.u_sum, &b.x_s),
    })
}

/// Whether Ad(u)𝔱 has a nonzero 𝔤_γ-component.
pub fn torus_conjugate_projects<F: FiniteField>(g: &MatrixGroup<F>, u: &Matrix<F>, gamma: usize) -> bool {
    let moved: Vec<Matrix<F>> = g.torus_basis().iter().map(|h| g.act_lie(u, h)).collect();
    projects_onto_root(g, &moved, gamma)
}

/// Whether u t u⁻¹ moves x for some t in T(F_q); T(F_q) is generated by
/// the λ(a) for basis cocharacters λ and a primitive element a.
pub fn torus_conjugate_leaves<F: FiniteField>(g: &MatrixGroup<F>, u: &Matrix<F>, x: &DualElement<F>) -> bool {
    let u_inv = g.inverse(u);
    (0..g.rank()).any(|k| {
        let mut lambda = vec![0; g.rank()];
        lambda[k] = 1;
        let t = g.torus_element(&lambda, F::primitive_element());
        g.act_dual(&g.mul(&g.mul(u, &t), &u_inv), x) != *x
    })
}

#[cfg(test)]
mod tests {
    use num_traits::{One, Zero};

    use super::*;
    use crate::{F2, F3, F4};

    fn sp4_bundle() -> CounterexampleBundle<F2> {
        let g = MatrixGroup::<F2>::build(GroupKind::Sp(2)).unwrap();
        let d = g.datum().clone();
        let alpha = d.index_of(&[1, -1]).unwrap();
        let beta = d.index_of(&[1, 1]).unwrap();
        build_counterexample(g, alpha, beta).unwrap()
    }

    #[test]
    fn invariants_of_the_sp4_bundle() {
        let b = sp4_bundle();
        let g = &b.group;
        assert!(g.eval_coroot(&b.x_s, b.alpha).is_zero());
        assert!(g.eval_coroot(&b.x_s, b.beta).is_zero());
        assert!(g.eval_coroot(&b.x_s, b.sum).is_one());
        assert_eq!(g.dual_support(&b.x_n), vec![g.datum().negative(b.beta)]);
        assert_eq!(b.f_image(F2::one()), Some(F2::one()));
        assert_eq!(b.f_image(F2::zero()), Some(F2::zero()));
    }

    #[test]
    fn verdicts() {
        let b = sp4_bundle();
        let v = verify_counterexample(&b);
        assert!(v.all_hold(), "{v:?}");

        let z = verify_counterexample(&b.with_zero_nilpotent());
        assert!(z.u_sum_moves_semisimple);
        assert!(!z.distinct_semisimple_parts);
    }

    #[test]
    fn no_go() {
        let b = sp4_bundle();
        let r = no_go_restricted_dual(&b).unwrap();
        assert!(r.holds());
        assert_eq!(r.centralizer_size, 72);
        // α + β is long, so d(α+β) vanishes at p = 2
        assert!(!r.projection_nonzero);
        assert!(!r.torus_conjugate_leaves_centralizer);
        assert!(!no_go_restricted_dual(&b.trivial()).unwrap().holds());
        let g = &b.group;
        assert!(!projects_onto_root(g, g.torus_basis(), b.sum));
    }

    #[test]
    fn torus_conjugate_over_f4() {
        let g = MatrixGroup::<F4>::build(GroupKind::Sp(2)).unwrap();
        let d = g.datum().clone();
        let (a, b) = (d.index_of(&[1, -1]).unwrap(), d.index_of(&[1, 1]).unwrap());
        let b = build_counterexample(g, a, b).unwrap();
        assert!(verify_counterexample(&b).all_hold());
        assert!(torus_conjugate_leaves(&b.group, &b.u_sum, &b.x_s));
        assert!(!torus_conjugate_leaves(&b.group, &b.u_alpha, &b.x_s));
    }

    #[test]
    fn odd_characteristic_is_rejected() {
        let g = MatrixGroup::<F3>::build(GroupKind::Sp(2)).unwrap();
        let d = g.datum().clone();
        let (a, b) = (d.index_of(&[1, -1]).unwrap(), d.index_of(&[1, 1]).unwrap());
        assert!(matches!(build_counterexample(g, a, b), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn g2_is_lattice_only() {
        let d = RootDatum::build(Family::G, 2, Isogeny::SimplyConnected).unwrap();
        let (a, b) = counterexample_pairs(&d, 3)[0];
        match construct::<F3>(&d, a, b).unwrap() {
            Construction::LatticeOnly { certificate, reason } => {
                assert_eq!(certificate.subsystem, Rank2Type::G2);
                assert_eq!(certificate.rank_with_sum, certificate.rank_pair + 1);
                assert!(matches!(reason, Error::NoMatrixModel(_)));
            }
            Construction::Matrix(_) => panic!("G₂ has no matrix model"),
        }
    }
}
