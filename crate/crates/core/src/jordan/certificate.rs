use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{FiniteField, Matrix, Subspace};
use crate::groupalg::{DualElement, MatrixGroup, PointSet};
use crate::rootdata::{RootSet, WeylGroup};

/// A Jordan decomposition x = x_s + x_n in 𝔤*, certified by a torus
/// T' = gTg⁻¹ and a Borel B' = g(wBw⁻¹)g⁻¹ containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanCertificate<F: FiniteField> {
    /// Index of g in the point enumeration, when g came from it.
    pub conjugator_index: Option<usize>,
    pub conjugator: Matrix<F>,
    /// Index of w in the Weyl group's length-lex order.
    pub weyl_index: usize,
    pub weyl_word: Vec<usize>,
    /// The positive system wΦ⁺.
    pub positive: RootSet,
    pub semisimple: DualElement<F>,
    pub nilpotent: DualElement<F>,
}

/// Outcome of re-checking a certificate directly on matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Audit {
    pub sums_to_x: bool,
    pub semisimple_is_torus_fixed: bool,
    pub agrees_on_borel: bool,
    pub vanishes_on_complement: bool,
}

impl Audit {
    pub fn passed(&self) -> bool {
        self.sums_to_x && self.semisimple_is_torus_fixed && self.agrees_on_borel && self.vanishes_on_complement
    }
}

/// A semisimple functional together with a conjugator moving it into 𝔱*.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsPart<F: FiniteField> {
    pub element: DualElement<F>,
    pub conjugator_index: usize,
    pub conjugator: Matrix<F>,
    /// Ad*(g⁻¹)x, which lies in (𝔤*)^T.
    pub standard: DualElement<F>,
}

/// Point enumeration and per-point coadjoint matrices for exhaustive
/// searches over one group.
#[derive(Clone, Debug)]
pub struct DualSweep<'g, F: FiniteField> {
    group: &'g MatrixGroup<F>,
    points: PointSet<F>,
    /// Ad*(g⁻¹) for each point g.
    to_standard: Vec<Matrix<F>>,
    weyl: WeylGroup,
    systems: Vec<RootSet>,
    coroots: Vec<Vec<F>>,
    borels: Vec<Subspace<F>>,
}

fn bits(mask: RootSet) -> impl Iterator<Item = usize> {
    (0..128).filter(move |i| mask >> i & 1 == 1)
}

impl<'g, F: FiniteField> DualSweep<'g, F> {
    pub fn new(group: &'g MatrixGroup<F>, max_points: usize) -> Result<Self> {
        let points = group.enumerate_points(max_points)?;
        let to_standard = points.iter().map(|g| group.ad_matrix(&g).transpose()).collect();
        let weyl = WeylGroup::new(group.datum());
        let systems = weyl.positive_systems(group.datum());
        let d = group.datum();
        let coroots = (0..d.num_roots()).map(|g| d.coroot(g).iter().map(|&c| F::from_i64(c)).collect()).collect();
        let borels = group.borel_conjugates(&group.borel(group.standard_positive()));
        Ok(DualSweep { group, points, to_standard, weyl, systems, coroots, borels })
    }

    pub fn group(&self) -> &MatrixGroup<F> {
        self.group
    }
    pub fn points(&self) -> &PointSet<F> {
        &self.points
    }
    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }
    pub fn borels(&self) -> &[Subspace<F>] {
        &self.borels
    }

    /// Ad*(g⁻¹)x for the point with index i.
    pub fn standardize(&self, i: usize, x: &DualElement<F>) -> DualElement<F> {
        DualElement { values: self.to_standard[i].apply(&x.values) }
    }

    fn support_mask(&self, y: &DualElement<F>) -> RootSet {
        let r = self.group.rank();
        (0..self.group.datum().num_roots()).fold(0, |m, g| if y.values[r + g].is_zero() { m } else { m | 1 << g })
    }

    /// Roots γ with y(h_γ) = 0, for y given by its torus values.
    pub fn vanishing_coroots(&self, y: &DualElement<F>) -> RootSet {
        let r = self.group.rank();
        self.coroots.iter().enumerate().fold(0, |m, (g, c)| {
            let v = (0..r).fold(F::zero(), |s, k| s + c[k] * y.values[k]);
            if v.is_zero() {
                m | 1 << g
            } else {
                m
            }
        })
    }

    /// Certificate with the point index `i` as torus conjugator, if any.
    fn certificate_at(&self, i: usize, x: &DualElement<F>) -> Option<JordanCertificate<F>> {
        let y = self.standardize(i, x);
        let support = self.support_mask(&y);
        let centralizer_roots = self.vanishing_coroots(&y);
        if support & !centralizer_roots != 0 {
            return None;
        }
        let w = self.systems.iter().position(|&s| s & support == 0)?;
        let g = self.points.get(i);
        let semisimple = self.group.act_dual(&g, &self.group.dual_torus_part(&y));
        let nilpotent = x.sub(&semisimple);
        Some(JordanCertificate {
            conjugator_index: Some(i),
            conjugator: g,
            weyl_index: w,
            weyl_word: self.weyl.elements()[w].word.clone(),
            positive: self.systems[w],
            semisimple,
            nilpotent,
        })
    }

    /// The first certificate in scan order (points, then Weyl words).
    pub fn jordan_dual(&self, x: &DualElement<F>) -> Result<JordanCertificate<F>> {
        (0..self.points.len()).find_map(|i| self.certificate_at(i, x)).ok_or_else(|| {
            Error::NoCertificate(format!("no F_{}-rational certificate for {:?} in {}", F::ORDER, x.values, self.group.name()))
        })
    }

    /// Every certificate, one per torus conjugator (with its first Weyl word).
    pub fn all_certificates(&self, x: &DualElement<F>) -> Vec<JordanCertificate<F>> {
        (0..self.points.len()).filter_map(|i| self.certificate_at(i, x)).collect()
    }

    /// All semisimple parts over all certificates.
    pub fn all_semisimple_parts(&self, x: &DualElement<F>) -> BTreeSet<DualElement<F>> {
        if x.is_zero() {
            return BTreeSet::from([x.clone()]);
        }
        self.all_certificates(x).into_iter().map(|c| c.semisimple).collect()
    }

    /// Some g with Ad*(g⁻¹)x ∈ (𝔤*)^T.
    pub fn is_semisimple_dual(&self, x: &DualElement<F>) -> Option<SsPart<F>> {
        (0..self.points.len()).find_map(|i| {
            let y = self.standardize(i, x);
            (self.support_mask(&y) == 0).then(|| SsPart {
                element: x.clone(),
                conjugator_index: i,
                conjugator: self.points.get(i),
                standard: y,
            })
        })
    }

    /// KW nilpotence: index of a Borel conjugate on which x vanishes.
    pub fn kw_nilpotent(&self, x: &DualElement<F>) -> Option<usize> {
        self.borels.iter().position(|b| b.basis().iter().all(|v| x.eval(v).is_zero()))
    }

    /// Audit a certificate by direct evaluation of trace pairings on matrices.
    pub fn audit(&self, x: &DualElement<F>, c: &JordanCertificate<F>) -> Audit {
        audit_certificate(self.group, x, c)
    }
}

/// CM nilpotence: x vanishes on C_𝔤(x).
pub fn cm_nilpotent<F: FiniteField>(g: &MatrixGroup<F>, x: &DualElement<F>) -> bool {
    g.centralizer_lie_dual(x).basis().iter().all(|v| x.eval(v).is_zero())
}

/// Re-checks the three defining conditions on matrices, without using the
/// coordinate machinery that produced the certificate.
pub fn audit_certificate<F: FiniteField>(g: &MatrixGroup<F>, x: &DualElement<F>, c: &JordanCertificate<F>) -> Audit {
    let conj = &c.conjugator;
    let conj_inv = conj.inverse().expect("invertible conjugator");
    let moved = |m: &Matrix<F>| &(conj * m) * &conj_inv;
    let pair = |r: &Matrix<F>, m: &Matrix<F>| (r * m).trace();
    let rx = g.representative(x);
    let rs = g.representative(&c.semisimple);
    let rn = g.representative(&c.nilpotent);
    let d = g.datum();
    let r = g.rank();

    let sums_to_x = (0..g.lie_dim()).all(|i| {
        let b = &g.lie_basis()[i];
        pair(&rx, b) == pair(&rs, b) + pair(&rn, b)
    });
    let roots: Vec<Matrix<F>> = (0..d.num_roots()).map(|k| moved(g.root_vector(k))).collect();
    let semisimple_is_torus_fixed = roots.iter().all(|e| pair(&rs, e).is_zero());
    let diff = &rx - &rs;
    let agrees_on_borel =
        g.torus_basis().iter().all(|h| pair(&diff, &moved(h)).is_zero()) && bits(c.positive).all(|k| pair(&diff, &roots[k]).is_zero());
    let vanishes_on_complement = (0..d.num_roots()).all(|k| {
        let mut h = Matrix::zeros(g.size(), g.size());
        for (j, &cj) in d.coroot(k).iter().enumerate().take(r) {
            h = &h + &g.torus_basis()[j].scale(F::from_i64(cj));
        }
        pair(&rs, &moved(&h)).is_zero() || pair(&rx, &roots[k]).is_zero()
    });
    Audit { sums_to_x, semisimple_is_torus_fixed, agrees_on_borel, vanishes_on_complement }
}

/// Enumerates 𝔤*(F_q) in index order.
pub fn all_dual_elements<F: FiniteField>(g: &MatrixGroup<F>, max: usize) -> Result<Vec<DualElement<F>>> {
    let d = g.lie_dim();
    let total = (F::ORDER as u128).checked_pow(d as u32).filter(|&t| t <= max as u128);
    let Some(total) = total else {
        return Err(Error::BoundExceeded { what: format!("|𝔤*| for {}", g.name()), bound: max });
    };
    Ok((0..total as usize)
        .map(|mut k| DualElement {
            values: (0..d)
                .map(|_| {
                    let e = F::from_index(k % F::ORDER);
                    k /= F::ORDER;
                    e
                })
                .collect(),
        })
        .collect())
}
