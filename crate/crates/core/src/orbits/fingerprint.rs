use crate::charp2bridge::{a_invariants, SoPattern};
use crate::error::{Error, Result};
use crate::exactalg::{FiniteField, Matrix};
use crate::groupalg::{GroupKind, MatrixGroup, Space};

#[derive(Clone, Debug)]
enum Model<F: FiniteField> {
    /// Characteristic polynomial of the matrix.
    Charpoly,
    /// Charpoly of the unique X ∈ 𝔤 with Tr(X ·) = x; the Gram matrix of
    /// the trace form on the Lie basis is invertible.
    TraceDual(Matrix<F>),
    /// a-invariants of the B′-dual of the restriction to 𝔰𝔬_{2n}.
    Bridge(SoPattern<F>),
}

/// Orbit invariants on one space of one group.
#[derive(Clone, Debug)]
pub struct Fingerprinter<F: FiniteField> {
    model: Model<F>,
}

impl<F: FiniteField> Fingerprinter<F> {
    pub fn new(g: &MatrixGroup<F>, space: Space) -> Result<Self> {
        let unsupported = || Error::Unsupported(format!("no invariant model for {} on {space} over F_{}", g.name(), F::ORDER));
        if g.is_pgl() {
            return Err(unsupported());
        }
        let model = match space {
            Space::Lie => Model::Charpoly,
            Space::Dual => {
                let b = g.lie_basis();
                let gram = Matrix::from_fn(b.len(), b.len(), |i, j| (&b[i] * &b[j]).trace());
                if let Some(inv) = gram.inverse() {
                    Model::TraceDual(inv)
                } else if F::CHAR == 2 && matches!(g.kind(), GroupKind::Sp(_)) {
                    Model::Bridge(SoPattern::new(g)?)
                } else {
                    return Err(unsupported());
                }
            }
        };
        Ok(Fingerprinter { model })
    }

    pub fn describe(&self) -> &'static str {
        match self.model {
            Model::Charpoly => "charpoly",
            Model::TraceDual(_) => "charpoly of trace dual",
            Model::Bridge(_) => "a-invariants via so(2n)",
        }
    }

    pub fn fingerprint(&self, g: &MatrixGroup<F>, coords: &[F]) -> Vec<F> {
        let charpoly = |m: &Matrix<F>| m.charpoly().coeffs().to_vec();
        match &self.model {
            Model::Charpoly => charpoly(&g.lie_from_coords(coords)),
            Model::TraceDual(inv) => charpoly(&g.lie_from_coords(&inv.apply(coords))),
            Model::Bridge(p) => {
                let y: Vec<F> = p.indices.iter().map(|&i| coords[i]).collect();
                let c = p.dualize(&y).expect("B′ is nondegenerate");
                a_invariants(&g.lie_from_coords(&p.sp_coords(&c, g.lie_dim()))).expect("charpoly on 𝔰𝔬_{2n} is a square")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F2, F3};

    #[test]
    fn models() {
        let sp2 = MatrixGroup::<F2>::build(GroupKind::Sp(2)).unwrap();
        assert_eq!(Fingerprinter::new(&sp2, Space::Dual).unwrap().describe(), "a-invariants via so(2n)");
        let sp3 = MatrixGroup::<F3>::build(GroupKind::Sp(2)).unwrap();
        assert_eq!(Fingerprinter::new(&sp3, Space::Dual).unwrap().describe(), "charpoly of trace dual");
        let pgl = MatrixGroup::<F2>::build(GroupKind::PGL(2)).unwrap();
        assert!(Fingerprinter::new(&pgl, Space::Lie).is_err());
        let so5 = MatrixGroup::<F2>::build(GroupKind::SO(5)).unwrap();
        assert!(Fingerprinter::new(&so5, Space::Dual).is_err());
    }
}
