use crate::exactalg::FiniteField;
use crate::rootdata::RootDatum;

/// The [p]-map on 𝔱 = X_*(T) ⊗ k in lattice coordinates: Frobenius on each
/// coordinate, since dλ(1)^[p] = dλ(1) for every cocharacter λ.
pub fn pth_power_t<F: FiniteField>(h: &[F]) -> Vec<F> {
    h.iter().map(|c| c.frobenius()).collect()
}

/// (y^[p])(h) = (y(h^{-[p]}))^p on 𝔱*, in coordinates dual to the lattice
/// basis. On those coordinates this is again coordinate-wise Frobenius.
pub fn pth_power_tstar<F: FiniteField>(y: &[F]) -> Vec<F> {
    y.iter().map(|c| c.frobenius()).collect()
}

/// h_γ as a vector over F in lattice coordinates.
pub fn coroot_vector<F: FiniteField>(d: &RootDatum, g: usize) -> Vec<F> {
    d.coroot(g).iter().map(|&c| F::from_i64(c)).collect()
}

/// {γ : y(h_γ) = 0}.
pub fn coroot_vanishing<F: FiniteField>(d: &RootDatum, y: &[F]) -> Vec<usize> {
    (0..d.num_roots()).filter(|&g| coroot_vector::<F>(d, g).iter().zip(y).fold(F::zero(), |s, (&a, &b)| s + a * b).is_zero()).collect()
}

/// Checks h_γ^[p] = h_γ for every root, over the prime field F.
pub fn coroots_fixed_by_pth_power<F: FiniteField>(d: &RootDatum) -> bool {
    (0..d.num_roots()).all(|g| {
        let h = coroot_vector::<F>(d, g);
        pth_power_t(&h) == h
    })
}
