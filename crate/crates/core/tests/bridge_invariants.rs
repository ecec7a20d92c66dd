use liejordan::charp2bridge::{a_invariants, semisimple_closure_oracle, semisimple_closure_subspace, IsogenyBridge};
use liejordan::exactalg::FiniteField;
use liejordan::groupalg::{GroupKind, MatrixGroup, Space, DEFAULT_MAX_POINTS};
use liejordan::{Matrix, Ring, F2, F3, F4};
use num_traits::{One, Zero};
use rand::{rngs::StdRng, Rng, SeedableRng};

fn bridge() -> IsogenyBridge<F2> {
    IsogenyBridge::build(2).unwrap()
}

fn coords(k: usize, n: usize) -> Vec<F2> {
    (0..n).map(|i| F2::from_index(k >> i & 1)).collect()
}

/// Every element of 𝔰𝔬₄(F₂) as a 4×4 matrix, with its pattern coordinates.
fn so4_elements(b: &IsogenyBridge<F2>) -> Vec<(Vec<F2>, Matrix<F2>)> {
    (0..64)
        .map(|k| {
            let c = coords(k, 6);
            let m = b.sp().lie_from_coords(&b.pattern().sp_coords(&c, 10));
            (c, m)
        })
        .collect()
}

fn square(a: &[F2]) -> Vec<F2> {
    let mut out = vec![F2::zero(); 2 * a.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in a.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[test]
fn so4_charpolys_are_squares() {
    let b = bridge();
    for (c, x) in so4_elements(&b) {
        assert!(b.in_so_even(&x));
        let a = a_invariants(&x).unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(square(&a), x.charpoly().coeffs().to_vec(), "{c:?}");
    }
}

#[test]
fn every_sp4_charpoly_is_a_square() {
    // oracle: over F₂ a polynomial is a square iff its odd coefficients vanish;
    // integral symplectic matrices have even charpolys, so nothing escapes
    let b = bridge();
    let (mut outside, mut non_square) = (0, 0);
    for k in 0..1usize << 10 {
        let x = b.sp().lie_from_coords(&coords(k, 10));
        let cp = x.charpoly();
        let is_square = cp.coeffs().iter().skip(1).step_by(2).all(|c| c.is_zero());
        assert_eq!(a_invariants(&x).is_ok(), is_square);
        if !b.in_so_even(&x) {
            outside += 1;
            non_square += usize::from(!is_square);
        } else {
            assert!(is_square);
        }
    }
    assert_eq!(outside, 960);
    assert_eq!(non_square, 0);
}

#[test]
fn a_invariants_are_sp4_invariant() {
    let b = bridge();
    let points = b.sp().enumerate_points(DEFAULT_MAX_POINTS).unwrap();
    assert_eq!(points.len(), 720);
    let els = so4_elements(&b);
    for g in points.iter() {
        for (c, x) in &els {
            let y = b.sp().act_lie(&g, x);
            assert!(b.in_so_even(&y));
            assert_eq!(a_invariants(&y).unwrap(), a_invariants(x).unwrap(), "{c:?}");
        }
    }
}

#[test]
fn a_invariants_restricted_to_the_torus() {
    fn check<F: FiniteField>() {
        let b = IsogenyBridge::<F>::build(2).unwrap();
        for c1 in F::elements() {
            for c2 in F::elements() {
                let mut c = vec![F::zero(); 6];
                c[0] = c1;
                c[1] = c2;
                let x = b.sp().lie_from_coords(&b.pattern().sp_coords(&c, 10));
                // oracle: the diagonal of X is (c₁, c₂, c₂, c₁) in characteristic 2
                let diag: Vec<F> = (0..4).map(|i| x[(i, i)]).collect();
                assert_eq!(diag, vec![c1, c2, c2, c1]);
                assert_eq!(a_invariants(&x).unwrap(), vec![c1 * c2, c1 + c2, F::one()]);
            }
        }
    }
    check::<F2>();
    check::<F4>();
}

#[test]
fn bprime_matches_its_gram_matrix_and_ignores_lifts() {
    let b = bridge();
    let gram = b.pattern().gram();
    let form = |x: &[F2], y: &[F2]| gram.apply(y).iter().zip(x).fold(F2::zero(), |s, (&a, &c)| s + a * c);
    for i in 0..64 {
        for j in 0..64 {
            let (x, y) = (coords(i, 6), coords(j, 6));
            assert_eq!(b.bprime(&x, &y).unwrap(), form(&x, &y));
        }
    }
    let mut rng = StdRng::seed_from_u64(2);
    for _ in 0..100 {
        let mut pick = || coords(rng.gen_range(0..64), 6);
        let (x, y, nx, ny) = (pick(), pick(), pick(), pick());
        let v = b.bprime(&x, &y).unwrap();
        assert_eq!(v, b.bprime_lifted(&x, &y, &nx, &ny).unwrap());
        assert_eq!(v, b.bprime(&y, &x).unwrap());
    }
    assert_eq!(gram, gram.transpose());
    assert_eq!(gram.rank(), 6);
}

#[test]
fn bprime_is_sp4_invariant() {
    let b = bridge();
    let points = b.sp().enumerate_points(DEFAULT_MAX_POINTS).unwrap();
    let gram = b.pattern().gram();
    let els = so4_elements(&b);
    for g in points.iter() {
        // action of g on pattern coordinates, column by column
        let moved: Vec<Vec<F2>> = (0..6)
            .map(|k| {
                let (_, x) = &els[1 << k];
                let y = b.sp().lie_coords(&b.sp().act_lie(&g, x)).unwrap();
                b.pattern().coords(&y).expect("𝔰𝔬₄ is Sp₄-stable")
            })
            .collect();
        let m = Matrix::from_rows(moved).transpose();
        assert_eq!(&(&m.transpose() * &gram) * &m, gram);
        for (cx, _) in &els {
            let gx = m.apply(cx);
            for (cy, _) in &els {
                assert_eq!(b.bprime(&gx, &m.apply(cy)).unwrap(), b.bprime(cx, cy).unwrap());
            }
        }
    }
}

#[test]
fn bprime_on_long_coroots() {
    let b = bridge();
    let d = b.sp().datum().clone();
    for g in (0..d.num_roots()).filter(|&g| d.is_long(g)) {
        let mut h = vec![F2::zero(); 10];
        for (k, &c) in d.coroot(g).iter().enumerate() {
            h[k] = F2::from_i64(c);
        }
        let c = b.pattern().coords(&h).expect("coroots lie in 𝔱");
        assert_eq!(b.bprime(&c, &c).unwrap(), F2::one(), "root {:?}", d.root(g));
    }
}

#[test]
fn duality_is_a_bijection_onto_so4_dual() {
    let b = bridge();
    let gram = b.pattern().gram();
    let mut images = std::collections::BTreeSet::new();
    for k in 0..64 {
        let x = coords(k, 6);
        let y = gram.transpose().apply(&x);
        assert_eq!(b.pattern().dualize(&y), Some(x));
        images.insert(y);
    }
    assert_eq!(images.len(), 64);
}

#[test]
fn canonical_lift_round_trips() {
    let b = bridge();
    for k in 0..64 {
        let y = coords(k, 6);
        let x = b.canonical_lift(&y);
        assert!(b.v().contains(&x.values));
        assert_eq!(b.restrict_to_so_even(&x), y);
    }
}

#[test]
fn semisimple_closures() {
    let sp4_2 = MatrixGroup::<F2>::build(GroupKind::Sp(2)).unwrap();
    let s = semisimple_closure_subspace(&sp4_2, Space::Lie);
    assert_eq!(s, bridge().pattern().subspace);
    assert_eq!(s.dim(), 6);
    assert!(s.contains_subspace(&semisimple_closure_oracle(&sp4_2, Space::Lie)));

    let sp4_4 = MatrixGroup::<F4>::build(GroupKind::Sp(2)).unwrap();
    let s4 = semisimple_closure_subspace(&sp4_4, Space::Lie);
    assert_eq!(s4, semisimple_closure_oracle(&sp4_4, Space::Lie));
    assert_eq!(s4, IsogenyBridge::<F4>::build(2).unwrap().pattern().subspace);

    let sp4_3 = MatrixGroup::<F3>::build(GroupKind::Sp(2)).unwrap();
    assert_eq!(semisimple_closure_subspace(&sp4_3, Space::Lie).dim(), 10);

    let so5 = MatrixGroup::<F2>::build(GroupKind::SO(5)).unwrap();
    let v = semisimple_closure_subspace(&so5, Space::Dual);
    assert_eq!(v.dim(), 6);
    assert_eq!(&v, bridge().v());
}
