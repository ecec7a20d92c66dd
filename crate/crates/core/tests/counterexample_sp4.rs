use liejordan::counterexample::{build_counterexample, verify_counterexample, CounterexampleBundle};
use liejordan::exactalg::textfmt::parse_matrix;
use liejordan::exactalg::FiniteField;
use liejordan::groupalg::{GroupKind, MatrixGroup};
use liejordan::{Matrix, Ring, F2, F4};

fn fixture(name: &str) -> Matrix<F2> {
    let path = format!("{}/tests/fixtures/sp4_f2/{name}.txt", env!("CARGO_MANIFEST_DIR"));
    parse_matrix(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

fn bundle<F: FiniteField>() -> CounterexampleBundle<F> {
    let g = MatrixGroup::<F>::build(GroupKind::Sp(2)).unwrap();
    let d = g.datum().clone();
    build_counterexample(g, d.index_of(&[1, -1]).unwrap(), d.index_of(&[1, 1]).unwrap()).unwrap()
}

#[test]
fn form_is_the_antidiagonal_one() {
    let b = bundle::<F2>();
    let j = Matrix::from_fn(4, 4, |i, k| if i + k == 3 { F2::from_i64(1) } else { F2::from_i64(0) });
    assert_eq!(b.group.form(), &j);
}

#[test]
fn functionals_match_both_representatives() {
    let b = bundle::<F2>();
    let g = &b.group;
    let dual = |name: &str| g.dual_from_representative(&fixture(name)).unwrap();
    assert_eq!(b.x, dual("x_star_1"));
    assert_eq!(b.x, dual("x_star_2"));
    assert_eq!(b.x_s, dual("x_semisimple"));
    assert_eq!(b.x_n, dual("x_nilpotent"));
    // the canonical representative of X* is the second displayed matrix
    assert_eq!(g.representative(&b.x), fixture("x_star_2"));
}

#[test]
fn unipotents_are_exact() {
    let b = bundle::<F2>();
    assert_eq!(b.u_alpha, fixture("u_alpha"));
    assert_eq!(b.u_sum, fixture("u_alpha_plus_beta"));
}

#[test]
fn coadjoint_products_on_representatives() {
    let b = bundle::<F2>();
    let g = &b.group;
    // Ad*(u) acts on trace-pairing representatives by R ↦ u R u⁻¹
    let conj = |u: &Matrix<F2>, r: &Matrix<F2>| g.mul(&g.mul(u, r), &g.inverse(u));
    let xs = fixture("x_semisimple");
    let xn = fixture("x_nilpotent");
    assert_eq!(conj(&b.u_alpha, &xs), fixture("u_alpha_moves_semisimple"));
    assert_eq!(conj(&b.u_sum, &xs), fixture("u_alpha_plus_beta_moves_semisimple"));
    assert_eq!(conj(&b.u_alpha, &xn), fixture("u_alpha_moves_nilpotent"));
    assert_eq!(conj(&b.u_sum, &xn), xn);

    // and the same statements on functionals
    let dual = |r: &Matrix<F2>| g.dual_from_representative(r).unwrap();
    assert_eq!(g.act_dual(&b.u_alpha, &b.x_s), dual(&fixture("u_alpha_moves_semisimple")));
    assert_eq!(dual(&fixture("u_alpha_moves_semisimple")), b.x_s);
    assert_eq!(g.act_dual(&b.u_sum, &b.x_s), dual(&fixture("u_alpha_plus_beta_moves_semisimple")));
    assert_eq!(g.act_dual(&b.u_alpha, &b.x_n), dual(&fixture("u_alpha_moves_nilpotent")));
}

#[test]
fn seven_verdicts() {
    let v = verify_counterexample(&bundle::<F2>());
    for (name, ok) in v.identities() {
        assert!(ok, "{name}");
    }
    assert!(v.distinct_semisimple_parts);
}

#[test]
fn f_is_the_identity_on_parameters() {
    // u_{α+β}(t) = 1 + t E₁₄ ↦ u_α(t) = 1 + t (E₁₂ + E₃₄), checked over F_4
    let b = bundle::<F4>();
    let g = &b.group;
    let (alpha, sum) = (b.alpha, b.sum);
    for t in F4::elements() {
        let mut e14 = g.identity();
        e14[(0, 3)] = t;
        let mut e12_34 = g.identity();
        e12_34[(0, 1)] = t;
        e12_34[(2, 3)] = t;
        assert_eq!(g.root_element(sum, t).unwrap(), e14);
        assert_eq!(g.root_element(alpha, t).unwrap(), e12_34);
        assert_eq!(b.f_image(t), Some(t));
    }
}

#[test]
fn zeroed_nilpotent_part() {
    let b = bundle::<F2>().with_zero_nilpotent();
    let v = verify_counterexample(&b);
    assert!(v.u_sum_moves_semisimple);
    assert!(!v.distinct_semisimple_parts);
}
