use liejordan::charp2bridge::{a_invariants, semisimple_closure_oracle, semisimple_closure_subspace, IsogenyBridge, SoPattern};
use liejordan::counterexample::{construct, no_go_restricted_dual, verify_counterexample, Construction, CounterexampleBundle};
use liejordan::exactalg::{FiniteField, TwoAdicLift};
use liejordan::groupalg::{DualElement, GroupKind, MatrixGroup, Space};
use liejordan::jordan::{
    all_dual_elements, coroots_fixed_by_pth_power, sweep_with_retry, Audit, DualSweep, JordanCertificate, SweepOutcome,
};
use liejordan::orbits::{element_coords, element_index, orbit_classes, space_size, Fingerprinter, LimitSearch, NonclosednessCertificate};
use liejordan::rootdata::{counterexample_pairs, f4_coroot_identity_check, vanishing_sets, Family, Isogeny, RootDatum};
use liejordan::{Error, Matrix, Result, F2, F3, F5, F7};
use rand::{rngs::StdRng, Rng, SeedableRng};
use serde_json::{json, Map, Value};

use crate::encode::{elements, functional, int_rows, matrix, root, roots};
use crate::report::Report;
use crate::RunConfig;

fn group_name(cfg: &RunConfig) -> Result<&str> {
    cfg.group.as_deref().ok_or_else(|| Error::InvalidInput("--group is required".into()))
}

fn matrix_group<F: FiniteField>(cfg: &RunConfig) -> Result<MatrixGroup<F>> {
    MatrixGroup::build(GroupKind::parse(group_name(cfg)?)?)
}

/// Matrix-group names (`sp4`, `pgl2`, ...) or datum labels: a family
/// letter, the rank, and an optional `sc`/`ad` suffix (`g2`, `b3sc`).
pub fn parse_datum(s: &str) -> Result<RootDatum> {
    if let Ok(kind) = GroupKind::parse(s) {
        return kind.datum();
    }
    let s = s.to_ascii_lowercase();
    let (isogeny, body) = if let Some(b) = s.strip_suffix("sc") {
        (Isogeny::SimplyConnected, b)
    } else if let Some(b) = s.strip_suffix("ad") {
        (Isogeny::Adjoint, b)
    } else {
        (Isogeny::Matrix, s.as_str())
    };
    let bad = || Error::InvalidInput(format!("unknown group or root datum {s:?}"));
    let mut chars = body.chars();
    let family = match chars.next() {
        Some('a') => Family::A,
        Some('b') => Family::B,
        Some('c') => Family::C,
        Some('d') => Family::D,
        Some('g') => Family::G,
        Some('f') => Family::F,
        _ => return Err(bad()),
    };
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    RootDatum::build(family, n, isogeny)
}

pub fn rootdata(cfg: &RunConfig, r: &mut Report) -> Result<()> {
    let d = parse_datum(group_name(cfg)?)?;
    r.line(format!("{}: rank {}, {} roots", d.label(), d.rank(), d.num_roots()));
    r.set(
        "datum",
        json!({
            "label": d.label(),
            "family": d.family().to_string(),
            "rank": d.rank(),
            "isogeny": format!("{:?}", d.isogeny()),
            "adjoint": d.is_adjoint(),
            "simply_connected": d.is_simply_connected(),
            "num_positive": d.num_positive(),
            "roots": d.roots(),
            "coroots": d.coroots(),
            "cartan_matrix": int_rows(&d.cartan_matrix()),
            "pairing_matrix": int_rows(&d.pairing_matrix()),
        }),
    );
    let primes = cfg.p.map_or_else(|| vec![2, 3, 5], |p| vec![p]);
    let mut per_p = Map::new();
    for p in primes {
        let v = vanishing_sets(&d, p);
        let pairs = counterexample_pairs(&d, p);
        let fixed = match p {
            2 => coroots_fixed_by_pth_power::<F2>(&d),
            3 => coroots_fixed_by_pth_power::<F3>(&d),
            5 => coroots_fixed_by_pth_power::<F5>(&d),
            7 => coroots_fixed_by_pth_power::<F7>(&d),
            _ => return Err(Error::InvalidInput(format!("unsupported characteristic {p}"))),
        };
        r.check(format!("h_alpha^[p] = h_alpha at p = {p}"), true, fixed, Value::Null);
        per_p.insert(
            p.to_string(),
            json!({
                "coroot_zero": roots(&d, &v.coroot_zero),
                "root_zero": roots(&d, &v.root_zero),
                "counterexample_pairs": pairs.iter().map(|&(a, b)| [root(&d, a), root(&d, b)]).collect::<Vec<_>>(),
            }),
        );
        r.line(format!(
            "p = {p}: {} counterexample pairs, {} roots with h_alpha = 0, {} with d(alpha) = 0",
            pairs.len(),
            v.coroot_zero.len(),
            v.root_zero.len()
        ));
    }
    r.set("mod_p", Value::Object(per_p));
    if d.family() == Family::F {
        let ok = f4_coroot_identity_check(&d)?;
        r.check("F4 coroot identity", true, ok, Value::Null);
        r.line(format!("F4 coroot identity: {ok}"));
    }
    Ok(())
}

pub fn orbits<F: FiniteField>(cfg: &RunConfig, r: &mut Report) -> Result<()> {
    let g = matrix_group::<F>(cfg)?;
    let t = orbit_classes(&g, cfg.side, cfg.max_elements())?;
    let total: usize = t.sizes.iter().sum();
    r.check("orbit sizes sum to q^dim", true, total == t.num_elements(), json!({ "sum": total, "elements": t.num_elements() }));
    let order = g.expected_order();
    let bad: Vec<usize> = t.sizes.iter().copied().filter(|&s| order % s as u128 != 0).collect();
    r.check("orbit sizes divide |G(F_q)|", true, bad.is_empty(), json!({ "order": order.to_string(), "non_divisors": bad }));
    let fp = Fingerprinter::new(&g, cfg.side).ok();
    let rows: Vec<Value> = (0..t.num_orbits())
        .map(|id| {
            let x = element_coords::<F>(t.representatives[id], t.dim);
            json!({
                "orbit": id,
                "representative": elements(&x),
                "size": t.sizes[id],
                "fingerprint": fp.as_ref().map(|f| elements(&f.fingerprint(&g, &x))),
            })
        })
        .collect();
    r.set("fingerprint_model", json!(fp.as_ref().map(|f| f.describe())));
    r.set("orbits", Value::Array(rows));
    r.set("table", serde_json::to_value(&t).expect("orbit tables serialize"));
    r.line(format!("{} on {}: {} orbits on {} elements", g.name(), cfg.side, t.num_orbits(), total));
    Ok(())
}

fn limit_json<F: FiniteField>(g: &MatrixGroup<F>, s: &LimitSearch<'_, F>, c: &NonclosednessCertificate<F>) -> Value {
    json!({
        "point_index": c.point_index,
        "conjugator": matrix(&c.conjugator),
        "cocharacter": c.cocharacter.coords,
        "height": c.cocharacter.height(g.datum()),
        "limit": elements(&c.limit),
        "limit_orbit": s.table().orbit_id(element_index(&c.limit)),
    })
}

pub fn limits<F: FiniteField>(cfg: &RunConfig, r: &mut Report) -> Result<()> {
    let g = matrix_group::<F>(cfg)?;
    let hb = cfg.height_bound;
    let search = LimitSearch::new(&g, cfg.side, hb, cfg.max_points(), cfg.max_elements())?;
    let sweep = match cfg.side {
        Space::Dual => Some(DualSweep::new(&g, cfg.max_points())?),
        Space::Lie => None,
    };
    let t = search.table();
    let mut rows = Vec::new();
    let (mut certified, mut nilpotent, mut semisimple) = (0, 0, 0);
    let (mut missing, mut destabilized) = (Vec::new(), Vec::new());
    for (id, &rep) in t.representatives.iter().enumerate() {
        let x = element_coords::<F>(rep, t.dim);
        let nonzero = x.iter().any(|v| !v.is_zero());
        let cert = search.certificate(&x);
        let to_zero = if nonzero { search.certificate_where(&x, |l| l.iter().all(|v| v.is_zero())) } else { None };
        certified += usize::from(cert.is_some());
        let (ss, kw) = match &sweep {
            Some(s) => {
                let y = DualElement { values: x.clone() };
                (Some(s.is_semisimple_dual(&y).is_some()), Some(s.kw_nilpotent(&y).is_some()))
            }
            None => (None, None),
        };
        if kw == Some(true) && nonzero {
            nilpotent += 1;
            if to_zero.is_none() {
                missing.push(elements(&x));
            }
        }
        if ss == Some(true) {
            semisimple += 1;
            if cert.is_some() {
                destabilized.push(elements(&x));
            }
        }
        rows.push(json!({
            "orbit": id,
            "representative": elements(&x),
            "size": t.sizes[id],
            "semisimple": ss,
            "kw_nilpotent": kw,
            "certificate": cert.map(|c| limit_json(&g, &search, &c)),
            "limit_zero_certificate": to_zero.map(|c| limit_json(&g, &search, &c)),
        }));
    }
    r.set("cocharacters", json!(search.cocharacters().iter().map(|l| &l.coords).collect::<Vec<_>>()));
    r.set("orbits", Value::Array(rows));
    r.line(format!(
        "{} on {}: {} of {} orbits have a certificate at height <= {hb} ({} cocharacters)",
        g.name(),
        cfg.side,
        certified,
        t.num_orbits(),
        search.cocharacters().len()
    ));
    if sweep.is_some() {
        r.check(
            format!("nonzero KW-nilpotent orbits reach 0 at height <= {hb}"),
            true,
            missing.is_empty(),
            json!({ "kw_nilpotent_orbits": nilpotent, "without_limit_zero": missing }),
        );
        r.check(
            format!("semisimple orbits have no certificate at height <= {hb}"),
            true,
            destabilized.is_empty(),
            json!({ "semisimple_orbits": semisimple, "with_certificate": destabilized }),
        );
        r.line(format!("KW-nilpotent orbits reaching 0: {} of {nilpotent}", nilpotent - missing.len()));
        r.line(format!("semisimple orbits with a certificate: {} of {semisimple}", destabilized.len()));
    }
    Ok(())
}

fn certificate_json<K: FiniteField>(g: &MatrixGroup<K>, c: &JordanCertificate<K>, a: &Audit) -> Value {
    json!({
        "field": K::ORDER,
        "conjugator": matrix(&c.conjugator),
        "weyl_word": c.weyl_word,
        "semisimple": functional(g, &c.semisimple),
        "nilpotent": functional(g, &c.nilpotent),
        "audit": a,
        "audited": a.passed(),
    })
}

pub fn decompose<F: FiniteField, E: FiniteField>(cfg: &RunConfig, r: &mut Report) -> Result<()> {
    let g = matrix_group::<F>(cfg)?;
    let sweep = DualSweep::new(&g, cfg.max_points())?;
    let xs: Vec<DualElement<F>> = if cfg.all {
        all_dual_elements(&g, cfg.max_elements())?
    } else {
        let t = orbit_classes(&g, Space::Dual, cfg.max_elements())?;
        t.representatives.iter().map(|&i| DualElement { values: element_coords::<F>(i, t.dim) }).collect()
    };
    let big = MatrixGroup::<E>::build(g.kind())?;
    let outcomes = sweep_with_retry(&sweep, &big, &xs);
    let (mut rational, mut extension, mut missing) = (0, 0, 0);
    let rows: Vec<Value> = xs
        .iter()
        .zip(&outcomes)
        .map(|(x, o)| {
            let (kind, cert) = match o {
                SweepOutcome::Rational(c, a) => {
                    rational += 1;
                    ("rational", certificate_json(&g, c, a))
                }
                SweepOutcome::Extension(c, a) => {
                    extension += 1;
                    ("extension", certificate_json(&big, c, a))
                }
                SweepOutcome::Missing => {
                    missing += 1;
                    ("missing", Value::Null)
                }
            };
            json!({ "element": elements(&x.values), "outcome": kind, "certificate": cert })
        })
        .collect();
    let audited = outcomes.iter().filter(|o| o.audited()).count();
    r.check(
        "every element has an audited certificate",
        true,
        audited == xs.len(),
        json!({ "elements": xs.len(), "audited": audited, "rational": rational, "extension": extension, "missing": missing }),
    );
    r.set("scope", json!(if cfg.all { "all" } else { "orbit-representatives" }));
    r.set("certificates", Value::Array(rows));
    r.line(format!(
        "{}: {} elements ({}), {rational} F_{}-rational certificates, {extension} over F_{}, {missing} missing, {audited} audited",
        g.name(),
        xs.len(),
        if cfg.all { "all" } else { "one per orbit" },
        F::ORDER,
        E::ORDER
    ));
    Ok(())
}

pub fn counterexample<F: FiniteField>(cfg: &RunConfig, r: &mut Report) -> Result<()> {
    let d = parse_datum(cfg.group.as_deref().unwrap_or("sp4"))?;
    let p = F::CHAR;
    let pairs = counterexample_pairs(&d, p);
    let mut chosen = Err(Error::InvalidInput(format!("{} has no qualifying pair at p = {p}", d.label())));
    for &(a, b) in &pairs {
        chosen = construct::<F>(&d, a, b);
        if chosen.is_ok() {
            break;
        }
    }
    match chosen? {
        Construction::Matrix(b) => report_bundle(&b, r),
        Construction::LatticeOnly { certificate, reason } => {
            let ok = certificate.rank_with_sum > certificate.rank_pair;
            r.check("h_(alpha+beta) lies outside the span of h_alpha, h_beta mod p", true, ok, Value::Null);
            r.line(format!("{}: {reason}", d.label()));
            r.line(format!(
                "alpha = {:?}, beta = {:?}: rank {} -> {} mod {p}",
                certificate.alpha, certificate.beta, certificate.rank_pair, certificate.rank_with_sum
            ));
            r.set("lattice_certificate", serde_json::to_value(&certificate).expect("certificates serialize"));
            Ok(())
        }
    }
}

fn report_bundle<F: FiniteField>(b: &CounterexampleBundle<F>, r: &mut Report) -> Result<()> {
    let g = &b.group;
    let d = g.datum();
    let v = verify_counterexample(b);
    r.line(format!("{}: alpha = {:?}, beta = {:?}", g.name(), d.root(b.alpha), d.root(b.beta)));
    for (name, ok) in v.identities() {
        r.check(name, true, ok, Value::Null);
        r.line(format!("{ok:<5} {name}"));
    }
    r.check(
        "X has two distinct semisimple parts",
        true,
        v.distinct_semisimple_parts,
        json!({ "first_audit": v.first_audit, "second_audit": v.second_audit }),
    );
    r.line(format!("{:<5} X has two distinct semisimple parts", v.distinct_semisimple_parts));
    let ng = no_go_restricted_dual(b)?;
    r.check(
        "u_(alpha+beta) C u_(alpha+beta)^-1 differs from u_alpha^-1 C u_alpha",
        true,
        ng.holds(),
        json!({
            "centralizer_size": ng.centralizer_size,
            "projection_nonzero": ng.projection_nonzero,
            "torus_conjugate_leaves_centralizer": ng.torus_conjugate_leaves_centralizer,
        }),
    );
    r.line(format!("{:<5} conjugates of C_G(X_s) differ", ng.holds()));
    let blocks = [
        ("X*", g.representative(&b.x)),
        ("X*_s", g.representative(&b.x_s)),
        ("X*_n", g.representative(&b.x_n)),
        ("u_alpha", b.u_alpha.clone()),
        ("u_alpha_plus_beta", b.u_sum.clone()),
    ];
    for (name, m) in &blocks {
        r.line(format!("{name} =\n{}", matrix(m).trim_end()));
    }
    r.set(
        "bundle",
        json!({
            "alpha": root(d, b.alpha),
            "beta": root(d, b.beta),
            "sum": root(d, b.sum),
            "form": matrix(g.form()),
            "x": functional(g, &b.x),
            "x_semisimple": functional(g, &b.x_s),
            "x_nilpotent": functional(g, &b.x_n),
            "u_alpha": matrix(&b.u_alpha),
            "u_alpha_plus_beta": matrix(&b.u_sum),
            "f": b.f.iter().map(|e| [e.t.index(), e.s.index()]).collect::<Vec<_>>(),
        }),
    );
    Ok(())
}

fn square<F: FiniteField>(a: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); 2 * a.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in a.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of ∏ (λ + c_i), lowest degree first.
fn product_of_linears<F: FiniteField>(cs: &[F]) -> Vec<F> {
    cs.iter().fold(vec![F::one()], |acc, &c| {
        let mut out = vec![F::zero(); acc.len() + 1];
        for (i, &a) in acc.iter().enumerate() {
            out[i] += a * c;
            out[i + 1] += a;
        }
        out
    })
}

/// The matrix of an endomorphism of 𝔰𝔬_{2n} ⊂ 𝔰𝔭_{2n} on pattern
/// coordinates, or `None` if it leaves 𝔰𝔬_{2n}.
fn on_pattern<F: FiniteField>(sp: &MatrixGroup<F>, pat: &SoPattern<F>, f: impl Fn(&Matrix<F>) -> Matrix<F>) -> Option<Matrix<F>> {
    let cols = (0..pat.dim())
        .map(|k| {
            let mut c = vec![F::zero(); pat.dim()];
            c[k] = F::one();
            let y = f(&sp.lie_from_coords(&pat.sp_coords(&c, sp.lie_dim())));
            pat.coords(&sp.lie_coords(&y)?)
        })
        .collect::<Option<Vec<_>>>()?;
    Some(Matrix::from_rows(cols).transpose())
}

pub fn bridge<F: TwoAdicLift>(cfg: &RunConfig, r: &mut Report) -> Result<()> {
    let kind = GroupKind::parse(cfg.group.as_deref().unwrap_or("sp4"))?;
    let GroupKind::Sp(n) = kind else {
        return Err(Error::InvalidInput(format!("the bridge needs a symplectic group, not {kind}")));
    };
    let b = IsogenyBridge::<F>::build(n)?;
    let (sp, pat) = (b.sp(), b.pattern());
    let dim = pat.dim();
    let lie_dim = sp.lie_dim();
    let gens = sp.generators();

    let total = space_size::<F>(dim, cfg.max_elements())?;
    let (mut squares, mut invariant) = (0, 0);
    let mut table = Vec::new();
    for k in 0..total {
        let c = element_coords::<F>(k, dim);
        let x = sp.lie_from_coords(&pat.sp_coords(&c, lie_dim));
        let Ok(a) = a_invariants(&x) else { continue };
        squares += usize::from(square(&a) == x.charpoly().coeffs());
        invariant += usize::from(gens.iter().all(|s| a_invariants(&sp.act_lie(s, &x)).ok().as_ref() == Some(&a)));
        if total <= 4096 {
            table.push(json!({ "x": elements(&c), "a": elements(&a) }));
        }
    }
    r.check(format!("charpolys on so{} are squares", 2 * n), true, squares == total, json!({ "elements": total, "squares": squares }));
    r.check(
        format!("a-invariants are Sp{}-invariant (on generators)", 2 * n),
        true,
        invariant == total,
        json!({ "elements": total, "invariant": invariant, "generators": gens.len() }),
    );

    let torus_total = space_size::<F>(n, cfg.max_elements())?;
    let torus_ok = (0..torus_total).all(|k| {
        let mut c = element_coords::<F>(k, n);
        c.resize(dim, F::zero());
        let x = sp.lie_from_coords(&pat.sp_coords(&c, lie_dim));
        let diag: Vec<F> = (0..n).map(|i| x[(i, i)]).collect();
        a_invariants(&x).ok() == Some(product_of_linears(&diag))
    });
    r.check("a on the torus = elementary symmetric values", true, torus_ok, json!({ "torus_points": torus_total }));

    let gram = pat.gram();
    let rank = gram.rank();
    let form = |x: &[F], y: &[F]| gram.apply(y).iter().zip(x).fold(F::zero(), |s, (&a, &c)| s + a * c);
    let mut rng = StdRng::seed_from_u64(0);
    let mut pick = || (0..dim).map(|_| F::from_index(rng.gen_range(0..F::ORDER))).collect::<Vec<F>>();
    let mut lift_ok = true;
    for _ in 0..100 {
        let (x, y, nx, ny) = (pick(), pick(), pick(), pick());
        let v = b.bprime(&x, &y)?;
        lift_ok &= v == b.bprime_lifted(&x, &y, &nx, &ny)? && v == b.bprime(&y, &x)? && v == form(&x, &y);
    }
    r.check("B' is symmetric", true, gram == gram.transpose(), Value::Null);
    r.check("B' is independent of the lifts (100 random pairs)", true, lift_ok, Value::Null);
    r.check("B' is nondegenerate", true, rank == dim, json!({ "gram_rank": rank, "dim": dim }));
    let mut gen_ok = true;
    for s in &gens {
        gen_ok &= match on_pattern(sp, pat, |x| sp.act_lie(s, x)) {
            Some(m) => &(&m.transpose() * &gram) * &m == gram,
            None => false,
        };
    }
    r.check(format!("B' is Sp{}-invariant (on generators)", 2 * n), true, gen_ok, Value::Null);
    let d = sp.datum();
    let mut long_ok = true;
    for g in (0..d.num_roots()).filter(|&g| d.is_long(g)) {
        let mut h = vec![F::zero(); lie_dim];
        for (k, &c) in d.coroot(g).iter().enumerate() {
            h[k] = F::from_i64(c);
        }
        long_ok &= match pat.coords(&h) {
            Some(c) => b.bprime(&c, &c)? == F::one(),
            None => false,
        };
    }
    r.check("B'(h_alpha, h_alpha) = 1 for long alpha", true, long_ok, Value::Null);

    let closure_ok = semisimple_closure_subspace(sp, Space::Lie) == pat.subspace;
    r.check(format!("semisimple closure in sp{} is so{}", 2 * n, 2 * n), true, closure_ok, Value::Null);
    r.check("dim V = dim so_2n", true, b.v().dim() == dim, json!({ "v_dim": b.v().dim() }));

    r.set(
        "bridge",
        json!({
            "n": n,
            "so_even_dim": dim,
            "sp_dim": lie_dim,
            "v_dim": b.v().dim(),
            "bprime_gram": matrix(&gram),
            "a_invariants": if total <= 4096 { Value::Array(table) } else { Value::Null },
        }),
    );
    r.line(format!(
        "{} and so{}: so{} has dim {dim}, V has dim {}, B' Gram rank {rank}; {total} elements checked",
        sp.name(),
        2 * n + 1,
        2 * n,
        b.v().dim()
    ));
    Ok(())
}

pub fn closure<F: FiniteField>(cfg: &RunConfig, r: &mut Report) -> Result<()> {
    let g = matrix_group::<F>(cfg)?;
    let kind = g.kind();
    let side = cfg.side;
    let s = semisimple_closure_subspace(&g, side);
    let oracle = semisimple_closure_oracle(&g, side);
    let d = g.datum();
    let lie_dim = g.lie_dim();
    let unit = |i: usize| (0..lie_dim).map(|k| if k == i { F::one() } else { F::zero() }).collect::<Vec<F>>();
    let (included, excluded): (Vec<usize>, Vec<usize>) = (0..d.num_roots()).partition(|&k| s.contains(&unit(g.root_basis_index(k))));

    let full = s.dim() == lie_dim;
    let star = if side == Space::Dual { "*" } else { "" };
    let (name, expected) = match (kind, side) {
        _ if F::CHAR != 2 => (if full { format!("{kind}{star}") } else { "proper subspace".into() }, full),
        (GroupKind::Sp(n), Space::Lie) => {
            let so = SoPattern::new(&g)?.subspace == s;
            (if so { format!("so{}", 2 * n) } else { "proper subspace".into() }, so)
        }
        (GroupKind::SO(m), Space::Dual) if m % 2 == 1 => {
            let v = IsogenyBridge::<F>::build(m / 2)?.v() == &s;
            (if v { format!("V = im(df*), so{}*", m - 1) } else { "proper subspace".into() }, v)
        }
        _ => (if full { format!("{kind}{star}") } else { "proper subspace".into() }, true),
    };
    r.check("the closure is the expected summand", true, expected, json!({ "name": name }));
    r.check("the oracle span lies in the closure", true, s.contains_subspace(&oracle), json!({ "oracle_dim": oracle.dim() }));
    r.check("the oracle span equals the closure", false, s == oracle, json!({ "oracle_dim": oracle.dim(), "q": F::ORDER }));
    r.set(
        "closure",
        json!({
            "name": name,
            "dim": s.dim(),
            "ambient_dim": lie_dim,
            "torus_dim": g.rank(),
            "roots": roots(d, &included),
            "excluded_roots": roots(d, &excluded),
            "oracle_dim": oracle.dim(),
        }),
    );
    r.line(format!("{name}, dim {}", s.dim()));
    Ok(())
}

pub fn suite(cfg: &RunConfig, r: &mut Report) -> Result<()> {
    for name in &cfg.suites {
        let passed = r.timed(name, true, || crate::suite::run(name))?;
        r.line(format!("{} {name}", if passed { "PASS" } else { "FAIL" }));
    }
    Ok(())
}
