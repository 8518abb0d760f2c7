//! Property tests with independent oracles.

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

use hypcert::defcheck::{
    apply_deformation, buchberger, deformation_form, deformation_form_with_lifts, is_strict, quotient_algebra,
    socle_shortcut, DeformationHom, MonomialOrder, QuotientAlgebra, SocleVerdict,
};
use hypcert::engine::{
    curve_hyperbolicity, hypersurface_scan, quadric_hyperbolicity, CurveVerdict, LinearSubspace, RationalCurveParam,
    Sampler, ScanVerdict,
};
use hypcert::fanlab::{
    distraction_fan, fan_snapshot, hilbert, n_star, n_star_geq, n_star_monomial, tighten_driver, tighten_step,
    DistractionAssignment, Fan, LinearPrime, MonomialIdeal, TightenOutcome,
};
use hypcert::kernel::linalg::{identity, mat_mul, trace, transpose, Mat};
use hypcert::kernel::rat::{fmt_rat, int, parse_rat, rat, vec_of};
use hypcert::kernel::{ldlt_signature, BinaryForm, DualRat, MPoly, Monomial, Rat, SymMat, UPoly};
use hypcert::realcert::{
    bezout_matrix, hermite_matrix, interlace_certificate, real_rooted_status, sturm_distinct_real_roots,
    InterlaceVerdict, RootTag,
};
use hypcert::Error;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, rng_seed: RngSeed::Fixed(20261016), failure_persistence: None, ..ProptestConfig::default() }
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |r| !r.is_zero())
}

// ---------- kernel ----------

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn rat_field_identities(a in small_rat(), b in small_rat(), c in nonzero_rat()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a / &c) * &c, a.clone());
        prop_assert_eq!(&(&a - &a), &Rat::zero());
        let text = fmt_rat(&a);
        prop_assert_eq!(parse_rat(&text).unwrap(), a.clone());
        prop_assert_eq!(fmt_rat(&parse_rat(&text).unwrap()), text);
    }

    #[test]
    fn dual_numbers(a in small_rat(), b in small_rat(), c in small_rat(), d in small_rat()) {
        let x = DualRat::new(a.clone(), b.clone());
        let y = DualRat::new(c.clone(), d.clone());
        let prod = &DualRat::infinitesimal(b.clone()) * &DualRat::infinitesimal(d.clone());
        prop_assert!(prod.is_zero());
        prop_assert_eq!((&x * &y).re, &a * &c);
        prop_assert_eq!((&x + &y).re, &a + &c);
        prop_assert_eq!((&x * &y).eps, &(&a * &d) + &(&b * &c));
    }
}

fn sym_matrix() -> impl Strategy<Value = SymMat> {
    (1usize..=8).prop_flat_map(|d| {
        prop::collection::vec(prop_oneof![3 => -3i64..=3, 1 => Just(0i64)], d * (d + 1) / 2).prop_map(move |v| {
            let mut k = 0;
            let mut rows = vec![vec![Rat::zero(); d]; d];
            for i in 0..d {
                for j in i..d {
                    rows[i][j] = int(v[k]);
                    rows[j][i] = int(v[k]);
                    k += 1;
                }
            }
            SymMat::from_rows(&rows).unwrap()
        })
    })
}

/// Characteristic polynomial by Faddeev–LeVerrier, coefficients from degree 0 up.
fn char_poly(a: &Mat) -> Vec<Rat> {
    let n = a.len();
    let mut c = vec![Rat::zero(); n + 1];
    c[n] = Rat::one();
    let mut m = vec![vec![Rat::zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = &row[i] + &c[n - k + 1];
        }
        m = next;
        c[n - k] = -(trace(&mat_mul(a, &m)) / int(k as i64));
    }
    c
}

fn sign_changes(c: &[Rat]) -> usize {
    let signs: Vec<bool> = c.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia of a symmetric matrix from Descartes' rule on its (real-rooted) characteristic polynomial.
fn descartes_inertia(a: &Mat) -> (usize, usize, usize) {
    let c = char_poly(a);
    let zero = c.iter().position(|x| !x.is_zero()).unwrap();
    let flipped: Vec<Rat> = c.iter().enumerate().map(|(i, x)| if i % 2 == 1 { -x.clone() } else { x.clone() }).collect();
    (sign_changes(&c), sign_changes(&flipped), zero)
}

proptest! {
    #![proptest_config(config(500))]

    #[test]
    fn ldlt_reconstructs_and_matches_descartes(m in sym_matrix()) {
        let cert = ldlt_signature(&m);
        let rows = m.to_rows();
        let n = rows.len();
        let permuted: Mat = (0..n).map(|i| (0..n).map(|j| rows[cert.perm[i]][cert.perm[j]].clone()).collect()).collect();
        let rebuilt = mat_mul(&mat_mul(&cert.l, &cert.d_matrix()), &transpose(&cert.l));
        prop_assert_eq!(permuted, rebuilt);
        prop_assert_eq!((cert.n_pos, cert.n_neg, cert.n_zero), descartes_inertia(&rows));
    }
}

fn homogeneous_poly(nvars: usize, degree: u32) -> impl Strategy<Value = MPoly> {
    let mut monos = Vec::new();
    hypcert::fanlab::monomial::for_each_monomial(nvars, degree, &mut |m: &Monomial| monos.push(m.0.clone()));
    prop::collection::vec(-5i64..=5, monos.len())
        .prop_map(move |c| MPoly::from_terms(nvars, monos.iter().cloned().zip(c.into_iter().map(int))))
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn restriction_to_a_line_is_evaluation(
        f in (1u32..=4).prop_flat_map(|d| homogeneous_poly(3, d)),
        x in prop::collection::vec(small_rat(), 3),
        e in prop::collection::vec(small_rat(), 3),
        t in small_rat(),
    ) {
        let u = f.restrict_to_line(&x, &e).unwrap();
        let point: Vec<Rat> = x.iter().zip(&e).map(|(a, b)| a + &(&t * b)).collect();
        prop_assert_eq!(u.eval(&t), f.eval(&point));
    }
}

// ---------- univariate certificates ----------

fn upoly() -> impl Strategy<Value = UPoly> {
    prop_oneof![
        prop::collection::vec(small_rat(), 2..=9).prop_filter_map("degree at least one", |c| {
            let f = UPoly::new(c);
            (f.degree() >= 1).then_some(f)
        }),
        (prop::collection::vec(-4i64..=4, 1..=6), prop::collection::vec((-3i64..=3, 1i64..=4), 0..=1)).prop_map(
            |(roots, quad)| {
                let mut f = UPoly::from_roots(&vec_of(&roots));
                for (b, c) in quad {
                    f = &f * &UPoly::new(vec![int(c), int(b), int(1)]);
                }
                f
            }
        ),
    ]
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn hermite_signature_counts_real_roots(f in upoly()) {
        let cert = ldlt_signature(&hermite_matrix(&f).unwrap());
        let sturm = sturm_distinct_real_roots(&f).unwrap();
        prop_assert_eq!(cert.signature(), sturm as i64);
        // rank = number of distinct complex roots
        let distinct = f.degree() - f.gcd(&f.derivative()).degree();
        prop_assert_eq!(cert.rank() as i64, distinct);
        prop_assert_eq!(cert.is_psd(), sturm as i64 == distinct);
        prop_assert_eq!(real_rooted_status(&f).unwrap().all_real(), cert.is_psd());
    }
}

fn binary_form(degree: usize) -> impl Strategy<Value = BinaryForm> {
    prop::collection::vec(small_rat(), degree + 1).prop_map(move |c| BinaryForm::new(degree, c))
}

fn real_rooted_form(degree: usize) -> impl Strategy<Value = BinaryForm> {
    prop::collection::vec(-9i64..=9, degree).prop_map(move |roots| {
        BinaryForm::new(degree, UPoly::from_roots(&vec_of(&roots)).coeffs().to_vec())
    })
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn bezout_is_alternating(
        p in binary_form(4), q in binary_form(4),
        a in small_rat(), b in small_rat(), c in small_rat(), d in small_rat(),
    ) {
        let p2 = p.combine(&a, &q, &b).unwrap();
        let q2 = p.combine(&c, &q, &d).unwrap();
        let det = &(&a * &d) - &(&b * &c);
        prop_assert_eq!(bezout_matrix(&p2, &q2).unwrap(), bezout_matrix(&p, &q).unwrap().scale(&det));
    }

    #[test]
    fn interlacing_pencils_are_real_rooted(
        p in real_rooted_form(3), q in real_rooted_form(3),
        pencil in prop::collection::vec((small_rat(), small_rat()), 50),
    ) {
        let Ok(cert) = interlace_certificate(&p, &q) else { return Ok(()) };
        if cert.verdict != InterlaceVerdict::StrictlyInterlacing {
            return Ok(());
        }
        for (l, m) in pencil {
            let member = p.combine(&l, &q, &-m.clone()).unwrap();
            let u = member.dehomogenize();
            if u.is_zero() || u.degree() < 1 {
                continue;
            }
            prop_assert_ne!(real_rooted_status(&u).unwrap().tag, RootTag::NotAllReal);
        }
    }
}

// ---------- hyperbolicity engine ----------

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn quadric_verdict_is_never_contradicted(q in homogeneous_poly(3, 2), e in prop::collection::vec(-3i64..=3, 3)) {
        let e = vec_of(&e);
        prop_assume!(!q.eval(&e).is_zero());
        let exact = quadric_hyperbolicity(&q, &e).unwrap();
        let scan = hypersurface_scan(&q, &e, &Sampler::random(500, 1)).unwrap();
        if exact.hyperbolic {
            prop_assert!(scan.verdict != ScanVerdict::FalsifiedHyperbolic);
        }
        if scan.verdict == ScanVerdict::FalsifiedHyperbolic {
            prop_assert!(!exact.hyperbolic);
        }
    }
}

fn invertible_4x4() -> impl Strategy<Value = Vec<Vec<Rat>>> {
    prop::collection::vec(-3i64..=3, 16)
        .prop_map(|v| v.chunks(4).map(vec_of).collect::<Vec<_>>())
        .prop_filter("invertible", |m: &Vec<Vec<Rat>>| hypcert::kernel::linalg::rank(m) == 4)
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn curve_verdicts_are_projectively_invariant(
        c in invertible_4x4(),
        pencil in prop::collection::vec((small_rat(), small_rat()), 50),
    ) {
        let curve = RationalCurveParam::parse(&["x1^3", "x0*x1^2", "x0^2*x1", "x0^3"], 3).unwrap();
        let span = [vec_of(&[4, 0, 1, 0]), vec_of(&[0, 1, 0, 1])];
        let moved_span: Vec<Vec<Rat>> =
            span.iter().map(|p| c.iter().map(|row| row.iter().zip(p).map(|(a, b)| a * b).sum()).collect()).collect();
        let moved = curve.transform(&c).unwrap();
        let e = LinearSubspace::from_points(4, &moved_span).unwrap();
        let cert = curve_hyperbolicity(&moved, &e).unwrap();
        prop_assert_eq!(cert.verdict, CurveVerdict::StrictlyHyperbolic);
        let (f, g) = cert.forms.clone();
        for (l, m) in pencil {
            let member = f.combine(&l, &g, &m).unwrap();
            if member.is_zero() {
                continue;
            }
            let u = member.dehomogenize();
            if member.root_at_infinity() > 1 || u.degree() < 1 {
                continue;
            }
            prop_assert_ne!(real_rooted_status(&u).unwrap().tag, RootTag::NotAllReal);
        }
    }
}

// ---------- monomial ideals and fans ----------

fn monomial_ideal(nvars: usize, max_gens: usize, max_deg: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0u32..=max_deg, nvars), 1..=max_gens).prop_map(move |gens| {
        let gens: Vec<Vec<u32>> = gens
            .into_iter()
            .map(|mut g| {
                while g.iter().sum::<u32>() > max_deg {
                    let i = g.iter().position(|&x| x > 0).unwrap();
                    g[i] -= 1;
                }
                g
            })
            .filter(|g| g.iter().any(|&x| x > 0))
            .collect();
        MonomialIdeal::from_exponents(nvars, &gens).unwrap()
    })
}

fn brute_force_count(ideal: &MonomialIdeal, d: u32) -> usize {
    let mut count = 0;
    hypcert::fanlab::monomial::for_each_monomial(ideal.nvars(), d, &mut |m: &Monomial| {
        if !ideal.gens().iter().any(|g| g.0.iter().zip(&m.0).all(|(a, b)| a <= b)) {
            count += 1;
        }
    });
    count
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn hilbert_recursion_matches_enumeration(ideal in (2usize..=5).prop_flat_map(|n| monomial_ideal(n, 8, 6))) {
        let data = hilbert(&ideal);
        for d in 0..=(data.regularity_bound as usize + 5) {
            prop_assert_eq!(data.hilbert_function(d), int(brute_force_count(&ideal, d as u32) as i64), "degree {}", d);
        }
    }
}

fn substitute_monomial(m: &[u32], i: usize, j: usize) -> Vec<u32> {
    let mut out = m.to_vec();
    out[j] += out[i];
    out[i] = 0;
    out
}

proptest! {
    #![proptest_config(config(50))]

    #[test]
    fn balanced_check_matches_definition(ideal in (2usize..=4).prop_flat_map(|n| monomial_ideal(n, 4, 3))) {
        let n = ideal.nvars();
        let mut closed = true;
        for d in 0..=6u32 {
            hypcert::fanlab::monomial::for_each_monomial(n, d, &mut |m: &Monomial| {
                if !ideal.contains(m) {
                    return;
                }
                for i in 1..n {
                    for j in (i + 1)..n {
                        if !ideal.contains(&Monomial(substitute_monomial(&m.0, i, j))) {
                            closed = false;
                        }
                    }
                }
            });
        }
        prop_assert_eq!(ideal.is_balanced(), closed);
    }
}

fn supported_ideal() -> impl Strategy<Value = (MonomialIdeal, usize)> {
    (0usize..=1, 4usize..=5).prop_flat_map(|(k, nvars)| {
        let free = nvars - k - 1;
        prop::collection::vec(prop::collection::vec(0u32..=2, free), 1..=3).prop_map(move |gens| {
            let gens: Vec<Vec<u32>> = gens
                .into_iter()
                .filter(|g| g.iter().any(|&x| x > 0))
                .map(|g| {
                    let mut full = vec![0; k + 1];
                    full.extend(g);
                    full
                })
                .collect();
            (MonomialIdeal::from_exponents(nvars, &gens).unwrap(), k)
        })
    })
}

proptest! {
    #![proptest_config(config(60))]

    #[test]
    fn distraction_fans_keep_hilbert_data((ideal, k) in supported_ideal(), seed in 0u64..1000) {
        prop_assume!(!ideal.is_zero() && !ideal.is_unit());
        let t = DistractionAssignment::seeded(&ideal, seed);
        let fan = match distraction_fan(&ideal, &t, k) {
            Ok(f) => f,
            Err(Error::NotGeneric(_) | Error::ScopeExceeded(_)) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        prop_assert_eq!(fan.hilbert_polynomial().unwrap(), hilbert(&ideal).hilbert_polynomial);
        let support: std::collections::BTreeSet<Vec<usize>> =
            ideal.minimal_primes().into_iter().collect();
        let complementary: Vec<usize> = (k + 1..ideal.nvars()).collect();
        prop_assert_eq!(fan.disjoint_from_e(), support.iter().all(|p| *p == complementary));
        let vars: Vec<Vec<usize>> = fan.components().iter().map(|c| c.vars()).collect();
        for c in fan.components() {
            let v = c.vars();
            prop_assert!(support.iter().any(|p| p.iter().all(|i| v.contains(i))), "component {} lies in no minimal prime", c);
        }
        for p in &support {
            prop_assert!(vars.contains(p), "minimal prime on {:?} lost", p);
        }
        if let Ok(input) = n_star_monomial(&ideal) {
            prop_assert!(n_star_geq(&n_star(&fan).unwrap(), &input));
        }
    }
}

fn random_fan() -> impl Strategy<Value = Fan> {
    prop::collection::vec((0i64..=3, 0i64..=3), 1..=3).prop_filter_map(
        "valid fan",
        |comps| {
            let comps: Vec<LinearPrime> = comps
                .into_iter()
                .map(|(a, b)| LinearPrime::new(vec![(2, int(a)), (3, int(b))]))
                .collect::<Result<_, _>>()
                .ok()?;
            Fan::minimal(4, 1, comps).ok()
        },
    )
}

proptest! {
    #![proptest_config(config(60))]

    #[test]
    fn tighten_step_trichotomy(fan in random_fan(), lambda in -2i64..=2, mu in -2i64..=2) {
        let p = fan.p_invariant().unwrap();
        match tighten_step(&fan, p, &int(lambda), &int(mu)) {
            Ok(TightenOutcome::Step { fan: out, step }) => {
                prop_assert!(step.is_valid());
                prop_assert!(out.is_tight() || out.p_invariant().unwrap() > p || step.no_op);
                if step.no_op {
                    prop_assert!(fan.is_tight());
                }
            }
            Ok(TightenOutcome::NeedsSchemeStep { .. }) => {}
            Err(Error::Unsupported(_)) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn driver_paths_raise_n_star(fan in random_fan()) {
        let report = tighten_driver(&fan, 8).unwrap();
        let mut prev = n_star(&fan).unwrap();
        for s in &report.steps {
            prop_assert!(s.is_valid());
            let after = s.after.n_star.clone().unwrap();
            prop_assert!(n_star_geq(&after, &prev), "{:?} then {:?}", prev, after);
            prev = after;
        }
        if let Some(last) = report.final_fan() {
            prop_assert!(last.is_tight());
            prop_assert_eq!(fan_snapshot(last).unwrap().hilbert_polynomial, fan.hilbert_polynomial().unwrap());
        }
    }
}

// ---------- first-order deformations ----------

fn univariate(roots: &[i64], nvars: usize, var: usize) -> MPoly {
    MPoly::from_upoly(&UPoly::from_roots(&vec_of(roots)), nvars, var)
}

fn small_poly(nvars: usize) -> impl Strategy<Value = MPoly> {
    (0u32..=2).prop_flat_map(move |d| {
        let mut monos = Vec::new();
        for k in 0..=d {
            hypcert::fanlab::monomial::for_each_monomial(nvars, k, &mut |m: &Monomial| monos.push(m.0.clone()));
        }
        prop::collection::vec(-4i64..=4, monos.len())
            .prop_map(move |c| MPoly::from_terms(nvars, monos.iter().cloned().zip(c.into_iter().map(int))))
    })
}

/// `(f(x0), g(x0, x1))` with `g` monic in `x1` of lower `x1`-degree cross term: a complete intersection,
/// so every assignment of images defines a homomorphism.
fn complete_intersection() -> impl Strategy<Value = QuotientAlgebra> {
    (prop::collection::vec(-2i64..=2, 1..=3), prop::collection::vec(-2i64..=2, 1..=2), -2i64..=2).prop_map(
        |(r0, r1, c)| {
            let f = univariate(&r0, 2, 0);
            let cross = if r1.len() >= 2 { format!("{c}*x0*x1") } else { format!("{c}*x0") };
            let g = &univariate(&r1, 2, 1) + &MPoly::parse(&cross, 2).unwrap();
            quotient_algebra(&buchberger(&[f, g], MonomialOrder::GrLex).unwrap()).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(config(50))]

    #[test]
    fn deformation_form_ignores_lift_choice(
        a in complete_intersection(),
        h0 in small_poly(2), h1 in small_poly(2),
        shifts in prop::collection::vec(prop::collection::vec(-5i64..=5, 12), 1),
    ) {
        let phi = DeformationHom::new(vec![h0, h1]);
        let def = apply_deformation(&a, &phi).unwrap();
        let nil = a.nilradical_basis().unwrap();
        let d = a.dim();
        let shifts: Vec<Vec<Rat>> = nil.iter().map(|_| vec_of(&shifts[0][..d.min(12)])).collect();
        prop_assume!(d <= 12);
        let m0 = deformation_form_with_lifts(&def, &nil, &[]).unwrap();
        let m1 = deformation_form_with_lifts(&def, &nil, &shifts).unwrap();
        prop_assert_eq!(m0, m1);
    }

    #[test]
    fn trace_commutes_with_projection(
        a in complete_intersection(),
        h0 in small_poly(2), h1 in small_poly(2),
        v in prop::collection::vec(-3i64..=3, 12), w in prop::collection::vec(-3i64..=3, 12),
        y in prop::collection::vec(-3i64..=3, 12), z in prop::collection::vec(-3i64..=3, 12),
    ) {
        let d = a.dim();
        prop_assume!(d <= 12);
        let def = apply_deformation(&a, &DeformationHom::new(vec![h0, h1])).unwrap();
        let (v, w, y, z) = (vec_of(&v[..d]), vec_of(&w[..d]), vec_of(&y[..d]), vec_of(&z[..d]));
        let lifted = def.trace_of_product((&v, &w), (&y, &z));
        let product = &a.poly_of(&v) * &a.poly_of(&y);
        prop_assert_eq!(lifted.re, a.trace_of(&product));
    }
}

proptest! {
    #![proptest_config(config(30))]

    #[test]
    fn trace_form_of_univariate_quotient_is_hermite(f in upoly()) {
        let n = f.degree() as usize;
        prop_assume!(n <= 4);
        let monic = f.monic();
        let a = quotient_algebra(&buchberger(&[MPoly::from_upoly(&monic, 1, 0)], MonomialOrder::GrLex).unwrap()).unwrap();
        let order: Vec<usize> = a.basis().iter().map(|m| m.0[0] as usize).collect();
        let h = hermite_matrix(&f).unwrap();
        let t = a.trace_form();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(t.get(i, j), h.get(order[i], order[j]));
            }
        }
    }
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn socle_shortcut_implies_strict(r in nonzero_rat(), h1 in small_poly(2), h2 in small_poly(2)) {
        // circle of radius r and the tangent-type conic x^2 - r x
        let g1 = MPoly::parse(&format!("{} - x0^2 - x1^2", fmt_rat(&(&r * &r))), 2).unwrap();
        let g2 = MPoly::parse(&format!("x0^2 - ({})*x0", fmt_rat(&r)), 2).unwrap();
        let a = quotient_algebra(&buchberger(&[g1, g2], MonomialOrder::GrLex).unwrap()).unwrap();
        let points = vec![vec![Rat::zero(), r.clone()], vec![Rat::zero(), -r.clone()], vec![r.clone(), Rat::zero()]];
        let phi = DeformationHom::new(vec![h1, h2]);
        let s = socle_shortcut(&a, &points, &phi, &MPoly::parse("x0*x1", 2).unwrap()).unwrap();
        let strict = is_strict(&a, &phi).unwrap().verdict;
        if s.verdict == SocleVerdict::AppliesAndStrict {
            prop_assert!(strict);
        }
        prop_assert_ne!(s.verdict, SocleVerdict::NotApplicable);
        prop_assert_eq!(deformation_form(&a, &phi).unwrap().matrix.dim(), 1);
    }
}

#[test]
fn identity_matrix_has_full_inertia() {
    let m = SymMat::from_rows(&identity(3)).unwrap();
    assert_eq!(descartes_inertia(&m.to_rows()), (3, 0, 0));
}
