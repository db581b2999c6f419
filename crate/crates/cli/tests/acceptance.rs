//! Acceptance gate: one test per headline construction, each printing a
//! labeled pass line and holding to a wall-clock budget. Every assertion
//! is an exact-arithmetic fact; nothing here is approximate.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symmetroid::arith::GaussianRational;
use symmetroid::error::Error;
use symmetroid::ideal::{buchberger, TermOrder};
use symmetroid::linalg::Mat;
use symmetroid::pencil::{
    parse_pencil_file, ComponentClaim, RankComponentClaim, SymmetricPencil,
};
use symmetroid::poly::MultiPoly;
use symmetroid::solve::ProjPoint;
use symmetroid::spectra::{
    boundary_membership, classify_configuration, find_infeasibility_certificate, inertia,
    pd_search, real_points_on_claim, sylvester_positive_definite,
    verify_infeasibility_certificate, SpectraMembership, SurfaceConicConfiguration,
};
use symmetroid::web::{
    base_configuration, classify_rank2_pencil, web_base_locus, web_strata, web_vars, QuadricForm,
};
use symmetroid_cli::registry::{resolve, ResolvedExample};

const SEED: u64 = 7;

const FIXED_IDS: [&str; 7] = [
    "double-plane",
    "max-smooth-1",
    "max-smooth-2",
    "double-p3",
    "two-p3s",
    "lambda-1",
    "lambda-neg-1",
];

/// Identity block padded with a sixth, identically zero coefficient
/// matrix: the determinant never sees x5, so the quartic is a cone.
const CONE_PENCIL: &str = "n=6\n\
    A0:\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n\
    A1:\n0 0 1 0\n0 0 0 0\n1 0 0 0\n0 0 0 0\n\
    A2:\n0 0 0 1\n0 0 0 0\n0 0 0 0\n1 0 0 0\n\
    A3:\n0 0 0 0\n0 0 1 0\n0 1 0 0\n0 0 0 0\n\
    A4:\n0 0 0 0\n0 0 0 1\n0 0 0 0\n0 1 0 0\n";

/// Web y0^2, y1^2, 2 y0 y2, 2 y1 y3: base locus is the line y0 = y1 = 0.
const CURVE_BASE_PENCIL: &str = "n=4\n\
    A0:\n1 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n\
    A1:\n0 0 0 0\n0 1 0 0\n0 0 0 0\n0 0 0 0\n\
    A2:\n0 0 1 0\n0 0 0 0\n1 0 0 0\n0 0 0 0\n\
    A3:\n0 0 0 0\n0 0 0 1\n0 0 0 0\n0 1 0 0\n";

fn budgeted(name: &str, secs: u64, f: impl FnOnce()) {
    let budget = Duration::from_secs(secs);
    let start = Instant::now();
    f();
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "FAIL  {name}: {elapsed:?} exceeds the {secs}s budget"
    );
    println!("PASS  {name}  ({elapsed:?} of {secs}s budget)");
}

fn p(s: &str) -> MultiPoly {
    MultiPoly::parse(s).expect("test polynomial parses")
}

fn gr(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

fn br(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn example(id: &str) -> ResolvedExample {
    resolve(id, None).expect("catalogue example resolves")
}

fn claim<'a>(ex: &'a ResolvedExample, name: &str) -> &'a ComponentClaim {
    &ex.components
        .iter()
        .find(|c| c.claim.name == name)
        .expect("claimed component exists")
        .claim
}

fn point(re: &[i64; 4], im: &[i64; 4]) -> ProjPoint {
    let coords = re
        .iter()
        .zip(im)
        .map(|(&a, &b)| GaussianRational::new(br(a), br(b)))
        .collect();
    ProjPoint::new(coords).expect("expected point is nonzero")
}

fn reduced_gb(gens: &[MultiPoly]) -> Vec<MultiPoly> {
    buchberger(gens, TermOrder::Grevlex)
        .expect("basis completes")
        .gens()
        .to_vec()
}

fn assignment(
    vars: &[String],
    coords: &[GaussianRational],
) -> BTreeMap<String, GaussianRational> {
    vars.iter().cloned().zip(coords.iter().cloned()).collect()
}

fn rational_coords(pt: &[BigRational]) -> Vec<GaussianRational> {
    pt.iter().map(|c| GaussianRational::from_rational(c.clone())).collect()
}

/// Rank is upper-semicontinuous: every sample stays at or below the
/// claimed rank, and a generic sample attains it exactly.
fn assert_rank_profile(pencil: &SymmetricPencil, c: &ComponentClaim, expected: usize) {
    let vars = pencil.vars().to_vec();
    let mut max_rank = 0;
    for pt in c.sample_points(&vars, 4, SEED).expect("samples") {
        let r = pencil.rank_at(&pt).expect("rank");
        assert!(r <= expected, "{}: rank {r} exceeds {expected}", c.name);
        max_rank = max_rank.max(r);
    }
    assert_eq!(max_rank, expected, "{}: no sample attains rank {expected}", c.name);
}

#[test]
fn every_partial_derivative_lies_in_the_doubled_space_ideal() {
    budgeted("jacobian-containment", 2, || {
        let ex = example("double-p3");
        let jac = ex.pencil.jacobian_ideal().expect("partials");
        assert_eq!(jac.len(), 6);
        let doubled = claim(&ex, "doubled-three-space");
        assert!(doubled.contains_ideal(&jac).expect("containment decides"));
        let wrong = ComponentClaim::new("off-locus", vec![p("x0")], 3);
        assert!(!wrong.contains_ideal(&jac).expect("containment decides"));
    });
}

#[test]
fn rank_two_curve_multiplicity_splits_one_three_six() {
    budgeted("rank-curve-multiplicities", 10, || {
        let ex = example("double-p3");
        let claims = vec![
            RankComponentClaim {
                name: "plane-h1".into(),
                linear_forms: vec![p("x0"), p("x1"), p("x2")],
                expected_multiplicity: 1,
            },
            RankComponentClaim {
                name: "plane-h2".into(),
                linear_forms: vec![p("x2"), p("x4"), p("x5")],
                expected_multiplicity: 3,
            },
            RankComponentClaim {
                name: "plane-h3".into(),
                linear_forms: vec![p("x1"), p("x2"), p("x5")],
                expected_multiplicity: 6,
            },
        ];
        let report = ex
            .pencil
            .rank_locus_multiplicities(3, &claims, SEED)
            .expect("multiplicity report");
        let measured: Vec<(&str, usize)> = report
            .multiplicities
            .iter()
            .map(|(n, m)| (n.as_str(), *m))
            .collect();
        assert_eq!(
            measured,
            vec![("plane-h1", 1), ("plane-h2", 3), ("plane-h3", 6)]
        );
        assert_eq!(report.total_degree, 10);
    });
}

#[test]
fn smooth_surface_pipeline_reproduces_every_stage_exactly() {
    budgeted("smooth-surface-pipeline", 10, || {
        let ex = example("max-smooth-1");
        let pencil = &ex.pencil;
        let surface = claim(&ex, "quadric-surface");
        let jac = pencil.jacobian_ideal().expect("partials");
        assert!(surface.contains_ideal(&jac).expect("containment decides"));
        assert_rank_profile(pencil, surface, 2);

        let base = web_base_locus(pencil, SEED).expect("base locus");
        assert!(!base.residual);
        assert_eq!(base.total_degree, 4);
        assert_eq!(base.solutions.len(), 4);
        assert!(base.solutions.iter().all(|s| s.multiplicity == 1));
        let expected = [
            point(&[1, 0, 0, 0], &[0, 1, 0, 0]),
            point(&[1, 0, 0, 0], &[0, -1, 0, 0]),
            point(&[0, 0, 1, 0], &[0, 0, 0, 1]),
            point(&[0, 0, 1, 0], &[0, 0, 0, -1]),
        ];
        for e in &expected {
            assert!(
                base.solutions.iter().any(|s| s.point == *e),
                "a claimed base point is missing"
            );
        }

        let strata =
            web_strata(pencil, &base_configuration(&base)).expect("strata");
        assert_eq!(strata.len(), 3);
        let mut dims: Vec<usize> =
            strata.iter().map(|s| s.intersection.affine_dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![3, 3, 4]);
        let dim4 = strata
            .iter()
            .find(|s| s.intersection.affine_dim == 4)
            .expect("surface stratum");
        assert_eq!(
            reduced_gb(&dim4.intersection.ideal()),
            reduced_gb(&surface.gens)
        );
        for name in ["conic-plus", "conic-minus"] {
            let gb = reduced_gb(&claim(&ex, name).gens);
            assert!(
                strata
                    .iter()
                    .filter(|s| s.intersection.affine_dim == 3)
                    .any(|s| reduced_gb(&s.intersection.ideal()) == gb),
                "{name} matches no stratum ideal"
            );
        }

        let witness = pd_search(pencil, 200, SEED)
            .expect("search runs")
            .expect("definite point exists");
        assert_eq!(witness, vec![br(1), br(0), br(0), br(0), br(0)]);
        let conics = [
            claim(&ex, "conic-plus").clone(),
            claim(&ex, "conic-minus").clone(),
        ];
        let cfg = classify_configuration(pencil, surface, &conics, Some(&witness), SEED)
            .expect("configuration decides");
        assert_eq!(cfg, SurfaceConicConfiguration::SurfaceOutsideConicsOnBoundary);
    });
}

#[test]
fn boundary_surface_pipeline_derives_its_conics_from_the_strata() {
    budgeted("boundary-surface-pipeline", 10, || {
        let ex = example("max-smooth-2");
        let pencil = &ex.pencil;
        let surface = claim(&ex, "quadric-surface");
        let jac = pencil.jacobian_ideal().expect("partials");
        assert!(surface.contains_ideal(&jac).expect("containment decides"));

        let base = web_base_locus(pencil, SEED).expect("base locus");
        assert!(!base.residual);
        assert_eq!(base.total_degree, 4);
        assert_eq!(base.solutions.len(), 4);
        for s in &base.solutions {
            assert!(
                base.solutions.iter().any(|t| t.point == s.point.conj()),
                "base scheme is not conjugation-closed"
            );
        }

        let strata =
            web_strata(pencil, &base_configuration(&base)).expect("strata");
        let dim4 = strata
            .iter()
            .find(|s| s.intersection.affine_dim == 4)
            .expect("surface stratum");
        assert_eq!(
            reduced_gb(&dim4.intersection.ideal()),
            reduced_gb(&surface.gens)
        );
        let conics: Vec<ComponentClaim> = strata
            .iter()
            .filter(|s| s.intersection.affine_dim == 3)
            .map(|s| {
                ComponentClaim::new(
                    &format!("stratum-{}", s.label),
                    s.intersection.ideal(),
                    2,
                )
            })
            .collect();
        assert_eq!(conics.len(), 2);

        let witness = pd_search(pencil, 200, SEED)
            .expect("search runs")
            .expect("definite point exists");
        let cfg = classify_configuration(pencil, surface, &conics, Some(&witness), SEED)
            .expect("configuration decides");
        assert_eq!(cfg, SurfaceConicConfiguration::SurfaceOnBoundaryOneConic);
    });
}

#[test]
fn lambda_sign_decides_conic_reality_and_spectrahedron_feasibility() {
    budgeted("lambda-reality-dichotomy", 10, || {
        let plus = example("lambda-1");
        let vars = plus.pencil.vars().to_vec();
        let witness = pd_search(&plus.pencil, 200, SEED)
            .expect("search runs")
            .expect("positive side has a definite point");
        let gram = plus
            .pencil
            .gram_at_coords(&rational_coords(&witness))
            .expect("gram");
        assert!(sylvester_positive_definite(&gram).expect("minor test"));
        for name in ["conic-plus", "conic-minus"] {
            let c = claim(&plus, name);
            let pts = real_points_on_claim(c, &vars, 3, 20, SEED).expect("real points");
            assert_eq!(pts.len(), 3);
            for pt in &pts {
                let asn = assignment(&vars, &rational_coords(pt));
                for g in &c.gens {
                    assert!(
                        g.eval(&asn).expect("evaluates").is_zero(),
                        "sample point misses the conic"
                    );
                }
            }
        }

        let minus = example("lambda-neg-1");
        let cert = find_infeasibility_certificate(&minus.pencil)
            .expect("search runs")
            .expect("negative side has a certificate");
        assert!(verify_infeasibility_certificate(&minus.pencil, &cert).expect("verifies"));
        for name in ["conic-plus", "conic-minus"] {
            let err = real_points_on_claim(claim(&minus, name), &vars, 3, 20, SEED)
                .expect_err("negative side has no real conic points");
            assert!(
                matches!(err, Error::NoSamplePoint(_)),
                "expected a no-real-points verdict, got {err:?}"
            );
        }
    });
}

#[test]
fn conjugate_spaces_example_matches_ranks_base_and_boundary() {
    budgeted("conjugate-spaces-example", 10, || {
        let ex = example("two-p3s");
        let pencil = &ex.pencil;
        let vars = pencil.vars().to_vec();
        let jac = pencil.jacobian_ideal().expect("partials");
        for (name, rank) in [
            ("three-space", 3),
            ("three-space-conjugate", 3),
            ("quadric-surface", 2),
        ] {
            let c = claim(&ex, name);
            assert!(
                c.contains_ideal(&jac).expect("containment decides"),
                "{name} misses a partial"
            );
            assert_rank_profile(pencil, c, rank);
        }

        let base = web_base_locus(pencil, SEED).expect("base locus");
        assert!(!base.residual);
        assert_eq!(base.total_degree, 4);
        assert_eq!(base.solutions.len(), 2);
        assert!(base.solutions.iter().all(|s| s.multiplicity == 2));
        let expected = [
            point(&[0, 0, 1, 0], &[0, 0, 0, 1]),
            point(&[0, 0, 1, 0], &[0, 0, 0, -1]),
        ];
        for e in &expected {
            assert!(
                base.solutions.iter().any(|s| s.point == *e),
                "a claimed base point is missing"
            );
        }
        assert_eq!(base.solutions[0].point.conj(), base.solutions[1].point);

        let witness = pd_search(pencil, 200, SEED)
            .expect("search runs")
            .expect("definite point exists");
        let surface = claim(&ex, "quadric-surface");
        let pts = real_points_on_claim(surface, &vars, 5, 20, SEED).expect("real points");
        assert_eq!(pts.len(), 5);
        for pt in &pts {
            assert_eq!(
                boundary_membership(pencil, pt, Some(&witness)).expect("membership"),
                SpectraMembership::Boundary
            );
        }
    });
}

#[test]
fn double_plane_pencil_drops_rank_on_a_conic() {
    budgeted("double-plane-rank-drop", 5, || {
        let ex = example("double-plane");
        let pencil = &ex.pencil;
        let minors = pencil.minor_ideal(3).expect("minors");
        assert_eq!(minors.len(), 10);
        let doubled = claim(&ex, "doubled-plane");
        assert!(doubled.contains_ideal(&minors).expect("containment decides"));
        let jac = pencil.jacobian_ideal().expect("partials");
        let conic = claim(&ex, "rank-one-conic");
        assert!(conic.contains_ideal(&jac).expect("containment decides"));
        assert_rank_profile(pencil, conic, 1);
        assert_rank_profile(pencil, doubled, 2);
    });
}

#[test]
fn random_transformations_preserve_the_classified_invariants() {
    budgeted("invariance-properties", 30, || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        trichotomy_class_is_congruence_invariant(&mut rng);
        corank_one_kernels_lie_in_the_base_locus();
        symbolic_minors_agree_with_numeric_rank(&mut rng);
        euler_identity_holds_for_every_catalogue_quartic();
        sylvester_and_inertia_agree_on_definiteness(&mut rng);
    });
}

fn wq(s: &str) -> QuadricForm {
    QuadricForm::from_poly(&p(s), &web_vars()).expect("web quadric")
}

fn random_mat(rng: &mut ChaCha8Rng) -> Mat {
    let rows: Vec<Vec<GaussianRational>> = (0..4)
        .map(|_| (0..4).map(|_| gr(rng.gen_range(-3..=3))).collect())
        .collect();
    Mat::from_rows(rows).expect("4x4 matrix")
}

fn random_invertible(rng: &mut ChaCha8Rng) -> Mat {
    loop {
        let m = random_mat(rng);
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

fn congruent(q: &QuadricForm, m: &Mat) -> QuadricForm {
    QuadricForm::new(m.transpose().matmul(q.gram()).matmul(m))
        .expect("congruent gram stays symmetric")
}

fn combine(a: i64, q1: &QuadricForm, b: i64, q2: &QuadricForm) -> QuadricForm {
    let (ga, gb) = (gr(a), gr(b));
    let gram = Mat::from_fn(4, 4, |i, j| {
        let mut v = q1.gram().get(i, j) * &ga;
        v += &(q2.gram().get(i, j) * &gb);
        v
    });
    QuadricForm::new(gram).expect("pencil member stays symmetric")
}

/// The base-locus class of a pencil of rank <= 2 quadrics depends only on
/// the pencil, not on the chosen basis or the coordinates on P^3.
fn trichotomy_class_is_congruence_invariant(rng: &mut ChaCha8Rng) {
    let cases = [
        (3, wq("y0^2"), wq("y1^2")),
        (2, wq("y0^2"), wq("y0*y1")),
        (1, wq("y0*y1"), wq("y0*y2")),
    ];
    for (case, q1, q2) in &cases {
        let standard = classify_rank2_pencil(q1, q2).expect("classifies");
        assert_eq!(standard.case_number(), *case);
        assert_eq!(standard.rank1_members(), *case - 1);
        for _ in 0..10 {
            let m = random_invertible(rng);
            let c1 = congruent(q1, &m);
            let c2 = congruent(q2, &m);
            let (a, b, c, d) = loop {
                let (a, b, c, d) = (
                    rng.gen_range(-3..=3i64),
                    rng.gen_range(-3..=3i64),
                    rng.gen_range(-3..=3i64),
                    rng.gen_range(-3..=3i64),
                );
                if a * d - b * c != 0 {
                    break (a, b, c, d);
                }
            };
            let p1 = combine(a, &c1, b, &c2);
            let p2 = combine(c, &c1, d, &c2);
            let class = classify_rank2_pencil(&p1, &p2).expect("classifies");
            assert_eq!(class.case_number(), *case, "class changed under transform");
            assert_eq!(class.rank1_members(), *case - 1);
        }
    }
}

/// At a corank-1 singular point p the adjugate of A(p) is a rank-1 matrix
/// c yy^T with y spanning the kernel, and each partial of det equals
/// c y^T A_i y; so the kernel generator is a base point of the web.
fn corank_one_kernels_lie_in_the_base_locus() {
    let yv = web_vars();
    let cases = [
        ("double-p3", vec!["doubled-three-space"]),
        ("two-p3s", vec!["three-space", "three-space-conjugate"]),
    ];
    for (id, names) in &cases {
        let ex = example(id);
        let vars = ex.pencil.vars().to_vec();
        let web = ex.pencil.quadric_web();
        for name in names {
            let c = claim(&ex, name);
            let mut corank_one_seen = false;
            for pt in c.sample_points(&vars, 4, SEED).expect("samples") {
                let gram = ex.pencil.gram_at(&pt).expect("gram");
                let kernel = gram.kernel_basis();
                // Samples can fall into deeper strata; the adjugate
                // argument applies only where the corank is exactly 1.
                if kernel.len() != 1 {
                    continue;
                }
                corank_one_seen = true;
                let asn = assignment(&yv, &kernel[0]);
                for q in &web {
                    assert!(
                        q.eval(&asn).expect("evaluates").is_zero(),
                        "kernel generator misses the base locus"
                    );
                }
            }
            assert!(corank_one_seen, "{name}: no corank-1 sample drawn");
        }
    }
}

/// The symbolic route (all k x k minors vanish) and the numeric route
/// (Gaussian elimination on A(p)) must agree at every point: rank < k
/// exactly when the k-minors all vanish.
fn symbolic_minors_agree_with_numeric_rank(rng: &mut ChaCha8Rng) {
    let mut pencils: Vec<SymmetricPencil> =
        FIXED_IDS.iter().map(|id| example(id).pencil).collect();
    let half_odd = BigRational::new(BigInt::from(5), BigInt::from(2));
    pencils.push(
        resolve("lambda-family", Some(&half_odd))
            .expect("family resolves")
            .pencil,
    );
    for pencil in &pencils {
        let vars = pencil.vars().to_vec();
        let minors: Vec<(usize, Vec<MultiPoly>)> = (2..=4)
            .map(|k| (k, pencil.minor_ideal(k).expect("minors")))
            .collect();
        for _ in 0..50 {
            let coords: Vec<GaussianRational> = loop {
                let c: Vec<GaussianRational> = (0..vars.len())
                    .map(|_| gr(rng.gen_range(-4..=4)))
                    .collect();
                if c.iter().any(|x| !x.is_zero()) {
                    break c;
                }
            };
            let rank = pencil
                .rank_at(&ProjPoint::new(coords.clone()).expect("nonzero"))
                .expect("rank");
            let asn = assignment(&vars, &coords);
            for (k, ms) in &minors {
                let all_vanish = ms
                    .iter()
                    .all(|m| m.eval(&asn).expect("evaluates").is_zero());
                assert_eq!(
                    all_vanish,
                    rank < *k,
                    "numeric rank {rank} disagrees with {k}-minors"
                );
            }
        }
    }
}

/// det A(x) is homogeneous of degree 4, so sum x_i d/dx_i f = 4 f.
fn euler_identity_holds_for_every_catalogue_quartic() {
    for id in FIXED_IDS {
        let ex = example(id);
        let f = ex.pencil.quartic().expect("determinant");
        let mut sum = MultiPoly::zero();
        for v in ex.pencil.vars() {
            if f.vars().contains(v) {
                let d = f.diff(v).expect("differentiates");
                sum = &sum + &(&MultiPoly::var(v) * &d);
            }
        }
        assert!((&sum - &f.scale(&gr(4))).is_zero(), "{id} breaks the identity");
    }
}

/// Leading-principal-minor positivity and the inertia count are computed
/// by unrelated routines; they must name the same matrices definite.
fn sylvester_and_inertia_agree_on_definiteness(rng: &mut ChaCha8Rng) {
    for round in 0..200 {
        let m = if round % 2 == 0 {
            let mut rows = vec![vec![gr(0); 4]; 4];
            for i in 0..4 {
                for j in i..4 {
                    let v = gr(rng.gen_range(-9..=9));
                    rows[i][j] = v.clone();
                    rows[j][i] = v;
                }
            }
            Mat::from_rows(rows).expect("symmetric matrix")
        } else {
            let a = random_mat(rng);
            let g = a.transpose().matmul(&a);
            let one = gr(1);
            Mat::from_fn(4, 4, |i, j| {
                let mut v = g.get(i, j).clone();
                if i == j {
                    v += &one;
                }
                v
            })
        };
        let by_minors = sylvester_positive_definite(&m).expect("minor route");
        let ine = inertia(&m).expect("inertia route");
        assert_eq!(by_minors, ine.positive == 4, "the two routes disagree");
        if round % 2 == 1 {
            assert!(by_minors, "A^T A + I must be positive definite");
        }
    }
}

#[test]
fn degenerate_inputs_are_rejected_with_exact_certificates() {
    budgeted("degenerate-input-rejection", 5, || {
        let cone = parse_pencil_file(CONE_PENCIL).expect("parses");
        let vertex = cone.cone_vertex_space().expect("vertex space");
        assert_eq!(vertex.len(), 1);
        assert!(vertex[0][..5].iter().all(|c| c.is_zero()));
        assert!(!vertex[0][5].is_zero());

        let curve = parse_pencil_file(CURVE_BASE_PENCIL).expect("parses");
        assert!(matches!(
            web_base_locus(&curve, SEED),
            Err(Error::PositiveDimensional)
        ));

        let feasible = example("max-smooth-1").pencil;
        let zero = Mat::zeros(4, 4);
        assert!(!verify_infeasibility_certificate(&feasible, &zero).expect("decides"));
        let indefinite = Mat::from_fn(4, 4, |i, j| {
            if i == j {
                gr(if i == 1 { -1 } else { 1 })
            } else {
                gr(0)
            }
        });
        assert!(!verify_infeasibility_certificate(&feasible, &indefinite).expect("decides"));
        let identity = Mat::identity(4);
        assert!(!verify_infeasibility_certificate(&feasible, &identity).expect("decides"));
        let wrong_shape = Mat::zeros(3, 3);
        assert!(verify_infeasibility_certificate(&feasible, &wrong_shape).is_err());

        let infeasible = example("lambda-neg-1").pencil;
        let cert = find_infeasibility_certificate(&infeasible)
            .expect("search runs")
            .expect("certificate exists");
        assert!(verify_infeasibility_certificate(&infeasible, &cert).expect("verifies"));
        assert!(
            !verify_infeasibility_certificate(&feasible, &cert).expect("decides"),
            "a certificate must be specific to its pencil"
        );
    });
}
