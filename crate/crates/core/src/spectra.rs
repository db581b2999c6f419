//! Exact real symmetric linear algebra for spectrahedral questions: inertia
//! and definiteness, search for definite points of a pencil, duality
//! certificates for an empty spectrahedron, membership of points relative
//! to the spectrahedral boundary, and real rational points on claimed
//! components.
//!
//! Key operations: `inertia` counts eigenvalue signs exactly through the
//! characteristic polynomial and Descartes' rule (exact for real symmetric
//! matrices since all roots are real). `pd_search` scans a deterministic
//! candidate ladder for a definite point. `find_infeasibility_certificate`
//! solves the trace-orthogonality system and looks for a semidefinite
//! member of the solution space. `classify_configuration` places a surface
//! and two conics of singular points relative to the spectrahedron.
//!
//! Design notes: everything is rational arithmetic; no floating point and
//! no numerical eigensolvers. Real points on components are found by a
//! height-bounded primitive integer sweep on the restricted quadric,
//! short-circuited by a definiteness test when no real point can exist,
//! then multiplied through rational line sections.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::GaussianRational;
use crate::error::Error;
use crate::linalg::Mat;
use crate::pencil::{kernel_of_linear_forms, restrict_to_span, ComponentClaim, SymmetricPencil};
use crate::poly::{det_cofactor, MultiPoly};
use crate::solve::UniPoly;
use crate::web::mat_from_vec10;

// ---------------------------------------------------------------------------
// Inertia and definiteness
// ---------------------------------------------------------------------------

/// Signature of a real symmetric matrix: counts of positive, negative, and
/// zero eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    PositiveSemidefinite { rank: usize },
    NegativeDefinite,
    NegativeSemidefinite { rank: usize },
    Indefinite,
    Zero,
}

fn require_real_symmetric(m: &Mat) -> Result<(), Error> {
    if m.rows() != m.cols() {
        return Err(Error::MatrixShape("inertia needs a square matrix".into()));
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric(0));
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m.get(i, j).is_real() {
                return Err(Error::NotReal("inertia needs a real matrix".into()));
            }
        }
    }
    Ok(())
}

/// Coefficients of det(t I - M), constant term first.
fn char_poly_coeffs(m: &Mat) -> Result<Vec<BigRational>, Error> {
    let n = m.rows();
    let t = MultiPoly::var("t");
    let entries: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = MultiPoly::constant(-m.get(i, j).clone());
                    if i == j {
                        e = &e + &t;
                    }
                    e
                })
                .collect()
        })
        .collect();
    let u = UniPoly::from_multipoly(&det_cofactor(&entries)?)?;
    Ok((0..=n).map(|k| u.coeff(k).re().clone()).collect())
}

/// Sign variations in a coefficient sequence, zeros skipped.
fn sign_variations(coeffs: &[BigRational]) -> usize {
    let zero = BigRational::zero();
    let mut last: Option<bool> = None;
    let mut v = 0;
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        let s = *c > zero;
        if let Some(prev) = last {
            if prev != s {
                v += 1;
            }
        }
        last = Some(s);
    }
    v
}

/// Exact inertia via Descartes' rule on the characteristic polynomial; the
/// count is exact because all roots of a real symmetric matrix are real.
pub fn inertia(m: &Mat) -> Result<Inertia, Error> {
    require_real_symmetric(m)?;
    let coeffs = char_poly_coeffs(m)?;
    let n = m.rows();
    let zero = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(n);
    let positive = sign_variations(&coeffs);
    let flipped: Vec<BigRational> = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
        .collect();
    let negative = sign_variations(&flipped);
    Ok(Inertia { positive, negative, zero })
}

pub fn definiteness(m: &Mat) -> Result<Definiteness, Error> {
    let ine = inertia(m)?;
    let n = m.rows();
    Ok(match (ine.positive, ine.negative) {
        (p, 0) if p == n => Definiteness::PositiveDefinite,
        (0, q) if q == n => Definiteness::NegativeDefinite,
        (0, 0) => Definiteness::Zero,
        (p, 0) => Definiteness::PositiveSemidefinite { rank: p },
        (0, q) => Definiteness::NegativeSemidefinite { rank: q },
        _ => Definiteness::Indefinite,
    })
}

pub fn is_psd(m: &Mat) -> Result<bool, Error> {
    Ok(inertia(m)?.negative == 0)
}

/// Sylvester's criterion: positive definiteness through the leading
/// principal minors. Independent of the characteristic-polynomial route,
/// so the two can be cross-checked.
pub fn sylvester_positive_definite(m: &Mat) -> Result<bool, Error> {
    require_real_symmetric(m)?;
    let zero = BigRational::zero();
    for k in 1..=m.rows() {
        let sub = Mat::from_fn(k, k, |i, j| m.get(i, j).clone());
        let d = sub.det()?;
        if *d.re() <= zero {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Search for a definite point
// ---------------------------------------------------------------------------

fn to_gaussian(coords: &[BigRational]) -> Vec<GaussianRational> {
    coords.iter().map(|r| GaussianRational::from_rational(r.clone())).collect()
}

/// Looks for real coordinates where the pencil matrix is positive
/// definite, scanning unit vectors, 0/1 vectors, and then seeded random
/// rationals with denominators up to 8. A negative definite hit is
/// returned negated. `budget` caps the number of candidates tested.
pub fn pd_search(
    pencil: &SymmetricPencil,
    budget: usize,
    seed: u64,
) -> Result<Option<Vec<BigRational>>, Error> {
    let n = pencil.num_vars();
    let mut tested = 0usize;
    let test = |coords: Vec<BigRational>,
                    tested: &mut usize|
     -> Result<Option<Vec<BigRational>>, Error> {
        if *tested >= budget || coords.iter().all(|c| c.is_zero()) {
            return Ok(None);
        }
        *tested += 1;
        let gram = pencil.gram_at_coords(&to_gaussian(&coords))?;
        let ine = inertia(&gram)?;
        if ine.positive == 4 {
            return Ok(Some(coords));
        }
        if ine.negative == 4 {
            return Ok(Some(coords.iter().map(|c| -c).collect()));
        }
        Ok(None)
    };
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    for i in 0..n {
        let mut c = vec![int(0); n];
        c[i] = int(1);
        if let Some(w) = test(c, &mut tested)? {
            return Ok(Some(w));
        }
    }
    for mask in 1u64..(1u64 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let c: Vec<BigRational> =
            (0..n).map(|i| int(i64::from((mask >> i) & 1 == 1))).collect();
        if let Some(w) = test(c, &mut tested)? {
            return Ok(Some(w));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x70647372);
    while tested < budget {
        let c: Vec<BigRational> = (0..n)
            .map(|_| {
                BigRational::new(
                    BigInt::from(rng.gen_range(-8i64..=8)),
                    BigInt::from(rng.gen_range(1i64..=8)),
                )
            })
            .collect();
        if let Some(w) = test(c, &mut tested)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Infeasibility certificates
// ---------------------------------------------------------------------------

fn trace_product(a: &Mat, b: &Mat) -> GaussianRational {
    let mut s = GaussianRational::zero();
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            s += &(a.get(r, c) * b.get(c, r));
        }
    }
    s
}

/// A valid certificate that no point of the pencil is positive definite:
/// a nonzero real symmetric PSD matrix with trace(A_i B) = 0 for every
/// coefficient matrix. Any failed condition yields false.
pub fn verify_infeasibility_certificate(
    pencil: &SymmetricPencil,
    b: &Mat,
) -> Result<bool, Error> {
    if b.rows() != 4 || b.cols() != 4 {
        return Err(Error::MatrixShape("certificates are 4x4 matrices".into()));
    }
    if b.is_zero() || !b.is_symmetric() {
        return Ok(false);
    }
    for i in 0..4 {
        for j in 0..4 {
            if !b.get(i, j).is_real() {
                return Ok(false);
            }
        }
    }
    if inertia(b)?.negative != 0 {
        return Ok(false);
    }
    for a in pencil.coefficient_matrices() {
        if !trace_product(a, b).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches the solution space of the trace conditions for a semidefinite
/// member: the basis vectors, their negatives, and pairwise sums and
/// differences.
pub fn find_infeasibility_certificate(
    pencil: &SymmetricPencil,
) -> Result<Option<Mat>, Error> {
    let mut rows = Vec::new();
    for a in pencil.coefficient_matrices() {
        let mut row = Vec::with_capacity(10);
        for i in 0..4 {
            for j in i..4 {
                row.push(if i == j { a.get(i, i).clone() } else { a.get(i, j) + a.get(j, i) });
            }
        }
        rows.push(row);
    }
    let kernel = Mat::from_rows(rows)?.kernel_basis();
    let mut candidates: Vec<Mat> = kernel.iter().map(|v| mat_from_vec10(v)).collect();
    for i in 0..kernel.len() {
        for j in (i + 1)..kernel.len() {
            let a = mat_from_vec10(&kernel[i]);
            let b = mat_from_vec10(&kernel[j]);
            candidates.push(a.add(&b));
            candidates.push(a.add(&b.scale(&-GaussianRational::one())));
        }
    }
    for b in candidates {
        if b.is_zero() {
            continue;
        }
        let ine = inertia(&b)?;
        if ine.negative == 0 {
            return Ok(Some(b));
        }
        if ine.positive == 0 {
            return Ok(Some(b.scale(&-GaussianRational::one())));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Membership relative to the spectrahedral boundary
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectraMembership {
    Interior,
    Boundary,
    Outside,
}

/// Classifies a real point against the spectrahedron of the pencil. A
/// positive definite reference point is required so that the semidefinite
/// side is well defined; without one the notion is ambiguous and an error
/// is returned. Semidefinite matrices of either sign classify the same
/// way because x and -x are one projective point.
pub fn boundary_membership(
    pencil: &SymmetricPencil,
    point: &[BigRational],
    reference: Option<&[BigRational]>,
) -> Result<SpectraMembership, Error> {
    let Some(r) = reference else {
        return Err(Error::NoDefiniteReference);
    };
    if inertia(&pencil.gram_at_coords(&to_gaussian(r))?)?.positive != 4 {
        return Err(Error::NoDefiniteReference);
    }
    let ine = inertia(&pencil.gram_at_coords(&to_gaussian(point))?)?;
    Ok(if ine.negative == 0 || ine.positive == 0 {
        if ine.zero == 0 {
            SpectraMembership::Interior
        } else {
            SpectraMembership::Boundary
        }
    } else {
        SpectraMembership::Outside
    })
}

// ---------------------------------------------------------------------------
// Real rational points on claimed components
// ---------------------------------------------------------------------------

/// Gram matrix of a quadratic form in k variables.
fn small_gram(q: &MultiPoly, vars: &[String]) -> Result<Mat, Error> {
    let k = vars.len();
    let aligned = q.aligned_to(vars);
    let mut gram = Mat::zeros(k, k);
    let half = GaussianRational::from_frac(1, 2);
    for (key, c) in aligned.terms() {
        let mut support = Vec::new();
        for (i, &e) in key.iter().enumerate() {
            for _ in 0..e {
                support.push(i);
            }
        }
        if support.len() != 2 {
            return Err(Error::UnsupportedClaim("expected a homogeneous quadratic".into()));
        }
        let (a, b) = (support[0], support[1]);
        if a == b {
            gram.set(a, a, c.clone());
        } else {
            let v = c * &half;
            gram.set(a, b, v.clone());
            gram.set(b, a, v);
        }
    }
    Ok(gram)
}

/// Enumerates integer tuples of sup-norm exactly h in lexicographic order.
fn cube_shell(k: usize, h: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![-h; k];
    loop {
        if cur.iter().any(|&c| c.abs() == h) {
            out.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            cur[i] += 1;
            if cur[i] <= h {
                break;
            }
            cur[i] = -h;
            i += 1;
        }
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Real rational points on a claimed component (linear forms plus at most
/// one quadric), as coordinate vectors in the ambient variables. The first
/// point comes from a primitive integer sweep of the restricted quadric up
/// to the given height (with a definiteness short-circuit when no real
/// point can exist); further points come from rational line sections
/// through it. Fails when fewer than `count` points are found.
pub fn real_points_on_claim(
    claim: &ComponentClaim,
    vars: &[String],
    count: usize,
    height: i64,
    seed: u64,
) -> Result<Vec<Vec<BigRational>>, Error> {
    for g in &claim.gens {
        if g.conj() != *g {
            return Err(Error::NotReal(format!(
                "component {} has non-real generators",
                claim.name
            )));
        }
    }
    let mut linears = Vec::new();
    let mut quadrics = Vec::new();
    for g in &claim.gens {
        match g.homogeneous_degree() {
            Some(1) => linears.push(g.clone()),
            Some(2) => quadrics.push(g.clone()),
            _ => {
                return Err(Error::UnsupportedClaim(
                    "component generators must be linear or quadratic".into(),
                ))
            }
        }
    }
    if quadrics.len() > 1 {
        return Err(Error::UnsupportedClaim(
            "at most one quadric generator is supported".into(),
        ));
    }
    let basis = kernel_of_linear_forms(&linears, vars)?;
    let k = basis.len();
    if k == 0 {
        return Err(Error::NoSamplePoint(format!("component {} is empty", claim.name)));
    }
    let to_x = |t: &[BigRational]| -> Vec<BigRational> {
        (0..vars.len())
            .map(|i| {
                t.iter()
                    .zip(basis.iter())
                    .fold(BigRational::zero(), |acc, (tj, b)| acc + tj * b[i].re())
            })
            .collect()
    };
    let normalize = |x: Vec<BigRational>| -> Vec<BigRational> {
        match x.iter().find(|c| !c.is_zero()) {
            Some(lead) => {
                let lead = lead.clone();
                x.iter().map(|c| c / &lead).collect()
            }
            None => x,
        }
    };
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut points: BTreeSet<Vec<BigRational>> = BTreeSet::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7265616c);
    if quadrics.is_empty() {
        // A linear component: unit parameter vectors, then random combos.
        for i in 0..k {
            let mut t = vec![int(0); k];
            t[i] = int(1);
            points.insert(normalize(to_x(&t)));
            if points.len() == count {
                break;
            }
        }
        let mut attempts = 0;
        while points.len() < count && attempts < 200 {
            attempts += 1;
            let t: Vec<BigRational> = (0..k).map(|_| int(rng.gen_range(-5..=5))).collect();
            if t.iter().all(|c| c.is_zero()) {
                continue;
            }
            points.insert(normalize(to_x(&t)));
        }
    } else {
        let q = restrict_to_span(&quadrics[0], &basis, vars)?;
        if q.is_zero() {
            return Err(Error::UnsupportedClaim(
                "the quadric vanishes on the span of the linear forms".into(),
            ));
        }
        let tvars: Vec<String> = (0..k).map(|j| format!("t{j}")).collect();
        let gram = small_gram(&q, &tvars)?;
        let ine = inertia(&gram)?;
        if ine.positive == k || ine.negative == k {
            return Err(Error::NoSamplePoint(format!(
                "component {} has no real points (definite restricted quadric), \
                 search stopped at height {height}",
                claim.name
            )));
        }
        let q_at = |t: &[BigRational]| -> BigRational {
            let mut s = BigRational::zero();
            for i in 0..k {
                for j in 0..k {
                    let c = gram.get(i, j);
                    if !c.is_zero() {
                        s += c.re() * &t[i] * &t[j];
                    }
                }
            }
            s
        };
        let mut seed_point: Option<Vec<BigRational>> = None;
        'sweep: for h in 1..=height {
            for t in cube_shell(k, h) {
                let g = t.iter().fold(0i64, |a, &b| gcd_i64(a, b));
                if g != 1 {
                    continue;
                }
                let tr: Vec<BigRational> = t.iter().map(|&v| int(v)).collect();
                if q_at(&tr).is_zero() {
                    seed_point = Some(tr);
                    break 'sweep;
                }
            }
        }
        let Some(p0) = seed_point else {
            return Err(Error::NoSamplePoint(format!(
                "no real rational point on component {} up to height {height}",
                claim.name
            )));
        };
        points.insert(normalize(to_x(&p0)));
        // Rational line sections through the seed point: q(p0 + s w) =
        // s (2 B(p0, w) + s q(w)), so the second root is rational.
        let mut attempts = 0;
        while points.len() < count && attempts < 400 {
            attempts += 1;
            let w: Vec<BigRational> = (0..k).map(|_| int(rng.gen_range(-9..=9))).collect();
            if w.iter().all(|c| c.is_zero()) {
                continue;
            }
            let qw = q_at(&w);
            let sum: Vec<BigRational> =
                p0.iter().zip(w.iter()).map(|(a, b)| a + b).collect();
            let two_b = q_at(&sum) - &qw;
            let candidate: Vec<BigRational> = if qw.is_zero() {
                if two_b.is_zero() {
                    // The whole line lies on the quadric.
                    sum
                } else {
                    w
                }
            } else {
                let s = -&two_b / &qw;
                if s.is_zero() {
                    continue;
                }
                p0.iter().zip(w.iter()).map(|(a, b)| a + &(&s * b)).collect()
            };
            if candidate.iter().all(|c| c.is_zero()) {
                continue;
            }
            points.insert(normalize(to_x(&candidate)));
        }
    }
    if points.len() < count {
        return Err(Error::NoSamplePoint(format!(
            "only {} of {count} requested real points found on component {}",
            points.len(),
            claim.name
        )));
    }
    Ok(points.into_iter().take(count).collect())
}

// ---------------------------------------------------------------------------
// Configuration of a surface and two conics of singular points
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurfaceConicConfiguration {
    /// The surface misses the spectrahedron and both conics lie on its
    /// boundary.
    SurfaceOutsideConicsOnBoundary,
    /// The surface lies on the boundary and exactly one conic does.
    SurfaceOnBoundaryOneConic,
}

/// Samples five real points on the surface and on each conic and places
/// them against the spectrahedron. Verdicts must be uniform per component;
/// a conic with no real rational points up to the search height counts as
/// off the boundary.
pub fn classify_configuration(
    pencil: &SymmetricPencil,
    surface: &ComponentClaim,
    conics: &[ComponentClaim],
    reference: Option<&[BigRational]>,
    seed: u64,
) -> Result<SurfaceConicConfiguration, Error> {
    const SAMPLES: usize = 5;
    const HEIGHT: i64 = 20;
    if conics.len() != 2 {
        return Err(Error::UnsupportedClaim("expected exactly two conics".into()));
    }
    let vars = pencil.vars().to_vec();
    let uniform = |vs: &[SpectraMembership]| -> Option<SpectraMembership> {
        vs.windows(2).all(|w| w[0] == w[1]).then(|| vs[0])
    };
    let surface_points = real_points_on_claim(surface, &vars, SAMPLES, HEIGHT, seed)?;
    let surface_verdicts: Vec<SpectraMembership> = surface_points
        .iter()
        .map(|p| boundary_membership(pencil, p, reference))
        .collect::<Result<_, _>>()?;
    let Some(surface_verdict) = uniform(&surface_verdicts) else {
        return Err(Error::PencilClassification(
            "mixed membership verdicts along the surface".into(),
        ));
    };
    let mut boundary_conics = 0usize;
    for conic in conics {
        match real_points_on_claim(conic, &vars, SAMPLES, HEIGHT, seed) {
            Err(Error::NoSamplePoint(_)) => continue,
            Err(e) => return Err(e),
            Ok(pts) => {
                let verdicts: Vec<SpectraMembership> = pts
                    .iter()
                    .map(|p| boundary_membership(pencil, p, reference))
                    .collect::<Result<_, _>>()?;
                match uniform(&verdicts) {
                    Some(SpectraMembership::Boundary) => boundary_conics += 1,
                    Some(SpectraMembership::Outside) => {}
                    _ => {
                        return Err(Error::PencilClassification(
                            "unexpected membership pattern along a conic".into(),
                        ))
                    }
                }
            }
        }
    }
    match (surface_verdict, boundary_conics) {
        (SpectraMembership::Outside, 2) => {
            Ok(SurfaceConicConfiguration::SurfaceOutsideConicsOnBoundary)
        }
        (SpectraMembership::Boundary, 1) => {
            Ok(SurfaceConicConfiguration::SurfaceOnBoundaryOneConic)
        }
        (v, b) => Err(Error::PencilClassification(format!(
            "surface verdict {v:?} with {b} boundary conics matches neither configuration"
        ))),
    }
}
