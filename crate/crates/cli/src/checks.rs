//! Named verification checks, run against a resolved example.
//!
//! Key operations:
//! - [`Check`]: the strategy interface. Every check has a stable name, a
//!   one-line claim, and a run method returning pass or fail with a
//!   witness string; machinery refusals surface as errors.
//! - [`all_checks`] / [`check_by_name`]: the registry of trait objects
//!   the CLI selects from by name.
//! - [`run_checks`]: executes the example's applicable checks in order,
//!   optionally restricted to a named subset, timing each one.
//! - [`CheckContext`]: per-run cache of the quartic, the Jacobian ideal,
//!   the base locus, the web strata, and the definite reference point, so
//!   checks share the expensive computations.
//!
//! Design notes: a check FAILS when the claim it tests is false and
//! ERRORS when it cannot decide (unsupported shape, no witness found
//! where one is required for the method, solver refusal). Failures carry
//! concrete counterexamples in the witness whenever one exists.

use std::time::Instant;

use num_rational::BigRational;

use symmetroid::error::Error;
use symmetroid::linalg::Mat;
use symmetroid::ideal::{buchberger, TermOrder};
use symmetroid::pencil::{ComponentClaim, RankComponentClaim, SymmetricPencil};
use symmetroid::poly::MultiPoly;
use symmetroid::solve::ProjSolutions;
use symmetroid::spectra::{
    boundary_membership, classify_configuration, find_infeasibility_certificate, inertia,
    pd_search, real_points_on_claim, verify_infeasibility_certificate, SpectraMembership,
};
use symmetroid::web::{
    base_configuration, contains_fat_point, ruling_reality_check, web_base_locus, web_strata,
    web_vars, WebStratum,
};

use crate::registry::{ClaimRole, ResolvedExample};
use crate::report::{CheckRecord, CheckStatus};

/// Budget for the definite-point search shared by all checks needing a
/// reference point.
const PD_BUDGET: usize = 400;
/// Samples drawn per component when testing ranks or memberships.
const SAMPLES: usize = 4;
/// Real points requested per component and the height bound of the
/// rational point search.
const REAL_SAMPLES: usize = 5;
const REAL_HEIGHT: i64 = 20;

pub enum CheckOutcome {
    Pass(String),
    Fail(String),
}

pub trait Check {
    /// Stable registry name, used for `--only` selection.
    fn name(&self) -> &'static str;
    /// One-line statement of what passing means for this example.
    fn claim(&self, example: &ResolvedExample) -> String;
    fn run(&self, cx: &mut CheckContext) -> Result<CheckOutcome, Error>;
}

/// Shared lazy state for one verification run.
pub struct CheckContext<'a> {
    pub example: &'a ResolvedExample,
    pub seed: u64,
    quartic: Option<MultiPoly>,
    jacobian: Option<Vec<MultiPoly>>,
    base: Option<ProjSolutions>,
    strata: Option<Vec<WebStratum>>,
    reference: Option<Option<Vec<BigRational>>>,
}

impl<'a> CheckContext<'a> {
    pub fn new(example: &'a ResolvedExample, seed: u64) -> Self {
        CheckContext {
            example,
            seed,
            quartic: None,
            jacobian: None,
            base: None,
            strata: None,
            reference: None,
        }
    }

    pub fn pencil(&self) -> &SymmetricPencil {
        &self.example.pencil
    }

    pub fn quartic(&mut self) -> Result<&MultiPoly, Error> {
        if self.quartic.is_none() {
            self.quartic = Some(self.example.pencil.quartic()?);
        }
        Ok(self.quartic.as_ref().expect("cached"))
    }

    pub fn jacobian(&mut self) -> Result<&[MultiPoly], Error> {
        if self.jacobian.is_none() {
            self.jacobian = Some(self.example.pencil.jacobian_ideal()?);
        }
        Ok(self.jacobian.as_ref().expect("cached"))
    }

    pub fn base(&mut self) -> Result<&ProjSolutions, Error> {
        if self.base.is_none() {
            self.base = Some(web_base_locus(&self.example.pencil, self.seed)?);
        }
        Ok(self.base.as_ref().expect("cached"))
    }

    pub fn strata(&mut self) -> Result<&[WebStratum], Error> {
        if self.strata.is_none() {
            let config = base_configuration(self.base()?);
            self.strata = Some(web_strata(&self.example.pencil, &config)?);
        }
        Ok(self.strata.as_ref().expect("cached"))
    }

    /// The definite reference point, searched for once per run.
    pub fn reference(&mut self) -> Result<Option<Vec<BigRational>>, Error> {
        if self.reference.is_none() {
            self.reference = Some(pd_search(&self.example.pencil, PD_BUDGET, self.seed)?);
        }
        Ok(self.reference.as_ref().expect("cached").clone())
    }
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

pub fn all_checks() -> Vec<Box<dyn Check>> {
    vec![
        Box::new(Nondegenerate),
        Box::new(SingularContainment),
        Box::new(MinorsInIdeal),
        Box::new(RankAtSamples),
        Box::new(RankMultiplicities),
        Box::new(BaseLocus),
        Box::new(StrataConics),
        Box::new(SurfaceRulings),
        Box::new(ConicReality),
        Box::new(DefinitePoint),
        Box::new(InfeasibilityCertificate),
        Box::new(SpectraConfig),
        Box::new(BoundaryMembership),
    ]
}

pub fn check_names() -> Vec<&'static str> {
    all_checks().iter().map(|c| c.name()).collect()
}

pub fn check_by_name(name: &str) -> Option<Box<dyn Check>> {
    all_checks().into_iter().find(|c| c.name() == name)
}

/// Runs the example's checks in declaration order, restricted to `only`
/// when given. Unknown or inapplicable names in `only` are usage errors.
pub fn run_checks(
    example: &ResolvedExample,
    seed: u64,
    only: Option<&[String]>,
) -> Result<Vec<CheckRecord>, String> {
    if let Some(names) = only {
        for n in names {
            if check_by_name(n).is_none() {
                return Err(format!(
                    "unknown check '{n}'; known checks: {}",
                    check_names().join(", ")
                ));
            }
            if !example.checks.contains(&n.as_str()) {
                return Err(format!(
                    "check '{n}' does not apply to example '{}'; its checks are: {}",
                    example.id,
                    example.checks.join(", ")
                ));
            }
        }
    }
    let selected: Vec<&'static str> = example
        .checks
        .iter()
        .copied()
        .filter(|name| only.is_none_or(|names| names.iter().any(|n| n == name)))
        .collect();
    let mut cx = CheckContext::new(example, seed);
    let mut records = Vec::with_capacity(selected.len());
    for name in selected {
        let check = check_by_name(name).expect("every declared check is registered");
        let start = Instant::now();
        let (status, witness) = match check.run(&mut cx) {
            Ok(CheckOutcome::Pass(w)) => (CheckStatus::Pass, w),
            Ok(CheckOutcome::Fail(w)) => (CheckStatus::Fail, w),
            Err(e) => (CheckStatus::Error, e.to_string()),
        };
        records.push(CheckRecord {
            name: name.to_string(),
            claim: check.claim(example),
            status,
            witness,
            millis: start.elapsed().as_millis(),
        });
    }
    Ok(records)
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

fn fmt_rational_point(coords: &[BigRational]) -> String {
    let inner: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn fmt_mat(m: &Mat) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
            format!("[{}]", row.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn fmt_gens(claim: &ComponentClaim) -> String {
    let gens: Vec<String> = claim.gens.iter().map(|g| g.to_string()).collect();
    format!("<{}>", gens.join(", "))
}

/// Reduced Groebner basis of the generators; unique per ideal, so basis
/// equality decides ideal equality.
fn reduced_gb(gens: &[MultiPoly]) -> Result<Vec<MultiPoly>, Error> {
    Ok(buchberger(gens, TermOrder::Grevlex)?.gens().to_vec())
}

fn membership_name(m: SpectraMembership) -> &'static str {
    match m {
        SpectraMembership::Interior => "interior",
        SpectraMembership::Boundary => "boundary",
        SpectraMembership::Outside => "outside",
    }
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

struct Nondegenerate;

impl Check for Nondegenerate {
    fn name(&self) -> &'static str {
        "nondegenerate"
    }

    fn claim(&self, _example: &ResolvedExample) -> String {
        "the determinant is a nonzero quartic and the pencil is not a cone".to_string()
    }

    fn run(&self, cx: &mut CheckContext) -> Result<CheckOutcome, Error> {
        let f = match cx.quartic() {
            Ok(f) => f.clone(),
            Err(Error::DegeneratePencil) => {
                return Ok(CheckOutcome::Fail("determinant vanishes identically".to_string()))
            }
            Err(e) => return Err(e),
        };
        if f.homogeneous_degree() != Some(4) {
            return Ok(CheckOutcome::Fail(format!(
                "determinant is not homogeneous of degree 4: {f}"
            )));
        }
        let vertex = cx.pencil().cone_vertex_space()?;
        if !vertex.is_empty() {
            return Ok(CheckOutcome::Fail(format!(
                "cone vertex space has dimension {}",
                vertex.len()
            )));
        }
        Ok(CheckOutcome::Pass(format!(
            "determinant has {} terms; cone vertex space is empty",
            f.terms().count()
        )))
    }
}

struct SingularContainment;

impl Check for SingularContainment {
    fn name(&self) -> &'static str {
        "singular-containment"
    }

    fn claim(&self, example: &ResolvedExample) -> String {
        let names: Vec<&str> = example
            .components
            .iter()
            .filter(|c| c.jacobian_contained)
            .map(|c| c.claim.name.as_str())
            .collect();
        format!(
            "every partial derivative of the determinant lies in the ideal of: {}",
            names.join(", ")
        )
    }

    fn run(&self, cx: &mut CheckContext) -> Result<CheckOutcome, Error> {
        let jacobian = cx.jacobian()?.to_vec();
        let mut verified = Vec::new();
        for comp in cx.example.components.iter().filter(|c| c.jacobian_contained) {
            if !comp.claim.contains_ideal(&jacobian)? {
                return Ok(CheckOutcome::Fail(format!(
                    "a partial derivative does not reduce to zero modulo {} (component {})",
                    fmt_gens(&comp.claim),
                    comp.claim.name
                )));
            }
            verified.push(comp.claim.name.as_str());
        }
        Ok(CheckOutcome::Pass(format!(
            "{} partials reduce to zero modulo each of: {}",
            jacobian.len(),
            verified.join(", ")
        )))
    }
}

struct MinorsInIdeal;

impl Check for MinorsInIdeal {
    fn name(&self) -> &'static str {
        "minors-in-ideal"
    }

    fn claim(&self, example: &ResolvedExample) -> String {
        let names: Vec<&str> = example
            .components
            .iter()
            .filter(|c| c.minors_contained)
            .map(|c| c.claim.name.as_str())
            .collect();
        format!(
            "all minors one size above the expected rank lie in the ideal of: {}",
            names.join(", ")
        )
    }

    fn run(&self, cx: &mut CheckContext) -> Result<CheckOutcome, Error> {
        let mut parts = Vec::new();
        for comp in cx.example.components.iter().filter(|c| c.minors_contained) {
            let size = comp.claim.expected_rank + 1;
            let minors = cx.pencil().minor_ideal(size)?;
            if !comp.claim.contains_ideal(&minors)? {
                return Ok(CheckOutcome::Fail(format!(
                    "a {size}x{size} minor does not reduce to zero modulo {} (component {})",
                    fmt_gens(&comp.claim),
                    comp.claim.name
                )));
            }
            parts.push(format!(
                "{}: {} minors of size {size} reduce to zero",
                comp.claim.name,
                minors.len()
            ));
        }
        Ok(CheckOutcome::Pass(parts.join("; ")))
    }
}

struct RankAtSamples;

impl Check for RankAtSamples {
    fn name(&self) -> &'static str {
        "rank-at-samples"
    }

    fn claim(&self, _example: &ResolvedExample) -> String {
        "sampled points of every claimed component attain exactly the expected matrix rank"
            .to_string()
    }

    fn run(&self, cx: &mut CheckContext) -> Result<CheckOutcome, Error> {
        let vars = cx.pencil().vars().to_vec();
        let mut parts = Vec::new();
        for comp in &cx.example.components {
            let expected = comp.claim.expected_rank;
            let points = comp.claim.sample_points(&vars, SAMPLES, cx.seed)?;
            let mut max_rank = 0;
            for point in &points {
                let rank = cx.pencil().rank_at(point)?;
                if rank > expected {
                    return Ok(CheckOutcome::Fail(format!(
                        "rank {rank} > expected {expected} at {point} (component {})",
                        comp.claim.name
                    )));
                }
                max_rank = max_rank.max(rank);
            }
            if max_rank < expected {
                return Ok(CheckOutcome::Fail(format!(
                    "rank stays at {max_rank} < expected {expected} across {} samples (component {})",
                    points.len(),
                    comp.claim.name
                )));
            }
            parts.push(format!("{}: rank {expected} at {} samples", comp.claim.name, points.len()));
        }
        Ok(CheckOutcome::Pass(parts.join("; ")))
    }
}

struct RankMultiplicities;

impl Check for RankMultiplicities {
    fn name(&self) -> &'static str {
        "rank-multiplicities"
    }

    fn claim(&self, example: &ResolvedExample) -> String {
        let parts: Vec<String> = example
            .components
            .iter()
            .filter_map(|c| {
                c.cycle_multiplicity.map(|m| format!("{} with multiplicity {m}", c.claim.name))
            })
            .collect();
        format!("the rank <= 2 curve meets {}", parts.join(", "))
    }

    fn run(&self, cx: &mut CheckContext) -> Result<CheckOutcome, Error> {
        let mut claims = Vec::new();
        let mut expected = Vec::new();
        for comp in &cx.example.components {
            let Some(mult) = comp.cycle_multiplicity else { continue };
            claims.push(RankComponentClaim {
                name: comp.claim.name.clone(),
                linear_forms: comp.claim.gens.clone(),
                expected_multiplicity: mult,
            });
            expected.push((comp.claim.name.clone(), mult));
        }
        let report = cx.pencil().rank_locus_multiplicities(3, &claims, cx.seed)?;
        let measured: Vec<String> = report
            .multiplicities
            .iter()
            .map(|(n, m)| format!("{n}: {m}"))
            .collect();
        let witness = format!(
            "{}; total measured degree {}",
            measured.join(", "),
            report.total_degree
        );
        for ((name, want), (got_name, got)) in expected.iter().zip(&report.multiplicities) {
            debug_assert_eq!(name, got_name);
            if want != got {
                return Ok(CheckOutcome::Fail(format!(
                    "component {name} measured multiplicity {got}, expected {want} ({witness})"
                )));
            }
        }
        Ok(CheckOutcome::Pass(witness))
    }
}

struct BaseLocus;

impl Check for BaseLocus {
    fn name(&self) -> &'static str {
        "base-locus"
    }

    fn claim(&self, example: &ResolvedExample) -> String {
        match &example.base {
            Some(b) => match &b.multiplicities {
                Some(m) => format!(
                    "the web's base locus has total degree {} with multiplicities {:?}",
                    b.total, m
                ),
                None => format!("the web's base locus has total degree {}", b.total),
            },
            None => "the web's base locus matches the expected shape".to_string(),
        }
    }

    fn run(&self, cx: &mut CheckContext) -> Result<CheckOutcome, Error> {
        let Some(expected) = cx.example.base.clone() else {
            return Err(Error::UnsupportedClaim(
                "no base-locus expectation is attached to this example".to_string(),
            ));
        };
        let base = cx.base()?.clone();
        if base.residual {
            return Ok(CheckOutcome::Fail(
                "the solver left an unsplit residual in the base locus".to_string(),
            ));
        }
        if base.total_degree != expected.total {
            return Ok(CheckOutcome::Fail(format!(
                "base locus has total degree {}, expected {}",
                base.total_degree, expected.total
            )));
        }
        let mut mults: Vec<usize> = base.solutions.iter().map(|s| s.multiplicity).collect();
        mults.sort_unstable();
        if let Some(want) = &expected.multiplicities {
            if &mults != want {
                return Ok(CheckOutcome::Fail(format!(
                    "base multiplicities {mults:?} differ from expected {want:?}"
                )));
            }
        }
        if expected.conjugate_pairs {
            for sol in &base.solutions {
                let conj = sol.point.conj();
                let partner = base.solutions.iter().find(|other| {
                    other.point.cmp_canonical(&conj) == std::cmp::Ordering::Equal
                });
                match partner {
                    Some(other) if other.multiplicity == sol.multiplicity => {}
                    _ => {
                        return Ok(CheckOutcome::Fail(format!(
                            "base point {} has no conjugate partner of equal multiplicity",
                            sol.point
                        )))
                    }
                }
            }
        }
        // A length-two point must be contained, tangent direction and all,
        // in every quadric of the web.
        let web = cx.pencil().quadric_web();
        let yvars = web_vars();
        for sol in base.solutions.iter().filter(|s| s.multiplicity == 2) {
            let Some(tangent) = &sol.tangent else {
                return Ok(CheckOutcome::Fail(format!(
                    "double point {} carries no tangent direction",
                    sol.point
                )));
            };
            for q in &web {
                if !contains_fat_point(q, &yvars, &sol.point, tangent)? {
                    return Ok(CheckOutcome::Fail(format!(
                        "a web quadric misses the length-two scheme at {}",
                        sol.point
                    )));
                }
            }
        }
        let described: Vec<String> = base
            .solutions
            .iter()
            .map(|s| format!("{} (mult {})", s.point, s.multiplicity))
            .collect();
        Ok(CheckOutcome::Pass(format!(
            "{}; total degree {}",
            described.join(", "),
            base.total_degree
        )))
    }
}

struct StrataConics;

impl Check for StrataConics {
    fn name(&self) -> &'static str {
        "strata-conics"
    }

    fn claim(&self, _example: &ResolvedExample) -> String {
        "every claimed surface and conic appears among the web's base-point strata".to_string()
    }

    fn run(&self, cx: &mut CheckContext) -> Result<CheckOutcome, Error> {
        let strata = cx.strata()?.to_vec();
        let stratum_bases: Vec<(String, usize, Vec<MultiPoly>)> = strata
            .iter()
            .map(|s| {
                reduced_gb(&s.intersection.ideal())
                    .map(|gb| (s.label.clone(), s.intersection.affine_dim, gb))
            })
            .collect::<Result<_, _>>()?;
        let mut matches = Vec::new();
        for comp in cx
            .example
            .components
            .iter()
            .filter(|c| matches!(c.role, ClaimRole::Surface | ClaimRole::Conic))
        {
            let target = reduced_gb(&comp.claim.gens)?;
            let found = stratum_bases.iter().find(|(_, _, gb)| gb == &target);
            match found {
                Some((label, dim, _)) => matches.push(format!(
                    "{} = stratum {label} (affine dim {dim})",
                    comp.claim.name
                )),
                None => {
                    return Ok(CheckOutcome::Fail(format!(
                        "component {} matches no stratum ideal",
                        comp.claim.name
                    )))
                }
            }
        }
        let dims: Vec<String> =
            stratum_bases.iter().map(|(_, d, _)| d.to_string()).collect();
        Ok(CheckOutcome::Pass(format!(
            "{} strata with affine dims [{}]; {}",
            strata.len(),
            dims.join(", "),
            matches.join("; ")
        )))
    }
}

struct SurfaceRulings;

impl Check for SurfaceRulings {
    fn name(&self) -> &'static str {
        "surface-rulings"
    }

    fn claim(&self, _example: &ResolvedExample) -> String {
        "the base lines of the surface's rulings are consistent with its real points".to_string()
    }

    fn run(&self, cx: &mut CheckContext) -> Result<CheckOutcome, Error> {
        let Some(surface) = cx
            .example
            .components
            .iter()
            .find(|c| c.role == ClaimRole::Surface)
        else {
            return Err(Error::UnsupportedClaim(
                "no surface component is claimed for this example".to_string(),
            ));
        };
        let report = ruling_reality_check(cx.pencil(), &surface.claim, cx.seed)?;
        let (l1, l2) = &report.lines;
        let (p1, q1) = l1.spanning_points();
        let (p2, q2) = l2.spanning_points();
        let flags = format!(
            "first meets own conjugate: {}; second meets own conjugate: {}; first meets conjugate of second: {}",
            report.flags.first_meets_own_conjugate,
            report.flags.second_meets_own_conjugate,
            report.flags.first_meets_conjugate_of_second
        );
        if !report.consistent_with_real_surface {
            return Ok(CheckOutcome::Fail(format!(
                "the no-real-points criterion triggered on a surface with real singular points ({flags})"
            )));
        }
        Ok(CheckOutcome::Pass(format!(
            "lines span{{{p1}, {q1}}} and span{{{p2}, {q2}}}; {flags}; no-real-points criterion is false"
        )))
    }
}

struct ConicReality;

impl Check for ConicReality {
    fn name(&self) -> &'static str {
        "conic-reality"
    }

    fn claim(&self, example: &ResolvedExample) -> String {
        let parts: Vec<String> = example
            .components
            .iter()
            .filter_map(|c| {
                c.reality.map(|r| {
                    if r {
                        format!("{} has real rational points", c.claim.name)
                    } else {
                        format!("{} has none", c.claim.name)
                    }
                })
            })
            .collect();
        parts.join("; ")
    }

    fn run(&self, cx: &mut CheckContext) -> Result<CheckOutcome, Error> {
        let vars = cx.pencil().vars().to_vec();
        let mut parts = Vec::new();
        for comp in &cx.example.components {
            let Some(expect_real) = comp.reality else { continue };
            let found = real_points_on_claim(&comp.claim, &vars, REAL_SAMPLES, REAL_HEIGHT, cx.seed);
            match (expect_real, found) {
                (true, Ok(points)) => {
                    parts.push(format!(
                        "{}: found {} real points, e.g. {}",
                        comp.claim.name,
                        points.len(),
                        fmt_rational_point(&points[0])
                    ));
                }
                (true, Err(Error::NoSamplePoint(_))) => {
                    return Ok(CheckOutcome::Fail(format!(
                        "no real rational points found on {} up to height {REAL_HEIGHT}",
                        comp.claim.name
                    )));
                }
                (false, Ok(points)) => {
                    return Ok(CheckOutcome::Fail(format!(
                        "found a real point {} on {}, which is claimed to have none",
                        fmt_rational_point(&points[0]),
                        comp.claim.name
                    )));
                }
                (false, Err(Error::NoSamplePoint(msg))) => {
                    parts.push(format!("{}: {msg}", comp.claim.name));
                }
                (_, Err(e)) => return Err(e),
            }
        }
        Ok(CheckOutcome::Pass(parts.join("; ")))
    }
}

struct DefinitePoint;

impl Check for DefinitePoint {
    fn name(&self) -> &'static str {
        "definite-point"
    }

    fn claim(&self, _example: &ResolvedExample) -> String {
        "a positive definite point of the pencil exists and is found".to_string()
    }

    fn run(&self, cx: &mut CheckContext) -> Result<CheckOutcome, Error> {
        if cx.example.definite_point_exists != Some(true) {
            return Err(Error::UnsupportedClaim(
                "this example does not claim a definite point".to_string(),
            ));
        }
        match cx.reference()? {
            Some(point) => {
                let gram = cx
                    .pencil()
                    .gram_at_coords(&to_gaussian(&point))?;
                let ine = inertia(&gram)?;
                if ine.positive != 4 {
                    return Err(Error::PencilClassification(
                        "search returned a point that is not definite".to_string(),
                    ));
                }
                Ok(CheckOutcome::Pass(format!(
                    "A(p) is positive definite at p = {}",
                    fmt_rational_point(&point)
                )))
            }
            None => Ok(CheckOutcome::Fail(format!(
                "no definite point found within a budget of {PD_BUDGET} candidates"
            ))),
        }
    }
}

struct InfeasibilityCertificate;

impl Check for InfeasibilityCertificate {
    fn name(&self) -> &'static str {
        "infeasibility-certificate"
    }

    fn claim(&self, _example: &ResolvedExample) -> String {
        "a semidefinite trace-orthogonal certificate proves the spectrahedron's interior empty"
            .to_string()
    }

    fn run(&self, cx: &mut CheckContext) -> Result<CheckOutcome, Error> {
        if cx.example.definite_point_exists != Some(false) {
            return Err(Error::UnsupportedClaim(
                "this example does not claim an empty interior".to_string(),
            ));
        }
        if let Some(point) = cx.reference()? {
            return Ok(CheckOutcome::Fail(format!(
                "found a definite point {} despite the claimed empty interior",
                fmt_rational_point(&point)
            )));
        }
        let Some(cert) = find_infeasibility_certificate(cx.pencil())? else {
            return Ok(CheckOutcome::Fail(
                "no trace-orthogonal semidefinite certificate was found".to_string(),
            ));
        };
        if !verify_infeasibility_certificate(cx.pencil(), &cert)? {
            return Ok(CheckOutcome::Fail(
                "the candidate certificate failed verification".to_string(),
            ));
        }
        Ok(CheckOutcome::Pass(format!(
            "B = {} is semidefinite, nonzero, and trace-orthogonal to every coefficient matrix",
            fmt_mat(&cert)
        )))
    }
}

struct SpectraConfig;

impl Check for SpectraConfig {
    fn name(&self) -> &'static str {
        "spectra-config"
    }

    fn claim(&self, example: &ResolvedExample) -> String {
        use symmetroid::spectra::SurfaceConicConfiguration::*;
        match example.expected_configuration {
            Some(SurfaceOutsideConicsOnBoundary) => {
                "the surface misses the spectrahedron while both conics lie on its boundary"
                    .to_string()
            }
            Some(SurfaceOnBoundaryOneConic) => {
                "the surface lies on the spectrahedron's boundary along with exactly one conic"
                    .to_string()
            }
            None => "the surface-conic configuration matches the claim".to_string(),
        }
    }

    fn run(&self, cx: &mut CheckContext) -> Result<CheckOutcome, Error> {
        let Some(expected) = cx.example.expected_configuration else {
            return Err(Error::UnsupportedClaim(
                "no configuration expectation is attached to this example".to_string(),
            ));
        };
        let Some(surface) = cx
            .example
            .components
            .iter()
            .find(|c| c.role == ClaimRole::Surface)
        else {
            return Err(Error::UnsupportedClaim(
                "no surface component is claimed for this example".to_string(),
            ));
        };
        let surface_claim = surface.claim.clone();
        // Claimed conics when present; otherwise the two conic strata of
        // the web stand in for them.
        let mut conics: Vec<ComponentClaim> = cx
            .example
            .components
            .iter()
            .filter(|c| c.role == ClaimRole::Conic)
            .map(|c| c.claim.clone())
            .collect();
        let mut derived = false;
        if conics.len() != 2 {
            derived = true;
            conics = cx
                .strata()?
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
            if conics.len() != 2 {
                return Err(Error::UnsupportedClaim(format!(
                    "expected two conic strata, found {}",
                    conics.len()
                )));
            }
        }
        let reference = cx.reference()?;
        let got = classify_configuration(
            cx.pencil(),
            &surface_claim,
            &conics,
            reference.as_deref(),
            cx.seed,
        )?;
        let describe = |c: symmetroid::spectra::SurfaceConicConfiguration| match c {
            symmetroid::spectra::SurfaceConicConfiguration::SurfaceOutsideConicsOnBoundary => {
                "surface outside, both conics on the boundary"
            }
            symmetroid::spectra::SurfaceConicConfiguration::SurfaceOnBoundaryOneConic => {
                "surface on the boundary, one conic on the boundary"
            }
        };
        let source = if derived { "conics derived from strata" } else { "claimed conics" };
        if got != expected {
            return Ok(CheckOutcome::Fail(format!(
                "classified as '{}', expected '{}' ({source})",
                describe(got),
                describe(expected)
            )));
        }
        Ok(CheckOutcome::Pass(format!("{} ({source})", describe(got))))
    }
}

struct BoundaryMembership;

impl Check for BoundaryMembership {
    fn name(&self) -> &'static str {
        "boundary-membership"
    }

    fn claim(&self, example: &ResolvedExample) -> String {
        let parts: Vec<String> = example
            .components
            .iter()
            .filter_map(|c| {
                c.membership
                    .map(|m| format!("{} is {}", c.claim.name, membership_name(m)))
            })
            .collect();
        format!("against the spectrahedron: {}", parts.join("; "))
    }

    fn run(&self, cx: &mut CheckContext) -> Result<CheckOutcome, Error> {
        let vars = cx.pencil().vars().to_vec();
        let reference = cx.reference()?;
        let mut parts = Vec::new();
        for comp in &cx.example.components {
            let Some(expected) = comp.membership else { continue };
            let points =
                real_points_on_claim(&comp.claim, &vars, REAL_SAMPLES, REAL_HEIGHT, cx.seed)?;
            for point in &points {
                let got = boundary_membership(cx.pencil(), point, reference.as_deref())?;
                if got != expected {
                    return Ok(CheckOutcome::Fail(format!(
                        "point {} of {} classifies as {}, expected {}",
                        fmt_rational_point(point),
                        comp.claim.name,
                        membership_name(got),
                        membership_name(expected)
                    )));
                }
            }
            parts.push(format!(
                "{}: {} real points all {}",
                comp.claim.name,
                points.len(),
                membership_name(expected)
            ));
        }
        Ok(CheckOutcome::Pass(parts.join("; ")))
    }
}

fn to_gaussian(coords: &[BigRational]) -> Vec<symmetroid::GaussianRational> {
    coords
        .iter()
        .map(|c| symmetroid::GaussianRational::from_rational(c.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::resolve;

    #[test]
    fn registry_names_are_unique_and_resolvable() {
        let names = check_names();
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len(), "duplicate check name");
        for name in names {
            assert!(check_by_name(name).is_some());
        }
    }

    #[test]
    fn every_declared_check_is_registered() {
        for info in crate::registry::examples() {
            if info.takes_lambda {
                continue;
            }
            let example = resolve(info.id, None).unwrap();
            for name in &example.checks {
                assert!(
                    check_by_name(name).is_some(),
                    "example {} declares unregistered check {name}",
                    info.id
                );
            }
        }
    }

    #[test]
    fn only_filter_rejects_unknown_and_inapplicable_names() {
        let example = resolve("double-plane", None).unwrap();
        let err = run_checks(&example, 7, Some(&["no-such-check".to_string()])).unwrap_err();
        assert!(err.contains("unknown check"));
        let err =
            run_checks(&example, 7, Some(&["infeasibility-certificate".to_string()])).unwrap_err();
        assert!(err.contains("does not apply"));
    }

    #[test]
    fn doubled_plane_checks_all_pass() {
        let example = resolve("double-plane", None).unwrap();
        let records = run_checks(&example, 7, None).unwrap();
        assert_eq!(records.len(), example.checks.len());
        for r in &records {
            assert_eq!(r.status, CheckStatus::Pass, "{}: {}", r.name, r.witness);
        }
    }

    #[test]
    fn a_wrong_rank_claim_fails_rather_than_errors() {
        let mut example = resolve("double-plane", None).unwrap();
        // Demote the conic's expected rank below the truth: samples on the
        // conic have rank 1, so demanding rank 0 must fail.
        example.components[1].claim.expected_rank = 0;
        let records =
            run_checks(&example, 7, Some(&["rank-at-samples".to_string()])).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].status, CheckStatus::Fail);
        assert!(records[0].witness.contains("rank"));
    }
}
