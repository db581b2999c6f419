//! Built-in example pencils and the claims the verifier tests against them.
//!
//! Key operations:
//! - [`examples`]: the catalogue of known pencil ids with one-line
//!   summaries.
//! - [`resolve`]: turns an id (plus an optional lambda parameter for the
//!   one-parameter family) into a [`ResolvedExample`]: the pencil, its
//!   claimed components with their expected ranks and flags, the expected
//!   base-locus shape, and the ordered list of applicable check names.
//!
//! Design notes: every pencil is stored in the same plain-text format the
//! `analyze` command reads, so the catalogue doubles as format
//! documentation. Claims carry only what is mechanically verifiable;
//! expectations that depend on finding rational witnesses (real points on
//! a conic, spectrahedron membership) are attached only when a witness is
//! guaranteed to exist, which for the lambda family means a
//! sum-of-two-squares test on lambda.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use symmetroid::pencil::{parse_pencil_file, ComponentClaim, SymmetricPencil};
use symmetroid::poly::MultiPoly;
use symmetroid::spectra::{SpectraMembership, SurfaceConicConfiguration};

/// What kind of locus a claimed component is; used to pick the strata and
/// ruling checks that apply to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimRole {
    /// A quadric surface inside a hyperplane section.
    Surface,
    /// A plane conic.
    Conic,
    /// A 2-plane.
    Plane,
    /// A linear 3-space.
    Space,
    /// A plane carrying a length-two transverse structure.
    DoublePlane,
    /// A 3-space carrying a length-two transverse structure.
    DoubleSpace,
}

/// One claimed component of the pencil's determinant hypersurface,
/// together with the facts the checks should verify about it.
#[derive(Clone, Debug)]
pub struct ComponentSpec {
    pub claim: ComponentClaim,
    pub role: ClaimRole,
    /// Every partial derivative of the determinant reduces to zero modulo
    /// this component's ideal.
    pub jacobian_contained: bool,
    /// Every minor of size expected_rank + 1 reduces to zero modulo this
    /// component's ideal.
    pub minors_contained: bool,
    /// Multiplicity of the component in the rank <= 2 cycle: the length
    /// of the local ring of the 3x3-minor scheme at a generic point
    /// (components of the rank <= 2 curve only).
    pub cycle_multiplicity: Option<usize>,
    /// Some(true): rational real points must be found on the component.
    /// Some(false): the search must certify or report none.
    pub reality: Option<bool>,
    /// Where real points of the component sit relative to the
    /// spectrahedron; requires a definite reference point.
    pub membership: Option<SpectraMembership>,
}

/// Expected shape of the base locus of the pencil's web of quadrics.
#[derive(Clone, Debug)]
pub struct BaseExpectation {
    /// Sum of the multiplicities of all base points.
    pub total: usize,
    /// Sorted multiplicities, when the exact shape is claimed.
    pub multiplicities: Option<Vec<usize>>,
    /// The base scheme must be closed under complex conjugation.
    pub conjugate_pairs: bool,
}

/// A fully instantiated example: the pencil plus everything the checks
/// need to know about it.
#[derive(Clone, Debug)]
pub struct ResolvedExample {
    pub id: String,
    pub summary: String,
    pub pencil: SymmetricPencil,
    pub lambda: Option<BigRational>,
    pub components: Vec<ComponentSpec>,
    pub base: Option<BaseExpectation>,
    pub expected_configuration: Option<SurfaceConicConfiguration>,
    /// Some(true): a positive definite point exists and must be found.
    /// Some(false): none exists, and a trace certificate must prove it.
    pub definite_point_exists: Option<bool>,
    /// Ordered names of the checks that apply to this example.
    pub checks: Vec<&'static str>,
}

#[derive(Clone, Copy, Debug)]
pub struct ExampleInfo {
    pub id: &'static str,
    pub summary: &'static str,
    pub takes_lambda: bool,
}

pub fn examples() -> Vec<ExampleInfo> {
    vec![
        ExampleInfo {
            id: "double-plane",
            summary: "quartic whose rank <= 2 locus carries a doubled plane and a conic of rank-1 points",
            takes_lambda: false,
        },
        ExampleInfo {
            id: "max-smooth-1",
            summary: "quartic singular along a smooth quadric surface that misses the spectrahedron",
            takes_lambda: false,
        },
        ExampleInfo {
            id: "max-smooth-2",
            summary: "quartic singular along a smooth quadric surface lying on the spectrahedron's boundary",
            takes_lambda: false,
        },
        ExampleInfo {
            id: "double-p3",
            summary: "six-variable quartic whose Jacobian ideal lies in the square of a hyperplane pair",
            takes_lambda: false,
        },
        ExampleInfo {
            id: "two-p3s",
            summary: "six-variable quartic singular along two conjugate 3-spaces and a quadric surface",
            takes_lambda: false,
        },
        ExampleInfo {
            id: "lambda-1",
            summary: "lambda family at lambda = 1; coincides with max-smooth-1",
            takes_lambda: false,
        },
        ExampleInfo {
            id: "lambda-neg-1",
            summary: "lambda family at lambda = -1; traceless, with an empty spectrahedron interior",
            takes_lambda: false,
        },
        ExampleInfo {
            id: "lambda-family",
            summary: "one-parameter family whose conics and spectrahedron are real exactly for lambda > 0",
            takes_lambda: true,
        },
    ]
}

/// Instantiates an example by id. `lambda` is required for
/// `lambda-family`, rejected elsewhere, and must be nonzero.
pub fn resolve(id: &str, lambda: Option<&BigRational>) -> Result<ResolvedExample, String> {
    if lambda.is_some() && id != "lambda-family" {
        return Err(format!("example '{id}' does not take a lambda parameter"));
    }
    match id {
        "double-plane" => Ok(double_plane()),
        "max-smooth-1" => Ok(max_smooth_1()),
        "max-smooth-2" => Ok(max_smooth_2()),
        "double-p3" => Ok(double_p3()),
        "two-p3s" => Ok(two_p3s()),
        "lambda-1" => Ok(lambda_family("lambda-1", BigRational::from_integer(BigInt::from(1)))),
        "lambda-neg-1" => {
            Ok(lambda_family("lambda-neg-1", BigRational::from_integer(BigInt::from(-1))))
        }
        "lambda-family" => {
            let lam = lambda.ok_or_else(|| {
                "example 'lambda-family' requires --lambda <rational>".to_string()
            })?;
            if lam.is_zero() {
                return Err(
                    "lambda must be nonzero: at lambda = 0 the determinant degenerates to a perfect square"
                        .to_string(),
                );
            }
            Ok(lambda_family("lambda-family", lam.clone()))
        }
        _ => Err(format!(
            "unknown example '{id}'; run `symmetroid list-examples` for the catalogue"
        )),
    }
}

// ---------------------------------------------------------------------------
// Pencil sources
// ---------------------------------------------------------------------------

const DOUBLE_PLANE: &str = "\
n=5
A0:
1 0 0 0
0 0 0 0
0 0 0 0
0 0 0 0
A1:
0 1 0 0
1 0 0 0
0 0 0 0
0 0 0 0
A2:
0 0 1 0
0 0 0 0
1 0 0 1
0 0 1 0
A3:
0 0 0 0
0 1 0 0
0 0 0 0
0 0 0 0
A4:
0 0 0 0
0 0 0 1
0 0 0 1
0 1 1 0
";

const MAX_SMOOTH_1: &str = "\
n=5
A0:
1 0 0 0
0 1 0 0
0 0 1 0
0 0 0 1
A1:
0 0 1 0
0 0 0 0
1 0 0 0
0 0 0 0
A2:
0 0 0 1
0 0 0 0
0 0 0 0
1 0 0 0
A3:
0 0 0 0
0 0 1 0
0 1 0 0
0 0 0 0
A4:
0 0 0 0
0 0 0 1
0 0 0 0
0 1 0 0
";

const MAX_SMOOTH_2: &str = "\
n=5
A0:
1 0 0 0
0 1 0 0
0 0 0 0
0 0 0 0
A1:
0 0 1 0
0 0 0 0
1 0 0 0
0 0 0 0
A2:
0 0 0 1
0 0 1 0
0 1 0 0
1 0 0 0
A3:
0 0 0 0
0 0 0 1
0 0 0 0
0 1 0 0
A4:
0 0 0 0
0 0 0 0
0 0 1 0
0 0 0 1
";

const DOUBLE_P3: &str = "\
n=6
A0:
1 1 0 0
1 1 0 0
0 0 0 0
0 0 0 0
A1:
1 0 0 0
0 -1 0 0
0 0 0 0
0 0 0 0
A2:
0 1 0 1
1 0 0 1
0 0 0 0
1 1 0 0
A3:
0 0 1 0
0 0 1 0
1 1 0 0
0 0 0 0
A4:
0 0 0 0
0 0 0 0
0 0 1 0
0 0 0 0
A5:
0 0 0 0
0 0 0 0
0 0 0 1
0 0 1 0
";

const TWO_P3S: &str = "\
n=6
A0:
1 0 0 0
0 0 0 0
0 0 0 0
0 0 0 0
A1:
0 1 0 0
1 0 0 0
0 0 0 0
0 0 0 0
A2:
0 0 1 0
0 0 0 1
1 0 0 0
0 1 0 0
A3:
0 0 0 1
0 0 -1 0
0 -1 0 0
1 0 0 0
A4:
0 0 0 0
0 1 0 0
0 0 0 0
0 0 0 0
A5:
0 0 0 0
0 0 0 0
0 0 1 0
0 0 0 1
";

fn lambda_pencil(lam: &BigRational) -> SymmetricPencil {
    let text = format!(
        "n=5\n\
         A0:\n1 0 0 0\n0 1 0 0\n0 0 {lam} 0\n0 0 0 {lam}\n\
         A1:\n0 0 1 0\n0 0 0 0\n1 0 0 0\n0 0 0 0\n\
         A2:\n0 0 0 1\n0 0 0 0\n0 0 0 0\n1 0 0 0\n\
         A3:\n0 0 0 0\n0 0 1 0\n0 1 0 0\n0 0 0 0\n\
         A4:\n0 0 0 0\n0 0 0 1\n0 0 0 0\n0 1 0 0\n"
    );
    parse_pencil_file(&text).expect("built-in pencil parses")
}

// ---------------------------------------------------------------------------
// Example definitions
// ---------------------------------------------------------------------------

fn p(s: &str) -> MultiPoly {
    MultiPoly::parse(s).expect("built-in polynomial parses")
}

fn component(name: &str, role: ClaimRole, gens: &[&str], rank: usize) -> ComponentSpec {
    ComponentSpec {
        claim: ComponentClaim::new(name, gens.iter().map(|g| p(g)).collect(), rank),
        role,
        jacobian_contained: false,
        minors_contained: false,
        cycle_multiplicity: None,
        reality: None,
        membership: None,
    }
}

fn double_plane() -> ResolvedExample {
    let pencil = parse_pencil_file(DOUBLE_PLANE).expect("built-in pencil parses");
    let doubled = ComponentSpec {
        minors_contained: true,
        ..component("doubled-plane", ClaimRole::DoublePlane, &["x2 + x4", "x4^2"], 2)
    };
    let conic = ComponentSpec {
        jacobian_contained: true,
        ..component("rank-one-conic", ClaimRole::Conic, &["x2", "x4", "x0*x3 - x1^2"], 1)
    };
    ResolvedExample {
        id: "double-plane".to_string(),
        summary: "doubled plane inside the rank <= 2 locus, plus a conic of rank-1 points"
            .to_string(),
        pencil,
        lambda: None,
        components: vec![doubled, conic],
        base: None,
        expected_configuration: None,
        definite_point_exists: None,
        checks: vec!["nondegenerate", "minors-in-ideal", "rank-at-samples"],
    }
}

fn max_smooth_1() -> ResolvedExample {
    let pencil = parse_pencil_file(MAX_SMOOTH_1).expect("built-in pencil parses");
    let surface = ComponentSpec {
        jacobian_contained: true,
        membership: Some(SpectraMembership::Outside),
        ..component("quadric-surface", ClaimRole::Surface, &["x0", "x1*x4 - x2*x3"], 2)
    };
    let conic_plus = ComponentSpec {
        jacobian_contained: true,
        reality: Some(true),
        membership: Some(SpectraMembership::Boundary),
        ..component(
            "conic-plus",
            ClaimRole::Conic,
            &["x1 + x4", "x2 - x3", "x0^2 - x1^2 - x3^2"],
            2,
        )
    };
    let conic_minus = ComponentSpec {
        jacobian_contained: true,
        reality: Some(true),
        membership: Some(SpectraMembership::Boundary),
        ..component(
            "conic-minus",
            ClaimRole::Conic,
            &["x1 - x4", "x2 + x3", "x0^2 - x1^2 - x3^2"],
            2,
        )
    };
    ResolvedExample {
        id: "max-smooth-1".to_string(),
        summary: "singular along a smooth quadric surface; surface off the spectrahedron, both conics on its boundary".to_string(),
        pencil,
        lambda: None,
        components: vec![surface, conic_plus, conic_minus],
        base: Some(BaseExpectation {
            total: 4,
            multiplicities: Some(vec![1, 1, 1, 1]),
            conjugate_pairs: true,
        }),
        expected_configuration: Some(SurfaceConicConfiguration::SurfaceOutsideConicsOnBoundary),
        definite_point_exists: Some(true),
        checks: vec![
            "nondegenerate",
            "singular-containment",
            "rank-at-samples",
            "base-locus",
            "strata-conics",
            "surface-rulings",
            "conic-reality",
            "definite-point",
            "spectra-config",
            "boundary-membership",
        ],
    }
}

fn max_smooth_2() -> ResolvedExample {
    let pencil = parse_pencil_file(MAX_SMOOTH_2).expect("built-in pencil parses");
    let surface = ComponentSpec {
        jacobian_contained: true,
        membership: Some(SpectraMembership::Boundary),
        ..component(
            "quadric-surface",
            ClaimRole::Surface,
            &["x1 + x3", "x0*x4 - x2^2 - x3^2"],
            2,
        )
    };
    ResolvedExample {
        id: "max-smooth-2".to_string(),
        summary: "singular along a smooth quadric surface lying on the spectrahedron's boundary"
            .to_string(),
        pencil,
        lambda: None,
        components: vec![surface],
        base: Some(BaseExpectation {
            total: 4,
            multiplicities: Some(vec![1, 1, 1, 1]),
            conjugate_pairs: true,
        }),
        expected_configuration: Some(SurfaceConicConfiguration::SurfaceOnBoundaryOneConic),
        definite_point_exists: Some(true),
        checks: vec![
            "nondegenerate",
            "singular-containment",
            "rank-at-samples",
            "base-locus",
            "strata-conics",
            "surface-rulings",
            "definite-point",
            "spectra-config",
            "boundary-membership",
        ],
    }
}

fn double_p3() -> ResolvedExample {
    let pencil = parse_pencil_file(DOUBLE_P3).expect("built-in pencil parses");
    let doubled = ComponentSpec {
        jacobian_contained: true,
        ..component("doubled-three-space", ClaimRole::DoubleSpace, &["x2^2", "x5"], 3)
    };
    let h1 = ComponentSpec {
        jacobian_contained: true,
        cycle_multiplicity: Some(1),
        ..component("plane-h1", ClaimRole::Plane, &["x0", "x1", "x2"], 2)
    };
    let h2 = ComponentSpec {
        jacobian_contained: true,
        cycle_multiplicity: Some(3),
        ..component("plane-h2", ClaimRole::Plane, &["x2", "x4", "x5"], 2)
    };
    let h3 = ComponentSpec {
        jacobian_contained: true,
        cycle_multiplicity: Some(6),
        ..component("plane-h3", ClaimRole::Plane, &["x1", "x2", "x5"], 2)
    };
    let conic = ComponentSpec {
        jacobian_contained: true,
        ..component(
            "rank-one-conic",
            ClaimRole::Conic,
            &["x1", "x2", "x5", "x0*x4 - x3^2"],
            1,
        )
    };
    ResolvedExample {
        id: "double-p3".to_string(),
        summary: "Jacobian ideal inside <x2^2, x5>; rank <= 2 curve splits as 1, 3, 6 across three planes".to_string(),
        pencil,
        lambda: None,
        components: vec![doubled, h1, h2, h3, conic],
        base: Some(BaseExpectation {
            total: 3,
            multiplicities: Some(vec![3]),
            conjugate_pairs: false,
        }),
        expected_configuration: None,
        definite_point_exists: None,
        checks: vec![
            "nondegenerate",
            "singular-containment",
            "rank-at-samples",
            "rank-multiplicities",
            "base-locus",
        ],
    }
}

fn two_p3s() -> ResolvedExample {
    let pencil = parse_pencil_file(TWO_P3S).expect("built-in pencil parses");
    let space = ComponentSpec {
        jacobian_contained: true,
        ..component("three-space", ClaimRole::Space, &["x2 + I*x3", "x5"], 3)
    };
    let space_conj = ComponentSpec {
        jacobian_contained: true,
        ..component("three-space-conjugate", ClaimRole::Space, &["x2 - I*x3", "x5"], 3)
    };
    let surface = ComponentSpec {
        jacobian_contained: true,
        membership: Some(SpectraMembership::Boundary),
        ..component(
            "quadric-surface",
            ClaimRole::Surface,
            &["x0 - x4", "x1", "x2^2 + x3^2 - x4*x5"],
            2,
        )
    };
    ResolvedExample {
        id: "two-p3s".to_string(),
        summary: "singular along two conjugate 3-spaces of rank-3 points and a real quadric surface of rank-2 points".to_string(),
        pencil,
        lambda: None,
        components: vec![space, space_conj, surface],
        base: Some(BaseExpectation {
            total: 4,
            multiplicities: Some(vec![2, 2]),
            conjugate_pairs: true,
        }),
        expected_configuration: None,
        definite_point_exists: Some(true),
        checks: vec![
            "nondegenerate",
            "singular-containment",
            "rank-at-samples",
            "base-locus",
            "definite-point",
            "boundary-membership",
        ],
    }
}

fn lambda_family(id: &str, lam: BigRational) -> ResolvedExample {
    let pencil = lambda_pencil(&lam);
    let positive = lam.is_positive();
    // Rational witnesses on the conics exist exactly when lambda is a sum
    // of two rational squares; for other positive lambda the reality and
    // membership expectations are left unclaimed rather than guessed.
    let witnessable = positive && sum_of_two_rational_squares(&lam) == Some(true);
    let surface = ComponentSpec {
        jacobian_contained: true,
        membership: positive.then_some(SpectraMembership::Outside),
        ..component("quadric-surface", ClaimRole::Surface, &["x0", "x1*x4 - x2*x3"], 2)
    };
    let quadric = format!("{lam}*x0^2 - x1^2 - x3^2");
    let conic_reality = if positive {
        witnessable.then_some(true)
    } else {
        Some(false)
    };
    let conic_membership = witnessable.then_some(SpectraMembership::Boundary);
    let conic_plus = ComponentSpec {
        jacobian_contained: true,
        reality: conic_reality,
        membership: conic_membership,
        ..component("conic-plus", ClaimRole::Conic, &["x1 + x4", "x2 - x3", &quadric], 2)
    };
    let conic_minus = ComponentSpec {
        jacobian_contained: true,
        reality: conic_reality,
        membership: conic_membership,
        ..component("conic-minus", ClaimRole::Conic, &["x1 - x4", "x2 + x3", &quadric], 2)
    };
    let mut checks = vec![
        "nondegenerate",
        "singular-containment",
        "rank-at-samples",
        "base-locus",
        "strata-conics",
        "surface-rulings",
    ];
    if positive {
        if witnessable {
            checks.push("conic-reality");
        }
        checks.push("definite-point");
        if witnessable {
            checks.push("spectra-config");
            checks.push("boundary-membership");
        }
    } else {
        checks.push("conic-reality");
        checks.push("infeasibility-certificate");
    }
    ResolvedExample {
        id: id.to_string(),
        summary: format!(
            "lambda family at lambda = {lam}: conics and spectrahedron are real exactly for lambda > 0"
        ),
        pencil,
        lambda: Some(lam),
        components: vec![surface, conic_plus, conic_minus],
        base: Some(BaseExpectation {
            total: 4,
            multiplicities: Some(vec![1, 1, 1, 1]),
            conjugate_pairs: true,
        }),
        expected_configuration: witnessable
            .then_some(SurfaceConicConfiguration::SurfaceOutsideConicsOnBoundary),
        definite_point_exists: Some(positive),
        checks,
    }
}

// ---------------------------------------------------------------------------
// Sum of two rational squares
// ---------------------------------------------------------------------------

/// Whether a positive rational p/q is a sum of two rational squares:
/// equivalently, every prime congruent to 3 mod 4 divides p*q to an even
/// power. Trial division is capped, so very large inputs return None
/// (unknown) rather than stalling.
fn sum_of_two_rational_squares(q: &BigRational) -> Option<bool> {
    const TRIAL_CAP: u64 = 1_000_000;
    let mut m = (q.numer() * q.denom()).abs();
    let two = BigInt::from(2);
    while (&m % &two).is_zero() {
        m /= &two;
    }
    let mut d: u64 = 3;
    while BigInt::from(d) * BigInt::from(d) <= m {
        if d > TRIAL_CAP {
            return None;
        }
        let db = BigInt::from(d);
        let mut exp = 0u32;
        while (&m % &db).is_zero() {
            m /= &db;
            exp += 1;
        }
        if exp % 2 == 1 && d % 4 == 3 {
            return Some(false);
        }
        d += 2;
    }
    // The remainder is 1 or a prime appearing to the first power.
    if m > BigInt::one() && (&m % BigInt::from(4)) == BigInt::from(3) {
        return Some(false);
    }
    Some(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn every_catalogue_entry_resolves_and_parses() {
        for info in examples() {
            if info.takes_lambda {
                let ex = resolve(info.id, Some(&rat(2, 1))).unwrap();
                assert_eq!(ex.id, info.id);
            } else {
                let ex = resolve(info.id, None).unwrap();
                assert_eq!(ex.id, info.id);
                assert!(!ex.checks.is_empty());
                // Quartic determinant exists for every catalogue pencil.
                assert!(!ex.pencil.quartic().unwrap().is_zero());
            }
        }
    }

    #[test]
    fn lambda_one_matches_max_smooth_1() {
        let a = resolve("lambda-1", None).unwrap();
        let b = resolve("max-smooth-1", None).unwrap();
        assert_eq!(
            a.pencil.coefficient_matrices(),
            b.pencil.coefficient_matrices()
        );
    }

    #[test]
    fn lambda_family_requires_a_nonzero_parameter() {
        assert!(resolve("lambda-family", None).is_err());
        assert!(resolve("lambda-family", Some(&rat(0, 1))).is_err());
        assert!(resolve("max-smooth-1", Some(&rat(1, 1))).is_err());
        assert!(resolve("no-such-example", None).is_err());
    }

    #[test]
    fn lambda_sign_selects_the_check_set() {
        let pos = resolve("lambda-family", Some(&rat(1, 1))).unwrap();
        assert!(pos.checks.contains(&"definite-point"));
        assert!(pos.checks.contains(&"spectra-config"));
        assert!(!pos.checks.contains(&"infeasibility-certificate"));

        let neg = resolve("lambda-family", Some(&rat(-5, 3))).unwrap();
        assert!(neg.checks.contains(&"infeasibility-certificate"));
        assert!(neg.checks.contains(&"conic-reality"));
        assert!(!neg.checks.contains(&"definite-point"));
        assert_eq!(neg.definite_point_exists, Some(false));

        // 3 is not a sum of two rational squares: reality and membership
        // stay unclaimed, the definite point is still required.
        let three = resolve("lambda-family", Some(&rat(3, 1))).unwrap();
        assert!(three.checks.contains(&"definite-point"));
        assert!(!three.checks.contains(&"conic-reality"));
        assert!(!three.checks.contains(&"spectra-config"));
    }

    #[test]
    fn two_squares_criterion_matches_known_cases() {
        assert_eq!(sum_of_two_rational_squares(&rat(1, 1)), Some(true));
        assert_eq!(sum_of_two_rational_squares(&rat(2, 1)), Some(true));
        assert_eq!(sum_of_two_rational_squares(&rat(3, 1)), Some(false));
        assert_eq!(sum_of_two_rational_squares(&rat(5, 1)), Some(true));
        assert_eq!(sum_of_two_rational_squares(&rat(9, 1)), Some(true));
        assert_eq!(sum_of_two_rational_squares(&rat(6, 1)), Some(false));
        // 13/17: both primes are 1 mod 4.
        assert_eq!(sum_of_two_rational_squares(&rat(13, 17)), Some(true));
        // 3/4: the prime 3 appears once in numerator * denominator.
        assert_eq!(sum_of_two_rational_squares(&rat(3, 4)), Some(false));
        // 27/3 = 9 reduces before the test sees it.
        assert_eq!(sum_of_two_rational_squares(&rat(27, 3)), Some(true));
    }
}
