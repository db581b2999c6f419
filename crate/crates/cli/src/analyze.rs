//! Stage-by-stage analysis of a pencil read from a file.
//!
//! Key operations:
//! - [`analyze`]: runs the pipeline: determinant, cone test, rank profile
//!   at random points, base locus of the quadric web, and a definite-point
//!   search with a certificate attempt as fallback.
//!
//! Design notes: a degenerate determinant or a positive-dimensional base
//! locus is an analysis finding, not a process failure; each stage records
//! an outcome string so downstream tooling can branch on it. Stages after
//! a degenerate determinant that need the quartic are skipped explicitly.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use symmetroid::error::Error;
use symmetroid::pencil::SymmetricPencil;
use symmetroid::solve::ProjPoint;
use symmetroid::spectra::{
    find_infeasibility_certificate, pd_search, verify_infeasibility_certificate,
};
use symmetroid::web::web_base_locus;
use symmetroid::GaussianRational;

use crate::report::{AnalyzeFinding, AnalyzeReport};

/// Random projective points tried when profiling ranks.
const RANK_SAMPLES: usize = 24;

pub fn analyze(pencil: &SymmetricPencil, file: &str, seed: u64, budget: usize) -> AnalyzeReport {
    let mut findings = Vec::new();
    let mut record = |stage: &str, start: Instant, outcome: String, detail: String| {
        findings.push(AnalyzeFinding {
            stage: stage.to_string(),
            outcome,
            detail,
            millis: start.elapsed().as_millis(),
        });
    };

    let start = Instant::now();
    let quartic = pencil.quartic();
    let degenerate = match &quartic {
        Ok(f) => {
            record(
                "determinant",
                start,
                "quartic".to_string(),
                format!("{} terms, degree {:?}", f.terms().count(), f.homogeneous_degree()),
            );
            false
        }
        Err(Error::DegeneratePencil) => {
            record(
                "determinant",
                start,
                "degenerate".to_string(),
                "determinant vanishes identically".to_string(),
            );
            true
        }
        Err(e) => {
            record("determinant", start, "error".to_string(), e.to_string());
            true
        }
    };

    let start = Instant::now();
    match pencil.cone_vertex_space() {
        Ok(vertex) if vertex.is_empty() => record(
            "cone-test",
            start,
            "not-a-cone".to_string(),
            "cone vertex space is empty".to_string(),
        ),
        Ok(vertex) => record(
            "cone-test",
            start,
            "cone".to_string(),
            format!(
                "vertex space of dimension {}: the determinant ignores {} independent directions",
                vertex.len(),
                vertex.len()
            ),
        ),
        Err(e) => record("cone-test", start, "error".to_string(), e.to_string()),
    }

    let start = Instant::now();
    if degenerate {
        record(
            "rank-profile",
            start,
            "skipped".to_string(),
            "no quartic to profile".to_string(),
        );
    } else {
        match rank_profile(pencil, seed) {
            Ok(histogram) => {
                let described: Vec<String> = histogram
                    .iter()
                    .enumerate()
                    .filter(|(_, n)| **n > 0)
                    .map(|(rank, n)| format!("rank {rank}: {n}"))
                    .collect();
                record(
                    "rank-profile",
                    start,
                    "profiled".to_string(),
                    format!("{} random points: {}", RANK_SAMPLES, described.join(", ")),
                );
            }
            Err(e) => record("rank-profile", start, "error".to_string(), e.to_string()),
        }
    }

    let start = Instant::now();
    match web_base_locus(pencil, seed) {
        Ok(base) => {
            let points: Vec<String> = base
                .solutions
                .iter()
                .map(|s| format!("{} (mult {})", s.point, s.multiplicity))
                .collect();
            let detail = if base.residual {
                format!(
                    "total degree {}, with an unsplit residual; found: {}",
                    base.total_degree,
                    points.join(", ")
                )
            } else {
                format!("total degree {}: {}", base.total_degree, points.join(", "))
            };
            record("base-locus", start, "zero-dimensional".to_string(), detail);
        }
        Err(Error::PositiveDimensional) => record(
            "base-locus",
            start,
            "positive-dimensional".to_string(),
            "the web's base locus contains a curve; the four-point analysis does not apply"
                .to_string(),
        ),
        Err(e) => record("base-locus", start, "error".to_string(), e.to_string()),
    }

    let start = Instant::now();
    match pd_search(pencil, budget, seed) {
        Ok(Some(point)) => {
            let coords: Vec<String> = point.iter().map(BigRational::to_string).collect();
            record(
                "spectrahedron",
                start,
                "definite-point".to_string(),
                format!("A(p) is positive definite at p = ({})", coords.join(", ")),
            );
        }
        Ok(None) => {
            let detail = match find_infeasibility_certificate(pencil) {
                Ok(Some(cert)) => match verify_infeasibility_certificate(pencil, &cert) {
                    Ok(true) => {
                        "no definite point found; a verified trace certificate proves the interior empty"
                            .to_string()
                    }
                    Ok(false) | Err(_) => format!(
                        "no definite point within a budget of {budget}; certificate attempt failed verification"
                    ),
                },
                Ok(None) | Err(_) => format!(
                    "no definite point within a budget of {budget}; no trace certificate found"
                ),
            };
            record("spectrahedron", start, "no-definite-point".to_string(), detail);
        }
        Err(e) => record("spectrahedron", start, "error".to_string(), e.to_string()),
    }

    AnalyzeReport {
        file: file.to_string(),
        seed,
        version: env!("CARGO_PKG_VERSION").to_string(),
        num_vars: pencil.num_vars(),
        findings,
    }
}

/// Rank histogram (index = rank) over random small-coordinate points.
fn rank_profile(pencil: &SymmetricPencil, seed: u64) -> Result<[usize; 5], Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x70726f66);
    let n = pencil.num_vars();
    let mut histogram = [0usize; 5];
    let mut drawn = 0usize;
    while drawn < RANK_SAMPLES {
        let coords: Vec<GaussianRational> = (0..n)
            .map(|_| {
                GaussianRational::from_rational(BigRational::from_integer(BigInt::from(
                    rng.gen_range(-5i64..=5),
                )))
            })
            .collect();
        if coords.iter().all(|c| c.is_zero()) {
            continue;
        }
        let point = ProjPoint::new(coords)?;
        let rank = pencil.rank_at(&point)?;
        histogram[rank] += 1;
        drawn += 1;
    }
    Ok(histogram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use symmetroid::pencil::parse_pencil_file;

    const SURFACE_EXAMPLE: &str = "n=5\n\
        A0:\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n\
        A1:\n0 0 1 0\n0 0 0 0\n1 0 0 0\n0 0 0 0\n\
        A2:\n0 0 0 1\n0 0 0 0\n0 0 0 0\n1 0 0 0\n\
        A3:\n0 0 0 0\n0 0 1 0\n0 1 0 0\n0 0 0 0\n\
        A4:\n0 0 0 0\n0 0 0 1\n0 0 0 0\n0 1 0 0\n";

    /// The web reduces to y0^2, y1^2, y0 y2, y1 y3, whose common zeros
    /// form the line y0 = y1 = 0.
    const CURVE_BASE: &str = "n=4\n\
        A0:\n1 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n\
        A1:\n0 0 0 0\n0 1 0 0\n0 0 0 0\n0 0 0 0\n\
        A2:\n0 0 1 0\n0 0 0 0\n1 0 0 0\n0 0 0 0\n\
        A3:\n0 0 0 0\n0 0 0 1\n0 0 0 0\n0 1 0 0\n";

    #[test]
    fn healthy_pencil_reports_every_stage() {
        let pencil = parse_pencil_file(SURFACE_EXAMPLE).unwrap();
        let report = analyze(&pencil, "inline", 7, 64);
        let stages: Vec<&str> = report.findings.iter().map(|f| f.stage.as_str()).collect();
        assert_eq!(
            stages,
            ["determinant", "cone-test", "rank-profile", "base-locus", "spectrahedron"]
        );
        assert_eq!(report.findings[0].outcome, "quartic");
        assert_eq!(report.findings[1].outcome, "not-a-cone");
        assert_eq!(report.findings[4].outcome, "definite-point");
    }

    #[test]
    fn positive_dimensional_base_is_a_finding_not_an_error() {
        let pencil = parse_pencil_file(CURVE_BASE).unwrap();
        let report = analyze(&pencil, "inline", 7, 8);
        let base = report.findings.iter().find(|f| f.stage == "base-locus").unwrap();
        assert_eq!(base.outcome, "positive-dimensional");
    }
}
