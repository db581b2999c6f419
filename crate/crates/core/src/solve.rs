//! Zero-dimensional solving over Q(i).
//!
//! Strategy: Groebner bases certify finiteness (staircase pure powers),
//! elimination produces univariate eliminants, and roots are extracted
//! exactly. Rational roots come from the rational root theorem applied to
//! the gcd of the real and imaginary coefficient parts; non-real Q(i) roots
//! a + b*I come from the real system Re = Im = 0 in (a, s = b^2), solved by
//! the same machinery in rational-only mode. Roots the extraction cannot
//! express in Q(i) set a residual flag instead of failing.
//!
//! Multiplicities are local: the length of a zero-dimensional scheme at a
//! point is recovered by saturating with a random linear form through the
//! point (minimum over several seeded draws).

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{sqrt_rational, GaussianRational};
use crate::error::Error;
use crate::ideal::{
    buchberger, normal_form, quotient_dimension, saturate, staircase_is_zero_dimensional,
    IdealBasis, TermOrder,
};
use crate::linalg::Mat;
use crate::poly::MultiPoly;

// ---------------------------------------------------------------------------
// Dense univariate polynomials
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over Q(i); no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> GaussianRational {
        self.coeffs.get(i).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Converts a multivariate polynomial using at most one variable.
    pub fn from_multipoly(p: &MultiPoly) -> Result<Self, Error> {
        if p.vars().len() > 1 {
            return Err(Error::Parse(format!(
                "expected a univariate polynomial, found variables {:?}",
                p.vars()
            )));
        }
        let mut coeffs = vec![GaussianRational::zero(); (p.degree() + 1) as usize];
        for (key, c) in p.terms() {
            let e = key.first().copied().unwrap_or(0) as usize;
            coeffs[e] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &GaussianRational::from_int(i as i64))
            .collect();
        UniPoly::new(coeffs)
    }

    pub fn conj_coeffs(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs =
            vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        UniPoly::new(coeffs)
    }

    /// Euclidean division; divisor must be nonzero.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        let lead_inv = d.coeffs.last().unwrap().inv().expect("nonzero leading coefficient");
        if r.len() <= dd {
            return (UniPoly::zero(), UniPoly::new(r));
        }
        let mut q = vec![GaussianRational::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let f = &r[i] * &lead_inv;
            q[i - dd] = f.clone();
            for (k, dc) in d.coeffs.iter().enumerate() {
                let sub = dc * &f;
                r[i - dd + k] -= &sub;
            }
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let inv = self.coeffs.last().unwrap().inv().expect("nonzero leading coefficient");
        UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Squarefree part f / gcd(f, f').
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.monic();
        }
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }
}

// ---------------------------------------------------------------------------
// Rational root extraction
// ---------------------------------------------------------------------------

/// Prime factorization by trial division. Factors above the trial bound are
/// returned as-is with `complete = false` when they may be composite.
fn factorize(n: &BigInt) -> (Vec<(BigInt, u32)>, bool) {
    let mut n = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let mut complete = true;
    if n.is_zero() || n.is_one() {
        return (out, true);
    }
    let push = |p: BigInt, out: &mut Vec<(BigInt, u32)>| {
        if let Some(last) = out.last_mut() {
            if last.0 == p {
                last.1 += 1;
                return;
            }
        }
        out.push((p, 1));
    };
    let two = BigInt::from(2);
    while (&n % &two).is_zero() {
        n /= &two;
        push(two.clone(), &mut out);
    }
    let mut d = BigInt::from(3);
    let bound = BigInt::from(1_000_000u64);
    while &(&d * &d) <= &n && d <= bound {
        while (&n % &d).is_zero() {
            n /= &d;
            push(d.clone(), &mut out);
        }
        d += 2;
    }
    if !n.is_one() {
        // n has no factor <= 10^6; it is prime if below 10^12.
        if n > BigInt::from(1_000_000_000_000u64) {
            complete = false;
        }
        push(n, &mut out);
    }
    (out, complete)
}

fn divisors(n: &BigInt, cap: usize) -> (Vec<BigInt>, bool) {
    let (factors, complete) = factorize(n);
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
        if divs.len() > cap {
            return (divs, false);
        }
    }
    (divs, complete)
}

/// All rational roots of a polynomial with rational coefficients, plus a
/// completeness flag (false when divisor enumeration was truncated).
fn rational_roots(f: &UniPoly) -> (Vec<BigRational>, bool) {
    debug_assert!(f.is_real());
    if f.is_zero() || f.degree() == 0 {
        return (Vec::new(), true);
    }
    // Strip t^k.
    let mut coeffs: Vec<BigRational> = f.coeffs.iter().map(|c| c.re().clone()).collect();
    let mut roots = Vec::new();
    let mut shift = 0;
    while coeffs.first().is_some_and(|c| c.is_zero()) {
        coeffs.remove(0);
        shift += 1;
    }
    if shift > 0 {
        roots.push(BigRational::zero());
    }
    if coeffs.len() <= 1 {
        return (roots, true);
    }
    // Clear denominators to a primitive integer polynomial.
    let mut lcm = BigInt::one();
    for c in &coeffs {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let a0 = ints.first().unwrap().clone();
    let ad = ints.last().unwrap().clone();
    let (ps, c1) = divisors(&a0, 4096);
    let (qs, c2) = divisors(&ad, 4096);
    let mut complete = c1 && c2;
    if ps.len() * qs.len() > 200_000 {
        complete = false;
    }
    let poly = UniPoly::new(
        ints.iter().map(|c| GaussianRational::from_rational(BigRational::from_integer(c.clone()))).collect(),
    );
    let mut seen = std::collections::BTreeSet::new();
    for p in &ps {
        for q in &qs {
            if seen.len() > 200_000 {
                break;
            }
            for sign in [1i64, -1] {
                let cand = BigRational::new(p * BigInt::from(sign), q.clone());
                if !seen.insert(cand.clone()) {
                    continue;
                }
                if poly.eval(&GaussianRational::from_rational(cand.clone())).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    (roots, complete)
}

// ---------------------------------------------------------------------------
// Q(i) root extraction
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootMode {
    /// Extract all roots lying in Q(i).
    GaussianRational,
    /// Extract only rational roots (used internally; avoids recursion).
    RationalOnly,
}

/// Roots in Q(i) with multiplicities, plus a residual flag set when factors
/// without Q(i) roots remain.
pub fn qi_roots(f: &UniPoly, mode: RootMode) -> Result<(Vec<(GaussianRational, usize)>, bool), Error> {
    if f.is_zero() {
        return Err(Error::Parse("root extraction on the zero polynomial".into()));
    }
    if f.degree() == 0 {
        return Ok((Vec::new(), false));
    }
    let mut candidates: Vec<GaussianRational> = Vec::new();

    // Rational roots: common roots of the real and imaginary parts.
    let fre = UniPoly::new(
        f.coeffs.iter().map(|c| GaussianRational::from_rational(c.re().clone())).collect(),
    );
    let fim = UniPoly::new(
        f.coeffs.iter().map(|c| GaussianRational::from_rational(c.im().clone())).collect(),
    );
    let g = if fim.is_zero() {
        fre.clone()
    } else if fre.is_zero() {
        fim.clone()
    } else {
        fre.gcd(&fim)
    };
    if g.degree() >= 1 {
        let (rr, _) = rational_roots(&g);
        candidates.extend(rr.into_iter().map(GaussianRational::from_rational));
    }

    if mode == RootMode::GaussianRational {
        // Non-real candidates a + b*I from the real norm polynomial.
        let norm = if f.is_real() { f.monic() } else { f.mul(&f.conj_coeffs()).monic() };
        let nsf = norm.squarefree_part();
        if nsf.degree() >= 2 {
            let (pairs, _) = nonreal_parameter_solutions(&nsf)?;
            for (a, s) in pairs {
                if s.is_positive() {
                    if let Some(b) = sqrt_rational(&s) {
                        if !b.is_zero() {
                            let re = GaussianRational::from_rational(a);
                            let im = GaussianRational::new(BigRational::zero(), b);
                            candidates.push(&re + &im);
                            candidates.push(&re - &im);
                        }
                    }
                }
            }
        }
    }

    // Confirm candidates on f itself and extract multiplicities.
    let mut roots: Vec<(GaussianRational, usize)> = Vec::new();
    let mut reduced = f.monic();
    candidates.sort_by(gaussian_cmp);
    candidates.dedup();
    for cand in candidates {
        let mut mult = 0;
        loop {
            let lin = UniPoly::new(vec![-&cand, GaussianRational::one()]);
            let (q, r) = reduced.divrem(&lin);
            if r.is_zero() {
                mult += 1;
                reduced = q;
            } else {
                break;
            }
        }
        if mult > 0 {
            roots.push((cand, mult));
        }
    }
    // Extraction is complete exactly when f split into the found linear
    // factors; any missed candidate shows up in what remains unsplit.
    let residual = reduced.degree() >= 1;
    Ok((roots, residual))
}

/// Deterministic total order on Q(i) values (by real then imaginary part).
pub fn gaussian_cmp(a: &GaussianRational, b: &GaussianRational) -> Ordering {
    a.re().cmp(b.re()).then_with(|| a.im().cmp(b.im()))
}

/// Rational solutions (a, s) of Re(N(a + b*I)) = Im(N(a + b*I))/b = 0 with
/// s standing for b^2, for a real squarefree polynomial N.
fn nonreal_parameter_solutions(
    n: &UniPoly,
) -> Result<(Vec<(BigRational, BigRational)>, bool), Error> {
    let a = MultiPoly::var("a");
    let s = MultiPoly::var("s");
    let mut u = MultiPoly::zero();
    let mut vt = MultiPoly::zero();
    let deg = n.degree();
    // Pascal's triangle row by row.
    let mut binom: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for k in 1..=deg {
        let prev = &binom[k - 1];
        let mut row = vec![BigInt::one()];
        for j in 1..k {
            row.push(&prev[j - 1] + &prev[j]);
        }
        row.push(BigInt::one());
        binom.push(row);
    }
    for (k, c) in n.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for j in 0..=k {
            let b = BigRational::from_integer(binom[k][j].clone());
            let coeff = GaussianRational::from_rational(c.re() * &b);
            let apow = a.pow((k - j) as u32);
            if j % 2 == 0 {
                let sign = if (j / 2) % 2 == 0 { 1 } else { -1 };
                let term = &apow.scale(&(&coeff * &GaussianRational::from_int(sign)))
                    * &s.pow((j / 2) as u32);
                u = &u + &term;
            } else {
                let sign = if ((j - 1) / 2) % 2 == 0 { 1 } else { -1 };
                let term = &apow.scale(&(&coeff * &GaussianRational::from_int(sign)))
                    * &s.pow(((j - 1) / 2) as u32);
                vt = &vt + &term;
            }
        }
    }
    if vt.is_zero() {
        // No odd part: N is a polynomial in t alone with no imaginary trace;
        // cannot happen for squarefree N of degree >= 2 with nonreal roots,
        // but handle it as "no candidates".
        return Ok((Vec::new(), false));
    }
    let sols = solve_affine(
        &[u, vt],
        &["a".to_string(), "s".to_string()],
        RootMode::RationalOnly,
    )?;
    let pairs = sols
        .points
        .iter()
        .map(|asg| {
            let av = asg.get("a").cloned().unwrap_or_else(GaussianRational::zero);
            let sv = asg.get("s").cloned().unwrap_or_else(GaussianRational::zero);
            (av.re().clone(), sv.re().clone())
        })
        .collect();
    Ok((pairs, sols.residual))
}

// ---------------------------------------------------------------------------
// Affine solving
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct AffineSolutions {
    /// Variable assignments, sorted deterministically.
    pub points: Vec<BTreeMap<String, GaussianRational>>,
    /// True when solutions outside Q(i) remain unexpressed.
    pub residual: bool,
}

/// All Q(i) points of a zero-dimensional affine system over the given
/// ambient variables. Positive-dimensional systems are an error.
pub fn solve_affine(
    gens: &[MultiPoly],
    vars: &[String],
    mode: RootMode,
) -> Result<AffineSolutions, Error> {
    let nonzero: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        if vars.is_empty() {
            return Ok(AffineSolutions { points: vec![BTreeMap::new()], residual: false });
        }
        return Err(Error::PositiveDimensional);
    }
    if vars.is_empty() {
        // Constant nonzero generators: inconsistent.
        return Ok(AffineSolutions { points: Vec::new(), residual: false });
    }
    let gb = buchberger(&nonzero, TermOrder::Grevlex)?;
    if gb.is_unit_ideal() {
        return Ok(AffineSolutions { points: Vec::new(), residual: false });
    }
    for v in vars {
        if !gb.vars().contains(v) {
            return Err(Error::PositiveDimensional);
        }
    }
    if !staircase_is_zero_dimensional(&gb)? {
        return Err(Error::PositiveDimensional);
    }

    if vars.len() == 1 {
        let f = UniPoly::from_multipoly(&gb.gens()[0])?;
        let (roots, residual) = qi_roots(&f, mode)?;
        let mut points = Vec::new();
        for (r, _) in roots {
            let mut asg = BTreeMap::new();
            asg.insert(vars[0].clone(), r);
            points.push(asg);
        }
        return Ok(AffineSolutions { points, residual });
    }

    // Eliminate all but the last variable, extract roots, and recurse.
    let keep = vars.last().unwrap().clone();
    let drop: Vec<String> = vars[..vars.len() - 1].to_vec();
    let elim = crate::ideal::eliminate(gb.gens(), &drop)?;
    if elim.gens().is_empty() {
        return Err(Error::PositiveDimensional);
    }
    let eliminant = UniPoly::from_multipoly(&elim.gens()[0])?;
    let (roots, mut residual) = qi_roots(&eliminant, mode)?;
    let mut points = Vec::new();
    for (r, _) in roots {
        let mut map = BTreeMap::new();
        map.insert(keep.clone(), MultiPoly::constant(r.clone()));
        let fiber: Vec<MultiPoly> = gb.gens().iter().map(|g| g.substitute(&map)).collect();
        let fiber_nonzero: Vec<MultiPoly> = fiber.into_iter().filter(|g| !g.is_zero()).collect();
        if fiber_nonzero.is_empty() {
            return Err(Error::PositiveDimensional);
        }
        let sub = solve_affine(&fiber_nonzero, &drop, mode)?;
        residual |= sub.residual;
        for mut asg in sub.points {
            asg.insert(keep.clone(), r.clone());
            points.push(asg);
        }
    }
    points.sort_by(|p, q| {
        for v in vars {
            let c = gaussian_cmp(&p[v], &q[v]);
            if c != Ordering::Equal {
                return c;
            }
        }
        Ordering::Equal
    });
    Ok(AffineSolutions { points, residual })
}

// ---------------------------------------------------------------------------
// Projective points and solving
// ---------------------------------------------------------------------------

/// A point of projective space over Q(i), scaled so the first nonzero
/// coordinate is 1. Equality is exact equality of the canonical form.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjPoint {
    coords: Vec<GaussianRational>,
}

impl ProjPoint {
    pub fn new(coords: Vec<GaussianRational>) -> Result<Self, Error> {
        let lead = coords.iter().find(|c| !c.is_zero()).cloned();
        let Some(lead) = lead else {
            return Err(Error::Parse("projective point needs a nonzero coordinate".into()));
        };
        let inv = lead.inv()?;
        Ok(ProjPoint { coords: coords.iter().map(|c| c * &inv).collect() })
    }

    pub fn coords(&self) -> &[GaussianRational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn conj(&self) -> ProjPoint {
        ProjPoint::new(self.coords.iter().map(|c| c.conj()).collect())
            .expect("conjugate of a nonzero point is nonzero")
    }

    pub fn is_real(&self) -> bool {
        self.coords.iter().all(|c| c.is_real())
    }

    /// Standard basis point e_i of P^(n-1).
    pub fn basis(n: usize, i: usize) -> ProjPoint {
        let mut coords = vec![GaussianRational::zero(); n];
        coords[i] = GaussianRational::one();
        ProjPoint { coords }
    }

    pub fn cmp_canonical(&self, other: &ProjPoint) -> Ordering {
        for (a, b) in self.coords.iter().zip(other.coords.iter()) {
            let c = gaussian_cmp(a, b);
            if c != Ordering::Equal {
                return c;
            }
        }
        self.coords.len().cmp(&other.coords.len())
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}]",
            self.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" : ")
        )
    }
}

impl std::fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug)]
pub struct ProjSolution {
    pub point: ProjPoint,
    pub multiplicity: usize,
    /// Direction spanning the tangent line of a fat point, when the scheme
    /// has a one-dimensional tangent space there.
    pub tangent: Option<ProjPoint>,
}

#[derive(Clone, Debug)]
pub struct ProjSolutions {
    pub solutions: Vec<ProjSolution>,
    /// Length of the full zero-dimensional scheme, residual parts included.
    pub total_degree: usize,
    /// True when scheme length is not exhausted by the Q(i) points found.
    pub residual: bool,
}

/// Substitutes var[k] = 1 into homogeneous generators.
fn chart_system(gens: &[MultiPoly], vars: &[String], k: usize) -> Vec<MultiPoly> {
    let mut map = BTreeMap::new();
    map.insert(vars[k].clone(), MultiPoly::from_int(1));
    gens.iter().map(|g| g.substitute(&map)).collect()
}

/// Length of the part of a zero-dimensional affine scheme lying on the
/// vanishing locus of a generic linear combination of `forms` (a linear
/// space through the relevant points). Minimum over seeded draws.
fn length_on_linear_locus(
    gens: &[MultiPoly],
    total: usize,
    forms: &[MultiPoly],
    rng: &mut ChaCha8Rng,
) -> Result<usize, Error> {
    let mut best = None;
    for _ in 0..3 {
        let mut l = MultiPoly::zero();
        for f in forms {
            let c = GaussianRational::from_int(rng.gen_range(1..=11));
            l = &l + &f.scale(&c);
        }
        if l.is_zero() {
            continue;
        }
        let sat = saturate(gens, &l)?;
        let dim = if sat.is_empty() {
            return Err(Error::PositiveDimensional);
        } else {
            let gb = buchberger(&sat, TermOrder::Grevlex)?;
            if gb.is_unit_ideal() {
                0
            } else {
                quotient_dimension(&gb)?
            }
        };
        let on_locus = total.saturating_sub(dim);
        best = Some(best.map_or(on_locus, |b: usize| b.min(on_locus)));
    }
    best.ok_or_else(|| Error::Parse("no usable linear form drawn".into()))
}

/// All Q(i) points of the projective zero locus of homogeneous generators,
/// with local multiplicities, tangent directions for fat points, and the
/// total scheme length. Positive-dimensional loci are an error (a quartic
/// whose web has a base curve is reducible and rejected).
pub fn solve_projective(
    gens: &[MultiPoly],
    vars: &[String],
    seed: u64,
) -> Result<ProjSolutions, Error> {
    let n = vars.len();
    let nonzero: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Err(Error::PositiveDimensional);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x70726f6a);
    let mut solutions: Vec<ProjSolution> = Vec::new();
    let mut total_degree = 0usize;
    let mut residual = false;
    let mut found_mult_sum = 0usize;

    for k in 0..n {
        let chart_vars: Vec<String> =
            vars.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, v)| v.clone()).collect();
        let system = chart_system(&nonzero, vars, k);
        let system: Vec<MultiPoly> = system.into_iter().filter(|g| !g.is_zero()).collect();
        if system.is_empty() {
            return Err(Error::PositiveDimensional);
        }
        let gb = buchberger(&system, TermOrder::Grevlex)?;
        let chart_dim = if gb.is_unit_ideal() {
            0
        } else {
            for v in &chart_vars {
                if !gb.vars().contains(v) {
                    return Err(Error::PositiveDimensional);
                }
            }
            if !staircase_is_zero_dimensional(&gb)? {
                return Err(Error::PositiveDimensional);
            }
            quotient_dimension(&gb)?
        };
        if chart_dim == 0 {
            continue;
        }
        // Length of the cell {vars[j] = 0 for j < k} inside this chart.
        let cell_len = if k == 0 {
            chart_dim
        } else {
            let earlier: Vec<MultiPoly> = vars[..k].iter().map(|v| MultiPoly::var(v)).collect();
            length_on_linear_locus(gb.gens(), chart_dim, &earlier, &mut rng)?
        };
        total_degree += cell_len;
        if cell_len == 0 {
            continue;
        }
        // Points of the cell: solve the chart with the earlier variables cut.
        let mut cut = system.clone();
        cut.extend(vars[..k].iter().map(|v| MultiPoly::var(v)));
        let affine = solve_affine(&cut, &chart_vars, RootMode::GaussianRational)?;
        residual |= affine.residual;
        for asg in affine.points {
            let mut coords = Vec::with_capacity(n);
            for (i, v) in vars.iter().enumerate() {
                if i == k {
                    coords.push(GaussianRational::one());
                } else {
                    coords.push(asg[v].clone());
                }
            }
            let point = ProjPoint::new(coords)?;
            // Local multiplicity: saturate by a random linear form through
            // the point, inside the full chart (not the cut system).
            let through: Vec<MultiPoly> = chart_vars
                .iter()
                .map(|v| &MultiPoly::var(v) - &MultiPoly::constant(asg[v].clone()))
                .collect();
            let mult = length_on_linear_locus(gb.gens(), chart_dim, &through, &mut rng)?;
            let mult = mult.max(1);
            found_mult_sum += mult;
            let tangent = if mult >= 2 {
                tangent_direction(gb.gens(), &chart_vars, &asg, vars, k)?
            } else {
                None
            };
            solutions.push(ProjSolution { point, multiplicity: mult, tangent });
        }
    }
    solutions.sort_by(|a, b| a.point.cmp_canonical(&b.point));
    residual |= found_mult_sum != total_degree;
    Ok(ProjSolutions { solutions, total_degree, residual })
}

/// Kernel of the Jacobian at an affine point, lifted to projective
/// coordinates, when it is one-dimensional.
fn tangent_direction(
    gens: &[MultiPoly],
    chart_vars: &[String],
    point: &BTreeMap<String, GaussianRational>,
    vars: &[String],
    k: usize,
) -> Result<Option<ProjPoint>, Error> {
    let mut rows = Vec::new();
    for g in gens {
        let mut row = Vec::new();
        for v in chart_vars {
            let d = if g.vars().contains(v) { g.diff(v)? } else { MultiPoly::zero() };
            row.push(d.eval(point)?);
        }
        rows.push(row);
    }
    let jac = Mat::from_rows(rows)?;
    let kernel = jac.kernel_basis();
    if kernel.len() != 1 {
        return Ok(None);
    }
    let mut coords = Vec::with_capacity(vars.len());
    let mut it = kernel[0].iter();
    for i in 0..vars.len() {
        if i == k {
            coords.push(GaussianRational::zero());
        } else {
            coords.push(it.next().unwrap().clone());
        }
    }
    Ok(Some(ProjPoint::new(coords)?))
}

/// Local length of the zero-dimensional projective scheme cut out by
/// homogeneous `gens` at `point`: the chart of the point's first nonzero
/// coordinate is dehomogenized and the length there is measured by
/// saturating with random linear forms through the point.
pub fn local_length_at(
    gens: &[MultiPoly],
    vars: &[String],
    point: &ProjPoint,
    seed: u64,
) -> Result<usize, Error> {
    let k = point
        .coords()
        .iter()
        .position(|c| !c.is_zero())
        .expect("projective point has a nonzero coordinate");
    let chart_vars: Vec<String> =
        vars.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, v)| v.clone()).collect();
    let system: Vec<MultiPoly> =
        chart_system(gens, vars, k).into_iter().filter(|g| !g.is_zero()).collect();
    if system.is_empty() {
        return Err(Error::PositiveDimensional);
    }
    let gb = buchberger(&system, TermOrder::Grevlex)?;
    if gb.is_unit_ideal() {
        return Ok(0);
    }
    for v in &chart_vars {
        if !gb.vars().contains(v) {
            return Err(Error::PositiveDimensional);
        }
    }
    if !staircase_is_zero_dimensional(&gb)? {
        return Err(Error::PositiveDimensional);
    }
    let chart_dim = quotient_dimension(&gb)?;
    let mut asg: BTreeMap<String, GaussianRational> = BTreeMap::new();
    for (i, v) in vars.iter().enumerate() {
        if i != k {
            asg.insert(v.clone(), &point.coords()[i] * point.coords()[k].inv()?);
        }
    }
    let through: Vec<MultiPoly> = chart_vars
        .iter()
        .map(|v| &MultiPoly::var(v) - &MultiPoly::constant(asg[v].clone()))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6c6f636c);
    length_on_linear_locus(gb.gens(), chart_dim, &through, &mut rng)
}

/// Membership of a point in the projective zero set of homogeneous forms.
pub fn vanishes_at(gens: &[MultiPoly], vars: &[String], point: &ProjPoint) -> Result<bool, Error> {
    let asg: BTreeMap<String, GaussianRational> =
        vars.iter().cloned().zip(point.coords().iter().cloned()).collect();
    for g in gens {
        if !g.eval(&asg)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Normal form helper: reduce `p` modulo the Groebner basis of `gens`.
pub fn reduce_mod(p: &MultiPoly, gens: &[MultiPoly]) -> Result<MultiPoly, Error> {
    let gb: IdealBasis = buchberger(gens, TermOrder::Grevlex)?;
    normal_form(p, &gb)
}
