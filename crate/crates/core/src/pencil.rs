//! Symmetric linear matrix pencils A(x) = sum A_i x_i and their quartics.
//!
//! Key operations: the determinant quartic and its Jacobian ideal, rank-k
//! loci as minor ideals, exact rank evaluation at points, cone-vertex
//! detection, component claims (a named subvariety with an expected rank)
//! with exact sample-point generation, multiplicities of rank-locus
//! components as local lengths at generic points, and a plain-text file
//! format.
//!
//! Design notes: coefficient matrices are real rational and symmetric;
//! everything downstream is exact. Sampling prefers structure (kernels of
//! the linear forms, rational points of a residual quadric) over blind
//! search so that points on positive-codimension components are found
//! deterministically.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::GaussianRational;
use crate::error::Error;
use crate::ideal::{
    buchberger, normal_form, staircase_is_zero_dimensional, standard_monomials, TermOrder,
};
use crate::linalg::Mat;
use crate::poly::{det_bareiss, det_cofactor, MultiPoly};
use crate::solve::ProjPoint;

/// A real symmetric 4x4 matrix pencil in variables x0..x{n-1}.
#[derive(Clone, Debug)]
pub struct SymmetricPencil {
    mats: Vec<Mat>,
    vars: Vec<String>,
}

pub const MAX_VARS: usize = 6;
pub const MIN_VARS: usize = 2;

impl SymmetricPencil {
    pub fn new(mats: Vec<Mat>) -> Result<Self, Error> {
        let n = mats.len();
        if !(MIN_VARS..=MAX_VARS).contains(&n) {
            return Err(Error::MatrixShape(format!(
                "expected between {MIN_VARS} and {MAX_VARS} coefficient matrices, found {n}"
            )));
        }
        for (i, m) in mats.iter().enumerate() {
            if m.rows() != 4 || m.cols() != 4 {
                return Err(Error::MatrixShape(format!(
                    "coefficient matrix {} is {}x{}, expected 4x4",
                    i,
                    m.rows(),
                    m.cols()
                )));
            }
            if !m.is_symmetric() {
                return Err(Error::NotSymmetric(i));
            }
            for r in 0..4 {
                for c in 0..4 {
                    if !m.get(r, c).is_real() {
                        return Err(Error::NotReal(format!(
                            "coefficient matrix {i} entry ({r},{c})"
                        )));
                    }
                }
            }
        }
        if mats.iter().all(|m| m.is_zero()) {
            return Err(Error::ZeroPencil);
        }
        let vars = (0..n).map(|i| format!("x{i}")).collect();
        Ok(SymmetricPencil { mats, vars })
    }

    pub fn num_vars(&self) -> usize {
        self.mats.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn coefficient_matrices(&self) -> &[Mat] {
        &self.mats
    }

    /// The symbolic matrix A(x) with linear-form entries.
    pub fn symbolic_matrix(&self) -> Vec<Vec<MultiPoly>> {
        let mut rows = vec![vec![MultiPoly::zero(); 4]; 4];
        for (i, m) in self.mats.iter().enumerate() {
            let xi = MultiPoly::var(&self.vars[i]);
            for (r, row) in rows.iter_mut().enumerate() {
                for (c, entry) in row.iter_mut().enumerate() {
                    let coeff = m.get(r, c);
                    if !coeff.is_zero() {
                        *entry = &*entry + &xi.scale(coeff);
                    }
                }
            }
        }
        rows
    }

    /// A(p) for a projective point p; well-defined up to scale.
    pub fn gram_at(&self, p: &ProjPoint) -> Result<Mat, Error> {
        self.gram_at_coords(p.coords())
    }

    pub fn gram_at_coords(&self, coords: &[GaussianRational]) -> Result<Mat, Error> {
        if coords.len() != self.mats.len() {
            return Err(Error::MatrixShape(format!(
                "point has {} coordinates, pencil has {} variables",
                coords.len(),
                self.mats.len()
            )));
        }
        let mut acc = Mat::zeros(4, 4);
        for (c, m) in coords.iter().zip(self.mats.iter()) {
            acc = acc.add(&m.scale(c));
        }
        Ok(acc)
    }

    pub fn rank_at(&self, p: &ProjPoint) -> Result<usize, Error> {
        Ok(self.gram_at(p)?.rank())
    }

    pub fn corank_at(&self, p: &ProjPoint) -> Result<usize, Error> {
        Ok(4 - self.rank_at(p)?)
    }

    /// det A(x); an identically zero determinant is a degenerate pencil.
    pub fn quartic(&self) -> Result<MultiPoly, Error> {
        let matrix = self.symbolic_matrix();
        let f = det_cofactor(&matrix)?;
        debug_assert_eq!(f, det_bareiss(&matrix).unwrap_or_else(|_| f.clone()));
        if f.is_zero() {
            return Err(Error::DegeneratePencil);
        }
        Ok(f)
    }

    /// All k x k minors, deduplicated using the symmetry minor(R,C) =
    /// minor(C,R). Their common zero locus is the rank <= k-1 locus.
    pub fn minor_ideal(&self, k: usize) -> Result<Vec<MultiPoly>, Error> {
        assert!((1..=4).contains(&k), "minor size must be between 1 and 4");
        let matrix = self.symbolic_matrix();
        let subsets = index_subsets(4, k);
        let mut minors = Vec::new();
        for (ri, rows) in subsets.iter().enumerate() {
            for cols in subsets.iter().skip(ri) {
                let sub: Vec<Vec<MultiPoly>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| matrix[r][c].clone()).collect())
                    .collect();
                let m = det_cofactor(&sub)?;
                if !m.is_zero() {
                    minors.push(m);
                }
            }
        }
        Ok(minors)
    }

    /// Partial derivatives of the quartic; for a homogeneous form these
    /// generate the singular locus ideal.
    pub fn jacobian_ideal(&self) -> Result<Vec<MultiPoly>, Error> {
        let f = self.quartic()?;
        let mut gens = Vec::new();
        for v in &self.vars {
            let d = if f.vars().contains(v) { f.diff(v)? } else { MultiPoly::zero() };
            if !d.is_zero() {
                gens.push(d);
            }
        }
        Ok(gens)
    }

    /// The web of quadrics: q_i(y) = y^T A_i y in variables y0..y3.
    pub fn quadric_web(&self) -> Vec<MultiPoly> {
        let y: Vec<MultiPoly> = (0..4).map(|i| MultiPoly::var(&format!("y{i}"))).collect();
        self.mats
            .iter()
            .map(|m| {
                let mut q = MultiPoly::zero();
                for r in 0..4 {
                    for c in 0..4 {
                        let coeff = m.get(r, c);
                        if !coeff.is_zero() {
                            q = &q + &(&y[r] * &y[c]).scale(coeff);
                        }
                    }
                }
                q
            })
            .collect()
    }

    /// Basis of directions v with directional derivative of the quartic
    /// identically zero; nonempty exactly when the symmetroid is a cone.
    pub fn cone_vertex_space(&self) -> Result<Vec<Vec<GaussianRational>>, Error> {
        let f = self.quartic()?;
        let partials: Vec<MultiPoly> = self
            .vars
            .iter()
            .map(|v| if f.vars().contains(v) { f.diff(v) } else { Ok(MultiPoly::zero()) })
            .collect::<Result<_, _>>()?;
        // Monomial support union, aligned to the full variable list.
        let aligned: Vec<MultiPoly> = partials.iter().map(|p| p.aligned_to(&self.vars)).collect();
        let mut monomials: Vec<Vec<u32>> = Vec::new();
        for p in &aligned {
            for (key, _) in p.terms() {
                if !monomials.contains(key) {
                    monomials.push(key.clone());
                }
            }
        }
        monomials.sort();
        let rows: Vec<Vec<GaussianRational>> = monomials
            .iter()
            .map(|m| aligned.iter().map(|p| p.coeff(m)).collect())
            .collect();
        if rows.is_empty() {
            return Ok(Vec::new());
        }
        Ok(Mat::from_rows(rows)?.kernel_basis())
    }
}

fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn step(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            step(i + 1, n, k, current, out);
            current.pop();
        }
    }
    step(0, n, k, &mut current, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Component claims
// ---------------------------------------------------------------------------

/// A named subvariety of the x-space, given by its ideal generators, with
/// an expected matrix rank along it.
#[derive(Clone, Debug)]
pub struct ComponentClaim {
    pub name: String,
    pub gens: Vec<MultiPoly>,
    pub expected_rank: usize,
}

impl ComponentClaim {
    pub fn new(name: &str, gens: Vec<MultiPoly>, expected_rank: usize) -> Self {
        ComponentClaim { name: name.to_string(), gens, expected_rank }
    }

    /// True when every polynomial in `ideal` reduces to zero modulo the
    /// Groebner basis of this claim's generators (so the claimed locus,
    /// with its scheme structure, sits inside the zero set of `ideal`).
    pub fn contains_ideal(&self, ideal: &[MultiPoly]) -> Result<bool, Error> {
        let gb = buchberger(&self.gens, TermOrder::Grevlex)?;
        for p in ideal {
            if !normal_form(p, &gb)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact points on the claimed variety. The generators must be linear
    /// forms plus at most one quadric; that covers every component shape
    /// the verification checks need, and keeps sampling deterministic.
    pub fn sample_points(
        &self,
        vars: &[String],
        count: usize,
        seed: u64,
    ) -> Result<Vec<ProjPoint>, Error> {
        let mut linear = Vec::new();
        let mut quadrics = Vec::new();
        for g in &self.gens {
            match g.homogeneous_degree() {
                Some(1) => linear.push(g.clone()),
                Some(2) => quadrics.push(g.clone()),
                _ => {
                    return Err(Error::UnsupportedClaim(format!(
                        "claim {} has a generator of degree other than 1 or 2",
                        self.name
                    )))
                }
            }
        }
        if quadrics.len() > 1 {
            return Err(Error::UnsupportedClaim(format!(
                "claim {} has more than one quadric generator",
                self.name
            )));
        }
        let basis = kernel_of_linear_forms(&linear, vars)?;
        if basis.is_empty() {
            return Err(Error::NoSamplePoint(format!(
                "claim {} cuts out the empty set",
                self.name
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x73616d70);
        let mut points = Vec::new();
        if let Some(q) = quadrics.first() {
            // Restrict the quadric to the kernel parametrization.
            let restricted = restrict_to_span(q, &basis, vars)?;
            for attempt in 0..count {
                let t = point_on_quadric(&restricted, basis.len(), &mut rng, attempt)?;
                points.push(combine(&basis, &t)?);
            }
        } else {
            for _ in 0..count {
                loop {
                    let t: Vec<GaussianRational> = (0..basis.len())
                        .map(|_| GaussianRational::from_int(rng.gen_range(-5..=5)))
                        .collect();
                    if t.iter().any(|c| !c.is_zero()) {
                        points.push(combine(&basis, &t)?);
                        break;
                    }
                }
            }
        }
        Ok(points)
    }
}

/// Kernel basis of a set of linear forms, as coordinate vectors.
pub fn kernel_of_linear_forms(
    forms: &[MultiPoly],
    vars: &[String],
) -> Result<Vec<Vec<GaussianRational>>, Error> {
    if forms.is_empty() {
        return Ok((0..vars.len())
            .map(|i| {
                let mut v = vec![GaussianRational::zero(); vars.len()];
                v[i] = GaussianRational::one();
                v
            })
            .collect());
    }
    let rows: Vec<Vec<GaussianRational>> = forms
        .iter()
        .map(|f| {
            let aligned = f.aligned_to(vars);
            (0..vars.len())
                .map(|i| {
                    let mut key = vec![0u32; vars.len()];
                    key[i] = 1;
                    aligned.coeff(&key)
                })
                .collect()
        })
        .collect();
    Ok(Mat::from_rows(rows)?.kernel_basis())
}

/// Substitute x = sum t_j b_j into a polynomial, producing a polynomial in
/// parameters t0..t{k-1}.
pub(crate) fn restrict_to_span(
    p: &MultiPoly,
    basis: &[Vec<GaussianRational>],
    vars: &[String],
) -> Result<MultiPoly, Error> {
    let mut map = BTreeMap::new();
    for (i, v) in vars.iter().enumerate() {
        let mut expr = MultiPoly::zero();
        for (j, b) in basis.iter().enumerate() {
            if !b[i].is_zero() {
                expr = &expr + &MultiPoly::var(&format!("t{j}")).scale(&b[i]);
            }
        }
        map.insert(v.clone(), expr);
    }
    Ok(p.substitute(&map))
}

pub(crate) fn combine(
    basis: &[Vec<GaussianRational>],
    t: &[GaussianRational],
) -> Result<ProjPoint, Error> {
    let n = basis[0].len();
    let mut coords = vec![GaussianRational::zero(); n];
    for (c, b) in t.iter().zip(basis.iter()) {
        for (acc, bi) in coords.iter_mut().zip(b.iter()) {
            *acc += &(c * bi);
        }
    }
    ProjPoint::new(coords)
}

/// A nonzero Q(i) zero of a quadratic form in t0..t{k-1}. Tries small
/// integer vectors, then coordinate lines e_i + s e_j, then random rational
/// lines; a line works when the discriminant of the restricted quadratic
/// has a square root in Q(i). Coordinate lines make definite forms with
/// structured coefficients solvable deterministically. Zeros found earlier
/// are counted against skip so repeated calls return distinct points.
pub(crate) fn point_on_quadric(
    q: &MultiPoly,
    k: usize,
    rng: &mut ChaCha8Rng,
    skip: usize,
) -> Result<Vec<GaussianRational>, Error> {
    let tvars: Vec<String> = (0..k).map(|j| format!("t{j}")).collect();
    let eval = |t: &[GaussianRational]| -> Result<GaussianRational, Error> {
        let asg: BTreeMap<String, GaussianRational> =
            tvars.iter().cloned().zip(t.iter().cloned()).collect();
        q.eval(&asg)
    };
    if q.is_zero() {
        let mut t = vec![GaussianRational::zero(); k];
        t[skip % k] = GaussianRational::one();
        return Ok(t);
    }
    // Zeros of q on the line t = u + s w: solve the quadratic in s.
    let line_zeros = |u: &[GaussianRational],
                      w: &[GaussianRational]|
     -> Result<Vec<Vec<GaussianRational>>, Error> {
        // q(u + s w) = a s^2 + b s + c via three evaluations.
        let at = |s: i64| -> Result<GaussianRational, Error> {
            let sv = GaussianRational::from_int(s);
            let t: Vec<GaussianRational> =
                u.iter().zip(w.iter()).map(|(ui, wi)| ui + &(&sv * wi)).collect();
            eval(&t)
        };
        let c = at(0)?;
        let p1 = at(1)?;
        let m1 = at(-1)?;
        let a = (&(&p1 + &m1) - &(&c + &c)) * GaussianRational::from_frac(1, 2);
        let b = (&p1 - &m1) * GaussianRational::from_frac(1, 2);
        let roots: Vec<GaussianRational> = if a.is_zero() {
            if b.is_zero() {
                return Ok(Vec::new());
            }
            vec![-&c * b.inv()?]
        } else {
            let disc = &(&b * &b) - &(&a * &c).scale_int(4);
            let Some(sq) = disc.sqrt() else { return Ok(Vec::new()) };
            let inv2a = (&a + &a).inv()?;
            vec![(&sq - &b) * &inv2a, (-&(&sq + &b)) * &inv2a]
        };
        let mut out = Vec::new();
        for s in roots {
            let t: Vec<GaussianRational> =
                u.iter().zip(w.iter()).map(|(ui, wi)| ui + &(&s * wi)).collect();
            if t.iter().any(|c| !c.is_zero()) && eval(&t)?.is_zero() {
                out.push(t);
            }
        }
        Ok(out)
    };
    // Small integer sweep, skipping earlier hits so repeated calls vary.
    let mut hits = 0usize;
    let mut cursor = vec![-2i64; k];
    loop {
        let t: Vec<GaussianRational> =
            cursor.iter().map(|&c| GaussianRational::from_int(c)).collect();
        if t.iter().any(|c| !c.is_zero()) && eval(&t)?.is_zero() {
            if hits == skip {
                return Ok(t);
            }
            hits += 1;
        }
        let mut i = 0;
        loop {
            if i == k {
                break;
            }
            cursor[i] += 1;
            if cursor[i] <= 2 {
                break;
            }
            cursor[i] = -2;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    // Coordinate lines: for a diagonal restriction the discriminant is
    // -4 q(e_i) q(e_j), a Q(i) square whenever the product q(e_i) q(e_j)
    // is a rational square.
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let mut u = vec![GaussianRational::zero(); k];
            u[i] = GaussianRational::one();
            let mut w = vec![GaussianRational::zero(); k];
            w[j] = GaussianRational::one();
            for t in line_zeros(&u, &w)? {
                if hits == skip {
                    return Ok(t);
                }
                hits += 1;
            }
        }
    }
    // Random rational lines.
    for _ in 0..60 {
        let u: Vec<GaussianRational> =
            (0..k).map(|_| GaussianRational::from_int(rng.gen_range(-4..=4))).collect();
        let w: Vec<GaussianRational> =
            (0..k).map(|_| GaussianRational::from_int(rng.gen_range(-4..=4))).collect();
        if w.iter().all(|c| c.is_zero()) {
            continue;
        }
        for t in line_zeros(&u, &w)? {
            if hits == skip {
                return Ok(t);
            }
            hits += 1;
        }
    }
    Err(Error::NoSamplePoint("no Q(i) point found on the restricted quadric".into()))
}

// ---------------------------------------------------------------------------
// Rank-locus multiplicities as local lengths at generic points
// ---------------------------------------------------------------------------

/// Multiplicity claims for components of a rank locus: each component is a
/// linear subspace given by linear forms.
#[derive(Clone, Debug)]
pub struct RankComponentClaim {
    pub name: String,
    pub linear_forms: Vec<MultiPoly>,
    pub expected_multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct RankMultiplicityReport {
    /// (claim name, measured multiplicity) in input order.
    pub multiplicities: Vec<(String, usize)>,
    /// Sum of the measured multiplicities.
    pub total_degree: usize,
}

impl SymmetricPencil {
    /// Multiplicity of each claimed linear component inside the rank <= k
    /// locus: the length of the local ring of the (k+1)-minor scheme at a
    /// generic rational point p of the component, measured on a generic
    /// affine slice through p whose dimension is the component's codimension.
    /// Non-generic draws only raise the length, so the result is the minimum
    /// over draws of (p, slice), stopping once two draws agree. A component
    /// whose minors fail to vanish at some point reports multiplicity zero.
    pub fn rank_locus_multiplicities(
        &self,
        k: usize,
        claims: &[RankComponentClaim],
        seed: u64,
    ) -> Result<RankMultiplicityReport, Error> {
        let minors = self.minor_ideal(k)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x726b6d6c);
        // Slice variable names, kept clear of the pencil's own variables.
        let mut prefix = String::from("t");
        while self.vars.iter().any(|v| v.starts_with(&prefix)) {
            prefix.push('t');
        }
        let mut mults = Vec::new();
        let mut total = 0usize;
        for claim in claims {
            let kernel = kernel_of_linear_forms(&claim.linear_forms, &self.vars)?;
            if kernel.is_empty() {
                return Err(Error::UnsupportedClaim(format!(
                    "component {} has no points",
                    claim.name
                )));
            }
            let codim = self.vars.len() - kernel.len();
            if codim == 0 {
                return Err(Error::UnsupportedClaim(format!(
                    "component {} must be a proper subspace",
                    claim.name
                )));
            }
            let tvars: Vec<String> = (0..codim).map(|j| format!("{prefix}{j}")).collect();
            // Pivot coordinates of the claim's forms span a complement of
            // the component, giving one sparse, cheap slice; later draws
            // use dense random directions so a special first slice cannot
            // go unnoticed.
            let form_rows: Vec<Vec<GaussianRational>> = claim
                .linear_forms
                .iter()
                .map(|f| {
                    let aligned = f.aligned_to(&self.vars);
                    (0..self.vars.len())
                        .map(|i| {
                            let mut key = vec![0u32; self.vars.len()];
                            key[i] = 1;
                            aligned.coeff(&key)
                        })
                        .collect()
                })
                .collect();
            let pivot_cols = Mat::from_rows(form_rows)?.rref();
            let mut lengths: Vec<usize> = Vec::new();
            let mut tried_pivot_slice = false;
            let mut attempts = 0usize;
            while lengths.len() < 3 && (lengths.len() != 2 || lengths[0] != lengths[1]) {
                attempts += 1;
                if attempts > 80 {
                    return Err(Error::NoSamplePoint(format!(
                        "no generic slice through component {} met the rank locus properly",
                        claim.name
                    )));
                }
                // Random point of the component, kept off the other claims.
                let t: Vec<GaussianRational> = (0..kernel.len())
                    .map(|_| GaussianRational::from_int(rng.gen_range(-3..=3)))
                    .collect();
                if t.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let Ok(p) = combine(&kernel, &t) else { continue };
                let asg: BTreeMap<String, GaussianRational> = self
                    .vars
                    .iter()
                    .cloned()
                    .zip(p.coords().iter().cloned())
                    .collect();
                let mut on_other = false;
                for other in claims.iter().filter(|o| o.name != claim.name) {
                    let mut all = true;
                    for f in &other.linear_forms {
                        if !f.eval(&asg)?.is_zero() {
                            all = false;
                            break;
                        }
                    }
                    if all {
                        on_other = true;
                        break;
                    }
                }
                if on_other {
                    continue;
                }
                // A minor that survives at p settles the claim: length zero.
                let mut vanish = true;
                for m in &minors {
                    if !m.eval(&asg)?.is_zero() {
                        vanish = false;
                        break;
                    }
                }
                if !vanish {
                    lengths = vec![0];
                    break;
                }
                // Slice x = p + sum_j w_j * t_j, one direction per
                // codimension, so the minor scheme is finite near the origin.
                let dirs: Vec<Vec<GaussianRational>> = if !tried_pivot_slice {
                    tried_pivot_slice = true;
                    pivot_cols
                        .iter()
                        .map(|&c| {
                            let mut e = vec![GaussianRational::zero(); self.vars.len()];
                            e[c] = GaussianRational::one();
                            e
                        })
                        .collect()
                } else {
                    (0..codim)
                        .map(|_| {
                            (0..self.vars.len())
                                .map(|_| GaussianRational::from_int(rng.gen_range(-3..=3)))
                                .collect()
                        })
                        .collect()
                };
                let map: BTreeMap<String, MultiPoly> = self
                    .vars
                    .iter()
                    .enumerate()
                    .map(|(i, v)| {
                        let mut e = MultiPoly::constant(p.coords()[i].clone());
                        for (j, w) in dirs.iter().enumerate() {
                            if !w[i].is_zero() {
                                e = &e + &MultiPoly::var(&tvars[j]).scale(&w[i]);
                            }
                        }
                        (v.clone(), e)
                    })
                    .collect();
                let restricted: Vec<MultiPoly> = minors
                    .iter()
                    .map(|m| strip_content(&m.substitute(&map)))
                    .filter(|r| !r.is_zero())
                    .collect();
                if restricted.is_empty() {
                    continue;
                }
                match local_length_at_origin(&restricted, &tvars)? {
                    Some(len) => lengths.push(len),
                    // The slice met the scheme in positive dimension; redraw.
                    None => continue,
                }
            }
            let m = lengths.iter().copied().min().unwrap_or(0);
            total += m;
            mults.push((claim.name.clone(), m));
        }
        Ok(RankMultiplicityReport { multiplicities: mults, total_degree: total })
    }
}

/// Rescale a polynomial so its coefficients are coprime Gaussian integers;
/// this keeps the rationals small inside basis computations.
fn strip_content(p: &MultiPoly) -> MultiPoly {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Zero};
    if p.is_zero() {
        return p.clone();
    }
    let mut den = BigInt::one();
    for (_, c) in p.terms() {
        den = den.lcm(c.re().denom());
        den = den.lcm(c.im().denom());
    }
    let scale = BigRational::from_integer(den);
    let mut content = BigInt::zero();
    for (_, c) in p.terms() {
        content = content.gcd((c.re() * &scale).numer());
        content = content.gcd((c.im() * &scale).numer());
    }
    if content.is_zero() {
        return p.clone();
    }
    let factor = GaussianRational::from_rational(scale / BigRational::from_integer(content));
    p.scale(&factor)
}

/// Length of the local ring at the origin of the affine scheme cut by gens
/// in the given variables. The quotient Q = k[t]/(gens) splits over the
/// finitely many points of the scheme, and the images of the powers m^N of
/// the origin's maximal ideal shrink inside Q until they stabilize on the
/// factors away from the origin; the stable codimension is the length at
/// the origin. Each power is the span of the normal forms of variable
/// multiples of the previous one, so after one Groebner basis the descent
/// is linear algebra. Returns None when the scheme is positive-dimensional
/// through the origin.
fn local_length_at_origin(gens: &[MultiPoly], tvars: &[String]) -> Result<Option<usize>, Error> {
    let gb = buchberger(gens, TermOrder::Grevlex)?;
    if gb.is_unit_ideal() {
        return Ok(Some(0));
    }
    // A slice variable missing from the basis frame is unconstrained.
    if tvars.iter().any(|t| !gb.vars().contains(t)) {
        return Ok(None);
    }
    if !staircase_is_zero_dimensional(&gb)? {
        return Ok(None);
    }
    let frame: Vec<String> = gb.vars().to_vec();
    let standard = standard_monomials(&gb)?;
    let total = standard.len();
    let index: BTreeMap<&Vec<u32>, usize> =
        standard.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let var_polys: Vec<MultiPoly> = frame.iter().map(|v| MultiPoly::var(v)).collect();
    // Basis of m^0 Q = Q itself: the standard monomials.
    let mut current: Vec<MultiPoly> = standard
        .iter()
        .map(|exps| {
            let mut terms = BTreeMap::new();
            terms.insert(exps.clone(), GaussianRational::one());
            MultiPoly::from_raw(frame.clone(), terms)
        })
        .collect();
    let mut prev_dim = total;
    for _ in 0..=total + 1 {
        let mut rows: Vec<Vec<GaussianRational>> = Vec::new();
        for v in &current {
            for x in &var_polys {
                let nf = normal_form(&(v * x), &gb)?;
                if !nf.is_zero() {
                    rows.push(coords_over(&nf, &frame, &index, total));
                }
            }
        }
        let dim = if rows.is_empty() {
            0
        } else {
            let mut mat = Mat::from_rows(rows.clone())?;
            let rank = mat.rref().len();
            current = (0..rank).map(|i| poly_from_coords(&mat.row(i), &standard, &frame)).collect();
            rank
        };
        if dim == prev_dim {
            return Ok(Some(total - dim));
        }
        prev_dim = dim;
    }
    // The chain strictly drops at most `total` times, so this is unreachable.
    Ok(None)
}

/// Coordinates of a normal form over the standard-monomial basis.
fn coords_over(
    nf: &MultiPoly,
    frame: &[String],
    index: &BTreeMap<&Vec<u32>, usize>,
    dim: usize,
) -> Vec<GaussianRational> {
    let pos: Vec<usize> = nf
        .vars()
        .iter()
        .map(|v| frame.iter().position(|f| f == v).expect("normal form stays in the basis frame"))
        .collect();
    let mut row = vec![GaussianRational::zero(); dim];
    for (key, c) in nf.terms() {
        let mut exps = vec![0u32; frame.len()];
        for (i, &e) in key.iter().enumerate() {
            exps[pos[i]] = e;
        }
        let j = *index.get(&exps).expect("normal form lies in the standard monomial span");
        row[j] = c.clone();
    }
    row
}

/// Rebuilds a quotient element from coordinates over the standard monomials.
fn poly_from_coords(row: &[GaussianRational], standard: &[Vec<u32>], frame: &[String]) -> MultiPoly {
    let mut terms = BTreeMap::new();
    for (j, c) in row.iter().enumerate() {
        if !c.is_zero() {
            terms.insert(standard[j].clone(), c.clone());
        }
    }
    MultiPoly::from_raw(frame.to_vec(), terms)
}

// ---------------------------------------------------------------------------
// File format
// ---------------------------------------------------------------------------

/// Parses the plain-text pencil format:
///
/// ```text
/// n=5
/// A0:
/// 1 0 0 0
/// 0 0 0 0
/// 0 0 0 1/2
/// 0 0 1/2 0
/// A2:
/// ...
/// ```
///
/// `n` is the number of variables; omitted blocks are zero matrices.
/// Entries are rationals; lines starting with `#` are comments.
pub fn parse_pencil_file(text: &str) -> Result<SymmetricPencil, Error> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .peekable();
    let header = lines.next().ok_or_else(|| Error::Parse("empty pencil file".into()))?;
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected 'n=<count>' header, found '{header}'")))?;
    if !(MIN_VARS..=MAX_VARS).contains(&n) {
        return Err(Error::Parse(format!(
            "variable count {n} outside supported range {MIN_VARS}..={MAX_VARS}"
        )));
    }
    let mut mats = vec![Mat::zeros(4, 4); n];
    let mut seen = vec![false; n];
    while let Some(line) = lines.next() {
        let idx: usize = line
            .strip_prefix('A')
            .and_then(|s| s.strip_suffix(':'))
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected 'A<i>:' block header, found '{line}'")))?;
        if idx >= n {
            return Err(Error::Parse(format!("block A{idx} exceeds variable count {n}")));
        }
        if seen[idx] {
            return Err(Error::Parse(format!("duplicate block A{idx}")));
        }
        seen[idx] = true;
        let mut rows = Vec::with_capacity(4);
        for _ in 0..4 {
            let row_line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("block A{idx} is missing rows")))?;
            let entries: Result<Vec<GaussianRational>, Error> = row_line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<BigRational>()
                        .map(GaussianRational::from_rational)
                        .map_err(|_| Error::Parse(format!("bad rational entry '{tok}'")))
                })
                .collect();
            let entries = entries?;
            if entries.len() != 4 {
                return Err(Error::Parse(format!(
                    "block A{idx} row has {} entries, expected 4",
                    entries.len()
                )));
            }
            rows.push(entries);
        }
        mats[idx] = Mat::from_rows(rows)?;
    }
    SymmetricPencil::new(mats)
}

/// Inverse of `parse_pencil_file`; zero blocks are omitted.
pub fn format_pencil_file(pencil: &SymmetricPencil) -> String {
    let mut out = format!("n={}\n", pencil.num_vars());
    for (i, m) in pencil.coefficient_matrices().iter().enumerate() {
        if m.is_zero() {
            continue;
        }
        out.push_str(&format!("A{i}:\n"));
        for r in 0..4 {
            let row: Vec<String> = (0..4).map(|c| format_rational(m.get(r, c).re())).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

fn format_rational(r: &BigRational) -> String {
    use num_traits::One;
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiPoly;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    /// Pencil whose determinant is x0^4 - x0^2 (x1^2+x2^2+x3^2+x4^2)
    /// + (x1 x4 - x2 x3)^2, singular along a quadric surface.
    const QUADRIC_SURFACE_EXAMPLE: &str = "n=5\n\
        A0:\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n\
        A1:\n0 0 1 0\n0 0 0 0\n1 0 0 0\n0 0 0 0\n\
        A2:\n0 0 0 1\n0 0 0 0\n0 0 0 0\n1 0 0 0\n\
        A3:\n0 0 0 0\n0 0 1 0\n0 1 0 0\n0 0 0 0\n\
        A4:\n0 0 0 0\n0 0 0 1\n0 0 0 0\n0 1 0 0\n";

    fn quadric_surface_pencil() -> SymmetricPencil {
        parse_pencil_file(QUADRIC_SURFACE_EXAMPLE).unwrap()
    }

    fn basis_point(n: usize, i: usize) -> ProjPoint {
        ProjPoint::basis(n, i)
    }

    #[test]
    fn parse_round_trip_and_omitted_blocks() {
        let text = "n=5\nA0:\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\nA4:\n0 1 0 0\n1 0 0 0\n0 0 0 0\n0 0 0 0\n";
        let pencil = parse_pencil_file(text).unwrap();
        assert!(pencil.coefficient_matrices()[1].is_zero());
        assert!(pencil.coefficient_matrices()[2].is_zero());
        let printed = format_pencil_file(&pencil);
        let reparsed = parse_pencil_file(&printed).unwrap();
        for (a, b) in
            pencil.coefficient_matrices().iter().zip(reparsed.coefficient_matrices().iter())
        {
            for r in 0..4 {
                for c in 0..4 {
                    assert_eq!(a.get(r, c), b.get(r, c));
                }
            }
        }
    }

    #[test]
    fn parser_rejects_malformed_input() {
        assert!(parse_pencil_file("").is_err());
        assert!(parse_pencil_file("n=9\n").is_err());
        assert!(parse_pencil_file("n=5\nB0:\n").is_err());
        // Non-symmetric block.
        let bad = "n=2\nA0:\n0 1 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\nA1:\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n";
        assert!(matches!(parse_pencil_file(bad), Err(Error::NotSymmetric(0))));
        // Wrong row width.
        let bad = "n=2\nA0:\n1 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n";
        assert!(parse_pencil_file(bad).is_err());
    }

    #[test]
    fn quartic_matches_hand_expansion() {
        let pencil = quadric_surface_pencil();
        let f = pencil.quartic().unwrap();
        let expected = p("x0^4 - x0^2*x1^2 - x0^2*x2^2 - x0^2*x3^2 - x0^2*x4^2 \
             + x1^2*x4^2 - 2*x1*x2*x3*x4 + x2^2*x3^2");
        assert_eq!(f, expected);
        assert_eq!(f.homogeneous_degree(), Some(4));
    }

    #[test]
    fn degenerate_pencil_detected() {
        // One rank-one matrix alone: det of x0 * E00 is identically zero.
        let mut m = Mat::zeros(4, 4);
        m.set(0, 0, GaussianRational::one());
        let pencil = SymmetricPencil::new(vec![m, Mat::zeros(4, 4)]);
        // Construction succeeds (not all matrices zero)...
        let pencil = pencil.unwrap();
        // ...but the determinant vanishes identically.
        assert!(matches!(pencil.quartic(), Err(Error::DegeneratePencil)));
    }

    #[test]
    fn rank_evaluation_at_points() {
        let pencil = quadric_surface_pencil();
        assert_eq!(pencil.rank_at(&basis_point(5, 0)).unwrap(), 4);
        assert_eq!(pencil.rank_at(&basis_point(5, 1)).unwrap(), 2);
        assert_eq!(pencil.corank_at(&basis_point(5, 1)).unwrap(), 2);
    }

    #[test]
    fn minor_counts_after_symmetry_dedup() {
        let pencil = quadric_surface_pencil();
        // 4 choose k subsets give s(s+1)/2 row/column pairs with R <= C,
        // minus minors that vanish identically: entries (0,1) and (2,3)
        // of this pencil are zero, so two 1x1 minors drop out.
        assert_eq!(pencil.minor_ideal(1).unwrap().len(), 8);
        assert_eq!(pencil.minor_ideal(3).unwrap().len(), 10);
        assert_eq!(pencil.minor_ideal(4).unwrap().len(), 1);
    }

    #[test]
    fn euler_identity_for_the_quartic() {
        let pencil = quadric_surface_pencil();
        let f = pencil.quartic().unwrap();
        let mut sum = MultiPoly::zero();
        for v in pencil.vars() {
            let d = if f.vars().contains(v) { f.diff(v).unwrap() } else { MultiPoly::zero() };
            sum = &sum + &(&MultiPoly::var(v) * &d);
        }
        assert_eq!(sum, f.scale(&GaussianRational::from_int(4)));
    }

    #[test]
    fn jacobian_contained_in_component_ideal() {
        let pencil = quadric_surface_pencil();
        let claim = ComponentClaim::new(
            "singular-surface",
            vec![p("x0"), p("x1*x4 - x2*x3")],
            2,
        );
        let jac = pencil.jacobian_ideal().unwrap();
        assert!(claim.contains_ideal(&jac).unwrap());
        // The singular surface is not inside the smaller-rank locus.
        let ones = pencil.minor_ideal(2).unwrap();
        assert!(!claim.contains_ideal(&ones).unwrap());
    }

    #[test]
    fn samples_on_claimed_component_have_expected_rank() {
        let pencil = quadric_surface_pencil();
        let claim = ComponentClaim::new(
            "singular-surface",
            vec![p("x0"), p("x1*x4 - x2*x3")],
            2,
        );
        let points = claim.sample_points(pencil.vars(), 4, 17).unwrap();
        assert_eq!(points.len(), 4);
        for pt in &points {
            let asg: BTreeMap<String, GaussianRational> = pencil
                .vars()
                .iter()
                .cloned()
                .zip(pt.coords().iter().cloned())
                .collect();
            assert!(p("x0").eval(&asg).unwrap().is_zero());
            assert!(p("x1*x4 - x2*x3").eval(&asg).unwrap().is_zero());
            assert_eq!(pencil.rank_at(pt).unwrap(), 2);
        }
    }

    #[test]
    fn linear_component_samples() {
        let pencil = quadric_surface_pencil();
        let claim = ComponentClaim::new("a-line", vec![p("x0"), p("x1"), p("x2")], 2);
        let points = claim.sample_points(pencil.vars(), 3, 5).unwrap();
        for pt in &points {
            assert!(pt.coords()[0].is_zero());
            assert!(pt.coords()[1].is_zero());
            assert!(pt.coords()[2].is_zero());
        }
    }

    #[test]
    fn cone_vertex_found_for_padded_pencil() {
        let pencil = quadric_surface_pencil();
        assert!(pencil.cone_vertex_space().unwrap().is_empty());
        // Pad with a sixth, zero matrix: x5 never appears, so e5 is a vertex.
        let mut mats = pencil.coefficient_matrices().to_vec();
        mats.push(Mat::zeros(4, 4));
        let padded = SymmetricPencil::new(mats).unwrap();
        let vertices = padded.cone_vertex_space().unwrap();
        assert_eq!(vertices.len(), 1);
        assert_eq!(vertices[0][5], GaussianRational::one());
    }

    #[test]
    fn quadric_web_forms_are_the_gram_quadrics() {
        let pencil = quadric_surface_pencil();
        let web = pencil.quadric_web();
        assert_eq!(web.len(), 5);
        assert_eq!(web[0], p("y0^2 + y1^2 + y2^2 + y3^2"));
        assert_eq!(web[1], p("2*y0*y2"));
        assert_eq!(web[4], p("2*y1*y3"));
    }

    #[test]
    fn local_length_measures_the_local_ring_not_the_line_order() {
        let vars = vec!["x".to_string(), "y".to_string()];
        // k[x,y]/(x^2, y) has basis {1, x}: length 2, although a generic
        // line through the origin meets the ideal in order 1 via y.
        let len = local_length_at_origin(&[p("x^2"), p("y")], &vars).unwrap();
        assert_eq!(len, Some(2));
        // y^3 = y * y^2 dies, so the quotient is k[x,y]/(x^2, y^2) with
        // basis {1, x, y, xy}: length 4.
        let len = local_length_at_origin(&[p("y^2"), p("x^2 + y^3")], &vars).unwrap();
        assert_eq!(len, Some(4));
        // The origin is not on V(x - 1): length 0.
        let len = local_length_at_origin(&[p("x - 1"), p("y")], &vars).unwrap();
        assert_eq!(len, Some(0));
        // V(x*y) is a curve through the origin: no finite length.
        let len = local_length_at_origin(&[p("x*y")], &vars).unwrap();
        assert_eq!(len, None);
    }

    #[test]
    fn rank_multiplicity_is_the_length_along_the_component() {
        // diag(x0, x0, x0, x1): the 3x3 minors are x0^3 and x0^2*x1, so the
        // rank <= 2 locus is the point x0 = 0 and the local ring there is
        // k[x0]/(x0^2): length 2.
        let text = "n=2\nA0:\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 0\nA1:\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 1\n";
        let pencil = parse_pencil_file(text).unwrap();
        let claims = vec![RankComponentClaim {
            name: "triple-eigenline".to_string(),
            linear_forms: vec![p("x0")],
            expected_multiplicity: 2,
        }];
        let report = pencil.rank_locus_multiplicities(3, &claims, 11).unwrap();
        assert_eq!(report.multiplicities, vec![("triple-eigenline".to_string(), 2)]);
        assert_eq!(report.total_degree, 2);
    }

    #[test]
    fn rank_multiplicities_of_reduced_components_are_one() {
        // diag(x0, x0, x1, x1): minors x0^2*x1 and x0*x1^2; both points of
        // the rank <= 2 locus are reduced, and a full-rank point reports
        // multiplicity zero.
        let text = "n=2\nA0:\n1 0 0 0\n0 1 0 0\n0 0 0 0\n0 0 0 0\nA1:\n0 0 0 0\n0 0 0 0\n0 0 1 0\n0 0 0 1\n";
        let pencil = parse_pencil_file(text).unwrap();
        let claims = vec![
            RankComponentClaim {
                name: "first".to_string(),
                linear_forms: vec![p("x0")],
                expected_multiplicity: 1,
            },
            RankComponentClaim {
                name: "second".to_string(),
                linear_forms: vec![p("x1")],
                expected_multiplicity: 1,
            },
            RankComponentClaim {
                name: "full-rank".to_string(),
                linear_forms: vec![p("x0 - x1")],
                expected_multiplicity: 0,
            },
        ];
        let report = pencil.rank_locus_multiplicities(3, &claims, 11).unwrap();
        assert_eq!(
            report.multiplicities,
            vec![
                ("first".to_string(), 1),
                ("second".to_string(), 1),
                ("full-rank".to_string(), 0)
            ]
        );
        assert_eq!(report.total_degree, 2);
    }
}
