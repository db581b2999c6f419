//! Groebner machinery over Q(i): term orders, multivariate division,
//! Buchberger completion with the sugar selection strategy and the coprime
//! leading-term skip, elimination orders, and ideal saturation.
//!
//! Completion always finishes with the unique reduced Groebner basis, so
//! results are deterministic regardless of pair processing order. A budget
//! guard aborts runaway computations after 10^6 pair reductions.

use std::cmp::Ordering;
use std::collections::{BTreeSet, BinaryHeap};

use crate::error::Error;
use crate::poly::{grevlex_cmp, monomial_divides, MultiPoly};

/// Pair-reduction budget for Buchberger completion.
pub const PAIR_REDUCTION_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    Grevlex,
    Lex,
    /// Block elimination order: the named block is compared first (grevlex
    /// within the block), ties fall through to grevlex on the full vector.
    /// Any monomial containing a block variable beats any monomial free of
    /// them, which is exactly the elimination property.
    Elimination(BTreeSet<String>),
}

impl TermOrder {
    pub fn cmp(&self, vars: &[String], a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::Grevlex => grevlex_cmp(a, b),
            TermOrder::Lex => {
                for (x, y) in a.iter().zip(b.iter()) {
                    match x.cmp(y) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            TermOrder::Elimination(block) => {
                let mask: Vec<bool> = vars.iter().map(|v| block.contains(v)).collect();
                let pa: Vec<u32> = a.iter().zip(&mask).map(|(&e, &m)| if m { e } else { 0 }).collect();
                let pb: Vec<u32> = b.iter().zip(&mask).map(|(&e, &m)| if m { e } else { 0 }).collect();
                grevlex_cmp(&pa, &pb).then_with(|| grevlex_cmp(a, b))
            }
        }
    }
}

/// A generating set for an ideal, aligned to a common variable list.
/// `groebner` records whether the generators are known to be a Groebner
/// basis for `order`.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    vars: Vec<String>,
    gens: Vec<MultiPoly>,
    order: TermOrder,
    groebner: bool,
}

impl IdealBasis {
    /// Filters zero generators; an empty list represents the zero ideal.
    pub fn new(gens: Vec<MultiPoly>, order: TermOrder) -> Self {
        let gens: Vec<MultiPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let vars = MultiPoly::union_vars(gens.iter());
        let gens = gens.iter().map(|g| g.aligned_to(&vars)).collect();
        IdealBasis { vars, gens, order, groebner: false }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn gens(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn is_groebner(&self) -> bool {
        self.groebner
    }

    /// The unit ideal is recognizable from a reduced basis containing a
    /// nonzero constant.
    pub fn is_unit_ideal(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    fn leading_monomial(&self, p: &MultiPoly) -> Vec<u32> {
        leading_monomial(p, &self.vars, &self.order)
    }
}

fn leading_monomial(p: &MultiPoly, vars: &[String], order: &TermOrder) -> Vec<u32> {
    let p = p.aligned_to(vars);
    p.terms()
        .map(|(k, _)| k.clone())
        .max_by(|a, b| order.cmp(vars, a, b))
        .expect("leading monomial of the zero polynomial")
}

fn monic(p: &MultiPoly, vars: &[String], order: &TermOrder) -> MultiPoly {
    let p = p.aligned_to(vars);
    let lm = leading_monomial(&p, vars, order);
    let lc = p.coeff(&lm);
    let inv = lc.inv().expect("leading coefficient nonzero");
    p.scale(&inv)
}

/// Full division: reduces every term of `p` by the generators until no term
/// is divisible by any leading monomial. Deterministic.
fn reduce_full(
    p: &MultiPoly,
    gens: &[MultiPoly],
    lms: &[Vec<u32>],
    vars: &[String],
    order: &TermOrder,
) -> MultiPoly {
    let mut h = p.aligned_to(vars);
    let mut remainder = MultiPoly::zero();
    while !h.is_zero() {
        let lm = leading_monomial(&h, vars, order);
        let lc = h.coeff(&lm);
        let divisor = gens.iter().zip(lms.iter()).find(|(_, glm)| monomial_divides(glm, &lm));
        match divisor {
            Some((g, glm)) => {
                // h -= (lc / lc(g)) * x^(lm-glm) * g ; generators are monic.
                let shift: Vec<u32> = lm.iter().zip(glm.iter()).map(|(a, b)| a - b).collect();
                let mut sub_terms = std::collections::BTreeMap::new();
                for (k, c) in g.terms() {
                    let key: Vec<u32> = k.iter().zip(shift.iter()).map(|(a, b)| a + b).collect();
                    sub_terms.insert(key, c * &lc);
                }
                let sub = MultiPoly::from_raw(vars.to_vec(), sub_terms);
                h = &h - &sub;
                h = h.aligned_to(vars);
            }
            None => {
                let mut t = std::collections::BTreeMap::new();
                t.insert(lm.clone(), lc.clone());
                let lt = MultiPoly::from_raw(vars.to_vec(), t);
                remainder = &remainder + &lt;
                h = &h - &lt;
                h = h.aligned_to(vars);
            }
        }
    }
    remainder
}

/// Normal form of `p` modulo a basis that must already be Groebner.
pub fn normal_form(p: &MultiPoly, basis: &IdealBasis) -> Result<MultiPoly, Error> {
    if !basis.groebner {
        return Err(Error::NotGroebner);
    }
    let mut all = vec![p.clone()];
    all.extend(basis.gens.iter().cloned());
    let vars = MultiPoly::union_vars(all.iter());
    let gens: Vec<MultiPoly> = basis.gens.iter().map(|g| g.aligned_to(&vars)).collect();
    let lms: Vec<Vec<u32>> = gens.iter().map(|g| leading_monomial(g, &vars, &basis.order)).collect();
    Ok(reduce_full(p, &gens, &lms, &vars, &basis.order))
}

#[derive(PartialEq, Eq)]
struct Pair {
    sugar: u64,
    lcm_deg: u64,
    i: usize,
    j: usize,
    lcm: Vec<u32>,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        // BinaryHeap is a max-heap; invert so the smallest sugar pops first.
        other
            .sugar
            .cmp(&self.sugar)
            .then(other.lcm_deg.cmp(&self.lcm_deg))
            .then(other.i.cmp(&self.i))
            .then(other.j.cmp(&self.j))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn make_pair(i: usize, j: usize, lms: &[Vec<u32>], sugars: &[u64]) -> Pair {
    let lcm: Vec<u32> = lms[i].iter().zip(lms[j].iter()).map(|(a, b)| *a.max(b)).collect();
    let lcm_deg: u64 = lcm.iter().map(|&e| e as u64).sum();
    let di: u64 = lms[i].iter().map(|&e| e as u64).sum();
    let dj: u64 = lms[j].iter().map(|&e| e as u64).sum();
    let sugar = (sugars[i] + lcm_deg - di).max(sugars[j] + lcm_deg - dj);
    Pair { sugar, lcm_deg, i, j, lcm }
}

/// Buchberger completion to the unique reduced Groebner basis.
pub fn buchberger(gens: &[MultiPoly], order: TermOrder) -> Result<IdealBasis, Error> {
    let nonzero: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let vars = MultiPoly::union_vars(nonzero.iter());
    let mut basis: Vec<MultiPoly> =
        nonzero.iter().map(|g| monic(&g.aligned_to(&vars), &vars, &order)).collect();
    basis.dedup();
    let mut lms: Vec<Vec<u32>> = basis.iter().map(|g| leading_monomial(g, &vars, &order)).collect();
    let mut sugars: Vec<u64> = basis.iter().map(|g| g.degree() as u64).collect();

    let mut heap = BinaryHeap::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            heap.push(make_pair(i, j, &lms, &sugars));
        }
    }

    let mut reductions: u64 = 0;
    while let Some(pair) = heap.pop() {
        let (i, j) = (pair.i, pair.j);
        // Product criterion: coprime leading terms reduce to zero.
        let prod: Vec<u32> = lms[i].iter().zip(lms[j].iter()).map(|(a, b)| a + b).collect();
        if prod == pair.lcm {
            continue;
        }
        reductions += 1;
        if reductions > PAIR_REDUCTION_BUDGET {
            return Err(Error::BudgetExceeded(format!(
                "Buchberger exceeded {PAIR_REDUCTION_BUDGET} pair reductions"
            )));
        }
        // S-polynomial of two monic generators.
        let spoly = {
            let shift_i: Vec<u32> = pair.lcm.iter().zip(lms[i].iter()).map(|(a, b)| a - b).collect();
            let shift_j: Vec<u32> = pair.lcm.iter().zip(lms[j].iter()).map(|(a, b)| a - b).collect();
            let mi = shift_poly(&basis[i], &shift_i, &vars);
            let mj = shift_poly(&basis[j], &shift_j, &vars);
            &mi - &mj
        };
        let red = reduce_full(&spoly, &basis, &lms, &vars, &order);
        if red.is_zero() {
            continue;
        }
        let red = monic(&red, &vars, &order);
        let lm = leading_monomial(&red, &vars, &order);
        let sugar = red.degree() as u64;
        basis.push(red);
        lms.push(lm);
        sugars.push(sugar);
        let n = basis.len() - 1;
        for k in 0..n {
            heap.push(make_pair(k, n, &lms, &sugars));
        }
    }

    // Minimalize: drop generators whose leading monomial is divisible by
    // another surviving leading monomial.
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j && keep[j] && monomial_divides(&lms[j], &lms[i]) {
                // Prefer dropping the later generator when leading monomials tie.
                if lms[i] == lms[j] && i < j {
                    continue;
                }
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<MultiPoly> = basis
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(g, _)| g.clone())
        .collect();
    // Inter-reduce to the unique reduced basis.
    let mut reduced: Vec<MultiPoly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MultiPoly> =
            minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
        let olms: Vec<Vec<u32>> = others.iter().map(|g| leading_monomial(g, &vars, &order)).collect();
        let r = reduce_full(&minimal[i], &others, &olms, &vars, &order);
        if !r.is_zero() {
            reduced.push(monic(&r, &vars, &order));
        }
    }
    reduced.sort_by(|a, b| {
        let la = leading_monomial(a, &vars, &order);
        let lb = leading_monomial(b, &vars, &order);
        order.cmp(&vars, &la, &lb)
    });
    Ok(IdealBasis { vars, gens: reduced, order, groebner: true })
}

fn shift_poly(p: &MultiPoly, shift: &[u32], vars: &[String]) -> MultiPoly {
    let p = p.aligned_to(vars);
    let terms = p
        .terms()
        .map(|(k, c)| {
            let key: Vec<u32> = k.iter().zip(shift.iter()).map(|(a, b)| a + b).collect();
            (key, c.clone())
        })
        .collect();
    MultiPoly::from_raw(vars.to_vec(), terms)
}

/// Ideal membership: completes the generators and reduces `p`.
pub fn ideal_contains(p: &MultiPoly, gens: &[MultiPoly]) -> Result<bool, Error> {
    let basis = buchberger(gens, TermOrder::Grevlex)?;
    Ok(normal_form(p, &basis)?.is_zero())
}

/// Elimination ideal: Groebner basis of the ideal intersected with the ring
/// without the dropped variables. The result is a Groebner basis for grevlex
/// on the remaining variables.
pub fn eliminate(gens: &[MultiPoly], drop: &[String]) -> Result<IdealBasis, Error> {
    let vars = MultiPoly::union_vars(gens.iter().filter(|g| !g.is_zero()));
    let block: BTreeSet<String> =
        drop.iter().filter(|d| vars.contains(d)).cloned().collect();
    if block.is_empty() {
        return buchberger(gens, TermOrder::Grevlex);
    }
    let gb = buchberger(gens, TermOrder::Elimination(block.clone()))?;
    // Frame alignment can leave eliminated variables in a generator's
    // variable list with all-zero exponents, so filter on actual exponent
    // support and compact the survivors.
    let block_pos: Vec<usize> = gb
        .vars
        .iter()
        .enumerate()
        .filter(|(_, v)| block.contains(*v))
        .map(|(i, _)| i)
        .collect();
    let kept: Vec<MultiPoly> = gb
        .gens
        .iter()
        .map(|g| g.aligned_to(&gb.vars))
        .filter(|g| g.terms().all(|(k, _)| block_pos.iter().all(|&i| k[i] == 0)))
        .map(|g| {
            MultiPoly::from_raw(
                g.vars().to_vec(),
                g.terms().map(|(k, c)| (k.clone(), c.clone())).collect(),
            )
        })
        .collect();
    let mut out = IdealBasis::new(kept, TermOrder::Grevlex);
    // A Groebner basis under a block order restricts to a Groebner basis of
    // the elimination ideal under the order induced on the kept variables.
    out.groebner = true;
    Ok(out)
}

/// Saturation I : l^infinity via the Rabinowitsch trick with a fresh
/// variable. Returns generators of the saturated ideal.
pub fn saturate(gens: &[MultiPoly], l: &MultiPoly) -> Result<Vec<MultiPoly>, Error> {
    let vars = MultiPoly::union_vars(gens.iter().chain(std::iter::once(l)));
    let mut w = "wsat".to_string();
    while vars.contains(&w) {
        w.push('w');
    }
    let relation = &MultiPoly::from_int(1) - &(&MultiPoly::var(&w) * l);
    let mut all = gens.to_vec();
    all.push(relation);
    let eliminated = eliminate(&all, &[w])?;
    Ok(eliminated.gens.to_vec())
}

/// True when the staircase of a Groebner basis certifies a zero-dimensional
/// quotient: every variable appears as a pure power among leading monomials.
pub fn staircase_is_zero_dimensional(basis: &IdealBasis) -> Result<bool, Error> {
    if !basis.groebner {
        return Err(Error::NotGroebner);
    }
    if basis.is_unit_ideal() {
        return Ok(true);
    }
    for i in 0..basis.vars.len() {
        let has_pure = basis.gens.iter().any(|g| {
            let lm = basis.leading_monomial(g);
            lm[i] > 0 && lm.iter().enumerate().all(|(k, &e)| k == i || e == 0)
        });
        if !has_pure {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of the quotient ring as a Q(i) vector space (number of standard
/// monomials). Requires a Groebner basis with a zero-dimensional staircase.
pub fn quotient_dimension(basis: &IdealBasis) -> Result<usize, Error> {
    Ok(standard_monomials(basis)?.len())
}

/// The standard monomials of a Groebner basis with a zero-dimensional
/// staircase: the exponent vectors (over basis.vars order) not divisible by
/// any leading monomial. They form a Q(i) vector-space basis of the quotient.
pub fn standard_monomials(basis: &IdealBasis) -> Result<Vec<Vec<u32>>, Error> {
    if !basis.groebner {
        return Err(Error::NotGroebner);
    }
    if basis.is_unit_ideal() {
        return Ok(Vec::new());
    }
    if basis.gens.is_empty() {
        return if basis.vars.is_empty() {
            Ok(vec![Vec::new()])
        } else {
            Err(Error::PositiveDimensional)
        };
    }
    if !staircase_is_zero_dimensional(basis)? {
        return Err(Error::PositiveDimensional);
    }
    let lms: Vec<Vec<u32>> = basis.gens.iter().map(|g| basis.leading_monomial(g)).collect();
    let n = basis.vars.len();
    let mut bounds = vec![0u32; n];
    for i in 0..n {
        bounds[i] = lms
            .iter()
            .filter(|lm| lm[i] > 0 && lm.iter().enumerate().all(|(k, &e)| k == i || e == 0))
            .map(|lm| lm[i])
            .min()
            .expect("pure power exists by the staircase check");
    }
    let mut standard = Vec::new();
    let mut stack = vec![vec![0u32; 0]];
    while let Some(partial) = stack.pop() {
        if partial.len() == n {
            if !lms.iter().any(|lm| monomial_divides(lm, &partial)) {
                standard.push(partial);
            }
            continue;
        }
        let i = partial.len();
        for e in 0..bounds[i] {
            let mut next = partial.clone();
            next.push(e);
            stack.push(next);
        }
    }
    Ok(standard)
}
