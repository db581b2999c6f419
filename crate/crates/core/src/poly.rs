//! Sparse multivariate polynomials over Q(i).
//!
//! Canonical form: the variable list is sorted (name prefix, then numeric
//! suffix), contains only variables that actually occur, and the term map
//! holds no zero coefficients. Two equal polynomials therefore have
//! identical representations, and `==` is exact polynomial equality.
//!
//! Key operations: ring arithmetic, evaluation, partial derivatives,
//! substitution, coefficient-wise conjugation, exact division, and symbolic
//! determinants (cofactor expansion cross-checked by fraction-free
//! elimination in the test suite).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::GaussianRational;
use crate::error::Error;

/// Compares variable names naturally: alphabetic prefix first, then the
/// numeric suffix as a number, so x2 < x10 and x9 < y0.
pub fn var_cmp(a: &str, b: &str) -> Ordering {
    fn split(s: &str) -> (&str, Option<u64>) {
        let digits = s.chars().rev().take_while(|c| c.is_ascii_digit()).count();
        if digits == 0 || digits == s.len() {
            return (s, None);
        }
        let cut = s.len() - digits;
        (&s[..cut], s[cut..].parse().ok())
    }
    let (pa, na) = split(a);
    let (pb, nb) = split(b);
    pa.cmp(pb).then(na.cmp(&nb)).then(a.cmp(b))
}

/// Graded reverse lexicographic comparison of exponent vectors of equal
/// length over the same variable list.
pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            // Smaller exponent in the last differing position wins.
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, GaussianRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly { vars: Vec::new(), terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1u32], GaussianRational::one());
        MultiPoly { vars: vec![name.to_string()], terms }
    }

    /// Builds and canonicalizes from raw parts. Keys must match `vars` in
    /// length; zero coefficients and unused variables are stripped.
    pub fn from_raw(vars: Vec<String>, terms: BTreeMap<Vec<u32>, GaussianRational>) -> Self {
        let mut p = MultiPoly { vars, terms };
        p.canonicalize();
        p
    }

    fn canonicalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        // Sort variables if needed, permuting exponents accordingly.
        let mut order: Vec<usize> = (0..self.vars.len()).collect();
        order.sort_by(|&i, &j| var_cmp(&self.vars[i], &self.vars[j]));
        let sorted = order.iter().enumerate().all(|(k, &i)| k == i);
        if !sorted {
            let vars: Vec<String> = order.iter().map(|&i| self.vars[i].clone()).collect();
            let terms = std::mem::take(&mut self.terms)
                .into_iter()
                .map(|(key, c)| (order.iter().map(|&i| key[i]).collect(), c))
                .collect();
            self.vars = vars;
            self.terms = terms;
        }
        // Strip variables that occur in no term.
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|k| k[i] != 0))
            .collect();
        if used.iter().any(|&u| !u) {
            let keep: Vec<usize> = (0..self.vars.len()).filter(|&i| used[i]).collect();
            self.vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
            self.terms = std::mem::take(&mut self.terms)
                .into_iter()
                .map(|(key, c)| (keep.iter().map(|&i| key[i]).collect::<Vec<u32>>(), c))
                .collect();
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|k| k.iter().all(|&e| e == 0))
    }

    /// The constant value if the polynomial is constant.
    pub fn constant_value(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            return Some(GaussianRational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|k| k.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Some(d) when every term has total degree d. The zero polynomial
    /// reports Some(0) by convention.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|k| k.iter().sum::<u32>());
        match degs.next() {
            None => Some(0),
            Some(d) => {
                if degs.all(|e| e == d) {
                    Some(d)
                } else {
                    None
                }
            }
        }
    }

    /// Re-expresses the polynomial over a superset variable list (which must
    /// be sorted by `var_cmp` and contain all current variables).
    pub fn aligned_to(&self, vars: &[String]) -> Self {
        if self.vars == vars {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("alignment target misses a variable"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(key, c)| {
                let mut k = vec![0u32; vars.len()];
                for (i, &e) in key.iter().enumerate() {
                    k[map[i]] = e;
                }
                (k, c.clone())
            })
            .collect();
        MultiPoly { vars: vars.to_vec(), terms }
    }

    /// The merged, sorted variable list of a set of polynomials.
    pub fn union_vars<'a>(polys: impl IntoIterator<Item = &'a MultiPoly>) -> Vec<String> {
        let mut set: BTreeSet<String> = BTreeSet::new();
        for p in polys {
            set.extend(p.vars.iter().cloned());
        }
        let mut v: Vec<String> = set.into_iter().collect();
        v.sort_by(|a, b| var_cmp(a, b));
        v
    }

    pub fn map_coeffs(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> Self {
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), f(c))).collect();
        MultiPoly::from_raw(self.vars.clone(), terms)
    }

    /// Coefficient-wise complex conjugation (variables are treated as real).
    pub fn conj(&self) -> Self {
        self.map_coeffs(|c| c.conj())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::from_int(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient of a monomial given over this polynomial's variable list.
    pub fn coeff(&self, key: &[u32]) -> GaussianRational {
        self.terms.get(key).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Evaluates with a full assignment of every variable.
    pub fn eval(&self, assignment: &BTreeMap<String, GaussianRational>) -> Result<GaussianRational, Error> {
        for v in &self.vars {
            if !assignment.contains_key(v) {
                return Err(Error::MissingAssignment(v.clone()));
            }
        }
        let values: Vec<&GaussianRational> = self.vars.iter().map(|v| &assignment[v]).collect();
        let mut total = GaussianRational::zero();
        for (key, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in key.iter().enumerate() {
                for _ in 0..e {
                    t *= values[i];
                }
            }
            total += &t;
        }
        Ok(total)
    }

    /// Partial derivative. Unknown variables are an error; variables absent
    /// from this polynomial but known to the caller should be handled there.
    pub fn diff(&self, var: &str) -> Result<Self, Error> {
        let idx = self
            .vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let mut terms = BTreeMap::new();
        for (key, c) in &self.terms {
            let e = key[idx];
            if e == 0 {
                continue;
            }
            let mut k = key.clone();
            k[idx] = e - 1;
            let factor = GaussianRational::from_int(e as i64);
            terms.insert(k, c * &factor);
        }
        Ok(MultiPoly::from_raw(self.vars.clone(), terms))
    }

    /// Ring substitution: variables in the map are replaced by their images,
    /// all others are left alone.
    pub fn substitute(&self, map: &BTreeMap<String, MultiPoly>) -> Self {
        let images: Vec<MultiPoly> = self
            .vars
            .iter()
            .map(|v| map.get(v).cloned().unwrap_or_else(|| MultiPoly::var(v)))
            .collect();
        let mut total = MultiPoly::zero();
        for (key, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            for (i, &e) in key.iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e);
                }
            }
            total = &total + &t;
        }
        total
    }

    /// Leading monomial under grevlex (canonical display order).
    pub fn leading_monomial_grevlex(&self) -> Option<&Vec<u32>> {
        self.terms.keys().max_by(|a, b| grevlex_cmp(a, b))
    }

    /// Exact division: Some(q) with self = q * d, or None when d does not
    /// divide self. d must be nonzero.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let vars = MultiPoly::union_vars([self, d]);
        let mut r = self.aligned_to(&vars);
        let d = d.aligned_to(&vars);
        let dl = d.leading_monomial_grevlex()?.clone();
        let dc = d.coeff(&dl);
        let mut q_terms: BTreeMap<Vec<u32>, GaussianRational> = BTreeMap::new();
        while !r.is_zero() {
            // Subtraction canonicalizes away unused variables, so restore
            // the common frame before touching exponent vectors.
            let ra = r.aligned_to(&vars);
            let rl = ra.leading_monomial_grevlex().unwrap().clone();
            if !monomial_divides(&dl, &rl) {
                return None;
            }
            let qk: Vec<u32> = rl.iter().zip(dl.iter()).map(|(a, b)| a - b).collect();
            let qc = ra.coeff(&rl).checked_div(&dc).expect("nonzero leading coefficient");
            // r -= qc * x^qk * d
            let mut sub_terms = BTreeMap::new();
            for (k, c) in d.terms() {
                let key: Vec<u32> = k.iter().zip(qk.iter()).map(|(a, b)| a + b).collect();
                sub_terms.insert(key, c * &qc);
            }
            let sub = MultiPoly { vars: vars.clone(), terms: sub_terms };
            r = &ra - &sub;
            q_terms.insert(qk, qc);
        }
        Some(MultiPoly::from_raw(vars, q_terms))
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        parse_poly(text)
    }
}

pub fn monomial_divides(d: &[u32], m: &[u32]) -> bool {
    d.iter().zip(m.iter()).all(|(a, b)| a <= b)
}

fn add_impl(a: &MultiPoly, b: &MultiPoly, negate_b: bool) -> MultiPoly {
    let vars = MultiPoly::union_vars([a, b]);
    let a = a.aligned_to(&vars);
    let b = b.aligned_to(&vars);
    let mut terms = a.terms;
    for (k, c) in b.terms {
        let c = if negate_b { -c } else { c };
        let entry = terms.entry(k).or_insert_with(GaussianRational::zero);
        *entry += &c;
    }
    MultiPoly::from_raw(vars, terms)
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        add_impl(self, rhs, false)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        add_impl(self, rhs, true)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let vars = MultiPoly::union_vars([self, rhs]);
        let a = self.aligned_to(&vars);
        let b = rhs.aligned_to(&vars);
        let mut terms: BTreeMap<Vec<u32>, GaussianRational> = BTreeMap::new();
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                let key: Vec<u32> = ka.iter().zip(kb.iter()).map(|(x, y)| x + y).collect();
                let prod = ca * cb;
                let entry = terms.entry(key).or_insert_with(GaussianRational::zero);
                *entry += &prod;
            }
        }
        MultiPoly::from_raw(vars, terms)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&GaussianRational::from_int(-1))
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn render_term(vars: &[String], key: &[u32], c: &GaussianRational) -> String {
    let mono: Vec<String> = key
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{}", vars[i], e) })
        .collect();
    let mono = mono.join("*");
    if mono.is_empty() {
        return c.to_string();
    }
    let re = c.re();
    let im = c.im();
    if im.is_zero() {
        if re.is_one() {
            mono
        } else if (-re).is_one() {
            format!("-{mono}")
        } else {
            format!("{}*{mono}", fmt_rational(re))
        }
    } else if re.is_zero() {
        if im.is_one() {
            format!("I*{mono}")
        } else if (-im).is_one() {
            format!("-I*{mono}")
        } else {
            format!("{}*I*{mono}", fmt_rational(im))
        }
    } else {
        format!("({})*{mono}", c)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| grevlex_cmp(b, a));
        let mut out = String::new();
        for (n, key) in keys.iter().enumerate() {
            let t = render_term(&self.vars, key, &self.terms[*key]);
            if n == 0 {
                out.push_str(&t);
            } else if t.starts_with('-') {
                out.push('-');
                out.push_str(&t[1..]);
            } else {
                out.push('+');
                out.push_str(&t);
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    ImUnit,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, Error> {
    let chars: Vec<char> = s.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let num: BigInt = chars[start..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse("bad integer literal".into()))?;
            let mut den = BigInt::one();
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                let ds = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if ds == i {
                    return Err(Error::Parse("missing denominator".into()));
                }
                den = chars[ds..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Parse("bad denominator".into()))?;
                if den.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
            }
            toks.push(Tok::Num(BigRational::new(num, den)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            if name == "I" {
                toks.push(Tok::ImUnit);
            } else {
                toks.push(Tok::Ident(name));
            }
        } else {
            toks.push(match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => return Err(Error::Parse(format!("unexpected character `{c}`"))),
            });
            i += 1;
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    // sum := ['+'|'-'] product (('+'|'-') product)*
    fn sum(&mut self) -> Result<MultiPoly, Error> {
        let mut neg = false;
        if let Some(Tok::Plus) = self.peek() {
            self.pos += 1;
        } else if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            neg = true;
        }
        let mut acc = self.product()?;
        if neg {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let p = self.product()?;
                    acc = &acc + &p;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let p = self.product()?;
                    acc = &acc - &p;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // product := factor ('*' factor)*
    fn product(&mut self) -> Result<MultiPoly, Error> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    // factor := (number | I | ident | '(' sum ')') ['^' nat]
    fn factor(&mut self) -> Result<MultiPoly, Error> {
        let base = match self.next() {
            Some(Tok::Num(q)) => MultiPoly::constant(GaussianRational::from_rational(q)),
            Some(Tok::ImUnit) => MultiPoly::constant(GaussianRational::i()),
            Some(Tok::Ident(name)) => MultiPoly::var(&name),
            Some(Tok::LParen) => {
                let inner = self.sum()?;
                match self.next() {
                    Some(Tok::RParen) => inner,
                    _ => return Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        };
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(q)) if q.denom().is_one() && !q.numer().is_negative() => {
                    let e: u32 = q
                        .numer()
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::Parse("exponent must be a nonnegative integer".into())),
            }
        }
        Ok(base)
    }
}

use num_traits::Signed;

fn parse_poly(text: &str) -> Result<MultiPoly, Error> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let poly = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(poly)
}

// ---------------------------------------------------------------------------
// Symbolic determinants
// ---------------------------------------------------------------------------

/// Determinant by cofactor expansion along the first row.
pub fn det_cofactor(m: &[Vec<MultiPoly>]) -> Result<MultiPoly, Error> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::MatrixShape("determinant of a non-square matrix".into()));
        }
    }
    Ok(det_cofactor_inner(m))
}

fn det_cofactor_inner(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::from_int(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cof = &m[0][j] * &det_cofactor_inner(&minor);
        if j % 2 == 0 {
            acc = &acc + &cof;
        } else {
            acc = &acc - &cof;
        }
    }
    acc
}

/// Determinant by Bareiss fraction-free elimination; every division is an
/// exact polynomial division. Independent route used to cross-check
/// `det_cofactor`.
pub fn det_bareiss(m: &[Vec<MultiPoly>]) -> Result<MultiPoly, Error> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::MatrixShape("determinant of a non-square matrix".into()));
        }
    }
    if n == 0 {
        return Ok(MultiPoly::from_int(1));
    }
    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let mut sign = 1i64;
    let mut prev = MultiPoly::from_int(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(MultiPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact by construction");
            }
            a[i][k] = MultiPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign < 0 { -&det } else { det })
}
