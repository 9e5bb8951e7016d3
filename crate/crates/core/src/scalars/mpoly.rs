//! Sparse multivariate polynomials over `Z` in `t1, ..., tk`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent vector with trailing zeros removed, so equal monomials have
/// equal representations regardless of the ambient number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(mut e: Vec<u32>) -> Self {
        while e.last() == Some(&0) {
            e.pop();
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of variables needed to hold this monomial.
    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut e = long.clone();
        for (a, b) in e.iter_mut().zip(short.iter()) {
            *a += *b;
        }
        Monomial(e)
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut e = self.0.clone();
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            if *a < *b {
                return None;
            }
            *a -= *b;
        }
        Some(Monomial::from_exponents(e))
    }

    fn with_exponent(&self, i: usize, value: u32) -> Monomial {
        let mut e = self.0.clone();
        if e.len() <= i {
            e.resize(i + 1, 0);
        }
        e[i] = value;
        Monomial::from_exponents(e)
    }
}

impl Ord for Monomial {
    /// Graded lex with `t1 < t2 < ... < tk`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                let n = self.0.len().max(other.0.len());
                for i in (0..n).rev() {
                    match self.exponent(i).cmp(&other.exponent(i)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with integer coefficients. Terms are kept in strictly
/// descending graded-lex order and never carry a zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        MPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn var(i: usize) -> Self {
        MPoly {
            terms: vec![(Monomial::var(i), BigInt::one())],
        }
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly {
                terms: vec![(m, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(mut terms: Vec<(Monomial, BigInt)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        MPoly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Number of variables needed to write this polynomial (index of the
    /// highest occurring variable plus one).
    pub fn width(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.width()).max().unwrap_or(0)
    }

    /// Variables that occur, in increasing index order, visiting terms in
    /// storage order.
    pub fn variables_in_term_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.iter().flat_map(|(m, _)| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, _)| i)
        })
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.merge(other, true)
    }

    fn merge(&self, other: &MPoly, negate: bool) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MPoly { terms: out }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                prods.push((ma.mul(mb), ca * cb));
            }
        }
        MPoly::from_terms(prods)
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (x.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Largest absolute value of a coefficient.
    pub fn max_norm(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Substitutes the integer `x` for `t_v`.
    pub fn eval_var(&self, v: usize, x: &BigInt) -> MPoly {
        let d = self.degree_in(v) as usize;
        let mut powers = Vec::with_capacity(d + 1);
        powers.push(BigInt::one());
        for e in 1..=d {
            let next = &powers[e - 1] * x;
            powers.push(next);
        }
        MPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.with_exponent(v, 0), c * &powers[m.exponent(v) as usize]))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division by an integer; `None` if some coefficient is not divisible.
    pub fn div_exact_int(&self, d: &BigInt) -> Option<MPoly> {
        if d.is_zero() {
            return None;
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            terms.push((m.clone(), q));
        }
        Some(MPoly { terms })
    }

    /// Exact division; `None` if `d` does not divide `self` in `Z[t]`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return self.div_exact_int(&c);
        }
        let (dm, dc) = &d.terms[0];
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.terms.first() {
            let m = rm.div(dm)?;
            let (c, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            rem = rem.sub(&d.mul_monomial(&m).scale(&c));
            quot.push((m, c));
        }
        Some(MPoly::from_terms(quot))
    }

    /// Degree in variable `v`.
    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(v))
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of `t_v^d`, as a polynomial free of `t_v`.
    pub fn coeff_in(&self, v: usize, d: u32) -> MPoly {
        MPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == d)
                .map(|(m, c)| (m.with_exponent(v, 0), c.clone()))
                .collect(),
        )
    }

    /// All nonzero coefficients with respect to `t_v`.
    fn coeffs_in(&self, v: usize) -> Vec<MPoly> {
        let mut by_deg: Vec<Vec<(Monomial, BigInt)>> =
            vec![Vec::new(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            by_deg[m.exponent(v) as usize].push((m.with_exponent(v, 0), c.clone()));
        }
        by_deg
            .into_iter()
            .filter(|t| !t.is_empty())
            .map(MPoly::from_terms)
            .collect()
    }

    /// Content with respect to `t_v`: gcd of the coefficients in `Z[other vars]`.
    fn content_in(&self, v: usize) -> MPoly {
        let mut g = MPoly::zero();
        for c in self.coeffs_in(v) {
            g = gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_part_in(&self, v: usize) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        let c = self.content_in(v);
        self.div_exact(&c).expect("content divides")
    }

    /// Pseudo-remainder of `self` by `g` with respect to `t_v`.
    fn pseudo_rem(&self, g: &MPoly, v: usize) -> MPoly {
        let dg = g.degree_in(v);
        let lc_g = g.coeff_in(v, dg);
        let mut r = self.clone();
        while !r.is_zero() {
            let dr = r.degree_in(v);
            if dr < dg {
                break;
            }
            let lc_r = r.coeff_in(v, dr);
            let shift = Monomial::var(v).with_exponent(v, dr - dg);
            r = r.mul(&lc_g).sub(&g.mul(&lc_r).mul_monomial(&shift));
        }
        r
    }

    /// Sign-normalized copy: leading coefficient positive.
    pub fn normalize_sign(self) -> MPoly {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self,
        }
    }

    pub fn eval_terms<T, F>(&self, zero: T, mut term: F) -> T
    where
        F: FnMut(T, &Monomial, &BigInt) -> T,
    {
        let mut acc = zero;
        for (m, c) in &self.terms {
            acc = term(acc, m, c);
        }
        acc
    }

    /// Substitutes `t_i -> (scale_i * t_{target_i} + shift_i) / den_i` for every
    /// variable. Returns `(N, D)` with the image equal to `N / D`.
    ///
    /// `images` must cover every variable that occurs.
    pub fn substitute_affine(&self, images: &[AffineSubst]) -> (MPoly, BigInt) {
        let width = self.width();
        if images[..width].iter().all(AffineSubst::is_renaming) {
            let terms = self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = Vec::new();
                    for (v, &x) in m.exponents().iter().enumerate() {
                        let to = images[v].target;
                        if e.len() <= to {
                            e.resize(to + 1, 0);
                        }
                        e[to] = x;
                    }
                    (Monomial::from_exponents(e), c.clone())
                })
                .collect();
            return (MPoly::from_terms(terms), BigInt::one());
        }
        let degs: Vec<u32> = (0..width).map(|v| self.degree_in(v)).collect();
        let mut den = BigInt::one();
        for (v, d) in degs.iter().enumerate() {
            den *= images[v].den.pow(*d);
        }
        // powers[v][e] = L_v^e
        let mut powers: Vec<Vec<MPoly>> = Vec::with_capacity(width);
        for (v, d) in degs.iter().enumerate() {
            let img = &images[v];
            let lin = MPoly::from_terms(vec![
                (Monomial::var(img.target), img.scale.clone()),
                (Monomial::one(), img.shift.clone()),
            ]);
            let mut row = Vec::with_capacity(*d as usize + 1);
            row.push(MPoly::one());
            for e in 1..=*d as usize {
                let next = row[e - 1].mul(&lin);
                row.push(next);
            }
            powers.push(row);
        }
        let mut acc = MPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut t = MPoly::one();
            for (v, d) in degs.iter().enumerate() {
                let e = m.exponent(v);
                if e > 0 {
                    t = t.mul(&powers[v][e as usize]);
                }
                if *d > e {
                    coeff *= images[v].den.pow(*d - e);
                }
            }
            acc = acc.add(&t.scale(&coeff));
        }
        (acc, den)
    }
}

/// One generator image `t_i -> (scale * t_target + shift) / den` with integer data.
#[derive(Clone, Debug)]
pub struct AffineSubst {
    pub scale: BigInt,
    pub target: usize,
    pub shift: BigInt,
    pub den: BigInt,
}

impl AffineSubst {
    /// `t_i -> t_target`.
    fn is_renaming(&self) -> bool {
        self.scale.is_one() && self.shift.is_zero() && self.den.is_one()
    }
}

/// Greatest common divisor in `Z[t1, ..., tk]`, normalized to a positive
/// leading coefficient. `gcd(0, 0) = 0`.
///
/// Tries the heuristic gcd first; falls back to a recursive primitive
/// pseudo-remainder sequence.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.clone().normalize_sign();
    }
    if b.is_zero() {
        return a.clone().normalize_sign();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::constant(a.content().gcd(&b.content()));
    }
    if a == b {
        return a.clone().normalize_sign();
    }
    match heuristic_gcd(a, b) {
        Some(g) => g.normalize_sign(),
        None => prs_gcd(a, b),
    }
}

/// Content with respect to the last variable times the primitive
/// pseudo-remainder sequence of the primitive parts.
fn prs_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    let v = a.width().max(b.width()) - 1;
    let (da, db) = (a.degree_in(v), b.degree_in(v));
    if da == 0 {
        return gcd(a, &b.content_in(v));
    }
    if db == 0 {
        return gcd(&a.content_in(v), b);
    }
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = gcd(&ca, &cb);
    let mut f = a.div_exact(&ca).expect("content divides");
    let mut g = b.div_exact(&cb).expect("content divides");
    if f.degree_in(v) < g.degree_in(v) {
        core::mem::swap(&mut f, &mut g);
    }
    let prim = loop {
        let r = f.pseudo_rem(&g, v);
        if r.is_zero() {
            break g.primitive_part_in(v);
        }
        if r.degree_in(v) == 0 {
            break MPoly::one();
        }
        f = g;
        g = r.primitive_part_in(v);
    };
    prim.mul(&c).normalize_sign()
}

/// Heuristic gcd (Char, Geddes, Gonnet): evaluate the last variable at a
/// large integer, take the gcd of the images recursively and read the
/// candidate off its balanced base-`xi` digits. A candidate is accepted only
/// if it divides both inputs, which makes it the gcd. `None` when every
/// evaluation point failed or the numbers got too large.
fn heuristic_gcd(a: &MPoly, b: &MPoly) -> Option<MPoly> {
    if a.is_zero() || b.is_zero() {
        return Some(a.add(b).normalize_sign());
    }
    let (ca, cb) = (a.content(), b.content());
    let c = ca.gcd(&cb);
    if a.is_constant() || b.is_constant() {
        return Some(MPoly::constant(c));
    }
    let a = a.div_exact_int(&ca).expect("content divides");
    let b = b.div_exact_int(&cb).expect("content divides");
    let v = a.width().max(b.width()) - 1;
    let deg = a.degree_in(v).max(b.degree_in(v)) as u64;
    let mut xi: BigInt = BigInt::from(2) * a.max_norm().min(b.max_norm()) + 29;
    for _ in 0..6 {
        if xi.bits() * (deg + 1) > 200_000 {
            return None;
        }
        let gamma = heuristic_gcd(&a.eval_var(v, &xi), &b.eval_var(v, &xi))?;
        if let Some(g) = from_balanced_digits(&gamma, v, &xi, deg) {
            let g = g.div_exact_int(&g.content()).expect("content divides");
            if a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                return Some(g.scale(&c));
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// `sum_i g_i t_v^i` with `gamma = sum_i g_i xi^i` and the coefficients of
/// each `g_i` in `(-xi/2, xi/2]`. `None` if more than `maxdeg + 1` digits
/// are needed.
fn from_balanced_digits(gamma: &MPoly, v: usize, xi: &BigInt, maxdeg: u64) -> Option<MPoly> {
    let half = xi / 2;
    let mut rest = gamma.clone();
    let mut terms = Vec::new();
    let mut i = 0u32;
    while !rest.is_zero() {
        if u64::from(i) > maxdeg {
            return None;
        }
        let mut digit = Vec::new();
        for (m, c) in rest.terms() {
            let mut r = c.mod_floor(xi);
            if r > half {
                r -= xi;
            }
            if !r.is_zero() {
                digit.push((m.clone(), r));
            }
        }
        let digit = MPoly::from_terms(digit);
        rest = rest
            .sub(&digit)
            .div_exact_int(xi)
            .expect("digits are exact");
        let shift = Monomial::var(v).with_exponent(v, i);
        terms.extend(digit.mul_monomial(&shift).terms().iter().cloned());
        i += 1;
    }
    Some(MPoly::from_terms(terms))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, e) in self.0.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "t{}", i + 1)?;
            } else {
                write!(f, "t{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
