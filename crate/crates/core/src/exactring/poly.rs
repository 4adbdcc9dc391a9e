//! Sparse multivariate polynomials over exact rationals.
//!
//! A monomial is packed into a single `u128`: the top 16 bits hold the total
//! degree and each of up to [`MAX_VARS`] variables owns one byte below that, the
//! first declared variable in the most significant byte. Integer comparison of
//! the packed word is then exactly graded lexicographic order. Exponents are
//! limited to 127 so that the high bit of every byte can serve as a carry guard.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::scalar::{format_scalar, Scalar};
use super::AlgebraError;

pub const MAX_VARS: usize = 14;
pub const MAX_EXPONENT: u32 = 127;

const DEG_SHIFT: u32 = 112;
const LOW_MASK: u128 = (1u128 << DEG_SHIFT) - 1;
const GUARD: u128 = 0x8080_8080_8080_8080_8080_8080_8080 & LOW_MASK;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    fn shift(var: usize) -> u32 {
        ((MAX_VARS - 1 - var) * 8) as u32
    }

    pub fn var(var: usize) -> Monomial {
        assert!(var < MAX_VARS, "variable index {var} exceeds {MAX_VARS}");
        Monomial((1u128 << Self::shift(var)) | (1u128 << DEG_SHIFT))
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Monomial, AlgebraError> {
        if exps.len() > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(exps.len()));
        }
        let mut word = 0u128;
        let mut deg = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXPONENT {
                return Err(AlgebraError::ExponentOverflow);
            }
            word |= (e as u128) << Self::shift(i);
            deg += e as u128;
        }
        Ok(Monomial(word | (deg << DEG_SHIFT)))
    }

    pub fn degree(self) -> u32 {
        (self.0 >> DEG_SHIFT) as u32
    }

    pub fn exponent(self, var: usize) -> u32 {
        ((self.0 >> Self::shift(var)) & 0xff) as u32
    }

    pub fn checked_mul(self, other: Monomial) -> Option<Monomial> {
        let lo = (self.0 & LOW_MASK) + (other.0 & LOW_MASK);
        if lo & GUARD != 0 {
            return None;
        }
        let deg = (self.0 >> DEG_SHIFT) + (other.0 >> DEG_SHIFT);
        Some(Monomial(lo | (deg << DEG_SHIFT)))
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(self, other: Monomial) -> Option<Monomial> {
        let t = ((self.0 & LOW_MASK) | GUARD) - (other.0 & LOW_MASK);
        if t & GUARD != GUARD {
            return None;
        }
        let deg = (self.0 >> DEG_SHIFT) - (other.0 >> DEG_SHIFT);
        Some(Monomial((t & !GUARD & LOW_MASK) | (deg << DEG_SHIFT)))
    }

    /// Drops variable `var` from the monomial, returning the rest and the removed exponent.
    pub fn without(self, var: usize) -> (Monomial, u32) {
        let e = self.exponent(var);
        let lo = (self.0 & LOW_MASK) & !(0xffu128 << Self::shift(var));
        let deg = (self.0 >> DEG_SHIFT) - e as u128;
        (Monomial(lo | (deg << DEG_SHIFT)), e)
    }
}

pub type VarNames = Arc<Vec<String>>;

/// A declared list of variable names; polynomials built from the same ring can be combined.
#[derive(Clone, Debug)]
pub struct PolyRing {
    names: VarNames,
}

impl PolyRing {
    pub fn new<I, S>(names: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(names.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(AlgebraError::DuplicateVariable(n.clone()));
            }
        }
        Ok(PolyRing { names: Arc::new(names) })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var(&self, name: &str) -> Result<MultiPoly, AlgebraError> {
        let i = self
            .index_of(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        Ok(self.var_at(i))
    }

    pub fn var_at(&self, i: usize) -> MultiPoly {
        assert!(i < self.names.len());
        MultiPoly {
            vars: Some(self.names.clone()),
            terms: vec![(Monomial::var(i), Scalar::one())],
        }
    }

    pub fn constant(&self, c: Scalar) -> MultiPoly {
        let mut p = MultiPoly::constant(c);
        p.vars = Some(self.names.clone());
        p
    }

    pub fn zero(&self) -> MultiPoly {
        self.constant(Scalar::zero())
    }

    pub fn monomial(&self, exps: &[u32], c: Scalar) -> Result<MultiPoly, AlgebraError> {
        if exps.len() > self.names.len() {
            return Err(AlgebraError::TooManyVariables(exps.len()));
        }
        let m = Monomial::from_exponents(exps)?;
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Ok(MultiPoly { vars: Some(self.names.clone()), terms })
    }

    /// Univariate polynomial in variable `var` from ascending coefficients.
    pub fn univariate(&self, var: usize, coeffs: &[Scalar]) -> MultiPoly {
        let mut terms: Vec<(Monomial, Scalar)> = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut exps = vec![0u32; var + 1];
                exps[var] = k as u32;
                let m = Monomial::from_exponents(&exps).expect("exponent within bounds");
                terms.push((m, c.clone()));
            }
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { vars: Some(self.names.clone()), terms }
    }
}

/// Sparse polynomial; terms are kept sorted in decreasing graded-lex order with no zero coefficients.
///
/// A polynomial without a context (`vars == None`) is a free constant and combines with any ring.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Option<VarNames>,
    terms: Vec<(Monomial, Scalar)>,
}

fn merge_context(a: &Option<VarNames>, b: &Option<VarNames>) -> Result<Option<VarNames>, AlgebraError> {
    match (a, b) {
        (None, x) | (x, None) => Ok(x.clone()),
        (Some(x), Some(y)) => {
            if Arc::ptr_eq(x, y) || x == y {
                Ok(Some(x.clone()))
            } else {
                Err(AlgebraError::ContextMismatch)
            }
        }
    }
}

impl MultiPoly {
    pub fn constant(c: Scalar) -> MultiPoly {
        let terms = if c.is_zero() { vec![] } else { vec![(Monomial::ONE, c)] };
        MultiPoly { vars: None, terms }
    }

    pub fn zero() -> MultiPoly {
        MultiPoly { vars: None, terms: vec![] }
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(Scalar::one())
    }

    pub fn var_names(&self) -> Option<&[String]> {
        self.vars.as_deref().map(|v| v.as_slice())
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| *m == Monomial::ONE)
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [] => Some(Scalar::zero()),
            [(m, c)] if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0)
    }

    /// Largest degree of any term counted only over the variables in `mask`.
    pub fn degree_in_vars(&self, mask: &[bool]) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| partial_degree(*m, mask))
            .max()
            .unwrap_or(0)
    }

    /// Terms whose degree in the `mask` variables is exactly `degree`.
    pub fn homogeneous_part(&self, mask: &[bool], degree: u32) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| partial_degree(*m, mask) == degree)
                .cloned()
                .collect(),
        }
    }

    /// Coefficients as integers, when every denominator is one.
    fn integer_terms(&self) -> Option<Vec<(Monomial, BigInt)>> {
        self.terms
            .iter()
            .map(|(m, c)| c.is_integer().then(|| (*m, c.numer().clone())))
            .collect()
    }

    fn from_map(vars: Option<VarNames>, map: HashMap<Monomial, Scalar>) -> MultiPoly {
        let mut terms: Vec<(Monomial, Scalar)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { vars, terms }
    }

    fn merge(&self, other: &MultiPoly, negate_other: bool) -> Result<MultiPoly, AlgebraError> {
        let vars = merge_context(&self.vars, &other.vars)?;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let take_b = |c: &Scalar| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0, take_b(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, take_b(c))));
        Ok(MultiPoly { vars, terms: out })
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        self.merge(other, false)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        self.merge(other, true)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        let vars = merge_context(&self.vars, &other.vars)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly { vars, terms: vec![] });
        }
        if let Some(c) = other.as_constant() {
            return Ok(self.scale(&c).with_vars(vars));
        }
        if let Some(c) = self.as_constant() {
            return Ok(other.scale(&c).with_vars(vars));
        }
        if let (Some(x), Some(y)) = (self.integer_terms(), other.integer_terms()) {
            return Ok(MultiPoly { vars, terms: integer_product(&x, &y)? });
        }
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(*mb).ok_or(AlgebraError::ExponentOverflow)?;
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(MultiPoly::from_map(vars, acc))
    }

    fn with_vars(mut self, vars: Option<VarNames>) -> MultiPoly {
        self.vars = vars;
        self
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly { vars: self.vars.clone(), terms: vec![] };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one().with_vars(self.vars.clone());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`; fails unless the division leaves no remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        let vars = merge_context(&self.vars, &divisor.vars)?;
        let Some((dm, dc)) = divisor.terms.first() else {
            return Err(AlgebraError::DivisionByZero);
        };
        if let Some(c) = divisor.as_constant() {
            let inv = c.recip();
            return Ok(self.scale(&inv).with_vars(vars));
        }
        if let (Some(x), Some(y)) = (self.integer_terms(), divisor.integer_terms()) {
            if let Some(terms) = integer_quotient(&x, &y)? {
                return Ok(MultiPoly { vars, terms });
            }
        }
        let mut rem: BTreeMap<Monomial, Scalar> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((&lm, lc)) = rem.last_key_value() {
            let qm = lm.checked_div(*dm).ok_or(AlgebraError::NotDivisible)?;
            let qc = lc / dc;
            for (m, c) in &divisor.terms {
                let key = m.checked_mul(qm).ok_or(AlgebraError::ExponentOverflow)?;
                let delta = c * &qc;
                let remove = match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= delta;
                        v.is_zero()
                    }
                    None => {
                        rem.insert(key, -delta);
                        false
                    }
                };
                if remove {
                    rem.remove(&key);
                }
            }
            quotient.push((qm, qc));
        }
        Ok(MultiPoly { vars, terms: quotient })
    }

    /// Largest `k` with `factor^k | self` (the zero polynomial reports `u32::MAX`).
    pub fn multiplicity_of(&self, factor: &MultiPoly) -> Result<u32, AlgebraError> {
        if factor.is_constant() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(u32::MAX);
        }
        let mut k = 0;
        let mut cur = self.clone();
        loop {
            match cur.div_exact(factor) {
                Ok(q) => {
                    cur = q;
                    k += 1;
                }
                Err(AlgebraError::NotDivisible) => return Ok(k),
                Err(e) => return Err(e),
            }
        }
    }

    /// Evaluates at a point given by variable name. Only variables that occur need a binding.
    pub fn eval(&self, point: &HashMap<String, Scalar>) -> Result<Scalar, AlgebraError> {
        let names = self.vars.as_deref();
        let mut values: Vec<Option<&Scalar>> = Vec::new();
        if let Some(names) = names {
            values = names.iter().map(|n| point.get(n)).collect();
        }
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, v) in values.iter().enumerate() {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                let v = v.ok_or_else(|| {
                    AlgebraError::MissingBinding(names.map(|n| n[i].clone()).unwrap_or_default())
                })?;
                t *= num_traits::pow(v.clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluates with values given positionally in ring order.
    pub fn eval_at(&self, values: &[Scalar]) -> Result<Scalar, AlgebraError> {
        let n = self.vars.as_ref().map_or(0, |v| v.len());
        if values.len() < n {
            for (m, _) in &self.terms {
                for i in values.len()..n {
                    if m.exponent(i) > 0 {
                        let name = self.vars.as_ref().map(|v| v[i].clone()).unwrap_or_default();
                        return Err(AlgebraError::MissingBinding(name));
                    }
                }
            }
        }
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, v) in values.iter().enumerate().take(n) {
                let e = m.exponent(i);
                if e > 0 {
                    t *= num_traits::pow(v.clone(), e as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Replaces variable `var` by `value`.
    pub fn substitute(&self, var: usize, value: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        let vars = merge_context(&self.vars, &value.vars)?;
        let mut powers: Vec<MultiPoly> = vec![MultiPoly::one()];
        let mut out = MultiPoly::zero().with_vars(vars.clone());
        // group by the remaining monomial to keep the number of multiplications down
        let mut groups: BTreeMap<u32, Vec<(Monomial, Scalar)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (rest, e) = m.without(var);
            groups.entry(e).or_default().push((rest, c.clone()));
        }
        for (e, list) in groups {
            while powers.len() <= e as usize {
                let next = powers.last().unwrap().try_mul(value)?;
                powers.push(next);
            }
            let mut rest_terms = list;
            rest_terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
            let rest = MultiPoly { vars: vars.clone(), terms: rest_terms };
            out = out.try_add(&rest.try_mul(&powers[e as usize])?)?;
        }
        Ok(out)
    }

    /// Ascending coefficients when the polynomial involves at most variable `var`.
    pub fn univariate_coeffs(&self, var: usize) -> Option<Vec<Scalar>> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Scalar::zero(); deg + 1];
        for (m, c) in &self.terms {
            let (rest, e) = m.without(var);
            if rest != Monomial::ONE {
                return None;
            }
            out[e as usize] = c.clone();
        }
        Some(out)
    }

    /// Renders with explicit names, for polynomials that carry no context.
    pub fn display_with(&self, names: &[String]) -> String {
        render(&self.terms, names)
    }
}

fn partial_degree(m: Monomial, mask: &[bool]) -> u32 {
    mask.iter()
        .enumerate()
        .filter(|(_, &on)| on)
        .map(|(i, _)| m.exponent(i))
        .sum()
}

fn render(terms: &[(Monomial, Scalar)], names: &[String]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in terms.iter().enumerate() {
        let mut factors = Vec::new();
        for (i, name) in names.iter().enumerate().take(MAX_VARS) {
            match m.exponent(i) {
                0 => {}
                1 => factors.push(name.clone()),
                e => factors.push(format!("{name}^{e}")),
            }
        }
        let negative = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let body = if factors.is_empty() {
            format_scalar(&abs)
        } else if abs.is_one() {
            factors.join("*")
        } else {
            format!("{}*{}", format_scalar(&abs), factors.join("*"))
        };
        out.push_str(&body);
    }
    out
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: &[String] = self.vars.as_deref().map(|v| v.as_slice()).unwrap_or(&[]);
        f.write_str(&render(&self.terms, names))
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.terms != other.terms {
            return false;
        }
        // equal term lists in different named rings only agree when both are constants
        merge_context(&self.vars, &other.vars).is_ok() || self.is_constant()
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

/// Product of integer-coefficient term lists, in machine integers while they fit.
fn integer_product(x: &[(Monomial, BigInt)], y: &[(Monomial, BigInt)]) -> Result<Vec<(Monomial, Scalar)>, AlgebraError> {
    let small = |t: &[(Monomial, BigInt)]| -> Option<Vec<(Monomial, i128)>> {
        t.iter().map(|(m, c)| c.to_i128().map(|v| (*m, v))).collect()
    };
    if let (Some(xs), Some(ys)) = (small(x), small(y)) {
        let mut acc: HashMap<Monomial, i128> = HashMap::with_capacity(xs.len() * ys.len());
        let mut overflow = false;
        'outer: for (ma, ca) in &xs {
            for (mb, cb) in &ys {
                let m = ma.checked_mul(*mb).ok_or(AlgebraError::ExponentOverflow)?;
                let Some(c) = ca.checked_mul(*cb) else {
                    overflow = true;
                    break 'outer;
                };
                let slot = acc.entry(m).or_insert(0);
                match slot.checked_add(c) {
                    Some(v) => *slot = v,
                    None => {
                        overflow = true;
                        break 'outer;
                    }
                }
            }
        }
        if !overflow {
            return Ok(sorted_terms(acc.into_iter().filter(|(_, c)| *c != 0).map(|(m, c)| (m, Scalar::from_integer(c.into())))));
        }
    }
    let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(x.len() * y.len());
    for (ma, ca) in x {
        for (mb, cb) in y {
            let m = ma.checked_mul(*mb).ok_or(AlgebraError::ExponentOverflow)?;
            *acc.entry(m).or_default() += ca * cb;
        }
    }
    Ok(sorted_terms(acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m, Scalar::from_integer(c)))))
}

/// Exact quotient over the integers; `None` when some quotient coefficient is not integral.
fn integer_quotient(x: &[(Monomial, BigInt)], y: &[(Monomial, BigInt)]) -> Result<Option<Vec<(Monomial, Scalar)>>, AlgebraError> {
    let (dm, dc) = &y[0];
    let mut rem: BTreeMap<Monomial, BigInt> = x.iter().cloned().collect();
    let mut quotient = Vec::new();
    while let Some((&lm, lc)) = rem.last_key_value() {
        let qm = lm.checked_div(*dm).ok_or(AlgebraError::NotDivisible)?;
        if !(lc % dc).is_zero() {
            return Ok(None);
        }
        let qc = lc / dc;
        for (m, c) in y {
            let key = m.checked_mul(qm).ok_or(AlgebraError::ExponentOverflow)?;
            let slot = rem.entry(key).or_default();
            *slot -= c * &qc;
            if slot.is_zero() {
                rem.remove(&key);
            }
        }
        quotient.push((qm, Scalar::from_integer(qc)));
    }
    Ok(Some(quotient))
}

fn sorted_terms(it: impl Iterator<Item = (Monomial, Scalar)>) -> Vec<(Monomial, Scalar)> {
    let mut terms: Vec<(Monomial, Scalar)> = it.collect();
    terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    terms
}
