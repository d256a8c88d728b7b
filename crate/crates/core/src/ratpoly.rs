//! Sparse multivariate polynomials with arbitrary-precision rational
//! coefficients, over indexed variable families `S_j`, `R_j`, `p_i`, `q_i`
//! and the dilation variable `s`.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is the
//! canonical print order: weighted degree descending (`S_j`, `R_j` weigh `j`,
//! every other variable weighs 1), then lexicographic with larger exponents on
//! earlier variables first. Within a monomial, `S`/`R` variables appear by
//! descending index and `p`/`q` by ascending index, so `K_6` prints as
//! `R7 + 35*R5 + 35*R3*R2 + 84*R3`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    S,
    R,
    P,
    Q,
    Dil,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    family: Family,
    index: u32,
}

impl Variable {
    pub fn new(family: Family, index: u32) -> Result<Self> {
        let ok = match family {
            Family::S | Family::R => index >= 2,
            Family::P | Family::Q => index >= 1,
            Family::Dil => index == 1,
        };
        if ok {
            Ok(Variable { family, index })
        } else {
            Err(Error::Parse(format!("invalid index {index} for {family:?}")))
        }
    }

    /// The fundamental functional `S_j`, `j ≥ 2`.
    pub fn s(j: usize) -> Self {
        assert!(j >= 2, "S_j needs j >= 2");
        Variable {
            family: Family::S,
            index: j as u32,
        }
    }

    /// The free cumulant `R_j`, `j ≥ 2`.
    pub fn r(j: usize) -> Self {
        assert!(j >= 2, "R_j needs j >= 2");
        Variable {
            family: Family::R,
            index: j as u32,
        }
    }

    pub fn p(i: usize) -> Self {
        assert!(i >= 1);
        Variable {
            family: Family::P,
            index: i as u32,
        }
    }

    pub fn q(i: usize) -> Self {
        assert!(i >= 1);
        Variable {
            family: Family::Q,
            index: i as u32,
        }
    }

    pub fn dilation() -> Self {
        Variable {
            family: Family::Dil,
            index: 1,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }

    /// Homogeneous degree: `j` for `S_j` and `R_j`, 1 otherwise.
    pub fn weight(&self) -> u32 {
        match self.family {
            Family::S | Family::R => self.index,
            _ => 1,
        }
    }

    fn is_shape(&self) -> bool {
        matches!(self.family, Family::S | Family::R)
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.family.cmp(&other.family).then_with(|| match self.family {
            Family::S | Family::R => other.index.cmp(&self.index),
            _ => self.index.cmp(&other.index),
        })
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::S => write!(f, "S{}", self.index),
            Family::R => write!(f, "R{}", self.index),
            Family::P => write!(f, "p{}", self.index),
            Family::Q => write!(f, "q{}", self.index),
            Family::Dil => write!(f, "s"),
        }
    }
}

impl FromStr for Variable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "s" {
            return Ok(Variable::dilation());
        }
        let bad = || Error::Parse(format!("unknown variable {s:?}"));
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('S') => Family::S,
            Some('R') => Family::R,
            Some('p') => Family::P,
            Some('q') => Family::Q,
            _ => return Err(bad()),
        };
        let index: u32 = chars.as_str().parse().map_err(|_| bad())?;
        Variable::new(family, index)
    }
}

/// A product of variable powers, sorted by variable, no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Variable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Variable) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (Variable, u32)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |&(_, e)| e)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|(v, e)| v.weight() * e).sum()
    }

    /// Number of variable factors counted with multiplicity.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Splits into the factors from `families` and the rest.
    fn split(&self, families: &[Family]) -> (Monomial, Monomial) {
        let (inside, outside): (Vec<_>, Vec<_>) = self.0.iter().partition(|(v, _)| families.contains(&v.family));
        (Monomial(inside), Monomial(outside))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.weight().cmp(&self.weight()).then_with(|| {
            for (&(va, ea), &(vb, eb)) in self.0.iter().zip(&other.0) {
                match va.cmp(&vb) {
                    Ordering::Equal => match eb.cmp(&ea) {
                        Ordering::Equal => continue,
                        o => return o,
                    },
                    o => return o,
                }
            }
            other.0.len().cmp(&self.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "PolyJson", into = "PolyJson")]
pub struct RatPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly::default()
    }

    pub fn one() -> Self {
        RatPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly::term(c, Monomial::one())
    }

    pub fn var(v: Variable) -> Self {
        RatPoly::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        RatPoly { terms }
    }

    /// Builds from integer-counted terms, dropping zeros.
    pub fn from_int_terms<I: IntoIterator<Item = (Monomial, i64)>>(terms: I) -> Self {
        let mut p = RatPoly::zero();
        for (m, c) in terms {
            p.add_term(m, Rational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> RatPoly {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> RatPoly {
        let mut acc = RatPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficient of exactly `m`, zero if absent.
    pub fn coefficient_of(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `m` when only the variables of `families` are treated as
    /// indeterminates; the result is a polynomial in the remaining variables.
    pub fn coefficient_in(&self, m: &Monomial, families: &[Family]) -> RatPoly {
        let mut out = RatPoly::zero();
        for (mono, c) in &self.terms {
            let (inside, rest) = mono.split(families);
            if &inside == m {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// `∂/∂v_1 ⋯ ∂/∂v_l f` with every `S` and `R` variable then set to zero.
    ///
    /// Only monomials whose shape part is exactly the multiset `vars`
    /// survive, each contributing `coefficient · ∏ m_v!`. Other variables are
    /// never zeroed, so they must not appear in a surviving term.
    pub fn derivative_at_zero(&self, vars: &[Variable]) -> Result<Rational> {
        let target = Monomial::from_pairs(vars.iter().map(|&v| (v, 1)));
        let mut total = Rational::zero();
        'terms: for (mono, c) in &self.terms {
            let mut factor = BigInt::one();
            for &(v, d) in target.factors() {
                let e = mono.exponent(v);
                if e < d {
                    continue 'terms;
                }
                factor *= rational::falling_factorial(e as usize, d as usize);
            }
            let mut leftover = Vec::new();
            for &(v, e) in mono.factors() {
                let rem = e - target.exponent(v);
                if rem > 0 {
                    if v.is_shape() {
                        continue 'terms;
                    }
                    leftover.push((v, rem));
                }
            }
            if !leftover.is_empty() {
                return Err(Error::NonScalarDerivative(Monomial(leftover).to_string()));
            }
            total += c * Rational::from_integer(factor);
        }
        Ok(total)
    }

    pub fn evaluate(&self, assignment: &HashMap<Variable, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (mono, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in mono.factors() {
                let x = assignment
                    .get(&v)
                    .ok_or_else(|| Error::MissingVariable(v.to_string()))?;
                t *= rational::pow(x, e);
            }
            total += t;
        }
        Ok(total)
    }

    /// Replaces each variable in `map` by its polynomial; other variables stay.
    pub fn substitute(&self, map: &HashMap<Variable, RatPoly>) -> RatPoly {
        let mut powers: HashMap<(Variable, u32), RatPoly> = HashMap::new();
        let mut out = RatPoly::zero();
        for (mono, c) in &self.terms {
            let mut t = RatPoly::constant(c.clone());
            for &(v, e) in mono.factors() {
                match map.get(&v) {
                    Some(image) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| image.pow(e));
                        t = &t * pw;
                    }
                    None => t = &t * &RatPoly::term(Rational::one(), Monomial(vec![(v, e)])),
                }
            }
            out += &t;
        }
        out
    }

    /// The terms of weighted degree exactly `w`.
    pub fn weighted_part(&self, w: u32) -> RatPoly {
        RatPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == w)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The terms whose degree under the weight function `weight` is exactly `w`.
    pub fn graded_part<F: Fn(&Variable) -> u32>(&self, weight: F, w: u32) -> RatPoly {
        RatPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.factors().iter().map(|(v, e)| weight(v) * e).sum::<u32>() == w)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::weight).max()
    }

    /// Coefficient of `s^d` in a univariate polynomial in the dilation variable.
    pub fn dilation_coefficient(&self, d: u32) -> Rational {
        if d == 0 {
            self.coefficient_of(&Monomial::one())
        } else {
            self.coefficient_of(&Monomial(vec![(Variable::dilation(), d)]))
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial JSON is always serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{}", rational::format(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", rational::format(&a))?;
            }
        }
        Ok(())
    }
}

impl FromStr for RatPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
        .poly()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at byte {} of {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn poly(&mut self) -> Result<RatPoly> {
        let mut out = RatPoly::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            None => return Err(self.err("empty polynomial")),
            _ => 1,
        };
        loop {
            let (c, m) = self.term()?;
            out.add_term(m, if sign < 0 { -c } else { c });
            sign = match self.peek() {
                Some(b'+') => 1,
                Some(b'-') => -1,
                None => return Ok(out),
                _ => return Err(self.err("expected '+' or '-'")),
            };
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Rational, Monomial)> {
        let mut coeff = Rational::one();
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let num: BigInt = self.digits()?.parse().unwrap();
                    let mut r = Rational::from_integer(num);
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        self.skip_ws();
                        let den: BigInt = self.digits()?.parse().unwrap();
                        if den.is_zero() {
                            return Err(self.err("zero denominator"));
                        }
                        r /= Rational::from_integer(den);
                    }
                    coeff *= r;
                }
                Some(b) if b.is_ascii_alphabetic() => {
                    let start = self.pos;
                    self.pos += 1;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let v: Variable = name.parse()?;
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        e = self.digits()?.parse().map_err(|_| self.err("bad exponent"))?;
                    }
                    factors.push((v, e));
                }
                _ => return Err(self.err("expected a number or a variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((coeff, Monomial::from_pairs(factors)));
            }
        }
    }
}

impl AddAssign<&RatPoly> for RatPoly {
    fn add_assign(&mut self, rhs: &RatPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add<&RatPoly> for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RatPoly {
    type Output = RatPoly;

    fn add(mut self, rhs: RatPoly) -> RatPoly {
        self += &rhs;
        self
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        RatPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        -&self
    }
}

impl Sub<&RatPoly> for &RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &RatPoly) -> RatPoly {
        self + &(-rhs)
    }
}

impl Sub for RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: RatPoly) -> RatPoly {
        &self - &rhs
    }
}

impl Mul<&RatPoly> for &RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &RatPoly) -> RatPoly {
        let mut out = RatPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: RatPoly) -> RatPoly {
        &self * &rhs
    }
}

/// The unique polynomial in the dilation variable of degree at most
/// `max_degree` through `points`.
///
/// The first `max_degree + 1` points determine the fit (Newton divided
/// differences); any further points must lie on it, otherwise the degree
/// bound is reported as violated.
pub fn interpolate_univariate(points: &[(Rational, Rational)], max_degree: usize) -> Result<RatPoly> {
    let needed = max_degree + 1;
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::InsufficientPoints { needed, got: i });
        }
    }
    if points.len() < needed {
        return Err(Error::InsufficientPoints {
            needed,
            got: points.len(),
        });
    }
    let (fit, extra) = points.split_at(needed);
    let xs: Vec<&Rational> = fit.iter().map(|(x, _)| x).collect();
    let mut coef: Vec<Rational> = fit.iter().map(|(_, y)| y.clone()).collect();
    for j in 1..needed {
        for i in (j..needed).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (xs[i] - xs[i - j]);
        }
    }
    let s = RatPoly::var(Variable::dilation());
    let mut poly = RatPoly::constant(coef[needed - 1].clone());
    for i in (0..needed - 1).rev() {
        let shifted = &s - &RatPoly::constant(xs[i].clone());
        poly = &(&poly * &shifted) + &RatPoly::constant(coef[i].clone());
    }
    for (x, y) in extra {
        let at = HashMap::from([(Variable::dilation(), x.clone())]);
        if &poly.evaluate(&at)? != y {
            return Err(Error::DegreeBoundViolated(max_degree));
        }
    }
    Ok(poly)
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    mono: MonoJson,
    coeff: String,
}

struct MonoJson(Vec<(String, u32)>);

impl Serialize for MonoJson {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = ser.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for MonoJson {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<String, u32>::deserialize(de)?;
        Ok(MonoJson(map.into_iter().collect()))
    }
}

impl From<RatPoly> for PolyJson {
    fn from(p: RatPoly) -> Self {
        PolyJson {
            terms: p
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    mono: MonoJson(m.factors().iter().map(|(v, e)| (v.to_string(), *e)).collect()),
                    coeff: rational::format(c),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for RatPoly {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<Self> {
        let mut p = RatPoly::zero();
        for t in j.terms {
            let factors = t
                .mono
                .0
                .iter()
                .map(|(name, e)| Ok((name.parse::<Variable>()?, *e)))
                .collect::<Result<Vec<_>>>()?;
            p.add_term(Monomial::from_pairs(factors), rational::parse(&t.coeff)?);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn poly(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    fn mono(pairs: &[(Variable, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn ring_examples() {
        let s2 = RatPoly::var(Variable::s(2));
        assert!((&s2 + &(-&s2)).is_zero());
        let s3 = RatPoly::var(Variable::s(3));
        assert_eq!((&s2 * &s3).to_string(), "S3*S2");
        let half = s2.pow(2).scale(&ratio(1, 2));
        assert_eq!(&half + &half, s2.pow(2));
    }

    #[test]
    fn coefficient_examples() {
        let j4 = poly("S5 - 4*S2*S3 + 5*S3");
        assert_eq!(j4.coefficient_of(&mono(&[(Variable::s(3), 1)])), int(5));
        let k5 = poly("R6 + 15*R4 + 5*R2^2 + 8*R2");
        assert_eq!(k5.coefficient_of(&mono(&[(Variable::r(2), 2)])), int(5));
        assert_eq!(RatPoly::zero().coefficient_of(&Monomial::one()), int(0));
    }

    #[test]
    fn derivative_examples() {
        let f = poly("-3/2*S2^2");
        assert_eq!(
            f.derivative_at_zero(&[Variable::s(2), Variable::s(2)]).unwrap(),
            int(-3)
        );
        let f = poly("S4");
        assert_eq!(f.derivative_at_zero(&[Variable::s(4)]).unwrap(), int(1));
        let f = poly("5*R2^2");
        assert_eq!(
            f.derivative_at_zero(&[Variable::r(2), Variable::r(2)]).unwrap(),
            int(10)
        );
        // J_3 = S4 - 3/2 S2^2 + S2: the derivative in S2 alone sees only the linear term.
        let j3 = poly("S4 - 3/2*S2^2 + S2");
        assert_eq!(j3.derivative_at_zero(&[Variable::s(2)]).unwrap(), int(1));
        assert_eq!(j3.derivative_at_zero(&[Variable::s(3)]).unwrap(), int(0));
    }

    #[test]
    fn derivative_keeps_pq() {
        let f = poly("S2*q1 + S3");
        assert!(matches!(
            f.derivative_at_zero(&[Variable::s(2)]),
            Err(Error::NonScalarDerivative(_))
        ));
        assert_eq!(f.derivative_at_zero(&[Variable::s(2), Variable::q(1)]).unwrap(), int(1));
    }

    #[test]
    fn evaluate_examples() {
        let at = |pairs: &[(Variable, Rational)]| pairs.iter().cloned().collect::<HashMap<_, _>>();
        assert_eq!(poly("S2").evaluate(&at(&[(Variable::s(2), int(3))])).unwrap(), int(3));
        assert_eq!(
            poly("R4 + R2")
                .evaluate(&at(&[(Variable::r(4), int(-6)), (Variable::r(2), int(3))]))
                .unwrap(),
            int(-3)
        );
        assert_eq!(
            poly("p1*q1^2 - p1^2*q1")
                .evaluate(&at(&[(Variable::p(1), int(2)), (Variable::q(1), int(2))]))
                .unwrap(),
            int(0)
        );
        assert_eq!(
            poly("S2 + S3").evaluate(&at(&[(Variable::s(2), int(1))])),
            Err(Error::MissingVariable("S3".into()))
        );
    }

    #[test]
    fn canonical_text() {
        let k6 = poly("84*R3 + 35*R2*R3 + R7 + 35*R5");
        assert_eq!(k6.to_string(), "R7 + 35*R5 + 35*R3*R2 + 84*R3");
        let j5 = poly("8*S2 - 35/2*S2^2 + 15*S4 + 25/6*S2^3 - 5/2*S3^2 - 5*S2*S4 + S6");
        assert_eq!(
            j5.to_string(),
            "S6 - 5*S4*S2 - 5/2*S3^2 + 25/6*S2^3 + 15*S4 - 35/2*S2^2 + 8*S2"
        );
        assert_eq!(poly("-S2 + 1").to_string(), "-S2 + 1");
        assert_eq!(RatPoly::zero().to_string(), "0");
        assert_eq!(poly("q1*p2*p1").to_string(), "p1*p2*q1");
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<RatPoly>().is_err());
        assert!("S1".parse::<RatPoly>().is_err());
        assert!("R2 +".parse::<RatPoly>().is_err());
        assert!("3/0*S2".parse::<RatPoly>().is_err());
        assert!("X2".parse::<RatPoly>().is_err());
    }

    #[test]
    fn json_form() {
        let k = poly("R7 + 35*R5 - 1/2*R3*R2");
        let v = k.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"terms":[{"mono":{"R7":1},"coeff":"1"},{"mono":{"R5":1},"coeff":"35"},{"mono":{"R3":1,"R2":1},"coeff":"-1/2"}]}"#
        );
        assert_eq!(RatPoly::from_json(&v).unwrap(), k);
    }

    #[test]
    fn substitution() {
        // S4 -> R4 + 3/2 R2^2, S2 -> R2 turns J_3 into K_3.
        let j3 = poly("S4 - 3/2*S2^2 + S2");
        let map = HashMap::from([(Variable::s(4), poly("R4 + 3/2*R2^2")), (Variable::s(2), poly("R2"))]);
        assert_eq!(j3.substitute(&map), poly("R4 + R2"));
    }

    #[test]
    fn interpolation_examples() {
        let pts: Vec<_> = (0..4).map(|x| (int(x), int(7))).collect();
        assert_eq!(interpolate_univariate(&pts, 3).unwrap(), RatPoly::constant(int(7)));
        let pts = vec![(int(0), int(0)), (int(1), int(1)), (int(2), int(4))];
        assert_eq!(interpolate_univariate(&pts, 2).unwrap(), poly("s^2"));
        let cubic: Vec<_> = (0..5).map(|x| (int(x), int(x * x * x))).collect();
        assert_eq!(interpolate_univariate(&cubic, 2), Err(Error::DegreeBoundViolated(2)));
        assert!(matches!(
            interpolate_univariate(&cubic[..2], 2),
            Err(Error::InsufficientPoints { .. })
        ));
        let dup = vec![(int(0), int(0)), (int(0), int(1)), (int(2), int(4))];
        assert!(matches!(
            interpolate_univariate(&dup, 2),
            Err(Error::InsufficientPoints { .. })
        ));
    }

    fn arb_var() -> impl Strategy<Value = Variable> {
        prop_oneof![
            (2usize..6).prop_map(Variable::s),
            (2usize..6).prop_map(Variable::r),
            (1usize..3).prop_map(Variable::p),
            (1usize..3).prop_map(Variable::q),
            Just(Variable::dilation()),
        ]
    }

    fn arb_poly() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec(
            (prop::collection::vec((arb_var(), 1u32..3), 0..3), -9i64..10, 1i64..5),
            0..5,
        )
        .prop_map(|terms| {
            let mut p = RatPoly::zero();
            for (m, n, d) in terms {
                p.add_term(Monomial::from_pairs(m), ratio(n, d));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(&a * &RatPoly::one(), a.clone());
        }

        #[test]
        fn text_and_json_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<RatPoly>().unwrap(), a.clone());
            prop_assert_eq!(RatPoly::from_json(&a.to_json()).unwrap(), a);
        }

        #[test]
        fn derivative_is_factorial_times_coefficient(j in 2usize..6, m in 1u32..4, c in -9i64..10, other in 2usize..6) {
            prop_assume!(other != j);
            let v = Variable::s(j);
            let target = Monomial::from_pairs([(v, m)]);
            let mut f = RatPoly::term(int(c), target.clone());
            f.add_term(Monomial::from_pairs([(v, m), (Variable::s(other), 1)]), int(3));
            let vars = vec![v; m as usize];
            let fact: i64 = (1..=m as i64).product();
            prop_assert_eq!(f.derivative_at_zero(&vars).unwrap(), f.coefficient_of(&target) * int(fact));
        }
    }
}
