//! Sparse polynomials with [`Natural`] coefficients.
//!
//! [`UniPoly`] holds `P(z) = sum k(d) z^d`, [`BiPoly`] holds
//! `Q(x, y) = sum k(c, d) x^c y^d`. Zero coefficients are never stored, so
//! derived equality is value equality.
//!
//! The [`Semiring`] trait, together with [`GridWeight`] and
//! [`BipartiteWeight`], lets the transfer engines run unchanged over exact
//! counts (`Natural`, every monomial weight set to 1) or over full
//! generating functions.

use std::cmp::Reverse;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Natural;

/// Commutative semiring with an additive identity, as needed by the state
/// matrix products. Nothing here ever subtracts.
pub trait Semiring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, rhs: &Self);

    fn set_zero(&mut self) {
        *self = Self::zero();
    }
}

/// Weight ring for IVS enumeration: tiles holding a vertex carry a factor `z`.
pub trait GridWeight: Semiring {
    fn times_z(&mut self);
}

/// Weight ring for BIVS enumeration: white vertices carry `x`, black `y`.
pub trait BipartiteWeight: Semiring {
    fn times_x(&mut self);
    fn times_y(&mut self);
}

impl Semiring for Natural {
    fn zero() -> Self {
        Natural::zero()
    }
    fn one() -> Self {
        Natural::one()
    }
    fn is_zero(&self) -> bool {
        Natural::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn set_zero(&mut self) {
        Natural::set_zero(self);
    }
}

// Counting specialisations: z = 1 and x = y = 1.
impl GridWeight for Natural {
    #[inline]
    fn times_z(&mut self) {}
}

impl BipartiteWeight for Natural {
    #[inline]
    fn times_x(&mut self) {}
    #[inline]
    fn times_y(&mut self) {}
}

fn add_term<K: Ord>(map: &mut BTreeMap<K, Natural>, key: K, k: &Natural) {
    if k.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Occupied(mut e) => *e.get_mut() += k,
        Entry::Vacant(e) => {
            e.insert(k.clone());
        }
    }
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, k: &Natural, monomial: &str) -> fmt::Result {
    if monomial.is_empty() {
        write!(f, "{k}")
    } else if *k == Natural::one() {
        f.write_str(monomial)
    } else {
        write!(f, "{k}*{monomial}")
    }
}

fn power(var: char, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

/// Univariate polynomial in `z`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, Natural>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::monomial(0, Natural::one())
    }

    /// `k * z^d`.
    pub fn monomial(d: u32, k: Natural) -> Self {
        let mut p = UniPoly::zero();
        add_term(&mut p.coeffs, d, &k);
        p
    }

    /// Builds `c[0] + c[1] z + c[2] z^2 + ...`.
    pub fn from_coeffs(coeffs: &[u64]) -> Self {
        let mut p = UniPoly::zero();
        for (d, &k) in coeffs.iter().enumerate() {
            add_term(&mut p.coeffs, d as u32, &Natural::from(k));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest stored exponent; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, d: u32) -> Natural {
        self.coeffs.get(&d).cloned().unwrap_or_default()
    }

    /// Stored terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Natural)> + '_ {
        self.coeffs.iter().map(|(&d, k)| (d, k))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Sum of all coefficients, i.e. the value at `z = 1`.
    pub fn eval_ones(&self) -> Natural {
        self.coeffs.values().sum()
    }

    /// Multiplies by `z^e` in place.
    pub fn shift(&mut self, e: u32) {
        if e == 0 || self.coeffs.is_empty() {
            return;
        }
        let old = std::mem::take(&mut self.coeffs);
        self.coeffs = old.into_iter().map(|(d, k)| (d + e, k)).collect();
    }

    /// Embeds into the bivariate ring with `z -> x`.
    pub fn to_bipoly_in_x(&self) -> BiPoly {
        let mut q = BiPoly::zero();
        for (d, k) in self.terms() {
            add_term(&mut q.coeffs, (d, 0), k);
        }
        q
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&d1, k1) in &self.coeffs {
            for (&d2, k2) in &rhs.coeffs {
                add_term(&mut out.coeffs, d1 + d2, &(k1 * k2));
            }
        }
        out
    }
}

impl Semiring for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        for (&d, k) in &rhs.coeffs {
            add_term(&mut self.coeffs, d, k);
        }
    }
    fn set_zero(&mut self) {
        self.coeffs.clear();
    }
}

impl GridWeight for UniPoly {
    fn times_z(&mut self) {
        self.shift(1);
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (&d, k)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write_coefficient(f, k, &power('z', d).unwrap_or_default())?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct UniTerm {
    d: u32,
    k: Natural,
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(
            self.coeffs
                .iter()
                .map(|(&d, k)| UniTerm { d, k: k.clone() }),
        )
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<UniTerm>::deserialize(deserializer)?;
        let mut p = UniPoly::zero();
        for t in &terms {
            add_term(&mut p.coeffs, t.d, &t.k);
        }
        Ok(p)
    }
}

/// Bivariate polynomial in `x` (white) and `y` (black).
///
/// Terms are stored in lexicographic `(c, d)` order; text rendering uses
/// graded order (total degree, then higher `x` power first).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    coeffs: BTreeMap<(u32, u32), Natural>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(0, 0, Natural::one())
    }

    /// `k * x^c * y^d`.
    pub fn monomial(c: u32, d: u32, k: Natural) -> Self {
        let mut q = BiPoly::zero();
        add_term(&mut q.coeffs, (c, d), &k);
        q
    }

    /// Builds a polynomial from `(c, d, k)` triples; repeated exponents add up.
    pub fn from_terms(terms: &[(u32, u32, u64)]) -> Self {
        let mut q = BiPoly::zero();
        for &(c, d, k) in terms {
            add_term(&mut q.coeffs, (c, d), &Natural::from(k));
        }
        q
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, c: u32, d: u32) -> Natural {
        self.coeffs.get(&(c, d)).cloned().unwrap_or_default()
    }

    /// Stored terms `(c, d, k)` in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Natural)> + '_ {
        self.coeffs.iter().map(|(&(c, d), k)| (c, d, k))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Highest total degree `c + d`; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(c, d)| c + d).max()
    }

    /// Sum of all coefficients, i.e. the value at `x = y = 1`.
    pub fn eval_ones(&self) -> Natural {
        self.coeffs.values().sum()
    }

    /// Multiplies by `x^dc * y^dd` in place.
    pub fn shift(&mut self, dc: u32, dd: u32) {
        if (dc == 0 && dd == 0) || self.coeffs.is_empty() {
            return;
        }
        let old = std::mem::take(&mut self.coeffs);
        self.coeffs = old
            .into_iter()
            .map(|((c, d), k)| ((c + dc, d + dd), k))
            .collect();
    }

    /// Substitutes `y = 0` and renames `x` to `z`.
    pub fn project_y_zero(&self) -> UniPoly {
        let mut p = UniPoly::zero();
        for (&(c, d), k) in &self.coeffs {
            if d == 0 {
                add_term(&mut p.coeffs, c, k);
            }
        }
        p
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_xy(&self) -> BiPoly {
        BiPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(c, d), k)| ((d, c), k.clone()))
                .collect(),
        }
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(c1, d1), k1) in &self.coeffs {
            for (&(c2, d2), k2) in &rhs.coeffs {
                add_term(&mut out.coeffs, (c1 + c2, d1 + d2), &(k1 * k2));
            }
        }
        out
    }
}

impl Semiring for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        for (&key, k) in &rhs.coeffs {
            add_term(&mut self.coeffs, key, k);
        }
    }
    fn set_zero(&mut self) {
        self.coeffs.clear();
    }
}

impl BipartiteWeight for BiPoly {
    fn times_x(&mut self) {
        self.shift(1, 0);
    }
    fn times_y(&mut self) {
        self.shift(0, 1);
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.coeffs.iter().collect();
        terms.sort_by_key(|(&(c, d), _)| (c + d, Reverse(c)));
        for (i, (&(c, d), k)) in terms.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let monomial = [power('x', c), power('y', d)]
                .into_iter()
                .flatten()
                .collect::<Vec<_>>()
                .join("*");
            write_coefficient(f, k, &monomial)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct BiTerm {
    c: u32,
    d: u32,
    k: Natural,
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(
            self.coeffs
                .iter()
                .map(|(&(c, d), k)| BiTerm { c, d, k: k.clone() }),
        )
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<BiTerm>::deserialize(deserializer)?;
        let mut q = BiPoly::zero();
        for t in &terms {
            add_term(&mut q.coeffs, (t.c, t.d), &t.k);
        }
        Ok(q)
    }
}

/// A generating function of either enumeration mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GenFunc {
    Ivs(UniPoly),
    Bivs(BiPoly),
}

impl GenFunc {
    pub fn eval_ones(&self) -> Natural {
        match self {
            GenFunc::Ivs(p) => p.eval_ones(),
            GenFunc::Bivs(q) => q.eval_ones(),
        }
    }
}

impl fmt::Display for GenFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenFunc::Ivs(p) => p.fmt(f),
            GenFunc::Bivs(q) => q.fmt(f),
        }
    }
}
