use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::group::{AbelianGroup, GroupElem};
use crate::error::RingError;

/// A finite integer combination of elements of an abelian group `A`, i.e. an
/// element of `Z[A]`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElem {
    group: Arc<AbelianGroup>,
    terms: BTreeMap<GroupElem, i64>,
}

impl GroupRingElem {
    pub fn zero(group: &Arc<AbelianGroup>) -> Self {
        Self { group: group.clone(), terms: BTreeMap::new() }
    }

    pub fn one(group: &Arc<AbelianGroup>) -> Self {
        Self::constant(group, 1)
    }

    pub fn constant(group: &Arc<AbelianGroup>, c: i64) -> Self {
        Self::monomial(group, group.identity(), c)
    }

    pub fn monomial(group: &Arc<AbelianGroup>, g: GroupElem, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(g, c);
        }
        Self { group: group.clone(), terms }
    }

    /// `t^k` in `Z[t^{±1}]`, or generator power in general.
    pub fn gen_pow(group: &Arc<AbelianGroup>, i: usize, k: i64) -> Self {
        Self::monomial(group, group.pow(&group.generator(i), k), 1)
    }

    pub fn from_terms(
        group: &Arc<AbelianGroup>,
        terms: impl IntoIterator<Item = (GroupElem, i64)>,
    ) -> Self {
        let mut out = Self::zero(group);
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    }

    fn add_term(&mut self, g: GroupElem, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(g) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn group(&self) -> &Arc<AbelianGroup> {
        &self.group
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElem, i64)> {
        self.terms.iter().map(|(g, &c)| (g, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, g: &GroupElem) -> i64 {
        self.terms.get(g).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&self.group.identity()) == 1
    }

    /// The integer value when the element is supported on the identity.
    pub fn as_scalar(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => {
                let (g, &c) = self.terms.iter().next().unwrap();
                self.group.is_identity(g).then_some(c)
            }
            _ => None,
        }
    }

    /// `(g, c)` when the element is a single term `c·g`.
    pub fn as_monomial(&self) -> Option<(&GroupElem, i64)> {
        (self.terms.len() == 1).then(|| {
            let (g, &c) = self.terms.iter().next().unwrap();
            (g, c)
        })
    }

    /// Inverse of a unit of the form `±g`.
    pub fn monomial_inverse(&self) -> Option<Self> {
        let (g, c) = self.as_monomial()?;
        (c == 1 || c == -1).then(|| Self::monomial(&self.group, self.group.inv(g), c))
    }

    fn check(&self, other: &Self) -> Result<(), RingError> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group == other.group {
            Ok(())
        } else {
            Err(RingError::GroupMismatch(self.group.to_string(), other.group.to_string()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let mut out = self.clone();
        for (g, &c) in &other.terms {
            out.add_term(g.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let mut acc: BTreeMap<GroupElem, i64> = BTreeMap::new();
        for (g, &a) in &self.terms {
            for (h, &b) in &other.terms {
                *acc.entry(self.group.op(g, h)).or_insert(0) += a * b;
            }
        }
        acc.retain(|_, c| *c != 0);
        Ok(Self { group: self.group.clone(), terms: acc })
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero(&self.group);
        }
        Self {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(g, &c)| (g.clone(), c * k)).collect(),
        }
    }

    /// Multiplication by the group element `h`.
    pub fn shift(&self, h: &GroupElem) -> Self {
        Self {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(g, &c)| (self.group.op(g, h), c)).collect(),
        }
    }

    /// Coefficient vector indexed by [`AbelianGroup::elements`] (finite groups only).
    pub fn coeff_vector(&self) -> Result<Vec<i64>, RingError> {
        let m = self.group.order().ok_or(RingError::InfiniteGroup)?;
        let mut v = vec![0; m];
        for (g, &c) in &self.terms {
            v[self.group.index_of(g).unwrap()] = c;
        }
        Ok(v)
    }

    pub fn parse(group: &Arc<AbelianGroup>, s: &str) -> Result<Self, RingError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(RingError::Parse("empty ring element".into()));
        }
        // split into signed terms; a '-' directly after '^' belongs to the exponent
        let mut pieces: Vec<(i64, String)> = vec![];
        let mut cur = String::new();
        let mut sign = 1i64;
        let mut prev = ' ';
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && prev != '^' && prev != '(' {
                if !cur.trim().is_empty() {
                    pieces.push((sign, std::mem::take(&mut cur)));
                    sign = 1;
                }
                if ch == '-' {
                    sign = -sign;
                }
            } else {
                cur.push(ch);
            }
            if !ch.is_whitespace() {
                prev = ch;
            }
        }
        if cur.trim().is_empty() {
            return Err(RingError::Parse(format!("dangling operator in `{s}`")));
        }
        pieces.push((sign, cur));

        let mut out = Self::zero(group);
        for (sign, term) in pieces {
            let (c, g) = parse_term(group, term.trim())?;
            out.add_term(g, sign * c);
        }
        Ok(out)
    }
}

fn parse_term(group: &AbelianGroup, term: &str) -> Result<(i64, GroupElem), RingError> {
    let bad = || RingError::Parse(format!("bad term `{term}`"));
    let mut coeff = 1i64;
    let mut vars: Vec<&str> = vec![];
    for factor in term.split('*').map(str::trim) {
        if factor.is_empty() {
            return Err(bad());
        }
        let digits = factor.chars().take_while(|c| c.is_ascii_digit()).count();
        if digits > 0 {
            coeff *= factor[..digits].parse::<i64>().map_err(|_| bad())?;
            let rest = factor[digits..].trim();
            if !rest.is_empty() {
                vars.push(rest);
            }
        } else {
            vars.push(factor);
        }
    }
    let g = if vars.is_empty() { group.identity() } else { group.parse_elem(&vars.join("*"))? };
    Ok((coeff, g))
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, &c)) in self.terms.iter().rev().enumerate() {
            let mono = self.group.format_monomial(g);
            let a = c.abs();
            let body = match (mono.is_empty(), a) {
                (true, _) => a.to_string(),
                (false, 1) => mono,
                (false, _) => format!("{a}*{mono}"),
            };
            match (i, c < 0) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl Add for &GroupRingElem {
    type Output = GroupRingElem;
    fn add(self, rhs: Self) -> GroupRingElem {
        self.try_add(rhs).expect("group ring mismatch")
    }
}

impl Sub for &GroupRingElem {
    type Output = GroupRingElem;
    fn sub(self, rhs: Self) -> GroupRingElem {
        self.try_sub(rhs).expect("group ring mismatch")
    }
}

impl Mul for &GroupRingElem {
    type Output = GroupRingElem;
    fn mul(self, rhs: Self) -> GroupRingElem {
        self.try_mul(rhs).expect("group ring mismatch")
    }
}

impl Neg for &GroupRingElem {
    type Output = GroupRingElem;
    fn neg(self) -> GroupRingElem {
        self.scale(-1)
    }
}

impl Neg for GroupRingElem {
    type Output = GroupRingElem;
    fn neg(self) -> GroupRingElem {
        self.scale(-1)
    }
}
