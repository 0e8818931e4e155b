use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::error::{Error, Result};

pub type Term<F> = (Monomial, <F as Field>::Elem);

/// A sparse polynomial in `x_1 … x_n` over `F`.
///
/// Terms are stored with nonzero coefficients in strictly descending order
/// of the polynomial's monomial order, so equal polynomials have identical
/// term vectors and the leading term is `terms[0]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    field: F,
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<Term<F>>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Polynomial { field, nvars, order: MonomialOrder::Lex, terms: Vec::new() }
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Self {
        let mut p = Self::zero(field, nvars);
        if !p.field.is_zero(&c) {
            p.terms.push((Monomial::ONE, c));
        }
        p
    }

    pub fn one(field: F, nvars: usize) -> Self {
        let c = field.one();
        Self::constant(field, nvars, c)
    }

    /// The variable `x_index` (1-based).
    pub fn var(field: F, nvars: usize, index: usize) -> Result<Self> {
        if index == 0 || index > nvars {
            return Err(Error::VariableOutOfRange { index, nvars });
        }
        let c = field.one();
        let mut p = Self::zero(field, nvars);
        p.terms.push((Monomial::var(index - 1), c));
        Ok(p)
    }

    pub fn monomial(field: F, nvars: usize, m: Monomial, c: F::Elem) -> Result<Self> {
        if m.span() > nvars {
            return Err(Error::VariableOutOfRange { index: m.span(), nvars });
        }
        let mut p = Self::zero(field, nvars);
        if !p.field.is_zero(&c) {
            p.terms.push((m, c));
        }
        Ok(p)
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms(field: F, nvars: usize, terms: Vec<Term<F>>) -> Result<Self> {
        Self::from_terms_ordered(field, nvars, MonomialOrder::Lex, terms)
    }

    pub fn from_terms_ordered(field: F, nvars: usize, order: MonomialOrder, mut terms: Vec<Term<F>>) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        if let Some((m, _)) = terms.iter().find(|(m, _)| m.span() > nvars) {
            return Err(Error::VariableOutOfRange { index: m.span(), nvars });
        }
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Ok(Polynomial { field, nvars, order, terms: out })
    }

    /// Wraps terms already sorted descending under `order` with no zero or
    /// repeated monomials.
    pub(crate) fn from_sorted_terms(field: F, nvars: usize, order: MonomialOrder, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !field.is_zero(c)));
        Polynomial { field, nvars, order, terms }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Re-sorts the terms under another order.
    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        if order != self.order {
            self.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
            self.order = order;
        }
        self
    }

    /// Moves the polynomial into a ring with `nvars` variables. Fails if a
    /// variable in use would be dropped.
    pub fn with_nvars(mut self, nvars: usize) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        let span = self.terms.iter().map(|(m, _)| m.span()).max().unwrap_or(0);
        if span > nvars {
            return Err(Error::VariableOutOfRange { index: span, nvars });
        }
        self.nvars = nvars;
        Ok(self)
    }

    /// Leading monomial and coefficient under `ord`.
    pub fn leading_term_in(&self, ord: MonomialOrder) -> Result<(Monomial, F::Elem)> {
        if ord == self.order {
            return self.leading_term();
        }
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
            .map(|(m, c)| (*m, c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Leading term under the polynomial's own order.
    pub fn leading_term(&self) -> Result<(Monomial, F::Elem)> {
        self.terms.first().map(|(m, c)| (*m, c.clone())).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|(m, _)| *m)
    }

    pub fn leading_coefficient(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// `Ok(Some(d))` if every term has degree `d`, `Ok(None)` for zero, and an
    /// error if the polynomial is inhomogeneous.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let Some((m0, _)) = self.terms.first() else {
            return Ok(None);
        };
        let d = m0.degree();
        if self.terms.iter().all(|(m, _)| m.degree() == d) {
            Ok(Some(d))
        } else {
            Err(Error::Precondition("polynomial is not homogeneous".into()))
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::CharacteristicMismatch {
                left: self.field.characteristic(),
                right: other.field.characteristic(),
            });
        }
        if self.nvars != other.nvars {
            return Err(Error::AmbientMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    fn aligned<'a>(&self, other: &'a Self) -> std::borrow::Cow<'a, Self> {
        if other.order == self.order {
            std::borrow::Cow::Borrowed(other)
        } else {
            std::borrow::Cow::Owned(other.clone().with_order(self.order))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let other = self.aligned(other);
        let terms = merge_add(&self.field, self.order, &self.terms, &other.terms, None);
        Ok(Polynomial::from_sorted_terms(self.field.clone(), self.nvars, self.order, terms))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let other = self.aligned(other);
        let minus_one = self.field.neg(&self.field.one());
        let terms = merge_add(&self.field, self.order, &self.terms, &other.terms, Some((&minus_one, &Monomial::ONE)));
        Ok(Polynomial::from_sorted_terms(self.field.clone(), self.nvars, self.order, terms))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let other = self.aligned(other);
        let (small, large) = if self.len() <= other.len() { (self, other.as_ref()) } else { (other.as_ref(), self) };
        let mut acc: Vec<Term<F>> = Vec::new();
        for (m, c) in &small.terms {
            let scaled = scale_terms(&self.field, &large.terms, c, m)?;
            acc = merge_add(&self.field, self.order, &acc, &scaled, None);
        }
        Ok(Polynomial::from_sorted_terms(self.field.clone(), self.nvars, self.order, acc))
    }

    pub fn negate(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (*m, self.field.neg(c))).collect();
        Polynomial { terms, ..self.clone_shell() }
    }

    pub fn scalar_mul(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return self.clone_shell();
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, self.field.mul(a, c))).collect();
        Polynomial { terms, ..self.clone_shell() }
    }

    /// `c · m · self`.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Result<Self> {
        if self.field.is_zero(c) {
            return Ok(self.clone_shell());
        }
        if m.span() > self.nvars {
            return Err(Error::VariableOutOfRange { index: m.span(), nvars: self.nvars });
        }
        let terms = scale_terms(&self.field, &self.terms, c, m)?;
        Ok(Polynomial { terms, ..self.clone_shell() })
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Polynomial::one(self.field.clone(), self.nvars).with_order(self.order);
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) if self.field.is_one(lc) => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scalar_mul(&inv)
            }
        }
    }

    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.nvars {
            return Err(Error::AmbientMismatch { left: self.nvars, right: point.len() });
        }
        let f = &self.field;
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    t = f.mul(&t, &f.pow(x, e));
                }
            }
            acc = f.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Substitutes `x_index ↦ 0` (1-based index).
    pub fn substitute_zero(&self, index: usize) -> Result<Self> {
        if index == 0 || index > self.nvars {
            return Err(Error::VariableOutOfRange { index, nvars: self.nvars });
        }
        let terms = self.terms.iter().filter(|(m, _)| m.exponent(index - 1) == 0).cloned().collect();
        Ok(Polynomial { terms, ..self.clone_shell() })
    }

    /// Keeps the terms accepted by `keep`; the order is preserved.
    pub fn retain_terms(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| keep(m)).cloned().collect();
        Polynomial { terms, ..self.clone_shell() }
    }

    /// Whether variable `x_index` (1-based) occurs.
    pub fn involves_var(&self, index: usize) -> bool {
        index >= 1 && self.terms.iter().any(|(m, _)| m.exponent(index - 1) > 0)
    }

    fn clone_shell(&self) -> Self {
        Polynomial { field: self.field.clone(), nvars: self.nvars, order: self.order, terms: Vec::new() }
    }
}

/// `a + coeff·mono·b` for term lists sorted descending; `b_scale = None`
/// means plain addition.
pub(crate) fn merge_add<F: Field>(
    field: &F,
    order: MonomialOrder,
    a: &[Term<F>],
    b: &[Term<F>],
    b_scale: Option<(&F::Elem, &Monomial)>,
) -> Vec<Term<F>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let scale = |t: &Term<F>| -> Term<F> {
        match b_scale {
            None => t.clone(),
            Some((c, m)) => (t.0.mul(m).expect("exponent overflow in merge"), field.mul(&t.1, c)),
        }
    };
    let mut pending = b.first().map(scale);
    while let Some(bt) = pending.take() {
        if i == a.len() {
            out.push(bt);
            out.extend(b[j + 1..].iter().map(scale));
            return out;
        }
        match order.cmp(&a[i].0, &bt.0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
                pending = Some(bt);
            }
            Ordering::Less => {
                out.push(bt);
                j += 1;
                pending = b.get(j).map(scale);
            }
            Ordering::Equal => {
                let s = field.add(&a[i].1, &bt.1);
                if !field.is_zero(&s) {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
                pending = b.get(j).map(scale);
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out
}

fn scale_terms<F: Field>(field: &F, terms: &[Term<F>], c: &F::Elem, m: &Monomial) -> Result<Vec<Term<F>>> {
    terms.iter().map(|(tm, tc)| Ok((tm.mul(m)?, field.mul(tc, c)))).collect()
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = self.field.is_negative(c);
            let abs = if negative { self.field.neg(c) } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", self.field.format(&abs))?;
            } else if self.field.is_one(&abs) {
                write!(f, "{}", m.display())?;
            } else {
                write!(f, "{}*{}", self.field.format(&abs), m.display())?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{} vars, {:?}]({})", self.nvars, self.field.descriptor(), self)
    }
}

// Operator sugar; panics where the `checked_*` methods would return an error.
impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.negate()
    }
}
