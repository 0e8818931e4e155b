use crate::algebra::{merge_add, Field, Monomial, Polynomial, Term};
use crate::error::{Error, Result};

/// `(lcm/lm(f))·f/lc(f) − (lcm/lm(g))·g/lc(g)` under the polynomials' order.
pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.order() != g.order() {
        return Err(Error::OrderMismatch);
    }
    let field = f.field();
    let (fm, fc) = f.leading_term()?;
    let (gm, gc) = g.leading_term()?;
    let lcm = fm.lcm(&gm);
    let fi = field.inv(&fc).expect("nonzero");
    let gi = field.inv(&gc).expect("nonzero");
    let a = f.mul_term(&lcm.div(&fm).expect("lcm divisible"), &fi)?;
    let b = g.mul_term(&lcm.div(&gm).expect("lcm divisible"), &gi)?;
    a.checked_sub(&b)
}

/// Pre-digested divisor list: leading monomials and inverted leading
/// coefficients, searched first-match in list order.
pub(crate) struct Reducers<'a, F: Field> {
    polys: Vec<&'a Polynomial<F>>,
    lms: Vec<Monomial>,
    lc_invs: Vec<Option<F::Elem>>,
}

impl<'a, F: Field> Reducers<'a, F> {
    pub(crate) fn new(polys: impl IntoIterator<Item = &'a Polynomial<F>>) -> Self {
        let polys: Vec<&Polynomial<F>> = polys.into_iter().filter(|p| !p.is_zero()).collect();
        let lms = polys.iter().map(|p| p.leading_monomial().expect("nonzero")).collect();
        let lc_invs = polys
            .iter()
            .map(|p| {
                let lc = p.leading_coefficient().expect("nonzero");
                if p.field().is_one(lc) {
                    None
                } else {
                    Some(p.field().inv(lc).expect("nonzero"))
                }
            })
            .collect();
        Reducers { polys, lms, lc_invs }
    }

    #[inline]
    fn find(&self, m: &Monomial) -> Option<usize> {
        self.lms.iter().position(|lm| lm.divides(m))
    }

    /// Full reduction: the remainder has no term divisible by any leading
    /// monomial. With `tail_only`, the leading term of `f` is kept as is.
    pub(crate) fn reduce(&self, f: &Polynomial<F>, tail_only: bool) -> Polynomial<F> {
        let field = f.field();
        let order = f.order();
        let mut p: Vec<Term<F>> = f.terms().to_vec();
        let mut rem: Vec<Term<F>> = Vec::new();
        let mut start = 0;
        if tail_only && !p.is_empty() {
            rem.push(p[0].clone());
            start = 1;
        }
        while start < p.len() {
            let (m, c) = &p[start];
            match self.find(m) {
                Some(k) => {
                    let g = self.polys[k];
                    let q = m.div(&self.lms[k]).expect("divides");
                    let coef = match &self.lc_invs[k] {
                        None => field.neg(c),
                        Some(inv) => field.neg(&field.mul(c, inv)),
                    };
                    p = merge_add(field, order, &p[start + 1..], &g.terms()[1..], Some((&coef, &q)));
                    start = 0;
                }
                None => {
                    rem.push(p[start].clone());
                    start += 1;
                }
            }
        }
        Polynomial::from_sorted_terms(field.clone(), f.nvars(), order, rem)
    }
}

/// Remainder of `f` on division by `divisors`, always using the first
/// divisor (in list order) whose leading monomial divides the current term.
pub fn normal_form<F: Field>(f: &Polynomial<F>, divisors: &[Polynomial<F>]) -> Result<Polynomial<F>> {
    for g in divisors {
        if g.field() != f.field() {
            return Err(Error::CharacteristicMismatch {
                left: f.field().characteristic(),
                right: g.field().characteristic(),
            });
        }
        if g.nvars() != f.nvars() {
            return Err(Error::AmbientMismatch { left: f.nvars(), right: g.nvars() });
        }
        if g.order() != f.order() {
            return Err(Error::OrderMismatch);
        }
    }
    Ok(Reducers::new(divisors).reduce(f, false))
}
