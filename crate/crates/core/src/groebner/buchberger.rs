//! Buchberger's algorithm with the Gebauer–Möller pair criteria.
//!
//! Pairs are processed by the normal strategy: every round takes all pairs
//! whose lcm has the current minimal degree. The S-polynomials of a round
//! are reduced against a frozen snapshot of the basis (optionally in
//! parallel); insertion into the basis is sequential in a fixed order, so
//! the parallel and sequential runs are identical step for step.

use std::cmp::Ordering;

use rayon::prelude::*;

use super::reduce::{s_polynomial, Reducers};
use crate::algebra::{Field, Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};

pub const DEFAULT_DEGREE_CAP: u32 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Abort when a basis candidate or S-pair lcm exceeds this degree.
    pub degree_cap: u32,
    /// Reduce the S-polynomials of a round on the rayon pool.
    pub parallel: bool,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { degree_cap: DEFAULT_DEGREE_CAP, parallel: true }
    }
}

impl GroebnerConfig {
    pub fn sequential() -> Self {
        GroebnerConfig { parallel: false, ..Default::default() }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<F: Field> {
    order: MonomialOrder,
    basis: Vec<Polynomial<F>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    cap: u32,
}

impl<F: Field> State<F> {
    fn lm(&self, k: usize) -> Monomial {
        self.basis[k].leading_monomial().expect("basis elements are nonzero")
    }

    fn active_polys(&self) -> impl Iterator<Item = &Polynomial<F>> {
        self.basis.iter().zip(&self.active).filter(|(_, a)| **a).map(|(p, _)| p)
    }

    fn check_degree(&self, p: &Polynomial<F>) -> Result<()> {
        match p.total_degree() {
            Some(d) if d > self.cap => Err(Error::DegreeCap { degree: d, cap: self.cap }),
            _ => Ok(()),
        }
    }

    /// Adds a monic, fully reduced `h` and updates the pair set.
    fn insert(&mut self, h: Polynomial<F>) {
        let hm = h.leading_monomial().expect("nonzero");
        let k = self.basis.len();
        let olds: Vec<usize> = (0..k).filter(|&g| self.active[g]).collect();

        // new pairs, with the chain criterion applied among themselves
        let candidates: Vec<(usize, Monomial)> = olds.iter().map(|&g| (g, hm.lcm(&self.lm(g)))).collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, &(g1, l1)) in candidates.iter().enumerate() {
            let coprime = hm.is_coprime(&self.lm(g1));
            let dominated_later = candidates[idx + 1..].iter().any(|(_, l2)| l2.divides(&l1));
            let dominated_kept = kept.iter().any(|(_, l2)| l2.divides(&l1));
            if coprime || (!dominated_later && !dominated_kept) {
                kept.push((g1, l1));
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !hm.is_coprime(&self.lm(*g)))
            .map(|(g, lcm)| Pair { i: g, j: k, lcm })
            .collect();

        // prune old pairs made redundant by h
        let lms: Vec<Monomial> = (0..k).map(|g| self.lm(g)).collect();
        self.pairs.retain(|p| {
            !(hm.divides(&p.lcm) && lms[p.i].lcm(&hm) != p.lcm && hm.lcm(&lms[p.j]) != p.lcm)
        });
        self.pairs.extend(fresh);

        for g in olds {
            if hm.divides(&lms[g]) {
                self.active[g] = false;
            }
        }
        self.basis.push(h);
        self.active.push(true);
    }

    fn take_round(&mut self) -> Vec<Pair> {
        let Some(min_deg) = self.pairs.iter().map(|p| p.lcm.degree()).min() else {
            return Vec::new();
        };
        let (mut round, rest): (Vec<Pair>, Vec<Pair>) = self.pairs.drain(..).partition(|p| p.lcm.degree() == min_deg);
        self.pairs = rest;
        let order = self.order;
        round.sort_by(|a, b| match order.cmp(&a.lcm, &b.lcm) {
            Ordering::Equal => (a.i, a.j).cmp(&(b.i, b.j)),
            o => o,
        });
        round
    }
}

/// Runs Buchberger's algorithm and returns the reduced Gröbner basis,
/// sorted by descending leading monomial. All inputs must share field,
/// ambient and order; zero inputs are ignored.
pub fn buchberger<F: Field>(generators: &[Polynomial<F>], config: GroebnerConfig) -> Result<Vec<Polynomial<F>>> {
    let gens: Vec<&Polynomial<F>> = generators.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let (field, nvars, order) = (first.field().clone(), first.nvars(), first.order());
    for g in &gens {
        if g.field() != &field {
            return Err(Error::CharacteristicMismatch { left: field.characteristic(), right: g.field().characteristic() });
        }
        if g.nvars() != nvars {
            return Err(Error::AmbientMismatch { left: nvars, right: g.nvars() });
        }
        if g.order() != order {
            return Err(Error::OrderMismatch);
        }
    }

    let mut state = State { order, basis: Vec::new(), active: Vec::new(), pairs: Vec::new(), cap: config.degree_cap };

    let mut inputs: Vec<&Polynomial<F>> = gens;
    inputs.sort_by(|a, b| order.cmp(&a.leading_monomial().unwrap(), &b.leading_monomial().unwrap()));
    for g in inputs {
        state.check_degree(g)?;
        let r = Reducers::new(state.active_polys()).reduce(g, false);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(vec![Polynomial::one(field, nvars).with_order(order)]);
        }
        state.insert(r.monic());
    }

    loop {
        let round = state.take_round();
        if round.is_empty() {
            break;
        }
        if let Some(p) = round.iter().find(|p| p.lcm.degree() > state.cap) {
            return Err(Error::DegreeCap { degree: p.lcm.degree(), cap: state.cap });
        }
        let reduced: Vec<Polynomial<F>> = {
            let reducers = Reducers::new(state.active_polys());
            let work = |p: &Pair| -> Result<Polynomial<F>> {
                let s = s_polynomial(&state.basis[p.i], &state.basis[p.j])?;
                Ok(reducers.reduce(&s, false))
            };
            if config.parallel && round.len() > 1 {
                round.par_iter().map(work).collect::<Result<_>>()?
            } else {
                round.iter().map(work).collect::<Result<_>>()?
            }
        };
        for r in reduced {
            if r.is_zero() {
                continue;
            }
            let r = Reducers::new(state.active_polys()).reduce(&r, false);
            if r.is_zero() {
                continue;
            }
            if r.is_constant() {
                return Ok(vec![Polynomial::one(field, nvars).with_order(order)]);
            }
            state.check_degree(&r)?;
            state.insert(r.monic());
        }
    }

    let minimal: Vec<Polynomial<F>> = state.active_polys().cloned().collect();
    Ok(interreduce(minimal))
}

/// Turns a minimal Gröbner basis (pairwise non-dividing leading monomials)
/// into the reduced one.
pub(crate) fn interreduce<F: Field>(mut basis: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let order = match basis.first() {
        Some(p) => p.order(),
        None => return basis,
    };
    basis.sort_by(|a, b| order.cmp(&b.leading_monomial().unwrap(), &a.leading_monomial().unwrap()));
    let mut out = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others = basis.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p);
        let r = Reducers::new(others).reduce(&basis[k], true);
        out.push(r.monic());
    }
    out
}

/// Minimal generators of the leading-monomial ideal, and the polynomials
/// carrying them, from an arbitrary Gröbner basis.
pub(crate) fn minimalize<F: Field>(basis: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut sorted: Vec<&Polynomial<F>> = basis.iter().filter(|p| !p.is_zero()).collect();
    sorted.sort_by_key(|p| p.leading_monomial().unwrap().degree());
    let mut kept: Vec<&Polynomial<F>> = Vec::new();
    for p in sorted {
        let m = p.leading_monomial().unwrap();
        if !kept.iter().any(|k| k.leading_monomial().unwrap().divides(&m)) {
            kept.push(p);
        }
    }
    kept.into_iter().cloned().collect()
}

/// Certificate returned when some S-polynomial does not reduce to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionFailure<F: Field> {
    pub i: usize,
    pub j: usize,
    pub remainder: Polynomial<F>,
}

/// Buchberger's criterion: every S-polynomial of two elements reduces to 0
/// modulo the set (divisors taken in list order). Checks all pairs.
pub fn is_groebner_basis<F: Field>(elements: &[Polynomial<F>]) -> Result<std::result::Result<(), CriterionFailure<F>>> {
    if elements.iter().any(|p| p.is_zero()) {
        return Err(Error::ZeroPolynomial);
    }
    if let Some(first) = elements.first() {
        for p in elements {
            if p.field() != first.field() {
                return Err(Error::CharacteristicMismatch {
                    left: first.field().characteristic(),
                    right: p.field().characteristic(),
                });
            }
            if p.nvars() != first.nvars() {
                return Err(Error::AmbientMismatch { left: first.nvars(), right: p.nvars() });
            }
            if p.order() != first.order() {
                return Err(Error::OrderMismatch);
            }
        }
    }
    let reducers = Reducers::new(elements);
    let pairs: Vec<(usize, usize)> =
        (0..elements.len()).flat_map(|i| (i + 1..elements.len()).map(move |j| (i, j))).collect();
    let failure = pairs
        .par_iter()
        .map(|&(i, j)| -> Result<Option<CriterionFailure<F>>> {
            let s = s_polynomial(&elements[i], &elements[j])?;
            let r = reducers.reduce(&s, false);
            Ok(if r.is_zero() { None } else { Some(CriterionFailure { i, j, remainder: r }) })
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(match failure {
        None => Ok(()),
        Some(f) => Err(f),
    })
}
