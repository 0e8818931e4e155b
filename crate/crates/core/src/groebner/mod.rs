//! Ideals, Gröbner bases and elimination.

mod buchberger;
mod elimination;
mod monomial_ideal;
mod reduce;

use std::sync::OnceLock;

pub use buchberger::{buchberger, is_groebner_basis, CriterionFailure, GroebnerConfig, DEFAULT_DEGREE_CAP};
pub use elimination::{contract_to_subring, intersect, intersect_all, quotient_by_linear};
pub use monomial_ideal::MonomialIdeal;
pub use reduce::{normal_form, s_polynomial};

use crate::algebra::{Field, Monomial, MonomialOrder, Polynomial, MAX_VARS};
use crate::error::{Error, Result};

/// A Gröbner basis certified by Buchberger's criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field> {
    field: F,
    nvars: usize,
    order: MonomialOrder,
    elements: Vec<Polynomial<F>>,
    reduced: bool,
}

impl<F: Field> GroebnerBasis<F> {
    /// Computes the reduced Gröbner basis of `generators`.
    pub fn compute(field: F, nvars: usize, order: MonomialOrder, generators: &[Polynomial<F>], config: GroebnerConfig) -> Result<Self> {
        let elements = buchberger(generators, config)?;
        Ok(GroebnerBasis { field, nvars, order, elements, reduced: true })
    }

    /// Wraps an arbitrary list after checking Buchberger's criterion.
    pub fn certify(field: F, nvars: usize, order: MonomialOrder, elements: Vec<Polynomial<F>>) -> Result<Self> {
        let elements: Vec<Polynomial<F>> = elements.into_iter().filter(|p| !p.is_zero()).collect();
        if let Some(p) = elements.iter().find(|p| p.field() != &field || p.nvars() != nvars || p.order() != order) {
            return Err(Error::Precondition(format!("element {p} does not live in the basis ring")));
        }
        if let Err(fail) = is_groebner_basis(&elements)? {
            return Err(Error::NotGroebner { i: fail.i, j: fail.j, remainder: fail.remainder.to_string() });
        }
        let reduced = is_reduced(&elements);
        Ok(GroebnerBasis { field, nvars, order, elements, reduced })
    }

    pub(crate) fn from_reduced_unchecked(field: F, nvars: usize, order: MonomialOrder, elements: Vec<Polynomial<F>>) -> Self {
        GroebnerBasis { field, nvars, order, elements, reduced: true }
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial<F>> {
        self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
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

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|p| p.leading_monomial().expect("nonzero")).collect()
    }

    /// The reduced basis of the same ideal.
    pub fn to_reduced(&self) -> Self {
        if self.reduced {
            return self.clone();
        }
        let minimal = buchberger::minimalize(&self.elements);
        let elements = buchberger::interreduce(minimal);
        GroebnerBasis { elements, reduced: true, ..self.clone() }
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        let f = f.clone().with_order(self.order);
        normal_form(&f, &self.elements)
    }

    /// Ideal membership: the normal form vanishes.
    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|p| p.is_constant())
    }
}

fn is_reduced<F: Field>(elements: &[Polynomial<F>]) -> bool {
    let lms: Vec<Monomial> = elements.iter().map(|p| p.leading_monomial().unwrap()).collect();
    elements.iter().enumerate().all(|(k, p)| {
        p.field().is_one(p.leading_coefficient().unwrap())
            && lms
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .all(|(_, lm)| p.terms().iter().all(|(m, _)| !lm.divides(m)))
    })
}

/// `init(I)` from a Gröbner basis of `I`: the leading monomials, minimalized.
pub fn initial_ideal<F: Field>(gb: &GroebnerBasis<F>) -> MonomialIdeal {
    MonomialIdeal::new(gb.nvars, gb.leading_monomials()).expect("leading monomials live in the basis ring")
}

/// An ideal of `F[x_1, …, x_n]` given by generators, with a lazily computed
/// reduced Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    field: F,
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<Polynomial<F>>,
    gb: OnceLock<GroebnerBasis<F>>,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; the rest must share field and ambient.
    pub fn new(field: F, nvars: usize, generators: Vec<Polynomial<F>>) -> Result<Self> {
        Self::with_order(field, nvars, MonomialOrder::Lex, generators)
    }

    pub fn with_order(field: F, nvars: usize, order: MonomialOrder, generators: Vec<Polynomial<F>>) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.field() != &field {
                return Err(Error::CharacteristicMismatch { left: field.characteristic(), right: g.field().characteristic() });
            }
            if g.nvars() != nvars {
                return Err(Error::AmbientMismatch { left: nvars, right: g.nvars() });
            }
            if !g.is_zero() {
                gens.push(g.with_order(order));
            }
        }
        Ok(Ideal { field, nvars, order, generators: gens, gb: OnceLock::new() })
    }

    pub fn zero(field: F, nvars: usize) -> Self {
        Ideal { field, nvars, order: MonomialOrder::Lex, generators: Vec::new(), gb: OnceLock::new() }
    }

    /// Ideal generated by monomials.
    pub fn from_monomials(field: F, m: &MonomialIdeal) -> Self {
        let one = field.one();
        let gens = m
            .generators()
            .iter()
            .map(|mono| Polynomial::monomial(field.clone(), m.nvars(), *mono, one.clone()).expect("in range"))
            .collect();
        Ideal::new(field, m.nvars(), gens).expect("consistent generators")
    }

    /// Ideal whose generators are already a reduced Gröbner basis.
    pub(crate) fn from_reduced_basis(gb: GroebnerBasis<F>) -> Self {
        let ideal = Ideal {
            field: gb.field.clone(),
            nvars: gb.nvars,
            order: gb.order,
            generators: gb.elements.clone(),
            gb: OnceLock::new(),
        };
        let _ = ideal.gb.set(gb);
        ideal
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

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced Gröbner basis, computed on first use with the default
    /// configuration and cached.
    pub fn groebner_basis(&self) -> Result<&GroebnerBasis<F>> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = self.compute_groebner_basis(GroebnerConfig::default())?;
        let _ = self.gb.set(gb);
        Ok(self.gb.get().expect("just set"))
    }

    /// Uncached computation with an explicit configuration.
    pub fn compute_groebner_basis(&self, config: GroebnerConfig) -> Result<GroebnerBasis<F>> {
        GroebnerBasis::compute(self.field.clone(), self.nvars, self.order, &self.generators, config)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.groebner_basis()?.contains(f)
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Ideal<F>) -> Result<bool> {
        self.check_same_ring(other)?;
        let gb = other.groebner_basis()?;
        for g in &self.generators {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Double inclusion by mutual normal forms.
    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_same_ring(other)?;
        let gens = self.generators.iter().chain(&other.generators).cloned().collect();
        Ideal::with_order(self.field.clone(), self.nvars, self.order, gens)
    }

    pub fn initial_ideal(&self) -> Result<MonomialIdeal> {
        Ok(initial_ideal(self.groebner_basis()?))
    }

    /// The same ideal viewed in a ring with `nvars` variables.
    pub fn with_nvars(&self, nvars: usize) -> Result<Ideal<F>> {
        let gens = self.generators.iter().map(|g| g.clone().with_nvars(nvars)).collect::<Result<Vec<_>>>()?;
        Ideal::with_order(self.field.clone(), nvars, self.order, gens)
    }

    fn check_same_ring(&self, other: &Ideal<F>) -> Result<()> {
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
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, Rationals};

    fn ideal(gens: &[&str], n: usize) -> Ideal<Rationals> {
        let gens = gens.iter().map(|s| parse_polynomial(Rationals, s, n).unwrap()).collect();
        Ideal::new(Rationals, n, gens).unwrap()
    }

    #[test]
    fn initial_ideal_examples() {
        let i = ideal(&["x1 - x2"], 2);
        assert_eq!(i.initial_ideal().unwrap().generators(), &[Monomial::var(1)]);
        let v = ideal(&["(x1-x2)*(x1-x3)*(x2-x3)"], 3);
        assert_eq!(v.initial_ideal().unwrap().generators(), &[Monomial::from_exponents(&[0, 1, 2]).unwrap()]);
    }

    #[test]
    fn certify_rejects_non_basis() {
        let gens: Vec<_> = ["x1*x2 - 1", "x1^2"].iter().map(|s| parse_polynomial(Rationals, s, 2).unwrap()).collect();
        let err = GroebnerBasis::certify(Rationals, 2, MonomialOrder::Lex, gens).unwrap_err();
        assert!(matches!(err, Error::NotGroebner { i: 0, j: 1, .. }));
    }

    #[test]
    fn certify_then_reduce_matches_buchberger() {
        let i = ideal(&["x1*x2", "x1 + x2"], 2);
        let gens: Vec<_> = ["x1*x2", "x1 + x2", "x1^2", "x1^3 + x1^2"].iter().map(|s| parse_polynomial(Rationals, s, 2).unwrap()).collect();
        let gb = GroebnerBasis::certify(Rationals, 2, MonomialOrder::Lex, gens).unwrap();
        assert!(!gb.is_reduced());
        assert_eq!(gb.to_reduced().elements(), i.groebner_basis().unwrap().elements());
    }

    #[test]
    fn membership_and_equality() {
        let i = ideal(&["x1*x2", "x1 + x2"], 2);
        assert!(i.contains(&parse_polynomial(Rationals, "x1^2", 2).unwrap()).unwrap());
        assert!(!i.contains(&parse_polynomial(Rationals, "x1", 2).unwrap()).unwrap());
        let j = ideal(&["x2 + x1", "x2^2"], 2);
        assert!(i.equals(&j).unwrap());
        assert!(!i.equals(&ideal(&["x1", "x2"], 2)).unwrap());
    }

    #[test]
    fn degrevlex_extension_point() {
        let gens: Vec<_> = ["x1^2 - x2", "x1*x2 - x3"].iter().map(|s| parse_polynomial(Rationals, s, 3).unwrap()).collect();
        let lex = Ideal::new(Rationals, 3, gens.clone()).unwrap();
        let grevlex = Ideal::with_order(Rationals, 3, MonomialOrder::DegRevLex, gens).unwrap();
        let gb = grevlex.groebner_basis().unwrap();
        assert!(is_groebner_basis(gb.elements()).unwrap().is_ok());
        for g in gb.elements() {
            assert!(lex.contains(g).unwrap());
        }
        for g in lex.groebner_basis().unwrap().elements() {
            assert!(grevlex.contains(g).unwrap());
        }
    }
}
