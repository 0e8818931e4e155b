use std::fmt;

use crate::algebra::{Monomial, MonomialOrder, MAX_VARS};
use crate::error::{Error, Result};

/// A monomial ideal given by its minimal generators, stored in descending
/// lex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal, discarding generators divisible by others.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(m) = gens.iter().find(|m| m.span() > nvars) {
            return Err(Error::VariableOutOfRange { index: m.span(), nvars });
        }
        Ok(MonomialIdeal { nvars, gens: minimal_generators(gens) })
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|m| m.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.nvars != other.nvars {
            return Err(Error::AmbientMismatch { left: self.nvars, right: other.nvars });
        }
        MonomialIdeal::new(self.nvars, self.gens.iter().chain(&other.gens).copied())
    }

    /// `(M : m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.div(&g.gcd(m)).expect("gcd divides"));
        MonomialIdeal { nvars: self.nvars, gens: minimal_generators(gens.collect()) }
    }

    /// `M + (x_i)` for a 0-based variable index.
    pub fn add_var(&self, i: usize) -> MonomialIdeal {
        let x = Monomial::var(i);
        let mut gens: Vec<Monomial> = self.gens.iter().filter(|g| g.exponent(i) == 0).copied().collect();
        gens.push(x);
        MonomialIdeal { nvars: self.nvars, gens: minimal_generators(gens) }
    }
}

fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), std::cmp::Reverse(m.packed())));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort_by(|a, b| MonomialOrder::Lex.cmp(b, a));
    kept
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, m) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", m.display())?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn minimalization() {
        let m = MonomialIdeal::new(3, [mono(&[1, 1, 0]), mono(&[1, 0, 0]), mono(&[2, 1, 1]), mono(&[0, 0, 2])]).unwrap();
        assert_eq!(m.generators(), &[mono(&[0, 0, 2]), mono(&[1, 0, 0])]);
        assert!(m.contains(&mono(&[1, 5, 0])));
        assert!(!m.contains(&mono(&[0, 5, 1])));
    }

    #[test]
    fn colon_and_sum() {
        let m = MonomialIdeal::new(3, [mono(&[1, 1, 0]), mono(&[0, 1, 1])]).unwrap();
        assert_eq!(m.colon(&Monomial::var(1)).generators(), &[mono(&[0, 0, 1]), mono(&[1, 0, 0])]);
        assert_eq!(m.add_var(1).generators(), &[mono(&[0, 1, 0])]);
        assert!(MonomialIdeal::new(2, [mono(&[0, 0, 1])]).is_err());
    }
}
