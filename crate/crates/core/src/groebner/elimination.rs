use crate::algebra::{Field, MonomialOrder, Polynomial, MAX_VARS};
use crate::error::{Error, Result};

use super::{GroebnerBasis, Ideal};

/// Lex Gröbner basis of `ideal`, reusing the cache when the ideal is lex.
fn lex_basis<F: Field>(ideal: &Ideal<F>) -> Result<GroebnerBasis<F>> {
    if ideal.order() == MonomialOrder::Lex {
        return Ok(ideal.groebner_basis()?.clone());
    }
    let lex = Ideal::new(ideal.field().clone(), ideal.nvars(), ideal.generators().to_vec())?;
    lex.compute_groebner_basis(Default::default())
}

/// Keeps the elements of a reduced lex basis that live in `x_1..x_k`. The
/// survivors are again a reduced lex basis, of the elimination ideal.
fn eliminate<F: Field>(gb: &GroebnerBasis<F>, k: usize) -> Result<Ideal<F>> {
    let kept = gb
        .elements()
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.span() <= k))
        .map(|p| p.clone().with_nvars(k))
        .collect::<Result<Vec<_>>>()?;
    let gb = GroebnerBasis::from_reduced_unchecked(gb.field().clone(), k, MonomialOrder::Lex, kept);
    Ok(Ideal::from_reduced_basis(gb))
}

/// `I ∩ J` via `t·I + (1 − t)·J` with `t = x_{n+1}`; under the default lex
/// order `t` is the largest variable, so it is eliminated first.
pub fn intersect<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    if i.field() != j.field() {
        return Err(Error::CharacteristicMismatch { left: i.field().characteristic(), right: j.field().characteristic() });
    }
    if i.nvars() != j.nvars() {
        return Err(Error::AmbientMismatch { left: i.nvars(), right: j.nvars() });
    }
    let n = i.nvars();
    let field = i.field().clone();
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(field, n));
    }
    if n + 1 > MAX_VARS {
        return Err(Error::TooManyVariables(n + 1));
    }
    let t = Polynomial::var(field.clone(), n + 1, n + 1)?;
    let one_minus_t = Polynomial::one(field.clone(), n + 1).checked_sub(&t)?;
    let mut gens = Vec::with_capacity(i.generators().len() + j.generators().len());
    for f in i.generators() {
        gens.push(t.checked_mul(&f.clone().with_order(MonomialOrder::Lex).with_nvars(n + 1)?)?);
    }
    for g in j.generators() {
        gens.push(one_minus_t.checked_mul(&g.clone().with_order(MonomialOrder::Lex).with_nvars(n + 1)?)?);
    }
    let lifted = Ideal::new(field, n + 1, gens)?;
    let result = eliminate(lifted.groebner_basis()?, n)?;
    for g in result.generators() {
        if !i.contains(g)? || !j.contains(g)? {
            return Err(Error::Internal(format!("intersection generator {g} escapes an operand")));
        }
    }
    Ok(result)
}

/// Iterated intersection, left to right.
pub fn intersect_all<F: Field>(ideals: &[Ideal<F>]) -> Result<Ideal<F>> {
    let (first, rest) = ideals.split_first().ok_or(Error::EmptyInput("no ideals to intersect"))?;
    rest.iter().try_fold(first.clone(), |acc, next| intersect(&acc, next))
}

/// `I ∩ K[x_1, …, x_k]` as an ideal of the smaller ring. `keep` lists
/// 1-based variable indices and must be `{1, …, k}`.
pub fn contract_to_subring<F: Field>(ideal: &Ideal<F>, keep: &[usize]) -> Result<Ideal<F>> {
    let mut sorted = keep.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.iter().enumerate().any(|(pos, &v)| v != pos + 1) || sorted.len() > ideal.nvars() {
        return Err(Error::Precondition(format!("kept variables {keep:?} are not an initial segment x1..xk")));
    }
    eliminate(&lex_basis(ideal)?, sorted.len())
}

/// Image of `I` under `x_n ↦ 0`, as an ideal of `K[x_1, …, x_{n−1}]`.
/// `var` is 1-based and must be the last variable.
pub fn quotient_by_linear<F: Field>(ideal: &Ideal<F>, var: usize) -> Result<Ideal<F>> {
    let n = ideal.nvars();
    if var != n || n == 0 {
        return Err(Error::Precondition(format!("only the last variable x{n} can be set to zero, got x{var}")));
    }
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.substitute_zero(var)?.with_nvars(n - 1))
        .collect::<Result<Vec<_>>>()?;
    Ideal::with_order(ideal.field().clone(), n - 1, ideal.order(), gens)
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
    fn intersect_examples() {
        let r = intersect(&ideal(&["x1"], 2), &ideal(&["x2"], 2)).unwrap();
        assert!(r.equals(&ideal(&["x1*x2"], 2)).unwrap());
        let r = intersect(&ideal(&["x1 - x2"], 3), &ideal(&["x1 - x3"], 3)).unwrap();
        assert!(r.equals(&ideal(&["(x1-x2)*(x1-x3)"], 3)).unwrap());
        assert_eq!(r.nvars(), 3);
    }

    #[test]
    fn intersect_with_zero_is_zero() {
        let r = intersect(&ideal(&["x1"], 2), &Ideal::zero(Rationals, 2)).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn contraction() {
        let r = contract_to_subring(&ideal(&["x4"], 4), &[1, 2, 3]).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.nvars(), 3);
        let r = contract_to_subring(&ideal(&["x3 - x1", "x3 - x2"], 3), &[1, 2]).unwrap();
        assert!(r.equals(&ideal(&["x2 - x1"], 2)).unwrap());
        assert!(contract_to_subring(&ideal(&["x1"], 3), &[1, 3]).is_err());
    }

    #[test]
    fn image_mod_last_variable() {
        let r = quotient_by_linear(&ideal(&["x3"], 3), 3).unwrap();
        assert!(r.is_zero());
        let r = quotient_by_linear(&ideal(&["x1*x3 + x2^2", "x3 - x1"], 3), 3).unwrap();
        assert!(r.equals(&ideal(&["x2^2", "x1"], 2)).unwrap());
        assert!(quotient_by_linear(&ideal(&["x1"], 3), 2).is_err());
    }
}
