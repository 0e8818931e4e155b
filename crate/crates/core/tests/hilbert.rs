use proptest::prelude::*;

use specht_core::algebra::{Monomial, Rationals};
use specht_core::combinatorics::Partition;
use specht_core::groebner::MonomialIdeal;
use specht_core::hilbert::{
    char_independence_check, closed_form_hook, closed_form_two_row, recursion_check_square, recursion_check_two_row,
    regularity_cm, series_from_monomial_ideal, series_of_quotient, ses_check_jdd, HilbertSeries, IdealRecipe,
    SeriesSource,
};
use specht_core::specht::{specht_ideal, SpechtIdealSpec};
use specht_core::Error;

fn specht_series(parts: &[usize]) -> HilbertSeries {
    let spec = SpechtIdealSpec::new(Partition::new(parts.to_vec()).unwrap());
    series_of_quotient(&specht_ideal(Rationals, &spec).unwrap()).unwrap()
}

#[test]
fn monomial_ideal_series() {
    let cube = MonomialIdeal::new(3, [Monomial::squarefree([0, 1, 2])]).unwrap();
    assert_eq!(series_from_monomial_ideal(&cube).to_string(), "(1+t+t^2)/(1-t)^2");
    let var = MonomialIdeal::new(2, [Monomial::var(1)]).unwrap();
    assert_eq!(series_from_monomial_ideal(&var).to_string(), "1/(1-t)");
    assert_eq!(series_from_monomial_ideal(&MonomialIdeal::zero(3)), HilbertSeries::polynomial_ring(3));
    let unit = MonomialIdeal::new(2, [Monomial::one()]).unwrap();
    assert!(series_from_monomial_ideal(&unit).is_zero());
    let init = specht_ideal(Rationals, &"2,2".parse::<SpechtIdealSpec>().unwrap()).unwrap().initial_ideal().unwrap();
    assert_eq!(series_from_monomial_ideal(&init).to_string(), "(1+2t+t^2)/(1-t)^2");
}

#[test]
fn quotient_series_examples() {
    assert_eq!(specht_series(&[3, 1]).to_string(), "1/(1-t)");
    assert_eq!(specht_series(&[1, 1, 1]).to_string(), "(1+t+t^2)/(1-t)^2");
    assert_eq!(specht_series(&[3, 2]).to_string(), "(1+3t+t^2)/(1-t)^2");
}

#[test]
fn closed_form_examples() {
    assert_eq!(closed_form_two_row(4, 2).unwrap().to_string(), "(1+2t+t^2)/(1-t)^2");
    assert_eq!(closed_form_two_row(5, 2).unwrap().to_string(), "(1+3t+t^2)/(1-t)^2");
    assert_eq!(closed_form_two_row(6, 3).unwrap().to_string(), "(1+3t+6t^2+5t^3)/(1-t)^3");
    assert_eq!(closed_form_two_row(4, 1).unwrap().to_string(), "1/(1-t)");
    assert!(closed_form_two_row(5, 3).is_err());
    assert!(closed_form_two_row(5, 0).is_err());
    assert_eq!(closed_form_hook(1).unwrap().to_string(), "(1+t+t^2)/(1-t)^2");
    assert_eq!(closed_form_hook(2).unwrap().to_string(), "(1+2t+3t^2+4t^3)/(1-t)^3");
    assert_eq!(closed_form_hook(3).unwrap().to_string(), "(1+3t+6t^2+10t^3+15t^4)/(1-t)^4");
    assert_eq!(closed_form_hook(3).unwrap(), specht_series(&[3, 3, 1]));
}

#[test]
fn recursions_and_sequence() {
    for (n, d) in [(5, 2), (6, 2), (7, 3)] {
        assert!(recursion_check_two_row(n, d, SeriesSource::ClosedForm).unwrap().holds);
        assert!(recursion_check_two_row(n, d, SeriesSource::Groebner).unwrap().holds);
    }
    assert!(recursion_check_two_row(6, 3, SeriesSource::ClosedForm).is_err());
    for d in 2..=4 {
        assert!(recursion_check_square(d, SeriesSource::ClosedForm).unwrap().holds);
    }
    let check = recursion_check_square(2, SeriesSource::Groebner).unwrap();
    assert!(check.holds);
    assert_eq!(check.lhs.to_string(), "(1+2t+t^2)/(1-t)^2");
    let rep = ses_check_jdd(Rationals, 2).unwrap();
    assert!(rep.additive && rep.regular);
    assert_eq!(rep.hook.to_string(), "(1+2t+3t^2+4t^3)/(1-t)^3");
    assert_eq!((&(&rep.jdd + &rep.image) - &rep.squarefree), rep.idd);
}

#[test]
fn characteristic_independence() {
    let jdd = char_independence_check(&IdealRecipe::Jdd(2), &[2, 3, 5]).unwrap();
    assert!(jdd.identical);
    assert_eq!(jdd.series.len(), 4);
    let sq = char_independence_check(&IdealRecipe::Specht(Partition::new(vec![3, 3]).unwrap()), &[2]).unwrap();
    assert!(sq.identical);
    let vandermonde = char_independence_check(&IdealRecipe::Specht(Partition::new(vec![1, 1, 1]).unwrap()), &[2, 3]).unwrap();
    assert!(vandermonde.identical);
}

#[test]
fn regularity() {
    assert_eq!(regularity_cm(&closed_form_two_row(5, 2).unwrap()).unwrap(), 2);
    assert_eq!(regularity_cm(&closed_form_hook(2).unwrap()).unwrap(), 3);
    assert_eq!(regularity_cm(&HilbertSeries::new(vec![1], 1)).unwrap(), 0);
    let raw = HilbertSeries { numerator: vec![1, -1], denom_exponent: 2 };
    assert!(matches!(regularity_cm(&raw), Err(Error::Precondition(_))));
    assert!(regularity_cm(&HilbertSeries::zero()).is_err());
}

#[test]
fn canonical_form() {
    let s = HilbertSeries::new(vec![1, 0, -1], 3);
    assert_eq!(s, HilbertSeries::new(vec![1, 1], 2));
    assert!(s.is_canonical());
    assert_eq!(HilbertSeries::new(vec![1, -1], 1), HilbertSeries::new(vec![1], 0));
    assert_eq!(HilbertSeries::new(vec![1, -2, 1], 1).to_string(), "1-t");
}

#[test]
fn dimension_of_specht_quotients() {
    for parts in [&[3, 2][..], &[4, 2], &[3, 3], &[2, 2, 1], &[3, 1, 1], &[2, 2, 2]] {
        let n: usize = parts.iter().sum();
        assert_eq!(specht_series(parts).dimension() as usize, n - parts[0], "{parts:?}");
    }
}

fn monomials_of_degree(n: usize, deg: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=deg)
        .flat_map(|first| {
            monomials_of_degree(n - 1, deg - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn monomial_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..4, n), 0..5).prop_map(move |gens| {
            MonomialIdeal::new(n, gens.iter().map(|e| Monomial::from_exponents(e).unwrap())).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_counts_standard_monomials(m in monomial_ideal()) {
        let s = series_from_monomial_ideal(&m);
        prop_assert!(s.is_canonical());
        let n = m.nvars();
        for k in 0..=10u32 {
            let count = monomials_of_degree(n, k)
                .iter()
                .filter(|e| !m.contains(&Monomial::from_exponents(e).unwrap()))
                .count() as i64;
            prop_assert_eq!(s.coefficient(k as usize), count, "degree {}", k);
        }
    }

    #[test]
    fn hilbert_function_is_eventually_polynomial(m in monomial_ideal()) {
        let s = series_from_monomial_ideal(&m);
        let hf = s.hilbert_function(30);
        prop_assert!(hf.values.iter().all(|&v| v >= 0));
        prop_assert_eq!(hf.dimension, s.dimension());
        // the dim-th difference vanishes past the polynomial range and the
        // (dim−1)-th one is the multiplicity
        let mut diffs = hf.values[hf.polynomial_from..].to_vec();
        for _ in 0..hf.dimension.saturating_sub(1) {
            diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
        }
        if hf.dimension == 0 {
            prop_assert!(diffs.iter().all(|&v| v == 0));
        } else {
            prop_assert!(diffs.iter().all(|&v| v == s.multiplicity()));
            prop_assert!(s.multiplicity() > 0);
        }
    }
}
