use proptest::prelude::*;

use specht_core::algebra::{parse_polynomial, Monomial, PrimeField, Rationals};
use specht_core::combinatorics::{enumerate_partitions, enumerate_standard_tableaux, standard_letters, Partition, YoungTableau};
use specht_core::hilbert::series_of_quotient;
use specht_core::specht::{
    component_set_size, initial_monomial_two_row, prime_component, radical_decomposition, specht_generators,
    specht_ideal, specht_polynomial, squarefree_monomial_ideal, syt_basis_rank, trimmed_form, vanishing_check, Family,
    SpechtIdealSpec,
};
use specht_core::{Error, QPolynomial};

fn q(text: &str, n: usize) -> QPolynomial {
    parse_polynomial(Rationals, text, n).unwrap()
}

fn spec(parts: &[usize]) -> SpechtIdealSpec {
    SpechtIdealSpec::new(Partition::new(parts.to_vec()).unwrap())
}

fn tableau(rows: &[&[u32]]) -> YoungTableau {
    YoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

#[test]
fn families() {
    assert_eq!(spec(&[3, 2]).family, Family::TwoRow { d: 2 });
    assert_eq!(spec(&[2, 2, 1]).family, Family::HookTwoRow { d: 2 });
    assert_eq!(spec(&[3, 1, 1]).family, Family::ColumnHook { d: 2 });
    assert_eq!(spec(&[3, 2, 1]).family, Family::General);
    assert_eq!("4,2".parse::<SpechtIdealSpec>().unwrap().n, 6);
    assert!(SpechtIdealSpec::with_n(Partition::new(vec![2, 2]).unwrap(), 5).is_err());
}

#[test]
fn specht_polynomial_examples() {
    let t = tableau(&[&[3, 5, 1, 7], &[6, 2], &[4]]);
    let f = specht_polynomial(Rationals, &t, 7).unwrap();
    assert_eq!(f, q("(x3-x6)*(x3-x4)*(x6-x4)*(x5-x2)", 7));
    assert_eq!(specht_polynomial(Rationals, &tableau(&[&[2, 1, 3]]), 3).unwrap(), q("1", 3));
    assert_eq!(specht_polynomial(Rationals, &tableau(&[&[1, 3], &[2, 4]]), 4).unwrap(), q("(x1-x2)*(x3-x4)", 4));
    let mut pt: Vec<_> = (1..=7).map(|v| num_rational::BigRational::from_integer(v.into())).collect();
    pt[2] = pt[5].clone();
    pt[3] = pt[5].clone();
    assert!(f.evaluate(&pt).unwrap() == num_rational::BigRational::from_integer(0.into()));
    assert!(specht_polynomial(Rationals, &t, 6).is_err());
}

#[test]
fn generators_of_small_shapes() {
    let gens: Vec<_> = specht_generators(Rationals, &spec(&[2, 1])).unwrap().into_iter().map(|(_, f)| f).collect();
    assert_eq!(gens.len(), 2);
    for target in [q("x1 - x2", 3), q("x1 - x3", 3)] {
        assert!(gens.iter().any(|g| *g == target || *g == target.negate()));
    }
    let one = specht_generators(Rationals, &spec(&[1, 1, 1])).unwrap();
    assert_eq!(one.len(), 1);
    assert_eq!(one[0].1, q("(x1-x2)*(x1-x3)*(x2-x3)", 3));
    let sq = specht_generators(Rationals, &spec(&[2, 2])).unwrap();
    assert_eq!(sq.len(), 2);
    assert!(sq.iter().all(|(_, f)| f.homogeneous_degree().unwrap() == Some(2)));
}

#[test]
fn two_row_initial_monomials() {
    assert_eq!(initial_monomial_two_row(&tableau(&[&[1, 3], &[2, 4]])).unwrap(), Monomial::squarefree([1, 3]));
    assert_eq!(initial_monomial_two_row(&tableau(&[&[1, 2], &[3, 4]])).unwrap(), Monomial::squarefree([2, 3]));
    assert_eq!(initial_monomial_two_row(&tableau(&[&[1, 2, 3]])).unwrap(), Monomial::one());
    assert!(matches!(initial_monomial_two_row(&tableau(&[&[1, 2], &[3], &[4]])), Err(Error::Shape(_))));
}

#[test]
fn trimmed_forms() {
    let f = q("x1*x4^2 - 2*x2*x3^2 + 3*x1*x3*x4 - x2*x3*x4", 4);
    assert_eq!(trimmed_form(&f, 2).to_string(), "x1*x4^2 - 2*x2*x3^2");
    let g = q("x1*x2 - x3^2*x4 + 5", 4);
    assert_eq!(trimmed_form(&g, 2), g);
    let h = q("x1*(x1-x2)*(x3-x4)", 4);
    assert_eq!(trimmed_form(&h, 2), q("x1^2*x3 - x1^2*x4", 4));
}

#[test]
fn squarefree_ideals() {
    assert_eq!(squarefree_monomial_ideal(3, 3).unwrap().generators(), &[Monomial::squarefree([0, 1, 2])]);
    assert_eq!(squarefree_monomial_ideal(4, 3).unwrap().generators().len(), 4);
}

#[test]
fn prime_components() {
    assert!(prime_component(Rationals, 4, &[1]).unwrap().is_zero());
    let p = prime_component(Rationals, 3, &[1, 2]).unwrap();
    assert!(p.equals(&specht_core::Ideal::new(Rationals, 3, vec![q("x1 - x2", 3)]).unwrap()).unwrap());
    let p = prime_component(Rationals, 4, &[1, 2, 3]).unwrap();
    assert_eq!(series_of_quotient(&p).unwrap().dimension(), 2);
}

#[test]
fn component_counts() {
    let comps = radical_decomposition(Rationals, &spec(&[2, 2])).unwrap();
    assert_eq!(comps.len(), 4);
    assert!(comps.iter().all(|c| c.set.len() == 3));
    let comps = radical_decomposition(Rationals, &spec(&[2, 2, 1])).unwrap();
    assert_eq!(comps.len(), 10);
    assert!(comps.iter().all(|c| c.set.len() == 3));
    let comps = radical_decomposition(Rationals, &spec(&[4, 1])).unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0].set, vec![1, 2, 3, 4, 5]);
    assert!(matches!(component_set_size(&spec(&[3, 2, 1])), Err(Error::UnsupportedFamily(_))));
}

#[test]
fn vanishing_examples() {
    let fp = PrimeField::new(101).unwrap();
    let gens = specht_generators(fp, &spec(&[2, 2])).unwrap();
    assert!(gens.iter().all(|(_, f)| f.evaluate(&[7, 7, 7, 40]).unwrap() == 0));
    assert!(gens.iter().any(|(_, f)| f.evaluate(&[0, 1, 2, 3]).unwrap() != 0));
    let line = specht_generators(fp, &spec(&[3, 1])).unwrap();
    assert!(line.iter().all(|(_, f)| f.evaluate(&[9, 9, 9, 9]).unwrap() == 0));
    let rep = vanishing_check(&spec(&[3, 2]), 50, 1).unwrap();
    assert!(rep.passed);
    assert!(vanishing_check(&spec(&[4]), 10, 1).is_err());
}

#[test]
fn ranks() {
    assert_eq!(syt_basis_rank(Rationals, &Partition::new(vec![2, 2]).unwrap()).unwrap().rank, 2);
    assert_eq!(syt_basis_rank(Rationals, &Partition::new(vec![1, 1, 1]).unwrap()).unwrap().rank, 1);
    let hook = syt_basis_rank(Rationals, &Partition::new(vec![2, 2, 1]).unwrap()).unwrap();
    assert_eq!(hook.rank, 5);
    assert!(hook.passed());
}

#[test]
fn initial_terms_of_two_row_tableaux() {
    for n in 2..=8 {
        for d in 1..=n / 2 {
            let lambda = Partition::new(vec![n - d, d]).unwrap();
            let mut seen = std::collections::HashSet::new();
            for t in enumerate_standard_tableaux(&lambda, &standard_letters(n)).unwrap() {
                let m = initial_monomial_two_row(&t).unwrap();
                let f = specht_polynomial(Rationals, &t, n).unwrap();
                assert_eq!(f.leading_monomial(), Some(m), "{t}");
                assert!(seen.insert(m), "{t} repeats an initial monomial");
            }
        }
    }
}

#[test]
fn dimension_is_n_minus_first_part() {
    for n in 2..=6 {
        for lambda in enumerate_partitions(n).unwrap() {
            if lambda.len() == 1 {
                continue;
            }
            let s = SpechtIdealSpec::new(lambda);
            let series = series_of_quotient(&specht_ideal(Rationals, &s).unwrap()).unwrap();
            assert_eq!(series.dimension() as usize, s.expected_dimension(), "{}", s.lambda);
        }
    }
}

fn random_tableau() -> impl Strategy<Value = YoungTableau> {
    (2usize..=6)
        .prop_flat_map(|n| {
            let shapes = enumerate_partitions(n).unwrap();
            (prop::sample::select(shapes), Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        })
        .prop_map(|(shape, letters)| {
            let mut it = letters.into_iter();
            let rows = shape.parts().iter().map(|&len| it.by_ref().take(len).collect()).collect();
            YoungTableau::new(rows).unwrap()
        })
}

proptest! {
    #[test]
    fn column_swap_negates(t in random_tableau(), pick in 0usize..64) {
        let f = specht_polynomial(Rationals, &t, 6).unwrap();
        let tall: Vec<usize> = (0..t.rows()[0].len()).filter(|&j| t.columns()[j].len() >= 2).collect();
        prop_assume!(!tall.is_empty());
        let j = tall[pick % tall.len()];
        let mut rows = t.rows().to_vec();
        let h = t.columns()[j].len();
        let (a, b) = (pick % h, (pick / h) % h);
        prop_assume!(a != b);
        let tmp = rows[a][j];
        rows[a][j] = rows[b][j];
        rows[b][j] = tmp;
        let swapped = specht_polynomial(Rationals, &YoungTableau::new(rows).unwrap(), 6).unwrap();
        prop_assert_eq!(swapped, f.negate());
    }

    #[test]
    fn permuting_equal_columns_fixes(t in random_tableau(), pick in 0usize..64) {
        let f = specht_polynomial(Rationals, &t, 6).unwrap();
        let cols = t.columns();
        let width = cols.len();
        let (i, j) = (pick % width, (pick / width) % width);
        prop_assume!(i != j && cols[i].len() == cols[j].len());
        let mut rows = t.rows().to_vec();
        for r in 0..cols[i].len() {
            rows[r].swap(i, j);
        }
        let moved = specht_polynomial(Rationals, &YoungTableau::new(rows).unwrap(), 6).unwrap();
        prop_assert_eq!(moved, f);
    }
}
