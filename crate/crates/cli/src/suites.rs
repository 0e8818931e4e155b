use std::fmt::Write as _;
use std::time::Instant;

use clap::ValueEnum;
use serde::Serialize;

use specht_core::algebra::{parse_polynomial, Field, Rationals};
use specht_core::combinatorics::{enumerate_partitions, Partition};
use specht_core::groebner::{contract_to_subring, intersect, intersect_all, quotient_by_linear, GroebnerBasis, Ideal};
use specht_core::hilbert::{
    char_independence_check, closed_form, recursion_check_square, recursion_check_two_row,
    ses_check_jdd, IdealRecipe, SeriesSource,
};
use specht_core::specht::{
    initial_monomial_two_row, jdd_ideal, radical_decomposition, specht_generators, specht_ideal,
    squarefree_monomial_ideal, structured_groebner_set, syt_basis_rank, trimmed_form, trm_lemma_check,
    vanishing_check, Family, SpechtIdealSpec,
};
use specht_core::{Error, MonomialOrder, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    InitialTerms,
    TrmLemma,
    GrobnerJdd,
    Radical,
    Contraction,
    Recursion,
    SesJdd,
    CharFree,
    Vanishing,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::InitialTerms => "initial-terms",
            Suite::TrmLemma => "trm-lemma",
            Suite::GrobnerJdd => "grobner-jdd",
            Suite::Radical => "radical",
            Suite::Contraction => "contraction",
            Suite::Recursion => "recursion",
            Suite::SesJdd => "ses-jdd",
            Suite::CharFree => "char-free",
            Suite::Vanishing => "vanishing",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub max_n: Option<usize>,
    pub d: Option<usize>,
    pub seed: u64,
    pub trials: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub status: &'static str,
    pub witness: Option<String>,
    pub millis: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: &'static str,
    pub cases: Vec<CaseResult>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.cases {
            let _ = write!(s, "[{}] {} ({:.1} ms)", c.status, c.id, c.millis);
            if let Some(w) = &c.witness {
                let _ = write!(s, ": {w}");
            }
            s.push('\n');
        }
        let failed = self.cases.iter().filter(|c| c.status != "pass").count();
        let _ = writeln!(
            s,
            "suite {}: {} ({} cases, {} failed)",
            self.suite,
            if self.passed { "PASS" } else { "FAIL" },
            self.cases.len(),
            failed
        );
        s
    }
}

/// `Ok(None)` passes, `Ok(Some(w))` fails with witness `w`.
type Outcome = Result<Option<String>>;

struct Runner {
    cases: Vec<CaseResult>,
}

impl Runner {
    fn case(&mut self, id: impl Into<String>, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        let millis = start.elapsed().as_secs_f64() * 1e3;
        let (status, witness) = match outcome {
            Ok(None) => ("pass", None),
            Ok(Some(w)) => ("fail", Some(w)),
            Err(e) => ("fail", Some(format!("error: {e}"))),
        };
        self.cases.push(CaseResult { id: id.into(), status, witness, millis });
    }
}

fn check(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
    Ok(if ok { None } else { Some(witness()) })
}

fn part(v: Vec<usize>) -> Partition {
    Partition::new(v).expect("valid shape")
}

fn spec(v: Vec<usize>) -> SpechtIdealSpec {
    SpechtIdealSpec::new(part(v))
}

/// `(n, d)` with `n−d ≥ d ≥ lo` and `n ≤ max_n`.
fn two_row_pairs(lo: usize, max_n: usize, strict: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for d in lo..=n / 2 {
            if !strict || n - d > d {
                out.push((n, d));
            }
        }
    }
    out
}

fn ideals_equal<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Outcome {
    let ga = a.groebner_basis()?;
    let gb = b.groebner_basis()?;
    check(ga.elements() == gb.elements(), || {
        format!("reduced bases differ: {} vs {} elements", ga.len(), gb.len())
    })
}

/// Runs one suite. Bounds default to the values used in the acceptance tests.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<VerificationReport> {
    let mut r = Runner { cases: Vec::new() };
    let ds = |default: &[usize]| -> Vec<usize> { opts.d.map(|d| vec![d]).unwrap_or_else(|| default.to_vec()) };
    match suite {
        Suite::InitialTerms => {
            let max_n = opts.max_n.unwrap_or(7);
            for n in 1..=max_n {
                for lambda in enumerate_partitions(n)? {
                    r.case(format!("rank {lambda}"), || {
                        let rep = syt_basis_rank(Rationals, &lambda)?;
                        check(rep.passed(), || format!("{rep:?}"))
                    });
                    if lambda.len() == 2 {
                        r.case(format!("two-row initials {lambda}"), || {
                            let s = SpechtIdealSpec::new(lambda.clone());
                            for (t, f) in specht_generators(Rationals, &s)? {
                                let lm = f.leading_monomial().ok_or(Error::ZeroPolynomial)?;
                                if lm != initial_monomial_two_row(&t)? {
                                    return Ok(Some(format!("T = {t}: init {}", lm.display())));
                                }
                            }
                            Ok(None)
                        });
                    }
                }
            }
        }
        Suite::TrmLemma => {
            r.case("worked example", || {
                let f = parse_polynomial(Rationals, "x1*x4^2 - 2*x2*x3^2 + 3*x1*x3*x4 - x2*x3*x4", 4)?;
                let t = trimmed_form(&f, 2);
                check(t.to_string() == "x1*x4^2 - 2*x2*x3^2", || format!("got {t}"))
            });
            let max_d = opts.max_n.map(|m| m / 2).unwrap_or(3);
            for d in ds(&(1..=max_d).collect::<Vec<_>>()) {
                r.case(format!("d={d}"), || {
                    let rep = trm_lemma_check(Rationals, d)?;
                    check(rep.passed, || rep.failures.join("; "))
                });
            }
        }
        Suite::GrobnerJdd => {
            for d in ds(&[2, 3]) {
                r.case(format!("structured set d={d}"), || {
                    let set = structured_groebner_set(Rationals, d)?;
                    let cert = GroebnerBasis::certify(Rationals, 2 * d, MonomialOrder::Lex, set.elements.clone())?;
                    let j = jdd_ideal(Rationals, d)?;
                    let structured = Ideal::new(Rationals, 2 * d, set.elements)?;
                    if !structured.equals(&j)? {
                        return Ok(Some("structured set does not generate J".into()));
                    }
                    let init_struct = specht_core::groebner::initial_ideal(&cert);
                    let init_j = j.initial_ideal()?;
                    check(init_struct == init_j, || format!("initial ideals differ: {init_struct} vs {init_j}"))
                });
            }
        }
        Suite::Radical => {
            let max_n = opts.max_n.unwrap_or(6);
            let mut shapes: Vec<Vec<usize>> = two_row_pairs(1, max_n, false).into_iter().map(|(n, d)| vec![n - d, d]).collect();
            shapes.extend((1..).map(|d| vec![d, d, 1]).take_while(|s| 2 * s[0] < max_n));
            for shape in shapes {
                let s = spec(shape);
                r.case(format!("{}", s.lambda), || {
                    let comps: Vec<Ideal<Rationals>> =
                        radical_decomposition(Rationals, &s)?.into_iter().map(|c| c.ideal).collect();
                    ideals_equal(&intersect_all(&comps)?, &specht_ideal(Rationals, &s)?)
                });
            }
        }
        Suite::Contraction => {
            let max_n = opts.max_n.unwrap_or(7);
            for (n, d) in two_row_pairs(2, max_n, true) {
                r.case(format!("I({},{d}) ∩ S = I({},{d})", n - d, n - d - 1), || {
                    let big = specht_ideal(Rationals, &spec(vec![n - d, d]))?;
                    let keep: Vec<usize> = (1..n).collect();
                    ideals_equal(&contract_to_subring(&big, &keep)?, &specht_ideal(Rationals, &spec(vec![n - d - 1, d]))?)
                });
            }
            for d in (2..).take_while(|d| 2 * d <= max_n) {
                r.case(format!("I({d},{d}) ∩ S = I({},{},1)", d - 1, d - 1), || {
                    let big = specht_ideal(Rationals, &spec(vec![d, d]))?;
                    let keep: Vec<usize> = (1..2 * d).collect();
                    ideals_equal(&contract_to_subring(&big, &keep)?, &specht_ideal(Rationals, &spec(vec![d - 1, d - 1, 1]))?)
                });
            }
            for d in (2..).take_while(|d| 2 * d < max_n) {
                r.case(format!("π(I({d},{d},1)) = I({d},{d}) ∩ m<{}>", d + 1), || {
                    let hook = specht_ideal(Rationals, &spec(vec![d, d, 1]))?;
                    let image = quotient_by_linear(&hook, 2 * d + 1)?;
                    let m = Ideal::from_monomials(Rationals, &squarefree_monomial_ideal(2 * d, d + 1)?);
                    let rhs = intersect(&specht_ideal(Rationals, &spec(vec![d, d]))?, &m)?;
                    ideals_equal(&image, &rhs)
                });
            }
        }
        Suite::Recursion => {
            let max_n = opts.max_n.unwrap_or(7);
            for (n, d) in two_row_pairs(2, max_n, true) {
                for source in [SeriesSource::ClosedForm, SeriesSource::Groebner] {
                    r.case(format!("two-row n={n} d={d} {source:?}"), || {
                        let c = recursion_check_two_row(n, d, source)?;
                        check(c.holds, || format!("{} != {}", c.lhs, c.rhs))
                    });
                }
            }
            for d in (2..).take_while(|d| 2 * d <= max_n) {
                for source in [SeriesSource::ClosedForm, SeriesSource::Groebner] {
                    r.case(format!("square d={d} {source:?}"), || {
                        let c = recursion_check_square(d, source)?;
                        check(c.holds, || format!("{} != {}", c.lhs, c.rhs))
                    });
                }
            }
        }
        Suite::SesJdd => {
            for d in ds(&[2, 3]) {
                r.case(format!("d={d}"), || {
                    let rep = ses_check_jdd(Rationals, d)?;
                    let closed = closed_form(&spec(vec![d, d, 1]))?;
                    check(rep.additive && rep.regular && rep.hook == closed, || format!("{rep:?}"))
                });
            }
        }
        Suite::CharFree => {
            let max_n = opts.max_n.unwrap_or(7);
            let mut recipes: Vec<IdealRecipe> = ds(&[2, 3]).into_iter().map(IdealRecipe::Jdd).collect();
            recipes.extend(two_row_pairs(2, max_n, false).into_iter().map(|(n, d)| IdealRecipe::Specht(part(vec![n - d, d]))));
            recipes.push(IdealRecipe::Specht(part(vec![2, 2, 1])));
            for recipe in recipes {
                r.case(format!("{recipe:?}"), || {
                    let rep = char_independence_check(&recipe, &[2, 3, 5])?;
                    check(rep.identical, || format!("{:?}", rep.series))
                });
            }
        }
        Suite::Vanishing => {
            let max_n = opts.max_n.unwrap_or(7);
            let mut specs: Vec<SpechtIdealSpec> =
                two_row_pairs(1, max_n, false).into_iter().map(|(n, d)| spec(vec![n - d, d])).collect();
            specs.extend((1..).map(|d| spec(vec![d, d, 1])).take_while(|s| s.n <= max_n));
            for (k, s) in specs.iter().enumerate() {
                debug_assert!(matches!(s.family, Family::TwoRow { .. } | Family::HookTwoRow { .. }));
                r.case(format!("{} x{}", s.lambda, opts.trials), || {
                    let rep = vanishing_check(s, opts.trials, opts.seed.wrapping_add(k as u64))?;
                    check(rep.passed, || rep.failures.join("; "))
                });
            }
        }
    }
    let passed = r.cases.iter().all(|c| c.status == "pass");
    Ok(VerificationReport { suite: suite.name(), cases: r.cases, passed })
}
