//! Hilbert series of graded quotients, the closed forms for the two-row and
//! `(d,d,1)` families, the recursions and exact-sequence checks.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::algebra::{Field, FieldDescriptor, Monomial, PrimeField, Rationals};
use crate::combinatorics::{binomial, Partition};
use crate::error::{Error, Result};
use crate::groebner::{initial_ideal, quotient_by_linear, Ideal, MonomialIdeal};
use crate::specht::{jdd_ideal, specht_ideal, squarefree_monomial_ideal, Family, SpechtIdealSpec};

/// `numerator(t) / (1 − t)^denom_exponent` with integer numerator
/// coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: Vec<i64>,
    pub denom_exponent: u32,
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// `p · (1 − t)^k`.
fn times_one_minus_t_pow(p: &[i64], k: u32) -> Vec<i64> {
    let mut out = p.to_vec();
    for _ in 0..k {
        let mut next = vec![0; out.len() + 1];
        for (i, &c) in out.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c;
        }
        out = next;
    }
    trim(out)
}

fn add_polys(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn mul_polys(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

impl HilbertSeries {
    /// Builds the series and cancels common factors of `(1 − t)`.
    pub fn new(numerator: Vec<i64>, denom_exponent: u32) -> Self {
        let mut num = trim(numerator);
        let mut e = denom_exponent;
        if num.is_empty() {
            return HilbertSeries { numerator: num, denom_exponent: 0 };
        }
        // synthetic division by (1 − t) while the value at t = 1 vanishes
        while e > 0 && num.iter().sum::<i64>() == 0 {
            let mut q = vec![0; num.len() - 1];
            let mut acc = 0;
            for i in 0..q.len() {
                acc += num[i];
                q[i] = acc;
            }
            num = trim(q);
            e -= 1;
        }
        HilbertSeries { numerator: num, denom_exponent: e }
    }

    pub fn zero() -> Self {
        HilbertSeries { numerator: Vec::new(), denom_exponent: 0 }
    }

    /// `1/(1 − t)^n`, the series of a polynomial ring.
    pub fn polynomial_ring(n: u32) -> Self {
        HilbertSeries { numerator: vec![1], denom_exponent: n }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Numerator does not vanish at `t = 1` unless the denominator is trivial.
    pub fn is_canonical(&self) -> bool {
        self.numerator.last() != Some(&0)
            && (self.denom_exponent == 0 || self.numerator.iter().sum::<i64>() != 0)
            && !(self.numerator.is_empty() && self.denom_exponent != 0)
    }

    /// Degree of the numerator.
    pub fn numerator_degree(&self) -> Option<usize> {
        self.numerator.len().checked_sub(1)
    }

    /// Krull dimension of the quotient.
    pub fn dimension(&self) -> u32 {
        self.denom_exponent
    }

    /// The value at `t = 1` of the canonical numerator (the multiplicity).
    pub fn multiplicity(&self) -> i64 {
        self.numerator.iter().sum()
    }

    pub fn mul_t(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut num = vec![0];
        num.extend(&self.numerator);
        HilbertSeries { numerator: num, denom_exponent: self.denom_exponent }
    }

    pub fn div_one_minus_t(&self) -> Self {
        HilbertSeries::new(self.numerator.clone(), self.denom_exponent + 1)
    }

    pub fn mul_one_minus_t(&self) -> Self {
        HilbertSeries::new(times_one_minus_t_pow(&self.numerator, 1), self.denom_exponent)
    }

    pub fn mul_series(&self, other: &HilbertSeries) -> Self {
        HilbertSeries::new(mul_polys(&self.numerator, &other.numerator), self.denom_exponent + other.denom_exponent)
    }

    fn combine(&self, other: &HilbertSeries, sign: i64) -> Self {
        let e = self.denom_exponent.max(other.denom_exponent);
        let a = times_one_minus_t_pow(&self.numerator, e - self.denom_exponent);
        let b: Vec<i64> =
            times_one_minus_t_pow(&other.numerator, e - other.denom_exponent).into_iter().map(|c| sign * c).collect();
        HilbertSeries::new(add_polys(&a, &b), e)
    }

    /// `dim_K [R/I]_k`.
    pub fn coefficient(&self, k: usize) -> i64 {
        let e = self.denom_exponent as u64;
        self.numerator
            .iter()
            .enumerate()
            .take_while(|(i, _)| *i <= k)
            .map(|(i, &c)| {
                let m = (k - i) as u64;
                let ways = if e == 0 { u64::from(m == 0) } else { binomial(m + e - 1, e - 1) };
                c * ways as i64
            })
            .sum()
    }

    /// The Hilbert function in degrees `0..=up_to`.
    pub fn hilbert_function(&self, up_to: usize) -> HilbertFunction {
        let values = (0..=up_to).map(|k| self.coefficient(k)).collect();
        let polynomial_from = (self.numerator.len() as i64 - self.denom_exponent as i64).max(0) as usize;
        HilbertFunction { values, dimension: self.denom_exponent, polynomial_from }
    }
}

impl Add for &HilbertSeries {
    type Output = HilbertSeries;
    fn add(self, rhs: &HilbertSeries) -> HilbertSeries {
        self.combine(rhs, 1)
    }
}

impl Sub for &HilbertSeries {
    type Output = HilbertSeries;
    fn sub(self, rhs: &HilbertSeries) -> HilbertSeries {
        self.combine(rhs, -1)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut num = String::new();
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if num.is_empty() {
                if c < 0 {
                    num.push('-');
                }
            } else {
                num.push(if c < 0 { '-' } else { '+' });
            }
            let a = c.unsigned_abs();
            let power = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            if i == 0 {
                num.push_str(&a.to_string());
            } else if a == 1 {
                num.push_str(&power);
            } else {
                num.push_str(&format!("{a}{power}"));
            }
        }
        let single = self.numerator.iter().filter(|&&c| c != 0).count() == 1;
        match self.denom_exponent {
            0 => write!(f, "{num}"),
            e => {
                let num = if single { num } else { format!("({num})") };
                if e == 1 {
                    write!(f, "{num}/(1-t)")
                } else {
                    write!(f, "{num}/(1-t)^{e}")
                }
            }
        }
    }
}

/// Values of the Hilbert function with the degree from which they follow
/// the Hilbert polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertFunction {
    pub values: Vec<i64>,
    pub dimension: u32,
    pub polynomial_from: usize,
}

/// Numerator `N(M)` of `H(R/M) = N(M)/(1 − t)^n` by pivot recursion
/// `N(M) = N(M + (x)) + t·N(M : x)`.
struct Numerators {
    memo: HashMap<Vec<u128>, Vec<i64>>,
}

impl Numerators {
    fn compute(&mut self, gens: &[Monomial]) -> Vec<i64> {
        if gens.is_empty() {
            return vec![1];
        }
        if gens.iter().any(|m| m.is_one()) {
            return Vec::new();
        }
        let key: Vec<u128> = gens.iter().map(|m| m.packed()).collect();
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
        let result = if coprime {
            gens.iter().fold(vec![1], |acc, m| {
                let mut f = vec![0; m.degree() as usize + 1];
                f[0] = 1;
                f[m.degree() as usize] -= 1;
                mul_polys(&acc, &f)
            })
        } else {
            // the variable occurring in the most generators
            let mut counts = [0usize; crate::algebra::MAX_VARS];
            for m in gens {
                for i in m.support() {
                    counts[i] += 1;
                }
            }
            let pivot = (0..counts.len()).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).expect("nonempty");
            let x = Monomial::var(pivot);
            let plus = minimal(gens.iter().filter(|g| g.exponent(pivot) == 0).copied().chain([x]).collect());
            let colon = minimal(gens.iter().map(|g| g.div(&g.gcd(&x)).expect("gcd divides")).collect());
            let a = self.compute(&plus);
            let mut b = vec![0];
            b.extend(self.compute(&colon));
            add_polys(&a, &b)
        };
        self.memo.insert(key, result.clone());
        result
    }
}

fn minimal(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), m.packed()));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort_by_key(|m| m.packed());
    kept
}

/// `H(R/M, t)` for a monomial ideal `M` of `R = K[x_1, …, x_n]`.
pub fn series_from_monomial_ideal(m: &MonomialIdeal) -> HilbertSeries {
    let mut memo = Numerators { memo: HashMap::new() };
    let num = memo.compute(&minimal(m.generators().to_vec()));
    HilbertSeries::new(num, m.nvars() as u32)
}

/// `H(R/I, t)` via the initial ideal of the reduced Gröbner basis. The
/// generators must be homogeneous.
pub fn series_of_quotient<F: Field>(ideal: &Ideal<F>) -> Result<HilbertSeries> {
    for g in ideal.generators() {
        if g.homogeneous_degree()?.is_none() {
            return Err(Error::Precondition(format!("generator {g} is not homogeneous")));
        }
    }
    Ok(series_from_monomial_ideal(&initial_ideal(ideal.groebner_basis()?)))
}

/// Closed form of `H(R/I_(n−d,d), t)`: `h_i = C(n−d+i−1, i)` for
/// `1 ≤ i ≤ d−1` and `h_d = C(n−1, d−2)` over `(1 − t)^d`. For `d = 1` the
/// quotient is a polynomial ring in one variable.
pub fn closed_form_two_row(n: usize, d: usize) -> Result<HilbertSeries> {
    if d == 1 && n >= 2 {
        return Ok(HilbertSeries::polynomial_ring(1));
    }
    if d < 2 || n < 2 * d {
        return Err(Error::Precondition(format!("closed form needs n-d >= d >= 2, got n={n}, d={d}")));
    }
    let (n, d) = (n as u64, d as u64);
    let mut h = vec![1i64];
    for i in 1..d {
        h.push(binomial(n - d + i - 1, i) as i64);
    }
    h.push(binomial(n - 1, d - 2) as i64);
    Ok(HilbertSeries::new(h, d as u32))
}

/// Closed form of `H(R/I_(d,d,1), t)`, `n = 2d+1`: `h_i = C(d+i−1, i)` for
/// `1 ≤ i ≤ d+1` over `(1 − t)^{d+1}`.
pub fn closed_form_hook(d: usize) -> Result<HilbertSeries> {
    if d < 1 {
        return Err(Error::Precondition("closed form for (d,d,1) needs d >= 1".into()));
    }
    let d = d as u64;
    let h = (0..=d + 1).map(|i| binomial(d + i - 1, i) as i64).collect::<Vec<_>>();
    Ok(HilbertSeries::new(h, d as u32 + 1))
}

/// The closed form matching a spec's family, if there is one.
pub fn closed_form(spec: &SpechtIdealSpec) -> Result<HilbertSeries> {
    match spec.family {
        Family::TwoRow { d } => closed_form_two_row(spec.n, d),
        Family::HookTwoRow { d } => closed_form_hook(d),
        other => Err(Error::UnsupportedFamily(format!("no closed form for {} ({other})", spec.lambda))),
    }
}

/// How the series in a check are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesSource {
    ClosedForm,
    Groebner,
}

/// `H(R/I_λ)` for a Specht ideal from the chosen source, over ℚ.
pub fn specht_series(lambda: &Partition, source: SeriesSource) -> Result<HilbertSeries> {
    let spec = SpechtIdealSpec::new(lambda.clone());
    match source {
        SeriesSource::ClosedForm => closed_form(&spec),
        SeriesSource::Groebner => series_of_quotient(&specht_ideal(Rationals, &spec)?),
    }
}

fn part(v: Vec<usize>) -> Partition {
    Partition::new(v).expect("valid by construction")
}

/// Both sides of a series identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub lhs: HilbertSeries,
    pub rhs: HilbertSeries,
    pub holds: bool,
}

impl IdentityCheck {
    fn new(lhs: HilbertSeries, rhs: HilbertSeries) -> Self {
        let holds = lhs == rhs;
        IdentityCheck { lhs, rhs, holds }
    }
}

/// `H(R/I_(n−d,d)) = H(S/I_(n−d−1,d)) + t/(1−t) · H(S/I_(n−d,d−1))`.
pub fn recursion_check_two_row(n: usize, d: usize, source: SeriesSource) -> Result<IdentityCheck> {
    if d < 2 || n <= 2 * d {
        return Err(Error::Precondition(format!("recursion needs n-d > d >= 2, got n={n}, d={d}")));
    }
    let lhs = specht_series(&part(vec![n - d, d]), source)?;
    let a = specht_series(&part(vec![n - d - 1, d]), source)?;
    let b = specht_series(&part(vec![n - d, d - 1]), source)?;
    Ok(IdentityCheck::new(lhs, &a + &b.mul_t().div_one_minus_t()))
}

/// `H(R/I_(d,d)) = H(S/I_(d−1,d−1,1)) + t/(1−t) · H(S/I_(d,d−1))`.
pub fn recursion_check_square(d: usize, source: SeriesSource) -> Result<IdentityCheck> {
    if d < 2 {
        return Err(Error::Precondition(format!("square recursion needs d >= 2, got {d}")));
    }
    let lhs = specht_series(&part(vec![d, d]), source)?;
    let a = specht_series(&part(vec![d - 1, d - 1, 1]), source)?;
    let b = specht_series(&part(vec![d, d - 1]), source)?;
    Ok(IdentityCheck::new(lhs, &a + &b.mul_t().div_one_minus_t()))
}

/// The four series of `0 → S/π(I_(d,d,1)) → S/I_(d,d) ⊕ S/m^⟨d+1⟩ → S/J_(d,d) → 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SesReport {
    pub d: usize,
    pub image: HilbertSeries,
    pub jdd: HilbertSeries,
    pub idd: HilbertSeries,
    pub squarefree: HilbertSeries,
    pub hook: HilbertSeries,
    /// `H(S/π(I)) + H(S/J) = H(S/I_(d,d)) + H(S/m^⟨d+1⟩)`.
    pub additive: bool,
    /// `H(R/I_(d,d,1)) = H(S/π(I)) / (1 − t)`.
    pub regular: bool,
}

/// All series computed from Gröbner bases over `field`.
pub fn ses_check_jdd<F: Field>(field: F, d: usize) -> Result<SesReport> {
    if d < 1 {
        return Err(Error::Precondition("d must be positive".into()));
    }
    let hook_ideal = specht_ideal(field.clone(), &SpechtIdealSpec::new(part(vec![d, d, 1])))?;
    let image = series_of_quotient(&quotient_by_linear(&hook_ideal, 2 * d + 1)?)?;
    let jdd = series_of_quotient(&jdd_ideal(field.clone(), d)?)?;
    let idd = series_of_quotient(&specht_ideal(field, &SpechtIdealSpec::new(part(vec![d, d])))?)?;
    let squarefree = series_from_monomial_ideal(&squarefree_monomial_ideal(2 * d, d + 1)?);
    let hook = series_of_quotient(&hook_ideal)?;
    let additive = &image + &jdd == &idd + &squarefree;
    let regular = image.div_one_minus_t() == hook;
    Ok(SesReport { d, image, jdd, idd, squarefree, hook, additive, regular })
}

/// Builds the same ideal over any coefficient field.
pub trait IdealBuilder: Sync {
    fn describe(&self) -> String;
    fn build<F: Field>(&self, field: F) -> Result<Ideal<F>>;
}

/// Ideals used by the characteristic-independence checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealRecipe {
    Specht(Partition),
    Jdd(usize),
}

impl IdealBuilder for IdealRecipe {
    fn describe(&self) -> String {
        match self {
            IdealRecipe::Specht(l) => format!("I{l}"),
            IdealRecipe::Jdd(d) => format!("J({d},{d})"),
        }
    }

    fn build<F: Field>(&self, field: F) -> Result<Ideal<F>> {
        match self {
            IdealRecipe::Specht(l) => specht_ideal(field, &SpechtIdealSpec::new(l.clone())),
            IdealRecipe::Jdd(d) => jdd_ideal(field, *d),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharReport {
    pub ideal: String,
    pub series: Vec<(FieldDescriptor, HilbertSeries)>,
    pub identical: bool,
}

/// `H(R/I)` over ℚ and over `F_p` for each prime; all must agree.
pub fn char_independence_check(builder: &impl IdealBuilder, primes: &[u64]) -> Result<CharReport> {
    let mut series = vec![(FieldDescriptor::Rational, series_of_quotient(&builder.build(Rationals)?)?)];
    for &p in primes {
        let field = PrimeField::new(p)?;
        series.push((field.descriptor(), series_of_quotient(&builder.build(field)?)?));
    }
    let identical = series.windows(2).all(|w| w[0].1 == w[1].1);
    Ok(CharReport { ideal: builder.describe(), series, identical })
}

/// Castelnuovo–Mumford regularity of a Cohen–Macaulay quotient: the degree
/// of the canonical numerator. Cohen–Macaulayness is the caller's claim and
/// is not checked.
pub fn regularity_cm(series: &HilbertSeries) -> Result<usize> {
    if !series.is_canonical() {
        return Err(Error::Precondition(format!("series {series:?} is not in canonical form")));
    }
    series.numerator_degree().ok_or(Error::Precondition("zero series has no regularity".into()))
}
