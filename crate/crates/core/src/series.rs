//! Exact truncated power series in `q` and `z₁, z₂, …` with big-integer coefficients.
//!
//! Every series carries its q-degree bound; products drop all terms above it.
//! The z-degree needs no separate bound since every generator used here
//! that carries a `z` also carries at least one `q`, except in the `n → ∞`
//! forms where the accompanying `qⁱ` factor plays the same role.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{class_of_weight, ClassSpec};
use crate::error::{Error, Result};
use crate::partition::{Modulus, Partition};

/// Exponent profile `q^d z₁^{e₁} z₂^{e₂} ⋯` with trailing zero z-exponents trimmed.
/// The derived order is graded by q-degree, then lexicographic in the z-exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Exponent {
    pub q: u32,
    pub z: Vec<u32>,
}

impl Exponent {
    pub fn new(q: u32, mut z: Vec<u32>) -> Self {
        while z.last() == Some(&0) {
            z.pop();
        }
        Exponent { q, z }
    }

    fn mul(&self, other: &Exponent) -> Exponent {
        let len = self.z.len().max(other.z.len());
        let z = (0..len)
            .map(|i| self.z.get(i).copied().unwrap_or(0) + other.z.get(i).copied().unwrap_or(0))
            .collect();
        Exponent::new(self.q + other.q, z)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{}", self.q)?;
        for (i, &e) in self.z.iter().enumerate() {
            if e > 0 {
                write!(f, " z{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub coefficient: BigInt,
    pub exponent: Exponent,
}

impl Monomial {
    pub fn new(coefficient: impl Into<BigInt>, q: u32, z: Vec<u32>) -> Self {
        Monomial {
            coefficient: coefficient.into(),
            exponent: Exponent::new(q, z),
        }
    }

    /// `q^d`.
    pub fn q(d: u32) -> Self {
        Monomial::new(1, d, Vec::new())
    }

    /// `z_i q^d` (1-based variable index).
    pub fn zq(i: usize, d: u32) -> Self {
        let mut z = vec![0; i];
        z[i - 1] = 1;
        Monomial::new(1, d, z)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    bound: u32,
    terms: BTreeMap<Exponent, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(bound: u32) -> Self {
        TruncatedSeries {
            bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(bound: u32) -> Self {
        Self::from_monomial(&Monomial::q(0), bound)
    }

    pub fn from_monomial(mono: &Monomial, bound: u32) -> Self {
        let mut s = Self::zero(bound);
        s.add_term(mono.exponent.clone(), mono.coefficient.clone());
        s
    }

    pub fn from_monomials<'a, I: IntoIterator<Item = &'a Monomial>>(monos: I, bound: u32) -> Self {
        let mut s = Self::zero(bound);
        for mono in monos {
            s.add_term(mono.exponent.clone(), mono.coefficient.clone());
        }
        s
    }

    /// Single-variable polynomial `Σ coeffs[d] q^{d·step}`.
    pub fn from_q_poly(coeffs: &[BigInt], step: u32, bound: u32) -> Self {
        let mut s = Self::zero(bound);
        for (d, c) in coeffs.iter().enumerate() {
            s.add_term(Exponent::new(d as u32 * step, Vec::new()), c.clone());
        }
        s
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &Exponent) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient of `q^d` as a function of the z-exponents.
    pub fn slice(&self, d: u32) -> Vec<(&Exponent, &BigInt)> {
        let lo = Exponent::new(d, Vec::new());
        self.terms
            .range(lo..)
            .take_while(|(e, _)| e.q == d)
            .collect()
    }

    /// Sum of all coefficients of `q^d`, i.e. the series at `z = 1`.
    pub fn q_coefficient(&self, d: u32) -> BigInt {
        self.slice(d).into_iter().map(|(_, c)| c.clone()).sum()
    }

    pub(crate) fn add_term(&mut self, exponent: Exponent, coefficient: BigInt) {
        if exponent.q > self.bound || coefficient.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_bound(&self, other: &TruncatedSeries) -> Result<()> {
        if self.bound != other.bound {
            return Err(Error::BoundMismatch(self.bound, other.bound));
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_bound(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            bound: self.bound,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_bound(other)?;
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                if ea.q + eb.q > self.bound {
                    // Terms are ordered by q-degree, so the rest of `other` is too high.
                    break;
                }
                *acc.entry(ea.mul(eb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(TruncatedSeries {
            bound: self.bound,
            terms: acc,
        })
    }

    /// `self · x` for a single monomial, cheaper than a full product.
    pub fn mul_monomial(&self, mono: &Monomial) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.bound);
        for (e, c) in &self.terms {
            out.add_term(e.mul(&mono.exponent), c * &mono.coefficient);
        }
        out
    }

    /// Canonical text: one `q^d z1^e1 ... : coeff` line per term in graded-lex order.
    pub fn to_canonical_text(&self) -> String {
        let mut out = String::new();
        for (e, c) in &self.terms {
            let _ = writeln!(out, "{e} : {c}");
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_text())
    }
}

/// `1/(1 − x)` expanded as `Σ_t xᵗ` up to `bound`.
pub fn geometric_factor(mono: &Monomial, bound: u32) -> Result<TruncatedSeries> {
    if mono.exponent.q == 0 {
        return Err(Error::NonPositiveDegree);
    }
    let mut out = TruncatedSeries::zero(bound);
    let mut power = Monomial::q(0);
    while power.exponent.q <= bound {
        out.add_term(power.exponent.clone(), power.coefficient.clone());
        power = Monomial {
            coefficient: &power.coefficient * &mono.coefficient,
            exponent: power.exponent.mul(&mono.exponent),
        };
    }
    Ok(out)
}

/// Product of `geometric_factor` over `monos`.
pub fn geometric_product(monos: &[Monomial], bound: u32) -> Result<TruncatedSeries> {
    monos.iter().try_fold(TruncatedSeries::one(bound), |acc, mono| {
        acc.mul(&geometric_factor(mono, bound)?)
    })
}

/// Dense coefficients of the Gaussian polynomial `[n, k]_q` via the q-Pascal rule
/// `[n, k] = [n−1, k−1] + q^k [n−1, k]`.
pub fn gauss_poly(n: u32, k: u32) -> Vec<BigInt> {
    if k > n {
        return Vec::new();
    }
    let k = k as usize;
    // prev[j] = [i−1, j] for j ≤ min(i−1, k)
    let mut prev: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=n as usize {
        let mut cur = vec![vec![BigInt::one()]];
        for j in 1..=i.min(k) {
            let mut poly = prev[j - 1].clone();
            if let Some(upper) = prev.get(j) {
                if poly.len() < upper.len() + j {
                    poly.resize(upper.len() + j, BigInt::zero());
                }
                for (d, c) in upper.iter().enumerate() {
                    poly[d + j] += c;
                }
            }
            cur.push(poly);
        }
        prev = cur;
    }
    prev.swap_remove(k)
}

/// `[a+b, b]_{q^step}`, truncated at `bound`.
pub fn gauss_binomial(a: u32, b: u32, step: u32, bound: u32) -> TruncatedSeries {
    TruncatedSeries::from_q_poly(&gauss_poly(a + b, b), step, bound)
}

/// `(q^step; q^step)_a = Π_{j=1..a} (1 − q^{j·step})`, truncated.
pub fn q_rising_factorial(a: u32, step: u32, bound: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(bound);
    for j in 1..=a {
        let factor = TruncatedSeries::from_monomials(
            &[Monomial::q(0), Monomial::new(-1, j * step, Vec::new())],
            bound,
        );
        out = out.mul(&factor).expect("same bound");
    }
    out
}

/// `h_i(x₁, …, x_k)`: the sum over all size-`i` multisets of generators.
pub fn homog_sym(i: u32, gens: &[Monomial], bound: u32) -> TruncatedSeries {
    fn rec(
        i: u32,
        start: usize,
        acc: &Monomial,
        gens: &[Monomial],
        bound: u32,
        out: &mut TruncatedSeries,
    ) {
        if i == 0 {
            out.add_term(acc.exponent.clone(), acc.coefficient.clone());
            return;
        }
        for (idx, g) in gens.iter().enumerate().skip(start) {
            let next = Monomial {
                coefficient: &acc.coefficient * &g.coefficient,
                exponent: acc.exponent.mul(&g.exponent),
            };
            if next.exponent.q <= bound {
                rec(i - 1, idx, &next, gens, bound, out);
            }
        }
    }
    let mut out = TruncatedSeries::zero(bound);
    rec(i, 0, &Monomial::q(0), gens, bound, &mut out);
    out
}

/// Which statistics of a partition the z-variables record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Selector {
    /// `q^{|λ|}` only.
    Weight,
    /// `z₁^{s₁} ⋯ z_{m−1}^{s_{m−1}}`.
    AltSumType,
    /// `z₁^{ℓ₁} ⋯ z_{m−1}^{ℓ_{m−1}}`.
    LengthType,
    /// Alternating sum type with `z_m^{s_m}` appended.
    AltSumTypeWithSm,
    /// Length type with `z_m^{⌊λ₁/m⌋ − asc(λ)}` appended.
    LengthTypeWithAsc,
    /// `z^{ℓ(λ)}`.
    MLength,
    /// `z^{s(λ)}`.
    AltSum,
}

impl Selector {
    pub fn monomial(&self, lambda: &Partition, m: Option<Modulus>) -> Monomial {
        let q = lambda.weight() as u32;
        let m = || m.expect("selector needs a modulus");
        let z = match self {
            Selector::Weight => Vec::new(),
            Selector::AltSumType => lambda.alt_sum_type(m()).entries().to_vec(),
            Selector::LengthType => lambda.length_type(m()).entries().to_vec(),
            Selector::AltSumTypeWithSm => {
                let mut z = lambda.alt_sum_type(m()).entries().to_vec();
                z.push(lambda.s_m(m()));
                z
            }
            Selector::LengthTypeWithAsc => {
                let mut z = lambda.length_type(m()).entries().to_vec();
                z.push(lambda.largest() / m().get() - lambda.asc(m()));
                z
            }
            Selector::MLength => vec![lambda.m_length(m())],
            Selector::AltSum => vec![lambda.alt_sum(m())],
        };
        Monomial::new(1, q, z)
    }
}

/// `Σ_{λ ∈ spec, |λ| ≤ bound}` of the selected monomial. Weight slices are
/// enumerated in parallel on the current rayon pool and merged in weight order.
pub fn class_generating_function(spec: &ClassSpec, selector: Selector, bound: u32) -> Result<TruncatedSeries> {
    spec.validate()?;
    if selector != Selector::Weight && spec.modulus().is_none() {
        return Err(Error::BadSpec(format!("{spec} has no modulus for selector {selector:?}")));
    }
    let slices: Vec<TruncatedSeries> = (0..=bound)
        .into_par_iter()
        .map(|w| {
            let members = class_of_weight(spec, w)?;
            let monos: Vec<Monomial> = members
                .iter()
                .map(|p| selector.monomial(p, spec.modulus()))
                .collect();
            Ok(TruncatedSeries::from_monomials(&monos, bound))
        })
        .collect::<Result<_>>()?;
    let mut out = TruncatedSeries::zero(bound);
    for slice in slices {
        for (e, c) in slice.terms {
            out.add_term(e, c);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZMode {
    /// One variable per residue class.
    Multi,
    /// All residue variables set to a single `z`.
    Single,
}

/// `Σ_i h_i(z₁q, z₂q², …, z_{m−1}q^{m−1}) [n−1+i, i]_{q^m}` (multi), or
/// `Σ_i [m−2+i, i]_q [n−1+i, i]_{q^m} zⁱqⁱ` (single).
pub fn gf_falling_rhs(m: Modulus, n: u32, mode: ZMode, bound: u32) -> Result<TruncatedSeries> {
    if n == 0 {
        return Err(Error::BadSpec("order n must be at least 1".into()));
    }
    let mm = m.get();
    let gens: Vec<Monomial> = (1..mm).map(|r| Monomial::zq(r as usize, r)).collect();
    let mut out = TruncatedSeries::zero(bound);
    for i in 0..=bound {
        let head = match mode {
            ZMode::Multi => homog_sym(i, &gens, bound),
            ZMode::Single => gauss_binomial(mm - 2, i, 1, bound).mul_monomial(&Monomial::new(1, i, vec![i])),
        };
        let term = head.mul(&gauss_binomial(n - 1, i, mm, bound))?;
        out = out.add(&term)?;
    }
    Ok(out)
}

/// The `n → ∞` forms: `Σ_i h_i(z₁, z₂q, …, z_{m−1}q^{m−2}) qⁱ / (q^m; q^m)_i`
/// (multi) and `Σ_i [m−2+i, i]_q zⁱqⁱ / (q^m; q^m)_i` (single).
pub fn gf_falling_limit_rhs(m: Modulus, mode: ZMode, bound: u32) -> Result<TruncatedSeries> {
    let mm = m.get();
    let gens: Vec<Monomial> = (1..mm).map(|r| Monomial::zq(r as usize, r - 1)).collect();
    let mut out = TruncatedSeries::zero(bound);
    let mut inv_rising = TruncatedSeries::one(bound);
    for i in 0..=bound {
        if i > 0 {
            inv_rising = inv_rising.mul(&geometric_factor(&Monomial::q(i * mm), bound)?)?;
        }
        let head = match mode {
            ZMode::Multi => homog_sym(i, &gens, bound).mul_monomial(&Monomial::q(i)),
            ZMode::Single => gauss_binomial(mm - 2, i, 1, bound).mul_monomial(&Monomial::new(1, i, vec![i])),
        };
        out = out.add(&head.mul(&inv_rising)?)?;
    }
    Ok(out)
}

/// `Π_{j=1..bound} (1 + q^j + ⋯ + q^{(m−1)j})`.
pub fn glaisher_lhs(m: Modulus, bound: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(bound);
    for j in 1..=bound {
        let factor: Vec<Monomial> = (0..m.get()).map(|t| Monomial::q(t * j)).collect();
        out = out
            .mul(&TruncatedSeries::from_monomials(&factor, bound))
            .expect("same bound");
    }
    out
}

/// `Π_{i ≢ 0 (mod m), i ≤ bound} 1/(1 − qⁱ)`.
pub fn glaisher_rhs(m: Modulus, bound: u32) -> TruncatedSeries {
    let monos: Vec<Monomial> = (1..=bound)
        .filter(|i| i % m.get() != 0)
        .map(Monomial::q)
        .collect();
    geometric_product(&monos, bound).expect("positive degrees")
}
