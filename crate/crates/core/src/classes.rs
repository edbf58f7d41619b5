//! Membership predicates and bounded enumerators for the partition classes.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Modulus, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassSpec {
    /// Every partition.
    All,
    /// `D_m`: no nonzero part repeated `m` or more times.
    Distinct { m: Modulus },
    /// `O_m`: no part divisible by `m`.
    Regular { m: Modulus },
    /// `F_m`: consecutive parts (and the last part against zero) differ by at most `m−1`.
    Flat { m: Modulus },
    /// `O_{m↘}`: m-regular with nonincreasing residues.
    Falling { m: Modulus },
    /// `O_{m↘}ⁿ`: additionally `λ₁ < nm`.
    FallingBounded { m: Modulus, n: u32 },
    /// `O_{c,m}`: every part congruent to `c`.
    Residue { m: Modulus, c: u32 },
    /// `O_{c,m}ⁿ`: additionally `λ₁ < nm`.
    ResidueBounded { m: Modulus, c: u32, n: u32 },
    /// `D_{c,m}`: in `D_m` with alternating sum type supported on coordinate `c`.
    DistinctResidue { m: Modulus, c: u32 },
    /// `L_{c,m}ⁿ`.
    ResidueLectureHall { m: Modulus, c: u32, n: u32 },
    /// `L_{m↘}ⁿ`, the m-falling lecture hall partitions of order `n`.
    FallingLectureHall { m: Modulus, n: u32 },
    /// `L_n`, lecture hall partitions of length `n`.
    LectureHall { n: u32 },
}

impl ClassSpec {
    pub fn validate(&self) -> Result<()> {
        let check_c = |m: Modulus, c: u32| {
            if c == 0 || c >= m.get() {
                Err(Error::BadSpec(format!("residue c={c} must lie in 1..={}", m.get() - 1)))
            } else {
                Ok(())
            }
        };
        let check_n = |n: u32| {
            if n == 0 {
                Err(Error::BadSpec("order n must be at least 1".into()))
            } else {
                Ok(())
            }
        };
        match *self {
            ClassSpec::All
            | ClassSpec::Distinct { .. }
            | ClassSpec::Regular { .. }
            | ClassSpec::Flat { .. }
            | ClassSpec::Falling { .. } => Ok(()),
            ClassSpec::FallingBounded { n, .. }
            | ClassSpec::FallingLectureHall { n, .. }
            | ClassSpec::LectureHall { n } => check_n(n),
            ClassSpec::Residue { m, c } | ClassSpec::DistinctResidue { m, c } => check_c(m, c),
            ClassSpec::ResidueBounded { m, c, n } | ClassSpec::ResidueLectureHall { m, c, n } => {
                check_c(m, c)?;
                check_n(n)
            }
        }
    }

    pub fn modulus(&self) -> Option<Modulus> {
        match *self {
            ClassSpec::All | ClassSpec::LectureHall { .. } => None,
            ClassSpec::Distinct { m }
            | ClassSpec::Regular { m }
            | ClassSpec::Flat { m }
            | ClassSpec::Falling { m }
            | ClassSpec::FallingBounded { m, .. }
            | ClassSpec::Residue { m, .. }
            | ClassSpec::ResidueBounded { m, .. }
            | ClassSpec::DistinctResidue { m, .. }
            | ClassSpec::ResidueLectureHall { m, .. }
            | ClassSpec::FallingLectureHall { m, .. } => Some(m),
        }
    }

    pub fn contains(&self, lambda: &Partition) -> Result<bool> {
        self.validate()?;
        Ok(self.contains_unchecked(lambda))
    }

    pub(crate) fn contains_unchecked(&self, lambda: &Partition) -> bool {
        match *self {
            ClassSpec::All => true,
            ClassSpec::Distinct { m } => lambda.is_m_distinct(m),
            ClassSpec::Regular { m } => is_regular(lambda, m),
            ClassSpec::Flat { m } => is_flat(lambda, m),
            ClassSpec::Falling { m } => is_regular(lambda, m) && lambda.is_m_falling(m),
            ClassSpec::FallingBounded { m, n } => {
                u64::from(lambda.largest()) < u64::from(n) * u64::from(m.get())
                    && is_regular(lambda, m)
                    && lambda.is_m_falling(m)
            }
            ClassSpec::Residue { m, c } => lambda.parts().iter().all(|&p| p % m.get() == c),
            ClassSpec::ResidueBounded { m, c, n } => {
                u64::from(lambda.largest()) < u64::from(n) * u64::from(m.get())
                    && lambda.parts().iter().all(|&p| p % m.get() == c)
            }
            ClassSpec::DistinctResidue { m, c } => is_distinct_residue(lambda, m, c),
            ClassSpec::ResidueLectureHall { m, c, n } => is_residue_lecture_hall(lambda, m, c, n),
            ClassSpec::FallingLectureHall { m, n } => is_falling_lecture_hall(lambda, m, n),
            ClassSpec::LectureHall { n } => is_lecture_hall(lambda, n),
        }
    }

    /// Tightest structural bounds known for members of the class.
    fn bounds(&self) -> GenBounds {
        let nm = |m: Modulus, n: u32| (n * m.get()).saturating_sub(1);
        match *self {
            ClassSpec::All | ClassSpec::Distinct { .. } | ClassSpec::Flat { .. } => GenBounds::default(),
            ClassSpec::Regular { m } | ClassSpec::Falling { m } => GenBounds {
                residue: ResidueFilter::NonZero(m.get()),
                ..GenBounds::default()
            },
            ClassSpec::FallingBounded { m, n } => GenBounds {
                max_part: nm(m, n),
                residue: ResidueFilter::NonZero(m.get()),
                ..GenBounds::default()
            },
            ClassSpec::Residue { m, c } => GenBounds {
                residue: ResidueFilter::Exactly(m.get(), c),
                ..GenBounds::default()
            },
            ClassSpec::ResidueBounded { m, c, n } => GenBounds {
                max_part: nm(m, n),
                residue: ResidueFilter::Exactly(m.get(), c),
                ..GenBounds::default()
            },
            ClassSpec::DistinctResidue { .. } => GenBounds::default(),
            ClassSpec::ResidueLectureHall { m, n, .. } | ClassSpec::FallingLectureHall { m, n } => {
                GenBounds {
                    max_len: falling_length_bound(m, n),
                    ..GenBounds::default()
                }
            }
            ClassSpec::LectureHall { n } => GenBounds {
                max_len: n as usize,
                ..GenBounds::default()
            },
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::All => write!(f, "P"),
            ClassSpec::Distinct { m } => write!(f, "D_{m}"),
            ClassSpec::Regular { m } => write!(f, "O_{m}"),
            ClassSpec::Flat { m } => write!(f, "F_{m}"),
            ClassSpec::Falling { m } => write!(f, "O_{m}falling"),
            ClassSpec::FallingBounded { m, n } => write!(f, "O_{m}falling^{n}"),
            ClassSpec::Residue { m, c } => write!(f, "O_{{{c},{m}}}"),
            ClassSpec::ResidueBounded { m, c, n } => write!(f, "O_{{{c},{m}}}^{n}"),
            ClassSpec::DistinctResidue { m, c } => write!(f, "D_{{{c},{m}}}"),
            ClassSpec::ResidueLectureHall { m, c, n } => write!(f, "L_{{{c},{m}}}^{n}"),
            ClassSpec::FallingLectureHall { m, n } => write!(f, "L_{m}falling^{n}"),
            ClassSpec::LectureHall { n } => write!(f, "L_{n}"),
        }
    }
}

/// `⌊(n+1)/2⌋(m−2) + n`, the length bound shared by both lecture hall families.
pub fn falling_length_bound(m: Modulus, n: u32) -> usize {
    (((n + 1) / 2) * (m.get() - 2) + n) as usize
}

fn is_regular(lambda: &Partition, m: Modulus) -> bool {
    lambda.parts().iter().all(|&p| p % m.get() != 0)
}

fn is_flat(lambda: &Partition, m: Modulus) -> bool {
    let gap = m.get() - 1;
    lambda.parts().windows(2).all(|w| w[0] - w[1] <= gap)
        && lambda.parts().last().map_or(true, |&p| p <= gap)
}

fn is_distinct_residue(lambda: &Partition, m: Modulus, c: u32) -> bool {
    if !lambda.is_m_distinct(m) {
        return false;
    }
    if lambda.is_empty() {
        return true;
    }
    let s = lambda.alt_sum_type(m);
    s.entries()
        .iter()
        .enumerate()
        .all(|(idx, &v)| if idx + 1 == c as usize { v > 0 } else { v == 0 })
}

fn is_residue_lecture_hall(lambda: &Partition, m: Modulus, c: u32, n: u32) -> bool {
    if !is_distinct_residue(lambda, m, c) || lambda.len() > falling_length_bound(m, n) {
        return false;
    }
    let (mu, cu) = (m.get() as usize, c as usize);
    let n = i64::from(n);
    (0..(n + 1) / 2).all(|k| {
        let ku = k as usize;
        ratio_chain_holds(&[
            RatioTerm::new(lambda.part(ku * mu + cu), n - 2 * k),
            RatioTerm::new(lambda.part(ku * mu + mu), n - 2 * k - 1),
            RatioTerm::new(lambda.part((ku + 1) * mu + cu), n - 2 * k - 2),
        ])
    })
}

/// Index `t` of the chain `λ₁, λ_m, λ_{m+1}, λ_{2m}, …` (0-based).
fn falling_chain_position(m: usize, t: usize) -> usize {
    if t % 2 == 0 {
        (t / 2) * m + 1
    } else {
        t.div_ceil(2) * m
    }
}

fn is_falling_lecture_hall(lambda: &Partition, m: Modulus, n: u32) -> bool {
    if !lambda.is_m_distinct(m) || lambda.len() > falling_length_bound(m, n) {
        return false;
    }
    let mu = m.get() as usize;
    if !lambda.is_empty() {
        let blocks = (lambda.len() - 1) / mu;
        for i in 0..blocks {
            let (_, lb) = lambda.fb_lb_unchecked(m, i);
            let (fb, _) = lambda.fb_lb_unchecked(m, i + 1);
            if lb > fb {
                return false;
            }
        }
    }
    let last = if n % 2 == 0 { n - 1 } else { n } as usize;
    let terms: Vec<RatioTerm> = (0..=last)
        .map(|t| RatioTerm::new(lambda.part(falling_chain_position(mu, t)), i64::from(n) - t as i64))
        .collect();
    ratio_chain_holds(&terms)
}

fn is_lecture_hall(lambda: &Partition, n: u32) -> bool {
    if lambda.len() > n as usize {
        return false;
    }
    let terms: Vec<RatioTerm> = (1..=n as usize)
        .map(|i| RatioTerm::new(lambda.part(i), i64::from(n) - i as i64 + 1))
        .collect();
    ratio_chain_holds(&terms)
}

/// An exact fraction `part / slots`. A nonpositive denominator is only admissible
/// with a zero numerator, in which case the term reads as zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioTerm {
    pub numerator: u32,
    pub denominator: i64,
}

impl RatioTerm {
    pub fn new(numerator: u32, denominator: i64) -> Self {
        RatioTerm { numerator, denominator }
    }

    pub fn is_admissible(&self) -> bool {
        self.denominator > 0 || self.numerator == 0
    }

    /// Cross-multiplied comparison; `None` when either side is inadmissible.
    pub fn compare(&self, other: &RatioTerm) -> Option<Ordering> {
        if !self.is_admissible() || !other.is_admissible() {
            return None;
        }
        let (a, b) = self.as_fraction();
        let (c, d) = other.as_fraction();
        Some((a * d).cmp(&(c * b)))
    }

    fn as_fraction(&self) -> (i128, i128) {
        if self.denominator > 0 {
            (i128::from(self.numerator), i128::from(self.denominator))
        } else {
            (0, 1)
        }
    }
}

/// `t₀ ≥ t₁ ≥ ⋯`, with every term admissible.
pub fn ratio_chain_holds(terms: &[RatioTerm]) -> bool {
    terms.iter().all(RatioTerm::is_admissible)
        && terms
            .windows(2)
            .all(|w| matches!(w[0].compare(&w[1]), Some(Ordering::Greater | Ordering::Equal)))
}

#[derive(Debug, Clone, Copy)]
enum ResidueFilter {
    Any,
    NonZero(u32),
    Exactly(u32, u32),
}

#[derive(Debug, Clone, Copy)]
struct GenBounds {
    max_part: u32,
    min_len: usize,
    max_len: usize,
    residue: ResidueFilter,
}

impl Default for GenBounds {
    fn default() -> Self {
        GenBounds {
            max_part: u32::MAX,
            min_len: 0,
            max_len: usize::MAX,
            residue: ResidueFilter::Any,
        }
    }
}

impl GenBounds {
    fn allows(&self, p: u32) -> bool {
        match self.residue {
            ResidueFilter::Any => true,
            ResidueFilter::NonZero(m) => p % m != 0,
            ResidueFilter::Exactly(m, c) => p % m == c,
        }
    }
}

/// Partitions of exactly `weight` obeying `bounds`, in lexicographically descending order.
fn generate(weight: u32, bounds: GenBounds) -> Vec<Partition> {
    fn rec(rest: u32, cap: u32, bounds: &GenBounds, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            if cur.len() >= bounds.min_len {
                out.push(Partition::from_sorted_vec(cur.clone()));
            }
            return;
        }
        if cur.len() >= bounds.max_len {
            return;
        }
        let slots = (bounds.max_len - cur.len()).min(rest as usize) as u64;
        if u64::from(rest) > u64::from(cap.min(rest)) * slots {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            if bounds.allows(p) {
                cur.push(p);
                rec(rest - p, p, bounds, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(weight, bounds.max_part, &bounds, &mut Vec::new(), &mut out);
    out
}

/// All partitions of exactly `weight`, lexicographically descending.
pub fn partitions_of_weight(weight: u32) -> Vec<Partition> {
    generate(weight, GenBounds::default())
}

/// m-regular partitions of `weight` with exactly `len` parts.
pub fn regular_with_length(weight: u32, m: Modulus, len: usize) -> Vec<Partition> {
    generate(
        weight,
        GenBounds {
            min_len: len,
            max_len: len,
            residue: ResidueFilter::NonZero(m.get()),
            ..GenBounds::default()
        },
    )
}

/// Every partition of weight `0..=max_weight`, weight-major then lexicographically descending.
pub fn enumerate_partitions(max_weight: u32) -> impl Iterator<Item = Partition> {
    (0..=max_weight).flat_map(partitions_of_weight)
}

/// Members of `spec` with exactly `weight`, produced by a pruned direct generator.
pub fn class_of_weight(spec: &ClassSpec, weight: u32) -> Result<Vec<Partition>> {
    spec.validate()?;
    let mut slice = generate(weight, spec.bounds());
    slice.retain(|p| spec.contains_unchecked(p));
    Ok(slice)
}

/// Members of `spec` with weight at most `max_weight`, in enumeration order.
pub fn enumerate_class(spec: &ClassSpec, max_weight: u32) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        out.extend(class_of_weight(spec, w)?);
    }
    Ok(out)
}

/// Same members as [`enumerate_class`], obtained by filtering every partition.
pub fn enumerate_class_filtered(spec: &ClassSpec, max_weight: u32) -> Result<Vec<Partition>> {
    spec.validate()?;
    Ok(enumerate_partitions(max_weight)
        .filter(|p| spec.contains_unchecked(p))
        .collect())
}
