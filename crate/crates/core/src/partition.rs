//! Partitions, their conjugates, and the modular statistics built on top of them.
//!
//! Parts are indexed from 1 and every index past the stored length reads as
//! zero, so the alternating sums and ratio chains can be written exactly as
//! they are stated mathematically.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A modulus `m >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::BadModulus(m));
        }
        Ok(Modulus(m))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A nonincreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(values: Vec<u32>) -> Result<Self> {
        Partition::new(values)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Canonicalizes `values`: zeros are dropped, and the remaining values must
    /// already be nonincreasing.
    pub fn new<I: IntoIterator<Item = u32>>(values: I) -> Result<Self> {
        let parts: Vec<u32> = values.into_iter().filter(|&v| v > 0).collect();
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::IncreasingInput(w[0], w[1]));
        }
        Ok(Partition { parts })
    }

    /// Sorts `values` into nonincreasing order before canonicalizing.
    pub fn from_unsorted<I: IntoIterator<Item = u32>>(values: I) -> Self {
        let mut parts: Vec<u32> = values.into_iter().filter(|&v| v > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Caller guarantees `parts` is nonincreasing; trailing zeros are trimmed.
    pub(crate) fn from_sorted_vec(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        debug_assert!(parts.iter().all(|&p| p > 0), "{parts:?}");
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i` (1-based); zero past the end.
    #[inline]
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn largest(&self) -> u32 {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.largest() as usize;
        let mut out = vec![0u32; width];
        for &p in &self.parts {
            for slot in out.iter_mut().take(p as usize) {
                *slot += 1;
            }
        }
        Partition { parts: out }
    }

    /// `k·λ + l·μ`, entrywise with implicit zeros.
    pub fn linear_combine(k: u32, lambda: &Partition, l: u32, mu: &Partition) -> Partition {
        let n = lambda.len().max(mu.len());
        let parts = (1..=n)
            .map(|i| k * lambda.part(i) + l * mu.part(i))
            .collect();
        Partition::from_sorted_vec(parts)
    }

    /// Comma separated parts, e.g. `8,5,5,2,2`; empty string for the empty partition.
    pub fn to_csv(&self) -> String {
        let v: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        v.join(",")
    }

    pub fn residues(&self, m: Modulus) -> Vec<u32> {
        self.parts.iter().map(|&p| p % m.get()).collect()
    }

    pub fn modular_form(&self, m: Modulus) -> ModularForm {
        let cells = self
            .parts
            .iter()
            .map(|&p| ModularCell {
                quotient: p / m.get(),
                residue: p % m.get(),
            })
            .collect();
        ModularForm { modulus: m, cells }
    }

    /// `s_i(λ) = λ_i − λ_{i+1} + λ_{m+i} − λ_{m+i+1} + ⋯` for `1 <= i <= m`.
    pub fn alt_sum_component(&self, m: Modulus, i: u32) -> Result<u32> {
        if i == 0 || i > m.get() {
            return Err(Error::BadIndex { index: i, modulus: m.get() });
        }
        Ok(self.alt_sum_unchecked(m, i))
    }

    fn alt_sum_unchecked(&self, m: Modulus, i: u32) -> u32 {
        let step = m.get() as usize;
        let mut idx = i as usize;
        let mut total = 0;
        while idx <= self.len() {
            total += self.part(idx) - self.part(idx + 1);
            idx += step;
        }
        total
    }

    pub fn alt_sum_type(&self, m: Modulus) -> StatVector {
        let entries = (1..m.get()).map(|i| self.alt_sum_unchecked(m, i)).collect();
        StatVector { modulus: m, entries }
    }

    /// `s(λ)`, the sum of the alternating sum type.
    pub fn alt_sum(&self, m: Modulus) -> u32 {
        (1..m.get()).map(|i| self.alt_sum_unchecked(m, i)).sum()
    }

    /// `s_m(λ)`, deliberately excluded from [`Partition::alt_sum_type`].
    pub fn s_m(&self, m: Modulus) -> u32 {
        self.alt_sum_unchecked(m, m.get())
    }

    /// `ℓ_i(λ)`: number of parts congruent to `i` mod `m`; `i = m` counts multiples of `m`.
    pub fn length_component(&self, m: Modulus, i: u32) -> Result<u32> {
        if i == 0 || i > m.get() {
            return Err(Error::BadIndex { index: i, modulus: m.get() });
        }
        let r = i % m.get();
        Ok(self.parts.iter().filter(|&&p| p % m.get() == r).count() as u32)
    }

    pub fn length_type(&self, m: Modulus) -> StatVector {
        let mut entries = vec![0u32; m.get() as usize - 1];
        for &p in &self.parts {
            let r = p % m.get();
            if r > 0 {
                entries[r as usize - 1] += 1;
            }
        }
        StatVector { modulus: m, entries }
    }

    /// `ℓ(λ)`: number of parts not divisible by `m`.
    pub fn m_length(&self, m: Modulus) -> u32 {
        self.parts.iter().filter(|&&p| p % m.get() != 0).count() as u32
    }

    /// `ℓ_m(λ)`: number of parts divisible by `m`.
    pub fn l_m(&self, m: Modulus) -> u32 {
        self.len() as u32 - self.m_length(m)
    }

    /// Strict ascents in the residue sequence of the stored parts.
    pub fn asc(&self, m: Modulus) -> u32 {
        self.parts
            .windows(2)
            .filter(|w| w[0] % m.get() < w[1] % m.get())
            .count() as u32
    }

    pub fn is_m_falling(&self, m: Modulus) -> bool {
        self.asc(m) == 0
    }

    /// True when no nonzero part occurs `m` or more times.
    pub fn is_m_distinct(&self, m: Modulus) -> bool {
        let m = m.get() as usize;
        let mut run = 0;
        for (idx, &p) in self.parts.iter().enumerate() {
            run = if idx > 0 && self.parts[idx - 1] == p { run + 1 } else { 1 };
            if run >= m {
                return false;
            }
        }
        true
    }

    /// `(fb_i, lb_i)` of block `i`, i.e. of `(λ_{im+1}, …, λ_{im+m})`.
    pub fn fb_lb(&self, m: Modulus, i: usize) -> Result<(usize, usize)> {
        if self.is_empty() || i > (self.len() - 1) / m.get() as usize {
            return Err(Error::BadBlock(i));
        }
        if !self.is_m_distinct(m) {
            return Err(Error::NotInDm(self.clone()));
        }
        Ok(self.fb_lb_unchecked(m, i))
    }

    pub(crate) fn fb_lb_unchecked(&self, m: Modulus, i: usize) -> (usize, usize) {
        let m = m.get() as usize;
        let block: Vec<u32> = (1..=m).map(|t| self.part(i * m + t)).collect();
        let head = block.iter().take_while(|&&x| x == block[0]).count();
        let tail = block.iter().rev().take_while(|&&x| x == block[m - 1]).count();
        (head, m - tail)
    }

    /// One row per part: `⌊p/m⌋` cells labelled `m`, then the residue cell if nonzero.
    pub fn render_modular_ferrers(&self, m: Modulus) -> String {
        let mut out = String::new();
        for cell in self.modular_form(m).cells {
            let mut labels = vec![m.get().to_string(); cell.quotient as usize];
            if cell.residue > 0 {
                labels.push(cell.residue.to_string());
            }
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

/// A length `m−1` statistic tuple such as the alternating sum type or the length type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StatVector {
    modulus: Modulus,
    entries: Vec<u32>,
}

impl StatVector {
    pub fn new(modulus: Modulus, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != modulus.get() as usize - 1 {
            return Err(Error::BadSpec(format!(
                "statistic vector for modulus {modulus} needs {} entries, got {}",
                modulus.get() - 1,
                entries.len()
            )));
        }
        Ok(StatVector { modulus, entries })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entry `i`, 1-based.
    pub fn get(&self, i: usize) -> u32 {
        self.entries[i - 1]
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModularCell {
    pub quotient: u32,
    pub residue: u32,
}

/// Per-part `(quotient, residue)` decomposition with respect to a modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModularForm {
    pub modulus: Modulus,
    pub cells: Vec<ModularCell>,
}

impl ModularForm {
    pub fn residue_sequence(&self) -> Vec<u32> {
        self.cells.iter().map(|c| c.residue).collect()
    }

    pub fn reassemble(&self) -> Partition {
        Partition::from_sorted_vec(
            self.cells
                .iter()
                .map(|c| c.quotient * self.modulus.get() + c.residue)
                .collect(),
        )
    }
}
