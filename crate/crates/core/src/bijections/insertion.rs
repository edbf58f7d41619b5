//! Insertion and deletion of single parts `km+c` for the bijection
//! `φₙ: O_{c,m}ⁿ → L_{c,m}ⁿ` and its inverse `ψₙ`.

use super::{record, Trace};
use crate::classes::{ClassSpec, RatioTerm};
use crate::error::{Error, Result};
use crate::partition::{Modulus, Partition};

fn lecture_hall(m: Modulus, c: u32, n: u32) -> ClassSpec {
    ClassSpec::ResidueLectureHall { m, c, n }
}

fn not_in(partition: &Partition, spec: ClassSpec) -> Error {
    Error::NotInClass {
        partition: partition.clone(),
        class: spec.to_string(),
    }
}

/// `(1^{jm}, (k−j+1)^c, (k−j)^{m−c}, 0, …)` as a dense vector.
fn shift_vector(m: u32, c: u32, k: u32, j: u32) -> Vec<u32> {
    let mut v = vec![1; (j * m) as usize];
    v.extend(std::iter::repeat(k - j + 1).take(c as usize));
    v.extend(std::iter::repeat(k - j).take((m - c) as usize));
    v
}

/// Test I at step `j`. A nonpositive right-hand slot count stops the scan.
fn test_i(mu: &Partition, m: u32, c: u32, n: u32, j: u32) -> bool {
    let left_den = i64::from(n) - 2 * i64::from(j);
    let right_den = left_den - 1;
    if right_den <= 0 {
        return false;
    }
    let left = RatioTerm::new(mu.part((m * j + c) as usize) + 1, left_den);
    let right = RatioTerm::new(mu.part((m * j + m) as usize) + 1, right_den);
    left.compare(&right).is_some_and(|o| o.is_ge())
}

/// Inserts the part `km+c` into `μ ∈ L_{c,m}ⁿ`.
pub fn insert_part(mu: &Partition, k: u32, m: Modulus, c: u32, n: u32) -> Result<Partition> {
    let spec = lecture_hall(m, c, n);
    spec.validate()?;
    let part = u64::from(k) * u64::from(m.get()) + u64::from(c);
    let limit = u64::from(n) * u64::from(m.get());
    if part >= limit {
        return Err(Error::OutOfRange { part, limit });
    }
    if !spec.contains_unchecked(mu) {
        return Err(not_in(mu, spec));
    }
    let mm = m.get();
    let mut j = 0;
    while j < k && test_i(mu, mm, c, n, j) {
        j += 1;
    }
    let shift = shift_vector(mm, c, k, j);
    let width = shift.len().max(mu.len());
    let raw: Vec<u32> = (0..width)
        .map(|i| mu.part(i + 1) + shift.get(i).copied().unwrap_or(0))
        .collect();
    let out = Partition::new(raw).map_err(|e| {
        Error::Invariant(format!("inserting {part} into {mu} gave a non-partition: {e}"))
    })?;
    if !spec.contains_unchecked(&out) {
        return Err(Error::Invariant(format!("inserting {part} into {mu} gave {out}, outside {spec}")));
    }
    Ok(out)
}

/// Removes one part from `μ ∈ L_{c,m}ⁿ`, scanning `(k, j)` in Test D order.
/// Returns the removed part `km+c` and the remainder.
pub fn delete_part(mu: &Partition, m: Modulus, c: u32, n: u32) -> Result<(u32, Partition)> {
    let spec = lecture_hall(m, c, n);
    spec.validate()?;
    if mu.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !spec.contains_unchecked(mu) {
        return Err(not_in(mu, spec));
    }
    let mm = m.get();
    for k in 0..n {
        for j in 0..=k {
            let shift = shift_vector(mm, c, k, j);
            let width = shift.len().max(mu.len());
            let raw: Option<Vec<u32>> = (0..width)
                .map(|i| mu.part(i + 1).checked_sub(shift.get(i).copied().unwrap_or(0)))
                .collect();
            let Some(raw) = raw else { continue };
            // Zeros may only trail.
            if raw.windows(2).any(|w| w[0] < w[1]) {
                continue;
            }
            let rest = Partition::from_sorted_vec(raw);
            if spec.contains_unchecked(&rest) {
                return Ok((k * mm + c, rest));
            }
        }
    }
    Err(Error::Invariant(format!("no deletion applies to {mu} in {spec}")))
}

pub fn phi_n(lambda: &Partition, m: Modulus, c: u32, n: u32) -> Result<Partition> {
    phi_impl(lambda, m, c, n, None)
}

pub fn phi_n_traced(lambda: &Partition, m: Modulus, c: u32, n: u32) -> Result<(Partition, Trace)> {
    let mut trace = Trace::new(m);
    let mu = phi_impl(lambda, m, c, n, Some(&mut trace))?;
    Ok((mu, trace))
}

fn phi_impl(lambda: &Partition, m: Modulus, c: u32, n: u32, mut trace: Option<&mut Trace>) -> Result<Partition> {
    let domain = ClassSpec::ResidueBounded { m, c, n };
    domain.validate()?;
    if !domain.contains_unchecked(lambda) {
        return Err(not_in(lambda, domain));
    }
    record(&mut trace, "input", lambda);
    let mut mu = Partition::empty();
    for &part in lambda.parts() {
        mu = insert_part(&mu, (part - c) / m.get(), m, c, n)?;
        record(&mut trace, format!("insert {part}"), &mu);
    }
    Ok(mu)
}

pub fn psi_n(mu: &Partition, m: Modulus, c: u32, n: u32) -> Result<Partition> {
    let spec = lecture_hall(m, c, n);
    spec.validate()?;
    if !spec.contains_unchecked(mu) {
        return Err(not_in(mu, spec));
    }
    let mut removed = Vec::new();
    let mut rest = mu.clone();
    while !rest.is_empty() {
        let (part, next) = delete_part(&rest, m, c, n)?;
        if removed.last().is_some_and(|&prev| prev > part) {
            return Err(Error::Invariant(format!("deletions from {mu} were not nondecreasing")));
        }
        removed.push(part);
        rest = next;
    }
    removed.reverse();
    Partition::new(removed)
}
