//! Residue relabelings `f_v`, `g_v` and the composite bijection
//! `Φₙ = g_v⁻¹ ∘ φₙ ∘ f_v` from `O_{m↘}ⁿ` onto `L_{m↘}ⁿ`.

use super::insertion::{phi_n, psi_n};
use super::{record, Trace};
use crate::classes::ClassSpec;
use crate::error::{Error, Result};
use crate::partition::{Modulus, Partition, StatVector};

/// Target residue counts `(v₁, …, v_{m−1})` for the inverse relabelings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueVector(pub StatVector);

impl ResidueVector {
    pub fn total(&self) -> u32 {
        self.0.total()
    }

    /// Residues for parts listed in nonincreasing order: `m−1` repeated
    /// `v_{m−1}` times, then `m−2`, down to `1`.
    fn falling_residues(&self) -> Vec<u32> {
        let entries = self.0.entries();
        (1..=entries.len() as u32)
            .rev()
            .flat_map(|r| std::iter::repeat(r).take(entries[r as usize - 1] as usize))
            .collect()
    }
}

fn check_c(m: Modulus, c: u32) -> Result<()> {
    ClassSpec::Residue { m, c }.validate()
}

/// `f_v`: every part `am+r` becomes `am+c`.
pub fn relabel_to_c(lambda: &Partition, m: Modulus, c: u32) -> Result<Partition> {
    check_c(m, c)?;
    let mm = m.get();
    if lambda.parts().iter().any(|&p| p % mm == 0) {
        return Err(Error::HasMultipleOfM(lambda.clone()));
    }
    Ok(Partition::from_sorted_vec(
        lambda.parts().iter().map(|&p| p / mm * mm + c).collect(),
    ))
}

/// `f_v⁻¹`: reassigns falling residues according to `v`, keeping quotients.
pub fn restore_residues(pi: &Partition, m: Modulus, v: &ResidueVector) -> Result<Partition> {
    let mm = m.get();
    if pi.len() as u64 != u64::from(v.total()) {
        return Err(Error::CountMismatch {
            expected: u64::from(v.total()),
            found: pi.len() as u64,
        });
    }
    if pi.is_empty() {
        return Ok(Partition::empty());
    }
    let residue = pi.part(1) % mm;
    if residue == 0 || pi.parts().iter().any(|&p| p % mm != residue) {
        return Err(Error::NotInClass {
            partition: pi.clone(),
            class: "O_{c,m}".into(),
        });
    }
    let parts: Vec<u32> = pi
        .parts()
        .iter()
        .zip(v.falling_residues())
        .map(|(&p, r)| p / mm * mm + r)
        .collect();
    Partition::new(parts)
}

/// `g_v`: on the conjugate, every part not divisible by `m` gets residue `c`.
pub fn g_forward(mu: &Partition, m: Modulus, c: u32) -> Result<Partition> {
    check_c(m, c)?;
    if !mu.is_m_distinct(m) {
        return Err(Error::NotInClass {
            partition: mu.clone(),
            class: ClassSpec::Distinct { m }.to_string(),
        });
    }
    let mm = m.get();
    let columns: Vec<u32> = mu
        .conjugate()
        .parts()
        .iter()
        .map(|&p| if p % mm == 0 { p } else { p / mm * mm + c })
        .collect();
    let relabelled = Partition::new(columns)
        .map_err(|e| Error::Invariant(format!("relabelling the conjugate of {mu}: {e}")))?;
    Ok(relabelled.conjugate())
}

/// `g_v⁻¹`: on the conjugate, the non-multiples of `m` receive falling residues from `v`.
pub fn g_inverse(rho: &Partition, m: Modulus, v: &ResidueVector) -> Result<Partition> {
    let mm = m.get();
    let columns = rho.conjugate();
    let available = columns.m_length(m);
    if available != v.total() {
        return Err(Error::CountMismatch {
            expected: u64::from(v.total()),
            found: u64::from(available),
        });
    }
    let mut residues = v.falling_residues().into_iter();
    let relabelled: Vec<u32> = columns
        .parts()
        .iter()
        .map(|&p| {
            if p % mm == 0 {
                p
            } else {
                p / mm * mm + residues.next().expect("counted above")
            }
        })
        .collect();
    let relabelled = Partition::new(relabelled)
        .map_err(|e| Error::Invariant(format!("relabelling the conjugate of {rho}: {e}")))?;
    let mu = relabelled.conjugate();
    if !block_condition_holds(&mu, m) {
        return Err(Error::Invariant(format!(
            "g inverse produced {mu}, which breaks lb_i <= fb_(i+1)"
        )));
    }
    Ok(mu)
}

/// `lb_i ≤ fb_{i+1}` for every consecutive pair of blocks.
pub fn block_condition_holds(mu: &Partition, m: Modulus) -> bool {
    if mu.is_empty() {
        return true;
    }
    let blocks = (mu.len() - 1) / m.get() as usize;
    (0..blocks).all(|i| mu.fb_lb_unchecked(m, i).1 <= mu.fb_lb_unchecked(m, i + 1).0)
}

pub fn composite_phi_n(lambda: &Partition, m: Modulus, n: u32, c: Option<u32>) -> Result<Partition> {
    composite_impl(lambda, m, n, c, None)
}

pub fn composite_phi_n_traced(
    lambda: &Partition,
    m: Modulus,
    n: u32,
    c: Option<u32>,
) -> Result<(Partition, Trace)> {
    let mut trace = Trace::new(m);
    let mu = composite_impl(lambda, m, n, c, Some(&mut trace))?;
    Ok((mu, trace))
}

fn composite_impl(
    lambda: &Partition,
    m: Modulus,
    n: u32,
    c: Option<u32>,
    mut trace: Option<&mut Trace>,
) -> Result<Partition> {
    let c = c.unwrap_or(m.get() - 1);
    let domain = ClassSpec::FallingBounded { m, n };
    domain.validate()?;
    check_c(m, c)?;
    if !domain.contains_unchecked(lambda) {
        return Err(Error::NotInClass {
            partition: lambda.clone(),
            class: domain.to_string(),
        });
    }
    record(&mut trace, "input", lambda);
    let v = ResidueVector(lambda.length_type(m));
    let relabelled = relabel_to_c(lambda, m, c)?;
    record(&mut trace, format!("relabel residues to {c}"), &relabelled);
    let inserted = phi_n(&relabelled, m, c, n)?;
    record(&mut trace, format!("phi_{n}"), &inserted);
    record(&mut trace, "conjugate", &inserted.conjugate());
    let mu = g_inverse(&inserted, m, &v)?;
    record(&mut trace, "restore residues on conjugate", &mu.conjugate());
    record(&mut trace, "conjugate", &mu);
    let codomain = ClassSpec::FallingLectureHall { m, n };
    if !codomain.contains_unchecked(&mu) {
        return Err(Error::Invariant(format!("{lambda} mapped to {mu}, outside {codomain}")));
    }
    Ok(mu)
}

pub fn composite_inverse(mu: &Partition, m: Modulus, n: u32, c: Option<u32>) -> Result<Partition> {
    let c = c.unwrap_or(m.get() - 1);
    let domain = ClassSpec::FallingLectureHall { m, n };
    domain.validate()?;
    check_c(m, c)?;
    if !domain.contains_unchecked(mu) {
        return Err(Error::NotInClass {
            partition: mu.clone(),
            class: domain.to_string(),
        });
    }
    let v = ResidueVector(mu.alt_sum_type(m));
    let rho = g_forward(mu, m, c)?;
    let pi = psi_n(&rho, m, c, n)?;
    restore_residues(&pi, m, &v)
}
