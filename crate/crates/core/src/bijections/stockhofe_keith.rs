use serde::{Deserialize, Serialize};

use super::{record, Trace};
use crate::classes::{regular_with_length, ClassSpec};
use crate::error::{Error, Result};
use crate::partition::{Modulus, Partition};

/// `λ = m·sigma + base` with `base` m-flat.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatDecomposition {
    pub base: Partition,
    pub sigma: Partition,
}

/// Which violating gap `base_flat` reduces first. Both orders reach the same result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionOrder {
    Smallest,
    Largest,
}

pub fn base_flat(lambda: &Partition, m: Modulus) -> FlatDecomposition {
    base_flat_with_order(lambda, m, ReductionOrder::Smallest)
}

pub fn base_flat_with_order(lambda: &Partition, m: Modulus, order: ReductionOrder) -> FlatDecomposition {
    let step = m.get();
    let mut parts = lambda.parts().to_vec();
    let mut sigma = vec![0u32; parts.len()];
    let violates = |parts: &[u32], i: usize| parts[i] - parts.get(i + 1).copied().unwrap_or(0) >= step;
    loop {
        let mut idx = 0..parts.len();
        let found = match order {
            ReductionOrder::Smallest => idx.find(|&i| violates(&parts, i)),
            ReductionOrder::Largest => idx.rev().find(|&i| violates(&parts, i)),
        };
        let Some(i) = found else { break };
        for j in 0..=i {
            parts[j] -= step;
            sigma[j] += 1;
        }
    }
    FlatDecomposition {
        base: Partition::from_sorted_vec(parts),
        sigma: Partition::from_sorted_vec(sigma),
    }
}

fn flat(m: Modulus) -> ClassSpec {
    ClassSpec::Flat { m }
}

/// Inserts the multiple `part = km` into the m-flat `tau`.
pub fn sk_insert(tau: &Partition, part: u32, m: Modulus) -> Result<Partition> {
    let step = m.get();
    if !flat(m).contains_unchecked(tau) {
        return Err(Error::NotFlat(tau.clone()));
    }
    if part == 0 || part % step != 0 {
        return Err(Error::NotMultiple(part));
    }
    if tau.is_empty() {
        return Ok(Partition::from_sorted_vec(vec![part]));
    }
    let k = (part / step) as usize;
    if part >= tau.largest() + step {
        let mut hits = Vec::new();
        for i in 1..=k {
            let mut cand: Vec<u32> = (1..=i).map(|t| tau.part(t) + step).collect();
            cand.push((k - i) as u32 * step);
            cand.extend((i + 1..=tau.len()).map(|t| tau.part(t)));
            if let Ok(p) = Partition::new(cand.iter().copied()) {
                // A zero in the middle would be silently dropped by `new`.
                let zero_inside = cand.iter().position(|&x| x == 0).is_some_and(|z| z + 1 < cand.len());
                if !zero_inside && flat(m).contains_unchecked(&p) {
                    hits.push(p);
                }
            }
        }
        return match hits.len() {
            0 => Err(Error::NoValidIndex { tau: tau.clone(), part }),
            1 => Ok(hits.pop().unwrap()),
            count => Err(Error::AmbiguousIndex { tau: tau.clone(), part, count }),
        };
    }
    let mut parts = tau.parts().to_vec();
    let at = parts.iter().position(|&x| x < part).unwrap_or(parts.len());
    parts.insert(at, part);
    let out = Partition::from_sorted_vec(parts);
    if !flat(m).contains_unchecked(&out) {
        return Err(Error::Invariant(format!("direct insertion of {part} into {tau} left F_{m}")));
    }
    Ok(out)
}

pub fn stockhofe_keith(lambda: &Partition, m: Modulus) -> Result<Partition> {
    sk_impl(lambda, m, None)
}

pub fn stockhofe_keith_traced(lambda: &Partition, m: Modulus) -> Result<(Partition, Trace)> {
    let mut trace = Trace::new(m);
    let mu = sk_impl(lambda, m, Some(&mut trace))?;
    Ok((mu, trace))
}

fn sk_impl(lambda: &Partition, m: Modulus, mut trace: Option<&mut Trace>) -> Result<Partition> {
    if !(ClassSpec::Regular { m }).contains_unchecked(lambda) {
        return Err(Error::NotMRegular(lambda.clone()));
    }
    record(&mut trace, "input", lambda);
    let FlatDecomposition { base, sigma } = base_flat(lambda, m);
    record(&mut trace, "sigma", &sigma);
    record(&mut trace, "base m-flat", &base);
    let mut tau = base;
    for &col in sigma.conjugate().parts() {
        let part = col * m.get();
        tau = sk_insert(&tau, part, m)?;
        record(&mut trace, format!("insert {part}"), &tau);
    }
    let mu = tau.conjugate();
    record(&mut trace, "conjugate", &mu);
    Ok(mu)
}

/// Exhaustive preimage search: the unique `λ ∈ O_m` of the same weight with
/// `stockhofe_keith(λ) = μ`. Candidates are restricted to `l(λ) = s(μ)`, the
/// length the map is known to transport; injectivity across lengths is checked
/// separately by the bijection contracts.
pub fn sk_inverse(mu: &Partition, m: Modulus, max_weight: u64) -> Result<Partition> {
    if !mu.is_m_distinct(m) {
        return Err(Error::NotInClass {
            partition: mu.clone(),
            class: ClassSpec::Distinct { m }.to_string(),
        });
    }
    let weight = mu.weight();
    if weight > max_weight {
        return Err(Error::GuardExceeded { weight, guard: max_weight });
    }
    let mut found = None;
    for lambda in regular_with_length(weight as u32, m, mu.alt_sum(m) as usize) {
        if stockhofe_keith(&lambda, m)? == *mu {
            if found.is_some() {
                return Err(Error::NotUnique(mu.clone()));
            }
            found = Some(lambda);
        }
    }
    found.ok_or_else(|| Error::NotFound(mu.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.iter().copied()).unwrap()
    }

    fn m3() -> Modulus {
        Modulus::new(3).unwrap()
    }

    #[test]
    fn base_flat_examples() {
        let d = base_flat(&p(&[19, 17, 14, 13, 13, 8, 1]), m3());
        assert_eq!(d.base, p(&[7, 5, 5, 4, 4, 2, 1]));
        assert_eq!(d.sigma, p(&[4, 4, 3, 3, 3, 2]));
        let d = base_flat(&p(&[7]), m3());
        assert_eq!((d.base, d.sigma), (p(&[1]), p(&[2])));
        let flat = p(&[4, 3, 1]);
        assert_eq!(base_flat(&flat, m3()).base, flat);
        assert!(base_flat(&flat, m3()).sigma.is_empty());
    }

    #[test]
    fn insertion_branches() {
        assert_eq!(sk_insert(&Partition::empty(), 6, m3()).unwrap(), p(&[6]));
        assert_eq!(sk_insert(&p(&[1]), 3, m3()).unwrap(), p(&[3, 1]));
        assert_eq!(
            sk_insert(&p(&[7, 5, 5, 4, 4, 2, 1]), 18, m3()).unwrap(),
            p(&[10, 8, 8, 7, 6, 4, 2, 1])
        );
        assert_eq!(sk_insert(&p(&[7]), 3, m3()), Err(Error::NotFlat(p(&[7]))));
        assert_eq!(sk_insert(&p(&[1]), 4, m3()), Err(Error::NotMultiple(4)));
    }

    #[test]
    fn worked_sk_example() {
        let (mu, trace) = stockhofe_keith_traced(&p(&[19, 17, 14, 13, 13, 8, 1]), m3()).unwrap();
        assert_eq!(mu, p(&[11, 10, 9, 9, 8, 8, 6, 5, 5, 4, 4, 2, 2, 1, 1]));
        let labels: Vec<&str> = trace.steps.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(
            labels,
            ["input", "sigma", "base m-flat", "insert 18", "insert 18", "insert 15", "insert 6", "conjugate"]
        );
        assert_eq!(stockhofe_keith(&Partition::empty(), m3()).unwrap(), Partition::empty());
        assert_eq!(
            stockhofe_keith(&p(&[6, 1]), m3()),
            Err(Error::NotMRegular(p(&[6, 1])))
        );
    }

    #[test]
    fn inverse_search() {
        let mu = p(&[11, 10, 9, 9, 8, 8, 6, 5, 5, 4, 4, 2, 2, 1, 1]);
        assert_eq!(sk_inverse(&mu, m3(), 100).unwrap(), p(&[19, 17, 14, 13, 13, 8, 1]));
        assert_eq!(sk_inverse(&Partition::empty(), m3(), 22).unwrap(), Partition::empty());
        assert!(matches!(sk_inverse(&mu, m3(), 22), Err(Error::GuardExceeded { .. })));
    }
}
