//! Exhaustive property checks shared by the property suite and the acceptance run.
//! Each returns the first violation it finds.

#![allow(dead_code)]

use mfalling::bijections::{
    base_flat, base_flat_with_order, composite_phi_n, delete_part, insert_part, phi_n, stockhofe_keith_traced,
    ReductionOrder,
};
use mfalling::classes::{enumerate_class, enumerate_partitions, ClassSpec};
use mfalling::{Modulus, Partition};

pub type Check = Result<(), String>;

pub fn m(v: u32) -> Modulus {
    Modulus::new(v).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn conjugation_involution(max_weight: u32) -> Check {
    for p in enumerate_partitions(max_weight) {
        let c = p.conjugate();
        ensure(c.weight() == p.weight() && c.conjugate() == p, || format!("conjugation fails on {p}"))?;
    }
    Ok(())
}

/// Both parts of the conjugation lemma, plus λ₁ = s(λ) + s_m(λ).
pub fn conjugation_lemma(max_weight: u32) -> Check {
    let parts: Vec<Partition> = enumerate_partitions(max_weight).collect();
    for mm in 2..=5 {
        let mm = m(mm);
        for p in &parts {
            let c = p.conjugate();
            ensure(p.alt_sum_type(mm) == c.length_type(mm), || format!("s-type of {p} is not the l-type of {c}, m={mm}"))?;
            ensure(p.largest() - p.alt_sum(mm) == c.l_m(mm), || format!("λ₁ − s(λ) ≠ ℓ_m(λ′) for {p}, m={mm}"))?;
            ensure(p.largest() == p.alt_sum(mm) + p.s_m(mm), || format!("λ₁ ≠ s + s_m for {p}, m={mm}"))?;
        }
    }
    Ok(())
}

pub fn distinct_flat_conjugation(max_weight: u32) -> Check {
    for mm in 2..=5 {
        let mm = m(mm);
        let flat = ClassSpec::Flat { m: mm };
        let mut d = enumerate_class(&ClassSpec::Distinct { m: mm }, max_weight).unwrap();
        let mut f: Vec<Partition> = enumerate_class(&flat, max_weight).unwrap().iter().map(Partition::conjugate).collect();
        d.sort();
        f.sort();
        ensure(d == f, || format!("conjugation does not carry D_{mm} onto F_{mm}"))?;
    }
    Ok(())
}

pub fn flat_confluence(max_weight: u32) -> Check {
    let parts: Vec<Partition> = enumerate_partitions(max_weight).collect();
    for mm in 2..=4 {
        let mm = m(mm);
        let flat = ClassSpec::Flat { m: mm };
        for p in &parts {
            let d = base_flat(p, mm);
            ensure(base_flat_with_order(p, mm, ReductionOrder::Largest) == d, || format!("reduction order matters for {p}, m={mm}"))?;
            ensure(flat.contains(&d.base).unwrap(), || format!("base of {p} is not flat, m={mm}"))?;
            let rebuilt: Vec<u32> = (1..=p.len()).map(|i| d.base.part(i) + mm.get() * d.sigma.part(i)).collect();
            ensure(rebuilt == p.parts(), || format!("base + m·sigma does not rebuild {p}, m={mm}"))?;
        }
    }
    Ok(())
}

/// Every intermediate shape of the Stockhofe-Keith map is flat. A missing or
/// ambiguous insertion index surfaces as an error from the map itself.
pub fn sk_insert_flatness(max_weight: u32) -> Check {
    for mm in 2..=4 {
        let mm = m(mm);
        let flat = ClassSpec::Flat { m: mm };
        for p in enumerate_class(&ClassSpec::Regular { m: mm }, max_weight).unwrap() {
            let (_, trace) = stockhofe_keith_traced(&p, mm).map_err(|e| format!("{p}, m={mm}: {e}"))?;
            for step in trace.steps.iter().filter(|s| s.label.starts_with("insert")) {
                ensure(flat.contains(&step.partition).unwrap(), || format!("{p}, m={mm}: {} left F_m", step.label))?;
            }
        }
    }
    Ok(())
}

/// Insertion may not exceed the smallest part inserted so far, so the states
/// checked are the images `φₙ(λ)` with every admissible next part.
pub fn insert_delete_inverse(max_weight: u32) -> Check {
    for mm in 2..=4 {
        let mm = m(mm);
        for c in 1..mm.get() {
            for n in 1..=4 {
                let domain = ClassSpec::ResidueBounded { m: mm, c, n };
                for lambda in enumerate_class(&domain, max_weight).unwrap() {
                    let mu = phi_n(&lambda, mm, c, n).map_err(|e| e.to_string())?;
                    let k_max = lambda.parts().last().map_or(n - 1, |&p| (p - c) / mm.get());
                    for k in 0..=k_max {
                        let part = k * mm.get() + c;
                        if mu.weight() + u64::from(part) > u64::from(max_weight) {
                            break;
                        }
                        let ctx = || format!("{mu} + {part}, m={mm}, c={c}, n={n}");
                        let grown = insert_part(&mu, k, mm, c, n).map_err(|e| format!("{}: {e}", ctx()))?;
                        ensure(grown.weight() == mu.weight() + u64::from(part), || format!("{}: weight", ctx()))?;
                        ensure(grown.alt_sum(mm) == mu.alt_sum(mm) + 1, || format!("{}: s did not grow by one", ctx()))?;
                        let back = delete_part(&grown, mm, c, n).map_err(|e| format!("{}: {e}", ctx()))?;
                        ensure(back == (part, mu.clone()), || format!("{}: deletion gave {back:?}", ctx()))?;
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn c_independence(max_weight: u32) -> Check {
    for mm in 2..=4 {
        let mm = m(mm);
        for n in 1..=3 {
            for p in enumerate_class(&ClassSpec::FallingBounded { m: mm, n }, max_weight).unwrap() {
                let first = composite_phi_n(&p, mm, n, Some(1)).map_err(|e| e.to_string())?;
                for c in 2..mm.get() {
                    let other = composite_phi_n(&p, mm, n, Some(c)).map_err(|e| e.to_string())?;
                    ensure(other == first, || format!("{p}, m={mm}, n={n}: c=1 gives {first}, c={c} gives {other}"))?;
                }
            }
        }
    }
    Ok(())
}
