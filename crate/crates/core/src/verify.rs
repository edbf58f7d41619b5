//! Theorem-by-theorem verification: coefficient-exact series comparisons,
//! bijection contracts, and replay of the worked examples.
//!
//! A failing check is reported, never raised: every report carries the first
//! counterexample it found.

use std::collections::HashSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bijections::{
    base_flat, composite_inverse, composite_phi_n, insert_part, phi_n, psi_n, stockhofe_keith,
};
use crate::classes::{class_of_weight, enumerate_class, ClassSpec};
use crate::error::{Error, Result};
use crate::partition::{Modulus, Partition};
use crate::series::{
    class_generating_function, geometric_product, gf_falling_limit_rhs, gf_falling_rhs, glaisher_lhs,
    glaisher_rhs, Monomial, Selector, TruncatedSeries, ZMode,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    LectureHall,
    KeithXiong,
    FallingLectureHall,
    OneParameterRefinement,
    StockhofeKeith,
    ResidueLectureHall,
    ResidueLimit,
    FallingGeneratingFunction,
    Glaisher,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::LectureHall,
        TheoremId::KeithXiong,
        TheoremId::FallingLectureHall,
        TheoremId::OneParameterRefinement,
        TheoremId::StockhofeKeith,
        TheoremId::ResidueLectureHall,
        TheoremId::ResidueLimit,
        TheoremId::FallingGeneratingFunction,
        TheoremId::Glaisher,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::LectureHall => "T1.1",
            TheoremId::KeithXiong => "T1.2",
            TheoremId::FallingLectureHall => "T1.3",
            TheoremId::OneParameterRefinement => "T1.4",
            TheoremId::StockhofeKeith => "T2.3",
            TheoremId::ResidueLectureHall => "T3.1",
            TheoremId::ResidueLimit => "T3.2-limit",
            TheoremId::FallingGeneratingFunction => "GF4",
            TheoremId::Glaisher => "Glaisher",
        }
    }

    /// Default truncation for a check that finishes in seconds.
    pub fn default_max_weight(&self) -> u32 {
        match self {
            TheoremId::LectureHall => 30,
            TheoremId::KeithXiong
            | TheoremId::FallingLectureHall
            | TheoremId::OneParameterRefinement
            | TheoremId::StockhofeKeith => 22,
            TheoremId::ResidueLectureHall | TheoremId::Glaisher => 25,
            TheoremId::ResidueLimit | TheoremId::FallingGeneratingFunction => 20,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Usage(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Params {
    pub m: Option<u32>,
    pub c: Option<u32>,
    pub n: Option<u32>,
    pub max_weight: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceSummary {
    pub weight: u32,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub slices: Vec<SliceSummary>,
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none() && self.slices.iter().all(|s| s.matched)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: Params,
    pub checks: Vec<CheckResult>,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct SliceRecord<'a> {
    theorem: &'a str,
    check: &'a str,
    m: Option<u32>,
    c: Option<u32>,
    n: Option<u32>,
    max_weight: Option<u32>,
    weight: u32,
    lhs_terms: usize,
    rhs_terms: usize,
    status: &'a str,
}

#[derive(Serialize)]
struct SummaryRecord<'a> {
    theorem: &'a str,
    check: &'a str,
    m: Option<u32>,
    c: Option<u32>,
    n: Option<u32>,
    max_weight: Option<u32>,
    status: &'a str,
    counterexample: Option<&'a str>,
}

fn status_str(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    /// Line-delimited JSON: one record per compared slice, then one summary per
    /// check. Timing is left out so that reports are reproducible byte for byte.
    pub fn to_jsonl(&self) -> String {
        let p = self.params;
        let mut out = String::new();
        for check in &self.checks {
            for s in &check.slices {
                let rec = SliceRecord {
                    theorem: &self.theorem,
                    check: &check.name,
                    m: p.m,
                    c: p.c,
                    n: p.n,
                    max_weight: p.max_weight,
                    weight: s.weight,
                    lhs_terms: s.lhs_terms,
                    rhs_terms: s.rhs_terms,
                    status: status_str(s.matched),
                };
                out.push_str(&serde_json::to_string(&rec).expect("plain record"));
                out.push('\n');
            }
            let rec = SummaryRecord {
                theorem: &self.theorem,
                check: &check.name,
                m: p.m,
                c: p.c,
                n: p.n,
                max_weight: p.max_weight,
                status: status_str(check.passed()),
                counterexample: check.counterexample.as_deref(),
            };
            out.push_str(&serde_json::to_string(&rec).expect("plain record"));
            out.push('\n');
        }
        out
    }

    /// Human-readable summary, without timing.
    pub fn to_text(&self) -> String {
        let p = self.params;
        let mut out = String::new();
        let mut head = self.theorem.clone();
        for (key, val) in [("m", p.m), ("c", p.c), ("n", p.n), ("max_weight", p.max_weight)] {
            if let Some(v) = val {
                let _ = write!(head, " {key}={v}");
            }
        }
        let _ = writeln!(out, "{head}: {}", if self.passed() { "PASS" } else { "FAIL" });
        for check in &self.checks {
            let matched = check.slices.iter().filter(|s| s.matched).count();
            let _ = writeln!(
                out,
                "  [{}] {}: {matched}/{} slices matched",
                status_str(check.passed()),
                check.name,
                check.slices.len()
            );
            if let Some(ce) = &check.counterexample {
                let _ = writeln!(out, "    counterexample: {ce}");
            }
        }
        out
    }
}

/// Coefficient-exact comparison, one slice per q-degree.
pub fn compare_series(name: &str, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> CheckResult {
    let bound = lhs.bound().min(rhs.bound());
    let mut counterexample = if lhs.bound() != rhs.bound() {
        Some(format!("truncation bounds differ: {} vs {}", lhs.bound(), rhs.bound()))
    } else {
        None
    };
    let mut slices = Vec::new();
    for d in 0..=bound {
        let a = lhs.slice(d);
        let b = rhs.slice(d);
        let matched = a == b;
        if !matched && counterexample.is_none() {
            let diff = a
                .iter()
                .map(|(e, _)| *e)
                .chain(b.iter().map(|(e, _)| *e))
                .find(|e| lhs.coefficient(e) != rhs.coefficient(e))
                .expect("slices differ");
            counterexample = Some(format!(
                "{diff}: lhs {} vs rhs {}",
                lhs.coefficient(diff),
                rhs.coefficient(diff)
            ));
        }
        slices.push(SliceSummary {
            weight: d,
            lhs_terms: a.len(),
            rhs_terms: b.len(),
            matched,
        });
    }
    CheckResult {
        name: name.to_string(),
        slices,
        counterexample,
    }
}

type MapFn<'a> = Box<dyn Fn(&Partition) -> Result<Partition> + Sync + 'a>;
type StatFn<'a> = Box<dyn Fn(&Partition) -> Vec<u32> + Sync + 'a>;

/// A claimed weight-preserving bijection between two classes that carries one
/// statistic onto another.
pub struct BijectionContract<'a> {
    pub name: String,
    pub domain: ClassSpec,
    pub codomain: ClassSpec,
    pub forward: MapFn<'a>,
    pub inverse: Option<MapFn<'a>>,
    pub domain_stat: StatFn<'a>,
    pub codomain_stat: StatFn<'a>,
}

impl BijectionContract<'_> {
    /// Totality, image in codomain, weight and statistic transport, injectivity,
    /// per-weight cardinality, and round trip through the inverse if registered.
    pub fn check(&self, max_weight: u32) -> Result<CheckResult> {
        let per_weight: Vec<(SliceSummary, Option<String>)> = (0..=max_weight)
            .into_par_iter()
            .map(|w| self.check_weight(w))
            .collect::<Result<_>>()?;
        let mut counterexample = None;
        let mut slices = Vec::with_capacity(per_weight.len());
        for (slice, ce) in per_weight {
            if counterexample.is_none() {
                counterexample = ce;
            }
            slices.push(slice);
        }
        Ok(CheckResult {
            name: self.name.clone(),
            slices,
            counterexample,
        })
    }

    fn check_weight(&self, w: u32) -> Result<(SliceSummary, Option<String>)> {
        let domain = class_of_weight(&self.domain, w)?;
        let codomain = class_of_weight(&self.codomain, w)?;
        let mut seen = HashSet::with_capacity(domain.len());
        let mut ce: Option<String> = None;
        for lambda in &domain {
            let fail = |msg: String| Some(format!("{lambda}: {msg}"));
            let mu = match (self.forward)(lambda) {
                Ok(mu) => mu,
                Err(e) => {
                    ce = ce.or_else(|| fail(format!("map failed: {e}")));
                    continue;
                }
            };
            if mu.weight() != lambda.weight() {
                ce = ce.or_else(|| fail(format!("weight changed to {mu}")));
            }
            if !self.codomain.contains_unchecked(&mu) {
                ce = ce.or_else(|| fail(format!("image {mu} is outside {}", self.codomain)));
            }
            let (a, b) = ((self.domain_stat)(lambda), (self.codomain_stat)(&mu));
            if a != b {
                ce = ce.or_else(|| fail(format!("statistic {a:?} became {b:?} on {mu}")));
            }
            if let Some(inv) = &self.inverse {
                match inv(&mu) {
                    Ok(back) if back == *lambda => {}
                    Ok(back) => ce = ce.or_else(|| fail(format!("inverse of {mu} gave {back}"))),
                    Err(e) => ce = ce.or_else(|| fail(format!("inverse of {mu} failed: {e}"))),
                }
            }
            if !seen.insert(mu.clone()) {
                ce = ce.or_else(|| fail(format!("image {mu} was already hit")));
            }
        }
        if domain.len() != codomain.len() && ce.is_none() {
            ce = Some(format!(
                "weight {w}: {} domain members but {} codomain members",
                domain.len(),
                codomain.len()
            ));
        }
        let slice = SliceSummary {
            weight: w,
            lhs_terms: domain.len(),
            rhs_terms: codomain.len(),
            matched: ce.is_none(),
        };
        Ok((slice, ce))
    }
}

struct Resolved {
    m: Modulus,
    c: u32,
    n: u32,
    max_weight: u32,
}

fn resolve(id: TheoremId, params: &Params) -> Result<Resolved> {
    let m = Modulus::new(params.m.unwrap_or(3))?;
    let c = params.c.unwrap_or(m.get() - 1);
    let n = params.n.unwrap_or(3);
    let max_weight = params.max_weight.unwrap_or(id.default_max_weight());
    if c == 0 || c >= m.get() {
        return Err(Error::Usage(format!("residue c={c} must lie in 1..={}", m.get() - 1)));
    }
    if n == 0 {
        return Err(Error::Usage("order n must be at least 1".into()));
    }
    Ok(Resolved { m, c, n, max_weight })
}

/// Runs a theorem check with `jobs` worker threads. Reports do not depend on `jobs`.
pub fn check_theorem(id: TheoremId, params: &Params, jobs: usize) -> Result<VerificationReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    pool.install(|| run_theorem(id, params))
}

fn run_theorem(id: TheoremId, params: &Params) -> Result<VerificationReport> {
    let start = Instant::now();
    let r = resolve(id, params)?;
    let (m, c, n, nn) = (r.m, r.c, r.n, r.max_weight);
    let gf = |spec: ClassSpec, sel: Selector| class_generating_function(&spec, sel, nn);
    let mut shown = Params {
        max_weight: Some(nn),
        ..Params::default()
    };
    let checks = match id {
        TheoremId::LectureHall => {
            shown.n = Some(n);
            let lhs = gf(ClassSpec::LectureHall { n }, Selector::Weight)?;
            let odd: Vec<Monomial> = (1..=n).map(|i| Monomial::q(2 * i - 1)).collect();
            vec![compare_series("L_n vs prod 1/(1-q^(2i-1))", &lhs, &geometric_product(&odd, nn)?)]
        }
        TheoremId::KeithXiong => {
            shown.m = Some(m.get());
            let lhs = gf(ClassSpec::Distinct { m }, Selector::AltSumType)?;
            let rhs = gf(ClassSpec::Regular { m }, Selector::LengthType)?;
            vec![compare_series("D_m s-type vs O_m l-type", &lhs, &rhs)]
        }
        TheoremId::OneParameterRefinement => {
            shown.m = Some(m.get());
            let lhs = gf(ClassSpec::Distinct { m }, Selector::AltSumTypeWithSm)?;
            let rhs = gf(ClassSpec::Regular { m }, Selector::LengthTypeWithAsc)?;
            vec![compare_series("D_m (s-type, s_m) vs O_m (l-type, floor(l1/m)-asc)", &lhs, &rhs)]
        }
        TheoremId::StockhofeKeith => {
            shown.m = Some(m.get());
            vec![sk_contract(m).check(nn)?]
        }
        TheoremId::FallingLectureHall => {
            shown.m = Some(m.get());
            shown.n = Some(n);
            let lhs = gf(ClassSpec::FallingLectureHall { m, n }, Selector::AltSumType)?;
            let rhs = gf(ClassSpec::FallingBounded { m, n }, Selector::LengthType)?;
            vec![
                compare_series("L_m-falling^n s-type vs O_m-falling^n l-type", &lhs, &rhs),
                composite_contract(m, n, None).check(nn)?,
                c_independence(m, n, nn)?,
            ]
        }
        TheoremId::ResidueLectureHall => {
            shown.m = Some(m.get());
            shown.c = Some(c);
            shown.n = Some(n);
            residue_checks(m, c, n, nn)?
        }
        TheoremId::ResidueLimit => {
            shown.m = Some(m.get());
            shown.c = Some(c);
            let big_n = nn / m.get() + 1;
            shown.n = Some(big_n);
            let mut checks = residue_checks(m, c, big_n, nn)?;
            let unbounded = gf(ClassSpec::Residue { m, c }, Selector::MLength)?;
            let bounded = gf(ClassSpec::ResidueBounded { m, c, n: big_n }, Selector::MLength)?;
            checks.push(compare_series("O_{c,m}^n stabilizes to O_{c,m}", &bounded, &unbounded));
            let distinct = gf(ClassSpec::DistinctResidue { m, c }, Selector::AltSum)?;
            checks.push(compare_series("D_{c,m} z^s vs O_{c,m} z^l", &distinct, &unbounded));
            let gens: Vec<Monomial> = (0..)
                .map(|j| j * m.get() + c)
                .take_while(|&d| d <= nn)
                .map(|d| Monomial::zq(1, d))
                .collect();
            checks.push(compare_series(
                "O_{c,m} vs prod_j 1/(1-zq^(jm+c))",
                &unbounded,
                &geometric_product(&gens, nn)?,
            ));
            checks
        }
        TheoremId::FallingGeneratingFunction => {
            shown.m = Some(m.get());
            shown.n = Some(n);
            let bounded = ClassSpec::FallingBounded { m, n };
            let multi = gf(bounded, Selector::LengthType)?;
            let single = gf(bounded, Selector::MLength)?;
            let big_n = nn / m.get() + 1;
            let stable = gf(ClassSpec::FallingBounded { m, n: big_n }, Selector::LengthType)?;
            let limit_multi = gf(ClassSpec::Falling { m }, Selector::LengthType)?;
            let limit_single = gf(ClassSpec::Falling { m }, Selector::MLength)?;
            vec![
                compare_series("O_m-falling^n l-type vs sum h_i [n-1+i,i]_{q^m}", &multi, &gf_falling_rhs(m, n, ZMode::Multi, nn)?),
                compare_series("O_m-falling^n z^l vs sum [m-2+i,i]_q [n-1+i,i]_{q^m} z^i q^i", &single, &gf_falling_rhs(m, n, ZMode::Single, nn)?),
                compare_series("O_m-falling^n stabilizes for n > N/m", &stable, &limit_multi),
                compare_series("O_m-falling l-type vs n->infinity form", &limit_multi, &gf_falling_limit_rhs(m, ZMode::Multi, nn)?),
                compare_series("O_m-falling z^l vs n->infinity form", &limit_single, &gf_falling_limit_rhs(m, ZMode::Single, nn)?),
            ]
        }
        TheoremId::Glaisher => {
            shown.m = Some(m.get());
            let lhs = glaisher_lhs(m, nn);
            let rhs = glaisher_rhs(m, nn);
            vec![
                compare_series("prod (1+q^j+...+q^((m-1)j)) vs prod_{m !| i} 1/(1-q^i)", &lhs, &rhs),
                compare_series("D_m count vs product", &gf(ClassSpec::Distinct { m }, Selector::Weight)?, &lhs),
                compare_series("O_m count vs product", &gf(ClassSpec::Regular { m }, Selector::Weight)?, &rhs),
            ]
        }
    };
    Ok(VerificationReport {
        theorem: id.as_str().to_string(),
        params: shown,
        checks,
        elapsed: start.elapsed(),
    })
}

fn residue_checks(m: Modulus, c: u32, n: u32, nn: u32) -> Result<Vec<CheckResult>> {
    let gf = |spec: ClassSpec, sel: Selector| class_generating_function(&spec, sel, nn);
    let regular = gf(ClassSpec::ResidueBounded { m, c, n }, Selector::MLength)?;
    let hall = gf(ClassSpec::ResidueLectureHall { m, c, n }, Selector::AltSum)?;
    let gens: Vec<Monomial> = (0..n).map(|j| Monomial::zq(1, j * m.get() + c)).collect();
    let product = geometric_product(&gens, nn)?;
    Ok(vec![
        compare_series("O_{c,m}^n z^l vs L_{c,m}^n z^s", &regular, &hall),
        compare_series("O_{c,m}^n z^l vs prod 1/(1-zq^(jm+c))", &regular, &product),
        residue_contract(m, c, n).check(nn)?,
    ])
}

pub fn sk_contract<'a>(m: Modulus) -> BijectionContract<'a> {
    BijectionContract {
        name: "Stockhofe-Keith map O_m -> D_m".into(),
        domain: ClassSpec::Regular { m },
        codomain: ClassSpec::Distinct { m },
        forward: Box::new(move |l| stockhofe_keith(l, m)),
        inverse: None,
        domain_stat: Box::new(move |l| {
            let mut v = l.length_type(m).entries().to_vec();
            let extra = l.largest() / m.get() - l.asc(m);
            v.push(extra);
            v.push(l.m_length(m) + extra);
            v
        }),
        codomain_stat: Box::new(move |mu| {
            let mut v = mu.alt_sum_type(m).entries().to_vec();
            v.push(mu.s_m(m));
            v.push(mu.largest());
            v
        }),
    }
}

pub fn residue_contract<'a>(m: Modulus, c: u32, n: u32) -> BijectionContract<'a> {
    BijectionContract {
        name: "phi_n O_{c,m}^n -> L_{c,m}^n".into(),
        domain: ClassSpec::ResidueBounded { m, c, n },
        codomain: ClassSpec::ResidueLectureHall { m, c, n },
        forward: Box::new(move |l| phi_n(l, m, c, n)),
        inverse: Some(Box::new(move |mu| psi_n(mu, m, c, n))),
        domain_stat: Box::new(move |l| vec![l.m_length(m)]),
        codomain_stat: Box::new(move |mu| vec![mu.alt_sum(m)]),
    }
}

pub fn composite_contract<'a>(m: Modulus, n: u32, c: Option<u32>) -> BijectionContract<'a> {
    BijectionContract {
        name: format!("composite Phi_n O_m-falling^n -> L_m-falling^n (c={})", c.unwrap_or(m.get() - 1)),
        domain: ClassSpec::FallingBounded { m, n },
        codomain: ClassSpec::FallingLectureHall { m, n },
        forward: Box::new(move |l| composite_phi_n(l, m, n, c)),
        inverse: Some(Box::new(move |mu| composite_inverse(mu, m, n, c))),
        domain_stat: Box::new(move |l| l.length_type(m).entries().to_vec()),
        codomain_stat: Box::new(move |mu| mu.alt_sum_type(m).entries().to_vec()),
    }
}

/// The composite map gives the same image for every admissible `c`.
pub fn c_independence(m: Modulus, n: u32, max_weight: u32) -> Result<CheckResult> {
    let domain = ClassSpec::FallingBounded { m, n };
    let per_weight: Vec<(SliceSummary, Option<String>)> = (0..=max_weight)
        .into_par_iter()
        .map(|w| {
            let members = class_of_weight(&domain, w)?;
            let mut ce = None;
            for lambda in &members {
                let images: Vec<Result<Partition>> =
                    (1..m.get()).map(|c| composite_phi_n(lambda, m, n, Some(c))).collect();
                if images.iter().any(|r| r.as_ref().ok() != images[0].as_ref().ok() || r.is_err()) {
                    let shown: Vec<String> = images
                        .iter()
                        .map(|r| r.as_ref().map_or_else(|e| e.to_string(), |p| p.to_string()))
                        .collect();
                    ce = ce.or_else(|| Some(format!("{lambda}: images by c = {}", shown.join(" | "))));
                }
            }
            let slice = SliceSummary {
                weight: w,
                lhs_terms: members.len(),
                rhs_terms: members.len(),
                matched: ce.is_none(),
            };
            Ok((slice, ce))
        })
        .collect::<Result<_>>()?;
    let counterexample = per_weight.iter().find_map(|(_, ce)| ce.clone());
    Ok(CheckResult {
        name: "composite Phi_n is independent of c".into(),
        slices: per_weight.into_iter().map(|(s, _)| s).collect(),
        counterexample,
    })
}

/// `(O_{3↘}^{(3,2)}, L_{3↘}^{(3,2)})` pairs under the composite map with `m = n = 3`.
pub const TABLE1: [(&[u32], &[u32]); 21] = [
    (&[8, 8, 7, 7, 7], &[15, 12, 10]),
    (&[8, 8, 7, 7, 4], &[14, 11, 9]),
    (&[8, 8, 7, 7, 1], &[13, 10, 8]),
    (&[8, 8, 7, 4, 4], &[12, 9, 8, 1, 1]),
    (&[8, 8, 7, 4, 1], &[12, 9, 7]),
    (&[8, 8, 7, 1, 1], &[11, 8, 6]),
    (&[8, 8, 4, 4, 4], &[11, 8, 7, 1, 1]),
    (&[8, 8, 4, 4, 1], &[10, 7, 6, 1, 1]),
    (&[8, 8, 4, 1, 1], &[10, 7, 5]),
    (&[8, 8, 1, 1, 1], &[9, 6, 4]),
    (&[8, 5, 4, 4, 4], &[9, 6, 6, 2, 2]),
    (&[8, 5, 4, 4, 1], &[9, 6, 5, 1, 1]),
    (&[8, 5, 4, 1, 1], &[8, 5, 4, 1, 1]),
    (&[8, 5, 1, 1, 1], &[8, 5, 3]),
    (&[8, 2, 1, 1, 1], &[7, 4, 2]),
    (&[5, 5, 4, 4, 4], &[8, 5, 5, 2, 2]),
    (&[5, 5, 4, 4, 1], &[7, 4, 4, 2, 2]),
    (&[5, 5, 4, 1, 1], &[7, 4, 3, 1, 1]),
    (&[5, 5, 1, 1, 1], &[6, 3, 2, 1, 1]),
    (&[5, 2, 1, 1, 1], &[6, 3, 1]),
    (&[2, 2, 1, 1, 1], &[5, 2]),
];

pub fn table1_rows() -> Vec<(Partition, Partition)> {
    TABLE1
        .iter()
        .map(|(l, r)| {
            (
                Partition::new(l.iter().copied()).expect("table row"),
                Partition::new(r.iter().copied()).expect("table row"),
            )
        })
        .collect()
}

pub fn reproduce_table1() -> Result<VerificationReport> {
    reproduce_table1_with(&table1_rows())
}

/// Checks each `(λ, μ)` row against the composite map with `m = n = 3`, and
/// both columns against the enumerated type-(3,2) classes.
pub fn reproduce_table1_with(rows: &[(Partition, Partition)]) -> Result<VerificationReport> {
    let start = Instant::now();
    let m = Modulus::new(3)?;
    let n = 3;
    let mut slices = Vec::new();
    let mut ce = None;
    for (lambda, expected) in rows {
        let got = composite_phi_n(lambda, m, n, None);
        let matched = got.as_ref() == Ok(expected);
        if !matched && ce.is_none() {
            ce = Some(match got {
                Ok(mu) => format!("row {lambda}: expected {expected}, computed {mu}"),
                Err(e) => format!("row {lambda}: {e}"),
            });
        }
        slices.push(SliceSummary {
            weight: lambda.weight() as u32,
            lhs_terms: 1,
            rhs_terms: 1,
            matched,
        });
    }
    let rows_check = CheckResult {
        name: "rows".into(),
        slices,
        counterexample: ce,
    };
    let max_weight = rows
        .iter()
        .map(|(l, r)| l.weight().max(r.weight()))
        .max()
        .unwrap_or(0) as u32;
    let target = [3, 2];
    let mut left: Vec<Partition> = enumerate_class(&ClassSpec::FallingBounded { m, n }, max_weight)?
        .into_iter()
        .filter(|p| p.length_type(m).entries() == target)
        .collect();
    let mut right: Vec<Partition> = enumerate_class(&ClassSpec::FallingLectureHall { m, n }, max_weight)?
        .into_iter()
        .filter(|p| p.alt_sum_type(m).entries() == target)
        .collect();
    let column = |name: &str, found: &mut Vec<Partition>, listed: Vec<Partition>| {
        let mut listed = listed;
        found.sort();
        listed.sort();
        CheckResult {
            name: name.into(),
            slices: vec![SliceSummary {
                weight: max_weight,
                lhs_terms: found.len(),
                rhs_terms: listed.len(),
                matched: *found == listed,
            }],
            counterexample: (*found != listed).then(|| {
                format!("enumerated {} members, table lists {}", found.len(), listed.len())
            }),
        }
    };
    let left_check = column(
        "left column = O_3-falling^3 of l-type (3,2)",
        &mut left,
        rows.iter().map(|(l, _)| l.clone()).collect(),
    );
    let right_check = column(
        "right column = L_3-falling^3 of s-type (3,2)",
        &mut right,
        rows.iter().map(|(_, r)| r.clone()).collect(),
    );
    Ok(VerificationReport {
        theorem: "pair-table".into(),
        params: Params {
            m: Some(3),
            c: None,
            n: Some(3),
            max_weight: None,
        },
        checks: vec![rows_check, left_check, right_check],
        elapsed: start.elapsed(),
    })
}

fn example_check(name: &str, got: Result<Partition>, expected: &[u32]) -> CheckResult {
    let expected = Partition::new(expected.iter().copied()).expect("literal partition");
    let matched = got.as_ref() == Ok(&expected);
    let counterexample = (!matched).then(|| match &got {
        Ok(p) => format!("expected {expected}, computed {p}"),
        Err(e) => format!("expected {expected}, failed: {e}"),
    });
    CheckResult {
        name: name.into(),
        slices: vec![SliceSummary {
            weight: expected.weight() as u32,
            lhs_terms: 1,
            rhs_terms: 1,
            matched,
        }],
        counterexample,
    }
}

/// Replays the worked examples end to end.
pub fn reproduce_figures() -> Result<VerificationReport> {
    let start = Instant::now();
    let m = Modulus::new(3)?;
    let p = |v: &[u32]| Partition::new(v.iter().copied()).expect("literal partition");
    let sk_example = p(&[19, 17, 14, 13, 13, 8, 1]);
    let decomposition = base_flat(&sk_example, m);
    let checks = vec![
        example_check("sk example base m-flat", Ok(decomposition.base), &[7, 5, 5, 4, 4, 2, 1]),
        example_check("sk example sigma", Ok(decomposition.sigma), &[4, 4, 3, 3, 3, 2]),
        example_check(
            "sk example Stockhofe-Keith map",
            stockhofe_keith(&sk_example, m),
            &[11, 10, 9, 9, 8, 8, 6, 5, 5, 4, 4, 2, 2, 1, 1],
        ),
        example_check(
            "insertion example phi_5",
            phi_n(&p(&[11, 11, 8, 8, 8, 5, 5]), m, 2, 5),
            &[13, 13, 10, 7, 7, 4, 1, 1],
        ),
        example_check("composite example Phi_3", composite_phi_n(&p(&[5, 5, 4, 4, 4]), m, 3, None), &[8, 5, 5, 2, 2]),
        example_check(
            "insert 8 into (3,3,2), n=5",
            insert_part(&p(&[3, 3, 2]), 2, m, 2, 5),
            &[4, 4, 3, 2, 2, 1],
        ),
    ];
    Ok(VerificationReport {
        theorem: "worked-examples".into(),
        params: Params {
            m: Some(3),
            ..Params::default()
        },
        checks,
        elapsed: start.elapsed(),
    })
}
