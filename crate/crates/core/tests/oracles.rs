//! Library results checked against independent computations: recurrences,
//! coin-change counts, polynomial division, and brute-force filters.

use mfalling::classes::{class_of_weight, enumerate_class, enumerate_class_filtered, ClassSpec};
use mfalling::series::{gauss_binomial, gauss_poly, homog_sym, Monomial};
use mfalling::{Modulus, Partition};
use num_bigint::BigInt;

fn m(v: u32) -> Modulus {
    Modulus::new(v).unwrap()
}

/// Euler's pentagonal recurrence for p(w).
fn partition_numbers(max: usize) -> Vec<i64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for w in 1..=max {
        let mut total = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > w {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[w - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= w {
                total += sign * p[w - g2];
            }
        }
        p[w] = total;
    }
    p
}

/// Number of ways to write each weight as a multiset of `parts`.
fn coin_change(parts: &[u32], max: usize) -> Vec<u64> {
    let mut ways = vec![0u64; max + 1];
    ways[0] = 1;
    for &part in parts {
        for w in part as usize..=max {
            ways[w] += ways[w - part as usize];
        }
    }
    ways
}

#[test]
fn all_partitions_match_pentagonal_recurrence() {
    let expected = partition_numbers(40);
    for w in 0..=40u32 {
        assert_eq!(class_of_weight(&ClassSpec::All, w).unwrap().len() as i64, expected[w as usize], "weight {w}");
    }
}

#[test]
fn lecture_hall_counts_match_odd_part_counts() {
    for n in 1..=4 {
        let odd: Vec<u32> = (1..=n).map(|i| 2 * i - 1).collect();
        let expected = coin_change(&odd, 30);
        for w in 0..=30u32 {
            let found = class_of_weight(&ClassSpec::LectureHall { n }, w).unwrap().len() as u64;
            assert_eq!(found, expected[w as usize], "n={n} weight {w}");
        }
    }
    let second: Vec<usize> = (0..=5)
        .map(|w| class_of_weight(&ClassSpec::LectureHall { n: 2 }, w).unwrap().len())
        .collect();
    assert_eq!(second, [1, 1, 1, 2, 2, 2]);
}

#[test]
fn regular_counts_match_coin_change() {
    for mm in 2..=5 {
        let parts: Vec<u32> = (1..=30).filter(|p| p % mm != 0).collect();
        let expected = coin_change(&parts, 30);
        let found = enumerate_class(&ClassSpec::Regular { m: m(mm) }, 30).unwrap();
        for w in 0..=30u64 {
            let count = found.iter().filter(|p| p.weight() == w).count() as u64;
            assert_eq!(count, expected[w as usize], "m={mm} weight {w}");
        }
    }
}

#[test]
fn residue_class_counts_match_coin_change() {
    for mm in 2..=4 {
        for c in 1..mm {
            for n in 1..=4 {
                let parts: Vec<u32> = (0..n).map(|j| j * mm + c).collect();
                let expected = coin_change(&parts, 25);
                for w in 0..=25u32 {
                    let spec = ClassSpec::ResidueBounded { m: m(mm), c, n };
                    let found = class_of_weight(&spec, w).unwrap().len() as u64;
                    assert_eq!(found, expected[w as usize], "m={mm} c={c} n={n} weight {w}");
                }
            }
        }
    }
}

#[test]
fn direct_generators_agree_with_filters() {
    let mut specs = vec![ClassSpec::All, ClassSpec::LectureHall { n: 3 }];
    for mm in 2..=4 {
        let mm = m(mm);
        specs.extend([
            ClassSpec::Distinct { m: mm },
            ClassSpec::Regular { m: mm },
            ClassSpec::Flat { m: mm },
            ClassSpec::Falling { m: mm },
        ]);
        for n in 1..=4 {
            specs.push(ClassSpec::FallingBounded { m: mm, n });
            specs.push(ClassSpec::FallingLectureHall { m: mm, n });
        }
        for c in 1..mm.get() {
            specs.push(ClassSpec::Residue { m: mm, c });
            specs.push(ClassSpec::DistinctResidue { m: mm, c });
            for n in 1..=4 {
                specs.push(ClassSpec::ResidueBounded { m: mm, c, n });
                specs.push(ClassSpec::ResidueLectureHall { m: mm, c, n });
            }
        }
    }
    for spec in specs {
        let mut direct = enumerate_class(&spec, 18).unwrap();
        let mut filtered = enumerate_class_filtered(&spec, 18).unwrap();
        direct.sort();
        filtered.sort();
        assert_eq!(direct, filtered, "{spec}");
    }
}

/// Exact division of an integer polynomial by `1 − q^k`.
fn divide_by_one_minus(poly: &[i64], k: usize) -> Vec<i64> {
    let mut rem = poly.to_vec();
    let mut quot = vec![0; poly.len().saturating_sub(k)];
    for d in 0..quot.len() {
        quot[d] = rem[d];
        rem[d] -= quot[d];
        rem[d + k] += quot[d];
    }
    assert!(rem.iter().all(|&c| c == 0), "division by 1 - q^{k} left a remainder");
    quot
}

/// `Π_{i=1..b} (1 − q^{a+i}) / (1 − q^i)`.
fn gauss_by_quotient(a: usize, b: usize) -> Vec<i64> {
    let mut num = vec![1i64];
    for i in 1..=b {
        let mut next = vec![0; num.len() + a + i];
        for (d, &c) in num.iter().enumerate() {
            next[d] += c;
            next[d + a + i] -= c;
        }
        num = next;
    }
    (1..=b).fold(num, |poly, i| divide_by_one_minus(&poly, i))
}

fn dense(poly: &[BigInt]) -> Vec<i64> {
    poly.iter().map(|c| i64::try_from(c).unwrap()).collect()
}

#[test]
fn gaussian_recurrence_matches_quotient() {
    for a in 0..=5usize {
        for b in 0..=5usize {
            let pascal = dense(&gauss_poly((a + b) as u32, b as u32));
            assert_eq!(pascal, gauss_by_quotient(a, b), "[{}, {b}]", a + b);
            let series = gauss_binomial(a as u32, b as u32, 1, 40);
            let from_series: Vec<i64> = (0..pascal.len() as u32)
                .map(|d| i64::try_from(series.q_coefficient(d)).unwrap())
                .collect();
            assert_eq!(from_series, pascal);
        }
    }
}

#[test]
fn gaussian_polynomials_are_palindromic() {
    for a in 0..=5u32 {
        for b in 0..=5u32 {
            let poly = dense(&gauss_poly(a + b, b));
            assert_eq!(poly.len() as u32, a * b + 1);
            let mut rev = poly.clone();
            rev.reverse();
            assert_eq!(poly, rev, "[{}, {b}]", a + b);
        }
    }
}

#[test]
fn collapsed_h_is_a_shifted_gaussian() {
    // h_i(zq, zq², …, zq^{m−1}) at z = 1 is q^i [m−2+i, i]_q.
    for mm in 2..=5u32 {
        let gens: Vec<Monomial> = (1..mm).map(|r| Monomial::zq(r as usize, r)).collect();
        for i in 0..=6u32 {
            let h = homog_sym(i, &gens, 40);
            let expected = dense(&gauss_poly(mm - 2 + i, i));
            for d in 0..=40u32 {
                let want = d
                    .checked_sub(i)
                    .and_then(|e| expected.get(e as usize).copied())
                    .unwrap_or(0);
                assert_eq!(i64::try_from(h.q_coefficient(d)).unwrap(), want, "m={mm} i={i} q^{d}");
            }
        }
    }
}

#[test]
fn d2_members_below_n_are_lecture_hall() {
    for n in 1..=6u32 {
        for p in enumerate_class(&ClassSpec::Distinct { m: m(2) }, 21).unwrap() {
            if p.largest() <= n && p.len() <= n as usize {
                assert!(ClassSpec::LectureHall { n }.contains(&p).unwrap(), "{p} in L_{n}");
            }
        }
    }
}

#[test]
fn class_inclusions() {
    for mm in 2..=4 {
        let mm = m(mm);
        for c in 1..mm.get() {
            for n in 1..=4 {
                let hall = enumerate_class(&ClassSpec::ResidueLectureHall { m: mm, c, n }, 25).unwrap();
                for p in &hall {
                    assert!(ClassSpec::DistinctResidue { m: mm, c }.contains(p).unwrap());
                    assert!(ClassSpec::ResidueLectureHall { m: mm, c, n: n + 1 }.contains(p).unwrap());
                }
                let bounded = enumerate_class(&ClassSpec::ResidueBounded { m: mm, c, n }, 25).unwrap();
                for p in &bounded {
                    assert!(ClassSpec::Residue { m: mm, c }.contains(p).unwrap());
                    assert!(ClassSpec::ResidueBounded { m: mm, c, n: n + 1 }.contains(p).unwrap());
                }
            }
            for p in enumerate_class(&ClassSpec::DistinctResidue { m: mm, c }, 25).unwrap() {
                assert!(ClassSpec::Distinct { m: mm }.contains(&p).unwrap());
            }
            for p in enumerate_class(&ClassSpec::Residue { m: mm, c }, 25).unwrap() {
                assert!(ClassSpec::Falling { m: mm }.contains(&p).unwrap());
                assert!(ClassSpec::Regular { m: mm }.contains(&p).unwrap());
            }
        }
    }
}

#[test]
fn table_columns_against_brute_force() {
    let m3 = m(3);
    let mut left = Vec::new();
    let mut right = Vec::new();
    let hall = ClassSpec::FallingLectureHall { m: m3, n: 3 };
    for w in 0..=37 {
        for p in class_of_weight(&ClassSpec::All, w).unwrap() {
            let residues = p.residues(m3);
            let regular = residues.iter().all(|&r| r != 0);
            if regular
                && residues.windows(2).all(|w| w[0] >= w[1])
                && p.largest() < 9
                && p.length_type(m3).entries() == [3, 2]
            {
                left.push(p.clone());
            }
            if hall.contains(&p).unwrap()
                && p.alt_sum_type(m3).entries() == [3, 2]
            {
                right.push(p);
            }
        }
    }
    let table = mfalling::verify::table1_rows();
    let mut listed_left: Vec<Partition> = table.iter().map(|(l, _)| l.clone()).collect();
    let mut listed_right: Vec<Partition> = table.iter().map(|(_, r)| r.clone()).collect();
    for v in [&mut left, &mut right, &mut listed_left, &mut listed_right] {
        v.sort();
    }
    assert_eq!(left.len(), 21);
    assert_eq!(left, listed_left);
    assert_eq!(right, listed_right);
}
