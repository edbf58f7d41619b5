use mfalling::bijections::{
    composite_inverse, composite_phi_n, composite_phi_n_traced, phi_n, phi_n_traced, psi_n, sk_inverse,
    stockhofe_keith, stockhofe_keith_traced,
};
use mfalling::classes::{enumerate_class, ClassSpec};
use mfalling::verify::{composite_contract, residue_contract, sk_contract, table1_rows};
use mfalling::{Error, Modulus, Partition};

fn m(v: u32) -> Modulus {
    Modulus::new(v).unwrap()
}

fn p(v: &[u32]) -> Partition {
    Partition::new(v.iter().copied()).unwrap()
}

#[test]
fn insertion_frames_match_the_drawn_columns() {
    // The drawing shows each running partition column by column.
    let columns: [&[u32]; 7] = [
        &[3, 3, 3, 2],
        &[6, 6, 5, 3, 2],
        &[6, 6, 5, 3, 3, 3, 2, 2],
        &[6, 6, 6, 5, 5, 3, 3, 2, 2],
        &[8, 6, 6, 6, 5, 5, 3, 3, 2, 2],
        &[8, 6, 6, 6, 5, 5, 3, 3, 3, 2, 2, 2],
        &[8, 6, 6, 6, 5, 5, 5, 3, 3, 3, 2, 2, 2],
    ];
    let (mu, trace) = phi_n_traced(&p(&[11, 11, 8, 8, 8, 5, 5]), m(3), 2, 5).unwrap();
    let frames: Vec<Partition> = trace.steps[1..].iter().map(|s| s.partition.conjugate()).collect();
    let drawn: Vec<Partition> = columns.iter().map(|c| p(c)).collect();
    assert_eq!(frames, drawn);
    assert_eq!(mu, p(&[13, 13, 10, 7, 7, 4, 1, 1]));
}

#[test]
fn composite_frames_match_the_drawing() {
    let (mu, trace) = composite_phi_n_traced(&p(&[5, 5, 4, 4, 4]), m(3), 3, None).unwrap();
    let frames: Vec<(&str, Partition)> = trace.steps.iter().map(|s| (s.label.as_str(), s.partition.clone())).collect();
    assert_eq!(
        frames,
        vec![
            ("input", p(&[5, 5, 4, 4, 4])),
            ("relabel residues to 2", p(&[5, 5, 5, 5, 5])),
            ("phi_3", p(&[8, 8, 5, 2, 2])),
            ("conjugate", p(&[5, 5, 3, 3, 3, 2, 2, 2])),
            ("restore residues on conjugate", p(&[5, 5, 3, 3, 3, 1, 1, 1])),
            ("conjugate", p(&[8, 5, 5, 2, 2])),
        ]
    );
    assert_eq!(mu, p(&[8, 5, 5, 2, 2]));
}

#[test]
fn stockhofe_keith_worked_example() {
    let lambda = p(&[19, 17, 14, 13, 13, 8, 1]);
    let (mu, trace) = stockhofe_keith_traced(&lambda, m(3)).unwrap();
    assert_eq!(mu, p(&[11, 10, 9, 9, 8, 8, 6, 5, 5, 4, 4, 2, 2, 1, 1]));
    assert_eq!(trace.steps[2].partition, p(&[7, 5, 5, 4, 4, 2, 1]));
    assert_eq!(mu.weight(), lambda.weight());
    assert_eq!(sk_inverse(&mu, m(3), 100).unwrap(), lambda);
    assert_eq!(
        sk_inverse(&mu, m(3), 40),
        Err(Error::GuardExceeded { weight: 85, guard: 40 })
    );
}

#[test]
fn stockhofe_keith_contract() {
    for mm in 2..=4 {
        let report = sk_contract(m(mm)).check(22).unwrap();
        assert!(report.passed(), "m={mm}: {:?}", report.counterexample);
    }
}

#[test]
fn stockhofe_keith_round_trip_by_search() {
    for mm in 2..=4 {
        let mm = m(mm);
        for lambda in enumerate_class(&ClassSpec::Regular { m: mm }, 16).unwrap() {
            let mu = stockhofe_keith(&lambda, mm).unwrap();
            assert_eq!(sk_inverse(&mu, mm, 16).unwrap(), lambda);
        }
    }
}

#[test]
fn insertion_bijection_contract() {
    for mm in 2..=4 {
        for c in 1..mm {
            for n in 1..=4 {
                let report = residue_contract(m(mm), c, n).check(25).unwrap();
                assert!(report.passed(), "m={mm} c={c} n={n}: {:?}", report.counterexample);
            }
        }
    }
}

#[test]
fn composite_contract_holds() {
    for mm in 2..=3 {
        for n in 1..=3 {
            for c in 1..mm {
                let report = composite_contract(m(mm), n, Some(c)).check(25).unwrap();
                assert!(report.passed(), "m={mm} n={n} c={c}: {:?}", report.counterexample);
            }
        }
    }
}

#[test]
fn table_rows_round_trip() {
    for (lambda, mu) in table1_rows() {
        assert_eq!(composite_phi_n(&lambda, m(3), 3, None).unwrap(), mu);
        assert_eq!(composite_inverse(&mu, m(3), 3, None).unwrap(), lambda);
    }
}

#[test]
fn maps_reject_inputs_outside_their_domains() {
    assert!(matches!(stockhofe_keith(&p(&[6, 1]), m(3)), Err(Error::NotMRegular(_))));
    assert!(matches!(phi_n(&p(&[4]), m(3), 2, 3), Err(Error::NotInClass { .. })));
    assert!(matches!(phi_n(&p(&[11]), m(3), 2, 3), Err(Error::NotInClass { .. })));
    assert!(matches!(psi_n(&p(&[1, 1, 1]), m(3), 2, 3), Err(Error::NotInClass { .. })));
    // The residues (1,2) of (4,2) ascend.
    assert!(matches!(composite_phi_n(&p(&[4, 2]), m(3), 3, None), Err(Error::NotInClass { .. })));
    assert!(matches!(composite_phi_n(&p(&[5]), m(3), 3, Some(3)), Err(Error::BadSpec(_))));
    assert!(matches!(composite_inverse(&p(&[3, 3, 3]), m(3), 3, None), Err(Error::NotInClass { .. })));
}

#[test]
fn empty_partition_maps_to_itself() {
    let e = Partition::empty();
    for mm in 2..=4 {
        assert_eq!(stockhofe_keith(&e, m(mm)).unwrap(), e);
        for n in 1..=3 {
            assert_eq!(composite_phi_n(&e, m(mm), n, None).unwrap(), e);
            assert_eq!(composite_inverse(&e, m(mm), n, None).unwrap(), e);
        }
    }
}
