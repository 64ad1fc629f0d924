use std::collections::BTreeMap;

use mseg_core::enumerate::{enumerate_mult, enumerate_mult_ap, multisegments_up_to_degree};
use mseg_core::partition::{e_regular_partitions, partitions};
use mseg_core::{Cardinal, Level, Multisegment, Partition, Segment, Support, Tower};
use proptest::prelude::*;

const GRID: [(u64, u64); 5] = [(1, 2), (1, 3), (2, 3), (3, 2), (4, 3)];

fn tower(o0: u64, ell: u64) -> Tower {
    Tower::from_params(Cardinal::Finite(o0), ell).unwrap()
}

fn mu_or_empty(m: &Multisegment) -> Partition {
    if m.is_zero() {
        Partition::empty()
    } else {
        m.mu_partition().unwrap()
    }
}

/// Coefficients of prod_k (1 - x^{ek}) / (1 - x^k) up to degree `n`.
fn regular_gf(e: u64, n: usize) -> Vec<i64> {
    let mut series = vec![0i64; n + 1];
    series[0] = 1;
    for k in 1..=n {
        for d in k..=n {
            series[d] += series[d - k];
        }
        let ek = e as usize * k;
        if ek <= n {
            for d in (ek..=n).rev() {
                series[d] -= series[d - ek];
            }
        }
    }
    series
}

#[test]
fn conjugation_is_an_antitone_involution() {
    for n in 0..=8 {
        let all = partitions(n);
        for mu in &all {
            assert_eq!(mu.conjugate().conjugate(), *mu);
            for nu in &all {
                assert_eq!(
                    mu.dominated_by(nu).unwrap(),
                    nu.conjugate().dominated_by(&mu.conjugate()).unwrap(),
                    "{mu} {nu}"
                );
            }
        }
    }
}

#[test]
fn row_is_maximal_and_column_minimal() {
    for n in 1..=9 {
        for mu in partitions(n) {
            assert!(mu.dominated_by(&Partition::row(n)).unwrap());
            assert!(Partition::column(n).dominated_by(&mu).unwrap());
        }
    }
}

#[test]
fn regular_counts_match_generating_function() {
    for e in [2, 3, 5] {
        let gf = regular_gf(e, 30);
        for n in 0..=30 {
            let count = e_regular_partitions(n, Cardinal::Finite(e)).len() as i64;
            assert_eq!(count, gf[n as usize], "n={n} e={e}");
        }
    }
}

#[test]
fn mu_is_additive() {
    for (o0, ell) in GRID {
        let t = tower(o0, ell);
        let all = multisegments_up_to_degree(&t, 4).unwrap();
        for a in all.iter().step_by(3) {
            for b in all.iter().step_by(5) {
                let sum = a.add(b).unwrap();
                assert_eq!(
                    sum.mu_partition().unwrap(),
                    a.mu_partition().unwrap().add(&b.mu_partition().unwrap())
                );
            }
        }
    }
}

#[test]
fn truncation_commutes_with_minus() {
    for (o0, ell) in GRID {
        let t = tower(o0, ell);
        for m in multisegments_up_to_degree(&t, 5).unwrap() {
            let m1 = m.endpoints().degree(&t);
            for n in m.truncations() {
                let (mm, nm) = (m.minus(), n.minus());
                assert!(mm.vdash(&nm), "{m} |- {n}");
                let d = m.delta(&n).unwrap() as i64;
                let d_minus = mm.delta(&nm).unwrap() as i64;
                let n1 = n.endpoints().degree(&t);
                assert_eq!(d - d_minus, m1 as i64 - n1 as i64, "{m} |- {n}");
            }
        }
    }
}

#[test]
fn equal_truncations_balance_with_points() {
    for (o0, ell) in GRID {
        let t = tower(o0, ell);
        let mut by_minus: BTreeMap<String, Vec<Multisegment>> = BTreeMap::new();
        for m in multisegments_up_to_degree(&t, 4).unwrap() {
            by_minus.entry(m.minus().to_string()).or_default().push(m);
        }
        for group in by_minus.values() {
            for a in group {
                for b in group {
                    let (n, n2) = a.balancing_padding(b).expect("equal truncations");
                    assert!(n.iter().all(|(s, _)| s.len() == 1));
                    assert!(n2.iter().all(|(s, _)| s.len() == 1));
                    assert_eq!(a.add(&n).unwrap(), b.add(&n2).unwrap());
                }
            }
        }
    }
}

#[test]
fn dual_preserves_mu() {
    for (o0, ell) in GRID {
        let t = tower(o0, ell);
        for m in multisegments_up_to_degree(&t, 5).unwrap() {
            assert_eq!(m.dual().mu_partition(), m.mu_partition());
            assert_eq!(m.dual().dual(), m);
        }
    }
}

#[test]
fn aperiodic_multisegments_have_matching_cuspidal_support() {
    for (o0, ell) in GRID {
        let t = tower(o0, ell);
        for m in multisegments_up_to_degree(&t, 5).unwrap() {
            let keys = m.classification_keys();
            assert_eq!(keys.scusp, m.sc().support());
            if m.is_aperiodic() {
                assert_eq!(keys.cusp, m.support(), "{m}");
            }
            let ap = m.sc().ap().unwrap();
            assert!(m.classify_equal(&ap));
        }
    }
}

#[test]
fn support_of_aperiodic_expands_like_its_image() {
    // supp(m)_sc = supp(m_sc) for aperiodic m
    for (o0, ell) in GRID {
        let t = tower(o0, ell);
        for m in multisegments_up_to_degree(&t, 6).unwrap() {
            if m.is_aperiodic() {
                assert_eq!(m.support().sc(&t), m.sc().support(), "{m}");
            }
        }
    }
}

#[test]
fn aperiodic_support_commutes_when_image_support_is_aperiodic() {
    // supp(m_ap) = supp(m)_ap holds exactly when supp(m_ap), read as points,
    // is itself aperiodic; otherwise both sides still expand to the same points
    for (o0, ell) in GRID {
        let t = tower(o0, ell);
        for m in multisegments_up_to_degree(&t, 4).unwrap() {
            if !m.is_supercuspidal() {
                continue;
            }
            let image = m.ap().unwrap().support();
            let direct = m.support().ap(&t);
            if image.as_multisegment(&t).is_aperiodic() {
                assert_eq!(direct, image, "{m}");
            } else {
                assert_ne!(direct, image, "{m}");
                assert_eq!(direct.sc(&t), image.sc(&t));
            }
        }
    }
}

#[test]
fn segment_degrees_differ_from_conjugate_off_unit_degree() {
    let t = tower(1, 2);
    let line = t.line(Level::Cusp(0)).unwrap();
    let m = Multisegment::from_segments(t, [(Segment::from_start(&line, Level::Cusp(0), 0, 1), 1)]);
    assert_eq!(m.mu_partition().unwrap(), Partition::row(2));
    assert_eq!(m.segment_degrees(), Partition::row(2));
    assert_ne!(m.mu_partition().unwrap().conjugate(), m.segment_degrees());
}

#[test]
fn aperiodic_support_counterexample() {
    // two length-2 segments on tower(o0=1, l=2) form a period whose
    // aperiodic image has periodic support
    let t = tower(1, 2);
    let seg = Segment::new(t.base(), Level::Sc, 0, 1).unwrap();
    let m = Multisegment::from_segments(t, [(seg, 2)]);
    let image = m.ap().unwrap().support();
    assert_eq!(image, Support::from_points(&t, [((Level::Cusp(0), 0), 2)]));
    assert_eq!(
        m.support().ap(&t),
        Support::from_points(&t, [((Level::Cusp(1), 0), 1)])
    );
}

#[test]
fn ap_fibres_partition_multisegments_by_support() {
    // m -> m_ap maps Mult(s) onto the union of Mult(t)^ap over t with t_sc = s
    for (o0, ell) in GRID {
        let t = tower(o0, ell);
        let all = multisegments_up_to_degree(&t, 4).unwrap();
        let mut by_scusp: BTreeMap<Support, Vec<&Multisegment>> = BTreeMap::new();
        for m in &all {
            by_scusp.entry(m.support().sc(&t)).or_default().push(m);
        }
        for (s, members) in by_scusp {
            if !s.levels().iter().all(|l| *l == Level::Sc) {
                continue;
            }
            let sc_mult = enumerate_mult(&t, &s).unwrap();
            let mut images: Vec<Multisegment> = sc_mult.iter().map(|m| m.ap().unwrap()).collect();
            images.sort();
            let mut targets: Vec<Multisegment> = members
                .iter()
                .filter(|m| m.is_aperiodic())
                .map(|m| (*m).clone())
                .collect();
            targets.sort();
            assert_eq!(images, targets, "support {s}");
            for m in &targets {
                assert!(enumerate_mult_ap(&t, &m.support()).unwrap().contains(m));
            }
        }
    }
}

fn arb_multisegment() -> impl Strategy<Value = Multisegment> {
    let towers = prop::sample::select(GRID.to_vec());
    towers.prop_flat_map(|(o0, ell)| {
        let t = tower(o0, ell);
        let seg = (0u32..3, 0..o0 as i64, 1u32..5, 1u64..4).prop_map(move |(r, start, len, mult)| {
            let level = if r == 0 { Level::Sc } else { Level::Cusp(r - 1) };
            let line = t.line(level).unwrap();
            (Segment::from_start(&line, level, start, len), mult)
        });
        prop::collection::vec(seg, 1..5).prop_map(move |segs| Multisegment::from_segments(t, segs))
    })
}

proptest! {
    #[test]
    fn mu_conjugate_repeats_lengths_by_point_degree(m in arb_multisegment()) {
        let t = *m.tower();
        let family = m.iter().flat_map(|(s, k)| {
            let copies = *k * t.point_degree(s.level());
            std::iter::repeat_n(s.len() as u64, copies as usize)
        });
        prop_assert_eq!(m.mu_partition().unwrap().conjugate(), Partition::from_family(family));
        if m.is_supercuspidal() {
            prop_assert_eq!(m.mu_partition().unwrap().conjugate(), m.segment_degrees());
        }
    }

    #[test]
    fn reconstruct_inverts_derived_sequence(m in arb_multisegment()) {
        let seq = m.derived_sequence();
        prop_assert_eq!(Multisegment::reconstruct(*m.tower(), &seq).unwrap(), m);
    }

    #[test]
    fn sc_is_additive_and_degree_preserving(a in arb_multisegment(), b in arb_multisegment()) {
        prop_assert_eq!(a.sc().degree(), a.degree());
        if a.tower() == b.tower() {
            prop_assert_eq!(a.add(&b).unwrap().sc(), a.sc().add(&b.sc()).unwrap());
        }
    }

    #[test]
    fn ap_of_sc_is_aperiodic_section(m in arb_multisegment()) {
        let x = m.sc();
        let a = x.ap().unwrap();
        prop_assert!(a.is_aperiodic());
        prop_assert_eq!(a.sc(), x);
        prop_assert_eq!(mu_or_empty(&m.minus()).total() + m.endpoints().degree(m.tower()), m.degree());
    }

    #[test]
    fn conjugate_of_sum_merges_columns(
        a in prop::collection::vec(1u64..6, 0..6),
        b in prop::collection::vec(1u64..6, 0..6),
    ) {
        let (pa, pb) = (Partition::from_family(a.clone()), Partition::from_family(b.clone()));
        let merged = Partition::from_family(
            pa.conjugate().parts().iter().chain(pb.conjugate().parts()).copied(),
        );
        prop_assert_eq!(pa.add(&pb).conjugate(), merged);
    }
}
