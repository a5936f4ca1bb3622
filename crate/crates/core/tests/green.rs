use cycle_endo::green::{
    classes, d_related, factor, full_sublist_witness, is_regular, l_oracle, l_related, r_related, regular_oracle,
    Relation,
};
use cycle_endo::{DihedralElement, Monoid, MonoidKind, Transformation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CAP: usize = 1 << 22;

fn load(kind: MonoidKind, n: usize) -> Monoid {
    Monoid::load(kind, n, CAP).unwrap()
}

#[test]
fn regularity_matches_brute_force() {
    for (kind, max_n) in [(MonoidKind::WEnd, 6), (MonoidKind::End, 8)] {
        for n in 3..=max_n {
            let m = load(kind, n);
            for a in m.elements() {
                let fast = is_regular(a, kind).unwrap();
                assert_eq!(fast, regular_oracle(a, &m), "{kind} n={n} {a}");
                if let Some(w) = full_sublist_witness(a) {
                    assert!(w.verify(a));
                    let beta = w.inverse(a).to_transformation();
                    assert_eq!(&a.then(&beta).then(a), a);
                }
            }
        }
    }
}

#[test]
fn regularity_is_the_same_in_both_monoids() {
    for n in 3..=6 {
        let wend = load(MonoidKind::WEnd, n);
        let end = load(MonoidKind::End, n);
        for a in end.elements() {
            assert_eq!(is_regular(a, MonoidKind::End).unwrap(), is_regular(a, MonoidKind::WEnd).unwrap());
            assert_eq!(regular_oracle(a, &end), regular_oracle(a, &wend), "n={n} {a}");
        }
    }
}

#[test]
fn regular_semigroups_by_size() {
    for n in [3, 4, 5] {
        let m = load(MonoidKind::WEnd, n);
        assert!(m.elements().iter().all(|a| is_regular(a, MonoidKind::WEnd).unwrap()), "wEnd n={n}");
    }
    for n in [4, 6, 8] {
        let m = load(MonoidKind::End, n);
        assert!(m.elements().iter().all(|a| is_regular(a, MonoidKind::End).unwrap()), "End n={n}");
    }
    let m = load(MonoidKind::WEnd, 6);
    assert!(m.elements().iter().any(|a| !is_regular(a, MonoidKind::WEnd).unwrap()));
    let m = load(MonoidKind::End, 10);
    assert!(m.elements().iter().any(|a| !is_regular(a, MonoidKind::End).unwrap()));
}

#[test]
fn r_relation_three_ways() {
    for kind in [MonoidKind::End, MonoidKind::WEnd] {
        for n in 3..=6 {
            let m = load(kind, n);
            for a in m.elements() {
                for b in m.elements() {
                    let by_kernel = a.kernel() == b.kernel();
                    assert_eq!(r_related(a, b), by_kernel);
                    match factor(a, b) {
                        Ok(s) => {
                            assert!(by_kernel);
                            assert_eq!(&b.then(&s.to_transformation()), a);
                        }
                        Err(_) => assert!(!by_kernel, "{a} {b}"),
                    }
                }
            }
        }
    }
}

fn check_l_pair(a: &Transformation, b: &Transformation, m: &Monoid) {
    let kind = m.kind();
    let fast = l_related(a, b, kind).unwrap();
    assert_eq!(fast.related, l_oracle(a, b, m), "{kind} {a} | {b}");
    assert_eq!(fast.related, fast.witness.is_some());
    if let Some(w) = fast.witness {
        assert!(w.verify(a, b, kind));
    }
}

#[test]
fn l_relation_matches_brute_force_exhaustively() {
    for kind in [MonoidKind::End, MonoidKind::WEnd] {
        for n in 3..=5 {
            let m = load(kind, n);
            for a in m.elements() {
                for b in m.elements() {
                    check_l_pair(a, b, &m);
                }
            }
        }
    }
}

#[test]
fn l_relation_matches_brute_force_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for kind in [MonoidKind::End, MonoidKind::WEnd] {
        for n in [6, 7] {
            let m = load(kind, n);
            let elements = m.elements();
            let mut by_image: std::collections::HashMap<Vec<bool>, Vec<usize>> = Default::default();
            for (i, t) in elements.iter().enumerate() {
                by_image.entry(t.image_mask()).or_default().push(i);
            }
            for round in 0..10_000 {
                let a = &elements[rng.gen_range(0..elements.len())];
                // Most pairs share an image, the only case where L is non-trivial.
                let b = if round % 4 == 0 {
                    &elements[rng.gen_range(0..elements.len())]
                } else {
                    let same = &by_image[&a.image_mask()];
                    &elements[same[rng.gen_range(0..same.len())]]
                };
                check_l_pair(a, b, &m);
            }
        }
    }
}

#[test]
fn d_relation_two_ways() {
    let m = load(MonoidKind::WEnd, 5);
    let d = classes(&m, Relation::D).unwrap();
    let mut class_of = vec![0; m.len()];
    for (k, c) in d.iter().enumerate() {
        for &x in c {
            class_of[x] = k;
        }
    }
    let e = m.elements();
    for i in 0..e.len() {
        for j in 0..e.len() {
            let rl = d_related(&e[i], &e[j], MonoidKind::WEnd).unwrap();
            // Swapping the arguments composes R and L in the other order.
            let lr = d_related(&e[j], &e[i], MonoidKind::WEnd).unwrap();
            assert_eq!(rl, lr);
            assert_eq!(rl, class_of[i] == class_of[j], "{} {}", e[i], e[j]);
        }
    }
}

#[test]
fn translates_by_units_are_d_related() {
    let m = load(MonoidKind::End, 6);
    for a in m.elements().iter().step_by(7) {
        for s in DihedralElement::all(6) {
            let st = s.to_transformation();
            assert!(d_related(a, &a.then(&st), MonoidKind::End).unwrap());
            assert!(d_related(a, &st.then(a), MonoidKind::End).unwrap());
        }
    }
}
