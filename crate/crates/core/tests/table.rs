use cycle_endo::rank::{monoid_rank, monoid_rank_with, Selection};
use cycle_endo::{cardinality, enumerate_monoid, MonoidKind};

/// Published sizes and ranks, one row per n = 3..=12, columns in
/// `MonoidKind::ALL` order (Aut, sEnd, End, swEnd, wEnd).
const TABLE: [[(u128, usize); 5]; 10] = [
    [(6, 2), (6, 2), (6, 2), (27, 3), (27, 3)],
    [(8, 2), (32, 3), (32, 3), (36, 4), (84, 4)],
    [(10, 2), (10, 2), (10, 2), (15, 3), (265, 4)],
    [(12, 2), (12, 2), (132, 3), (18, 3), (858, 6)],
    [(14, 2), (14, 2), (14, 2), (21, 3), (2765, 7)],
    [(16, 2), (16, 2), (576, 4), (24, 3), (8872, 13)],
    [(18, 2), (18, 2), (18, 2), (27, 3), (28269, 20)],
    [(20, 2), (20, 2), (2540, 5), (30, 3), (89550, 50)],
    [(22, 2), (22, 2), (22, 2), (33, 3), (282205, 105)],
    [(24, 2), (24, 2), (11112, 10), (36, 3), (885492, 272)],
];

#[test]
fn sizes_match_enumeration_and_formula() {
    for (row, n) in TABLE.iter().zip(3..) {
        for (&(size, _), kind) in row.iter().zip(MonoidKind::ALL) {
            assert_eq!(cardinality(kind, n).unwrap(), size, "{kind} n={n}");
            assert_eq!(enumerate_monoid(kind, n).unwrap().count() as u128, size, "{kind} n={n}");
        }
    }
}

#[test]
fn ranks_up_to_eleven() {
    for (row, n) in TABLE.iter().zip(3..=11) {
        for (&(_, rank), kind) in row.iter().zip(MonoidKind::ALL) {
            assert_eq!(monoid_rank(kind, n).unwrap().rank, rank, "{kind} n={n}");
        }
    }
}

#[test]
fn ranks_at_twelve() {
    for (&(_, rank), kind) in TABLE[9].iter().zip(MonoidKind::ALL) {
        assert_eq!(monoid_rank(kind, 12).unwrap().rank, rank, "{kind} n=12");
    }
}

#[test]
fn rank_does_not_depend_on_representatives() {
    for n in 3..=10 {
        for kind in [MonoidKind::End, MonoidKind::WEnd] {
            let lex = monoid_rank(kind, n).unwrap();
            for seed in [1, 2] {
                let random = monoid_rank_with(kind, n, Selection::Seeded(seed)).unwrap();
                assert_eq!(random.rank, lex.rank, "{kind} n={n} seed={seed}");
                assert_eq!(random.generator_count_by_rank, lex.generator_count_by_rank);
            }
        }
    }
}

#[test]
fn weak_rank_dominates_strict_rank() {
    for n in 3..=11 {
        let end = monoid_rank(MonoidKind::End, n).unwrap().rank;
        let wend = monoid_rank(MonoidKind::WEnd, n).unwrap().rank;
        assert!(wend >= end, "n={n}");
    }
}
