//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//! Every tolerance is exact integer equality; the sweeps must come back
//! with zero mismatches.

mod common;

use std::time::{Duration, Instant};

use polyrook_core::algebra::{self, MonomialOrder};
use polyrook_core::enumerate::{collect_fixed, collect_simple, enumerate_fixed, Dedup};
use polyrook_core::grid::{Point, Polyomino, D4};
use polyrook_core::io::parse_grid;
use polyrook_core::motzkin::{self, MotzkinStep};
use polyrook_core::parallelogram::{self, GorensteinMethod};
use polyrook_core::poly::IntPoly;
use polyrook_core::rook::{self, RookComplex};
use polyrook_core::verify::{
    classify_gorenstein, crosscheck_parallelogram, parallelograms_of_rank, verify_conjecture,
    SweepOptions,
};

struct Criterion(u32, &'static str);

impl Criterion {
    fn pass(self) {
        println!("[PASS] criterion {}: {}", self.0, self.1);
    }
}

#[test]
fn criterion_1_p7_reference_values() {
    let c = Criterion(1, "P7 rook and Hilbert polynomials, under one second");
    let started = Instant::now();
    let p7 = common::p7();
    let complex = RookComplex::new(&p7);
    assert_eq!(complex.polynomial(), IntPoly::from_coeffs([1, 7, 12, 5]));
    let r_tilde = complex.class_polynomial().unwrap();
    assert_eq!(r_tilde, IntPoly::from_coeffs([1, 7, 11, 4]));
    let h = algebra::h_polynomial(&p7, MonomialOrder::DegRevLex).unwrap();
    assert_eq!(h, IntPoly::from_coeffs([1, 7, 11, 4]));
    assert_eq!(h, r_tilde);
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "took {elapsed:?}, expected under 1 s"
    );
    c.pass();
}

#[test]
fn criterion_2_conjecture_sweep_rank_7() {
    let c = Criterion(2, "h == r~ for every simple polyomino of rank <= 7");
    let started = Instant::now();
    let opts = SweepOptions {
        max_rank: 7,
        jobs: 1,
        dedup: Dedup::D4,
        timings: false,
    };
    let mut sink = Vec::new();
    let summary = verify_conjecture(&opts, &mut sink, None).unwrap();
    assert_eq!(summary.mismatches, 0, "conjecture sweep found mismatches");
    assert!(
        summary.total > 100,
        "sweep covered {} shapes",
        summary.total
    );
    // the seven-cell fixture is part of the sweep
    assert!(String::from_utf8(sink)
        .unwrap()
        .lines()
        .any(|l| l.contains("\"h\":[1,7,11,4]")));
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(15 * 60),
        "single-threaded sweep took {elapsed:?}, target is 15 min"
    );
    c.pass();
}

#[test]
fn criterion_3_four_way_h_agreement_rank_8() {
    let c = Criterion(
        3,
        "groebner = descents = cell-chains = r~ on parallelograms of rank <= 8, deg h = rook number, h(1) = chain count",
    );
    let started = Instant::now();
    let mut sink = Vec::new();
    let summary = crosscheck_parallelogram(8, 0, &mut sink).unwrap();
    assert_eq!(summary.mismatches, 0);
    assert!(summary.total > 100);
    // a rank-9 staircase sits above the sweep cap; check it directly
    let par8 = common::par8();
    let h = algebra::h_polynomial(&par8, MonomialOrder::DegRevLex).unwrap();
    let l = polyrook_core::lattice::lattice_of(&par8).unwrap();
    assert_eq!(
        h,
        l.h_via_descents(polyrook_core::lattice::DEFAULT_CHAIN_CAP)
            .unwrap()
    );
    assert_eq!(h, polyrook_core::lattice::h_via_cell_chains(&par8).unwrap());
    let complex = RookComplex::new(&par8);
    assert_eq!(h, complex.class_polynomial().unwrap());
    assert_eq!(h.degree(), Some(complex.rook_number()));
    assert_eq!(
        h.eval_at_one().to_i64().unwrap(),
        l.maximal_chain_count() as i64
    );
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(5 * 60),
        "crosscheck took {elapsed:?}, target is 5 min"
    );
    c.pass();
}

#[test]
fn criterion_4_gorenstein_three_methods_rank_9() {
    let c = Criterion(
        4,
        "S-property, poset purity and Motzkin blocks agree on parallelograms of rank <= 9",
    );
    let mut sink = Vec::new();
    let summary = classify_gorenstein(9, 0, &mut sink).unwrap();
    assert_eq!(summary.disagreements, 0);
    // the reference fixtures land on the expected side
    assert!(parallelogram::is_gorenstein(&common::gor9(), GorensteinMethod::All).unwrap());
    assert!(!parallelogram::is_gorenstein(&common::stair5(), GorensteinMethod::All).unwrap());
    assert!(!parallelogram::is_gorenstein(&common::fig7(), GorensteinMethod::All).unwrap());
    let fig6 = common::par8();
    assert!(!parallelogram::has_s_property(&fig6));
    assert!(parallelogram::is_shortenable(&fig6).unwrap());
    assert!(!parallelogram::is_well_shortenable(&fig6).unwrap());
    c.pass();
}

#[test]
fn criterion_5_motzkin_round_trip_rank_10() {
    let c = Criterion(5, "decode(encode(paths)) round-trips up to rank 10");
    for rank in 1..=10 {
        for p in parallelograms_of_rank(rank).unwrap() {
            let pair = parallelogram::detect(&p).unwrap();
            let word = motzkin::encode(&pair);
            assert_eq!(motzkin::decode(&word).unwrap(), pair, "round trip on {p:?}");
        }
    }
    use MotzkinStep::{Fall as F, HorizA as A, HorizB as B, Rise as R};
    let word = motzkin::encode(&parallelogram::detect(&common::par8()).unwrap());
    assert_eq!(word.steps(), &[R, B, A, R, F, R, F, F]);
    assert_eq!(word.to_string(), "RBARFRFF");
    c.pass();
}

#[test]
fn criterion_6_enumeration_matches_the_oracle() {
    let c = Criterion(6, "fixed enumeration equals the BFS growth oracle");
    let expected = [1usize, 2, 6, 19, 63, 216];
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        assert_eq!(enumerate_fixed(n, |_| {}).unwrap(), want);
        assert_eq!(common::bfs_polyominoes(n).len(), want);
    }
    for n in 1..=5 {
        let generated: std::collections::BTreeSet<Polyomino> =
            collect_fixed(n).unwrap().into_iter().collect();
        assert_eq!(generated, common::bfs_polyominoes(n));
        assert_eq!(
            generated.len(),
            collect_fixed(n).unwrap().len(),
            "no duplicates"
        );
    }
    c.pass();
}

#[test]
fn criterion_7_algebra_invariants() {
    let c = Criterion(
        7,
        "order independence, h_0 = 1, h_1 = rank, standard-monomial series agreement",
    );
    for rank in 1..=5 {
        for p in collect_simple(rank, Dedup::D4).unwrap() {
            let h = algebra::h_polynomial(&p, MonomialOrder::DegRevLex).unwrap();
            assert_eq!(
                h,
                algebra::h_polynomial(&p, MonomialOrder::Lex).unwrap(),
                "h depends on the order for {p:?}"
            );
            assert_eq!(h.coeff(0).to_i64(), Some(1));
            assert_eq!(h.coeff(1).to_i64(), Some(rank as i64));
        }
    }
    // standard monomials of the initial ideal against the series expansion
    let mut targets: Vec<Polyomino> = collect_simple(4, Dedup::D4).unwrap();
    targets.push(common::p7());
    for p in targets {
        let setup = algebra::generators(&p, MonomialOrder::DegRevLex);
        let basis = algebra::buchberger(&setup.gens, MonomialOrder::DegRevLex);
        let init = algebra::initial_ideal(&basis);
        let nvars = setup.vars.len();
        let numerator = algebra::hilbert_numerator(&init, nvars);
        let numerator_coeffs = numerator.to_i64_coeffs().unwrap();
        let gens: Vec<Vec<(u32, u32)>> = init
            .gens()
            .iter()
            .map(|g| g.vars().map(|v| (v, g.exponent(v))).collect())
            .collect();
        let h = algebra::h_polynomial(&p, MonomialOrder::DegRevLex).unwrap();
        let top = h.degree().unwrap_or(0) + 1;
        for k in 0..=top {
            let counted = common::standard_monomial_count(&gens, nvars, k as u32) as i64;
            let expanded = common::series_coefficient(&numerator_coeffs, nvars, k);
            assert_eq!(
                counted, expanded,
                "Hilbert function mismatch at degree {k} on {p:?}"
            );
        }
    }
    c.pass();
}

/// Compact spot checks of every property group; the full suites live in
/// the `properties` test target and run standalone.
#[test]
fn criterion_8_property_groups() {
    let c = Criterion(
        8,
        "property groups (full versions in the properties target)",
    );
    // switch involution
    let p7 = common::p7();
    let complex = RookComplex::new(&p7);
    for level in complex.levels() {
        for f in level {
            for g in complex.switches(f).unwrap() {
                assert!(complex.switches(&g).unwrap().contains(f));
            }
        }
    }
    // symmetry invariance
    for t in D4 {
        let q = p7.transformed(t);
        assert_eq!(
            rook::r_tilde_polynomial(&q).unwrap(),
            IntPoly::from_coeffs([1, 7, 11, 4])
        );
        assert_eq!(
            algebra::h_polynomial(&q, MonomialOrder::DegRevLex).unwrap(),
            IntPoly::from_coeffs([1, 7, 11, 4])
        );
    }
    // path-pair round trips
    for p in parallelograms_of_rank(6).unwrap() {
        let pair = parallelogram::detect(&p).unwrap();
        assert_eq!(parallelogram::from_paths(&pair).unwrap(), p);
    }
    // corner-rectangle uniqueness
    for p in parallelograms_of_rank(6).unwrap() {
        let (m, n) = p.bounding_box();
        let rects = parallelogram::maximal_rectangles(&p);
        assert_eq!(
            rects
                .iter()
                .filter(|r| r.interval.lo == Point::new(0, 0))
                .count(),
            1
        );
        assert_eq!(
            rects
                .iter()
                .filter(|r| r.interval.hi == Point::new(m, n))
                .count(),
            1
        );
    }
    // diagonal single-square chain on a known Gorenstein instance
    let gor9 = common::gor9();
    let rect = parallelogram::min_rectangle(&gor9).unwrap();
    let squares = parallelogram::single_squares(&gor9, &rect);
    assert_eq!(squares.len(), 1);
    assert_eq!(squares[0].lo, Point::new(0, 0));
    assert!(parallelogram::is_well_shortenable(&gor9).unwrap());
    c.pass();
}

#[test]
fn fixtures_parse_to_the_expected_shapes() {
    // guards the fixtures the other criteria rely on
    assert_eq!(common::p7().rank(), 7);
    assert_eq!(common::par8().rank(), 9);
    assert_eq!(common::gor9().rank(), 9);
    assert_eq!(common::stair5().rank(), 5);
    assert_eq!(common::fig7().rank(), 5);
    assert_eq!(
        parse_grid("#.#\n###\n##.").unwrap(),
        Polyomino::normalize([(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (0, 2), (2, 2)]).unwrap()
    );
}
