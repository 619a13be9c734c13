//! End-to-end checks of the worked examples and the library's contracts,
//! one test per criterion, each printing a PASS line when it holds.

use braidforge_core::algebra::{constant_action_birack, Elem, FiniteSwitch, MedialWitness};
use braidforge_core::braidword::{parse_word, random_word, rewrite_equivalent, BraidWord};
use braidforge_core::catalog;
use braidforge_core::cocycle_quiver::{
    boltzmann_weight, build_weighted_quiver, edge_polynomial, vertex_polynomial,
};
use braidforge_core::homology::{
    boundary, boundary_chain, coboundary1, is_two_cocycle, Cochain2, CocycleViolation,
};
use braidforge_core::quiver::{build_quiver, build_quiver_opts, closure_coloring_count, quiver_polynomial};
use braidforge_core::representation::{
    apply_braid, burau_check, check_medial_representation, decode, encode, BurauVerdict,
    CheckMode, MedialRepVerdict, SweepOptions,
};
use braidforge_core::ExecMode;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::time::Instant;

fn ca13_with_phi5() -> (&'static braidforge_core::algebra::FiniteBirack, &'static Cochain2) {
    let entry = catalog::find("ca13").unwrap();
    (
        entry.algebra.birack().unwrap(),
        entry.cocycle("phi5").unwrap(),
    )
}

#[test]
fn criterion_01_squared_generator_cycle_structure() {
    let switch = catalog::find("biquandle3").unwrap().algebra.switch();
    let word = parse_word("2 : 1 1").unwrap();
    let quiver = build_quiver(&switch, &word).unwrap();
    let poly = quiver_polynomial(&quiver);
    assert_eq!(poly.to_string(), "6u^3 + 3u");
    assert_eq!(poly.coefficient(&[3]), 6);
    assert_eq!(poly.coefficient(&[1]), 3);
    assert_eq!(closure_coloring_count(&quiver, 1), 3);
    assert_eq!(closure_coloring_count(&quiver, 2), 3);
    assert_eq!(closure_coloring_count(&quiver, 3), 9);
    assert_eq!(closure_coloring_count(&quiver, 6), 9);
    println!("acceptance criterion 1: PASS");
}

#[test]
fn criterion_02_weighted_cubed_generator() {
    let (birack, phi) = ca13_with_phi5();
    let word = parse_word("2 : 1 1 1").unwrap();
    assert_eq!(boltzmann_weight(birack, phi, &word, &[2, 3]).unwrap(), 2);

    let weighted = build_weighted_quiver(birack, phi, &word).unwrap();
    let expected = [
        ((1, 1), 4),
        ((1, 2), 0),
        ((1, 3), 0),
        ((2, 1), 1),
        ((2, 2), 0),
        ((2, 3), 2),
        ((3, 1), 0),
        ((3, 2), 1),
        ((3, 3), 1),
    ];
    for ((a, b), w) in expected {
        assert_eq!(weighted.weight(encode(&[a, b], 3)), w, "state ({a}, {b})");
    }

    let vertex = vertex_polynomial(&weighted);
    assert_eq!(vertex.to_string(), "u^2v^4 + u^2v^2 + 3u^2v + u^2 + 3u");
    assert_eq!(vertex.coefficient(&[2, 4]), 1);
    assert_eq!(vertex.coefficient(&[2, 2]), 1);
    assert_eq!(vertex.coefficient(&[2, 1]), 3);
    assert_eq!(vertex.coefficient(&[2, 0]), 1);
    assert_eq!(vertex.coefficient(&[1, 0]), 3);

    let edge = edge_polynomial(&weighted);
    assert_eq!(edge.to_string(), "s^4t + s^2 + st^4 + 2st + t^2 + 3");
    assert_eq!(edge.coefficient(&[4, 1]), 1);
    assert_eq!(edge.coefficient(&[2, 0]), 1);
    assert_eq!(edge.coefficient(&[1, 4]), 1);
    assert_eq!(edge.coefficient(&[1, 1]), 2);
    assert_eq!(edge.coefficient(&[0, 2]), 1);
    assert_eq!(edge.coefficient(&[0, 0]), 3);
    println!("acceptance criterion 2: PASS");
}

#[test]
fn criterion_03_cocycle_condition_is_sharp() {
    let (birack, phi) = ca13_with_phi5();
    assert_eq!(is_two_cocycle(birack, phi), Ok(()));

    let witnesses: &[((Elem, Elem), CocycleViolation)] = &[
        (
            (1, 1),
            CocycleViolation { x: 1, y: 1, z: 1, defect: 4, modulus: 5 },
        ),
        (
            (1, 2),
            CocycleViolation { x: 1, y: 2, z: 1, defect: 4, modulus: 5 },
        ),
        (
            (1, 3),
            CocycleViolation { x: 1, y: 2, z: 3, defect: 1, modulus: 5 },
        ),
        (
            (2, 1),
            CocycleViolation { x: 1, y: 2, z: 1, defect: 4, modulus: 5 },
        ),
        (
            (2, 3),
            CocycleViolation { x: 1, y: 2, z: 1, defect: 1, modulus: 5 },
        ),
        (
            (3, 1),
            CocycleViolation { x: 1, y: 2, z: 3, defect: 4, modulus: 5 },
        ),
        (
            (3, 2),
            CocycleViolation { x: 1, y: 2, z: 1, defect: 1, modulus: 5 },
        ),
        (
            (3, 3),
            CocycleViolation { x: 1, y: 1, z: 1, defect: 1, modulus: 5 },
        ),
    ];
    for ((x, y), expected) in witnesses {
        let perturbed = phi.with_entry(*x, *y, (phi.value(*x, *y) + 1) % 5);
        assert_eq!(
            is_two_cocycle(birack, &perturbed),
            Err(*expected),
            "perturbation at ({x}, {y})"
        );
    }
    let center = phi.with_entry(2, 2, (phi.value(2, 2) + 1) % 5);
    assert_eq!(is_two_cocycle(birack, &center), Ok(()));
    println!("acceptance criterion 3: PASS");
}

#[test]
fn criterion_04_rewriting_words_never_moves_the_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    let (ca13, phi) = ca13_with_phi5();
    for entry in catalog::entries() {
        let switch = entry.algebra.switch();
        for _ in 0..200 {
            let strands = rng.random_range(2..=4usize);
            let length = rng.random_range(0..=12usize);
            let word = random_word(strands, length, rng.random()).unwrap();
            let steps = rng.random_range(0..=10usize);
            let rewritten = rewrite_equivalent(&word, rng.random(), steps);

            let base = build_quiver(&switch, &word).unwrap();
            let moved = build_quiver(&switch, &rewritten).unwrap();
            assert_eq!(base.successor(), moved.successor(), "{}", entry.name);
            assert_eq!(
                quiver_polynomial(&base),
                quiver_polynomial(&moved),
                "{}",
                entry.name
            );

            if entry.name == "ca13" {
                let wb = build_weighted_quiver(ca13, phi, &word).unwrap();
                let wm = build_weighted_quiver(ca13, phi, &rewritten).unwrap();
                assert_eq!(wb.weights(), wm.weights());
                assert_eq!(vertex_polynomial(&wb), vertex_polynomial(&wm));
                assert_eq!(edge_polynomial(&wb), edge_polynomial(&wm));
            }
        }
    }
    println!("acceptance criterion 4: PASS");
}

#[test]
fn criterion_05_generator_maps_are_homomorphisms_exactly_when_medial() {
    for entry in catalog::entries() {
        let switch = entry.algebra.switch();
        let verdict = check_medial_representation(&switch, 2).unwrap();
        if entry.name == "nonmedial4" {
            let MedialRepVerdict::Violated {
                medial_witness,
                violation,
            } = verdict
            else {
                panic!("nonmedial4 must violate");
            };
            assert_eq!(
                medial_witness,
                MedialWitness {
                    identity: 1,
                    x: 2,
                    y: 1,
                    w: 2,
                    z: 3
                }
            );
            assert_eq!(violation.generator, 1);
            assert_eq!(violation.left, vec![2, 1]);
            assert_eq!(violation.right, vec![2, 3]);
        } else {
            assert_eq!(
                verdict,
                MedialRepVerdict::Homomorphic {
                    mode: CheckMode::Exhaustive
                },
                "{}",
                entry.name
            );
        }
    }
    println!("acceptance criterion 5: PASS");
}

#[test]
fn criterion_06_linear_action_matches_the_matrix_action() {
    for (modulus, t) in [(5u32, 2i64), (7, 3), (11, 5)] {
        for strands in [2usize, 3] {
            let states = (modulus as u64).pow(strands as u32);
            let trials = if states <= 125 { 125 } else { 100 };
            let verdict = burau_check(modulus, t, strands, trials, 60).unwrap();
            match verdict {
                BurauVerdict::Agrees { mode } => {
                    if states <= 125 {
                        assert_eq!(mode, CheckMode::Exhaustive);
                    } else {
                        assert_eq!(
                            mode,
                            CheckMode::Sampled {
                                samples: 100,
                                seed: 60
                            }
                        );
                    }
                }
                BurauVerdict::Disagrees { .. } => {
                    panic!("modulus {modulus}, t {t}, strands {strands}: {verdict:?}")
                }
            }
        }
    }
    println!("acceptance criterion 6: PASS");
}

#[test]
fn criterion_07_boundaries_square_to_zero_and_coboundaries_are_cocycles() {
    for entry in catalog::entries() {
        let Some(birack) = entry.algebra.birack() else {
            continue;
        };
        if birack.size() > 4 {
            continue;
        }
        for modulus in [2u32, 3, 5] {
            for x in 1..=birack.size() as Elem {
                for y in 1..=birack.size() as Elem {
                    for z in 1..=birack.size() as Elem {
                        let inner = boundary(birack, &[x, y, z], modulus);
                        assert!(
                            boundary_chain(birack, &inner).is_zero(),
                            "{} at ({x}, {y}, {z}) mod {modulus}",
                            entry.name
                        );
                    }
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(70);
    let biracks: Vec<_> = catalog::entries()
        .iter()
        .filter_map(|e| e.algebra.birack().map(|b| (e.name, b)))
        .collect();
    for _ in 0..50 {
        let (name, birack) = biracks[rng.random_range(0..biracks.len())];
        let modulus = [2u32, 3, 5, 7][rng.random_range(0..4)];
        let f: Vec<u32> = (0..birack.size())
            .map(|_| rng.random_range(0..modulus))
            .collect();
        let delta = coboundary1(birack, &f, modulus).unwrap();
        assert_eq!(is_two_cocycle(birack, &delta), Ok(()), "{name} mod {modulus}");
    }
    println!("acceptance criterion 7: PASS");
}

fn brute_cycle_histogram(switch: &FiniteSwitch, word: &BraidWord) -> BTreeMap<u32, u64> {
    let size = switch.size();
    let strands = word.strands();
    let count = (size as u64).pow(strands as u32);
    let image: Vec<u64> = (0..count)
        .map(|index| {
            let colors = decode(index as u32, size, strands);
            let moved = apply_braid(switch, word, &colors).unwrap();
            encode(&moved, size) as u64
        })
        .collect();
    let mut histogram = BTreeMap::new();
    for start in 0..count {
        let mut steps = 1u32;
        let mut position = image[start as usize];
        while position != start {
            position = image[position as usize];
            steps += 1;
        }
        *histogram.entry(steps).or_insert(0u64) += 1;
    }
    histogram
}

#[test]
fn criterion_08_cycle_counts_agree_with_a_direct_orbit_walk() {
    let mut rng = ChaCha8Rng::seed_from_u64(80);
    for entry in catalog::entries() {
        let switch = entry.algebra.switch();
        for strands in [2usize, 3] {
            for _ in 0..6 {
                let length = rng.random_range(0..=6usize);
                let word = random_word(strands, length, rng.random()).unwrap();
                let quiver = build_quiver(&switch, &word).unwrap();
                let poly = quiver_polynomial(&quiver);
                let brute = brute_cycle_histogram(&switch, &word);
                let from_poly: BTreeMap<u32, u64> = poly
                    .terms()
                    .iter()
                    .map(|(exps, &coeff)| (exps[0], coeff as u64))
                    .collect();
                assert_eq!(from_poly, brute, "{} on {} strands", entry.name, strands);
            }
        }
    }
    println!("acceptance criterion 8: PASS");
}

#[test]
fn criterion_09_coboundary_shifts_track_the_endpoints() {
    let (birack, phi) = ca13_with_phi5();
    let switch = birack.to_switch();
    let mut rng = ChaCha8Rng::seed_from_u64(90);
    for _ in 0..100 {
        let f: Vec<u32> = (0..3).map(|_| rng.random_range(0..5)).collect();
        let delta = coboundary1(birack, &f, 5).unwrap();
        let mut rows = phi.rows();
        for (x, row) in rows.iter_mut().enumerate() {
            for (y, entry) in row.iter_mut().enumerate() {
                *entry = (*entry + delta.value(x as Elem + 1, y as Elem + 1)) % 5;
            }
        }
        let shifted = Cochain2::from_rows(&rows, 5).unwrap();

        let strands = rng.random_range(2..=3usize);
        let length = rng.random_range(0..=8usize);
        let word = random_word(strands, length, rng.random()).unwrap();
        let start: Vec<Elem> = (0..strands).map(|_| rng.random_range(1..=3)).collect();
        let end = apply_braid(&switch, &word, &start).unwrap();

        let base = boltzmann_weight(birack, phi, &word, &start).unwrap() as i64;
        let moved = boltzmann_weight(birack, &shifted, &word, &start).unwrap() as i64;
        let f_start: i64 = start.iter().map(|&x| f[x as usize - 1] as i64).sum();
        let f_end: i64 = end.iter().map(|&x| f[x as usize - 1] as i64).sum();
        assert_eq!(moved, (base + f_start - f_end).rem_euclid(5));
        if end == start {
            assert_eq!(moved, base);
        }
    }
    println!("acceptance criterion 9: PASS");
}

#[test]
fn criterion_10_full_sweeps_stay_fast() {
    let ladder = |strands: usize| {
        let mut letters = Vec::new();
        for _ in 0..2 {
            letters.extend(1..strands as i32);
        }
        BraidWord::new(strands, letters).unwrap()
    };

    let switch = catalog::find("biquandle3").unwrap().algebra.switch();
    let start = Instant::now();
    let quiver = build_quiver(&switch, &ladder(8)).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(quiver.vertex_count(), 6561);
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "6561-state sweep took {elapsed:?}"
    );

    let big = constant_action_birack(&[2, 3, 4, 1], &[3, 4, 1, 2])
        .unwrap()
        .to_switch();
    let opts = SweepOptions {
        mode: ExecMode::Sequential,
        ..SweepOptions::default()
    };
    let start = Instant::now();
    let quiver = build_quiver_opts(&big, &ladder(8), opts).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(quiver.vertex_count(), 65536);
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "65536-state sequential sweep took {elapsed:?}"
    );
    println!("acceptance criterion 10: PASS");
}
