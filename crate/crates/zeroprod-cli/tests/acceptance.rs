//! Acceptance suite: one test per release criterion, each printing a PASS
//! line (visible with `--nocapture`). Run with
//! `cargo test -p zeroprod-cli --test acceptance -- --nocapture`.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zeroprod::algebra::IdealSide;
use zeroprod::annlattice::{
    check_vnr_identity, is_maximal_pair, lann, pair_from_inner, rann, saturate_pair, OrthogonalPair,
};
use zeroprod::classify::{
    classify_max_zero_product, idempotent_classification, principal_right_ideal, ClassifyOptions,
    OracleMode, DEFAULT_BUDGET_ELEMENTS,
};
use zeroprod::dualpair::{DualPair, DualSide};
use zeroprod::lie::{cross_check, is_abelian_inner_ideal};
use zeroprod::linalg::{enumerate_subspaces, Mat};
use zeroprod::oracle::oracle_max_zero_product;
use zeroprod::{Algebra, Error, Subspace};

fn opts() -> ClassifyOptions {
    ClassifyOptions::default()
}

fn random_subspace<R: Rng>(rng: &mut R, ambient: usize, p: u64) -> Subspace {
    let rows = rng.gen_range(0..=ambient);
    if rows == 0 {
        return Subspace::zero(ambient, p);
    }
    let gens: Vec<Vec<u64>> = (0..rows)
        .map(|_| (0..ambient).map(|_| rng.gen_range(0..p)).collect())
        .collect();
    Subspace::from_generators(&Mat::from_rows(p, &gens))
}

/// Criterion 1: bijection at desk scale. For M_2(F_q), q = 2, 3, 5, the
/// classifier yields exactly q+1 entries of dimension 1 and equals the
/// exhaustive oracle as canonical sets, each under 5 seconds.
#[test]
fn criterion_01_bijection_at_desk_scale() {
    for (p, expected) in [(2u64, 3usize), (3, 4), (5, 6)] {
        let started = Instant::now();
        let alg = Algebra::matrix(2, p).unwrap();
        let report = classify_max_zero_product(&alg, &opts()).unwrap();
        assert_eq!(report.entries.len(), expected, "entry count at q = {p}");
        assert!(report.entries.iter().all(|e| e.subset.dim() == 1));
        assert_eq!(report.oracle.mode, Some(OracleMode::Exhaustive));
        assert!(report.oracle.ran && report.oracle.agrees);

        let mut classified = report.subsets();
        classified.sort();
        let oracle = oracle_max_zero_product(&alg, opts().budget_subspaces).unwrap();
        assert_eq!(
            classified, oracle,
            "set equality of canonical forms at q = {p}"
        );

        let elapsed = started.elapsed();
        assert!(elapsed < Duration::from_secs(5), "q = {p} took {elapsed:?}");
    }
    println!("acceptance criterion 1: PASS (M_2(F_q) gives q+1 one-dimensional entries equal to the exhaustive oracle for q = 2, 3, 5)");
}

/// Criterion 2: M_3(F_2) yields exactly 14 entries of dimension 2, and 1000
/// seeded randomized greedy-maximal zero-product subspaces all land in the
/// 14, in under 60 seconds.
#[test]
fn criterion_02_m3f2_randomized_oracle() {
    let started = Instant::now();
    let alg = Algebra::matrix(3, 2).unwrap();
    let report = classify_max_zero_product(&alg, &opts()).unwrap();
    assert_eq!(report.entries.len(), 14);
    assert!(report.entries.iter().all(|e| e.subset.dim() == 2));
    // The default policy runs exactly 1000 seeded walks here; agreement means
    // every walk endpoint is one of the classified subspaces.
    assert_eq!(report.oracle.mode, Some(OracleMode::Randomized));
    assert!(report.oracle.agrees);
    assert_eq!(report.oracle.seed, 0xA117);

    let classified: std::collections::BTreeSet<Subspace> = report.subsets().into_iter().collect();
    let found =
        zeroprod::oracle::randomized_max_zero_product(&alg, opts().budget_elements, 0xA117, 1000)
            .unwrap();
    assert!(!found.is_empty());
    for s in &found {
        assert!(
            classified.contains(s),
            "walk endpoint escaped the classified set"
        );
    }

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("acceptance criterion 2: PASS (14 two-dimensional entries; 1000 seeded greedy walks all land in them; {elapsed:?})");
}

/// Criterion 3: the Galois-connection identities (antitone, extensive,
/// closure stability) hold exactly on 200 seeded random subspaces of
/// M_2(F_5), with zero failures.
#[test]
fn criterion_03_galois_connection_suite() {
    let alg = Algebra::matrix(2, 5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0xA117);
    let mut failures = 0u32;
    for _ in 0..200 {
        let a = random_subspace(&mut rng, 4, 5);
        let b = a.sum(&random_subspace(&mut rng, 4, 5)); // a ⊆ b
        let antitone =
            lann(&alg, &a).contains(&lann(&alg, &b)) && rann(&alg, &a).contains(&rann(&alg, &b));
        let extensive =
            lann(&alg, &rann(&alg, &a)).contains(&a) && rann(&alg, &lann(&alg, &a)).contains(&a);
        let r = rann(&alg, &a);
        let l = lann(&alg, &a);
        let stable = rann(&alg, &lann(&alg, &r)) == r && lann(&alg, &rann(&alg, &l)) == l;
        if !(antitone && extensive && stable) {
            failures += 1;
        }
    }
    assert_eq!(failures, 0);
    println!("acceptance criterion 3: PASS (Galois identities exact on 200 seeded subspaces of M_2(F_5), 0 failures)");
}

/// Criterion 4: maximal-pair suite. Every saturate_pair output is maximal;
/// for classifier entries of M_2(F_2..5), intersection-containment implies
/// pair equality; and B·Q = R, Q·B = L for each entry.
#[test]
fn criterion_04_maximal_pair_suite() {
    for p in [2u64, 3, 5] {
        let alg = Algebra::matrix(2, p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0xA117 + p);
        let mut produced = 0;
        while produced < 50 {
            let coords: Vec<u64> = (0..4).map(|_| rng.gen_range(0..p)).collect();
            let e = alg.element(&coords);
            if e.is_zero() || !alg.mul(&e, &e).is_zero() {
                continue;
            }
            let seed = alg.span(&[e]);
            let pair = pair_from_inner(&alg, &seed).unwrap();
            let pair = saturate_pair(&alg, pair.right(), pair.left()).unwrap();
            assert!(is_maximal_pair(&alg, pair.right(), pair.left()));
            produced += 1;
        }

        let report = classify_max_zero_product(&alg, &opts()).unwrap();
        let q = alg.full_space();
        for e1 in &report.entries {
            assert!(is_maximal_pair(&alg, &e1.right, &e1.left));
            assert_eq!(
                alg.set_product(&e1.subset, &q),
                e1.right,
                "B·Q = R at q = {p}"
            );
            assert_eq!(
                alg.set_product(&q, &e1.subset),
                e1.left,
                "Q·B = L at q = {p}"
            );
            for e2 in &report.entries {
                if e2.subset.contains(&e1.subset) {
                    assert_eq!((&e1.right, &e1.left), (&e2.right, &e2.left));
                }
            }
        }
    }
    println!("acceptance criterion 4: PASS (saturation is maximal; intersection-containment forces pair equality; BQ = R and QB = L)");
}

/// Criterion 5: idempotent form. In M_2(F_2) and M_2(F_3), {eQ(1−e)} over
/// nontrivial idempotents equals the classifier set, and S_e1 = S_e2 exactly
/// when e1Q = e2Q, exhaustively.
#[test]
fn criterion_05_idempotent_form() {
    for p in [2u64, 3] {
        let alg = Algebra::matrix(2, p).unwrap();
        let by_idem = idempotent_classification(&alg, DEFAULT_BUDGET_ELEMENTS).unwrap();
        let mut image: Vec<Subspace> = by_idem.iter().map(|(_, s)| s.clone()).collect();
        image.sort();
        image.dedup();
        let mut classified = classify_max_zero_product(&alg, &opts()).unwrap().subsets();
        classified.sort();
        assert_eq!(image, classified, "idempotent image at q = {p}");
        for (e1, s1) in &by_idem {
            for (e2, s2) in &by_idem {
                assert_eq!(
                    s1 == s2,
                    principal_right_ideal(&alg, e1) == principal_right_ideal(&alg, e2),
                    "grouping law at q = {p}"
                );
            }
        }
    }
    println!("acceptance criterion 5: PASS (eQ(1−e) image equals the classifier set with eQ-grouping, exhaustively at q = 2, 3)");
}

/// Criterion 6: dual-pair geometry. For n = 2, 3 over GF(2) and n = 2 over
/// GF(5), the image of W ↦ W⊗W^⊥ under the fixed isomorphism equals the
/// classifier output, and W^⊥⊥ = W for every subspace.
#[test]
fn criterion_06_dual_pair_geometry() {
    for (n, p) in [(2usize, 2u64), (3, 2), (2, 5)] {
        let dp = DualPair::standard(n, p);
        let alg = Algebra::matrix(n, p).unwrap();
        let mut image: Vec<Subspace> = dp
            .classification()
            .iter()
            .map(|s| dp.to_matrix_subspace(s))
            .collect();
        image.sort();
        let mut classified = classify_max_zero_product(&alg, &opts()).unwrap().subsets();
        classified.sort();
        assert_eq!(image, classified, "dual-pair image at n = {n}, p = {p}");

        for w in enumerate_subspaces(n, p, 10_000).unwrap() {
            assert_eq!(dp.perp(&dp.perp(&w, DualSide::InY), DualSide::InX), w);
            assert_eq!(dp.perp(&dp.perp(&w, DualSide::InX), DualSide::InY), w);
        }
    }
    println!("acceptance criterion 6: PASS (W ↦ W⊗W^⊥ image equals the classifier output; double perp is the identity)");
}

/// Criterion 7: the von Neumann regular identity R·L = R ∩ L on every
/// classified pair in all matrix fixtures.
#[test]
fn criterion_07_vnr_identity() {
    for (n, p) in [(2usize, 2u64), (2, 3), (2, 5), (3, 2)] {
        let alg = Algebra::matrix(n, p).unwrap();
        let report = classify_max_zero_product(&alg, &opts()).unwrap();
        for e in &report.entries {
            let pair = OrthogonalPair::new(&alg, e.right.clone(), e.left.clone()).unwrap();
            assert!(
                check_vnr_identity(&alg, &pair),
                "R·L = R∩L fails at n = {n}, p = {p}"
            );
            assert_eq!(alg.set_product(&e.right, &e.left), e.subset);
        }
    }
    println!("acceptance criterion 7: PASS (R·L = R ∩ L for every classified pair in M_2(F_2,3,5) and M_3(F_2))");
}

/// Criterion 8: Lie layer. In M_2(F_5) all 6 classified subspaces are
/// abelian inner ideals; span{1, E12} is an abelian inner ideal that is not
/// zero-product; the characteristic gate rejects p = 2, 3.
#[test]
fn criterion_08_lie_layer() {
    let alg = Algebra::matrix(2, 5).unwrap();
    let (report, lie) = cross_check(&alg, &opts()).unwrap();
    assert_eq!(report.entries.len(), 6);
    assert!(lie.checked && lie.all_abelian_inner);
    assert!(lie.unital_obstruction_found);
    for e in &report.entries {
        assert!(is_abelian_inner_ideal(&alg, &e.subset));
    }

    let witness = alg.span(&[alg.unit().unwrap(), alg.basis_element(1)]);
    assert!(is_abelian_inner_ideal(&alg, &witness));
    assert!(
        !alg.set_product(&witness, &witness).is_zero(),
        "witness is not zero-product"
    );
    assert!(witness.contains(
        &report
            .entries
            .iter()
            .find(|e| e.subset == alg.span(&[alg.basis_element(1)]))
            .unwrap()
            .subset
    ));

    for p in [2u64, 3] {
        let small = Algebra::matrix(2, p).unwrap();
        assert!(matches!(
            cross_check(&small, &opts()),
            Err(Error::Characteristic(_))
        ));
    }
    println!("acceptance criterion 8: PASS (entries are abelian inner ideals; span{{1, E12}} obstruction confirmed; characteristic gate rejects 2 and 3)");
}

/// Criterion 9: negative controls. upper_triangular(2,2) fails semiprimeness
/// with witness E12 and the classify gate with exit code 2; an algebra with
/// no nonzero square-zero elements gets the trivial report.
#[test]
fn criterion_09_negative_controls() {
    let ut = Algebra::upper_triangular(2, 2).unwrap();
    let witness = ut
        .semiprime_witness(DEFAULT_BUDGET_ELEMENTS)
        .unwrap()
        .expect("witness");
    assert_eq!(ut.format_element(&witness), "E12");
    assert!(matches!(
        classify_max_zero_product(&ut, &opts()),
        Err(Error::Hypothesis("prime"))
    ));

    let out = Command::new(env!("CARGO_BIN_EXE_zeroprod"))
        .args(["classify", "ut:2:2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hypothesis failed: prime"));

    // GF(3) = M_1(F_3): prime with nonzero core but no square-zero elements.
    let field = Algebra::matrix(1, 3).unwrap();
    let report = classify_max_zero_product(&field, &opts()).unwrap();
    assert!(report.entries.is_empty());
    assert!(!report.hypotheses.has_nilpotent);
    assert!(!report.oracle.ran);
    println!("acceptance criterion 9: PASS (ut(2,2) fails semiprime with witness E12 and gates with exit 2; nilpotent-free algebra gets the trivial report)");
}

/// Criterion 10: determinism. Two CLI runs of
/// `classify mat:3:2 --seed 0xA117 --format json` are byte-identical.
#[test]
fn criterion_10_byte_identical_runs() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_zeroprod"))
            .args([
                "classify", "mat:3:2", "--seed", "0xA117", "--format", "json",
            ])
            .output()
            .unwrap()
    };
    let first = run();
    let second = run();
    assert!(first.status.success() && second.status.success());
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout, "outputs differ between runs");
    println!("acceptance criterion 10: PASS (classify mat:3:2 is byte-identical across runs)");
}

/// The predicates behind the gate, checked once against the fixtures the
/// criteria rely on (prime + nonzero core + nilpotents on matrix algebras).
#[test]
fn gate_predicates_hold_on_positive_fixtures() {
    for (n, p) in [(2usize, 2u64), (2, 3), (2, 5), (3, 2)] {
        let alg = Algebra::matrix(n, p).unwrap();
        assert!(alg.is_prime(DEFAULT_BUDGET_ELEMENTS).unwrap());
        assert!(alg.core(DEFAULT_BUDGET_ELEMENTS).unwrap().is_full());
        assert!(alg.has_nonzero_nilpotent(DEFAULT_BUDGET_ELEMENTS).unwrap());
        assert!(alg.is_ideal(&alg.full_space(), IdealSide::TwoSided));
    }
}
