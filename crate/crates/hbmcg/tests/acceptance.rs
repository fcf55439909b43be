//! Release acceptance suite.
//!
//! Each test pins one headline check, prints a single PASS or FAIL line, and
//! asserts exact equality against the reference table of expected values
//! (the same table the `report` subcommand renders). Two checks currently
//! fail, reproducibly and after independent cross-checks; the README section
//! "Known discrepancies" walks through the evidence. The failures are kept
//! red here on purpose: they document a disagreement with the reference
//! table rather than a regression.

use hbmcg::action::{verify_presentation, ModuleSpec, Representation};
use hbmcg::bar::{bar_h1, s3_sign_matrices, s3_standard_matrices, FiniteGroup};
use hbmcg::homology::{abelianization, h0, PresentationComplex, Theory};
use hbmcg::linalg::{cokernel_structure, hnf, inverse_unimodular, kernel_basis, snf};
use hbmcg::linalg::{AbelianGroup, Ring};
use hbmcg::matrix::IntMatrix;
use hbmcg::wajnryb::{Presentation, Relation};
use hbmcg::word::{Gen, Word};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

/// Modules the acceptance table covers, keyed by their parse names.
const MODULES: [&str; 3] = ["H", "L", "H/L"];

static PRESENTATIONS: Lazy<BTreeMap<u32, Presentation>> = Lazy::new(|| {
    (2..=5)
        .map(|g| (g, Presentation::wajnryb(g).unwrap()))
        .collect()
});

static COMPLEXES: Lazy<BTreeMap<(u32, &'static str), PresentationComplex>> = Lazy::new(|| {
    let mut map = BTreeMap::new();
    for g in 2..=4u32 {
        for name in MODULES {
            let spec: ModuleSpec = name.parse().unwrap();
            let rho = Representation::for_module(g, &spec).unwrap();
            map.insert((g, name), PresentationComplex::new(&PRESENTATIONS[&g], &rho));
        }
    }
    map
});

fn ab(free_rank: usize, torsion: &[u64]) -> AbelianGroup {
    AbelianGroup {
        free_rank,
        torsion: torsion.iter().map(|&d| BigInt::from(d)).collect(),
    }
}

/// Print the one-line verdict for a criterion and panic on failure.
fn verdict(number: u32, title: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("ACCEPTANCE {number} {title}: PASS");
    } else {
        println!("ACCEPTANCE {number} {title}: FAIL");
        for f in failures {
            println!("  {f}");
        }
        panic!(
            "acceptance criterion {number} ({title}) failed:\n  {}",
            failures.join("\n  ")
        );
    }
}

#[test]
fn criterion_1_presentation_consistency() {
    let mut failures = vec![];
    for g in 2..=4u32 {
        let start = Instant::now();
        let p = Presentation::wajnryb(g).unwrap();
        for name in MODULES {
            let spec: ModuleSpec = name.parse().unwrap();
            let rho = Representation::for_module(g, &spec).unwrap();
            let report = verify_presentation(&p, &rho);
            if name == "H" && report.cross_checks == 0 {
                failures.push(format!("genus {g}: closed-form cross-checks did not run"));
            }
            if !report.ok() {
                failures.push(format!(
                    "genus {g} module {name}: {} of {} relation checks failed: {}",
                    report.failures.len(),
                    report.relations_checked,
                    report.failures.join("; ")
                ));
            }
        }
        let elapsed = start.elapsed();
        let limit = if g <= 3 {
            Duration::from_secs(10)
        } else {
            Duration::from_secs(300)
        };
        if elapsed > limit {
            failures.push(format!(
                "genus {g} verification took {elapsed:?}, over the {limit:?} budget"
            ));
        }
    }
    verdict(1, "every relation acts identically on H, L, H/L", &failures);
}

#[test]
fn criterion_2_first_homology_with_h_coefficients() {
    let expected: [(u32, &[u64]); 4] = [(2, &[2, 2]), (3, &[2, 4]), (4, &[6]), (5, &[8])];
    let mut failures = vec![];
    for (g, torsion) in expected {
        let start = Instant::now();
        let p = Presentation::wajnryb(g).unwrap();
        let rho = Representation::homology(g).unwrap();
        let got = PresentationComplex::new(&p, &rho)
            .h1(Theory::Homology, &Ring::Z)
            .unwrap();
        let elapsed = start.elapsed();
        let want = ab(0, torsion);
        if got != want {
            failures.push(format!("H_1(genus {g}; H) = {got}, expected {want}"));
        }
        let limit = if g == 5 {
            Duration::from_secs(1800)
        } else {
            Duration::from_secs(300)
        };
        if elapsed > limit {
            failures.push(format!("genus {g} took {elapsed:?}, over the {limit:?} budget"));
        }
    }
    verdict(2, "H_1(-; H) is [2,2], [2,4], [6], [8] for genus 2..5", &failures);
}

#[test]
fn criterion_3_first_homology_with_l_and_quotient_coefficients() {
    let expected: [(&str, u32, &[u64]); 6] = [
        ("L", 2, &[2]),
        ("L", 3, &[2, 2]),
        ("L", 4, &[3]),
        ("H/L", 2, &[2, 2]),
        ("H/L", 3, &[2, 2]),
        ("H/L", 4, &[2]),
    ];
    let mut failures = vec![];
    for (name, g, torsion) in expected {
        let got = COMPLEXES[&(g, name)].h1(Theory::Homology, &Ring::Z).unwrap();
        let want = ab(0, torsion);
        if got != want {
            failures.push(format!(
                "H_1(genus {g}; {name}) = {got}, reference table says {want} \
                 (reproducible; see README, Known discrepancies)"
            ));
        }
    }
    verdict(3, "H_1(-; L) and H_1(-; H/L) match the reference table", &failures);
}

#[test]
fn criterion_4_abelianization() {
    let mut failures = vec![];
    let expected: [(u32, AbelianGroup); 3] = [
        (2, ab(1, &[2, 2])),
        (3, ab(0, &[2])),
        (4, ab(0, &[2])),
    ];
    for (g, want) in expected {
        let got = abelianization(&PRESENTATIONS[&g]);
        if got != want {
            failures.push(format!("abelianization at genus {g} is {got}, expected {want}"));
        }
    }
    verdict(4, "abelianization is Z+(Z/2)^2, Z/2, Z/2 for genus 2..4", &failures);
}

#[test]
fn criterion_5_h_cohomology_over_small_rings() {
    // H^1(genus 2; H over A) is the 2-torsion A[2]^2 and H^1(genus 3; H over
    // A) is A[4] + A[2], for A in {Z, Z/2, Z/3, Z/4, Z/8}.
    let mut failures = vec![];
    let rings = [Ring::Z, Ring::Mod(2), Ring::Mod(3), Ring::Mod(4), Ring::Mod(8)];
    for (g, orders) in [(2u32, [2u64, 2]), (3, [4, 2])] {
        for ring in &rings {
            let got = COMPLEXES[&(g, "H")].h1(Theory::Cohomology, ring).unwrap();
            let want = match ring {
                Ring::Z => AbelianGroup::trivial(),
                Ring::Mod(n) => AbelianGroup::from_cyclic_orders(&[
                    BigInt::from(orders[0].gcd(n)),
                    BigInt::from(orders[1].gcd(n)),
                ]),
            };
            if got != want {
                failures.push(format!(
                    "H^1(genus {g}; H over {ring}) = {got}, expected {want}"
                ));
            }
        }
    }
    verdict(5, "H^1(-; H) over Z, Z/2, Z/3, Z/4, Z/8 matches the torsion formulas", &failures);
}

#[test]
fn criterion_6_coinvariants() {
    let mut failures = vec![];
    for g in 2..=4u32 {
        for name in ["H", "L"] {
            let spec: ModuleSpec = name.parse().unwrap();
            let rho = Representation::for_module(g, &spec).unwrap();
            let got = h0(&rho, Theory::Homology, &Ring::Z).unwrap();
            if got != AbelianGroup::trivial() {
                failures.push(format!("coinvariants of {name} at genus {g}: {got}, expected 0"));
            }
        }
    }
    for g in 2..=3u32 {
        for name in ["tensor(L,dual(L))", "tensor(L,H)"] {
            let spec: ModuleSpec = name.parse().unwrap();
            let rho = Representation::for_module(g, &spec).unwrap();
            let got = h0(&rho, Theory::Homology, &Ring::Z).unwrap();
            if got != ab(1, &[]) {
                failures.push(format!("coinvariants of {name} at genus {g}: {got}, expected Z"));
            }
        }
    }
    verdict(6, "coinvariants of H and L vanish; tensor coinvariants are Z", &failures);
}

#[test]
fn criterion_7_cohomology_against_homology_over_each_ring() {
    // The reference comparison: H^1 over Z/n of a module M against
    // Hom(H_1 over Z of the same M, Z/n). The intersection pairing makes L
    // and H/L dual to each other (H is self-dual), so universal coefficients
    // actually relates H^1(-; M) to the homology of the dual module; the
    // corrected comparison is asserted below and must never fail.
    let dual_of = |name: &str| match name {
        "H" => "H",
        "L" => "H/L",
        _ => "L",
    };
    let mut failures = vec![];
    let mut corrected_failures = vec![];
    for name in MODULES {
        for g in 2..=4u32 {
            let homology = COMPLEXES[&(g, name)].h1(Theory::Homology, &Ring::Z).unwrap();
            let dual_homology = COMPLEXES[&(g, dual_of(name))]
                .h1(Theory::Homology, &Ring::Z)
                .unwrap();
            for n in [2u64, 3, 4, 8] {
                let cohomology = COMPLEXES[&(g, name)]
                    .h1(Theory::Cohomology, &Ring::Mod(n))
                    .unwrap();
                let same_module = homology.hom_to_cyclic(n);
                if cohomology != same_module {
                    failures.push(format!(
                        "genus {g}, module {name}, ring Z/{n}: H^1 = {cohomology} but \
                         Hom(H_1, Z/{n}) = {same_module} \
                         (see README, Known discrepancies)"
                    ));
                }
                let dual_module = dual_homology.hom_to_cyclic(n);
                if cohomology != dual_module {
                    corrected_failures.push(format!(
                        "genus {g}, module {name}, ring Z/{n}: H^1 = {cohomology} but \
                         Hom(H_1 of {}, Z/{n}) = {dual_module}",
                        dual_of(name)
                    ));
                }
            }
        }
    }
    assert!(
        corrected_failures.is_empty(),
        "the dual-module comparison must hold in all 36 cases:\n  {}",
        corrected_failures.join("\n  ")
    );
    if !failures.is_empty() {
        println!(
            "note: all 36 dual-module comparisons pass; the failures below are \
             exactly the same-module pairings of the dual pair L, H/L at genus 4"
        );
    }
    verdict(7, "H^1 over Z/n equals Hom(H_1 over Z, Z/n) module by module", &failures);
}

#[test]
fn criterion_8_bar_resolution_oracle() {
    let start = Instant::now();
    let mut failures = vec![];

    // Shared dimension-2 modules: the swap action for C2 and the sum-zero
    // plane of the permutation action for C3 (the cube of the lex-order
    // position-cycle) and S3.
    let standard = s3_standard_matrices();
    let sign = s3_sign_matrices();
    let swap = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
    let rot = standard[3].clone();
    let one = IntMatrix::identity(1);
    let neg = one.neg();

    let x = Word::gen(Gen::X(1));
    let y = Word::gen(Gen::X(2));
    let relation = |label: &str, lhs: Word| Relation {
        label: label.to_string(),
        lhs,
        rhs: Word::identity(),
    };

    // Each case: a finite group with one matrix per element, and a matching
    // presentation with one matrix per generator.
    struct Case {
        name: &'static str,
        group: FiniteGroup,
        element_mats: Vec<IntMatrix>,
        presentation: Presentation,
        generator_mats: Vec<IntMatrix>,
    }

    let c2 = |mat: &IntMatrix, name: &'static str| Case {
        name,
        group: FiniteGroup::cyclic(2),
        element_mats: vec![IntMatrix::identity(mat.rows()), mat.clone()],
        presentation: Presentation::from_parts(
            vec![Gen::X(1)],
            vec![relation("x^2", x.pow(2))],
        ),
        generator_mats: vec![mat.clone()],
    };
    let c3 = |mat: &IntMatrix, name: &'static str| Case {
        name,
        group: FiniteGroup::cyclic(3),
        element_mats: vec![
            IntMatrix::identity(mat.rows()),
            mat.clone(),
            mat.mul(mat),
        ],
        presentation: Presentation::from_parts(
            vec![Gen::X(1)],
            vec![relation("x^3", x.pow(3))],
        ),
        generator_mats: vec![mat.clone()],
    };
    // r is the 3-cycle at lex index 3 and s the transposition at lex index 2.
    let s3 = |mats: &[IntMatrix], name: &'static str| Case {
        name,
        group: FiniteGroup::symmetric3(),
        element_mats: mats.to_vec(),
        presentation: Presentation::from_parts(
            vec![Gen::X(1), Gen::X(2)],
            vec![
                relation("r^3", x.pow(3)),
                relation("s^2", y.pow(2)),
                relation("(rs)^2", x.mul(&y).pow(2)),
            ],
        ),
        generator_mats: vec![mats[3].clone(), mats[2].clone()],
    };

    let trivial1 = |order: usize| vec![IntMatrix::identity(1); order];
    let cases = vec![
        c2(&one, "C2 trivial"),
        c2(&neg, "C2 sign"),
        c2(&swap, "C2 swap plane"),
        c3(&one, "C3 trivial"),
        c3(&one, "C3 sign (restricts to trivial)"),
        c3(&rot, "C3 rotation plane"),
        s3(&trivial1(6), "S3 trivial"),
        s3(&sign, "S3 sign"),
        s3(&standard, "S3 standard plane"),
    ];

    for case in &cases {
        let rho = Representation::from_matrices(
            0,
            ModuleSpec::Trivial(case.generator_mats[0].rows()),
            case.presentation.gens.clone(),
            case.generator_mats.clone(),
        )
        .unwrap();
        let complex = PresentationComplex::new(&case.presentation, &rho);
        for theory in [Theory::Homology, Theory::Cohomology] {
            let from_bar = bar_h1(&case.group, &case.element_mats, theory, &Ring::Z).unwrap();
            let from_presentation = complex.h1(theory, &Ring::Z).unwrap();
            if from_bar != from_presentation {
                failures.push(format!(
                    "{} ({theory}): bar resolution gives {from_bar}, presentation gives {from_presentation}",
                    case.name
                ));
            }
        }
    }

    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(1) {
        failures.push(format!("oracle suite took {elapsed:?}, over the 1 s budget"));
    }
    verdict(8, "bar-resolution oracle agrees on C2, C3, S3 in both theories", &failures);
}

#[test]
fn criterion_9_randomized_normal_form_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut failures = vec![];
    let trials = 1000usize;

    for trial in 0..trials {
        let rows = rng.gen_range(1..=6usize);
        let cols = rng.gen_range(1..=6usize);
        let a = IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-20i64..=20)));
        let mut fail = |msg: String| failures.push(format!("trial {trial}: {msg}"));

        let (d, u, v) = snf(&a);
        if u.mul(&a).mul(&v) != d {
            fail("U*A*V != D".to_string());
        }
        if inverse_unimodular(&u).is_err() || inverse_unimodular(&v).is_err() {
            fail("SNF transform is not unimodular".to_string());
        }
        let k = rows.min(cols);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j && !d.get(i, j).is_zero() {
                    fail(format!("D has an off-diagonal entry at ({i},{j})"));
                }
            }
        }
        for i in 0..k {
            if d.get(i, i).is_negative() {
                fail(format!("D has a negative invariant factor at {i}"));
            }
            if i + 1 < k {
                let (cur, next) = (d.get(i, i), d.get(i + 1, i + 1));
                let chain_ok = if cur.is_zero() {
                    next.is_zero()
                } else {
                    (next % cur).is_zero()
                };
                if !chain_ok {
                    fail(format!("divisibility chain breaks at {i}: {cur} then {next}"));
                }
            }
        }

        let (h, t) = hnf(&a);
        if t.mul(&a) != h {
            fail("T*A != H".to_string());
        }
        if inverse_unimodular(&t).is_err() {
            fail("HNF transform is not unimodular".to_string());
        }
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero_row = false;
        for r in 0..h.rows() {
            let lead = (0..h.cols()).find(|&c| !h.get(r, c).is_zero());
            match lead {
                None => seen_zero_row = true,
                Some(c) => {
                    if seen_zero_row {
                        fail(format!("nonzero row {r} below a zero row"));
                    }
                    if let Some(prev) = last_pivot {
                        if c <= prev {
                            fail(format!("pivot columns not strictly increasing at row {r}"));
                        }
                    }
                    last_pivot = Some(c);
                    let pivot = h.get(r, c).clone();
                    if pivot.is_negative() {
                        fail(format!("negative pivot in row {r}"));
                    }
                    for above in 0..r {
                        let entry = h.get(above, c);
                        if entry.is_negative() || entry >= &pivot {
                            fail(format!("entry above pivot ({above},{c}) not reduced"));
                        }
                    }
                }
            }
        }

        let kernel = kernel_basis(&a, &Ring::Z);
        if kernel.cols() > 0 && !a.mul(&kernel).is_zero() {
            fail("kernel columns are not annihilated".to_string());
        }

        let p = random_unimodular(&mut rng, rows);
        let q = random_unimodular(&mut rng, cols);
        let before = cokernel_structure(&a, &Ring::Z);
        let after = cokernel_structure(&p.mul(&a).mul(&q), &Ring::Z);
        if before != after {
            fail(format!("cokernel changed under unimodular transforms: {before} vs {after}"));
        }
    }

    if failures.is_empty() {
        println!("ACCEPTANCE 9 normal-form identities on {trials} random matrices: PASS");
    } else {
        verdict(9, "normal-form identities on random matrices", &failures);
    }
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    if n < 2 {
        if rng.gen_bool(0.5) {
            m = m.neg();
        }
        return m;
    }
    for _ in 0..(3 * n) {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        match rng.gen_range(0..3u8) {
            0 => {
                let c = BigInt::from(rng.gen_range(-3i64..=3));
                for col in 0..n {
                    let add = m.get(i, col) * &c;
                    *m.entry_mut(j, col) += add;
                }
            }
            1 => {
                for col in 0..n {
                    let a = m.get(i, col).clone();
                    let b = m.get(j, col).clone();
                    m.set(i, col, b);
                    m.set(j, col, a);
                }
            }
            _ => {
                for col in 0..n {
                    let negated = -m.get(i, col).clone();
                    m.set(i, col, negated);
                }
            }
        }
    }
    m
}
