//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its elapsed time (run with `--nocapture` to see them).
//!
//! Two criteria are knowingly red, with the analysis in each failure
//! message: criterion 4 (the published codeword sign listing is not the +1
//! eigenstate of the published generators; the unique +1 state differs by
//! Z1Z2) and the n=5 half of criterion 8 (the exhaustive search finds twenty
//! degenerate [[5,1,3;1]] CSS codes, each re-verified against the projector
//! oracle; see `five_qubit_one_ebit_survivors_are_real_degenerate_codes` in
//! the stabkit crate).

use std::time::Instant;

use stabkit::clifford::{
    compute_codewords, conjugate_check_matrix, conjugate_pauli, knill_laflamme_verdicts,
    verify_logical_circuit, CliffordCircuit, CliffordGate, LogicalLabel, LogicalMap, StateVector,
};
use stabkit::cssea::{
    build_ea_code, css_generators, delete_column, hamming_7_4, reduce_to_ebit,
    steane_equivalence_transform,
};
use stabkit::search::{gaussian_binomial, search_css, SearchSpec};
use stabkit::stabilizer::{
    builtin_code, distance, error_set_single_and_pairs, single_and_pair_products,
    singleton_check, verify_correction, BuiltinCode, QuantumCode, Scope, SingletonVerdict,
    Verdict,
};
use stabkit::symplectic::{CheckMatrix, Pauli, PauliString};
use stabkit::synthesis::{
    apply_steps, min_ebits_css, symplectic_gram_schmidt, synthesize_encoder,
};
use stabkit::tables;
use stabkit_cli::parallel::run_search;

fn pass(number: u32, name: &str, start: Instant) {
    println!(
        "criterion {number:02} ({name}): PASS [{:.3}s]",
        start.elapsed().as_secs_f64()
    );
}

struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

#[test]
fn criterion_01_generator_table_validity() {
    let start = Instant::now();
    let code = builtin_code(BuiltinCode::SixQubitDegenerate);
    code.validate().expect("six-qubit fixture is a valid code");
    assert_eq!(code.stabilizer().first_anticommuting_pair(), None);
    assert!(code.stabilizer().is_independent());
    assert!(code.logical_x()[0]
        .symplectic_product(&code.logical_z()[0])
        .unwrap());
    pass(1, "generator table validity", start);
}

#[test]
fn criterion_02_single_error_correction_with_ledger() {
    let start = Instant::now();
    let code = builtin_code(BuiltinCode::SixQubitDegenerate);
    let all: Vec<usize> = (0..6).collect();

    // 18 singles plus the 153 pairwise products, with duplicates kept.
    let products = single_and_pair_products(6, &all).unwrap();
    assert_eq!(products.len(), 171);
    let report = verify_correction(&code, &products).unwrap();
    assert_eq!(report.checked_pairs, 171);
    assert!(report.all_corrected());

    // The distinct error values, one per ledger row.
    let distinct = error_set_single_and_pairs(6, &all).unwrap();
    assert_eq!(distinct.len(), 153);
    let z4z6: PauliString = "IIIZIZ".parse().unwrap();
    let verdicts = verify_correction(&code, &distinct).unwrap();
    for (e, v) in &verdicts.verdicts {
        if *e == z4z6 {
            assert_eq!(*v, Verdict::InStabilizer, "Z4Z6 is a stabilizer element");
        } else {
            assert!(matches!(v, Verdict::AnticommutesWith(_)), "{e}");
        }
    }

    // Every ledger row's listed generator really anticommutes (Z4Z6 is the
    // degenerate row: it IS generator four).
    assert_eq!(tables::ERROR_PAIR_LEDGER.len(), 153);
    let mut ledger_errors = Vec::new();
    for (label, gen) in tables::ERROR_PAIR_LEDGER {
        let e = tables::parse_error_label(label, 6).unwrap();
        if label == "Z4Z6" {
            assert_eq!(&e, code.stabilizer().row(3));
        } else {
            assert!(
                e.symplectic_product(code.stabilizer().row(gen - 1)).unwrap(),
                "{label} vs generator {gen}"
            );
        }
        ledger_errors.push(e);
    }
    ledger_errors.sort();
    assert_eq!(ledger_errors, distinct, "ledger covers the full error set");
    pass(2, "single-error correction + ledger", start);
}

#[test]
fn criterion_03_brute_force_distances() {
    let start = Instant::now();
    let six = builtin_code(BuiltinCode::SixQubitDegenerate);
    assert_eq!(distance(&six, 6, Scope::Global).unwrap(), Some(3));
    let steane = builtin_code(BuiltinCode::Steane);
    assert_eq!(distance(&steane, 7, Scope::Global).unwrap(), Some(3));
    pass(3, "brute-force distances", start);
}

#[test]
fn criterion_04_codeword_listing() {
    let start = Instant::now();
    let code = builtin_code(BuiltinCode::SixQubitDegenerate);
    let words = compute_codewords(&code).unwrap();
    assert_eq!(words.len(), 2);

    // The published listing (ket label, sign), amplitudes +/- 1/sqrt(8).
    let published_zero: [(&str, f64); 8] = [
        ("000000", 1.0),
        ("100111", -1.0),
        ("001111", 1.0),
        ("101000", -1.0),
        ("010010", -1.0),
        ("110101", 1.0),
        ("011101", 1.0),
        ("111010", -1.0),
    ];
    let published_one: [(&str, f64); 8] = [
        ("001010", 1.0),
        ("101101", 1.0),
        ("000101", 1.0),
        ("100010", 1.0),
        ("011000", -1.0),
        ("111111", -1.0),
        ("010111", 1.0),
        ("110000", 1.0),
    ];
    let amp = 1.0 / 8.0f64.sqrt();
    let mut mismatches = Vec::new();
    for (word, published, label) in [
        (&words[0], &published_zero, "|0>_L"),
        (&words[1], &published_one, "|1>_L"),
    ] {
        let mut expected = vec![0.0; 64];
        for (bits, sign) in published {
            expected[usize::from_str_radix(bits, 2).unwrap()] = sign * amp;
        }
        for (idx, a) in word.amplitudes().iter().enumerate() {
            assert!(a.im.abs() < 1e-10);
            if (a.re - expected[idx]).abs() > 1e-10 {
                mismatches.push(format!(
                    "{label} |{idx:06b}>: computed {:+.4}, published {:+.4}",
                    a.re, expected[idx]
                ));
            }
        }
    }
    assert!(
        mismatches.is_empty(),
        "computed codewords are the unique joint +1 eigenstates (fixed by every \
         generator; this is asserted green elsewhere) but differ from the published \
         listing, which is the +1 eigenstate of {{-h1, -h2, h3, h4, h5}} instead: the \
         published state equals Z1Z2 times the computed one. Differing amplitudes:\n{}",
        mismatches.join("\n")
    );
    pass(4, "codeword listing", start);
}

#[test]
fn criterion_05_logical_cnot() {
    let start = Instant::now();
    let code = builtin_code(BuiltinCode::SixQubitDegenerate);
    let circuit = tables::logical_cnot_circuit();
    let expected: LogicalMap = vec![
        (LogicalLabel::x(0), vec![LogicalLabel::x(0), LogicalLabel::x(1)]),
        (LogicalLabel::z(1), vec![LogicalLabel::z(0), LogicalLabel::z(1)]),
        (LogicalLabel::z(0), vec![LogicalLabel::z(0)]),
        (LogicalLabel::x(1), vec![LogicalLabel::x(1)]),
    ];
    assert!(verify_logical_circuit(&circuit, &code, 2, &expected).unwrap());
    pass(5, "logical CNOT", start);
}

#[test]
fn criterion_06_subsystem_variant() {
    let start = Instant::now();
    let code = builtin_code(BuiltinCode::SixQubitSubsystem);
    code.validate().unwrap();
    let all: Vec<usize> = (0..6).collect();
    let report =
        verify_correction(&code, &single_and_pair_products(6, &all).unwrap()).unwrap();
    assert!(report.all_corrected());
    for label in tables::GAUGE_LEDGER_ENTRIES {
        let e = tables::parse_error_label(label, 6).unwrap();
        let v = verify_correction(&code, &[e]).unwrap();
        assert_eq!(v.verdicts[0].1, Verdict::InGauge, "{label}");
    }
    assert_eq!(singleton_check(6, 1, 1, 3), SingletonVerdict::Saturated);
    pass(6, "subsystem variant", start);
}

#[test]
fn criterion_07_no_six_qubit_css_code() {
    let start = Instant::now();
    let spec = SearchSpec {
        alice_qubits: 6,
        logical_qubits: 1,
        required_distance: 3,
        ebits: 0,
    };
    let serial = search_css(&spec).unwrap();
    assert_eq!(serial.total_survivors(), 0);
    let splits: Vec<(usize, usize)> = serial.census.keys().copied().collect();
    assert_eq!(splits, [(0, 5), (1, 4), (2, 3), (3, 2), (4, 1), (5, 0)]);
    for ((dx, dz), c) in &serial.census {
        assert_eq!(
            c.enumerated as u128,
            gaussian_binomial(6, *dx) * gaussian_binomial(6, *dz)
        );
        assert_eq!(c.passed_distance, 0);
    }
    let parallel = run_search(&spec, 4).unwrap();
    assert!(serial.same_outcome(&parallel), "serial == parallel reports");
    pass(7, "no [[6,1,3]] CSS code", start);
}

#[test]
fn criterion_08_no_small_one_ebit_css_codes() {
    let start = Instant::now();
    assert!(!stabkit::search::dimension_feasibility(3, 1));

    let four = search_css(&SearchSpec {
        alice_qubits: 4,
        logical_qubits: 1,
        required_distance: 3,
        ebits: 1,
    })
    .unwrap();
    assert_eq!(four.total_survivors(), 0, "no [[4,1,3;1]] CSS code");

    let five = search_css(&SearchSpec {
        alice_qubits: 5,
        logical_qubits: 1,
        required_distance: 3,
        ebits: 1,
    })
    .unwrap();
    assert_eq!(
        five.total_survivors(),
        0,
        "the exhaustive search finds {} standard-form [[5,1,3;1]] CSS codes, each \
         re-verified independently by the symplectic checker and the projector \
         oracle (see the stabkit search test suite). They are degenerate codes \
         whose sender-only X generator has weight two, e.g. stabilizer \
         {{IIZIZI, IIIZZI, ZZIIIZ, XXIIII, IXXXXX}} with the receiver on the last \
         column. The published case analysis covers only the tripled (X,X) column \
         pattern, so this family falls outside it.",
        five.total_survivors()
    );
    pass(8, "no small one-ebit CSS codes", start);
}

#[test]
fn criterion_09_steane_is_among_seven_qubit_survivors() {
    let start = Instant::now();
    let spec = SearchSpec {
        alice_qubits: 7,
        logical_qubits: 1,
        required_distance: 3,
        ebits: 0,
    };
    let report = search_css(&spec).unwrap();
    assert!(report.total_survivors() >= 1);
    let steane = builtin_code(BuiltinCode::Steane);
    assert!(report
        .survivors
        .iter()
        .any(|s| s.generators.group_equal(steane.stabilizer()).unwrap()));
    // The fixture passes the same filter the search applies.
    let all: Vec<usize> = (0..7).collect();
    let check =
        verify_correction(&steane, &single_and_pair_products(7, &all).unwrap()).unwrap();
    assert!(check.all_corrected());
    pass(9, "Steane among seven-qubit survivors", start);
}

#[test]
fn criterion_10_ea_construction() {
    let start = Instant::now();
    let truncated = delete_column(&hamming_7_4(), 6).unwrap();
    let gens = css_generators(&truncated, &truncated).unwrap();
    let display = CheckMatrix::from_strs(&tables::CSS_SIX_QUBIT_ROWS).unwrap();
    assert_eq!(gens, display, "six-row display is reproduced verbatim");
    assert_eq!(min_ebits_css(truncated.matrix()), 1);
    assert_eq!(symplectic_gram_schmidt(&gens).unwrap().ebits, 1);
    let code = build_ea_code(&gens).unwrap();
    code.validate().unwrap();
    assert_eq!(distance(&code, 5, Scope::Alice).unwrap(), Some(3));
    pass(10, "entanglement-assisted construction", start);
}

#[test]
fn criterion_11_encoder_trace_replay() {
    let start = Instant::now();
    let mut current = CheckMatrix::from_rows(
        tables::ENCODER_TRACE_START
            .iter()
            .map(|(z, x)| tables::trace_row(z, x))
            .collect(),
    )
    .unwrap();
    for (i, stage) in tables::encoder_reference_trace().iter().enumerate() {
        current = apply_steps(&current, &stage.steps).unwrap();
        let expected = CheckMatrix::from_rows(
            stage.expected.iter().map(|(z, x)| tables::trace_row(z, x)).collect(),
        )
        .unwrap();
        assert_eq!(current, expected, "stage {} is bit-exact", i + 1);
    }
    pass(11, "encoder trace replay", start);
}

#[test]
fn criterion_12_encoder_synthesis_round_trip() {
    let start = Instant::now();
    for which in BuiltinCode::ALL {
        let code = builtin_code(which);
        let result = synthesize_encoder(&code).unwrap();
        let alice = code.alice_columns();
        let embedded = result.circuit.embedded(&alice, code.n()).unwrap();
        let recovered = conjugate_check_matrix(&embedded, &result.canonical_full).unwrap();
        assert!(
            recovered.group_equal(code.stabilizer()).unwrap(),
            "{which:?}: encoder reproduces the stabilizer group"
        );
        let (xs, zs) = result.encoded_logicals(&code).unwrap();
        for (i, x) in xs.iter().enumerate() {
            for (j, z) in zs.iter().enumerate() {
                assert_eq!(x.symplectic_product(z).unwrap(), i == j, "{which:?}");
            }
            assert!(code.stabilizer().commutes_with_all(x).unwrap());
        }
        for z in &zs {
            assert!(code.stabilizer().commutes_with_all(z).unwrap());
        }
    }
    pass(12, "encoder synthesis round trip", start);
}

#[test]
fn criterion_13_steane_equivalence() {
    let start = Instant::now();
    let ea = builtin_code(BuiltinCode::Ea613);
    let transformed = steane_equivalence_transform(&ea).unwrap();
    let h = hamming_7_4();
    let steane_rows = css_generators(&h, &h).unwrap();
    assert!(transformed.stabilizer().group_equal(&steane_rows).unwrap());
    assert_eq!(
        distance(&ea, 7, Scope::Global).unwrap(),
        Some(3),
        "global distance including the receiver column"
    );
    pass(13, "Steane equivalence", start);
}

#[test]
fn criterion_14_every_qubit_reduces_to_an_ebit() {
    let start = Instant::now();
    for which in [BuiltinCode::SixQubitDegenerate, BuiltinCode::Steane] {
        let code = builtin_code(which);
        for q in 0..code.n() {
            let ea = reduce_to_ebit(&code, q).unwrap();
            ea.validate()
                .unwrap_or_else(|d| panic!("{which:?} qubit {}: {d}", q + 1));
            let alice = ea.alice_columns();
            let report = verify_correction(
                &ea,
                &single_and_pair_products(ea.n(), &alice).unwrap(),
            )
            .unwrap();
            assert!(report.all_corrected(), "{which:?} qubit {}", q + 1);
        }
    }
    pass(14, "ebit reduction on every qubit", start);
}

#[test]
fn criterion_15_property_suites() {
    let start = Instant::now();
    let mut rng = SplitMix(0xACCE_97);

    // (a) conjugation preserves symplectic products: 10^4 draws.
    for _ in 0..10_000 {
        let n = 2 + rng.below(5);
        let gate = loop {
            let a = rng.below(n);
            let b = rng.below(n);
            match rng.below(5) {
                0 => break CliffordGate::H(a),
                1 => break CliffordGate::P(a),
                2 if a != b => break CliffordGate::Cnot(a, b),
                3 if a != b => break CliffordGate::Cz(a, b),
                4 if a != b => break CliffordGate::Swap(a, b),
                _ => continue,
            }
        };
        let mask = (1u64 << n) - 1;
        let p = PauliString::from_bits(n, rng.next() & mask, rng.next() & mask).unwrap();
        let q = PauliString::from_bits(n, rng.next() & mask, rng.next() & mask).unwrap();
        let before = p.symplectic_product(&q).unwrap();
        let after = conjugate_pauli(gate, &p)
            .unwrap()
            .symplectic_product(&conjugate_pauli(gate, &q).unwrap())
            .unwrap();
        assert_eq!(before, after);
    }

    // (b) tableau vs state vector, up to global phase, 100 random circuits.
    for _ in 0..100 {
        let n = 2 + rng.below(5);
        let mut circuit = CliffordCircuit::new(n);
        for _ in 0..10 + rng.below(15) {
            loop {
                let a = rng.below(n);
                let b = rng.below(n);
                let gate = match rng.below(5) {
                    0 => CliffordGate::H(a),
                    1 => CliffordGate::P(a),
                    2 if a != b => CliffordGate::Cnot(a, b),
                    3 if a != b => CliffordGate::Cz(a, b),
                    4 if a != b => CliffordGate::Swap(a, b),
                    _ => continue,
                };
                circuit.push(gate).unwrap();
                break;
            }
        }
        let mask = (1u64 << n) - 1;
        let p = PauliString::from_bits(n, rng.next() & mask, rng.next() & mask).unwrap();
        let q = circuit.conjugate(&p).unwrap();
        let mut s = StateVector::basis(n, rng.below(1 << n)).unwrap();
        for qubit in 0..n {
            if rng.below(2) == 1 {
                s.apply_gate(CliffordGate::H(qubit)).unwrap();
            }
        }
        let mut lhs = s.clone();
        lhs.apply_circuit(&circuit).unwrap();
        lhs.apply_pauli(&q).unwrap();
        let mut rhs = s;
        rhs.apply_pauli(&p).unwrap();
        rhs.apply_circuit(&circuit).unwrap();
        let pivot = lhs
            .amplitudes()
            .iter()
            .position(|a| a.norm() > 1e-6)
            .unwrap();
        let phase = rhs.amplitudes()[pivot] / lhs.amplitudes()[pivot];
        assert!((phase.norm() - 1.0).abs() < 1e-10);
        for (a, b) in lhs.amplitudes().iter().zip(rhs.amplitudes()) {
            assert!((a * phase - b).norm() < 1e-10);
        }
    }

    // (c) projector oracle vs symplectic checker on 100 random codes.
    for _ in 0..100 {
        let n = 2 + rng.below(4);
        let m = 1 + rng.below(n);
        let mut rows = Vec::with_capacity(m);
        for i in 0..m {
            rows.push(PauliString::single(n, i, Pauli::Z).unwrap());
        }
        let mut circuit = CliffordCircuit::new(n);
        for _ in 0..20 {
            loop {
                let a = rng.below(n);
                let b = rng.below(n);
                let gate = match rng.below(5) {
                    0 => CliffordGate::H(a),
                    1 => CliffordGate::P(a),
                    2 if a != b => CliffordGate::Cnot(a, b),
                    3 if a != b => CliffordGate::Cz(a, b),
                    4 if a != b => CliffordGate::Swap(a, b),
                    _ => continue,
                };
                circuit.push(gate).unwrap();
                break;
            }
        }
        let rows: Vec<PauliString> = rows
            .into_iter()
            .map(|r| circuit.conjugate(&r).unwrap())
            .collect();
        let code =
            QuantumCode::from_stabilizer(CheckMatrix::from_rows(rows).unwrap(), &[]).unwrap();
        let cols: Vec<usize> = (0..n).collect();
        let errors = error_set_single_and_pairs(n, &cols).unwrap();
        let report = verify_correction(&code, &errors).unwrap();
        let oracle = knill_laflamme_verdicts(&code, &errors, 1e-10).unwrap();
        for ((e, v), ok) in report.verdicts.iter().zip(&oracle) {
            assert_eq!(*v != Verdict::Fail, *ok, "{e}");
        }
    }

    // (d) subspace enumeration counts match the closed form for m <= 7.
    for m in 0..=7usize {
        for d in 0..=m {
            let count = stabkit::search::enumerate_gf2_subspaces(m, d)
                .unwrap()
                .count() as u128;
            assert_eq!(count, gaussian_binomial(m, d));
        }
    }
    pass(15, "property suites", start);
}
