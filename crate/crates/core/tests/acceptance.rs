//! Acceptance suite: one test per criterion, each printing its own
//! PASS/FAIL line (visible with `--nocapture`, or in the failure output).
//!
//! Criterion 2 is expected to fail: four Z3/Z4 cells of the reference
//! index table (rows 10–12) are arithmetically inconsistent with the
//! table's own weight rows, so no definitional computation can reproduce
//! them. The failure message lists the cells; the verify suite carries
//! the same four cells as documented mismatches.

mod common;

use common::{random_digraph, random_permutation, random_rational, relabel, XorShift64};
use khazamula::fib::{fibonacci, weight_vector, zeckendorf};
use khazamula::graph::{build_cycle, directed_join, Digraph};
use khazamula::indices::{f_zagreb, zagreb};
use khazamula::irregularity::{
    circ_integral, irr_k, irr_kc, quad_reference, Convention, LinearParams,
};
use khazamula::jaco;
use khazamula::verify::{
    all_expected, directed_join_rhs, reproduce_table, run_suite, ClaimId, RecordValue,
    SuiteOptions, TableId, Verdict, REFERENCE_TABLE1, REFERENCE_TABLE2,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use std::time::Instant;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn suite(claims: &[ClaimId], max_n: Option<u32>) -> Vec<khazamula::verify::VerificationRecord> {
    run_suite(&SuiteOptions { claims: claims.to_vec(), max_n })
}

#[test]
fn criterion_1_table1_reproduction() {
    let start = Instant::now();
    let report = reproduce_table(TableId::Table1, 12);
    let elapsed = start.elapsed();
    assert_eq!(report.rows.len(), REFERENCE_TABLE1.len());
    assert!(
        report.diffs.is_empty(),
        "criterion 1 FAIL: degree table cells differ: {:?}",
        report.diffs
    );
    assert!(
        elapsed.as_secs_f64() < 0.1,
        "criterion 1 FAIL: took {elapsed:?}"
    );
    println!("criterion 1 PASS: degree/weight table rows 1..=12 reproduce exactly ({elapsed:?})");
}

#[test]
fn criterion_2_table2_reproduction() {
    let start = Instant::now();
    let report = reproduce_table(TableId::Table2, 12);
    let elapsed = start.elapsed();
    assert_eq!(report.rows.len(), REFERENCE_TABLE2.len());
    assert!(
        elapsed.as_secs_f64() < 0.1,
        "criterion 2 FAIL: took {elapsed:?}"
    );

    // Spot rows named by the criterion.
    let row5 = &report.rows[4].cells;
    assert_eq!(row5[2..], ["8", "-6", "11", "16"], "row 5 spot values");

    if report.diffs.is_empty() {
        println!("criterion 2 PASS: index table rows 1..=12 reproduce exactly ({elapsed:?})");
    } else {
        let cells: Vec<String> = report
            .diffs
            .iter()
            .map(|d| {
                format!(
                    "n={} {}: computed {} vs reference {}",
                    d.n, d.column, d.computed, d.reference
                )
            })
            .collect();
        println!(
            "criterion 2 FAIL: {} reference cells are inconsistent with their own weight rows: {}",
            cells.len(),
            cells.join("; ")
        );
        panic!(
            "criterion 2 FAIL: definitional computation cannot reproduce reference cells: {}",
            cells.join("; ")
        );
    }
}

#[test]
fn criterion_3_linear_propositions_exact() {
    let records = suite(
        &[
            ClaimId::Prop3_1,
            ClaimId::Prop3_2,
            ClaimId::Prop3_3,
            ClaimId::Prop3_4,
            ClaimId::Ex1,
        ],
        None,
    );
    // Sweep sizes pinned: 29·3 + 28·3 + 18·3 + 400·3 + 8 instances.
    assert_eq!(records.len(), 29 * 3 + 28 * 3 + 18 * 3 + 400 * 3 + 8);
    for r in &records {
        assert_eq!(r.tolerance, 0.0, "exact comparison required for {r:?}");
        assert_eq!(
            r.verdict,
            Verdict::Match,
            "criterion 3 FAIL: {} [{}]: {} vs {}",
            r.claim,
            r.instance,
            r.definitional,
            r.claimed
        );
    }

    // The star values the first example problem states literally.
    for (orientation, n, slope, want) in [
        ("left-to-right", 1u32, 1i64, rat(0, 1)),
        ("right-to-left", 1, 1, rat(0, 1)),
        ("left-to-right", 5, 1, rat(12, 1)),
        ("right-to-left", 5, 1, rat(60, 1)),
        ("left-to-right", 5, 2, rat(24, 1)),
        ("right-to-left", 5, 2, rat(120, 1)),
    ] {
        let instance = format!("{orientation}, n={n}, slope={slope}, intercept=0");
        let record = records
            .iter()
            .find(|r| r.claim == ClaimId::Ex1 && r.instance == instance)
            .unwrap_or_else(|| panic!("missing Ex1 instance {instance}"));
        assert_eq!(record.definitional, RecordValue::Exact(want));
    }
    println!("criterion 3 PASS: {} linear closed-form instances match exactly", records.len());
}

#[test]
fn criterion_4_join_example_ratio_and_identity() {
    let k1 = Digraph::new(1, []).unwrap();
    let mut checked = 0;
    for n in 3..=12u32 {
        for slope in [1i64, 2, 3] {
            let params = LinearParams::from_integers(slope, 0);
            let cycle = build_cycle(n).unwrap();
            let join = directed_join(&cycle, &k1);
            let join_value = irr_k(&join, &params, Convention::Aggregate);
            let cycle_value = irr_k(&cycle, &params, Convention::Aggregate);
            let ratio = &join_value / &cycle_value;
            let want = BigRational::new(
                BigInt::from(n) * BigInt::from(n) - BigInt::from(4),
                BigInt::from(3),
            );
            assert_eq!(
                ratio, want,
                "criterion 4 FAIL: ratio at n={n}, slope={slope}"
            );
            let rhs = directed_join_rhs(&cycle, &k1, &params);
            assert_eq!(
                rhs, join_value,
                "criterion 4 FAIL: join identity at n={n}, slope={slope}"
            );
            checked += 1;
        }
    }
    println!("criterion 4 PASS: join ratio (n²-4)/3 and identity agree on {checked} instances");
}

#[test]
fn criterion_5_circular_matches() {
    let records = suite(&[ClaimId::Prop3_6], None);
    assert_eq!(records.len(), 28);
    for r in &records {
        assert_eq!(
            r.verdict,
            Verdict::Match,
            "criterion 5 FAIL: {} [{}]",
            r.claim,
            r.instance
        );
        assert_eq!(r.tolerance, 1e-9);
    }

    let wheel = suite(&[ClaimId::Prop3_7], Some(4));
    assert_eq!(wheel.len(), 2);
    for r in &wheel {
        assert_eq!(
            r.verdict,
            Verdict::Match,
            "criterion 5 FAIL: {} [{}]",
            r.claim,
            r.instance
        );
    }

    let mut rng = XorShift64::new(0x5eed_c1c1);
    for i in 0..1000 {
        let r = 0.5 + 9.5 * rng.unit();
        let a = r * (2.0 * rng.unit() - 1.0);
        let b = r * (2.0 * rng.unit() - 1.0);
        let closed = circ_integral(a, b, r).unwrap();
        let quad = quad_reference(a, b, r).unwrap();
        assert!(
            (closed - quad).abs() <= 1e-9,
            "criterion 5 FAIL: triple {i} (a={a}, b={b}, r={r}): {closed} vs {quad}"
        );
    }
    println!(
        "criterion 5 PASS: cycle closed forms (n=3..=30), wheel rims 3..=4, and 1000 random \
         quadrature triples agree within 1e-9"
    );
}

#[test]
fn criterion_6_documented_mismatch_ledger() {
    // (a) the path closed form disagrees for every n.
    let path_records = suite(&[ClaimId::Prop3_5], None);
    assert_eq!(path_records.len(), 28);
    for r in &path_records {
        assert_eq!(
            r.verdict,
            Verdict::Mismatch,
            "criterion 6(a) FAIL: {} [{}] unexpectedly matched",
            r.claim,
            r.instance
        );
        assert!(matches!(r.definitional, RecordValue::Approx(_)));
        assert!(matches!(r.claimed, RecordValue::Approx(_)));
    }
    let RecordValue::Approx(first) = path_records[0].definitional else {
        unreachable!()
    };
    let lens = 2.0 * std::f64::consts::PI / 3.0 - 3.0f64.sqrt() / 2.0;
    let first_term = 4.0 * std::f64::consts::PI / 3.0 + 3.0f64.sqrt() / 2.0;
    assert!(
        (first - first_term).abs() <= 1e-9,
        "criterion 6(a) FAIL: n=3 definitional should be the -1..2 integral"
    );
    let RecordValue::Approx(claimed) = path_records[0].claimed else {
        unreachable!()
    };
    assert!((claimed - lens).abs() <= 1e-9);

    // (b) the bipartite circular closed form drops the left-count factor.
    let bip = suite(&[ClaimId::Prop3_8], None);
    let mut flagged = 0;
    for r in &bip {
        let left: u32 = r
            .instance
            .split(|ch: char| !ch.is_ascii_digit())
            .find(|s| !s.is_empty())
            .unwrap()
            .parse()
            .unwrap();
        let degenerate = r.instance == "left=3, right=4";
        if left >= 2 && !degenerate {
            assert_eq!(
                r.verdict,
                Verdict::Mismatch,
                "criterion 6(b) FAIL: [{}] unexpectedly matched",
                r.instance
            );
            flagged += 1;
        }
    }
    assert!(flagged >= 25, "criterion 6(b) FAIL: only {flagged} flagged");

    // (c) the join identity on P2 + P2 at slope 1, intercept 0.
    let joins = suite(&[ClaimId::Thm3_1], None);
    let p2 = joins
        .iter()
        .find(|r| r.instance == "g=P2, h=P2, slope=1, intercept=0")
        .expect("P2+P2 instance present");
    assert_eq!(p2.verdict, Verdict::Mismatch, "criterion 6(c) FAIL");
    assert_eq!(p2.definitional, RecordValue::Exact(rat(15, 2)));
    assert_eq!(p2.claimed, RecordValue::Exact(rat(13, 2)));

    // (d) the wheel closed form for rims >= 5 under at least one sign.
    let wheels = suite(&[ClaimId::Prop3_7], None);
    for rim in 5..=12u32 {
        let mismatched = wheels
            .iter()
            .filter(|r| r.instance.starts_with(&format!("rim={rim},")))
            .any(|r| r.verdict == Verdict::Mismatch);
        assert!(
            mismatched,
            "criterion 6(d) FAIL: rim {rim} matched under both signs"
        );
    }

    // Documented mismatches are expected outcomes: exit code 0 semantics.
    for records in [&path_records, &bip, &joins, &wheels] {
        assert!(
            all_expected(records),
            "criterion 6 FAIL: a record deviated from its documented verdict"
        );
    }
    println!(
        "criterion 6 PASS: path/bipartite/join/wheel discrepancies flagged with both values, \
         all as documented"
    );
}

#[test]
fn criterion_7_property_suite() {
    let mut rng = XorShift64::new(0xdead_beef);

    // per-term >= aggregate, gap-index ordering, and relabeling
    // invariance on 200 random digraphs with random rational parameters.
    for _ in 0..200 {
        let g = random_digraph(&mut rng, 15);
        let params = LinearParams::new(random_rational(&mut rng), random_rational(&mut rng));
        let per_term = irr_k(&g, &params, Convention::PerTerm);
        let aggregate = irr_k(&g, &params, Convention::Aggregate);
        assert!(per_term >= aggregate, "per-term < aggregate on {g:?}");

        let view = g.underlying_simple_graph();
        let m = zagreb(&view);
        assert!(m.m3 <= m.m4, "M3 > M4 on {g:?}");
        let z = f_zagreb(&view, &weight_vector(&g)).unwrap();
        assert!(z.z3 <= z.z4, "Z3 > Z4 on {g:?}");

        let perm = random_permutation(&mut rng, g.vertex_count());
        let relabeled = relabel(&g, &perm);
        let view2 = relabeled.underlying_simple_graph();
        assert_eq!(zagreb(&view2), m, "zagreb changed under relabeling");
        assert_eq!(
            f_zagreb(&view2, &weight_vector(&relabeled)).unwrap(),
            z,
            "f-zagreb changed under relabeling"
        );
        for conv in [Convention::PerTerm, Convention::Aggregate] {
            assert_eq!(
                irr_k(&relabeled, &params, conv),
                irr_k(&g, &params, conv),
                "irr_k changed under relabeling"
            );
        }
        if g.arc_count() > 0 {
            for conv in [Convention::PerTerm, Convention::Aggregate] {
                let a = irr_kc(&g, conv, None).unwrap();
                let b = irr_kc(&relabeled, conv, None).unwrap();
                assert!((a - b).abs() <= 1e-9, "irr_kc changed under relabeling");
            }
        }
    }

    // |λ|-homogeneity, exact.
    for _ in 0..100 {
        let g = random_digraph(&mut rng, 12);
        let params = LinearParams::new(random_rational(&mut rng), random_rational(&mut rng));
        let lambda = random_rational(&mut rng);
        let scaled = LinearParams::new(&params.slope * &lambda, &params.intercept * &lambda);
        for conv in [Convention::PerTerm, Convention::Aggregate] {
            assert_eq!(
                irr_k(&g, &scaled, conv),
                irr_k(&g, &params, conv) * lambda.abs(),
                "homogeneity failed"
            );
        }
    }

    // Zeckendorf uniqueness against exhaustive subset search up to 5000.
    let limit = 5000u64;
    let mut fib_values = Vec::new();
    let mut k = 2u32;
    loop {
        let f = fibonacci(k).to_u64().unwrap();
        if f > limit {
            break;
        }
        fib_values.push((k, f));
        k += 1;
    }
    let mut found: Vec<Option<Vec<u32>>> = vec![None; (limit + 1) as usize];
    for mask in 0u64..(1 << fib_values.len()) {
        let mut sum = 0u64;
        let mut chosen = Vec::new();
        let mut ok = true;
        for (bit, &(idx, value)) in fib_values.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                if chosen.last().is_some_and(|&prev| idx == prev + 1) {
                    ok = false;
                    break;
                }
                chosen.push(idx);
                sum += value;
                if sum > limit {
                    ok = false;
                    break;
                }
            }
        }
        if ok && sum > 0 {
            let slot = &mut found[sum as usize];
            assert!(slot.is_none(), "two non-consecutive subsets sum to {sum}");
            chosen.reverse();
            *slot = Some(chosen);
        }
    }
    for n in 1..=limit {
        let rep = zeckendorf(n).unwrap();
        assert_eq!(rep.total(), n);
        assert_eq!(
            found[n as usize].as_deref(),
            Some(rep.indices()),
            "zeckendorf({n}) disagrees with exhaustive search"
        );
    }

    // Even number of negative weights in the Jaco weight sequences.
    for n in 1..=500 {
        let negatives = jaco::weight_sequence(n)
            .unwrap()
            .weights()
            .iter()
            .filter(|w| w.is_negative())
            .count();
        assert_eq!(negatives % 2, 0, "odd negative count at n={n}");
    }

    println!(
        "criterion 7 PASS: convention ordering, homogeneity, Zeckendorf uniqueness, weight \
         parity, index ordering, and relabeling invariance all hold"
    );
}

#[test]
fn criterion_8_suite_runtime() {
    let start = Instant::now();
    let records = run_suite(&SuiteOptions::default());
    let table1 = reproduce_table(TableId::Table1, 12);
    let table2 = reproduce_table(TableId::Table2, 12);
    let elapsed = start.elapsed();
    assert!(!records.is_empty() && !table1.rows.is_empty() && !table2.rows.is_empty());
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "criterion 8 FAIL: full verification sweep took {elapsed:?}"
    );
    println!(
        "criterion 8 PASS: full verification sweep ({} records) in {elapsed:?}",
        records.len()
    );
}
