//! End-to-end acceptance suite: ten criteria, one pass/fail line each.

use std::collections::BTreeSet;

use flagcycle::classify::{
    generate_perfect_harmonic, generate_perfect_major, is_dense, is_generous, is_harmonic,
    perfect_harmonic_count, perfect_major_count, super_dense, super_generous,
};
use flagcycle::cli;
use flagcycle::flag_oracle::verify;
use flagcycle::intersect::{supset, swit, swite, swito};
use flagcycle::real_forms::RealForm;
use flagcycle::weyl_core::{
    enumerate_group, length_bfs, length_paper, length_paper_c, length_paper_d, LengthTable,
    SignedPermutation, WeylFamily,
};

fn full(entries: &[i32]) -> SignedPermutation {
    SignedPermutation::new(entries.to_vec(), WeylFamily::FullSign).unwrap()
}

fn even(entries: &[i32]) -> SignedPermutation {
    SignedPermutation::new(entries.to_vec(), WeylFamily::EvenSign).unwrap()
}

fn entry_set(ws: &[SignedPermutation]) -> BTreeSet<Vec<i32>> {
    ws.iter().map(|w| w.entries().to_vec()).collect()
}

#[test]
fn criterion_01_length_goldens() {
    let w = full(&[-1, 2, 5, -3, 4]);
    assert_eq!(length_paper_c(&w).unwrap(), 14);
    assert_eq!(length_bfs(&w).unwrap(), 14);
    let w = even(&[-1, 2, 5, -3, 4, 6]);
    assert_eq!(length_paper_d(&w).unwrap(), 16);
    assert_eq!(length_bfs(&w).unwrap(), 16);
    println!("criterion 1 (length goldens): pass");
}

#[test]
fn criterion_02_exhaustive_length_agreement() {
    for family in [WeylFamily::FullSign, WeylFamily::EvenSign] {
        for n in 2..=4usize {
            let table = LengthTable::build(n, family).unwrap();
            let mut mismatches = Vec::new();
            for w in enumerate_group(n, family, None).unwrap() {
                let closed = length_paper(&w).unwrap();
                let bfs = table.length(&w).unwrap();
                if closed != bfs {
                    mismatches.push(format!("{w}: closed {closed} != bfs {bfs}"));
                }
            }
            assert!(
                mismatches.is_empty(),
                "{family:?} n={n} discrepancies:\n{}",
                mismatches.join("\n")
            );
        }
    }
    println!("criterion 2 (exhaustive length agreement n<=4): pass");
}

#[test]
fn criterion_03_uniqueness_theorems() {
    for n in 2..=5usize {
        let target = (n * (n + 1) / 2) as u32;
        let hits: Vec<_> = enumerate_group(n, WeylFamily::FullSign, None)
            .unwrap()
            .into_iter()
            .filter(|w| is_generous(w).unwrap() && length_paper(w).unwrap() == target)
            .collect();
        assert_eq!(hits.len(), 1, "generous uniqueness fails at n={n}");
        assert_eq!(hits[0].entries(), super_generous(n).unwrap().entries());
    }
    for n in 2..=6usize {
        let target = (n * (n - 1) / 2) as u32;
        let hits: Vec<_> = enumerate_group(n, WeylFamily::EvenSign, None)
            .unwrap()
            .into_iter()
            .filter(|w| is_dense(w).unwrap() && length_paper(w).unwrap() == target)
            .collect();
        assert_eq!(hits.len(), 1, "dense uniqueness fails at n={n}");
        assert_eq!(hits[0].entries(), super_dense(n).unwrap().entries());
    }
    println!("criterion 3 (uniqueness of the maximal-length labels): pass");
}

#[test]
fn criterion_04_census_golden_lists() {
    // SO(4,2): the six harmonic labels
    let rf: RealForm = "so-pq:4,2".parse().unwrap();
    let harmonic: Vec<_> = enumerate_group(3, WeylFamily::EvenSign, None)
        .unwrap()
        .into_iter()
        .filter(|w| is_harmonic(&rf, w).unwrap())
        .collect();
    let want: BTreeSet<Vec<i32>> = [
        vec![-1, 2, -3],
        vec![-1, -3, 2],
        vec![-3, -1, 2],
        vec![-1, -2, 3],
        vec![-1, 3, -2],
        vec![3, -1, -2],
    ]
    .into_iter()
    .collect();
    assert_eq!(entry_set(&harmonic), want);

    // SO(6,4): the fifteen perfect labels
    let rf: RealForm = "so-pq:6,4".parse().unwrap();
    let got = entry_set(&generate_perfect_harmonic(&rf).unwrap());
    let want: BTreeSet<Vec<i32>> = [
        vec![-1, 2, -3, 4, 5],
        vec![-1, 2, 5, -3, 4],
        vec![5, -1, 2, -3, 4],
        vec![-3, 4, -1, 2, 5],
        vec![-3, 4, 5, -1, 2],
        vec![5, -3, 4, -1, 2],
        vec![-1, 2, -5, -3, -4],
        vec![-5, -1, 2, -3, -4],
        vec![-5, -3, -4, -1, 2],
        vec![-3, 4, -5, -1, -2],
        vec![-5, -3, 4, -1, -2],
        vec![5, -3, -4, -1, -2],
        vec![-3, -1, 2, 4, 5],
        vec![5, -3, -1, 2, 4],
        vec![-5, -3, -1, 2, -4],
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want);

    // Sp(6,4): the eight perfect labels (two nested entries carry a
    // corrected sign pattern)
    let rf: RealForm = "sp-pq:3,2".parse().unwrap();
    let got = entry_set(&generate_perfect_major(&rf).unwrap());
    let want: BTreeSet<Vec<i32>> = [
        vec![-2, 1, -4, 3, 5],
        vec![-2, 1, 5, -4, 3],
        vec![5, -2, 1, -4, 3],
        vec![-4, 3, -2, 1, 5],
        vec![-4, 3, 5, -2, 1],
        vec![5, -4, 3, -2, 1],
        vec![-4, -2, 1, 3, 5],
        vec![5, -4, -2, 1, 3],
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want);
    println!("criterion 4 (census golden lists): pass");
}

#[test]
fn criterion_05_counting_formulas() {
    for q in 2..=4usize {
        for p in q..=8usize {
            let rf: RealForm = format!("so-pq:{p},{q}").parse().unwrap();
            assert_eq!(
                generate_perfect_harmonic(&rf).unwrap().len() as u64,
                perfect_harmonic_count(&rf).unwrap(),
                "harmonic count mismatch for {rf}"
            );
            let rf: RealForm = format!("sp-pq:{p},{q}").parse().unwrap();
            assert_eq!(
                generate_perfect_major(&rf).unwrap().len() as u64,
                perfect_major_count(&rf).unwrap(),
                "major count mismatch for {rf}"
            );
        }
    }
    // balanced even-q boundary, adjudicated geometrically: the undamped
    // product formula would give 2 and 8 here
    for (code, want) in [("so-pq:2,2", 1), ("so-pq:3,3", 1), ("so-pq:4,4", 4)] {
        let rf: RealForm = code.parse().unwrap();
        assert_eq!(perfect_harmonic_count(&rf).unwrap(), want, "{code}");
    }
    println!("criterion 5 (counting formulas over the grid): pass");
}

#[test]
fn criterion_06_cardinality_laws() {
    for n in 1..=5usize {
        let rf = RealForm::sp2n_r(n).unwrap();
        let rep = supset(&rf, &super_generous(n).unwrap()).unwrap();
        assert_eq!(rep.counts.total_points, 1 << n, "supset size at n={n}");
        assert_eq!(rep.counts.domains_touched, 1 << n);
        assert_eq!(rep.counts.points_per_domain, 1);
    }
    let rf: RealForm = "so-pq:6,4".parse().unwrap();
    let rep = swite(&rf, &even(&[-1, 2, -3, 4, 5])).unwrap();
    assert_eq!(
        (
            rep.counts.total_points,
            rep.counts.domains_touched,
            rep.counts.points_per_domain
        ),
        (16, 4, 4)
    );
    let rf: RealForm = "so-pq:5,3".parse().unwrap();
    let rep = swito(&rf, &even(&[-1, 2, 4, -3])).unwrap();
    assert_eq!(
        (
            rep.counts.total_points,
            rep.counts.domains_touched,
            rep.counts.points_per_domain
        ),
        (4, 2, 2)
    );
    let rf: RealForm = "sp-pq:3,2".parse().unwrap();
    let rep = swit(&rf, &full(&[-4, 3, -2, 1, 5])).unwrap();
    assert_eq!(
        (
            rep.counts.total_points,
            rep.counts.domains_touched,
            rep.counts.points_per_domain
        ),
        (16, 4, 4)
    );
    println!("criterion 6 (cardinality laws): pass");
}

#[test]
fn criterion_07_dimension_identity() {
    for n in 1..=8usize {
        let f = RealForm::sp2n_r(n).unwrap();
        assert_eq!(f.dim_base_cycle() + f.dim_dual_schubert(), f.dim_flag_manifold());
        if n >= 2 {
            let f = RealForm::so_star(n).unwrap();
            assert_eq!(f.dim_base_cycle() + f.dim_dual_schubert(), f.dim_flag_manifold());
        }
    }
    for q in 1..=8usize {
        for p in q..=8usize {
            if p + q >= 3 {
                let f = RealForm::so_pq(p, q).unwrap();
                assert_eq!(
                    f.dim_base_cycle() + f.dim_dual_schubert(),
                    f.dim_flag_manifold(),
                    "{f}"
                );
            }
            let f = RealForm::sp_pq(p, q).unwrap();
            assert_eq!(
                f.dim_base_cycle() + f.dim_dual_schubert(),
                f.dim_flag_manifold(),
                "{f}"
            );
        }
    }
    println!("criterion 7 (dimension identity over the grid): pass");
}

#[test]
fn criterion_08_oracle_completeness() {
    let suites: &[(&str, &[&str])] = &[
        ("sp2n-r:1", &["length-agreement", "generous-equivalence", "supset-completeness"]),
        ("sp2n-r:2", &["length-agreement", "generous-equivalence", "supset-completeness"]),
        ("sp2n-r:3", &["length-agreement", "generous-equivalence", "supset-completeness"]),
        ("so-star:2", &["length-agreement", "dense-equivalence", "supset-sostar-completeness"]),
        ("so-star:3", &["length-agreement", "dense-equivalence", "supset-sostar-completeness"]),
        ("so-star:4", &["length-agreement", "dense-equivalence", "supset-sostar-completeness"]),
        ("so-pq:4,2", &["length-agreement", "harmonic-nonemptiness", "swite-completeness"]),
        ("so-pq:5,3", &["length-agreement", "harmonic-nonemptiness", "swito-completeness"]),
        ("sp-pq:2,1", &["length-agreement", "major-nonemptiness", "swit-completeness"]),
    ];
    for (code, theorems) in suites {
        let rf: RealForm = code.parse().unwrap();
        for theorem in *theorems {
            let report = verify(&rf, theorem).unwrap();
            for note in &report.notes {
                println!("  note [{code}/{theorem}]: {note}");
            }
            assert!(
                report.pass,
                "{code}/{theorem} failed: {:?}",
                report.counterexamples
            );
        }
    }
    println!("criterion 8 (oracle completeness at small rank): pass");
}

#[test]
fn criterion_09_special_domain_saturation() {
    for code in ["so-pq:4,2", "so-pq:5,3", "sp-pq:2,1", "sp-pq:3,2"] {
        let rf: RealForm = code.parse().unwrap();
        let report = verify(&rf, "saturation").unwrap();
        assert!(report.pass, "{code}: {:?}", report.counterexamples);
    }
    println!("criterion 9 (special-domain saturation): pass");
}

#[test]
fn criterion_10_cli_determinism() {
    let suite: &[&[&str]] = &[
        &["verify", "--form", "sp2n-r:3"],
        &["verify", "--form", "so-star:3"],
        &["verify", "--form", "so-pq:4,2"],
        &["verify", "--form", "so-pq:5,3"],
        &["verify", "--form", "sp-pq:2,1"],
        &["verify", "--form", "sp-pq:2,1", "--theorem", "saturation"],
        &["enumerate", "--form", "so-pq:6,4", "--perfect"],
        &["counts", "--form", "so-pq:6,4", "--perfect"],
        &["intersect", "--form", "sp-pq:3,2", "--perm", "-4,3,-2,1,5"],
    ];
    let run_suite = || -> String {
        let mut all = String::new();
        for args in suite {
            let argv: Vec<String> = std::iter::once("flagcycle")
                .chain(args.iter().copied())
                .map(str::to_string)
                .collect();
            let out = cli::run(&argv);
            assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
            all.push_str(&out.stdout);
            all.push('\n');
        }
        all
    };
    let first = run_suite();
    let second = run_suite();
    assert_eq!(first.as_bytes(), second.as_bytes());
    println!("criterion 10 (byte-identical CLI output): pass");
}
