//! Acceptance gate. Each test prints one line
//! `criterion N [name]: PASS|FAIL (...)` and asserts the criterion.
//!
//! Run with `cargo test -p cluster-poset-core --test acceptance -- --nocapture --test-threads=1`.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};

use cluster_poset::cluster::{ClusterCategory, SummandKind};
use cluster_poset::poset::{are_isomorphic, tamari};
use cluster_poset::quiver::{Classification, Quiver};
use cluster_poset::repr::{ext1_dim, hom_dim, indecomposable_of_root, Representation};
use cluster_poset::verify::{lemma_suite, verify_flip_flop, verify_square, CheckReport};

use common::{bottom, load, top, type_a, type_d4};

fn report(n: usize, name: &str, pass: bool, detail: &str) {
    println!("criterion {n} [{name}]: {} ({detail})", if pass { "PASS" } else { "FAIL" });
}

fn objects_as_sets(cat: &ClusterCategory) -> BTreeSet<BTreeSet<Vec<i64>>> {
    cat.enumerate().unwrap().iter().map(|t| t.roots().into_iter().collect()).collect()
}

fn secs(d: Duration) -> String {
    format!("{:.3} s", d.as_secs_f64())
}

/// Every orientation of A2, A3, A4 and D4.
fn flip_flop_family() -> Vec<Quiver> {
    let mut out = type_a(2);
    out.extend(type_a(3));
    out.extend(type_a(4));
    out.extend(type_d4());
    out
}

#[test]
fn criterion_1_a3_golden_reproduction() {
    let start = Instant::now();
    let q = load("a3-linear.json");
    let q2 = load("a3-alternating.json");
    assert_eq!(q.reflect(2).unwrap(), q2);
    let top_objects = objects_as_sets(&ClusterCategory::new(&q).unwrap());
    let bottom_objects = objects_as_sets(&ClusterCategory::new(&q2).unwrap());
    let elapsed = start.elapsed();
    let top_ok = top_objects.len() == 14 && top_objects == top().objects();
    let bottom_ok = bottom_objects.len() == 14 && bottom_objects == bottom().objects();
    let pass = top_ok && bottom_ok && elapsed < Duration::from_secs(5);
    report(
        1,
        "A3 golden reproduction",
        pass,
        &format!(
            "top {} objects, match {top_ok}; bottom {} objects, match {bottom_ok}; {} < 5 s",
            top_objects.len(),
            bottom_objects.len(),
            secs(elapsed)
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_2_bold_subset_counts() {
    let cat = ClusterCategory::new(&load("a3-linear.json")).unwrap();
    let cat2 = ClusterCategory::new(&load("a3-alternating.json")).unwrap();
    let x = 2;
    let with_px: BTreeSet<BTreeSet<Vec<i64>>> = cat
        .subset_containing(SummandKind::Projective(x))
        .unwrap()
        .iter()
        .map(|t| t.roots().into_iter().collect())
        .collect();
    let with_shift: BTreeSet<BTreeSet<Vec<i64>>> = cat2
        .subset_containing(SummandKind::ShiftedProjective(x))
        .unwrap()
        .iter()
        .map(|t| t.roots().into_iter().collect())
        .collect();
    let pass = with_px.len() == 5 && with_shift.len() == 5 && with_px == top().bold() && with_shift == bottom().bold();
    report(
        2,
        "bold-subset counts",
        pass,
        &format!(
            "objects containing P_3: {} (expected 5, bold nodes match {}); containing P'_3[1]: {} (expected 5, bold nodes match {})",
            with_px.len(),
            with_px == top().bold(),
            with_shift.len(),
            with_shift == bottom().bold()
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_3_flip_flop_gluing() {
    let start = Instant::now();
    let mut cases = 0;
    let mut failures: Vec<String> = Vec::new();
    for q in flip_flop_family() {
        for x in q.sinks() {
            cases += 1;
            for r in verify_flip_flop(&q, x).unwrap() {
                if !r.passed() {
                    failures.push(format!("{q} at {}: {}", q.label(x), r.check));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(120);
    report(
        3,
        "flip-flop gluing",
        pass,
        &format!("{cases} (quiver, sink) pairs, {} failures, {} < 120 s", failures.len(), secs(elapsed)),
    );
    assert!(pass, "{failures:#?}");
}

#[test]
fn criterion_4_commutative_square() {
    let mut cases = 0;
    let mut squares = 0;
    let mut failures: Vec<String> = Vec::new();
    for q in flip_flop_family() {
        for x in q.sinks() {
            cases += 1;
            for r in verify_square(&q, x).unwrap() {
                if r.check == "rho f = g rho" {
                    squares += r.cases;
                }
                if !r.passed() {
                    failures.push(format!("{q} at {}: {} {:?}", q.label(x), r.check, r.counterexample));
                }
            }
        }
    }
    let pass = failures.is_empty() && squares > 0;
    report(
        4,
        "commutative square",
        pass,
        &format!("{cases} (quiver, sink) pairs, {squares} squares checked, {} failures", failures.len()),
    );
    assert!(pass, "{failures:#?}");
}

#[test]
fn criterion_5_lemma_property_suite() {
    let mut quivers = type_a(1);
    quivers.extend(flip_flop_family());
    let mut totals: Vec<CheckReport> = Vec::new();
    for q in &quivers {
        for r in lemma_suite(q).unwrap() {
            match totals.iter_mut().find(|t| t.check == r.check) {
                Some(t) => {
                    t.cases += r.cases;
                    if t.counterexample.is_none() && r.counterexample.is_some() {
                        t.counterexample = r.counterexample.clone();
                        t.status = r.status;
                    }
                }
                None => totals.push(r),
            }
        }
    }
    let mut violated = Vec::new();
    for t in &totals {
        println!("  {} {:>6} cases  {}", if t.passed() { "ok  " } else { "FAIL" }, t.cases, t.check);
        if let Some(c) = &t.counterexample {
            println!("       first counterexample: {c}");
            violated.push(t.check.clone());
        }
    }
    let pass = violated.is_empty();
    report(
        5,
        "lemma property suite",
        pass,
        &format!("{} quivers, {} properties, {} violated: {violated:?}", quivers.len(), totals.len(), violated.len()),
    );
    assert!(pass, "violated: {violated:?}");
}

/// `prod (e_i + h + 1) / (e_i + 1)` from the exponents and Coxeter number.
fn cluster_number(family: char, n: u64) -> u64 {
    let (exponents, h): (Vec<u64>, u64) = match family {
        'A' => ((1..=n).collect(), n + 1),
        'D' => ((1..n).map(|i| 2 * i - 1).chain([n - 1]).collect(), 2 * n - 2),
        _ => unreachable!(),
    };
    let num: u64 = exponents.iter().map(|e| e + h + 1).product();
    let den: u64 = exponents.iter().map(|e| e + 1).product();
    assert_eq!(num % den, 0);
    num / den
}

#[test]
fn criterion_6_count_oracle() {
    let expected = [("A2", 5), ("A3", 14), ("A4", 42), ("D4", 50)];
    let mut lines = Vec::new();
    let mut pass = true;
    for (name, literal) in expected {
        let family = name.chars().next().unwrap();
        let n: u64 = name[1..].parse().unwrap();
        let formula = cluster_number(family, n);
        let quivers = if family == 'A' { type_a(n as usize) } else { type_d4() };
        let counts: BTreeSet<usize> =
            quivers.iter().map(|q| ClusterCategory::new(q).unwrap().enumerate().unwrap().len()).collect();
        let ok = formula == literal && counts.len() == 1 && counts.contains(&(formula as usize));
        pass &= ok;
        lines.push(format!("{name}: formula {formula}, enumerated {counts:?} over {} orientations", quivers.len()));
    }
    report(6, "count oracle", pass, &lines.join("; "));
    assert!(pass);
}

#[test]
fn criterion_7_tamari_oracle() {
    let mut lines = Vec::new();
    let mut pass = true;
    for (n, size) in [(2, 5), (3, 14), (4, 42)] {
        let poset = ClusterCategory::new(&Quiver::linear_a(n)).unwrap().tilting_poset().unwrap();
        let model = tamari(n);
        let ok = poset.len() == size && model.len() == size && are_isomorphic(&poset, &model);
        pass &= ok;
        lines.push(format!("A{n}: {} vs {} elements, isomorphic {ok}", poset.len(), model.len()));
    }
    report(7, "Tamari oracle", pass, &lines.join("; "));
    assert!(pass);
}

#[test]
fn criterion_8_derived_invariant_equality() {
    let start = Instant::now();
    let mut lines = Vec::new();
    let mut pass = true;
    for n in [3, 4] {
        let polys: BTreeSet<String> = type_a(n)
            .iter()
            .map(|q| {
                ClusterCategory::new(q).unwrap().tilting_poset().unwrap().coxeter_polynomial().unwrap().to_string()
            })
            .collect();
        pass &= polys.len() == 1;
        lines.push(format!("A{n}: {} orientations, {} distinct polynomials", type_a(n).len(), polys.len()));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(300);
    report(8, "derived-invariant equality", pass, &format!("{}; {} < 300 s", lines.join("; "), secs(elapsed)));
    assert!(pass);
}

// ---- brute-force extension spaces ---------------------------------------

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone() / pivot_row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x -= factor.clone() * p.clone();
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim Ext^1(M, N)` as the cokernel of
/// `(+)_v Hom(M(v), N(v)) -> (+)_{a: i -> j} Hom(M(i), N(j))`,
/// `phi -> N(a) phi_i - phi_j M(a)`, obtained by applying `Hom(-, N)` to the
/// standard two-term projective resolution of `M`.
fn ext_oracle(q: &Quiver, m: &Representation, n: &Representation) -> usize {
    let verts = q.vertex_count();
    let mut offset = vec![0; verts + 1];
    for v in 0..verts {
        offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
    }
    let unknowns = offset[verts];
    let target: usize = q.arrows().iter().map(|&(i, j)| n.dim(j) * m.dim(i)).sum();
    // one column per unknown entry phi_v[r][c]; rows index entries of the target
    let mut columns: Vec<Vec<BigRational>> = Vec::with_capacity(unknowns);
    for v in 0..verts {
        for r in 0..n.dim(v) {
            for c in 0..m.dim(v) {
                let mut col = vec![BigRational::zero(); target];
                let mut base = 0;
                for (a, &(i, j)) in q.arrows().iter().enumerate() {
                    let (ma, na) = (m.map(a), n.map(a));
                    // entry (s, t) of the block is (N(a) phi_i - phi_j M(a))[s][t]
                    for s in 0..n.dim(j) {
                        for t in 0..m.dim(i) {
                            let mut value = BigRational::zero();
                            if v == i && t == c {
                                value += na[(s, r)].clone();
                            }
                            if v == j && s == r {
                                value -= ma[(c, t)].clone();
                            }
                            col[base + s * m.dim(i) + t] = value;
                        }
                    }
                    base += n.dim(j) * m.dim(i);
                }
                columns.push(col);
            }
        }
    }
    let rows: Vec<Vec<BigRational>> = (0..target).map(|i| columns.iter().map(|col| col[i].clone()).collect()).collect();
    target - if unknowns == 0 { 0 } else { rank(rows) }
}

fn rank_three_and_below() -> Vec<Quiver> {
    let mut out = type_a(1);
    out.extend(type_a(2));
    out.extend(type_a(3));
    out.push(Quiver::new::<&str>(&["1", "2"], &[]).unwrap());
    out.push(Quiver::new::<&str>(&["1", "2", "3"], &[]).unwrap());
    out.extend(Quiver::new(&["1", "2", "3"], &[("1", "2")]).unwrap().orientations());
    out
}

#[test]
fn criterion_9_numerical_kernel_cross_check() {
    let quivers = rank_three_and_below();
    let mut pairs = 0;
    let mut projective_checks = 0;
    let mut mismatches = Vec::new();
    for q in &quivers {
        assert!(!matches!(q.classify_dynkin(), Classification::NotRepresentationFinite));
        let modules: Vec<Representation> =
            q.positive_roots().unwrap().iter().map(|d| indecomposable_of_root(q, d).unwrap()).collect();
        for m in &modules {
            for n in &modules {
                pairs += 1;
                let fast = ext1_dim(m, n).unwrap();
                let slow = ext_oracle(q, m, n);
                if fast != slow {
                    mismatches.push(format!("{q}: Ext({}, {}) = {fast} vs {slow}", m.dim_vector(), n.dim_vector()));
                }
            }
            for x in 0..q.vertex_count() {
                projective_checks += 1;
                let h = hom_dim(&Representation::projective(q, x), m).unwrap();
                if h != m.dim(x) {
                    mismatches.push(format!("{q}: Hom(P_{x}, {}) = {h}", m.dim_vector()));
                }
            }
        }
    }
    let pass = mismatches.is_empty();
    report(
        9,
        "numerical kernel cross-check",
        pass,
        &format!(
            "{} quivers, {pairs} Ext pairs, {projective_checks} Hom(P_x, N) checks, {} mismatches",
            quivers.len(),
            mismatches.len()
        ),
    );
    assert!(pass, "{mismatches:#?}");
}

#[test]
fn oracle_helpers_are_sane() {
    assert_eq!(cluster_number('A', 1), 2);
    assert_eq!(cluster_number('D', 4), 50);
    assert_eq!(
        rank(vec![vec![BigRational::one(), BigRational::one()], vec![BigRational::one(), BigRational::one()]]),
        1
    );
    let q = Quiver::linear_a(2);
    let s1 = Representation::simple(&q, 0);
    let s2 = Representation::simple(&q, 1);
    assert_eq!(ext_oracle(&q, &s1, &s2), 1);
    assert_eq!(ext_oracle(&q, &s2, &s1), 0);
}
