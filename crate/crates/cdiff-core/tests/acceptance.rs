//! Acceptance suite: one test per criterion, each printing a single
//! `[PASS]`/`[FAIL]` line (visible with `--nocapture`).
//!
//! Criteria 03 and 06 assert claims that exhaustive computation shows to
//! be unsatisfiable for the stated functions; they are implemented
//! faithfully and fail with the full diagnosis rather than being weakened
//! (see the failure messages for the analysis).

use std::time::Instant;

use cdiff_core::{affine, corpus, ddt, func, methods, pcn, quadratic, reference, shifts, spectral, subspace};
use cdiff_core::{Elem, Field, FnRepr, Lut};

fn gf(spec: &str) -> Field {
    Field::from_spec_str(spec).unwrap()
}

fn pass(criterion: &str, detail: &str) {
    println!("[PASS] {criterion}: {detail}");
}

fn random_perms(field: &Field, seed: u64, count: usize) -> Vec<Lut> {
    let mut rng = corpus::rng_from_seed(seed);
    (0..count).map(|_| corpus::random_permutation(field, &mut rng)).collect()
}

#[test]
fn criterion_01_example_3_1_reproduction() {
    let start = Instant::now();
    let field = gf("p=2 n=6");
    assert_eq!(field.spec().modulus_encoding(), 91);
    let lut = FnRepr::monomial(1, 34).to_lut(&field);
    let table = ddt::ddt(&field, &lut);
    assert_eq!(table.uniformity(), 4);
    for a in 1..field.order() {
        for b in field.elements() {
            assert!(matches!(table.at(a, b), 0 | 4), "entry ({a},{b})");
        }
    }
    let set = pcn::enumerate_pcn(&field, &table).unwrap();
    assert_eq!(set.len(), 2, "PcN set {set:?}");
    for &c in &set {
        assert_eq!(field.multiplicative_order(c).unwrap(), 3);
    }
    let mut cinv2: Vec<Elem> = set.iter().map(|&c| field.inv(field.mul(c, c)).unwrap()).collect();
    cinv2.sort_unstable();
    assert_eq!(cinv2, vec![14, 15]);
    assert_eq!(field.mul(set[0], set[0]), set[1]);
    assert_eq!(field.mul(set[1], set[1]), set[0]);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}, limit 5 s");
    pass("C01 example-3-1", &format!("PcN set {set:?}, c^-2 = {{14,15}} ({elapsed:?})"));
}

#[test]
fn criterion_02_table_1_reproduction() {
    let start = Instant::now();
    let field = gf("p=2 n=6");
    let x5 = FnRepr::monomial(1, 5).to_lut(&field);
    let l1 = cdiff_core::AffineMap::parse(&field, reference::X5_COMPOSITION_L1).unwrap().linear;
    let l2 = cdiff_core::AffineMap::parse(&field, reference::X5_COMPOSITION_L2).unwrap().linear;
    let g1 = l1.to_lut(&field).compose(&x5);
    let g2 = l2.to_lut(&field).compose(&x5);
    let sf = ddt::c_spectrum(&field, &x5);
    let sg1 = ddt::c_spectrum(&field, &g1);
    let sg2 = ddt::c_spectrum(&field, &g2);

    assert_eq!(sf.get(0), 1);
    assert_eq!(sf.get(1), 4);
    let specials = reference::X5_COMPOSITION_SPECIAL_C;
    for c in 2..field.order() {
        let expected = if specials.contains(&c) { 1 } else { 5 };
        assert_eq!(sf.get(c), expected, "delta({c}, F)");
    }
    for c in field.elements() {
        assert_eq!(sg1.get(c), sf.get(c), "delta({c}, G1)");
    }
    for &c in &specials {
        assert_eq!(sg2.get(c), 8, "delta({c}, G2)");
    }
    assert_eq!(sg2.delta.iter().max(), Some(&8));
    // exact per-row match against the 63 listed reference rows
    for &(c, f_ref, g2_ref, g1_ref) in reference::X5_COMPOSITION_SPECTRA {
        assert_eq!((sf.get(c), sg2.get(c), sg1.get(c)), (f_ref, g2_ref, g1_ref), "row c={c}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}, limit 60 s");
    pass(
        "C02 table-1",
        &format!(
            "63 listed rows exact; unlisted c=47 computes to ({},{},{}) ({elapsed:?})",
            sf.get(47),
            sg2.get(47),
            sg1.get(47)
        ),
    );
}

#[test]
fn criterion_03_f256_inverse_function() {
    let start = Instant::now();
    let field = gf("p=2 n=8");
    let lut = FnRepr::monomial(1, 254).to_lut(&field);
    let spectrum = ddt::c_spectrum(&field, &lut);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}, limit 120 s");
    let witness = field
        .elements()
        .find(|&c| spectrum.get(c) == 8 && spectrum.get(field.mul(c, c)) == 9);
    if let Some(c) = witness {
        pass("C03 inverse-f28", &format!("witness c={c} ({elapsed:?})"));
        return;
    }
    let mut histo = std::collections::BTreeMap::new();
    for c in field.elements() {
        *histo.entry(spectrum.get(c)).or_insert(0u32) += 1;
    }
    let frobenius_stable =
        field.elements().all(|c| spectrum.get(c) == spectrum.get(field.mul(c, c)));
    panic!(
        "[FAIL] C03 inverse-f28: no c has (delta(c), delta(c^2)) = (8, 9). \
         Exhaustive spectrum of x^254 over F_256: {histo:?}; \
         delta(c) = delta(c^2) for every c: {frobenius_stable}. \
         All coefficients of x^254 lie in F_2, so delta(c,F) = delta(c^p,F) holds \
         identically (the prime-field-coefficient invariance this suite verifies \
         elsewhere), making the pinned (8,9) pair unsatisfiable for this function \
         under any modulus."
    );
}

#[test]
fn criterion_04_oracle_equivalence() {
    let f16 = gf("p=2 n=4");
    let mut mismatches = 0u32;
    let mut checked = 0u64;
    for lut in random_perms(&f16, 0xC4, 100) {
        let table = ddt::ddt(&f16, &lut);
        let walsh = spectral::walsh(&f16, &lut);
        let enumerated = pcn::enumerate_pcn(&f16, &table).unwrap();
        let mut naive_set = Vec::new();
        for c in 2..f16.order() {
            let naive = pcn::is_pcn_naive(&f16, &lut, c);
            let by_ddt = pcn::is_pcn_ddt(&f16, &table, c).unwrap();
            let by_walsh = spectral::pcn_walsh_product_check(&f16, &walsh, c).unwrap();
            let by_quartic = spectral::est20_quartic_identity(&f16, &walsh, c).unwrap()
                == 1u128 << (4 * f16.n());
            checked += 1;
            if !(naive == by_ddt && naive == by_walsh && naive == by_quartic) {
                mismatches += 1;
            }
            if naive {
                naive_set.push(c);
            }
        }
        assert_eq!(enumerated, naive_set);
    }

    let f27 = gf("p=3 n=3");
    for lut in random_perms(&f27, 0x1B, 20) {
        let table = ddt::ddt(&f27, &lut);
        let enumerated = pcn::enumerate_pcn(&f27, &table).unwrap();
        let mut naive_set = Vec::new();
        for c in 2..f27.order() {
            let naive = pcn::is_pcn_naive(&f27, &lut, c);
            checked += 1;
            if naive != pcn::is_pcn_ddt(&f27, &table, c).unwrap() {
                mismatches += 1;
            }
            if naive {
                naive_set.push(c);
            }
        }
        assert_eq!(enumerated, naive_set);
    }

    for spec in ["p=2 n=5", "p=2 n=6"] {
        let field = gf(spec);
        for d in corpus::monomial_permutation_exponents(&field) {
            let lut = FnRepr::monomial(1, d).to_lut(&field);
            let table = ddt::ddt(&field, &lut);
            let walsh = spectral::walsh(&field, &lut);
            let enumerated = pcn::enumerate_pcn(&field, &table).unwrap();
            let mut naive_set = Vec::new();
            for c in 2..field.order() {
                let naive = pcn::is_pcn_naive(&field, &lut, c);
                let by_ddt = pcn::is_pcn_ddt(&field, &table, c).unwrap();
                let by_walsh = spectral::pcn_walsh_product_check(&field, &walsh, c).unwrap();
                let by_quartic = spectral::est20_quartic_identity(&field, &walsh, c).unwrap()
                    == 1u128 << (4 * field.n());
                checked += 1;
                if !(naive == by_ddt && naive == by_walsh && naive == by_quartic) {
                    mismatches += 1;
                }
                if naive {
                    naive_set.push(c);
                }
            }
            assert_eq!(enumerated, naive_set, "{spec} d={d}");
        }
    }
    assert_eq!(mismatches, 0);
    pass("C04 oracle equivalence", &format!("{checked} (F, c) cases, zero mismatches"));
}

#[test]
fn criterion_05_monomial_dichotomy() {
    let mut cases = 0;
    for spec in ["p=2 n=4", "p=2 n=5", "p=2 n=6"] {
        let field = gf(spec);
        let report = shifts::monomial_dichotomy_audit(&field, None).unwrap();
        assert!(
            report.violations.is_empty(),
            "{spec}: intermediate cases {:?}",
            report.violations
        );
        assert!(report.closure_violations.is_empty());
        cases += report.cases;
    }
    pass("C05 monomial dichotomy", &format!("{cases} (d, c) cases, all AllGood or AllBad"));
}

#[test]
fn criterion_06_binomial_counterexample() {
    // Stated: x^3 + x^5 over F_32 has some c whose bad-shift set V_c is an
    // intermediate subspace (0 < dim < 5) passing the closure test.
    let field = gf("p=2 n=5");
    let (bin, _) = func::parse_function(&field, "poly 3:1 5:1").unwrap();
    let lut = bin.to_lut(&field);

    let collision = lut.collision();
    // the stated map, scanned shift-by-shift regardless of bijectivity
    let mut witness: Option<(Elem, u32)> = None;
    let mut profiles = Vec::new();
    for c in 2..field.order() {
        let mut bad = vec![0u64];
        for a in 1..field.order() {
            let mut seen = vec![false; field.order() as usize];
            let mut bij = true;
            for x in field.elements() {
                let y = field.sub(lut.get(field.add(x, a)), field.mul(c, lut.get(x)));
                if seen[y as usize] {
                    bij = false;
                    break;
                }
                seen[y as usize] = true;
            }
            if !bij {
                bad.push(a);
            }
        }
        let closed = subspace::closure_violation(&field, &bad).is_none();
        if closed {
            let dim = subspace::greedy_basis(&field, &bad).len() as u32;
            if dim > 0 && dim < field.n() {
                witness = Some((c, dim));
            }
        }
        profiles.push((c, bad.len() - 1, closed));
    }

    if let Some((c, dim)) = witness {
        pass("C06 binomial counterexample", &format!("witness c={c}, dim V_c = {dim}"));
        return;
    }
    let mixed: Vec<_> = profiles
        .iter()
        .filter(|&&(_, bad, _)| bad > 0 && bad < (field.order() - 1) as usize)
        .collect();
    panic!(
        "[FAIL] C06 binomial-f25: the stated witness does not exist. \
         x^3+x^5 is not even a permutation of F_32 (F({}) = F({}) = {}), \
         and an exhaustive scan of its shift profiles finds {} values of c with \
         mixed behavior (29 bad shifts each) but no closed intermediate subspace: \
         |V_c| is 30 for those c, never a power of 2. \
         The nearby permutation x + x^3 + x^5 does show mixed behavior for every c \
         (30 bad, 1 good), but its V_c fails the closure test outright, refuting \
         the bad-shift subspace proposition rather than instantiating it.",
        collision.unwrap().0,
        collision.unwrap().1,
        collision.unwrap().2,
        mixed.len(),
    );
}

#[test]
fn criterion_07_subspace_law_over_corpus() {
    // The closure check runs corpus-wide; violations are genuine findings
    // that must surface as verified refutation witnesses (the CLI maps
    // them to exit code 1). The criterion gates the machinery: every
    // report must be either a verified subspace or a verified witness.
    let mut refutations: Vec<String> = Vec::new();
    let mut reports = 0u32;
    let mut check = |field: &Field, name: &str, lut: &Lut| {
        for c in 2..field.order() {
            let report = shifts::bad_shifts(field, lut, c).unwrap();
            reports += 1;
            let mut v = report.bad_shifts.clone();
            v.push(0);
            match &report.check {
                shifts::SubspaceCheck::Subspace { basis, dimension, .. } => {
                    assert!(subspace::closure_violation(field, &v).is_none());
                    assert_eq!(field.p().pow(*dimension) as usize, v.len());
                    assert_eq!(subspace::span(field, basis).len(), v.len());
                }
                shifts::SubspaceCheck::Violation { witness: (x, y) } => {
                    assert!(v.contains(x) && v.contains(y));
                    assert!(!v.contains(&field.sub(*x, *y)));
                    refutations.push(format!("{name} c={c}: {x}-{y} escapes V_c"));
                }
            }
        }
    };

    let f16 = gf("p=2 n=4");
    for (i, lut) in random_perms(&f16, 0x5B, 10).iter().enumerate() {
        check(&f16, &format!("random-f16-{i}"), lut);
    }
    for d in corpus::monomial_permutation_exponents(&f16) {
        check(&f16, &format!("x^{d}/f16"), &FnRepr::monomial(1, d).to_lut(&f16));
    }
    let f27 = gf("p=3 n=3");
    for (i, lut) in random_perms(&f27, 0x5C, 5).iter().enumerate() {
        check(&f27, &format!("random-f27-{i}"), lut);
    }
    let f32 = gf("p=2 n=5");
    let (tri, _) = func::parse_function(&f32, "poly 1:1 3:1 5:1").unwrap();
    check(&f32, "x+x^3+x^5/f32", &tri.to_lut(&f32));
    check(&f32, "x^5/f32", &FnRepr::monomial(1, 5).to_lut(&f32));

    for r in &refutations {
        println!("  refutation: {r}");
    }
    assert!(
        !refutations.is_empty(),
        "the corpus deliberately contains x+x^3+x^5, whose V_c is not a subspace"
    );
    pass(
        "C07 subspace law",
        &format!(
            "{reports} (F, c) reports, all verified; {} closure refutations found and witnessed",
            refutations.len()
        ),
    );
}

#[test]
fn criterion_08_trinomial_solver() {
    let mut cases = 0u64;
    for (spec, ks) in [("p=2 n=4", vec![1u32, 2, 3]), ("p=2 n=6", vec![1, 2, 3]), ("p=3 n=4", vec![1, 2])] {
        let field = gf(spec);
        for &k in &ks {
            for a in field.elements() {
                for b in field.elements() {
                    // the library cross-checks the closed form against
                    // enumeration internally and errors on mismatch
                    let (count, roots) = field
                        .linearized_trinomial_roots(k, a, b)
                        .unwrap_or_else(|e| panic!("{spec} k={k} a={a} b={b}: {e}"));
                    assert_eq!(count as usize, roots.len());
                    cases += 1;
                }
            }
        }
    }
    pass("C08 trinomial solver", &format!("{cases} (k, a, b) instances, zero mismatches"));
}

#[test]
fn criterion_09_trace_condition_predicate() {
    // (5,2) and (6,2): full match against the oracle. (6,3) violates the
    // stated hypothesis gcd(2^k+1, 2^n-1) = 1 (the gcd is 9), because
    // n/gcd(n,k) even forces a common factor; the predicate must refuse it.
    let mut cases = 0;
    for (spec, k) in [("p=2 n=5", 2u32), ("p=2 n=6", 2)] {
        let field = gf(spec);
        let d = quadratic::gh_exponent(&field, k);
        let lut = FnRepr::monomial(1, d).to_lut(&field);
        let mut pcn_set = Vec::new();
        for c in 2..field.order() {
            let outcome = quadratic::gh_pcn_predicate(&field, k, c).unwrap();
            let naive = pcn::is_pcn_naive(&field, &lut, c);
            assert_eq!(
                outcome == quadratic::GhOutcome::PcnConsistent,
                naive,
                "{spec} k={k} c={c}"
            );
            if naive {
                pcn_set.push(c);
            }
            cases += 1;
        }
        if spec == "p=2 n=6" {
            assert_eq!(pcn_set, vec![14, 15], "(6,2) must recover the reference PcN set");
        }
    }
    let f64 = gf("p=2 n=6");
    let err = quadratic::gh_pcn_predicate(&f64, 3, 5).unwrap_err();
    assert!(matches!(err, cdiff_core::Error::Argument(_)), "(6,3) must be refused: {err}");
    pass(
        "C09 trace-condition predicate",
        &format!(
            "{cases} (n,k,c) cases matched; (6,2) set = [14, 15]; (6,3) hypothesis \
             violation detected (gcd(2^3+1, 63) = 9; the even-m branch has no \
             permutation instances)"
        ),
    );
}

#[test]
fn criterion_10_do_characterizations() {
    let mut cases = 0;
    for spec in ["p=2 n=4", "p=2 n=5"] {
        let field = gf(spec);
        let mut corpus_reprs: Vec<FnRepr> = Vec::new();
        if spec == "p=2 n=5" {
            // x^3 is a permutation here; x^3 + x^5 is not (it vanishes at 0
            // and 1), so the nearest permutation quadratic x + x^3 + x^5
            // stands in for it
            let (a, _) = func::parse_function(&field, "do q:0,1:1").unwrap();
            let (b, _) = func::parse_function(&field, "do q:0,1:1 q:0,2:1 l:0:1").unwrap();
            corpus_reprs.push(a);
            corpus_reprs.push(b);
        }
        let mut rng = corpus::rng_from_seed(0xD0);
        corpus_reprs.extend(corpus::random_do_permutations(&field, &mut rng, 4, 40_000));
        assert!(!corpus_reprs.is_empty(), "{spec}: no DO permutations found");
        for repr in &corpus_reprs {
            let analysis = quadratic::DoAnalysis::new(&field, repr).unwrap();
            for c in 2..field.order() {
                let naive = pcn::is_pcn_naive(&field, analysis.lut(), c);
                assert_eq!(analysis.pcn_check(c).unwrap(), naive, "{spec} {} c={c}", repr.format());
                assert_eq!(analysis.intersection_check(c).unwrap(), naive);
                cases += 1;
            }
        }
    }
    pass("C10 DO characterizations", &format!("{cases} (F, c) cases, zero mismatches"));
}

#[test]
fn criterion_11_apn_pcn_incompatibility() {
    let field = gf("p=2 n=5");
    for d in [3u64, 30] {
        let lut = FnRepr::monomial(1, d).to_lut(&field);
        let audit = pcn::apn_pcn_bound_audit(&field, &lut).unwrap();
        assert_eq!(audit.classical, ddt::ClassicalClass::AlmostPerfectNonlinear, "x^{d}");
        assert!(audit.n_pcn <= 2, "x^{d}: {:?}", audit.pcn_set);
        assert_eq!(audit.apn_constraint_ok, Some(true));
        assert_eq!(audit.count_bound, 15);
        assert!(audit.count_bound_ok);
    }
    pass("C11 APN/PcN incompatibility", "x^3 and x^30 over F_32: |PcN set| <= 2, bound 15 holds");
}

#[test]
fn criterion_12_spectral_bounds() {
    let mut pairs = 0;
    let mut scv_checked = 0;
    let mut printed_form_failures = 0;
    for spec in ["p=2 n=5", "p=2 n=6"] {
        let field = gf(spec);
        let mut functions: Vec<(String, Lut)> = corpus::monomial_permutation_exponents(&field)
            .into_iter()
            .map(|d| (format!("x^{d}"), FnRepr::monomial(1, d).to_lut(&field)))
            .collect();
        if spec == "p=2 n=6" {
            let l1 = cdiff_core::AffineMap::parse(&field, reference::X5_COMPOSITION_L1)
                .unwrap()
                .linear;
            functions.push((
                "L1∘x^5".into(),
                l1.to_lut(&field).compose(&FnRepr::monomial(1, 5).to_lut(&field)),
            ));
        }
        let mut rng = corpus::rng_from_seed(0x12);
        let aff = corpus::random_affine_permutation(&field, &mut rng);
        functions.push(("random-affine".into(), aff.to_lut(&field)));

        for (name, lut) in &functions {
            let table = ddt::ddt(&field, lut);
            let pcn_set = pcn::enumerate_pcn(&field, &table).unwrap();
            if pcn_set.is_empty() {
                continue;
            }
            let walsh = spectral::walsh(&field, lut);
            for &c in &pcn_set {
                let report = spectral::pcn_nonlinearity_bounds(&field, &walsh, c).unwrap();
                assert!(report.all_rows_ok, "{spec} {name} c={c}");
                if report.scv_checked {
                    assert_eq!(report.scv_strict_ok, Some(true), "{spec} {name} c={c}");
                    scv_checked += 1;
                }
                if !report.printed_bound_holds {
                    printed_form_failures += 1;
                }
                pairs += 1;
            }
        }
    }
    assert!(pairs > 0 && scv_checked > 0);
    pass(
        "C12 spectral bounds",
        &format!(
            "{pairs} PcN pairs checked ({scv_checked} under the strict SCV gate); \
             printed closed-form bound logged, violated on {printed_form_failures} \
             instances (expected: it is negative at these sizes), never asserted"
        ),
    );
}

#[test]
fn criterion_13_fwht_cross_check() {
    let mut tables = 0;
    // corpus: random functions and permutations up to F_256, plus the
    // named functions used elsewhere
    for (spec, seed, perms, functions) in
        [("p=2 n=4", 0x13u64, 10, 10), ("p=2 n=6", 0x14, 4, 4), ("p=2 n=8", 0x15, 2, 2)]
    {
        let field = gf(spec);
        let mut rng = corpus::rng_from_seed(seed);
        let mut luts: Vec<Lut> = Vec::new();
        for _ in 0..perms {
            luts.push(corpus::random_permutation(&field, &mut rng));
        }
        for _ in 0..functions {
            luts.push(corpus::random_function(&field, &mut rng));
        }
        for lut in &luts {
            assert_eq!(ddt::ddt_via_autocorrelation(&field, lut).unwrap(), ddt::ddt(&field, lut));
            tables += 1;
        }
    }
    let f256 = gf("p=2 n=8");
    let inv = FnRepr::monomial(1, 254).to_lut(&f256);
    assert_eq!(ddt::ddt_via_autocorrelation(&f256, &inv).unwrap(), ddt::ddt(&f256, &inv));
    tables += 1;
    pass("C13 FWHT cross-check", &format!("{tables} tables bit-exact up to F_256"));
}

#[test]
fn criterion_14_duality_identities() {
    let mut cases = 0u64;
    for spec in ["p=2 n=4", "p=3 n=2", "p=2 n=6"] {
        let field = gf(spec);
        let q = field.order();
        let mut rng = corpus::rng_from_seed(0x14D);
        let mut luts = vec![corpus::random_permutation(&field, &mut rng)];
        if field.p() == 2 {
            luts.push(FnRepr::monomial(1, if q == 64 { 5 } else { 7 }).to_lut(&field));
        }
        for lut in &luts {
            let inverse = lut.invert().unwrap();
            for c in 1..q {
                let cinv = field.inv(c).unwrap();
                let tc = ddt::cddt(&field, lut, c);
                let tcinv = ddt::cddt(&field, lut, cinv);
                // inner-differential table of the inverse function
                let mut inner = vec![0u32; (q * q) as usize];
                for y in field.elements() {
                    for b in field.elements() {
                        let a = field.sub(inverse.get(field.add(field.mul(c, y), b)), inverse.get(y));
                        inner[(a * q + b) as usize] += 1;
                    }
                }
                for a in field.elements() {
                    for b in field.elements() {
                        assert_eq!(
                            tc.at(a, b),
                            tcinv.at(field.neg(a), field.neg(field.mul(cinv, b))),
                            "{spec} c={c} a={a} b={b} (c <-> c^-1)"
                        );
                        assert_eq!(
                            tc.at(a, b),
                            inner[(a * q + b) as usize],
                            "{spec} c={c} a={a} b={b} (outer/inner)"
                        );
                        cases += 1;
                    }
                }
            }
        }
    }
    pass("C14 duality identities", &format!("{cases} entries verified exhaustively"));
}

#[test]
fn criterion_15_paper_claim_audits() {
    // (1) APcN sum-formula audit over the F_16 corpus
    let f16 = gf("p=2 n=4");
    let mut audited = 0;
    let mut verdict_disagreements = 0;
    let mut pcn_counterexample: Option<String> = None;
    let mut luts = vec![Lut::identity(&f16)];
    luts.extend(random_perms(&f16, 0xA0D, 100));
    for lut in &luts {
        for c in 2..f16.order() {
            let audit = pcn::apcn_claim_audit(&f16, lut, c).unwrap();
            audited += 1;
            if !audit.verdicts_agree {
                verdict_disagreements += 1;
            }
            if pcn_counterexample.is_none() && pcn::is_pcn_naive(&f16, lut, c) {
                if let Some(ce) = &audit.formula_counterexample {
                    pcn_counterexample = Some(format!(
                        "PcN instance at c={c}: Delta_c(a={},b={}) = {} but the row sum gives {}",
                        ce.a, ce.b, ce.lhs, ce.rhs
                    ));
                }
            }
        }
    }
    let ce = pcn_counterexample.expect("the identity is PcN and must break the sum formula");
    println!("  audit 1 (APcN sum criterion): {audited} cases, {verdict_disagreements} verdict disagreements; {ce}");

    // (2) the F_32 closure-example comparison
    let f32 = gf("p=2 n=5");
    let x5 = FnRepr::monomial(1, 5).to_lut(&f32);
    let audit = pcn::closure_audits(&f32, &x5).unwrap();
    let claimed = reference::closure_claimed_set(&f32);
    println!(
        "  audit 2 (closure example): computed PcN set of x^5 is {:?}, of x^25 is {:?}; \
         the pinned four-element list {:?} is {} (an APN permutation admits at most an \
         inverse pair, so the list cannot be right)",
        audit.pcn_set,
        audit.inverse_set,
        claimed,
        if audit.pcn_set == claimed { "confirmed" } else { "not confirmed" }
    );
    assert!(audit.scalar_ok && audit.frobenius_ok);

    // (3) the zero-row bound constant on the composition example
    let f64f = gf("p=2 n=6");
    let x5_64 = FnRepr::monomial(1, 5).to_lut(&f64f);
    let checker = affine::LnChecker::new(&f64f, &x5_64).unwrap();
    let l1 = cdiff_core::AffineMap::parse(&f64f, reference::X5_COMPOSITION_L1).unwrap().linear;
    let zr = checker.zero_row_audit(&l1, 14).unwrap();
    println!(
        "  audit 3 (zero-row bound): G1 PcN = {}, measured min #N(a,F) = {}, printed \
         bound ceil(63/2) = {}; the data supports the printed constant: {}",
        zr.g_is_pcn, zr.min_zero_count, zr.bound, zr.bound_holds
    );
    assert!(zr.g_is_pcn);

    pass(
        "C15 paper-claim audits",
        "all three audits completed with written verdicts (see lines above)",
    );
}

#[test]
fn criterion_16_benchmark() {
    let field = gf("p=2 n=8");
    let mut rng = corpus::rng_from_seed(16);
    let lut = corpus::random_permutation(&field, &mut rng);

    let runs = 5;
    let time = |f: &dyn Fn() -> methods::MethodResult| {
        let mut samples = Vec::new();
        let mut result = None;
        for _ in 0..runs {
            let t = Instant::now();
            let r = std::hint::black_box(f());
            samples.push(t.elapsed());
            result = Some(r);
        }
        samples.sort_unstable();
        (samples[samples.len() / 2], result.unwrap())
    };

    let (t_occ, occupancy) = time(&|| methods::occupancy_full_all_c(&field, &lut));
    let (t_lookup, lookup) = time(&|| methods::ddt_lookup_all_c(&field, &lut));
    let (t_elim, elim) = time(&|| methods::ratio_elimination_all_c(&field, &lut, true));
    let (_, elim_full) = time(&|| methods::ratio_elimination_all_c(&field, &lut, false));

    assert_eq!(occupancy.pcn_set, lookup.pcn_set);
    assert_eq!(occupancy.pcn_set, elim.pcn_set);
    assert_eq!(occupancy.pcn_set, elim_full.pcn_set);
    let speedup = t_occ.as_secs_f64() / t_elim.as_secs_f64().max(1e-12);
    assert!(
        speedup > 1.0,
        "ratio elimination must beat full occupancy on F_256: {t_occ:?} vs {t_elim:?}"
    );

    // the literal triple check runs only at desk scale and must agree there
    let f64f = gf("p=2 n=6");
    let mut rng = corpus::rng_from_seed(17);
    let small = corpus::random_permutation(&f64f, &mut rng);
    let triple = methods::triple_check_all_c(&f64f, &small);
    assert_eq!(triple.pcn_set, methods::occupancy_full_all_c(&f64f, &small).pcn_set);
    assert_eq!(triple.pcn_set, methods::ratio_elimination_all_c(&f64f, &small, true).pcn_set);

    pass(
        "C16 benchmark",
        &format!(
            "F_256 all-c: occupancy {t_occ:?} vs ratio-elimination {t_elim:?} \
             (speedup {speedup:.1}x, DDT-lookup {t_lookup:?}); methods agree; \
             triple check agrees at F_64"
        ),
    );
}
