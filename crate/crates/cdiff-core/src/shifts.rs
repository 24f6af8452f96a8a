//! Per-shift bijectivity analysis: bad-shift sets `V_c`, their subspace
//! structure, the AllGood/AllBad/Intermediate trichotomy, and the monomial
//! dichotomy audit.
//!
//! The subspace property of `V_c` is a claim under test here, not a
//! given: the closure check is exhaustive pairwise arithmetic, and a
//! violation produces a witness, not a crash.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elem, Field, FieldSpec};
use crate::func::{FnRepr, Lut};
use crate::par::*;
use crate::subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Trichotomy {
    AllGood,
    AllBad,
    Intermediate,
}

#[derive(Debug, Clone, Serialize)]
pub enum SubspaceCheck {
    Subspace {
        basis: Vec<Elem>,
        dimension: u32,
        trichotomy: Trichotomy,
        /// Basis of a verified complement `W`; present only when
        /// `0 < dim < n`.
        complement_basis: Option<Vec<Elem>>,
    },
    /// `x - y` escaped the set: the subspace proposition is refuted on
    /// this instance.
    Violation { witness: (Elem, Elem) },
}

#[derive(Debug, Clone, Serialize)]
pub struct ShiftReport {
    pub field: FieldSpec,
    pub c: Elem,
    /// Nonzero shifts `a` whose c-derivative fails to be a bijection.
    pub bad_shifts: Vec<Elem>,
    pub check: SubspaceCheck,
}

impl ShiftReport {
    pub fn trichotomy(&self) -> Option<Trichotomy> {
        match &self.check {
            SubspaceCheck::Subspace { trichotomy, .. } => Some(*trichotomy),
            SubspaceCheck::Violation { .. } => None,
        }
    }

    pub fn dimension(&self) -> Option<u32> {
        match &self.check {
            SubspaceCheck::Subspace { dimension, .. } => Some(*dimension),
            SubspaceCheck::Violation { .. } => None,
        }
    }
}

fn is_good_shift(field: &Field, lut: &Lut, c: Elem, a: Elem) -> bool {
    let size = field.order() as usize;
    let mut seen = vec![false; size];
    for x in field.elements() {
        let y = field.sub(lut.get(field.add(x, a)), field.mul(c, lut.get(x)));
        if seen[y as usize] {
            return false;
        }
        seen[y as usize] = true;
    }
    true
}

/// Enumerates the bad-shift set of `(F, c)`, verifies the subspace claim
/// exhaustively, extracts a lowest-encoding greedy basis, and for the
/// intermediate case constructs and verifies a complementary subspace of
/// good shifts.
pub fn bad_shifts(field: &Field, lut: &Lut, c: Elem) -> Result<ShiftReport> {
    if c < 2 {
        return Err(Error::Argument(format!("shift analysis expects c outside {{0,1}}, got {c}")));
    }
    if !lut.is_permutation() {
        return Err(Error::Precondition("shift analysis requires a permutation".into()));
    }
    let n = field.n();
    let bad: Vec<Elem> = (1..field.order())
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter(|&a| !is_good_shift(field, lut, c, a))
        .collect();

    let mut v_c = bad.clone();
    v_c.push(0);
    let check = match subspace::closure_violation(field, &v_c) {
        Some(witness) => SubspaceCheck::Violation { witness },
        None => {
            let basis = subspace::greedy_basis(field, &v_c);
            let dimension = basis.len() as u32;
            debug_assert_eq!(field.p().pow(dimension), v_c.len() as u64);
            let trichotomy = match dimension {
                0 => Trichotomy::AllGood,
                d if d == n => Trichotomy::AllBad,
                _ => Trichotomy::Intermediate,
            };
            let complement_basis = (trichotomy == Trichotomy::Intermediate).then(|| {
                let ext = subspace::complement_basis(field, &basis);
                // every nonzero element of W must be a good shift
                for w in subspace::span(field, &ext) {
                    if w != 0 {
                        debug_assert!(!bad.contains(&w));
                        assert!(
                            is_good_shift(field, lut, c, w),
                            "complement contains bad shift {w}"
                        );
                    }
                }
                ext
            });
            SubspaceCheck::Subspace { basis, dimension, trichotomy, complement_basis }
        }
    };
    Ok(ShiftReport { field: field.spec().clone(), c, bad_shifts: bad, check })
}

#[derive(Debug, Clone, Serialize)]
pub struct DichotomyCase {
    pub exponent: u64,
    pub c: Elem,
    pub trichotomy: Trichotomy,
    pub dimension: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct DichotomyAuditReport {
    pub field: FieldSpec,
    pub exponents: Vec<u64>,
    pub cases: usize,
    /// Intermediate cases, which the monomial dichotomy says cannot exist.
    pub violations: Vec<DichotomyCase>,
    /// Subspace-closure violations encountered along the way.
    pub closure_violations: Vec<(u64, Elem)>,
}

/// Runs the all-or-nothing check for every permutation monomial `x^d` in
/// `exponents` (defaults to all of them) and every `c` outside `{0,1}`.
pub fn monomial_dichotomy_audit(
    field: &Field,
    exponents: Option<Vec<u64>>,
) -> Result<DichotomyAuditReport> {
    if field.p() != 2 {
        return Err(Error::Unsupported("monomial dichotomy is a binary-field result".into()));
    }
    let q = field.order();
    let exponents = exponents.unwrap_or_else(|| {
        (1..q).filter(|&d| crate::field::gcd(d, q - 1) == 1).collect()
    });
    for &d in &exponents {
        if crate::field::gcd(d, q - 1) != 1 {
            return Err(Error::Argument(format!(
                "x^{d} is not a permutation of F_{q} (gcd(d, q-1) != 1)"
            )));
        }
    }
    type ExponentFindings = (Vec<DichotomyCase>, Vec<(u64, Elem)>);
    let per_exponent: Vec<ExponentFindings> = exponents
        .clone()
        .into_par_iter()
        .map(|d| {
            let lut = FnRepr::monomial(1, d).to_lut(field);
            let mut violations = Vec::new();
            let mut closure_violations = Vec::new();
            for c in 2..q {
                match bad_shifts(field, &lut, c).expect("permutation monomial") {
                    ShiftReport { check: SubspaceCheck::Violation { .. }, .. } => {
                        closure_violations.push((d, c));
                    }
                    report => {
                        let trichotomy = report.trichotomy().unwrap();
                        if trichotomy == Trichotomy::Intermediate {
                            violations.push(DichotomyCase {
                                exponent: d,
                                c,
                                trichotomy,
                                dimension: report.dimension().unwrap(),
                            });
                        }
                    }
                }
            }
            (violations, closure_violations)
        })
        .collect();
    let mut violations = Vec::new();
    let mut closure_violations = Vec::new();
    for (v, cv) in per_exponent {
        violations.extend(v);
        closure_violations.extend(cv);
    }
    Ok(DichotomyAuditReport {
        field: field.spec().clone(),
        cases: exponents.len() * (q as usize - 2),
        exponents,
        violations,
        closure_violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(text: &str) -> Field {
        Field::from_spec_str(text).unwrap()
    }

    #[test]
    fn identity_has_no_bad_shifts() {
        let f = gf("p=2 n=2 modulus=7");
        for c in 2..f.order() {
            let report = bad_shifts(&f, &Lut::identity(&f), c).unwrap();
            assert!(report.bad_shifts.is_empty());
            assert_eq!(report.trichotomy(), Some(Trichotomy::AllGood));
        }
    }

    #[test]
    fn x34_at_c5_is_all_bad() {
        let f = gf("p=2 n=6");
        let lut = FnRepr::monomial(1, 34).to_lut(&f);
        // c = y^2 + 1, encoding 5
        let report = bad_shifts(&f, &lut, 5).unwrap();
        assert_eq!(report.bad_shifts.len() as u64, f.order() - 1);
        assert_eq!(report.trichotomy(), Some(Trichotomy::AllBad));
        assert_eq!(report.dimension(), Some(6));
    }

    #[test]
    fn stated_binomial_is_not_a_permutation_of_f32() {
        // x^3 + x^5 vanishes at both 0 and 1, so shift analysis refuses it
        let f = gf("p=2 n=5");
        let (bin, _) = crate::func::parse_function(&f, "poly 3:1 5:1").unwrap();
        let lut = bin.to_lut(&f);
        assert_eq!(lut.collision(), Some((0, 1, 0)));
        assert!(matches!(bad_shifts(&f, &lut, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn trinomial_permutation_refutes_the_subspace_law() {
        // x + x^3 + x^5 is a permutation of F_32 with exactly one good
        // shift per c: 30 bad shifts plus 0 is a 31-element set, which is
        // not an F_2-subspace. The report must carry a genuine witness.
        let f = gf("p=2 n=5");
        let (tri, _) = crate::func::parse_function(&f, "poly 1:1 3:1 5:1").unwrap();
        let lut = tri.to_lut(&f);
        assert!(lut.is_permutation());
        for c in [2u64, 7, 19] {
            let report = bad_shifts(&f, &lut, c).unwrap();
            assert_eq!(report.bad_shifts.len(), 30, "c={c}");
            match &report.check {
                SubspaceCheck::Violation { witness: (x, y) } => {
                    let mut v = report.bad_shifts.clone();
                    v.push(0);
                    assert!(v.contains(x) && v.contains(y));
                    assert!(!v.contains(&f.add(*x, *y)));
                }
                other => panic!("expected a closure violation, got {other:?}"),
            }
        }
    }

    #[test]
    fn trichotomy_is_consistent_with_pcn() {
        let f = gf("p=2 n=4");
        let lut = FnRepr::monomial(1, 7).to_lut(&f);
        for c in 2..f.order() {
            let report = bad_shifts(&f, &lut, c).unwrap();
            let pcn = crate::pcn::is_pcn_naive(&f, &lut, c);
            assert_eq!(report.trichotomy() == Some(Trichotomy::AllGood), pcn);
        }
    }

    #[test]
    fn coefficient_scaling_preserves_trichotomy() {
        let f = gf("p=2 n=4");
        for c in [2u64, 7, 11] {
            let base = bad_shifts(&f, &FnRepr::monomial(1, 7).to_lut(&f), c).unwrap();
            for coeff in [3u64, 9] {
                let scaled = bad_shifts(&f, &FnRepr::monomial(coeff, 7).to_lut(&f), c).unwrap();
                assert_eq!(base.trichotomy(), scaled.trichotomy());
            }
        }
    }

    #[test]
    fn dichotomy_holds_for_f16_monomials() {
        let f = gf("p=2 n=4");
        let report = monomial_dichotomy_audit(&f, None).unwrap();
        assert!(report.violations.is_empty());
        assert!(report.closure_violations.is_empty());
        assert_eq!(report.exponents.len(), 8); // phi(15)
    }

    #[test]
    fn rejects_non_permutation_exponents() {
        let f = gf("p=2 n=4");
        assert!(monomial_dichotomy_audit(&f, Some(vec![3])).is_err());
        let cube = FnRepr::monomial(1, 3).to_lut(&f);
        assert!(bad_shifts(&f, &cube, 2).is_err());
        assert!(bad_shifts(&f, &Lut::identity(&f), 1).is_err());
    }
}
