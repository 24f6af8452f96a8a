//! All-c PcN classification by four routes, instrumented with exact
//! operation counts for the benchmark comparisons.
//!
//! Every method here is deliberately single-threaded so wall times and op
//! counts are comparable; the production paths in `ddt`/`pcn` are the
//! parallel ones. Op counts tally innermost-loop steps and are
//! deterministic for a fixed input.
//!
//! The occupancy baseline does the full `O(p^{2n})` sweep per `c` with no
//! short-circuiting — that is the definitional verification being measured
//! — while `occupancy_early_exit_all_c` reports what collision-driven
//! early exit buys on top.

use crate::ddt::DdTable;
use crate::field::{Elem, Field};
use crate::func::Lut;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodResult {
    pub pcn_set: Vec<Elem>,
    pub ops: u64,
}

/// Definition-literal check: for every `c`, for every `(a, b)`, count the
/// solutions of `F(x+a) - c F(x) = b` and demand each count be exactly 1.
/// `O(p^{3n})` per `c`.
pub fn triple_check_all_c(field: &Field, lut: &Lut) -> MethodResult {
    let q = field.order();
    let mut ops = 0u64;
    let mut pcn_set = Vec::new();
    for c in 2..q {
        let mut pcn = true;
        for a in field.elements() {
            for b in field.elements() {
                let mut count = 0u32;
                for x in field.elements() {
                    ops += 1;
                    if field.sub(lut.get(field.add(x, a)), field.mul(c, lut.get(x))) == b {
                        count += 1;
                    }
                }
                if count != 1 {
                    pcn = false;
                }
            }
        }
        if pcn {
            pcn_set.push(c);
        }
    }
    MethodResult { pcn_set, ops }
}

/// Occupancy verification per `c`, full `O(p^{2n})` sweep, no early exit.
pub fn occupancy_full_all_c(field: &Field, lut: &Lut) -> MethodResult {
    let q = field.order();
    let size = q as usize;
    let mut ops = 0u64;
    let mut pcn_set = Vec::new();
    let mut stamp = vec![0u32; size];
    let mut epoch = 0u32;
    for c in 2..q {
        let mut pcn = true;
        for a in field.elements() {
            epoch += 1;
            for x in field.elements() {
                ops += 1;
                let y = field.sub(lut.get(field.add(x, a)), field.mul(c, lut.get(x)));
                if stamp[y as usize] == epoch {
                    pcn = false;
                } else {
                    stamp[y as usize] = epoch;
                }
            }
        }
        if pcn {
            pcn_set.push(c);
        }
    }
    MethodResult { pcn_set, ops }
}

/// Occupancy verification with collision-driven early exit per shift and
/// per `c`. Reported for context; on random permutations this beats every
/// other route because almost every `(c, a)` collides within `O(sqrt(q))`
/// steps.
pub fn occupancy_early_exit_all_c(field: &Field, lut: &Lut) -> MethodResult {
    let q = field.order();
    let size = q as usize;
    let mut ops = 0u64;
    let mut pcn_set = Vec::new();
    let mut stamp = vec![0u32; size];
    let mut epoch = 0u32;
    for c in 2..q {
        let mut pcn = true;
        'shifts: for a in field.elements() {
            epoch += 1;
            for x in field.elements() {
                ops += 1;
                let y = field.sub(lut.get(field.add(x, a)), field.mul(c, lut.get(x)));
                if stamp[y as usize] == epoch {
                    pcn = false;
                    break 'shifts;
                }
                stamp[y as usize] = epoch;
            }
        }
        if pcn {
            pcn_set.push(c);
        }
    }
    MethodResult { pcn_set, ops }
}

/// Product-criterion lookups on a precomputed DDT: per `c` at most
/// `(q-1)^2` pairs, two lookups and one multiplication each, stopping at
/// the first violation. DDT construction is included in the op count.
pub fn ddt_lookup_all_c(field: &Field, lut: &Lut) -> MethodResult {
    let q = field.order();
    let (table, mut ops) = ddt_with_ops(field, lut);
    let mut pcn_set = Vec::new();
    for c in 2..q {
        let cinv = field.inv(c).expect("c != 0");
        let mut pcn = true;
        'rows: for a in 1..q {
            for b in 1..q {
                ops += 1;
                if table.at(a, b) != 0 && table.at(a, field.mul(cinv, b)) != 0 {
                    pcn = false;
                    break 'rows;
                }
            }
        }
        if pcn {
            pcn_set.push(c);
        }
    }
    MethodResult { pcn_set, ops }
}

/// Ratio elimination over the precomputed DDT: each pair of nonzero row
/// entries kills both ratios in the candidate set; one pass answers all
/// `c` at once. With `early_termination` the scan stops as soon as no
/// candidate survives.
pub fn ratio_elimination_all_c(
    field: &Field,
    lut: &Lut,
    early_termination: bool,
) -> MethodResult {
    let q = field.order();
    let (table, mut ops) = ddt_with_ops(field, lut);
    let mut candidate = vec![true; q as usize];
    candidate[0] = false;
    candidate[1] = false;
    let mut remaining = q - 2;
    'rows: for a in 1..q {
        let row = table.row(a);
        let nonzero: Vec<Elem> = (1..q).filter(|&b| row[b as usize] != 0).collect();
        for (i, &bi) in nonzero.iter().enumerate() {
            for &bj in nonzero.iter().skip(i + 1) {
                ops += 1;
                for r in [field.div(bi, bj).unwrap(), field.div(bj, bi).unwrap()] {
                    if candidate[r as usize] {
                        candidate[r as usize] = false;
                        remaining -= 1;
                    }
                }
                if early_termination && remaining == 0 {
                    break 'rows;
                }
            }
        }
    }
    let pcn_set = (2..q).filter(|&c| candidate[c as usize]).collect();
    MethodResult { pcn_set, ops }
}

fn ddt_with_ops(field: &Field, lut: &Lut) -> (DdTable, u64) {
    let q = field.order();
    let size = q as usize;
    let mut counts = vec![0u32; size * size];
    let mut ops = 0u64;
    for a in field.elements() {
        for x in field.elements() {
            ops += 1;
            let b = field.sub(lut.get(field.add(x, a)), lut.get(x));
            counts[(a * q + b) as usize] += 1;
        }
    }
    (DdTable { field: field.spec().clone(), size, counts }, ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::func::FnRepr;

    #[test]
    fn all_methods_agree_on_f16() {
        let field = Field::from_spec_str("p=2 n=4").unwrap();
        let mut rng = corpus::rng_from_seed(97);
        for _ in 0..5 {
            let lut = corpus::random_permutation(&field, &mut rng);
            let reference = triple_check_all_c(&field, &lut).pcn_set;
            assert_eq!(occupancy_full_all_c(&field, &lut).pcn_set, reference);
            assert_eq!(occupancy_early_exit_all_c(&field, &lut).pcn_set, reference);
            assert_eq!(ddt_lookup_all_c(&field, &lut).pcn_set, reference);
            assert_eq!(ratio_elimination_all_c(&field, &lut, false).pcn_set, reference);
            assert_eq!(ratio_elimination_all_c(&field, &lut, true).pcn_set, reference);
        }
    }

    #[test]
    fn methods_find_the_x34_set() {
        let field = Field::from_spec_str("p=2 n=6").unwrap();
        let lut = FnRepr::monomial(1, 34).to_lut(&field);
        assert_eq!(ratio_elimination_all_c(&field, &lut, false).pcn_set, vec![14, 15]);
        assert_eq!(occupancy_full_all_c(&field, &lut).pcn_set, vec![14, 15]);
    }

    #[test]
    fn op_counts_reflect_the_complexity_gap() {
        let field = Field::from_spec_str("p=2 n=4").unwrap();
        let mut rng = corpus::rng_from_seed(3);
        let lut = corpus::random_permutation(&field, &mut rng);
        let triple = triple_check_all_c(&field, &lut);
        let occupancy = occupancy_full_all_c(&field, &lut);
        let lookup = ddt_lookup_all_c(&field, &lut);
        let elim = ratio_elimination_all_c(&field, &lut, true);
        assert!(triple.ops > occupancy.ops);
        assert!(occupancy.ops > lookup.ops);
        assert!(occupancy.ops > elim.ops);
    }
}
