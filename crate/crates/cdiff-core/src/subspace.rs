//! `F_p`-linear span/basis helpers over element encodings, plus bit-matrix
//! kernels over `F_2` used by the quadratic machinery.

use crate::field::{Elem, Field};

/// Exhaustive pairwise closure check under subtraction for a set that
/// contains 0. Returns a witness pair `(x, y)` with `x - y` outside the
/// set, if one exists.
pub fn closure_violation(field: &Field, set: &[Elem]) -> Option<(Elem, Elem)> {
    let mut member = vec![false; field.order() as usize];
    for &e in set {
        member[e as usize] = true;
    }
    for &x in set {
        for &y in set {
            if !member[field.sub(x, y) as usize] {
                return Some((x, y));
            }
        }
    }
    None
}

/// Greedy lowest-encoding-first basis of the `F_p`-span of `set`.
pub fn greedy_basis(field: &Field, set: &[Elem]) -> Vec<Elem> {
    let mut sorted: Vec<Elem> = set.to_vec();
    sorted.sort_unstable();
    let mut basis = Vec::new();
    let mut in_span = vec![false; field.order() as usize];
    in_span[0] = true;
    let mut span_elems: Vec<Elem> = vec![0];
    for &e in &sorted {
        if in_span[e as usize] {
            continue;
        }
        basis.push(e);
        let mut added = Vec::new();
        for t in 1..field.p() {
            let te = field.mul(t, e);
            for &s in &span_elems {
                let v = field.add(s, te);
                if !in_span[v as usize] {
                    in_span[v as usize] = true;
                    added.push(v);
                }
            }
        }
        span_elems.extend(added);
    }
    basis
}

/// Full `F_p`-span of an independent family, sorted ascending.
pub fn span(field: &Field, basis: &[Elem]) -> Vec<Elem> {
    let mut elems: Vec<Elem> = vec![0];
    for &b in basis {
        let mut next = Vec::with_capacity(elems.len() * field.p() as usize);
        for t in 0..field.p() {
            let tb = field.mul(t, b);
            next.extend(elems.iter().map(|&s| field.add(s, tb)));
        }
        elems = next;
    }
    elems.sort_unstable();
    elems
}

/// Extends an independent family to a basis of the whole field by greedily
/// adding standard basis monomials `x^i`; returns only the added vectors.
pub fn complement_basis(field: &Field, basis: &[Elem]) -> Vec<Elem> {
    let mut full: Vec<Elem> = basis.to_vec();
    let mut extension = Vec::new();
    let mut in_span = vec![false; field.order() as usize];
    for e in span(field, basis) {
        in_span[e as usize] = true;
    }
    for i in 0..field.n() {
        if full.len() as u32 == field.n() {
            break;
        }
        let v = field.p().pow(i);
        if in_span[v as usize] {
            continue;
        }
        full.push(v);
        extension.push(v);
        for e in span(field, &full) {
            in_span[e as usize] = true;
        }
    }
    debug_assert_eq!(full.len() as u32, field.n());
    extension
}

/// Basis of `{x : M(x) = 0}` where the `F_2`-linear map `M` on `n`-bit
/// vectors is given by the images of the standard basis.
pub fn gf2_kernel_basis(columns: &[u64], n: u32) -> Vec<u64> {
    // pivots keyed by leading bit: (image, preimage) pairs
    let mut pivots: Vec<(u64, u64)> = Vec::new();
    let mut kernel = Vec::new();
    for (j, &column) in columns.iter().enumerate().take(n as usize) {
        let mut img = column;
        let mut pre = 1u64 << j;
        for &(pimg, ppre) in &pivots {
            if img & (1 << (63 - pimg.leading_zeros())) != 0 {
                img ^= pimg;
                pre ^= ppre;
            }
        }
        if img == 0 {
            kernel.push(pre);
        } else {
            pivots.push((img, pre));
            pivots.sort_by_key(|&(i, _)| std::cmp::Reverse(i));
        }
    }
    kernel.sort_unstable();
    kernel
}

/// Basis of `{u : parity(row & u) = 0 for every row}` over `n`-bit vectors.
pub fn gf2_nullspace(rows: &[u64], n: u32) -> Vec<u64> {
    let mut rows: Vec<u64> = rows.iter().copied().filter(|&r| r != 0).collect();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..n as usize {
        let Some(sel) = (r..rows.len()).find(|&i| rows[i] & (1 << col) != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let pivot_row = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row & (1 << col) != 0 {
                *row ^= pivot_row;
            }
        }
        pivot_cols.push(col);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..n as usize).filter(|c| !pivot_cols.contains(c)) {
        let mut v = 1u64 << free;
        for (idx, &pc) in pivot_cols.iter().enumerate() {
            if rows[idx] & (1 << free) != 0 {
                v |= 1 << pc;
            }
        }
        basis.push(v);
    }
    basis.sort_unstable();
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(text: &str) -> Field {
        Field::from_spec_str(text).unwrap()
    }

    #[test]
    fn greedy_basis_spans_the_set() {
        let f = gf("p=2 n=4");
        // subfield F_4 inside F_16: fixed points of Frobenius^2
        let subfield: Vec<Elem> =
            f.elements().filter(|&e| f.in_subfield(e, 2)).collect();
        let basis = greedy_basis(&f, &subfield);
        assert_eq!(basis.len(), 2);
        assert_eq!(span(&f, &basis), subfield);
        assert!(closure_violation(&f, &subfield).is_none());
        let ext = complement_basis(&f, &basis);
        assert_eq!(ext.len(), 2);
        let full: Vec<Elem> = basis.iter().chain(&ext).copied().collect();
        assert_eq!(span(&f, &full).len() as u64, f.order());
    }

    #[test]
    fn closure_violation_finds_witnesses() {
        let f = gf("p=3 n=2");
        // {0, 1, 2} is the prime field: closed
        assert!(closure_violation(&f, &[0, 1, 2]).is_none());
        // {0, 1} is not closed under subtraction in characteristic 3
        assert!(closure_violation(&f, &[0, 1]).is_some());
    }

    #[test]
    fn gf2_kernel_matches_enumeration() {
        let f = gf("p=2 n=5");
        // kernel of x -> x^2 + x (the map with kernel F_2)
        let columns: Vec<u64> =
            (0..f.n()).map(|j| f.add(f.frobenius(1 << j, 1), 1 << j)).collect();
        let kernel = gf2_kernel_basis(&columns, f.n());
        let brute: Vec<u64> = f
            .elements()
            .filter(|&x| f.add(f.frobenius(x, 1), x) == 0)
            .collect();
        let spanned = span(&f, &kernel);
        assert_eq!(spanned, brute);
    }

    #[test]
    fn gf2_nullspace_matches_enumeration() {
        let f = gf("p=2 n=6");
        let rows: Vec<u64> = [3u64, 17, 40].iter().map(|&e| f.mu_mask(e)).collect();
        let basis = gf2_nullspace(&rows, f.n());
        let brute: Vec<u64> = f
            .elements()
            .filter(|&u| rows.iter().all(|&r| (r & u).count_ones() % 2 == 0))
            .collect();
        assert_eq!(span(&f, &basis), brute);
    }
}
