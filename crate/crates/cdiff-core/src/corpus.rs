//! Seeded corpora: random permutations, monomial exponent lists, random
//! linear/affine maps and DO quadratics. A fixed seed fully determines
//! every corpus, so audit runs are reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{gcd, Elem, Field};
use crate::func::{AffineMap, FnRepr, LinearizedPoly, Lut};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_permutation(field: &Field, rng: &mut impl Rng) -> Lut {
    let mut values: Vec<Elem> = field.elements().collect();
    values.shuffle(rng);
    Lut { values }
}

pub fn random_function(field: &Field, rng: &mut impl Rng) -> Lut {
    let values = (0..field.order()).map(|_| rng.gen_range(0..field.order())).collect();
    Lut { values }
}

/// Exponents `d` with `gcd(d, p^n - 1) = 1`, i.e. all permutation
/// monomials up to coefficient scaling.
pub fn monomial_permutation_exponents(field: &Field) -> Vec<u64> {
    let q = field.order();
    (1..q).filter(|&d| gcd(d, q - 1) == 1).collect()
}

pub fn random_linear_permutation(field: &Field, rng: &mut impl Rng) -> LinearizedPoly {
    loop {
        let mut coeffs: Vec<(u32, Elem)> = Vec::new();
        for i in 0..field.n() {
            if rng.gen_bool(0.5) {
                coeffs.push((i, rng.gen_range(1..field.order())));
            }
        }
        let l = LinearizedPoly::new(coeffs);
        if !l.coeffs.is_empty() && l.is_permutation(field) {
            return l;
        }
    }
}

pub fn random_affine_permutation(field: &Field, rng: &mut impl Rng) -> AffineMap {
    let linear = random_linear_permutation(field, rng);
    let translation = rng.gen_range(0..field.order());
    AffineMap::new(linear, translation)
}

/// Samples DO quadratics (with linear parts) that happen to be
/// permutations; gives up quietly once the try budget runs out, so small
/// fields with scarce quadratic permutations yield shorter corpora.
pub fn random_do_permutations(
    field: &Field,
    rng: &mut impl Rng,
    count: usize,
    max_tries: usize,
) -> Vec<FnRepr> {
    let n = field.n();
    let mut out = Vec::new();
    for _ in 0..max_tries {
        if out.len() >= count {
            break;
        }
        let mut quad = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.4) {
                    quad.push((i, j, rng.gen_range(1..field.order())));
                }
            }
        }
        if quad.is_empty() {
            continue;
        }
        let mut linear: Vec<(u32, Elem)> = Vec::new();
        for i in 0..n {
            if rng.gen_bool(0.5) {
                linear.push((i, rng.gen_range(1..field.order())));
            }
        }
        let repr = FnRepr::DoQuadratic { quad, linear, constant: 0 };
        if repr.to_lut(field).is_permutation() {
            out.push(repr);
        }
    }
    out
}
