//! Exact arithmetic in `F_{p^n}` with a user-chosen irreducible modulus.
//!
//! Elements are canonical base-`p` digit integers: the element with
//! polynomial coordinates `d_0 + d_1 x + ... + d_{n-1} x^{n-1}` is encoded
//! as `sum d_i p^i`. Multiplication runs on log/exp tables built from a
//! generator found at construction time; addition is XOR for `p = 2` and a
//! digit loop otherwise. All validation (primality, irreducibility) is
//! exhaustive, which desk-scale fields make affordable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Canonical integer encoding of a field element.
pub type Elem = u64;

/// Largest supported field order for table-backed arithmetic.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// An explicit `F_{p^n}`: prime, extension degree, modulus polynomial
/// (constant term first, leading coefficient 1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub n: u32,
    pub modulus: Vec<u64>,
}

impl FieldSpec {
    /// Builds a spec, falling back to the built-in default modulus when
    /// none is given.
    pub fn new(p: u64, n: u32, modulus: Option<Vec<u64>>) -> Result<FieldSpec> {
        let modulus = match modulus {
            Some(m) => m,
            None => crate::conway::default_modulus(p, n).ok_or_else(|| {
                Error::InvalidField(format!(
                    "no built-in modulus for p={p} n={n}; pass modulus= explicitly"
                ))
            })?,
        };
        let spec = FieldSpec { p, n, modulus };
        spec.validate()?;
        Ok(spec)
    }

    /// Parses `p=<int> n=<int> [modulus=<int>]` where the modulus integer is
    /// the base-`p` digit encoding of the polynomial, constant term in the
    /// least significant digit.
    pub fn parse(text: &str) -> Result<FieldSpec> {
        let mut p = None;
        let mut n = None;
        let mut modulus_enc = None;
        for (offset, token) in tokens_with_offsets(text) {
            let (key, value) = token.split_once('=').ok_or_else(|| Error::Parse {
                msg: format!("expected key=value, got `{token}`"),
                offset,
            })?;
            let value: u64 = value.parse().map_err(|_| Error::Parse {
                msg: format!("`{value}` is not an integer"),
                offset,
            })?;
            match key {
                "p" => p = Some(value),
                "n" => n = Some(value as u32),
                "modulus" => modulus_enc = Some(value),
                _ => {
                    return Err(Error::Parse {
                        msg: format!("unknown field key `{key}`"),
                        offset,
                    })
                }
            }
        }
        let p = p.ok_or_else(|| Error::Parse { msg: "missing p=".into(), offset: 0 })?;
        let n = n.ok_or_else(|| Error::Parse { msg: "missing n=".into(), offset: 0 })?;
        let modulus = match modulus_enc {
            Some(enc) => {
                if p < 2 {
                    return Err(Error::InvalidField("p must be at least 2".into()));
                }
                let mut digits = Vec::with_capacity(n as usize + 1);
                let mut v = enc;
                while v > 0 {
                    digits.push(v % p);
                    v /= p;
                }
                Some(digits)
            }
            None => None,
        };
        FieldSpec::new(p, n, modulus)
    }

    /// Base-`p` digit encoding of the modulus polynomial.
    pub fn modulus_encoding(&self) -> u64 {
        self.modulus.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.n)
    }

    fn validate(&self) -> Result<()> {
        if !is_prime(self.p) {
            return Err(Error::InvalidField(format!("p={} is not prime", self.p)));
        }
        if self.p >= 1 << 16 {
            return Err(Error::InvalidField("p must be below 2^16".into()));
        }
        if self.n < 1 {
            return Err(Error::InvalidField("n must be at least 1".into()));
        }
        let q = self
            .p
            .checked_pow(self.n)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| {
                Error::InvalidField(format!(
                    "p^n exceeds supported desk scale {MAX_FIELD_ORDER}"
                ))
            })?;
        debug_assert!(q >= 2);
        if self.modulus.len() != self.n as usize + 1 {
            return Err(Error::InvalidField(format!(
                "modulus has degree {} but n={}",
                self.modulus.len().saturating_sub(1),
                self.n
            )));
        }
        if *self.modulus.last().unwrap() != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        if self.modulus.iter().any(|&d| d >= self.p) {
            return Err(Error::InvalidField("modulus digit out of range".into()));
        }
        Ok(())
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "p={} n={} modulus={}", self.p, self.n, self.modulus_encoding())
    }
}

fn tokens_with_offsets(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - text.as_ptr() as usize, tok))
}

enum TraceTable {
    /// p = 2: absolute trace is the parity of `e & mask`.
    Mask(u64),
    /// Odd p: per-element absolute trace digit.
    Table(Vec<u16>),
}

/// A constructed field: validated spec plus multiplication tables.
pub struct Field {
    spec: FieldSpec,
    q: u64,
    generator: Elem,
    exp: Vec<u64>,
    log: Vec<u32>,
    order_factors: Vec<u64>,
    trace: TraceTable,
    /// p = 2 only: `mu_basis[j]` is the mask with bits `Tr(x^j * x^i)`,
    /// so that `Tr(a*b) = parity(mu_mask(a) & b)`.
    mu_basis: Vec<u64>,
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field> {
        spec.validate()?;
        let p = spec.p;
        let n = spec.n;
        let q = spec.order();
        if !poly::is_irreducible(p, &spec.modulus) {
            return Err(Error::InvalidField(format!(
                "modulus {} is reducible over F_{p}",
                spec.modulus_encoding()
            )));
        }

        let order_factors = distinct_prime_factors(q - 1);
        let generator = poly::find_generator(p, &spec.modulus, q, &order_factors);

        // exp/log tables; exp is doubled so `exp[log a + log b]` needs no mod.
        let mut exp = vec![0u64; 2 * (q - 1) as usize];
        let mut log = vec![u32::MAX; q as usize];
        let gen_digits = poly::decode(p, n, generator);
        let mut cur = poly::decode(p, n, 1);
        for i in 0..(q - 1) as usize {
            let enc = poly::encode(p, &cur);
            exp[i] = enc;
            exp[i + (q - 1) as usize] = enc;
            log[enc as usize] = i as u32;
            cur = poly::mul_mod(p, &spec.modulus, &cur, &gen_digits);
        }
        debug_assert_eq!(poly::encode(p, &cur), 1);

        let mut field = Field {
            spec,
            q,
            generator,
            exp,
            log,
            order_factors,
            trace: TraceTable::Mask(0),
            mu_basis: Vec::new(),
        };
        field.build_trace_tables();
        Ok(field)
    }

    pub fn from_spec_str(text: &str) -> Result<Field> {
        Field::new(FieldSpec::parse(text)?)
    }

    fn build_trace_tables(&mut self) {
        let p = self.spec.p;
        let n = self.spec.n;
        // Trace of the basis monomials x^j, each a digit in [0, p).
        let basis_traces: Vec<u64> = (0..n)
            .map(|j| {
                let e = p.pow(j);
                (0..n).fold(0, |acc, i| self.add(acc, self.frobenius(e, i)))
            })
            .collect();
        if p == 2 {
            let mask = basis_traces
                .iter()
                .enumerate()
                .fold(0u64, |m, (j, &t)| m | (t << j));
            self.trace = TraceTable::Mask(mask);
            self.mu_basis = (0..n)
                .map(|j| {
                    (0..n).fold(0u64, |m, i| {
                        let t = self.abs_trace_slow(self.mul(1 << j, 1 << i));
                        m | (t << i)
                    })
                })
                .collect();
        } else {
            let mut table = vec![0u16; self.q as usize];
            for e in 0..self.q {
                let mut acc = 0u64;
                let mut v = e;
                let mut j = 0;
                while v != 0 {
                    acc = (acc + (v % p) * basis_traces[j]) % p;
                    v /= p;
                    j += 1;
                }
                table[e as usize] = acc as u16;
            }
            self.trace = TraceTable::Table(table);
        }
    }

    fn abs_trace_slow(&self, e: Elem) -> u64 {
        (0..self.spec.n).fold(0, |acc, i| self.add(acc, self.frobenius(e, i)))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn p(&self) -> u64 {
        self.spec.p
    }

    pub fn n(&self) -> u32 {
        self.spec.n
    }

    /// Field order `p^n`.
    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.q
    }

    pub fn check(&self, e: u64) -> Result<Elem> {
        if e < self.q {
            Ok(e)
        } else {
            Err(Error::InvalidElement { value: e, order: self.q })
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a < self.q && b < self.q);
        let p = self.spec.p;
        if p == 2 {
            return a ^ b;
        }
        let mut out = 0;
        let mut place = 1;
        let (mut x, mut y) = (a, b);
        while x != 0 || y != 0 {
            out += ((x % p + y % p) % p) * place;
            place *= p;
            x /= p;
            y /= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        debug_assert!(a < self.q);
        let p = self.spec.p;
        if p == 2 {
            return a;
        }
        let mut out = 0;
        let mut place = 1;
        let mut x = a;
        while x != 0 {
            out += ((p - x % p) % p) * place;
            place *= p;
            x /= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        if self.spec.p == 2 {
            a ^ b
        } else {
            self.add(a, self.neg(b))
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a < self.q && b < self.q);
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        debug_assert!(a < self.q);
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let qm1 = (self.q - 1) as usize;
        Ok(self.exp[(qm1 - self.log[a as usize] as usize) % qm1])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `e^k` for a non-negative integer exponent; `pow(0, 0) = 1`.
    #[inline]
    pub fn pow(&self, e: Elem, k: u64) -> Elem {
        debug_assert!(e < self.q);
        if e == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        let qm1 = self.q - 1;
        let idx = (self.log[e as usize] as u128 * (k % qm1) as u128) % qm1 as u128;
        self.exp[idx as usize]
    }

    /// `e^{p^i}`; the exponent `i` is taken mod `n` since Frobenius has
    /// order `n`.
    #[inline]
    pub fn frobenius(&self, e: Elem, i: u32) -> Elem {
        let i = i % self.spec.n;
        self.pow(e, pow_mod(self.spec.p, i as u64, self.q - 1))
    }

    /// Absolute trace `Tr^n_1(e)`, a value in `[0, p)`.
    #[inline]
    pub fn abs_trace(&self, e: Elem) -> Elem {
        match &self.trace {
            TraceTable::Mask(mask) => ((e & mask).count_ones() & 1) as u64,
            TraceTable::Table(t) => t[e as usize] as u64,
        }
    }

    /// Relative trace `Tr^n_m(e)` into the subfield `F_{p^m}`, `m | n`.
    pub fn trace_to(&self, e: Elem, m: u32) -> Result<Elem> {
        let n = self.spec.n;
        if m == 0 || !n.is_multiple_of(m) {
            return Err(Error::Argument(format!("m={m} does not divide n={n}")));
        }
        Ok((0..n / m).fold(0, |acc, i| self.add(acc, self.frobenius(e, m * i))))
    }

    /// True when `e` lies in the subfield `F_{p^m}` (i.e. is fixed by the
    /// `m`-th Frobenius power).
    pub fn in_subfield(&self, e: Elem, m: u32) -> bool {
        self.frobenius(e, m) == e
    }

    pub fn multiplicative_order(&self, e: Elem) -> Result<u64> {
        if e == 0 {
            return Err(Error::Argument("order of zero is undefined".into()));
        }
        let mut t = self.q - 1;
        for &f in &self.order_factors {
            while t.is_multiple_of(f) && self.pow(e, t / f) == 1 {
                t /= f;
            }
        }
        Ok(t)
    }

    /// Residue class of `x` modulo the field's modulus polynomial.
    pub fn x_class(&self) -> Elem {
        if self.spec.n == 1 {
            (self.spec.p - self.spec.modulus[0]) % self.spec.p
        } else {
            self.spec.p
        }
    }

    /// True when the residue class of `x` generates the multiplicative group.
    pub fn is_primitive_modulus(&self) -> bool {
        self.q == 2 || self.multiplicative_order(self.x_class()).unwrap() == self.q - 1
    }

    pub fn digits(&self, e: Elem) -> Vec<u64> {
        poly::decode(self.spec.p, self.spec.n, e)
    }

    pub fn from_digits(&self, digits: &[u64]) -> Result<Elem> {
        if digits.len() > self.spec.n as usize || digits.iter().any(|&d| d >= self.spec.p) {
            return Err(Error::Argument("digit vector out of range".into()));
        }
        Ok(digits.iter().rev().fold(0, |acc, &d| acc * self.spec.p + d))
    }

    /// Mask `mu(a)` with `Tr(a*b) = parity(mu(a) & b)`. Binary fields only.
    #[inline]
    pub fn mu_mask(&self, a: Elem) -> u64 {
        debug_assert_eq!(self.spec.p, 2, "mu_mask is a binary-field device");
        let mut m = 0;
        let mut v = a;
        while v != 0 {
            let j = v.trailing_zeros() as usize;
            m ^= self.mu_basis[j];
            v &= v - 1;
        }
        m
    }

    /// Renders an element as a polynomial in `x`, e.g. `x^3+x+1`.
    pub fn pretty(&self, e: Elem) -> String {
        if e == 0 {
            return "0".into();
        }
        let digits = self.digits(e);
        let mut terms: Vec<String> = Vec::new();
        for (i, &d) in digits.iter().enumerate().rev() {
            if d == 0 {
                continue;
            }
            let coeff = if d == 1 && i > 0 { String::new() } else { d.to_string() };
            let var = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            let sep = if !coeff.is_empty() && !var.is_empty() { "*" } else { "" };
            terms.push(format!("{coeff}{sep}{var}"));
        }
        terms.join("+")
    }

    /// All roots of the linearized trinomial `x^{p^k} - a*x - b`, together
    /// with their count.
    ///
    /// The returned roots come from exhaustive enumeration; the closed-form
    /// classification (norm/trace data of the trinomial) is computed
    /// alongside and any disagreement is a hard error rather than a wrong
    /// answer. `a = 0` bypasses the closed form: `x = b^{p^{n-k}}` is the
    /// unique `p^k`-th root.
    pub fn linearized_trinomial_roots(&self, k: u32, a: Elem, b: Elem) -> Result<(u64, Vec<Elem>)> {
        let n = self.spec.n;
        if k == 0 || k >= n {
            return Err(Error::Argument(format!("k={k} must satisfy 1 <= k <= n-1")));
        }
        self.check(a)?;
        self.check(b)?;

        let roots: Vec<Elem> = self
            .elements()
            .filter(|&x| self.sub(self.sub(self.frobenius(x, k), self.mul(a, x)), b) == 0)
            .collect();

        let expected: (u64, Option<Elem>) = if a == 0 {
            (1, Some(self.frobenius(b, n - k)))
        } else {
            let t = gcd(n as u64, k as u64) as u32;
            let m = n / t;
            // alpha_{m-1} = prod_j a^{p^{kj}} is the norm of `a` relative to
            // the Frobenius power x -> x^{p^k}; beta_{m-1} collects the
            // twisted sums of `b`.
            let mut suffix = vec![1u64; m as usize + 1];
            for i in (0..m).rev() {
                suffix[i as usize] =
                    self.mul(self.frobenius(a, k * i), suffix[i as usize + 1]);
            }
            let alpha = suffix[0];
            let beta = (0..m).fold(0, |acc, i| {
                self.add(acc, self.mul(self.frobenius(b, k * i), suffix[i as usize + 1]))
            });
            if alpha != 1 {
                let root = self.div(beta, self.sub(1, alpha))?;
                (1, Some(root))
            } else if beta != 0 {
                (0, None)
            } else {
                (self.spec.p.pow(t), None)
            }
        };

        if roots.len() as u64 != expected.0 {
            return Err(Error::ClosedFormMismatch(format!(
                "k={k} a={a} b={b}: closed form predicts {} roots, enumeration found {}",
                expected.0,
                roots.len()
            )));
        }
        if let Some(root) = expected.1 {
            if roots != [root] {
                return Err(Error::ClosedFormMismatch(format!(
                    "k={k} a={a} b={b}: closed form predicts root {root}, enumeration found {roots:?}"
                )));
            }
        }
        Ok((roots.len() as u64, roots))
    }
}

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Field({})", self.spec)
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn distinct_prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

pub(crate) fn pow_mod(base: u64, exp: u64, modulus: u64) -> u64 {
    let mut result = 1u128;
    let mut base = base as u128 % modulus as u128;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % modulus as u128;
        }
        base = base * base % modulus as u128;
        exp >>= 1;
    }
    result as u64
}

/// Digit-vector polynomial arithmetic used only during field construction
/// and validation. Runtime arithmetic goes through the log/exp tables.
mod poly {
    pub(super) fn decode(p: u64, n: u32, e: u64) -> Vec<u64> {
        let mut digits = vec![0u64; n as usize];
        let mut v = e;
        for d in digits.iter_mut() {
            *d = v % p;
            v /= p;
        }
        digits
    }

    pub(super) fn encode(p: u64, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * p + d)
    }

    /// Schoolbook product of two length-n digit vectors, reduced by the
    /// monic modulus.
    pub(super) fn mul_mod(p: u64, modulus: &[u64], a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = modulus.len() - 1;
        let mut prod = vec![0u64; 2 * n];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % p;
            }
        }
        // reduce x^{n+k} by the modulus, top down
        for i in (n..2 * n).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &mj) in modulus.iter().enumerate().take(n) {
                let idx = i - n + j;
                prod[idx] = (prod[idx] + c * (p - mj) % p) % p;
            }
        }
        prod.truncate(n);
        prod
    }

    fn pow_mod_poly(p: u64, modulus: &[u64], base: &[u64], mut e: u64) -> Vec<u64> {
        let n = modulus.len() - 1;
        let mut result = vec![0u64; n];
        result[0] = 1;
        let mut base = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = mul_mod(p, modulus, &result, &base);
            }
            base = mul_mod(p, modulus, &base, &base);
            e >>= 1;
        }
        result
    }

    /// Remainder of `dividend` by a monic `divisor`, both dense digit
    /// vectors (may carry leading zeros).
    fn rem(p: u64, dividend: &[u64], divisor: &[u64]) -> Vec<u64> {
        let dd = match divisor.iter().rposition(|&d| d != 0) {
            Some(d) => d,
            None => return dividend.to_vec(),
        };
        debug_assert_eq!(divisor[dd], 1);
        let mut r = dividend.to_vec();
        for i in (dd..r.len()).rev() {
            let c = r[i];
            if c == 0 {
                continue;
            }
            r[i] = 0;
            for j in 0..dd {
                r[i - dd + j] = (r[i - dd + j] + c * (p - divisor[j]) % p) % p;
            }
        }
        r.truncate(dd);
        r
    }

    /// Exhaustive irreducibility test: no monic divisor of degree
    /// `1..=n/2` divides the modulus.
    pub(super) fn is_irreducible(p: u64, modulus: &[u64]) -> bool {
        let n = modulus.len() - 1;
        if n == 1 {
            return true;
        }
        for deg in 1..=n / 2 {
            let count = p.pow(deg as u32);
            for low in 0..count {
                let mut divisor = decode(p, deg as u32, low);
                divisor.push(1); // monic
                if rem(p, modulus, &divisor).iter().all(|&d| d == 0) {
                    return false;
                }
            }
        }
        true
    }

    /// Finds a generator of the multiplicative group by testing candidate
    /// encodings against the prime factorization of `q - 1`.
    pub(super) fn find_generator(p: u64, modulus: &[u64], q: u64, factors: &[u64]) -> u64 {
        let n = (modulus.len() - 1) as u32;
        if q == 2 {
            return 1;
        }
        'cand: for g in 2..q {
            let digits = decode(p, n, g);
            for &f in factors {
                let power = pow_mod_poly(p, modulus, &digits, (q - 1) / f);
                if encode(p, &power) == 1 {
                    continue 'cand;
                }
            }
            return g;
        }
        unreachable!("every finite field has a generator");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(text: &str) -> Field {
        Field::from_spec_str(text).unwrap()
    }

    #[test]
    fn gf4_basic_arithmetic() {
        // modulus 1 + x + x^2, encoding 7
        let f = gf("p=2 n=2 modulus=7");
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.pow(2, 3), 1);
        assert_eq!(f.add(2, 3), 1);
    }

    #[test]
    fn gf8_inverse_by_exhaustion() {
        let f = gf("p=2 n=3 modulus=11"); // 1 + x + x^3
        let inv2 = f.elements().find(|&y| f.mul(2, y) == 1).unwrap();
        assert_eq!(inv2, 5);
        assert_eq!(f.inv(2).unwrap(), 5);
        assert!(matches!(f.inv(0), Err(Error::DivisionByZero)));
    }

    #[test]
    fn inverse_and_fermat_hold_everywhere() {
        for spec in ["p=2 n=4", "p=3 n=2", "p=5 n=2", "p=7 n=1"] {
            let f = gf(spec);
            for e in 1..f.order() {
                assert_eq!(f.mul(e, f.inv(e).unwrap()), 1);
                assert_eq!(f.pow(e, f.order() - 1), 1);
            }
        }
    }

    #[test]
    fn trace_examples() {
        let f4 = gf("p=2 n=2 modulus=7");
        assert_eq!(f4.trace_to(2, 1).unwrap(), 1);
        assert_eq!(f4.trace_to(0, 1).unwrap(), 0);
        let f8 = gf("p=2 n=3 modulus=11");
        assert_eq!(f8.trace_to(1, 1).unwrap(), 1);
        assert!(f8.trace_to(1, 2).is_err());
    }

    #[test]
    fn trace_is_linear_and_surjective() {
        for spec in ["p=2 n=6", "p=3 n=3", "p=5 n=2"] {
            let f = gf(spec);
            let n = f.n();
            for m in (1..=n).filter(|m| n.is_multiple_of(*m)) {
                let mut seen = std::collections::HashSet::new();
                for e in f.elements() {
                    let t = f.trace_to(e, m).unwrap();
                    assert!(f.in_subfield(t, m));
                    seen.insert(t);
                }
                assert_eq!(seen.len() as u64, f.p().pow(m));
                // additivity on a grid
                for a in f.elements().step_by(3) {
                    for b in f.elements().step_by(5) {
                        assert_eq!(
                            f.trace_to(f.add(a, b), m).unwrap(),
                            f.add(f.trace_to(a, m).unwrap(), f.trace_to(b, m).unwrap())
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn orders_and_frobenius() {
        let f4 = gf("p=2 n=2 modulus=7");
        assert_eq!(f4.multiplicative_order(2).unwrap(), 3);
        let f64 = gf("p=2 n=6"); // Conway x^6+x^4+x^3+x+1
        assert_eq!(f64.multiplicative_order(14).unwrap(), 3);
        assert_eq!(f64.multiplicative_order(15).unwrap(), 3);
        for e in f64.elements().step_by(7) {
            assert_eq!(f64.frobenius(e, f64.n()), e);
        }
        assert!(f64.multiplicative_order(0).is_err());
    }

    #[test]
    fn encoding_round_trips() {
        for spec in ["p=2 n=3 modulus=11", "p=3 n=2"] {
            let f = gf(spec);
            for e in f.elements() {
                assert_eq!(f.from_digits(&f.digits(e)).unwrap(), e);
            }
        }
    }

    #[test]
    fn abs_trace_matches_slow_path() {
        for spec in ["p=2 n=6", "p=3 n=3"] {
            let f = gf(spec);
            for e in f.elements() {
                assert_eq!(f.abs_trace(e), f.abs_trace_slow(e));
            }
        }
    }

    #[test]
    fn mu_mask_realizes_trace_form() {
        let f = gf("p=2 n=5");
        for a in f.elements() {
            for b in f.elements() {
                let lhs = f.abs_trace(f.mul(a, b));
                let rhs = ((f.mu_mask(a) & b).count_ones() & 1) as u64;
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn trinomial_examples() {
        let f4 = gf("p=2 n=2 modulus=7");
        let (count, roots) = f4.linearized_trinomial_roots(1, 1, 0).unwrap();
        assert_eq!(count, 2);
        assert_eq!(roots, vec![0, 1]);
        let (count, _) = f4.linearized_trinomial_roots(1, 1, 2).unwrap();
        assert_eq!(count, 0);

        // GF(9): generator g with g^4 != 1 forces the unique-root branch.
        let f9 = gf("p=3 n=2");
        let g = f9.generator();
        assert_ne!(f9.pow(g, 4), 1);
        for b in f9.elements() {
            let (count, _) = f9.linearized_trinomial_roots(1, g, b).unwrap();
            assert_eq!(count, 1);
        }
    }

    #[test]
    fn trinomial_closed_form_agrees_exhaustively() {
        for spec in ["p=2 n=4", "p=3 n=2"] {
            let f = gf(spec);
            for k in 1..f.n() {
                for a in f.elements() {
                    for b in f.elements() {
                        let (count, roots) = f.linearized_trinomial_roots(k, a, b).unwrap();
                        assert_eq!(count as usize, roots.len());
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_of_linearized_binomial_is_subspace() {
        let f = gf("p=2 n=4");
        for k in 1..f.n() {
            let t = gcd(f.n() as u64, k as u64) as u32;
            for a in f.elements() {
                let (_, roots) = f.linearized_trinomial_roots(k, a, 0).unwrap();
                let set: std::collections::HashSet<Elem> = roots.iter().copied().collect();
                for &x in &roots {
                    for &y in &roots {
                        assert!(set.contains(&f.add(x, y)));
                    }
                    // closed under F_{p^t} scaling
                    for s in f.elements().filter(|&s| f.in_subfield(s, t)) {
                        assert!(set.contains(&f.mul(s, x)));
                    }
                }
            }
        }
    }

    #[test]
    fn spec_validation_rejects_bad_inputs() {
        assert!(FieldSpec::new(4, 2, None).is_err());
        assert!(FieldSpec::new(2, 2, Some(vec![1, 1])).is_err()); // wrong degree
        assert!(FieldSpec::new(2, 2, Some(vec![1, 0, 2])).is_err()); // digit range
        // x^2 + 1 = (x+1)^2 is reducible over F_2
        let spec = FieldSpec::new(2, 2, Some(vec![1, 0, 1])).unwrap();
        assert!(Field::new(spec).is_err());
    }

    #[test]
    fn spec_parse_round_trip() {
        let spec = FieldSpec::parse("p=2 n=6").unwrap();
        assert_eq!(spec.modulus_encoding(), 91);
        let again = FieldSpec::parse(&spec.to_string()).unwrap();
        assert_eq!(spec, again);
        assert!(FieldSpec::parse("p=2 q=6").is_err());
        assert!(FieldSpec::parse("n=6").is_err());
    }
}
