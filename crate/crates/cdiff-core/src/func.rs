//! Function representations over `F_{p^n}` and the plumbing between them.
//!
//! Analysis modules consume lookup tables; the structured representations
//! (monomial, univariate, DO quadratic, linearized/affine maps) exist for
//! parsing, exactness and the quadratic machinery that needs coefficients
//! symbolically.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::par::*;

/// Total lookup table, indexed by input encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lut {
    pub values: Vec<Elem>,
}

impl Lut {
    pub fn from_fn(field: &Field, f: impl Fn(Elem) -> Elem + Send + Sync) -> Lut {
        let values = (0..field.order())
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(f)
            .collect();
        Lut { values }
    }

    pub fn identity(field: &Field) -> Lut {
        Lut { values: field.elements().collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn get(&self, x: Elem) -> Elem {
        self.values[x as usize]
    }

    /// First collision `(x1, x2)` with `F(x1) = F(x2)`, if any.
    pub fn collision(&self) -> Option<(Elem, Elem, Elem)> {
        let mut first_preimage = vec![u64::MAX; self.values.len()];
        for (x, &y) in self.values.iter().enumerate() {
            let slot = &mut first_preimage[y as usize];
            if *slot != u64::MAX {
                return Some((*slot, x as u64, y));
            }
            *slot = x as u64;
        }
        None
    }

    pub fn is_permutation(&self) -> bool {
        self.collision().is_none()
    }

    pub fn invert(&self) -> Result<Lut> {
        if let Some((x1, x2, value)) = self.collision() {
            return Err(Error::NotPermutation { x1, x2, value });
        }
        let mut inv = vec![0u64; self.values.len()];
        for (x, &y) in self.values.iter().enumerate() {
            inv[y as usize] = x as u64;
        }
        Ok(Lut { values: inv })
    }

    /// `self ∘ inner`, i.e. `x -> self(inner(x))`.
    pub fn compose(&self, inner: &Lut) -> Lut {
        Lut { values: inner.values.iter().map(|&y| self.get(y)).collect() }
    }
}

/// Reduces an exponent into `[1, q-1]` (0 stays 0). Extensional on all of
/// the field: `x^e = x^red(e)` including at `x = 0` since `red(e) >= 1`
/// whenever `e >= 1`.
pub fn reduce_exponent(field: &Field, e: u64) -> u64 {
    if e == 0 {
        0
    } else {
        1 + (e - 1) % (field.order() - 1)
    }
}

/// A function in one of four representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FnRepr {
    Lut(Vec<Elem>),
    Monomial { coeff: Elem, exponent: u64 },
    Univariate { coeffs: BTreeMap<u64, Elem> },
    DoQuadratic {
        /// `(i, j, a_ij)` with `i < j`, the coefficient of `x^{p^i + p^j}`.
        quad: Vec<(u32, u32, Elem)>,
        /// `(i, c_i)`, the coefficient of `x^{p^i}`.
        linear: Vec<(u32, Elem)>,
        constant: Elem,
    },
}

impl FnRepr {
    pub fn monomial(coeff: Elem, exponent: u64) -> FnRepr {
        FnRepr::Monomial { coeff, exponent }
    }

    pub fn evaluate(&self, field: &Field, x: Elem) -> Elem {
        match self {
            FnRepr::Lut(values) => values[x as usize],
            FnRepr::Monomial { coeff, exponent } => field.mul(*coeff, field.pow(x, *exponent)),
            FnRepr::Univariate { coeffs } => coeffs.iter().fold(0, |acc, (&e, &c)| {
                field.add(acc, field.mul(c, field.pow(x, e)))
            }),
            FnRepr::DoQuadratic { quad, linear, constant } => {
                let mut acc = *constant;
                for &(i, j, c) in quad {
                    let term = field.mul(field.frobenius(x, i), field.frobenius(x, j));
                    acc = field.add(acc, field.mul(c, term));
                }
                for &(i, c) in linear {
                    acc = field.add(acc, field.mul(c, field.frobenius(x, i)));
                }
                acc
            }
        }
    }

    pub fn to_lut(&self, field: &Field) -> Lut {
        match self {
            FnRepr::Lut(values) => Lut { values: values.clone() },
            _ => Lut::from_fn(field, |x| self.evaluate(field, x)),
        }
    }

    /// Expands a DO quadratic into its univariate form; other variants are
    /// returned unchanged.
    pub fn to_univariate(&self, field: &Field) -> FnRepr {
        match self {
            FnRepr::DoQuadratic { quad, linear, constant } => {
                let p = field.p();
                let mut coeffs: BTreeMap<u64, Elem> = BTreeMap::new();
                let mut push = |e: u64, c: Elem| {
                    if c != 0 {
                        let e = reduce_exponent(field, e);
                        let entry = coeffs.entry(e).or_insert(0);
                        *entry = field.add(*entry, c);
                        if *entry == 0 {
                            coeffs.remove(&e);
                        }
                    }
                };
                for &(i, j, c) in quad {
                    push(p.pow(i) + p.pow(j), c);
                }
                for &(i, c) in linear {
                    push(p.pow(i), c);
                }
                push(0, *constant);
                FnRepr::Univariate { coeffs }
            }
            other => other.clone(),
        }
    }

    /// True when every univariate coefficient lies in the prime field;
    /// the Frobenius-invariance audits key off this.
    pub fn coeffs_in_prime_field(&self, field: &Field) -> bool {
        match self {
            FnRepr::Lut(_) => false,
            FnRepr::Monomial { coeff, .. } => *coeff < field.p(),
            FnRepr::Univariate { coeffs } => coeffs.values().all(|&c| c < field.p()),
            FnRepr::DoQuadratic { .. } => match self.to_univariate(field) {
                FnRepr::Univariate { coeffs } => coeffs.values().all(|&c| c < field.p()),
                _ => unreachable!(),
            },
        }
    }

    pub fn validate(&self, field: &Field) -> Result<()> {
        let q = field.order();
        match self {
            FnRepr::Lut(values) => {
                if values.len() as u64 != q {
                    return Err(Error::Argument(format!(
                        "lut has {} entries, field order is {q}",
                        values.len()
                    )));
                }
                for &v in values {
                    field.check(v)?;
                }
            }
            FnRepr::Monomial { coeff, exponent } => {
                field.check(*coeff)?;
                if *exponent == 0 || *exponent > q - 1 {
                    return Err(Error::Argument(format!(
                        "monomial exponent {exponent} outside [1, {}]",
                        q - 1
                    )));
                }
            }
            FnRepr::Univariate { coeffs } => {
                for (&e, &c) in coeffs {
                    field.check(c)?;
                    if e > q - 1 {
                        return Err(Error::Argument(format!("exponent {e} not reduced")));
                    }
                }
            }
            FnRepr::DoQuadratic { quad, linear, constant } => {
                for &(i, j, c) in quad {
                    field.check(c)?;
                    if i >= j || j >= field.n() {
                        return Err(Error::Argument(format!(
                            "quadratic index ({i},{j}) must satisfy i < j < n"
                        )));
                    }
                }
                for &(i, c) in linear {
                    field.check(c)?;
                    if i >= field.n() {
                        return Err(Error::Argument(format!("linear index {i} out of range")));
                    }
                }
                field.check(*constant)?;
            }
        }
        Ok(())
    }

    /// Canonical textual form (the parse grammar's output mirror).
    pub fn format(&self) -> String {
        match self {
            FnRepr::Lut(values) => {
                let vals: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                format!("lut {}", vals.join(" "))
            }
            FnRepr::Monomial { coeff, exponent } => format!("mono a={coeff} d={exponent}"),
            FnRepr::Univariate { coeffs } => {
                let terms: Vec<String> =
                    coeffs.iter().map(|(e, c)| format!("{e}:{c}")).collect();
                format!("poly {}", terms.join(" "))
            }
            FnRepr::DoQuadratic { quad, linear, constant } => {
                let mut parts = vec!["do".to_string()];
                for &(i, j, c) in quad {
                    parts.push(format!("q:{i},{j}:{c}"));
                }
                for &(i, c) in linear {
                    parts.push(format!("l:{i}:{c}"));
                }
                if *constant != 0 {
                    parts.push(format!("c:{constant}"));
                }
                parts.join(" ")
            }
        }
    }
}

impl std::fmt::Display for FnRepr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.format())
    }
}

/// `alpha * F`, keeping the representation's shape.
pub fn scalar_mul(field: &Field, alpha: Elem, f: &FnRepr) -> FnRepr {
    match f {
        FnRepr::Lut(values) => {
            FnRepr::Lut(values.iter().map(|&v| field.mul(alpha, v)).collect())
        }
        FnRepr::Monomial { coeff, exponent } => FnRepr::Monomial {
            coeff: field.mul(alpha, *coeff),
            exponent: *exponent,
        },
        FnRepr::Univariate { coeffs } => FnRepr::Univariate {
            coeffs: coeffs
                .iter()
                .filter_map(|(&e, &c)| {
                    let c = field.mul(alpha, c);
                    (c != 0).then_some((e, c))
                })
                .collect(),
        },
        FnRepr::DoQuadratic { quad, linear, constant } => FnRepr::DoQuadratic {
            quad: quad.iter().map(|&(i, j, c)| (i, j, field.mul(alpha, c))).collect(),
            linear: linear.iter().map(|&(i, c)| (i, field.mul(alpha, c))).collect(),
            constant: field.mul(alpha, *constant),
        },
    }
}

/// Linearized polynomial `L(x) = sum c_i x^{p^i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearizedPoly {
    /// `(i, c_i)` pairs, sorted by `i`, zero coefficients dropped.
    pub coeffs: Vec<(u32, Elem)>,
}

impl LinearizedPoly {
    pub fn new(mut coeffs: Vec<(u32, Elem)>) -> LinearizedPoly {
        coeffs.retain(|&(_, c)| c != 0);
        coeffs.sort_by_key(|&(i, _)| i);
        LinearizedPoly { coeffs }
    }

    pub fn evaluate(&self, field: &Field, x: Elem) -> Elem {
        self.coeffs.iter().fold(0, |acc, &(i, c)| {
            field.add(acc, field.mul(c, field.frobenius(x, i)))
        })
    }

    pub fn to_lut(&self, field: &Field) -> Lut {
        Lut::from_fn(field, |x| self.evaluate(field, x))
    }

    pub fn is_permutation(&self, field: &Field) -> bool {
        self.to_lut(field).is_permutation()
    }

    pub fn format(&self) -> String {
        let terms: Vec<String> =
            self.coeffs.iter().map(|(i, c)| format!("{i}:{c}")).collect();
        format!("lin {}", terms.join(" "))
    }
}

/// Affine map `A(x) = L(x) + gamma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub linear: LinearizedPoly,
    pub translation: Elem,
}

impl AffineMap {
    pub fn new(linear: LinearizedPoly, translation: Elem) -> AffineMap {
        AffineMap { linear, translation }
    }

    pub fn identity() -> AffineMap {
        AffineMap::new(LinearizedPoly::new(vec![(0, 1)]), 0)
    }

    pub fn evaluate(&self, field: &Field, x: Elem) -> Elem {
        field.add(self.linear.evaluate(field, x), self.translation)
    }

    pub fn to_lut(&self, field: &Field) -> Lut {
        Lut::from_fn(field, |x| self.evaluate(field, x))
    }

    pub fn is_permutation(&self, field: &Field) -> bool {
        self.linear.is_permutation(field)
    }

    /// Parses `lin <i>:<coeff> ... [+g:<coeff>]`.
    pub fn parse(field: &Field, text: &str) -> Result<AffineMap> {
        let mut tokens = tokens_with_offsets(text);
        match tokens.next() {
            Some((_, "lin")) => {}
            Some((offset, tok)) => {
                return Err(Error::Parse { msg: format!("expected `lin`, got `{tok}`"), offset })
            }
            None => return Err(Error::Parse { msg: "empty linear-map spec".into(), offset: 0 }),
        }
        let mut coeffs: Vec<(u32, Elem)> = Vec::new();
        let mut translation = 0;
        for (offset, tok) in tokens {
            if let Some(g) = tok.strip_prefix("+g:") {
                translation = field.check(parse_int(g, offset)?)?;
                continue;
            }
            let (i, c) = tok.split_once(':').ok_or_else(|| Error::Parse {
                msg: format!("expected <i>:<coeff>, got `{tok}`"),
                offset,
            })?;
            let i = parse_int(i, offset)? as u32;
            if i >= field.n() {
                return Err(Error::Parse {
                    msg: format!("Frobenius index {i} out of range (n={})", field.n()),
                    offset,
                });
            }
            let c = field.check(parse_int(c, offset)?)?;
            coeffs.push((i, c));
        }
        Ok(AffineMap::new(LinearizedPoly::new(coeffs), translation))
    }

    pub fn format(&self) -> String {
        let mut s = self.linear.format();
        if self.translation != 0 {
            s.push_str(&format!(" +g:{}", self.translation));
        }
        s
    }
}

/// `A1(F(A2(x))) + A3(x)` pointwise; `A1` and `A2` must be affine
/// permutations.
pub fn affine_sandwich(
    field: &Field,
    a1: &AffineMap,
    f: &Lut,
    a2: &AffineMap,
    a3: &AffineMap,
) -> Result<Lut> {
    if !a1.is_permutation(field) {
        return Err(Error::Argument("A1 is not an affine permutation".into()));
    }
    if !a2.is_permutation(field) {
        return Err(Error::Argument("A2 is not an affine permutation".into()));
    }
    Ok(Lut::from_fn(field, |x| {
        let inner = f.get(a2.evaluate(field, x));
        field.add(a1.evaluate(field, inner), a3.evaluate(field, x))
    }))
}

fn parse_int(text: &str, offset: usize) -> Result<u64> {
    text.parse().map_err(|_| Error::Parse {
        msg: format!("`{text}` is not an integer"),
        offset,
    })
}

fn tokens_with_offsets(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - text.as_ptr() as usize, tok))
}

/// Parses the one-line function grammar. Returns the representation plus
/// any normalization warnings (e.g. out-of-range exponents reduced mod
/// `p^n - 1`); nothing is silently rewritten.
pub fn parse_function(field: &Field, text: &str) -> Result<(FnRepr, Vec<String>)> {
    let mut warnings = Vec::new();
    let mut tokens = tokens_with_offsets(text);
    let (offset, kind) = tokens
        .next()
        .ok_or_else(|| Error::Parse { msg: "empty function spec".into(), offset: 0 })?;
    let q = field.order();
    let repr = match kind {
        "mono" => {
            let mut coeff = 1;
            let mut exponent = None;
            for (offset, tok) in tokens {
                let (key, value) = tok.split_once('=').ok_or_else(|| Error::Parse {
                    msg: format!("expected key=value, got `{tok}`"),
                    offset,
                })?;
                match key {
                    "a" => coeff = field.check(parse_int(value, offset)?)?,
                    "d" => exponent = Some(parse_int(value, offset)?),
                    _ => {
                        return Err(Error::Parse {
                            msg: format!("unknown monomial key `{key}`"),
                            offset,
                        })
                    }
                }
            }
            let exponent =
                exponent.ok_or_else(|| Error::Parse { msg: "missing d=".into(), offset })?;
            if exponent == 0 {
                return Err(Error::Parse {
                    msg: "monomial exponent must be at least 1".into(),
                    offset,
                });
            }
            let reduced = reduce_exponent(field, exponent);
            if reduced != exponent {
                warnings.push(format!("exponent {exponent} reduced to {reduced} (x^{q} = x)"));
            }
            FnRepr::Monomial { coeff, exponent: reduced }
        }
        "poly" => {
            let mut coeffs: BTreeMap<u64, Elem> = BTreeMap::new();
            for (offset, tok) in tokens {
                let (e, c) = tok.split_once(':').ok_or_else(|| Error::Parse {
                    msg: format!("expected <exp>:<coeff>, got `{tok}`"),
                    offset,
                })?;
                let e_raw = parse_int(e, offset)?;
                let e = reduce_exponent(field, e_raw);
                if e != e_raw {
                    warnings.push(format!("exponent {e_raw} reduced to {e}"));
                }
                let c = field.check(parse_int(c, offset)?)?;
                let entry = coeffs.entry(e).or_insert(0);
                *entry = field.add(*entry, c);
                if *entry == 0 {
                    coeffs.remove(&e);
                }
            }
            FnRepr::Univariate { coeffs }
        }
        "do" => {
            let mut quad: BTreeMap<(u32, u32), Elem> = BTreeMap::new();
            let mut linear: BTreeMap<u32, Elem> = BTreeMap::new();
            let mut constant: Option<Elem> = None;
            for (offset, tok) in tokens {
                if let Some(rest) = tok.strip_prefix("q:") {
                    let (ij, c) = rest.rsplit_once(':').ok_or_else(|| Error::Parse {
                        msg: format!("expected q:<i>,<j>:<coeff>, got `{tok}`"),
                        offset,
                    })?;
                    let (i, j) = ij.split_once(',').ok_or_else(|| Error::Parse {
                        msg: format!("expected q:<i>,<j>:<coeff>, got `{tok}`"),
                        offset,
                    })?;
                    let i = parse_int(i, offset)? as u32;
                    let j = parse_int(j, offset)? as u32;
                    if i >= j || j >= field.n() {
                        return Err(Error::Parse {
                            msg: format!("quadratic indices ({i},{j}) must satisfy i < j < n"),
                            offset,
                        });
                    }
                    let c = field.check(parse_int(c, offset)?)?;
                    let entry = quad.entry((i, j)).or_insert(0);
                    *entry = field.add(*entry, c);
                } else if let Some(rest) = tok.strip_prefix("l:") {
                    let (i, c) = rest.split_once(':').ok_or_else(|| Error::Parse {
                        msg: format!("expected l:<i>:<coeff>, got `{tok}`"),
                        offset,
                    })?;
                    let i = parse_int(i, offset)? as u32;
                    if i >= field.n() {
                        return Err(Error::Parse {
                            msg: format!("linear index {i} out of range (n={})", field.n()),
                            offset,
                        });
                    }
                    let c = field.check(parse_int(c, offset)?)?;
                    let entry = linear.entry(i).or_insert(0);
                    *entry = field.add(*entry, c);
                } else if let Some(c) = tok.strip_prefix("c:") {
                    if constant.is_some() {
                        return Err(Error::Parse {
                            msg: "duplicate constant term".into(),
                            offset,
                        });
                    }
                    constant = Some(field.check(parse_int(c, offset)?)?);
                } else {
                    return Err(Error::Parse {
                        msg: format!("unknown DO item `{tok}`"),
                        offset,
                    });
                }
            }
            FnRepr::DoQuadratic {
                quad: quad
                    .into_iter()
                    .filter(|&(_, c)| c != 0)
                    .map(|((i, j), c)| (i, j, c))
                    .collect(),
                linear: linear.into_iter().filter(|&(_, c)| c != 0).collect(),
                constant: constant.unwrap_or(0),
            }
        }
        "lut" => {
            let mut values = Vec::new();
            for (offset, tok) in tokens {
                values.push(field.check(parse_int(tok, offset)?)?);
            }
            if values.len() as u64 != q {
                return Err(Error::Parse {
                    msg: format!("lut needs {q} entries, got {}", values.len()),
                    offset,
                });
            }
            FnRepr::Lut(values)
        }
        "lutfile" => {
            let (offset, path) = tokens.next().ok_or_else(|| Error::Parse {
                msg: "lutfile needs a path".into(),
                offset,
            })?;
            if tokens.next().is_some() {
                return Err(Error::Parse {
                    msg: "unexpected tokens after lutfile path".into(),
                    offset,
                });
            }
            let contents = std::fs::read_to_string(path)?;
            let mut values = Vec::new();
            for (lineno, line) in contents.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let v: u64 = line.parse().map_err(|_| Error::Parse {
                    msg: format!("{path}:{}: `{line}` is not an integer", lineno + 1),
                    offset,
                })?;
                values.push(field.check(v)?);
            }
            if values.len() as u64 != q {
                return Err(Error::Parse {
                    msg: format!("{path}: lut needs {q} entries, got {}", values.len()),
                    offset,
                });
            }
            FnRepr::Lut(values)
        }
        other => {
            return Err(Error::Parse {
                msg: format!("unknown function kind `{other}`"),
                offset,
            })
        }
    };
    repr.validate(field)?;
    Ok((repr, warnings))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(text: &str) -> Field {
        Field::from_spec_str(text).unwrap()
    }

    #[test]
    fn monomial_evaluation() {
        let f4 = gf("p=2 n=2 modulus=7");
        let cube = FnRepr::monomial(1, 3);
        assert_eq!(cube.evaluate(&f4, 2), 1);
        assert_eq!(cube.evaluate(&f4, 0), 0);
        let f8 = gf("p=2 n=3 modulus=11");
        assert!(FnRepr::monomial(1, 3).to_lut(&f8).is_permutation());
    }

    #[test]
    fn univariate_adds_monomials_pointwise() {
        let f = gf("p=2 n=6");
        let (poly, _) = parse_function(&f, "poly 3:1 5:1").unwrap();
        let m3 = FnRepr::monomial(1, 3).to_lut(&f);
        let m5 = FnRepr::monomial(1, 5).to_lut(&f);
        let sum = Lut::from_fn(&f, |x| f.add(m3.get(x), m5.get(x)));
        assert_eq!(poly.to_lut(&f), sum);
    }

    #[test]
    fn permutation_checks() {
        let f64 = gf("p=2 n=6");
        assert!(FnRepr::monomial(1, 5).to_lut(&f64).is_permutation());
        let f4 = gf("p=2 n=2 modulus=7");
        let cube = FnRepr::monomial(1, 3).to_lut(&f4);
        assert!(!cube.is_permutation());
        let err = cube.invert().unwrap_err();
        assert!(matches!(err, Error::NotPermutation { .. }));
    }

    #[test]
    fn inverse_of_x5_is_x25_over_f32() {
        let f = gf("p=2 n=5");
        let x5 = FnRepr::monomial(1, 5).to_lut(&f);
        let x25 = FnRepr::monomial(1, 25).to_lut(&f);
        assert_eq!(x5.invert().unwrap(), x25);
        assert_eq!(x25.compose(&x5), Lut::identity(&f));
    }

    #[test]
    fn scalar_mul_is_pointwise() {
        let f = gf("p=3 n=2");
        let (poly, _) = parse_function(&f, "poly 1:2 2:1").unwrap();
        for alpha in 1..f.order() {
            let scaled = scalar_mul(&f, alpha, &poly).to_lut(&f);
            let direct = Lut::from_fn(&f, |x| f.mul(alpha, poly.evaluate(&f, x)));
            assert_eq!(scaled, direct);
        }
    }

    #[test]
    fn do_quadratic_matches_univariate_expansion() {
        for spec in ["p=2 n=4", "p=2 n=5"] {
            let f = gf(spec);
            let (dorep, _) = parse_function(&f, "do q:0,1:1 q:0,2:3 l:1:2 c:5").unwrap();
            let expanded = dorep.to_univariate(&f);
            assert_eq!(dorep.to_lut(&f), expanded.to_lut(&f));
        }
    }

    #[test]
    fn x3_as_do_form() {
        let f = gf("p=2 n=5");
        let (dorep, _) = parse_function(&f, "do q:0,1:1").unwrap();
        assert_eq!(dorep.to_lut(&f), FnRepr::monomial(1, 3).to_lut(&f));
    }

    #[test]
    fn parse_examples_round_trip() {
        let f64 = gf("p=2 n=6");
        let f4 = gf("p=2 n=2 modulus=7");
        for (field, text) in
            [(&f64, "mono a=1 d=5"), (&f64, "poly 3:1 5:1"), (&f4, "lut 0 1 3 2")]
        {
            let (repr, warnings) = parse_function(field, text).unwrap();
            assert!(warnings.is_empty(), "{warnings:?}");
            let (again, _) = parse_function(field, &repr.format()).unwrap();
            assert_eq!(repr, again);
        }
        let (lut, _) = parse_function(&f4, "lut 0 1 3 2").unwrap();
        assert_eq!(lut, FnRepr::Lut(vec![0, 1, 3, 2]));
    }

    #[test]
    fn parse_rejects_malformed_specs() {
        let f = gf("p=2 n=2 modulus=7");
        assert!(parse_function(&f, "mono d=0").is_err());
        assert!(parse_function(&f, "mono a=9 d=1").is_err());
        assert!(parse_function(&f, "lut 0 1 2").is_err());
        assert!(parse_function(&f, "wat 1 2").is_err());
        assert!(parse_function(&f, "do q:1,0:1").is_err());
        assert!(AffineMap::parse(&f, "lin 5:1").is_err());
    }

    #[test]
    fn exponent_normalization_warns() {
        let f = gf("p=2 n=2 modulus=7");
        let (repr, warnings) = parse_function(&f, "mono d=7").unwrap();
        assert_eq!(warnings.len(), 1);
        assert_eq!(repr, FnRepr::Monomial { coeff: 1, exponent: 1 });
    }

    #[test]
    fn affine_map_parse_and_sandwich() {
        let f = gf("p=2 n=6");
        let a1 = AffineMap::parse(&f, "lin 2:1 0:9").unwrap();
        assert_eq!(a1.format(), "lin 0:9 2:1");
        assert!(a1.is_permutation(&f));
        let ident = AffineMap::identity();
        let x5 = FnRepr::monomial(1, 5).to_lut(&f);
        let zero = AffineMap::new(LinearizedPoly::new(vec![]), 0);
        let g = affine_sandwich(&f, &a1, &x5, &ident, &zero).unwrap();
        let direct = Lut::from_fn(&f, |x| a1.evaluate(&f, x5.get(x)));
        assert_eq!(g, direct);
    }

    #[test]
    fn lutfile_round_trip() {
        let f = gf("p=2 n=2 modulus=7");
        let dir = std::env::temp_dir().join("cdiff-func-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("perm.lut");
        std::fs::write(&path, "0\n1\n3\n2\n").unwrap();
        let (repr, _) = parse_function(&f, &format!("lutfile {}", path.display())).unwrap();
        assert_eq!(repr, FnRepr::Lut(vec![0, 1, 3, 2]));
    }
}
