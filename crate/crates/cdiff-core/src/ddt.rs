//! Classical and c-difference distribution tables and uniformities.
//!
//! Tables are dense row-major `u32` matrices indexed by element encodings;
//! at desk scale that is cache-friendly and counts stay far below 2^32.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field, FieldSpec};
use crate::func::Lut;
use crate::par::*;

/// Classical DDT: `counts[a][b] = #{x : F(x+a) - F(x) = b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DdTable {
    pub field: FieldSpec,
    pub size: usize,
    pub counts: Vec<u32>,
}

/// cDDT for a fixed `c`: `counts[a][b] = #{x : F(x+a) - c*F(x) = b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdTable {
    pub field: FieldSpec,
    pub c: Elem,
    pub size: usize,
    pub counts: Vec<u32>,
}

/// `delta[c]` is the c-differential uniformity of one function, for every
/// `c` in the field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CSpectrum {
    pub field: FieldSpec,
    pub delta: Vec<u32>,
}

impl CSpectrum {
    pub fn get(&self, c: Elem) -> u32 {
        self.delta[c as usize]
    }

    /// All `c` outside `{0, 1}` with `delta(c, F) = 1`.
    pub fn pcn_values(&self) -> Vec<Elem> {
        self.special_values(1)
    }

    /// All `c` outside `{0, 1}` with `delta(c, F) = 2`.
    pub fn apcn_values(&self) -> Vec<Elem> {
        self.special_values(2)
    }

    fn special_values(&self, target: u32) -> Vec<Elem> {
        self.delta
            .iter()
            .enumerate()
            .filter(|&(c, &d)| c >= 2 && d == target)
            .map(|(c, _)| c as Elem)
            .collect()
    }
}

fn one_row(field: &Field, lut: &Lut, c: Elem, a: Elem) -> Vec<u32> {
    let size = field.order() as usize;
    let mut row = vec![0u32; size];
    for x in field.elements() {
        let b = field.sub(lut.get(field.add(x, a)), field.mul(c, lut.get(x)));
        row[b as usize] += 1;
    }
    row
}

fn table_counts(field: &Field, lut: &Lut, c: Elem) -> Vec<u32> {
    let size = field.order() as usize;
    let rows: Vec<Vec<u32>> = (0..size as u64)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|a| one_row(field, lut, c, a))
        .collect();
    let mut counts = Vec::with_capacity(size * size);
    for row in rows {
        counts.extend_from_slice(&row);
    }
    counts
}

/// Classical DDT, one `O(p^n)` pass per row.
pub fn ddt(field: &Field, lut: &Lut) -> DdTable {
    DdTable {
        field: field.spec().clone(),
        size: field.order() as usize,
        counts: table_counts(field, lut, 1),
    }
}

/// cDDT for a fixed `c`. The `a = 0` row is meaningful for `c != 1`
/// (it tabulates `(1-c)F`).
pub fn cddt(field: &Field, lut: &Lut, c: Elem) -> CdTable {
    CdTable {
        field: field.spec().clone(),
        c,
        size: field.order() as usize,
        counts: table_counts(field, lut, c),
    }
}

pub(crate) fn c_uniformity_serial(
    field: &Field,
    lut: &Lut,
    c: Elem,
    cap: Option<u32>,
) -> Option<u32> {
    let size = field.order() as usize;
    let skip_zero_row = c == 1;
    let mut row = vec![0u32; size];
    let mut max = 0u32;
    for a in field.elements() {
        if skip_zero_row && a == 0 {
            continue;
        }
        row.iter_mut().for_each(|v| *v = 0);
        for x in field.elements() {
            let b = field.sub(lut.get(field.add(x, a)), field.mul(c, lut.get(x)));
            let slot = &mut row[b as usize];
            *slot += 1;
            if *slot > max {
                max = *slot;
                if let Some(cap) = cap {
                    if max > cap {
                        return None;
                    }
                }
            }
        }
    }
    Some(max)
}

/// c-differential uniformity: the cDDT maximum, excluding the `a = 0` row
/// only when `c = 1`.
pub fn c_uniformity(field: &Field, lut: &Lut, c: Elem) -> u32 {
    c_uniformity_serial(field, lut, c, None).unwrap()
}

/// `Some(delta)` when `delta(c,F) <= cap`, `None` once the running max
/// exceeds the cap. Classification callers use this to stop early; exact
/// table dumps never do.
pub fn c_uniformity_at_most(field: &Field, lut: &Lut, c: Elem, cap: u32) -> Option<u32> {
    c_uniformity_serial(field, lut, c, Some(cap))
}

/// `delta(c, F)` for every `c` in the field.
pub fn c_spectrum(field: &Field, lut: &Lut) -> CSpectrum {
    let delta = (0..field.order())
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|c| c_uniformity_serial(field, lut, c, None).unwrap())
        .collect();
    CSpectrum { field: field.spec().clone(), delta }
}

/// Classical differential class at `c = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassicalClass {
    PerfectNonlinear,
    AlmostPerfectNonlinear,
    Uniformity(u32),
}

impl std::fmt::Display for ClassicalClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassicalClass::PerfectNonlinear => write!(f, "PN"),
            ClassicalClass::AlmostPerfectNonlinear => write!(f, "APN"),
            ClassicalClass::Uniformity(k) => write!(f, "uniformity {k}"),
        }
    }
}

pub fn classical_class(field: &Field, lut: &Lut) -> ClassicalClass {
    match c_uniformity(field, lut, 1) {
        1 => ClassicalClass::PerfectNonlinear,
        2 => ClassicalClass::AlmostPerfectNonlinear,
        k => ClassicalClass::Uniformity(k),
    }
}

/// DDT computed through the autocorrelation identity
/// `Delta_F(a,b) = 2^{-n} sum_u (-1)^{Tr(ub)} C_F(a,u)`, with both
/// character sums realized as fast Walsh-Hadamard transforms. Binary
/// fields only; must agree with [`ddt`] bit-exactly.
pub fn ddt_via_autocorrelation(field: &Field, lut: &Lut) -> Result<DdTable> {
    if field.p() != 2 {
        return Err(Error::Unsupported(
            "autocorrelation-route DDT requires p = 2".into(),
        ));
    }
    let size = field.order() as usize;
    let mu: Vec<usize> = field.elements().map(|e| field.mu_mask(e) as usize).collect();
    let rows: Vec<Vec<u32>> = (0..size as u64)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|a| {
            // cnt[y] = #{x : F(x+a) + F(x) = y}
            let mut cnt = vec![0i64; size];
            for x in field.elements() {
                cnt[(lut.get(x ^ a) ^ lut.get(x)) as usize] += 1;
            }
            // autocorrelation row: C(a, u) = FWHT(cnt)[mu(u)]
            crate::spectral::fwht_i64(&mut cnt);
            let c_row: Vec<i64> = (0..size).map(|u| cnt[mu[u]]).collect();
            // back again: Delta(a, b) = FWHT(C(a,.))[mu(b)] / 2^n
            let mut s = c_row;
            crate::spectral::fwht_i64(&mut s);
            (0..size)
                .map(|b| {
                    let v = s[mu[b]];
                    debug_assert!(v >= 0 && v % size as i64 == 0);
                    (v / size as i64) as u32
                })
                .collect()
        })
        .collect();
    let mut counts = Vec::with_capacity(size * size);
    for row in rows {
        counts.extend_from_slice(&row);
    }
    Ok(DdTable { field: field.spec().clone(), size, counts })
}

macro_rules! table_impl {
    ($ty:ty) => {
        impl $ty {
            #[inline]
            pub fn at(&self, a: Elem, b: Elem) -> u32 {
                self.counts[a as usize * self.size + b as usize]
            }

            pub fn row(&self, a: Elem) -> &[u32] {
                let start = a as usize * self.size;
                &self.counts[start..start + self.size]
            }

            /// Max entry under the uniformity convention (`a = 0` excluded
            /// only for the classical table / `c = 1`).
            pub fn uniformity(&self) -> u32 {
                let start = if self.uniformity_skips_zero_row() { self.size } else { 0 };
                self.counts[start..].iter().copied().max().unwrap_or(0)
            }

            /// True when the table belongs to a permutation (all
            /// `counts[a][0] = 0` for `a != 0`).
            pub fn is_permutation_table(&self) -> bool {
                (1..self.size).all(|a| self.counts[a * self.size] == 0)
            }

            /// CSV dump: header row of `b` encodings, then one row per `a`.
            pub fn to_csv(&self) -> String {
                let mut out = String::from("a\\b");
                for b in 0..self.size {
                    out.push_str(&format!(",{b}"));
                }
                out.push('\n');
                for a in 0..self.size {
                    out.push_str(&a.to_string());
                    for b in 0..self.size {
                        out.push_str(&format!(",{}", self.counts[a * self.size + b]));
                    }
                    out.push('\n');
                }
                out
            }
        }
    };
}

table_impl!(DdTable);
table_impl!(CdTable);

impl DdTable {
    fn uniformity_skips_zero_row(&self) -> bool {
        true
    }
}

impl CdTable {
    fn uniformity_skips_zero_row(&self) -> bool {
        self.c == 1
    }
}

/// Parses a table CSV produced by `to_csv`, returning `(size, counts)`.
pub fn counts_from_csv(text: &str) -> Result<(usize, Vec<u32>)> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse { msg: "empty csv".into(), offset: 0 })?;
    let size = header.split(',').count() - 1;
    let mut counts = Vec::with_capacity(size * size);
    for (i, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut cells = line.split(',');
        let a: usize = cells.next().unwrap().parse().map_err(|_| Error::Parse {
            msg: format!("bad row label on line {}", i + 2),
            offset: 0,
        })?;
        if a != i {
            return Err(Error::Parse { msg: format!("row {a} out of order"), offset: 0 });
        }
        for cell in cells {
            let v: u32 = cell.parse().map_err(|_| Error::Parse {
                msg: format!("bad count `{cell}` on line {}", i + 2),
                offset: 0,
            })?;
            counts.push(v);
        }
    }
    if counts.len() != size * size {
        return Err(Error::Parse {
            msg: format!("expected {} counts, got {}", size * size, counts.len()),
            offset: 0,
        });
    }
    Ok((size, counts))
}

/// JSON dump shape shared by the CLI for DDT/cDDT tables.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableDump {
    pub field: FieldSpec,
    pub function: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<Elem>,
    pub rows: Vec<Vec<u32>>,
}

impl TableDump {
    pub fn from_ddt(table: &DdTable, function: String) -> TableDump {
        TableDump {
            field: table.field.clone(),
            function,
            c: None,
            rows: table.counts.chunks(table.size).map(|r| r.to_vec()).collect(),
        }
    }

    pub fn from_cddt(table: &CdTable, function: String) -> TableDump {
        TableDump {
            field: table.field.clone(),
            function,
            c: Some(table.c),
            rows: table.counts.chunks(table.size).map(|r| r.to_vec()).collect(),
        }
    }
}
