//! Command implementations: parse inputs, delegate to the library, format
//! reports in the selected output format.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, bail, Context};
use cdiff_core::{affine, ddt, func, pcn, quadratic, shifts, spectral};
use cdiff_core::{AffineMap, Elem, Field, FnRepr, LinearizedPoly, Lut};
use serde::Serialize;

use crate::Cli;

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum AffineCheck {
    Fp,
    Frobenius,
    Necessary,
    Sufficient,
    ZeroRow,
    Ea,
    Search,
}

pub enum Outcome {
    Clean,
    RefutationFound,
}

pub struct Ctx {
    pub field: Field,
    pub repr: FnRepr,
    pub lut: Lut,
    pub func_text: String,
}

pub fn context(cli: &Cli) -> anyhow::Result<Ctx> {
    let field_text = cli.field.as_deref().ok_or_else(|| anyhow!("--field is required"))?;
    let field = Field::from_spec_str(field_text)?;
    let func_text = cli.func.as_deref().ok_or_else(|| anyhow!("--func is required"))?;
    let (repr, warnings) = func::parse_function(&field, func_text)?;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    let lut = repr.to_lut(&field);
    Ok(Ctx { field, repr, lut, func_text: func_text.to_string() })
}

fn requested_c(cli: &Cli, field: &Field) -> anyhow::Result<Vec<Elem>> {
    if cli.all_c {
        Ok(field.elements().collect())
    } else if cli.c.is_empty() {
        bail!("pass --c <list> or --all-c");
    } else {
        cli.c.iter().map(|&c| Ok(field.check(c)?)).collect()
    }
}

pub fn emit(cli: &Cli, content: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, content)
                .with_context(|| format!("writing {}", path.display()))?;
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn emit_json<T: Serialize>(cli: &Cli, value: &T) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit(cli, &text)
}

fn render_c(cli: &Cli, field: &Field, c: Elem) -> String {
    if cli.pretty {
        format!("{c} ({})", field.pretty(c))
    } else {
        c.to_string()
    }
}

#[derive(Serialize)]
struct AnalyzeEntry {
    c: Elem,
    delta: u32,
    pcn: bool,
    apcn: bool,
}

#[derive(Serialize)]
struct AnalyzeReport {
    field: cdiff_core::FieldSpec,
    function: String,
    is_permutation: bool,
    entries: Vec<AnalyzeEntry>,
    verified: bool,
}

pub fn analyze(cli: &Cli) -> anyhow::Result<Outcome> {
    let ctx = context(cli)?;
    let cs = requested_c(cli, &ctx.field)?;
    let is_permutation = ctx.lut.is_permutation();
    let table = is_permutation.then(|| ddt::ddt(&ctx.field, &ctx.lut));
    let mut entries = Vec::new();
    for &c in &cs {
        let delta = ddt::c_uniformity(&ctx.field, &ctx.lut, c);
        if cli.verify && c >= 2 {
            if let Some(table) = &table {
                let by_ddt = pcn::is_pcn_ddt(&ctx.field, table, c)?;
                let by_naive = pcn::is_pcn_naive(&ctx.field, &ctx.lut, c);
                if by_ddt != (delta == 1) || by_naive != (delta == 1) {
                    return Err(cdiff_core::Error::Refutation(format!(
                        "criterion disagreement at c={c}: ddt={by_ddt} naive={by_naive} delta={delta}"
                    ))
                    .into());
                }
            }
        }
        entries.push(AnalyzeEntry { c, delta, pcn: c >= 2 && delta == 1, apcn: c >= 2 && delta == 2 });
    }
    let report = AnalyzeReport {
        field: ctx.field.spec().clone(),
        function: ctx.func_text.clone(),
        is_permutation,
        entries,
        verified: cli.verify,
    };
    match cli.format {
        Format::Json => emit_json(cli, &report)?,
        Format::Csv => {
            let mut out = String::from("c,delta,pcn,apcn\n");
            for e in &report.entries {
                let _ = writeln!(out, "{},{},{},{}", e.c, e.delta, e.pcn, e.apcn);
            }
            emit(cli, &out)?;
        }
        Format::Text => {
            let mut out = format!(
                "field {} | F = {} | permutation: {}\n",
                ctx.field.spec(),
                ctx.func_text,
                is_permutation
            );
            for e in &report.entries {
                let mut flags = String::new();
                if e.pcn {
                    flags.push_str("  PcN");
                }
                if e.apcn {
                    flags.push_str("  APcN");
                }
                let _ = writeln!(
                    out,
                    "c = {:>6}  delta = {}{}",
                    render_c(cli, &ctx.field, e.c),
                    e.delta,
                    flags
                );
            }
            emit(cli, &out)?;
        }
    }
    Ok(Outcome::Clean)
}

#[derive(Serialize)]
struct EnumerateReport {
    field: cdiff_core::FieldSpec,
    function: String,
    pcn_set: Vec<Elem>,
    apcn_set: Vec<Elem>,
    #[serde(rename = "N_pcn")]
    n_pcn: usize,
    provenance: Vec<String>,
    audits: EnumerateAudits,
}

#[derive(Serialize)]
struct EnumerateAudits {
    apn_pcn: pcn::ApnPcnAudit,
    closure: pcn::ClosureAudit,
    apcn_sum_criterion: pcn::ApcnEnumeration,
}

pub fn enumerate_c(cli: &Cli) -> anyhow::Result<Outcome> {
    let ctx = context(cli)?;
    let report = pcn::pcn_report(&ctx.field, &ctx.lut, cli.verify)?;
    let table = ddt::ddt(&ctx.field, &ctx.lut);
    let audits = EnumerateAudits {
        apn_pcn: pcn::apn_pcn_bound_audit(&ctx.field, &ctx.lut)?,
        closure: pcn::closure_audits(&ctx.field, &ctx.lut)?,
        apcn_sum_criterion: pcn::enumerate_apcn(&ctx.field, &ctx.lut, &table)?,
    };
    let full = EnumerateReport {
        field: ctx.field.spec().clone(),
        function: ctx.func_text.clone(),
        pcn_set: report.pcn_set.clone(),
        apcn_set: report.apcn_set.clone(),
        n_pcn: report.n_pcn,
        provenance: report.provenance,
        audits,
    };
    match cli.format {
        Format::Json => emit_json(cli, &full)?,
        _ => {
            let mut out = format!("field {} | F = {}\n", ctx.field.spec(), ctx.func_text);
            let pcn_rendered: Vec<String> =
                full.pcn_set.iter().map(|&c| render_c(cli, &ctx.field, c)).collect();
            let _ = writeln!(out, "PcN set  ({}): {{{}}}", full.n_pcn, pcn_rendered.join(", "));
            let _ = writeln!(
                out,
                "APcN set ({}): {:?}",
                full.apcn_set.len(),
                full.apcn_set
            );
            let _ = writeln!(out, "classical class: {}", full.audits.apn_pcn.classical);
            let _ = writeln!(
                out,
                "count bound {} satisfied: {}",
                full.audits.apn_pcn.count_bound, full.audits.apn_pcn.count_bound_ok
            );
            if !full.audits.apcn_sum_criterion.false_positives.is_empty()
                || !full.audits.apcn_sum_criterion.false_negatives.is_empty()
            {
                let _ = writeln!(
                    out,
                    "APcN sum-criterion disagreements: +{:?} -{:?}",
                    full.audits.apcn_sum_criterion.false_positives,
                    full.audits.apcn_sum_criterion.false_negatives
                );
            }
            emit(cli, &out)?;
        }
    }
    Ok(Outcome::Clean)
}

#[derive(Serialize)]
struct ShiftJson {
    c: Elem,
    bad_count: usize,
    is_subspace: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    dimension: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<Elem>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trichotomy: Option<shifts::Trichotomy>,
    #[serde(skip_serializing_if = "Option::is_none")]
    complement_basis: Option<Vec<Elem>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation_witness: Option<(Elem, Elem)>,
}

fn shift_json(report: &shifts::ShiftReport) -> ShiftJson {
    match &report.check {
        shifts::SubspaceCheck::Subspace { basis, dimension, trichotomy, complement_basis } => {
            ShiftJson {
                c: report.c,
                bad_count: report.bad_shifts.len(),
                is_subspace: true,
                dimension: Some(*dimension),
                basis: Some(basis.clone()),
                trichotomy: Some(*trichotomy),
                complement_basis: complement_basis.clone(),
                violation_witness: None,
            }
        }
        shifts::SubspaceCheck::Violation { witness } => ShiftJson {
            c: report.c,
            bad_count: report.bad_shifts.len(),
            is_subspace: false,
            dimension: None,
            basis: None,
            trichotomy: None,
            complement_basis: None,
            violation_witness: Some(*witness),
        },
    }
}

pub fn shifts(cli: &Cli) -> anyhow::Result<Outcome> {
    let ctx = context(cli)?;
    let cs: Vec<Elem> = requested_c(cli, &ctx.field)?.into_iter().filter(|&c| c >= 2).collect();
    if cs.is_empty() {
        bail!("shift analysis needs at least one c outside {{0,1}}");
    }
    let mut reports = Vec::new();
    let mut refuted = false;
    for &c in &cs {
        let report = shifts::bad_shifts(&ctx.field, &ctx.lut, c)?;
        if matches!(report.check, shifts::SubspaceCheck::Violation { .. }) {
            refuted = true;
        }
        reports.push(shift_json(&report));
    }
    match cli.format {
        Format::Json => emit_json(cli, &reports)?,
        _ => {
            let mut out = format!("field {} | F = {}\n", ctx.field.spec(), ctx.func_text);
            for r in &reports {
                if r.is_subspace {
                    let _ = writeln!(
                        out,
                        "c = {:>6}  bad = {:>4}  dim = {}  {:?}",
                        render_c(cli, &ctx.field, r.c),
                        r.bad_count,
                        r.dimension.unwrap(),
                        r.trichotomy.unwrap()
                    );
                } else {
                    let (x, y) = r.violation_witness.unwrap();
                    let _ = writeln!(
                        out,
                        "c = {:>6}  bad = {:>4}  NOT A SUBSPACE: {x} and {y} are bad, {x}+{y} is good (property refutation)",
                        render_c(cli, &ctx.field, r.c),
                        r.bad_count,
                    );
                }
            }
            emit(cli, &out)?;
        }
    }
    Ok(if refuted { Outcome::RefutationFound } else { Outcome::Clean })
}

#[derive(Serialize)]
struct WalshChecks {
    c: Elem,
    product_check: bool,
    sparsity_ok: bool,
    quartic_sum: String,
    quartic_expected: String,
}

pub fn walsh(cli: &Cli) -> anyhow::Result<Outcome> {
    let ctx = context(cli)?;
    let table = spectral::walsh(&ctx.field, &ctx.lut);
    if ctx.field.p() != 2 {
        // odd characteristic: exact count-vector dump only
        let mut out = format!("field {} | F = {}\n", ctx.field.spec(), ctx.func_text);
        let _ = writeln!(out, "odd characteristic: entries are count vectors N_j");
        for a in ctx.field.elements() {
            for b in ctx.field.elements() {
                let counts = table.count_vector(a, b);
                let _ = writeln!(out, "a={a} b={b} N={counts:?} |W|={:.6}", table.magnitude(a, b));
            }
        }
        emit(cli, &out)?;
        return Ok(Outcome::Clean);
    }
    let nl = spectral::nonlinearity(&ctx.field, &table)?;
    let mut max_abs = 0i64;
    let mut argmax = (0u64, 0u64);
    for a in ctx.field.elements() {
        for b in 1..ctx.field.order() {
            if table.w(a, b).abs() > max_abs {
                max_abs = table.w(a, b).abs();
                argmax = (a, b);
            }
        }
    }
    let cs: Vec<Elem> = if cli.all_c {
        ctx.field.elements().filter(|&c| c >= 2).collect()
    } else {
        cli.c.iter().copied().filter(|&c| c >= 2).collect()
    };
    let mut checks = Vec::new();
    for &c in &cs {
        ctx.field.check(c)?;
        checks.push(WalshChecks {
            c,
            product_check: spectral::pcn_walsh_product_check(&ctx.field, &table, c)?,
            sparsity_ok: spectral::walsh_sparsity_check(&ctx.field, &table, c)?.ok,
            quartic_sum: spectral::est20_quartic_identity(&ctx.field, &table, c)?.to_string(),
            quartic_expected: (1u128 << (4 * ctx.field.n())).to_string(),
        });
    }
    match cli.format {
        Format::Json => {
            #[derive(Serialize)]
            struct WalshReport {
                field: cdiff_core::FieldSpec,
                function: String,
                nl: u32,
                max_abs_w: i64,
                argmax: (Elem, Elem),
                checks: Vec<WalshChecks>,
                rows: Vec<Vec<i64>>,
            }
            let size = table.size;
            let rows = (0..size as u64)
                .map(|a| (0..size as u64).map(|b| table.w(a, b)).collect())
                .collect();
            emit_json(
                cli,
                &WalshReport {
                    field: ctx.field.spec().clone(),
                    function: ctx.func_text.clone(),
                    nl,
                    max_abs_w: max_abs,
                    argmax,
                    checks,
                    rows,
                },
            )?;
        }
        Format::Csv => {
            let mut out = String::from("a\\b");
            for b in ctx.field.elements() {
                let _ = write!(out, ",{b}");
            }
            out.push('\n');
            for a in ctx.field.elements() {
                let _ = write!(out, "{a}");
                for b in ctx.field.elements() {
                    let _ = write!(out, ",{}", table.w(a, b));
                }
                out.push('\n');
            }
            emit(cli, &out)?;
        }
        Format::Text => {
            let mut out = format!(
                "field {} | F = {} | nl = {nl} | max|W| = {max_abs} at (a,b) = ({},{})\n",
                ctx.field.spec(),
                ctx.func_text,
                argmax.0,
                argmax.1
            );
            for ch in &checks {
                let _ = writeln!(
                    out,
                    "c = {:>6}  product-check = {}  sparsity = {}  quartic = {} (PcN iff = {})",
                    render_c(cli, &ctx.field, ch.c),
                    ch.product_check,
                    ch.sparsity_ok,
                    ch.quartic_sum,
                    ch.quartic_expected
                );
            }
            emit(cli, &out)?;
        }
    }
    Ok(Outcome::Clean)
}

pub fn ddt(cli: &Cli, dump: Option<&Path>, via_autocorrelation: bool) -> anyhow::Result<Outcome> {
    let ctx = context(cli)?;
    let c = match (cli.c.as_slice(), cli.all_c) {
        ([], false) => None,
        ([c], false) => Some(ctx.field.check(*c)?),
        _ => bail!("ddt takes at most one --c"),
    };
    let (csv, json) = match c {
        None => {
            let table = if via_autocorrelation {
                ddt::ddt_via_autocorrelation(&ctx.field, &ctx.lut)?
            } else {
                ddt::ddt(&ctx.field, &ctx.lut)
            };
            (table.to_csv(), ddt::TableDump::from_ddt(&table, ctx.func_text.clone()))
        }
        Some(c) => {
            if via_autocorrelation {
                bail!("--via-autocorrelation applies to the classical DDT only");
            }
            let table = ddt::cddt(&ctx.field, &ctx.lut, c);
            (table.to_csv(), ddt::TableDump::from_cddt(&table, ctx.func_text.clone()))
        }
    };
    if let Some(path) = dump {
        std::fs::write(path, &csv).with_context(|| format!("writing {}", path.display()))?;
        // re-ingest: the dump must parse back to the identical table
        let reread = std::fs::read_to_string(path)?;
        let (size, counts) = ddt::counts_from_csv(&reread)?;
        let flat: Vec<u32> = json.rows.iter().flatten().copied().collect();
        if size != json.rows.len() || counts != flat {
            bail!("round-trip mismatch after dumping {}", path.display());
        }
        eprintln!("dumped {} ({} rows, round-trip verified)", path.display(), size);
    }
    match cli.format {
        Format::Json => emit_json(cli, &json)?,
        _ => emit(cli, &csv)?,
    }
    Ok(Outcome::Clean)
}

pub fn quadratic(cli: &Cli) -> anyhow::Result<Outcome> {
    let ctx = context(cli)?;
    let analysis = quadratic::DoAnalysis::new(&ctx.field, &ctx.repr)?;
    let cs: Vec<Elem> = requested_c(cli, &ctx.field)?.into_iter().filter(|&c| c >= 2).collect();
    let mut reports = Vec::new();
    for &c in &cs {
        let report = analysis.report(c)?;
        if cli.verify {
            let naive = pcn::is_pcn_naive(&ctx.field, analysis.lut(), c);
            if report.membership_verdict != naive || report.intersection_verdict != naive {
                return Err(cdiff_core::Error::Refutation(format!(
                    "quadratic characterization disagrees with the oracle at c={c}"
                ))
                .into());
            }
        }
        reports.push(report);
    }
    match cli.format {
        Format::Json => emit_json(cli, &reports)?,
        _ => {
            let mut out = format!("field {} | F = {}\n", ctx.field.spec(), ctx.func_text);
            for r in &reports {
                let _ = writeln!(
                    out,
                    "c = {:>6}  PcN(membership) = {}  PcN(intersection) = {}",
                    render_c(cli, &ctx.field, r.c),
                    r.membership_verdict,
                    r.intersection_verdict
                );
            }
            emit(cli, &out)?;
        }
    }
    Ok(Outcome::Clean)
}

pub struct AffineArgs<'a> {
    pub check: AffineCheck,
    pub lin: Option<&'a str>,
    pub lin_prime: Option<&'a str>,
    pub a1: Option<&'a str>,
    pub a2: Option<&'a str>,
    pub gamma: u64,
    pub gamma_prime: u64,
    pub gammas: &'a [u64],
    pub max_terms: u32,
    pub budget: u64,
}

fn parse_lin(field: &Field, text: Option<&str>, what: &str) -> anyhow::Result<LinearizedPoly> {
    let text = text.ok_or_else(|| anyhow!("--{what} is required for this check"))?;
    let map = AffineMap::parse(field, text)?;
    if map.translation != 0 {
        bail!("--{what} must be purely linear (no +g: term)");
    }
    Ok(map.linear)
}

fn single_c(cli: &Cli, field: &Field) -> anyhow::Result<Elem> {
    match cli.c.as_slice() {
        [c] => Ok(field.check(*c)?),
        _ => bail!("this check takes exactly one --c"),
    }
}

pub fn affine(cli: &Cli, args: AffineArgs<'_>) -> anyhow::Result<Outcome> {
    let ctx = context(cli)?;
    let field = &ctx.field;
    match args.check {
        AffineCheck::Fp => {
            let a1 = AffineMap::parse(field, args.a1.ok_or_else(|| anyhow!("--a1 required"))?)?;
            let a2 = AffineMap::parse(field, args.a2.ok_or_else(|| anyhow!("--a2 required"))?)?;
            let audit = affine::fp_invariance_audit(field, &ctx.lut, &a1, &a2)?;
            emit_json(cli, &audit)?;
            Ok(if audit.ok { Outcome::Clean } else { Outcome::RefutationFound })
        }
        AffineCheck::Frobenius => {
            let default_gammas: Vec<Elem> = if field.order() <= 64 {
                field.elements().collect()
            } else {
                vec![0, 1, field.generator()]
            };
            let gammas = if args.gammas.is_empty() { &default_gammas } else { args.gammas };
            let audit = affine::frobenius_conjugacy_audit(field, &ctx.lut, gammas)?;
            emit_json(cli, &audit)?;
            Ok(if audit.conjugacy_ok { Outcome::Clean } else { Outcome::RefutationFound })
        }
        AffineCheck::Necessary | AffineCheck::Sufficient => {
            let l = parse_lin(field, args.lin, "lin")?;
            let c = single_c(cli, field)?;
            let checker = affine::LnChecker::new(field, &ctx.lut)?;
            let verdict = match args.check {
                AffineCheck::Necessary => checker.necessary(&l, c)?,
                _ => checker.sufficient(&l, c)?,
            };
            let name =
                if matches!(args.check, AffineCheck::Necessary) { "necessary" } else { "sufficient" };
            emit(cli, &format!("{name} condition for L = `{}` at c={c}: {verdict}\n", l.format()))?;
            Ok(Outcome::Clean)
        }
        AffineCheck::ZeroRow => {
            let l = parse_lin(field, args.lin, "lin")?;
            let c = single_c(cli, field)?;
            let checker = affine::LnChecker::new(field, &ctx.lut)?;
            let audit = checker.zero_row_audit(&l, c)?;
            emit_json(cli, &audit)?;
            Ok(if audit.bound_holds { Outcome::Clean } else { Outcome::RefutationFound })
        }
        AffineCheck::Ea => {
            let l = parse_lin(field, args.lin, "lin")?;
            let lp = match args.lin_prime {
                Some(text) => parse_lin(field, Some(text), "lin-prime")?,
                None => LinearizedPoly::new(vec![]),
            };
            let c = single_c(cli, field)?;
            let checker = affine::LnChecker::new(field, &ctx.lut)?;
            let verdict = checker.ea_sufficient(&l, &lp, args.gamma, args.gamma_prime, c)?;
            emit(cli, &format!("EA sufficiency at c={c}: {verdict}\n"))?;
            Ok(Outcome::Clean)
        }
        AffineCheck::Search => {
            let c = single_c(cli, field)?;
            let checker = affine::LnChecker::new(field, &ctx.lut)?;
            let hits = checker.search_linear_for_pcn(c, args.max_terms, args.budget)?;
            let mut out = format!(
                "{} linearized permutations with <= {} terms make L∘F PcN at c={c}\n",
                hits.len(),
                args.max_terms
            );
            for l in &hits {
                let _ = writeln!(out, "{}", l.format());
            }
            emit(cli, &out)?;
            Ok(Outcome::Clean)
        }
    }
}
