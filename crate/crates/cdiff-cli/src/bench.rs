//! Benchmark ladder comparing the PcN classification methods on seeded
//! random permutations of `F_{2^n}`.
//!
//! Reports medians of timed runs plus deterministic operation counts; the
//! assertions are ordering/ratio statements only, never absolute times.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use anyhow::bail;
use cdiff_core::{corpus, methods, Field, Lut};

use crate::run::{emit, Outcome};
use crate::Cli;

struct Measured {
    name: &'static str,
    median: Duration,
    ops: u64,
    pcn_set: Vec<u64>,
}

fn measure(
    name: &'static str,
    runs: u32,
    f: impl Fn() -> methods::MethodResult,
) -> Measured {
    // calibrate inner repetitions so each sample is long enough to time
    let t0 = Instant::now();
    let first = f();
    let once = t0.elapsed().max(Duration::from_nanos(1));
    let reps = (Duration::from_millis(2).as_nanos() / once.as_nanos()).clamp(0, 64) as u32 + 1;
    let mut samples = Vec::with_capacity(runs as usize);
    for _ in 0..runs {
        let t = Instant::now();
        for _ in 0..reps {
            std::hint::black_box(f());
        }
        samples.push(t.elapsed() / reps);
    }
    samples.sort_unstable();
    Measured {
        name,
        median: samples[samples.len() / 2],
        ops: first.ops,
        pcn_set: first.pcn_set,
    }
}

pub fn run(
    cli: &Cli,
    min_n: u32,
    max_n: u32,
    runs: u32,
    triple_budget: u64,
) -> anyhow::Result<Outcome> {
    if min_n < 2 || max_n > 16 || min_n > max_n {
        bail!("need 2 <= min-n <= max-n <= 16");
    }
    if runs < 1 {
        bail!("--runs must be at least 1");
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "PcN classification over all c, seeded random permutation per field (seed {})",
        cli.seed
    );
    let _ = writeln!(out, "medians of {runs} runs; ops are deterministic inner-step counts");

    // per n: (triple median, occupancy median, lookup median, elim medians)
    let mut triple_rows: Vec<(u32, Duration, Duration, Duration)> = Vec::new();
    let mut headline: Option<(Duration, Duration)> = None;
    for n in min_n..=max_n {
        let field = Field::new(cdiff_core::FieldSpec::new(2, n, None)?)?;
        let q = field.order();
        let mut rng = corpus::rng_from_seed(cli.seed);
        let lut: Lut = corpus::random_permutation(&field, &mut rng);

        let occupancy = measure("occupancy-full", runs, || {
            methods::occupancy_full_all_c(&field, &lut)
        });
        let occupancy_ee = measure("occupancy-early-exit", runs, || {
            methods::occupancy_early_exit_all_c(&field, &lut)
        });
        let lookup =
            measure("ddt-lookup", runs, || methods::ddt_lookup_all_c(&field, &lut));
        let elim = measure("ratio-elimination", runs, || {
            methods::ratio_elimination_all_c(&field, &lut, false)
        });
        let elim_early = measure("ratio-elimination-early", runs, || {
            methods::ratio_elimination_all_c(&field, &lut, true)
        });

        let triple_estimate = (q - 2).saturating_mul(q * q * q);
        let triple = if triple_estimate <= triple_budget {
            Some(measure("triple-literal", runs, || {
                methods::triple_check_all_c(&field, &lut)
            }))
        } else {
            None
        };

        let _ = writeln!(out, "\nF_{q} (n = {n}), PcN set {:?}", occupancy.pcn_set);
        let mut rows: Vec<&Measured> =
            vec![&occupancy, &occupancy_ee, &lookup, &elim, &elim_early];
        if let Some(t) = &triple {
            rows.insert(0, t);
        } else {
            let _ = writeln!(
                out,
                "  {:<26} skipped: ~{triple_estimate} ops exceeds budget {triple_budget}",
                "triple-literal"
            );
        }
        for m in &rows {
            let _ = writeln!(
                out,
                "  {:<26} median {:>12?}  ops {:>12}",
                m.name, m.median, m.ops
            );
        }

        // agreement across every method that ran
        for m in &rows {
            if m.pcn_set != occupancy.pcn_set {
                bail!(
                    "method disagreement at n={n}: {} found {:?}, occupancy found {:?}",
                    m.name,
                    m.pcn_set,
                    occupancy.pcn_set
                );
            }
        }

        if let Some(t) = &triple {
            let _ = writeln!(
                out,
                "  speedup vs triple: ddt-lookup {:.1}x, ratio-elimination {:.1}x",
                ratio(t.median, lookup.median),
                ratio(t.median, elim.median),
            );
            triple_rows.push((n, t.median, lookup.median, elim.median));
        }
        let _ = writeln!(
            out,
            "  speedup ratio-elimination-early vs occupancy-full: {:.1}x",
            ratio(occupancy.median, elim_early.median)
        );
        if n == max_n {
            headline = Some((occupancy.median, elim_early.median));
        }
    }

    // ordering assertions
    let mut ok = true;
    if triple_rows.len() >= 2 {
        for pair in triple_rows.windows(2) {
            let (n0, t0, l0, e0) = pair[0];
            let (n1, t1, l1, e1) = pair[1];
            if ratio(t1, l1) <= ratio(t0, l0) || ratio(t1, e1) <= ratio(t0, e0) {
                let _ = writeln!(
                    out,
                    "ASSERTION FAILED: advantage over the literal check did not grow from n={n0} to n={n1}"
                );
                ok = false;
            }
        }
        if ok {
            let _ = writeln!(out, "assertion: advantage over the literal check grows with n: ok");
        }
    }
    if let Some((occ, elim)) = headline {
        if elim < occ {
            let _ = writeln!(
                out,
                "assertion: all-c ratio-elimination beats all-c occupancy at n={max_n} ({:.1}x): ok",
                ratio(occ, elim)
            );
        } else {
            let _ = writeln!(
                out,
                "ASSERTION FAILED: ratio-elimination not faster than occupancy at n={max_n}"
            );
            ok = false;
        }
    }
    emit(cli, &out)?;
    Ok(if ok { Outcome::Clean } else { Outcome::RefutationFound })
}

fn ratio(a: Duration, b: Duration) -> f64 {
    a.as_secs_f64() / b.as_secs_f64().max(1e-12)
}
