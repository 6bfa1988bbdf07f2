//! One function per subcommand; each returns a JSON result, a text rendering
//! and a verdict.

use std::fmt::Write as _;
use std::sync::Arc;

use colonlab_core::groebner::normal_form;
use colonlab_core::hilbert::{filtration_hilbert, graded_hilbert};
use colonlab_core::ideal_ops::{colon, ideal_intersect, make_quotient};
use colonlab_core::oracle::build_model;
use colonlab_core::theorems::{
    check_delta_identity, random_complete_intersection, socle_degree, storch_fixture,
    verify_corollary, verify_macaulay_ladder, verify_main_equivalence, verify_symmetry,
    LadderReport, PUBLISHED_STORCH_SERIES,
};
use colonlab_core::{Error, Ideal, Polynomial, Result, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::input::Settings;

/// Whether the command's expected verdict held.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Primitive computation with no verdict.
    None,
    Holds,
    Fails,
}

impl Verdict {
    fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

pub struct Outcome {
    pub ring: Arc<Ring>,
    pub result: Value,
    pub text: String,
    pub verdict: Verdict,
}

pub const DEFAULT_RANDOM_VARS: &str = "x,y";
pub const DEFAULT_COUNT: usize = 10;
pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_MAX_DEGREE: u32 = 4;

fn strings(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(ToString::to_string).collect()
}

fn list(polys: &[Polynomial]) -> String {
    strings(polys).join(", ")
}

fn ladder_json(report: &LadderReport) -> Value {
    let rungs: Vec<Value> = report
        .rungs
        .iter()
        .map(|r| {
            json!({
                "i": r.i,
                "equal": r.equal,
                "lhs_gb_size": r.lhs_gb_size,
                "rhs_gb_size": r.rhs_gb_size,
            })
        })
        .collect();
    json!({
        "delta": report.delta,
        "holds": report.holds,
        "failures": report.failures(),
        "rungs": rungs,
    })
}

fn ladder_text(out: &mut String, report: &LadderReport) {
    for r in &report.rungs {
        let _ = writeln!(
            out,
            "  i = {}: {} (gb sizes {} / {})",
            r.i,
            if r.equal { "equal" } else { "DIFFERENT" },
            r.lhs_gb_size,
            r.rhs_gb_size
        );
    }
}

fn second_ideal_or_maximal(settings: &Settings, ring: &Arc<Ring>) -> Result<Ideal> {
    Ok(match settings.ideal2(ring)? {
        Some(i) => i,
        None => colonlab_core::ideal_ops::irrelevant_ideal(ring),
    })
}

fn required_second(settings: &Settings, ring: &Arc<Ring>) -> Result<Ideal> {
    settings
        .ideal2(ring)?
        .ok_or_else(|| Error::Usage("missing --ideal2".into()))
}

pub fn gb(settings: &Settings) -> Result<Outcome> {
    let ring = settings.ring()?;
    let ideal = settings.ideal(&ring)?;
    let basis = ideal.gb();
    let text = format!(
        "reduced Groebner basis ({} elements):\n  {}\n",
        basis.len(),
        list(basis)
    );
    Ok(Outcome {
        result: json!({
            "generators": strings(ideal.generators()),
            "gb": strings(basis),
            "size": basis.len(),
        }),
        ring,
        text,
        verdict: Verdict::None,
    })
}

pub fn nf(settings: &Settings) -> Result<Outcome> {
    let ring = settings.ring()?;
    let ideal = settings.ideal(&ring)?;
    let poly_text = settings
        .poly
        .as_deref()
        .ok_or_else(|| Error::Usage("missing --poly".into()))?;
    let f = Polynomial::parse(poly_text, &ring)?;
    let reduced = normal_form(&f, ideal.gb());
    let text = format!(
        "normal form of {f}:\n  {reduced}\nmember: {}\n",
        reduced.is_zero()
    );
    Ok(Outcome {
        result: json!({
            "poly": f.to_string(),
            "normal_form": reduced.to_string(),
            "member": reduced.is_zero(),
            "gb": strings(ideal.gb()),
        }),
        ring,
        text,
        verdict: Verdict::None,
    })
}

pub fn colon_cmd(settings: &Settings) -> Result<Outcome> {
    let ring = settings.ring()?;
    let ideal = settings.ideal(&ring)?;
    let by = required_second(settings, &ring)?;
    let quotient = colon(&ideal, &by)?;
    let text = format!(
        "I : J has reduced Groebner basis\n  {}\n",
        list(quotient.gb())
    );
    Ok(Outcome {
        result: json!({
            "gb": strings(quotient.gb()),
            "is_unit": quotient.is_unit(),
        }),
        ring,
        text,
        verdict: Verdict::None,
    })
}

pub fn intersect(settings: &Settings) -> Result<Outcome> {
    let ring = settings.ring()?;
    let a = settings.ideal(&ring)?;
    let b = required_second(settings, &ring)?;
    let meet = ideal_intersect(&a, &b)?;
    let text = format!("I ∩ J has reduced Groebner basis\n  {}\n", list(meet.gb()));
    Ok(Outcome {
        result: json!({ "gb": strings(meet.gb()) }),
        ring,
        text,
        verdict: Verdict::None,
    })
}

pub fn hilbert(settings: &Settings) -> Result<Outcome> {
    let ring = settings.ring()?;
    let quotient = make_quotient(&settings.ideal(&ring)?)?;
    let filtration_ideal = second_ideal_or_maximal(settings, &ring)?;
    let filtration = filtration_hilbert(&quotient, &filtration_ideal)?;
    let graded = if quotient.is_homogeneous() {
        Some(graded_hilbert(&quotient)?)
    } else {
        None
    };
    let standard: Vec<String> = quotient
        .standard_monomials()
        .iter()
        .map(|m| m.display(ring.vars()).to_string())
        .collect();
    let mut text = format!(
        "length: {}\nstandard monomials: {}\n",
        quotient.length(),
        standard.join(", ")
    );
    match &graded {
        Some(t) => {
            let _ = writeln!(
                text,
                "graded Hilbert function: {t} (socle degree {})",
                t.delta()
            );
        }
        None => text.push_str("graded Hilbert function: n/a (inhomogeneous)\n"),
    }
    let _ = writeln!(
        text,
        "filtration Hilbert function: {filtration} (delta {})",
        filtration.delta()
    );
    Ok(Outcome {
        result: json!({
            "length": quotient.length(),
            "standard_monomials": standard,
            "graded": graded.as_ref().map(|t| t.values().to_vec()),
            "filtration": filtration.values(),
            "filtration_delta": filtration.delta(),
        }),
        ring,
        text,
        verdict: Verdict::None,
    })
}

pub fn socle(settings: &Settings) -> Result<Outcome> {
    let ring = settings.ring()?;
    let quotient = make_quotient(&settings.ideal(&ring)?)?;
    let socle = quotient.socle()?;
    let dim = quotient.socle_dimension()?;
    let gorenstein = dim == 1;
    let text = format!(
        "J : m has reduced Groebner basis\n  {}\nsocle dimension: {dim}\nGorenstein: {gorenstein}\n",
        list(socle.gb())
    );
    Ok(Outcome {
        result: json!({
            "socle": strings(socle.gb()),
            "socle_dimension": dim,
            "length": quotient.length(),
            "gorenstein": gorenstein,
        }),
        ring,
        text,
        verdict: Verdict::None,
    })
}

pub fn ladder(settings: &Settings) -> Result<Outcome> {
    let ring = settings.ring()?;
    let gens = settings.generators(&ring)?;
    let report = verify_macaulay_ladder(&ring, &gens)?;
    let identity = check_delta_identity(&ring, &gens)?;
    let mut result = ladder_json(&report);
    result["delta_identity"] = json!(identity);
    let mut text = format!(
        "delta = {} (sum of degrees minus n: {identity})\n",
        report.delta
    );
    ladder_text(&mut text, &report);
    let _ = writeln!(text, "ladder holds: {}", report.holds);
    Ok(Outcome {
        ring,
        result,
        text,
        verdict: Verdict::from_bool(report.holds && identity),
    })
}

pub fn symmetry(settings: &Settings) -> Result<Outcome> {
    let ring = settings.ring()?;
    let (table, symmetric) = verify_symmetry(&settings.ideal(&ring)?)?;
    let text = format!(
        "graded Hilbert function: {table}\nsocle degree: {}\nsymmetric: {symmetric}\n",
        table.delta()
    );
    Ok(Outcome {
        ring,
        result: json!({
            "hilbert": table.values(),
            "delta": table.delta(),
            "symmetric": symmetric,
        }),
        text,
        verdict: Verdict::from_bool(symmetric),
    })
}

pub fn equiv(settings: &Settings) -> Result<Outcome> {
    let ring = settings.ring()?;
    let quotient = make_quotient(&settings.ideal(&ring)?)?;
    let ideal = second_ideal_or_maximal(settings, &ring)?;
    let report = verify_main_equivalence(&quotient, &ideal)?;
    let mut result = ladder_json(&report.ladder);
    result["hilbert"] = json!(report.table.values());
    result["symmetric"] = json!(report.symmetric);
    result["consistent"] = json!(report.consistent);
    result["colengths"] = json!(report.colengths);
    let mut text = format!(
        "filtration Hilbert function: {} (delta {})\n",
        report.table, report.delta
    );
    ladder_text(&mut text, &report.ladder);
    let _ = writeln!(
        text,
        "ladder holds: {}\nsymmetric: {}\nconsistent: {}",
        report.ladder_holds, report.symmetric, report.consistent
    );
    Ok(Outcome {
        ring,
        result,
        text,
        verdict: Verdict::from_bool(report.consistent),
    })
}

pub fn corollary(settings: &Settings) -> Result<Outcome> {
    let ring = settings.ring()?;
    let report = verify_corollary(&settings.ideal(&ring)?)?;
    let mut text = format!("socle degree: {}\n", report.delta);
    ladder_text(&mut text, &report);
    let _ = writeln!(text, "ladder holds: {}", report.holds);
    Ok(Outcome {
        ring,
        result: ladder_json(&report),
        text,
        verdict: Verdict::from_bool(report.holds),
    })
}

/// Exit status follows the counterexample property (Gorenstein, asymmetric,
/// ladder fails, biconditional consistent); the published series is reported
/// alongside for comparison.
pub fn storch() -> Result<Outcome> {
    let (quotient, m) = storch_fixture()?;
    let ring = quotient.ring().clone();
    let gorenstein = quotient.is_gorenstein()?;
    let report = verify_main_equivalence(&quotient, &m)?;
    let oracle = build_model(&quotient)?.filtration_hilbert(&m)?;
    let table = report.table.values();
    let matches_published = table == PUBLISHED_STORCH_SERIES;
    let counterexample =
        gorenstein && !report.symmetric && !report.ladder_holds && report.consistent;
    let mut result = ladder_json(&report.ladder);
    result["generators"] = json!(strings(quotient.defining().generators()));
    result["length"] = json!(quotient.length());
    result["gorenstein"] = json!(gorenstein);
    result["hilbert"] = json!(table);
    result["oracle_hilbert"] = json!(oracle.values());
    result["published_series"] = json!(PUBLISHED_STORCH_SERIES);
    result["matches_published_series"] = json!(matches_published);
    result["symmetric"] = json!(report.symmetric);
    result["consistent"] = json!(report.consistent);
    result["colengths"] = json!(report.colengths);
    result["counterexample"] = json!(counterexample);
    let published = PUBLISHED_STORCH_SERIES.map(|v| v.to_string()).join(",");
    let mut text = format!(
        "A = F2[X,Y] / ({})\nlength: {}\nGorenstein: {gorenstein}\nfiltration Hilbert function (I = m): {} (oracle {oracle})\npublished series: ({published}), matches: {matches_published}\n",
        list(quotient.defining().generators()),
        quotient.length(),
        report.table,
    );
    ladder_text(&mut text, &report.ladder);
    let _ = writeln!(
        text,
        "ladder holds: {}\nsymmetric: {}\nconsistent: {}\ncounterexample: {counterexample}",
        report.ladder_holds, report.symmetric, report.consistent
    );
    Ok(Outcome {
        ring,
        result,
        text,
        verdict: Verdict::from_bool(counterexample),
    })
}

pub fn random_ci(settings: &Settings) -> Result<Outcome> {
    let mut settings = settings.clone();
    settings
        .vars
        .get_or_insert_with(|| DEFAULT_RANDOM_VARS.to_string());
    let ring = settings.ring()?;
    let seed = settings.seed.unwrap_or(DEFAULT_SEED);
    let count = settings.count.unwrap_or(DEFAULT_COUNT);
    let max_degree = settings.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
    if max_degree == 0 {
        return Err(Error::Usage("--max-degree must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::with_capacity(count);
    let mut failures = 0usize;
    let mut text = String::new();
    for case in 0..count {
        let degrees: Vec<u32> = (0..ring.nvars())
            .map(|_| rng.gen_range(1..=max_degree))
            .collect();
        let gens = random_complete_intersection(&mut rng, &ring, &degrees)?;
        let report = verify_macaulay_ladder(&ring, &gens)?;
        let identity = check_delta_identity(&ring, &gens)?;
        let ok = report.holds && identity;
        failures += usize::from(!ok);
        let _ = writeln!(
            text,
            "case {case}: degrees {degrees:?}, delta {} (expected {}), ladder {}",
            report.delta,
            socle_degree(&degrees),
            if ok { "holds" } else { "FAILS" }
        );
        cases.push(json!({
            "degrees": degrees,
            "generators": strings(&gens),
            "delta": report.delta,
            "delta_identity": identity,
            "holds": report.holds,
            "failures": report.failures(),
        }));
    }
    let _ = writeln!(text, "{} of {count} cases passed", count - failures);
    Ok(Outcome {
        ring,
        result: json!({
            "seed": seed,
            "count": count,
            "max_degree": max_degree,
            "failed": failures,
            "cases": cases,
        }),
        text,
        verdict: Verdict::from_bool(failures == 0),
    })
}
