//! Batch decisions: single checks, exhaustive degree-`m` catalogs, and their
//! JSON and CSV renderings.

use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::ContextDescriptor;
use crate::error::{Error, Result};
use crate::quotient::{QuotientRing, QuotientRingExt};
use crate::separability::{
    decide, verify_witness, yx_conversion_check, DecisionReport, HirataWitness,
    SeparabilityWitness, Verdict, Witness,
};
use crate::skew::{all_monic, InvariantPolynomial, SkewPolynomial, SkewRing};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub candidates: usize,
    pub invariant: usize,
    pub separable: usize,
    pub hirata: usize,
}

/// Wall-clock timings, kept out of the canonical body.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub elapsed_ms: f64,
    pub jobs: usize,
    pub cached: bool,
}

/// Output of `check` and `catalog`. Without `metadata` the serialization is
/// a pure function of the input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub context: ContextDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub summary: Summary,
    pub entries: Vec<DecisionReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

fn summarize(candidates: usize, entries: &[DecisionReport]) -> Summary {
    Summary {
        candidates,
        invariant: entries.iter().filter(|e| e.invariant).count(),
        separable: entries.iter().filter(|e| e.separable.is_yes()).count(),
        hirata: entries.iter().filter(|e| e.hirata.is_yes()).count(),
    }
}

/// Decides each polynomial in order.
pub fn check(ctx: &Arc<SkewRing>, polys: &[SkewPolynomial]) -> Result<ReportDocument> {
    let entries = polys.iter().map(decide).collect::<Result<Vec<_>>>()?;
    Ok(ReportDocument {
        context: ContextDescriptor::of(ctx),
        degree: None,
        summary: summarize(polys.len(), &entries),
        entries,
        metadata: None,
    })
}

#[derive(Clone, Debug)]
pub struct CatalogOptions {
    pub degree: usize,
    pub max_enum: u128,
    /// Worker threads; `1` runs serially.
    pub jobs: usize,
    pub cache_dir: Option<std::path::PathBuf>,
}

/// Decides every invariant monic polynomial of the given degree. Entries are
/// sorted by coefficient vector, so the result does not depend on `jobs`.
pub fn catalog(ctx: &Arc<SkewRing>, opts: &CatalogOptions) -> Result<ReportDocument> {
    let start = Instant::now();
    let descriptor = ContextDescriptor::of(ctx);
    let key = descriptor.cache_key(opts.degree, opts.max_enum);
    if let Some(dir) = &opts.cache_dir {
        let path = dir.join(format!("{key}.json"));
        if let Ok(text) = std::fs::read_to_string(&path) {
            if let Ok(mut doc) = serde_json::from_str::<ReportDocument>(&text) {
                if doc.context == descriptor && doc.degree == Some(opts.degree) {
                    doc.metadata = Some(Metadata {
                        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
                        jobs: opts.jobs,
                        cached: true,
                    });
                    return Ok(doc);
                }
            }
        }
    }

    let candidates = all_monic(ctx, opts.degree, opts.max_enum)?;
    let classify = |f: &SkewPolynomial| -> Option<Result<DecisionReport>> {
        match decide(f) {
            Ok(r) if !r.invariant => None,
            other => Some(other),
        }
    };
    // partition by the constant coefficient, the most significant position
    let width = candidates.len() / ctx.ring().order().map_or(1, |o| o as usize).max(1);
    let chunk = width.max(1);
    let mut entries: Vec<DecisionReport> = if opts.jobs <= 1 {
        candidates.iter().filter_map(classify).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
        let parts: Vec<Vec<DecisionReport>> = pool.install(|| {
            candidates
                .par_chunks(chunk)
                .map(|part| part.iter().filter_map(classify).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()
        })?;
        parts.into_iter().flatten().collect()
    };
    entries.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));

    let mut doc = ReportDocument {
        context: descriptor,
        degree: Some(opts.degree),
        summary: summarize(candidates.len(), &entries),
        entries,
        metadata: None,
    };
    if let Some(dir) = &opts.cache_dir {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join(format!("{key}.json")), to_json(&doc)?)?;
    }
    doc.metadata = Some(Metadata {
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        jobs: opts.jobs,
        cached: false,
    });
    Ok(doc)
}

/// Canonical JSON: pretty-printed, fields in declaration order, trailing newline.
pub fn to_json(doc: &ReportDocument) -> Result<String> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct CsvRow<'a> {
    polynomial: &'a str,
    coeffs: String,
    invariant: bool,
    separable: String,
    hirata: String,
    witness_h: String,
    witness_pairs: String,
    rho_d_commute: bool,
    coeffs_in_b_rho: bool,
    oracle_separable: String,
    oracle_hirata: String,
}

fn vectors(v: &[Vec<u64>]) -> String {
    v.iter()
        .map(|c| c.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";")
}

fn optional(b: Option<bool>) -> String {
    b.map_or(String::new(), |b| b.to_string())
}

/// One row per entry with a fixed column order. Vectors are written as
/// space-separated coordinates joined by `;`.
pub fn to_csv(doc: &ReportDocument) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if doc.entries.is_empty() {
        w.write_record([
            "polynomial",
            "coeffs",
            "invariant",
            "separable",
            "hirata",
            "witness_h",
            "witness_pairs",
            "rho_d_commute",
            "coeffs_in_b_rho",
            "oracle_separable",
            "oracle_hirata",
        ])?;
    }
    for e in &doc.entries {
        w.serialize(CsvRow {
            polynomial: &e.polynomial,
            coeffs: vectors(&e.coeffs),
            invariant: e.invariant,
            separable: e.separable.to_string(),
            hirata: e.hirata.to_string(),
            witness_h: e.witness_h.as_deref().map_or(String::new(), vectors),
            witness_pairs: e.witness_pairs.as_ref().map_or(String::new(), |ps| {
                ps.iter()
                    .map(|p| format!("({} | {})", vectors(&p.g), vectors(&p.h)))
                    .collect::<Vec<_>>()
                    .join(" ")
            }),
            rho_d_commute: e.assumptions.rho_d_commute,
            coeffs_in_b_rho: e.assumptions.coeffs_in_b_rho,
            oracle_separable: optional(e.oracle_agreement.separable),
            oracle_hirata: optional(e.oracle_agreement.hirata),
        })?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn load(path: &Path) -> Result<ReportDocument> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

/// A problem found when re-checking a stored document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryProblem {
    pub polynomial: String,
    pub problem: String,
}

/// Rebuilds the context and re-verifies every stored witness and the
/// implication Hirata ⇒ separable.
pub fn verify_document(doc: &ReportDocument) -> Result<Vec<EntryProblem>> {
    let ctx = doc.context.rebuild()?;
    let ring = ctx.ring();
    let mut problems = Vec::new();
    for e in &doc.entries {
        let mut flag = |problem: &str| {
            problems.push(EntryProblem { polynomial: e.polynomial.clone(), problem: problem.into() })
        };
        if e.hirata.is_yes() && !e.separable.is_yes() {
            flag("hirata without separable");
        }
        if !e.invariant {
            continue;
        }
        let coeffs = e
            .coeffs
            .iter()
            .map(|c| ring.element(&c.iter().map(|&x| x as i64).collect::<Vec<_>>()))
            .collect::<Result<Vec<_>>>()?;
        let Ok(f) = SkewPolynomial::new(&ctx, coeffs).and_then(InvariantPolynomial::new) else {
            flag("stored polynomial is not invariant");
            continue;
        };
        let a = QuotientRing::new(f);
        let element = |v: &[Vec<u64>]| a.from_coords(&v.concat());
        match (&e.separable, &e.witness_h) {
            (Verdict::Yes, Some(h)) => {
                let w = SeparabilityWitness { h: element(h) };
                if !verify_witness(&a, Witness::Separable(&w)) {
                    flag("separability witness fails");
                }
            }
            (Verdict::Yes, None) => flag("separable without witness"),
            _ => {}
        }
        match (&e.hirata, &e.witness_pairs) {
            (Verdict::Yes, Some(pairs)) => {
                let w = HirataWitness {
                    pairs: pairs.iter().map(|p| (element(&p.g), element(&p.h))).collect(),
                };
                if !verify_witness(&a, Witness::Hirata(&w)) || !yx_conversion_check(&a, &w) {
                    flag("Hirata witness fails");
                }
            }
            (Verdict::Yes, None) => flag("hirata without witness"),
            _ => {}
        }
    }
    Ok(problems)
}
