//! Classifies every invariant monic polynomial of degree 2 over the
//! non-commuting F4 context, prints the summary and a CSV rendering, then
//! re-verifies the document as a stored report would be.

use skewsep::catalog::{self, CatalogOptions};
use skewsep::config::JobConfig;

const CONFIG: &str = r#"{
    "ring": {"ring": "GF", "p": 2, "modulus": [1, 1, 1]},
    "rho": "frobenius",
    "d": {"inner": [0, 1]},
    "degree": 2
}"#;

fn main() -> Result<(), skewsep::error::Error> {
    let config = JobConfig::from_json(CONFIG)?;
    let resolved = config.resolve()?;
    let summary = resolved.validate();
    println!("validation passed: {}, rho D = D rho: {:?}", summary.passed, summary.rho_d_commute);
    let ctx = resolved.into_context()?;

    let opts = CatalogOptions { degree: 2, max_enum: config.max_enum(), jobs: 2, cache_dir: None };
    let doc = catalog::catalog(&ctx, &opts)?;
    println!("{:?}", doc.summary);
    print!("{}", catalog::to_csv(&doc)?);

    let problems = catalog::verify_document(&doc)?;
    println!("problems on re-verification: {}", problems.len());
    Ok(())
}
