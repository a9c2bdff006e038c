//! Exhaustive search for x + γ·Tr_{q^n/q}(x^k) permutations up to a field
//! order given on the command line (default 243).

use std::collections::BTreeMap;

use ffperm::search::{run_trace_search, SearchConfig};
use ffperm::Result;

fn main() -> Result<()> {
    let bound = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(243);
    let cfg = SearchConfig::new(bound);
    let (summary, records) = run_trace_search(&cfg)?;
    println!(
        "q^n <= {bound}: {} decompositions, {} exponent cosets, {} permutations",
        summary.decompositions, summary.units, summary.records
    );

    let mut by_field: BTreeMap<(u32, u32, u32), BTreeMap<String, usize>> = BTreeMap::new();
    for r in &records {
        let tag = r.family_tag.clone().unwrap_or_default();
        *by_field
            .entry((r.field.p, r.field.j, r.field.n))
            .or_default()
            .entry(tag)
            .or_default() += 1;
    }
    for ((p, j, n), tags) in by_field {
        println!("p = {p:>2}, j = {j}, n = {n}: {tags:?}");
    }
    Ok(())
}
