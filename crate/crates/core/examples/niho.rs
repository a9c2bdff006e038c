//! Niho-type trinomials over F_25 and F_625: which ones permute the field.

use ffperm::families::{niho_trinomial, NihoParams};
use ffperm::perm::is_permutation;
use ffperm::search::{search_niho, SearchConfig};
use ffperm::{Field, Result};

fn main() -> Result<()> {
    let rows = search_niho(1, &SearchConfig::new(25))?;
    println!(
        "k = 1: {} permuting trinomials (one orientation each)",
        rows.len()
    );
    for row in rows.iter().take(8) {
        let p = &row.params;
        println!(
            "  x {:+}x^{} {:+}x^{}  {:?}",
            p.lambda1, row.exponents.0, p.lambda2, row.exponents.1, row.family_tag
        );
    }

    let f = Field::new(5, 4)?;
    let params = NihoParams {
        k: 2,
        s: 1,
        t: 3,
        lambda1: 1,
        lambda2: -1,
    };
    let poly = niho_trinomial(&f, &params)?;
    println!(
        "k = 2, {params:?}: terms {:?}",
        poly.terms()
            .iter()
            .map(|(e, c)| (*e, c.index()))
            .collect::<Vec<_>>()
    );
    println!("  permutes F_625: {}", is_permutation(&poly, &f)?.is_pp);
    Ok(())
}
