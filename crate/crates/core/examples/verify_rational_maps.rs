//! Check both rational-map families for small parameters and print the
//! structural lemma tables behind them.

use ffperm::families::{conj1_map, conj2_map};
use ffperm::lemmas::{run_lemma_suite, LemmaSet};
use ffperm::perm::{is_permutation, value_set_profile};
use ffperm::poly::FieldMap;
use ffperm::Result;

fn main() -> Result<()> {
    for k in [1, 3, 5] {
        let f = conj1_map(k, false)?;
        let r = is_permutation(&f, f.field())?;
        println!(
            "x((x^2-x+2)/(x^2+x+2))^2 over F_5^{k}: PP = {} ({:.2} ms)",
            r.is_pp, r.ms
        );
    }
    for k in [2, 4] {
        let (g, mu) = conj2_map(k, false)?;
        let r = is_permutation(&g, &mu)?;
        println!(
            "-x((x^2-2)/(x^2+2))^2 on mu_{}: bijective = {}",
            mu.len(),
            r.is_pp
        );
    }

    // outside the hypothesis the first map has poles and is not a bijection
    let forced = conj1_map(2, true)?;
    println!(
        "k = 2 forced: certified = {}",
        forced.certified_on().is_some()
    );

    let f = conj1_map(1, false)?;
    println!(
        "value set over F_5: {:?}",
        value_set_profile(&f, f.field())?.histogram
    );

    println!("\n{}", run_lemma_suite(LemmaSet::for_k(2))?);
    println!("{}", run_lemma_suite(LemmaSet::for_k(3))?);
    Ok(())
}
