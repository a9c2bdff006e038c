//! The unit circle μ_{q+1} ⊂ F_{q²}, its halves {x²} and {−x²}, and the
//! sum/product systems that have no solutions there.

use ffperm::views::{check_sum_product_system, mu_view, omega_split};
use ffperm::{Field, Result};

fn main() -> Result<()> {
    let f = Field::new(5, 4)?;
    let mu = mu_view(&f, 25)?;
    let split = omega_split(&mu)?;
    println!(
        "|mu| = {}, |Omega+| = {}, |Omega-| = {}",
        mu.len(),
        split.plus.len(),
        split.minus.len()
    );
    println!("partition: {}", split.is_partition());

    // x̄ = x^q is the inverse on μ
    let x = mu.iter().nth(3).unwrap();
    println!(
        "x = #{}, x^25 = #{}, 1/x = #{}",
        x.index(),
        f.frobenius(x, 2)?.index(),
        f.inv(x)?.index()
    );

    let one = f.one();
    for (name, view) in [("Omega+", &split.plus), ("Omega-", &split.minus)] {
        for sum in [one, f.neg(one)?] {
            let n = check_sum_product_system(view, sum, one)?;
            println!(
                "{name}: xy = 1, x + y = #{:<3} -> {n} solutions",
                sum.index()
            );
        }
    }
    Ok(())
}
