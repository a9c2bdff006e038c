//! Build a few extension fields and exercise the arithmetic, Frobenius,
//! trace and square-root primitives.

use ffperm::{Field, Result};

fn main() -> Result<()> {
    let f = Field::new(5, 2)?;
    println!(
        "{}: modulus (low to high) {:?}, generator #{}",
        f.id(),
        f.modulus(),
        f.generator().index()
    );

    let a = f.generator();
    let a2 = f.mul(a, a)?;
    println!("alpha^2 = #{}  (alpha^2 = -2 = 3)", a2.index());
    println!(
        "alpha^5 = #{}  (Frobenius of alpha: #{})",
        f.pow(a, 5)?.index(),
        f.frobenius(a, 1)?.index()
    );
    println!("Tr(alpha) to F_5 = #{}", f.trace(a, 1)?.index());
    println!("1/alpha = #{}", f.inv(a)?.index());

    // ±2 are non-squares in F_5 but squares in F_625, with roots already in F_25
    let big = Field::new(5, 4)?;
    for n in [2, -2] {
        let y = big.sqrt(big.from_int(n))?.expect("square in F_625");
        println!(
            "sqrt({n:>2}) in {} = #{:<4} lies in F_25: {}",
            big.id(),
            y.index(),
            big.in_subfield(y, 2)?
        );
    }

    // beyond the table cap arithmetic falls back to square-and-multiply
    let huge = Field::new(5, 9)?;
    let g = huge.generator();
    println!(
        "{} (order {}): tables {}, g^(order-1) = #{}",
        huge.id(),
        huge.order(),
        huge.has_tables(),
        huge.pow(g, huge.order() as u64 - 1)?.index()
    );

    // elements carry their field; mixing is an error
    match f.add(a, huge.one()) {
        Err(e) => println!("mixing fields: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
