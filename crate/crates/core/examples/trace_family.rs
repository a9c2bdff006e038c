//! The characteristic-3 trace family x + γ·Tr(x^k) over F_{q²}: the admissible
//! γ, the bijection check, and explicit inversion.

use ffperm::families::{example_map, invert_trace_pp, ExampleId, TraceFamily};
use ffperm::perm::PermChecker;
use ffperm::poly::FieldMap;
use ffperm::views::Domain;
use ffperm::Result;

fn main() -> Result<()> {
    for r in [2, 3] {
        let fam = TraceFamily::new(r)?;
        let gammas = fam.gammas();
        println!(
            "r = {r}: q = {}, k = {}, {} admissible gammas",
            fam.q(),
            fam.k(),
            gammas.len()
        );

        let params = fam.params(gammas[0])?;
        let map = params.map()?;
        let f = fam.field();
        let a = f.elem(42)?;
        let x = invert_trace_pp(&params, a)?;
        println!(
            "  gamma #{}: f^-1(#42) = #{}, f(#{}) = #{}",
            gammas[0].index(),
            x.index(),
            x.index(),
            map.eval(x)?.index()
        );
    }

    let mut checker = PermChecker::new();
    for id in ExampleId::ALL {
        let maps = example_map(id)?;
        let mut ok = 0;
        for m in &maps {
            ok += checker.is_bijection(m, Domain::Field(m.field()))? as usize;
        }
        println!(
            "example {id}: {ok}/{} (k, gamma) combinations are PPs",
            maps.len()
        );
    }
    Ok(())
}
