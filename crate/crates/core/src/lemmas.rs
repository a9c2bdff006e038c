//! Executable versions of the structural facts behind the three permutation
//! results. Each fact becomes one pass/fail line; a failing fact is reported,
//! not raised.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{
    conj1_map, conj2_map, invert_trace_pp, trace_family_k, ExampleId, TraceFamily,
};
use crate::field::{Elem, Field};
use crate::perm::{is_permutation, permutes_subset, PermChecker};
use crate::poly::{DensePolynomial, FieldMap};
use crate::views::{check_sum_product_system, omega_split, square_class_split, Domain};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "suite", rename_all = "snake_case")]
pub enum LemmaSet {
    /// μ_{q+1} facts for the negated rational map, q = 5^k, k even.
    UnitCircle { k: u32 },
    /// Square-class facts for the rational map over F_{5^k}, k odd.
    SquareClasses { k: u32 },
    /// γ-set and inversion facts for the characteristic-3 trace family.
    TraceFamily { r: u32 },
}

impl LemmaSet {
    /// Picks the suite a bare `k` refers to: even k → unit circle, odd k →
    /// square classes.
    pub fn for_k(k: u32) -> LemmaSet {
        if k % 2 == 0 {
            LemmaSet::UnitCircle { k }
        } else {
            LemmaSet::SquareClasses { k }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LemmaReport {
    pub set: LemmaSet,
    pub lines: Vec<LemmaLine>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn line(&self, name: &str) -> Option<&LemmaLine> {
        self.lines.iter().find(|l| l.name == name)
    }

    fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.lines.push(LemmaLine {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .lines
            .iter()
            .map(|l| l.name.chars().count())
            .max()
            .unwrap_or(0);
        for l in &self.lines {
            let pad = width - l.name.chars().count();
            writeln!(
                f,
                "{}  {}{}  {}",
                if l.pass { "PASS" } else { "FAIL" },
                l.name,
                " ".repeat(pad),
                l.detail
            )?;
        }
        Ok(())
    }
}

pub fn run_lemma_suite(set: LemmaSet) -> Result<LemmaReport> {
    let mut report = LemmaReport {
        set,
        lines: Vec::new(),
    };
    match set {
        LemmaSet::UnitCircle { k } => unit_circle(k, &mut report)?,
        LemmaSet::SquareClasses { k } => square_classes(k, &mut report)?,
        LemmaSet::TraceFamily { r } => trace_suite(r, &mut report)?,
    }
    Ok(report)
}

/// Both square roots of `n` lie in F_{p^sub}.
fn roots_in_subfield(f: &Field, n: i64, sub: u32) -> Result<(bool, String)> {
    match f.sqrt(f.from_int(n))? {
        None => Ok((false, format!("{n} has no square root"))),
        Some(y) => {
            let neg = f.neg(y)?;
            let ok = f.in_subfield(y, sub)? && f.in_subfield(neg, sub)?;
            Ok((ok, format!("±#{} with y^(p^{sub}) = y: {ok}", y.index())))
        }
    }
}

fn unit_circle(k: u32, report: &mut LemmaReport) -> Result<()> {
    if k == 0 || k % 2 == 1 {
        return Err(Error::Hypothesis(format!(
            "unit-circle suite needs even k, got {k}"
        )));
    }
    let (g, mu) = conj2_map(k, false)?;
    let f = g.field().clone();
    let q = 5u64.pow(k);

    let two_sq = f.is_square(f.from_int(2))?;
    let minus_two_sq = f.is_square(f.from_int(-2))?;
    report.push(
        "±2 are squares in F_{q^2}",
        two_sq && minus_two_sq,
        format!("2: {two_sq}, -2: {minus_two_sq}"),
    );
    let (ok, detail) = roots_in_subfield(&f, 2, k)?;
    report.push("sqrt(2) in F_q", ok, detail);
    let (ok, detail) = roots_in_subfield(&f, -2, k)?;
    report.push("sqrt(-2) in F_q", ok, detail);

    let conj_inverse = mu.iter().all(|x| {
        let bar = f.frobenius_idx(x.index(), k);
        f.mul_idx(bar, x.index()) == 1
    });
    report.push(
        "conjugate is inverse on mu",
        conj_inverse,
        format!("|mu| = {}", mu.len()),
    );

    let split = omega_split(&mu)?;
    let half = (q + 1) / 2;
    report.push("Omega+ and Omega- disjoint", split.disjoint, "");
    let sizes_ok =
        split.covers && split.plus.len() as u64 == half && split.minus.len() as u64 == half;
    report.push(
        "Omega+ and Omega- cover mu",
        sizes_ok,
        format!(
            "|Omega+| = {}, |Omega-| = {}, (q+1)/2 = {half}",
            split.plus.len(),
            split.minus.len()
        ),
    );

    let one = f.one();
    let minus_one = f.neg(one)?;
    for (label, view) in [("Omega+", &split.plus), ("Omega-", &split.minus)] {
        for (sum_label, sum) in [("1", one), ("-1", minus_one)] {
            let count = check_sum_product_system(view, sum, one)?;
            report.push(
                format!("xy=1, x+y={sum_label} unsolvable in {label}"),
                count == 0,
                format!("solutions: {count}"),
            );
        }
    }

    for (label, view) in [("Omega+", &split.plus), ("Omega-", &split.minus)] {
        let r = permutes_subset(&g, view)?;
        report.push(
            format!("g({label}) in {label}"),
            r.closed,
            format!("escape: {:?}", r.escape),
        );
        report.push(
            format!("g permutes {label}"),
            r.is_pp,
            format!("injective: {:?}, witness: {:?}", r.injective, r.witness),
        );
    }
    let r = is_permutation(&g, &mu)?;
    report.push(
        format!("g permutes mu_{}", q + 1),
        r.is_pp,
        format!("{} evaluations", r.evals),
    );
    Ok(())
}

fn irreducible_both_ways(f: &Field, a: i64, b: i64) -> Result<(bool, String)> {
    let (disc, by_criterion) = f.quad_discriminant_irreducible(f.from_int(a), f.from_int(b))?;
    let quad = DensePolynomial::from_ints(f, &[b, a, 1]);
    let roots = f
        .elements()
        .filter(|&u| quad.eval(u).map(Elem::is_zero).unwrap_or(false))
        .count();
    let by_search = roots == 0;
    Ok((
        by_criterion && by_search,
        format!(
            "discriminant #{} non-square: {by_criterion}; roots found: {roots}",
            disc.index()
        ),
    ))
}

fn square_classes(k: u32, report: &mut LemmaReport) -> Result<()> {
    if k % 2 == 0 {
        return Err(Error::Hypothesis(format!(
            "square-class suite needs odd k, got {k}"
        )));
    }
    let map = conj1_map(k, false)?;
    let f = map.field().clone();
    let (sq, sq2) = square_class_split(&f)?;
    let disjoint = sq.indices().iter().all(|&x| !sq2.contains_idx(x));
    let covers = sq.len() + sq2.len() == f.order() as usize - 1;
    report.push(
        "Omega1 and Omega2 partition F*",
        disjoint && covers,
        format!("|Omega1| = {}, |Omega2| = {}", sq.len(), sq2.len()),
    );

    for (label, view) in [("Omega1", &sq), ("Omega2", &sq2)] {
        let r = permutes_subset(&map, view)?;
        report.push(
            format!("f({label}) in {label}"),
            r.closed,
            format!("escape: {:?}", r.escape),
        );
        report.push(
            format!("f permutes {label}"),
            r.is_pp,
            format!("witness: {:?}", r.witness),
        );
    }

    for (name, a, b) in [
        ("u^2+u+1 irreducible", 1, 1),
        ("u^2-2u-1 irreducible", -2, -1),
        ("x^2+x+2 has no roots", 1, 2),
    ] {
        let (ok, detail) = irreducible_both_ways(&f, a, b)?;
        report.push(name, ok, detail);
    }

    let r = is_permutation(&map, &f)?;
    report.push(
        format!("f is a PP of F_{}", f.order()),
        r.is_pp,
        format!("{} evaluations", r.evals),
    );
    Ok(())
}

fn trace_suite(r: u32, report: &mut LemmaReport) -> Result<()> {
    let fam = TraceFamily::new(r)?;
    let f = fam.field().clone();
    let gammas = fam.gammas();
    let q = fam.q();
    report.push("family exponent", true, format!("q = {q}, k = {}", fam.k()));
    report.push(
        "gamma set nonempty",
        !gammas.is_empty(),
        format!("|gamma set| = {}", gammas.len()),
    );

    let mut in_fq = true;
    for &g in &gammas {
        in_fq &= f.in_subfield(g, r)?;
    }
    report.push("gamma set inside F_q", in_fq, "");

    if r == 2 {
        let cubic = DensePolynomial::from_ints(&f, &[1, 1])
            .mul(&DensePolynomial::from_ints(&f, &[-1, -1, 1]))?;
        let roots: Vec<Elem> = f
            .elements()
            .filter(|&x| cubic.eval(x).map(Elem::is_zero).unwrap_or(false))
            .collect();
        report.push(
            "gamma set = roots of (g+1)(g^2-g-1)",
            roots == gammas,
            format!(
                "roots: {:?}",
                roots.iter().map(|x| x.index()).collect::<Vec<_>>()
            ),
        );
    }
    if let Some(example) = match r {
        2 => Some(ExampleId::E2),
        3 => Some(ExampleId::E3),
        _ => None,
    } {
        let spec = example.spec();
        let same_params = spec.q() == q && spec.ks == [trace_family_k(r)];
        let ex_gammas = example.gammas(&f)?;
        let contained = ex_gammas.iter().all(|g| gammas.contains(g));
        report.push(
            format!("matches example {example}"),
            same_params && contained,
            format!(
                "example gammas {} contained in family: {contained}",
                ex_gammas.len()
            ),
        );
    }

    let mut checker = PermChecker::new();
    let inputs: Vec<u32> = if f.order() <= 6561 {
        (0..f.order()).collect()
    } else {
        (0..f.order())
            .step_by((f.order() / 1000) as usize)
            .collect()
    };
    for &g in &gammas {
        let params = fam.params(g)?;
        let map = params.map()?;
        let pp = checker.is_bijection(&map, Domain::Field(&f))?;
        report.push(format!("gamma #{} gives a PP", g.index()), pp, "");
        let mut failures = 0;
        for &a in &inputs {
            let a = f.elem(a)?;
            match invert_trace_pp(&params, a) {
                Ok(x) if map.eval(x)? == a => {}
                _ => failures += 1,
            }
        }
        report.push(
            format!("gamma #{} inverter round-trips", g.index()),
            failures == 0,
            format!("{} inputs, {failures} failures", inputs.len()),
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_circle_k2_passes() {
        let r = run_lemma_suite(LemmaSet::for_k(2)).unwrap();
        assert!(r.all_pass(), "{r}");
        assert!(r
            .line("Omega+ and Omega- cover mu")
            .unwrap()
            .detail
            .contains("|Omega+| = 13"));
    }

    #[test]
    fn square_classes_k1_passes() {
        let r = run_lemma_suite(LemmaSet::for_k(1)).unwrap();
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn trace_r2_passes() {
        let r = run_lemma_suite(LemmaSet::TraceFamily { r: 2 }).unwrap();
        assert!(r.all_pass(), "{r}");
        assert!(r.line("gamma set = roots of (g+1)(g^2-g-1)").is_some());
    }

    #[test]
    fn wrong_parity_is_refused() {
        assert!(run_lemma_suite(LemmaSet::UnitCircle { k: 3 }).is_err());
        assert!(run_lemma_suite(LemmaSet::SquareClasses { k: 2 }).is_err());
    }
}
