//! Checks shared by the oracle, property and acceptance targets. Each returns
//! `Err(description)` on the first disagreement.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ffperm::families::{niho_trinomial, NihoParams};
use ffperm::field::{Elem, Field};
use ffperm::perm::PermChecker;
use ffperm::poly::{DensePolynomial, FieldMap, FnMap, TableMap};
use ffperm::search::{canonical_k, search_trace_pps, SearchConfig};
use ffperm::views::{mu_view, Domain};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bijection by sorting the value table; shares nothing with the occupancy
/// checker.
pub fn sort_oracle(values: &[u32]) -> bool {
    let mut v = values.to_vec();
    v.sort_unstable();
    v.iter().enumerate().all(|(i, &y)| y as usize == i)
}

pub fn occupancy_vs_sort(maps: usize, seed: u64) -> Check {
    let f = Field::new(11, 2).unwrap();
    let n = f.order();
    let mut r = rng(seed);
    let mut checker = PermChecker::new();
    let mut pp = 0;
    for i in 0..maps {
        // half random permutations, half random functions, so both verdicts occur
        let values: Vec<u32> = if i % 2 == 0 {
            let mut v: Vec<u32> = (0..n).collect();
            for a in (1..v.len()).rev() {
                v.swap(a, r.gen_range(0..=a));
            }
            v
        } else {
            (0..n).map(|_| r.gen_range(0..n)).collect()
        };
        let table = values.clone();
        let map = FnMap::new(&f, format!("random-{i}"), move |f, x| {
            f.elem(table[x.index() as usize])
        });
        let fast = checker
            .is_bijection(&map, Domain::Field(&f))
            .map_err(|e| e.to_string())?;
        let slow = sort_oracle(&values);
        if fast != slow {
            return Err(format!("map {i}: occupancy {fast}, sort {slow}"));
        }
        pp += fast as usize;
    }
    if pp == 0 || pp == maps {
        return Err(format!("degenerate sample: {pp} of {maps} permutations"));
    }
    Ok(())
}

/// Sparse Niho evaluation against a tabulated copy, plus the (s, λ₁) ↔ (t, λ₂)
/// symmetry, over all k = 1 candidates.
pub fn niho_sparse_vs_table() -> Check {
    let f = Field::new(5, 2).unwrap();
    let candidates: Vec<NihoParams> = NihoParams::enumerate(1).collect();
    if candidates.len() != 100 {
        return Err(format!("expected 100 candidates, got {}", candidates.len()));
    }
    let mut checker = PermChecker::new();
    for p in &candidates {
        let poly = niho_trinomial(&f, p).map_err(|e| e.to_string())?;
        let table = TableMap::tabulate(&poly, "niho").map_err(|e| e.to_string())?;
        for x in f.elements() {
            // direct Horner-free evaluation from the definition
            let (e1, e2) = p.exponents();
            let direct = f
                .add(
                    f.add(
                        x,
                        f.mul(f.from_int(p.lambda1 as i64), f.pow(x, e1).unwrap())
                            .unwrap(),
                    )
                    .unwrap(),
                    f.mul(f.from_int(p.lambda2 as i64), f.pow(x, e2).unwrap())
                        .unwrap(),
                )
                .unwrap();
            let sparse = poly.eval(x).unwrap();
            if sparse != direct || table.values()[x.index() as usize] != direct.index() {
                return Err(format!("{p:?} disagrees at #{}", x.index()));
            }
        }
        let swapped = niho_trinomial(&f, &p.swapped()).map_err(|e| e.to_string())?;
        let a = checker.is_bijection(&poly, Domain::Field(&f)).unwrap();
        let b = checker.is_bijection(&table, Domain::Field(&f)).unwrap();
        let c = checker.is_bijection(&swapped, Domain::Field(&f)).unwrap();
        if a != b || a != c {
            return Err(format!("{p:?}: sparse {a}, table {b}, swapped {c}"));
        }
    }
    Ok(())
}

/// Every (k, γ) over F_49 with q = 7, n = 2 checked by direct evaluation and
/// sorting, no coset reduction and no early abort.
pub fn brute_force_trace_pps(field: &Field, base_degree: u32) -> BTreeSet<(u64, u32)> {
    let order = field.order();
    let mut out = BTreeSet::new();
    for k in 1..order as u64 - 1 {
        for g in 1..order {
            let gamma = field.elem(g).unwrap();
            let values: Vec<u32> = field
                .elements()
                .map(|x| {
                    let t = field.trace(field.pow(x, k).unwrap(), base_degree).unwrap();
                    field.add(x, field.mul(gamma, t).unwrap()).unwrap().index()
                })
                .collect();
            if sort_oracle(&values) {
                out.insert((k, g));
            }
        }
    }
    out
}

pub fn optimized_search_vs_brute_force() -> Check {
    let f = Field::new(7, 2).unwrap();
    let brute = brute_force_trace_pps(&f, 1);
    for early_abort in [true, false] {
        let mut cfg = SearchConfig::new(49);
        cfg.fields = Some(vec![(7, 1, 2)]);
        cfg.jobs = 2;
        cfg.early_abort = early_abort;
        let mut fast = BTreeSet::new();
        search_trace_pps(&cfg, |r| {
            for &k in &r.k_coset {
                fast.insert((k, r.gamma));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
        if fast != brute {
            let missing: Vec<_> = brute.difference(&fast).take(5).collect();
            let extra: Vec<_> = fast.difference(&brute).take(5).collect();
            return Err(format!(
                "early_abort={early_abort}: missing {missing:?}, extra {extra:?}"
            ));
        }
    }
    if brute.is_empty() {
        return Err("brute force found nothing".into());
    }
    Ok(())
}

pub fn random_elem(f: &Field, r: &mut impl Rng) -> Elem {
    f.elem(r.gen_range(0..f.order())).unwrap()
}

pub fn field_axioms(f: &Field, triples: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let (zero, one) = (f.zero(), f.one());
    for _ in 0..triples {
        let (a, b, c) = (
            random_elem(f, &mut r),
            random_elem(f, &mut r),
            random_elem(f, &mut r),
        );
        let add = |x, y| f.add(x, y).unwrap();
        let mul = |x, y| f.mul(x, y).unwrap();
        let ok = add(a, b) == add(b, a)
            && mul(a, b) == mul(b, a)
            && add(add(a, b), c) == add(a, add(b, c))
            && mul(mul(a, b), c) == mul(a, mul(b, c))
            && mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
            && add(a, zero) == a
            && mul(a, one) == a
            && add(a, f.neg(a).unwrap()) == zero
            && f.sub(a, b).unwrap() == add(a, f.neg(b).unwrap())
            && (a.is_zero() || mul(a, f.inv(a).unwrap()) == one);
        if !ok {
            return Err(format!(
                "{}: axioms fail at #{} #{} #{}",
                f.id(),
                a.index(),
                b.index(),
                c.index()
            ));
        }
    }
    Ok(())
}

pub fn frobenius_is_automorphism(f: &Field, samples: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    for _ in 0..samples {
        let (a, b) = (random_elem(f, &mut r), random_elem(f, &mut r));
        let i = r.gen_range(0..f.degree() * 2);
        let fr = |x| f.frobenius(x, i).unwrap();
        let p_pow = f
            .pow(a, (f.characteristic() as u64).pow(i % f.degree()))
            .unwrap();
        if fr(f.add(a, b).unwrap()) != f.add(fr(a), fr(b)).unwrap()
            || fr(f.mul(a, b).unwrap()) != f.mul(fr(a), fr(b)).unwrap()
            || fr(a) != p_pow
        {
            return Err(format!(
                "{}: Frobenius^{i} fails at #{} #{}",
                f.id(),
                a.index(),
                b.index()
            ));
        }
    }
    if f.frobenius(f.generator(), f.degree()).unwrap() != f.generator() {
        return Err("Frobenius^m is not the identity".into());
    }
    Ok(())
}

/// All fields of order ≤ `bound` with odd characteristic.
pub fn small_fields(bound: u32) -> Vec<Field> {
    let mut out = Vec::new();
    for p in [3u32, 5, 7, 11, 13, 17, 19, 23] {
        let mut m = 1;
        while (p as u64).pow(m) <= bound as u64 {
            out.push(Field::new(p, m).unwrap());
            m += 1;
        }
    }
    out
}

pub fn trace_lands_in_subfield(bound: u32) -> Check {
    for f in small_fields(bound) {
        for sub in (1..=f.degree()).filter(|s| f.degree() % s == 0) {
            for x in f.elements() {
                let t = f.trace(x, sub).unwrap();
                if !f.in_subfield(t, sub).unwrap() {
                    return Err(format!(
                        "{}: Tr to degree {sub} of #{} escapes",
                        f.id(),
                        x.index()
                    ));
                }
            }
        }
    }
    Ok(())
}

pub fn squares_match_enumeration(bound: u32) -> Check {
    for f in small_fields(bound) {
        let mut is_sq = vec![false; f.order() as usize];
        for x in f.elements() {
            is_sq[f.mul(x, x).unwrap().index() as usize] = true;
        }
        for x in f.elements() {
            if f.is_square(x).unwrap() != is_sq[x.index() as usize] {
                return Err(format!("{}: is_square(#{}) wrong", f.id(), x.index()));
            }
            if let Some(y) = f.sqrt(x).unwrap() {
                if f.mul(y, y).unwrap() != x {
                    return Err(format!("{}: sqrt(#{}) wrong", f.id(), x.index()));
                }
            }
        }
    }
    Ok(())
}

/// x² + ax + b irreducible ⇔ a² − 4b is a non-square, against root search.
pub fn quadratic_criterion(f: &Field) -> Check {
    for a in f.elements() {
        for b in f.elements() {
            let (_, irr) = f.quad_discriminant_irreducible(a, b).unwrap();
            let quad = DensePolynomial::new(f, vec![b, a, f.one()]).unwrap();
            let has_root = f.elements().any(|x| quad.eval(x).unwrap().is_zero());
            if irr == has_root {
                return Err(format!(
                    "{}: criterion wrong for a=#{} b=#{}",
                    f.id(),
                    a.index(),
                    b.index()
                ));
            }
        }
    }
    Ok(())
}

/// Tr(x^k) and Tr(x^{kq}) agree as functions, so exponents in one q-coset
/// give the same map.
pub fn coset_exponents_agree(p: u32, j: u32, n: u32) -> Check {
    let f = Field::new(p, j * n).unwrap();
    let q = (p as u64).pow(j);
    for k in 1..f.order() as u64 - 1 {
        let (_, coset) = canonical_k(k, q, n);
        let tr = |e: u64| -> Vec<u32> {
            f.elements()
                .map(|x| f.trace(f.pow(x, e).unwrap(), j).unwrap().index())
                .collect()
        };
        let base = tr(k);
        for &e in &coset {
            if tr(e) != base {
                return Err(format!("{}: Tr(x^{k}) != Tr(x^{e})", f.id()));
            }
        }
    }
    Ok(())
}

pub fn mu_is_a_subgroup(k: u32) -> Check {
    let f = Field::new(5, 2 * k).unwrap();
    let q = 5u64.pow(k);
    let mu = mu_view(&f, q).unwrap();
    if mu.len() as u64 != q + 1 {
        return Err(format!("|mu| = {}", mu.len()));
    }
    for x in mu.iter() {
        if !mu.contains(f.inv(x).unwrap()) || f.pow(x, q + 1).unwrap() != f.one() {
            return Err(format!("#{} breaks the subgroup", x.index()));
        }
        for y in mu.iter().take(16) {
            if !mu.contains(f.mul(x, y).unwrap()) {
                return Err(format!("#{}·#{} leaves mu", x.index(), y.index()));
            }
        }
    }
    Ok(())
}

/// Table-backed and schoolbook arithmetic agree on random pairs.
pub fn backends_agree(p: u32, m: u32, samples: usize, seed: u64) -> Check {
    let fast = Field::new(p, m).unwrap();
    let slow = Field::with_table_cap(p, m, 0).unwrap();
    if !fast.has_tables() || slow.has_tables() || fast.modulus() != slow.modulus() {
        return Err("backend setup".into());
    }
    let mut r = rng(seed);
    for _ in 0..samples {
        let (a, b) = (r.gen_range(0..fast.order()), r.gen_range(0..fast.order()));
        let e = r.gen_range(0..1_000_000u64);
        if fast.mul_idx(a, b) != slow.mul_idx(a, b)
            || fast.pow_idx(a, e) != slow.pow_idx(a, e)
            || (a != 0 && fast.inv_idx(a) != slow.inv_idx(a))
            || fast.is_square_idx(a) != slow.is_square_idx(a)
        {
            return Err(format!("F_{p}^{m}: backends disagree at #{a} #{b}"));
        }
    }
    Ok(())
}
