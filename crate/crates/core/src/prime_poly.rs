//! Polynomials over the prime field F_p as coefficient vectors (constant term
//! first). Only what modulus selection needs: reduction, modular powering and
//! gcd for Rabin's irreducibility test.

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Remainder of `a` modulo a nonzero `f`.
fn rem(mut a: Vec<u32>, f: &[u32], p: u32) -> Vec<u32> {
    trim(&mut a);
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p) as u64;
    let p64 = p as u64;
    while a.len() > df {
        let da = a.len() - 1;
        let c = a[da] as u64 * lead_inv % p64;
        let shift = da - df;
        for (i, &fi) in f.iter().enumerate() {
            let sub = c * fi as u64 % p64;
            a[shift + i] = ((a[shift + i] as u64 + p64 - sub) % p64) as u32;
        }
        trim(&mut a);
    }
    a
}

fn mulmod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p64 = p as u64;
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p64;
        }
    }
    rem(prod.into_iter().map(|c| c as u32).collect(), f, p)
}

fn powmod(base: &[u32], mut e: u64, f: &[u32], p: u32) -> Vec<u32> {
    let mut result = rem(vec![1], f, p);
    let mut b = rem(base.to_vec(), f, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(&result, &b, f, p);
        }
        b = mulmod(&b, &b, f, p);
        e >>= 1;
    }
    result
}

fn gcd(mut a: Vec<u32>, mut b: Vec<u32>, p: u32) -> Vec<u32> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn sub_x(mut a: Vec<u32>, p: u32) -> Vec<u32> {
    if a.len() < 2 {
        a.resize(2, 0);
    }
    a[1] = (a[1] + p - 1) % p;
    trim(&mut a);
    a
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn prime_factors(n: u64) -> Vec<u64> {
    distinct_prime_factors(n)
}

/// Rabin's test for a monic `f` of degree `m` over F_p.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    let x = vec![0, 1];
    let p64 = p as u64;
    // x^{p^i} mod f for i = 0..=m
    let mut frob = Vec::with_capacity(m + 1);
    frob.push(rem(x.clone(), f, p));
    for i in 0..m {
        let next = powmod(&frob[i], p64, f, p);
        frob.push(next);
    }
    if sub_x(frob[m].clone(), p) != Vec::<u32>::new() {
        return false;
    }
    for l in distinct_prime_factors(m as u64) {
        let h = sub_x(frob[m / l as usize].clone(), p);
        let g = gcd(f.to_vec(), h, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}
