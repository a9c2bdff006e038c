//! Deterministic construction of F_{p^m} and element arithmetic.
//!
//! An element is stored as the integer `sum c_i p^i` of its coefficient vector
//! over the polynomial basis `1, x, ..., x^{m-1}`. The modulus is the monic
//! irreducible whose non-leading coefficient vector has the smallest such
//! integer, and the generator is the primitive element of smallest index, so
//! two constructions of the same `(p, m)` agree bit for bit.
//!
//! Fields up to a configurable table cap get exp/log tables and every
//! multiplicative operation becomes a lookup. Larger fields fall back to
//! schoolbook multiplication with reduction by the modulus.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime_poly;

/// Largest field order accepted by [`Field::new`].
pub const ORDER_CAP: u64 = 1 << 24;

/// Fields up to this order get exp/log tables by default.
pub const DEFAULT_TABLE_CAP: u64 = 1 << 20;

/// Identity of a field. Construction is deterministic, so `(p, m)` names the
/// field completely.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldId {
    pub p: u32,
    pub m: u32,
}

impl fmt::Display for FieldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{}", self.p, self.m)
        }
    }
}

/// One field element, tagged with the field it belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    field: FieldId,
    index: u32,
}

impl Elem {
    pub fn index(self) -> u32 {
        self.index
    }

    pub fn field_id(self) -> FieldId {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.index == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.index)
    }
}

/// Everything needed to rebuild a field, embedded in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub m: u32,
    /// Monic modulus, constant term first.
    pub modulus: Vec<u32>,
    pub generator: u32,
}

struct Tables {
    /// exp[i] = index of generator^i, stored twice over so that a sum of two
    /// logs never needs reduction.
    exp: Vec<u32>,
    /// log[0] is unused.
    log: Vec<u32>,
}

struct Inner {
    id: FieldId,
    order: u32,
    modulus: Vec<u32>,
    generator: u32,
    /// p^0 ..= p^m
    pow_p: Vec<u32>,
    tables: Option<Tables>,
}

/// A finite field F_{p^m}. Cheap to clone and safe to share between threads.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.inner.id.p)
            .field("m", &self.inner.id.m)
            .field("modulus", &self.inner.modulus)
            .field("generator", &self.inner.generator)
            .field("tables", &self.inner.tables.is_some())
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.inner.id == other.inner.id
    }
}

impl Eq for Field {}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn new(p: u32, m: u32) -> Result<Field> {
        Field::with_table_cap(p, m, DEFAULT_TABLE_CAP)
    }

    /// Like [`Field::new`], building exp/log tables only when the order is at
    /// most `table_cap`.
    pub fn with_table_cap(p: u32, m: u32, table_cap: u64) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let too_large = Error::OrderTooLarge {
            p: p as u64,
            m,
            cap: ORDER_CAP,
        };
        let order = (p as u64).checked_pow(m).ok_or(too_large)?;
        if order > ORDER_CAP {
            return Err(Error::OrderTooLarge {
                p: p as u64,
                m,
                cap: ORDER_CAP,
            });
        }
        let pow_p: Vec<u32> = (0..=m).map(|i| p.pow(i)).collect();
        let modulus = smallest_irreducible(p, m, order);
        let mut inner = Inner {
            id: FieldId { p, m },
            order: order as u32,
            modulus,
            generator: 0,
            pow_p,
            tables: None,
        };
        inner.generator = smallest_primitive(&inner);
        if order <= table_cap {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(Field {
            inner: Arc::new(inner),
        })
    }

    pub fn id(&self) -> FieldId {
        self.inner.id
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.id.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.id.m
    }

    pub fn order(&self) -> u32 {
        self.inner.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn has_tables(&self) -> bool {
        self.inner.tables.is_some()
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.inner.id.p,
            m: self.inner.id.m,
            modulus: self.inner.modulus.clone(),
            generator: self.inner.generator,
        }
    }

    pub fn elem(&self, index: u32) -> Result<Elem> {
        if index >= self.inner.order {
            return Err(Error::IndexOutOfRange {
                index: index as u64,
                order: self.inner.order as u64,
            });
        }
        Ok(Elem {
            field: self.inner.id,
            index,
        })
    }

    pub(crate) fn wrap(&self, index: u32) -> Elem {
        debug_assert!(index < self.inner.order);
        Elem {
            field: self.inner.id,
            index,
        }
    }

    pub fn zero(&self) -> Elem {
        self.wrap(0)
    }

    pub fn one(&self) -> Elem {
        self.wrap(1)
    }

    pub fn generator(&self) -> Elem {
        self.wrap(self.inner.generator)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        let p = self.inner.id.p as i64;
        self.wrap(n.rem_euclid(p) as u32)
    }

    /// All elements in ascending index order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.inner.order).map(move |i| self.wrap(i))
    }

    pub fn check(&self, x: Elem) -> Result<u32> {
        if x.field != self.inner.id {
            return Err(Error::MixedFields {
                expected: self.inner.id,
                found: x.field,
            });
        }
        Ok(x.index)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.wrap(self.add_idx(self.check(a)?, self.check(b)?)))
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.wrap(self.sub_idx(self.check(a)?, self.check(b)?)))
    }

    pub fn neg(&self, a: Elem) -> Result<Elem> {
        Ok(self.wrap(self.neg_idx(self.check(a)?)))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.wrap(self.mul_idx(self.check(a)?, self.check(b)?)))
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        let a = self.check(a)?;
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.wrap(self.inv_idx(a)))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        let inv = self.inv(b)?;
        self.mul(a, inv)
    }

    /// `a^e` for any `e`; `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Result<Elem> {
        Ok(self.wrap(self.pow_idx(self.check(a)?, e)))
    }

    /// `x^{p^i}`. The iterate count is taken modulo the degree.
    pub fn frobenius(&self, x: Elem, i: u32) -> Result<Elem> {
        Ok(self.wrap(self.frobenius_idx(self.check(x)?, i)))
    }

    /// Trace from this field down to its subfield F_{p^sub}:
    /// `x + x^{p^sub} + x^{p^{2 sub}} + ... `.
    pub fn trace(&self, x: Elem, sub: u32) -> Result<Elem> {
        let x = self.check(x)?;
        let m = self.inner.id.m;
        if sub == 0 || m % sub != 0 {
            return Err(Error::NotASubfield { sub, degree: m });
        }
        Ok(self.wrap(self.trace_idx(x, sub)))
    }

    /// Whether `x` lies in the subfield F_{p^sub}, i.e. `x^{p^sub} = x`.
    pub fn in_subfield(&self, x: Elem, sub: u32) -> Result<bool> {
        let x = self.check(x)?;
        let m = self.inner.id.m;
        if sub == 0 || m % sub != 0 {
            return Err(Error::NotASubfield { sub, degree: m });
        }
        Ok(self.frobenius_idx(x, sub) == x)
    }

    pub fn is_square(&self, x: Elem) -> Result<bool> {
        let x = self.check(x)?;
        self.require_odd()?;
        Ok(self.is_square_idx(x))
    }

    /// A square root of `x`, the one of smaller index when there are two.
    pub fn sqrt(&self, x: Elem) -> Result<Option<Elem>> {
        let x = self.check(x)?;
        self.require_odd()?;
        Ok(self.sqrt_idx(x).map(|y| self.wrap(y)))
    }

    /// Discriminant `a^2 - 4b` of `u^2 + a u + b`, and whether the quadratic is
    /// irreducible (the discriminant is a non-square).
    pub fn quad_discriminant_irreducible(&self, a: Elem, b: Elem) -> Result<(Elem, bool)> {
        self.require_odd()?;
        let a2 = self.mul(a, a)?;
        let four_b = self.mul(self.from_int(4), b)?;
        let disc = self.sub(a2, four_b)?;
        Ok((disc, !self.is_square_idx(disc.index)))
    }

    fn require_odd(&self) -> Result<()> {
        if self.inner.id.p == 2 {
            Err(Error::CharacteristicTwo)
        } else {
            Ok(())
        }
    }

    // Index-level operations. These skip field-tag checks and are meant for
    // hot loops that already hold validated indices.

    pub fn add_idx(&self, mut a: u32, mut b: u32) -> u32 {
        let p = self.inner.id.p;
        let mut out = 0;
        let mut place = 1;
        while a != 0 || b != 0 {
            let s = a % p + b % p;
            let d = if s >= p { s - p } else { s };
            out += d * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out
    }

    pub fn neg_idx(&self, mut a: u32) -> u32 {
        let p = self.inner.id.p;
        let mut out = 0;
        let mut place = 1;
        while a != 0 {
            let d = a % p;
            if d != 0 {
                out += (p - d) * place;
            }
            place *= p;
            a /= p;
        }
        out
    }

    pub fn sub_idx(&self, a: u32, b: u32) -> u32 {
        self.add_idx(a, self.neg_idx(b))
    }

    pub fn mul_idx(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.inner.tables {
            Some(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize],
            None => mul_schoolbook(&self.inner, a, b),
        }
    }

    pub fn inv_idx(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        match &self.inner.tables {
            Some(t) => {
                let n1 = self.inner.order - 1;
                t.exp[((n1 - t.log[a as usize]) % n1) as usize]
            }
            None => self.pow_idx(a, self.inner.order as u64 - 2),
        }
    }

    pub fn pow_idx(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        match &self.inner.tables {
            Some(t) => {
                let n1 = (self.inner.order - 1) as u128;
                let l = (t.log[a as usize] as u128 * e as u128) % n1;
                t.exp[l as usize]
            }
            None => pow_schoolbook(&self.inner, a, e),
        }
    }

    /// Discrete logarithm to the base of the generator, when tables exist.
    pub fn log_idx(&self, a: u32) -> Option<u32> {
        match &self.inner.tables {
            Some(t) if a != 0 => Some(t.log[a as usize]),
            _ => None,
        }
    }

    /// Generator raised to `e`, reduced modulo the group order.
    pub fn exp_idx(&self, e: u64) -> u32 {
        let n1 = (self.inner.order - 1) as u64;
        match &self.inner.tables {
            Some(t) => t.exp[(e % n1) as usize],
            None => pow_schoolbook(&self.inner, self.inner.generator, e % n1),
        }
    }

    pub fn frobenius_idx(&self, x: u32, i: u32) -> u32 {
        let i = i % self.inner.id.m;
        if i == 0 {
            return x;
        }
        self.pow_idx(x, self.inner.pow_p[i as usize] as u64)
    }

    pub(crate) fn trace_idx(&self, x: u32, sub: u32) -> u32 {
        let mut acc = 0;
        let mut term = x;
        for _ in 0..self.inner.id.m / sub {
            acc = self.add_idx(acc, term);
            term = self.frobenius_idx(term, sub);
        }
        acc
    }

    pub fn is_square_idx(&self, x: u32) -> bool {
        if x == 0 {
            return true;
        }
        match &self.inner.tables {
            Some(t) => t.log[x as usize] % 2 == 0,
            None => self.pow_idx(x, (self.inner.order as u64 - 1) / 2) == 1,
        }
    }

    fn sqrt_idx(&self, x: u32) -> Option<u32> {
        if x == 0 {
            return Some(0);
        }
        let root = match &self.inner.tables {
            Some(t) => {
                let l = t.log[x as usize];
                if l % 2 == 1 {
                    return None;
                }
                t.exp[(l / 2) as usize]
            }
            None => self.tonelli_shanks(x)?,
        };
        Some(root.min(self.neg_idx(root)))
    }

    fn tonelli_shanks(&self, a: u32) -> Option<u32> {
        if !self.is_square_idx(a) {
            return None;
        }
        let n1 = self.inner.order as u64 - 1;
        let s = n1.trailing_zeros();
        let odd = n1 >> s;
        // the generator is a non-square
        let mut c = self.pow_idx(self.inner.generator, odd);
        let mut x = self.pow_idx(a, odd.div_ceil(2));
        let mut t = self.pow_idx(a, odd);
        let mut m = s;
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul_idx(t2, t2);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.mul_idx(b, b);
            }
            m = i;
            c = self.mul_idx(b, b);
            t = self.mul_idx(t, c);
            x = self.mul_idx(x, b);
        }
        Some(x)
    }
}

fn to_digits(inner: &Inner, mut a: u32) -> Vec<u32> {
    let p = inner.id.p;
    let mut out = vec![0; inner.id.m as usize];
    for d in out.iter_mut() {
        *d = a % p;
        a /= p;
    }
    out
}

fn from_digits(inner: &Inner, digits: &[u32]) -> u32 {
    digits.iter().zip(&inner.pow_p).map(|(d, w)| d * w).sum()
}

fn mul_schoolbook(inner: &Inner, a: u32, b: u32) -> u32 {
    let p = inner.id.p as u64;
    let m = inner.id.m as usize;
    let da = to_digits(inner, a);
    let db = to_digits(inner, b);
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
        }
    }
    // x^m = -(c_0 + ... + c_{m-1} x^{m-1})
    for deg in (m..2 * m - 1).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, &mi) in inner.modulus[..m].iter().enumerate() {
            let sub = c * mi as u64 % p;
            prod[deg - m + i] = (prod[deg - m + i] + p - sub) % p;
        }
    }
    let digits: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
    from_digits(inner, &digits)
}

fn pow_schoolbook(inner: &Inner, a: u32, mut e: u64) -> u32 {
    let mut result = 1;
    let mut base = a;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_schoolbook(inner, result, base);
        }
        e >>= 1;
        if e > 0 {
            base = mul_schoolbook(inner, base, base);
        }
    }
    result
}

fn smallest_irreducible(p: u32, m: u32, order: u64) -> Vec<u32> {
    for v in 0..order {
        let mut coeffs = Vec::with_capacity(m as usize + 1);
        let mut rest = v;
        for _ in 0..m {
            coeffs.push((rest % p as u64) as u32);
            rest /= p as u64;
        }
        coeffs.push(1);
        if prime_poly::is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_{p}")
}

fn smallest_primitive(inner: &Inner) -> u32 {
    let n1 = inner.order as u64 - 1;
    if n1 == 1 {
        return 1;
    }
    let factors = prime_poly::prime_factors(n1);
    (1..inner.order)
        .find(|&g| {
            factors
                .iter()
                .all(|&l| pow_schoolbook(inner, g, n1 / l) != 1)
        })
        .expect("the multiplicative group is cyclic")
}

fn build_tables(inner: &Inner) -> Tables {
    let n1 = inner.order as usize - 1;
    let mut exp = vec![0u32; 2 * n1];
    let mut log = vec![0u32; inner.order as usize];
    let mut cur = 1u32;
    for i in 0..n1 {
        exp[i] = cur;
        exp[i + n1] = cur;
        log[cur as usize] = i as u32;
        cur = mul_schoolbook(inner, cur, inner.generator);
    }
    Tables { exp, log }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both_backends(p: u32, m: u32) -> (Field, Field) {
        (
            Field::new(p, m).unwrap(),
            Field::with_table_cap(p, m, 0).unwrap(),
        )
    }

    #[test]
    fn prime_field_uses_modulus_x() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 5);
        assert_eq!(f.inv(f.from_int(4)).unwrap(), f.from_int(4));
        assert_eq!(f.generator().index(), 2);
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(Field::new(5, 2).unwrap().modulus(), &[2, 0, 1]);
    }

    #[test]
    fn f9_class_of_x_squares_to_minus_one() {
        for f in [
            Field::new(3, 2).unwrap(),
            Field::with_table_cap(3, 2, 0).unwrap(),
        ] {
            let alpha = f.elem(3).unwrap();
            assert_eq!(f.mul(alpha, alpha).unwrap().index(), 2);
            let a3 = f.frobenius(alpha, 1).unwrap();
            assert_eq!(a3, f.neg(alpha).unwrap());
        }
    }

    #[test]
    fn f25_power_of_two() {
        let f = Field::new(5, 2).unwrap();
        assert_eq!(f.pow(f.from_int(2), 12).unwrap(), f.one());
        assert_eq!(f.pow(f.from_int(2), 4).unwrap(), f.one());
        assert_ne!(f.pow(f.from_int(2), 2).unwrap(), f.one());
    }

    #[test]
    fn frobenius_fixes_prime_subfield() {
        let f = Field::new(5, 2).unwrap();
        for n in 0..5 {
            let x = f.from_int(n);
            assert_eq!(f.frobenius(x, 1).unwrap(), x);
        }
        for x in f.elements() {
            assert_eq!(f.frobenius(x, 0).unwrap(), x);
            assert_eq!(f.frobenius(x, 2).unwrap(), x);
        }
    }

    #[test]
    fn small_traces() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.trace(f.one(), 1).unwrap().index(), 2);
        assert_eq!(f.trace(f.elem(3).unwrap(), 1).unwrap(), f.zero());
        assert!(matches!(
            f.trace(f.one(), 3),
            Err(Error::NotASubfield { .. })
        ));
    }

    #[test]
    fn squares_in_small_fields() {
        let f5 = Field::new(5, 1).unwrap();
        assert!(!f5.is_square(f5.from_int(2)).unwrap());
        assert_eq!(f5.sqrt(f5.from_int(4)).unwrap(), Some(f5.from_int(2)));
        assert_eq!(f5.sqrt(f5.from_int(2)).unwrap(), None);

        let f25 = Field::new(5, 2).unwrap();
        assert!(f25.is_square(f25.from_int(2)).unwrap());
        assert!(f25.is_square(f25.from_int(-2)).unwrap());

        let f9 = Field::new(3, 2).unwrap();
        assert!(f9.is_square(f9.from_int(-1)).unwrap());
    }

    #[test]
    fn sqrt_of_two_lies_in_f25_inside_f625() {
        for f in [
            Field::new(5, 4).unwrap(),
            Field::with_table_cap(5, 4, 0).unwrap(),
        ] {
            for n in [2, -2] {
                let y = f.sqrt(f.from_int(n)).unwrap().expect("square");
                assert_eq!(f.mul(y, y).unwrap(), f.from_int(n));
                assert!(f.in_subfield(y, 2).unwrap());
                let other = f.neg(y).unwrap();
                assert!(y.index() < other.index());
            }
        }
    }

    #[test]
    fn discriminant_examples() {
        let f5 = Field::new(5, 1).unwrap();
        let (d, irr) = f5
            .quad_discriminant_irreducible(f5.one(), f5.one())
            .unwrap();
        assert_eq!((d, irr), (f5.from_int(2), true));
        let (d, irr) = f5
            .quad_discriminant_irreducible(f5.from_int(-2), f5.from_int(-1))
            .unwrap();
        assert_eq!((d, irr), (f5.from_int(3), true));
        let (d, irr) = f5
            .quad_discriminant_irreducible(f5.zero(), f5.from_int(-1))
            .unwrap();
        assert_eq!((d, irr), (f5.from_int(4), false));
    }

    #[test]
    fn errors() {
        assert!(matches!(Field::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(Field::new(3, 0), Err(Error::ZeroDegree)));
        assert!(matches!(
            Field::new(5, 11),
            Err(Error::OrderTooLarge { .. })
        ));
        let f5 = Field::new(5, 1).unwrap();
        let f25 = Field::new(5, 2).unwrap();
        assert!(matches!(
            f5.add(f5.one(), f25.one()),
            Err(Error::MixedFields { .. })
        ));
        assert!(matches!(f5.inv(f5.zero()), Err(Error::DivisionByZero)));
        assert!(matches!(f5.elem(5), Err(Error::IndexOutOfRange { .. })));
        let f2 = Field::new(2, 3).unwrap();
        assert!(matches!(
            f2.is_square(f2.one()),
            Err(Error::CharacteristicTwo)
        ));
    }

    #[test]
    fn table_and_schoolbook_backends_agree() {
        for (p, m) in [(3, 3), (5, 2), (7, 2), (3, 4)] {
            let (t, s) = both_backends(p, m);
            assert_eq!(t.generator(), s.generator());
            for a in 0..t.order() {
                assert_eq!(t.inv_idx(a.max(1)), s.inv_idx(a.max(1)));
                assert_eq!(t.sqrt_idx(a), s.sqrt_idx(a));
                for b in 0..t.order() {
                    assert_eq!(t.mul_idx(a, b), s.mul_idx(a, b));
                }
            }
        }
    }

    #[test]
    fn generator_is_primitive() {
        for (p, m) in [(3, 2), (5, 3), (7, 2), (3, 5)] {
            let f = Field::new(p, m).unwrap();
            let g = f.generator();
            let mut x = g;
            let mut order = 1;
            while x != f.one() {
                x = f.mul(x, g).unwrap();
                order += 1;
            }
            assert_eq!(order, f.order() - 1);
        }
    }

    #[test]
    fn schoolbook_field_above_table_cap() {
        // F_{5^9} sits above the default table cap
        let f = Field::new(5, 9).unwrap();
        assert!(!f.has_tables());
        let g = f.generator();
        let n1 = f.order() as u64 - 1;
        assert_eq!(f.pow(g, n1).unwrap(), f.one());
        assert_ne!(f.pow(g, n1 / 2).unwrap(), f.one());
        let gi = f.inv(g).unwrap();
        assert_eq!(f.mul(g, gi).unwrap(), f.one());
        // 2 is a non-square in odd-degree extensions of F_5
        assert_eq!(f.sqrt(f.from_int(2)).unwrap(), None);
        let g2 = f.mul(g, g).unwrap();
        let y = f.sqrt(g2).unwrap().unwrap();
        assert_eq!(f.mul(y, y).unwrap(), g2);
    }
}
