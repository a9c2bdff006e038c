//! Map shapes evaluated over a field: dense polynomials, rational maps,
//! sparse polynomials with very large exponents, and trace-composed maps
//! `x + γ Tr(x^k)`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field, FieldDescriptor};
use crate::views::{Domain, DomainDescriptor};

/// A map from a field to itself.
pub trait FieldMap: Send + Sync {
    fn field(&self) -> &Field;

    fn eval(&self, x: Elem) -> Result<Elem>;

    /// Evaluate on a raw element index. Implementations may override this
    /// with a faster path.
    fn eval_index(&self, x: u32) -> Result<u32> {
        let x = self.field().elem(x)?;
        Ok(self.eval(x)?.index())
    }

    fn descriptor(&self) -> MapDescriptor;
}

impl<M: FieldMap + ?Sized> FieldMap for &M {
    fn field(&self) -> &Field {
        (**self).field()
    }
    fn eval(&self, x: Elem) -> Result<Elem> {
        (**self).eval(x)
    }
    fn eval_index(&self, x: u32) -> Result<u32> {
        (**self).eval_index(x)
    }
    fn descriptor(&self) -> MapDescriptor {
        (**self).descriptor()
    }
}

/// Serialized form of a map: the shape tag and its data, plus the field.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MapDescriptor {
    pub field: FieldDescriptor,
    #[serde(flatten)]
    pub shape: MapShape,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MapShape {
    Dense {
        coeffs: Vec<u32>,
    },
    Rational {
        numerator: Vec<u32>,
        denominator: Vec<u32>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        certified_on: Option<DomainDescriptor>,
    },
    /// (exponent, coefficient index) pairs
    Sparse {
        terms: Vec<(u64, u32)>,
    },
    Trace {
        base_degree: u32,
        n: u32,
        k: u64,
        gamma: u32,
    },
    Table {
        name: String,
    },
    Custom {
        name: String,
    },
}

#[derive(Clone, PartialEq, Eq)]
pub struct DensePolynomial {
    field: Field,
    /// constant term first, no trailing zeros
    coeffs: Vec<Elem>,
}

impl fmt::Debug for DensePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<u32> = self.coeffs.iter().map(|c| c.index()).collect();
        write!(f, "DensePolynomial({} {:?})", self.field.id(), idx)
    }
}

impl DensePolynomial {
    pub fn new(field: &Field, coeffs: Vec<Elem>) -> Result<Self> {
        for &c in &coeffs {
            field.check(c)?;
        }
        let mut poly = DensePolynomial {
            field: field.clone(),
            coeffs,
        };
        poly.trim();
        Ok(poly)
    }

    /// Coefficients given as integers of the prime subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Self {
        let mut poly = DensePolynomial {
            field: field.clone(),
            coeffs: coeffs.iter().map(|&c| field.from_int(c)).collect(),
        };
        poly.trim();
        poly
    }

    pub fn zero(field: &Field) -> Self {
        DensePolynomial {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: Elem) -> Result<Elem> {
        let x = self.field.check(x)?;
        Ok(self.field.wrap(self.eval_idx(x)))
    }

    pub(crate) fn eval_idx(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, c| f.add_idx(f.mul_idx(acc, x), c.index()))
    }

    pub fn mul(&self, other: &DensePolynomial) -> Result<DensePolynomial> {
        let f = &self.field;
        if f != &other.field {
            return Err(Error::MixedFields {
                expected: f.id(),
                found: other.field.id(),
            });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(DensePolynomial::zero(f));
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add_idx(out[i + j], f.mul_idx(a.index(), b.index()));
            }
        }
        DensePolynomial::new(f, out.into_iter().map(|c| f.wrap(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Result<DensePolynomial> {
        let mut acc = DensePolynomial::from_ints(&self.field, &[1]);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn to_sparse(&self) -> SparsePolynomial {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (i as u64, c))
            .collect();
        SparsePolynomial {
            field: self.field.clone(),
            terms,
        }
    }

    fn index_list(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.index()).collect()
    }
}

impl FieldMap for DensePolynomial {
    fn field(&self) -> &Field {
        &self.field
    }
    fn eval(&self, x: Elem) -> Result<Elem> {
        DensePolynomial::eval(self, x)
    }
    fn eval_index(&self, x: u32) -> Result<u32> {
        Ok(self.eval_idx(x))
    }
    fn descriptor(&self) -> MapDescriptor {
        MapDescriptor {
            field: self.field.descriptor(),
            shape: MapShape::Dense {
                coeffs: self.index_list(),
            },
        }
    }
}

/// `numerator / denominator`, evaluated pointwise.
#[derive(Clone, Debug)]
pub struct RationalMap {
    numerator: DensePolynomial,
    denominator: DensePolynomial,
    certified_on: Option<DomainDescriptor>,
}

impl RationalMap {
    pub fn new(numerator: DensePolynomial, denominator: DensePolynomial) -> Result<Self> {
        if numerator.field != denominator.field {
            return Err(Error::MixedFields {
                expected: numerator.field.id(),
                found: denominator.field.id(),
            });
        }
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalMap {
            numerator,
            denominator,
            certified_on: None,
        })
    }

    pub fn numerator(&self) -> &DensePolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &DensePolynomial {
        &self.denominator
    }

    /// Checks by enumeration that the denominator does not vanish anywhere on
    /// `domain` and records the domain. Returns the first pole otherwise.
    pub fn certify<'a>(&mut self, domain: impl Into<Domain<'a>>) -> Result<()> {
        let domain = domain.into();
        if domain.field() != &self.numerator.field {
            return Err(Error::MixedFields {
                expected: self.numerator.field.id(),
                found: domain.field().id(),
            });
        }
        if let Some(x) = domain
            .indices()
            .find(|&x| self.denominator.eval_idx(x) == 0)
        {
            return Err(Error::Pole { input: x });
        }
        self.certified_on = Some(domain.descriptor());
        Ok(())
    }

    pub fn certified_on(&self) -> Option<&DomainDescriptor> {
        self.certified_on.as_ref()
    }
}

impl FieldMap for RationalMap {
    fn field(&self) -> &Field {
        &self.numerator.field
    }
    fn eval(&self, x: Elem) -> Result<Elem> {
        let x = self.numerator.field.check(x)?;
        Ok(self.numerator.field.wrap(self.eval_index(x)?))
    }
    fn eval_index(&self, x: u32) -> Result<u32> {
        let f = &self.numerator.field;
        let den = self.denominator.eval_idx(x);
        if den == 0 {
            return Err(Error::Pole { input: x });
        }
        Ok(f.mul_idx(self.numerator.eval_idx(x), f.inv_idx(den)))
    }
    fn descriptor(&self) -> MapDescriptor {
        MapDescriptor {
            field: self.numerator.field.descriptor(),
            shape: MapShape::Rational {
                numerator: self.numerator.index_list(),
                denominator: self.denominator.index_list(),
                certified_on: self.certified_on.clone(),
            },
        }
    }
}

/// Exponent/coefficient list. Exponents stay as plain integers up to
/// `order²` and are applied by square-and-multiply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePolynomial {
    field: Field,
    /// strictly increasing exponents, nonzero coefficients
    terms: Vec<(u64, Elem)>,
}

impl SparsePolynomial {
    /// Sorts the terms, merges equal exponents and drops zero coefficients.
    pub fn new(field: &Field, mut terms: Vec<(u64, Elem)>) -> Result<Self> {
        let bound = (field.order() as u64).pow(2);
        for &(e, c) in &terms {
            field.check(c)?;
            if e > bound {
                return Err(Error::ExponentTooLarge { exponent: e, bound });
            }
        }
        terms.sort_by_key(|&(e, _)| e);
        let mut merged: Vec<(u64, Elem)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match merged.last_mut() {
                Some((last, acc)) if *last == e => *acc = field.add(*acc, c)?,
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Ok(SparsePolynomial {
            field: field.clone(),
            terms: merged,
        })
    }

    pub fn terms(&self) -> &[(u64, Elem)] {
        &self.terms
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Dense form; refuses exponents of 2^20 or more.
    pub fn to_dense(&self) -> Result<DensePolynomial> {
        const LIMIT: u64 = 1 << 20;
        let deg = self.terms.last().map_or(0, |&(e, _)| e);
        if deg >= LIMIT {
            return Err(Error::ExponentTooLarge {
                exponent: deg,
                bound: LIMIT,
            });
        }
        let mut coeffs = vec![
            self.field.zero();
            if self.terms.is_empty() {
                0
            } else {
                deg as usize + 1
            }
        ];
        for &(e, c) in &self.terms {
            coeffs[e as usize] = c;
        }
        DensePolynomial::new(&self.field, coeffs)
    }
}

impl FieldMap for SparsePolynomial {
    fn field(&self) -> &Field {
        &self.field
    }
    fn eval(&self, x: Elem) -> Result<Elem> {
        let x = self.field.check(x)?;
        Ok(self.field.wrap(self.eval_index(x)?))
    }
    fn eval_index(&self, x: u32) -> Result<u32> {
        let f = &self.field;
        Ok(self.terms.iter().fold(0, |acc, &(e, c)| {
            f.add_idx(acc, f.mul_idx(c.index(), f.pow_idx(x, e)))
        }))
    }
    fn descriptor(&self) -> MapDescriptor {
        MapDescriptor {
            field: self.field.descriptor(),
            shape: MapShape::Sparse {
                terms: self.terms.iter().map(|&(e, c)| (e, c.index())).collect(),
            },
        }
    }
}

/// `x + γ Tr_{q^n/q}(x^k)` on F_{q^n}, where `q = p^base_degree`.
#[derive(Clone, Debug)]
pub struct TraceMap {
    field: Field,
    base_degree: u32,
    k: u64,
    gamma: Elem,
    /// k·q^i mod (q^n − 1) for i in 0..n
    exponents: Vec<u64>,
}

impl TraceMap {
    pub fn new(field: &Field, base_degree: u32, k: u64, gamma: Elem) -> Result<Self> {
        field.check(gamma)?;
        let m = field.degree();
        if base_degree == 0 || m % base_degree != 0 {
            return Err(Error::NotASubfield {
                sub: base_degree,
                degree: m,
            });
        }
        if gamma.is_zero() {
            return Err(Error::Hypothesis("γ must be nonzero".into()));
        }
        let n1 = field.order() as u64 - 1;
        let q = (field.characteristic() as u64).pow(base_degree);
        let n = m / base_degree;
        let mut exponents = Vec::with_capacity(n as usize);
        let mut e = k % n1;
        for _ in 0..n {
            exponents.push(e);
            e = ((e as u128 * q as u128) % n1 as u128) as u64;
        }
        Ok(TraceMap {
            field: field.clone(),
            base_degree,
            k,
            gamma,
            exponents,
        })
    }

    pub fn base_degree(&self) -> u32 {
        self.base_degree
    }

    /// Degree of the field over the base F_q.
    pub fn n(&self) -> u32 {
        self.field.degree() / self.base_degree
    }

    pub fn q(&self) -> u64 {
        (self.field.characteristic() as u64).pow(self.base_degree)
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn gamma(&self) -> Elem {
        self.gamma
    }

    /// `Tr(x^k)`, lying in F_q.
    pub fn trace_part(&self, x: u32) -> u32 {
        let f = &self.field;
        if x == 0 {
            return if self.k == 0 {
                f.trace_idx(1, self.base_degree)
            } else {
                0
            };
        }
        match f.log_idx(x) {
            Some(l) if self.k != 0 => {
                let n1 = f.order() as u64 - 1;
                self.exponents
                    .iter()
                    .fold(0, |acc, &e| f.add_idx(acc, f.exp_idx(l as u64 * e % n1)))
            }
            _ => f.trace_idx(f.pow_idx(x, self.k), self.base_degree),
        }
    }
}

impl FieldMap for TraceMap {
    fn field(&self) -> &Field {
        &self.field
    }
    fn eval(&self, x: Elem) -> Result<Elem> {
        let x = self.field.check(x)?;
        Ok(self.field.wrap(self.eval_index(x)?))
    }
    fn eval_index(&self, x: u32) -> Result<u32> {
        let f = &self.field;
        Ok(f.add_idx(x, f.mul_idx(self.gamma.index(), self.trace_part(x))))
    }
    fn descriptor(&self) -> MapDescriptor {
        MapDescriptor {
            field: self.field.descriptor(),
            shape: MapShape::Trace {
                base_degree: self.base_degree,
                n: self.n(),
                k: self.k,
                gamma: self.gamma.index(),
            },
        }
    }
}

type EvalFn = dyn Fn(&Field, Elem) -> Result<Elem> + Send + Sync;

/// A map given by a closure, for ad-hoc maps in checks and examples.
#[derive(Clone)]
pub struct FnMap {
    field: Field,
    name: String,
    f: Arc<EvalFn>,
}

impl FnMap {
    pub fn new(
        field: &Field,
        name: impl Into<String>,
        f: impl Fn(&Field, Elem) -> Result<Elem> + Send + Sync + 'static,
    ) -> Self {
        FnMap {
            field: field.clone(),
            name: name.into(),
            f: Arc::new(f),
        }
    }
}

impl fmt::Debug for FnMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FnMap({} on {})", self.name, self.field.id())
    }
}

impl FieldMap for FnMap {
    fn field(&self) -> &Field {
        &self.field
    }
    fn eval(&self, x: Elem) -> Result<Elem> {
        self.field.check(x)?;
        let y = (self.f)(&self.field, x)?;
        self.field.check(y)?;
        Ok(y)
    }
    fn descriptor(&self) -> MapDescriptor {
        MapDescriptor {
            field: self.field.descriptor(),
            shape: MapShape::Custom {
                name: self.name.clone(),
            },
        }
    }
}

/// A map stored as its full value table.
#[derive(Clone, Debug)]
pub struct TableMap {
    field: Field,
    name: String,
    values: Vec<u32>,
}

impl TableMap {
    /// Tabulates `map` on every element of its field.
    pub fn tabulate<M: FieldMap>(map: &M, name: impl Into<String>) -> Result<Self> {
        let field = map.field().clone();
        let values = (0..field.order())
            .map(|x| map.eval_index(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(TableMap {
            field,
            name: name.into(),
            values,
        })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }
}

impl FieldMap for TableMap {
    fn field(&self) -> &Field {
        &self.field
    }
    fn eval(&self, x: Elem) -> Result<Elem> {
        let x = self.field.check(x)?;
        Ok(self.field.wrap(self.values[x as usize]))
    }
    fn eval_index(&self, x: u32) -> Result<u32> {
        self.values
            .get(x as usize)
            .copied()
            .ok_or(Error::IndexOutOfRange {
                index: x as u64,
                order: self.field.order() as u64,
            })
    }
    fn descriptor(&self) -> MapDescriptor {
        MapDescriptor {
            field: self.field.descriptor(),
            shape: MapShape::Table {
                name: self.name.clone(),
            },
        }
    }
}
