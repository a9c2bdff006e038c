//! Constructors for the permutation-polynomial families, with their
//! hypotheses checked, and the explicit inverter for the characteristic-3
//! trace family.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linear::LinearizedPolynomial;
use crate::poly::{DensePolynomial, RationalMap, SparsePolynomial, TraceMap};
use crate::views::{mu_view, SubgroupView};

/// `x ((x² − x + 2) / (x² + x + 2))²` over F_{5^k}, k odd, certified pole-free
/// on the whole field.
///
/// With `force`, even `k` is accepted; the map is then returned uncertified if
/// the denominator has roots.
pub fn conj1_map(k: u32, force: bool) -> Result<RationalMap> {
    if k == 0 {
        return Err(Error::Hypothesis("k must be positive".into()));
    }
    if k % 2 == 0 && !force {
        return Err(Error::Hypothesis(format!("k = {k} must be odd")));
    }
    let field = Field::new(5, k)?;
    let inner = DensePolynomial::from_ints(&field, &[2, -1, 1]).pow(2)?;
    let num = DensePolynomial::from_ints(&field, &[0, 1]).mul(&inner)?;
    let den = DensePolynomial::from_ints(&field, &[2, 1, 1]).pow(2)?;
    let mut map = RationalMap::new(num, den)?;
    match map.certify(&field) {
        Ok(()) => Ok(map),
        Err(Error::Pole { .. }) if force => Ok(map),
        Err(e) => Err(e),
    }
}

/// `−x ((x² − 2) / (x² + 2))²` over F_{q²}, q = 5^k with k even, together with
/// μ_{q+1}, on which it is certified pole-free.
pub fn conj2_map(k: u32, force: bool) -> Result<(RationalMap, SubgroupView)> {
    if k == 0 {
        return Err(Error::Hypothesis("k must be positive".into()));
    }
    if k % 2 == 1 && !force {
        return Err(Error::Hypothesis(format!("k = {k} must be even")));
    }
    let field = Field::new(5, 2 * k)?;
    let mu = mu_view(&field, 5u64.pow(k))?;
    let inner = DensePolynomial::from_ints(&field, &[-2, 0, 1]).pow(2)?;
    let num = DensePolynomial::from_ints(&field, &[0, -1]).mul(&inner)?;
    let den = DensePolynomial::from_ints(&field, &[2, 0, 1]).pow(2)?;
    let mut map = RationalMap::new(num, den)?;
    match map.certify(&mu) {
        Ok(()) => Ok((map, mu)),
        Err(Error::Pole { .. }) if force => Ok((map, mu)),
        Err(e) => Err(e),
    }
}

/// Parameters of `x + λ₁ x^{s(5^k−1)+1} + λ₂ x^{t(5^k−1)+1}` over F_{5^{2k}}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NihoParams {
    pub k: u32,
    pub s: u64,
    pub t: u64,
    pub lambda1: i8,
    pub lambda2: i8,
}

impl NihoParams {
    pub fn exponents(&self) -> (u64, u64) {
        let step = 5u64.pow(self.k) - 1;
        (self.s * step + 1, self.t * step + 1)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::Hypothesis("k must be positive".into()));
        }
        let q = 5u64.pow(self.k);
        for (name, v) in [("s", self.s), ("t", self.t)] {
            if v < 1 || v > q {
                return Err(Error::Hypothesis(format!(
                    "{name} = {v} must lie in [1, {q}]"
                )));
            }
        }
        for l in [self.lambda1, self.lambda2] {
            if l != 1 && l != -1 {
                return Err(Error::Hypothesis(format!("λ = {l} must be ±1")));
            }
        }
        let (e1, e2) = self.exponents();
        let bound = q * q;
        for e in [e1, e2] {
            if e >= bound {
                return Err(Error::ExponentTooLarge { exponent: e, bound });
            }
        }
        Ok(())
    }

    /// The same polynomial with the two Niho terms swapped.
    pub fn swapped(&self) -> NihoParams {
        NihoParams {
            s: self.t,
            t: self.s,
            lambda1: self.lambda2,
            lambda2: self.lambda1,
            ..*self
        }
    }

    /// Every parameter choice for a given k, in (s, t, λ₁, λ₂) order.
    pub fn enumerate(k: u32) -> impl Iterator<Item = NihoParams> {
        let q = 5u64.pow(k);
        (1..=q).flat_map(move |s| {
            (1..=q).flat_map(move |t| {
                [-1i8, 1].into_iter().flat_map(move |lambda1| {
                    [-1i8, 1].into_iter().map(move |lambda2| NihoParams {
                        k,
                        s,
                        t,
                        lambda1,
                        lambda2,
                    })
                })
            })
        })
    }
}

/// The Niho trinomial with equal exponents merged, over `field` = F_{5^{2k}}.
pub fn niho_trinomial(field: &Field, params: &NihoParams) -> Result<SparsePolynomial> {
    params.validate()?;
    if field.characteristic() != 5 || field.degree() != 2 * params.k {
        return Err(Error::Domain(format!(
            "niho trinomial for k = {} lives in F_5^{}",
            params.k,
            2 * params.k
        )));
    }
    let (e1, e2) = params.exponents();
    let l1 = field.from_int(params.lambda1 as i64);
    let l2 = field.from_int(params.lambda2 as i64);
    SparsePolynomial::new(field, vec![(1, field.one()), (e1, l1), (e2, l2)])
}

/// `3^{2r−1} + 3^r − 3^{r−1}`
pub fn trace_family_k(r: u32) -> u64 {
    3u64.pow(2 * r - 1) + 3u64.pow(r) - 3u64.pow(r - 1)
}

/// `(γ − 1)^{(q−1)/2} = γ^{(q−1)/2}`
pub fn trace_family_condition(field: &Field, q: u64, gamma: Elem) -> Result<bool> {
    let e = (q - 1) / 2;
    let lhs = field.pow(field.sub(gamma, field.one())?, e)?;
    Ok(lhs == field.pow(gamma, e)?)
}

/// The family `x + γ Tr(x^k)` over F_{q²}, q = 3^r, r ≥ 2.
#[derive(Clone, Debug)]
pub struct TraceFamily {
    field: Field,
    r: u32,
}

impl TraceFamily {
    pub fn new(r: u32) -> Result<Self> {
        if r < 2 {
            return Err(Error::Hypothesis(format!("r = {r} must be at least 2")));
        }
        Ok(TraceFamily {
            field: Field::new(3, 2 * r)?,
            r,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn q(&self) -> u64 {
        3u64.pow(self.r)
    }

    pub fn k(&self) -> u64 {
        trace_family_k(self.r)
    }

    /// Every γ ∈ F_{q²} satisfying the family condition, found by enumeration.
    pub fn gammas(&self) -> Vec<Elem> {
        let q = self.q();
        self.field
            .elements()
            .filter(|&g| trace_family_condition(&self.field, q, g).unwrap_or(false))
            .collect()
    }

    pub fn params(&self, gamma: Elem) -> Result<TraceFamilyParams> {
        TraceFamilyParams::new(self, gamma)
    }

    pub fn maps(&self) -> Result<Vec<TraceMap>> {
        self.gammas()
            .into_iter()
            .map(|g| TraceMap::new(&self.field, self.r, self.k(), g))
            .collect()
    }
}

/// All maps of the characteristic-3 trace family for a given r.
pub fn trace_family(r: u32) -> Result<Vec<TraceMap>> {
    TraceFamily::new(r)?.maps()
}

/// A validated member of [`TraceFamily`].
#[derive(Clone, Debug)]
pub struct TraceFamilyParams {
    field: Field,
    r: u32,
    gamma: Elem,
}

impl TraceFamilyParams {
    pub fn new(family: &TraceFamily, gamma: Elem) -> Result<Self> {
        let f = &family.field;
        f.check(gamma)?;
        if gamma.is_zero() || gamma == f.one() {
            return Err(Error::Hypothesis("γ must differ from 0 and 1".into()));
        }
        if !trace_family_condition(f, family.q(), gamma)? {
            return Err(Error::Hypothesis(format!(
                "γ = {gamma} fails (γ−1)^((q−1)/2) = γ^((q−1)/2)"
            )));
        }
        if !f.in_subfield(gamma, family.r)? {
            return Err(Error::Hypothesis(format!(
                "γ = {gamma} does not lie in F_q"
            )));
        }
        Ok(TraceFamilyParams {
            field: f.clone(),
            r: family.r,
            gamma,
        })
    }

    pub fn gamma(&self) -> Elem {
        self.gamma
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn map(&self) -> Result<TraceMap> {
        TraceMap::new(&self.field, self.r, trace_family_k(self.r), self.gamma)
    }
}

/// The unique x with `x + γ (x^k + x̄^k) = a`.
///
/// Cubing the equation gives `x³ + γ³(x x̄² + x̄ x²) = a³`; comparing with its
/// conjugate forces `x̄ − x = ā − a`, and substituting back leaves the additive
/// cubic `x³ + (γ/(1−γ))³ (ā − a)² x = (a/(1−γ))³`. Its roots form an affine
/// F_3-space; the conjugation constraint keeps exactly one of them.
pub fn invert_trace_pp(params: &TraceFamilyParams, a: Elem) -> Result<Elem> {
    let f = &params.field;
    f.check(a)?;
    let gamma = params.gamma;
    let a_bar = f.frobenius(a, params.r)?;
    let shift = f.sub(a_bar, a)?;
    let one_minus = f.sub(f.one(), gamma)?;
    let ratio = f.div(gamma, one_minus)?;
    let beta = f.mul(f.pow(ratio, 3)?, f.mul(shift, shift)?)?;
    let rhs = f.pow(f.div(a, one_minus)?, 3)?;
    let cubic = LinearizedPolynomial::new(f, vec![beta, f.one()])?;
    let mut survivors = Vec::new();
    for x in cubic.solve(rhs)? {
        if f.sub(f.frobenius(x, params.r)?, x)? == shift {
            survivors.push(x);
        }
    }
    match survivors.as_slice() {
        [x] => Ok(*x),
        other => Err(Error::InverterSurvivors(other.len())),
    }
}

/// The five sporadic trace-form permutations that the infinite families do
/// not explain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExampleId {
    #[serde(rename = "5.1")]
    E1,
    #[serde(rename = "5.2")]
    E2,
    #[serde(rename = "5.3")]
    E3,
    #[serde(rename = "5.4")]
    E4,
    #[serde(rename = "5.5")]
    E5,
}

/// Frozen parameters of one example: q = p^base_degree, the extension degree
/// n over F_q, and the listed exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExampleSpec {
    pub p: u32,
    pub base_degree: u32,
    pub n: u32,
    pub ks: &'static [u64],
    pub condition: &'static str,
}

impl ExampleSpec {
    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.base_degree)
    }
}

impl ExampleId {
    pub const ALL: [ExampleId; 5] = [
        ExampleId::E1,
        ExampleId::E2,
        ExampleId::E3,
        ExampleId::E4,
        ExampleId::E5,
    ];

    pub fn spec(self) -> ExampleSpec {
        match self {
            ExampleId::E1 => ExampleSpec {
                p: 7,
                base_degree: 1,
                n: 2,
                ks: &[10],
                condition: "γ^4 = 1",
            },
            ExampleId::E2 => ExampleSpec {
                p: 3,
                base_degree: 2,
                n: 2,
                ks: &[33],
                condition: "γ^2 − γ = 1",
            },
            ExampleId::E3 => ExampleSpec {
                p: 3,
                base_degree: 3,
                n: 2,
                ks: &[261],
                condition: "(γ − 1)^13 = γ^13",
            },
            ExampleId::E4 => ExampleSpec {
                p: 3,
                base_degree: 2,
                n: 3,
                ks: &[11, 19, 33, 57],
                condition: "γ^4 = −1",
            },
            ExampleId::E5 => ExampleSpec {
                p: 7,
                base_degree: 2,
                n: 2,
                ks: &[385],
                condition: "γ^5 = −1",
            },
        }
    }

    pub fn field(self) -> Result<Field> {
        let s = self.spec();
        Field::new(s.p, s.base_degree * s.n)
    }

    pub fn holds(self, field: &Field, gamma: Elem) -> Result<bool> {
        let one = field.one();
        let minus_one = field.neg(one)?;
        Ok(match self {
            ExampleId::E1 => field.pow(gamma, 4)? == one,
            ExampleId::E2 => field.sub(field.mul(gamma, gamma)?, gamma)? == one,
            ExampleId::E3 => field.pow(field.sub(gamma, one)?, 13)? == field.pow(gamma, 13)?,
            ExampleId::E4 => field.pow(gamma, 4)? == minus_one,
            ExampleId::E5 => field.pow(gamma, 5)? == minus_one,
        })
    }

    /// Nonzero γ satisfying the example's condition, by enumeration.
    pub fn gammas(self, field: &Field) -> Result<Vec<Elem>> {
        let mut out = Vec::new();
        for g in field.elements().skip(1) {
            if self.holds(field, g)? {
                out.push(g);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self {
            ExampleId::E1 => 1,
            ExampleId::E2 => 2,
            ExampleId::E3 => 3,
            ExampleId::E4 => 4,
            ExampleId::E5 => 5,
        };
        write!(f, "5.{n}")
    }
}

impl FromStr for ExampleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExampleId::ALL
            .into_iter()
            .find(|id| id.to_string() == s)
            .ok_or_else(|| {
                Error::Hypothesis(format!("unknown example id {s:?}; expected 5.1 to 5.5"))
            })
    }
}

/// One map per (listed k, admissible γ), k-major.
pub fn example_map(id: ExampleId) -> Result<Vec<TraceMap>> {
    let spec = id.spec();
    let field = id.field()?;
    let gammas = id.gammas(&field)?;
    let mut maps = Vec::with_capacity(spec.ks.len() * gammas.len());
    for &k in spec.ks {
        for &g in &gammas {
            maps.push(TraceMap::new(&field, spec.base_degree, k, g)?);
        }
    }
    Ok(maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::FieldMap;

    #[test]
    fn conj1_value_table_for_k1() {
        let f = conj1_map(1, false).unwrap();
        let table: Vec<u32> = (0..5).map(|x| f.eval_index(x).unwrap()).collect();
        assert_eq!(table, vec![0, 4, 3, 2, 1]);
        assert!(f.certified_on().is_some());
    }

    #[test]
    fn hypotheses_are_enforced() {
        assert!(matches!(conj1_map(2, false), Err(Error::Hypothesis(_))));
        // x² + x + 2 has roots in F_25, so the forced map stays uncertified
        let forced = conj1_map(2, true).unwrap();
        assert!(forced.certified_on().is_none());
        assert!(matches!(conj2_map(1, false), Err(Error::Hypothesis(_))));
        assert!(matches!(TraceFamily::new(1), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn conj2_at_one_lands_in_mu() {
        let (g, mu) = conj2_map(2, false).unwrap();
        assert_eq!(mu.len(), 26);
        let f = g.field().clone();
        let y = g.eval(f.one()).unwrap();
        let ninth = f.inv(f.from_int(9)).unwrap();
        assert_eq!(y, f.neg(ninth).unwrap());
        assert!(mu.contains(y));
    }

    #[test]
    fn niho_instances() {
        let f = Field::new(5, 2).unwrap();
        let id = NihoParams {
            k: 1,
            s: 1,
            t: 1,
            lambda1: 1,
            lambda2: -1,
        };
        let poly = niho_trinomial(&f, &id).unwrap();
        assert_eq!(poly.terms(), &[(1, f.one())]);
        let p = NihoParams {
            k: 1,
            s: 1,
            t: 2,
            lambda1: 1,
            lambda2: 1,
        };
        let poly = niho_trinomial(&f, &p).unwrap();
        let exps: Vec<u64> = poly.terms().iter().map(|t| t.0).collect();
        assert_eq!(exps, vec![1, 5, 9]);
        assert_eq!(NihoParams::enumerate(1).count(), 100);
        let bad = NihoParams { k: 1, s: 6, ..p };
        assert!(matches!(
            niho_trinomial(&f, &bad),
            Err(Error::Hypothesis(_))
        ));
        let wrong_field = Field::new(5, 4).unwrap();
        assert!(niho_trinomial(&wrong_field, &p).is_err());
    }

    #[test]
    fn family_exponents() {
        assert_eq!(trace_family_k(2), 33);
        assert_eq!(trace_family_k(3), 261);
        assert_eq!(trace_family_k(4), 2241);
    }

    #[test]
    fn r2_gammas_are_roots_of_cubic() {
        let fam = TraceFamily::new(2).unwrap();
        let f = fam.field();
        let gammas = fam.gammas();
        assert_eq!(gammas.len(), 3);
        for &g in &gammas {
            // (γ + 1)(γ² − γ − 1)
            let a = f.add(g, f.one()).unwrap();
            let b = f
                .sub(f.sub(f.mul(g, g).unwrap(), g).unwrap(), f.one())
                .unwrap();
            assert!(f.mul(a, b).unwrap().is_zero());
            assert!(f.in_subfield(g, 2).unwrap());
        }
        assert!(gammas.contains(&f.from_int(-1)));
    }

    #[test]
    fn inverter_round_trips_on_f81() {
        let fam = TraceFamily::new(2).unwrap();
        for g in fam.gammas() {
            let params = fam.params(g).unwrap();
            let map = params.map().unwrap();
            for a in fam.field().elements() {
                let x = invert_trace_pp(&params, a).unwrap();
                assert_eq!(map.eval(x).unwrap(), a);
            }
        }
    }

    #[test]
    fn params_reject_bad_gamma() {
        let fam = TraceFamily::new(2).unwrap();
        let f = fam.field();
        assert!(fam.params(f.zero()).is_err());
        assert!(fam.params(f.one()).is_err());
        let outside = f
            .elements()
            .find(|&g| !fam.gammas().contains(&g) && !g.is_zero() && g != f.one())
            .unwrap();
        assert!(matches!(fam.params(outside), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn example_gamma_counts() {
        let counts: Vec<usize> = ExampleId::ALL
            .iter()
            .map(|id| id.gammas(&id.field().unwrap()).unwrap().len())
            .collect();
        assert_eq!(counts, vec![4, 2, 12, 4, 5]);
        assert_eq!("5.4".parse::<ExampleId>().unwrap(), ExampleId::E4);
        assert!("5.6".parse::<ExampleId>().is_err());
        assert_eq!(example_map(ExampleId::E4).unwrap().len(), 16);
    }
}
