//! Bijection checks with collision witnesses and early abort, plus value-set
//! statistics.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::FieldDescriptor;
use crate::poly::{FieldMap, MapDescriptor};
use crate::views::{Domain, DomainDescriptor, SubgroupView};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PermReport {
    pub field: FieldDescriptor,
    pub map: MapDescriptor,
    pub domain: DomainDescriptor,
    pub is_pp: bool,
    /// Image stays inside the domain. Always true for whole-field domains.
    pub closed: bool,
    /// `None` when the check stopped before injectivity was decided.
    pub injective: Option<bool>,
    /// Two distinct inputs with the same image, smaller index first.
    pub witness: Option<(u32, u32)>,
    /// An input whose image leaves the domain.
    pub escape: Option<u32>,
    pub evals: u64,
    pub ms: f64,
}

impl PermReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Reusable occupancy table. Entries are stamped with a per-check generation,
/// so consecutive checks do not pay for clearing.
#[derive(Debug, Default)]
pub struct PermChecker {
    stamp: Vec<u32>,
    preimage: Vec<u32>,
    generation: u32,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// stop at the first collision or escape
    Bijection,
    /// keep going until both closure and injectivity are decided
    Subset,
    /// evaluate every point
    Exhaustive,
}

struct Outcome {
    witness: Option<(u32, u32)>,
    escape: Option<u32>,
    evals: u64,
    complete: bool,
}

impl PermChecker {
    pub fn new() -> Self {
        Self::default()
    }

    fn begin(&mut self, order: usize) {
        if self.stamp.len() < order {
            self.stamp.resize(order, 0);
            self.preimage.resize(order, 0);
        }
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.generation = 1;
        }
    }

    fn run<M: FieldMap + ?Sized>(
        &mut self,
        map: &M,
        domain: Domain<'_>,
        mode: Mode,
    ) -> Result<Outcome> {
        self.begin(domain.field().order() as usize);
        let gen = self.generation;
        let mut out = Outcome {
            witness: None,
            escape: None,
            evals: 0,
            complete: true,
        };
        let is_view = matches!(domain, Domain::View(_));
        for x in domain.indices() {
            let y = map.eval_index(x)?;
            out.evals += 1;
            if is_view && out.escape.is_none() && !domain.contains_idx(y) {
                out.escape = Some(x);
            }
            let slot = y as usize;
            if self.stamp[slot] == gen {
                if out.witness.is_none() {
                    out.witness = Some((self.preimage[slot], x));
                }
            } else {
                self.stamp[slot] = gen;
                self.preimage[slot] = x;
            }
            let stop = match mode {
                Mode::Bijection => out.witness.is_some() || out.escape.is_some(),
                Mode::Subset => out.witness.is_some() && out.escape.is_some(),
                Mode::Exhaustive => false,
            };
            if stop {
                out.complete = out.evals == domain.len() as u64;
                break;
            }
        }
        Ok(out)
    }

    /// Verdict only, for search loops: no descriptors, no timing.
    pub fn is_bijection<M: FieldMap + ?Sized>(
        &mut self,
        map: &M,
        domain: Domain<'_>,
    ) -> Result<bool> {
        let out = self.run(map, domain, Mode::Bijection)?;
        Ok(out.witness.is_none() && out.escape.is_none())
    }

    /// Like [`PermChecker::is_bijection`] but never aborts early.
    pub fn is_bijection_exhaustive<M: FieldMap + ?Sized>(
        &mut self,
        map: &M,
        domain: Domain<'_>,
    ) -> Result<bool> {
        let out = self.run(map, domain, Mode::Exhaustive)?;
        Ok(out.witness.is_none() && out.escape.is_none())
    }

    pub fn is_permutation<M: FieldMap + ?Sized>(
        &mut self,
        map: &M,
        domain: Domain<'_>,
    ) -> Result<PermReport> {
        let start = Instant::now();
        let out = self.run(map, domain, Mode::Bijection)?;
        Ok(report(map, domain, out, start))
    }

    pub fn permutes_subset<M: FieldMap + ?Sized>(
        &mut self,
        map: &M,
        view: &SubgroupView,
    ) -> Result<PermReport> {
        let start = Instant::now();
        let domain = Domain::View(view);
        let out = self.run(map, domain, Mode::Subset)?;
        Ok(report(map, domain, out, start))
    }
}

fn report<M: FieldMap + ?Sized>(
    map: &M,
    domain: Domain<'_>,
    out: Outcome,
    start: Instant,
) -> PermReport {
    let injective = match out.witness {
        Some(_) => Some(false),
        None if out.complete => Some(true),
        None => None,
    };
    let closed = out.escape.is_none();
    PermReport {
        field: map.field().descriptor(),
        map: map.descriptor(),
        domain: domain.descriptor(),
        is_pp: closed && injective == Some(true),
        closed,
        injective,
        witness: out.witness,
        escape: out.escape,
        evals: out.evals,
        ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Whether `map` is a bijection of `domain` onto itself. Stops at the first
/// collision or, for views, the first image outside the view.
pub fn is_permutation<'a, M: FieldMap + ?Sized>(
    map: &M,
    domain: impl Into<Domain<'a>>,
) -> Result<PermReport> {
    PermChecker::new().is_permutation(map, domain.into())
}

/// Closure (`map(S) ⊆ S`) and injectivity on `S`, both decided and reported.
pub fn permutes_subset<M: FieldMap + ?Sized>(map: &M, view: &SubgroupView) -> Result<PermReport> {
    PermChecker::new().permutes_subset(map, view)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValueSetProfile {
    pub map: MapDescriptor,
    pub domain: DomainDescriptor,
    pub image_size: u64,
    /// multiplicity → number of image points hit that many times
    pub histogram: BTreeMap<u64, u64>,
}

pub fn value_set_profile<'a, M: FieldMap + ?Sized>(
    map: &M,
    domain: impl Into<Domain<'a>>,
) -> Result<ValueSetProfile> {
    let domain = domain.into();
    let mut hits = vec![0u64; domain.field().order() as usize];
    for x in domain.indices() {
        hits[map.eval_index(x)? as usize] += 1;
    }
    let mut histogram = BTreeMap::new();
    let mut image_size = 0;
    for &h in hits.iter().filter(|&&h| h > 0) {
        image_size += 1;
        *histogram.entry(h).or_insert(0) += 1;
    }
    Ok(ValueSetProfile {
        map: map.descriptor(),
        domain: domain.descriptor(),
        image_size,
        histogram,
    })
}
