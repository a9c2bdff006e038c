//! Enumerable subsets of a field that the permutation arguments live on: the
//! unit circle μ_{q+1} of F_{q²}, its square and negated-square halves, and
//! the square classes of F* when 2 is a non-square.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViewKind {
    /// {x : x^{q+1} = 1}
    Mu,
    /// {x² : x ∈ μ}
    OmegaPlus,
    /// {−x² : x ∈ μ}
    OmegaMinus,
    /// nonzero squares
    OmegaSq,
    /// 2 · nonzero squares
    Omega2Sq,
    FullStar,
    Full,
}

/// Summary of an evaluation domain as it appears in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomainDescriptor {
    pub kind: String,
    pub size: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q: Option<u64>,
    /// Indices of the first (at most 8) elements.
    pub first: Vec<u32>,
}

/// An explicit, index-sorted subset of a field with O(1) membership.
#[derive(Clone, Debug)]
pub struct SubgroupView {
    field: Field,
    kind: ViewKind,
    q: Option<u64>,
    elements: Vec<u32>,
    member: Vec<bool>,
}

impl SubgroupView {
    fn from_indices(field: &Field, kind: ViewKind, q: Option<u64>, mut elements: Vec<u32>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let mut member = vec![false; field.order() as usize];
        for &e in &elements {
            member[e as usize] = true;
        }
        SubgroupView {
            field: field.clone(),
            kind,
            q,
            elements,
            member,
        }
    }

    pub fn full(field: &Field) -> Self {
        Self::from_indices(field, ViewKind::Full, None, (0..field.order()).collect())
    }

    pub fn full_star(field: &Field) -> Self {
        Self::from_indices(
            field,
            ViewKind::FullStar,
            None,
            (1..field.order()).collect(),
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn kind(&self) -> ViewKind {
        self.kind
    }

    /// The designated base order for μ-type views.
    pub fn q(&self) -> Option<u64> {
        self.q
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn indices(&self) -> &[u32] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.elements.iter().map(move |&i| self.field.wrap(i))
    }

    pub fn contains_idx(&self, index: u32) -> bool {
        self.member.get(index as usize).copied().unwrap_or(false)
    }

    pub fn contains(&self, x: Elem) -> bool {
        x.field_id() == self.field.id() && self.contains_idx(x.index())
    }

    pub fn descriptor(&self) -> DomainDescriptor {
        let kind = serde_json::to_value(self.kind)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        DomainDescriptor {
            kind,
            size: self.elements.len() as u64,
            q: self.q,
            first: self.elements.iter().take(8).copied().collect(),
        }
    }
}

/// Where a map is checked: a whole field or an explicit view.
#[derive(Clone, Copy, Debug)]
pub enum Domain<'a> {
    Field(&'a Field),
    View(&'a SubgroupView),
}

impl<'a> From<&'a Field> for Domain<'a> {
    fn from(f: &'a Field) -> Self {
        Domain::Field(f)
    }
}

impl<'a> From<&'a SubgroupView> for Domain<'a> {
    fn from(v: &'a SubgroupView) -> Self {
        Domain::View(v)
    }
}

impl<'a> Domain<'a> {
    pub fn field(&self) -> &'a Field {
        match self {
            Domain::Field(f) => f,
            Domain::View(v) => &v.field,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Domain::Field(f) => f.order() as usize,
            Domain::View(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains_idx(&self, index: u32) -> bool {
        match self {
            Domain::Field(f) => index < f.order(),
            Domain::View(v) => v.contains_idx(index),
        }
    }

    /// Element indices in ascending order.
    pub fn indices(&self) -> Box<dyn Iterator<Item = u32> + 'a> {
        match *self {
            Domain::Field(f) => Box::new(0..f.order()),
            Domain::View(v) => Box::new(v.elements.iter().copied()),
        }
    }

    pub fn descriptor(&self) -> DomainDescriptor {
        match self {
            Domain::Field(f) => DomainDescriptor {
                kind: "field".into(),
                size: f.order() as u64,
                q: None,
                first: (0..f.order().min(8)).collect(),
            },
            Domain::View(v) => v.descriptor(),
        }
    }
}

/// μ_{q+1} inside a field of order q², generated as the powers of ω^{q−1}.
pub fn mu_view(field: &Field, q: u64) -> Result<SubgroupView> {
    if q.checked_mul(q) != Some(field.order() as u64) {
        return Err(Error::Domain(format!(
            "field of order {} is not F_{{{q}^2}}",
            field.order()
        )));
    }
    let step = field.exp_idx(q - 1);
    let mut elements = Vec::with_capacity(q as usize + 1);
    let mut cur = 1;
    for _ in 0..=q {
        elements.push(cur);
        cur = field.mul_idx(cur, step);
    }
    debug_assert_eq!(cur, 1);
    Ok(SubgroupView::from_indices(
        field,
        ViewKind::Mu,
        Some(q),
        elements,
    ))
}

/// The two halves {x²} and {−x²} of a μ view, together with whether they
/// actually partition it.
#[derive(Clone, Debug)]
pub struct OmegaSplit {
    pub plus: SubgroupView,
    pub minus: SubgroupView,
    pub disjoint: bool,
    pub covers: bool,
}

impl OmegaSplit {
    pub fn is_partition(&self) -> bool {
        self.disjoint && self.covers
    }
}

pub fn omega_split(mu: &SubgroupView) -> Result<OmegaSplit> {
    if mu.kind != ViewKind::Mu {
        return Err(Error::Domain(format!(
            "expected a mu view, got {:?}",
            mu.kind
        )));
    }
    let f = &mu.field;
    let squares: Vec<u32> = mu.elements.iter().map(|&x| f.mul_idx(x, x)).collect();
    let negated: Vec<u32> = squares.iter().map(|&y| f.neg_idx(y)).collect();
    let plus = SubgroupView::from_indices(f, ViewKind::OmegaPlus, mu.q, squares);
    let minus = SubgroupView::from_indices(f, ViewKind::OmegaMinus, mu.q, negated);
    let disjoint = plus.elements.iter().all(|&x| !minus.contains_idx(x));
    let covers = mu
        .elements
        .iter()
        .all(|&x| plus.contains_idx(x) || minus.contains_idx(x))
        && plus
            .elements
            .iter()
            .chain(&minus.elements)
            .all(|&x| mu.contains_idx(x));
    Ok(OmegaSplit {
        plus,
        minus,
        disjoint,
        covers,
    })
}

/// Squares and doubled squares of F*. Only a partition when 2 is a
/// non-square, which is required.
pub fn square_class_split(field: &Field) -> Result<(SubgroupView, SubgroupView)> {
    let two = field.from_int(2);
    if field.is_square(two)? {
        return Err(Error::Hypothesis(format!(
            "2 is a square in {}, so squares and doubled squares coincide",
            field.id()
        )));
    }
    let squares: Vec<u32> = (1..field.order()).map(|x| field.mul_idx(x, x)).collect();
    let doubled: Vec<u32> = squares
        .iter()
        .map(|&y| field.mul_idx(two.index(), y))
        .collect();
    Ok((
        SubgroupView::from_indices(field, ViewKind::OmegaSq, None, squares),
        SubgroupView::from_indices(field, ViewKind::Omega2Sq, None, doubled),
    ))
}

/// Number of unordered pairs {x, y} ⊆ S, x = y allowed, with x + y = sum and
/// xy = product.
pub fn check_sum_product_system(view: &SubgroupView, sum: Elem, product: Elem) -> Result<usize> {
    let f = &view.field;
    let s = f.check(sum)?;
    let p = f.check(product)?;
    Ok(view
        .elements
        .iter()
        .filter(|&&x| {
            let y = f.sub_idx(s, x);
            x <= y && view.contains_idx(y) && f.mul_idx(x, y) == p
        })
        .count())
}
