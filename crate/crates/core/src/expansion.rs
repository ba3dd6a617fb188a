//! Expansion functions on ideal lattices as first-class values.
//!
//! An expansion function is a map `δ : I(R) -> I(R)` with `L ⊆ δ(L)` and
//! `J ⊆ I ⇒ δ(J) ⊆ δ(I)`. Since the rings here have enumerable ideal
//! lattices, every expansion is materialized as a total table over the
//! lattice at construction time and validated against both axioms eagerly;
//! `apply` is then a pure lookup. The built-in constructors cover the
//! identity, radical, constant-maximal, integral-closure, and `+J` maps,
//! pointwise sums/intersections, composition, factorwise products, explicit
//! tables, and the expansion a surjection induces on a quotient.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::bitset::Bitset;
use crate::construct::{assemble_product_ideal, component_ideals, RingHom};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealSet};
use crate::ring::{same_ring, Ring, RingKind};

/// Structure of an expansion, kept for display; the semantics live in the
/// materialized table.
#[derive(Clone)]
enum Term {
    Identity,
    Radical,
    ConstMaximal,
    IntegralClosure,
    Plus(Ideal),
    Sum(Box<Expansion>, Box<Expansion>),
    Intersect(Box<Expansion>, Box<Expansion>),
    Compose(Box<Expansion>, Box<Expansion>),
    Product(Vec<Expansion>),
    /// Explicit tables and derived maps (e.g. quotient-induced) display as
    /// the table itself.
    Table,
}

/// A validated expansion function on the ideal lattice of one ring.
#[derive(Clone)]
pub struct Expansion {
    ring: Arc<Ring>,
    term: Term,
    map: BTreeMap<Bitset, Bitset>,
}

/// Outcome of checking the two expansion axioms over a whole lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationReport {
    Pass,
    /// `L ⊄ δ(L)` for this ideal.
    NotExtensive { ideal: Ideal },
    /// `J ⊆ I` but `δ(J) ⊄ δ(I)`.
    NotMonotone { smaller: Ideal, larger: Ideal },
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        matches!(self, ValidationReport::Pass)
    }
}

/// Checks both expansion axioms for a candidate table over the full lattice,
/// reporting the first violation in enumeration order (comparable pairs
/// first, then the containment axiom).
pub fn validate_map(ideals: &IdealSet, map: &BTreeMap<Bitset, Bitset>) -> ValidationReport {
    for smaller in ideals.iter() {
        for larger in ideals.iter() {
            if smaller.members().is_subset(larger.members())
                && !map[smaller.members()].is_subset(&map[larger.members()])
            {
                return ValidationReport::NotMonotone {
                    smaller: smaller.clone(),
                    larger: larger.clone(),
                };
            }
        }
    }
    for i in ideals.iter() {
        let image = &map[i.members()];
        if !i.members().is_subset(image) {
            return ValidationReport::NotExtensive { ideal: i.clone() };
        }
    }
    ValidationReport::Pass
}

impl Expansion {
    fn finish(ideals: &IdealSet, term: Term, map: BTreeMap<Bitset, Bitset>) -> Result<Expansion> {
        match validate_map(ideals, &map) {
            ValidationReport::Pass => Ok(Expansion {
                ring: Arc::clone(ideals.ring()),
                term,
                map,
            }),
            ValidationReport::NotExtensive { ideal } => Err(Error::ExpansionAxiom(format!(
                "{ideal} is not contained in its image"
            ))),
            ValidationReport::NotMonotone { smaller, larger } => Err(Error::ExpansionAxiom(
                format!("{smaller} ⊆ {larger} but images are not nested"),
            )),
        }
    }

    fn tabulate(
        ideals: &IdealSet,
        term: Term,
        f: impl Fn(&Ideal) -> Result<Bitset>,
    ) -> Result<Expansion> {
        let mut map = BTreeMap::new();
        for i in ideals.iter() {
            map.insert(i.members().clone(), f(i)?);
        }
        Expansion::finish(ideals, term, map)
    }

    /// `δ(I) = I`.
    pub fn identity(ideals: &IdealSet) -> Expansion {
        Expansion::tabulate(ideals, Term::Identity, |i| Ok(i.members().clone()))
            .expect("identity is an expansion")
    }

    /// `δ(I) = √I`.
    pub fn radical(ideals: &IdealSet) -> Expansion {
        Expansion::tabulate(ideals, Term::Radical, |i| Ok(i.radical().members().clone()))
            .expect("radical is an expansion")
    }

    /// `δ(I) = M` for proper `I` on a quasi-local ring, `δ(R) = R`.
    pub fn const_maximal(ideals: &IdealSet) -> Result<Expansion> {
        let maximal = ideals.maximal_indices();
        if maximal.len() != 1 {
            return Err(Error::NotQuasiLocal(maximal.len()));
        }
        let m = ideals.get(maximal[0]).members().clone();
        Expansion::tabulate(ideals, Term::ConstMaximal, |i| {
            Ok(if i.is_proper() {
                m.clone()
            } else {
                i.members().clone()
            })
        })
    }

    /// `δ(I) = Ī`, totalized with `δ(R) = R`.
    pub fn integral_closure(ideals: &IdealSet) -> Result<Expansion> {
        Expansion::tabulate(ideals, Term::IntegralClosure, |i| {
            Ok(if i.is_proper() {
                i.integral_closure()?.members().clone()
            } else {
                i.members().clone()
            })
        })
    }

    /// `δ(I) = I + J` for a fixed proper ideal `J`.
    pub fn plus(ideals: &IdealSet, j: &Ideal) -> Result<Expansion> {
        if !same_ring(j.ring(), ideals.ring()) {
            return Err(Error::RingMismatch);
        }
        if !j.is_proper() {
            return Err(Error::NotProper);
        }
        Expansion::tabulate(ideals, Term::Plus(j.clone()), |i| {
            Ok(i.sum(j)?.members().clone())
        })
    }

    /// `δ(I) = δ_1(I) + δ_2(I)`.
    pub fn sum(ideals: &IdealSet, a: Expansion, b: Expansion) -> Result<Expansion> {
        Expansion::combine(ideals, a, b, Term::Sum as fn(_, _) -> _, |ring, x, y| {
            let mut s = x.union(y);
            crate::ideal::additive_closure(ring, &mut s);
            s
        })
    }

    /// `δ(I) = δ_1(I) ∩ δ_2(I)`.
    pub fn intersect(ideals: &IdealSet, a: Expansion, b: Expansion) -> Result<Expansion> {
        Expansion::combine(ideals, a, b, Term::Intersect as fn(_, _) -> _, |_, x, y| {
            x.intersection(y)
        })
    }

    fn combine(
        ideals: &IdealSet,
        a: Expansion,
        b: Expansion,
        term: fn(Box<Expansion>, Box<Expansion>) -> Term,
        op: impl Fn(&Ring, &Bitset, &Bitset) -> Bitset,
    ) -> Result<Expansion> {
        if !same_ring(&a.ring, ideals.ring()) || !same_ring(&b.ring, ideals.ring()) {
            return Err(Error::RingMismatch);
        }
        let mut map = BTreeMap::new();
        for i in ideals.iter() {
            let va = &a.map[i.members()];
            let vb = &b.map[i.members()];
            map.insert(i.members().clone(), op(ideals.ring(), va, vb));
        }
        Expansion::finish(ideals, term(Box::new(a), Box::new(b)), map)
    }

    /// `δ(I) = δ_1(δ_2(I))`.
    pub fn compose(ideals: &IdealSet, outer: Expansion, inner: Expansion) -> Result<Expansion> {
        if !same_ring(&outer.ring, ideals.ring()) || !same_ring(&inner.ring, ideals.ring()) {
            return Err(Error::RingMismatch);
        }
        let mut map = BTreeMap::new();
        for i in ideals.iter() {
            let mid = &inner.map[i.members()];
            map.insert(i.members().clone(), outer.map[mid].clone());
        }
        Expansion::finish(ideals, Term::Compose(Box::new(outer), Box::new(inner)), map)
    }

    /// `δ_×(I_1 × ... × I_n) = δ_1(I_1) × ... × δ_n(I_n)` on a product ring,
    /// one component expansion per factor.
    pub fn product(ideals: &IdealSet, components: Vec<Expansion>) -> Result<Expansion> {
        let ring = ideals.ring();
        let RingKind::Product { factors } = ring.kind() else {
            return Err(Error::NotAProduct);
        };
        if components.len() != factors.len() {
            return Err(Error::InvalidArity(components.len()));
        }
        for (c, f) in components.iter().zip(factors) {
            if !same_ring(&c.ring, f) {
                return Err(Error::RingMismatch);
            }
        }
        let mut map = BTreeMap::new();
        for i in ideals.iter() {
            let comps = component_ideals(i)?;
            let images: Vec<Ideal> = comps
                .iter()
                .zip(&components)
                .map(|(c, d)| d.apply(c))
                .collect::<Result<_>>()?;
            let image = assemble_product_ideal(ring, &images)?;
            map.insert(i.members().clone(), image.members().clone());
        }
        Expansion::finish(ideals, Term::Product(components), map)
    }

    /// Explicit table; must cover every ideal of the lattice and satisfy
    /// both axioms, verified eagerly.
    pub fn table(ideals: &IdealSet, entries: &[(Ideal, Ideal)]) -> Result<Expansion> {
        let ring = ideals.ring();
        let mut map = BTreeMap::new();
        for (key, value) in entries {
            if !same_ring(key.ring(), ring) || !same_ring(value.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            map.insert(key.members().clone(), value.members().clone());
        }
        for i in ideals.iter() {
            if !map.contains_key(i.members()) {
                return Err(Error::IncompleteTable(format!("{i}")));
            }
        }
        Expansion::finish(ideals, Term::Table, map)
    }

    /// The expansion induced on `R/I` by an expansion `γ` on `R` through
    /// `δ((L + I)/I) = γ(L + I)/I`. Every ideal of the quotient is the image
    /// of its full preimage, which makes the rule total; well-definedness is
    /// asserted by checking that every ideal `L` of `R` yields the entry
    /// already recorded for its image.
    pub fn quotient_induced(
        gamma: &Expansion,
        hom: &RingHom,
        quotient_ideals: &IdealSet,
    ) -> Result<Expansion> {
        if !same_ring(&gamma.ring, hom.source()) {
            return Err(Error::RingMismatch);
        }
        if !same_ring(quotient_ideals.ring(), hom.target()) {
            return Err(Error::RingMismatch);
        }
        if !hom.is_surjective() {
            return Err(Error::NotSurjective);
        }
        let kernel = hom.kernel();
        let mut map = BTreeMap::new();
        for q_ideal in quotient_ideals.iter() {
            let preimage = hom.preimage_ideal(q_ideal)?;
            let gamma_image = gamma.apply(&preimage)?;
            let induced = hom.image_ideal(&gamma_image)?;
            map.insert(q_ideal.members().clone(), induced.members().clone());
        }
        // independence of the representative ideal: γ(L + I)/I agrees with
        // the recorded entry for (L + I)/I, for every L in I(R)
        for l_members in gamma.map.keys() {
            let l = Ideal::from_members_unchecked(&gamma.ring, l_members.clone());
            let l_plus = l.sum(&kernel)?;
            let image = hom.image_ideal(&l_plus)?;
            let induced = hom.image_ideal(&gamma.apply(&l_plus)?)?;
            if &map[image.members()] != induced.members() {
                return Err(Error::Internal("quotient-induced expansion ill-defined"));
            }
        }
        Expansion::finish(quotient_ideals, Term::Table, map)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Evaluates the expansion. The table is total over the lattice, so a
    /// missing entry means the ideal belongs to another ring.
    pub fn apply(&self, ideal: &Ideal) -> Result<Ideal> {
        if !same_ring(ideal.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let image = self
            .map
            .get(ideal.members())
            .ok_or(Error::Internal("ideal missing from expansion table"))?;
        Ok(Ideal::from_members_unchecked(&self.ring, image.clone()))
    }

    /// Raw table lookup by membership set.
    pub fn apply_members(&self, members: &Bitset) -> Option<&Bitset> {
        self.map.get(members)
    }

    /// Re-checks both axioms over the lattice. Constructed values always
    /// pass; this is the re-certification entry point for reports and tests.
    pub fn validate(&self, ideals: &IdealSet) -> Result<ValidationReport> {
        if !same_ring(ideals.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(validate_map(ideals, &self.map))
    }
}

/// Extensional equality: same ring, same table.
impl PartialEq for Expansion {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.map == other.map
    }
}
impl Eq for Expansion {}

impl core::fmt::Display for Expansion {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match &self.term {
            Term::Identity => write!(f, "id"),
            Term::Radical => write!(f, "rad"),
            Term::ConstMaximal => write!(f, "maxim"),
            Term::IntegralClosure => write!(f, "intclo"),
            Term::Plus(j) => write!(f, "plus({j})"),
            Term::Sum(a, b) => write!(f, "sum({a},{b})"),
            Term::Intersect(a, b) => write!(f, "cap({a},{b})"),
            Term::Compose(a, b) => write!(f, "comp({a},{b})"),
            Term::Product(cs) => {
                write!(f, "prodx(")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
            Term::Table => {
                // deterministic order: by cardinality, then bitset order
                let mut entries: Vec<(&Bitset, &Bitset)> =
                    self.map.iter().map(|(k, v)| (k, v)).collect();
                entries.sort_by(|(a, _), (b, _)| a.count().cmp(&b.count()).then_with(|| a.cmp(b)));
                write!(f, "table{{")?;
                for (i, (k, v)) in entries.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    let key = Ideal::from_members_unchecked(&self.ring, (*k).clone());
                    let value = Ideal::from_members_unchecked(&self.ring, (*v).clone());
                    write!(f, "{key}->{value}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

impl core::fmt::Debug for Expansion {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} on {}", self, self.ring.spec())
    }
}
