//! Ring constructions: quotients, surjective homomorphisms, localization at
//! a multiplicative set, and product-ideal decomposition.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{same_ring, Ring, RingKind};

/// A verified ring homomorphism given by an element-code map.
pub struct RingHom {
    source: Arc<Ring>,
    target: Arc<Ring>,
    map: Vec<usize>,
    surjective: bool,
}

impl RingHom {
    /// Verifies `f(0) = 0`, `f(1) = 1`, and compatibility with both
    /// operations over all element pairs.
    pub fn new(source: &Arc<Ring>, target: &Arc<Ring>, map: Vec<usize>) -> Result<RingHom> {
        let n = source.order();
        if map.len() != n {
            return Err(Error::NotAHomomorphism("map length differs from order"));
        }
        for &v in &map {
            if v >= target.order() {
                return Err(Error::ElementRange {
                    code: v,
                    order: target.order(),
                });
            }
        }
        if map[0] != 0 {
            return Err(Error::NotAHomomorphism("f(0) != 0"));
        }
        if map[source.one()] != target.one() {
            return Err(Error::NotAHomomorphism("f(1) != 1"));
        }
        for a in 0..n {
            for b in 0..n {
                if map[source.add(a, b)] != target.add(map[a], map[b]) {
                    return Err(Error::NotAHomomorphism("f(a+b) != f(a)+f(b)"));
                }
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::NotAHomomorphism("f(a*b) != f(a)*f(b)"));
                }
            }
        }
        let image = Bitset::from_codes(target.order(), map.iter().copied());
        let surjective = image.count() == target.order();
        Ok(RingHom {
            source: Arc::clone(source),
            target: Arc::clone(target),
            map,
            surjective,
        })
    }

    pub fn source(&self) -> &Arc<Ring> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Ring> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, code: usize) -> usize {
        self.map[code]
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn kernel(&self) -> Ideal {
        let members = Bitset::from_codes(
            self.source.order(),
            (0..self.source.order()).filter(|&x| self.map[x] == 0),
        );
        Ideal::from_members_unchecked(&self.source, members)
    }

    /// `f(I)`, verified to be an ideal of the target. Requires a surjective
    /// map; images under non-surjective maps need not be ideals.
    pub fn image_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        if !same_ring(ideal.ring(), &self.source) {
            return Err(Error::RingMismatch);
        }
        if !self.surjective {
            return Err(Error::NotSurjective);
        }
        let members = Bitset::from_codes(
            self.target.order(),
            ideal.members().iter().map(|x| self.map[x]),
        );
        Ideal::from_members(&self.target, members)
    }

    /// `f^{-1}(J)`, verified to be an ideal of the source.
    pub fn preimage_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        if !same_ring(ideal.ring(), &self.target) {
            return Err(Error::RingMismatch);
        }
        let members = Bitset::from_codes(
            self.source.order(),
            (0..self.source.order()).filter(|&x| ideal.contains(self.map[x])),
        );
        Ideal::from_members(&self.source, members)
    }
}

/// `R/I` as a table ring over coset representatives (the smallest element
/// code in each coset), plus the canonical surjection.
pub fn quotient(ring: &Arc<Ring>, ideal: &Ideal) -> Result<(Arc<Ring>, RingHom)> {
    if !same_ring(ideal.ring(), ring) {
        return Err(Error::RingMismatch);
    }
    if !ideal.is_proper() {
        return Err(Error::NotProper);
    }
    let n = ring.order();
    // coset representative of x: the smallest code in x + I
    let mut rep = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..n {
        if rep[x] != usize::MAX {
            continue;
        }
        reps.push(x);
        for i in ideal.members().iter() {
            rep[ring.add(x, i)] = x;
        }
    }
    let m = reps.len();
    debug_assert_eq!(m * ideal.size(), n);
    let class_idx: BTreeMap<usize, usize> =
        reps.iter().enumerate().map(|(i, r)| (*r, i)).collect();
    let cls = |x: usize| class_idx[&rep[x]];
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            add.push(cls(ring.add(a, b)) as u16);
            mul.push(cls(ring.mul(a, b)) as u16);
        }
    }
    let names = reps.iter().map(|r| ring.name(*r).to_string()).collect();
    let spec = format!("quot({},{})", ring.spec(), ideal);
    let q = Ring::from_tables_internal(add, mul, cls(ring.one()), names, spec)?;
    let hom = RingHom::new(ring, &q, (0..n).map(cls).collect())?;
    debug_assert!(hom.is_surjective());
    Ok((q, hom))
}

/// A multiplicatively closed subset containing 1.
pub struct MultiplicativeSet {
    ring: Arc<Ring>,
    members: Bitset,
}

impl MultiplicativeSet {
    /// Validates closure and membership of 1.
    pub fn new(ring: &Arc<Ring>, members: Bitset) -> Result<MultiplicativeSet> {
        if !members.contains(ring.one()) {
            return Err(Error::MissingIdentity);
        }
        for a in members.iter() {
            for b in members.iter() {
                let p = ring.mul(a, b);
                if !members.contains(p) {
                    return Err(Error::NotMultiplicativelyClosed { a, b, product: p });
                }
            }
        }
        Ok(MultiplicativeSet {
            ring: Arc::clone(ring),
            members,
        })
    }

    /// Smallest multiplicative set containing 1 and the given elements.
    pub fn generated(ring: &Arc<Ring>, gens: &[usize]) -> Result<MultiplicativeSet> {
        let n = ring.order();
        for &g in gens {
            if g >= n {
                return Err(Error::ElementRange { code: g, order: n });
            }
        }
        let mut members = Bitset::singleton(n, ring.one());
        let mut list = vec![ring.one()];
        for &g in gens {
            if members.insert(g) {
                list.push(g);
            }
        }
        let mut i = 0;
        while i < list.len() {
            for j in 0..=i {
                let p = ring.mul(list[i], list[j]);
                if members.insert(p) {
                    list.push(p);
                }
            }
            i += 1;
        }
        Ok(MultiplicativeSet {
            ring: Arc::clone(ring),
            members,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn members(&self) -> &Bitset {
        &self.members
    }
}

impl core::fmt::Display for MultiplicativeSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let parts: Vec<&str> = self.members.iter().map(|c| self.ring.name(c)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl core::fmt::Debug for MultiplicativeSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} in {}", self, self.ring.spec())
    }
}

impl core::fmt::Debug for RingHom {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "hom {} -> {}", self.source.spec(), self.target.spec())
    }
}

impl core::fmt::Debug for Localization {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.ring.spec())
    }
}

/// The fraction ring `R_S` with its canonical map and ideal transporter.
pub struct Localization {
    ring: Arc<Ring>,
    hom: RingHom,
    set_members: Bitset,
    /// class of the pair `(a, s)`, indexed by `a * |S| + s_index`
    pair_class: Vec<usize>,
    s_list: Vec<usize>,
}

/// `R_S` built from pairs `(a, s)` modulo `(a,s) ~ (b,t)` iff
/// `u(at - bs) = 0` for some `u in S`; equivalently `at - bs` lies in the
/// S-torsion ideal `{x : ux = 0 for some u in S}`. Class representatives
/// are the lexicographically smallest pairs.
pub fn localize(ring: &Arc<Ring>, set: &MultiplicativeSet) -> Result<Localization> {
    if !same_ring(set.ring(), ring) {
        return Err(Error::RingMismatch);
    }
    if set.members().contains(0) {
        return Err(Error::ZeroInMultiplicativeSet);
    }
    let n = ring.order();
    let s_list: Vec<usize> = set.members().iter().collect();
    let s_count = s_list.len();
    // S-torsion: the kernel of the canonical map
    let mut torsion = Bitset::empty(n);
    for x in 0..n {
        if s_list.iter().any(|&u| ring.mul(u, x) == 0) {
            torsion.insert(x);
        }
    }
    let equivalent = |a: usize, s: usize, b: usize, t: usize| {
        torsion.contains(ring.sub(ring.mul(a, t), ring.mul(b, s)))
    };
    let mut pair_class = vec![usize::MAX; n * s_count];
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for a in 0..n {
        for (si, &s) in s_list.iter().enumerate() {
            let found = reps.iter().position(|&(b, t)| equivalent(a, s, b, t));
            pair_class[a * s_count + si] = match found {
                Some(c) => c,
                None => {
                    reps.push((a, s));
                    reps.len() - 1
                }
            };
        }
    }
    let m = reps.len();
    let s_index: BTreeMap<usize, usize> = s_list.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let cls = |a: usize, s: usize| pair_class[a * s_count + s_index[&s]];
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &(a, s) in &reps {
        for &(b, t) in &reps {
            // a/s + b/t = (at + bs)/st, a/s * b/t = ab/st
            let st = ring.mul(s, t);
            add.push(cls(ring.add(ring.mul(a, t), ring.mul(b, s)), st) as u16);
            mul.push(cls(ring.mul(a, b), st) as u16);
        }
    }
    let names: Vec<String> = reps
        .iter()
        .map(|&(a, s)| format!("{}/{}", ring.name(a), ring.name(s)))
        .collect();
    let set_names: Vec<&str> = s_list.iter().map(|&s| ring.name(s)).collect();
    let spec = format!("loc({},{{{}}})", ring.spec(), set_names.join(","));
    let one = ring.one();
    let localized = Ring::from_tables_internal(add, mul, cls(one, one), names, spec)?;
    let hom = RingHom::new(ring, &localized, (0..n).map(|a| cls(a, one)).collect())?;
    debug_assert!(hom.is_surjective());
    Ok(Localization {
        ring: localized,
        hom,
        set_members: set.members().clone(),
        pair_class,
        s_list,
    })
}

impl Localization {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// The canonical map `a -> a/1` (surjective on finite rings: some power
    /// of each `s in S` is idempotent, which makes `1/s` an image).
    pub fn hom(&self) -> &RingHom {
        &self.hom
    }

    pub fn set_members(&self) -> &Bitset {
        &self.set_members
    }

    /// `I_S = { a/s : a in I, s in S }`, verified to be an ideal of `R_S`.
    pub fn transport(&self, ideal: &Ideal) -> Result<Ideal> {
        if !same_ring(ideal.ring(), self.hom.source()) {
            return Err(Error::RingMismatch);
        }
        let mut members = Bitset::empty(self.ring.order());
        for a in ideal.members().iter() {
            for si in 0..self.s_list.len() {
                members.insert(self.pair_class[a * self.s_list.len() + si]);
            }
        }
        Ideal::from_members(&self.ring, members)
    }
}

/// Splits an ideal of a product ring into its factor ideals; the product of
/// the components reassembles the original ideal.
pub fn component_ideals(ideal: &Ideal) -> Result<Vec<Ideal>> {
    let ring = ideal.ring();
    let RingKind::Product { factors } = ring.kind() else {
        return Err(Error::NotAProduct);
    };
    let mut comps: Vec<Bitset> = factors.iter().map(|f| Bitset::empty(f.order())).collect();
    for x in ideal.members().iter() {
        let parts = ring.product_decode(x).expect("product ring decodes");
        for (set, part) in comps.iter_mut().zip(parts) {
            set.insert(part);
        }
    }
    let components: Vec<Ideal> = comps
        .into_iter()
        .zip(factors)
        .map(|(members, f)| Ideal::from_members(f, members))
        .collect::<Result<_>>()?;
    // reassembly check: every combination of members must land in the ideal
    let mut count = 1usize;
    for c in &components {
        count *= c.size();
    }
    if count != ideal.size() {
        return Err(Error::Internal("product ideal does not split componentwise"));
    }
    Ok(components)
}

/// Rebuilds the product-ring ideal `I_1 x ... x I_n` from factor ideals.
pub fn assemble_product_ideal(ring: &Arc<Ring>, components: &[Ideal]) -> Result<Ideal> {
    let RingKind::Product { factors } = ring.kind() else {
        return Err(Error::NotAProduct);
    };
    if components.len() != factors.len()
        || components
            .iter()
            .zip(factors)
            .any(|(c, f)| !same_ring(c.ring(), f))
    {
        return Err(Error::RingMismatch);
    }
    let mut members = Bitset::empty(ring.order());
    let mut tuple: Vec<usize> = Vec::new();
    fill_product(ring, components, &mut tuple, &mut members);
    Ideal::from_members(ring, members)
}

fn fill_product(ring: &Arc<Ring>, components: &[Ideal], tuple: &mut Vec<usize>, out: &mut Bitset) {
    if tuple.len() == components.len() {
        out.insert(ring.product_encode(tuple).expect("valid components"));
        return;
    }
    let next = &components[tuple.len()];
    for c in next.members().iter() {
        tuple.push(c);
        fill_product(ring, components, tuple, out);
        tuple.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::IdealSet;

    fn zn(n: usize) -> Arc<Ring> {
        Ring::zn(n).unwrap()
    }

    #[test]
    fn quotient_z12_by_6_is_z6() {
        let r = zn(12);
        let i = Ideal::generated(&r, &[6]).unwrap();
        let (q, hom) = quotient(&r, &i).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(**&q, *zn(6));
        assert_eq!(hom.kernel(), i);
        assert!(hom.is_surjective());
    }

    #[test]
    fn quotient_by_zero_is_isomorphic_copy() {
        let r = zn(8);
        let (q, _) = quotient(&r, &Ideal::zero(&r)).unwrap();
        assert_eq!(*q, *r);
    }

    #[test]
    fn quotient_of_product_by_factor() {
        let r = Ring::product(vec![zn(2), zn(4)]).unwrap();
        // {0} x Z_4 = ideal generated by (0,1)
        let i = Ideal::generated(&r, &[1]).unwrap();
        assert_eq!(i.size(), 4);
        let (q, _) = quotient(&r, &i).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn quotient_rejects_full_ideal() {
        let r = zn(12);
        let err = quotient(&r, &Ideal::full(&r)).unwrap_err();
        assert_eq!(err, Error::NotProper);
    }

    #[test]
    fn image_and_preimage_through_canonical_map() {
        let r = zn(12);
        let i = Ideal::generated(&r, &[6]).unwrap();
        let (q, hom) = quotient(&r, &i).unwrap();
        // image of 4Z_12 in Z_6 is {0,2,4}
        let four = Ideal::generated(&r, &[4]).unwrap();
        let img = hom.image_ideal(&four).unwrap();
        assert_eq!(img.members().to_codes(), vec![0, 2, 4]);
        // preimage of zero ideal is the kernel
        let pre = hom.preimage_ideal(&Ideal::zero(&q)).unwrap();
        assert_eq!(pre, i);
        // elementwise-map oracle: f(I) = {f(x) : x in I}
        let expected: Vec<usize> = {
            let mut v: Vec<usize> = four.members().iter().map(|x| hom.apply(x)).collect();
            v.sort();
            v.dedup();
            v
        };
        assert_eq!(img.members().to_codes(), expected);
    }

    #[test]
    fn hom_verification_rejects_non_homomorphisms() {
        let r = zn(4);
        let t = zn(2);
        // x mod 2 is a homomorphism
        assert!(RingHom::new(&r, &t, vec![0, 1, 0, 1]).is_ok());
        // constant 0 map fails f(1) = 1
        assert!(RingHom::new(&r, &t, vec![0, 0, 0, 0]).is_err());
        // swapping breaks additivity
        assert!(RingHom::new(&r, &t, vec![0, 1, 1, 0]).is_err());
    }

    #[test]
    fn multiplicative_set_generation_and_validation() {
        let r = zn(12);
        let s = MultiplicativeSet::generated(&r, &[4]).unwrap();
        // 4*4 = 4 mod 12: closed at {1,4}
        assert_eq!(s.members().to_codes(), vec![1, 4]);
        let bad = Bitset::from_codes(12, [1, 2]);
        assert!(matches!(
            MultiplicativeSet::new(&r, bad).unwrap_err(),
            Error::NotMultiplicativelyClosed { .. }
        ));
        assert_eq!(
            MultiplicativeSet::new(&r, Bitset::from_codes(12, [2, 4, 8])).unwrap_err(),
            Error::MissingIdentity
        );
    }

    #[test]
    fn localize_at_trivial_set() {
        let r = zn(12);
        let s = MultiplicativeSet::generated(&r, &[]).unwrap();
        let loc = localize(&r, &s).unwrap();
        assert_eq!(loc.ring().order(), 12);
        assert_eq!(**loc.ring(), *zn(12));
    }

    #[test]
    fn localize_at_unit_preserves_order() {
        let r = zn(12);
        let s = MultiplicativeSet::generated(&r, &[5]).unwrap();
        let loc = localize(&r, &s).unwrap();
        // 5 is a unit: R_S has 12 equivalence classes
        assert_eq!(loc.ring().order(), 12);
        assert!(loc.hom().is_surjective());
    }

    #[test]
    fn localize_at_idempotent_kills_torsion() {
        // S = {1,4} in Z_12: u*x = 0 for u in S picks up the 3-torsion part,
        // leaving R_S of order 3 (Z_12 = Z_4 x Z_3 structurally).
        let r = zn(12);
        let s = MultiplicativeSet::generated(&r, &[4]).unwrap();
        let loc = localize(&r, &s).unwrap();
        assert_eq!(loc.ring().order(), 3);
        assert_eq!(**loc.ring(), *zn(3));
    }

    #[test]
    fn localize_rejects_zero() {
        let r = zn(12);
        let s = MultiplicativeSet::generated(&r, &[6]).unwrap();
        // 6*6 = 0 mod 12: closure contains 0
        assert!(s.members().contains(0));
        assert_eq!(localize(&r, &s).unwrap_err(), Error::ZeroInMultiplicativeSet);
    }

    #[test]
    fn transport_ideal_through_localization() {
        let r = zn(12);
        let s = MultiplicativeSet::generated(&r, &[5]).unwrap();
        let loc = localize(&r, &s).unwrap();
        let i = Ideal::generated(&r, &[4]).unwrap();
        let transported = loc.transport(&i).unwrap();
        assert_eq!(transported.size(), 3);
    }

    #[test]
    fn component_ideals_roundtrip() {
        let r = Ring::product(vec![zn(2), zn(4)]).unwrap();
        let set = IdealSet::enumerate(&r).unwrap();
        for ideal in set.iter() {
            let comps = component_ideals(ideal).unwrap();
            assert_eq!(comps.len(), 2);
            let back = assemble_product_ideal(&r, &comps).unwrap();
            assert_eq!(&back, ideal);
        }
        // {0} x 2Z_4 projects to ({0}, 2Z_4)
        let i = Ideal::generated(&r, &[2]).unwrap();
        let comps = component_ideals(&i).unwrap();
        assert!(comps[0].is_zero());
        assert_eq!(comps[1].members().to_codes(), vec![0, 2]);
    }

    #[test]
    fn component_ideals_rejects_non_products() {
        let r = zn(12);
        let err = component_ideals(&Ideal::zero(&r)).unwrap_err();
        assert_eq!(err, Error::NotAProduct);
    }
}
