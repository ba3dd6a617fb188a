//! Ideals of enumerable finite rings.
//!
//! An ideal is canonically its membership bitset; generator lists are kept
//! only for display. All lattice operations (sum, product, intersection,
//! radical, integral closure) and full enumeration of the ideal lattice are
//! exhaustive in the ring order.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::ring::{same_ring, Ring, ORDER_CAP};

/// An ideal of a specific ring, immutable after construction.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    members: Bitset,
    gens: Vec<usize>,
}

impl Ideal {
    /// The zero ideal `{0}`.
    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal {
            ring: Arc::clone(ring),
            members: Bitset::singleton(ring.order(), 0),
            gens: Vec::new(),
        }
    }

    /// The whole ring as an ideal.
    pub fn full(ring: &Arc<Ring>) -> Ideal {
        Ideal::from_members_unchecked(ring, Bitset::full(ring.order()))
    }

    /// Smallest ideal containing `gens`: all ring multiples of the
    /// generators, closed under addition to a fixpoint.
    pub fn generated(ring: &Arc<Ring>, gens: &[usize]) -> Result<Ideal> {
        let n = ring.order();
        for &g in gens {
            if g >= n {
                return Err(Error::ElementRange { code: g, order: n });
            }
        }
        let mut members = Bitset::singleton(n, 0);
        for &g in gens {
            for r in 0..n {
                members.insert(ring.mul(r, g));
            }
        }
        additive_closure(ring, &mut members);
        Ok(Ideal {
            ring: Arc::clone(ring),
            members,
            gens: gens.to_vec(),
        })
    }

    /// Wraps a membership set after verifying the ideal axioms.
    pub fn from_members(ring: &Arc<Ring>, members: Bitset) -> Result<Ideal> {
        if let Some(reason) = ideal_defect(ring, &members) {
            return Err(Error::NotAnIdeal(reason));
        }
        Ok(Ideal::from_members_unchecked(ring, members))
    }

    pub(crate) fn from_members_unchecked(ring: &Arc<Ring>, members: Bitset) -> Ideal {
        debug_assert!(ideal_defect(ring, &members).is_none());
        let gens = minimal_generators(ring, &members);
        Ideal {
            ring: Arc::clone(ring),
            members,
            gens,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn members(&self) -> &Bitset {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    #[inline]
    pub fn contains(&self, code: usize) -> bool {
        self.members.contains(code)
    }

    /// Cardinality of the ideal.
    pub fn size(&self) -> usize {
        self.members.count()
    }

    pub fn is_zero(&self) -> bool {
        self.members.count() == 1
    }

    pub fn is_proper(&self) -> bool {
        self.members.count() != self.ring.order()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    fn check_same_ring(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `I + J`: additive closure of the union.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut members = self.members.union(&other.members);
        additive_closure(&self.ring, &mut members);
        Ok(Ideal::from_members_unchecked(&self.ring, members))
    }

    /// `I ∩ J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        Ok(Ideal::from_members_unchecked(
            &self.ring,
            self.members.intersection(&other.members),
        ))
    }

    /// `I * J`: generated by the pairwise products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        Ok(Ideal::from_members_unchecked(
            &self.ring,
            product_members(&self.ring, &self.members, &other.members),
        ))
    }

    /// `I^n`, with `I^0 = R` by the empty-product convention.
    pub fn power(&self, n: usize) -> Ideal {
        let mut acc = Ideal::full(&self.ring);
        for _ in 0..n {
            acc = Ideal::from_members_unchecked(
                &self.ring,
                product_members(&self.ring, &acc.members, &self.members),
            );
        }
        acc
    }

    /// `√I = {x : x^m ∈ I for some m >= 1}`. Power sequences cycle within
    /// `order` steps, so each element is decided in at most `order`
    /// multiplications. `√R = R` falls out of the scan.
    pub fn radical(&self) -> Ideal {
        let n = self.ring.order();
        let mut members = Bitset::empty(n);
        for x in 0..n {
            let mut p = x;
            for _ in 0..n {
                if self.members.contains(p) {
                    members.insert(x);
                    break;
                }
                p = self.ring.mul(p, x);
            }
        }
        Ideal::from_members_unchecked(&self.ring, members)
    }

    /// `√{0}`: the ideal of nilpotent elements.
    pub fn nilradical(ring: &Arc<Ring>) -> Ideal {
        Ideal::zero(ring).radical()
    }

    /// Integral closure of a proper ideal: `r` is integral over `I` when
    /// `r^n + a_1 r^{n-1} + ... + a_n = 0` with `a_i ∈ I^i`. The value sets
    /// `T_n = {r^n + a_1 r^{n-1} + ... + a_n}` satisfy `T_1 = r + I` and
    /// `T_{n+1} = r*T_n + I^{n+1}`, so `r` is integral iff `0 ∈ T_n` for
    /// some `n`. The pair `(T_n, I^n)` determines the rest of the sequence,
    /// and lives in a finite state space, so detecting a repeated pair
    /// decides non-membership.
    pub fn integral_closure(&self) -> Result<Ideal> {
        if !self.is_proper() {
            return Err(Error::NotProper);
        }
        let ring = &self.ring;
        let n = ring.order();
        let mut members = Bitset::empty(n);
        for r in 0..n {
            if integral_over(ring, r, &self.members)? {
                members.insert(r);
            }
        }
        let closure = Ideal::from_members_unchecked(ring, members);
        debug_assert!(self.is_subset(&closure) && closure.is_subset(&self.radical()));
        Ok(closure)
    }
}

fn integral_over(ring: &Arc<Ring>, r: usize, ideal: &Bitset) -> Result<bool> {
    let n = ring.order();
    // T_1 = r + I
    let mut t = Bitset::empty(n);
    for i in ideal.iter() {
        t.insert(ring.add(r, i));
    }
    let mut power = ideal.clone();
    let mut seen: BTreeSet<(Bitset, Bitset)> = BTreeSet::new();
    for _ in 0..n * n {
        if t.contains(0) {
            return Ok(true);
        }
        if !seen.insert((t.clone(), power.clone())) {
            return Ok(false);
        }
        power = product_members(ring, &power, ideal);
        let mut next = Bitset::empty(n);
        for s in t.iter() {
            let rs = ring.mul(r, s);
            for j in power.iter() {
                next.insert(ring.add(rs, j));
            }
        }
        t = next;
    }
    Err(Error::Internal("integral closure iteration exceeded order^2"))
}

/// Closes `members` under addition in place. Every pair of (original or
/// newly added) members is eventually summed, so the result is the additive
/// closure; multiplicative absorption is preserved by distributivity.
pub(crate) fn additive_closure(ring: &Ring, members: &mut Bitset) {
    let mut list: Vec<usize> = members.iter().collect();
    let mut i = 0;
    while i < list.len() {
        for j in 0..=i {
            let s = ring.add(list[i], list[j]);
            if members.insert(s) {
                list.push(s);
            }
        }
        i += 1;
    }
}

fn product_members(ring: &Ring, a: &Bitset, b: &Bitset) -> Bitset {
    let mut members = Bitset::singleton(ring.order(), 0);
    for x in a.iter() {
        for y in b.iter() {
            members.insert(ring.mul(x, y));
        }
    }
    additive_closure(ring, &mut members);
    members
}

/// `None` when the set satisfies the ideal axioms, otherwise a description
/// of the first failure found.
fn ideal_defect(ring: &Ring, members: &Bitset) -> Option<String> {
    if !members.contains(0) {
        return Some("0 is missing".into());
    }
    let list: Vec<usize> = members.iter().collect();
    for &x in &list {
        for &y in &list {
            let s = ring.add(x, y);
            if !members.contains(s) {
                return Some(format!(
                    "{} + {} = {} escapes",
                    ring.name(x),
                    ring.name(y),
                    ring.name(s)
                ));
            }
        }
        for r in 0..ring.order() {
            let p = ring.mul(r, x);
            if !members.contains(p) {
                return Some(format!(
                    "{} * {} = {} escapes",
                    ring.name(r),
                    ring.name(x),
                    ring.name(p)
                ));
            }
        }
    }
    None
}

/// Greedy minimal generating set: walk member codes in ascending order and
/// keep each one not already generated. Deterministic, and small in practice
/// (principal ideals get a single generator).
fn minimal_generators(ring: &Arc<Ring>, members: &Bitset) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut span = Bitset::singleton(ring.order(), 0);
    for m in members.iter() {
        if span.contains(m) {
            continue;
        }
        gens.push(m);
        for r in 0..ring.order() {
            span.insert(ring.mul(r, m));
        }
        additive_closure(ring, &mut span);
    }
    debug_assert_eq!(&span, members);
    gens
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && same_ring(&self.ring, &other.ring)
    }
}
impl Eq for Ideal {}

impl core::fmt::Display for Ideal {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let gens = minimal_generators(&self.ring, &self.members);
        let parts: Vec<&str> = gens.iter().map(|g| self.ring.name(*g)).collect();
        write!(f, "gen({})", parts.join(","))
    }
}

impl core::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} = {:?}", self, self.members)
    }
}

/// All ideals of a ring, sorted by cardinality then bitset order, so index 0
/// is `{0}` and the last index is `R`.
pub struct IdealSet {
    ring: Arc<Ring>,
    ideals: Vec<Ideal>,
    index: BTreeMap<Bitset, usize>,
}

impl IdealSet {
    /// Enumerates every ideal: all principal ideals, closed under pairwise
    /// sum to a fixpoint. Complete because every ideal is a finite sum of
    /// principal ideals.
    pub fn enumerate(ring: &Arc<Ring>) -> Result<IdealSet> {
        let n = ring.order();
        if n > ORDER_CAP {
            return Err(Error::OrderCapExceeded {
                order: n,
                cap: ORDER_CAP,
            });
        }
        let mut found: BTreeSet<Bitset> = BTreeSet::new();
        let mut list: Vec<Bitset> = Vec::new();
        for g in 0..n {
            let p = Ideal::generated(ring, &[g])?.members().clone();
            if found.insert(p.clone()) {
                list.push(p);
            }
        }
        let mut i = 0;
        while i < list.len() {
            for j in 0..=i {
                let mut s = list[i].union(&list[j]);
                additive_closure(ring, &mut s);
                if !found.contains(&s) {
                    found.insert(s.clone());
                    list.push(s);
                }
            }
            i += 1;
        }
        let mut ideals: Vec<Ideal> = list
            .into_iter()
            .map(|m| Ideal::from_members_unchecked(ring, m))
            .collect();
        ideals.sort_by(|a, b| {
            a.size()
                .cmp(&b.size())
                .then_with(|| a.members().cmp(b.members()))
        });
        let index = ideals
            .iter()
            .enumerate()
            .map(|(i, ideal)| (ideal.members().clone(), i))
            .collect();
        Ok(IdealSet {
            ring: Arc::clone(ring),
            ideals,
            index,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, idx: usize) -> &Ideal {
        &self.ideals[idx]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Ideal> {
        self.ideals.iter()
    }

    /// Index of an ideal by membership set.
    pub fn position(&self, members: &Bitset) -> Option<usize> {
        self.index.get(members).copied()
    }

    /// `{0}` is always index 0.
    pub fn zero_idx(&self) -> usize {
        0
    }

    /// `R` is always the last index.
    pub fn full_idx(&self) -> usize {
        self.ideals.len() - 1
    }

    pub fn proper_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.ideals.len()).filter(|i| self.ideals[*i].is_proper())
    }

    /// Indices of maximal ideals: proper ideals with no proper superset.
    pub fn maximal_indices(&self) -> Vec<usize> {
        self.proper_indices()
            .filter(|&i| {
                !self.proper_indices().any(|j| {
                    j != i && self.ideals[i].members().is_subset(self.ideals[j].members())
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn zn(n: usize) -> Arc<Ring> {
        Ring::zn(n).unwrap()
    }

    #[test]
    fn generated_z12() {
        let r = zn(12);
        let i = Ideal::generated(&r, &[6]).unwrap();
        assert_eq!(i.members().to_codes(), vec![0, 6]);
        let zero = Ideal::generated(&r, &[]).unwrap();
        assert_eq!(zero, Ideal::zero(&r));
    }

    #[test]
    fn generated_in_product_closure_oracle() {
        // Z_2 x Z_4, gens {(0,2)}: multiples are (0,0) and (0,2); already
        // closed under addition.
        let r = Ring::product(vec![zn(2), zn(4)]).unwrap();
        let i = Ideal::generated(&r, &[2]).unwrap();
        assert_eq!(i.members().to_codes(), vec![0, 2]);
    }

    #[test]
    fn lattice_identities() {
        let r = zn(12);
        let i = Ideal::generated(&r, &[6]).unwrap();
        let zero = Ideal::zero(&r);
        assert_eq!(i.intersect(&i).unwrap(), i);
        assert_eq!(i.sum(&zero).unwrap(), i);
        // I^2 = {0} for I = {0,6} in Z_12
        assert!(i.power(2).is_zero());
        // product({0,6}, 4Z_12) = {0}: 6*4 = 24 = 0 mod 12
        let j = Ideal::generated(&r, &[4]).unwrap();
        assert!(i.product(&j).unwrap().is_zero());
        assert_eq!(i.power(0), Ideal::full(&r));
    }

    #[test]
    fn ring_mismatch_rejected() {
        let a = Ideal::zero(&zn(12));
        let b = Ideal::zero(&zn(8));
        assert_eq!(a.sum(&b).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn radical_examples() {
        // √{0} = 6R in Z_36
        let r = zn(36);
        let rad = Ideal::nilradical(&r);
        assert_eq!(rad, Ideal::generated(&r, &[6]).unwrap());
        // √R = R
        assert_eq!(Ideal::full(&r).radical(), Ideal::full(&r));
        // √{0} = {0,6} in Z_12
        let r = zn(12);
        assert_eq!(Ideal::nilradical(&r).members().to_codes(), vec![0, 6]);
        // Boolean rings are reduced
        let b = Ring::boolean(2).unwrap();
        assert!(Ideal::nilradical(&b).is_zero());
    }

    #[test]
    fn radical_in_trunc_poly() {
        // Z_4[X]/(X^3): √(X^2) = (2, X)
        let r = Ring::trunc_poly(4, 3).unwrap();
        let x = 4;
        let x2 = 16;
        let i = Ideal::generated(&r, &[x2]).unwrap();
        let expected = Ideal::generated(&r, &[2, x]).unwrap();
        assert_eq!(i.radical(), expected);
    }

    #[test]
    fn radical_laws_exhaustive() {
        for n in [8, 12, 16, 18] {
            let r = zn(n);
            let set = IdealSet::enumerate(&r).unwrap();
            for i in set.iter() {
                let rad = i.radical();
                assert!(i.is_subset(&rad));
                assert_eq!(rad.radical(), rad);
                for j in set.iter() {
                    let lhs = i.intersect(j).unwrap().radical();
                    let rhs = rad.intersect(&j.radical()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn power_chain_descends() {
        let r = zn(16);
        let i = Ideal::generated(&r, &[2]).unwrap();
        for k in 1..8 {
            assert!(i.power(k + 1).is_subset(&i.power(k)));
        }
    }

    #[test]
    fn enumerate_zn_matches_divisor_lattice() {
        // Ideals of Z_n are exactly dZ_n for d | n.
        for n in 2..=24 {
            let r = zn(n);
            let set = IdealSet::enumerate(&r).unwrap();
            let mut expected: Vec<Bitset> = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| Bitset::from_codes(n, (0..n).filter(move |x| x % d == 0)))
                .collect();
            expected.sort();
            expected.dedup();
            assert_eq!(set.len(), expected.len(), "Z_{n}");
            for m in &expected {
                assert!(set.position(m).is_some(), "missing ideal in Z_{n}");
            }
        }
    }

    #[test]
    fn enumerate_product_matches_component_pairs() {
        // Every ideal of Z_a x Z_b is a product of component ideals.
        let r = Ring::product(vec![zn(2), zn(4)]).unwrap();
        let set = IdealSet::enumerate(&r).unwrap();
        // d(2) * d(4) = 2 * 3
        assert_eq!(set.len(), 6);
        let b = Ring::boolean(2).unwrap();
        assert_eq!(IdealSet::enumerate(&b).unwrap().len(), 4);
    }

    #[test]
    fn enumerate_matches_full_subset_scan() {
        // Definition-level oracle: every subset of the ring that satisfies
        // the ideal axioms must be enumerated, and nothing else.
        for r in [zn(8), zn(12), Ring::product(vec![zn(2), zn(4)]).unwrap()] {
            let n = r.order();
            let set = IdealSet::enumerate(&r).unwrap();
            let mut count = 0;
            for mask in 0u32..(1 << n) {
                let members = Bitset::from_codes(n, (0..n).filter(|i| mask & (1 << i) != 0));
                if ideal_defect(&r, &members).is_none() {
                    count += 1;
                    assert!(set.position(&members).is_some());
                }
            }
            assert_eq!(set.len(), count);
        }
    }

    #[test]
    fn enumeration_order_is_canonical() {
        let r = zn(12);
        let set = IdealSet::enumerate(&r).unwrap();
        let sizes: Vec<usize> = set.iter().map(|i| i.size()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 4, 6, 12]);
        assert!(set.get(set.zero_idx()).is_zero());
        assert!(!set.get(set.full_idx()).is_proper());
    }

    #[test]
    fn maximal_ideals_and_quasi_local() {
        let set = IdealSet::enumerate(&zn(8)).unwrap();
        assert_eq!(set.maximal_indices().len(), 1);
        let set = IdealSet::enumerate(&zn(12)).unwrap();
        // 2Z_12 and 3Z_12
        assert_eq!(set.maximal_indices().len(), 2);
    }

    #[test]
    fn integral_closure_of_zero_is_nilradical() {
        for n in [8, 12, 36] {
            let r = zn(n);
            let closure = Ideal::zero(&r).integral_closure().unwrap();
            assert_eq!(closure, Ideal::nilradical(&r));
        }
    }

    #[test]
    fn integral_closure_sandwich_z12() {
        let r = zn(12);
        let set = IdealSet::enumerate(&r).unwrap();
        for i in set.iter().filter(|i| i.is_proper()) {
            let bar = i.integral_closure().unwrap();
            assert!(i.is_subset(&bar));
            assert!(bar.is_subset(&i.radical()));
        }
    }

    /// Definition-level brute force for integral closure: search all monic
    /// relations of degree up to `max_deg` with coefficient tuples drawn
    /// from the ideal powers. Independent of the `T_n` recurrence.
    fn integral_closure_brute(ring: &Arc<Ring>, ideal: &Ideal, max_deg: usize) -> Bitset {
        let n = ring.order();
        let powers: Vec<Vec<usize>> = (1..=max_deg)
            .map(|k| ideal.power(k).members().to_codes())
            .collect();
        let mut result = Bitset::empty(n);
        for r in 0..n {
            'deg: for deg in 1..=max_deg {
                // enumerate all tuples (a_1, .., a_deg), a_i ∈ I^i
                let mut idx = vec![0usize; deg];
                loop {
                    let mut val = ring.pow(r, deg);
                    for (i, &ai) in idx.iter().enumerate() {
                        let coeff = powers[i][ai];
                        val = ring.add(val, ring.mul(coeff, ring.pow(r, deg - 1 - i)));
                    }
                    if val == 0 {
                        result.insert(r);
                        break 'deg;
                    }
                    // odometer increment
                    let mut pos = 0;
                    loop {
                        if pos == deg {
                            break;
                        }
                        idx[pos] += 1;
                        if idx[pos] < powers[pos].len() {
                            break;
                        }
                        idx[pos] = 0;
                        pos += 1;
                    }
                    if pos == deg {
                        break;
                    }
                }
            }
        }
        result
    }

    #[test]
    fn integral_closure_matches_definition_brute_force() {
        let r = zn(12);
        let set = IdealSet::enumerate(&r).unwrap();
        for i in set.iter().filter(|i| i.is_proper()) {
            let fast = i.integral_closure().unwrap();
            let brute = integral_closure_brute(&r, i, 6);
            assert_eq!(
                fast.members(),
                &brute,
                "integral closure disagrees on {i} in Z_12"
            );
        }
    }

    #[test]
    fn display_uses_minimal_generators() {
        let r = zn(12);
        let i = Ideal::from_members_unchecked(&r, Bitset::from_codes(12, [0, 6]));
        assert_eq!(format!("{i}"), "gen(6)");
        assert_eq!(format!("{}", Ideal::zero(&r)), "gen()");
    }
}
