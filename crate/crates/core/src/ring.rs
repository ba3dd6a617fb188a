//! Finite commutative rings with identity.
//!
//! Every ring is encoded on element codes `0..order` with `0` the additive
//! identity, and carries flat `order * order` addition and multiplication
//! tables, so arithmetic is two lookups regardless of how the ring was
//! constructed. Structural constructors (`zn`, `product`, `trunc_poly`)
//! fill the tables from the defining arithmetic; `from_tables` accepts
//! untrusted tables and verifies the full axiom set exhaustively.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::Bitset;
use crate::error::{Error, Result};

/// Hard cap on ring order; everything here is exhaustive in the order, and
/// the operation tables alone are `order^2` entries.
pub const ORDER_CAP: usize = 4096;

/// Cap for `from_tables`, whose axiom verification is cubic in the order.
pub const TABLE_VERIFY_CAP: usize = 512;

/// How the ring was built; drives element display and product decomposition.
#[derive(Debug, Clone)]
pub enum RingKind {
    /// Integers modulo `n`.
    Zn { n: usize },
    /// Direct product with componentwise operations; element codes are
    /// mixed-radix over the factor codes, leftmost factor most significant.
    Product { factors: Vec<Arc<Ring>> },
    /// `Z_n[X]/(X^k)`: coefficient tuples `[c0, .., c_{k-1}]`, code is the
    /// base-`n` number with `c0` least significant.
    TruncPoly { n: usize, k: usize },
    /// Explicit operation tables (user input, quotients, localizations).
    Table,
}

/// A finite commutative ring with `1 != 0`, immutable after construction.
pub struct Ring {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    one: usize,
    names: Vec<String>,
    spec: String,
    kind: RingKind,
}

impl Ring {
    /// `Z_n` for `n >= 2`.
    pub fn zn(n: usize) -> Result<Arc<Ring>> {
        if n < 2 {
            return Err(Error::InvalidOrder(n));
        }
        check_cap(n)?;
        let add = table(n, |a, b| (a + b) % n);
        let mul = table(n, |a, b| (a * b) % n);
        let names = (0..n).map(|i| i.to_string()).collect();
        Ok(Arc::new(Ring::assemble(
            n,
            add,
            mul,
            1,
            names,
            format!("Z({n})"),
            RingKind::Zn { n },
        )))
    }

    /// Direct product of at least two rings.
    pub fn product(factors: Vec<Arc<Ring>>) -> Result<Arc<Ring>> {
        Self::product_with_spec(factors, None)
    }

    /// Boolean ring `Z_2^k`; `bool(1)` is plain `Z_2`.
    pub fn boolean(k: usize) -> Result<Arc<Ring>> {
        if k == 0 {
            return Err(Error::InvalidExponent(k));
        }
        if k == 1 {
            let z2 = Self::zn(2)?;
            return Ok(Arc::new(Ring {
                spec: "bool(1)".to_string(),
                ..Arc::try_unwrap(z2).map_err(|_| Error::Internal("fresh arc"))?
            }));
        }
        let z2 = Self::zn(2)?;
        let factors = (0..k).map(|_| Arc::clone(&z2)).collect();
        Self::product_with_spec(factors, Some(format!("bool({k})")))
    }

    fn product_with_spec(factors: Vec<Arc<Ring>>, spec: Option<String>) -> Result<Arc<Ring>> {
        if factors.len() < 2 {
            return Err(Error::InvalidArity(factors.len()));
        }
        let order: usize = factors.iter().map(|f| f.order()).product();
        check_cap(order)?;
        let decode = |code: usize| -> Vec<usize> {
            let mut rest = code;
            let mut comps = vec![0; factors.len()];
            for (i, f) in factors.iter().enumerate().rev() {
                comps[i] = rest % f.order();
                rest /= f.order();
            }
            comps
        };
        let componentwise = |op: fn(&Ring, usize, usize) -> usize| {
            table(order, |a, b| {
                let (ca, cb) = (decode(a), decode(b));
                let mut code = 0;
                for (i, f) in factors.iter().enumerate() {
                    code = code * f.order() + op(f, ca[i], cb[i]);
                }
                code
            })
        };
        let add = componentwise(Ring::add);
        let mul = componentwise(Ring::mul);
        let one: usize = factors.iter().fold(0, |acc, f| acc * f.order() + f.one());
        let names = (0..order)
            .map(|code| {
                let comps = decode(code);
                let parts: Vec<&str> = comps
                    .iter()
                    .zip(&factors)
                    .map(|(c, f)| f.name(*c))
                    .collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let spec = spec.unwrap_or_else(|| {
            let parts: Vec<&str> = factors.iter().map(|f| f.spec()).collect();
            format!("prod({})", parts.join(","))
        });
        Ok(Arc::new(Ring::assemble(
            order,
            add,
            mul,
            one,
            names,
            spec,
            RingKind::Product { factors },
        )))
    }

    /// `Z_n[X]/(X^k)` for `n >= 2`, `k >= 1`; order `n^k`.
    pub fn trunc_poly(n: usize, k: usize) -> Result<Arc<Ring>> {
        if n < 2 {
            return Err(Error::InvalidOrder(n));
        }
        if k < 1 {
            return Err(Error::InvalidExponent(k));
        }
        let order = n
            .checked_pow(k as u32)
            .filter(|o| *o <= ORDER_CAP)
            .ok_or(Error::OrderCapExceeded {
                order: usize::MAX,
                cap: ORDER_CAP,
            })?;
        let decode = |code: usize| -> Vec<usize> {
            let mut rest = code;
            (0..k)
                .map(|_| {
                    let c = rest % n;
                    rest /= n;
                    c
                })
                .collect()
        };
        let encode = |coeffs: &[usize]| -> usize {
            coeffs.iter().rev().fold(0, |acc, c| acc * n + c % n)
        };
        let add = table(order, |a, b| {
            let (ca, cb) = (decode(a), decode(b));
            let sum: Vec<usize> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % n).collect();
            encode(&sum)
        });
        let mul = table(order, |a, b| {
            let (ca, cb) = (decode(a), decode(b));
            let mut prod = vec![0usize; k];
            for (i, x) in ca.iter().enumerate() {
                for (j, y) in cb.iter().enumerate() {
                    if i + j < k {
                        prod[i + j] = (prod[i + j] + x * y) % n;
                    }
                }
            }
            encode(&prod)
        });
        let names = (0..order)
            .map(|code| {
                let coeffs: Vec<String> = decode(code).iter().map(|c| c.to_string()).collect();
                format!("[{}]", coeffs.join(","))
            })
            .collect();
        Ok(Arc::new(Ring::assemble(
            order,
            add,
            mul,
            1,
            names,
            format!("trunc(Z({n}),{k})"),
            RingKind::TruncPoly { n, k },
        )))
    }

    /// Builds a ring from explicit tables, exhaustively verifying every
    /// axiom. `zero` and `one` give the identity positions; if `zero != 0`
    /// the encoding is normalized by swapping codes `0` and `zero`.
    pub fn from_tables(
        mut add: Vec<Vec<usize>>,
        mut mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
        mut names: Vec<String>,
        spec: String,
    ) -> Result<Arc<Ring>> {
        let n = add.len();
        if n < 2 {
            return Err(Error::InvalidOrder(n));
        }
        if n > TABLE_VERIFY_CAP {
            return Err(Error::OrderCapExceeded {
                order: n,
                cap: TABLE_VERIFY_CAP,
            });
        }
        if mul.len() != n || add.iter().chain(mul.iter()).any(|row| row.len() != n) {
            return Err(Error::NotAHomomorphism("operation tables are not square"));
        }
        for row in add.iter().chain(mul.iter()) {
            for &v in row {
                if v >= n {
                    return Err(Error::ElementRange { code: v, order: n });
                }
            }
        }
        if zero >= n || one >= n {
            return Err(Error::ElementRange {
                code: zero.max(one),
                order: n,
            });
        }
        if names.len() != n {
            return Err(Error::Internal("name list length mismatch"));
        }
        let mut one = one;
        if zero != 0 {
            let swap = |c: usize| match c {
                0 => zero,
                c if c == zero => 0,
                c => c,
            };
            for t in [&mut add, &mut mul] {
                let mut out = vec![vec![0usize; n]; n];
                for a in 0..n {
                    for b in 0..n {
                        out[swap(a)][swap(b)] = swap(t[a][b]);
                    }
                }
                *t = out;
            }
            names.swap(0, zero);
            one = swap(one);
        }
        let flat = |t: &Vec<Vec<usize>>| {
            let mut f = Vec::with_capacity(n * n);
            for row in t {
                f.extend(row.iter().map(|v| *v as u16));
            }
            f
        };
        let ring = Ring::assemble(n, flat(&add), flat(&mul), one, names, spec, RingKind::Table);
        ring.verify_axioms()?;
        Ok(Arc::new(ring))
    }

    /// Internal constructor for quotients and localizations, whose tables
    /// come from arithmetic on a verified ring. Still re-verified while the
    /// cubic check is cheap.
    pub(crate) fn from_tables_internal(
        add: Vec<u16>,
        mul: Vec<u16>,
        one: usize,
        names: Vec<String>,
        spec: String,
    ) -> Result<Arc<Ring>> {
        let n = names.len();
        let ring = Ring::assemble(n, add, mul, one, names, spec, RingKind::Table);
        if n <= 128 {
            ring.verify_axioms()?;
        }
        Ok(Arc::new(ring))
    }

    fn assemble(
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        one: usize,
        names: Vec<String>,
        spec: String,
        kind: RingKind,
    ) -> Ring {
        let mut neg = vec![0u16; order];
        for a in 0..order {
            for b in 0..order {
                if add[a * order + b] == 0 {
                    neg[a] = b as u16;
                    break;
                }
            }
        }
        Ring {
            order,
            add,
            mul,
            neg,
            one,
            names,
            spec,
            kind,
        }
    }

    fn verify_axioms(&self) -> Result<()> {
        let n = self.order;
        let fail = |law, a, b, c| Err(Error::RingAxiom { law, a, b, c });
        if self.one == 0 {
            return fail("1 != 0", 0, 0, 0);
        }
        for a in 0..n {
            if self.add(0, a) != a {
                return fail("0 + a = a", a, 0, 0);
            }
            if self.mul(self.one, a) != a {
                return fail("1 * a = a", a, 0, 0);
            }
            if (0..n).all(|b| self.add(a, b) != 0) {
                return fail("additive inverse exists", a, 0, 0);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("a + b = b + a", a, b, 0);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("a * b = b * a", a, b, 0);
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("(a + b) + c = a + (b + c)", a, b, c);
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("(a * b) * c = a * (b * c)", a, b, c);
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("a * (b + c) = a*b + a*c", a, b, c);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = self.one;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn name(&self, code: usize) -> &str {
        &self.names[code]
    }

    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    /// `x^m = 0` for some `m >= 1`; power sequences cycle within `order`
    /// steps, so the loop is bounded.
    pub fn is_nilpotent(&self, x: usize) -> bool {
        let mut p = x;
        for _ in 0..self.order {
            if p == 0 {
                return true;
            }
            p = self.mul(p, x);
        }
        false
    }

    /// For product rings, splits a code into factor codes (leftmost factor
    /// most significant). `None` on non-product rings.
    pub fn product_decode(&self, code: usize) -> Option<Vec<usize>> {
        let RingKind::Product { factors } = &self.kind else {
            return None;
        };
        let mut rest = code;
        let mut comps = vec![0; factors.len()];
        for (i, f) in factors.iter().enumerate().rev() {
            comps[i] = rest % f.order();
            rest /= f.order();
        }
        Some(comps)
    }

    /// Inverse of [`Ring::product_decode`].
    pub fn product_encode(&self, comps: &[usize]) -> Option<usize> {
        let RingKind::Product { factors } = &self.kind else {
            return None;
        };
        if comps.len() != factors.len() || comps.iter().zip(factors).any(|(c, f)| *c >= f.order())
        {
            return None;
        }
        Some(
            comps
                .iter()
                .zip(factors)
                .fold(0, |acc, (c, f)| acc * f.order() + c),
        )
    }

    /// Elements with a multiplicative inverse.
    pub fn units(&self) -> Bitset {
        let mut set = Bitset::empty(self.order);
        for x in 0..self.order {
            if (0..self.order).any(|y| self.mul(x, y) == self.one) {
                set.insert(x);
            }
        }
        set
    }

    /// `Z(R) = {x : x*y = 0 for some y != 0}`. `0` is always included since
    /// the order is at least 2, which is exactly what makes
    /// "S disjoint from Z(R)" force S into the units of a finite ring.
    pub fn zerodivisors(&self) -> Bitset {
        let mut set = Bitset::empty(self.order);
        for x in 0..self.order {
            if (1..self.order).any(|y| self.mul(x, y) == 0) {
                set.insert(x);
            }
        }
        set
    }
}

/// Semantic equality: same order, identity positions, and operation tables.
/// Element names, the construction route, and the spec string are display
/// concerns and do not participate.
impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}
impl Eq for Ring {}

impl core::fmt::Debug for Ring {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.spec)
    }
}

impl core::fmt::Display for Ring {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.spec)
    }
}

/// An element of a specific ring instance.
#[derive(Clone)]
pub struct Element {
    ring: Arc<Ring>,
    code: usize,
}

impl Element {
    pub fn new(ring: &Arc<Ring>, code: usize) -> Result<Element> {
        if code >= ring.order() {
            return Err(Error::ElementRange {
                code,
                order: ring.order(),
            });
        }
        Ok(Element {
            ring: Arc::clone(ring),
            code,
        })
    }

    pub fn code(&self) -> usize {
        self.code
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && *self.ring == *other.ring
    }
}
impl Eq for Element {}

impl core::fmt::Display for Element {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.ring.name(self.code))
    }
}

impl core::fmt::Debug for Element {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}@{}", self.ring.name(self.code), self.ring.spec())
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || *a == *b
}

fn check_cap(order: usize) -> Result<()> {
    if order > ORDER_CAP {
        return Err(Error::OrderCapExceeded {
            order,
            cap: ORDER_CAP,
        });
    }
    Ok(())
}

fn table(n: usize, op: impl Fn(usize, usize) -> usize) -> Vec<u16> {
    let mut t = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            t.push(op(a, b) as u16);
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zn_arithmetic() {
        let r = Ring::zn(12).unwrap();
        assert_eq!(r.order(), 12);
        assert_eq!(r.mul(2, 3), 6);
        assert_eq!(r.add(6, 6), 0);
        assert_eq!(r.neg(5), 7);
        assert!(Ring::zn(1).is_err());
    }

    #[test]
    fn zn_units_by_gcd_oracle() {
        let r = Ring::zn(12).unwrap();
        let gcd = |mut a: usize, mut b: usize| {
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        };
        let expected: Vec<usize> = (0..12).filter(|x| gcd(*x, 12) == 1).collect();
        assert_eq!(r.units().to_codes(), expected);
        assert_eq!(expected, vec![1, 5, 7, 11]);
    }

    #[test]
    fn field_zerodivisors_trivial() {
        let r = Ring::zn(5).unwrap();
        assert_eq!(r.zerodivisors().to_codes(), vec![0]);
    }

    #[test]
    fn product_componentwise() {
        // Z_2 x Z_4, codes (a,b) -> a*4 + b
        let r = Ring::product(vec![Ring::zn(2).unwrap(), Ring::zn(4).unwrap()]).unwrap();
        assert_eq!(r.order(), 8);
        let code = |a: usize, b: usize| a * 4 + b;
        // (1,2)*(1,3) = (1,2)
        assert_eq!(r.mul(code(1, 2), code(1, 3)), code(1, 2));
        assert_eq!(r.one(), code(1, 1));
        assert_eq!(r.name(code(1, 2)), "(1,2)");
        // (1,0) is a zerodivisor: (1,0)*(0,1) = (0,0)
        assert!(r.zerodivisors().contains(code(1, 0)));
        assert!(Ring::product(vec![Ring::zn(2).unwrap()]).is_err());
    }

    #[test]
    fn boolean_ring_idempotent() {
        let r = Ring::boolean(2).unwrap();
        assert_eq!(r.order(), 4);
        for x in 0..4 {
            assert_eq!(r.mul(x, x), x);
        }
        let b1 = Ring::boolean(1).unwrap();
        assert_eq!(b1.order(), 2);
        assert_eq!(b1.spec(), "bool(1)");
        assert_eq!(*b1, *Ring::zn(2).unwrap());
    }

    #[test]
    fn trunc_poly_arithmetic() {
        // Z_4[X]/(X^3): X*X = X^2, X^3 = 0
        let r = Ring::trunc_poly(4, 3).unwrap();
        assert_eq!(r.order(), 64);
        let x = 4; // [0,1,0]
        let x2 = 16; // [0,0,1]
        assert_eq!(r.mul(x, x), x2);
        assert_eq!(r.mul(x2, x), 0);
        assert_eq!(r.name(x), "[0,1,0]");

        // Z_2[X]/(X^2): (1+X)^2 = 1 + 2X + X^2 = 1
        let r = Ring::trunc_poly(2, 2).unwrap();
        let one_plus_x = 3;
        assert_eq!(r.mul(one_plus_x, one_plus_x), r.one());

        // degenerate truncation is Z_2
        let r = Ring::trunc_poly(2, 1).unwrap();
        assert_eq!(r.order(), 2);
    }

    #[test]
    fn axioms_hold_on_structural_rings() {
        for r in [
            Ring::zn(6).unwrap(),
            Ring::trunc_poly(2, 3).unwrap(),
            Ring::product(vec![Ring::zn(2).unwrap(), Ring::zn(3).unwrap()]).unwrap(),
        ] {
            r.verify_axioms().unwrap();
        }
    }

    #[test]
    fn from_tables_accepts_z2_and_rejects_garbage() {
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![0, 0], vec![0, 1]];
        let names = vec!["0".to_string(), "1".to_string()];
        let r = Ring::from_tables(add.clone(), mul, 0, 1, names.clone(), "t".into()).unwrap();
        assert_eq!(*r, *Ring::zn(2).unwrap());

        // broken multiplication table: 1*1 = 0 kills the identity axiom
        let bad_mul = vec![vec![0, 0], vec![0, 0]];
        let err = Ring::from_tables(add, bad_mul, 0, 1, names, "t".into()).unwrap_err();
        assert!(matches!(err, Error::RingAxiom { .. }));
    }

    #[test]
    fn from_tables_normalizes_zero_position() {
        // Z_2 with swapped codes: element 1 is the additive identity
        let add = vec![vec![1, 0], vec![0, 1]];
        let mul = vec![vec![0, 1], vec![1, 1]];
        let names = vec!["one".to_string(), "zero".to_string()];
        let r = Ring::from_tables(add, mul, 1, 0, names, "t".into()).unwrap();
        assert_eq!(r.add(0, 0), 0);
        assert_eq!(r.name(0), "zero");
        assert_eq!(r.one(), 1);
    }

    #[test]
    fn nilpotence_detection() {
        let r = Ring::zn(12).unwrap();
        assert!(r.is_nilpotent(0));
        assert!(r.is_nilpotent(6));
        assert!(!r.is_nilpotent(2));
        assert!(!r.is_nilpotent(4));
    }
}
