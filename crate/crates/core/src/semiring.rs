//! Carrier-level representation of finite semirings.
//!
//! A semiring here is a pair of operation tables over `{0, …, n−1}` whose
//! reducts are semigroups and where multiplication distributes over addition
//! on both sides. Neither a zero nor a unit is assumed, and addition need
//! not be commutative.
//!
//! When every additive `H`-class is a group the semiring carries a unique
//! unary pseudo-inverse `x ↦ x'` (the group inverse inside the class); it is
//! computed on first use and cached. `x° = x + x'` is always derived, never
//! stored.

use std::sync::OnceLock;

use crate::error::{AxiomViolation, Error};
use crate::green;

/// An element of the carrier `{0, …, n−1}`.
pub type Element = usize;

/// An `n × n` operation table over the carrier, row-major:
/// `entries[i*n + j]` is the result of `i ∘ j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpTable {
    order: usize,
    entries: Vec<Element>,
}

impl OpTable {
    /// Builds a table, checking shape and that every entry lies in the carrier.
    pub fn new(order: usize, entries: Vec<Element>) -> Result<Self, Error> {
        if order == 0 || entries.len() != order * order {
            return Err(Error::BadTableShape {
                len: entries.len(),
                expected: order * order,
                order,
            });
        }
        for (idx, &v) in entries.iter().enumerate() {
            if v >= order {
                return Err(Error::EntryOutOfRange {
                    row: idx / order,
                    col: idx % order,
                    value: v,
                    order,
                });
            }
        }
        Ok(OpTable { order, entries })
    }

    /// Builds a table from a function on pairs.
    pub fn from_fn(order: usize, f: impl Fn(Element, Element) -> Element) -> Result<Self, Error> {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        OpTable::new(order, entries)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    #[inline]
    pub fn apply(&self, a: Element, b: Element) -> Element {
        self.entries[a * self.order + b]
    }

    /// `a ∘ b ∘ c` with the table's own association (it must be associative
    /// for this to be unambiguous; callers hold validated tables).
    #[inline]
    pub fn apply3(&self, a: Element, b: Element, c: Element) -> Element {
        self.apply(self.apply(a, b), c)
    }

    /// First triple violating associativity, if any.
    pub fn associativity_witness(&self) -> Option<(Element, Element, Element)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.apply(a, b);
                for c in 0..n {
                    if self.apply(ab, c) != self.apply(a, self.apply(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.order).all(|x| self.apply(x, x) == x)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.apply(a, b) == self.apply(b, a)))
    }

    /// The table obtained by renaming element `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[Element]) -> OpTable {
        let n = self.order;
        debug_assert_eq!(perm.len(), n);
        let mut entries = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                entries[perm[a] * n + perm[b]] = perm[self.apply(a, b)];
            }
        }
        OpTable { order: n, entries }
    }
}

/// A validated finite semiring: two tables of the same order satisfying
/// associativity of both reducts and both distributive laws.
///
/// Immutable after validation and safe to share across threads; the lazy
/// pseudo-inverse cache is initialized at most once and readers only ever
/// observe it absent or complete.
#[derive(Debug)]
pub struct FiniteSemiring {
    add: OpTable,
    mul: OpTable,
    inv: OnceLock<Option<Vec<Element>>>,
}

impl Clone for FiniteSemiring {
    fn clone(&self) -> Self {
        let inv = OnceLock::new();
        if let Some(v) = self.inv.get() {
            let _ = inv.set(v.clone());
        }
        FiniteSemiring {
            add: self.add.clone(),
            mul: self.mul.clone(),
            inv,
        }
    }
}

impl PartialEq for FiniteSemiring {
    fn eq(&self, other: &Self) -> bool {
        self.add == other.add && self.mul == other.mul
    }
}
impl Eq for FiniteSemiring {}

impl std::hash::Hash for FiniteSemiring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.add.hash(state);
        self.mul.hash(state);
    }
}

impl PartialOrd for FiniteSemiring {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FiniteSemiring {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.add, &self.mul).cmp(&(&other.add, &other.mul))
    }
}

/// Collects every axiom violation of the candidate pair.
fn axiom_violations(add: &OpTable, mul: &OpTable) -> Vec<AxiomViolation> {
    let mut out = Vec::new();
    if add.order() != mul.order() {
        out.push(AxiomViolation::OrderMismatch {
            add_order: add.order(),
            mul_order: mul.order(),
        });
        return out;
    }
    let n = add.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if add.apply(add.apply(a, b), c) != add.apply(a, add.apply(b, c)) {
                    out.push(AxiomViolation::AddNotAssociative { a, b, c });
                }
                if mul.apply(mul.apply(a, b), c) != mul.apply(a, mul.apply(b, c)) {
                    out.push(AxiomViolation::MulNotAssociative { a, b, c });
                }
                if mul.apply(a, add.apply(b, c)) != add.apply(mul.apply(a, b), mul.apply(a, c)) {
                    out.push(AxiomViolation::LeftDistributivity { a, b, c });
                }
                if mul.apply(add.apply(a, b), c) != add.apply(mul.apply(a, c), mul.apply(b, c)) {
                    out.push(AxiomViolation::RightDistributivity { a, b, c });
                }
            }
        }
    }
    out
}

impl FiniteSemiring {
    /// Validates a table pair against the semiring axioms. On failure the
    /// complete list of violations is returned, each with a witness triple.
    pub fn validate(add: OpTable, mul: OpTable) -> Result<Self, Vec<AxiomViolation>> {
        let violations = axiom_violations(&add, &mul);
        if violations.is_empty() {
            Ok(FiniteSemiring {
                add,
                mul,
                inv: OnceLock::new(),
            })
        } else {
            Err(violations)
        }
    }

    /// Like [`validate`](Self::validate), additionally checking a supplied
    /// pseudo-inverse row against the unary laws and seeding the cache with
    /// it. The laws pin the row uniquely, so a valid supplied row always
    /// coincides with the computed one.
    pub fn validate_with_inverse(
        add: OpTable,
        mul: OpTable,
        inv: Vec<Element>,
    ) -> Result<Self, Vec<AxiomViolation>> {
        let s = Self::validate(add, mul)?;
        let n = s.order();
        let mut violations = Vec::new();
        if inv.len() != n || inv.iter().any(|&v| v >= n) {
            violations.push(AxiomViolation::InverseLength {
                len: inv.len(),
                order: n,
            });
            return Err(violations);
        }
        for x in 0..n {
            let xp = inv[x];
            if s.add.apply3(x, xp, x) != x {
                violations.push(AxiomViolation::InverseLaw {
                    law: "x = x+x'+x",
                    x,
                });
            }
            if s.add.apply(x, xp) != s.add.apply(xp, x) {
                violations.push(AxiomViolation::InverseLaw {
                    law: "x+x' = x'+x",
                    x,
                });
            }
            if inv[xp] != x {
                violations.push(AxiomViolation::InverseLaw {
                    law: "(x')' = x",
                    x,
                });
            }
        }
        if !violations.is_empty() {
            return Err(violations);
        }
        let _ = s.inv.set(Some(inv));
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        self.add.apply(a, b)
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.mul.apply(a, b)
    }

    #[inline]
    pub fn add3(&self, a: Element, b: Element, c: Element) -> Element {
        self.add.apply3(a, b, c)
    }

    #[inline]
    pub fn mul3(&self, a: Element, b: Element, c: Element) -> Element {
        self.mul.apply3(a, b, c)
    }

    pub fn add_table(&self) -> &OpTable {
        &self.add
    }

    pub fn mul_table(&self) -> &OpTable {
        &self.mul
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order()
    }

    /// `E⁺(S)`: the set of additive idempotents.
    pub fn additive_idempotents(&self) -> SubsetView<'_> {
        let members = self.elements().filter(|&e| self.add(e, e) == e).collect();
        SubsetView {
            parent: self,
            members,
        }
    }

    /// True iff both reducts are bands (`x+x = x` and `x·x = x`).
    pub fn is_idempotent_semiring(&self) -> bool {
        self.add.is_idempotent() && self.mul.is_idempotent()
    }

    /// The pseudo-inverse table `x ↦ x'`, present iff every additive
    /// `H`-class is a group. Computed once and cached.
    ///
    /// When present it satisfies `x = x+x'+x`, `x+x' = x'+x`, `(x')' = x`,
    /// with `x'` the group inverse of `x` inside its class.
    pub fn pseudo_inverse(&self) -> Option<&[Element]> {
        self.inv
            .get_or_init(|| compute_pseudo_inverse(self))
            .as_deref()
    }

    /// `x° = x + x'`, when the pseudo-inverse exists.
    pub fn circle(&self, x: Element) -> Option<Element> {
        self.pseudo_inverse().map(|inv| self.add(x, inv[x]))
    }

    /// Flat `(add, mul)` entry key; relabel-minimal keys identify
    /// isomorphism classes.
    pub fn table_key(&self) -> Vec<Element> {
        let mut key = self.add.entries().to_vec();
        key.extend_from_slice(self.mul.entries());
        key
    }
}

/// Group inverse per additive `H`-class, or `None` when some class is not a
/// group.
fn compute_pseudo_inverse(s: &FiniteSemiring) -> Option<Vec<Element>> {
    let n = s.order();
    let h = green::green_unchecked(s.add_table()).h;
    let mut inv = vec![0; n];
    for class in h.blocks() {
        // A class is a group iff it has a neutral element and inverses; we
        // check closure too rather than lean on the H-class group theorem.
        let e = *class.iter().find(|&&e| s.add(e, e) == e)?;
        for &c in class {
            if s.add(e, c) != c || s.add(c, e) != c {
                return None;
            }
            for &d in class {
                if !class.contains(&s.add(c, d)) {
                    return None;
                }
            }
            let c_inv = *class
                .iter()
                .find(|&&d| s.add(c, d) == e && s.add(d, c) == e)?;
            inv[c] = c_inv;
        }
    }
    for x in 0..n {
        debug_assert_eq!(s.add3(x, inv[x], x), x);
        debug_assert_eq!(s.add(x, inv[x]), s.add(inv[x], x));
        debug_assert_eq!(inv[inv[x]], x);
    }
    Some(inv)
}

/// A sorted subset of a semiring's carrier, remembering its parent.
#[derive(Debug, Clone)]
pub struct SubsetView<'a> {
    parent: &'a FiniteSemiring,
    members: Vec<Element>,
}

impl<'a> SubsetView<'a> {
    pub fn new(parent: &'a FiniteSemiring, mut members: Vec<Element>) -> Result<Self, Error> {
        members.sort_unstable();
        members.dedup();
        if let Some(&m) = members.iter().find(|&&m| m >= parent.order()) {
            return Err(Error::Precondition(format!(
                "subset member {m} outside carrier 0..{}",
                parent.order()
            )));
        }
        Ok(SubsetView { parent, members })
    }

    pub fn parent(&self) -> &'a FiniteSemiring {
        self.parent
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_add_closed(&self) -> bool {
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| self.contains(self.parent.add(a, b))))
    }

    pub fn is_mul_closed(&self) -> bool {
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| self.contains(self.parent.mul(a, b))))
    }

    /// The induced semiring on this subset (re-indexed `0..len`), together
    /// with the map from new indices back to parent elements. Fails when the
    /// subset is not closed under both operations.
    pub fn as_subsemiring(&self) -> Result<(FiniteSemiring, Vec<Element>), Error> {
        if self.members.is_empty() {
            return Err(Error::Precondition("empty subset has no induced semiring".into()));
        }
        if !self.is_add_closed() || !self.is_mul_closed() {
            return Err(Error::Precondition(
                "subset is not closed under both operations".into(),
            ));
        }
        let k = self.members.len();
        let index_of = |x: Element| self.members.binary_search(&x).unwrap();
        let add = OpTable::from_fn(k, |i, j| {
            index_of(self.parent.add(self.members[i], self.members[j]))
        })
        .expect("closed subset yields in-range entries");
        let mul = OpTable::from_fn(k, |i, j| {
            index_of(self.parent.mul(self.members[i], self.members[j]))
        })
        .expect("closed subset yields in-range entries");
        let sub = FiniteSemiring::validate(add, mul)
            .expect("subalgebra of a semiring satisfies the axioms");
        Ok((sub, self.members.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::load;

    fn table(order: usize, rows: &[&[usize]]) -> OpTable {
        let entries: Vec<usize> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        OpTable::new(order, entries).unwrap()
    }

    #[test]
    fn z2_and_b2_validate() {
        for name in ["z2", "b2"] {
            let s = load(name);
            assert_eq!(s.order(), 2);
        }
    }

    #[test]
    fn rejects_out_of_range_entry() {
        let err = OpTable::new(2, vec![0, 1, 2, 0]).unwrap_err();
        assert!(matches!(err, Error::EntryOutOfRange { value: 2, .. }));
    }

    #[test]
    fn distributivity_violation_reported_with_witness() {
        // add = max, mul[i][j] = 1 - j on {0,1}
        let add = table(2, &[&[0, 1], &[1, 1]]);
        let mul = table(2, &[&[1, 0], &[1, 0]]);
        let violations = FiniteSemiring::validate(add, mul).unwrap_err();
        assert!(violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::LeftDistributivity { .. })
                || matches!(v, AxiomViolation::RightDistributivity { .. })));
    }

    #[test]
    fn order_mismatch_reported() {
        let add = table(2, &[&[0, 1], &[1, 0]]);
        let mul = table(1, &[&[0]]);
        let violations = FiniteSemiring::validate(add, mul).unwrap_err();
        assert_eq!(
            violations,
            vec![AxiomViolation::OrderMismatch {
                add_order: 2,
                mul_order: 1
            }]
        );
    }

    #[test]
    fn additive_idempotents_of_fixtures() {
        assert_eq!(load("z2").additive_idempotents().members(), &[0]);
        assert_eq!(load("b2").additive_idempotents().members(), &[0, 1]);
        // componentwise on B2 × Z2: exactly the (e, 0) pairs
        let p = load("b2xz2");
        assert_eq!(p.additive_idempotents().members(), &[0, 2]);
    }

    #[test]
    fn idempotent_semiring_fixtures() {
        assert!(load("b2").is_idempotent_semiring());
        assert!(load("lz2").is_idempotent_semiring());
        assert!(!load("z2").is_idempotent_semiring());
    }

    #[test]
    fn pseudo_inverse_on_groups_and_bands() {
        let z2 = load("z2");
        assert_eq!(z2.pseudo_inverse().unwrap(), &[0, 1]);
        let b2 = load("b2");
        assert_eq!(b2.pseudo_inverse().unwrap(), &[0, 1]);
        // Z4 additive group with zero multiplication: inverse is 4−x mod 4.
        let add = OpTable::from_fn(4, |a, b| (a + b) % 4).unwrap();
        let mul = OpTable::from_fn(4, |_, _| 0).unwrap();
        let s = FiniteSemiring::validate(add, mul).unwrap();
        assert_eq!(s.pseudo_inverse().unwrap(), &[0, 3, 2, 1]);
    }

    #[test]
    fn pseudo_inverse_absent_on_null_addition() {
        // x+y = 0 constantly: the H-class of 1 is not a group.
        let add = OpTable::from_fn(2, |_, _| 0).unwrap();
        let mul = OpTable::from_fn(2, |_, _| 0).unwrap();
        let s = FiniteSemiring::validate(add, mul).unwrap();
        assert!(s.pseudo_inverse().is_none());
        assert!(s.circle(1).is_none());
    }

    #[test]
    fn supplied_inverse_row_is_checked() {
        let add = OpTable::from_fn(2, |a, b| a ^ b).unwrap();
        let mul = OpTable::from_fn(2, |a, b| a & b).unwrap();
        let s = FiniteSemiring::validate_with_inverse(add.clone(), mul.clone(), vec![0, 1]).unwrap();
        assert_eq!(s.pseudo_inverse().unwrap(), &[0, 1]);
        // x' = x+1 violates x+x' = x'+x? No: violates x = x+x'+x (0+1+0 = 1).
        let err = FiniteSemiring::validate_with_inverse(add, mul, vec![1, 0]).unwrap_err();
        assert!(err
            .iter()
            .any(|v| matches!(v, AxiomViolation::InverseLaw { .. })));
    }

    #[test]
    fn subset_view_subsemiring() {
        let p = load("b2xz2");
        let eplus = p.additive_idempotents();
        assert!(eplus.is_add_closed() && eplus.is_mul_closed());
        let (sub, back) = eplus.as_subsemiring().unwrap();
        assert_eq!(sub.order(), 2);
        assert_eq!(back, vec![0, 2]);
        // E⁺(B2 × Z2) is isomorphic to B2.
        assert!(sub.is_idempotent_semiring());
    }
}
