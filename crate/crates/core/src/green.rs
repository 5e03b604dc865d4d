//! Green's relations and the quasi-orders on either reduct.
//!
//! Principal ideals of a finite semigroup need only one closure step
//! (`S¹∘a = {a} ∪ S∘a`), so the five relations come straight from comparing
//! ideal sets. `D` is computed generically as the join of `L` and `R`; the
//! identity `L∘R = R∘L = D` is asserted by tests rather than assumed.

use crate::error::Error;
use crate::relation::BinRel;
use crate::semiring::{Element, FiniteSemiring, OpTable};

/// An equivalence relation on `{0, …, n−1}` in block form.
///
/// Blocks are sorted internally and ordered by their least element, so equal
/// partitions have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    block_of: Vec<usize>,
    blocks: Vec<Vec<Element>>,
}

impl Partition {
    /// Builds a partition from arbitrary per-element labels; blocks are
    /// renumbered in order of first appearance.
    pub fn from_labels(labels: &[usize]) -> Partition {
        let n = labels.len();
        let mut remap = std::collections::HashMap::new();
        let mut block_of = vec![0; n];
        let mut blocks: Vec<Vec<Element>> = Vec::new();
        for (x, &lab) in labels.iter().enumerate() {
            let id = *remap.entry(lab).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            block_of[x] = id;
            blocks[id].push(x);
        }
        Partition { block_of, blocks }
    }

    pub fn identity(n: usize) -> Partition {
        Partition::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn universal(n: usize) -> Partition {
        Partition::from_labels(&vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, x: Element) -> usize {
        self.block_of[x]
    }

    pub fn block(&self, id: usize) -> &[Element] {
        &self.blocks[id]
    }

    pub fn blocks(&self) -> &[Vec<Element>] {
        &self.blocks
    }

    #[inline]
    pub fn same_block(&self, a: Element, b: Element) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks() == self.n()
    }

    pub fn is_universal(&self) -> bool {
        self.num_blocks() == 1
    }

    /// Coarsest partition refining both (blockwise intersection).
    pub fn meet(&self, other: &Partition) -> Partition {
        debug_assert_eq!(self.n(), other.n());
        let n = self.n();
        let labels: Vec<usize> = (0..n)
            .map(|x| self.block_of[x] * other.num_blocks() + other.block_of[x])
            .collect();
        Partition::from_labels(&labels)
    }

    /// Finest partition coarsening both (transitive closure of the union).
    pub fn join(&self, other: &Partition) -> Partition {
        debug_assert_eq!(self.n(), other.n());
        let n = self.n();
        let mut uf = UnionFind::new(n);
        for b in self.blocks.iter().chain(other.blocks.iter()) {
            for w in b.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        uf.into_partition()
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&x| other.same_block(b[0], x)))
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // blocks are already sorted by least element
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// Small union-find used for partition joins and congruence closure.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns true if the two were in distinct classes.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller root so labels stay stable
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let labels: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        Partition::from_labels(&labels)
    }
}

/// The five Green relations of one reduct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenRelations {
    pub l: Partition,
    pub r: Partition,
    pub h: Partition,
    pub d: Partition,
    pub j: Partition,
}

/// Green's relations of an associative table.
pub fn green(table: &OpTable) -> Result<GreenRelations, Error> {
    if let Some((a, b, c)) = table.associativity_witness() {
        return Err(Error::NotAssociative { a, b, c });
    }
    Ok(green_unchecked(table))
}

/// As [`green`] but skipping the associativity check; callers hold tables
/// from validated semirings.
pub(crate) fn green_unchecked(table: &OpTable) -> GreenRelations {
    let n = table.order();
    debug_assert!(n <= 64, "ideal masks use u64 bitsets");
    let mut left = vec![0u64; n]; // S¹∘a
    let mut right = vec![0u64; n]; // a∘S¹
    let mut two = vec![0u64; n]; // S¹∘a∘S¹
    for a in 0..n {
        let mut l = 1u64 << a;
        let mut r = 1u64 << a;
        for s in 0..n {
            l |= 1 << table.apply(s, a);
            r |= 1 << table.apply(a, s);
        }
        left[a] = l;
        right[a] = r;
        let mut t = l | r;
        for s in 0..n {
            for u in 0..n {
                t |= 1 << table.apply3(s, a, u);
            }
        }
        two[a] = t;
    }
    let classes_by = |masks: &[u64]| {
        let labels: Vec<usize> = (0..n)
            .map(|a| masks.iter().position(|&m| m == masks[a]).unwrap())
            .collect();
        Partition::from_labels(&labels)
    };
    let l = classes_by(&left);
    let r = classes_by(&right);
    let j = classes_by(&two);
    let h = l.meet(&r);
    let d = l.join(&r);
    GreenRelations { l, r, h, d, j }
}

/// Cross-validates the formula characterization of `D` on the additive
/// reduct of an idempotent semiring (`a D⁺ b ⟺ a+b+a = a ∧ b+a+b = b`)
/// against the ideal-based computation, returning whether they coincide.
pub fn band_d_check(s: &FiniteSemiring) -> Result<bool, Error> {
    if !s.is_idempotent_semiring() {
        return Err(Error::Precondition("not an idempotent semiring".into()));
    }
    let ideal_d = green_unchecked(s.add_table()).d;
    let formula = BinRel::from_pred(s.order(), |a, b| {
        s.add3(a, b, a) == a && s.add3(b, a, b) == b
    });
    Ok(formula == BinRel::from_partition(&ideal_d))
}

/// A reflexive transitive relation as a boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiOrder {
    rel: BinRel,
}

impl QuasiOrder {
    fn new(rel: BinRel) -> Result<Self, Error> {
        if !rel.is_reflexive() || !rel.is_transitive() {
            return Err(Error::Precondition(
                "relation is not reflexive and transitive".into(),
            ));
        }
        Ok(QuasiOrder { rel })
    }

    pub fn contains(&self, a: Element, b: Element) -> bool {
        self.rel.contains(a, b)
    }

    pub fn is_subset_of(&self, other: &QuasiOrder) -> bool {
        let n = self.rel.n();
        (0..n).all(|a| (0..n).all(|b| !self.contains(a, b) || other.contains(a, b)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.rel.n();
        (0..n).all(|a| (0..n).all(|b| a == b || !(self.contains(a, b) && self.contains(b, a))))
    }

    pub fn as_rel(&self) -> &BinRel {
        &self.rel
    }
}

impl std::fmt::Display for QuasiOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.rel.fmt(f)
    }
}

/// The six order relations of an idempotent semiring.
#[derive(Debug, Clone)]
pub struct QuasiOrders {
    /// `a ≤ˡ₊ b ⟺ b = a+b`
    pub add_left: QuasiOrder,
    /// `a ≤ʳ₊ b ⟺ b = b+a`
    pub add_right: QuasiOrder,
    /// `a ≤ˡ· b ⟺ a = ba`
    pub mul_left: QuasiOrder,
    /// `a ≤ʳ· b ⟺ a = ab`
    pub mul_right: QuasiOrder,
    /// `≤₊ = ≤ˡ₊ ∩ ≤ʳ₊`
    pub add: QuasiOrder,
    /// `≤· = ≤ˡ· ∩ ≤ʳ·`
    pub mul: QuasiOrder,
}

/// The quasi-orders and derived partial orders; defined on idempotent
/// semirings only.
pub fn quasi_orders(s: &FiniteSemiring) -> Result<QuasiOrders, Error> {
    if !s.is_idempotent_semiring() {
        return Err(Error::Precondition("not an idempotent semiring".into()));
    }
    let n = s.order();
    let add_left = QuasiOrder::new(BinRel::from_pred(n, |a, b| b == s.add(a, b)))?;
    let add_right = QuasiOrder::new(BinRel::from_pred(n, |a, b| b == s.add(b, a)))?;
    let mul_left = QuasiOrder::new(BinRel::from_pred(n, |a, b| a == s.mul(b, a)))?;
    let mul_right = QuasiOrder::new(BinRel::from_pred(n, |a, b| a == s.mul(a, b)))?;
    let add = QuasiOrder::new(BinRel::from_pred(n, |a, b| {
        add_left.contains(a, b) && add_right.contains(a, b)
    }))?;
    let mul = QuasiOrder::new(BinRel::from_pred(n, |a, b| {
        mul_left.contains(a, b) && mul_right.contains(a, b)
    }))?;
    Ok(QuasiOrders {
        add_left,
        add_right,
        mul_left,
        mul_right,
        add,
        mul,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::load;

    #[test]
    fn partition_display_and_ops() {
        let p = Partition::from_labels(&[7, 3, 7]);
        assert_eq!(p.to_string(), "{{0,2},{1}}");
        assert!(Partition::identity(3).refines(&p));
        assert!(p.refines(&Partition::universal(3)));
        assert_eq!(p.meet(&Partition::identity(3)), Partition::identity(3));
        assert_eq!(p.join(&Partition::universal(3)), Partition::universal(3));
    }

    #[test]
    fn green_of_left_zero_addition() {
        let s = load("lz2");
        let g = green(s.add_table()).unwrap();
        assert!(g.l.is_universal());
        assert!(g.r.is_identity());
        assert!(g.d.is_universal());
        assert!(g.j.is_universal());
        assert!(g.h.is_identity());
    }

    #[test]
    fn green_of_group_addition_is_universal() {
        let s = load("z2");
        let g = green(s.add_table()).unwrap();
        assert!(g.l.is_universal() && g.r.is_universal() && g.h.is_universal());
        assert!(g.d.is_universal() && g.j.is_universal());
    }

    #[test]
    fn green_of_semilattice_addition_is_identity() {
        let s = load("b2");
        let g = green(s.add_table()).unwrap();
        assert!(g.l.is_identity() && g.r.is_identity() && g.h.is_identity());
        assert!(g.d.is_identity() && g.j.is_identity());
    }

    #[test]
    fn green_rejects_non_associative_table() {
        // x∘y = 1−y is not associative
        let t = OpTable::new(2, vec![1, 0, 1, 0]).unwrap();
        assert!(matches!(green(&t), Err(Error::NotAssociative { .. })));
    }

    #[test]
    fn band_d_formula_matches_ideals() {
        for name in ["b2", "lz2", "rz2"] {
            assert!(band_d_check(&load(name)).unwrap(), "mismatch on {name}");
        }
        assert!(band_d_check(&load("z2")).is_err());
    }

    #[test]
    fn quasi_orders_on_b2_are_the_lattice_order() {
        let s = load("b2");
        let q = quasi_orders(&s).unwrap();
        // ≤₊ is 0 ≤ 1, and ≤· coincides with it via absorption
        assert!(q.add.contains(0, 1) && !q.add.contains(1, 0));
        assert!(q.mul.contains(0, 1) && !q.mul.contains(1, 0));
        assert!(q.add.is_antisymmetric() && q.mul.is_antisymmetric());
    }

    #[test]
    fn quasi_orders_on_lz2_add_left_is_equality() {
        let q = quasi_orders(&load("lz2")).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(q.add_left.contains(a, b), a == b);
            }
        }
    }
}
