//! Plain binary relations on a carrier, as boolean matrices.
//!
//! Used for relations that are not (yet) equivalences: the generating
//! relation behind the least distributive-lattice congruence, relation
//! composition, and quasi-order matrices.

use crate::green::Partition;
use crate::semiring::Element;

/// A binary relation on `{0, …, n−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinRel {
    n: usize,
    mat: Vec<bool>,
}

impl BinRel {
    pub fn from_pred(n: usize, pred: impl Fn(Element, Element) -> bool) -> Self {
        let mut mat = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                mat[a * n + b] = pred(a, b);
            }
        }
        BinRel { n, mat }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, a: Element, b: Element) -> bool {
        self.mat[a * self.n + b]
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|a| self.contains(a, a))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.contains(a, b) == self.contains(b, a)))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| {
            (0..n).all(|b| {
                !self.contains(a, b) || (0..n).all(|c| !self.contains(b, c) || self.contains(a, c))
            })
        })
    }

    /// Reflexive-transitive closure (Warshall).
    pub fn transitive_closure(&self) -> BinRel {
        let n = self.n;
        let mut mat = self.mat.clone();
        for a in 0..n {
            mat[a * n + a] = true;
        }
        for k in 0..n {
            for a in 0..n {
                if mat[a * n + k] {
                    for b in 0..n {
                        if mat[k * n + b] {
                            mat[a * n + b] = true;
                        }
                    }
                }
            }
        }
        BinRel { n, mat }
    }

    /// `self ∘ other`: pairs `(a,c)` with some `b` such that `a self b` and
    /// `b other c`.
    pub fn compose(&self, other: &BinRel) -> BinRel {
        debug_assert_eq!(self.n, other.n);
        let n = self.n;
        BinRel::from_pred(n, |a, c| (0..n).any(|b| self.contains(a, b) && other.contains(b, c)))
    }

    /// Interprets an equivalence relation as a partition; `None` if the
    /// relation is not reflexive, symmetric and transitive.
    pub fn to_partition(&self) -> Option<Partition> {
        if !(self.is_reflexive() && self.is_symmetric() && self.is_transitive()) {
            return None;
        }
        let n = self.n;
        let mut labels = vec![usize::MAX; n];
        let mut next = 0;
        for a in 0..n {
            if labels[a] == usize::MAX {
                for b in a..n {
                    if self.contains(a, b) {
                        labels[b] = next;
                    }
                }
                next += 1;
            }
        }
        Some(Partition::from_labels(&labels))
    }

    pub fn from_partition(p: &Partition) -> BinRel {
        BinRel::from_pred(p.n(), |a, b| p.same_block(a, b))
    }

    /// All related pairs, in row-major order.
    pub fn pairs(&self) -> Vec<(Element, Element)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.contains(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

impl std::fmt::Display for BinRel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let items: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        write!(f, "[{}]", items.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_partition() {
        // 0~1 plus reflexivity, on 3 points.
        let r = BinRel::from_pred(3, |a, b| a == b || (a, b) == (0, 1) || (a, b) == (1, 0));
        assert!(!BinRel::from_pred(3, |a, b| (a, b) == (0, 1)).is_reflexive());
        let p = r.transitive_closure().to_partition().unwrap();
        assert_eq!(p.to_string(), "{{0,1},{2}}");
    }

    #[test]
    fn composition() {
        let r = BinRel::from_pred(3, |a, b| b == a + 1);
        let rr = r.compose(&r);
        assert_eq!(rr.pairs(), vec![(0, 2)]);
    }
}
