use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::GroupStructure;

/// `element = [x1,y1] [x2,y2] ... [xk,yk]`, multiplied left to right, with
/// `[x,y] = x y x^-1 y^-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorDecomposition {
    element: usize,
    pairs: Vec<(usize, usize)>,
}

impl CommutatorDecomposition {
    /// Checks the product; the empty product is allowed only for the
    /// identity.
    pub fn new(g: &GroupStructure, element: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let n = g.order();
        if let Some(&bad) = pairs
            .iter()
            .flat_map(|&(x, y)| [x, y])
            .chain([element])
            .find(|&x| x >= n)
            .as_ref()
        {
            return Err(Error::OutOfRange { index: bad, order: n });
        }
        let product = pairs
            .iter()
            .fold(g.identity(), |acc, &(x, y)| g.mul(acc, g.commutator(x, y)));
        if product != element {
            return Err(Error::InvalidDecomposition(format!(
                "product of commutators is {product}, expected {element}"
            )));
        }
        Ok(CommutatorDecomposition { element, pairs })
    }

    pub fn element(&self) -> usize {
        self.element
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of commutator factors.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Breadth-first tree over the commutator subgroup with edges
/// `h -> h c` for each commutator `c`, giving shortest decompositions.
///
/// Commutators are tried in ascending element order, each labelled by its
/// lexicographically first preimage `(x, y)`.
#[derive(Debug, Clone)]
pub struct DecompositionTable {
    /// `(predecessor, (x, y))` for each reached non-identity element.
    parent: Vec<Option<(usize, (usize, usize))>>,
    depth: Vec<Option<usize>>,
}

impl DecompositionTable {
    pub fn new(g: &GroupStructure) -> Self {
        let n = g.order();
        let mut preimage: Vec<Option<(usize, usize)>> = vec![None; n];
        for x in 0..n {
            for y in 0..n {
                let c = g.commutator(x, y);
                preimage[c].get_or_insert((x, y));
            }
        }
        let gens: Vec<(usize, (usize, usize))> = preimage
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|p| (c, p)))
            .collect();

        let mut parent = vec![None; n];
        let mut depth = vec![None; n];
        depth[g.identity()] = Some(0);
        let mut queue = VecDeque::from([g.identity()]);
        while let Some(h) = queue.pop_front() {
            let d = depth[h].expect("queued elements have a depth");
            for &(c, xy) in &gens {
                let hc = g.mul(h, c);
                if depth[hc].is_none() {
                    depth[hc] = Some(d + 1);
                    parent[hc] = Some((h, xy));
                    queue.push_back(hc);
                }
            }
        }
        DecompositionTable { parent, depth }
    }

    /// Shortest decomposition length of `g`, or `None` outside the
    /// commutator subgroup.
    pub fn length(&self, g: usize) -> Option<usize> {
        self.depth[g]
    }

    /// Longest shortest-decomposition length over the commutator subgroup.
    pub fn max_length(&self) -> usize {
        self.depth.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn decompose(&self, g: &GroupStructure, element: usize) -> Result<CommutatorDecomposition> {
        if element >= self.depth.len() {
            return Err(Error::OutOfRange {
                index: element,
                order: self.depth.len(),
            });
        }
        if self.depth[element].is_none() {
            return Err(Error::NotInDerivedSubgroup { element });
        }
        let mut pairs = Vec::new();
        let mut cur = element;
        while let Some((prev, xy)) = self.parent[cur] {
            pairs.push(xy);
            cur = prev;
        }
        pairs.reverse();
        CommutatorDecomposition::new(g, element, pairs)
    }
}

pub fn commutator_decomposition(g: &GroupStructure, element: usize) -> Result<CommutatorDecomposition> {
    DecompositionTable::new(g).decompose(g, element)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::make_family;
    use crate::group::group_structure;

    fn group(spec: &str) -> GroupStructure {
        group_structure(&make_family(spec).unwrap()).unwrap()
    }

    #[test]
    fn identity_has_empty_decomposition() {
        let g = group("quaternion8");
        assert!(commutator_decomposition(&g, g.identity()).unwrap().is_empty());
    }

    #[test]
    fn three_cycles_are_single_commutators_in_s3() {
        let g = group("symmetric:3");
        for name in ["231", "312"] {
            let r = g.base().index_of(name).unwrap();
            let d = commutator_decomposition(&g, r).unwrap();
            assert_eq!(d.len(), 1);
            let (x, y) = d.pairs()[0];
            assert_eq!(g.commutator(x, y), r);
        }
    }

    #[test]
    fn abelian_non_identity_is_rejected() {
        let g = group("cyclic:4");
        assert_eq!(
            commutator_decomposition(&g, 1).unwrap_err(),
            Error::NotInDerivedSubgroup { element: 1 }
        );
    }

    #[test]
    fn bad_decomposition_is_rejected() {
        let g = group("symmetric:3");
        let r = g.base().index_of("231").unwrap();
        assert!(matches!(
            CommutatorDecomposition::new(&g, r, vec![]).unwrap_err(),
            Error::InvalidDecomposition(_)
        ));
    }

    #[test]
    fn max_length_over_catalog_is_one() {
        for spec in ["symmetric:3", "dihedral:4", "quaternion8", "alternating:4", "klein4"] {
            let g = group(spec);
            let t = DecompositionTable::new(&g);
            let derived = g.commutator_subgroup();
            for x in 0..g.order() {
                assert_eq!(t.length(x).is_some(), derived.contains(&x), "{spec}");
            }
            assert!(t.max_length() <= 1, "{spec}");
        }
    }
}
