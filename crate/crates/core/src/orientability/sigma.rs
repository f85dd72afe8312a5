use rayon::prelude::*;
use serde::Serialize;

use super::search::search_two_var;
use super::witness::TwoVarWitness;
use crate::congruence::{generated_congruence, Congruence};
use crate::error::Result;
use crate::group::group_structure;
use crate::monoid::Monoid1;
use crate::theorem::{build_two_var_witness_with, DecompositionTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    /// Classes are the commutator cosets, each pair with a constructed
    /// witness.
    ExactGroup,
    /// Only pairs with a witness up to the bound; the true relation may be
    /// coarser.
    LowerBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaPair {
    pub u: usize,
    pub v: usize,
    pub witness: TwoVarWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaReport {
    pub bound: usize,
    pub found_pairs: Vec<SigmaPair>,
    pub induced_congruence: Congruence,
    pub exactness: Exactness,
}

impl SigmaReport {
    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.found_pairs
            .binary_search_by(|p| (p.u, p.v).cmp(&(u, v)))
            .is_ok()
    }
}

/// Orientable equivalence on `m`'s base.
///
/// With `group_exact`, the base must be a group and the classes are the
/// cosets of its commutator subgroup; otherwise every ordered pair is
/// searched up to `bound`. Pairs are listed in `(u, v)` order.
pub fn sigma_report(m: &Monoid1, bound: usize, group_exact: bool) -> Result<SigmaReport> {
    let s = m.base();
    let n = s.order();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
    if group_exact {
        let g = group_structure(s)?;
        let cosets = g.coset_congruence();
        let table = DecompositionTable::new(&g);
        let found_pairs = pairs
            .into_par_iter()
            .filter(|&(u, v)| cosets.related(u, v))
            .map(|(u, v)| {
                // certifies the ordered pair (h, g) = (u, v)
                build_two_var_witness_with(&g, &table, v, u).map(|witness| SigmaPair { u, v, witness })
            })
            .collect::<Result<Vec<_>>>()?;
        let induced_congruence =
            generated_congruence(s, found_pairs.iter().map(|p| (p.u, p.v)))?;
        debug_assert_eq!(induced_congruence, cosets);
        return Ok(SigmaReport {
            bound,
            found_pairs,
            induced_congruence,
            exactness: Exactness::ExactGroup,
        });
    }
    let found_pairs: Vec<SigmaPair> = pairs
        .into_par_iter()
        .filter_map(|(u, v)| search_two_var(m, u, v, bound).map(|witness| SigmaPair { u, v, witness }))
        .collect();
    let induced_congruence = generated_congruence(s, found_pairs.iter().map(|p| (p.u, p.v)))?;
    Ok(SigmaReport {
        bound,
        found_pairs,
        induced_congruence,
        exactness: Exactness::LowerBound,
    })
}
