//! Witnesses built from commutator decompositions.

use super::decomposition::{CommutatorDecomposition, DecompositionTable};
use crate::error::{Error, Result};
use crate::group::GroupStructure;
use crate::monoid::Word;
use crate::orientability::{OneVarWitness, TwoVarWitness};

/// `[x x^-1] = [x] * t * [x^-1]` with `x` the smallest element; certifies
/// the identity.
pub fn identity_witness(g: &GroupStructure) -> OneVarWitness {
    let x = 0;
    let inv = g.inverse(x);
    OneVarWitness::new([x, inv], [x], [inv])
}

/// One-variable witness for `d.element()` by induction on the number of
/// commutators.
///
/// One commutator `[x,y]`: `x y = t y x`. Each further `[x,y]` extends a
/// witness `(a, b, c)` to `(a ++ [x x^-1 y y^-1], b, [y x y^-1 x^-1] ++ c)`.
/// The result has `2 + 4(k-1)` paired factors for `k` commutators. The
/// empty decomposition yields [`identity_witness`].
pub fn build_orientable_witness(g: &GroupStructure, d: &CommutatorDecomposition) -> OneVarWitness {
    let Some((&(x1, y1), rest)) = d.pairs().split_first() else {
        return identity_witness(g);
    };
    let mut a = vec![x1, y1];
    let b = Vec::new();
    let mut c = vec![y1, x1];
    for &(x, y) in rest {
        let (xi, yi) = (g.inverse(x), g.inverse(y));
        a.extend([x, xi, y, yi]);
        c.splice(0..0, [y, x, yi, xi]);
    }
    OneVarWitness {
        a: Word(a),
        b: Word(b),
        c: Word(c),
    }
}

/// One-variable witness for `element` from its shortest decomposition.
pub fn orientable_witness_for(
    grp: &GroupStructure,
    table: &DecompositionTable,
    element: usize,
) -> Result<OneVarWitness> {
    let d = table.decompose(grp, element)?;
    Ok(build_orientable_witness(grp, &d))
}

/// Two-variable witness for the ordered pair `(h, g)`.
///
/// From a one-variable witness `a = b (g h^-1) c`, the equation
/// `a t1 [h^-1] = b t2 [h^-1] c` holds with `t1 = h`, `t2 = g`.
pub fn build_two_var_witness(grp: &GroupStructure, g: usize, h: usize) -> Result<TwoVarWitness> {
    build_two_var_witness_with(grp, &DecompositionTable::new(grp), g, h)
}

pub fn build_two_var_witness_with(
    grp: &GroupStructure,
    table: &DecompositionTable,
    g: usize,
    h: usize,
) -> Result<TwoVarWitness> {
    let n = grp.order();
    for x in [g, h] {
        if x >= n {
            return Err(Error::OutOfRange { index: x, order: n });
        }
    }
    let h_inv = grp.inverse(h);
    let quotient = grp.mul(g, h_inv);
    let w = match orientable_witness_for(grp, table, quotient) {
        Ok(w) => w,
        Err(Error::NotInDerivedSubgroup { .. }) => return Err(Error::NotRelated { u: h, v: g }),
        Err(e) => return Err(e),
    };
    let mut d = vec![h_inv];
    d.extend_from_slice(w.c.entries());
    Ok(TwoVarWitness {
        a: w.a,
        b: Word(vec![h_inv]),
        c: w.b,
        d: Word(d),
    })
}
