//! Module depth in the split semisimple setting.
//!
//! Similarity of modules reduces to equality of irreducible supports, so the
//! depth of W is read off the supports of the truncated tensor algebras
//! T_n(W) = W ⊕ W⊗² ⊕ ⋯ ⊕ W⊗ⁿ.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::chars::{induction_matrix, perm_character, support, Character, CharacterTable};
use crate::depth::h_depth;
use crate::perm::PermGroup;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDepthResult {
    pub depth: usize,
    /// supports of T_1, T_2, … up to and including the first repeat
    pub chain: Vec<BTreeSet<usize>>,
    /// n with supp T_n = supp T_{n+1}
    pub stabilization: usize,
}

impl ModuleDepthResult {
    pub fn to_json(&self) -> Value {
        json!({ "module_depth": self.depth, "chain": self.chain, "stabilization": self.stabilization })
    }
}

/// Supports of T_1(W), T_2(W), … until two consecutive ones agree.
fn truncated_chain(table: &CharacterTable, w: &Character) -> Result<Vec<BTreeSet<usize>>> {
    let mut power = w.clone();
    let mut chain = vec![support(&table.decompose_character(w)?)];
    loop {
        power = power.tensor(w);
        let mut next = chain.last().expect("nonempty").clone();
        next.extend(support(&table.decompose_character(&power)?));
        let done = Some(&next) == chain.last();
        chain.push(next);
        if done || chain.len() > table.len() + 2 {
            return Ok(chain);
        }
    }
}

pub fn module_depth(table: &CharacterTable, w: &Character) -> Result<ModuleDepthResult> {
    let mult = table.decompose_character(w)?;
    if mult.iter().all(Zero::is_zero) {
        return Err(Error::NotACharacter("zero character".into()));
    }
    let chain = truncated_chain(table, w)?;
    let stabilization = chain.len() - 1;
    let trivial_only = support(&mult) == BTreeSet::from([0]);
    let depth = if trivial_only { 0 } else { stabilization };
    Ok(ModuleDepthResult { depth, chain, stabilization })
}

/// Character of Q = kG/(kH)⁺kG: the permutation character on cosets of H.
pub fn quotient_module_character(g: &CharacterTable, h: &PermGroup) -> Result<Character> {
    perm_character(g, h)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HDepthBridge {
    pub module_depth: ModuleDepthResult,
    pub via_q: usize,
    pub via_matrix: usize,
}

impl HDepthBridge {
    pub fn agrees(&self) -> bool {
        self.via_q == self.via_matrix
    }
}

/// 2·d(Q) + 1 next to the H-depth of the induction matrix.
pub fn h_depth_via_q(h: &CharacterTable, g: &CharacterTable) -> Result<HDepthBridge> {
    let q = quotient_module_character(g, h.group())?;
    let md = module_depth(g, &q)?;
    let m = induction_matrix(h, g)?;
    Ok(HDepthBridge { via_q: 2 * md.depth + 1, via_matrix: h_depth(&m.matrix)?, module_depth: md })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraBoundReport {
    /// least n ≥ 1 with supp W⊗ⁿ = supp W⊗⁽ⁿ⁺¹⁾
    pub pure_power_stabilization: usize,
    pub module_depth: usize,
    pub holds: bool,
}

/// For module coalgebras the supports of the pure powers W⊗ⁿ are nested, so
/// their stabilization bounds the module depth from above.
pub fn module_coalgebra_bound_check(table: &CharacterTable, w: &Character) -> Result<CoalgebraBoundReport> {
    let md = module_depth(table, w)?;
    let mut power = w.clone();
    let mut prev = support(&table.decompose_character(w)?);
    let mut n = 1;
    loop {
        power = power.tensor(w);
        let next = support(&table.decompose_character(&power)?);
        if next == prev || n > table.len() + 1 {
            break;
        }
        prev = next;
        n += 1;
    }
    Ok(CoalgebraBoundReport { pure_power_stabilization: n, module_depth: md.depth, holds: n >= md.depth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{named_group, parse_subgroup};

    fn s3() -> CharacterTable {
        CharacterTable::compute(&named_group("S3").unwrap()).unwrap()
    }

    fn sub(g: &CharacterTable, spec: &str) -> CharacterTable {
        CharacterTable::compute(&parse_subgroup(spec, g.group()).unwrap()).unwrap()
    }

    #[test]
    fn module_depth_examples() {
        let t = s3();
        assert_eq!(module_depth(&t, &t.trivial()).unwrap().depth, 0);
        let c2 = parse_subgroup("[[1,2]]", t.group()).unwrap();
        let q = quotient_module_character(&t, &c2).unwrap();
        let r = module_depth(&t, &q).unwrap();
        assert_eq!(r.depth, 2);
        assert_eq!(r.chain[0], BTreeSet::from([0, 2]));
        assert_eq!(r.chain[1], BTreeSet::from([0, 1, 2]));
        assert_eq!(module_depth(&t, &t.regular()).unwrap().depth, 1);
    }

    #[test]
    fn quotient_characters() {
        let t = s3();
        let q = quotient_module_character(&t, t.group()).unwrap();
        assert_eq!(q, t.trivial());
        let a3 = parse_subgroup("A3", t.group()).unwrap();
        assert_eq!(quotient_module_character(&t, &a3).unwrap().degree(), 2.into());
    }

    #[test]
    fn bridge_examples() {
        let t = s3();
        let b = h_depth_via_q(&sub(&t, "[[1,2]]"), &t).unwrap();
        assert_eq!((b.via_q, b.via_matrix), (5, 5));
        let b = h_depth_via_q(&sub(&t, "A3"), &t).unwrap();
        assert_eq!((b.via_q, b.via_matrix), (3, 3));
        let b = h_depth_via_q(&t, &t).unwrap();
        assert_eq!((b.via_q, b.via_matrix), (1, 1));
    }

    #[test]
    fn coalgebra_bound_examples() {
        let t = s3();
        let q = quotient_module_character(&t, &parse_subgroup("[[1,2]]", t.group()).unwrap()).unwrap();
        let r = module_coalgebra_bound_check(&t, &q).unwrap();
        assert_eq!((r.pure_power_stabilization, r.module_depth, r.holds), (2, 2, true));
        let r = module_coalgebra_bound_check(&t, &t.trivial()).unwrap();
        assert!(r.holds);
        let q = quotient_module_character(&t, &parse_subgroup("A3", t.group()).unwrap()).unwrap();
        let r = module_coalgebra_bound_check(&t, &q).unwrap();
        assert_eq!((r.pure_power_stabilization, r.module_depth), (1, 1));
    }

    #[test]
    fn faithful_modules_reach_every_irreducible() {
        // permutation modules on the natural points are faithful
        for (name, point_stabilizer) in [("S4", "S3"), ("A5", "A4")] {
            let t = CharacterTable::compute(&named_group(name).unwrap()).unwrap();
            let stab = parse_subgroup(point_stabilizer, t.group()).unwrap();
            let r = module_depth(&t, &quotient_module_character(&t, &stab).unwrap()).unwrap();
            assert_eq!(r.chain.last().unwrap().len(), t.len(), "{name}");
        }
    }

    #[test]
    fn rejects_virtual_characters() {
        let t = s3();
        let virt = t.trivial().sum(&t.irreducibles()[1].scale(&(-1).into()));
        assert!(matches!(module_depth(&t, &virt), Err(Error::NotACharacter(_))));
    }
}
