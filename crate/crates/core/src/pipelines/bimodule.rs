//! Multiplicities of kG-bimodules from two-sided trace characters.
//!
//! A kG-bimodule X is a k[G×G]-module through (g, h)·x = g·x·h⁻¹. Its
//! character is a class function in each variable, so it is sampled on pairs
//! of class representatives and decomposed against χ_i ⊠ χ̄_j exactly.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::chars::{irreducible_labels, CharacterTable, Cyclotomic, InductionMatrix};
use crate::depth::power_stabilization;
use crate::exact::{BigRat, IntMatrix, SparseVec};
use crate::hopf::{group_algebra, AlgData, SubalgebraEmbedding};
use crate::tensor::RelTensorSpace;
use crate::{Error, Result};

/// `matrix[i][j]` is the multiplicity of V_i ⊗ V_j* in X as a kG-bimodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleMultMatrix {
    pub matrix: IntMatrix,
    pub labels: Vec<String>,
    pub group_order: usize,
}

impl BimoduleMultMatrix {
    /// 2n+1 for the least n with supp Tⁿ = supp Tⁿ⁺¹.
    pub fn odd_depth(&self) -> Result<usize> {
        Ok(2 * power_stabilization(&self.matrix)? + 1)
    }

    pub fn as_induction_square(&self) -> Result<InductionMatrix> {
        InductionMatrix::new(self.matrix.clone(), self.labels.clone(), self.labels.clone())
    }
}

fn integral(r: &BigRat) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NonIntegral(format!("trace {r}")))
    }
}

/// Decomposes χ_X given by `trace(a, b)` = trace of x ↦ a·x·b, where `a`
/// and `b` are the images of group elements.
fn decompose_traces(
    table: &CharacterTable,
    images: &[SparseVec],
    trace: impl Fn(&SparseVec, &SparseVec) -> BigRat,
) -> Result<BimoduleMultMatrix> {
    let g = table.group();
    if images.len() != g.order() {
        return Err(Error::DimensionMismatch(format!("{} images for a group of order {}", images.len(), g.order())));
    }
    let classes = table.classes();
    let k = classes.len();
    let mut chi_x = vec![vec![BigInt::zero(); k]; k];
    for (a, &ra) in classes.reps.iter().enumerate() {
        for (b, &rb) in classes.reps.iter().enumerate() {
            chi_x[a][b] = integral(&trace(&images[ra], &images[g.inv(rb)]))?;
        }
    }
    let irr = table.irreducibles();
    let order2 = BigInt::from(g.order()).pow(2);
    let mut t = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            let mut acc = Cyclotomic::zero(1);
            for a in 0..k {
                for b in 0..k {
                    if chi_x[a][b].is_zero() {
                        continue;
                    }
                    let w = BigInt::from(classes.sizes[a] * classes.sizes[b]) * &chi_x[a][b];
                    acc = &acc + &(&irr[i].values()[a].conj() * &irr[j].values()[b]).scale(&w);
                }
            }
            let total = acc.to_integer().ok_or_else(|| Error::NonIntegral(format!("multiplicity {acc}")))?;
            if !(&total % &order2).is_zero() {
                return Err(Error::NonIntegral(format!("multiplicity {total}/{order2}")));
            }
            let m = total / &order2;
            if m.is_negative() {
                return Err(Error::NotACharacter(format!("negative multiplicity {m} at ({i}, {j})")));
            }
            t.set(i, j, m);
        }
    }
    Ok(BimoduleMultMatrix { matrix: t, labels: irreducible_labels("g", table), group_order: g.order() })
}

/// T for X over kG, where `emb` sends the group element with index i in
/// `table.group()` to `emb.images[i]`.
pub fn bimodule_mult_matrix(
    x: &AlgData,
    emb: &SubalgebraEmbedding,
    table: &CharacterTable,
) -> Result<BimoduleMultMatrix> {
    if emb.ambient_dim != x.dim() {
        return Err(Error::DimensionMismatch("embedding does not land in X".into()));
    }
    emb.verify(group_algebra(table.group()).alg(), x).into_result()?;
    decompose_traces(table, &emb.images, |a, b| x.sandwich_trace(a, b))
}

/// T for the relative tensor power X ⊗_{kG} ⋯ ⊗_{kG} X held by `space`.
pub fn bimodule_mult_matrix_of_power(
    space: &RelTensorSpace,
    emb: &SubalgebraEmbedding,
    table: &CharacterTable,
) -> Result<BimoduleMultMatrix> {
    decompose_traces(table, &emb.images, |a, b| space.sandwich_trace(a, b))
}

/// Odd depth of kG ⊆ X read off the bimodule matrix.
pub fn odd_depth_via_bimodules(x: &AlgData, emb: &SubalgebraEmbedding, table: &CharacterTable) -> Result<usize> {
    bimodule_mult_matrix(x, emb, table)?.odd_depth()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::induction_matrix;
    use crate::exact::{mat_mul, rat};
    use crate::hopf::{group_pair_quotient, heisenberg_double};
    use crate::perm::{named_group, parse_subgroup};
    use crate::tensor::{relative_tensor_power, DEFAULT_TENSOR_BUDGET};

    fn table(name: &str) -> CharacterTable {
        CharacterTable::compute(&named_group(name).unwrap()).unwrap()
    }

    #[test]
    fn regular_bimodule_is_the_identity() {
        for name in ["C3", "S3", "Q8"] {
            let t = table(name);
            let kg = group_algebra(t.group());
            let emb = SubalgebraEmbedding {
                base_dim: kg.dim(),
                ambient_dim: kg.dim(),
                images: (0..kg.dim()).map(SparseVec::unit).collect(),
            };
            let m = bimodule_mult_matrix(kg.alg(), &emb, &t).unwrap();
            assert_eq!(m.matrix, IntMatrix::identity(t.len()), "{name}");
            assert_eq!(m.odd_depth().unwrap(), 1);
        }
    }

    #[test]
    fn group_pair_gives_m_mt() {
        let s3 = named_group("S3").unwrap();
        for sub in ["[[1,2]]", "A3"] {
            let h = parse_subgroup(sub, &s3).unwrap();
            let (kg, emb, _) = group_pair_quotient(&s3, &h).unwrap();
            let ht = CharacterTable::compute(&h).unwrap();
            let gt = CharacterTable::compute(&s3).unwrap();
            let m = induction_matrix(&ht, &gt).unwrap().matrix;
            let t = bimodule_mult_matrix(kg.alg(), &emb, &ht).unwrap();
            assert_eq!(t.matrix, mat_mul(&m, &m.transpose()).unwrap(), "{sub}");
        }
        let h = parse_subgroup("[[1,2]]", &s3).unwrap();
        let (kg, emb, _) = group_pair_quotient(&s3, &h).unwrap();
        assert_eq!(odd_depth_via_bimodules(kg.alg(), &emb, &CharacterTable::compute(&h).unwrap()).unwrap(), 3);
    }

    /// kC₂ ≅ k^{C₂} through g ↦ δ_e − δ_g, as a subalgebra of H # H*.
    fn heisenberg_c2() -> (AlgData, SubalgebraEmbedding, CharacterTable) {
        let x = heisenberg_double(&group_algebra(&named_group("C2").unwrap())).unwrap();
        let (d0, d1) = (&x.embed_b.images[0], &x.embed_b.images[1]);
        let mut one = d0.clone();
        one.axpy(&rat(1), d1);
        let mut sign = d0.clone();
        sign.axpy(&rat(-1), d1);
        let emb = SubalgebraEmbedding { base_dim: 2, ambient_dim: 4, images: vec![one, sign] };
        (x.alg, emb, table("C2"))
    }

    #[test]
    fn heisenberg_c2_is_all_ones() {
        let (x, emb, t) = heisenberg_c2();
        let m = bimodule_mult_matrix(&x, &emb, &t).unwrap();
        assert_eq!(m.matrix, IntMatrix::from_rows(&[[1, 1], [1, 1]]).unwrap());
    }

    #[test]
    fn composition_law_on_heisenberg_c2() {
        let (x, emb, t) = heisenberg_c2();
        let one = bimodule_mult_matrix(&x, &emb, &t).unwrap().matrix;
        let sq = relative_tensor_power(&x, &emb, 2, DEFAULT_TENSOR_BUDGET).unwrap();
        let two = bimodule_mult_matrix_of_power(&sq, &emb, &t).unwrap().matrix;
        assert_eq!(two, mat_mul(&one, &one).unwrap());
        let cube = relative_tensor_power(&x, &emb, 3, DEFAULT_TENSOR_BUDGET).unwrap();
        let three = bimodule_mult_matrix_of_power(&cube, &emb, &t).unwrap().matrix;
        assert_eq!(three, mat_mul(&two, &one).unwrap());
    }

    #[test]
    fn wrong_embedding_is_rejected() {
        let (x, mut emb, t) = heisenberg_c2();
        emb.images.swap(0, 1);
        assert!(bimodule_mult_matrix(&x, &emb, &t).is_err());
    }
}
