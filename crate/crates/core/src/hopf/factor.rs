//! Factorization algebras A ⊗_ψ B, smash products and Heisenberg doubles.

use num_traits::One;

use super::{add_term, first_failure, unit_vec, AlgData, HopfData, SubalgebraEmbedding, Tensor2, VerifyReport};
use crate::exact::{BigRat, SparseVec};
use crate::{Error, Result};

fn outer(x: &SparseVec, y: &SparseVec) -> Tensor2 {
    let mut t = Tensor2::new();
    for (i, a) in x.iter() {
        for (j, b) in y.iter() {
            add_term(&mut t, (*i, *j), a * b);
        }
    }
    t
}

/// Σ c·f(i, j) over the terms of `t`.
fn expand(t: &Tensor2, mut f: impl FnMut(usize, usize) -> Tensor2) -> Tensor2 {
    let mut acc = Tensor2::new();
    for ((i, j), c) in t {
        for (k, v) in f(*i, *j) {
            add_term(&mut acc, k, c * v);
        }
    }
    acc
}

/// ψ: B ⊗ A → A ⊗ B on basis tensors; `psi[b][a]` is keyed by (A-index, B-index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationMap {
    dim_a: usize,
    dim_b: usize,
    psi: Vec<Vec<Tensor2>>,
}

impl FactorizationMap {
    pub fn new(dim_a: usize, dim_b: usize, psi: Vec<Vec<Tensor2>>) -> Result<Self> {
        if psi.len() != dim_b || psi.iter().any(|r| r.len() != dim_a) {
            return Err(Error::DimensionMismatch(format!("ψ must be indexed by {dim_b} x {dim_a} basis pairs")));
        }
        if psi.iter().flatten().flat_map(|t| t.keys()).any(|&(a, b)| a >= dim_a || b >= dim_b) {
            return Err(Error::DimensionMismatch("ψ image index out of range".into()));
        }
        Ok(Self { dim_a, dim_b, psi })
    }

    pub fn from_fn(dim_a: usize, dim_b: usize, mut f: impl FnMut(usize, usize) -> Tensor2) -> Result<Self> {
        let psi = (0..dim_b).map(|b| (0..dim_a).map(|a| f(b, a)).collect()).collect();
        Self::new(dim_a, dim_b, psi)
    }

    pub fn basis(&self, b: usize, a: usize) -> &Tensor2 {
        &self.psi[b][a]
    }

    pub fn set_basis(&mut self, b: usize, a: usize, t: Tensor2) {
        self.psi[b][a] = t;
    }

    /// ψ(x ⊗ y) for x ∈ B, y ∈ A.
    pub fn apply(&self, x: &SparseVec, y: &SparseVec) -> Tensor2 {
        expand(&outer(x, y), |b, a| self.psi[b][a].clone())
    }

    /// Unit laws and the octagon, checked on basis tuples (b, a, c, d) of B ⊗ A ⊗ B ⊗ A.
    pub fn verify(&self, a_alg: &AlgData, b_alg: &AlgData) -> VerifyReport {
        let mut r = VerifyReport::default();
        r.record(
            "factorization unit (B side)",
            first_failure((0..self.dim_a).map(|a| vec![a]), |t| {
                self.apply(b_alg.unit(), &unit_vec(t[0])) == outer(&unit_vec(t[0]), b_alg.unit())
            }),
        );
        r.record(
            "factorization unit (A side)",
            first_failure((0..self.dim_b).map(|b| vec![b]), |t| {
                self.apply(&unit_vec(t[0]), a_alg.unit()) == outer(a_alg.unit(), &unit_vec(t[0]))
            }),
        );
        let (da, db) = (self.dim_a, self.dim_b);
        let tuples = (0..db).flat_map(move |b| {
            (0..da).flat_map(move |a| (0..db).flat_map(move |c| (0..da).map(move |d| vec![b, a, c, d])))
        });
        r.record(
            "octagon",
            first_failure(tuples, |t| {
                let (b, a, c, d) = (t[0], t[1], t[2], t[3]);
                // (a d_α)_β ⊗ b^β c^α
                let lhs = expand(&self.psi[c][d], |dd, cc| {
                    let ad = a_alg.basis_product(a, dd);
                    expand(&self.apply(&unit_vec(b), ad), |p, q| outer(&unit_vec(p), b_alg.basis_product(q, cc)))
                });
                // a_β d_α ⊗ (b^β c)^α
                let rhs = expand(&self.psi[b][a], |aa, bb| {
                    let bc = b_alg.basis_product(bb, c);
                    expand(&self.apply(bc, &unit_vec(d)), |p, q| outer(a_alg.basis_product(aa, p), &unit_vec(q)))
                });
                lhs == rhs
            }),
        );
        r
    }
}

/// A ⊗_ψ B on the basis `e_a ⊗ e_b ↦ a·dim_b + b`, with both factor embeddings.
#[derive(Clone, Debug)]
pub struct FactorizationAlgebra {
    pub alg: AlgData,
    pub dim_a: usize,
    pub dim_b: usize,
    pub embed_a: SubalgebraEmbedding,
    pub embed_b: SubalgebraEmbedding,
    pub a: AlgData,
    pub b: AlgData,
    pub psi: FactorizationMap,
}

impl FactorizationAlgebra {
    pub fn index(&self, a: usize, b: usize) -> usize {
        a * self.dim_b + b
    }

    pub fn pure_tensor(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(outer(x, y).into_iter().map(|((a, b), c)| (a * self.dim_b + b, c)))
    }
}

/// Builds A ⊗_ψ B after checking the unit laws and the octagon.
pub fn factorization_algebra(a: &AlgData, b: &AlgData, psi: &FactorizationMap) -> Result<FactorizationAlgebra> {
    let (da, db) = (a.dim(), b.dim());
    if psi.dim_a != da || psi.dim_b != db {
        return Err(Error::DimensionMismatch("ψ does not match the factor dimensions".into()));
    }
    psi.verify(a, b).into_result()?;
    let flat = |t: Tensor2| SparseVec::from_pairs(t.into_iter().map(|((x, y), c)| (x * db + y, c)));
    let mut mult = Vec::with_capacity(da * db);
    for i in 0..da * db {
        let (x, y) = (i / db, i % db);
        let mut row = Vec::with_capacity(da * db);
        for j in 0..da * db {
            let (z, w) = (j / db, j % db);
            // (x ⊗ y)(z ⊗ w) = x z_α ⊗ y^α w
            row.push(flat(expand(&psi.psi[y][z], |zz, yy| outer(a.basis_product(x, zz), b.basis_product(yy, w)))));
        }
        mult.push(row);
    }
    let unit = flat(outer(a.unit(), b.unit()));
    let alg = AlgData::new(da * db, mult, unit)?;
    let embed_a = SubalgebraEmbedding {
        base_dim: da,
        ambient_dim: da * db,
        images: (0..da).map(|x| flat(outer(&unit_vec(x), b.unit()))).collect(),
    };
    let embed_b = SubalgebraEmbedding {
        base_dim: db,
        ambient_dim: da * db,
        images: (0..db).map(|y| flat(outer(a.unit(), &unit_vec(y)))).collect(),
    };
    let mut report = alg.verify();
    report.extend(embed_a.verify(a, &alg));
    report.extend(embed_b.verify(b, &alg));
    report.into_result()?;
    Ok(FactorizationAlgebra {
        alg,
        dim_a: da,
        dim_b: db,
        embed_a,
        embed_b,
        a: a.clone(),
        b: b.clone(),
        psi: psi.clone(),
    })
}

/// Left action of a Hopf algebra on an algebra: `act[h][a] = e_h · e_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    act: Vec<Vec<SparseVec>>,
}

impl ModuleAction {
    pub fn new(act: Vec<Vec<SparseVec>>) -> Self {
        Self { act }
    }

    pub fn basis(&self, h: usize, a: usize) -> &SparseVec {
        &self.act[h][a]
    }

    pub fn apply(&self, h: &SparseVec, a: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, x) in h.iter() {
            for (j, y) in a.iter() {
                acc.axpy(&(x * y), &self.act[*i][*j]);
            }
        }
        acc
    }

    /// Module axioms and the measuring condition making A an H-module algebra.
    pub fn verify(&self, a: &AlgData, h: &HopfData) -> VerifyReport {
        let (da, dh) = (a.dim(), h.dim());
        let mut r = VerifyReport::default();
        if self.act.len() != dh || self.act.iter().any(|row| row.len() != da) {
            r.record("action shape", Some(vec![dh, da]));
            return r;
        }
        let triples = (0..dh).flat_map(move |x| (0..dh).flat_map(move |y| (0..da).map(move |z| vec![x, y, z])));
        r.record(
            "module associativity",
            first_failure(triples, |t| {
                self.apply(h.alg().basis_product(t[0], t[1]), &unit_vec(t[2]))
                    == self.apply(&unit_vec(t[0]), &self.act[t[1]][t[2]])
            }),
        );
        r.record(
            "module unit",
            first_failure((0..da).map(|x| vec![x]), |t| self.apply(h.unit(), &unit_vec(t[0])) == unit_vec(t[0])),
        );
        let triples = (0..dh).flat_map(move |x| (0..da).flat_map(move |y| (0..da).map(move |z| vec![x, y, z])));
        r.record(
            "measuring",
            first_failure(triples, |t| {
                let lhs = self.apply(&unit_vec(t[0]), a.basis_product(t[1], t[2]));
                let mut rhs = SparseVec::new();
                for ((p, q), c) in h.comult_basis(t[0]) {
                    rhs.axpy(c, &a.mul(&self.act[*p][t[1]], &self.act[*q][t[2]]));
                }
                lhs == rhs
            }),
        );
        r.record(
            "measuring unit",
            first_failure((0..dh).map(|x| vec![x]), |t| {
                let mut e = a.unit().clone();
                e.scale(h.counit_basis(t[0]));
                self.apply(&unit_vec(t[0]), a.unit()) == e
            }),
        );
        r
    }
}

/// A # H with ψ(h ⊗ a) = (h₁·a) ⊗ h₂.
pub fn smash_product(a: &AlgData, h: &HopfData, action: &ModuleAction) -> Result<FactorizationAlgebra> {
    action.verify(a, h).into_result()?;
    let psi = FactorizationMap::from_fn(a.dim(), h.dim(), |x, y| {
        expand(h.comult_basis(x), |p, q| outer(&action.act[p][y], &unit_vec(q)))
    })?;
    factorization_algebra(a, h.alg(), &psi)
}

/// H # H* with f ⇀ x = x₁ f(x₂); the H* factor is `embed_b`.
pub fn heisenberg_double(h: &HopfData) -> Result<FactorizationAlgebra> {
    let d = h.dim();
    let dual = h.dual();
    let act = (0..d)
        .map(|f| {
            (0..d)
                .map(|x| {
                    SparseVec::from_pairs(
                        h.comult_basis(x).iter().filter(|((_, k), _)| *k == f).map(|((j, _), c)| (*j, c.clone())),
                    )
                })
                .collect()
        })
        .collect();
    smash_product(h.alg(), &dual, &ModuleAction::new(act))
}

/// The trivial ψ(b ⊗ a) = a ⊗ b.
pub fn flip_map(dim_a: usize, dim_b: usize) -> FactorizationMap {
    FactorizationMap::from_fn(dim_a, dim_b, |b, a| Tensor2::from([((a, b), BigRat::one())])).expect("shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::group_algebra;
    use crate::perm::named_group;

    #[test]
    fn heisenberg_of_s3() {
        let h = group_algebra(&named_group("S3").unwrap());
        let x = heisenberg_double(&h).unwrap();
        assert_eq!(x.alg.dim(), 36);
        assert_eq!(x.alg.center_dim(), 1);
    }

    #[test]
    fn flip_gives_tensor_product() {
        let c2 = group_algebra(&named_group("C2").unwrap());
        let c3 = group_algebra(&named_group("C3").unwrap());
        let x = factorization_algebra(c2.alg(), c3.alg(), &flip_map(2, 3)).unwrap();
        assert!(x.alg.is_commutative());
        assert_eq!(x.alg.center_dim(), 6);
    }

    #[test]
    fn corrupted_map_is_rejected() {
        let s3 = group_algebra(&named_group("S3").unwrap());
        let mut psi = flip_map(6, 6);
        psi.set_basis(1, 2, Tensor2::from([((3, 1), BigRat::one())]));
        match factorization_algebra(s3.alg(), s3.alg(), &psi) {
            Err(Error::Axiom { axiom, witness }) => {
                assert_eq!(axiom, "octagon");
                assert_eq!(witness.len(), 4);
            }
            other => panic!("expected octagon failure, got {other:?}"),
        }
    }

    #[test]
    fn broken_action_is_rejected() {
        let c2 = group_algebra(&named_group("C2").unwrap());
        let dual = c2.dual();
        // the nontrivial element acting as zero
        let act = ModuleAction::new(vec![vec![unit_vec(0), unit_vec(1)], vec![SparseVec::new(), SparseVec::new()]]);
        assert!(smash_product(dual.alg(), &c2, &act).is_err());
    }
}
