//! The quotient module coalgebra Q = H/R⁺H and the generalized smash product Q*ᵒᵖ # H.

use num_traits::Zero;

use super::factor::FactorizationMap;
use super::{
    add_term, first_failure, group_algebra, unit_vec, AlgData, FactorizationAlgebra, HopfData, SubalgebraEmbedding,
    Tensor2, VerifyReport,
};
use crate::exact::{BigRat, QuotientMap, SparseVec};
use crate::perm::PermGroup;
use crate::{Error, Result};

/// Q = H/R⁺H: a coalgebra and a right H-module through x̄·h = (xh)‾.
#[derive(Clone, Debug)]
pub struct QuotientModuleCoalgebra {
    pub quotient: QuotientMap,
    comult: Vec<Tensor2>,
    counit: Vec<BigRat>,
    /// `right_action[t][h]` = q̄_t · e_h in Q coordinates
    right_action: Vec<Vec<SparseVec>>,
}

impl QuotientModuleCoalgebra {
    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn comult_basis(&self, t: usize) -> &Tensor2 {
        &self.comult[t]
    }

    pub fn counit_basis(&self, t: usize) -> &BigRat {
        &self.counit[t]
    }

    pub fn action_basis(&self, t: usize, h: usize) -> &SparseVec {
        &self.right_action[t][h]
    }

    fn delta(&self, x: &SparseVec) -> Tensor2 {
        let mut acc = Tensor2::new();
        for (t, a) in x.iter() {
            for (k, c) in &self.comult[*t] {
                add_term(&mut acc, *k, a * c);
            }
        }
        acc
    }

    fn act(&self, x: &SparseVec, h: usize) -> SparseVec {
        let mut acc = SparseVec::new();
        for (t, a) in x.iter() {
            acc.axpy(a, &self.right_action[*t][h]);
        }
        acc
    }

    /// Coalgebra axioms, module axioms and Δ(q·h) = q₁h₁ ⊗ q₂h₂.
    pub fn verify(&self, h: &HopfData) -> VerifyReport {
        let (dq, dh) = (self.dim(), h.dim());
        let mut r = VerifyReport::default();
        r.record(
            "quotient coassociativity",
            first_failure((0..dq).map(|t| vec![t]), |t| {
                let mut l = std::collections::BTreeMap::new();
                let mut rr = std::collections::BTreeMap::new();
                for ((a, b), c) in &self.comult[t[0]] {
                    for ((x, y), c2) in &self.comult[*a] {
                        add_term(&mut l, (*x, *y, *b), c * c2);
                    }
                    for ((x, y), c2) in &self.comult[*b] {
                        add_term(&mut rr, (*a, *x, *y), c * c2);
                    }
                }
                l == rr
            }),
        );
        r.record(
            "quotient counit",
            first_failure((0..dq).map(|t| vec![t]), |t| {
                let mut l = SparseVec::new();
                let mut rr = SparseVec::new();
                for ((a, b), c) in &self.comult[t[0]] {
                    l.axpy(&(c * &self.counit[*a]), &unit_vec(*b));
                    rr.axpy(&(c * &self.counit[*b]), &unit_vec(*a));
                }
                l == unit_vec(t[0]) && rr == unit_vec(t[0])
            }),
        );
        let triples = (0..dq).flat_map(move |t| (0..dh).flat_map(move |x| (0..dh).map(move |y| vec![t, x, y])));
        r.record(
            "right module associativity",
            first_failure(triples, |t| {
                let mut lhs = SparseVec::new();
                for (k, c) in h.alg().basis_product(t[1], t[2]).iter() {
                    lhs.axpy(c, &self.right_action[t[0]][*k]);
                }
                lhs == self.act(&self.right_action[t[0]][t[1]], t[2])
            }),
        );
        r.record(
            "module coalgebra",
            first_failure((0..dq).flat_map(|t| (0..dh).map(move |x| vec![t, x])), |t| {
                let lhs = self.delta(&self.right_action[t[0]][t[1]]);
                let mut rhs = Tensor2::new();
                for ((a, b), c) in &self.comult[t[0]] {
                    for ((p, q), c2) in h.comult_basis(t[1]) {
                        for (x, u) in self.right_action[*a][*p].iter() {
                            for (y, v) in self.right_action[*b][*q].iter() {
                                add_term(&mut rhs, (*x, *y), c * c2 * u * v);
                            }
                        }
                    }
                }
                let eps_ok =
                    self.right_action[t[0]][t[1]].iter().fold(BigRat::zero(), |acc, (x, u)| acc + u * &self.counit[*x])
                        == &self.counit[t[0]] * h.counit_basis(t[1]);
                lhs == rhs && eps_ok
            }),
        );
        r
    }

    /// Q*ᵒᵖ on the dual basis θ_t: θ_a θ_b = Σ_c Δ_Q(q_c)[b, a] θ_c.
    pub fn dual_op_algebra(&self) -> AlgData {
        let d = self.dim();
        let mut mult = vec![vec![std::collections::BTreeMap::new(); d]; d];
        for (c, t) in self.comult.iter().enumerate() {
            for ((b, a), x) in t {
                add_term(&mut mult[*a][*b], c, x.clone());
            }
        }
        let mult = mult.into_iter().map(|r| r.into_iter().map(SparseVec::from_pairs).collect()).collect();
        AlgData::new(d, mult, SparseVec::from_dense(&self.counit)).expect("shape")
    }
}

fn check(cond: bool, axiom: &str, witness: Vec<usize>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Axiom { axiom: axiom.to_string(), witness })
    }
}

/// Q = H/R⁺H for a Hopf subalgebra R ↪ H.
pub fn quotient_module_coalgebra(
    h: &HopfData,
    r: &HopfData,
    emb: &SubalgebraEmbedding,
) -> Result<QuotientModuleCoalgebra> {
    let d = h.dim();
    if emb.base_dim != r.dim() || emb.ambient_dim != d {
        return Err(Error::DimensionMismatch("embedding does not match R and H".into()));
    }
    emb.verify(r.alg(), h.alg()).into_result()?;
    for i in 0..r.dim() {
        let img = &emb.images[i];
        let mut pushed = Tensor2::new();
        for ((a, b), c) in r.comult_basis(i) {
            for (x, u) in emb.images[*a].iter() {
                for (y, v) in emb.images[*b].iter() {
                    add_term(&mut pushed, (*x, *y), c * u * v);
                }
            }
        }
        check(h.delta(img) == pushed, "Hopf subalgebra: comultiplication", vec![i])?;
        check(h.eps(img) == *r.counit_basis(i), "Hopf subalgebra: counit", vec![i])?;
        check(h.antipode(img) == emb.image(r.antipode_basis(i)), "Hopf subalgebra: antipode", vec![i])?;
    }

    let mut relations = Vec::with_capacity(r.dim() * d);
    for i in 0..r.dim() {
        let mut aug = emb.images[i].clone();
        aug.axpy(&-r.counit_basis(i).clone(), h.unit());
        for x in 0..d {
            relations.push(h.mul(&aug, &unit_vec(x)));
        }
    }
    let quotient = QuotientMap::from_sparse(d, relations.iter().cloned());
    let proj: Vec<SparseVec> = (0..d).map(|i| quotient.project(&unit_vec(i))).collect();
    let project2 = |t: &Tensor2| {
        let mut acc = Tensor2::new();
        for ((a, b), c) in t {
            for (x, u) in proj[*a].iter() {
                for (y, v) in proj[*b].iter() {
                    add_term(&mut acc, (*x, *y), c * u * v);
                }
            }
        }
        acc
    };
    for (k, v) in relations.iter().enumerate() {
        check(project2(&h.delta(v)).is_empty() && h.eps(v).is_zero(), "coideal", vec![k / d, k % d])?;
    }
    let dq = quotient.dim();
    let sections: Vec<SparseVec> = (0..dq).map(|t| quotient.section(&unit_vec(t))).collect();
    let comult = sections.iter().map(|s| project2(&h.delta(s))).collect();
    let counit = sections.iter().map(|s| h.eps(s)).collect();
    let right_action =
        sections.iter().map(|s| (0..d).map(|x| quotient.project(&h.mul(s, &unit_vec(x)))).collect()).collect();
    let q = QuotientModuleCoalgebra { quotient, comult, counit, right_action };
    q.verify(h).into_result()?;
    Ok(q)
}

/// kG, kH ↪ kG and Q = kG/(kH)⁺kG for a subgroup H of G.
pub fn group_pair_quotient(
    g: &PermGroup,
    sub: &PermGroup,
) -> Result<(HopfData, SubalgebraEmbedding, QuotientModuleCoalgebra)> {
    let kg = group_algebra(g);
    let kh = group_algebra(sub);
    let images = sub
        .elements()
        .iter()
        .map(|x| {
            g.index_of(&x.padded(g.degree()))
                .map(unit_vec)
                .ok_or_else(|| Error::NotASubgroup("element outside G".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let emb = SubalgebraEmbedding { base_dim: sub.order(), ambient_dim: g.order(), images };
    let q = quotient_module_coalgebra(&kg, &kh, &emb)?;
    Ok((kg, emb, q))
}

/// Q*ᵒᵖ # H with ψ̄(h ⊗ γ) = (h₂ ⇀ γ) ⊗ h₁ and (h ⇀ θ)(x̄) = θ(x̄·h).
/// The Q*ᵒᵖ factor is `embed_a` and H is `embed_b`.
pub fn generalized_smash(h: &HopfData, q: &QuotientModuleCoalgebra) -> Result<FactorizationAlgebra> {
    let a = q.dual_op_algebra();
    let dq = q.dim();
    // h ⇀ θ_c = Σ_t action[t][h][c] θ_t
    let hit = |x: usize, c: usize| -> SparseVec {
        SparseVec::from_pairs((0..dq).filter_map(|t| q.right_action[t][x].get(c).map(|v| (t, v.clone()))))
    };
    let psi = FactorizationMap::from_fn(dq, h.dim(), |x, c| {
        let mut out = Tensor2::new();
        for ((h1, h2), k) in h.comult_basis(x) {
            for (t, v) in hit(*h2, c).iter() {
                add_term(&mut out, (*t, *h1), k * v);
            }
        }
        out
    })?;
    super::factorization_algebra(&a, h.alg(), &psi)
}
