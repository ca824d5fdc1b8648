//! Finite-dimensional algebras and Hopf algebras as exact structure constants.
//!
//! Conventions for a basis `e_0 … e_{d-1}`:
//! `e_i e_j = Σ_k mult[i][j][k] e_k`, `Δ e_i = Σ comult[i][j][k] e_j ⊗ e_k`,
//! `S(e_i) = Σ_j antipode[i][j] e_j`.

mod double;
mod factor;
mod quotient;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::{json, Value};

pub use double::{
    double_crossed_product, drinfeld_double, matched_pair_check, DoubleCrossedProduct, DrinfeldDouble, MatchedPair,
};
pub use factor::{
    factorization_algebra, flip_map, heisenberg_double, smash_product, FactorizationAlgebra, FactorizationMap,
    ModuleAction,
};
pub use quotient::{generalized_smash, group_pair_quotient, quotient_module_coalgebra, QuotientModuleCoalgebra};

use crate::exact::{rat_from_json, rat_to_json, BigRat, RatMatrix, SparseVec};
use crate::perm::PermGroup;
use crate::{Error, Result};

/// Sparse element of a tensor square, keyed by basis index pairs.
pub type Tensor2 = BTreeMap<(usize, usize), BigRat>;

pub(crate) fn add_term<K: Ord>(t: &mut BTreeMap<K, BigRat>, k: K, c: BigRat) {
    if c.is_zero() {
        return;
    }
    match t.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(crate) fn prune<K: Ord + Clone>(t: BTreeMap<K, BigRat>) -> BTreeMap<K, BigRat> {
    t.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub(crate) fn unit_vec(i: usize) -> SparseVec {
    SparseVec::unit(i)
}

pub(crate) fn scaled(v: &SparseVec, c: &BigRat) -> SparseVec {
    let mut w = v.clone();
    w.scale(c);
    w
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: String,
    /// first failing basis tuple, `None` when the axiom holds
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<AxiomCheck>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.witness.is_none())
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.witness.is_some())
    }

    fn record(&mut self, axiom: &str, witness: Option<Vec<usize>>) {
        self.checks.push(AxiomCheck { axiom: axiom.to_string(), witness });
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({ "axiom": c.axiom, "holds": c.witness.is_none(), "witness": c.witness }))
            .collect();
        json!({ "passed": self.passed(), "checks": checks })
    }

    pub fn into_result(self) -> Result<()> {
        match self.first_failure() {
            None => Ok(()),
            Some(c) => Err(Error::Axiom { axiom: c.axiom.clone(), witness: c.witness.clone().unwrap_or_default() }),
        }
    }
}

fn first_failure<I: IntoIterator<Item = Vec<usize>>>(
    tuples: I,
    mut ok: impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    tuples.into_iter().find(|t| !ok(t))
}

fn pairs(d: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..d).flat_map(move |i| (0..d).map(move |j| vec![i, j]))
}

fn triples(d: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..d).flat_map(move |i| (0..d).flat_map(move |j| (0..d).map(move |k| vec![i, j, k])))
}

/// Associative unital algebra by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgData {
    dim: usize,
    mult: Vec<Vec<SparseVec>>,
    unit: SparseVec,
}

impl AlgData {
    pub fn new(dim: usize, mult: Vec<Vec<SparseVec>>, unit: SparseVec) -> Result<Self> {
        if mult.len() != dim || mult.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!("multiplication table is not {dim}x{dim}")));
        }
        let out_of_range = |v: &SparseVec| v.iter().any(|(k, _)| *k >= dim);
        if out_of_range(&unit) || mult.iter().flatten().any(out_of_range) {
            return Err(Error::DimensionMismatch("basis index out of range".into()));
        }
        Ok(Self { dim, mult, unit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let c = a * b;
                for (k, m) in self.mult[*i][*j].iter() {
                    add_term(&mut acc, *k, &c * m);
                }
            }
        }
        SparseVec::from_pairs(acc)
    }

    /// The opposite algebra.
    pub fn op(&self) -> Self {
        let d = self.dim;
        let mult = (0..d).map(|i| (0..d).map(|j| self.mult[j][i].clone()).collect()).collect();
        Self { dim: d, mult, unit: self.unit.clone() }
    }

    pub fn verify(&self) -> VerifyReport {
        let mut r = VerifyReport::default();
        let d = self.dim;
        r.record(
            "associativity",
            first_failure(triples(d), |t| {
                let (a, b, c) = (unit_vec(t[0]), unit_vec(t[1]), unit_vec(t[2]));
                self.mul(&self.mul(&a, &b), &c) == self.mul(&a, &self.mul(&b, &c))
            }),
        );
        r.record(
            "left unit",
            first_failure((0..d).map(|i| vec![i]), |t| self.mul(&self.unit, &unit_vec(t[0])) == unit_vec(t[0])),
        );
        r.record(
            "right unit",
            first_failure((0..d).map(|i| vec![i]), |t| self.mul(&unit_vec(t[0]), &self.unit) == unit_vec(t[0])),
        );
        r
    }

    /// Dimension of the center, by exact linear algebra.
    pub fn center_dim(&self) -> usize {
        let d = self.dim;
        // column x ↦ coefficients of [x, e_j] for every j
        let mut rows = Vec::with_capacity(d * d);
        for j in 0..d {
            for k in 0..d {
                rows.push(
                    (0..d)
                        .map(|i| {
                            let l = self.mult[i][j].get(k).cloned().unwrap_or_else(BigRat::zero);
                            let r = self.mult[j][i].get(k).cloned().unwrap_or_else(BigRat::zero);
                            l - r
                        })
                        .collect::<Vec<_>>(),
                );
            }
        }
        let m = RatMatrix::from_rows(&rows).expect("rectangular");
        d - m.rank()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// Matrix of x ↦ a·x·b in the basis (columns are images).
    pub fn sandwich_matrix(&self, a: &SparseVec, b: &SparseVec) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for c in 0..self.dim {
            let img = self.mul(&self.mul(a, &unit_vec(c)), b);
            for (r, x) in img.iter() {
                m.set(*r, c, x.clone());
            }
        }
        m
    }

    /// Trace of x ↦ a·x·b.
    pub fn sandwich_trace(&self, a: &SparseVec, b: &SparseVec) -> BigRat {
        let mut t = BigRat::zero();
        for c in 0..self.dim {
            let img = self.mul(&self.mul(a, &unit_vec(c)), b);
            if let Some(x) = img.get(c) {
                t += x;
            }
        }
        t
    }

    fn mult_json(&self) -> Value {
        let d = self.dim;
        Value::Array((0..d).map(|i| Value::Array((0..d).map(|j| dense_json(&self.mult[i][j], d)).collect())).collect())
    }

    pub fn to_json(&self) -> Value {
        json!({ "dim": self.dim, "mult": self.mult_json(), "unit": dense_json(&self.unit, self.dim) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let d = json_dim(v)?;
        let mult = parse_tensor3(field(v, "mult")?, d, d)?
            .into_iter()
            .map(|rows| rows.into_iter().map(|r| SparseVec::from_dense(&r)).collect())
            .collect();
        let unit = SparseVec::from_dense(&parse_vec(field(v, "unit")?, d)?);
        Self::new(d, mult, unit)
    }
}

fn dense_json(v: &SparseVec, d: usize) -> Value {
    Value::Array(v.to_dense(d).iter().map(rat_to_json).collect())
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name).ok_or_else(|| Error::Parse(format!("missing field `{name}`")))
}

fn json_dim(v: &Value) -> Result<usize> {
    Ok(field(v, "dim")?.as_u64().ok_or_else(|| Error::Parse("`dim` must be a number".into()))? as usize)
}

fn parse_vec(v: &Value, d: usize) -> Result<Vec<BigRat>> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("expected an array".into()))?;
    if arr.len() != d {
        return Err(Error::DimensionMismatch(format!("expected {d} entries, found {}", arr.len())));
    }
    arr.iter().map(rat_from_json).collect()
}

fn parse_matrix(v: &Value, rows: usize, cols: usize) -> Result<Vec<Vec<BigRat>>> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("expected an array".into()))?;
    if arr.len() != rows {
        return Err(Error::DimensionMismatch(format!("expected {rows} rows, found {}", arr.len())));
    }
    arr.iter().map(|r| parse_vec(r, cols)).collect()
}

fn parse_tensor3(v: &Value, d: usize, inner: usize) -> Result<Vec<Vec<Vec<BigRat>>>> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("expected an array".into()))?;
    if arr.len() != d {
        return Err(Error::DimensionMismatch(format!("expected {d} slices, found {}", arr.len())));
    }
    arr.iter().map(|m| parse_matrix(m, inner, d)).collect()
}

/// Hopf algebra by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    alg: AlgData,
    comult: Vec<Tensor2>,
    counit: Vec<BigRat>,
    antipode: Vec<SparseVec>,
}

impl HopfData {
    pub fn new(alg: AlgData, comult: Vec<Tensor2>, counit: Vec<BigRat>, antipode: Vec<SparseVec>) -> Result<Self> {
        let d = alg.dim();
        if comult.len() != d || counit.len() != d || antipode.len() != d {
            return Err(Error::DimensionMismatch(format!("coalgebra data must have {d} entries")));
        }
        let comult = comult.into_iter().map(prune).collect();
        Ok(Self { alg, comult, counit, antipode })
    }

    pub fn alg(&self) -> &AlgData {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.alg.mul(x, y)
    }

    pub fn unit(&self) -> &SparseVec {
        &self.alg.unit
    }

    pub fn comult_basis(&self, i: usize) -> &Tensor2 {
        &self.comult[i]
    }

    pub fn counit_basis(&self, i: usize) -> &BigRat {
        &self.counit[i]
    }

    pub fn antipode_basis(&self, i: usize) -> &SparseVec {
        &self.antipode[i]
    }

    pub fn delta(&self, x: &SparseVec) -> Tensor2 {
        let mut acc = Tensor2::new();
        for (i, a) in x.iter() {
            for (jk, c) in &self.comult[*i] {
                add_term(&mut acc, *jk, a * c);
            }
        }
        prune(acc)
    }

    /// (Δ ⊗ id)Δ(x) as a sparse 3-tensor.
    pub fn delta2(&self, x: &SparseVec) -> BTreeMap<(usize, usize, usize), BigRat> {
        let mut acc = BTreeMap::new();
        for ((p, r), c) in self.delta(x) {
            for ((a, b), c2) in &self.comult[p] {
                add_term(&mut acc, (*a, *b, r), &c * c2);
            }
        }
        prune(acc)
    }

    pub fn eps(&self, x: &SparseVec) -> BigRat {
        x.iter().fold(BigRat::zero(), |acc, (i, a)| acc + a * &self.counit[*i])
    }

    pub fn antipode(&self, x: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, a) in x.iter() {
            acc.axpy(a, &self.antipode[*i]);
        }
        acc
    }

    pub fn antipode_matrix(&self) -> RatMatrix {
        let d = self.dim();
        let mut m = RatMatrix::zeros(d, d);
        for i in 0..d {
            for (j, c) in self.antipode[i].iter() {
                m.set(i, *j, c.clone());
            }
        }
        m
    }

    /// S⁻¹ on basis vectors.
    pub fn antipode_inverse(&self) -> Result<Vec<SparseVec>> {
        let inv = self.antipode_matrix().inverse().ok_or(Error::SingularAntipode)?;
        Ok((0..self.dim()).map(|i| SparseVec::from_dense(inv.row(i))).collect())
    }

    /// Product in H ⊗ H.
    pub fn mul2(&self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let mut acc = Tensor2::new();
        for ((a, b), c) in x {
            for ((p, q), c2) in y {
                let coef = c * c2;
                let left = self.alg.basis_product(*a, *p);
                let right = self.alg.basis_product(*b, *q);
                for (i, u) in left.iter() {
                    for (j, v) in right.iter() {
                        add_term(&mut acc, (*i, *j), &coef * u * v);
                    }
                }
            }
        }
        prune(acc)
    }

    pub fn verify(&self) -> VerifyReport {
        let mut r = self.alg.verify();
        let d = self.dim();
        let singles = || (0..d).map(|i| vec![i]);
        r.record(
            "coassociativity",
            first_failure(singles(), |t| {
                let left = self.delta2(&unit_vec(t[0]));
                let mut right = BTreeMap::new();
                for ((p, q), c) in &self.comult[t[0]] {
                    for ((a, b), c2) in &self.comult[*q] {
                        add_term(&mut right, (*p, *a, *b), c * c2);
                    }
                }
                left == prune(right)
            }),
        );
        r.record(
            "left counit",
            first_failure(singles(), |t| {
                let mut acc = SparseVec::new();
                for ((a, b), c) in &self.comult[t[0]] {
                    acc.axpy(&(c * &self.counit[*a]), &unit_vec(*b));
                }
                acc == unit_vec(t[0])
            }),
        );
        r.record(
            "right counit",
            first_failure(singles(), |t| {
                let mut acc = SparseVec::new();
                for ((a, b), c) in &self.comult[t[0]] {
                    acc.axpy(&(c * &self.counit[*b]), &unit_vec(*a));
                }
                acc == unit_vec(t[0])
            }),
        );
        r.record(
            "comultiplication is multiplicative",
            first_failure(pairs(d), |t| {
                let prod = self.alg.basis_product(t[0], t[1]);
                self.delta(prod) == self.mul2(&self.comult[t[0]], &self.comult[t[1]])
            }),
        );
        r.record(
            "counit is multiplicative",
            first_failure(pairs(d), |t| {
                self.eps(self.alg.basis_product(t[0], t[1])) == &self.counit[t[0]] * &self.counit[t[1]]
            }),
        );
        let unit = self.unit().clone();
        let mut one_one = Tensor2::new();
        for (i, a) in unit.iter() {
            for (j, b) in unit.iter() {
                add_term(&mut one_one, (*i, *j), a * b);
            }
        }
        r.record("comultiplication is unital", (self.delta(&unit) != prune(one_one)).then(Vec::new));
        r.record("counit is unital", (!self.eps(&unit).is_one()).then(Vec::new));
        let eta_eps = |i: usize| scaled(&unit, &self.counit[i]);
        r.record(
            "left antipode",
            first_failure(singles(), |t| {
                let mut acc = SparseVec::new();
                for ((a, b), c) in &self.comult[t[0]] {
                    acc.axpy(c, &self.mul(&self.antipode[*a], &unit_vec(*b)));
                }
                acc == eta_eps(t[0])
            }),
        );
        r.record(
            "right antipode",
            first_failure(singles(), |t| {
                let mut acc = SparseVec::new();
                for ((a, b), c) in &self.comult[t[0]] {
                    acc.axpy(c, &self.mul(&unit_vec(*a), &self.antipode[*b]));
                }
                acc == eta_eps(t[0])
            }),
        );
        r
    }

    /// The dual Hopf algebra on the dual basis.
    pub fn dual(&self) -> Self {
        let d = self.dim();
        let mut mult = vec![vec![BTreeMap::new(); d]; d];
        for (i, t) in self.comult.iter().enumerate() {
            for ((a, b), c) in t {
                add_term(&mut mult[*a][*b], i, c.clone());
            }
        }
        let mult = mult.into_iter().map(|r| r.into_iter().map(SparseVec::from_pairs).collect()).collect();
        let unit = SparseVec::from_dense(&self.counit);
        let mut comult = vec![Tensor2::new(); d];
        for a in 0..d {
            for b in 0..d {
                for (i, c) in self.alg.mult[a][b].iter() {
                    add_term(&mut comult[*i], (a, b), c.clone());
                }
            }
        }
        let counit = self.alg.unit.to_dense(d);
        let mut antipode = vec![Vec::new(); d];
        for (j, s) in self.antipode.iter().enumerate() {
            for (i, c) in s.iter() {
                antipode[*i].push((j, c.clone()));
            }
        }
        let antipode = antipode.into_iter().map(SparseVec::from_pairs).collect();
        Self::new(AlgData { dim: d, mult, unit }, comult, counit, antipode).expect("shape preserved")
    }

    /// Co-opposite: flipped comultiplication, antipode S⁻¹.
    pub fn cop(&self) -> Result<Self> {
        let comult = self.comult.iter().map(|t| t.iter().map(|((a, b), c)| ((*b, *a), c.clone())).collect()).collect();
        Self::new(self.alg.clone(), comult, self.counit.clone(), self.antipode_inverse()?)
    }

    /// Opposite algebra, same coalgebra, antipode S⁻¹.
    pub fn op(&self) -> Result<Self> {
        Self::new(self.alg.op(), self.comult.clone(), self.counit.clone(), self.antipode_inverse()?)
    }

    pub fn to_json(&self) -> Value {
        let d = self.dim();
        let comult: Vec<Value> = self
            .comult
            .iter()
            .map(|t| {
                let mut dense = vec![vec![BigRat::zero(); d]; d];
                for ((a, b), c) in t {
                    dense[*a][*b] = c.clone();
                }
                Value::Array(dense.iter().map(|r| Value::Array(r.iter().map(rat_to_json).collect())).collect())
            })
            .collect();
        let antipode: Vec<Value> = self.antipode.iter().map(|s| dense_json(s, d)).collect();
        json!({
            "dim": d,
            "mult": self.alg.mult_json(),
            "unit": dense_json(&self.alg.unit, d),
            "comult": comult,
            "counit": Value::Array(self.counit.iter().map(rat_to_json).collect()),
            "antipode": antipode,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let alg = AlgData::from_json(v)?;
        let d = alg.dim();
        let comult = parse_tensor3(field(v, "comult")?, d, d)?
            .into_iter()
            .map(|m| {
                let mut t = Tensor2::new();
                for (a, row) in m.into_iter().enumerate() {
                    for (b, c) in row.into_iter().enumerate() {
                        add_term(&mut t, (a, b), c);
                    }
                }
                t
            })
            .collect();
        let counit = parse_vec(field(v, "counit")?, d)?;
        let antipode = parse_matrix(field(v, "antipode")?, d, d)?.iter().map(|r| SparseVec::from_dense(r)).collect();
        Self::new(alg, comult, counit, antipode)
    }
}

/// kG on the group-element basis, in the element order of `g`.
pub fn group_algebra(g: &PermGroup) -> HopfData {
    let d = g.order();
    let mult = (0..d).map(|i| (0..d).map(|j| unit_vec(g.mul(i, j))).collect()).collect();
    let alg = AlgData { dim: d, mult, unit: unit_vec(0) };
    let comult = (0..d).map(|i| Tensor2::from([((i, i), BigRat::one())])).collect();
    let antipode = (0..d).map(|i| unit_vec(g.inv(i))).collect();
    HopfData::new(alg, comult, vec![BigRat::one(); d], antipode).expect("shape")
}

/// Injective unital algebra map B → X, stored as the images of B's basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraEmbedding {
    pub base_dim: usize,
    pub ambient_dim: usize,
    pub images: Vec<SparseVec>,
}

impl SubalgebraEmbedding {
    pub fn image(&self, x: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, a) in x.iter() {
            acc.axpy(a, &self.images[*i]);
        }
        acc
    }

    /// Unital, multiplicative and injective.
    pub fn verify(&self, base: &AlgData, ambient: &AlgData) -> VerifyReport {
        let mut r = VerifyReport::default();
        r.record("embedding is unital", (self.image(base.unit()) != *ambient.unit()).then(Vec::new));
        r.record(
            "embedding is multiplicative",
            first_failure(pairs(base.dim()), |t| {
                self.image(base.basis_product(t[0], t[1])) == ambient.mul(&self.images[t[0]], &self.images[t[1]])
            }),
        );
        let rows: Vec<Vec<BigRat>> = self.images.iter().map(|v| v.to_dense(self.ambient_dim)).collect();
        let rank = RatMatrix::from_rows(&rows).map(|m| m.rank()).unwrap_or(0);
        r.record("embedding is injective", (rank != self.base_dim).then(Vec::new));
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::perm::named_group;

    fn kg(name: &str) -> HopfData {
        group_algebra(&named_group(name).unwrap())
    }

    #[test]
    fn group_algebras_pass() {
        for name in ["C2", "S3", "Q8"] {
            let r = kg(name).verify();
            assert!(r.passed(), "{name}: {:?}", r.first_failure());
        }
        let c2 = kg("C2");
        assert_eq!(c2.comult_basis(1), &Tensor2::from([((1, 1), rat(1))]));
        assert_eq!(c2.antipode_basis(1), &unit_vec(1));
    }

    #[test]
    fn duals_and_cop_pass() {
        let s3 = kg("S3");
        assert!(s3.dual().verify().passed());
        assert!(s3.dual().cop().unwrap().verify().passed());
        assert_eq!(s3.dual().dual(), s3);
        assert_eq!(s3.cop().unwrap().cop().unwrap(), s3);
        let c2d = kg("C2").dual();
        assert!(c2d.verify().passed());
        assert!(c2d.alg().is_commutative());
        // dual basis vectors are orthogonal idempotents
        assert_eq!(c2d.mul(&unit_vec(0), &unit_vec(0)), unit_vec(0));
        assert!(c2d.mul(&unit_vec(0), &unit_vec(1)).is_zero());
    }

    #[test]
    fn corrupted_tensor_is_caught() {
        let s3 = kg("S3");
        let mut v = s3.to_json();
        v["mult"][1][2][0] = json!("1/2");
        let bad = HopfData::from_json(&v).unwrap();
        let r = bad.verify();
        let f = r.first_failure().unwrap();
        assert_eq!(f.axiom, "associativity");
        assert_eq!(f.witness.as_ref().unwrap().len(), 3);
    }

    #[test]
    fn json_round_trip() {
        let h = kg("S3").dual();
        let back = HopfData::from_json(&h.to_json()).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn centers() {
        assert_eq!(kg("S3").alg().center_dim(), 3);
        assert_eq!(kg("C4").alg().center_dim(), 4);
    }
}
