//! Exact character tables, induction and restriction.

mod cyclotomic;
mod dixon;

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};

use crate::exact::{int_from_json, int_to_json, IntMatrix};
use crate::perm::{conjugacy_classes, left_cosets, ConjClassData, PermGroup, Permutation};
use crate::{Error, Result};

/// Class function: one cyclotomic value per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    values: Vec<Cyclotomic>,
}

impl Character {
    pub fn new(values: Vec<Cyclotomic>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// Value at the identity class, which is class 0.
    pub fn degree(&self) -> BigInt {
        self.values[0].to_integer().expect("degree is an integer")
    }

    /// Pointwise product: the character of the tensor product.
    pub fn tensor(&self, other: &Self) -> Self {
        Self { values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect() }
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self { values: self.values.iter().map(|a| a.scale(k)).collect() }
    }

    /// Values as rational integers, when all of them are.
    pub fn integer_values(&self) -> Option<Vec<BigInt>> {
        self.values.iter().map(Cyclotomic::to_integer).collect()
    }
}

fn value_key_cmp(a: &Character, b: &Character) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        // lexicographically descending values, so the trivial character leads
        for (x, y) in a.values.iter().zip(&b.values) {
            match y.coeffs().cmp(x.coeffs()) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: PermGroup,
    classes: ConjClassData,
    exponent: usize,
    prime: Option<u64>,
    irreducibles: Vec<Character>,
}

impl CharacterTable {
    pub fn compute(g: &PermGroup) -> Result<Self> {
        Self::compute_with_prime(g, None)
    }

    pub fn compute_with_prime(g: &PermGroup, prime_override: Option<u64>) -> Result<Self> {
        let classes = conjugacy_classes(g);
        let exponent = g.exponent();
        let accept = |rows: &[Vec<Cyclotomic>]| {
            let t = Self::assemble(g.clone(), classes.clone(), exponent, None, rows.to_vec());
            t.check_orthogonality()
        };
        let (p, rows) = dixon::dixon_table(g, &classes, prime_override, accept)?;
        Ok(Self::assemble(g.clone(), classes, exponent, Some(p), rows))
    }

    fn assemble(
        group: PermGroup,
        classes: ConjClassData,
        exponent: usize,
        prime: Option<u64>,
        rows: Vec<Vec<Cyclotomic>>,
    ) -> Self {
        let mut irreducibles: Vec<Character> = rows.into_iter().map(Character::new).collect();
        irreducibles.sort_by(value_key_cmp);
        Self { group, classes, exponent, prime, irreducibles }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjClassData {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    /// Prime used by the modular step; `None` for tables loaded from JSON.
    pub fn prime(&self) -> Option<u64> {
        self.prime
    }

    pub fn irreducibles(&self) -> &[Character] {
        &self.irreducibles
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.irreducibles.iter().map(|c| c.degree().to_usize().expect("small degree")).collect()
    }

    pub fn class_of(&self, p: &Permutation) -> Option<usize> {
        self.group.index_of(p).map(|i| self.classes.class_of[i])
    }

    /// Value of a class function at a group element.
    pub fn value_at<'a>(&self, chi: &'a Character, p: &Permutation) -> Option<&'a Cyclotomic> {
        self.class_of(p).map(|c| &chi.values[c])
    }

    pub fn centralizer_order(&self, class: usize) -> usize {
        self.classes.centralizer_order(self.group.order(), class)
    }

    pub fn trivial(&self) -> Character {
        Character::new(vec![Cyclotomic::from_int(1, 1); self.class_count()])
    }

    pub fn regular(&self) -> Character {
        let mut v = vec![Cyclotomic::from_int(1, 0); self.class_count()];
        v[0] = Cyclotomic::from_int(1, self.group.order());
        Character::new(v)
    }

    /// ⟨χ, ψ⟩ = |G|⁻¹ Σ_c |c| χ(c) conj(ψ(c)), required to be an integer.
    pub fn inner_product(&self, chi: &Character, psi: &Character) -> Result<BigInt> {
        if chi.values.len() != self.class_count() || psi.values.len() != self.class_count() {
            return Err(Error::DimensionMismatch("class function length".into()));
        }
        let mut acc = Cyclotomic::zero(1);
        for (l, (a, b)) in chi.values.iter().zip(&psi.values).enumerate() {
            let term = (a * &b.conj()).scale(&BigInt::from(self.classes.sizes[l]));
            acc = &acc + &term;
        }
        let total = acc.to_integer().ok_or_else(|| Error::NonIntegral(format!("inner product {acc}")))?;
        let order = BigInt::from(self.group.order());
        if !(&total % &order).is_zero() {
            return Err(Error::NonIntegral(format!("inner product {total}/{order}")));
        }
        Ok(total / order)
    }

    /// Multiplicities of every irreducible in `chi`.
    pub fn decompose(&self, chi: &Character) -> Result<Vec<BigInt>> {
        self.irreducibles.iter().map(|x| self.inner_product(chi, x)).collect()
    }

    /// Decomposition of a genuine character; fails if a multiplicity is negative.
    pub fn decompose_character(&self, chi: &Character) -> Result<Vec<BigInt>> {
        let m = self.decompose(chi)?;
        if m.iter().any(Signed::is_negative) {
            return Err(Error::NotACharacter(format!("multiplicities {m:?}")));
        }
        Ok(m)
    }

    /// Row orthonormality, column orthogonality and Σ deg² = |G|, exactly.
    pub fn check_orthogonality(&self) -> bool {
        let k = self.class_count();
        if self.irreducibles.len() != k {
            return false;
        }
        for i in 0..k {
            for j in i..k {
                match self.inner_product(&self.irreducibles[i], &self.irreducibles[j]) {
                    Ok(v) if v == BigInt::from(u8::from(i == j)) => {}
                    _ => return false,
                }
            }
        }
        for a in 0..k {
            for b in 0..k {
                let mut s = Cyclotomic::zero(1);
                for chi in &self.irreducibles {
                    s = &s + &(&chi.values[a] * &chi.values[b].conj());
                }
                let expect = if a == b { self.centralizer_order(a) } else { 0 };
                if s != Cyclotomic::from_int(1, expect) {
                    return false;
                }
            }
        }
        let sum_sq: BigInt = self.irreducibles.iter().map(|c| c.degree() * c.degree()).sum();
        sum_sq == BigInt::from(self.group.order())
    }

    pub fn to_json(&self) -> Value {
        let classes: Vec<Value> = self
            .classes
            .reps
            .iter()
            .zip(&self.classes.sizes)
            .map(|(&r, &s)| json!({ "rep": self.group.element(r).cycles(), "size": s }))
            .collect();
        let irr: Vec<Value> = self
            .irreducibles
            .iter()
            .map(|chi| {
                let values: Vec<Value> = chi
                    .values
                    .iter()
                    .map(|v| Value::Array(v.lift(self.exponent).coeffs().iter().map(int_to_json).collect()))
                    .collect();
                json!({ "degree": int_to_json(&chi.degree()), "values": values })
            })
            .collect();
        json!({
            "group": self.group.to_json(),
            "classes": classes,
            "exponent": self.exponent,
            "irreducibles": irr,
        })
    }

    /// Loads a table, matching the listed classes to the recomputed class
    /// data through their representatives. The table must be orthonormal.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("character table: {what}"));
        let group = PermGroup::from_json(v.get("group").ok_or_else(|| bad("missing group"))?)?;
        let classes = conjugacy_classes(&group);
        let exponent = v.get("exponent").and_then(Value::as_u64).ok_or_else(|| bad("missing exponent"))? as usize;
        let listed = v.get("classes").and_then(Value::as_array).ok_or_else(|| bad("missing classes"))?;
        if listed.len() != classes.len() {
            return Err(bad("class count mismatch"));
        }
        let mut slot = Vec::with_capacity(listed.len());
        for c in listed {
            let rep = c.get("rep").ok_or_else(|| bad("class without rep"))?;
            let cycles: Vec<Vec<usize>> = serde_json::from_value(rep.clone()).map_err(|_| bad("rep cycles"))?;
            let p = Permutation::from_cycles(group.degree(), &cycles)?;
            let idx = group.index_of(&p).ok_or_else(|| bad("rep outside group"))?;
            let cls = classes.class_of[idx];
            if c.get("size").and_then(Value::as_u64) != Some(classes.sizes[cls] as u64) {
                return Err(bad("class size mismatch"));
            }
            slot.push(cls);
        }
        let irr = v.get("irreducibles").and_then(Value::as_array).ok_or_else(|| bad("missing irreducibles"))?;
        let mut rows = Vec::with_capacity(irr.len());
        for chi in irr {
            let vals = chi.get("values").and_then(Value::as_array).ok_or_else(|| bad("missing values"))?;
            if vals.len() != classes.len() {
                return Err(bad("value count mismatch"));
            }
            let mut row = vec![Cyclotomic::zero(1); classes.len()];
            for (t, val) in vals.iter().enumerate() {
                let coeffs = val
                    .as_array()
                    .ok_or_else(|| bad("value is not a coefficient list"))?
                    .iter()
                    .map(int_from_json)
                    .collect::<Result<Vec<_>>>()?;
                if coeffs.len() != exponent {
                    return Err(bad("coefficient count differs from exponent"));
                }
                row[slot[t]] = Cyclotomic::from_coeffs(coeffs);
            }
            rows.push(row);
        }
        let table = Self::assemble(group, classes, exponent, None, rows);
        if !table.check_orthogonality() {
            return Err(Error::NotACharacter("loaded table is not orthonormal".into()));
        }
        Ok(table)
    }
}

/// For each class of `h`, the class of `g` containing it.
pub fn class_fusion(h: &CharacterTable, g: &CharacterTable) -> Result<Vec<usize>> {
    if !h.group.is_subgroup_of(&g.group) {
        return Err(Error::NotASubgroup("table groups are not nested".into()));
    }
    Ok(h.classes.reps.iter().map(|&r| g.class_of(h.group.element(r)).expect("subgroup element")).collect())
}

pub fn restrict(chi: &Character, h: &CharacterTable, g: &CharacterTable) -> Result<Character> {
    let fuse = class_fusion(h, g)?;
    Ok(Character::new(fuse.iter().map(|&l| chi.values[l].clone()).collect()))
}

/// χ↑(g) = Σ over H-classes c fusing into g^G of [C_G(g) : C_H(c)]·χ(c).
pub fn induce(chi: &Character, h: &CharacterTable, g: &CharacterTable) -> Result<Character> {
    let fuse = class_fusion(h, g)?;
    let mut values = vec![Cyclotomic::zero(1); g.class_count()];
    for (c, &l) in fuse.iter().enumerate() {
        let index = g.centralizer_order(l) / h.centralizer_order(c);
        values[l] = &values[l] + &chi.values[c].scale(&BigInt::from(index));
    }
    Ok(Character::new(values))
}

/// Multiplicity matrix with labelled rows (irreducibles of the subalgebra)
/// and columns (irreducibles of the overalgebra).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductionMatrix {
    pub matrix: IntMatrix,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
}

impl InductionMatrix {
    /// Checks the shape and the defining conditions: nonnegative entries,
    /// no zero row, no zero column.
    pub fn new(matrix: IntMatrix, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<Self> {
        if row_labels.len() != matrix.rows() || col_labels.len() != matrix.cols() {
            return Err(Error::DimensionMismatch("labels do not match the matrix shape".into()));
        }
        validate_induction_matrix(&matrix)?;
        Ok(Self { matrix, row_labels, col_labels })
    }

    pub fn unlabelled(matrix: IntMatrix) -> Result<Self> {
        let rows = (1..=matrix.rows()).map(|i| format!("b{i}")).collect();
        let cols = (1..=matrix.cols()).map(|j| format!("a{j}")).collect();
        Self::new(matrix, rows, cols)
    }
}

pub fn validate_induction_matrix(m: &IntMatrix) -> Result<()> {
    if m.rows() == 0 || m.cols() == 0 {
        return Err(Error::InvalidMatrix("empty induction matrix".into()));
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m.get(i, j).is_negative() {
                return Err(Error::NegativeEntry { row: i, col: j, value: m.get(i, j).to_string() });
            }
        }
    }
    if let Some(i) = (0..m.rows()).find(|&i| m.row(i).iter().all(Zero::is_zero)) {
        return Err(Error::InvalidMatrix(format!("row {i} is zero")));
    }
    if let Some(j) = (0..m.cols()).find(|&j| (0..m.rows()).all(|i| m.get(i, j).is_zero())) {
        return Err(Error::InvalidMatrix(format!("column {j} is zero")));
    }
    Ok(())
}

pub fn irreducible_labels(prefix: &str, table: &CharacterTable) -> Vec<String> {
    table.degrees().iter().enumerate().map(|(i, d)| format!("{prefix}{}[{d}]", i + 1)).collect()
}

/// The two Frobenius routes: `⟨χ_i↑G, ψ_j⟩_G` and `⟨χ_i, ψ_j↓H⟩_H`.
pub fn induction_matrix_routes(h: &CharacterTable, g: &CharacterTable) -> Result<(IntMatrix, IntMatrix)> {
    let (r, s) = (h.len(), g.len());
    let mut by_induction = IntMatrix::zeros(r, s);
    let mut by_restriction = IntMatrix::zeros(r, s);
    let restricted: Vec<Character> = g.irreducibles.iter().map(|psi| restrict(psi, h, g)).collect::<Result<_>>()?;
    for (i, chi) in h.irreducibles.iter().enumerate() {
        let up = induce(chi, h, g)?;
        for (j, psi) in g.irreducibles.iter().enumerate() {
            by_induction.set(i, j, g.inner_product(&up, psi)?);
            by_restriction.set(i, j, h.inner_product(chi, &restricted[j])?);
        }
    }
    Ok((by_induction, by_restriction))
}

pub fn induction_matrix(h: &CharacterTable, g: &CharacterTable) -> Result<InductionMatrix> {
    let (a, b) = induction_matrix_routes(h, g)?;
    if a != b {
        return Err(Error::InvalidMatrix("Frobenius reciprocity fails: tables are inconsistent".into()));
    }
    InductionMatrix::new(a, irreducible_labels("h", h), irreducible_labels("g", g))
}

/// Permutation character on the left cosets of `h`: χ(g) = #{xH : gxH = xH}.
pub fn perm_character(g: &CharacterTable, h: &PermGroup) -> Result<Character> {
    let grp = &g.group;
    let cosets = left_cosets(h, grp)?;
    let values = g
        .classes
        .reps
        .iter()
        .map(|&r| {
            let fixed = cosets.reps.iter().enumerate().filter(|&(c, &x)| cosets.coset_of[grp.mul(r, x)] == c).count();
            Cyclotomic::from_int(1, fixed)
        })
        .collect();
    Ok(Character::new(values))
}

pub fn support(multiplicities: &[BigInt]) -> BTreeSet<usize> {
    multiplicities.iter().enumerate().filter(|(_, m)| !m.is_zero()).map(|(i, _)| i).collect()
}

/// Irreducible supports of w, w⊗², …, w⊗ⁿ.
pub fn tensor_support_sequence(table: &CharacterTable, w: &Character, n_max: usize) -> Result<Vec<BTreeSet<usize>>> {
    let mut out = Vec::with_capacity(n_max);
    let mut power = w.clone();
    for n in 1..=n_max {
        if n > 1 {
            power = power.tensor(w);
        }
        out.push(support(&table.decompose_character(&power)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{named_group, parse_subgroup};

    fn table(name: &str) -> CharacterTable {
        CharacterTable::compute(&named_group(name).unwrap()).unwrap()
    }

    fn ints(c: &Character) -> Vec<i64> {
        c.integer_values().unwrap().iter().map(|x| x.to_i64().unwrap()).collect()
    }

    /// Values at e, (1 2), (1 2 3) of an S3 class function.
    fn s3_values(t: &CharacterTable, c: &Character) -> Vec<i64> {
        [vec![], vec![vec![1, 2]], vec![vec![1, 2, 3]]]
            .iter()
            .map(|cyc| {
                let p = Permutation::from_cycles(3, cyc).unwrap();
                t.value_at(c, &p).unwrap().to_integer().unwrap().to_i64().unwrap()
            })
            .collect()
    }

    #[test]
    fn small_tables() {
        let s3 = table("S3");
        assert_eq!(s3.degrees(), vec![1, 1, 2]);
        let c2 = table("C2");
        assert_eq!(ints(&c2.irreducibles()[0]), vec![1, 1]);
        assert_eq!(ints(&c2.irreducibles()[1]), vec![1, -1]);
        let triv = table("C1");
        assert_eq!(triv.len(), 1);
        assert_eq!(ints(&triv.irreducibles()[0]), vec![1]);
    }

    #[test]
    fn larger_tables_are_orthogonal() {
        for (name, k) in [("A4", 4), ("S4", 5), ("A5", 5), ("Q8", 5), ("D5", 4), ("C6", 6)] {
            let t = table(name);
            assert_eq!(t.len(), k, "{name}");
            assert!(t.check_orthogonality(), "{name}");
        }
    }

    #[test]
    fn inner_product_examples() {
        let s3 = table("S3");
        for (i, chi) in s3.irreducibles().iter().enumerate() {
            assert_eq!(s3.inner_product(chi, chi).unwrap(), BigInt::from(1));
            assert_eq!(s3.inner_product(&s3.regular(), chi).unwrap(), BigInt::from(s3.degrees()[i]));
        }
        let t = parse_subgroup("[[1,2]]", s3.group()).unwrap();
        let perm = perm_character(&s3, &PermGroup::trivial(3)).unwrap();
        assert_eq!(s3.inner_product(&perm, &s3.trivial()).unwrap(), BigInt::from(1));
        assert_eq!(ints(&perm), vec![6, 0, 0]);
        let pc = perm_character(&s3, &t).unwrap();
        assert_eq!(s3_values(&s3, &pc), vec![3, 1, 0]);
    }

    #[test]
    fn induction_restriction_examples() {
        let s3 = table("S3");
        let c2 = CharacterTable::compute(&parse_subgroup("[[1,2]]", s3.group()).unwrap()).unwrap();
        let up = induce(&c2.trivial(), &c2, &s3).unwrap();
        assert_eq!(s3_values(&s3, &up), vec![3, 1, 0]);
        let same = restrict(&s3.irreducibles()[2], &s3, &s3).unwrap();
        assert_eq!(same, s3.irreducibles()[2]);
        let a3 = CharacterTable::compute(&parse_subgroup("A3", s3.group()).unwrap()).unwrap();
        let sgn_down = restrict(&s3.irreducibles()[1], &a3, &s3).unwrap();
        assert_eq!(sgn_down, a3.trivial());
    }

    #[test]
    fn induction_matrix_examples() {
        let s3 = table("S3");
        let c2 = CharacterTable::compute(&parse_subgroup("[[1,2]]", s3.group()).unwrap()).unwrap();
        let a3 = CharacterTable::compute(&parse_subgroup("A3", s3.group()).unwrap()).unwrap();
        assert_eq!(
            induction_matrix(&c2, &s3).unwrap().matrix.to_rows_i64().unwrap(),
            vec![vec![1, 0, 1], vec![0, 1, 1]]
        );
        assert_eq!(
            induction_matrix(&a3, &s3).unwrap().matrix.to_rows_i64().unwrap(),
            vec![vec![1, 1, 0], vec![0, 0, 1], vec![0, 0, 1]]
        );
        assert_eq!(induction_matrix(&s3, &s3).unwrap().matrix, IntMatrix::identity(3));
    }

    #[test]
    fn perm_character_matches_induced_trivial() {
        let s4 = table("S4");
        for spec in ["S3", "A4", "V4", "[[1,2]]", "C4", "D4"] {
            let h = parse_subgroup(spec, s4.group()).unwrap();
            let ht = CharacterTable::compute(&h).unwrap();
            let pc = perm_character(&s4, &h).unwrap();
            assert_eq!(pc, induce(&ht.trivial(), &ht, &s4).unwrap(), "{spec}");
            assert_eq!(pc.degree(), BigInt::from(s4.group().order() / h.order()));
        }
        let s3 = table("S3");
        let a3 = parse_subgroup("A3", s3.group()).unwrap();
        assert_eq!(s3_values(&s3, &perm_character(&s3, &a3).unwrap()), vec![2, 0, 2]);
        assert_eq!(perm_character(&s3, s3.group()).unwrap(), s3.trivial());
    }

    #[test]
    fn tensor_supports() {
        let s3 = table("S3");
        let c2 = parse_subgroup("[[1,2]]", s3.group()).unwrap();
        let w = perm_character(&s3, &c2).unwrap();
        let seq = tensor_support_sequence(&s3, &w, 2).unwrap();
        assert_eq!(seq[0], BTreeSet::from([0, 2]));
        assert_eq!(seq[1], BTreeSet::from([0, 1, 2]));
        let triv = tensor_support_sequence(&s3, &s3.trivial(), 3).unwrap();
        assert!(triv.iter().all(|s| *s == BTreeSet::from([0])));
        let reg = tensor_support_sequence(&s3, &s3.regular(), 1).unwrap();
        assert_eq!(reg[0].len(), 3);
    }

    #[test]
    fn json_round_trip() {
        let t = table("A4");
        let back = CharacterTable::from_json(&t.to_json()).unwrap();
        assert_eq!(back.irreducibles(), t.irreducibles());
        let mut broken = t.to_json();
        broken["irreducibles"][1]["values"][0][0] = json!(2);
        assert!(CharacterTable::from_json(&broken).is_err());
    }

    #[test]
    fn prime_override() {
        let g = named_group("S3").unwrap();
        assert_eq!(CharacterTable::compute_with_prime(&g, Some(19)).unwrap().prime(), Some(19));
        assert!(matches!(CharacterTable::compute_with_prime(&g, Some(17)), Err(Error::NoSuitablePrime(17))));
    }
}
