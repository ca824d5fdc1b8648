//! Restriction of the simple D(kG)-modules to kG.
//!
//! Simples of D(kG) are indexed by a conjugacy class c with representative
//! g_c and an irreducible χ of C_G(g_c); restricted to kG the simple at
//! (c, χ) affords Ind χ.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::chars::{induce, irreducible_labels, CharacterTable, InductionMatrix};
use crate::exact::IntMatrix;
use crate::perm::centralizer;
use crate::{Error, Result};

/// Rows are centralizer pairs (classes in class order, then irreducibles of
/// the centralizer), columns are Irr(G).
pub fn drinfeld_induction_matrix(g: &CharacterTable) -> Result<InductionMatrix> {
    let grp = g.group();
    let classes = g.classes();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut labels = Vec::new();
    let mut square_sum = BigInt::from(0);
    for (c, &rep) in classes.reps.iter().enumerate() {
        let cent = centralizer(grp, grp.element(rep))?;
        let ct = CharacterTable::compute(&cent)?;
        for (chi, name) in ct.irreducibles().iter().zip(irreducible_labels("z", &ct)) {
            let up = induce(chi, &ct, g)?;
            rows.push(g.decompose_character(&up)?);
            labels.push(format!("c{}:{name}", c + 1));
            square_sum += (BigInt::from(classes.sizes[c]) * chi.degree()).pow(2);
        }
    }
    let order = BigInt::from(grp.order());
    if square_sum != &order * &order {
        return Err(Error::InvalidMatrix(format!(
            "centralizer pairs give Σ dim² = {square_sum}, not |G|² = {}",
            &order * &order
        )));
    }
    let mut m = IntMatrix::zeros(rows.len(), g.len());
    for (i, row) in rows.into_iter().enumerate() {
        for (j, x) in row.into_iter().enumerate() {
            m.set(i, j, x);
        }
    }
    InductionMatrix::new(m, labels, irreducible_labels("g", g))
}

/// Σ over rows of (class size · degree)², the dimension count of D(kG).
pub fn drinfeld_dimension(m: &InductionMatrix, g: &CharacterTable) -> Option<usize> {
    // dim of the simple at (c, χ) is the degree of Ind χ
    let degrees = g.degrees();
    (0..m.matrix.rows())
        .map(|i| {
            let d: BigInt = (0..m.matrix.cols()).map(|j| m.matrix.get(i, j) * BigInt::from(degrees[j])).sum();
            d.pow(2).to_usize()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::named_group;

    fn table(name: &str) -> CharacterTable {
        CharacterTable::compute(&named_group(name).unwrap()).unwrap()
    }

    fn sorted_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
        let mut r = m.to_rows_i64().unwrap();
        r.sort();
        r
    }

    #[test]
    fn c2_double() {
        let m = drinfeld_induction_matrix(&table("C2")).unwrap();
        assert_eq!((m.matrix.rows(), m.matrix.cols()), (4, 2));
        for j in 0..2 {
            assert_eq!((0..4).filter(|&i| m.matrix.get(i, j) == &BigInt::from(1)).count(), 2);
        }
    }

    #[test]
    fn s3_double() {
        let t = table("S3");
        let m = drinfeld_induction_matrix(&t).unwrap();
        let expected = IntMatrix::from_rows(&[
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 0, 1],
            [0, 1, 1],
            [1, 1, 0],
            [0, 0, 1],
            [0, 0, 1],
        ])
        .unwrap();
        assert_eq!(sorted_rows(&m.matrix), sorted_rows(&expected));
        assert_eq!(drinfeld_dimension(&m, &t), Some(36));
    }

    #[test]
    fn row_count_is_sum_over_centralizers() {
        for name in ["C3", "S3", "D4", "Q8", "A4"] {
            let t = table(name);
            let g = t.group();
            let expected: usize = t
                .classes()
                .reps
                .iter()
                .map(|&r| CharacterTable::compute(&centralizer(g, g.element(r)).unwrap()).unwrap().len())
                .sum();
            let m = drinfeld_induction_matrix(&t).unwrap();
            assert_eq!(m.matrix.rows(), expected, "{name}");
            assert_eq!(drinfeld_dimension(&m, &t), Some(g.order() * g.order()), "{name}");
        }
    }
}
