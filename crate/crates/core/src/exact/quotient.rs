use num_traits::Zero;

use super::{BigRat, EchelonBasis, RatMatrix, SparseVec};

/// Quotient of `k^ambient_dim` by the span of a set of relations.
///
/// The complement is spanned by the unit vectors at the non-pivot columns of
/// the reduced relation basis, so the section sends quotient coordinate `t`
/// to the unit vector `e_{free[t]}`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    ambient_dim: usize,
    relations: EchelonBasis,
    free: Vec<usize>,
    slot: Vec<Option<usize>>,
}

impl QuotientMap {
    pub fn from_sparse<I: IntoIterator<Item = SparseVec>>(ambient_dim: usize, relations: I) -> Self {
        let mut basis = EchelonBasis::new();
        for r in relations {
            basis.insert(&r);
        }
        Self::from_echelon(ambient_dim, basis)
    }

    pub fn from_echelon(ambient_dim: usize, relations: EchelonBasis) -> Self {
        let free: Vec<usize> = (0..ambient_dim).filter(|c| !relations.is_pivot(*c)).collect();
        let mut slot = vec![None; ambient_dim];
        for (t, &c) in free.iter().enumerate() {
            slot[c] = Some(t);
        }
        Self { ambient_dim, relations, free, slot }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn relation_rank(&self) -> usize {
        self.relations.rank()
    }

    /// Ambient index of the `t`-th complement basis vector.
    pub fn section_index(&self, t: usize) -> usize {
        self.free[t]
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let w = self.relations.reduce(v);
        SparseVec::from_pairs(w.iter().map(|(c, x)| {
            let t = self.slot[*c].expect("reduced vector has zeros at pivots");
            (t, x.clone())
        }))
    }

    pub fn project_dense(&self, v: &[BigRat]) -> Vec<BigRat> {
        self.project(&SparseVec::from_dense(v)).to_dense(self.dim())
    }

    pub fn section(&self, q: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(q.iter().map(|(t, x)| (self.free[*t], x.clone())))
    }

    /// True iff the vector lies in the relation span.
    pub fn kills(&self, v: &SparseVec) -> bool {
        self.relations.contains(v)
    }

    pub fn projection_matrix(&self) -> RatMatrix {
        let mut p = RatMatrix::zeros(self.dim(), self.ambient_dim);
        for c in 0..self.ambient_dim {
            for (t, x) in self.project(&SparseVec::unit(c)).iter() {
                p.set(*t, c, x.clone());
            }
        }
        p
    }

    pub fn section_matrix(&self) -> RatMatrix {
        let mut s = RatMatrix::zeros(self.ambient_dim, self.dim());
        for (t, &c) in self.free.iter().enumerate() {
            s.set(c, t, BigRat::from_integer(1.into()));
        }
        s
    }
}

/// Quotient of `k^ambient_dim` by the span of dense relation vectors.
pub fn quotient_basis(ambient_dim: usize, relations: &[Vec<BigRat>]) -> QuotientMap {
    QuotientMap::from_sparse(
        ambient_dim,
        relations.iter().filter(|r| !r.iter().all(Zero::is_zero)).map(|r| SparseVec::from_dense(r)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn no_relations_gives_identity() {
        let q = quotient_basis(3, &[]);
        assert_eq!(q.dim(), 3);
        assert!(q.projection_matrix().is_identity());
    }

    #[test]
    fn antidiagonal_relation_gives_line() {
        let q = quotient_basis(2, &[vec![rat(1), rat(-1)]]);
        assert_eq!(q.dim(), 1);
        // e0 and e1 become equal in the quotient
        assert_eq!(q.project_dense(&[rat(1), rat(0)]), q.project_dense(&[rat(0), rat(1)]));
    }

    #[test]
    fn spanning_relations_give_zero_space() {
        let q = quotient_basis(2, &[vec![rat(1), rat(1)], vec![rat(1), rat(-1)]]);
        assert_eq!(q.dim(), 0);
    }

    #[test]
    fn projection_section_identities() {
        let rels = vec![vec![rat(1), rat(2), rat(0), rat(-1)], vec![rat(0), rat(1), rat(1), rat(1)]];
        let q = quotient_basis(4, &rels);
        let p = q.projection_matrix();
        let s = q.section_matrix();
        assert_eq!(q.dim(), 4 - RatMatrix::from_rows(&rels).unwrap().rank());
        assert!(p.mul(&s).unwrap().is_identity());
        // section . projection fixes the complement
        let sp = s.mul(&p).unwrap();
        for t in 0..q.dim() {
            let e = q.section_index(t);
            assert_eq!(sp.column(e), RatMatrix::identity(4).column(e));
        }
        for r in &rels {
            assert!(q.project_dense(r).iter().all(Zero::is_zero));
        }
    }
}
