//! Young's branching rule for ℂS_n ⊆ ℂS_{n+1}.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::chars::InductionMatrix;
use crate::exact::IntMatrix;
use crate::Result;

/// Partitions of `n` in lexicographically descending order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            extend(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dimension of the Specht module S^λ by the hook length formula.
pub fn hook_dimension(shape: &[usize]) -> BigUint {
    let n: usize = shape.iter().sum();
    let mut num: BigUint = (1..=n).fold(BigUint::one(), |acc, k| acc * k);
    let mut den = BigUint::one();
    for (i, &row) in shape.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = shape[i + 1..].iter().take_while(|&&r| r > j).count();
            den *= arm + leg + 1;
        }
    }
    num /= den;
    num
}

/// Partitions of `n` ordered like the irreducibles of a character table:
/// dimension ascending, ties in lexicographically descending order.
pub fn ordered_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut ps: Vec<(BigUint, Vec<usize>)> = partitions(n).into_iter().map(|p| (hook_dimension(&p), p)).collect();
    ps.sort_by(|a, b| a.0.cmp(&b.0));
    ps.into_iter().map(|(_, p)| p).collect()
}

fn label(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Inclusion matrix of S_n ⊆ S_{n+1}: entry 1 iff μ is λ plus one box.
pub fn young_branching_matrix(n: usize) -> Result<InductionMatrix> {
    let rows = ordered_partitions(n);
    let cols = ordered_partitions(n + 1);
    let col_index: HashMap<&[usize], usize> = cols.iter().enumerate().map(|(j, p)| (p.as_slice(), j)).collect();
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (i, lambda) in rows.iter().enumerate() {
        for r in 0..=lambda.len() {
            let addable = r == lambda.len() || r == 0 || lambda[r - 1] > lambda[r];
            if !addable {
                continue;
            }
            let mut mu = lambda.clone();
            if r == mu.len() {
                mu.push(1);
            } else {
                mu[r] += 1;
            }
            m.set(i, col_index[mu.as_slice()], 1.into());
        }
    }
    InductionMatrix::new(m, rows.iter().map(|p| label(p)).collect(), cols.iter().map(|p| label(p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(26).len(), 2436);
    }

    #[test]
    fn hook_dimensions_square_sum() {
        for n in 1..=9 {
            let total: BigUint = partitions(n).iter().map(|p| hook_dimension(p).pow(2)).sum();
            let fact: BigUint = (1..=n).fold(BigUint::one(), |a, k| a * k);
            assert_eq!(total, fact, "n={n}");
        }
        assert_eq!(hook_dimension(&[2, 1]), 2u32.into());
        assert_eq!(hook_dimension(&[3, 2]), 5u32.into());
    }

    #[test]
    fn s2_in_s3() {
        let m = young_branching_matrix(2).unwrap();
        assert_eq!(m.matrix, IntMatrix::from_rows(&[[1, 0, 1], [0, 1, 1]]).unwrap());
        assert_eq!(m.col_labels, ["[3]", "[1,1,1]", "[2,1]"]);
    }

    #[test]
    fn columns_sum_to_removable_corners() {
        let m = young_branching_matrix(6).unwrap();
        let cols = ordered_partitions(7);
        for (j, mu) in cols.iter().enumerate() {
            let corners = (0..mu.len()).filter(|&r| r + 1 == mu.len() || mu[r] > mu[r + 1]).count();
            let sum: num_bigint::BigInt = (0..m.matrix.rows()).map(|i| m.matrix.get(i, j).clone()).sum();
            assert_eq!(sum, corners.into());
        }
    }
}
