//! Burnside–Dixon–Schneider: central characters as common eigenvectors of the
//! class multiplication matrices over GF(p), lifted to exact values through
//! eigenvalue multiplicities.

use num_bigint::BigInt;

use super::Cyclotomic;
use crate::perm::{ConjClassData, PermGroup};
use crate::{Error, Result};

const MAX_PRIME: u64 = 1 << 31;
const PRIME_ATTEMPTS: usize = 16;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut n: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while n > 0 {
        if n & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        n >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn primitive_root(p: u64) -> u64 {
    let fs = prime_factors(p - 1);
    (2..p).find(|&g| fs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).unwrap_or(1)
}

/// Primes `p ≡ 1 (mod e)` with `p > 2|G|`, in increasing order.
pub(crate) fn dixon_primes(e: u64, order: u64) -> impl Iterator<Item = u64> {
    let start = (2 * order).div_ceil(e).max(1);
    (start..).map(move |k| k * e + 1).take_while(|&p| p < MAX_PRIME).filter(|&p| is_prime(p))
}

/// Reduced row-echelon form over GF(p); returns the nonzero rows and pivots.
fn rref_mod(mut rows: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = inv_mod(rows[r][c], p);
        for x in &mut rows[r] {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..cols {
                    let sub = mul_mod(f, rows[r][j], p);
                    rows[i][j] = (rows[i][j] + p - sub) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Null space basis of a square matrix over GF(p).
fn kernel_mod(m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = m.first().map_or(0, Vec::len);
    let (r, pivots) = rref_mod(m, p);
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

struct ClassAlgebra {
    /// coef[i][j][l] = #{(x, y) ∈ C_i × C_j : xy = g_l}
    coef: Vec<Vec<Vec<u64>>>,
}

impl ClassAlgebra {
    fn new(g: &PermGroup, classes: &ConjClassData) -> Self {
        let k = classes.len();
        let mut members = vec![Vec::new(); k];
        for (x, &c) in classes.class_of.iter().enumerate() {
            members[c].push(x);
        }
        let mut coef = vec![vec![vec![0u64; k]; k]; k];
        for l in 0..k {
            let z = g.element(classes.reps[l]);
            for i in 0..k {
                for &x in &members[i] {
                    let y = g.element(x).inverse().compose(z);
                    let j = classes.class_of[g.index_of(&y).expect("closed")];
                    coef[i][j][l] += 1;
                }
            }
        }
        Self { coef }
    }

    /// (A_i v)_j = Σ_l coef[i][j][l] v_l
    fn apply(&self, i: usize, v: &[u64], p: u64) -> Vec<u64> {
        self.coef[i]
            .iter()
            .map(|row| row.iter().zip(v).fold(0u64, |acc, (&a, &x)| (acc + mul_mod(a % p, x, p)) % p))
            .collect()
    }
}

/// Splits an invariant subspace (rows in reduced echelon form) into the
/// eigenspaces of class matrix `i`.
fn split(alg: &ClassAlgebra, i: usize, basis: &[Vec<u64>], pivots: &[usize], p: u64) -> Option<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    // A_i b_s = Σ_t r[s][t] b_t, read off at the pivot columns
    let images: Vec<Vec<u64>> = basis.iter().map(|b| alg.apply(i, b, p)).collect();
    let rt: Vec<Vec<u64>> = (0..d).map(|t| (0..d).map(|s| images[s][pivots[t]]).collect()).collect();
    let mut found = 0;
    let mut out = Vec::new();
    for lambda in 0..p {
        let shifted: Vec<Vec<u64>> = rt
            .iter()
            .enumerate()
            .map(|(t, row)| {
                let mut row = row.clone();
                row[t] = (row[t] + p - lambda) % p;
                row
            })
            .collect();
        let ker = kernel_mod(shifted, p);
        if ker.is_empty() {
            continue;
        }
        found += ker.len();
        let vecs: Vec<Vec<u64>> = ker
            .iter()
            .map(|x| {
                let mut v = vec![0u64; basis[0].len()];
                for (s, &xs) in x.iter().enumerate() {
                    for (vj, &bj) in v.iter_mut().zip(&basis[s]) {
                        *vj = (*vj + mul_mod(xs, bj, p)) % p;
                    }
                }
                v
            })
            .collect();
        out.push(rref_mod(vecs, p).0);
        if found == d {
            return Some(out);
        }
    }
    None
}

/// Irreducible characters as multiplicity vectors over ζ_e, unsorted.
fn table_mod_prime(
    g: &PermGroup,
    classes: &ConjClassData,
    alg: &ClassAlgebra,
    e: usize,
    p: u64,
) -> Result<Vec<Vec<Cyclotomic>>> {
    let k = classes.len();
    let order = g.order() as u64;
    let identity_rows: Vec<Vec<u64>> = (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
    let mut spaces = vec![identity_rows];
    for i in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for s in spaces {
            if s.len() == 1 {
                next.push(s);
                continue;
            }
            let (s, piv) = rref_mod(s, p);
            next.extend(split(alg, i, &s, &piv, p).ok_or(Error::SeparationFailure(p))?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::SeparationFailure(p));
    }

    let inv_class: Vec<usize> = classes.reps.iter().map(|&r| classes.class_of[g.inv(r)]).collect();
    let z = pow_mod(primitive_root(p), (p - 1) / e as u64, p);
    let mut chars = Vec::with_capacity(k);
    for s in spaces {
        let v = &s[0];
        if v[0] == 0 {
            return Err(Error::SeparationFailure(p));
        }
        let inv0 = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| mul_mod(x, inv0, p)).collect();
        let mut denom = 0u64;
        for l in 0..k {
            let h_inv = inv_mod(classes.sizes[l] as u64 % p, p);
            denom = (denom + mul_mod(mul_mod(omega[l], omega[inv_class[l]], p), h_inv, p)) % p;
        }
        if denom == 0 {
            return Err(Error::SeparationFailure(p));
        }
        let d2 = mul_mod(order % p, inv_mod(denom, p), p);
        let deg =
            (1..=order).take_while(|d| d * d <= order).find(|d| d * d == d2).ok_or(Error::SeparationFailure(p))?;
        let values: Vec<u64> =
            (0..k).map(|l| mul_mod(mul_mod(omega[l], deg, p), inv_mod(classes.sizes[l] as u64 % p, p), p)).collect();
        let mut row = Vec::with_capacity(k);
        for l in 0..k {
            let rep = g.element(classes.reps[l]);
            let o = rep.order();
            let step = e / o;
            let mut power = crate::perm::Permutation::identity(g.degree());
            let mut vals_at_powers = Vec::with_capacity(o);
            for _ in 0..o {
                vals_at_powers.push(values[classes.class_of[g.index_of(&power).expect("closed")]]);
                power = power.compose(rep);
            }
            let inv_o = inv_mod(o as u64 % p, p);
            let mut coeffs = vec![BigInt::from(0); e];
            let mut total = 0u64;
            for s in 0..o {
                let j = s * step;
                let mut acc = 0u64;
                for (t, &val) in vals_at_powers.iter().enumerate() {
                    let exp = ((e - j) % e) as u64 * t as u64 % e as u64;
                    acc = (acc + mul_mod(val, pow_mod(z, exp, p), p)) % p;
                }
                let m = mul_mod(acc, inv_o, p);
                if m > deg {
                    return Err(Error::SeparationFailure(p));
                }
                total += m;
                coeffs[j] = BigInt::from(m);
            }
            if total != deg {
                return Err(Error::SeparationFailure(p));
            }
            row.push(Cyclotomic::from_coeffs(coeffs));
        }
        chars.push(row);
    }
    Ok(chars)
}

/// Computes the irreducible characters. Each row is the list of values on
/// the classes, written over ζ_e with `e` the group exponent.
pub(crate) fn dixon_table(
    g: &PermGroup,
    classes: &ConjClassData,
    prime_override: Option<u64>,
    accept: impl Fn(&[Vec<Cyclotomic>]) -> bool,
) -> Result<(u64, Vec<Vec<Cyclotomic>>)> {
    let e = g.exponent();
    let alg = ClassAlgebra::new(g, classes);
    let candidates: Vec<u64> = match prime_override {
        Some(p) => {
            if !is_prime(p) || p % e as u64 != 1 {
                return Err(Error::NoSuitablePrime(p));
            }
            vec![p]
        }
        None => dixon_primes(e as u64, g.order() as u64).take(PRIME_ATTEMPTS).collect(),
    };
    let mut last = Error::NoSuitablePrime(MAX_PRIME);
    for p in candidates {
        match table_mod_prime(g, classes, &alg, e, p) {
            Ok(t) if accept(&t) => return Ok((p, t)),
            Ok(_) => last = Error::SeparationFailure(p),
            Err(err) => last = err,
        }
    }
    Err(last)
}
