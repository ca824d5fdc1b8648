//! Depth invariants of a split semisimple inclusion from its induction matrix.
//!
//! With `S = M·Mᵀ` and `N = Mᵀ·M`, the powers `P_0 = I`, `P_1 = M`,
//! `P_{j+2} = S·P_j` alternate between `S^k` and `S^k·M`. Supports of both
//! subsequences grow monotonically, and each parity stabilizes once two
//! consecutive terms share a support.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::chars::validate_induction_matrix;
use crate::exact::kernel::{left_mul, witness, BitMatrix, DenseNat, SparseNat, SparsePattern};
use crate::exact::{int_to_json, mat_mul, IntMatrix};
use crate::{Error, Result};

/// The four depths of an inclusion and their stabilization indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthQuad {
    pub d_odd: usize,
    pub d_ev: usize,
    pub d_min: usize,
    pub d_h: usize,
    /// minimal n with supp Sⁿ = supp Sⁿ⁺¹
    pub n_odd: usize,
    /// minimal n ≥ 1 with supp Sⁿ⁻¹M = supp SⁿM
    pub n_ev: usize,
    /// minimal n with supp Nⁿ = supp Nⁿ⁺¹
    pub n_h: usize,
    /// least q with M⁽ᵈ⁺¹⁾ ≤ q·M⁽ᵈ⁻¹⁾ at d = d_min
    pub q: BigInt,
}

impl DepthQuad {
    /// `d_h − 2 ≤ d_min ≤ d_h + 1`.
    pub fn chain_holds(&self) -> bool {
        self.d_h <= self.d_min + 2 && self.d_min <= self.d_h + 1
    }

    pub fn to_json(&self) -> Value {
        json!({
            "d_odd": self.d_odd,
            "d_ev": self.d_ev,
            "d_min": self.d_min,
            "d_h": self.d_h,
            "q": int_to_json(&self.q),
            "stabilization": { "n_odd": self.n_odd, "n_ev": self.n_ev, "n_h": self.n_h },
        })
    }
}

/// M together with S = MMᵀ and N = MᵀM.
#[derive(Clone, Debug)]
pub struct BratteliPowers {
    m: IntMatrix,
    s: IntMatrix,
    n: IntMatrix,
}

impl BratteliPowers {
    pub fn new(m: &IntMatrix) -> Result<Self> {
        validate_induction_matrix(m)?;
        let mt = m.transpose();
        Ok(Self { m: m.clone(), s: mat_mul(m, &mt)?, n: mat_mul(&mt, m)? })
    }

    pub fn m(&self) -> &IntMatrix {
        &self.m
    }

    pub fn s(&self) -> &IntMatrix {
        &self.s
    }

    pub fn n(&self) -> &IntMatrix {
        &self.n
    }

    /// M⁽⁰⁾ = I, M⁽²ᵏ⁾ = Sᵏ, M⁽²ᵏ⁺¹⁾ = SᵏM.
    pub fn power(&self, j: usize) -> Result<IntMatrix> {
        let sp = SparseNat::from_int(&self.s)?;
        let mut x = if j.is_multiple_of(2) { DenseNat::identity(self.m.rows()) } else { DenseNat::from_int(&self.m)? };
        for _ in 0..j / 2 {
            x = left_mul(&sp, &x)?;
        }
        Ok(x.to_int())
    }
}

pub fn bratteli_power(m: &IntMatrix, j: usize) -> Result<IntMatrix> {
    BratteliPowers::new(m)?.power(j)
}

/// Least k ≥ 0 with supp(Aᵏ·X₀) = supp(Aᵏ⁺¹·X₀). Only supports are
/// tracked: for nonnegative factors the support of a product is the boolean
/// product of the supports.
pub(crate) fn stabilization_index(a: &IntMatrix, start: BitMatrix) -> Result<usize> {
    let pat = SparsePattern::of(a)?;
    let mut x = start;
    for k in 0.. {
        let y = pat.left_mul(&x)?;
        if y == x {
            return Ok(k);
        }
        x = y;
    }
    unreachable!()
}

/// Least n ≥ 0 with supp(Tⁿ) = supp(Tⁿ⁺¹), T⁰ = I, for a square
/// nonnegative matrix with positive diagonal.
pub fn power_stabilization(t: &IntMatrix) -> Result<usize> {
    if t.rows() != t.cols() {
        return Err(Error::DimensionMismatch("square matrix required".into()));
    }
    if (0..t.rows()).any(|i| t.get(i, i) <= &BigInt::from(0)) {
        return Err(Error::InvalidMatrix("diagonal must be positive".into()));
    }
    stabilization_index(t, BitMatrix::identity(t.rows()))
}

struct ParityScan {
    d_odd: usize,
    d_ev: usize,
    d_min: usize,
    q: BigInt,
}

/// Supports of P_j until both parities have stabilized, then the exact
/// witness q for P_{d+1} ≤ q·P_{d−1} at d = d_min.
fn parity_scan(p: &BratteliPowers) -> Result<ParityScan> {
    let pat = SparsePattern::of(&p.s)?;
    let mut prev2 = BitMatrix::identity(p.m.rows());
    let mut prev1 = BitMatrix::support_of(&p.m)?;
    let (mut d_odd, mut d_ev) = (None, None);
    let mut j = 2;
    while d_odd.is_none() || d_ev.is_none() {
        let cur = pat.left_mul(&prev2)?;
        if cur == prev2 {
            if j % 2 == 0 {
                d_odd.get_or_insert(j - 1);
            } else {
                d_ev.get_or_insert(j - 1);
            }
        }
        prev2 = std::mem::replace(&mut prev1, cur);
        j += 1;
    }
    let (d_odd, d_ev) = (d_odd.expect("loop exit"), d_ev.expect("loop exit"));
    let d_min = d_odd.min(d_ev);
    let sp = SparseNat::from_int(&p.s)?;
    let mut lower = if d_min % 2 == 1 { DenseNat::identity(p.m.rows()) } else { DenseNat::from_int(&p.m)? };
    for _ in 0..(d_min - 1) / 2 {
        lower = left_mul(&sp, &lower)?;
    }
    let upper = left_mul(&sp, &lower)?;
    let q = witness(&upper, &lower).expect("equal supports dominate");
    Ok(ParityScan { d_odd, d_ev, d_min, q: BigInt::from(q) })
}

pub fn odd_depth(m: &IntMatrix) -> Result<usize> {
    let p = BratteliPowers::new(m)?;
    Ok(2 * stabilization_index(&p.s, BitMatrix::identity(m.rows()))? + 1)
}

pub fn even_depth(m: &IntMatrix) -> Result<usize> {
    let p = BratteliPowers::new(m)?;
    Ok(2 * (stabilization_index(&p.s, BitMatrix::support_of(m)?)? + 1))
}

/// Least n ≥ 1 with M⁽ⁿ⁺¹⁾ ≤ q·M⁽ⁿ⁻¹⁾, and the least such q.
pub fn min_depth(m: &IntMatrix) -> Result<(usize, BigInt)> {
    let scan = parity_scan(&BratteliPowers::new(m)?)?;
    Ok((scan.d_min, scan.q))
}

pub fn h_depth(m: &IntMatrix) -> Result<usize> {
    let p = BratteliPowers::new(m)?;
    Ok(2 * stabilization_index(&p.n, BitMatrix::identity(m.cols()))? + 1)
}

pub fn depth_quad(m: &IntMatrix) -> Result<DepthQuad> {
    let p = BratteliPowers::new(m)?;
    let scan = parity_scan(&p)?;
    let n_h = stabilization_index(&p.n, BitMatrix::identity(m.cols()))?;
    let quad = DepthQuad {
        d_odd: scan.d_odd,
        d_ev: scan.d_ev,
        d_min: scan.d_min,
        d_h: 2 * n_h + 1,
        n_odd: (scan.d_odd - 1) / 2,
        n_ev: scan.d_ev / 2,
        n_h,
        q: scan.q,
    };
    debug_assert_eq!(quad.d_min, quad.d_odd.min(quad.d_ev));
    Ok(quad)
}
