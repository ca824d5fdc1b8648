use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Element of ℤ[ζ_e] written as `Σ_j c_j ζ_e^j`, `0 ≤ j < e`.
///
/// The coefficient vector is not canonical; equality and integrality are
/// decided after reduction modulo the cyclotomic polynomial Φ_e. Values with
/// different exponents are compared and combined in the lcm exponent.
#[derive(Clone)]
pub struct Cyclotomic {
    e: usize,
    c: Vec<BigInt>,
}

fn phi_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exact quotient of `num` by the monic polynomial `den` (low degree first).
fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd)];
    for k in (0..quot.len()).rev() {
        let lead = rem[k + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (t, d) in den.iter().enumerate() {
            rem[k + t] -= &lead * d;
        }
        quot[k] = lead;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    quot
}

/// Coefficients of Φ_e, lowest degree first.
pub fn cyclotomic_polynomial(e: usize) -> Arc<Vec<BigInt>> {
    assert!(e >= 1);
    if let Some(p) = phi_cache().lock().expect("phi cache").get(&e) {
        return p.clone();
    }
    let mut poly = vec![BigInt::zero(); e + 1];
    poly[0] = -BigInt::one();
    poly[e] = BigInt::one();
    for d in (1..e).filter(|d| e.is_multiple_of(*d)) {
        poly = div_monic(&poly, &cyclotomic_polynomial(d));
    }
    let poly = Arc::new(poly);
    phi_cache().lock().expect("phi cache").insert(e, poly.clone());
    poly
}

impl Cyclotomic {
    pub fn zero(e: usize) -> Self {
        assert!(e >= 1, "exponent must be positive");
        Self { e, c: vec![BigInt::zero(); e] }
    }

    pub fn from_int<T: Into<BigInt>>(e: usize, n: T) -> Self {
        let mut z = Self::zero(e);
        z.c[0] = n.into();
        z
    }

    /// ζ_e^j.
    pub fn root_power(e: usize, j: usize) -> Self {
        let mut z = Self::zero(e);
        z.c[j % e] = BigInt::one();
        z
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "exponent must be positive");
        Self { e: coeffs.len(), c: coeffs }
    }

    pub fn exponent(&self) -> usize {
        self.e
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    /// Same number written over ζ_{e'}, where `e` divides `e'`.
    pub fn lift(&self, e2: usize) -> Self {
        assert!(e2.is_multiple_of(self.e), "exponent {} does not divide {e2}", self.e);
        if e2 == self.e {
            return self.clone();
        }
        let f = e2 / self.e;
        let mut z = Self::zero(e2);
        for (j, x) in self.c.iter().enumerate() {
            z.c[j * f] = x.clone();
        }
        z
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let e = self.e.lcm(&other.e);
        (self.lift(e), other.lift(e))
    }

    /// Complex conjugate: ζ^j ↦ ζ^{-j}.
    pub fn conj(&self) -> Self {
        let mut z = Self::zero(self.e);
        for (j, x) in self.c.iter().enumerate() {
            z.c[(self.e - j) % self.e] = x.clone();
        }
        z
    }

    /// Remainder modulo Φ_e: the canonical power-basis coordinates.
    pub fn reduced(&self) -> Vec<BigInt> {
        let phi = cyclotomic_polynomial(self.e);
        let deg = phi.len() - 1;
        let mut rem = self.c.clone();
        for k in (deg..rem.len()).rev() {
            let lead = std::mem::take(&mut rem[k]);
            if lead.is_zero() {
                continue;
            }
            for (t, p) in phi.iter().enumerate().take(deg) {
                rem[k - deg + t] -= &lead * p;
            }
        }
        rem.truncate(deg);
        rem
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(Zero::is_zero)
    }

    /// The value as a rational integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        let r = self.reduced();
        if r[1..].iter().all(Zero::is_zero) {
            Some(r[0].clone())
        } else {
            None
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self { e: self.e, c: self.c.iter().map(|x| x * k).collect() }
    }

    /// Exact division of every power-basis coordinate by `k`.
    pub fn div_exact(&self, k: &BigInt) -> Option<Self> {
        let mut c = self.reduced();
        for x in &mut c {
            let (q, r) = x.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            *x = q;
        }
        c.resize(self.e, BigInt::zero());
        Some(Self { e: self.e, c })
    }

    /// True iff every coefficient is a nonnegative integer, as for
    /// eigenvalue-multiplicity vectors.
    pub fn is_multiplicity_vector(&self) -> bool {
        self.c.iter().all(|x| !x.is_negative())
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        (&a - &b).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.aligned(rhs);
        for (x, y) in a.c.iter_mut().zip(b.c) {
            *x += y;
        }
        a
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.aligned(rhs);
        for (x, y) in a.c.iter_mut().zip(b.c) {
            *x -= y;
        }
        a
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        Cyclotomic { e: self.e, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.aligned(rhs);
        let e = a.e;
        let mut out = Cyclotomic::zero(e);
        let bn: Vec<(usize, &BigInt)> = b.c.iter().enumerate().filter(|(_, y)| !y.is_zero()).collect();
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &(j, y) in &bn {
                out.c[(i + j) % e] += x * y;
            }
        }
        out
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// GAP-like notation: `2`, `-1`, `E(3) + E(3)^2`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.to_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (j, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let term = match j {
                0 => String::new(),
                1 => format!("E({})", self.e),
                _ => format!("E({})^{j}", self.e),
            };
            let mag = x.abs();
            let sign = if x.is_negative() { "-" } else { "+" };
            if first {
                if x.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (term.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{term}")?,
                (false, false) => write!(f, "{mag}*{term}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        let mut s = Cyclotomic::zero(5);
        for j in 0..5 {
            s = &s + &Cyclotomic::root_power(5, j);
        }
        assert!(s.is_zero());
        // 1 + ζ3 + ζ3² = 0, so ζ3 + ζ3² = -1
        let w = &Cyclotomic::root_power(3, 1) + &Cyclotomic::root_power(3, 2);
        assert_eq!(w.to_integer(), Some(BigInt::from(-1)));
    }

    #[test]
    fn lifting_preserves_value() {
        let z = Cyclotomic::root_power(4, 1);
        assert_eq!(z.lift(12), z);
        assert_eq!(&z * &z, Cyclotomic::from_int(6, -1));
        assert_eq!(z.conj(), Cyclotomic::root_power(4, 3));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Cyclotomic::from_int(3, -2).to_string(), "-2");
        let w = &Cyclotomic::root_power(3, 1) + &Cyclotomic::root_power(3, 1);
        assert_eq!(w.to_string(), "2*E(3)");
    }

    proptest! {
        #[test]
        fn conj_is_multiplicative(a in proptest::collection::vec(-3i64..4, 6), b in proptest::collection::vec(-3i64..4, 6)) {
            let x = Cyclotomic::from_coeffs(ints(&a));
            let y = Cyclotomic::from_coeffs(ints(&b));
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        }

        #[test]
        fn norm_of_value_is_real(a in proptest::collection::vec(0i64..4, 12)) {
            let x = Cyclotomic::from_coeffs(ints(&a));
            let n = &x * &x.conj();
            prop_assert_eq!(n.conj(), n);
        }
    }
}
