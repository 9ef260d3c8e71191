//! Arithmetic in GF(p^k) with a fixed irreducible modulus.
//!
//! Elements are stored as the integer `c0 + c1·p + … + c_{k-1}·p^{k-1}` of their
//! polynomial-basis coefficients, so the field's elements are exactly `0..q`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order for which irreducibility is checked exhaustively.
const IRREDUCIBILITY_CHECK_LIMIT: u64 = 4096;
const MAX_PRIME: u32 = 1021;

/// A finite field `GF(p)[x] / (modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub k: u32,
    /// Monic modulus coefficients, constant term first (length `k + 1`).
    pub modulus: Vec<u32>,
    pub q: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldElement(pub u32);

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

impl FieldSpec {
    /// The field of order `q` from the supported table: primes up to 1021,
    /// GF(4) = x²+x+1, GF(9) = x²+1, GF(25) = x²+2, GF(49) = x²+1.
    pub fn new(q: u64) -> Result<Self> {
        match q {
            4 => FieldSpec::with_modulus(2, vec![1, 1, 1]),
            9 => FieldSpec::with_modulus(3, vec![1, 0, 1]),
            25 => FieldSpec::with_modulus(5, vec![2, 0, 1]),
            49 => FieldSpec::with_modulus(7, vec![1, 0, 1]),
            _ if q <= MAX_PRIME as u64 && is_prime(q) => FieldSpec::with_modulus(q as u32, vec![0, 1]),
            _ => Err(Error::UnsupportedField(q)),
        }
    }

    /// A field from an explicit monic modulus, rejected unless irreducible.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidParameter("modulus must be monic with coefficients below p".into()));
        }
        let k = (modulus.len() - 1) as u32;
        let q = (p as u64).checked_pow(k).filter(|&q| q <= u32::MAX as u64);
        let Some(q) = q else {
            return Err(Error::UnsupportedField(u64::MAX));
        };
        let spec = FieldSpec {
            p,
            k,
            modulus,
            q: q as u32,
        };
        if q <= IRREDUCIBILITY_CHECK_LIMIT && !spec.modulus_is_irreducible() {
            return Err(Error::InvalidParameter(format!("modulus {:?} is reducible over GF({p})", spec.modulus)));
        }
        Ok(spec)
    }

    /// No monic factor of degree `1..=k/2` divides the modulus.
    fn modulus_is_irreducible(&self) -> bool {
        let p = self.p as u64;
        for d in 1..=self.k / 2 {
            let count = p.pow(d);
            for idx in 0..count {
                let mut f: Vec<u64> = (0..d).map(|i| idx / p.pow(i) % p).collect();
                f.push(1);
                let m: Vec<u64> = self.modulus.iter().map(|&c| c as u64).collect();
                if poly_rem(&m, &f, p).iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The class of `x` in an extension field; zero for prime fields.
    pub fn x(&self) -> FieldElement {
        if self.k == 1 {
            FieldElement(0)
        } else {
            FieldElement(self.p)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElement {
        assert!(coeffs.len() <= self.k as usize);
        let mut v = 0;
        for &c in coeffs.iter().rev() {
            v = v * self.p + c % self.p;
        }
        FieldElement(v)
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut x = a.0;
        (0..self.k)
            .map(|_| {
                let c = x % self.p;
                x /= self.p;
                c
            })
            .collect()
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.k == 1 {
            return FieldElement((a.0 + b.0) % self.p);
        }
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let c: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
        self.from_coeffs(&c)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let c: Vec<u32> = self.coeffs(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.from_coeffs(&c)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p as u64;
        if self.k == 1 {
            return FieldElement((a.0 as u64 * b.0 as u64 % p) as u32);
        }
        let ca = self.coeffs(a);
        let cb = self.coeffs(b);
        let mut prod = vec![0u64; ca.len() + cb.len() - 1];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let m: Vec<u64> = self.modulus.iter().map(|&c| c as u64).collect();
        let r = poly_rem(&prod, &m, p);
        let mut c: Vec<u32> = r.iter().map(|&x| x as u32).collect();
        c.resize(self.k as usize, 0);
        self.from_coeffs(&c)
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    /// Nonzero squares (sorted) and the least nonsquare, for odd `q`.
    pub fn squares_and_nonsquare(&self) -> Result<(Vec<FieldElement>, FieldElement)> {
        if self.q.is_multiple_of(2) {
            return Err(Error::EvenField(self.q as u64));
        }
        let mut is_sq = vec![false; self.q as usize];
        for x in self.elements().skip(1) {
            is_sq[self.mul(x, x).0 as usize] = true;
        }
        let squares: Vec<FieldElement> = self.elements().filter(|x| is_sq[x.0 as usize]).collect();
        let c = self.elements().skip(1).find(|x| !is_sq[x.0 as usize]).expect("odd field has a nonsquare");
        Ok((squares, c))
    }

    /// Elements fixed by `x ↦ x^e`.
    pub fn fixed_by_power(&self, e: u64) -> Vec<FieldElement> {
        self.elements().filter(|&x| self.pow(x, e) == x).collect()
    }
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p); coefficients low first.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let off = r.len() - dm;
            for i in 0..dm {
                r[off + i] = (r[off + i] + (p - lead) * m[i]) % p;
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf9_generator_squares_to_minus_one() {
        let f = FieldSpec::new(9).unwrap();
        let a = f.x();
        assert_eq!(f.mul(a, a), f.from_int(-1));
    }

    #[test]
    fn gf4_has_characteristic_two() {
        let f = FieldSpec::new(4).unwrap();
        assert_eq!(f.add(f.one(), f.one()), f.zero());
        let x = f.x();
        assert_eq!(f.mul(x, x), f.add(x, f.one()));
    }

    #[test]
    fn gf49_x_squared() {
        let f = FieldSpec::new(49).unwrap();
        assert_eq!(f.mul(f.x(), f.x()), FieldElement(6));
    }

    #[test]
    fn inverse_and_zero() {
        for q in [5, 9, 25, 49, 13, 4] {
            let f = FieldSpec::new(q).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
            assert_eq!(f.inv(f.zero()), Err(Error::ZeroInverse));
        }
    }

    #[test]
    fn field_axioms_small() {
        for q in [4, 9, 7] {
            let f = FieldSpec::new(q).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn squares() {
        let f = FieldSpec::new(5).unwrap();
        let (sq, c) = f.squares_and_nonsquare().unwrap();
        assert_eq!(sq, vec![FieldElement(1), FieldElement(4)]);
        assert!(c == FieldElement(2) || c == FieldElement(3));
        let f = FieldSpec::new(13).unwrap();
        let (sq, _) = f.squares_and_nonsquare().unwrap();
        let v: Vec<u32> = sq.iter().map(|e| e.0).collect();
        assert_eq!(v, vec![1, 3, 4, 9, 10, 12]);
        let f = FieldSpec::new(9).unwrap();
        let (sq, c) = f.squares_and_nonsquare().unwrap();
        assert_eq!(sq.len(), 4);
        assert!(!sq.contains(&c));
        assert_eq!(FieldSpec::new(4).unwrap().squares_and_nonsquare(), Err(Error::EvenField(4)));
    }

    #[test]
    fn frobenius_subfield() {
        for (q, r) in [(9, 3), (25, 5), (49, 7), (4, 2)] {
            let f = FieldSpec::new(q).unwrap();
            assert_eq!(f.fixed_by_power(r).len() as u64, r);
        }
    }

    #[test]
    fn unsupported_and_reducible() {
        assert_eq!(FieldSpec::new(8), Err(Error::UnsupportedField(8)));
        assert_eq!(FieldSpec::new(1031), Err(Error::UnsupportedField(1031)));
        assert!(FieldSpec::with_modulus(5, vec![1, 0, 1]).is_err());
        assert!(FieldSpec::with_modulus(3, vec![1, 0, 1]).is_ok());
    }
}
