//! Exact arithmetic on Mordell curves y^2 = x^3 + c over Q and over prime
//! fields: chord-tangent group law, Lutz-Nagell torsion, reduction mod p.

use crate::arith::{factorize, is_cube};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The curve y^2 = x^3 + c with nonzero integer c (discriminant -432 c^2).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MordellCurve {
    c: BigInt,
}

/// A rational point: affine (x, y) or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: BigRational, y: BigRational },
}

impl CurvePoint {
    pub fn affine(x: BigRational, y: BigRational) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn affine_int(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        CurvePoint::Affine {
            x: BigRational::from_integer(x.into()),
            y: BigRational::from_integer(y.into()),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn negate(&self) -> CurvePoint {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: x.clone(), y: -y.clone() },
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "O"),
            CurvePoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

/// A point on the reduced curve over F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModPoint {
    Infinity,
    Affine { x: u64, y: u64 },
}

impl fmt::Display for ModPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModPoint::Infinity => write!(f, "O"),
            ModPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl MordellCurve {
    pub fn new(c: impl Into<BigInt>) -> Result<Self> {
        let c = c.into();
        if c.is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(MordellCurve { c })
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn discriminant(&self) -> BigInt {
        BigInt::from(-432) * &self.c * &self.c
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                y * y == x * x * x + BigRational::from_integer(self.c.clone())
            }
        }
    }

    fn check_on_curve(&self, p: &CurvePoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            match p {
                CurvePoint::Infinity => Ok(()),
                CurvePoint::Affine { x, y } => Err(Error::OffCurve {
                    c: self.c.clone(),
                    x: x.to_string(),
                    y: y.to_string(),
                }),
            }
        }
    }

    /// Chord-tangent addition. All cases of the law handled exactly.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1) = match p {
            CurvePoint::Infinity => return q.clone(),
            CurvePoint::Affine { x, y } => (x, y),
        };
        let (x2, y2) = match q {
            CurvePoint::Infinity => return p.clone(),
            CurvePoint::Affine { x, y } => (x, y),
        };
        let lambda = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return CurvePoint::Infinity;
            }
            // tangent: (3 x^2) / (2 y), curve has no x-term
            BigRational::from_integer(BigInt::from(3)) * x1 * x1
                / (BigRational::from_integer(BigInt::from(2)) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &lambda * &lambda - x1 - x2;
        let y3 = lambda * (x1 - &x3) - y1;
        CurvePoint::Affine { x: x3, y: y3 }
    }

    /// n-fold sum by double-and-add; negative n negates the point first.
    pub fn multiply(&self, n: i64, p: &CurvePoint) -> CurvePoint {
        let (mut n, mut base) = if n < 0 {
            (-(n as i128) as u64, p.negate())
        } else {
            (n as u64, p.clone())
        };
        let mut acc = CurvePoint::Infinity;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            n >>= 1;
        }
        acc
    }

    /// The full torsion subgroup by Lutz-Nagell.
    ///
    /// Candidates are integral points with y = 0 or y^2 | 432 c^2; each is
    /// kept only if some multiple up to 12 P is the identity (integral points
    /// need not be torsion).
    pub fn torsion_points(&self) -> Vec<CurvePoint> {
        let mut cands: Vec<(BigInt, BigInt)> = Vec::new();
        if let Some(r) = is_cube(&-&self.c) {
            cands.push((r, BigInt::zero()));
        }
        for y in divisors_of_square_part(&self.discriminant().abs()) {
            let x3 = &y * &y - &self.c;
            if let Some(x) = is_cube(&x3) {
                if !y.is_zero() {
                    cands.push((x.clone(), y.clone()));
                    cands.push((x, -y));
                }
            }
        }
        cands.sort();
        cands.dedup();
        let mut out = vec![CurvePoint::Infinity];
        for (x, y) in cands {
            let p = CurvePoint::affine_int(x, y);
            let mut q = p.clone();
            for _ in 1..=12 {
                if q.is_infinity() {
                    out.push(p);
                    break;
                }
                q = self.add(&q, &p);
            }
        }
        out.sort();
        out
    }

    /// Reduce a rational point mod a good prime (p not dividing 6c).
    ///
    /// In lowest terms x = u/t^2, y = v/t^3; p | t sends the point to O.
    pub fn reduce_mod_p(&self, p: &CurvePoint, prime: u64) -> Result<ModPoint> {
        let pr = BigInt::from(prime);
        if !crate::arith::is_prime(&pr) || (BigInt::from(6) * &self.c % &pr).is_zero() {
            return Err(Error::BadReduction(prime));
        }
        let (x, y) = match p {
            CurvePoint::Infinity => return Ok(ModPoint::Infinity),
            CurvePoint::Affine { x, y } => (x, y),
        };
        if (x.denom() % &pr).is_zero() || (y.denom() % &pr).is_zero() {
            return Ok(ModPoint::Infinity);
        }
        let xm = mod_of_rational(x, prime);
        let ym = mod_of_rational(y, prime);
        Ok(ModPoint::Affine { x: xm, y: ym })
    }

    /// Group law on the reduction mod a good prime.
    pub fn mod_add(&self, p: ModPoint, q: ModPoint, prime: u64) -> ModPoint {
        let (x1, y1) = match p {
            ModPoint::Infinity => return q,
            ModPoint::Affine { x, y } => (x, y),
        };
        let (x2, y2) = match q {
            ModPoint::Infinity => return p,
            ModPoint::Affine { x, y } => (x, y),
        };
        let m = prime as u128;
        let lambda = if x1 == x2 {
            if (y1 + y2) % prime == 0 {
                return ModPoint::Infinity;
            }
            let num = 3 * (x1 as u128) % m * (x1 as u128) % m;
            let den = 2 * (y1 as u128) % m;
            num * mod_inverse(den as u64, prime) as u128 % m
        } else {
            let num = (x2 as u128 + m - x1 as u128) % m;
            let dy = (y2 as u128 + m - y1 as u128) % m;
            dy * mod_inverse(num as u64, prime) as u128 % m
        };
        let x3 = (lambda * lambda % m + 2 * m - x1 as u128 - x2 as u128) % m;
        let y3 = (lambda * ((x1 as u128 + m - x3) % m) % m + m - y1 as u128) % m;
        ModPoint::Affine { x: x3 as u64, y: y3 as u64 }
    }

    /// Least n >= 1 with n P = O in E(F_p).
    pub fn point_order_mod_p(&self, p: ModPoint, prime: u64) -> u64 {
        let mut q = p;
        let mut n = 1;
        while let ModPoint::Affine { .. } = q {
            q = self.mod_add(q, p, prime);
            n += 1;
        }
        n
    }

    /// Well-formedness helper used by callers that ingest external points.
    pub fn require_on_curve(&self, p: &CurvePoint) -> Result<()> {
        self.check_on_curve(p)
    }
}

/// All y >= 1 with y^2 | d (d > 0), from the factorization of d.
fn divisors_of_square_part(d: &BigInt) -> Vec<BigInt> {
    let mut ys = vec![BigInt::one()];
    for (p, e) in factorize(d) {
        let half = e / 2;
        let mut next = Vec::with_capacity(ys.len() * (half as usize + 1));
        for y in &ys {
            let mut q = y.clone();
            next.push(q.clone());
            for _ in 0..half {
                q = &q * &p;
                next.push(q.clone());
            }
        }
        ys = next;
    }
    ys.sort();
    ys.dedup();
    ys
}

fn mod_of_rational(r: &BigRational, p: u64) -> u64 {
    let pr = BigInt::from(p);
    let num = r.numer().mod_floor(&pr);
    let den = r.denom().mod_floor(&pr);
    let num: u64 = num.try_into().unwrap();
    let den: u64 = den.try_into().unwrap();
    (num as u128 * mod_inverse(den, p) as u128 % p as u128) as u64
}

/// Inverse mod a prime by Fermat.
pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a % p, p - 2, p)
}

pub(crate) fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mm = m as u128;
    let mut bb = b as u128 % mm;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % mm;
        }
        bb = bb * bb % mm;
        e >>= 1;
    }
    acc as u64
}
