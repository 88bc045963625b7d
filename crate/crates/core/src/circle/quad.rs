//! Elements `a + bθ` of a real quadratic field, with `θ = (p + q√d)/r`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ambient irrational `θ = (p + q√d)/r ∈ (0, 1)`.
///
/// `d` is squarefree and greater than one, `q ≠ 0` and `r > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTheta", into = "RawTheta")]
pub struct Theta {
    p: i64,
    q: i64,
    d: i64,
    r: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTheta {
    p: i64,
    q: i64,
    d: i64,
    r: i64,
}

impl TryFrom<RawTheta> for Theta {
    type Error = Error;
    fn try_from(raw: RawTheta) -> Result<Self> {
        Theta::new(raw.p, raw.q, raw.d, raw.r)
    }
}

impl From<Theta> for RawTheta {
    fn from(t: Theta) -> Self {
        RawTheta { p: t.p, q: t.q, d: t.d, r: t.r }
    }
}

fn is_squarefree(d: i64) -> bool {
    let mut k = 2i64;
    while k * k <= d {
        if d % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Sign of `u + v√d` for `d > 1` not a square.
fn sign_surd_i128(u: i128, v: i128, d: i128) -> Option<Ordering> {
    let zero = Ordering::Equal;
    let su = u.cmp(&0);
    let sv = v.cmp(&0);
    Some(match (su, sv) {
        (Ordering::Equal, _) => sv,
        (_, Ordering::Equal) => su,
        (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
        (Ordering::Less, Ordering::Less) => Ordering::Less,
        _ => {
            let u2 = u.checked_mul(u)?;
            let v2d = v.checked_mul(v)?.checked_mul(d)?;
            // u and v√d have opposite signs; the larger magnitude wins
            let c = u2.cmp(&v2d);
            debug_assert_ne!(c, zero);
            if su == Ordering::Greater {
                c
            } else {
                c.reverse()
            }
        }
    })
}

fn sign_surd_big(u: &BigInt, v: &BigInt, d: &BigInt) -> Ordering {
    let su = u.sign();
    let sv = v.sign();
    use num_bigint::Sign::*;
    match (su, sv) {
        (NoSign, Plus) | (Plus, NoSign) | (Plus, Plus) => Ordering::Greater,
        (NoSign, Minus) | (Minus, NoSign) | (Minus, Minus) => Ordering::Less,
        (NoSign, NoSign) => Ordering::Equal,
        (Plus, Minus) => (u * u).cmp(&(v * v * d)),
        (Minus, Plus) => (v * v * d).cmp(&(u * u)),
    }
}

impl Theta {
    pub fn new(p: i64, q: i64, d: i64, r: i64) -> Result<Self> {
        if r <= 0 {
            return Err(Error::InvalidParameter("theta: r must be positive".into()));
        }
        if q == 0 {
            return Err(Error::InvalidParameter("theta: q must be nonzero".into()));
        }
        if d <= 1 || !is_squarefree(d) {
            return Err(Error::InvalidParameter("theta: d must be squarefree and greater than 1".into()));
        }
        if [p, q, r].iter().any(|x| x.unsigned_abs() > 1 << 20) || d > 1 << 20 {
            return Err(Error::InvalidParameter("theta: coefficients too large".into()));
        }
        let t = Theta { p, q, d, r };
        if t.sign_int(0, 1) != Ordering::Greater || t.sign_int(-1, 1) != Ordering::Less {
            return Err(Error::InvalidParameter("theta must lie in (0, 1)".into()));
        }
        Ok(t)
    }

    /// The golden mean conjugate `(√5 − 1)/2`.
    pub fn golden() -> Self {
        Theta { p: -1, q: 1, d: 5, r: 2 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }
    pub fn q(&self) -> i64 {
        self.q
    }
    pub fn d(&self) -> i64 {
        self.d
    }
    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn approx(&self) -> f64 {
        (self.p as f64 + self.q as f64 * (self.d as f64).sqrt()) / self.r as f64
    }

    /// Sign of `a + bθ` for integers `a`, `b`.
    pub fn sign_int(&self, a: i64, b: i64) -> Ordering {
        let (a, b) = (a as i128, b as i128);
        let u =
            a.checked_mul(self.r as i128).and_then(|x| b.checked_mul(self.p as i128).and_then(|y| x.checked_add(y)));
        let v = b.checked_mul(self.q as i128);
        if let (Some(u), Some(v)) = (u, v) {
            if let Some(s) = sign_surd_i128(u, v, self.d as i128) {
                return s;
            }
        }
        let u = BigInt::from(a) * self.r + BigInt::from(b) * self.p;
        let v = BigInt::from(b) * self.q;
        sign_surd_big(&u, &v, &BigInt::from(self.d))
    }

    /// Sign of `x` as a real number.
    pub fn sign(&self, x: &QuadExt) -> Ordering {
        let ad = x.a.denom();
        let bd = x.b.denom();
        // multiply through by r * ad * bd > 0
        let u = x.a.numer() * bd * self.r + x.b.numer() * ad * self.p;
        let v = x.b.numer() * ad * self.q;
        sign_surd_big(&u, &v, &BigInt::from(self.d))
    }

    /// Exact order of two field elements as real numbers.
    pub fn cmp(&self, x: &QuadExt, y: &QuadExt) -> Ordering {
        self.sign(&(x - y))
    }

    /// `⌊nθ⌋` for an integer `n`.
    pub fn floor_mul(&self, n: i64) -> i64 {
        let mut k = (n as f64 * self.approx()).floor() as i64;
        while self.sign_int(-k, n) == Ordering::Less {
            k -= 1;
        }
        while self.sign_int(-(k + 1), n) != Ordering::Less {
            k += 1;
        }
        k
    }

    pub fn floor(&self, x: &QuadExt) -> BigInt {
        let est = x.approx(self).floor();
        let mut k = if est.is_finite() { BigInt::from(est as i64) } else { BigInt::zero() };
        while self.sign(&(x - &QuadExt::integer(k.clone()))) == Ordering::Less {
            k -= 1;
        }
        while self.sign(&(x - &QuadExt::integer(&k + 1))) != Ordering::Less {
            k += 1;
        }
        k
    }

    /// `x − k` for the unique integer `k` putting the result in `[0, 1)`.
    pub fn frac(&self, x: &QuadExt) -> QuadExt {
        let k = self.floor(x);
        x - &QuadExt::integer(k)
    }
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{:+}√{})/{}", self.p, self.q, self.d, self.r)
    }
}

/// `a + bθ` with rational coefficients in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadExt { a, b }
    }

    pub fn zero() -> Self {
        QuadExt::new(BigRational::zero(), BigRational::zero())
    }

    pub fn integer(k: impl Into<BigInt>) -> Self {
        QuadExt::new(BigRational::from_integer(k.into()), BigRational::zero())
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        QuadExt::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn rational(num: i64, den: i64) -> Self {
        QuadExt::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    /// `θ` itself.
    pub fn theta() -> Self {
        QuadExt::from_ints(0, 1)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QuadExt::new(&self.a * c, &self.b * c)
    }

    pub fn half(&self) -> Self {
        self.scale(&BigRational::new(1.into(), 2.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Whether the value lies in `Z + θZ`.
    pub fn is_cut_value(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    pub fn approx(&self, theta: &Theta) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * theta.approx()
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, o: &QuadExt) -> QuadExt {
        QuadExt::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, o: &QuadExt) -> QuadExt {
        QuadExt::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-&self.a, -&self.b)
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, o: QuadExt) -> QuadExt {
        &self + &o
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, o: QuadExt) -> QuadExt {
        &self - &o
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

fn fmt_coeff_theta(b: &BigInt) -> String {
    if b.is_one() {
        "θ".to_string()
    } else if *b == -BigInt::one() {
        "-θ".to_string()
    } else {
        format!("{b}θ")
    }
}

/// Renders as `A/D`, `Bθ/D`, `(A+Bθ)/D` over a common denominator.
impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.a.denom().lcm(self.b.denom());
        let an = self.a.numer() * (&den / self.a.denom());
        let bn = self.b.numer() * (&den / self.b.denom());
        let body = match (an.is_zero(), bn.is_zero()) {
            (true, true) => "0".to_string(),
            (false, true) => an.to_string(),
            (true, false) => fmt_coeff_theta(&bn),
            (false, false) => {
                let sign = if bn.is_negative() { "-" } else { "+" };
                let mag = bn.abs();
                let t = fmt_coeff_theta(&mag);
                if den.is_one() {
                    format!("{an}{sign}{t}")
                } else {
                    format!("({an}{sign}{t})")
                }
            }
        };
        if den.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "{body}/{den}")
        }
    }
}
