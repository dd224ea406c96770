//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(n)-1}` modulo the
//! n-th cyclotomic polynomial, so two elements of the same field are equal
//! exactly when their coefficient vectors agree.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Coefficients of Φ_n, lowest degree first.
///
/// Computed by dividing `x^n - 1` by `Φ_d` for every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u32) -> Result<Vec<BigInt>> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut memo = HashMap::new();
    Ok(cyclotomic_rec(n, &mut memo))
}

fn cyclotomic_rec(n: u32, memo: &mut HashMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_rec(d, memo);
            num = exact_monic_div(&num, &phi_d);
        }
    }
    memo.insert(n, num.clone());
    num
}

/// Quotient of `num / den` for a monic integer `den` dividing `num` exactly.
fn exact_monic_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = num.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Static data for one field Q(ζ_n).
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    modulus: Vec<Rational>,
    /// `x^(degree + k) mod Φ_n` for `k < degree - 1`.
    high_powers: Vec<Vec<Rational>>,
}

impl CyclotomicField {
    fn new(order: u32) -> Result<Self> {
        let modulus: Vec<Rational> = cyclotomic_polynomial(order)?.into_iter().map(Rational::from_integer).collect();
        let degree = modulus.len() - 1;
        let mut field = CyclotomicField { order, modulus, high_powers: Vec::new() };
        let mut high_powers = Vec::new();
        for k in degree..(2 * degree).saturating_sub(1) {
            let mut p = vec![Rational::zero(); k + 1];
            p[k] = Rational::one();
            high_powers.push(field.reduce_poly(p));
        }
        field.high_powers = high_powers;
        Ok(field)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// φ(n), the dimension of Q(ζ_n) over Q.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Remainder of an arbitrary polynomial modulo Φ_n, padded to `degree`.
    fn reduce_poly(&self, mut p: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        while p.len() > d {
            let c = p.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let shift = p.len() - d;
            for (j, m) in self.modulus[..d].iter().enumerate() {
                if !m.is_zero() {
                    p[shift + j] -= &c * m;
                }
            }
        }
        p.resize(d, Rational::zero());
        p
    }

    fn mul_coeffs(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let d = self.degree();
        if d == 1 {
            return vec![&a[0] * &b[0]];
        }
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let high = prod.split_off(d);
        for (c, red) in high.iter().zip(&self.high_powers) {
            if c.is_zero() {
                continue;
            }
            for (out, r) in prod.iter_mut().zip(red) {
                if !r.is_zero() {
                    *out += c * r;
                }
            }
        }
        prod
    }
}

/// Shared handle to the field Q(ζ_n); fields are built once per process.
pub fn field(order: u32) -> Result<Arc<CyclotomicField>> {
    static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
    let fields = FIELDS.get_or_init(Default::default);
    let mut guard = fields.lock().expect("field cache poisoned");
    if let Some(f) = guard.get(&order) {
        return Ok(Arc::clone(f));
    }
    let f = Arc::new(CyclotomicField::new(order)?);
    guard.insert(order, Arc::clone(&f));
    Ok(f)
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// An element of Q(ζ_n).
#[derive(Clone)]
pub struct Cyclo {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl Cyclo {
    pub fn zero(order: u32) -> Self {
        let field = field(order).expect("order must be positive");
        let coeffs = vec![Rational::zero(); field.degree()];
        Cyclo { field, coeffs }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(n.into()))
    }

    pub fn from_rational(order: u32, q: Rational) -> Self {
        let mut c = Self::zero(order);
        c.coeffs[0] = q;
        c
    }

    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Result<Self> {
        let field = field(order)?;
        if coeffs.len() != field.degree() {
            return Err(Error::BadLength { expected: field.degree(), got: coeffs.len() });
        }
        Ok(Cyclo { field, coeffs })
    }

    /// ζ_n^m, with `m` taken modulo `n`.
    pub fn root_of_unity(order: u32, m: i64) -> Result<Self> {
        let field = field(order)?;
        let e = m.rem_euclid(order as i64) as usize;
        let mut p = vec![Rational::zero(); e + 1];
        p[e] = Rational::one();
        let coeffs = field.reduce_poly(p);
        Ok(Cyclo { field, coeffs })
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if this element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    fn check_order(&self, other: &Cyclo) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.order(), right: other.order() })
        }
    }

    pub fn try_add(&self, other: &Cyclo) -> Result<Cyclo> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Cyclo { field: Arc::clone(&self.field), coeffs })
    }

    pub fn try_sub(&self, other: &Cyclo) -> Result<Cyclo> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Cyclo { field: Arc::clone(&self.field), coeffs })
    }

    pub fn try_mul(&self, other: &Cyclo) -> Result<Cyclo> {
        self.check_order(other)?;
        let coeffs = self.field.mul_coeffs(&self.coeffs, &other.coeffs);
        Ok(Cyclo { field: Arc::clone(&self.field), coeffs })
    }

    pub fn try_div(&self, other: &Cyclo) -> Result<Cyclo> {
        self.try_mul(&other.inverse()?)
    }

    pub fn scale(&self, q: &Rational) -> Cyclo {
        Cyclo { field: Arc::clone(&self.field), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_n.
    pub fn inverse(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Cyclo::from_rational(self.order(), q.recip()));
        }
        // Invariant: s * a ≡ r (mod Φ_n) for the running pairs (r, s).
        let mut r0 = poly::trim(self.field.modulus.clone());
        let mut r1 = poly::trim(self.coeffs.clone());
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while r1.len() > 1 {
            let (q, r) = poly::divrem(&r0, &r1);
            let s2 = poly::sub(&s0, &poly::mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant since Φ_n is irreducible.
        let c = r1[0].recip();
        let inv: Vec<Rational> = s1.iter().map(|x| x * &c).collect();
        let coeffs = self.field.reduce_poly(inv);
        Ok(Cyclo { field: Arc::clone(&self.field), coeffs })
    }

    pub fn pow(&self, mut e: i64) -> Result<Cyclo> {
        let mut base = if e < 0 {
            e = -e;
            self.inverse()?
        } else {
            self.clone()
        };
        let mut acc = Cyclo::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Image under Q(ζ_n) → Q(ζ_N), ζ_n ↦ ζ_N^{N/n}.
    pub fn embed(&self, to: u32) -> Result<Cyclo> {
        let from = self.order();
        if to == 0 || !to.is_multiple_of(from) {
            return Err(Error::NotDivisible { from, to });
        }
        if to == from {
            return Ok(self.clone());
        }
        let target = field(to)?;
        let step = (to / from) as usize;
        let mut p = vec![Rational::zero(); step * (self.coeffs.len() - 1) + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            p[k * step] = c.clone();
        }
        let coeffs = target.reduce_poly(p);
        Ok(Cyclo { field: target, coeffs })
    }

    /// Coefficient strings such as `"3/2"`, lowest power first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_strings(order: u32, coeffs: &[String]) -> Result<Cyclo> {
        let parsed = coeffs
            .iter()
            .map(|s| s.parse::<Rational>().map_err(|_| Error::Parse(format!("bad rational `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Cyclo::from_coeffs(order, parsed)
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.order() == other.order() {
            return self.coeffs == other.coeffs;
        }
        let common = lcm(self.order(), other.order());
        match (self.embed(common), other.embed(common)) {
            (Ok(a), Ok(b)) => a.coeffs == b.coeffs,
            _ => false,
        }
    }
}

impl Eq for Cyclo {}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Cyclo> for &Cyclo {
            type Output = Cyclo;
            /// Panics when the operands live in different fields.
            fn $method(self, rhs: &Cyclo) -> Cyclo {
                self.$checked(rhs).expect("cyclotomic operands must share a field")
            }
        }
        impl $trait<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { field: Arc::clone(&self.field), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl fmt::Display for Cyclo {
    /// Renders in the parser's syntax, with `z` for ζ_n.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mon = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if mon.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mon)?;
            } else if mag.is_integer() {
                write!(f, "{mag}*{mon}")?;
            } else {
                write!(f, "({mag})*{mon}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]({})", self.order(), self)
    }
}

/// Dense polynomials over Q, lowest degree first, trimmed of leading zeros.
mod poly {
    use super::Rational;
    use num_traits::Zero;

    pub fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
                match b.get(i) {
                    Some(y) => x - y,
                    None => x,
                }
            })
            .collect();
        trim(out)
    }

    pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    pub fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut rem = a.to_vec();
        if a.len() < b.len() {
            return (Vec::new(), trim(rem));
        }
        let lead = b.last().expect("nonzero divisor").recip();
        let mut quot = vec![Rational::zero(); a.len() - b.len() + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + b.len() - 1] * &lead;
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                rem[k + j] -= &c * bj;
            }
            quot[k] = c;
        }
        rem.truncate(b.len() - 1);
        (trim(quot), trim(rem))
    }
}
