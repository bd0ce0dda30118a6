//! Finite fields GF(p^r) with exact arithmetic and extension towers.
//!
//! Every field is represented over its prime subfield: GF(p^r) is
//! GF(p)[Y]/<f(Y)> for a monic irreducible f of degree r. The prime field
//! itself uses the modulus Y, so its elements are plain residues mod p.

use std::fmt;
use std::sync::Arc;

use crate::arith::{pow_u128, prime_factors};
use crate::error::{Error, Result};

/// Description of a finite field GF(p^degree).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteFieldSpec {
    p: u64,
    degree: usize,
    /// Monic irreducible over GF(p), ascending coefficients, length degree+1.
    modulus: Vec<u64>,
}

impl FiniteFieldSpec {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Arc<Self> {
        assert!(is_prime(p), "{p} is not prime");
        Arc::new(FiniteFieldSpec {
            p,
            degree: 1,
            modulus: vec![0, 1],
        })
    }

    /// GF(p^degree) with the smallest-lexicographic monic irreducible modulus.
    ///
    /// The search enumerates monic polynomials by their constant-first
    /// coefficient counter, so the result is deterministic across runs.
    pub fn new(p: u64, degree: usize) -> Arc<Self> {
        assert!(is_prime(p), "{p} is not prime");
        assert!(degree >= 1);
        if degree == 1 {
            return Self::prime(p);
        }
        let count = pow_u128(p as u128, degree as u32);
        for idx in 0..count {
            let mut f = Vec::with_capacity(degree + 1);
            let mut k = idx;
            for _ in 0..degree {
                f.push((k % p as u128) as u64);
                k /= p as u128;
            }
            f.push(1);
            if modp::is_irreducible(&f, p) {
                return Arc::new(FiniteFieldSpec { p, degree, modulus: f });
            }
        }
        unreachable!("an irreducible polynomial of degree {degree} exists over GF({p})");
    }

    /// GF(p^degree) with a caller-supplied monic irreducible modulus.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        let degree = modulus.len().checked_sub(1).unwrap_or(0);
        if degree == 0 || modulus[degree] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::Precondition("modulus must be monic with coefficients in [0, p)".into()));
        }
        if degree > 1 && !modp::is_irreducible(&modulus, p) {
            return Err(Error::Precondition("modulus is reducible over GF(p)".into()));
        }
        Ok(Arc::new(FiniteFieldSpec { p, degree, modulus }))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Number of field elements, p^degree.
    pub fn order(&self) -> u128 {
        pow_u128(self.p as u128, self.degree as u32)
    }

    /// All field elements, in canonical counter order (constant digit first).
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        let spec = Arc::clone(self);
        (0..self.order()).map(move |idx| {
            let mut coeffs = Vec::with_capacity(spec.degree);
            let mut k = idx;
            for _ in 0..spec.degree {
                coeffs.push((k % spec.p as u128) as u64);
                k /= spec.p as u128;
            }
            FieldElement { field: Arc::clone(&spec), coeffs }
        })
    }

    /// A fixed primitive element: the first element of the canonical
    /// enumeration whose multiplicative order is p^degree - 1.
    pub fn primitive_element(self: &Arc<Self>) -> FieldElement {
        let n = self.order() - 1;
        self.elements()
            .find(|x| !x.is_zero() && x.multiplicative_order() == n)
            .expect("the unit group of a finite field is cyclic")
    }
}

/// An element of a finite field, as a vector over the prime subfield.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Arc<FiniteFieldSpec>,
    /// Length = field.degree, entries in [0, p).
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn new(field: &Arc<FiniteFieldSpec>, mut coeffs: Vec<u64>) -> Self {
        coeffs.resize(field.degree, 0);
        for c in &mut coeffs {
            *c %= field.p;
        }
        FieldElement { field: Arc::clone(field), coeffs }
    }

    pub fn zero(field: &Arc<FiniteFieldSpec>) -> Self {
        FieldElement { field: Arc::clone(field), coeffs: vec![0; field.degree] }
    }

    pub fn one(field: &Arc<FiniteFieldSpec>) -> Self {
        Self::from_int(field, 1)
    }

    /// The image of the integer k under Z -> GF(p^r).
    pub fn from_int(field: &Arc<FiniteFieldSpec>, k: i64) -> Self {
        let p = field.p as i64;
        let c = k.rem_euclid(p) as u64;
        let mut coeffs = vec![0; field.degree];
        coeffs[0] = c;
        FieldElement { field: Arc::clone(field), coeffs }
    }

    /// The class of Y, i.e. the canonical generator of the field over GF(p).
    /// For the prime field this is zero (Y is the modulus).
    pub fn generator(field: &Arc<FiniteFieldSpec>) -> Self {
        let mut coeffs = vec![0; field.degree];
        if field.degree > 1 {
            coeffs[1] = 1;
        }
        FieldElement { field: Arc::clone(field), coeffs }
    }

    pub fn field(&self) -> &Arc<FiniteFieldSpec> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::SpecMismatch(
                format!("GF({}^{})", self.field.p, self.field.degree),
                format!("GF({}^{})", other.field.p, other.field.degree),
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other).expect("field mismatch");
        let p = self.field.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        FieldElement { field: Arc::clone(&self.field), coeffs }
    }

    pub fn neg(&self) -> Self {
        let p = self.field.p;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement { field: Arc::clone(&self.field), coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other).expect("field mismatch");
        let p = self.field.p;
        let prod = modp::mul(&self.coeffs, &other.coeffs, p);
        let (_, rem) = modp::divmod(&prod, &self.field.modulus, p);
        let mut coeffs = rem;
        coeffs.resize(self.field.degree, 0);
        FieldElement { field: Arc::clone(&self.field), coeffs }
    }

    pub fn pow(&self, mut e: u128) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotAUnit("0".into()));
        }
        Ok(self.pow(self.field.order() - 2))
    }

    /// Least t >= 1 with self^t = 1.
    pub fn multiplicative_order(&self) -> u128 {
        assert!(!self.is_zero(), "zero has no multiplicative order");
        let group = self.field.order() - 1;
        let mut ord = group;
        for q in prime_factors(group) {
            while ord % q == 0 && self.pow(ord / q).is_one() {
                ord /= q;
            }
        }
        debug_assert!(self.pow(ord).is_one());
        ord
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(
                f,
                "[{}]",
                self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
            )
        }
    }
}

/// A field homomorphism GF(p^r) -> GF(p^(r*d)) fixing the prime subfield.
#[derive(Debug, Clone)]
pub struct FieldEmbedding {
    from: Arc<FiniteFieldSpec>,
    to: Arc<FiniteFieldSpec>,
    /// Powers of the image of the small field's generator, length = from.degree.
    gen_powers: Vec<FieldElement>,
}

impl FieldEmbedding {
    pub fn identity(field: &Arc<FiniteFieldSpec>) -> Self {
        let gen = FieldElement::generator(field);
        let mut gen_powers = vec![FieldElement::one(field)];
        for i in 1..field.degree {
            gen_powers.push(gen_powers[i - 1].mul(&gen));
        }
        FieldEmbedding { from: Arc::clone(field), to: Arc::clone(field), gen_powers }
    }

    pub fn from_field(&self) -> &Arc<FiniteFieldSpec> {
        &self.from
    }

    pub fn to_field(&self) -> &Arc<FiniteFieldSpec> {
        &self.to
    }

    pub fn apply(&self, x: &FieldElement) -> FieldElement {
        assert_eq!(x.field, self.from, "embedding applied to a foreign element");
        let mut acc = FieldElement::zero(&self.to);
        for (c, pw) in x.coeffs.iter().zip(&self.gen_powers) {
            let term = FieldElement::from_int(&self.to, *c as i64).mul(pw);
            acc = acc.add(&term);
        }
        acc
    }

    /// Preimage of y, if y lies in the image subfield.
    pub fn retract(&self, y: &FieldElement) -> Option<FieldElement> {
        self.from
            .elements()
            .find(|x| &self.apply(x) == y)
    }
}

/// Builds GF(p^(r*d)) together with the embedding of `field` into it.
///
/// The embedding sends the small generator to the first root of the small
/// modulus found in the canonical subfield enumeration of the big field.
pub fn extension_field(field: &Arc<FiniteFieldSpec>, d: usize) -> (Arc<FiniteFieldSpec>, FieldEmbedding) {
    assert!(d >= 1);
    if d == 1 {
        return (Arc::clone(field), FieldEmbedding::identity(field));
    }
    let big = FiniteFieldSpec::new(field.p, field.degree * d);
    let gen_image = if field.degree == 1 {
        FieldElement::zero(&big)
    } else {
        find_subfield_root(field, &big)
    };
    let mut gen_powers = vec![FieldElement::one(&big)];
    for i in 1..field.degree {
        gen_powers.push(gen_powers[i - 1].mul(&gen_image));
    }
    let emb = FieldEmbedding { from: Arc::clone(field), to: Arc::clone(&big), gen_powers };
    (big, emb)
}

/// A root of `small.modulus` inside `big`. Roots live in the unique subfield
/// of order |small|, so only |small| - 1 candidates need testing.
fn find_subfield_root(small: &Arc<FiniteFieldSpec>, big: &Arc<FiniteFieldSpec>) -> FieldElement {
    let g = big.primitive_element();
    let sub_order = small.order() - 1;
    let step = (big.order() - 1) / sub_order;
    let h = g.pow(step);
    let mut x = FieldElement::one(big);
    for _ in 0..sub_order {
        if eval_modulus(small.modulus(), &x, big).is_zero() {
            return x;
        }
        x = x.mul(&h);
    }
    unreachable!("an irreducible of degree d over GF(p) splits in GF(p^(d*k))");
}

fn eval_modulus(modulus: &[u64], x: &FieldElement, big: &Arc<FiniteFieldSpec>) -> FieldElement {
    let mut acc = FieldElement::zero(big);
    for &c in modulus.iter().rev() {
        acc = acc.mul(x).add(&FieldElement::from_int(big, c as i64));
    }
    acc
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense polynomial arithmetic over GF(p) on raw coefficient vectors.
/// Only what the field constructors need; general polynomials live in `poly`.
mod modp {
    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
            }
        }
        trim(&mut out);
        out
    }

    pub fn divmod(a: &[u64], m: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        assert_eq!(*m.last().unwrap(), 1, "divisor must be monic");
        let mut rem: Vec<u64> = a.to_vec();
        trim(&mut rem);
        let dm = m.len() - 1;
        if rem.len() <= dm {
            return (Vec::new(), rem);
        }
        let mut quot = vec![0u64; rem.len() - dm];
        for i in (dm..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            quot[i - dm] = c;
            for (j, &mj) in m.iter().enumerate() {
                let t = (c as u128 * mj as u128) % p as u128;
                let idx = i - dm + j;
                rem[idx] = ((rem[idx] as u128 + p as u128 - t) % p as u128) as u64;
            }
        }
        trim(&mut rem);
        trim(&mut quot);
        (quot, rem)
    }

    fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = (x + p - y) % p;
        }
        trim(&mut out);
        out
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            // make b monic before dividing
            let lc = *b.last().unwrap();
            let inv = mod_inv(lc, p);
            let monic: Vec<u64> = b.iter().map(|&c| (c as u128 * inv as u128 % p as u128) as u64).collect();
            let (_, r) = divmod(&a, &monic, p);
            a = b;
            b = r;
        }
        a
    }

    fn mod_inv(a: u64, p: u64) -> u64 {
        // Fermat
        let mut acc: u128 = 1;
        let mut base = a as u128 % p as u128;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u128;
            }
            base = base * base % p as u128;
            e >>= 1;
        }
        acc as u64
    }

    /// X^(p^k) mod f, by k rounds of p-th powering.
    fn frobenius_power(f: &[u64], p: u64, k: usize) -> Vec<u64> {
        let mut x = vec![0, 1]; // X
        for _ in 0..k {
            x = pow_mod(&x, p as u128, f, p);
        }
        x
    }

    fn pow_mod(base: &[u64], mut e: u128, f: &[u64], p: u64) -> Vec<u64> {
        let mut base = base.to_vec();
        let mut acc = vec![1u64];
        while e > 0 {
            if e & 1 == 1 {
                let t = mul(&acc, &base, p);
                acc = divmod(&t, f, p).1;
            }
            let t = mul(&base, &base, p);
            base = divmod(&t, f, p).1;
            e >>= 1;
        }
        acc
    }

    /// Rabin's irreducibility test for monic f over GF(p).
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let r = f.len() - 1;
        if r == 0 {
            return false;
        }
        if r == 1 {
            return true;
        }
        let x = vec![0, 1];
        // X^(p^r) == X mod f
        if sub(&frobenius_power(f, p, r), &x, p) != Vec::<u64>::new() {
            return false;
        }
        for q in crate::arith::prime_factors(r as u128) {
            let h = frobenius_power(f, p, r / q as usize);
            let g = gcd(f, &sub(&h, &x, p), p);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }
}
