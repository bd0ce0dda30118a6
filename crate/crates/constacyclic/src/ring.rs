//! Exact arithmetic in finite chain rings.
//!
//! Two families are supported, exactly the ones determined up to isomorphism
//! by their invariants:
//!
//! * Galois rings GR(p^s, r), with uniformizer pi = p and nilpotency s;
//! * truncated power series GF(p^r)[u]/<u^l>, with uniformizer pi = u.

use std::fmt;
use std::sync::Arc;

use crate::arith::{as_prime_power, pow_u128};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteFieldSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    GaloisRing,
    TruncatedPowerSeries,
}

/// One concrete finite chain ring.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainRingSpec {
    family: Family,
    p: u64,
    r: usize,
    s: u32,
    ell: u32,
    /// p^s, the characteristic.
    char_mod: u64,
    /// Galois family only: monic basic irreducible of degree r over Z_{p^s}.
    modulus: Vec<u64>,
    residue_field: Arc<FiniteFieldSpec>,
}

impl ChainRingSpec {
    /// GR(p^s, r) given q = p^s. The modulus is the coefficientwise lift of
    /// the residue field's smallest-lexicographic irreducible.
    pub fn galois(q: u64, r: usize) -> Result<Arc<Self>> {
        let (p, s) = as_prime_power(q)
            .ok_or_else(|| Error::Parse(format!("{q} is not a prime power")))?;
        let field = FiniteFieldSpec::new(p, r);
        let modulus = field.modulus().to_vec();
        Ok(Arc::new(ChainRingSpec {
            family: Family::GaloisRing,
            p,
            r,
            s,
            ell: s,
            char_mod: q,
            modulus,
            residue_field: field,
        }))
    }

    /// GR(p^s, r) with a caller-supplied monic modulus over Z_{p^s}.
    pub fn galois_with_modulus(q: u64, modulus: Vec<u64>) -> Result<Arc<Self>> {
        let (p, s) = as_prime_power(q)
            .ok_or_else(|| Error::Parse(format!("{q} is not a prime power")))?;
        let r = modulus.len() - 1;
        if modulus[r] != 1 || modulus.iter().any(|&c| c >= q) {
            return Err(Error::Precondition(
                "modulus must be monic with coefficients in [0, p^s)".into(),
            ));
        }
        let reduced: Vec<u64> = modulus.iter().map(|&c| c % p).collect();
        let field = FiniteFieldSpec::with_modulus(p, reduced)?;
        Ok(Arc::new(ChainRingSpec {
            family: Family::GaloisRing,
            p,
            r,
            s,
            ell: s,
            char_mod: q,
            modulus,
            residue_field: field,
        }))
    }

    /// GF(q)[u]/<u^l> given q = p^r.
    pub fn truncated(q: u64, ell: u32) -> Result<Arc<Self>> {
        let (p, r) = as_prime_power(q)
            .ok_or_else(|| Error::Parse(format!("{q} is not a prime power")))?;
        if ell < 1 {
            return Err(Error::Precondition("nilpotency index must be >= 1".into()));
        }
        let field = FiniteFieldSpec::new(p, r as usize);
        Ok(Arc::new(ChainRingSpec {
            family: Family::TruncatedPowerSeries,
            p,
            r: r as usize,
            s: 1,
            ell,
            char_mod: p,
            modulus: Vec::new(),
            residue_field: field,
        }))
    }

    /// Parses `GR(q,r)` or `FPS(q,l)`.
    pub fn parse(text: &str) -> Result<Arc<Self>> {
        let text = text.trim();
        let (name, rest) = text
            .split_once('(')
            .ok_or_else(|| Error::Parse(format!("bad ring spec `{text}`")))?;
        let args = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("bad ring spec `{text}`")))?;
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("bad ring spec `{text}`")));
        }
        let a: u64 = parts[0].parse().map_err(|_| Error::Parse(format!("bad number `{}`", parts[0])))?;
        let b: u64 = parts[1].parse().map_err(|_| Error::Parse(format!("bad number `{}`", parts[1])))?;
        match name.trim() {
            "GR" => Self::galois(a, b as usize),
            "FPS" => Self::truncated(a, b as u32),
            other => Err(Error::Parse(format!("unknown ring family `{other}`"))),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn residue_char(&self) -> u64 {
        self.p
    }

    pub fn residue_degree(&self) -> usize {
        self.r
    }

    /// char R = p^s.
    pub fn characteristic(&self) -> u64 {
        self.char_mod
    }

    pub fn char_exponent(&self) -> u32 {
        self.s
    }

    /// Nilpotency index of the radical.
    pub fn nilpotency(&self) -> u32 {
        self.ell
    }

    /// The invariant k with pi^k = p*u: 1 for Galois rings, l for series rings
    /// (there p = 0, matching l = k in the s = 1 case).
    pub fn eisenstein_k(&self) -> u32 {
        match self.family {
            Family::GaloisRing => 1,
            Family::TruncatedPowerSeries => self.ell,
        }
    }

    pub fn residue_field(&self) -> &Arc<FiniteFieldSpec> {
        &self.residue_field
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// |R| = p^(r*l).
    pub fn size(&self) -> u128 {
        pow_u128(self.p as u128, self.r as u32 * self.ell)
    }

    /// |R^x| = p^(r(l-1)) * (p^r - 1).
    pub fn unit_count(&self) -> u128 {
        let q = pow_u128(self.p as u128, self.r as u32);
        pow_u128(q, self.ell - 1) * (q - 1)
    }

    /// Canonical representatives of R / pi^k, in a fixed counter order.
    /// With k = l this enumerates the whole ring.
    pub fn residues_mod_pi_pow(self: &Arc<Self>, k: u32) -> Vec<RingElement> {
        assert!(k <= self.ell);
        let spec = Arc::clone(self);
        match self.family {
            Family::GaloisRing => {
                let m = pow_u128(self.p as u128, k);
                let total = pow_u128(m, self.r as u32);
                (0..total)
                    .map(|idx| {
                        let mut coeffs = Vec::with_capacity(spec.r);
                        let mut t = idx;
                        for _ in 0..spec.r {
                            coeffs.push((t % m) as u64);
                            t /= m;
                        }
                        RingElement { spec: Arc::clone(&spec), repr: Repr::Galois(coeffs) }
                    })
                    .collect()
            }
            Family::TruncatedPowerSeries => {
                let field = Arc::clone(&self.residue_field);
                let q = field.order();
                let total = pow_u128(q, k);
                (0..total)
                    .map(|idx| {
                        let mut coeffs = Vec::with_capacity(spec.ell as usize);
                        let mut t = idx;
                        for _ in 0..k {
                            let mut digits = Vec::with_capacity(field.degree());
                            let mut d = t % q;
                            t /= q;
                            for _ in 0..field.degree() {
                                digits.push((d % spec.p as u128) as u64);
                                d /= spec.p as u128;
                            }
                            coeffs.push(FieldElement::new(&field, digits));
                        }
                        for _ in k..spec.ell {
                            coeffs.push(FieldElement::zero(&field));
                        }
                        RingElement { spec: Arc::clone(&spec), repr: Repr::Series(coeffs) }
                    })
                    .collect()
            }
        }
    }

    pub fn elements(self: &Arc<Self>) -> Vec<RingElement> {
        self.residues_mod_pi_pow(self.ell)
    }
}

impl fmt::Display for ChainRingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::GaloisRing => write!(f, "GR({},{})", self.char_mod, self.r),
            Family::TruncatedPowerSeries => {
                write!(f, "FPS({},{})", pow_u128(self.p as u128, self.r as u32), self.ell)
            }
        }
    }
}

#[derive(Clone, PartialEq)]
enum Repr {
    /// Length r, entries in [0, p^s).
    Galois(Vec<u64>),
    /// Length l over GF(p^r).
    Series(Vec<FieldElement>),
}

/// An element of a finite chain ring, in canonical form.
#[derive(Clone, PartialEq)]
pub struct RingElement {
    spec: Arc<ChainRingSpec>,
    repr: Repr,
}

impl RingElement {
    pub fn zero(spec: &Arc<ChainRingSpec>) -> Self {
        let repr = match spec.family {
            Family::GaloisRing => Repr::Galois(vec![0; spec.r]),
            Family::TruncatedPowerSeries => {
                Repr::Series(vec![FieldElement::zero(&spec.residue_field); spec.ell as usize])
            }
        };
        RingElement { spec: Arc::clone(spec), repr }
    }

    pub fn one(spec: &Arc<ChainRingSpec>) -> Self {
        Self::from_int(spec, 1)
    }

    /// Image of the integer k under Z -> R.
    pub fn from_int(spec: &Arc<ChainRingSpec>, k: i64) -> Self {
        let mut e = Self::zero(spec);
        match &mut e.repr {
            Repr::Galois(c) => c[0] = k.rem_euclid(spec.char_mod as i64) as u64,
            Repr::Series(c) => c[0] = FieldElement::from_int(&spec.residue_field, k),
        }
        e
    }

    /// Galois family: element from its r residues mod p^s, ascending.
    pub fn from_residues(spec: &Arc<ChainRingSpec>, mut coeffs: Vec<u64>) -> Result<Self> {
        if spec.family != Family::GaloisRing {
            return Err(Error::Precondition("from_residues needs a Galois-ring spec".into()));
        }
        coeffs.resize(spec.r, 0);
        for c in &mut coeffs {
            *c %= spec.char_mod;
        }
        Ok(RingElement { spec: Arc::clone(spec), repr: Repr::Galois(coeffs) })
    }

    /// Series family: element from its l field coefficients, ascending in u.
    pub fn from_series(spec: &Arc<ChainRingSpec>, mut coeffs: Vec<FieldElement>) -> Result<Self> {
        if spec.family != Family::TruncatedPowerSeries {
            return Err(Error::Precondition("from_series needs a series-ring spec".into()));
        }
        coeffs.resize(spec.ell as usize, FieldElement::zero(&spec.residue_field));
        Ok(RingElement { spec: Arc::clone(spec), repr: Repr::Series(coeffs) })
    }

    /// The designated uniformizer: p for Galois rings, u for series rings.
    pub fn uniformizer(spec: &Arc<ChainRingSpec>) -> Self {
        match spec.family {
            Family::GaloisRing => Self::from_int(spec, spec.p as i64),
            Family::TruncatedPowerSeries => {
                let mut e = Self::zero(spec);
                if let Repr::Series(c) = &mut e.repr {
                    if spec.ell >= 2 {
                        c[1] = FieldElement::one(&spec.residue_field);
                    }
                    // l = 1: the radical is zero and so is u
                }
                e
            }
        }
    }

    pub fn spec(&self) -> &Arc<ChainRingSpec> {
        &self.spec
    }

    /// Canonical coefficient list: r residues for Galois rings, l field
    /// coefficient vectors (flattened over GF(p)) for series rings.
    pub fn canonical_coeffs(&self) -> Vec<Vec<u64>> {
        match &self.repr {
            Repr::Galois(c) => c.iter().map(|&x| vec![x]).collect(),
            Repr::Series(c) => c.iter().map(|x| x.coeffs().to_vec()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Galois(c) => c.iter().all(|&x| x == 0),
            Repr::Series(c) => c.iter().all(|x| x.is_zero()),
        }
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one(&self.spec)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch(self.spec.to_string(), other.spec.to_string()))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other).expect("ring mismatch");
        let repr = match (&self.repr, &other.repr) {
            (Repr::Galois(a), Repr::Galois(b)) => Repr::Galois(
                a.iter().zip(b).map(|(&x, &y)| (x + y) % self.spec.char_mod).collect(),
            ),
            (Repr::Series(a), Repr::Series(b)) => {
                Repr::Series(a.iter().zip(b).map(|(x, y)| x.add(y)).collect())
            }
            _ => unreachable!("same spec implies same representation"),
        };
        RingElement { spec: Arc::clone(&self.spec), repr }
    }

    pub fn neg(&self) -> Self {
        let repr = match &self.repr {
            Repr::Galois(a) => {
                let m = self.spec.char_mod;
                Repr::Galois(a.iter().map(|&x| (m - x) % m).collect())
            }
            Repr::Series(a) => Repr::Series(a.iter().map(|x| x.neg()).collect()),
        };
        RingElement { spec: Arc::clone(&self.spec), repr }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other).expect("ring mismatch");
        let repr = match (&self.repr, &other.repr) {
            (Repr::Galois(a), Repr::Galois(b)) => {
                let m = self.spec.char_mod as u128;
                let mut prod = vec![0u64; 2 * self.spec.r];
                for (i, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in b.iter().enumerate() {
                        prod[i + j] =
                            ((prod[i + j] as u128 + x as u128 * y as u128) % m) as u64;
                    }
                }
                // reduce by the monic degree-r modulus
                let md = &self.spec.modulus;
                for i in (self.spec.r..prod.len()).rev() {
                    let c = prod[i];
                    if c == 0 {
                        continue;
                    }
                    prod[i] = 0;
                    for (j, &mj) in md.iter().enumerate().take(self.spec.r) {
                        let idx = i - self.spec.r + j;
                        let t = c as u128 * mj as u128 % m;
                        prod[idx] = ((prod[idx] as u128 + m - t) % m) as u64;
                    }
                }
                prod.truncate(self.spec.r);
                Repr::Galois(prod)
            }
            (Repr::Series(a), Repr::Series(b)) => {
                let field = &self.spec.residue_field;
                let l = self.spec.ell as usize;
                let mut prod = vec![FieldElement::zero(field); l];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if i + j < l {
                            prod[i + j] = prod[i + j].add(&x.mul(y));
                        }
                    }
                }
                Repr::Series(prod)
            }
            _ => unreachable!("same spec implies same representation"),
        };
        RingElement { spec: Arc::clone(&self.spec), repr }
    }

    pub fn pow(&self, mut e: u128) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.spec);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Largest v with self in R*pi^v; l for zero.
    pub fn valuation(&self) -> u32 {
        match &self.repr {
            Repr::Galois(c) => {
                let mut v = self.spec.s;
                for &x in c {
                    if x == 0 {
                        continue;
                    }
                    let mut t = x;
                    let mut k = 0;
                    while t % self.spec.p == 0 {
                        t /= self.spec.p;
                        k += 1;
                    }
                    v = v.min(k);
                }
                v
            }
            Repr::Series(c) => c
                .iter()
                .position(|x| !x.is_zero())
                .map(|i| i as u32)
                .unwrap_or(self.spec.ell),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == 0
    }

    /// Inverse of a unit, by Newton iteration from the residue-field inverse.
    pub fn invert_unit(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let mut x = Self::lift(&self.residue().inv()?, &self.spec)?;
        let two = Self::from_int(&self.spec, 2);
        let mut prec = 1u32;
        while prec < self.spec.ell {
            x = x.mul(&two.sub(&self.mul(&x)));
            prec *= 2;
        }
        debug_assert!(self.mul(&x).is_one());
        Ok(x)
    }

    /// The canonical projection R -> F = R/J(R).
    pub fn residue(&self) -> FieldElement {
        let field = &self.spec.residue_field;
        match &self.repr {
            Repr::Galois(c) => {
                FieldElement::new(field, c.iter().map(|&x| x % self.spec.p).collect())
            }
            Repr::Series(c) => c[0].clone(),
        }
    }

    /// Naive coefficientwise lift F -> R; a right inverse of `residue`.
    pub fn lift(x: &FieldElement, spec: &Arc<ChainRingSpec>) -> Result<Self> {
        if x.field() != spec.residue_field() {
            return Err(Error::SpecMismatch(
                format!("GF({}^{})", x.field().characteristic(), x.field().degree()),
                spec.to_string(),
            ));
        }
        match spec.family {
            Family::GaloisRing => Self::from_residues(spec, x.coeffs().to_vec()),
            Family::TruncatedPowerSeries => Self::from_series(spec, vec![x.clone()]),
        }
    }

    /// Multiplies by pi^v.
    pub fn mul_pi_pow(&self, v: u32) -> Self {
        let mut out = self.clone();
        match &mut out.repr {
            Repr::Galois(c) => {
                let m = self.spec.char_mod;
                let f = pow_u128(self.spec.p as u128, v) % m as u128;
                for x in c.iter_mut() {
                    *x = (*x as u128 * f % m as u128) as u64;
                }
            }
            Repr::Series(c) => {
                let field = &self.spec.residue_field;
                let l = c.len();
                for i in (0..l).rev() {
                    c[i] = if i >= v as usize {
                        c[i - v as usize].clone()
                    } else {
                        FieldElement::zero(field)
                    };
                }
            }
        }
        out
    }

    /// Exact division by pi^v: the canonical b with pi^v * b = self.
    /// Requires valuation(self) >= v.
    pub fn div_pi_pow(&self, v: u32) -> Result<Self> {
        if self.valuation() < v {
            return Err(Error::Precondition(format!(
                "cannot divide {self} by pi^{v}: valuation {} < {v}",
                self.valuation()
            )));
        }
        let mut out = self.clone();
        match &mut out.repr {
            Repr::Galois(c) => {
                let f = pow_u128(self.spec.p as u128, v) as u64;
                for x in c.iter_mut() {
                    *x /= f;
                }
            }
            Repr::Series(c) => {
                let field = &self.spec.residue_field;
                let l = c.len();
                for i in 0..l {
                    c[i] = if i + (v as usize) < l {
                        c[i + v as usize].clone()
                    } else {
                        FieldElement::zero(field)
                    };
                }
            }
        }
        Ok(out)
    }

    /// Least t >= 1 with self^t = 1, by direct power iteration.
    pub fn unit_order(&self) -> Result<u128> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let cap = self.spec.unit_count();
        let mut x = self.clone();
        let mut t: u128 = 1;
        while !x.is_one() {
            x = x.mul(self);
            t += 1;
            assert!(t <= cap, "unit order exceeds |R^x|");
        }
        Ok(t)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Galois(c) => {
                if self.spec.r == 1 {
                    write!(f, "{}", c[0])
                } else {
                    write!(f, "[{}]", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                }
            }
            Repr::Series(c) => {
                write!(f, "[{}]", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            }
        }
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z25() -> Arc<ChainRingSpec> {
        ChainRingSpec::galois(25, 1).unwrap()
    }

    #[test]
    fn z25_arithmetic() {
        let r = z25();
        let a = RingElement::from_int(&r, 18);
        let b = RingElement::from_int(&r, 9);
        assert_eq!(a.add(&b), RingElement::from_int(&r, 2));
        let four = RingElement::from_int(&r, 4);
        let nineteen = RingElement::from_int(&r, 19);
        assert!(four.mul(&nineteen).is_one());
        assert_eq!(a.add(&RingElement::zero(&r)), a);
    }

    #[test]
    fn z25_units_and_valuation() {
        let r = z25();
        assert!(RingElement::from_int(&r, 4).is_unit());
        assert!(!RingElement::from_int(&r, 5).is_unit());
        assert!(!RingElement::zero(&r).is_unit());
        assert_eq!(RingElement::from_int(&r, 10).valuation(), 1);
        assert_eq!(RingElement::zero(&r).valuation(), 2);
        assert_eq!(RingElement::from_int(&r, 4).valuation(), 0);
        assert_eq!(RingElement::from_int(&r, 4).invert_unit().unwrap(), RingElement::from_int(&r, 19));
        assert!(RingElement::one(&r).invert_unit().unwrap().is_one());
    }

    #[test]
    fn residue_lift_round_trip() {
        let r = z25();
        let f5 = r.residue_field().clone();
        let four = FieldElement::from_int(&f5, 4);
        assert_eq!(RingElement::from_int(&r, 19).residue(), four);
        let lifted = RingElement::lift(&four, &r).unwrap();
        assert_eq!(lifted, RingElement::from_int(&r, 4));
        assert_eq!(lifted.residue(), four);
        assert!(RingElement::from_int(&r, 5).residue().is_zero());
    }

    #[test]
    fn uniformizer_nilpotency() {
        for spec in [
            ChainRingSpec::galois(25, 1).unwrap(),
            ChainRingSpec::galois(8, 1).unwrap(),
            ChainRingSpec::galois(9, 2).unwrap(),
            ChainRingSpec::truncated(4, 3).unwrap(),
            ChainRingSpec::truncated(5, 2).unwrap(),
        ] {
            let pi = RingElement::uniformizer(&spec);
            let l = spec.nilpotency();
            assert!(pi.pow(l as u128).is_zero(), "{spec}");
            assert!(!pi.pow((l - 1) as u128).is_zero() || l == 1, "{spec}");
            if l > 1 {
                assert!(!pi.pow((l - 1) as u128).is_zero(), "{spec}");
            }
        }
    }

    #[test]
    fn eisenstein_relation_galois() {
        // pi = p exactly, so pi^1 = p * 1
        let r = ChainRingSpec::galois(9, 2).unwrap();
        assert_eq!(r.eisenstein_k(), 1);
        let pi = RingElement::uniformizer(&r);
        assert_eq!(pi, RingElement::from_int(&r, 3));
    }

    #[test]
    fn series_family_arith() {
        let r = ChainRingSpec::truncated(4, 2).unwrap();
        assert_eq!(r.size(), 16);
        let pi = RingElement::uniformizer(&r);
        assert_eq!(pi.valuation(), 1);
        assert!(pi.mul(&pi).is_zero());
        // units: valuation 0, count q^(l-1)(q-1) = 12
        let units = r.elements().into_iter().filter(|e| e.is_unit()).count();
        assert_eq!(units as u128, r.unit_count());
        for e in r.elements() {
            if e.is_unit() {
                assert!(e.mul(&e.invert_unit().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn div_mul_pi_round_trip() {
        let r = ChainRingSpec::galois(27, 1).unwrap();
        let a = RingElement::from_int(&r, 18); // 2 * 3^2
        assert_eq!(a.valuation(), 2);
        let b = a.div_pi_pow(2).unwrap();
        assert_eq!(b, RingElement::from_int(&r, 2));
        assert_eq!(b.mul_pi_pow(2), a);
        assert!(RingElement::from_int(&r, 3).div_pi_pow(2).is_err());
    }

    #[test]
    fn unit_orders() {
        let r = z25();
        let four = RingElement::from_int(&r, 4);
        assert_eq!(four.unit_order().unwrap(), 10);
        assert_eq!(RingElement::from_int(&r, 24).unit_order().unwrap(), 2);
        assert_eq!(RingElement::one(&r).unit_order().unwrap(), 1);
        assert!(RingElement::from_int(&r, 5).unit_order().is_err());
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(ChainRingSpec::parse("GR(25,1)").unwrap().to_string(), "GR(25,1)");
        assert_eq!(ChainRingSpec::parse("FPS(4,1)").unwrap().to_string(), "FPS(4,1)");
        assert!(ChainRingSpec::parse("GR(12,1)").is_err());
        assert!(ChainRingSpec::parse("XX(4,1)").is_err());
    }
}
