//! Dense polynomials over chain rings and fields, quotient-ring arithmetic
//! mod X^n - lambda, Bezout certificates, and Hensel lifting.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteFieldSpec};
use crate::ring::{ChainRingSpec, RingElement};

/// Coefficient ring abstraction: just enough for dense polynomial arithmetic.
pub trait Scalar: Clone + PartialEq + fmt::Display + fmt::Debug {
    type Ctx: Clone + PartialEq + fmt::Debug;
    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, k: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn inv(&self) -> Result<Self>;
}

impl Scalar for FieldElement {
    type Ctx = Arc<FiniteFieldSpec>;
    fn ctx(&self) -> Self::Ctx {
        Arc::clone(self.field())
    }
    fn zero(ctx: &Self::Ctx) -> Self {
        FieldElement::zero(ctx)
    }
    fn one(ctx: &Self::Ctx) -> Self {
        FieldElement::one(ctx)
    }
    fn from_int(ctx: &Self::Ctx, k: i64) -> Self {
        FieldElement::from_int(ctx, k)
    }
    fn add(&self, rhs: &Self) -> Self {
        FieldElement::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        FieldElement::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        FieldElement::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        FieldElement::mul(self, rhs)
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn is_one(&self) -> bool {
        FieldElement::is_one(self)
    }
    fn inv(&self) -> Result<Self> {
        FieldElement::inv(self)
    }
}

impl Scalar for RingElement {
    type Ctx = Arc<ChainRingSpec>;
    fn ctx(&self) -> Self::Ctx {
        Arc::clone(self.spec())
    }
    fn zero(ctx: &Self::Ctx) -> Self {
        RingElement::zero(ctx)
    }
    fn one(ctx: &Self::Ctx) -> Self {
        RingElement::one(ctx)
    }
    fn from_int(ctx: &Self::Ctx, k: i64) -> Self {
        RingElement::from_int(ctx, k)
    }
    fn add(&self, rhs: &Self) -> Self {
        RingElement::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        RingElement::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        RingElement::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RingElement::mul(self, rhs)
    }
    fn is_zero(&self) -> bool {
        RingElement::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RingElement::is_one(self)
    }
    fn inv(&self) -> Result<Self> {
        self.invert_unit()
    }
}

pub type RingPoly = Poly<RingElement>;
pub type FieldPoly = Poly<FieldElement>;

/// Dense polynomial, ascending coefficients, trailing zeros trimmed.
/// The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq)]
pub struct Poly<S: Scalar> {
    ctx: S::Ctx,
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(ctx: S::Ctx, mut coeffs: Vec<S>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { ctx, coeffs }
    }

    pub fn zero(ctx: S::Ctx) -> Self {
        Poly { ctx, coeffs: Vec::new() }
    }

    pub fn one(ctx: S::Ctx) -> Self {
        let one = S::one(&ctx);
        Poly { ctx, coeffs: vec![one] }
    }

    pub fn constant(c: S) -> Self {
        Self::new(c.ctx(), vec![c])
    }

    pub fn from_ints(ctx: S::Ctx, ints: &[i64]) -> Self {
        let coeffs = ints.iter().map(|&k| S::from_int(&ctx, k)).collect();
        Self::new(ctx, coeffs)
    }

    /// X^n - lambda.
    pub fn x_pow_minus(ctx: S::Ctx, n: usize, lambda: &S) -> Self {
        let mut coeffs = vec![S::zero(&ctx); n + 1];
        coeffs[0] = lambda.neg();
        coeffs[n] = S::one(&ctx);
        Self::new(ctx, coeffs)
    }

    pub fn ctx(&self) -> &S::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(|| S::zero(&self.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        Self::new(self.ctx.clone(), coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.ctx.clone(), self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ctx.clone());
        }
        let mut out = vec![S::zero(&self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(self.ctx.clone(), out)
    }

    pub fn mul_scalar(&self, c: &S) -> Self {
        Self::new(self.ctx.clone(), self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiplies by X^k.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![S::zero(&self.ctx); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(self.ctx.clone(), coeffs)
    }

    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Exact division with remainder by a monic divisor: self = q*g + r,
    /// deg r < deg g.
    pub fn divmod_monic(&self, g: &Self) -> Result<(Self, Self)> {
        if !g.is_monic() {
            return Err(Error::Precondition("divisor must be monic".into()));
        }
        let dg = g.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return Ok((Self::zero(self.ctx.clone()), self.clone()));
        }
        let mut quot = vec![S::zero(&self.ctx); rem.len() - dg];
        for i in (dg..rem.len()).rev() {
            let c = rem[i].clone();
            if c.is_zero() {
                continue;
            }
            quot[i - dg] = c.clone();
            for (j, gj) in g.coeffs.iter().enumerate() {
                rem[i - dg + j] = rem[i - dg + j].sub(&c.mul(gj));
            }
        }
        Ok((
            Self::new(self.ctx.clone(), quot),
            Self::new(self.ctx.clone(), rem),
        ))
    }

    /// Checks g | self with zero remainder.
    pub fn divides_exactly(&self, g: &Self) -> bool {
        match self.divmod_monic(g) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "X")?,
                1 => write!(f, "{c}*X")?,
                _ if c.is_one() => write!(f, "X^{i}")?,
                _ => write!(f, "{c}*X^{i}")?,
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Extended Euclid over a field: returns (gcd, a, b) with a*f + b*g = gcd,
/// gcd monic (or zero when both inputs are zero).
pub fn ext_euclid(f: &Poly<FieldElement>, g: &Poly<FieldElement>) -> Result<(Poly<FieldElement>, Poly<FieldElement>, Poly<FieldElement>)> {
    let ctx = f.ctx().clone();
    let mut r0 = f.clone();
    let mut r1 = g.clone();
    let mut a0 = Poly::one(ctx.clone());
    let mut a1 = Poly::zero(ctx.clone());
    let mut b0 = Poly::zero(ctx.clone());
    let mut b1 = Poly::one(ctx.clone());
    while !r1.is_zero() {
        // make r1 monic for the division step
        let lc = r1.leading().unwrap().clone();
        let lc_inv = lc.inv()?;
        let r1m = r1.mul_scalar(&lc_inv);
        let (q, rem) = r0.divmod_monic(&r1m)?;
        let q = q.mul_scalar(&lc_inv);
        let new_a = a0.sub(&q.mul(&a1));
        let new_b = b0.sub(&q.mul(&b1));
        r0 = r1;
        r1 = rem;
        a0 = a1;
        a1 = new_a;
        b0 = b1;
        b1 = new_b;
    }
    if r0.is_zero() {
        return Ok((r0, a0, b0));
    }
    let lc_inv = r0.leading().unwrap().inv()?;
    Ok((r0.mul_scalar(&lc_inv), a0.mul_scalar(&lc_inv), b0.mul_scalar(&lc_inv)))
}

/// Bezout pair over a field for coprime f, g: a*f + b*g = 1.
pub fn field_bezout(f: &Poly<FieldElement>, g: &Poly<FieldElement>) -> Result<(Poly<FieldElement>, Poly<FieldElement>)> {
    let (d, a, b) = ext_euclid(f, g)?;
    if d.degree() != Some(0) {
        return Err(Error::NotCoprime);
    }
    Ok((a, b))
}

/// Coefficientwise projection R[X] -> F[X].
pub fn residue_poly(f: &Poly<RingElement>) -> Poly<FieldElement> {
    let field = Arc::clone(f.ctx().residue_field());
    Poly::new(field, f.coeffs().iter().map(|c| c.residue()).collect())
}

/// Coefficientwise naive lift F[X] -> R[X].
pub fn lift_poly(f: &Poly<FieldElement>, spec: &Arc<ChainRingSpec>) -> Result<Poly<RingElement>> {
    let coeffs: Result<Vec<RingElement>> = f
        .coeffs()
        .iter()
        .map(|c| RingElement::lift(c, spec))
        .collect();
    Ok(Poly::new(Arc::clone(spec), coeffs?))
}

/// Minimum pi-valuation over the coefficients; l for the zero polynomial.
pub fn poly_valuation(f: &Poly<RingElement>) -> u32 {
    f.coeffs()
        .iter()
        .map(|c| c.valuation())
        .min()
        .unwrap_or_else(|| f.ctx().nilpotency())
}

fn div_poly_pi_pow(f: &Poly<RingElement>, v: u32) -> Result<Poly<RingElement>> {
    let coeffs: Result<Vec<RingElement>> = f.coeffs().iter().map(|c| c.div_pi_pow(v)).collect();
    Ok(Poly::new(f.ctx().clone(), coeffs?))
}

fn mul_poly_pi_pow(f: &Poly<RingElement>, v: u32) -> Poly<RingElement> {
    Poly::new(f.ctx().clone(), f.coeffs().iter().map(|c| c.mul_pi_pow(v)).collect())
}

/// Bezout certificate over the chain ring: a*f + b*g = 1 exactly in R[X].
///
/// Requires the residues of f and g to be coprime over the residue field.
/// The field identity is lifted one pi-power at a time alongside Newton-style
/// corrections, so no division in R[X] is ever attempted.
pub fn bezout_coprime(f: &Poly<RingElement>, g: &Poly<RingElement>) -> Result<(Poly<RingElement>, Poly<RingElement>)> {
    let spec = f.ctx().clone();
    let ell = spec.nilpotency();
    // constant-unit degenerate cases
    if f.degree() == Some(0) && f.coeff(0).is_unit() {
        return Ok((Poly::constant(f.coeff(0).invert_unit()?), Poly::zero(spec)));
    }
    if g.degree() == Some(0) && g.coeff(0).is_unit() {
        return Ok((Poly::zero(spec), Poly::constant(g.coeff(0).invert_unit()?)));
    }
    let fbar = residue_poly(f);
    let gbar = residue_poly(g);
    let (abar, bbar) = field_bezout(&fbar, &gbar)?;
    // reduce mod the monic scaling of gbar so degrees stay small
    let gbar_monic = {
        let lc_inv = gbar.leading().ok_or(Error::NotCoprime)?.inv()?;
        gbar.mul_scalar(&lc_inv)
    };
    let mut a = lift_poly(&abar, &spec)?;
    let mut b = lift_poly(&bbar, &spec)?;
    let one = Poly::one(spec.clone());
    for j in 1..ell {
        let e = one.sub(&a.mul(f)).sub(&b.mul(g));
        if e.is_zero() {
            break;
        }
        debug_assert!(poly_valuation(&e) >= j);
        let c = residue_poly(&div_poly_pi_pow(&e, j)?);
        // solve da*fbar + db*gbar = c with deg da < deg gbar
        let ca = c.mul(&abar);
        let (q, sigma) = ca.divmod_monic(&gbar_monic)?;
        let lc_inv = gbar.leading().unwrap().inv()?;
        let tau = c.mul(&bbar).add(&q.mul_scalar(&lc_inv).mul(&fbar));
        a = a.add(&mul_poly_pi_pow(&lift_poly(&sigma, &spec)?, j));
        b = b.add(&mul_poly_pi_pow(&lift_poly(&tau, &spec)?, j));
    }
    let check = one.sub(&a.mul(f)).sub(&b.mul(g));
    if !check.is_zero() {
        return Err(Error::Precondition("Bezout lifting failed to converge".into()));
    }
    Ok((a, b))
}

/// Lifts a two-factor coprime factorization of the residue of `f` to R[X].
fn hensel_pair(f: &Poly<RingElement>, gbar: &Poly<FieldElement>, hbar: &Poly<FieldElement>) -> Result<(Poly<RingElement>, Poly<RingElement>)> {
    let spec = f.ctx().clone();
    let ell = spec.nilpotency();
    let (abar, bbar) = field_bezout(gbar, hbar)?;
    let mut g = lift_poly(gbar, &spec)?;
    let mut h = lift_poly(hbar, &spec)?;
    for j in 1..ell {
        let e = f.sub(&g.mul(&h));
        if e.is_zero() {
            break;
        }
        debug_assert!(poly_valuation(&e) >= j);
        let c = residue_poly(&div_poly_pi_pow(&e, j)?);
        // sigma*hbar + tau*gbar = c, deg sigma < deg gbar, keeps both monic
        let cb = c.mul(&bbar);
        let (q, sigma) = cb.divmod_monic(gbar)?;
        let tau = c.mul(&abar).add(&q.mul(hbar));
        g = g.add(&mul_poly_pi_pow(&lift_poly(&sigma, &spec)?, j));
        h = h.add(&mul_poly_pi_pow(&lift_poly(&tau, &spec)?, j));
    }
    if f != &g.mul(&h) {
        return Err(Error::Precondition("Hensel lifting failed to converge".into()));
    }
    Ok((g, h))
}

/// Hensel lifting of a multi-factor residue factorization.
///
/// `f` must be monic over R; the residue factors must be monic, pairwise
/// coprime over F, and multiply to the residue of f. The lifted factors are
/// monic, multiply exactly to f, reduce to the given factors, and are unique.
pub fn hensel_lift(f: &Poly<RingElement>, residue_factors: &[Poly<FieldElement>]) -> Result<Vec<Poly<RingElement>>> {
    if !f.is_monic() {
        return Err(Error::Precondition("hensel_lift needs a monic polynomial".into()));
    }
    if residue_factors.is_empty() {
        return Err(Error::Precondition("no residue factors given".into()));
    }
    for fac in residue_factors {
        if !fac.is_monic() {
            return Err(Error::Precondition("residue factors must be monic".into()));
        }
    }
    for (i, a) in residue_factors.iter().enumerate() {
        for b in &residue_factors[i + 1..] {
            let (d, _, _) = ext_euclid(a, b)?;
            if d.degree() != Some(0) {
                return Err(Error::NotCoprime);
            }
        }
    }
    let product = residue_factors
        .iter()
        .fold(Poly::one(residue_factors[0].ctx().clone()), |acc, x| acc.mul(x));
    if product != residue_poly(f) {
        return Err(Error::Precondition(
            "residue factors do not multiply to the residue of f".into(),
        ));
    }
    let mut out = Vec::with_capacity(residue_factors.len());
    let mut rest = f.clone();
    let mut rest_bar = product;
    for fac in &residue_factors[..residue_factors.len() - 1] {
        let (hbar, rem) = rest_bar.divmod_monic(fac)?;
        debug_assert!(rem.is_zero());
        let (g, h) = hensel_pair(&rest, fac, &hbar)?;
        out.push(g);
        rest = h;
        rest_bar = hbar;
    }
    out.push(rest);
    Ok(out)
}

/// Modulus descriptor for R[X]/<X^n - lambda>.
#[derive(Clone, PartialEq, Debug)]
pub struct QuotientCtx<S: Scalar> {
    base: S::Ctx,
    n: usize,
    lambda: S,
}

impl<S: Scalar> QuotientCtx<S> {
    pub fn new(base: S::Ctx, n: usize, lambda: S) -> Self {
        assert!(n >= 1);
        QuotientCtx { base, n, lambda }
    }

    pub fn base(&self) -> &S::Ctx {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &S {
        &self.lambda
    }

    pub fn modulus_poly(&self) -> Poly<S> {
        Poly::x_pow_minus(self.base.clone(), self.n, &self.lambda)
    }
}

/// An element of R[X]/<X^n - lambda>, represented by its degree < n member.
#[derive(Clone, PartialEq)]
pub struct QuotientElement<S: Scalar> {
    ctx: QuotientCtx<S>,
    rep: Poly<S>,
}

impl<S: Scalar> QuotientElement<S> {
    /// Reduces an arbitrary polynomial using X^n = lambda.
    pub fn new(ctx: QuotientCtx<S>, poly: Poly<S>) -> Self {
        let n = ctx.n;
        let mut coeffs = poly.coeffs().to_vec();
        let mut i = coeffs.len();
        while i > n {
            i -= 1;
            let c = std::mem::replace(&mut coeffs[i], S::zero(&ctx.base));
            if !c.is_zero() {
                coeffs[i - n] = coeffs[i - n].add(&c.mul(&ctx.lambda));
            }
        }
        let rep = Poly::new(ctx.base.clone(), coeffs);
        QuotientElement { ctx, rep }
    }

    pub fn zero(ctx: QuotientCtx<S>) -> Self {
        let rep = Poly::zero(ctx.base.clone());
        QuotientElement { ctx, rep }
    }

    pub fn one(ctx: QuotientCtx<S>) -> Self {
        let rep = Poly::one(ctx.base.clone());
        QuotientElement { ctx, rep }
    }

    pub fn from_word(ctx: QuotientCtx<S>, word: Vec<S>) -> Result<Self> {
        if word.len() != ctx.n {
            return Err(Error::Precondition(format!(
                "word length {} does not match n = {}",
                word.len(),
                ctx.n
            )));
        }
        Ok(Self::new(ctx.clone(), Poly::new(ctx.base.clone(), word)))
    }

    pub fn ctx(&self) -> &QuotientCtx<S> {
        &self.ctx
    }

    pub fn rep(&self) -> &Poly<S> {
        &self.rep
    }

    /// The word (a_0, ..., a_{n-1}).
    pub fn word(&self) -> Vec<S> {
        (0..self.ctx.n).map(|i| self.rep.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// Number of nonzero coefficients.
    pub fn hamming_weight(&self) -> usize {
        self.rep.coeffs().iter().filter(|c| !c.is_zero()).count()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::Precondition("quotient modulus mismatch".into()))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other).expect("modulus mismatch");
        QuotientElement { ctx: self.ctx.clone(), rep: self.rep.add(&other.rep) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same(other).expect("modulus mismatch");
        QuotientElement { ctx: self.ctx.clone(), rep: self.rep.sub(&other.rep) }
    }

    pub fn neg(&self) -> Self {
        QuotientElement { ctx: self.ctx.clone(), rep: self.rep.neg() }
    }

    /// Product with reduction by X^n = lambda.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other).expect("modulus mismatch");
        Self::new(self.ctx.clone(), self.rep.mul(&other.rep))
    }

    pub fn mul_scalar(&self, c: &S) -> Self {
        QuotientElement { ctx: self.ctx.clone(), rep: self.rep.mul_scalar(c) }
    }

    pub fn pow(&self, mut e: u128) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ctx.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl<S: Scalar> fmt::Display for QuotientElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl<S: Scalar> fmt::Debug for QuotientElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// Parses `[c0,c1,...]` or `c0 + c1*X + c2*X^2` with integer coefficients.
pub fn parse_int_poly(text: &str) -> Result<Vec<i64>> {
    let text = text.trim();
    if let Some(inner) = text.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("unterminated list `{text}`")))?;
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        return inner
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))
            })
            .collect();
    }
    // term form: split on +/- while respecting a leading sign
    let mut coeffs: Vec<i64> = Vec::new();
    let cleaned = text.replace(' ', "");
    if cleaned.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for ch in cleaned.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() {
            terms.push(std::mem::take(&mut cur));
        }
        if ch != '+' {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        terms.push(cur);
    }
    for term in terms {
        let (coeff, power) = parse_term(&term)?;
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] += coeff;
    }
    Ok(coeffs)
}

fn parse_term(term: &str) -> Result<(i64, usize)> {
    let bad = || Error::Parse(format!("bad term `{term}`"));
    let (sign, rest) = match term.strip_prefix('-') {
        Some(r) => (-1i64, r),
        None => (1i64, term),
    };
    if !rest.contains('X') && !rest.contains('x') {
        return Ok((sign * rest.parse::<i64>().map_err(|_| bad())?, 0));
    }
    let rest = rest.replace('x', "X");
    let (coeff_part, x_part) = match rest.split_once('X') {
        Some((c, x)) => (c, x),
        None => return Err(bad()),
    };
    let coeff = if coeff_part.is_empty() {
        1
    } else {
        let c = coeff_part.strip_suffix('*').unwrap_or(coeff_part);
        if c.is_empty() {
            1
        } else {
            c.parse::<i64>().map_err(|_| bad())?
        }
    };
    let power = if x_part.is_empty() {
        1
    } else {
        let e = x_part.strip_prefix('^').ok_or_else(bad)?;
        e.parse::<usize>().map_err(|_| bad())?
    };
    Ok((sign * coeff, power))
}
