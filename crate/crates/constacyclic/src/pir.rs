//! Finite principal ideal rings as products of chain rings: componentwise
//! codes, the principality criterion, the isometry onto cyclic codes, and
//! brute-force structure oracles for small quotient rings.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::arith::ext_gcd;
use crate::code::{ConstacyclicCode, Membership};
use crate::error::{Error, Result};
use crate::poly::{parse_int_poly, Poly, QuotientCtx, QuotientElement};
use crate::ring::{ChainRingSpec, Family, RingElement};

/// A finite principal ideal ring, presented as a product of chain rings.
#[derive(Debug, Clone, PartialEq)]
pub struct PirSpec {
    components: Vec<Arc<ChainRingSpec>>,
}

impl PirSpec {
    pub fn new(components: Vec<Arc<ChainRingSpec>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Precondition("a PIR needs at least one chain component".into()));
        }
        Ok(PirSpec { components })
    }

    /// Parses `GR(25,1)+FPS(4,1)` style sums of chain ring specs.
    pub fn parse(text: &str) -> Result<Self> {
        let components: Result<Vec<_>> =
            text.split('+').map(|part| ChainRingSpec::parse(part.trim())).collect();
        PirSpec::new(components?)
    }

    pub fn components(&self) -> &[Arc<ChainRingSpec>] {
        &self.components
    }

    /// char R = lcm of the component characteristics.
    pub fn characteristic(&self) -> u64 {
        self.components.iter().fold(1, |acc, c| num_integer::lcm(acc, c.characteristic()))
    }
}

impl std::fmt::Display for PirSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// Splits R[X]/<X^n - lambda> into one chain-ring instance per component.
pub fn decompose_quotient(
    pir: &PirSpec,
    n: u64,
    lambdas: &[RingElement],
) -> Result<Vec<(Arc<ChainRingSpec>, RingElement, u64)>> {
    if lambdas.len() != pir.components.len() {
        return Err(Error::Precondition(format!(
            "expected {} lambda components, got {}",
            pir.components.len(),
            lambdas.len()
        )));
    }
    let mut out = Vec::with_capacity(lambdas.len());
    for (spec, lam) in pir.components.iter().zip(lambdas) {
        if lam.spec() != spec {
            return Err(Error::SpecMismatch(lam.spec().to_string(), spec.to_string()));
        }
        if !lam.is_unit() {
            return Err(Error::NotAUnit(lam.to_string()));
        }
        out.push((Arc::clone(spec), lam.clone(), n));
    }
    Ok(out)
}

/// A code over a product ring: one constacyclic component code per factor,
/// all of the same length.
#[derive(Debug, Clone)]
pub struct PirCode {
    components: Vec<ConstacyclicCode>,
}

impl PirCode {
    pub fn new(components: Vec<ConstacyclicCode>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Precondition("a PIR code needs at least one component".into()));
        }
        let n = components[0].factorization().n();
        if components.iter().any(|c| c.factorization().n() != n) {
            return Err(Error::Precondition("component codes must share the length n".into()));
        }
        Ok(PirCode { components })
    }

    pub fn components(&self) -> &[ConstacyclicCode] {
        &self.components
    }

    pub fn cardinality(&self) -> u128 {
        self.components.iter().map(|c| c.cardinality()).product()
    }

    /// Membership of a tuple word, one component element per factor ring.
    pub fn contains(&self, parts: &[QuotientElement<RingElement>], method: Membership) -> Result<bool> {
        if parts.len() != self.components.len() {
            return Err(Error::Precondition("one word component per ring factor".into()));
        }
        Ok(self.components.iter().zip(parts).all(|(c, f)| c.contains(f, method)))
    }
}

/// Outcome of the principality test. `Unknown` is reported when the
/// sufficiency criterion fails but the exact characterization does not apply
/// (gcd(n, ord lambda) != 1): the boundary there is an open problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Principality {
    Principal,
    NotPrincipal,
    Unknown,
}

#[derive(Debug, Clone)]
pub struct ComponentCertificate {
    pub ring: String,
    pub ell: u32,
    pub gcd_n_char: u64,
    pub satisfied: bool,
}

#[derive(Debug, Clone)]
pub struct PrincipalityReport {
    pub verdict: Principality,
    /// true when gcd(n, ord lambda) = 1, where the criterion is exact.
    pub criterion_exact: bool,
    pub components: Vec<ComponentCertificate>,
}

/// Tests whether R[X]/<X^n - lambda> is a principal ideal ring via the
/// componentwise criterion min{l_i, gcd(n, char R_i)} = 1.
pub fn is_principal_quotient(
    pir: &PirSpec,
    n: u64,
    lambdas: &[RingElement],
) -> Result<PrincipalityReport> {
    let parts = decompose_quotient(pir, n, lambdas)?;
    let mut t = 1u128;
    for (_, lam, _) in &parts {
        t = num_integer::lcm(t, lam.unit_order()?);
    }
    let criterion_exact = num_integer::gcd(u128::from(n), t) == 1;
    let mut components = Vec::with_capacity(parts.len());
    let mut all_ok = true;
    for (spec, _, _) in &parts {
        let ell = spec.nilpotency();
        let gcd_n_char = num_integer::gcd(n, spec.characteristic());
        let satisfied = u64::from(ell).min(gcd_n_char) == 1;
        all_ok &= satisfied;
        components.push(ComponentCertificate {
            ring: spec.to_string(),
            ell,
            gcd_n_char,
            satisfied,
        });
    }
    let verdict = if all_ok {
        Principality::Principal
    } else if criterion_exact {
        Principality::NotPrincipal
    } else {
        Principality::Unknown
    };
    Ok(PrincipalityReport { verdict, criterion_exact, components })
}

/// The isometry f(X) -> f(lambda^alpha X) from R[X]/<X^n - lambda> onto the
/// cyclic quotient R[X]/<X^n - 1>, defined when gcd(n, ord lambda) = 1.
#[derive(Debug, Clone)]
pub struct Isometry {
    src: QuotientCtx<RingElement>,
    dst: QuotientCtx<RingElement>,
    alpha: u64,
    mu: RingElement,
}

impl Isometry {
    pub fn new(spec: &Arc<ChainRingSpec>, n: u64, lambda: &RingElement) -> Result<Self> {
        if lambda.spec() != spec {
            return Err(Error::SpecMismatch(lambda.spec().to_string(), spec.to_string()));
        }
        if !lambda.is_unit() {
            return Err(Error::NotAUnit(lambda.to_string()));
        }
        let t = lambda.unit_order()?;
        if num_integer::gcd(u128::from(n), t) != 1 {
            return Err(Error::Precondition(format!(
                "gcd(n, ord lambda) must be 1, got gcd({n}, {t}) != 1"
            )));
        }
        // n*alpha + t*beta = 1; lambda^alpha is well defined mod t
        let (_, a, _) = ext_gcd(n as i128, t as i128);
        let alpha = (a.rem_euclid(t as i128)) as u64;
        let mu = lambda.pow(u128::from(alpha));
        let src = QuotientCtx::new(Arc::clone(spec), n as usize, lambda.clone());
        let dst = QuotientCtx::new(Arc::clone(spec), n as usize, RingElement::one(spec));
        Ok(Isometry { src, dst, alpha, mu })
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    /// lambda^alpha, the substitution scale.
    pub fn scale(&self) -> &RingElement {
        &self.mu
    }

    pub fn src_ctx(&self) -> &QuotientCtx<RingElement> {
        &self.src
    }

    pub fn dst_ctx(&self) -> &QuotientCtx<RingElement> {
        &self.dst
    }

    /// Applies the coefficientwise map a_j -> a_j * mu^j; Hamming weight is
    /// preserved because mu is a unit.
    pub fn apply(&self, f: &QuotientElement<RingElement>) -> Result<QuotientElement<RingElement>> {
        if f.ctx() != &self.src {
            return Err(Error::Precondition("word is not in the source quotient".into()));
        }
        let mut word = f.word();
        let mut scale = RingElement::one(self.src.base());
        for c in word.iter_mut() {
            *c = c.mul(&scale);
            scale = scale.mul(&self.mu);
        }
        QuotientElement::from_word(self.dst.clone(), word)
    }
}

/// Certificate that R[X]/<X^n - lambda> over a Galois ring is a chain ring:
/// pi = X - lambda is nilpotent of index s*n and pi^p = p*u for a unit u.
#[derive(Debug, Clone)]
pub struct ChainQuotientReport {
    pub is_chain: bool,
    pub nilpotency: Option<u32>,
    pub eisenstein_unit: Option<QuotientElement<RingElement>>,
    pub failure: Option<String>,
}

fn quotient_unit(x: &QuotientElement<RingElement>, group_cap: u128) -> bool {
    let one = QuotientElement::one(x.ctx().clone());
    let mut acc = x.clone();
    for _ in 0..group_cap {
        if acc == one {
            return true;
        }
        acc = acc.mul(x);
    }
    false
}

/// Probes the chain structure of GR(p^s, r)[X]/<X^n - lambda> around the
/// uniformizer candidate pi = X - lambda.
pub fn verify_chain_quotient(
    spec: &Arc<ChainRingSpec>,
    n: u64,
    lambda: &RingElement,
) -> Result<ChainQuotientReport> {
    if spec.family() != Family::GaloisRing {
        return Err(Error::Precondition("chain-quotient probe expects a Galois ring base".into()));
    }
    if lambda.spec() != spec {
        return Err(Error::SpecMismatch(lambda.spec().to_string(), spec.to_string()));
    }
    if !lambda.is_unit() {
        return Err(Error::NotAUnit(lambda.to_string()));
    }
    let p = spec.residue_char();
    let s = spec.char_exponent();
    let ctx = QuotientCtx::new(Arc::clone(spec), n as usize, lambda.clone());
    let pi = QuotientElement::new(
        ctx.clone(),
        Poly::new(Arc::clone(spec), vec![lambda.neg(), RingElement::one(spec)]),
    );
    // expected nilpotency for a chain quotient: s*n
    let expect = s * n as u32;
    let mut nilpotency = None;
    let mut power = QuotientElement::one(ctx.clone());
    for k in 1..=expect {
        power = power.mul(&pi);
        if power.is_zero() {
            nilpotency = Some(k);
            break;
        }
    }
    let Some(nu) = nilpotency else {
        return Ok(ChainQuotientReport {
            is_chain: false,
            nilpotency: None,
            eisenstein_unit: None,
            failure: Some(format!("(X - lambda)^{expect} != 0")),
        });
    };
    if nu != expect {
        return Ok(ChainQuotientReport {
            is_chain: false,
            nilpotency: Some(nu),
            eisenstein_unit: None,
            failure: Some(format!("nilpotency {nu} != s*n = {expect}")),
        });
    }
    if s == 1 {
        // p = 0 in R: pi^p = 0 = p*u holds vacuously
        return Ok(ChainQuotientReport {
            is_chain: true,
            nilpotency: Some(nu),
            eisenstein_unit: None,
            failure: None,
        });
    }
    // pi^p = p * u: divide each coefficient of pi^p by p exactly
    let w = pi.pow(u128::from(p));
    let divided: Result<Vec<RingElement>> =
        w.rep().coeffs().iter().map(|c| c.div_pi_pow(1)).collect();
    let u = match divided {
        Ok(coeffs) => {
            QuotientElement::new(ctx.clone(), Poly::new(Arc::clone(spec), coeffs))
        }
        Err(_) => {
            return Ok(ChainQuotientReport {
                is_chain: false,
                nilpotency: Some(nu),
                eisenstein_unit: None,
                failure: Some(format!("pi^{p} is not divisible by {p}")),
            });
        }
    };
    let group_cap = spec.size().checked_pow(n as u32).expect("quotient size fits u128");
    if !quotient_unit(&u, group_cap) {
        return Ok(ChainQuotientReport {
            is_chain: false,
            nilpotency: Some(nu),
            eisenstein_unit: Some(u),
            failure: Some(format!("pi^{p} = {p}*u with u not a unit")),
        });
    }
    Ok(ChainQuotientReport { is_chain: true, nilpotency: Some(nu), eisenstein_unit: Some(u), failure: None })
}

/// A finite commutative ring small enough (<= 4096 elements) for exhaustive
/// structure analysis, held as explicit addition and multiplication tables.
#[derive(Debug, Clone)]
pub struct SmallRingTable {
    name: String,
    size: usize,
    zero: u16,
    one: u16,
    labels: Vec<String>,
    add: Vec<u16>,
    mul: Vec<u16>,
}

pub const SMALL_RING_CAP: usize = 4096;

impl SmallRingTable {
    /// Builds Z_m[X]/<f> from text like `Z4[X]/(X^2-1)`; f must be monic
    /// after reduction mod m.
    pub fn parse_quotient(text: &str) -> Result<Self> {
        let text = text.trim();
        let rest = text
            .strip_prefix('Z')
            .ok_or_else(|| Error::Parse(format!("expected Zm[X]/(f), got {text}")))?;
        let open = rest
            .find("[X]/(")
            .ok_or_else(|| Error::Parse(format!("expected Zm[X]/(f), got {text}")))?;
        let m: u64 = rest[..open]
            .parse()
            .map_err(|_| Error::Parse(format!("bad modulus in {text}")))?;
        let inner = rest[open + 5..]
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unclosed modulus polynomial in {text}")))?;
        if m < 2 {
            return Err(Error::Parse("modulus must be at least 2".into()));
        }
        let raw = parse_int_poly(inner)?;
        let f: Vec<u64> = raw.iter().map(|&c| c.rem_euclid(m as i64) as u64).collect();
        let mut f = f;
        while f.last() == Some(&0) {
            f.pop();
        }
        let deg = f.len().saturating_sub(1);
        if deg == 0 {
            return Err(Error::Parse("modulus polynomial must have positive degree".into()));
        }
        if f[deg] != 1 {
            return Err(Error::Parse("modulus polynomial must be monic".into()));
        }
        Self::integer_quotient(m, &f, text)
    }

    /// Z_m[X]/<f> with f monic of positive degree, coefficients mod m.
    pub fn integer_quotient(m: u64, f: &[u64], name: &str) -> Result<Self> {
        let deg = f.len() - 1;
        let size = (m as u128).checked_pow(deg as u32).unwrap_or(u128::MAX);
        if size > SMALL_RING_CAP as u128 {
            return Err(Error::BudgetExceeded { needed: size, budget: SMALL_RING_CAP as u128 });
        }
        let size = size as usize;
        // element index = mixed-radix encoding of the coefficient vector
        let decode = |mut idx: usize| -> Vec<u64> {
            let mut v = Vec::with_capacity(deg);
            for _ in 0..deg {
                v.push((idx % m as usize) as u64);
                idx /= m as usize;
            }
            v
        };
        let encode = |v: &[u64]| -> u16 {
            let mut idx = 0usize;
            for &c in v.iter().rev() {
                idx = idx * m as usize + c as usize;
            }
            idx as u16
        };
        let reduce = |mut poly: Vec<u64>| -> Vec<u64> {
            // mod (m, f) with f monic
            while poly.len() > deg {
                let lead = poly.pop().unwrap();
                if lead == 0 {
                    continue;
                }
                let k = poly.len() - deg;
                for (i, &fc) in f[..deg].iter().enumerate() {
                    let pos = k + i;
                    poly[pos] = (poly[pos] + m - (lead * fc) % m) % m;
                }
            }
            poly.resize(deg, 0);
            poly
        };
        let mut add = vec![0u16; size * size];
        let mut mul = vec![0u16; size * size];
        let mut labels = Vec::with_capacity(size);
        for i in 0..size {
            labels.push(label_poly(&decode(i)));
        }
        for i in 0..size {
            let a = decode(i);
            for j in 0..size {
                let b = decode(j);
                let sum: Vec<u64> = a.iter().zip(&b).map(|(&x, &y)| (x + y) % m).collect();
                add[i * size + j] = encode(&sum);
                let mut prod = vec![0u64; 2 * deg];
                for (x, &ac) in a.iter().enumerate() {
                    for (y, &bc) in b.iter().enumerate() {
                        prod[x + y] = (prod[x + y] + ac * bc) % m;
                    }
                }
                mul[i * size + j] = encode(&reduce(prod));
            }
        }
        let mut one_vec = vec![0u64; deg];
        one_vec[0] = 1 % m;
        Ok(SmallRingTable {
            name: name.to_string(),
            size,
            zero: 0,
            one: encode(&one_vec),
            labels,
            add,
            mul,
        })
    }

    /// R[X]/<X^n - lambda> for a chain ring R, via exact element arithmetic.
    pub fn from_chain_quotient(
        spec: &Arc<ChainRingSpec>,
        n: u64,
        lambda: &RingElement,
    ) -> Result<Self> {
        let size = spec.size().checked_pow(n as u32).unwrap_or(u128::MAX);
        if size > SMALL_RING_CAP as u128 {
            return Err(Error::BudgetExceeded { needed: size, budget: SMALL_RING_CAP as u128 });
        }
        let ctx = QuotientCtx::new(Arc::clone(spec), n as usize, lambda.clone());
        let base = spec.elements();
        let b = base.len();
        let n = n as usize;
        // base-ring tables once; word tables then reduce to index arithmetic
        let key = |e: &RingElement| -> Vec<Vec<u64>> { e.canonical_coeffs() };
        let base_index: HashMap<Vec<Vec<u64>>, usize> =
            base.iter().enumerate().map(|(i, e)| (key(e), i)).collect();
        let mut base_add = vec![0usize; b * b];
        let mut base_mul = vec![0usize; b * b];
        for i in 0..b {
            for j in 0..b {
                base_add[i * b + j] = base_index[&key(&base[i].add(&base[j]))];
                base_mul[i * b + j] = base_index[&key(&base[i].mul(&base[j]))];
            }
        }
        let lambda_idx = base_index[&key(lambda)];
        let zero_digit = base_index[&key(&RingElement::zero(spec))];
        let one_digit = base_index[&key(&RingElement::one(spec))];
        let size = b.pow(n as u32);
        let decode = |mut idx: usize| -> Vec<usize> {
            let mut v = Vec::with_capacity(n);
            for _ in 0..n {
                v.push(idx % b);
                idx /= b;
            }
            v
        };
        let encode = |digits: &[usize]| -> u16 {
            digits.iter().rev().fold(0usize, |acc, &d| acc * b + d) as u16
        };
        let mut add = vec![0u16; size * size];
        let mut mul = vec![0u16; size * size];
        let digit_lists: Vec<Vec<usize>> = (0..size).map(decode).collect();
        for i in 0..size {
            let a = &digit_lists[i];
            for j in 0..size {
                let c = &digit_lists[j];
                let sum: Vec<usize> =
                    a.iter().zip(c).map(|(&x, &y)| base_add[x * b + y]).collect();
                add[i * size + j] = encode(&sum);
                let mut acc = vec![zero_digit; n];
                for (x, &ax) in a.iter().enumerate() {
                    if ax == zero_digit {
                        continue;
                    }
                    for (y, &cy) in c.iter().enumerate() {
                        let mut prod = base_mul[ax * b + cy];
                        let mut pos = x + y;
                        if pos >= n {
                            pos -= n;
                            prod = base_mul[prod * b + lambda_idx];
                        }
                        acc[pos] = base_add[acc[pos] * b + prod];
                    }
                }
                mul[i * size + j] = encode(&acc);
            }
        }
        let zero = encode(&vec![zero_digit; n]);
        let one = {
            let mut d = vec![zero_digit; n];
            d[0] = one_digit;
            encode(&d)
        };
        let labels = digit_lists
            .iter()
            .map(|digits| {
                let word: Vec<RingElement> = digits.iter().map(|&d| base[d].clone()).collect();
                QuotientElement::from_word(ctx.clone(), word)
                    .expect("word has length n")
                    .to_string()
            })
            .collect();
        Ok(SmallRingTable {
            name: format!("{}[X]/(X^{}-{})", spec, n, lambda),
            size,
            zero,
            one,
            labels,
            add,
            mul,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn label(&self, i: u16) -> &str {
        &self.labels[i as usize]
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.size + b as usize]
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.size + b as usize]
    }

    pub fn zero(&self) -> u16 {
        self.zero
    }

    pub fn one(&self) -> u16 {
        self.one
    }

    /// The index of the element with the given coefficient vector, if the
    /// table was built from an integer quotient.
    pub fn find_label(&self, label: &str) -> Option<u16> {
        self.labels.iter().position(|l| l == label).map(|i| i as u16)
    }

    /// The ideal generated by the listed elements: closure of all R-multiples
    /// under addition.
    pub fn ideal(&self, gens: &[u16]) -> BTreeSet<u16> {
        let mut multiples: BTreeSet<u16> = BTreeSet::new();
        multiples.insert(self.zero);
        for &g in gens {
            for r in 0..self.size as u16 {
                multiples.insert(self.mul(r, g));
            }
        }
        // additive closure: BFS adding the generators' multiples
        let gens: Vec<u16> = multiples.iter().copied().collect();
        let mut set = multiples;
        let mut queue: Vec<u16> = set.iter().copied().collect();
        while let Some(a) = queue.pop() {
            for &m in &gens {
                let c = self.add(a, m);
                if set.insert(c) {
                    queue.push(c);
                }
            }
        }
        set
    }
}

fn label_poly(coeffs: &[u64]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let term = match (i, c) {
            (0, _) => c.to_string(),
            (1, 1) => "X".to_string(),
            (1, _) => format!("{c}*X"),
            (_, 1) => format!("X^{i}"),
            _ => format!("{c}*X^{i}"),
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Full ideal lattice of a small ring, with structure flags.
#[derive(Debug, Clone)]
pub struct LatticeReport {
    /// All ideals, each a sorted element list; sorted by (size, elements).
    pub ideals: Vec<Vec<u16>>,
    pub principal: bool,
    pub chain: bool,
    pub local: bool,
    /// An ideal that is not principal, if any.
    pub non_principal_witness: Option<Vec<u16>>,
}

/// Enumerates every ideal as a fixed point of pairwise ideal sums over the
/// principal ideals, then checks principality, total ordering, and locality.
pub fn brute_ideal_lattice(table: &SmallRingTable) -> LatticeReport {
    // dedupe generators by their multiple sets before the additive closure
    let mut principal_ideals: BTreeSet<BTreeSet<u16>> = BTreeSet::new();
    let mut seen_multiples: BTreeSet<Vec<u16>> = BTreeSet::new();
    for g in 0..table.size as u16 {
        let multiples: BTreeSet<u16> = (0..table.size as u16).map(|r| table.mul(r, g)).collect();
        if seen_multiples.insert(multiples.iter().copied().collect()) {
            principal_ideals.insert(table.ideal(&[g]));
        }
    }
    let mut ideals: BTreeSet<BTreeSet<u16>> = principal_ideals.clone();
    // every ideal of a finite ring is a finite sum of principal ideals, so
    // closing under pairwise sums reaches all of them
    loop {
        let snapshot: Vec<BTreeSet<u16>> = ideals.iter().cloned().collect();
        let mut grew = false;
        for i in 0..snapshot.len() {
            for j in i + 1..snapshot.len() {
                if snapshot[i].is_subset(&snapshot[j]) || snapshot[j].is_subset(&snapshot[i]) {
                    continue;
                }
                let gens: Vec<u16> = snapshot[i].union(&snapshot[j]).copied().collect();
                grew |= ideals.insert(table.ideal(&gens));
            }
        }
        if !grew {
            break;
        }
    }
    let non_principal_witness = ideals
        .iter()
        .find(|i| !principal_ideals.contains(*i))
        .map(|i| i.iter().copied().collect::<Vec<u16>>());
    let principal = non_principal_witness.is_none();
    let list: Vec<BTreeSet<u16>> = ideals.iter().cloned().collect();
    let mut chain = true;
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            if !list[i].is_subset(&list[j]) && !list[j].is_subset(&list[i]) {
                chain = false;
            }
        }
    }
    let whole: BTreeSet<u16> = (0..table.size as u16).collect();
    let proper: Vec<&BTreeSet<u16>> = list.iter().filter(|i| **i != whole).collect();
    let maximal = (0..proper.len())
        .filter(|&i| !(0..proper.len()).any(|j| j != i && proper[i].is_subset(proper[j])))
        .count();
    let local = maximal == 1;
    let mut ideals: Vec<Vec<u16>> =
        list.into_iter().map(|i| i.into_iter().collect()).collect();
    ideals.sort_by_key(|i| (i.len(), i.clone()));
    LatticeReport { ideals, principal, chain, local, non_principal_witness }
}
