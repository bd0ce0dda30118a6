//! Factorization of X^n - lambda over a chain ring: q-coset partition of the
//! exponent set, irreducible residue factors from root orbits, Hensel lift.

use std::sync::Arc;

use crate::arith::order_mod;
use crate::error::{Error, Result};
use crate::field::{extension_field, FieldElement, FieldEmbedding, FiniteFieldSpec};
use crate::poly::{hensel_lift, residue_poly, FieldPoly, Poly, QuotientCtx, RingPoly};
use crate::ring::{ChainRingSpec, RingElement};

/// The q-coset partition of 1 + tZ_tn.
///
/// Cosets are sorted ascending internally and ordered by smallest
/// representative, which fixes the factor numbering everywhere downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    t: u64,
    tn: u64,
    cosets: Vec<Vec<u64>>,
}

impl CosetPartition {
    /// Orbits of {1, 1+t, ..., 1+(n-1)t} mod tn under multiplication by q.
    pub fn new(q: u64, t: u64, n: u64) -> Result<Self> {
        if n < 1 || t < 1 {
            return Err(Error::Precondition("need n >= 1 and t >= 1".into()));
        }
        let tn = t * n;
        if t > 1 && q % t != 1 {
            return Err(Error::Precondition(format!("q = {q} must be 1 mod t = {t}")));
        }
        if num_integer::gcd(q, tn.max(1)) != 1 {
            return Err(Error::Precondition(format!("gcd(q, tn) must be 1, got q = {q}, tn = {tn}")));
        }
        let points: Vec<u64> = (0..n).map(|k| (1 + k * t) % tn.max(1)).collect();
        let mut seen = std::collections::BTreeSet::new();
        let mut cosets: Vec<Vec<u64>> = Vec::new();
        let mut sorted = points.clone();
        sorted.sort_unstable();
        for &j in &sorted {
            if seen.contains(&j) {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = j;
            loop {
                orbit.push(x);
                seen.insert(x);
                x = if tn == 0 { x } else { (x as u128 * q as u128 % tn as u128) as u64 };
                if x == j {
                    break;
                }
            }
            orbit.sort_unstable();
            cosets.push(orbit);
        }
        cosets.sort_by_key(|c| c[0]);
        Ok(CosetPartition { t, tn, cosets })
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn tn(&self) -> u64 {
        self.tn
    }

    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }
}

/// Coset partition for X^n - lambda_bar over the field of lambda_bar.
pub fn coset_partition(lambda_bar: &FieldElement, n: u64) -> Result<CosetPartition> {
    let field = lambda_bar.field();
    let p = field.characteristic();
    if num_integer::gcd(n, p) != 1 {
        return Err(Error::LengthNotCoprime { n, p });
    }
    if lambda_bar.is_zero() {
        return Err(Error::NotAUnit("0".into()));
    }
    let t = lambda_bar.multiplicative_order() as u64;
    let q = (field.order() % u128::from(t * n).max(1)) as u64;
    CosetPartition::new(if q == 0 { field.order() as u64 } else { q }, t, n)
}

/// A primary tn-th root of unity with xi^n = lambda_bar, together with the
/// extension field it lives in.
#[derive(Debug, Clone)]
pub struct PrimaryRoot {
    pub extension: Arc<FiniteFieldSpec>,
    pub embedding: FieldEmbedding,
    pub xi: FieldElement,
    pub t: u64,
    pub tn: u64,
}

/// Finds the smallest extension F~ of F containing all tn-th roots of unity
/// and, inside it, a root xi of order exactly tn with xi^n = lambda_bar.
///
/// The search walks the cyclic group of tn-th roots directly; at most tn
/// candidates are inspected.
pub fn find_primary_root(lambda_bar: &FieldElement, n: u64) -> Result<PrimaryRoot> {
    let field = lambda_bar.field();
    let p = field.characteristic();
    if num_integer::gcd(n, p) != 1 {
        return Err(Error::LengthNotCoprime { n, p });
    }
    if lambda_bar.is_zero() {
        return Err(Error::NotAUnit("0".into()));
    }
    let t = lambda_bar.multiplicative_order() as u64;
    let tn = t * n;
    let q = field.order();
    // smallest a with tn | q^a - 1
    let a = if tn <= 1 { 1 } else { order_mod((q % tn as u128) as u64, tn) };
    let (extension, embedding) = extension_field(field, a as usize);
    let target = embedding.apply(lambda_bar);
    let group = extension.order() - 1;
    debug_assert_eq!(group % tn as u128, 0);
    let g = extension.primitive_element();
    let z = g.pow(group / tn as u128);
    // prefer generators of the tn-th roots: those have order exactly tn.
    // Among them take the canonically smallest, which makes the choice
    // independent of the primitive element the search started from.
    let key = |x: &FieldElement| -> u128 {
        x.coeffs()
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * extension.characteristic() as u128 + c as u128)
    };
    let mut fallback: Option<FieldElement> = None;
    let mut xi: Option<FieldElement> = None;
    let mut cand = FieldElement::one(&extension);
    for j in 0..tn.max(1) {
        if cand.pow(n as u128) == target {
            let slot = if tn <= 1 || num_integer::gcd(j, tn) == 1 { &mut xi } else { &mut fallback };
            if slot.as_ref().map_or(true, |best| key(&cand) < key(best)) {
                *slot = Some(cand.clone());
            }
        }
        cand = cand.mul(&z);
    }
    let xi = xi
        .or(fallback)
        .expect("X^n - lambda_bar has a root among the tn-th roots of unity");
    Ok(PrimaryRoot { extension, embedding, xi, t, tn })
}

/// The irreducible factorization of X^n - lambda_bar over F, one factor per
/// q-coset, each computed as the product of its root orbit in the extension
/// field and then verified to have coefficients in F.
pub fn factor_residue(lambda_bar: &FieldElement, n: u64) -> Result<(CosetPartition, PrimaryRoot, Vec<FieldPoly>)> {
    let field = Arc::clone(lambda_bar.field());
    let partition = coset_partition(lambda_bar, n)?;
    let root = find_primary_root(lambda_bar, n)?;
    let ext = &root.extension;
    let mut factors = Vec::with_capacity(partition.len());
    for coset in partition.cosets() {
        let mut f = Poly::one(Arc::clone(ext));
        for &j in coset {
            let linear = Poly::new(
                Arc::clone(ext),
                vec![root.xi.pow(j as u128).neg(), FieldElement::one(ext)],
            );
            f = f.mul(&linear);
        }
        // orbit products are Frobenius-stable, so coefficients must land in F
        let coeffs: Option<Vec<FieldElement>> = f
            .coeffs()
            .iter()
            .map(|c| root.embedding.retract(c))
            .collect();
        let coeffs = coeffs.expect("q-coset orbit product has coefficients in the base field");
        factors.push(Poly::new(Arc::clone(&field), coeffs));
    }
    // self-check: the factors multiply back to X^n - lambda_bar
    let product = factors.iter().fold(Poly::one(Arc::clone(&field)), |acc, f| acc.mul(f));
    debug_assert_eq!(product, Poly::x_pow_minus(field, n as usize, lambda_bar));
    Ok((partition, root, factors))
}

/// The complete factorization data for X^n - lambda over a chain ring R.
#[derive(Debug, Clone)]
pub struct Factorization {
    spec: Arc<ChainRingSpec>,
    n: u64,
    lambda: RingElement,
    partition: CosetPartition,
    root: PrimaryRoot,
    residue_factors: Vec<FieldPoly>,
    factors: Vec<RingPoly>,
}

impl Factorization {
    /// Factors X^n - lambda into monic basic irreducible polynomials over R.
    ///
    /// Factor i corresponds to coset i of the partition; factors are ordered
    /// by smallest coset representative, so identical inputs always give
    /// identical output.
    pub fn compute(spec: &Arc<ChainRingSpec>, lambda: &RingElement, n: u64) -> Result<Self> {
        if lambda.spec() != spec {
            return Err(Error::SpecMismatch(lambda.spec().to_string(), spec.to_string()));
        }
        if !lambda.is_unit() {
            return Err(Error::NotAUnit(lambda.to_string()));
        }
        if num_integer::gcd(n, spec.residue_char()) != 1 {
            return Err(Error::LengthNotCoprime { n, p: spec.residue_char() });
        }
        let lambda_bar = lambda.residue();
        let (partition, root, residue_factors) = factor_residue(&lambda_bar, n)?;
        let modulus = Poly::x_pow_minus(Arc::clone(spec), n as usize, lambda);
        let factors = hensel_lift(&modulus, &residue_factors)?;
        Ok(Factorization {
            spec: Arc::clone(spec),
            n,
            lambda: lambda.clone(),
            partition,
            root,
            residue_factors,
            factors,
        })
    }

    pub fn spec(&self) -> &Arc<ChainRingSpec> {
        &self.spec
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn lambda(&self) -> &RingElement {
        &self.lambda
    }

    pub fn partition(&self) -> &CosetPartition {
        &self.partition
    }

    pub fn root(&self) -> &PrimaryRoot {
        &self.root
    }

    /// Number of basic irreducible factors, m.
    pub fn m(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[RingPoly] {
        &self.factors
    }

    pub fn residue_factors(&self) -> &[FieldPoly] {
        &self.residue_factors
    }

    /// d_i = deg phi_i = |Q_i|.
    pub fn degree(&self, i: usize) -> usize {
        self.factors[i].degree().unwrap()
    }

    /// phi_{I'} = product of phi_i over i in the subset.
    pub fn phi_subset(&self, subset: &[usize]) -> RingPoly {
        subset
            .iter()
            .fold(Poly::one(Arc::clone(&self.spec)), |acc, &i| acc.mul(&self.factors[i]))
    }

    /// phi-hat_{I'} = product over the complement; the whole modulus when the
    /// subset is empty.
    pub fn phi_hat_subset(&self, subset: &[usize]) -> RingPoly {
        let complement: Vec<usize> = (0..self.m()).filter(|i| !subset.contains(i)).collect();
        if complement.len() == self.m() {
            return self.modulus_poly();
        }
        self.phi_subset(&complement)
    }

    /// phi-hat_i, the cofactor of the single factor phi_i.
    pub fn phi_hat(&self, i: usize) -> RingPoly {
        let others: Vec<usize> = (0..self.m()).filter(|&j| j != i).collect();
        self.phi_subset(&others)
    }

    pub fn modulus_poly(&self) -> RingPoly {
        Poly::x_pow_minus(Arc::clone(&self.spec), self.n as usize, &self.lambda)
    }

    /// The ambient quotient ring R[X]/<X^n - lambda>.
    pub fn quotient_ctx(&self) -> QuotientCtx<RingElement> {
        QuotientCtx::new(Arc::clone(&self.spec), self.n as usize, self.lambda.clone())
    }

    /// The residue quotient ring F[X]/<X^n - lambda_bar>.
    pub fn residue_quotient_ctx(&self) -> QuotientCtx<FieldElement> {
        QuotientCtx::new(
            Arc::clone(self.spec.residue_field()),
            self.n as usize,
            self.lambda.residue(),
        )
    }

    /// Verifies the defining identities: exact product, residues, degrees.
    pub fn verify(&self) -> bool {
        let product = self
            .factors
            .iter()
            .fold(Poly::one(Arc::clone(&self.spec)), |acc, f| acc.mul(f));
        if product != self.modulus_poly() {
            return false;
        }
        for (i, f) in self.factors.iter().enumerate() {
            if !f.is_monic()
                || residue_poly(f) != self.residue_factors[i]
                || f.degree().unwrap() != self.partition.cosets()[i].len()
            {
                return false;
            }
        }
        true
    }
}
