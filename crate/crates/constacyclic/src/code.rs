//! Constacyclic codes as ideals of R[X]/<X^n - lambda>: exponent vectors,
//! generator and check towers, idempotents, membership, BCH bound, exact
//! minimum weight, enumeration.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::factor::Factorization;
use crate::poly::{bezout_coprime, residue_poly, FieldPoly, Poly, QuotientElement, RingPoly};
use crate::ring::RingElement;

/// Default cap on enumerated codewords for exact weight search.
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// Membership test method: componentwise valuations versus the check
/// polynomial identity f * H = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Crt,
    Check,
}

/// Minimum-weight search strategy. `Residue` enumerates the residue-field
/// code, which has the same minimum weight and is exponentially smaller.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightStrategy {
    Direct,
    Residue,
}

/// The nested index sets I_0 .. I_{l-1} and the monic chain
/// g_{l-1} | ... | g_0 | X^n - lambda.
#[derive(Debug, Clone)]
pub struct GeneratorTower {
    pub index_sets: Vec<Vec<usize>>,
    pub polys: Vec<RingPoly>,
}

/// A lambda-constacyclic code, identified by its exponent vector
/// (e_1, ..., e_m) with 0 <= e_i <= l.
#[derive(Debug, Clone)]
pub struct ConstacyclicCode {
    fact: Arc<Factorization>,
    exponents: Vec<u32>,
}

impl ConstacyclicCode {
    pub fn from_exponents(fact: &Arc<Factorization>, exponents: &[u32]) -> Result<Self> {
        let ell = fact.spec().nilpotency();
        if exponents.len() != fact.m() {
            return Err(Error::Precondition(format!(
                "expected {} exponents, got {}",
                fact.m(),
                exponents.len()
            )));
        }
        for &e in exponents {
            if e > ell {
                return Err(Error::ExponentOutOfRange { got: e, max: ell });
            }
        }
        Ok(ConstacyclicCode { fact: Arc::clone(fact), exponents: exponents.to_vec() })
    }

    pub fn factorization(&self) -> &Arc<Factorization> {
        &self.fact
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// All e_i = l: the code is {0}.
    pub fn is_zero_code(&self) -> bool {
        let ell = self.fact.spec().nilpotency();
        self.exponents.iter().all(|&e| e == ell)
    }

    /// All e_i = 0: the code is the whole quotient ring.
    pub fn is_whole_ring(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// |C| = p^{r * sum d_i (l - e_i)}, from the component sizes.
    pub fn cardinality(&self) -> u128 {
        let spec = self.fact.spec();
        let p = spec.residue_char() as u128;
        let exp = self.cardinality_exponent();
        p.checked_pow(exp).expect("code cardinality fits in u128")
    }

    /// The exponent r * sum d_i (l - e_i) with |C| = p^exponent.
    pub fn cardinality_exponent(&self) -> u32 {
        let spec = self.fact.spec();
        let ell = spec.nilpotency();
        let r = spec.residue_degree() as u32;
        let sum: u32 = self
            .exponents
            .iter()
            .enumerate()
            .map(|(i, &e)| self.fact.degree(i) as u32 * (ell - e))
            .sum();
        r * sum
    }

    /// I_v = {i : e_i <= v} and g_v = phi-hat_{I_v}, for v = 0 .. l-1.
    pub fn generator_tower(&self) -> GeneratorTower {
        let ell = self.fact.spec().nilpotency();
        let mut index_sets = Vec::with_capacity(ell as usize);
        let mut polys = Vec::with_capacity(ell as usize);
        for v in 0..ell {
            let iv: Vec<usize> = (0..self.fact.m()).filter(|&i| self.exponents[i] <= v).collect();
            polys.push(self.fact.phi_hat_subset(&iv));
            index_sets.push(iv);
        }
        GeneratorTower { index_sets, polys }
    }

    /// G = g_0 + pi g_1 + ... + pi^{l-1} g_{l-1} in the quotient ring.
    pub fn canonical_generator(&self) -> QuotientElement<RingElement> {
        let spec = self.fact.spec();
        let ctx = self.fact.quotient_ctx();
        let tower = self.generator_tower();
        let pi = RingElement::uniformizer(spec);
        let mut acc = Poly::zero(Arc::clone(spec));
        let mut scale = RingElement::one(spec);
        for g in &tower.polys {
            acc = acc.add(&g.mul_scalar(&scale));
            scale = scale.mul(&pi);
        }
        QuotientElement::new(ctx, acc)
    }

    /// h_v = phi_{I_{l-1-v}}, for v = 0 .. l-1.
    pub fn check_tower(&self) -> Vec<RingPoly> {
        let ell = self.fact.spec().nilpotency();
        (0..ell)
            .map(|v| {
                let w = ell - 1 - v;
                let iw: Vec<usize> =
                    (0..self.fact.m()).filter(|&i| self.exponents[i] <= w).collect();
                self.fact.phi_subset(&iw)
            })
            .collect()
    }

    /// H = h_0 + pi h_1 + ... + pi^{l-1} h_{l-1}; f is in C iff f*H = 0.
    pub fn check_poly(&self) -> QuotientElement<RingElement> {
        let spec = self.fact.spec();
        let ctx = self.fact.quotient_ctx();
        let pi = RingElement::uniformizer(spec);
        let mut acc = Poly::zero(Arc::clone(spec));
        let mut scale = RingElement::one(spec);
        for h in &self.check_tower() {
            acc = acc.add(&h.mul_scalar(&scale));
            scale = scale.mul(&pi);
        }
        QuotientElement::new(ctx, acc)
    }

    pub fn contains(&self, f: &QuotientElement<RingElement>, method: Membership) -> bool {
        match method {
            Membership::Crt => (0..self.fact.m())
                .all(|i| component_valuation(&self.fact, f.rep(), i) >= self.exponents[i]),
            Membership::Check => f.mul(&self.check_poly()).is_zero(),
        }
    }

    /// The annihilator ideal: exponents l - e_i.
    pub fn annihilator(&self) -> ConstacyclicCode {
        let ell = self.fact.spec().nilpotency();
        let exps: Vec<u32> = self.exponents.iter().map(|&e| ell - e).collect();
        ConstacyclicCode { fact: Arc::clone(&self.fact), exponents: exps }
    }

    /// message * G in the quotient ring.
    pub fn encode(&self, message: &RingPoly) -> QuotientElement<RingElement> {
        let ctx = self.fact.quotient_ctx();
        let msg = QuotientElement::new(ctx, message.clone());
        msg.mul(&self.canonical_generator())
    }

    /// Q = union of the cosets Q_i with e_i = l, as sorted points of 1+tZ_tn.
    pub fn residue_zero_set(&self) -> Vec<u64> {
        let ell = self.fact.spec().nilpotency();
        let mut q = Vec::new();
        for (i, coset) in self.fact.partition().cosets().iter().enumerate() {
            if self.exponents[i] == ell {
                q.extend_from_slice(coset);
            }
        }
        q.sort_unstable();
        q
    }

    /// d + 1 where d is the longest arithmetic run of step t inside the
    /// residue zero set; runs wrap modulo tn unless `wrap` is false.
    pub fn bch_bound(&self, wrap: bool) -> Result<u64> {
        if self.is_zero_code() {
            return Err(Error::ZeroCode);
        }
        let t = self.fact.partition().t();
        let tn = self.fact.partition().tn();
        let n = self.fact.n();
        let q = self.residue_zero_set();
        // point 1 + kt <-> slot k in 0..n
        let mut present = vec![false; n as usize];
        for &j in &q {
            let k = ((j + tn - 1) % tn.max(1)) / t.max(1);
            present[k as usize] = true;
        }
        let mut best = 0u64;
        let mut run = 0u64;
        let span = if wrap { 2 * n } else { n };
        for idx in 0..span {
            if present[(idx % n) as usize] {
                run += 1;
                best = best.max(run.min(n));
            } else {
                run = 0;
            }
        }
        Ok(best + 1)
    }

    /// Exact minimum Hamming weight by exhaustive enumeration.
    ///
    /// `Residue` enumerates the residue-field code generated by
    /// residue(g_{l-1}); `Direct` walks the full ideal through its CRT
    /// mixed-radix coordinates. Both agree.
    pub fn min_weight_exact(&self, strategy: WeightStrategy, budget: u128) -> Result<u64> {
        if self.is_zero_code() {
            return Err(Error::ZeroCode);
        }
        match strategy {
            WeightStrategy::Residue => self.min_weight_residue(budget),
            WeightStrategy::Direct => self.min_weight_direct(budget),
        }
    }

    fn min_weight_residue(&self, budget: u128) -> Result<u64> {
        let spec = self.fact.spec();
        let field = spec.residue_field();
        let n = self.fact.n() as usize;
        let tower = self.generator_tower();
        let deepest = tower.polys.last().unwrap();
        let gbar: FieldPoly = residue_poly(deepest);
        let deg = gbar.degree().expect("nonzero code has monic deepest generator");
        let k = n - deg;
        let q = field.order();
        let count = q.checked_pow(k as u32).ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            budget,
        })?;
        if count > budget {
            return Err(Error::BudgetExceeded { needed: count, budget });
        }
        let ctx = self.fact.residue_quotient_ctx();
        let gq = QuotientElement::new(ctx.clone(), gbar);
        // basis words: residue(g) * X^j for j < k
        let x = QuotientElement::new(
            ctx.clone(),
            Poly::new(Arc::clone(field), vec![
                crate::field::FieldElement::zero(field),
                crate::field::FieldElement::one(field),
            ]),
        );
        let mut basis = Vec::with_capacity(k);
        let mut cur = gq;
        for _ in 0..k {
            basis.push(cur.word());
            cur = cur.mul(&x);
        }
        let scalars: Vec<_> = field.elements().collect();
        min_weight_span(n, &basis, &scalars, |acc, c, b| *acc = acc.add(&c.mul(b)))
    }

    fn min_weight_direct(&self, budget: u128) -> Result<u64> {
        let n = self.fact.n() as usize;
        let (basis, digit_sets) = self.direct_span(budget)?;
        min_weight_mixed(n, &basis, &digit_sets, |acc, c, b| *acc = acc.add(&c.mul(b)))
    }

    /// Visits every codeword exactly once (the zero word first), as a
    /// coefficient slice of length n. Distinctness of the visited words
    /// follows from the componentwise decomposition.
    pub fn for_each_word(
        &self,
        budget: u128,
        mut visit: impl FnMut(&[RingElement]),
    ) -> Result<()> {
        let n = self.fact.n() as usize;
        let spec = self.fact.spec();
        if self.is_zero_code() {
            let zero: Vec<RingElement> = (0..n).map(|_| RingElement::zero(spec)).collect();
            visit(&zero);
            return Ok(());
        }
        let (basis, digit_sets) = self.direct_span(budget)?;
        walk_mixed(n, &basis, &digit_sets, |acc, c, b| *acc = acc.add(&c.mul(b)), |w| visit(w));
        Ok(())
    }

    /// Basis words and canonical digit ranges for the CRT mixed-radix
    /// enumeration of the ideal: component i contributes m_i * pi^{e_i} *
    /// phi-hat_i with m_i over representatives mod pi^{l - e_i}.
    fn direct_span(&self, budget: u128) -> Result<(Vec<Vec<RingElement>>, Vec<Vec<RingElement>>)> {
        let spec = self.fact.spec();
        let ell = spec.nilpotency();
        let count = self.cardinality();
        if count > budget {
            return Err(Error::BudgetExceeded { needed: count, budget });
        }
        let ctx = self.fact.quotient_ctx();
        let mut basis: Vec<Vec<RingElement>> = Vec::new();
        let mut digit_sets: Vec<Vec<RingElement>> = Vec::new();
        for i in 0..self.fact.m() {
            let e = self.exponents[i];
            if e == ell {
                continue;
            }
            let scale = RingElement::uniformizer(spec).pow(e as u128);
            let comp = QuotientElement::new(ctx.clone(), self.fact.phi_hat(i).mul_scalar(&scale));
            let x = QuotientElement::new(
                ctx.clone(),
                Poly::from_ints(Arc::clone(spec), &[0, 1]),
            );
            let residues = spec.residues_mod_pi_pow(ell - e);
            let mut cur = comp;
            for _ in 0..self.fact.degree(i) {
                basis.push(cur.word());
                digit_sets.push(residues.clone());
                cur = cur.mul(&x);
            }
        }
        Ok((basis, digit_sets))
    }
}

/// The pi-adic valuation of f in the component ring R[X]/<phi_i>: the minimum
/// coefficient valuation of f mod phi_i, or l when the remainder vanishes.
pub fn component_valuation(fact: &Factorization, f: &RingPoly, i: usize) -> u32 {
    let (_, rem) = f.divmod_monic(&fact.factors()[i]).expect("factors are monic");
    let ell = fact.spec().nilpotency();
    rem.coeffs().iter().map(|c| c.valuation()).min().unwrap_or(ell)
}

/// Recovers the exponent vector of the ideal generated by G.
pub fn exponents_from_generator(fact: &Factorization, g: &QuotientElement<RingElement>) -> Vec<u32> {
    (0..fact.m()).map(|i| component_valuation(fact, g.rep(), i)).collect()
}

/// The CRT idempotents iota_1, ..., iota_m of the quotient ring: iota_i^2 =
/// iota_i, pairwise products vanish, and they sum to 1.
pub fn idempotents(fact: &Arc<Factorization>) -> Result<Vec<QuotientElement<RingElement>>> {
    let ctx = fact.quotient_ctx();
    let mut out = Vec::with_capacity(fact.m());
    for i in 0..fact.m() {
        if fact.m() == 1 {
            out.push(QuotientElement::one(ctx.clone()));
            break;
        }
        let hat = fact.phi_hat(i);
        let (a, _) = bezout_coprime(&hat, &fact.factors()[i])?;
        out.push(QuotientElement::new(ctx.clone(), a.mul(&hat)));
    }
    Ok(out)
}

/// All (l+1)^m codes of the quotient ring, in lexicographic exponent order.
pub fn enumerate_codes(fact: &Arc<Factorization>, budget: u128) -> Result<Vec<ConstacyclicCode>> {
    let ell = fact.spec().nilpotency();
    let m = fact.m();
    let total = (u128::from(ell) + 1)
        .checked_pow(m as u32)
        .ok_or(Error::BudgetExceeded { needed: u128::MAX, budget })?;
    if total > budget {
        return Err(Error::BudgetExceeded { needed: total, budget });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut e = vec![0u32; m];
    loop {
        out.push(ConstacyclicCode { fact: Arc::clone(fact), exponents: e.clone() });
        // lexicographic odometer, most significant digit first
        let mut pos = m;
        while pos > 0 {
            pos -= 1;
            if e[pos] < ell {
                e[pos] += 1;
                for d in &mut e[pos + 1..] {
                    *d = 0;
                }
                break;
            }
            if pos == 0 {
                return Ok(out);
            }
        }
        if m == 0 {
            return Ok(out);
        }
    }
}

/// Odometer over a span of basis words with a common scalar set, tracking the
/// minimum nonzero Hamming weight. The word is updated incrementally: each
/// step changes one digit and touches one basis vector.
fn min_weight_span<S: crate::poly::Scalar>(
    n: usize,
    basis: &[Vec<S>],
    scalars: &[S],
    fma: impl Fn(&mut S, &S, &S),
) -> Result<u64> {
    let sets: Vec<Vec<S>> = basis.iter().map(|_| scalars.to_vec()).collect();
    min_weight_mixed(n, basis, &sets, fma)
}

fn min_weight_mixed<S: crate::poly::Scalar>(
    n: usize,
    basis: &[Vec<S>],
    digit_sets: &[Vec<S>],
    fma: impl Fn(&mut S, &S, &S),
) -> Result<u64> {
    if basis.is_empty() {
        return Err(Error::ZeroCode);
    }
    let mut best: Option<u64> = None;
    walk_mixed(n, basis, digit_sets, fma, |word| {
        let weight = word.iter().filter(|c| !c.is_zero()).count() as u64;
        if weight > 0 {
            best = Some(best.map_or(weight, |b| b.min(weight)));
        }
    });
    best.ok_or(Error::ZeroCode)
}

/// Visits every digit combination of the mixed-radix span once, starting
/// from the all-zero word. The word is updated incrementally: each odometer
/// step changes one digit and adds (c_new - c_old) * basis_j.
fn walk_mixed<S: crate::poly::Scalar>(
    n: usize,
    basis: &[Vec<S>],
    digit_sets: &[Vec<S>],
    fma: impl Fn(&mut S, &S, &S),
    mut visit: impl FnMut(&[S]),
) {
    assert_eq!(basis.len(), digit_sets.len());
    assert!(!basis.is_empty());
    let ctx = basis[0][0].ctx().clone();
    let mut digits = vec![0usize; basis.len()];
    let mut word: Vec<S> = (0..n).map(|_| S::zero(&ctx)).collect();
    loop {
        visit(&word);
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return;
            }
            let set = &digit_sets[pos];
            let old = digits[pos];
            let new = (old + 1) % set.len();
            digits[pos] = new;
            let delta = S::sub(&set[new], &set[old]);
            for (w, b) in word.iter_mut().zip(&basis[pos]) {
                fma(w, &delta, b);
            }
            if new != 0 {
                break;
            }
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::Factorization;
    use crate::poly::residue_poly;
    use crate::ring::ChainRingSpec;

    fn gr25_n6_instance() -> Arc<Factorization> {
        let r = ChainRingSpec::galois(25, 1).unwrap();
        let lambda = RingElement::from_int(&r, 4);
        Arc::new(Factorization::compute(&r, &lambda, 6).unwrap())
    }

    fn gr25_n6_code(fact: &Arc<Factorization>) -> ConstacyclicCode {
        ConstacyclicCode::from_exponents(fact, &[2, 2, 1, 0]).unwrap()
    }

    #[test]
    fn exponent_bounds() {
        let fact = gr25_n6_instance();
        assert!(ConstacyclicCode::from_exponents(&fact, &[3, 0, 0, 0]).is_err());
        assert!(ConstacyclicCode::from_exponents(&fact, &[0, 0, 0]).is_err());
        assert!(ConstacyclicCode::from_exponents(&fact, &[2, 2, 2, 2]).unwrap().is_zero_code());
    }

    #[test]
    fn gr25_n6_generator_tower() {
        let fact = gr25_n6_instance();
        let c = gr25_n6_code(&fact);
        let tower = c.generator_tower();
        assert_eq!(tower.index_sets, vec![vec![3], vec![2, 3]]);
        assert_eq!(tower.polys[0], fact.phi_subset(&[0, 1, 2]));
        assert_eq!(tower.polys[1], fact.phi_subset(&[0, 1]));
        // g_1 = (X^2+3X+9)(X+3) = 2 + 18X + 6X^2 + X^3
        let r = fact.spec().clone();
        assert_eq!(tower.polys[1], RingPoly::from_ints(r, &[2, 18, 6, 1]));
        // divisibility chain
        assert!(tower.polys[0].divides_exactly(&tower.polys[1]));
        assert!(fact.modulus_poly().divides_exactly(&tower.polys[0]));
    }

    #[test]
    fn degenerate_towers() {
        let fact = gr25_n6_instance();
        let whole = ConstacyclicCode::from_exponents(&fact, &[0; 4]).unwrap();
        let tower = whole.generator_tower();
        assert!(tower.polys.iter().all(|g| g.degree() == Some(0)));
        let zero = ConstacyclicCode::from_exponents(&fact, &[2; 4]).unwrap();
        let tower = zero.generator_tower();
        assert!(tower.polys.iter().all(|g| *g == fact.modulus_poly()));
        assert!(zero.canonical_generator().is_zero());
    }

    #[test]
    fn gr25_n6_check_tower() {
        let fact = gr25_n6_instance();
        let c = gr25_n6_code(&fact);
        let check = c.check_tower();
        assert_eq!(check[0], fact.phi_subset(&[2, 3]));
        assert_eq!(check[1], fact.phi_subset(&[3]));
        // G * H = 0 in the quotient
        assert!(c.canonical_generator().mul(&c.check_poly()).is_zero());
    }

    #[test]
    fn gr25_n6_cardinality() {
        let fact = gr25_n6_instance();
        assert_eq!(gr25_n6_code(&fact).cardinality(), 625);
        let whole = ConstacyclicCode::from_exponents(&fact, &[0; 4]).unwrap();
        assert_eq!(whole.cardinality(), 25u128.pow(6));
        let zero = ConstacyclicCode::from_exponents(&fact, &[2; 4]).unwrap();
        assert_eq!(zero.cardinality(), 1);
    }

    #[test]
    fn gr25_n6_membership() {
        let fact = gr25_n6_instance();
        let c = gr25_n6_code(&fact);
        let ctx = fact.quotient_ctx();
        let r = fact.spec().clone();
        let word: Vec<RingElement> =
            [10, 15, 5, 5, 0, 0].iter().map(|&k| RingElement::from_int(&r, k)).collect();
        let f = QuotientElement::from_word(ctx.clone(), word).unwrap();
        assert!(c.contains(&f, Membership::Crt));
        assert!(c.contains(&f, Membership::Check));
        // and it is 5 * g_1 as a word
        let five = RingElement::from_int(&r, 5);
        let g1 = QuotientElement::new(ctx.clone(), c.generator_tower().polys[1].clone());
        assert_eq!(g1.mul_scalar(&five), f);
        let g = c.canonical_generator();
        assert!(c.contains(&g, Membership::Crt));
        assert!(c.contains(&g, Membership::Check));
        let one = QuotientElement::one(ctx);
        assert!(!c.contains(&one, Membership::Crt));
        assert!(!c.contains(&one, Membership::Check));
    }

    #[test]
    fn idempotent_identities() {
        let fact = gr25_n6_instance();
        let iotas = idempotents(&fact).unwrap();
        assert_eq!(iotas.len(), 4);
        let ctx = fact.quotient_ctx();
        let mut sum = QuotientElement::zero(ctx.clone());
        for (i, a) in iotas.iter().enumerate() {
            assert_eq!(a.mul(a), *a, "iota_{i} idempotent");
            sum = sum.add(a);
            for b in &iotas[i + 1..] {
                assert!(a.mul(b).is_zero());
            }
        }
        assert_eq!(sum, QuotientElement::one(ctx));
    }

    #[test]
    fn gr25_n6_zero_set_and_bch() {
        let fact = gr25_n6_instance();
        let c = gr25_n6_code(&fact);
        assert_eq!(c.residue_zero_set(), vec![1, 3, 5]);
        assert_eq!(c.bch_bound(true).unwrap(), 4);
        assert_eq!(c.bch_bound(false).unwrap(), 4);
        let open = ConstacyclicCode::from_exponents(&fact, &[2, 0, 0, 0]).unwrap();
        assert_eq!(open.residue_zero_set(), vec![1, 5]);
        assert_eq!(open.bch_bound(true).unwrap(), 2);
        let whole = ConstacyclicCode::from_exponents(&fact, &[0; 4]).unwrap();
        assert!(whole.residue_zero_set().is_empty());
        assert_eq!(whole.bch_bound(true).unwrap(), 1);
        let zero = ConstacyclicCode::from_exponents(&fact, &[2; 4]).unwrap();
        assert!(matches!(zero.bch_bound(true), Err(Error::ZeroCode)));
    }

    #[test]
    fn wraparound_run_detected() {
        // Q = {9, 11, 1} is the run 9, 11, 13=1 of step t=2 wrapping mod 12
        let fact = gr25_n6_instance();
        let c = ConstacyclicCode::from_exponents(&fact, &[2, 0, 1, 2]).unwrap();
        assert_eq!(c.residue_zero_set(), vec![1, 5, 9]);
        // slots k: 1->0, 5->2, 9->4: no two adjacent, wrap or not
        assert_eq!(c.bch_bound(true).unwrap(), 2);
        let c = ConstacyclicCode::from_exponents(&fact, &[2, 1, 2, 2]).unwrap();
        // Q = {1,5} u {7,11} u {9} = slots 0,2,3,4,5: run 2,3,4,5,0 wraps
        assert_eq!(c.bch_bound(true).unwrap(), 6);
        assert_eq!(c.bch_bound(false).unwrap(), 5);
    }

    #[test]
    fn gr25_n6_min_weight() {
        let fact = gr25_n6_instance();
        let c = gr25_n6_code(&fact);
        assert_eq!(c.min_weight_exact(WeightStrategy::Residue, DEFAULT_BUDGET).unwrap(), 4);
        assert_eq!(c.min_weight_exact(WeightStrategy::Direct, DEFAULT_BUDGET).unwrap(), 4);
        let whole = ConstacyclicCode::from_exponents(&fact, &[0; 4]).unwrap();
        assert_eq!(whole.min_weight_exact(WeightStrategy::Residue, DEFAULT_BUDGET).unwrap(), 1);
        let zero = ConstacyclicCode::from_exponents(&fact, &[2; 4]).unwrap();
        assert!(matches!(
            zero.min_weight_exact(WeightStrategy::Residue, DEFAULT_BUDGET),
            Err(Error::ZeroCode)
        ));
        assert!(matches!(
            whole.min_weight_exact(WeightStrategy::Direct, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn component_code_weight() {
        // e = (2,2,2,0): only component 4 survives, a 25-element code
        let fact = gr25_n6_instance();
        let c = ConstacyclicCode::from_exponents(&fact, &[2, 2, 2, 0]).unwrap();
        assert_eq!(c.cardinality(), 25);
        let direct = c.min_weight_exact(WeightStrategy::Direct, DEFAULT_BUDGET).unwrap();
        let residue = c.min_weight_exact(WeightStrategy::Residue, DEFAULT_BUDGET).unwrap();
        assert_eq!(direct, residue);
    }

    #[test]
    fn enumeration_and_roundtrip() {
        let fact = gr25_n6_instance();
        let codes = enumerate_codes(&fact, DEFAULT_BUDGET).unwrap();
        assert_eq!(codes.len(), 81);
        let mut seen = std::collections::BTreeSet::new();
        for c in &codes {
            assert!(seen.insert(c.exponents().to_vec()));
            let g = c.canonical_generator();
            assert_eq!(exponents_from_generator(&fact, &g), c.exponents());
        }
    }

    #[test]
    fn encode_and_annihilator() {
        let fact = gr25_n6_instance();
        let c = gr25_n6_code(&fact);
        let r = fact.spec().clone();
        assert_eq!(c.encode(&RingPoly::one(r.clone())), c.canonical_generator());
        assert!(c.encode(&RingPoly::zero(r.clone())).is_zero());
        let pi_msg = RingPoly::from_ints(r.clone(), &[5]);
        let w = c.encode(&pi_msg);
        assert!(c.contains(&w, Membership::Crt));
        let ann = c.annihilator();
        assert_eq!(ann.exponents(), &[0, 0, 1, 2]);
        assert_eq!(
            c.cardinality() * ann.cardinality(),
            r.size().pow(6)
        );
        // annihilator really annihilates
        assert!(c.canonical_generator().mul(&ann.canonical_generator()).is_zero());
    }

    #[test]
    fn residue_tower_consistency() {
        let fact = gr25_n6_instance();
        let c = gr25_n6_code(&fact);
        let tower = c.generator_tower();
        // residue of the deepest generator divides X^n - lambda_bar
        let gbar = residue_poly(tower.polys.last().unwrap());
        let modbar = residue_poly(&fact.modulus_poly());
        assert!(modbar.divides_exactly(&gbar));
    }
}
