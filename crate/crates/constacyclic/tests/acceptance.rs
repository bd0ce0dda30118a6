//! Acceptance gate: one pass/fail line per criterion, all must pass.

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use constacyclic::code::{
    enumerate_codes, exponents_from_generator, ConstacyclicCode, Membership, WeightStrategy,
};
use constacyclic::factor::Factorization;
use constacyclic::pir::{
    brute_ideal_lattice, is_principal_quotient, verify_chain_quotient, Isometry, PirSpec,
    Principality, SmallRingTable,
};
use constacyclic::poly::{bezout_coprime, residue_poly, FieldPoly, RingPoly};
use constacyclic::{ChainRingSpec, Error, QuotientElement, RingElement};

const BUDGET: u128 = 1_000_000;

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn example_instance() -> Arc<Factorization> {
    let r = ChainRingSpec::galois(25, 1).unwrap();
    let lambda = RingElement::from_int(&r, 4);
    Arc::new(Factorization::compute(&r, &lambda, 6).unwrap())
}

fn random_word(
    fact: &Factorization,
    rng: &mut StdRng,
) -> QuotientElement<RingElement> {
    let spec = fact.spec();
    let m = spec.size();
    let word: Vec<RingElement> = (0..fact.n())
        .map(|_| RingElement::from_int(spec, rng.gen_range(0..m as i64)))
        .collect();
    QuotientElement::from_word(fact.quotient_ctx(), word).unwrap()
}

fn word_key(word: &[RingElement]) -> Vec<u64> {
    word.iter().flat_map(|c| c.canonical_coeffs().concat()).collect()
}

// GR(25,1), n=6, lambda=4 end to end: t, cosets, residue factors, lifted
// factors, exact product.
fn criterion_1() -> Check {
    let fact = example_instance();
    let part = fact.partition();
    ensure!(part.t() == 2, "t = {} != 2", part.t());
    let expected: &[&[u64]] = &[&[1, 5], &[3], &[7, 11], &[9]];
    ensure!(
        part.cosets().iter().map(|c| c.as_slice()).eq(expected.iter().copied()),
        "coset partition mismatch: {:?}",
        part.cosets()
    );
    let f5 = fact.spec().residue_field().clone();
    let residue_expected: Vec<FieldPoly> = [
        vec![-2i64, 1],
        vec![-1, 2, 1],
        vec![-3, 1],
        vec![-1, -2, 1],
    ]
    .iter()
    .map(|c| FieldPoly::from_ints(f5.clone(), c))
    .collect();
    for f in fact.residue_factors() {
        ensure!(residue_expected.contains(f), "unexpected residue factor {f}");
    }
    let r = fact.spec().clone();
    let lifted_expected: Vec<RingPoly> = [
        vec![9i64, 3, 1],
        vec![3, 1],
        vec![9, -3, 1],
        vec![-3, 1],
    ]
    .iter()
    .map(|c| RingPoly::from_ints(r.clone(), c))
    .collect();
    for f in fact.factors() {
        ensure!(lifted_expected.contains(f), "unexpected lifted factor {f}");
    }
    ensure!(fact.factors().len() == 4, "expected 4 factors");
    ensure!(fact.verify(), "factorization identities failed");
    Ok(())
}

// Exponents (2,2,1,0): towers, zero set, BCH bound, min weight, membership.
fn criterion_2() -> Check {
    let fact = example_instance();
    let code = ConstacyclicCode::from_exponents(&fact, &[2, 2, 1, 0]).unwrap();
    let tower = code.generator_tower();
    ensure!(tower.polys[0] == fact.phi_subset(&[0, 1, 2]), "g0 mismatch");
    let r = fact.spec().clone();
    ensure!(
        tower.polys[1] == RingPoly::from_ints(r.clone(), &[2, 18, 6, 1]),
        "g1 != 2+18X+6X^2+X^3, got {}",
        tower.polys[1]
    );
    let check = code.check_tower();
    ensure!(check[0] == fact.phi_subset(&[2, 3]), "h0 mismatch");
    ensure!(check[1] == fact.phi_subset(&[3]), "h1 mismatch");
    ensure!(code.residue_zero_set() == vec![1, 3, 5], "residue zero set mismatch");
    ensure!(code.bch_bound(true).unwrap() == 4, "BCH bound != 4");
    let wr = code.min_weight_exact(WeightStrategy::Residue, BUDGET).unwrap();
    let wd = code.min_weight_exact(WeightStrategy::Direct, BUDGET).unwrap();
    ensure!(wr == 4 && wd == 4, "min weight (residue {wr}, direct {wd}) != 4");
    let word: Vec<RingElement> =
        [10i64, 15, 5, 5, 0, 0].iter().map(|&k| RingElement::from_int(&r, k)).collect();
    let f = QuotientElement::from_word(fact.quotient_ctx(), word).unwrap();
    ensure!(f.hamming_weight() == 4, "member word weight != 4");
    ensure!(code.contains(&f, Membership::Crt), "crt membership failed");
    ensure!(code.contains(&f, Membership::Check), "check membership failed");
    Ok(())
}

// 81 pairwise distinct ideals; tower divisibility, exponent round trip,
// G*H = 0, and crt/check agreement on 200 random words per code.
fn criterion_3() -> Check {
    let fact = example_instance();
    let codes = enumerate_codes(&fact, BUDGET).unwrap();
    ensure!(codes.len() == 81, "expected 81 codes, got {}", codes.len());
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let mut seen = BTreeSet::new();
    for code in &codes {
        ensure!(seen.insert(code.exponents().to_vec()), "duplicate exponents");
        let tower = code.generator_tower();
        ensure!(
            fact.modulus_poly().divides_exactly(&tower.polys[0]),
            "g0 does not divide the modulus for {:?}",
            code.exponents()
        );
        for v in 1..tower.polys.len() {
            ensure!(
                tower.polys[v - 1].divides_exactly(&tower.polys[v]),
                "tower divisibility broke at level {v} for {:?}",
                code.exponents()
            );
        }
        let g = code.canonical_generator();
        ensure!(
            exponents_from_generator(&fact, &g) == code.exponents(),
            "round trip failed for {:?}",
            code.exponents()
        );
        ensure!(
            g.mul(&code.check_poly()).is_zero(),
            "G*H != 0 for {:?}",
            code.exponents()
        );
        for _ in 0..200 {
            let f = random_word(&fact, &mut rng);
            ensure!(
                code.contains(&f, Membership::Crt) == code.contains(&f, Membership::Check),
                "membership methods disagree for {:?}",
                code.exponents()
            );
        }
    }
    Ok(())
}

// Brute-force cardinality equals p^{r * sum d_i (l - e_i)} wherever the
// enumeration fits the budget. The naive exponent m*l - sum d_i e_i printed
// alongside the count formula in the source material is wrong whenever some
// d_i > 1 (the whole ring would get 5^8 instead of 5^12); the component
// formula is what the brute count confirms.
fn criterion_4() -> Check {
    let fact = example_instance();
    let whole = ConstacyclicCode::from_exponents(&fact, &[0; 4]).unwrap();
    let naive_exponent = fact.m() as u32 * 2;
    ensure!(
        whole.cardinality_exponent() == 12 && naive_exponent == 8,
        "discrepancy documentation failed"
    );
    let mut checked = 0;
    for code in enumerate_codes(&fact, BUDGET).unwrap() {
        if code.cardinality() > BUDGET {
            continue;
        }
        let mut words: HashSet<Vec<u64>> = HashSet::new();
        code.for_each_word(BUDGET, |w| {
            words.insert(word_key(w));
        })
        .unwrap();
        ensure!(
            words.len() as u128 == code.cardinality(),
            "brute count {} != formula {} for {:?}",
            words.len(),
            code.cardinality(),
            code.exponents()
        );
        checked += 1;
    }
    ensure!(checked > 0, "no code fit the budget");
    Ok(())
}

// BCH bound is a lower bound for the exact minimum weight on three instances.
fn criterion_5() -> Check {
    let instances: [(&str, u64, i64); 3] =
        [("GR(25,1)", 6, 4), ("GR(5,1)", 6, -1), ("GR(4,1)", 3, 1)];
    for (ring, n, lam) in instances {
        let spec = ChainRingSpec::parse(ring).unwrap();
        let lambda = RingElement::from_int(&spec, lam);
        let fact = Arc::new(Factorization::compute(&spec, &lambda, n).unwrap());
        for code in enumerate_codes(&fact, BUDGET).unwrap() {
            if code.is_zero_code() {
                continue;
            }
            let w = match code.min_weight_exact(WeightStrategy::Residue, BUDGET) {
                Ok(w) => w,
                Err(Error::BudgetExceeded { .. }) => continue,
                Err(e) => return Err(format!("weight search failed: {e}")),
            };
            for wrap in [true, false] {
                let b = code.bch_bound(wrap).unwrap();
                ensure!(
                    b <= w,
                    "BCH bound {b} > min weight {w} for {ring}, n={n}, e={:?}, wrap={wrap}",
                    code.exponents()
                );
            }
        }
    }
    Ok(())
}

// Both weight strategies agree on every code of the example instance that
// fits the budget.
fn criterion_6() -> Check {
    let fact = example_instance();
    let mut compared = 0;
    for code in enumerate_codes(&fact, BUDGET).unwrap() {
        if code.is_zero_code() || code.cardinality() > BUDGET {
            continue;
        }
        let direct = code.min_weight_exact(WeightStrategy::Direct, BUDGET).unwrap();
        let residue = code.min_weight_exact(WeightStrategy::Residue, BUDGET).unwrap();
        ensure!(
            direct == residue,
            "strategies disagree ({direct} vs {residue}) for {:?}",
            code.exponents()
        );
        compared += 1;
    }
    ensure!(compared > 0, "no code fit the budget");
    Ok(())
}

// The isometry f(X) -> f(-X) from GR(25,1)[X]/<X^3-24> onto the cyclic
// quotient preserves weight and multiplication; images of codes are ideals.
fn criterion_7() -> Check {
    let spec = ChainRingSpec::galois(25, 1).unwrap();
    let lambda = RingElement::from_int(&spec, 24);
    let iso = Isometry::new(&spec, 3, &lambda).unwrap();
    // monomial-coefficient probes: every word over a transversal of 5Z_25
    for a in 0..5i64 {
        for b in 0..5i64 {
            for c in 0..5i64 {
                let f = QuotientElement::from_word(
                    iso.src_ctx().clone(),
                    vec![
                        RingElement::from_int(&spec, a * 5),
                        RingElement::from_int(&spec, b * 5),
                        RingElement::from_int(&spec, c * 5),
                    ],
                )
                .unwrap();
                let g = iso.apply(&f).unwrap();
                ensure!(
                    f.hamming_weight() == g.hamming_weight(),
                    "weight not preserved at ({a},{b},{c})"
                );
            }
        }
    }
    let fact = Arc::new(Factorization::compute(&spec, &lambda, 3).unwrap());
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    for _ in 0..1000 {
        let f = random_word(&fact, &mut rng);
        let g = random_word(&fact, &mut rng);
        ensure!(
            iso.apply(&f.mul(&g)).unwrap() == iso.apply(&f).unwrap().mul(&iso.apply(&g).unwrap()),
            "multiplicativity failed"
        );
        ensure!(
            iso.apply(&f.add(&g)).unwrap() == iso.apply(&f).unwrap().add(&iso.apply(&g).unwrap()),
            "additivity failed"
        );
        ensure!(
            f.hamming_weight() == iso.apply(&f).unwrap().hamming_weight(),
            "weight not preserved on random word"
        );
    }
    // image of every constacyclic code is closed under the cyclic shift
    for code in enumerate_codes(&fact, BUDGET).unwrap() {
        let mut images: HashSet<Vec<u64>> = HashSet::new();
        let mut words = Vec::new();
        code.for_each_word(BUDGET, |w| words.push(w.to_vec())).unwrap();
        for w in &words {
            let f = QuotientElement::from_word(iso.src_ctx().clone(), w.clone()).unwrap();
            images.insert(word_key(&iso.apply(&f).unwrap().word()));
        }
        for w in &words {
            let f = QuotientElement::from_word(iso.src_ctx().clone(), w.clone()).unwrap();
            let img = iso.apply(&f).unwrap();
            let mut shifted = img.word();
            shifted.rotate_right(1);
            ensure!(
                images.contains(&word_key(&shifted)),
                "image of {:?} not shift-closed",
                code.exponents()
            );
        }
    }
    Ok(())
}

// Principality boundary: criterion verdicts plus independent brute-force
// confirmation of the two Z4 quotients.
fn criterion_8() -> Check {
    let z25 = ChainRingSpec::galois(25, 1).unwrap();
    let pir = PirSpec::new(vec![z25.clone()]).unwrap();
    let rep = is_principal_quotient(&pir, 6, &[RingElement::from_int(&z25, 4)]).unwrap();
    ensure!(rep.verdict == Principality::Principal, "Z25, n=6 should be principal");

    let f2 = ChainRingSpec::galois(2, 1).unwrap();
    let pir = PirSpec::new(vec![f2.clone()]).unwrap();
    let rep = is_principal_quotient(&pir, 4, &[RingElement::one(&f2)]).unwrap();
    ensure!(rep.verdict == Principality::Principal, "GF(2), n=4 should be principal");

    let z4 = ChainRingSpec::galois(4, 1).unwrap();
    let pir = PirSpec::new(vec![z4.clone()]).unwrap();
    let rep = is_principal_quotient(&pir, 2, &[RingElement::one(&z4)]).unwrap();
    ensure!(rep.verdict == Principality::NotPrincipal, "Z4, n=2 should not be principal");

    let t = SmallRingTable::parse_quotient("Z4[X]/(X^2-1)").unwrap();
    let lattice = brute_ideal_lattice(&t);
    ensure!(!lattice.principal && lattice.local && !lattice.chain, "Z4[X]/(X^2-1) flags wrong");
    let two = t.find_label("2").unwrap();
    let xp1 = t.find_label("1 + X").unwrap();
    let witness: Vec<u16> = t.ideal(&[two, xp1]).into_iter().collect();
    ensure!(lattice.ideals.contains(&witness), "<2, X+1> missing from the lattice");
    let principal_ideals: Vec<Vec<u16>> =
        (0..t.size() as u16).map(|g| t.ideal(&[g]).into_iter().collect()).collect();
    ensure!(!principal_ideals.contains(&witness), "<2, X+1> should not be principal");

    let t = SmallRingTable::parse_quotient("Z4[X]/(X^2-3)").unwrap();
    let lattice = brute_ideal_lattice(&t);
    ensure!(
        lattice.chain && lattice.principal && lattice.ideals.len() == 5,
        "Z4[X]/(X^2-3) should be a chain with 5 ideals"
    );
    Ok(())
}

// GR(9,1)[X]/<X^3-4> is a chain ring: nilpotency 6 and pi^3 = 3u for a unit.
fn criterion_9() -> Check {
    let z9 = ChainRingSpec::galois(9, 1).unwrap();
    let lambda = RingElement::from_int(&z9, 4);
    let rep = verify_chain_quotient(&z9, 3, &lambda).unwrap();
    ensure!(rep.is_chain, "not certified as a chain ring: {:?}", rep.failure);
    ensure!(rep.nilpotency == Some(6), "nilpotency {:?} != 6", rep.nilpotency);
    let u = rep.eisenstein_unit.ok_or("missing Eisenstein unit")?;
    let ctx = u.ctx().clone();
    let pi = QuotientElement::from_word(
        ctx,
        vec![
            lambda.neg(),
            RingElement::one(&z9),
            RingElement::zero(&z9),
        ],
    )
    .unwrap();
    let three = RingElement::from_int(&z9, 3);
    ensure!(pi.pow(3) == u.mul_scalar(&three), "pi^3 != 3u");
    Ok(())
}

// 50 random Hensel instances: exact product, matching residues, pairwise
// Bezout certificates.
fn criterion_10() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0010);
    let mut done = 0;
    while done < 50 {
        let p: u64 = [2, 3, 5][rng.gen_range(0..3)];
        let s: u32 = rng.gen_range(1..=3);
        let n: u64 = rng.gen_range(1..=12);
        if num_integer::gcd(n, p) != 1 {
            continue;
        }
        let q = p.pow(s);
        let spec = ChainRingSpec::galois(q, 1).unwrap();
        let lam_int = loop {
            let k = rng.gen_range(1..q as i64);
            if num_integer::gcd(k as u64, p) == 1 {
                break k;
            }
        };
        let lambda = RingElement::from_int(&spec, lam_int);
        let fact = Factorization::compute(&spec, &lambda, n)
            .map_err(|e| format!("factorization failed for GR({q},1), n={n}, lambda={lam_int}: {e}"))?;
        ensure!(
            fact.verify(),
            "product or residue identity failed for GR({q},1), n={n}, lambda={lam_int}"
        );
        for i in 0..fact.m() {
            for j in i + 1..fact.m() {
                let (a, b) = bezout_coprime(&fact.factors()[i], &fact.factors()[j])
                    .map_err(|e| format!("Bezout failed: {e}"))?;
                let lhs = a.mul(&fact.factors()[i]).add(&b.mul(&fact.factors()[j]));
                ensure!(
                    lhs == RingPoly::one(spec.clone()),
                    "Bezout certificate invalid for GR({q},1), n={n}"
                );
            }
        }
        // residues must match the residue factorization
        for (f, fbar) in fact.factors().iter().zip(fact.residue_factors()) {
            ensure!(&residue_poly(f) == fbar, "residue mismatch");
        }
        done += 1;
    }
    Ok(())
}

#[test]
fn acceptance_gate() {
    let criteria: Vec<(u32, &str, Box<dyn Fn() -> Check>)> = vec![
        (1, "worked example end-to-end", Box::new(criterion_1)),
        (2, "code (2,2,1,0) towers, BCH, weight, membership", Box::new(criterion_2)),
        (3, "81-ideal census with dual membership", Box::new(criterion_3)),
        (4, "brute-force cardinality oracle", Box::new(criterion_4)),
        (5, "BCH soundness sweep", Box::new(criterion_5)),
        (6, "weight strategies agree", Box::new(criterion_6)),
        (7, "isometry onto the cyclic quotient", Box::new(criterion_7)),
        (8, "principality boundary", Box::new(criterion_8)),
        (9, "Galois chain quotient certificate", Box::new(criterion_9)),
        (10, "random Hensel suite", Box::new(criterion_10)),
    ];
    let mut failures = Vec::new();
    for (idx, name, check) in &criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|payload| {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            Err(msg)
        });
        match outcome {
            Ok(()) => println!("criterion {idx} ({name}): PASS"),
            Err(msg) => {
                println!("criterion {idx} ({name}): FAIL - {msg}");
                failures.push(*idx);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
