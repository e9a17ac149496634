//! End-to-end acceptance checks. Each criterion runs the library, compares
//! against an independent reference computation or a published value, and
//! prints one PASS/FAIL line. The process exits non-zero if any fails.

mod oracle;

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use optbch::analysis::{
    extend_parameters, extended_dual, macwilliams_transform, min_distance, pless_fourth_moment_a3,
    trace_code_equals_dual, trace_vectors, weight_distribution_exhaustive, AnalysisBudget, DistanceInfo,
    Provenance, WeightDistribution,
};
use optbch::bits::BitVector;
use optbch::bounds::{certify, empirical_threshold};
use optbch::cyclotomy::check_leader_range;
use optbch::families::{predict, FamilyKind, FamilySpec, Variant};
use optbch::field::is_primitive_modulus;
use optbch::poly::factor_x_n_minus_one;
use optbch::{BchDesign, BinaryPolynomial, CyclicCode, FieldSpec};

use oracle::{ball, measure_bch, Gf, ParityCheck};

type Check = Result<String, String>;
type Terms = &'static [(usize, u64)];
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(elapsed: Duration, limit_secs: f64) -> Result<(), String> {
    ensure(
        elapsed.as_secs_f64() < limit_secs,
        format!("took {:.2}s, limit {limit_secs}s", elapsed.as_secs_f64()),
    )
}

fn dist(n: usize, terms: &[(usize, u64)]) -> WeightDistribution {
    WeightDistribution::from_counts(n, terms.iter().copied()).unwrap()
}

fn as_u64(wd: &WeightDistribution) -> BTreeMap<usize, u64> {
    wd.iter().map(|(w, c)| (w, u64::try_from(c).unwrap())).collect()
}

fn as_big(wd: &WeightDistribution) -> BTreeMap<usize, BigUint> {
    wd.iter().map(|(w, c)| (w, c.clone())).collect()
}

fn budget() -> AnalysisBudget {
    AnalysisBudget::default()
}

fn bch(n: usize, delta: usize, b: u64) -> CyclicCode {
    CyclicCode::bch(BchDesign::new(n, delta, b)).unwrap()
}

fn exact(info: &DistanceInfo) -> Option<usize> {
    info.exact()
}

/// Library `[n, k, d]` and dual distribution of a BCH code, checked against
/// the reference computation and the published values.
fn primary_with_dual(n: usize, b: u64, k: usize, d: usize, dual_k: usize, dual_terms: &[(usize, u64)]) -> Result<(), String> {
    let code = bch(n, 3, b);
    let info = min_distance(&code, &budget()).map_err(|e| e.to_string())?;
    let dual = weight_distribution_exhaustive(&code.dual().unwrap(), 26).map_err(|e| e.to_string())?;
    let expected = dist(n, dual_terms);
    ensure(code.dimension() == k, format!("k = {}", code.dimension()))?;
    ensure(exact(&info) == Some(d), format!("d in {}..={}", info.lower.value, info.upper.value))?;
    ensure(dual == expected, format!("dual enumerator {dual}"))?;
    ensure(dual.dimension() == Some(dual_k), "dual dimension")?;
    Ok(())
}

fn reference(n: usize, delta: usize, b: u64) -> oracle::Measured {
    measure_bch(n as u64, delta as u64, b)
}

fn criterion_1() -> Check {
    let start = Instant::now();
    primary_with_dual(51, 1, 43, 3, 8, &[(0, 1), (24, 204), (32, 51)])?;
    let elapsed = start.elapsed();
    let r = reference(51, 3, 1);
    ensure((r.k, r.d) == (43, 3), format!("reference [{}, {}, {}]", r.n, r.k, r.d))?;
    ensure(r.dual == BTreeMap::from([(0, 1), (24, 204), (32, 51)]), "reference dual")?;
    within(elapsed, 1.0)?;
    Ok(format!("[51,43,3], dual 1+204z^24+51z^32 in {:.3}s", elapsed.as_secs_f64()))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    primary_with_dual(455, 1, 443, 3, 12, &[(0, 1), (224, 3640), (256, 455)])?;
    let elapsed = start.elapsed();
    let r = reference(455, 3, 1);
    ensure((r.k, r.d) == (443, 3), format!("reference [{}, {}, {}]", r.n, r.k, r.d))?;
    ensure(r.dual == BTreeMap::from([(0, 1), (224, 3640), (256, 455)]), "reference dual")?;
    within(elapsed, 5.0)?;
    Ok(format!("[455,443,3], dual 1+3640z^224+455z^256 in {:.3}s", elapsed.as_secs_f64()))
}

/// Five-weight enumerator of the extended code's dual, written out from
/// its closed form.
fn five_weight(s: u32) -> BTreeMap<usize, u64> {
    let n = ((1u64 << (2 * s)) + 1) * ((1u64 << s) - 1);
    let w2 = 1u64 << (3 * s - 1);
    let c1 = (1u64 << (4 * s)) - 1 - n;
    let mut m = BTreeMap::new();
    for (w, c) in [
        (0, 1),
        (n + 1 - w2, n),
        (w2 - (1 << (2 * s - 1)), c1),
        (n + 1 - w2 + (1 << (2 * s - 1)), c1),
        (w2, n),
        (n + 1, 1),
    ] {
        *m.entry(w as usize).or_insert(0) += c;
    }
    m
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let mut lines = Vec::new();
    for s in [2u32, 3] {
        let spec = FamilySpec::new(FamilyKind::Type1, s, Variant::new(3, 1));
        let n = spec.length().unwrap() as usize;
        let code = CyclicCode::bch(spec.design().unwrap()).unwrap();
        let ext = extend_parameters(&min_distance(&code, &budget()).map_err(|e| e.to_string())?);
        let cert = certify(&ext).map_err(|e| e.to_string())?;
        ensure(
            (ext.n, ext.k, exact(&ext)) == (n + 1, n - 4 * s as usize, Some(4)),
            format!("s={s}: extended [{}, {}, {:?}]", ext.n, ext.k, exact(&ext)),
        )?;
        ensure(cert.optimal, format!("s={s}: not certified optimal"))?;
        // Sphere packing by hand: d = 4 fits, d = 5 does not.
        let red = BigUint::from(1u8) << (4 * s + 1);
        ensure(
            ball(n as u64 + 1, 1) <= red && ball(n as u64 + 1, 2) > red,
            format!("s={s}: reference sphere-packing arithmetic"),
        )?;
        let lib = extended_dual(&code, 26).map_err(|e| e.to_string())?;
        let closed = five_weight(s);
        ensure(as_u64(&lib) == closed, format!("s={s}: library extended dual {lib}"))?;
        let r = reference(n, 3, 1);
        ensure(r.ext_dual == closed, format!("s={s}: enumerated extended dual"))?;
        lines.push(format!("[{}, {}, 4] optimal", n + 1, n - 4 * s as usize));
    }
    let elapsed = start.elapsed();
    within(elapsed, 30.0)?;
    Ok(format!("{}; five-weight duals match, {:.2}s", lines.join(", "), elapsed.as_secs_f64()))
}

fn criterion_4() -> Check {
    let code = bch(51, 5, 1);
    let info = min_distance(&code, &budget()).map_err(|e| e.to_string())?;
    let ext = extend_parameters(&info);
    ensure(code.dimension() == 35 && exact(&info) == Some(5), "C(51,5,1) is not [51,35,5]")?;
    ensure((ext.n, ext.k, exact(&ext)) == (52, 35, Some(6)), "extension is not [52,35,6]")?;
    let r = reference(51, 5, 1);
    ensure((r.k, r.d, r.ext_d) == (35, 5, 6), "reference parameters")?;

    let hamming_like = bch(51, 3, 1);
    let dual = weight_distribution_exhaustive(&hamming_like.dual().unwrap(), 26).unwrap();
    let a3 = pless_fourth_moment_a3(&dual, 51, 43).map_err(|e| e.to_string())?;
    let h = ParityCheck::new(51, &oracle::bch_defining_set(51, 3, 1), &Gf::new(8));
    let direct = oracle::direct_weight3(&h);
    let from_transform = reference(51, 3, 1).code[&3].clone();
    ensure(a3 == BigUint::from(17u32), format!("Pless A3 = {a3}"))?;
    ensure(direct == 17, format!("direct A3 = {direct}"))?;
    ensure(from_transform == BigUint::from(17u32), "MacWilliams A3")?;
    Ok("[51,35,5], extended [52,35,6]; A3 = 17 by moment, direct count and transform".into())
}

fn small_family(kind: FamilyKind, s: u32, k: usize, d: usize, ext_d: usize, optimal_ext: bool) -> Result<(), String> {
    let spec = FamilySpec::new(kind, s, Variant::new(3, 1));
    let n = spec.length().unwrap() as usize;
    let code = CyclicCode::bch(spec.design().unwrap()).unwrap();
    let info = min_distance(&code, &budget()).map_err(|e| e.to_string())?;
    let ext = extend_parameters(&info);
    ensure(
        (code.dimension(), exact(&info), exact(&ext)) == (k, Some(d), Some(ext_d)),
        format!("{kind} s={s}: [{n}, {}, {:?}], extended d {:?}", code.dimension(), exact(&info), exact(&ext)),
    )?;
    if optimal_ext {
        ensure(certify(&ext).map_err(|e| e.to_string())?.optimal, format!("{kind} s={s}: extension not optimal"))?;
    }
    let r = reference(n, 3, 1);
    ensure((r.k, r.d, r.ext_d) == (k, d, ext_d), format!("{kind} s={s}: reference"))?;
    Ok(())
}

fn criterion_5() -> Check {
    let start = Instant::now();
    small_family(FamilyKind::Type2, 2, 15, 3, 4, false)?;
    small_family(FamilyKind::Type2, 3, 64, 3, 4, true)?;
    let elapsed = start.elapsed();
    within(elapsed, 5.0)?;
    Ok(format!("[21,15,3]/[22,15,4], [73,64,3]/[74,64,4] optimal, {:.2}s", elapsed.as_secs_f64()))
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let cases: [(u32, usize, usize, Terms, Terms); 2] = [
        (3, 15, 6, &[(0, 1), (8, 21), (12, 42)], &[(0, 1), (8, 21), (10, 42), (12, 42), (14, 21), (22, 1)]),
        (4, 77, 8, &[(0, 1), (40, 170), (48, 85)], &[(0, 1), (38, 85), (40, 170), (46, 170), (48, 85), (86, 1)]),
    ];
    let mut reference_ok = true;
    for (s, k, dual_k, dual_terms, ext_terms) in cases {
        let spec = FamilySpec::new(FamilyKind::Type3, s, Variant::new(3, 1));
        let n = spec.length().unwrap() as usize;
        let code = CyclicCode::bch(spec.design().unwrap()).unwrap();
        let info = min_distance(&code, &budget()).map_err(|e| e.to_string())?;
        ensure(code.dimension() == k && exact(&info) == Some(3), format!("s={s}: [{n}, {}]", code.dimension()))?;
        let dual = weight_distribution_exhaustive(&code.dual().unwrap(), 26).unwrap();
        ensure(dual == dist(n, dual_terms), format!("s={s}: dual {dual}"))?;
        ensure(dual.dimension() == Some(dual_k), format!("s={s}: dual dimension"))?;
        let ext = extended_dual(&code, 26).unwrap();
        ensure(ext == dist(n + 1, ext_terms), format!("s={s}: extended dual {ext}"))?;
        ensure(ext.dimension() == Some(dual_k + 1), format!("s={s}: extended dual dimension"))?;
        let r = reference(n, 3, 1);
        reference_ok &= r.dual == BTreeMap::from_iter(dual_terms.iter().copied())
            && r.ext_dual == BTreeMap::from_iter(ext_terms.iter().copied())
            && r.k == k
            && r.d == 3;
    }
    let elapsed = start.elapsed();
    ensure(reference_ok, "reference enumeration disagrees")?;
    within(elapsed, 5.0)?;
    Ok(format!("[21,15,3] and [85,77,3] with both dual enumerators, {:.2}s", elapsed.as_secs_f64()))
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let mut measured = Vec::new();
    for (s, k) in [(3u32, 12usize), (4, 69)] {
        let spec = FamilySpec::new(FamilyKind::Type3, s, Variant::new(5, 1));
        let n = spec.length().unwrap() as usize;
        let code = CyclicCode::bch(spec.design().unwrap()).unwrap();
        let info = min_distance(&code, &budget()).map_err(|e| e.to_string())?;
        ensure(info.lower.provenance == Provenance::DualEnumeration, format!("s={s}: {:?}", info.lower.provenance))?;
        let ext = extend_parameters(&info);
        ensure(
            (code.dimension(), exact(&info), exact(&ext)) == (k, Some(5), Some(6)),
            format!("s={s}: [{n}, {}, {:?}] / {:?}", code.dimension(), exact(&info), exact(&ext)),
        )?;
        measured.push((n, k));
    }
    let elapsed = start.elapsed();
    for (n, k) in measured {
        let r = reference(n, 5, 1);
        ensure((r.k, r.d, r.ext_d) == (k, 5, 6), format!("reference n={n}"))?;
    }
    within(elapsed, 60.0)?;
    Ok(format!("[21,12,5]/[22,12,6], [85,69,5]/[86,69,6], {:.2}s", elapsed.as_secs_f64()))
}

/// Direct threshold check, independent of the library: every `s'` from
/// `s` to the horizon gives dimension `n - 1 - (ℓ-1)s'` and a ball of
/// radius `ℓ` that overflows `2^{n-k}`.
fn reference_threshold(ell: u64, horizon: u32) -> Option<u32> {
    let passes = |s: u32| {
        let n = (1u64 << s) - 1;
        let cosets_ok = (1..=2 * ell - 3).step_by(2).all(|i| {
            let c = oracle::coset(n, i);
            i < n && c.len() == s as usize && c.iter().all(|&x| x >= i)
        });
        cosets_ok && ball(n, ell) > BigUint::from(1u8) << ((ell as u32 - 1) * s + 1)
    };
    let mut s = horizon;
    if !passes(s) {
        return None;
    }
    while s > 1 && passes(s - 1) {
        s -= 1;
    }
    Some(s)
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let expected = [3u32, 4, 6, 8, 11, 14, 17, 20, 23];
    let mut got = Vec::new();
    for (ell, want) in (2u32..=10).zip(expected) {
        let r = empirical_threshold(ell, 1, 30).map_err(|e| e.to_string())?;
        ensure(r.s_empirical == Some(want), format!("ell={ell}: {:?}", r.s_empirical))?;
        got.push(want);
    }
    let elapsed = start.elapsed();
    for (ell, want) in (2u64..=10).zip(expected) {
        ensure(reference_threshold(ell, 30) == Some(want), format!("reference ell={ell}"))?;
    }
    within(elapsed, 60.0)?;
    Ok(format!("s = {got:?}, {:.2}s", elapsed.as_secs_f64()))
}

fn no_enumeration() -> AnalysisBudget {
    AnalysisBudget {
        max_enum_dim: 0,
        support_budget: 0,
        workers: 1,
    }
}

fn criterion_9() -> Check {
    let start = Instant::now();
    for s in 4u32..=10 {
        let n = (1usize << s) - 1;
        let code = bch(n, 6, 0);
        let info = min_distance(&code, &no_enumeration()).map_err(|e| e.to_string())?;
        ensure(code.dimension() == (1 << s) - 2 - 2 * s as usize, format!("s={s}: k = {}", code.dimension()))?;
        ensure(
            exact(&info) == Some(6)
                && info.lower.provenance == Provenance::BchBound
                && info.upper.provenance == Provenance::SpherePacking
                && info.distribution.is_none(),
            format!("s={s}: {:?}..{:?}", info.lower, info.upper),
        )?;
        let red = BigUint::from(1u8) << (2 * s + 1);
        ensure(ball(n as u64, 2) <= red && ball(n as u64, 3) > red, format!("s={s}: reference pincer"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, 1.0)?;
    Ok(format!("s = 4..10 pinned at d = 6 without enumeration, {:.3}s", elapsed.as_secs_f64()))
}

fn criterion_10() -> Check {
    let start = Instant::now();
    let spec = FamilySpec::new(FamilyKind::Type1, 8, Variant::new(6, 0));
    let n = spec.length().unwrap();
    let (bound, size, _) = spec.coset_lemma();
    let lemma = check_leader_range(n, bound, size).map_err(|e| e.to_string())?;
    let field = Arc::new(FieldSpec::new(32).unwrap());
    let code = CyclicCode::bch_in(spec.design().unwrap(), field).map_err(|e| e.to_string())?;
    let info = min_distance(&code, &no_enumeration()).map_err(|e| e.to_string())?;
    ensure(lemma.pass, "coset lemma fails at s = 8")?;
    ensure(code.dimension() as u64 == n - 65, format!("k = {}", code.dimension()))?;
    ensure(exact(&info) == Some(6) && info.distribution.is_none(), "d is not pinned at 6")?;
    ensure(certify(&info).map_err(|e| e.to_string())?.optimal, "not certified optimal")?;
    for s in [4u32, 5] {
        let spec = FamilySpec::new(FamilyKind::Type1, s, Variant::new(3, 1));
        let n = spec.length().unwrap();
        let code = CyclicCode::bch(spec.design().unwrap()).unwrap();
        ensure(code.dimension() as u64 == n - 4 * s as u64, format!("s={s}: k = {}", code.dimension()))?;
        let p = predict(&spec).map_err(|e| e.to_string())?;
        let total = p.dual.unwrap().enumerator.total();
        ensure(total == BigUint::from(1u8) << (4 * s), format!("s={s}: dual counts sum to {total}"))?;
        // 1 + (2^{4s} - 1 - n) + n = 2^{4s}.
        ensure(1 + ((1u64 << (4 * s)) - 1 - n) + n == 1 << (4 * s), "identity")?;
    }
    let elapsed = start.elapsed();

    // Reference: odd i <= 2^8 - 1 lead cosets of size 32, dimension from
    // coset sizes, pincer arithmetic.
    let lemma_ref = (1..=255u64).step_by(2).all(|i| {
        let c = oracle::coset(n, i);
        c.len() == 32 && c.iter().all(|&x| x >= i)
    });
    ensure(lemma_ref, "reference coset check")?;
    let red = BigUint::from(1u8) << 65;
    ensure(ball(n, 2) <= red && ball(n, 3) > red, "reference pincer arithmetic")?;
    for s in [4u64, 5] {
        let n = ((1 << (2 * s)) + 1) * ((1 << s) - 1);
        ensure(oracle::bch_defining_set(n, 3, 1).len() as u64 == 4 * s, "reference dimension")?;
    }
    within(elapsed, 120.0)?;
    Ok(format!("n = {n}: k = n - 65, d = 6; s = 4,5 structure holds, {:.2}s", elapsed.as_secs_f64()))
}

/// A random cyclic code of odd length `<= 63` over a field of degree at
/// most 32, small enough that the code and its dual can both be enumerated.
fn random_cyclic(rng: &mut ChaCha8Rng) -> CyclicCode {
    loop {
        let n = 2 * rng.gen_range(1..=31) + 1u64;
        if oracle::ord2(n) > 32 {
            continue;
        }
        let leaders: Vec<u64> = optbch::cyclotomy::all_cosets(n).unwrap().leaders().collect();
        let picked: Vec<u64> = leaders.into_iter().filter(|_| rng.gen_bool(0.5)).collect();
        let field = Arc::new(FieldSpec::new(oracle::ord2(n).max(2)).unwrap());
        let code = CyclicCode::from_coset_representatives(n as usize, &picked, field).unwrap();
        if code.dimension().max(code.redundancy()) <= 22 {
            return code;
        }
    }
}

fn poly_mul_reference(a: &[bool], b: &[bool]) -> Vec<bool> {
    let mut out = vec![false; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] ^= y;
            }
        }
    }
    out
}

fn coefficients(p: &BinaryPolynomial) -> Vec<bool> {
    (0..=p.degree().unwrap()).map(|i| p.coeff(i)).collect()
}

fn alternate_modulus(m: u32, default: u64) -> u64 {
    ((1u64 << m) | 1..(1u64 << (m + 1)))
        .step_by(2)
        .find(|&mask| mask != default && is_primitive_modulus(mask, m))
        .unwrap()
}

fn criterion_11() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..50 {
        let code = random_cyclic(&mut rng);
        let (n, k) = (code.n(), code.dimension());
        let a = weight_distribution_exhaustive(&code, 26).map_err(|e| e.to_string())?;
        let b = weight_distribution_exhaustive(&code.dual().unwrap(), 26).map_err(|e| e.to_string())?;
        let b_from_a = macwilliams_transform(&a, k).map_err(|e| e.to_string())?;
        let back = macwilliams_transform(&b_from_a, n - k).map_err(|e| e.to_string())?;
        ensure(b_from_a == b, format!("code {i} (n={n}, k={k}): transform differs from enumeration"))?;
        ensure(back == a, format!("code {i} (n={n}, k={k}): double transform"))?;
    }

    let mut count = 0;
    for n in (1u64..=255).step_by(2) {
        let factors = factor_x_n_minus_one(n).map_err(|e| format!("n={n}: {e}"))?;
        let product = factors
            .iter()
            .fold(vec![true], |acc, f| poly_mul_reference(&acc, &coefficients(f)));
        let mut target = vec![false; n as usize + 1];
        target[0] = true;
        target[n as usize] = true;
        ensure(product == target, format!("n={n}: product is not x^n - 1"))?;
        let cosets = (0..n).filter(|&i| oracle::coset(n, i).iter().all(|&x| x >= i)).count();
        ensure(factors.len() == cosets, format!("n={n}: {} factors, {cosets} cosets", factors.len()))?;
        count += 1;
    }

    for (kind, s) in [(FamilyKind::Type1, 2u32), (FamilyKind::Type3, 3), (FamilyKind::Type3, 4)] {
        let spec = FamilySpec::new(kind, s, Variant::new(3, 1));
        let code = CyclicCode::bch(spec.design().unwrap()).unwrap();
        ensure(trace_code_equals_dual(&code, 26).unwrap(), format!("{kind} s={s}: trace code"))?;
        // Reference: every trace vector is orthogonal to every generator row.
        let rows = code.generator_rows();
        let traces: Vec<BitVector> = trace_vectors(&code, 26).unwrap();
        let distinct: HashSet<&BitVector> = traces.iter().collect();
        ensure(distinct.len() == traces.len(), format!("{kind} s={s}: trace map not injective"))?;
        for t in &traces {
            ensure(rows.iter().all(|r| !r.dot(t)), format!("{kind} s={s}: trace vector not in the dual"))?;
        }
    }

    for n in [21usize, 51, 73, 85] {
        for delta in [3usize, 5] {
            let m = oracle::ord2(n as u64);
            let standard = Arc::new(FieldSpec::new(m).unwrap());
            let other = Arc::new(FieldSpec::with_modulus(m, alternate_modulus(m, standard.modulus_mask())).unwrap());
            let a = CyclicCode::bch_in(BchDesign::new(n, delta, 1), standard).unwrap();
            let b = CyclicCode::bch_in(BchDesign::new(n, delta, 1), other).unwrap();
            let da = weight_distribution_exhaustive(&a.dual().unwrap(), 26).unwrap();
            let db = weight_distribution_exhaustive(&b.dual().unwrap(), 26).unwrap();
            ensure(da == db, format!("n={n}, δ={delta}: dual distribution depends on the modulus"))?;
            let r = measure_bch(n as u64, delta as u64, 1);
            ensure(as_u64(&da) == r.dual, format!("n={n}, δ={delta}: reference"))?;
            ensure(
                as_big(&macwilliams_transform(&da, a.redundancy()).unwrap()) == r.code,
                format!("n={n}, δ={delta}: code distribution"),
            )?;
        }
    }
    let alt = Gf::new_skipping(8, 1);
    ensure(alt.order(2) == 255, "reference alternate field")?;
    Ok(format!("50 random codes, {count} factorizations, 3 trace codes, 4 lengths under two moduli"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("type 1 s=2 [51,43,3] and its dual", criterion_1),
        ("type 1 s=3 [455,443,3] and its dual", criterion_2),
        ("type 1 extended codes optimal, five-weight duals", criterion_3),
        ("type 1 s=2 (5,1) code and A3", criterion_4),
        ("type 2 s=2,3", criterion_5),
        ("type 3 s=3,4 enumerators", criterion_6),
        ("type 3 (5,1) exact distances", criterion_7),
        ("threshold table", criterion_8),
        ("l=3 pincer for s=4..10", criterion_9),
        ("large-n structure", criterion_10),
        ("property suites", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
