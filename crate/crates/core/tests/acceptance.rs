//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
//! throughout. Every criterion runs even if an earlier one fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;

use matsuo_core::coeffs::{self, Generator, SubstitutionOracle, Word, WordPolynomial};
use matsuo_core::linalg::Matrix;
use matsuo_core::matsuo::{FormAlgebra, MatsuoAlgebra};
use matsuo_core::permgroups::{build_weyl_a, TranspositionSystem};
use matsuo_core::virasoro::{self, FusionResult, MinimalLabel};
use matsuo_core::zhu::{self, ZhuOptions};
use matsuo_core::Rational;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

fn symmetric(m: usize, alpha: Rational, beta: Rational) -> MatsuoAlgebra {
    MatsuoAlgebra::build(Arc::new(TranspositionSystem::symmetric(m).unwrap()), alpha, beta).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Transpositions `(a b)`, `a < b < m`, with the Gram matrix of `B_{α,β}`
/// written down directly from the support of each pair.
fn direct_gram(m: usize, alpha: &Rational, beta: &Rational) -> Vec<Vec<Rational>> {
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
    pairs
        .iter()
        .map(|&(a, b)| {
            pairs
                .iter()
                .map(|&(c, d)| {
                    let shared = [a == c, a == d, b == c, b == d].iter().filter(|&&x| x).count();
                    match shared {
                        2 => beta / &Rational::from_integer(2),
                        1 => alpha * beta / Rational::from_integer(8),
                        _ => Rational::zero(),
                    }
                })
                .collect()
        })
        .collect()
}

/// Leading principal minors by Gaussian elimination without pivoting.
fn leading_minors(mut g: Vec<Vec<Rational>>) -> Vec<Rational> {
    let n = g.len();
    let mut minors = Vec::with_capacity(n);
    let mut det = Rational::one();
    for k in 0..n {
        let pivot = g[k][k].clone();
        det = &det * &pivot;
        minors.push(det.clone());
        if pivot.is_zero() {
            // remaining minors are not needed once one vanishes
            break;
        }
        for i in k + 1..n {
            let factor = &g[i][k] / &pivot;
            if factor.is_zero() {
                continue;
            }
            for j in k..n {
                let sub = &factor * &g[k][j];
                g[i][j] = &g[i][j] - &sub;
            }
        }
    }
    minors
}

fn c_unitary(n: u32) -> Rational {
    let n = n as i64;
    Rational::one() - q(6, (n + 2) * (n + 3))
}

fn criterion_1() -> Check {
    let mut dims = Vec::new();
    for n in 1..=6 {
        let a = symmetric(n + 1, q(1, 2), q(1, 2));
        let report = a.form_report().map_err(|e| e.to_string())?;
        ensure(report.nullity == 0, || format!("nullity {} at n = {n}", report.nullity))?;
        let minors = leading_minors(direct_gram(n + 1, &q(1, 2), &q(1, 2)));
        ensure(!minors.last().unwrap().is_zero(), || format!("det = 0 at n = {n}"))?;
        dims.push(a.dim());
    }
    ensure(dims == [1, 3, 6, 10, 15, 21], || format!("dims {dims:?}"))?;
    Ok(format!("nullity 0, dims {dims:?}"))
}

fn criterion_2() -> Check {
    for n in 1..=6 {
        let a = symmetric(n + 1, q(1, 2), q(1, 2));
        let sig = a.form_report().map_err(|e| e.to_string())?.signature.as_array();
        ensure(sig == [a.dim(), 0, 0], || format!("signature {sig:?} at n = {n}"))?;
        // Sylvester's criterion on an independently assembled Gram matrix
        let minors = leading_minors(direct_gram(n + 1, &q(1, 2), &q(1, 2)));
        ensure(minors.len() == a.dim() && minors.iter().all(|m| m.is_positive()), || {
            format!("non-positive leading minor at n = {n}")
        })?;
    }
    Ok("signature (dim, 0, 0) for n = 1..6".into())
}

fn criterion_3() -> Check {
    let s3 = symmetric(3, q(1, 2), q(1, 2));
    let omega = s3.conformal_vector().map_err(|e| e.to_string())?;
    ensure(omega.coeffs().iter().all(|c| *c == q(4, 5)), || format!("omega = {omega:?}"))?;
    let c = s3.central_charge().map_err(|e| e.to_string())?;
    ensure(c == q(6, 5) && q(1, 2) + q(7, 10) == q(6, 5), || format!("c(S_3) = {c}"))?;
    for n in 1..=8u32 {
        let m = n as usize + 1;
        let a = symmetric(m, q(1, 2), q(1, 2));
        // (Σx | Σx) counts diagonal pairs and ordered pairs sharing one point
        let size = (m * (m - 1) / 2) as i64;
        let k = 2 * (m as i64 - 2);
        let sum_form = q(size, 4) + q(size * k, 32);
        let coeff = q(4, 1) / (q(k, 2) + q(4, 1));
        let expected_from_form = q(2, 1) * &coeff * &coeff * sum_form;
        let expected: Rational = (1..=n).map(c_unitary).sum();
        let got = a.central_charge().map_err(|e| e.to_string())?;
        ensure(got == expected && expected_from_form == expected, || {
            format!("n = {n}: got {got}, Σc_i = {expected}, 2(ω|ω) = {expected_from_form}")
        })?;
    }
    Ok("ω = (4/5)Σx^i for S_3, c = 6/5; c = Σ c_i for n = 1..8".into())
}

fn builtin_systems() -> Vec<(String, TranspositionSystem)> {
    let mut out = Vec::new();
    for m in 2..=12 {
        out.push((format!("S_{m}"), TranspositionSystem::symmetric(m).unwrap()));
    }
    for n in 1..=11 {
        out.push((format!("W(A_{n})"), build_weyl_a(n).unwrap().system));
    }
    out.retain(|(_, s)| s.len() <= 64);
    out
}

fn criterion_4() -> Check {
    let two = Rational::from_integer(2);
    let mut groups = 0;
    for (name, sys) in builtin_systems() {
        let a = MatsuoAlgebra::build(Arc::new(sys), q(1, 2), q(1, 2)).map_err(|e| e.to_string())?;
        let omega = a.conformal_vector().map_err(|e| e.to_string())?;
        for i in 0..a.dim() {
            let x = a.basis(i);
            let prod = a.multiply(&omega, &x).map_err(|e| e.to_string())?;
            ensure(prod == x.scale(&two), || format!("{name}: ω x^{i} != 2 x^{i}"))?;
        }
        groups += 1;
    }
    Ok(format!("{groups} built-in groups with dim <= 64"))
}

/// `Σ_t c_t G[t][c]` for a sparse vector.
fn pair_with_basis(gram: &Matrix, v: &[(usize, Rational)], c: usize) -> Rational {
    v.iter().map(|(t, coef)| coef * gram.get(*t, c)).sum()
}

fn criterion_5() -> Check {
    let mut triples = 0usize;
    let mut automorphism_pairs = 0usize;
    for (name, sys) in builtin_systems() {
        let a = MatsuoAlgebra::build(Arc::new(sys), q(1, 2), q(1, 2)).map_err(|e| e.to_string())?;
        ensure(a.validation().exhaustive, || format!("{name}: sampled validation"))?;
        let d = a.dim();
        let gram = a.gram();
        let products: Vec<Vec<(usize, Rational)>> =
            (0..d * d).map(|ab| a.basis_product(ab / d, ab % d)).collect();
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let lhs = pair_with_basis(gram, &products[x * d + y], z);
                    let rhs = pair_with_basis(gram, &products[y * d + z], x);
                    ensure(lhs == rhs, || format!("{name}: ({x},{y},{z})"))?;
                    triples += 1;
                }
            }
        }
        for i in 0..d {
            let rho: Vec<usize> = (0..d).map(|x| a.rho_index(i, x)).collect();
            for x in 0..d {
                ensure(rho[rho[x]] == x, || format!("{name}: rho_{i} not an involution"))?;
                for y in x..d {
                    let mut image: Vec<(usize, Rational)> =
                        products[x * d + y].iter().map(|(t, c)| (rho[*t], c.clone())).collect();
                    let mut target = products[rho[x] * d + rho[y]].clone();
                    image.sort();
                    target.sort();
                    ensure(image == target, || format!("{name}: rho_{i} on ({x},{y})"))?;
                    ensure(gram.get(rho[x], rho[y]) == gram.get(x, y), || {
                        format!("{name}: rho_{i} changes the form on ({x},{y})")
                    })?;
                    automorphism_pairs += 1;
                }
            }
        }
    }
    Ok(format!("{triples} invariance triples, {automorphism_pairs} automorphism pairs"))
}

fn criterion_6() -> Check {
    let h = |n: u32, r: u32, s: u32| virasoro::highest_weight(n, r, s).map_err(|e| e.to_string());
    let c = |n: u32| virasoro::central_charge_c(n).map_err(|e| e.to_string());
    let checks = [
        ("c_1", c(1)?, q(1, 2)),
        ("c_2", c(2)?, q(7, 10)),
        ("h(1; 2,1)", h(1, 2, 1)?, q(1, 2)),
        ("h(1; 1,2)", h(1, 1, 2)?, q(1, 16)),
        ("h(2; 1,3)", h(2, 1, 3)?, q(3, 5)),
        ("h(2; 3,1)", h(2, 3, 1)?, q(3, 2)),
    ];
    for (name, got, want) in &checks {
        ensure(got == want, || format!("{name} = {got}, expected {want}"))?;
    }
    Ok("c_1 = 1/2, c_2 = 7/10, h = 1/2, 1/16, 3/5, 3/2".into())
}

/// `h_{r,s}` evaluated from its defining formula in test code.
fn weight_oracle(n: u32, r: u32, s: u32) -> Rational {
    let (p, pp) = ((n + 2) as i64, (n + 3) as i64);
    let d = r as i64 * pp - s as i64 * p;
    q(d * d - 1, 4 * p * pp)
}

/// Standard truncated tensor rule for one Kac coordinate with modulus `p`.
fn truncated_range(a: u32, b: u32, p: u32) -> Vec<u32> {
    let lo = a.abs_diff(b) + 1;
    let hi = (a + b - 1).min(2 * p - a - b - 1);
    (lo..=hi).step_by(2).collect()
}

/// Fusion from the standard truncation formula, canonicalized by the same
/// lex-min rule applied in test code.
fn fusion_oracle(n: u32, a: (u32, u32), b: (u32, u32)) -> BTreeMap<(u32, u32), u32> {
    let mut out = BTreeMap::new();
    for r in truncated_range(a.0, b.0, n + 2) {
        for s in truncated_range(a.1, b.1, n + 3) {
            let key = (r, s).min((n + 2 - r, n + 3 - s));
            *out.entry(key).or_insert(0) += 1;
        }
    }
    out
}

fn as_map(f: &FusionResult) -> BTreeMap<(u32, u32), u32> {
    f.terms().map(|(l, m)| ((l.r(), l.s()), m)).collect()
}

fn criterion_7() -> Check {
    for n in 1..=12u32 {
        let mut by_weight: BTreeMap<Rational, Vec<(u32, u32)>> = BTreeMap::new();
        for r in 1..=n + 1 {
            for s in 1..=n + 2 {
                let w = weight_oracle(n, r, s);
                let lib = virasoro::highest_weight(n, r, s).map_err(|e| e.to_string())?;
                ensure(lib == w, || format!("h mismatch at n = {n}, ({r},{s})"))?;
                by_weight.entry(w).or_default().push((r, s));
            }
        }
        for (w, labels) in &by_weight {
            let (r, s) = labels[0];
            let mut expected = vec![(r, s), (n + 2 - r, n + 3 - s)];
            expected.sort();
            ensure(*labels == expected, || format!("n = {n}: weight {w} shared by {labels:?}"))?;
        }
        let scan = virasoro::weight_coincidence_scan(n).map_err(|e| e.to_string())?;
        ensure(scan.ok(), || format!("library scan fails at n = {n}"))?;
    }
    for n in 1..=10u32 {
        let set: Vec<(u32, u32)> = (0..=n / 2)
            .map(|k| {
                let r = 2 * k + 1;
                (r, 1).min((n + 2 - r, n + 2))
            })
            .collect();
        for &a in &set {
            for &b in &set {
                for key in fusion_oracle(n, a, b).keys() {
                    ensure(set.contains(key), || format!("n = {n}: {a:?} x {b:?} leaves the set"))?;
                }
            }
        }
        let lib_set = virasoro::odd_vacuum_column(n).map_err(|e| e.to_string())?;
        let closed = virasoro::fusion_closed(n, &lib_set).map_err(|e| e.to_string())?;
        ensure(closed && lib_set.len() == set.len(), || format!("library closure fails at n = {n}"))?;
    }
    Ok("weights coincide only for partners, n <= 12; {(2k+1,1)} closed, n <= 10".into())
}

fn criterion_8() -> Check {
    for n in 1..=8u32 {
        let labels = virasoro::canonical_labels(n).map_err(|e| e.to_string())?;
        let vac = MinimalLabel::vacuum(n).map_err(|e| e.to_string())?;
        for a in &labels {
            let unit = virasoro::fuse(&vac, a).map_err(|e| e.to_string())?;
            ensure(unit == FusionResult::single(*a), || format!("n = {n}: vacuum x {a:?}"))?;
            for b in &labels {
                let ab = virasoro::fuse(a, b).map_err(|e| e.to_string())?;
                let ba = virasoro::fuse(b, a).map_err(|e| e.to_string())?;
                ensure(ab == ba, || format!("n = {n}: {a:?} x {b:?} not commutative"))?;
                let oracle = fusion_oracle(n, (a.r(), a.s()), (b.r(), b.s()));
                ensure(as_map(&ab) == oracle, || format!("n = {n}: {a:?} x {b:?} differs from oracle"))?;
            }
        }
    }
    for n in 1..=4u32 {
        let labels = virasoro::canonical_labels(n).map_err(|e| e.to_string())?;
        for a in &labels {
            for b in &labels {
                let ab = virasoro::fuse(a, b).map_err(|e| e.to_string())?;
                for c in &labels {
                    let bc = virasoro::fuse(b, c).map_err(|e| e.to_string())?;
                    let left = virasoro::fuse_results(&ab, &FusionResult::single(*c)).map_err(|e| e.to_string())?;
                    let right = virasoro::fuse_results(&FusionResult::single(*a), &bc).map_err(|e| e.to_string())?;
                    ensure(left == right, || format!("n = {n}: ({a:?} {b:?}) {c:?}"))?;
                }
            }
        }
    }
    Ok("commutative with vacuum unit for n <= 8, associative for n <= 4".into())
}

fn shift_exponential(m: usize, sign: i64) -> Matrix {
    // Σ_t (sign J)^t / t! by explicit matrix powers
    let j = Matrix::from_fn(m, m, |a, b| if a == b + 1 { Rational::from_integer(sign) } else { Rational::zero() });
    let mut power = Matrix::identity(m);
    let mut sum = Matrix::identity(m);
    let mut fact = Rational::one();
    for t in 1..m {
        power = power.mul(&j);
        fact = fact * Rational::from_integer(t as i64);
        sum = Matrix::from_fn(m, m, |a, b| sum.get(a, b) + &(power.get(a, b) / &fact));
    }
    sum
}

fn criterion_9() -> Check {
    for m in 1..=20 {
        let e = coeffs::jordan_exp(m).map_err(|e| e.to_string())?.to_matrix();
        let inv = coeffs::jordan_exp_neg(m).map_err(|e| e.to_string())?.to_matrix();
        ensure(e == shift_exponential(m, 1) && inv == shift_exponential(m, -1), || {
            format!("exp(±J) differs from its power series at m = {m}")
        })?;
        ensure(e.mul(&inv) == Matrix::identity(m), || format!("exp(J) exp(-J) != I at m = {m}"))?;
    }
    let mut fact = Rational::one();
    for j in 0..=15usize {
        if j > 0 {
            fact = fact * Rational::from_integer(j as i64);
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let expected = WordPolynomial::monomial(Word::new(vec![Generator::E; j]), Rational::from_integer(sign) / &fact);
        ensure(coeffs::p_half(15, j) == expected, || format!("p_half at j = {j}"))?;
    }
    for n in 2..=10 {
        let report = coeffs::verify_substitution(n).map_err(|e| e.to_string())?;
        ensure(report.ok, || format!("substitution fails at N = {n}: {:?}", report.first_failure))?;
    }
    let qg = |t| WordPolynomial::generator(Generator::Q(t));
    let expected = qg(4).neg().add(&qg(2).mul(&qg(2)));
    for n in 5..=10 {
        let oracle = SubstitutionOracle::new(n).map_err(|e| e.to_string())?;
        ensure(oracle.raw_coefficient(n - 4, 4) == expected, || format!("oracle at N = {n}"))?;
        ensure(coeffs::p_zero(n, n - 4, 4) == expected, || format!("p_zero at N = {n}"))?;
    }
    Ok("exp(J)exp(-J) = I, m <= 20; p_half, j <= 15; substitution, N = 2..10; P(N-4,4) = -Q4 + Q2·Q2".into())
}

fn criterion_10() -> Check {
    let mut dims = Vec::new();
    for n in 1..=3 {
        let base = zhu::quotient_dimension(n, ZhuOptions::default()).map_err(|e| e.to_string())?;
        ensure(base.ideal_dim + base.quotient_dim == base.group_order, || format!("n = {n}: dims do not add up"))?;
        for seed in 0..8 {
            let opts = ZhuOptions {
                shuffle_seed: Some(seed),
                ..ZhuOptions::default()
            };
            let shuffled = zhu::quotient_dimension(n, opts).map_err(|e| e.to_string())?;
            ensure(shuffled.quotient_dim == base.quotient_dim, || format!("n = {n}, seed {seed}"))?;
        }
        dims.push(base.quotient_dim);
    }
    ensure(dims[0] == 2, || format!("n = 1 gives {}", dims[0]))?;
    Ok(format!("quotient dims {dims:?} for n = 1..3, stable under 8 generator orders"))
}

fn criterion_11() -> Check {
    let a = symmetric(3, q(4, 1), q(1, 1));
    let report = a.form_report().map_err(|e| e.to_string())?;
    ensure(report.nullity == 2, || format!("nullity {}", report.nullity))?;
    let quot = a.nondegenerate_quotient().map_err(|e| e.to_string())?;
    ensure(quot.dim() == 1, || format!("quotient dim {}", quot.dim()))?;
    let gram = a.gram();
    for r in &report.radical_basis {
        for i in 0..a.dim() {
            let xr = a.multiply(&a.basis(i), r).map_err(|e| e.to_string())?;
            let annihilated = (0..a.dim()).all(|c| {
                let sparse: Vec<(usize, Rational)> = xr.support().map(|(t, v)| (t, v.clone())).collect();
                pair_with_basis(gram, &sparse, c).is_zero()
            });
            ensure(annihilated, || format!("x^{i} times a radical vector leaves the radical"))?;
        }
    }
    Ok("nullity 2, quotient dim 1, radical is an ideal".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("non-degeneracy of B_{1/2,1/2}(S_{n+1}), n = 1..6", criterion_1),
        ("positive definite form, n = 1..6", criterion_2),
        ("conformal vector and central charges", criterion_3),
        ("ω x = 2x on built-in groups", criterion_4),
        ("form invariance and ρ automorphisms", criterion_5),
        ("unitary series values", criterion_6),
        ("weight coincidence and fusion closure", criterion_7),
        ("fusion commutativity, unit, associativity", criterion_8),
        ("coefficient systems", criterion_9),
        ("group algebra quotient", criterion_10),
        ("degenerate parameters B_{4,1}(S_3)", criterion_11),
    ];
    let mut failures = 0;
    for (idx, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail}", idx + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {name}: {detail}", idx + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
