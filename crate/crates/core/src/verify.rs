//! Library-level run of the acceptance checks, bounded by a rank `K`.
//!
//! Each check uses `min(K, bound)` where `bound` is the largest rank the
//! check is specified for.

use std::sync::Arc;

use serde::Serialize;

use crate::coeffs::{self, Generator, SubstitutionOracle, WordPolynomial};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::matsuo::{FormAlgebra, MatsuoAlgebra};
use crate::permgroups::TranspositionSystem;
use crate::rational::Rational;
use crate::virasoro::{self, MinimalLabel};
use crate::zhu::{self, ZhuOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn half() -> Rational {
    Rational::new(1, 2)
}

fn symmetric_algebra(m: usize, alpha: Rational, beta: Rational) -> Result<MatsuoAlgebra> {
    MatsuoAlgebra::build(Arc::new(TranspositionSystem::symmetric(m)?), alpha, beta)
}

fn outcome(id: u32, name: &'static str, result: Result<(bool, String)>) -> CheckOutcome {
    let (passed, detail) = result.unwrap_or_else(|e| (false, format!("error: {e}")));
    CheckOutcome {
        id,
        name,
        passed,
        detail,
    }
}

fn nondegenerate(k: usize) -> Result<(bool, String)> {
    let mut dims = Vec::new();
    for n in 1..=k.min(6) {
        let a = symmetric_algebra(n + 1, half(), half())?;
        if a.form_report()?.nullity != 0 {
            return Ok((false, format!("nullity > 0 at n = {n}")));
        }
        dims.push(a.dim());
    }
    Ok((true, format!("dims {dims:?}")))
}

fn positive(k: usize) -> Result<(bool, String)> {
    for n in 1..=k.min(6) {
        let a = symmetric_algebra(n + 1, half(), half())?;
        let sig = a.form_report()?.signature.as_array();
        if sig != [a.dim(), 0, 0] {
            return Ok((false, format!("signature {sig:?} at n = {n}")));
        }
    }
    Ok((true, format!("positive definite for n <= {}", k.min(6))))
}

fn central_charges(k: usize) -> Result<(bool, String)> {
    let s3 = symmetric_algebra(3, half(), half())?;
    if s3.conformal_coefficient()? != Rational::new(4, 5) {
        return Ok((false, "S_3 conformal coefficient".into()));
    }
    let c12 = virasoro::central_charge_c(1)? + virasoro::central_charge_c(2)?;
    if s3.central_charge()? != Rational::new(6, 5) || c12 != Rational::new(6, 5) {
        return Ok((false, "S_3 central charge".into()));
    }
    for n in 1..=k.min(8) {
        let a = symmetric_algebra(n + 1, half(), half())?;
        let mut expected = Rational::zero();
        for i in 1..=n as u32 {
            expected += virasoro::central_charge_c(i)?;
        }
        if a.central_charge()? != expected {
            return Ok((false, format!("n = {n}")));
        }
    }
    Ok((true, format!("n <= {}", k.min(8))))
}

fn conformal_unit(k: usize) -> Result<(bool, String)> {
    let two = Rational::from_integer(2);
    let mut checked = 0;
    for m in 2..=(k + 1).min(11) {
        let a = symmetric_algebra(m, half(), half())?;
        let omega = a.conformal_vector()?;
        for i in 0..a.dim() {
            let x = a.basis(i);
            if a.multiply(&omega, &x)? != x.scale(&two) {
                return Ok((false, format!("S_{m}, basis {i}")));
            }
            checked += 1;
        }
    }
    Ok((true, format!("{checked} basis vectors")))
}

fn invariance(k: usize) -> Result<(bool, String)> {
    for m in 2..=(k + 1).min(11) {
        let a = symmetric_algebra(m, half(), half())?;
        if !a.validation().exhaustive {
            return Ok((false, format!("S_{m} validated by sampling")));
        }
        let d = a.dim();
        for i in 0..d {
            for p in 0..d {
                let rp = a.basis(a.rho_index(i, p));
                for q in p..d {
                    let rq = a.basis(a.rho_index(i, q));
                    let prod = a.multiply(&a.basis(p), &a.basis(q))?;
                    if a.rho(i, &prod)? != a.multiply(&rp, &rq)?
                        || a.form(&rp, &rq)? != a.form(&a.basis(p), &a.basis(q))?
                    {
                        return Ok((false, format!("S_{m}, rho_{i} on ({p}, {q})")));
                    }
                }
            }
        }
    }
    Ok((true, format!("S_2 .. S_{}", (k + 1).min(11))))
}

fn virasoro_values() -> Result<(bool, String)> {
    let checks = [
        (virasoro::central_charge_c(1)?, Rational::new(1, 2)),
        (virasoro::central_charge_c(2)?, Rational::new(7, 10)),
        (virasoro::highest_weight(1, 2, 1)?, Rational::new(1, 2)),
        (virasoro::highest_weight(1, 1, 2)?, Rational::new(1, 16)),
        (virasoro::highest_weight(2, 1, 3)?, Rational::new(3, 5)),
        (virasoro::highest_weight(2, 3, 1)?, Rational::new(3, 2)),
    ];
    let ok = checks.iter().all(|(a, b)| a == b);
    Ok((ok, "c_1, c_2, h(1), h(2)".into()))
}

fn weights_and_closure(k: usize) -> Result<(bool, String)> {
    for n in 1..=k.min(12) as u32 {
        if !virasoro::weight_coincidence_scan(n)?.ok() {
            return Ok((false, format!("weight coincidence at n = {n}")));
        }
    }
    for n in 1..=k.min(10) as u32 {
        if !virasoro::fusion_closed(n, &virasoro::odd_vacuum_column(n)?)? {
            return Ok((false, format!("closure at n = {n}")));
        }
    }
    Ok((true, format!("scan n <= {}, closure n <= {}", k.min(12), k.min(10))))
}

fn fusion_sanity(k: usize) -> Result<(bool, String)> {
    for n in 1..=k.min(8) as u32 {
        let labels = virasoro::canonical_labels(n)?;
        let vac = MinimalLabel::vacuum(n)?;
        for a in &labels {
            if virasoro::fuse(&vac, a)? != virasoro::FusionResult::single(*a) {
                return Ok((false, format!("unit at n = {n}")));
            }
            for b in &labels {
                if virasoro::fuse(a, b)? != virasoro::fuse(b, a)? {
                    return Ok((false, format!("commutativity at n = {n}")));
                }
            }
        }
        if n <= 4 {
            for a in &labels {
                for b in &labels {
                    let ab = virasoro::fuse(a, b)?;
                    for c in &labels {
                        let c1 = virasoro::FusionResult::single(*c);
                        let left = virasoro::fuse_results(&ab, &c1)?;
                        let right = virasoro::fuse_results(
                            &virasoro::FusionResult::single(*a),
                            &virasoro::fuse(b, c)?,
                        )?;
                        if left != right {
                            return Ok((false, format!("associativity at n = {n}")));
                        }
                    }
                }
            }
        }
    }
    Ok((true, format!("n <= {}", k.min(8))))
}

fn coefficient_systems(k: usize) -> Result<(bool, String)> {
    for m in 1..=20 {
        let prod = coeffs::jordan_exp(m)?.to_matrix().mul(&coeffs::jordan_exp_neg(m)?.to_matrix());
        if prod != Matrix::identity(m) {
            return Ok((false, format!("exp(J) exp(-J) at m = {m}")));
        }
    }
    let neg = coeffs::jordan_exp_neg(16)?;
    for j in 0..=15 {
        let p = coeffs::p_half(15, j);
        let word = coeffs::Word::new(vec![Generator::E; j]);
        if p.coefficient(&word) != neg.sequence()[j] || p.terms().len() != 1 {
            return Ok((false, format!("p_half at j = {j}")));
        }
    }
    let top = (k + 4).clamp(2, 10);
    for n in 2..=top {
        let report = coeffs::verify_substitution(n)?;
        if !report.ok {
            return Ok((false, format!("substitution at N = {n}: {:?}", report.first_failure)));
        }
    }
    let q = |t| WordPolynomial::generator(Generator::Q(t));
    let expected = q(4).neg().add(&q(2).mul(&q(2)));
    for n in 5..=10 {
        let oracle = SubstitutionOracle::new(n)?;
        if oracle.raw_coefficient(n - 4, 4) != expected || coeffs::p_zero(n, n - 4, 4) != expected {
            return Ok((false, format!("P_(0,N-4,4) at N = {n}")));
        }
    }
    Ok((true, format!("substitution N <= {top}")))
}

fn zhu_quotient(k: usize) -> Result<(bool, String)> {
    let mut dims = Vec::new();
    for n in 1..=k.clamp(1, 3) {
        let base = zhu::quotient_dimension(n, ZhuOptions::default())?;
        for seed in 0..3 {
            let opts = ZhuOptions {
                shuffle_seed: Some(seed),
                ..ZhuOptions::default()
            };
            if zhu::quotient_dimension(n, opts)?.quotient_dim != base.quotient_dim {
                return Ok((false, format!("order dependence at n = {n}")));
            }
        }
        if n == 1 && (base.quotient_dim, base.ideal_dim) != (2, 0) {
            return Ok((false, "n = 1".into()));
        }
        dims.push(base.quotient_dim);
    }
    Ok((true, format!("quotient dims {dims:?}")))
}

fn degenerate_regression() -> Result<(bool, String)> {
    let a = symmetric_algebra(3, Rational::from_integer(4), Rational::one())?;
    let report = a.form_report()?;
    let quotient = a.nondegenerate_quotient()?;
    let ok = report.nullity == 2 && quotient.dim() == 1;
    Ok((ok, format!("nullity {}, quotient dim {}", report.nullity, quotient.dim())))
}

/// All eleven checks, in order.
pub fn run_all(k: usize) -> Vec<CheckOutcome> {
    vec![
        outcome(1, "non-degeneracy", nondegenerate(k)),
        outcome(2, "positivity", positive(k)),
        outcome(3, "central charges", central_charges(k)),
        outcome(4, "conformal unit", conformal_unit(k)),
        outcome(5, "invariance and automorphisms", invariance(k)),
        outcome(6, "virasoro values", virasoro_values()),
        outcome(7, "weight coincidence and closure", weights_and_closure(k)),
        outcome(8, "fusion sanity", fusion_sanity(k)),
        outcome(9, "coefficient systems", coefficient_systems(k)),
        outcome(10, "zhu quotient", zhu_quotient(k)),
        outcome(11, "degenerate parameters", degenerate_regression()),
    ]
}
