//! One function per subcommand, each producing a [`Report`].

use std::path::PathBuf;
use std::sync::Arc;

use serde_json::{json, Value};

use matsuo_core::coeffs::{self, WordPolynomial};
use matsuo_core::matsuo::{FormAlgebra, MatsuoAlgebra};
use matsuo_core::permgroups::{build_weyl_a, parse_group_definition, Regularity, TranspositionSystem};
use matsuo_core::virasoro::{self, FusionResult, MinimalLabel};
use matsuo_core::zhu::{self, ZhuOptions};
use matsuo_core::{verify, Error, Rational};

use crate::report::{Report, Rows};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io { path: PathBuf, message: String },
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Clone, Debug)]
pub enum Source {
    Symmetric(usize),
    WeylA(usize),
    File(PathBuf),
}

impl Source {
    fn config(&self) -> Value {
        match self {
            Source::Symmetric(m) => json!({ "symmetric": m }),
            Source::WeylA(n) => json!({ "weyl_a": n }),
            Source::File(p) => json!({ "file": p.display().to_string() }),
        }
    }

    fn load(&self) -> CliResult<TranspositionSystem> {
        match self {
            Source::Symmetric(m) => Ok(TranspositionSystem::symmetric(*m)?),
            Source::WeylA(n) => Ok(build_weyl_a(*n)?.system),
            Source::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                    path: path.clone(),
                    message: e.to_string(),
                })?;
                Ok(parse_group_definition(&text)?.into_system()?)
            }
        }
    }
}

fn rat(r: &Rational) -> Value {
    serde_json::to_value(r).expect("rationals serialize")
}

fn label_json(l: &MinimalLabel) -> Value {
    json!({ "r": l.r(), "s": l.s(), "h": rat(&l.weight()) })
}

pub fn group(source: &Source, budget: usize) -> CliResult<Report> {
    let sys = source.load()?;
    let mut report = Report::new("group", json!({ "source": source.config(), "budget": budget }));
    let components = sys.connected_components();
    let three = sys.verify_3transposition();
    let k = match sys.regularity() {
        Regularity::Regular(k) => Value::from(k),
        Regularity::PerComponent(_) => Value::Null,
    };
    report.set("degree", sys.degree());
    report.set("generators", sys.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>());
    report.set("involutions", sys.len());
    report.set("k", k);
    report.set("components", components.len());
    report.set("component_sizes", components.iter().map(Vec::len).collect::<Vec<_>>());
    report.set("indecomposable", sys.is_indecomposable());
    report.set("three_transposition", three.ok);
    report.set(
        "offending_pair",
        three.offending_pair.map_or(Value::Null, |(i, j, o)| {
            json!({
                "left": sys.involutions()[i].to_string(),
                "right": sys.involutions()[j].to_string(),
                "order": o,
            })
        }),
    );
    report.set("center_free", sys.is_center_free(budget)?);
    report.passed = three.ok;
    Ok(report)
}

pub struct AlgebraArgs {
    pub alpha: Rational,
    pub beta: Rational,
    pub budget: usize,
    pub seed: u64,
}

pub fn algebra(source: &Source, args: &AlgebraArgs) -> CliResult<Report> {
    let sys = source.load()?;
    let mut report = Report::new(
        "algebra",
        json!({
            "source": source.config(),
            "alpha": rat(&args.alpha),
            "beta": rat(&args.beta),
            "budget": args.budget,
            "seed": args.seed,
        }),
    );
    let a = MatsuoAlgebra::build_with_seed(Arc::new(sys), args.alpha.clone(), args.beta.clone(), args.seed)?;
    let form = a.form_report()?;
    let quotient = a.nondegenerate_quotient()?;
    let optional = |r: matsuo_core::Result<Rational>| -> CliResult<Value> {
        match r {
            Ok(v) => Ok(rat(&v)),
            Err(Error::Decomposable(_) | Error::SingularParameter) => Ok(Value::Null),
            Err(e) => Err(e.into()),
        }
    };
    report.set("dim", a.dim());
    report.set("alpha", rat(a.alpha()));
    report.set("beta", rat(a.beta()));
    report.set("k", a.k().map_or(Value::Null, Value::from));
    report.set("indecomposable", a.system().is_indecomposable());
    report.set("rank", form.rank);
    report.set("nullity", form.nullity);
    report.set("signature", form.signature.as_array().to_vec());
    report.set("quotient_dim", quotient.dim());
    report.set("conformal_coefficient", optional(a.conformal_coefficient())?);
    report.set("central_charge", optional(a.central_charge())?);
    if !a.system().is_indecomposable() {
        let mut summands = Vec::new();
        for part in a.decompose()? {
            summands.push(json!({
                "dim": part.algebra.dim(),
                "k": part.algebra.k().ok(),
                "central_charge": optional(part.algebra.central_charge())?,
            }));
        }
        report.set("summands", summands);
    }
    match a.rho_is_faithful(args.budget) {
        Ok(f) => report.set("rho_faithful", f),
        Err(Error::BudgetExceeded { budget }) => {
            report.set("rho_faithful", Value::Null);
            report.set("rho_faithful_skipped", format!("group order exceeds budget {budget}"));
        }
        Err(e) => return Err(e.into()),
    }
    report.set("invariance", serde_json::to_value(a.validation()).expect("serializes"));
    Ok(report)
}

fn parse_pair(n: u32, text: &str) -> CliResult<MinimalLabel> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let bad = || Error::InvalidParameter(format!("label {text:?}: expected R,S"));
    if parts.len() != 2 {
        return Err(bad().into());
    }
    let r: u32 = parts[0].parse().map_err(|_| bad())?;
    let s: u32 = parts[1].parse().map_err(|_| bad())?;
    Ok(MinimalLabel::new(n, r, s)?)
}

fn outputs_json(f: &FusionResult) -> Vec<Value> {
    f.terms()
        .map(|(l, m)| json!({ "r": l.r(), "s": l.s(), "h": rat(&l.weight()), "mult": m }))
        .collect()
}

pub fn fusion(n: u32, pair: Option<&[String]>) -> CliResult<Report> {
    let mut report = Report::new("fusion", json!({ "n": n, "pair": pair }));
    report.set("n", n);
    report.set("c", rat(&virasoro::central_charge_c(n)?));
    let mut rows = Rows::default();
    match pair {
        Some(p) => {
            let a = parse_pair(n, &p[0])?;
            let b = parse_pair(n, &p[1])?;
            let f = virasoro::fuse(&a, &b)?;
            report.set("inputs", vec![label_json(&a), label_json(&b)]);
            report.set("outputs", outputs_json(&f));
            rows.header = vec!["n", "r", "s", "h", "mult"];
            for (l, m) in f.terms() {
                rows.rows.push(vec![
                    n.to_string(),
                    l.r().to_string(),
                    l.s().to_string(),
                    l.weight().to_string(),
                    m.to_string(),
                ]);
            }
        }
        None => {
            let labels = virasoro::canonical_labels(n)?;
            report.set("labels", labels.iter().map(label_json).collect::<Vec<_>>());
            rows.header = vec!["n", "a_r", "a_s", "b_r", "b_s", "r", "s", "h", "mult"];
            let mut products = Vec::new();
            for a in &labels {
                for b in &labels {
                    let f = virasoro::fuse(a, b)?;
                    products.push(json!({
                        "a": { "r": a.r(), "s": a.s() },
                        "b": { "r": b.r(), "s": b.s() },
                        "outputs": outputs_json(&f),
                    }));
                    for (l, m) in f.terms() {
                        rows.rows.push(vec![
                            n.to_string(),
                            a.r().to_string(),
                            a.s().to_string(),
                            b.r().to_string(),
                            b.s().to_string(),
                            l.r().to_string(),
                            l.s().to_string(),
                            l.weight().to_string(),
                            m.to_string(),
                        ]);
                    }
                }
            }
            report.set("products", products);
        }
    }
    report.rows = Some(rows);
    Ok(report)
}

pub fn branch(n: u32, j: u32) -> CliResult<Report> {
    let terms = virasoro::branching_labels(n, j)?;
    let mut report = Report::new("branch", json!({ "n": n, "j": j }));
    report.set("n", n);
    report.set("j", j);
    report.set(
        "terms",
        terms
            .iter()
            .map(|t| json!({ "k": t.k, "r": t.label.r(), "s": t.label.s(), "weight": rat(&t.weight) }))
            .collect::<Vec<_>>(),
    );
    let weights: Vec<Value> = terms.iter().map(|t| rat(&t.weight)).collect();
    report.set("weights", weights);
    report.rows = Some(Rows {
        header: vec!["k", "r", "s", "weight"],
        rows: terms
            .iter()
            .map(|t| {
                vec![
                    t.k.to_string(),
                    t.label.r().to_string(),
                    t.label.s().to_string(),
                    t.weight.to_string(),
                ]
            })
            .collect(),
    });
    Ok(report)
}

pub fn zhu(n: usize, budget: usize, seed: Option<u64>) -> CliResult<Report> {
    let options = ZhuOptions {
        budget,
        shuffle_seed: seed,
    };
    let mut report = Report::new("zhu", json!({ "n": n, "budget": budget, "seed": seed }));
    let q = zhu::quotient_dimension(n, options)?;
    report.set("n", q.n);
    report.set("group_order", q.group_order);
    report.set("ideal_dim", q.ideal_dim);
    report.set("quotient_dim", q.quotient_dim);
    report.set("products_examined", q.products_examined);
    report.set("sectors", virasoro::sector_labels(n as u32));
    report.set("basis", q.basis.iter().map(|g| g.to_string()).collect::<Vec<_>>());
    Ok(report)
}

fn polynomial_fields(report: &mut Report, p: &WordPolynomial) {
    report.set("polynomial", serde_json::to_value(p).expect("serializes"));
    report.set("display", p.to_string());
    report.rows = Some(Rows {
        header: vec!["coeff", "word"],
        rows: p
            .terms()
            .iter()
            .map(|(w, c)| vec![c.to_fraction_string(), w.to_string()])
            .collect(),
    });
}

pub fn coeffs_exp(m: usize, negative: bool) -> CliResult<Report> {
    let t = if negative { coeffs::jordan_exp_neg(m)? } else { coeffs::jordan_exp(m)? };
    let mut report = Report::new("coeffs exp", json!({ "m": m, "negative": negative }));
    report.set("m", m);
    report.set("sequence", t.sequence().iter().map(rat).collect::<Vec<_>>());
    report.rows = Some(Rows {
        header: vec!["t", "a_t"],
        rows: t
            .sequence()
            .iter()
            .enumerate()
            .map(|(i, a)| vec![i.to_string(), a.to_string()])
            .collect(),
    });
    Ok(report)
}

pub fn coeffs_half(i: usize, j: usize) -> CliResult<Report> {
    let mut report = Report::new("coeffs half", json!({ "i": i, "j": j }));
    report.set("i", i);
    report.set("j", j);
    polynomial_fields(&mut report, &coeffs::p_half(i, j));
    Ok(report)
}

pub fn coeffs_p0(big_n: usize, k: usize, j: usize) -> CliResult<Report> {
    let mut report = Report::new("coeffs p0", json!({ "N": big_n, "k": k, "j": j }));
    report.set("N", big_n);
    report.set("k", k);
    report.set("j", j);
    report.set("word_order", coeffs::WORD_ORDER_NOTE);
    polynomial_fields(&mut report, &coeffs::p_zero(big_n, k, j));
    Ok(report)
}

pub fn coeffs_verify(big_n: usize) -> CliResult<Report> {
    let r = coeffs::verify_substitution(big_n)?;
    let mut report = Report::new("coeffs verify", json!({ "N": big_n }));
    if let Value::Object(fields) = serde_json::to_value(&r).expect("serializes") {
        for (k, v) in fields {
            report.set(&k, v);
        }
    }
    report.passed = r.ok;
    Ok(report)
}

pub fn verify_all(k: usize) -> CliResult<Report> {
    let outcomes = verify::run_all(k);
    let mut report = Report::new("verify-all", json!({ "n": k }));
    let passed = outcomes.iter().filter(|o| o.passed).count();
    report.set("passed", passed);
    report.set("failed", outcomes.len() - passed);
    report.set("checks", serde_json::to_value(&outcomes).expect("serializes"));
    report.rows = Some(Rows {
        header: vec!["id", "name", "passed", "detail"],
        rows: outcomes
            .iter()
            .map(|o| vec![o.id.to_string(), o.name.to_string(), o.passed.to_string(), o.detail.clone()])
            .collect(),
    });
    report.passed = passed == outcomes.len();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use matsuo_core::matsuo::form_report;

    fn quotient_nullity(source: &Source, alpha: Rational, beta: Rational) -> usize {
        let a = MatsuoAlgebra::build(Arc::new(source.load().unwrap()), alpha, beta).unwrap();
        form_report(&a.nondegenerate_quotient().unwrap()).unwrap().nullity
    }

    #[test]
    fn degenerate_quotient_is_nondegenerate() {
        assert_eq!(quotient_nullity(&Source::Symmetric(3), Rational::from_integer(4), Rational::one()), 0);
    }

    #[test]
    fn pair_parsing() {
        assert_eq!(parse_pair(2, "3, 1").unwrap(), MinimalLabel::new(2, 3, 1).unwrap());
        assert!(parse_pair(2, "3").is_err());
        assert!(matches!(parse_pair(2, "9,1"), Err(CliError::Core(Error::InvalidLabel { .. }))));
    }
}
