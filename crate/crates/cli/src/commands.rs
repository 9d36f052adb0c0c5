use std::collections::BTreeMap;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use groupcodes::algebra::{Decomposition, Metric, Shape, Value as BlockValue};
use groupcodes::duality;
use groupcodes::error::Error;
use groupcodes::fields::{Elem, Subfield};
use groupcodes::ideals::{ideal_to_code, Enumerator, IdealSpec};
use groupcodes::oracle::{self, OracleMetric};
use groupcodes::poly::prime_power;
use groupcodes::verify::verify_algebra;
use groupcodes::weights::{css_distance, css_hermitian, min_distance_isd, Distance, IsdConfig, QuantumRecord};
use groupcodes::{dihedral, quaternion};

use crate::{GroupArg, MetricArg, Report, RunArgs};

fn default_metric(q: u64) -> Metric {
    match prime_power(q) {
        Ok((_, e)) if e % 2 == 0 => Metric::Hermitian,
        _ => Metric::Euclidean,
    }
}

fn metric_of(args: &RunArgs, q: u64) -> Metric {
    match args.metric {
        Some(MetricArg::Euclidean) => Metric::Euclidean,
        Some(MetricArg::Hermitian) => Metric::Hermitian,
        None if args.group == GroupArg::Quaternion => Metric::Euclidean,
        None => default_metric(q),
    }
}

fn metric_name(m: Metric) -> &'static str {
    match m {
        Metric::Euclidean => "euclidean",
        Metric::Hermitian => "hermitian",
    }
}

/// Builds the decomposition, falling back to F_q[D_2n] for quaternion
/// algebras without a native map.
fn build(args: &RunArgs, report: &mut Report) -> Result<Decomposition> {
    let (q, n) = args.require_qn()?;
    let metric = metric_of(args, q);
    let mut warnings = vec![];
    let dec = report.time("decompose", || -> Result<Decomposition> {
        Ok(match args.group {
            GroupArg::Dihedral => dihedral::build(n, q, metric)?,
            GroupArg::Quaternion => {
                if metric == Metric::Hermitian {
                    bail!("hermitian duals of quaternion codes are handled through F_q[D_2n]; use --group dihedral --n {}", 2 * n);
                }
                match quaternion::build(n, q) {
                    Err(Error::DelegateToDihedral { .. }) => {
                        warnings.push(format!("F_{q}[Q_{n}] ≅ F_{q}[D_{}]; results refer to the dihedral algebra", 2 * n));
                        dihedral::build(2 * n, q, Metric::Euclidean)?
                    }
                    other => other?,
                }
            }
        })
    })?;
    report.warnings.extend(warnings);
    if let Some(dir) = &args.cache_dir {
        write_decomposition_cache(dir, &dec)?;
    }
    Ok(dec)
}

fn isd_config(args: &RunArgs) -> IsdConfig {
    IsdConfig { info_sets: args.isd_sets, max_weight: args.isd_weight, work_budget: args.isd_work, stop_below: None }
}

fn elem(s: &Subfield, x: Elem) -> String {
    match s.log_of(x) {
        None => "0".into(),
        Some(0) => "1".into(),
        Some(1) => "g".into(),
        Some(k) => format!("g^{k}"),
    }
}

fn value(dec: &Decomposition, i: usize, v: &BlockValue) -> String {
    let s = &dec.summands[i].field;
    match v {
        BlockValue::Scalar(x) => elem(s, *x),
        BlockValue::C2([c0, c1]) => format!("{}·I + {}·S", elem(s, *c0), elem(s, *c1)),
        BlockValue::Matrix(m) => {
            format!("[[{}, {}], [{}, {}]]", elem(s, m[0][0]), elem(s, m[0][1]), elem(s, m[1][0]), elem(s, m[1][1]))
        }
    }
}

fn block_list(dec: &Decomposition) -> Vec<Value> {
    let (ra, rb) = (dec.rho_a(), dec.rho_b());
    dec.blocks
        .iter()
        .enumerate()
        .map(|(bi, b)| {
            let summands: Vec<Value> = b
                .summands
                .iter()
                .map(|&i| {
                    let s = &dec.summands[i];
                    json!({
                        "summand": i,
                        "field": dec.field_name(&s.field),
                        "shape": match s.shape { Shape::Scalar => "scalar", Shape::C2 => "c2", Shape::Matrix => "matrix" },
                        "dimension": s.dim(),
                        "image_a": value(dec, i, &ra[i]),
                        "image_b": value(dec, i, &rb[i]),
                    })
                })
                .collect();
            json!({
                "block": bi,
                "kind": b.kind.name(),
                "class": format!("{:?}", b.tag),
                "side": format!("{:?}", b.side),
                "degree": b.degree,
                "algebra": dec.describe_block(b),
                "summands": summands,
            })
        })
        .collect()
}

fn cache_stem(dec: &Decomposition) -> String {
    let modulus: Vec<String> = dec.field.modulus().iter().map(u32::to_string).collect();
    format!(
        "p{}_M{}_mod{}_n{}_{}_{}",
        dec.field.characteristic(),
        dec.field.degree(),
        modulus.join("-"),
        dec.group.n(),
        dec.group.name().chars().next().unwrap_or('G'),
        metric_name(dec.metric),
    )
}

fn write_decomposition_cache(dir: &PathBuf, dec: &Decomposition) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(format!("decomposition_{}_q{}.json", cache_stem(dec), dec.q()));
    if !path.exists() {
        let doc = json!({ "q": dec.q(), "group": dec.group.name(), "blocks": block_list(dec) });
        std::fs::write(&path, serde_json::to_string_pretty(&doc)?)?;
    }
    Ok(())
}

fn u128_json(x: u128) -> Value {
    u64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v))
}

fn distance_json(d: &Distance) -> Value {
    json!({
        "value": d.value,
        "status": d.status.name(),
        "lower": d.lower,
        "levels": d.levels,
        "info_sets": d.info_sets,
        "work": d.work,
    })
}

fn quantum_json(dec: &Decomposition, spec: &IdealSpec, r: &QuantumRecord) -> Value {
    json!({
        "spec": spec.to_inline(dec),
        "params": r.params(),
        "n": r.n,
        "k": r.k,
        "k_q": r.k_q,
        "q": r.q,
        "d_q": r.d_q.value,
        "d_q_status": r.d_q.status.name(),
        "d_q_lower": r.d_q.lower,
        "d_classical": r.d_classical.value,
        "d_classical_status": r.d_classical.status.name(),
        "d_dual": r.d_dual.value,
        "d_dual_status": r.d_dual.status.name(),
        "self_dual": r.self_dual,
        "exclusion_pass": r.excluded_pass,
        "floor_d_q_ge_d_c": r.floor_consistent,
    })
}

pub fn decompose(args: &RunArgs, report: &mut Report) -> Result<()> {
    let dec = build(args, report)?;
    report.results = block_list(&dec);
    Ok(())
}

fn selforth(dec: &Decomposition, spec: &IdealSpec, metric: Metric) -> Result<(bool, Option<usize>)> {
    Ok(match metric {
        Metric::Euclidean => duality::is_euclid_selforth(dec, spec)?,
        Metric::Hermitian => duality::is_hermitian_selforth(dec, spec)?,
    })
}

fn duality_json(dec: &Decomposition, spec: &IdealSpec, metric: Metric) -> Result<Value> {
    let r = duality::report(dec, spec, metric)?;
    Ok(json!({
        "metric": metric_name(metric),
        "dual": r.dual.to_inline(dec),
        "dual_dimension": r.dual.dimension(dec),
        "self_orthogonal": r.self_orthogonal,
        "self_dual": r.self_dual,
        "witness_block": r.witness,
    }))
}

pub fn dual(args: &RunArgs, report: &mut Report) -> Result<()> {
    let dec = build(args, report)?;
    let spec = IdealSpec::parse(&dec, &args.read_spec()?)?;
    let metric = metric_of(args, dec.q());
    let mut out = Map::new();
    out.insert("spec".into(), json!(spec.to_inline(&dec)));
    out.insert("dimension".into(), json!(spec.dimension(&dec)));
    if let Value::Object(m) = report.time("dual", || duality_json(&dec, &spec, metric))? {
        out.extend(m);
    }
    // closed form re-checked by direct nullspace
    let code = ideal_to_code(&dec, &spec)?;
    let d = duality::dual(&dec, &spec, metric)?;
    let dual_rows = ideal_to_code(&dec, &d)?.generator.row_vecs();
    let om = match metric {
        Metric::Euclidean => OracleMetric::Euclidean,
        Metric::Hermitian => OracleMetric::Hermitian(dec.conj_q().context("hermitian metric")?),
    };
    let brute = oracle::dual_nullspace(&dec.field, &code.generator.row_vecs(), dec.length(), om);
    let agrees = oracle::same_space(&dec.field, &dual_rows, &brute);
    out.insert("oracle_agrees".into(), json!(agrees));
    if !agrees {
        report.failed = true;
    }
    report.results.push(Value::Object(out));
    Ok(())
}

pub fn classify(args: &RunArgs, report: &mut Report) -> Result<()> {
    let dec = build(args, report)?;
    let spec = IdealSpec::parse(&dec, &args.read_spec()?)?;
    let code = ideal_to_code(&dec, &spec)?;
    let cfg = isd_config(args);
    let d = report.time("distance", || min_distance_isd(&dec.coeff, &code.generator, None, &cfg))?;
    let mut out = Map::new();
    out.insert("spec".into(), json!(spec.to_inline(&dec)));
    out.insert("params".into(), json!(format!("[{}, {}, {}]_{}", code.length(), code.dimension(), d.value.map_or("?".into(), |v| v.to_string()), dec.q())));
    out.insert("n".into(), json!(code.length()));
    out.insert("k".into(), json!(code.dimension()));
    out.insert("distance".into(), distance_json(&d));
    out.insert("euclidean".into(), duality_json(&dec, &spec, Metric::Euclidean)?);
    if dec.metric == Metric::Hermitian {
        out.insert("hermitian".into(), duality_json(&dec, &spec, Metric::Hermitian)?);
        if duality::is_hermitian_selforth(&dec, &spec)?.0 {
            let r = report.time("quantum", || css_hermitian(&dec, &spec, &cfg))?;
            out.insert("quantum".into(), quantum_json(&dec, &spec, &r));
        }
    }
    report.results.push(Value::Object(out));
    Ok(())
}

pub fn count(args: &RunArgs, with_oracle: bool, report: &mut Report) -> Result<()> {
    let dec = build(args, report)?;
    let metric = metric_of(args, dec.q());
    let budget = args.budget_exhaustive as u128;
    let formula = match (metric, dec.group) {
        (Metric::Hermitian, _) => Some(duality::count_hermitian_selforth(&dec.factors)?),
        (Metric::Euclidean, groupcodes::Group::Quaternion(_)) => Some(duality::count_euclid_selforth_quaternion(&dec.factors)?),
        _ => {
            report.warn("no closed-form count for this algebra and metric; reporting the block enumeration only");
            None
        }
    };
    let by_blocks = report.time("blocks", || duality::count_by_blocks(&dec, metric, budget))?;
    let mut out = Map::new();
    out.insert("metric".into(), json!(metric_name(metric)));
    out.insert("formula".into(), formula.map_or(Value::Null, u128_json));
    out.insert("by_blocks".into(), u128_json(by_blocks));
    if with_oracle {
        let om = match metric {
            Metric::Euclidean => OracleMetric::Euclidean,
            Metric::Hermitian => OracleMetric::Hermitian(dec.conj_q().context("hermitian metric")?),
        };
        let all: Vec<IdealSpec> = Enumerator::all(&dec, budget)?.collect();
        let hits = report.time("oracle", || -> Result<usize> {
            let flags: Vec<bool> = all
                .par_iter()
                .map(|s| -> Result<bool> {
                    let rows = ideal_to_code(&dec, s)?.generator.row_vecs();
                    Ok(oracle::is_self_orthogonal(&dec.field, &rows, om))
                })
                .collect::<Result<_>>()?;
            Ok(flags.into_iter().filter(|&b| b).count())
        })?;
        out.insert("ideals".into(), json!(all.len()));
        out.insert("oracle".into(), json!(hits));
    }
    let values: Vec<&Value> = ["formula", "by_blocks", "oracle"].iter().filter_map(|k| out.get(*k)).filter(|v| !v.is_null()).collect();
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    out.insert("agree".into(), json!(agree));
    if !agree {
        report.failed = true;
    }
    report.results.push(Value::Object(out));
    Ok(())
}

pub fn enumerate(args: &RunArgs, only_so: bool, dim: Option<usize>, limit: Option<usize>, report: &mut Report) -> Result<()> {
    let dec = build(args, report)?;
    let metric = metric_of(args, dec.q());
    let budget = args.budget_exhaustive as u128;
    let specs: Box<dyn Iterator<Item = IdealSpec>> = if only_so {
        Box::new(duality::selforth_specs(&dec, metric, budget)?.into_iter())
    } else {
        Box::new(Enumerator::all(&dec, budget)?)
    };
    let mut taken = 0;
    for (index, spec) in specs.enumerate() {
        let k = spec.dimension(&dec);
        if dim.is_some_and(|d| d != k) {
            continue;
        }
        if limit.is_some_and(|l| taken >= l) {
            report.warn(format!("stopped after {taken} results (--limit)"));
            break;
        }
        let (so, _) = selforth(&dec, &spec, metric)?;
        report.results.push(json!({
            "index": index,
            "spec": spec.to_inline(&dec),
            "dimension": k,
            "self_orthogonal": so,
        }));
        taken += 1;
    }
    Ok(())
}

fn status_rank(s: &str) -> u8 {
    match s {
        "EXACT" => 0,
        "UPPER_BOUND" => 1,
        _ => 2,
    }
}

fn rank_key(v: &Value) -> (std::cmp::Reverse<u64>, std::cmp::Reverse<u64>, u8) {
    (
        std::cmp::Reverse(v["k_q"].as_u64().unwrap_or(0)),
        std::cmp::Reverse(v["d_q"].as_u64().unwrap_or(0)),
        status_rank(v["d_q_status"].as_str().unwrap_or("")),
    )
}

enum Outcome {
    Record(Value),
    /// provably below the current N-th best
    Pruned,
    Failed(String),
}

pub fn css_search(args: &RunArgs, kq: Option<usize>, top: Option<usize>, report: &mut Report) -> Result<()> {
    let dec = build(args, report)?;
    if dec.metric != Metric::Hermitian {
        bail!("css-search needs a hermitian dihedral algebra (q a square)");
    }
    let n = dec.length();
    let specs = duality::selforth_specs(&dec, Metric::Hermitian, args.budget_exhaustive as u128)?;
    // canonical spec order breaks ties in the ranking
    let order: BTreeMap<String, usize> = specs.iter().enumerate().map(|(i, s)| (s.to_inline(&dec), i)).collect();
    let index = |text: &str| order.get(text).copied().unwrap_or(usize::MAX);
    let mut specs: Vec<IdealSpec> = specs.into_iter().filter(|s| kq.is_none_or(|k| n - 2 * s.dimension(&dec) == k)).collect();
    let cfg = isd_config(args);
    let cache_path = args.cache_dir.as_ref().map(|d| {
        d.join(format!(
            "css_{}_q{}_sets{:?}_w{:?}_work{}.json",
            cache_stem(&dec),
            dec.q(),
            cfg.info_sets,
            cfg.max_weight,
            cfg.work_budget
        ))
    });
    let mut cache: BTreeMap<String, Value> = match &cache_path {
        Some(p) if p.exists() => serde_json::from_str(&std::fs::read_to_string(p)?).unwrap_or_default(),
        _ => BTreeMap::new(),
    };
    // cheap upper bounds on d_Q, so strong candidates come first and weak ones drop out for free
    let ub: BTreeMap<String, usize> = if top.is_some() {
        let probe = IsdConfig { info_sets: Some(2), max_weight: Some(2), ..cfg.clone() };
        let bounds: Vec<(String, Option<usize>)> = report.time("css_probe", || {
            specs
                .par_iter()
                .filter(|s| !cache.contains_key(&s.to_inline(&dec)))
                .map(|s| (s.to_inline(&dec), css_distance(&dec, s, &probe).ok().and_then(|d| d.value)))
                .collect()
        });
        bounds.into_iter().filter_map(|(t, v)| v.map(|v| (t, v))).collect()
    } else {
        BTreeMap::new()
    };
    let bound = |s: &IdealSpec| ub.get(&s.to_inline(&dec)).copied().unwrap_or(usize::MAX);
    specs.sort_by_cached_key(|s| (s.dimension(&dec), std::cmp::Reverse(bound(s)), index(&s.to_inline(&dec))));
    let full_key = |v: &Value| (rank_key(v), index(v["spec"].as_str().unwrap_or("")));
    let mut records: Vec<Value> = vec![];
    let mut failures = vec![];
    report.time("css", || {
        for chunk in specs.chunks(64) {
            // ranking key of the N-th best record so far
            let threshold = top.filter(|&t| t > 0 && records.len() >= t).map(|t| {
                let mut keys: Vec<_> = records.iter().map(full_key).collect();
                keys.sort();
                keys[t - 1]
            });
            let outcomes: Vec<Outcome> = chunk
                .par_iter()
                .map(|s| {
                    let text = s.to_inline(&dec);
                    if let Some(v) = cache.get(&text) {
                        return Outcome::Record(v.clone());
                    }
                    let k_q = (n - 2 * s.dimension(&dec)) as u64;
                    if let Some(((rk, rd, _), _)) = threshold {
                        let (tk, td) = (rk.0, rd.0);
                        // best key this spec could reach: d_Q at its upper bound, exact
                        let best = (
                            (std::cmp::Reverse(k_q), std::cmp::Reverse(bound(s) as u64), status_rank("EXACT")),
                            index(&text),
                        );
                        if best > threshold.expect("checked") {
                            return Outcome::Pruned;
                        }
                        if k_q == tk {
                            let screen = IsdConfig { stop_below: Some(td as usize), ..cfg.clone() };
                            match css_distance(&dec, s, &screen) {
                                Ok(d) if d.value.is_some_and(|v| (v as u64) < td) => return Outcome::Pruned,
                                Ok(_) => {}
                                Err(e) => return Outcome::Failed(format!("{text}: {e}")),
                            }
                        }
                    }
                    match css_hermitian(&dec, s, &cfg) {
                        Ok(r) => Outcome::Record(quantum_json(&dec, s, &r)),
                        Err(e) => Outcome::Failed(format!("{text}: {e}")),
                    }
                })
                .collect();
            for o in outcomes {
                match o {
                    Outcome::Record(v) => {
                        cache.insert(v["spec"].as_str().unwrap_or_default().to_string(), v.clone());
                        records.push(v);
                    }
                    Outcome::Pruned => {}
                    Outcome::Failed(e) => failures.push(e),
                }
            }
        }
    });
    for e in failures {
        report.warn(e);
    }
    if let Some(p) = &cache_path {
        std::fs::create_dir_all(p.parent().expect("cache file has a parent"))?;
        std::fs::write(p, serde_json::to_string_pretty(&cache)?)?;
    }
    records.sort_by_key(full_key);
    if let Some(t) = top {
        records.truncate(t);
    }
    report.results = records;
    Ok(())
}

fn default_matrix() -> Vec<(GroupArg, usize, u64, Metric)> {
    vec![
        (GroupArg::Dihedral, 16, 9, Metric::Hermitian),
        (GroupArg::Dihedral, 7, 4, Metric::Hermitian),
        (GroupArg::Dihedral, 3, 25, Metric::Hermitian),
        (GroupArg::Dihedral, 10, 9, Metric::Hermitian),
        (GroupArg::Dihedral, 13, 9, Metric::Hermitian),
        (GroupArg::Dihedral, 4, 3, Metric::Euclidean),
        (GroupArg::Dihedral, 7, 2, Metric::Euclidean),
        (GroupArg::Quaternion, 7, 11, Metric::Euclidean),
        (GroupArg::Quaternion, 5, 3, Metric::Euclidean),
        (GroupArg::Quaternion, 3, 11, Metric::Euclidean),
    ]
}

pub fn verify(args: &RunArgs, samples: usize, report: &mut Report) -> Result<()> {
    let matrix = match (args.q, args.n) {
        (Some(q), Some(n)) => vec![(args.group, n, q, metric_of(args, q))],
        _ => default_matrix(),
    };
    for (group, n, q, metric) in matrix {
        let dec = match group {
            GroupArg::Dihedral => dihedral::build(n, q, metric),
            GroupArg::Quaternion => quaternion::build(n, q),
        };
        let dec = match dec {
            Ok(d) => d,
            Err(e) => {
                report.warn(format!("skipping n = {n}, q = {q}: {e}"));
                continue;
            }
        };
        let r = report.time(&format!("F_{q}[{}]", dec.group.name()), || verify_algebra(&dec, samples, args.seed));
        if !r.ok() {
            report.failed = true;
        }
        report.results.push(json!({
            "algebra": r.algebra,
            "metric": metric_name(dec.metric),
            "checks": r.checks,
            "failures": r.failures.len(),
            "first_failure": r.failures.first(),
            "status": if r.ok() { "PASS" } else { "FAIL" },
        }));
    }
    Ok(())
}
