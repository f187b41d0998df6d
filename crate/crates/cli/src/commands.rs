use num_bigint::BigUint;
use serde_json::{json, Value};

use albert_forge::albert::{dickson_poly, json_field};
use albert_forge::group::{make_generator, stabilizer_generator_kinds, standard_generator_kinds};
use albert_forge::octonion::mul_table;
use albert_forge::orbits::counts::big_json;
use albert_forge::orbits::structured::{structured_counts, structured_emission_report};
use albert_forge::orbits::{
    brute_force_color_census, closed_form_counts, order_identities, orbit_bfs, two_e6_point_type, BfsOptions,
};
use albert_forge::verify::{run_suite, Suite, VerifyConfig};
use albert_forge::{Albert, Color, Field, OctIndex};

use crate::output::{emit, Report};
use crate::{CensusMode, CliError, Command, Common, GenSet, Outcome, SuiteArg};

type Res = Result<Outcome, CliError>;

/// Orders from `--q` or `--p/--k`, or `default` when neither is given.
fn orders(common: &Common, default: &[u32]) -> Result<Vec<u32>, CliError> {
    match (common.p, common.k) {
        (Some(p), Some(k)) => Ok(vec![Field::new(p, k)?.order() as u32]),
        _ if common.q.is_empty() => Ok(default.to_vec()),
        _ => Ok(common.q.clone()),
    }
}

fn single_field(common: &Common, default: Option<u32>) -> Result<Field, CliError> {
    let qs = orders(common, default.as_slice())?;
    match qs.as_slice() {
        [q] => Ok(Field::with_order(*q)?),
        [] => Err(CliError::Config("a field is required: pass --q or --p/--k".into())),
        _ => Err(CliError::Config("this command takes a single field".into())),
    }
}

/// Parses a vector; its `p`/`k` header, if any, selects the field.
fn parse_vector(common: &Common, text: &str) -> Result<(Albert, albert_forge::AlbertVector), CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Config(format!("vector json: {e}")))?;
    let field = match json_field(&value) {
        Some(f) => {
            let f = f?;
            if !common.q.is_empty() || common.p.is_some() {
                let given = single_field(common, None)?;
                if given != f {
                    return Err(CliError::Config("vector header disagrees with the field flags".into()));
                }
            }
            f
        }
        None => single_field(common, None)?,
    };
    let alb = Albert::new(&field);
    let v = alb.from_json(&value)?;
    Ok((alb, v))
}

fn field_json(f: &Field) -> Value {
    json!({"p": f.characteristic(), "k": f.degree(), "q": f.order()})
}

pub fn run(common: &Common, command: &Command) -> Res {
    match command {
        Command::Table => table(common),
        Command::Verify { suite, samples } => verify(common, suite, *samples),
        Command::Census { mode, count_only } => census(common, *mode, *count_only),
        Command::Orbit { start, gens } => orbit(common, start, *gens),
        Command::Dickson => dickson(common),
        Command::Orders => orders_cmd(common),
        Command::Classify { vector } => classify(common, vector),
    }
}

fn table(common: &Common) -> Res {
    let t = mul_table();
    let mut rows = Vec::new();
    let mut grid = Vec::new();
    for i in OctIndex::ALL {
        let mut line = Vec::new();
        for j in OctIndex::ALL {
            let entry = match t[i.ordinal()][j.ordinal()] {
                Some((neg, k)) => {
                    let s = format!("{}e{}", if neg { "-" } else { "" }, k);
                    rows.push(json!({"left": i.symbol(), "right": j.symbol(), "product": s}));
                    s
                }
                None => "0".to_string(),
            };
            line.push(entry);
        }
        grid.push(line);
    }
    let order: Vec<&str> = OctIndex::ALL.iter().map(|i| i.symbol()).collect();
    let body = json!({"index_order": order, "table": grid});
    emit(common, &Report::new("table", body, rows))?;
    Ok(Outcome::Ok)
}

fn verify(common: &Common, suites: &[SuiteArg], samples: u64) -> Res {
    let chosen: Vec<Suite> = if suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        suites
            .iter()
            .map(|s| match s {
                SuiteArg::Octonion => Suite::Octonion,
                SuiteArg::Albert => Suite::Albert,
                SuiteArg::Generators => Suite::Generators,
                SuiteArg::Twisted => Suite::Twisted,
            })
            .collect()
    };
    let mut reports = Vec::new();
    let mut rows = Vec::new();
    let mut passed = true;
    for suite in chosen {
        for q in orders(common, suite.default_orders())? {
            let cfg = VerifyConfig { q, seed: common.seed, samples };
            let r = run_suite(suite, &cfg)?;
            passed &= r.passed();
            for c in &r.checks {
                rows.push(json!({
                    "suite": suite.name(),
                    "q": q,
                    "check": c.name,
                    "instances": c.instances,
                    "failures": c.failures,
                    "note": c.note,
                }));
            }
            for c in r.failed_checks() {
                eprintln!("FAIL {} q={q}: {} ({} of {})", suite.name(), c.name, c.failures, c.instances);
            }
            reports.push(r.to_json());
        }
    }
    let body = json!({"seed": common.seed, "samples": samples, "passed": passed, "reports": reports});
    emit(common, &Report::new("verify", body, rows))?;
    Ok(if passed { Outcome::Ok } else { Outcome::Failed })
}

fn census(common: &Common, mode: CensusMode, count_only: bool) -> Res {
    match mode {
        CensusMode::Closed => {
            let mut rows = Vec::new();
            for q in orders(common, &[2])? {
                rows.push(closed_form_counts(q)?.to_json());
            }
            let body = json!({"mode": "closed", "counts": rows.clone()});
            emit(common, &Report::new("census", body, rows))?;
            Ok(Outcome::Ok)
        }
        CensusMode::Brute => {
            let f = single_field(common, Some(2))?;
            let r = brute_force_color_census(&f, common.budget.unwrap_or(1 << 27))?;
            let expected = closed_form_counts(f.order() as u32)?.white_vectors;
            let ok = BigUint::from(r.white) == expected;
            let mut body = json!({"mode": "brute"});
            merge(&mut body, r.to_json());
            merge(&mut body, json!({"formula_white": big_json(&expected), "matches_formula": ok}));
            let rows = vec![body.clone()];
            emit(common, &Report::new("census", body, rows))?;
            Ok(if ok { Outcome::Ok } else { Outcome::Failed })
        }
        CensusMode::Structured => {
            let f = single_field(common, Some(2))?;
            let r = if count_only {
                structured_counts(&f, common.budget.unwrap_or(1_000_000))?
            } else {
                structured_emission_report(&Albert::new(&f), common.budget.unwrap_or(100_000_000))?
            };
            let closed = closed_form_counts(f.order() as u32)?;
            let ok = r.cases.iter().zip(&closed.cases).all(|(c, e)| BigUint::from(c.count) == *e)
                && r.non_white.unwrap_or(0) == 0;
            let mut body = json!({"mode": "structured", "emitted": !count_only});
            merge(&mut body, r.to_json());
            let formula: Vec<Value> = closed.cases.iter().map(big_json).collect();
            merge(&mut body, json!({"formula_cases": formula, "matches_formula": ok}));
            let rows = vec![body.clone()];
            emit(common, &Report::new("census", body, rows))?;
            Ok(if ok { Outcome::Ok } else { Outcome::Failed })
        }
    }
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn orbit(common: &Common, start: &str, gens: GenSet) -> Res {
    let (alb, v) = parse_vector(common, start)?;
    let (kinds, name) = match gens {
        GenSet::Standard => (standard_generator_kinds(&alb), "standard"),
        GenSet::Stabilizer => (stabilizer_generator_kinds(&alb), "stabilizer"),
    };
    let ops = kinds.iter().map(|k| make_generator(&alb, k)).collect::<Result<Vec<_>, _>>()?;
    let opts = BfsOptions {
        limit: common.budget.map(|b| b as usize).unwrap_or(BfsOptions::default().limit),
        descriptor: name.into(),
    };
    let orbit = orbit_bfs(&alb, &ops, &v, &opts)?;
    let mut body = json!({"field": field_json(alb.field()), "start": alb.to_json(&v)});
    merge(&mut body, orbit.report.to_json());
    let rows = vec![body.clone()];
    emit(common, &Report::new("orbit", body, rows))?;
    if orbit.report.truncated {
        return Err(albert_forge::Error::Budget(format!("orbit exceeds {} points", opts.limit)).into());
    }
    Ok(Outcome::Ok)
}

fn dickson(common: &Common) -> Res {
    let primes: Vec<u32> = match common.p {
        Some(p) => vec![p],
        None if common.q.is_empty() => vec![2, 3, 5, 101],
        None => common
            .q
            .iter()
            .map(|&q| Field::with_order(q).map(|f| f.characteristic()))
            .collect::<Result<_, _>>()?,
    };
    let mut rows = Vec::new();
    let mut all = true;
    for p in primes {
        let f = Field::new(p, 1)?;
        let alb = Albert::new(&f);
        let det = alb.det_poly();
        let dk = dickson_poly(&f);
        let sum = det.add(&dk);
        all &= sum.is_zero();
        rows.push(json!({
            "p": p,
            "det_terms": det.len(),
            "dickson_terms": dk.len(),
            "sum_terms": sum.len(),
            "zero": sum.is_zero(),
        }));
    }
    let body = json!({"certificates": rows.clone(), "all_zero": all});
    emit(common, &Report::new("dickson", body, rows))?;
    Ok(if all { Outcome::Ok } else { Outcome::Failed })
}

fn orders_cmd(common: &Common) -> Res {
    let mut rows = Vec::new();
    let mut all = true;
    for q in orders(common, &[2, 3, 4, 5, 7, 8, 9])? {
        let ids = order_identities(q)?;
        all &= ids.all_hold();
        let c = closed_form_counts(q)?;
        let mut row = ids.to_json();
        merge(
            &mut row,
            json!({
                "se6_order": big_json(&c.se6),
                "f4_order": big_json(&c.f4),
                "twisted_se6_order": big_json(&c.twisted_se6),
            }),
        );
        rows.push(row);
    }
    let body = json!({"identities": rows.clone(), "all_hold": all});
    emit(common, &Report::new("orders", body, rows))?;
    Ok(if all { Outcome::Ok } else { Outcome::Failed })
}

fn classify(common: &Common, text: &str) -> Res {
    let (alb, v) = parse_vector(common, text)?;
    let f = alb.field();
    let color = alb.classify_color(&v)?;
    let mut body = json!({
        "field": field_json(f),
        "color": color,
        "det": f.coeffs(alb.det(&v)),
    });
    if f.is_quadratic() && color == Color::White {
        merge(&mut body, json!({"twisted": two_e6_point_type(&alb, &v)?.to_json(&alb)}));
    }
    let rows = vec![body.clone()];
    emit(common, &Report::new("classify", body, rows))?;
    Ok(Outcome::Ok)
}
