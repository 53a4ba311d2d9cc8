use std::fmt::Write as _;
use std::io::Read;
use std::time::Duration;

use serde_json::{json, Value};
use zerosum::construct::{
    build_inv2, build_lower_general, build_lowercnr, verify_construction, Inv2Params,
    LowerCnrParams, LowerGeneralParams,
};
use zerosum::data::KnownValues;
use zerosum::error::Error;
use zerosum::group::GroupSpec;
use zerosum::modp::{
    congruence_suite, criterion_report, criterion_suite, row_transform_suite, sweep_i0,
    zerosub_guarantee, CriterionReport,
};
use zerosum::search::{s_l, SearchConfig, SearchValue};
use zerosum::sequence::{LengthSet, Sequence};
use zerosum::theorems::{
    check_claim, claim_d_minus_two, claim_elementary_short, claim_p_group_short,
    conjecture_harness, tg_squared_property, ElementaryCase, HarnessSource, TgMode, TheoremClaim,
    ValueSource,
};

use crate::args::{
    ConjecturesArgs, CriteriaArgs, Family, Format, InvariantArgs, RunArgs, SweepArgs, TheoremsArgs,
    VerifyArgs,
};
use crate::error::CliError;
use crate::report::{aligned, opt, scalar, Report, Status, Table};

type Result<T> = std::result::Result<T, CliError>;

/// Split depth handed to the search; fixed so node counts do not depend on the worker count.
const PARALLEL_DEPTH: usize = 2;

/// Largest order for which the T·g² check enumerates every T.
const TG_EXHAUSTIVE_ORDER: u64 = 32;

const TG_SAMPLES: usize = 200;

fn group(text: &str) -> Result<GroupSpec> {
    Ok(text.parse()?)
}

fn sequence(group: &GroupSpec, text: &str) -> Result<Sequence> {
    if text == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        return Ok(Sequence::parse(group, buf.trim())?);
    }
    Ok(Sequence::parse(group, text)?)
}

pub fn search_config(run: &RunArgs) -> Result<SearchConfig> {
    let time_budget = match run.budget_seconds {
        Some(s) if !(s.is_finite() && s > 0.0) => {
            return Err(CliError::Usage(
                "--budget-seconds must be a positive number".into(),
            ))
        }
        s => s.map(Duration::from_secs_f64),
    };
    Ok(SearchConfig {
        node_budget: run.budget_nodes.unwrap_or(u64::MAX),
        time_budget,
        parallel_depth: PARALLEL_DEPTH,
        ..Default::default()
    })
}

pub fn value_json(v: SearchValue) -> Value {
    match v {
        SearchValue::Finite(x) => json!(x),
        SearchValue::Infinite => json!("infinite"),
        SearchValue::Unknown { .. } => json!("unknown"),
    }
}

fn value_status(v: SearchValue) -> Status {
    if v.is_complete() {
        Status::Complete
    } else {
        Status::BudgetExhausted
    }
}

pub fn invariant(args: &InvariantArgs, run: &RunArgs) -> Result<Report> {
    let g = group(&args.group)?;
    let w = &args.which;
    let lengths = if let Some(k) = w.leq {
        LengthSet::interval(k)?
    } else if let Some(m) = w.exactly {
        LengthSet::singleton(m)?
    } else if w.davenport {
        LengthSet::AllPositive
    } else if w.eta {
        LengthSet::interval(g.exponent())?
    } else if w.egz {
        LengthSet::singleton(g.exponent())?
    } else if let Some(k) = w.kexp {
        LengthSet::singleton(k * g.exponent())?
    } else if let Some(list) = &w.lengths {
        LengthSet::explicit(list.iter().copied())?
    } else {
        return Err(CliError::Usage("no length set given".into()));
    };
    let cfg = SearchConfig {
        symmetry_reduction: args.symmetry,
        horizon: args.horizon,
        ..search_config(run)?
    };
    let r = s_l(&g, &lengths, &cfg)?;
    let mut out = json!({
        "group": g.to_string(),
        "L": lengths.to_string(),
        "value": value_json(r.value),
    });
    if let SearchValue::Unknown { lower_bound } = r.value {
        out["lower_bound"] = json!(lower_bound);
    }
    out["witness"] = json!(r.witness.map(|s| s.to_string()));
    out["nodes"] = json!(r.stats.nodes);
    out["seconds"] = json!(r.stats.seconds);
    out["complete"] = json!(r.value.is_complete());
    Ok(Report::json(out, value_status(r.value)))
}

pub fn construct(family: &Family) -> Result<Report> {
    let (name, s, min_zs) = match family {
        Family::Lowercnr { n, r, k } => {
            let params = LowerCnrParams::new(*n, *r, *k)?;
            ("lowercnr", build_lowercnr(params)?, params.min_zero_sum())
        }
        Family::General { group: text, k } => {
            let params = LowerGeneralParams::new(group(text)?, *k)?;
            (
                "general",
                build_lower_general(&params)?,
                params.min_zero_sum(),
            )
        }
        Family::Inv2 { n, k, xs, x } => {
            let params = match (xs, x) {
                (Some(xs), _) => Inv2Params::Xs(xs.clone()),
                (None, Some(x)) => Inv2Params::X(*x),
                (None, None) => Inv2Params::Default,
            };
            let s = build_inv2(*n, *k, &params)?;
            let min_zs = (2 * n).saturating_sub(*k) as usize;
            ("inv2", s, min_zs)
        }
    };
    let text = format!("{s}\n");
    let json = json!({
        "family": name,
        "group": s.group().to_string(),
        "sequence": s.to_string(),
        "length": s.len(),
        "min_zero_sum_at_least": min_zs,
    });
    Ok(Report {
        text: Some(text),
        default_format: Format::Text,
        ..Report::json(json, Status::Complete)
    })
}

pub fn verify(args: &VerifyArgs) -> Result<Report> {
    let g = group(&args.group)?;
    let s = sequence(&g, &args.sequence)?;
    let r = verify_construction(&s, args.len.unwrap_or(s.len()), args.min_zs)?;
    let status = if r.passed {
        Status::Complete
    } else {
        Status::CheckFailed
    };
    let json = json!({
        "group": g.to_string(),
        "sequence": s.to_string(),
        "length": r.length,
        "expected_length": r.expected_length,
        "min_zero_sum_length": r.min_zero_sum_length,
        "required_min": r.required_min,
        "length_ok": r.length_ok,
        "min_ok": r.min_ok,
        "passed": r.passed,
    });
    Ok(Report::json(json, status))
}

fn criterion_json(r: &CriterionReport) -> Value {
    let a: Vec<[u64; 2]> = r.a_values.iter().map(|&(i, v)| [i, v]).collect();
    json!({
        "p": r.p,
        "T_len": r.t_len,
        "k": r.k,
        "D": r.group_d,
        "a": a,
        "i0": r.i0,
        "guarantees_short": r.guarantees_short,
        "prediction": r.prediction,
        "flags": {
            "lifted_bound": r.flags.lifted_bound,
            "lifted_condition": r.flags.lifted_condition,
            "unit_bound": r.flags.unit_bound,
        },
    })
}

pub fn criteria(args: &CriteriaArgs) -> Result<Report> {
    let r = match (&args.group, &args.sequence) {
        (Some(g), Some(seq)) => {
            let g = group(g)?;
            let t = sequence(&g, seq)?;
            let p = g
                .p_group_prime()
                .ok_or_else(|| CliError::Usage(format!("{g} is not a p-group")))?;
            if args.p.is_some_and(|q| q != p) || args.t_len.is_some_and(|n| n != t.len() as u64) {
                return Err(CliError::Usage(
                    "--p and --T-len must match the sequence".into(),
                ));
            }
            zerosub_guarantee(&t, args.k, p, args.d.unwrap_or(g.d_star()))?
        }
        _ => {
            let need = |v: Option<u64>, flag: &str| {
                v.ok_or_else(|| CliError::Usage(format!("{flag} is required")))
            };
            criterion_report(
                need(args.t_len, "--T-len")?,
                args.k,
                need(args.p, "--p")?,
                need(args.d, "--D")?,
            )?
        }
    };
    Ok(Report::json(criterion_json(&r), Status::Complete))
}

fn parse_case(text: &str) -> Result<ElementaryCase> {
    let bad = || {
        CliError::Usage(format!(
            "cannot parse case '{text}'; use power2:T, fourth:P or diagonal:P,D"
        ))
    };
    let (kind, rest) = text.split_once(':').ok_or_else(bad)?;
    let nums: Vec<u64> = rest
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    match (kind, nums.as_slice()) {
        ("power2", [t]) => Ok(ElementaryCase::PowerOfTwo {
            t: u32::try_from(*t).map_err(|_| bad())?,
        }),
        ("fourth", [p]) => Ok(ElementaryCase::FourthPower { p: *p }),
        ("diagonal", [p, d]) => Ok(ElementaryCase::Diagonal {
            p: *p,
            d: *d as usize,
        }),
        _ => Err(bad()),
    }
}

/// Elementary cases whose group is `g`.
fn cases_for(g: &GroupSpec) -> Vec<ElementaryCase> {
    let Some(p) = g.p_group_prime() else {
        return Vec::new();
    };
    let candidates = [
        ElementaryCase::PowerOfTwo {
            t: (g.rank() as u32 + 2).trailing_zeros().saturating_sub(1),
        },
        ElementaryCase::FourthPower { p },
        ElementaryCase::Diagonal { p, d: g.rank() },
    ];
    candidates
        .into_iter()
        .filter(|c| c.shape().is_ok_and(|(h, _)| &h == g))
        .collect()
}

/// Keeps claims whose constructor accepted the parameters.
fn accept(claim: zerosum::error::Result<TheoremClaim>, out: &mut Vec<TheoremClaim>) -> Result<()> {
    match claim {
        Ok(c) => out.push(c),
        Err(Error::InvalidInput(_)) => {}
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn claim_line(c: &TheoremClaim) -> String {
    let kind = scalar(&json!(c.kind));
    let hyps: Vec<String> = c
        .hypotheses
        .iter()
        .map(|h| format!("{}={}", h.name, h.holds))
        .collect();
    let bound = match c.bound {
        Some(b) if c.equality => format!("s≤{}({}) = {b}", c.leq, c.group),
        Some(b) => format!("s≤{}({}) ≤ {b}", c.leq, c.group),
        None => format!("s≤{}({}): inactive", c.leq, c.group),
    };
    format!(
        "{kind}: {bound} [{}] desk={}",
        hyps.join(", "),
        c.verifiable_at_desk
    )
}

pub fn theorems(args: &TheoremsArgs, run: &RunArgs) -> Result<Report> {
    let cfg = search_config(run)?;
    let mut claims = Vec::new();
    let g = match (&args.group, &args.case) {
        (Some(text), _) => {
            let g = group(text)?;
            accept(claim_d_minus_two(&g, &cfg), &mut claims)?;
            if g.p_group_prime().is_some() {
                for k in g.exponent() + 1..=g.d_star() {
                    accept(claim_p_group_short(&g, k), &mut claims)?;
                }
            }
            for case in cases_for(&g) {
                accept(claim_elementary_short(case), &mut claims)?;
            }
            g
        }
        (None, Some(case)) => {
            let case = parse_case(case)?;
            claims.push(claim_elementary_short(case)?);
            case.shape()?.0
        }
        (None, None) => return Err(CliError::Usage("give a group or --case".into())),
    };

    let mut status = Status::Complete;
    let mut text = String::new();
    let mut entries = Vec::new();
    for c in &claims {
        let mut entry = serde_json::to_value(c).expect("claim json");
        let _ = write!(text, "{}", claim_line(c));
        if args.check && c.active() && c.verifiable_at_desk {
            let check = check_claim(c, &cfg)?;
            if check.bound_holds == Some(false) || check.equality_holds == Some(false) {
                status = status.max(Status::CheckFailed);
            } else if !check.computed.is_complete() {
                status = status.max(Status::BudgetExhausted);
            }
            entry["check"] = json!({
                "computed": value_json(check.computed),
                "bound_holds": check.bound_holds,
                "equality_holds": check.equality_holds,
            });
            let _ = write!(
                text,
                " computed={} bound_holds={} equality_holds={}",
                scalar(&value_json(check.computed)),
                opt(check.bound_holds),
                opt(check.equality_holds)
            );
        }
        text.push('\n');
        entries.push(entry);
    }
    let mut json = json!({ "group": g.to_string(), "claims": entries });
    if args.tg {
        let exhaustive = g.order().is_some_and(|n| n <= TG_EXHAUSTIVE_ORDER);
        let sampled = TgMode::Sampled {
            trials: TG_SAMPLES,
            seed: run.seed,
        };
        let r = match tg_squared_property(
            &g,
            if exhaustive {
                TgMode::Exhaustive
            } else {
                sampled
            },
            &cfg,
        ) {
            Err(Error::ResourceLimit(_)) if exhaustive => tg_squared_property(&g, sampled, &cfg)?,
            other => other?,
        };
        if r.violations > 0 {
            status = status.max(Status::CheckFailed);
        } else if !r.complete {
            status = status.max(Status::BudgetExhausted);
        }
        let _ = writeln!(
            text,
            "T·g² short zero-sum: checked={} violations={} complete={}",
            r.checked, r.violations, r.complete
        );
        json["tg_squared"] = serde_json::to_value(&r).expect("tg json");
    }
    Ok(Report {
        text: Some(text),
        ..Report::json(json, status)
    })
}

fn source_name(s: ValueSource) -> String {
    scalar(&json!(s))
}

pub fn conjectures(args: &ConjecturesArgs, run: &RunArgs) -> Result<Report> {
    let g = group(&args.group)?;
    let table_data;
    let source = if args.bundled || run.data.is_some() {
        table_data = match &run.data {
            Some(path) => KnownValues::load(path)?,
            None => KnownValues::bundled(),
        };
        HarnessSource::Bundled(&table_data)
    } else {
        HarnessSource::Computed(search_config(run)?)
    };
    let r = conjecture_harness(&g, &source)?;
    let computed = matches!(source, HarnessSource::Computed(_));
    let missing = r.davenport_source == ValueSource::Unknown
        || r.rows.iter().any(|row| row.source == ValueSource::Unknown)
        || r.kexp_rows
            .iter()
            .any(|row| row.source == ValueSource::Unknown);
    let status = if computed && missing {
        Status::BudgetExhausted
    } else {
        Status::Complete
    };
    let table = Table {
        headers: vec![
            "j",
            "leq",
            "value",
            "target",
            "holds",
            "predicted",
            "source",
        ],
        rows: r
            .rows
            .iter()
            .map(|row| {
                vec![
                    row.j.to_string(),
                    row.leq.to_string(),
                    opt(row.value),
                    row.target.to_string(),
                    opt(row.holds),
                    row.predicted.to_string(),
                    source_name(row.source),
                ]
            })
            .collect(),
    };
    let mut text = format!("group: {}\nD: {}\n", r.group, opt(r.davenport));
    text += &aligned(&table);
    for (name, v) in [
        ("k_G", opt(r.k_g)),
        ("k_G = (D+1)/2", opt(r.k_g_is_half)),
        ("single crossing", opt(r.single_crossing)),
        ("regimes agree", opt(r.regimes_agree)),
        ("s≤D−2 = D+1", opt(r.d_minus_two_is_d_plus_one)),
    ] {
        let _ = writeln!(text, "{name}: {v}");
    }
    for row in &r.kexp_rows {
        let _ = writeln!(
            text,
            "s_{}(G) = {} vs 2D−1 = {}: consistent={} ({})",
            row.length,
            opt(row.value),
            row.target,
            opt(row.consistent),
            source_name(row.source)
        );
    }
    Ok(Report {
        table: Some(table),
        text: Some(text),
        ..Report::json(serde_json::to_value(&r).expect("report json"), status)
    })
}

/// Groups exercised by the randomized suites for prime `p`.
fn suite_groups(p: u64) -> Result<Vec<GroupSpec>> {
    let mut out = vec![GroupSpec::homocyclic(p, 2)?];
    if p.pow(3) <= 125 {
        out.push(GroupSpec::homocyclic(p, 3)?);
    }
    Ok(out)
}

pub fn sweep(args: &SweepArgs, run: &RunArgs) -> Result<Report> {
    let s = sweep_i0(&args.p, &args.t, args.max_t)?;
    let mut rows: Vec<(String, u64, u64)> = vec![
        ("i0_exact".into(), s.exact_checked, s.exact_mismatches),
        (
            "i0_boundary".into(),
            s.needs_l0_checked,
            s.needs_l0_mismatches,
        ),
        (
            "i0_lower_bound".into(),
            s.lower_bound_checked,
            s.lower_bound_violations,
        ),
        ("lifted_bound".into(), s.lifted_checked, s.lifted_violations),
        (
            "lifted_condition_implies_bound".into(),
            s.lifted_checked,
            s.condition_without_bound,
        ),
        ("unit_bound".into(), s.unit_checked, s.unit_violations),
        (
            "row_transform".into(),
            args.samples as u64,
            row_transform_suite(args.samples, run.seed) as u64,
        ),
    ];
    for &p in &args.p {
        for g in suite_groups(p)? {
            let v = congruence_suite(&g, args.samples, run.seed)?;
            rows.push((format!("congruence {g}"), args.samples as u64, v as u64));
            let (fired, v) = criterion_suite(&g, args.samples, run.seed)?;
            rows.push((format!("criterion {g}"), fired as u64, v as u64));
        }
    }
    let passed = rows.iter().all(|r| r.2 == 0);
    let table = Table {
        headers: vec!["check", "checked", "violations", "pass"],
        rows: rows
            .iter()
            .map(|(name, c, v)| {
                vec![
                    name.clone(),
                    c.to_string(),
                    v.to_string(),
                    (*v == 0).to_string(),
                ]
            })
            .collect(),
    };
    let json = json!({
        "primes": args.p,
        "max_T": args.max_t,
        "t": args.t,
        "samples": args.samples,
        "seed": run.seed,
        "tuples": s.tuples,
        "boundary_cases_needing_offset": s.needs_l0_uncorrected_mismatches,
        "rows": rows
            .iter()
            .map(|(name, c, v)| json!({ "check": name, "checked": c, "violations": v, "pass": *v == 0 }))
            .collect::<Vec<_>>(),
        "passed": passed,
    });
    let status = if passed {
        Status::Complete
    } else {
        Status::CheckFailed
    };
    Ok(Report {
        table: Some(table),
        ..Report::json(json, status)
    })
}
