use std::time::Duration;

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use zerosum::construct::{
    build_lower_general, build_lowercnr, verify_construction, LowerCnrParams, LowerGeneralParams,
};
use zerosum::data::KnownValues;
use zerosum::error::Error;
use zerosum::group::GroupSpec;
use zerosum::modp::{self, criterion_report as report};
use zerosum::search::{s_l, SearchConfig, SearchValue};
use zerosum::sequence::{self, LengthSet, Sequence};
use zerosum::theorems::{conjecture_harness, HarnessSource};

create_exception!(pyzerosum, ZeroSumError, PyValueError);
create_exception!(pyzerosum, ResourceLimitError, ZeroSumError);

fn err(e: Error) -> PyErr {
    match e {
        Error::ResourceLimit(_) => ResourceLimitError::new_err(e.to_string()),
        other => ZeroSumError::new_err(other.to_string()),
    }
}

fn group(spec: &str) -> PyResult<GroupSpec> {
    spec.parse().map_err(err)
}

fn seq(g: &GroupSpec, text: &str) -> PyResult<Sequence> {
    Sequence::parse(g, text).map_err(err)
}

/// Normal form of a group spec, e.g. "C2xC6xC3" -> "C6^2".
#[pyfunction]
fn normalize(spec: &str) -> PyResult<String> {
    Ok(group(spec)?.to_string())
}

/// Invariant factors, order, exponent, rank and D* of a group.
#[pyfunction]
fn group_info<'py>(py: Python<'py>, spec: &str) -> PyResult<Bound<'py, PyDict>> {
    let g = group(spec)?;
    let d = PyDict::new(py);
    d.set_item("group", g.to_string())?;
    d.set_item("factors", g.factors().to_vec())?;
    d.set_item("order", g.order())?;
    d.set_item("exponent", g.exponent())?;
    d.set_item("rank", g.rank())?;
    d.set_item("d_star", g.d_star())?;
    Ok(d)
}

/// s_L(G) where L is `[1, leq]`, `{exactly}`, an explicit list, or all
/// positive lengths when none is given.
#[pyfunction]
#[pyo3(signature = (spec, leq=None, exactly=None, lengths=None, node_budget=None, seconds=None, symmetry=false))]
#[allow(clippy::too_many_arguments)]
fn invariant<'py>(
    py: Python<'py>,
    spec: &str,
    leq: Option<u64>,
    exactly: Option<u64>,
    lengths: Option<Vec<u64>>,
    node_budget: Option<u64>,
    seconds: Option<f64>,
    symmetry: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let g = group(spec)?;
    let l = match (leq, exactly, lengths) {
        (Some(k), None, None) => LengthSet::interval(k),
        (None, Some(m), None) => LengthSet::singleton(m),
        (None, None, Some(list)) => LengthSet::explicit(list),
        (None, None, None) => Ok(LengthSet::AllPositive),
        _ => {
            return Err(ZeroSumError::new_err(
                "give at most one of leq, exactly, lengths",
            ))
        }
    }
    .map_err(err)?;
    let time_budget = match seconds {
        Some(s) if !(s.is_finite() && s > 0.0) => {
            return Err(ZeroSumError::new_err("seconds must be positive"))
        }
        s => s.map(Duration::from_secs_f64),
    };
    let cfg = SearchConfig {
        node_budget: node_budget.unwrap_or(u64::MAX),
        time_budget,
        symmetry_reduction: symmetry,
        ..Default::default()
    };
    let r = py.detach(|| s_l(&g, &l, &cfg)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("group", g.to_string())?;
    d.set_item("L", l.to_string())?;
    d.set_item("value", r.value.finite())?;
    d.set_item("infinite", r.value == SearchValue::Infinite)?;
    d.set_item("complete", r.value.is_complete())?;
    if let SearchValue::Unknown { lower_bound } = r.value {
        d.set_item("lower_bound", lower_bound)?;
    }
    d.set_item("witness", r.witness.map(|s| s.to_string()))?;
    d.set_item("nodes", r.stats.nodes)?;
    Ok(d)
}

/// Length of the shortest nonempty zero-sum subsequence, or None.
#[pyfunction]
fn min_zero_sum_length(spec: &str, sequence: &str) -> PyResult<Option<usize>> {
    let g = group(spec)?;
    sequence::min_zero_sum_length(&seq(&g, sequence)?).map_err(err)
}

/// The homocyclic lower-bound sequence over C_n^r, as text.
#[pyfunction]
fn lowercnr(n: u64, r: usize, k: u64) -> PyResult<String> {
    let p = LowerCnrParams::new(n, r, k).map_err(err)?;
    Ok(build_lowercnr(p).map_err(err)?.to_string())
}

/// The general lower-bound sequence of length D*+k−1, as text.
#[pyfunction]
fn lower_general(spec: &str, k: i64) -> PyResult<String> {
    let p = LowerGeneralParams::new(group(spec)?, k).map_err(err)?;
    Ok(build_lower_general(&p).map_err(err)?.to_string())
}

/// Whether the sequence has the given length and no zero-sum subsequence
/// shorter than `min_zs`.
#[pyfunction]
fn verify(spec: &str, sequence: &str, length: usize, min_zs: usize) -> PyResult<bool> {
    let g = group(spec)?;
    Ok(verify_construction(&seq(&g, sequence)?, length, min_zs)
        .map_err(err)?
        .passed)
}

/// C(a, b) mod p by Lucas' theorem.
#[pyfunction]
fn binom_mod_p(a: u64, b: u64, p: u64) -> PyResult<u64> {
    modp::binom_mod_p(a, b, p).map_err(err)
}

/// Least i in [1, 2k−D] with a_i ≢ 0 (mod p), or None.
#[pyfunction]
fn compute_i0(t_len: u64, k: u64, p: u64, d: u64) -> PyResult<Option<u64>> {
    modp::compute_i0(t_len, k, p, d).map_err(err)
}

/// Residues a_i mod p, i₀, the short zero-sum guarantee and hypothesis flags.
#[pyfunction]
fn criterion_report<'py>(
    py: Python<'py>,
    t_len: u64,
    k: u64,
    p: u64,
    d: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let r = report(t_len, k, p, d).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("p", r.p)?;
    out.set_item("T_len", r.t_len)?;
    out.set_item("k", r.k)?;
    out.set_item("D", r.group_d)?;
    out.set_item("a", r.a_values)?;
    out.set_item("i0", r.i0)?;
    out.set_item("guarantees_short", r.guarantees_short)?;
    let flags = PyDict::new(py);
    flags.set_item("lifted_bound", r.flags.lifted_bound)?;
    flags.set_item("lifted_condition", r.flags.lifted_condition)?;
    flags.set_item("unit_bound", r.flags.unit_bound)?;
    out.set_item("flags", flags)?;
    Ok(out)
}

/// Runs the i₀ prediction sweep; returns (tuples, passed).
#[pyfunction]
#[pyo3(signature = (primes, max_t_len, ts=vec![0, 1]))]
fn sweep_i0(
    py: Python<'_>,
    primes: Vec<u64>,
    max_t_len: u64,
    ts: Vec<u32>,
) -> PyResult<(u64, bool)> {
    let s = py
        .detach(|| modp::sweep_i0(&primes, &ts, max_t_len))
        .map_err(err)?;
    Ok((s.tuples, s.passed()))
}

/// k_G from the bundled known-values table, or None when the table does not
/// determine it.
#[pyfunction]
fn k_g_bundled(spec: &str) -> PyResult<Option<u64>> {
    let table = KnownValues::bundled();
    let r = conjecture_harness(&group(spec)?, &HarnessSource::Bundled(&table)).map_err(err)?;
    Ok(r.k_g)
}

#[pymodule]
fn pyzerosum(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ZeroSumError", m.py().get_type::<ZeroSumError>())?;
    m.add(
        "ResourceLimitError",
        m.py().get_type::<ResourceLimitError>(),
    )?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(group_info, m)?)?;
    m.add_function(wrap_pyfunction!(invariant, m)?)?;
    m.add_function(wrap_pyfunction!(min_zero_sum_length, m)?)?;
    m.add_function(wrap_pyfunction!(lowercnr, m)?)?;
    m.add_function(wrap_pyfunction!(lower_general, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(binom_mod_p, m)?)?;
    m.add_function(wrap_pyfunction!(compute_i0, m)?)?;
    m.add_function(wrap_pyfunction!(criterion_report, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_i0, m)?)?;
    m.add_function(wrap_pyfunction!(k_g_bundled, m)?)?;
    Ok(())
}
