use std::collections::BTreeMap;
use std::str::FromStr;

use serde_json::{json, Value};
use sinesum::csc::{
    check_trig_lemma, direct_sum, even_matrix_full, even_row, even_sum_exact, matrix_first_row, matrix_full,
    odd_coeff_row, SumQuery, TransferMatrix, TrigLemma,
};
use sinesum::identities::{run_suite, CheckReport, CheckStatus, IdentityId, Params, SuiteLimits};
use sinesum::numeric::{rel_diff, FloatContext, HighPrecFloat};
use sinesum::zeta::{
    r_error, z_approx, z_even_exact, zeta_even_exact, zeta_odd_integral, zeta_reference, QuadratureConfig,
    QuadratureMethod,
};
use sinesum::{CoefficientRow, Rational};

use crate::output::{Report, Table};
use crate::table::{emit_table, TableSpec, DIRECT_MAX_N};
use crate::{CliError, Command, Method, RowKind};

/// Largest level printed as a full matrix.
const MATRIX_MAX_N: u32 = 8;
/// Largest `m` accepted for rows and matrices.
const ROW_MAX_M: u32 = 32;

pub fn execute(cmd: &Command, precision: usize) -> Result<Report, CliError> {
    match cmd {
        Command::Sum { s, n, tol } => sum(*s, *n, *tol, precision),
        Command::Row { m, n, kind } => row(*m, *n, *kind),
        Command::Matrix { m, n, even } => matrix(*m, *n, *even),
        Command::Verify { suite, max_m, max_n } => verify(suite, *max_m, *max_n, precision),
        Command::Zeta { odd, even, s, n, tol, method } => match (odd, even, s) {
            (Some(o), _, _) => zeta_odd(*o, *tol, *method, precision),
            (_, Some(k), _) => zeta_even(*k, precision),
            (_, _, Some(m)) => zeta_prelimit(*m, n.expect("clap requires --n"), precision),
            _ => unreachable!("clap requires one of --odd, --even, --s"),
        },
        Command::Table { kind, k, m, n, n_min, n_max } => {
            let (flag, index) = match kind {
                crate::TableKind::EvenSums => ("--k", k),
                _ => ("--m", m),
            };
            let index = index.ok_or_else(|| CliError::new("USAGE", format!("{kind} needs {flag}")))?;
            let ns = match (n, n_min, n_max) {
                (Some(n), _, _) => *n..=*n,
                (None, Some(a), Some(b)) => *a..=*b,
                _ => return Err(CliError::new("USAGE", "give --n or both --n-min and --n-max")),
            };
            let spec = TableSpec { kind: *kind, index, ns, precision };
            let t = emit_table(&spec)?;
            Ok(Report {
                command: "table",
                payload: json!({ "kind": kind.tag(), "rows": t.to_json() }),
                text: t.to_text(),
                table: t,
                failed: false,
            })
        }
    }
}

fn range(name: &str, v: u32, ok: bool, range: &str) -> Result<(), CliError> {
    if ok {
        Ok(())
    } else {
        Err(CliError::new("RANGE", format!("{name} = {v} out of range ({range})")))
    }
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}

fn sum(s: u32, n: u32, tol: f64, precision: usize) -> Result<Report, CliError> {
    range("n", n, (2..=DIRECT_MAX_N).contains(&n), "2..=14")?;
    let q = SumQuery::new(s, n)?;
    let direct = direct_sum(q, precision)?;
    let mut cx = FloatContext::new(precision + 32);
    let (closed, exact, row) = if s % 2 == 0 {
        let e = even_sum_exact(s / 2, n);
        (cx.rational(&e), Some(e), None)
    } else {
        let r = odd_coeff_row(s / 2, n);
        (r.dot_csc(&mut cx), None, Some(r))
    };
    let rel = rel_diff(&closed, &direct);
    let pass = rel <= HighPrecFloat::from_f64(tol, precision + 32);

    let mut text = format!("S({s}, {n}) = {}\n", direct.to_sci_string(30));
    let mut table = Table::new(["s", "n", "direct", "closed_form", "rel_error", "status"]);
    let closed_json = match (&exact, &row) {
        (Some(e), _) => {
            text += &format!("closed form: {e}\n");
            json!({ "exact": e.to_string() })
        }
        (_, Some(r)) => {
            text += &format!("csc row over sin((2j-1)pi/2^{n}): {r}\n");
            json!({ "row": strings(&r.entries) })
        }
        _ => unreachable!(),
    };
    text += &format!("relative error {}  {} (tol {tol:e})\n", rel.to_sci_string(6), status(pass));
    table.push([
        s.to_string(),
        n.to_string(),
        direct.to_string(),
        closed.with_precision(precision).to_string(),
        rel.to_sci_string(6),
        status(pass).to_string(),
    ]);
    Ok(Report {
        command: "sum",
        payload: json!({
            "s": s,
            "n": n,
            "terms": q.terms(),
            "value": direct.to_string(),
            "closed_form": closed_json,
            "rel_error": rel.to_sci_string(6),
            "tol": tol,
            "status": status(pass),
        }),
        table,
        text,
        failed: !pass,
    })
}

fn row_report(command: &'static str, label: &str, r: &CoefficientRow, extra: Value) -> Report {
    let mut table = Table::new(["j", "coeff"]);
    for (j, c) in r.entries.iter().enumerate() {
        table.push([(j + 1).to_string(), c.to_string()]);
    }
    let mut payload = json!({ "row": r });
    if let (Value::Object(p), Value::Object(e)) = (&mut payload, extra) {
        p.extend(e);
    }
    Report { command, payload, table, text: format!("{label}\n{r}\n"), failed: false }
}

fn row(m: u32, n: u32, kind: RowKind) -> Result<Report, CliError> {
    range("n", n, (2..=DIRECT_MAX_N).contains(&n), "2..=14")?;
    range("m", m, m <= ROW_MAX_M, "0..=32")?;
    let (r, label) = match kind {
        RowKind::Odd => (odd_coeff_row(m, n), format!("S({}, {n}) over csc((2j-1)pi/2^{n})", 2 * m + 1)),
        RowKind::First => (matrix_first_row(m, n), format!("first row of M_{n} for power {}", 2 * m + 1)),
        RowKind::Even => {
            range("m", m, m >= 1, "1..=32")?;
            (even_row(m, n), format!("S({}, {n}) over sin(k pi/2^{})", 2 * m, n - 1))
        }
    };
    let kind = match kind {
        RowKind::Odd => "odd",
        RowKind::First => "first",
        RowKind::Even => "even",
    };
    Ok(row_report("row", &label, &r, json!({ "m": m, "kind": kind })))
}

fn matrix(m: u32, n: u32, even: bool) -> Result<Report, CliError> {
    range("n", n, (2..=MATRIX_MAX_N).contains(&n), "2..=8")?;
    range("m", m, m <= ROW_MAX_M, "0..=32")?;
    if even {
        range("m", m, m >= 1, "1..=32")?;
    }
    let mx: TransferMatrix = if even { even_matrix_full(m, n) } else { matrix_full(m, n) };
    let dense = mx.to_dense();
    let mut table = Table::new(std::iter::once("j".to_string()).chain((1..=dense.len()).map(|k| format!("c{k}"))));
    let mut text = String::new();
    for (j, r) in dense.iter().enumerate() {
        table.push(std::iter::once((j + 1).to_string()).chain(r.iter().map(|c| c.to_string())));
        text += &format!("({})\n", strings(r).join(", "));
    }
    let rows: Vec<Vec<String>> = dense.iter().map(|r| strings(r)).collect();
    Ok(Report {
        command: "matrix",
        payload: json!({ "m": m, "n": n, "even": even, "power": mx.power, "rows": rows }),
        table,
        text,
        failed: false,
    })
}

enum Selection {
    All,
    Identities,
    Trig,
    Identity(IdentityId),
    Lemma(TrigLemma),
}

fn select(suite: &str) -> Result<Selection, CliError> {
    Ok(match suite.to_ascii_lowercase().as_str() {
        "all" => Selection::All,
        "identities" => Selection::Identities,
        "trig" => Selection::Trig,
        _ => {
            let tag = suite.to_ascii_uppercase();
            if let Ok(id) = IdentityId::from_str(&tag) {
                Selection::Identity(id)
            } else if let Ok(l) = TrigLemma::from_str(&tag) {
                Selection::Lemma(l)
            } else {
                return Err(CliError::new("UNKNOWN_SUITE", format!("no identity or lemma named `{suite}`")));
            }
        }
    })
}

fn params_text(p: &Params) -> String {
    let parts: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
    parts.join(" ")
}

fn verify(suite: &str, max_m: i64, max_n: i64, precision: usize) -> Result<Report, CliError> {
    if max_m < 0 || max_n < 2 {
        return Err(CliError::new("RANGE", "need --max-m >= 0 and --max-n >= 2"));
    }
    let (ids, lemmas): (Vec<IdentityId>, Vec<TrigLemma>) = match select(suite)? {
        Selection::All => (IdentityId::ALL.to_vec(), TrigLemma::ALL.to_vec()),
        Selection::Identities => (IdentityId::ALL.to_vec(), vec![]),
        Selection::Trig => (vec![], TrigLemma::ALL.to_vec()),
        Selection::Identity(id) => (vec![id], vec![]),
        Selection::Lemma(l) => (vec![], vec![l]),
    };
    let mut reports = run_suite(&ids, SuiteLimits { max_m, max_n });
    for l in lemmas {
        for p in l.default_sweep(max_m, max_n) {
            reports.push(check_trig_lemma(l, p["n"] as u32, &p, precision)?);
        }
    }

    let mut per: BTreeMap<&str, (usize, usize, usize, usize, Vec<String>)> = BTreeMap::new();
    for r in &reports {
        let e = per.entry(r.identity.as_str()).or_default();
        e.0 += 1;
        match r.status {
            CheckStatus::Pass => e.1 += 1,
            CheckStatus::Fail => e.2 += 1,
            CheckStatus::Skipped => e.3 += 1,
        }
        if let Some(v) = &r.variant {
            if !e.4.contains(v) {
                e.4.push(v.clone());
            }
        }
    }
    let count = |s: CheckStatus| reports.iter().filter(|r| r.status == s).count();
    let (pass, fail, skipped) = (count(CheckStatus::Pass), count(CheckStatus::Fail), count(CheckStatus::Skipped));

    let mut summary = Table::new(["identity", "checks", "pass", "fail", "skipped", "variant"]);
    for (id, (n, p, f, s, v)) in &per {
        summary.push([id.to_string(), n.to_string(), p.to_string(), f.to_string(), s.to_string(), v.join("; ")]);
    }
    let failures: Vec<&CheckReport> = reports.iter().filter(|r| r.is_fail()).collect();
    let mut text = summary.to_text();
    for f in &failures {
        text += &format!("FAIL {} [{}]: {}\n", f.identity, params_text(&f.params), f.residual.as_deref().unwrap_or(""));
    }
    text += &format!(
        "{} checks: {pass} passed, {fail} failed, {skipped} skipped  {}\n",
        reports.len(),
        status(fail == 0)
    );

    let mut table = Table::new(["identity", "params", "status", "variant", "residual"]);
    for r in &reports {
        table.push([
            r.identity.clone(),
            params_text(&r.params),
            r.status.to_string(),
            r.variant.clone().unwrap_or_default(),
            r.residual.clone().unwrap_or_default(),
        ]);
    }
    Ok(Report {
        command: "verify",
        payload: json!({
            "suite": suite,
            "max_m": max_m,
            "max_n": max_n,
            "summary": { "total": reports.len(), "pass": pass, "fail": fail, "skipped": skipped },
            "identities": summary.to_json(),
            "failures": failures,
            "status": status(fail == 0),
        }),
        table,
        text,
        failed: fail > 0,
    })
}

fn quantities(pairs: &[(&str, String)]) -> (Table, String, Value) {
    let mut t = Table::new(["quantity", "value"]);
    let mut text = String::new();
    let mut obj = serde_json::Map::new();
    for (k, v) in pairs {
        t.push([k.to_string(), v.clone()]);
        text += &format!("{k}: {v}\n");
        obj.insert(k.to_string(), Value::String(v.clone()));
    }
    (t, text, Value::Object(obj))
}

fn zeta_odd(s: u32, tol: f64, method: Method, precision: usize) -> Result<Report, CliError> {
    if s < 3 || s % 2 == 0 {
        return Err(CliError::new("DOMAIN", format!("--odd expects an odd argument >= 3, got {s}")));
    }
    let j = (s - 1) / 2;
    let cfg = QuadratureConfig {
        method: match method {
            Method::Simpson => QuadratureMethod::AdaptiveSimpson,
            Method::Gauss => QuadratureMethod::GaussLegendrePanels,
        },
        abs_tolerance: tol,
        precision,
        ..QuadratureConfig::default()
    };
    let v = zeta_odd_integral(j, &cfg)?;
    let reference = zeta_reference(&Rational::from_integer(s.into()), precision)?;
    let err = &v - &reference;
    let pass = err.abs() <= HighPrecFloat::from_f64(tol, precision);
    let digits = (-tol.log10()).ceil().max(0.0) as usize + 4;
    let (table, mut text, mut payload) = quantities(&[
        ("argument", s.to_string()),
        ("value", v.to_sci_string(digits)),
        ("reference", reference.to_sci_string(digits + 4)),
        ("abs_error", err.to_sci_string(6)),
        ("status", status(pass).to_string()),
    ]);
    payload["method"] = json!(cfg.method);
    payload["tol"] = json!(tol);
    text = format!("zeta({s}) = {} by the Euler polynomial integral\n", v.to_sci_string(digits)) + &text;
    Ok(Report { command: "zeta", payload, table, text, failed: !pass })
}

fn zeta_even(k: u32, precision: usize) -> Result<Report, CliError> {
    let z = zeta_even_exact(k)?;
    let mut cx = FloatContext::new(precision);
    let (table, text, mut payload) = quantities(&[
        ("argument", (2 * k).to_string()),
        ("exact", z.to_string()),
        ("value", z.to_float(&mut cx).to_string()),
    ]);
    payload["pi_multiple"] = json!(z);
    Ok(Report { command: "zeta", payload, table, text, failed: false })
}

fn zeta_prelimit(m: u32, n: u32, precision: usize) -> Result<Report, CliError> {
    range("n", n, (2..=DIRECT_MAX_N).contains(&n), "2..=14")?;
    let v = z_approx(m, n, precision)?;
    let mut pairs = vec![("m", m.to_string()), ("n", n.to_string()), ("value", v.to_string())];
    let mut failed = false;
    if m % 2 == 0 {
        let k = m / 2;
        let exact = z_even_exact(k, n)?;
        let zeta = zeta_even_exact(k)?;
        let r = r_error(k, n)?;
        let holds = zeta.checked_add(&r).as_ref() == Some(&exact);
        failed = !holds;
        pairs.push(("exact", exact.to_string()));
        pairs.push(("zeta", zeta.to_string()));
        pairs.push(("error_term", r.to_string()));
        pairs.push(("decomposition", status(holds).to_string()));
    } else {
        let reference = zeta_reference(&Rational::from_integer(m.into()), precision)?;
        pairs.push(("reference", reference.to_string()));
        pairs.push(("error", (&v - &reference).to_sci_string(12)));
    }
    let (table, text, payload) = quantities(&pairs);
    Ok(Report { command: "zeta", payload, table, text, failed })
}
