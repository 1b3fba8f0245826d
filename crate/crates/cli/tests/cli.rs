use sinesum::exact::{parse_rational, pow2};
use sinesum::Rational;
use sinesum_cli::{emit_table, run, TableKind, TableSpec};

fn sinesum(args: &str) -> (i32, String, String) {
    let argv = std::iter::once("sinesum").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn matrix_display() {
    let (code, out, _) = sinesum("matrix --m 1 --n 4");
    assert_eq!(code, 0);
    assert_eq!(out, "(2, 5, 7, 8)\n(7, 2, -8, 5)\n(5, 8, 2, -7)\n(-8, 7, -5, 2)\n");
}

#[test]
fn sum_prints_value_and_row() {
    let (code, out, _) = sinesum("sum --s 3 --n 4 --precision 256");
    assert_eq!(code, 0);
    assert!(out.starts_with("S(3, 4) = 1.433079268203494"), "{out}");
    assert!(out.contains("(8, 20, 28, 32)"));
    assert!(out.contains("PASS"));

    let (code, out, _) = sinesum("sum --s 8 --n 6 --format json");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["payload"]["status"], "PASS");
    let exact = parse_rational(v["payload"]["closed_form"]["exact"].as_str().unwrap()).unwrap();
    assert_eq!(exact, sinesum::even_sum_exact(4, 6));
}

#[test]
fn failing_check_exits_one() {
    let (code, out, _) = sinesum("sum --s 5 --n 5 --tol 2^-1000");
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"));
}

#[test]
fn verify_small_suite() {
    let (code, out, _) = sinesum("verify --suite all --max-m 4 --max-n 6");
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("0 failed, 9 skipped  PASS"), "{out}");
    for id in sinesum::IdentityId::ALL {
        assert!(out.contains(id.tag()), "{id} missing");
    }
    for l in sinesum::TrigLemma::ALL {
        assert!(out.contains(l.tag()), "{} missing", l.tag());
    }

    let (code, out, _) = sinesum("verify --suite euler_explicit --format json");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["payload"]["summary"]["fail"], 0);
    assert_eq!(v["payload"]["identities"][0]["identity"], "EULER_EXPLICIT");
}

#[test]
fn zeta_variants() {
    let (code, out, _) = sinesum("zeta --odd 3 --tol 1e-12");
    assert_eq!(code, 0);
    assert!(out.contains("zeta(3) = 1.202056903159594 "), "{out}");

    let (code, out, _) = sinesum("zeta --even 2 --format json");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["payload"]["pi_multiple"], serde_json::json!({"coeff": "1/90", "pi_pow": 4}));

    let (code, out, _) = sinesum("zeta --s 6 --n 3");
    assert_eq!(code, 0);
    assert!(out.contains("decomposition: PASS"));

    let (code, _, err) = sinesum("zeta --odd 4");
    assert_eq!(code, 2);
    assert!(err.starts_with("error[DOMAIN]"));
}

#[test]
fn tables() {
    let (code, out, _) = sinesum("table --kind ODD_ROWS --m 1 --n 4 --format csv");
    assert_eq!(code, 0);
    assert_eq!(out, "m,n,j,coeff\n1,4,1,8\n1,4,2,20\n1,4,3,28\n1,4,4,32\n");

    let (code, out, _) = sinesum("table --kind Z_CONVERGENCE --m 1 --n-min 4 --n-max 10 --format csv");
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("m,n,value,reference,error"));
    let errs: Vec<f64> = lines.map(|l| l.rsplit(',').next().unwrap().parse().unwrap()).collect();
    assert_eq!(errs.len(), 7);
    assert!(errs.windows(2).all(|w| w[1].abs() < w[0].abs()));

    let (code, _, err) = sinesum("table --kind Z_CONVERGENCE --m 1 --n 15");
    assert_eq!(code, 2);
    assert!(err.starts_with("error[RANGE]"));

    let (code, _, err) = sinesum("table --kind EVEN_SUMS --m 3 --n 5");
    assert_eq!(code, 2);
    assert!(err.contains("--k"));
}

#[test]
fn even_sums_at_level_1000() {
    let spec = TableSpec { kind: TableKind::EvenSums, index: 3, ns: 1000..=1000, precision: 256 };
    let t = emit_table(&spec).unwrap();
    let v = parse_rational(&t.rows[0][2]).unwrap();
    assert!(v.is_integer());
    // leading term 2^{6 * 999} / 15, next one 2^{4 * 999} / 6
    let lead = pow2(6 * 999) / Rational::from_integer(15.into());
    let rest = &v - &lead;
    assert_eq!(rest, pow2(4 * 999) / Rational::from_integer(6.into()) + pow2(2 * 999) * Rational::new(4.into(), 15.into()));
}

#[test]
fn usage_errors_and_help() {
    let (code, out, err) = sinesum("sum --s 3 --n 4 --bogus");
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("--bogus"));

    let (code, _, err) = sinesum("sum --s 3");
    assert_eq!(code, 2);
    assert!(err.contains("--n"));

    let (code, _, err) = sinesum("sum --s 3 --n 4 --format yaml");
    assert_eq!(code, 2);
    assert!(err.contains("yaml"));

    let (code, out, _) = sinesum("--help");
    assert_eq!(code, 0);
    for verb in ["sum", "row", "matrix", "verify", "zeta", "table"] {
        assert!(out.contains(verb));
    }
    let (code, out, _) = sinesum("--version");
    assert_eq!(code, 0);
    assert!(out.starts_with("sinesum "));
}

#[test]
fn deterministic_output() {
    for args in [
        "verify --suite trig --format json",
        "row --m 2 --n 6 --kind first --format csv",
        "table --kind EVEN_SUMS --k 4 --n-min 2 --n-max 40",
    ] {
        assert_eq!(sinesum(args), sinesum(args), "{args}");
    }
}

#[test]
fn envelope_metadata() {
    let (_, out, _) = sinesum("matrix --m 2 --n 3 --even --format json");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "matrix");
    assert_eq!(v["metadata"]["tool"], "sinesum");
    assert_eq!(v["metadata"]["precision"], 256);
    assert!(v["metadata"].get("elapsed_ms").is_none());

    let (_, out, _) = sinesum("matrix --m 2 --n 3 --format json --timing");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["metadata"]["elapsed_ms"].is_number());
}

#[test]
fn out_file() {
    let path = std::env::temp_dir().join(format!("sinesum-out-{}.csv", std::process::id()));
    let (code, out, _) = sinesum(&format!("row --m 1 --n 4 --kind even --format csv --out {}", path.display()));
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "j,coeff\n1,8\n2,15\n3,20\n4,11\n");
    std::fs::remove_file(path).unwrap();
}
