//! Canonical, byte-stable polynomial tables.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::OutputFormat;
use crate::error::{Error, Result};
use crate::exact::{critical_line_restriction, isolate_real_roots, rat, BigRational};
use crate::zeta_poly::ZetaPolyRecord;

/// Digits after the decimal point for root imaginary parts.
pub const ROOT_DIGITS: usize = 30;

/// Fixed-point decimal of `q` rounded half away from zero, `−0` printed as `0`.
pub fn rational_to_decimal(q: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u8).pow(digits as u32);
    let num = q.numer().abs() * &scale;
    let den = q.denom().abs();
    let (mut int, rem) = num.div_rem(&den);
    if rem * 2u8 >= den {
        int += 1u8;
    }
    let neg = q.is_negative() && !int.is_zero();
    let s = format!("{:0>width$}", int.to_string(), width = digits + 1);
    let (head, tail) = s.split_at(s.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{head}")
    } else {
        format!("{sign}{head}.{tail}")
    }
}

/// Imaginary parts of the zeros `1/2 + it` of `p`, ascending, from exact
/// isolating intervals of width below `10^{−32}`.
pub fn critical_zeros(rec: &ZetaPolyRecord) -> Result<Vec<BigRational>> {
    if rec.is_zero || rec.coeffs.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let rho = critical_line_restriction(&rec.coeffs)?;
    let width = rat(1, 1) / BigRational::from_integer(BigInt::from(10u8).pow(32));
    Ok(isolate_real_roots(&rho, &width)?
        .into_iter()
        .map(|(lo, hi)| (lo + hi) / rat(2, 1))
        .collect())
}

fn degree(rec: &ZetaPolyRecord) -> i64 {
    if rec.is_zero {
        -1
    } else {
        rec.coeffs.degree().map_or(-1, |d| d as i64)
    }
}

fn coeff_strings(rec: &ZetaPolyRecord) -> Vec<String> {
    if rec.is_zero {
        Vec::new()
    } else {
        rec.coeffs.coeffs().iter().map(|c| c.to_string()).collect()
    }
}

/// JSON object for one record; keys serialize in sorted order.
pub fn record_json(rec: &ZetaPolyRecord) -> Result<Value> {
    let roots: Vec<Value> = critical_zeros(rec)?
        .iter()
        .map(|t| json!({"re": "0.5", "im": rational_to_decimal(t, ROOT_DIGITS)}))
        .collect();
    Ok(json!({
        "m": rec.m,
        "k": rec.k,
        "degree": degree(rec),
        "coeffs": coeff_strings(rec),
        "roots": roots,
        "normalization": "primitive-positive-leading",
    }))
}

/// Renders the table in `format`.
pub fn render_table(records: &[ZetaPolyRecord], format: OutputFormat) -> Result<String> {
    if records.is_empty() {
        return Err(Error::Domain("export_table needs at least one record".into()));
    }
    match format {
        OutputFormat::Json => {
            let rows = records.iter().map(record_json).collect::<Result<Vec<_>>>()?;
            let mut s = serde_json::to_string_pretty(&Value::Array(rows))?;
            s.push('\n');
            Ok(s)
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["m", "k", "degree", "coeffs", "roots_im", "normalization"])?;
            for rec in records {
                let roots: Vec<String> = critical_zeros(rec)?.iter().map(|t| rational_to_decimal(t, ROOT_DIGITS)).collect();
                w.write_record([
                    rec.m.to_string(),
                    rec.k.to_string(),
                    degree(rec).to_string(),
                    coeff_strings(rec).join(" "),
                    roots.join(" "),
                    "primitive-positive-leading".to_string(),
                ])?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for rec in records {
                if rec.is_zero {
                    s.push_str(&format!("p_{}^({}) = 0 (vanishes identically)\n", rec.m, rec.k));
                    continue;
                }
                s.push_str(&format!("p_{}^({}) = {}\n", rec.m, rec.k, rec.coeffs.display("s")));
                for t in critical_zeros(rec)? {
                    s.push_str(&format!("  zero 1/2 + i*{}\n", rational_to_decimal(&t, ROOT_DIGITS)));
                }
            }
            Ok(s)
        }
    }
}

/// Writes the table for `records` to `path`.
pub fn export_table(records: &[ZetaPolyRecord], path: &Path, format: OutputFormat) -> Result<()> {
    let body = render_table(records, format)?;
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(body.as_bytes())?;
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta_poly::zeta_poly_expansion;

    #[test]
    fn decimals() {
        assert_eq!(rational_to_decimal(&rat(1, 2), 3), "0.500");
        assert_eq!(rational_to_decimal(&rat(-1, 2), 3), "-0.500");
        assert_eq!(rational_to_decimal(&rat(2, 3), 4), "0.6667");
        assert_eq!(rational_to_decimal(&rat(-1, 3000), 3), "0.000");
        assert_eq!(rational_to_decimal(&rat(-1999, 1000), 2), "-2.00");
        assert_eq!(rational_to_decimal(&rat(7, 1), 0), "7");
    }

    #[test]
    fn json_examples() {
        let v = record_json(&zeta_poly_expansion(0, 0)).unwrap();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"coeffs":["1"],"degree":0,"k":0,"m":0,"normalization":"primitive-positive-leading","roots":[]}"#
        );
        let v = record_json(&zeta_poly_expansion(2, 0)).unwrap();
        assert_eq!(v["coeffs"], json!(["-1", "2"]));
        assert_eq!(v["roots"], json!([{"re": "0.5", "im": "0.000000000000000000000000000000"}]));
        let v = record_json(&zeta_poly_expansion(4, 0)).unwrap();
        assert_eq!(v["coeffs"], json!(["1", "-2", "2"]));
        assert_eq!(v["roots"][0]["im"], "-0.500000000000000000000000000000");
        assert_eq!(v["roots"][1]["im"], "0.500000000000000000000000000000");
        let v = record_json(&zeta_poly_expansion(3, 0)).unwrap();
        assert_eq!(v["degree"], -1);
        assert_eq!(v["coeffs"], json!([]));
    }

    #[test]
    fn formats_are_stable() {
        let recs: Vec<_> = [(0, 0), (3, 0), (4, 0), (6, 2)].iter().map(|&(m, k)| zeta_poly_expansion(m, k)).collect();
        for f in [OutputFormat::Json, OutputFormat::Csv, OutputFormat::Text] {
            assert_eq!(render_table(&recs, f).unwrap(), render_table(&recs, f).unwrap());
        }
        let csv = render_table(&recs, OutputFormat::Csv).unwrap();
        assert_eq!(csv.lines().count(), 5);
        assert!(csv.contains("4,0,2,1 -2 2,-0.500000000000000000000000000000 0.500000000000000000000000000000,"));
        assert!(render_table(&[], OutputFormat::Json).is_err());
    }

    #[test]
    fn writes_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.json");
        export_table(&[zeta_poly_expansion(2, 0)], &path, OutputFormat::Json).unwrap();
        let s = std::fs::read_to_string(path).unwrap();
        assert!(s.contains("\"-1\""));
    }
}
