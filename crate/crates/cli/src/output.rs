use std::fmt::Write;

/// One evaluated quantity with the parameters it was evaluated at.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub formula_tag: &'static str,
    pub params: Vec<(&'static str, f64)>,
    pub value: f64,
    pub abs_err: f64,
}

/// 17 significant digits, `.` as decimal point. Non-finite values print as
/// `NaN`, `inf`, `-inf`.
pub fn real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

/// Like [`real`], but `null` for non-finite values.
pub fn json_real(x: f64) -> String {
    if x.is_finite() {
        real(x)
    } else {
        "null".to_string()
    }
}

/// Parameters print as integers when they are integral (orbifold orders)
/// and as reals otherwise.
fn param(name: &str, x: f64) -> String {
    if name == "w" && x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        real(x)
    }
}

pub fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

pub fn record_json(rec: &OutputRecord) -> String {
    let params: Vec<String> = rec
        .params
        .iter()
        .map(|(name, x)| format!("{}:{}", json_string(name), param(name, *x)))
        .collect();
    format!(
        "{{\"formula_tag\":{},\"params\":{{{}}},\"value\":{},\"abs_err\":{}}}",
        json_string(rec.formula_tag),
        params.join(","),
        json_real(rec.value),
        json_real(rec.abs_err)
    )
}

pub fn records_json(recs: &[OutputRecord]) -> String {
    let items: Vec<String> = recs.iter().map(record_json).collect();
    format!("[{}]\n", items.join(","))
}

/// CSV with the given parameter columns followed by `value,abs_err`.
pub fn records_csv(columns: &[&str], recs: &[OutputRecord]) -> String {
    let mut out = String::new();
    for c in columns {
        out.push_str(c);
        out.push(',');
    }
    out.push_str("value,abs_err\n");
    for rec in recs {
        for c in columns {
            let x = rec
                .params
                .iter()
                .find(|(name, _)| name == c)
                .map(|p| p.1)
                .unwrap_or(f64::NAN);
            out.push_str(&param(c, x));
            out.push(',');
        }
        let _ = writeln!(out, "{},{}", real(rec.value), real(rec.abs_err));
    }
    out
}

pub fn record_plain(rec: &OutputRecord) -> String {
    let params: Vec<String> = rec
        .params
        .iter()
        .map(|(name, x)| format!("{name}={}", param(name, *x)))
        .collect();
    format!(
        "{} {}\nvalue   = {}\nabs_err = {}\n",
        rec.formula_tag,
        params.join(" "),
        real(rec.value),
        real(rec.abs_err)
    )
}

/// Generic numeric table: header row plus rows of reals.
pub fn table_csv(header: &[&str], rows: &[Vec<f64>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|&x| real(x)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn table_json(header: &[&str], rows: &[Vec<f64>]) -> String {
    let items: Vec<String> = rows
        .iter()
        .map(|row| {
            let fields: Vec<String> = header
                .iter()
                .zip(row)
                .map(|(h, &x)| format!("{}:{}", json_string(h), json_real(x)))
                .collect();
            format!("{{{}}}", fields.join(","))
        })
        .collect();
    format!("[{}]\n", items.join(","))
}
