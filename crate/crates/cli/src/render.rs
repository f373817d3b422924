//! Output formatting for each subcommand. All renderers are pure and
//! deterministic.

use std::fmt::Write;

use bordism_core::bordism::monomial_name;
use bordism_core::charnum::CharMatrix;
use bordism_core::cohomology::{monomial_label, SphereProduct};
use bordism_core::grassmann::ThomFacts;
use bordism_core::partitions::Partition;
use bordism_core::serial::{char_matrix_json, format_rational, integer_value};
use bordism_core::verify::VerifyReport;
use bordism_core::{BordismElement, GrassmannPair, Rational, VirtualClass};
use serde_json::{json, Value};

use crate::Format;

fn json_out(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn csv_out(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

pub fn partitions(n: u32, parts: &[Partition], fmt: Format) -> String {
    match fmt {
        Format::Table => {
            let mut s = format!("partitions of {n} into parts >= 2\n");
            for p in parts {
                writeln!(s, "{p}").unwrap();
            }
            writeln!(s, "count = {}", parts.len()).unwrap();
            s
        }
        Format::Json => json_out(&json!({"n": n, "partitions": parts, "count": parts.len()})),
        Format::Csv => csv_out(
            &["index", "partition"],
            parts.iter().enumerate().map(|(i, p)| vec![i.to_string(), p.to_string()]),
        ),
    }
}

/// Column header for the sphere product indexed by `p`, e.g. `S^4xS^8`.
fn sphere_label(p: &Partition) -> String {
    SphereProduct::new(p.parts().to_vec()).map(|s| s.to_string()).unwrap_or_default()
}

pub fn matrix(mat: &CharMatrix, fmt: Format) -> String {
    match fmt {
        Format::Table => {
            let headers: Vec<String> = mat.order().iter().map(sphere_label).collect();
            let labels: Vec<String> = mat.order().iter().map(|p| p.to_string()).collect();
            let cells: Vec<Vec<String>> =
                mat.entries().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
            let label_w = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
            let widths: Vec<usize> = (0..mat.size())
                .map(|j| cells.iter().map(|r| r[j].len()).chain([headers[j].len()]).max().unwrap_or(0))
                .collect();
            let mut s = format!("{:label_w$}", "");
            for (h, w) in headers.iter().zip(&widths) {
                write!(s, "  {h:>w$}").unwrap();
            }
            s.push('\n');
            for (label, row) in labels.iter().zip(&cells) {
                write!(s, "{label:<label_w$}").unwrap();
                for (c, w) in row.iter().zip(&widths) {
                    write!(s, "  {c:>w$}").unwrap();
                }
                s.push('\n');
            }
            writeln!(s, "det = {}", mat.determinant()).unwrap();
            s
        }
        Format::Json => json_out(&char_matrix_json(mat)),
        Format::Csv => {
            let mut header = vec!["m".to_string()];
            header.extend(mat.order().iter().map(|p| p.to_string()));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            csv_out(
                &header,
                mat.order().iter().zip(mat.entries()).map(|(m, row)| {
                    std::iter::once(m.to_string()).chain(row.iter().map(|x| x.to_string())).collect()
                }),
            )
        }
    }
}

pub fn solution(n: u32, e: &BordismElement, residual_ok: bool, fmt: Format) -> String {
    match fmt {
        Format::Table => format!(
            "degree {}: {e}\nresidual check: {}\n",
            2 * n,
            if residual_ok { "ok" } else { "FAILED" }
        ),
        Format::Json => json_out(&json!({"n": n, "element": e, "residual_ok": residual_ok})),
        Format::Csv => csv_out(
            &["monomial", "partition", "coeff"],
            e.terms().map(|(p, c)| vec![monomial_name(p), p.to_string(), format_rational(c)]),
        ),
    }
}

pub fn report(r: &VerifyReport, fmt: Format) -> String {
    match fmt {
        Format::Table => {
            let mut s = String::new();
            for c in &r.checks {
                writeln!(s, "{}  {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail).unwrap();
            }
            writeln!(s, "{}", if r.passed() { "all checks passed" } else { "verification FAILED" }).unwrap();
            s
        }
        Format::Json => {
            let checks: Vec<Value> = r
                .checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect();
            json_out(&json!({"passed": r.passed(), "checks": checks}))
        }
        Format::Csv => csv_out(
            &["check", "passed", "detail"],
            r.checks.iter().map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone()]),
        ),
    }
}

pub fn ch(class: &VirtualClass, fmt: Format) -> String {
    let base = class.base();
    match fmt {
        Format::Table => {
            let mut s = format!("ch over {base}\n");
            let weights = std::iter::once(0).chain(2..=base.weight());
            for m in weights {
                let comp = class.ch_component(m);
                let terms: Vec<String> = comp
                    .terms()
                    .map(|(set, c)| {
                        let label = monomial_label(set);
                        match (label.is_empty(), *c == Rational::from_integer(1.into())) {
                            (true, _) => c.to_string(),
                            (false, true) => label,
                            (false, false) => format!("{c}*{label}"),
                        }
                    })
                    .collect();
                let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                writeln!(s, "ch_{m} = {rhs}").unwrap();
            }
            s
        }
        Format::Json => json_out(&serde_json::to_value(class).expect("class serializes")),
        Format::Csv => csv_out(
            &["subset", "degree", "coeff"],
            class.ch().terms().map(|(set, c)| {
                let members: Vec<String> =
                    bordism_core::cohomology::set_members(set).iter().map(|i| i.to_string()).collect();
                vec![members.join(" "), base.degree_of(set).to_string(), format_rational(c)]
            }),
        ),
    }
}

fn json_u128(v: u128) -> Value {
    integer_value(&v.into())
}

pub fn thom(pair: &GrassmannPair, d: u32, f: &ThomFacts, fmt: Format) -> String {
    let rank = f.rank.map(|r| r.to_string()).unwrap_or_else(|| "-".into());
    match fmt {
        Format::Table => format!(
            "Gr_{{{k},{l}}}, d = {d}\nsphere_dim: {}\nhurewicz_ok: {}\nin_stable_range: {}\nrank: {rank}\n",
            f.sphere_dim,
            f.hurewicz_ok,
            f.in_stable_range,
            k = pair.k(),
            l = pair.l(),
        ),
        Format::Json => json_out(&json!({
            "sphere_dim": json_u128(f.sphere_dim),
            "hurewicz_ok": f.hurewicz_ok,
            "in_stable_range": f.in_stable_range,
            "rank": f.rank,
        })),
        Format::Csv => csv_out(
            &["sphere_dim", "hurewicz_ok", "in_stable_range", "rank"],
            [vec![f.sphere_dim.to_string(), f.hurewicz_ok.to_string(), f.in_stable_range.to_string(), rank]],
        ),
    }
}
