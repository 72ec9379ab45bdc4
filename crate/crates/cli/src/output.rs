//! Deterministic rendering. Every floating value is rounded to 12
//! significant digits before formatting, and JSON maps serialize with sorted
//! keys, so identical inputs produce byte-identical output across runs and
//! platforms. Arbitrary-precision integers are rendered as decimal strings
//! in JSON.

use hyperbounds::bounds::BoundReport;
use hyperbounds::spectral::{Operator, SpectralEstimate};
use hyperbounds::Hypergraph;
use serde_json::{json, Value};

use crate::campaign::CampaignResult;
use crate::identities::IdentityRow;

/// Round to 12 significant digits; the shortest decimal representation of
/// the rounded value is then stable everywhere.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(11 - magnitude);
    (x * factor).round() / factor
}

pub fn fmt_float(x: f64) -> String {
    format!("{}", round_sig12(x))
}

fn num(x: f64) -> Value {
    json!(round_sig12(x))
}

pub fn bound_report_json(h: &Hypergraph, report: &BoundReport) -> String {
    let per_s: Vec<Value> = report
        .per_s
        .iter()
        .map(|b| json!({ "s": b.s, "value": num(b.value) }))
        .collect();
    let value = json!({
        "kind": report.kind.as_str(),
        "n": h.vertex_count(),
        "k": h.uniformity(),
        "per_s": per_s,
        "argmin_s": report.argmin_s,
        "min_value": num(report.min_value),
        "exact_quadratic_residual": num(report.exact_quadratic_residual),
    });
    format!("{value}")
}

/// Per-s rows under an `s,value` header, then one summary row
/// `min,<argmin_s>,<min_value>`.
pub fn bound_report_csv(report: &BoundReport) -> String {
    let mut out = String::from("s,value\n");
    for b in &report.per_s {
        out.push_str(&format!("{},{}\n", b.s, fmt_float(b.value)));
    }
    out.push_str(&format!(
        "min,{},{}\n",
        report.argmin_s,
        fmt_float(report.min_value)
    ));
    out
}

pub fn estimate_json(h: &Hypergraph, operator: Operator, estimate: &SpectralEstimate) -> String {
    let value = json!({
        "operator": operator.as_str(),
        "n": h.vertex_count(),
        "k": h.uniformity(),
        "m": h.edge_count(),
        "value": num(estimate.value),
        "lower": num(estimate.lower),
        "upper": num(estimate.upper),
        "iterations": estimate.iterations,
        "converged": estimate.converged,
        "component_count": h.components().count(),
    });
    format!("{value}")
}

pub fn campaign_json(result: &CampaignResult) -> String {
    let violations: Vec<Value> = result
        .violations
        .iter()
        .map(|v| {
            json!({
                "seed": v.seed,
                "n": v.n,
                "k": v.k,
                "m": v.m,
                "bound": num(v.bound),
                "computed": num(v.computed),
                "margin": num(v.margin),
            })
        })
        .collect();
    let stats = match &result.margin_stats {
        Some(s) => json!({
            "min": num(s.min),
            "median": num(s.median),
            "max": num(s.max),
        }),
        None => Value::Null,
    };
    let value = json!({
        "kind": result.kind.as_str(),
        "trials": result.trials,
        "violations": violations,
        "margin_stats": stats,
        "non_converged": result.non_converged,
        "generation_failures": result.generation_failures,
        "degree_bracket_failures": result.degree_bracket_failures,
    });
    format!("{value}")
}

pub fn identities_csv(rows: &[IdentityRow]) -> String {
    let mut out = String::from(
        "n,s,k,first,middle,third,first_eq_third,middle_eq_third,eq3_lhs,eq3_rhs,eq3_holds\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            r.n,
            r.s,
            r.k,
            r.first,
            r.middle,
            r.third,
            r.first_eq_third,
            r.middle_eq_third,
            r.eq3_lhs,
            r.eq3_rhs,
            r.eq3_holds
        ));
    }
    out
}

pub fn identities_json(n_max: i64, k_max: i64, rows: &[IdentityRow]) -> String {
    let row_values: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "s": r.s,
                "k": r.k,
                "first": r.first.to_string(),
                "middle": r.middle.to_string(),
                "third": r.third.to_string(),
                "first_eq_third": r.first_eq_third,
                "middle_eq_third": r.middle_eq_third,
                "eq3_lhs": r.eq3_lhs.to_string(),
                "eq3_rhs": r.eq3_rhs.to_string(),
                "eq3_holds": r.eq3_holds,
            })
        })
        .collect();
    let value = json!({
        "n_max": n_max,
        "k_max": k_max,
        "rows": row_values,
        "all_eq2_outer": rows.iter().all(|r| r.first_eq_third),
        "all_eq3": rows.iter().all(|r| r.eq3_holds),
    });
    format!("{value}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_to_12_significant_digits() {
        assert_eq!(fmt_float(2.0f64.sqrt()), "1.41421356237");
        assert_eq!(fmt_float(3.0), "3");
        assert_eq!(fmt_float(0.0), "0");
        assert_eq!(fmt_float((1.0 + 17.0f64.sqrt()) / 2.0), "2.56155281281");
        assert_eq!(fmt_float(-2.0f64.sqrt()), "-1.41421356237");
        assert_eq!(fmt_float(123456789012345.0), "123456789012000");
    }

    #[test]
    fn bound_csv_shape() {
        let p3 = Hypergraph::parse("3 2 2\n1 2\n2 3").unwrap();
        let report =
            hyperbounds::bounds::adjacency_bound(p3.degree_sequence().degrees(), 2).unwrap();
        let csv = bound_report_csv(&report);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "s,value");
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[4], "min,2,1.41421356237");
    }
}
