//! Structured reports for `classify` and `congruence`, as JSON values with a
//! plain-text rendering.

use serde::Serialize;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::basic::{self, BasicAlgebra};
use crate::congruence::{self, Algebra, CongruenceLattice};
use crate::format::{FileKind, Structure};
use crate::identities::{self, ImplicationChecks};
use crate::lattice::{FiniteLattice, Involution};
use crate::logics;
use crate::residuation::RrlGroupoid;
use crate::sections;
use crate::verdict::{RenderedVerdict, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error("congruences are not computed for {0}")]
    UnsupportedKind(FileKind),
    #[error("the {report} report needs an rrl-groupoid")]
    NeedsGroupoid { report: &'static str },
}

fn v<T: Serialize>(x: T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn verdict(x: &Verdict, names: &[String]) -> Value {
    v(x.render(names))
}

fn groupoid_report(g: &RrlGroupoid) -> Value {
    let names = g.names();
    let props = g.classify().render(names);
    json!({
        "properties": props.flags,
        "basic_laws": props.basic_laws,
        "involutive_implication_laws": verdict(&g.involutive_implication_laws(), names),
        "residuated_lattice_sections": verdict(&g.residuated_lattice_sections(), names),
        "biconditionals": g.biconditionals().render(names),
    })
}

fn lattice_report(l: &FiniteLattice, tilde: Option<&Involution>) -> Value {
    let mut m = Map::new();
    m.insert("distributive".into(), v(l.is_distributive()));
    m.insert("boolean".into(), v(l.is_boolean()));
    m.insert(
        "sectionally_pseudocomplemented".into(),
        v(sections::sectional_pseudocomplement_family(l).is_ok()),
    );
    if let Some(t) = tilde {
        m.insert("orthocomplemented".into(), v(t.is_orthocomplement(l)));
        m.insert("kleene".into(), v(logics::check_kleene(l, t).is_ok()));
        let oml = logics::check_orthomodular(l, t.map());
        m.insert("orthomodular".into(), v(oml.is_ok()));
        if let Err(e) = oml {
            m.insert("orthomodular_failure".into(), v(e.to_string()));
        }
    }
    Value::Object(m)
}

fn basic_report(a: &BasicAlgebra) -> Value {
    let names = a.names();
    let r4 = basic::check_operation_correspondence(a).ok();
    json!({
        "mv": a.is_mv(),
        "associative": verdict(&a.associative(), names),
        "commutative": verdict(&a.commutative(), names),
        "idempotent": verdict(&a.idempotent(), names),
        "omi": verdict(&logics::check_omi(a), names),
        "associativity_agrees_with_odot": r4.as_ref().map(|r| r.agrees()),
        "reduct": basic::implication_reduct(a).report().render(names),
    })
}

/// Every property the workbench knows for this kind of structure.
pub fn classify(s: &Structure) -> Value {
    let names = s.names();
    let body = match s {
        Structure::Groupoid(g) => groupoid_report(g),
        Structure::Lattice(l, t) => lattice_report(l, t.as_ref()),
        Structure::Sectioned(sl) => {
            let imp = sl.implication();
            let checks = ImplicationChecks::new(&sl.lattice, &imp);
            json!({
                "mode": sl.family.mode(),
                "has_tilde": sl.tilde.is_some(),
                "i0": verdict(&checks.i0, names),
                "i1": verdict(&checks.i1, names),
                "i2": verdict(&checks.i2, names),
                "i3": verdict(&checks.i3, names),
                "i3_star": verdict(&identities::i3_star(&sl.lattice, &imp), names),
                "pseudocomplement_identities": sections::check_p1_p4(&sl.lattice, &imp).render(names),
                "lattice": lattice_report(&sl.lattice, sl.tilde.as_ref()),
            })
        }
        Structure::Basic(a) => basic_report(a),
        Structure::Reduct(r) => json!({ "identities": r.report().render(names) }),
        Structure::Kleene(k) => json!({
            "nelson": logics::build_nelson(k.clone()).is_ok(),
            "lattice": lattice_report(&k.lattice, Some(&k.tilde)),
        }),
        Structure::Nelson(n) => match logics::nelson_to_residuated(n) {
            Ok(g) => json!({
                "three_potency": verdict(&logics::three_potency(&g), names),
                "arrow_is_derived_implication": g.arrow_table() == g.derived_implication(),
                "groupoid": groupoid_report(&g),
            }),
            Err(e) => json!({ "groupoid_error": e.to_string() }),
        },
    };
    json!({
        "kind": s.kind().as_str(),
        "elements": names,
        "report": body,
    })
}

/// Which congruence facts to report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CongruenceReport {
    All,
    Regularity,
    Permutability,
    Distributivity,
    Terms,
}

impl std::str::FromStr for CongruenceReport {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "all" => Self::All,
            "regularity" => Self::Regularity,
            "permutability" => Self::Permutability,
            "distributivity" => Self::Distributivity,
            "terms" => Self::Terms,
            other => return Err(format!("unknown report `{other}`")),
        })
    }
}

/// Congruences with the labelled constants to test regularity at.
type WithConstants = (CongruenceLattice, Vec<(&'static str, usize)>);

fn con_lattice(s: &Structure) -> Result<WithConstants, ReportError> {
    fn with<A: Algebra + Sync>(a: &A, constants: Vec<(&'static str, usize)>) -> WithConstants {
        (congruence::all_congruences(a), constants)
    }
    Ok(match s {
        Structure::Lattice(l, _) => with(l, vec![("0", l.bottom()), ("1", l.top())]),
        Structure::Groupoid(g) => with(g, vec![("0", g.zero()), ("1", g.one())]),
        Structure::Basic(a) => with(a, vec![("0", a.zero()), ("1", a.one())]),
        Structure::Reduct(r) => with(r, vec![("0", r.zero()), ("1", r.one())]),
        other => return Err(ReportError::UnsupportedKind(other.kind())),
    })
}

pub fn congruence(s: &Structure, which: CongruenceReport) -> Result<Value, ReportError> {
    use CongruenceReport as R;
    let names = s.names();
    let (cl, constants) = con_lattice(s)?;
    let mut m = Map::new();
    m.insert("kind".into(), v(s.kind().as_str()));
    m.insert(
        "congruences".into(),
        v(cl.congruences
            .iter()
            .map(|c| c.render(names))
            .collect::<Vec<_>>()),
    );
    let want = |r: R| which == R::All || which == r;
    if want(R::Permutability) {
        m.insert("permutable".into(), v(congruence::check_permutable(&cl)));
    }
    if want(R::Distributivity) {
        m.insert(
            "distributive".into(),
            v(congruence::check_distributive_con(&cl)),
        );
    }
    if want(R::Regularity) {
        let reg: Map<String, Value> = constants
            .iter()
            .map(|&(label, c)| (label.to_string(), v(congruence::check_regularity(&cl, c))))
            .collect();
        m.insert("regularity".into(), Value::Object(reg));
    }
    if want(R::Terms) {
        match s {
            Structure::Groupoid(g) => {
                m.insert("terms".into(), v(congruence::check_terms(g).render(names)));
            }
            _ if which == R::Terms => return Err(ReportError::NeedsGroupoid { report: "terms" }),
            _ => {}
        }
    }
    Ok(Value::Object(m))
}

/// Indented plain text. Verdict objects print on one line.
pub fn render_text(value: &Value) -> String {
    let mut out = String::new();
    text(value, 0, &mut out);
    out
}

fn as_verdict(value: &Value) -> Option<RenderedVerdict> {
    let obj = value.as_object()?;
    let status = match obj.get("status")?.as_str()? {
        "holds" => "holds",
        "fails" => "fails",
        "n/a" => "n/a",
        _ => return None,
    };
    if obj.len() > 2 {
        return None;
    }
    let witness = obj.get("witness").map(|w| {
        w.as_array()
            .into_iter()
            .flatten()
            .map(|x| x.as_str().unwrap_or_default().to_string())
            .collect()
    });
    Some(RenderedVerdict { status, witness })
}

fn inline(value: &Value) -> Option<String> {
    if let Some(vd) = as_verdict(value) {
        return Some(vd.to_string());
    }
    match value {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("-".into()),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => Some(
            items
                .iter()
                .map(|i| inline(i).unwrap_or_default())
                .collect::<Vec<_>>()
                .join(", "),
        ),
        Value::Array(items)
            if items
                .iter()
                .all(|i| i.as_array().is_some_and(|a| a.iter().all(Value::is_string))) =>
        {
            Some(
                items
                    .iter()
                    .map(|i| format!("{{{}}}", inline(i).unwrap_or_default()))
                    .collect::<Vec<_>>()
                    .join(" "),
            )
        }
        Value::Array(_) | Value::Object(_) => None,
        other => Some(other.to_string()),
    }
}

fn text(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, item) in map {
                match inline(item) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text(item, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                match inline(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}- [{i}]\n"));
                        text(item, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn mo2_classification_text() {
        let s =
            crate::transform::step(&corpus::get("mo2").unwrap(), FileKind::RrlGroupoid).unwrap();
        let text = render_text(&classify(&s));
        assert!(text.contains("lukasiewicz_type: holds\n"));
        assert!(text.contains("commutative: fails (a, b)\n"));
    }

    #[test]
    fn congruences_of_boolean_square() {
        let r = congruence(&corpus::get("boolean-4").unwrap(), CongruenceReport::All).unwrap();
        assert_eq!(r["congruences"].as_array().unwrap().len(), 4);
        assert_eq!(r["permutable"], Value::Bool(true));
        assert_eq!(r["regularity"]["0"]["regular"], Value::Bool(true));
    }
}
