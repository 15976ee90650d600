//! The chain of lower bounds on `χ(KG(H))`.

use serde::Serialize;

use crate::alternation::{alt_min, AltMin, AltMode, SearchBudget};
use crate::coloring::{chromatic_number, SolverCaps};
use crate::error::Error;
use crate::graph::kneser_graph;
use crate::hypergraph::{colorability_defect, Hypergraph};

/// One report entry. `value` is absent when the computation was refused or
/// failed, in which case `error` says why.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundField {
    pub value: Option<i64>,
    pub exact: bool,
    pub error: Option<String>,
}

impl BoundField {
    fn exact(value: i64) -> Self {
        BoundField { value: Some(value), exact: true, error: None }
    }

    fn approx(value: i64, exact: bool) -> Self {
        BoundField { value: Some(value), exact, error: None }
    }

    fn failed(err: &Error) -> Self {
        BoundField { value: None, exact: false, error: Some(err.to_string()) }
    }

    fn skipped(reason: String) -> Self {
        BoundField { value: None, exact: false, error: Some(reason) }
    }

    fn exact_value(&self) -> Option<i64> {
        self.value.filter(|_| self.exact)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub schema: u32,
    pub vertices: usize,
    pub edges: usize,
    pub chi: BoundField,
    pub cd: BoundField,
    pub alt: BoundField,
    pub salt: BoundField,
    /// `|V| − alt`
    pub alt_bound: BoundField,
    /// `|V| − salt + 1`
    pub salt_bound: BoundField,
    /// `|V| − alt − 1`
    pub dim_lb: BoundField,
    /// `|V| − salt − 1`
    pub sdim_lb: BoundField,
    /// Vertex names in the order realizing `alt` / `salt`.
    pub alt_sigma: Vec<String>,
    pub salt_sigma: Vec<String>,
    /// `H` has no edges, so `KG(H)` is empty and the chain does not apply.
    pub degenerate: bool,
}

/// Limits for [`bound_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundBudget {
    pub search: SearchBudget,
    pub caps: SolverCaps,
    /// `cd(H)` is skipped above this many vertices.
    pub cd_max_vertices: usize,
}

impl Default for BoundBudget {
    fn default() -> Self {
        BoundBudget {
            search: SearchBudget::default(),
            caps: SolverCaps::default(),
            cd_max_vertices: 20,
        }
    }
}

/// Compute every field that fits the budget. Fields that do not fit carry an
/// error and the rest of the report is still filled in.
///
/// Alternation values from the heuristic search are upper bounds on the true
/// minimum, so the derived lower bounds stay valid; only `exact` drops.
pub fn bound_report(h: &Hypergraph, budget: &BoundBudget) -> BoundReport {
    let n = h.vertex_count() as i64;
    let chi = match kneser_graph(h).and_then(|g| chromatic_number(&g, &budget.caps)) {
        Ok(c) => BoundField::exact(c.count as i64),
        Err(e) => BoundField::failed(&e),
    };
    let cd = if h.vertex_count() <= budget.cd_max_vertices {
        BoundField::exact(colorability_defect(h).value as i64)
    } else {
        BoundField::skipped(format!(
            "colorability defect skipped: {} vertices exceeds {}",
            h.vertex_count(),
            budget.cd_max_vertices
        ))
    };
    let alt = alt_min(h, AltMode::Alt, &budget.search);
    let salt = alt_min(h, AltMode::Salt, &budget.search);
    let derived = |m: &AltMin, offset: i64| BoundField::approx(n - m.value as i64 + offset, m.exact);
    let order = |m: &AltMin| m.sigma.images().iter().map(|&v| h.names()[v].clone()).collect();
    BoundReport {
        schema: 1,
        vertices: h.vertex_count(),
        edges: h.edge_count(),
        chi,
        cd,
        alt: BoundField::approx(alt.value as i64, alt.exact),
        salt: BoundField::approx(salt.value as i64, salt.exact),
        alt_bound: derived(&alt, 0),
        salt_bound: derived(&salt, 1),
        dim_lb: derived(&alt, -1),
        sdim_lb: derived(&salt, -1),
        alt_sigma: order(&alt),
        salt_sigma: order(&salt),
        degenerate: h.edge_count() == 0,
    }
}

impl BoundReport {
    /// Broken links of `χ ≥ max(alt_bound, salt_bound)` and `χ ≥ cd`.
    ///
    /// The alternation bounds hold for any ordering, so they are checked
    /// whenever `χ` is exact. Degenerate reports are exempt.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.degenerate {
            return out;
        }
        let Some(chi) = self.chi.exact_value() else {
            return out;
        };
        let checks = [
            ("alt_bound", self.alt_bound.value),
            ("salt_bound", self.salt_bound.value),
            ("cd", self.cd.exact_value()),
        ];
        for (name, bound) in checks {
            if let Some(b) = bound {
                if chi < b {
                    out.push(format!("chi = {chi} is below {name} = {b}"));
                }
            }
        }
        out
    }

    pub fn csv_header() -> &'static str {
        "label,vertices,edges,chi,cd,alt,salt,alt_bound,salt_bound,dim_lb,sdim_lb,exact,degenerate"
    }

    /// One CSV row; empty cells for missing values. `exact` is true when
    /// every present field is exact.
    pub fn csv_row(&self, label: &str) -> String {
        let fields = self.fields();
        let cell = |f: &BoundField| f.value.map(|v| v.to_string()).unwrap_or_default();
        let exact = fields.iter().all(|(_, f)| f.value.is_none() || f.exact);
        let mut cells = vec![csv_escape(label), self.vertices.to_string(), self.edges.to_string()];
        cells.extend(fields.iter().map(|(_, f)| cell(f)));
        cells.push(exact.to_string());
        cells.push(self.degenerate.to_string());
        cells.join(",")
    }

    pub fn text(&self, label: &str) -> String {
        let mut out = format!("{label}: |V| = {}, |E| = {}\n", self.vertices, self.edges);
        for (name, f) in self.fields() {
            let shown = match (&f.value, &f.error) {
                (Some(v), _) if f.exact => v.to_string(),
                (Some(v), _) => format!("{v} (heuristic)"),
                (None, Some(e)) => format!("unavailable: {e}"),
                (None, None) => "unavailable".to_string(),
            };
            out.push_str(&format!("  {name:<10} {shown}\n"));
        }
        if self.degenerate {
            out.push_str("  degenerate: no edges, KG(H) is empty\n");
        }
        out
    }

    fn fields(&self) -> [(&'static str, &BoundField); 8] {
        [
            ("chi", &self.chi),
            ("cd", &self.cd),
            ("alt", &self.alt),
            ("salt", &self.salt),
            ("alt_bound", &self.alt_bound),
            ("salt_bound", &self.salt_bound),
            ("dim_lb", &self.dim_lb),
            ("sdim_lb", &self.sdim_lb),
        ]
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{complete_k_uniform, s_stable_k_uniform, schrijver_k_uniform, VertexSet};

    fn value(f: &BoundField) -> i64 {
        assert!(f.exact, "{f:?}");
        f.value.unwrap()
    }

    #[test]
    fn kneser_five_two() {
        let r = bound_report(&complete_k_uniform(5, 2).unwrap(), &BoundBudget::default());
        assert_eq!(
            [&r.chi, &r.cd, &r.alt_bound, &r.salt_bound].map(value),
            [3, 3, 3, 3]
        );
        assert_eq!(value(&r.dim_lb), 2);
        assert!(r.violations().is_empty());
        assert!(!r.degenerate);
    }

    #[test]
    fn schrijver_six_two() {
        let r = bound_report(&schrijver_k_uniform(6, 2).unwrap(), &BoundBudget::default());
        assert_eq!(value(&r.chi), 4);
        assert_eq!(value(&r.salt_bound), 4);
        assert!(r.violations().is_empty());
    }

    #[test]
    fn stable_and_matching() {
        let r = bound_report(&s_stable_k_uniform(8, 2, 2).unwrap(), &BoundBudget::default());
        assert_eq!(value(&r.chi), 6);
        let r = bound_report(&complete_k_uniform(4, 2).unwrap(), &BoundBudget::default());
        assert_eq!(value(&r.chi), 2);
    }

    #[test]
    fn edgeless_is_degenerate() {
        let r = bound_report(&Hypergraph::on_range(4, vec![]).unwrap(), &BoundBudget::default());
        assert!(r.degenerate);
        assert_eq!(value(&r.chi), 0);
        assert_eq!(value(&r.alt), 4);
        assert_eq!(value(&r.alt_bound), 0);
        assert!(r.violations().is_empty());
    }

    #[test]
    fn partial_report_on_capacity() {
        let budget = BoundBudget {
            caps: SolverCaps { max_vertices: 5 },
            cd_max_vertices: 3,
            ..BoundBudget::default()
        };
        let r = bound_report(&complete_k_uniform(5, 2).unwrap(), &budget);
        assert!(r.chi.value.is_none() && r.chi.error.as_deref().unwrap().contains("refused"));
        assert!(r.cd.value.is_none());
        assert_eq!(value(&r.salt_bound), 3);
        assert!(r.violations().is_empty());
    }

    #[test]
    fn injected_violation_is_reported() {
        let mut r = bound_report(&complete_k_uniform(5, 2).unwrap(), &BoundBudget::default());
        r.chi = BoundField::exact(2);
        assert_eq!(r.violations().len(), 3);
    }

    #[test]
    fn csv_and_text() {
        let h = Hypergraph::on_range(3, vec![VertexSet::from_indices([0, 1])]).unwrap();
        let r = bound_report(&h, &BoundBudget::default());
        let row = r.csv_row("one,edge");
        assert!(row.starts_with("\"one,edge\",3,1,1,"));
        assert_eq!(row.split(',').count(), BoundReport::csv_header().split(',').count() + 1);
        assert!(r.text("h").contains("chi"));
    }
}
