//! The `verify all` report: parameters of G and of the underlying graph H
//! of its line digraph, and the inequalities tying them together, each
//! backed by certificates.

use serde::{Deserialize, Serialize};

use odlab_core::chromatic::{
    chromatic_number, lift_coloring_to_line, line_chromatic_target, ChromaticOptions, ChromaticResult,
};
use odlab_core::error::Result as CoreResult;
use odlab_core::gf::{Field, SubspaceGuard};
use odlab_core::graph::{line_digraph, Graph};
use odlab_core::index_code::{coloring_from_index_code, line_coloring_from_index_code, linear_code_from_matrix};
use odlab_core::params::{minrank, orthogonality_dimension, MinrankWitness, OrthRep, ParamOptions, ParamValue};
use odlab_core::subspace_graphs::representation_via_clique;
use odlab_core::{Error, SearchLimits};

use crate::certificate::{Certificate, Verdict};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub fields: Vec<u32>,
    pub max_k: usize,
    pub limits: SearchLimits,
    /// Largest ambient dimension tried for the subspace-clique route.
    pub max_subspace_dim: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            fields: vec![2],
            max_k: 8,
            limits: SearchLimits::unlimited(),
            max_subspace_dim: 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
    /// Reported numbers without a verdict.
    Info,
}

/// How the integer terms of a check are compared.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Relation {
    /// `t0 <= t1 <= ...`
    ChainLe,
    /// `t0 = t1`
    Equal,
    /// `t1 = min { n : t0 <= b(n) }`
    LineTarget,
    /// `t0 <= base^(t1)`, i.e. `t1 >= log_base t0`.
    LogLe { base: u64 },
    /// `t0 <= base^(factor * t1^2)`, i.e. `t1 >= sqrt(log_base(t0) / factor)`.
    SqrtLogLe { base: u64, factor: u64 },
    None,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub name: String,
    pub value: Option<u64>,
    pub certificate: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub statement: String,
    pub relation: Relation,
    pub terms: Vec<Term>,
    /// Real-valued bound for display, where the relation has one.
    pub bound: Option<f64>,
    pub status: Status,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub unknown: usize,
    pub info: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub graph: GraphStats,
    pub line_graph: GraphStats,
    pub fields: Vec<u32>,
    pub checks: Vec<Check>,
    pub certificates: Vec<Certificate>,
    pub summary: Summary,
}

fn saturating_pow(base: u64, exp: u64) -> u64 {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
        if acc == u64::MAX {
            break;
        }
    }
    acc
}

/// Evaluates a relation on fully known terms.
pub fn holds(rel: &Relation, t: &[u64]) -> Option<bool> {
    Some(match rel {
        Relation::ChainLe => t.windows(2).all(|w| w[0] <= w[1]),
        Relation::Equal => t.len() == 2 && t[0] == t[1],
        Relation::LineTarget => t.len() == 2 && line_chromatic_target(t[0] as usize) as u64 == t[1],
        Relation::LogLe { base } => t.len() == 2 && t[0] <= saturating_pow(*base, t[1]),
        Relation::SqrtLogLe { base, factor } => {
            t.len() == 2 && t[0] <= saturating_pow(*base, factor.saturating_mul(t[1].saturating_mul(t[1])))
        }
        Relation::None => return None,
    })
}

/// A computed quantity: its value and certificate, or why it is unknown.
#[derive(Clone, Debug)]
struct Known {
    value: Option<u64>,
    certificate: Option<usize>,
    note: Option<String>,
}

impl Known {
    fn term(&self, name: &str) -> Term {
        Term { name: name.into(), value: self.value, certificate: self.certificate }
    }
}

struct Builder {
    certificates: Vec<Certificate>,
    checks: Vec<Check>,
}

impl Builder {
    fn certify(&mut self, c: Certificate) -> usize {
        self.certificates.push(c);
        self.certificates.len() - 1
    }

    fn record<T>(&mut self, r: CoreResult<Option<T>>, what: &str, cert: impl FnOnce(&T) -> (u64, Certificate)) -> Result<(Known, Option<T>), Error> {
        match r {
            Ok(Some(x)) => {
                let (value, c) = cert(&x);
                let i = self.certify(c);
                Ok((Known { value: Some(value), certificate: Some(i), note: None }, Some(x)))
            }
            Ok(None) => Ok((
                Known { value: None, certificate: None, note: Some(format!("{what}: exceeds the search bound")) },
                None,
            )),
            Err(e) if e.is_unknown() => Ok((Known { value: None, certificate: None, note: Some(format!("{what}: {e}")) }, None)),
            Err(e) => Err(e),
        }
    }

    fn check(&mut self, id: String, statement: String, relation: Relation, terms: Vec<(&str, &Known)>, bound: Option<f64>) {
        let note = terms.iter().filter_map(|(_, k)| k.note.clone()).next();
        let terms: Vec<Term> = terms.iter().map(|(n, k)| k.term(n)).collect();
        let values: Option<Vec<u64>> = terms.iter().map(|t| t.value).collect();
        let status = match (&relation, values) {
            (Relation::None, _) => Status::Info,
            (_, None) => Status::Unknown,
            (rel, Some(v)) => match holds(rel, &v) {
                Some(true) => Status::Pass,
                _ => Status::Fail,
            },
        };
        self.checks.push(Check { id, statement, relation, terms, bound, status, note });
    }
}

fn chromatic(b: &mut Builder, g: &Graph, opts: &ReportOptions, what: &str) -> Result<(Known, Option<ChromaticResult>), Error> {
    let r = chromatic_number(g, &ChromaticOptions { limits: opts.limits, max_vertices: 200 });
    b.record(r.map(Some), what, |c| {
        let clique = odlab_core::clique::clique_number(g, &SearchLimits::nodes(100_000))
            .map(|x| x.1)
            .unwrap_or_default();
        let clique = if clique.len() <= c.chi { clique } else { Vec::new() };
        (c.chi as u64, Certificate::chromatic(g, c.chi, &c.coloring, &clique))
    })
}

fn od(b: &mut Builder, g: &Graph, f: Field, opts: &ReportOptions, what: &str) -> Result<(Known, Option<ParamValue<OrthRep>>), Error> {
    let po = ParamOptions { limits: opts.limits, ..Default::default() };
    let r = orthogonality_dimension(g, f, opts.max_k, &po);
    b.record(r, what, |v| (v.value as u64, Certificate::orthogonality_dimension(g, v)))
}

fn mr(b: &mut Builder, g: &Graph, f: Field, opts: &ReportOptions, what: &str) -> Result<(Known, Option<ParamValue<MinrankWitness>>), Error> {
    let po = ParamOptions { limits: opts.limits, ..Default::default() };
    let r = minrank(g, f, opts.max_k, &po);
    b.record(r, what, |v| (v.value as u64, Certificate::minrank(g, v)))
}

fn unknown(note: String) -> Known {
    Known { value: None, certificate: None, note: Some(note) }
}

/// Builds the report. Guard and limit failures turn individual checks into
/// `unknown`; other errors abort.
pub fn build_report(g: &Graph, opts: &ReportOptions) -> Result<Report, Error> {
    let fields = opts.fields.iter().map(|&q| Field::new(q)).collect::<Result<Vec<Field>, Error>>()?;
    let h = line_digraph(g).underlying();
    let gc = g.complement();
    let hc = h.complement();
    let mut b = Builder { certificates: Vec::new(), checks: Vec::new() };

    let (chi_g, chi_g_res) = chromatic(&mut b, g, opts, "chi(G)")?;
    let (chi_h, _) = chromatic(&mut b, &h, opts, "chi(H)")?;
    b.check(
        "line_chromatic".into(),
        "chi(H) equals the least n with chi(G) <= binom(n, floor(n/2))".into(),
        Relation::LineTarget,
        vec![("chi(G)", &chi_g), ("chi(H)", &chi_h)],
        None,
    );

    let lifted = match &chi_g_res {
        Some(c) => {
            let n = line_chromatic_target(c.chi);
            let lc = lift_coloring_to_line(g, &c.coloring, n)?;
            let i = b.certify(Certificate::coloring(&h, &lc));
            Known { value: Some(n as u64), certificate: Some(i), note: None }
        }
        None => unknown("no optimal colouring of G to lift".into()),
    };
    b.check(
        "line_coloring_lift".into(),
        "an optimal colouring of G lifts to a proper colouring of H with that many colours".into(),
        Relation::LineTarget,
        vec![("chi(G)", &chi_g), ("palette", &lifted)],
        None,
    );

    let chi_val = chi_g.value;
    for f in fields {
        let q = f.q();
        let (od_g, _) = od(&mut b, g, f, opts, &format!("od_{q}(G)"))?;
        let (mr_gc, mr_gc_res) = mr(&mut b, &gc, f, opts, &format!("minrank_{q}(complement G)"))?;
        let (od_h, _) = od(&mut b, &h, f, opts, &format!("od_{q}(H)"))?;
        let (mr_hc, mr_hc_res) = mr(&mut b, &hc, f, opts, &format!("minrank_{q}(complement H)"))?;
        let (chi_h_known, chi_g_known) = (chi_h.clone(), chi_g.clone());

        for (tag, odk, mrk, chik) in [("G", &od_g, &mr_gc, &chi_g_known), ("H", &od_h, &mr_hc, &chi_h_known)] {
            b.check(
                format!("chain_{tag}_q{q}"),
                format!("minrank_{q}(complement {tag}) <= od_{q}({tag}) <= chi({tag})"),
                Relation::ChainLe,
                vec![("minrank", mrk), ("od", odk), ("chi", chik)],
                None,
            );
            b.check(
                format!("log_{tag}_q{q}"),
                format!("minrank_{q}(complement {tag}) >= log_{q} chi({tag})"),
                Relation::LogLe { base: q as u64 },
                vec![("chi", chik), ("minrank", mrk)],
                chik.value.map(|c| (c as f64).ln() / (q as f64).ln()),
            );
        }

        let log_chi = chi_val.map(|c| (c as f64).ln() / (q as f64).ln());
        b.check(
            format!("od_line_q{q}"),
            format!("od_{q}(H) >= sqrt(log_{q} chi(G))"),
            Relation::SqrtLogLe { base: q as u64, factor: 1 },
            vec![("chi(G)", &chi_g), ("od(H)", &od_h)],
            log_chi.map(f64::sqrt),
        );
        b.check(
            format!("minrank_line_q{q}"),
            format!("minrank_{q}(complement H) >= sqrt(log_{q}(chi(G)) / 2)"),
            Relation::SqrtLogLe { base: q as u64, factor: 2 },
            vec![("chi(G)", &chi_g), ("minrank(complement H)", &mr_hc)],
            log_chi.map(|x| (x / 2.0).sqrt()),
        );

        // smallest n whose subspace graph has a clique as large as chi(G)
        let mut route = unknown("chi(G) exceeds the clique number of every subspace graph tried".into());
        let mut route_dims = Vec::new();
        if chi_g_res.is_some() {
            for n in 1..=opts.max_subspace_dim {
                match representation_via_clique(g, f, n, &SubspaceGuard::default(), &opts.limits) {
                    Ok(Some(r)) => {
                        let i = b.certify(Certificate::representation(&h, &r.rep));
                        route = Known { value: Some(n as u64), certificate: Some(i), note: None };
                        route_dims.push((n, r.omega));
                        break;
                    }
                    Ok(None) => continue,
                    Err(e) if e.is_unknown() => {
                        route = unknown(format!("subspace graph for n = {n}: {e}"));
                        break;
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        b.check(
            format!("clique_route_q{q}"),
            format!("colouring G into a clique of S(GF({q}),n) gives an n-dimensional representation of H"),
            Relation::ChainLe,
            vec![("od(H)", &od_h), ("n", &route)],
            None,
        );

        index_checks(&mut b, g, &gc, &hc, q, &chi_g, mr_gc_res.as_ref(), mr_hc_res.as_ref())?;
    }

    let real = chi_val.and_then(|c| {
        let l = (c as f64).log2();
        (l > 1.0).then(|| (l / l.log2()).sqrt())
    });
    b.check(
        "real_od_line".into(),
        "od over the reals of H is at least c * sqrt(log chi(G) / log log chi(G)); the constant c is unspecified, the root is reported with base-2 logarithms".into(),
        Relation::None,
        vec![("chi(G)", &chi_g)],
        real,
    );

    let summary = Summary {
        pass: b.checks.iter().filter(|c| c.status == Status::Pass).count(),
        fail: b.checks.iter().filter(|c| c.status == Status::Fail).count(),
        unknown: b.checks.iter().filter(|c| c.status == Status::Unknown).count(),
        info: b.checks.iter().filter(|c| c.status == Status::Info).count(),
    };
    Ok(Report {
        schema: SCHEMA,
        graph: GraphStats { vertices: g.n(), edges: g.edge_count() },
        line_graph: GraphStats { vertices: h.n(), edges: h.edge_count() },
        fields: opts.fields.clone(),
        checks: b.checks,
        certificates: b.certificates,
        summary,
    })
}

#[allow(clippy::too_many_arguments)]
fn index_checks(
    b: &mut Builder,
    g: &Graph,
    gc: &Graph,
    hc: &Graph,
    q: u32,
    chi_g: &Known,
    mr_gc: Option<&ParamValue<MinrankWitness>>,
    mr_hc: Option<&ParamValue<MinrankWitness>>,
) -> Result<(), Error> {
    for (tag, target, witness, line) in [("G", gc, mr_gc, false), ("H", hc, mr_hc, true)] {
        let (code, palette) = match witness {
            None => (unknown(format!("no minrank witness for complement {tag}")), None),
            Some(w) => {
                let code = linear_code_from_matrix(target, &w.witness.matrix)?;
                let i = b.certify(Certificate::index_code(target, &code));
                let known = Known { value: Some(code.length() as u64), certificate: Some(i), note: None };
                let extracted = if line {
                    line_coloring_from_index_code(g, &code)
                } else {
                    coloring_from_index_code(g, &code)
                };
                let palette = match extracted {
                    Ok(c) => {
                        let i = b.certify(Certificate::coloring(g, &c));
                        Known { value: Some(c.palette() as u64), certificate: Some(i), note: None }
                    }
                    Err(e) if e.is_unknown() => unknown(format!("colouring extraction: {e}")),
                    Err(e) => return Err(e),
                };
                let mr = Known { value: Some(w.value as u64), certificate: None, note: None };
                b.check(
                    format!("index_code_{tag}_q{q}"),
                    format!("a representing matrix of complement {tag} yields a decodable linear index code of the same length"),
                    Relation::Equal,
                    vec![("length", &known), ("minrank", &mr)],
                    None,
                );
                (known, Some(palette))
            }
        };
        let palette = palette.unwrap_or_else(|| unknown(code.note.clone().unwrap_or_default()));
        // 2^(q^k), saturated at u64::MAX
        let bound = match code.value {
            Some(k) => {
                let words = saturating_pow(q as u64, k);
                let value = if words >= 64 { u64::MAX } else { 1u64 << words };
                Known { value: Some(value), certificate: None, note: None }
            }
            None => unknown(code.note.clone().unwrap_or_default()),
        };
        b.check(
            format!("index_coloring_{tag}_q{q}"),
            format!("an index code of length k for complement {tag} over {q} symbols colours G with at most 2^({q}^k) colours"),
            Relation::ChainLe,
            vec![("chi(G)", chi_g), ("palette", &palette), ("2^(q^k)", &bound)],
            None,
        );
    }
    Ok(())
}

/// Result of re-checking a report.
#[derive(Clone, Debug)]
pub struct Audit {
    pub certificates: Vec<Verdict>,
    /// Problems with checks: a PASS whose terms do not match their
    /// certificates, or whose relation does not hold.
    pub problems: Vec<String>,
}

/// Re-verifies every certificate and re-evaluates every PASS or FAIL check
/// from its terms, matching each certified term against its certificate.
pub fn audit(report: &Report, limits: &SearchLimits) -> Audit {
    let verdicts: Vec<Verdict> = report.certificates.iter().map(|c| c.verify(limits)).collect();
    let mut problems = Vec::new();
    if report.schema != SCHEMA {
        problems.push(format!("unsupported schema {}", report.schema));
    }
    for check in &report.checks {
        if !matches!(check.status, Status::Pass | Status::Fail) {
            continue;
        }
        for t in &check.terms {
            if let Some(i) = t.certificate {
                match (report.certificates.get(i), verdicts.get(i)) {
                    (Some(c), Some(v)) => {
                        if Some(c.value()) != t.value {
                            problems.push(format!("{}: term {} disagrees with certificate {i}", check.id, t.name));
                        }
                        if check.status == Status::Pass && *v != Verdict::Verified {
                            problems.push(format!("{}: certificate {i} is not verified", check.id));
                        }
                    }
                    _ => problems.push(format!("{}: certificate {i} is missing", check.id)),
                }
            }
        }
        let values: Option<Vec<u64>> = check.terms.iter().map(|t| t.value).collect();
        let expected = values.and_then(|v| holds(&check.relation, &v));
        let claimed = check.status == Status::Pass;
        if expected != Some(claimed) {
            problems.push(format!("{}: recorded status does not follow from its terms", check.id));
        }
    }
    Audit { certificates: verdicts, problems }
}
