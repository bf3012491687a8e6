//! Executable audits of the spectral laws around sigma.
//!
//! Every audit returns an [`AuditRecord`] whose evidence holds the exact
//! quantities on both sides of the checked statement. All comparisons are
//! exact; floating values only enter through the `sigma_oracle` cross-check.

use crate::classes::{
    self, is_complete_bipartite, is_split, raw_shape, recognize_spider, recognize_spider_twin,
    small_exception, ConjectureForm,
};
use crate::graph::Graph;
use crate::graph6;
use crate::spectral::{self, count_at_least, integer, Rational, SpectralError};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    /// `mu_1 >= 1 + Delta` for graphs with an edge.
    Grone,
    /// `mu_2 >= d_2`.
    SecondDegree,
    /// `n` has multiplicity at least `k - 1` for `k` anticomponents.
    JoinMultiplicity,
    /// `k <= sigma + 1`.
    AnticomponentCount,
    /// With `k = sigma + 1`: `l <= sigma`, and the leftover anticomponent is
    /// empty but nontrivial when `l = sigma`.
    NonemptyAnticomponents,
    /// With `k = sigma + 1`: the per-anticomponent bounds behind the
    /// previous law.
    AnticomponentInequality,
    /// `sigma = 1` with disconnected complement forces `K_{r,s}`.
    CompleteBipartite,
    /// Disconnected complement: `sigma = 1` iff `K_{1,n-1}`.
    StarCharacterization,
    /// Disconnected `G` with `sigma = 1` is a star plus isolated vertices.
    Reduction,
    /// Trees of diameter above two have `sigma >= 2`.
    Forest,
    /// Spiders, with or without an added twin, have `d_2 >= avg degree`.
    SpiderBound,
    /// Split graphs with `sigma = 1` are a star plus isolated vertices.
    Split,
    /// Connected, co-connected extended P4-laden graphs are exceptional,
    /// spider-like or split.
    P4LadenStructure,
    /// `sigma = 1` iff `K1`, `K2 + sK1` or `K_{1,r} + sK1` with `s < r - 1`.
    SigmaOneConjecture,
    /// Exact sigma equals the floating count.
    SigmaOracle,
}

impl Law {
    pub const ALL: [Law; 15] = [
        Law::Grone,
        Law::SecondDegree,
        Law::JoinMultiplicity,
        Law::AnticomponentCount,
        Law::NonemptyAnticomponents,
        Law::AnticomponentInequality,
        Law::CompleteBipartite,
        Law::StarCharacterization,
        Law::Reduction,
        Law::Forest,
        Law::SpiderBound,
        Law::Split,
        Law::P4LadenStructure,
        Law::SigmaOneConjecture,
        Law::SigmaOracle,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Law::Grone => "grone",
            Law::SecondDegree => "second_degree",
            Law::JoinMultiplicity => "join_multiplicity",
            Law::AnticomponentCount => "anticomponent_count",
            Law::NonemptyAnticomponents => "nonempty_anticomponents",
            Law::AnticomponentInequality => "anticomponent_inequality",
            Law::CompleteBipartite => "complete_bipartite",
            Law::StarCharacterization => "star_characterization",
            Law::Reduction => "reduction",
            Law::Forest => "forest",
            Law::SpiderBound => "spider_bound",
            Law::Split => "split",
            Law::P4LadenStructure => "p4_laden_structure",
            Law::SigmaOneConjecture => "sigma_one_conjecture",
            Law::SigmaOracle => "sigma_oracle",
        }
    }

    /// False only for the open conjecture, whose failures are findings
    /// rather than defects.
    pub fn is_proven(self) -> bool {
        self != Law::SigmaOneConjecture
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownLaw(pub String);

impl fmt::Display for UnknownLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown law `{}`", self.0)
    }
}

impl std::error::Error for UnknownLaw {}

impl FromStr for Law {
    type Err = UnknownLaw;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Law::ALL
            .into_iter()
            .find(|l| l.id() == s)
            .ok_or_else(|| UnknownLaw(s.to_string()))
    }
}

/// Parses `all` or a comma-separated list of law ids.
pub fn parse_law_list(spec: &str) -> Result<Vec<Law>, UnknownLaw> {
    if spec.trim() == "all" {
        return Ok(Law::ALL.to_vec());
    }
    let mut laws: Vec<Law> = spec
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<_, _>>()?;
    laws.sort();
    laws.dedup();
    Ok(laws)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

pub type Evidence = BTreeMap<String, String>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub law: Law,
    pub graph6: String,
    pub verdict: Verdict,
    pub evidence: Evidence,
}

/// Per-graph quantities shared between audits, computed on first use.
pub struct Facts<'g> {
    g: &'g Graph,
    graph6: OnceCell<String>,
    avg: OnceCell<Rational>,
    sigma: OnceCell<usize>,
    anti: OnceCell<Vec<Vec<usize>>>,
    comps: OnceCell<Vec<Vec<usize>>>,
}

impl<'g> Facts<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Facts {
            g,
            graph6: OnceCell::new(),
            avg: OnceCell::new(),
            sigma: OnceCell::new(),
            anti: OnceCell::new(),
            comps: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn graph6(&self) -> &str {
        self.graph6.get_or_init(|| graph6::encode(self.g))
    }

    fn n(&self) -> usize {
        self.g.order()
    }

    fn m(&self) -> usize {
        self.g.size()
    }

    /// Requires `n >= 1`.
    pub fn avg_degree(&self) -> &Rational {
        self.avg
            .get_or_init(|| spectral::average_degree(self.g).expect("nonnull graph"))
    }

    /// Requires `n >= 1`.
    pub fn sigma(&self) -> usize {
        *self
            .sigma
            .get_or_init(|| count_at_least(self.g, self.avg_degree()))
    }

    pub fn anticomponents(&self) -> &[Vec<usize>] {
        self.anti.get_or_init(|| self.g.anticomponent_sets())
    }

    pub fn components(&self) -> &[Vec<usize>] {
        self.comps.get_or_init(|| self.g.connected_components())
    }

    fn record(&self, law: Law, verdict: Verdict, evidence: Evidence) -> AuditRecord {
        AuditRecord {
            law,
            graph6: self.graph6().to_string(),
            verdict,
            evidence,
        }
    }

    fn not_applicable(&self, law: Law, why: &str) -> AuditRecord {
        let mut ev = Evidence::new();
        ev.insert("reason".into(), why.into());
        self.record(law, Verdict::NotApplicable, ev)
    }

    fn decide(&self, law: Law, holds: bool, evidence: Evidence) -> AuditRecord {
        let verdict = if holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        };
        self.record(law, verdict, evidence)
    }

    /// Evidence every audit starts from.
    fn base_evidence(&self) -> Evidence {
        let mut ev = Evidence::new();
        ev.insert("n".into(), self.n().to_string());
        ev.insert("m".into(), self.m().to_string());
        ev.insert("avg_degree".into(), self.avg_degree().to_string());
        ev.insert("sigma".into(), self.sigma().to_string());
        ev
    }
}

fn put(ev: &mut Evidence, key: &str, value: impl ToString) {
    ev.insert(key.to_string(), value.to_string());
}

/// Runs one law, reusing cached facts. Only [`Law::SigmaOracle`] can fail,
/// when the floating eigensolver does not converge.
pub fn audit_with(law: Law, facts: &Facts<'_>, tie_tol: f64) -> Result<AuditRecord, SpectralError> {
    if facts.n() == 0 {
        return Ok(facts.not_applicable(law, "graph has no vertices"));
    }
    Ok(match law {
        Law::Grone => grone(facts),
        Law::SecondDegree => second_degree(facts),
        Law::JoinMultiplicity => join_multiplicity(facts),
        Law::AnticomponentCount => anticomponent_count(facts),
        Law::NonemptyAnticomponents => nonempty_anticomponents(facts),
        Law::AnticomponentInequality => anticomponent_inequality(facts),
        Law::CompleteBipartite => complete_bipartite(facts),
        Law::StarCharacterization => star_characterization(facts),
        Law::Reduction => reduction(facts),
        Law::Forest => forest(facts),
        Law::SpiderBound => spider_bound(facts),
        Law::Split => split(facts),
        Law::P4LadenStructure => p4_laden_structure(facts),
        Law::SigmaOneConjecture => sigma_one_conjecture(facts),
        Law::SigmaOracle => sigma_oracle(facts, tie_tol)?,
    })
}

pub fn audit(law: Law, g: &Graph) -> Result<AuditRecord, SpectralError> {
    audit_with(law, &Facts::new(g), spectral::DEFAULT_TIE_TOL)
}

macro_rules! single_audit {
    ($($name:ident => $law:expr),* $(,)?) => {
        $(
            pub fn $name(g: &Graph) -> AuditRecord {
                audit($law, g).expect("exact audits do not fail")
            }
        )*
    };
}

single_audit! {
    audit_grone => Law::Grone,
    audit_second_degree => Law::SecondDegree,
    audit_join_multiplicity => Law::JoinMultiplicity,
    audit_anticomponent_count => Law::AnticomponentCount,
    audit_nonempty_anticomponents => Law::NonemptyAnticomponents,
    audit_anticomponent_inequalities => Law::AnticomponentInequality,
    audit_complete_bipartite_corollary => Law::CompleteBipartite,
    audit_star_characterization => Law::StarCharacterization,
    audit_reduction => Law::Reduction,
    audit_forest => Law::Forest,
    audit_spider_bound => Law::SpiderBound,
    audit_split_theorem => Law::Split,
    audit_p4_laden_structure => Law::P4LadenStructure,
    audit_sigma_one_conjecture => Law::SigmaOneConjecture,
}

pub fn audit_sigma_oracle(g: &Graph, tie_tol: f64) -> Result<AuditRecord, SpectralError> {
    audit_with(Law::SigmaOracle, &Facts::new(g), tie_tol)
}

fn grone(f: &Facts<'_>) -> AuditRecord {
    if f.m() == 0 {
        return f.not_applicable(Law::Grone, "no edges");
    }
    let bound = f.g.max_degree() + 1;
    let above = count_at_least(f.g, &integer(bound));
    let mut ev = f.base_evidence();
    put(&mut ev, "max_degree", f.g.max_degree());
    put(&mut ev, "bound", bound);
    put(&mut ev, "eigenvalues_at_least_bound", above);
    f.decide(Law::Grone, above >= 1, ev)
}

fn second_degree(f: &Facts<'_>) -> AuditRecord {
    if f.n() < 2 {
        return f.not_applicable(Law::SecondDegree, "fewer than two vertices");
    }
    if let Some(ConjectureForm::K2PlusIsolated { .. }) = raw_shape(f.g) {
        return f.not_applicable(
            Law::SecondDegree,
            "K2 plus isolated vertices has mu_2 = 0 < d_2",
        );
    }
    let d2 = f.g.degree_sequence()[1];
    let above = count_at_least(f.g, &integer(d2));
    let mut ev = f.base_evidence();
    put(&mut ev, "d2", d2);
    put(&mut ev, "eigenvalues_at_least_d2", above);
    f.decide(Law::SecondDegree, above >= 2, ev)
}

fn join_multiplicity(f: &Facts<'_>) -> AuditRecord {
    let k = f.anticomponents().len();
    let mult = spectral::multiplicity_of_n(f.g).expect("nonnull graph");
    let mut ev = f.base_evidence();
    put(&mut ev, "anticomponents", k);
    put(&mut ev, "multiplicity_of_n", mult);
    f.decide(Law::JoinMultiplicity, mult + 1 >= k, ev)
}

fn anticomponent_count(f: &Facts<'_>) -> AuditRecord {
    let k = f.anticomponents().len();
    let mut ev = f.base_evidence();
    put(&mut ev, "anticomponents", k);
    f.decide(Law::AnticomponentCount, k <= f.sigma() + 1, ev)
}

/// `(n_i, m_i)` per anticomponent.
fn anticomponent_sizes(f: &Facts<'_>) -> Vec<(usize, usize)> {
    f.anticomponents()
        .iter()
        .map(|a| (a.len(), f.g.size_within(a)))
        .collect()
}

fn nonempty_anticomponents(f: &Facts<'_>) -> AuditRecord {
    let k = f.anticomponents().len();
    let sigma = f.sigma();
    if k != sigma + 1 {
        return f.not_applicable(
            Law::NonemptyAnticomponents,
            "anticomponent count differs from sigma + 1",
        );
    }
    let sizes = anticomponent_sizes(f);
    let nonempty = sizes.iter().filter(|&&(_, m)| m > 0).count();
    let mut ev = f.base_evidence();
    put(&mut ev, "anticomponents", k);
    put(&mut ev, "nonempty_anticomponents", nonempty);
    let mut holds = nonempty <= sigma;
    if nonempty == sigma {
        let rest: Vec<usize> = sizes
            .iter()
            .filter(|&&(_, m)| m == 0)
            .map(|&(n, _)| n)
            .collect();
        put(&mut ev, "empty_anticomponent_orders", format!("{rest:?}"));
        holds &= rest.len() == 1 && rest[0] >= 2;
    }
    f.decide(Law::NonemptyAnticomponents, holds, ev)
}

fn anticomponent_inequality(f: &Facts<'_>) -> AuditRecord {
    let k = f.anticomponents().len();
    if k != f.sigma() + 1 || k < 2 {
        return f.not_applicable(Law::AnticomponentInequality, "needs k = sigma + 1 >= 2");
    }
    let sizes = anticomponent_sizes(f);
    if sizes.iter().all(|&(_, m)| m == 0) {
        return f.not_applicable(Law::AnticomponentInequality, "no nonempty anticomponent");
    }
    let n = f.n() as i128;
    let sum_m: i128 = sizes.iter().map(|&(_, m)| m as i128).sum();
    let sum_n2: i128 = sizes.iter().map(|&(ni, _)| (ni * ni) as i128).sum();
    let mut ev = f.base_evidence();
    put(&mut ev, "anticomponents", k);
    let mut holds = true;
    for (i, (verts, &(ni, mi))) in f.anticomponents().iter().zip(&sizes).enumerate() {
        if ni < 2 {
            continue;
        }
        // mu_1 of the part sits strictly below (2 sum m - sum n^2 + n n_i) / n
        let bound = Rational::new(
            BigInt::from(2 * sum_m - sum_n2 + n * ni as i128),
            BigInt::from(n),
        );
        let part = f.g.induced_subgraph(verts).expect("valid anticomponent");
        let above = count_at_least(&part, &bound);
        put(&mut ev, &format!("part{i}_mu1_bound"), &bound);
        put(
            &mut ev,
            &format!("part{i}_eigenvalues_at_least_bound"),
            above,
        );
        holds &= above == 0;
        if mi > 0 {
            let (ni, mi) = (ni as i128, mi as i128);
            let lhs = 2 * ni * sum_m - ni * sum_n2 + n * ni * ni - 2 * n * mi - n * ni;
            put(&mut ev, &format!("part{i}_order"), ni);
            put(&mut ev, &format!("part{i}_size"), mi);
            put(&mut ev, &format!("part{i}_combined_lhs"), lhs);
            holds &= lhs > 0;
        }
    }
    f.decide(Law::AnticomponentInequality, holds, ev)
}

fn complete_bipartite(f: &Facts<'_>) -> AuditRecord {
    if f.sigma() != 1 || f.anticomponents().len() < 2 {
        return f.not_applicable(
            Law::CompleteBipartite,
            "needs sigma = 1 and disconnected complement",
        );
    }
    let kb = is_complete_bipartite(f.g);
    let mut ev = f.base_evidence();
    put(&mut ev, "complete_bipartite", format!("{kb:?}"));
    f.decide(Law::CompleteBipartite, kb.is_some(), ev)
}

fn star_characterization(f: &Facts<'_>) -> AuditRecord {
    if f.anticomponents().len() < 2 {
        return f.not_applicable(Law::StarCharacterization, "complement is connected");
    }
    let is_star = is_complete_bipartite(f.g) == Some((1, f.n() - 1));
    let mut ev = f.base_evidence();
    put(&mut ev, "is_star", is_star);
    f.decide(Law::StarCharacterization, (f.sigma() == 1) == is_star, ev)
}

fn reduction(f: &Facts<'_>) -> AuditRecord {
    if f.components().len() < 2 || f.sigma() != 1 || f.m() == 0 {
        return f.not_applicable(
            Law::Reduction,
            "needs a disconnected graph with an edge and sigma = 1",
        );
    }
    let avg = f.avg_degree();
    let mut ev = f.base_evidence();
    // the component carrying mu_1(G), the only eigenvalue >= avg degree
    let carriers: Vec<&Vec<usize>> = f
        .components()
        .iter()
        .filter(|c| {
            let part = f.g.induced_subgraph(c).expect("valid component");
            count_at_least(&part, avg) >= 1
        })
        .collect();
    put(&mut ev, "components_reaching_avg_degree", carriers.len());
    let [main] = carriers.as_slice() else {
        return f.decide(Law::Reduction, false, ev);
    };
    let g1 = f.g.induced_subgraph(main).expect("valid component");
    let (n1, m1) = (g1.order(), g1.size());
    let (n2, m2) = (f.n() - n1, f.m() - m1);
    let left = Rational::new(BigInt::from(2 * m2), BigInt::from(n2));
    let right = Rational::new(BigInt::from(2 * m1), BigInt::from(n1));
    let chain = &left < avg && avg < &right;
    let sigma1 = spectral::sigma(&g1).expect("nonnull component");
    let star = is_complete_bipartite(&g1).filter(|&(r, _)| r == 1);
    put(&mut ev, "main_component_order", n1);
    put(&mut ev, "main_component_size", m1);
    put(&mut ev, "rest_avg_degree", &left);
    put(&mut ev, "main_avg_degree", &right);
    put(&mut ev, "chain_holds", chain);
    put(&mut ev, "main_sigma", sigma1);
    put(&mut ev, "rest_size", m2);
    put(&mut ev, "main_is_star", star.is_some());
    f.decide(
        Law::Reduction,
        chain && sigma1 == 1 && m2 == 0 && star.is_some(),
        ev,
    )
}

fn forest(f: &Facts<'_>) -> AuditRecord {
    if !classes::is_tree(f.g) || classes::diameter(f.g).unwrap_or(0) <= 2 {
        return f.not_applicable(Law::Forest, "not a tree of diameter above two");
    }
    let d2 = f.g.degree_sequence()[1];
    let above_d2 = count_at_least(f.g, &integer(d2));
    let mut ev = f.base_evidence();
    put(&mut ev, "d2", d2);
    put(&mut ev, "eigenvalues_at_least_d2", above_d2);
    let holds = d2 >= 2 && *f.avg_degree() < integer(2) && above_d2 >= 2 && f.sigma() >= 2;
    f.decide(Law::Forest, holds, ev)
}

fn spider_bound(f: &Facts<'_>) -> AuditRecord {
    let mut ev = f.base_evidence();
    if let Some(w) = recognize_spider(f.g) {
        put(&mut ev, "case", format!("{} spider", w.kind));
        put(&mut ev, "k", w.k());
        put(&mut ev, "head", w.head.len());
    } else if let Some(t) = recognize_spider_twin(f.g) {
        let twin = if t.adjacent { "true" } else { "false" };
        put(
            &mut ev,
            "case",
            format!("{} spider plus {twin} twin", t.spider.kind),
        );
        put(&mut ev, "k", t.spider.k());
        put(&mut ev, "head", t.spider.head.len());
        put(&mut ev, "twin_of", format!("{:?}", t.part).to_lowercase());
    } else {
        return f.not_applicable(Law::SpiderBound, "not a spider or a spider with one twin");
    }
    let d2 = f.g.degree_sequence()[1];
    put(&mut ev, "d2", d2);
    let holds = integer(d2) >= *f.avg_degree() && f.sigma() >= 2;
    f.decide(Law::SpiderBound, holds, ev)
}

fn split(f: &Facts<'_>) -> AuditRecord {
    let Some(p) = is_split(f.g) else {
        return f.not_applicable(Law::Split, "not split");
    };
    let shape = raw_shape(f.g);
    let mut ev = f.base_evidence();
    put(&mut ev, "clique", format!("{:?}", p.clique));
    put(
        &mut ev,
        "shape",
        shape.map_or("none".to_string(), |s| s.to_string()),
    );
    f.decide(Law::Split, f.sigma() != 1 || shape.is_some(), ev)
}

fn p4_laden_structure(f: &Facts<'_>) -> AuditRecord {
    if !f.g.is_connected() || f.anticomponents().len() != 1 || !classes::is_extended_p4_laden(f.g) {
        return f.not_applicable(
            Law::P4LadenStructure,
            "needs a connected, co-connected extended P4-laden graph",
        );
    }
    let mut ev = f.base_evidence();
    let case = if let Some(x) = small_exception(f.g) {
        Some(format!("{x:?}"))
    } else if let Some(w) = recognize_spider(f.g) {
        Some(format!("{} spider k={}", w.kind, w.k()))
    } else if let Some(t) = recognize_spider_twin(f.g) {
        let twin = if t.adjacent { "true" } else { "false" };
        Some(format!(
            "{} spider k={} plus {twin} twin of a {:?} vertex",
            t.spider.kind,
            t.spider.k(),
            t.part
        ))
    } else if is_split(f.g).is_some() {
        Some("split".to_string())
    } else {
        None
    };
    put(&mut ev, "case", case.as_deref().unwrap_or("none"));
    f.decide(Law::P4LadenStructure, case.is_some(), ev)
}

fn sigma_one_conjecture(f: &Facts<'_>) -> AuditRecord {
    let form = classes::conjecture_form(f.g);
    let mut ev = f.base_evidence();
    put(
        &mut ev,
        "form",
        form.map_or("none".to_string(), |s| s.to_string()),
    );
    f.decide(
        Law::SigmaOneConjecture,
        (f.sigma() == 1) == form.is_some(),
        ev,
    )
}

fn sigma_oracle(f: &Facts<'_>, tie_tol: f64) -> Result<AuditRecord, SpectralError> {
    let float = spectral::sigma_float(f.g, tie_tol)?;
    let mut ev = f.base_evidence();
    put(&mut ev, "sigma_float", float);
    put(&mut ev, "tie_tol", tie_tol);
    Ok(f.decide(Law::SigmaOracle, float == f.sigma(), ev))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        complete, complete_bipartite, cycle, path, remark_family, spider, star, star_plus_isolated,
        SpiderKind,
    };

    fn verdict(r: AuditRecord) -> Verdict {
        r.verdict
    }

    #[test]
    fn law_ids_round_trip() {
        for law in Law::ALL {
            assert_eq!(law.id().parse::<Law>().unwrap(), law);
        }
        assert_eq!(parse_law_list("all").unwrap().len(), Law::ALL.len());
        assert_eq!(
            parse_law_list("split, grone,split").unwrap(),
            vec![Law::Grone, Law::Split]
        );
        assert!(parse_law_list("grone,nope").is_err());
    }

    #[test]
    fn grone_examples() {
        let r = audit_grone(&complete(2).unwrap());
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.evidence["bound"], "2");
        assert_eq!(verdict(audit_grone(&star(6).unwrap())), Verdict::Holds);
        assert_eq!(
            verdict(audit_grone(&Graph::empty(4))),
            Verdict::NotApplicable
        );
    }

    #[test]
    fn second_degree_examples() {
        let r = audit_second_degree(&path(4).unwrap());
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.evidence["d2"], "2");
        assert_eq!(
            verdict(audit_second_degree(&complete(5).unwrap())),
            Verdict::Holds
        );
        assert_eq!(
            verdict(audit_second_degree(&Graph::empty(1))),
            Verdict::NotApplicable
        );
        let k2 = complete(2).unwrap().disjoint_union(&Graph::empty(3));
        assert_eq!(verdict(audit_second_degree(&k2)), Verdict::NotApplicable);
    }

    #[test]
    fn anticomponent_laws_on_the_sharp_family() {
        for s in 2..6 {
            let g = remark_family(s);
            let r = audit_anticomponent_count(&g);
            assert_eq!(r.verdict, Verdict::Holds);
            assert_eq!(r.evidence["anticomponents"], (s + 1).to_string());
            assert_eq!(r.evidence["sigma"], s.to_string());
            let r = audit_nonempty_anticomponents(&g);
            assert_eq!(r.verdict, Verdict::Holds);
            assert_eq!(r.evidence["nonempty_anticomponents"], "1");
            let r = audit_anticomponent_inequalities(&g);
            assert_eq!(r.verdict, Verdict::Holds, "{r:?}");
        }
        let k13 = star(4).unwrap();
        assert_eq!(
            verdict(audit_anticomponent_inequalities(&k13)),
            Verdict::NotApplicable
        );
        assert_eq!(
            verdict(audit_anticomponent_count(&path(4).unwrap())),
            Verdict::Holds
        );
        assert_eq!(
            verdict(audit_nonempty_anticomponents(&path(4).unwrap())),
            Verdict::NotApplicable
        );
    }

    #[test]
    fn combined_inequality_value_for_sharp_family() {
        // s = 2: parts 4K2 (n=8, m=4), K1, K1; n = 10, sum m = 4, sum n^2 = 66
        // 2*8*4 - 8*66 + 10*64 - 2*10*4 - 10*8 = 64 - 528 + 640 - 80 - 80 = 16
        let r = audit_anticomponent_inequalities(&remark_family(2));
        let lhs: Vec<&String> = r
            .evidence
            .iter()
            .filter(|(k, _)| k.ends_with("combined_lhs"))
            .map(|(_, v)| v)
            .collect();
        assert_eq!(lhs, vec!["16"]);
    }

    #[test]
    fn bipartite_and_star_laws() {
        assert_eq!(
            verdict(audit_complete_bipartite_corollary(&star(5).unwrap())),
            Verdict::Holds
        );
        assert_eq!(
            verdict(audit_complete_bipartite_corollary(&path(4).unwrap())),
            Verdict::NotApplicable
        );
        // K_{2,3}: spectrum {5,3,2,2,0}, avg 12/5, sigma 2
        let k23 = complete_bipartite(2, 3).unwrap();
        let r = audit_complete_bipartite_corollary(&k23);
        assert_eq!(r.verdict, Verdict::NotApplicable);
        assert_eq!(spectral::sigma(&k23).unwrap(), 2);

        let r = audit_star_characterization(&star(6).unwrap());
        assert_eq!(
            (r.verdict, r.evidence["is_star"].as_str()),
            (Verdict::Holds, "true")
        );
        let r = audit_star_characterization(&cycle(4).unwrap());
        assert_eq!(
            (r.verdict, r.evidence["sigma"].as_str()),
            (Verdict::Holds, "3")
        );
        let r = audit_star_characterization(&complete(3).unwrap());
        assert_eq!(
            (r.verdict, r.evidence["sigma"].as_str()),
            (Verdict::Holds, "2")
        );
    }

    #[test]
    fn spider_examples() {
        let r = audit_spider_bound(&path(4).unwrap());
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(
            (r.evidence["d2"].as_str(), r.evidence["avg_degree"].as_str()),
            ("2", "3/2")
        );
        assert_eq!(r.evidence["sigma"], "2");

        let (g, _) = spider(SpiderKind::Thick, 3, &Graph::empty(0)).unwrap();
        let r = audit_spider_bound(&g);
        assert_eq!(
            (r.verdict, r.evidence["d2"].as_str()),
            (Verdict::Holds, "4")
        );

        let (g, shape) = spider(SpiderKind::Thin, 3, &Graph::empty(1)).unwrap();
        assert_eq!(verdict(audit_spider_bound(&g)), Verdict::Holds);
        let twin = g.add_twin(shape.body[0], true).unwrap();
        let r = audit_spider_bound(&twin);
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(r.evidence["case"].contains("twin"), "{r:?}");
    }

    #[test]
    fn split_examples() {
        let r = audit_split_theorem(&star_plus_isolated(3, 1).unwrap());
        assert_eq!(
            (r.verdict, r.evidence["sigma"].as_str()),
            (Verdict::Holds, "1")
        );
        let r = audit_split_theorem(&complete(3).unwrap());
        assert_eq!(
            (r.verdict, r.evidence["sigma"].as_str()),
            (Verdict::Holds, "2")
        );
        assert_eq!(
            verdict(audit_split_theorem(&cycle(4).unwrap())),
            Verdict::NotApplicable
        );
    }

    #[test]
    fn reduction_examples() {
        let r = audit_reduction(&star_plus_isolated(3, 1).unwrap());
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.evidence["rest_avg_degree"], "0");
        assert_eq!(r.evidence["avg_degree"], "6/5");
        assert_eq!(r.evidence["main_avg_degree"], "3/2");
        let g = complete(2).unwrap().disjoint_union(&Graph::empty(2));
        let r = audit_reduction(&g);
        assert_eq!(
            (r.verdict, r.evidence["main_sigma"].as_str()),
            (Verdict::Holds, "1")
        );
        assert_eq!(
            verdict(audit_reduction(&path(5).unwrap())),
            Verdict::NotApplicable
        );
    }

    #[test]
    fn conjecture_examples() {
        let r = audit_sigma_one_conjecture(&Graph::empty(1));
        assert_eq!(
            (r.verdict, r.evidence["form"].as_str()),
            (Verdict::Holds, "K1")
        );
        let r = audit_sigma_one_conjecture(&path(5).unwrap());
        assert_eq!(
            (r.verdict, r.evidence["sigma"].as_str()),
            (Verdict::Holds, "2")
        );
        let r = audit_sigma_one_conjecture(&star_plus_isolated(4, 3).unwrap());
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.evidence["form"], "none");
        assert_ne!(r.evidence["sigma"], "1");
    }

    #[test]
    fn forest_and_structure_examples() {
        let r = audit_forest(&path(5).unwrap());
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(
            verdict(audit_forest(&star(5).unwrap())),
            Verdict::NotApplicable
        );
        for g in [
            path(5).unwrap(),
            path(5).unwrap().complement(),
            cycle(5).unwrap(),
        ] {
            let r = audit_p4_laden_structure(&g);
            assert_eq!(r.verdict, Verdict::Holds, "{r:?}");
        }
        assert_eq!(
            verdict(audit_p4_laden_structure(&path(6).unwrap())),
            Verdict::NotApplicable
        );
    }

    #[test]
    fn null_graph_is_not_applicable() {
        for law in Law::ALL {
            assert_eq!(
                audit(law, &Graph::empty(0)).unwrap().verdict,
                Verdict::NotApplicable
            );
        }
    }

    #[test]
    fn oracle_on_boundary_graph() {
        let r = audit_sigma_oracle(&cycle(4).unwrap(), spectral::DEFAULT_TIE_TOL).unwrap();
        assert_eq!(
            (r.verdict, r.evidence["sigma_float"].as_str()),
            (Verdict::Holds, "3")
        );
    }
}
