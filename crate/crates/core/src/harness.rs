//! Corpus-wide audit runs and the verification report.

use crate::graph::Graph;
use crate::graph6::{self, Graph6Error};
use crate::laws::{audit_with, Evidence, Facts, Law, Verdict};
use crate::spectral::DEFAULT_TIE_TOL;
use crossbeam_channel::{bounded, Receiver, Sender};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::BufRead;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("reading corpus: {0}")]
    Io(#[from] std::io::Error),
    #[error("no laws selected")]
    NoLaws,
}

/// Lazily decodes newline-delimited graph6, skipping blank lines and
/// `>>graph6<<` headers.
pub fn read_graph6_lines<R: BufRead>(
    reader: R,
) -> impl Iterator<Item = Result<Graph, HarnessError>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(HarnessError::Io(e))),
        };
        let text = line.trim().trim_start_matches(">>graph6<<");
        if text.is_empty() {
            return None;
        }
        Some(graph6::decode(text).map_err(|source| HarnessError::Parse {
            line: i + 1,
            source,
        }))
    })
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub laws: Vec<Law>,
    pub jobs: usize,
    pub tie_tol: f64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            laws: Law::ALL.to_vec(),
            jobs: 1,
            tie_tol: DEFAULT_TIE_TOL,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub evidence: Evidence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawTally {
    pub id: Law,
    pub holds: usize,
    pub fails: usize,
    pub na: usize,
    /// Graphs on which the audit could not be evaluated.
    pub errors: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl LawTally {
    fn new(id: Law) -> Self {
        LawTally {
            id,
            holds: 0,
            fails: 0,
            na: 0,
            errors: 0,
            counterexamples: Vec::new(),
        }
    }

    pub fn total(&self) -> usize {
        self.holds + self.fails + self.na + self.errors
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphError {
    pub graph6: String,
    pub law: Law,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub corpus: String,
    pub graphs: usize,
    pub laws: Vec<LawTally>,
    /// Order -> sigma -> number of graphs.
    pub sigma_histogram: BTreeMap<usize, BTreeMap<usize, usize>>,
    pub errors: Vec<GraphError>,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub fn total_fails(&self) -> usize {
        self.laws.iter().map(|l| l.fails).sum()
    }

    pub fn law(&self, law: Law) -> Option<&LawTally> {
        self.laws.iter().find(|t| t.id == law)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// One row per law.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("law,holds,fails,na,errors\n");
        for t in &self.laws {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                t.id, t.holds, t.fails, t.na, t.errors
            ));
        }
        out
    }
}

/// Verdict plus counterexample, or the solver error message.
type LawResult = Result<(Verdict, Option<Counterexample>), String>;

/// What a worker reports for one graph.
struct Outcome {
    order: usize,
    sigma: Option<usize>,
    verdicts: Vec<(Law, LawResult)>,
    graph6: String,
}

fn audit_graph(g: &Graph, opts: &RunOptions) -> Outcome {
    let facts = Facts::new(g);
    let verdicts = opts
        .laws
        .iter()
        .map(|&law| {
            let res = audit_with(law, &facts, opts.tie_tol)
                .map(|r| {
                    let cx = Counterexample {
                        graph6: r.graph6,
                        evidence: r.evidence,
                    };
                    (r.verdict, (r.verdict == Verdict::Fails).then_some(cx))
                })
                .map_err(|e| e.to_string());
            (law, res)
        })
        .collect();
    Outcome {
        order: g.order(),
        sigma: (g.order() > 0).then(|| facts.sigma()),
        graph6: facts.graph6().to_string(),
        verdicts,
    }
}

struct Merger {
    graphs: usize,
    tallies: Vec<LawTally>,
    histogram: BTreeMap<usize, BTreeMap<usize, usize>>,
    errors: Vec<GraphError>,
}

impl Merger {
    fn absorb(&mut self, o: Outcome) {
        self.graphs += 1;
        if let Some(s) = o.sigma {
            *self
                .histogram
                .entry(o.order)
                .or_default()
                .entry(s)
                .or_default() += 1;
        }
        for (tally, (law, res)) in self.tallies.iter_mut().zip(o.verdicts) {
            match res {
                Ok((Verdict::Holds, _)) => tally.holds += 1,
                Ok((Verdict::NotApplicable, _)) => tally.na += 1,
                Ok((Verdict::Fails, cx)) => {
                    tally.fails += 1;
                    tally.counterexamples.extend(cx);
                }
                Err(message) => {
                    tally.errors += 1;
                    self.errors.push(GraphError {
                        graph6: o.graph6.clone(),
                        law,
                        message,
                    });
                }
            }
        }
    }
}

fn worker(rx: Receiver<Graph>, tx: Sender<Outcome>, opts: &RunOptions) {
    for g in rx {
        if tx.send(audit_graph(&g, opts)).is_err() {
            break;
        }
    }
}

/// Audits every graph of `corpus` against the selected laws.
///
/// Graphs are dealt round-robin to `opts.jobs` workers through bounded
/// queues, so the corpus is never held in memory. The report does not depend
/// on the worker count: tallies are order-free and every list is sorted by
/// graph6 before returning.
pub fn run_audits<I>(
    corpus: I,
    description: &str,
    opts: &RunOptions,
) -> Result<VerificationReport, HarnessError>
where
    I: IntoIterator<Item = Result<Graph, HarnessError>>,
{
    if opts.laws.is_empty() {
        return Err(HarnessError::NoLaws);
    }
    let start = Instant::now();
    let jobs = opts.jobs.max(1);
    let mut merger = Merger {
        graphs: 0,
        tallies: opts.laws.iter().map(|&l| LawTally::new(l)).collect(),
        histogram: BTreeMap::new(),
        errors: Vec::new(),
    };

    let feed_result = std::thread::scope(|scope| {
        let (out_tx, out_rx) = bounded::<Outcome>(64 * jobs);
        let mut queues = Vec::with_capacity(jobs);
        for _ in 0..jobs {
            let (tx, rx) = bounded::<Graph>(64);
            let out_tx = out_tx.clone();
            scope.spawn(move || worker(rx, out_tx, opts));
            queues.push(tx);
        }
        drop(out_tx);
        let merge = scope.spawn(|| {
            for o in out_rx {
                merger.absorb(o);
            }
        });

        let mut fed = Ok(());
        for (i, item) in corpus.into_iter().enumerate() {
            match item {
                Ok(g) => {
                    if queues[i % jobs].send(g).is_err() {
                        break;
                    }
                }
                Err(e) => {
                    fed = Err(e);
                    break;
                }
            }
        }
        drop(queues);
        merge.join().expect("merge thread panicked");
        fed
    });
    feed_result?;

    for t in &mut merger.tallies {
        t.counterexamples.sort();
    }
    merger.errors.sort();
    Ok(VerificationReport {
        corpus: description.to_string(),
        graphs: merger.graphs,
        laws: merger.tallies,
        sigma_histogram: merger.histogram,
        errors: merger.errors,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

/// [`run_audits`] over an in-memory or infallible source.
pub fn run_audits_on<I>(graphs: I, description: &str, opts: &RunOptions) -> VerificationReport
where
    I: IntoIterator<Item = Graph>,
{
    run_audits(graphs.into_iter().map(Ok), description, opts).expect("infallible corpus")
}
