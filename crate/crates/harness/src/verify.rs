//! Prediction versus oracle, one record per graph.

use std::path::Path;
use std::time::Instant;

use belab_algebra::resolution::DerivedInvariants;
use belab_core::canon::canonical_form;
use belab_core::{predict, recognize_family, Graph, Prediction, Uniqueness};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::GraphCase;
use crate::error::HarnessError;
use crate::oracle::{run_oracle, OracleConfig, OracleOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    PredictionRefuted,
    PredictionRefined,
    OracleSkipped,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::PredictionRefuted => "prediction_refuted",
            Verdict::PredictionRefined => "prediction_refined",
            Verdict::OracleSkipped => "oracle_skipped",
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OracleSummary {
    pub invariants: DerivedInvariants,
    pub betti_digest: String,
    pub betti: belab_algebra::resolution::BettiTableJson,
    pub cached: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub graph_id: String,
    pub recipe: String,
    pub family: String,
    pub n: usize,
    pub k: Option<usize>,
    pub graph: Graph,
    pub prediction: Prediction,
    pub oracle: Option<OracleSummary>,
    pub verdict: Verdict,
    /// Why a prediction was refuted, why the oracle was skipped, or which
    /// consistency check failed.
    pub notes: Vec<String>,
    /// Set when an internal check failed; such records make the run fail.
    pub consistency_failure: bool,
    pub ms: u128,
}

fn fmt_pos(p: (usize, usize)) -> String {
    format!("({},{})", p.0, p.1)
}

/// Exact fields must equal the oracle, intervals and candidate sets must
/// contain it. Returns the violations, plus whether anything was left open.
pub fn compare(pred: &Prediction, oracle: &DerivedInvariants) -> (Vec<String>, bool) {
    let mut bad = Vec::new();
    if !pred.depth.contains(oracle.depth) {
        bad.push(format!("depth {} not in {}", oracle.depth, pred.depth));
    }
    if !pred.reg.contains(oracle.reg) {
        bad.push(format!("reg {} not in {}", oracle.reg, pred.reg));
    }
    for pos in pred.certain_positions() {
        if !oracle.extremal.contains(&pos) {
            bad.push(format!("{} is not extremal", fmt_pos(pos)));
        }
    }
    let cands: Vec<(usize, usize)> = pred.candidate_positions().collect();
    if !cands.is_empty() && !cands.iter().any(|c| oracle.extremal.contains(c)) {
        bad.push(format!("no candidate among {} is extremal", cands.iter().map(|&c| fmt_pos(c)).collect::<Vec<_>>().join("|")));
    }
    match pred.uniqueness {
        Uniqueness::Unique if !oracle.unique_extremal => bad.push("predicted unique extremal, oracle has several".into()),
        Uniqueness::NonUnique if oracle.unique_extremal => bad.push("predicted several extremal, oracle has one".into()),
        _ => {}
    }
    let tags = pred.provenance.join(",");
    for b in &mut bad {
        b.push_str(&format!(" [{tags}]"));
    }
    let open = pred.depth.exact().is_none() || pred.reg.exact().is_none() || !cands.is_empty() || pred.uniqueness == Uniqueness::Undetermined;
    (bad, open)
}

pub fn verify_case(case: &GraphCase, cfg: &OracleConfig) -> Result<VerificationRecord, HarnessError> {
    let start = Instant::now();
    let g = &case.graph;
    let fam = recognize_family(g);
    let prediction = predict(g)?;
    let mut rec = VerificationRecord {
        graph_id: canonical_form(g)?.hash(),
        recipe: case.recipe.clone(),
        family: fam.tag().to_string(),
        n: g.n(),
        k: g.girth(),
        graph: g.clone(),
        prediction,
        oracle: None,
        verdict: Verdict::OracleSkipped,
        notes: Vec::new(),
        consistency_failure: false,
        ms: 0,
    };
    match run_oracle(g, cfg) {
        Ok(OracleOutcome::Skipped(why)) => rec.notes.push(why),
        Ok(OracleOutcome::Computed(res)) => {
            let (bad, open) = compare(&rec.prediction, &res.invariants);
            rec.verdict = if !bad.is_empty() {
                Verdict::PredictionRefuted
            } else if open {
                Verdict::PredictionRefined
            } else {
                Verdict::Match
            };
            rec.notes.extend(bad);
            rec.oracle = Some(OracleSummary {
                betti_digest: res.digest(g.n(), cfg.p, cfg.order),
                betti: res.betti.to_json(g.n(), cfg.p, cfg.order.name()),
                invariants: res.invariants,
                cached: res.cached,
            });
        }
        Err(HarnessError::Consistency(what)) | Err(HarnessError::Algebra(belab_algebra::AlgebraError::Inconsistent(what))) => {
            rec.consistency_failure = true;
            rec.notes.push(format!("consistency failure: {what}"));
        }
        Err(e) => return Err(e),
    }
    rec.ms = start.elapsed().as_millis();
    Ok(rec)
}

/// Runs every case on the rayon pool; the report keeps the input order.
pub fn verify_all(cases: &[GraphCase], cfg: &OracleConfig) -> Result<Report, HarnessError> {
    let records = cases.par_iter().map(|c| verify_case(c, cfg)).collect::<Result<Vec<_>, _>>()?;
    Ok(Report { records })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<VerificationRecord>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    graph_id: &'a str,
    family: &'a str,
    n: usize,
    k: String,
    depth_pred: String,
    depth_oracle: String,
    reg_pred: String,
    reg_oracle: String,
    extremal_pred: String,
    extremal_oracle: String,
    uniqueness_pred: String,
    uniqueness_oracle: String,
    verdict: String,
    ms: u128,
}

fn extremal_pred(p: &Prediction) -> String {
    let mut parts: Vec<String> = p.certain_positions().map(fmt_pos).collect();
    let cands: Vec<String> = p.candidate_positions().map(fmt_pos).collect();
    if !cands.is_empty() {
        parts.push(cands.join("|"));
    }
    parts.join(";")
}

impl Report {
    pub fn count(&self, v: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == v).count()
    }

    pub fn consistency_failures(&self) -> usize {
        self.records.iter().filter(|r| r.consistency_failure).count()
    }

    /// 0 iff nothing was refuted and no internal check failed.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.count(Verdict::PredictionRefuted) > 0 || self.consistency_failures() > 0)
    }

    pub fn summary(&self) -> String {
        format!(
            "{} graphs: {} match, {} refined, {} refuted, {} skipped, {} consistency failures",
            self.records.len(),
            self.count(Verdict::Match),
            self.count(Verdict::PredictionRefined),
            self.count(Verdict::PredictionRefuted),
            self.count(Verdict::OracleSkipped),
            self.consistency_failures()
        )
    }

    pub fn write_csv<W: std::io::Write>(&self, w: W) -> Result<(), HarnessError> {
        let mut out = csv::Writer::from_writer(w);
        for r in &self.records {
            let o = r.oracle.as_ref().map(|o| &o.invariants);
            out.serialize(CsvRow {
                graph_id: &r.graph_id,
                family: &r.family,
                n: r.n,
                k: r.k.map(|k| k.to_string()).unwrap_or_default(),
                depth_pred: r.prediction.depth.to_string(),
                depth_oracle: o.map(|o| o.depth.to_string()).unwrap_or_default(),
                reg_pred: r.prediction.reg.to_string(),
                reg_oracle: o.map(|o| o.reg.to_string()).unwrap_or_default(),
                extremal_pred: extremal_pred(&r.prediction),
                extremal_oracle: o.map(|o| o.extremal.iter().map(|&p| fmt_pos(p)).collect::<Vec<_>>().join(";")).unwrap_or_default(),
                uniqueness_pred: r.prediction.uniqueness.to_string(),
                uniqueness_oracle: o.map(|o| if o.unique_extremal { "unique" } else { "non_unique" }.to_string()).unwrap_or_default(),
                verdict: r.verdict.to_string(),
                ms: r.ms,
            })?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn write_files(&self, csv_path: &Path, json_path: &Path) -> Result<(), HarnessError> {
        self.write_csv(std::fs::File::create(csv_path)?)?;
        std::fs::write(json_path, serde_json::to_string_pretty(self)?)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use belab_core::{Bound, ExtremalClaim};

    fn inv(depth: usize, reg: usize, extremal: Vec<(usize, usize)>, unique: bool) -> DerivedInvariants {
        DerivedInvariants { pd: 0, reg, depth, dim: None, extremal, distinguished: [(0, 0), (0, 0)], unique_extremal: unique }
    }

    fn pred(depth: Bound, reg: Bound, extremal: Vec<ExtremalClaim>, uniqueness: Uniqueness) -> Prediction {
        Prediction { depth, reg, extremal, uniqueness, provenance: vec!["test-rule".into()] }
    }

    #[test]
    fn verdict_rules() {
        let exact = pred(Bound::Exact(5), Bound::Exact(3), vec![ExtremalClaim { i: 5, j: 8, certain: true }], Uniqueness::Unique);
        assert_eq!(compare(&exact, &inv(5, 3, vec![(5, 8)], true)), (vec![], false));
        let (bad, _) = compare(&exact, &inv(6, 3, vec![(5, 8)], true));
        assert_eq!(bad.len(), 1);
        assert!(bad[0].contains("test-rule"));
        let (bad, _) = compare(&exact, &inv(5, 3, vec![(4, 7), (5, 8)], false));
        assert_eq!(bad.len(), 1);

        let open = pred(
            Bound::Exact(7),
            Bound::Interval([2, 6]),
            vec![ExtremalClaim { i: 7, j: 9, certain: false }, ExtremalClaim { i: 7, j: 10, certain: false }],
            Uniqueness::Undetermined,
        );
        assert_eq!(compare(&open, &inv(7, 4, vec![(7, 10), (5, 9)], false)), (vec![], true));
        let (bad, _) = compare(&open, &inv(7, 4, vec![(7, 11)], true));
        assert_eq!(bad.len(), 1);
    }
}
