use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

/// The claim a report certifies. Closed: every command maps to one tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaTag {
    PrismExpansion,
    PrismExpansionTilde,
    HornExpansion,
    ThickInnerHornExpansion,
    ThickHornExpansion,
    CylinderExpansion,
    ThickBoundaryExpansion,
    SpineExpansion,
    ThickSpineExpansion,
    CertificateReplay,
    ExpansionSearch,
    KGroupoid,
    KCategory,
    Fibration,
    Hypercover,
    WeakEquivalencePath,
    WeakEquivalenceDirect,
    WeakEquivalenceJoin,
    MaurerCartanNerve,
    InnerHornFilling,
    QuasiInverseLift,
    MatrixModel,
    SmoothnessHomotopy,
    ExpansionSuite,
    SetModelSuite,
    NerveSuite,
}

impl LemmaTag {
    pub fn name(self) -> String {
        serde_json::to_value(self).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
    }
}

/// Everything that determines a run. Randomized sampling depends on `seed` only.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub inputs: Vec<String>,
    pub k: usize,
    pub depth: usize,
    pub trunc: usize,
    pub sample: usize,
    pub seed: u64,
    pub output: Option<String>,
    pub params: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub name: String,
    pub verdict: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timings {
    pub total_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub lemma: LemmaTag,
    pub verdict: bool,
    pub cases: Vec<Case>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
    pub config: RunConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

/// Collects cases; the verdict is their conjunction.
pub struct ReportBuilder {
    lemma: LemmaTag,
    cases: Vec<Case>,
    data: Option<serde_json::Value>,
}

impl ReportBuilder {
    pub fn new(lemma: LemmaTag) -> Self {
        ReportBuilder { lemma, cases: Vec::new(), data: None }
    }

    pub fn case(&mut self, name: impl Into<String>, verdict: bool, detail: impl Into<String>) -> &mut Self {
        self.cases.push(Case { name: name.into(), verdict, detail: detail.into() });
        self
    }

    pub fn data(&mut self, data: serde_json::Value) -> &mut Self {
        self.data = Some(data);
        self
    }

    pub fn finish(self, config: RunConfig) -> Report {
        let verdict = self.cases.iter().all(|c| c.verdict);
        Report { lemma: self.lemma, verdict, cases: self.cases, data: self.data, config, timings: None }
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mark = |b: bool| if b { "pass" } else { "FAIL" };
        let mut s = String::new();
        let _ = writeln!(s, "lemma:   {}", self.lemma.name());
        let _ = writeln!(s, "verdict: {}", mark(self.verdict));
        let c = &self.config;
        let _ = writeln!(s, "command: {}", c.command);
        let _ = writeln!(s, "config:  k={} depth={} trunc={} sample={} seed={}", c.k, c.depth, c.trunc, c.sample, c.seed);
        for input in &c.inputs {
            let _ = writeln!(s, "input:   {input}");
        }
        for (key, v) in &c.params {
            let _ = writeln!(s, "param:   {key}={v}");
        }
        let passed = self.cases.iter().filter(|c| c.verdict).count();
        let _ = writeln!(s, "cases:   {passed}/{} pass", self.cases.len());
        for case in &self.cases {
            if case.detail.is_empty() {
                let _ = writeln!(s, "  [{}] {}", mark(case.verdict), case.name);
            } else {
                let _ = writeln!(s, "  [{}] {}: {}", mark(case.verdict), case.name, case.detail);
            }
        }
        if let Some(d) = &self.data {
            let _ = writeln!(s, "data:\n{}", serde_json::to_string_pretty(d).expect("serializable"));
        }
        if let Some(t) = &self.timings {
            let _ = writeln!(s, "time:    {} ms", t.total_ms);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> RunConfig {
        RunConfig {
            command: "test".into(),
            inputs: vec![],
            k: 1,
            depth: 3,
            trunc: 3,
            sample: 1,
            seed: 0,
            output: None,
            params: BTreeMap::new(),
        }
    }

    #[test]
    fn verdict_is_the_conjunction_of_cases() {
        let mut b = ReportBuilder::new(LemmaTag::KGroupoid);
        b.case("a", true, "");
        assert!(b.finish(config()).verdict);
        let mut b = ReportBuilder::new(LemmaTag::KGroupoid);
        b.case("a", true, "").case("b", false, "x");
        let r = b.finish(config());
        assert!(!r.verdict);
        assert!(r.to_text().contains("[FAIL] b: x"));
        assert!(ReportBuilder::new(LemmaTag::NerveSuite).finish(config()).verdict);
    }

    #[test]
    fn tags_serialize_in_kebab_case() {
        assert_eq!(LemmaTag::WeakEquivalencePath.name(), "weak-equivalence-path");
        assert_eq!(LemmaTag::KGroupoid.name(), "k-groupoid");
    }

    #[test]
    fn json_field_order_is_fixed() {
        let r = ReportBuilder::new(LemmaTag::Fibration).finish(config());
        let j = r.to_json();
        let pos = |k: &str| j.find(&format!("\"{k}\"")).unwrap();
        assert!(pos("lemma") < pos("verdict") && pos("verdict") < pos("cases") && pos("cases") < pos("config"));
        assert!(!j.contains("timings"));
    }
}
