//! File formats. Rationals travel as strings in lowest terms (`"3"`, `"-3/2"`); tableau
//! rows are listed bottom-up, so `rows[0]` has one entry and `rows[n-1]` has `n`.

use std::str::FromStr;

use drinfeld_core::quiver::{BoundaryReason, ModuleRep, QuiverWindow};
use drinfeld_core::{Rational, Tableau};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let t = s.trim();
    let r = Rational::from_str(t).map_err(|_| CliError::Input(format!("not a rational number: {s:?}")))?;
    Ok(r)
}

pub fn show(r: &Rational) -> String {
    r.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableauJson {
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

impl TableauJson {
    pub fn from_tableau(t: &Tableau) -> Self {
        Self { n: t.rank(), rows: t.rows().iter().map(|r| r.iter().map(show).collect()).collect() }
    }

    pub fn to_tableau(&self) -> Result<Tableau, CliError> {
        if self.rows.len() != self.n {
            return Err(CliError::Input(format!("\"n\" is {} but {} rows were given", self.n, self.rows.len())));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Tableau::new(rows).map_err(|e| CliError::Input(format!("{e} (rows are listed bottom-up, row 1 first)")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub kind: String,
    pub pairs: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaEntry {
    pub m: usize,
    pub k: u32,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub kind: String,
    pub m: usize,
    /// Coefficients of `u^0, u^1, …` as normally ordered elements.
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub family: String,
    pub instances: usize,
    pub failures: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub n: usize,
    pub families: Vec<FamilyJson>,
    pub all_pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub index: usize,
    pub offset: Vec<i64>,
    /// The representative whose positions the edges refer to.
    pub tableau: TableauJson,
    /// Rows sorted increasingly; equal for equal maximal ideals.
    pub ideal: TableauJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub kind: String,
    pub m: usize,
    pub i: usize,
    pub spectral_point: String,
    pub source: usize,
    pub target: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalar: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryJson {
    pub kind: String,
    pub m: usize,
    pub i: usize,
    pub spectral_point: String,
    pub source: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopJson {
    pub vertex: usize,
    pub level: usize,
    pub point: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowJson {
    pub root: TableauJson,
    pub radius: u32,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
    pub boundary: Vec<BoundaryJson>,
    pub loops: Vec<LoopJson>,
    pub relation_count: usize,
}

impl WindowJson {
    pub fn new(w: &QuiverWindow, module: Option<&ModuleRep>) -> Self {
        let vertices = w
            .vertices()
            .iter()
            .enumerate()
            .map(|(index, v)| VertexJson {
                index,
                offset: v.offset.clone(),
                tableau: TableauJson::from_tableau(&v.representative),
                ideal: TableauJson::from_tableau(&v.ideal.to_tableau()),
            })
            .collect();
        let edges = w
            .edges()
            .iter()
            .enumerate()
            .map(|(id, e)| EdgeJson {
                kind: e.kind.letter().to_string(),
                m: e.row,
                i: e.pos,
                spectral_point: show(&e.spectral_point),
                source: e.source,
                target: e.target,
                scalar: module.map(|rep| show(rep.scalar(id))),
            })
            .collect();
        let boundary = w
            .boundary()
            .iter()
            .map(|b| BoundaryJson {
                kind: b.kind.letter().to_string(),
                m: b.row,
                i: b.pos,
                spectral_point: show(&b.spectral_point),
                source: b.source,
                reason: match b.reason {
                    BoundaryReason::OutsideRadius => "outside-radius",
                    BoundaryReason::Critical => "critical",
                    BoundaryReason::OtherComponent => "other-component",
                }
                .to_string(),
            })
            .collect();
        let loops = (0..w.vertices().len())
            .flat_map(|v| {
                w.loops(v).iter().map(move |l| LoopJson {
                    vertex: v,
                    level: l.level,
                    point: show(&l.point),
                    value: show(&l.value),
                })
            })
            .collect();
        Self {
            root: TableauJson::from_tableau(w.root()),
            radius: w.radius(),
            vertices,
            edges,
            boundary,
            loops,
            relation_count: w.relation_instances().len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveJson {
    pub tree: String,
    pub verified: bool,
    pub window: WindowJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleJson {
    pub word: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalar: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeJson {
    pub seed: u64,
    pub vertex: usize,
    pub max_len: usize,
    pub samples: usize,
    pub failures: usize,
    pub pass: bool,
    pub cycles: Vec<CycleJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitJson {
    pub equivalent: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use drinfeld_core::rational::rat;

    #[test]
    fn rationals_round_trip() {
        for r in [rat(3, 1), rat(-3, 2), rat(0, 1), rat(10, 4)] {
            assert_eq!(parse_rational(&show(&r)).unwrap(), r);
        }
        assert_eq!(show(&rat(10, 4)), "5/2");
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn tableau_round_trip() {
        let text = r#"{"n":2,"rows":[["1/3"],["3","-1"]]}"#;
        let parsed: TableauJson = serde_json::from_str(text).unwrap();
        let t = parsed.to_tableau().unwrap();
        assert_eq!(t.entry(2, 1), &rat(3, 1));
        assert_eq!(serde_json::to_string(&TableauJson::from_tableau(&t)).unwrap(), text);
    }

    #[test]
    fn bad_tableaux() {
        let wrong_n: TableauJson = serde_json::from_str(r#"{"n":3,"rows":[["1"],["3","-1"]]}"#).unwrap();
        assert!(wrong_n.to_tableau().is_err());
        // top row first is rejected
        let top_down: TableauJson = serde_json::from_str(r#"{"n":2,"rows":[["3","-1"],["1"]]}"#).unwrap();
        assert!(top_down.to_tableau().is_err());
        assert!(serde_json::from_str::<TableauJson>(r#"{"n":1,"rows":[[1]]}"#).is_err());
    }
}
