//! JSON report shapes for CLI and FFI output. Every number that can exceed
//! 64 bits travels as a string.

use serde::{Deserialize, Serialize};

use crate::charpoly::{CharPolyResult, MultiplicityReport, PendantGrowthReport, SampleRecord};
use crate::matching::MatchingSummary;
use crate::poly::{PolyJson, RootInterval};
use crate::spectrum::{MonotonicityReport, SpectrumReport};
use crate::tensor::{EigenPair, PerronIdentityReport};

#[derive(Serialize, Deserialize, Debug)]
pub struct IntervalJson {
    pub lo: String,
    pub hi: String,
    pub approx: f64,
}

impl From<&RootInterval> for IntervalJson {
    fn from(iv: &RootInterval) -> Self {
        IntervalJson {
            lo: iv.lo.to_string(),
            hi: iv.hi.to_string(),
            approx: iv.to_f64(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug)]
pub struct MatchingJson {
    pub counts: Vec<String>,
    pub vertex_count: usize,
    pub poly: PolyJson,
    pub z_reduction: ZReductionJson,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct ZReductionJson {
    pub r: usize,
    pub q: PolyJson,
}

impl From<&MatchingSummary> for MatchingJson {
    fn from(s: &MatchingSummary) -> Self {
        let (r, q) = crate::matching::z_reduction(s);
        MatchingJson {
            counts: s.counts.iter().map(|c| c.to_string()).collect(),
            vertex_count: s.vertex_count,
            poly: s.polynomial.to_json(),
            z_reduction: ZReductionJson { r, q: q.to_json() },
        }
    }
}

#[derive(Serialize, Deserialize, Debug)]
pub struct SubtreeRootsJson {
    pub key: String,
    pub vertices: Vec<usize>,
    pub r: usize,
    pub q: PolyJson,
    pub positive_z_roots: Vec<IntervalJson>,
    pub negative_real_z_roots: usize,
    pub nonreal_z_roots: usize,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct SpectrumJson {
    pub subtrees: Vec<SubtreeRootsJson>,
    pub real_eigenvalues: Vec<IntervalJson>,
    pub has_zero: bool,
    pub spectral_radius: IntervalJson,
}

impl From<&SpectrumReport> for SpectrumJson {
    fn from(r: &SpectrumReport) -> Self {
        SpectrumJson {
            subtrees: r
                .subtree_roots
                .iter()
                .map(|s| SubtreeRootsJson {
                    key: String::from_utf8_lossy(&s.key).into_owned(),
                    vertices: s.vertices.clone(),
                    r: s.r,
                    q: s.q.to_json(),
                    positive_z_roots: s.positive_z_roots.iter().map(IntervalJson::from).collect(),
                    negative_real_z_roots: s.negative_real_z_roots,
                    nonreal_z_roots: s.nonreal_z_roots,
                })
                .collect(),
            real_eigenvalues: r.real_eigenvalues.iter().map(IntervalJson::from).collect(),
            has_zero: r.has_zero,
            spectral_radius: IntervalJson::from(&r.spectral_radius),
        }
    }
}

#[derive(Serialize, Deserialize, Debug)]
pub struct CharPolyJson {
    pub degree: u64,
    pub leading_coefficient: String,
    pub poly: PolyJson,
    pub sample_log: Vec<SampleRecord>,
}

impl From<&CharPolyResult> for CharPolyJson {
    fn from(c: &CharPolyResult) -> Self {
        CharPolyJson {
            degree: c.degree,
            leading_coefficient: c.leading_coefficient.to_string(),
            poly: c.polynomial.to_json(),
            sample_log: c.sample_log.clone(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug)]
pub struct MultiplicityJson {
    pub predicted: String,
    pub measured: String,
    #[serde(rename = "match")]
    pub matched: bool,
    pub rho: IntervalJson,
    pub squarefree: Vec<SquarefreeFactorJson>,
    pub charpoly: CharPolyJson,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct SquarefreeFactorJson {
    pub factor: PolyJson,
    pub multiplicity: usize,
}

impl From<&MultiplicityReport> for MultiplicityJson {
    fn from(r: &MultiplicityReport) -> Self {
        MultiplicityJson {
            predicted: r.predicted_am.to_string(),
            measured: r.measured_am.to_string(),
            matched: r.matched,
            rho: IntervalJson::from(&r.rho),
            squarefree: r
                .squarefree
                .iter()
                .map(|(g, i)| SquarefreeFactorJson {
                    factor: g.to_json(),
                    multiplicity: *i,
                })
                .collect(),
            charpoly: CharPolyJson::from(&r.charpoly),
        }
    }
}

#[derive(Serialize, Deserialize, Debug)]
pub struct PendantGrowthJson {
    pub base_measured: String,
    pub extended_measured: String,
    pub ratio_expected: String,
    #[serde(rename = "match")]
    pub matched: bool,
}

impl From<&PendantGrowthReport> for PendantGrowthJson {
    fn from(r: &PendantGrowthReport) -> Self {
        PendantGrowthJson {
            base_measured: r.base.measured_am.to_string(),
            extended_measured: r.extended.measured_am.to_string(),
            ratio_expected: r.ratio_expected.to_string(),
            matched: r.matched,
        }
    }
}

#[derive(Serialize, Deserialize, Debug)]
pub struct EigenPairJson {
    pub lambda: f64,
    pub x: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

impl From<&EigenPair> for EigenPairJson {
    fn from(p: &EigenPair) -> Self {
        EigenPairJson {
            lambda: p.lambda,
            x: p.x.clone(),
            residual: p.residual,
            iterations: p.iterations,
        }
    }
}

#[derive(Serialize, Deserialize, Debug)]
pub struct SpectralRadiusJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nqz: Option<EigenPairJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<IntervalJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub difference: Option<f64>,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct EdgeIdentityJson {
    pub edge: Vec<usize>,
    pub perron_product: f64,
    pub quotient: f64,
    pub defect: f64,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct PerronIdentityJson {
    pub vertex: usize,
    pub rho: f64,
    pub edges: Vec<EdgeIdentityJson>,
    pub closure_defect: f64,
    pub passed: bool,
}

impl From<&PerronIdentityReport> for PerronIdentityJson {
    fn from(r: &PerronIdentityReport) -> Self {
        PerronIdentityJson {
            vertex: r.vertex,
            rho: r.rho,
            edges: r
                .edges
                .iter()
                .map(|e| EdgeIdentityJson {
                    edge: e.edge.clone(),
                    perron_product: e.perron_product,
                    quotient: e.quotient,
                    defect: e.defect,
                })
                .collect(),
            closure_defect: r.closure_defect,
            passed: r.passed,
        }
    }
}

#[derive(Serialize, Deserialize, Debug)]
pub struct MonotonicityJson {
    pub rho: IntervalJson,
    pub subtrees: Vec<MonotonicityEntryJson>,
    pub all_separated: bool,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct MonotonicityEntryJson {
    pub vertices: Vec<usize>,
    pub rho_subtree: IntervalJson,
    pub separated: bool,
}

impl From<&MonotonicityReport> for MonotonicityJson {
    fn from(r: &MonotonicityReport) -> Self {
        MonotonicityJson {
            rho: IntervalJson::from(&r.rho),
            subtrees: r
                .entries
                .iter()
                .map(|e| MonotonicityEntryJson {
                    vertices: e.vertices.clone(),
                    rho_subtree: IntervalJson::from(&e.rho_subtree),
                    separated: e.separated,
                })
                .collect(),
            all_separated: r.all_separated,
        }
    }
}
