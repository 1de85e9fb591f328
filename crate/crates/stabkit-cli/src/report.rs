//! JSON report documents. Every report carries `schema: 1`; maps are sorted
//! and lists follow the deterministic library ordering, so reports are
//! stable across runs.

use serde::Serialize;
use stabkit::search::SearchReport;
use stabkit::stabilizer::{CorrectionReport, QuantumCode, Verdict};
use stabkit::symplectic::CheckMatrix;
use stabkit::synthesis::ReductionStep;

pub const SCHEMA: u32 = 1;

#[derive(Serialize)]
pub struct CodeDoc {
    pub n: usize,
    pub k: usize,
    pub ebits: usize,
    pub gauge_qubits: usize,
    pub stabilizer: Vec<String>,
    pub gauge: Vec<String>,
    pub logical_x: Vec<String>,
    pub logical_z: Vec<String>,
    /// 1-based column labels held by the receiver.
    pub bob_columns: Vec<usize>,
}

impl CodeDoc {
    pub fn new(code: &QuantumCode) -> Self {
        CodeDoc {
            n: code.n(),
            k: code.k(),
            ebits: code.ebits(),
            gauge_qubits: code.gauge_qubits(),
            stabilizer: rows(code.stabilizer()),
            gauge: rows(code.gauge()),
            logical_x: code.logical_x().iter().map(|p| p.to_string()).collect(),
            logical_z: code.logical_z().iter().map(|p| p.to_string()).collect(),
            bob_columns: code.bob_columns().iter().map(|c| c + 1).collect(),
        }
    }
}

pub fn rows(m: &CheckMatrix) -> Vec<String> {
    m.iter().map(|p| p.to_string()).collect()
}

#[derive(Serialize)]
pub struct VerdictDoc {
    pub error: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<usize>,
}

pub fn verdict_docs(report: &CorrectionReport) -> Vec<VerdictDoc> {
    report
        .verdicts
        .iter()
        .map(|(e, v)| VerdictDoc {
            error: e.to_string(),
            verdict: match v {
                Verdict::AnticommutesWith(_) => "anticommutes".into(),
                Verdict::InStabilizer => "in_stabilizer".into(),
                Verdict::InGauge => "in_gauge".into(),
                Verdict::Fail => "fail".into(),
            },
            generator: match v {
                Verdict::AnticommutesWith(i) => Some(i + 1),
                _ => None,
            },
        })
        .collect()
}

#[derive(Serialize)]
pub struct CensusDoc {
    pub dx: usize,
    pub dz: usize,
    pub enumerated: u64,
    pub commuting: u64,
    pub passed_distance: u64,
}

#[derive(Serialize)]
pub struct SurvivorDoc {
    pub dx: usize,
    pub dz: usize,
    pub generators: Vec<String>,
    pub bob_columns: Vec<usize>,
}

#[derive(Serialize)]
pub struct SearchDoc {
    pub schema: u32,
    pub command: String,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub ebits: usize,
    pub jobs: usize,
    pub census: Vec<CensusDoc>,
    pub survivors: Vec<SurvivorDoc>,
    pub total_survivors: usize,
    pub wall_time_ms: Option<u64>,
}

pub fn search_doc(
    n: usize,
    k: usize,
    d: usize,
    ebits: usize,
    jobs: usize,
    report: &SearchReport,
) -> SearchDoc {
    SearchDoc {
        schema: SCHEMA,
        command: "search css".into(),
        n,
        k,
        d,
        ebits,
        jobs,
        census: report
            .census
            .iter()
            .map(|(&(dx, dz), c)| CensusDoc {
                dx,
                dz,
                enumerated: c.enumerated,
                commuting: c.commuting,
                passed_distance: c.passed_distance,
            })
            .collect(),
        survivors: report
            .survivors
            .iter()
            .map(|s| SurvivorDoc {
                dx: s.dx,
                dz: s.dz,
                generators: rows(&s.generators),
                bob_columns: s.bob_columns.iter().map(|c| c + 1).collect(),
            })
            .collect(),
        total_survivors: report.total_survivors(),
        wall_time_ms: report.wall_time_ms,
    }
}

/// 64-bit FNV-1a, the hash behind the script audit chain.
pub fn fnv64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xCBF29CE484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001B3);
    }
    h
}

/// Hash chain over the intermediate matrices of a reduction script: entry 0
/// hashes the starting rows, entry i+1 folds the matrix after step i+1 into
/// the previous hash, so replay divergence shows up at the first bad step.
pub fn script_hash_chain(
    start: &CheckMatrix,
    steps: &[ReductionStep],
) -> Result<Vec<String>, stabkit::Error> {
    let mut chain = Vec::with_capacity(steps.len() + 1);
    let render = |m: &CheckMatrix| -> String {
        m.iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("/")
    };
    let mut h = fnv64(render(start).as_bytes());
    chain.push(format!("{h:016x}"));
    let mut current = start.clone();
    for step in steps {
        current = stabkit::synthesis::apply_steps(&current, std::slice::from_ref(step))?;
        let mut seed = format!("{h:016x}:").into_bytes();
        seed.extend_from_slice(render(&current).as_bytes());
        h = fnv64(&seed);
        chain.push(format!("{h:016x}"));
    }
    Ok(chain)
}
