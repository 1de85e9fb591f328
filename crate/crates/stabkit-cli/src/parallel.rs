//! Threaded driver for the exhaustive search: contiguous chunks of the
//! X-side enumeration stream run on worker threads and merge back to the
//! exact serial report.

use std::time::Instant;

use stabkit::search::{merge_reports, search_css_chunk, SearchReport, SearchSpec};
use stabkit::Error;

/// Run the search with the given worker count (1 = serial), timing the run.
pub fn run_search(spec: &SearchSpec, jobs: usize) -> Result<SearchReport, Error> {
    let jobs = jobs.max(1);
    let start = Instant::now();
    let mut report = if jobs == 1 {
        search_css_chunk(spec, 0, 1)?
    } else {
        let mut parts: Vec<Option<Result<SearchReport, Error>>> =
            (0..jobs).map(|_| None).collect();
        std::thread::scope(|scope| {
            let mut handles = Vec::with_capacity(jobs);
            for chunk in 0..jobs {
                let spec = *spec;
                handles.push(scope.spawn(move || search_css_chunk(&spec, chunk, jobs)));
            }
            for (slot, handle) in parts.iter_mut().zip(handles) {
                *slot = Some(handle.join().expect("search worker panicked"));
            }
        });
        let mut done = Vec::with_capacity(jobs);
        for part in parts {
            done.push(part.expect("worker slot filled")?);
        }
        merge_reports(&done)
    };
    report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// Default worker count: the QEC_JOBS environment variable, else 1.
pub fn default_jobs() -> usize {
    std::env::var("QEC_JOBS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&v| v >= 1)
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_report_equals_serial_report() {
        let spec = SearchSpec {
            alice_qubits: 5,
            logical_qubits: 1,
            required_distance: 3,
            ebits: 0,
        };
        let serial = run_search(&spec, 1).unwrap();
        let parallel = run_search(&spec, 4).unwrap();
        assert!(serial.same_outcome(&parallel));
    }
}
