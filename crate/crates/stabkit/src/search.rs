//! Exhaustive enumeration of CSS stabilizers in canonical subspace form.
//!
//! A CSS code is a pair of GF(2) subspaces (X-type and Z-type row spans).
//! Subspaces are enumerated exactly once via their unique reduced
//! row-echelon bases, which quotients away row operations; column
//! permutations are deliberately not quotiented. Commuting pairs are visited
//! by enumerating the Z side inside the orthocomplement of the X side; the
//! census still reports the full cartesian count per dimension split.
//!
//! For one-ebit searches the receiver column is the last column and carries
//! exactly one X-type and one Z-type basis row, the canonical form every
//! single-ebit code reduces to.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;
use crate::stabilizer::{for_each_weighted_pauli, QuantumCode};
use crate::symplectic::{BitMatrix, CheckMatrix, PauliString, Rref};

/// What to search for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchSpec {
    /// Sender qubits (the receiver column is extra).
    pub alice_qubits: usize,
    pub logical_qubits: usize,
    pub required_distance: usize,
    /// 0 for standard codes, 1 for one-ebit codes.
    pub ebits: usize,
}

/// Counters for one (dx, dz) dimension split.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CaseCensus {
    /// All candidate pairs of the split (computed in closed form).
    pub enumerated: u64,
    /// Candidates whose generators mutually commute.
    pub commuting: u64,
    /// Commuting candidates that pass the distance filter.
    pub passed_distance: u64,
}

/// A code that survived every filter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Survivor {
    pub dx: usize,
    pub dz: usize,
    pub generators: CheckMatrix,
    pub bob_columns: Vec<usize>,
}

/// Census and survivors of a search (or of one chunk of it).
#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport {
    pub census: BTreeMap<(usize, usize), CaseCensus>,
    pub survivors: Vec<Survivor>,
    /// Filled in by the driver that timed the run, if any.
    pub wall_time_ms: Option<u64>,
}

impl SearchReport {
    pub fn total_survivors(&self) -> usize {
        self.survivors.len()
    }

    /// Reports are equal as search outcomes (timing ignored).
    pub fn same_outcome(&self, other: &SearchReport) -> bool {
        self.census == other.census && self.survivors == other.survivors
    }
}

/// Number of d-dimensional subspaces of GF(2)^m (Gaussian binomial).
pub fn gaussian_binomial(m: usize, d: usize) -> u128 {
    if d > m {
        return 0;
    }
    let mut result: u128 = 1;
    for i in 1..=d {
        result *= (1u128 << (m - d + i)) - 1;
        result /= (1u128 << i) - 1;
    }
    result
}

/// Streams every `dim`-dimensional subspace of GF(2)^m exactly once, as its
/// unique RREF basis (rows as bit words).
pub struct SubspaceIter {
    m: usize,
    dim: usize,
    pivots: Vec<usize>,
    free_positions: Vec<(usize, usize)>,
    counter: u64,
    exhausted: bool,
}

/// Enumerate the `dim`-dimensional subspaces of GF(2)^m.
pub fn enumerate_gf2_subspaces(m: usize, dim: usize) -> Result<SubspaceIter, Error> {
    if dim > m {
        return Err(Error::usage(alloc::format!(
            "cannot take {dim}-dimensional subspaces of a {m}-dimensional space"
        )));
    }
    if m > 24 {
        return Err(Error::Capacity {
            what: "subspace enumeration dimension",
            requested: m,
            limit: 24,
        });
    }
    let pivots: Vec<usize> = (0..dim).collect();
    let free_positions = free_positions_for(&pivots, m);
    Ok(SubspaceIter {
        m,
        dim,
        pivots,
        free_positions,
        counter: 0,
        exhausted: false,
    })
}

fn free_positions_for(pivots: &[usize], m: usize) -> Vec<(usize, usize)> {
    let mut free = Vec::new();
    for (row, &p) in pivots.iter().enumerate() {
        for col in p + 1..m {
            if !pivots.contains(&col) {
                free.push((row, col));
            }
        }
    }
    free
}

impl Iterator for SubspaceIter {
    type Item = BitMatrix;

    fn next(&mut self) -> Option<BitMatrix> {
        if self.exhausted {
            return None;
        }
        if self.dim == 0 {
            self.exhausted = true;
            return Some(BitMatrix::zeros(0, self.m).expect("m bounded"));
        }
        let mut rows: Vec<u64> = self.pivots.iter().map(|&p| 1u64 << p).collect();
        for (bit, &(row, col)) in self.free_positions.iter().enumerate() {
            if (self.counter >> bit) & 1 == 1 {
                rows[row] |= 1u64 << col;
            }
        }
        let out = BitMatrix::from_rows(rows, self.m).expect("m bounded");

        self.counter += 1;
        if self.counter == 1u64 << self.free_positions.len() {
            self.counter = 0;
            // Next pivot combination in lexicographic order.
            let mut advanced = false;
            for i in (0..self.dim).rev() {
                if self.pivots[i] < self.m - self.dim + i {
                    self.pivots[i] += 1;
                    for j in i + 1..self.dim {
                        self.pivots[j] = self.pivots[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if advanced {
                self.free_positions = free_positions_for(&self.pivots, self.m);
            } else {
                self.exhausted = true;
            }
        }
        Some(out)
    }
}

/// Non-degenerate packing necessary condition with `c` extra receiver
/// columns: (3n + 1) * 2 <= 2^(n + c).
pub fn dimension_feasibility(n: usize, c: usize) -> bool {
    (3 * n as u128 + 1) * 2 <= 1u128 << (n + c)
}

const DESK_SCALE_LIMIT: usize = 8;

fn spec_splits(spec: &SearchSpec) -> Result<Vec<(usize, usize)>, Error> {
    let n = spec.alice_qubits;
    let c = spec.ebits;
    let k = spec.logical_qubits;
    if n == 0 || k == 0 || spec.required_distance == 0 {
        return Err(Error::usage("search needs n, k, d >= 1"));
    }
    if c > 1 {
        return Err(Error::usage("searches support 0 or 1 ebits"));
    }
    if n + c > DESK_SCALE_LIMIT {
        return Err(Error::Capacity {
            what: "search qubits",
            requested: n + c,
            limit: DESK_SCALE_LIMIT,
        });
    }
    let total = n + c;
    if total < k {
        return Err(Error::usage("more logical qubits than physical qubits"));
    }
    let m = total - k;
    if m > 2 * total {
        return Err(Error::usage("generator count exceeds the register"));
    }
    let lo = if c == 1 { 1 } else { 0 };
    let hi = if c == 1 { m.saturating_sub(1) } else { m };
    let mut splits = Vec::new();
    for dx in lo..=hi {
        let dz = m - dx;
        let (x_alice, z_alice) = (dx - lo, dz - lo);
        if x_alice <= n && z_alice <= n {
            splits.push((dx, dz));
        }
    }
    Ok(splits)
}

// Alice-column errors of weight 1..d-1, precomputed once per search.
fn distance_filter_errors(n_alice: usize, d: usize) -> Result<Vec<PauliString>, Error> {
    let cols: Vec<usize> = (0..n_alice).collect();
    let mut out = Vec::new();
    for w in 1..d.min(n_alice + 1) {
        for_each_weighted_pauli(n_alice, &cols, w, &mut |p| {
            out.push(p.clone());
            Ok(false)
        })?;
    }
    Ok(out)
}

struct Candidate {
    // Sender-side spans of all generators (receiver rows' sender parts
    // included), used for the anticommutation test; rref form.
    x_span: Rref,
    z_span: Rref,
    // Spans of the sender-only generators, used for the membership test: a
    // sender-supported error can only equal a group element that avoids the
    // receiver rows (any use of those leaves a letter on the receiver).
    x_member: Rref,
    z_member: Rref,
    // Sender parts of the receiver rows for c = 1.
    bob_x: Option<u64>,
    bob_z: Option<u64>,
}

impl Candidate {
    /// Distance filter with degeneracy allowed: every error must anticommute
    /// with some generator or lie in the stabilizer group.
    fn corrects(&self, errors: &[PauliString]) -> bool {
        'errors: for e in errors {
            let (ex, ez) = (e.x_bits(), e.z_bits());
            for i in 0..self.z_span.rank {
                if (ex & self.z_span.matrix.row(i)).count_ones() % 2 == 1 {
                    continue 'errors;
                }
            }
            for i in 0..self.x_span.rank {
                if (ez & self.x_span.matrix.row(i)).count_ones() % 2 == 1 {
                    continue 'errors;
                }
            }
            // Commutes with everything: harmless only if in the group.
            if self.x_member.contains(ex) && self.z_member.contains(ez) {
                continue 'errors;
            }
            return false;
        }
        true
    }
}

fn survivor_rows(
    n_total: usize,
    n_alice: usize,
    cand: &Candidate,
) -> Result<CheckMatrix, Error> {
    let mut rows = Vec::new();
    for i in 0..cand.z_member.rank {
        rows.push(PauliString::from_bits(n_total, 0, cand.z_member.matrix.row(i))?);
    }
    if let Some(bz) = cand.bob_z {
        rows.push(PauliString::from_bits(n_total, 0, bz | (1 << n_alice))?);
    }
    for i in 0..cand.x_member.rank {
        rows.push(PauliString::from_bits(n_total, cand.x_member.matrix.row(i), 0)?);
    }
    if let Some(bx) = cand.bob_x {
        rows.push(PauliString::from_bits(n_total, bx | (1 << n_alice), 0)?);
    }
    CheckMatrix::from_rows(rows)
}

// Map a subspace of the span of `basis` (given in local coordinates) back to
// ambient coordinates and canonicalize.
fn lift_subspace(local: &BitMatrix, basis: &[u64], m: usize) -> Rref {
    let rows: Vec<u64> = (0..local.rows())
        .map(|r| {
            let mut v = 0u64;
            let mut bits = local.row(r);
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                v ^= basis[j];
                bits &= bits - 1;
            }
            v
        })
        .collect();
    BitMatrix::from_rows(rows, m).expect("m bounded").rref()
}

/// Run one contiguous chunk of the search (chunks are cut along the X-side
/// enumeration of every split). `search_css` is the single-chunk case;
/// chunked reports merge back to the serial result with [`merge_reports`].
pub fn search_css_chunk(
    spec: &SearchSpec,
    chunk: usize,
    chunks: usize,
) -> Result<SearchReport, Error> {
    if chunks == 0 || chunk >= chunks {
        return Err(Error::usage("chunk index out of range"));
    }
    let splits = spec_splits(spec)?;
    let n = spec.alice_qubits;
    let c = spec.ebits;
    let n_total = n + c;
    let errors = distance_filter_errors(n, spec.required_distance)?;

    let mut census: BTreeMap<(usize, usize), CaseCensus> = BTreeMap::new();
    let mut survivors: Vec<Survivor> = Vec::new();

    for &(dx, dz) in &splits {
        let mut counters = CaseCensus::default();
        if c == 0 {
            let x_total = gaussian_binomial(n, dx) as u64;
            let z_total = gaussian_binomial(n, dz) as u64;
            let (lo, hi) = chunk_range(x_total, chunk, chunks);
            counters.enumerated = (hi - lo) * z_total;
            for (xi, x_basis) in enumerate_gf2_subspaces(n, dx)?.enumerate() {
                let xi = xi as u64;
                if xi < lo || xi >= hi {
                    continue;
                }
                let x_span = x_basis.rref();
                let ortho = x_basis.kernel_basis();
                let w = ortho.len();
                if dz > w {
                    continue;
                }
                for z_local in enumerate_gf2_subspaces(w, dz)? {
                    let z_span = lift_subspace(&z_local, &ortho, n);
                    counters.commuting += 1;
                    let cand = Candidate {
                        x_span: x_span.clone(),
                        x_member: x_span.clone(),
                        z_member: z_span.clone(),
                        z_span,
                        bob_x: None,
                        bob_z: None,
                    };
                    if cand.corrects(&errors) {
                        counters.passed_distance += 1;
                        survivors.push(Survivor {
                            dx,
                            dz,
                            generators: survivor_rows(n_total, n, &cand)?,
                            bob_columns: Vec::new(),
                        });
                    }
                }
            }
        } else {
            // One ebit: X side is (alice subspace of dim dx-1, coset
            // representative a* carrying the receiver X); same for Z.
            let x_outer_total =
                gaussian_binomial(n, dx - 1) as u64 * (1u64 << (n - (dx - 1)));
            let z_inner_total =
                gaussian_binomial(n, dz - 1) as u64 * (1u64 << (n - (dz - 1)));
            let (lo, hi) = chunk_range(x_outer_total, chunk, chunks);
            counters.enumerated = (hi - lo) * z_inner_total;
            let mut outer_index: u64 = 0;
            for x0_basis in enumerate_gf2_subspaces(n, dx - 1)? {
                let x0_span = x0_basis.rref();
                let reps = coset_representatives(&x0_span, n);
                for &a_star in &reps {
                    let idx = outer_index;
                    outer_index += 1;
                    if idx < lo || idx >= hi {
                        continue;
                    }
                    if a_star == 0 {
                        // The receiver X row would be bare; no Z partner can
                        // anticommute with it on the sender side.
                        continue;
                    }
                    // Orthocomplement of span(X0, a*).
                    let mut rows: Vec<u64> =
                        (0..x0_span.rank).map(|i| x0_span.matrix.row(i)).collect();
                    rows.push(a_star);
                    let constraint = BitMatrix::from_rows(rows, n)?;
                    let ortho = constraint.kernel_basis();
                    let w = ortho.len();
                    if dz - 1 > w {
                        continue;
                    }
                    let mut x_full_rows: Vec<u64> =
                        (0..x0_span.rank).map(|i| x0_span.matrix.row(i)).collect();
                    x_full_rows.push(a_star);
                    let x_span = BitMatrix::from_rows(x_full_rows, n)?.rref();
                    for z_local in enumerate_gf2_subspaces(w, dz - 1)? {
                        let z0_span = lift_subspace(&z_local, &ortho, n);
                        for b_star in coset_representatives(&z0_span, n) {
                            // The receiver Z row must commute with the
                            // sender X rows and anticommute with a* there
                            // (the ebit absorbs that one anticommutation).
                            if (b_star & a_star).count_ones() % 2 == 0 {
                                continue;
                            }
                            if (0..x0_span.rank).any(|i| {
                                (b_star & x0_span.matrix.row(i)).count_ones() % 2 == 1
                            }) {
                                continue;
                            }
                            counters.commuting += 1;
                            let mut z_full_rows: Vec<u64> =
                                (0..z0_span.rank).map(|i| z0_span.matrix.row(i)).collect();
                            z_full_rows.push(b_star);
                            let cand = Candidate {
                                x_span: x_span.clone(),
                                z_span: BitMatrix::from_rows(z_full_rows, n)?.rref(),
                                x_member: x0_span.clone(),
                                z_member: z0_span.clone(),
                                bob_x: Some(a_star),
                                bob_z: Some(b_star),
                            };
                            if cand.corrects(&errors) {
                                counters.passed_distance += 1;
                                survivors.push(Survivor {
                                    dx,
                                    dz,
                                    generators: survivor_rows(n_total, n, &cand)?,
                                    bob_columns: alloc::vec![n],
                                });
                            }
                        }
                    }
                }
            }
        }
        census.insert((dx, dz), counters);
    }

    Ok(SearchReport {
        census,
        survivors,
        wall_time_ms: None,
    })
}

fn chunk_range(total: u64, chunk: usize, chunks: usize) -> (u64, u64) {
    let chunk = chunk as u64;
    let chunks = chunks as u64;
    (total * chunk / chunks, total * (chunk + 1) / chunks)
}

// Canonical coset representatives modulo a span: every vector whose pivot
// coordinates are zero, in increasing numeric order.
fn coset_representatives(span: &Rref, m: usize) -> Vec<u64> {
    let free: Vec<usize> = (0..m).filter(|c| !span.pivots.contains(c)).collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for sel in 0u64..(1 << free.len()) {
        let mut v = 0u64;
        for (bit, &col) in free.iter().enumerate() {
            if (sel >> bit) & 1 == 1 {
                v |= 1 << col;
            }
        }
        out.push(v);
    }
    out
}

/// Serial exhaustive search.
pub fn search_css(spec: &SearchSpec) -> Result<SearchReport, Error> {
    search_css_chunk(spec, 0, 1)
}

/// Merge chunk reports into the serial report: census counters add up and
/// survivors interleave split-major, chunk order within each split.
pub fn merge_reports(parts: &[SearchReport]) -> SearchReport {
    let mut census: BTreeMap<(usize, usize), CaseCensus> = BTreeMap::new();
    for part in parts {
        for (&key, &counters) in &part.census {
            let entry = census.entry(key).or_default();
            entry.enumerated += counters.enumerated;
            entry.commuting += counters.commuting;
            entry.passed_distance += counters.passed_distance;
        }
    }
    let mut survivors = Vec::new();
    let keys: Vec<(usize, usize)> = census.keys().copied().collect();
    for key in keys {
        for part in parts {
            survivors.extend(
                part.survivors
                    .iter()
                    .filter(|s| (s.dx, s.dz) == key)
                    .cloned(),
            );
        }
    }
    SearchReport {
        census,
        survivors,
        wall_time_ms: None,
    }
}

impl Survivor {
    /// Re-check the survivor as a full quantum code (logical derivation,
    /// validation, correction report), independent of the search filters.
    pub fn to_code(&self) -> Result<QuantumCode, Error> {
        QuantumCode::from_stabilizer(self.generators.clone(), &self.bob_columns)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        assert_eq!(gaussian_binomial(6, 1), 63);
        assert_eq!(gaussian_binomial(6, 2), 651);
        assert_eq!(gaussian_binomial(6, 3), 1395);
        for m in 0..=7 {
            for d in 0..=m {
                let count = enumerate_gf2_subspaces(m, d).unwrap().count() as u128;
                assert_eq!(count, gaussian_binomial(m, d), "[{m} choose {d}]_2");
            }
        }
    }

    #[test]
    fn enumerated_subspaces_are_distinct_rref_bases() {
        let mut seen = alloc::collections::BTreeSet::new();
        for basis in enumerate_gf2_subspaces(5, 2).unwrap() {
            assert_eq!(basis.rank(), 2);
            assert_eq!(basis.rref().matrix, basis);
            let key: Vec<u64> = (0..basis.rows()).map(|i| basis.row(i)).collect();
            assert!(seen.insert(key));
        }
    }

    #[test]
    fn dimension_counting_rules_out_three_qubits() {
        assert!(!dimension_feasibility(3, 1));
        assert!(dimension_feasibility(4, 1));
        assert!(dimension_feasibility(5, 0));
    }

    #[test]
    fn oversized_requests_are_rejected() {
        assert!(enumerate_gf2_subspaces(4, 5).is_err());
        let spec = SearchSpec {
            alice_qubits: 9,
            logical_qubits: 1,
            required_distance: 3,
            ebits: 0,
        };
        assert!(matches!(search_css(&spec), Err(Error::Capacity { .. })));
    }

    #[test]
    fn four_qubit_one_ebit_search_finds_nothing() {
        let spec = SearchSpec {
            alice_qubits: 4,
            logical_qubits: 1,
            required_distance: 3,
            ebits: 1,
        };
        let report = search_css(&spec).unwrap();
        assert_eq!(report.total_survivors(), 0);
        assert!(report.census.values().all(|c| c.passed_distance == 0));
        assert!(report.census.values().any(|c| c.commuting > 0));
    }

    #[test]
    fn five_qubit_standard_search_finds_the_perfect_code_slot_empty() {
        // No [[5,1,3]] CSS code exists either; quick sanity at a smaller size.
        let spec = SearchSpec {
            alice_qubits: 5,
            logical_qubits: 1,
            required_distance: 3,
            ebits: 0,
        };
        let report = search_css(&spec).unwrap();
        assert_eq!(report.total_survivors(), 0);
    }

    #[test]
    fn chunked_runs_merge_to_the_serial_report() {
        let spec = SearchSpec {
            alice_qubits: 4,
            logical_qubits: 1,
            required_distance: 3,
            ebits: 1,
        };
        let serial = search_css(&spec).unwrap();
        let parts: Vec<SearchReport> = (0..3)
            .map(|i| search_css_chunk(&spec, i, 3).unwrap())
            .collect();
        let merged = merge_reports(&parts);
        assert!(serial.same_outcome(&merged));
    }

    #[test]
    fn repetition_code_shows_up_at_distance_one() {
        // d = 1 accepts every valid commuting pair; make sure survivors and
        // their re-validation work end to end.
        let spec = SearchSpec {
            alice_qubits: 2,
            logical_qubits: 1,
            required_distance: 1,
            ebits: 0,
        };
        let report = search_css(&spec).unwrap();
        assert!(report.total_survivors() > 0);
        for s in &report.survivors {
            let code = s.to_code().unwrap();
            code.validate().unwrap();
        }
    }
}
