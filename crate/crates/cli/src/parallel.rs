//! Parallel exhaustive verification. The subset space is cut into equal
//! ranges scanned by rayon workers; merging the partial states in range order
//! reproduces the sequential report exactly.

use rayon::prelude::*;

use parsimonious_core::{GameRepresentation, Oracle, OracleError, ScanState, VerificationReport};

const CHUNKS: u64 = 256;

pub fn verify(
    oracle: &Oracle,
    game: &GameRepresentation,
) -> Result<VerificationReport, OracleError> {
    let prepared = oracle.prepare(game)?;
    let total = prepared.subset_count();
    let chunks = CHUNKS.min(total);
    let states: Vec<ScanState> = (0..chunks)
        .into_par_iter()
        .map(|i| {
            prepared.scan(
                i * total / chunks..(i + 1) * total / chunks,
                oracle.max_witnesses,
            )
        })
        .collect();
    let state = states
        .into_iter()
        .reduce(ScanState::merge)
        .expect("at least one chunk");
    Ok(oracle.report(game, state))
}
