//! Full codeword enumeration engine: the oracle the other engines are
//! checked against wherever q^k is affordable.

use rayon::prelude::*;

use crate::codec::ConstacyclicCode;
use crate::error::{Error, Result};

use super::Metric;

pub(crate) struct ScanOutcome {
    pub value: usize,
    /// Lexicographically first message attaining the value.
    pub witness_msg: Vec<u64>,
    pub visited: u128,
}

/// Minimum nonzero weight(s) over all q^k codewords. Messages are scanned in
/// lexicographic order, partitioned across workers by the leading message
/// symbol; the merge keeps the first attainer, so the result is identical
/// for any worker count.
pub(crate) fn scan_min_weights(
    code: &ConstacyclicCode,
    metrics: &[Metric],
) -> Result<Vec<ScanOutcome>> {
    if code.k() == 0 {
        return Err(Error::EmptyCode);
    }
    let q = code.field().order();
    let n = code.n();

    let per_prefix: Vec<Vec<Option<(usize, Vec<u64>)>>> = (0..q)
        .into_par_iter()
        .map(|d| {
            let packed = code.packed();
            let mut best: Vec<Option<(usize, Vec<u64>)>> = vec![None; metrics.len()];
            packed.enumerate(&[d], |msg, cw| {
                for (slot, metric) in best.iter_mut().zip(metrics) {
                    let w = match metric {
                        Metric::Hamming => hamming_weight(cw),
                        Metric::Pair => pair_weight(cw, n),
                    };
                    if w > 0 && slot.as_ref().is_none_or(|(b, _)| w < *b) {
                        *slot = Some((w, msg.to_vec()));
                    }
                }
                true
            });
            best
        })
        .collect();

    let visited = code.codeword_count().expect("guarded by caller");
    let mut out = Vec::with_capacity(metrics.len());
    for mi in 0..metrics.len() {
        let mut best: Option<(usize, Vec<u64>)> = None;
        for prefix_best in &per_prefix {
            if let Some((w, msg)) = &prefix_best[mi] {
                if best.as_ref().is_none_or(|(b, _)| w < b) {
                    best = Some((*w, msg.clone()));
                }
            }
        }
        let (value, witness_msg) = best.ok_or(Error::EmptyCode)?;
        out.push(ScanOutcome { value, witness_msg, visited });
    }
    Ok(out)
}

#[inline]
pub(crate) fn hamming_weight(cw: &[u64]) -> usize {
    cw.iter().filter(|&&c| c != 0).count()
}

#[inline]
pub(crate) fn pair_weight(cw: &[u64], n: usize) -> usize {
    let mut w = 0;
    for i in 0..n - 1 {
        if cw[i] != 0 || cw[i + 1] != 0 {
            w += 1;
        }
    }
    if cw[n - 1] != 0 || cw[0] != 0 {
        w += 1;
    }
    w
}

/// Minimum-pair-distance decoding against a received pair vector (ranks,
/// flattened as 2n entries). Returns (message, distance) with ties broken by
/// the lexicographically smallest message.
///
/// When the code's minimum pair distance is supplied, the scan stops as soon
/// as some codeword gets within (d_p - 1) / 2 of the received vector: the
/// triangle inequality makes that codeword the unique nearest one, so the
/// result does not depend on where the scan was cut off.
pub(crate) fn nearest_codeword_pairs(
    code: &ConstacyclicCode,
    received: &[u64],
    min_pair_distance: Option<usize>,
) -> Result<(Vec<u64>, usize)> {
    use std::sync::atomic::{AtomicBool, Ordering};

    if code.k() == 0 {
        return Err(Error::EmptyCode);
    }
    let q = code.field().order();
    let n = code.n();
    debug_assert_eq!(received.len(), 2 * n);
    // unique-nearest threshold: 2*dist < d_p
    let settle = min_pair_distance.map(|dp| dp.div_ceil(2));
    let stop = AtomicBool::new(false);

    let per_prefix: Vec<(usize, Vec<u64>)> = (0..q)
        .into_par_iter()
        .map(|d| {
            let packed = code.packed();
            let mut best_dist = usize::MAX;
            let mut best_msg: Vec<u64> = Vec::new();
            packed.enumerate(&[d], |msg, cw| {
                if stop.load(Ordering::Relaxed) {
                    return false;
                }
                let dist = pair_mismatches(cw, received, n, best_dist);
                if dist < best_dist {
                    best_dist = dist;
                    best_msg = msg.to_vec();
                    // an exact pair-read match is unique as well
                    if best_dist == 0 || settle.is_some_and(|s| best_dist < s) {
                        stop.store(true, Ordering::Relaxed);
                        return false;
                    }
                }
                true
            });
            (best_dist, best_msg)
        })
        .collect();

    let mut best = (usize::MAX, Vec::new());
    for (dist, msg) in per_prefix {
        if dist < best.0 {
            best = (dist, msg);
        }
    }
    Ok((best.1, best.0))
}

/// Positions where the codeword's pair read differs from the received pairs,
/// abandoning once the count exceeds `cap`.
#[inline]
fn pair_mismatches(cw: &[u64], received: &[u64], n: usize, cap: usize) -> usize {
    let mut d = 0;
    for i in 0..n {
        let a = cw[i];
        let b = cw[if i + 1 == n { 0 } else { i + 1 }];
        if a != received[2 * i] || b != received[2 * i + 1] {
            d += 1;
            if d > cap {
                return d;
            }
        }
    }
    d
}
