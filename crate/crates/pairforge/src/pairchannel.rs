//! Desk-scale symbol-pair channel: seeded pair-error injection and
//! brute-force minimum-pair-distance decoding, used to exercise the
//! floor((d_p - 1) / 2) correctability guarantee end to end.
//!
//! The error model is adversarial whole-pair substitution: a corrupted
//! position may hold any pair, so the received vector need not be the pair
//! read of any word.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::codec::{ConstacyclicCode, ENUMERATION_GUARD};
use crate::distance::{min_weight_certified, nearest_codeword_pairs, Metric};
use crate::error::{Error, Result};
use crate::families::{build_family, FamilySpec};
use crate::galois::{Field, FieldElement};
use crate::pairmetric::Word;

/// A (possibly inconsistent) vector of n symbol pairs.
#[derive(Clone)]
pub struct PairReceived {
    field: Field,
    pairs: Vec<(FieldElement, FieldElement)>,
}

impl PairReceived {
    pub fn new(field: Field, pairs: Vec<(FieldElement, FieldElement)>) -> Result<PairReceived> {
        if pairs.len() < 2 {
            return Err(Error::RangeViolation("pair vectors need n >= 2".into()));
        }
        if pairs.iter().any(|(a, b)| a.field() != field || b.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(PairReceived { field, pairs })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn pairs(&self) -> &[(FieldElement, FieldElement)] {
        &self.pairs
    }

    fn packed(&self) -> Vec<u64> {
        self.pairs
            .iter()
            .flat_map(|(a, b)| [self.field.rank_of(a), self.field.rank_of(b)])
            .collect()
    }
}

/// Replace exactly `t` distinct positions of the pair read of `x` with
/// uniformly random different pairs. Seeded, so reproducible.
pub fn inject_pair_errors(x: &Word, t: usize, seed: u64) -> Result<PairReceived> {
    let n = x.len();
    if t > n {
        return Err(Error::TooManyErrors { t, n });
    }
    let field = x.field();
    let q = field.order();
    let mut pairs = x.pair_read();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let positions = rand::seq::index::sample(&mut rng, n, t);
    for i in positions {
        let current = pairs[i];
        loop {
            let a = field.element_of_rank(rng.gen_range(0..q));
            let b = field.element_of_rank(rng.gen_range(0..q));
            if (a, b) != current {
                pairs[i] = (a, b);
                break;
            }
        }
    }
    PairReceived::new(field, pairs)
}

pub struct DecodeOutcome {
    pub codeword: Word,
    pub message: Vec<FieldElement>,
    /// Number of pair positions where the decoded codeword differs from the
    /// received vector.
    pub distance: usize,
}

/// Minimum-pair-distance decoding by full codeword enumeration; ties go to
/// the lexicographically smallest message.
pub fn ml_pair_decode(code: &ConstacyclicCode, received: &PairReceived) -> Result<DecodeOutcome> {
    decode_with_bound(code, received, None)
}

fn decode_with_bound(
    code: &ConstacyclicCode,
    received: &PairReceived,
    min_pair_distance: Option<usize>,
) -> Result<DecodeOutcome> {
    if received.len() != code.n() || received.field() != code.field() {
        return Err(Error::LengthMismatch { expected: code.n(), got: received.len() });
    }
    match code.codeword_count() {
        Some(c) if c <= ENUMERATION_GUARD => {}
        _ => {
            return Err(Error::SearchSpaceTooLarge { q: code.field().order(), k: code.k() });
        }
    }
    let packed = received.packed();
    let (msg_ranks, distance) = nearest_codeword_pairs(code, &packed, min_pair_distance)?;
    let field = code.field();
    let message: Vec<FieldElement> = msg_ranks.iter().map(|&r| field.element_of_rank(r)).collect();
    let codeword = Word::new(field, code.encode(&message)?)?;
    Ok(DecodeOutcome { codeword, message, distance })
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialCount {
    pub t: usize,
    pub ok: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChannelSummary {
    pub family: String,
    pub p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
    pub d_p: usize,
    pub t_max: usize,
    pub trials: u64,
    pub per_t: Vec<TrialCount>,
    pub all_pass: bool,
    pub runtime_ms: u64,
}

fn mix_seed(seed: u64, a: u64, b: u64) -> u64 {
    // splitmix64 over the concatenated inputs
    let mut z = seed ^ a.wrapping_mul(0x9E3779B97F4A7C15) ^ b.wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// For every t up to floor((d_p - 1) / 2), run seeded random
/// (message, error-pattern) trials and count exact recoveries. The
/// correctability guarantee demands 100% inside that radius.
pub fn correctability_experiment(
    spec: &FamilySpec,
    trials: u64,
    seed: u64,
) -> Result<ChannelSummary> {
    let start = Instant::now();
    let (code, _) = build_family(spec)?;
    match code.codeword_count() {
        Some(c) if c <= ENUMERATION_GUARD => {}
        _ => {
            return Err(Error::SearchSpaceTooLarge { q: code.field().order(), k: code.k() });
        }
    }
    let d_p = min_weight_certified(&code, Metric::Pair, u64::MAX)?.value;
    let t_max = (d_p - 1) / 2;
    let field = code.field();
    let q = field.order();

    let mut per_t = Vec::with_capacity(t_max + 1);
    for t in 0..=t_max {
        let ok: u64 = (0..trials)
            .into_par_iter()
            .map(|trial| {
                let mut rng = ChaCha12Rng::seed_from_u64(mix_seed(seed, t as u64, trial));
                let message: Vec<FieldElement> = (0..code.k())
                    .map(|_| field.element_of_rank(rng.gen_range(0..q)))
                    .collect();
                let sent = Word::new(field, code.encode(&message).unwrap()).unwrap();
                let received = inject_pair_errors(&sent, t, rng.gen()).unwrap();
                let decoded = decode_with_bound(&code, &received, Some(d_p)).unwrap();
                u64::from(decoded.message == message)
            })
            .sum();
        per_t.push(TrialCount { t, ok });
    }
    let all_pass = per_t.iter().all(|c| c.ok == trials);
    Ok(ChannelSummary {
        family: spec.family.to_string(),
        p: spec.p,
        s: spec.s,
        l: spec.l,
        d_p,
        t_max,
        trials,
        per_t,
        all_pass,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}
