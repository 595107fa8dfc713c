//! Crate-internal fast symbol arithmetic for the search engines.
//!
//! Engines work on canonical element ranks (0..q) instead of `FieldElement`
//! values. For small q all operations are table lookups; larger prime fields
//! fall back to modular arithmetic. Rank 0 is always the zero element and
//! rank order equals the canonical element order, so lexicographic loops
//! over ranks match the canonical orderings used everywhere else.

use crate::galois::Field;

const TABLE_LIMIT: u64 = 512;

pub(crate) struct SymbolOps {
    q: u64,
    one: u64,
    kind: OpsKind,
}

enum OpsKind {
    /// GF(p) with rank = residue.
    Prime { p: u64 },
    /// GF(p^2) without tables; rank = c0*p + c1.
    Quad { p: u64, c0: u64, c1: u64 },
    Table {
        add: Vec<u16>,
        sub: Vec<u16>,
        mul: Vec<u16>,
        neg: Vec<u16>,
        inv: Vec<u16>,
    },
}

impl SymbolOps {
    pub fn new(field: &Field) -> SymbolOps {
        let q = field.order();
        let one = field.rank_of(&field.one());
        if q <= TABLE_LIMIT {
            let qs = q as usize;
            let mut add = vec![0u16; qs * qs];
            let mut sub = vec![0u16; qs * qs];
            let mut mul = vec![0u16; qs * qs];
            let mut neg = vec![0u16; qs];
            let mut inv = vec![0u16; qs];
            for a in 0..q {
                let ea = field.element_of_rank(a);
                neg[a as usize] = field.rank_of(&(-ea)) as u16;
                if a != 0 {
                    inv[a as usize] = field.rank_of(&ea.inv().unwrap()) as u16;
                }
                for b in 0..q {
                    let eb = field.element_of_rank(b);
                    add[(a * q + b) as usize] = field.rank_of(&(ea + eb)) as u16;
                    sub[(a * q + b) as usize] = field.rank_of(&(ea - eb)) as u16;
                    mul[(a * q + b) as usize] = field.rank_of(&(ea * eb)) as u16;
                }
            }
            SymbolOps { q, one, kind: OpsKind::Table { add, sub, mul, neg, inv } }
        } else if field.m() == 1 {
            SymbolOps { q, one, kind: OpsKind::Prime { p: field.p() } }
        } else {
            let (c0, c1) = field.modulus().unwrap();
            SymbolOps { q, one, kind: OpsKind::Quad { p: field.p(), c0, c1 } }
        }
    }

    #[inline]
    pub fn q(&self) -> u64 {
        self.q
    }

    #[inline]
    pub fn one(&self) -> u64 {
        self.one
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        match &self.kind {
            OpsKind::Table { add, .. } => add[(a * self.q + b) as usize] as u64,
            OpsKind::Prime { p } => {
                let s = a + b;
                if s >= *p {
                    s - p
                } else {
                    s
                }
            }
            OpsKind::Quad { p, .. } => {
                let (a0, a1) = (a / p, a % p);
                let (b0, b1) = (b / p, b % p);
                ((a0 + b0) % p) * p + (a1 + b1) % p
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        match &self.kind {
            OpsKind::Table { sub, .. } => sub[(a * self.q + b) as usize] as u64,
            OpsKind::Prime { p } => (a + p - b) % p,
            OpsKind::Quad { p, .. } => {
                let (a0, a1) = (a / p, a % p);
                let (b0, b1) = (b / p, b % p);
                ((a0 + p - b0) % p) * p + (a1 + p - b1) % p
            }
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match &self.kind {
            OpsKind::Table { mul, .. } => mul[(a * self.q + b) as usize] as u64,
            OpsKind::Prime { p } => a * b % p,
            OpsKind::Quad { p, c0, c1 } => {
                let (a0, a1) = (a / p, a % p);
                let (b0, b1) = (b / p, b % p);
                let cross = (a0 * b1 + a1 * b0) % p;
                let sq = a1 * b1 % p;
                let r0 = (a0 * b0 % p + sq * ((p - c0) % p)) % p;
                let r1 = (cross + sq * ((p - c1) % p)) % p;
                r0 * p + r1
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        match &self.kind {
            OpsKind::Table { neg, .. } => neg[a as usize] as u64,
            _ => self.sub(0, a),
        }
    }

    /// Multiplicative inverse; caller guarantees a != 0.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert_ne!(a, 0);
        match &self.kind {
            OpsKind::Table { inv, .. } => inv[a as usize] as u64,
            OpsKind::Prime { p } => mod_pow_u64(a, p - 2, *p),
            OpsKind::Quad { .. } => {
                // q - 2 exponent via square-and-multiply on ranks
                let mut acc = self.one;
                let mut base = a;
                let mut e = self.q - 2;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = self.mul(acc, base);
                    }
                    base = self.mul(base, base);
                    e >>= 1;
                }
                acc
            }
        }
    }
}

fn mod_pow_u64(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// q^k as u128 when it fits.
pub(crate) fn search_space(q: u64, k: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..k {
        acc = acc.checked_mul(q as u128)?;
    }
    Some(acc)
}

/// Generator rows in rank form plus the odometer enumeration the engines,
/// the public codeword visitor, and the pair decoder all share.
pub(crate) struct PackedCode {
    pub ops: SymbolOps,
    pub n: usize,
    pub k: usize,
    /// k generator rows, each of length n.
    pub rows: Vec<Vec<u64>>,
}

impl PackedCode {
    pub fn new(ops: SymbolOps, n: usize, rows: Vec<Vec<u64>>) -> PackedCode {
        let k = rows.len();
        debug_assert!(rows.iter().all(|r| r.len() == n));
        PackedCode { ops, n, k, rows }
    }

    /// Visit all q^(k - prefix.len()) codewords whose message starts with
    /// `prefix`, in lexicographic message order (canonical element order per
    /// digit). The visitor returns false to stop early.
    pub fn enumerate<F>(&self, prefix: &[u64], mut visit: F)
    where
        F: FnMut(&[u64], &[u64]) -> bool,
    {
        let q = self.ops.q();
        let k = self.k;
        assert!(prefix.len() <= k);
        let mut msg = vec![0u64; k];
        msg[..prefix.len()].copy_from_slice(prefix);
        let mut cw = vec![0u64; self.n];
        for (i, &d) in prefix.iter().enumerate() {
            self.add_scaled_row(&mut cw, i, d);
        }
        if k == prefix.len() {
            visit(&msg, &cw);
            return;
        }
        if !visit(&msg, &cw) {
            return;
        }
        let lo = prefix.len();
        loop {
            // odometer increment, last digit fastest
            let mut i = k - 1;
            loop {
                let d = msg[i];
                if d + 1 < q {
                    msg[i] = d + 1;
                    self.apply_delta(&mut cw, i, self.ops.sub(d + 1, d));
                    break;
                }
                msg[i] = 0;
                self.apply_delta(&mut cw, i, self.ops.neg(d));
                if i == lo {
                    return; // wrapped around the free digits
                }
                i -= 1;
            }
            if !visit(&msg, &cw) {
                return;
            }
        }
    }

    #[inline]
    fn apply_delta(&self, cw: &mut [u64], row: usize, delta: u64) {
        let r = &self.rows[row];
        if delta == self.ops.one() {
            for (c, &g) in cw.iter_mut().zip(r) {
                *c = self.ops.add(*c, g);
            }
        } else {
            for (c, &g) in cw.iter_mut().zip(r) {
                *c = self.ops.add(*c, self.ops.mul(delta, g));
            }
        }
    }

    fn add_scaled_row(&self, cw: &mut [u64], row: usize, scalar: u64) {
        if scalar == 0 {
            return;
        }
        self.apply_delta(cw, row, scalar);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Field;

    #[test]
    fn ops_match_field_arithmetic() {
        for field in [
            Field::prime(7).unwrap(),
            Field::prime(541).unwrap(), // above the table limit
            Field::quadratic(3).unwrap(),
            Field::quadratic(23).unwrap(), // quad fallback, q = 529 > 512
        ] {
            let ops = SymbolOps::new(&field);
            let q = field.order().min(60); // sample corner
            for a in 0..q {
                for b in 0..q {
                    let ea = field.element_of_rank(a);
                    let eb = field.element_of_rank(b);
                    assert_eq!(ops.add(a, b), field.rank_of(&(ea + eb)));
                    assert_eq!(ops.sub(a, b), field.rank_of(&(ea - eb)));
                    assert_eq!(ops.mul(a, b), field.rank_of(&(ea * eb)));
                }
                let ea = field.element_of_rank(a);
                assert_eq!(ops.neg(a), field.rank_of(&(-ea)));
                if a != 0 {
                    assert_eq!(ops.inv(a), field.rank_of(&ea.inv().unwrap()));
                }
            }
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let field = Field::prime(3).unwrap();
        let ops = SymbolOps::new(&field);
        // toy generator rows over GF(3), n = 4, k = 2
        let rows = vec![vec![1, 2, 0, 0], vec![0, 1, 2, 0]];
        let code = PackedCode::new(ops, 4, rows);
        let mut msgs = Vec::new();
        code.enumerate(&[], |m, cw| {
            // codeword = m0*row0 + m1*row1
            let expect: Vec<u64> = (0..4)
                .map(|j| {
                    let a = code.ops.mul(m[0], code.rows[0][j]);
                    let b = code.ops.mul(m[1], code.rows[1][j]);
                    code.ops.add(a, b)
                })
                .collect();
            assert_eq!(cw, &expect[..]);
            msgs.push(m.to_vec());
            true
        });
        assert_eq!(msgs.len(), 9);
        let mut sorted = msgs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 9);
        assert_eq!(msgs, sorted, "visit order is lexicographic");
        // prefix partition covers the same set
        let mut count = 0;
        for d in 0..3u64 {
            code.enumerate(&[d], |_, _| {
                count += 1;
                true
            });
        }
        assert_eq!(count, 9);
    }

    #[test]
    fn search_space_overflow() {
        assert_eq!(search_space(3, 9), Some(19683));
        assert!(search_space(7, 14).unwrap() > 1 << 36);
        assert!(search_space(u64::MAX, 3).is_none());
    }
}
