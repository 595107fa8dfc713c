//! The symbol-pair metric: pair-read vectors, pair weight, pair distance.
//!
//! Indices are always circular mod n. Words of length below 2 are rejected
//! because the pair read of a single symbol is degenerate.

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};

#[derive(Clone, PartialEq, Eq)]
pub struct Word {
    field: Field,
    symbols: Vec<FieldElement>,
}

impl Word {
    pub fn new(field: Field, symbols: Vec<FieldElement>) -> Result<Word> {
        if symbols.len() < 2 {
            return Err(Error::RangeViolation(format!(
                "pair metrics need word length >= 2, got {}",
                symbols.len()
            )));
        }
        if symbols.iter().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Word { field, symbols })
    }

    pub fn from_ints(field: Field, symbols: &[i64]) -> Result<Word> {
        Word::new(field, symbols.iter().map(|&v| field.element(v)).collect())
    }

    pub fn zero(field: Field, n: usize) -> Result<Word> {
        Word::new(field, vec![field.zero(); n])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 2 by construction
    }

    pub fn symbols(&self) -> &[FieldElement] {
        &self.symbols
    }

    pub fn is_zero(&self) -> bool {
        self.symbols.iter().all(|s| s.is_zero())
    }

    /// The symbol-pair read vector: position i holds (x_i, x_{i+1 mod n}).
    pub fn pair_read(&self) -> Vec<(FieldElement, FieldElement)> {
        let n = self.len();
        (0..n)
            .map(|i| (self.symbols[i], self.symbols[(i + 1) % n]))
            .collect()
    }

    /// Number of positions whose pair is not (0, 0); equals |S ∪ (S-1)| for
    /// the support S.
    pub fn pair_weight(&self) -> usize {
        let n = self.len();
        (0..n)
            .filter(|&i| !self.symbols[i].is_zero() || !self.symbols[(i + 1) % n].is_zero())
            .count()
    }

    pub fn hamming_weight(&self) -> usize {
        self.symbols.iter().filter(|s| !s.is_zero()).count()
    }

    /// Indices of nonzero symbols.
    pub fn support(&self) -> Vec<usize> {
        self.symbols
            .iter()
            .enumerate()
            .filter_map(|(i, s)| (!s.is_zero()).then_some(i))
            .collect()
    }

    pub fn sub(&self, other: &Word) -> Result<Word> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), got: other.len() });
        }
        Word::new(
            self.field,
            self.symbols
                .iter()
                .zip(&other.symbols)
                .map(|(&a, &b)| a - b)
                .collect(),
        )
    }

    /// Number of positions where the pair reads differ.
    pub fn pair_distance(&self, other: &Word) -> Result<usize> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), got: other.len() });
        }
        let n = self.len();
        Ok((0..n)
            .filter(|&i| {
                let j = (i + 1) % n;
                self.symbols[i] != other.symbols[i] || self.symbols[j] != other.symbols[j]
            })
            .count())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// The pair-distance sandwich d_H + 1 <= d_p <= 2*d_H, valid for 0 < d_H < n.
pub fn check_sandwich(d_h: usize, d_p: usize, n: usize) -> Result<bool> {
    if d_h == 0 || d_h >= n {
        return Err(Error::RangeViolation(format!(
            "sandwich bound needs 0 < d_H < n, got d_H = {d_h}, n = {n}"
        )));
    }
    Ok(d_h + 1 <= d_p && d_p <= 2 * d_h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn pair_read_examples() {
        let f2 = gf(2);
        let x = Word::from_ints(f2, &[1, 0, 0, 1, 0]).unwrap();
        let pairs = x.pair_read();
        let e = |a: i64, b: i64| (f2.element(a), f2.element(b));
        assert_eq!(pairs, vec![e(1, 0), e(0, 0), e(0, 1), e(1, 0), e(0, 1)]);

        let z = Word::zero(f2, 4).unwrap();
        assert!(z.pair_read().iter().all(|&(a, b)| a.is_zero() && b.is_zero()));

        let f3 = gf(3);
        let ab = Word::from_ints(f3, &[1, 2]).unwrap();
        assert_eq!(ab.pair_read(), vec![(f3.element(1), f3.element(2)), (f3.element(2), f3.element(1))]);

        assert!(Word::from_ints(f3, &[1]).is_err());
    }

    #[test]
    fn pair_weight_examples() {
        let f2 = gf(2);
        assert_eq!(Word::from_ints(f2, &[1, 0, 0, 1, 0]).unwrap().pair_weight(), 4);
        assert_eq!(Word::zero(f2, 6).unwrap().pair_weight(), 0);
        assert_eq!(Word::from_ints(f2, &[1, 1, 1, 1, 1]).unwrap().pair_weight(), 5);
    }

    #[test]
    fn pair_distance_examples() {
        let f3 = gf(3);
        let x = Word::from_ints(f3, &[1, 0, 0, 0, 0]).unwrap();
        let y = Word::from_ints(f3, &[0, 0, 1, 0, 0]).unwrap();
        assert_eq!(x.pair_distance(&x).unwrap(), 0);
        let z = Word::zero(f3, 5).unwrap();
        assert_eq!(x.pair_distance(&z).unwrap(), x.pair_weight());
        assert_eq!(x.pair_distance(&y).unwrap(), 4);
        assert_eq!(x.sub(&y).unwrap().pair_weight(), 4);

        let short = Word::from_ints(f3, &[1, 0]).unwrap();
        assert!(matches!(
            x.pair_distance(&short),
            Err(Error::LengthMismatch { expected: 5, got: 2 })
        ));
    }

    #[test]
    fn sandwich_examples() {
        assert!(check_sandwich(2, 4, 12).unwrap());
        assert!(check_sandwich(5, 8, 21).unwrap());
        assert!(!check_sandwich(3, 7, 12).unwrap());
        assert!(matches!(check_sandwich(0, 1, 4), Err(Error::RangeViolation(_))));
        assert!(matches!(check_sandwich(4, 5, 4), Err(Error::RangeViolation(_))));
    }

    /// Exhaustive w_H <= w_p <= 2 w_H and w_p = |S ∪ (S-1)| over all short
    /// words; the same loop the acceptance suite runs at larger sizes.
    #[test]
    fn weight_bounds_exhaustive_small() {
        for field in [gf(2), gf(3)] {
            let q = field.order();
            for n in 2..=4usize {
                let total = q.pow(n as u32);
                for code in 0..total {
                    let mut v = Vec::with_capacity(n);
                    let mut c = code;
                    for _ in 0..n {
                        v.push(field.element_of_rank(c % q));
                        c /= q;
                    }
                    let w = Word::new(field, v).unwrap();
                    let wh = w.hamming_weight();
                    let wp = w.pair_weight();
                    if wh > 0 {
                        assert!(wh <= wp && wp <= 2 * wh);
                    } else {
                        assert_eq!(wp, 0);
                    }
                    let s = w.support();
                    let mut union: Vec<usize> = s
                        .iter()
                        .flat_map(|&i| [i, (i + n - 1) % n])
                        .collect();
                    union.sort_unstable();
                    union.dedup();
                    assert_eq!(wp, union.len());
                }
            }
        }
    }

    #[test]
    fn triangle_inequality_fuzz() {
        let mut rng = StdRng::seed_from_u64(17);
        let f3 = gf(3);
        for _ in 0..2000 {
            let n = rng.gen_range(2..9);
            let mut mk = || {
                let v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..3)).collect();
                Word::from_ints(f3, &v).unwrap()
            };
            let (x, y, z) = (mk(), mk(), mk());
            let dxy = x.pair_distance(&y).unwrap();
            let dyz = y.pair_distance(&z).unwrap();
            let dxz = x.pair_distance(&z).unwrap();
            assert!(dxz <= dxy + dyz);
            assert_eq!(dxy, y.pair_distance(&x).unwrap());
        }
    }
}
