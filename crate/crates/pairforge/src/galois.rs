//! Arithmetic in prime fields GF(p) and quadratic extensions GF(p^2).
//!
//! Fields are small value types: a prime `p`, an extension degree `m` of 1
//! or 2, and for `m = 2` a monic irreducible modulus x^2 + c1*x + c0 over
//! GF(p). Elements carry their field descriptor, so mixing fields is caught
//! at runtime. Everything is immutable and safe to share across threads.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest accepted prime; keeps every product inside a u64.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Field {
    p: u64,
    m: u8,
    /// (c0, c1) of the modulus x^2 + c1*x + c0; (0, 0) when m = 1.
    modulus: (u64, u64),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    /// Residue vector (constant, w-coefficient); second entry 0 when m = 1.
    c: (u64, u64),
    field: Field,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
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

fn reduce_signed(v: i64, p: u64) -> u64 {
    let p = p as i64;
    (((v % p) + p) % p) as u64
}

/// Is x^2 + c1*x + c0 irreducible over GF(p)? Tested by rootlessness:
/// for odd p via Euler's criterion on the discriminant, for p = 2 by scan.
fn quadratic_irreducible(p: u64, c0: u64, c1: u64) -> bool {
    if p == 2 {
        return (0..2).all(|x: u64| (x * x + c1 * x + c0) % 2 != 0);
    }
    // discriminant c1^2 - 4 c0
    let disc = (c1 * c1 % p + 4 * p - 4 * c0 % p) % p;
    if disc == 0 {
        return false; // repeated root in GF(p)
    }
    mod_pow(disc, (p - 1) / 2, p) == p - 1
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    /// Build GF(p) or GF(p^2). A `None` modulus for m = 2 picks
    /// x^2 + 2x + 2 for p = 3 and otherwise the lexicographically smallest
    /// monic irreducible x^2 + bx + c (scanning b, then c, ascending).
    pub fn new(p: u64, m: u32, modulus: Option<&[i64]>) -> Result<Field> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        match m {
            1 => Ok(Field { p, m: 1, modulus: (0, 0) }),
            2 => {
                let (c0, c1) = match modulus {
                    Some(coeffs) => {
                        if coeffs.len() != 3 || reduce_signed(coeffs[2], p) != 1 {
                            return Err(Error::Parse(
                                "modulus must be monic of degree 2 (three coefficients, ascending)".into(),
                            ));
                        }
                        (reduce_signed(coeffs[0], p), reduce_signed(coeffs[1], p))
                    }
                    None => Self::default_quadratic_modulus(p),
                };
                if !quadratic_irreducible(p, c0, c1) {
                    return Err(Error::ReducibleModulus(format!("x^2+{c1}*x+{c0} over GF({p})")));
                }
                Ok(Field { p, m: 2, modulus: (c0, c1) })
            }
            other => Err(Error::UnsupportedDegree(other)),
        }
    }

    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    pub fn quadratic(p: u64) -> Result<Field> {
        Field::new(p, 2, None)
    }

    fn default_quadratic_modulus(p: u64) -> (u64, u64) {
        if p == 3 {
            return (2, 2); // x^2 + 2x + 2, the modulus fixed by the GF(9) examples
        }
        for b in 0..p {
            for c in 0..p {
                if quadratic_irreducible(p, c, b) {
                    return (c, b);
                }
            }
        }
        unreachable!("irreducible quadratics exist over every prime field")
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m as u32
    }

    /// Field size q = p^m.
    pub fn order(&self) -> u64 {
        if self.m == 1 {
            self.p
        } else {
            self.p * self.p
        }
    }

    /// Modulus coefficients (c0, c1) when m = 2.
    pub fn modulus(&self) -> Option<(u64, u64)> {
        (self.m == 2).then_some(self.modulus)
    }

    /// The prime subfield GF(p).
    pub fn base(&self) -> Field {
        Field { p: self.p, m: 1, modulus: (0, 0) }
    }

    /// True when `self` is GF(p^2) over `other` = GF(p).
    pub fn is_extension_of(&self, other: &Field) -> bool {
        self.m == 2 && other.m == 1 && self.p == other.p
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { c: (0, 0), field: *self }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { c: (1, 0), field: *self }
    }

    /// The modulus root w (only for m = 2).
    pub fn w(&self) -> FieldElement {
        assert_eq!(self.m, 2, "w exists only in quadratic extensions");
        FieldElement { c: (0, 1), field: *self }
    }

    /// Element from a signed residue (reduced mod p), in the prime subfield part.
    pub fn element(&self, v: i64) -> FieldElement {
        FieldElement { c: (reduce_signed(v, self.p), 0), field: *self }
    }

    /// Element from a residue vector (constant term first).
    pub fn element_from_vector(&self, coeffs: &[i64]) -> Result<FieldElement> {
        if coeffs.len() != self.m as usize {
            return Err(Error::LengthMismatch { expected: self.m as usize, got: coeffs.len() });
        }
        let c0 = reduce_signed(coeffs[0], self.p);
        let c1 = if self.m == 2 { reduce_signed(coeffs[1], self.p) } else { 0 };
        Ok(FieldElement { c: (c0, c1), field: *self })
    }

    /// Canonical rank of an element under residue-vector lexicographic order:
    /// rank = c0*p + c1 for m = 2, rank = c0 for m = 1.
    pub fn rank_of(&self, e: &FieldElement) -> u64 {
        assert_eq!(e.field, *self, "rank_of: element from another field");
        if self.m == 1 {
            e.c.0
        } else {
            e.c.0 * self.p + e.c.1
        }
    }

    pub fn element_of_rank(&self, rank: u64) -> FieldElement {
        debug_assert!(rank < self.order());
        if self.m == 1 {
            FieldElement { c: (rank, 0), field: *self }
        } else {
            FieldElement { c: (rank / self.p, rank % self.p), field: *self }
        }
    }

    /// All field elements in canonical (rank) order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |r| self.element_of_rank(r))
    }

    /// Lift an element of the prime subfield into this field.
    pub fn lift(&self, e: &FieldElement) -> Result<FieldElement> {
        if e.field == *self {
            return Ok(*e);
        }
        if !self.is_extension_of(&e.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(FieldElement { c: (e.c.0, 0), field: *self })
    }

    /// The smallest primitive element under the canonical element order.
    pub fn canonical_primitive(&self) -> FieldElement {
        let q = self.order();
        let factors = prime_factors(q - 1);
        for r in 1..q {
            let g = self.element_of_rank(r);
            if factors.iter().all(|f| !g.pow((q - 1) / f).is_one()) {
                return g;
            }
        }
        unreachable!("every finite field has a primitive element")
    }

    /// Deterministic primitive l-th root of unity: gamma^((q-1)/l) for the
    /// canonical primitive element gamma.
    pub fn primitive_root_of_unity(&self, l: u64) -> Result<FieldElement> {
        let q = self.order();
        if l == 0 || (q - 1) % l != 0 {
            return Err(Error::OrderNotDividing { l, group_order: q - 1 });
        }
        Ok(self.canonical_primitive().pow((q - 1) / l))
    }

    /// Parse an element: "5" for m = 1, "a+b*w" (also "a" or "b*w") for m = 2.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut c0 = 0i64;
        let mut c1 = 0i64;
        // split into signed terms
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(cur.clone());
                cur.clear();
            }
            if ch == '+' && i > 0 {
                continue; // separator only; '-' stays as the term sign
            }
            cur.push(ch);
        }
        terms.push(cur);
        for t in terms {
            if t.is_empty() {
                return Err(Error::Parse(format!("bad element syntax: {s}")));
            }
            if let Some(body) = t.strip_suffix("*w").or_else(|| t.strip_suffix('w')) {
                if self.m != 2 {
                    return Err(Error::Parse("w-terms only exist in GF(p^2)".into()));
                }
                let coef = match body {
                    "" | "+" => 1,
                    "-" => -1,
                    _ => body
                        .trim_end_matches('*')
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad coefficient in {t}")))?,
                };
                c1 += coef;
            } else {
                c0 += t.parse::<i64>().map_err(|_| Error::Parse(format!("bad element term {t}")))?;
            }
        }
        let vec = [c0, c1];
        self.element_from_vector(&vec[..self.m as usize])
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^2;{},{},1)", self.p, self.modulus.0, self.modulus.1)
        }
    }
}

impl FieldElement {
    pub fn field(&self) -> Field {
        self.field
    }

    /// Residue vector (constant term, w-coefficient).
    pub fn residues(&self) -> (u64, u64) {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c == (0, 0)
    }

    pub fn is_one(&self) -> bool {
        self.c == (1, 0)
    }

    pub fn pow(&self, mut exp: u64) -> FieldElement {
        let mut acc = self.field.one();
        let mut base = *self;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.field.p;
        if self.field.m == 1 {
            return Ok(FieldElement { c: (mod_pow(self.c.0, p - 2, p), 0), field: self.field });
        }
        // (a0 + a1 w)^-1 = conj / norm with conj = (a0 - c1 a1) - a1 w
        // and norm = a0^2 - c1 a0 a1 + c0 a1^2 in GF(p).
        let (a0, a1) = self.c;
        let (c0, c1) = self.field.modulus;
        let conj0 = (a0 + p * p - c1 * a1 % p) % p;
        let conj1 = (p - a1) % p;
        let norm = (a0 * a0 % p + c0 * a1 % p * a1 % p + p * p - c1 * a0 % p * a1 % p) % p;
        debug_assert_ne!(norm, 0);
        let ninv = mod_pow(norm, p - 2, p);
        Ok(FieldElement {
            c: (conj0 * ninv % p, conj1 * ninv % p),
            field: self.field,
        })
    }

    /// Frobenius map x -> x^p; identity on the prime subfield.
    pub fn frobenius(&self) -> FieldElement {
        self.pow(self.field.p)
    }

    /// Multiplicative order (0 is rejected).
    pub fn multiplicative_order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let group = self.field.order() - 1;
        let mut ord = group;
        for f in prime_factors(group) {
            while ord % f == 0 && self.pow(ord / f).is_one() {
                ord /= f;
            }
        }
        Ok(ord)
    }

    /// Project into the prime subfield if the w-part vanishes.
    pub fn project_to_base(&self) -> Result<FieldElement> {
        if self.field.m == 1 {
            return Ok(*self);
        }
        if self.c.1 != 0 {
            return Err(Error::FieldMismatch);
        }
        Ok(FieldElement { c: (self.c.0, 0), field: self.field.base() })
    }
}

fn check_same_field(a: &FieldElement, b: &FieldElement) {
    assert_eq!(
        a.field, b.field,
        "field mismatch: {} vs {}",
        a.field, b.field
    );
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        check_same_field(&self, &rhs);
        let p = self.field.p;
        FieldElement {
            c: ((self.c.0 + rhs.c.0) % p, (self.c.1 + rhs.c.1) % p),
            field: self.field,
        }
    }
}

impl std::ops::Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        check_same_field(&self, &rhs);
        let p = self.field.p;
        FieldElement {
            c: ((self.c.0 + p - rhs.c.0) % p, (self.c.1 + p - rhs.c.1) % p),
            field: self.field,
        }
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.field.p;
        FieldElement {
            c: ((p - self.c.0) % p, (p - self.c.1) % p),
            field: self.field,
        }
    }
}

impl std::ops::Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        check_same_field(&self, &rhs);
        let p = self.field.p;
        if self.field.m == 1 {
            return FieldElement { c: (self.c.0 * rhs.c.0 % p, 0), field: self.field };
        }
        // (a0 + a1 w)(b0 + b1 w) with w^2 = -c1 w - c0
        let (a0, a1) = self.c;
        let (b0, b1) = rhs.c;
        let (c0, c1) = self.field.modulus;
        let cross = (a0 * b1 + a1 * b0) % p;
        let sq = a1 * b1 % p;
        let r0 = (a0 * b0 % p + sq * ((p - c0) % p)) % p;
        let r1 = (cross + sq * ((p - c1) % p)) % p;
        FieldElement { c: (r0, r1), field: self.field }
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &FieldElement) -> Option<Ordering> {
        if self.field != other.field {
            return None;
        }
        Some(self.c.cmp(&other.c))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.m == 1 {
            write!(f, "{}", self.c.0)
        } else {
            write!(f, "{}+{}*w", self.c.0, self.c.1)
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn gf9_with_paper_modulus() {
        let f = Field::new(3, 2, Some(&[2, 2, 1])).unwrap();
        assert_eq!(f.order(), 9);
        // w is a primitive element: w^2 + 2w + 2 = 0
        let w = f.w();
        assert_eq!(w.multiplicative_order().unwrap(), 8);
        assert_eq!(f.canonical_primitive(), w);
        // default modulus for p = 3 coincides
        assert_eq!(Field::quadratic(3).unwrap(), f);
    }

    #[test]
    fn make_prime_field() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.order(), 7);
        assert!(matches!(Field::prime(4), Err(Error::NotPrime(4))));
        assert!(matches!(Field::new(5, 3, None), Err(Error::UnsupportedDegree(3))));
        assert!(matches!(
            Field::new(3, 2, Some(&[1, 2, 1])), // x^2+2x+1 = (x+1)^2
            Err(Error::ReducibleModulus(_))
        ));
    }

    #[test]
    fn inverse_examples() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.element(3).inv().unwrap(), f.element(5));
        assert_eq!(f.one().inv().unwrap(), f.one());
        let g5 = Field::prime(5).unwrap();
        assert!(matches!(g5.zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn primitive_roots_of_unity() {
        let f9 = Field::quadratic(3).unwrap();
        let w = f9.w();
        let delta = f9.primitive_root_of_unity(4).unwrap();
        assert_eq!(delta, w.pow(2));
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.canonical_primitive(), f7.element(3));
        assert_eq!(f7.primitive_root_of_unity(3).unwrap(), f7.element(2));
        assert!(matches!(
            f7.primitive_root_of_unity(5),
            Err(Error::OrderNotDividing { l: 5, group_order: 6 })
        ));
    }

    #[test]
    fn root_of_unity_powers() {
        for (field, l) in [
            (Field::prime(7).unwrap(), 3),
            (Field::prime(13).unwrap(), 4),
            (Field::quadratic(3).unwrap(), 8),
            (Field::quadratic(5).unwrap(), 6),
            (Field::quadratic(7).unwrap(), 12),
        ] {
            let d = field.primitive_root_of_unity(l).unwrap();
            for j in 1..l {
                assert!(!d.pow(j).is_one(), "{d:?}^{j} = 1 but l = {l}");
            }
            assert!(d.pow(l).is_one());
        }
    }

    #[test]
    fn field_axioms_random() {
        let mut rng = StdRng::seed_from_u64(7);
        for field in [Field::prime(7).unwrap(), Field::prime(13).unwrap(), Field::quadratic(3).unwrap(), Field::quadratic(7).unwrap()] {
            let q = field.order();
            let rand_elem = |rng: &mut StdRng| field.element_of_rank(rng.gen_range(0..q));
            for _ in 0..1000 {
                let a = rand_elem(&mut rng);
                let b = rand_elem(&mut rng);
                let c = rand_elem(&mut rng);
                assert_eq!((a + b) + c, a + (b + c));
                assert_eq!((a * b) * c, a * (b * c));
                assert_eq!(a * b, b * a);
                assert_eq!(a + b, b + a);
                assert_eq!(a * (b + c), a * b + a * c);
                assert_eq!(a + (-a), field.zero());
                if !a.is_zero() {
                    assert_eq!(a * a.inv().unwrap(), field.one());
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        let mut rng = StdRng::seed_from_u64(11);
        for field in [Field::quadratic(3).unwrap(), Field::quadratic(5).unwrap(), Field::quadratic(7).unwrap()] {
            let q = field.order();
            for _ in 0..500 {
                let a = field.element_of_rank(rng.gen_range(0..q));
                let b = field.element_of_rank(rng.gen_range(0..q));
                assert_eq!((a + b).frobenius(), a.frobenius() + b.frobenius());
            }
        }
    }

    #[test]
    fn element_text_roundtrip() {
        let f9 = Field::quadratic(3).unwrap();
        let e = f9.element_from_vector(&[2, 1]).unwrap();
        assert_eq!(e.to_string(), "2+1*w");
        assert_eq!(f9.parse_element("2+1*w").unwrap(), e);
        assert_eq!(f9.parse_element("2+w").unwrap(), e);
        assert_eq!(f9.parse_element("-1").unwrap(), f9.element(2));
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.parse_element("12").unwrap(), f7.element(5));
        assert_eq!(f7.to_string(), "GF(7)");
        assert_eq!(f9.to_string(), "GF(3^2;2,2,1)");
    }

    #[test]
    fn canonical_order_is_vector_lex() {
        let f9 = Field::quadratic(3).unwrap();
        let ranks: Vec<(u64, u64)> = f9.elements().map(|e| e.residues()).collect();
        assert_eq!(ranks[0], (0, 0));
        assert_eq!(ranks[1], (0, 1)); // w comes before 1
        assert_eq!(ranks[3], (1, 0));
        let mut sorted = ranks.clone();
        sorted.sort();
        assert_eq!(ranks, sorted);
    }
}
