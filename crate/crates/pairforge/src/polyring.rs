//! Dense univariate polynomials over a finite field.
//!
//! Coefficients are stored ascending by degree with no trailing zeros, so
//! structural equality is polynomial equality. The zero polynomial is the
//! empty vector.

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    /// Canonicalize: drop trailing zeros.
    pub fn new(field: Field, mut coeffs: Vec<FieldElement>) -> Result<Polynomial> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(Polynomial { field, coeffs })
    }

    /// Integer coefficients, ascending, reduced mod p.
    pub fn from_ints(field: Field, coeffs: &[i64]) -> Polynomial {
        let coeffs = coeffs.iter().map(|&v| field.element(v)).collect();
        Polynomial::new(field, coeffs).expect("same field by construction")
    }

    pub fn zero(field: Field) -> Polynomial {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Polynomial {
        Polynomial { field, coeffs: vec![field.one()] }
    }

    pub fn constant(c: FieldElement) -> Polynomial {
        Polynomial::new(c.field(), vec![c]).unwrap()
    }

    /// x - r
    pub fn linear_from_root(r: FieldElement) -> Polynomial {
        Polynomial { field: r.field(), coeffs: vec![-r, r.field().one()] }
    }

    pub fn monomial(field: Field, coeff: FieldElement, degree: usize) -> Result<Polynomial> {
        let mut coeffs = vec![field.zero(); degree + 1];
        coeffs[degree] = coeff;
        Polynomial::new(field, coeffs)
    }

    /// x^n - eta
    pub fn x_pow_minus(field: Field, n: usize, eta: FieldElement) -> Result<Polynomial> {
        if eta.field() != field {
            return Err(Error::FieldMismatch);
        }
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[0] = -eta;
        coeffs[n] = field.one();
        Polynomial::new(field, coeffs)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Number of nonzero coefficients.
    pub fn hamming_weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn make_monic(&self) -> Result<Polynomial> {
        let lead = self.leading().ok_or(Error::DivisionByZero)?;
        if lead.is_one() {
            return Ok(self.clone());
        }
        let inv = lead.inv()?;
        Ok(Polynomial {
            field: self.field,
            coeffs: self.coeffs.iter().map(|&c| c * inv).collect(),
        })
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Polynomial::new(self.field, coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Polynomial::new(self.field, coeffs)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            field: self.field,
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }

    pub fn scale(&self, s: FieldElement) -> Result<Polynomial> {
        if s.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        Polynomial::new(self.field, self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.field));
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Polynomial::new(self.field, out)
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(self.field);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Euclidean division: self = q*b + r with deg r < deg b.
    pub fn divmod(&self, b: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if self.field != b.field {
            return Err(Error::FieldMismatch);
        }
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = b.leading().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() < db + 1 {
            return Ok((Polynomial::zero(self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - db];
        for i in (db..rem.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            let q = c * lead_inv;
            quot[i - db] = q;
            for (j, &bc) in b.coeffs.iter().enumerate() {
                rem[i - db + j] = rem[i - db + j] - q * bc;
            }
        }
        rem.truncate(db);
        Ok((Polynomial::new(self.field, quot)?, Polynomial::new(self.field, rem)?))
    }

    pub fn divides(&self, other: &Polynomial) -> Result<bool> {
        let (_, r) = other.divmod(self)?;
        Ok(r.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// k-fold formal derivative; k = 0 is the identity.
    pub fn derivative(&self, k: u32) -> Polynomial {
        let mut cur = self.clone();
        for _ in 0..k {
            if cur.coeffs.len() <= 1 {
                return Polynomial::zero(self.field);
            }
            let coeffs = cur
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * self.field.element(i as i64))
                .collect();
            cur = Polynomial::new(self.field, coeffs).unwrap();
        }
        cur
    }

    /// Horner evaluation. The point may live in a quadratic extension of the
    /// coefficient field; coefficients are lifted.
    pub fn eval(&self, x0: &FieldElement) -> Result<FieldElement> {
        let target = x0.field();
        if target != self.field && !target.is_extension_of(&self.field) {
            return Err(Error::FieldMismatch);
        }
        let mut acc = target.zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * *x0 + target.lift(&c)?;
        }
        Ok(acc)
    }

    /// Lift all coefficients into an extension field.
    pub fn lift_to(&self, ext: Field) -> Result<Polynomial> {
        let coeffs: Result<Vec<_>> = self.coeffs.iter().map(|c| ext.lift(c)).collect();
        Polynomial::new(ext, coeffs?)
    }

    /// Project all coefficients down to the prime subfield.
    pub fn project_to_base(&self) -> Result<Polynomial> {
        let coeffs: Result<Vec<_>> = self.coeffs.iter().map(|c| c.project_to_base()).collect();
        Polynomial::new(self.field.base(), coeffs?)
    }

    /// Reduce mod x^l - 1 by folding exponents mod l.
    pub fn fold_mod_xl_minus_one(&self, l: usize) -> Polynomial {
        let mut out = vec![self.field.zero(); l];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % l] = out[i % l] + c;
        }
        Polynomial::new(self.field, out).unwrap()
    }

    /// Comma-separated ascending coefficients ("-1,0,0,1" is x^3 - 1).
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parse either comma-separated ascending coefficients or the symbolic
    /// product form `(x-1)^4*(x^2+x+1)`. A bare term sum like `x^4-1` is also
    /// accepted. Integer coefficients only; residues are reduced mod p.
    pub fn parse(field: Field, s: &str) -> Result<Polynomial> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if compact.contains(',') || !compact.contains('x') {
            let coeffs: Result<Vec<i64>> = compact
                .split(',')
                .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad coefficient {t}"))))
                .collect();
            return Ok(Polynomial::from_ints(field, &coeffs?));
        }
        let mut parser = ProductParser { field, bytes: compact.as_bytes(), pos: 0 };
        let poly = parser.parse_product()?;
        if parser.pos != parser.bytes.len() {
            return Err(Error::Parse(format!(
                "trailing input at byte {} of {compact}",
                parser.pos
            )));
        }
        Ok(poly)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "x")?,
                1 => write!(f, "{c}*x")?,
                _ if c.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field)
    }
}

/// Recursive-descent parser for `factor ('*' factor)*` with
/// `factor := '(' sum ')' ['^' int]` and sums of integer-coefficient terms.
struct ProductParser<'a> {
    field: Field,
    bytes: &'a [u8],
    pos: usize,
}

impl ProductParser<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn parse_product(&mut self) -> Result<Polynomial> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.parse_factor()?)?;
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Polynomial> {
        let base = if self.peek() == Some(b'(') {
            self.pos += 1;
            let inner = self.parse_sum()?;
            if self.peek() != Some(b')') {
                return Err(Error::Parse("expected ')'".into()));
            }
            self.pos += 1;
            inner
        } else {
            self.parse_sum()?
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.parse_uint()?;
            return base.pow(e as u32);
        }
        Ok(base)
    }

    fn parse_sum(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.field);
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1i64
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1i64
                }
                _ => 1i64,
            };
            let term = self.parse_term(sign)?;
            acc = acc.add(&term)?;
            match self.peek() {
                Some(b'+') | Some(b'-') => continue,
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self, sign: i64) -> Result<Polynomial> {
        let mut coeff: Option<i64> = None;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            coeff = Some(self.parse_uint()? as i64);
            if self.peek() == Some(b'*') {
                self.pos += 1;
            }
        }
        if self.peek() == Some(b'x') {
            self.pos += 1;
            let deg = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.parse_uint()? as usize
            } else {
                1
            };
            let c = self.field.element(sign * coeff.unwrap_or(1));
            return Polynomial::monomial(self.field, c, deg);
        }
        match coeff {
            Some(v) => Ok(Polynomial::constant(self.field.element(sign * v))),
            None => Err(Error::Parse(format!("expected term at byte {}", self.pos))),
        }
    }

    fn parse_uint(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected integer at byte {start}")));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| Error::Parse("integer too large".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn random_poly(field: Field, max_deg: usize, rng: &mut StdRng) -> Polynomial {
        let deg = rng.gen_range(0..=max_deg);
        let coeffs = (0..=deg)
            .map(|_| field.element_of_rank(rng.gen_range(0..field.order())))
            .collect();
        Polynomial::new(field, coeffs).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let f5 = gf(5);
        let a = Polynomial::from_ints(f5, &[-1, 1]);
        let b = Polynomial::from_ints(f5, &[1, 1]);
        assert_eq!(a.mul(&b).unwrap(), Polynomial::from_ints(f5, &[4, 0, 1]));
        assert!(a.mul(&Polynomial::zero(f5)).unwrap().is_zero());
        let f3 = gf(3);
        let c = Polynomial::from_ints(f3, &[-1, 1]);
        assert_eq!(c.mul(&c).unwrap(), Polynomial::from_ints(f3, &[1, 1, 1]));
    }

    #[test]
    fn divmod_examples() {
        let f5 = gf(5);
        let num = Polynomial::from_ints(f5, &[-1, 0, 0, 0, 1]);
        let den = Polynomial::from_ints(f5, &[-1, 1]);
        let (q, r) = num.divmod(&den).unwrap();
        assert_eq!(q, Polynomial::from_ints(f5, &[1, 1, 1, 1]));
        assert!(r.is_zero());

        let (q, r) = den.divmod(&den).unwrap();
        assert_eq!(q, Polynomial::one(f5));
        assert!(r.is_zero());

        let small = Polynomial::from_ints(f5, &[1, 0, 1]);
        let big = Polynomial::from_ints(f5, &[1, 0, 0, 1]);
        let (q, r) = small.divmod(&big).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, small);

        assert!(matches!(small.divmod(&Polynomial::zero(f5)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn derivative_examples() {
        let f5 = gf(5);
        let a = Polynomial::from_ints(f5, &[0, 2, 0, 1]); // x^3 + 2x
        assert_eq!(a.derivative(1), Polynomial::from_ints(f5, &[2, 0, 3]));
        assert_eq!(a.derivative(0), a);
        let mut xp = vec![0i64; 6];
        xp[5] = 1;
        assert!(Polynomial::from_ints(f5, &xp).derivative(1).is_zero());
    }

    #[test]
    fn eval_examples() {
        let f3 = gf(3);
        let a = Polynomial::from_ints(f3, &[1, 1, 1]);
        assert!(a.eval(&f3.one()).unwrap().is_zero());
        assert_eq!(a.eval(&f3.zero()).unwrap(), f3.one());
        // root by construction, evaluated in the extension
        let f9 = Field::quadratic(3).unwrap();
        let w2 = f9.w().pow(2);
        let lin = Polynomial::linear_from_root(w2);
        assert!(lin.eval(&w2).unwrap().is_zero());
        // lifting: a GF(3) polynomial evaluated at a GF(9) point
        assert_eq!(a.eval(&w2).unwrap(), w2 * w2 + w2 + f9.one());
    }

    #[test]
    fn gcd_examples() {
        let f5 = gf(5);
        let lin = Polynomial::from_ints(f5, &[-1, 1]);
        let sq = lin.pow(2).unwrap();
        let cube = lin.pow(3).unwrap();
        assert_eq!(sq.gcd(&cube).unwrap(), sq);
        let a = Polynomial::from_ints(f5, &[3, 0, 2]);
        assert_eq!(a.gcd(&Polynomial::zero(f5)).unwrap(), a.make_monic().unwrap());
        let q = Polynomial::from_ints(f5, &[1, 0, 1]);
        let d = Polynomial::from_ints(f5, &[2, 1]);
        assert_eq!(q.gcd(&d).unwrap(), d);
        assert!(matches!(
            Polynomial::zero(f5).gcd(&Polynomial::zero(f5)),
            Err(Error::BothZero)
        ));
    }

    #[test]
    fn ring_axioms_random() {
        let mut rng = StdRng::seed_from_u64(3);
        for field in [gf(3), gf(7), Field::quadratic(3).unwrap()] {
            for _ in 0..1000 {
                let a = random_poly(field, 8, &mut rng);
                let b = random_poly(field, 8, &mut rng);
                let c = random_poly(field, 8, &mut rng);
                assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
                assert_eq!(
                    a.mul(&b).unwrap().mul(&c).unwrap(),
                    a.mul(&b.mul(&c).unwrap()).unwrap()
                );
                assert_eq!(
                    a.mul(&b.add(&c).unwrap()).unwrap(),
                    a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn divmod_roundtrip_random() {
        let mut rng = StdRng::seed_from_u64(5);
        for field in [gf(3), gf(5), gf(13)] {
            for _ in 0..1000 {
                let a = random_poly(field, 10, &mut rng);
                let b = random_poly(field, 6, &mut rng);
                if b.is_zero() {
                    continue;
                }
                let (q, r) = a.divmod(&b).unwrap();
                assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
                if let (Some(dr), Some(db)) = (r.degree(), b.degree()) {
                    assert!(dr < db);
                }
            }
        }
    }

    #[test]
    fn multiplicity_derivative_link() {
        // (x-r)^t * u with u(r) != 0: derivatives 0..t vanish at r, the t-th
        // does not. Holds exactly for t <= p-1.
        let mut rng = StdRng::seed_from_u64(9);
        for field in [gf(5), gf(7), gf(13)] {
            let p = field.p();
            for _ in 0..200 {
                let r = field.element_of_rank(rng.gen_range(0..p));
                let t = rng.gen_range(0..p.min(6)) as u32;
                let u = loop {
                    let u = random_poly(field, 4, &mut rng);
                    if !u.is_zero() && !u.eval(&r).unwrap().is_zero() {
                        break u;
                    }
                };
                let f = Polynomial::linear_from_root(r).pow(t).unwrap().mul(&u).unwrap();
                for k in 0..t {
                    assert!(f.derivative(k).eval(&r).unwrap().is_zero(), "k={k} t={t}");
                }
                assert!(!f.derivative(t).eval(&r).unwrap().is_zero(), "t={t}");
            }
        }
    }

    #[test]
    fn parse_both_formats() {
        let f3 = gf(3);
        let comma = Polynomial::parse(f3, "-1,0,0,1").unwrap();
        assert_eq!(comma, Polynomial::from_ints(f3, &[-1, 0, 0, 1]));
        let f7 = gf(7);
        let product = Polynomial::parse(f7, "(x-1)^4*(x-2)^2*(x-4)").unwrap();
        let manual = Polynomial::linear_from_root(f7.one())
            .pow(4)
            .unwrap()
            .mul(&Polynomial::linear_from_root(f7.element(2)).pow(2).unwrap())
            .unwrap()
            .mul(&Polynomial::linear_from_root(f7.element(4)))
            .unwrap();
        assert_eq!(product, manual);
        assert_eq!(product.degree(), Some(7));
        let bare = Polynomial::parse(f7, "x^4-1").unwrap();
        assert_eq!(bare, Polynomial::from_ints(f7, &[-1, 0, 0, 0, 1]));
        let spaced = Polynomial::parse(f3, "(x - 1) * (x^2 + 1)").unwrap();
        assert_eq!(spaced, Polynomial::from_ints(f3, &[-1, 1, -1, 1]));
        assert!(Polynomial::parse(f3, "(x-1").is_err());
    }

    #[test]
    fn fold_mod_xl() {
        let f5 = gf(5);
        // x^4 + x + 2 mod (x^3 - 1) = x + (x + 2) = 2x + 2... exponent 4 -> 1
        let a = Polynomial::from_ints(f5, &[2, 1, 0, 0, 1]);
        assert_eq!(a.fold_mod_xl_minus_one(3), Polynomial::from_ints(f5, &[2, 2]));
    }
}
