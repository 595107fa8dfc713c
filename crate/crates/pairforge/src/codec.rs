//! Constacyclic codes: construction from (n, eta, g), encoding, parity-check
//! matrices, codeword enumeration, and the simple-root companion codes of a
//! repeated-root factorization profile.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::polyring::Polynomial;
use crate::symbols::{search_space, PackedCode, SymbolOps};

/// Enumeration guard: refuse q^k beyond this unless forced.
pub const ENUMERATION_GUARD: u128 = 1 << 36;

#[derive(Clone)]
pub struct ConstacyclicCode {
    field: Field,
    n: usize,
    eta: FieldElement,
    g: Polynomial,
    k: usize,
}

impl ConstacyclicCode {
    /// Build the code <g> of length n with shift constant eta. The generator
    /// is normalized monic and must divide x^n - eta exactly.
    pub fn new(n: usize, eta: FieldElement, g: &Polynomial) -> Result<ConstacyclicCode> {
        let field = g.field();
        if eta.field() != field {
            return Err(Error::FieldMismatch);
        }
        if eta.is_zero() {
            return Err(Error::ZeroEta);
        }
        if n < 2 {
            return Err(Error::RangeViolation(format!("code length {n} < 2")));
        }
        let deg = g.degree().ok_or(Error::NotADivisor)?;
        if deg == 0 || deg > n {
            return Err(Error::NotADivisor);
        }
        let g = g.make_monic()?;
        let xn = Polynomial::x_pow_minus(field, n, eta)?;
        if !g.divides(&xn)? {
            return Err(Error::NotADivisor);
        }
        Ok(ConstacyclicCode { field, n, eta, g, k: n - deg })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn eta(&self) -> FieldElement {
        self.eta
    }

    pub fn generator(&self) -> &Polynomial {
        &self.g
    }

    pub fn is_cyclic(&self) -> bool {
        self.eta.is_one()
    }

    /// q^k when it fits in a u128.
    pub fn codeword_count(&self) -> Option<u128> {
        search_space(self.field.order(), self.k)
    }

    /// The check polynomial h = (x^n - eta) / g.
    pub fn check_polynomial(&self) -> Polynomial {
        let xn = Polynomial::x_pow_minus(self.field, self.n, self.eta).unwrap();
        let (h, r) = xn.divmod(&self.g).unwrap();
        debug_assert!(r.is_zero());
        h
    }

    /// Multiply a message polynomial by g modulo x^n - eta.
    pub fn encode_poly(&self, f: &Polynomial) -> Result<Polynomial> {
        let prod = f.mul(&self.g)?;
        Ok(self.reduce_mod_xn(&prod))
    }

    fn reduce_mod_xn(&self, a: &Polynomial) -> Polynomial {
        // x^n = eta, applied repeatedly
        let mut out = vec![self.field.zero(); self.n];
        for (i, &c) in a.coeffs().iter().enumerate() {
            let mut c = c;
            let mut i = i;
            while i >= self.n {
                i -= self.n;
                c = c * self.eta;
            }
            out[i] = out[i] + c;
        }
        Polynomial::new(self.field, out).unwrap()
    }

    /// Encode a length-k message; the codeword is the coefficient vector of
    /// f(x) g(x) mod (x^n - eta) padded to length n.
    pub fn encode(&self, msg: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if msg.len() != self.k {
            return Err(Error::LengthMismatch { expected: self.k, got: msg.len() });
        }
        let f = Polynomial::new(self.field, msg.to_vec())?;
        let c = self.encode_poly(&f)?;
        let mut out = c.coeffs().to_vec();
        out.resize(self.n, self.field.zero());
        Ok(out)
    }

    /// Recover the message from a codeword: exact division by g.
    pub fn decode_message(&self, codeword: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if codeword.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: codeword.len() });
        }
        let c = Polynomial::new(self.field, codeword.to_vec())?;
        let (f, r) = c.divmod(&self.g)?;
        if !r.is_zero() {
            return Err(Error::RangeViolation("word is not a codeword".into()));
        }
        let mut out = f.coeffs().to_vec();
        out.resize(self.k, self.field.zero());
        Ok(out)
    }

    /// The eta-constacyclic shift (eta*x_{n-1}, x_0, ..., x_{n-2}).
    pub fn eta_shift(&self, word: &[FieldElement]) -> Vec<FieldElement> {
        let mut out = Vec::with_capacity(word.len());
        out.push(self.eta * word[word.len() - 1]);
        out.extend_from_slice(&word[..word.len() - 1]);
        out
    }

    pub fn contains(&self, word: &[FieldElement]) -> Result<bool> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: word.len() });
        }
        let c = Polynomial::new(self.field, word.to_vec())?;
        let (_, r) = c.divmod(&self.g)?;
        Ok(r.is_zero())
    }

    /// Generator matrix: row i is x^i * g, i < k (no reduction needed).
    pub fn generator_matrix(&self) -> Vec<Vec<FieldElement>> {
        let mut rows = Vec::with_capacity(self.k);
        for i in 0..self.k {
            let mut row = vec![self.field.zero(); self.n];
            for (j, &c) in self.g.coeffs().iter().enumerate() {
                row[i + j] = c;
            }
            rows.push(row);
        }
        rows
    }

    /// Parity-check matrix: n-k rows, row i carrying the reciprocal of the
    /// check polynomial shifted by i. Row-reduces internally to confirm the
    /// rank is exactly n-k.
    pub fn parity_check_matrix(&self) -> Vec<Vec<FieldElement>> {
        let h = self.check_polynomial();
        let r = self.n - self.k;
        let mut rows = Vec::with_capacity(r);
        for i in 0..r {
            let mut row = vec![self.field.zero(); self.n];
            for j in 0..=self.k {
                // reciprocal: coefficient of x^j is h_{k-j}
                row[i + j] = h.coeff(self.k - j);
            }
            rows.push(row);
        }
        let rank = matrix_rank(self.field, &rows);
        assert_eq!(rank, r, "parity-check matrix rank {rank} != n-k = {r}");
        rows
    }

    pub(crate) fn packed(&self) -> PackedCode {
        let ops = SymbolOps::new(&self.field);
        let rows = self
            .generator_matrix()
            .iter()
            .map(|row| row.iter().map(|e| self.field.rank_of(e)).collect())
            .collect();
        PackedCode::new(ops, self.n, rows)
    }

    pub(crate) fn packed_parity_cols(&self) -> Vec<Vec<u64>> {
        let h = self.parity_check_matrix();
        (0..self.n)
            .map(|j| h.iter().map(|row| self.field.rank_of(&row[j])).collect())
            .collect()
    }

    fn guard(&self, force: bool) -> Result<()> {
        match self.codeword_count() {
            Some(c) if c <= ENUMERATION_GUARD => Ok(()),
            _ if force => Ok(()),
            _ => Err(Error::SearchSpaceTooLarge { q: self.field.order(), k: self.k }),
        }
    }

    /// Visit all q^k codewords exactly once in lexicographic message order.
    /// Refuses q^k > 2^36 unless forced.
    pub fn enumerate_codewords<F>(&self, force: bool, visitor: F) -> Result<u64>
    where
        F: FnMut(&[FieldElement]),
    {
        self.enumerate_codewords_with_prefix(&[], force, visitor)
    }

    /// Partitioned variant: only messages starting with `prefix` are visited.
    pub fn enumerate_codewords_with_prefix<F>(
        &self,
        prefix: &[FieldElement],
        force: bool,
        mut visitor: F,
    ) -> Result<u64>
    where
        F: FnMut(&[FieldElement]),
    {
        if prefix.len() > self.k {
            return Err(Error::LengthMismatch { expected: self.k, got: prefix.len() });
        }
        self.guard(force)?;
        let packed = self.packed();
        let prefix_ranks: Vec<u64> = prefix.iter().map(|e| self.field.rank_of(e)).collect();
        let mut buf = vec![self.field.zero(); self.n];
        let mut count = 0u64;
        packed.enumerate(&prefix_ranks, |_, cw| {
            for (b, &r) in buf.iter_mut().zip(cw) {
                *b = self.field.element_of_rank(r);
            }
            visitor(&buf);
            count += 1;
            true
        });
        Ok(count)
    }
}

/// Gaussian-elimination rank over the field.
pub(crate) fn matrix_rank(field: Field, rows: &[Vec<FieldElement>]) -> usize {
    let mut m: Vec<Vec<FieldElement>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].inv().unwrap();
        for j in col..ncols {
            m[rank][j] = m[rank][j] * inv;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col];
                for j in col..ncols {
                    let sub = f * m[rank][j];
                    m[r][j] = m[r][j] - sub;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
        let _ = field;
    }
    rank
}

/// Repeated-root structure of a cyclic code: n = l * p^e with gcd(l, p) = 1
/// and the factorization of g into distinct monic irreducibles.
#[derive(Clone)]
pub struct RepeatedRootProfile {
    field: Field,
    l: usize,
    e: u32,
    factors: Vec<(Polynomial, u32)>,
    g: Polynomial,
}

/// Companion code outcome: the two sentinel cases are explicit so the
/// distance minimization never manipulates infinities.
pub enum CompanionCode {
    /// g_t = x^l - 1: only the all-zero codeword (d_H treated as infinite).
    Zero,
    /// g_t = 1: the full space, d_H = 1.
    Full,
    Code(ConstacyclicCode),
}

impl RepeatedRootProfile {
    /// Discover the profile of a cyclic code by factoring its generator into
    /// linear factors over the base field plus irreducible quadratics found
    /// via the quadratic extension. Degree > 2 irreducible factors are
    /// rejected.
    pub fn from_code(code: &ConstacyclicCode) -> Result<RepeatedRootProfile> {
        if !code.is_cyclic() {
            return Err(Error::ProfileInvalid("repeated-root profiles need a cyclic code (eta = 1)".into()));
        }
        let field = code.field();
        let p = field.p() as usize;
        let mut l = code.n();
        let mut e = 0u32;
        while l % p == 0 {
            l /= p;
            e += 1;
        }

        let mut rem = code.generator().clone();
        let mut factors: Vec<(Polynomial, u32)> = Vec::new();
        // linear factors, canonical element order
        for r in field.elements() {
            if rem.degree() == Some(0) {
                break;
            }
            let lin = Polynomial::linear_from_root(r);
            let mut mult = 0u32;
            while rem.eval(&r).unwrap().is_zero() {
                let (q, rr) = rem.divmod(&lin).unwrap();
                debug_assert!(rr.is_zero());
                rem = q;
                mult += 1;
            }
            if mult > 0 {
                factors.push((lin, mult));
            }
        }
        // conjugate root pairs in GF(p^2) give the irreducible quadratics
        if rem.degree() > Some(0) && field.m() == 1 {
            let ext = Field::quadratic(field.p())?;
            let lifted = rem.lift_to(ext)?;
            for delta in ext.elements() {
                if rem.degree() == Some(0) {
                    break;
                }
                if delta.residues().1 == 0 {
                    continue; // base-field roots already extracted
                }
                if !lifted.eval(&delta).unwrap().is_zero() {
                    continue;
                }
                let conj = delta.frobenius();
                let quad = Polynomial::linear_from_root(delta)
                    .mul(&Polynomial::linear_from_root(conj))?
                    .project_to_base()?;
                let mut mult = 0u32;
                loop {
                    let (q, rr) = rem.divmod(&quad).unwrap();
                    if !rr.is_zero() {
                        break;
                    }
                    rem = q;
                    mult += 1;
                }
                if mult > 0 {
                    factors.push((quad, mult));
                }
            }
        }
        if rem.degree() != Some(0) {
            return Err(Error::ProfileInvalid(
                "generator has an irreducible factor of degree > 2".into(),
            ));
        }
        Self::from_parts(field, l, e, factors, code.generator().clone())
    }

    fn from_parts(
        field: Field,
        l: usize,
        e: u32,
        factors: Vec<(Polynomial, u32)>,
        g: Polynomial,
    ) -> Result<RepeatedRootProfile> {
        // every m_i must divide x^l - 1 and the product must rebuild g
        let xl = Polynomial::x_pow_minus(field, l, field.one())?;
        let mut product = Polynomial::one(field);
        for (m, mult) in &factors {
            if !m.divides(&xl)? {
                return Err(Error::ProfileInvalid(format!("factor {m} does not divide x^{l}-1")));
            }
            product = product.mul(&m.pow(*mult)?)?;
        }
        if product != g {
            return Err(Error::ProfileInvalid("factorization does not rebuild g".into()));
        }
        Ok(RepeatedRootProfile { field, l, e, factors, g })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn n(&self) -> usize {
        self.l * (self.field.p() as usize).pow(self.e)
    }

    pub fn generator(&self) -> &Polynomial {
        &self.g
    }

    /// (irreducible factor, multiplicity) pairs in canonical root order.
    pub fn factors(&self) -> &[(Polynomial, u32)] {
        &self.factors
    }

    pub fn max_t(&self) -> u64 {
        (self.field.p() as u64).pow(self.e) - 1
    }

    /// The simple-root companion code of the factors with multiplicity > t.
    pub fn companion(&self, t: u64) -> Result<CompanionCode> {
        if t > self.max_t() {
            return Err(Error::TOutOfRange { t, max: self.max_t() });
        }
        let surviving: Vec<&Polynomial> = self
            .factors
            .iter()
            .filter(|(_, mult)| u64::from(*mult) > t)
            .map(|(m, _)| m)
            .collect();
        if surviving.is_empty() {
            return Ok(CompanionCode::Full);
        }
        let mut gt = Polynomial::one(self.field);
        for m in surviving {
            gt = gt.mul(m)?;
        }
        if gt.degree() == Some(self.l) {
            // g_t = x^l - 1 exactly
            return Ok(CompanionCode::Zero);
        }
        Ok(CompanionCode::Code(ConstacyclicCode::new(self.l, self.field.one(), &gt)?))
    }
}

/// JSON description of a code, the CLI input format:
/// `{"p":7,"m":1,"n":21,"eta":"1","g":"(x-1)^4*(x-2)^2*(x-4)"}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeSpec {
    pub p: u64,
    pub m: u32,
    pub n: usize,
    pub eta: String,
    pub g: String,
    /// Optional modulus coefficients (ascending, monic) for m = 2.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<i64>>,
}

impl CodeSpec {
    pub fn to_code(&self) -> Result<ConstacyclicCode> {
        let field = Field::new(self.p, self.m, self.modulus.as_deref())?;
        let eta = field.parse_element(&self.eta)?;
        let g = Polynomial::parse(field, &self.g)?;
        ConstacyclicCode::new(self.n, eta, &g)
    }

    pub fn from_json(s: &str) -> Result<CodeSpec> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("code spec: {e}")))
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

    /// Example (1): roots lifted from GF(9), product taken over GF(3).
    fn example1_code() -> ConstacyclicCode {
        let f9 = Field::quadratic(3).unwrap();
        let w = f9.w();
        let g_ext = Polynomial::linear_from_root(f9.one())
            .mul(&Polynomial::linear_from_root(w.pow(2)))
            .unwrap()
            .mul(&Polynomial::linear_from_root(w.pow(6)))
            .unwrap();
        let g = g_ext.project_to_base().unwrap();
        ConstacyclicCode::new(12, gf(3).one(), &g).unwrap()
    }

    #[test]
    fn code_construction_examples() {
        let c = example1_code();
        assert_eq!((c.n(), c.k()), (12, 9));
        // g = (x-1)(x^2+1) over GF(3)
        assert_eq!(c.generator(), &Polynomial::from_ints(gf(3), &[-1, 1, -1, 1]));

        // Thm 3.2 shape: n = 4p, g = (x-1)(x^4-1), dimension 4p-5
        for p in [3u64, 5, 7] {
            let f = gf(p);
            let g = Polynomial::parse(f, "(x-1)*(x^4-1)").unwrap();
            let c = ConstacyclicCode::new(4 * p as usize, f.one(), &g).unwrap();
            assert_eq!(c.k(), 4 * p as usize - 5);
        }

        // x^4 - 1 = (x^2+1)(x^2-1) over GF(3)
        let f3 = gf(3);
        let c = ConstacyclicCode::new(4, f3.one(), &Polynomial::from_ints(f3, &[1, 0, 1])).unwrap();
        assert_eq!(c.k(), 2);

        // x+1 does not divide x^3 - 1 over GF(3)
        let bad = ConstacyclicCode::new(3, f3.one(), &Polynomial::from_ints(f3, &[1, 1]));
        assert!(matches!(bad, Err(Error::NotADivisor)));
        let zero_eta = ConstacyclicCode::new(4, f3.zero(), &Polynomial::from_ints(f3, &[1, 1]));
        assert!(matches!(zero_eta, Err(Error::ZeroEta)));
    }

    #[test]
    fn encode_examples() {
        let f3 = gf(3);
        let g = Polynomial::from_ints(f3, &[-1, 1]);
        let c = ConstacyclicCode::new(4, f3.one(), &g).unwrap();
        // zero message
        let z = c.encode(&vec![f3.zero(); 3]).unwrap();
        assert!(z.iter().all(|e| e.is_zero()));
        // unit message returns g padded
        let mut e0 = vec![f3.zero(); 3];
        e0[0] = f3.one();
        let cw = c.encode(&e0).unwrap();
        assert_eq!(cw, vec![f3.element(-1), f3.one(), f3.zero(), f3.zero()]);
        // msg = (1,1,1): f*g = x^3 - 1
        let ones = vec![f3.one(); 3];
        let cw = c.encode(&ones).unwrap();
        assert_eq!(cw, vec![f3.element(2), f3.zero(), f3.zero(), f3.one()]);
        assert!(matches!(
            c.encode(&[f3.one()]),
            Err(Error::LengthMismatch { expected: 3, got: 1 })
        ));
        // message recovery round-trips
        assert_eq!(c.decode_message(&cw).unwrap(), ones);
    }

    #[test]
    fn parity_check_properties() {
        // [3,2] code over GF(2): h = x^2+x+1, H is one row [1,1,1] of rank 1
        let f2 = gf(2);
        let c = ConstacyclicCode::new(3, f2.one(), &Polynomial::from_ints(f2, &[1, 1])).unwrap();
        let h = c.parity_check_matrix();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0], vec![f2.one(), f2.one(), f2.one()]);

        // the [3,1] repetition code has a rank-2 parity check
        let rep = ConstacyclicCode::new(3, f2.one(), &Polynomial::from_ints(f2, &[1, 1, 1])).unwrap();
        assert_eq!(rep.parity_check_matrix().len(), 2);

        // Example (4): [21,14] over GF(7), H has 7 rows of full rank
        let f7 = gf(7);
        let g = Polynomial::parse(f7, "(x-1)^4*(x-2)^2*(x-4)").unwrap();
        let c = ConstacyclicCode::new(21, f7.one(), &g).unwrap();
        let h = c.parity_check_matrix();
        assert_eq!(h.len(), 7);
        assert_eq!(matrix_rank(f7, &h), 7);

        // H annihilates every generator row
        for row in c.generator_matrix() {
            for hr in &h {
                let dot = hr
                    .iter()
                    .zip(&row)
                    .fold(f7.zero(), |acc, (&a, &b)| acc + a * b);
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn constacyclic_closure_and_shift_rows() {
        let mut rng = StdRng::seed_from_u64(23);
        let c = example1_code();
        let h = c.parity_check_matrix();
        let f3 = c.field();
        for _ in 0..50 {
            let msg: Vec<FieldElement> = (0..c.k()).map(|_| f3.element(rng.gen_range(0..3))).collect();
            let cw = c.encode(&msg).unwrap();
            let shifted = c.eta_shift(&cw);
            for hr in &h {
                let dot = hr
                    .iter()
                    .zip(&shifted)
                    .fold(f3.zero(), |acc, (&a, &b)| acc + a * b);
                assert!(dot.is_zero(), "shift left the code");
            }
            assert!(c.contains(&shifted).unwrap());
        }
        // encode(e_i) is the i-th shift of encode(e_0)
        let mut expect = {
            let mut e0 = vec![f3.zero(); c.k()];
            e0[0] = f3.one();
            c.encode(&e0).unwrap()
        };
        for i in 1..c.k() {
            expect = c.eta_shift(&expect);
            let mut ei = vec![f3.zero(); c.k()];
            ei[i] = f3.one();
            assert_eq!(c.encode(&ei).unwrap(), expect);
        }
    }

    #[test]
    fn enumeration_counts() {
        let c = example1_code();
        let mut count = 0u64;
        c.enumerate_codewords(false, |_| count += 1).unwrap();
        assert_eq!(count, 19683); // 3^9

        // k = 1: the q scalar multiples of g
        let f5 = gf(5);
        let g = Polynomial::parse(f5, "(x-1)*(x+1)*(x-2)").unwrap(); // divides x^4-1 over GF(5)
        let c41 = ConstacyclicCode::new(4, f5.one(), &g).unwrap();
        assert_eq!(c41.k(), 1);
        let mut seen = Vec::new();
        c41.enumerate_codewords(false, |cw| seen.push(cw.to_vec())).unwrap();
        assert_eq!(seen.len(), 5);

        // [21,14] over GF(7) trips the guard
        let f7 = gf(7);
        let g = Polynomial::parse(f7, "(x-1)^4*(x-2)^2*(x-4)").unwrap();
        let big = ConstacyclicCode::new(21, f7.one(), &g).unwrap();
        assert!(matches!(
            big.enumerate_codewords(false, |_| {}),
            Err(Error::SearchSpaceTooLarge { q: 7, k: 14 })
        ));
    }

    #[test]
    fn profile_discovery_and_companions() {
        // Thm 3.2 profile over GF(5): g = (x-1)(x^4-1) = (x-1)^2 (x+1)(x-2)(x-3)
        let f5 = gf(5);
        let g = Polynomial::parse(f5, "(x-1)*(x^4-1)").unwrap();
        let code = ConstacyclicCode::new(20, f5.one(), &g).unwrap();
        let prof = RepeatedRootProfile::from_code(&code).unwrap();
        assert_eq!((prof.l(), prof.e()), (4, 1));
        let mults: Vec<u32> = prof.factors().iter().map(|(_, m)| *m).collect();
        assert_eq!(mults, vec![2, 1, 1, 1]); // (x-1)^2 first in canonical root order

        // t = 1: only (x-1) survives -> the [4,3] code
        match prof.companion(1).unwrap() {
            CompanionCode::Code(c) => {
                assert_eq!((c.n(), c.k()), (4, 3));
                assert_eq!(c.generator(), &Polynomial::from_ints(f5, &[-1, 1]));
            }
            _ => panic!("expected a real companion code"),
        }
        // t = 0: all factors survive -> x^4 - 1 -> zero code
        assert!(matches!(prof.companion(0).unwrap(), CompanionCode::Zero));
        // t = 4: nothing survives -> full space
        assert!(matches!(prof.companion(4).unwrap(), CompanionCode::Full));
        assert!(matches!(prof.companion(5), Err(Error::TOutOfRange { t: 5, max: 4 })));
    }

    #[test]
    fn profile_with_irreducible_quadratic() {
        // Example (1) generator over GF(3): (x-1)(x^2+1), x^2+1 irreducible mod 3
        let c = example1_code();
        let prof = RepeatedRootProfile::from_code(&c).unwrap();
        assert_eq!((prof.l(), prof.e()), (4, 1));
        assert_eq!(prof.factors().len(), 2);
        let f3 = gf(3);
        assert_eq!(prof.factors()[0].0, Polynomial::from_ints(f3, &[-1, 1]));
        assert_eq!(prof.factors()[1].0, Polynomial::from_ints(f3, &[1, 0, 1]));
    }

    #[test]
    fn code_spec_json() {
        let spec = CodeSpec::from_json(
            r#"{"p":7,"m":1,"n":21,"eta":"1","g":"(x-1)^4*(x-2)^2*(x-4)"}"#,
        )
        .unwrap();
        let code = spec.to_code().unwrap();
        assert_eq!((code.n(), code.k()), (21, 14));
        assert!(code.is_cyclic());
    }
}
