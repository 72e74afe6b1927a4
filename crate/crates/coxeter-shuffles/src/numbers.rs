//! Stirling-type coefficient families and q-numbers.
//!
//! All values are exact [`BigInt`]s; the tables grow super-exponentially and
//! no floating point is used anywhere. Each family is defined by its
//! recursion; the closed forms are asserted against the recursions in tests.

use num::bigint::BigInt;
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The coefficient families used to define shuffles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableKind {
    /// Stirling numbers of the second kind: S(a,j) = j·S(a-1,j) + S(a-1,j-1).
    Plain,
    /// Signed Stirling numbers: S(a,j) = 2j·S(a-1,j) + S(a-1,j-1).
    Signed,
    /// q-Stirling numbers: S(a,j) = [j]·S(a-1,j) + q^{j-1}·S(a-1,j-1).
    QA,
    /// Symplectic q-variant: S(a,j) = (1+q^{2n-j})[j]·S(a-1,j) + q^{j-1}·S(a-1,j-1).
    QSymplectic,
    /// Orthogonal q-variant: S(a,j) = (1+q^{2n-j-1})[j]·S(a-1,j) + q^{j-1}·S(a-1,j-1).
    QOrthogonal,
}

impl TableKind {
    pub fn needs_q(self) -> bool {
        !matches!(self, TableKind::Plain | TableKind::Signed)
    }

    pub fn needs_n(self) -> bool {
        matches!(self, TableKind::QSymplectic | TableKind::QOrthogonal)
    }
}

/// A fully materialized coefficient table indexed by (a, j).
///
/// The symplectic and orthogonal recursions depend on the ambient rank n, so
/// the table is keyed by it.
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    pub kind: TableKind,
    pub q: Option<u64>,
    pub n: Option<u64>,
    pub max_a: usize,
    values: Vec<Vec<BigInt>>,
}

impl CoefficientTable {
    /// Build the table for all 0 <= j <= a <= max_a from the defining recursion.
    pub fn build(kind: TableKind, max_a: usize, q: Option<u64>, n: Option<u64>) -> Result<Self> {
        if kind.needs_q() && q.is_none() {
            return Err(Error::Internal(format!("{kind:?} table requires q")));
        }
        if kind.needs_n() && n.is_none() {
            return Err(Error::Internal(format!("{kind:?} table requires n")));
        }
        // The symplectic/orthogonal recursion weights have exponents
        // 2n - j and 2n - j - 1; rows stop where those would go negative.
        let j_cap = match kind {
            TableKind::QSymplectic => 2 * n.unwrap() as usize,
            TableKind::QOrthogonal => 2 * n.unwrap() as usize - 1,
            _ => usize::MAX,
        };
        let mut values: Vec<Vec<BigInt>> = Vec::with_capacity(max_a + 1);
        values.push(vec![BigInt::one()]); // S(0,0) = 1
        for a in 1..=max_a {
            let mut row = Vec::with_capacity(a + 1);
            row.push(BigInt::zero()); // S(a,0) = 0 for a > 0
            for j in 1..=a.min(j_cap) {
                let same = if j <= a - 1 {
                    &values[a - 1][j] * recursion_weight(kind, j as u64, q, n)
                } else {
                    BigInt::zero()
                };
                let carry = &values[a - 1][j - 1] * carry_weight(kind, j as u64, q);
                row.push(same + carry);
            }
            values.push(row);
        }
        Ok(CoefficientTable {
            kind,
            q,
            n,
            max_a,
            values,
        })
    }

    /// Table entry, zero outside the triangle (j > a) and outside the rows
    /// where the kind's recursion is defined.
    pub fn get(&self, a: usize, j: usize) -> BigInt {
        if a <= self.max_a && j < self.values[a].len() {
            self.values[a][j].clone()
        } else {
            BigInt::zero()
        }
    }

    /// Rows as (a, j, value) triples in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.values
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().enumerate().map(move |(j, v)| (a, j, v)))
    }
}

/// Coefficient multiplying S(a-1, j) in the recursion.
fn recursion_weight(kind: TableKind, j: u64, q: Option<u64>, n: Option<u64>) -> BigInt {
    match kind {
        TableKind::Plain => BigInt::from(j),
        TableKind::Signed => BigInt::from(2 * j),
        TableKind::QA => q_number(j, q.unwrap()),
        TableKind::QSymplectic => {
            let (q, n) = (q.unwrap(), n.unwrap());
            (BigInt::one() + BigInt::from(q).pow((2 * n - j) as u32)) * q_number(j, q)
        }
        TableKind::QOrthogonal => {
            let (q, n) = (q.unwrap(), n.unwrap());
            (BigInt::one() + BigInt::from(q).pow((2 * n - j - 1) as u32)) * q_number(j, q)
        }
    }
}

/// Coefficient multiplying S(a-1, j-1) in the recursion.
fn carry_weight(kind: TableKind, j: u64, q: Option<u64>) -> BigInt {
    match kind {
        TableKind::Plain | TableKind::Signed => BigInt::one(),
        _ => BigInt::from(q.unwrap()).pow((j - 1) as u32),
    }
}

/// Stirling number of the second kind S(a, j).
pub fn stirling2(a: usize, j: usize) -> BigInt {
    if j > a {
        return BigInt::zero();
    }
    CoefficientTable::build(TableKind::Plain, a, None, None)
        .expect("plain table")
        .get(a, j)
}

/// Signed Stirling number: partitions of an a-set into j nonempty blocks,
/// each block split into an unordered pair of subsets.
pub fn signed_stirling(a: usize, j: usize) -> BigInt {
    if j > a {
        return BigInt::zero();
    }
    CoefficientTable::build(TableKind::Signed, a, None, None)
        .expect("signed table")
        .get(a, j)
}

/// The q-number [j] = 1 + q + ... + q^{j-1}; [0] = 0.
pub fn q_number(j: u64, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let mut acc = BigInt::zero();
    let mut pow = BigInt::one();
    for _ in 0..j {
        acc += &pow;
        pow *= &q;
    }
    acc
}

/// q-Stirling number of the requested kind.
///
/// `n` is required (and meaningful) only for the symplectic and orthogonal
/// kinds, whose recursion coefficients depend on the ambient rank.
pub fn q_stirling(kind: TableKind, a: usize, j: usize, q: u64, n: Option<u64>) -> Result<BigInt> {
    match kind {
        TableKind::QA | TableKind::QSymplectic | TableKind::QOrthogonal => {}
        other => {
            return Err(Error::UnsupportedFamily(format!(
                "{other:?} is not a q-Stirling kind"
            )))
        }
    }
    if kind.needs_n() && n.is_none() {
        return Err(Error::Internal(format!("{kind:?} requires n")));
    }
    if j > a {
        return Ok(BigInt::zero());
    }
    Ok(CoefficientTable::build(kind, a, Some(q), n)?.get(a, j))
}

/// Binomial coefficient C(a, j) as an exact integer.
pub fn binomial(a: u64, j: u64) -> BigInt {
    if j > a {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..j {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact factorial.
pub fn factorial(a: u64) -> BigInt {
    (1..=a).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Multiply two polynomials with BigInt coefficients (ascending order).
pub fn poly_mul(p: &[BigInt], r: &[BigInt]) -> Vec<BigInt> {
    if p.is_empty() || r.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); p.len() + r.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (k, b) in r.iter().enumerate() {
            out[i + k] += a * b;
        }
    }
    out
}

/// Expand the monic product Π_t (x - roots[t]); coefficients ascending.
pub fn poly_from_roots(roots: &[BigInt]) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for root in roots {
        poly = poly_mul(&poly, &[-root.clone(), BigInt::one()]);
    }
    poly
}

/// Coefficients c_{ij} of x^i (i = 1..j, ascending) in x(x-1)...(x-j+1).
pub fn riffle_coefficients(j: usize) -> Vec<BigInt> {
    assert!(j >= 1, "riffle coefficients need j >= 1");
    let roots: Vec<BigInt> = (0..j as i64).map(BigInt::from).collect();
    let poly = poly_from_roots(&roots);
    poly[1..=j].to_vec()
}

/// Coefficients of x^i (i = 0..j, ascending) in Π_{t=1}^{j} (x - step·t + shift),
/// used for the even/odd riffle idempotents of types B and D:
/// even uses x(x-2)...(x-2(j-1)), odd uses (x-1)(x-3)...(x-(2j-1)).
pub fn shifted_factorial_coefficients(j: usize, first_root: i64, step: i64) -> Vec<BigInt> {
    let roots: Vec<BigInt> = (0..j as i64)
        .map(|t| BigInt::from(first_root + step * t))
        .collect();
    poly_from_roots(&roots)
}

/// Primality test for the small moduli used by the buildings.
pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Enumerate all set partitions of {0, .., a-1} as block lists.
    fn set_partitions(a: usize) -> Vec<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<Vec<usize>>> = vec![vec![]];
        for x in 0..a {
            let mut next = Vec::new();
            for p in &out {
                for i in 0..p.len() {
                    let mut p2 = p.clone();
                    p2[i].push(x);
                    next.push(p2);
                }
                let mut p2 = p.clone();
                p2.push(vec![x]);
                next.push(p2);
            }
            out = next;
        }
        out
    }

    #[test]
    fn stirling2_matches_partition_count_oracle() {
        // Independent oracle: count set partitions with exactly j blocks.
        for a in 0..=7 {
            let parts = set_partitions(a);
            for j in 0..=a {
                let count = parts.iter().filter(|p| p.len() == j).count();
                assert_eq!(stirling2(a, j), BigInt::from(count), "a={a} j={j}");
            }
        }
        assert_eq!(stirling2(3, 2), BigInt::from(3));
    }

    #[test]
    fn stirling2_boundary_conventions() {
        assert_eq!(stirling2(0, 0), BigInt::one());
        for a in 1..=6 {
            assert_eq!(stirling2(a, 0), BigInt::zero());
        }
        for a in 0..5 {
            assert_eq!(stirling2(a, a + 1), BigInt::zero());
        }
    }

    #[test]
    fn stirling2_explicit_formula() {
        // S(a,j) = (1/j!) Σ_i (-1)^{j-i} C(j,i) i^a, with 0^0 = 1.
        for a in 0..=10usize {
            for j in 0..=10usize {
                let mut sum = BigInt::zero();
                for i in 0..=j {
                    let sign = if (j - i) % 2 == 0 {
                        BigInt::one()
                    } else {
                        -BigInt::one()
                    };
                    let pow = if i == 0 && a == 0 {
                        BigInt::one()
                    } else {
                        BigInt::from(i).pow(a as u32)
                    };
                    sum += sign * binomial(j as u64, i as u64) * pow;
                }
                let fact = factorial(j as u64);
                assert_eq!(&sum % &fact, BigInt::zero());
                assert_eq!(stirling2(a, j), sum / fact, "a={a} j={j}");
            }
        }
    }

    #[test]
    fn signed_stirling_matches_split_partition_oracle() {
        // Oracle: partitions into j blocks, each block split into an unordered
        // pair of subsets: Π_b 2^{|b|-1} per partition.
        for a in 1..=7 {
            let parts = set_partitions(a);
            for j in 1..=a {
                let mut count = BigInt::zero();
                for p in parts.iter().filter(|p| p.len() == j) {
                    let mut w = BigInt::one();
                    for b in p {
                        w *= BigInt::from(2).pow((b.len() - 1) as u32);
                    }
                    count += w;
                }
                assert_eq!(signed_stirling(a, j), count, "a={a} j={j}");
            }
        }
        assert_eq!(signed_stirling(3, 2), BigInt::from(6));
    }

    #[test]
    fn signed_stirling_rows_and_explicit_formula() {
        for a in 1..=10usize {
            assert_eq!(signed_stirling(a, 1), BigInt::from(2).pow(a as u32 - 1));
            assert_eq!(signed_stirling(a, a), BigInt::one());
        }
        // S(a,j) = (1/(2^j j!)) Σ_i (-1)^{j-i} C(j,i) (2i)^a.
        for a in 0..=10usize {
            for j in 0..=10usize {
                let mut sum = BigInt::zero();
                for i in 0..=j {
                    let sign = if (j - i) % 2 == 0 {
                        BigInt::one()
                    } else {
                        -BigInt::one()
                    };
                    let pow = if i == 0 && a == 0 {
                        BigInt::one()
                    } else {
                        BigInt::from(2 * i).pow(a as u32)
                    };
                    sum += sign * binomial(j as u64, i as u64) * pow;
                }
                let denom = BigInt::from(2).pow(j as u32) * factorial(j as u64);
                assert_eq!(&sum % &denom, BigInt::zero());
                assert_eq!(signed_stirling(a, j), sum / denom, "a={a} j={j}");
            }
        }
    }

    #[test]
    fn q_numbers() {
        assert_eq!(q_number(3, 2), BigInt::from(7));
        assert_eq!(q_number(0, 5), BigInt::zero());
        assert_eq!(q_number(4, 2), BigInt::from(15)); // [2n] with n=2, q=2
        assert_eq!(q_number(1, 7), BigInt::one());
    }

    #[test]
    fn q_stirling_qa_values() {
        // S(a,a) = q^C(a,2); S(a,1) = 1.
        for a in 1..=8usize {
            assert_eq!(
                q_stirling(TableKind::QA, a, a, 2, None).unwrap(),
                BigInt::from(2).pow((a * (a - 1) / 2) as u32)
            );
            assert_eq!(q_stirling(TableKind::QA, a, 1, 2, None).unwrap(), BigInt::one());
        }
        assert_eq!(q_stirling(TableKind::QA, 3, 3, 2, None).unwrap(), BigInt::from(8));
    }

    #[test]
    fn q_stirling_degenerates_to_plain_at_q_one() {
        for a in 0..=8 {
            for j in 0..=8 {
                assert_eq!(
                    q_stirling(TableKind::QA, a, j, 1, None).unwrap(),
                    stirling2(a, j),
                    "a={a} j={j}"
                );
            }
        }
    }

    #[test]
    fn q_stirling_symplectic_and_orthogonal() {
        // Symplectic: S(a,1) = (1+q^{2n-1})^{a-1}; both: S(a,a) = q^C(a,2).
        for (q, n) in [(2u64, 2u64), (2, 3), (3, 2)] {
            for a in 1..=6usize {
                assert_eq!(
                    q_stirling(TableKind::QSymplectic, a, 1, q, Some(n)).unwrap(),
                    (BigInt::one() + BigInt::from(q).pow(2 * n as u32 - 1)).pow(a as u32 - 1)
                );
                assert_eq!(
                    q_stirling(TableKind::QOrthogonal, a, 1, q, Some(n)).unwrap(),
                    (BigInt::one() + BigInt::from(q).pow(2 * n as u32 - 2)).pow(a as u32 - 1)
                );
                // The diagonal S(a,a) = q^C(a,2) holds where the recursion's
                // exponents stay nonnegative: j <= 2n (symplectic), 2n-1
                // (orthogonal).
                if a <= 2 * n as usize {
                    assert_eq!(
                        q_stirling(TableKind::QSymplectic, a, a, q, Some(n)).unwrap(),
                        BigInt::from(q).pow((a * (a - 1) / 2) as u32)
                    );
                }
                if a <= 2 * n as usize - 1 {
                    assert_eq!(
                        q_stirling(TableKind::QOrthogonal, a, a, q, Some(n)).unwrap(),
                        BigInt::from(q).pow((a * (a - 1) / 2) as u32)
                    );
                }
            }
        }
        // S(2,1) = 1 + q^3 = 9 for the symplectic kind at n=2, q=2.
        assert_eq!(
            q_stirling(TableKind::QSymplectic, 2, 1, 2, Some(2)).unwrap(),
            BigInt::from(9)
        );
    }

    #[test]
    fn tables_are_nonnegative_and_triangular() {
        for kind in [TableKind::Plain, TableKind::Signed] {
            let t = CoefficientTable::build(kind, 12, None, None).unwrap();
            for (a, j, v) in t.entries() {
                assert!(*v >= BigInt::zero(), "{kind:?} a={a} j={j}");
            }
        }
        for kind in [TableKind::QA, TableKind::QSymplectic, TableKind::QOrthogonal] {
            for q in [2u64, 3] {
                let t = CoefficientTable::build(kind, 12, Some(q), Some(4)).unwrap();
                for (a, j, v) in t.entries() {
                    assert!(*v >= BigInt::zero(), "{kind:?} a={a} j={j}");
                }
            }
        }
    }

    #[test]
    fn riffle_coefficient_examples() {
        assert_eq!(riffle_coefficients(1), vec![BigInt::one()]);
        assert_eq!(riffle_coefficients(2), vec![BigInt::from(-1), BigInt::one()]);
        assert_eq!(
            riffle_coefficients(3),
            vec![BigInt::from(2), BigInt::from(-3), BigInt::one()]
        );
    }

    #[test]
    fn riffle_coefficients_expand_falling_factorials() {
        // j! C(a,j) = Σ_i c_{ij} a^i.
        for j in 1..=8u64 {
            let c = riffle_coefficients(j as usize);
            for a in 0..=10u64 {
                let mut sum = BigInt::zero();
                for (i, coeff) in c.iter().enumerate() {
                    sum += coeff * BigInt::from(a).pow(i as u32 + 1);
                }
                assert_eq!(sum, factorial(j) * binomial(a, j), "a={a} j={j}");
            }
        }
    }

    #[test]
    fn shifted_factorials_expand() {
        // x(x-2): coefficients [0, -2, 1]; (x-1)(x-3): [3, -4, 1].
        assert_eq!(
            shifted_factorial_coefficients(2, 0, 2),
            vec![BigInt::zero(), BigInt::from(-2), BigInt::one()]
        );
        assert_eq!(
            shifted_factorial_coefficients(2, 1, 2),
            vec![BigInt::from(3), BigInt::from(-4), BigInt::one()]
        );
        // Empty product is the constant 1.
        assert_eq!(shifted_factorial_coefficients(0, 1, 2), vec![BigInt::one()]);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(5));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(9));
    }
}
