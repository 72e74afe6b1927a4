//! Exact elements of the face-semigroup algebra and the seven shuffle
//! families: their graded σ_j bases, the shuffle elements S_a, the closed-form
//! primitive idempotents, and the character systems that diagonalize them.
//!
//! Coefficients are exact rationals over arbitrary-precision integers; the
//! idempotent denominators (up to 2^n n!) must cancel exactly in the identity
//! checks, so nothing here ever touches floating point.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::faces::{enumerate_faces, Face, FaceType, Family};
use crate::numbers::{
    binomial, factorial, riffle_coefficients, shifted_factorial_coefficients, signed_stirling,
    stirling2,
};
use crate::{linalg, Error, Result};

/// A sparse exact-rational combination of canonical faces of one complex.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    family: Family,
    n: u8,
    terms: BTreeMap<Face, BigRational>,
}

impl AlgebraElement {
    pub fn zero(family: Family, n: u8) -> AlgebraElement {
        AlgebraElement {
            family,
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The identity face with coefficient one.
    pub fn one(family: Family, n: u8) -> AlgebraElement {
        let mut el = Self::zero(family, n);
        el.add_term(Face::identity(family, n), BigRational::one())
            .expect("identity face matches");
        el
    }

    pub fn from_face(face: Face) -> AlgebraElement {
        let mut el = Self::zero(face.family(), face.n());
        el.add_term(face, BigRational::one()).expect("face matches");
        el
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Face, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, face: &Face) -> BigRational {
        self.terms
            .get(face)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Add `coeff · face` in place.
    pub fn add_term(&mut self, face: Face, coeff: BigRational) -> Result<()> {
        if face.family() != self.family {
            return Err(Error::FamilyMismatch(
                self.family.to_string(),
                face.family().to_string(),
            ));
        }
        if face.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: face.n(),
            });
        }
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.entry(face) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    fn check_compatible(&self, other: &AlgebraElement) -> Result<()> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch(
                self.family.to_string(),
                other.family.to_string(),
            ));
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (f, c) in &other.terms {
            out.add_term(f.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (f, c) in &other.terms {
            out.add_term(f.clone(), -c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, scalar: &BigRational) -> AlgebraElement {
        if scalar.is_zero() {
            return Self::zero(self.family, self.n);
        }
        AlgebraElement {
            family: self.family,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(f, c)| (f.clone(), c * scalar))
                .collect(),
        }
    }

    /// Subtract `scalar · 1` (the identity face), as in (x − λ).
    pub fn sub_scalar(&self, scalar: &BigRational) -> AlgebraElement {
        let mut out = self.clone();
        out.add_term(Face::identity(self.family, self.n), -scalar.clone())
            .expect("identity face");
        out
    }

    /// Bilinear extension of the face product.
    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_compatible(other)?;
        let mut acc: HashMap<Face, BigRational> = HashMap::with_capacity(self.terms.len());
        for (f, a) in &self.terms {
            for (g, b) in &other.terms {
                let h = f.product(g)?;
                let coeff = a * b;
                match acc.entry(h) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(coeff);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += coeff;
                    }
                }
            }
        }
        let terms: BTreeMap<Face, BigRational> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(AlgebraElement {
            family: self.family,
            n: self.n,
            terms,
        })
    }

    /// Sum of all coefficients: the normalization factor of the associated walk.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().sum()
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Dense coordinates over the given face index.
    pub fn to_dense(&self, index: &BTreeMap<Face, usize>) -> Vec<BigRational> {
        let mut row = vec![BigRational::zero(); index.len()];
        for (f, c) in &self.terms {
            row[index[f]] = c.clone();
        }
        row
    }

    /// JSON representation with terms in canonical text order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut terms: Vec<(String, &BigRational)> =
            self.terms.iter().map(|(f, c)| (f.to_string(), c)).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        json!({
            "family": self.family.to_string(),
            "n": self.n,
            "terms": terms
                .into_iter()
                .map(|(face, c)| {
                    json!({
                        "face": face,
                        "num": c.numer().to_string(),
                        "den": c.denom().to_string(),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<AlgebraElement> {
        let family = match value.get("family").and_then(|v| v.as_str()) {
            Some("A") => Family::A,
            Some("B") => Family::B,
            Some("D") => Family::D,
            other => return Err(Error::Parse(format!("bad family {other:?}"))),
        };
        let n = value
            .get("n")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::Parse("missing n".into()))? as u8;
        let mut el = AlgebraElement::zero(family, n);
        let terms = value
            .get("terms")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse("missing terms".into()))?;
        for t in terms {
            let face_text = t
                .get("face")
                .and_then(|v| v.as_str())
                .ok_or_else(|| Error::Parse("term without face".into()))?;
            let num: BigInt = t
                .get("num")
                .and_then(|v| v.as_str())
                .ok_or_else(|| Error::Parse("term without num".into()))?
                .parse()
                .map_err(|_| Error::Parse("bad num".into()))?;
            let den: BigInt = t
                .get("den")
                .and_then(|v| v.as_str())
                .ok_or_else(|| Error::Parse("term without den".into()))?
                .parse()
                .map_err(|_| Error::Parse("bad den".into()))?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            let face = Face::parse(family, n, face_text)?;
            el.add_term(face, BigRational::new(num, den))?;
        }
        Ok(el)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(face, c)| format!("{c}·{face}"))
            .collect();
        parts.sort();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Sum of all faces of the given type, coefficient one each.
pub fn sigma_j_set(family: Family, n: u8, j: &FaceType) -> Result<AlgebraElement> {
    let t = FaceType::new(family, n, j.labels.clone())?;
    let mut el = AlgebraElement::zero(family, n);
    for face in enumerate_faces(family, n, Some(&t)) {
        el.add_term(face, BigRational::one())?;
    }
    Ok(el)
}

/// Additive or multiplicative shuffle semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Arity {
    Additive,
    Multiplicative,
}

/// The seven Coxeter shuffle families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ShuffleFamily {
    SideA,
    TwoSidedA,
    RiffleA,
    SideB,
    RiffleB,
    SideD,
    RiffleD,
}

pub const ALL_FAMILIES: [ShuffleFamily; 7] = [
    ShuffleFamily::SideA,
    ShuffleFamily::TwoSidedA,
    ShuffleFamily::RiffleA,
    ShuffleFamily::SideB,
    ShuffleFamily::RiffleB,
    ShuffleFamily::SideD,
    ShuffleFamily::RiffleD,
];

impl fmt::Display for ShuffleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl ShuffleFamily {
    pub fn name(self) -> &'static str {
        match self {
            ShuffleFamily::SideA => "sideA",
            ShuffleFamily::TwoSidedA => "twoSidedA",
            ShuffleFamily::RiffleA => "riffleA",
            ShuffleFamily::SideB => "sideB",
            ShuffleFamily::RiffleB => "riffleB",
            ShuffleFamily::SideD => "sideD",
            ShuffleFamily::RiffleD => "riffleD",
        }
    }

    pub fn parse(text: &str) -> Result<ShuffleFamily> {
        match text {
            "sideA" | "side-a" => Ok(ShuffleFamily::SideA),
            "twoSidedA" | "two-sided-a" => Ok(ShuffleFamily::TwoSidedA),
            "riffleA" | "riffle-a" => Ok(ShuffleFamily::RiffleA),
            "sideB" | "side-b" => Ok(ShuffleFamily::SideB),
            "riffleB" | "riffle-b" => Ok(ShuffleFamily::RiffleB),
            "sideD" | "side-d" => Ok(ShuffleFamily::SideD),
            "riffleD" | "riffle-d" => Ok(ShuffleFamily::RiffleD),
            _ => Err(Error::UnsupportedFamily(text.to_string())),
        }
    }

    pub fn complex_family(self) -> Family {
        match self {
            ShuffleFamily::SideA | ShuffleFamily::TwoSidedA | ShuffleFamily::RiffleA => Family::A,
            ShuffleFamily::SideB | ShuffleFamily::RiffleB => Family::B,
            ShuffleFamily::SideD | ShuffleFamily::RiffleD => Family::D,
        }
    }

    pub fn arity(self) -> Arity {
        match self {
            ShuffleFamily::SideA
            | ShuffleFamily::TwoSidedA
            | ShuffleFamily::SideB
            | ShuffleFamily::SideD => Arity::Additive,
            _ => Arity::Multiplicative,
        }
    }

    /// First valid shuffle index (0 for additive, 1 for multiplicative).
    pub fn arity_start(self) -> u64 {
        match self.arity() {
            Arity::Additive => 0,
            Arity::Multiplicative => 1,
        }
    }

    /// Does the family have the odd σ'_j basis (the shuffle doubles)?
    pub fn has_primes(self) -> bool {
        matches!(self, ShuffleFamily::RiffleB | ShuffleFamily::RiffleD)
    }

    pub fn valid_index(self, a: i64) -> bool {
        match self.arity() {
            Arity::Additive => a >= 0,
            Arity::Multiplicative => a >= 1,
        }
    }

    pub fn min_n(self) -> u8 {
        match self.complex_family() {
            Family::A | Family::B => 2,
            Family::D => 3,
        }
    }

    /// Largest rank accepted by the command-line surface; full face
    /// enumeration beyond this is impractical.
    pub fn max_n(self) -> u8 {
        match self.complex_family() {
            Family::A => 8,
            Family::B | Family::D => 6,
        }
    }

    /// The graded basis element σ_j, built by direct enumeration (the product
    /// recursions are tests, not definitions).
    ///
    /// Conventions: σ_0 = 1 everywhere; sideA aliases σ_n = σ_{n-1};
    /// twoSidedA and sideD alias σ_n = 2σ_{n-1}.
    pub fn sigma(self, n: u8, j: usize) -> Result<AlgebraElement> {
        let family = self.complex_family();
        let nu = n as usize;
        let out_of_range = || Error::IndexOutOfRange {
            what: format!("sigma index for {self} at n={n}"),
            index: j as i64,
        };
        if j == 0 {
            return Ok(AlgebraElement::one(family, n));
        }
        match self {
            ShuffleFamily::SideA => {
                if j > nu {
                    return Err(out_of_range());
                }
                if j == nu {
                    return self.sigma(n, nu - 1);
                }
                // (j+1)-block partitions whose first j blocks are singletons.
                let mut el = AlgebraElement::zero(family, n);
                for face in enumerate_faces(family, n, None) {
                    if let Face::A(f) = &face {
                        if f.blocks.len() == j + 1 && f.blocks[..j].iter().all(|b| b.len() == 1) {
                            el.add_term(face, BigRational::one())?;
                        }
                    }
                }
                Ok(el)
            }
            ShuffleFamily::TwoSidedA => {
                if j > nu {
                    return Err(out_of_range());
                }
                if j == nu {
                    return Ok(self
                        .sigma(n, nu - 1)?
                        .scale(&BigRational::from(BigInt::from(2))));
                }
                // (j+1)-block partitions, weighted by the number of splits
                // into k leading and j-k trailing singleton blocks, with
                // binomial weight C(j,k) per split.
                let mut el = AlgebraElement::zero(family, n);
                for face in enumerate_faces(family, n, None) {
                    if let Face::A(f) = &face {
                        if f.blocks.len() != j + 1 {
                            continue;
                        }
                        let mut coeff = BigInt::zero();
                        for k in 0..=j {
                            let leading = f.blocks[..k].iter().all(|b| b.len() == 1);
                            let trailing = f.blocks[k + 1..].iter().all(|b| b.len() == 1);
                            if leading && trailing {
                                coeff += binomial(j as u64, k as u64);
                            }
                        }
                        if !coeff.is_zero() {
                            el.add_term(face, BigRational::from(coeff))?;
                        }
                    }
                }
                Ok(el)
            }
            ShuffleFamily::RiffleA => {
                // σ_j is the sum of all rank-j simplices, 0 <= j <= n-1.
                if j > nu - 1 {
                    return Err(out_of_range());
                }
                let mut el = AlgebraElement::zero(family, n);
                for face in enumerate_faces(family, n, None) {
                    if face.rank() == j {
                        el.add_term(face, BigRational::one())?;
                    }
                }
                Ok(el)
            }
            ShuffleFamily::SideB => {
                // j singleton signed blocks, any zero block; j = n gives the
                // chambers.
                if j > nu {
                    return Err(out_of_range());
                }
                let mut el = AlgebraElement::zero(family, n);
                for face in enumerate_faces(family, n, None) {
                    if let Face::B(f) = &face {
                        if f.blocks.len() == j && f.blocks.iter().all(|b| b.len() == 1) {
                            el.add_term(face, BigRational::one())?;
                        }
                    }
                }
                Ok(el)
            }
            ShuffleFamily::RiffleB => {
                // Even part: j signed blocks and an empty zero block.
                if j > nu {
                    return Err(out_of_range());
                }
                let mut el = AlgebraElement::zero(family, n);
                for face in enumerate_faces(family, n, None) {
                    if let Face::B(f) = &face {
                        if f.zero.is_empty() && f.blocks.len() == j {
                            el.add_term(face, BigRational::one())?;
                        }
                    }
                }
                Ok(el)
            }
            ShuffleFamily::SideD => {
                if j > nu {
                    return Err(out_of_range());
                }
                if j == nu {
                    return Ok(self
                        .sigma(n, nu - 1)?
                        .scale(&BigRational::from(BigInt::from(2))));
                }
                let mut el = AlgebraElement::zero(family, n);
                if j == nu - 1 {
                    // σ_{n-1} is the sum of all chambers.
                    for face in enumerate_faces(family, n, None) {
                        if face.is_chamber() {
                            el.add_term(face, BigRational::one())?;
                        }
                    }
                } else {
                    // j singleton signed blocks around a central block of at
                    // least four letters.
                    for face in enumerate_faces(family, n, None) {
                        if let Face::D(f) = &face {
                            if f.central.len() >= 4
                                && f.blocks.len() == j
                                && f.blocks.iter().all(|b| b.len() == 1)
                            {
                                el.add_term(face, BigRational::one())?;
                            }
                        }
                    }
                }
                Ok(el)
            }
            ShuffleFamily::RiffleD => {
                // Even part: rank-j faces whose type meets {u, v}. The two
                // unmergings of a two-element central block count separately,
                // giving coefficient 2 when the type contains both u and v.
                if j > nu {
                    return Err(out_of_range());
                }
                let mut el = AlgebraElement::zero(family, n);
                for face in enumerate_faces(family, n, None) {
                    if let Face::D(f) = &face {
                        if f.rank() != j {
                            continue;
                        }
                        match f.central.len() {
                            0 => el.add_term(face, BigRational::one())?,
                            2 => el.add_term(face, BigRational::from(BigInt::from(2)))?,
                            _ => {}
                        }
                    }
                }
                Ok(el)
            }
        }
    }

    /// The odd basis element σ'_j of the riffle doubles: every (2j+1)-block
    /// partition. For type B those are the rank-j faces with arbitrary zero
    /// block; for type D the unmerging convention makes σ'_j span ranks j
    /// and j+1.
    pub fn sigma_prime(self, n: u8, j: usize) -> Result<AlgebraElement> {
        let nu = n as usize;
        let out_of_range = || Error::IndexOutOfRange {
            what: format!("sigma' index for {self} at n={n}"),
            index: j as i64,
        };
        match self {
            ShuffleFamily::RiffleB => {
                if j > nu {
                    return Err(out_of_range());
                }
                if j == 0 {
                    return Ok(AlgebraElement::one(Family::B, n));
                }
                let mut el = AlgebraElement::zero(Family::B, n);
                for face in enumerate_faces(Family::B, n, None) {
                    if let Face::B(f) = &face {
                        if f.blocks.len() == j {
                            el.add_term(face, BigRational::one())?;
                        }
                    }
                }
                Ok(el)
            }
            ShuffleFamily::RiffleD => {
                if j > nu {
                    return Err(out_of_range());
                }
                if j == 0 {
                    return Ok(AlgebraElement::one(Family::D, n));
                }
                // σ_j plus the rank-j faces avoiding u,v plus the rank-(j+1)
                // faces whose type contains both u and v.
                let mut el = self.sigma(n, j)?;
                for face in enumerate_faces(Family::D, n, None) {
                    if let Face::D(f) = &face {
                        let extra = match f.central.len() {
                            0 => false,
                            2 => f.rank() == j + 1,
                            _ => f.rank() == j,
                        };
                        if extra {
                            el.add_term(face, BigRational::one())?;
                        }
                    }
                }
                Ok(el)
            }
            _ => Err(Error::UnsupportedFamily(format!("{self} has no σ' basis"))),
        }
    }

    /// The shuffle element S_a.
    pub fn shuffle(self, n: u8, a: u64) -> Result<AlgebraElement> {
        let combo = self.shuffle_combo(n, a)?;
        let mut el = AlgebraElement::zero(self.complex_family(), n);
        for (idx, c) in &combo {
            let sigma = if idx.prime {
                self.sigma_prime(n, idx.j)?
            } else {
                self.sigma(n, idx.j)?
            };
            el = el.add(&sigma.scale(&BigRational::from(c.clone())))?;
        }
        Ok(el)
    }

    /// S_a as a linear combination of basis indices: Stirling coefficients
    /// over σ_j for the additive families, binomial coefficients over
    /// σ_{j-1} (riffle of type A) or over σ_j / σ'_j by parity (the riffle
    /// doubles).
    pub fn shuffle_combo(self, n: u8, a: u64) -> Result<Vec<(BasisIndex, BigInt)>> {
        if !self.valid_index(a as i64) {
            return Err(Error::IndexOutOfRange {
                what: format!("shuffle index for {self}"),
                index: a as i64,
            });
        }
        let nu = n as usize;
        let mut combo = Vec::new();
        match self {
            ShuffleFamily::SideA => {
                for j in 0..=nu {
                    let c = stirling2(a as usize, j);
                    if !c.is_zero() {
                        combo.push((BasisIndex::plain(j), c));
                    }
                }
            }
            ShuffleFamily::TwoSidedA | ShuffleFamily::SideB | ShuffleFamily::SideD => {
                for j in 0..=nu {
                    let c = signed_stirling(a as usize, j);
                    if !c.is_zero() {
                        combo.push((BasisIndex::plain(j), c));
                    }
                }
            }
            ShuffleFamily::RiffleA => {
                for j in 1..=nu {
                    let c = binomial(a, j as u64);
                    if !c.is_zero() {
                        combo.push((BasisIndex::plain(j - 1), c));
                    }
                }
            }
            ShuffleFamily::RiffleB | ShuffleFamily::RiffleD => {
                if a % 2 == 0 {
                    let half = a / 2;
                    for j in 1..=nu {
                        let c = binomial(half, j as u64);
                        if !c.is_zero() {
                            combo.push((BasisIndex::plain(j), c));
                        }
                    }
                } else {
                    let half = (a - 1) / 2;
                    for j in 0..=nu {
                        let c = binomial(half, j as u64);
                        if !c.is_zero() {
                            combo.push((BasisIndex::prime(j), c));
                        }
                    }
                }
            }
        }
        Ok(combo)
    }

    /// The complete orthogonal idempotent system, degenerate members dropped:
    /// e_{n-1} for sideA/twoSidedA/sideD (forced to zero by the σ_n alias),
    /// and for the riffle doubles the combined 2n-element system
    /// {e_1, ..., e_n, e'_0 - e_0, ..., e'_{n-1} - e_{n-1}} (with e_0 = 0).
    pub fn idempotents(self, n: u8) -> Result<Vec<AlgebraElement>> {
        let nu = n as usize;
        match self {
            ShuffleFamily::SideA => (0..=nu)
                .filter(|&i| i != nu - 1)
                .map(|i| self.side_idempotent(n, i, false))
                .collect(),
            ShuffleFamily::TwoSidedA | ShuffleFamily::SideD => (0..=nu)
                .filter(|&i| i != nu - 1)
                .map(|i| self.side_idempotent(n, i, true))
                .collect(),
            ShuffleFamily::SideB => (0..=nu)
                .map(|i| self.side_idempotent(n, i, true))
                .collect(),
            ShuffleFamily::RiffleA => (1..=nu)
                .map(|i| self.riffle_a_idempotent(n, i))
                .collect(),
            ShuffleFamily::RiffleB | ShuffleFamily::RiffleD => {
                let mut out = Vec::new();
                for i in 1..=nu {
                    out.push(self.double_idempotent(n, i, false)?);
                }
                for i in 0..nu {
                    let e_prime = self.double_idempotent(n, i, true)?;
                    let e = self.double_idempotent(n, i, false)?;
                    out.push(e_prime.sub(&e)?);
                }
                Ok(out)
            }
        }
    }

    /// e_i = Σ_{j=i}^{n} (-1)^{j-i} C(j,i) σ_j / j!, with 2^j j! denominators
    /// for the signed families.
    pub fn side_idempotent(self, n: u8, i: usize, signed: bool) -> Result<AlgebraElement> {
        let nu = n as usize;
        let mut el = AlgebraElement::zero(self.complex_family(), n);
        for j in i..=nu {
            let sign = if (j - i) % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            let mut denom = factorial(j as u64);
            if signed {
                denom *= BigInt::from(2).pow(j as u32);
            }
            let coeff = BigRational::new(sign * binomial(j as u64, i as u64), denom);
            el = el.add(&self.sigma(n, j)?.scale(&coeff))?;
        }
        Ok(el)
    }

    /// e_i = Σ_{j=i}^{n} c_{ij} σ_{j-1} / j! where c_{ij} is the coefficient
    /// of x^i in x(x-1)...(x-j+1).
    fn riffle_a_idempotent(self, n: u8, i: usize) -> Result<AlgebraElement> {
        let nu = n as usize;
        let mut el = AlgebraElement::zero(Family::A, n);
        for j in i..=nu {
            let coeffs = riffle_coefficients(j);
            let c_ij = coeffs[i - 1].clone();
            if c_ij.is_zero() {
                continue;
            }
            let coeff = BigRational::new(c_ij, factorial(j as u64));
            el = el.add(&self.sigma(n, j - 1)?.scale(&coeff))?;
        }
        Ok(el)
    }

    /// The even/odd idempotents of the riffle doubles: coefficients of x^i in
    /// x(x-2)...(x-2(j-1)) over σ_j, respectively (x-1)(x-3)...(x-(2j-1))
    /// over σ'_j, both divided by 2^j j!. e_0 = 0 by convention.
    pub fn double_idempotent(self, n: u8, i: usize, prime: bool) -> Result<AlgebraElement> {
        let nu = n as usize;
        let mut el = AlgebraElement::zero(self.complex_family(), n);
        if !prime && i == 0 {
            return Ok(el);
        }
        let j_start = if prime { i } else { i.max(1) };
        for j in j_start..=nu {
            let coeffs = if prime {
                shifted_factorial_coefficients(j, 1, 2)
            } else {
                shifted_factorial_coefficients(j, 0, 2)
            };
            let c_ij = coeffs[i].clone();
            if c_ij.is_zero() {
                continue;
            }
            let denom = factorial(j as u64) * BigInt::from(2).pow(j as u32);
            let coeff = BigRational::new(c_ij, denom);
            let sigma = if prime {
                self.sigma_prime(n, j)?
            } else {
                self.sigma(n, j)?
            };
            el = el.add(&sigma.scale(&coeff))?;
        }
        Ok(el)
    }

    /// Character values χ_i(S_a), aligned with [`Self::idempotents`].
    pub fn characters(self, n: u8, a: u64) -> Result<Vec<BigRational>> {
        if !self.valid_index(a as i64) {
            return Err(Error::IndexOutOfRange {
                what: format!("shuffle index for {self}"),
                index: a as i64,
            });
        }
        let nu = n as usize;
        let pow = |base: u64, exp: u64| -> BigRational {
            if base == 0 && exp == 0 {
                BigRational::one()
            } else {
                BigRational::from(BigInt::from(base).pow(exp as u32))
            }
        };
        let values = match self {
            ShuffleFamily::SideA => (0..=nu)
                .filter(|&i| i != nu - 1)
                .map(|i| pow(i as u64, a))
                .collect(),
            ShuffleFamily::TwoSidedA | ShuffleFamily::SideD => (0..=nu)
                .filter(|&i| i != nu - 1)
                .map(|i| pow(2 * i as u64, a))
                .collect(),
            ShuffleFamily::SideB => (0..=nu).map(|i| pow(2 * i as u64, a)).collect(),
            ShuffleFamily::RiffleA => (1..=nu).map(|i| pow(a, i as u64)).collect(),
            ShuffleFamily::RiffleB | ShuffleFamily::RiffleD => {
                let mut vals: Vec<BigRational> = (1..=nu).map(|i| pow(a, i as u64)).collect();
                for i in 0..nu {
                    vals.push(if a % 2 == 0 {
                        BigRational::zero()
                    } else {
                        pow(a, i as u64)
                    });
                }
                vals
            }
        };
        Ok(values)
    }

    /// χ_i(S_a) for the i-th member of the idempotent system.
    pub fn character_value(self, n: u8, i: usize, a: u64) -> Result<BigRational> {
        let all = self.characters(n, a)?;
        all.get(i).cloned().ok_or(Error::IndexOutOfRange {
            what: format!("character index for {self} at n={n}"),
            index: i as i64,
        })
    }

    /// The distinct predicted eigenvalues of S_a, ascending.
    pub fn eigenvalues(self, n: u8, a: u64) -> Result<Vec<BigInt>> {
        let mut vals: Vec<BigInt> = self
            .characters(n, a)?
            .into_iter()
            .map(|c| c.to_integer())
            .collect();
        vals.sort();
        vals.dedup();
        Ok(vals)
    }
}

/// Index into a family's graded basis: (prime?, j).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    pub prime: bool,
    pub j: usize,
}

impl BasisIndex {
    pub fn plain(j: usize) -> BasisIndex {
        BasisIndex { prime: false, j }
    }
    pub fn prime(j: usize) -> BasisIndex {
        BasisIndex { prime: true, j }
    }
}

/// Precomputed σ basis and pairwise products for one (family, n).
///
/// Products of basis combinations (shuffles, idempotents) reduce to exact
/// recombinations of this table, so the quadratic face-product work happens
/// once per basis pair instead of once per checked identity.
pub struct SigmaTable {
    pub family: ShuffleFamily,
    pub n: u8,
    elements: BTreeMap<BasisIndex, AlgebraElement>,
    products: HashMap<(BasisIndex, BasisIndex), AlgebraElement>,
}

impl SigmaTable {
    pub fn new(family: ShuffleFamily, n: u8) -> Result<SigmaTable> {
        let nu = n as usize;
        let mut elements = BTreeMap::new();
        for j in 0..=nu {
            elements.insert(BasisIndex::plain(j), family.sigma(n, j)?);
        }
        if family.has_primes() {
            for j in 0..=nu {
                elements.insert(BasisIndex::prime(j), family.sigma_prime(n, j)?);
            }
        }
        Ok(SigmaTable {
            family,
            n,
            elements,
            products: HashMap::new(),
        })
    }

    pub fn basis(&self, idx: BasisIndex) -> &AlgebraElement {
        &self.elements[&idx]
    }

    fn product_entry(&mut self, x: BasisIndex, y: BasisIndex) -> Result<AlgebraElement> {
        if !self.products.contains_key(&(x, y)) {
            let p = self.elements[&x].multiply(&self.elements[&y])?;
            self.products.insert((x, y), p);
        }
        Ok(self.products[&(x, y)].clone())
    }

    pub fn element_of(&self, combo: &[(BasisIndex, BigInt)]) -> Result<AlgebraElement> {
        let mut el = AlgebraElement::zero(self.family.complex_family(), self.n);
        for (idx, c) in combo {
            el = el.add(&self.elements[idx].scale(&BigRational::from(c.clone())))?;
        }
        Ok(el)
    }

    /// Product of two basis combinations via the cached pairwise products.
    pub fn product_of(
        &mut self,
        x: &[(BasisIndex, BigInt)],
        y: &[(BasisIndex, BigInt)],
    ) -> Result<AlgebraElement> {
        let mut el = AlgebraElement::zero(self.family.complex_family(), self.n);
        for (xi, xc) in x {
            for (yi, yc) in y {
                let coeff = BigRational::from(xc * yc);
                let p = self.product_entry(*xi, *yi)?;
                el = el.add(&p.scale(&coeff))?;
            }
        }
        Ok(el)
    }
}

/// Outcome of one shuffle-algebra axiom.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AxiomOutcome {
    pub axiom: String,
    pub passed: bool,
    pub note: String,
}

/// Report of the four shuffle-algebra axioms for one family.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AxiomReport {
    pub family: String,
    pub n: u8,
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }
}

/// Check the four defining conditions of a shuffle algebra on the family's
/// declared basis: (1) dim A <= dim Σ + 2 with the basis independent,
/// (2) a rank-graded basis with one σ_j per rank, (3) generation by σ_1,
/// (4) spanning by the shuffle semigroup, each by exact linear algebra over
/// the face coordinates. The shuffle doubles violate (1)-(3) by a factor of
/// two, and the type D odd basis additionally breaks (2) by spanning two
/// ranks; the report notes say which.
pub fn check_shuffle_algebra_axioms(family: ShuffleFamily, n: u8) -> Result<AxiomReport> {
    let nu = n as usize;
    let complex = family.complex_family();

    let mut basis_idx: Vec<BasisIndex> = Vec::new();
    match family {
        ShuffleFamily::SideA | ShuffleFamily::TwoSidedA | ShuffleFamily::RiffleA => {
            basis_idx.extend((0..nu).map(BasisIndex::plain));
        }
        ShuffleFamily::SideB => basis_idx.extend((0..=nu).map(BasisIndex::plain)),
        ShuffleFamily::SideD => basis_idx.extend((0..nu).map(BasisIndex::plain)),
        ShuffleFamily::RiffleB | ShuffleFamily::RiffleD => {
            basis_idx.push(BasisIndex::plain(0));
            for j in 1..nu {
                basis_idx.push(BasisIndex::plain(j));
                basis_idx.push(BasisIndex::prime(j));
            }
            basis_idx.push(BasisIndex::plain(nu));
        }
    }
    let basis: Vec<AlgebraElement> = basis_idx
        .iter()
        .map(|idx| {
            if idx.prime {
                family.sigma_prime(n, idx.j)
            } else {
                family.sigma(n, idx.j)
            }
        })
        .collect::<Result<_>>()?;

    let all_faces = enumerate_faces(complex, n, None);
    let index: BTreeMap<Face, usize> = all_faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f.clone(), i))
        .collect();
    let rows: Vec<Vec<BigRational>> = basis.iter().map(|b| b.to_dense(&index)).collect();

    let dim_a = linalg::rank(rows.clone());
    let dim_sigma_plus_2 = match complex {
        Family::A => nu,
        Family::B | Family::D => nu + 1,
    };
    let mut outcomes = Vec::new();

    let independent = dim_a == basis.len();
    let cond1 = independent && dim_a <= dim_sigma_plus_2;
    outcomes.push(AxiomOutcome {
        axiom: "dim A <= dim Σ + 2".into(),
        passed: cond1,
        note: format!(
            "dim A = {dim_a} (declared basis of {}), bound = {dim_sigma_plus_2}",
            basis.len()
        ),
    });

    let mut rank_notes = Vec::new();
    let mut homogeneous = true;
    let mut one_per_rank = true;
    let mut seen_ranks: BTreeMap<usize, usize> = BTreeMap::new();
    for (idx, el) in basis_idx.iter().zip(&basis) {
        let ranks: std::collections::BTreeSet<usize> = el.terms().map(|(f, _)| f.rank()).collect();
        if ranks.len() > 1 {
            homogeneous = false;
            rank_notes.push(format!(
                "σ{}_{} spans ranks {:?}",
                if idx.prime { "'" } else { "" },
                idx.j,
                ranks
            ));
        } else if let Some(&r) = ranks.iter().next() {
            *seen_ranks.entry(r).or_insert(0) += 1;
        }
    }
    for (r, count) in &seen_ranks {
        if *count > 1 {
            one_per_rank = false;
            rank_notes.push(format!("{count} basis elements of rank {r}"));
        }
    }
    outcomes.push(AxiomOutcome {
        axiom: "basis graded by rank, one σ_j per rank".into(),
        passed: homogeneous && one_per_rank,
        note: if rank_notes.is_empty() {
            "each basis element lies in a single kΣ_j".into()
        } else {
            rank_notes.join("; ")
        },
    });

    let sigma1 = family.sigma(n, 1)?;
    let mut powers = vec![AlgebraElement::one(complex, n)];
    for _ in 0..dim_a.saturating_sub(1) {
        let next = powers.last().unwrap().multiply(&sigma1)?;
        powers.push(next);
    }
    let power_rows: Vec<Vec<BigRational>> = powers.iter().map(|p| p.to_dense(&index)).collect();
    let mut missing = Vec::new();
    for (idx, row) in basis_idx.iter().zip(&rows) {
        if linalg::solve_combination(&power_rows, row).is_none() {
            missing.push(format!("σ{}_{}", if idx.prime { "'" } else { "" }, idx.j));
        }
    }
    outcomes.push(AxiomOutcome {
        axiom: "A = k[σ_1]".into(),
        passed: missing.is_empty(),
        note: if missing.is_empty() {
            format!(
                "powers 1, σ_1, ..., σ_1^{} span A",
                dim_a.saturating_sub(1)
            )
        } else {
            format!("not generated by σ_1 alone: {} outside", missing.join(", "))
        },
    });

    let shuffle_indices: Vec<u64> = match family.arity() {
        Arity::Additive => (0..basis.len() as u64).collect(),
        Arity::Multiplicative => (1..=basis.len() as u64 + 1).collect(),
    };
    let shuffle_rows: Vec<Vec<BigRational>> = shuffle_indices
        .iter()
        .map(|&a| Ok(family.shuffle(n, a)?.to_dense(&index)))
        .collect::<Result<_>>()?;
    let mut missing4 = Vec::new();
    for (idx, row) in basis_idx.iter().zip(&rows) {
        if linalg::solve_combination(&shuffle_rows, row).is_none() {
            missing4.push(format!("σ{}_{}", if idx.prime { "'" } else { "" }, idx.j));
        }
    }
    outcomes.push(AxiomOutcome {
        axiom: "the shuffle semigroup spans A".into(),
        passed: missing4.is_empty(),
        note: if missing4.is_empty() {
            format!("S_a for a in {shuffle_indices:?} span A")
        } else {
            format!("not spanned: {}", missing4.join(", "))
        },
    });

    Ok(AxiomReport {
        family: family.name().into(),
        n,
        outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }

    #[test]
    fn one_is_the_identity() {
        let one = AlgebraElement::one(Family::A, 3);
        let x = ShuffleFamily::SideA.sigma(3, 1).unwrap();
        assert_eq!(one.multiply(&x).unwrap(), x);
        assert_eq!(x.multiply(&one).unwrap(), x);
    }

    #[test]
    fn side_a_sigma1_squared() {
        // σ_1² = σ_1 + σ_2 for the type A side shuffle.
        let f = ShuffleFamily::SideA;
        let s1 = f.sigma(3, 1).unwrap();
        let lhs = s1.multiply(&s1).unwrap();
        let rhs = s1.add(&f.sigma(3, 2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn side_b_sigma1_squared() {
        // σ_1² = 2σ_1 + σ_2 for the type B side shuffle.
        for n in 2..=4u8 {
            let f = ShuffleFamily::SideB;
            let s1 = f.sigma(n, 1).unwrap();
            let lhs = s1.multiply(&s1).unwrap();
            let rhs = s1.scale(&rat(2)).add(&f.sigma(n, 2).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn sigma_j_set_counts() {
        let t = FaceType::parse(Family::A, 4, "s1").unwrap();
        assert_eq!(sigma_j_set(Family::A, 4, &t).unwrap().num_terms(), 4);
        let empty = FaceType::empty(Family::A, 3);
        assert_eq!(
            sigma_j_set(Family::A, 3, &empty).unwrap(),
            AlgebraElement::one(Family::A, 3)
        );
        // Vertices of type t in B_2: one per sign pattern ε ∈ {±1}².
        let t = FaceType::parse(Family::B, 2, "t").unwrap();
        assert_eq!(sigma_j_set(Family::B, 2, &t).unwrap().num_terms(), 4);
    }

    #[test]
    fn sigma_counts_and_aliases() {
        // sideA n=4, j=2: ordered singleton pairs.
        assert_eq!(ShuffleFamily::SideA.sigma(4, 2).unwrap().num_terms(), 12);
        // sideA σ_n = σ_{n-1}.
        assert_eq!(
            ShuffleFamily::SideA.sigma(4, 4).unwrap(),
            ShuffleFamily::SideA.sigma(4, 3).unwrap()
        );
        // sideD σ_n = 2σ_{n-1}; twoSidedA σ_n = 2σ_{n-1}.
        let f = ShuffleFamily::SideD;
        assert_eq!(f.sigma(3, 3).unwrap(), f.sigma(3, 2).unwrap().scale(&rat(2)));
        let f = ShuffleFamily::TwoSidedA;
        assert_eq!(f.sigma(4, 4).unwrap(), f.sigma(4, 3).unwrap().scale(&rat(2)));
        // Out-of-range index.
        assert!(ShuffleFamily::SideA.sigma(3, 5).is_err());
    }

    #[test]
    fn riffle_d_sigma2_decomposition() {
        // σ_2 = σ_{s,u} + σ_{s,v} + 2σ_{u,v} at n=3.
        let f = ShuffleFamily::RiffleD;
        let s2 = f.sigma(3, 2).unwrap();
        let su =
            sigma_j_set(Family::D, 3, &FaceType::parse(Family::D, 3, "s1,u").unwrap()).unwrap();
        let sv =
            sigma_j_set(Family::D, 3, &FaceType::parse(Family::D, 3, "s1,v").unwrap()).unwrap();
        let uv =
            sigma_j_set(Family::D, 3, &FaceType::parse(Family::D, 3, "u,v").unwrap()).unwrap();
        let rhs = su.add(&sv).unwrap().add(&uv.scale(&rat(2))).unwrap();
        assert_eq!(s2, rhs);
        // σ_3 = 2σ_{s,u,v} (the chambers, doubled).
        let s3 = f.sigma(3, 3).unwrap();
        let suv = sigma_j_set(Family::D, 3, &FaceType::full(Family::D, 3)).unwrap();
        assert_eq!(s3, suv.scale(&rat(2)));
    }

    #[test]
    fn riffle_d_odd_sigma1() {
        // σ'_1 = σ_u + σ_v + σ_{s_1} + σ_{u,v} at n=3.
        let f = ShuffleFamily::RiffleD;
        let s1p = f.sigma_prime(3, 1).unwrap();
        let mut rhs = AlgebraElement::zero(Family::D, 3);
        for t in ["u", "v", "s1", "u,v"] {
            let el =
                sigma_j_set(Family::D, 3, &FaceType::parse(Family::D, 3, t).unwrap()).unwrap();
            rhs = rhs.add(&el).unwrap();
        }
        assert_eq!(s1p, rhs);
        // σ'_n = σ_n.
        assert_eq!(f.sigma_prime(3, 3).unwrap(), f.sigma(3, 3).unwrap());
        assert_eq!(
            ShuffleFamily::RiffleB.sigma_prime(3, 3).unwrap(),
            ShuffleFamily::RiffleB.sigma(3, 3).unwrap()
        );
    }

    #[test]
    fn shuffle_examples() {
        // riffleA: S_2 = σ_1 + 2σ_0.
        let f = ShuffleFamily::RiffleA;
        for n in 2..=4u8 {
            let s2 = f.shuffle(n, 2).unwrap();
            let rhs = f
                .sigma(n, 1)
                .unwrap()
                .add(&AlgebraElement::one(Family::A, n).scale(&rat(2)))
                .unwrap();
            assert_eq!(s2, rhs, "n={n}");
        }
        // sideA: S_0 = 1, S_1 = σ_1.
        let f = ShuffleFamily::SideA;
        assert_eq!(f.shuffle(3, 0).unwrap(), AlgebraElement::one(Family::A, 3));
        assert_eq!(f.shuffle(3, 1).unwrap(), f.sigma(3, 1).unwrap());
        // riffleB: S_2 = σ_1 = σ_t; S_1 = 1.
        let f = ShuffleFamily::RiffleB;
        assert_eq!(f.shuffle(3, 2).unwrap(), f.sigma(3, 1).unwrap());
        assert_eq!(f.shuffle(3, 1).unwrap(), AlgebraElement::one(Family::B, 3));
        // Multiplicative families reject a = 0.
        assert!(f.shuffle(3, 0).is_err());
    }

    #[test]
    fn coefficient_sums_are_normalization_factors() {
        for n in 2..=4u8 {
            let s1 = ShuffleFamily::SideA.sigma(n, 1).unwrap();
            assert_eq!(s1.coefficient_sum(), rat(n as i64));
            let sn = ShuffleFamily::SideA.sigma(n, n as usize).unwrap();
            assert_eq!(sn.coefficient_sum(), BigRational::from(factorial(n as u64)));
            let s1b = ShuffleFamily::SideB.sigma(n, 1).unwrap();
            assert_eq!(s1b.coefficient_sum(), rat(2 * n as i64));
        }
    }

    #[test]
    fn shuffle_coefficient_sums_count_procedures() {
        // The normalization factor of S_a is the number of ways of performing
        // the procedural description.
        for n in 2..=3u8 {
            for a in 0..=3u64 {
                assert_eq!(
                    ShuffleFamily::SideA.shuffle(n, a).unwrap().coefficient_sum(),
                    BigRational::from(BigInt::from(n).pow(a as u32))
                );
                assert_eq!(
                    ShuffleFamily::SideB.shuffle(n, a).unwrap().coefficient_sum(),
                    BigRational::from(BigInt::from(2 * n).pow(a as u32))
                );
                assert_eq!(
                    ShuffleFamily::SideD
                        .shuffle(n.max(3), a)
                        .unwrap()
                        .coefficient_sum(),
                    BigRational::from(BigInt::from(2 * n.max(3)).pow(a as u32))
                );
            }
            for a in 1..=4u64 {
                for fam in [
                    ShuffleFamily::RiffleA,
                    ShuffleFamily::RiffleB,
                    ShuffleFamily::RiffleD,
                ] {
                    let n_eff = n.max(fam.min_n());
                    assert_eq!(
                        fam.shuffle(n_eff, a).unwrap().coefficient_sum(),
                        BigRational::from(BigInt::from(a).pow(n_eff as u32)),
                        "{fam} n={n_eff} a={a}"
                    );
                }
            }
        }
    }

    #[test]
    fn idempotent_degeneracies() {
        // sideA: e_{n-1} = 0 because σ_{n-1} = σ_n.
        let f = ShuffleFamily::SideA;
        assert!(f.side_idempotent(3, 2, false).unwrap().is_zero());
        assert!(f.side_idempotent(4, 3, false).unwrap().is_zero());
        // twoSidedA / sideD: forced by σ_n = 2σ_{n-1}.
        assert!(ShuffleFamily::TwoSidedA
            .side_idempotent(3, 2, true)
            .unwrap()
            .is_zero());
        assert!(ShuffleFamily::SideD
            .side_idempotent(3, 2, true)
            .unwrap()
            .is_zero());
        // sideB has no degeneracy.
        assert!(!ShuffleFamily::SideB
            .side_idempotent(3, 2, true)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn idempotent_systems_sum_to_one() {
        for family in ALL_FAMILIES {
            let n = family.min_n().max(3);
            let system = family.idempotents(n).unwrap();
            let mut sum = AlgebraElement::zero(family.complex_family(), n);
            for e in &system {
                sum = sum.add(e).unwrap();
            }
            assert_eq!(
                sum,
                AlgebraElement::one(family.complex_family(), n),
                "{family} n={n}"
            );
        }
    }

    #[test]
    fn riffle_b_boundary_idempotent() {
        // e'_n = e_n = σ_n / (2^n n!).
        let f = ShuffleFamily::RiffleB;
        for n in 2..=3u8 {
            let e_n = f.double_idempotent(n, n as usize, false).unwrap();
            let e_n_prime = f.double_idempotent(n, n as usize, true).unwrap();
            assert_eq!(e_n, e_n_prime);
            let denom = BigRational::new(
                BigInt::one(),
                factorial(n as u64) * BigInt::from(2).pow(n as u32),
            );
            assert_eq!(e_n, f.sigma(n, n as usize).unwrap().scale(&denom));
        }
    }

    #[test]
    fn character_tables() {
        // sideA: S_a -> (0^a, 1^a, ..., (n-2)^a, n^a).
        let chars = ShuffleFamily::SideA.characters(4, 2).unwrap();
        assert_eq!(chars, vec![rat(0), rat(1), rat(4), rat(16)]);
        // riffleA: S_a -> (a^1, ..., a^n).
        let chars = ShuffleFamily::RiffleA.characters(3, 2).unwrap();
        assert_eq!(chars, vec![rat(2), rat(4), rat(8)]);
        // sideB: S_a -> (0^a, 2^a, ..., (2n)^a).
        let chars = ShuffleFamily::SideB.characters(2, 1).unwrap();
        assert_eq!(chars, vec![rat(0), rat(2), rat(4)]);
        // riffleB even: the primed characters vanish.
        let chars = ShuffleFamily::RiffleB.characters(2, 2).unwrap();
        assert_eq!(chars, vec![rat(2), rat(4), rat(0), rat(0)]);
        // riffleB odd: χ'_i(S_{2a+1}) = (2a+1)^i.
        let chars = ShuffleFamily::RiffleB.characters(2, 3).unwrap();
        assert_eq!(chars, vec![rat(3), rat(9), rat(1), rat(3)]);
    }

    #[test]
    fn character_decomposition_small() {
        // S_a = Σ_i χ_i(S_a) e_i, exactly.
        for family in ALL_FAMILIES {
            let n = family.min_n().max(3);
            let idempotents = family.idempotents(n).unwrap();
            for a in family.arity_start()..=3 {
                let chars = family.characters(n, a).unwrap();
                let mut sum = AlgebraElement::zero(family.complex_family(), n);
                for (chi, e) in chars.iter().zip(&idempotents) {
                    sum = sum.add(&e.scale(chi)).unwrap();
                }
                assert_eq!(sum, family.shuffle(n, a).unwrap(), "{family} a={a}");
            }
        }
    }

    #[test]
    fn sigma_table_products_match_direct() {
        let mut table = SigmaTable::new(ShuffleFamily::SideA, 3).unwrap();
        let f = ShuffleFamily::SideA;
        let c2 = f.shuffle_combo(3, 2).unwrap();
        let c3 = f.shuffle_combo(3, 3).unwrap();
        let via_table = table.product_of(&c2, &c3).unwrap();
        let direct = f
            .shuffle(3, 2)
            .unwrap()
            .multiply(&f.shuffle(3, 3).unwrap())
            .unwrap();
        assert_eq!(via_table, direct);
    }

    #[test]
    fn axioms_side_a_pass() {
        let report = check_shuffle_algebra_axioms(ShuffleFamily::SideA, 4).unwrap();
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn axioms_riffle_double_fails_by_two() {
        let report = check_shuffle_algebra_axioms(ShuffleFamily::RiffleB, 3).unwrap();
        let failed: Vec<&str> = report
            .outcomes
            .iter()
            .filter(|o| !o.passed)
            .map(|o| o.axiom.as_str())
            .collect();
        assert_eq!(
            failed,
            vec![
                "dim A <= dim Σ + 2",
                "basis graded by rank, one σ_j per rank",
                "A = k[σ_1]"
            ],
            "{report:?}"
        );
    }

    #[test]
    fn axioms_riffle_d_rank_exception() {
        let report = check_shuffle_algebra_axioms(ShuffleFamily::RiffleD, 3).unwrap();
        let graded = report
            .outcomes
            .iter()
            .find(|o| o.axiom.starts_with("basis graded"))
            .unwrap();
        assert!(!graded.passed);
        assert!(graded.note.contains("spans ranks"), "{}", graded.note);
    }

    #[test]
    fn json_round_trip() {
        let el = ShuffleFamily::RiffleB.idempotents(2).unwrap().remove(0);
        let value = el.to_json();
        let back = AlgebraElement::from_json(&value).unwrap();
        assert_eq!(el, back);
    }
}
