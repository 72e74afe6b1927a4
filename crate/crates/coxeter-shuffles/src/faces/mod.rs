//! Canonical faces of the reflection arrangements of types A, B and D.
//!
//! Faces are stored as canonical ordered partitions:
//!
//! - type A: an ordered partition `(B_1|...|B_k)` of {1..n};
//! - type B: the half representation `(B_1|...|B_k|Z:{...})` of an
//!   anti-symmetric ordered partition of {±1..±n} with self-negated zero
//!   block Z (only the positive part of Z is stored);
//! - type D: like B with a central block of even size, stored eagerly merged:
//!   a trailing singleton signed block next to an empty central block is
//!   always folded into a two-element central block {m, -m}.
//!
//! The semigroup product is refinement of the first partition by the second,
//! computed on the full anti-symmetric sequence. Barred letters are encoded
//! as negative integers.
//!
//! The total order used for deterministic output is lexicographic on the
//! canonical text form; this is a convention of this artifact, not forced by
//! the mathematics.

mod enumerate;
mod sign_vector;

pub use enumerate::{enumerate_chambers, enumerate_faces, ordered_set_partitions};
pub use sign_vector::{Hyperplane, SignVector};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The three reflection-arrangement families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::D => write!(f, "D"),
        }
    }
}

/// Vertex labels: `s_i` for the chain nodes, `t` for the B-end node,
/// `u`/`v` for the D-fork nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Label {
    S(u8),
    T,
    U,
    V,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::S(i) => write!(f, "s{i}"),
            Label::T => write!(f, "t"),
            Label::U => write!(f, "u"),
            Label::V => write!(f, "v"),
        }
    }
}

impl Label {
    pub fn parse(text: &str) -> Result<Label> {
        match text {
            "t" => Ok(Label::T),
            "u" => Ok(Label::U),
            "v" => Ok(Label::V),
            s if s.starts_with('s') => s[1..]
                .parse::<u8>()
                .map(Label::S)
                .map_err(|_| Error::Parse(format!("bad label {text:?}"))),
            _ => Err(Error::Parse(format!("bad label {text:?}"))),
        }
    }
}

/// The type of a face: a subset of the label set of its family.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceType {
    pub family: Family,
    pub n: u8,
    pub labels: BTreeSet<Label>,
}

impl FaceType {
    /// The full label set I of the family at rank n.
    pub fn full_label_set(family: Family, n: u8) -> BTreeSet<Label> {
        let mut set = BTreeSet::new();
        match family {
            Family::A => {
                for i in 1..n {
                    set.insert(Label::S(i));
                }
            }
            Family::B => {
                for i in 1..n {
                    set.insert(Label::S(i));
                }
                set.insert(Label::T);
            }
            Family::D => {
                for i in 1..n.saturating_sub(1) {
                    set.insert(Label::S(i));
                }
                set.insert(Label::U);
                set.insert(Label::V);
            }
        }
        set
    }

    pub fn new(family: Family, n: u8, labels: BTreeSet<Label>) -> Result<FaceType> {
        let full = Self::full_label_set(family, n);
        for l in &labels {
            if !full.contains(l) {
                return Err(Error::InvalidLabel {
                    family: family.to_string(),
                    n,
                    label: l.to_string(),
                });
            }
        }
        Ok(FaceType { family, n, labels })
    }

    pub fn empty(family: Family, n: u8) -> FaceType {
        FaceType {
            family,
            n,
            labels: BTreeSet::new(),
        }
    }

    pub fn full(family: Family, n: u8) -> FaceType {
        FaceType {
            family,
            n,
            labels: Self::full_label_set(family, n),
        }
    }

    /// Parse a comma-separated label list such as `"s1,s2,t"`; empty string
    /// means the empty type.
    pub fn parse(family: Family, n: u8, text: &str) -> Result<FaceType> {
        let mut labels = BTreeSet::new();
        for part in text.split(',').filter(|s| !s.trim().is_empty()) {
            labels.insert(Label::parse(part.trim())?);
        }
        Self::new(family, n, labels)
    }
}

impl fmt::Display for FaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Type A face: an ordered partition of {1..n} into nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceA {
    pub n: u8,
    pub blocks: Vec<Vec<u8>>,
}

/// Type B face in half representation: signed blocks plus the positive part
/// of the self-negated zero block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceB {
    pub n: u8,
    pub blocks: Vec<Vec<i8>>,
    pub zero: Vec<u8>,
}

/// Type D face in merged half representation: signed blocks plus the full
/// central block (letters and their negatives; even size; size two exactly
/// for the merged case).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceD {
    pub n: u8,
    pub blocks: Vec<Vec<i8>>,
    pub central: Vec<i8>,
}

fn sort_signed(block: &mut [i8]) {
    // Ascending absolute value, positive before negative at equal magnitude.
    block.sort_by_key(|&x| (x.unsigned_abs(), x < 0));
}

fn check_letter_cover(n: u8, letters: impl Iterator<Item = u8>) -> Result<()> {
    let mut seen = vec![false; n as usize + 1];
    let mut count = 0usize;
    for l in letters {
        if l == 0 || l > n {
            return Err(Error::Parse(format!("letter {l} out of range 1..={n}")));
        }
        if seen[l as usize] {
            return Err(Error::Parse(format!("letter {l} appears twice")));
        }
        seen[l as usize] = true;
        count += 1;
    }
    if count != n as usize {
        return Err(Error::Parse(format!(
            "blocks cover {count} letters, expected {n}"
        )));
    }
    Ok(())
}

impl FaceA {
    pub fn new(n: u8, mut blocks: Vec<Vec<u8>>) -> Result<FaceA> {
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::Parse("empty block".into()));
        }
        check_letter_cover(n, blocks.iter().flatten().copied())?;
        for b in &mut blocks {
            b.sort_unstable();
        }
        Ok(FaceA { n, blocks })
    }

    pub fn identity(n: u8) -> FaceA {
        FaceA {
            n,
            blocks: vec![(1..=n).collect()],
        }
    }

    pub fn rank(&self) -> usize {
        self.blocks.len() - 1
    }

    pub fn is_chamber(&self) -> bool {
        self.blocks.len() == self.n as usize
    }

    pub fn face_type(&self) -> FaceType {
        let mut labels = BTreeSet::new();
        let mut d = 0u8;
        for b in &self.blocks[..self.blocks.len() - 1] {
            d += b.len() as u8;
            labels.insert(Label::S(d));
        }
        FaceType {
            family: Family::A,
            n: self.n,
            labels,
        }
    }

    pub fn product(&self, other: &FaceA) -> Result<FaceA> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut blocks = Vec::with_capacity(self.blocks.len() + other.blocks.len());
        for b in &self.blocks {
            if b.len() == 1 {
                blocks.push(b.clone());
                continue;
            }
            for c in &other.blocks {
                let inter: Vec<u8> = b.iter().copied().filter(|x| c.contains(x)).collect();
                if !inter.is_empty() {
                    blocks.push(inter);
                }
            }
        }
        Ok(FaceA { n: self.n, blocks })
    }
}

impl FaceB {
    pub fn new(n: u8, mut blocks: Vec<Vec<i8>>, mut zero: Vec<u8>) -> Result<FaceB> {
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::Parse("empty signed block".into()));
        }
        check_letter_cover(
            n,
            blocks
                .iter()
                .flatten()
                .map(|x| x.unsigned_abs())
                .chain(zero.iter().copied()),
        )?;
        for b in &mut blocks {
            sort_signed(b);
        }
        zero.sort_unstable();
        Ok(FaceB { n, blocks, zero })
    }

    pub fn identity(n: u8) -> FaceB {
        FaceB {
            n,
            blocks: vec![],
            zero: (1..=n).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_chamber(&self) -> bool {
        self.zero.is_empty() && self.blocks.len() == self.n as usize
    }

    /// The full anti-symmetric sequence, middle block included even if empty.
    /// Returns (blocks, middle) with the mirror implicit.
    pub fn full_sequence(&self) -> Vec<Vec<i8>> {
        full_from_half(&self.blocks, &self.zero_full())
    }

    fn zero_full(&self) -> Vec<i8> {
        let mut mid: Vec<i8> = self
            .zero
            .iter()
            .flat_map(|&z| [z as i8, -(z as i8)])
            .collect();
        sort_signed(&mut mid);
        mid
    }

    pub fn face_type(&self) -> FaceType {
        let mut labels = BTreeSet::new();
        let k = self.blocks.len();
        let mut d = 0u8;
        for (t, b) in self.blocks.iter().enumerate() {
            d += b.len() as u8;
            if t + 1 < k || !self.zero.is_empty() {
                labels.insert(Label::S(d));
            } else {
                labels.insert(Label::T);
            }
        }
        FaceType {
            family: Family::B,
            n: self.n,
            labels,
        }
    }

    pub fn product(&self, other: &FaceB) -> Result<FaceB> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let full = refine_full(&self.full_sequence(), &other.full_sequence());
        let (blocks, middle) = split_half(self.n, full);
        let zero: Vec<u8> = middle.iter().filter(|&&x| x > 0).map(|&x| x as u8).collect();
        Ok(FaceB {
            n: self.n,
            blocks,
            zero,
        })
    }
}

impl FaceD {
    pub fn new(n: u8, mut blocks: Vec<Vec<i8>>, mut central: Vec<i8>) -> Result<FaceD> {
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::Parse("empty signed block".into()));
        }
        // The central block must be closed under negation.
        let mut pos: Vec<u8> = central.iter().filter(|&&x| x > 0).map(|&x| x as u8).collect();
        pos.sort_unstable();
        let mut neg: Vec<u8> = central
            .iter()
            .filter(|&&x| x < 0)
            .map(|&x| x.unsigned_abs())
            .collect();
        neg.sort_unstable();
        if pos != neg {
            return Err(Error::Parse("central block is not self-negated".into()));
        }
        check_letter_cover(
            n,
            blocks
                .iter()
                .flatten()
                .map(|x| x.unsigned_abs())
                .chain(pos.iter().copied()),
        )?;
        for b in &mut blocks {
            sort_signed(b);
        }
        sort_signed(&mut central);
        let mut face = FaceD { n, blocks, central };
        face.canonicalize();
        Ok(face)
    }

    /// Apply the merge rule: a trailing singleton signed block next to an
    /// empty central block folds into a two-element central block.
    fn canonicalize(&mut self) {
        if self.central.is_empty() {
            if let Some(last) = self.blocks.last() {
                if last.len() == 1 {
                    let m = last[0];
                    self.blocks.pop();
                    self.central = vec![m, -m];
                    sort_signed(&mut self.central);
                }
            }
        }
    }

    pub fn identity(n: u8) -> FaceD {
        let mut central: Vec<i8> = (1..=n as i8).flat_map(|i| [i, -i]).collect();
        sort_signed(&mut central);
        FaceD {
            n,
            blocks: vec![],
            central,
        }
    }

    pub fn rank(&self) -> usize {
        self.blocks.len() + usize::from(self.central.len() == 2)
    }

    pub fn is_chamber(&self) -> bool {
        self.central.len() == 2 && self.blocks.len() + 1 == self.n as usize
    }

    pub fn full_sequence(&self) -> Vec<Vec<i8>> {
        full_from_half(&self.blocks, &self.central)
    }

    /// Sign product over a set of letters: +1 if the number of barred letters
    /// is even. Distinguishes the u and v vertex classes (all-plus is u).
    fn sign_parity(letters: impl Iterator<Item = i8>) -> bool {
        letters.filter(|&x| x < 0).count() % 2 == 0
    }

    pub fn face_type(&self) -> FaceType {
        let mut labels = BTreeSet::new();
        let r = self.blocks.len();
        let mut d = 0u8;
        match self.central.len() {
            0 => {
                for (t, b) in self.blocks.iter().enumerate() {
                    d += b.len() as u8;
                    if t + 1 < r {
                        labels.insert(Label::S(d));
                    }
                }
                let even = Self::sign_parity(self.blocks.iter().flatten().copied());
                labels.insert(if even { Label::U } else { Label::V });
            }
            2 => {
                // The last stored block ends at n-1 which is the u,v pair,
                // not an s-label.
                for (t, b) in self.blocks.iter().enumerate() {
                    d += b.len() as u8;
                    if t + 1 < r {
                        labels.insert(Label::S(d));
                    }
                }
                labels.insert(Label::U);
                labels.insert(Label::V);
            }
            _ => {
                for b in &self.blocks {
                    d += b.len() as u8;
                    labels.insert(Label::S(d));
                }
            }
        }
        FaceType {
            family: Family::D,
            n: self.n,
            labels,
        }
    }

    pub fn product(&self, other: &FaceD) -> Result<FaceD> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let full = refine_full(&self.full_sequence(), &other.full_sequence());
        let (blocks, central) = split_half(self.n, full);
        let mut face = FaceD {
            n: self.n,
            blocks,
            central,
        };
        face.canonicalize();
        Ok(face)
    }
}

/// Assemble the full anti-symmetric sequence from the half representation.
/// The middle block is included even when empty so positions stay symmetric.
fn full_from_half(blocks: &[Vec<i8>], middle: &[i8]) -> Vec<Vec<i8>> {
    let mut full: Vec<Vec<i8>> = Vec::with_capacity(2 * blocks.len() + 1);
    full.extend(blocks.iter().cloned());
    full.push(middle.to_vec());
    for b in blocks.iter().rev() {
        let mut neg: Vec<i8> = b.iter().map(|&x| -x).collect();
        sort_signed(&mut neg);
        full.push(neg);
    }
    full
}

/// Refine the full sequence of x by the full sequence of y: intersect each
/// x-block with the y-blocks in y's order, dropping empty intersections.
/// Empty middle blocks contribute nothing and vanish.
fn refine_full(x: &[Vec<i8>], y: &[Vec<i8>]) -> Vec<Vec<i8>> {
    let mut out: Vec<Vec<i8>> = Vec::with_capacity(x.len() + y.len());
    for b in x {
        if b.is_empty() {
            continue;
        }
        if b.len() == 1 {
            out.push(b.clone());
            continue;
        }
        for c in y {
            let inter: Vec<i8> = b.iter().copied().filter(|v| c.contains(v)).collect();
            if !inter.is_empty() {
                out.push(inter);
            }
        }
    }
    out
}

/// Split a full anti-symmetric sequence (no empty blocks) back into the half
/// representation: (signed blocks, middle block possibly empty).
fn split_half(n: u8, full: Vec<Vec<i8>>) -> (Vec<Vec<i8>>, Vec<i8>) {
    let mut count = 0usize;
    for (idx, b) in full.iter().enumerate() {
        let self_negated = b.iter().any(|&x| b.contains(&-x));
        if self_negated {
            return (full[..idx].to_vec(), full[idx].clone());
        }
        count += b.len();
        if count == n as usize {
            return (full[..=idx].to_vec(), vec![]);
        }
    }
    unreachable!("anti-symmetric sequence without a middle");
}

/// A face of one of the three arrangements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Face {
    A(FaceA),
    B(FaceB),
    D(FaceD),
}

impl Face {
    pub fn family(&self) -> Family {
        match self {
            Face::A(_) => Family::A,
            Face::B(_) => Family::B,
            Face::D(_) => Family::D,
        }
    }

    pub fn n(&self) -> u8 {
        match self {
            Face::A(f) => f.n,
            Face::B(f) => f.n,
            Face::D(f) => f.n,
        }
    }

    pub fn identity(family: Family, n: u8) -> Face {
        match family {
            Family::A => Face::A(FaceA::identity(n)),
            Family::B => Face::B(FaceB::identity(n)),
            Family::D => Face::D(FaceD::identity(n)),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Face::A(f) => f.rank(),
            Face::B(f) => f.rank(),
            Face::D(f) => f.rank(),
        }
    }

    pub fn is_chamber(&self) -> bool {
        match self {
            Face::A(f) => f.is_chamber(),
            Face::B(f) => f.is_chamber(),
            Face::D(f) => f.is_chamber(),
        }
    }

    pub fn face_type(&self) -> FaceType {
        match self {
            Face::A(f) => f.face_type(),
            Face::B(f) => f.face_type(),
            Face::D(f) => f.face_type(),
        }
    }

    pub fn product(&self, other: &Face) -> Result<Face> {
        match (self, other) {
            (Face::A(x), Face::A(y)) => Ok(Face::A(x.product(y)?)),
            (Face::B(x), Face::B(y)) => Ok(Face::B(x.product(y)?)),
            (Face::D(x), Face::D(y)) => Ok(Face::D(x.product(y)?)),
            _ => Err(Error::FamilyMismatch(
                self.family().to_string(),
                other.family().to_string(),
            )),
        }
    }

    /// x ≤ y in the face order, i.e. xy == y.
    pub fn is_face_of(&self, other: &Face) -> Result<bool> {
        Ok(&self.product(other)? == other)
    }

    pub fn sign_vector(&self) -> SignVector {
        SignVector::from_face(self)
    }

    /// Parse the canonical text form, e.g. `({2}|{1,3,4})`,
    /// `({2}|{-3}|Z:{1})`, `({2,-3}|C:{1,-1})`.
    pub fn parse(family: Family, n: u8, text: &str) -> Result<Face> {
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected parentheses: {text:?}")))?;
        let mut plain_blocks: Vec<Vec<i8>> = Vec::new();
        let mut middle: Option<(char, Vec<i8>)> = None;
        for part in inner.split('|') {
            let part = part.trim();
            let (tag, body) = if let Some(rest) = part.strip_prefix("Z:") {
                ('Z', rest)
            } else if let Some(rest) = part.strip_prefix("C:") {
                ('C', rest)
            } else {
                (' ', part)
            };
            let body = body
                .trim()
                .strip_prefix('{')
                .and_then(|s| s.strip_suffix('}'))
                .ok_or_else(|| Error::Parse(format!("expected braces in {part:?}")))?;
            let mut letters = Vec::new();
            for tok in body.split(',').filter(|s| !s.trim().is_empty()) {
                let v: i8 = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?;
                letters.push(v);
            }
            if tag == ' ' {
                if middle.is_some() {
                    return Err(Error::Parse("block after the Z/C block".into()));
                }
                plain_blocks.push(letters);
            } else {
                if middle.is_some() {
                    return Err(Error::Parse("duplicate Z/C block".into()));
                }
                middle = Some((tag, letters));
            }
        }
        match (family, middle) {
            (Family::A, None) => {
                let blocks: Vec<Vec<u8>> = plain_blocks
                    .iter()
                    .map(|b| {
                        b.iter()
                            .map(|&x| {
                                if x > 0 {
                                    Ok(x as u8)
                                } else {
                                    Err(Error::Parse("negative letter in a type A face".into()))
                                }
                            })
                            .collect::<Result<Vec<u8>>>()
                    })
                    .collect::<Result<_>>()?;
                Ok(Face::A(FaceA::new(n, blocks)?))
            }
            (Family::B, Some(('Z', z))) => {
                let zero: Vec<u8> = z
                    .iter()
                    .map(|&x| {
                        if x > 0 {
                            Ok(x as u8)
                        } else {
                            Err(Error::Parse("zero block stores positive letters".into()))
                        }
                    })
                    .collect::<Result<_>>()?;
                Ok(Face::B(FaceB::new(n, plain_blocks, zero)?))
            }
            (Family::D, Some(('C', c))) => Ok(Face::D(FaceD::new(n, plain_blocks, c)?)),
            (Family::A, Some(_)) => Err(Error::Parse("type A face has no Z/C block".into())),
            (Family::B, _) => Err(Error::Parse("type B face needs a Z:{...} block".into())),
            (Family::D, _) => Err(Error::Parse("type D face needs a C:{...} block".into())),
        }
    }
}

fn write_signed_block(f: &mut fmt::Formatter<'_>, block: &[i8]) -> fmt::Result {
    write!(f, "{{")?;
    for (i, x) in block.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "}}")
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        match self {
            Face::A(face) => {
                for (i, b) in face.blocks.iter().enumerate() {
                    if i > 0 {
                        write!(f, "|")?;
                    }
                    write!(f, "{{")?;
                    for (k, x) in b.iter().enumerate() {
                        if k > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{x}")?;
                    }
                    write!(f, "}}")?;
                }
            }
            Face::B(face) => {
                for b in &face.blocks {
                    write_signed_block(f, b)?;
                    write!(f, "|")?;
                }
                write!(f, "Z:{{")?;
                for (k, z) in face.zero.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{z}")?;
                }
                write!(f, "}}")?;
            }
            Face::D(face) => {
                for b in &face.blocks {
                    write_signed_block(f, b)?;
                    write!(f, "|")?;
                }
                write!(f, "C:")?;
                write_signed_block(f, &face.central)?;
            }
        }
        write!(f, ")")
    }
}
