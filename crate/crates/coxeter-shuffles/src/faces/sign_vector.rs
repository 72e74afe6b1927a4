//! Sign-sequence oracle for the partition products.
//!
//! Each face determines a sign in {+, 0, -} for every hyperplane of its
//! reflection arrangement, and the semigroup product has the closed form
//! ε_i(FG) = ε_i(F) if nonzero, else ε_i(G). This module exists to
//! cross-check the partition implementations; nothing else uses it.

use super::{Face, Family};
use crate::{Error, Result};

/// One hyperplane of the B_n arrangement (A and D use sublists).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hyperplane {
    /// x_i = x_j, i < j.
    Diff(u8, u8),
    /// x_i = -x_j, i < j.
    Sum(u8, u8),
    /// x_i = 0.
    Coord(u8),
}

/// Fixed hyperplane ordering: all x_i = x_j in lexicographic (i, j) order,
/// then all x_i = -x_j, then all x_i = 0. The D arrangement drops the third
/// group and A keeps only the first, so the forgetful maps are index
/// projections.
pub fn hyperplanes(family: Family, n: u8) -> Vec<Hyperplane> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push(Hyperplane::Diff(i, j));
        }
    }
    if family != Family::A {
        for i in 1..=n {
            for j in (i + 1)..=n {
                out.push(Hyperplane::Sum(i, j));
            }
        }
    }
    if family == Family::B {
        for i in 1..=n {
            out.push(Hyperplane::Coord(i));
        }
    }
    out
}

/// A realizable sign sequence over the family's arrangement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    pub family: Family,
    pub n: u8,
    pub signs: Vec<i8>,
}

impl SignVector {
    /// The sign sequence of a canonical face, from a representative point
    /// whose coordinate values are symmetric block positions.
    pub fn from_face(face: &Face) -> SignVector {
        let n = face.n();
        let mut val = vec![0i32; n as usize + 1];
        match face {
            Face::A(f) => {
                for (idx, b) in f.blocks.iter().enumerate() {
                    for &l in b {
                        val[l as usize] = idx as i32 + 1;
                    }
                }
            }
            Face::B(f) => assign_symmetric(&f.full_sequence(), f.blocks.len(), &mut val),
            Face::D(f) => assign_symmetric(&f.full_sequence(), f.blocks.len(), &mut val),
        }
        let signs = hyperplanes(face.family(), n)
            .iter()
            .map(|h| {
                let v = match *h {
                    Hyperplane::Diff(i, j) => val[i as usize] - val[j as usize],
                    Hyperplane::Sum(i, j) => val[i as usize] + val[j as usize],
                    Hyperplane::Coord(i) => val[i as usize],
                };
                v.signum() as i8
            })
            .collect();
        SignVector {
            family: face.family(),
            n,
            signs,
        }
    }

    /// Componentwise projection product.
    pub fn product(&self, other: &SignVector) -> Result<SignVector> {
        if self.family != other.family || self.n != other.n {
            return Err(Error::FamilyMismatch(
                format!("{}({})", self.family, self.n),
                format!("{}({})", other.family, other.n),
            ));
        }
        let signs = self
            .signs
            .iter()
            .zip(&other.signs)
            .map(|(&a, &b)| if a != 0 { a } else { b })
            .collect();
        Ok(SignVector {
            family: self.family,
            n: self.n,
            signs,
        })
    }
}

/// Coordinate values from a full anti-symmetric sequence: block positions
/// symmetric around the middle block (which sits at position zero).
fn assign_symmetric(full: &[Vec<i8>], middle_index: usize, val: &mut [i32]) {
    for (idx, b) in full.iter().enumerate() {
        let pos = idx as i32 - middle_index as i32;
        for &l in b {
            if l > 0 {
                val[l as usize] = pos;
            } else {
                val[(-l) as usize] = -pos;
            }
        }
    }
}
