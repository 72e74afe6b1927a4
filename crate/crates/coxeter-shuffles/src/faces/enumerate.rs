//! Face enumeration for the three arrangements.
//!
//! B and D faces are generated from ordered set partitions of subsets plus
//! sign assignments, not by filtering sign vectors, so the cost is the number
//! of faces rather than 3^(number of hyperplanes).

use super::{Face, FaceA, FaceB, FaceD, FaceType, Family};

/// All ordered set partitions of the given letters into nonempty blocks.
/// The empty letter list yields the single empty partition.
pub fn ordered_set_partitions(letters: &[u8]) -> Vec<Vec<Vec<u8>>> {
    let mut out: Vec<Vec<Vec<u8>>> = vec![vec![]];
    for &x in letters {
        let mut next = Vec::new();
        for p in &out {
            for i in 0..p.len() {
                let mut p2 = p.clone();
                p2[i].push(x);
                next.push(p2);
            }
            for i in 0..=p.len() {
                let mut p2 = p.clone();
                p2.insert(i, vec![x]);
                next.push(p2);
            }
        }
        out = next;
    }
    out
}

fn complement(n: u8, subset: &[u8]) -> Vec<u8> {
    (1..=n).filter(|x| !subset.contains(x)).collect()
}

fn subsets(n: u8) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u32..(1 << n) {
        out.push((1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect());
    }
    out
}

/// Apply every sign pattern to the blocks of an ordered set partition.
fn signed_variants(blocks: &[Vec<u8>]) -> Vec<Vec<Vec<i8>>> {
    let letters: Vec<(usize, usize)> = blocks
        .iter()
        .enumerate()
        .flat_map(|(bi, b)| (0..b.len()).map(move |li| (bi, li)))
        .collect();
    let m = letters.len();
    let mut out = Vec::with_capacity(1 << m);
    for mask in 0u32..(1 << m) {
        let mut signed: Vec<Vec<i8>> = blocks
            .iter()
            .map(|b| b.iter().map(|&x| x as i8).collect())
            .collect();
        for (bit, &(bi, li)) in letters.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                signed[bi][li] = -signed[bi][li];
            }
        }
        out.push(signed);
    }
    out
}

fn enumerate_a(n: u8) -> Vec<Face> {
    let letters: Vec<u8> = (1..=n).collect();
    ordered_set_partitions(&letters)
        .into_iter()
        .map(|blocks| Face::A(FaceA::new(n, blocks).expect("valid A face")))
        .collect()
}

fn enumerate_b(n: u8) -> Vec<Face> {
    let mut out = Vec::new();
    for zero in subsets(n) {
        let rest = complement(n, &zero);
        for osp in ordered_set_partitions(&rest) {
            for blocks in signed_variants(&osp) {
                out.push(Face::B(
                    FaceB::new(n, blocks, zero.clone()).expect("valid B face"),
                ));
            }
        }
    }
    out
}

fn enumerate_d(n: u8) -> Vec<Face> {
    let mut out = Vec::new();
    for central_pos in subsets(n) {
        if central_pos.len() == 1 {
            // Merged representation: two-element central block {m, -m}.
            let m = central_pos[0] as i8;
            let rest = complement(n, &central_pos);
            for osp in ordered_set_partitions(&rest) {
                for blocks in signed_variants(&osp) {
                    out.push(Face::D(
                        FaceD::new(n, blocks, vec![m, -m]).expect("valid D face"),
                    ));
                }
            }
        } else {
            let central: Vec<i8> = central_pos
                .iter()
                .flat_map(|&z| [z as i8, -(z as i8)])
                .collect();
            let rest = complement(n, &central_pos);
            for osp in ordered_set_partitions(&rest) {
                if central_pos.is_empty() {
                    match osp.last() {
                        Some(last) if last.len() >= 2 => {}
                        // A trailing singleton merges; that face is produced
                        // by the |central| = 2 branch. No blocks at all needs
                        // a nonempty central block.
                        _ => continue,
                    }
                }
                for blocks in signed_variants(&osp) {
                    out.push(Face::D(
                        FaceD::new(n, blocks, central.clone()).expect("valid D face"),
                    ));
                }
            }
        }
    }
    out
}

/// Every canonical face of the family, optionally restricted to one type,
/// sorted lexicographically by canonical text.
pub fn enumerate_faces(family: Family, n: u8, type_filter: Option<&FaceType>) -> Vec<Face> {
    let mut faces = match family {
        Family::A => enumerate_a(n),
        Family::B => enumerate_b(n),
        Family::D => enumerate_d(n),
    };
    if let Some(t) = type_filter {
        faces.retain(|f| &f.face_type() == t);
    }
    faces.sort_by_cached_key(|f| f.to_string());
    faces
}

/// The chambers of the family in canonical text order.
pub fn enumerate_chambers(family: Family, n: u8) -> Vec<Face> {
    let mut faces = match family {
        Family::A => enumerate_a(n),
        Family::B => enumerate_b(n),
        Family::D => enumerate_d(n),
    };
    faces.retain(|f| f.is_chamber());
    faces.sort_by_cached_key(|f| f.to_string());
    faces
}
