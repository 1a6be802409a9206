//! Partner pairs for the 4-term triple aggregate on a 3x3 window.
//!
//! Positions are numbered 1..=9 row-major in the published tables and
//! 0..=8 everywhere else in this crate. Only the corner (1), edge (2), and
//! center (5) measures are given explicitly; every other corner and edge
//! takes the partner pairs of position 1 or 2 mapped through the grid
//! rotation that carries 1 (or 2) onto it. The partner sets of 1 and 2 are
//! invariant under their own stabilisers, so the result does not depend on
//! which symmetry is chosen.

/// Partner pairs for positions 1, 2, and 5, numbered 1..=9.
pub const PRINTED_D1: [(usize, usize); 4] = [(2, 4), (3, 7), (6, 8), (5, 9)];
pub const PRINTED_D2: [(usize, usize); 4] = [(1, 3), (4, 6), (7, 9), (5, 8)];
pub const PRINTED_D5: [(usize, usize); 4] = [(1, 9), (2, 4), (3, 7), (6, 8)];

/// Number of symmetries of the square grid.
pub const DIHEDRAL_ORDER: usize = 8;

/// Zero-based partner pairs for each of the nine positions.
pub type PartnerTable = [[(usize, usize); 4]; 9];

fn to_rc(pos: usize) -> (usize, usize) {
    (pos / 3, pos % 3)
}

fn from_rc(r: usize, c: usize) -> usize {
    r * 3 + c
}

fn rotate(pos: usize) -> usize {
    // quarter turn clockwise
    let (r, c) = to_rc(pos);
    from_rc(c, 2 - r)
}

/// Applies symmetry `sym` (0..8) to a zero-based 3x3 position.
///
/// Symmetries 0..4 are rotations by `sym` quarter turns; 4..8 transpose
/// first, then rotate by `sym - 4` quarter turns.
pub fn apply_symmetry(sym: usize, pos: usize) -> usize {
    assert!(sym < DIHEDRAL_ORDER && pos < 9);
    let start = if sym >= 4 {
        let (r, c) = to_rc(pos);
        from_rc(c, r)
    } else {
        pos
    };
    (0..sym % 4).fold(start, |p, _| rotate(p))
}

fn zero_based(pairs: [(usize, usize); 4]) -> [(usize, usize); 4] {
    pairs.map(|(a, b)| (a - 1, b - 1))
}

fn mapped(pairs: [(usize, usize); 4], sym: usize) -> [(usize, usize); 4] {
    pairs.map(|(a, b)| (apply_symmetry(sym, a), apply_symmetry(sym, b)))
}

pub fn partner_table() -> PartnerTable {
    let corner = zero_based(PRINTED_D1);
    let edge = zero_based(PRINTED_D2);
    let mut table = [[(0, 0); 4]; 9];
    table[4] = zero_based(PRINTED_D5);
    for quarter in 0..4 {
        table[apply_symmetry(quarter, 0)] = mapped(corner, quarter);
        table[apply_symmetry(quarter, 1)] = mapped(edge, quarter);
    }
    table
}
