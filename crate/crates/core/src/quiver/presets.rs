//! The two star quivers used to realize `θ(3)` semi-invariants as LR and
//! parabolic Kostka coefficients, each with its exceptional pair.
//!
//! Vertex labels: `c` is the center; arms are numbered from the center
//! outward.

use super::{ExceptionalPair, Quiver};

/// `T_{4,3,4}` with two arms pointing away from the center (`t*`, `b*`)
/// and the short arm `m2 → m1 → c` feeding in.
///
/// `ε1` is `3,2,1` on both long arms, `3,0` on the short arm and `4` at
/// the center; `ε2` is the simple root at `m2`. `⟨ε2,ε1⟩ = −3`.
pub fn t434_quiver() -> (Quiver, ExceptionalPair) {
    let q = Quiver::from_labelled(&[
        ("c", "t1"),
        ("t1", "t2"),
        ("t2", "t3"),
        ("m1", "c"),
        ("m2", "m1"),
        ("c", "b1"),
        ("b1", "b2"),
        ("b2", "b3"),
    ])
    .expect("star quiver is acyclic");
    let e1 = q
        .dimension_vector_by_label(&[
            ("c", 4),
            ("t1", 3),
            ("t2", 2),
            ("t3", 1),
            ("m1", 3),
            ("m2", 0),
            ("b1", 3),
            ("b2", 2),
            ("b3", 1),
        ])
        .expect("valid vector");
    let e2 = q
        .dimension_vector_by_label(&[("m2", 1)])
        .expect("valid vector");
    let pair = ExceptionalPair::new(&q, e1, e2).expect("Euler-form conditions hold");
    (q, pair)
}

/// The path `p2 → p1 → c` into a center with four outgoing leaves `l1..l4`.
///
/// `ε1` is `0,3,4` along the path and `1` on each leaf; `ε2` is the simple
/// root at `p2`. `⟨ε2,ε1⟩ = −3`.
pub fn k4_star_quiver() -> (Quiver, ExceptionalPair) {
    let q = Quiver::from_labelled(&[
        ("p2", "p1"),
        ("p1", "c"),
        ("c", "l1"),
        ("c", "l2"),
        ("c", "l3"),
        ("c", "l4"),
    ])
    .expect("star quiver is acyclic");
    let e1 = q
        .dimension_vector_by_label(&[
            ("p2", 0),
            ("p1", 3),
            ("c", 4),
            ("l1", 1),
            ("l2", 1),
            ("l3", 1),
            ("l4", 1),
        ])
        .expect("valid vector");
    let e2 = q
        .dimension_vector_by_label(&[("p2", 1)])
        .expect("valid vector");
    let pair = ExceptionalPair::new(&q, e1, e2).expect("Euler-form conditions hold");
    (q, pair)
}
