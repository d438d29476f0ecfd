//! Chord disjointness on a labeled circle by literal walking.

/// Can chords `a` and `b` on a circle of `n` points labeled `1..=n` be
/// drawn in the disk without crossing? Chords sharing an endpoint count
/// as compatible. Decided by walking the circle from one endpoint of `a`
/// to the other and counting endpoints of `b` passed on the way.
pub fn oracle_disjoint(n: u32, a: (u32, u32), b: (u32, u32)) -> bool {
    for p in [a.0, a.1, b.0, b.1] {
        assert!((1..=n).contains(&p), "label {p} out of range 1..={n}");
    }
    assert!(a.0 != a.1 && b.0 != b.1, "chords need distinct endpoints");
    if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
        return true;
    }
    let mut between = 0;
    let mut p = a.0 % n + 1;
    while p != a.1 {
        if p == b.0 || p == b.1 {
            between += 1;
        }
        p = p % n + 1;
    }
    between != 1
}
